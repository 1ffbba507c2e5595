//! One line per acceptance criterion. Runs without the libtest harness so the
//! lines are printed even when everything passes.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use facering::analysis::{self, bruteforce_hprime, Invariants, Mode};
use facering::classify::classify;
use facering::data;
use facering::face_ring::{generic_hprime, sample_lsop, ArtinianReduction};
use facering::formulas::{self, binom, macaulay_max_growth};
use facering::homology::{reduced_betti, SingularCohomology};
use facering::linalg::{LinearForm, PrimeField, Rationals, DEFAULT_PRIME};
use facering::pl;
use facering::report::{analyze, ReportOptions, Status};
use facering::{FieldSpec, SimplicialComplex};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn load(name: &str) -> SimplicialComplex {
    data::load(name).expect("bundled complex")
}

fn fp() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn n1_invariants() -> Outcome {
    let k = load("n1");
    let f = k.f_vector();
    ensure!(f.0 == vec![1, 8, 28, 56, 28], "f = {:?}", f.0);
    let h = k.h_vector();
    ensure!(h.0 == vec![1, 4, 10, 20, -7], "h = {:?}", h.0);
    ensure!(h.get(4) == -7 && h.get(3) - h.get(1) == 16, "h4 = {}, h3 - h1 = {}", h.get(4), h.get(3) - h.get(1));
    let b = reduced_betti(&Rationals, &k);
    ensure!(b.values[1..] == [0, 0, 8, 1], "betti over Q = {:?}", b.values);
    for v in k.vertices() {
        let lk = reduced_betti(&Rationals, &k.vertex_link(v).unwrap());
        ensure!(lk.values == vec![0, 0, 2, 1], "link of {} has betti {:?}", k.label(v), lk.values);
    }
    let inv = Invariants::compute(&k, FieldSpec::Rationals, 0);
    ensure!(inv.classification.depth == 3, "depth {}", inv.classification.depth);
    let (ds, ok) = analysis::dehn_sommerville(&inv, Mode::Enforce).map_err(|e| e.to_string())?;
    ensure!(ok && ds.rows.iter().all(|r| r.defect == 0), "defects {:?}", ds.rows);
    Ok(())
}

fn n3_invariants() -> Outcome {
    let k = load("n3");
    let h = k.h_vector();
    ensure!(h.get(4) == -2 && h.get(3) - h.get(1) == 6, "h = {:?}", h.0);
    let q = classify(&k, FieldSpec::Rationals);
    ensure!(q.pseudomanifold_singular_vertices.len() == 5, "pseudomanifold singular {:?}", q.pseudomanifold_singular_vertices);
    ensure!(q.singular_vertices.len() == 1, "singular over Q {:?}", q.singular_vertices);
    let f2 = PrimeField::new(2).unwrap();
    let (mut planes, mut tori) = (0, 0);
    for &v in &q.pseudomanifold_singular_vertices {
        let lk = k.vertex_link(v).unwrap();
        let over_q = reduced_betti(&Rationals, &lk).values;
        let over_f2 = reduced_betti(&f2, &lk).values;
        if over_q == [0, 0, 0, 0] && over_f2 == [0, 0, 1, 1] {
            planes += 1;
        } else if over_q == [0, 0, 2, 1] && over_f2 == [0, 0, 2, 1] {
            tori += 1;
        }
    }
    ensure!(planes == 4 && tori == 1, "{planes} projective planes, {tori} tori");
    let lsop = sample_lsop(&fp(), &k, 0).map_err(|e| e.to_string())?;
    let red = ArtinianReduction::new(&fp(), &k, &lsop.forms).map_err(|e| e.to_string())?;
    let omega = facering::face_ring::draw_forms(&fp(), k.n(), 1, 1, 0).pop().unwrap();
    let m = red.mult_map(&omega, 2);
    ensure!(m.surjective, "rank {} onto dimension {}", m.rank, m.target);
    Ok(())
}

fn n4_invariants() -> Outcome {
    let k = load("n4");
    let h = k.h_vector();
    ensure!(h.get(4) == 0 && h.get(3) - h.get(1) == 2, "h = {:?}", h.0);
    let inv = Invariants::compute(&k, FieldSpec::default(), 0);
    ensure!(inv.kc.kernel(2) == 1, "K_2 = {}", inv.kc.kernel(2));
    let (bound, ok) = analysis::g2_lower_bound(&inv, Mode::Enforce).map_err(|e| e.to_string())?;
    let g2 = h.g_vector().get(2);
    ensure!(ok && bound == 6 && g2 == 6, "bound {bound}, g2 {g2}");
    ensure!(
        inv.classification.homologically_isolated == Some(true),
        "homologically isolated = {:?}",
        inv.classification.homologically_isolated
    );
    Ok(())
}

fn as_i64(v: &[usize]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

fn schenzel_oracle() -> Outcome {
    for name in ["bd-tetra", "bd-4simplex", "octahedron", "torus7", "two-triangles"] {
        let k = load(name);
        let inv = Invariants::compute(&k, FieldSpec::default(), 0);
        let p = analysis::schenzel_hprime(&inv, Mode::Enforce).map_err(|e| format!("{name}: {e}"))?;
        let brute = bruteforce_hprime(&k, FieldSpec::default(), 0, 3).map_err(|e| e.to_string())?;
        ensure!(p.values == as_i64(&brute.values), "{name}: {:?} vs {:?}", p.values, brute.values);
        if inv.classification.cm {
            ensure!(brute.values.iter().zip(k.h_vector().as_slice()).all(|(&a, &b)| a as i64 == b), "{name}: h' != h");
        }
    }
    Ok(())
}

fn singular_oracle() -> Outcome {
    for name in ["n4", "pinched-torus"] {
        let k = load(name);
        for spec in [FieldSpec::Rationals, FieldSpec::default()] {
            let inv = Invariants::compute(&k, spec, 0);
            let a = analysis::his_hprime(&inv, Mode::Enforce).map_err(|e| format!("{name} {spec}: {e}"))?;
            let b = analysis::topological_hprime(&inv, Mode::Enforce).map_err(|e| format!("{name} {spec}: {e}"))?;
            let brute = bruteforce_hprime(&k, spec, 0, 3).map_err(|e| e.to_string())?;
            let brute = as_i64(&brute.values);
            ensure!(a.values == brute, "{name} {spec}: singular-vertex formula {:?} vs {:?}", a.values, brute);
            ensure!(b.values == brute, "{name} {spec}: topological formula {:?} vs {:?}", b.values, brute);
        }
    }
    Ok(())
}

fn top_degree() -> Outcome {
    for ds in data::list() {
        let k = ds.load();
        let beta = reduced_betti(&fp(), &k).get(k.d() as isize - 1);
        for seed in 0..3 {
            let hp = generic_hprime(&k, FieldSpec::default(), seed, 1).map_err(|e| e.to_string())?;
            ensure!(hp.values[k.d()] == beta, "{} seed {seed}: h'_d = {} but betti {beta}", ds.name, hp.values[k.d()]);
        }
    }
    Ok(())
}

/// Random pure 2-complex on up to `n` vertices, offset by `shift`.
fn random_surface_piece(rng: &mut ChaCha8Rng, n: u32, shift: u32) -> Vec<[u32; 3]> {
    let count = rng.gen_range(1..=6);
    (0..count)
        .map(|_| {
            let mut t = [0u32; 3];
            loop {
                for x in &mut t {
                    *x = rng.gen_range(0..n) + shift;
                }
                if t[0] != t[1] && t[1] != t[2] && t[0] != t[2] {
                    return t;
                }
            }
        })
        .collect()
}

fn two_dimensional() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut disconnected = 0;
    let total = 24;
    for trial in 0..total {
        let mut tris = random_surface_piece(&mut rng, 6, 0);
        if trial % 2 == 1 {
            tris.extend(random_surface_piece(&mut rng, 5, 10));
        }
        let text: String = tris.iter().map(|t| format!("{} {} {}\n", t[0], t[1], t[2])).collect();
        let k = SimplicialComplex::parse(&text).unwrap();
        let inv = Invariants::compute(&k, FieldSpec::default(), trial);
        if inv.betti.get(0) > 0 {
            disconnected += 1;
        }
        let predicted = formulas::two_dim_h2(&inv.h, &inv.betti, inv.kernel_intersection(1));
        let brute = bruteforce_hprime(&k, FieldSpec::default(), trial, 3).map_err(|e| e.to_string())?;
        ensure!(predicted == brute.values[2] as i64, "trial {trial}: {predicted} vs {:?}\n{text}", brute.values);
    }
    ensure!(disconnected >= total / 2, "only {disconnected} disconnected samples");
    Ok(())
}

fn balance() -> Outcome {
    let f = fp();
    for ds in data::list() {
        let k = ds.load();
        let sc = SingularCohomology::new(&f, &k);
        let betti = reduced_betti(&f, &k);
        let links: Vec<_> = k.vertices().map(|v| reduced_betti(&f, &k.vertex_link(v).unwrap())).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..3 {
            let theta = LinearForm::random(&f, k.n(), &mut rng);
            ensure!(theta.is_fully_supported(&f), "theta not fully supported");
            let kc = sc.kc_dims(&theta);
            for j in -1..k.d() as isize {
                let lhs = kc.cokernel(j) as i64 - kc.kernel(j) as i64;
                let rhs = betti.get(j) as i64 - formulas::link_sum(&links, j - 1);
                ensure!(lhs == rhs, "{} degree {j}: {lhs} vs {rhs}", ds.name);
            }
        }
    }
    Ok(())
}

fn stellar_invariance() -> Outcome {
    let spec = FieldSpec::default();
    for name in ["n4", "bd-4simplex"] {
        let k = load(name);
        let base = pl::hprime_minus_h(&k, spec, 0, 3).map_err(|e| e.to_string())?;
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for run in 0..10 {
            let steps = 1 + run % 3;
            let (sub, faces) = pl::random_admissible_subdivisions(&k, spec, steps, &mut rng).map_err(|e| e.to_string())?;
            ensure!(faces.len() == steps, "{name}: ran out of admissible faces");
            let diff = pl::hprime_minus_h(&sub, spec, 0, 3).map_err(|e| e.to_string())?;
            ensure!(diff == base, "{name} run {run} at {faces:?}: {diff:?} vs {base:?}");
        }
    }
    Ok(())
}

fn macaulay() -> Outcome {
    ensure!(macaulay_max_growth(3, 1) == 6, "growth of 3 at degree 1");
    ensure!(macaulay_max_growth(6, 2) == 10, "growth of 6 at degree 2");
    ensure!(binom(5, 3) == 10, "C(5,3)");
    for name in ["n1", "n3", "n4"] {
        let g = load(name).h_vector().g_vector();
        let (g1, g2) = (g.get(1), g.get(2));
        ensure!(g1 == 3 && g2 == 6, "{name}: g1 = {g1}, g2 = {g2}");
        ensure!(6 <= g2 && g2 <= binom(g1 + 1, 2), "{name}: 6 <= {g2} <= {}", binom(g1 + 1, 2));
    }
    Ok(())
}

fn negative_controls() -> Outcome {
    let broken = load("broken");
    let r = analyze("broken", &broken, &ReportOptions::default()).map_err(|e| e.to_string())?;
    ensure!(!r.classification.report.pseudomanifold, "broken complex passes as a pseudomanifold");
    let ds = r.check("dehn-sommerville").ok_or("no Dehn-Sommerville check")?;
    ensure!(ds.status == Status::SkippedPrecondition, "Dehn-Sommerville status {:?}", ds.status);
    let n3 = load("n3");
    let q = classify(&n3, FieldSpec::Rationals);
    let f2 = classify(&n3, FieldSpec::Prime(2));
    ensure!(q.field != f2.field, "fields not recorded");
    ensure!(q.singular_vertices.len() == 1 && f2.singular_vertices.len() == 5, "singular over Q {:?}, over F2 {:?}", q.singular_vertices, f2.singular_vertices);
    ensure!(q.homologically_isolated == Some(true), "over Q: {:?}", q.homologically_isolated);
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("N1 invariants", n1_invariants),
        ("N3 invariants", n3_invariants),
        ("N4 invariants", n4_invariants),
        ("Buchsbaum prediction equals brute force", schenzel_oracle),
        ("singular predictions equal brute force over Q and p", singular_oracle),
        ("top h' equals top Betti number", top_degree),
        ("2-dimensional h'_2 on random complexes", two_dimensional),
        ("kernel/cokernel balance", balance),
        ("h' - h invariant under admissible subdivisions", stellar_invariance),
        ("Macaulay bounds and g-vectors", macaulay),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.1}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.1}s): {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
