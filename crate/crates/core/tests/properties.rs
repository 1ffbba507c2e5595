use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use facering::analysis::{bruteforce_hprime, Invariants};
use facering::face_ring::{artinian_dims_face_ring_basis, draw_forms, sample_lsop, ArtinianReduction};
use facering::formulas::{self, link_sum};
use facering::homology::{reduced_betti, SingularCohomology};
use facering::linalg::{kernel_basis, rank, Field, LinearForm, Matrix, PrimeField, Rationals, DEFAULT_PRIME};
use facering::{Face, FieldSpec, SimplicialComplex};

fn fp() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn from_sets(facets: &[BTreeSet<u32>]) -> SimplicialComplex {
    let text: String = facets
        .iter()
        .map(|f| f.iter().map(u32::to_string).collect::<Vec<_>>().join(" ") + "\n")
        .collect();
    SimplicialComplex::parse(&text).unwrap()
}

/// Facets of size 1 to 4 on at most 7 vertices.
fn any_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0u32..7, 1..=4), 1..7).prop_map(|f| from_sets(&f))
}

fn pure_complex(size: usize, n: u32) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0u32..n, size), 1..8).prop_map(|f| from_sets(&f))
}

/// Pure 2-complexes, half of them a disjoint union of two pieces.
fn pure_surface() -> impl Strategy<Value = SimplicialComplex> {
    let piece = |lo: u32, hi: u32| prop::collection::vec(prop::collection::btree_set(lo..hi, 3), 1..5);
    (piece(0, 6), prop::option::of(piece(10, 15))).prop_map(|(mut a, b)| {
        a.extend(b.unwrap_or_default());
        from_sets(&a)
    })
}

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..7).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..4, c), r))
}

fn check_rank_nullity<F: Field>(field: &F, rows: &[Vec<i64>]) {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    let m = Matrix::from_i64_rows(field, &refs);
    let k = kernel_basis(field, &m);
    assert_eq!(rank(field, &m) + k.cols(), m.cols());
    assert!(m.mul(field, &k).is_zero(field));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity_is_width(rows in int_matrix()) {
        check_rank_nullity(&fp(), &rows);
        check_rank_nullity(&Rationals, &rows);
        check_rank_nullity(&PrimeField::new(3).unwrap(), &rows);
    }

    #[test]
    fn downward_closed_with_endpoint_identities(k in any_complex()) {
        for f in k.faces() {
            for g in f.subsets() {
                prop_assert!(k.contains(&g));
            }
        }
        let (f, h) = (k.f_vector(), k.h_vector());
        let d = k.d() as isize;
        prop_assert_eq!(h.get(0), 1);
        prop_assert_eq!(h.get(1), f.get(0) as i64 - d as i64);
        prop_assert_eq!(h.get(d), formulas::sign(d as i64 - 1) * k.reduced_euler_char());
        let back: Vec<i64> = f.as_slice().iter().map(|&x| x as i64).collect();
        prop_assert_eq!(h.to_f_vector(), back);
        prop_assert_eq!(reduced_betti(&fp(), &k).euler_char(), k.reduced_euler_char());
    }

    #[test]
    fn short_h_identity_on_pure_complexes(k in (2usize..=4).prop_flat_map(|s| pure_complex(s, 7))) {
        prop_assert!(k.short_h_identity_check().unwrap().iter().all(|&b| b));
    }

    #[test]
    fn relative_groups_match_links(k in any_complex()) {
        let f = fp();
        let sc = SingularCohomology::new(&f, &k);
        for g in sc.degrees() {
            for v in k.vertices() {
                let lk = reduced_betti(&f, &k.vertex_link(v).unwrap());
                prop_assert_eq!(g.relative_dims[v as usize], lk.get(g.degree - 1));
            }
        }
    }

    #[test]
    fn kernel_cokernel_balance(k in any_complex(), seed in any::<u64>()) {
        let f = fp();
        let sc = SingularCohomology::new(&f, &k);
        let betti = reduced_betti(&f, &k);
        let links: Vec<_> = k.vertices().map(|v| reduced_betti(&f, &k.vertex_link(v).unwrap())).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let thetas: Vec<_> = (0..3).map(|_| LinearForm::random(&f, k.n(), &mut rng)).collect();
        let first = sc.kc_dims(&thetas[0]);
        for t in &thetas {
            let kc = sc.kc_dims(t);
            prop_assert!(kc.fully_supported);
            for j in -1..k.d() as isize {
                let lhs = kc.cokernel(j) as i64 - kc.kernel(j) as i64;
                prop_assert_eq!(lhs, betti.get(j) as i64 - link_sum(&links, j - 1));
                // column scaling by nonzero weights leaves the rank alone
                prop_assert_eq!(kc.kernel(j), first.kernel(j));
            }
        }
    }

    #[test]
    fn generic_quotient_shape(k in any_complex(), seed in 0u64..1000) {
        let f = fp();
        let lsop = sample_lsop(&f, &k, seed).unwrap();
        let red = ArtinianReduction::new(&f, &k, &lsop.forms).unwrap();
        let h = red.hilbert();
        let d = k.d();
        prop_assert_eq!(h[0], 1);
        if d >= 1 {
            prop_assert_eq!(h[1] as i64, k.n() as i64 - d as i64);
        }
        let single = artinian_dims_face_ring_basis(&f, &k, &lsop.forms);
        prop_assert_eq!(single[d + 1], 0);
        prop_assert_eq!(&single[..=d], &h[..]);
        let socle = red.socle_dims();
        for i in 0..=d {
            prop_assert!(socle.0[i] <= h[i]);
        }
    }

    #[test]
    fn two_dimensional_h2(k in pure_surface(), seed in 0u64..1000) {
        let inv = Invariants::compute(&k, FieldSpec::default(), seed);
        let predicted = formulas::two_dim_h2(&inv.h, &inv.betti, inv.kernel_intersection(1));
        let brute = bruteforce_hprime(&k, FieldSpec::default(), seed, 3).unwrap();
        prop_assert_eq!(predicted, brute.values[2] as i64);
        prop_assert_eq!(brute.values[3], inv.betti.get(2));
    }

    #[test]
    fn stellar_subdivision_keeps_purity(k in any_complex(), pick in any::<prop::sample::Index>()) {
        let faces: Vec<&Face> = k.faces().filter(|f| f.len() >= 2).collect();
        prop_assume!(!faces.is_empty());
        let f = faces[pick.index(faces.len())];
        let g = k.stellar_subdivision(f).unwrap();
        prop_assert_eq!(g.is_pure(), k.is_pure());
        prop_assert_eq!(g.reduced_euler_char(), k.reduced_euler_char());
        prop_assert_eq!(reduced_betti(&fp(), &g), reduced_betti(&fp(), &k));
        prop_assert!(!g.contains(f));
    }
}

#[test]
fn kernel_intersection_of_manifolds_vanishes() {
    let f = fp();
    let torus = facering::data::load("torus7").unwrap();
    let sc = SingularCohomology::new(&f, &torus);
    let forms = draw_forms(&f, torus.n(), 3, 0, 0);
    for i in -1..1 {
        assert_eq!(sc.kernel_intersection_dim(&forms, i), 0);
    }
}
