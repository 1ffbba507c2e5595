//! Shared invariants of one complex and the formula evaluations that depend
//! on them, gated by the class of complexes each formula is valid for.

use serde::{Deserialize, Serialize};

use crate::classify::{classify, SingularityReport};
use crate::complex::{FVector, HVector, SimplicialComplex};
use crate::error::{FaceRingError, PreconditionError};
use crate::face_ring::{draw_forms, generic_hprime, GenericHPrime};
use crate::formulas::{self, DsReport, HPrimePrediction, Method};
use crate::homology::{
    punctured_complex, reduced_betti, BettiTable, KernelCokernelTable, SingularCohomology,
};
use crate::linalg::{Field, FieldSpec, LinearForm, DEFAULT_PRIME};

/// Second large prime used when a characteristic-zero answer is replaced by
/// two modular ones.
pub const SECOND_PRIME: u64 = 2_147_483_629;

/// Inputs above this many vertices are not reduced over the rationals
/// directly.
pub const RATIONAL_VERTEX_LIMIT: usize = 12;

/// Whether a formula may be evaluated outside its hypotheses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    #[default]
    Enforce,
    Force,
}

/// Everything the closed-form predictions read.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Invariants {
    pub field: FieldSpec,
    pub d: usize,
    pub f: FVector,
    pub h: HVector,
    pub euler: i64,
    pub betti: BettiTable,
    pub link_betti: Vec<BettiTable>,
    pub link_euler: Vec<i64>,
    /// Relative cohomology dimensions `dim H^i_{v}`, indexed `[v][i+1]`.
    pub relative_dims: Vec<Vec<usize>>,
    /// Kernel and cokernel dimensions for `θ = sum_v x_v`.
    pub kc: KernelCokernelTable,
    /// `β̃(X - Σ)` with `Σ` the vertices whose link is not CM.
    pub punctured: BettiTable,
    /// `dim ⋂_k ker f^{i,θ_k}` for `d` random forms, indexed `[i+1]`.
    pub kernel_intersections: Vec<usize>,
    pub classification: SingularityReport,
}

impl Invariants {
    pub fn compute(k: &SimplicialComplex, spec: FieldSpec, seed: u64) -> Self {
        crate::with_field!(spec, f => Self::build(&f, k, seed))
    }

    fn build<F: Field>(field: &F, k: &SimplicialComplex, seed: u64) -> Self {
        let classification = classify(k, field.spec());
        let link_complexes: Vec<SimplicialComplex> =
            k.vertices().map(|v| k.vertex_link(v).expect("vertex")).collect();
        let link_betti = link_complexes.iter().map(|l| reduced_betti(field, l)).collect();
        let link_euler = link_complexes.iter().map(|l| l.reduced_euler_char()).collect();
        let sc = SingularCohomology::new(field, k);
        let relative_dims = k
            .vertices()
            .map(|v| {
                sc.degrees()
                    .iter()
                    .map(|g| g.relative_dims[v as usize])
                    .collect()
            })
            .collect();
        let kc = sc.kc_dims(&LinearForm::all_ones(field, k.n()));
        let forms = draw_forms(field, k.n(), k.d(), seed, 0);
        let kernel_intersections = (-1..k.d() as isize)
            .map(|i| sc.kernel_intersection_dim(&forms, i))
            .collect();
        let punctured = reduced_betti(
            field,
            &punctured_complex(k, &classification.singular_vertices),
        );
        Invariants {
            field: field.spec(),
            d: k.d(),
            f: k.f_vector(),
            h: k.h_vector(),
            euler: k.reduced_euler_char(),
            betti: reduced_betti(field, k),
            link_betti,
            link_euler,
            relative_dims,
            kc,
            punctured,
            kernel_intersections,
            classification,
        }
    }

    pub fn kernel_intersection(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|j| self.kernel_intersections.get(j).copied())
            .unwrap_or(0)
    }

    fn his(&self) -> bool {
        self.classification.homologically_isolated == Some(true)
    }
}

fn gate(holds: bool, mode: Mode, why: &str) -> Result<bool, PreconditionError> {
    match (holds, mode) {
        (true, _) => Ok(true),
        (false, Mode::Force) => Ok(false),
        (false, Mode::Enforce) => Err(PreconditionError::new(why)),
    }
}

fn prediction(method: Method, values: Vec<i64>, in_hypothesis: bool) -> HPrimePrediction {
    HPrimePrediction {
        method,
        values,
        in_hypothesis,
    }
}

/// Generic `h'` for a Buchsbaum complex from `h` and `β̃(Δ)`.
pub fn schenzel_hprime(inv: &Invariants, mode: Mode) -> Result<HPrimePrediction, PreconditionError> {
    let ok = gate(inv.classification.buchsbaum, mode, "complex is not Buchsbaum")?;
    Ok(prediction(
        Method::Schenzel,
        formulas::schenzel_values(&inv.h, &inv.betti),
        ok,
    ))
}

/// Generic `h'` with the singular-vertex correction, for homologically
/// isolated singularities.
pub fn his_hprime(inv: &Invariants, mode: Mode) -> Result<HPrimePrediction, PreconditionError> {
    let ok = gate(inv.his(), mode, "singularities are not homologically isolated")?;
    Ok(prediction(
        Method::His,
        formulas::his_values(&inv.h, &inv.betti, &inv.link_betti, &inv.kc),
        ok,
    ))
}

/// The same prediction from the Betti numbers of `X` and `X - Σ`.
pub fn topological_hprime(inv: &Invariants, mode: Mode) -> Result<HPrimePrediction, PreconditionError> {
    let ok = gate(inv.his(), mode, "singularities are not homologically isolated")?;
    Ok(prediction(
        Method::Topological,
        formulas::topological_values(&inv.h, &inv.betti, &inv.punctured),
        ok,
    ))
}

/// `h'` for depth at least `d-1`, or for any pure 2-dimensional complex.
pub fn depth_hprime(inv: &Invariants, mode: Mode) -> Result<HPrimePrediction, PreconditionError> {
    let c = &inv.classification;
    let d = inv.d;
    let two_dim = c.pure && d == 3;
    let holds = two_dim || (c.isolated_singularities && c.depth + 1 >= d);
    let ok = gate(
        holds,
        mode,
        "needs isolated singularities and depth at least d-1, or a pure 2-dimensional complex",
    )?;
    let values = if two_dim {
        formulas::two_dim_values(&inv.h, &inv.betti, inv.kernel_intersection(1))
    } else {
        formulas::depth_values(&inv.h, &inv.betti, inv.kernel_intersection(d as isize - 2))
    };
    Ok(prediction(Method::Depth, values, ok))
}

pub fn hprime_prediction(
    inv: &Invariants,
    method: Method,
    mode: Mode,
) -> Option<Result<HPrimePrediction, PreconditionError>> {
    match method {
        Method::Bruteforce => None,
        Method::Schenzel => Some(schenzel_hprime(inv, mode)),
        Method::His => Some(his_hprime(inv, mode)),
        Method::Topological => Some(topological_hprime(inv, mode)),
        Method::Depth => Some(depth_hprime(inv, mode)),
    }
}

/// The corrected `h_{d-i}` relations for pseudomanifolds with isolated
/// singularities.
pub fn dehn_sommerville(inv: &Invariants, mode: Mode) -> Result<(DsReport, bool), PreconditionError> {
    let ok = gate(
        inv.classification.pseudomanifold_isolated,
        mode,
        "complex is not a pseudomanifold with isolated singularities",
    )?;
    Ok((formulas::dehn_sommerville(&inv.h, inv.euler, &inv.link_euler), ok))
}

/// Socle lower bounds for `0 <= i < d-1`.
pub fn socle_lower_bounds(inv: &Invariants, mode: Mode) -> Result<(Vec<i64>, bool), PreconditionError> {
    let ok = gate(inv.his(), mode, "singularities are not homologically isolated")?;
    let bounds = (0..inv.d.saturating_sub(1))
        .map(|i| formulas::socle_lower_bound(inv.d, i, &inv.betti, &inv.link_betti, &inv.kc))
        .collect();
    Ok((bounds, ok))
}

pub fn g2_lower_bound(inv: &Invariants, mode: Mode) -> Result<(i64, bool), PreconditionError> {
    let c = &inv.classification;
    let holds = c.pseudomanifold
        && inv.his()
        && formulas::g2_bound_applies(inv.d, c.singular_vertices.len());
    let ok = gate(
        holds,
        mode,
        "needs a pseudomanifold with homologically isolated singularities and d >= 5, or d = 4 with at most 5 singular vertices",
    )?;
    Ok((
        formulas::g2_lower_bound(inv.d, &inv.betti, &inv.link_betti, &inv.kc),
        ok,
    ))
}

/// Brute-force generic `h'`. Over the rationals, complexes with more than
/// [`RATIONAL_VERTEX_LIMIT`] vertices are reduced modulo two large primes
/// instead, falling back to exact rationals if the primes disagree.
pub fn bruteforce_hprime(
    k: &SimplicialComplex,
    spec: FieldSpec,
    seed: u64,
    trials: usize,
) -> Result<GenericHPrime, FaceRingError> {
    if spec != FieldSpec::Rationals || k.n() <= RATIONAL_VERTEX_LIMIT {
        return generic_hprime(k, spec, seed, trials);
    }
    let a = generic_hprime(k, FieldSpec::Prime(DEFAULT_PRIME), seed, trials)?;
    let b = generic_hprime(k, FieldSpec::Prime(SECOND_PRIME), seed, trials)?;
    if a.values == b.values {
        return Ok(GenericHPrime {
            field: FieldSpec::Rationals,
            ..a
        });
    }
    log::warn!("h' differs between p = {DEFAULT_PRIME} and p = {SECOND_PRIME}; using rationals");
    generic_hprime(k, spec, seed, trials)
}
