//! Closed-form predictions for h-numbers, Hilbert functions of Artinian
//! reductions, socles and `g_2`, evaluated from precomputed homological data.
//!
//! Every function here is plain arithmetic. Deciding whether a complex lies
//! in the class where a prediction is valid is the caller's job (see
//! [`crate::analysis`]).

use serde::{Deserialize, Serialize};

use crate::complex::HVector;
use crate::homology::{BettiTable, KernelCokernelTable};

/// Binomial coefficient with `C(b, 0) = 1` and `C(b, a) = 0` for `a < 0`,
/// extended to negative `b` by `C(b, a) = b(b-1)...(b-a+1)/a!`.
pub fn binom(b: i64, a: i64) -> i64 {
    if a < 0 {
        return 0;
    }
    if b >= 0 && a > b {
        return 0;
    }
    let mut acc: i128 = 1;
    for k in 0..a as i128 {
        acc = acc * (b as i128 - k) / (k + 1);
    }
    acc as i64
}

pub fn sign(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Which way a Hilbert function was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Method {
    #[serde(rename = "bruteforce")]
    Bruteforce,
    #[serde(rename = "schenzel")]
    Schenzel,
    #[serde(rename = "his-formula")]
    His,
    #[serde(rename = "topological")]
    Topological,
    #[serde(rename = "depth-formula")]
    Depth,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Bruteforce,
        Method::Schenzel,
        Method::His,
        Method::Topological,
        Method::Depth,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Schenzel => "schenzel",
            Method::His => "his",
            Method::Topological => "topological",
            Method::Depth => "depth",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method `{s}`"))
    }
}

/// A predicted Hilbert function of a generic Artinian reduction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HPrimePrediction {
    pub method: Method,
    /// `h'_0, ..., h'_d`.
    pub values: Vec<i64>,
    /// False when evaluated on a complex outside the formula's hypotheses.
    pub in_hypothesis: bool,
}

/// `sum_v β̃_j(lk v)`.
pub fn link_sum(link_betti: &[BettiTable], j: isize) -> i64 {
    link_betti.iter().map(|b| b.get(j) as i64).sum()
}

fn beta(b: &BettiTable, j: i64) -> i64 {
    b.get(j as isize) as i64
}

/// `h_i + C(d,i) sum_{j=1}^{i-1} (-1)^{i-j-1} β̃_{j-1}`.
pub fn schenzel_values(h: &HVector, betti: &BettiTable) -> Vec<i64> {
    let d = h.d() as i64;
    (0..=d)
        .map(|i| {
            let s: i64 = (1..i).map(|j| sign(i - j - 1) * beta(betti, j - 1)).sum();
            h.get(i as isize) + binom(d, i) * s
        })
        .collect()
}

/// Schenzel's sum plus the correction from the singular vertices.
pub fn his_values(
    h: &HVector,
    betti: &BettiTable,
    link_betti: &[BettiTable],
    kc: &KernelCokernelTable,
) -> Vec<i64> {
    let d = h.d() as i64;
    let base = schenzel_values(h, betti);
    (0..=d)
        .map(|i| {
            let links: i64 = (1..=i - 2)
                .map(|j| sign(i - j) * link_sum(link_betti, (j - 1) as isize))
                .sum();
            let k = kc.kernel((i - 1) as isize) as i64;
            base[i as usize] + binom(d - 1, i) * (k - links)
        })
        .collect()
}

/// The same prediction written with the Betti numbers of `X` and `X - Σ`.
pub fn topological_values(h: &HVector, betti: &BettiTable, punctured: &BettiTable) -> Vec<i64> {
    let d = h.d() as i64;
    (0..=d)
        .map(|i| {
            let s: i64 = (1..i)
                .map(|j| {
                    sign(i - j - 1)
                        * (binom(d - 1, i - 1) * beta(betti, j - 1)
                            + binom(d - 1, i) * beta(punctured, j - 1))
                })
                .sum();
            h.get(i as isize) + s
        })
        .collect()
}

/// Depth `d-1`: `h'_i = h_i` below `d-1`, the kernel intersection in degree
/// `d-1`, and the top Betti number in degree `d`.
pub fn depth_values(h: &HVector, betti: &BettiTable, kernel_intersection: usize) -> Vec<i64> {
    let d = h.d();
    (0..=d)
        .map(|i| {
            if i == d {
                betti.get(d as isize - 1) as i64
            } else if i + 1 == d {
                h.get(i as isize) + kernel_intersection as i64
            } else {
                h.get(i as isize)
            }
        })
        .collect()
}

/// `h'_2 = h_2 + 3 β̃_0 + dim ⋂ 𝒦_1^{θ_k}` for pure 2-dimensional complexes.
pub fn two_dim_h2(h: &HVector, betti: &BettiTable, kernel_intersection: usize) -> i64 {
    h.get(2) + 3 * betti.get(0) as i64 + kernel_intersection as i64
}

/// The full `h'` for a pure 2-dimensional complex, connected or not.
pub fn two_dim_values(h: &HVector, betti: &BettiTable, kernel_intersection: usize) -> Vec<i64> {
    vec![
        h.get(0),
        h.get(1),
        two_dim_h2(h, betti, kernel_intersection),
        betti.get(2) as i64,
    ]
}

/// Lower bound on `dim Soc_i` (and on `h'_i`) for `i < d-1`.
pub fn socle_lower_bound(
    d: usize,
    i: usize,
    betti: &BettiTable,
    link_betti: &[BettiTable],
    kc: &KernelCokernelTable,
) -> i64 {
    let (d, i) = (d as i64, i as i64);
    let kernels = kc.kernel(i as isize) as i64 + kc.kernel(i as isize - 1) as i64;
    binom(d, i) * beta(betti, i - 1)
        + binom(d - 1, i) * (kernels - link_sum(link_betti, (i - 2) as isize))
}

/// Lower bound on `g_2` for pseudomanifolds with homologically isolated
/// singularities.
pub fn g2_lower_bound(
    d: usize,
    betti: &BettiTable,
    link_betti: &[BettiTable],
    kc: &KernelCokernelTable,
) -> i64 {
    let d = d as i64;
    let global = beta(betti, d - 2) - beta(betti, d - 1) + 1;
    let local: i64 = link_betti
        .iter()
        .map(|b| beta(b, d - 3) - beta(b, d - 2) + 1)
        .sum();
    binom(d + 1, 2) * global + d * kc.kernel((d - 2) as isize) as i64 - d * local
}

/// Whether the `g_2` bound is asserted at this dimension and singularity count.
pub fn g2_bound_applies(d: usize, singular_vertices: usize) -> bool {
    d >= 5 || (d == 4 && singular_vertices <= 5)
}

/// One row of the generalized Dehn–Sommerville comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsRow {
    pub i: usize,
    /// Predicted `h_{d-i}`.
    pub predicted: i64,
    pub actual: i64,
    pub defect: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DsReport {
    pub rows: Vec<DsRow>,
}

impl DsReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.defect == 0)
    }
}

/// `sum_v (1 + (-1)^{d-1} χ̃(lk v))`.
pub fn link_euler_sum(d: usize, link_euler: &[i64]) -> i64 {
    let s = sign(d as i64 - 1);
    link_euler.iter().map(|&chi| 1 + s * chi).sum()
}

/// `h_{d-i}` predicted from `h_i`, `χ̃(Δ)` and the reduced Euler
/// characteristics of the vertex links, for `0 <= i <= d`.
pub fn dehn_sommerville(h: &HVector, euler: i64, link_euler: &[i64]) -> DsReport {
    let d = h.d() as i64;
    let links = link_euler_sum(d as usize, link_euler);
    let rows = (0..=d)
        .map(|i| {
            let predicted = h.get(i as isize)
                + sign(i - 1) * binom(d, i) * (1 + sign(d) * euler)
                + sign(i) * binom(d - 1, i - 1) * links;
            let actual = h.get((d - i) as isize);
            DsRow {
                i: i as usize,
                predicted,
                actual,
                defect: actual - predicted,
            }
        })
        .collect();
    DsReport { rows }
}

/// The `i`-th Macaulay representation `a = C(k_i, i) + C(k_{i-1}, i-1) + ...`
/// with `k_i > k_{i-1} > ... >= j >= 1`, as `(k, j)` pairs.
pub fn macaulay_expansion(a: u64, i: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut rest = a;
    let mut j = i;
    while rest > 0 && j > 0 {
        let mut k = j;
        while binom(k as i64 + 1, j as i64) as u64 <= rest {
            k += 1;
        }
        rest -= binom(k as i64, j as i64) as u64;
        out.push((k, j));
        j -= 1;
    }
    out
}

/// `a^<i>`: the largest value a Hilbert function can take in degree `i+1`
/// after taking the value `a` in degree `i`.
pub fn macaulay_max_growth(a: u64, i: u64) -> u64 {
    assert!(i >= 1, "degree must be positive");
    macaulay_expansion(a, i)
        .into_iter()
        .map(|(k, j)| binom(k as i64 + 1, j as i64 + 1) as u64)
        .sum()
}
