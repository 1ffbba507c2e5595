use serde::{Deserialize, Serialize};

use crate::error::ComplexError;
use crate::formulas::binom;

/// Face numbers `f_{-1}, ..., f_{d-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `f_i`, the number of i-dimensional faces; zero out of range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// `h_0, ..., h_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    /// `h_i`; zero out of range.
    pub fn get(&self, i: isize) -> i64 {
        usize::try_from(i)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }

    pub fn d(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn g_vector(&self) -> GVector {
        GVector(
            (0..self.0.len() as isize)
                .map(|j| self.get(j) - self.get(j - 1))
                .collect(),
        )
    }

    /// Inverse transform back to face numbers.
    pub fn to_f_vector(&self) -> Vec<i64> {
        let d = self.d() as i64;
        (0..=d)
            .map(|j| {
                (0..=j)
                    .map(|i| binom(d - i, j - i) * self.get(i as isize))
                    .sum()
            })
            .collect()
    }
}

/// `g_j = h_j - h_{j-1}` for `j = 0..=d` (so `g_0 = h_0`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GVector(pub Vec<i64>);

impl GVector {
    pub fn get(&self, j: isize) -> i64 {
        usize::try_from(j)
            .ok()
            .and_then(|k| self.0.get(k).copied())
            .unwrap_or(0)
    }
}

/// Expands `sum_i f_{i-1} (x-1)^{d-i}` in powers of `x`.
pub fn h_vector(f: &FVector, d: usize) -> Result<HVector, ComplexError> {
    if f.0.len() != d + 1 {
        return Err(ComplexError::LengthMismatch {
            len: f.0.len(),
            expected: d + 1,
        });
    }
    let d = d as i64;
    let h = (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binom(d - i, k - i) * f.0[i as usize] as i64
                })
                .sum()
        })
        .collect();
    Ok(HVector(h))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tetrahedron_boundary() {
        let h = h_vector(&FVector(vec![1, 4, 6, 4]), 3).unwrap();
        assert_eq!(h.0, vec![1, 1, 1, 1]);
        assert_eq!(h.g_vector().0, vec![1, 0, 0, 0]);
    }

    #[test]
    fn two_hollow_triangles() {
        let h = h_vector(&FVector(vec![1, 6, 6]), 2).unwrap();
        assert_eq!(h.0, vec![1, 4, 1]);
    }

    #[test]
    fn length_mismatch_is_rejected() {
        assert!(matches!(
            h_vector(&FVector(vec![1, 4, 6]), 3),
            Err(ComplexError::LengthMismatch { len: 3, expected: 4 })
        ));
    }

    #[test]
    fn round_trip_back_to_faces() {
        let f = FVector(vec![1, 8, 28, 56, 28]);
        let h = h_vector(&f, 4).unwrap();
        assert_eq!(h.to_f_vector(), vec![1, 8, 28, 56, 28]);
    }
}
