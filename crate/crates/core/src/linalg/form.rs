use rand::Rng;

use super::Field;

/// A linear form `sum_v a_v x_v`, one coefficient per vertex id.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForm<E>(pub Vec<E>);

impl<E: Clone> LinearForm<E> {
    /// `sum_v x_v`.
    pub fn all_ones<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        LinearForm(vec![field.one(); n])
    }

    /// Independent uniform nonzero coefficients.
    pub fn random<F: Field<Elem = E>, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Self {
        LinearForm((0..n).map(|_| field.random_nonzero(rng)).collect())
    }

    pub fn coefficients(&self) -> &[E] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_fully_supported<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.0.iter().all(|a| !field.is_zero(a))
    }
}
