use num_traits::Zero;

use super::{rat, Rational, UniPoly};

/// `Σ b_j X_(j)` with `X_(j) = X(X-1)...(X-j+1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FallingFactorialForm {
    coeffs: Vec<Rational>,
}

impl FallingFactorialForm {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        FallingFactorialForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Expands into the monomial basis.
    pub fn to_monomial(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        let mut falling = UniPoly::one();
        for (j, b) in self.coeffs.iter().enumerate() {
            if !b.is_zero() {
                out = &out + &falling.scale(b);
            }
            falling = &falling * &UniPoly::linear_root(rat(j as i64));
        }
        out
    }
}

/// Free-function form of [`FallingFactorialForm::to_monomial`].
pub fn falling_to_monomial(f: &FallingFactorialForm) -> UniPoly {
    f.to_monomial()
}
