use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{FallingFactorialForm, Rational, UniPoly};
use crate::error::{Error, Result};

/// Fraction-free (Bareiss) forward elimination of an integer matrix into row
/// echelon form, pivoting on the first nonzero entry of each column.
/// Returns the pivot columns in row order and the sign of the row swaps.
fn bareiss_echelon(m: &mut [Vec<BigInt>], cols: usize) -> (Vec<usize>, bool) {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut negated = false;
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            m.swap(p, r);
            negated = !negated;
        }
        let (top, rest) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let factor = row[c].clone();
            for j in c..row.len() {
                let v = &pivot_row[c] * &row[j] - &factor * &pivot_row[j];
                debug_assert!(v.is_multiple_of(&prev));
                row[j] = v / &prev;
            }
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    (pivots, negated)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn determinant(matrix: &[Vec<BigInt>]) -> BigInt {
    let n = matrix.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = matrix.to_vec();
    let (pivots, negated) = bareiss_echelon(&mut m, n);
    if pivots.len() < n {
        return BigInt::zero();
    }
    let det = m[n - 1][n - 1].clone();
    if negated {
        -det
    } else {
        det
    }
}

/// Exact solution of `A x = b` over Q.
///
/// Rows are cleared of denominators, eliminated fraction-free, then
/// back-substituted with every free variable set to zero. Returns `None`
/// when the system is inconsistent.
pub fn solve_linear_exact(a: &[Vec<Rational>], b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    if a.len() != b.len() {
        return Err(Error::input(format!(
            "matrix has {} rows but right-hand side has {}",
            a.len(),
            b.len()
        )));
    }
    let cols = a.first().map_or(0, Vec::len);
    if a.iter().any(|row| row.len() != cols) {
        return Err(Error::input("matrix rows have unequal lengths"));
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let lcm = row
                .iter()
                .chain(std::iter::once(rhs))
                .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            row.iter()
                .chain(std::iter::once(rhs))
                .map(|v| (v * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    let (pivots, _) = bareiss_echelon(&mut m, cols);
    let rank = pivots.len();
    if m[rank..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate().rev() {
        let mut acc = Rational::from_integer(m[r][cols].clone());
        for j in (c + 1)..cols {
            if !m[r][j].is_zero() && !x[j].is_zero() {
                acc -= Rational::from_integer(m[r][j].clone()) * &x[j];
            }
        }
        x[c] = acc / Rational::from_integer(m[r][c].clone());
    }
    Ok(Some(x))
}

/// The unique polynomial of degree at most `values.len() - 1` taking
/// `values[k]` at `X = k`, via Newton forward differences.
pub fn interpolate(values: &[Rational]) -> UniPoly {
    let mut diffs = values.to_vec();
    let mut leading = Vec::with_capacity(values.len());
    let mut fact = Rational::one();
    for k in 0..values.len() {
        if k > 0 {
            fact *= Rational::from_integer(BigInt::from(k));
        }
        leading.push(&diffs[0] / &fact);
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    FallingFactorialForm::new(leading).to_monomial()
}
