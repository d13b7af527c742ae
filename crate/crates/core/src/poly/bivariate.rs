use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::binomial;
use crate::error::{Error, Result};

/// Dense bivariate integer polynomial. `grid[i][j]` multiplies `X^i Y^j`;
/// the grid is rectangular with trailing zero rows and columns removed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BiPoly {
    grid: Vec<Vec<BigInt>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { grid: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(c: BigInt, i: usize, j: usize) -> Self {
        let mut grid = vec![vec![BigInt::zero(); j + 1]; i + 1];
        grid[i][j] = c;
        Self::new(grid)
    }

    /// Builds from a possibly ragged grid, padding and trimming.
    pub fn new(mut grid: Vec<Vec<BigInt>>) -> Self {
        let width = grid
            .iter()
            .map(|row| row.iter().rposition(|c| !c.is_zero()).map_or(0, |p| p + 1))
            .max()
            .unwrap_or(0);
        for row in grid.iter_mut() {
            row.resize(width, BigInt::zero());
        }
        while grid.last().is_some_and(|row| row.iter().all(|c| c.is_zero())) {
            grid.pop();
        }
        if width == 0 {
            grid.clear();
        }
        BiPoly { grid }
    }

    pub fn from_ints(grid: &[&[i64]]) -> Self {
        Self::new(
            grid.iter()
                .map(|row| row.iter().map(|&c| BigInt::from(c)).collect())
                .collect(),
        )
    }

    pub fn grid(&self) -> &[Vec<BigInt>] {
        &self.grid
    }

    pub fn coeff(&self, i: usize, j: usize) -> BigInt {
        self.grid
            .get(i)
            .and_then(|row| row.get(j))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    /// `(X - 1)^a (Y - 1)^b`, the building block of rank-nullity sums.
    pub fn shifted_monomial(a: usize, b: usize) -> Self {
        let row = |k: usize| -> Vec<BigInt> {
            (0..=k)
                .map(|t| {
                    let sign = if (k - t).is_multiple_of(2) { 1 } else { -1 };
                    binomial(k as u64, t as u64) * sign
                })
                .collect()
        };
        let xs = row(a);
        let ys = row(b);
        Self::new(
            xs.iter()
                .map(|cx| ys.iter().map(|cy| cx * cy).collect())
                .collect(),
        )
    }

    fn dims(&self) -> (usize, usize) {
        (self.grid.len(), self.grid.first().map_or(0, Vec::len))
    }
}

impl fmt::Display for BiPoly {
    /// Rows (powers of X) separated by `;`, each row the ascending Y
    /// coefficients separated by spaces. Zero prints as `"0"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.grid.is_empty() {
            return f.write_str("0");
        }
        let rows: Vec<String> = self
            .grid
            .iter()
            .map(|row| {
                row.iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        f.write_str(&rows.join(";"))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{self}]")
    }
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let grid = s
            .trim()
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|c| {
                        c.parse::<BigInt>()
                            .map_err(|_| Error::input(format!("malformed integer '{c}'")))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if grid.iter().all(Vec::is_empty) {
            return Err(Error::input("empty bivariate polynomial text"));
        }
        Ok(BiPoly::new(grid))
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Add<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let (r1, c1) = self.dims();
        let (r2, c2) = rhs.dims();
        let (rows, cols) = (r1.max(r2), c1.max(c2));
        BiPoly::new(
            (0..rows)
                .map(|i| (0..cols).map(|j| self.coeff(i, j) + rhs.coeff(i, j)).collect())
                .collect(),
        )
    }
}

impl Sub<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let (r1, c1) = self.dims();
        let (r2, c2) = rhs.dims();
        let (rows, cols) = (r1.max(r2), c1.max(c2));
        BiPoly::new(
            (0..rows)
                .map(|i| (0..cols).map(|j| self.coeff(i, j) - rhs.coeff(i, j)).collect())
                .collect(),
        )
    }
}

impl Mul<&BiPoly> for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let (r1, c1) = self.dims();
        let (r2, c2) = rhs.dims();
        let mut out = vec![vec![BigInt::zero(); c1 + c2 - 1]; r1 + r2 - 1];
        for (i1, row1) in self.grid.iter().enumerate() {
            for (j1, a) in row1.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (i2, row2) in rhs.grid.iter().enumerate() {
                    for (j2, b) in row2.iter().enumerate() {
                        out[i1 + i2][j1 + j2] += a * b;
                    }
                }
            }
        }
        BiPoly::new(out)
    }
}

impl Add for BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: BiPoly) -> BiPoly {
        &self + &rhs
    }
}

impl Mul for BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: BiPoly) -> BiPoly {
        &self * &rhs
    }
}
