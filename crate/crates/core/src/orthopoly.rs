//! Chebyshev, probabilists' Hermite and Laguerre polynomials from their
//! three-term recurrences.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::{rat, rat_frac, UniPoly};

/// Orthogonal family selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrthoFamily {
    ChebyshevT,
    ChebyshevU,
    HermiteHe,
    Laguerre,
}

impl FromStr for OrthoFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "T" => Ok(OrthoFamily::ChebyshevT),
            "U" => Ok(OrthoFamily::ChebyshevU),
            "He" => Ok(OrthoFamily::HermiteHe),
            "L" => Ok(OrthoFamily::Laguerre),
            _ => Err(Error::input(format!("unknown orthogonal family '{s}'; expected T, U, He or L"))),
        }
    }
}

impl fmt::Display for OrthoFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrthoFamily::ChebyshevT => "T",
            OrthoFamily::ChebyshevU => "U",
            OrthoFamily::HermiteHe => "He",
            OrthoFamily::Laguerre => "L",
        })
    }
}

/// Runs `p_{k+1} = a_k p_k + b_k p_{k-1}` from `p_0, p_1` up to index `n`.
fn three_term(n: usize, p0: UniPoly, p1: UniPoly, step: impl Fn(usize) -> (UniPoly, UniPoly)) -> UniPoly {
    if n == 0 {
        return p0;
    }
    let (mut prev, mut cur) = (p0, p1);
    for k in 1..n {
        let (a, b) = step(k);
        let next = &(&a * &cur) + &(&b * &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `T_{n+1} = 2X T_n - T_{n-1}`, `T_0 = 1`, `T_1 = X`.
pub fn chebyshev_t(n: usize) -> UniPoly {
    three_term(n, UniPoly::one(), UniPoly::x(), |_| {
        (UniPoly::from_ints(&[0, 2]), UniPoly::from_ints(&[-1]))
    })
}

/// `U_{n+1} = 2X U_n - U_{n-1}`, `U_0 = 1`, `U_1 = 2X`.
pub fn chebyshev_u(n: usize) -> UniPoly {
    three_term(n, UniPoly::one(), UniPoly::from_ints(&[0, 2]), |_| {
        (UniPoly::from_ints(&[0, 2]), UniPoly::from_ints(&[-1]))
    })
}

/// `He_{n+1} = X He_n - n He_{n-1}`, `He_0 = 1`, `He_1 = X`.
pub fn hermite_he(n: usize) -> UniPoly {
    three_term(n, UniPoly::one(), UniPoly::x(), |k| {
        (UniPoly::x(), UniPoly::constant(rat(-(k as i64))))
    })
}

/// `L_{n+1} = ((2n+1-X) L_n - n L_{n-1}) / (n+1)`, `L_0 = 1`, `L_1 = 1 - X`.
pub fn laguerre(n: usize) -> UniPoly {
    three_term(n, UniPoly::one(), UniPoly::from_ints(&[1, -1]), |k| {
        let k = k as i64;
        let d = k + 1;
        (
            UniPoly::new(vec![rat_frac(2 * k + 1, d), rat_frac(-1, d)]),
            UniPoly::constant(rat_frac(-k, d)),
        )
    })
}

pub fn ortho(family: OrthoFamily, n: usize) -> UniPoly {
    match family {
        OrthoFamily::ChebyshevT => chebyshev_t(n),
        OrthoFamily::ChebyshevU => chebyshev_u(n),
        OrthoFamily::HermiteHe => hermite_he(n),
        OrthoFamily::Laguerre => laguerre(n),
    }
}
