//! Fitting, checking and extending C-finite recurrences
//! `p_{n+q} = Σ_{i<q} f_i(X) p_{n+i}` for sequences of polynomials.

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{make_family, FamilySpec};
use crate::invariants::{compute_uni, PolyKind};
use crate::poly::{Degree, Rational, UniPoly};

/// Default number of trailing windows held out from the linear system.
pub const DEFAULT_HOLDOUT: usize = 3;

/// A recurrence of order `q` with coefficient polynomials `f_0..f_{q-1}`
/// of degree at most `d`, and the `q` seeds it starts from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceSpec {
    pub q: usize,
    pub d: usize,
    pub coeffs: Vec<UniPoly>,
    pub seeds: Vec<UniPoly>,
}

/// Consecutive terms `p_{start}, p_{start+1}, ...` of a polynomial sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolySequence {
    pub start: usize,
    pub terms: Vec<UniPoly>,
    pub label: String,
}

impl PolySequence {
    pub fn new(start: usize, terms: Vec<UniPoly>, label: impl Into<String>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::input("a polynomial sequence needs at least one term"));
        }
        Ok(PolySequence {
            start,
            terms,
            label: label.into(),
        })
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

fn degree_of(p: &UniPoly) -> usize {
    match p.degree() {
        Degree::Finite(d) => d,
        Degree::NegInfinity => 0,
    }
}

fn step(coeffs: &[UniPoly], window: &[UniPoly]) -> UniPoly {
    coeffs.iter().zip(window).map(|(f, p)| f * p).sum()
}

/// Whether every window of `seq` satisfies the recurrence.
pub fn verify(spec: &RecurrenceSpec, seq: &PolySequence) -> bool {
    let q = spec.q;
    seq.len() > q
        && spec.coeffs.len() == q
        && seq
            .terms
            .windows(q + 1)
            .all(|w| step(&spec.coeffs, &w[..q]) == w[q])
}

/// The seeds followed by `count` generated terms.
pub fn extend(spec: &RecurrenceSpec, count: usize) -> PolySequence {
    let mut terms = spec.seeds.clone();
    for _ in 0..count {
        let next = step(&spec.coeffs, &terms[terms.len() - spec.q..]);
        terms.push(next);
    }
    PolySequence {
        start: 0,
        terms,
        label: "extended".into(),
    }
}

/// Solves for order `q`, degree `d` on the first `windows` windows. The
/// unknown `c[i*(d+1)+e]` is the coefficient of `X^e` in `f_i`.
fn solve_cell(terms: &[UniPoly], q: usize, d: usize, windows: usize) -> Option<Vec<UniPoly>> {
    let unknowns = q * (d + 1);
    let mut a: Vec<Vec<Rational>> = Vec::new();
    let mut b: Vec<Rational> = Vec::new();
    for n in 0..windows {
        let top = (0..q).map(|i| degree_of(&terms[n + i])).max().unwrap_or(0) + d;
        let top = top.max(degree_of(&terms[n + q]));
        for t in 0..=top {
            let mut row = vec![Rational::from_integer(0.into()); unknowns];
            for i in 0..q {
                for e in 0..=d.min(t) {
                    row[i * (d + 1) + e] = terms[n + i].coeff(t - e);
                }
            }
            a.push(row);
            b.push(terms[n + q].coeff(t));
        }
    }
    let x = crate::poly::solve_linear_exact(&a, &b).ok()??;
    Some(
        (0..q)
            .map(|i| UniPoly::new(x[i * (d + 1)..(i + 1) * (d + 1)].to_vec()))
            .collect(),
    )
}

/// Minimum sequence length accepted by [`fit`].
pub fn required_length(max_order: usize, max_deg: usize, holdout: usize) -> usize {
    max_order + max_deg + 1 + holdout
}

/// Searches `(q, d)` in lexicographic order and returns the first
/// recurrence that, fitted on all but the last `holdout` windows, also
/// holds on those held-out windows.
pub fn fit_with_holdout(
    seq: &PolySequence,
    max_order: usize,
    max_deg: usize,
    holdout: usize,
) -> Result<Option<RecurrenceSpec>> {
    if max_order == 0 {
        return Err(Error::input("max order must be at least 1"));
    }
    let need = required_length(max_order, max_deg, holdout);
    if seq.len() < need {
        return Err(Error::input(format!(
            "sequence has {} terms; fitting up to order {max_order} and degree {max_deg} \
             with {holdout} held-out terms needs at least {need}",
            seq.len()
        )));
    }
    let cells: Vec<(usize, usize)> = (1..=max_order)
        .flat_map(|q| (0..=max_deg).map(move |d| (q, d)))
        .collect();
    let terms = &seq.terms;
    Ok(cells.par_iter().find_map_first(|&(q, d)| {
        let windows = terms.len() - q - holdout;
        let coeffs = solve_cell(terms, q, d, windows)?;
        let spec = RecurrenceSpec {
            q,
            d,
            coeffs,
            seeds: terms[..q].to_vec(),
        };
        verify(&spec, seq).then_some(spec)
    }))
}

/// [`fit_with_holdout`] with [`DEFAULT_HOLDOUT`] held-out windows.
pub fn fit(seq: &PolySequence, max_order: usize, max_deg: usize) -> Result<Option<RecurrenceSpec>> {
    fit_with_holdout(seq, max_order, max_deg, DEFAULT_HOLDOUT)
}

/// Outcome of fitting a polynomial over an indexed graph family.
#[derive(Debug, Clone, Serialize)]
pub struct FitReport {
    pub poly: String,
    pub family: String,
    pub n_from: usize,
    pub n_to: usize,
    pub max_order: usize,
    pub max_deg: usize,
    pub holdout: usize,
    pub found: bool,
    pub q: Option<usize>,
    pub d: Option<usize>,
    pub coeffs: Vec<UniPoly>,
    pub seeds: Vec<UniPoly>,
    /// Number of windows the returned spec was checked on.
    pub verified_terms: usize,
    pub degenerate_members: Vec<String>,
}

/// `P(G_n)` for `n = n_from..=n_to`.
pub fn family_sequence(
    kind: &PolyKind,
    family: &str,
    n_from: usize,
    n_to: usize,
    caps: &Caps,
) -> Result<PolySequence> {
    if n_from > n_to {
        return Err(Error::input(format!("empty index range {n_from}..{n_to}")));
    }
    let terms = (n_from..=n_to)
        .into_par_iter()
        .map(|n| {
            let g = make_family(&FamilySpec::indexed(family, n)?)?;
            compute_uni(&g, kind, caps)
        })
        .collect::<Result<Vec<_>>>()?;
    PolySequence::new(n_from, terms, format!("{kind} on {family}"))
}

/// Computes the family sequence and fits it.
#[allow(clippy::too_many_arguments)]
pub fn fit_family(
    kind: &PolyKind,
    family: &str,
    n_from: usize,
    n_to: usize,
    max_order: usize,
    max_deg: usize,
    holdout: usize,
    caps: &Caps,
) -> Result<FitReport> {
    let need = required_length(max_order, max_deg, holdout);
    if n_to + 1 < n_from + need {
        return Err(Error::input(format!(
            "range {n_from}..{n_to} has {} terms; at least {need} are needed",
            (n_to + 1).saturating_sub(n_from)
        )));
    }
    let seq = family_sequence(kind, family, n_from, n_to, caps)?;
    let degenerate_members = (n_from..=n_to)
        .filter_map(|n| FamilySpec::indexed(family, n).ok())
        .filter(FamilySpec::is_degenerate)
        .map(|s| s.to_string())
        .collect();
    let spec = fit_with_holdout(&seq, max_order, max_deg, holdout)?;
    Ok(FitReport {
        poly: kind.to_string(),
        family: family.to_string(),
        n_from,
        n_to,
        max_order,
        max_deg,
        holdout,
        found: spec.is_some(),
        q: spec.as_ref().map(|s| s.q),
        d: spec.as_ref().map(|s| s.d),
        verified_terms: spec.as_ref().map_or(0, |s| seq.len() - s.q),
        coeffs: spec.as_ref().map_or_else(Vec::new, |s| s.coeffs.clone()),
        seeds: spec.map_or_else(Vec::new, |s| s.seeds),
        degenerate_members,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orthopoly::chebyshev_t;

    fn p(s: &str) -> UniPoly {
        s.parse().unwrap()
    }

    fn seq(terms: Vec<UniPoly>) -> PolySequence {
        PolySequence::new(0, terms, "test").unwrap()
    }

    #[test]
    fn constant_sequence_is_order_one() {
        let s = seq(vec![UniPoly::one(); 8]);
        let spec = fit(&s, 2, 1).unwrap().unwrap();
        assert_eq!((spec.q, spec.d), (1, 0));
        assert_eq!(spec.coeffs, vec![UniPoly::one()]);
    }

    #[test]
    fn chebyshev_spec_verifies_and_extends() {
        let t: Vec<UniPoly> = (0..10).map(chebyshev_t).collect();
        let spec = RecurrenceSpec {
            q: 2,
            d: 1,
            coeffs: vec![p("-1"), p("0 2")],
            seeds: t[..2].to_vec(),
        };
        assert!(verify(&spec, &seq(t.clone())));
        let ext = extend(&spec, 3);
        assert_eq!(ext.terms, t[..5].to_vec());
        assert_eq!(extend(&spec, 0).terms, t[..2].to_vec());
        let mut bad = spec.clone();
        bad.coeffs[0] = p("-2");
        assert!(!verify(&bad, &seq(t.clone())));
        let fitted = fit(&seq(t), 2, 1).unwrap().unwrap();
        assert_eq!(fitted.coeffs, spec.coeffs);
    }

    #[test]
    fn too_short_is_an_input_error() {
        let s = seq(vec![UniPoly::one(); 5]);
        let err = fit(&s, 2, 1).unwrap_err();
        assert!(err.to_string().contains("at least 7"));
    }
}
