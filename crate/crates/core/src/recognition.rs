//! Recognition: which graphs realise a given polynomial, by exhaustive
//! search, by family lookup, and by necessary-condition screens.

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{check_cap, Error, Result};
use crate::graph::{canonical_form, disjoint_union, enumerate_graphs, make_family, FamilySpec, Graph};
use crate::invariants::{compute, compute_uni, matching_defect, maxcl, PolyKind, PolyValue};
use crate::orthopoly::{chebyshev_t, chebyshev_u, hermite_he, laguerre};
use crate::poly::{factorial, rat, Degree, Rational, UniPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Brute,
    FamilyRecurrence,
}

/// Graphs with `P(G) = p` among the isomorphism classes searched.
#[derive(Debug, Clone, Serialize)]
pub struct RecognitionResult {
    pub poly: String,
    pub target: PolyValue,
    pub matches: Vec<Graph>,
    pub method: Method,
    /// Orders searched.
    pub orders: Vec<usize>,
    pub bound: usize,
}

fn scan(orders: &[usize], kind: &PolyKind, target: &PolyValue, caps: &Caps) -> Result<Vec<Graph>> {
    let mut matches = Vec::new();
    for &n in orders {
        let classes = enumerate_graphs(n, caps.enumeration)?;
        let hits: Vec<Graph> = classes
            .par_iter()
            .map(|g| compute(g, kind, caps).map(|v| (&v == target).then(|| g.clone())))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        matches.extend(hits);
    }
    Ok(matches)
}

/// Computes `kind` on every class and keeps the matches. For kinds whose
/// degree is the order of the graph only that order is searched; otherwise
/// all orders `1..=n_bound`.
pub fn brute_recognize(p: &PolyValue, kind: &PolyKind, n_bound: usize, caps: &Caps) -> Result<RecognitionResult> {
    let orders: Vec<usize> = if kind.degree_is_order() {
        let uni = p
            .as_uni()
            .ok_or_else(|| Error::input(format!("{kind} values are univariate")))?;
        match uni.degree() {
            Degree::Finite(d) if d >= 1 => {
                check_cap("enumeration order", d, caps.enumeration)?;
                vec![d]
            }
            _ => Vec::new(),
        }
    } else {
        check_cap("enumeration order", n_bound, caps.enumeration)?;
        (1..=n_bound).collect()
    };
    let matches = scan(&orders, kind, p, caps)?;
    Ok(RecognitionResult {
        poly: kind.to_string(),
        target: p.clone(),
        matches,
        method: Method::Brute,
        bound: orders.last().copied().unwrap_or(0),
        orders,
    })
}

/// Outcome of looking a polynomial up in an indexed family.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyRecognition {
    pub poly: String,
    pub family: String,
    pub index: Option<usize>,
    pub method: Method,
    /// A hit identifies the graph only if the family member is P-unique.
    pub uniqueness_assumed: bool,
}

/// Family index whose member has `order` vertices.
fn index_for_order(family: &str, order: usize) -> Result<Option<usize>> {
    Ok(match family {
        "path" | "cycle" | "clique" | "empty" | "cyclesq" => Some(order),
        "wheel" => order.checked_sub(1),
        "ladder" | "mobius" | "cbipartite" => order.is_multiple_of(2).then_some(order / 2),
        _ => return Err(Error::input(format!("family '{family}' has no single-index order map"))),
    })
}

/// Reads the candidate index off the degree, builds that member and
/// compares.
pub fn family_recognize(p: &UniPoly, kind: &PolyKind, family: &str, caps: &Caps) -> Result<FamilyRecognition> {
    if !kind.degree_is_order() {
        return Err(Error::input(format!(
            "{kind} has no degree-to-order map; family recognition supports char, charL, mu and chrom"
        )));
    }
    let candidate = match p.degree() {
        Degree::Finite(d) if d >= 1 => index_for_order(family, d)?,
        _ => None,
    };
    let index = match candidate {
        Some(n) => match FamilySpec::indexed(family, n).and_then(|s| make_family(&s)) {
            Ok(g) => (compute_uni(&g, kind, caps)? == *p).then_some(n),
            Err(_) => None,
        },
        None => None,
    };
    Ok(FamilyRecognition {
        poly: kind.to_string(),
        family: family.to_string(),
        index,
        method: Method::FamilyRecurrence,
        uniqueness_assumed: true,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum UniquenessVerdict {
    UniqueUpTo { bound: usize },
    Counterexample { graph: Graph },
}

/// Compares `g` with every other class. Kinds whose degree is the order
/// are compared within the order of `g`; other kinds against all orders
/// up to `n_bound`.
pub fn check_p_unique(g: &Graph, kind: &PolyKind, n_bound: usize, caps: &Caps) -> Result<UniquenessVerdict> {
    if g.n() > n_bound {
        return Err(Error::input(format!(
            "graph has {} vertices, above the bound {n_bound}",
            g.n()
        )));
    }
    check_cap("enumeration order", n_bound, caps.enumeration)?;
    let own = canonical_form(g, caps.enumeration)?;
    let value = compute(g, kind, caps)?;
    let orders: Vec<usize> = if kind.degree_is_order() {
        vec![g.n()]
    } else {
        (1..=n_bound).collect()
    };
    for n in orders {
        let classes = enumerate_graphs(n, caps.enumeration)?;
        let hit = classes
            .par_iter()
            .map(|h| -> Result<bool> {
                Ok(canonical_form(h, caps.enumeration)? != own && compute(h, kind, caps)? == value)
            })
            .collect::<Result<Vec<bool>>>()?
            .into_iter()
            .position(|b| b);
        if let Some(i) = hit {
            return Ok(UniquenessVerdict::Counterexample {
                graph: classes[i].clone(),
            });
        }
    }
    Ok(UniquenessVerdict::UniqueUpTo { bound: n_bound })
}

/// One checked instance of an identity between a matching polynomial and
/// an orthogonal polynomial.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub identity: &'static str,
    pub n: usize,
    pub lhs: UniPoly,
    pub rhs: UniPoly,
    pub holds: bool,
}

/// Index ranges for [`identity_suite`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct IdentityBounds {
    /// Cycles run from 3, paths from 1.
    pub cycle_path: usize,
    pub clique: usize,
    pub bipartite: usize,
}

impl IdentityBounds {
    pub fn uniform(n: usize) -> Self {
        IdentityBounds {
            cycle_path: n,
            clique: n,
            bipartite: n,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub bounds: IdentityBounds,
    pub checks: Vec<IdentityCheck>,
    /// `μ(K_{n,n};X) = (-1)^n L_n(X^2)` without the `n!` factor, which
    /// only holds for `n <= 1`.
    pub laguerre_without_factorial: Vec<IdentityCheck>,
    pub all_hold: bool,
}

fn check(identity: &'static str, n: usize, lhs: UniPoly, rhs: UniPoly) -> IdentityCheck {
    IdentityCheck {
        identity,
        n,
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

fn family(spec: FamilySpec) -> Result<Graph> {
    make_family(&spec)
}

/// Checks `μ(C_n;2X) = 2T_n(X)`, `μ(P_n;2X) = U_n(X)`, `μ(K_n;X) = He_n(X)`
/// and `μ(K_{n,n};X) = (-1)^n n! L_n(X^2)`.
pub fn identity_suite(bounds: IdentityBounds) -> Result<IdentityReport> {
    let two_x = UniPoly::from_ints(&[0, 2]);
    let x_sq = UniPoly::from_ints(&[0, 0, 1]);
    let mut checks = Vec::new();
    for n in 3..=bounds.cycle_path {
        let mu = matching_defect(&family(FamilySpec::Cycle(n))?);
        checks.push(check("mu(C_n;2X) = 2 T_n(X)", n, mu.substitute(&two_x), chebyshev_t(n).scale(&rat(2))));
    }
    for n in 1..=bounds.cycle_path {
        let mu = matching_defect(&family(FamilySpec::Path(n))?);
        checks.push(check("mu(P_n;2X) = U_n(X)", n, mu.substitute(&two_x), chebyshev_u(n)));
    }
    for n in 1..=bounds.clique {
        let mu = matching_defect(&family(FamilySpec::Clique(n))?);
        checks.push(check("mu(K_n;X) = He_n(X)", n, mu, hermite_he(n)));
    }
    let mut laguerre_without_factorial = Vec::new();
    for n in 1..=bounds.bipartite {
        let mu = matching_defect(&family(FamilySpec::CompleteBipartite(n, n))?);
        let sign = rat(if n % 2 == 0 { 1 } else { -1 });
        let l = laguerre(n).substitute(&x_sq).scale(&sign);
        let with_factorial = l.scale(&Rational::from_integer(factorial(n as u32)));
        checks.push(check("mu(K_nn;X) = (-1)^n n! L_n(X^2)", n, mu.clone(), with_factorial));
        laguerre_without_factorial.push(check("mu(K_nn;X) = (-1)^n L_n(X^2)", n, mu, l));
    }
    let all_hold = checks.iter().all(|c| c.holds);
    Ok(IdentityReport {
        bounds,
        checks,
        laguerre_without_factorial,
        all_hold,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ScreenCheck {
    pub condition: &'static str,
    pub passed: bool,
}

/// Necessary conditions for being a chromatic polynomial. A failure rules
/// the polynomial out; passing everything proves nothing.
#[derive(Debug, Clone, Serialize)]
pub struct ScreenReport {
    pub input: UniPoly,
    pub checks: Vec<ScreenCheck>,
    pub all_passed: bool,
}

fn unimodal(seq: &[Rational]) -> bool {
    let peak = seq
        .windows(2)
        .position(|w| w[1] < w[0])
        .unwrap_or(seq.len().saturating_sub(1));
    seq[peak..].windows(2).all(|w| w[1] <= w[0])
}

fn log_concave(seq: &[Rational]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

pub fn chromatic_screen(p: &UniPoly) -> ScreenReport {
    let c = p.coeffs();
    let first_nonzero = c.iter().position(|a| *a != rat(0));
    // nonzero coefficients must run contiguously up to the leading term,
    // with signs alternating downwards from a positive leading coefficient
    let support = first_nonzero.map_or(&[][..], |i| &c[i..]);
    let n = c.len().saturating_sub(1);
    let alternating = !support.is_empty()
        && support.iter().enumerate().all(|(k, a)| {
            let deg = n - (support.len() - 1 - k);
            let want_positive = (n - deg).is_multiple_of(2);
            if want_positive {
                *a > rat(0)
            } else {
                *a < rat(0)
            }
        });
    let abs: Vec<Rational> = support.iter().map(|a| if *a < rat(0) { -a } else { a.clone() }).collect();
    let checks = vec![
        ScreenCheck {
            condition: "integer coefficients",
            passed: p.is_integral(),
        },
        ScreenCheck {
            condition: "monic",
            passed: p.is_monic(),
        },
        ScreenCheck {
            condition: "zero constant term",
            passed: !p.is_zero() && p.coeff(0) == rat(0),
        },
        ScreenCheck {
            condition: "alternating signs",
            passed: alternating,
        },
        ScreenCheck {
            condition: "unimodal absolute coefficients",
            passed: !abs.is_empty() && unimodal(&abs),
        },
        ScreenCheck {
            condition: "log-concave absolute coefficients",
            passed: !abs.is_empty() && log_concave(&abs),
        },
    ];
    ScreenReport {
        input: p.clone(),
        all_passed: checks.iter().all(|c| c.passed),
        checks,
    }
}

/// Builds `⊔_i a_i K_i` for `s = Σ a_i X^i` and checks that its maximal
/// clique polynomial is `s`.
pub fn maxcl_trivial_recognize(s: &UniPoly) -> Result<Graph> {
    let coeffs = s
        .integer_coeffs()
        .ok_or_else(|| Error::input("coefficients must be integers"))?;
    if coeffs.is_empty() {
        return Err(Error::input("the zero polynomial is not realised by a graph with vertices"));
    }
    if coeffs[0] != 0.into() {
        return Err(Error::input("constant term must be zero"));
    }
    let mut parts = Vec::new();
    let mut total = 0usize;
    for (i, a) in coeffs.iter().enumerate().skip(1) {
        let a: usize = a
            .try_into()
            .map_err(|_| Error::input(format!("coefficient of X^{i} must be a nonnegative integer")))?;
        total = total.saturating_add(a.saturating_mul(i));
        if total > crate::graph::MAX_VERTICES {
            return Err(Error::input(format!(
                "witness would need more than {} vertices",
                crate::graph::MAX_VERTICES
            )));
        }
        for _ in 0..a {
            parts.push(Graph::complete(i)?);
        }
    }
    let g = disjoint_union(&parts)?;
    assert_eq!(&maxcl(&g), s, "maxcl of the clique union must reproduce the input");
    Ok(g)
}
