//! Distinctive power: comparing the equivalence relations that graph
//! invariants induce, over every isomorphism class up to a bound.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::{enumerate_up_to, make_family, tailed_cycle, disjoint_union, FamilySpec, Graph, SimilaritySignature};
use crate::invariants::{
    compute, dominating, gen_chromatic, gen_ind, gen_span, PolyKind, PolyValue,
};
use crate::poly::{rat, UniPoly};
use crate::properties::{complement_property, finite_set, ClosureFlag, GraphProperty};

/// A graph polynomial, or a property read as a 0/1 invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantHandle {
    Poly(PolyKind),
    Prop(GraphProperty),
}

impl fmt::Display for InvariantHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantHandle::Poly(k) => k.fmt(f),
            InvariantHandle::Prop(c) => write!(f, "prop:{c}"),
        }
    }
}

impl FromStr for InvariantHandle {
    type Err = Error;

    /// A polynomial kind as accepted by [`PolyKind`], or `prop:<property>`.
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().strip_prefix("prop:") {
            Some(c) => Ok(InvariantHandle::Prop(c.parse()?)),
            None => Ok(InvariantHandle::Poly(s.parse()?)),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(untagged)]
pub enum HandleValue {
    Poly(PolyValue),
    Bool(bool),
}

impl InvariantHandle {
    pub fn evaluate(&self, g: &Graph, caps: &Caps) -> Result<HandleValue> {
        Ok(match self {
            InvariantHandle::Poly(k) => HandleValue::Poly(compute(g, k, caps)?),
            InvariantHandle::Prop(c) => HandleValue::Bool(c.evaluate(g)),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Any two graphs.
    Dp,
    /// Only similar graphs (equal vertex, edge and component counts).
    Sdp,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dp" => Ok(Mode::Dp),
            "sdp" => Ok(Mode::Sdp),
            _ => Err(Error::input(format!("unknown mode '{s}'; expected dp or sdp"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Dp => "dp",
            Mode::Sdp => "sdp",
        })
    }
}

/// Verdict on "`weaker` ≤ `stronger`": equal `stronger` values force
/// equal `weaker` values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum DirectionVerdict {
    NoRefutationUpTo {
        bound: usize,
    },
    Refuted {
        g1: Graph,
        g2: Graph,
        /// Shared value of the stronger invariant.
        shared: HandleValue,
        weaker_g1: HandleValue,
        weaker_g2: HandleValue,
    },
}

impl DirectionVerdict {
    pub fn is_refuted(&self) -> bool {
        matches!(self, DirectionVerdict::Refuted { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub p: String,
    pub q: String,
    pub mode: Mode,
    pub bound: usize,
    pub classes: usize,
    /// `P ≤ Q`: `Q(G1) = Q(G2)` implies `P(G1) = P(G2)`.
    pub p_le_q: DirectionVerdict,
    /// `Q ≤ P`.
    pub q_le_p: DirectionVerdict,
}

/// First pair `(i, j)`, `i < j`, with equal key and differing `weaker`
/// value, in class order.
fn first_witness<K: std::hash::Hash + Eq>(keys: &[K], weaker: &[HandleValue]) -> Option<(usize, usize)> {
    let mut groups: HashMap<&K, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, key) in keys.iter().enumerate() {
        match groups.get(key) {
            None => {
                groups.insert(key, j);
            }
            Some(&i) => {
                if weaker[i] != weaker[j] && best.is_none_or(|(bi, _)| i < bi) {
                    best = Some((i, j));
                }
            }
        }
    }
    best
}

#[allow(clippy::too_many_arguments)]
fn direction(
    classes: &[Graph],
    weaker: &[HandleValue],
    stronger: &[HandleValue],
    sigs: &[SimilaritySignature],
    mode: Mode,
    bound: usize,
    weaker_handle: &InvariantHandle,
    stronger_handle: &InvariantHandle,
    caps: &Caps,
) -> Result<DirectionVerdict> {
    let hit = match mode {
        Mode::Dp => first_witness(stronger, weaker),
        Mode::Sdp => {
            let keys: Vec<(&HandleValue, SimilaritySignature)> = stronger.iter().zip(sigs.iter().copied()).collect();
            first_witness(&keys, weaker)
        }
    };
    let Some((i, j)) = hit else {
        return Ok(DirectionVerdict::NoRefutationUpTo { bound });
    };
    let (g1, g2) = (&classes[i], &classes[j]);
    // recompute from scratch so a reported witness never rests on cached values
    let shared = stronger_handle.evaluate(g1, caps)?;
    assert_eq!(shared, stronger_handle.evaluate(g2, caps)?);
    let (w1, w2) = (weaker_handle.evaluate(g1, caps)?, weaker_handle.evaluate(g2, caps)?);
    assert_ne!(w1, w2);
    if mode == Mode::Sdp {
        assert_eq!(g1.signature(), g2.signature());
    }
    Ok(DirectionVerdict::Refuted {
        g1: g1.clone(),
        g2: g2.clone(),
        shared,
        weaker_g1: w1,
        weaker_g2: w2,
    })
}

fn evaluate_all(h: &InvariantHandle, classes: &[Graph], caps: &Caps) -> Result<Vec<HandleValue>> {
    classes.par_iter().map(|g| h.evaluate(g, caps)).collect()
}

/// Scans every class on `1..=n_bound` vertices in both directions.
pub fn compare(p: &InvariantHandle, q: &InvariantHandle, mode: Mode, n_bound: usize, caps: &Caps) -> Result<ComparisonReport> {
    let classes = enumerate_up_to(n_bound, caps.enumeration)?;
    let pv = evaluate_all(p, &classes, caps)?;
    let qv = evaluate_all(q, &classes, caps)?;
    let sigs: Vec<SimilaritySignature> = classes.iter().map(Graph::signature).collect();
    Ok(ComparisonReport {
        p: p.to_string(),
        q: q.to_string(),
        mode,
        bound: n_bound,
        classes: classes.len(),
        p_le_q: direction(&classes, &pv, &qv, &sigs, mode, n_bound, p, q, caps)?,
        q_le_p: direction(&classes, &qv, &pv, &sigs, mode, n_bound, q, p, caps)?,
    })
}

/// How two properties relate as 0/1 invariants.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "relation", rename_all = "kebab-case")]
pub enum PropertyRelation {
    Equal { bound: usize },
    Complement { bound: usize },
    /// First class in each membership region, where the region is nonempty.
    Incomparable {
        both: Option<Graph>,
        only_first: Option<Graph>,
        only_second: Option<Graph>,
        neither: Option<Graph>,
    },
}

pub fn property_relation(c1: &GraphProperty, c2: &GraphProperty, n_bound: usize, caps: &Caps) -> Result<PropertyRelation> {
    let classes = enumerate_up_to(n_bound, caps.enumeration)?;
    let mut regions: [Option<Graph>; 4] = Default::default();
    for g in &classes {
        let idx = match (c1.evaluate(g), c2.evaluate(g)) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        };
        regions[idx].get_or_insert_with(|| g.clone());
    }
    let [both, only_first, only_second, neither] = regions;
    Ok(if only_first.is_none() && only_second.is_none() {
        PropertyRelation::Equal { bound: n_bound }
    } else if both.is_none() && neither.is_none() {
        PropertyRelation::Complement { bound: n_bound }
    } else {
        PropertyRelation::Incomparable {
            both,
            only_first,
            only_second,
            neither,
        }
    })
}

/// Which family of polynomials indexed by a property is being separated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SuiteKind {
    Ind,
    Span,
    GenChrom,
}

impl FromStr for SuiteKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ind" => Ok(SuiteKind::Ind),
            "span" => Ok(SuiteKind::Span),
            "genchrom" => Ok(SuiteKind::GenChrom),
            _ => Err(Error::input(format!("unknown suite kind '{s}'; expected ind, span or genchrom"))),
        }
    }
}

impl SuiteKind {
    fn property(self, i: usize) -> Result<GraphProperty> {
        match self {
            SuiteKind::Span => format!("cycleE:{i}").parse(),
            _ => format!("cycle:{i}").parse(),
        }
    }

    fn value(self, g: &Graph, c: &GraphProperty, caps: &Caps) -> Result<UniPoly> {
        match self {
            SuiteKind::Ind => gen_ind(g, c, caps),
            SuiteKind::Span => gen_span(g, c, caps),
            SuiteKind::GenChrom => gen_chromatic(g, c, caps),
        }
    }
}

/// `k` disjoint copies of `C_i`.
pub fn cycle_copies(i: usize, k: usize) -> Result<Graph> {
    let c = make_family(&FamilySpec::Cycle(i))?;
    disjoint_union(&vec![c; k])
}

/// `k - 1` tailed cycles plus one `C_i`. For `i = 3` there is no tailed
/// cycle (it would need a 2-cycle); the path `P_3` stands in, which is not
/// similar to `C_3`.
pub fn hat_copies(i: usize, k: usize) -> Result<Graph> {
    let tail = if i >= 4 {
        tailed_cycle(i)?
    } else {
        make_family(&FamilySpec::Path(3))?
    };
    let mut parts = vec![tail; k.saturating_sub(1)];
    parts.push(make_family(&FamilySpec::Cycle(i))?);
    disjoint_union(&parts)
}

#[derive(Debug, Clone, Serialize)]
pub struct ValueCheck {
    pub property: String,
    pub graph: String,
    pub value: UniPoly,
    pub expected: UniPoly,
    pub matches: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct IncomparabilityReport {
    pub kind: SuiteKind,
    pub i: usize,
    pub j: usize,
    pub checks: Vec<ValueCheck>,
    /// Witness `(G_i^2, Ĝ_i^2)` refutes `P_{C_i} ≤ P_{C_j}`.
    pub refutes_i_le_j: bool,
    /// Witness `(G_j^2, Ĝ_j^2)` refutes `P_{C_j} ≤ P_{C_i}`.
    pub refutes_j_le_i: bool,
    /// Whether each witness pair is similar (fails for index 3).
    pub similar_i: bool,
    pub similar_j: bool,
    pub passed: bool,
}

/// Builds `G_a^2 = C_a ⊔ C_a` and `Ĝ_a^2 = C_a^* ⊔ C_a` for `a ∈ {i, j}` and
/// checks the exact values of the two property-indexed polynomials on them.
///
/// Vertex-subset and edge-subset sums need `|i - j| >= 2`: a tailed `C_a`
/// contains `C_{a-1}`, so adjacent indices would not separate.
pub fn incomparability_suite(kind: SuiteKind, i: usize, j: usize, caps: &Caps) -> Result<IncomparabilityReport> {
    if i < 3 || j < 3 || i == j {
        return Err(Error::input(format!("need distinct cycle lengths >= 3, got ({i}, {j})")));
    }
    if kind != SuiteKind::GenChrom && i.abs_diff(j) < 2 {
        return Err(Error::input(format!(
            "{kind:?} separation needs i != j+1 and j != i+1, got ({i}, {j})"
        )));
    }
    let x_pow = |e: usize, c: i64| UniPoly::monomial(rat(c), e);
    let zero = UniPoly::zero();
    let mut checks = Vec::new();
    let mut refutes = [false; 2];
    let mut similar = [false; 2];
    for (slot, (a, b)) in [(i, j), (j, i)].into_iter().enumerate() {
        let g = cycle_copies(a, 2)?;
        let hat = hat_copies(a, 2)?;
        similar[slot] = g.signature() == hat.signature();
        let (ca, cb) = (kind.property(a)?, kind.property(b)?);
        let (own_g, own_hat) = match kind {
            SuiteKind::GenChrom => (UniPoly::from_ints(&[0, -1, 1]), zero.clone()),
            _ => (x_pow(a, 2), x_pow(a, 1)),
        };
        let expected = [
            (&ca, &g, format!("G_{a}^2"), own_g),
            (&ca, &hat, format!("hat G_{a}^2"), own_hat),
            (&cb, &g, format!("G_{a}^2"), zero.clone()),
            (&cb, &hat, format!("hat G_{a}^2"), zero.clone()),
        ];
        let mut values = Vec::new();
        for (c, graph, name, want) in expected {
            let value = kind.value(graph, c, caps)?;
            values.push(value.clone());
            checks.push(ValueCheck {
                property: c.name.clone(),
                graph: name,
                matches: value == want,
                value,
                expected: want,
            });
        }
        refutes[slot] = values[0] != values[1] && values[2] == values[3];
    }
    let passed = checks.iter().all(|c| c.matches) && refutes.iter().all(|&r| r);
    Ok(IncomparabilityReport {
        kind,
        i,
        j,
        checks,
        refutes_i_le_j: refutes[0],
        refutes_j_le_i: refutes[1],
        similar_i: similar[0],
        similar_j: similar[1],
        passed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementCheckReport {
    pub property: String,
    pub complement: String,
    pub kind: SuiteKind,
    pub sdp: ComparisonReport,
    pub dp: ComparisonReport,
    /// No refutation in either direction under s.d.p.
    pub sdp_equivalent: bool,
}

/// Compares `P_c` with `P_{not c}` under both d.p. and s.d.p.
pub fn sdp_equiv_complement_check(c: &GraphProperty, kind: SuiteKind, n_bound: usize, caps: &Caps) -> Result<ComplementCheckReport> {
    if kind == SuiteKind::Span {
        let checked = c.clone().with_closure_checked(n_bound, caps.enumeration)?;
        if let ClosureFlag::Refuted(w) = checked.closure_isolated {
            return Err(Error::input(format!(
                "{c} is not closed under adding isolated vertices (witness {w:?})"
            )));
        }
    }
    let comp = complement_property(c);
    let wrap = |p: GraphProperty| {
        InvariantHandle::Poly(match kind {
            SuiteKind::Ind => PolyKind::Ind(p),
            SuiteKind::Span => PolyKind::Span(p),
            SuiteKind::GenChrom => PolyKind::GenChrom(p),
        })
    };
    let (hp, hq) = (wrap(c.clone()), wrap(comp.clone()));
    let sdp = compare(&hp, &hq, Mode::Sdp, n_bound, caps)?;
    let dp = compare(&hp, &hq, Mode::Dp, n_bound, caps)?;
    Ok(ComplementCheckReport {
        property: c.name.clone(),
        complement: comp.name,
        kind,
        sdp_equivalent: !sdp.p_le_q.is_refuted() && !sdp.q_le_p.is_refuted(),
        sdp,
        dp,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PatternCheck {
    /// Small graphs assumed to lie in the property.
    pub members: Vec<String>,
    pub detail: String,
    pub clash: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DomBranch {
    pub branch: &'static str,
    pub patterns: Vec<PatternCheck>,
    /// Every membership pattern clashes with the domination polynomial.
    pub contradiction: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct DomReport {
    pub dom_k2: UniPoly,
    pub dom_e2: UniPoly,
    pub branches: Vec<DomBranch>,
    pub all_contradictions: bool,
}

fn subsets_of<'a>(items: &[&'a str]) -> Vec<Vec<&'a str>> {
    (0..1u32 << items.len())
        .map(|m| (0..items.len()).filter(|b| m >> b & 1 == 1).map(|b| items[b]).collect())
        .collect()
}

fn pattern_property(members: &[&str], contains_null: bool) -> Result<GraphProperty> {
    let mut c = if members.is_empty() {
        GraphProperty::new("set()", crate::properties::PropertyKind::FiniteSet(Vec::new()), false)
    } else {
        finite_set(members)?
    };
    c.contains_null = contains_null;
    Ok(c)
}

/// Shows, on two-vertex graphs, that no vertex-subset sum, edge-subset sum
/// or generalized chromatic polynomial equals the domination polynomial,
/// whatever the property. Only membership of graphs on at most two
/// vertices matters on these graphs, so every membership pattern is tried.
pub fn dom_inexpressibility_suite(caps: &Caps) -> Result<DomReport> {
    let k2 = make_family(&FamilySpec::Clique(2))?;
    let e2 = make_family(&FamilySpec::Empty(2))?;
    let dom_k2 = dominating(&k2, caps)?;
    let dom_e2 = dominating(&e2, caps)?;

    let mut ind = Vec::new();
    for members in subsets_of(&["K1", "E2", "K2"]) {
        for null in [false, true] {
            let c = pattern_property(&members, null)?;
            let (ie, ik) = (gen_ind(&e2, &c, caps)?, gen_ind(&k2, &c, caps)?);
            ind.push(PatternCheck {
                members: members.iter().map(|s| s.to_string()).collect(),
                detail: format!(
                    "[X] ind(E2) = {} vs DOM(E2) {}; [X] ind(K2) = {} vs DOM(K2) {}",
                    ie.coeff(1),
                    dom_e2.coeff(1),
                    ik.coeff(1),
                    dom_k2.coeff(1)
                ),
                clash: ie.coeff(1) != dom_e2.coeff(1) || ik.coeff(1) != dom_k2.coeff(1),
            });
        }
    }

    let mut span = Vec::new();
    for members in subsets_of(&["E2", "K2"]) {
        let c = pattern_property(&members, false)?;
        let sk = gen_span(&k2, &c, caps)?;
        span.push(PatternCheck {
            members: members.iter().map(|s| s.to_string()).collect(),
            detail: format!("[X] span(K2) = {} vs DOM(K2) {}", sk.coeff(1), dom_k2.coeff(1)),
            clash: sk.coeff(1) < dom_k2.coeff(1),
        });
    }

    let mut chrom = Vec::new();
    let dom_at_one = dom_k2.eval(&rat(1));
    for members in subsets_of(&["K1", "K2"]) {
        let c = pattern_property(&members, false)?;
        let at_one = gen_chromatic(&k2, &c, caps)?.eval(&rat(1));
        chrom.push(PatternCheck {
            members: members.iter().map(|s| s.to_string()).collect(),
            detail: format!("genchrom(K2;1) = {at_one} vs DOM(K2;1) = {dom_at_one}"),
            clash: at_one != dom_at_one,
        });
    }

    let branches: Vec<DomBranch> = [("ind", ind), ("span", span), ("genchrom", chrom)]
        .into_iter()
        .map(|(branch, patterns)| DomBranch {
            branch,
            contradiction: patterns.iter().all(|p| p.clash),
            patterns,
        })
        .collect();
    Ok(DomReport {
        all_contradictions: branches.iter().all(|b| b.contradiction),
        dom_k2,
        dom_e2,
        branches,
    })
}
