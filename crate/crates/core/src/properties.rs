//! Registry of decidable, isomorphism-invariant graph properties.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, enumerate_graphs, make_family, CanonicalForm, FamilySpec, Graph};

/// What the property tests. Every variant is a pure function of the graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PropertyKind {
    Edgeless,
    Clique,
    Connected,
    /// At least two components; `K_1` is connected.
    Disconnected,
    Forest,
    /// Every component is `K_1` or `K_2`.
    MatchLike,
    /// Exactly the cycle `C_i`.
    CycleExactly(usize),
    /// `C_i` plus any number of isolated vertices.
    CyclePlusIsolated(usize),
    /// Membership in an explicit finite set of graphs, e.g. `{K2, E2}`.
    FiniteSet(Vec<CanonicalForm>),
    Not(Box<PropertyKind>),
}

impl PropertyKind {
    fn holds(&self, g: &Graph) -> bool {
        match self {
            PropertyKind::Edgeless => g.edge_count() == 0,
            PropertyKind::Clique => g.edge_count() == g.n() * (g.n() - 1) / 2,
            PropertyKind::Connected => g.is_connected(),
            PropertyKind::Disconnected => g.component_count() >= 2,
            PropertyKind::Forest => g.edge_count() + g.component_count() == g.n(),
            PropertyKind::MatchLike => (0..g.n()).all(|v| g.degree(v) <= 1),
            PropertyKind::CycleExactly(i) => {
                g.n() == *i && (0..g.n()).all(|v| g.degree(v) == 2) && g.is_connected()
            }
            PropertyKind::CyclePlusIsolated(i) => {
                let on_cycle = (0..g.n()).filter(|&v| g.degree(v) == 2).count();
                on_cycle == *i
                    && (0..g.n()).all(|v| matches!(g.degree(v), 0 | 2))
                    && g.component_count() == 1 + g.n() - i
            }
            PropertyKind::FiniteSet(members) => {
                members.iter().any(|f| f.n() == g.n())
                    && canonical_form(g, usize::MAX)
                        .map(|cf| members.contains(&cf))
                        .unwrap_or(false)
            }
            PropertyKind::Not(inner) => !inner.holds(g),
        }
    }
}

/// Whether the property is closed under adding an isolated vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureFlag {
    Undeclared,
    /// Checked on every class with fewer than `bound` vertices.
    VerifiedUpTo(usize),
    /// `witness` has the property but `witness + K_1` does not.
    Refuted(Graph),
}

/// A named graph property.
///
/// `contains_null` decides whether the empty vertex set counts as a member
/// where a caller needs that (the constant term of a vertex-subset sum).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphProperty {
    pub name: String,
    pub kind: PropertyKind,
    pub contains_null: bool,
    pub closure_isolated: ClosureFlag,
}

/// Verdict of [`check_closed_isolated`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureVerdict {
    HoldsUpTo(usize),
    Witness(Graph),
}

impl GraphProperty {
    pub fn new(name: impl Into<String>, kind: PropertyKind, contains_null: bool) -> Self {
        GraphProperty {
            name: name.into(),
            kind,
            contains_null,
            closure_isolated: ClosureFlag::Undeclared,
        }
    }

    pub fn evaluate(&self, g: &Graph) -> bool {
        self.kind.holds(g)
    }

    pub fn closure_verified(&self) -> bool {
        matches!(self.closure_isolated, ClosureFlag::VerifiedUpTo(_))
    }

    /// Runs [`check_closed_isolated`] and records the outcome.
    pub fn with_closure_checked(mut self, bound: usize, cap: usize) -> Result<Self> {
        self.closure_isolated = match check_closed_isolated(&self, bound, cap)? {
            ClosureVerdict::HoldsUpTo(b) => ClosureFlag::VerifiedUpTo(b),
            ClosureVerdict::Witness(g) => ClosureFlag::Refuted(g),
        };
        Ok(self)
    }
}

impl fmt::Display for GraphProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

/// The names accepted by [`builtin`].
pub const BUILTIN_NAMES: &[&str] = &[
    "edgeless",
    "clique",
    "connected",
    "disconnected",
    "forest",
    "match_like",
    "only_K1",
    "pair_K2_E2",
    "triple_K1_K2_E2",
    "cycle_exactly:<i>",
    "cycle_plus_isolated:<i>",
];

fn small_graph(token: &str) -> Result<Graph> {
    let bad = || Error::input(format!("unknown graph '{token}' in set(...); use K<n>, E<n>, C<n> or P<n>"));
    let (head, num) = token.split_at(1.min(token.len()));
    let n: usize = num.parse().map_err(|_| bad())?;
    let spec = match head {
        "K" => FamilySpec::Clique(n),
        "E" => FamilySpec::Empty(n),
        "C" => FamilySpec::Cycle(n),
        "P" => FamilySpec::Path(n),
        _ => return Err(bad()),
    };
    make_family(&spec)
}

/// `set(G1,...)`: membership in a finite list of small graphs.
pub fn finite_set(tokens: &[&str]) -> Result<GraphProperty> {
    let mut members = Vec::new();
    for t in tokens {
        let g = small_graph(t.trim())?;
        members.push(canonical_form(&g, usize::MAX)?);
    }
    members.sort();
    members.dedup();
    Ok(GraphProperty::new(
        format!("set({})", tokens.join(",")),
        PropertyKind::FiniteSet(members),
        false,
    ))
}

fn parse_index(name: &str, arg: &str) -> Result<usize> {
    let i: usize = arg
        .parse()
        .map_err(|_| Error::input(format!("{name}: malformed index '{arg}'")))?;
    if i < 3 {
        return Err(Error::input(format!("{name}: cycle length must be >= 3")));
    }
    Ok(i)
}

/// Looks up a builtin property by registry name.
pub fn builtin(name: &str) -> Result<GraphProperty> {
    let simple = |kind: PropertyKind| GraphProperty::new(name, kind, false);
    Ok(match name {
        "edgeless" => GraphProperty::new(name, PropertyKind::Edgeless, true),
        "clique" => simple(PropertyKind::Clique),
        "connected" => simple(PropertyKind::Connected),
        "disconnected" => simple(PropertyKind::Disconnected),
        "forest" => simple(PropertyKind::Forest),
        "match_like" => simple(PropertyKind::MatchLike),
        "only_K1" => finite_set(&["K1"])?,
        "pair_K2_E2" => finite_set(&["K2", "E2"])?,
        "triple_K1_K2_E2" => finite_set(&["K1", "K2", "E2"])?,
        _ => {
            if let Some(i) = name.strip_prefix("cycle_exactly:") {
                simple(PropertyKind::CycleExactly(parse_index(name, i)?))
            } else if let Some(i) = name.strip_prefix("cycle_plus_isolated:") {
                simple(PropertyKind::CyclePlusIsolated(parse_index(name, i)?))
            } else {
                return Err(Error::input(format!(
                    "unknown property '{name}'; known: {}",
                    BUILTIN_NAMES.join(", ")
                )));
            }
        }
    })
}

/// `G - C`: negated predicate and null-membership, closure undeclared.
pub fn complement_property(c: &GraphProperty) -> GraphProperty {
    let (kind, name) = match &c.kind {
        PropertyKind::Not(inner) => (
            (**inner).clone(),
            c.name
                .strip_prefix("not(")
                .and_then(|s| s.strip_suffix(')'))
                .unwrap_or(&c.name)
                .to_string(),
        ),
        other => (PropertyKind::Not(Box::new(other.clone())), format!("not({})", c.name)),
    };
    GraphProperty::new(name, kind, !c.contains_null)
}

/// Tests `g in d => g + K_1 in d` on every class with `1..bound` vertices and
/// returns the first counterexample in canonical order.
pub fn check_closed_isolated(d: &GraphProperty, bound: usize, cap: usize) -> Result<ClosureVerdict> {
    for n in 1..bound {
        for g in enumerate_graphs(n, cap)?.iter() {
            if d.evaluate(g) && !d.evaluate(&g.with_isolated_vertex()?) {
                return Ok(ClosureVerdict::Witness(g.clone()));
            }
        }
    }
    Ok(ClosureVerdict::HoldsUpTo(bound))
}

/// Free-function form of [`GraphProperty::evaluate`].
pub fn evaluate(c: &GraphProperty, g: &Graph) -> bool {
    c.evaluate(g)
}

impl FromStr for GraphProperty {
    type Err = Error;

    /// Parses the command-line property language: `edgeless`, `clique`,
    /// `connected`, `disconnected`, `forest`, `match`, `cycle:5`,
    /// `cycleE:5`, `set(K1)`, `set(K2,E2)`, `not(<property>)`, and the
    /// registry names accepted by [`builtin`].
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix("not(").and_then(|r| r.strip_suffix(')')) {
            return Ok(complement_property(&inner.parse()?));
        }
        if let Some(inner) = s.strip_prefix("set(").and_then(|r| r.strip_suffix(')')) {
            let tokens: Vec<&str> = inner.split(',').map(str::trim).collect();
            return finite_set(&tokens);
        }
        if s == "match" {
            let mut p = builtin("match_like")?;
            p.name = "match".into();
            return Ok(p);
        }
        if let Some(i) = s.strip_prefix("cycleE:") {
            let mut p = builtin(&format!("cycle_plus_isolated:{i}"))?;
            p.name = s.to_string();
            return Ok(p);
        }
        if let Some(i) = s.strip_prefix("cycle:") {
            let mut p = builtin(&format!("cycle_exactly:{i}"))?;
            p.name = s.to_string();
            return Ok(p);
        }
        builtin(s)
    }
}
