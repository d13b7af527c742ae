use std::fmt;
use std::str::FromStr;

use super::{disjoint_union, join, Graph};
use crate::error::{Error, Result};

/// The indexed graph families.
///
/// Vertex numbering is frozen so that every output is reproducible:
///
/// * `Path(n)`: `0 - 1 - ... - (n-1)`.
/// * `Cycle(n)`: `0..n` in circular order.
/// * `Clique(n)`, `Empty(n)`: vertices `0..n`.
/// * `CompleteBipartite(a, b)`: parts `0..a` and `a..a+b`.
/// * `Wheel(n)`: rim `0..n` as `Cycle(n)`, hub `n`.
/// * `Ladder(n)`: outer cycle `0..n`, inner cycle `n..2n`, rungs `i - (n+i)`.
/// * `Mobius(n)`: cycle `0..2n` plus chords `i - (i+n)`.
/// * `CycleSquare(n)`: `Cycle(n)` plus `i - (i+2 mod n)`.
/// * `Grid(a, b)`: vertex `r*b + c` for row `r < a`, column `c < b`.
/// * `Union(parts)`: parts laid out one after another.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    CompleteBipartite(usize, usize),
    Empty(usize),
    Wheel(usize),
    Ladder(usize),
    Mobius(usize),
    CycleSquare(usize),
    Grid(usize, usize),
    Union(Vec<FamilySpec>),
}

impl FamilySpec {
    /// Family name as used in the DSL.
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path(_) => "path",
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Clique(_) => "clique",
            FamilySpec::CompleteBipartite(..) => "cbipartite",
            FamilySpec::Empty(_) => "empty",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::Ladder(_) => "ladder",
            FamilySpec::Mobius(_) => "mobius",
            FamilySpec::CycleSquare(_) => "cyclesq",
            FamilySpec::Grid(..) => "grid",
            FamilySpec::Union(_) => "du",
        }
    }

    /// Builds a one-parameter family member from its name. `cbipartite`
    /// means the balanced `K_{n,n}` here.
    pub fn indexed(name: &str, n: usize) -> Result<Self> {
        Ok(match name {
            "path" => FamilySpec::Path(n),
            "cycle" => FamilySpec::Cycle(n),
            "clique" => FamilySpec::Clique(n),
            "cbipartite" => FamilySpec::CompleteBipartite(n, n),
            "empty" => FamilySpec::Empty(n),
            "wheel" => FamilySpec::Wheel(n),
            "ladder" => FamilySpec::Ladder(n),
            "mobius" => FamilySpec::Mobius(n),
            "cyclesq" => FamilySpec::CycleSquare(n),
            other => {
                return Err(Error::input(format!(
                    "'{other}' is not a one-parameter family"
                )))
            }
        })
    }

    /// Vertex count of the graph this spec describes.
    pub fn order(&self) -> usize {
        match self {
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Clique(n)
            | FamilySpec::Empty(n)
            | FamilySpec::CycleSquare(n) => *n,
            FamilySpec::Wheel(n) => n + 1,
            FamilySpec::Ladder(n) | FamilySpec::Mobius(n) => 2 * n,
            FamilySpec::CompleteBipartite(a, b) => a + b,
            FamilySpec::Grid(a, b) => a * b,
            FamilySpec::Union(parts) => parts.iter().map(FamilySpec::order).sum(),
        }
    }

    /// True for `cyclesq:n` with `n < 5`, where the distance-two closure is
    /// already the complete graph.
    pub fn is_degenerate(&self) -> bool {
        match self {
            FamilySpec::CycleSquare(n) => *n < 5,
            FamilySpec::Union(parts) => parts.iter().any(FamilySpec::is_degenerate),
            _ => false,
        }
    }

    fn check_bounds(&self) -> Result<()> {
        let fail = |bound: &str| Err(Error::input(format!("{self}: requires {bound}")));
        match *self {
            FamilySpec::Path(n) | FamilySpec::Clique(n) | FamilySpec::Empty(n) if n < 1 => {
                fail("n >= 1")
            }
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) | FamilySpec::Ladder(n) if n < 3 => {
                fail("n >= 3")
            }
            FamilySpec::CycleSquare(n) if n < 3 => fail("n >= 3"),
            FamilySpec::Mobius(n) if n < 2 => fail("n >= 2"),
            FamilySpec::CompleteBipartite(a, b) | FamilySpec::Grid(a, b) if a < 1 || b < 1 => {
                fail("both indices >= 1")
            }
            FamilySpec::Union(ref parts) if parts.is_empty() => fail("at least one part"),
            _ => Ok(()),
        }
    }
}

fn cycle_edges(g: &mut Graph, verts: &[usize]) -> Result<()> {
    for i in 0..verts.len() {
        g.add_edge(verts[i], verts[(i + 1) % verts.len()])?;
    }
    Ok(())
}

/// Builds the named family member with its documented vertex numbering.
pub fn make_family(spec: &FamilySpec) -> Result<Graph> {
    spec.check_bounds()?;
    match *spec {
        FamilySpec::Path(n) => {
            let mut g = Graph::empty(n)?;
            for v in 1..n {
                g.add_edge(v - 1, v)?;
            }
            Ok(g)
        }
        FamilySpec::Cycle(n) => {
            let mut g = Graph::empty(n)?;
            cycle_edges(&mut g, &(0..n).collect::<Vec<_>>())?;
            Ok(g)
        }
        FamilySpec::Clique(n) => Graph::complete(n),
        FamilySpec::Empty(n) => Graph::empty(n),
        FamilySpec::CompleteBipartite(a, b) => join(&Graph::empty(a)?, &Graph::empty(b)?),
        FamilySpec::Wheel(n) => join(&make_family(&FamilySpec::Cycle(n))?, &Graph::empty(1)?),
        FamilySpec::Ladder(n) => {
            let mut g = Graph::empty(2 * n)?;
            cycle_edges(&mut g, &(0..n).collect::<Vec<_>>())?;
            cycle_edges(&mut g, &(n..2 * n).collect::<Vec<_>>())?;
            for i in 0..n {
                g.add_edge(i, n + i)?;
            }
            Ok(g)
        }
        FamilySpec::Mobius(n) => {
            let mut g = make_family(&FamilySpec::Cycle(2 * n))?;
            for i in 0..n {
                g.add_edge(i, i + n)?;
            }
            Ok(g)
        }
        FamilySpec::CycleSquare(n) => {
            let mut g = make_family(&FamilySpec::Cycle(n))?;
            for i in 0..n {
                let j = (i + 2) % n;
                if i != j {
                    g.add_edge(i, j)?;
                }
            }
            Ok(g)
        }
        FamilySpec::Grid(a, b) => {
            let mut g = Graph::empty(a * b)?;
            for r in 0..a {
                for c in 0..b {
                    let v = r * b + c;
                    if c + 1 < b {
                        g.add_edge(v, v + 1)?;
                    }
                    if r + 1 < a {
                        g.add_edge(v, v + b)?;
                    }
                }
            }
            Ok(g)
        }
        FamilySpec::Union(ref parts) => {
            let gs = parts.iter().map(make_family).collect::<Result<Vec<_>>>()?;
            disjoint_union(&gs)
        }
    }
}

/// `C_i^*`: the cycle `C_{i-1}` (vertices `0..i-1`) with a pendant vertex
/// `i-1` attached to vertex 0. Similar to `C_i` but not isomorphic to it.
pub fn tailed_cycle(i: usize) -> Result<Graph> {
    if i < 4 {
        return Err(Error::input(format!(
            "tailed cycle needs i >= 4 (got {i}): C_(i-1) must be a cycle"
        )));
    }
    let mut g = disjoint_union(&[make_family(&FamilySpec::Cycle(i - 1))?, Graph::empty(1)?])?;
    g.add_edge(0, i - 1)?;
    Ok(g)
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::CompleteBipartite(a, b) => write!(f, "cbipartite:{a},{b}"),
            FamilySpec::Grid(a, b) => write!(f, "grid:{a}x{b}"),
            FamilySpec::Union(parts) => {
                let inner: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "du({})", inner.join(","))
            }
            FamilySpec::Path(n)
            | FamilySpec::Cycle(n)
            | FamilySpec::Clique(n)
            | FamilySpec::Empty(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Ladder(n)
            | FamilySpec::Mobius(n)
            | FamilySpec::CycleSquare(n) => write!(f, "{}:{n}", self.name()),
        }
    }
}

/// Splits on commas that are not nested inside parentheses.
pub(crate) fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::input(format!("unbalanced parentheses in '{s}'")));
                }
            }
            ',' if depth == 0 => {
                parts.push(s[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::input(format!("unbalanced parentheses in '{s}'")));
    }
    parts.push(s[start..].trim());
    Ok(parts)
}

fn parse_index(s: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| Error::input(format!("malformed family index '{s}'")))
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses `"path:7"`, `"cbipartite:3,3"`, `"grid:3x4"` and
    /// `"du(cycle:3,cycle:3)"`. A leading `"family:"` is accepted.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("family:").unwrap_or(s);
        if let Some(inner) = s.strip_prefix("du(").and_then(|r| r.strip_suffix(')')) {
            let parts = split_top_level(inner)?
                .into_iter()
                .map(str::parse)
                .collect::<Result<Vec<FamilySpec>>>()?;
            return Ok(FamilySpec::Union(parts));
        }
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| Error::input(format!("family spec '{s}' lacks ':<index>'")))?;
        let two = |sep: char| -> Result<(usize, usize)> {
            let (a, b) = args
                .split_once(sep)
                .ok_or_else(|| Error::input(format!("'{s}' needs two indices")))?;
            Ok((parse_index(a)?, parse_index(b)?))
        };
        Ok(match name {
            "cbipartite" => {
                let (a, b) = two(',')?;
                FamilySpec::CompleteBipartite(a, b)
            }
            "grid" => {
                let (a, b) = if args.contains('x') { two('x')? } else { two(',')? };
                FamilySpec::Grid(a, b)
            }
            other => FamilySpec::indexed(other, parse_index(args)?)?,
        })
    }
}
