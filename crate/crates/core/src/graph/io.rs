use super::Graph;
use crate::error::{Error, Result};

/// Parses the text graph format: a header line `"n m"`, then `m` lines
/// `"u v"` with 0-based endpoints and `u < v`. Blank lines are ignored.
pub fn parse_graph_file(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::input("graph file is empty"))?;
    let nums = |line: &str| -> Result<(usize, usize)> {
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok())
                .ok_or_else(|| Error::input(format!("malformed graph file line '{line}'")))
        };
        let a = parse(it.next())?;
        let b = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::input(format!("trailing tokens in line '{line}'")));
        }
        Ok((a, b))
    };
    let (n, m) = nums(header)?;
    let mut g = Graph::empty(n)?;
    let mut seen = 0;
    for line in lines {
        let (u, v) = nums(line)?;
        if u >= v {
            return Err(Error::input(format!("edge line '{line}' must have u < v")));
        }
        if v >= n {
            return Err(Error::input(format!("edge {u}-{v} out of range for {n} vertices")));
        }
        if g.has_edge(u, v) {
            return Err(Error::input(format!("duplicate edge {u}-{v}")));
        }
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::input(format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

/// Inverse of [`parse_graph_file`]; edges in lexicographic order.
pub fn write_graph_file(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_and_writes() {
        let text = "4 3\n0 1\n\n1 2\n2 3\n";
        let g = parse_graph_file(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(write_graph_file(&g), "4 3\n0 1\n1 2\n2 3\n");
        assert_eq!(write_graph_file(&Graph::empty(2).unwrap()), "2 0\n");
    }

    #[test]
    fn rejects_malformed() {
        for bad in ["", "3", "3 1\n1 0\n", "3 1\n0 3\n", "3 2\n0 1\n", "3 2\n0 1\n0 1\n", "2 1\n0 x\n"] {
            assert!(parse_graph_file(bad).is_err(), "{bad:?}");
        }
    }
}
