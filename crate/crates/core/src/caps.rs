use serde::{Deserialize, Serialize};

/// Resource limits for the exponential algorithms. Exceeding one fails fast
/// with a cap error instead of running for hours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Max vertex count for sums over all vertex subsets.
    pub vertex_subsets: usize,
    /// Max edge count for sums over all edge subsets.
    pub edge_subsets: usize,
    /// Max vertex count for set-partition sums (generalized chromatic).
    pub partition: usize,
    /// Max order for isomorphism-class enumeration and canonical forms.
    pub enumeration: usize,
}

impl Caps {
    pub const DEFAULT: Caps = Caps {
        vertex_subsets: 20,
        edge_subsets: 20,
        partition: 10,
        enumeration: 7,
    };
}

impl Default for Caps {
    fn default() -> Self {
        Caps::DEFAULT
    }
}
