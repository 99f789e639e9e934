//! Degree-based edge weights and their sums over a graph.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Absolute tolerance for equality of index values. A strict inequality
/// requires a margin larger than this.
pub const EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IndexKind {
    /// Euler Sombor: `sqrt(a^2 + b^2 + ab)`.
    Eus,
    /// Sombor: `sqrt(a^2 + b^2)`.
    So,
    /// Elliptic Sombor: `(a + b) sqrt(a^2 + b^2)`.
    Eso,
}

impl IndexKind {
    pub const ALL: [IndexKind; 3] = [IndexKind::Eus, IndexKind::So, IndexKind::Eso];

    pub fn name(self) -> &'static str {
        match self {
            IndexKind::Eus => "eus",
            IndexKind::So => "so",
            IndexKind::Eso => "eso",
        }
    }

    /// Weight of an edge whose endpoints have degrees `a` and `b`.
    #[inline]
    pub fn weight(self, a: usize, b: usize) -> f64 {
        let (a, b) = (a as f64, b as f64);
        match self {
            IndexKind::Eus => (a * a + b * b + a * b).sqrt(),
            IndexKind::So => (a * a + b * b).sqrt(),
            IndexKind::Eso => (a + b) * (a * a + b * b).sqrt(),
        }
    }
}

impl fmt::Display for IndexKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IndexKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "eus" => Ok(IndexKind::Eus),
            "so" => Ok(IndexKind::So),
            "eso" => Ok(IndexKind::Eso),
            _ => Err(Error::InvalidParams(format!("unknown index {s:?}"))),
        }
    }
}

pub fn edge_weight(kind: IndexKind, di: usize, dj: usize) -> Result<f64> {
    if di == 0 || dj == 0 {
        return Err(Error::ZeroDegree);
    }
    Ok(kind.weight(di, dj))
}

pub fn index_value(g: &Graph, kind: IndexKind) -> f64 {
    rows_index(g.rows(), kind)
}

pub(crate) fn rows_index(rows: &[u64], kind: IndexKind) -> f64 {
    let mut deg = [0usize; crate::graph::MAX_ORDER];
    for (d, r) in deg.iter_mut().zip(rows) {
        *d = r.count_ones() as usize;
    }
    let mut total = 0.0;
    for (i, &row) in rows.iter().enumerate() {
        let mut upper = row >> i >> 1;
        while upper != 0 {
            let j = i + 1 + upper.trailing_zeros() as usize;
            upper &= upper - 1;
            total += kind.weight(deg[i], deg[j]);
        }
    }
    total
}

/// Euler Sombor index, the crate's primary invariant.
pub fn eus(g: &Graph) -> f64 {
    index_value(g, IndexKind::Eus)
}

/// `a` and `b` agree within [`EPS`].
pub fn approx_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= EPS
}

/// `a` exceeds `b` by more than [`EPS`].
pub fn strictly_greater(a: f64, b: f64) -> bool {
    a - b > EPS
}
