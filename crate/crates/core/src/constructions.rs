//! Builders for the named graph families.
//!
//! Vertex layout is fixed so that graph6 output is stable: cycle vertices
//! come first with the hub at vertex 0, then path vertices, then pendants.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    Graph::from_edges(n, &edges)
}

/// Star with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Cycle `C_g` on vertices `0..g` with a pendant path on `g..n` hanging
/// from vertex 0. `tadpole(n, n)` is the cycle itself.
pub fn tadpole(n: usize, g: usize) -> Result<Graph> {
    if g < 3 || g > n {
        return Err(Error::InvalidParams(format!(
            "tadpole needs 3 <= g <= n, got n={n}, g={g}"
        )));
    }
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut prev = 0;
    for v in g..n {
        edges.push((prev, v));
        prev = v;
    }
    Graph::from_edges(n, &edges)
}

/// Unicyclic graph with a single vertex of degree above two, sitting on
/// the cycle and carrying `k` pendant edges and `l` pendant paths of
/// length at least two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct H1Params {
    pub n: usize,
    pub g: usize,
    pub k: usize,
    pub l: usize,
}

impl H1Params {
    pub fn new(n: usize, g: usize, k: usize, l: usize) -> Result<Self> {
        let p = H1Params { n, g, k, l };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        let H1Params { n, g, k, l } = *self;
        let bad = |why: &str| {
            Err(Error::InvalidParams(format!(
                "H1(n={n}, g={g}, k={k}, l={l}): {why}"
            )))
        };
        if g < 3 {
            return bad("girth must be >= 3");
        }
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        if n < g + k + 2 * l {
            return bad("need n >= g + k + 2l");
        }
        if l == 0 && n != g + k {
            return bad("with no long paths n must equal g + k");
        }
        Ok(())
    }

    pub fn hub_degree(&self) -> usize {
        self.k + self.l + 2
    }

    /// Vertices beyond the minimum two per long path.
    pub fn surplus(&self) -> usize {
        self.n - self.g - self.k - 2 * self.l
    }

    /// Every valid `(k, l)` for fixed order and girth, ordered by `l` then `k`.
    pub fn feasible(n: usize, g: usize) -> Vec<H1Params> {
        if g < 3 || g > n || n > MAX_ORDER {
            return Vec::new();
        }
        let mut out = vec![H1Params {
            n,
            g,
            k: n - g,
            l: 0,
        }];
        for l in 1..=(n - g) / 2 {
            for k in 0..=(n - g - 2 * l) {
                out.push(H1Params { n, g, k, l });
            }
        }
        out
    }
}

/// H1 with all surplus vertices on the first long path.
pub fn h1(params: H1Params) -> Result<Graph> {
    params.validate()?;
    let mut lengths = vec![2; params.l];
    if let Some(first) = lengths.first_mut() {
        *first += params.surplus();
    }
    h1_with_path_lengths(params.g, params.k, &lengths)
}

/// H1 with explicit long-path lengths (number of vertices on each path,
/// excluding the hub). Each length must be at least 2.
pub fn h1_with_path_lengths(g: usize, k: usize, lengths: &[usize]) -> Result<Graph> {
    if g < 3 {
        return Err(Error::InvalidParams(format!("girth must be >= 3, got {g}")));
    }
    if lengths.iter().any(|&len| len < 2) {
        return Err(Error::InvalidParams(
            "long pendant paths need at least 2 vertices".into(),
        ));
    }
    let n = g + k + lengths.iter().sum::<usize>();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange(n));
    }
    let mut edges: Vec<_> = (0..g).map(|i| (i, (i + 1) % g)).collect();
    let mut next = g;
    for &len in lengths {
        let mut prev = 0;
        for v in next..next + len {
            edges.push((prev, v));
            prev = v;
        }
        next += len;
    }
    for v in next..next + k {
        edges.push((0, v));
    }
    Graph::from_edges(n, &edges)
}

/// Complete graph `K_{n-p}` on `0..n-p` with `p` pendants on vertex 0.
pub fn pineapple(n: usize, p: usize) -> Result<Graph> {
    if n == 0 || p >= n {
        return Err(Error::InvalidParams(format!(
            "pineapple needs 0 <= p <= n-1, got n={n}, p={p}"
        )));
    }
    let c = n - p;
    let mut edges: Vec<_> = (0..c)
        .flat_map(|i| (i + 1..c).map(move |j| (i, j)))
        .collect();
    edges.extend((c..n).map(|v| (0, v)));
    Graph::from_edges(n, &edges)
}

/// Pendant counts `a_1..a_c` attached to the vertices of `K_c`, `c >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PendantVector(Vec<usize>);

impl PendantVector {
    pub fn new(counts: Vec<usize>) -> Result<Self> {
        if counts.len() < 2 {
            return Err(Error::InvalidParams(format!(
                "pendant vector needs at least 2 clique vertices, got {}",
                counts.len()
            )));
        }
        let n = counts.len() + counts.iter().sum::<usize>();
        if n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(PendantVector(counts))
    }

    pub fn counts(&self) -> &[usize] {
        &self.0
    }

    pub fn clique_size(&self) -> usize {
        self.0.len()
    }

    pub fn pendants(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn order(&self) -> usize {
        self.clique_size() + self.pendants()
    }

    /// Moves one pendant from clique vertex `from` to clique vertex `to`.
    pub fn shifted(&self, from: usize, to: usize) -> Result<Self> {
        let c = self.clique_size();
        if from >= c || to >= c || from == to || self.0[from] == 0 {
            return Err(Error::InvalidParams(format!(
                "cannot shift a pendant from {from} to {to} in {:?}",
                self.0
            )));
        }
        let mut counts = self.0.clone();
        counts[from] -= 1;
        counts[to] += 1;
        Ok(PendantVector(counts))
    }
}

/// `K_c` on `0..c`; pendants follow in clique-vertex order.
pub fn clique_with_pendants(a: &PendantVector) -> Result<Graph> {
    let c = a.clique_size();
    let n = a.order();
    let mut edges: Vec<_> = (0..c)
        .flat_map(|i| (i + 1..c).map(move |j| (i, j)))
        .collect();
    let mut next = c;
    for (i, &count) in a.counts().iter().enumerate() {
        edges.extend((next..next + count).map(|v| (i, v)));
        next += count;
    }
    Graph::from_edges(n, &edges)
}
