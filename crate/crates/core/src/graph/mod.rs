//! Immutable simple graphs on at most 64 vertices.
//!
//! Adjacency is one `u64` per vertex: bit `j` of row `i` is set iff `i ~ j`.
//! Every edit returns a new value, so graphs can be shared freely between
//! scan workers.

mod iso;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use iso::{are_isomorphic, ISO_LIMIT};

/// Largest supported order: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
}

/// Length of a shortest cycle, or `Acyclic` for forests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GirthValue {
    Finite(usize),
    Acyclic,
}

impl GirthValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(g) => Some(g),
            GirthValue::Acyclic => None,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(g) => write!(f, "{g}"),
            GirthValue::Acyclic => f.write_str("acyclic"),
        }
    }
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(Graph { rows: vec![0; n] })
    }

    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut rows = Self::empty(n)?.rows;
        for &(i, j) in edges {
            insert_edge(&mut rows, i, j)?;
        }
        Ok(Graph { rows })
    }

    /// Wraps raw adjacency rows after checking symmetry and loop-freeness.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if !(1..=MAX_ORDER).contains(&n) {
            return Err(Error::OrderOutOfRange(n));
        }
        let valid = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (i, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::InvalidParams(format!(
                    "row {i} has bits beyond order {n}"
                )));
            }
            if row >> i & 1 == 1 {
                return Err(Error::Loop(i));
            }
            for j in bits(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::InvalidParams(format!(
                        "adjacency not symmetric at {i}-{j}"
                    )));
                }
            }
        }
        Ok(Graph { rows })
    }

    /// Trusted constructor for rows produced by the enumerator.
    pub(crate) fn from_rows_unchecked(rows: &[u64]) -> Self {
        debug_assert!(Self::from_rows(rows.to_vec()).is_ok());
        Graph {
            rows: rows.to_vec(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        i < self.order() && j < self.order() && self.rows[i] >> j & 1 == 1
    }

    /// `G + v_i v_j`.
    pub fn add_edge(&self, i: usize, j: usize) -> Result<Self> {
        let mut rows = self.rows.clone();
        insert_edge(&mut rows, i, j)?;
        Ok(Graph { rows })
    }

    pub fn remove_edge(&self, i: usize, j: usize) -> Result<Self> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if !self.has_edge(i, j) {
            return Err(Error::MissingEdge(i, j));
        }
        let mut rows = self.rows.clone();
        rows[i] &= !(1 << j);
        rows[j] &= !(1 << i);
        Ok(Graph { rows })
    }

    pub fn degree(&self, i: usize) -> Result<usize> {
        self.check_vertex(i)?;
        Ok(self.rows[i].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> {
        bits(self.rows[i])
    }

    /// Edges `(i, j)` with `i < j`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| bits(row >> i >> 1).map(move |k| (i, i + 1 + k)))
    }

    pub fn is_connected(&self) -> bool {
        rows_connected(&self.rows)
    }

    pub fn girth(&self) -> GirthValue {
        match rows_girth(&self.rows) {
            Some(g) => GirthValue::Finite(g),
            None => GirthValue::Acyclic,
        }
    }

    pub fn pendant_count(&self) -> usize {
        rows_pendants(&self.rows)
    }

    pub fn is_unicyclic(&self) -> bool {
        self.size() == self.order() && self.is_connected()
    }

    pub fn component_count(&self) -> usize {
        let n = self.order();
        let mut seen = 0u64;
        let mut count = 0;
        for v in 0..n {
            if seen >> v & 1 == 0 {
                seen |= reach(&self.rows, v);
                count += 1;
            }
        }
        count
    }

    /// Vertex sets of the connected components, each as a bitmask.
    pub fn components(&self) -> Vec<u64> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in 0..self.order() {
            if seen >> v & 1 == 0 {
                let c = reach(&self.rows, v);
                seen |= c;
                out.push(c);
            }
        }
        out
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Self> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::InvalidParams(format!(
                "permutation length {} != order {n}",
                perm.len()
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::InvalidParams("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        let mut rows = vec![0u64; n];
        for (i, j) in self.edges() {
            rows[perm[i]] |= 1 << perm[j];
            rows[perm[j]] |= 1 << perm[i];
        }
        Ok(Graph { rows })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.order();
        let total = n + other.order();
        if total > MAX_ORDER {
            return Err(Error::OrderOutOfRange(total));
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << n));
        Ok(Graph { rows })
    }

    fn check_vertex(&self, i: usize) -> Result<()> {
        if i >= self.order() {
            return Err(Error::VertexOutOfRange {
                vertex: i,
                order: self.order(),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.order())?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("])")
    }
}

fn insert_edge(rows: &mut [u64], i: usize, j: usize) -> Result<()> {
    let n = rows.len();
    for v in [i, j] {
        if v >= n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
    }
    if i == j {
        return Err(Error::Loop(i));
    }
    if rows[i] >> j & 1 == 1 {
        return Err(Error::DuplicateEdge(i, j));
    }
    rows[i] |= 1 << j;
    rows[j] |= 1 << i;
    Ok(())
}

/// Indices of the set bits of `word`, ascending.
pub(crate) fn bits(mut word: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if word == 0 {
            return None;
        }
        let b = word.trailing_zeros() as usize;
        word &= word - 1;
        Some(b)
    })
}

fn reach(rows: &[u64], start: usize) -> u64 {
    let mut seen = 1u64 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

pub(crate) fn rows_connected(rows: &[u64]) -> bool {
    let n = rows.len();
    reach(rows, 0).count_ones() as usize == n
}

pub(crate) fn rows_pendants(rows: &[u64]) -> usize {
    rows.iter().filter(|r| r.count_ones() == 1).count()
}

/// Shortest cycle length by breadth-first search from every vertex.
pub(crate) fn rows_girth(rows: &[u64]) -> Option<usize> {
    let n = rows.len();
    let mut best = usize::MAX;
    let mut dist = [u8::MAX; MAX_ORDER];
    let mut parent = [u8::MAX; MAX_ORDER];
    let mut queue = [0u8; MAX_ORDER];
    for root in 0..n {
        if rows[root].count_ones() < 2 {
            continue;
        }
        dist[..n].fill(u8::MAX);
        dist[root] = 0;
        parent[root] = u8::MAX;
        queue[0] = root as u8;
        let (mut head, mut tail) = (0, 1);
        'bfs: while head < tail {
            let u = queue[head] as usize;
            head += 1;
            // Any cycle found from here on has length >= 2 * dist[u].
            if 2 * dist[u] as usize >= best {
                break;
            }
            for w in bits(rows[u]) {
                if dist[w] == u8::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u as u8;
                    queue[tail] = w as u8;
                    tail += 1;
                } else if parent[u] as usize != w {
                    let len = dist[u] as usize + dist[w] as usize + 1;
                    if len < best {
                        best = len;
                        if best == 3 {
                            break 'bfs;
                        }
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}
