//! Exhaustive enumeration of labelled graphs and extremal scans over a
//! graph class.
//!
//! A labelled graph on `n` vertices is a bitmask over the `C(n, 2)` vertex
//! pairs, in graph6 column order: `(0,1), (0,2), (1,2), (0,3), ...`. Masks
//! are visited in ascending order. The mask space is cut into shards by
//! fixing the top bits, and a shard is the unit of parallel work.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, rows_connected, rows_girth, Graph};
use crate::index::{rows_index, IndexKind, EPS};

/// Hard cap on the number of masks a single scan may visit.
pub const SCAN_CAP: u128 = 1 << 36;
/// Largest order for a full `2^C(n,2)` scan.
pub const MAX_FULL_ORDER: usize = 9;
/// Largest order for an edge-count-constrained scan.
pub const MAX_COMBINATION_ORDER: usize = 10;

const SHARD_BITS: usize = 10;
const ROWS: usize = MAX_COMBINATION_ORDER;

/// Declarative graph-class predicate.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumFilter {
    pub connected: bool,
    pub unicyclic: bool,
    pub girth: Option<usize>,
    pub pendant_count: Option<usize>,
    pub max_degree: Option<usize>,
    pub edge_count: Option<usize>,
}

impl EnumFilter {
    pub fn connected() -> Self {
        EnumFilter {
            connected: true,
            ..Default::default()
        }
    }

    pub fn unicyclic() -> Self {
        EnumFilter {
            connected: true,
            unicyclic: true,
            ..Default::default()
        }
    }

    pub fn with_girth(mut self, g: usize) -> Self {
        self.girth = Some(g);
        self
    }

    pub fn with_pendants(mut self, p: usize) -> Self {
        self.pendant_count = Some(p);
        self
    }

    pub fn with_max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn with_edges(mut self, m: usize) -> Self {
        self.edge_count = Some(m);
        self
    }

    /// Checks consistency and returns the filter with implied fields filled
    /// in (unicyclic implies connected with exactly `n` edges).
    pub fn normalized(&self, n: usize) -> Result<Self> {
        let mut f = *self;
        if f.unicyclic {
            f.connected = true;
            match f.edge_count {
                None => f.edge_count = Some(n),
                Some(m) if m != n => {
                    return Err(Error::InvalidParams(format!(
                        "unicyclic graphs on {n} vertices have {n} edges, not {m}"
                    )))
                }
                _ => {}
            }
        }
        if let Some(g) = f.girth {
            if g < 3 {
                return Err(Error::InvalidParams(format!(
                    "girth filter needs g >= 3, got {g}"
                )));
            }
        }
        Ok(f)
    }

    /// Full predicate on an explicit graph.
    pub fn matches(&self, g: &Graph) -> bool {
        match self.normalized(g.order()) {
            Ok(f) => f.accepts(g.rows(), g.size()),
            Err(_) => false,
        }
    }

    /// Cheapest checks first; girth last.
    fn accepts(&self, rows: &[u64], edges: usize) -> bool {
        let n = rows.len();
        if self.edge_count.is_some_and(|m| m != edges) {
            return false;
        }
        if self.connected && edges + 1 < n {
            return false;
        }
        if let Some(cap) = self.max_degree {
            if rows.iter().any(|r| r.count_ones() as usize > cap) {
                return false;
            }
        }
        if let Some(p) = self.pendant_count {
            if rows.iter().filter(|r| r.count_ones() == 1).count() != p {
                return false;
            }
        }
        if self.connected && !rows_connected(rows) {
            return false;
        }
        if let Some(g) = self.girth {
            if rows_girth(rows) != Some(g) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for EnumFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.unicyclic {
            parts.push("unicyclic".to_string());
        } else if self.connected {
            parts.push("connected".to_string());
        }
        if let Some(g) = self.girth {
            parts.push(format!("girth={g}"));
        }
        if let Some(p) = self.pendant_count {
            parts.push(format!("pendants={p}"));
        }
        if let Some(d) = self.max_degree {
            parts.push(format!("max-degree={d}"));
        }
        if let Some(m) = self.edge_count {
            parts.push(format!("edges={m}"));
        }
        if parts.is_empty() {
            f.write_str("all")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

impl FromStr for EnumFilter {
    type Err = Error;

    /// Parses `connected,unicyclic,girth=4,pendants=2,max-degree=4,edges=7`.
    /// `all` or an empty string is the empty filter.
    fn from_str(s: &str) -> Result<Self> {
        let mut f = EnumFilter::default();
        for item in s
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty() && *t != "all")
        {
            let (key, value) = match item.split_once('=') {
                Some((k, v)) => (k.trim(), Some(v.trim())),
                None => (item, None),
            };
            let number = || -> Result<usize> {
                value
                    .ok_or_else(|| Error::InvalidParams(format!("filter {key} needs a value")))?
                    .parse()
                    .map_err(|_| {
                        Error::InvalidParams(format!("filter {key}: bad number {value:?}"))
                    })
            };
            match key {
                "connected" => f.connected = true,
                "unicyclic" => {
                    f.connected = true;
                    f.unicyclic = true;
                }
                "girth" | "g" => f.girth = Some(number()?),
                "pendants" | "pendant-count" | "p" => f.pendant_count = Some(number()?),
                "max-degree" | "maxdeg" => f.max_degree = Some(number()?),
                "edges" | "m" => f.edge_count = Some(number()?),
                _ => return Err(Error::InvalidParams(format!("unknown filter {key:?}"))),
            }
        }
        Ok(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Min => "min",
            Direction::Max => "max",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "min" => Ok(Direction::Min),
            "max" => Ok(Direction::Max),
            _ => Err(Error::InvalidParams(format!(
                "direction must be min or max, got {s:?}"
            ))),
        }
    }
}

/// Outcome of an extremal scan. Witnesses are pairwise non-isomorphic and
/// sorted by graph6 string.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtremalReport {
    pub n: usize,
    pub filter: EnumFilter,
    pub index: IndexKind,
    pub direction: Direction,
    pub optimum: f64,
    pub witnesses: Vec<Graph>,
    pub scanned: u64,
    pub matched: u64,
}

/// The set of masks a scan walks: all of them, or those with exactly `m`
/// bits set.
#[derive(Debug, Clone, Copy)]
struct Space {
    n: usize,
    pairs: usize,
    edges: Option<usize>,
}

impl Space {
    fn new(n: usize, filter: &EnumFilter) -> Result<Self> {
        if n == 0 {
            return Err(Error::OrderOutOfRange(n));
        }
        let pairs = n * (n - 1) / 2;
        let space = Space {
            n,
            pairs,
            edges: filter.edge_count,
        };
        let limit = if space.edges.is_some() {
            MAX_COMBINATION_ORDER
        } else {
            MAX_FULL_ORDER
        };
        let masks = space.size();
        if n > limit || masks > SCAN_CAP {
            return Err(Error::ScanCap { n, masks });
        }
        Ok(space)
    }

    fn size(&self) -> u128 {
        match self.edges {
            None => 1u128 << self.pairs,
            Some(m) => binomial(self.pairs, m),
        }
    }

    fn shard_bits(&self) -> usize {
        self.pairs.min(SHARD_BITS)
    }

    fn shards(&self) -> u64 {
        1 << self.shard_bits()
    }

    fn low_bits(&self) -> usize {
        self.pairs - self.shard_bits()
    }

    /// Visits every mask of shard `s` in ascending order.
    fn for_each_mask(&self, s: u64, mut f: impl FnMut(u64) -> ControlFlow<()>) -> ControlFlow<()> {
        let low = self.low_bits();
        let prefix = s << low;
        match self.edges {
            None => {
                for lo in 0..(1u64 << low) {
                    f(prefix | lo)?;
                }
            }
            Some(m) => {
                let used = s.count_ones() as usize;
                if used > m || m - used > low {
                    return ControlFlow::Continue(());
                }
                let k = m - used;
                if k == 0 {
                    return f(prefix);
                }
                let end = 1u64 << low;
                let mut x = (1u64 << k) - 1;
                while x < end {
                    f(prefix | x)?;
                    // Next integer with the same popcount.
                    let c = x & x.wrapping_neg();
                    let r = x + c;
                    x = (((r ^ x) >> 2) / c) | r;
                }
            }
        }
        ControlFlow::Continue(())
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Vertex pair for each mask bit, graph6 column order.
fn pair_table(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Number of masks a scan of this class would visit.
pub fn scan_size(n: usize, filter: &EnumFilter) -> Result<u128> {
    let f = filter.normalized(n)?;
    Ok(Space::new(n, &f)?.size())
}

/// Mask of an explicit graph in enumeration order.
pub fn graph_mask(g: &Graph) -> u64 {
    pair_table(g.order())
        .iter()
        .enumerate()
        .filter(|(_, &(i, j))| g.has_edge(i, j))
        .fold(0u64, |acc, (k, _)| acc | 1 << k)
}

#[derive(Debug, Default)]
struct ShardStats {
    scanned: u64,
    matched: u64,
}

fn scan_shard(
    space: &Space,
    filter: &EnumFilter,
    pairs: &[(usize, usize)],
    shard: u64,
    mut visit: impl FnMut(&[u64], u64) -> ControlFlow<()>,
) -> (ShardStats, ControlFlow<()>) {
    let n = space.n;
    let mut stats = ShardStats::default();
    let flow = space.for_each_mask(shard, |mask| {
        stats.scanned += 1;
        let edges = mask.count_ones() as usize;
        if filter.connected && edges + 1 < n {
            return ControlFlow::Continue(());
        }
        let mut rows = [0u64; ROWS];
        let mut rest = mask;
        while rest != 0 {
            let (i, j) = pairs[rest.trailing_zeros() as usize];
            rest &= rest - 1;
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        let rows = &rows[..n];
        if !filter.accepts(rows, edges) {
            return ControlFlow::Continue(());
        }
        stats.matched += 1;
        visit(rows, mask)
    });
    (stats, flow)
}

/// Visits every labelled graph on `n` vertices in the class, single
/// threaded, in ascending mask order. Returns the number of graphs passed
/// to the visitor.
pub fn enumerate(
    n: usize,
    filter: &EnumFilter,
    mut visitor: impl FnMut(&Graph) -> ControlFlow<()>,
) -> Result<u64> {
    let filter = filter.normalized(n)?;
    let space = Space::new(n, &filter)?;
    let pairs = pair_table(n);
    let mut visited = 0;
    for shard in 0..space.shards() {
        let (stats, flow) = scan_shard(&space, &filter, &pairs, shard, |rows, _| {
            visitor(&Graph::from_rows_unchecked(rows))
        });
        visited += stats.matched;
        if flow.is_break() {
            break;
        }
    }
    Ok(visited)
}

/// Sharded variant of [`enumerate`]: the visitor runs concurrently on up
/// to `workers` threads and in no particular order.
pub fn enumerate_sharded(
    n: usize,
    filter: &EnumFilter,
    workers: usize,
    visitor: impl Fn(&Graph) + Sync,
) -> Result<u64> {
    let filter = filter.normalized(n)?;
    let space = Space::new(n, &filter)?;
    let pairs = pair_table(n);
    let counts = with_pool(workers, || {
        (0..space.shards())
            .into_par_iter()
            .map(|shard| {
                scan_shard(&space, &filter, &pairs, shard, |rows, _| {
                    visitor(&Graph::from_rows_unchecked(rows));
                    ControlFlow::Continue(())
                })
                .0
                .matched
            })
            .collect::<Vec<_>>()
    })?;
    Ok(counts.into_iter().sum())
}

/// Default worker count: `EUS_LAB_WORKERS` if set, else available parallelism.
pub fn default_workers() -> usize {
    std::env::var("EUS_LAB_WORKERS")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .filter(|&w: &usize| w > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |p| p.get()))
}

fn with_pool<T: Send>(workers: usize, job: impl FnOnce() -> T + Send) -> Result<T> {
    let workers = if workers == 0 {
        default_workers()
    } else {
        workers
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidParams(format!("worker pool: {e}")))?;
    Ok(pool.install(job))
}

#[derive(Debug, Clone)]
struct Candidate {
    key: f64,
    value: f64,
    mask: u64,
    graph: Graph,
}

/// Per-shard extremal state. `key` is the value for min scans and its
/// negation for max scans, so the best candidate always has the least key.
#[derive(Debug, Default)]
struct Partial {
    stats: ShardStats,
    best: Option<f64>,
    candidates: Vec<Candidate>,
}

impl Partial {
    fn offer(&mut self, cand: Candidate) {
        match self.best {
            Some(best) if cand.key > best + EPS => {}
            Some(best) if cand.key >= best - EPS => {
                if cand.key < best {
                    self.best = Some(cand.key);
                    let cut = cand.key + EPS;
                    self.candidates.retain(|c| c.key <= cut);
                }
                // Masks arrive in ascending order, so an isomorphic
                // representative already held has the smaller mask.
                if !self
                    .candidates
                    .iter()
                    .any(|c| same_class(&c.graph, &cand.graph))
                {
                    self.candidates.push(cand);
                }
            }
            _ => {
                self.best = Some(cand.key);
                self.candidates.clear();
                self.candidates.push(cand);
            }
        }
    }
}

fn same_class(a: &Graph, b: &Graph) -> bool {
    a.sorted_degrees() == b.sorted_degrees() && are_isomorphic(a, b).unwrap_or(false)
}

/// Optimum of `index` over the class, with every optimizer up to
/// isomorphism. The report does not depend on `workers`.
pub fn extremal_scan(
    n: usize,
    filter: &EnumFilter,
    index: IndexKind,
    direction: Direction,
    workers: usize,
) -> Result<ExtremalReport> {
    let filter = filter.normalized(n)?;
    let space = Space::new(n, &filter)?;
    let pairs = pair_table(n);
    let sign = match direction {
        Direction::Min => 1.0,
        Direction::Max => -1.0,
    };
    let partials = with_pool(workers, || {
        (0..space.shards())
            .into_par_iter()
            .map(|shard| {
                let mut partial = Partial::default();
                let (stats, _) = scan_shard(&space, &filter, &pairs, shard, |rows, mask| {
                    let value = rows_index(rows, index);
                    let key = sign * value;
                    if partial.best.is_none_or(|b| key <= b + EPS) {
                        partial.offer(Candidate {
                            key,
                            value,
                            mask,
                            graph: Graph::from_rows_unchecked(rows),
                        });
                    }
                    ControlFlow::Continue(())
                });
                partial.stats = stats;
                partial
            })
            .collect::<Vec<_>>()
    })?;
    merge(n, filter, index, direction, partials)
}

fn merge(
    n: usize,
    filter: EnumFilter,
    index: IndexKind,
    direction: Direction,
    partials: Vec<Partial>,
) -> Result<ExtremalReport> {
    let scanned = partials.iter().map(|p| p.stats.scanned).sum();
    let matched = partials.iter().map(|p| p.stats.matched).sum();
    let mut all: Vec<Candidate> = partials.into_iter().flat_map(|p| p.candidates).collect();
    let best = all.iter().map(|c| c.key).fold(f64::INFINITY, f64::min);
    if !best.is_finite() {
        return Err(Error::EmptyClass(n));
    }
    all.retain(|c| c.key <= best + EPS);
    all.sort_by_key(|c| c.mask);
    let mut reps: Vec<Candidate> = Vec::new();
    for cand in all {
        if !reps.iter().any(|r| same_class(&r.graph, &cand.graph)) {
            reps.push(cand);
        }
    }
    let optimum = reps
        .iter()
        .map(|c| c.value)
        .fold(None, |acc: Option<f64>, v| {
            Some(match (acc, direction) {
                (None, _) => v,
                (Some(a), Direction::Min) => a.min(v),
                (Some(a), Direction::Max) => a.max(v),
            })
        })
        .expect("at least one witness");
    let mut witnesses: Vec<(String, Graph)> = reps
        .into_iter()
        .map(|c| (crate::graph6::emit_graph6(&c.graph), c.graph))
        .collect();
    witnesses.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(ExtremalReport {
        n,
        filter,
        index,
        direction,
        optimum,
        witnesses: witnesses.into_iter().map(|(_, g)| g).collect(),
        scanned,
        matched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_order_matches_graph6() {
        assert_eq!(
            pair_table(4),
            vec![(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
        );
    }

    #[test]
    fn gosper_visits_all_combinations() {
        let space = Space {
            n: 6,
            pairs: 15,
            edges: Some(6),
        };
        let mut seen = Vec::new();
        for s in 0..space.shards() {
            let _ = space.for_each_mask(s, |m| {
                seen.push(m);
                ControlFlow::Continue(())
            });
        }
        assert_eq!(seen.len() as u128, binomial(15, 6));
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        assert!(seen.iter().all(|m| m.count_ones() == 6));
    }

    #[test]
    fn full_space_counts() {
        for n in 1..=5 {
            let count =
                enumerate(n, &EnumFilter::default(), |_| ControlFlow::Continue(())).unwrap();
            assert_eq!(count, 1 << (n * (n - 1) / 2));
        }
    }

    #[test]
    fn small_class_counts() {
        let count = |n, f: EnumFilter| enumerate(n, &f, |_| ControlFlow::Continue(())).unwrap();
        assert_eq!(count(4, EnumFilter::connected()), 38);
        assert_eq!(count(4, EnumFilter::unicyclic()), 15);
        assert_eq!(count(3, EnumFilter::connected().with_girth(3)), 1);
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        let visited = enumerate(5, &EnumFilter::default(), |_| {
            seen += 1;
            if seen == 10 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(visited, 10);
    }

    #[test]
    fn caps_enforced() {
        let err = enumerate(10, &EnumFilter::connected(), |_| ControlFlow::Continue(()));
        assert!(matches!(err, Err(Error::ScanCap { n: 10, .. })));
        let err = enumerate(11, &EnumFilter::unicyclic(), |_| ControlFlow::Continue(()));
        assert!(matches!(err, Err(Error::ScanCap { n: 11, .. })));
        assert!(scan_size(10, &EnumFilter::unicyclic()).unwrap() <= SCAN_CAP);
        assert_eq!(scan_size(9, &EnumFilter::default()).unwrap(), SCAN_CAP);
    }

    #[test]
    fn filter_parsing() {
        let f: EnumFilter = "unicyclic,girth=4".parse().unwrap();
        assert_eq!(f, EnumFilter::unicyclic().with_girth(4));
        let f: EnumFilter = "connected, pendants=2 ,max-degree=4,edges=7"
            .parse()
            .unwrap();
        assert_eq!(
            f,
            EnumFilter::connected()
                .with_pendants(2)
                .with_max_degree(4)
                .with_edges(7)
        );
        assert_eq!("all".parse::<EnumFilter>().unwrap(), EnumFilter::default());
        assert!("girth".parse::<EnumFilter>().is_err());
        assert!("colour=3".parse::<EnumFilter>().is_err());
        assert_eq!(f.to_string().parse::<EnumFilter>().unwrap(), f);
    }

    #[test]
    fn filter_consistency() {
        assert!(EnumFilter::unicyclic().with_edges(4).normalized(5).is_err());
        assert!(EnumFilter::default().with_girth(2).normalized(5).is_err());
        assert_eq!(
            EnumFilter::unicyclic().normalized(6).unwrap().edge_count,
            Some(6)
        );
    }

    #[test]
    fn empty_class() {
        let err = extremal_scan(
            3,
            &EnumFilter::connected().with_pendants(1),
            IndexKind::Eus,
            Direction::Max,
            1,
        );
        assert_eq!(err.unwrap_err(), Error::EmptyClass(3));
    }

    #[test]
    fn mask_round_trip() {
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        let mask = graph_mask(&g);
        let mut found = None;
        enumerate(5, &EnumFilter::default().with_edges(4), |h| {
            if *h == g {
                found = Some(graph_mask(h));
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(found, Some(mask));
    }
}
