//! Isomorphism testing for small graphs: colour refinement on the disjoint
//! union of both graphs, then backtracking over colour-respecting bijections.

use std::collections::BTreeMap;

use super::{bits, Graph};
use crate::error::{Error, Result};

/// Largest order accepted by [`are_isomorphic`].
pub const ISO_LIMIT: usize = 12;

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.order() > ISO_LIMIT {
            return Err(Error::IsoLimit {
                order: x.order(),
                limit: ISO_LIMIT,
            });
        }
    }
    if g.order() != h.order() || g.size() != h.size() || g.sorted_degrees() != h.sorted_degrees() {
        return Ok(false);
    }
    let n = g.order();
    let (cg, ch) = refine(g.rows(), h.rows());

    let mut hist_g = BTreeMap::new();
    let mut hist_h = BTreeMap::new();
    for v in 0..n {
        *hist_g.entry(cg[v]).or_insert(0usize) += 1;
        *hist_h.entry(ch[v]).or_insert(0usize) += 1;
    }
    if hist_g != hist_h {
        return Ok(false);
    }

    // Map vertices of rarest colour first; ties broken by degree (descending).
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        (
            hist_g[&cg[v]],
            usize::MAX - g.rows()[v].count_ones() as usize,
            v,
        )
    });

    let mut m = Matcher {
        g: g.rows(),
        h: h.rows(),
        cg: &cg,
        ch: &ch,
        order: &order,
        map: [0; ISO_LIMIT],
        used: 0,
    };
    Ok(m.extend(0))
}

struct Matcher<'a> {
    g: &'a [u64],
    h: &'a [u64],
    cg: &'a [u32],
    ch: &'a [u32],
    order: &'a [usize],
    map: [usize; ISO_LIMIT],
    used: u64,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for w in 0..self.h.len() {
            if self.used >> w & 1 == 1 || self.cg[v] != self.ch[w] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| {
                let mu = self.map[u];
                (self.g[v] >> u & 1) == (self.h[w] >> mu & 1)
            });
            if !consistent {
                continue;
            }
            self.map[v] = w;
            self.used |= 1 << w;
            if self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << w);
        }
        false
    }
}

/// Stable colouring of both graphs with a shared palette.
fn refine(g: &[u64], h: &[u64]) -> (Vec<u32>, Vec<u32>) {
    let n = g.len();
    let mut cg: Vec<u32> = g.iter().map(|r| r.count_ones()).collect();
    let mut ch: Vec<u32> = h.iter().map(|r| r.count_ones()).collect();
    let mut classes = distinct(&cg, &ch);
    loop {
        let signature = |rows: &[u64], col: &[u32], v: usize| {
            let mut nb: Vec<u32> = bits(rows[v]).map(|u| col[u]).collect();
            nb.sort_unstable();
            (col[v], nb)
        };
        let sg: Vec<_> = (0..n).map(|v| signature(g, &cg, v)).collect();
        let sh: Vec<_> = (0..n).map(|v| signature(h, &ch, v)).collect();
        // Palette ids follow signature order, which is label independent.
        let mut ids: BTreeMap<_, u32> =
            sg.iter().chain(sh.iter()).map(|s| (s.clone(), 0)).collect();
        for (i, id) in ids.values_mut().enumerate() {
            *id = i as u32;
        }
        cg = sg.iter().map(|s| ids[s]).collect();
        ch = sh.iter().map(|s| ids[s]).collect();
        let now = distinct(&cg, &ch);
        if now == classes {
            return (cg, ch);
        }
        classes = now;
    }
}

fn distinct(a: &[u32], b: &[u32]) -> usize {
    let mut all: Vec<u32> = a.iter().chain(b).copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}
