//! Descending digraphs recording which same-block pairs swap in the k-center,
//! the class of digraphs with `outdeg(i) <= m + indeg(i)`, and its extremal
//! member `D0(v, m)`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::allowseq::HalfPeriod;
use crate::decomp::{decomposed_view, depth_labeling, Block, ThreeDecomposition};
use crate::error::{check_range, Error, Result};

/// Vertices `1..=v`; every edge `(i, j)` has `i > j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Digraph {
    v: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn empty(v: usize) -> Self {
        Digraph {
            v,
            edges: BTreeSet::new(),
        }
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<()> {
        if !(1 <= j && j < i && i <= self.v) {
            return Err(Error::InvalidArgument(format!(
                "edge {i}->{j} is not descending within 1..={}",
                self.v
            )));
        }
        self.edges.insert((i, j));
        Ok(())
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in descending lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().rev().copied()
    }

    pub fn outdeg(&self, i: usize) -> usize {
        self.edges.range((i, 0)..(i + 1, 0)).count()
    }

    pub fn indeg(&self, j: usize) -> usize {
        self.edges.iter().filter(|&&(_, t)| t == j).count()
    }

    pub fn is_subgraph_of(&self, other: &Digraph) -> bool {
        self.edges.is_subset(&other.edges)
    }

    /// Subgraph induced on the bottom `b` vertices.
    pub fn bottom(&self, b: usize) -> Digraph {
        Digraph {
            v: b.min(self.v),
            edges: self
                .edges
                .iter()
                .filter(|&&(i, _)| i <= b)
                .copied()
                .collect(),
        }
    }

    /// `v m` header, then one `i j` line per edge in descending order.
    pub fn to_text(&self, m: usize) -> String {
        let mut out = format!("{} {}\n", self.v, m);
        for (i, j) in self.edges() {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }
}

/// The transposition digraph of one block: edge `(i, j)` when `x_i` and
/// `x_j` swap at a gate `k < g < n - k` of the decomposed view.
pub fn build_dk(h: &HalfPeriod, d: &ThreeDecomposition, block: Block, k: usize) -> Result<Digraph> {
    let labels = depth_labeling(h, d, block)?;
    let g = decomposed_view(h, d)?;
    let n = g.n();
    let mut index = vec![0usize; n];
    for (i, &l) in labels.iter().enumerate().skip(1) {
        index[l] = i;
    }
    let mut dg = Digraph::empty(n / 3);
    let mut replay = g.replay();
    while let Some(step) = replay.next_step() {
        let (x, y) = (index[step.rightward], index[step.leftward]);
        if x == 0 || y == 0 || !(k < step.gate && step.gate + k < n) {
            continue;
        }
        dg.add_edge(x.max(y), x.min(y))?;
    }
    Ok(dg)
}

pub fn in_class(g: &Digraph, m: usize) -> bool {
    let mut out = vec![0usize; g.v + 1];
    let mut inn = vec![0usize; g.v + 1];
    for &(i, j) in &g.edges {
        out[i] += 1;
        inn[j] += 1;
    }
    (1..=g.v).all(|i| out[i] <= m + inn[i])
}

/// Top vertex first; each vertex sends `min(indeg + m, i - 1)` edges to the
/// vertices immediately below it.
pub fn build_d0(v: usize, m: usize) -> Result<Digraph> {
    check_range("v", v as i64, 1, i64::MAX)?;
    let mut g = Digraph::empty(v);
    let mut indeg = vec![0usize; v + 1];
    for i in (1..=v).rev() {
        let out = (indeg[i] + m).min(i - 1);
        for j in (i - out..i).rev() {
            g.edges.insert((i, j));
            indeg[j] += 1;
        }
    }
    Ok(g)
}

/// Largest edge count in the class, by trying every descending edge set.
pub fn max_edges_oracle(v: usize, m: usize) -> Result<usize> {
    check_range("v", v as i64, 1, 6)?;
    check_range("m", m as i64, 0, 3)?;
    let pairs: Vec<(usize, usize)> = (1..=v).flat_map(|i| (1..i).map(move |j| (i, j))).collect();
    let mut best = 0;
    for mask in 0u32..1 << pairs.len() {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut balance = [0i64; 7];
        for (bit, &(i, j)) in pairs.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                balance[i] += 1;
                balance[j] -= 1;
            }
        }
        if balance.iter().all(|&b| b <= m as i64) {
            best = size;
        }
    }
    Ok(best)
}

/// Every descending edge among the top `blocksize` vertices is present.
pub fn top_block_complete(g: &Digraph, blocksize: usize) -> bool {
    let lo = g.v + 1 - blocksize.min(g.v).max(1);
    (lo..=g.v).all(|i| (lo..i).all(|j| g.has_edge(i, j)))
}

/// Number of `x_i`, `i < j`, that swap with `x_j` at the halving gate.
pub fn hal(h: &HalfPeriod, d: &ThreeDecomposition, block: Block, j: usize) -> Result<usize> {
    let n = h.n();
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "no halving gate for odd n = {n}"
        )));
    }
    check_range("j", j as i64, 1, (n / 3) as i64)?;
    Ok(build_dk(h, d, block, n / 2 - 1)?.outdeg(j))
}
