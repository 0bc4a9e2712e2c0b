//! k-edge vectors, crossing counts and the lower bound on `E_{<=k}(n)`.

use num_integer::binomial;
use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::geom::{orientation, PointSet};

/// `C(a, b)` with the convention `C(a, b) = 0` for `a < b`, including negative `a`.
pub fn choose(a: i64, b: i64) -> i64 {
    if a < b || b < 0 {
        0
    } else {
        binomial(a, b)
    }
}

/// Counts `E_k` for `k = 0 ..= floor(n/2) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeVector {
    n: usize,
    counts: Vec<u64>,
}

impl EdgeVector {
    /// Checks the length and that the counts sum to `C(n, 2)`.
    pub fn from_counts(n: usize, counts: Vec<u64>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!(
                "edge vector needs n >= 3, got {n}"
            )));
        }
        if counts.len() != n / 2 {
            return Err(Error::InvalidArgument(format!(
                "edge vector for n = {n} has {} entries, expected {}",
                counts.len(),
                n / 2
            )));
        }
        let total: u64 = counts.iter().sum();
        if total as i64 != choose(n as i64, 2) {
            return Err(Error::InvalidArgument(format!(
                "edge counts sum to {total}, expected C({n},2) = {}",
                choose(n as i64, 2)
            )));
        }
        Ok(EdgeVector { n, counts })
    }

    /// Builds the vector from cumulative counts `E_{<=k}`.
    pub fn from_cumulative(n: usize, cumulative: &[u64]) -> Result<Self> {
        let mut counts = Vec::with_capacity(cumulative.len());
        let mut prev = 0u64;
        for (k, &c) in cumulative.iter().enumerate() {
            let e = c.checked_sub(prev).ok_or_else(|| {
                Error::InvalidArgument(format!("cumulative count decreases at k = {k}"))
            })?;
            counts.push(e);
            prev = c;
        }
        Self::from_counts(n, counts)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Largest valid `k`, i.e. `floor(n/2) - 1`.
    pub fn max_k(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn cumulative_all(&self) -> Vec<u64> {
        self.counts
            .iter()
            .scan(0u64, |acc, &e| {
                *acc += e;
                Some(*acc)
            })
            .collect()
    }
}

/// Counts k-edges: for each pair, `j` points strictly left of the directed
/// line contribute to `E_{min(j, n-2-j)}`. Halving pairs of even `n` land in
/// `E_{n/2-1}` once.
pub fn edge_vector(set: &PointSet) -> Result<EdgeVector> {
    set.require_at_least(3)?;
    let n = set.len();
    let pts = set.points();
    let mut counts = vec![0u64; n / 2];
    for i in 0..n {
        for j in i + 1..n {
            let left = pts
                .iter()
                .filter(|&&r| orientation(pts[i], pts[j], r) > 0)
                .count();
            counts[left.min(n - 2 - left)] += 1;
        }
    }
    EdgeVector::from_counts(n, counts)
}

/// `E_{<=k}`.
pub fn cumulative(ev: &EdgeVector, k: usize) -> Result<u64> {
    check_range("k", k as i64, 0, ev.max_k() as i64)?;
    Ok(ev.counts[..=k].iter().sum())
}

/// Number of 4-point subsets in convex position.
pub fn crossing_brute(set: &PointSet) -> Result<u64> {
    let pts = set.points();
    let n = pts.len();
    let mut count = 0;
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if in_convex_position([pts[a], pts[b], pts[c], pts[d]]) {
                        count += 1;
                    }
                }
            }
        }
    }
    Ok(count)
}

fn in_convex_position(q: [crate::geom::Point; 4]) -> bool {
    let inside = |p, a, b, c| {
        let s1 = orientation(a, b, p);
        s1 == orientation(b, c, p) && s1 == orientation(c, a, p)
    };
    !(inside(q[0], q[1], q[2], q[3])
        || inside(q[1], q[0], q[2], q[3])
        || inside(q[2], q[0], q[1], q[3])
        || inside(q[3], q[0], q[1], q[2]))
}

/// `3 C(n,4) - sum_k k (n - k - 2) E_k`.
pub fn crossing_from_edges(ev: &EdgeVector) -> i64 {
    let n = ev.n as i64;
    let weighted: i64 = ev
        .counts
        .iter()
        .enumerate()
        .map(|(k, &e)| {
            let k = k as i64;
            k * (n - k - 2) * e as i64
        })
        .sum();
    3 * choose(n, 4) - weighted
}

/// Cumulative form `sum_{k <= floor(n/2)-2} (n-2k-3) E_{<=k} - (3/4) C(n,3)
/// + (1 + (-1)^(n+1)) C(n,2) / 8`, evaluated over the common denominator 8.
pub fn crossing_from_cumulative(ev: &EdgeVector) -> i64 {
    let n = ev.n as i64;
    let cum = ev.cumulative_all();
    let top = (n / 2 - 2).max(-1);
    let sum: i64 = (0..=top)
        .map(|k| (n - 2 * k - 3) * cum[k as usize] as i64)
        .sum();
    let parity = if n % 2 == 1 { 2 } else { 0 };
    let eighths = 8 * sum - 6 * choose(n, 3) + parity * choose(n, 2);
    assert_eq!(eighths % 8, 0, "cumulative crossing form is not integral");
    eighths / 8
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingReport {
    pub brute_count: u64,
    pub identity_count: i64,
    pub cumulative_count: i64,
    pub agreement: bool,
}

pub fn crossing_report(set: &PointSet) -> Result<CrossingReport> {
    let ev = edge_vector(set)?;
    let brute_count = crossing_brute(set)?;
    let identity_count = crossing_from_edges(&ev);
    let cumulative_count = crossing_from_cumulative(&ev);
    Ok(CrossingReport {
        brute_count,
        identity_count,
        cumulative_count,
        agreement: brute_count as i64 == identity_count && identity_count == cumulative_count,
    })
}

/// `3 C(k+2,2) + 3 C(k+2-floor(n/3),2) - max{0, (k+1-floor(n/3)) (n - 3 floor(n/3))}`.
///
/// Evaluated for every `k <= floor(n/2) - 1`. At the halving level of even
/// `n` the value exceeds `C(n,2)` for `n <= 16`, so it only bounds
/// `E_{<=k}` for `k <= floor((n-3)/2)`.
pub fn lower_bound_leq_k(n: usize, k: usize) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n = {n}, need n >= 3")));
    }
    check_range("k", k as i64, 0, (n / 2) as i64 - 1)?;
    let (n, k) = (n as i64, k as i64);
    let third = n / 3;
    let value = 3 * choose(k + 2, 2) + 3 * choose(k + 2 - third, 2)
        - ((k + 1 - third) * (n - 3 * third)).max(0);
    Ok(value as u64)
}

/// Entry `k` is true iff `E_{<=k}(P)` meets the lower bound; `k_max` is
/// clamped to `floor(n/2) - 1` and a negative `k_max` gives an empty list.
pub fn tightness_profile(set: &PointSet, k_max: i64) -> Result<Vec<bool>> {
    if k_max < 0 {
        return Ok(Vec::new());
    }
    let ev = edge_vector(set)?;
    let top = (k_max as usize).min(ev.max_k());
    let cum = ev.cumulative_all();
    (0..=top)
        .map(|k| Ok(cum[k] == lower_bound_leq_k(ev.n, k)?))
        .collect()
}
