//! 3-decomposability of half-periods and point sets, and the mono/bichromatic
//! step statistics of a decomposed half-period.

use std::fmt;

use serde::Serialize;

use crate::allowseq::{center_entry_permutation, from_point_set, rotate, HalfPeriod};
use crate::error::{check_range, Error, Result};
use crate::geom::{Point, PointSet};
use crate::kedges::{choose, edge_vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Block {
    A,
    B,
    C,
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Block::A => "a",
            Block::B => "b",
            Block::C => "c",
        })
    }
}

impl std::str::FromStr for Block {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Block::A),
            "b" | "B" => Ok(Block::B),
            "c" | "C" => Ok(Block::C),
            other => Err(Error::InvalidArgument(format!("unknown block {other:?}"))),
        }
    }
}

/// Witness that the half-period rotated by `rotation` steps swaps all AB
/// pairs, then all AC pairs, then all BC pairs (monochromatic swaps
/// interleave freely). Blocks are the thirds of the rotated initial
/// permutation. The permutation after step `s` shows the blocks B A C, the
/// one after step `t` shows B C A (steps 0-indexed).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreeDecomposition {
    pub rotation: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
    pub c: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

impl ThreeDecomposition {
    pub fn block_of(&self, label: usize) -> Option<Block> {
        if self.a.contains(&label) {
            Some(Block::A)
        } else if self.b.contains(&label) {
            Some(Block::B)
        } else if self.c.contains(&label) {
            Some(Block::C)
        } else {
            None
        }
    }

    pub fn block(&self, block: Block) -> &[usize] {
        match block {
            Block::A => &self.a,
            Block::B => &self.b,
            Block::C => &self.c,
        }
    }
}

impl fmt::Display for ThreeDecomposition {
    /// `rotation r`, three `A:`/`B:`/`C:` label lines, then `s` and `t`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        writeln!(f, "rotation {}", self.rotation)?;
        writeln!(f, "A: {}", join(&self.a))?;
        writeln!(f, "B: {}", join(&self.b))?;
        writeln!(f, "C: {}", join(&self.c))?;
        writeln!(f, "s {}", self.s)?;
        writeln!(f, "t {}", self.t)
    }
}

/// Why a rotation is not a decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refusal {
    pub rotation: usize,
    /// Earliest step whose pair type is out of phase order.
    pub step: usize,
    pub reason: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PairKind {
    Mono,
    AB,
    AC,
    BC,
}

fn pair_kind(x: Block, y: Block) -> PairKind {
    match (x, y) {
        (Block::A, Block::B) | (Block::B, Block::A) => PairKind::AB,
        (Block::A, Block::C) | (Block::C, Block::A) => PairKind::AC,
        (Block::B, Block::C) | (Block::C, Block::B) => PairKind::BC,
        _ => PairKind::Mono,
    }
}

fn require_thirds(n: usize) -> Result<usize> {
    if n == 0 || !n.is_multiple_of(3) {
        return Err(Error::InvalidArgument(format!(
            "3-decomposability needs n divisible by 3, got {n}"
        )));
    }
    Ok(n / 3)
}

/// Block of every label, read off the thirds of `initial`.
fn blocks_of(initial: &[usize]) -> Vec<Block> {
    let third = initial.len() / 3;
    let mut blocks = vec![Block::A; initial.len()];
    for (p, &l) in initial.iter().enumerate() {
        blocks[l] = match p / third {
            0 => Block::A,
            1 => Block::B,
            _ => Block::C,
        };
    }
    blocks
}

/// Checks the phase order AB, AC, BC on the half-period rotated by `r`.
pub fn check_sequence_decomposition(
    h: &HalfPeriod,
    r: usize,
) -> Result<std::result::Result<ThreeDecomposition, Refusal>> {
    require_thirds(h.n())?;
    let rotated = rotate(h, r)?;
    Ok(check_rotated(&rotated, r))
}

fn check_rotated(
    g: &HalfPeriod,
    rotation: usize,
) -> std::result::Result<ThreeDecomposition, Refusal> {
    let blocks = blocks_of(g.initial());
    let mut seen_c = false;
    let mut seen_bc = false;
    let (mut s, mut t) = (0, 0);
    let mut replay = g.replay();
    while let Some(step) = replay.next_step() {
        let refuse = |reason: &str| Refusal {
            rotation,
            step: step.index,
            reason: reason.to_string(),
        };
        match pair_kind(blocks[step.rightward], blocks[step.leftward]) {
            PairKind::Mono => {}
            PairKind::AB => {
                if seen_c {
                    return Err(refuse("A-B swap after a swap involving C"));
                }
                s = step.index;
            }
            PairKind::AC => {
                if seen_bc {
                    return Err(refuse("A-C swap after a B-C swap"));
                }
                seen_c = true;
                t = step.index;
            }
            PairKind::BC => {
                seen_c = true;
                seen_bc = true;
            }
        }
    }
    let third = g.n() / 3;
    let init = g.initial();
    Ok(ThreeDecomposition {
        rotation,
        a: init[..third].to_vec(),
        b: init[third..2 * third].to_vec(),
        c: init[2 * third..].to_vec(),
        s,
        t,
    })
}

/// First rotation (lowest offset) of the full period that is 3-decomposable.
pub fn search_decomposition(h: &HalfPeriod) -> Result<Option<ThreeDecomposition>> {
    require_thirds(h.n())?;
    for r in 0..2 * h.len() {
        if let Ok(d) = check_rotated(&rotate(h, r)?, r) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Partition of a point set together with three side directions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometricWitness {
    /// Point indices of A, B and C.
    pub parts: [Vec<usize>; 3],
    pub directions: [Point; 3],
}

/// True iff, projecting onto direction `i`, the three parts occupy disjoint
/// intervals with part `i` in the middle (A on the first side, B on the
/// second, C on the third), in either orientation.
pub fn verify_geometric_witness(set: &PointSet, w: &GeometricWitness) -> Result<bool> {
    let n = set.len();
    let third = require_thirds(n)?;
    if w.parts.iter().any(|p| p.len() != third) {
        return Err(Error::InvalidArgument(
            "parts must each hold n/3 points".into(),
        ));
    }
    let mut seen = vec![false; n];
    for &i in w.parts.iter().flatten() {
        if i >= n || std::mem::replace(&mut seen[i], true) {
            return Err(Error::InvalidArgument(
                "parts must partition the point indices".into(),
            ));
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if w.directions[i].cross(w.directions[j]) == 0 {
                return Err(Error::InvalidArgument(format!(
                    "directions {i} and {j} are parallel or zero"
                )));
            }
        }
    }
    for (side, &dir) in w.directions.iter().enumerate() {
        let span = |part: &[usize]| {
            let vals = part.iter().map(|&i| set[i].dot(dir));
            (vals.clone().min().unwrap(), vals.max().unwrap())
        };
        let mid = span(&w.parts[side]);
        let outer: Vec<(i64, i64)> = (0..3)
            .filter(|&p| p != side)
            .map(|p| span(&w.parts[p]))
            .collect();
        let (lo, hi) = if outer[0].1 < outer[1].0 {
            (outer[0], outer[1])
        } else {
            (outer[1], outer[0])
        };
        if !(lo.1 < mid.0 && mid.1 < hi.0) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainTheoremVerdict {
    /// `E_{<=k} = 3 C(k+2,2)` for every `0 <= k < n/3`.
    pub hypothesis: bool,
    /// First `k` where the hypothesis fails.
    pub failed_at: Option<usize>,
    pub witness: Option<ThreeDecomposition>,
}

impl MainTheoremVerdict {
    /// A tight set must decompose; false only for a counterexample.
    pub fn consistent(&self) -> bool {
        !self.hypothesis || self.witness.is_some()
    }
}

/// Tests the tight-edge-vector hypothesis and, when it holds, searches the
/// circular sequence for a decomposition.
pub fn main_theorem_check(set: &PointSet) -> Result<MainTheoremVerdict> {
    let third = require_thirds(set.len())?;
    let cum = edge_vector(set)?.cumulative_all();
    let failed_at = (0..third).find(|&k| cum[k] as i64 != 3 * choose(k as i64 + 2, 2));
    if failed_at.is_some() {
        return Ok(MainTheoremVerdict {
            hypothesis: false,
            failed_at,
            witness: None,
        });
    }
    let witness = search_decomposition(&from_point_set(set)?)?;
    Ok(MainTheoremVerdict {
        hypothesis: true,
        failed_at: None,
        witness,
    })
}

/// Step statistics of a decomposed half-period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PhaseStats {
    pub n: usize,
    /// `N_k^{bi}` for `k = 1 ..= floor(n/2)` at index `k - 1`.
    pub bi: Vec<u64>,
    /// `N_k^{mono}`, same indexing.
    pub mono: Vec<u64>,
    /// `N_{>k}^{aa}` (same-block swaps in gates `k < g < n - k`) for
    /// `k = 0 ..= floor(n/2)` at index `k`.
    pub center_aa: Vec<u64>,
    pub center_bb: Vec<u64>,
    pub center_cc: Vec<u64>,
}

impl PhaseStats {
    /// `N_{<=k}^{bi}`.
    pub fn bi_le(&self, k: usize) -> u64 {
        self.bi[..k.min(self.bi.len())].iter().sum()
    }

    pub fn mono_le(&self, k: usize) -> u64 {
        self.mono[..k.min(self.mono.len())].iter().sum()
    }

    pub fn center(&self, block: Block) -> &[u64] {
        match block {
            Block::A => &self.center_aa,
            Block::B => &self.center_bb,
            Block::C => &self.center_cc,
        }
    }
}

/// The half-period seen from the decomposition's rotation, after checking
/// that the blocks match its initial permutation.
pub fn decomposed_view(h: &HalfPeriod, d: &ThreeDecomposition) -> Result<HalfPeriod> {
    let third = require_thirds(h.n())?;
    let g = rotate(h, d.rotation)?;
    let init = g.initial();
    if init[..third] != d.a[..] || init[third..2 * third] != d.b[..] || init[2 * third..] != d.c[..]
    {
        return Err(Error::Labeling(format!(
            "blocks do not match the initial permutation at rotation {}",
            d.rotation
        )));
    }
    Ok(g)
}

pub fn phase_stats(h: &HalfPeriod, d: &ThreeDecomposition) -> Result<PhaseStats> {
    let g = decomposed_view(h, d)?;
    let n = g.n();
    let blocks = blocks_of(g.initial());
    let levels = n / 2;
    let mut stats = PhaseStats {
        n,
        bi: vec![0; levels],
        mono: vec![0; levels],
        center_aa: vec![0; levels + 1],
        center_bb: vec![0; levels + 1],
        center_cc: vec![0; levels + 1],
    };
    let mut replay = g.replay();
    while let Some(step) = replay.next_step() {
        let gate = step.gate;
        let level = gate.min(n - gate);
        let (x, y) = (blocks[step.rightward], blocks[step.leftward]);
        if x == y {
            stats.mono[level - 1] += 1;
            let center = match x {
                Block::A => &mut stats.center_aa,
                Block::B => &mut stats.center_bb,
                Block::C => &mut stats.center_cc,
            };
            // k < gate < n - k  <=>  k < level
            for slot in center.iter_mut().take(level) {
                *slot += 1;
            }
        } else {
            stats.bi[level - 1] += 1;
        }
    }
    Ok(stats)
}

/// Cumulative bichromatic count `N_{<=k}^{bi}` forced by 3-decomposability:
/// `3 C(k+1,2)` for `k <= n/3`, then `3 C(n/3+1,2) + (k - n/3) n`. At the
/// halving level of even `n` every one of the `3 (n/3)^2` bichromatic pairs
/// has been counted.
pub fn bichromatic_closed_form(n: usize, k: usize) -> Result<u64> {
    let third = require_thirds(n)? as i64;
    check_range("k", k as i64, 1, (n / 2) as i64)?;
    let (n, k) = (n as i64, k as i64);
    let value = if 2 * k == n {
        3 * third * third
    } else if k <= third {
        3 * choose(k + 1, 2)
    } else {
        3 * choose(third + 1, 2) + (k - third) * n
    };
    Ok(value as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MiddleThird {
    pub holds: bool,
    /// First monochromatic step outside gates `n/3 < g < 2n/3`.
    pub first_violation: Option<usize>,
}

/// Whether every monochromatic step uses a gate strictly between `n/3` and
/// `2n/3`.
pub fn middle_third_check(h: &HalfPeriod, d: &ThreeDecomposition) -> Result<MiddleThird> {
    let g = decomposed_view(h, d)?;
    let n = g.n();
    let blocks = blocks_of(g.initial());
    let mut replay = g.replay();
    while let Some(step) = replay.next_step() {
        let mono = blocks[step.rightward] == blocks[step.leftward];
        if mono && !(3 * step.gate > n && 3 * step.gate < 2 * n) {
            return Ok(MiddleThird {
                holds: false,
                first_violation: Some(step.index),
            });
        }
    }
    Ok(MiddleThird {
        holds: true,
        first_violation: None,
    })
}

/// Labels of `x_1 ..= x_{n/3}` for one block (index 0 unused). The element
/// whose deepest position is `i` places from an end of the permutation gets
/// index `n/3 - i + 1`.
pub fn depth_labeling(h: &HalfPeriod, d: &ThreeDecomposition, block: Block) -> Result<Vec<usize>> {
    let g = decomposed_view(h, d)?;
    let n = g.n();
    let third = n / 3;
    let members = d.block(block);
    let mut depth = vec![usize::MAX; n];
    let mut record = |perm: &[usize]| {
        for (p, &l) in perm.iter().enumerate() {
            let from_end = (p + 1).min(n - p);
            depth[l] = depth[l].min(from_end);
        }
    };
    record(g.initial());
    let mut replay = g.replay();
    while let Some(step) = replay.next_step() {
        record(step.after);
    }
    let mut labels = vec![usize::MAX; third + 1];
    for &l in members {
        let dep = depth[l];
        if dep == 0 || dep > third || labels[third - dep + 1] != usize::MAX {
            return Err(Error::Labeling(format!(
                "block {block} depths are not a permutation of 1..={third}"
            )));
        }
        labels[third - dep + 1] = l;
    }
    Ok(labels)
}

/// Permutation right after `x_index` of `block` first enters the k-center,
/// measured on the decomposed view, with the number of steps applied.
pub fn center_entry(
    h: &HalfPeriod,
    d: &ThreeDecomposition,
    block: Block,
    index: usize,
    k: usize,
) -> Result<(usize, Vec<usize>)> {
    let labels = depth_labeling(h, d, block)?;
    check_range("index", index as i64, 1, labels.len() as i64 - 1)?;
    let g = decomposed_view(h, d)?;
    center_entry_permutation(&g, labels[index], k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::allowseq::{critical_profile, validate};
    use crate::geom::{generate, GeneratorKind};
    use num_rational::Rational64;

    fn tuned(n: usize, seed: u64) -> PointSet {
        generate(
            GeneratorKind::ThreeRay,
            n,
            seed,
            Rational64::from_integer(8),
        )
        .unwrap()
    }

    #[test]
    fn triangle_decomposes_at_rotation_zero() {
        let h = HalfPeriod::new(vec![0, 1, 2], vec![1, 2, 1]).unwrap();
        let d = check_sequence_decomposition(&h, 0).unwrap().unwrap();
        assert_eq!(
            (d.a.clone(), d.b.clone(), d.c.clone()),
            (vec![0], vec![1], vec![2])
        );
        assert_eq!((d.s, d.t), (0, 1));
        assert_eq!(search_decomposition(&h).unwrap().unwrap().rotation, 0);
        // the other reduced word needs a rotation
        let h2 = HalfPeriod::new(vec![0, 1, 2], vec![2, 1, 2]).unwrap();
        assert!(check_sequence_decomposition(&h2, 0).unwrap().is_err());
        assert!(search_decomposition(&h2).unwrap().is_some());
    }

    #[test]
    fn requires_multiple_of_three() {
        let h = HalfPeriod::new(vec![0, 1, 2, 3], vec![1, 2, 3, 1, 2, 1]).unwrap();
        assert!(check_sequence_decomposition(&h, 0).is_err());
        assert!(search_decomposition(&h).is_err());
        assert!(bichromatic_closed_form(10, 2).is_err());
    }

    #[test]
    fn tuned_sets_decompose_with_block_orders() {
        for n in [6, 9, 12] {
            let p = tuned(n, 1);
            let h = from_point_set(&p).unwrap();
            let d = search_decomposition(&h).unwrap().expect("witness");
            let g = rotate(&h, d.rotation).unwrap();
            let third = n / 3;
            let after_s = g.permutation_at(d.s + 1);
            let after_t = g.permutation_at(d.t + 1);
            let sorted = |v: &[usize]| {
                let mut v = v.to_vec();
                v.sort();
                v
            };
            assert_eq!(sorted(&after_s[..third]), sorted(&d.b));
            assert_eq!(sorted(&after_s[third..2 * third]), sorted(&d.a));
            assert_eq!(sorted(&after_t[..third]), sorted(&d.b));
            assert_eq!(sorted(&after_t[third..2 * third]), sorted(&d.c));
            assert!(d.s < d.t && d.t < h.len());
        }
    }

    #[test]
    fn convex_sequence_refusal_is_earliest_violation() {
        let p = generate(GeneratorKind::Convex, 6, 1, Rational64::from_integer(8)).unwrap();
        let h = from_point_set(&p).unwrap();
        for r in 0..2 * h.len() {
            let g = rotate(&h, r).unwrap();
            let blocks = blocks_of(g.initial());
            // brute force: first step i such that some earlier step j < i is
            // in a later phase than step i
            let phase = |s: usize| {
                let perm = g.permutation_at(s);
                let gate = g.gates()[s];
                match pair_kind(blocks[perm[gate - 1]], blocks[perm[gate]]) {
                    PairKind::Mono => None,
                    PairKind::AB => Some(0),
                    PairKind::AC => Some(1),
                    PairKind::BC => Some(2),
                }
            };
            let phases: Vec<Option<u8>> = (0..g.len()).map(phase).collect();
            let oracle = (0..g.len()).find(|&i| {
                phases[i].is_some_and(|pi| phases[..i].iter().flatten().any(|&pj| pj > pi))
            });
            match check_sequence_decomposition(&h, r).unwrap() {
                Ok(_) => assert_eq!(oracle, None, "rotation {r}"),
                Err(refusal) => assert_eq!(Some(refusal.step), oracle, "rotation {r}"),
            }
        }
    }

    #[test]
    fn geometric_witness_clusters() {
        // three tight clusters near the corners of a large triangle
        let corners = [(0i64, 1000i64), (-866, -500), (866, -500)];
        let offsets = [(0i64, 0i64), (3, 1), (1, 4)];
        let mut pts = Vec::new();
        for &(cx, cy) in &corners {
            for &(dx, dy) in &offsets {
                pts.push(Point::new(cx + dx, cy + dy));
            }
        }
        let p = PointSet::new(pts).unwrap();
        // side directions: the side opposite each cluster
        let dir = |a: (i64, i64), b: (i64, i64)| Point::new(b.0 - a.0, b.1 - a.1);
        let parts = [vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]];
        // side through B and C sees A projected in the middle
        let w = GeometricWitness {
            parts: parts.clone(),
            directions: [
                dir(corners[1], corners[2]),
                dir(corners[2], corners[0]),
                dir(corners[0], corners[1]),
            ],
        };
        assert!(verify_geometric_witness(&p, &w).unwrap());

        let mut swapped = w.clone();
        swapped.parts = [vec![0, 1, 3], vec![2, 4, 5], vec![6, 7, 8]];
        assert!(!verify_geometric_witness(&p, &swapped).unwrap());

        let mut parallel = w.clone();
        parallel.directions[1] = parallel.directions[0];
        assert!(verify_geometric_witness(&p, &parallel).is_err());

        let mut uneven = w;
        uneven.parts = [vec![0, 1], vec![2, 3, 4, 5], vec![6, 7, 8]];
        assert!(verify_geometric_witness(&p, &uneven).is_err());
    }

    #[test]
    fn geometric_witness_singletons() {
        let p = PointSet::from_coords(&[(0, 10), (-9, -5), (9, -5)]).unwrap();
        let w = GeometricWitness {
            parts: [vec![0], vec![1], vec![2]],
            directions: [Point::new(1, 0), Point::new(9, -15), Point::new(-9, -15)],
        };
        assert!(verify_geometric_witness(&p, &w).unwrap());
    }

    #[test]
    fn main_theorem_verdicts() {
        for n in [6, 9] {
            let v = main_theorem_check(&tuned(n, 2)).unwrap();
            assert!(v.hypothesis && v.witness.is_some());
        }
        let convex = generate(GeneratorKind::Convex, 9, 0, Rational64::from_integer(8)).unwrap();
        let v = main_theorem_check(&convex).unwrap();
        assert!(!v.hypothesis);
        assert_eq!(v.failed_at, Some(0));
        assert!(v.consistent());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(bichromatic_closed_form(30, 10).unwrap(), 165);
        assert_eq!(bichromatic_closed_form(30, 14).unwrap(), 285);
        assert_eq!(bichromatic_closed_form(30, 15).unwrap(), 300);
        assert!(bichromatic_closed_form(30, 0).is_err());
        assert!(bichromatic_closed_form(30, 16).is_err());
        // the last level of odd n also exhausts the bichromatic pairs
        assert_eq!(bichromatic_closed_form(9, 4).unwrap(), 27);
    }

    #[test]
    fn stats_match_closed_form_and_profile() {
        for n in [6, 9, 12] {
            let h = from_point_set(&tuned(n, 4)).unwrap();
            let d = search_decomposition(&h).unwrap().unwrap();
            let st = phase_stats(&h, &d).unwrap();
            let prof = critical_profile(&rotate(&h, d.rotation).unwrap());
            for k in 1..=n / 2 {
                assert_eq!(st.bi[k - 1] + st.mono[k - 1], prof.n_k(k));
                assert_eq!(st.bi_le(k), bichromatic_closed_form(n, k).unwrap());
            }
            assert!(middle_third_check(&h, &d).unwrap().holds);
        }
    }

    #[test]
    fn middle_third_flags_outer_monochromatic_step() {
        // n = 3 has no interior gate, so the aa-free triangle passes while a
        // mono step at gate 1 in n = 6 fails
        let h = HalfPeriod::new(vec![0, 1, 2], vec![1, 2, 1]).unwrap();
        let d = search_decomposition(&h).unwrap().unwrap();
        assert!(middle_third_check(&h, &d).unwrap().holds);

        let words = crate::allowseq::all_half_periods(6).unwrap();
        let h = words
            .iter()
            .find(|h| {
                h.gates()[0] == 1
                    && search_decomposition(h)
                        .unwrap()
                        .is_some_and(|d| d.rotation == 0)
            })
            .expect("a decomposable word starting with an aa swap at gate 1");
        let d = search_decomposition(h).unwrap().unwrap();
        let mt = middle_third_check(h, &d).unwrap();
        assert!(!mt.holds);
        assert_eq!(mt.first_violation, Some(0));
    }

    #[test]
    fn decomposed_view_rejects_foreign_blocks() {
        let h = HalfPeriod::new(vec![0, 1, 2], vec![1, 2, 1]).unwrap();
        let mut d = search_decomposition(&h).unwrap().unwrap();
        d.a = vec![2];
        d.c = vec![0];
        assert!(matches!(phase_stats(&h, &d), Err(Error::Labeling(_))));
    }

    #[test]
    fn depth_labeling_of_tuned_sets() {
        let h = from_point_set(&tuned(9, 0)).unwrap();
        let d = search_decomposition(&h).unwrap().unwrap();
        for block in [Block::A, Block::B, Block::C] {
            let labels = depth_labeling(&h, &d, block).unwrap();
            assert_eq!(labels.len(), 4);
        }
        // a's keep their initial ranks: a_i sits at position n/3 - i + 1
        let a = depth_labeling(&h, &d, Block::A).unwrap();
        assert_eq!(&a[1..], &[d.a[2], d.a[1], d.a[0]]);
        assert!(validate(&rotate(&h, d.rotation).unwrap()).is_ok());
    }

    #[test]
    fn center_entry_of_deepest_a() {
        let n = 12;
        let h = from_point_set(&tuned(n, 3)).unwrap();
        let d = search_decomposition(&h).unwrap().unwrap();
        let k = n / 2 - 2;
        let (steps, perm) = center_entry(&h, &d, Block::A, n / 3, k).unwrap();
        let deepest = d.a[0];
        let pos = perm.iter().position(|&l| l == deepest).unwrap() + 1;
        assert!(steps > 0);
        assert!(pos > k && pos <= n - k);
        // every C element is still in the last k positions or the center
        // has not been reached by C from the right: C swaps only after AB
        let g = rotate(&h, d.rotation).unwrap();
        assert_eq!(g.permutation_at(steps), perm);
    }
}
