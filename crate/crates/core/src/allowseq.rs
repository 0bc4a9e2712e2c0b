//! Half-periods of allowable sequences.
//!
//! A half-period is an initial permutation of the labels `0..n` followed by
//! `C(n,2)` adjacent swaps. Step `t` swaps the elements at 1-indexed positions
//! `gates[t]` and `gates[t] + 1`. The full period continues with the same
//! swaps mirrored (`g -> n - g`).
//!
//! The k-labeling names the first `k` positions of the initial permutation
//! `a_k, ..., a_1`, the middle `m = n - 2k` positions `b_1, ..., b_m` and the
//! last `k` positions `c_1, ..., c_k`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{check_range, Error, Result};
use crate::geom::{Point, PointSet};
use crate::kedges::choose;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct HalfPeriod {
    initial: Vec<usize>,
    gates: Vec<usize>,
}

/// Number of steps in a half-period on `n` elements.
pub fn steps_for(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// First violated half-period invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Violation {
    WrongLength {
        expected: usize,
        got: usize,
    },
    GateOutOfRange {
        step: usize,
        gate: usize,
    },
    PairSwappedTwice {
        step: usize,
        first: usize,
        second: usize,
    },
    NotReversed,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { expected, got } => {
                write!(f, "expected {expected} steps, found {got}")
            }
            Violation::GateOutOfRange { step, gate } => {
                write!(f, "step {step}: gate {gate} out of range")
            }
            Violation::PairSwappedTwice {
                step,
                first,
                second,
            } => {
                write!(f, "step {step}: pair swapped twice ({first}, {second})")
            }
            Violation::NotReversed => {
                f.write_str("final permutation is not the reverse of the initial")
            }
        }
    }
}

impl HalfPeriod {
    /// Checks that `initial` is a permutation of `0..n` and every gate lies in
    /// `1..n`. The pair and reversal invariants are checked by [`validate`].
    pub fn new(initial: Vec<usize>, gates: Vec<usize>) -> Result<Self> {
        let n = initial.len();
        let mut seen = vec![false; n];
        for &l in &initial {
            if l >= n || std::mem::replace(&mut seen[l], true) {
                return Err(Error::InvalidHalfPeriod(format!(
                    "initial permutation is not a permutation of 0..{n}"
                )));
            }
        }
        if let Some((step, &gate)) = gates.iter().enumerate().find(|(_, &g)| g == 0 || g >= n) {
            return Err(Error::InvalidHalfPeriod(
                Violation::GateOutOfRange { step, gate }.to_string(),
            ));
        }
        Ok(HalfPeriod { initial, gates })
    }

    /// Like [`new`](Self::new) but also requires [`validate`] to pass.
    pub fn new_checked(initial: Vec<usize>, gates: Vec<usize>) -> Result<Self> {
        let h = Self::new(initial, gates)?;
        validate(&h).map_err(|v| Error::InvalidHalfPeriod(v.to_string()))?;
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.initial.len()
    }

    pub fn initial(&self) -> &[usize] {
        &self.initial
    }

    pub fn gates(&self) -> &[usize] {
        &self.gates
    }

    pub fn len(&self) -> usize {
        self.gates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gates.is_empty()
    }

    /// Replays the steps, yielding `(step, gate, moved_right, moved_left,
    /// permutation_after)` for each step.
    pub fn replay(&self) -> Replay<'_> {
        Replay {
            gates: &self.gates,
            perm: self.initial.clone(),
            step: 0,
        }
    }

    /// Permutation after applying every step.
    pub fn final_permutation(&self) -> Vec<usize> {
        let mut perm = self.initial.clone();
        for &g in &self.gates {
            perm.swap(g - 1, g);
        }
        perm
    }

    /// Permutation after the first `t` steps, `t <= len()`.
    pub fn permutation_at(&self, t: usize) -> Vec<usize> {
        let mut perm = self.initial.clone();
        for &g in &self.gates[..t] {
            perm.swap(g - 1, g);
        }
        perm
    }
}

/// One replayed step.
#[derive(Debug, Clone)]
pub struct Step<'a> {
    pub index: usize,
    pub gate: usize,
    /// Element that moves from position `gate` to `gate + 1`.
    pub rightward: usize,
    /// Element that moves from position `gate + 1` to `gate`.
    pub leftward: usize,
    /// Permutation after the step.
    pub after: &'a [usize],
}

pub struct Replay<'a> {
    gates: &'a [usize],
    perm: Vec<usize>,
    step: usize,
}

impl Replay<'_> {
    /// Advances one step. Not an `Iterator` because each item borrows the
    /// internal permutation.
    pub fn next_step(&mut self) -> Option<Step<'_>> {
        let &gate = self.gates.get(self.step)?;
        let rightward = self.perm[gate - 1];
        let leftward = self.perm[gate];
        self.perm.swap(gate - 1, gate);
        let index = self.step;
        self.step += 1;
        Some(Step {
            index,
            gate,
            rightward,
            leftward,
            after: &self.perm,
        })
    }
}

impl fmt::Display for HalfPeriod {
    /// Line 1 `n`, line 2 the initial permutation, then one gate per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        let labels: Vec<String> = self.initial.iter().map(usize::to_string).collect();
        writeln!(f, "{}", labels.join(" "))?;
        for g in &self.gates {
            writeln!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for HalfPeriod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let parse = |line: usize, tok: &str| -> Result<usize> {
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("expected a non-negative integer, found {tok:?}"),
            })
        };
        let (line, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty half-period".into(),
        })?;
        let n = parse(line, first)?;
        let (line, perm) = lines.next().ok_or(Error::Parse {
            line: line + 1,
            msg: "missing initial permutation".into(),
        })?;
        let initial = perm
            .split_whitespace()
            .map(|t| parse(line, t))
            .collect::<Result<Vec<_>>>()?;
        if initial.len() != n {
            return Err(Error::Parse {
                line,
                msg: format!("expected {n} labels, found {}", initial.len()),
            });
        }
        let gates = lines
            .map(|(line, g)| parse(line, g))
            .collect::<Result<Vec<_>>>()?;
        HalfPeriod::new(initial, gates)
    }
}

/// Checks the step count, that every pair swaps exactly once, and that the
/// final permutation reverses the initial one.
pub fn validate(h: &HalfPeriod) -> std::result::Result<(), Violation> {
    let n = h.n();
    if h.len() != steps_for(n) {
        return Err(Violation::WrongLength {
            expected: steps_for(n),
            got: h.len(),
        });
    }
    let mut swapped = vec![false; n * n];
    let mut perm = h.initial.clone();
    for (step, &g) in h.gates.iter().enumerate() {
        if g == 0 || g >= n {
            return Err(Violation::GateOutOfRange { step, gate: g });
        }
        let (x, y) = (perm[g - 1], perm[g]);
        let key = x.min(y) * n + x.max(y);
        if std::mem::replace(&mut swapped[key], true) {
            return Err(Violation::PairSwappedTwice {
                step,
                first: x,
                second: y,
            });
        }
        perm.swap(g - 1, g);
    }
    if perm.iter().ne(h.initial.iter().rev()) {
        return Err(Violation::NotReversed);
    }
    Ok(())
}

/// Points normalized to the half-open upper half-plane: `y > 0`, or `y = 0`
/// and `x > 0`.
fn upper_half(v: Point) -> Point {
    if v.y < 0 || (v.y == 0 && v.x < 0) {
        Point::new(-v.x, -v.y)
    } else {
        v
    }
}

/// Compares directions in `[0, pi)` exactly.
fn angle_cmp(a: Point, b: Point) -> Ordering {
    0.cmp(&a.cross(b))
}

/// Circular sequence of a point set: the order of projections onto a
/// rotating direction, from just before the first swap through half a turn.
/// Labels are indices into `set`. Swaps sharing an angle are disjoint and
/// are applied in ascending gate order.
pub fn from_point_set(set: &PointSet) -> Result<HalfPeriod> {
    set.require_at_least(2)?;
    let pts = set.points();
    let n = pts.len();

    // direction of the projection axis at which the pair swaps
    let mut events: Vec<(Point, usize, usize)> = Vec::with_capacity(steps_for(n));
    for i in 0..n {
        for j in i + 1..n {
            let d = pts[j] - pts[i];
            events.push((upper_half(Point::new(-d.y, d.x)), i, j));
        }
    }
    events.sort_by(|a, b| angle_cmp(a.0, b.0));

    let axis = events[0].0;
    let normal = Point::new(-axis.y, axis.x);
    let mut initial: Vec<usize> = (0..n).collect();
    initial.sort_by_key(|&i| (pts[i].dot(axis), -pts[i].dot(normal)));

    let mut pos = vec![0usize; n];
    for (p, &l) in initial.iter().enumerate() {
        pos[l] = p;
    }
    let mut perm = initial.clone();
    let mut gates = Vec::with_capacity(events.len());
    let mut group: Vec<usize> = Vec::new();
    let mut start = 0;
    while start < events.len() {
        let mut end = start + 1;
        while end < events.len() && angle_cmp(events[start].0, events[end].0) == Ordering::Equal {
            end += 1;
        }
        group.clear();
        for &(_, i, j) in &events[start..end] {
            let (lo, hi) = (pos[i].min(pos[j]), pos[i].max(pos[j]));
            debug_assert_eq!(hi, lo + 1, "swapping pair must be adjacent");
            group.push(lo + 1);
        }
        group.sort_unstable();
        for &g in &group {
            let (x, y) = (perm[g - 1], perm[g]);
            perm.swap(g - 1, g);
            pos[x] = g;
            pos[y] = g - 1;
            gates.push(g);
        }
        start = end;
    }
    HalfPeriod::new(initial, gates)
}

/// Shifts the start of the half-period by `t` steps along the full period
/// `0 <= t < 2 C(n,2)`.
pub fn rotate(h: &HalfPeriod, t: usize) -> Result<HalfPeriod> {
    let n = h.n();
    let half = h.len();
    check_range("t", t as i64, 0, 2 * half as i64 - 1)?;
    let full = |s: usize| -> usize {
        let s = s % (2 * half);
        if s < half {
            h.gates[s]
        } else {
            n - h.gates[s - half]
        }
    };
    let mut perm = h.initial.clone();
    for s in 0..t {
        let g = full(s);
        perm.swap(g - 1, g);
    }
    let gates = (t..t + half).map(full).collect();
    HalfPeriod::new(perm, gates)
}

/// Time reversal: starts from the final permutation and replays the steps
/// backwards through the same gates.
pub fn reverse(h: &HalfPeriod) -> HalfPeriod {
    HalfPeriod {
        initial: h.final_permutation(),
        gates: h.gates.iter().rev().copied().collect(),
    }
}

/// Counts of k-critical steps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriticalProfile {
    pub n: usize,
    /// `N_k` for `k = 1 ..= floor(n/2)`, at index `k - 1`.
    pub counts: Vec<u64>,
    /// `N_{<=k}`, same indexing.
    pub cumulative: Vec<u64>,
    /// Number of halving steps for even `n`.
    pub halvings: Option<u64>,
}

impl CriticalProfile {
    /// `N_k`, 0 outside `1..=floor(n/2)`.
    pub fn n_k(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.counts.get(k - 1).copied().unwrap_or(0)
        }
    }

    /// `N_{<=k}`, clamped at the top level.
    pub fn n_le(&self, k: usize) -> u64 {
        if k == 0 || self.cumulative.is_empty() {
            0
        } else {
            self.cumulative[(k - 1).min(self.cumulative.len() - 1)]
        }
    }
}

/// Gate `g` is `min(g, n - g)`-critical.
pub fn critical_level(n: usize, gate: usize) -> usize {
    gate.min(n - gate)
}

pub fn critical_profile(h: &HalfPeriod) -> CriticalProfile {
    let n = h.n();
    let mut counts = vec![0u64; n / 2];
    for &g in &h.gates {
        counts[critical_level(n, g) - 1] += 1;
    }
    let cumulative = counts
        .iter()
        .scan(0, |acc, &c| {
            *acc += c;
            Some(*acc)
        })
        .collect();
    let halvings = (n.is_multiple_of(2) && n > 0).then(|| counts[n / 2 - 1]);
    CriticalProfile {
        n,
        counts,
        cumulative,
        halvings,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Role {
    A(usize),
    B(usize),
    C(usize),
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::A(i) => write!(f, "a{i}"),
            Role::B(i) => write!(f, "b{i}"),
            Role::C(i) => write!(f, "c{i}"),
        }
    }
}

/// Roles of the labels under the k-labeling of an initial permutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KLabeling {
    pub k: usize,
    pub m: usize,
    roles: Vec<Role>,
    a: Vec<usize>,
    c: Vec<usize>,
}

impl KLabeling {
    pub fn new(initial: &[usize], k: usize) -> Result<Self> {
        let n = initial.len();
        if k == 0 || 2 * k >= n {
            return Err(Error::OutOfRange {
                what: "k",
                value: k as i64,
                lo: 1,
                hi: (n as i64 - 1) / 2,
            });
        }
        let m = n - 2 * k;
        let mut roles = vec![Role::B(0); n];
        let mut a = vec![0; k + 1];
        let mut c = vec![0; k + 1];
        for (p, &l) in initial.iter().enumerate() {
            let pos = p + 1;
            roles[l] = if pos <= k {
                a[k - pos + 1] = l;
                Role::A(k - pos + 1)
            } else if pos <= k + m {
                Role::B(pos - k)
            } else {
                c[pos - k - m] = l;
                Role::C(pos - k - m)
            };
        }
        Ok(KLabeling { k, m, roles, a, c })
    }

    pub fn role(&self, label: usize) -> Role {
        self.roles[label]
    }

    /// Label of `a_i`, `1 <= i <= k`.
    pub fn a(&self, i: usize) -> usize {
        self.a[i]
    }

    /// Label of `c_i`, `1 <= i <= k`.
    pub fn c(&self, i: usize) -> usize {
        self.c[i]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Zone {
    A,
    B,
    C,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepTag {
    pub step: usize,
    pub gate: usize,
    pub zone: Zone,
    /// Labels for which the step is a discovery, rightward mover first.
    pub discovery_for: Vec<usize>,
    pub double: bool,
    pub confined: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiberationSequence {
    /// a's and c's in order of first liberation.
    pub order: Vec<Role>,
}

impl LiberationSequence {
    /// `T(x)`: elements of the opposite class liberated after `x`.
    pub fn t_set(&self, x: Role) -> Vec<Role> {
        let Some(p) = self.order.iter().position(|&r| r == x) else {
            return Vec::new();
        };
        self.order[p + 1..]
            .iter()
            .copied()
            .filter(|r| matches!((x, r), (Role::A(_), Role::C(_)) | (Role::C(_), Role::A(_))))
            .collect()
    }

    /// True iff all a's, or all c's, appear as one contiguous run.
    pub fn has_consecutive_class(&self) -> bool {
        let run = |want: fn(&Role) -> bool| {
            let idx: Vec<usize> = self
                .order
                .iter()
                .enumerate()
                .filter(|(_, r)| want(r))
                .map(|(i, _)| i)
                .collect();
            idx.is_empty() || idx[idx.len() - 1] - idx[0] + 1 == idx.len()
        };
        run(|r| matches!(r, Role::A(_))) || run(|r| matches!(r, Role::C(_)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub k: usize,
    pub labeling: KLabeling,
    pub tags: Vec<StepTag>,
    pub liberation: LiberationSequence,
}

impl Classification {
    pub fn confined_steps(&self) -> impl Iterator<Item = &StepTag> {
        self.tags.iter().filter(|t| t.confined)
    }

    pub fn has_confined(&self) -> bool {
        self.tags.iter().any(|t| t.confined)
    }

    /// Steps that are a discovery for some a.
    pub fn discovery_for_a(&self) -> usize {
        self.count_discovery(|r| matches!(r, Role::A(_)))
    }

    /// Steps that are a discovery for some c.
    pub fn discovery_for_c(&self) -> usize {
        self.count_discovery(|r| matches!(r, Role::C(_)))
    }

    pub fn double_discoveries(&self) -> usize {
        self.tags.iter().filter(|t| t.double).count()
    }

    fn count_discovery(&self, class: fn(&Role) -> bool) -> usize {
        self.tags
            .iter()
            .filter(|t| {
                t.discovery_for
                    .iter()
                    .any(|&l| class(&self.labeling.role(l)))
            })
            .count()
    }
}

/// Tags every step with its zone, discovery status and confinement under the
/// k-labeling of the initial permutation, and records the liberation order.
pub fn classify_steps(h: &HalfPeriod, k: usize) -> Result<Classification> {
    let n = h.n();
    let lab = KLabeling::new(&h.initial, k)?;
    let m = lab.m;
    let mut discovered = vec![Vec::<usize>::new(); n];
    let mut free = vec![false; n];
    let mut order = Vec::with_capacity(2 * k);
    let mut tags = Vec::with_capacity(h.len());

    // The i-th A-gate is gate k - i + 1; the i-th C-gate is gate k + m + i - 1.
    let a_gate = |g: usize| (g <= k).then(|| k - g + 1);
    let c_gate = |g: usize| (g >= k + m).then(|| g - k - m + 1);

    let mut replay = h.replay();
    while let Some(step) = replay.next_step() {
        let g = step.gate;
        let (r, l) = (step.rightward, step.leftward);
        let zone = if g <= k {
            Zone::A
        } else if g >= k + m {
            Zone::C
        } else {
            Zone::B
        };
        let confined =
            is_confinable(lab.role(r)) && !free[r] && is_confinable(lab.role(l)) && !free[l];

        // a's pass their compulsory gates moving right, c's moving left
        let compulsory_right = match lab.role(r) {
            Role::A(j) => a_gate(g).or(c_gate(g)).is_some_and(|i| i <= j),
            _ => false,
        };
        let compulsory_left = match lab.role(l) {
            Role::C(j) => a_gate(g).or(c_gate(g)).is_some_and(|i| i <= j),
            _ => false,
        };
        let mut discovery_for = Vec::with_capacity(2);
        for (label, compulsory) in [(r, compulsory_right), (l, compulsory_left)] {
            if compulsory && !discovered[label].contains(&g) {
                discovered[label].push(g);
                discovery_for.push(label);
            }
        }

        if matches!(lab.role(r), Role::A(_)) && g == k && !free[r] {
            free[r] = true;
            order.push(lab.role(r));
        }
        if matches!(lab.role(l), Role::C(_)) && g == k + m && !free[l] {
            free[l] = true;
            order.push(lab.role(l));
        }

        tags.push(StepTag {
            step: step.index,
            gate: g,
            zone,
            double: discovery_for.len() == 2,
            discovery_for,
            confined,
        });
    }
    Ok(Classification {
        k,
        labeling: lab,
        tags,
        liberation: LiberationSequence { order },
    })
}

fn is_confinable(r: Role) -> bool {
    matches!(r, Role::A(_) | Role::C(_))
}

/// Per-clause outcome of the perfectness test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Perfectness {
    pub k: usize,
    /// First A/C-zone step that is not a discovery.
    pub clause_a_violation: Option<usize>,
    /// `(i, found, required)` for each `a_i` with the wrong number of
    /// C-zone double discoveries.
    pub clause_b_violations: Vec<(usize, usize, usize)>,
    /// Same for `c_i` and A-zone double discoveries.
    pub clause_c_violations: Vec<(usize, usize, usize)>,
}

impl Perfectness {
    pub fn is_perfect(&self) -> bool {
        self.clause_a_violation.is_none()
            && self.clause_b_violations.is_empty()
            && self.clause_c_violations.is_empty()
    }
}

/// Evaluates the three perfectness clauses. Half-periods with confined steps
/// are refused with [`Error::Confined`].
pub fn is_perfect(h: &HalfPeriod, k: usize) -> Result<Perfectness> {
    let cls = classify_steps(h, k)?;
    perfectness_of(&cls)
}

pub fn perfectness_of(cls: &Classification) -> Result<Perfectness> {
    let confined: Vec<usize> = cls.confined_steps().map(|t| t.step).collect();
    if let Some(&first) = confined.first() {
        return Err(Error::Confined {
            count: confined.len(),
            first,
        });
    }
    let k = cls.k;
    let clause_a_violation = cls
        .tags
        .iter()
        .find(|t| t.zone != Zone::B && t.discovery_for.is_empty())
        .map(|t| t.step);

    let double_in = |label: usize, zone: Zone| {
        cls.tags
            .iter()
            .filter(|t| t.double && t.zone == zone && t.discovery_for.contains(&label))
            .count()
    };
    let mut clause_b_violations = Vec::new();
    let mut clause_c_violations = Vec::new();
    for i in 1..=k {
        let want = |role| i.min(cls.liberation.t_set(role).len());
        let got = double_in(cls.labeling.a(i), Zone::C);
        if got != want(Role::A(i)) {
            clause_b_violations.push((i, got, want(Role::A(i))));
        }
        let got = double_in(cls.labeling.c(i), Zone::A);
        if got != want(Role::C(i)) {
            clause_c_violations.push((i, got, want(Role::C(i))));
        }
    }
    Ok(Perfectness {
        k,
        clause_a_violation,
        clause_b_violations,
        clause_c_violations,
    })
}

/// Permutation right after the first step that moves `label` to a position
/// strictly inside the k-center (positions `k+1 ..= n-k`), together with the
/// number of steps applied. An element already inside gives `(0, initial)`.
pub fn center_entry_permutation(
    h: &HalfPeriod,
    label: usize,
    k: usize,
) -> Result<(usize, Vec<usize>)> {
    let n = h.n();
    let Some(p0) = h.initial.iter().position(|&l| l == label) else {
        return Err(Error::InvalidArgument(format!(
            "label {label} not in the half-period"
        )));
    };
    let inside = |pos: usize| pos > k && pos <= n.saturating_sub(k);
    if inside(p0 + 1) {
        return Ok((0, h.initial.clone()));
    }
    let mut replay = h.replay();
    while let Some(step) = replay.next_step() {
        let new_pos = if step.rightward == label {
            step.gate + 1
        } else if step.leftward == label {
            step.gate
        } else {
            continue;
        };
        if inside(new_pos) {
            return Ok((step.index + 1, step.after.to_vec()));
        }
    }
    Err(Error::NeverEnters(label))
}

/// Every half-period starting at the identity on `n <= 6` elements, i.e.
/// every reduced word of the reversing permutation.
pub fn all_half_periods(n: usize) -> Result<Vec<HalfPeriod>> {
    check_range("n", n as i64, 1, 6)?;
    fn walk(
        perm: &mut Vec<usize>,
        gates: &mut Vec<usize>,
        total: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if gates.len() == total {
            out.push(gates.clone());
            return;
        }
        for g in 1..perm.len() {
            if perm[g - 1] < perm[g] {
                perm.swap(g - 1, g);
                gates.push(g);
                walk(perm, gates, total, out);
                gates.pop();
                perm.swap(g - 1, g);
            }
        }
    }
    let mut words = Vec::new();
    walk(
        &mut (0..n).collect(),
        &mut Vec::new(),
        steps_for(n),
        &mut words,
    );
    Ok(words
        .into_iter()
        .map(|gates| HalfPeriod {
            initial: (0..n).collect(),
            gates,
        })
        .collect())
}

/// `3 C(k+1, 2)`, the minimum number of (<=k)-critical steps.
pub fn min_critical(k: usize) -> u64 {
    3 * choose(k as i64 + 1, 2) as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::{generate, GeneratorKind};
    use crate::kedges::edge_vector;
    use num_rational::Rational64;

    fn set(c: &[(i64, i64)]) -> PointSet {
        PointSet::from_coords(c).unwrap()
    }

    fn hp(initial: &[usize], gates: &[usize]) -> HalfPeriod {
        HalfPeriod::new(initial.to_vec(), gates.to_vec()).unwrap()
    }

    #[test]
    fn triangle_sequence() {
        let h = from_point_set(&set(&[(0, 0), (4, 1), (1, 3)])).unwrap();
        assert_eq!(h.len(), 3);
        assert!(validate(&h).is_ok());
        let prof = critical_profile(&h);
        assert_eq!(prof.counts, vec![3]);
    }

    #[test]
    fn convex4_profile_matches_edges() {
        let p = set(&[(0, 0), (4, 0), (4, 3), (0, 5)]);
        let h = from_point_set(&p).unwrap();
        assert!(validate(&h).is_ok());
        let prof = critical_profile(&h);
        assert_eq!(prof.counts, vec![4, 2]);
        assert_eq!(prof.halvings, Some(2));
        assert_eq!(
            h.final_permutation(),
            h.initial().iter().rev().copied().collect::<Vec<_>>()
        );
    }

    #[test]
    fn convex6_profile() {
        let p = set(&[(2, 0), (1, 2), (-1, 2), (-2, 0), (-1, -2), (1, -2)]);
        let prof = critical_profile(&from_point_set(&p).unwrap());
        assert_eq!(prof.counts, vec![6, 6, 3]);
        assert_eq!(prof.halvings, Some(3));
    }

    #[test]
    fn parallel_pairs_are_handled() {
        // the square has two pairs of parallel sides
        let p = set(&[(0, 0), (2, 0), (2, 2), (0, 2), (1, 5)]);
        let h = from_point_set(&p).unwrap();
        assert!(validate(&h).is_ok());
        let ev = edge_vector(&p).unwrap();
        let prof = critical_profile(&h);
        assert_eq!(prof.counts, ev.counts());
    }

    #[test]
    fn validate_reports_violations() {
        assert_eq!(
            validate(&hp(&[0, 1, 2], &[1, 1, 2])),
            Err(Violation::PairSwappedTwice {
                step: 1,
                first: 1,
                second: 0
            })
        );
        assert_eq!(
            validate(&hp(&[0, 1, 2], &[1, 2])),
            Err(Violation::WrongLength {
                expected: 3,
                got: 2
            })
        );
        // 4 elements, 6 distinct swaps that do not reverse: impossible, so
        // a repeated pair or wrong final order must be caught
        let bad = hp(&[0, 1, 2, 3], &[1, 3, 2, 1, 3, 1]);
        assert!(validate(&bad).is_err());
        assert!(HalfPeriod::new(vec![0, 0, 1], vec![]).is_err());
        assert!(HalfPeriod::new(vec![0, 1, 2], vec![3]).is_err());
    }

    #[test]
    fn rotation_examples() {
        let p = generate(GeneratorKind::RandomDisk, 7, 3, Rational64::from_integer(8)).unwrap();
        let h = from_point_set(&p).unwrap();
        assert_eq!(rotate(&h, 0).unwrap(), h);
        let half = rotate(&h, h.len()).unwrap();
        assert_eq!(half.initial(), h.final_permutation().as_slice());
        let mirrored: Vec<usize> = h.gates().iter().map(|g| 7 - g).collect();
        assert_eq!(half.gates(), mirrored.as_slice());
        for t in 0..2 * h.len() {
            let r = rotate(&h, t).unwrap();
            assert!(validate(&r).is_ok(), "rotation {t}");
            assert_eq!(critical_profile(&r).counts, critical_profile(&h).counts);
        }
        assert!(rotate(&h, 2 * h.len()).is_err());
    }

    #[test]
    fn reverse_examples() {
        let h = hp(&[0, 1, 2], &[1, 2, 1]);
        let r = reverse(&h);
        assert!(validate(&r).is_ok());
        assert_eq!(r.initial(), &[2, 1, 0]);
        assert_eq!(reverse(&r), h);
        assert_eq!(critical_profile(&r), critical_profile(&h));
    }

    #[test]
    fn text_round_trip() {
        let h = hp(&[2, 0, 1], &[2, 1, 2]);
        let text = h.to_string();
        assert_eq!(text, "3\n2 0 1\n2\n1\n2\n");
        assert_eq!(text.parse::<HalfPeriod>().unwrap(), h);
        assert!("3\n0 1\n".parse::<HalfPeriod>().is_err());
        assert!("x\n".parse::<HalfPeriod>().is_err());
    }

    #[test]
    fn first_step_exit_frees_a1() {
        // n = 4, k = 1: a1 b1 b2 c1, first step swaps a1 and b1 at gate 1
        let h = hp(&[0, 1, 2, 3], &[1, 2, 3, 1, 2, 1]);
        assert!(validate(&h).is_ok());
        let cls = classify_steps(&h, 1).unwrap();
        assert_eq!(cls.tags[0].discovery_for, vec![0]);
        assert_eq!(cls.liberation.order[0], Role::A(1));
        assert!(!cls.has_confined());
    }

    #[test]
    fn classify_rejects_bad_k() {
        let h = hp(&[0, 1, 2, 3], &[1, 2, 3, 1, 2, 1]);
        assert!(classify_steps(&h, 0).is_err());
        assert!(classify_steps(&h, 2).is_err());
    }

    #[test]
    fn confined_steps_are_detected() {
        // a2 a1 b1 b2 c1 c2 with the two a's swapping first (k = 2)
        let words = all_half_periods(6).unwrap();
        let h = words.iter().find(|h| h.gates()[0] == 1).unwrap();
        let cls = classify_steps(h, 2).unwrap();
        assert!(cls.tags[0].confined);
        assert!(matches!(
            is_perfect(h, 2),
            Err(Error::Confined { first: 0, .. })
        ));
    }

    #[test]
    fn enumeration_sizes() {
        let counts: Vec<usize> = (1..=5)
            .map(|n| all_half_periods(n).unwrap().len())
            .collect();
        // reduced words of the longest permutation
        assert_eq!(counts, vec![1, 1, 2, 16, 768]);
        assert!(all_half_periods(7).is_err());
    }

    #[test]
    fn liberation_helpers() {
        let seq = LiberationSequence {
            order: vec![Role::A(1), Role::C(1), Role::A(2), Role::C(2)],
        };
        assert_eq!(seq.t_set(Role::A(1)), vec![Role::C(1), Role::C(2)]);
        assert_eq!(seq.t_set(Role::C(2)), vec![]);
        assert!(!seq.has_consecutive_class());
        let seq = LiberationSequence {
            order: vec![Role::A(1), Role::C(1), Role::C(2), Role::A(2)],
        };
        assert!(seq.has_consecutive_class());
    }

    #[test]
    fn center_entry_examples() {
        let h = hp(&[0, 1, 2], &[1, 2, 1]);
        assert_eq!(
            center_entry_permutation(&h, 0, 0).unwrap(),
            (0, vec![0, 1, 2])
        );
        assert!(center_entry_permutation(&h, 7, 0).is_err());
        // a at position 1 enters the 1-center (position 2) at the first step
        assert_eq!(
            center_entry_permutation(&h, 0, 1).unwrap(),
            (1, vec![1, 0, 2])
        );
    }
}
