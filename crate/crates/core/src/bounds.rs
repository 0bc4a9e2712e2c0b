//! Halving bounds, crossing-number scenarios and the replay of the `n = 30`
//! arithmetic.

use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::decomp::bichromatic_closed_form;
use crate::digraph::build_d0;
use crate::error::{Error, Result};
use crate::kedges::{choose, crossing_from_edges, lower_bound_leq_k, EdgeVector};

fn require_n(n: usize) -> Result<()> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("n = {n}, need n >= 4")));
    }
    Ok(())
}

fn floor(r: Rational64) -> u64 {
    r.floor().to_integer().max(0) as u64
}

/// Upper bound on the number of halving steps given `N_{<=floor(n/2)-2}`.
pub fn halving_upper_bound(n: usize, n_le_nm2: u64) -> Result<u64> {
    require_n(n)?;
    let total = choose(n as i64, 2);
    let rest = total - n_le_nm2 as i64;
    if rest < 0 {
        return Err(Error::InvalidArgument(format!(
            "N = {n_le_nm2} exceeds C({n},2) = {total}"
        )));
    }
    Ok(if n.is_multiple_of(2) {
        floor(Rational64::new(rest, 2))
    } else {
        floor(Rational64::new(2 * rest, 3) + Rational64::new(1, 3))
    })
}

/// Lower bound on `N_{<=floor(n/2)-1}`.
pub fn cumulative_lower_bound_nm1(n: usize) -> Result<u64> {
    require_n(n)?;
    let n = n as i64;
    let total = choose(n, 2) as u64;
    let cut = if n % 2 == 0 {
        Rational64::new(n * (n + 30), 24) - 3
    } else {
        Rational64::new((n - 3) * (n + 45), 18) + Rational64::new(1, 9)
    };
    Ok(total - floor(cut))
}

/// Cumulative critical counts `N_{<=k}` for `k = 1 ..= n/2` of a
/// hypothetical half-period.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scenario {
    pub n: usize,
    /// `N_{<=k}` at index `k - 1`.
    pub cumulative: Vec<u64>,
}

impl Scenario {
    pub fn new(n: usize, cumulative: Vec<u64>) -> Result<Self> {
        require_n(n)?;
        if !n.is_multiple_of(2) {
            return Err(Error::Scenario(format!("n = {n} must be even")));
        }
        if cumulative.len() != n / 2 {
            return Err(Error::Scenario(format!(
                "expected {} cumulative counts, got {}",
                n / 2,
                cumulative.len()
            )));
        }
        if cumulative.windows(2).any(|w| w[1] < w[0]) {
            return Err(Error::Scenario("level counts must be nonnegative".into()));
        }
        let total = choose(n as i64, 2) as u64;
        if cumulative[n / 2 - 1] != total {
            return Err(Error::Scenario(format!(
                "levels sum to {}, expected {total}",
                cumulative[n / 2 - 1]
            )));
        }
        Ok(Scenario { n, cumulative })
    }

    /// `N_{<=k}` equal to the `(<=k-1)`-edge lower bound for `k <= tight_upto`,
    /// then the explicit level counts `N_{tight_upto+1}, ...`.
    pub fn tight(n: usize, tight_upto: usize, explicit: &[u64]) -> Result<Self> {
        require_n(n)?;
        if tight_upto + explicit.len() != n / 2 {
            return Err(Error::Scenario(format!(
                "{tight_upto} tight levels and {} explicit ones do not cover {} levels",
                explicit.len(),
                n / 2
            )));
        }
        let mut cumulative = Vec::with_capacity(n / 2);
        for k in 1..=tight_upto {
            cumulative.push(lower_bound_leq_k(n, k - 1)?);
        }
        let mut acc = cumulative.last().copied().unwrap_or(0);
        for &x in explicit {
            acc += x;
            cumulative.push(acc);
        }
        Scenario::new(n, cumulative)
    }

    pub fn n_le(&self, k: usize) -> u64 {
        if k == 0 {
            0
        } else {
            self.cumulative[k - 1]
        }
    }

    pub fn n_k(&self, k: usize) -> u64 {
        self.n_le(k) - self.n_le(k - 1)
    }
}

/// Crossing count of the edge vector with `E_{<=k-1} = N_{<=k}`.
pub fn scenario_crossing(s: &Scenario) -> Result<i64> {
    let ev = EdgeVector::from_cumulative(s.n, &s.cumulative)?;
    Ok(crossing_from_edges(&ev))
}

/// Smallest crossing count over completions of the first `n/2 - 2` levels:
/// the remaining `N_{<=n/2-1}` is pushed as low as both halving bounds allow.
pub fn optimal_completion(n: usize, low: &[u64]) -> Result<Scenario> {
    require_n(n)?;
    if low.len() != n / 2 - 2 {
        return Err(Error::Scenario(format!(
            "expected {} low levels",
            n / 2 - 2
        )));
    }
    let total = choose(n as i64, 2) as u64;
    let n_le_nm2 = low.last().copied().unwrap_or(0);
    let by_halving = total - halving_upper_bound(n, n_le_nm2)?.min(total);
    let n_le_nm1 = cumulative_lower_bound_nm1(n)?.max(by_halving).max(n_le_nm2);
    let mut cumulative = low.to_vec();
    cumulative.push(n_le_nm1);
    cumulative.push(total);
    Scenario::new(n, cumulative)
}

/// One replayed quantity: what the code computes and what the argument
/// states.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportLine {
    pub label: String,
    pub computed: i64,
    pub stated: i64,
    /// Taken as given rather than derived here.
    pub asserted: bool,
}

impl ReportLine {
    pub fn ok(&self) -> bool {
        self.computed == self.stated
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct K30Report {
    pub lines: Vec<ReportLine>,
    pub value: i64,
}

impl K30Report {
    pub fn consistent(&self) -> bool {
        self.lines.iter().all(ReportLine::ok)
    }
}

impl fmt::Display for K30Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.lines.iter().map(|l| l.label.len()).max().unwrap_or(0);
        for l in &self.lines {
            writeln!(
                f,
                "{:<width$}  {:>6}  {:>6}  {}{}",
                l.label,
                l.computed,
                l.stated,
                if l.ok() { "OK" } else { "MISMATCH" },
                if l.asserted { " (asserted)" } else { "" },
            )?;
        }
        write!(f, "cr(K_30) = {}", self.value)
    }
}

/// Per-class caps on same-block halving swaps in the two cases of the final
/// case analysis, as (aa, bb, cc).
pub const HALVING_CAPS: [[u64; 3]; 2] = [[19, 18, 17], [19, 17, 18]];

/// Replays the chain of bounds that pins the crossing number of `K_30`.
pub fn k30_report() -> K30Report {
    const N: usize = 30;
    let mut lines = Vec::new();
    let mut line = |label: &str, computed: i64, stated: i64| {
        lines.push(ReportLine {
            label: label.to_string(),
            computed,
            stated,
            asserted: false,
        });
        computed
    };
    // every call below has arguments in range, so unwrap cannot fire
    let total = choose(N as i64, 2);
    let e_le_12 = lower_bound_leq_k(N, 12).unwrap() as i64;
    let n_le_13 = line("N_<=13 = E_<=12 (tight)", e_le_12, 291);
    let rest = line("C(30,2) - N_<=13 = N_14 + h", total - n_le_13, 144);
    let n15_max = line(
        "N_15 <= (halving bound)",
        halving_upper_bound(N, n_le_13 as u64).unwrap() as i64,
        72,
    );
    let n_le_14 = cumulative_lower_bound_nm1(N).unwrap() as i64;
    line("N_<=14 lower bound", n_le_14, 363);
    line("N_14 lower bound", n_le_14 - n_le_13, 72);
    let base = Scenario::tight(N, 13, &[72, n15_max as u64]).unwrap();
    line("cr lower bound", scenario_crossing(&base).unwrap(), 9723);

    let perturbed = (0..=12)
        .map(|k0| {
            let mut low: Vec<u64> = (0..13).map(|k| lower_bound_leq_k(N, k).unwrap()).collect();
            low[k0] += 1;
            scenario_crossing(&optimal_completion(N, &low).unwrap()).unwrap()
        })
        .min()
        .unwrap();
    line("cr with one non-tight level k <= 12, min", perturbed, 9727);

    let bi_le_13 = bichromatic_closed_form(N, 13).unwrap() as i64;
    let bi_le_14 = line(
        "N_<=14^bi",
        bichromatic_closed_form(N, 14).unwrap() as i64,
        285,
    );
    let bi_le_15 = line(
        "N_<=15^bi",
        bichromatic_closed_form(N, 15).unwrap() as i64,
        300,
    );
    let bi15 = line("N_15^bi", bi_le_15 - bi_le_14, 15);
    let bi_center = line("N_14^bi + N_15^bi", bi_le_15 - bi_le_13, 45);
    let mono = line("N_>13^mono", rest - bi_center, 99);
    line("N_>13^mono per class", mono / 3, 33);
    line(
        "edges of D0(10,3)",
        build_d0(10, 3).unwrap().edge_count() as i64,
        33,
    );
    line(
        "edges of D0(10,1)",
        build_d0(10, 1).unwrap().edge_count() as i64,
        20,
    );

    let mut totals = Vec::new();
    for (case, caps) in HALVING_CAPS.iter().enumerate() {
        for (class, &cap) in ["aa", "bb", "cc"].iter().zip(caps) {
            lines.push(ReportLine {
                label: format!("case {} N_15^{class} <=", case + 1),
                computed: cap as i64,
                stated: cap as i64,
                asserted: true,
            });
        }
        totals.push(caps.iter().sum::<u64>() as i64);
    }
    let mut line = |label: &str, computed: i64, stated: i64| {
        lines.push(ReportLine {
            label: label.to_string(),
            computed,
            stated,
            asserted: false,
        });
        computed
    };
    line("case 1 N_15^mono <=", totals[0], 54);
    let mono15 = line("case 2 N_15^mono <=", totals[1], 54);
    let n15 = line("N_15 <= N_15^mono + N_15^bi", mono15 + bi15, 69);
    let n14 = line("N_14 = 144 - N_15", rest - n15, 75);
    let fin = Scenario::tight(N, 13, &[n14 as u64, n15 as u64]).unwrap();
    let value = line("cr(K_30)", scenario_crossing(&fin).unwrap(), 9726);
    K30Report { lines, value }
}
