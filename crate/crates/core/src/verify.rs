//! Cross-checks of the formula route against the brute-force oracles, with
//! per-check size caps.

use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;

use crate::graph::Graph;
use crate::ideal::{ideal_of_independent_sets, verify_linear_quotients};
use crate::indep::independence_polynomial;
use crate::invariants::{
    alternating_sum, betti_numbers, betti_numbers_from_set_sizes, dual_has_linear_resolution_with,
    primary_decomposition, DualResolution, SearchConfig,
};
use crate::monomial::MonomialIdeal;
use crate::oracle::{betti_table_oracle, intersect_ideals};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    Quotients,
    Primdec,
    Betti,
    Dual,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Quotients, Check::Primdec, Check::Betti, Check::Dual];

    pub fn name(self) -> &'static str {
        match self {
            Check::Quotients => "quotients",
            Check::Primdec => "primdec",
            Check::Betti => "betti",
            Check::Dual => "dual",
        }
    }

    pub fn parse(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s.trim())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyCaps {
    pub quotients_vertices: usize,
    pub primdec_vertices: usize,
    pub betti_vars: usize,
    pub dual_gens: usize,
}

impl Default for VerifyCaps {
    fn default() -> Self {
        Self {
            quotients_vertices: 14,
            primdec_vertices: 5,
            betti_vars: crate::oracle::DEFAULT_BETTI_VAR_CAP,
            dual_gens: 64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Undecided,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u128>,
}

impl CheckOutcome {
    fn new(check: Check, status: Status, detail: Option<String>) -> Self {
        Self {
            check,
            status,
            detail,
            millis: None,
        }
    }

    fn from_result(check: Check, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Self::new(check, Status::Pass, None),
            Err(e) => Self::new(check, Status::Fail, Some(e)),
        }
    }
}

/// Identities every instance must satisfy: generator degrees equal `n`, the
/// prefix colons are `(t_r : r in S_i)`, the set-size histogram equals the
/// independence polynomial, both Betti routes agree, `beta_0 = I(G;1)` and
/// the alternating Betti sum is 1.
pub fn check_quotients(g: &Graph) -> Result<(), String> {
    let (ideal, order) = ideal_of_independent_sets(g);
    if let Some(m) = ideal.gens().iter().find(|m| m.degree() != g.n()) {
        return Err(format!("generator {m} has degree {} != {}", m.degree(), g.n()));
    }
    let report = verify_linear_quotients(&order);
    if let Some(v) = report.violations.first() {
        return Err(format!(
            "prefix colon at index {} is {:?}, expected {:?}",
            v.index, v.found, v.expected
        ));
    }
    let poly = independence_polynomial(g);
    let mut histogram = vec![BigUint::from(0u8); poly.coeffs().len()];
    for &k in &report.set_sizes {
        if k >= histogram.len() {
            return Err(format!("set size {k} exceeds alpha = {}", poly.degree()));
        }
        histogram[k] += 1u8;
    }
    if histogram != poly.coeffs() {
        return Err(format!("set-size histogram {histogram:?} != coefficients {:?}", poly.coeffs()));
    }
    let betti = betti_numbers(&poly);
    let by_sizes = betti_numbers_from_set_sizes(&report.set_sizes);
    if betti != by_sizes {
        return Err(format!("Betti numbers {betti:?} != set-size route {by_sizes:?}"));
    }
    if betti[0] != poly.total() {
        return Err(format!("beta_0 = {} but I(G;1) = {}", betti[0], poly.total()));
    }
    let alt = alternating_sum(&betti);
    if alt != 1.into() {
        return Err(format!("alternating Betti sum is {alt}"));
    }
    Ok(())
}

/// The components intersect to `I`, and dropping any one enlarges the
/// intersection.
pub fn check_primdec(g: &Graph) -> Result<(), String> {
    let (ideal, _) = ideal_of_independent_sets(g);
    let comps: Vec<MonomialIdeal> = primary_decomposition(g).iter().map(|p| p.to_ideal()).collect();
    let meet = |skip: Option<usize>| {
        comps
            .iter()
            .enumerate()
            .filter(|(i, _)| Some(*i) != skip)
            .fold(MonomialIdeal::unit(), |acc, (_, c)| intersect_ideals(&acc, c))
    };
    let all = meet(None);
    if all != ideal {
        return Err(format!("intersection {all:?} != ideal {ideal:?}"));
    }
    for (i, p) in primary_decomposition(g).iter().enumerate() {
        if meet(Some(i)) == ideal {
            return Err(format!("component {p} is redundant"));
        }
    }
    Ok(())
}

/// Oracle Betti table totals equal `sum_k s_k C(k,i)` and the table is
/// concentrated on the strand `j = n + i`.
pub fn check_betti(g: &Graph, var_cap: usize) -> Result<(), String> {
    let (ideal, _) = ideal_of_independent_sets(g);
    let table = betti_table_oracle(&ideal, var_cap).map_err(|e| e.to_string())?;
    let formula = betti_numbers(&independence_polynomial(g));
    let totals: Vec<BigUint> = table.totals().into_iter().map(BigUint::from).collect();
    if totals != formula {
        return Err(format!("oracle Betti numbers {totals:?} != formula {formula:?}"));
    }
    if !table.is_linear(g.n()) {
        let off: Vec<_> = table.entries().filter(|((i, j), _)| *j != g.n() + i).collect();
        return Err(format!("entries off the linear strand: {off:?}"));
    }
    if table.regularity() != Some(g.n()) {
        return Err(format!("regularity {:?} != {}", table.regularity(), g.n()));
    }
    Ok(())
}

/// The dual search agrees with completeness; `Undecided` is not a failure.
pub fn check_dual(g: &Graph, config: SearchConfig) -> CheckOutcome {
    let complete = g.is_complete();
    match dual_has_linear_resolution_with(g, config) {
        DualResolution::Undecided => CheckOutcome::new(
            Check::Dual,
            Status::Undecided,
            Some("search budget exhausted".into()),
        ),
        r => {
            let linear = r == DualResolution::Linear;
            let detail = format!("dual_linear_resolution {linear}, complete {complete}");
            let status = if linear == complete { Status::Pass } else { Status::Fail };
            CheckOutcome::new(Check::Dual, status, Some(detail))
        }
    }
}

/// Runs `checks` in the given order, skipping any over its cap.
pub fn run_checks(
    g: &Graph,
    checks: &[Check],
    caps: VerifyCaps,
    config: SearchConfig,
    timing: bool,
) -> Vec<CheckOutcome> {
    checks
        .iter()
        .map(|&check| {
            let start = Instant::now();
            let over = match check {
                Check::Quotients => (g.n() > caps.quotients_vertices)
                    .then(|| format!("{} vertices > {}", g.n(), caps.quotients_vertices)),
                Check::Primdec => (g.n() > caps.primdec_vertices)
                    .then(|| format!("{} vertices > {}", g.n(), caps.primdec_vertices)),
                Check::Betti => (2 * g.n() > caps.betti_vars)
                    .then(|| format!("{} ring variables > {}", 2 * g.n(), caps.betti_vars)),
                Check::Dual => {
                    let gens = g.n() + g.edge_count();
                    (gens > caps.dual_gens).then(|| format!("{gens} dual generators > {}", caps.dual_gens))
                }
            };
            let mut outcome = match over {
                Some(why) => CheckOutcome::new(check, Status::Skipped, Some(format!("skipped: over cap ({why})"))),
                None => match check {
                    Check::Quotients => CheckOutcome::from_result(check, check_quotients(g)),
                    Check::Primdec => CheckOutcome::from_result(check, check_primdec(g)),
                    Check::Betti => CheckOutcome::from_result(check, check_betti(g, caps.betti_vars)),
                    Check::Dual => check_dual(g, config),
                },
            };
            if timing {
                outcome.millis = Some(start.elapsed().as_millis());
            }
            outcome
        })
        .collect()
}
