use std::fmt::Write as _;

use indset_core::invariants::SearchConfig;
use indset_core::json::big_numbers;
use indset_core::verify::{run_checks, Check, Status, VerifyCaps};
use indset_core::{
    ideal_of_independent_sets, independence_polynomial, parse_edge_list, set_sizes, FamilySpec,
    Graph, InvariantReport,
};
use num_bigint::BigUint;
use serde_json::json;

use crate::{Format, Source};

pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
    /// Output still owed to stdout (a verify summary that failed).
    pub stdout: Option<String>,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
            stdout: None,
        }
    }
}

impl Source {
    pub fn load(&self) -> Result<Graph, CliError> {
        match (&self.family, &self.edges) {
            (Some(spec), None) => spec
                .parse::<FamilySpec>()
                .and_then(|s| s.build())
                .map_err(|e| CliError::input(e.to_string())),
            (None, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
                parse_edge_list(&text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
            }
            _ => Err(CliError::input("exactly one of --family or --edges is required")),
        }
    }
}

fn to_json(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string(value).expect("serializable output");
    s.push('\n');
    s
}

fn render_poly(coeffs: &[BigUint]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| match k {
            0 => c.to_string(),
            1 => format!("{c}x"),
            _ => format!("{c}x^{k}"),
        })
        .collect();
    terms.join(" + ")
}

pub fn poly(g: &Graph, format: Format) -> Result<String, CliError> {
    let p = independence_polynomial(g);
    Ok(match format {
        Format::Json => to_json(&json!({ "coeffs": big_numbers(p.coeffs()), "alpha": p.degree() })),
        Format::Plain => format!("I(G;x) = {}\nalpha = {}\n", render_poly(p.coeffs()), p.degree()),
    })
}

pub fn invariants(g: &Graph, format: Format, node_budget: u64) -> Result<String, CliError> {
    let config = SearchConfig {
        node_budget,
        ..SearchConfig::default()
    };
    let report = InvariantReport::compute_with(g, config);
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Plain => {
            let list = |v: Vec<String>| v.join(" ");
            let mut out = String::new();
            let betti: Vec<String> = report.betti_numbers.iter().map(ToString::to_string).collect();
            writeln!(out, "betti: {}", list(betti)).unwrap();
            writeln!(out, "projdim(T/I): {}", report.projdim_quotient).unwrap();
            writeln!(out, "reg(I): {}", report.regularity).unwrap();
            writeln!(out, "dim(T/I): {}", report.krull_dim).unwrap();
            writeln!(out, "Cohen-Macaulay: {}", report.cohen_macaulay).unwrap();
            writeln!(out, "primes: {}", list(report.primes.iter().map(ToString::to_string).collect())).unwrap();
            writeln!(out, "dual: {}", list(report.dual_gens.iter().map(ToString::to_string).collect())).unwrap();
            let dual = match report.dual_has_linear_resolution.as_bool() {
                Some(b) => b.to_string(),
                None => "undecided".into(),
            };
            writeln!(out, "dual linear resolution: {dual}").unwrap();
            out
        }
    })
}

pub fn generators(g: &Graph, format: Format, max_gens: u64) -> Result<String, CliError> {
    let total = independence_polynomial(g).total();
    if total > BigUint::from(max_gens) {
        return Err(CliError {
            code: EXIT_CAP,
            message: format!("{total} generators exceed --max-gens {max_gens}"),
            stdout: None,
        });
    }
    let (_, order) = ideal_of_independent_sets(g);
    let sizes = set_sizes(&order).map_err(|e| CliError {
        code: EXIT_VERIFY_FAILED,
        message: e.to_string(),
        stdout: None,
    })?;
    let gens: Vec<String> = order.monomials().iter().map(ToString::to_string).collect();
    Ok(match format {
        Format::Json => to_json(&json!({ "generators": gens, "set_sizes": sizes })),
        Format::Plain => gens
            .iter()
            .zip(&sizes)
            .map(|(m, k)| format!("{m}\t{k}\n"))
            .collect(),
    })
}

pub fn verify(
    g: &Graph,
    format: Format,
    checks: &[String],
    caps: VerifyCaps,
    timing: bool,
) -> Result<String, CliError> {
    let mut selected = Vec::new();
    for name in checks {
        let check = Check::parse(name)
            .ok_or_else(|| CliError::input(format!("unknown check {name:?} (quotients, primdec, betti, dual)")))?;
        if !selected.contains(&check) {
            selected.push(check);
        }
    }
    let outcomes = run_checks(g, &selected, caps, SearchConfig::default(), timing);
    let passed = outcomes.iter().all(|o| o.status != Status::Fail);
    let out = match format {
        Format::Json => to_json(&json!({ "checks": outcomes, "passed": passed })),
        Format::Plain => {
            let mut out = String::new();
            for o in &outcomes {
                let status = serde_json::to_value(&o.status).unwrap();
                write!(out, "{}\t{}", o.check.name(), status.as_str().unwrap()).unwrap();
                if let Some(d) = &o.detail {
                    write!(out, "\t{d}").unwrap();
                }
                if let Some(ms) = o.millis {
                    write!(out, "\t{ms}ms").unwrap();
                }
                out.push('\n');
            }
            out
        }
    };
    if passed {
        Ok(out)
    } else {
        Err(CliError {
            code: EXIT_VERIFY_FAILED,
            message: "verification failed".into(),
            stdout: Some(out),
        })
    }
}
