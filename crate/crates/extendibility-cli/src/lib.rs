//! Command-line front end: single-query thresholds with optional oracle
//! verification, bulk threshold tables, and diagram utilities.
//!
//! Exit codes: 0 on success, 1 on usage or domain errors, 2 when a
//! verification run disagrees with the closed form.

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use extendibility::isotropic::{beta, IsotropicResult};
use extendibility::lr::{lr_decompose, min_product_diagram};
use extendibility::oracle::{
    build_hamiltonian_isotropic, build_hamiltonian_werner, extremal_eigenvalue,
    ConstructionRoute, Extremum, OracleError, DEFAULT_ORACLE_BUDGET,
};
use extendibility::partitions::{Partition, PartitionError};
use extendibility::werner::{
    alpha, exhaustive_alpha, triple_energy, ExtendibilityQuery, ExtendibilityResult, WernerError,
};
use extendibility::{format_rational, lr::LrError};

/// Environment variable overriding the spectral-oracle dimension cap.
pub const ORACLE_BUDGET_ENV: &str = "WERNER_ORACLE_BUDGET";

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Partition(#[from] PartitionError),
    #[error("{0}")]
    Werner(#[from] WernerError),
    #[error("{0}")]
    Lr(#[from] LrError),
    #[error("{0}")]
    Oracle(#[from] OracleError),
    #[error("invalid {name}: {value:?} is not a positive integer")]
    BadBudget { name: String, value: String },
}

/// Exact two-sided symmetric-extension thresholds for Werner and isotropic
/// states.
#[derive(Debug, Parser)]
#[command(name = "extendibility", version, about)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyMode {
    Spectral,
    Exhaustive,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Alpha,
    Beta,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Extreme parameter of the (n_L, n_R)-extendible Werner states.
    Alpha {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nl: u64,
        #[arg(long)]
        nr: u64,
        /// Cross-check against the spectral and/or exhaustive oracle.
        #[arg(long, value_enum)]
        verify: Option<VerifyMode>,
    },
    /// Extreme parameter of the (n_L, n_R)-extendible isotropic states.
    Beta {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        nl: u64,
        #[arg(long)]
        nr: u64,
        /// Cross-check against the spectral oracle.
        #[arg(long, value_enum)]
        verify: Option<VerifyMode>,
    },
    /// Grid of thresholds for external plotting.
    Table {
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 20)]
        max_nl: u64,
        #[arg(long, default_value_t = 20)]
        max_nr: u64,
        #[arg(long, value_enum, default_value = "alpha")]
        quantity: Quantity,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Tensor-product decomposition with multiplicities and its dominance
    /// minimum.
    Lr {
        /// Partition literal, e.g. "2,1".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        d: usize,
    },
    /// Dominance-minimal constituent of a tensor product.
    MinDiagram {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        d: usize,
    },
    /// Built-in verification battery across a small parameter grid.
    VerifySuite {
        /// Largest local dimension to check.
        #[arg(long, default_value_t = 4)]
        max_d: usize,
        /// Spectral dimension cap (WERNER_ORACLE_BUDGET overrides the
        /// default).
        #[arg(long)]
        budget: Option<usize>,
    },
}

/// A command's rendered output plus its process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub exit_code: i32,
}

fn ok(text: String) -> CommandOutput {
    CommandOutput { text, exit_code: 0 }
}

fn oracle_budget(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(ORACLE_BUDGET_ENV) {
        Ok(value) => value.trim().parse().map_err(|_| CliError::BadBudget {
            name: ORACLE_BUDGET_ENV.to_string(),
            value,
        }),
        Err(_) => Ok(DEFAULT_ORACLE_BUDGET),
    }
}

pub fn execute(cli: Cli) -> Result<CommandOutput, CliError> {
    match cli.command {
        Command::Alpha { d, nl, nr, verify } => cmd_alpha(d, nl, nr, verify),
        Command::Beta { d, nl, nr, verify } => cmd_beta(d, nl, nr, verify),
        Command::Table {
            d,
            max_nl,
            max_nr,
            quantity,
            format,
        } => cmd_table(d, max_nl, max_nr, quantity, format),
        Command::Lr { left, right, d } => cmd_lr(&left, &right, d),
        Command::MinDiagram { left, right, d } => cmd_min_diagram(&left, &right, d),
        Command::VerifySuite { max_d, budget } => cmd_verify_suite(max_d, budget),
    }
}

fn spectral_verification(
    query: &ExtendibilityQuery,
    expected: f64,
    which: Extremum,
    budget: usize,
) -> (serde_json::Value, bool) {
    let build = match which {
        Extremum::Min => build_hamiltonian_werner(query, ConstructionRoute::Permutation, budget),
        Extremum::Max => build_hamiltonian_isotropic(query, budget),
    };
    match build {
        Ok(op) => match extremal_eigenvalue(&op, which, 1e-10) {
            Ok(report) => {
                let agree = (report.extremal_eigenvalue - expected).abs() <= 1e-8;
                (
                    serde_json::json!({
                        "status": if agree { "agree" } else { "disagree" },
                        "value": report.extremal_eigenvalue,
                        "residual": report.residual_norm,
                        "dimension": op.dimension(),
                        "iterations": report.iterations,
                    }),
                    !agree,
                )
            }
            Err(e) => (
                serde_json::json!({"status": "failed", "reason": e.to_string()}),
                true,
            ),
        },
        Err(e @ OracleError::BudgetExceeded { .. }) => (
            serde_json::json!({"status": "skipped", "reason": e.to_string()}),
            false,
        ),
        Err(e) => (
            serde_json::json!({"status": "failed", "reason": e.to_string()}),
            true,
        ),
    }
}

fn cmd_alpha(
    d: usize,
    nl: u64,
    nr: u64,
    verify: Option<VerifyMode>,
) -> Result<CommandOutput, CliError> {
    let query = ExtendibilityQuery::new(d, nl, nr)?;
    let result = alpha(&query)?;
    let mut json = result.to_json();
    let mut disagreement = false;

    if let Some(mode) = verify {
        let mut verification = serde_json::Map::new();
        if matches!(mode, VerifyMode::Exhaustive | VerifyMode::Both) {
            match exhaustive_alpha(&query) {
                Ok(brute) => {
                    let agree = brute.alpha == result.alpha;
                    disagreement |= !agree;
                    verification.insert(
                        "exhaustive".to_string(),
                        serde_json::json!({
                            "status": if agree { "agree" } else { "disagree" },
                            "value": format_rational(brute.alpha),
                            "left": brute.argmin_left,
                            "right": brute.argmin_right,
                        }),
                    );
                }
                Err(WernerError::SearchSpaceTooLarge { pairs, budget }) => {
                    verification.insert(
                        "exhaustive".to_string(),
                        serde_json::json!({
                            "status": "skipped",
                            "reason": format!(
                                "search space of {pairs} pairs exceeds the budget of {budget}"
                            ),
                        }),
                    );
                }
                Err(e) => return Err(e.into()),
            }
        }
        if matches!(mode, VerifyMode::Spectral | VerifyMode::Both) {
            let budget = oracle_budget(None)?;
            let expected = *result.alpha.numer() as f64 / *result.alpha.denom() as f64;
            let (report, disagree) =
                spectral_verification(&query, expected, Extremum::Min, budget);
            disagreement |= disagree;
            verification.insert("spectral".to_string(), report);
        }
        json.as_object_mut()
            .expect("result is an object")
            .insert("verification".to_string(), serde_json::Value::Object(verification));
    }

    Ok(CommandOutput {
        text: json.to_string(),
        exit_code: if disagreement { 2 } else { 0 },
    })
}

fn cmd_beta(
    d: usize,
    nl: u64,
    nr: u64,
    verify: Option<VerifyMode>,
) -> Result<CommandOutput, CliError> {
    let query = ExtendibilityQuery::new(d, nl, nr)?;
    let result = beta(&query);
    let mut json = result.to_json();
    let mut disagreement = false;

    if let Some(mode) = verify {
        let mut verification = serde_json::Map::new();
        if matches!(mode, VerifyMode::Spectral | VerifyMode::Both) {
            let budget = oracle_budget(None)?;
            let expected = *result.beta.numer() as f64 / *result.beta.denom() as f64;
            let (report, disagree) =
                spectral_verification(&query, expected, Extremum::Max, budget);
            disagreement |= disagree;
            verification.insert("spectral".to_string(), report);
        }
        json.as_object_mut()
            .expect("result is an object")
            .insert("verification".to_string(), serde_json::Value::Object(verification));
    }

    Ok(CommandOutput {
        text: json.to_string(),
        exit_code: if disagreement { 2 } else { 0 },
    })
}

/// One table cell: the exact threshold and a float rendering.
fn table_cell(
    d: usize,
    nl: u64,
    nr: u64,
    quantity: Quantity,
) -> Result<(String, f64), CliError> {
    let query = ExtendibilityQuery::new(d, nl, nr)?;
    let value = match quantity {
        Quantity::Alpha => alpha(&query)?.alpha,
        Quantity::Beta => beta(&query).beta,
    };
    Ok((
        format_rational(value),
        *value.numer() as f64 / *value.denom() as f64,
    ))
}

fn cmd_table(
    d: usize,
    max_nl: u64,
    max_nr: u64,
    quantity: Quantity,
    format: Format,
) -> Result<CommandOutput, CliError> {
    let mut rows = Vec::new();
    for nl in 1..=max_nl {
        for nr in 1..=max_nr {
            let (exact, float) = table_cell(d, nl, nr, quantity)?;
            rows.push((nl, nr, exact, float));
        }
    }
    let text = match format {
        Format::Csv => {
            let mut out = String::from("n_left,n_right,value_exact,value_float\n");
            for (nl, nr, exact, float) in rows {
                out.push_str(&format!("{nl},{nr},{exact},{float}\n"));
            }
            out.trim_end().to_string()
        }
        Format::Json => {
            let array: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(nl, nr, exact, float)| {
                    serde_json::json!({
                        "n_left": nl,
                        "n_right": nr,
                        "value_exact": exact,
                        "value_float": float,
                    })
                })
                .collect();
            serde_json::Value::Array(array).to_string()
        }
    };
    Ok(ok(text))
}

fn cmd_lr(left: &str, right: &str, d: usize) -> Result<CommandOutput, CliError> {
    let left = Partition::parse_literal(left, d)?;
    let right = Partition::parse_literal(right, d)?;
    let decomposition = lr_decompose(&left, &right)?;
    let minimum = min_product_diagram(&left, &right)?;
    let mut keys: Vec<(&Partition, u64)> = decomposition.iter().collect();
    keys.sort_by(|a, b| b.0.cmp(a.0));
    let listing: Vec<String> = keys
        .into_iter()
        .map(|(key, mult)| format!("{key}:{mult}"))
        .collect();
    Ok(ok(format!("{} min={minimum}", listing.join(" "))))
}

fn cmd_min_diagram(left: &str, right: &str, d: usize) -> Result<CommandOutput, CliError> {
    let left = Partition::parse_literal(left, d)?;
    let right = Partition::parse_literal(right, d)?;
    Ok(ok(min_product_diagram(&left, &right)?.to_string()))
}

fn cmd_verify_suite(max_d: usize, budget: Option<usize>) -> Result<CommandOutput, CliError> {
    let budget = oracle_budget(budget)?;
    let mut lines = Vec::new();
    let mut failures = 0usize;
    let mut record = |name: &str, passed: bool, detail: String| {
        lines.push(format!(
            "{}: {name} ({detail})",
            if passed { "PASS" } else { "FAIL" }
        ));
        if !passed {
            failures += 1;
        }
    };

    // Closed form versus exhaustive scan.
    {
        let mut checked = 0usize;
        let mut bad = Vec::new();
        for d in 2..=max_d {
            for nl in 1..=6u64 {
                for nr in 1..=6u64 {
                    let query = ExtendibilityQuery::new(d, nl, nr)?;
                    let fast = alpha(&query)?.alpha;
                    let brute = exhaustive_alpha(&query)?.alpha;
                    checked += 1;
                    if fast != brute {
                        bad.push(format!("d={d} nl={nl} nr={nr}"));
                    }
                }
            }
        }
        record(
            "alpha matches exhaustive scan",
            bad.is_empty(),
            format!("{checked} queries, d <= {max_d}, n <= 6{}", summary(&bad)),
        );
    }

    // Spectral agreement within budget.
    {
        let mut checked = 0usize;
        let mut bad = Vec::new();
        for d in 2..=max_d {
            for nl in 1..=6u64 {
                for nr in 1..=6u64 {
                    let dim = (d as u128).checked_pow((nl + nr) as u32);
                    if dim.is_none_or(|v| v > budget as u128) {
                        continue;
                    }
                    let query = ExtendibilityQuery::new(d, nl, nr)?;
                    checked += 2;

                    let expected = alpha(&query)?.alpha;
                    let expected = *expected.numer() as f64 / *expected.denom() as f64;
                    let (_, disagree) =
                        spectral_verification(&query, expected, Extremum::Min, budget);
                    if disagree {
                        bad.push(format!("werner d={d} nl={nl} nr={nr}"));
                    }

                    let expected = beta(&query).beta;
                    let expected = *expected.numer() as f64 / *expected.denom() as f64;
                    let (_, disagree) =
                        spectral_verification(&query, expected, Extremum::Max, budget);
                    if disagree {
                        bad.push(format!("isotropic d={d} nl={nl} nr={nr}"));
                    }
                }
            }
        }
        record(
            "thresholds match extremal eigenvalues",
            bad.is_empty(),
            format!("{checked} spectra, dimension <= {budget}{}", summary(&bad)),
        );
    }

    // Dominance-minimum membership in tensor products.
    {
        let mut checked = 0usize;
        let mut bad = Vec::new();
        for d in 2..=max_d.min(4) {
            for nl in 0..=4u64 {
                for nr in 0..=4u64 {
                    for left in extendibility::partitions::enumerate_partitions(nl, d)? {
                        for right in extendibility::partitions::enumerate_partitions(nr, d)? {
                            let dec = lr_decompose(&left, &right)?;
                            let min = min_product_diagram(&left, &right)?;
                            checked += 1;
                            let dominated = dec
                                .iter()
                                .all(|(key, _)| key.dominates(&min).unwrap_or(false));
                            if !dec.contains(&min) || !dominated {
                                bad.push(format!("{left} x {right}"));
                            }
                        }
                    }
                }
            }
        }
        record(
            "product decompositions contain their sorted-row-sum minimum",
            bad.is_empty(),
            format!("{checked} products, weights <= 4{}", summary(&bad)),
        );
    }

    // Permutation and generator constructions agree.
    {
        let mut checked = 0usize;
        let mut bad = Vec::new();
        for d in 2..=max_d.min(3) {
            for nl in 1..=2u64 {
                for nr in 1..=2u64 {
                    let query = ExtendibilityQuery::new(d, nl, nr)?;
                    let permutation =
                        build_hamiltonian_werner(&query, ConstructionRoute::Permutation, budget)?;
                    let generator =
                        build_hamiltonian_werner(&query, ConstructionRoute::Generator, budget)?;
                    checked += 1;
                    if permutation.max_entry_difference(&generator) > 1e-12 {
                        bad.push(format!("d={d} nl={nl} nr={nr}"));
                    }
                }
            }
        }
        record(
            "construction routes agree entrywise",
            bad.is_empty(),
            format!("{checked} operators{}", summary(&bad)),
        );
    }

    // Pair energies are the spectrum floor termwise on tiny products.
    {
        let query = ExtendibilityQuery::new(2, 1, 1)?;
        let passed = triple_energy(
            &Partition::new(&[1], 2)?,
            &Partition::new(&[1], 2)?,
        )? == num_rational::Rational64::new(-1, 1)
            && alpha(&query)?.alpha == num_rational::Rational64::new(-1, 1);
        record("singlet pair reaches -1", passed, "d=2, n=(1,1)".to_string());
    }

    let exit = if failures == 0 { 0 } else { 2 };
    lines.push(format!(
        "verify-suite: {} checks, {failures} failures",
        lines.len()
    ));
    Ok(CommandOutput {
        text: lines.join("\n"),
        exit_code: exit,
    })
}

fn summary(bad: &[String]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("; failing: {}", bad.join(", "))
    }
}

/// Renders an [`ExtendibilityResult`] the way `cmd_alpha` does, for reuse in
/// tests.
pub fn render_alpha_result(result: &ExtendibilityResult) -> String {
    result.to_json().to_string()
}

/// Renders an [`IsotropicResult`] the way `cmd_beta` does.
pub fn render_beta_result(result: &IsotropicResult) -> String {
    result.to_json().to_string()
}
