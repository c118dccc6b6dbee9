//! Command-line front end for the exact factorization counts.
//!
//! Every verb prints a single JSON document on standard output (the census
//! table can switch to CSV). Exit codes: 0 on success or a passing check,
//! 1 on a verification failure or count mismatch, 2 on a usage error, 3 when
//! an enumeration refuses its input as over budget.

use std::collections::BTreeMap;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;

use minfact_core::acceptance;
use minfact_core::numbers::rational_string;
use minfact_core::{
    balanced_tree_prediction, build_series, census_arbitrary, census_transpositions,
    count_arbitrary_factorizations, count_balanced, count_planted,
    count_transposition_factorizations, g_alpha, h_alpha, verify, CountResult, Discrepancy, Error,
    IdentityId, Orientation, OracleBudget, Partition, Result, Series, SeriesTag, TreeBudget,
    VerifyReport,
};

#[derive(Parser)]
#[command(
    name = "minfact",
    version,
    about = "Exact counts of minimal transitive factorizations in the symmetric group, \
             the generating series they form, and enumeration cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Closed-form count of minimal transitive factorizations into transpositions
    H {
        /// Cycle type as comma-separated parts, e.g. 3,1,1 (any order)
        #[arg(long)]
        alpha: String,
    },
    /// Closed-form count of minimal transitive factorizations into m factors
    G {
        /// Cycle type as comma-separated parts
        #[arg(long)]
        alpha: String,
        /// Number of factors, at least 2
        #[arg(long)]
        m: u32,
    },
    /// Count factorizations by brute-force search over the symmetric group
    Oracle {
        /// Cycle type as comma-separated parts
        #[arg(long)]
        alpha: String,
        /// Search for transposition factorizations
        #[arg(long, conflicts_with = "m")]
        transpositions: bool,
        /// Search for factorizations into m arbitrary factors
        #[arg(long)]
        m: Option<u32>,
        /// Largest n accepted in transposition mode
        #[arg(long = "max-n", default_value_t = OracleBudget::default().max_n_transpositions)]
        max_n: u32,
        /// Cap on the number of tuples scanned in arbitrary mode
        #[arg(long, default_value_t = OracleBudget::default().max_arbitrary_tuples)]
        budget: u128,
    },
    /// Check a generating-series identity coefficientwise up to a truncation order
    Verify {
        /// Identity name (see --help for the catalog), or "all"
        #[arg(long, required_unless_present = "all")]
        id: Option<String>,
        /// Check the whole catalog (same as --id all)
        #[arg(long)]
        all: bool,
        /// Factor count for the identities that take one; when running the
        /// whole catalog those identities default to m = 2
        #[arg(long)]
        m: Option<u32>,
        /// Truncation order of the series comparison
        #[arg(long)]
        order: usize,
    },
    /// Enumerate planted plane trees of one type and count the balanced ones
    Trees {
        /// Cycle type as comma-separated parts
        #[arg(long)]
        alpha: String,
        /// Degree parameter of the tree family, at least 2
        #[arg(long)]
        m: u32,
        /// Contour direction used by the leaf matching
        #[arg(long, default_value_t = Orientation::default())]
        orientation: Orientation,
        /// Largest partition weight the enumerator accepts
        #[arg(long = "max-n", default_value_t = TreeBudget::default().max_n)]
        max_n: u32,
        /// Largest m the enumerator accepts
        #[arg(long = "max-m", default_value_t = TreeBudget::default().max_m)]
        max_m: u32,
    },
    /// Print the coefficients of one named series up to a truncation order
    Series {
        /// Series tag: G, H, Hhat, T, V, W, S, Aw, Bs
        #[arg(long)]
        id: String,
        /// Factor count for the series that take one
        #[arg(long)]
        m: Option<u32>,
        /// Truncation order
        #[arg(long)]
        order: usize,
    },
    /// Brute-force counts for every cycle type of one weight
    Census {
        /// Partition weight; the table has one row per partition of n
        #[arg(long)]
        n: u32,
        /// Count transposition factorizations
        #[arg(long, conflicts_with = "m")]
        transpositions: bool,
        /// Count factorizations into m arbitrary factors
        #[arg(long)]
        m: Option<u32>,
        /// Largest n accepted in transposition mode
        #[arg(long = "max-n", default_value_t = OracleBudget::default().max_n_transpositions)]
        max_n: u32,
        /// Cap on the number of tuples scanned in arbitrary mode
        #[arg(long, default_value_t = OracleBudget::default().max_arbitrary_tuples)]
        budget: u128,
        /// Emit the table as CSV
        #[arg(long, conflicts_with = "json")]
        csv: bool,
        /// Emit the table as JSON (the default)
        #[arg(long)]
        json: bool,
    },
    /// Run the full acceptance suite and report every criterion
    Selftest,
}

#[derive(Serialize)]
struct CountOut {
    kind: &'static str,
    alpha: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    value: String,
}

impl From<CountResult> for CountOut {
    fn from(result: CountResult) -> Self {
        CountOut {
            kind: result.kind.name(),
            alpha: result.alpha.parts().to_vec(),
            m: result.m,
            value: result.value.to_string(),
        }
    }
}

#[derive(Serialize)]
struct OracleOut {
    alpha: Vec<u32>,
    mode: &'static str,
    count: String,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct DiscrepancyOut {
    degree: usize,
    monomial: String,
    lhs: String,
    rhs: String,
}

impl From<Discrepancy> for DiscrepancyOut {
    fn from(d: Discrepancy) -> Self {
        DiscrepancyOut {
            degree: d.degree,
            monomial: d.monomial.to_string(),
            lhs: rational_string(&d.lhs),
            rhs: rational_string(&d.rhs),
        }
    }
}

#[derive(Serialize)]
struct VerifyOut {
    identity: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    order: usize,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    discrepancy: Option<DiscrepancyOut>,
}

impl From<VerifyReport> for VerifyOut {
    fn from(report: VerifyReport) -> Self {
        VerifyOut {
            identity: report.identity.name(),
            m: report.m,
            order: report.order,
            status: if report.pass { "pass" } else { "fail" },
            discrepancy: report.first_discrepancy.map(DiscrepancyOut::from),
        }
    }
}

#[derive(Serialize)]
struct TreesOut {
    alpha: Vec<u32>,
    m: u32,
    planted_count: String,
    balanced_count: String,
    prediction: String,
    #[serde(rename = "match")]
    matches: bool,
}

#[derive(Serialize)]
struct TermOut {
    u: u32,
    x: u32,
    p: BTreeMap<u32, u32>,
    q: String,
}

#[derive(Serialize)]
struct SeriesOut {
    var: &'static str,
    order: usize,
    coeffs: Vec<Vec<TermOut>>,
}

fn series_out(series: &Series) -> Result<SeriesOut> {
    let mut coeffs = Vec::with_capacity(series.order() + 1);
    for degree in 0..=series.order() {
        let poly = series.coeff(degree)?;
        let terms = poly
            .terms()
            .map(|(monomial, q)| TermOut {
                u: monomial.u_exp,
                x: monomial.x_exp,
                p: monomial.p_exp.clone(),
                q: rational_string(q),
            })
            .collect();
        coeffs.push(terms);
    }
    Ok(SeriesOut {
        var: series.var().name(),
        order: series.order(),
        coeffs,
    })
}

#[derive(Serialize)]
struct CensusRow {
    alpha: Vec<u32>,
    count: String,
}

#[derive(Serialize)]
struct CensusOut {
    n: u32,
    mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<u32>,
    rows: Vec<CensusRow>,
}

#[derive(Serialize)]
struct CriterionOut {
    number: u32,
    name: &'static str,
    pass: bool,
    detail: String,
    elapsed_ms: u128,
}

#[derive(Serialize)]
struct SelftestOut {
    pass: bool,
    criteria: Vec<CriterionOut>,
}

fn parse_alpha(text: &str) -> Result<Partition> {
    let parts = text
        .split(',')
        .map(|part| {
            let part = part.trim();
            part.parse::<u32>()
                .map_err(|_| Error::usage(format!("bad partition part {part:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(parts)
}

fn emit<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string(value).expect("output serializes")
    );
}

fn census_csv<C: std::fmt::Display>(rows: &[(Partition, C)]) -> String {
    let mut out = String::from("alpha,count\n");
    for (alpha, count) in rows {
        let parts = alpha
            .parts()
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        out.push_str(&format!("\"{parts}\",{count}\n"));
    }
    out
}

fn run(verb: Verb) -> Result<i32> {
    match verb {
        Verb::H { alpha } => {
            let result = h_alpha(&parse_alpha(&alpha)?);
            emit(&CountOut::from(result));
            Ok(0)
        }
        Verb::G { alpha, m } => {
            let result = g_alpha(&parse_alpha(&alpha)?, m)?;
            emit(&CountOut::from(result));
            Ok(0)
        }
        Verb::Oracle {
            alpha,
            transpositions,
            m,
            max_n,
            budget,
        } => {
            let alpha = parse_alpha(&alpha)?;
            let oracle_budget = OracleBudget {
                max_n_transpositions: max_n,
                max_arbitrary_tuples: budget,
            };
            let start = Instant::now();
            let (mode, count) = if transpositions {
                (
                    "transpositions",
                    count_transposition_factorizations(&alpha, &oracle_budget)?,
                )
            } else if let Some(m) = m {
                (
                    "arbitrary",
                    count_arbitrary_factorizations(&alpha, m, &oracle_budget)?,
                )
            } else {
                return Err(Error::usage("oracle needs --transpositions or --m"));
            };
            emit(&OracleOut {
                alpha: alpha.parts().to_vec(),
                mode,
                count: count.to_string(),
                elapsed_ms: start.elapsed().as_millis(),
            });
            Ok(0)
        }
        Verb::Verify { id, all, m, order } => {
            let run_all = all || id.as_deref().is_some_and(|s| s.eq_ignore_ascii_case("all"));
            if run_all {
                let mut reports = Vec::with_capacity(IdentityId::ALL.len());
                let mut passed = true;
                for identity in IdentityId::ALL {
                    let m_eff = if identity.needs_m() {
                        Some(m.unwrap_or(2))
                    } else {
                        None
                    };
                    let report = verify(identity, m_eff, order)?;
                    passed &= report.pass;
                    reports.push(VerifyOut::from(report));
                }
                emit(&reports);
                Ok(if passed { 0 } else { 1 })
            } else {
                let identity: IdentityId = id.expect("clap requires --id without --all").parse()?;
                let m_eff = if identity.needs_m() {
                    Some(m.ok_or_else(|| {
                        Error::usage(format!("identity {identity} needs --m"))
                    })?)
                } else {
                    None
                };
                let report = verify(identity, m_eff, order)?;
                let code = if report.pass { 0 } else { 1 };
                emit(&VerifyOut::from(report));
                Ok(code)
            }
        }
        Verb::Trees {
            alpha,
            m,
            orientation,
            max_n,
            max_m,
        } => {
            let alpha = parse_alpha(&alpha)?;
            let budget = TreeBudget { max_n, max_m };
            let planted = count_planted(&alpha, m, &budget)?;
            let balanced = count_balanced(&alpha, m, orientation, &budget)?;
            let prediction = balanced_tree_prediction(&alpha, m)?.value;
            let matches = balanced == prediction;
            emit(&TreesOut {
                alpha: alpha.parts().to_vec(),
                m,
                planted_count: planted.to_string(),
                balanced_count: balanced.to_string(),
                prediction: prediction.to_string(),
                matches,
            });
            Ok(if matches { 0 } else { 1 })
        }
        Verb::Series { id, m, order } => {
            let tag: SeriesTag = id.parse()?;
            let series = build_series(tag, m, order)?;
            emit(&series_out(&series)?);
            Ok(0)
        }
        Verb::Census {
            n,
            transpositions,
            m,
            max_n,
            budget,
            csv,
            json: _,
        } => {
            let oracle_budget = OracleBudget {
                max_n_transpositions: max_n,
                max_arbitrary_tuples: budget,
            };
            let (mode, m_out, rows) = if transpositions {
                (
                    "transpositions",
                    None,
                    census_transpositions(n, &oracle_budget)?,
                )
            } else if let Some(m) = m {
                ("arbitrary", Some(m), census_arbitrary(n, m, &oracle_budget)?)
            } else {
                return Err(Error::usage("census needs --transpositions or --m"));
            };
            if csv {
                print!("{}", census_csv(&rows));
            } else {
                emit(&CensusOut {
                    n,
                    mode,
                    m: m_out,
                    rows: rows
                        .into_iter()
                        .map(|(alpha, count)| CensusRow {
                            alpha: alpha.parts().to_vec(),
                            count: count.to_string(),
                        })
                        .collect(),
                });
            }
            Ok(0)
        }
        Verb::Selftest => {
            let reports = acceptance::run_all();
            let pass = reports.iter().all(|r| r.pass);
            emit(&SelftestOut {
                pass,
                criteria: reports
                    .into_iter()
                    .map(|r| CriterionOut {
                        number: r.number,
                        name: r.name,
                        pass: r.pass,
                        detail: r.detail,
                        elapsed_ms: r.elapsed_ms,
                    })
                    .collect(),
            });
            Ok(if pass { 0 } else { 1 })
        }
    }
}

fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Usage(_) => 2,
        Error::BudgetExceeded { .. } => 3,
        _ => 1,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.verb) {
        Ok(code) => std::process::exit(code),
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(exit_code(&error));
        }
    }
}
