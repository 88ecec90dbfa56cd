//! `pedpod` command-line driver.
//!
//! Exit codes: 0 success (and verdict true), 1 usage or parse error,
//! 2 verification mismatch, 3 resource bound exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use pedpod::bfile::{oeis_check_family, BFile};
use pedpod::render::{report_to_csv, report_to_json};
use pedpod_core::bijections::{
    involution_b2r, involution_ped0r, involution_psi, BijectionName, InvolutionOutcome,
    PairOutcome,
};
use pedpod_core::error::Error;
use pedpod_core::families::{self, FamilyName};
use pedpod_core::identities::{self, IdentityParams, IdentityReport, Method};
use pedpod_core::qseries;
use pedpod_core::{arith, Partition};

#[derive(Parser)]
#[command(
    name = "pedpod",
    about = "Exact toolkit for partition families with residue-class and multiplicity constraints",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count family members: one n or a table up to --nmax.
    Count {
        /// Family name, e.g. "PD[0,3]", "B[6]", "PDpm[1,6]".
        #[arg(long)]
        family: String,
        #[arg(long, conflicts_with = "nmax")]
        n: Option<u64>,
        #[arg(long)]
        nmax: Option<u64>,
        /// enum | series | both (both fails on disagreement).
        #[arg(long, default_value = "enum")]
        method: String,
        /// Also write the counts as JSON to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also write the n,count rows as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// List the members of a family at n, one partition per line.
    Enumerate {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: u64,
    },
    /// Verify a catalog identity; prints a JSON report.
    Verify {
        /// Identity id, e.g. "1st_gen", "pent", "beck_B1".
        #[arg(long)]
        id: String,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        nmax: u64,
        #[arg(long, default_value = "enum")]
        method: String,
        /// Also write the JSON report to this path.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Also write the rows as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Apply a bijection to a partition and print the trace.
    Bijection {
        /// glaisher | pd2pbar | prm2breg | pdbar2pe | pm | pnd2pem |
        /// pem2pbar | pond | exactmult | pe2ped | qe2tilde | psi |
        /// b2r-inv | ped0r-inv
        #[arg(long)]
        name: String,
        /// Partition in exponent notation; for ped0r-inv a pair "λ|μ".
        #[arg(long)]
        p: String,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        /// Apply the inverse direction of a paired map.
        #[arg(long)]
        inverse: bool,
    },
    /// Beck-type statements: part-count excess against relaxation counts.
    Beck {
        /// beck_B1 | beck_prm | beck_pm | beck_pnd_nonneg
        #[arg(long)]
        id: String,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long)]
        r: Option<u64>,
        #[arg(long)]
        nmax: u64,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Distribution of the rank statistic over the family PD[0,r] at n.
    Rank {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        n: u64,
    },
    /// Run the parity and divisibility criteria suite.
    Parity {
        #[arg(long)]
        nmax: u64,
    },
    /// Compare a family's counts against an OEIS b-file.
    OeisCheck {
        #[arg(long)]
        family: String,
        #[arg(long)]
        bfile: PathBuf,
        #[arg(long)]
        nmax: u64,
        /// b-file index corresponding to n = 0.
        #[arg(long, default_value_t = 0)]
        offset: i64,
    },
    /// Side-by-side counting table for several families.
    Table {
        /// Repeatable.
        #[arg(long, required = true)]
        family: Vec<String>,
        #[arg(long)]
        nmax: u64,
    },
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::BoundExceeded { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn parse_family(text: &str) -> Result<FamilyName, Error> {
    text.parse()
}

fn parse_method(text: &str) -> Result<Method, Error> {
    text.parse()
}

/// Counts for 0..=n_max by the requested method; `both` cross-checks.
fn counts_by_method(
    family: &FamilyName,
    n_max: u64,
    method: Method,
) -> Result<(Vec<BigInt>, bool), Error> {
    let enum_counts = || -> Result<Vec<BigInt>, Error> {
        Ok(families::count_table(&family.spec(), n_max)?.plain)
    };
    let series_counts =
        || -> Result<Vec<BigInt>, Error> { Ok(qseries::gf(family, n_max as usize)?.coeffs().to_vec()) };
    match method {
        Method::Enumeration => Ok((enum_counts()?, true)),
        Method::Series => Ok((series_counts()?, true)),
        Method::Both => {
            let e = enum_counts()?;
            let s = series_counts()?;
            let ok = e == s;
            Ok((e, ok))
        }
    }
}

fn write_reports(
    report: &IdentityReport,
    json: Option<&PathBuf>,
    csv: Option<&PathBuf>,
) -> Result<(), Error> {
    if let Some(path) = json {
        std::fs::write(path, report_to_json(report))
            .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
    }
    if let Some(path) = csv {
        std::fs::write(path, report_to_csv(report))
            .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
    }
    Ok(())
}

fn run_verify(
    id: &str,
    t: Option<u64>,
    r: Option<u64>,
    nmax: u64,
    method: Method,
    json: Option<&PathBuf>,
    csv: Option<&PathBuf>,
) -> Result<u8, Error> {
    let params = IdentityParams { t, r };
    let report = identities::verify(id, &params, nmax, method)?;
    println!("{}", report_to_json(&report));
    write_reports(&report, json, csv)?;
    Ok(if report.verdict { 0 } else { 2 })
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::Count { family, n, nmax, method, json, csv } => {
            let fam = parse_family(&family)?;
            let method = parse_method(&method)?;
            let n_max = match (n, nmax) {
                (Some(n), None) => n,
                (None, Some(m)) => m,
                _ => return Err(Error::BadParameters("give exactly one of --n, --nmax".into())),
            };
            let (counts, consistent) = counts_by_method(&fam, n_max, method)?;
            if let Some(n) = n {
                println!("{}", counts[n as usize]);
            } else {
                println!("n,count");
                for (i, c) in counts.iter().enumerate() {
                    println!("{i},{c}");
                }
            }
            if let Some(path) = &json {
                let digits: Vec<String> = counts.iter().map(|c| c.to_string()).collect();
                let doc = serde_json::json!({
                    "family": fam.to_string(),
                    "n_max": n_max,
                    "method": method.to_string(),
                    "counts": digits,
                });
                std::fs::write(path, serde_json::to_string(&doc).expect("serializable"))
                    .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
            }
            if let Some(path) = &csv {
                let mut text = String::from("n,count\n");
                for (i, c) in counts.iter().enumerate() {
                    text.push_str(&format!("{i},{c}\n"));
                }
                std::fs::write(path, text)
                    .map_err(|e| Error::Parse(format!("writing {}: {e}", path.display())))?;
            }
            if !consistent {
                eprintln!("error: enumeration and series counts disagree for {fam}");
                return Ok(2);
            }
            Ok(0)
        }

        Command::Enumerate { family, n } => {
            let fam = parse_family(&family)?;
            for p in families::enumerate(n, &fam.spec())? {
                println!("{p}");
            }
            Ok(0)
        }

        Command::Verify { id, t, r, nmax, method, json, csv } => {
            let method = parse_method(&method)?;
            run_verify(&id, t, r, nmax, method, json.as_ref(), csv.as_ref())
        }

        Command::Beck { id, t, r, nmax, json, csv } => {
            if !id.starts_with("beck_") {
                return Err(Error::BadParameters(format!(
                    "'{id}' is not a Beck identity (beck_B1, beck_prm, beck_pm, beck_pnd_nonneg)"
                )));
            }
            run_verify(&id, t, r, nmax, Method::Enumeration, json.as_ref(), csv.as_ref())
        }

        Command::Bijection { name, p, t, r, inverse } => run_bijection(&name, &p, t, r, inverse),

        Command::Rank { r, n } => {
            let dist = identities::rank_distribution(n, r)?;
            println!("rank,count");
            for (rank, count) in &dist {
                println!("{rank},{count}");
            }
            println!("total,{}", dist.values().sum::<u64>());
            Ok(0)
        }

        Command::Parity { nmax } => {
            let reports = arith::verify_parity_suite(nmax)?;
            let mut all_ok = true;
            for rep in &reports {
                let status = if rep.verdict { "pass" } else { "FAIL" };
                let params: Vec<String> =
                    rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                println!("{} [{}] n <= {}: {status}", rep.identity, params.join(","), rep.n_max);
                all_ok &= rep.verdict;
            }
            Ok(if all_ok { 0 } else { 2 })
        }

        Command::OeisCheck { family, bfile, nmax, offset } => {
            let fam = parse_family(&family)?;
            let b = BFile::load(&bfile)?;
            let check = oeis_check_family(&fam, &b, nmax, offset)?;
            match &check.first_mismatch {
                None => {
                    println!(
                        "{}: agreement with {} on {} values",
                        check.label, check.source_path, check.checked
                    );
                    Ok(0)
                }
                Some((n, computed, expected)) => {
                    println!(
                        "{}: mismatch at n = {n}: computed {computed}, b-file has {expected}",
                        check.label
                    );
                    Ok(2)
                }
            }
        }

        Command::Table { family, nmax } => {
            let fams: Vec<FamilyName> =
                family.iter().map(|f| parse_family(f)).collect::<Result<_, _>>()?;
            let mut columns = Vec::new();
            for fam in &fams {
                columns.push(families::count_table(&fam.spec(), nmax)?.plain);
            }
            let header: Vec<String> = fams.iter().map(|f| f.to_string()).collect();
            println!("n,{}", header.join(","));
            for n in 0..=nmax as usize {
                let row: Vec<String> = columns.iter().map(|c| c[n].to_string()).collect();
                println!("{n},{}", row.join(","));
            }
            Ok(0)
        }
    }
}

fn run_bijection(
    name: &str,
    p: &str,
    t: Option<u64>,
    r: Option<u64>,
    inverse: bool,
) -> Result<u8, Error> {
    let bij: BijectionName = name.parse()?;
    let need_r = || r.ok_or_else(|| Error::BadParameters("--r is required".into()));
    let need_t = || t.ok_or_else(|| Error::BadParameters("--t is required".into()));

    if let Some(map) = bij.paired(t, r)? {
        let input = Partition::parse(p)?;
        let trace = if inverse { map.trace_inverse(&input)? } else { map.trace_forward(&input)? };
        println!("{}: {} -> {}", trace.name, trace.source, trace.target);
        println!("input:  {}", trace.input);
        for (label, stage) in &trace.steps {
            println!("  {label}: {stage}");
        }
        println!("output: {}", trace.output);
        println!(
            "membership: {} in {} confirmed",
            trace.output,
            trace.target
        );
        return Ok(0);
    }

    // involutions
    match bij {
        BijectionName::Psi => {
            let input = Partition::parse(p)?;
            match involution_psi(&input, need_t()?, need_r()?)? {
                InvolutionOutcome::Moved(out) => println!("psi: {input} -> {out}"),
                InvolutionOutcome::FixedPoint => println!("psi: {input} is a fixed point"),
            }
        }
        BijectionName::B2rInv => {
            let input = Partition::parse(p)?;
            match involution_b2r(&input, need_r()?)? {
                InvolutionOutcome::Moved(out) => println!("b2r-inv: {input} -> {out}"),
                InvolutionOutcome::FixedPoint => println!("b2r-inv: {input} is a fixed point"),
            }
        }
        BijectionName::Ped0rInv => {
            let Some((left, right)) = p.split_once('|') else {
                return Err(Error::Parse("ped0r-inv takes a pair \"λ|μ\"".into()));
            };
            let lambda = Partition::parse(left)?;
            let mu = Partition::parse(right)?;
            match involution_ped0r(&lambda, &mu, need_r()?)? {
                PairOutcome::Moved(l2, m2) => {
                    println!("ped0r-inv: ({lambda} | {mu}) -> ({l2} | {m2})")
                }
                PairOutcome::FixedPoint => println!("ped0r-inv: ({lambda} | {mu}) is a fixed point"),
            }
        }
        _ => unreachable!("paired maps handled above"),
    }
    Ok(0)
}
