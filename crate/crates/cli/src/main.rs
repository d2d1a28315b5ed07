//! `cyclestat`: permutation statistics, hopping orbits, class distributions,
//! identity checks and tables from the command line.
//!
//! Exit status: 0 on success, 1 if a requested check failed, 2 for bad
//! input, 3 when an enumeration would exceed the class-size guardrail
//! (`CYCLESTAT_CLASS_CAP`), 4 on I/O errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use cyclestat::algebra::{eulerian, gamma_expand, MultiPoly};
use cyclestat::enumerate::{partitions_of, ClassSpec, EnumError, Enumerator};
use cyclestat::formulas::{brenti, egf_snki, verify_batch, Claim, FormulaError};
use cyclestat::hopping::orbit;
use cyclestat::perm::{CycleType, Permutation};

#[derive(Parser)]
#[command(
    name = "cyclestat",
    version,
    about = "Cyclic valley and excedance statistics on permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics of one permutation ("2,3,1" or "(1,2,3)").
    Stats {
        perm: String,
        /// Include the canonical cycle form and the letter sets.
        #[arg(long)]
        cycles: bool,
    },
    /// The cyclic valley-hopping orbit of a permutation.
    Orbit {
        perm: String,
        /// List every member.
        #[arg(long)]
        members: bool,
    },
    /// Distribution over a class: "1,5,5", "1^1 5^2", "n=4,k=0" or "n=5,k=1,i=2".
    Dist {
        spec: String,
        #[arg(long, value_enum, default_value_t = Stat::Joint)]
        stat: Stat,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check an identity over a range of instances; JSON lines on stdout.
    Verify {
        /// One of brenti, theorem1, lemma1, theorem2, theorem4, theorem5,
        /// theorem6, cor2, cor3, cor4, egf, all.
        claim: String,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Restrict a class-indexed claim to one cycle type.
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Emit the |S_{n,k,i}| triangle, gamma vectors per class, or Eulerian coefficients.
    Table {
        #[arg(value_enum)]
        what: TableKind,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Stat {
    Exc,
    Cval,
    Joint,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableKind {
    Snki,
    Gamma,
    Eulerian,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug)]
enum Failure {
    /// A check ran and did not hold.
    Check,
    Input(String),
    Guardrail(String),
    Io(io::Error),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Check => 1,
            Failure::Input(_) => 2,
            Failure::Guardrail(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl From<EnumError> for Failure {
    fn from(e: EnumError) -> Self {
        match e {
            EnumError::TooLarge { .. } => Failure::Guardrail(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Self {
        match e {
            FormulaError::Enum(inner) => inner.into(),
            other => Failure::Input(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

type CmdResult = Result<(), Failure>;

fn parse_perm(text: &str) -> Result<Permutation, Failure> {
    Permutation::parse(text).map_err(|e| Failure::Input(e.to_string()))
}

fn emit_json(out: &mut impl Write, value: &impl Serialize) -> CmdResult {
    serde_json::to_writer(&mut *out, value).map_err(|e| Failure::Io(e.into()))?;
    writeln!(out)?;
    Ok(())
}

fn cmd_stats(out: &mut impl Write, perm: &str, cycles: bool) -> CmdResult {
    let p = parse_perm(perm)?;
    let c = p.stat_counts();
    let mut record = json!({
        "perm": p.to_comma_string(),
        "exc": c.exc,
        "cval": c.cval,
        "cpk": c.cpk,
        "cdasc": c.cdasc,
        "cddes": c.cddes,
        "fix": c.fix,
        "des": p.des(),
        "cycle_type": p.cycle_type(),
    });
    if cycles {
        record["cycle_form"] = json!(p.to_cycle_form().to_string());
        record["sets"] = serde_json::to_value(p.stat_sets()).expect("stat sets serialize");
    }
    emit_json(out, &record)
}

fn cmd_orbit(out: &mut impl Write, perm: &str, members: bool) -> CmdResult {
    let p = parse_perm(perm)?;
    let report = orbit(&p, members);
    let mut record = json!({
        "perm": p.to_comma_string(),
        "size": report.size,
        "representative": report.representative.to_comma_string(),
        "cval": report.cval,
        "fix": report.fix,
    });
    if let Some(list) = &report.members {
        record["members"] = json!(list
            .iter()
            .map(Permutation::to_comma_string)
            .collect::<Vec<_>>());
    }
    emit_json(out, &record)
}

fn poly_json(p: &MultiPoly, with_s: bool) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .map(|((a, b), c)| {
            if with_s {
                json!({"s": a, "t": b, "coeff": c.to_string()})
            } else {
                json!({"t": b, "coeff": c.to_string()})
            }
        })
        .collect();
    json!({"text": p.to_string(), "terms": terms})
}

fn cmd_dist(
    out: &mut impl Write,
    en: &Enumerator,
    spec: &str,
    stat: Stat,
    format: Format,
) -> CmdResult {
    let spec = ClassSpec::parse(spec)?;
    let (name, poly) = match stat {
        Stat::Exc => ("exc", en.dist_exc(&spec)?),
        Stat::Cval => ("cval", en.dist_cval(&spec)?),
        Stat::Joint => ("joint", en.dist_joint(&spec)?),
    };
    match format {
        Format::Text => writeln!(out, "{poly}")?,
        Format::Json => {
            let mut record = poly_json(&poly, matches!(stat, Stat::Joint));
            record["spec"] = serde_json::to_value(&spec).expect("spec serializes");
            record["stat"] = json!(name);
            emit_json(out, &record)?;
        }
    }
    Ok(())
}

fn cmd_verify(
    out: &mut impl Write,
    en: &Enumerator,
    claim: &str,
    n_max: usize,
    lambda: Option<&str>,
) -> CmdResult {
    let claims: Vec<Claim> = if claim == "all" {
        Claim::ALL.to_vec()
    } else {
        vec![claim.parse().map_err(Failure::Input)?]
    };
    let lambda = lambda
        .map(|l| CycleType::parse(l).map_err(|e| Failure::Input(e.to_string())))
        .transpose()?;
    if let Some(l) = &lambda {
        if let Some(c) = claims.iter().find(|c| !c.takes_lambda()) {
            return Err(Failure::Input(format!(
                "--lambda {l} does not apply to {c}"
            )));
        }
    }
    let (mut passed, mut failed) = (0usize, 0usize);
    for c in claims {
        for report in verify_batch(en, c, n_max, lambda.as_ref())? {
            if report.passed() {
                passed += 1;
            } else {
                failed += 1;
            }
            writeln!(out, "{}", report.to_json_line())?;
        }
        out.flush()?;
    }
    eprintln!("{passed} passed, {failed} failed");
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

/// `1^1 5^2`: multiplicity notation, comma-free so it sits in one CSV cell.
fn lambda_label(lambda: &CycleType) -> String {
    lambda
        .multiplicities()
        .iter()
        .map(|(i, m)| format!("{i}^{m}"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn table_snki(n_max: usize, format: TableFormat) -> Result<String, Failure> {
    let table = egf_snki(n_max)?;
    let mut text = String::new();
    match format {
        TableFormat::Csv => {
            text.push_str("n,k,i,count\n");
            for &(n, k, i, count) in table.rows() {
                text.push_str(&format!("{n},{k},{i},{count}\n"));
            }
        }
        TableFormat::Json => {
            let rows: Vec<_> = table
                .rows()
                .iter()
                .map(|&(n, k, i, count)| json!({"n": n, "k": k, "i": i, "count": count}))
                .collect();
            text = serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n";
        }
    }
    Ok(text)
}

fn table_gamma(n_max: usize, format: TableFormat) -> Result<String, Failure> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for lambda in partitions_of(n) {
            let width = n - lambda.fixed_points();
            let exp = gamma_expand(&brenti(&lambda)?, width)
                .map_err(|e| Failure::Input(e.to_string()))?;
            let gammas: Vec<String> = exp.gammas.iter().map(|g| g.to_string()).collect();
            rows.push((n, lambda, width, gammas));
        }
    }
    Ok(match format {
        TableFormat::Csv => {
            let mut text = String::from("n,lambda,width,i,gamma\n");
            for (n, lambda, width, gammas) in &rows {
                for (i, g) in gammas.iter().enumerate() {
                    text.push_str(&format!("{n},{},{width},{i},{g}\n", lambda_label(lambda)));
                }
            }
            text
        }
        TableFormat::Json => {
            let out: Vec<_> = rows
                .iter()
                .map(|(n, lambda, width, gammas)| json!({"n": n, "lambda": lambda, "width": width, "gamma": gammas}))
                .collect();
            serde_json::to_string_pretty(&out).expect("rows serialize") + "\n"
        }
    })
}

fn table_eulerian(n_max: usize, format: TableFormat) -> Result<String, Failure> {
    let rows: Vec<(usize, Vec<String>)> = (0..=n_max)
        .map(|n| {
            let a = eulerian(n);
            (
                n,
                (0..=n_max as u32)
                    .map(|d| a.coeff(0, d).to_string())
                    .collect(),
            )
        })
        .collect();
    Ok(match format {
        TableFormat::Csv => {
            let header: Vec<String> = (0..=n_max).map(|d| format!("c{d}")).collect();
            let mut text = format!("n,{}\n", header.join(","));
            for (n, coeffs) in &rows {
                text.push_str(&format!("{n},{}\n", coeffs.join(",")));
            }
            text
        }
        TableFormat::Json => {
            let out: Vec<_> = rows
                .iter()
                .map(|(n, coeffs)| json!({"n": n, "coefficients": coeffs}))
                .collect();
            serde_json::to_string_pretty(&out).expect("rows serialize") + "\n"
        }
    })
}

fn cmd_table(
    out: &mut impl Write,
    what: TableKind,
    n_max: usize,
    format: TableFormat,
    output: Option<&PathBuf>,
) -> CmdResult {
    if n_max == 0 && !matches!(what, TableKind::Eulerian) {
        return Err(Failure::Input("--n-max must be at least 1".into()));
    }
    let text = match what {
        TableKind::Snki => table_snki(n_max, format)?,
        TableKind::Gamma => table_gamma(n_max, format)?,
        TableKind::Eulerian => table_eulerian(n_max, format)?,
    };
    match output {
        Some(path) => fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    let en = Enumerator::from_env()?;
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Stats { perm, cycles } => cmd_stats(&mut out, perm, *cycles),
        Command::Orbit { perm, members } => cmd_orbit(&mut out, perm, *members),
        Command::Dist { spec, stat, format } => cmd_dist(&mut out, &en, spec, *stat, *format),
        Command::Verify {
            claim,
            n_max,
            lambda,
        } => cmd_verify(&mut out, &en, claim, *n_max, lambda.as_deref()),
        Command::Table {
            what,
            n_max,
            format,
            output,
        } => cmd_table(&mut out, *what, *n_max, *format, output.as_ref()),
    };
    out.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            match &failure {
                Failure::Check => {}
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Guardrail(msg) => eprintln!("error: {msg}"),
                Failure::Io(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
