use clap::{Args, Parser, Subcommand, ValueEnum};
use ffmzv::curve::CurveId;
use ffmzv::powersum::parse_tuple;
use ffmzv::verify::{self, Report, Verdict, VerifyOptions};
use ffmzv::Error;
use std::process::ExitCode;

/// Multizeta values over class-number-one function-field rings.
#[derive(Parser, Debug)]
#[command(name = "ffmzv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Curve id: genus0-q2, genus0-q3, case-i, case-ii, case-iii, case-iv.
    #[arg(long, global = true, value_parser = parse_curve)]
    curve: Option<CurveId>,
    /// Tuple such as `1,2`.
    #[arg(long, global = true, value_parser = parse_tuple_arg)]
    tuple: Option<Tuple>,
    /// Coefficients of 1/x computed.
    #[arg(long, global = true, default_value_t = 128)]
    precision: i64,
    /// Degree slack required of a rational reconstruction.
    #[arg(long, global = true, default_value_t = 10)]
    guard: i64,
    /// Largest degree summed for a zeta value.
    #[arg(long, global = true, default_value_t = 24)]
    d_max: u32,
    /// Inclusive range of degrees, `lo..hi`.
    #[arg(long, global = true, value_parser = parse_range)]
    d_range: Option<(u32, u32)>,
    /// Write reports here instead of standard output.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Report 0 ms so that output is byte-identical across runs.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Expand a multizeta value at infinity.
    Zeta,
    /// Test whether zeta(tuple)/zeta(weight) is rational.
    Zetalike,
    /// Search tuples of bounded weight for zetalike values and rational ratios.
    Scan {
        #[arg(long, default_value_t = 8)]
        max_weight: u32,
        #[arg(long, default_value_t = 2)]
        max_depth: usize,
    },
    /// Run a named verification target, or `all`.
    Verify {
        target: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long)]
        max_depth: Option<usize>,
    },
    /// Replay the difference-equation systems.
    Solve,
    /// Compare relative zeta values with their descended values.
    Relative,
    /// Search for linear relations between power sums.
    Rank {
        /// weight3-8, weight3-10 or planted.
        #[arg(long, default_value = "weight3-8")]
        set: String,
    },
}

fn parse_curve(s: &str) -> Result<CurveId, String> {
    CurveId::parse(s).map_err(|e| e.to_string())
}

#[derive(Clone, Debug)]
struct Tuple(Vec<u32>);

fn parse_tuple_arg(s: &str) -> Result<Tuple, String> {
    parse_tuple(s).map(Tuple).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got `{s}`"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u32 = lo.trim().parse().map_err(|_| format!("bad range start `{lo}`"))?;
    let hi: u32 = hi.trim().parse().map_err(|_| format!("bad range end `{hi}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

fn usage(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn run(cmd: &Command, o: &Common) -> Result<Vec<Report>, Error> {
    let tuple = || o.tuple.clone().map(|t| t.0).ok_or_else(|| Error::InvalidSpec("--tuple is required".into()));
    let curve = |default| o.curve.unwrap_or(default);
    Ok(match cmd {
        Command::Zeta => vec![verify::zeta_report(curve(CurveId::CaseI), &tuple()?, o.precision, o.d_max)?],
        Command::Zetalike => vec![verify::zetalike_report(curve(CurveId::CaseI), &tuple()?, o.precision, o.guard)?],
        Command::Scan { max_weight, max_depth } => {
            vec![verify::scan_zetalike(curve(CurveId::Genus0Q2), *max_weight, *max_depth, o.precision, o.guard)?]
        }
        Command::Verify { target, n, k, max_weight, max_depth } => {
            let vo = VerifyOptions {
                curve: o.curve,
                d_range: o.d_range,
                precision: o.precision,
                guard: o.guard,
                n: *n,
                k: *k,
                max_weight: *max_weight,
                max_depth: *max_depth,
            };
            if target == "all" {
                verify::TARGETS.iter().map(|t| verify::verify(t, &vo)).collect::<Result<_, _>>()?
            } else {
                vec![verify::verify(target, &vo)?]
            }
        }
        Command::Solve => vec![verify::solve_report(o.curve)?],
        Command::Relative => vec![verify::verify_relative(curve(CurveId::CaseI), o.precision)?],
        Command::Rank { set } => {
            let set = verify::QuantitySet::parse(set)?;
            let (lo, hi) = o.d_range.unwrap_or((3, 10));
            vec![verify::rank_experiment(curve(CurveId::CaseI), set, lo..=hi)?]
        }
    })
}

fn witness_csv(reports: &[Report]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["target", "verdict", "name", "num_coeffs", "den_coeffs"]).map_err(io)?;
    let join = |v: &[i64]| v.iter().map(i64::to_string).collect::<Vec<_>>().join(" ");
    for r in reports {
        for x in &r.witnesses {
            w.write_record([r.target.as_str(), r.verdict.as_str(), &x.name, &join(&x.num_coeffs), &join(&x.den_coeffs)]).map_err(io)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn emit(reports: &[Report], format: Format) -> Result<String, Error> {
    Ok(match format {
        Format::Json if reports.len() == 1 => reports[0].to_json() + "\n",
        Format::Json => {
            let v: Vec<serde_json::Value> = reports.iter().map(|r| serde_json::from_str(&r.to_json()).expect("report json")).collect();
            serde_json::to_string_pretty(&v).expect("reports serialize") + "\n"
        }
        Format::Text => reports.iter().map(Report::to_text).collect::<Vec<_>>().join("\n"),
        Format::Csv if reports.len() == 1 && reports[0].target == "scan" => verify::scan_table_csv(&verify::scan_entries(&reports[0])?)?,
        Format::Csv => witness_csv(reports)?,
    })
}

fn exit_code(reports: &[Report]) -> ExitCode {
    let v = reports.iter().fold(Verdict::Pass, |acc, r| acc.and(r.verdict));
    ExitCode::from(match v {
        Verdict::Pass => 0,
        Verdict::Fail => 1,
        Verdict::Inconclusive => 3,
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let o = &cli.common;
    if o.jobs == 0 {
        return usage("--jobs must be at least 1");
    }
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(o.jobs).build_global() {
        return usage(e);
    }
    let mut reports = match run(&cli.command, o) {
        Ok(r) => r,
        Err(e @ (Error::InvalidSpec(_) | Error::Parse(_) | Error::UnknownCurve(_) | Error::Unsupported(_))) => return usage(e),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    if o.no_timing {
        reports.iter_mut().for_each(|r| r.ms = 0);
    }
    let text = match emit(&reports, o.format) {
        Ok(t) => t,
        Err(e) => return usage(e),
    };
    match &o.output {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                eprintln!("error: cannot write {}: {e}", p.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    exit_code(&reports)
}
