//! Command line front end over the `zumkeller` crate.
//!
//! Exit codes: 0 success, 1 negative result (no split, failed check, term
//! file divergence), 2 usage or domain error, 3 overflow, 4 budget cap hit.

use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use serde_json::json;
use zumkeller::arith::{divisors, factorize};
use zumkeller::layered::is_k_layered;
use zumkeller::oracle::{k_partition, subset_sum};
use zumkeller::verify::{self, ClassificationRecord, ParamOverrides, SequenceId, TheoremReport};
use zumkeller::zumkeller::is_zumkeller;
use zumkeller::{Budget, Error, Natural};

const EXIT_OK: i32 = 0;
const EXIT_NEGATIVE: i32 = 1;
const EXIT_OVERFLOW: i32 = 3;
const EXIT_BUDGET: i32 = 4;

#[derive(Parser)]
#[command(name = "zk", version, about = "Zumkeller and k-layered number toolkit")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty, env = "ZK_FORMAT")]
    format: Format,

    /// Most divisors any single number may have before the tools give up.
    #[arg(long, global = true, default_value_t = 4096, value_parser = clap::value_parser!(u32).range(1..))]
    tau_cap: u32,

    /// Largest target value a dense subset-sum table may be built for.
    #[arg(long, global = true, default_value_t = 1 << 26, value_parser = clap::value_parser!(u64).range(1..))]
    dp_budget: u64,

    /// Worker threads for range scans (defaults to the machine's core count).
    #[arg(long, global = true, env = "ZK_WORKERS", value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify one number: factors, divisor sums, splits, related flags.
    Classify { n: u64 },

    /// Search for an equal-sum split of the divisors into k parts.
    Partition {
        n: u64,
        /// Number of parts.
        #[arg(default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        k: u32,
    },

    /// Classify every number in an inclusive range.
    Scan { lo: u64, hi: u64 },

    /// List the first terms of a sequence: zumkeller, half-zumkeller,
    /// practical, or layered-K.
    Seq {
        id: String,
        /// How many terms to emit.
        #[arg(long, default_value_t = 20)]
        count: usize,
    },

    /// Run one registered structural check, or list them all.
    #[command(group = ArgGroup::new("which").required(true).args(["id", "list"]))]
    Verify {
        /// Check id or alias, as shown by --list.
        id: Option<String>,
        /// Show every registered check instead of running one.
        #[arg(long)]
        list: bool,
        /// Lower end of the sweep range.
        #[arg(long)]
        lo: Option<u64>,
        /// Upper end of the sweep range.
        #[arg(long)]
        hi: Option<u64>,
        /// Largest power-of-two exponent to sweep.
        #[arg(long)]
        alpha_max: Option<u32>,
        /// Largest prime (or coprime multiplier) to sweep.
        #[arg(long)]
        p_max: Option<u64>,
        /// Largest odd-prime exponent to sweep.
        #[arg(long)]
        beta_max: Option<u32>,
    },

    /// Compare an index/term file line by line against our enumeration.
    Compare { id: String, path: PathBuf },

    /// Time the core operations over fixed workloads.
    Bench {
        /// Upper end of the sweep workloads.
        #[arg(long, default_value_t = 20_000)]
        limit: u64,
    },
}

enum CliError {
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

fn exit_for(e: &Error) -> i32 {
    match e {
        Error::Domain(_) | Error::Parse { .. } | Error::UnknownId(_) => 2,
        Error::Overflow(_) => EXIT_OVERFLOW,
        Error::InstanceTooLarge { .. } => EXIT_BUDGET,
        Error::Internal(_) => EXIT_NEGATIVE,
    }
}

fn main() {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Io(e)) => {
            eprintln!("zk: write failed: {e}");
            EXIT_NEGATIVE
        }
        Err(CliError::Lib(e)) => {
            eprintln!("zk: {e}");
            exit_for(&e)
        }
    };
    std::process::exit(code);
}

fn run(cli: &Cli) -> Result<i32, CliError> {
    let budget = Budget {
        tau_cap: cli.tau_cap,
        dp_sum_cap: cli.dp_budget,
    };
    let workers = cli.workers.map_or_else(
        || std::thread::available_parallelism().map_or(1, |n| n.get()),
        |w| w as usize,
    );
    let stdout = io::stdout().lock();
    let mut out = BufWriter::new(stdout);

    let code = match &cli.cmd {
        Cmd::Classify { n } => cmd_classify(&mut out, cli.format, *n, &budget)?,
        Cmd::Partition { n, k } => cmd_partition(&mut out, cli.format, *n, *k, &budget)?,
        Cmd::Scan { lo, hi } => cmd_scan(&mut out, cli.format, *lo, *hi, workers, &budget)?,
        Cmd::Seq { id, count } => cmd_seq(&mut out, cli.format, id, *count, &budget)?,
        Cmd::Verify {
            id,
            list,
            lo,
            hi,
            alpha_max,
            p_max,
            beta_max,
        } => {
            if *list {
                cmd_verify_list(&mut out, cli.format)?
            } else {
                let overrides = ParamOverrides {
                    lo: *lo,
                    hi: *hi,
                    alpha_max: *alpha_max,
                    p_max: *p_max,
                    beta_max: *beta_max,
                };
                cmd_verify_run(
                    &mut out,
                    cli.format,
                    id.as_deref().unwrap_or_default(),
                    &overrides,
                    &budget,
                )?
            }
        }
        Cmd::Compare { id, path } => cmd_compare(&mut out, cli.format, id, path, &budget)?,
        Cmd::Bench { limit } => cmd_bench(&mut out, cli.format, *limit, workers, &budget)?,
    };
    out.flush()?;
    Ok(code)
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn factor_display(factors: &[(u64, u32)]) -> String {
    if factors.is_empty() {
        return "1".into();
    }
    factors
        .iter()
        .map(|&(p, a)| {
            if a == 1 {
                p.to_string()
            } else {
                format!("{p}^{a}")
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn json_line<T: serde::Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string(value)
        .map_err(|e| CliError::Lib(Error::Internal(format!("serialize: {e}"))))
}

fn set_notation(parts: &[Vec<u64>]) -> String {
    parts
        .iter()
        .map(|part| {
            let inner = part
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(", ");
            format!("{{{inner}}}")
        })
        .collect::<Vec<_>>()
        .join(" / ")
}

fn cmd_classify(
    out: &mut impl Write,
    format: Format,
    n: u64,
    budget: &Budget,
) -> Result<i32, CliError> {
    let n = Natural::new(n)?;
    let rec = verify::classify(n, budget)?;
    match format {
        Format::Pretty => {
            write_record_pretty(out, &rec)?;
            if rec.is_zumkeller {
                if let Some(cert) = is_zumkeller(n, budget)?.certificate {
                    writeln!(out, "partition       {}", set_notation(cert.parts()))?;
                }
            }
        }
        Format::Tsv => {
            writeln!(out, "{}", ClassificationRecord::tsv_header())?;
            writeln!(out, "{}", rec.tsv_row())?;
        }
        Format::Json => writeln!(out, "{}", json_line(&rec)?)?,
    }
    Ok(EXIT_OK)
}

fn write_record_pretty(out: &mut impl Write, rec: &ClassificationRecord) -> io::Result<()> {
    writeln!(out, "n               {}", rec.n)?;
    writeln!(out, "factors         {}", factor_display(&rec.factors))?;
    writeln!(out, "sigma           {}", rec.sigma)?;
    writeln!(out, "tau             {}", rec.tau)?;
    writeln!(out, "harmonic mean   {}", rec.harmonic_mean)?;
    writeln!(
        out,
        "zumkeller       {} ({})",
        yn(rec.is_zumkeller),
        rec.rule_used
    )?;
    writeln!(out, "half-zumkeller  {}", yn(rec.is_half_zumkeller))?;
    writeln!(out, "practical       {}", yn(rec.is_practical))?;
    writeln!(out, "perfect         {}", yn(rec.is_perfect))?;
    writeln!(out, "harmonic        {}", yn(rec.is_harmonic))?;
    writeln!(out, "max layers      {}", rec.max_layers)
}

fn cmd_partition(
    out: &mut impl Write,
    format: Format,
    n: u64,
    k: u32,
    budget: &Budget,
) -> Result<i32, CliError> {
    let n = Natural::new(n)?;
    let (holds, rule, certificate) = if k == 2 {
        let v = is_zumkeller(n, budget)?;
        (v.is_zumkeller, v.rule.as_str(), v.certificate)
    } else {
        let v = is_k_layered(n, k, budget)?;
        (v.holds, v.rule.as_str(), v.certificate)
    };
    match format {
        Format::Pretty => {
            if let Some(cert) = &certificate {
                writeln!(
                    out,
                    "{} splits into {} parts of sum {} ({rule})",
                    n.get(),
                    cert.k(),
                    cert.part_sum()
                )?;
                writeln!(out, "{}", set_notation(cert.parts()))?;
            } else if holds {
                writeln!(out, "{} splits into {k} parts ({rule})", n.get())?;
            } else {
                writeln!(out, "{} has no {k}-part equal split ({rule})", n.get())?;
            }
        }
        Format::Tsv => {
            writeln!(out, "n\tk\tholds\trule\tpart_sum\tparts")?;
            let (sum, parts) = match &certificate {
                Some(cert) => (
                    cert.part_sum().to_string(),
                    cert.parts()
                        .iter()
                        .map(|part| {
                            part.iter()
                                .map(u64::to_string)
                                .collect::<Vec<_>>()
                                .join(" ")
                        })
                        .collect::<Vec<_>>()
                        .join("|"),
                ),
                None => ("-".into(), "-".into()),
            };
            writeln!(out, "{}\t{k}\t{holds}\t{rule}\t{sum}\t{parts}", n.get())?;
        }
        Format::Json => {
            let value = json!({
                "n": n.get(),
                "k": k,
                "holds": holds,
                "rule": rule,
                "certificate": certificate,
            });
            writeln!(out, "{value}")?;
        }
    }
    Ok(if holds { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_scan(
    out: &mut impl Write,
    format: Format,
    lo: u64,
    hi: u64,
    workers: usize,
    budget: &Budget,
) -> Result<i32, CliError> {
    let records = verify::scan(Natural::new(lo)?, Natural::new(hi)?, workers, budget)?;
    match format {
        Format::Pretty | Format::Tsv => {
            writeln!(out, "{}", ClassificationRecord::tsv_header())?;
            for rec in &records {
                writeln!(out, "{}", rec.tsv_row())?;
            }
            if format == Format::Pretty {
                let count =
                    |f: fn(&ClassificationRecord) -> bool| records.iter().filter(|r| f(r)).count();
                writeln!(
                    out,
                    "{} numbers: {} zumkeller, {} half-zumkeller, {} practical, {} perfect, {} harmonic",
                    records.len(),
                    count(|r| r.is_zumkeller),
                    count(|r| r.is_half_zumkeller),
                    count(|r| r.is_practical),
                    count(|r| r.is_perfect),
                    count(|r| r.is_harmonic),
                )?;
            }
        }
        Format::Json => writeln!(out, "{}", json_line(&records)?)?,
    }
    Ok(EXIT_OK)
}

fn cmd_seq(
    out: &mut impl Write,
    format: Format,
    id: &str,
    count: usize,
    budget: &Budget,
) -> Result<i32, CliError> {
    let id: SequenceId = id.parse()?;
    let result = verify::sequence(id, count, budget)?;
    match format {
        Format::Pretty => {
            let line = result
                .terms
                .iter()
                .map(u64::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            writeln!(out, "{line}")?;
        }
        Format::Tsv => {
            writeln!(out, "# {}", result.id)?;
            for (i, term) in result.terms.iter().enumerate() {
                writeln!(out, "{}\t{term}", i + 1)?;
            }
        }
        Format::Json => writeln!(out, "{}", json_line(&result)?)?,
    }
    if let Some(at) = result.truncated_at {
        eprintln!("zk: enumeration stopped at {at}; raise --tau-cap or --dp-budget");
        Ok(EXIT_BUDGET)
    } else {
        Ok(EXIT_OK)
    }
}

fn cmd_verify_list(out: &mut impl Write, format: Format) -> Result<i32, CliError> {
    let checks = verify::checks();
    match format {
        Format::Pretty => {
            for c in checks {
                writeln!(
                    out,
                    "{:<36} {:<9} {}",
                    c.id,
                    c.alias.unwrap_or("-"),
                    c.summary
                )?;
            }
        }
        Format::Tsv => {
            writeln!(out, "id\talias\tsummary")?;
            for c in checks {
                writeln!(out, "{}\t{}\t{}", c.id, c.alias.unwrap_or("-"), c.summary)?;
            }
        }
        Format::Json => {
            let rows = checks
                .iter()
                .map(|c| {
                    json!({
                        "id": c.id,
                        "alias": c.alias,
                        "summary": c.summary,
                        "defaults": c.defaults,
                    })
                })
                .collect::<Vec<_>>();
            writeln!(out, "{}", json_line(&rows)?)?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify_run(
    out: &mut impl Write,
    format: Format,
    id: &str,
    overrides: &ParamOverrides,
    budget: &Budget,
) -> Result<i32, CliError> {
    let report = verify::run_theorem(id, overrides, budget)?;
    match format {
        Format::Pretty => write_report_pretty(out, &report)?,
        Format::Tsv => {
            writeln!(out, "{}", TheoremReport::tsv_header())?;
            writeln!(out, "{}", report.tsv_row())?;
        }
        Format::Json => writeln!(out, "{}", json_line(&report)?)?,
    }
    Ok(if report.passed {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn write_report_pretty(out: &mut impl Write, report: &TheoremReport) -> io::Result<()> {
    let verdict = if report.passed { "PASS" } else { "FAIL" };
    match report.alias {
        Some(alias) => writeln!(out, "{verdict} {} ({alias})", report.id)?,
        None => writeln!(out, "{verdict} {}", report.id)?,
    }
    writeln!(out, "  {}", report.summary)?;
    let p = &report.params;
    writeln!(
        out,
        "  params: lo={} hi={} alpha_max={} p_max={} beta_max={}",
        p.lo, p.hi, p.alpha_max, p.p_max, p.beta_max
    )?;
    writeln!(out, "  instances: {}", report.instances)?;
    for note in &report.counterexamples {
        writeln!(out, "  ! {note}")?;
    }
    writeln!(out, "  time: {} ms", report.millis)
}

fn cmd_compare(
    out: &mut impl Write,
    format: Format,
    id: &str,
    path: &Path,
    budget: &Budget,
) -> Result<i32, CliError> {
    let id: SequenceId = id.parse()?;
    let cmp = verify::compare_bfile(id, path, budget)?;
    match format {
        Format::Pretty => match &cmp.divergence {
            None => writeln!(out, "{}: {} terms agree", cmp.id, cmp.lines_compared)?,
            Some(d) => writeln!(
                out,
                "{}: index {} has file value {} but computed {} ({} lines compared)",
                cmp.id, d.index, d.file_value, d.computed, cmp.lines_compared
            )?,
        },
        Format::Tsv => {
            writeln!(out, "id\tlines_compared\tindex\tfile_value\tcomputed")?;
            match &cmp.divergence {
                None => writeln!(out, "{}\t{}\t-\t-\t-", cmp.id, cmp.lines_compared)?,
                Some(d) => writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}",
                    cmp.id, cmp.lines_compared, d.index, d.file_value, d.computed
                )?,
            }
        }
        Format::Json => writeln!(out, "{}", json_line(&cmp)?)?,
    }
    Ok(if cmp.divergence.is_none() {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    })
}

fn cmd_bench(
    out: &mut impl Write,
    format: Format,
    limit: u64,
    workers: usize,
    budget: &Budget,
) -> Result<i32, CliError> {
    let limit = limit.max(2);
    let mut rows: Vec<(String, u128)> = Vec::new();

    let t = Instant::now();
    let records = verify::scan(Natural::new(1)?, Natural::new(limit)?, workers, budget)?;
    std::hint::black_box(&records);
    rows.push((
        format!("classify 1..={limit} ({workers} workers)"),
        t.elapsed().as_millis(),
    ));

    let t = Instant::now();
    let mut positives = 0u64;
    for n in 1..=limit {
        if is_zumkeller(Natural::new(n)?, budget)?.is_zumkeller {
            positives += 1;
        }
    }
    std::hint::black_box(positives);
    rows.push((
        format!("zumkeller verdicts 1..={limit}"),
        t.elapsed().as_millis(),
    ));

    let t = Instant::now();
    let f = factorize(Natural::new(720_720)?);
    let d = divisors(&f, budget)?;
    let target = (d.sigma() - 2 * 720_720) / 2;
    let witness = subset_sum(d.proper(), target, budget)?;
    std::hint::black_box(&witness);
    rows.push((
        "subset-sum witness for 720720".into(),
        t.elapsed().as_millis(),
    ));

    let t = Instant::now();
    let split = k_partition(Natural::new(27_720)?, 4, budget)?;
    std::hint::black_box(&split);
    rows.push(("four-part split of 27720".into(), t.elapsed().as_millis()));

    let t = Instant::now();
    let seq = verify::sequence(SequenceId::Zumkeller, 200, budget)?;
    std::hint::black_box(&seq);
    rows.push(("first 200 zumkeller terms".into(), t.elapsed().as_millis()));

    match format {
        Format::Pretty => {
            for (task, millis) in &rows {
                writeln!(out, "{task:<38} {millis:>6} ms")?;
            }
        }
        Format::Tsv => {
            writeln!(out, "task\tmillis")?;
            for (task, millis) in &rows {
                writeln!(out, "{task}\t{millis}")?;
            }
        }
        Format::Json => {
            let rows = rows
                .iter()
                .map(|(task, millis)| json!({ "task": task, "millis": millis }))
                .collect::<Vec<_>>();
            writeln!(out, "{}", json_line(&rows)?)?;
        }
    }
    Ok(EXIT_OK)
}
