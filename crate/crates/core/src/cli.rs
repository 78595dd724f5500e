//! Command-line front end.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use entrel::discovery::{build_fdag, fdag_to_sdfa, filter_log, model_size, Threshold};
use entrel::formats::pareto::{frontier, mark_dominated, read_points, write_frontier_csv};
use entrel::formats::sweep::{parse_thresholds, sweep, write_sweep_csv};
use entrel::formats::{
    fdag_to_dot, fdag_to_json, load_model, sdfa_to_dot, sdfa_to_json, write_csv, write_xes, Model,
};
use entrel::ingest::{log_stats, read_log, IngestConfig};
use entrel::model::{Diagnostic, EventLog, Sdfa};
use entrel::relevance::{relevance, VariantCost};
use entrel::{Error, Result};

#[derive(Debug, Parser)]
#[command(
    name = "entrel",
    version,
    about = "Entropic relevance of stochastic process models"
)]
pub struct Cli {
    /// Machine-readable JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress warnings and notes on stderr.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(flatten)]
    ingest: IngestArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct IngestArgs {
    /// CSV column holding the case identifier.
    #[arg(long, global = true, default_value = "case_id")]
    case_column: String,
    /// CSV column holding the activity label.
    #[arg(long, global = true, default_value = "activity")]
    activity_column: String,
    /// CSV column holding event timestamps.
    #[arg(long, global = true, default_value = "timestamp")]
    timestamp_column: String,
    /// Keep CSV file order within each case and ignore timestamps.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// strftime pattern for CSV timestamps (default: ISO 8601).
    #[arg(long, global = true)]
    timestamp_format: Option<String>,
    /// CSV field delimiter.
    #[arg(long, global = true, default_value = ",", value_parser = parse_delimiter)]
    delimiter: u8,
    /// XES event attribute used as the activity label.
    #[arg(long, global = true, default_value = "concept:name")]
    classifier: String,
}

impl IngestArgs {
    fn config(&self) -> IngestConfig {
        IngestConfig {
            case_column: self.case_column.clone(),
            activity_column: self.activity_column.clone(),
            timestamp_column: (!self.no_timestamp).then(|| self.timestamp_column.clone()),
            timestamp_format: self.timestamp_format.clone(),
            delimiter: self.delimiter,
            classifier_key: self.classifier.clone(),
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Summarise an event log.
    Stats { log: PathBuf },
    /// Discover a directly-follows model after trace removal.
    Discover {
        log: PathBuf,
        /// Fraction of traces to keep, most frequent variants first.
        #[arg(long, short = 'k', default_value = "1.0", value_parser = parse_threshold)]
        threshold: Threshold,
        #[arg(long, short)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ModelKind::Fdag)]
        format: ModelKind,
        /// Also write a Graphviz rendering of the written model.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Translate a model file.
    Convert {
        model: PathBuf,
        #[arg(long, value_enum)]
        to: ConvertTarget,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Score a model against a log.
    Relevance {
        log: PathBuf,
        model: PathBuf,
        /// Include the cost of every distinct trace.
        #[arg(long)]
        per_variant: bool,
    },
    /// Discover and score over a range of thresholds.
    Sweep {
        log: PathBuf,
        /// `start:end:step`, a comma-separated list, or one value.
        #[arg(long, default_value = "0.01:1.00:0.01", value_parser = parse_threshold_list)]
        thresholds: ThresholdList,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Pareto frontier of (size, relevance) over sweep CSV files.
    Pareto {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long, short)]
        out: Option<PathBuf>,
        /// Emit every point with its dominance flag instead of the frontier.
        #[arg(long)]
        all: bool,
    },
    /// Write a log as XES or CSV.
    ExportLog {
        log: PathBuf,
        #[arg(long, value_enum)]
        to: LogTarget,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKind {
    Fdag,
    Sdfa,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConvertTarget {
    Sdfa,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LogTarget {
    Xes,
    Csv,
}

#[derive(Debug, Clone)]
struct ThresholdList(Vec<Threshold>);

fn parse_threshold(s: &str) -> std::result::Result<Threshold, String> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| format!("{s:?} is not a number"))?;
    Threshold::new(v).map_err(|e| e.to_string())
}

fn parse_threshold_list(s: &str) -> std::result::Result<ThresholdList, String> {
    parse_thresholds(s)
        .map(ThresholdList)
        .map_err(|e| e.to_string())
}

fn parse_delimiter(s: &str) -> std::result::Result<u8, String> {
    match s.as_bytes() {
        b"\\t" | b"tab" => Ok(b'\t'),
        [b] if b.is_ascii() => Ok(*b),
        _ => Err("delimiter must be a single ASCII character".to_owned()),
    }
}

pub fn main() -> ExitCode {
    let cli = Cli::parse();
    let quiet = cli.quiet;
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if !(quiet && matches!(e, Error::Io(ref io) if io.kind() == io::ErrorKind::BrokenPipe))
            {
                eprintln!("error: {e}");
            }
            ExitCode::from(if e.is_input_failure() { 2 } else { 1 })
        }
    }
}

struct Ctx {
    json: bool,
    quiet: bool,
    ingest: IngestConfig,
}

impl Ctx {
    fn warn(&self, d: &Diagnostic) {
        if !self.quiet {
            eprintln!("{d}");
        }
    }

    fn log(&self, path: &Path) -> Result<EventLog> {
        read_log(path, &self.ingest).map_err(|e| e.in_file(path))
    }
}

fn run(cli: Cli) -> Result<()> {
    let ctx = Ctx {
        json: cli.json,
        quiet: cli.quiet,
        ingest: cli.ingest.config(),
    };
    match cli.command {
        Command::Stats { log } => stats(&ctx, &log),
        Command::Discover {
            log,
            threshold,
            out,
            format,
            dot,
        } => discover(
            &ctx,
            &log,
            threshold,
            out.as_deref(),
            format,
            dot.as_deref(),
        ),
        Command::Convert { model, to, out } => convert(&ctx, &model, to, out.as_deref()),
        Command::Relevance {
            log,
            model,
            per_variant,
        } => score(&ctx, &log, &model, per_variant),
        Command::Sweep {
            log,
            thresholds,
            out,
        } => {
            let rows = sweep(&ctx.log(&log)?, &thresholds.0)?;
            emit(out.as_deref(), |w| {
                if ctx.json {
                    write_json(w, &rows)
                } else {
                    write_sweep_csv(&rows, w)
                }
            })
        }
        Command::Pareto { files, out, all } => pareto(&ctx, &files, out.as_deref(), all),
        Command::ExportLog { log, to, out } => {
            let e = ctx.log(&log)?;
            emit(out.as_deref(), |w| {
                match to {
                    LogTarget::Xes => write_xes(&e, w)?,
                    LogTarget::Csv => write_csv(&e, w)?,
                }
                Ok(())
            })
        }
    }
}

/// Runs `f` against the output file, or stdout when no path is given.
fn emit<F>(path: Option<&Path>, f: F) -> Result<()>
where
    F: FnOnce(&mut dyn Write) -> Result<()>,
{
    match path {
        Some(p) => {
            let file_err = |source| Error::File {
                path: p.to_owned(),
                source,
            };
            let mut w = BufWriter::new(File::create(p).map_err(file_err)?);
            f(&mut w)?;
            w.flush().map_err(file_err)
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            f(&mut w)?;
            w.flush()?;
            Ok(())
        }
    }
}

fn write_json<T: Serialize + ?Sized>(w: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer_pretty(&mut *w, value)?;
    writeln!(w)?;
    Ok(())
}

fn write_text(w: &mut dyn Write, text: &str) -> Result<()> {
    w.write_all(text.as_bytes())?;
    Ok(())
}

fn stats(ctx: &Ctx, path: &Path) -> Result<()> {
    let s = log_stats(&ctx.log(path)?);
    emit(None, |w| {
        if ctx.json {
            return write_json(w, &s);
        }
        writeln!(w, "traces             {}", s.traces)?;
        writeln!(w, "events             {}", s.events)?;
        writeln!(w, "variants           {}", s.variants)?;
        writeln!(w, "alphabet_size      {}", s.alphabet_size)?;
        writeln!(w, "min_trace_length   {}", s.min_trace_length)?;
        writeln!(w, "max_trace_length   {}", s.max_trace_length)?;
        writeln!(w, "mean_trace_length  {:.6}", s.mean_trace_length)?;
        Ok(())
    })
}

fn discover(
    ctx: &Ctx,
    path: &Path,
    k: Threshold,
    out: Option<&Path>,
    format: ModelKind,
    dot: Option<&Path>,
) -> Result<()> {
    let e = ctx.log(path)?;
    if e.is_empty() {
        return Err(Error::EmptyLog);
    }
    let g = build_fdag(&filter_log(&e, k));
    let (json, rendering) = match format {
        ModelKind::Fdag => (fdag_to_json(&g), dot.map(|_| fdag_to_dot(&g))),
        ModelKind::Sdfa => {
            let a = fdag_to_sdfa(&g)?;
            (sdfa_to_json(&a), dot.map(|_| sdfa_to_dot(&a)))
        }
    };
    emit(out, |w| write_text(w, &json))?;
    if let (Some(p), Some(text)) = (dot, rendering) {
        emit(Some(p), |w| write_text(w, &text))?;
    }
    Ok(())
}

fn convert(ctx: &Ctx, path: &Path, to: ConvertTarget, out: Option<&Path>) -> Result<()> {
    let model = load_model(path).map_err(|e| e.in_file(path))?;
    let text = match (to, model) {
        (ConvertTarget::Dot, Model::Fdag(g)) => fdag_to_dot(&g),
        (ConvertTarget::Dot, Model::Sdfa(a)) => {
            report_warnings(ctx, &a);
            sdfa_to_dot(&a)
        }
        (ConvertTarget::Sdfa, m) => {
            let a = m.into_sdfa()?;
            report_warnings(ctx, &a);
            sdfa_to_json(&a)
        }
    };
    emit(out, |w| write_text(w, &text))
}

fn report_warnings(ctx: &Ctx, a: &Sdfa) {
    for d in a.validate().iter().filter(|d| !d.is_error()) {
        ctx.warn(d);
    }
}

#[derive(Serialize)]
struct ScoreOutput<'a> {
    rho: f64,
    selector_bits: f64,
    background_bits: f64,
    model_bits: f64,
    relevance: f64,
    fitting_traces: u64,
    nonfitting_traces: u64,
    states: usize,
    transitions: usize,
    model_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    per_variant: Option<&'a [VariantCost]>,
}

fn score(ctx: &Ctx, log: &Path, model: &Path, per_variant: bool) -> Result<()> {
    let e = ctx.log(log)?;
    let model = load_model(model).map_err(|e| e.in_file(model))?;
    if let Model::Fdag(g) = &model {
        for d in g.flow_warnings() {
            ctx.warn(&d);
        }
    }
    let a = model.into_sdfa()?;
    report_warnings(ctx, &a);
    let report = relevance(&e, &a)?;
    emit(None, |w| {
        if ctx.json {
            let r = &report;
            let out = ScoreOutput {
                rho: r.rho,
                selector_bits: r.selector_bits,
                background_bits: r.background_bits,
                model_bits: r.model_bits,
                relevance: r.relevance,
                fitting_traces: r.fitting_traces,
                nonfitting_traces: r.nonfitting_traces,
                states: a.state_count(),
                transitions: a.transition_count(),
                model_size: model_size(&a),
                per_variant: per_variant.then_some(r.per_variant.as_slice()),
            };
            return write_json(w, &out);
        }
        writeln!(w, "rho                {:.6}", report.rho)?;
        writeln!(w, "selector_bits      {:.6}", report.selector_bits)?;
        writeln!(w, "background_bits    {:.6}", report.background_bits)?;
        writeln!(w, "model_bits         {:.6}", report.model_bits)?;
        writeln!(w, "relevance          {:.6}", report.relevance)?;
        writeln!(w, "fitting_traces     {}", report.fitting_traces)?;
        writeln!(w, "nonfitting_traces  {}", report.nonfitting_traces)?;
        writeln!(w, "model_size         {}", model_size(&a))?;
        if per_variant {
            writeln!(w)?;
            writeln!(w, "multiplicity\tfits\tcost_bits\ttrace")?;
            for v in &report.per_variant {
                let trace = if v.trace.is_empty() {
                    "<empty>".to_owned()
                } else {
                    v.trace.join(",")
                };
                writeln!(
                    w,
                    "{}\t{}\t{:.6}\t{}",
                    v.multiplicity, v.fits, v.cost_bits, trace
                )?;
            }
        }
        Ok(())
    })
}

fn pareto(ctx: &Ctx, files: &[PathBuf], out: Option<&Path>, all: bool) -> Result<()> {
    let mut points = Vec::new();
    for path in files {
        let method = path
            .file_name()
            .and_then(|n| n.to_str())
            .map(|n| n.split('.').next().unwrap_or(n))
            .unwrap_or("model");
        let file = File::open(path).map_err(|source| Error::File {
            path: path.clone(),
            source,
        })?;
        points.extend(read_points(io::BufReader::new(file), method).map_err(|e| e.in_file(path))?);
    }
    let selected = if all {
        mark_dominated(&mut points);
        points.sort_by(|a, b| {
            (a.size, &a.method, &a.model)
                .cmp(&(b.size, &b.method, &b.model))
                .then(a.relevance.total_cmp(&b.relevance))
        });
        points
    } else {
        frontier(&points)
    };
    emit(out, |w| {
        if ctx.json {
            write_json(w, &selected)
        } else if all {
            let mut c = csv::Writer::from_writer(w);
            c.write_record(["method", "model", "size", "relevance", "dominated"])?;
            for p in &selected {
                c.write_record([
                    p.method.clone(),
                    p.model.clone(),
                    p.size.to_string(),
                    format!("{:.6}", p.relevance),
                    p.dominated.to_string(),
                ])?;
            }
            c.flush()?;
            Ok(())
        } else {
            write_frontier_csv(&selected, w)
        }
    })
}
