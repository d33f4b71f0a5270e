//! `gcx` command line: analyze one model file or a directory of models and
//! print deterministic text or JSON reports.
//!
//! Exit codes: 0 success, 2 parse error, 3 structural violation in the
//! input (J^2 != -1, non-integrable, degenerate form, ...), 4 internal
//! assertion (a proved statement failed on a valid model - an engine bug).

use clap::{Parser, Subcommand, ValueEnum};
use gcx_core::pipeline::{analyze_text, Analysis, RunConfig};
use gcx_core::Error;
use std::io::IsTerminal;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gcx", version, about = "exact generalized-cohomology engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a model file or every .gcx file in a directory
    Check {
        /// Model file or directory of model files
        path: PathBuf,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Spectral pages listed in the text report (pages are always
        /// computed to stabilization)
        #[arg(long, default_value_t = 4)]
        max_page: usize,
        /// Re-verify lemma verdicts by explicit subspace equality
        #[arg(long)]
        oracle: bool,
        /// Worker threads for directory runs
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Command::Check {
        path,
        format,
        max_page,
        oracle,
        jobs,
    } = cli.command;
    let config = RunConfig { max_page, oracle };
    let code = if path.is_dir() {
        run_corpus(&path, format, &config, jobs)
    } else {
        run_model(&path, format, &config)
    };
    ExitCode::from(code)
}

fn use_color() -> bool {
    if !std::io::stdout().is_terminal() {
        return false;
    }
    match std::env::var("GCX_COLOR") {
        Ok(v) => !matches!(v.as_str(), "0" | "never" | "off" | "false"),
        Err(_) => true,
    }
}

fn analyze_file(path: &Path, config: &RunConfig) -> Result<Analysis, Error> {
    let name = path
        .file_stem()
        .map(|s| s.to_string_lossy().to_string())
        .unwrap_or_default();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Structural(format!("cannot read {}: {e}", path.display())))?;
    analyze_text(&name, &text, config)
}

fn run_model(path: &Path, format: Format, config: &RunConfig) -> u8 {
    match analyze_file(path, config) {
        Ok(analysis) => {
            print_report(&analysis, format, config);
            0
        }
        Err(err) => {
            eprintln!("{}: {err}", path.display());
            err.exit_code() as u8
        }
    }
}

fn print_report(analysis: &Analysis, format: Format, config: &RunConfig) {
    let report = analysis.report();
    match format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text => print!(
            "{}",
            report.to_text(
                &analysis.display_pages(config.max_page),
                &analysis.cohomology.betti,
                use_color()
            )
        ),
    }
}

fn run_corpus(dir: &Path, format: Format, config: &RunConfig, jobs: usize) -> u8 {
    let mut paths: Vec<PathBuf> = match std::fs::read_dir(dir) {
        Ok(entries) => entries
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().is_some_and(|ext| ext == "gcx"))
            .collect(),
        Err(e) => {
            eprintln!("{}: {e}", dir.display());
            return 3;
        }
    };
    paths.sort();

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<(PathBuf, Result<Analysis, Error>)> = pool.install(|| {
        use rayon::prelude::*;
        paths
            .par_iter()
            .map(|p| (p.clone(), analyze_file(p, config)))
            .collect()
    });

    let mut worst = 0u8;
    let mut summary = Vec::new();
    let mut json_reports = Vec::new();
    for (path, result) in &results {
        let display_name = path
            .file_stem()
            .map(|s| s.to_string_lossy().to_string())
            .unwrap_or_default();
        match result {
            Ok(analysis) => {
                match format {
                    Format::Json => json_reports.push(analysis.report()),
                    Format::Text => {
                        print_report(analysis, format, config);
                        println!();
                    }
                }
                let v = analysis.report().verdicts;
                let mut line = format!(
                    "{display_name}: ok (lemma {}, equality {}, inequality {})",
                    yesno(v.lemma),
                    yesno(v.equality),
                    yesno(v.inequality)
                );
                if v.equality != v.lemma {
                    line.push_str(
                        "  [note: equality does not certify the lemma here; degeneration fails]",
                    );
                }
                summary.push(line);
            }
            Err(err) => {
                worst = worst.max(err.exit_code() as u8);
                summary.push(format!("{display_name}: FAILED ({err})"));
            }
        }
    }
    if format == Format::Json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json_reports).expect("report serialization")
        );
    }
    println!(
        "summary: {} models, {} failed",
        results.len(),
        summary.iter().filter(|s| s.contains("FAILED")).count()
    );
    for line in &summary {
        println!("  {line}");
    }
    worst
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
