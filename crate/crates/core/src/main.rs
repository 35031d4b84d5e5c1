use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use transversal_core::session::{
    parse_session, reports_json, reports_text, run_session, selftest, selftest_json, selftest_text, Report,
    RunOptions,
};
use transversal_core::transcheck::Bounds;

#[derive(Parser)]
#[command(name = "transversal", version, about = "Normal transversality, relation type and Artin-Rees checks")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Emit key-sorted JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Worker threads for the independent cells of one command.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run a session script.
    Run {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        pmax: Option<u32>,
        #[arg(long)]
        qmax: Option<u32>,
        #[arg(long)]
        nmax: Option<u32>,
        #[arg(long)]
        dmax: Option<i64>,
    },
    /// Run the built-in fixture suite.
    Selftest {
        #[command(flatten)]
        common: Common,
    },
}

fn init_pool(jobs: usize) {
    // Only fails if a global pool already exists, which cannot happen here.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
}

fn emit(json: bool, value: serde_json::Value, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("json"));
    } else {
        print!("{text}");
    }
}

fn report_disagreements(reports: &[&Report]) -> bool {
    for r in reports {
        if let Some(d) = &r.disagreement {
            eprintln!("internal disagreement in command {} ({}):\n{d}", r.index, r.command);
        }
    }
    reports.iter().any(|r| r.disagreement.is_some())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Cmd::Run { file, common, pmax, qmax, nmax, dmax } => {
            init_pool(common.jobs);
            let text = match std::fs::read_to_string(&file) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", file.display());
                    return ExitCode::from(1);
                }
            };
            let opts = RunOptions { overrides: Bounds { pmax, qmax, nmax, dmax } };
            let reports = match parse_session(&text).and_then(|s| run_session(&s, &opts)) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            };
            emit(common.json, reports_json(&reports), reports_text(&reports));
            if report_disagreements(&reports.iter().collect::<Vec<_>>()) {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Cmd::Selftest { common } => {
            init_pool(common.jobs);
            let outcomes = selftest(&RunOptions::default());
            emit(common.json, selftest_json(&outcomes), selftest_text(&outcomes));
            let all: Vec<&Report> = outcomes.iter().flat_map(|o| &o.reports).collect();
            if report_disagreements(&all) {
                return ExitCode::from(2);
            }
            for o in outcomes.iter().filter(|o| !o.passed) {
                eprintln!("selftest case {} failed: {}", o.name, o.message);
            }
            if outcomes.iter().all(|o| o.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
