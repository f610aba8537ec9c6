//! `schubert`: singular loci of Schubert varieties from the command line.
//!
//! Every command writes one JSON document to stdout. Exit codes: 0 success,
//! 1 verification failure, 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use schubert_core::slice::{verify_slice_model, SliceModel};
use schubert_core::{
    build_slice, classify_component, cmd_report, cmd_verify_all, find_patterns, kl_closed_form,
    singular_components_oracle, tangent_dimension, Error, KlTable, Permutation, SweepOptions,
    SweepReport, DEFAULT_SEED, DEFAULT_TRIALS,
};

#[derive(Debug, Parser)]
#[command(
    name = "schubert",
    version,
    about = "Singular loci of type A Schubert varieties"
)]
struct Cli {
    /// Pretty-print JSON; `verify-all` prints a table instead.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Pattern test for smoothness of X_w, with 4231/3412 witnesses.
    Smooth { w: Permutation },
    /// Zariski tangent dimension of X_w along the cell of v.
    Tangent { v: Permutation, w: Permutation },
    /// Components of Sing(X_w) with type, KL polynomial and slice.
    SingularLocus {
        w: Permutation,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Kazhdan–Lusztig polynomial by recursion, and by closed form when
    /// (v, w) is a component pair.
    Kl { v: Permutation, w: Permutation },
    /// Transversal slice of a component pair (or v = w) and its verdict.
    Slice {
        v: Permutation,
        w: Permutation,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Everything known about w in one document.
    Report {
        w: Permutation,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Exhaustive verification over S_n.
    VerifyAll {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Required for n >= 7; streams progress to stderr.
        #[arg(long)]
        extended: bool,
        /// Single worker thread.
        #[arg(long)]
        serial: bool,
    },
}

enum Failure {
    Usage(String),
    Verification(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn same_size(v: &Permutation, w: &Permutation) -> Result<(), Failure> {
    if v.n() == w.n() {
        Ok(())
    } else {
        Err(Failure::Usage(format!("{v} and {w} have different sizes")))
    }
}

fn run(cli: &Cli) -> Result<Value, Failure> {
    match &cli.command {
        Command::Smooth { w } => {
            let witnesses = find_patterns(w);
            Ok(json!({ "smooth": witnesses.is_empty(), "witnesses": witnesses }))
        }
        Command::Tangent { v, w } => {
            same_size(v, w)?;
            let r = tangent_dimension(v, w)?;
            Ok(json!({ "m": r.m, "excess": r.excess }))
        }
        Command::SingularLocus { w, trials, seed } => {
            let report = cmd_report(w, *trials, *seed)?;
            let ok = report.components.iter().all(|c| c.ok());
            let doc = serde_json::to_value(&report.components).expect("serializable");
            if ok {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
        Command::Kl { v, w } => {
            same_size(v, w)?;
            let recursion = KlTable::new().polynomial(v, w)?;
            let closed = if singular_components_oracle(w).contains(v) {
                Some(kl_closed_form(&classify_component(v, w)?))
            } else {
                None
            };
            let agree = closed.as_ref() == Some(&recursion);
            let doc = json!({ "closed_form": closed, "recursion": recursion, "agree": agree });
            if closed.is_some() && !agree {
                Err(Failure::Verification(doc))
            } else {
                Ok(doc)
            }
        }
        Command::Slice { v, w, trials, seed } => {
            same_size(v, w)?;
            let model = if v == w {
                SliceModel::point(w)
            } else if singular_components_oracle(w).contains(v) {
                build_slice(&classify_component(v, w)?, w)?
            } else {
                return Err(Failure::Usage(format!(
                    "({v}, {w}) is not a component pair of Sing(X_{w})"
                )));
            };
            let verdict = verify_slice_model(&model, *trials, *seed)?;
            let summary = model.summary();
            let doc = json!({
                "free": summary.free,
                "type": summary.ctype,
                "cone": summary.cone,
                "dimension": summary.dimension,
                "equations": summary.equations,
                "determinantal_equations": model
                    .determinantal_equations
                    .iter()
                    .map(|p| format!("{} = 0", model.render(p)))
                    .collect::<Vec<_>>(),
                "verdict": verdict,
            });
            if verdict.all_ok() {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
        Command::Report { w, trials, seed } => {
            let report = cmd_report(w, *trials, *seed)?;
            let ok = report.components.iter().all(|c| c.ok());
            let doc = serde_json::to_value(&report).expect("serializable");
            if ok {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
        Command::VerifyAll {
            n,
            trials,
            seed,
            extended,
            serial,
        } => {
            if *n >= 7 && !extended {
                return Err(Failure::Usage(format!(
                    "n = {n} takes minutes; pass --extended to run it"
                )));
            }
            let mut opts = SweepOptions::new(*n, *trials, *seed);
            opts.parallel = !serial;
            if *extended {
                opts.progress = Some(progress);
            }
            let report = cmd_verify_all(&opts)?;
            if cli.pretty {
                print_table(&report);
            }
            let doc = serde_json::to_value(&report).expect("serializable");
            if report.passed() {
                Ok(doc)
            } else {
                Err(Failure::Verification(doc))
            }
        }
    }
}

fn progress(done: usize, total: usize) {
    if done.is_multiple_of(250) || done == total {
        eprintln!("verify-all: {done}/{total}");
    }
}

fn print_table(r: &SweepReport) {
    let mut out = std::io::stdout().lock();
    let rows = [
        ("n", r.n.to_string()),
        ("trials", r.trials.to_string()),
        ("seed", r.seed.to_string()),
        ("permutations", r.permutations_checked.to_string()),
        ("smooth", r.smooth_count.to_string()),
        ("singular", r.singular_count.to_string()),
        ("component pairs", r.component_pairs.to_string()),
    ];
    for (k, v) in rows {
        let _ = writeln!(out, "{k:<18}{v:>10}");
    }
    for (t, c) in &r.types {
        let _ = writeln!(out, "  {t:<16}{c:>10}");
    }
    let f = &r.failed_checks;
    let checks = [
        ("smoothness", f.smoothness),
        ("classification", f.classification),
        ("formulas", f.formulas),
        ("kl", f.kl),
        ("free count", f.free_count),
        ("slice", f.slice),
    ];
    for (k, c) in checks {
        let status = if c == 0 { "pass" } else { "FAIL" };
        let _ = writeln!(out, "{k:<18}{status:>10}{c:>6}");
    }
    for x in &r.failure_witnesses {
        let v = x.v.as_ref().map_or("-".to_string(), ToString::to_string);
        let _ = writeln!(out, "  w={} v={} {}: {}", x.w, v, x.check, x.detail);
    }
}

fn emit(doc: &Value, pretty: bool) {
    let text = if pretty {
        serde_json::to_string_pretty(doc)
    } else {
        serde_json::to_string(doc)
    }
    .expect("serializable");
    println!("{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    // verify-all --pretty prints its table instead of JSON.
    let table = cli.pretty && matches!(cli.command, Command::VerifyAll { .. });
    match run(&cli) {
        Ok(doc) => {
            if !table {
                emit(&doc, cli.pretty);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(doc)) => {
            if !table {
                emit(&doc, cli.pretty);
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
