//! Command-line front end. Exit codes: 0 success, 1 check failure, 2 usage
//! or parse error.

use clap::{Parser, Subcommand};
use splitconf::families;
use splitconf_cli::{analyze, survey, verify, with_jobs};

#[derive(Parser)]
#[command(
    name = "splitconf",
    version,
    about = "Splittability analysis for incidence configurations, cyclic Haar graphs and generalized Petersen graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-modulus class counts: classes (a), girth-6 (b), splittable (c),
    /// unsplittable (d), and the girth-6 split of those (e), (f)
    Census {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        /// tab-separated output with 1/0 booleans
        #[arg(long)]
        tsv: bool,
        /// worker threads (default: all cores); changes speed, never bytes
        #[arg(long)]
        jobs: Option<usize>,
        /// cross-check verdicts against the brute-force oracle where it fits
        #[arg(long)]
        oracle: bool,
    },
    /// One row per class: symbol, splittable, girth, diameter,
    /// arc-transitive
    Survey {
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        #[arg(long)]
        tsv: bool,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        oracle: bool,
        /// keep only the girth-6 rows (the actual configurations)
        #[arg(long)]
        girth6_only: bool,
    },
    /// Full report on one graph: H(n;...), GP(n,k), LCF[...]^r, or an
    /// edge-list file path
    Analyze {
        spec: String,
        /// emit the graph in DOT format instead of the report
        #[arg(long)]
        dot: bool,
    },
    /// Run the built-in theorem checklist
    VerifyTheorems {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
        /// deliberately corrupt one certificate (testing hook)
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Compare unsplittability of every girth-6 trivalent class against the
    /// three-family prediction; TSV output
    ScanFamilies {
        #[arg(long, default_value_t = 30)]
        n_max: usize,
    },
    /// Survey girth-6 cyclic Haar classes of higher arity; TSV output
    ScanArity {
        #[arg(long, default_value_t = 4)]
        arity: usize,
        #[arg(long, default_value_t = 4)]
        n_min: usize,
        #[arg(long, default_value_t = 14)]
        n_max: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Census {
            n_min,
            n_max,
            tsv,
            jobs,
            oracle,
        } => with_jobs(jobs, || {
            if let Err(code) = check_range(n_min, n_max) {
                return code;
            }
            let rows = survey::survey_rows(n_min, n_max);
            if oracle && !report_oracle(&rows) {
                return 1;
            }
            let census = survey::census_from_survey(n_min, n_max, &rows);
            print!(
                "{}",
                if tsv {
                    survey::census_tsv(&census)
                } else {
                    survey::census_table(&census)
                }
            );
            0
        }),
        Command::Survey {
            n_min,
            n_max,
            tsv,
            jobs,
            oracle,
            girth6_only,
        } => with_jobs(jobs, || {
            if let Err(code) = check_range(n_min, n_max) {
                return code;
            }
            let mut rows = survey::survey_rows(n_min, n_max);
            if oracle && !report_oracle(&rows) {
                return 1;
            }
            if girth6_only {
                rows.retain(|r| r.girth == 6);
            }
            print!(
                "{}",
                if tsv {
                    survey::survey_tsv(&rows)
                } else {
                    survey::survey_table(&rows)
                }
            );
            0
        }),
        Command::Analyze { spec, dot } => match analyze::parse_subject(&spec) {
            Ok(subject) => {
                if dot {
                    print!("{}", analyze::dot(&subject));
                } else {
                    print!("{}", analyze::report(&subject));
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
        Command::VerifyTheorems {
            n_max,
            inject_fault,
        } => {
            let results = verify::run_checks(n_max, inject_fault);
            let (text, ok) = verify::render_results(&results);
            print!("{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Command::ScanFamilies { n_max } => {
            if n_max < 7 {
                eprintln!("error: --n-max must be at least 7");
                2
            } else {
                let report = families::scan_unsplittable_families(n_max);
                print!("{}", report.to_tsv());
                let mismatches = report.mismatches().len();
                if mismatches > 0 {
                    eprintln!("{mismatches} mismatching rows: candidate counterexamples");
                    1
                } else {
                    0
                }
            }
        }
        Command::ScanArity {
            arity,
            n_min,
            n_max,
        } => match families::scan_higher_arity(arity, n_min, n_max) {
            Ok(report) => {
                print!("{}", report.to_tsv());
                let hits = report.counterexamples().len();
                if hits > 0 {
                    eprintln!("{hits} splittable instances found: candidate counterexamples");
                }
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        },
    };
    std::process::exit(code);
}

fn check_range(n_min: usize, n_max: usize) -> Result<(), i32> {
    if n_min < 3 || n_min > n_max {
        eprintln!("error: need 3 <= n-min <= n-max");
        return Err(2);
    }
    Ok(())
}

fn report_oracle(rows: &[survey::SurveyRow]) -> bool {
    let disagreements = survey::oracle_disagreements(rows);
    for d in &disagreements {
        eprintln!("error: {d}");
    }
    disagreements.is_empty()
}
