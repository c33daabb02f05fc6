//! Thin command-line front end over the speccat library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage/parse failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use speccat::acceptance::{self, CriterionReport};
use speccat::classify::{classify, degree_certificates};
use speccat::cospectral::{cospectral_mates, friendship_ds_summary, is_determined_by_spectrum};
use speccat::enumerate::{survey, SurveyOptions};
use speccat::families::{
    build_family, certify_family, section4::verify_section4_polynomials, sweep_descriptors,
    FamilyDescriptor, SweepBounds,
};
use speccat::graph6::{from_graph6, to_graph6};
use speccat::spectral::exact_spectrum;
use std::io::Read;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "speccat", version, about = "catalog machinery for graphs with all but two eigenvalues equal to 2 or -1")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Tsv,
}

#[derive(Args)]
struct InputArgs {
    /// file of graph6 lines, or "-" for standard input
    #[arg(default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Print the graph6 encoding of a catalog descriptor, e.g. I(a=1,k=2)
    Build { descriptor: String },
    /// Exact spectrum report for each input graph
    Spectrum {
        #[command(flatten)]
        input: InputArgs,
        /// cross-check with the numeric eigensolver instead of the exact path
        #[arg(long)]
        numeric: bool,
        /// convergence tolerance for the numeric path
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Classify each input graph against the trichotomy and the catalog
    Classify(InputArgs),
    /// Certify claimed spectra over a descriptor sweep plus all sporadics
    Certify {
        #[arg(long, default_value_t = 20)]
        max_a: usize,
        #[arg(long, default_value_t = 20)]
        max_k_i: usize,
        #[arg(long, default_value_t = 10)]
        max_k_ii: usize,
        #[arg(long, default_value_t = 30)]
        max_m: usize,
        #[arg(long, default_value_t = 20)]
        max_k_iv: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Verify the printed quotient polynomials and root-membership claims
    Section4 {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Certified cospectral mates of a descriptor
    Cospectral { descriptor: String },
    /// Determined-by-spectrum verdict for a descriptor (or r/k friendship form)
    Ds {
        descriptor: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exhaustive completeness survey at one order
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// include graph6 lines of every family member found
        #[arg(long)]
        members: bool,
    },
    /// Run the full acceptance suite
    Selfcheck {
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn read_graphs(input: &str) -> Result<Vec<speccat::Graph>, String> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| e.to_string())?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("{input}: {e}"))?
    };
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| from_graph6(l).map_err(|e| format!("{l}: {e}")))
        .collect()
}

fn parse_descriptor(text: &str) -> Result<FamilyDescriptor, String> {
    text.parse::<FamilyDescriptor>().map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Build { descriptor } => {
            let desc = parse_descriptor(&descriptor)?;
            let g = build_family(&desc).map_err(|e| e.to_string())?;
            println!("{}", to_graph6(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { input, numeric, tol } => {
            if tol <= 0.0 {
                return Err("tolerance must be positive".into());
            }
            for g in read_graphs(&input.input)? {
                if numeric {
                    let summary = speccat::spectral::spectrum_summary(
                        &g,
                        speccat::spectral::SpectrumMode::Numeric,
                    );
                    let eigs = speccat::eigenvalues_symmetric(&g.adjacency_matrix(), tol)
                        .map_err(|e| e.to_string())?;
                    match input.format {
                        Format::Json => println!(
                            "{}",
                            json!({
                                "n": g.n(),
                                "mult_two": summary.mult_two,
                                "mult_minus_one": summary.mult_minus_one,
                                "exceptional": summary.exceptional,
                                "eigenvalues": eigs,
                            })
                        ),
                        Format::Text => println!(
                            "n={} p~{} q~{} exceptional~{:?}",
                            g.n(),
                            summary.mult_two,
                            summary.mult_minus_one,
                            summary.exceptional
                        ),
                        Format::Tsv => println!(
                            "{}\t{}\t{}\t{:?}",
                            g.n(),
                            summary.mult_two,
                            summary.mult_minus_one,
                            summary.exceptional
                        ),
                    }
                    continue;
                }
                let s = exact_spectrum(&g);
                match input.format {
                    Format::Json => {
                        let roots: Vec<_> = s
                            .residual_roots
                            .iter()
                            .map(|r| json!({"value": r.value, "error": r.error, "multiplicity": r.multiplicity}))
                            .collect();
                        println!(
                            "{}",
                            json!({
                                "n": s.n(),
                                "mult_two": s.mult_two,
                                "mult_minus_one": s.mult_minus_one,
                                "residual": s.residual.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                                "residual_roots": roots,
                            })
                        );
                    }
                    Format::Text => {
                        let roots: Vec<String> = s
                            .residual_roots
                            .iter()
                            .map(|r| format!("{:.6}x{}", r.value, r.multiplicity))
                            .collect();
                        println!(
                            "n={} p={} q={} residual=({}) roots=[{}]",
                            s.n(),
                            s.mult_two,
                            s.mult_minus_one,
                            s.residual,
                            roots.join(", ")
                        );
                    }
                    Format::Tsv => {
                        let roots: Vec<String> = s
                            .residual_roots
                            .iter()
                            .map(|r| format!("{:.12}x{}", r.value, r.multiplicity))
                            .collect();
                        println!(
                            "{}\t{}\t{}\t{}\t{}",
                            s.n(),
                            s.mult_two,
                            s.mult_minus_one,
                            s.residual,
                            roots.join(",")
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify(args) => {
            for g in read_graphs(&args.input)? {
                let verdict = classify(&g);
                let violations = degree_certificates(&g);
                match args.format {
                    Format::Json => {
                        let mut j = verdict.to_json();
                        j["violations"] = violations.iter().map(|v| v.to_json()).collect();
                        println!("{j}");
                    }
                    Format::Text => {
                        println!("{verdict:?} violations={}", violations.len());
                    }
                    Format::Tsv => {
                        let j = verdict.to_json();
                        println!(
                            "{}\t{}\t{}\t{}",
                            j["case"].as_str().unwrap_or("?"),
                            j["descriptor"].as_str().unwrap_or("-"),
                            j["beta"].as_u64().map(|b| b.to_string()).unwrap_or("-".into()),
                            violations.len()
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certify {
            max_a,
            max_k_i,
            max_k_ii,
            max_m,
            max_k_iv,
            jobs,
            format,
        } => {
            let bounds = SweepBounds {
                max_a,
                max_k_i,
                max_k_ii,
                max_m,
                max_k_iv,
            };
            let descriptors = sweep_descriptors(&bounds);
            let certify_all = |descs: &[FamilyDescriptor]| -> Vec<(FamilyDescriptor, Option<String>)> {
                use rayon::prelude::*;
                if jobs > 1 {
                    let pool = rayon::ThreadPoolBuilder::new()
                        .num_threads(jobs)
                        .build()
                        .expect("thread pool");
                    pool.install(|| {
                        descs
                            .par_iter()
                            .map(|d| (*d, certify_family(d).err().map(|e| e.to_string())))
                            .collect()
                    })
                } else {
                    descs
                        .iter()
                        .map(|d| (*d, certify_family(d).err().map(|e| e.to_string())))
                        .collect()
                }
            };
            let results = certify_all(&descriptors);
            let failures: Vec<_> = results
                .iter()
                .filter_map(|(d, e)| e.as_ref().map(|e| (d, e)))
                .collect();
            match format {
                Format::Json => println!(
                    "{}",
                    json!({
                        "total": results.len(),
                        "failures": failures.iter().map(|(d, e)| json!({"descriptor": d.to_string(), "error": e})).collect::<Vec<_>>(),
                    })
                ),
                Format::Text => {
                    println!("certified {} descriptors, {} failures", results.len(), failures.len());
                    for (d, e) in &failures {
                        println!("FAIL {d}: {e}");
                    }
                }
                Format::Tsv => {
                    for (d, e) in &results {
                        println!("{d}\t{}", if e.is_none() { "ok" } else { "FAIL" });
                    }
                }
            }
            Ok(if failures.is_empty() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Section4 { format } => {
            let r = verify_section4_polynomials();
            match format {
                Format::Tsv => {
                    for c in &r.identities {
                        println!("identity\t{}\t{}", c.name, if c.pass { "ok" } else { "FAIL" });
                    }
                    for c in &r.membership {
                        println!("membership\t{}\t{}", c.name, if c.pass { "ok" } else { "FAIL" });
                    }
                }
                Format::Json => {
                    let identities: Vec<_> = r
                        .identities
                        .iter()
                        .map(|c| json!({"name": c.name, "grid_points": c.grid_points, "pass": c.pass}))
                        .collect();
                    let membership: Vec<_> = r
                        .membership
                        .iter()
                        .map(|c| json!({"name": c.name, "searched": c.searched, "pass": c.pass, "mismatches": c.mismatches}))
                        .collect();
                    println!("{}", json!({"identities": identities, "membership": membership, "pass": r.all_pass()}));
                }
                Format::Text => {
                    for c in &r.identities {
                        println!(
                            "identity {}: {} ({} grid points)",
                            c.name,
                            if c.pass { "ok" } else { "FAIL" },
                            c.grid_points
                        );
                    }
                    for c in &r.membership {
                        println!(
                            "membership {}: {} ({} parameter points)",
                            c.name,
                            if c.pass { "ok" } else { "FAIL" },
                            c.searched
                        );
                    }
                }
            }
            Ok(if r.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Cospectral { descriptor } => {
            let desc = parse_descriptor(&descriptor)?;
            let mates = cospectral_mates(&desc).map_err(|e| e.to_string())?;
            for w in &mates {
                println!("{}", w.to_json());
            }
            if mates.is_empty() {
                eprintln!("no cospectral mates within the search bound");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Ds { descriptor, format } => {
            // accept both descriptor syntax and the friendship r,k shorthand
            let verdict = if let Some((r, k)) = descriptor
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            {
                friendship_ds_summary(r, k).map_err(|e| e.to_string())?
            } else {
                let desc = parse_descriptor(&descriptor)?;
                is_determined_by_spectrum(&desc).map_err(|e| e.to_string())?
            };
            match format {
                Format::Tsv => {
                    println!(
                        "{}\t{}\t{}",
                        verdict.descriptor,
                        verdict.is_ds,
                        verdict
                            .witness
                            .as_ref()
                            .map(|w| format!("{}+{}K3", w.right.0, w.right.1))
                            .unwrap_or_else(|| "-".into())
                    );
                }
                Format::Json => println!("{}", verdict.to_json()),
                Format::Text => {
                    if verdict.is_ds {
                        println!("{}: determined by its spectrum", verdict.descriptor);
                    } else {
                        let w = verdict.witness.as_ref().expect("non-DS carries a witness");
                        println!(
                            "{}: NOT determined by its spectrum ({:?}); mate {} + {} K3",
                            verdict.descriptor,
                            verdict.exception_case.expect("bullet fired"),
                            w.right.0,
                            w.right.1
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Survey { n, jobs, members } => {
            let r = survey(
                n,
                SurveyOptions {
                    jobs,
                    collect_members: members,
                    progress: n >= 10,
                },
            )
            .map_err(|e| e.to_string())?;
            println!("{}", r.to_json());
            Ok(if r.all_checks_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Selfcheck { jobs } => {
            let reports = acceptance::run_all(jobs);
            for r in &reports {
                println!("{r}");
            }
            Ok(ExitCode::from(
                CriterionReport::exit_code(&reports) as u8
            ))
        }
    }
}
