use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wreath_core::dims::{
    self, decay_csv, decay_profile, dimension, dimension_csv, dimension_table,
};
use wreath_core::fusion::fuse_basis;
use wreath_core::groups::GroupCtx;
use wreath_core::linmaps::{gram_matrix, hom_dimension, GramBackend};
use wreath_core::ncpart::{count_admissible, enumerate_nc, Flavor};
use wreath_core::verify::{run_suite, Suite, SuiteConfig};
use wreath_core::words::Word;
use wreath_core::Error;

/// Exact fusion rules, partition counts, intertwiner dimensions and
/// multiplier eigenvalues for free wreath products of a discrete group by the
/// quantum permutation group S_N^+.
#[derive(Parser, Debug)]
#[command(name = "wreath", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Group: cyclic:<s>, integers, table:<path>, free:<n> or trivial.
    #[arg(long, global = true, default_value = "trivial")]
    group: String,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads for verify and export; 0 uses all cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for sampled cases.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decompose ω(x) ⊗ ω(y) into irreducibles ω(w) with multiplicities.
    Fuse {
        /// First word, e.g. "[1,0]".
        #[arg(long)]
        x: String,
        /// Second word.
        #[arg(long)]
        y: String,
    },
    /// Dimension of ω(w) at parameter N, from the Chebyshev product formula.
    Dim {
        #[arg(long)]
        word: String,
        #[arg(long = "N")]
        n: u64,
    },
    /// Dimension of the intertwiner space between tensor products of basic
    /// corepresentations a(g): the number of admissible decorated partitions
    /// and the exact rank of their Gram matrix.
    Homdim {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
        #[arg(long = "N")]
        n: u64,
    },
    /// Number of decorated non-crossing partitions between two rows that
    /// satisfy the block rule of the chosen flavor.
    Count {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
        /// nc_gamma, nc_gamma_prime, nc_star or nc_s:<s>.
        #[arg(long, default_value = "nc_gamma")]
        flavor: String,
    },
    /// Gram matrix of the maps T_p over all of NC(k, l) and its exact rank.
    Gram {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        l: usize,
        #[arg(long = "N")]
        n: u64,
        #[arg(long, value_enum, default_value_t = BackendArg::Combinatorial)]
        backend: BackendArg,
    },
    /// Multiplier eigenvalue c_x(w) and, with --r-max, the maximum of |c_x|
    /// over each shell L(w) = R.
    Multiplier {
        #[arg(long)]
        x: f64,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        r_max: Option<u64>,
    },
    /// Run a verification suite and report every failing case.
    Verify {
        /// nc-prime-coefficients, trivial-multiplicity, support-g2, support-e3
        /// or reductions.
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        /// Longest word or tuple checked.
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Parameters N for rank checks, comma separated.
        #[arg(long = "N", value_delimiter = ',', default_value = "5")]
        n: Vec<u64>,
        /// Cap on the number of points of enumerated partitions.
        #[arg(long, default_value_t = wreath_core::ncpart::DEFAULT_ENUM_LIMIT)]
        max_partition: usize,
    },
    /// Export a table: dimensions of all words up to a length, a decay
    /// profile, or the partitions of NC(k, l).
    Export {
        #[arg(value_enum)]
        what: ExportKind,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        #[arg(long = "N", default_value_t = 5)]
        n: u64,
        #[arg(long, default_value_t = 4.0)]
        x: f64,
        #[arg(long, default_value_t = 20)]
        r_max: u64,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = 2)]
        l: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BackendArg {
    Direct,
    Combinatorial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ExportKind {
    Dims,
    Decay,
    Partitions,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Cap(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::LimitExceeded(_) => Failure::Cap(e.to_string()),
            Error::Io(_) => Failure::Io(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Text to emit and whether a verification suite failed.
struct Output {
    text: String,
    suite_failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Self {
            text,
            suite_failed: false,
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn csv_field(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let g = &cli.global;
    let ctx = || GroupCtx::parse(&g.group);
    let word = |ctx: &GroupCtx, text: &str| Word::parse(text, ctx);
    let csv = g.format == Format::Csv;
    match &cli.command {
        Command::Fuse { x, y } => {
            let ctx = ctx()?;
            let prod = fuse_basis(&word(&ctx, x)?, &word(&ctx, y)?, &ctx)?;
            if csv {
                let mut s = String::from("word,mult\n");
                for (w, c) in prod.terms() {
                    s.push_str(&format!("{},{c}\n", csv_field(&w.display(&ctx))));
                }
                Ok(Output::ok(s))
            } else {
                Ok(Output::ok(
                    serde_json::to_string_pretty(&prod.to_json(&ctx)).map_err(Error::from)?,
                ))
            }
        }
        Command::Dim { word: w, n } => {
            let ctx = ctx()?;
            let w = word(&ctx, w)?;
            let d = dimension(&w, &ctx, *n)?;
            if *n < 4 {
                eprintln!("warning: N = {n} < 4; the value is the polynomial evaluation, not necessarily a dimension");
            }
            let l = w.l_length(&ctx);
            Ok(Output::ok(if csv {
                format!("word,L,dim\n{},{l},{d}\n", csv_field(&w.display(&ctx)))
            } else {
                pretty(&json!({"word": w.tokens(&ctx), "L": l, "N": n, "dim": d.to_string()}))
            }))
        }
        Command::Homdim { upper, lower, n } => {
            let ctx = ctx()?;
            let (u, l) = (word(&ctx, upper)?, word(&ctx, lower)?);
            let h = hom_dimension(u.letters(), l.letters(), &ctx, *n)?;
            if *n < 4 {
                eprintln!("warning: N = {n} < 4; the maps T_p need not be independent, so rank may be below count");
            }
            Ok(Output::ok(if csv {
                format!("count,rank\n{},{}\n", h.count, h.rank)
            } else {
                pretty(&json!({"N": n, "count": h.count, "rank": h.rank}))
            }))
        }
        Command::Count {
            upper,
            lower,
            flavor,
        } => {
            let ctx = ctx()?;
            let flavor: Flavor = flavor.parse()?;
            let (u, l) = (word(&ctx, upper)?, word(&ctx, lower)?);
            let c = count_admissible(u.letters(), l.letters(), flavor, &ctx)?;
            Ok(Output::ok(if csv {
                format!("flavor,count\n{flavor},{c}\n")
            } else {
                pretty(&json!({"flavor": flavor.to_string(), "count": c}))
            }))
        }
        Command::Gram { k, l, n, backend } => {
            let backend = match backend {
                BackendArg::Direct => GramBackend::Direct,
                BackendArg::Combinatorial => GramBackend::Combinatorial,
            };
            let ps = enumerate_nc(*k, *l)?;
            let gm = gram_matrix(&ps, *n, backend)?;
            let rank = gm.rank();
            if csv {
                let mut s = String::new();
                for row in &gm.entries {
                    let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    s.push_str(&cells.join(","));
                    s.push('\n');
                }
                Ok(Output::ok(s))
            } else {
                let mut v = serde_json::to_value(gm.to_json()).map_err(Error::from)?;
                v["rank"] = json!(rank);
                v["partitions"] = json!(ps.iter().map(|p| p.to_json()).collect::<Vec<_>>());
                Ok(Output::ok(pretty(&v)))
            }
        }
        Command::Multiplier {
            x,
            n,
            word: w,
            r_max,
        } => {
            if w.is_none() && r_max.is_none() {
                return Err(Failure::Usage(
                    "multiplier needs --word, --r-max or both".into(),
                ));
            }
            let ctx = ctx()?;
            let mut obj = json!({"x": x, "N": n});
            let mut text = String::new();
            if let Some(w) = w {
                let w = word(&ctx, w)?;
                let c = dims::multiplier_eigenvalue(&w, &ctx, *x, *n)?;
                obj["word"] = json!(w.tokens(&ctx));
                obj["c"] = json!(c);
                if csv {
                    text.push_str(&format!("word,c\n{},{c:e}\n", csv_field(&w.display(&ctx))));
                }
            }
            if let Some(r) = r_max {
                let profile = decay_profile(*x, *n, &ctx, *r)?;
                if csv {
                    text.push_str(&decay_csv(&profile));
                }
                obj["profile"] = profile_json(&profile);
            }
            Ok(Output::ok(if csv { text } else { pretty(&obj) }))
        }
        Command::Verify {
            suite,
            max_len,
            n,
            max_partition,
        } => {
            let cfg = SuiteConfig {
                group: g.group.clone(),
                n_values: n.clone(),
                max_len: *max_len,
                max_partition: *max_partition,
                seed: g.seed,
                jobs: g.jobs.unwrap_or(0),
                ..SuiteConfig::default()
            };
            let report = run_suite(*suite, &cfg)?;
            eprintln!(
                "{}: {} cases, {} failures, {:.2?}",
                report.suite,
                report.cases,
                report.failures.len(),
                report.wall_time
            );
            Ok(Output {
                text: report.to_json(),
                suite_failed: !report.passed(),
            })
        }
        Command::Export {
            what,
            max_len,
            n,
            x,
            r_max,
            k,
            l,
        } => {
            let jobs = g.jobs.unwrap_or(0);
            let pool = rayon_pool(jobs)?;
            match what {
                ExportKind::Dims => {
                    let ctx = ctx()?;
                    let rows = pool.install(|| dimension_table(&ctx, *n, *max_len))?;
                    Ok(Output::ok(if csv {
                        dimension_csv(&rows, &ctx)
                    } else {
                        let v: Vec<Value> = rows
                            .iter()
                            .map(|(w, l, d)| json!({"word": w.tokens(&ctx), "L": l, "dim": d.to_string()}))
                            .collect();
                        pretty(&json!({"group": g.group, "N": n, "rows": v}))
                    }))
                }
                ExportKind::Decay => {
                    let ctx = ctx()?;
                    let profile = decay_profile(*x, *n, &ctx, *r_max)?;
                    Ok(Output::ok(if csv {
                        decay_csv(&profile)
                    } else {
                        pretty(
                            &json!({"group": g.group, "x": x, "N": n, "profile": profile_json(&profile)}),
                        )
                    }))
                }
                ExportKind::Partitions => {
                    let ps = enumerate_nc(*k, *l)?;
                    let v: Vec<_> = ps.iter().map(|p| p.to_json()).collect();
                    Ok(Output::ok(
                        serde_json::to_string_pretty(&v).map_err(Error::from)?,
                    ))
                }
            }
        }
    }
}

fn rayon_pool(jobs: usize) -> Result<rayon::ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Usage(format!("thread pool: {e}")))
}

fn profile_json(profile: &[dims::ShellStat]) -> Value {
    json!(profile
        .iter()
        .map(
            |s| json!({"R": s.r, "shell_size": s.shell_size.to_string(), "max_abs_c": s.max_abs_c})
        )
        .collect::<Vec<_>>())
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::io::Result<()> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, text),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = emit(&out.text, cli.global.out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.suite_failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) | Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
