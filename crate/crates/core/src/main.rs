//! `pcensus`: construct small groups, census their p-elements, evaluate the
//! closed-form bounds, compute M_p, check the combinatorial lemmas, and run
//! the verification suites.
//!
//! Exit codes: 0 success (and, for `verify`, zero failing checks); 1 failing
//! verification checks; 2 usage error; 3 enumeration cap exceeded; 4 internal
//! invariant breach.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pcensus::bounds::{
    check_bothcases, check_lemma_basep, check_lemma_basepbound, check_lemma_parity,
    check_mtbound, f_bound, h_p_int, i_bound, thm_c_bound, MtPart,
};
use pcensus::census::count_pi_elements;
use pcensus::construct::{eval, parse_expr};
use pcensus::exact::ExactBound;
use pcensus::group::{DEFAULT_AUT_CAP, DEFAULT_CAP};
use pcensus::mp::mp_group;
use pcensus::verify::{run_all, run_suite, CheckVerdict, SuiteConfig, VerifySuiteResult, SUITE_NAMES};
use pcensus::{arith, Error};

#[derive(Parser)]
#[command(name = "pcensus", version, about = "Exact p-element censuses and bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Common {
    /// Enumeration cap on group order
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Cap on the order of groups sent to the automorphism search
    #[arg(long, default_value_t = DEFAULT_AUT_CAP)]
    aut_cap: u64,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<std::path::PathBuf>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from an expression and report its basic data
    Construct {
        expr: String,
        #[command(flatten)]
        common: Common,
        /// Also write the generator set in .grp exchange format
        #[arg(long)]
        gens_out: Option<std::path::PathBuf>,
    },
    /// Count π-elements of a group exactly
    Census {
        expr: String,
        /// Census prime
        #[arg(short, long)]
        prime: Option<u64>,
        /// Several primes, comma-separated (π-elements)
        #[arg(long, value_delimiter = ',')]
        primes: Vec<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Evaluate a bound expression: f(n,q), i(n,q), h(p,m), thmC(n,q,p)
    Bounds {
        expr: String,
        #[command(flatten)]
        common: Common,
    },
    /// Compute M_p of a group via its composition factors
    Mp {
        expr: String,
        #[arg(short, long)]
        prime: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Check a single combinatorial lemma instance
    Lemmas {
        /// One of: basep, parity, basepbound, mtbound, bothcases
        lemma: String,
        #[arg(short, long)]
        n: Option<u64>,
        #[arg(short, long)]
        prime: Option<u64>,
        #[arg(short, long)]
        q: Option<u64>,
        #[arg(short, long)]
        m: Option<u64>,
        #[arg(short, long)]
        t: Option<u64>,
        #[arg(short, long)]
        s: Option<u64>,
        /// mtbound part, i–vii
        #[arg(long)]
        part: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites
    Verify {
        /// Suite name (default: all)
        #[arg(long)]
        suite: Option<String>,
        /// List available suites and exit
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                // bad user input
                Error::Parse { .. }
                | Error::UnknownSuite(_)
                | Error::NotPrime(_)
                | Error::NotPrimePower(_)
                | Error::HypothesisViolated(_) => ExitCode::from(2),
                Error::CapExceeded(_) => ExitCode::from(3),
                // anything else is an internal invariant breach
                _ => ExitCode::from(4),
            }
        }
    }
}

fn emit(common: &Common, text: &str) -> pcensus::Result<()> {
    match &common.out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{text}")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn init_threads(common: &Common) {
    if let Some(t) = common.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
}

fn run(cli: Cli) -> pcensus::Result<ExitCode> {
    match cli.command {
        Command::Construct { expr, common, gens_out } => {
            init_threads(&common);
            let g = eval(&parse_expr(&expr)?, common.cap)?;
            if let Some(path) = &gens_out {
                std::fs::write(path, g.serialize())?;
            }
            let report = serde_json::json!({
                "expr": expr,
                "order": g.order(),
                "kind": match &g.kind {
                    pcensus::group::EltKind::Perm { degree } =>
                        serde_json::json!({"perm": {"degree": degree}}),
                    pcensus::group::EltKind::Mat { field, n } =>
                        serde_json::json!({"mat": {"n": n, "q": field.q}}),
                },
                "generators": g.generators.len(),
                "center": g.center_size(),
                "classes": g.conjugacy_classes().len(),
            });
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&report).unwrap(),
                Format::Csv => format!(
                    "expr,order,generators,center,classes\n\"{}\",{},{},{},{}",
                    expr,
                    g.order(),
                    g.generators.len(),
                    g.center_size(),
                    g.conjugacy_classes().len()
                ),
                Format::Text => format!(
                    "{}: order {}, {} generators, centre {}, {} classes",
                    expr,
                    g.order(),
                    g.generators.len(),
                    g.center_size(),
                    g.conjugacy_classes().len()
                ),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census { expr, prime, primes, common } => {
            init_threads(&common);
            let mut ps = primes;
            if let Some(p) = prime {
                ps.push(p);
            }
            if ps.is_empty() {
                return Err(Error::HypothesisViolated(
                    "census needs -p/--prime or --primes".into(),
                ));
            }
            for &p in &ps {
                if !arith::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
            }
            let g = eval(&parse_expr(&expr)?, common.cap)?;
            let census = count_pi_elements(&g, &ps);
            let text = match common.format {
                Format::Json => {
                    let mut v = census.to_json();
                    v["expr"] = serde_json::json!(expr);
                    serde_json::to_string_pretty(&v).unwrap()
                }
                Format::Csv => format!(
                    "expr,order,count,proportion\n\"{}\",{},{},{}",
                    expr, census.order, census.count, census.proportion
                ),
                Format::Text => format!(
                    "{}: {} of {} elements are π-elements (π = {:?}), proportion {}",
                    expr, census.count, census.order, ps, census.proportion
                ),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { expr, common } => {
            let value = eval_bound_expr(&expr)?;
            let approx = value.to_float();
            // integral values print in decimal and get an exact float when
            // they fit; everything else uses the canonical factored form
            let (exact, approx_value) = match value.as_integer() {
                Some(n) => {
                    let f: f64 = n.to_string().parse().unwrap_or(approx.value);
                    (n.to_string(), f)
                }
                None => (value.to_string(), approx.value),
            };
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "expr": expr,
                    "exact": exact,
                    "approx": approx_value,
                    "log2": approx.log2,
                }))
                .unwrap(),
                Format::Csv => {
                    format!("expr,exact,approx\n\"{}\",\"{}\",{}", expr, exact, approx_value)
                }
                Format::Text => format!("{expr} = {exact} ≈ {approx_value}"),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Mp { expr, prime, common } => {
            init_threads(&common);
            if !arith::is_prime(prime) {
                return Err(Error::NotPrime(prime));
            }
            let g = eval(&parse_expr(&expr)?, common.cap)?;
            let report = mp_group(&g, &expr, prime, common.aut_cap)?;
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&report.to_json()).unwrap(),
                Format::Csv => format!(
                    "group,p,value\n\"{}\",{},{}",
                    report.description, report.p, report.value
                ),
                Format::Text => {
                    format!("M_{}({}) = {}", report.p, report.description, report.value)
                }
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Lemmas { lemma, n, prime, q, m, t, s, part, common } => {
            let need = |o: Option<u64>, name: &str| {
                o.ok_or_else(|| Error::HypothesisViolated(format!("lemma needs --{name}")))
            };
            let (params, result) = match lemma.as_str() {
                "basep" => {
                    let (n, p) = (need(n, "n")?, need(prime, "prime")?);
                    let (i, ii) = check_lemma_basep(n, p)?;
                    (
                        format!("n={n} p={p}"),
                        serde_json::json!({"part_i": i, "part_ii": ii}),
                    )
                }
                "parity" => {
                    let n = need(n, "n")?;
                    (format!("n={n}"), serde_json::json!({"minimal_m": check_lemma_parity(n)}))
                }
                "basepbound" => {
                    let (n, p) = (need(n, "n")?, need(prime, "prime")?);
                    let (holds, refined) = check_lemma_basepbound(n, p)?;
                    (
                        format!("n={n} p={p}"),
                        serde_json::json!({"holds": holds, "refined": refined}),
                    )
                }
                "mtbound" => {
                    let (m, t, q) = (need(m, "m")?, need(t, "t")?, need(q, "q")?);
                    let part = match part.as_deref() {
                        Some("i") => MtPart::I,
                        Some("ii") => MtPart::II,
                        Some("iii") => MtPart::III,
                        Some("iv") => MtPart::IV,
                        Some("v") => MtPart::V,
                        Some("vi") => MtPart::VI,
                        Some("vii") => MtPart::VII,
                        other => {
                            return Err(Error::HypothesisViolated(format!(
                                "mtbound needs --part i..vii, got {other:?}"
                            )))
                        }
                    };
                    (
                        format!("part={part:?} m={m} t={t} q={q}"),
                        serde_json::json!({"holds": check_mtbound(part, m, t, q)?}),
                    )
                }
                "bothcases" => {
                    let (q, s, t) = (need(q, "q")?, need(s, "s")?, need(t, "t")?);
                    (
                        format!("q={q} s={s} t={t}"),
                        serde_json::json!({"holds": check_bothcases(q, s, t)?}),
                    )
                }
                other => {
                    return Err(Error::HypothesisViolated(format!("unknown lemma '{other}'")))
                }
            };
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(
                    &serde_json::json!({"lemma": lemma, "params": params, "result": result}),
                )
                .unwrap(),
                Format::Csv => format!("lemma,params,result\n{lemma},\"{params}\",\"{result}\""),
                Format::Text => format!("{lemma} [{params}]: {result}"),
            };
            emit(&common, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, list, common } => {
            init_threads(&common);
            if list {
                emit(&common, &SUITE_NAMES.join("\n"))?;
                return Ok(ExitCode::SUCCESS);
            }
            let cfg = SuiteConfig { cap: common.cap, aut_cap: common.aut_cap };
            let results = match suite {
                Some(name) => vec![run_suite(&name, &cfg)?],
                None => run_all(&cfg)?,
            };
            let failures: usize = results.iter().map(|r| r.failures()).sum();
            let text = match common.format {
                Format::Json => serde_json::to_string_pretty(&serde_json::json!({
                    "suites": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
                    "failures": failures,
                }))
                .unwrap(),
                Format::Csv => {
                    let mut out =
                        String::from("suite,id,params,expected,observed,verdict,elapsed_ms");
                    for r in &results {
                        for c in &r.checks {
                            out.push_str(&format!(
                                "\n{},{},\"{}\",\"{}\",\"{}\",{},{}",
                                r.suite,
                                c.id,
                                c.params,
                                c.expected,
                                c.observed,
                                c.verdict.as_str(),
                                c.elapsed_ms
                            ));
                        }
                    }
                    out
                }
                Format::Text => {
                    let mut out = String::new();
                    for r in &results {
                        out.push_str(&format_suite_text(r));
                    }
                    out.push_str(&format!("total failures: {failures}"));
                    out
                }
            };
            emit(&common, &text)?;
            Ok(if failures == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn format_suite_text(r: &VerifySuiteResult) -> String {
    let mut out = format!("== {} ==\n", r.suite);
    for c in &r.checks {
        let line = match &c.verdict {
            CheckVerdict::Pass => format!("PASS {} [{}]", c.id, c.params),
            CheckVerdict::Fail => format!(
                "FAIL {} [{}] expected {} observed {}",
                c.id, c.params, c.expected, c.observed
            ),
            CheckVerdict::Skipped(reason) => format!("SKIP {} [{}] {}", c.id, c.params, reason),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// Bound mini-language: f(n,q), i(n,q), h(p,m), thmC(n,q,p).
fn eval_bound_expr(expr: &str) -> pcensus::Result<ExactBound> {
    let expr = expr.trim();
    let open = expr
        .find('(')
        .ok_or_else(|| Error::Parse { offset: expr.len(), msg: "expected '('".into() })?;
    if !expr.ends_with(')') {
        return Err(Error::Parse { offset: expr.len(), msg: "expected ')'".into() });
    }
    let head = &expr[..open];
    let args: Vec<u64> = expr[open + 1..expr.len() - 1]
        .split(',')
        .map(|a| {
            a.trim()
                .parse::<u64>()
                .map_err(|_| Error::Parse { offset: open + 1, msg: "expected a number".into() })
        })
        .collect::<pcensus::Result<_>>()?;
    match (head, args.as_slice()) {
        ("f", [n, q]) => f_bound(*n, *q),
        ("i", [n, q]) => i_bound(*n, *q),
        ("h", [p, m]) => Ok(h_p_int(*p, *m)),
        ("thmC", [n, q, p]) => Ok(ExactBound::from_integer(thm_c_bound(*n, *q, *p))),
        _ => Err(Error::Parse {
            offset: 0,
            msg: format!("unknown bound '{head}' or wrong arity {}", args.len()),
        }),
    }
}
