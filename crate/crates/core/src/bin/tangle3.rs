use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use tangle3::classify::{self, Options};
use tangle3::{dehn, golden, reducer, tracer, BraidWord, CurveLabel, Error, WeightVector};

/// Isotopy of rational 3-tangles given as words in s0..s5.
#[derive(Parser)]
#[command(name = "tangle3", version)]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Include reduction traces (also enabled by TANGLE3_TRACE=1).
    #[arg(long, global = true)]
    trace: bool,
    /// Decide all three curves and reject exactly two bounding ones.
    #[arg(long, global = true)]
    strict: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exit 0 when F(ε) and G(ε) are isotopic, 1 when not, 2 on error.
    Equiv { f: String, g: String },
    /// Weights of the image of a disk boundary.
    Weights {
        word: String,
        #[arg(long, default_value = "e2")]
        curve: CurveLabel,
    },
    /// Dehn parameters and pants weights of the image curve.
    Dehn {
        word: String,
        #[arg(long, default_value = "e2")]
        curve: CurveLabel,
    },
    /// Full reduction of the image curve.
    Reduce {
        word: String,
        #[arg(long, default_value = "e2")]
        curve: CurveLabel,
    },
    /// Free-group check of the image curve.
    Oracle {
        word: String,
        #[arg(long, default_value = "e2")]
        curve: CurveLabel,
    },
    /// Rewrite the word over s1..s4.
    Normalize { word: String },
    /// Replay the worked examples.
    Selftest,
}

fn parse(s: &str) -> Result<BraidWord, Error> {
    s.parse()
}

fn image(word: &str, curve: CurveLabel) -> Result<WeightVector, Error> {
    WeightVector::boundary(curve).apply_word(&parse(word)?)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json prints"));
}

fn run(cli: &Cli) -> Result<ExitCode, Error> {
    let trace = cli.trace || std::env::var("TANGLE3_TRACE").is_ok_and(|v| !v.is_empty() && v != "0");
    match &cli.cmd {
        Cmd::Equiv { f, g } => {
            let opts = Options { strict: cli.strict, trace };
            let report = classify::equivalent(&parse(f)?, &parse(g)?, opts)?;
            if cli.json {
                print_json(&report.to_json());
            } else {
                for c in &report.curves {
                    let v = &c.verdict;
                    println!("{}: {} ({})", c.curve, if c.bounds { "bounds" } else { "no disk" }, v.terminal);
                    for s in &v.trace {
                        println!(
                            "  {} [{}] p={:?} q={:?} -> p={:?} q'={:?}",
                            s.rule, s.case, s.p, s.q, s.p_after, s.qprime_after
                        );
                    }
                }
                println!("{}", report.overall);
            }
            Ok(ExitCode::from(if report.isotopic() { 0 } else { 1 }))
        }
        Cmd::Weights { word, curve } => {
            let w = image(word, *curve)?;
            if cli.json {
                print_json(&serde_json::to_value(w).expect("weights serialize"));
            } else {
                println!("{w}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Dehn { word, curve } => {
            let r = dehn::to_dehn(&image(word, *curve)?)?;
            if cli.json {
                print_json(&r.to_json());
            } else {
                println!("(p,q,t) = {:?}", r.params.nine());
                println!("x = {:?}", r.pants.to_map());
                if r.rotation != 0 {
                    println!("rotated by {} steps", r.rotation);
                }
                if let Some(b) = r.params.boundary {
                    println!("boundary of {b}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Reduce { word, curve } => {
            let v = reducer::decide_bounds_disk(&image(word, *curve)?)?;
            if cli.json {
                print_json(&serde_json::to_value(&v).expect("verdict serializes"));
            } else {
                if let Some(s) = v.start {
                    println!("start p={:?} q={:?}", s.p, s.q);
                }
                for s in &v.trace {
                    println!(
                        "{} [{}] p={:?} q={:?} -> p={:?} q'={:?}",
                        s.rule, s.case, s.p, s.q, s.p_after, s.qprime_after
                    );
                    if trace {
                        println!("  m = {}", serde_json::to_string(&s.m).expect("weights serialize"));
                    }
                }
                println!("{}: {}", if v.bounds() { "bounds" } else { "no disk" }, v.terminal);
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Oracle { word, curve } => {
            let w = image(word, *curve)?;
            let comps = tracer::trace(&w)?;
            let words: Vec<String> = comps.iter().map(|c| tracer::pi1_word(c).to_string()).collect();
            let bounds = tracer::oracle_bounds_disk(&w)?;
            if cli.json {
                let mut v = json!({ "components": comps.len(), "pi1": words, "bounds": bounds });
                if trace {
                    v["trace"] = tracer::dump_json(&comps);
                }
                print_json(&v);
            } else {
                println!("pi1 = {}", words.join(", "));
                if trace {
                    println!("{}", tracer::dump_json(&comps));
                }
                println!("{}", if bounds { "bounds" } else { "no disk" });
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Normalize { word } => {
            let n = parse(word)?.normalize_to_b5();
            if cli.json {
                print_json(&json!({ "word": word, "normalized": n.to_string() }));
            } else {
                println!("{n}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Selftest => selftest(cli.json),
    }
}

fn selftest(as_json: bool) -> Result<ExitCode, Error> {
    let mut results: Vec<(String, bool)> =
        golden::check_all()?.into_iter().map(|(n, ok)| (n.to_string(), ok)).collect();
    let alpha = WeightVector::boundary(CurveLabel::E2).apply_word(&golden::example_word())?;
    results.push(("alpha has no disk".into(), !reducer::decide_bounds_disk(&alpha)?.bounds()));
    let beta = alpha.apply_word(&golden::reversed_word().invert())?;
    results.push(("beta has no disk".into(), !reducer::decide_bounds_disk(&beta)?.bounds()));
    let opts = Options::default();
    let t = classify::equivalent(&golden::example_word(), &BraidWord::empty(), opts)?;
    results.push(("T vs trivial".into(), !t.isotopic()));
    let t = classify::equivalent(&golden::example_word(), &golden::reversed_word(), opts)?;
    results.push(("T vs mirror".into(), !t.isotopic()));
    let all = results.iter().all(|r| r.1);
    if as_json {
        let map: serde_json::Map<String, serde_json::Value> =
            results.iter().map(|(n, ok)| (n.clone(), json!(ok))).collect();
        print_json(&json!({ "checks": map, "ok": all }));
    } else {
        for (n, ok) in &results {
            println!("{} {n}", if *ok { "ok  " } else { "FAIL" });
        }
    }
    Ok(ExitCode::from(if all { 0 } else { 1 }))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
