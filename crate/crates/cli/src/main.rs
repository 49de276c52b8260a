//! Command-line surface over the germ library.
//!
//! Every verb maps to one library operation (or a verification suite) and
//! emits either plain text or JSON (`--json`). Rationals are printed as
//! exact `p/q` strings, sets in the `PRE(REP)` literal grammar. Exit codes:
//! 0 on success, 1 on a domain error (message names the violated
//! precondition), 2 on usage errors.

use std::cmp::Ordering;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use germ_core::optimize::{optimize, SearchReport};
use germ_core::packing::{optimize_packing, PackingBody};
use germ_core::probe::{even_digit_count, numeric_probe};
use germ_core::rat::{format_rat, parse_rat, Rat};
use germ_core::set::RationalSet;
use germ_core::verify::{run_suite, Suite, SuiteReport};
use germ_core::words::{block_encode, greedy_avoiding, is_avoiding, DistanceSet};
use germ_core::{Error, Result};

#[derive(Parser)]
#[command(
    name = "germ",
    version,
    about = "Exact germ measurement of eventually periodic subsets of the naturals"
)]
struct Cli {
    /// Emit JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SearchBounds {
    /// Period bound for the cycle search (default: 2^max(D), capped).
    #[arg(long = "L")]
    period_bound: Option<u32>,
    /// Preperiod window for the prefix search (default: 4 * max(D)).
    #[arg(long = "W")]
    window: Option<u32>,
}

impl SearchBounds {
    /// Defaults: period bound 2^max(D), window 4*max(D), both capped so the
    /// default invocation stays within the search budget. Explicit flags
    /// override the caps; the budget still guards the search and reports
    /// exhaustion instead of truncating.
    fn resolve(&self, max_distance: u64) -> (u32, u32) {
        let l = self
            .period_bound
            .unwrap_or_else(|| (1u64 << max_distance.min(12)).min(4096) as u32);
        let w = self.window.unwrap_or((4 * max_distance).min(28) as u32);
        (l, w)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Laurent coefficients of a set's generating function at q = 1.
    Expand {
        /// Set literal in the PRE(REP) grammar.
        #[arg(long)]
        set: String,
        /// Last coefficient index to report (may be negative, down to the
        /// pole order).
        #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
        depth: i64,
    },
    /// Decide the germ-ordering of two sets.
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// The valuation (density, constant) of a set.
    Valuation {
        #[arg(long)]
        set: String,
    },
    /// Check whether a set avoids all the given differences.
    Avoid {
        #[arg(long)]
        set: String,
        /// Comma-separated forbidden differences.
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
    },
    /// Greedily construct an avoiding set.
    Greedy {
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
    },
    /// Block-encode a set as its window-letter word.
    Encode {
        #[arg(long)]
        set: String,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
    },
    /// Bounded search for the germ-maximal avoiding set.
    Optimize {
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u64>,
        #[command(flatten)]
        bounds: SearchBounds,
    },
    /// Reduce a packing body to differences and search for the densest
    /// packing.
    Pack {
        /// Comma-separated body elements.
        #[arg(long, value_delimiter = ',', required = true)]
        body: Vec<u64>,
        #[command(flatten)]
        bounds: SearchBounds,
    },
    /// Run seeded verification suites.
    Verify {
        /// Suite name (lemma5, lemma6, outpacing, valuation-range,
        /// theorem7, theorem8, oracle) or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 200)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Exact partial sums of the difference of two sets at given points.
    Probe {
        /// Set literal, or "even-digits" / "odd-digits".
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Comma-separated rational points in (0,1), e.g. 9/10,99/100.
        #[arg(long, value_delimiter = ',', required = true)]
        q: Vec<String>,
        #[arg(long, default_value_t = 10_000)]
        horizon: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command, cli.json) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn parse_set(text: &str) -> Result<RationalSet> {
    text.parse()
}

fn relation_name(r: Ordering) -> &'static str {
    match r {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn report_json(r: &SearchReport) -> Value {
    json!({
        "champion": r.champion.to_string(),
        "period_bound": r.period_bound,
        "preperiod_window": r.preperiod_window,
        "candidates_compared": r.candidates_compared,
        "swaps_examined": r.swaps_examined,
        "lemma6_pass": r.lemma6_pass,
        "caveat": r.caveat,
    })
}

fn print_report_text(r: &SearchReport) {
    println!("champion: {}", r.champion);
    println!("period bound: {}", r.period_bound);
    println!("preperiod window: {}", r.preperiod_window);
    println!("candidates compared: {}", r.candidates_compared);
    println!("swaps examined: {}", r.swaps_examined);
    println!("lemma6 pass: {}", r.lemma6_pass);
    println!("caveat: {}", r.caveat);
}

fn membership_predicate(text: &str) -> Result<Box<dyn Fn(u64) -> bool>> {
    match text {
        "even-digits" => Ok(Box::new(even_digit_count)),
        "odd-digits" => Ok(Box::new(|n| !even_digit_count(n))),
        literal => {
            let s = parse_set(literal)?;
            Ok(Box::new(move |n| s.contains(n)))
        }
    }
}

/// Returns Ok(false) for a clean run whose outcome is "verification
/// failed" (nonzero exit without an error message on stderr).
fn run(command: &Command, as_json: bool) -> Result<bool> {
    match command {
        Command::Expand { set, depth } => {
            let s = parse_set(set)?;
            let e = s.generating_function().laurent_at_one(*depth)?;
            let coeffs: Vec<String> = e.coeffs.iter().map(format_rat).collect();
            if as_json {
                println!("{}", json!({ "order": e.order, "coeffs": coeffs }));
            } else {
                println!("order: {}", e.order);
                println!("coeffs: {}", coeffs.join(" "));
            }
        }
        Command::Compare { a, b } => {
            let sa = parse_set(a)?;
            let sb = parse_set(b)?;
            let r = sa.germ_compare(&sb);
            if as_json {
                let mut v = json!({ "relation": relation_name(r.relation) });
                if let Some(w) = r.witness_order {
                    v["witness_order"] = json!(w);
                }
                if let Some(l) = &r.leading {
                    v["leading"] = json!(format_rat(l));
                }
                println!("{v}");
            } else {
                match (r.witness_order, &r.leading) {
                    (Some(w), Some(l)) => println!(
                        "{} (witness order {w}, leading {})",
                        relation_name(r.relation),
                        format_rat(l)
                    ),
                    _ => println!("{}", relation_name(r.relation)),
                }
            }
        }
        Command::Valuation { set } => {
            let v = parse_set(set)?.valuation();
            if as_json {
                println!(
                    "{}",
                    json!({
                        "density": format_rat(&v.density),
                        "constant": format_rat(&v.constant),
                    })
                );
            } else {
                println!(
                    "density {}, constant {}",
                    format_rat(&v.density),
                    format_rat(&v.constant)
                );
            }
        }
        Command::Avoid { set, d } => {
            let s = parse_set(set)?;
            let d = DistanceSet::new(d.iter().copied())?;
            let ok = is_avoiding(&s, &d);
            if as_json {
                println!("{}", json!({ "avoiding": ok }));
            } else {
                println!("{}", if ok { "avoiding" } else { "not avoiding" });
            }
        }
        Command::Greedy { d } => {
            let d = DistanceSet::new(d.iter().copied())?;
            let s = greedy_avoiding(&d);
            if as_json {
                println!("{}", json!({ "set": s.to_string() }));
            } else {
                println!("{s}");
            }
        }
        Command::Encode { set, d } => {
            let s = parse_set(set)?;
            let d = DistanceSet::new(d.iter().copied())?;
            let w = block_encode(&s, &d);
            let pre: Vec<u32> = w.pre().iter().map(|l| l.0).collect();
            let rep: Vec<u32> = w.rep().iter().map(|l| l.0).collect();
            if as_json {
                println!(
                    "{}",
                    json!({
                        "m": w.block_length(),
                        "legal": w.is_legal(&d),
                        "pre": pre,
                        "rep": rep,
                    })
                );
            } else {
                println!("m: {}", w.block_length());
                println!("legal: {}", w.is_legal(&d));
                let fmt = |ls: &[u32]| {
                    ls.iter()
                        .map(|c| c.to_string())
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                println!("pre: {}", fmt(&pre));
                println!("rep: {}", fmt(&rep));
            }
        }
        Command::Optimize { d, bounds } => {
            let d = DistanceSet::new(d.iter().copied())?;
            let (l, w) = bounds.resolve(d.max_distance());
            let report = optimize(&d, l, w)?;
            if as_json {
                println!("{}", report_json(&report));
            } else {
                print_report_text(&report);
            }
        }
        Command::Pack { body, bounds } => {
            let b = PackingBody::new(body.iter().copied())?;
            let max_d = b.max_element().max(1);
            let (l, w) = bounds.resolve(max_d);
            let outcome = optimize_packing(&b, l, w)?;
            if as_json {
                println!(
                    "{}",
                    json!({
                        "body": outcome.body.elements(),
                        "distances": outcome
                            .distances
                            .as_ref()
                            .map(|d| d.distances().to_vec()),
                        "report": report_json(&outcome.search),
                        "union_gf": outcome.union.to_string(),
                    })
                );
            } else {
                let ds = match &outcome.distances {
                    Some(d) => format!("{d}"),
                    None => "none (unconstrained)".to_string(),
                };
                println!("distances: {ds}");
                print_report_text(&outcome.search);
                println!("union gf: {}", outcome.union);
            }
        }
        Command::Verify {
            suite,
            trials,
            seed,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![Suite::parse(suite).ok_or_else(|| {
                    Error::InvalidWord(format!("unknown suite {suite:?}"))
                })?]
            };
            let mut reports: Vec<SuiteReport> = Vec::new();
            for s in suites {
                reports.push(run_suite(s, *trials, *seed)?);
            }
            let all_pass = reports.iter().all(SuiteReport::passed);
            if as_json {
                let entries: Vec<Value> = reports
                    .iter()
                    .map(|r| {
                        json!({
                            "name": r.name,
                            "trials": r.trials,
                            "failures": r.failures,
                            "pass": r.passed(),
                            "notes": r.notes,
                        })
                    })
                    .collect();
                println!("{}", json!({ "suites": entries, "pass": all_pass }));
            } else {
                for r in &reports {
                    println!(
                        "suite {}: {} ({} trials, {} failures)",
                        r.name,
                        if r.passed() { "pass" } else { "FAIL" },
                        r.trials,
                        r.failures
                    );
                }
            }
            return Ok(all_pass);
        }
        Command::Probe { a, b, q, horizon } => {
            let pa = membership_predicate(a)?;
            let pb = membership_predicate(b)?;
            let qs: Vec<Rat> = q
                .iter()
                .map(|t| {
                    let r = parse_rat(t)?;
                    if r <= Rat::from_integer(0.into()) || r >= Rat::from_integer(1.into()) {
                        return Err(Error::ParseRational(format!(
                            "{t} is not inside (0,1)"
                        )));
                    }
                    Ok(r)
                })
                .collect::<Result<_>>()?;
            let samples = numeric_probe(pa, pb, &qs, *horizon);
            if as_json {
                let entries: Vec<Value> = samples
                    .iter()
                    .map(|s| {
                        json!({
                            "q": format_rat(&s.q),
                            "partial": format_rat(&s.partial),
                            "tail_bound": format_rat(&s.tail_bound),
                        })
                    })
                    .collect();
                println!("{}", json!({ "horizon": horizon, "samples": entries }));
            } else {
                for s in &samples {
                    println!(
                        "q = {}: partial {} (tail bound {})",
                        format_rat(&s.q),
                        format_rat(&s.partial),
                        format_rat(&s.tail_bound)
                    );
                }
            }
        }
    }
    Ok(true)
}
