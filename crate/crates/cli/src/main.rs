//! `riordan` — exact computations with Riordan arrays, their interleaved
//! sub-arrays, production matrices, continued fractions and moment
//! matrices, on the command line.
//!
//! Every command is a thin adapter over the library: parse arguments,
//! call one library operation, render the result in the selected format.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 invariant violation, 4 embeddability failure, 5 I/O or network.

use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use riordan_core::cfrac::{contract_even, contract_odd, JFraction, SFraction};
use riordan_core::embedding;
use riordan_core::epseq::EpSeq;
use riordan_core::gfparse;
use riordan_core::oeis::{LookupResult, OeisClient, SequenceQuery};
use riordan_core::orthopoly::{check_moment_cf, InterleavedFamily, Recurrence};
use riordan_core::prodmat::{production_of, BidiagonalSpec, ProductionMatrix};
use riordan_core::rational::{parse_rat, rat_to_string, Int, Rat};
use riordan_core::verify;
use riordan_core::{Error, Result, RiordanArray, Series, Triangle};

#[derive(Parser)]
#[command(
    name = "riordan",
    version,
    about = "Exact Riordan array, production matrix and moment matrix toolkit",
    propagate_version = true
)]
struct Cli {
    /// Number of series coefficients carried through every computation.
    #[arg(long, global = true, default_value_t = 32)]
    order: usize,

    /// Number of triangle rows to compute and display.
    #[arg(long, global = true, default_value_t = 8)]
    rows: usize,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Never touch the network; answer lookups from the local cache only.
    #[arg(long, global = true)]
    offline: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the triangle of the array (g, f).
    Show {
        /// Generating function of column 0, e.g. "1/(1-x)" or "c".
        g: String,
        /// Column multiplier series with f(0) = 0, e.g. "x/(1-x)".
        f: String,
    },
    /// Split (g, f) into the two sub-arrays its columns interleave.
    Decompose { g: String, f: String },
    /// Find the array whose even-position columns form (g, f).
    Embed { g: String, f: String },
    /// Repeatedly split the even-column branch.
    Cascade {
        g: String,
        f: String,
        /// How many times to split.
        #[arg(long, default_value_t = 2)]
        depth: usize,
    },
    /// Production matrix of the array (g, f).
    Prodmat { g: String, f: String },
    /// Generate a triangle from a production matrix (JSON file, or '-' for stdin).
    Genfrom { path: String },
    /// Triangle grown from an inverted bidiagonal matrix with the given
    /// subdiagonal weights.
    Bidiag {
        /// Repeating part of the weight sequence, e.g. 2,3.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        period: Vec<String>,
        /// Weights used before the repetition starts.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pre: Option<Vec<String>>,
        /// Print the production matrix instead of the triangle.
        #[arg(long)]
        production: bool,
    },
    /// Expand a continued fraction into a series.
    Cfrac {
        /// Stieltjes weights a1, a2, ... as "period" or "pre:period".
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Jacobi diagonal b0, b1, ... as "period" or "pre:period".
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        /// Jacobi sub-diagonal c1, c2, ... as "period" or "pre:period".
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
    },
    /// Contract a Stieltjes fraction to its even and odd Jacobi forms.
    Contract {
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        period: Vec<String>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        pre: Option<Vec<String>>,
    },
    /// Orthogonal-polynomial families from a three-term recurrence.
    Orthopoly {
        #[command(subcommand)]
        cmd: Orthopoly,
    },
    /// Look up a sequence in the On-Line Encyclopedia of Integer Sequences.
    Oeis {
        /// Comma-separated integer terms, e.g. 1,1,2,5,14,42.
        terms: String,
        /// Maximum number of results to print.
        #[arg(long, default_value_t = 5)]
        max: usize,
    },
    /// Recompute every worked example and report pass/fail per check.
    VerifyPaper,
}

#[derive(Subcommand)]
enum Orthopoly {
    /// Coefficient rows of the polynomial family.
    Polys {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Constant term of the degree-1 polynomial (x + p1).
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
    },
    /// Moment matrix: the inverse of the coefficient array.
    Moments {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
    },
    /// Moment matrix of the family interleaving two recurrences.
    Interleaved {
        #[arg(long = "p-b", allow_hyphen_values = true)]
        p_b: String,
        #[arg(long = "p-c", allow_hyphen_values = true)]
        p_c: String,
        #[arg(long = "p-p1", allow_hyphen_values = true)]
        p_p1: String,
        #[arg(long = "q-b", allow_hyphen_values = true)]
        q_b: String,
        #[arg(long = "q-c", allow_hyphen_values = true)]
        q_c: String,
        #[arg(long = "q-p1", allow_hyphen_values = true)]
        q_p1: String,
    },
    /// Compare the recurrence's moments with its Jacobi continued fraction.
    Check {
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long, allow_hyphen_values = true)]
        p1: String,
    },
}

fn main() -> ExitCode {
    // Die quietly when the consumer of a pipe goes away (`riordan ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } => 2,
        Error::NotEmbeddable { .. } => 4,
        Error::NetworkUnavailable(_) | Error::MalformedResponse(_) | Error::Io(_) => 5,
        _ => 3,
    }
}

fn run(cli: &Cli) -> Result<u8> {
    if cli.order < cli.rows {
        return Err(Error::InvalidRiordanPair(format!(
            "order ({}) must be at least rows ({})",
            cli.order, cli.rows
        )));
    }
    if cli.rows == 0 || cli.order == 0 {
        return Err(Error::InvalidRiordanPair(
            "order and rows must be positive".into(),
        ));
    }
    let order = cli.order;
    let rows = cli.rows;
    let fmt = cli.format;

    match &cli.command {
        Command::Show { g, f } => {
            let r = parse_pair(g, f, order)?;
            println!("{}", triangle_string(&r.triangle(rows)?, fmt));
        }
        Command::Decompose { g, f } => {
            let r = parse_pair(g, f, order)?;
            let d = embedding::decompose(&r)?;
            print_parts(&[("a", &d.a), ("b", &d.b)], rows, fmt)?;
        }
        Command::Embed { g, f } => {
            let a = parse_pair(g, f, order)?;
            let parent = embedding::embed(&a)?;
            print_parts(&[("parent", &parent)], rows, fmt)?;
        }
        Command::Cascade { g, f, depth } => {
            let r = parse_pair(g, f, order)?;
            let nodes = embedding::cascade(&r, *depth)?;
            let mut parts: Vec<(String, &RiordanArray)> = Vec::new();
            for node in &nodes {
                parts.push((format!("depth{}.a", node.depth), &node.a));
                parts.push((format!("depth{}.b", node.depth), &node.b));
            }
            let borrowed: Vec<(&str, &RiordanArray)> =
                parts.iter().map(|(n, r)| (n.as_str(), *r)).collect();
            print_parts(&borrowed, rows, fmt)?;
        }
        Command::Prodmat { g, f } => {
            let r = parse_pair(g, f, order)?;
            let p = production_of(&r.triangle(rows + 1)?)?;
            println!("{}", production_string(&p, fmt));
        }
        Command::Genfrom { path } => {
            let text = if path == "-" {
                let mut buf = String::new();
                std::io::stdin().read_to_string(&mut buf)?;
                buf
            } else {
                std::fs::read_to_string(path)?
            };
            let p = ProductionMatrix::from_json(&text)?;
            println!("{}", triangle_string(&p.generate(rows)?, fmt));
        }
        Command::Bidiag {
            period,
            pre,
            production,
        } => {
            let spec = BidiagonalSpec::new(seq_from_lists(pre.as_deref(), period)?)?;
            if *production {
                println!("{}", production_string(&spec.production(rows)?, fmt));
            } else {
                println!("{}", triangle_string(&spec.array(rows)?, fmt));
            }
        }
        Command::Cfrac { a, b, c } => {
            let series = match (a, b, c) {
                (Some(a), None, None) => SFraction::new(parse_seq(a)?)?.series(order),
                (None, Some(b), Some(c)) => {
                    JFraction::new(parse_seq(b)?, parse_seq(c)?).series(order)
                }
                _ => {
                    return Err(Error::Syntax {
                        offset: 0,
                        expected: vec!["--a alone".into(), "--b together with --c".into()],
                        found: "another flag combination".into(),
                    })
                }
            };
            print_series("series", &series, fmt);
        }
        Command::Contract { period, pre } => {
            let s = SFraction::new(seq_from_lists(pre.as_deref(), period)?)?;
            let even = contract_even(&s);
            let odd = contract_odd(&s);
            match fmt {
                Format::Text => {
                    println!("even.b: {}", even.b());
                    println!("even.c: {}", even.c());
                    println!("odd.b:  {}", odd.b());
                    println!("odd.c:  {}", odd.c());
                }
                Format::Csv => {
                    println!("even.b,\"{}\"", even.b());
                    println!("even.c,\"{}\"", even.c());
                    println!("odd.b,\"{}\"", odd.b());
                    println!("odd.c,\"{}\"", odd.c());
                }
                Format::Json => {
                    let v = serde_json::json!({
                        "even": {"b": even.b().to_string(), "c": even.c().to_string()},
                        "odd": {"b": odd.b().to_string(), "c": odd.c().to_string()},
                    });
                    println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
                }
            }
        }
        Command::Orthopoly { cmd } => return run_orthopoly(cmd, order, rows, fmt),
        Command::Oeis { terms, max } => {
            let parsed: Vec<Int> = terms
                .split(',')
                .map(|t| {
                    t.trim().parse::<Int>().map_err(|_| Error::Syntax {
                        offset: 0,
                        expected: vec!["comma-separated integers".into()],
                        found: t.to_string(),
                    })
                })
                .collect::<Result<_>>()?;
            let q = SequenceQuery::new(parsed, *max)?;
            let results = OeisClient::new(cli.offline).lookup(&q)?;
            print_lookup(&results, fmt);
        }
        Command::VerifyPaper => {
            let report = verify::run_all(order);
            match fmt {
                Format::Json => println!("{}", report.to_json()),
                _ => print!("{}", report.to_text()),
            }
            return Ok(if report.all_pass() { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn run_orthopoly(cmd: &Orthopoly, order: usize, rows: usize, fmt: Format) -> Result<u8> {
    match cmd {
        Orthopoly::Polys { b, c, p1 } => {
            let rec = Recurrence::new(parse_seq(b)?, parse_seq(c)?, parse_rat_flag(p1)?);
            println!("{}", triangle_string(&rec.polynomials(rows), fmt));
        }
        Orthopoly::Moments { b, c, p1 } => {
            let rec = Recurrence::new(parse_seq(b)?, parse_seq(c)?, parse_rat_flag(p1)?);
            println!("{}", triangle_string(&rec.moment_matrix(rows)?, fmt));
        }
        Orthopoly::Interleaved {
            p_b,
            p_c,
            p_p1,
            q_b,
            q_c,
            q_p1,
        } => {
            let p = Recurrence::new(parse_seq(p_b)?, parse_seq(p_c)?, parse_rat_flag(p_p1)?);
            let q = Recurrence::new(parse_seq(q_b)?, parse_seq(q_c)?, parse_rat_flag(q_p1)?);
            let fam = InterleavedFamily::new(p, q);
            if !fam.shares_tail() {
                eprintln!(
                    "warning: the two recurrences do not share a tail; the interleaved \
                     family is still computed"
                );
            }
            println!("{}", triangle_string(&fam.moment_matrix(rows)?, fmt));
        }
        Orthopoly::Check { b, c, p1 } => {
            let bs = parse_seq(b)?;
            let cs = parse_seq(c)?;
            let rec = Recurrence::new(bs.clone(), cs.clone(), parse_rat_flag(p1)?);
            let j = JFraction::new(bs, cs);
            let ok = check_moment_cf(&rec, &j, order)?;
            match fmt {
                Format::Json => println!("{{\"match\": {ok}}}"),
                _ => println!("match: {ok}"),
            }
            if !ok {
                // Disagreement exits through the verification-failure code.
                return Ok(1);
            }
        }
    }
    Ok(0)
}

// ---- argument parsing helpers --------------------------------------------

fn parse_series(text: &str, order: usize) -> Result<Series> {
    gfparse::eval(&gfparse::parse(text)?, order)
}

fn parse_pair(g: &str, f: &str, order: usize) -> Result<RiordanArray> {
    RiordanArray::new(parse_series(g, order)?, parse_series(f, order)?)
}

fn parse_rat_flag(text: &str) -> Result<Rat> {
    parse_rat(text.trim()).ok_or_else(|| Error::Syntax {
        offset: 0,
        expected: vec!["integer or fraction".into()],
        found: text.to_string(),
    })
}

/// An eventually periodic sequence written as "period" or "pre:period",
/// each part a comma-separated list of integers or fractions.
fn parse_seq(text: &str) -> Result<EpSeq<Rat>> {
    let (pre, period) = match text.split_once(':') {
        Some((pre, period)) => (pre, period),
        None => ("", text),
    };
    EpSeq::new(parse_list(pre)?, parse_list(period)?)
}

fn parse_list(text: &str) -> Result<Vec<Rat>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(|t| parse_rat_flag(t)).collect()
}

fn seq_from_lists(pre: Option<&[String]>, period: &[String]) -> Result<EpSeq<Rat>> {
    let pre = pre
        .unwrap_or(&[])
        .iter()
        .map(|t| parse_rat_flag(t))
        .collect::<Result<Vec<_>>>()?;
    let period = period
        .iter()
        .map(|t| parse_rat_flag(t))
        .collect::<Result<Vec<_>>>()?;
    EpSeq::new(pre, period)
}

// ---- rendering ------------------------------------------------------------

fn triangle_string(t: &Triangle, fmt: Format) -> String {
    let s = match fmt {
        Format::Text => t.to_text(),
        Format::Csv => t.to_csv(),
        Format::Json => t.to_json(),
    };
    s.trim_end_matches('\n').to_string()
}

fn production_string(p: &ProductionMatrix, fmt: Format) -> String {
    let s = match fmt {
        Format::Text => p.to_text(),
        Format::Csv => p.to_csv(),
        Format::Json => p.to_json(),
    };
    s.trim_end_matches('\n').to_string()
}

fn series_cells(s: &Series) -> Vec<String> {
    s.coeffs().iter().map(rat_to_string).collect()
}

fn print_series(label: &str, s: &Series, fmt: Format) {
    match fmt {
        Format::Text => println!("{}", series_cells(s).join(", ")),
        Format::Csv => println!("{},{}", label, series_cells(s).join(",")),
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&series_cells(s)).expect("serializes")
            )
        }
    }
}

fn triangle_value(t: &Triangle) -> serde_json::Value {
    serde_json::Value::Array(
        t.rows()
            .iter()
            .map(|row| {
                serde_json::Value::Array(
                    row.iter()
                        .map(|r| serde_json::Value::String(rat_to_string(r)))
                        .collect(),
                )
            })
            .collect(),
    )
}

/// Print named (g, f) pairs with their series prefixes and triangles.
fn print_parts(parts: &[(&str, &RiordanArray)], rows: usize, fmt: Format) -> Result<()> {
    match fmt {
        Format::Text => {
            for (i, (name, r)) in parts.iter().enumerate() {
                if i > 0 {
                    println!();
                }
                println!("{name}.g: {}", r.g().truncate(rows.min(r.order())));
                println!("{name}.f: {}", r.f().truncate(rows.min(r.order())));
                println!("{name}:");
                print!("{}", r.triangle(rows)?.to_text());
            }
        }
        Format::Csv => {
            for (name, r) in parts {
                let g = series_cells(&r.g().truncate(rows.min(r.order())));
                let f = series_cells(&r.f().truncate(rows.min(r.order())));
                println!("{name}.g,{}", g.join(","));
                println!("{name}.f,{}", f.join(","));
                for (i, row) in r.triangle(rows)?.rows().iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(rat_to_string).collect();
                    println!("{name}.row{i},{}", cells.join(","));
                }
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            for (name, r) in parts {
                let entry = serde_json::json!({
                    "g": series_cells(&r.g().truncate(rows.min(r.order()))),
                    "f": series_cells(&r.f().truncate(rows.min(r.order()))),
                    "triangle": triangle_value(&r.triangle(rows)?),
                });
                map.insert(name.to_string(), entry);
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(map))
                    .expect("serializes")
            );
        }
    }
    Ok(())
}

fn print_lookup(results: &[LookupResult], fmt: Format) {
    match fmt {
        Format::Text => {
            if results.is_empty() {
                println!("no matches");
            }
            for r in results {
                println!("{}  matched {:>2}  {}", r.id, r.matched_prefix_length, r.name);
            }
        }
        Format::Csv => {
            println!("id,matched_prefix_length,name");
            for r in results {
                println!(
                    "{},{},\"{}\"",
                    r.id,
                    r.matched_prefix_length,
                    r.name.replace('"', "\"\"")
                );
            }
        }
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(results).expect("serializes")
            );
        }
    }
}
