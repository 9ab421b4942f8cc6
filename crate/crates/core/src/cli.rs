//! Command-line front end.
//!
//! Four subcommands: `gen` prints a list one word per line, `count` prints
//! a cardinality, `verify` cross-checks a parameter point against the
//! brute-force oracle and prints PASS/FAIL per property, and `bench`
//! sweeps a generator and tabulates exact work counters.
//!
//! Exit codes: 0 success, 1 property or write failure, 2 usage or
//! parameter error, 3 capacity exceeded.

use std::io::{self, Write};
use std::ops::ControlFlow;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::crossbifix::{
    build_h_list_with_cap, build_s_list_with_cap, count_s, cross_bifix_counterexample,
    stream_h, stream_s, trace_partition,
};
use crate::error::Error;
use crate::expand::{expand_list_with_cap, ExpandState};
use crate::fib::{build_c_list_with_cap, build_f_list_with_cap, fib_count, stream_c, stream_f};
use crate::gray::{build_gray_list_with_cap, GrayOdometer};
use crate::oracle::{brute_force_s_with_bound, measure_cat, verify_gray, CatTarget};
use crate::word::{hamming, prepend, trace_of, Symbol, Word};
use crate::DEFAULT_WORD_CAP;

const EXIT_OK: i32 = 0;
const EXIT_FAILURE: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_CAPACITY: i32 = 3;

#[derive(Parser)]
#[command(
    name = "xbifix",
    about = "Cross-bifix-free codeword sets: generation, counting, verification, benchmarking",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a word list, one word per line
    Gen(GenArgs),
    /// Print the number of codewords for (n, q, k)
    Count(ParamArgs),
    /// Cross-check one parameter point against brute force
    Verify(VerifyArgs),
    /// Sweep a generator and tabulate exact work counters
    Bench(BenchArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListKind {
    /// The cross-bifix-free list (needs n, q, k)
    S,
    /// Binary words avoiding k consecutive zeros (needs n, k)
    F,
    /// Words that begin and end nonzero, avoiding k zeros (needs n, q, k)
    H,
    /// The unrestricted binary reflected list (needs n)
    C,
    /// The reflected list over {1,...,q-1} (needs n, q)
    G,
    /// The expansion of a binary trace (needs trace, q)
    Expansion,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    /// Contiguous decimal digits (q <= 10 only)
    Digits,
    /// Comma-separated symbol values
    Csv,
}

#[derive(Args)]
struct GenArgs {
    /// Which list to print
    #[arg(long, value_enum)]
    list: ListKind,
    /// Word length (the position count for --list g)
    #[arg(long)]
    n: Option<usize>,
    /// Alphabet size
    #[arg(long)]
    q: Option<u32>,
    /// Zero-run bound
    #[arg(long)]
    k: Option<usize>,
    /// Binary trace for --list expansion, e.g. 01011
    #[arg(long)]
    trace: Option<String>,
    #[arg(long, value_enum, default_value = "digits")]
    format: OutputFormat,
    /// Generate lazily instead of materializing (same output bytes)
    #[arg(long)]
    stream: bool,
    /// Word cap for materialized lists
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Args)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    k: usize,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    k: usize,
    /// Run the pairwise prefix/suffix scan on all cores
    #[arg(long)]
    parallel: bool,
    /// Budget for materialized lists and brute-force enumeration
    #[arg(long)]
    cap: Option<u64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
enum BenchTarget {
    /// Reflected-list odometer (needs q; sweep over word lengths)
    GenTuple,
    /// Binary transition recursion (needs k; sweep over lengths)
    GenFib,
    /// Full streaming generator (needs q and k; sweep over lengths)
    StreamS,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_enum)]
    target: BenchTarget,
    #[arg(long)]
    q: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    /// Sizes to sweep: comma-separated values and inclusive ranges, e.g. 1..8 or 10,15,20
    #[arg(long)]
    sweep: Sweep,
    /// Per-point word budget (default 2^20)
    #[arg(long)]
    cap: Option<u64>,
}

/// Sweep specification: comma-separated integers and inclusive `a..b` ranges.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Sweep(Vec<usize>);

impl FromStr for Sweep {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, String> {
        let mut sizes = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            if let Some((lo, hi)) = token.split_once("..") {
                let lo: usize = lo.trim().parse().map_err(|_| bad_sweep(token))?;
                let hi: usize = hi.trim().parse().map_err(|_| bad_sweep(token))?;
                if lo > hi {
                    return Err(bad_sweep(token));
                }
                sizes.extend(lo..=hi);
            } else {
                sizes.push(token.parse().map_err(|_| bad_sweep(token))?);
            }
        }
        if sizes.is_empty() {
            return Err("empty sweep".into());
        }
        Ok(Sweep(sizes))
    }
}

fn bad_sweep(token: &str) -> String {
    format!("invalid sweep element '{token}' (expected an integer or a..b)")
}

/// Parse and dispatch; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Gen(args) => cmd_gen(&args),
        Command::Count(args) => cmd_count(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Bench(args) => cmd_bench(&args),
    }
}

fn error_exit(err: &Error) -> i32 {
    eprintln!("error: {err}");
    match err {
        Error::Capacity(_) => EXIT_CAPACITY,
        _ => EXIT_USAGE,
    }
}

fn usage_exit(message: &str) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn render_word(w: &[Symbol], format: OutputFormat) -> String {
    match format {
        OutputFormat::Digits => w.iter().map(|&s| char::from(b'0' + s)).collect(),
        OutputFormat::Csv => {
            let parts: Vec<String> = w.iter().map(|s| s.to_string()).collect();
            parts.join(",")
        }
    }
}

fn parse_trace(text: &str) -> Result<Word, String> {
    let mut out = Word::with_capacity(text.len());
    for c in text.chars() {
        match c {
            '0' => out.push(0),
            '1' => out.push(1),
            _ => return Err(format!("trace must be a string of 0s and 1s, got '{text}'")),
        }
    }
    Ok(out)
}

/// Writes words as lines, converting I/O errors into an early stop.
struct LineSink<W: Write> {
    out: W,
    format: OutputFormat,
    error: Option<io::Error>,
}

impl<W: Write> LineSink<W> {
    fn new(out: W, format: OutputFormat) -> Self {
        LineSink {
            out,
            format,
            error: None,
        }
    }

    fn write(&mut self, w: &[Symbol]) -> ControlFlow<()> {
        if let Err(e) = writeln!(self.out, "{}", render_word(w, self.format)) {
            self.error = Some(e);
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    }

    /// Final exit code contribution: broken pipes are a normal way for a
    /// consumer to stop reading.
    fn finish(mut self) -> i32 {
        if self.error.is_none() {
            if let Err(e) = self.out.flush() {
                self.error = Some(e);
            }
        }
        match self.error {
            None => EXIT_OK,
            Some(e) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
            Some(e) => {
                eprintln!("error: failed to write output: {e}");
                EXIT_FAILURE
            }
        }
    }
}

fn cmd_gen(args: &GenArgs) -> i32 {
    let cap = args.cap.unwrap_or(DEFAULT_WORD_CAP);
    let stdout = io::stdout();
    let mut sink = LineSink::new(io::BufWriter::new(stdout.lock()), args.format);

    macro_rules! require {
        ($field:ident) => {
            match args.$field {
                Some(value) => value,
                None => {
                    return usage_exit(concat!(
                        "--",
                        stringify!($field),
                        " is required for this list"
                    ))
                }
            }
        };
    }

    // digits rendering only works for single-digit symbols
    let effective_q = match args.list {
        ListKind::C | ListKind::F => 2,
        _ => match args.q {
            Some(q) => q,
            None => return usage_exit("--q is required for this list"),
        },
    };
    if args.format == OutputFormat::Digits && effective_q > 10 {
        return usage_exit("digits format supports q <= 10; pass --format csv");
    }

    let outcome: Result<(), Error> = match args.list {
        ListKind::S => {
            let (n, q, k) = (require!(n), require!(q), require!(k));
            if args.stream {
                stream_s(n, q, k, &mut |w| sink.write(w)).map(|_| ())
            } else {
                build_s_list_with_cap(n, q, k, cap).map(|list| {
                    emit_all(&mut sink, &list);
                })
            }
        }
        ListKind::H => {
            let (n, q, k) = (require!(n), require!(q), require!(k));
            if args.stream {
                stream_h(n, q, k, &mut |w| sink.write(w)).map(|_| ())
            } else {
                build_h_list_with_cap(n, q, k, cap).map(|list| {
                    emit_all(&mut sink, &list);
                })
            }
        }
        ListKind::F => {
            let (n, k) = (require!(n), require!(k));
            if args.stream {
                stream_f(n, k, &mut |w| sink.write(w)).map(|_| ())
            } else {
                build_f_list_with_cap(n, k, cap).map(|list| {
                    emit_all(&mut sink, &list);
                })
            }
        }
        ListKind::C => {
            let n = require!(n);
            if args.stream {
                stream_c(n, &mut |w| sink.write(w)).map(|_| ())
            } else {
                build_c_list_with_cap(n, cap).map(|list| {
                    emit_all(&mut sink, &list);
                })
            }
        }
        ListKind::G => {
            let (t, q) = (require!(n), require!(q));
            if q < 3 {
                return usage_exit("the reflected list requires q >= 3");
            }
            if args.stream {
                if t == 0 {
                    // the odometer needs a position; the length-0 list is
                    // the single empty word
                    let _ = sink.write(&[]);
                    Ok(())
                } else {
                    GrayOdometer::new(t, q).map(|odometer| {
                        for word in odometer {
                            if sink.write(&word).is_break() {
                                break;
                            }
                        }
                    })
                }
            } else {
                build_gray_list_with_cap(t, q, cap).map(|list| {
                    emit_all(&mut sink, &list);
                })
            }
        }
        ListKind::Expansion => {
            let q = require!(q);
            let trace = match &args.trace {
                Some(text) => match parse_trace(text) {
                    Ok(trace) => trace,
                    Err(message) => return usage_exit(&message),
                },
                None => return usage_exit("--trace is required for --list expansion"),
            };
            if q < 3 {
                return usage_exit("expansion requires q >= 3");
            }
            if args.stream {
                ExpandState::new(trace, 0, q).map(|mut state| {
                    let _ = state.expand_run(&mut |w| sink.write(w));
                })
            } else {
                expand_list_with_cap(&trace, q, cap).map(|list| {
                    emit_all(&mut sink, &list);
                })
            }
        }
    };

    match outcome {
        Ok(()) => sink.finish(),
        Err(err) => error_exit(&err),
    }
}

fn emit_all<W: Write>(sink: &mut LineSink<W>, list: &[Word]) {
    for word in list {
        if sink.write(word).is_break() {
            break;
        }
    }
}

fn cmd_count(args: &ParamArgs) -> i32 {
    match count_s(args.n, args.q, args.k) {
        Ok(count) => {
            println!("{count}");
            EXIT_OK
        }
        Err(err) => error_exit(&err),
    }
}

fn cmd_verify(args: &VerifyArgs) -> i32 {
    match verify_point(args) {
        Ok(all_pass) => {
            if all_pass {
                EXIT_OK
            } else {
                EXIT_FAILURE
            }
        }
        Err(err) => error_exit(&err),
    }
}

fn verify_point(args: &VerifyArgs) -> Result<bool, Error> {
    let (n, q, k) = (args.n, args.q, args.k);
    let cap = args.cap.unwrap_or(crate::oracle::DEFAULT_ENUM_BOUND);
    let list = build_s_list_with_cap(n, q, k, cap)?;
    let brute = brute_force_s_with_bound(n, q, k, cap)?;
    let mut all_pass = true;
    let mut report = |name: &str, ok: bool| {
        println!("{name}: {}", if ok { "PASS" } else { "FAIL" });
        all_pass &= ok;
    };

    let as_set: std::collections::BTreeSet<Word> = list.iter().cloned().collect();
    let count_ok = BigUint::from(list.len()) == count_s(n, q, k)?
        && as_set.len() == list.len();
    report("set-equivalence", as_set == brute && count_ok);

    let gray = verify_gray(&list);
    let unit_steps = list.windows(2).all(|pair| {
        let a = &pair[0];
        let b = &pair[1];
        if trace_of(a) != trace_of(b) {
            return true;
        }
        (0..a.len()).all(|i| a[i] == b[i] || (a[i] as i32 - b[i] as i32).abs() == 1)
    });
    report("gray-adjacency", gray.ok && unit_steps);

    let counterexample = cross_bifix_counterexample(&list, args.parallel)?;
    if let Some(ce) = &counterexample {
        eprintln!(
            "prefix/suffix collision: words {} and {}, length {}",
            ce.i, ce.j, ce.prefix_len
        );
    }
    report("cross-bifix-freeness", counterexample.is_none());

    let partition = trace_partition(&list);
    let expected_traces = {
        let mut framed = prepend(&[1], crate::fib::build_f_list_with_cap(n - k - 2, k, cap)?);
        framed = crate::word::append(framed, &[1]);
        prepend(&vec![0; k], framed)
    };
    let block_count_ok =
        BigUint::from(partition.block_count) == fib_count(n - k - 2, k)?;
    let sizes_ok = partition
        .block_traces
        .iter()
        .zip(&partition.block_sizes)
        .all(|(trace, &size)| {
            let ones = trace.iter().filter(|&&s| s != 0).count();
            size == (q as usize - 1).pow(ones as u32)
        });
    let seams_ok = partition
        .block_traces
        .windows(2)
        .all(|pair| matches!(hamming(&pair[0], &pair[1]), Ok(1)));
    report(
        "trace-partition",
        block_count_ok && sizes_ok && seams_ok && partition.block_traces == expected_traces,
    );

    Ok(all_pass)
}

fn cmd_bench(args: &BenchArgs) -> i32 {
    let target = match args.target {
        BenchTarget::GenTuple => match args.q {
            Some(q) => CatTarget::GenTuple { q },
            None => return usage_exit("--q is required for gen_tuple"),
        },
        BenchTarget::GenFib => match args.k {
            Some(k) => CatTarget::GenFib { k },
            None => return usage_exit("--k is required for gen_fib"),
        },
        BenchTarget::StreamS => match (args.q, args.k) {
            (Some(q), Some(k)) => CatTarget::StreamS { q, k },
            _ => return usage_exit("--q and --k are required for stream_s"),
        },
    };
    let budget = args.cap.unwrap_or(1 << 20);
    let points = match measure_cat(target, &args.sweep.0, Some(budget)) {
        Ok(points) => points,
        Err(err) => return error_exit(&err),
    };

    let odometer = matches!(target, CatTarget::GenTuple { .. });
    if odometer {
        println!(
            "{:>4} {:>12} {:>12} {:>10} {:>14} {:>8}",
            "t", "words", "steps", "steps/word", "expected", "check"
        );
    } else {
        println!(
            "{:>4} {:>12} {:>12} {:>10} {:>10} {:>10} {:>10}",
            "n", "words", "steps", "steps/word", "calls", "walk", "links"
        );
    }
    for point in points {
        let r = &point.report;
        if odometer {
            let expected = point.expected_inner.expect("odometer rows carry the model");
            let check = if !point.completed {
                "PARTIAL"
            } else if BigUint::from(r.inner_steps()) == expected {
                "EXACT"
            } else {
                "MISMATCH"
            };
            println!(
                "{:>4} {:>12} {:>12} {:>10.4} {:>14} {:>8}",
                point.size,
                r.words_emitted,
                r.inner_steps(),
                r.steps_per_word(),
                expected,
                check
            );
        } else {
            println!(
                "{:>4} {:>12} {:>12} {:>10.4} {:>10} {:>10} {:>10}",
                point.size,
                r.words_emitted,
                r.inner_steps(),
                r.steps_per_word(),
                r.recursive_calls,
                r.walk_steps,
                r.link_updates
            );
        }
    }
    EXIT_OK
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        assert_eq!("1..4".parse::<Sweep>().unwrap().0, vec![1, 2, 3, 4]);
        assert_eq!(
            "10,15,20".parse::<Sweep>().unwrap().0,
            vec![10, 15, 20]
        );
        assert_eq!("1..3,8".parse::<Sweep>().unwrap().0, vec![1, 2, 3, 8]);
        assert!("".parse::<Sweep>().is_err());
        assert!("5..2".parse::<Sweep>().is_err());
        assert!("x".parse::<Sweep>().is_err());
    }

    #[test]
    fn word_rendering() {
        assert_eq!(render_word(&[0, 1, 2], OutputFormat::Digits), "012");
        assert_eq!(render_word(&[], OutputFormat::Digits), "");
        assert_eq!(render_word(&[10, 0, 255], OutputFormat::Csv), "10,0,255");
    }

    #[test]
    fn trace_parsing() {
        assert_eq!(parse_trace("01011").unwrap(), vec![0, 1, 0, 1, 1]);
        assert!(parse_trace("012").is_err());
    }
}
