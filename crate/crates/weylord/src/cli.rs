//! Command-line front end. `run` is a pure function from argv to an exit
//! code and the complete output text, so the whole surface is testable
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::arith::{parse_rational, rat, rat_frac, Rational};
use crate::boards::{
    board_to_word, rook_numbers, rook_numbers_naive, word_to_board, FerrersBoard, RookVector,
};
use crate::error::Error;
use crate::polys::{
    self, continuous_hahn_p, meixner_s_recurrence, moments_from_recurrence, secant_numbers,
    stirling_row, Polynomial,
};
use crate::verify;
use crate::weyl::{
    normal_order_rewrite, normal_order_rook, symmetric_t_brute, symmetric_t_closed, Word,
    DEFAULT_MAX_WORDS,
};

#[derive(Parser)]
#[command(name = "weylord", version, about = "Exact Weyl-algebra normal ordering and identity checks", disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Rook,
    Rewrite,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Normal-order a word over {D, U}
    NormalOrder {
        word: String,
        #[arg(long, value_enum, default_value_t = Method::Rook)]
        method: Method,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ferrers board of a word
    Board { word: String },
    /// Word of a board inside a declared box
    Word {
        heights: String,
        #[arg(long)]
        u: u32,
        #[arg(long)]
        d: u32,
    },
    /// Rook numbers of a board
    Rook {
        heights: String,
        #[arg(long)]
        naive: bool,
    },
    /// The symmetrized product T_n(D, U)
    Tsym {
        n: u32,
        #[arg(long)]
        brute: bool,
        #[arg(long)]
        closed: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_WORDS)]
        max_words: u64,
    },
    /// Polynomial families
    Poly {
        #[command(subcommand)]
        family: PolyFamily,
    },
    /// Moments of the S_n family via weighted lattice paths
    Moments { n: u32 },
    /// Run identity verifiers
    Verify {
        which: String,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
        #[arg(long = "l")]
        l_samples: Vec<String>,
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_WORDS)]
        max_words: u64,
        #[arg(long, default_value_t = polys::DEFAULT_MAX_PERMS)]
        max_perms: u64,
    },
}

#[derive(Subcommand)]
enum PolyFamily {
    /// The special Meixner-Pollaczek polynomial S_n
    #[command(name = "S")]
    S { n: u32 },
    /// The continuous Hahn polynomial P_n(x; l)
    Hahn {
        n: u32,
        #[arg(long)]
        l: String,
    },
    /// The falling-factorial expansion with Stirling coefficients
    Stirling { n: u32 },
    /// Secant numbers E_0, E_2, ..., E_{2N}
    Secant { n: u32 },
}

/// Dispatches argv and returns (exit code, full output).
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap's help/version output is a success, not a usage error
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    match dispatch(cli.command) {
        Ok((code, out)) => (code, out),
        Err(e) => (2, format!("error: {e}\n")),
    }
}

fn dispatch(command: Command) -> crate::Result<(i32, String)> {
    let mut out = String::new();
    match command {
        Command::NormalOrder { word, method, format } => {
            let w: Word = word.parse()?;
            let rook = (method != Method::Rewrite).then(|| normal_order_rook(&w));
            let rewrite = (method != Method::Rook).then(|| normal_order_rewrite(&w));
            match format {
                Format::Text => {
                    for nf in [&rook, &rewrite].into_iter().flatten() {
                        writeln!(out, "{nf}").unwrap();
                    }
                }
                Format::Json => {
                    let value = match (&rook, &rewrite) {
                        (Some(r), Some(w)) => {
                            serde_json::json!({"rook": r.to_json(), "rewrite": w.to_json()})
                        }
                        (Some(r), None) => r.to_json(),
                        (None, Some(w)) => w.to_json(),
                        (None, None) => unreachable!(),
                    };
                    writeln!(out, "{value}").unwrap();
                }
            }
        }
        Command::Board { word } => {
            let w: Word = word.parse()?;
            writeln!(out, "{}", word_to_board(&w)).unwrap();
        }
        Command::Word { heights, u, d } => {
            let b: FerrersBoard = heights.parse()?;
            writeln!(out, "{}", board_to_word(&b, u, d)?).unwrap();
        }
        Command::Rook { heights, naive } => {
            let b: FerrersBoard = heights.parse()?;
            let RookVector(r) = if naive { rook_numbers_naive(&b)? } else { rook_numbers(&b) };
            let value = serde_json::json!({
                "columns": b.columns(),
                "rook": r.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            writeln!(out, "{value}").unwrap();
        }
        Command::Tsym { n, brute, closed, max_words } => {
            if max_words > DEFAULT_MAX_WORDS {
                writeln!(out, "warning: raised word cap to {max_words}; this may be slow").unwrap();
            }
            // default to the closed form; --brute switches route, both flags print both
            let show_brute = brute;
            let show_closed = closed || !brute;
            if show_brute {
                writeln!(out, "{}", symmetric_t_brute(n, max_words)?).unwrap();
            }
            if show_closed {
                writeln!(out, "{}", symmetric_t_closed(n)).unwrap();
            }
        }
        Command::Poly { family } => match family {
            PolyFamily::S { n } => {
                writeln!(out, "{}", meixner_s_recurrence(n)).unwrap();
            }
            PolyFamily::Hahn { n, l } => {
                let l = parse_rational(&l)?;
                writeln!(out, "{}", continuous_hahn_p(n, &l)?).unwrap();
            }
            PolyFamily::Stirling { n } => {
                let row = stirling_row(n);
                let poly = Polynomial::new(
                    row.iter().map(|c| crate::GaussianRational::from_bigint(c.clone())).collect(),
                );
                writeln!(out, "{poly}").unwrap();
            }
            PolyFamily::Secant { n } => {
                writeln!(out, "{}", join_ints(&secant_numbers(n))).unwrap();
            }
        },
        Command::Moments { n } => {
            writeln!(out, "{}", join_ints(&moments_from_recurrence(n))).unwrap();
        }
        Command::Verify { which, n_max, l_samples, word, format, max_words, max_perms } => {
            return run_verify(which, n_max, l_samples, word, format, max_words, max_perms);
        }
    }
    Ok((0, out))
}

fn join_ints(values: &[BigInt]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

fn default_l_samples() -> Vec<Rational> {
    vec![rat(0), rat(1), rat(2), rat_frac(1, 2), rat_frac(5, 2)]
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    which: String,
    n_max: u32,
    l_samples: Vec<String>,
    word: Option<String>,
    format: Format,
    max_words: u64,
    max_perms: u64,
) -> crate::Result<(i32, String)> {
    let mut out = String::new();
    if max_words > DEFAULT_MAX_WORDS {
        writeln!(out, "warning: raised word cap to {max_words}; this may be slow").unwrap();
    }
    if max_perms > polys::DEFAULT_MAX_PERMS {
        writeln!(out, "warning: raised permutation cap to {max_perms}; this may be slow").unwrap();
    }
    let l_values: Vec<Rational> = if l_samples.is_empty() {
        default_l_samples()
    } else {
        l_samples.iter().map(|s| parse_rational(s)).collect::<crate::Result<_>>()?
    };
    let mut reports = Vec::new();
    match which.as_str() {
        "eq21" => {
            if let Some(w) = word {
                reports.push(verify::verify_eq21(&w.parse()?)?);
            } else {
                for len in 0..=(2 * n_max).min(12) {
                    reports.push(verify::verify_eq21_sweep(len)?);
                }
            }
        }
        "eq22" => {
            for n in 0..=n_max.min(8) {
                reports.push(verify::verify_eq22(n)?);
            }
        }
        "t-closed" => {
            for n in 0..=n_max.min(7) {
                reports.push(verify::verify_t_closed(n, max_words)?);
            }
        }
        "koornwinder" => {
            for n in 0..=n_max.min(7) {
                reports.push(verify::verify_koornwinder(n, max_words)?);
            }
        }
        "bd1" => {
            for n in 0..=n_max.min(8) {
                reports.push(verify::verify_bd1(n)?);
            }
        }
        "bd2" => {
            for n in 0..=n_max.min(6) {
                for l in &l_values {
                    reports.push(verify::verify_bd2(n, l)?);
                }
            }
        }
        "stirling" => {
            for n in 0..=n_max.min(10) {
                reports.push(verify::verify_stirling(n)?);
            }
        }
        "cyco" => {
            for n in 0..=n_max.min(9) {
                reports.push(verify::verify_cyco(n, max_perms)?);
            }
        }
        "moments" => {
            reports.push(verify::verify_moments((2 * n_max).min(12))?);
        }
        "all" => {
            reports = verify::verify_all(n_max, &l_values, max_words)?;
        }
        other => {
            return Err(Error::InvalidParameter(format!("unknown identity: {other:?}")));
        }
    }
    match format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{r}").unwrap();
            }
        }
        Format::Json => {
            let value =
                serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect());
            writeln!(out, "{value}").unwrap();
        }
    }
    let code = if verify::all_pass(&reports) { 0 } else { 1 };
    Ok((code, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_cmd(args: &[&str]) -> (i32, String) {
        let mut argv = vec!["weylord"];
        argv.extend_from_slice(args);
        run(argv)
    }

    #[test]
    fn normal_order_text() {
        let (code, out) = run_cmd(&["normal-order", "DUDDUDU"]);
        assert_eq!(code, 0);
        assert_eq!(out, "U^3D^4 + 8 U^2D^3 + 14 U D^2 + 4 D\n");
    }

    #[test]
    fn normal_order_both_methods_agree() {
        let (code, out) = run_cmd(&["normal-order", "DDUU", "--method", "both"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0], lines[1]);
    }

    #[test]
    fn normal_order_json_parses() {
        let (code, out) = run_cmd(&["normal-order", "DUDDUDU", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let terms = v.as_array().unwrap();
        assert_eq!(terms[0]["u"], 3);
        assert_eq!(terms[0]["d"], 4);
        assert_eq!(terms[0]["re"], "1");
        assert_eq!(terms[0]["im"], "0");
    }

    #[test]
    fn poly_s4() {
        let (code, out) = run_cmd(&["poly", "S", "4"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^4 - 14*x^2 + 9\n");
    }

    #[test]
    fn poly_hahn() {
        let (code, out) = run_cmd(&["poly", "hahn", "2", "--l", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out, "x^2 - 3/20\n");
        let (code, _) = run_cmd(&["poly", "hahn", "2", "--l", "bogus"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn board_word_roundtrip() {
        let (code, board) = run_cmd(&["board", "DUDDUDU"]);
        assert_eq!(code, 0);
        assert_eq!(board.trim(), "3,2,2,1");
        let (code, word) = run_cmd(&["word", board.trim(), "--u", "3", "--d", "4"]);
        assert_eq!(code, 0);
        assert_eq!(word.trim(), "DUDDUDU");
    }

    #[test]
    fn rook_json() {
        let (code, out) = run_cmd(&["rook", "3,2,2,1"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["columns"], serde_json::json!([3, 2, 2, 1]));
        assert_eq!(v["rook"], serde_json::json!(["1", "8", "14", "4", "0"]));
        let (_, naive) = run_cmd(&["rook", "3,2,2,1", "--naive"]);
        assert_eq!(out, naive);
    }

    #[test]
    fn tsym_routes() {
        let (code, closed) = run_cmd(&["tsym", "2"]);
        assert_eq!(code, 0);
        assert_eq!(closed, "6 U^2D^2 + 12 U D + 3\n");
        let (code, brute) = run_cmd(&["tsym", "2", "--brute"]);
        assert_eq!(code, 0);
        assert_eq!(brute, closed);
    }

    #[test]
    fn moments_and_secant() {
        let (code, mu) = run_cmd(&["moments", "4"]);
        assert_eq!(code, 0);
        assert_eq!(mu.trim(), "1, 1, 5, 61, 1385");
        let (_, e) = run_cmd(&["poly", "secant", "4"]);
        assert_eq!(mu, e);
    }

    #[test]
    fn verify_exit_codes() {
        let (code, out) = run_cmd(&["verify", "koornwinder", "--n-max", "2"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().count(), 3);
        assert!(out.lines().all(|l| l.contains(": pass")));
        let (code, _) = run_cmd(&["verify", "nonsense"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn verify_json_parses() {
        let (code, out) = run_cmd(&["verify", "moments", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v[0]["identity"], "moments");
        assert_eq!(v[0]["status"], "pass");
    }

    #[test]
    fn malformed_input_is_exit_2() {
        assert_eq!(run_cmd(&["normal-order", "DUX"]).0, 2);
        assert_eq!(run_cmd(&["word", "2,3", "--u", "3", "--d", "2"]).0, 2);
        assert_eq!(run_cmd(&["bogus-subcommand"]).0, 2);
        assert_eq!(run_cmd(&["tsym", "40", "--brute"]).0, 2);
    }

    #[test]
    fn deterministic_output() {
        let a = run_cmd(&["verify", "eq22", "--n-max", "3"]);
        let b = run_cmd(&["verify", "eq22", "--n-max", "3"]);
        assert_eq!(a.0, b.0);
        // text output carries no timing, so repeated runs are byte-identical
        assert_eq!(a.1, b.1);
    }
}
