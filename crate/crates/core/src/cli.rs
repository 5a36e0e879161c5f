//! Command-line driver. Exit codes: 0 success, 2 malformed input,
//! 3 a mathematical check failed.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};

use crate::cartan::Weight;
use crate::central::{central_element, central_element_parallel, compare, solve_ab, theorem_element, CentralElem};
use crate::error::{Error, Result};
use crate::freealg::{serre_elements, BorelElem, Side};
use crate::pairing::Pairing;
use crate::qfield::{parse_rational, QError, QRat};
use crate::rep::{self, derive_rep4, hamiltonian, hamiltonian_constants, rep16, RepName};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser, Debug)]
#[command(name = "qcasimir", version, about = "Central element of U_q(sp4) from Lusztig's pairing")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Write output to this file instead of stdout
    #[arg(long, global = true)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Pair a minus-side element with a plus-side element, e.g. `pair "f2 f1" "e1 e2"`
    Pair {
        y: String,
        x: String,
        /// Also evaluate the value at this rational q
        #[arg(long)]
        q: Option<String>,
    },
    /// Gram matrix of the pairing on all words of weight NU, e.g. `gram 2,2`
    Gram { nu: String },
    /// Dual basis for the given plus-side words, e.g. `dual 1,3 221 122`
    Dual {
        nu: String,
        #[arg(required = true)]
        words: Vec<String>,
    },
    /// Check that the Serre elements lie in the radical of the pairing
    SerreCheck,
    /// Assemble the central element
    Central {
        /// Compare with the hand-written element
        #[arg(long)]
        compare: bool,
        /// Report the action on a representation (dim4, dim5, dim16)
        #[arg(long)]
        rep: Option<String>,
        /// Assemble weight pairs on separate threads
        #[arg(long)]
        parallel: bool,
    },
    /// Run every internal consistency check
    Verify,
    /// The normalized 16x16 matrix of the central element
    Hamiltonian {
        /// Specialize at this rational q
        #[arg(long)]
        q: Option<String>,
        /// Include the sign report of off-diagonal entries
        #[arg(long)]
        signs: bool,
    },
    /// Determine the two free coefficients of the top block from centrality
    SolveAb,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse { .. }
        | Error::Field(QError::Parse { .. })
        | Error::Field(QError::Pole(_))
        | Error::Field(QError::DivisionByZero)
        | Error::MixedSides
        | Error::NotHomogeneous
        | Error::NotInPositiveCone(_)
        | Error::WrongWeight { .. } => EXIT_PARSE,
        _ => EXIT_INCONSISTENT,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// its output to `--out` or `stdout`. Returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                return EXIT_PARSE;
            }
            let _ = write!(stdout, "{e}");
            return EXIT_OK;
        }
    };
    let (text, code) = match execute(&cli) {
        Ok(out) => out,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return exit_code(&e);
        }
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &text),
        None => stdout.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_INCONSISTENT;
    }
    code
}

/// Output text and exit code for a parsed command line.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let p = Pairing::new();
    let fmt = cli.format;
    match &cli.command {
        Command::Pair { y, x, q } => cmd_pair(&p, y, x, q.as_deref(), fmt).map(ok),
        Command::Gram { nu } => cmd_gram(&p, parse_weight(nu)?, fmt).map(ok),
        Command::Dual { nu, words } => {
            let words = words.iter().map(|w| parse_word(w)).collect::<Result<Vec<_>>>()?;
            cmd_dual(&p, parse_weight(nu)?, &words, fmt).map(ok)
        }
        Command::SerreCheck => cmd_serre_check(&p, fmt),
        Command::Central { compare, rep, parallel } => {
            let rep = match rep {
                Some(r) => Some(RepName::parse(r).ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: format!("unknown representation '{r}' (expected dim4, dim5 or dim16)"),
                })?),
                None => None,
            };
            cmd_central(&p, *compare, rep, *parallel, fmt)
        }
        Command::Verify => cmd_verify(&p, fmt),
        Command::Hamiltonian { q, signs } => {
            let q0 = q.as_deref().map(parse_q).transpose()?;
            cmd_hamiltonian(q0.as_ref(), *signs, fmt).map(ok)
        }
        Command::SolveAb => cmd_solve_ab(fmt).map(ok),
    }
}

fn ok(s: String) -> (String, i32) {
    (s, EXIT_OK)
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

/// `"2,2"`, `"(2,2)"` or `"2 2"`.
pub fn parse_weight(s: &str) -> Result<Weight> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let parts: Vec<&str> = inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
    let bad = || Error::Parse {
        pos: 0,
        msg: format!("expected a weight like 2,2, got '{s}'"),
    };
    if parts.len() != 2 {
        return Err(bad());
    }
    let a = parts[0].parse().map_err(|_| bad())?;
    let b = parts[1].parse().map_err(|_| bad())?;
    Ok(Weight::new(a, b))
}

/// A plus-side word written as digits (`221`) or generators (`e2 e2 e1`);
/// `""` or `()` is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<u8>> {
    let t = s.trim();
    if t.is_empty() || t == "()" {
        return Ok(Vec::new());
    }
    if !t.is_empty() && t.bytes().all(|b| b == b'1' || b == b'2') {
        return Ok(t.bytes().map(|b| b - b'0').collect());
    }
    let x = BorelElem::parse(t, Side::Plus)?;
    let terms = x.terms();
    match terms.as_slice() {
        [one] if one.coeff.is_one() && one.kweight == Weight::ZERO && one.word.side == Side::Plus => Ok(one.word.letters.clone()),
        _ => Err(Error::Parse {
            pos: 0,
            msg: format!("'{s}' is not a single e-word"),
        }),
    }
}

pub fn parse_q(s: &str) -> Result<BigRational> {
    let q0 = parse_rational(s)?;
    rep::check_specialization(&q0)?;
    Ok(q0)
}

pub fn cmd_pair(p: &Pairing, y: &str, x: &str, q0: Option<&str>, fmt: Format) -> Result<String> {
    let ye = BorelElem::parse(y, Side::Minus)?;
    let xe = BorelElem::parse(x, Side::Plus)?;
    let v = p.pair(&ye, &xe)?;
    let spec = match q0 {
        Some(s) => {
            let q0 = parse_q(s)?;
            Some((q0.clone(), v.eval(&q0)?))
        }
        None => None,
    };
    Ok(match fmt {
        Format::Json => {
            let mut j = json!({ "y": ye, "x": xe, "value": v });
            if let Some((q0, val)) = &spec {
                j["q"] = json!(q0.to_string());
                j["specialized"] = json!(val.to_string());
            }
            to_json(&j)
        }
        Format::Csv => match &spec {
            Some((q0, val)) => format!("value,q,specialized\n{v},{q0},{val}\n"),
            None => format!("value\n{v}\n"),
        },
        Format::Text => match &spec {
            Some((q0, val)) => format!("{v}\nat q = {q0}: {val}\n"),
            None => format!("{v}\n"),
        },
    })
}

pub fn cmd_gram(p: &Pairing, nu: Weight, fmt: Format) -> Result<String> {
    let g = p.gram(nu)?;
    Ok(match fmt {
        Format::Json => to_json(&g),
        Format::Csv => {
            let mut s = String::from("minus\\plus");
            for w in &g.plus_words {
                let _ = write!(s, ",{w}");
            }
            s.push('\n');
            for (i, w) in g.minus_words.iter().enumerate() {
                let _ = write!(s, "{w}");
                for v in g.matrix.row(i) {
                    let _ = write!(s, ",{v}");
                }
                s.push('\n');
            }
            s
        }
        Format::Text => {
            let mut s = format!("weight {} ({} words, rank {})\n", g.nu, g.plus_words.len(), g.rank());
            for (i, w) in g.minus_words.iter().enumerate() {
                let row: Vec<String> = g.matrix.row(i).iter().map(|v| v.to_string()).collect();
                let _ = writeln!(s, "{w}: [{}]", row.join(", "));
            }
            s
        }
    })
}

pub fn cmd_dual(p: &Pairing, nu: Weight, words: &[Vec<u8>], fmt: Format) -> Result<String> {
    let duals = p.dual_basis(nu, words)?;
    Ok(match fmt {
        Format::Json => to_json(&duals),
        Format::Csv => {
            let mut s = String::from("word,dual\n");
            for (w, d) in words.iter().zip(&duals) {
                let _ = writeln!(s, "{},\"{d}\"", letters(w));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (w, d) in words.iter().zip(&duals) {
                let _ = writeln!(s, "({})* = {d}", spaced(w));
            }
            s
        }
    })
}

fn letters(w: &[u8]) -> String {
    w.iter().map(|l| char::from(b'0' + l)).collect()
}

fn spaced(w: &[u8]) -> String {
    w.iter().map(|l| format!("e{l}")).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct SerreReport {
    element: BorelElem,
    weight: Weight,
    in_radical: bool,
}

pub fn cmd_serre_check(p: &Pairing, fmt: Format) -> Result<(String, i32)> {
    let mut reports = Vec::new();
    for s in serre_elements() {
        let weight = s.homogeneous_weight()?.unwrap_or(Weight::ZERO);
        let in_radical = p.in_radical(&s)?;
        reports.push(SerreReport {
            element: s,
            weight,
            in_radical,
        });
    }
    let all = reports.iter().all(|r| r.in_radical);
    let text = match fmt {
        Format::Json => to_json(&json!({ "all_in_radical": all, "elements": reports })),
        Format::Csv => {
            let mut s = String::from("element,weight,in_radical\n");
            for r in &reports {
                let _ = writeln!(s, "\"{}\",\"{}\",{}", r.element, r.weight, r.in_radical);
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                let _ = writeln!(s, "{} {}  [{}]", if r.in_radical { "ok  " } else { "FAIL" }, r.element, r.weight);
            }
            s
        }
    };
    Ok((text, if all { EXIT_OK } else { EXIT_INCONSISTENT }))
}

pub fn cmd_central(p: &Pairing, with_compare: bool, rep: Option<RepName>, parallel: bool, fmt: Format) -> Result<(String, i32)> {
    let c = if parallel { central_element_parallel(p)? } else { central_element(p)? };
    let mut code = EXIT_OK;
    let mut j = json!({ "element": c });
    let mut text = format!("{c}\n");
    if with_compare {
        let cmp = compare(p, &c, &theorem_element())?;
        if !cmp.matches() {
            code = EXIT_INCONSISTENT;
        }
        let _ = writeln!(text, "{}", cmp.verdict());
        j["comparison"] = json!({ "verdict": cmp.verdict(), "details": cmp });
    }
    if let Some(name) = rep {
        let r = rep::representation(name)?;
        let m = r.evaluate(&c);
        let central = r.centrality_check(&m);
        if !central {
            code = EXIT_INCONSISTENT;
        }
        match m.scalar_value() {
            Some(v) => {
                let _ = writeln!(text, "{}: scalar {v}", name.as_str());
                j["rep"] = json!({ "name": name, "scalar": v, "central": central });
            }
            None => {
                let _ = writeln!(text, "{}: not scalar (commutes with generators: {central})", name.as_str());
                j["rep"] = json!({ "name": name, "scalar": Value::Null, "central": central, "matrix": m.to_rows() });
            }
        }
    }
    let out = match fmt {
        Format::Json => to_json(&j),
        Format::Csv => central_csv(&c),
        Format::Text => text,
    };
    Ok((out, code))
}

fn central_csv(c: &CentralElem) -> String {
    let mut s = String::from("coeff,fpart,kweight,epart\n");
    for t in c.terms() {
        let _ = writeln!(s, "\"{}\",\"{}\",\"{}\",\"{}\"", t.coeff, t.fpart, t.kweight, t.epart);
    }
    s
}

#[derive(Serialize)]
struct Check {
    name: String,
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

fn check(name: impl Into<String>, passed: bool, detail: Option<String>) -> Check {
    Check {
        name: name.into(),
        passed,
        detail,
    }
}

pub fn cmd_verify(p: &Pairing, fmt: Format) -> Result<(String, i32)> {
    let mut checks = Vec::new();
    let d4 = derive_rep4()?;
    let reps = [d4.rep.clone(), rep::rep5(), rep16()];
    for r in &reps {
        let failed: Vec<String> = r.relation_suite().into_iter().filter(|c| !c.holds).map(|c| c.name).collect();
        checks.push(check(format!("relations on {}", r.name.as_str()), failed.is_empty(), (!failed.is_empty()).then(|| failed.join(", "))));
    }
    checks.push(check(
        "dim4 extraction unique",
        d4.solutions == 1,
        Some(format!("index map {:?}", d4.index_map)),
    ));
    for s in serre_elements() {
        checks.push(check(format!("serre element in radical: {s}"), p.in_radical(&s)?, None));
    }
    let c = central_element(p)?;
    let th = theorem_element();
    let cmp = compare(p, &c, &th)?;
    checks.push(check("central element equals hand-written element", cmp.matches(), Some(cmp.verdict())));
    for r in &reps {
        let m = r.evaluate(&th);
        checks.push(check(format!("central on {}", r.name.as_str()), r.centrality_check(&m), None));
        if r.name != RepName::Dim16 {
            let v = m.scalar_value();
            checks.push(check(format!("scalar on {}", r.name.as_str()), v.is_some(), v.map(|v| v.to_string())));
        }
    }
    let (a, b) = solve_ab()?;
    let expect: QRat = "1 - q^2".parse()?;
    checks.push(check("A = B = 1 - q^2", a == expect && b == expect, Some(format!("A = {a}, B = {b}"))));
    let all = checks.iter().all(|c| c.passed);
    let text = match fmt {
        Format::Json => to_json(&json!({ "all_passed": all, "checks": checks })),
        Format::Csv => {
            let mut s = String::from("check,passed,detail\n");
            for c in &checks {
                let _ = writeln!(s, "\"{}\",{},\"{}\"", c.name, c.passed, c.detail.clone().unwrap_or_default());
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                let _ = write!(s, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
                if let Some(d) = &c.detail {
                    let _ = write!(s, "  ({d})");
                }
                s.push('\n');
            }
            s
        }
    };
    Ok((text, if all { EXIT_OK } else { EXIT_INCONSISTENT }))
}

pub fn cmd_hamiltonian(q0: Option<&BigRational>, signs: bool, fmt: Format) -> Result<String> {
    let h = hamiltonian();
    let entries: Vec<Vec<String>> = match q0 {
        Some(q0) => rep::specialize(&h, q0)?.iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
        None => h.to_rows().iter().map(|r| r.iter().map(|v| v.to_string()).collect()).collect(),
    };
    let report = if signs {
        let samples = match q0 {
            Some(q0) => vec![q0.clone()],
            None => rep::default_sign_samples(),
        };
        Some(rep::sign_report(&h, &samples)?)
    } else {
        None
    };
    Ok(match fmt {
        Format::Json => {
            let (scale, shift) = hamiltonian_constants();
            let mut j = json!({
                "dim": 16,
                "normalization": { "scale": scale, "shift": shift },
                "matrix": entries,
            });
            if let Some(q0) = q0 {
                j["q"] = json!(q0.to_string());
            }
            if let Some(r) = &report {
                j["signs"] = json!(r);
            }
            to_json(&j)
        }
        Format::Csv => {
            let mut s = String::new();
            for row in &entries {
                let cells: Vec<String> = row.iter().map(|v| if v.contains(',') { format!("\"{v}\"") } else { v.clone() }).collect();
                let _ = writeln!(s, "{}", cells.join(","));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (i, row) in entries.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    if v != "0" {
                        let _ = writeln!(s, "H[{},{}] = {v}", i + 1, j + 1);
                    }
                }
            }
            if let Some(r) = &report {
                for e in r {
                    let _ = writeln!(s, "sign H[{},{}] at q = {}: {}", e.entry[0] + 1, e.entry[1] + 1, e.q0, if e.sign > 0 { "+" } else { "-" });
                }
            }
            s
        }
    })
}

pub fn cmd_solve_ab(fmt: Format) -> Result<String> {
    let (a, b) = solve_ab()?;
    Ok(match fmt {
        Format::Json => to_json(&json!({ "A": a, "B": b })),
        Format::Csv => format!("A,B\n{a},{b}\n"),
        Format::Text => format!("A = {a}\nB = {b}\n"),
    })
}
