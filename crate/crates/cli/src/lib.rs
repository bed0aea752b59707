//! `cyclo`: command-line front end for exact cyclotomic arithmetic.
//!
//! Output is plain text by default or a single JSON envelope with `--json`:
//! `{"command", "exact", "inputs", "result"}`. Exact values (rationals, big
//! integers, field elements) are always JSON strings, never floats. Keys are
//! emitted in sorted order so re-serializing parsed output is byte-identical.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 internal
//! invariant violation.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use cyclotomic::arith::primes_up_to;
use cyclotomic::cycring::{
    conj, cyc_add, cyc_mul, cyc_sub, decompose_unit, factor_sum_pth_powers, fold_product, inverse, is_real,
    is_unit, norm, trace, CycElt,
};
use cyclotomic::cyclotomic::{cyclotomic_poly, discr_prime_pow_formula};
use cyclotomic::fermat::{case_i_search_parallel, SearchReport};
use cyclotomic::poly::poly_discriminant;
use cyclotomic::regularity::{bernoulli, irregular_pairs, is_regular_prime};
use cyclotomic::{Error, PosNat, Rational};
use num_bigint::BigInt;
use num_traits::Pow;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

const USAGE: &str = "usage: cyclo [--json] [--quiet] <poly|disc|bernoulli|regular|pairs|elt|unit-decompose|factor|case1> ...";

#[derive(Debug, Parser)]
#[command(name = "cyclo", version, about = "Exact arithmetic in cyclotomic fields")]
struct Cli {
    /// Emit one JSON object on standard output
    #[arg(long, global = true)]
    json: bool,
    /// Suppress text output; exit status only (ignored with --json)
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Cyclotomic polynomial Φ_n as a low-to-high coefficient list
    Poly { n: u64 },
    /// Discriminant of Q(ζ_{p^k}): closed form vs. resultant of Φ_{p^k}
    Disc { p: u64, k: u32 },
    /// Bernoulli number B_m (B_1 = -1/2)
    Bernoulli { m: usize },
    /// Regularity verdict for every prime up to N
    Regular {
        #[arg(long)]
        upto: u64,
    },
    /// Irregular pairs (p, k) of a prime p >= 5
    Pairs { p: u64 },
    /// Field operation on elements written n:[c0,c1,...]
    Elt {
        #[arg(value_enum)]
        op: EltOp,
        a: String,
        b: Option<String>,
    },
    /// Write a unit of Z[ζ_p] as x·ζ^m with x real
    UnitDecompose { p: u64, elt: String },
    /// Factors x + ζ^i y of x^p + y^p, with a product check
    #[command(allow_negative_numbers = true)]
    Factor { p: u64, x: BigInt, y: BigInt },
    /// Exhaustive Case I search for x^p + y^p = z^p
    Case1 {
        p: u64,
        #[arg(long)]
        bound: u64,
        /// Disable the modular pruning filter
        #[arg(long)]
        no_filter: bool,
        /// Do not require p to be regular
        #[arg(long)]
        skip_regularity: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EltOp {
    Add,
    Sub,
    Mul,
    Inv,
    Norm,
    Trace,
    Conj,
    IsReal,
    IsUnit,
}

impl EltOp {
    fn binary(self) -> bool {
        matches!(self, EltOp::Add | EltOp::Sub | EltOp::Mul)
    }

    fn name(self) -> &'static str {
        match self {
            EltOp::Add => "add",
            EltOp::Sub => "sub",
            EltOp::Mul => "mul",
            EltOp::Inv => "inv",
            EltOp::Norm => "norm",
            EltOp::Trace => "trace",
            EltOp::Conj => "conj",
            EltOp::IsReal => "is-real",
            EltOp::IsUnit => "is-unit",
        }
    }
}

/// A command failure, already classified by exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_USAGE,
            Error::Invariant(_) => EXIT_INTERNAL,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

/// What a command produced: the JSON payload plus its text rendering.
struct Outcome {
    inputs: Value,
    result: Value,
    text: String,
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn parse_elt(s: &str) -> Result<CycElt, Failure> {
    s.parse::<CycElt>()
        .map_err(|e| usage(format!("malformed element literal {s:?}: {e}")))
}

fn pos(n: u64) -> Result<PosNat, Failure> {
    PosNat::new(n).map_err(Failure::from)
}

fn execute(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Poly { n } => {
            let phi = cyclotomic_poly(pos(*n)?);
            Ok(Outcome {
                inputs: json!({ "n": n }),
                result: json!({ "poly": phi.to_string(), "degree": phi.degree() }),
                text: phi.to_string(),
            })
        }
        Command::Disc { p, k } => {
            let formula = discr_prime_pow_formula(*p, *k)?;
            let pk = p
                .checked_pow(*k)
                .ok_or_else(|| Failure::from(Error::InvalidArgument("p^k overflows".into())))?;
            let oracle = poly_discriminant(&cyclotomic_poly(pos(pk)?))?;
            let agree = formula == oracle;
            Ok(Outcome {
                inputs: json!({ "p": p, "k": k }),
                result: json!({
                    "formula": formula.to_string(),
                    "oracle": oracle.to_string(),
                    "agree": agree,
                }),
                text: format!("formula={formula} oracle={oracle} agree={agree}"),
            })
        }
        Command::Bernoulli { m } => {
            let b = bernoulli(*m);
            Ok(Outcome {
                inputs: json!({ "m": m }),
                result: json!({ "value": rat(&b) }),
                text: b.to_string(),
            })
        }
        Command::Regular { upto } => {
            let mut rows = Vec::new();
            let mut lines = Vec::new();
            let mut irregular = Vec::new();
            for p in primes_up_to(*upto) {
                let report = is_regular_prime(p)?;
                let pairs: Vec<Value> = report.pairs.iter().map(|&(p, k)| json!([p, k])).collect();
                if report.regular {
                    lines.push(format!("{p} regular"));
                } else {
                    irregular.push(p);
                    let shown: Vec<String> = report.pairs.iter().map(|(p, k)| format!("({p},{k})")).collect();
                    lines.push(format!("{p} irregular {}", shown.join(" ")));
                }
                rows.push(json!({ "p": p, "regular": report.regular, "pairs": pairs }));
            }
            let listed: Vec<String> = irregular.iter().map(u64::to_string).collect();
            lines.push(format!("irregular: {}", listed.join(" ")));
            Ok(Outcome {
                inputs: json!({ "upto": upto }),
                result: json!({
                    "criterion": "p divides the numerator of some B_k, k even, 2 <= k <= p-3",
                    "primes": rows,
                    "irregular": irregular,
                }),
                text: lines.join("\n"),
            })
        }
        Command::Pairs { p } => {
            let pairs = irregular_pairs(*p)?;
            let shown: Vec<String> = pairs.iter().map(|(p, k)| format!("({p},{k})")).collect();
            Ok(Outcome {
                inputs: json!({ "p": p }),
                result: json!({ "pairs": pairs.iter().map(|&(p, k)| json!([p, k])).collect::<Vec<_>>() }),
                text: format!("[{}]", shown.join(",")),
            })
        }
        Command::Elt { op, a, b } => elt_command(*op, a, b.as_deref()),
        Command::UnitDecompose { p, elt } => {
            let u = parse_elt(elt)?;
            let d = decompose_unit(&u, *p)?;
            Ok(Outcome {
                inputs: json!({ "p": p, "elt": u.to_string() }),
                result: json!({ "x": d.x.to_string(), "m": d.m, "x_real": true, "x_unit": true }),
                text: format!("x={} m={}", d.x, d.m),
            })
        }
        Command::Factor { p, x, y } => {
            let factors = factor_sum_pth_powers(x, y, *p)?;
            let product = fold_product(&factors)?;
            let expected: BigInt = Pow::pow(x, *p as u32) + Pow::pow(y, *p as u32);
            let expected_elt = CycElt::scalar(product.n(), Rational::from_integer(expected.clone()));
            if product != expected_elt {
                return Err(Error::Invariant(format!("product {product} != x^p + y^p = {expected}")).into());
            }
            let mut lines: Vec<String> = factors.iter().enumerate().map(|(i, f)| format!("{i} {f}")).collect();
            lines.push(format!("product={product} expected={expected} agree=true"));
            Ok(Outcome {
                inputs: json!({ "p": p, "x": x.to_string(), "y": y.to_string() }),
                result: json!({
                    "factors": factors.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    "product": product.to_string(),
                    "expected": expected.to_string(),
                    "agree": true,
                }),
                text: lines.join("\n"),
            })
        }
        Command::Case1 { p, bound, no_filter, skip_regularity } => {
            if !skip_regularity {
                if *p == 2 {
                    return Err(Error::OddPrimeRequired(2).into());
                }
                let regularity = is_regular_prime(*p)?;
                if !regularity.regular {
                    return Err(Error::IrregularPrime { p: *p, pairs: regularity.pairs }.into());
                }
            }
            let workers = std::thread::available_parallelism().map_or(1, usize::from);
            let report = case_i_search_parallel(*p, *bound, !no_filter, workers)?;
            Ok(case1_outcome(&report, !no_filter, !skip_regularity))
        }
    }
}

fn case1_outcome(report: &SearchReport, filter: bool, regularity_checked: bool) -> Outcome {
    let solutions: Vec<Value> = report.solutions.iter().map(|&(x, y, z)| json!([x, y, z])).collect();
    let shown: Vec<String> = report.solutions.iter().map(|(x, y, z)| format!("({x},{y},{z})")).collect();
    Outcome {
        inputs: json!({
            "p": report.p,
            "bound": report.bound,
            "filter": filter,
            "regularity_checked": regularity_checked,
        }),
        result: json!({
            "candidates_examined": report.candidates_examined,
            "pruned_by_filter": report.pruned_by_filter,
            "solutions": solutions,
        }),
        text: format!(
            "p={} bound={} examined={} pruned={} solutions=[{}]",
            report.p,
            report.bound,
            report.candidates_examined,
            report.pruned_by_filter,
            shown.join(",")
        ),
    }
}

fn elt_command(op: EltOp, a: &str, b: Option<&str>) -> Result<Outcome, Failure> {
    let x = parse_elt(a)?;
    let y = match (op.binary(), b) {
        (true, Some(b)) => Some(parse_elt(b)?),
        (true, None) => return Err(usage(format!("elt {} needs two elements", op.name()))),
        (false, Some(_)) => return Err(usage(format!("elt {} takes one element", op.name()))),
        (false, None) => None,
    };
    let (result, text) = match op {
        EltOp::Add | EltOp::Sub | EltOp::Mul => {
            let y = y.as_ref().expect("checked above");
            let v = match op {
                EltOp::Add => cyc_add(&x, y)?,
                EltOp::Sub => cyc_sub(&x, y)?,
                _ => cyc_mul(&x, y)?,
            };
            (Value::String(v.to_string()), v.to_string())
        }
        EltOp::Inv => {
            let v = inverse(&x)?;
            (Value::String(v.to_string()), v.to_string())
        }
        EltOp::Conj => {
            let v = conj(&x);
            (Value::String(v.to_string()), v.to_string())
        }
        EltOp::Norm => {
            let v = norm(&x);
            (rat(&v), v.to_string())
        }
        EltOp::Trace => {
            let v = trace(&x)?;
            (rat(&v), v.to_string())
        }
        EltOp::IsReal => {
            let v = is_real(&x);
            (Value::Bool(v), v.to_string())
        }
        EltOp::IsUnit => {
            let v = is_unit(&x)?;
            (Value::Bool(v), v.to_string())
        }
    };
    let mut elts = vec![Value::String(x.to_string())];
    elts.extend(y.map(|y| Value::String(y.to_string())));
    Ok(Outcome {
        inputs: json!({ "op": op.name(), "elements": elts }),
        result: json!({ "value": result }),
        text,
    })
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Poly { .. } => "poly",
        Command::Disc { .. } => "disc",
        Command::Bernoulli { .. } => "bernoulli",
        Command::Regular { .. } => "regular",
        Command::Pairs { .. } => "pairs",
        Command::Elt { .. } => "elt",
        Command::UnitDecompose { .. } => "unit-decompose",
        Command::Factor { .. } => "factor",
        Command::Case1 { .. } => "case1",
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    let _ = writeln!(err, "{USAGE}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli.command) {
        Ok(outcome) => {
            let written = if cli.json {
                let envelope = json!({
                    "command": command_name(&cli.command),
                    "inputs": outcome.inputs,
                    "result": outcome.result,
                    "exact": true,
                });
                writeln!(out, "{envelope}")
            } else if cli.quiet {
                Ok(())
            } else {
                writeln!(out, "{}", outcome.text)
            };
            if written.is_err() {
                return EXIT_INTERNAL;
            }
            EXIT_OK
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            if f.code == EXIT_USAGE {
                let _ = writeln!(err, "{USAGE}");
            }
            f.code
        }
    }
}
