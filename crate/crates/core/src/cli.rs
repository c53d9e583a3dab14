//! The `negabase` command line.
//!
//! Exit status: 0 on success, 1 on a usage error, 2 on a domain error such
//! as an inadmissible operand.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::arithmetic::{self, l_scan, normalize_neg_traced, Operation, RawDigitString};
use crate::dwords::{format_expansion, format_word, parse_expansion, Expansion};
use crate::expander::{evaluate, expand_real, BaseSign};
use crate::integers::{self, enumerate_integers, DistanceWord};
use crate::pbase::PisotBase;
use crate::qfield::FieldElement;

const DEFAULT_PRECISION: usize = 30;

#[derive(Parser, Debug)]
#[command(name = "negabase", version, about = "Exact numeration in quadratic Pisot bases and their negatives")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct BaseOpt {
    /// `m,n,-` for x^2 - mx - n, `m,n,+` for x^2 - mx + n
    #[arg(long, default_value = "1,1,-")]
    pub base: PisotBase,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug, Clone)]
pub struct SignedBaseOpt {
    #[command(flatten)]
    pub base: BaseOpt,
    /// `neg` for base -beta, `pos` for base beta
    #[arg(long, default_value = "neg")]
    pub sign: BaseSign,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Expansion of a field element, e.g. `-- -1`, `"(1+beta)/2"`, `"3 1 2"`
    Expand {
        #[command(flatten)]
        opt: SignedBaseOpt,
        #[arg(allow_negative_numbers = true)]
        value: String,
    },
    /// Exact value of a digit word such as `11.(1)`
    Eval {
        #[command(flatten)]
        opt: SignedBaseOpt,
        #[arg(allow_negative_numbers = true)]
        word: String,
    },
    /// Sum of two finite (-beta)-expansions, by digit rewriting
    Add {
        #[command(flatten)]
        opt: BaseOpt,
        x: String,
        y: String,
    },
    /// Difference of two finite (-beta)-expansions
    Sub {
        #[command(flatten)]
        opt: BaseOpt,
        x: String,
        y: String,
    },
    /// Product of two finite (-beta)-expansions
    Mul {
        #[command(flatten)]
        opt: BaseOpt,
        x: String,
        y: String,
    },
    /// (-beta)-expansion of a finite digit string over {0, ..., m}
    Normalize {
        #[command(flatten)]
        opt: BaseOpt,
        digits: String,
    },
    /// Longest finite fractional part of sums or products of integers
    Lscan {
        #[command(flatten)]
        opt: SignedBaseOpt,
        #[arg(long, default_value = "add")]
        op: Operation,
        #[arg(long, default_value_t = 6)]
        max_len: usize,
    },
    /// Integers with at most `--len` digits
    Integers {
        #[command(flatten)]
        opt: SignedBaseOpt,
        #[arg(long, default_value_t = 6)]
        len: usize,
        /// CSV rows `a,b,d,value,expansion`
        #[arg(long, conflicts_with = "json")]
        csv: bool,
    },
    /// Gaps between consecutive integers, split at 0
    Distances {
        #[command(flatten)]
        opt: SignedBaseOpt,
        #[arg(long, default_value_t = 8)]
        len: usize,
        /// Print 0/1 instead of Δ0/Δ1
        #[arg(long)]
        bits: bool,
    },
    /// Prefix of the fixed point of Δ0 -> Δ0Δ0Δ1, Δ1 -> Δ0Δ1
    Phiword {
        #[arg(long, default_value_t = 8)]
        length: usize,
        /// The left half of the bidirectional word instead
        #[arg(long)]
        left: bool,
        #[arg(long)]
        bits: bool,
        #[arg(long)]
        json: bool,
    },
    /// Compare non-negative (-tau)-integers with tau^2-integers up to tau^bound
    Coincide {
        #[arg(long, default_value_t = 8)]
        bound: u32,
        #[arg(long)]
        json: bool,
    },
    /// Reference words d*(1), d(l) and d*(r)
    Refwords {
        #[command(flatten)]
        opt: BaseOpt,
    },
}

/// A failure of the requested computation (exit status 2).
#[derive(Debug)]
pub struct DomainError(pub String);

impl<E: std::error::Error> From<E> for DomainError {
    fn from(e: E) -> Self {
        DomainError(e.to_string())
    }
}

fn precision() -> usize {
    std::env::var("NEGABASE_PRECISION").ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_PRECISION)
}

/// Parses `argv`, runs the command and returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return status;
        }
    };
    match execute(&cli.command) {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(DomainError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn max_digit(base: PisotBase, sign: BaseSign) -> u32 {
    match sign {
        BaseSign::Positive => base.max_digit_pos(),
        BaseSign::Negative => base.max_digit_neg(),
    }
}

fn show(e: &Expansion, base: PisotBase) -> String {
    format_expansion(e, base.max_digit_neg())
}

fn expansion_json(e: &Expansion, base: PisotBase) -> Value {
    json!({
        "expansion": show(e, base),
        "top": e.top(),
        "preperiod": e.word().preperiod(),
        "period": e.word().period(),
        "finite": e.is_finite(),
        "fractional_length": e.fractional_length(),
    })
}

fn render(v: Value) -> String {
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn line(s: impl AsRef<str>) -> String {
    format!("{}\n", s.as_ref())
}

/// An expansion in text form with an optional leading `-` for the positive base.
fn parse_signed_word(text: &str, base: PisotBase, sign: BaseSign) -> Result<(bool, Expansion), DomainError> {
    let (negative, body) = match (sign, text.strip_prefix('-')) {
        (BaseSign::Positive, Some(rest)) => (true, rest),
        _ => (false, text),
    };
    Ok((negative, parse_expansion(body, max_digit(base, sign))?))
}

fn operand(text: &str, base: PisotBase) -> Result<Expansion, DomainError> {
    Ok(parse_expansion(text, base.max_digit_neg())?)
}

fn execute(command: &Command) -> Result<String, DomainError> {
    match command {
        Command::Expand { opt, value } => cmd_expand(opt, value),
        Command::Eval { opt, word } => cmd_eval(opt, word),
        Command::Add { opt, x, y } => binary(opt, x, y, "add", arithmetic::add_neg),
        Command::Sub { opt, x, y } => binary(opt, x, y, "sub", arithmetic::sub_neg),
        Command::Mul { opt, x, y } => binary(opt, x, y, "mul", arithmetic::mul_neg),
        Command::Normalize { opt, digits } => cmd_normalize(opt, digits),
        Command::Lscan { opt, op, max_len } => cmd_lscan(opt, *op, *max_len),
        Command::Integers { opt, len, csv } => cmd_integers(opt, *len, *csv),
        Command::Distances { opt, len, bits } => cmd_distances(opt, *len, *bits),
        Command::Phiword { length, left, bits, json } => {
            let w = if *left { integers::phi_left_word(*length) } else { integers::phi_fixed_point(*length) };
            Ok(if *json {
                render(json!({ "length": length, "left": left, "word": w.to_bits() }))
            } else {
                line(word_text(&w, *bits))
            })
        }
        Command::Coincide { bound, json } => cmd_coincide(*bound, *json),
        Command::Refwords { opt } => {
            let r = opt.base.reference_words();
            let (p, l, u) = (format_word(&r.dstar_pos), format_word(&r.d_l), format_word(&r.dstar_r));
            Ok(if opt.json {
                render(json!({ "base": opt.base.to_string(), "dstar_pos": p, "d_l": l, "dstar_r": u }))
            } else {
                format!("d*(1) = {p}\nd(l)  = {l}\nd*(r) = {u}\n")
            })
        }
    }
}

fn cmd_expand(opt: &SignedBaseOpt, value: &str) -> Result<String, DomainError> {
    let base = opt.base.base;
    let x = FieldElement::parse(value, base)?;
    let negative = opt.sign == BaseSign::Positive && x.is_negative();
    let e = expand_real(&if negative { x.abs() } else { x.clone() }, opt.sign)?;
    let text = format!("{}{}", if negative { "-" } else { "" }, format_expansion(&e, max_digit(base, opt.sign)));
    Ok(if opt.base.json {
        let mut v = expansion_json(&e, base);
        v["expansion"] = json!(text);
        v["negative"] = json!(negative);
        v["base"] = json!(base.to_string());
        v["sign"] = json!(opt.sign.to_string());
        v["value"] = json!(x);
        v["decimal"] = json!(x.to_decimal(precision()));
        render(v)
    } else {
        line(text)
    })
}

fn cmd_eval(opt: &SignedBaseOpt, word: &str) -> Result<String, DomainError> {
    let base = opt.base.base;
    let (negative, e) = parse_signed_word(word, base, opt.sign)?;
    let v = evaluate(&e, base, opt.sign);
    let v = if negative { -v } else { v };
    Ok(if opt.base.json {
        render(json!({
            "base": base.to_string(),
            "sign": opt.sign.to_string(),
            "word": word,
            "value": v,
            "decimal": v.to_decimal(precision()),
        }))
    } else {
        line(v.to_string())
    })
}

fn binary(
    opt: &BaseOpt,
    x: &str,
    y: &str,
    name: &str,
    f: fn(&Expansion, &Expansion, PisotBase) -> Result<Expansion, arithmetic::ArithError>,
) -> Result<String, DomainError> {
    let base = opt.base;
    let (ex, ey) = (operand(x, base)?, operand(y, base)?);
    let r = f(&ex, &ey, base)?;
    Ok(if opt.json {
        let mut v = expansion_json(&r, base);
        v["op"] = json!(name);
        v["base"] = json!(base.to_string());
        v["x"] = json!(show(&ex, base));
        v["y"] = json!(show(&ey, base));
        v["value"] = json!(evaluate(&r, base, BaseSign::Negative));
        render(v)
    } else {
        line(show(&r, base))
    })
}

fn cmd_normalize(opt: &BaseOpt, digits: &str) -> Result<String, DomainError> {
    let base = opt.base;
    let raw = RawDigitString::parse(digits, base.max_digit_neg())?;
    let (e, steps) = normalize_neg_traced(&raw, base)?;
    Ok(if opt.json {
        let mut v = expansion_json(&e, base);
        v["base"] = json!(base.to_string());
        v["input"] = json!(digits);
        v["rewrites"] = json!(steps.len());
        render(v)
    } else {
        line(show(&e, base))
    })
}

fn cmd_lscan(opt: &SignedBaseOpt, op: Operation, max_len: usize) -> Result<String, DomainError> {
    let base = opt.base.base;
    let r = l_scan(base, opt.sign, op, max_len)?;
    let max = max_digit(base, opt.sign);
    let fmt = |e: &Expansion| format_expansion(e, max);
    let (wx, wy, res, diff) = match &r.witness {
        Some(w) => (Some(fmt(&w.x)), Some(fmt(&w.y)), Some(fmt(&w.result)), w.difference),
        None => (None, None, None, false),
    };
    Ok(if opt.base.json {
        render(json!({
            "base": base.to_string(),
            "sign": opt.sign.to_string(),
            "op": op.to_string(),
            "max_len": max_len,
            "operands": r.operands,
            "results": r.results,
            "max": r.max,
            "witness_x": wx,
            "witness_y": wy,
            "result": res,
            "difference": diff,
            "infinite_count": r.infinite_count,
        }))
    } else {
        let symbol = match (op, diff) {
            (Operation::Mul, _) => "*",
            (Operation::Add, true) => "-",
            (Operation::Add, false) => "+",
        };
        let mut s = format!("max {}\n", r.max.map_or("none".to_string(), |m| m.to_string()));
        if let (Some(x), Some(y), Some(z)) = (wx, wy, res) {
            let (x, y) = if diff { (format!("|{x}"), format!("{y}|")) } else { (x, y) };
            s.push_str(&format!("witness {x} {symbol} {y} = {z}\n"));
        }
        s.push_str(&format!("infinite {}\noperands {}\nresults {}\n", r.infinite_count, r.operands, r.results));
        s
    })
}

fn cmd_integers(opt: &SignedBaseOpt, len: usize, csv: bool) -> Result<String, DomainError> {
    let base = opt.base.base;
    let set = enumerate_integers(base, opt.sign, len);
    let digits = precision();
    let max = max_digit(base, opt.sign);
    if csv {
        let mut buf = Vec::new();
        set.write_csv(&mut buf, digits)?;
        return Ok(String::from_utf8(buf).expect("CSV output is UTF-8"));
    }
    Ok(if opt.base.json {
        let points: Vec<Value> = set
            .points
            .iter()
            .map(|p| {
                let sign = if p.value.is_negative() && opt.sign == BaseSign::Positive { "-" } else { "" };
                json!({
                    "value": p.value,
                    "decimal": p.value.to_decimal(digits),
                    "expansion": format!("{sign}{}", format_expansion(&p.expansion, max)),
                })
            })
            .collect();
        render(json!({
            "base": base.to_string(),
            "sign": opt.sign.to_string(),
            "digit_len": len,
            "window": [set.window.0, set.window.1],
            "points": points,
        }))
    } else {
        let mut s = String::new();
        for p in &set.points {
            let sign = if p.value.is_negative() && opt.sign == BaseSign::Positive { "-" } else { "" };
            s.push_str(&format!("{sign}{}\t{}\n", format_expansion(&p.expansion, max), p.value.to_decimal(digits)));
        }
        s
    })
}

fn word_text(w: &DistanceWord, bits: bool) -> String {
    if bits {
        w.to_bits()
    } else {
        w.to_string()
    }
}

fn cmd_distances(opt: &SignedBaseOpt, len: usize, bits: bool) -> Result<String, DomainError> {
    let base = opt.base.base;
    let set = enumerate_integers(base, opt.sign, len);
    let (lo, hi) = &set.window;
    let values: Vec<FieldElement> = set.values().into_iter().filter(|v| v > lo && v < hi).collect();
    if !base.is_golden_field() {
        let mut gaps: Vec<FieldElement> = integers::gaps(&values);
        gaps.sort();
        gaps.dedup();
        let shown: Vec<String> = gaps.iter().map(|g| g.to_decimal(precision())).collect();
        return Ok(if opt.base.json {
            render(json!({ "base": base.to_string(), "sign": opt.sign.to_string(), "gaps": gaps }))
        } else {
            format!("gap values\n{}\n", shown.join("\n"))
        });
    }
    let left: Vec<FieldElement> = values.iter().filter(|v| !v.is_positive()).cloned().collect();
    let right: Vec<FieldElement> = values.iter().filter(|v| !v.is_negative()).cloned().collect();
    let (lw, rw) = (integers::distance_word_of(&left)?, integers::distance_word_of(&right)?);
    Ok(if opt.base.json {
        render(json!({
            "base": base.to_string(),
            "sign": opt.sign.to_string(),
            "digit_len": len,
            "left": lw.to_bits(),
            "right": rw.to_bits(),
        }))
    } else {
        line(format!("{}|{}", word_text(&lw, bits), word_text(&rw, bits)))
    })
}

fn cmd_coincide(bound: u32, as_json: bool) -> Result<String, DomainError> {
    let r = integers::coincidence_check(bound);
    let word = |w: &Result<DistanceWord, integers::GapError>| match w {
        Ok(w) => w.to_bits(),
        Err(e) => e.to_string(),
    };
    let prefix = |w: &Result<DistanceWord, integers::GapError>| {
        w.as_ref().map(|w| w.is_prefix_of(&integers::phi_fixed_point(w.len()))).unwrap_or(false)
    };
    Ok(if as_json {
        render(json!({
            "bound_exponent": bound,
            "equal": r.equal,
            "first_mismatch": r.first_mismatch,
            "points": r.negative_base.len(),
            "negative_base": r.negative_base,
            "squared_base": r.squared_base,
            "negative_word": word(&r.negative_word),
            "squared_word": word(&r.squared_word),
            "fixed_point_prefix": prefix(&r.negative_word) && prefix(&r.squared_word),
        }))
    } else {
        format!(
            "equal {}\npoints {} {}\nword(-tau) {}\nword(tau^2) {}\nfixed-point prefix {}\n",
            r.equal,
            r.negative_base.len(),
            r.squared_base.len(),
            word(&r.negative_word),
            word(&r.squared_word),
            prefix(&r.negative_word) && prefix(&r.squared_word),
        )
    })
}
