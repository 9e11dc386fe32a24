//! Number formatting and the shared JSON/CSV/table plumbing.

use fusionkit::{AlgebraParams, Check, Report, Weight};
use serde_json::{json, Value};

/// `x` with 12 significant digits, trailing zeros removed.
pub fn sig(x: f64) -> String {
    if !x.is_finite() {
        return format!("{x}");
    }
    if x == 0.0 {
        return "0".into();
    }
    let e = x.abs().log10().floor() as i32;
    let s = if !(-4..12).contains(&e) {
        let raw = format!("{x:.11e}");
        let (mantissa, exp) = raw.split_once('e').unwrap_or((&raw, "0"));
        format!("{}e{exp}", trim_zeros(mantissa))
    } else {
        let prec = (11 - e).max(0) as usize;
        trim_zeros(&format!("{x:.prec$}")).to_string()
    };
    if s == "-0" {
        "0".into()
    } else {
        s
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// JSON number rounded to 12 significant digits.
pub fn num(x: f64) -> Value {
    sig(x)
        .parse::<f64>()
        .ok()
        .and_then(serde_json::Number::from_f64)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// Drops a component lying below the 12th significant digit of `|z|`.
fn snap(re: f64, im: f64) -> (f64, f64) {
    let cut = 1e-12 * re.hypot(im);
    let clean = |x: f64| if x.abs() <= cut { 0.0 } else { x };
    (clean(re), clean(im))
}

pub fn complex(re: f64, im: f64) -> Value {
    let (re, im) = snap(re, im);
    json!([num(re), num(im)])
}

pub fn complex_text(re: f64, im: f64) -> String {
    let (re, im) = snap(re, im);
    let (re, im) = (sig(re), sig(im));
    if im == "0" {
        re
    } else if let Some(rest) = im.strip_prefix('-') {
        format!("{re}-{rest}i")
    } else {
        format!("{re}+{im}i")
    }
}

pub fn labels(w: &Weight) -> Value {
    json!(w.labels())
}

pub fn envelope(p: &AlgebraParams, weights: &[Weight], data: Value) -> Value {
    json!({
        "algebra": { "n": p.n(), "k": p.k() },
        "weights": weights.iter().map(labels).collect::<Vec<_>>(),
        "data": data,
    })
}

pub fn check_json(c: &Check) -> Value {
    json!({
        "name": c.name,
        "passed": c.passed,
        "max_deviation": num(c.max_deviation),
        "tolerance": num(c.tolerance),
        "detail": c.detail,
    })
}

pub fn report_json(r: &Report) -> Value {
    json!({
        "title": r.title,
        "passed": r.all_passed(),
        "checks": r.checks.iter().map(check_json).collect::<Vec<_>>(),
    })
}

/// Left-aligned text table with a header row.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let cols = header.len();
    let mut width: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, cell) in r.iter().enumerate().take(cols) {
            width[i] = width[i].max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let mut out = String::new();
        for (i, c) in cells.iter().enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(c);
            if i + 1 < cells.len() {
                out.push_str(&" ".repeat(width[i] - c.chars().count()));
            }
        }
        out.push('\n');
        out
    };
    let mut out = line(header.to_vec());
    out.push_str(&line(width.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>().iter().map(String::as_str).collect()));
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

/// Integer matrix with row and column headers.
pub fn int_matrix<'a>(names: impl IntoIterator<Item = String>, get: impl Fn(usize, usize) -> i64 + 'a, size: usize) -> String {
    let names: Vec<String> = names.into_iter().collect();
    let mut header = vec![String::new()];
    header.extend(names.iter().cloned());
    let rows: Vec<Vec<String>> = (0..size)
        .map(|i| {
            let mut r = vec![names[i].clone()];
            r.extend((0..size).map(|j| get(i, j).to_string()));
            r
        })
        .collect();
    table(&header.iter().map(String::as_str).collect::<Vec<_>>(), &rows)
}

/// CSV text from a header and rows.
pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = ::csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig(0.0), "0");
        assert_eq!(sig(-0.0), "0");
        assert_eq!(sig(1.0), "1");
        assert_eq!(sig(std::f64::consts::FRAC_1_SQRT_2), "0.707106781187");
        assert_eq!(sig(1.618033988749895), "1.61803398875");
        assert_eq!(sig(-2.5), "-2.5");
        assert_eq!(sig(1.234e-9), "1.234e-9");
        assert_eq!(sig(-1e-17), "-1e-17");
        assert_eq!(sig(36.000000000000014), "36");
    }

    #[test]
    fn complex_rendering() {
        assert_eq!(complex_text(0.5, -0.25), "0.5-0.25i");
        assert_eq!(complex_text(1.0, 1e-17), "1");
        assert_eq!(complex_text(0.0, 2.0), "0+2i");
        assert_eq!(complex_text(1.0, 0.0), "1");
    }

    #[test]
    fn csv_quotes_weights() {
        let out = csv(&["a", "b"], &[vec!["(1,0)".into(), "2".into()]]);
        assert_eq!(out, "a,b\n\"(1,0)\",2\n");
    }
}
