use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use crate::exactpoly::{render_terms, BivarPoly, IntPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Plain,
    Json,
    Latex,
}

/// One command's result in all three formats.
#[derive(Debug, Clone)]
pub struct Rendered {
    pub json: Value,
    pub plain: String,
    pub latex: String,
}

impl Rendered {
    pub fn emit(&self, format: OutputFormat) -> String {
        let mut out = match format {
            OutputFormat::Plain => self.plain.clone(),
            OutputFormat::Json => to_json_string(&self.json),
            OutputFormat::Latex => self.latex.clone(),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

/// Compact JSON with keys in sorted order.
pub fn to_json_string(v: &Value) -> String {
    serde_json::to_string(v).expect("Value always serializes")
}

pub fn big(n: &BigInt) -> Value {
    Value::Number(
        n.to_string()
            .parse::<Number>()
            .expect("decimal integer is a JSON number"),
    )
}

pub fn coeffs_json(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(big).collect())
}

/// `{"terms": [[p, q, c], ...]}` in `(p, q)` order.
pub fn bivar_json(b: &BivarPoly) -> Value {
    let terms = b.terms().map(|(p, q, c)| json!([p, q, big(c)])).collect();
    let mut m = Map::new();
    m.insert("terms".into(), Value::Array(terms));
    Value::Object(m)
}

pub fn latex_poly(p: &IntPoly) -> String {
    render_terms(p, |k| match k {
        0 => String::new(),
        1 => "t".into(),
        _ => format!("t^{{{k}}}"),
    })
}

pub fn latex_bivar(b: &BivarPoly) -> String {
    if b.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (p, q, c) in b.terms() {
        let neg = c.sign() == num_bigint::Sign::Minus;
        let mag = if neg { -c } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let var = |x: &str, e: u32| match e {
            0 => String::new(),
            1 => x.to_string(),
            _ => format!("{x}^{{{e}}}"),
        };
        let mono = format!("{}{}", var("u", p), var("v", q));
        if mono.is_empty() || mag != BigInt::from(1) {
            out.push_str(&mag.to_string());
        }
        out.push_str(&mono);
    }
    out
}

/// A `tabular` with a header row.
pub fn latex_table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = format!(
        "\\begin{{tabular}}{{{}}}\n\\hline\n",
        "r".repeat(header.len())
    );
    out.push_str(&header.join(" & "));
    out.push_str(" \\\\\n\\hline\n");
    for row in rows {
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n");
    }
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}
