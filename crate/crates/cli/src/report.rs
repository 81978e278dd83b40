//! JSON and CSV reports.
//!
//! Canonical JSON writes a polynomial as an array of
//! `[u_exp, s_exp, t_exp, x_exp, "coeff"]` terms (with `q = u^2`) and a rational
//! function as `{"num": poly, "den": poly}`. Integers are decimal strings and
//! rationals are `{"num": "p", "den": "q"}`.

use std::collections::BTreeSet;
use std::io::Write;

use qszego::suite::{Row, Value};
use qszego::{MPoly, RatFn};
use serde_json::{json, Map, Value as Json};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub struct Report {
    pub suite: String,
    pub rows: Vec<Row>,
}

impl Report {
    /// Control ids that failed at least once in this report.
    fn effective_controls(&self) -> BTreeSet<&str> {
        self.rows
            .iter()
            .filter(|r| r.control && !r.holds)
            .map(|r| r.id.as_str())
            .collect()
    }

    /// An identity row passes when it holds; a control row passes when its
    /// control fails somewhere in the report.
    pub fn passes(&self) -> Vec<bool> {
        let effective = self.effective_controls();
        self.rows
            .iter()
            .map(|r| {
                if r.control {
                    effective.contains(r.id.as_str())
                } else {
                    r.holds
                }
            })
            .collect()
    }

    pub fn failures(&self) -> usize {
        self.passes().iter().filter(|p| !**p).count()
    }

    pub fn write(&self, format: Format, pretty: bool, out: &mut dyn Write) -> std::io::Result<()> {
        match format {
            Format::Json => self.write_json(pretty, out),
            Format::Csv => self.write_csv(out),
        }
    }

    /// One row per line, so reports diff cleanly.
    fn write_json(&self, pretty: bool, out: &mut dyn Write) -> std::io::Result<()> {
        let head = json!({ "tool_version": TOOL_VERSION, "suite": self.suite });
        let head = serde_json::to_string(&head)?;
        write!(out, "{},\"rows\":[", head.trim_end_matches('}'))?;
        for (i, (r, pass)) in self.rows.iter().zip(self.passes()).enumerate() {
            let sep = if i == 0 { "" } else { "," };
            write!(
                out,
                "{sep}\n{}",
                serde_json::to_string(&row_json(r, pass, pretty))?
            )?;
        }
        let close = if self.rows.is_empty() { "" } else { "\n" };
        writeln!(out, "{close}]}}")
    }

    fn write_csv(&self, out: &mut dyn Write) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record([
            "id", "params", "pass", "holds", "control", "expected", "computed", "witness",
        ])?;
        for (r, pass) in self.rows.iter().zip(self.passes()) {
            let params = r
                .params
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";");
            w.write_record([
                r.id.clone(),
                params,
                pass.to_string(),
                r.holds.to_string(),
                r.control.to_string(),
                text(&r.expected),
                text(&r.computed),
                r.witness.clone().unwrap_or_default(),
            ])?;
        }
        w.flush()
    }
}

fn row_json(r: &Row, pass: bool, pretty: bool) -> Json {
    let value = |v: &Value| if pretty { text_json(v) } else { value_json(v) };
    let params: Map<String, Json> = r
        .params
        .iter()
        .map(|(k, v)| (k.to_string(), json!(v)))
        .collect();
    let mut obj = Map::new();
    obj.insert("id".into(), json!(r.id));
    obj.insert("params".into(), Json::Object(params));
    obj.insert("pass".into(), json!(pass));
    obj.insert("holds".into(), json!(r.holds));
    obj.insert("control".into(), json!(r.control));
    obj.insert("expected".into(), value(&r.expected));
    obj.insert("computed".into(), value(&r.computed));
    for (name, v) in &r.aux {
        obj.insert(name.to_string(), value(v));
    }
    obj.insert("witness".into(), json!(r.witness));
    Json::Object(obj)
}

pub fn poly_json(p: &MPoly) -> Json {
    let mut terms = Vec::new();
    for (e, c) in p.terms() {
        for (u, coeff) in c.terms() {
            terms.push(json!([u, e[0], e[1], e[2], coeff.to_string()]));
        }
    }
    Json::Array(terms)
}

pub fn ratfn_json(r: &RatFn) -> Json {
    json!({ "num": poly_json(r.num()), "den": poly_json(&r.den_expanded()) })
}

pub fn value_json(v: &Value) -> Json {
    match v {
        Value::Absent => Json::Null,
        Value::Expr(r) => ratfn_json(r),
        Value::Rational(x) => json!({ "num": x.numer().to_string(), "den": x.denom().to_string() }),
        Value::Integer(n) => json!(n.to_string()),
    }
}

fn text_json(v: &Value) -> Json {
    match v {
        Value::Absent => Json::Null,
        _ => json!(text(v)),
    }
}

/// Human-readable form: descending powers of `s`, ascending powers of `q`.
pub fn text(v: &Value) -> String {
    match v {
        Value::Absent => String::new(),
        Value::Expr(r) => r.to_string(),
        Value::Rational(x) => x.to_string(),
        Value::Integer(n) => n.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::ops::RangeInclusive;

    #[test]
    fn canonical_polynomials() {
        // (1 - q s) / (1 - q), stored with a positive leading denominator
        let r = (RatFn::one() - RatFn::q(1) * RatFn::s())
            .div(&(RatFn::one() - RatFn::q(1)))
            .unwrap();
        let j = ratfn_json(&r);
        assert_eq!(j["num"], json!([[0, 0, 0, 0, "-1"], [2, 1, 0, 0, "1"]]));
        assert_eq!(j["den"], json!([[0, 0, 0, 0, "-1"], [2, 0, 0, 0, "1"]]));
        assert_eq!(value_json(&Value::Absent), Json::Null);
    }

    #[test]
    fn json_lines_parse() {
        for rows in [0, 3] {
            let report = Report {
                suite: "rs".into(),
                rows: qszego::suite::rs("gauss-even", RangeInclusive::new(0, rows - 1)).unwrap(),
            };
            let mut buf = Vec::new();
            report.write(Format::Json, false, &mut buf).unwrap();
            let v: Json = serde_json::from_slice(&buf).unwrap();
            assert_eq!(v["suite"], "rs");
            assert_eq!(v["rows"].as_array().unwrap().len(), rows as usize);
            // header, one line per row, closing bracket
            let lines = buf.iter().filter(|b| **b == b'\n').count();
            assert_eq!(lines, if rows == 0 { 1 } else { rows as usize + 2 });
        }
    }
}
