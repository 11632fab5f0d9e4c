//! Text and JSON rendering of command results.
//!
//! Text output is `key: value` lines, with lists written one item per line
//! indented by two spaces. JSON output is one object per invocation.
//! Coefficients are written as decimal strings so that big integers survive.

use serde_json::{json, Map, Value};

use crate::exact_poly::{ExactRational, XYMonomial, XYPolynomial};
use crate::xu_presentation::{UMonomial, UPolynomial};

enum Entry {
    Scalar(String),
    List(Vec<String>),
}

pub(crate) struct OutputDocument {
    command: &'static str,
    n: usize,
    inputs: Vec<String>,
    input_json: Option<Value>,
    entries: Vec<(&'static str, Entry, Value)>,
    pub(crate) timing_us: Option<u64>,
}

impl OutputDocument {
    pub(crate) fn new(command: &'static str, n: usize) -> Self {
        OutputDocument {
            command,
            n,
            inputs: Vec::new(),
            input_json: None,
            entries: Vec::new(),
            timing_us: None,
        }
    }

    /// Records the normalized form of an input.
    pub(crate) fn input(&mut self, text: String) {
        self.inputs.push(text);
    }

    /// Overrides the JSON value of `input` (default: the input strings).
    pub(crate) fn set_input_json(&mut self, v: Value) {
        self.input_json = Some(v);
    }

    pub(crate) fn field(&mut self, key: &'static str, text: String, js: Value) {
        self.entries.push((key, Entry::Scalar(text), js));
    }

    pub(crate) fn list(&mut self, key: &'static str, lines: &[String], js: Value) {
        self.entries.push((key, Entry::List(lines.to_vec()), js));
    }

    pub(crate) fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        out.push_str(&format!("n: {}\n", self.n));
        for i in &self.inputs {
            out.push_str(&format!("input: {i}\n"));
        }
        for (key, entry, _) in &self.entries {
            match entry {
                Entry::Scalar(s) => out.push_str(&format!("{key}: {s}\n")),
                Entry::List(items) => {
                    out.push_str(&format!("{key}: {}\n", items.len()));
                    for item in items {
                        out.push_str(&format!("  {item}\n"));
                    }
                }
            }
        }
        if let Some(t) = self.timing_us {
            out.push_str(&format!("time_us: {t}\n"));
        }
        out
    }

    pub(crate) fn to_json(&self) -> String {
        let mut obj = Map::new();
        obj.insert("command".into(), json!(self.command));
        obj.insert("n".into(), json!(self.n));
        let input = match &self.input_json {
            Some(v) => v.clone(),
            None if self.inputs.len() == 1 => json!(self.inputs[0]),
            None => json!(self.inputs),
        };
        obj.insert("input".into(), input);
        for (key, _, js) in &self.entries {
            obj.insert((*key).into(), js.clone());
        }
        if let Some(t) = self.timing_us {
            obj.insert("time_us".into(), json!(t));
        }
        let mut s = serde_json::to_string(&Value::Object(obj)).expect("serializable");
        s.push('\n');
        s
    }
}

fn coeff_json(c: &ExactRational) -> (Value, Value) {
    (json!(c.numer().to_string()), json!(c.denom().to_string()))
}

pub(crate) fn xy_monomial_json(m: &XYMonomial) -> Value {
    json!({ "a": m.x_exponents(), "b": m.y_exponents() })
}

/// `[[num, den, monomial], ..]` in descending lex order.
pub(crate) fn xy_terms_json(p: &XYPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let (num, den) = coeff_json(c);
            json!([num, den, xy_monomial_json(m)])
        })
        .collect();
    Value::Array(terms)
}

pub(crate) fn u_monomial_json(m: &UMonomial) -> Value {
    let u: Vec<Value> = m.u_factors().map(|((i, j), e)| json!([i, j, e])).collect();
    json!({ "x": m.x_vec(), "u": u })
}

/// `[[num, den, monomial], ..]` in descending DILL order.
pub(crate) fn u_terms_json(p: &UPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| {
            let (num, den) = coeff_json(c);
            json!([num, den, u_monomial_json(m)])
        })
        .collect();
    Value::Array(terms)
}
