use serde_json::{json, Map, Value};

use crate::error::Error;
use crate::exact::{format_rational, MinorWitness, Rational};

/// JSON report under construction. `verdict` and `command` are always
/// present; `timing` is added by the dispatcher.
#[derive(Debug)]
pub struct Report {
    pub code: i32,
    fields: Map<String, Value>,
}

impl Report {
    pub fn new(command: &str, verdict: &str, code: i32) -> Self {
        let mut fields = Map::new();
        fields.insert("command".into(), json!(command));
        fields.insert("verdict".into(), json!(verdict));
        fields.insert("exit_code".into(), json!(code));
        Self { code, fields }
    }

    pub fn error(command: &str, err: &Error) -> Self {
        let mut r = Self::new(command, "error", 2);
        r.set("error", json!({ "code": err.code(), "message": err.to_string() }));
        r
    }

    pub fn set(&mut self, key: &str, value: Value) -> &mut Self {
        self.fields.insert(key.into(), value);
        self
    }

    pub fn into_value(self, elapsed_ms: f64) -> Value {
        let mut fields = self.fields;
        fields.insert("timing".into(), json!({ "elapsed_ms": elapsed_ms }));
        Value::Object(fields)
    }
}

pub fn rational(v: &Rational) -> Value {
    json!(format_rational(v))
}

/// Witness with 1-based indices.
pub fn witness(w: &MinorWitness) -> Value {
    json!({
        "rows": w.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
        "cols": w.cols.iter().map(|c| c + 1).collect::<Vec<_>>(),
        "value": format_rational(&w.value),
    })
}

pub fn table(t: &[Vec<i64>]) -> Value {
    json!(t)
}

pub fn rational_table(t: &[Vec<Rational>]) -> Value {
    Value::Array(t.iter().map(|row| Value::Array(row.iter().map(rational).collect())).collect())
}
