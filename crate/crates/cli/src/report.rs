use std::collections::BTreeMap;

use faltung::asymptotics::AsymptoticEstimate;
use faltung::exact::{BigFloat, ExactInt, ExactRadical, ExactRat};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

/// How a single output value should be read.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tag {
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error_estimate: Option<String>,
}

impl Tag {
    pub fn exact() -> Self {
        Self { exact: true, precision: None, error_estimate: None }
    }

    pub fn float(precision: usize, error_estimate: Option<String>) -> Self {
        Self { exact: false, precision: Some(precision), error_estimate }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, Value>,
    pub tags: BTreeMap<String, Tag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed_check: Option<Vec<SeedCheck>>,
    pub elapsed: f64,
    pub artifact_version: String,
}

/// Rows for CSV and plain rendering of sequence outputs.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

/// What a subcommand produced, before rendering.
#[derive(Debug, Default)]
pub struct Outcome {
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, Value>,
    pub tags: BTreeMap<String, Tag>,
    pub table: Option<Table>,
    /// A verification that ran but did not hold; reported with exit code 3.
    pub violation: Option<String>,
}

impl Outcome {
    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.into(), value.to_string());
        self
    }

    pub fn exact(&mut self, key: &str, value: Value) -> &mut Self {
        self.outputs.insert(key.into(), value);
        self.tags.insert(key.into(), Tag::exact());
        self
    }

    pub fn float(&mut self, key: &str, value: Value, tag: Tag) -> &mut Self {
        self.outputs.insert(key.into(), value);
        self.tags.insert(key.into(), tag);
        self
    }

    pub fn estimate(&mut self, key: &str, est: &AsymptoticEstimate, digits: usize) -> &mut Self {
        let tag = Tag::float(est.precision, Some(est.error_estimate.to_sci_string(3)));
        self.float(key, estimate_json(est, digits), tag)
    }
}

pub fn rat(q: &ExactRat) -> Value {
    Value::String(q.to_string())
}

pub fn rats<'a>(qs: impl IntoIterator<Item = &'a ExactRat>) -> Value {
    Value::Array(qs.into_iter().map(rat).collect())
}

pub fn int(n: &ExactInt) -> Value {
    Value::String(n.to_string())
}

/// Canonical triple: `q * 2^(half_pow_2/2) * pi^(half_pow_pi/2)` with
/// `half_pow_2` in {0, 1}.
pub fn radical(r: &ExactRadical, digits: usize) -> Value {
    let prec = digits_to_bits(digits) + 32;
    let r = r.canonical();
    json!({
        "q": r.q.to_string(),
        "half_pow_2": r.a,
        "half_pow_pi": r.b,
        "decimal_approx": r.to_float(prec).to_sci_string(digits),
    })
}

pub fn float(x: &BigFloat, digits: usize) -> String {
    x.to_sci_string(digits)
}

pub fn digits_to_bits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 8
}

/// The estimate, showing only the digits its error bar supports.
pub fn estimate_json(est: &AsymptoticEstimate, digits: usize) -> Value {
    let shown = est.reliable_digits().clamp(1, digits.max(1));
    let levels = est.tableau.last().map_or(0, |r| r.len() - 1);
    json!({
        "limit": est.limit.to_sci_string(shown),
        "error_estimate": est.error_estimate.to_sci_string(3),
        "reliable_digits": est.reliable_digits(),
        "precision": est.precision,
        "model": est.model,
        "first_index": est.raw.first().map(|(n, _)| *n),
        "last_index": est.raw.last().map(|(n, _)| *n),
        "levels": levels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

/// Pretty JSON with object keys sorted at every level, so that parsing and
/// re-serializing reproduces the text byte for byte.
pub fn render_json(report: &RunReport) -> String {
    let value = serde_json::to_value(report).expect("report serializes");
    serde_json::to_string_pretty(&value).expect("value serializes")
}

pub fn render_csv(table: &Table) -> String {
    let mut out = table.header.join(",");
    for row in &table.rows {
        out.push('\n');
        out.push_str(&row.join(","));
    }
    out
}

pub fn render_plain(report: &RunReport, table: Option<&Table>) -> String {
    if let Some(t) = table {
        let mut lines = vec![t.header.join("  ")];
        lines.extend(t.rows.iter().map(|r| r.join("  ")));
        return lines.join("\n");
    }
    if report.outputs.len() == 1 {
        if let Some(Value::String(s)) = report.outputs.values().next() {
            return s.clone();
        }
    }
    report
        .outputs
        .iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}: {s}"),
            other => format!("{k}: {other}"),
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_the_struct() {
        let mut outputs = BTreeMap::new();
        outputs.insert("alpha".to_string(), json!(["1/50", "49/2500"]));
        let mut tags = BTreeMap::new();
        tags.insert("alpha".to_string(), Tag::exact());
        let report = RunReport {
            command: "alpha".into(),
            inputs: BTreeMap::from([("n".to_string(), "2".to_string())]),
            outputs,
            tags,
            seed_check: Some(vec![SeedCheck { name: "a seeds".into(), passed: true }]),
            elapsed: 0.012_345_678_9,
            artifact_version: "0.1.0".into(),
        };
        let text = render_json(&report);
        let parsed: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, report);
        assert_eq!(render_json(&parsed), text);
    }

    #[test]
    fn csv_has_header_and_rows() {
        let t = Table { header: vec!["n".into(), "T".into()], rows: vec![vec!["0".into(), "1".into()]] };
        assert_eq!(render_csv(&t), "n,T\n0,1");
    }
}
