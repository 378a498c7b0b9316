use std::fmt::Write as _;

use num_bigint::BigInt;
use qcumulant::graphs::Multigraph;
use qcumulant::report::Report;
use qcumulant::IntPoly;
use serde::{Serialize, Serializer};

/// A table entry: a polynomial, or its value once a point is substituted.
#[derive(Clone, Debug)]
pub enum Value {
    Poly(IntPoly),
    Int(BigInt),
}

impl Value {
    pub fn new(p: &IntPoly, eval_at: Option<i64>) -> Self {
        match eval_at {
            Some(x) => Value::Int(p.eval_int(x)),
            None => Value::Poly(p.clone()),
        }
    }

    fn render(&self, var: &str) -> String {
        match self {
            Value::Poly(p) => p.render(var),
            Value::Int(i) => i.to_string(),
        }
    }
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Poly(p) => p.serialize(s),
            Value::Int(i) => s.serialize_str(&i.to_string()),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Row {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_tilde: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<Value>,
}

impl Row {
    fn fields(&self) -> [(&'static str, Option<&Value>); 4] {
        [
            ("m", self.m.as_ref()),
            ("k", self.k.as_ref()),
            ("k_tilde", self.k_tilde.as_ref()),
            ("c", self.c.as_ref()),
        ]
    }
}

#[derive(Debug, Serialize)]
pub struct Table {
    pub law: &'static str,
    pub variable: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eval_at: Option<i64>,
    pub rows: Vec<Row>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("tables serialize");
    s.push('\n');
    s
}

fn csv_string(write: impl FnOnce(&mut csv::Writer<Vec<u8>>) -> csv::Result<()>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    write(&mut w).expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("utf-8 output")
}

impl Table {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    /// Columns present in the first row; every row of a table has the same ones.
    fn columns(&self) -> Vec<&'static str> {
        self.rows.first().map_or(Vec::new(), |r| {
            r.fields()
                .into_iter()
                .filter(|(_, v)| v.is_some())
                .map(|(name, _)| name)
                .collect()
        })
    }

    fn csv(&self) -> String {
        let columns = self.columns();
        csv_string(|w| {
            let mut header = vec!["n"];
            header.extend(&columns);
            w.write_record(&header)?;
            for row in &self.rows {
                let mut record = vec![row.n.to_string()];
                for (_, v) in row.fields().into_iter().filter(|(_, v)| v.is_some()) {
                    record.push(v.expect("filtered").render(self.variable));
                }
                w.write_record(&record)?;
            }
            Ok(())
        })
    }

    fn text(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            for (name, v) in row.fields() {
                if let Some(v) = v {
                    let _ = writeln!(out, "{name}_{} = {}", row.n, v.render(self.variable));
                }
            }
        }
        out
    }
}

/// Output of `tutte --graph`.
#[derive(Debug, Serialize)]
pub struct GraphValue {
    pub graph: Multigraph,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eval_at: Option<i64>,
    pub tutte_1q: Value,
}

impl GraphValue {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_json(self),
            Format::Csv => csv_string(|w| {
                w.write_record(["tutte_1q"])?;
                w.write_record([self.tutte_1q.render("q")])
            }),
            Format::Text => format!("T(1,q) = {}\n", self.tutte_1q.render("q")),
        }
    }
}

pub fn render_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => to_json(report),
        Format::Csv => csv_string(|w| {
            w.write_record(["check", "n", "status", "lhs", "rhs"])?;
            for r in &report.rows {
                let n = r.n.to_string();
                let status = r.status.to_string();
                w.write_record([r.check.as_str(), &n, &status, &r.lhs, &r.rhs])?;
            }
            Ok(())
        }),
        Format::Text => {
            let mut out = String::new();
            for r in &report.rows {
                let _ = writeln!(out, "{r}");
            }
            let failed = report.failures().count();
            let _ = writeln!(out, "{} checks, {} failed", report.rows.len(), failed);
            out
        }
    }
}
