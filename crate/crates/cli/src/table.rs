//! Typed output tables with CSV and JSON renderings.

use std::fmt;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Map, Value};
use ucm_core::{rational, Rational, SurdSum};

use crate::decimal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Integer,
    Exact,
    Surd,
    Decimal,
    Flag,
    Text,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Integer(u64),
    Exact(Rational),
    Surd(SurdSum),
    Decimal(f64),
    Flag(bool),
    Text(String),
}

impl Cell {
    pub fn kind(&self) -> Kind {
        match self {
            Cell::Integer(_) => Kind::Integer,
            Cell::Exact(_) => Kind::Exact,
            Cell::Surd(_) => Kind::Surd,
            Cell::Decimal(_) => Kind::Decimal,
            Cell::Flag(_) => Kind::Flag,
            Cell::Text(_) => Kind::Text,
        }
    }

    fn parse(kind: Kind, field: &str) -> Result<Self> {
        Ok(match kind {
            Kind::Integer => Cell::Integer(field.parse()?),
            Kind::Exact => Cell::Exact(
                rational::parse(field).ok_or_else(|| anyhow!("not a rational: {field:?}"))?,
            ),
            Kind::Surd => Cell::Surd(field.parse()?),
            Kind::Decimal => Cell::Decimal(
                decimal::parse(field).ok_or_else(|| anyhow!("not a decimal: {field:?}"))?,
            ),
            Kind::Flag => Cell::Flag(field.parse()?),
            Kind::Text => Cell::Text(field.to_string()),
        })
    }

    fn to_json(&self) -> Value {
        match self {
            Cell::Integer(v) => json!(v),
            Cell::Exact(r) => {
                json!({ "exact": rational::render(r), "decimal": decimal::render(rational::to_f64(r)) })
            }
            Cell::Surd(s) => {
                json!({ "exact": s.to_string(), "decimal": decimal::render(s.to_f64()) })
            }
            Cell::Decimal(x) => json!(decimal::render(*x)),
            Cell::Flag(b) => json!(b),
            Cell::Text(t) => json!(t),
        }
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Integer(v) => write!(f, "{v}"),
            Cell::Exact(r) => f.write_str(&rational::render(r)),
            Cell::Surd(s) => write!(f, "{s}"),
            Cell::Decimal(x) => f.write_str(&decimal::render(*x)),
            Cell::Flag(b) => write!(f, "{b}"),
            Cell::Text(t) => f.write_str(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    columns: Vec<(&'static str, Kind)>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[(&'static str, Kind)]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        for (cell, (name, kind)) in row.iter().zip(&self.columns) {
            assert_eq!(cell.kind(), *kind, "column {name}");
        }
        self.rows.push(row);
    }

    pub fn header(&self) -> Vec<&'static str> {
        self.columns.iter().map(|(n, _)| *n).collect()
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let idx = self.columns.iter().position(|(n, _)| *n == name)?;
        Some(self.rows.iter().map(|r| &r[idx]).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.header()).unwrap();
        for row in &self.rows {
            w.write_record(row.iter().map(|c| c.to_string())).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|((name, _), cell)| (name.to_string(), cell.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        let mut out = serde_json::to_string_pretty(&rows).unwrap();
        out.push('\n');
        out
    }

    /// Reads CSV written by [`Table::to_csv`] back against a known column layout.
    pub fn from_csv(columns: &[(&'static str, Kind)], text: &str) -> Result<Self> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header: Vec<String> = r.headers()?.iter().map(str::to_string).collect();
        let expected: Vec<&str> = columns.iter().map(|(n, _)| *n).collect();
        if header != expected {
            bail!("header {header:?} does not match {expected:?}");
        }
        let mut table = Table::new(columns);
        for (line, record) in r.records().enumerate() {
            let record = record?;
            let row = record
                .iter()
                .zip(columns)
                .map(|(field, (name, kind))| {
                    Cell::parse(*kind, field)
                        .with_context(|| format!("row {}, column {name}", line + 1))
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        Ok(table)
    }
}
