use std::fs;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::ValueEnum;
use serde::Serialize;
use specht_core::fan::FanSummary;
use specht_core::oracle::{EliminationPolynomialReport, OracleReport};
use specht_core::polytope::{PointSet, VertexBijection};
use specht_core::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Writes either the JSON document or the CSV rows of a result.
pub struct Emitter {
    format: Format,
    path: Option<PathBuf>,
}

impl Emitter {
    pub fn new(format: Format, path: Option<PathBuf>) -> Self {
        Emitter { format, path }
    }

    pub fn rows<J: Serialize + ?Sized, R: Serialize>(&self, json: &J, rows: &[R]) -> Result<()> {
        let bytes = match self.format {
            Format::Json => {
                let mut b = serde_json::to_vec(json)?;
                b.push(b'\n');
                b
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for r in rows {
                    w.serialize(r)?;
                }
                w.into_inner().context("flushing CSV")?
            }
        };
        match &self.path {
            Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
            None => std::io::stdout()
                .lock()
                .write_all(&bytes)
                .context("writing to stdout"),
        }
    }
}

fn exps(m: &Monomial) -> String {
    m.exponents()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn coords(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ")
}

fn gens(ms: &[Monomial]) -> String {
    ms.iter()
        .map(Monomial::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize)]
pub struct CountRow {
    pub n: usize,
    pub lambda: String,
    pub k: usize,
    pub theorem_count: String,
    pub brute_force_count: Option<usize>,
    pub agree: Option<bool>,
}

#[derive(Serialize)]
pub struct MonomialRow {
    monomial: String,
    exponents: String,
}

pub fn monomial_list(ms: &[Monomial]) -> Vec<MonomialRow> {
    ms.iter()
        .map(|m| MonomialRow {
            monomial: m.to_string(),
            exponents: exps(m),
        })
        .collect()
}

#[derive(Serialize)]
pub struct FanRow {
    representative: String,
    size: usize,
    min_gens: String,
}

pub fn fan_rows(fan: &FanSummary) -> Vec<FanRow> {
    fan.classes
        .iter()
        .map(|(ideal, orders)| FanRow {
            representative: orders[0].to_string(),
            size: orders.len(),
            min_gens: gens(ideal.min_gens()),
        })
        .collect()
}

#[derive(Serialize)]
pub struct VertexRow {
    vertex: String,
    sigma: Option<String>,
    min_gens: Option<String>,
}

pub fn vertex_rows(set: &PointSet) -> Vec<VertexRow> {
    set.vertices
        .iter()
        .map(|v| VertexRow {
            vertex: coords(v),
            sigma: None,
            min_gens: None,
        })
        .collect()
}

pub fn bijection_rows(b: &VertexBijection) -> Vec<VertexRow> {
    b.entries
        .iter()
        .map(|e| VertexRow {
            vertex: coords(&e.vertex),
            sigma: Some(e.sigma.to_string()),
            min_gens: Some(gens(e.min_gens.min_gens())),
        })
        .collect()
}

#[derive(Serialize)]
pub struct OracleRow {
    check: String,
    lambda: String,
    sigma: String,
    reductions: usize,
    failures: usize,
    pass: bool,
}

impl From<&OracleReport> for OracleRow {
    fn from(r: &OracleReport) -> Self {
        OracleRow {
            check: r.check.clone(),
            lambda: r.lambda.to_string(),
            sigma: r.sigma.to_string(),
            reductions: r.pairs_reduced,
            failures: r.failures.len(),
            pass: r.passed(),
        }
    }
}

impl From<&EliminationPolynomialReport> for OracleRow {
    fn from(r: &EliminationPolynomialReport) -> Self {
        OracleRow {
            check: r.check.clone(),
            lambda: r.lambda.to_string(),
            sigma: r.sigma.to_string(),
            reductions: r.forward_reductions + r.backward_reductions,
            failures: r.failures.len(),
            pass: r.passed(),
        }
    }
}
