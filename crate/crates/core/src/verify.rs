//! Deterministic property suite over all partitions up to a given size.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    enumerate_partitions, hat, min_gap_k, standard_tableaux, Partition, VariableOrder,
};
use crate::error::{Error, Result};
use crate::fan::{
    elimination_identity_check, enumerate_fan, monotonicity_check, order_class_key, theorem_count,
    CheckStatus, DEFAULT_ENUMERATION_LIMIT,
};
use crate::oracle::{
    certify_specht, elimination_polynomial_check, GeneratorSet, DEFAULT_ORACLE_LIMIT,
};
use crate::polytope::{
    affine_dimension, braid_refinement_check, pnk_vertices, vertex_ideal_bijection, ConeSelection,
};
use crate::specht::{
    closed_form_initial_monomial, gap_condition_audit, specht_polynomial,
    universal_groebner_tableaux,
};

pub const DEFAULT_SEED: u64 = 20_240_601;
pub const DEFAULT_ORDERS_PER_SHAPE: usize = 10;
/// Largest `n` for which refinement visits every braid cone.
pub const EXHAUSTIVE_REFINEMENT_LIMIT: usize = 5;

/// Groups of checks that can be switched off.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subsystem {
    Fan,
    Polytope,
    Oracle,
}

impl FromStr for Subsystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fan" => Ok(Subsystem::Fan),
            "polytope" => Ok(Subsystem::Polytope),
            "oracle" => Ok(Subsystem::Oracle),
            other => Err(Error::Parse(format!("unknown subsystem {other:?}"))),
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subsystem::Fan => "fan",
            Subsystem::Polytope => "polytope",
            Subsystem::Oracle => "oracle",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub n_max: usize,
    pub seed: u64,
    pub orders_per_shape: usize,
    pub skip: BTreeSet<Subsystem>,
}

impl VerifyConfig {
    pub fn new(n_max: usize) -> Self {
        VerifyConfig {
            n_max,
            seed: DEFAULT_SEED,
            orders_per_shape: DEFAULT_ORDERS_PER_SHAPE,
            skip: BTreeSet::new(),
        }
    }

    fn runs(&self, s: Subsystem) -> bool {
        !self.skip.contains(&s)
    }
}

/// One line of the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub check: String,
    pub instance: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct VerifyReport {
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    /// `(passed, total)` per check name.
    pub fn tally(&self) -> BTreeMap<&str, (usize, usize)> {
        let mut out: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
        for r in &self.rows {
            let e = out.entry(r.check.as_str()).or_default();
            e.0 += usize::from(r.pass);
            e.1 += 1;
        }
        out
    }
}

/// The shapes the suite visits: every partition of `2..=n_max` with at
/// least two rows, by size and then in decreasing lex order.
pub fn suite_shapes(n_max: usize) -> Result<Vec<Partition>> {
    let mut shapes = Vec::new();
    for n in 2..=n_max {
        shapes.extend(
            enumerate_partitions(n)?
                .into_iter()
                .filter(|l| l.len() >= 2),
        );
    }
    Ok(shapes)
}

/// Draws `count` uniform orders per shape from one seeded stream.
pub fn sample_orders(shapes: &[Partition], count: usize, seed: u64) -> Vec<Vec<VariableOrder>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    shapes
        .iter()
        .map(|lambda| {
            (0..count)
                .map(|_| {
                    let mut s: Vec<usize> = (1..=lambda.n()).collect();
                    s.shuffle(&mut rng);
                    VariableOrder::new(s).expect("a shuffle is a permutation")
                })
                .collect()
        })
        .collect()
}

fn row(check: &str, instance: String, pass: bool) -> CheckRow {
    CheckRow {
        check: check.into(),
        instance,
        pass,
    }
}

fn shape_instance(lambda: &Partition) -> String {
    format!("lambda={lambda}")
}

fn order_instance(lambda: &Partition, sigma: &VariableOrder) -> String {
    format!("lambda={lambda} sigma={sigma}")
}

/// Theorem violations become failing rows; anything else is a real error.
fn outcome(r: Result<bool>) -> Result<bool> {
    match r {
        Err(Error::TheoremViolation(_)) => Ok(false),
        other => other,
    }
}

fn fan_rows(lambda: &Partition, orders: &[VariableOrder]) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let fan = enumerate_fan(lambda)?;
    let k = fan.k;
    let expected = theorem_count(lambda)?;
    rows.push(row(
        "count",
        shape_instance(lambda),
        BigUint::from(fan.distinct_count) == expected,
    ));

    // every class is one predictor key, and distinct classes have distinct keys
    let mut keys = BTreeSet::new();
    let mut consistent = true;
    for class in fan.classes.values() {
        let key = order_class_key(&class[0], k);
        consistent &= class.iter().all(|s| order_class_key(s, k) == key);
        consistent &= keys.insert(key);
    }
    rows.push(row("class_predictor", shape_instance(lambda), consistent));
    if lambda.has_repeated_part() {
        rows.push(row(
            "repeated_part_singletons",
            shape_instance(lambda),
            fan.class_sizes().all(|s| s == 1),
        ));
    }

    let eliminable = matches!(hat(lambda), Ok(h) if h.len() >= 2);
    for sigma in orders {
        let inst = order_instance(lambda, sigma);
        rows.push(row(
            "gap_audit",
            inst.clone(),
            gap_condition_audit(lambda, sigma)?.passed(),
        ));
        rows.push(row(
            "monotonicity",
            inst.clone(),
            monotonicity_check(lambda, sigma)?.passed(),
        ));
        if eliminable {
            let status = elimination_identity_check(lambda, sigma)?.status;
            rows.push(row(
                "elimination_monomial",
                inst,
                status == CheckStatus::Passed,
            ));
        }
    }
    Ok(rows)
}

fn polytope_rows(lambda: &Partition, orders: &[VariableOrder], seed: u64) -> Result<Vec<CheckRow>> {
    let n = lambda.n();
    let k = min_gap_k(lambda)?;
    let mut rows = Vec::new();
    let vertices = pnk_vertices(n, k)?;
    let dims_ok = BigUint::from(vertices.len()) == theorem_count(lambda)?
        && affine_dimension(&vertices.vertices) == n - 1;
    rows.push(row("polytope_vertices", shape_instance(lambda), dims_ok));
    let bijection =
        outcome(vertex_ideal_bijection(lambda, seed).map(|b| b.len() == vertices.len()))?;
    rows.push(row("polytope_bijection", shape_instance(lambda), bijection));
    if n <= EXHAUSTIVE_REFINEMENT_LIMIT {
        let r = braid_refinement_check(lambda, ConeSelection::All)?;
        rows.push(row(
            "braid_refinement",
            format!("lambda={lambda} cones=all"),
            r.passed(),
        ));
    } else {
        for sigma in orders {
            let r = braid_refinement_check(lambda, ConeSelection::Given(vec![sigma.clone()]))?;
            rows.push(row(
                "braid_refinement",
                order_instance(lambda, sigma),
                r.passed(),
            ));
        }
    }
    Ok(rows)
}

fn oracle_rows(lambda: &Partition, orders: &[VariableOrder]) -> Result<Vec<CheckRow>> {
    let mut rows = Vec::new();
    let eliminable = matches!(hat(lambda), Ok(h) if h.len() >= 2);
    for sigma in orders {
        let inst = order_instance(lambda, sigma);
        let closed_form = universal_groebner_tableaux(lambda, sigma)?.iter().all(|t| {
            let expanded = specht_polynomial(t).leading_monomial(sigma);
            matches!((closed_form_initial_monomial(t, sigma), expanded), (Ok(a), Ok(b)) if a == b)
        });
        rows.push(row("closed_form", inst.clone(), closed_form));
        if lambda.n() > DEFAULT_ORACLE_LIMIT {
            continue;
        }
        let lex = certify_specht(lambda, sigma, GeneratorSet::Lex, DEFAULT_ORACLE_LIMIT)?;
        rows.push(row("groebner_lex", inst.clone(), lex.passed()));
        let universal =
            certify_specht(lambda, sigma, GeneratorSet::Universal, DEFAULT_ORACLE_LIMIT)?;
        rows.push(row("groebner_universal", inst.clone(), universal.passed()));
        if eliminable {
            let r = elimination_polynomial_check(lambda, sigma, DEFAULT_ORACLE_LIMIT)?;
            rows.push(row("elimination_polynomial", inst, r.passed()));
        }
    }
    Ok(rows)
}

/// Runs every enabled check; rows come out in a fixed order that depends
/// only on the configuration.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.n_max < 2 {
        return Err(Error::InvalidArgument(format!(
            "n_max must be at least 2, got {}",
            config.n_max
        )));
    }
    if config.n_max > DEFAULT_ENUMERATION_LIMIT {
        return Err(Error::CapacityExceeded {
            n: config.n_max,
            limit: DEFAULT_ENUMERATION_LIMIT,
        });
    }
    let shapes = suite_shapes(config.n_max)?;
    let samples = sample_orders(&shapes, config.orders_per_shape, config.seed);
    let per_shape: Vec<Vec<CheckRow>> = shapes
        .par_iter()
        .zip(&samples)
        .enumerate()
        .map(|(idx, (lambda, orders))| {
            let mut rows = vec![row(
                "standard_tableaux",
                shape_instance(lambda),
                !standard_tableaux(lambda, &VariableOrder::identity(lambda.n()))?.is_empty(),
            )];
            if config.runs(Subsystem::Fan) {
                rows.extend(fan_rows(lambda, orders)?);
            }
            if config.runs(Subsystem::Polytope) {
                rows.extend(polytope_rows(
                    lambda,
                    orders,
                    config.seed.wrapping_add(idx as u64),
                )?);
            }
            if config.runs(Subsystem::Oracle) {
                rows.extend(oracle_rows(lambda, orders)?);
            }
            Ok(rows)
        })
        .collect::<Result<_>>()?;
    Ok(VerifyReport {
        rows: per_shape.into_iter().flatten().collect(),
    })
}
