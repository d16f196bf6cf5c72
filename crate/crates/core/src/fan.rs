//! Initial ideals of `I_lambda` over all variable orders.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{hat, min_gap_k, standard_tableaux, Partition, VariableOrder};
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::specht::{
    check_specht_input, closed_form_initial_monomial, initial_ideal, InitialIdealComputer,
    MonomialIdeal,
};

/// Largest `n` for which [`enumerate_fan`] visits all `n!` orders.
pub const DEFAULT_ENUMERATION_LIMIT: usize = 8;

/// Distinct initial ideals of `I_lambda` and the orders producing each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanSummary {
    pub lambda: Partition,
    pub k: usize,
    pub total_orders: u64,
    pub distinct_count: usize,
    /// Each class lists its orders in increasing one-line order; classes are
    /// keyed by the canonical ideal.
    pub classes: BTreeMap<MonomialIdeal, Vec<VariableOrder>>,
}

impl FanSummary {
    /// The class of orders giving `ideal`, with its representative first.
    pub fn class_of(&self, ideal: &MonomialIdeal) -> Option<&[VariableOrder]> {
        self.classes.get(ideal).map(Vec::as_slice)
    }

    pub fn class_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.values().map(Vec::len)
    }
}

#[derive(Serialize)]
struct ClassJson<'a> {
    representative: &'a VariableOrder,
    size: usize,
    min_gens: &'a [Monomial],
}

#[derive(Serialize)]
struct FanJson<'a> {
    lambda: &'a Partition,
    k: usize,
    total_orders: u64,
    distinct_count: usize,
    classes: Vec<ClassJson<'a>>,
}

impl Serialize for FanSummary {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let classes = self
            .classes
            .iter()
            .map(|(ideal, orders)| ClassJson {
                representative: &orders[0],
                size: orders.len(),
                min_gens: ideal.min_gens(),
            })
            .collect();
        FanJson {
            lambda: &self.lambda,
            k: self.k,
            total_orders: self.total_orders,
            distinct_count: self.distinct_count,
            classes,
        }
        .serialize(s)
    }
}

/// `n!/(k+1)!` with `k` the minimum gap of `lambda`.
pub fn theorem_count(lambda: &Partition) -> Result<BigUint> {
    let k = min_gap_k(lambda)?;
    let n = lambda.n();
    Ok((k + 2..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i)))
}

/// Computes the initial ideal for every order on `n` variables.
pub fn enumerate_fan(lambda: &Partition) -> Result<FanSummary> {
    enumerate_fan_with_limit(lambda, DEFAULT_ENUMERATION_LIMIT)
}

pub fn enumerate_fan_with_limit(lambda: &Partition, limit: usize) -> Result<FanSummary> {
    let n = lambda.n();
    let k = min_gap_k(lambda)?;
    if n > limit {
        return Err(Error::CapacityExceeded { n, limit });
    }
    let computer = InitialIdealComputer::new(lambda)?;
    let orders = VariableOrder::all(n);
    let ideals: Vec<MonomialIdeal> = orders
        .par_iter()
        .map(|order| computer.compute(order))
        .collect::<Result<_>>()?;

    // orders are visited in increasing one-line order, so every class list
    // comes out sorted regardless of the worker count
    let mut classes: BTreeMap<MonomialIdeal, Vec<VariableOrder>> = BTreeMap::new();
    for (order, ideal) in orders.into_iter().zip(ideals) {
        classes.entry(ideal).or_default().push(order);
    }
    Ok(FanSummary {
        lambda: lambda.clone(),
        k,
        total_orders: (1..=n as u64).product(),
        distinct_count: classes.len(),
        classes,
    })
}

/// Predicts whether two orders give the same initial ideal: they must agree
/// on the first `n-k-1` positions and on the set of the remaining labels.
pub fn order_class_predictor(
    lambda: &Partition,
    sigma: &VariableOrder,
    tau: &VariableOrder,
) -> Result<bool> {
    check_specht_input(lambda, sigma)?;
    check_specht_input(lambda, tau)?;
    Ok(order_class_key(sigma, min_gap_k(lambda)?) == order_class_key(tau, min_gap_k(lambda)?))
}

/// The prefix `sigma(1..=n-k-1)` and the sorted tail; equal keys mean equal
/// predicted classes.
pub fn order_class_key(sigma: &VariableOrder, k: usize) -> (Vec<usize>, Vec<usize>) {
    let s = sigma.as_slice();
    let cut = s.len().saturating_sub(k + 1);
    let mut tail = s[cut..].to_vec();
    tail.sort_unstable();
    (s[..cut].to_vec(), tail)
}

/// `d_lambda(i)`: the total exponent of `x_i` in the initial monomials of
/// the standard tableaux of shape `lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeStatistic {
    pub lambda: Partition,
    pub order: VariableOrder,
    /// `values[i - 1] = d_lambda(i)`.
    pub values: Vec<u64>,
}

impl DegreeStatistic {
    pub fn get(&self, label: usize) -> u64 {
        self.values[label - 1]
    }

    /// `d_lambda(sigma(1)), ..., d_lambda(sigma(n))`.
    pub fn along_order(&self) -> Vec<u64> {
        self.order.as_slice().iter().map(|&l| self.get(l)).collect()
    }
}

pub fn degree_statistic(lambda: &Partition, order: &VariableOrder) -> Result<DegreeStatistic> {
    let mut values = vec![0u64; lambda.n()];
    for t in standard_tableaux(lambda, order)? {
        let m = closed_form_initial_monomial(&t, order)?;
        for (v, &e) in values.iter_mut().zip(m.exponents()) {
            *v += u64::from(e);
        }
    }
    Ok(DegreeStatistic {
        lambda: lambda.clone(),
        order: order.clone(),
        values,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Step {
    Strict,
    Tie,
    Decrease,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub statistic: DegreeStatistic,
    /// `steps[i - 1]` compares positions `i` and `i + 1` of the order.
    pub steps: Vec<Step>,
    pub failures: Vec<String>,
}

impl MonotonicityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `d(sigma(i)) <= d(sigma(i+1))`, with strict inequality exactly when
/// some standard tableau has `sigma(i)` and `sigma(i+1)` in one column.
pub fn monotonicity_check(lambda: &Partition, order: &VariableOrder) -> Result<MonotonicityReport> {
    let statistic = degree_statistic(lambda, order)?;
    let tableaux = standard_tableaux(lambda, order)?;
    let along = statistic.along_order();
    let mut steps = Vec::new();
    let mut failures = Vec::new();
    for i in 1..order.n() {
        let (a, b) = (order.label(i), order.label(i + 1));
        let step = match along[i - 1].cmp(&along[i]) {
            std::cmp::Ordering::Less => Step::Strict,
            std::cmp::Ordering::Equal => Step::Tie,
            std::cmp::Ordering::Greater => Step::Decrease,
        };
        let witness = tableaux.iter().any(|t| t.same_column(a, b));
        match step {
            Step::Decrease => failures.push(format!(
                "d decreases from sigma({i}) = {a} to sigma({}) = {b}",
                i + 1
            )),
            Step::Strict if !witness => {
                failures.push(format!("strict at {i} without a same-column tableau"))
            }
            Step::Tie if witness => {
                failures.push(format!("tie at {i} despite a same-column tableau"))
            }
            _ => {}
        }
        steps.push(step);
    }
    Ok(MonotonicityReport {
        statistic,
        steps,
        failures,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Passed,
    Failed,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationReport {
    pub lambda: Partition,
    pub order: VariableOrder,
    pub hat: Option<Partition>,
    pub status: CheckStatus,
    /// Minimal generators of `in(I_lambda)` avoiding `x_{sigma(n)}`.
    pub restricted: Vec<Monomial>,
    /// Minimal generators of `in(I_hat)`, embedded back into `n` variables.
    pub hat_generators: Vec<Monomial>,
}

/// Checks that the minimal generators of `in(I_lambda)` free of the largest
/// variable are exactly the minimal generators of `in(I_hat(lambda))` for the
/// order restricted to the other `n-1` variables.
pub fn elimination_identity_check(
    lambda: &Partition,
    order: &VariableOrder,
) -> Result<EliminationReport> {
    check_specht_input(lambda, order)?;
    let hat_lambda = hat(lambda)?;
    let mut report = EliminationReport {
        lambda: lambda.clone(),
        order: order.clone(),
        hat: Some(hat_lambda.clone()),
        status: CheckStatus::Skipped,
        restricted: Vec::new(),
        hat_generators: Vec::new(),
    };
    if hat_lambda.len() < 2 {
        return Ok(report);
    }
    let n = lambda.n();
    let ideal = initial_ideal(lambda, order)?;
    let (top, smaller) = order.drop_largest()?;
    let small_ideal = initial_ideal(&hat_lambda, &smaller)?;

    let mut restricted = ideal.avoiding(top);
    let mut embedded: Vec<Monomial> = small_ideal
        .min_gens()
        .iter()
        .map(|g| {
            let mut e = g.exponents().to_vec();
            e.insert(top - 1, 0);
            Monomial::new(e)
        })
        .collect();
    debug_assert!(embedded.iter().all(|m| m.n() == n));
    restricted.sort_by(|a, b| b.exponents().cmp(a.exponents()));
    embedded.sort_by(|a, b| b.exponents().cmp(a.exponents()));
    report.status = if restricted == embedded {
        CheckStatus::Passed
    } else {
        CheckStatus::Failed
    };
    report.restricted = restricted;
    report.hat_generators = embedded;
    Ok(report)
}
