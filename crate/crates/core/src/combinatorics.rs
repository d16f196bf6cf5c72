//! Partitions, variable orders and Young tableaux.
//!
//! Variables and tableau entries are labelled `1..=n`. A [`VariableOrder`]
//! `sigma` lists the labels from smallest to largest, so that
//! `x_{sigma(1)} < x_{sigma(2)} < ... < x_{sigma(n)}`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
///
/// Trailing zeros are dropped on construction, so `(2,1,0)` and `(2,1)` are
/// the same value.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.is_empty() {
            return Err(Error::ZeroSize);
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has an interior zero"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// True when two consecutive positive parts coincide.
    pub fn has_repeated_part(&self) -> bool {
        self.parts.windows(2).any(|w| w[0] == w[1])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.parts.iter().join(","))
    }
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("not a nonnegative integer: {tok:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_list(s)?)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::ZeroSize);
    }
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Dominance order: `mu <= lambda` iff every prefix sum of `mu` is at most
/// the matching prefix sum of `lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.n() != lambda.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            found: mu.n(),
        });
    }
    let len = mu.len().max(lambda.len());
    let (mut sm, mut sl) = (0, 0);
    for i in 0..len {
        sm += mu.part(i);
        sl += lambda.part(i);
        if sm > sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The minimum gap `lambda_{i-1} - lambda_i` between consecutive positive parts.
pub fn min_gap_k(lambda: &Partition) -> Result<usize> {
    lambda
        .parts
        .windows(2)
        .map(|w| w[0] - w[1])
        .min()
        .ok_or_else(|| Error::SingleRow(lambda.to_string()))
}

/// The partition of `n - 1` whose Specht ideal is the elimination ideal of
/// `I_lambda` with respect to the largest variable.
pub fn hat(lambda: &Partition) -> Result<Partition> {
    if lambda.part(0) < 2 {
        return Err(Error::HatUndefined(lambda.to_string()));
    }
    let target = lambda.n() - 1;
    let mut parts = vec![lambda.part(0) - 1];
    let mut lambda_prefix = lambda.part(0);
    let mut hat_prefix = parts[0];
    let mut i = 1;
    while hat_prefix < target {
        lambda_prefix += lambda.part(i);
        let prev = parts[i - 1];
        // lambda_prefix - hat_prefix >= 1 always holds: hat_prefix <= lambda_prefix - 1
        let next = prev.min(lambda_prefix - hat_prefix - 1);
        if next == 0 {
            return Err(Error::InvalidPartition(format!(
                "hat recursion stalled at ({}) for ({lambda})",
                parts.iter().join(",")
            )));
        }
        parts.push(next);
        hat_prefix += next;
        i += 1;
    }
    Partition::new(parts)
}

/// A permutation `sigma` of `1..=n` in one-line notation, read as the variable
/// order `x_{sigma(1)} < ... < x_{sigma(n)}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct VariableOrder {
    sigma: Vec<usize>,
    // position[label - 1] = 1-based position of label in sigma
    #[serde(skip)]
    position: Vec<usize>,
}

impl VariableOrder {
    pub fn new(sigma: Vec<usize>) -> Result<Self> {
        let n = sigma.len();
        if n == 0 {
            return Err(Error::ZeroSize);
        }
        let mut position = vec![0; n];
        for (i, &label) in sigma.iter().enumerate() {
            if label == 0 || label > n || position[label - 1] != 0 {
                return Err(Error::InvalidOrder(format!(
                    "{sigma:?} is not a permutation of 1..={n}"
                )));
            }
            position[label - 1] = i + 1;
        }
        Ok(VariableOrder { sigma, position })
    }

    pub fn identity(n: usize) -> Self {
        VariableOrder {
            sigma: (1..=n).collect(),
            position: (1..=n).collect(),
        }
    }

    /// Every order on `1..=n`, lexicographic in one-line notation.
    pub fn all(n: usize) -> Vec<VariableOrder> {
        (1..=n)
            .permutations(n)
            .map(|s| VariableOrder::new(s).expect("permutation"))
            .collect()
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sigma
    }

    /// `sigma(i)` for a 1-based position `i`.
    pub fn label(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    /// The 1-based position of `label`, i.e. `sigma^{-1}(label)`.
    pub fn position(&self, label: usize) -> usize {
        self.position[label - 1]
    }

    /// The largest variable label, `sigma(n)`.
    pub fn largest(&self) -> usize {
        self.sigma[self.n() - 1]
    }

    /// `x_a < x_b` in this order.
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.position(a) < self.position(b)
    }

    /// The composite `sigma . tau`, i.e. `i -> sigma(tau(i))`.
    pub fn compose(&self, tau: &VariableOrder) -> Result<VariableOrder> {
        if tau.n() != self.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                found: tau.n(),
            });
        }
        VariableOrder::new(tau.sigma.iter().map(|&t| self.label(t)).collect())
    }

    /// Drops `sigma(n)` and relabels the remaining variables order-preservingly
    /// onto `1..=n-1`. Returns the removed label and the shorter order.
    pub fn drop_largest(&self) -> Result<(usize, VariableOrder)> {
        if self.n() < 2 {
            return Err(Error::InvalidOrder(
                "cannot drop from an order on one variable".into(),
            ));
        }
        let top = self.largest();
        let rest = self.sigma[..self.n() - 1]
            .iter()
            .map(|&l| if l > top { l - 1 } else { l })
            .collect();
        Ok((top, VariableOrder::new(rest)?))
    }
}

impl TryFrom<Vec<usize>> for VariableOrder {
    type Error = Error;
    fn try_from(sigma: Vec<usize>) -> Result<Self> {
        VariableOrder::new(sigma)
    }
}

impl From<VariableOrder> for Vec<usize> {
    fn from(o: VariableOrder) -> Self {
        o.sigma
    }
}

impl fmt::Display for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.sigma.iter().join(","))
    }
}

impl FromStr for VariableOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        VariableOrder::new(parse_list(s)?)
    }
}

/// A bijective filling of a Young diagram by `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
    shape: Partition,
    // row_of[label - 1] = 1-based row index of label
    row_of: Vec<usize>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|e| Error::InvalidTableau(format!("bad shape: {e}")))?;
        let n = shape.n();
        let mut row_of = vec![0; n];
        for (r, row) in rows.iter().enumerate() {
            for &label in row {
                if label == 0 || label > n || row_of[label - 1] != 0 {
                    return Err(Error::InvalidTableau(format!(
                        "{rows:?} is not a filling by 1..={n}"
                    )));
                }
                row_of[label - 1] = r + 1;
            }
        }
        Ok(Tableau {
            rows,
            shape,
            row_of,
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.row_of.len()
    }

    /// The 1-based row containing `label`.
    pub fn row_of(&self, label: usize) -> usize {
        self.row_of[label - 1]
    }

    /// The 0-based column containing `label`.
    pub fn column_of(&self, label: usize) -> usize {
        let r = self.row_of(label) - 1;
        self.rows[r]
            .iter()
            .position(|&l| l == label)
            .expect("label in its row")
    }

    pub fn column(&self, c: usize) -> Vec<usize> {
        self.rows
            .iter()
            .take_while(|row| row.len() > c)
            .map(|row| row[c])
            .collect()
    }

    pub fn columns(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.shape.part(0)).map(move |c| self.column(c))
    }

    pub fn same_column(&self, a: usize, b: usize) -> bool {
        a != b && self.column_of(a) == self.column_of(b)
    }

    /// The entry directly above `label`, if any.
    pub fn above(&self, label: usize) -> Option<usize> {
        let r = self.row_of(label) - 1;
        (r > 0).then(|| self.rows[r - 1][self.column_of(label)])
    }

    /// The tableau with the entries `a` and `b` exchanged.
    pub fn swap(&self, a: usize, b: usize) -> Tableau {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&l| {
                        if l == a {
                            b
                        } else if l == b {
                            a
                        } else {
                            l
                        }
                    })
                    .collect()
            })
            .collect();
        Tableau::new(rows).expect("swap preserves a valid filling")
    }
}

impl Serialize for Tableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().join(",")))
            .join("/");
        f.write_str(&rows)
    }
}

/// Columns strictly increase top to bottom in `order`.
pub fn is_column_standard(t: &Tableau, order: &VariableOrder) -> bool {
    if t.n() != order.n() {
        return false;
    }
    t.rows.windows(2).all(|w| {
        w[1].iter()
            .zip(&w[0])
            .all(|(&below, &above)| order.less(above, below))
    })
}

/// Column standard and rows strictly increase left to right in `order`.
pub fn is_standard(t: &Tableau, order: &VariableOrder) -> bool {
    is_column_standard(t, order)
        && t.rows
            .iter()
            .all(|row| row.windows(2).all(|w| order.less(w[0], w[1])))
}

/// Standard fillings of `shape` by `1..=n` in the natural order.
pub(crate) fn standard_fillings(shape: &Partition) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        value: usize,
        n: usize,
        shape: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if value > n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(value);
                rec(value + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); shape.len()];
    rec(1, shape.n(), shape.parts(), &mut rows, &mut out);
    out
}

/// The tableaux of `shape` that are standard with respect to `order`, sorted
/// lexicographically by their row reading word.
pub fn standard_tableaux(shape: &Partition, order: &VariableOrder) -> Result<Vec<Tableau>> {
    if shape.n() != order.n() {
        return Err(Error::SizeMismatch {
            expected: shape.n(),
            found: order.n(),
        });
    }
    let mut out: Vec<Tableau> = standard_fillings(shape)
        .into_iter()
        .map(|rows| {
            let relabelled = rows
                .into_iter()
                .map(|row| row.into_iter().map(|p| order.label(p)).collect())
                .collect();
            Tableau::new(relabelled).expect("relabelled filling")
        })
        .collect();
    out.sort_by_key(|t| t.rows.concat());
    Ok(out)
}
