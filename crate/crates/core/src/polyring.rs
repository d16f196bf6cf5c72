//! Sparse multivariate polynomials over the integers.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinatorics::VariableOrder;
use crate::error::{Error, Result};

/// A monomial `x_1^{e_1} ... x_n^{e_n}`, stored densely.
///
/// `Ord` is the lex order with `x_1 < x_2 < ... < x_n`
/// (the last exponent decides first). Use [`lex_compare`] for other orders.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_label` (1-based).
    pub fn var(n: usize, label: usize) -> Self {
        let mut e = vec![0; n];
        e[label - 1] = 1;
        Monomial(e)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_label` (1-based).
    pub fn deg(&self, label: usize) -> u32 {
        self.0[label - 1]
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// `self / other`, if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        other
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    /// Image under the substitution `x_i -> x_{map(i)}` (labels 1-based).
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Monomial {
        let mut e = vec![0; self.n()];
        for (i, &a) in self.0.iter().enumerate() {
            e[map(i + 1) - 1] = a;
        }
        Monomial(e)
    }
}

impl Mul for &Monomial {
    type Output = Monomial;
    fn mul(self, rhs: &Monomial) -> Monomial {
        assert_eq!(self.n(), rhs.n(), "monomials from different rings");
        Monomial(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Lex comparison with `x_{sigma(1)} < ... < x_{sigma(n)}`: the exponent of
/// `x_{sigma(n)}` is compared first.
pub fn lex_compare(a: &Monomial, b: &Monomial, order: &VariableOrder) -> Ordering {
    assert_eq!(a.n(), b.n(), "monomials from different rings");
    assert_eq!(a.n(), order.n(), "order on a different number of variables");
    for i in (1..=order.n()).rev() {
        let label = order.label(i);
        match a.deg(label).cmp(&b.deg(label)) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    Ordering::Equal
}

/// A polynomial with integer coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(n, Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn var(n: usize, label: usize) -> Self {
        Self::monomial(n, Monomial::var(n, label), 1)
    }

    pub fn monomial(n: usize, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Polynomial::zero(n);
        p.add_term(m, c.into());
        p
    }

    /// `x_a - x_b`.
    pub fn difference(n: usize, a: usize, b: usize) -> Self {
        &Self::var(n, a) - &Self::var(n, b)
    }

    pub fn from_terms(
        n: usize,
        terms: impl IntoIterator<Item = (Monomial, BigInt)>,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: m.n(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending identity-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        debug_assert_eq!(m.n(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn leading_term(&self, order: &VariableOrder) -> Result<(Monomial, BigInt)> {
        self.terms
            .iter()
            .max_by(|a, b| lex_compare(a.0, b.0, order))
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self, order: &VariableOrder) -> Result<Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    /// The sum of the terms of maximal `w`-weight.
    pub fn initial_form(&self, w: &WeightVector) -> Result<Polynomial> {
        if w.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                found: w.len(),
            });
        }
        let weights: Vec<(BigRational, &Monomial, &BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| (w.weight(m), m, c))
            .collect();
        let top = weights
            .iter()
            .map(|t| &t.0)
            .max()
            .ok_or(Error::ZeroPolynomial)?;
        let mut out = Polynomial::zero(self.n);
        for (wt, m, c) in &weights {
            if wt == top {
                out.add_term((*m).clone(), (*c).clone());
            }
        }
        Ok(out)
    }

    /// Image under `x_i -> x_{map(i)}`; `map` must be injective into `1..=n`.
    pub fn relabel(&self, n: usize, map: impl Fn(usize) -> usize) -> Polynomial {
        let mut out = Polynomial::zero(n);
        for (m, c) in &self.terms {
            let mut e = vec![0; n];
            for (i, &a) in m.exponents().iter().enumerate() {
                e[map(i + 1) - 1] = a;
            }
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Whether `x_label` occurs in some term.
    pub fn involves(&self, label: usize) -> bool {
        self.terms.keys().any(|m| m.deg(label) > 0)
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Exact product of two polynomials.
pub fn multiply(f: &Polynomial, g: &Polynomial) -> Polynomial {
    f * g
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomials from different rings");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "polynomials from different rings");
        let mut out = Polynomial::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a * b, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (sign, abs) = if c.is_negative() {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if i > 0 {
                write!(f, " {sign} ")?;
            } else if sign == "-" {
                f.write_str("-")?;
            }
            match (abs.is_one(), m.is_one()) {
                (true, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{abs}")?,
                (false, false) => write!(f, "{abs}*{m}")?,
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: String,
    exps: Vec<u32>,
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                exps: m.0.clone(),
            })
            .collect();
        terms.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let terms = Vec::<TermJson>::deserialize(d)?;
        let n = terms
            .first()
            .map(|t| t.exps.len())
            .ok_or_else(|| D::Error::custom("empty term list has no ambient dimension"))?;
        let parsed = terms
            .into_iter()
            .map(|t| {
                let c: BigInt = t.coeff.parse().map_err(D::Error::custom)?;
                Ok((Monomial(t.exps), c))
            })
            .collect::<std::result::Result<Vec<_>, D::Error>>()?;
        Polynomial::from_terms(n, parsed).map_err(D::Error::custom)
    }
}

/// A rational weight vector on the variables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<BigRational>);

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Self {
        WeightVector(weights)
    }

    pub fn from_integers(weights: &[i64]) -> Self {
        WeightVector(
            weights
                .iter()
                .map(|&w| BigRational::from_integer(w.into()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.0
    }

    /// `w_label` (1-based).
    pub fn get(&self, label: usize) -> &BigRational {
        &self.0[label - 1]
    }

    /// Inner product of the exponent vector with `w`.
    pub fn weight(&self, m: &Monomial) -> BigRational {
        self.0
            .iter()
            .zip(m.exponents())
            .filter(|(_, &e)| e > 0)
            .fold(BigRational::zero(), |acc, (w, &e)| {
                acc + w * BigRational::from_integer(e.into())
            })
    }
}
