//! Buchberger-style verification over the rationals.
//!
//! Everything here works on fully expanded polynomials and is independent of
//! the closed-form initial monomials used by [`crate::specht`]. Polynomials
//! are re-keyed so that the natural order on exponent keys is the lex order
//! of the basis, which makes leading terms a `BTreeMap::last_key_value`.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::combinatorics::{hat, Partition, VariableOrder};
use crate::error::{Error, Result};
use crate::polyring::{lex_compare, Monomial, Polynomial};
use crate::specht::{
    check_specht_input, lex_groebner_generators, universal_groebner_generators, SpechtSystem,
};

/// Largest `n` the polynomial-level checks accept by default.
pub const DEFAULT_ORACLE_LIMIT: usize = 5;

/// A polynomial with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPolynomial {
    n: usize,
    terms: BTreeMap<Monomial, BigRational>,
}

impl RatPolynomial {
    pub fn zero(n: usize) -> Self {
        RatPolynomial {
            n,
            terms: BTreeMap::new(),
        }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    /// The integer polynomial, when every coefficient is integral.
    pub fn to_integer(&self) -> Option<Polynomial> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| c.is_integer().then(|| (m.clone(), c.to_integer())))
            .collect::<Option<Vec<_>>>()?;
        Polynomial::from_terms(self.n, terms).ok()
    }
}

impl From<&Polynomial> for RatPolynomial {
    fn from(p: &Polynomial) -> Self {
        RatPolynomial {
            n: p.n(),
            terms: p
                .terms()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone())))
                .collect(),
        }
    }
}

impl Serialize for RatPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: String,
            exps: &'a [u32],
        }
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(m, c)| Term {
                coeff: c.to_string(),
                exps: m.exponents(),
            })
            .collect();
        terms.serialize(s)
    }
}

type Key = Vec<u32>;
type Keyed = BTreeMap<Key, BigRational>;

/// Exponents listed from the largest variable down, so that `Vec` order is lex.
fn to_key(m: &Monomial, order: &VariableOrder) -> Key {
    (1..=order.n())
        .rev()
        .map(|i| m.deg(order.label(i)))
        .collect()
}

fn from_key(key: &[u32], order: &VariableOrder) -> Monomial {
    let n = order.n();
    let mut e = vec![0; n];
    for (j, &a) in key.iter().enumerate() {
        e[order.label(n - j) - 1] = a;
    }
    Monomial::new(e)
}

fn key_divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_into(p: &mut Keyed, key: Key, c: BigRational) {
    use std::collections::btree_map::Entry;
    match p.entry(key) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

fn keyed_rat(p: &RatPolynomial, order: &VariableOrder) -> Keyed {
    p.terms
        .iter()
        .map(|(m, c)| (to_key(m, order), c.clone()))
        .collect()
}

fn unkey(p: &Keyed, order: &VariableOrder) -> RatPolynomial {
    RatPolynomial {
        n: order.n(),
        terms: p
            .iter()
            .map(|(k, c)| (from_key(k, order), c.clone()))
            .collect(),
    }
}

/// A generating set with each element's lex leading monomial marked.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MarkedBasis {
    pub order: VariableOrder,
    pub elements: Vec<(Polynomial, Monomial)>,
}

impl MarkedBasis {
    /// Marks the lex leading monomial of every polynomial.
    pub fn new(order: &VariableOrder, polys: impl IntoIterator<Item = Polynomial>) -> Result<Self> {
        let elements = polys
            .into_iter()
            .map(|p| {
                if p.n() != order.n() {
                    return Err(Error::SizeMismatch {
                        expected: order.n(),
                        found: p.n(),
                    });
                }
                let lm = p.leading_monomial(order)?;
                Ok((p, lm))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MarkedBasis {
            order: order.clone(),
            elements,
        })
    }

    pub fn from_system(system: &SpechtSystem) -> Result<Self> {
        MarkedBasis::new(&system.order, system.polynomials().cloned())
    }

    /// Checks that every mark is a lex-maximal term of its polynomial.
    pub fn is_consistent(&self) -> bool {
        self.elements.iter().all(|(p, m)| {
            !p.coeff(m).is_zero()
                && p.terms()
                    .all(|(t, _)| lex_compare(t, m, &self.order) != std::cmp::Ordering::Greater)
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    fn prepared(&self) -> Prepared {
        let mut elems: Vec<PreparedElement> = self
            .elements
            .iter()
            .enumerate()
            .map(|(index, (p, mark))| {
                let lead = to_key(mark, &self.order);
                let lc = BigRational::from_integer(p.coeff(mark));
                let rest = p
                    .terms()
                    .filter(|(m, _)| *m != mark)
                    .map(|(m, c)| (to_key(m, &self.order), BigRational::from_integer(c.clone())))
                    .collect();
                PreparedElement {
                    index,
                    lead,
                    lc,
                    rest,
                }
            })
            .collect();
        // lex-smallest mark first, then basis position
        elems.sort_by(|a, b| a.lead.cmp(&b.lead).then(a.index.cmp(&b.index)));
        Prepared { elems }
    }
}

struct PreparedElement {
    index: usize,
    lead: Key,
    lc: BigRational,
    rest: Vec<(Key, BigRational)>,
}

struct Prepared {
    elems: Vec<PreparedElement>,
}

impl Prepared {
    fn reduce(&self, mut p: Keyed) -> Keyed {
        let mut remainder = Keyed::new();
        while let Some((lead, c)) = p.pop_last() {
            match self.elems.iter().find(|g| key_divides(&g.lead, &lead)) {
                Some(g) => {
                    let shift: Key = lead.iter().zip(&g.lead).map(|(a, b)| a - b).collect();
                    let factor = c / &g.lc;
                    for (k, gc) in &g.rest {
                        let key = k.iter().zip(&shift).map(|(a, b)| a + b).collect();
                        add_into(&mut p, key, -(&factor * gc));
                    }
                }
                None => {
                    remainder.insert(lead, c);
                }
            }
        }
        remainder
    }
}

/// The remainder of `f` on division by `basis`: no term of the result is
/// divisible by a marked monomial.
pub fn reduce(f: &RatPolynomial, basis: &MarkedBasis) -> Result<RatPolynomial> {
    if basis.is_empty() {
        return Err(Error::EmptyInput);
    }
    if f.n() != basis.order.n() {
        return Err(Error::SizeMismatch {
            expected: basis.order.n(),
            found: f.n(),
        });
    }
    let rem = basis.prepared().reduce(keyed_rat(f, &basis.order));
    Ok(unkey(&rem, &basis.order))
}

fn keyed_int(p: &Polynomial, order: &VariableOrder) -> Keyed {
    p.terms()
        .map(|(m, c)| (to_key(m, order), BigRational::from_integer(c.clone())))
        .collect()
}

fn s_polynomial_keyed(f: &Keyed, g: &Keyed) -> Keyed {
    let (lf, cf) = f.last_key_value().expect("nonzero");
    let (lg, cg) = g.last_key_value().expect("nonzero");
    let lcm: Key = lf.iter().zip(lg).map(|(a, b)| *a.max(b)).collect();
    let mut out = Keyed::new();
    for (src, lead, lc, sign) in [
        (f, lf, cf, BigRational::one()),
        (g, lg, cg, -BigRational::one()),
    ] {
        let shift: Key = lcm.iter().zip(lead).map(|(a, b)| a - b).collect();
        let scale = sign / lc;
        for (k, c) in src {
            let key = k.iter().zip(&shift).map(|(a, b)| a + b).collect();
            add_into(&mut out, key, &scale * c);
        }
    }
    out
}

/// `(L / lt(f)) f - (L / lt(g)) g` with `L` the lcm of the leading monomials.
pub fn s_polynomial(
    f: &Polynomial,
    g: &Polynomial,
    order: &VariableOrder,
) -> Result<RatPolynomial> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    for p in [f, g] {
        if p.n() != order.n() {
            return Err(Error::SizeMismatch {
                expected: order.n(),
                found: p.n(),
            });
        }
    }
    Ok(unkey(
        &s_polynomial_keyed(&keyed_int(f, order), &keyed_int(g, order)),
        order,
    ))
}

/// Outcome of Buchberger's S-pair criterion on a marked basis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroebnerCertificate {
    pub pairs_total: usize,
    pub pairs_skipped_coprime: usize,
    pub pairs_reduced: usize,
    /// Basis positions `(i, j)` whose S-polynomial has a nonzero remainder.
    pub failures: Vec<(usize, usize)>,
}

impl GroebnerCertificate {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Reduces every S-polynomial of the basis; the basis is a Groebner basis of
/// the ideal it generates iff all remainders vanish.
pub fn certify_groebner(basis: &MarkedBasis) -> GroebnerCertificate {
    let order = &basis.order;
    let prepared = basis.prepared();
    let keyed: Vec<Keyed> = basis
        .elements
        .iter()
        .map(|(p, _)| keyed_int(p, order))
        .collect();
    let pairs: Vec<(usize, usize)> = (0..keyed.len())
        .flat_map(|i| (i + 1..keyed.len()).map(move |j| (i, j)))
        .collect();
    let outcomes: Vec<Option<bool>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (mi, mj) = (&basis.elements[i].1, &basis.elements[j].1);
            if mi.is_coprime(mj) {
                return None;
            }
            let s = s_polynomial_keyed(&keyed[i], &keyed[j]);
            Some(prepared.reduce(s).is_empty())
        })
        .collect();
    let mut cert = GroebnerCertificate {
        pairs_total: pairs.len(),
        pairs_skipped_coprime: 0,
        pairs_reduced: 0,
        failures: Vec::new(),
    };
    for (pair, outcome) in pairs.into_iter().zip(outcomes) {
        match outcome {
            None => cert.pairs_skipped_coprime += 1,
            Some(ok) => {
                cert.pairs_reduced += 1;
                if !ok {
                    cert.failures.push(pair);
                }
            }
        }
    }
    cert
}

/// Which generating set of `I_lambda` to certify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GeneratorSet {
    Lex,
    Universal,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub check: String,
    pub lambda: Partition,
    pub sigma: VariableOrder,
    pub pairs_total: usize,
    pub pairs_skipped_coprime: usize,
    pub pairs_reduced: usize,
    pub failures: Vec<String>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn check_oracle_size(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::CapacityExceeded { n, limit });
    }
    Ok(())
}

/// Certifies a Specht generating set as a lex Groebner basis.
pub fn certify_specht(
    lambda: &Partition,
    order: &VariableOrder,
    set: GeneratorSet,
    limit: usize,
) -> Result<OracleReport> {
    check_specht_input(lambda, order)?;
    check_oracle_size(lambda.n(), limit)?;
    let system = match set {
        GeneratorSet::Lex => lex_groebner_generators(lambda, order)?,
        GeneratorSet::Universal => universal_groebner_generators(lambda, order)?,
    };
    let basis = MarkedBasis::from_system(&system)?;
    let cert = certify_groebner(&basis);
    let failures = cert
        .failures
        .iter()
        .map(|&(i, j)| {
            format!(
                "S({}, {}) does not reduce to zero",
                system.generators[i].tableau, system.generators[j].tableau
            )
        })
        .collect();
    let check = match set {
        GeneratorSet::Lex => "groebner_lex",
        GeneratorSet::Universal => "groebner_universal",
    };
    Ok(OracleReport {
        check: check.into(),
        lambda: lambda.clone(),
        sigma: order.clone(),
        pairs_total: cert.pairs_total,
        pairs_skipped_coprime: cert.pairs_skipped_coprime,
        pairs_reduced: cert.pairs_reduced,
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EliminationPolynomialReport {
    pub check: String,
    pub lambda: Partition,
    pub sigma: VariableOrder,
    pub hat: Partition,
    /// Generators of `I_hat` reduced modulo the lex basis of `I_lambda`.
    pub forward_reductions: usize,
    /// Lex basis elements of `I_lambda` free of `x_{sigma(n)}`, reduced
    /// modulo the lex basis of `I_hat`.
    pub backward_reductions: usize,
    pub failures: Vec<String>,
}

impl EliminationPolynomialReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Two-sided polynomial check that `I_hat = I_lambda ∩ K[x_{sigma(1)}, ..., x_{sigma(n-1)}]`.
pub fn elimination_polynomial_check(
    lambda: &Partition,
    order: &VariableOrder,
    limit: usize,
) -> Result<EliminationPolynomialReport> {
    check_specht_input(lambda, order)?;
    check_oracle_size(lambda.n(), limit)?;
    let hat_lambda = hat(lambda)?;
    if hat_lambda.len() < 2 {
        return Err(Error::SingleRow(hat_lambda.to_string()));
    }
    let n = lambda.n();
    let (top, smaller) = order.drop_largest()?;
    let embed = |l: usize| if l >= top { l + 1 } else { l };

    let big = lex_groebner_generators(lambda, order)?;
    let big_basis = MarkedBasis::from_system(&big)?;
    let small = lex_groebner_generators(&hat_lambda, &smaller)?;
    let small_polys: Vec<Polynomial> = small.polynomials().map(|p| p.relabel(n, embed)).collect();
    let small_basis = MarkedBasis::new(order, small_polys.iter().cloned())?;

    let mut failures = Vec::new();
    for (name, basis) in [("I_lambda", &big_basis), ("I_hat", &small_basis)] {
        let cert = certify_groebner(basis);
        if !cert.passed() {
            failures.push(format!(
                "lex basis of {name} failed certification at pairs {:?}",
                cert.failures
            ));
        }
    }

    let big_prepared = big_basis.prepared();
    for (g, p) in small.generators.iter().zip(&small_polys) {
        if !big_prepared.reduce(keyed_int(p, order)).is_empty() {
            failures.push(format!(
                "f_T for T = {} (hat shape) is not in I_lambda",
                g.tableau
            ));
        }
    }

    let small_prepared = small_basis.prepared();
    let mut backward = 0;
    for (g, (p, mark)) in big.generators.iter().zip(&big_basis.elements) {
        if mark.deg(top) > 0 {
            continue;
        }
        backward += 1;
        if p.involves(top) {
            failures.push(format!(
                "f_T for T = {} has leading monomial free of x{top} but involves it",
                g.tableau
            ));
            continue;
        }
        if !small_prepared.reduce(keyed_int(p, order)).is_empty() {
            failures.push(format!("f_T for T = {} is not in I_hat", g.tableau));
        }
    }

    Ok(EliminationPolynomialReport {
        check: "elimination_polynomial".into(),
        lambda: lambda.clone(),
        sigma: order.clone(),
        hat: hat_lambda,
        forward_reductions: small_polys.len(),
        backward_reductions: backward,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_partitions;
    use crate::specht::{initial_ideal, minimalize};
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    fn random_orders(n: usize, count: usize, seed: u64) -> Vec<VariableOrder> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count)
            .map(|_| {
                let mut s: Vec<usize> = (1..=n).collect();
                s.shuffle(&mut rng);
                VariableOrder::new(s).unwrap()
            })
            .collect()
    }

    fn multi_row(n: usize) -> Vec<Partition> {
        enumerate_partitions(n)
            .unwrap()
            .into_iter()
            .filter(|l| l.len() >= 2)
            .collect()
    }

    #[test]
    fn reduce_examples() {
        let id3 = VariableOrder::identity(3);
        let f = Polynomial::difference(3, 1, 3);
        let basis = MarkedBasis::new(&id3, [f.clone()]).unwrap();
        assert_eq!(basis.elements[0].1, Monomial::var(3, 3));
        assert!(reduce(&(&f).into(), &basis).unwrap().is_zero());

        let specht =
            MarkedBasis::from_system(&lex_groebner_generators(&p("2,1"), &id3).unwrap()).unwrap();
        let g = &x(3, 1) * &Polynomial::difference(3, 2, 3);
        assert!(reduce(&(&g).into(), &specht).unwrap().is_zero());

        let one = RatPolynomial::from(&Polynomial::one(3));
        assert_eq!(reduce(&one, &specht).unwrap(), one);
        assert!(reduce(&one, &MarkedBasis::new(&id3, []).unwrap()).is_err());
    }

    #[test]
    fn reduce_leaves_no_divisible_term() {
        let id3 = VariableOrder::identity(3);
        let basis = MarkedBasis::new(
            &id3,
            [
                &(&x(3, 3) * &x(3, 3)) - &x(3, 1),
                &(&x(3, 2) * &x(3, 3)) - &x(3, 1),
            ],
        )
        .unwrap();
        let f = &(&(&x(3, 3) * &x(3, 3)) * &x(3, 2)) + &(&x(3, 2) * &x(3, 2));
        let r = reduce(&(&f).into(), &basis).unwrap();
        for (m, _) in r.terms() {
            assert!(basis.elements.iter().all(|(_, mark)| !mark.divides(m)));
        }
    }

    #[test]
    fn s_polynomial_examples() {
        let id3 = VariableOrder::identity(3);
        let s = s_polynomial(
            &Polynomial::difference(3, 1, 3),
            &Polynomial::difference(3, 1, 2),
            &id3,
        )
        .unwrap();
        let support: Vec<Monomial> = s.terms().map(|(m, _)| m.clone()).collect();
        assert!(!support.is_empty());
        assert!(support
            .iter()
            .all(|m| *m == Monomial::new(vec![1, 1, 0]) || *m == Monomial::new(vec![1, 0, 1])));
        let f = Polynomial::difference(3, 1, 3);
        assert!(s_polynomial(&f, &f, &id3).unwrap().is_zero());
        assert!(s_polynomial(&x(3, 2), &x(3, 3), &id3).unwrap().is_zero());
        assert_eq!(
            s_polynomial(&Polynomial::zero(3), &f, &id3),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn certify_examples() {
        let id3 = VariableOrder::identity(3);
        let id4 = VariableOrder::identity(4);
        let r = certify_specht(&p("2,1"), &id3, GeneratorSet::Lex, DEFAULT_ORACLE_LIMIT).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_total, 1);
        let r = certify_specht(&p("2,2"), &id4, GeneratorSet::Lex, DEFAULT_ORACLE_LIMIT).unwrap();
        assert!(r.passed());
        assert_eq!(r.pairs_total, 10);
        assert_eq!(r.pairs_reduced + r.pairs_skipped_coprime, 10);
        assert!(certify_specht(
            &p("3,2,1"),
            &VariableOrder::identity(6),
            GeneratorSet::Lex,
            5
        )
        .is_err());
    }

    #[test]
    fn certify_rejects_non_groebner_sets() {
        // x2^2 - x1 and x1*x2 - x1: the S-pair leaves -x1^2 + x1
        let id2 = VariableOrder::identity(2);
        let f = &(&x(2, 2) * &x(2, 2)) - &x(2, 1);
        let g = &(&x(2, 1) * &x(2, 2)) - &x(2, 1);
        let cert = certify_groebner(&MarkedBasis::new(&id2, [f, g]).unwrap());
        assert_eq!(cert.failures, vec![(0, 1)]);

        // dropping the generator whose leading monomial is the only one
        // divisible by x2*x3^2 loses the Groebner property
        let id4 = VariableOrder::identity(4);
        let system = lex_groebner_generators(&p("2,2"), &id4).unwrap();
        let full = MarkedBasis::from_system(&system).unwrap();
        let mut failing = 0;
        for drop in 0..full.len() {
            let mut truncated = full.clone();
            let (dropped, _) = truncated.elements.remove(drop);
            let cert = certify_groebner(&truncated);
            let member = reduce(&(&dropped).into(), &truncated).unwrap().is_zero();
            // a certified truncation must still account for the dropped element
            if cert.passed() {
                let ideal = minimalize(truncated.elements.iter().map(|(_, m)| m.clone())).unwrap();
                assert!(!member || ideal.contains(&full.elements[drop].1));
            } else {
                failing += 1;
            }
        }
        assert!(failing > 0);
    }

    #[test]
    fn specht_bases_certify_small() {
        for n in 2..=4 {
            for lambda in multi_row(n) {
                for order in random_orders(n, 4, n as u64) {
                    for set in [GeneratorSet::Lex, GeneratorSet::Universal] {
                        let r = certify_specht(&lambda, &order, set, DEFAULT_ORACLE_LIMIT).unwrap();
                        assert!(r.passed(), "{lambda} {order} {set:?}: {:?}", r.failures);
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_leading_monomials_match_closed_form() {
        for n in 2..=5 {
            for lambda in multi_row(n) {
                for order in random_orders(n, 3, 40 + n as u64) {
                    let basis = MarkedBasis::from_system(
                        &lex_groebner_generators(&lambda, &order).unwrap(),
                    )
                    .unwrap();
                    assert!(basis.is_consistent());
                    let from_oracle =
                        minimalize(basis.elements.iter().map(|(_, m)| m.clone())).unwrap();
                    assert_eq!(from_oracle, initial_ideal(&lambda, &order).unwrap());
                }
            }
        }
    }

    #[test]
    fn elimination_polynomial_examples() {
        for (lambda, n) in [("2,2", 4), ("3,1", 4), ("2,1", 3)] {
            let r = elimination_polynomial_check(
                &p(lambda),
                &VariableOrder::identity(n),
                DEFAULT_ORACLE_LIMIT,
            )
            .unwrap();
            assert!(r.passed(), "{lambda}: {:?}", r.failures);
        }
        let r = elimination_polynomial_check(&p("2,2"), &VariableOrder::identity(4), 5).unwrap();
        assert_eq!(r.hat, p("1,1,1"));
        assert!(r.forward_reductions >= 1);
        assert!(elimination_polynomial_check(&p("1,1,1"), &VariableOrder::identity(3), 5).is_err());
    }

    #[test]
    fn to_integer_roundtrip() {
        let f = Polynomial::difference(3, 2, 1);
        assert_eq!(RatPolynomial::from(&f).to_integer(), Some(f));
    }

    fn arb_combination() -> impl Strategy<Value = (Vec<(usize, Vec<u32>, i64)>, usize)> {
        (
            proptest::collection::vec(
                (0usize..5, proptest::collection::vec(0u32..2, 4), -3i64..=3),
                1..4,
            ),
            0usize..24,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn ideal_members_reduce_to_zero((combo, order_idx) in arb_combination()) {
            let order = VariableOrder::all(4)[order_idx].clone();
            let system = lex_groebner_generators(&p("2,2"), &order).unwrap();
            let basis = MarkedBasis::from_system(&system).unwrap();
            let gens: Vec<&Polynomial> = system.polynomials().collect();
            let mut f = Polynomial::zero(4);
            for (i, exps, c) in combo {
                let mult = Polynomial::monomial(4, Monomial::new(exps), c);
                f = &f + &(&mult * gens[i % gens.len()]);
            }
            prop_assert!(reduce(&(&f).into(), &basis).unwrap().is_zero());
        }
    }
}
