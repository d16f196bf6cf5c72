//! Specht polynomials, their lex initial monomials, and the initial ideals of
//! Specht ideals.
//!
//! Initial ideals are computed from the closed-form initial monomials of the
//! lex Groebner generators; no polynomial is expanded on that path.

use serde::Serialize;

use crate::combinatorics::{
    dominance_leq, enumerate_partitions, is_column_standard, min_gap_k, standard_fillings,
    Partition, Tableau, VariableOrder,
};
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial};

/// A monomial ideal given by its minimal generators.
///
/// Generators are kept sorted in decreasing lexicographic order of their
/// exponent sequences, so equality and hashing are structural.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MonomialIdeal {
    n: usize,
    min_gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn min_gens(&self) -> &[Monomial] {
        &self.min_gens
    }

    pub fn len(&self) -> usize {
        self.min_gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.min_gens.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.min_gens.iter().any(|g| g.divides(m))
    }

    /// Image under `x_i -> x_{map(i)}` for a permutation `map` of the labels.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> MonomialIdeal {
        let gens = self.min_gens.iter().map(|g| g.relabel(&map)).collect();
        MonomialIdeal::from_minimal(self.n, gens)
    }

    /// The minimal generators not involving `x_label`. For a monomial ideal
    /// these generate its intersection with the subring omitting `x_label`.
    pub fn avoiding(&self, label: usize) -> Vec<Monomial> {
        self.min_gens
            .iter()
            .filter(|g| g.deg(label) == 0)
            .cloned()
            .collect()
    }

    fn from_minimal(n: usize, mut gens: Vec<Monomial>) -> MonomialIdeal {
        gens.sort_by(|a, b| b.exponents().cmp(a.exponents()));
        MonomialIdeal { n, min_gens: gens }
    }
}

/// The unique minimal generating set of the ideal generated by `gens`.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Result<MonomialIdeal> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    let n = gens.first().ok_or(Error::EmptyInput)?.n();
    if let Some(bad) = gens.iter().find(|g| g.n() != n) {
        return Err(Error::SizeMismatch {
            expected: n,
            found: bad.n(),
        });
    }
    gens.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.exponents().cmp(b.exponents()))
    });
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        // distinct monomials of equal degree never divide each other
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    Ok(MonomialIdeal::from_minimal(n, kept))
}

/// The product of `x_a - x_b` over all pairs with `a` above `b` in a column.
pub fn specht_polynomial(t: &Tableau) -> Polynomial {
    let n = t.n();
    let mut f = Polynomial::one(n);
    for column in t.columns() {
        for (p, &a) in column.iter().enumerate() {
            for &b in &column[p + 1..] {
                f = &f * &Polynomial::difference(n, a, b);
            }
        }
    }
    f
}

/// `prod_i x_i^{d_i - 1}` where `d_i` is the row of `i`; the lex initial
/// monomial of `f_T` for a column standard `T`.
pub fn closed_form_initial_monomial(t: &Tableau, order: &VariableOrder) -> Result<Monomial> {
    if t.n() != order.n() {
        return Err(Error::SizeMismatch {
            expected: order.n(),
            found: t.n(),
        });
    }
    if !is_column_standard(t, order) {
        return Err(Error::NotColumnStandard);
    }
    Ok(Monomial::new(
        (1..=t.n()).map(|i| (t.row_of(i) - 1) as u32).collect(),
    ))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignCheck {
    pub original: Polynomial,
    pub swapped: Polynomial,
    pub holds: bool,
}

/// Checks `f_{(i j) T} = -f_T` for `i`, `j` in a common column of `t`.
pub fn transposition_sign_check(t: &Tableau, i: usize, j: usize) -> Result<SignCheck> {
    let n = t.n();
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) || !t.same_column(i, j) {
        return Err(Error::NotSameColumn(i, j));
    }
    let original = specht_polynomial(t);
    let swapped = specht_polynomial(&t.swap(i, j));
    let holds = swapped == -&original;
    Ok(SignCheck {
        original,
        swapped,
        holds,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpechtGenerator {
    pub tableau: Tableau,
    pub polynomial: Polynomial,
}

/// A set of Specht polynomials indexed by standard tableaux.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpechtSystem {
    pub lambda: Partition,
    pub order: VariableOrder,
    pub generators: Vec<SpechtGenerator>,
}

impl SpechtSystem {
    fn from_tableaux(lambda: &Partition, order: &VariableOrder, tableaux: Vec<Tableau>) -> Self {
        let generators = tableaux
            .into_iter()
            .map(|tableau| SpechtGenerator {
                polynomial: specht_polynomial(&tableau),
                tableau,
            })
            .collect();
        SpechtSystem {
            lambda: lambda.clone(),
            order: order.clone(),
            generators,
        }
    }

    pub fn polynomials(&self) -> impl Iterator<Item = &Polynomial> {
        self.generators.iter().map(|g| &g.polynomial)
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

pub(crate) fn check_specht_input(lambda: &Partition, order: &VariableOrder) -> Result<()> {
    if lambda.len() < 2 {
        return Err(Error::SingleRow(lambda.to_string()));
    }
    if lambda.n() != order.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            found: order.n(),
        });
    }
    Ok(())
}

/// Shapes `mu <= lambda` in dominance, listed in decreasing lex order (a
/// linear extension of dominance, largest first).
pub fn dominated_shapes(lambda: &Partition) -> Vec<Partition> {
    enumerate_partitions(lambda.n())
        .expect("n >= 1")
        .into_iter()
        .filter(|mu| dominance_leq(mu, lambda).expect("same n"))
        .collect()
}

fn lex_shapes(lambda: &Partition) -> Vec<Partition> {
    dominated_shapes(lambda)
        .into_iter()
        .filter(|mu| mu.part(0) == lambda.part(0))
        .collect()
}

fn relabelled_tableaux(shapes: &[Partition], order: &VariableOrder) -> Vec<Tableau> {
    shapes
        .iter()
        .flat_map(|mu| crate::combinatorics::standard_tableaux(mu, order).expect("sizes checked"))
        .collect()
}

/// Standard tableaux of every shape `mu <= lambda` with `mu_1 = lambda_1`.
pub fn lex_groebner_tableaux(lambda: &Partition, order: &VariableOrder) -> Result<Vec<Tableau>> {
    check_specht_input(lambda, order)?;
    Ok(relabelled_tableaux(&lex_shapes(lambda), order))
}

/// Standard tableaux of every shape `mu <= lambda`.
pub fn universal_groebner_tableaux(
    lambda: &Partition,
    order: &VariableOrder,
) -> Result<Vec<Tableau>> {
    check_specht_input(lambda, order)?;
    Ok(relabelled_tableaux(&dominated_shapes(lambda), order))
}

/// The lex Groebner basis `{f_T : T standard of shape mu <= lambda, mu_1 = lambda_1}`.
pub fn lex_groebner_generators(lambda: &Partition, order: &VariableOrder) -> Result<SpechtSystem> {
    let tableaux = lex_groebner_tableaux(lambda, order)?;
    Ok(SpechtSystem::from_tableaux(lambda, order, tableaux))
}

/// Specht polynomials of all standard tableaux of all shapes `mu <= lambda`.
pub fn universal_groebner_generators(
    lambda: &Partition,
    order: &VariableOrder,
) -> Result<SpechtSystem> {
    let tableaux = universal_groebner_tableaux(lambda, order)?;
    Ok(SpechtSystem::from_tableaux(lambda, order, tableaux))
}

/// Precomputed standard fillings for `lambda`, reused across many orders.
#[derive(Debug, Clone)]
pub struct InitialIdealComputer {
    lambda: Partition,
    // standard fillings by positions 1..=n for each admissible shape
    fillings: Vec<Vec<Vec<usize>>>,
}

impl InitialIdealComputer {
    pub fn new(lambda: &Partition) -> Result<Self> {
        if lambda.len() < 2 {
            return Err(Error::SingleRow(lambda.to_string()));
        }
        let fillings = lex_shapes(lambda)
            .iter()
            .flat_map(standard_fillings)
            .collect();
        Ok(InitialIdealComputer {
            lambda: lambda.clone(),
            fillings,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn compute(&self, order: &VariableOrder) -> Result<MonomialIdeal> {
        check_specht_input(&self.lambda, order)?;
        let monomials = self
            .fillings
            .iter()
            .map(|rows| {
                let rows = rows
                    .iter()
                    .map(|row| row.iter().map(|&p| order.label(p)).collect())
                    .collect();
                let t = Tableau::new(rows).expect("relabelled filling");
                closed_form_initial_monomial(&t, order)
            })
            .collect::<Result<Vec<_>>>()?;
        minimalize(monomials)
    }
}

/// `in_<(I_lambda)` for the lex order given by `order`.
pub fn initial_ideal(lambda: &Partition, order: &VariableOrder) -> Result<MonomialIdeal> {
    InitialIdealComputer::new(lambda)?.compute(order)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapWitness {
    pub generator: Monomial,
    pub shape: Partition,
    pub tableau: Tableau,
    /// Row (1-based) of the largest variable in the witness tableau.
    pub row: usize,
    /// Position `i` such that the entry above the largest variable is `sigma(i)`.
    pub above_position: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapAudit {
    pub lambda: Partition,
    pub order: VariableOrder,
    pub k: usize,
    pub witnesses: Vec<GapWitness>,
    pub violations: Vec<String>,
}

impl GapAudit {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks the gap condition on every minimal generator of the initial ideal:
/// if `sigma(n)` sits in row `j >= 2` of a witness tableau of shape `mu`,
/// then `mu_{j-1} - mu_j >= k` and the entry above it is `sigma(i)` with
/// `i < n - k`.
pub fn gap_condition_audit(lambda: &Partition, order: &VariableOrder) -> Result<GapAudit> {
    check_specht_input(lambda, order)?;
    let n = lambda.n();
    let k = min_gap_k(lambda)?;
    let ideal = initial_ideal(lambda, order)?;
    let top = order.largest();

    let candidates: Vec<(Partition, Tableau, Monomial)> = dominated_shapes(lambda)
        .into_iter()
        .flat_map(|mu| {
            crate::combinatorics::standard_tableaux(&mu, order)
                .expect("sizes checked")
                .into_iter()
                .map(move |t| (mu.clone(), t))
        })
        .map(|(mu, t)| {
            let m =
                closed_form_initial_monomial(&t, order).expect("standard implies column standard");
            (mu, t, m)
        })
        .collect();

    let mut witnesses = Vec::new();
    let mut violations = Vec::new();
    for gen in ideal.min_gens() {
        let Some((mu, t, _)) = candidates.iter().find(|(_, _, m)| m == gen) else {
            violations.push(format!("no standard tableau witnesses generator {gen}"));
            continue;
        };
        let row = t.row_of(top);
        let above_position = t.above(top).map(|a| order.position(a));
        if row >= 2 {
            let gap = mu.part(row - 2) - mu.part(row - 1);
            if gap < k {
                violations.push(format!(
                    "generator {gen}: witness {t} has sigma(n) in row {row} with gap {gap} < k = {k}"
                ));
            }
            if let Some(i) = above_position {
                if i + k >= n {
                    violations.push(format!(
                        "generator {gen}: witness {t} has sigma({i}) above sigma(n), but i >= n - k = {}",
                        n - k
                    ));
                }
            }
        }
        witnesses.push(GapWitness {
            generator: gen.clone(),
            shape: mu.clone(),
            tableau: t.clone(),
            row,
            above_position,
        });
    }
    Ok(GapAudit {
        lambda: lambda.clone(),
        order: order.clone(),
        k,
        witnesses,
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::standard_tableaux;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(rows: &[&[usize]]) -> Tableau {
        Tableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn mono(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
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

    #[test]
    fn specht_polynomial_examples() {
        let tab = t(&[&[3, 5, 1, 7], &[4, 2], &[6]]);
        let d = |a, b| Polynomial::difference(7, a, b);
        let want = &(&(&d(3, 4) * &d(3, 6)) * &d(4, 6)) * &d(5, 2);
        assert_eq!(specht_polynomial(&tab), want);
        assert_eq!(specht_polynomial(&t(&[&[1, 2, 3, 4]])), Polynomial::one(4));
        assert_eq!(
            specht_polynomial(&t(&[&[1, 2], &[3]])),
            Polynomial::difference(3, 1, 3)
        );
    }

    #[test]
    fn closed_form_examples() {
        let id3 = VariableOrder::identity(3);
        let id4 = VariableOrder::identity(4);
        assert_eq!(
            closed_form_initial_monomial(&t(&[&[1, 2], &[3]]), &id3).unwrap(),
            mono(&[0, 0, 1])
        );
        assert_eq!(
            closed_form_initial_monomial(&t(&[&[1, 4], &[2], &[3]]), &id4).unwrap(),
            mono(&[0, 1, 2, 0])
        );
        let lead = specht_polynomial(&t(&[&[1, 4], &[2], &[3]]))
            .leading_monomial(&id4)
            .unwrap();
        assert_eq!(lead, mono(&[0, 1, 2, 0]));
        for s in VariableOrder::all(3) {
            assert_eq!(
                closed_form_initial_monomial(&t(&[&[2, 3, 1]]), &s).unwrap(),
                Monomial::one(3)
            );
        }
        assert_eq!(
            closed_form_initial_monomial(&t(&[&[3, 2], &[1]]), &id3),
            Err(Error::NotColumnStandard)
        );
    }

    #[test]
    fn sign_check_examples() {
        let c = transposition_sign_check(&t(&[&[1, 2], &[3]]), 1, 3).unwrap();
        assert!(c.holds);
        assert_eq!(c.swapped, Polynomial::difference(3, 3, 1));
        assert!(
            transposition_sign_check(&t(&[&[1, 4], &[2], &[3]]), 2, 3)
                .unwrap()
                .holds
        );
        assert!(
            transposition_sign_check(&t(&[&[1], &[2], &[3]]), 1, 2)
                .unwrap()
                .holds
        );
        assert_eq!(
            transposition_sign_check(&t(&[&[1, 2], &[3]]), 1, 2),
            Err(Error::NotSameColumn(1, 2))
        );
        assert_eq!(
            transposition_sign_check(&t(&[&[1, 2], &[3]]), 1, 9),
            Err(Error::NotSameColumn(1, 9))
        );
    }

    #[test]
    fn generator_sets() {
        let id3 = VariableOrder::identity(3);
        let id4 = VariableOrder::identity(4);
        let lex = lex_groebner_generators(&p("2,1"), &id3).unwrap();
        let polys: Vec<_> = lex.polynomials().cloned().collect();
        assert_eq!(
            polys,
            vec![
                Polynomial::difference(3, 1, 3),
                Polynomial::difference(3, 1, 2)
            ]
        );
        assert_eq!(lex_groebner_generators(&p("2,2"), &id4).unwrap().len(), 5);
        let single = lex_groebner_generators(&p("1,1"), &VariableOrder::identity(2)).unwrap();
        assert_eq!(
            single.polynomials().cloned().collect::<Vec<_>>(),
            vec![Polynomial::difference(2, 1, 2)]
        );

        assert_eq!(
            universal_groebner_generators(&p("2,1"), &id3)
                .unwrap()
                .len(),
            3
        );
        assert_eq!(
            universal_groebner_generators(&p("1,1,1,1"), &id4)
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            universal_groebner_generators(&p("2,2"), &id4)
                .unwrap()
                .len(),
            6
        );
        assert!(matches!(
            lex_groebner_generators(&p("3"), &id3),
            Err(Error::SingleRow(_))
        ));
        assert!(lex_groebner_generators(&p("2,1"), &id4).is_err());
    }

    #[test]
    fn minimalize_examples() {
        let got = minimalize(vec![
            mono(&[0, 0, 1, 1]),
            mono(&[0, 0, 1, 2]),
            mono(&[0, 1, 0, 1]),
            mono(&[0, 1, 2, 0]),
        ])
        .unwrap();
        assert_eq!(
            got.min_gens(),
            &[
                mono(&[0, 1, 2, 0]),
                mono(&[0, 1, 0, 1]),
                mono(&[0, 0, 1, 1])
            ]
        );
        assert_eq!(
            minimalize(vec![mono(&[1])]).unwrap().min_gens(),
            &[mono(&[1])]
        );
        assert_eq!(
            minimalize(vec![mono(&[1, 0]), mono(&[1, 1]), mono(&[2, 0])])
                .unwrap()
                .min_gens(),
            &[mono(&[1, 0])]
        );
        assert_eq!(minimalize(Vec::new()), Err(Error::EmptyInput));
    }

    #[test]
    fn initial_ideal_examples() {
        let ideal = initial_ideal(&p("2,1"), &VariableOrder::identity(3)).unwrap();
        assert_eq!(ideal.min_gens(), &[mono(&[0, 1, 0]), mono(&[0, 0, 1])]);
        assert_eq!(
            serde_json::to_string(&ideal).unwrap(),
            r#"{"n":3,"min_gens":[[0,1,0],[0,0,1]]}"#
        );
        let ideal = initial_ideal(&p("2,2"), &VariableOrder::identity(4)).unwrap();
        assert_eq!(
            ideal.min_gens(),
            &[
                mono(&[0, 1, 2, 0]),
                mono(&[0, 1, 0, 1]),
                mono(&[0, 0, 1, 1])
            ]
        );
        let ideal = initial_ideal(&p("2,1"), &"3,2,1".parse().unwrap()).unwrap();
        assert_eq!(ideal.min_gens(), &[mono(&[1, 0, 0]), mono(&[0, 1, 0])]);
    }

    #[test]
    fn closed_form_matches_expansion() {
        for n in 1..=6 {
            for (idx, order) in random_orders(n, 20, n as u64).iter().enumerate() {
                for shape in enumerate_partitions(n).unwrap() {
                    // expansions are costly for the long single column; sample it less
                    if shape.len() == n && n == 6 && idx % 5 != 0 {
                        continue;
                    }
                    for tab in standard_tableaux(&shape, order).unwrap() {
                        let closed = closed_form_initial_monomial(&tab, order).unwrap();
                        let expanded = specht_polynomial(&tab).leading_monomial(order).unwrap();
                        assert_eq!(closed, expanded, "{tab} under {order}");
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_agree_iff_row_equivalent() {
        let order: VariableOrder = "2,4,1,3,5".parse().unwrap();
        for shape in enumerate_partitions(5).unwrap() {
            let n = shape.n();
            // all column standard fillings of the shape
            let fillings: Vec<Tableau> = itertools::Itertools::permutations(1..=n, n)
                .map(|word| {
                    let mut it = word.into_iter();
                    Tableau::new(
                        shape
                            .parts()
                            .iter()
                            .map(|&l| it.by_ref().take(l).collect())
                            .collect(),
                    )
                    .unwrap()
                })
                .filter(|t| is_column_standard(t, &order))
                .collect();
            for a in fillings.iter().step_by(3) {
                for b in fillings.iter().step_by(5) {
                    let same_rows = a.rows().iter().zip(b.rows()).all(|(x, y)| {
                        let mut x = x.clone();
                        let mut y = y.clone();
                        x.sort_unstable();
                        y.sort_unstable();
                        x == y
                    });
                    let same_mono = closed_form_initial_monomial(a, &order).unwrap()
                        == closed_form_initial_monomial(b, &order).unwrap();
                    assert_eq!(same_rows, same_mono, "{a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn sign_flips_for_every_column_pair() {
        let order = VariableOrder::identity(5);
        for shape in enumerate_partitions(5).unwrap() {
            for tab in standard_tableaux(&shape, &order).unwrap() {
                for col in tab.columns() {
                    for (i, &a) in col.iter().enumerate() {
                        for &b in &col[i + 1..] {
                            assert!(transposition_sign_check(&tab, a, b).unwrap().holds);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn universal_set_adds_no_minimal_generators() {
        for n in 2..=6 {
            for lambda in enumerate_partitions(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.len() >= 2)
            {
                for order in random_orders(n, 5, 100 + n as u64) {
                    let lex = initial_ideal(&lambda, &order).unwrap();
                    let universal = minimalize(
                        universal_groebner_tableaux(&lambda, &order)
                            .unwrap()
                            .iter()
                            .map(|t| closed_form_initial_monomial(t, &order).unwrap()),
                    )
                    .unwrap();
                    assert_eq!(lex, universal, "{lambda} under {order}");
                }
            }
        }
    }

    #[test]
    fn gap_audit_examples() {
        for (lambda, n) in [("2,2", 4), ("3,1", 4), ("4,2,1", 7)] {
            let audit = gap_condition_audit(&p(lambda), &VariableOrder::identity(n)).unwrap();
            assert!(audit.passed(), "{lambda}: {:?}", audit.violations);
            assert_eq!(
                audit.witnesses.len(),
                initial_ideal(&p(lambda), &VariableOrder::identity(n))
                    .unwrap()
                    .len()
            );
        }
        let audit = gap_condition_audit(&p("2,2"), &VariableOrder::identity(4)).unwrap();
        assert_eq!(audit.witnesses.len(), 3);
    }

    #[test]
    fn gap_audit_exhaustive_small() {
        for n in 2..=7 {
            for lambda in enumerate_partitions(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.len() >= 2)
            {
                for order in random_orders(n, 10, 200 + n as u64) {
                    let audit = gap_condition_audit(&lambda, &order).unwrap();
                    assert!(audit.passed(), "{lambda} {order}: {:?}", audit.violations);
                }
            }
        }
    }

    #[test]
    fn equivariance_under_relabelling() {
        for n in 3..=6 {
            let orders = random_orders(n, 12, 300 + n as u64);
            for lambda in enumerate_partitions(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.len() >= 2)
            {
                for pair in orders.chunks(2) {
                    let (sigma, tau) = (&pair[0], &pair[1]);
                    let lhs = initial_ideal(&lambda, &sigma.compose(tau).unwrap()).unwrap();
                    let rhs = initial_ideal(&lambda, tau)
                        .unwrap()
                        .relabel(|i| sigma.label(i));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
