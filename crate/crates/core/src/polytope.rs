//! Permutation polytopes `P_n(u)`, the generalized permutohedra `Pi_{n,k}`,
//! their normal cones and the correspondence with initial ideals.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{min_gap_k, Partition, VariableOrder};
use crate::error::{Error, Result};
use crate::fan::{enumerate_fan_with_limit, DEFAULT_ENUMERATION_LIMIT};
use crate::polyring::WeightVector;
use crate::specht::{check_specht_input, initial_ideal, lex_groebner_generators, MonomialIdeal};

/// A finite set of integer points, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub vertices: Vec<Vec<u32>>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: &[u32]) -> bool {
        self.vertices
            .binary_search_by(|v| v.as_slice().cmp(p))
            .is_ok()
    }
}

/// All distinct coordinate permutations of `u`, the vertex set of `P_n(u)`.
pub fn permutation_points(u: &[u32]) -> Result<PointSet> {
    if u.is_empty() {
        return Err(Error::ZeroSize);
    }
    let mut current = u.to_vec();
    current.sort_unstable();
    let mut vertices = vec![current.clone()];
    while next_permutation(&mut current) {
        vertices.push(current.clone());
    }
    Ok(PointSet {
        n: u.len(),
        k: None,
        vertices,
    })
}

// Lexicographic successor; false once `v` is the last arrangement.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("pivot has a larger suffix element");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Vertices of `Pi_{n,k}`: permutations of `(1, ..., n-k-1, n-k, ..., n-k)`
/// with `k+1` copies of `n-k`.
pub fn pnk_vertices(n: usize, k: usize) -> Result<PointSet> {
    if n < 2 || k > n - 2 {
        return Err(Error::KOutOfRange { n, k });
    }
    let u: Vec<u32> = (1..=n).map(|i| i.min(n - k) as u32).collect();
    let mut set = permutation_points(&u)?;
    set.k = Some(k);
    Ok(set)
}

/// The vertex of `Pi_{n,k}` whose normal cone is `C_{sigma,k}`.
pub fn vertex_of_order(sigma: &VariableOrder, k: usize) -> Vec<u32> {
    let n = sigma.n();
    let mut v = vec![0; n];
    for i in 1..=n {
        v[sigma.label(i) - 1] = i.min(n.saturating_sub(k)) as u32;
    }
    v
}

/// The lexicographically smallest order whose cone has `v` as its vertex:
/// labels sorted by coordinate, ties broken by label.
pub fn order_of_vertex(v: &[u32]) -> Result<VariableOrder> {
    let sigma = (1..=v.len()).sorted_by_key(|&l| (v[l - 1], l)).collect();
    VariableOrder::new(sigma)
}

/// Exact affine dimension of a point set.
pub fn affine_dimension(points: &[Vec<u32>]) -> usize {
    let Some(base) = points.first() else {
        return 0;
    };
    let n = base.len();
    // rows in echelon form, keyed by pivot column
    let mut echelon: BTreeMap<usize, Vec<BigRational>> = BTreeMap::new();
    for p in &points[1..] {
        if echelon.len() == n {
            break;
        }
        let mut row: Vec<BigRational> = p
            .iter()
            .zip(base)
            .map(|(&a, &b)| BigRational::from_integer(BigInt::from(a) - b))
            .collect();
        for (&col, pivot) in &echelon {
            if !row[col].is_zero() {
                let f = &row[col] / &pivot[col];
                for (r, q) in row.iter_mut().zip(pivot) {
                    *r -= &f * q;
                }
            }
        }
        if let Some(col) = row.iter().position(|c| !c.is_zero()) {
            // keep pivots eliminated from earlier rows so the map stays echelon
            for other in echelon.values_mut() {
                if !other[col].is_zero() {
                    let f = &other[col] / &row[col];
                    for (o, r) in other.iter_mut().zip(&row) {
                        *o -= &f * r;
                    }
                }
            }
            echelon.insert(col, row);
        }
    }
    echelon.len()
}

/// `m` points spanning an affine space of dimension `m - 1`.
pub fn is_simplex(points: &[Vec<u32>]) -> bool {
    !points.is_empty() && affine_dimension(points) == points.len() - 1
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeDirectionReport {
    pub swap_pairs: usize,
    pub failures: Vec<(Vec<u32>, Vec<u32>)>,
}

impl EdgeDirectionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every pair of points related by swapping two unequal coordinates,
/// checks that the difference is parallel to `e_i - e_j`.
pub fn edge_direction_check(set: &PointSet) -> EdgeDirectionReport {
    let mut report = EdgeDirectionReport {
        swap_pairs: 0,
        failures: Vec::new(),
    };
    for u in &set.vertices {
        for (i, j) in (0..set.n).tuple_combinations() {
            if u[i] == u[j] {
                continue;
            }
            let mut v = u.clone();
            v.swap(i, j);
            if v < *u || !set.contains(&v) {
                continue;
            }
            report.swap_pairs += 1;
            let diff: Vec<i64> = u
                .iter()
                .zip(&v)
                .map(|(&a, &b)| a as i64 - b as i64)
                .collect();
            let parallel = diff
                .iter()
                .enumerate()
                .all(|(c, &d)| (c == i || c == j) == (d != 0))
                && diff[i] == -diff[j];
            if !parallel {
                report.failures.push((u.clone(), v));
            }
        }
    }
    report
}

/// `w` scaled by the lcm of its denominators; positive scaling keeps every
/// comparison of `w . p` values.
fn integer_weights(w: &WeightVector) -> Vec<BigInt> {
    let lcm = w
        .weights()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    w.weights()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect()
}

/// The points of `set` maximizing `w . p`.
pub fn maximizers(set: &PointSet, w: &WeightVector) -> Vec<Vec<u32>> {
    let scaled = integer_weights(w);
    let values: Vec<BigInt> = match scaled
        .iter()
        .map(i64::try_from)
        .collect::<Result<Vec<i64>, _>>()
    {
        Ok(small) => set
            .vertices
            .iter()
            .map(|p| {
                let dot: i128 = small
                    .iter()
                    .zip(p)
                    .map(|(&a, &b)| a as i128 * b as i128)
                    .sum();
                BigInt::from(dot)
            })
            .collect(),
        Err(_) => set
            .vertices
            .iter()
            .map(|p| scaled.iter().zip(p).map(|(a, &b)| a * b).sum())
            .collect(),
    };
    let Some(best) = values.iter().max() else {
        return Vec::new();
    };
    set.vertices
        .iter()
        .zip(&values)
        .filter(|(_, v)| *v == best)
        .map(|(p, _)| p.clone())
        .collect()
}

/// Certifies that `p` is a vertex of the hull of `set` by exhibiting the
/// functional `p` itself as uniquely maximized at `p`.
pub fn certify_extreme(set: &PointSet, p: &[u32]) -> bool {
    let w = WeightVector::new(
        p.iter()
            .map(|&c| BigRational::from_integer(c.into()))
            .collect(),
    );
    maximizers(set, &w) == [p.to_vec()]
}

/// The closed cone `C_{sigma,k}`: a chain `w_{sigma(1)} <= ... <= w_{sigma(n-k-1)}`
/// whose top is below each of the remaining `k+1` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidCone {
    pub sigma: VariableOrder,
    pub k: usize,
}

impl BraidCone {
    pub fn new(sigma: VariableOrder, k: usize) -> Result<Self> {
        if k >= sigma.n() {
            return Err(Error::KOutOfRange { n: sigma.n(), k });
        }
        Ok(BraidCone { sigma, k })
    }

    pub fn n(&self) -> usize {
        self.sigma.n()
    }

    /// Labels of the chain, then the unordered top labels.
    pub fn chain_and_top(&self) -> (&[usize], &[usize]) {
        self.sigma.as_slice().split_at(self.n() - self.k - 1)
    }

    /// The inequality data `(chain, sorted top)`; two cones are equal iff
    /// these agree.
    pub fn canonical(&self) -> (Vec<usize>, Vec<usize>) {
        let (chain, top) = self.chain_and_top();
        (chain.to_vec(), top.iter().copied().sorted().collect())
    }
}

/// Exact membership in the closed cone.
pub fn cone_membership(w: &WeightVector, cone: &BraidCone) -> bool {
    if w.len() != cone.n() {
        return false;
    }
    let (chain, top) = cone.chain_and_top();
    let chain_ok = chain.windows(2).all(|p| w.get(p[0]) <= w.get(p[1]));
    chain_ok
        && chain
            .last()
            .is_none_or(|&c| top.iter().all(|&t| w.get(c) <= w.get(t)))
}

/// Strict membership: every defining inequality holds strictly.
pub fn cone_interior(w: &WeightVector, cone: &BraidCone) -> bool {
    if w.len() != cone.n() {
        return false;
    }
    let (chain, top) = cone.chain_and_top();
    let chain_ok = chain.windows(2).all(|p| w.get(p[0]) < w.get(p[1]));
    chain_ok
        && chain
            .last()
            .is_none_or(|&c| top.iter().all(|&t| w.get(c) < w.get(t)))
}

/// A deterministic rational point in the interior of `cone` with pairwise
/// distinct coordinates.
pub fn interior_sample(cone: &BraidCone, seed: u64) -> WeightVector {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = cone.n();
    let denom = BigInt::from(rng.gen_range(1..=6));
    let (chain, top) = cone.chain_and_top();
    let mut values = vec![0i64; n];
    let mut current: i64 = rng.gen_range(-20..=20);
    for (idx, &label) in chain.iter().enumerate() {
        if idx > 0 {
            current += rng.gen_range(1..=5);
        }
        values[label - 1] = current;
    }
    let mut offsets: Vec<i64> = (1..=(5 * top.len()) as i64).collect();
    offsets.shuffle(&mut rng);
    for (&label, off) in top.iter().zip(offsets) {
        values[label - 1] = current + off;
    }
    WeightVector::new(
        values
            .into_iter()
            .map(|v| BigRational::new(v.into(), denom.clone()))
            .collect(),
    )
}

/// An order `sigma` with `w` in `C_{sigma,0}`, hence in every `C_{sigma,k}`.
pub fn covering_order(w: &WeightVector) -> Result<VariableOrder> {
    let sigma = (1..=w.len())
        .sorted_by(|&a, &b| w.get(a).cmp(w.get(b)).then(a.cmp(&b)))
        .collect();
    VariableOrder::new(sigma)
}

/// The distinct cones `C_{sigma,k}`, one per class, represented by the
/// lexicographically smallest order.
pub fn braid_cones(n: usize, k: usize) -> Result<Vec<BraidCone>> {
    pnk_vertices(n, k)?
        .vertices
        .iter()
        .map(|v| BraidCone::new(order_of_vertex(v)?, k))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexEntry {
    pub vertex: Vec<u32>,
    pub sigma: VariableOrder,
    pub min_gens: MonomialIdeal,
}

/// The map from vertices of `Pi_{n,k}` to initial ideals of `I_lambda`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexBijection {
    pub lambda: Partition,
    pub k: usize,
    pub entries: Vec<VertexEntry>,
}

impl VertexBijection {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Builds the vertex-to-ideal map and checks that it is a bijection onto the
/// distinct initial ideals found by exhaustive enumeration, and that each
/// vertex is the unique maximizer over an interior sample of its cone.
pub fn vertex_ideal_bijection(lambda: &Partition, seed: u64) -> Result<VertexBijection> {
    vertex_ideal_bijection_with_limit(lambda, seed, DEFAULT_ENUMERATION_LIMIT)
}

pub fn vertex_ideal_bijection_with_limit(
    lambda: &Partition,
    seed: u64,
    limit: usize,
) -> Result<VertexBijection> {
    let n = lambda.n();
    check_specht_input(lambda, &VariableOrder::identity(n))?;
    let k = min_gap_k(lambda)?;
    let fan = enumerate_fan_with_limit(lambda, limit)?;
    let polytope = pnk_vertices(n, k)?;

    let entries: Vec<VertexEntry> = polytope
        .vertices
        .par_iter()
        .enumerate()
        .map(|(idx, v)| {
            let sigma = order_of_vertex(v)?;
            let cone = BraidCone::new(sigma.clone(), k)?;
            let w = interior_sample(&cone, seed.wrapping_add(idx as u64));
            if maximizers(&polytope, &w) != [v.clone()] {
                return Err(Error::TheoremViolation(format!(
                    "vertex {v:?} is not the unique maximizer over the interior of C_({sigma},{k})"
                )));
            }
            let ideal = initial_ideal(lambda, &sigma)?;
            match fan.class_of(&ideal) {
                Some(class) if class.iter().all(|tau| vertex_of_order(tau, k) == *v) => {}
                _ => {
                    return Err(Error::TheoremViolation(format!(
                        "class of the ideal at vertex {v:?} does not match C_({sigma},{k})"
                    )))
                }
            }
            Ok(VertexEntry {
                vertex: v.clone(),
                sigma,
                min_gens: ideal,
            })
        })
        .collect::<Result<_>>()?;

    let distinct: BTreeSet<&MonomialIdeal> = entries.iter().map(|e| &e.min_gens).collect();
    if distinct.len() != entries.len() {
        return Err(Error::TheoremViolation(format!(
            "{lambda}: two vertices share an initial ideal"
        )));
    }
    if distinct.len() != fan.distinct_count {
        return Err(Error::TheoremViolation(format!(
            "{lambda}: {} vertices but {} distinct initial ideals",
            distinct.len(),
            fan.distinct_count
        )));
    }
    Ok(VertexBijection {
        lambda: lambda.clone(),
        k,
        entries,
    })
}

/// Which braid cones a refinement check visits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConeSelection {
    All,
    Sampled { count: usize, seed: u64 },
    Given(Vec<VariableOrder>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RefinementReport {
    pub check: String,
    pub lambda: Partition,
    pub cones_checked: usize,
    pub generators_checked: usize,
    /// The orders visited when the cones were sampled.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampled_orders: Option<Vec<VariableOrder>>,
    pub failures: Vec<String>,
}

impl RefinementReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `w_{sigma(i)} = 2^(i-1)`.
pub fn power_weight(sigma: &VariableOrder) -> WeightVector {
    let mut w = vec![BigRational::zero(); sigma.n()];
    let mut p = BigRational::one();
    for i in 1..=sigma.n() {
        w[sigma.label(i) - 1] = p.clone();
        p *= BigRational::from_integer(2.into());
    }
    WeightVector::new(w)
}

/// For each selected order, checks that two interior weights of its maximal
/// braid cone select exactly the lex leading term of every lex Groebner
/// generator.
pub fn braid_refinement_check(
    lambda: &Partition,
    selection: ConeSelection,
) -> Result<RefinementReport> {
    let n = lambda.n();
    check_specht_input(lambda, &VariableOrder::identity(n))?;
    let (orders, sampled) = match selection {
        ConeSelection::All => (VariableOrder::all(n), None),
        ConeSelection::Sampled { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let orders: Vec<VariableOrder> = (0..count)
                .map(|_| {
                    let mut s: Vec<usize> = (1..=n).collect();
                    s.shuffle(&mut rng);
                    VariableOrder::new(s)
                })
                .collect::<Result<_>>()?;
            (orders.clone(), Some(orders))
        }
        ConeSelection::Given(orders) => {
            if let Some(bad) = orders.iter().find(|o| o.n() != n) {
                return Err(Error::SizeMismatch {
                    expected: n,
                    found: bad.n(),
                });
            }
            (orders.clone(), Some(orders))
        }
    };
    let per_cone: Vec<(usize, Vec<String>)> = orders
        .par_iter()
        .enumerate()
        .map(|(idx, sigma)| {
            let system = lex_groebner_generators(lambda, sigma)?;
            let cone = BraidCone::new(sigma.clone(), 0)?;
            let weights = [power_weight(sigma), interior_sample(&cone, idx as u64)];
            let mut failures = Vec::new();
            for g in &system.generators {
                let (lm, lc) = g.polynomial.leading_term(sigma)?;
                for w in &weights {
                    let form = g.polynomial.initial_form(w)?;
                    if form.len() != 1 || form.coeff(&lm) != lc {
                        failures.push(format!(
                            "sigma {sigma}, T = {}: in_w(f_T) = {form}",
                            g.tableau
                        ));
                    }
                }
            }
            Ok((system.len(), failures))
        })
        .collect::<Result<_>>()?;
    let generators_checked = per_cone.iter().map(|(g, _)| g).sum();
    Ok(RefinementReport {
        check: "braid_refinement".into(),
        lambda: lambda.clone(),
        cones_checked: orders.len(),
        generators_checked,
        sampled_orders: sampled,
        failures: per_cone.into_iter().flat_map(|(_, f)| f).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_partitions;
    use crate::fan::{enumerate_fan, order_class_key};
    use crate::specht::minimalize;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn q(v: &[i64]) -> WeightVector {
        WeightVector::from_integers(v)
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    #[test]
    fn pnk_examples() {
        let s = pnk_vertices(3, 1).unwrap();
        assert_eq!(
            s.vertices,
            vec![vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]]
        );
        assert_eq!(pnk_vertices(4, 0).unwrap().len(), 24);
        for n in 2..=8 {
            let s = pnk_vertices(n, n - 2).unwrap();
            assert_eq!(s.len(), n);
            assert!(is_simplex(&s.vertices));
        }
        assert_eq!(pnk_vertices(4, 3), Err(Error::KOutOfRange { n: 4, k: 3 }));
        assert_eq!(pnk_vertices(1, 0), Err(Error::KOutOfRange { n: 1, k: 0 }));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"n":3,"k":1,"vertices":[[1,2,2],[2,1,2],[2,2,1]]}"#
        );
    }

    #[test]
    fn pnk_counts_sums_and_dimension() {
        for n in 2..=8 {
            for k in 0..=n - 2 {
                let s = pnk_vertices(n, k).unwrap();
                assert_eq!(s.len(), factorial(n) / factorial(k + 1), "n={n} k={k}");
                let sum = ((n - k - 1) * (n - k) / 2 + (k + 1) * (n - k)) as u32;
                assert!(s.vertices.iter().all(|v| v.iter().sum::<u32>() == sum));
                assert!(s.vertices.windows(2).all(|w| w[0] < w[1]));
                if n <= 7 {
                    assert_eq!(affine_dimension(&s.vertices), n - 1);
                }
            }
        }
    }

    #[test]
    fn affine_dimension_small_cases() {
        assert_eq!(affine_dimension(&[]), 0);
        assert_eq!(affine_dimension(&[vec![1, 2]]), 0);
        assert_eq!(
            affine_dimension(&[vec![0, 0, 0], vec![1, 1, 1], vec![2, 2, 2]]),
            1
        );
        assert_eq!(
            affine_dimension(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]]),
            2
        );
        assert!(!is_simplex(&[vec![0, 0], vec![1, 1], vec![2, 2]]));
    }

    #[test]
    fn edge_directions() {
        for n in 2..=6 {
            for k in 0..=n - 2 {
                let r = edge_direction_check(&pnk_vertices(n, k).unwrap());
                assert!(r.passed());
                assert!(r.swap_pairs > 0);
            }
        }
    }

    #[test]
    fn every_vertex_is_extreme() {
        for n in 2..=5 {
            for k in 0..=n - 2 {
                let s = pnk_vertices(n, k).unwrap();
                assert!(s.vertices.iter().all(|v| certify_extreme(&s, v)));
            }
        }
        // an interior point of a segment is not certified
        let s = PointSet {
            n: 2,
            k: None,
            vertices: vec![vec![0, 2], vec![1, 1], vec![2, 0]],
        };
        assert!(!certify_extreme(&s, &[1, 1]));
    }

    #[test]
    fn membership_examples() {
        let id = VariableOrder::identity(3);
        assert!(cone_membership(
            &q(&[0, 1, 5]),
            &BraidCone::new(id.clone(), 0).unwrap()
        ));
        assert!(cone_membership(
            &q(&[0, 5, 1]),
            &BraidCone::new(id.clone(), 1).unwrap()
        ));
        assert!(!cone_membership(
            &q(&[5, 0, 1]),
            &BraidCone::new(id.clone(), 1).unwrap()
        ));
        assert!(cone_membership(
            &q(&[5, 0, 1]),
            &BraidCone::new(id.clone(), 2).unwrap()
        ));
        assert!(!cone_membership(
            &q(&[0, 1]),
            &BraidCone::new(id.clone(), 0).unwrap()
        ));
        assert!(BraidCone::new(id, 3).is_err());
    }

    #[test]
    fn interior_sample_examples() {
        let id = VariableOrder::identity(3);
        for seed in 0..20 {
            let w = interior_sample(&BraidCone::new(id.clone(), 0).unwrap(), seed);
            assert!(w.weights().windows(2).all(|p| p[0] < p[1]));
            let w = interior_sample(&BraidCone::new(id.clone(), 1).unwrap(), seed);
            assert!(w.get(1) < w.get(2) && w.get(1) < w.get(3) && w.get(2) != w.get(3));
        }
        let c = BraidCone::new(VariableOrder::new(vec![2, 3, 1]).unwrap(), 1).unwrap();
        assert_eq!(interior_sample(&c, 7), interior_sample(&c, 7));
    }

    #[test]
    fn cone_equality_matches_class_key() {
        for n in 2..=5 {
            for k in 0..n {
                let orders = VariableOrder::all(n);
                for (i, s) in orders.iter().enumerate() {
                    let a = BraidCone::new(s.clone(), k).unwrap();
                    let wa = interior_sample(&a, i as u64);
                    for t in &orders {
                        let b = BraidCone::new(t.clone(), k).unwrap();
                        let same = a.canonical() == b.canonical();
                        assert_eq!(same, order_class_key(s, k) == order_class_key(t, k));
                        // distinct full-dimensional cones of a fan share no interior point
                        assert_eq!(same, cone_interior(&wa, &b), "{s} {t} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn vertices_and_cones_correspond() {
        for n in 2..=6 {
            for k in 0..=n - 2 {
                let cones = braid_cones(n, k).unwrap();
                assert_eq!(cones.len(), factorial(n) / factorial(k + 1));
                for sigma in VariableOrder::all(n) {
                    let v = vertex_of_order(&sigma, k);
                    let rep = order_of_vertex(&v).unwrap();
                    assert_eq!(order_class_key(&rep, k), order_class_key(&sigma, k));
                }
            }
        }
    }

    #[test]
    fn bijection_examples() {
        let b = vertex_ideal_bijection(&p("2,1"), 0).unwrap();
        assert_eq!(b.len(), 3);
        let ideals: BTreeSet<Vec<Vec<u32>>> = b
            .entries
            .iter()
            .map(|e| {
                e.min_gens
                    .min_gens()
                    .iter()
                    .map(|m| m.exponents().to_vec())
                    .collect()
            })
            .collect();
        let expected: BTreeSet<Vec<Vec<u32>>> = [
            vec![vec![0, 1, 0], vec![0, 0, 1]],
            vec![vec![1, 0, 0], vec![0, 0, 1]],
            vec![vec![1, 0, 0], vec![0, 1, 0]],
        ]
        .into_iter()
        .collect();
        assert_eq!(ideals, expected);
        assert_eq!(vertex_ideal_bijection(&p("2,2"), 0).unwrap().len(), 24);
        for n in 3..=7 {
            let lambda = Partition::new(vec![n - 1, 1]).unwrap();
            assert_eq!(vertex_ideal_bijection(&lambda, 1).unwrap().len(), n);
        }
        assert!(vertex_ideal_bijection(&p("3"), 0).is_err());
    }

    #[test]
    fn bijection_all_shapes_up_to_five() {
        for n in 2..=5 {
            for lambda in enumerate_partitions(n)
                .unwrap()
                .into_iter()
                .filter(|l| l.len() >= 2)
            {
                let b = vertex_ideal_bijection(&lambda, 3).unwrap();
                assert_eq!(b.len(), enumerate_fan(&lambda).unwrap().distinct_count);
            }
        }
    }

    #[test]
    fn refinement_examples() {
        let r = braid_refinement_check(&p("2,1"), ConeSelection::All).unwrap();
        assert!(r.passed());
        assert_eq!(r.cones_checked, 6);
        assert_eq!(r.generators_checked, 12);
        for lambda in ["2,2", "3,2"] {
            let r =
                braid_refinement_check(&p(lambda), ConeSelection::Sampled { count: 12, seed: 5 })
                    .unwrap();
            assert!(r.passed(), "{lambda}: {:?}", r.failures);
            assert_eq!(r.sampled_orders.as_ref().map(Vec::len), Some(12));
        }
    }

    #[test]
    fn same_class_weights_give_same_ideal() {
        for lambda in [p("3,1"), p("3,1,1"), p("4,1"), p("2,2")] {
            let n = lambda.n();
            let fan = enumerate_fan(&lambda).unwrap();
            for class in fan.classes.values() {
                let forms: BTreeSet<MonomialIdeal> = class
                    .iter()
                    .enumerate()
                    .map(|(i, sigma)| {
                        let w =
                            interior_sample(&BraidCone::new(sigma.clone(), 0).unwrap(), i as u64);
                        let system = lex_groebner_generators(&lambda, sigma).unwrap();
                        let mons = system.polynomials().map(|f| {
                            let form = f.initial_form(&w).unwrap();
                            assert_eq!(form.len(), 1);
                            let m = form.terms().next().unwrap().0.clone();
                            m
                        });
                        minimalize(mons).unwrap()
                    })
                    .collect();
                assert_eq!(forms.len(), 1, "{lambda} n={n}");
            }
        }
    }

    fn arb_point(n: usize) -> impl Strategy<Value = Vec<i64>> {
        proptest::collection::vec(-50i64..50, n)
    }

    proptest! {
        #[test]
        fn cones_cover_space(w in arb_point(5), k in 0usize..5) {
            let w = q(&w);
            let sigma = covering_order(&w).unwrap();
            prop_assert!(cone_membership(&w, &BraidCone::new(sigma, k).unwrap()));
        }

        #[test]
        fn samples_are_interior(perm in Just((1..=6usize).collect::<Vec<_>>()).prop_shuffle(), k in 0usize..6, seed in any::<u64>()) {
            let cone = BraidCone::new(VariableOrder::new(perm).unwrap(), k).unwrap();
            let w = interior_sample(&cone, seed);
            prop_assert!(cone_interior(&w, &cone));
            prop_assert!(cone_membership(&w, &cone));
            let distinct: BTreeSet<_> = w.weights().iter().collect();
            prop_assert_eq!(distinct.len(), 6);
        }
    }
}
