//! Special functions: the classifying data of indecomposable subbimodules
//! over admissible trees, and the type A counting formulas.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::bimodule::{PathAlgebra, Subbimodule, Subgraph};
use crate::bitset::BitSet;
use crate::catalan::{cat, cat1, cat2, underline};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// A map `Q_0 -> Q_0 ∪ {0}`; entry `i - 1` holds the value at vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SpecialFunction(Vec<usize>);

impl SpecialFunction {
    pub fn new(values: Vec<usize>) -> Self {
        SpecialFunction(values)
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    /// Value at vertex `i` (1-based); `0` is the zero module.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn zero(n: usize) -> Self {
        SpecialFunction(vec![0; n])
    }

    pub fn identity(n: usize) -> Self {
        SpecialFunction((1..=n).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub is_path: bool,
    pub is_monotone: bool,
    pub support: Subgraph,
    pub is_special: bool,
}

fn check_values(q: &Quiver, values: &[usize]) -> Result<()> {
    if values.len() != q.n() {
        return Err(Error::BadValue(format!(
            "expected {} values, got {}",
            q.n(),
            values.len()
        )));
    }
    if let Some(&v) = values.iter().find(|&&v| v > q.n()) {
        return Err(Error::BadValue(format!("value {v} outside 0..={}", q.n())));
    }
    Ok(())
}

fn is_path_function(q: &Quiver, a: &[usize]) -> bool {
    q.vertices().all(|i| a[i - 1] == 0 || q.reaches(i, a[i - 1]))
}

/// Monotonicity checked along single arrows, which composes along paths.
fn is_monotone_local(q: &Quiver, a: &[usize]) -> bool {
    q.arrows().iter().all(|&(j, i)| {
        let (aj, ai) = (a[j - 1], a[i - 1]);
        ai == 0 || (aj != 0 && q.reaches(aj, ai))
    })
}

/// Union of the maximal chains `X` containing a vertex `i` with `α(i) ∈ X`.
fn support_of(q: &Quiver, a: &[usize]) -> Subgraph {
    let chains = q.maximal_chains();
    Subgraph::from_chains(chains.iter().filter(|c| {
        c.vertices
            .iter()
            .any(|&i| a[i - 1] != 0 && c.contains(a[i - 1]))
    }))
}

fn special_given_support(q: &Quiver, a: &[usize], support: &Subgraph) -> bool {
    support.is_connected()
        && support
            .vertices
            .iter()
            .filter(|&&i| (q.is_sink(i) || q.is_source(i)) && a[i - 1] == 0)
            .all(|&i| support.degree(i) == 1)
}

pub fn classify(q: &Quiver, values: &[usize]) -> Result<Classification> {
    q.require_admissible()?;
    check_values(q, values)?;
    let is_path = is_path_function(q, values);
    let is_monotone = is_path && is_monotone_local(q, values);
    let support = support_of(q, values);
    let is_special = is_monotone && special_given_support(q, values, &support);
    Ok(Classification {
        is_path,
        is_monotone,
        support,
        is_special,
    })
}

/// Every special function, ordered by support (sorted vertex list) and then
/// lexicographically by values.
pub fn enumerate_special(q: &Quiver) -> Result<Vec<SpecialFunction>> {
    Ok(enumerate_with_support(q)?
        .into_iter()
        .map(|(_, f)| f)
        .collect())
}

/// Special functions paired with their supports, in enumeration order.
pub fn enumerate_with_support(q: &Quiver) -> Result<Vec<(Subgraph, SpecialFunction)>> {
    q.require_admissible()?;
    let order = q.topological_order();
    let mut values = vec![0usize; q.n()];
    let mut found = Vec::new();
    monotone_rec(q, &order, 0, &mut values, &mut |a| {
        let support = support_of(q, a);
        if special_given_support(q, a, &support) {
            found.push((support, SpecialFunction(a.to_vec())));
        }
    });
    found.sort_by(|(s1, f1), (s2, f2)| {
        s1.vertices
            .iter()
            .cmp(s2.vertices.iter())
            .then_with(|| s1.edges.cmp(&s2.edges))
            .then_with(|| f1.cmp(f2))
    });
    Ok(found)
}

/// Depth-first over monotone path functions; vertices are visited in
/// topological order so every arrow into the current vertex is decidable.
fn monotone_rec(
    q: &Quiver,
    order: &[usize],
    pos: usize,
    values: &mut [usize],
    emit: &mut impl FnMut(&[usize]),
) {
    if pos == order.len() {
        emit(values);
        return;
    }
    let i = order[pos];
    let candidates = std::iter::once(0).chain(q.vertices().filter(|&v| q.reaches(i, v)));
    for v in candidates {
        let ok = v == 0
            || q.in_neighbors(i).iter().all(|&j| {
                let aj = values[j - 1];
                aj != 0 && q.reaches(aj, v)
            });
        if ok {
            values[i - 1] = v;
            monotone_rec(q, order, pos + 1, values, emit);
        }
    }
    values[i - 1] = 0;
}

/// Special functions grouped by support, groups in enumeration order.
pub fn group_by_support(
    census: Vec<(Subgraph, SpecialFunction)>,
) -> Vec<(Subgraph, Vec<SpecialFunction>)> {
    let mut groups: Vec<(Subgraph, Vec<SpecialFunction>)> = Vec::new();
    for (s, f) in census {
        match groups.last_mut() {
            Some((g, fs)) if *g == s => fs.push(f),
            _ => groups.push((s, vec![f])),
        }
    }
    groups
}

/// The special subtrees: supports of special functions, empty one included.
pub fn special_subtrees(q: &Quiver) -> Result<Vec<Subgraph>> {
    let mut seen = BTreeMap::new();
    for (s, _) in enumerate_with_support(q)? {
        seen.insert(s, ());
    }
    Ok(seen.into_keys().collect())
}

/// `x_B`: for each vertex `i`, the vertex generating `{t : a_ti in B}`, or
/// `0` when that set is empty.
pub fn function_of_bimodule(b: &Subbimodule) -> Result<SpecialFunction> {
    let q = b.algebra().quiver();
    q.require_admissible()?;
    let parts = b.decompose().len();
    if parts > 1 {
        return Err(Error::NotIndecomposable(parts));
    }
    let mut values = Vec::with_capacity(q.n());
    for i in q.vertices() {
        let col = b.column(i);
        if col.is_empty() {
            values.push(0);
            continue;
        }
        let gen = col
            .iter()
            .copied()
            .find(|&x| col.iter().all(|&t| q.reaches(x, t)))
            .ok_or(Error::NoUniqueGenerator(i))?;
        values.push(gen);
    }
    Ok(SpecialFunction(values))
}

/// `B_α`: the span of all `a_ts` with `α(s) != 0` and `t` a successor of `α(s)`.
pub fn bimodule_of_function(alg: &Arc<PathAlgebra>, f: &SpecialFunction) -> Result<Subbimodule> {
    let q = alg.quiver();
    let c = classify(q, f.values())?;
    if !c.is_special {
        return Err(Error::NotSpecial(f.values().to_vec()));
    }
    let mut bits = BitSet::new(alg.dim());
    for (idx, p) in alg.path_basis().iter().enumerate() {
        let x = f.at(p.source);
        if x != 0 && q.reaches(x, p.target) {
            bits.insert(idx);
        }
    }
    Ok(alg.from_bits(bits))
}

/// `l_1 < ... < l_k`: sinks and sources of a type A quiver whose arrows join
/// `v` and `v + 1` for every `v`.
pub fn type_a_boundary(q: &Quiver) -> Result<Vec<usize>> {
    let linear = q.arrows().iter().all(|&(s, t)| s.abs_diff(t) == 1);
    if !linear {
        return Err(Error::NotTypeA);
    }
    Ok(q.boundary_sets().0.into_iter().collect())
}

/// Number of special functions supported on `{l_i, l_i + 1, ..., l_j}`,
/// dispatched over the seven closed-form cases.
pub fn count_type_a(q: &Quiver, i: usize, j: usize) -> Result<BigUint> {
    let l = type_a_boundary(q)?;
    let k = l.len();
    if i < 1 || j > k || i >= j {
        return Err(Error::Domain(format!(
            "need 1 <= i < j <= k = {k}, got ({i},{j})"
        )));
    }
    let ll = |x: usize| l[x - 1];
    // product of cat(l_{s+1} - l_s) over s in from..=to (empty when from > to)
    let prod = |from: usize, to: usize| -> BigUint {
        (from..=to).fold(BigUint::one(), |acc, s| acc * cat(ll(s + 1) - ll(s)))
    };
    let n = q.n();
    if k == 2 {
        // (i, j) = (1, 2)
        return underline(cat(n + 1));
    }
    if (i, j) == (1, 2) {
        return underline(cat1(ll(2) - ll(1) + 2)?);
    }
    if (i, j) == (k - 1, k) {
        return underline(cat1(ll(k) - ll(k - 1) + 2)?);
    }
    if (i, j) == (1, k) {
        return Ok(cat(ll(2)) * cat(ll(k) - ll(k - 1) + 1) * prod(2, k - 2));
    }
    if k > 3 && j == i + 1 && (2..=k - 2).contains(&i) {
        return underline(cat2(ll(i + 1) - ll(i) + 2)?);
    }
    if k > 3 && i == 1 && (3..=k - 1).contains(&j) {
        return Ok(cat(ll(2)) * cat1(ll(j) - ll(j - 1) + 1)? * prod(2, j - 2));
    }
    if k > 3 && j == k && (2..=k - 2).contains(&i) {
        return Ok(cat(ll(k) - ll(k - 1) + 1) * cat1(ll(i + 1) - ll(i) + 1)? * prod(i + 1, k - 2));
    }
    if k > 4 && i >= 2 && j < k && j > i + 1 {
        return Ok(cat1(ll(i + 1) - ll(i) + 1)? * cat1(ll(j) - ll(j - 1) + 1)? * prod(i + 1, j - 2));
    }
    Err(Error::CaseNotCovered { i, j, k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::PathPair;
    use crate::fixtures;

    fn f(v: &[usize]) -> SpecialFunction {
        SpecialFunction::new(v.to_vec())
    }

    #[test]
    fn classify_examples() {
        let d4 = fixtures::d4_left();
        let c = classify(&d4, &[1, 0, 0, 0]).unwrap();
        assert!(c.is_special);
        assert_eq!(c.support.vertices, [1, 2].into_iter().collect());

        // path and monotone, support {2,3,4} connected, but the sink 2 has
        // value 0 and degree 2 in the support
        let c = classify(&d4, &[0, 0, 3, 4]).unwrap();
        assert!(c.is_path && c.is_monotone && !c.is_special);
        assert_eq!(c.support.vertices, [2, 3, 4].into_iter().collect());

        let c = classify(&d4, &[0, 0, 0, 0]).unwrap();
        assert!(c.is_special && c.support.is_empty());

        // not monotone: 1 -> 0 while 2 keeps its value
        let c = classify(&d4, &[0, 2, 3, 4]).unwrap();
        assert!(c.is_path && !c.is_monotone && !c.is_special);
    }

    #[test]
    fn classify_errors() {
        assert!(matches!(
            classify(&fixtures::d4_right(), &[0, 0, 0, 0]),
            Err(Error::NotAdmissible(_))
        ));
        assert!(matches!(
            classify(&fixtures::d4_left(), &[0, 0, 0]),
            Err(Error::BadValue(_))
        ));
        assert!(matches!(
            classify(&fixtures::d4_left(), &[5, 0, 0, 0]),
            Err(Error::BadValue(_))
        ));
    }

    #[test]
    fn support_of_a_nonspecial_function() {
        // beta = (1,0,4,4) on 1 -> 2 <- 3 -> 4 has a disconnected support
        let q = Quiver::new(4, [(1, 2), (3, 2), (3, 4)]).unwrap();
        let c = classify(&q, &[1, 0, 4, 4]).unwrap();
        assert!(c.is_monotone && !c.support.is_connected());
        let c = classify(&q, &[1, 2, 2, 0]).unwrap();
        assert!(c.support.is_connected());
        assert_eq!(c.support.vertices, [1, 2, 3].into_iter().collect());
    }

    #[test]
    fn d4_census() {
        let all = enumerate_special(&fixtures::d4_left()).unwrap();
        assert_eq!(all.len(), 15);
        let full: Vec<_> = enumerate_with_support(&fixtures::d4_left())
            .unwrap()
            .into_iter()
            .filter(|(s, _)| s.vertices.len() == 4)
            .map(|(_, f)| f)
            .collect();
        let mut expected = vec![
            f(&[1, 2, 3, 4]),
            f(&[2, 2, 3, 4]),
            f(&[1, 2, 2, 4]),
            f(&[1, 2, 3, 2]),
            f(&[2, 2, 2, 4]),
            f(&[1, 2, 2, 2]),
            f(&[2, 2, 3, 2]),
            f(&[2, 2, 2, 2]),
        ];
        expected.sort();
        assert_eq!(full, expected);
    }

    #[test]
    fn three_vertex_censuses() {
        assert_eq!(enumerate_special(&fixtures::a3_sink()).unwrap().len(), 9);
        let src = enumerate_special(&fixtures::a3_source()).unwrap();
        assert_eq!(src.len(), 9);
        for v in [[1, 2, 0], [0, 2, 3], [0, 2, 0], [1, 1, 0], [0, 1, 0]] {
            assert!(src.contains(&f(&v)));
        }
    }

    #[test]
    fn bimodule_function_examples() {
        let e6 = PathAlgebra::new(fixtures::six_vertex());
        let left = e6.generator_j_split(4, 1).unwrap();
        let right = e6.generator_j_split(4, 2).unwrap();
        assert_eq!(function_of_bimodule(&left).unwrap(), f(&[1, 2, 3, 3, 0, 0]));
        assert_eq!(function_of_bimodule(&right).unwrap(), f(&[0, 0, 0, 5, 5, 6]));
        assert_eq!(
            function_of_bimodule(&e6.identity()).unwrap(),
            SpecialFunction::identity(6)
        );
        assert_eq!(
            function_of_bimodule(&e6.generator_j(4).unwrap()).unwrap_err(),
            Error::NotIndecomposable(2)
        );
    }

    #[test]
    fn nine_vertex_bimodule() {
        let alg = PathAlgebra::new(fixtures::nine_vertex());
        let b = bimodule_of_function(&alg, &f(&[0, 0, 0, 3, 5, 7, 8, 8, 8])).unwrap();
        let mut expected: Vec<PathPair> = [
            (3, 4), (3, 5), (4, 5), (5, 5), (6, 5), (7, 5), (8, 5), (7, 6), (8, 6), (8, 7),
            (8, 8), (8, 9),
        ]
        .iter()
        .map(|&(t, s)| PathPair::new(t, s))
        .collect();
        expected.sort();
        assert_eq!(b.pairs(), expected);
        assert!(bimodule_of_function(&alg, &SpecialFunction::zero(9)).unwrap().is_zero());
        assert_eq!(
            bimodule_of_function(&alg, &SpecialFunction::identity(9)).unwrap(),
            alg.identity()
        );
        assert!(matches!(
            bimodule_of_function(&alg, &f(&[0, 0, 0, 0, 0, 0, 0, 9, 0])),
            Err(Error::NotSpecial(_))
        ));
    }

    #[test]
    fn type_a_counts() {
        let q = fixtures::zigzag6();
        assert_eq!(type_a_boundary(&q).unwrap(), vec![1, 2, 4, 5, 6]);
        assert_eq!(count_type_a(&q, 2, 4).unwrap(), BigUint::from(3u32));
        for n in 2..=7 {
            let q = fixtures::uniform_a(n);
            assert_eq!(count_type_a(&q, 1, 2).unwrap(), cat(n + 1) - 1u32);
        }
        assert_eq!(count_type_a(&fixtures::d4_left(), 1, 2).unwrap_err(), Error::NotTypeA);
        assert!(matches!(count_type_a(&q, 3, 3), Err(Error::Domain(_))));
    }
}
