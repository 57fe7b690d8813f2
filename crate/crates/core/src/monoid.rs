//! Finite monoids given by a multiplication table, and the monoids of ideals.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::hash::Hash;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::bimodule::{PathAlgebra, Subbimodule, Subgraph};
use crate::error::{Error, Result};
use crate::quiver::Quiver;
use crate::relations::{hk_generators, ind_generators, ZERO};
use crate::specialfunc::{bimodule_of_function, enumerate_with_support};

pub const DEFAULT_CLOSURE_BUDGET: usize = 1_000_000;

/// Largest monoid whose associativity is checked on every triple.
const EXHAUSTIVE_ASSOCIATIVITY: usize = 200;
const SAMPLED_TRIPLES: usize = 100_000;

/// A finite monoid with elements in BFS order from the identity.
#[derive(Clone, Debug)]
pub struct FiniteMonoid<K> {
    pub elements: Vec<K>,
    /// `table[x][y]` is the index of `elements[x] * elements[y]`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
    pub zero: Option<usize>,
    /// Generator names with their element indices, in generator order.
    pub generators: Vec<(String, usize)>,
    /// Shortest word (generator positions, ties by position) for each element.
    pub words: Vec<Vec<usize>>,
}

impl<K> FiniteMonoid<K> {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x][y]
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.generators.iter().find(|(n, _)| n == name).map(|&(_, i)| i)
    }

    /// Shortest word of an element, as generator names.
    pub fn word(&self, x: usize) -> Vec<String> {
        self.words[x]
            .iter()
            .map(|&g| self.generators[g].0.clone())
            .collect()
    }

    /// Index of the product of a word of generator names.
    pub fn evaluate(&self, word: &[String]) -> Option<usize> {
        word.iter().try_fold(self.identity, |acc, g| {
            self.generator(g).map(|gi| self.table[acc][gi])
        })
    }

    /// The absorbing element other than the identity, if any.
    fn find_zero(table: &[Vec<usize>], identity: usize) -> Option<usize> {
        (0..table.len()).find(|&z| {
            z != identity && (0..table.len()).all(|x| table[z][x] == z && table[x][z] == z)
        })
    }

    /// First triple violating associativity: exhaustive for small monoids,
    /// otherwise a seeded random sample.
    pub fn associativity_violation(&self, seed: u64) -> Option<(usize, usize, usize)> {
        let n = self.len();
        let bad = |a: usize, b: usize, c: usize| {
            self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]]
        };
        if n <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if bad(a, b, c) {
                            return Some((a, b, c));
                        }
                    }
                }
            }
            None
        } else {
            let mut rng = StdRng::seed_from_u64(seed);
            (0..SAMPLED_TRIPLES)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(|&(a, b, c)| bad(a, b, c))
        }
    }

    /// Size of the submonoid generated by the given generator positions.
    pub fn closure_size(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.len()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        let mut count = 1;
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.table[x][self.generators[g].1];
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    queue.push_back(y);
                }
            }
        }
        count
    }

    /// For each named generator, whether dropping it shrinks the closure.
    /// Names not among the generators are reported as non-essential.
    pub fn minimal_generating_check(&self, names: &[String]) -> Vec<(String, bool)> {
        let positions: Vec<Option<usize>> = names
            .iter()
            .map(|n| self.generators.iter().position(|(g, _)| g == n))
            .collect();
        names
            .iter()
            .enumerate()
            .map(|(k, name)| {
                let others: Vec<usize> = positions
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != k)
                    .filter_map(|(_, p)| *p)
                    .collect();
                let essential = positions[k].is_some() && self.closure_size(&others) < self.len();
                (name.clone(), essential)
            })
            .collect()
    }

    /// Adds a name for an existing element, such as the zero.
    pub fn add_generator_name(&mut self, name: &str, index: usize) {
        self.generators.push((name.to_string(), index));
    }

    pub fn map_keys<L>(self, f: impl FnMut(K) -> L) -> FiniteMonoid<L> {
        FiniteMonoid {
            elements: self.elements.into_iter().map(f).collect(),
            table: self.table,
            identity: self.identity,
            zero: self.zero,
            generators: self.generators,
            words: self.words,
        }
    }

    /// The table as CSV rows, first row and column holding element indices.
    pub fn table_rows(&self) -> Vec<Vec<String>> {
        let mut rows = Vec::with_capacity(self.len() + 1);
        let mut header = vec!["*".to_string()];
        header.extend((0..self.len()).map(|i| i.to_string()));
        rows.push(header);
        for (x, row) in self.table.iter().enumerate() {
            let mut r = vec![x.to_string()];
            r.extend(row.iter().map(|y| y.to_string()));
            rows.push(r);
        }
        rows
    }
}

impl<K: Serialize> Serialize for FiniteMonoid<K> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Gens<'a>(&'a [(String, usize)]);
        impl Serialize for Gens<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (k, v) in self.0 {
                    m.serialize_entry(k, v)?;
                }
                m.end()
            }
        }
        let mut m = serializer.serialize_map(Some(5))?;
        m.serialize_entry("elements", &self.elements)?;
        m.serialize_entry("table", &self.table)?;
        m.serialize_entry("identity", &self.identity)?;
        m.serialize_entry("zero", &self.zero)?;
        m.serialize_entry("generators", &Gens(&self.generators))?;
        m.end()
    }
}

/// All products of the generators, in BFS order by shortest word.
pub fn generate_closure<K: Clone + Eq + Hash>(
    gens: Vec<(String, K)>,
    identity: K,
    mul: impl Fn(&K, &K) -> K,
    max: usize,
) -> Result<FiniteMonoid<K>> {
    let mut index: HashMap<K, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    index.insert(identity, 0);
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    // right[x][g] = x * gen_g
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let x = elements[head].clone();
        let mut row = Vec::with_capacity(gens.len());
        for (g, (_, gk)) in gens.iter().enumerate() {
            let y = mul(&x, gk);
            let next = elements.len();
            let id = *index.entry(y.clone()).or_insert(next);
            if id == next {
                if next >= max {
                    return Err(Error::BudgetExceeded(max));
                }
                elements.push(y);
                parent.push(Some((head, g)));
            }
            row.push(id);
        }
        right.push(row);
        head += 1;
    }

    let n = elements.len();
    let mut words: Vec<Vec<usize>> = vec![Vec::new(); n];
    for y in 1..n {
        let (p, g) = parent[y].unwrap();
        let mut w = words[p].clone();
        w.push(g);
        words[y] = w;
    }
    // table[x][y] = (x * parent(y)) * gen(y); parents precede children
    let mut columns: Vec<Vec<usize>> = vec![(0..n).collect()];
    for link in &parent[1..] {
        let (p, g) = link.unwrap();
        let col: Vec<usize> = columns[p].iter().map(|&xp| right[xp][g]).collect();
        columns.push(col);
    }
    let table: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| columns[y][x]).collect()).collect();

    let generators = gens
        .iter()
        .enumerate()
        .map(|(g, (name, _))| (name.clone(), right[0][g]))
        .collect();
    let zero = FiniteMonoid::<K>::find_zero(&table, 0);
    Ok(FiniteMonoid {
        elements,
        table,
        identity: 0,
        zero,
        generators,
        words,
    })
}

fn bimodule_closure(
    alg: &Arc<PathAlgebra>,
    gens: Vec<(String, Subbimodule)>,
    max: usize,
) -> Result<FiniteMonoid<Subbimodule>> {
    generate_closure(
        gens,
        alg.identity(),
        |a, b| a.product(b).expect("same algebra"),
        max,
    )
}

/// The monoid of all ideals, generated by `J_1, ..., J_n`.
pub fn ideal_monoid(q: &Quiver, max: usize) -> Result<FiniteMonoid<Subbimodule>> {
    let alg = PathAlgebra::new(q.clone());
    bimodule_closure(&alg, hk_generators(&alg), max)
}

/// The monoid of indecomposable ideals and zero, generated by the split
/// generators. When there is a split vertex the zero element is also
/// registered under the name `0`.
pub fn indecomposable_monoid(q: &Quiver, max: usize) -> Result<FiniteMonoid<Subbimodule>> {
    let alg = PathAlgebra::new(q.clone());
    let gens = ind_generators(&alg)?;
    let mut m = bimodule_closure(&alg, gens, max)?;
    if !q.split_vertices().is_empty() {
        if let Some(z) = m.zero {
            m.add_generator_name(ZERO, z);
        }
    }
    Ok(m)
}

/// Indecomposable summands of `B D`.
pub fn star(b: &Subbimodule, d: &Subbimodule) -> Result<Vec<Subbimodule>> {
    for x in [b, d] {
        let parts = x.decompose().len();
        if parts != 1 {
            return Err(Error::NotIndecomposable(parts));
        }
    }
    Ok(b.product(d)?.decompose())
}

/// `{J_s : s not split}`.
pub fn maximal_elements(q: &Quiver) -> Result<Vec<Subbimodule>> {
    q.require_admissible()?;
    let alg = PathAlgebra::new(q.clone());
    Ok(q.vertices()
        .filter(|&s| !q.is_split(s))
        .map(|s| alg.generator_j(s).expect("valid vertex"))
        .collect())
}

/// Inclusion-maximal elements among the full-support indecomposables other
/// than the identity, computed from the census.
pub fn maximal_elements_from_census(q: &Quiver) -> Result<Vec<Subbimodule>> {
    let alg = PathAlgebra::new(q.clone());
    let full = Subgraph::full(q);
    let identity = alg.identity();
    let mut cands = Vec::new();
    for (s, f) in enumerate_with_support(q)? {
        if s == full {
            let b = bimodule_of_function(&alg, &f)?;
            if b != identity {
                cands.push(b);
            }
        }
    }
    let mut out: Vec<Subbimodule> = cands
        .iter()
        .filter(|b| !cands.iter().any(|c| c != *b && b.is_subset(c)))
        .cloned()
        .collect();
    out.sort();
    Ok(out)
}

/// Indecomposables with support `omega`, from the special-function census.
fn census_with_support(alg: &Arc<PathAlgebra>, omega: &Subgraph) -> Result<Vec<Subbimodule>> {
    enumerate_with_support(alg.quiver())?
        .into_iter()
        .filter(|(s, _)| s == omega)
        .map(|(_, f)| bimodule_of_function(alg, &f))
        .collect()
}

/// The inclusion-maximum of the indecomposables supported on `omega`, if it
/// exists.
pub fn census_maximum(alg: &Arc<PathAlgebra>, omega: &Subgraph) -> Result<Option<Subbimodule>> {
    let members = census_with_support(alg, omega)?;
    let Some(first) = members.first() else {
        return Ok(None);
    };
    let union = members.iter().fold(first.clone(), |acc, b| acc.union(b));
    Ok(members.contains(&union).then_some(union))
}

/// The largest indecomposable supported on the special subtree `omega`, as
/// the product of `J_t^(p)` over sources `t` and then sinks of degree one in
/// `omega` among the split vertices, `p` the component meeting `omega`.
pub fn b_omega(q: &Quiver, omega: &Subgraph) -> Result<Subbimodule> {
    q.require_admissible()?;
    let alg = PathAlgebra::new(q.clone());
    if !crate::specialfunc::special_subtrees(q)?.contains(omega) {
        return Err(Error::NotSpecialSubtree);
    }
    let result = b_omega_product(&alg, omega)?;
    debug_assert_eq!(
        Some(&result),
        census_maximum(&alg, omega)?.as_ref(),
        "product formula disagrees with the census maximum"
    );
    Ok(result)
}

/// The product formula alone, without validating `omega`.
pub fn b_omega_product(alg: &Arc<PathAlgebra>, omega: &Subgraph) -> Result<Subbimodule> {
    let q = alg.quiver();
    if omega.is_empty() {
        return Ok(alg.zero());
    }
    let ends = |pick: fn(&Quiver, usize) -> bool| -> Vec<usize> {
        q.split_vertices()
            .into_iter()
            .filter(|&v| pick(q, v) && omega.vertices.contains(&v) && omega.degree(v) == 1)
            .collect()
    };
    let sources = ends(Quiver::is_source);
    let sinks = ends(Quiver::is_sink);
    let mut acc = alg.identity();
    for t in sources.into_iter().chain(sinks) {
        let comps = q.components_without(t)?;
        let p = comps
            .iter()
            .position(|c| c.iter().any(|v| omega.vertices.contains(v)))
            .expect("omega has an edge at t");
        acc = acc.product(&alg.generator_j_split(t, p + 1)?)?;
    }
    Ok(acc)
}

/// Elements of the monoid keyed by their position, for set comparisons.
pub fn element_set<K: Clone + Ord>(m: &FiniteMonoid<K>) -> BTreeMap<K, usize> {
    m.elements.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bimodule::PathPair;
    use crate::fixtures;

    #[test]
    fn a2_ideal_monoid() {
        let m = ideal_monoid(&fixtures::a2(), DEFAULT_CLOSURE_BUDGET).unwrap();
        assert_eq!(m.len(), 5);
        assert!(m.zero.is_some());
        let words: Vec<Vec<String>> = (0..m.len()).map(|x| m.word(x)).collect();
        assert_eq!(words[0], Vec::<String>::new());
        assert!(words.contains(&vec!["J1".to_string(), "J2".to_string()]));
        assert_eq!(m.associativity_violation(1), None);
    }

    #[test]
    fn single_idempotent() {
        let m = generate_closure(vec![("e".into(), 1u8)], 0u8, |a, b| *a.max(b), 10).unwrap();
        assert_eq!(m.len(), 2);
        assert_eq!(m.zero, Some(1));
    }

    #[test]
    fn budget_is_enforced() {
        let err = generate_closure(vec![("g".into(), 1u64)], 0u64, |a, b| a + b, 50).unwrap_err();
        assert_eq!(err, Error::BudgetExceeded(50));
    }

    #[test]
    fn catalan_monoid_sizes() {
        assert_eq!(ideal_monoid(&fixtures::uniform_a(3), 1000).unwrap().len(), 14);
        assert_eq!(indecomposable_monoid(&fixtures::uniform_a(3), 1000).unwrap().len(), 14);
        assert_eq!(indecomposable_monoid(&fixtures::a2(), 1000).unwrap().len(), 5);
    }

    #[test]
    fn d4_monoids() {
        let q = fixtures::d4_left();
        let alg = PathAlgebra::new(q.clone());
        let all = alg.enumerate_subbimodules(100_000).unwrap();
        let i = ideal_monoid(&q, DEFAULT_CLOSURE_BUDGET).unwrap();
        assert_eq!(i.len(), all.len());
        let ind = indecomposable_monoid(&q, DEFAULT_CLOSURE_BUDGET).unwrap();
        assert_eq!(ind.len(), 15);
        assert_eq!(ind.generator(ZERO), ind.zero);
        assert!(ind.elements.iter().all(|b| b.is_zero() || b.is_indecomposable()));
    }

    #[test]
    fn star_examples() {
        let alg = PathAlgebra::new(fixtures::a2());
        let j1 = alg.generator_j(1).unwrap();
        let j2 = alg.generator_j(2).unwrap();
        let s = star(&j1, &j2).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].pairs(), vec![PathPair::new(2, 1)]);
        assert!(star(&j2, &j1).unwrap().is_empty());
        assert_eq!(star(&j1, &alg.identity()).unwrap(), vec![j1.clone()]);
        assert_eq!(star(&alg.zero(), &j1).unwrap_err(), Error::NotIndecomposable(0));
    }

    #[test]
    fn minimality() {
        let m = ideal_monoid(&fixtures::a2(), 100).unwrap();
        let names: Vec<String> = vec!["J1".into(), "J2".into()];
        assert!(m.minimal_generating_check(&names).iter().all(|(_, e)| *e));

        let q = fixtures::d4_left();
        let ind = indecomposable_monoid(&q, DEFAULT_CLOSURE_BUDGET).unwrap();
        let names: Vec<String> = ind.generators.iter().map(|g| g.0.clone()).filter(|g| g != ZERO).collect();
        assert_eq!(names.len(), 6);
        assert!(ind.minimal_generating_check(&names).iter().all(|(_, e)| *e));

        // a redundant product generator is not essential
        let alg = PathAlgebra::new(fixtures::a2());
        let j1 = alg.generator_j(1).unwrap();
        let j2 = alg.generator_j(2).unwrap();
        let j12 = j1.product(&j2).unwrap();
        let m = generate_closure(
            vec![("J1".into(), j1), ("J2".into(), j2), ("J1J2".into(), j12)],
            alg.identity(),
            |a, b| a.product(b).unwrap(),
            100,
        )
        .unwrap();
        let names: Vec<String> = vec!["J1".into(), "J2".into(), "J1J2".into()];
        let report = m.minimal_generating_check(&names);
        assert_eq!(report[2], ("J1J2".to_string(), false));
        assert!(report[0].1 && report[1].1);
    }

    #[test]
    fn maximal_elements_examples() {
        let names = |q: &Quiver| -> Vec<Subbimodule> {
            let mut v = maximal_elements(q).unwrap();
            v.sort();
            v
        };
        for q in [fixtures::d4_left(), fixtures::uniform_a(3), fixtures::six_vertex()] {
            assert_eq!(names(&q), maximal_elements_from_census(&q).unwrap());
        }
        assert_eq!(maximal_elements(&fixtures::six_vertex()).unwrap().len(), 4);
        assert_eq!(maximal_elements(&fixtures::d4_left()).unwrap().len(), 3);
    }

    #[test]
    fn b_omega_examples() {
        let q = fixtures::six_vertex();
        let alg = PathAlgebra::new(q.clone());
        assert_eq!(b_omega(&q, &Subgraph::full(&q)).unwrap(), alg.identity());
        assert!(b_omega(&q, &Subgraph::empty()).unwrap().is_zero());
        let right = alg.generator_j_split(4, 2).unwrap();
        assert_eq!(b_omega(&q, &right.support()).unwrap(), right);

        let d4 = fixtures::d4_left();
        let alg = PathAlgebra::new(d4.clone());
        let left = alg.generator_j_split(2, 1).unwrap();
        assert_eq!(b_omega(&d4, &left.support()).unwrap(), left);

        let mut bad = Subgraph::empty();
        bad.vertices.insert(1);
        assert_eq!(b_omega(&d4, &bad).unwrap_err(), Error::NotSpecialSubtree);
    }

    #[test]
    fn serializes_generators_in_order() {
        let m = ideal_monoid(&fixtures::a2(), 100).unwrap();
        let v = serde_json::to_value(&m).unwrap();
        assert_eq!(v["table"].as_array().unwrap().len(), 5);
        let keys: Vec<&String> = v["generators"].as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 2);
    }
}
