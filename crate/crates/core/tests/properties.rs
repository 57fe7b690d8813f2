use std::collections::BTreeSet;

use proptest::prelude::*;
use qim_core::monoid::{ideal_monoid, DEFAULT_CLOSURE_BUDGET};
use qim_core::presentation::{decategorify, enumerate_presented, hk_presentation, MonoidPresentation};
use qim_core::specialfunc::{bimodule_of_function, classify, enumerate_special};
use qim_core::{trees, PathAlgebra, PathPair, Quiver, Subbimodule};

fn tree(max_n: usize) -> impl Strategy<Value = Quiver> {
    (2..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(1..=n, n - 2),
            0u32..(1 << (n - 1)),
        )
            .prop_map(move |(code, mask)| trees::from_prufer(n, &code, mask))
    })
}

fn admissible(max_n: usize) -> impl Strategy<Value = Quiver> {
    tree(max_n).prop_filter("admissible", Quiver::is_admissible)
}

/// A random subset of the path basis, as a seed.
fn seeded(max_n: usize) -> impl Strategy<Value = (Quiver, Vec<PathPair>)> {
    tree(max_n).prop_flat_map(|q| {
        let basis = PathAlgebra::new(q.clone()).path_basis().to_vec();
        let len = basis.len();
        (Just(q), proptest::collection::vec(any::<bool>(), len)).prop_map(move |(q, mask)| {
            let seed = basis.iter().zip(mask).filter(|(_, m)| *m).map(|(p, _)| *p).collect();
            (q, seed)
        })
    })
}

fn random_ideal(alg: &std::sync::Arc<PathAlgebra>, mask: &[bool]) -> Subbimodule {
    let seed: Vec<PathPair> = alg
        .path_basis()
        .iter()
        .zip(mask.iter().cycle())
        .filter(|(_, m)| **m)
        .map(|(p, _)| *p)
        .collect();
    alg.closure(seed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_is_a_closure_operator((q, seed) in seeded(7)) {
        let alg = PathAlgebra::new(q);
        let c = alg.closure(seed.clone()).unwrap();
        for p in &seed {
            prop_assert!(c.contains(p.target, p.source));
        }
        prop_assert!(alg.is_subbimodule(c.pairs()));
        prop_assert_eq!(alg.closure(c.pairs()).unwrap(), c.clone());
        // monotone: a smaller seed closes to a smaller ideal
        let half: Vec<PathPair> = seed.iter().step_by(2).copied().collect();
        prop_assert!(alg.closure(half).unwrap().is_subset(&c));
    }

    #[test]
    fn products_and_unions_are_ideals(
        q in tree(6),
        a in proptest::collection::vec(any::<bool>(), 1..20),
        b in proptest::collection::vec(any::<bool>(), 1..20),
        c in proptest::collection::vec(any::<bool>(), 1..20),
    ) {
        let alg = PathAlgebra::new(q);
        let (x, y, z) = (random_ideal(&alg, &a), random_ideal(&alg, &b), random_ideal(&alg, &c));
        let xy = x.product(&y).unwrap();
        prop_assert!(alg.is_subbimodule(xy.pairs()));
        prop_assert!(xy.is_subset(&x) && xy.is_subset(&y));
        prop_assert!(alg.is_subbimodule(x.union(&y).pairs()));
        prop_assert_eq!(xy.product(&z).unwrap(), x.product(&y.product(&z).unwrap()).unwrap());
        prop_assert_eq!(
            x.product(&y.union(&z)).unwrap(),
            xy.union(&x.product(&z).unwrap())
        );
        prop_assert_eq!(x.product(&alg.identity()).unwrap(), x.clone());
        prop_assert!(x.product(&alg.zero()).unwrap().is_zero());
    }

    #[test]
    fn decomposition_partitions(q in tree(6), a in proptest::collection::vec(any::<bool>(), 1..20)) {
        let alg = PathAlgebra::new(q);
        let x = random_ideal(&alg, &a);
        let parts = x.decompose();
        let mut total = alg.zero();
        for (i, p) in parts.iter().enumerate() {
            prop_assert!(p.is_indecomposable());
            prop_assert!(alg.is_subbimodule(p.pairs()));
            for r in &parts[i + 1..] {
                prop_assert!(p.bits().is_disjoint(r.bits()));
            }
            total = total.union(p);
        }
        prop_assert_eq!(total, x);
    }

    #[test]
    fn columns_are_up_closed(q in tree(7), a in proptest::collection::vec(any::<bool>(), 1..30)) {
        let alg = PathAlgebra::new(q.clone());
        let x = random_ideal(&alg, &a);
        for r in q.vertices() {
            let col = x.column(r);
            for &t in &col {
                for u in q.successors(t).unwrap() {
                    prop_assert!(col.contains(&u));
                }
            }
        }
    }

    #[test]
    fn split_generators_partition_j(q in admissible(7)) {
        let alg = PathAlgebra::new(q.clone());
        for s in q.split_vertices() {
            let m = q.components_without(s).unwrap().len();
            let parts: Vec<_> = (1..=m).map(|c| alg.generator_j_split(s, c).unwrap()).collect();
            let union = parts.iter().fold(alg.zero(), |acc, p| acc.union(p));
            prop_assert_eq!(union, alg.generator_j(s).unwrap());
            let total: usize = parts.iter().map(Subbimodule::len).sum();
            prop_assert_eq!(total, alg.generator_j(s).unwrap().len());
            let decomposed: BTreeSet<_> = alg.generator_j(s).unwrap().decompose().into_iter().collect();
            prop_assert_eq!(decomposed, parts.into_iter().collect::<BTreeSet<_>>());
        }
    }

    #[test]
    fn nonzero_products_intersect_supports(q in admissible(6)) {
        let alg = PathAlgebra::new(q.clone());
        let indec: Vec<Subbimodule> = enumerate_special(&q)
            .unwrap()
            .iter()
            .map(|f| bimodule_of_function(&alg, f).unwrap())
            .filter(|b| !b.is_zero())
            .collect();
        for b in indec.iter().take(12) {
            for d in indec.iter().take(12) {
                let p = b.product(d).unwrap();
                if !p.is_zero() {
                    prop_assert_eq!(p.support(), b.support().intersection(&d.support()));
                }
            }
        }
    }

    #[test]
    fn monotone_matches_all_pairs_definition(
        q in admissible(6),
        raw in proptest::collection::vec(0usize..=6, 6),
    ) {
        let n = q.n();
        let values: Vec<usize> = raw.iter().take(n).map(|&v| v.min(n)).collect();
        prop_assume!(values.len() == n);
        let c = classify(&q, &values).unwrap();
        let at = |i: usize| values[i - 1];
        let path = q.vertices().all(|i| at(i) == 0 || q.reaches(i, at(i)));
        // for every path j -> i: alpha(i) != 0 forces alpha(j) != 0 and a
        // path alpha(j) -> alpha(i)
        let monotone = path && q.vertices().all(|j| {
            q.vertices().filter(|&i| q.reaches(j, i)).all(|i| {
                at(i) == 0 || (at(j) != 0 && q.reaches(at(j), at(i)))
            })
        });
        prop_assert_eq!(c.is_path, path);
        prop_assert_eq!(c.is_monotone, monotone);
    }

    #[test]
    fn function_support_matches_bimodule_support(q in admissible(6)) {
        let alg = PathAlgebra::new(q.clone());
        for f in enumerate_special(&q).unwrap() {
            let b = bimodule_of_function(&alg, &f).unwrap();
            let c = classify(&q, f.values()).unwrap();
            prop_assert_eq!(b.support(), c.support);
        }
    }

    #[test]
    fn quiver_json_round_trip(q in tree(8)) {
        let back = Quiver::parse(&q.to_json()).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn decategorification_is_multiplicative(
        q in tree(6),
        a in proptest::collection::vec(any::<bool>(), 1..20),
        b in proptest::collection::vec(any::<bool>(), 1..20),
    ) {
        let alg = PathAlgebra::new(q);
        let (x, y) = (random_ideal(&alg, &a), random_ideal(&alg, &b));
        prop_assert_eq!(decategorify(&x.product(&y).unwrap()), &decategorify(&x) * &decategorify(&y));
    }

    #[test]
    fn presented_size_ignores_relation_order(q in tree(4), rot in 0usize..20) {
        let p = hk_presentation(&q);
        let mut rels = p.relations.clone();
        let k = rot % rels.len().max(1);
        rels.rotate_left(k);
        rels.reverse();
        let shuffled = MonoidPresentation::new(p.generators.clone(), None, rels).unwrap();
        let a = enumerate_presented(&p, 100_000, 10_000_000).unwrap();
        let b = enumerate_presented(&shuffled, 100_000, 10_000_000).unwrap();
        prop_assert_eq!(a.len(), b.len());
        prop_assert_eq!(a.elements, b.elements);
    }

    #[test]
    fn generated_tables_are_associative(q in tree(5)) {
        let m = ideal_monoid(&q, DEFAULT_CLOSURE_BUDGET).unwrap();
        prop_assert_eq!(m.associativity_violation(7), None);
    }
}

/// Every subset of the basis that is closed under both actions, by brute force.
fn brute_force_ideals(alg: &PathAlgebra) -> usize {
    let basis = alg.path_basis();
    (0u32..(1 << basis.len()))
        .filter(|mask| {
            let set = basis.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| *p);
            alg.is_subbimodule(set)
        })
        .count()
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 2..=4 {
        for q in trees::oriented_trees(n) {
            let alg = PathAlgebra::new(q.clone());
            let listed = alg.enumerate_subbimodules(1_000_000).unwrap();
            let distinct: BTreeSet<_> = listed.iter().cloned().collect();
            assert_eq!(distinct.len(), listed.len());
            assert_eq!(listed.len(), brute_force_ideals(&alg), "{:?}", q.arrows());
        }
    }
}

/// Order-preserving, order-decreasing self-maps of `1..=m`.
fn catalan_monoid_size(m: usize) -> usize {
    fn rec(i: usize, m: usize, prev: usize) -> usize {
        if i > m {
            return 1;
        }
        (prev.max(1)..=i).map(|v| rec(i + 1, m, v)).sum()
    }
    rec(1, m, 1)
}

#[test]
fn uniform_ideal_monoid_is_the_catalan_monoid_size() {
    for n in 2..=6 {
        let m = ideal_monoid(&qim_core::fixtures::uniform_a(n), DEFAULT_CLOSURE_BUDGET).unwrap();
        assert_eq!(m.len(), catalan_monoid_size(n + 1), "n = {n}");
    }
}
