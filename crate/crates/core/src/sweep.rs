//! Per-quiver consistency checks, each returning a list of failure messages,
//! and a driver that runs one of them over a family of quivers.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::bimodule::{PathAlgebra, Subbimodule, Subgraph};
use crate::error::Result;
use crate::monoid::{
    b_omega_product, census_maximum, ideal_monoid, indecomposable_monoid, maximal_elements,
    maximal_elements_from_census, DEFAULT_CLOSURE_BUDGET,
};
use crate::par;
use crate::presentation::{
    check_isomorphism, decategorify, enumerate_presented, hk_matrix_monoid, hk_presentation,
    homomorphism_violation, ind_presentation, quotient_fibers, DEFAULT_MAX_ELEMENTS,
    DEFAULT_MAX_STEPS,
};
use crate::quiver::Quiver;
use crate::relations::{check_relations, hk_generators, ind_generators, RelationMode, ZERO};
use crate::specialfunc::{
    bimodule_of_function, count_type_a, enumerate_with_support, function_of_bimodule,
    type_a_boundary,
};

/// Upper bound on subbimodule counts in the sweeps.
pub const ENUMERATION_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Special functions and indecomposable ideals correspond both ways.
    Classification,
    /// Products of indecomposables are indecomposable or zero, with
    /// intersected supports.
    Products,
    /// Both relation systems hold as ideal equalities.
    Relations,
    /// Generating sets produce the right monoids and are minimal.
    Generators,
    /// HK presentation, ideal monoid and matrix monoid agree.
    HkPresentation,
    /// Split presentation and indecomposable monoid agree.
    SplitPresentation,
    /// The matrix map is an injective homomorphism on all ideals.
    Decategorification,
    /// The product formula gives the largest ideal for each special subtree.
    LargestWithSupport,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Classification,
        Check::Products,
        Check::Relations,
        Check::Generators,
        Check::HkPresentation,
        Check::SplitPresentation,
        Check::Decategorification,
        Check::LargestWithSupport,
    ];

    pub fn run(self, q: &Quiver) -> Vec<String> {
        let r = match self {
            Check::Classification => classification(q),
            Check::Products => products(q),
            Check::Relations => relations(q),
            Check::Generators => generators(q),
            Check::HkPresentation => hk_chain(q),
            Check::SplitPresentation => split_chain(q),
            Check::Decategorification => decategorification(q),
            Check::LargestWithSupport => largest_with_support(q),
        };
        r.unwrap_or_else(|e| vec![format!("error: {e}")])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuiverResult {
    pub arrows: Vec<(usize, usize)>,
    pub failures: Vec<String>,
}

/// Runs `check` on every quiver, in parallel when enabled; results keep the
/// family order.
pub fn run(family: &[Quiver], check: Check) -> Vec<QuiverResult> {
    par::map(family, |q| QuiverResult {
        arrows: q.arrows().to_vec(),
        failures: check.run(q),
    })
}

/// As [`run`], always sequential.
pub fn run_sequential(family: &[Quiver], check: Check) -> Vec<QuiverResult> {
    par::map_sequential(family, |q| QuiverResult {
        arrows: q.arrows().to_vec(),
        failures: check.run(q),
    })
}

/// Nonzero indecomposable ideals, found by decomposing every ideal.
pub fn indecomposables_by_decomposition(alg: &Arc<PathAlgebra>) -> Result<BTreeSet<Subbimodule>> {
    let mut out = BTreeSet::new();
    for b in alg.enumerate_subbimodules(ENUMERATION_BUDGET)? {
        out.extend(b.decompose());
    }
    Ok(out)
}

fn classification(q: &Quiver) -> Result<Vec<String>> {
    let alg = PathAlgebra::new(q.clone());
    let mut fails = Vec::new();
    let indec = indecomposables_by_decomposition(&alg)?;
    let census = enumerate_with_support(q)?;
    let mut images = BTreeSet::new();
    for (_, f) in &census {
        let b = bimodule_of_function(&alg, f)?;
        if !(b.is_zero() || b.is_indecomposable()) {
            fails.push(format!("B of {:?} is decomposable", f.values()));
        }
        match function_of_bimodule(&b) {
            Ok(g) if g == *f => {}
            other => fails.push(format!("x of B of {:?} gives {other:?}", f.values())),
        }
        if !b.is_zero() && !indec.contains(&b) {
            fails.push(format!("B of {:?} missing from the decomposition census", f.values()));
        }
        images.insert(b);
    }
    for b in &indec {
        let f = function_of_bimodule(b)?;
        match bimodule_of_function(&alg, &f) {
            Ok(c) if c == *b => {}
            other => fails.push(format!("B of x of {:?} gives {other:?}", b.pairs())),
        }
    }
    if census.len() != indec.len() + 1 || images.len() != census.len() {
        fails.push(format!(
            "{} special functions, {} distinct images, {} indecomposables",
            census.len(),
            images.len(),
            indec.len()
        ));
    }
    Ok(fails)
}

fn nonzero_indecomposables(alg: &Arc<PathAlgebra>) -> Result<Vec<Subbimodule>> {
    let mut out = Vec::new();
    for (_, f) in enumerate_with_support(alg.quiver())? {
        let b = bimodule_of_function(alg, &f)?;
        if !b.is_zero() {
            out.push(b);
        }
    }
    Ok(out)
}

fn products(q: &Quiver) -> Result<Vec<String>> {
    let alg = PathAlgebra::new(q.clone());
    let indec = nonzero_indecomposables(&alg)?;
    let supports: Vec<Subgraph> = indec.iter().map(Subbimodule::support).collect();
    let mut fails = Vec::new();
    for (b, sb) in indec.iter().zip(&supports) {
        for (d, sd) in indec.iter().zip(&supports) {
            let p = b.product(d)?;
            if p.is_zero() {
                continue;
            }
            let parts = p.decompose().len();
            if parts != 1 {
                fails.push(format!("{:?} * {:?} has {parts} summands", b.pairs(), d.pairs()));
            }
            if p.support() != sb.intersection(sd) {
                fails.push(format!("support of {:?} * {:?}", b.pairs(), d.pairs()));
            }
        }
    }
    Ok(fails)
}

fn relations(q: &Quiver) -> Result<Vec<String>> {
    let alg = PathAlgebra::new(q.clone());
    let mut fails = Vec::new();
    for mode in [RelationMode::Hk, RelationMode::Split] {
        let report = check_relations(&alg, mode)?;
        for f in report.failures {
            fails.push(format!(
                "{mode:?} ({}) {} = {}",
                f.schema,
                f.lhs.join(" "),
                f.rhs.join(" ")
            ));
        }
    }
    Ok(fails)
}

fn generators(q: &Quiver) -> Result<Vec<String>> {
    let alg = PathAlgebra::new(q.clone());
    let mut fails = Vec::new();

    let all: BTreeSet<Subbimodule> = alg.enumerate_subbimodules(ENUMERATION_BUDGET)?.into_iter().collect();
    let i = ideal_monoid(q, DEFAULT_CLOSURE_BUDGET)?;
    let generated: BTreeSet<Subbimodule> = i.elements.iter().cloned().collect();
    if generated != all {
        fails.push(format!("J_s generate {} of {} ideals", generated.len(), all.len()));
    }
    let names: Vec<String> = hk_generators(&alg).into_iter().map(|g| g.0).collect();
    for (g, essential) in i.minimal_generating_check(&names) {
        if !essential {
            fails.push(format!("{g} is redundant in the ideal monoid"));
        }
    }

    let mut expected = indecomposables_by_decomposition(&alg)?;
    expected.insert(alg.zero());
    expected.insert(alg.identity());
    let ind = indecomposable_monoid(q, DEFAULT_CLOSURE_BUDGET)?;
    let generated: BTreeSet<Subbimodule> = ind.elements.iter().cloned().collect();
    if generated != expected {
        fails.push(format!(
            "split generators give {} elements, expected {}",
            generated.len(),
            expected.len()
        ));
    }
    let names: Vec<String> = ind_generators(&alg)?.into_iter().map(|g| g.0).collect();
    for (g, essential) in ind.minimal_generating_check(&names) {
        if !essential {
            fails.push(format!("{g} is redundant in the indecomposable monoid"));
        }
    }

    let mut maximal = maximal_elements(q)?;
    maximal.sort();
    if maximal != maximal_elements_from_census(q)? {
        fails.push("maximal elements differ from the census".into());
    }
    Ok(fails)
}

fn hk_chain(q: &Quiver) -> Result<Vec<String>> {
    let mut fails = Vec::new();
    let s = enumerate_presented(&hk_presentation(q), DEFAULT_MAX_ELEMENTS, DEFAULT_MAX_STEPS)?;
    let i = ideal_monoid(q, DEFAULT_CLOSURE_BUDGET)?;
    let t = hk_matrix_monoid(q, DEFAULT_CLOSURE_BUDGET)?;
    let st = check_isomorphism(&s, &i, &[])?;
    if !st.isomorphic {
        fails.push(format!("presented vs ideals: {:?}", st.witness));
    }
    let it = check_isomorphism(&i, &t, &[])?;
    if !it.isomorphic {
        fails.push(format!("ideals vs matrices: {:?}", it.witness));
    }
    Ok(fails)
}

fn split_chain(q: &Quiver) -> Result<Vec<String>> {
    let s = enumerate_presented(&ind_presentation(q)?, DEFAULT_MAX_ELEMENTS, DEFAULT_MAX_STEPS)?;
    let ind = indecomposable_monoid(q, DEFAULT_CLOSURE_BUDGET)?;
    let r = check_isomorphism(&s, &ind, &[])?;
    if r.isomorphic {
        return Ok(Vec::new());
    }
    let fibers = quotient_fibers(&s, &ind, &[])?;
    let mut msg = format!(
        "presented {} vs indecomposable {} elements; onto homomorphism: {}",
        s.len(),
        ind.len(),
        fibers.homomorphism && fibers.surjective
    );
    for (y, words) in &fibers.collapsed {
        let label = if Some(*y) == ind.zero { ZERO.to_string() } else { format!("#{y}") };
        let ws: Vec<String> = words.iter().map(|w| w.join(" ")).collect();
        msg.push_str(&format!("; {label} <- [{}]", ws.join(", ")));
    }
    Ok(vec![msg])
}

fn decategorification(q: &Quiver) -> Result<Vec<String>> {
    let i = ideal_monoid(q, DEFAULT_CLOSURE_BUDGET)?;
    let mut fails = Vec::new();
    if let Some((x, y)) = homomorphism_violation(&i, decategorify, |a, b| a * b) {
        fails.push(format!("not multiplicative at {:?}, {:?}", i.word(x), i.word(y)));
    }
    let mut seen = BTreeMap::new();
    for (x, b) in i.elements.iter().enumerate() {
        if let Some(prev) = seen.insert(decategorify(b), x) {
            fails.push(format!("{:?} and {:?} share a matrix", i.word(prev), i.word(x)));
        }
    }
    Ok(fails)
}

fn largest_with_support(q: &Quiver) -> Result<Vec<String>> {
    let alg = PathAlgebra::new(q.clone());
    let mut fails = Vec::new();
    let omegas: BTreeSet<Subgraph> = enumerate_with_support(q)?.into_iter().map(|(s, _)| s).collect();
    for omega in &omegas {
        let formula = b_omega_product(&alg, omega)?;
        let expected = if omega.is_empty() {
            Some(alg.zero())
        } else {
            census_maximum(&alg, omega)?
        };
        if Some(&formula) != expected.as_ref() {
            fails.push(format!("support {:?}: formula {:?}, census {:?}", omega.vertices, formula, expected));
        }
    }
    Ok(fails)
}

/// Compares every closed-form type A count with the census, for one
/// orientation. Returns the number of `(i, j)` pairs checked.
pub fn type_a_counts(q: &Quiver) -> Result<(usize, Vec<String>)> {
    let l = type_a_boundary(q)?;
    let k = l.len();
    let mut by_support: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for (s, _) in enumerate_with_support(q)? {
        *by_support.entry(s.vertices.into_iter().collect()).or_default() += 1;
    }
    let mut fails = Vec::new();
    let mut checked = 0;
    for i in 1..=k {
        for j in i + 1..=k {
            let support: Vec<usize> = (l[i - 1]..=l[j - 1]).collect();
            let brute = by_support.get(&support).copied().unwrap_or(0);
            checked += 1;
            match count_type_a(q, i, j) {
                Ok(c) if c == brute.into() => {}
                other => fails.push(format!("{:?} C({i},{j}): formula {other:?}, census {brute}", q.arrows())),
            }
        }
    }
    Ok((checked, fails))
}
