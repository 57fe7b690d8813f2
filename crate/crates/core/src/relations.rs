//! Generating sets and relation schemas for the ideal monoid and its
//! submonoid of indecomposables.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::bimodule::{PathAlgebra, PathPair, Subbimodule};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

/// Name of the absorbing zero symbol.
pub const ZERO: &str = "0";

pub fn generator_name(s: usize, component: Option<usize>) -> String {
    match component {
        None => format!("J{s}"),
        Some(q) => format!("J{s}.{q}"),
    }
}

/// `J_1, ..., J_n`.
pub fn hk_generators(alg: &Arc<PathAlgebra>) -> Vec<(String, Subbimodule)> {
    alg.quiver()
        .vertices()
        .map(|s| (generator_name(s, None), alg.generator_j(s).expect("valid vertex")))
        .collect()
}

/// `J_s` for unsplit `s` and `J_s^(q)` for split `s`, by vertex then component.
pub fn ind_generators(alg: &Arc<PathAlgebra>) -> Result<Vec<(String, Subbimodule)>> {
    let q = alg.quiver();
    q.require_admissible()?;
    let mut gens = Vec::new();
    for s in q.vertices() {
        if q.is_split(s) {
            for c in 1..=q.components_without(s)?.len() {
                gens.push((generator_name(s, Some(c)), alg.generator_j_split(s, c)?));
            }
        } else {
            gens.push((generator_name(s, None), alg.generator_j(s)?));
        }
    }
    Ok(gens)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relation {
    /// Schema label such as `"a"` or `"k"`.
    pub schema: &'static str,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

fn rel(schema: &'static str, lhs: &[&String], rhs: &[&String]) -> Relation {
    Relation {
        schema,
        lhs: lhs.iter().map(|s| s.to_string()).collect(),
        rhs: rhs.iter().map(|s| s.to_string()).collect(),
    }
}

/// Idempotency, commutation of non-adjacent vertices and the two three-term
/// relations per arrow, over the vertices in `keep`.
fn hk_schema(q: &Quiver, keep: &[usize]) -> Vec<Relation> {
    let name: BTreeMap<usize, String> = keep.iter().map(|&i| (i, generator_name(i, None))).collect();
    let mut out = Vec::new();
    for &i in keep {
        out.push(rel("a", &[&name[&i], &name[&i]], &[&name[&i]]));
    }
    for (x, &i) in keep.iter().enumerate() {
        for &j in &keep[x + 1..] {
            if !q.adjacent(i, j) {
                out.push(rel("b", &[&name[&i], &name[&j]], &[&name[&j], &name[&i]]));
            }
        }
    }
    for &(i, j) in q.arrows() {
        if let (Some(ni), Some(nj)) = (name.get(&i), name.get(&j)) {
            out.push(rel("c", &[nj, ni, nj], &[nj, ni]));
            out.push(rel("c", &[ni, nj, ni], &[nj, ni]));
        }
    }
    out
}

/// The relations among `J_1, ..., J_n`.
pub fn hk_relations(q: &Quiver) -> Vec<Relation> {
    let all: Vec<usize> = q.vertices().collect();
    hk_schema(q, &all)
}

/// The relations among the generators of [`ind_generators`], with `0`
/// standing for the zero ideal.
pub fn ind_relations(alg: &Arc<PathAlgebra>) -> Result<Vec<Relation>> {
    let q = alg.quiver();
    q.require_admissible()?;
    let unsplit: Vec<usize> = q.vertices().filter(|&v| !q.is_split(v)).collect();
    let mut out = hk_schema(q, &unsplit);

    // (vertex, component name, support) per split generator
    let mut split: Vec<(usize, String, crate::bimodule::Subgraph)> = Vec::new();
    for s in q.split_vertices() {
        for c in 1..=q.components_without(s)?.len() {
            split.push((s, generator_name(s, Some(c)), alg.generator_j_split(s, c)?.support()));
        }
    }
    let zero = ZERO.to_string();
    let plain: BTreeMap<usize, String> = unsplit.iter().map(|&i| (i, generator_name(i, None))).collect();

    for (_, g, _) in &split {
        out.push(rel("b", &[g, g], &[g]));
    }
    for (s, g, _) in &split {
        for (t, h, _) in &split {
            if s == t && g != h {
                out.push(rel("c", &[g, h], &[&zero]));
            }
            if s < t && !q.adjacent(*s, *t) {
                out.push(rel("d", &[g, h], &[h, g]));
            }
            if q.has_arrow(*s, *t) {
                out.push(rel("f", &[h, g, h], &[h, g]));
                out.push(rel("f", &[g, h, g], &[h, g]));
            }
        }
    }
    for (s, g, _) in &split {
        for (&i, ji) in &plain {
            if !q.adjacent(*s, i) {
                out.push(rel("e", &[g, ji], &[ji, g]));
            }
            if q.has_arrow(i, *s) {
                out.push(rel("g", &[g, ji, g], &[g, ji]));
                out.push(rel("g", &[ji, g, ji], &[g, ji]));
            }
            if q.has_arrow(*s, i) {
                out.push(rel("h", &[g, ji, g], &[ji, g]));
                out.push(rel("h", &[ji, g, ji], &[ji, g]));
            }
        }
    }
    // sandwiches between two different components of the same split vertex
    for (t, h, _) in &split {
        for (t2, h2, _) in &split {
            if t != t2 || h == h2 {
                continue;
            }
            for (s, g, _) in &split {
                if q.adjacent(*s, *t) {
                    out.push(rel("i", &[h, g, h2], &[&zero]));
                }
            }
            for (&i, ji) in &plain {
                if q.adjacent(i, *t) {
                    out.push(rel("j", &[h, ji, h2], &[&zero]));
                }
            }
        }
    }
    for (_, g, sg) in &split {
        for (_, h, sh) in &split {
            if g == h {
                continue;
            }
            if sh.is_subgraph_of(sg) {
                out.push(rel("k", &[g, h], &[h]));
            }
            if sg.vertices.is_disjoint(&sh.vertices) {
                out.push(rel("l", &[g, h], &[&zero]));
            }
        }
    }
    for (_, g, sg) in &split {
        for (&i, ji) in &plain {
            if !sg.vertices.contains(&i) {
                out.push(rel("m", &[g, ji], &[g]));
                out.push(rel("m", &[ji, g], &[g]));
            }
        }
    }
    Ok(out)
}

/// Drops repeated relations, treating `u = v` and `v = u` as the same.
pub fn dedup(relations: Vec<Relation>) -> Vec<Relation> {
    let mut seen = BTreeSet::new();
    relations
        .into_iter()
        .filter(|r| {
            let key = if r.lhs <= r.rhs {
                (r.lhs.clone(), r.rhs.clone())
            } else {
                (r.rhs.clone(), r.lhs.clone())
            };
            seen.insert(key)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RelationMode {
    Hk,
    Split,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationFailure {
    pub schema: &'static str,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub lhs_value: Vec<PathPair>,
    pub rhs_value: Vec<PathPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub mode: RelationMode,
    pub checked: usize,
    pub failures: Vec<RelationFailure>,
}

impl RelationReport {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluates a word over named subbimodules, `0` being the zero ideal.
pub fn evaluate(
    alg: &Arc<PathAlgebra>,
    names: &BTreeMap<String, Subbimodule>,
    word: &[String],
) -> Subbimodule {
    word.iter().fold(alg.identity(), |acc, g| {
        if g == ZERO {
            alg.zero()
        } else {
            acc.product(&names[g]).expect("same algebra")
        }
    })
}

/// Checks every relation instance as an equality of subbimodules.
pub fn check_relations(alg: &Arc<PathAlgebra>, mode: RelationMode) -> Result<RelationReport> {
    let (gens, relations) = match mode {
        RelationMode::Hk => (hk_generators(alg), hk_relations(alg.quiver())),
        RelationMode::Split => (ind_generators(alg)?, ind_relations(alg)?),
    };
    let names: BTreeMap<String, Subbimodule> = gens.into_iter().collect();
    let mut failures = Vec::new();
    for r in &relations {
        let l = evaluate(alg, &names, &r.lhs);
        let rv = evaluate(alg, &names, &r.rhs);
        if l != rv {
            failures.push(RelationFailure {
                schema: r.schema,
                lhs: r.lhs.clone(),
                rhs: r.rhs.clone(),
                lhs_value: l.pairs(),
                rhs_value: rv.pairs(),
            });
        }
    }
    Ok(RelationReport {
        mode,
        checked: relations.len(),
        failures,
    })
}

/// Rejects generator names outside the quiver.
pub fn check_name(q: &Quiver, name: &str) -> Result<()> {
    let bad = || Error::GeneratorMismatch(name.to_string());
    let rest = name.strip_prefix('J').ok_or_else(bad)?;
    let vertex = rest.split('.').next().unwrap_or("");
    let v: usize = vertex.parse().map_err(|_| bad())?;
    q.check_vertex(v)
}
