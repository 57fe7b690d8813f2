//! Oriented tree quivers and the combinatorics derived from them.
//!
//! Vertices are `1..=n`. Arrows are stored as `(source, target)` pairs and
//! kept sorted, so two quivers with the same arrow set compare equal. The
//! reflexive-transitive closure of the arrow relation is computed once at
//! construction; everything downstream queries it through [`Quiver::reaches`].

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub type VertexSet = BTreeSet<usize>;

/// A directed path `v_0 -> v_1 -> ... -> v_m` in the quiver.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Chain {
    pub vertices: Vec<usize>,
}

impl Chain {
    pub fn source(&self) -> usize {
        self.vertices[0]
    }

    pub fn sink(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices.windows(2).map(|w| (w[0], w[1]))
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub connected: bool,
    pub tree: bool,
    pub admissible: bool,
    pub offending_vertices: VertexSet,
}

/// On-disk form of a quiver.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct QuiverFile {
    pub vertices: usize,
    pub arrows: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    n: usize,
    arrows: Vec<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    reach: Vec<BitSet>,
}

/// Parse either the JSON form or the line form without checking tree shape.
pub fn parse_raw(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let file: QuiverFile =
            serde_json::from_str(text).map_err(|e| Error::Syntax(e.to_string()))?;
        return Ok((
            file.vertices,
            file.arrows.iter().map(|a| (a[0], a[1])).collect(),
        ));
    }
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let first = lines
        .next()
        .ok_or_else(|| Error::Syntax("empty input".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Syntax(format!("expected vertex count, got {first:?}")))?;
    let mut arrows = Vec::new();
    for line in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        if parts.len() != 2 {
            return Err(Error::Syntax(format!("expected `s t`, got {line:?}")));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::Syntax(format!("bad vertex {s:?}")))
        };
        arrows.push((parse(parts[0])?, parse(parts[1])?));
    }
    Ok((n, arrows))
}

/// Structural report for raw arrow data, which need not form a tree.
pub fn validate_raw(n: usize, arrows: &[(usize, usize)]) -> Result<ValidationReport> {
    for &(s, t) in arrows {
        for v in [s, t] {
            if v == 0 || v > n {
                return Err(Error::BadVertexIndex(v));
            }
        }
    }
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut acyclic = true;
    let mut seen = BTreeSet::new();
    for &(s, t) in arrows {
        if s == t || !seen.insert((s.min(t), s.max(t))) {
            acyclic = false;
            continue;
        }
        let (a, b) = (find(&mut parent, s), find(&mut parent, t));
        if a == b {
            acyclic = false;
        } else {
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 1.min(n));
    let connected = n == 0 || (1..=n).all(|v| find(&mut parent, v) == root);
    let tree = n >= 2 && connected && acyclic && arrows.len() == n - 1;

    let mut indeg = vec![0usize; n + 1];
    let mut outdeg = vec![0usize; n + 1];
    for &(s, t) in arrows {
        outdeg[s] += 1;
        indeg[t] += 1;
    }
    let offending: VertexSet = (1..=n)
        .filter(|&v| indeg[v] + outdeg[v] >= 3 && indeg[v] > 0 && outdeg[v] > 0)
        .collect();
    Ok(ValidationReport {
        connected,
        tree,
        admissible: offending.is_empty(),
        offending_vertices: offending,
    })
}

impl Quiver {
    pub fn new(n: usize, arrows: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arrows: Vec<(usize, usize)> = arrows.into_iter().collect();
        if n < 2 {
            return Err(Error::NotATree(format!("{n} vertices; at least 2 required")));
        }
        let report = validate_raw(n, &arrows)?;
        if !report.tree {
            return Err(Error::NotATree(if report.connected {
                "contains a cycle, a loop or a repeated arrow".into()
            } else {
                "disconnected".into()
            }));
        }
        arrows.sort_unstable();
        let mut out = vec![Vec::new(); n + 1];
        let mut inc = vec![Vec::new(); n + 1];
        for &(s, t) in &arrows {
            out[s].push(t);
            inc[t].push(s);
        }
        let mut reach = vec![BitSet::new(n + 1); n + 1];
        for (i, r) in reach.iter_mut().enumerate().skip(1) {
            let mut stack = vec![i];
            r.insert(i);
            while let Some(x) = stack.pop() {
                for &y in &out[x] {
                    if r.insert(y) {
                        stack.push(y);
                    }
                }
            }
        }
        Ok(Quiver {
            n,
            arrows,
            out,
            inc,
            reach,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let (n, arrows) = parse_raw(text)?;
        Self::new(n, arrows)
    }

    pub fn to_file(&self) -> QuiverFile {
        QuiverFile {
            vertices: self.n,
            arrows: self.arrows.iter().map(|&(s, t)| [s, t]).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_file()).expect("quiver serializes")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::BadVertexIndex(v))
        } else {
            Ok(())
        }
    }

    /// Targets of arrows leaving `v`.
    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    /// Sources of arrows entering `v`.
    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.inc[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.in_degree(v) + self.out_degree(v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[v].iter().chain(&self.inc[v]).copied()
    }

    pub fn has_arrow(&self, s: usize, t: usize) -> bool {
        self.out[s].contains(&t)
    }

    /// True when there is an arrow in either direction between `a` and `b`.
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.has_arrow(a, b) || self.has_arrow(b, a)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out[v].is_empty()
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.inc[v].is_empty()
    }

    /// `j` is a successor of `i`: there is a (possibly empty) oriented path `i -> ... -> j`.
    #[inline]
    pub fn reaches(&self, i: usize, j: usize) -> bool {
        self.reach[i].contains(j)
    }

    pub fn successors(&self, i: usize) -> Result<VertexSet> {
        self.check_vertex(i)?;
        Ok(self.reach[i].iter().collect())
    }

    /// Vertex set of the unique oriented path from `i` to `j`, if any.
    pub fn path_vertices(&self, i: usize, j: usize) -> Option<Vec<usize>> {
        if !self.reaches(i, j) {
            return None;
        }
        let mut path = vec![i];
        let mut cur = i;
        while cur != j {
            cur = *self.out[cur]
                .iter()
                .find(|&&y| self.reaches(y, j))
                .expect("reachability is consistent with arrows");
            path.push(cur);
        }
        Some(path)
    }

    /// `(K, K')`: sinks and sources, and those of them that are not leaves.
    pub fn boundary_sets(&self) -> (VertexSet, VertexSet) {
        let k: VertexSet = self
            .vertices()
            .filter(|&v| self.is_sink(v) || self.is_source(v))
            .collect();
        let kp = k.iter().copied().filter(|&v| self.degree(v) >= 2).collect();
        (k, kp)
    }

    /// Vertices of `K'`: sinks or sources of degree at least two.
    pub fn split_vertices(&self) -> VertexSet {
        self.boundary_sets().1
    }

    pub fn is_split(&self, v: usize) -> bool {
        (self.is_sink(v) || self.is_source(v)) && self.degree(v) >= 2
    }

    pub fn validate(&self) -> ValidationReport {
        validate_raw(self.n, &self.arrows).expect("constructed quivers have valid indices")
    }

    pub fn is_admissible(&self) -> bool {
        self.vertices()
            .all(|v| self.degree(v) < 3 || self.is_sink(v) || self.is_source(v))
    }

    pub fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::NotAdmissible(
                self.validate().offending_vertices.into_iter().collect(),
            ))
        }
    }

    /// All maximal chains, ordered by `(source, sink)`.
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let mut chains = Vec::new();
        for s in self.vertices().filter(|&v| self.is_source(v)) {
            for t in self.reach[s].iter().filter(|&t| self.is_sink(t)) {
                chains.push(Chain {
                    vertices: self.path_vertices(s, t).unwrap(),
                });
            }
        }
        chains
    }

    /// Connected components of the full subquiver on `Q_0 \ {s}`, ordered by
    /// least vertex.
    pub fn components_without(&self, s: usize) -> Result<Vec<VertexSet>> {
        self.check_vertex(s)?;
        let mut seen = vec![false; self.n + 1];
        seen[s] = true;
        let mut comps = Vec::new();
        for start in self.vertices() {
            if seen[start] {
                continue;
            }
            let mut comp = VertexSet::new();
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(x) = stack.pop() {
                comp.insert(x);
                for y in self.neighbors(x) {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            comps.push(comp);
        }
        Ok(comps)
    }

    /// Vertices ordered so that every arrow goes from an earlier to a later vertex.
    pub fn topological_order(&self) -> Vec<usize> {
        let mut indeg: Vec<usize> = (0..=self.n).map(|v| if v == 0 { 0 } else { self.in_degree(v) }).collect();
        let mut ready: Vec<usize> = self.vertices().filter(|&v| indeg[v] == 0).rev().collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in self.out[v].iter().rev() {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    ready.push(w);
                }
            }
        }
        order
    }
}

impl Serialize for Quiver {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_file().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn d4_left() -> Quiver {
        Quiver::new(4, [(1, 2), (3, 2), (4, 2)]).unwrap()
    }

    fn six_vertex() -> Quiver {
        Quiver::new(6, [(1, 2), (3, 2), (4, 3), (4, 5), (5, 6)]).unwrap()
    }

    #[test]
    fn parse_json_and_lines() {
        let q = Quiver::parse(r#"{"vertices":2,"arrows":[[1,2]]}"#).unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.arrows(), &[(1, 2)]);
        let d4 = Quiver::parse(r#"{"vertices":4,"arrows":[[1,2],[3,2],[4,2]]}"#).unwrap();
        assert_eq!(d4, d4_left());
        let lines = Quiver::parse("4\n1 2\n3 2\n\n4 2\n").unwrap();
        assert_eq!(lines, d4_left());
        assert_eq!(Quiver::parse(&d4.to_json()).unwrap(), d4);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Quiver::parse(r#"{"vertices":3,"arrows":[[1,2],[2,1]]}"#),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Quiver::parse(r#"{"vertices":3,"arrows":[[1,2]]}"#),
            Err(Error::NotATree(_))
        ));
        assert!(matches!(
            Quiver::parse(r#"{"vertices":2,"arrows":[[1,3]]}"#),
            Err(Error::BadVertexIndex(3))
        ));
        assert!(matches!(Quiver::parse("{\"vertices\":"), Err(Error::Syntax(_))));
        assert!(matches!(Quiver::parse("2\n1 x"), Err(Error::Syntax(_))));
        assert!(matches!(Quiver::new(2, [(1, 1)]), Err(Error::NotATree(_))));
    }

    #[test]
    fn validation_reports() {
        assert!(d4_left().validate().admissible);
        let right = Quiver::new(4, [(1, 2), (2, 3), (4, 2)]).unwrap();
        let r = right.validate();
        assert!(!r.admissible);
        assert_eq!(r.offending_vertices, set(&[2]));
        assert!(Quiver::new(2, [(1, 2)]).unwrap().validate().admissible);
        let raw = validate_raw(2, &[(1, 2), (2, 1)]).unwrap();
        assert!(raw.connected && !raw.tree);
        let raw = validate_raw(3, &[(1, 2), (2, 1)]).unwrap();
        assert!(!raw.connected && !raw.tree);
    }

    #[test]
    fn successors_examples() {
        assert_eq!(d4_left().successors(1).unwrap(), set(&[1, 2]));
        let right = Quiver::new(4, [(1, 2), (2, 3), (4, 2)]).unwrap();
        assert_eq!(right.successors(1).unwrap(), set(&[1, 2, 3]));
        assert_eq!(d4_left().successors(2).unwrap(), set(&[2]));
        assert!(matches!(d4_left().successors(5), Err(Error::BadVertexIndex(5))));
    }

    #[test]
    fn boundary_sets_examples() {
        assert_eq!(d4_left().boundary_sets(), (set(&[1, 2, 3, 4]), set(&[2])));
        let a3 = Quiver::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(a3.boundary_sets(), (set(&[1, 3]), set(&[])));
        assert_eq!(six_vertex().boundary_sets(), (set(&[1, 2, 4, 6]), set(&[2, 4])));
    }

    #[test]
    fn maximal_chain_examples() {
        let v = |c: &Chain| c.vertices.clone();
        let d4: Vec<_> = d4_left().maximal_chains().iter().map(v).collect();
        assert_eq!(d4, vec![vec![1, 2], vec![3, 2], vec![4, 2]]);
        let a3 = Quiver::new(3, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(a3.maximal_chains().iter().map(v).collect::<Vec<_>>(), vec![vec![1, 2, 3]]);
        let e6: Vec<_> = six_vertex().maximal_chains().iter().map(v).collect();
        assert_eq!(e6, vec![vec![1, 2], vec![4, 3, 2], vec![4, 5, 6]]);
    }

    #[test]
    fn components_examples() {
        assert_eq!(
            d4_left().components_without(2).unwrap(),
            vec![set(&[1]), set(&[3]), set(&[4])]
        );
        let a2 = Quiver::new(2, [(1, 2)]).unwrap();
        assert_eq!(a2.components_without(1).unwrap(), vec![set(&[2])]);
        assert_eq!(
            six_vertex().components_without(4).unwrap(),
            vec![set(&[1, 2, 3]), set(&[5, 6])]
        );
    }

    #[test]
    fn topological_order_respects_arrows() {
        let q = six_vertex();
        let order = q.topological_order();
        let pos = |v| order.iter().position(|&x| x == v).unwrap();
        for &(s, t) in q.arrows() {
            assert!(pos(s) < pos(t));
        }
    }
}
