//! The identity bimodule of a tree path algebra and its subbimodules.
//!
//! The path algebra has basis `a_ts`, one element for every pair `(t, s)` with
//! `t` a successor of `s`. Left multiplication by an arrow `t -> y` sends
//! `a_ts` to `a_ys`; right multiplication by an arrow `x -> s` sends `a_ts` to
//! `a_tx`. Because every composition multiplicity is at most one, the
//! subbimodules are exactly the subsets of the basis closed under these two
//! moves, and we store them as bit vectors over the basis.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::quiver::{Chain, Quiver, VertexSet};

/// The basis path `a_ts` from `source` to `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PathPair {
    pub target: usize,
    pub source: usize,
}

impl PathPair {
    pub fn new(target: usize, source: usize) -> Self {
        PathPair { target, source }
    }
}

impl Ord for PathPair {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.source, self.target).cmp(&(other.source, other.target))
    }
}

impl PartialOrd for PathPair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for PathPair {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.target, self.source].serialize(s)
    }
}

/// A (not necessarily full) subgraph of the quiver.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Subgraph {
    pub vertices: VertexSet,
    /// Arrows `(source, target)` of the quiver.
    pub edges: BTreeSet<(usize, usize)>,
}

impl Subgraph {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_chains<'a>(chains: impl IntoIterator<Item = &'a Chain>) -> Self {
        let mut g = Subgraph::empty();
        for c in chains {
            g.add_chain(c);
        }
        g
    }

    pub fn add_chain(&mut self, c: &Chain) {
        self.vertices.extend(c.vertices.iter().copied());
        self.edges.extend(c.arrows());
    }

    pub fn full(q: &Quiver) -> Self {
        Subgraph {
            vertices: q.vertices().collect(),
            edges: q.arrows().iter().copied().collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &(a, b) in &self.edges {
                let y = if a == x {
                    b
                } else if b == x {
                    a
                } else {
                    continue;
                };
                if seen.insert(y) {
                    stack.push(y);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    pub fn is_subgraph_of(&self, other: &Subgraph) -> bool {
        self.vertices.is_subset(&other.vertices) && self.edges.is_subset(&other.edges)
    }

    pub fn intersection(&self, other: &Subgraph) -> Subgraph {
        Subgraph {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
        }
    }
}

/// Path basis and action graph of the identity bimodule of a tree path algebra.
#[derive(Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    basis: Vec<PathPair>,
    index: Vec<usize>,
    /// Basis elements reachable from each basis element by one arrow move.
    moves: Vec<Vec<usize>>,
    /// For each vertex `k`, the basis indices of `a_tk`, `t` a successor of `k`.
    columns: Vec<Vec<usize>>,
    chains: Vec<Chain>,
    /// Basis index of the maximal path of each chain, aligned with `chains`.
    socle: Vec<usize>,
    path_len: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl PathAlgebra {
    pub fn new(quiver: Quiver) -> Arc<Self> {
        let n = quiver.n();
        let mut basis = Vec::new();
        for s in quiver.vertices() {
            for t in quiver.vertices() {
                if quiver.reaches(s, t) {
                    basis.push(PathPair::new(t, s));
                }
            }
        }
        let mut index = vec![NONE; (n + 1) * (n + 1)];
        for (i, p) in basis.iter().enumerate() {
            index[p.target * (n + 1) + p.source] = i;
        }
        let at = |t: usize, s: usize| index[t * (n + 1) + s];
        let moves = basis
            .iter()
            .map(|p| {
                let left = quiver.out_neighbors(p.target).iter().map(|&y| at(y, p.source));
                let right = quiver.in_neighbors(p.source).iter().map(|&x| at(p.target, x));
                left.chain(right).collect()
            })
            .collect();
        let mut columns = vec![Vec::new(); n + 1];
        for (i, p) in basis.iter().enumerate() {
            columns[p.source].push(i);
        }
        let chains = quiver.maximal_chains();
        let socle = chains.iter().map(|c| at(c.sink(), c.source())).collect();
        let path_len = basis
            .iter()
            .map(|p| quiver.path_vertices(p.source, p.target).unwrap().len() - 1)
            .collect();
        Arc::new(PathAlgebra {
            quiver,
            basis,
            index,
            moves,
            columns,
            chains,
            socle,
            path_len,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    /// All basis paths, sorted by `(source, target)`.
    pub fn path_basis(&self) -> &[PathPair] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn maximal_chains(&self) -> &[Chain] {
        &self.chains
    }

    pub fn index_of(&self, t: usize, s: usize) -> Option<usize> {
        let n = self.quiver.n();
        if t == 0 || s == 0 || t > n || s > n {
            return None;
        }
        match self.index[t * (n + 1) + s] {
            NONE => None,
            i => Some(i),
        }
    }

    fn at(&self, t: usize, s: usize) -> usize {
        self.index[t * (self.quiver.n() + 1) + s]
    }

    fn wrap(self: &Arc<Self>, bits: BitSet) -> Subbimodule {
        Subbimodule {
            algebra: Arc::clone(self),
            bits,
        }
    }

    pub fn zero(self: &Arc<Self>) -> Subbimodule {
        self.wrap(BitSet::new(self.dim()))
    }

    pub fn identity(self: &Arc<Self>) -> Subbimodule {
        self.wrap(BitSet::full(self.dim()))
    }

    pub fn from_bits(self: &Arc<Self>, bits: BitSet) -> Subbimodule {
        assert_eq!(bits.len(), self.dim());
        self.wrap(bits)
    }

    fn indices_of(&self, pairs: impl IntoIterator<Item = PathPair>) -> Result<Vec<usize>> {
        pairs
            .into_iter()
            .map(|p| {
                self.index_of(p.target, p.source)
                    .ok_or(Error::InvalidPathPair(p.target, p.source))
            })
            .collect()
    }

    fn close_bits(&self, bits: &mut BitSet) {
        let mut stack: Vec<usize> = bits.iter().collect();
        while let Some(i) = stack.pop() {
            for &j in &self.moves[i] {
                if bits.insert(j) {
                    stack.push(j);
                }
            }
        }
    }

    /// Smallest subbimodule containing the seed paths.
    pub fn closure(
        self: &Arc<Self>,
        seed: impl IntoIterator<Item = PathPair>,
    ) -> Result<Subbimodule> {
        let mut bits = BitSet::new(self.dim());
        for i in self.indices_of(seed)? {
            bits.insert(i);
        }
        self.close_bits(&mut bits);
        Ok(self.wrap(bits))
    }

    /// Whether the span of the given paths is closed under both actions.
    /// Pairs that are not paths make the answer `false`.
    pub fn is_subbimodule(&self, set: impl IntoIterator<Item = PathPair>) -> bool {
        let Ok(idx) = self.indices_of(set) else {
            return false;
        };
        let mut bits = BitSet::new(self.dim());
        for i in idx {
            bits.insert(i);
        }
        self.is_closed_bits(&bits)
    }

    pub fn is_closed_bits(&self, bits: &BitSet) -> bool {
        bits.iter().all(|i| self.moves[i].iter().all(|&j| bits.contains(j)))
    }

    /// `J_s`: the kernel of the projection onto the simple bimodule at `s`.
    pub fn generator_j(self: &Arc<Self>, s: usize) -> Result<Subbimodule> {
        self.quiver.check_vertex(s)?;
        let mut bits = BitSet::full(self.dim());
        bits.remove(self.at(s, s));
        Ok(self.wrap(bits))
    }

    /// `J_s^(q)` for a split vertex `s` and a 1-based component index `q` of
    /// the quiver with `s` deleted.
    pub fn generator_j_split(self: &Arc<Self>, s: usize, q: usize) -> Result<Subbimodule> {
        self.quiver.check_vertex(s)?;
        if !self.quiver.is_split(s) {
            return Err(Error::NotSplitVertex(s));
        }
        let comps = self.quiver.components_without(s)?;
        if q == 0 || q > comps.len() {
            return Err(Error::BadComponentIndex {
                index: q,
                count: comps.len(),
            });
        }
        let comp = &comps[q - 1];
        let inside = |v: usize| v == s || comp.contains(&v);
        let mut bits = BitSet::new(self.dim());
        for (i, p) in self.basis.iter().enumerate() {
            if inside(p.target) && inside(p.source) && !(p.target == s && p.source == s) {
                bits.insert(i);
            }
        }
        Ok(self.wrap(bits))
    }

    /// All subbimodules, ordered by cardinality and then lexicographically
    /// on the bit vector over the path basis.
    pub fn enumerate_subbimodules(self: &Arc<Self>, max_count: usize) -> Result<Vec<Subbimodule>> {
        // Longer paths first: every move lengthens a path by one arrow, so the
        // moves out of an element are decided before the element itself.
        let mut order: Vec<usize> = (0..self.dim()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.path_len[i]), i));
        let mut out = Vec::new();
        let mut bits = BitSet::new(self.dim());
        self.enumerate_rec(&order, 0, &mut bits, &mut out, max_count)?;
        out.sort();
        Ok(out.into_iter().map(|b| self.wrap(b)).collect())
    }

    fn enumerate_rec(
        &self,
        order: &[usize],
        pos: usize,
        bits: &mut BitSet,
        out: &mut Vec<BitSet>,
        max_count: usize,
    ) -> Result<()> {
        if pos == order.len() {
            if out.len() >= max_count {
                return Err(Error::EnumerationBudgetExceeded(max_count));
            }
            out.push(bits.clone());
            return Ok(());
        }
        let x = order[pos];
        self.enumerate_rec(order, pos + 1, bits, out, max_count)?;
        if self.moves[x].iter().all(|&j| bits.contains(j)) {
            bits.insert(x);
            let r = self.enumerate_rec(order, pos + 1, bits, out, max_count);
            bits.remove(x);
            r?;
        }
        Ok(())
    }
}

/// A subbimodule of the identity bimodule, i.e. a two-sided ideal.
#[derive(Clone)]
pub struct Subbimodule {
    algebra: Arc<PathAlgebra>,
    bits: BitSet,
}

impl Subbimodule {
    pub fn algebra(&self) -> &Arc<PathAlgebra> {
        &self.algebra
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn contains(&self, t: usize, s: usize) -> bool {
        self.algebra
            .index_of(t, s)
            .is_some_and(|i| self.bits.contains(i))
    }

    pub fn pairs(&self) -> Vec<PathPair> {
        self.bits.iter().map(|i| self.algebra.basis[i]).collect()
    }

    /// `{t : a_tr in B}`.
    pub fn column(&self, r: usize) -> VertexSet {
        self.algebra.columns[r]
            .iter()
            .filter(|&&i| self.bits.contains(i))
            .map(|&i| self.algebra.basis[i].target)
            .collect()
    }

    pub fn is_subset(&self, other: &Subbimodule) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &Subbimodule) -> Subbimodule {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        self.algebra.wrap(bits)
    }

    fn same_algebra(&self, other: &Subbimodule) -> bool {
        Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra.quiver == other.algebra.quiver
    }

    /// Ideal product: `a_ts` lies in `BD` iff `a_tk` is in `B` and `a_ks` is in
    /// `D` for some `k`, since `a_tk a_ks = a_ts`.
    pub fn product(&self, other: &Subbimodule) -> Result<Subbimodule> {
        if !self.same_algebra(other) {
            return Err(Error::QuiverMismatch);
        }
        let alg = &*self.algebra;
        let mut bits = BitSet::new(alg.dim());
        for d in other.bits.iter() {
            let PathPair { target: k, source: s } = alg.basis[d];
            for &b in &alg.columns[k] {
                if self.bits.contains(b) {
                    bits.insert(alg.at(alg.basis[b].target, s));
                }
            }
        }
        Ok(self.algebra.wrap(bits))
    }

    /// Split into the connected components of the action graph restricted
    /// to the basis elements of `self`, ordered by least basis index.
    pub fn decompose(&self) -> Vec<Subbimodule> {
        let alg = &*self.algebra;
        let dim = alg.dim();
        let mut parent: Vec<usize> = (0..dim).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for x in self.bits.iter() {
            for &y in &alg.moves[x] {
                if self.bits.contains(y) {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        // roots are least indices, so parts come out ordered by least index
        let mut slot = vec![NONE; dim];
        let mut parts: Vec<BitSet> = Vec::new();
        for x in self.bits.iter() {
            let r = find(&mut parent, x);
            if slot[r] == NONE {
                slot[r] = parts.len();
                parts.push(BitSet::new(dim));
            }
            parts[slot[r]].insert(x);
        }
        parts.into_iter().map(|p| self.algebra.wrap(p)).collect()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.decompose().len() == 1
    }

    /// Union of the maximal chains whose maximal path lies in `self`.
    pub fn support(&self) -> Subgraph {
        let alg = &*self.algebra;
        Subgraph::from_chains(
            alg.chains
                .iter()
                .zip(&alg.socle)
                .filter(|(_, &i)| self.bits.contains(i))
                .map(|(c, _)| c),
        )
    }
}

impl PartialEq for Subbimodule {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits && self.same_algebra(other)
    }
}

impl Eq for Subbimodule {}

impl Hash for Subbimodule {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl Ord for Subbimodule {
    /// Cardinality first, then the bit vector lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.bits.cmp(&other.bits))
    }
}

impl PartialOrd for Subbimodule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Subbimodule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, p) in self.pairs().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", p.target, p.source)?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subbimodule {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Subbimodule", 1)?;
        st.serialize_field("pairs", &self.pairs())?;
        st.end()
    }
}
