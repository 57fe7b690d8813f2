//! Families of small oriented trees used by the sweeps.

use std::collections::BTreeMap;

use crate::quiver::Quiver;

/// Edges of the labelled tree on `1..=n` with the given Prüfer code.
fn prufer_decode(code: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n + 1];
    for &c in code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let leaf = (1..=n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

struct Oriented {
    n: usize,
    /// `(neighbour, true when the arrow points away from this vertex)`
    adj: Vec<Vec<(usize, bool)>>,
}

impl Oriented {
    fn new(n: usize, arrows: &[(usize, usize)]) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(s, t) in arrows {
            adj[s].push((t, true));
            adj[t].push((s, false));
        }
        Oriented { n, adj }
    }

    fn code(&self, v: usize, parent: usize) -> String {
        let mut kids: Vec<String> = self.adj[v]
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, out)| format!("{}{}", if out { 'd' } else { 'u' }, self.code(w, v)))
            .collect();
        kids.sort();
        format!("({})", kids.concat())
    }

    /// Least rooted code over all roots, with the root attaining it.
    fn canonical(&self) -> (String, usize) {
        (1..=self.n)
            .map(|r| (self.code(r, 0), r))
            .min()
            .unwrap()
    }

    /// Arrows after relabelling by preorder from `root`, children in code order.
    fn relabel(&self, root: usize) -> Vec<(usize, usize)> {
        let mut arrows = Vec::with_capacity(self.n - 1);
        let mut next = 1;
        self.relabel_rec(root, 0, &mut next, &mut arrows);
        arrows.sort();
        arrows
    }

    fn relabel_rec(
        &self,
        v: usize,
        parent: usize,
        next: &mut usize,
        arrows: &mut Vec<(usize, usize)>,
    ) -> usize {
        let me = *next;
        *next += 1;
        let mut kids: Vec<(String, usize, bool)> = self.adj[v]
            .iter()
            .filter(|&&(w, _)| w != parent)
            .map(|&(w, out)| (format!("{}{}", if out { 'd' } else { 'u' }, self.code(w, v)), w, out))
            .collect();
        kids.sort();
        for (_, w, out) in kids {
            let label = self.relabel_rec(w, v, next, arrows);
            arrows.push(if out { (me, label) } else { (label, me) });
        }
        me
    }
}

/// The tree with Prüfer code `code` (entries in `1..=n`, length `n - 2`),
/// edge `k` reversed when bit `k` of `mask` is set.
pub fn from_prufer(n: usize, code: &[usize], mask: u32) -> Quiver {
    assert!(n >= 2 && code.len() == n - 2, "Prüfer code of wrong length");
    let arrows = prufer_decode(code, n)
        .into_iter()
        .enumerate()
        .map(|(k, (a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) });
    Quiver::new(n, arrows).expect("decoded a tree")
}

/// Every oriented tree on `n >= 2` vertices, one per isomorphism class, in a
/// fixed order with a fixed labelling.
pub fn oriented_trees(n: usize) -> Vec<Quiver> {
    assert!(n >= 2, "trees need at least two vertices");
    let mut classes: BTreeMap<String, Vec<(usize, usize)>> = BTreeMap::new();
    let mut code = vec![1usize; n - 2];
    loop {
        let edges = prufer_decode(&code, n);
        for mask in 0u32..(1 << (n - 1)) {
            let arrows: Vec<(usize, usize)> = edges
                .iter()
                .enumerate()
                .map(|(k, &(a, b))| if mask >> k & 1 == 1 { (b, a) } else { (a, b) })
                .collect();
            let t = Oriented::new(n, &arrows);
            let (canon, root) = t.canonical();
            classes.entry(canon).or_insert_with(|| t.relabel(root));
        }
        // advance the Prüfer code like an odometer over 1..=n
        let Some(pos) = code.iter().rposition(|&c| c < n) else {
            break;
        };
        code[pos] += 1;
        for c in &mut code[pos + 1..] {
            *c = 1;
        }
    }
    classes
        .into_values()
        .map(|arrows| Quiver::new(n, arrows).expect("decoded a tree"))
        .collect()
}

/// Admissible oriented trees on `2..=max_n` vertices, ordered by size.
pub fn admissible_trees(max_n: usize) -> Vec<Quiver> {
    (2..=max_n)
        .flat_map(oriented_trees)
        .filter(Quiver::is_admissible)
        .collect()
}

/// All `2^(n-1)` orientations of the path `1 - 2 - ... - n`.
pub fn type_a_orientations(n: usize) -> Vec<Quiver> {
    (0u32..(1 << (n - 1)))
        .map(|mask| {
            let arrows = (1..n).map(|v| if mask >> (v - 1) & 1 == 1 { (v + 1, v) } else { (v, v + 1) });
            Quiver::new(n, arrows).expect("a path is a tree")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_class_counts() {
        // oriented trees up to isomorphism
        let counts: Vec<usize> = (2..=6).map(|n| oriented_trees(n).len()).collect();
        assert_eq!(counts, vec![1, 3, 8, 27, 91]);
    }

    #[test]
    fn admissible_family_is_smaller() {
        let fam = admissible_trees(4);
        // stars whose centre has both incoming and outgoing arrows are
        // excluded (two classes)
        assert_eq!(fam.len(), 1 + 3 + 6);
        assert!(fam.iter().all(Quiver::is_admissible));
    }

    #[test]
    fn type_a_orientations_are_distinct_paths() {
        let qs = type_a_orientations(4);
        assert_eq!(qs.len(), 8);
        for q in &qs {
            assert!(q.arrows().iter().all(|&(s, t)| s.abs_diff(t) == 1));
        }
    }

    #[test]
    fn prufer_round_trip_count() {
        // Cayley: n^(n-2) labelled trees, all distinct
        let n = 5;
        let mut seen = std::collections::BTreeSet::new();
        let mut code = vec![1usize; n - 2];
        loop {
            let mut e: Vec<(usize, usize)> = prufer_decode(&code, n)
                .into_iter()
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            e.sort();
            seen.insert(e);
            let Some(pos) = code.iter().rposition(|&c| c < n) else { break };
            code[pos] += 1;
            for c in &mut code[pos + 1..] {
                *c = 1;
            }
        }
        assert_eq!(seen.len(), 125);
    }
}
