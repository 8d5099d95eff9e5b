//! Brute-force enumeration of unlabeled k-trees for tiny (k, n).
//!
//! This is the anti-hallucination ground truth: it grows k-trees explicitly
//! by attaching a new vertex to every k-clique of every isomorphism class at
//! the previous level, deduplicating by canonical form, and shares no
//! mathematics with the generating-function machinery. Canonicalization is
//! exhaustive minimization over all vertex permutations — obviously correct
//! and fast enough at ≤ 8 vertices, which is the point of an oracle.

use std::collections::BTreeSet;

use thiserror::Error;

/// Enumeration bounds: vertex count k+n stays ≤ 8 so the 8! permutation
/// minimization stays cheap.
pub const MAX_ORACLE_K: u32 = 3;
pub const MAX_ORACLE_HEDRA: u32 = 5;

/// Hard cap on vertices a [`SmallGraph`] can hold.
pub const MAX_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle bounds exceeded: k={k}, n={n} (supported: 1 <= k <= {MAX_ORACLE_K}, n <= {MAX_ORACLE_HEDRA})")]
    BoundsExceeded { k: u32, n: u32 },
}

/// A small simple graph: symmetric adjacency over at most [`MAX_VERTICES`]
/// vertices, one bitmask row per vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SmallGraph {
    vertex_count: usize,
    adjacency: [u16; MAX_VERTICES],
}

impl SmallGraph {
    pub fn new(vertex_count: usize) -> Self {
        assert!(vertex_count <= MAX_VERTICES);
        SmallGraph { vertex_count, adjacency: [0; MAX_VERTICES] }
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut g = SmallGraph::new(vertex_count);
        for u in 0..vertex_count {
            for v in (u + 1)..vertex_count {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "no loops");
        assert!(u < self.vertex_count && v < self.vertex_count);
        self.adjacency[u] |= 1 << v;
        self.adjacency[v] |= 1 << u;
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] & (1 << v) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.vertex_count {
            for v in (u + 1)..self.vertex_count {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// A copy with one extra vertex adjacent to exactly `clique`.
    pub fn with_vertex_attached(&self, clique: &[usize]) -> SmallGraph {
        let mut g = SmallGraph::new(self.vertex_count + 1);
        g.adjacency[..self.vertex_count].copy_from_slice(&self.adjacency[..self.vertex_count]);
        let newv = self.vertex_count;
        for &u in clique {
            g.add_edge(u, newv);
        }
        g
    }

    /// All vertex subsets of size `k` inducing complete subgraphs.
    pub fn k_cliques(&self, k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.fill_cliques(k, 0, &mut current, &mut out);
        out
    }

    fn fill_cliques(
        &self,
        k: usize,
        from: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in from..self.vertex_count {
            if current.iter().all(|&u| self.has_edge(u, v)) {
                current.push(v);
                self.fill_cliques(k, v + 1, current, out);
                current.pop();
            }
        }
    }

    /// Lexicographically minimal upper-triangle adjacency encoding over all
    /// vertex permutations; equal iff isomorphic.
    pub fn canonical_form(&self) -> CanonicalForm {
        let n = self.vertex_count;
        let mut best: Option<Vec<u8>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        permute(&mut perm, 0, &mut |p| {
            let encoded = self.encode_under(p);
            if best.as_ref().is_none_or(|b| encoded < *b) {
                best = Some(encoded);
            }
        });
        CanonicalForm { vertex_count: n as u8, bits: best.unwrap_or_default() }
    }

    /// Upper-triangle bits of the relabeled graph, packed into bytes.
    /// `perm[i]` is where original vertex i lands.
    fn encode_under(&self, perm: &[usize]) -> Vec<u8> {
        let n = self.vertex_count;
        let mut bytes = vec![0u8; (n * (n - 1) / 2).div_ceil(8)];
        let mut bit = 0;
        let mut original_at = vec![0usize; n];
        for (orig, &new) in perm.iter().enumerate() {
            original_at[new] = orig;
        }
        for u in 0..n {
            for v in (u + 1)..n {
                if self.has_edge(original_at[u], original_at[v]) {
                    bytes[bit / 8] |= 1 << (bit % 8);
                }
                bit += 1;
            }
        }
        bytes
    }
}

fn permute(values: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == values.len() {
        visit(values);
        return;
    }
    for i in at..values.len() {
        values.swap(at, i);
        permute(values, at + 1, visit);
        values.swap(at, i);
    }
}

/// Canonical isomorphism-class key of a [`SmallGraph`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct CanonicalForm {
    vertex_count: u8,
    bits: Vec<u8>,
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        let mut out = format!("{:02x}", self.vertex_count);
        for b in &self.bits {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }
}

fn check_bounds(k: u32, n: u32) -> Result<(), OracleError> {
    if k == 0 || k > MAX_ORACLE_K || n > MAX_ORACLE_HEDRA {
        return Err(OracleError::BoundsExceeded { k, n });
    }
    Ok(())
}

/// One representative graph per isomorphism class of k-trees with exactly
/// `n` hedra, via breadth-first hedron attachment.
pub fn grow_ktree_graphs(k: u32, n: u32) -> Result<Vec<SmallGraph>, OracleError> {
    check_bounds(k, n)?;
    let mut level = vec![SmallGraph::complete(k as usize)];
    for _ in 0..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for graph in &level {
            for clique in graph.k_cliques(k as usize) {
                let grown = graph.with_vertex_attached(&clique);
                if seen.insert(grown.canonical_form()) {
                    next.push(grown);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

/// The set of isomorphism classes of k-trees with exactly `n` hedra.
pub fn grow_ktrees(k: u32, n: u32) -> Result<BTreeSet<CanonicalForm>, OracleError> {
    Ok(grow_ktree_graphs(k, n)?.iter().map(SmallGraph::canonical_form).collect())
}

/// Number of isomorphism classes of k-trees with exactly `n` hedra.
pub fn brute_count(k: u32, n: u32) -> Result<u64, OracleError> {
    Ok(grow_ktree_graphs(k, n)?.len() as u64)
}

/// Class counts for every hedron count 0..=n in one growth pass.
pub fn brute_count_series(k: u32, n: u32) -> Result<Vec<u64>, OracleError> {
    check_bounds(k, n)?;
    let mut counts = Vec::with_capacity(n as usize + 1);
    let mut level = vec![SmallGraph::complete(k as usize)];
    counts.push(1);
    for _ in 0..n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for graph in &level {
            for clique in graph.k_cliques(k as usize) {
                let grown = graph.with_vertex_attached(&clique);
                if seen.insert(grown.canonical_form()) {
                    next.push(grown);
                }
            }
        }
        counts.push(next.len() as u64);
        level = next;
    }
    Ok(counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_enumeration() {
        assert_eq!(SmallGraph::complete(3).k_cliques(2).len(), 3);
        assert_eq!(SmallGraph::complete(4).k_cliques(3).len(), 4);
        let mut path = SmallGraph::new(3);
        path.add_edge(0, 1);
        path.add_edge(1, 2);
        assert_eq!(path.k_cliques(2), vec![vec![0, 1], vec![1, 2]]);
    }

    #[test]
    fn canonical_form_identifies_isomorphs() {
        // The two labelings of a 3-path.
        let mut a = SmallGraph::new(3);
        a.add_edge(0, 1);
        a.add_edge(1, 2);
        let mut b = SmallGraph::new(3);
        b.add_edge(0, 2);
        b.add_edge(2, 1);
        assert_eq!(a.canonical_form(), b.canonical_form());
        let triangle = SmallGraph::complete(3);
        assert_ne!(a.canonical_form(), triangle.canonical_form());
    }

    #[test]
    fn base_case_is_single_class() {
        for k in 1..=3 {
            assert_eq!(brute_count(k, 0).unwrap(), 1);
        }
    }

    #[test]
    fn one_trees_with_three_edges() {
        // Path and star.
        assert_eq!(brute_count(1, 3).unwrap(), 2);
    }

    #[test]
    fn counts_match_published_values() {
        assert_eq!(brute_count(2, 4).unwrap(), 5);
        assert_eq!(brute_count(1, 5).unwrap(), 6);
        assert_eq!(brute_count(2, 5).unwrap(), 12);
        assert_eq!(brute_count(3, 5).unwrap(), 15);
    }

    #[test]
    fn count_series_matches_per_level_counts() {
        assert_eq!(brute_count_series(2, 5).unwrap(), vec![1, 1, 1, 2, 5, 12]);
    }

    #[test]
    fn bounds_are_enforced() {
        assert_eq!(brute_count(2, 6), Err(OracleError::BoundsExceeded { k: 2, n: 6 }));
        assert_eq!(brute_count(4, 2), Err(OracleError::BoundsExceeded { k: 4, n: 2 }));
        assert_eq!(brute_count(0, 2), Err(OracleError::BoundsExceeded { k: 0, n: 2 }));
    }

    #[test]
    fn grown_graphs_have_right_vertex_and_hedron_counts() {
        for k in 1..=3u32 {
            for n in 0..=4u32 {
                for graph in grow_ktree_graphs(k, n).unwrap() {
                    assert_eq!(graph.vertex_count(), (k + n) as usize);
                    assert_eq!(graph.k_cliques(k as usize + 1).len(), n as usize, "k={k} n={n}");
                }
            }
        }
    }

    #[test]
    fn cone_map_witnesses_stabilization() {
        // For k >= n-2, adding an apex adjacent to every vertex carries
        // k-tree classes bijectively onto (k+1)-tree classes.
        for (k, n) in [(1, 2), (1, 3), (2, 3), (2, 4)] {
            let smaller = grow_ktree_graphs(k, n).unwrap();
            let larger = grow_ktrees(k + 1, n).unwrap();
            let coned: BTreeSet<CanonicalForm> = smaller
                .iter()
                .map(|g| {
                    let everything: Vec<usize> = (0..g.vertex_count()).collect();
                    g.with_vertex_attached(&everything).canonical_form()
                })
                .collect();
            assert_eq!(coned.len(), smaller.len(), "cone map must be injective");
            assert_eq!(coned, larger, "k={k} n={n}");
        }
    }

    #[test]
    fn hex_form_is_stable_per_graph() {
        let g = SmallGraph::complete(3);
        assert_eq!(g.canonical_form().hex(), g.canonical_form().hex());
        assert!(g.canonical_form().hex().starts_with("03"));
    }
}
