//! Canonical labeling by individualization and equitable refinement.
//!
//! The search tree is the usual one: refine the partition to an equitable
//! one, individualize each vertex of the first smallest non-singleton cell,
//! recurse. Leaves are compared by their permuted adjacency rows and the
//! smallest wins. Two leaves with equal forms yield an automorphism, which is
//! used both to jump back up the tree and to prune sibling branches that lie
//! in the same orbit of the pointwise stabilizer of the current path.

use std::collections::VecDeque;
use std::fmt;

use crate::graph::{bits, full_mask, Graph};
use crate::graph6;

/// Isomorphism-class key: the graph6 bytes of the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Vec<u8>);

impl CanonicalKey {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.as_str())
    }
}

/// Result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Labeling {
    /// `lab[i]` is the input vertex placed at canonical position `i`.
    pub lab: Vec<usize>,
    /// The canonically relabeled graph.
    pub form: Graph,
    /// Automorphism generators as maps `v -> g(v)`.
    pub generators: Vec<Vec<usize>>,
    /// `orbits[v]` is the smallest vertex in the automorphism orbit of `v`.
    pub orbits: Vec<usize>,
}

impl Labeling {
    pub fn key(&self) -> CanonicalKey {
        CanonicalKey(graph6::encode(&self.form))
    }

    /// Canonical position of each input vertex (the inverse of `lab`).
    pub fn position(&self) -> Vec<usize> {
        let mut pos = vec![0; self.lab.len()];
        for (i, &v) in self.lab.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn orbit_count(&self) -> usize {
        self.orbits.iter().enumerate().filter(|&(v, &r)| v == r).count()
    }
}

pub fn canonical_labeling(g: &Graph) -> Labeling {
    canonical_labeling_colored(g, &[full_mask(g.n())])
}

/// Canonical labeling that respects an ordered vertex coloring.
///
/// `cells` must partition the vertex set; empty cells are ignored. Only
/// color-preserving isomorphisms are considered, and the color order matters.
pub fn canonical_labeling_colored(g: &Graph, cells: &[u64]) -> Labeling {
    let n = g.n();
    let cells: Vec<u64> = cells.iter().copied().filter(|&c| c != 0).collect();
    debug_assert_eq!(cells.iter().fold(0, |a, &c| a | c), full_mask(n));
    if n == 0 {
        return Labeling {
            lab: vec![],
            form: g.clone(),
            generators: vec![],
            orbits: vec![],
        };
    }
    let mut s = Search {
        adj: g.rows(),
        first: None,
        best: None,
        path: Vec::with_capacity(n),
        generators: Vec::new(),
    };
    let mut root = cells.clone();
    refine(s.adj, &mut root, cells.iter().copied().collect());
    s.explore(root);
    let best = s.best.expect("search reaches at least one leaf");
    let lab: Vec<usize> = best.lab.iter().map(|&v| v as usize).collect();
    let form = Graph::from_rows(&best.form).expect("relabeled graph is simple");
    let orbits = orbits_of(n, &s.generators);
    Labeling {
        lab,
        form,
        generators: s.generators,
        orbits,
    }
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_labeling(g).key()
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labeling(g).form
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.m() == b.m() && canonical_key(a) == canonical_key(b)
}

/// Orbit representatives under the group generated by `generators`.
pub fn orbits_of(n: usize, generators: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for g in generators {
        for (v, &w) in g.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.min_of(v)).collect()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    // Roots are always the smallest member, which makes `min_of` a plain find.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    fn min_of(&mut self, v: usize) -> usize {
        self.find(v)
    }
}

struct Leaf {
    lab: Vec<u8>,
    form: Vec<u64>,
    path: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    path: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when an automorphism lets the search jump back to
    /// the node at depth `level`.
    fn explore(&mut self, cells: Vec<u64>) -> Option<usize> {
        let depth = self.path.len();
        if cells.len() == self.adj.len() {
            return self.leaf(&cells);
        }
        let (ti, target) = cells
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, c)| c & (c - 1) != 0)
            .min_by_key(|&(i, c)| (c.count_ones(), i))
            .expect("non-discrete partition has a non-singleton cell");
        let mut tried = 0u64;
        for v in bits(target) {
            if tried != 0 && self.equivalent_to_tried(v, tried) {
                continue;
            }
            tried |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(target & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.adj, &mut child, VecDeque::from([1u64 << v]));
            self.path.push(v);
            let r = self.explore(child);
            self.path.pop();
            if let Some(level) = r {
                if level < depth {
                    return Some(level);
                }
            }
        }
        None
    }

    /// Is `v` in the same orbit as an already explored sibling, under the
    /// automorphisms found so far that fix the current path pointwise?
    fn equivalent_to_tried(&self, v: usize, tried: u64) -> bool {
        let n = self.adj.len();
        let mut uf = UnionFind::new(n);
        let mut any = false;
        for g in &self.generators {
            if self.path.iter().all(|&p| g[p] == p) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    uf.union(x, y);
                }
            }
        }
        if !any {
            return false;
        }
        let rv = uf.find(v);
        bits(tried).any(|t| uf.find(t) == rv)
    }

    fn leaf(&mut self, cells: &[u64]) -> Option<usize> {
        let n = self.adj.len();
        let lab: Vec<u8> = cells.iter().map(|c| c.trailing_zeros() as u8).collect();
        let mut pos = [0u8; 64];
        for (i, &v) in lab.iter().enumerate() {
            pos[v as usize] = i as u8;
        }
        let form: Vec<u64> = lab
            .iter()
            .map(|&v| bits(self.adj[v as usize]).fold(0u64, |acc, u| acc | 1 << pos[u]))
            .collect();
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                form,
                path: self.path.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                form: leaf.form.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        let automorphism = |other: &Leaf| {
            let mut g = vec![0usize; n];
            for (a, b) in other.lab.iter().zip(&lab) {
                g[*a as usize] = *b as usize;
            }
            g
        };
        let common = |p: &[usize], q: &[usize]| p.iter().zip(q).take_while(|(a, b)| a == b).count();
        if form == first.form {
            let g = automorphism(first);
            let level = common(&self.path, &first.path);
            self.push_generator(g);
            return Some(level);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match form.cmp(&best.form) {
            std::cmp::Ordering::Less => {
                self.best = Some(Leaf {
                    lab,
                    form,
                    path: self.path.clone(),
                });
                None
            }
            std::cmp::Ordering::Equal => {
                let g = automorphism(best);
                let level = common(&self.path, &best.path);
                self.push_generator(g);
                Some(level)
            }
            std::cmp::Ordering::Greater => None,
        }
    }

    fn push_generator(&mut self, g: Vec<usize>) {
        if g.iter().enumerate().any(|(v, &w)| v != w) && !self.generators.contains(&g) {
            self.generators.push(g);
        }
    }
}

/// Refines `cells` to the coarsest equitable partition finer than it, using
/// the cells in `queue` as initial splitters. Fragments of a split cell keep
/// their position and are ordered by ascending neighbor count.
fn refine(adj: &[u64], cells: &mut Vec<u64>, mut queue: VecDeque<u64>) {
    let n = adj.len();
    let mut counts = [0u8; 64];
    while let Some(s) = queue.pop_front() {
        if cells.len() == n {
            return;
        }
        let mut i = 0;
        while i < cells.len() {
            let c = cells[i];
            if c & (c - 1) == 0 {
                i += 1;
                continue;
            }
            let (mut lo, mut hi) = (u8::MAX, 0u8);
            for v in bits(c) {
                let k = (adj[v] & s).count_ones() as u8;
                counts[v] = k;
                lo = lo.min(k);
                hi = hi.max(k);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            let mut fragments = Vec::new();
            for k in lo..=hi {
                let f = bits(c).filter(|&v| counts[v] == k).fold(0u64, |a, v| a | 1 << v);
                if f != 0 {
                    fragments.push(f);
                }
            }
            let len = fragments.len();
            queue.extend(fragments.iter().copied());
            cells.splice(i..=i, fragments);
            i += len;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, e).unwrap()
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        let mut out = vec![];
        let mut p: Vec<usize> = (0..n).collect();
        fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if k == p.len() {
                out.push(p.clone());
                return;
            }
            for i in k..p.len() {
                p.swap(k, i);
                rec(k + 1, p, out);
                p.swap(k, i);
            }
        }
        rec(0, &mut p, &mut out);
        out
    }

    fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
        permutations(g.n())
            .into_iter()
            .filter(|p| &g.permuted(p) == g)
            .collect()
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1usize..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |b| {
                let mut gr = Graph::empty(n).unwrap();
                let mut k = 0;
                for j in 1..n {
                    for i in 0..j {
                        if b[k] {
                            gr.insert_edge(i, j);
                        }
                        k += 1;
                    }
                }
                gr
            })
        })
    }

    #[test]
    fn form_is_the_graph_relabeled_by_lab() {
        let p = g(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 1)]);
        let l = canonical_labeling(&p);
        assert_eq!(p.permuted(&l.position()), l.form);
    }

    #[test]
    fn symmetric_graphs() {
        let petersen = g(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        let l = canonical_labeling(&petersen);
        assert_eq!(l.orbit_count(), 1);
        for gen in &l.generators {
            assert_eq!(petersen.permuted(gen), petersen);
        }
        let k = g(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]);
        assert_eq!(canonical_labeling(&k).orbit_count(), 1);
        let e = Graph::empty(7).unwrap();
        assert_eq!(canonical_labeling(&e).orbit_count(), 1);
    }

    #[test]
    fn colored_labeling_separates_roots() {
        // Rooting a path at an end versus the middle.
        let p3 = g(3, &[(0, 1), (1, 2)]);
        let end = canonical_labeling_colored(&p3, &[1, 0b110]).key();
        let mid = canonical_labeling_colored(&p3, &[0b010, 0b101]).key();
        let other_end = canonical_labeling_colored(&p3, &[0b100, 0b011]).key();
        assert_ne!(end, mid);
        assert_eq!(end, other_end);
    }

    #[test]
    fn matches_brute_force_minimum_on_all_small_graphs() {
        // Every labeled graph on up to five vertices: same class iff same key.
        for n in 1..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            let perms = permutations(n);
            let mut classes = std::collections::HashMap::new();
            for mask in 0u32..(1 << pairs.len()) {
                let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
                let gr = g(n, &e);
                let brute = perms.iter().map(|p| gr.permuted(p)).min().unwrap();
                let key = canonical_key(&gr);
                let prev = classes.entry(brute).or_insert_with(|| key.clone());
                assert_eq!(*prev, key);
            }
            let distinct: std::collections::HashSet<_> = classes.values().collect();
            assert_eq!(distinct.len(), classes.len());
            assert_eq!(classes.len(), [1, 2, 4, 11, 34][n - 1]);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn key_is_invariant_under_relabeling(gr in arb_graph(9), seed in any::<u64>()) {
            let n = gr.n();
            let mut perm: Vec<usize> = (0..n).collect();
            let mut s = seed;
            for i in (1..n).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                perm.swap(i, (s >> 33) as usize % (i + 1));
            }
            let h = gr.permuted(&perm);
            let (a, b) = (canonical_labeling(&gr), canonical_labeling(&h));
            prop_assert_eq!(&a.form, &b.form);
            prop_assert_eq!(gr.permuted(&a.position()), a.form.clone());
            // Orbits must correspond through the relabeling.
            for u in 0..n {
                for v in 0..n {
                    prop_assert_eq!(a.orbits[u] == a.orbits[v], b.orbits[perm[u]] == b.orbits[perm[v]]);
                }
            }
        }

        #[test]
        fn generators_are_automorphisms_and_orbits_are_exact(gr in arb_graph(7)) {
            let l = canonical_labeling(&gr);
            for gen in &l.generators {
                prop_assert_eq!(&gr.permuted(gen), &gr);
            }
            let brute = orbits_of(gr.n(), &brute_automorphisms(&gr));
            prop_assert_eq!(l.orbits, brute);
        }
    }
}
