//! Compact simple undirected graphs and the structural primitives built on them.
//!
//! Adjacency rows are single `u64` bitsets, so a [`Graph`] holds at most 64
//! vertices. Everything here is a pure function of immutable inputs.

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Equality is labeled equality; use [`crate::canon::canonical_key`] to compare
/// isomorphism classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(Graph {
            n,
            m: 0,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_pair(u, v)?;
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric and loop-free.
    pub fn from_rows(rows: &[u64]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let valid = full_mask(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !valid != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency rows are not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        g.adj.copy_from_slice(rows);
        g.m = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Ok(g)
    }

    fn check_pair(&self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        Ok(())
    }

    /// Adds `uv` if absent. Callers guarantee `u != v` and both are in range.
    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if self.adj[u] >> v & 1 == 0 {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.m += 1;
        }
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        if self.adj[u] >> v & 1 == 1 {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.m -= 1;
        }
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    /// Copy of `self` with the edge `uv` removed (no-op if absent).
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_pair(u, v)?;
        let mut g = self.clone();
        g.remove_edge(u, v);
        Ok(g)
    }

    /// Copy of `self` with one new vertex `n` adjacent to every vertex in `mask`.
    pub fn with_vertex(&self, mask: u64) -> Result<Graph> {
        let n = self.n;
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + 1));
        }
        if mask & !full_mask(n) != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 63 - mask.leading_zeros() as usize,
                n,
            });
        }
        let mut adj = self.adj.clone();
        for u in bits(mask) {
            adj[u] |= 1 << n;
        }
        adj.push(mask);
        Ok(Graph {
            n: n + 1,
            m: self.m + mask.count_ones() as usize,
            adj,
        })
    }

    /// Copy of `self` with vertex `v` deleted; higher vertices shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let low = (1u64 << v) - 1;
        let squeeze = |row: u64| (row & low) | ((row >> 1) & !low);
        let adj: Vec<u64> = self
            .adj
            .iter()
            .enumerate()
            .filter(|&(u, _)| u != v)
            .map(|(_, &row)| squeeze(row & !(1 << v)))
            .collect();
        Ok(Graph {
            n: self.n - 1,
            m: self.m - self.degree(v),
            adj,
        })
    }

    /// Relabels vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut adj = vec![0u64; self.n];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut out = 0u64;
            for u in bits(row) {
                out |= 1 << perm[u];
            }
            adj[perm[v]] = out;
        }
        Graph {
            n: self.n,
            m: self.m,
            adj,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !full_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Non-adjacent pairs `(u, v)` with `u < v`.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let all = full_mask(self.n);
        (0..self.n).flat_map(move |u| {
            bits(!self.adj[u] & all & !full_mask(u + 1)).map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Vertices reachable from `start`, as a bitset.
    pub fn component_of(&self, start: usize) -> u64 {
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.component_of(0) == full_mask(self.n)
    }

    pub fn component_count(&self) -> usize {
        let mut left = full_mask(self.n);
        let mut count = 0;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            left &= !self.component_of(v);
            count += 1;
        }
        count
    }

    /// `m - n + c`: 0 for forests, 1 for unicyclic, 2 for bicyclic graphs.
    pub fn cyclomatic_number(&self) -> usize {
        self.m + self.component_count() - self.n
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.m + 1 == self.n && self.is_connected()
    }

    pub fn is_bipartite(&self) -> bool {
        let mut color = [0u8; MAX_VERTICES];
        let mut left = full_mask(self.n);
        while left != 0 {
            let root = left.trailing_zeros() as usize;
            color[root] = 1;
            let mut stack = vec![root];
            while let Some(v) = stack.pop() {
                left &= !(1 << v);
                for u in bits(self.adj[v]) {
                    if color[u] == 0 {
                        color[u] = 3 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        let mut dist = [u8::MAX; MAX_VERTICES];
        let mut parent = [usize::MAX; MAX_VERTICES];
        let mut queue = [0usize; MAX_VERTICES];
        for root in 0..self.n {
            dist[..self.n].fill(u8::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let (mut head, mut tail) = (0, 1);
            queue[0] = root;
            while head < tail {
                let v = queue[head];
                head += 1;
                if let Some(b) = best {
                    if 2 * dist[v] as usize + 1 >= b {
                        break;
                    }
                }
                for u in bits(self.adj[v]) {
                    if dist[u] == u8::MAX {
                        dist[u] = dist[v] + 1;
                        parent[u] = v;
                        queue[tail] = u;
                        tail += 1;
                    } else if parent[v] != u {
                        let len = dist[u] as usize + dist[v] as usize + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Vertices whose removal disconnects the graph.
    pub fn cut_vertices(&self) -> u64 {
        let mut cuts = 0u64;
        for v in 0..self.n {
            if self.degree(v) < 2 {
                continue;
            }
            let rest = full_mask(self.n) & !(1 << v);
            let start = (self.adj[v]).trailing_zeros() as usize;
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                for w in bits(frontier) {
                    next |= self.adj[w];
                }
                frontier = next & rest & !seen;
                seen |= frontier;
            }
            if seen & self.adj[v] != self.adj[v] {
                cuts |= 1 << v;
            }
        }
        cuts
    }

    pub fn blocks(&self) -> Result<BlockDecomposition> {
        if !self.is_connected() {
            return Err(Error::NotConnected);
        }
        Ok(BlockDecomposition::of(self))
    }

    /// True iff every block induces a complete graph.
    pub fn all_blocks_complete(&self) -> Result<bool> {
        let bd = self.blocks()?;
        Ok(bd.blocks.iter().all(|&b| {
            bits(b).all(|v| self.adj[v] & b == b & !(1 << v))
        }))
    }
}

/// Biconnected components of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, sorted ascending by mask.
    pub blocks: Vec<u64>,
    pub cut_vertices: u64,
}

impl BlockDecomposition {
    fn of(g: &Graph) -> BlockDecomposition {
        let n = g.n();
        let mut blocks = Vec::new();
        if n == 1 {
            blocks.push(1);
        }
        let mut disc = [u32::MAX; MAX_VERTICES];
        let mut low = [0u32; MAX_VERTICES];
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut time = 0u32;
        let mut cuts = 0u64;

        // Iterative DFS; each frame holds (vertex, parent, unexplored neighbors).
        if n > 0 {
            let root = 0usize;
            disc[root] = time;
            low[root] = time;
            time += 1;
            let mut stack: Vec<(usize, usize, u64)> = vec![(root, usize::MAX, g.neighbors(root))];
            let mut root_children = 0;
            while let Some(&mut (v, parent, ref mut todo)) = stack.last_mut() {
                if *todo != 0 {
                    let u = todo.trailing_zeros() as usize;
                    *todo &= *todo - 1;
                    if disc[u] == u32::MAX {
                        edge_stack.push((v, u));
                        disc[u] = time;
                        low[u] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((u, v, g.neighbors(u)));
                    } else if u != parent && disc[u] < disc[v] {
                        edge_stack.push((v, u));
                        low[v] = low[v].min(disc[u]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] >= disc[p] {
                            if p != root {
                                cuts |= 1 << p;
                            }
                            let mut block = 0u64;
                            while let Some((a, b)) = edge_stack.pop() {
                                block |= (1 << a) | (1 << b);
                                if (a, b) == (p, v) {
                                    break;
                                }
                            }
                            blocks.push(block);
                        }
                    }
                }
            }
            if root_children > 1 {
                cuts |= 1 << root;
            }
        }
        blocks.sort_unstable();
        BlockDecomposition {
            blocks,
            cut_vertices: cuts,
        }
    }
}

/// All-pairs shortest-path distances of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
}

impl DistanceMatrix {
    /// BFS from every vertex. Fails with [`Error::NotConnected`] on disconnected input.
    pub fn new(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.n();
        let mut d = vec![0u8; n * n];
        let all = full_mask(n);
        for s in 0..n {
            let row = &mut d[s * n..(s + 1) * n];
            let mut seen = 1u64 << s;
            let mut frontier = seen;
            let mut level = 0u8;
            while frontier != 0 {
                level += 1;
                let mut next = 0u64;
                for v in bits(frontier) {
                    next |= g.neighbors(v);
                }
                frontier = next & !seen;
                seen |= frontier;
                for v in bits(frontier) {
                    row[v] = level;
                }
            }
            if seen != all {
                return Err(Error::NotConnected);
            }
        }
        Ok(DistanceMatrix { n, d })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v] as u32
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u8] {
        &self.d[v * self.n..(v + 1) * self.n]
    }

    /// `D(v)`: the sum of distances from `v` to every vertex.
    pub fn transmission(&self, v: usize) -> u64 {
        self.row(v).iter().map(|&x| x as u64).sum()
    }

    /// Entry `i` counts vertices at distance exactly `i` from `v`.
    pub fn eta_profile(&self, v: usize) -> Vec<usize> {
        let mut profile = vec![0usize; self.eccentricity(v) as usize + 1];
        for &x in self.row(v) {
            profile[x as usize] += 1;
        }
        profile
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        self.row(v).iter().copied().max().unwrap_or(0) as u32
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0) as u32
    }
}

/// Identifies `v1` of `g1` with `v2` of `g2`.
///
/// Vertices of `g1` keep their labels; the remaining vertices of `g2` follow in
/// increasing order of their old labels.
pub fn coalesce(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph> {
    if v1 >= g1.n() {
        return Err(Error::VertexOutOfRange { vertex: v1, n: g1.n() });
    }
    if v2 >= g2.n() {
        return Err(Error::VertexOutOfRange { vertex: v2, n: g2.n() });
    }
    let n = g1.n() + g2.n() - 1;
    let mut g = Graph::empty(n)?;
    for (a, b) in g1.edges() {
        g.insert_edge(a, b);
    }
    let map = |x: usize| -> usize {
        match x.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => g1.n() + x,
            std::cmp::Ordering::Greater => g1.n() + x - 1,
        }
    };
    for (a, b) in g2.edges() {
        g.insert_edge(map(a), map(b));
    }
    Ok(g)
}

/// Index that vertex `v` of `g2` receives in `coalesce(g1, v1, g2, v2)`.
pub fn coalesced_index(g1_order: usize, v1: usize, v2: usize, v: usize) -> usize {
    match v.cmp(&v2) {
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Less => g1_order + v,
        std::cmp::Ordering::Greater => g1_order + v - 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn from_edges_collapses_duplicates_and_rejects_bad_input() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 0)]).unwrap();
        assert_eq!(g.m(), 3);
        assert_eq!(g, cycle(3));
        assert_eq!(Graph::from_edges(2, &[(0, 1)]).unwrap(), path(2));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(Graph::empty(65), Err(Error::TooManyVertices(65)));
        assert!(Graph::empty(64).is_ok());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4, cycle(4));
    }

    #[test]
    fn distances_on_small_graphs() {
        let p3 = path(3);
        let dm = DistanceMatrix::new(&p3).unwrap();
        assert_eq!(dm.get(0, 2), 2);

        let c5 = DistanceMatrix::new(&cycle(5)).unwrap();
        for v in 0..5 {
            assert_eq!(c5.transmission(v), 6);
            for u in 0..5 {
                if u != v {
                    assert!((1..=2).contains(&c5.get(u, v)));
                }
            }
        }
        let c4 = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!(c4.get(0, 2), 2);
        assert_eq!(c4.get(1, 3), 2);
        for v in 0..4 {
            assert_eq!(c4.transmission(v), 4);
        }

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(DistanceMatrix::new(&two), Err(Error::NotConnected));
    }

    #[test]
    fn transmission_and_profiles() {
        assert_eq!(DistanceMatrix::new(&path(5)).unwrap().transmission(0), 10);
        let c6 = DistanceMatrix::new(&cycle(6)).unwrap();
        assert_eq!(c6.eta_profile(2), vec![1, 2, 2, 1]);
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(DistanceMatrix::new(&star).unwrap().eta_profile(0), vec![1, 4]);
        assert_eq!(DistanceMatrix::new(&path(4)).unwrap().eta_profile(0), vec![1, 1, 1, 1]);
        assert_eq!(c6.diameter(), 3);
    }

    #[test]
    fn lollipop_five_four_apex() {
        // C4 on 0..3 with a pendant 4 at vertex 0.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)]).unwrap();
        let dm = DistanceMatrix::new(&g).unwrap();
        assert_eq!(dm.transmission(0), 5);
        let c4 = DistanceMatrix::new(&cycle(4)).unwrap();
        assert_eq!(c4.transmission(0), 4);
        assert_eq!(g.girth(), Some(4));
        assert!(g.is_bipartite());
    }

    #[test]
    fn girth_bipartite_cyclomatic() {
        assert_eq!(path(6).girth(), None);
        let k4m = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(k4m.girth(), Some(3));
        assert!(!k4m.is_bipartite());
        assert!(cycle(4).is_bipartite());
        assert!(!cycle(5).is_bipartite());
        assert_eq!(cycle(7).girth(), Some(7));
        assert_eq!(path(6).cyclomatic_number(), 0);
        assert_eq!(cycle(6).cyclomatic_number(), 1);
        assert_eq!(k4m.cyclomatic_number(), 2);
    }

    #[test]
    fn block_decomposition() {
        // L_{6,3}: triangle 0,1,2 with tail 2-3-4-5.
        let l63 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let bd = l63.blocks().unwrap();
        assert_eq!(bd.blocks.len(), 4);
        assert!(bd.blocks.contains(&0b111));
        assert_eq!(bd.cut_vertices, 0b11100);
        assert_eq!(bd.cut_vertices, l63.cut_vertices());
        assert!(l63.all_blocks_complete().unwrap());

        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(k4.blocks().unwrap().blocks, vec![0b1111]);

        // Two triangles joined by the bridge 2-3.
        let db = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap();
        let bd = db.blocks().unwrap();
        assert_eq!(bd.blocks, vec![0b000111, 0b001100, 0b111000]);
        assert_eq!(bd.cut_vertices, 0b001100);

        assert!(!cycle(4).all_blocks_complete().unwrap());
        assert!(path(5).all_blocks_complete().unwrap());
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        assert!(bowtie.all_blocks_complete().unwrap());

        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.blocks(), Err(Error::NotConnected));
    }

    #[test]
    fn coalescence_relabels_second_graph() {
        let c3 = cycle(3);
        let p = path(4);
        let g = coalesce(&c3, 2, &p, 0).unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(g.m(), 6);
        assert_eq!(g.cut_vertices(), 0b11100);
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(coalesce(&k1, 0, &c3, 1).unwrap().m(), 3);
        assert_eq!(coalesce(&c3, 1, &k1, 0).unwrap(), c3);
        assert_eq!(coalesced_index(3, 2, 0, 0), 2);
        assert_eq!(coalesced_index(3, 2, 0, 3), 5);
    }

    #[test]
    fn vertex_surgery() {
        let c5 = cycle(5);
        let p4 = c5.without_vertex(0).unwrap();
        assert_eq!(p4.m(), 3);
        assert!(p4.is_tree());
        let back = p4.with_vertex(0b1001).unwrap();
        assert_eq!(back.m(), 5);
        assert_eq!(back.girth(), Some(5));
        assert_eq!(c5.with_edge(0, 2).unwrap().m(), 6);
        assert_eq!(c5.without_edge(0, 1).unwrap().girth(), None);
        let perm = [4, 3, 2, 1, 0];
        assert_eq!(c5.permuted(&perm).m(), 5);
        assert_eq!(Graph::from_rows(c5.rows()).unwrap(), c5);
        assert!(Graph::from_rows(&[0b10, 0]).is_err());
    }
}
