//! Wiener, Szeged and revised Szeged indices, computed exactly.
//!
//! The revised Szeged index has quarter-integer values, so it is carried as
//! the integer `4·Sz*` and only turned into a [`Rational`] at the edges.

use crate::error::{Error, Result};
use crate::graph::{bits, DistanceMatrix, Graph};
use crate::rational::Rational;

/// How the vertices split with respect to one edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct EdgeSplit {
    /// Vertices strictly closer to `u`.
    pub n_u: usize,
    /// Vertices strictly closer to `v`.
    pub n_v: usize,
    /// Vertices equidistant from `u` and `v`.
    pub n_0: usize,
}

impl EdgeSplit {
    #[inline]
    pub fn szeged_term(&self) -> u64 {
        (self.n_u * self.n_v) as u64
    }

    /// `(2 n_u + n_0)(2 n_v + n_0)`, i.e. four times the revised term.
    #[inline]
    pub fn revised_term_x4(&self) -> u64 {
        ((2 * self.n_u + self.n_0) * (2 * self.n_v + self.n_0)) as u64
    }
}

pub fn edge_split(dm: &DistanceMatrix, u: usize, v: usize) -> Result<EdgeSplit> {
    let n = dm.n();
    if u >= n || v >= n {
        return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
    }
    if dm.get(u, v) != 1 {
        return Err(Error::NotAnEdge(u, v));
    }
    Ok(split_unchecked(dm, u, v))
}

#[inline]
fn split_unchecked(dm: &DistanceMatrix, u: usize, v: usize) -> EdgeSplit {
    let (ru, rv) = (dm.row(u), dm.row(v));
    let (mut n_u, mut n_v) = (0, 0);
    for (a, b) in ru.iter().zip(rv) {
        n_u += (a < b) as usize;
        n_v += (b < a) as usize;
    }
    EdgeSplit {
        n_u,
        n_v,
        n_0: dm.n() - n_u - n_v,
    }
}

/// Sum of distances over unordered vertex pairs.
pub fn wiener(dm: &DistanceMatrix) -> u64 {
    let n = dm.n();
    (0..n)
        .map(|u| dm.row(u)[u + 1..].iter().map(|&x| x as u64).sum::<u64>())
        .sum()
}

/// `W(T) = Σ n_u n_v` over tree edges, from subtree sizes alone (no distances).
pub fn wiener_tree_edge_form(g: &Graph) -> Result<u64> {
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.n();
    // Preorder from vertex 0, then accumulate subtree sizes bottom-up.
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = 1u64;
    while let Some(v) = stack.pop() {
        order.push(v);
        for u in bits(g.neighbors(v) & !seen) {
            seen |= 1 << u;
            parent[u] = v;
            stack.push(u);
        }
    }
    let mut size = vec![1u64; n];
    let mut total = 0u64;
    for &v in order.iter().rev() {
        if parent[v] != usize::MAX {
            total += size[v] * (n as u64 - size[v]);
            size[parent[v]] += size[v];
        }
    }
    Ok(total)
}

pub fn szeged(g: &Graph, dm: &DistanceMatrix) -> u64 {
    g.edges().map(|(u, v)| split_unchecked(dm, u, v).szeged_term()).sum()
}

/// `4·Sz*(G) = Σ (2n_u + n_0)(2n_v + n_0)`, always an integer.
pub fn revised_szeged_x4(g: &Graph, dm: &DistanceMatrix) -> u64 {
    g.edges().map(|(u, v)| split_unchecked(dm, u, v).revised_term_x4()).sum()
}

pub fn revised_szeged(g: &Graph, dm: &DistanceMatrix) -> Rational {
    Rational::new(revised_szeged_x4(g, dm) as i64, 4)
}

pub fn sz_minus_w(g: &Graph, dm: &DistanceMatrix) -> i64 {
    szeged(g, dm) as i64 - wiener(dm) as i64
}

pub fn sz_over_w(g: &Graph, dm: &DistanceMatrix) -> Result<Rational> {
    Indices::from_parts(g, dm).sz_over_w()
}

pub fn szstar_over_w(g: &Graph, dm: &DistanceMatrix) -> Result<Rational> {
    Indices::from_parts(g, dm).szstar_over_w()
}

/// All three indices of one connected graph, computed in a single pass.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Indices {
    pub n: usize,
    pub m: usize,
    pub wiener: u64,
    pub szeged: u64,
    pub revised_szeged_x4: u64,
}

impl Indices {
    pub fn of(g: &Graph) -> Result<Indices> {
        let dm = DistanceMatrix::new(g)?;
        Ok(Indices::from_parts(g, &dm))
    }

    pub fn from_parts(g: &Graph, dm: &DistanceMatrix) -> Indices {
        let (mut sz, mut sz4) = (0u64, 0u64);
        for (u, v) in g.edges() {
            let s = split_unchecked(dm, u, v);
            sz += s.szeged_term();
            sz4 += s.revised_term_x4();
        }
        Indices {
            n: g.n(),
            m: g.m(),
            wiener: wiener(dm),
            szeged: sz,
            revised_szeged_x4: sz4,
        }
    }

    pub fn revised_szeged(&self) -> Rational {
        Rational::new(self.revised_szeged_x4 as i64, 4)
    }

    pub fn sz_minus_w(&self) -> i64 {
        self.szeged as i64 - self.wiener as i64
    }

    /// `Sz* − W` as an exact rational.
    pub fn szstar_minus_w(&self) -> Rational {
        Rational::new(self.revised_szeged_x4 as i64 - 4 * self.wiener as i64, 4)
    }

    pub fn sz_over_w(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::TrivialGraph);
        }
        Ok(Rational::new(self.szeged as i64, self.wiener as i64))
    }

    pub fn szstar_over_w(&self) -> Result<Rational> {
        if self.n < 2 {
            return Err(Error::TrivialGraph);
        }
        Ok(Rational::new(
            self.revised_szeged_x4 as i64,
            4 * self.wiener as i64,
        ))
    }
}
