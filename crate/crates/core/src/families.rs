//! Named graph families, their closed-form Wiener and Szeged values, and the
//! extremal bounds the verifier compares against.
//!
//! Two gluing primitives are kept apart: *attaching* a path adds a new edge
//! from an anchor to the first path vertex, while *identifying* merges a tree
//! vertex with an anchor (see [`coalesce`]).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::graph::{coalesce, Graph};
use crate::rational::Rational;

/// A tree together with a distinguished root vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    tree: Graph,
    root: usize,
}

impl RootedTree {
    pub fn new(tree: Graph, root: usize) -> Result<RootedTree> {
        if !tree.is_tree() {
            return Err(Error::NotATree);
        }
        if root >= tree.n() {
            return Err(Error::VertexOutOfRange {
                vertex: root,
                n: tree.n(),
            });
        }
        Ok(RootedTree { tree, root })
    }

    /// The one-vertex tree.
    pub fn trivial() -> RootedTree {
        RootedTree {
            tree: Graph::empty(1).expect("one vertex"),
            root: 0,
        }
    }

    /// `P_order` rooted at an end vertex.
    pub fn path(order: usize) -> Result<RootedTree> {
        Ok(RootedTree {
            tree: path(order)?,
            root: 0,
        })
    }

    /// `S_order` rooted at its center.
    pub fn star(order: usize) -> Result<RootedTree> {
        Ok(RootedTree {
            tree: star(order)?,
            root: 0,
        })
    }

    pub fn tree(&self) -> &Graph {
        &self.tree
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn order(&self) -> usize {
        self.tree.n()
    }

    pub fn with_root(&self, root: usize) -> Result<RootedTree> {
        RootedTree::new(self.tree.clone(), root)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs n >= 1"));
    }
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &e)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid(format!("cycle needs n >= 3, got {n}")));
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &e)
}

/// Star with center 0.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("star needs n >= 1"));
    }
    let e: Vec<_> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &e)
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs n >= 1"));
    }
    let e: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, &e)
}

/// Adds a path of `len` new vertices hanging from `anchor` by a new edge.
fn attach_path(g: &Graph, anchor: usize, len: usize) -> Result<Graph> {
    let mut g = g.clone();
    let mut prev = anchor;
    for _ in 0..len {
        g = g.with_vertex(1 << prev)?;
        prev = g.n() - 1;
    }
    Ok(g)
}

/// `L_{n,r}`: cycle `0..r` with a tail of `n - r` vertices hanging from vertex 0.
pub fn lollipop(n: usize, r: usize) -> Result<Graph> {
    if r < 3 || r > n {
        return Err(invalid(format!("lollipop needs 3 <= r <= n, got n={n}, r={r}")));
    }
    attach_path(&cycle(r)?, 0, n - r)
}

/// `C_r(T_1, ..., T_r)`: the root of `T_i` identified with cycle vertex `i`.
///
/// Cycle vertices are `0..r`; the non-root vertices of each tree follow in order.
pub fn cycle_with_rooted_trees(r: usize, trees: &[RootedTree]) -> Result<Graph> {
    if trees.len() != r {
        return Err(invalid(format!(
            "cycle of length {r} needs {r} rooted trees, got {}",
            trees.len()
        )));
    }
    let mut g = cycle(r)?;
    for (i, t) in trees.iter().enumerate() {
        g = coalesce(&g, i, &t.tree, t.root)?;
    }
    Ok(g)
}

/// `C_r(P_{n_1+1}, ..., P_{n_r+1})` where `extra[i] = n_i` counts the vertices
/// the path adds beyond its root.
pub fn cr_paths(r: usize, extra: &[usize]) -> Result<Graph> {
    let trees = extra
        .iter()
        .map(|&k| RootedTree::path(k + 1))
        .collect::<Result<Vec<_>>>()?;
    cycle_with_rooted_trees(r, &trees)
}

/// `C_r(S_{n_1+1}, ..., S_{n_r+1})` with every star rooted at its center.
pub fn cr_stars(r: usize, extra: &[usize]) -> Result<Graph> {
    let trees = extra
        .iter()
        .map(|&k| RootedTree::star(k + 1))
        .collect::<Result<Vec<_>>>()?;
    cycle_with_rooted_trees(r, &trees)
}

/// Spider `T_n(legs)`: center 0, legs laid out in the given order.
/// Returns the tree and, for each leg, the index of its tip.
fn spider_parts(n: usize, legs: &[usize]) -> Result<(Graph, Vec<usize>)> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(invalid("spider legs must be positive and non-empty"));
    }
    let total: usize = legs.iter().sum();
    if total + 1 != n {
        return Err(invalid(format!(
            "spider legs sum to {total}, expected n - 1 = {}",
            n as isize - 1
        )));
    }
    let mut g = Graph::empty(1)?;
    let mut tips = Vec::with_capacity(legs.len());
    for &len in legs {
        g = attach_path(&g, 0, len)?;
        tips.push(g.n() - 1);
    }
    Ok((g, tips))
}

/// Spider rooted at the tip of its (first) longest leg.
pub fn spider(n: usize, legs: &[usize]) -> Result<RootedTree> {
    let (g, tips) = spider_parts(n, legs)?;
    let longest = legs.iter().copied().max().unwrap_or(0);
    let leg = legs.iter().position(|&l| l == longest).unwrap_or(0);
    RootedTree::new(g, tips[leg])
}

/// Spider rooted at its center.
pub fn spider_centered(n: usize, legs: &[usize]) -> Result<RootedTree> {
    let (g, _) = spider_parts(n, legs)?;
    RootedTree::new(g, 0)
}

/// `H_n^k` for `k` in `0..=3`.
pub fn h_graph(n: usize, k: usize) -> Result<Graph> {
    if n < 8 {
        return Err(invalid(format!("H graphs need n >= 8, got {n}")));
    }
    match k {
        0 => {
            let t = spider(n - 2, &[n - 5, 1, 1])?;
            coalesce(&cycle(3)?, 0, t.tree(), t.root())
        }
        1 => {
            let t = spider(n - 2, &[n - 6, 2, 1])?;
            coalesce(&cycle(3)?, 0, t.tree(), t.root())
        }
        2 => {
            let t = spider(n - 3, &[n - 6, 1, 1])?;
            coalesce(&cycle(4)?, 0, t.tree(), t.root())
        }
        3 => {
            let t = spider(n - 3, &[n - 6, 1, 1])?;
            let g = coalesce(&cycle(3)?, 0, t.tree(), t.root())?;
            attach_path(&g, 1, 1)
        }
        _ => Err(invalid(format!("H graph index must be 0..=3, got {k}"))),
    }
}

/// `K_4` minus the edge 2-3: vertices 0 and 1 have degree 3.
pub fn k4_minus() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).expect("valid")
}

/// `B_n^{(1)}`: an end of `P_{n-3}` identified with a degree-3 vertex of `K_4^-`.
pub fn b1(n: usize) -> Result<Graph> {
    if n < 5 {
        return Err(invalid(format!("B1 needs n >= 5, got {n}")));
    }
    attach_path(&k4_minus(), 0, n - 4)
}

/// `B(n, s)`: paths of `n - s - 4` and `s` vertices attached to the two
/// degree-2 vertices of `K_4^-`.
pub fn b_ns(n: usize, s: usize) -> Result<Graph> {
    if n < 4 || 2 * s > n - 4 {
        return Err(invalid(format!(
            "B(n,s) needs n >= 4 and 0 <= s <= (n-4)/2, got n={n}, s={s}"
        )));
    }
    let g = attach_path(&k4_minus(), 2, n - s - 4)?;
    attach_path(&g, 3, s)
}

/// `B_n^{p,q}`: `C_p` and `C_q` joined by a path of length `n - p - q + 1`.
pub fn dumbbell(n: usize, p: usize, q: usize) -> Result<Graph> {
    if p < 3 || q < 3 || p + q > n {
        return Err(invalid(format!(
            "dumbbell needs p, q >= 3 and p + q <= n, got n={n}, p={p}, q={q}"
        )));
    }
    let g = attach_path(&cycle(p)?, 0, n - p - q + 1)?;
    let end = g.n() - 1;
    let g = coalesce(&g, end, &cycle(q)?, 0)?;
    debug_assert_eq!(g.n(), n);
    Ok(g)
}

/// `B_{k,l,t}`: hubs 0 and 1 joined by internally disjoint paths of lengths
/// `k`, `l`, `t`.
pub fn theta(k: usize, l: usize, t: usize) -> Result<Graph> {
    if !(1 <= k && k <= l && l <= t && l >= 2) {
        return Err(invalid(format!(
            "theta needs 1 <= k <= l <= t and l >= 2, got {k},{l},{t}"
        )));
    }
    let n = k + l + t - 1;
    let mut g = Graph::empty(n)?;
    let mut next = 2;
    for len in [k, l, t] {
        let mut prev = 0;
        for _ in 1..len {
            g.insert_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.insert_edge(prev, 1);
    }
    Ok(g)
}

/// `A_{n,k}^i`: the spider with one long leg of length `n - k` and `k - 1`
/// unit legs, plus `i` edges among the unit leaves, taken in lexicographic
/// order. The center has degree `k`; the long-leg tip is [`a_nk_tip`].
pub fn a_nk(n: usize, k: usize, i: usize) -> Result<Graph> {
    if k < 2 || k >= n {
        return Err(invalid(format!("A_(n,k) needs 2 <= k < n, got n={n}, k={k}")));
    }
    let units = k - 1;
    if i > units * (units - 1) / 2 {
        return Err(invalid(format!(
            "A_(n,k)^i allows at most {} extra edges, got {i}",
            units * (units - 1) / 2
        )));
    }
    let mut legs = vec![n - k];
    legs.extend(std::iter::repeat_n(1, units));
    let (mut g, tips) = spider_parts(n, &legs)?;
    let leaves = &tips[1..];
    let pairs = (0..units).flat_map(|a| (a + 1..units).map(move |b| (a, b)));
    for (a, b) in pairs.take(i) {
        g.insert_edge(leaves[a], leaves[b]);
    }
    Ok(g)
}

/// The non-unit leaf of [`a_nk`]`(n, k, _)`.
pub fn a_nk_tip(n: usize, k: usize) -> usize {
    n - k
}

fn exact_div(num: i128, den: i128, what: &str) -> Result<u64> {
    if num % den != 0 || num < 0 {
        return Err(invalid(format!("{what}: {num}/{den} is not a non-negative integer")));
    }
    Ok((num / den) as u64)
}

/// Wiener index of `L_{n,r}` for even `r < n`, evaluated scaled by 24.
pub fn closed_form_w_lollipop_even(n: usize, r: usize) -> Result<u64> {
    if r % 2 != 0 || r < 4 || r >= n {
        return Err(invalid(format!("need even 4 <= r < n, got n={n}, r={r}")));
    }
    let (n, r) = (n as i128, r as i128);
    let x24 = 4 * n * n * n + (-6 * r * r + 12 * r - 4) * n + (5 * r * r * r - 12 * r * r + 4 * r);
    exact_div(x24, 24, "lollipop closed form")
}

fn check_bns(n: usize, s: usize) -> Result<(i128, i128)> {
    if n < 4 || 2 * s > n - 4 {
        return Err(invalid(format!("need 0 <= s <= (n-4)/2, got n={n}, s={s}")));
    }
    Ok((n as i128, s as i128))
}

pub fn closed_form_w_bns(n: usize, s: usize) -> Result<u64> {
    let (n, s) = check_bns(n, s)?;
    let x6 = (n - 2) * (n - 1) * n + 3 * (s + 1) * (s + 2) + 3 * (n - s - 3) * (n - s - 2) + 6;
    exact_div(x6, 6, "B(n,s) Wiener closed form")
}

pub fn closed_form_sz_bns(n: usize, s: usize) -> Result<u64> {
    let (n, s) = check_bns(n, s)?;
    let x6 = (n - 1) * n * (n + 1) + 6 * (n * s - s * s - 4 * s - 1);
    exact_div(x6, 6, "B(n,s) Szeged closed form")
}

/// `(n³ − 19n + 54)/6`, the Wiener index of `B_n^{(1)}`, `H_n^2` and `H_n^3`.
pub fn closed_form_w_b1(n: usize) -> Result<u64> {
    let n = n as i128;
    exact_div(n * n * n - 19 * n + 54, 6, "B1 closed form")
}

pub fn closed_form_w_path(n: usize) -> u64 {
    let n = n as u64;
    (n - 1) * n * (n + 1) / 6
}

/// The extremal values the verifier checks, as exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremBounds {
    pub n: usize,
    /// Minimum of `Sz − W` over bipartite graphs with a cycle.
    pub thm1_1: Rational,
    /// Minimum of `Sz − W` over graphs with an odd cycle and girth at least 5.
    pub thm1_2: Rational,
    /// Minimum of `Sz* − W` over non-bipartite graphs.
    pub thm1_3: Rational,
    pub thm1_4_bipartite: Rational,
    pub thm1_4_nonbipartite: Rational,
    /// Maximum of `Sz/W` over unicyclic graphs.
    pub thm1_5: Rational,
    /// Maximum of `Sz*/W` over unicyclic graphs.
    pub thm1_6: Rational,
    pub thm1_7_bipartite: Rational,
    pub thm1_7_nonbipartite: Rational,
    pub thm2_3: Rational,
    pub thm2_4: Rational,
}

impl TheoremBounds {
    pub fn entries(&self) -> Vec<(&'static str, Rational)> {
        vec![
            ("thm1.1", self.thm1_1),
            ("thm1.2", self.thm1_2),
            ("thm1.3", self.thm1_3),
            ("thm1.4i", self.thm1_4_bipartite),
            ("thm1.4ii", self.thm1_4_nonbipartite),
            ("thm1.5", self.thm1_5),
            ("thm1.6", self.thm1_6),
            ("thm1.7i", self.thm1_7_bipartite),
            ("thm1.7ii", self.thm1_7_nonbipartite),
            ("thm2.3", self.thm2_3),
            ("thm2.4", self.thm2_4),
        ]
    }
}

pub fn theorem_bounds(n: usize) -> Result<TheoremBounds> {
    if n < 4 {
        return Err(invalid(format!("theorem bounds need n >= 4, got {n}")));
    }
    let k = n as i64;
    let r = Rational::new;
    let one = Rational::ONE;
    let two = Rational::integer(2);
    let bip = one + r(24 * (k - 2), k * k * k - 13 * k + 36);
    let odd = k % 2 == 1;
    Ok(TheoremBounds {
        n,
        thm1_1: Rational::integer(4 * k - 8),
        thm1_2: Rational::integer(2 * k - 5),
        thm1_3: r(k * k + 4 * k - 6, 4),
        thm1_4_bipartite: bip,
        thm1_4_nonbipartite: one + r(3 * (k * k + 4 * k - 6), 2 * (k * k * k - 7 * k + 12)),
        thm1_5: if odd { two - r(8, k * k + 7) } else { two },
        thm1_6: if odd { two + r(2, k * k - 1) } else { two },
        thm1_7_bipartite: bip,
        thm1_7_nonbipartite: one + r(6 * (2 * k - 5), k * k * k - 25 * k + 90),
        thm2_3: one + r(12, k * k * k - 19 * k + 54),
        thm2_4: one + r(24 * (k - 2), k * k * k - 19 * k + 54),
    })
}

/// A named family member, with a stable text form such as `lollipop:10:4`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FamilyId {
    Path(usize),
    Cycle(usize),
    Star(usize),
    Complete(usize),
    K4Minus,
    Lollipop { n: usize, r: usize },
    B1(usize),
    Bns { n: usize, s: usize },
    H { n: usize, k: usize },
    Theta { k: usize, l: usize, t: usize },
    Dumbbell { n: usize, p: usize, q: usize },
    /// Path orders `P_{n_i + 1}` hanging from `C_r`; text form lists the orders.
    CrPaths { r: usize, orders: Vec<usize> },
    /// Star orders hanging from `C_r` by their centers.
    CrStars { r: usize, orders: Vec<usize> },
    Spider { n: usize, legs: Vec<usize> },
    Ank { n: usize, k: usize, i: usize },
}

impl FamilyId {
    pub fn build(&self) -> Result<Graph> {
        let extra = |orders: &[usize]| -> Result<Vec<usize>> {
            orders
                .iter()
                .map(|&o| o.checked_sub(1).ok_or_else(|| invalid("path/star orders must be >= 1")))
                .collect()
        };
        match self {
            FamilyId::Path(n) => path(*n),
            FamilyId::Cycle(n) => cycle(*n),
            FamilyId::Star(n) => star(*n),
            FamilyId::Complete(n) => complete(*n),
            FamilyId::K4Minus => Ok(k4_minus()),
            FamilyId::Lollipop { n, r } => lollipop(*n, *r),
            FamilyId::B1(n) => b1(*n),
            FamilyId::Bns { n, s } => b_ns(*n, *s),
            FamilyId::H { n, k } => h_graph(*n, *k),
            FamilyId::Theta { k, l, t } => theta(*k, *l, *t),
            FamilyId::Dumbbell { n, p, q } => dumbbell(*n, *p, *q),
            FamilyId::CrPaths { r, orders } => cr_paths(*r, &extra(orders)?),
            FamilyId::CrStars { r, orders } => cr_stars(*r, &extra(orders)?),
            FamilyId::Spider { n, legs } => Ok(spider(*n, legs)?.tree),
            FamilyId::Ank { n, k, i } => a_nk(*n, *k, *i),
        }
    }

    /// Number of vertices of the built graph.
    pub fn order(&self) -> usize {
        match self {
            FamilyId::Path(n)
            | FamilyId::Cycle(n)
            | FamilyId::Star(n)
            | FamilyId::Complete(n)
            | FamilyId::B1(n)
            | FamilyId::Lollipop { n, .. }
            | FamilyId::Bns { n, .. }
            | FamilyId::H { n, .. }
            | FamilyId::Dumbbell { n, .. }
            | FamilyId::Spider { n, .. }
            | FamilyId::Ank { n, .. } => *n,
            FamilyId::K4Minus => 4,
            FamilyId::Theta { k, l, t } => k + l + t - 1,
            FamilyId::CrPaths { r, orders } | FamilyId::CrStars { r, orders } => {
                r + orders.iter().map(|o| o.saturating_sub(1)).sum::<usize>()
            }
        }
    }
}

fn join(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyId::Path(n) => write!(f, "path:{n}"),
            FamilyId::Cycle(n) => write!(f, "cycle:{n}"),
            FamilyId::Star(n) => write!(f, "star:{n}"),
            FamilyId::Complete(n) => write!(f, "complete:{n}"),
            FamilyId::K4Minus => write!(f, "k4minus"),
            FamilyId::Lollipop { n, r } => write!(f, "lollipop:{n}:{r}"),
            FamilyId::B1(n) => write!(f, "b1:{n}"),
            FamilyId::Bns { n, s } => write!(f, "bns:{n}:{s}"),
            FamilyId::H { n, k } => write!(f, "h:{n}:{k}"),
            FamilyId::Theta { k, l, t } => write!(f, "theta:{k}:{l}:{t}"),
            FamilyId::Dumbbell { n, p, q } => write!(f, "dumbbell:{n}:{p}:{q}"),
            FamilyId::CrPaths { r, orders } => write!(f, "crpaths:{r}:{}", join(orders)),
            FamilyId::CrStars { r, orders } => write!(f, "crstars:{r}:{}", join(orders)),
            FamilyId::Spider { n, legs } => write!(f, "spider:{n}:{}", join(legs)),
            FamilyId::Ank { n, k, i } => write!(f, "ank:{n}:{k}:{i}"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilyId> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |p: &str| -> Result<usize> {
            p.trim()
                .parse()
                .map_err(|_| invalid(format!("{s:?}: {p:?} is not a non-negative integer")))
        };
        let list = |p: &str| -> Result<Vec<usize>> { p.split(',').map(num).collect() };
        let want = |k: usize| -> Result<()> {
            if parts.len() == k + 1 {
                Ok(())
            } else {
                Err(invalid(format!("{s:?}: expected {k} parameter(s) after '{}'", parts[0])))
            }
        };
        let id = match parts[0] {
            "path" => {
                want(1)?;
                FamilyId::Path(num(parts[1])?)
            }
            "cycle" => {
                want(1)?;
                FamilyId::Cycle(num(parts[1])?)
            }
            "star" => {
                want(1)?;
                FamilyId::Star(num(parts[1])?)
            }
            "complete" => {
                want(1)?;
                FamilyId::Complete(num(parts[1])?)
            }
            "k4minus" => {
                want(0)?;
                FamilyId::K4Minus
            }
            "lollipop" => {
                want(2)?;
                FamilyId::Lollipop {
                    n: num(parts[1])?,
                    r: num(parts[2])?,
                }
            }
            "b1" => {
                want(1)?;
                FamilyId::B1(num(parts[1])?)
            }
            "bns" => {
                want(2)?;
                FamilyId::Bns {
                    n: num(parts[1])?,
                    s: num(parts[2])?,
                }
            }
            "h" => {
                want(2)?;
                FamilyId::H {
                    n: num(parts[1])?,
                    k: num(parts[2])?,
                }
            }
            "theta" => {
                want(3)?;
                FamilyId::Theta {
                    k: num(parts[1])?,
                    l: num(parts[2])?,
                    t: num(parts[3])?,
                }
            }
            "dumbbell" => {
                want(3)?;
                FamilyId::Dumbbell {
                    n: num(parts[1])?,
                    p: num(parts[2])?,
                    q: num(parts[3])?,
                }
            }
            "crpaths" => {
                want(2)?;
                FamilyId::CrPaths {
                    r: num(parts[1])?,
                    orders: list(parts[2])?,
                }
            }
            "crstars" => {
                want(2)?;
                FamilyId::CrStars {
                    r: num(parts[1])?,
                    orders: list(parts[2])?,
                }
            }
            "spider" => {
                want(2)?;
                FamilyId::Spider {
                    n: num(parts[1])?,
                    legs: list(parts[2])?,
                }
            }
            "ank" => {
                want(3)?;
                FamilyId::Ank {
                    n: num(parts[1])?,
                    k: num(parts[2])?,
                    i: num(parts[3])?,
                }
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        };
        Ok(id)
    }
}

impl From<FamilyId> for String {
    fn from(id: FamilyId) -> String {
        id.to_string()
    }
}

impl TryFrom<String> for FamilyId {
    type Error = Error;
    fn try_from(s: String) -> Result<FamilyId> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::graph::DistanceMatrix;
    use crate::invariants::{wiener, Indices};
    use proptest::prelude::*;

    fn w(g: &Graph) -> u64 {
        wiener(&DistanceMatrix::new(g).unwrap())
    }

    #[test]
    fn basic_families() {
        assert_eq!(w(&path(5).unwrap()), 20);
        assert_eq!(w(&cycle(4).unwrap()), 8);
        assert_eq!(w(&star(6).unwrap()), 25);
        assert_eq!(w(&complete(4).unwrap()), 6);
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(lollipop(5, 5).unwrap(), cycle(5).unwrap());
        assert_eq!(w(&lollipop(6, 3).unwrap()), 31);
        assert_eq!(w(&lollipop(8, 6).unwrap()), 64);
        assert_eq!(lollipop(8, 3).unwrap().girth(), Some(3));
        assert!(lollipop(4, 5).is_err());
    }

    #[test]
    fn cycle_with_trees() {
        assert_eq!(w(&cr_paths(3, &[3, 1, 0]).unwrap()), 48);
        assert_eq!(w(&cr_paths(3, &[4, 2, 1]).unwrap()), 135);
        assert_eq!(w(&cr_paths(3, &[5, 2, 1]).unwrap()), 184);
        assert!(cr_paths(3, &[1, 1]).is_err());
        // C_3(P_2,P_2,P_1) and L_{6,3}... differ even though both are unicyclic girth 3.
        let a = lollipop(6, 3).unwrap();
        let b = cr_paths(3, &[2, 1, 0]).unwrap();
        assert_ne!(canonical_key(&a), canonical_key(&b));
        let stars = cr_stars(3, &[2, 0, 0]).unwrap();
        assert_eq!(stars.degree(0), 4);
    }

    #[test]
    fn spiders() {
        assert_eq!(w(spider(8, &[3, 3, 1]).unwrap().tree()), 75);
        assert_eq!(w(spider(5, &[2, 1, 1]).unwrap().tree()), 18);
        let t = spider(7, &[1, 4, 1]).unwrap();
        assert_eq!(t.tree().degree(t.root()), 1);
        assert_eq!(DistanceMatrix::new(t.tree()).unwrap().get(t.root(), 0), 4);
        assert_eq!(spider_centered(7, &[1, 4, 1]).unwrap().root(), 0);
        assert!(spider(7, &[1, 1]).is_err());
    }

    #[test]
    fn h_graphs() {
        for n in 8..=20 {
            let h2 = h_graph(n, 2).unwrap();
            let h3 = h_graph(n, 3).unwrap();
            assert_eq!(h2.n(), n);
            assert_eq!(h2.cyclomatic_number(), 1);
            assert_eq!(h2.girth(), Some(4));
            assert_eq!(h_graph(n, 0).unwrap().girth(), Some(3));
            assert_eq!(w(&h2), closed_form_w_b1(n).unwrap());
            assert_eq!(w(&h3), closed_form_w_b1(n).unwrap());
        }
        assert_eq!(w(&h_graph(10, 2).unwrap()), 144);
        assert_eq!(w(&h_graph(11, 3).unwrap()), 196);
        assert_eq!(w(&cr_paths(3, &[5, 3, 0]).unwrap()), 196);
        assert!(h_graph(7, 0).is_err());
        assert!(h_graph(9, 4).is_err());
    }

    #[test]
    fn bicyclic_families() {
        assert_eq!(w(&b1(5).unwrap()), 14);
        assert_eq!(w(&b1(6).unwrap()), 26);
        assert_eq!(w(&b_ns(6, 1).unwrap()), 27);
        assert_eq!(w(&dumbbell(6, 3, 3).unwrap()), 27);
        assert_eq!(w(&b_ns(8, 2).unwrap()), 69);
        assert_eq!(w(&b1(8).unwrap()), 69);
        assert_eq!(w(&b_ns(6, 0).unwrap()), 28);
        let i = Indices::of(&b_ns(5, 0).unwrap()).unwrap();
        assert_eq!(i.szeged, 19);
        let d = DistanceMatrix::new(&b_ns(9, 0).unwrap()).unwrap();
        assert_eq!(d.diameter(), 7);
        let d = DistanceMatrix::new(&b1(9).unwrap()).unwrap();
        assert_eq!(d.diameter(), 6);
        let th = theta(1, 2, 4).unwrap();
        assert_eq!((th.n(), th.m(), th.cyclomatic_number()), (6, 7, 2));
        assert!(theta(1, 1, 3).is_err());
        assert!(b_ns(7, 2).is_err());
        assert!(dumbbell(6, 3, 4).is_err());
        assert_eq!(dumbbell(7, 3, 4).unwrap().cyclomatic_number(), 2);
        assert_eq!(DistanceMatrix::new(&dumbbell(6, 3, 3).unwrap()).unwrap().diameter(), 3);
        assert_eq!(b1(6).unwrap().blocks().unwrap().blocks.len(), 3);
    }

    #[test]
    fn a_nk_family() {
        let a = a_nk(8, 4, 0).unwrap();
        assert_eq!(a, spider(8, &[4, 1, 1, 1]).unwrap().tree().clone());
        let tip = a_nk_tip(8, 4);
        assert_eq!(DistanceMatrix::new(&a).unwrap().transmission(tip), 25);
        for n in 6..=12 {
            for i in 0..=3 {
                let g = a_nk(n, 4, i).unwrap();
                assert_eq!(g.m(), n - 1 + i);
                let d = DistanceMatrix::new(&g).unwrap();
                assert_eq!(d.diameter() as usize, n - 3);
                assert_eq!(d.transmission(a_nk_tip(n, 4)) as usize, (n * n - n - 6) / 2);
            }
        }
        // Joining a different pair of unit leaves gives an isomorphic graph.
        let mut other = a_nk(8, 4, 0).unwrap();
        other.insert_edge(6, 7);
        assert_eq!(canonical_key(&other), canonical_key(&a_nk(8, 4, 1).unwrap()));
        assert!(a_nk(8, 4, 4).is_err());
    }

    #[test]
    fn closed_forms_match_brute_force() {
        for n in 5..=20 {
            for r in (4..n).step_by(2) {
                assert_eq!(closed_form_w_lollipop_even(n, r).unwrap(), w(&lollipop(n, r).unwrap()));
            }
            for s in 0..=(n - 4) / 2 {
                let g = b_ns(n, s).unwrap();
                let i = Indices::of(&g).unwrap();
                assert_eq!(closed_form_w_bns(n, s).unwrap(), i.wiener);
                assert_eq!(closed_form_sz_bns(n, s).unwrap(), i.szeged);
            }
            assert_eq!(closed_form_w_b1(n).unwrap(), w(&b1(n).unwrap()));
        }
        assert_eq!(closed_form_w_lollipop_even(8, 6).unwrap(), 64);
        assert!(closed_form_w_lollipop_even(8, 5).is_err());
        assert!(closed_form_w_bns(8, 3).is_err());
    }

    #[test]
    fn bounds() {
        let b = theorem_bounds(5).unwrap();
        assert_eq!(b.thm2_3, Rational::new(8, 7));
        let b = theorem_bounds(10).unwrap();
        assert_eq!(b.thm2_4, Rational::new(11, 9));
        let h = Indices::of(&h_graph(10, 2).unwrap()).unwrap();
        assert_eq!(h.szstar_over_w().unwrap(), b.thm2_4);
        assert_eq!(theorem_bounds(4).unwrap().thm1_3, Rational::new(13, 2));
        assert_eq!(theorem_bounds(7).unwrap().thm1_5, Rational::new(13, 7));
        assert_eq!(theorem_bounds(5).unwrap().thm1_6, Rational::new(25, 12));
        assert!(theorem_bounds(3).is_err());
    }

    #[test]
    fn family_text_round_trip() {
        for s in [
            "path:5", "cycle:6", "star:4", "complete:3", "k4minus", "lollipop:10:4", "b1:7",
            "bns:8:2", "h:12:2", "theta:1:2:4", "dumbbell:9:3:4", "crpaths:3:5,3,2",
            "crstars:4:3,1,1,2", "spider:8:3,3,1", "ank:8:4:2",
        ] {
            let id: FamilyId = s.parse().unwrap();
            assert_eq!(id.to_string(), s);
            assert_eq!(id.build().unwrap().n(), id.order(), "{s}");
        }
        let id: FamilyId = "crpaths:3:5,3,2".parse().unwrap();
        assert_eq!(w(&id.build().unwrap()), 135);
        assert_eq!(w(&"bns:8:2".parse::<FamilyId>().unwrap().build().unwrap()), 69);
        assert!("lollipop:10".parse::<FamilyId>().is_err());
        assert!("blob:3".parse::<FamilyId>().is_err());
        assert!("path:x".parse::<FamilyId>().is_err());
        assert!("lollipop:3:4".parse::<FamilyId>().unwrap().build().is_err());
        let json = serde_json::to_string(&FamilyId::H { n: 10, k: 2 }).unwrap();
        assert_eq!(json, "\"h:10:2\"");
    }

    proptest! {
        #[test]
        fn bns_monotone_in_s(n in 8usize..=20) {
            for s in 0..(n - 4) / 2 {
                prop_assert!(closed_form_w_bns(n, s + 1).unwrap() < closed_form_w_bns(n, s).unwrap());
                prop_assert!(closed_form_sz_bns(n, s + 1).unwrap() > closed_form_sz_bns(n, s).unwrap());
            }
        }

        #[test]
        fn lollipops_are_unicyclic_with_girth_r(n in 3usize..=30, r in 3usize..=30) {
            prop_assume!(r <= n);
            let g = lollipop(n, r).unwrap();
            prop_assert_eq!(g.cyclomatic_number(), 1);
            prop_assert_eq!(g.girth(), Some(r));
            prop_assert_eq!(g.is_bipartite(), r % 2 == 0);
        }
    }
}
