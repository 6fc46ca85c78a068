//! Isomorphism-free generation of trees, unicyclic, bicyclic and connected
//! graphs.
//!
//! Every generator returns canonical forms sorted by canonical key, so the
//! graph6 line of each output graph is its key and two runs produce identical
//! sequences regardless of thread count.

use std::collections::HashMap;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_labeling, Labeling};
use crate::error::{invalid, Error, Result};
use crate::graph::{bits, full_mask, Graph};
use crate::graph6::{emit_graph6, parse_graph6_lines};

/// Environment variable that lifts every enumeration guard when set to `1`.
pub const OVERRIDE_ENV: &str = "SZEGED_OVERRIDE_GUARD";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GraphClass {
    Trees,
    Unicyclic,
    Bicyclic,
    Connected,
    /// Connected graphs with at least one cycle.
    Cyclic,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Trees,
        GraphClass::Unicyclic,
        GraphClass::Bicyclic,
        GraphClass::Connected,
        GraphClass::Cyclic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Trees => "trees",
            GraphClass::Unicyclic => "unicyclic",
            GraphClass::Bicyclic => "bicyclic",
            GraphClass::Connected => "connected",
            GraphClass::Cyclic => "cyclic",
        }
    }
}

impl fmt::Display for GraphClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphClass {
    type Err = Error;
    fn from_str(s: &str) -> Result<GraphClass> {
        GraphClass::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| invalid(format!("unknown class {s:?}; expected trees, unicyclic, bicyclic, connected or cyclic")))
    }
}

/// Largest `n` each class may be enumerated at without an override.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Guards {
    pub max_trees: usize,
    pub max_unicyclic: usize,
    pub max_bicyclic: usize,
    pub max_connected: usize,
    pub override_all: bool,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_trees: 16,
            max_unicyclic: 12,
            max_bicyclic: 12,
            max_connected: 9,
            override_all: false,
        }
    }
}

impl Guards {
    /// Defaults, overridden when [`OVERRIDE_ENV`] is `1`.
    pub fn from_env() -> Guards {
        Guards {
            override_all: std::env::var(OVERRIDE_ENV).is_ok_and(|v| v == "1"),
            ..Guards::default()
        }
    }

    pub fn overridden(mut self, yes: bool) -> Guards {
        self.override_all |= yes;
        self
    }

    pub fn limit(&self, class: GraphClass) -> usize {
        match class {
            GraphClass::Trees => self.max_trees,
            GraphClass::Unicyclic => self.max_unicyclic,
            GraphClass::Bicyclic => self.max_bicyclic,
            GraphClass::Connected | GraphClass::Cyclic => self.max_connected,
        }
    }

    pub fn check(&self, class: GraphClass, n: usize) -> Result<()> {
        let max = self.limit(class);
        if n > max && !self.override_all {
            return Err(Error::Guard {
                class: class.to_string(),
                n,
                max,
            });
        }
        if n > 64 {
            return Err(Error::TooManyVertices(n));
        }
        Ok(())
    }
}

/// Conjunctive filters over a class. `None` means "don't care".
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filter {
    pub min_girth: Option<usize>,
    pub max_girth: Option<usize>,
    pub bipartite: Option<bool>,
    /// Has an odd cycle; the same as `bipartite == Some(false)` on connected graphs.
    pub odd_cycle: Option<bool>,
    /// At least one block is not a complete graph.
    pub non_complete_block: Option<bool>,
    /// At least `n` edges, i.e. the graph has a cycle.
    pub has_cycle: Option<bool>,
}

impl Filter {
    pub fn accepts(&self, g: &Graph) -> bool {
        if let Some(want) = self.has_cycle {
            if (g.m() >= g.n()) != want {
                return false;
            }
        }
        let bip = || g.is_bipartite();
        if let Some(want) = self.bipartite {
            if bip() != want {
                return false;
            }
        }
        if let Some(want) = self.odd_cycle {
            if bip() == want {
                return false;
            }
        }
        if self.min_girth.is_some() || self.max_girth.is_some() {
            let girth = g.girth();
            if let Some(lo) = self.min_girth {
                if girth.is_none_or(|x| x < lo) {
                    return false;
                }
            }
            if let Some(hi) = self.max_girth {
                if girth.is_none_or(|x| x > hi) {
                    return false;
                }
            }
        }
        if let Some(want) = self.non_complete_block {
            let complete = g.all_blocks_complete().unwrap_or(true);
            if complete == want {
                return false;
            }
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSpec {
    pub class: GraphClass,
    pub n: usize,
    #[serde(default)]
    pub filter: Filter,
}

impl ClassSpec {
    pub fn new(class: GraphClass, n: usize) -> ClassSpec {
        ClassSpec {
            class,
            n,
            filter: Filter::default(),
        }
    }

    pub fn with_filter(mut self, filter: Filter) -> ClassSpec {
        self.filter = filter;
        self
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={}", self.class, self.n)?;
        let fl = &self.filter;
        if let Some(g) = fl.min_girth {
            write!(f, " girth>={g}")?;
        }
        if let Some(g) = fl.max_girth {
            write!(f, " girth<={g}")?;
        }
        if let Some(b) = fl.bipartite {
            write!(f, " bipartite={b}")?;
        }
        if let Some(b) = fl.odd_cycle {
            write!(f, " odd_cycle={b}")?;
        }
        if let Some(b) = fl.non_complete_block {
            write!(f, " non_complete_block={b}")?;
        }
        if let Some(b) = fl.has_cycle {
            write!(f, " has_cycle={b}")?;
        }
        Ok(())
    }
}

/// Lazily applies `spec`'s filter to a stream of graphs.
pub fn filter<'a, I>(spec: &'a ClassSpec, graphs: I) -> impl Iterator<Item = Graph> + 'a
where
    I: IntoIterator<Item = Graph> + 'a,
{
    graphs.into_iter().filter(move |g| spec.filter.accepts(g))
}

// ---------------------------------------------------------------------------
// Trees

/// All rooted trees on `n` vertices as canonical level sequences, in
/// generation order starting from the path.
fn rooted_level_sequences(n: usize) -> Vec<Vec<u8>> {
    if n == 0 {
        return vec![];
    }
    let mut l: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![l.clone()];
    loop {
        let Some(p) = (1..n).rev().find(|&i| l[i] > 1) else {
            break;
        };
        let q = (0..p).rev().find(|&i| l[i] == l[p] - 1).expect("parent level exists");
        for i in p..n {
            l[i] = l[i - (p - q)];
        }
        out.push(l.clone());
    }
    out
}

fn level_sequence_graph(levels: &[u8], offset: usize, g: &mut Graph) {
    let mut last_at = [usize::MAX; 64];
    for (i, &lv) in levels.iter().enumerate() {
        if lv > 0 {
            g.insert_edge(offset + i, offset + last_at[lv as usize - 1]);
        }
        last_at[lv as usize] = i;
    }
}

fn root_branch_sizes(levels: &[u8]) -> Vec<usize> {
    let starts: Vec<usize> = (1..levels.len()).filter(|&i| levels[i] == 1).collect();
    starts
        .iter()
        .enumerate()
        .map(|(k, &s)| starts.get(k + 1).copied().unwrap_or(levels.len()) - s)
        .collect()
}

/// Free trees, one per isomorphism class: trees with a single centroid are
/// rooted trees whose root branches all have fewer than `n/2` vertices;
/// bicentroidal trees are unordered pairs of rooted `n/2`-vertex trees joined
/// at their roots.
pub fn gen_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return vec![];
    }
    let mut trees = Vec::new();
    for seq in rooted_level_sequences(n) {
        if root_branch_sizes(&seq).iter().all(|&s| 2 * s < n) {
            let mut g = Graph::empty(n).expect("n <= 64");
            level_sequence_graph(&seq, 0, &mut g);
            trees.push(g);
        }
    }
    if n % 2 == 0 {
        let half = rooted_level_sequences(n / 2);
        for i in 0..half.len() {
            for j in i..half.len() {
                let mut g = Graph::empty(n).expect("n <= 64");
                level_sequence_graph(&half[i], 0, &mut g);
                level_sequence_graph(&half[j], n / 2, &mut g);
                g.insert_edge(0, n / 2);
                trees.push(g);
            }
        }
    }
    canonical_sorted(trees)
}

fn canonical_sorted(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut keyed: Vec<(Vec<u8>, Graph)> = graphs
        .into_par_iter()
        .map(|g| {
            let form = canonical_labeling(&g).form;
            (emit_graph6(&form).into_bytes(), form)
        })
        .collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

// ---------------------------------------------------------------------------
// Adding one edge

/// One non-edge from each orbit of `Aut(g)` acting on non-adjacent pairs.
pub fn non_edge_orbit_representatives(g: &Graph, lab: &Labeling) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut seen = vec![false; n * n];
    let mut reps = Vec::new();
    for (u, v) in g.non_edges() {
        if seen[u * n + v] {
            continue;
        }
        reps.push((u, v));
        seen[u * n + v] = true;
        let mut stack = vec![(u, v)];
        while let Some((a, b)) = stack.pop() {
            for gen in &lab.generators {
                let (x, y) = (gen[a], gen[b]);
                let (x, y) = if x < y { (x, y) } else { (y, x) };
                if !seen[x * n + y] {
                    seen[x * n + y] = true;
                    stack.push((x, y));
                }
            }
        }
    }
    reps
}

/// Every graph obtained from a parent by adding one non-edge, deduplicated.
fn add_one_edge(parents: &[Graph]) -> Vec<Graph> {
    let mut keyed: Vec<(Vec<u8>, Graph)> = parents
        .par_iter()
        .flat_map_iter(|p| {
            let lab = canonical_labeling(p);
            non_edge_orbit_representatives(p, &lab)
                .into_iter()
                .map(|(u, v)| {
                    let child = p.with_edge(u, v).expect("non-edge");
                    let form = canonical_labeling(&child).form;
                    (emit_graph6(&form).into_bytes(), form)
                })
                .collect::<Vec<_>>()
        })
        .collect();
    keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    keyed.into_iter().map(|(_, g)| g).collect()
}

pub fn gen_unicyclic(n: usize) -> Vec<Graph> {
    if n < 3 {
        return vec![];
    }
    add_one_edge(&gen_trees(n))
}

pub fn gen_bicyclic(n: usize) -> Vec<Graph> {
    if n < 4 {
        return vec![];
    }
    add_one_edge(&gen_unicyclic(n))
}

// ---------------------------------------------------------------------------
// Connected graphs by canonical augmentation

/// One vertex subset from each orbit of `Aut(p)` acting on non-empty subsets.
fn subset_orbit_representatives(n: usize, lab: &Labeling) -> Vec<u64> {
    let total = 1usize << n;
    if lab.generators.is_empty() {
        return (1..total as u64).collect();
    }
    let image = |gen: &[usize], mask: u64| bits(mask).fold(0u64, |a, v| a | 1 << gen[v]);
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    for s in 1..total as u64 {
        if seen[s as usize] {
            continue;
        }
        reps.push(s);
        seen[s as usize] = true;
        let mut stack = vec![s];
        while let Some(m) = stack.pop() {
            for gen in &lab.generators {
                let t = image(gen, m);
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    stack.push(t);
                }
            }
        }
    }
    reps
}

/// Cheap isomorphism invariant used to pick deletion candidates.
#[inline]
fn vertex_invariant(g: &Graph, v: usize) -> (u32, u32) {
    let nb = g.neighbors(v);
    let deg_sum: u32 = bits(nb).map(|u| g.degree(u) as u32).sum();
    (nb.count_ones(), deg_sum)
}

/// Is `child` (whose last vertex is the new one) the canonical extension of
/// its parent? If so, returns the canonical form.
fn accept_child(child: &Graph) -> Option<Graph> {
    let n = child.n();
    let new = n - 1;
    let cuts = child.cut_vertices();
    let candidates = full_mask(n) & !cuts;
    let best = bits(candidates).map(|v| vertex_invariant(child, v)).min()?;
    if vertex_invariant(child, new) != best {
        return None;
    }
    let ties: u64 = bits(candidates)
        .filter(|&v| vertex_invariant(child, v) == best)
        .fold(0, |a, v| a | 1 << v);
    let lab = canonical_labeling(child);
    if ties.count_ones() > 1 {
        let pos = lab.position();
        let chosen = bits(ties).min_by_key(|&v| pos[v]).expect("non-empty");
        if lab.orbits[chosen] != lab.orbits[new] {
            return None;
        }
    }
    Some(lab.form)
}

fn children_of(parent: &Graph) -> Vec<Graph> {
    let lab = canonical_labeling(parent);
    subset_orbit_representatives(parent.n(), &lab)
        .into_iter()
        .filter_map(|s| accept_child(&parent.with_vertex(s).expect("n < 64")))
        .collect()
}

/// Connected graphs on `n` vertices, sorted by canonical key.
pub fn gen_connected(n: usize, guards: &Guards) -> Result<Vec<Graph>> {
    guards.check(GraphClass::Connected, n)?;
    Ok(connected_unchecked(n))
}

fn connected_unchecked(n: usize) -> Vec<Graph> {
    match n {
        0 => vec![],
        1 => vec![Graph::empty(1).expect("one vertex")],
        _ => {
            let parents = cached(GraphClass::Connected, n - 1, || connected_unchecked(n - 1));
            let mut keyed: Vec<(Vec<u8>, Graph)> = parents
                .par_iter()
                .flat_map_iter(children_of)
                .map(|g| (emit_graph6(&g).into_bytes(), g))
                .collect();
            keyed.par_sort_unstable_by(|a, b| a.0.cmp(&b.0));
            keyed.into_iter().map(|(_, g)| g).collect()
        }
    }
}

/// Streams every connected graph on `n` vertices to `visit` without holding
/// the class in memory. Order follows the parents but is not sorted; graphs
/// are canonical forms. `visit` may be called from several threads.
pub fn for_each_connected<F>(n: usize, guards: &Guards, visit: F) -> Result<()>
where
    F: Fn(&Graph) + Sync + Send,
{
    guards.check(GraphClass::Connected, n)?;
    if n <= 1 {
        connected_unchecked(n).iter().for_each(&visit);
        return Ok(());
    }
    let parents = cached(GraphClass::Connected, n - 1, || connected_unchecked(n - 1));
    parents.par_iter().for_each(|p| {
        for child in children_of(p) {
            visit(&child);
        }
    });
    Ok(())
}

// ---------------------------------------------------------------------------
// Class dispatch, in-process memo and graph6 corpora

type Memo = Mutex<HashMap<(GraphClass, usize), Arc<Vec<Graph>>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(class: GraphClass, n: usize, build: impl FnOnce() -> Vec<Graph>) -> Arc<Vec<Graph>> {
    if let Some(v) = memo().lock().expect("memo lock").get(&(class, n)) {
        return Arc::clone(v);
    }
    let v = Arc::new(build());
    memo()
        .lock()
        .expect("memo lock")
        .entry((class, n))
        .or_insert_with(|| Arc::clone(&v));
    v
}

/// The whole class (unfiltered), memoized for the life of the process.
pub fn class_members(class: GraphClass, n: usize, guards: &Guards) -> Result<Arc<Vec<Graph>>> {
    guards.check(class, n)?;
    Ok(match class {
        GraphClass::Trees => cached(class, n, || gen_trees(n)),
        GraphClass::Unicyclic => cached(class, n, || gen_unicyclic(n)),
        GraphClass::Bicyclic => cached(class, n, || gen_bicyclic(n)),
        GraphClass::Connected => cached(class, n, || connected_unchecked(n)),
        GraphClass::Cyclic => cached(class, n, || {
            let all = cached(GraphClass::Connected, n, || connected_unchecked(n));
            all.iter().filter(|g| g.m() >= g.n()).cloned().collect()
        }),
    })
}

/// The filtered class, in canonical-key order.
pub fn enumerate(spec: &ClassSpec, guards: &Guards) -> Result<Vec<Graph>> {
    let all = class_members(spec.class, spec.n, guards)?;
    Ok(all.iter().filter(|g| spec.filter.accepts(g)).cloned().collect())
}

/// Like [`enumerate`], but reads `<class>_<n>.g6` from `dir` when present and
/// writes it after generating otherwise.
pub fn enumerate_cached(spec: &ClassSpec, guards: &Guards, dir: Option<&Path>) -> Result<Vec<Graph>> {
    let Some(dir) = dir else {
        return enumerate(spec, guards);
    };
    let all = match load_corpus(dir, spec.class, spec.n)? {
        Some(graphs) => graphs,
        None => {
            let graphs = class_members(spec.class, spec.n, guards)?;
            save_corpus(dir, spec.class, spec.n, &graphs)?;
            graphs.to_vec()
        }
    };
    Ok(all.into_iter().filter(|g| spec.filter.accepts(g)).collect())
}

pub fn corpus_path(dir: &Path, class: GraphClass, n: usize) -> PathBuf {
    dir.join(format!("{class}_{n}.g6"))
}

/// Writes one graph6 line per graph, atomically replacing any existing file.
pub fn save_corpus(dir: &Path, class: GraphClass, n: usize, graphs: &[Graph]) -> Result<PathBuf> {
    fs::create_dir_all(dir)?;
    let path = corpus_path(dir, class, n);
    write_graph6_file(&path, graphs)?;
    Ok(path)
}

pub fn write_graph6_file(path: &Path, graphs: &[Graph]) -> Result<()> {
    let mut text = String::with_capacity(graphs.len() * (path_hint(graphs) + 1));
    for g in graphs {
        text.push_str(&emit_graph6(g));
        text.push('\n');
    }
    let tmp = path.with_extension("g6.tmp");
    {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(text.as_bytes())?;
        f.sync_all()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

fn path_hint(graphs: &[Graph]) -> usize {
    graphs.first().map_or(0, |g| 1 + (g.n() * g.n()) / 12)
}

pub fn load_corpus(dir: &Path, class: GraphClass, n: usize) -> Result<Option<Vec<Graph>>> {
    let path = corpus_path(dir, class, n);
    match fs::read_to_string(&path) {
        Ok(text) => Ok(Some(parse_graph6_lines(&text)?)),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;
    use crate::families;

    const TREES: [usize; 12] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551];
    const UNICYCLIC: [usize; 8] = [1, 2, 5, 13, 33, 89, 240, 657];

    #[test]
    fn level_sequences_count_rooted_trees() {
        let counts: Vec<usize> = (1..=8).map(|n| rooted_level_sequences(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
        assert_eq!(root_branch_sizes(&[0, 1, 2, 1, 1, 2, 3]), vec![2, 1, 3]);
    }

    #[test]
    fn tree_counts() {
        for (i, &want) in TREES.iter().enumerate() {
            let trees = gen_trees(i + 1);
            assert_eq!(trees.len(), want, "n={}", i + 1);
            assert!(trees.iter().all(Graph::is_tree));
        }
        assert!(gen_trees(0).is_empty());
    }

    #[test]
    fn unicyclic_counts() {
        for (i, &want) in UNICYCLIC.iter().enumerate() {
            let n = i + 3;
            let gs = gen_unicyclic(n);
            assert_eq!(gs.len(), want, "n={n}");
            assert!(gs.iter().all(|g| g.is_connected() && g.cyclomatic_number() == 1));
        }
    }

    #[test]
    fn small_bicyclic_and_connected() {
        assert_eq!(gen_bicyclic(4).len(), 1);
        assert_eq!(gen_bicyclic(5).len(), 5);
        assert_eq!(gen_bicyclic(6).len(), 19);
        let g = Guards::default();
        let counts: Vec<usize> = (1..=7).map(|n| gen_connected(n, &g).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112, 853]);
        assert!(matches!(gen_connected(10, &g), Err(Error::Guard { .. })));
    }

    #[test]
    fn outputs_are_sorted_canonical_forms() {
        let gs = gen_connected(6, &Guards::default()).unwrap();
        let lines: Vec<String> = gs.iter().map(emit_graph6).collect();
        let mut sorted = lines.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(lines, sorted);
        for g in &gs {
            assert_eq!(canonical_key(g).as_str(), emit_graph6(g));
        }
    }

    #[test]
    fn filters() {
        let g = Guards::default();
        let c5 = ClassSpec::new(GraphClass::Connected, 5).with_filter(Filter {
            non_complete_block: Some(true),
            ..Filter::default()
        });
        assert_eq!(enumerate(&c5, &g).unwrap().len(), 12);
        let odd5 = ClassSpec::new(GraphClass::Connected, 5).with_filter(Filter {
            min_girth: Some(5),
            odd_cycle: Some(true),
            ..Filter::default()
        });
        let got = enumerate(&odd5, &g).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(canonical_key(&got[0]), canonical_key(&families::cycle(5).unwrap()));
        let bip4 = ClassSpec::new(GraphClass::Connected, 4).with_filter(Filter {
            bipartite: Some(true),
            has_cycle: Some(true),
            ..Filter::default()
        });
        let got = enumerate(&bip4, &g).unwrap();
        assert_eq!(got.len(), 1);
        assert_eq!(canonical_key(&got[0]), canonical_key(&families::cycle(4).unwrap()));
        let streamed: Vec<Graph> = filter(&c5, gen_connected(5, &g).unwrap()).collect();
        assert_eq!(streamed.len(), 12);
    }

    #[test]
    fn streaming_visitor_sees_every_class_once() {
        let seen = Mutex::new(Vec::new());
        for_each_connected(6, &Guards::default(), |g| seen.lock().unwrap().push(emit_graph6(g))).unwrap();
        let mut seen = seen.into_inner().unwrap();
        seen.sort();
        let want: Vec<String> = gen_connected(6, &Guards::default()).unwrap().iter().map(emit_graph6).collect();
        assert_eq!(seen, want);
    }

    #[test]
    fn corpus_round_trip_is_byte_stable() {
        let dir = tempfile::tempdir().unwrap();
        let spec = ClassSpec::new(GraphClass::Unicyclic, 7);
        let a = enumerate_cached(&spec, &Guards::default(), Some(dir.path())).unwrap();
        let path = corpus_path(dir.path(), GraphClass::Unicyclic, 7);
        let first = fs::read(&path).unwrap();
        let b = enumerate_cached(&spec, &Guards::default(), Some(dir.path())).unwrap();
        assert_eq!(a, b);
        save_corpus(dir.path(), GraphClass::Unicyclic, 7, &b).unwrap();
        assert_eq!(fs::read(&path).unwrap(), first);
        assert_eq!(first.iter().filter(|&&c| c == b'\n').count(), 33);
    }

    #[test]
    fn class_names_parse() {
        for c in GraphClass::ALL {
            assert_eq!(c.name().parse::<GraphClass>().unwrap(), c);
        }
        assert!("forest".parse::<GraphClass>().is_err());
    }
}
