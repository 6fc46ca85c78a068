//! Property suites for the supporting identities and inequalities.

use std::collections::BTreeSet;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::canon::{canonical_key, canonical_labeling, canonical_labeling_colored};
use crate::enumerate::{class_members, gen_trees, GraphClass, Guards};
use crate::error::Result;
use crate::families::{self, theorem_bounds, FamilyId, RootedTree};
use crate::graph::{coalesce, full_mask, DistanceMatrix, Graph};
use crate::graph6::emit_graph6;
use crate::invariants::{edge_split, wiener, wiener_tree_edge_form, Indices};
use crate::rational::Rational;

use super::{family_key, ratio_check, score_canonical, Extreme, TheoremResult};

/// Folds a list of `(graph6, detail)` violations into one check.
fn violations(res: &mut TheoremResult, name: &str, total: usize, bad: Vec<(String, String)>) {
    let count = bad.len();
    for (g6, detail) in bad {
        res.witness(name, g6, detail);
    }
    res.check(name, count == 0, format!("{count} violation(s) in {total} case(s)"));
}

fn w(g: &Graph) -> u64 {
    Indices::of(g).expect("connected").wiener
}

/// All suites, in a fixed order. `trials` sizes the randomized ones.
pub fn check_inequality_lemmas(seed: u64, trials: usize, guards: &Guards) -> Result<Vec<TheoremResult>> {
    Ok(vec![
        coalescence(seed, trials, guards)?,
        pendant(guards)?,
        transmission(guards)?,
        path_shift(seed, trials.div_ceil(2))?,
        even_girth(guards)?,
        odd_girth(guards)?,
        girth_three(guards)?,
        sandwich()?,
        cycle_versus_lollipop(seed, trials.div_ceil(5), guards)?,
        diameter(guards)?,
        identities()?,
    ])
}

fn coalescence(seed: u64, trials: usize, guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("coalescence", None);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pick = |rng: &mut ChaCha8Rng| -> Result<Graph> {
        let n = rng.random_range(1..=10usize);
        let class = if n >= 3 && rng.random_bool(0.5) { GraphClass::Unicyclic } else { GraphClass::Trees };
        let all = class_members(class, n, guards)?;
        Ok(all.choose(rng).expect("class is non-empty").clone())
    };
    let mut bad = Vec::new();
    for _ in 0..trials {
        let (g1, g2) = (pick(&mut rng)?, pick(&mut rng)?);
        let v1 = rng.random_range(0..g1.n());
        let v2 = rng.random_range(0..g2.n());
        let g = coalesce(&g1, v1, &g2, v2)?;
        let (d1, d2) = (DistanceMatrix::new(&g1)?, DistanceMatrix::new(&g2)?);
        let formula = wiener(&d1)
            + wiener(&d2)
            + (g2.n() as u64 - 1) * d1.transmission(v1)
            + (g1.n() as u64 - 1) * d2.transmission(v2);
        let direct = w(&g);
        if direct != formula {
            bad.push((emit_graph6(&g), format!("W = {direct}, formula {formula}")));
        }
    }
    violations(&mut res, "coalescence formula", trials, bad);
    Ok(res)
}

fn pendant(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("pendant", None);
    let mut graphs = Vec::new();
    for n in 2..=9 {
        graphs.extend(class_members(GraphClass::Trees, n, guards)?.iter().cloned());
        if n >= 3 {
            graphs.extend(class_members(GraphClass::Unicyclic, n, guards)?.iter().cloned());
        }
    }
    let results: Vec<(usize, Vec<(String, String)>)> = graphs
        .par_iter()
        .map(|g| {
            let n = g.n() as u64;
            let total = w(g);
            let mut cases = 0;
            let mut bad = Vec::new();
            for u in (0..g.n()).filter(|&u| g.degree(u) == 1) {
                cases += 1;
                let v = g.neighbors(u).trailing_zeros() as usize;
                let h = g.without_vertex(u).expect("in range");
                let v = if v > u { v - 1 } else { v };
                let dh = DistanceMatrix::new(&h).expect("still connected");
                let formula = wiener(&dh) + dh.transmission(v) + n - 1;
                if formula != total {
                    bad.push((emit_graph6(g), format!("pendant {u}: W = {total}, formula {formula}")));
                }
            }
            (cases, bad)
        })
        .collect();
    let cases = results.iter().map(|r| r.0).sum();
    let bad = results.into_iter().flat_map(|r| r.1).collect();
    violations(&mut res, "pendant corollary", cases, bad);
    Ok(res)
}

fn rooted_key(g: &Graph, v: usize) -> String {
    let root = 1u64 << v;
    canonical_labeling_colored(g, &[root, full_mask(g.n()) & !root]).key().to_string()
}

fn transmission(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("transmission", None);
    for n in 5..=8usize {
        let bound = ((n * n - n - 6) / 2) as u64;
        let graphs = class_members(GraphClass::Connected, n, guards)?;
        let found: Vec<(usize, Vec<String>, Vec<(String, String)>)> = graphs
            .par_iter()
            .filter_map(|g| {
                let dm = DistanceMatrix::new(g).expect("connected");
                if dm.diameter() as usize > n - 3 {
                    return None;
                }
                let mut eq = Vec::new();
                let mut bad = Vec::new();
                for v in 0..n {
                    let d = dm.transmission(v);
                    if d > bound {
                        bad.push((emit_graph6(g), format!("D({v}) = {d} > {bound}")));
                    } else if d == bound {
                        eq.push(rooted_key(g, v));
                    }
                }
                Some((n, eq, bad))
            })
            .collect();
        let cases = found.len() * n;
        let mut got = BTreeSet::new();
        let mut bad = Vec::new();
        for (_, eq, b) in found {
            got.extend(eq);
            bad.extend(b);
        }
        violations(&mut res, &format!("n={n} bound"), cases, bad);
        let mut want = BTreeSet::new();
        for i in 0..=3 {
            let g = families::a_nk(n, 4, i)?;
            want.insert(rooted_key(&g, families::a_nk_tip(n, 4)));
        }
        if got != want {
            for k in got.symmetric_difference(&want) {
                let side = if got.contains(k) { "attains the bound outside the family" } else { "family member misses the bound" };
                res.witness(&format!("n={n} equality"), k.clone(), side);
            }
        }
        res.check(
            &format!("n={n} equality"),
            got == want,
            format!("{} rooted graph(s) attain {bound}, expected the {} tips of A_(n,4)^i", got.len(), want.len()),
        );
    }
    Ok(res)
}

fn cycle_distance(r: usize, i: usize, j: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(r - d)
}

fn path_shift(seed: u64, trials: usize) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("path-shift", None);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9);
    let mut bad = Vec::new();
    let mut done = 0;
    while done < trials {
        let r = rng.random_range(3..=6usize);
        let n = rng.random_range(r + 2..=14usize);
        let mut extra = vec![0usize; r];
        for _ in 0..n - r {
            extra[rng.random_range(0..r)] += 1;
        }
        let loaded: Vec<usize> = (0..r).filter(|&i| extra[i] > 0).collect();
        if loaded.len() < 2 {
            continue;
        }
        done += 1;
        let k = *loaded.choose(&mut rng).expect("non-empty");
        let others: Vec<usize> = loaded.iter().copied().filter(|&i| i != k).collect();
        let t = *others.choose(&mut rng).expect("two loaded");
        let weight = |to: usize| -> usize {
            (0..r)
                .filter(|&i| i != k && i != t)
                .map(|i| (extra[i] + 1) * cycle_distance(r, i, to))
                .sum()
        };
        let (from, onto) = if weight(k) <= weight(t) { (k, t) } else { (t, k) };
        let mut moved = extra.clone();
        moved[onto] += moved[from];
        moved[from] = 0;
        let before = families::cr_paths(r, &extra)?;
        let after = families::cr_paths(r, &moved)?;
        let (wb, wa) = (w(&before), w(&after));
        if wa <= wb {
            bad.push((emit_graph6(&before), format!("{extra:?} -> {moved:?}: W {wb} -> {wa}")));
        }
    }
    violations(&mut res, "strict increase", trials, bad);
    Ok(res)
}

/// Max-W check over unicyclic graphs whose girth passes `keep`.
fn girth_max(
    res: &mut TheoremResult,
    n: usize,
    keep: impl Fn(usize) -> bool,
    bound: i64,
    expected: &[FamilyId],
    guards: &Guards,
) -> Result<()> {
    let graphs: Vec<Graph> = class_members(GraphClass::Unicyclic, n, guards)?
        .iter()
        .filter(|g| g.girth().is_some_and(&keep))
        .cloned()
        .collect();
    let scored = score_canonical(&graphs)?;
    let mut sub = TheoremResult::new(res.id.clone(), Some(n));
    ratio_check(&mut sub, "unicyclic", &scored, "W", Extreme::Max, Rational::integer(bound), expected, |i| {
        Rational::integer(i.wiener as i64)
    })?;
    for c in sub.checks {
        res.check(&format!("n={n} {}", c.name), c.passed, c.detail);
    }
    res.witnesses.extend(sub.witnesses);
    Ok(())
}

fn even_girth(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("even-girth", None);
    for n in 6..=11usize {
        let k = n as i64;
        let mut expected = vec![FamilyId::Lollipop { n, r: 6 }];
        if n == 8 {
            expected.push(FamilyId::Cycle(8));
        }
        girth_max(&mut res, n, |r| r >= 6 && r % 2 == 0, (k * k * k - 37 * k + 168) / 6, &expected, guards)?;
    }
    Ok(res)
}

fn odd_girth(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("odd-girth", None);
    for n in 5..=11usize {
        let k = n as i64;
        girth_max(
            &mut res,
            n,
            |r| r >= 5 && r % 2 == 1,
            (k * k * k - 25 * k + 90) / 6,
            &[FamilyId::Lollipop { n, r: 5 }],
            guards,
        )?;
    }
    Ok(res)
}

fn girth_three(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("girth-three", None);
    for n in 4..=7 {
        let graphs: Vec<Graph> = class_members(GraphClass::Connected, n, guards)?
            .iter()
            .filter(|g| g.girth() == Some(3) && !g.all_blocks_complete().unwrap_or(true))
            .cloned()
            .collect();
        let scored = score_canonical(&graphs)?;
        let min = scored.iter().map(|s| s.idx.sz_minus_w()).min();
        if min != Some(2) {
            for s in scored.iter().filter(|s| Some(s.idx.sz_minus_w()) == min) {
                res.witness(&format!("n={n} min Sz-W"), &s.g6, format!("Sz-W = {}", s.idx.sz_minus_w()));
            }
        }
        res.check(
            &format!("n={n} min Sz-W"),
            min == Some(2),
            format!("{} over {} graphs, expected 2", min.map_or("-".into(), |m| m.to_string()), scored.len()),
        );
    }
    Ok(res)
}

/// Rooted trees of order `k`, one per rooted isomorphism class.
fn rooted_trees(k: usize) -> Result<Vec<RootedTree>> {
    let mut out = Vec::new();
    for t in gen_trees(k) {
        let lab = canonical_labeling(&t);
        for v in (0..k).filter(|&v| lab.orbits[v] == v) {
            out.push(RootedTree::new(t.clone(), v)?);
        }
    }
    Ok(out)
}

fn sandwich() -> Result<TheoremResult> {
    let mut res = TheoremResult::new("sandwich", None);
    let rooted: Vec<Vec<RootedTree>> = (1..=7).map(rooted_trees).collect::<Result<_>>()?;
    let mut cases = 0;
    let mut bad = Vec::new();
    for r in [3usize, 4] {
        let mut shapes: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..r {
            shapes = shapes
                .into_iter()
                .flat_map(|s| (0..=6).map(move |e| [s.clone(), vec![e]].concat()))
                .filter(|s| s.iter().sum::<usize>() <= 6)
                .collect();
        }
        for extra in shapes {
            let low = families::cr_stars(r, &extra)?;
            let high = families::cr_paths(r, &extra)?;
            let (wl, wh) = (w(&low), w(&high));
            let (kl, kh) = (canonical_key(&low), canonical_key(&high));
            let mut choice: Vec<Vec<RootedTree>> = vec![vec![]];
            for &e in &extra {
                choice = choice
                    .into_iter()
                    .flat_map(|c| {
                        rooted[e].iter().map(move |t| {
                            let mut c = c.clone();
                            c.push(t.clone());
                            c
                        })
                    })
                    .collect();
            }
            for trees in choice {
                cases += 1;
                let g = families::cycle_with_rooted_trees(r, &trees)?;
                let (wg, kg) = (w(&g), canonical_key(&g));
                let ok = wl <= wg && wg <= wh && (wg == wl) == (kg == kl) && (wg == wh) == (kg == kh);
                if !ok {
                    bad.push((emit_graph6(&g), format!("stars {wl} <= {wg} <= paths {wh} fails for {extra:?}")));
                }
            }
        }
    }
    violations(&mut res, "stars <= trees <= paths", cases, bad);
    Ok(res)
}

fn cycle_versus_lollipop(seed: u64, trials: usize, guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("cycle-vs-lollipop", None);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51ed_270b);
    let mut bad = Vec::new();
    let mut cases = 0;
    for _ in 0..trials {
        let h_order = rng.random_range(2..=6usize);
        let all = class_members(GraphClass::Connected, h_order, guards)?;
        let h = all.choose(&mut rng).expect("non-empty").clone();
        let v = rng.random_range(0..h_order);
        for k in 3..=8usize {
            cases += 1;
            let c = families::cycle(k)?;
            let l = families::lollipop(k, 3)?;
            let low = (0..k).min_by_key(|&x| l.degree(x)).expect("k >= 3");
            let (w1, w2) = (w(&coalesce(&h, v, &c, 0)?), w(&coalesce(&h, v, &l, low)?));
            if !(w1 <= w2 && (w1 == w2) == (k == 3)) {
                bad.push((emit_graph6(&h), format!("vertex {v}, k={k}: {w1} vs {w2}")));
            }
        }
    }
    violations(&mut res, "W(cycle) <= W(lollipop)", cases, bad);
    Ok(res)
}

fn diameter(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("diameter", None);
    for n in 6..=10usize {
        let graphs: Vec<Graph> = class_members(GraphClass::Bicyclic, n, guards)?
            .iter()
            .filter(|g| DistanceMatrix::new(g).is_ok_and(|d| d.diameter() as usize == n - 2))
            .cloned()
            .collect();
        let got: BTreeSet<String> = graphs.iter().map(emit_graph6).collect();
        let want: BTreeSet<String> =
            (0..=(n - 4) / 2).map(|s| family_key(&FamilyId::Bns { n, s })).collect::<Result<_>>()?;
        for g in got.symmetric_difference(&want) {
            res.witness(&format!("n={n} shapes"), g.clone(), "diameter n-2 class differs from B(n,s)");
        }
        res.check(
            &format!("n={n} shapes"),
            got == want,
            format!("{} graph(s) of diameter n-2, expected {}", got.len(), want.len()),
        );
        let k = n as i64;
        let bound = Rational::ONE + Rational::new(12 * (k - 3), k * k * k - 13 * k + 30);
        let scored = score_canonical(&graphs)?;
        let mut sub = TheoremResult::new("diameter", Some(n));
        ratio_check(&mut sub, "bicyclic", &scored, "Sz/W", Extreme::Min, bound, &[FamilyId::Bns { n, s: 0 }], |i| {
            i.sz_over_w().expect("n >= 6")
        })?;
        for c in sub.checks {
            res.check(&format!("n={n} {}", c.name), c.passed, c.detail);
        }
        res.witnesses.extend(sub.witnesses);
    }
    Ok(res)
}

fn identities() -> Result<TheoremResult> {
    let mut res = TheoremResult::new("identities", None);
    let mut bad = Vec::new();
    for n in 5..=20usize {
        let k = n as i64;
        let lhs = theorem_bounds(n)?.thm2_3 - Rational::ONE;
        let rhs = Rational::new(6 * 2, k * k * k - 19 * k + 54);
        if lhs != rhs {
            bad.push((String::new(), format!("n={n}: {lhs} != {rhs}")));
        }
    }
    let count = bad.len();
    res.check("ratio floor is six times the difference floor", count == 0, format!("n=5..20, {count} mismatch(es)"));
    let mut bad = Vec::new();
    for n in 10..=50usize {
        let b = theorem_bounds(n)?;
        if b.thm2_4 - Rational::ONE >= b.thm1_4_nonbipartite - Rational::ONE {
            bad.push(format!("n={n}: {} >= {}", b.thm2_4, b.thm1_4_nonbipartite));
        }
    }
    res.check(
        "cyclic Sz*/W floor without L_(n,4) below the non-bipartite floor",
        bad.is_empty(),
        if bad.is_empty() { "n=10..50".into() } else { bad.join("; ") },
    );
    Ok(res)
}

/// Structural facts over every connected graph on at most eight vertices.
pub fn check_structure(guards: &Guards) -> Result<TheoremResult> {
    let mut res = TheoremResult::new("structure", None);
    let mut graphs = Vec::new();
    for n in 2..=8 {
        graphs.extend(class_members(GraphClass::Connected, n, guards)?.iter().cloned());
    }
    type Found = Vec<(&'static str, String, String)>;
    let found: Found = graphs
        .par_iter()
        .flat_map_iter(|g| {
            let dm = DistanceMatrix::new(g).expect("connected");
            let idx = Indices::from_parts(g, &dm);
            let g6 = || emit_graph6(g);
            let mut bad: Found = Vec::new();
            let complete = g.all_blocks_complete().expect("connected");
            if idx.szeged < idx.wiener || (idx.szeged == idx.wiener) != complete {
                bad.push(("Sz >= W, equal iff blocks complete", g6(), format!("Sz={} W={} complete={complete}", idx.szeged, idx.wiener)));
            }
            let bip = g.is_bipartite();
            if idx.revised_szeged_x4 < 4 * idx.szeged || (idx.revised_szeged_x4 == 4 * idx.szeged) != bip {
                bad.push(("Sz* >= Sz, equal iff bipartite", g6(), format!("4Sz*={} Sz={} bipartite={bip}", idx.revised_szeged_x4, idx.szeged)));
            }
            let n = g.n();
            let triangle = (0..n).all(|u| (0..n).all(|v| (0..n).all(|x| dm.get(u, v) <= dm.get(u, x) + dm.get(x, v))));
            if !triangle {
                bad.push(("triangle inequality", g6(), String::new()));
            }
            let half: u64 = (0..n).map(|v| dm.transmission(v)).sum();
            if half != 2 * idx.wiener {
                bad.push(("W is half the transmission sum", g6(), format!("{half} vs 2*{}", idx.wiener)));
            }
            if bip && g.edges().any(|(u, v)| edge_split(&dm, u, v).expect("edge").n_0 != 0) {
                bad.push(("no equidistant vertices in bipartite graphs", g6(), String::new()));
            }
            bad
        })
        .collect();
    for name in [
        "Sz >= W, equal iff blocks complete",
        "Sz* >= Sz, equal iff bipartite",
        "triangle inequality",
        "W is half the transmission sum",
        "no equidistant vertices in bipartite graphs",
    ] {
        let bad: Vec<(String, String)> = found.iter().filter(|f| f.0 == name).map(|f| (f.1.clone(), f.2.clone())).collect();
        violations(&mut res, name, graphs.len(), bad);
    }
    let mut trees = Vec::new();
    for n in 1..=12 {
        trees.extend(class_members(GraphClass::Trees, n, guards)?.iter().cloned());
    }
    let bad: Vec<(String, String)> = trees
        .par_iter()
        .filter_map(|t| {
            let (a, b) = (wiener_tree_edge_form(t).expect("tree"), w(t));
            (a != b).then(|| (emit_graph6(t), format!("edge form {a}, distance sum {b}")))
        })
        .collect();
    violations(&mut res, "tree edge form equals W", trees.len(), bad);
    Ok(res)
}

/// Closed forms against direct computation.
pub fn check_closed_forms() -> Result<TheoremResult> {
    let mut res = TheoremResult::new("closed-forms", None);
    let mut cases = 0;
    let mut bad = Vec::new();
    let mut cmp = |g: Graph, direct: u64, formula: u64, what: String| {
        cases += 1;
        if direct != formula {
            bad.push((emit_graph6(&g), format!("{what}: {direct} vs closed form {formula}")));
        }
    };
    for n in 5..=20usize {
        for r in (4..n).step_by(2) {
            let g = families::lollipop(n, r)?;
            let d = w(&g);
            cmp(g, d, families::closed_form_w_lollipop_even(n, r)?, format!("W(L_({n},{r}))"));
        }
    }
    for n in 4..=20usize {
        for s in 0..=(n - 4) / 2 {
            let g = families::b_ns(n, s)?;
            let idx = Indices::of(&g)?;
            cmp(g.clone(), idx.wiener, families::closed_form_w_bns(n, s)?, format!("W(B({n},{s}))"));
            cmp(g, idx.szeged, families::closed_form_sz_bns(n, s)?, format!("Sz(B({n},{s}))"));
        }
    }
    for n in 5..=20usize {
        let g = families::b1(n)?;
        let d = w(&g);
        cmp(g, d, families::closed_form_w_b1(n)?, format!("W(B1_{n})"));
    }
    for n in 8..=20usize {
        for k in [2, 3] {
            let g = families::h_graph(n, k)?;
            let d = w(&g);
            cmp(g, d, families::closed_form_w_b1(n)?, format!("W(H_{n}^{k})"));
        }
    }
    for n in 1..=20usize {
        let g = families::path(n)?;
        let d = w(&g);
        cmp(g, d, families::closed_form_w_path(n), format!("W(P_{n})"));
    }
    violations(&mut res, "closed forms", cases, bad);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_forms_match() {
        assert!(check_closed_forms().unwrap().passed);
    }

    #[test]
    fn small_random_suites_pass() {
        let g = Guards::default();
        assert!(coalescence(7, 50, &g).unwrap().passed);
        assert!(path_shift(7, 50).unwrap().passed);
        assert!(cycle_versus_lollipop(7, 5, &g).unwrap().passed);
    }

    #[test]
    fn rooted_tree_counts() {
        let counts: Vec<usize> = (1..=7).map(|k| rooted_trees(k).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 48]);
    }

    #[test]
    fn even_girth_double_attainer_at_eight() {
        let mut res = TheoremResult::new("even-girth", None);
        let expected = [FamilyId::Lollipop { n: 8, r: 6 }, FamilyId::Cycle(8)];
        girth_max(&mut res, 8, |r| r >= 6 && r % 2 == 0, 64, &expected, &Guards::default()).unwrap();
        assert!(res.passed, "{:#?}", res.checks);
    }
}
