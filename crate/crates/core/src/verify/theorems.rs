//! Rankings and extremes over whole classes.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

use crate::canon::canonical_key;
use crate::enumerate::{class_members, for_each_connected, GraphClass};
use crate::error::{invalid, Result};
use crate::families::{self, theorem_bounds, FamilyId};
use crate::graph::{bits, Graph};
use crate::invariants::Indices;
use crate::rational::Rational;

use super::{
    family_key, rank_by_wiener, ranked_parts, ratio_check, score_canonical, tier_check, Extreme,
    RatioReport, Scored, TheoremResult, VerifyOptions,
};

fn require(id: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(invalid(format!("{id} needs n >= {min}, got {n}")));
    }
    Ok(())
}

fn members(class: GraphClass, n: usize, opts: &VerifyOptions) -> Result<Vec<Graph>> {
    Ok(class_members(class, n, &opts.guards)?.to_vec())
}

/// Connected graphs with a cycle. Beyond the connected-graph guard this
/// falls back to unicyclic and bicyclic graphs, and says so in the label.
fn cyclic_class(n: usize, opts: &VerifyOptions) -> Result<(String, Vec<Graph>)> {
    if n <= opts.guards.limit(GraphClass::Connected) {
        return Ok(("cyclic".into(), members(GraphClass::Cyclic, n, opts)?));
    }
    let mut all = members(GraphClass::Unicyclic, n, opts)?;
    all.extend(members(GraphClass::Bicyclic, n, opts)?);
    Ok(("cyclic (unicyclic and bicyclic only)".into(), all))
}

/// Vertices on cycles: what is left after repeatedly stripping leaves.
fn core_vertices(g: &Graph) -> u64 {
    let mut alive = crate::graph::full_mask(g.n());
    loop {
        let leaves: u64 = bits(alive)
            .filter(|&v| (g.neighbors(v) & alive).count_ones() <= 1)
            .fold(0, |m, v| m | (1 << v));
        if leaves == 0 {
            return alive;
        }
        alive &= !leaves;
    }
}

/// Cycle vertices of a unicyclic graph that carry a tree.
fn branching_cycle_vertices(g: &Graph) -> Vec<usize> {
    let core = core_vertices(g);
    bits(core).filter(|&v| g.degree(v) > 2).collect()
}

pub fn check_thm_2_1(n: usize, opts: &VerifyOptions) -> Result<TheoremResult> {
    require("thm2.1", n, 10)?;
    let mut res = TheoremResult::new("thm2.1", Some(n));
    let graphs = members(GraphClass::Unicyclic, n, opts)?;
    let scored = score_canonical(&graphs)?;
    let (rank, groups) = rank_by_wiener("unicyclic", &scored, opts.top.max(7));
    res.class = Some(format!("unicyclic n={n}"));

    let cr3 = |extra: [usize; 3]| FamilyId::CrPaths { r: 3, orders: extra.iter().map(|e| e + 1).collect() };
    let h = |k| FamilyId::H { n, k };
    let mut tier6 = vec![h(1)];
    let mut tier7 = vec![h(2), h(3)];
    match n {
        10 => tier6.push(cr3([4, 3, 0])),
        11 => tier7.push(cr3([5, 3, 0])),
        _ => {}
    }
    let expected = vec![
        vec![FamilyId::Lollipop { n, r: 3 }],
        vec![cr3([n - 4, 1, 0]), FamilyId::Lollipop { n, r: 4 }],
        vec![h(0)],
        vec![cr3([n - 5, 2, 0])],
        vec![FamilyId::CrPaths { r: 4, orders: vec![n - 4, 1, 2, 1] }],
        tier6,
        tier7,
    ];
    tier_check(&mut res, &scored, &groups, 0, &expected)?;

    let formula = families::closed_form_w_b1(n)?;
    let w7 = groups.get(6).map(|g| scored[g[0]].idx.wiener);
    res.check(
        "seventh tier value",
        w7 == Some(formula),
        format!("W={} vs (n^3-19n+54)/6 = {formula}", w7.map_or("-".into(), |w| w.to_string())),
    );
    let w4 = Indices::of(&families::lollipop(n, 4)?)?.wiener;
    let cf = families::closed_form_w_lollipop_even(n, 4)?;
    res.check("lollipop closed form", w4 == cf, format!("W(L_(n,4)) = {w4}, closed form {cf}"));
    res.bound = Some(Rational::integer(formula as i64));
    res.attainers = groups.get(6).map(|g| g.iter().map(|&i| scored[i].g6.clone()).collect()).unwrap_or_default();
    res.ranking = Some(rank);
    Ok(res)
}

pub fn check_thm_2_2(n: usize, opts: &VerifyOptions) -> Result<TheoremResult> {
    require("thm2.2", n, 6)?;
    let mut res = TheoremResult::new("thm2.2", Some(n));
    let graphs = members(GraphClass::Bicyclic, n, opts)?;
    let scored = score_canonical(&graphs)?;
    let (rank, groups) = rank_by_wiener("bicyclic", &scored, opts.top.max(4));
    res.class = Some(format!("bicyclic n={n}"));

    let b = |s| FamilyId::Bns { n, s };
    let dumbbell = FamilyId::Dumbbell { n, p: 3, q: 3 };
    let expected = match n {
        6 => vec![vec![b(0)], vec![b(1), dumbbell], vec![FamilyId::B1(n)]],
        8 => vec![vec![b(0)], vec![dumbbell], vec![b(1)], vec![b(2), FamilyId::B1(n)]],
        _ => vec![vec![b(0)], vec![dumbbell], vec![b(1)], vec![FamilyId::B1(n)]],
    };
    tier_check(&mut res, &scored, &groups, 0, &expected)?;

    for s in 0..=(n - 4) / 2 {
        let w = Indices::of(&families::b_ns(n, s)?)?.wiener;
        let cf = families::closed_form_w_bns(n, s)?;
        res.check(&format!("W(B({n},{s})) closed form"), w == cf, format!("{w} vs {cf}"));
    }
    let w1 = Indices::of(&families::b1(n)?)?.wiener;
    let cf1 = families::closed_form_w_b1(n)?;
    res.check("W(B1) closed form", w1 == cf1, format!("{w1} vs {cf1}"));

    if n == 6 {
        let tops: Vec<u64> = groups.iter().take(3).map(|g| scored[g[0]].idx.wiener).collect();
        res.check("top values", tops == [28, 27, 26], format!("{tops:?}, expected [28, 27, 26]"));
        let mut residual: BTreeMap<u64, usize> = BTreeMap::new();
        for g in groups.iter().skip(3) {
            *residual.entry(scored[g[0]].idx.wiener).or_default() += g.len();
        }
        let want = BTreeMap::from([(25, 8), (24, 4), (23, 3)]);
        res.check(
            "residual multiset",
            residual == want,
            format!("{residual:?}, expected {want:?}"),
        );
        res.check("class size", scored.len() == 19, format!("{} graphs, expected 19", scored.len()));
    }
    res.attainers = groups.first().map(|g| g.iter().map(|&i| scored[i].g6.clone()).collect()).unwrap_or_default();
    res.ranking = Some(rank);
    Ok(res)
}

/// The twelve `Sz/W` values of the five-vertex graphs with a non-complete block.
fn ratios_n5() -> Vec<Rational> {
    let mut v: Vec<Rational> = [
        (8, 7), (4, 3), (7, 4), (19, 15), (18, 7), (12, 7), (18, 13), (29, 13), (19, 13), (4, 3), (2, 1), (15, 11),
    ]
    .iter()
    .map(|&(a, b)| Rational::new(a, b))
    .collect();
    v.sort();
    v
}

pub fn check_thm_2_3(n: usize, opts: &VerifyOptions) -> Result<TheoremResult> {
    require("thm2.3", n, 5)?;
    let mut res = TheoremResult::new("thm2.3", Some(n));
    let graphs: Vec<Graph> = members(GraphClass::Connected, n, opts)?
        .into_iter()
        .filter(|g| !g.all_blocks_complete().unwrap_or(true))
        .collect();
    let scored = score_canonical(&graphs)?;
    let class = format!("connected n={n} with a non-complete block");
    let bound = theorem_bounds(n)?.thm2_3;
    res.bound = Some(bound);
    res.class = Some(class.clone());
    let sz_w = |i: &Indices| i.sz_over_w().expect("n >= 5");
    ratio_check(&mut res, &class, &scored, "Sz/W", Extreme::Min, bound, &[FamilyId::B1(n)], sz_w)?;
    if n == 5 {
        let mut got: Vec<Rational> = scored.iter().map(|s| sz_w(&s.idx)).collect();
        got.sort();
        let want = ratios_n5();
        res.check(
            "ratio multiset",
            got == want,
            format!("{} values {}", got.len(), if got == want { "match" } else { "differ" }),
        );
    }
    Ok(res)
}

pub fn check_thm_2_4(n: usize, opts: &VerifyOptions) -> Result<TheoremResult> {
    require("thm2.4", n, 10)?;
    let mut res = TheoremResult::new("thm2.4", Some(n));
    let bounds = theorem_bounds(n)?;
    let bound = bounds.thm2_4;
    res.bound = Some(bound);
    let l4 = families::lollipop(n, 4)?;
    let l4_key = canonical_key(&l4);
    let ratio = |i: &Indices| i.szstar_over_w().expect("n >= 10");

    if opts.full {
        res.stretch = true;
        let class = format!("cyclic n={n} without L_(n,4)");
        res.class = Some(class.clone());
        let best: Mutex<Option<(Rational, BTreeMap<String, u64>)>> = Mutex::new(None);
        for_each_connected(n, &opts.guards, |g| {
            if g.m() < g.n() {
                return;
            }
            let idx = Indices::of(g).expect("connected");
            let r = ratio(&idx);
            let mut best = best.lock().expect("reduction lock");
            if best.as_ref().is_some_and(|(v, _)| r > *v) {
                return;
            }
            let key = canonical_key(g);
            if key == l4_key {
                return;
            }
            match best.as_mut() {
                Some((v, set)) if *v == r => {
                    set.insert(key.to_string(), idx.wiener);
                }
                _ => *best = Some((r, BTreeMap::from([(key.to_string(), idx.wiener)]))),
            }
        })?;
        let (value, set) = best.into_inner().expect("reduction lock").ok_or_else(|| invalid("empty class"))?;
        let want = family_key(&FamilyId::H { n, k: 2 })?;
        let got: BTreeSet<String> = set.keys().cloned().collect();
        let value_ok = value == bound;
        let set_ok = got == BTreeSet::from([want]);
        if !(value_ok && set_ok) {
            for g in &got {
                res.witness("min Sz*/W", g, format!("Sz*/W = {value}, bound {bound}"));
            }
        }
        res.check("min Sz*/W", value_ok, format!("{value}, bound {bound}"));
        res.check("min Sz*/W attainers", set_ok, format!("{} attainer(s), expected h:{n}:2", got.len()));
        let attainers = set
            .iter()
            .map(|(g6, &w)| ranked_parts(&crate::graph6::parse_graph6(g6).expect("own output"), w))
            .collect();
        res.attainers = got.into_iter().collect();
        res.ratio = Some(RatioReport {
            class,
            class_size: 0,
            quantity: "Sz*/W".into(),
            extreme: Extreme::Min,
            value,
            attainers,
            bound,
            matches: value_ok && set_ok,
        });
    } else {
        let mut graphs = members(GraphClass::Unicyclic, n, opts)?;
        graphs.extend(members(GraphClass::Bicyclic, n, opts)?);
        let l4_g6 = l4_key.to_string();
        let scored: Vec<Scored> = score_canonical(&graphs)?.into_iter().filter(|s| s.g6 != l4_g6).collect();
        let class = format!("unicyclic and bicyclic n={n} without L_(n,4)");
        res.class = Some(class.clone());
        res.check(
            "L_(n,4) excluded",
            scored.len() + 1 == graphs.len(),
            format!("{} of {} graphs kept", scored.len(), graphs.len()),
        );
        ratio_check(&mut res, &class, &scored, "Sz*/W", Extreme::Min, bound, &[FamilyId::H { n, k: 2 }], ratio)?;
    }

    let l4_ratio = ratio(&Indices::of(&l4)?);
    res.check(
        "L_(n,4) below the bound",
        l4_ratio == bounds.thm1_4_bipartite && l4_ratio < bound,
        format!("Sz*/W(L_(n,4)) = {l4_ratio}, bipartite floor {}", bounds.thm1_4_bipartite),
    );
    let c4 = families::cr_paths(4, &[n - 5, 0, 1, 0])?;
    let c4_ratio = ratio(&Indices::of(&c4)?);
    let k = n as i64;
    let c4_formula = Rational::ONE + Rational::new(36 * (k - 3), k * k * k - 19 * k + 66);
    res.check(
        "C_4(P_(n-4),P_1,P_2,P_1) above the bound",
        c4_ratio == c4_formula && c4_ratio > bound,
        format!("{c4_ratio} vs 1+36(n-3)/(n^3-19n+66) = {c4_formula}"),
    );
    Ok(res)
}

/// Checks one of the seven earlier extremal results; `x` selects which.
pub fn check_thm_1(x: u8, n: usize, opts: &VerifyOptions) -> Result<TheoremResult> {
    let id = format!("thm1.{x}");
    let min_n = match x {
        1 | 3..=6 => 4,
        2 | 7 => 5,
        _ => return Err(invalid(format!("no check {id}"))),
    };
    require(&id, n, min_n)?;
    let mut res = TheoremResult::new(id.clone(), Some(n));
    let b = theorem_bounds(n)?;
    let lollipop = |r| FamilyId::Lollipop { n, r };
    match x {
        1..=3 => {
            let (label, cyclic) = cyclic_class(n, opts)?;
            let (class, keep, bound): (String, fn(&Graph) -> bool, Rational) = match x {
                1 => (format!("{label} bipartite n={n}"), |g| g.is_bipartite(), b.thm1_1),
                2 => (
                    format!("{label} n={n} with an odd cycle and girth >= 5"),
                    |g| !g.is_bipartite() && g.girth().is_some_and(|r| r >= 5),
                    b.thm1_2,
                ),
                _ => (format!("{label} non-bipartite n={n}"), |g| !g.is_bipartite(), b.thm1_3),
            };
            let graphs: Vec<Graph> = cyclic.into_iter().filter(keep).collect();
            let scored = score_canonical(&graphs)?;
            res.class = Some(class.clone());
            res.bound = Some(bound);
            let value = |i: &Indices| match x {
                3 => i.szstar_minus_w(),
                _ => Rational::integer(i.sz_minus_w()),
            };
            let shape = |g: &Graph| -> bool {
                if g.m() != g.n() {
                    return false;
                }
                let br = branching_cycle_vertices(g);
                match x {
                    1 => g.girth() == Some(4) && br.len() <= 1,
                    2 => g.girth() == Some(5) && (br.len() <= 1 || (br.len() == 2 && g.has_edge(br[0], br[1]))),
                    _ => g.girth() == Some(3) && br.len() <= 1,
                }
            };
            let quantity = if x == 3 { "Sz*-W" } else { "Sz-W" };
            let Some((min, at)) = super::extreme_of(&scored, Extreme::Min, value) else {
                res.check("class", false, format!("{class} is empty"));
                return Ok(res);
            };
            if min != bound {
                for &i in &at {
                    res.witness(&format!("min {quantity}"), &scored[i].g6, format!("{quantity} = {min}"));
                }
            }
            res.check(&format!("min {quantity}"), min == bound, format!("{min} over {} graphs, bound {bound}", scored.len()));
            let got: BTreeSet<&str> = at.iter().map(|&i| scored[i].g6.as_str()).collect();
            let want: BTreeSet<&str> = scored.iter().filter(|s| shape(&s.graph)).map(|s| s.g6.as_str()).collect();
            for g in got.symmetric_difference(&want) {
                let side = if got.contains(g) { "attains the bound without the stated shape" } else { "has the stated shape but misses the bound" };
                res.witness("attainer shape", *g, side);
            }
            res.check(
                "attainer shape",
                got == want,
                format!("{} attainer(s), {} graph(s) of the stated shape", got.len(), want.len()),
            );
            res.attainers = got.into_iter().map(String::from).collect();
        }
        4 | 7 => {
            let (label, cyclic) = cyclic_class(n, opts)?;
            let cyclic: Vec<Graph> = if x == 7 {
                cyclic.into_iter().filter(|g| g.girth().is_some_and(|r| r >= 4)).collect()
            } else {
                cyclic
            };
            let girth = if x == 7 { " girth >= 4" } else { "" };
            let (bip, odd): (Vec<Graph>, Vec<Graph>) = cyclic.into_iter().partition(|g| g.is_bipartite());
            let parts = [
                (format!("{label} bipartite{girth} n={n}"), bip, lollipop(4), if x == 4 { b.thm1_4_bipartite } else { b.thm1_7_bipartite }),
                (
                    format!("{label} non-bipartite{girth} n={n}"),
                    odd,
                    lollipop(if x == 4 { 3 } else { 5 }),
                    if x == 4 { b.thm1_4_nonbipartite } else { b.thm1_7_nonbipartite },
                ),
            ];
            let quantity = if x == 4 { "Sz*/W" } else { "Sz/W" };
            let mut ratios = Vec::new();
            for (part, (class, graphs, attainer, bound)) in parts.into_iter().enumerate() {
                let scored = score_canonical(&graphs)?;
                let mut sub = TheoremResult::new(id.clone(), Some(n));
                let f = |i: &Indices| if x == 4 { i.szstar_over_w() } else { i.sz_over_w() }.expect("n >= 4");
                ratio_check(&mut sub, &class, &scored, quantity, Extreme::Min, bound, &[attainer], f)?;
                let tag = if part == 0 { "(i)" } else { "(ii)" };
                for mut c in sub.checks {
                    c.name = format!("{tag} {}", c.name);
                    res.check(&c.name, c.passed, c.detail);
                }
                for mut w in sub.witnesses {
                    w.check = format!("{tag} {}", w.check);
                    res.witnesses.insert(0, w);
                }
                res.attainers.extend(sub.attainers);
                ratios.extend(sub.ratio);
                if part == 0 {
                    res.bound = Some(bound);
                    res.class = Some(class);
                }
            }
            res.ratio = ratios.into_iter().next();
        }
        _ => {
            let graphs = members(GraphClass::Unicyclic, n, opts)?;
            let scored = score_canonical(&graphs)?;
            let class = format!("unicyclic n={n}");
            res.class = Some(class.clone());
            let (bound, attainer, quantity) = if x == 5 {
                let a = if n % 2 == 1 { lollipop(n - 1) } else { FamilyId::Cycle(n) };
                (b.thm1_5, a, "Sz/W")
            } else {
                (b.thm1_6, FamilyId::Cycle(n), "Sz*/W")
            };
            res.bound = Some(bound);
            let f = |i: &Indices| if x == 5 { i.sz_over_w() } else { i.szstar_over_w() }.expect("n >= 4");
            ratio_check(&mut res, &class, &scored, quantity, Extreme::Max, bound, &[attainer], f)?;
        }
    }
    Ok(res)
}

/// Top of the Wiener ranking of trees. The unnamed tree between the named
/// ones is reported by key.
pub fn check_tree_orderings(n: usize, opts: &VerifyOptions) -> Result<TheoremResult> {
    require("trees", n, 5)?;
    let mut res = TheoremResult::new("trees", Some(n));
    let graphs = members(GraphClass::Trees, n, opts)?;
    let scored = score_canonical(&graphs)?;
    let (rank, groups) = rank_by_wiener("trees", &scored, opts.top.max(5));
    res.class = Some(format!("trees n={n}"));
    let spider = |legs: Vec<usize>| FamilyId::Spider { n, legs };
    let mut expected = vec![vec![FamilyId::Path(n)], vec![spider(vec![n - 3, 1, 1])]];
    let mut unnamed_at = None;
    if n == 8 {
        expected.push(vec![spider(vec![4, 2, 1])]);
        expected.push(vec![spider(vec![3, 3, 1])]);
        unnamed_at = Some(4);
    } else if n >= 9 {
        expected.push(vec![spider(vec![n - 4, 2, 1])]);
        unnamed_at = Some(3);
    }
    tier_check(&mut res, &scored, &groups, 0, &expected)?;
    if n == 8 {
        let w = groups.get(3).map(|g| scored[g[0]].idx.wiener);
        res.check("W(T_8(3,3,1))", w == Some(75), format!("{w:?}, expected 75"));
    }
    if let Some(t) = unnamed_at {
        let tier = groups.get(t);
        let single = tier.is_some_and(|g| g.len() == 1);
        res.check(
            "single unnamed tree",
            single,
            format!("tier {} has {} member(s)", t + 1, tier.map_or(0, |g| g.len())),
        );
        if let Some(g) = tier.filter(|_| single) {
            let key = scored[g[0]].g6.clone();
            res.check("unnamed tree", true, format!("{key} with W={}", scored[g[0]].idx.wiener));
            res.attainers.push(key);
        }
        if n >= 9 {
            tier_check(&mut res, &scored, &groups, 4, &[vec![spider(vec![n - 5, 3, 1])]])?;
        }
    }
    res.ranking = Some(rank);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_vertices_and_branching() {
        let l = families::lollipop(9, 5).unwrap();
        assert_eq!(core_vertices(&l), 0b11111);
        assert_eq!(branching_cycle_vertices(&l), vec![0]);
        let c = families::cr_paths(5, &[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(branching_cycle_vertices(&c), vec![0, 1]);
        assert_eq!(core_vertices(&families::path(5).unwrap()), 0);
    }

    #[test]
    fn bicyclic_top_four_at_seven() {
        let r = check_thm_2_2(7, &VerifyOptions::default()).unwrap();
        assert!(r.passed);
        let names: Vec<_> = r.ranking.unwrap().tiers[..4]
            .iter()
            .map(|t| t.members[0].family.clone().unwrap())
            .collect();
        assert_eq!(names, ["bns:7:0", "dumbbell:7:3:3", "bns:7:1", "b1:7"]);
    }

    #[test]
    fn difference_floors_hold() {
        let opts = VerifyOptions::default();
        for x in 1..=3 {
            let r = check_thm_1(x, 6, &opts).unwrap();
            assert!(r.passed, "thm1.{x}: {:#?}", r.checks);
        }
        assert_eq!(check_thm_1(1, 6, &opts).unwrap().bound, Some(Rational::integer(16)));
    }

    #[test]
    fn odd_order_unicyclic_maximum() {
        let r = check_thm_1(5, 7, &VerifyOptions::default()).unwrap();
        assert!(r.passed);
        let ratio = r.ratio.unwrap();
        assert_eq!(ratio.value, Rational::integer(2) - Rational::new(8, 56));
        assert_eq!(ratio.attainers[0].family.as_deref(), Some("lollipop:7:6"));
    }

    #[test]
    fn extra_graph_ties_the_sixth_tier() {
        let r = check_thm_2_1(10, &VerifyOptions::default()).unwrap();
        assert!(!r.passed);
        let failed: Vec<&str> = r.checks.iter().filter(|c| !c.passed).map(|c| c.name.as_str()).collect();
        assert_eq!(failed, ["tier 6"]);
        let extra = families::a_nk(10, 4, 1).unwrap();
        let key = canonical_key(&extra).to_string();
        assert!(r.witnesses.iter().any(|w| w.graph6.as_deref() == Some(key.as_str())));
    }
}
