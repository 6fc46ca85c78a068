//! Per-theorem checkers: enumerate a class, compute exact invariants, and
//! compare rankings and extremes against the stated values and attainers.

mod identify;
mod lemmas;
pub mod report;
mod theorems;

use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;

use crate::canon::canonical_key;
use crate::enumerate::Guards;
use crate::error::{invalid, Result};
use crate::families::FamilyId;
use crate::graph::Graph;
use crate::graph6::emit_graph6;
use crate::invariants::Indices;
use crate::rational::Rational;

pub use identify::{candidates, identify, identify_key, MAX_IDENTIFY_ORDER};
pub use lemmas::{check_closed_forms, check_inequality_lemmas, check_structure};
pub use report::{
    Check, Extreme, RankedGraph, RankingReport, RatioReport, ReportDocument, Tier, TheoremResult,
    Witness, SCHEMA_VERSION,
};
pub use theorems::{
    check_thm_1, check_thm_2_1, check_thm_2_2, check_thm_2_3, check_thm_2_4, check_tree_orderings,
};

/// Ids accepted by [`run`], with the orders swept when none is given.
pub const CHECKS: &[(&str, &[usize])] = &[
    ("thm1.1", &[4, 5, 6, 7, 8]),
    ("thm1.2", &[5, 6, 7, 8]),
    ("thm1.3", &[4, 5, 6, 7, 8]),
    ("thm1.4", &[4, 5, 6, 7, 8, 9, 10, 11]),
    ("thm1.5", &[4, 5, 6, 7, 8, 9, 10, 11]),
    ("thm1.6", &[4, 5, 6, 7, 8, 9, 10, 11]),
    ("thm1.7", &[5, 6, 7, 8, 9, 10, 11]),
    ("thm2.1", &[10, 11, 12]),
    ("thm2.2", &[6, 7, 8, 9, 10]),
    ("thm2.3", &[5, 6, 7, 8]),
    ("thm2.4", &[10, 11]),
    ("trees", &[5, 6, 7, 8, 9, 10, 11, 12]),
    ("lemmas", &[]),
    ("structure", &[]),
    ("closed-forms", &[]),
];

/// Settings shared by every check.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub guards: Guards,
    pub seed: u64,
    pub trials: usize,
    /// Sweep every cyclic graph instead of unicyclic and bicyclic ones.
    pub full: bool,
    pub timing: bool,
    /// Tiers kept in ranking reports.
    pub top: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            guards: Guards::default(),
            seed: 0x5a6e_6564,
            trials: 1000,
            full: false,
            timing: false,
            top: 8,
        }
    }
}

/// Runs check `id` at order `n`, or at its default orders when `n` is `None`.
/// Checks without an order ignore `n`.
pub fn run(id: &str, n: Option<usize>, opts: &VerifyOptions) -> Result<Vec<TheoremResult>> {
    let Some(&(_, defaults)) = CHECKS.iter().find(|(name, _)| *name == id) else {
        let known: Vec<&str> = CHECKS.iter().map(|(k, _)| *k).collect();
        return Err(invalid(format!("unknown check {id:?}; expected one of {}", known.join(", "))));
    };
    let orders: Vec<usize> = match n {
        Some(n) => vec![n],
        None => defaults.to_vec(),
    };
    let timed = |f: &dyn Fn() -> Result<Vec<TheoremResult>>| -> Result<Vec<TheoremResult>> {
        let start = Instant::now();
        let mut out = f()?;
        if opts.timing {
            let ms = start.elapsed().as_millis() as u64;
            for r in &mut out {
                r.runtime_ms = Some(ms);
            }
        }
        Ok(out)
    };
    let mut results = Vec::new();
    match id {
        "lemmas" => results.extend(timed(&|| check_inequality_lemmas(opts.seed, opts.trials, &opts.guards))?),
        "structure" => results.extend(timed(&|| Ok(vec![check_structure(&opts.guards)?]))?),
        "closed-forms" => results.extend(timed(&|| Ok(vec![check_closed_forms()?]))?),
        _ => {
            for n in orders {
                let one = timed(&|| {
                    let r = match id {
                        "thm2.1" => check_thm_2_1(n, opts)?,
                        "thm2.2" => check_thm_2_2(n, opts)?,
                        "thm2.3" => check_thm_2_3(n, opts)?,
                        "thm2.4" => check_thm_2_4(n, opts)?,
                        "trees" => check_tree_orderings(n, opts)?,
                        _ => {
                            let x = id["thm1.".len()..].parse::<u8>().expect("listed id");
                            check_thm_1(x, n, opts)?
                        }
                    };
                    Ok(vec![r])
                })?;
                results.extend(one);
            }
        }
    }
    Ok(results)
}

/// Wiener ranking of an enumerated class (canonical forms), top tiers only.
pub fn rank_class(class: &str, graphs: &[Graph], top: usize) -> Result<RankingReport> {
    let scored = score_canonical(graphs)?;
    Ok(rank_by_wiener(class, &scored, top).0)
}

/// A class member with its canonical graph6 string and indices.
#[derive(Clone, Debug)]
pub(crate) struct Scored {
    pub graph: Graph,
    pub g6: String,
    pub idx: Indices,
}

/// Scores canonical forms (their graph6 text is the canonical key).
pub(crate) fn score_canonical(graphs: &[Graph]) -> Result<Vec<Scored>> {
    graphs
        .par_iter()
        .map(|g| {
            Ok(Scored {
                g6: emit_graph6(g),
                idx: Indices::of(g)?,
                graph: g.clone(),
            })
        })
        .collect()
}

pub(crate) fn ranked(s: &Scored) -> RankedGraph {
    ranked_parts(&s.graph, s.idx.wiener)
}

pub(crate) fn ranked_parts(g: &Graph, wiener: u64) -> RankedGraph {
    let key = canonical_key(g);
    RankedGraph {
        family: identify_key(&key, g.n()).map(|f| f.to_string()),
        graph6: key.to_string(),
        wiener,
    }
}

/// Canonical key text of a family member.
pub(crate) fn family_key(id: &FamilyId) -> Result<String> {
    Ok(canonical_key(&id.build()?).to_string())
}

/// Groups by Wiener index, highest first, members sorted by key. Keeps the
/// first `top` tiers in the report and returns the full grouping alongside.
pub(crate) fn rank_by_wiener(
    class: &str,
    scored: &[Scored],
    top: usize,
) -> (RankingReport, Vec<Vec<usize>>) {
    let mut order: Vec<usize> = (0..scored.len()).collect();
    order.sort_by(|&a, &b| {
        scored[b]
            .idx
            .wiener
            .cmp(&scored[a].idx.wiener)
            .then_with(|| scored[a].g6.cmp(&scored[b].g6))
    });
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for i in order {
        match groups.last_mut() {
            Some(g) if scored[g[0]].idx.wiener == scored[i].idx.wiener => g.push(i),
            _ => groups.push(vec![i]),
        }
    }
    let tiers = groups
        .iter()
        .take(top)
        .map(|g| Tier {
            wiener: scored[g[0]].idx.wiener,
            members: g.iter().map(|&i| ranked(&scored[i])).collect(),
        })
        .collect();
    let report = RankingReport {
        class: class.to_string(),
        class_size: scored.len(),
        tiers,
    };
    (report, groups)
}

/// Extreme value of `f` over `scored` and the indices attaining it.
pub(crate) fn extreme_of<F>(scored: &[Scored], extreme: Extreme, f: F) -> Option<(Rational, Vec<usize>)>
where
    F: Fn(&Indices) -> Rational + Sync,
{
    let values: Vec<Rational> = scored.par_iter().map(|s| f(&s.idx)).collect();
    let best = match extreme {
        Extreme::Min => values.iter().min(),
        Extreme::Max => values.iter().max(),
    }
    .copied()?;
    let at = (0..values.len()).filter(|&i| values[i] == best).collect();
    Some((best, at))
}

/// Compares the attainers of an extreme with the expected families, and the
/// value with the bound. Fills `res.ratio` and the matching checks.
#[allow(clippy::too_many_arguments)]
pub(crate) fn ratio_check<F>(
    res: &mut TheoremResult,
    class: &str,
    scored: &[Scored],
    quantity: &str,
    extreme: Extreme,
    bound: Rational,
    expected: &[FamilyId],
    f: F,
) -> Result<()>
where
    F: Fn(&Indices) -> Rational + Sync,
{
    let Some((value, at)) = extreme_of(scored, extreme, f) else {
        res.check(&format!("{quantity} class"), false, format!("{class} is empty"));
        return Ok(());
    };
    let attainers: Vec<RankedGraph> = at.iter().map(|&i| ranked(&scored[i])).collect();
    let got: BTreeSet<String> = attainers.iter().map(|a| a.graph6.clone()).collect();
    let want: BTreeSet<String> = expected.iter().map(family_key).collect::<Result<_>>()?;
    let dir = match extreme {
        Extreme::Min => "min",
        Extreme::Max => "max",
    };
    let value_ok = value == bound;
    if !value_ok {
        for a in &attainers {
            res.witness(&format!("{dir} {quantity}"), &a.graph6, format!("{quantity} = {value}, bound {bound}"));
        }
    }
    res.check(
        &format!("{dir} {quantity}"),
        value_ok,
        format!("{value} over {} graphs of {class}, bound {bound}", scored.len()),
    );
    let set_ok = got == want;
    if !set_ok {
        for g in got.symmetric_difference(&want) {
            let side = if got.contains(g) { "unexpected attainer" } else { "expected attainer missing" };
            res.witness(&format!("{dir} {quantity} attainers"), g, side);
        }
    }
    let names: Vec<String> = expected.iter().map(|f| f.to_string()).collect();
    res.check(
        &format!("{dir} {quantity} attainers"),
        set_ok,
        format!("{} attainer(s), expected {{{}}}", got.len(), names.join(", ")),
    );
    res.attainers.extend(got.iter().cloned());
    res.ratio = Some(RatioReport {
        class: class.to_string(),
        class_size: scored.len(),
        quantity: quantity.to_string(),
        extreme,
        value,
        attainers,
        bound,
        matches: value_ok && set_ok,
    });
    Ok(())
}

/// Asserts that the tiers starting at index `first` are exactly the given families.
pub(crate) fn tier_check(
    res: &mut TheoremResult,
    scored: &[Scored],
    groups: &[Vec<usize>],
    first: usize,
    expected: &[Vec<FamilyId>],
) -> Result<()> {
    for (t, want_ids) in expected.iter().enumerate() {
        let t = first + t;
        let name = format!("tier {}", t + 1);
        let want: BTreeSet<String> = want_ids.iter().map(family_key).collect::<Result<_>>()?;
        let names: Vec<String> = want_ids.iter().map(|f| f.to_string()).collect();
        let Some(group) = groups.get(t) else {
            res.check(&name, false, format!("class has only {} tiers", groups.len()));
            continue;
        };
        let got: BTreeSet<String> = group.iter().map(|&i| scored[i].g6.clone()).collect();
        let w = scored[group[0]].idx.wiener;
        let ok = got == want;
        if !ok {
            for g in got.symmetric_difference(&want) {
                let side = if got.contains(g) { "unexpected member" } else { "expected member missing" };
                res.witness(&name, g, format!("{side}; tier W={w}"));
            }
        }
        res.check(&name, ok, format!("W={w} {{{}}}", names.join(", ")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{class_members, GraphClass};
    use proptest::prelude::*;

    #[test]
    fn unknown_ids_and_small_orders_are_usage_errors() {
        let opts = VerifyOptions::default();
        assert!(run("thm3.1", None, &opts).is_err());
        assert!(run("thm2.3", Some(4), &opts).is_err());
        assert!(run("thm2.1", Some(9), &opts).is_err());
    }

    #[test]
    fn ratio_floor_at_five_vertices() {
        let r = check_thm_2_3(5, &VerifyOptions::default()).unwrap();
        assert!(r.passed, "{:#?}", r.checks);
        let ratio = r.ratio.unwrap();
        assert_eq!(ratio.value, Rational::new(8, 7));
        assert_eq!(ratio.class_size, 12);
        assert_eq!(ratio.attainers[0].family.as_deref(), Some("b1:5"));
    }

    #[test]
    fn reports_do_not_depend_on_thread_count() {
        let opts = VerifyOptions::default();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let one = pool.install(|| run("thm2.2", Some(8), &opts)).unwrap();
        let many = run("thm2.2", Some(8), &opts).unwrap();
        assert_eq!(one, many);
        assert!(many[0].passed);
        assert!(many[0].runtime_ms.is_none());
    }

    #[test]
    fn identified_members_reproduce_their_wiener_index() {
        let opts = VerifyOptions::default();
        let r = check_thm_2_2(9, &opts).unwrap();
        for tier in &r.ranking.unwrap().tiers {
            for m in &tier.members {
                if let Some(f) = &m.family {
                    let g = f.parse::<FamilyId>().unwrap().build().unwrap();
                    assert_eq!(Indices::of(&g).unwrap().wiener, m.wiener, "{f}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn rankings_are_sorted_partitions(mask in proptest::collection::vec(any::<bool>(), 89)) {
            let all = class_members(GraphClass::Unicyclic, 8, &Guards::default()).unwrap();
            let picked: Vec<Graph> = all.iter().zip(&mask).filter(|(_, &k)| k).map(|(g, _)| g.clone()).collect();
            let scored = score_canonical(&picked).unwrap();
            let (report, groups) = rank_by_wiener("unicyclic", &scored, usize::MAX);
            let seen: BTreeSet<usize> = groups.iter().flatten().copied().collect();
            prop_assert_eq!(seen.len(), picked.len());
            prop_assert_eq!(groups.iter().map(Vec::len).sum::<usize>(), picked.len());
            for pair in report.tiers.windows(2) {
                prop_assert!(pair[0].wiener > pair[1].wiener);
            }
            for t in &report.tiers {
                prop_assert!(t.members.windows(2).all(|m| m[0].graph6 < m[1].graph6));
            }
        }
    }
}
