//! Matching graphs against the named families.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::canon::{canonical_key, CanonicalKey};
use crate::families::FamilyId;
use crate::graph::Graph;

/// Largest order for which [`identify`] builds a candidate table.
pub const MAX_IDENTIFY_ORDER: usize = 20;

type Table = Arc<HashMap<CanonicalKey, FamilyId>>;

fn tables() -> &'static Mutex<HashMap<usize, Table>> {
    static TABLES: OnceLock<Mutex<HashMap<usize, Table>>> = OnceLock::new();
    TABLES.get_or_init(Default::default)
}

/// Compositions of `total` into `parts` non-negative parts, lexicographically
/// descending.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Partitions of `total` into at least `min_parts` positive parts, each
/// listed in non-increasing order; lexicographically descending overall.
fn partitions(total: usize, max_part: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if total == 0 {
        out.push(cur.clone());
        return;
    }
    for p in (1..=max_part.min(total)).rev() {
        cur.push(p);
        partitions(total - p, p, out, cur);
        cur.pop();
    }
}

/// Every family member of order `n`, most specific first.
pub fn candidates(n: usize) -> Vec<FamilyId> {
    let mut c = Vec::new();
    if n == 4 {
        c.push(FamilyId::K4Minus);
    }
    if n >= 8 {
        c.extend((0..4).map(|k| FamilyId::H { n, k }));
    }
    if n >= 5 {
        c.push(FamilyId::B1(n));
    }
    if n >= 4 {
        c.extend((0..=(n - 4) / 2).map(|s| FamilyId::Bns { n, s }));
    }
    for k in 1..=n {
        for l in k.max(2)..=n {
            if k + l > n + 1 {
                break;
            }
            let t = n + 1 - k - l;
            if t >= l {
                c.push(FamilyId::Theta { k, l, t });
            }
        }
    }
    for p in 3..=n {
        for q in p..=n - p {
            c.push(FamilyId::Dumbbell { n, p, q });
        }
    }
    if n >= 5 {
        c.extend((1..=3).map(|i| FamilyId::Ank { n, k: 4, i }));
    }
    for r in [3usize, 4] {
        if n <= r {
            continue;
        }
        for extra in compositions(n - r, r) {
            if extra.iter().filter(|&&e| e > 0).count() >= 2 {
                let orders = extra.iter().map(|e| e + 1).collect();
                c.push(FamilyId::CrPaths { r, orders });
            }
        }
    }
    c.extend((3..n).map(|r| FamilyId::Lollipop { n, r }));
    if n >= 4 {
        let mut legs = Vec::new();
        partitions(n - 1, n - 1, &mut legs, &mut Vec::new());
        for legs in legs {
            if legs.len() >= 3 && legs[0] > 1 {
                c.push(FamilyId::Spider { n, legs });
            }
        }
    }
    if n >= 3 {
        c.push(FamilyId::Cycle(n));
    }
    if n >= 1 {
        c.push(FamilyId::Path(n));
        c.push(FamilyId::Star(n));
        c.push(FamilyId::Complete(n));
    }
    c
}

fn table(n: usize) -> Table {
    if let Some(t) = tables().lock().expect("identify cache").get(&n) {
        return Arc::clone(t);
    }
    let mut map = HashMap::new();
    for id in candidates(n) {
        if let Ok(g) = id.build() {
            map.entry(canonical_key(&g)).or_insert(id);
        }
    }
    let t = Arc::new(map);
    tables()
        .lock()
        .expect("identify cache")
        .entry(n)
        .or_insert_with(|| Arc::clone(&t));
    t
}

/// The first named family (in a fixed priority order) isomorphic to `g`.
pub fn identify(g: &Graph) -> Option<FamilyId> {
    identify_key(&canonical_key(g), g.n())
}

/// Like [`identify`] for a graph whose canonical key is already known.
pub fn identify_key(key: &CanonicalKey, n: usize) -> Option<FamilyId> {
    if n == 0 || n > MAX_IDENTIFY_ORDER {
        return None;
    }
    table(n).get(key).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn known_shapes() {
        assert_eq!(identify(&families::cycle(5).unwrap()), Some(FamilyId::Cycle(5)));
        assert_eq!(identify(&families::b1(5).unwrap()), Some(FamilyId::B1(5)));
        let relabeled = families::lollipop(10, 3).unwrap().permuted(&[9, 8, 7, 6, 5, 4, 3, 2, 1, 0]);
        assert_eq!(identify(&relabeled), Some(FamilyId::Lollipop { n: 10, r: 3 }));
        assert_eq!(identify(&families::h_graph(11, 2).unwrap()), Some(FamilyId::H { n: 11, k: 2 }));
        assert_eq!(identify(&families::path(3).unwrap()), Some(FamilyId::Path(3)));
        assert_eq!(identify(&families::k4_minus()), Some(FamilyId::K4Minus));
        let t = families::spider(9, &[6, 1, 1]).unwrap();
        assert_eq!(
            identify(t.tree()),
            Some(FamilyId::Spider { n: 9, legs: vec![6, 1, 1] })
        );
        let c = families::cr_paths(3, &[4, 3, 0]).unwrap();
        assert_eq!(
            identify(&c),
            Some(FamilyId::CrPaths { r: 3, orders: vec![5, 4, 1] })
        );
        assert_eq!(identify(&families::complete(5).unwrap().without_edge(0, 1).unwrap()), None);
    }

    #[test]
    fn candidates_have_the_right_order() {
        for n in 1..=12 {
            for id in candidates(n) {
                assert_eq!(id.order(), n, "{id}");
                assert_eq!(id.build().unwrap().n(), n, "{id}");
            }
        }
    }
}
