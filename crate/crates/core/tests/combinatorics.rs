use std::collections::{BTreeMap, BTreeSet};

use mnpieri::qt::QTMonomial;
use mnpieri::ribbons::*;
use mnpieri::shapes::*;
use proptest::prelude::*;

#[test]
fn weight_multiset_determines_shape() {
    let mut seen: BTreeMap<Vec<QTMonomial>, SkewShape> = BTreeMap::new();
    for sh in all_skew_shapes(8) {
        let mut w: Vec<QTMonomial> = sh.cells().iter().map(|c| c.weight()).collect();
        w.sort();
        if let Some(prev) = seen.insert(w, sh.clone()) {
            // Distinct (outer, inner) pairs may describe the same set of boxes.
            assert_eq!(prev.cells(), sh.cells(), "{} vs {}", prev, sh);
        }
    }
}

#[test]
fn content_read_back_from_weight() {
    for l in partitions_up_to(7) {
        for c in l.cells() {
            let w = c.weight();
            assert_eq!(c.content(), w.qexp2 / 2 + w.texp2 / 2);
        }
    }
}

#[test]
fn min_max_bounds() {
    for l in partitions_up_to(10) {
        assert!(l.min_stat() <= 0 && 0 <= l.max_stat());
        assert!(l.max_stat() - l.min_stat() >= l.size() as i64);
    }
}

#[test]
fn dominance_is_partial_order() {
    for n in 0..=6 {
        let ps: Vec<_> = enumerate_partitions(n).collect();
        for a in &ps {
            assert!(dominance_leq(a, a));
            for b in &ps {
                if a != b && dominance_leq(a, b) {
                    assert!(!dominance_leq(b, a));
                }
                for c in &ps {
                    if dominance_leq(a, b) && dominance_leq(b, c) {
                        assert!(dominance_leq(a, c));
                    }
                }
            }
        }
    }
}

#[test]
fn partition_counts() {
    let counts: Vec<usize> = (0..=10).map(|n| enumerate_partitions(n).count()).collect();
    assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
}

#[test]
fn bubble_game_iff_cover() {
    for sh in all_skew_shapes(10) {
        for n in [2usize, 3] {
            if sh.size() % n != 0 {
                continue;
            }
            let cover = cover_vertical_strip(&sh, n, sh.size() / n).unwrap();
            assert_eq!(bubble_game(&sh, n), cover.is_some(), "{} n={}", sh, n);
        }
    }
}

#[test]
fn cover_is_unique_and_matches_exhaustive_search() {
    for sh in all_skew_shapes(8) {
        for n in 1usize..=4 {
            if sh.size() % n != 0 {
                continue;
            }
            let exhaustive = all_vertical_strip_tilings(&sh, n);
            assert!(exhaustive.len() <= 1, "{} n={}", sh, n);
            let cover = cover_vertical_strip(&sh, n, sh.size() / n).unwrap();
            assert_eq!(cover.map(|s| s.ribbons), exhaustive.into_iter().next(), "{} n={}", sh, n);
        }
    }
}

#[test]
fn produced_ribbons_are_valid() {
    for sh in all_skew_shapes(8) {
        for n in [2usize, 3] {
            for t in all_tilings(&sh, n) {
                let h: i64 = t.iter().map(ribbon_height).sum();
                assert_eq!(h, tiling_height(&t));
                for r in t {
                    let contents: Vec<i64> = r.cells().iter().map(|c| c.content()).collect();
                    assert!(contents.windows(2).all(|w| w[1] == w[0] + 1));
                    assert_eq!(r.width(), n as i64 - 1 - r.height());
                    let set: BTreeSet<Cell> = r.cells().iter().copied().collect();
                    for c in r.cells() {
                        let square = [Cell::new(c.x + 1, c.y), Cell::new(c.x, c.y + 1), Cell::new(c.x + 1, c.y + 1)];
                        assert!(!square.iter().all(|d| set.contains(d)));
                    }
                }
            }
        }
    }
}

#[test]
fn tableaux_of_unit_weight_realize_every_tiling() {
    for sh in all_skew_shapes(7) {
        for n in [2usize, 3] {
            if sh.size() % n != 0 {
                continue;
            }
            let k = sh.size() / n;
            let tabs = enumerate_ribbon_tableaux(&sh, n, &vec![1; k]).unwrap();
            let from_tabs: BTreeSet<Tiling> = tabs.iter().map(RibbonTableau::tiling).collect();
            let direct: BTreeSet<Tiling> = all_tilings(&sh, n).into_iter().collect();
            assert_eq!(from_tabs, direct, "{} n={}", sh, n);
        }
    }
}

#[test]
fn collapse_graph_connected_with_minimal_tableau() {
    for sh in all_skew_shapes(12) {
        for n in [2usize, 3] {
            if sh.size() % n != 0 {
                continue;
            }
            let tilings = all_tilings(&sh, n);
            let minimal = minimal_tableau(&sh, n);
            assert_eq!(minimal.is_some(), !tilings.is_empty(), "{} n={}", sh, n);
            if tilings.is_empty() {
                continue;
            }
            let g = collapse_graph_of_tilings(tilings);
            for &(u, v) in &g.edges {
                assert_eq!((tiling_height(&g.vertices[u]) - tiling_height(&g.vertices[v])).abs(), 2);
            }
            assert_eq!(g.component_count(), 1, "{} n={}", sh, n);
            assert!(g.index_of(&minimal.unwrap().tiling()).is_some());
        }
    }
}

#[test]
fn deleting_edges_splits_components() {
    let sh: SkewShape = "[2,2]/[]".parse().unwrap();
    let g = collapse_graph_of_tilings(all_tilings(&sh, 2));
    assert_eq!(g.component_count(), 1);
    assert_eq!(g.components_without(&g.edges.clone()), 2);
}

proptest! {
    #[test]
    fn strip_height_is_sum(idx in 0usize..2000, n in 1usize..4) {
        let shapes = all_skew_shapes(9);
        let sh = &shapes[idx % shapes.len()];
        prop_assume!(sh.size().is_multiple_of(n));
        if let Some(s) = cover_vertical_strip(sh, n, sh.size() / n).unwrap() {
            prop_assert_eq!(s.height(), s.ribbons.iter().map(ribbon_height).sum::<i64>());
            prop_assert!(s.is_valid());
        }
    }

    #[test]
    fn horizontal_cover_is_transpose(idx in 0usize..2000, n in 1usize..4) {
        let shapes = all_skew_shapes(9);
        let sh = &shapes[idx % shapes.len()];
        prop_assume!(sh.size().is_multiple_of(n));
        let h = cover_horizontal_strip(sh, n, sh.size() / n).unwrap();
        if let Some(s) = &h {
            prop_assert!(s.is_valid());
            let cells: BTreeSet<Cell> = s.ribbons.iter().flat_map(|r| r.cells().iter().copied()).collect();
            prop_assert_eq!(cells, sh.cells().into_iter().collect::<BTreeSet<_>>());
        }
    }
}
