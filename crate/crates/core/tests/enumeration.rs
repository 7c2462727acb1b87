use std::collections::HashSet;

use polyholes::bounds;
use polyholes::enumeration::*;

const FIXED: [u64; 12] = [1, 2, 6, 19, 63, 216, 760, 2725, 9910, 36446, 135268, 505861];

#[test]
fn walker_agrees_with_naive_generator() {
    let table = census(10, 2).unwrap();
    let levels = naive_levels(10);
    for (row, level) in table.rows.iter().zip(&levels) {
        assert_eq!(row.total, level.len() as u64, "n={}", row.n);
    }
    for n in [5, 7, 10] {
        let (count, f) = naive_count_and_f(n);
        assert_eq!((count, f), (table.row(n).unwrap().total, table.f(n).unwrap()));
    }
    assert_eq!(table.rows.iter().map(|r| r.total).collect::<Vec<_>>(), &FIXED[..10]);
}

#[test]
fn walker_visits_the_naive_shapes_exactly() {
    let naive: HashSet<Vec<(i32, i32)>> = naive_levels(8).pop().unwrap().into_iter().collect();
    let mut seen = HashSet::new();
    enumerate_fixed(8, |a| {
        let p = a.to_polyomino();
        let mut cells: Vec<(i32, i32)> = p.cells().iter().map(|c| (c.x, c.y)).collect();
        cells.sort_unstable();
        assert!(seen.insert(cells));
    })
    .unwrap();
    assert_eq!(seen, naive);
}

#[test]
fn census_is_independent_of_workers_and_shards() {
    let base = census_with_depth(11, 1, 1).unwrap();
    for (workers, depth) in [(1, 10), (2, 3), (4, 6), (8, 2), (3, 11)] {
        assert_eq!(census_with_depth(11, workers, depth).unwrap(), base, "{workers} workers, depth {depth}");
    }
    assert_eq!(census(11, 4).unwrap().to_csv(), base.to_csv());
}

#[test]
fn census_small_facts() {
    let t = census(12, 2).unwrap();
    assert_eq!((t.f(6), t.f(7), t.f(10), t.f(11), t.f(12)), (Some(0), Some(1), Some(1), Some(2), Some(2)));
    assert_eq!(t.row(9).unwrap().min_perimeter, 12);
    for r in &t.rows {
        assert_eq!(r.total, r.counts_by_holes.values().sum::<u64>());
        assert_eq!(r.f_n, *r.counts_by_holes.keys().last().unwrap());
        assert_eq!(r.min_perimeter as u64, bounds::p_min(r.n as u64));
        assert_eq!(r.max_perimeter as usize, 2 * r.n + 2);
        assert!(r.f_n as u64 <= bounds::ub_fixed_point(r.n as u64));
        assert_eq!(r.euler_mismatches, 0);
    }
    let g = g_table(2, &t).unwrap();
    assert_eq!((g.g(1), g.g(2)), (Some(7), Some(11)));
    assert!(matches!(g_table(3, &t), Err(EnumError::InsufficientCensus { m: 3, max_n: 12 })));
}

#[test]
fn pruning_rules_agree_with_exhaustive_search_up_to_three_holes() {
    let t = census(12, 1).unwrap();
    for m in 1..=3 {
        let results: Vec<_> = [Pruning::None, Pruning::Sound, Pruning::Heuristic]
            .into_iter()
            .map(|pruning| search_g(m, SearchOptions { pruning, node_budget: 1_000_000_000 }).unwrap())
            .collect();
        for r in &results {
            let metrics = r.witness.metrics();
            assert_eq!((metrics.n as usize, metrics.holes), (r.g, m as u64));
            assert_eq!(r.g, results[0].g, "m={m}");
        }
        if let Ok(g) = g_table(m, &t) {
            assert_eq!(g.g(m), Some(results[0].g));
        }
    }
}

#[test]
fn search_starts_at_the_bound() {
    let r = search_g(2, SearchOptions::default()).unwrap();
    assert_eq!(r.start, 10);
    assert_eq!(bounds::ub_fixed_point(9), 1);
    assert_eq!(bounds::ub_fixed_point(10), 2);
}
