//! Level-by-level generator with a set of canonical cell lists.
//!
//! Slow and memory hungry, kept only to cross-check the Redelmeier walker.

use std::collections::HashSet;

use crate::grid::{Cell, Polyomino};

/// Largest size the naive generator accepts.
pub const NAIVE_CAP: usize = 12;

fn normalize(mut cells: Vec<(i32, i32)>) -> Vec<(i32, i32)> {
    let mx = cells.iter().map(|c| c.0).min().unwrap_or(0);
    let my = cells.iter().map(|c| c.1).min().unwrap_or(0);
    for c in &mut cells {
        c.0 -= mx;
        c.1 -= my;
    }
    cells.sort_unstable();
    cells
}

/// All fixed polyominoes of each size `1..=max_n`, as canonical cell lists.
pub fn naive_levels(max_n: usize) -> Vec<Vec<Vec<(i32, i32)>>> {
    assert!(max_n <= NAIVE_CAP, "naive generator is capped at {NAIVE_CAP}");
    let mut levels = Vec::new();
    if max_n == 0 {
        return levels;
    }
    let mut current: Vec<Vec<(i32, i32)>> = vec![vec![(0, 0)]];
    levels.push(current.clone());
    for _ in 1..max_n {
        let mut next = HashSet::new();
        for shape in &current {
            let members: HashSet<_> = shape.iter().copied().collect();
            for &(x, y) in shape {
                for n in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                    if !members.contains(&n) {
                        let mut grown = shape.clone();
                        grown.push(n);
                        next.insert(normalize(grown));
                    }
                }
            }
        }
        let mut sorted: Vec<_> = next.into_iter().collect();
        sorted.sort_unstable();
        current = sorted;
        levels.push(current.clone());
    }
    levels
}

/// Count and maximum hole number of the fixed `n`-ominoes.
pub fn naive_count_and_f(n: usize) -> (u64, u32) {
    let level = naive_levels(n).pop().unwrap_or_default();
    let f = level
        .iter()
        .map(|cells| {
            let cells: Vec<_> = cells.iter().map(|&(x, y)| Cell::new(x, y)).collect();
            Polyomino::from_cells(cells).expect("grown shapes are valid").holes().0 as u32
        })
        .max()
        .unwrap_or(0);
    (level.len() as u64, f)
}
