use std::collections::HashSet;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cell, Polyomino};

/// Grows an `n`-cell polyomino from a single tile by repeatedly adding a
/// uniformly chosen empty cell adjacent to the shape. Deterministic in
/// `(n, seed)`.
///
/// # Panics
/// If `n == 0`.
pub fn random_polyomino(n: usize, seed: u64) -> Polyomino {
    assert!(n >= 1, "a polyomino needs at least one tile");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tiles: HashSet<Cell> = HashSet::with_capacity(n);
    // frontier order is insertion order, so the result depends only on the rng
    let mut frontier: Vec<Cell> = Vec::new();
    let mut in_frontier: HashSet<Cell> = HashSet::new();

    fn add(c: Cell, tiles: &mut HashSet<Cell>, frontier: &mut Vec<Cell>, in_frontier: &mut HashSet<Cell>) {
        tiles.insert(c);
        for nb in c.neighbors() {
            if !tiles.contains(&nb) && in_frontier.insert(nb) {
                frontier.push(nb);
            }
        }
    }

    add(Cell::new(0, 0), &mut tiles, &mut frontier, &mut in_frontier);
    while tiles.len() < n {
        let pick = rng.random_range(0..frontier.len());
        let c = frontier.swap_remove(pick);
        in_frontier.remove(&c);
        add(c, &mut tiles, &mut frontier, &mut in_frontier);
    }
    let cells: Vec<Cell> = tiles.into_iter().collect();
    Polyomino::from_connected_cells(cells).expect("grown shapes are small")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_valid() {
        assert_eq!(random_polyomino(1, 99), Polyomino::single());
        let a = random_polyomino(50, 7);
        let b = random_polyomino(50, 7);
        assert_eq!(a, b);
        assert_eq!(a.len(), 50);
        assert_eq!(Polyomino::from_cells(a.cells().to_vec()).unwrap(), a);
        let m = a.metrics();
        assert_eq!(4 * 50, m.p + 2 * m.b);
        assert_ne!(random_polyomino(50, 8), a);
    }
}
