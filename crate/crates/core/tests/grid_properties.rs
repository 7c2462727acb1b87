use std::collections::HashSet;

use polyholes::grid::{random_polyomino, Cell, Polyomino, Symmetry};
use proptest::prelude::*;

/// Holes by union-find over the empty cells of the padded bounding box,
/// counting the classes that do not reach the padding ring.
fn union_find_holes(p: &Polyomino) -> usize {
    let (w, h) = (p.width() as i32 + 2, p.height() as i32 + 2);
    let tiles: HashSet<Cell> = p.cells().iter().copied().collect();
    let idx = |x: i32, y: i32| (y * w + x) as usize;
    let mut parent: Vec<usize> = (0..(w * h) as usize).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let empty = |x: i32, y: i32| !tiles.contains(&Cell::new(x - 1, y - 1));
    for y in 0..h {
        for x in 0..w {
            if !empty(x, y) {
                continue;
            }
            for (nx, ny) in [(x + 1, y), (x, y + 1)] {
                if nx < w && ny < h && empty(nx, ny) {
                    let (a, b) = (find(&mut parent, idx(x, y)), find(&mut parent, idx(nx, ny)));
                    parent[a] = b;
                }
            }
        }
    }
    let outside = find(&mut parent, 0);
    let mut roots = HashSet::new();
    for y in 1..h - 1 {
        for x in 1..w - 1 {
            if empty(x, y) {
                let r = find(&mut parent, idx(x, y));
                if r != outside {
                    roots.insert(r);
                }
            }
        }
    }
    roots.len()
}

#[test]
fn flood_fill_matches_union_find_on_fuzzed_shapes() {
    let mut holed = 0;
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 37) % 150;
        let p = random_polyomino(n, seed);
        let m = p.metrics();
        let oracle = union_find_holes(&p);
        assert_eq!(m.holes as usize, oracle, "seed {seed}\n{p}");
        assert_eq!(m.hole_components.len(), oracle);
        holed += usize::from(oracle > 0);
    }
    // the fuzz corpus must actually exercise holes
    assert!(holed > 100, "only {holed} shapes with holes");
}

#[test]
fn hand_checked_hole_counts() {
    let seven = Polyomino::from_cells(
        [(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (1, 2), (2, 2)].map(|(x, y)| Cell::new(x, y)),
    )
    .unwrap();
    let (count, comps) = seven.holes();
    assert_eq!(count, 1);
    assert_eq!(comps[0].cells(), &[Cell::new(1, 1)]);
    assert_eq!(union_find_holes(&seven), 1);
}

fn shape() -> impl Strategy<Value = Polyomino> {
    (1usize..120, any::<u64>()).prop_map(|(n, seed)| random_polyomino(n, seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn identities(p in shape()) {
        let m = p.metrics();
        prop_assert_eq!(4 * m.n, m.p + 2 * m.b);
        prop_assert_eq!(m.p, m.p_o + m.p_h);
        prop_assert!(m.b + 1 >= m.n);
        prop_assert!(m.p_h >= 4 * m.holes);
        prop_assert_eq!(m.holes as usize, union_find_holes(&p));
        for c in &m.hole_components {
            prop_assert!(!c.is_empty());
            prop_assert!(c.cells().iter().all(|&x| !p.contains(x)));
        }
    }

    #[test]
    fn symmetries_preserve_metrics(p in shape()) {
        let m = p.metrics();
        for g in Symmetry::ALL {
            let q = p.transform(g);
            prop_assert_eq!(q.metrics().summary(), m.summary());
        }
    }

    #[test]
    fn translation_is_normalized_away(p in shape(), dx in -1000i32..1000, dy in -1000i32..1000) {
        let moved = Polyomino::from_cells(p.cells().iter().map(|c| Cell::new(c.x + dx, c.y + dy))).unwrap();
        prop_assert_eq!(moved, p);
    }

    #[test]
    fn four_quarter_turns_are_identity(p in shape(), px in -5i32..5, py in -5i32..5) {
        let pivot = Cell::new(px, py);
        let mut q = p.clone();
        for _ in 0..4 {
            q = q.rotate_about_tile_center(pivot, 1);
        }
        prop_assert_eq!(q, p);
    }

    #[test]
    fn text_round_trips(p in shape()) {
        prop_assert_eq!(Polyomino::parse(&p.serialize()).unwrap(), p.clone());
        prop_assert_eq!(Polyomino::parse_ascii(&p.render_ascii()).unwrap(), p.clone());
        prop_assert_eq!(p.render_svg(), p.clone().render_svg());
    }

    #[test]
    fn random_is_deterministic(n in 1usize..80, seed in any::<u64>()) {
        let a = random_polyomino(n, seed);
        prop_assert_eq!(a.len(), n);
        prop_assert_eq!(a, random_polyomino(n, seed));
    }
}
