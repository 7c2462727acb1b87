//! Builders for the extremal hole-maximizing families.
//!
//! Every builder measures its own output with the grid metrics and refuses to
//! return a shape whose tile or hole count differs from the family's closed
//! form.
//!
//! `S_k` is built by rotation: `S_1` is the 3x3 ring, and `S_k` is the union
//! of `S_{k-1}` with its three quarter-turn images about the center of its
//! top-right tile, minus that tile. `A_k` drops the top-left tile of `S_k`.
//!
//! `R_k` is a hole lattice of `40k^2` tiles in a `10k` by `6k` block. Columns
//! alternate between two patterns with period three in `y`:
//!
//! ```text
//!   even column: tile, tile, empty   (rows 3j, 3j+1, 3j+2)
//!   odd column:  tile, empty, tile
//! ```
//!
//! so rows `3j` are solid bars, every empty cell is isolated, and a third of
//! the block is holes. A left column of `6k` tiles ties the bars together, a
//! top row of `10k` tiles seals the top, and `2k` vertical dominoes on the
//! right seal the odd-column holes there. The `6k` notches left between the
//! dominoes are filled in by the `R_{k,l}` extension, two tiles per hole,
//! column by column: each pair closes a notch of the previous column and
//! opens the next column's notch.

use thiserror::Error;

use crate::bounds;
use crate::grid::{Cell, GridError, Polyomino};

/// Largest `k` accepted for `S_k`; `S_12` already has about 11 million tiles.
pub const MAX_S_K: u32 = 12;
/// Largest `k` accepted for `R_k`.
pub const MAX_R_K: u32 = 60;
/// Smallest `k` for which consecutive `R_k` are bridged by the extension.
pub const R_PRIME_MIN_K: u32 = 42;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    S,
    A,
    R,
    RExt,
    RPrime,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::S => "S",
            Family::A => "A",
            Family::R => "R",
            Family::RExt => "R_ext",
            Family::RPrime => "R_prime",
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{family} requires {what}, got {value}")]
    Domain {
        family: &'static str,
        what: &'static str,
        value: u64,
    },
    #[error("R_{{{k},l}} accepts at most {capacity} extension tiles, got l = {l}")]
    ExtensionCapacityExceeded { k: u32, l: u64, capacity: u64 },
    #[error("R'_n is defined for n >= {min}, got n = {n}")]
    BelowDomain { n: u64, min: u64 },
    #[error(
        "{family} self-check failed: expected {expected_tiles} tiles and {expected_holes} holes, \
         built {tiles} tiles and {holes} holes"
    )]
    ContractViolation {
        family: &'static str,
        expected_tiles: u64,
        expected_holes: u64,
        tiles: u64,
        holes: u64,
    },
    #[error("builder produced an invalid polyomino: {0}")]
    Invalid(#[from] GridError),
}

/// A built shape together with the counts it was checked against.
#[derive(Debug, Clone)]
pub struct ConstructionReport {
    pub family: Family,
    pub k: u32,
    /// Extension length; zero for families without one.
    pub l: u64,
    pub polyomino: Polyomino,
    pub expected_tiles: u64,
    pub expected_holes: u64,
    /// Holes measured by flood fill; equal to `expected_holes` by contract.
    pub holes: u64,
}

impl ConstructionReport {
    pub fn tiles(&self) -> u64 {
        self.polyomino.len() as u64
    }

    fn checked(
        family: Family,
        k: u32,
        l: u64,
        cells: Vec<Cell>,
        expected_tiles: u64,
        expected_holes: u64,
    ) -> Result<Self, ConstructionError> {
        let polyomino = Polyomino::from_cells(cells)?;
        let holes = polyomino.metrics().holes;
        let tiles = polyomino.len() as u64;
        if tiles != expected_tiles || holes != expected_holes {
            return Err(ConstructionError::ContractViolation {
                family: family.name(),
                expected_tiles,
                expected_holes,
                tiles,
                holes,
            });
        }
        Ok(ConstructionReport {
            family,
            k,
            l,
            polyomino,
            expected_tiles,
            expected_holes,
            holes,
        })
    }
}

fn check_k(family: Family, k: u32, max: u32) -> Result<(), ConstructionError> {
    if k == 0 {
        return Err(ConstructionError::Domain {
            family: family.name(),
            what: "k >= 1",
            value: 0,
        });
    }
    if k > max {
        return Err(ConstructionError::Domain {
            family: family.name(),
            what: if max == MAX_S_K { "k <= 12" } else { "k <= 60" },
            value: u64::from(k),
        });
    }
    Ok(())
}

/// Tiles of `S_k` as a square boolean raster (row-major, `y` up), side
/// `2^k + 1`.
fn s_raster(k: u32) -> (Vec<bool>, usize) {
    let mut side = 3usize;
    let mut grid = vec![true; 9];
    grid[4] = false;
    for _ in 1..k {
        let pivot = side - 1;
        let next = 2 * side - 1;
        let mut out = vec![false; next * next];
        for y in 0..side {
            for x in 0..side {
                if !grid[y * side + x] {
                    continue;
                }
                let c = Cell::new(x as i32, y as i32);
                for t in 0..4 {
                    let r = c.rotated_about(Cell::new(pivot as i32, pivot as i32), t);
                    out[r.y as usize * next + r.x as usize] = true;
                }
            }
        }
        out[pivot * next + pivot] = false;
        grid = out;
        side = next;
    }
    (grid, side)
}

fn raster_cells(grid: &[bool], side: usize) -> Vec<Cell> {
    grid.iter()
        .enumerate()
        .filter(|&(_, &t)| t)
        .map(|(i, _)| Cell::new((i % side) as i32, (i / side) as i32))
        .collect()
}

pub fn build_s(k: u32) -> Result<ConstructionReport, ConstructionError> {
    check_k(Family::S, k, MAX_S_K)?;
    let (grid, side) = s_raster(k);
    let report = ConstructionReport::checked(
        Family::S,
        k,
        0,
        raster_cells(&grid, side),
        bounds::nk(k),
        bounds::hk(k),
    )?;
    let expected_side = (1u32 << k) + 1;
    let p = &report.polyomino;
    if p.width() != expected_side || p.height() != expected_side {
        return Err(ConstructionError::ContractViolation {
            family: Family::S.name(),
            expected_tiles: report.expected_tiles,
            expected_holes: report.expected_holes,
            tiles: report.tiles(),
            holes: report.holes,
        });
    }
    Ok(report)
}

pub fn build_a(k: u32) -> Result<ConstructionReport, ConstructionError> {
    check_k(Family::A, k, MAX_S_K)?;
    let (mut grid, side) = s_raster(k);
    let top = side - 1;
    let x = (0..side)
        .find(|&x| grid[top * side + x])
        .expect("S_k has a solid top row");
    grid[top * side + x] = false;
    ConstructionReport::checked(
        Family::A,
        k,
        0,
        raster_cells(&grid, side),
        bounds::nk(k) - 1,
        bounds::hk(k),
    )
}

/// `m_k = 40k^2 + 20k`, the tile count of `R_k`.
pub fn r_tiles(k: u32) -> u64 {
    let k = u64::from(k);
    40 * k * k + 20 * k
}

/// `t_k = 20k^2`, the hole count of `R_k`.
pub fn r_holes(k: u32) -> u64 {
    let k = u64::from(k);
    20 * k * k
}

/// `2k(2k - 1)`: the most tiles the `R_{k,l}` extension can add.
pub fn r_extension_capacity(k: u32) -> u64 {
    let k = u64::from(k);
    2 * k * (2 * k - 1)
}

/// Cells of `R_k`, left column at `x = 0`, bottom bar at `y = 0`.
fn r_cells(k: u32) -> Vec<Cell> {
    let k = k as i32;
    let (w, h) = (10 * k, 6 * k);
    let mut cells = Vec::with_capacity(r_tiles(k as u32) as usize);
    for c in 0..w {
        for y in 0..h {
            let empty_row = if c % 2 == 0 { 2 } else { 1 };
            if y % 3 != empty_row {
                cells.push(Cell::new(c + 1, y));
            }
        }
    }
    cells.extend((1..=w).map(|x| Cell::new(x, h)));
    cells.extend((1..=h).map(|y| Cell::new(0, y)));
    for j in 0..2 * k {
        cells.push(Cell::new(w + 1, 3 * j + 1));
        cells.push(Cell::new(w + 1, 3 * j + 2));
    }
    cells
}

/// The extension tiles of `R_k` in the order they are added. Tile `2i - 1`
/// sits below a notch of the previous column, tile `2i` closes that notch.
fn r_extension(k: u32) -> impl Iterator<Item = Cell> {
    let k = k as i32;
    let domino_x = 10 * k + 1;
    (1..2 * k).flat_map(move |i| {
        (1..=2 * k - i).flat_map(move |j| {
            let x = domino_x + i;
            [Cell::new(x, 3 * j + i - 2), Cell::new(x, 3 * j + i - 1)]
        })
    })
}

pub fn build_r(k: u32) -> Result<ConstructionReport, ConstructionError> {
    check_k(Family::R, k, MAX_R_K)?;
    ConstructionReport::checked(Family::R, k, 0, r_cells(k), r_tiles(k), r_holes(k))
}

pub fn build_r_ext(k: u32, l: u64) -> Result<ConstructionReport, ConstructionError> {
    check_k(Family::RExt, k, MAX_R_K)?;
    let capacity = r_extension_capacity(k);
    if l > capacity {
        return Err(ConstructionError::ExtensionCapacityExceeded { k, l, capacity });
    }
    let mut cells = r_cells(k);
    cells.extend(r_extension(k).take(l as usize));
    ConstructionReport::checked(
        Family::RExt,
        k,
        l,
        cells,
        r_tiles(k) + l,
        r_holes(k) + l / 2,
    )
}

/// Smallest `n` for which `R'_n` is defined: `m_42 = 71400`.
pub fn r_prime_min_n() -> u64 {
    r_tiles(R_PRIME_MIN_K)
}

/// `(k, l)` with `k` maximal such that `m_k <= n` and `l = n - m_k`.
pub fn r_prime_params(n: u64) -> Result<(u32, u64), ConstructionError> {
    let min = r_prime_min_n();
    if n < min {
        return Err(ConstructionError::BelowDomain { n, min });
    }
    let mut k = R_PRIME_MIN_K;
    while r_tiles(k + 1) <= n {
        k += 1;
    }
    if k > MAX_R_K {
        return Err(ConstructionError::Domain {
            family: Family::RPrime.name(),
            what: "n < m_61 = 150060",
            value: n,
        });
    }
    Ok((k, n - r_tiles(k)))
}

pub fn build_r_prime(n: u64) -> Result<ConstructionReport, ConstructionError> {
    let (k, l) = r_prime_params(n)?;
    let mut report = build_r_ext(k, l)?;
    report.family = Family::RPrime;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_small_levels() {
        let s1 = build_s(1).unwrap();
        assert_eq!(s1.polyomino.render_ascii(), "###\n#.#\n###");
        for (k, tiles, holes) in [(1, 8, 1), (2, 20, 5), (3, 60, 21), (4, 204, 85)] {
            let r = build_s(k).unwrap();
            assert_eq!((r.tiles(), r.holes), (tiles, holes), "k = {k}");
        }
        let s2 = build_s(2).unwrap().polyomino;
        assert_eq!(s2.render_ascii(), "#####\n#.#.#\n##.##\n#.#.#\n#####");
    }

    #[test]
    fn a_small_levels() {
        for (k, tiles, holes) in [(1, 7, 1), (2, 19, 5), (3, 59, 21)] {
            let r = build_a(k).unwrap();
            assert_eq!((r.tiles(), r.holes), (tiles, holes), "k = {k}");
        }
        assert_eq!(build_a(1).unwrap().polyomino.render_ascii(), ".##\n#.#\n###");
    }

    #[test]
    fn k_guards() {
        assert!(matches!(build_s(0), Err(ConstructionError::Domain { .. })));
        assert!(matches!(build_s(13), Err(ConstructionError::Domain { .. })));
        assert!(matches!(build_r(61), Err(ConstructionError::Domain { .. })));
    }

    #[test]
    fn r_small_levels() {
        for (k, tiles, holes) in [(1, 60, 20), (2, 200, 80), (3, 420, 180)] {
            let r = build_r(k).unwrap();
            assert_eq!((r.tiles(), r.holes), (tiles, holes), "k = {k}");
        }
    }

    #[test]
    fn r_one_with_first_pair() {
        let r = build_r_ext(1, 2).unwrap().polyomino.render_ascii();
        let expected = "\
###########..
#.#.#.#.#.##.
##.#.#.#.#.#.
###########.#
#.#.#.#.#.###
##.#.#.#.#.#.
.##########..";
        assert_eq!(r, expected);
    }

    #[test]
    fn r_extension_examples() {
        assert_eq!(
            build_r_ext(2, 0).unwrap().polyomino,
            build_r(2).unwrap().polyomino
        );
        for (l, tiles, holes) in [(2, 202, 81), (5, 205, 82), (12, 212, 86)] {
            let r = build_r_ext(2, l).unwrap();
            assert_eq!((r.tiles(), r.holes), (tiles, holes), "l = {l}");
        }
        assert_eq!(
            build_r_ext(2, 13).unwrap_err(),
            ConstructionError::ExtensionCapacityExceeded {
                k: 2,
                l: 13,
                capacity: 12
            }
        );
    }

    #[test]
    fn extension_length_matches_capacity() {
        for k in 1..=6 {
            assert_eq!(r_extension(k).count() as u64, r_extension_capacity(k));
        }
    }

    #[test]
    fn r_prime_parameters() {
        assert_eq!(r_prime_params(71400).unwrap(), (42, 0));
        assert_eq!(r_prime_params(71401).unwrap(), (42, 1));
        assert_eq!(r_prime_params(74819).unwrap(), (42, 3419));
        assert_eq!(r_prime_params(74820).unwrap(), (43, 0));
        assert_eq!(
            r_prime_params(71399).unwrap_err(),
            ConstructionError::BelowDomain { n: 71399, min: 71400 }
        );
    }
}
