//! Polyomino value type and the metrics computed on it.
//!
//! A [`Polyomino`] is a finite, edge-connected set of unit cells on the
//! integer lattice. Cells are closed unit squares, so the polyomino's own
//! connectivity and the connectivity of its complement are both 4-adjacency:
//! two empty cells that only touch at a corner pinched between two tiles lie
//! in different components of the complement.

mod bitrows;
mod metrics;
mod random;
mod raster;
mod text;

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

pub use bitrows::hole_count_rows;
pub use metrics::{HoleComponent, MetricsReport};
pub use random::random_polyomino;
pub use raster::Raster;
pub use text::ParseError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GridError {
    #[error("no cells given")]
    EmptyInput,
    #[error("cells do not form an edge-connected shape")]
    Disconnected,
    #[error("duplicate cell ({}, {})", .0.x, .0.y)]
    DuplicateCell(Cell),
    #[error("coordinate span exceeds the 32-bit range")]
    CoordinateOverflow,
}

/// A unit square of the lattice, identified by its lower-left corner.
///
/// Ordered by row first (`y`), then column (`x`), which is the canonical
/// order cells are stored and serialized in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    /// Rotates counter-clockwise by `quarter_turns` quarter turns about the
    /// center of `pivot`. Rotation about a tile center keeps lattice cells on
    /// lattice cells.
    pub fn rotated_about(self, pivot: Cell, quarter_turns: u32) -> Cell {
        let (mut dx, mut dy) = (self.x - pivot.x, self.y - pivot.y);
        for _ in 0..quarter_turns % 4 {
            (dx, dy) = (-dy, dx);
        }
        Cell::new(pivot.x + dx, pivot.y + dy)
    }

    pub fn neighbors(self) -> [Cell; 4] {
        let Cell { x, y } = self;
        [
            Cell::new(x + 1, y),
            Cell::new(x - 1, y),
            Cell::new(x, y + 1),
            Cell::new(x, y - 1),
        ]
    }
}

impl Ord for Cell {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Cell {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The eight symmetries of the square lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Identity,
    Rotate90,
    Rotate180,
    Rotate270,
    /// Mirror across a vertical axis.
    FlipHorizontal,
    /// Mirror across a horizontal axis.
    FlipVertical,
    /// Mirror across the main diagonal.
    Transpose,
    /// Mirror across the anti-diagonal.
    AntiTranspose,
}

impl Symmetry {
    pub const ALL: [Symmetry; 8] = [
        Symmetry::Identity,
        Symmetry::Rotate90,
        Symmetry::Rotate180,
        Symmetry::Rotate270,
        Symmetry::FlipHorizontal,
        Symmetry::FlipVertical,
        Symmetry::Transpose,
        Symmetry::AntiTranspose,
    ];

    pub fn apply(self, c: Cell) -> Cell {
        let Cell { x, y } = c;
        let (x, y) = match self {
            Symmetry::Identity => (x, y),
            Symmetry::Rotate90 => (-y, x),
            Symmetry::Rotate180 => (-x, -y),
            Symmetry::Rotate270 => (y, -x),
            Symmetry::FlipHorizontal => (-x, y),
            Symmetry::FlipVertical => (x, -y),
            Symmetry::Transpose => (y, x),
            Symmetry::AntiTranspose => (-y, -x),
        };
        Cell::new(x, y)
    }
}

/// A fixed polyomino: normalized so that the minimum `x` and `y` are zero,
/// cells sorted in canonical (row, column) order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polyomino {
    cells: Vec<Cell>,
    width: u32,
    height: u32,
}

impl Polyomino {
    /// Validates and normalizes an arbitrary list of cells.
    pub fn from_cells<I>(cells: I) -> Result<Self, GridError>
    where
        I: IntoIterator<Item = Cell>,
    {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(GridError::EmptyInput);
        }
        cells.sort_unstable();
        if let Some(w) = cells.windows(2).find(|w| w[0] == w[1]) {
            return Err(GridError::DuplicateCell(w[0]));
        }
        let poly = Self::normalize_sorted(cells)?;
        if !Raster::from_polyomino(&poly).tiles_connected() {
            return Err(GridError::Disconnected);
        }
        Ok(poly)
    }

    /// Translation plus re-sort of a deduplicated, connected cell list.
    /// Connectivity is the caller's responsibility.
    pub(crate) fn from_connected_cells(mut cells: Vec<Cell>) -> Result<Self, GridError> {
        cells.sort_unstable();
        Self::normalize_sorted(cells)
    }

    fn normalize_sorted(mut cells: Vec<Cell>) -> Result<Self, GridError> {
        let min_y = i64::from(cells[0].y);
        let max_y = i64::from(cells[cells.len() - 1].y);
        let (min_x, max_x) = cells.iter().fold((i64::MAX, i64::MIN), |(lo, hi), c| {
            (lo.min(i64::from(c.x)), hi.max(i64::from(c.x)))
        });
        let width = max_x - min_x + 1;
        let height = max_y - min_y + 1;
        if width > i64::from(i32::MAX) || height > i64::from(i32::MAX) {
            return Err(GridError::CoordinateOverflow);
        }
        for c in &mut cells {
            c.x = (i64::from(c.x) - min_x) as i32;
            c.y = (i64::from(c.y) - min_y) as i32;
        }
        Ok(Polyomino {
            cells,
            width: width as u32,
            height: height as u32,
        })
    }

    pub fn single() -> Self {
        Polyomino {
            cells: vec![Cell::new(0, 0)],
            width: 1,
            height: 1,
        }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of tiles.
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    pub fn transform(&self, g: Symmetry) -> Polyomino {
        let cells = self.cells.iter().map(|&c| g.apply(c)).collect();
        Self::from_connected_cells(cells).expect("symmetry preserves the bounding box")
    }

    /// The raw (un-normalized) image of every cell under a counter-clockwise
    /// rotation about the center of `pivot`.
    pub fn rotated_cells(&self, pivot: Cell, quarter_turns: u32) -> Vec<Cell> {
        self.cells
            .iter()
            .map(|c| c.rotated_about(pivot, quarter_turns))
            .collect()
    }

    /// Rotation about the center of cell `pivot`, re-normalized. The pivot
    /// does not have to be a tile.
    pub fn rotate_about_tile_center(&self, pivot: Cell, quarter_turns: u32) -> Polyomino {
        Self::from_connected_cells(self.rotated_cells(pivot, quarter_turns))
            .expect("rotation preserves the bounding box")
    }

    pub fn metrics(&self) -> MetricsReport {
        MetricsReport::compute(self)
    }

    /// Number of holes together with the cells of each hole.
    pub fn holes(&self) -> (usize, Vec<HoleComponent>) {
        let comps = Raster::from_polyomino(self).hole_components();
        (comps.len(), comps)
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring3() -> Vec<Cell> {
        (0..3)
            .flat_map(|y| (0..3).map(move |x| Cell::new(x, y)))
            .filter(|&c| c != Cell::new(1, 1))
            .collect()
    }

    #[test]
    fn single_tile_normalizes() {
        let p = Polyomino::from_cells([Cell::new(5, 5)]).unwrap();
        assert_eq!(p.cells(), &[Cell::new(0, 0)]);
        assert_eq!(p, Polyomino::single());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Polyomino::from_cells([Cell::new(0, 0), Cell::new(2, 0)]),
            Err(GridError::Disconnected)
        );
        assert_eq!(
            Polyomino::from_cells(Vec::<Cell>::new()),
            Err(GridError::EmptyInput)
        );
        assert_eq!(
            Polyomino::from_cells([Cell::new(0, 0), Cell::new(1, 0), Cell::new(0, 0)]),
            Err(GridError::DuplicateCell(Cell::new(0, 0)))
        );
        assert_eq!(
            Polyomino::from_cells([Cell::new(i32::MIN, 0), Cell::new(i32::MAX, 0)]),
            Err(GridError::CoordinateOverflow)
        );
    }

    #[test]
    fn diagonal_contact_is_not_connected() {
        let r = Polyomino::from_cells([Cell::new(0, 0), Cell::new(1, 1)]);
        assert_eq!(r, Err(GridError::Disconnected));
    }

    #[test]
    fn ring_is_valid_and_sorted() {
        let mut cells = ring3();
        cells.reverse();
        let p = Polyomino::from_cells(cells.iter().map(|c| Cell::new(c.x - 7, c.y + 3))).unwrap();
        assert_eq!(p.len(), 8);
        assert!(p.cells().windows(2).all(|w| w[0] < w[1]));
        assert_eq!((p.width(), p.height()), (3, 3));
        assert!(!p.contains(Cell::new(1, 1)));
    }

    #[test]
    fn quarter_turn_geometry() {
        let pivot = Cell::new(4, -2);
        assert_eq!(pivot.rotated_about(pivot, 1), pivot);
        assert_eq!(Cell::new(5, -2).rotated_about(pivot, 1), Cell::new(4, -1));
        let c = Cell::new(9, 3);
        assert_eq!(c.rotated_about(pivot, 4), c);
        let mut d = c;
        for _ in 0..4 {
            d = d.rotated_about(pivot, 1);
        }
        assert_eq!(d, c);
    }

    #[test]
    fn rotate_polyomino_four_times_is_identity() {
        let p = Polyomino::from_cells([
            Cell::new(0, 0),
            Cell::new(1, 0),
            Cell::new(2, 0),
            Cell::new(2, 1),
        ])
        .unwrap();
        let pivot = Cell::new(2, 1);
        let mut q = p.clone();
        for _ in 0..4 {
            q = q.rotate_about_tile_center(pivot, 1);
        }
        assert_eq!(q, p);
        assert_eq!(
            Polyomino::single().rotate_about_tile_center(Cell::new(0, 0), 3),
            Polyomino::single()
        );
    }

    #[test]
    fn domino_rotation() {
        let h = Polyomino::from_cells([Cell::new(0, 0), Cell::new(1, 0)]).unwrap();
        let v = h.transform(Symmetry::Rotate90);
        assert_eq!(v.cells(), &[Cell::new(0, 0), Cell::new(0, 1)]);
        assert_eq!(h.transform(Symmetry::Identity), h);
    }

    #[test]
    fn symmetries_are_distinct_on_an_l_tetromino() {
        let l = Polyomino::from_cells([
            Cell::new(0, 0),
            Cell::new(1, 0),
            Cell::new(0, 1),
            Cell::new(0, 2),
        ])
        .unwrap();
        let images: std::collections::HashSet<_> =
            Symmetry::ALL.iter().map(|&g| l.transform(g)).collect();
        assert_eq!(images.len(), 8);
    }
}
