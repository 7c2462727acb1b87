use super::raster::{Raster, EXTERIOR, TILE};
use super::{Cell, Polyomino};

/// The cells of one bounded component of the complement, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HoleComponent {
    cells: Vec<Cell>,
}

impl HoleComponent {
    pub(crate) fn new(mut cells: Vec<Cell>) -> Self {
        cells.sort_unstable();
        HoleComponent { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

/// Everything measured on a single polyomino.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricsReport {
    /// Tile count.
    pub n: u64,
    pub holes: u64,
    pub hole_components: Vec<HoleComponent>,
    /// Perimeter: unit edges with a tile on exactly one side.
    pub p: u64,
    /// Unit edges shared by two tiles.
    pub b: u64,
    /// Perimeter edges whose empty side lies in a hole.
    pub p_h: u64,
    /// Perimeter edges whose empty side lies in the unbounded component.
    pub p_o: u64,
    pub bbox: (u32, u32),
}

impl MetricsReport {
    pub(crate) fn compute(poly: &Polyomino) -> Self {
        let raster = Raster::from_polyomino(poly);
        let (labels, holes) = raster.labels();
        let w = raster.width();
        let (mut p, mut b, mut p_h, mut p_o) = (0u64, 0u64, 0u64, 0u64);
        for &c in poly.cells() {
            let i = raster.index(c);
            for j in [i + 1, i - 1, i + w, i - w] {
                match labels[j] {
                    TILE => b += 1,
                    EXTERIOR => {
                        p += 1;
                        p_o += 1;
                    }
                    _ => {
                        p += 1;
                        p_h += 1;
                    }
                }
            }
        }
        let mut comps = vec![Vec::new(); holes as usize];
        for (i, &l) in labels.iter().enumerate() {
            if l != TILE && l != EXTERIOR {
                comps[l as usize - 1].push(Cell::new((i % w) as i32 - 1, (i / w) as i32 - 1));
            }
        }
        MetricsReport {
            n: poly.len() as u64,
            holes: u64::from(holes),
            hole_components: comps.into_iter().map(HoleComponent::new).collect(),
            p,
            // every shared edge was seen from both sides
            b: b / 2,
            p_h,
            p_o,
            bbox: (poly.width(), poly.height()),
        }
    }

    /// `4n = p + 2b` and `p = p_o + p_h`.
    pub fn identities_hold(&self) -> bool {
        4 * self.n == self.p + 2 * self.b && self.p == self.p_o + self.p_h
    }

    /// The metric values without the hole cell lists, for equality checks
    /// between congruent shapes.
    pub fn summary(&self) -> (u64, u64, u64, u64, u64, u64) {
        (self.n, self.holes, self.p, self.b, self.p_h, self.p_o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(cells: &[(i32, i32)]) -> Polyomino {
        Polyomino::from_cells(cells.iter().map(|&(x, y)| Cell::new(x, y))).unwrap()
    }

    fn ring3() -> Polyomino {
        poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2)])
    }

    #[test]
    fn single_tile() {
        let m = Polyomino::single().metrics();
        assert_eq!(m.summary(), (1, 0, 4, 0, 0, 4));
        assert_eq!(m.bbox, (1, 1));
    }

    #[test]
    fn ring_has_one_hole_and_perimeter_16() {
        let m = ring3().metrics();
        assert_eq!(m.holes, 1);
        assert_eq!(m.hole_components[0].cells(), &[Cell::new(1, 1)]);
        assert_eq!(m.p, 16);
        assert_eq!(m.b, 8);
        assert_eq!(m.p_h, 4);
        assert_eq!(m.p_o, 12);
        assert!(m.identities_hold());
    }

    #[test]
    fn bar_of_seven() {
        let m = poly(&(0..7).map(|x| (x, 0)).collect::<Vec<_>>()).metrics();
        assert_eq!((m.b, m.p, m.holes), (6, 16, 0));
    }

    #[test]
    fn seven_tile_ring_without_corner() {
        let p = poly(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (1, 2), (2, 2)]);
        let (count, comps) = p.holes();
        assert_eq!(count, 1);
        assert_eq!(comps[0].cells(), &[Cell::new(1, 1)]);
    }

    #[test]
    fn corner_pinched_cells_are_separate_holes() {
        // Two empty cells (1,1) and (2,2) touch only at a corner; tiles
        // (2,1) and (1,2) pinch that corner shut.
        let p = poly(&[
            (0, 0),
            (1, 0),
            (2, 0),
            (0, 1),
            (2, 1),
            (3, 1),
            (0, 2),
            (1, 2),
            (3, 2),
            (1, 3),
            (2, 3),
        ]);
        // Ten tiles cannot enclose two holes, so this needs eleven.
        assert_eq!(p.len(), 11);
        let (count, comps) = p.holes();
        assert_eq!(count, 2);
        assert_eq!(comps[0].cells(), &[Cell::new(1, 1)]);
        assert_eq!(comps[1].cells(), &[Cell::new(2, 2)]);
    }

    #[test]
    fn multi_cell_hole() {
        // 4x3 frame around a 2x1 hole
        let mut cells = Vec::new();
        for y in 0..3 {
            for x in 0..4 {
                if !(y == 1 && (x == 1 || x == 2)) {
                    cells.push((x, y));
                }
            }
        }
        let m = poly(&cells).metrics();
        assert_eq!(m.holes, 1);
        assert_eq!(m.hole_components[0].len(), 2);
        assert_eq!(m.p_h, 6);
        assert!(m.identities_hold());
    }
}
