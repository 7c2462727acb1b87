use super::{Cell, HoleComponent, Polyomino};

/// Label of a tile cell in [`Raster::labels`].
pub const TILE: u32 = u32::MAX;
/// Label of a cell in the unbounded component of the complement.
pub const EXTERIOR: u32 = 0;

/// Bounding-box raster with one ring of empty padding around the polyomino.
///
/// Cell `(x, y)` of the polyomino lives at raster column `x + 1`, row `y + 1`.
#[derive(Debug, Clone)]
pub struct Raster {
    width: usize,
    height: usize,
    tiles: Vec<bool>,
}

impl Raster {
    pub fn from_polyomino(p: &Polyomino) -> Self {
        let width = p.width() as usize + 2;
        let height = p.height() as usize + 2;
        let mut tiles = vec![false; width * height];
        for c in p.cells() {
            tiles[(c.y as usize + 1) * width + c.x as usize + 1] = true;
        }
        Raster {
            width,
            height,
            tiles,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn is_tile(&self, idx: usize) -> bool {
        self.tiles[idx]
    }

    pub fn index(&self, c: Cell) -> usize {
        (c.y as usize + 1) * self.width + c.x as usize + 1
    }

    fn cell_at(&self, idx: usize) -> Cell {
        Cell::new(
            (idx % self.width) as i32 - 1,
            (idx / self.width) as i32 - 1,
        )
    }

    /// In-bounds 4-neighbors of a raster index.
    fn for_each_neighbor(&self, idx: usize, mut f: impl FnMut(usize)) {
        let (x, y) = (idx % self.width, idx / self.width);
        if x > 0 {
            f(idx - 1);
        }
        if x + 1 < self.width {
            f(idx + 1);
        }
        if y > 0 {
            f(idx - self.width);
        }
        if y + 1 < self.height {
            f(idx + self.width);
        }
    }

    pub fn tiles_connected(&self) -> bool {
        let Some(start) = self.tiles.iter().position(|&t| t) else {
            return false;
        };
        let total = self.tiles.iter().filter(|&&t| t).count();
        let mut seen = vec![false; self.tiles.len()];
        let mut stack = vec![start];
        seen[start] = true;
        let mut reached = 0;
        while let Some(i) = stack.pop() {
            reached += 1;
            self.for_each_neighbor(i, |j| {
                if self.tiles[j] && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            });
        }
        reached == total
    }

    /// Labels every raster cell: [`TILE`], [`EXTERIOR`], or `1..=holes` for
    /// the hole it belongs to. Holes are numbered in canonical order of their
    /// first cell. Returns the labels and the number of holes.
    ///
    /// The padding ring is all empty and 4-connected, so flooding from the
    /// corner reaches the whole unbounded component.
    pub fn labels(&self) -> (Vec<u32>, u32) {
        const UNSEEN: u32 = u32::MAX - 1;
        let mut labels: Vec<u32> = self
            .tiles
            .iter()
            .map(|&t| if t { TILE } else { UNSEEN })
            .collect();
        let mut stack = Vec::new();
        let mut flood = |labels: &mut Vec<u32>, start: usize, label: u32| {
            labels[start] = label;
            stack.push(start);
            while let Some(i) = stack.pop() {
                self.for_each_neighbor(i, |j| {
                    if labels[j] == UNSEEN {
                        labels[j] = label;
                        stack.push(j);
                    }
                });
            }
        };
        flood(&mut labels, 0, EXTERIOR);
        let mut holes = 0;
        for i in 0..labels.len() {
            if labels[i] == UNSEEN {
                holes += 1;
                flood(&mut labels, i, holes);
            }
        }
        (labels, holes)
    }

    pub fn hole_components(&self) -> Vec<HoleComponent> {
        let (labels, holes) = self.labels();
        let mut comps = vec![Vec::new(); holes as usize];
        for (i, &l) in labels.iter().enumerate() {
            if l != TILE && l != EXTERIOR {
                comps[l as usize - 1].push(self.cell_at(i));
            }
        }
        comps.into_iter().map(HoleComponent::new).collect()
    }
}
