//! Redelmeier's algorithm for fixed polyominoes.
//!
//! Cells live on the half plane `y > 0 or (y = 0 and x >= 0)`, so every
//! polyomino is generated exactly once, rooted at its lowest-leftmost cell.
//! The walker keeps an untried-cell stack; a cell popped from it at some
//! level stays excluded for the rest of that level, which is what makes the
//! enumeration duplicate-free.
//!
//! Alongside the cells the walker tracks the shared-edge count `b` and the
//! number of distinct lattice vertices `v`, which gives the hole count in
//! O(1) through the Euler characteristic of the closed squares:
//! `holes = 1 - (v - e + n)` with `e = 4n - b` distinct edges.

use rayon::prelude::*;

use crate::grid::{hole_count_rows, Cell, Polyomino};

use super::EnumError;

/// What the walker should do after visiting a node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Keep extending this polyomino.
    Descend,
    /// Skip every extension of this polyomino.
    Prune,
    /// Abandon the whole walk.
    Stop,
}

/// Read-only view of the polyomino the walker is currently at.
pub struct Animal<'a> {
    walker: &'a Walker,
}

impl Animal<'_> {
    pub fn size(&self) -> usize {
        self.walker.cells.len()
    }

    /// Edges shared by two tiles.
    pub fn shared_edges(&self) -> u32 {
        self.walker.shared
    }

    pub fn perimeter(&self) -> u32 {
        4 * self.size() as u32 - 2 * self.walker.shared
    }

    /// Hole count from the tracked Euler characteristic.
    pub fn euler_holes(&self) -> u32 {
        let n = self.size() as u32;
        1 + 3 * n - self.walker.shared - self.walker.vertices
    }

    /// Hole count by padded flood fill on the row bitmasks.
    pub fn holes(&self) -> u32 {
        hole_count_rows(&self.walker.rows)
    }

    /// Row `y` has the tile at `x` on bit `x + n`, `n` being the walk's size
    /// limit.
    pub fn rows(&self) -> &[u64] {
        &self.walker.rows
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.walker.cells.iter().map(|&i| self.walker.cell_of(i))
    }

    pub fn to_polyomino(&self) -> Polyomino {
        Polyomino::from_connected_cells(self.cells().collect())
            .expect("walker cells are connected and small")
    }
}

/// A resumable subtree: the walker state right after adding the last cell
/// of `cells`, with `untried` the child's untried stack.
#[derive(Debug, Clone)]
pub(crate) struct Task {
    cells: Vec<u16>,
    untried: Vec<u16>,
    marked: Vec<u16>,
}

pub(crate) struct Walker {
    limit: usize,
    width: usize,
    seen: Vec<bool>,
    tile: Vec<bool>,
    vertex_refs: Vec<u8>,
    rows: Vec<u64>,
    cells: Vec<u16>,
    shared: u32,
    vertices: u32,
    /// Segments of untried cells, one per recursion level.
    untried: Vec<u16>,
    marked: Vec<u16>,
    split_at: usize,
    tasks: Vec<Task>,
}

impl Walker {
    /// Largest size the row bitmasks can hold.
    pub(crate) const MAX_LIMIT: usize = 30;

    pub(crate) fn new(limit: usize) -> Self {
        assert!((1..=Self::MAX_LIMIT).contains(&limit));
        // columns x + limit in 0..=2*limit, rows y + 1 in 0..=limit+1; the
        // outermost ring is never valid
        let width = 2 * limit + 1;
        let height = limit + 2;
        let mut seen = vec![false; width * height];
        for r in 0..height {
            for col in 0..width {
                let (x, y) = (col as i64 - limit as i64, r as i64 - 1);
                let border = col == 0 || col == width - 1 || r == 0 || r == height - 1;
                if border || (y == 0 && x < 0) {
                    seen[r * width + col] = true;
                }
            }
        }
        Walker {
            limit,
            width,
            seen,
            tile: vec![false; width * height],
            vertex_refs: vec![0; (width + 1) * (height + 1)],
            rows: vec![0; limit],
            cells: Vec::with_capacity(limit),
            shared: 0,
            vertices: 0,
            untried: Vec::with_capacity(limit * limit * 4),
            marked: Vec::with_capacity(limit * 4),
            split_at: usize::MAX,
            tasks: Vec::new(),
        }
    }

    fn origin(&self) -> u16 {
        (self.width + self.limit) as u16
    }

    fn cell_of(&self, idx: u16) -> Cell {
        let idx = idx as usize;
        Cell::new(
            (idx % self.width) as i32 - self.limit as i32,
            (idx / self.width) as i32 - 1,
        )
    }

    fn corners(&self, idx: usize) -> [usize; 4] {
        let (r, col) = (idx / self.width, idx % self.width);
        let vw = self.width + 1;
        let base = r * vw + col;
        [base, base + 1, base + vw, base + vw + 1]
    }

    fn push_cell(&mut self, c: u16) {
        let i = c as usize;
        let w = self.width;
        let shared = [i - 1, i + 1, i - w, i + w]
            .iter()
            .filter(|&&j| self.tile[j])
            .count() as u32;
        self.shared += shared;
        for v in self.corners(i) {
            if self.vertex_refs[v] == 0 {
                self.vertices += 1;
            }
            self.vertex_refs[v] += 1;
        }
        self.tile[i] = true;
        let cell = self.cell_of(c);
        self.rows[cell.y as usize] |= 1 << (cell.x + self.limit as i32);
        self.cells.push(c);
    }

    fn pop_cell(&mut self) {
        let c = self.cells.pop().expect("nonempty");
        let i = c as usize;
        let w = self.width;
        self.tile[i] = false;
        let shared = [i - 1, i + 1, i - w, i + w]
            .iter()
            .filter(|&&j| self.tile[j])
            .count() as u32;
        self.shared -= shared;
        for v in self.corners(i) {
            self.vertex_refs[v] -= 1;
            if self.vertex_refs[v] == 0 {
                self.vertices -= 1;
            }
        }
        let cell = self.cell_of(c);
        self.rows[cell.y as usize] &= !(1 << (cell.x + self.limit as i32));
    }

    /// Pushes the not-yet-seen neighbors of `c` onto the untried stack after
    /// a copy of `untried[lo..hi]`, and returns the new segment bounds.
    fn child_segment(&mut self, c: u16, lo: usize, hi: usize) -> (usize, usize) {
        let start = self.untried.len();
        self.untried.extend_from_within(lo..hi);
        let i = c as usize;
        let w = self.width;
        for j in [i + 1, i + w, i - 1, i - w] {
            if !self.seen[j] {
                self.seen[j] = true;
                self.untried.push(j as u16);
                self.marked.push(j as u16);
            }
        }
        (start, self.untried.len())
    }

    fn unmark_to(&mut self, len: usize) {
        for &j in &self.marked[len..] {
            self.seen[j as usize] = false;
        }
        self.marked.truncate(len);
    }

    /// Walks the subtree below the current state. Returns `false` if the
    /// visitor stopped the walk.
    fn walk<V: FnMut(&Animal<'_>) -> Step>(&mut self, lo: usize, hi: usize, visit: &mut V) -> bool {
        for i in (lo..hi).rev() {
            let c = self.untried[i];
            self.push_cell(c);
            let step = visit(&Animal { walker: self });
            let mut go_on = true;
            match step {
                Step::Stop => go_on = false,
                Step::Prune => {}
                Step::Descend if self.cells.len() < self.limit => {
                    let marked = self.marked.len();
                    let (start, end) = self.child_segment(c, lo, i);
                    if self.cells.len() == self.split_at {
                        self.tasks.push(Task {
                            cells: self.cells.clone(),
                            untried: self.untried[start..end].to_vec(),
                            marked: self.marked.clone(),
                        });
                    } else {
                        go_on = self.walk(start, end, visit);
                    }
                    self.untried.truncate(start);
                    self.unmark_to(marked);
                }
                Step::Descend => {}
            }
            self.pop_cell();
            if !go_on {
                return false;
            }
        }
        true
    }

    /// Walks every polyomino up to the size limit.
    pub(crate) fn run<V: FnMut(&Animal<'_>) -> Step>(&mut self, visit: &mut V) -> bool {
        let o = self.origin();
        self.seen[o as usize] = true;
        self.marked.push(o);
        self.untried.push(o);
        let done = self.walk(0, 1, visit);
        self.untried.clear();
        self.unmark_to(0);
        done
    }

    /// Walks polyominoes up to size `depth` and returns the subtrees below
    /// the size-`depth` nodes as tasks, in walk order.
    pub(crate) fn split<V: FnMut(&Animal<'_>) -> Step>(
        &mut self,
        depth: usize,
        visit: &mut V,
    ) -> Vec<Task> {
        self.split_at = depth;
        self.run(visit);
        self.split_at = usize::MAX;
        std::mem::take(&mut self.tasks)
    }

    pub(crate) fn resume<V: FnMut(&Animal<'_>) -> Step>(&mut self, task: &Task, visit: &mut V) -> bool {
        for &j in &task.marked {
            self.seen[j as usize] = true;
        }
        self.marked.extend_from_slice(&task.marked);
        for &c in &task.cells {
            self.push_cell(c);
        }
        self.untried.extend_from_slice(&task.untried);
        let done = self.walk(0, task.untried.len(), visit);
        while !self.cells.is_empty() {
            self.pop_cell();
        }
        self.untried.clear();
        self.unmark_to(0);
        done
    }
}

/// Default prefix depth at which the walk is cut into independent shards.
pub fn default_shard_depth(limit: usize) -> usize {
    limit.saturating_sub(1).clamp(1, 6)
}

/// Walks every fixed polyomino of size at most `limit` on `workers`
/// threads. Each shard folds into its own accumulator from `init`; the
/// accumulators come back in a fixed order (the prefix first, then shards in
/// walk order), independent of the worker count.
pub fn walk_parallel<A, I, V>(
    limit: usize,
    workers: usize,
    shard_depth: usize,
    init: I,
    visit: V,
) -> Result<Vec<A>, EnumError>
where
    A: Send,
    I: Fn() -> A + Sync,
    V: Fn(&mut A, &Animal<'_>) + Sync,
{
    let depth = shard_depth.clamp(1, limit);
    let mut prefix = init();
    let mut walker = Walker::new(limit);
    let tasks = walker.split(depth, &mut |a: &Animal<'_>| {
        visit(&mut prefix, a);
        Step::Descend
    });
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| EnumError::ThreadPool(e.to_string()))?;
    let shards: Vec<A> = pool.install(|| {
        tasks
            .par_iter()
            .map_init(
                || Walker::new(limit),
                |walker, task| {
                    let mut acc = init();
                    walker.resume(task, &mut |a: &Animal<'_>| {
                        visit(&mut acc, a);
                        Step::Descend
                    });
                    acc
                },
            )
            .collect()
    });
    let mut out = Vec::with_capacity(shards.len() + 1);
    out.push(prefix);
    out.extend(shards);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(limit: usize) -> Vec<u64> {
        let mut c = vec![0u64; limit + 1];
        Walker::new(limit).run(&mut |a: &Animal<'_>| {
            c[a.size()] += 1;
            Step::Descend
        });
        c
    }

    #[test]
    fn small_fixed_counts() {
        assert_eq!(counts(8), vec![0, 1, 2, 6, 19, 63, 216, 760, 2725]);
    }

    #[test]
    fn sharded_walk_matches_sequential() {
        let seq = counts(9);
        for depth in [1, 2, 4, 8, 9] {
            let parts = walk_parallel(
                9,
                3,
                depth,
                || vec![0u64; 10],
                |acc: &mut Vec<u64>, a: &Animal<'_>| acc[a.size()] += 1,
            )
            .unwrap();
            let mut total = vec![0u64; 10];
            for p in parts {
                for (t, x) in total.iter_mut().zip(p) {
                    *t += x;
                }
            }
            assert_eq!(total, seq, "depth {depth}");
        }
    }

    #[test]
    fn euler_and_flood_fill_agree() {
        let mut checked = 0;
        Walker::new(9).run(&mut |a: &Animal<'_>| {
            assert_eq!(a.euler_holes(), a.holes());
            assert_eq!(a.perimeter() as u64, a.to_polyomino().metrics().p);
            checked += 1;
            Step::Descend
        });
        assert_eq!(checked, 1 + 2 + 6 + 19 + 63 + 216 + 760 + 2725 + 9910);
    }

    #[test]
    fn stop_ends_the_walk() {
        let mut seen = 0;
        let finished = Walker::new(6).run(&mut |_: &Animal<'_>| {
            seen += 1;
            if seen == 10 {
                Step::Stop
            } else {
                Step::Descend
            }
        });
        assert!(!finished);
        assert_eq!(seen, 10);
    }

    #[test]
    fn prune_skips_subtrees() {
        // pruning at size 3 leaves sizes 1..=3 only
        let mut c = [0u64; 6];
        Walker::new(5).run(&mut |a: &Animal<'_>| {
            c[a.size()] += 1;
            if a.size() == 3 {
                Step::Prune
            } else {
                Step::Descend
            }
        });
        assert_eq!(c, [0, 1, 2, 6, 0, 0]);
    }
}
