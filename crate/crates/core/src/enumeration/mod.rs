//! Exhaustive enumeration of fixed polyominoes, the hole census built on it,
//! and the least-size search for a given hole count.

mod naive;
mod redelmeier;
mod search;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::grid::hole_count_rows;

pub use naive::{naive_count_and_f, naive_levels, NAIVE_CAP};
pub use redelmeier::{default_shard_depth, walk_parallel, Animal, Step};
pub use search::{search_g, Pruning, SearchOptions, SearchOutcome, SEARCH_CAP};

use redelmeier::Walker;

/// Hard cap on the size accepted by [`enumerate_fixed`] and [`census`].
pub const ENUMERATION_CAP: usize = 18;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EnumError {
    #[error("size {n} is outside 1..={cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("census up to n={max_n} never reaches {m} holes")]
    InsufficientCensus { m: u32, max_n: usize },
    #[error("node budget {budget} exhausted searching for {m} holes (reached n={n})")]
    SearchBudgetExceeded { m: u32, budget: u64, n: usize },
    #[error("thread pool: {0}")]
    ThreadPool(String),
    #[error("internal: {0}")]
    Internal(String),
}

fn check_size(n: usize, cap: usize) -> Result<(), EnumError> {
    if (1..=cap).contains(&n) {
        Ok(())
    } else {
        Err(EnumError::CapExceeded { n, cap })
    }
}

/// Calls `visit` once for every fixed `n`-omino, in a deterministic order,
/// and returns how many there were.
pub fn enumerate_fixed<F>(n: usize, mut visit: F) -> Result<u64, EnumError>
where
    F: FnMut(&Animal<'_>),
{
    check_size(n, ENUMERATION_CAP)?;
    let mut count = 0u64;
    Walker::new(n).run(&mut |a: &Animal<'_>| {
        if a.size() == n {
            count += 1;
            visit(a);
        }
        Step::Descend
    });
    Ok(count)
}

/// Number of fixed `n`-ominoes, counted on `workers` threads.
pub fn count_fixed(n: usize, workers: usize) -> Result<u64, EnumError> {
    check_size(n, ENUMERATION_CAP)?;
    let parts = walk_parallel(
        n,
        workers,
        default_shard_depth(n),
        || 0u64,
        |c: &mut u64, a: &Animal<'_>| {
            if a.size() == n {
                *c += 1
            }
        },
    )?;
    Ok(parts.into_iter().sum())
}

/// Census of one size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusRow {
    pub n: usize,
    pub total: u64,
    pub counts_by_holes: BTreeMap<u32, u64>,
    pub f_n: u32,
    pub min_perimeter: u32,
    pub max_perimeter: u32,
    /// Smallest perimeter among polyominoes with at least one hole.
    pub min_holed_perimeter: Option<u32>,
    /// Smallest shared-edge count, and how many polyominoes attain it.
    pub min_shared_edges: u32,
    pub min_shared_edges_count: u64,
    /// Polyominoes whose flood-fill hole count disagreed with the Euler
    /// characteristic. Always zero unless something is broken.
    pub euler_mismatches: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTable {
    pub max_n: usize,
    pub rows: Vec<CensusRow>,
}

impl EnumerationTable {
    pub fn row(&self, n: usize) -> Option<&CensusRow> {
        n.checked_sub(1).and_then(|i| self.rows.get(i))
    }

    pub fn f(&self, n: usize) -> Option<u32> {
        self.row(n).map(|r| r.f_n)
    }

    /// CSV with header `n,total,holes_0,...,holes_F,f,min_perimeter`, where
    /// `F` is the largest hole count in the table.
    pub fn to_csv(&self) -> String {
        let top = self.rows.iter().map(|r| r.f_n).max().unwrap_or(0);
        let mut out = String::from("n,total");
        for h in 0..=top {
            write!(out, ",holes_{h}").unwrap();
        }
        out.push_str(",f,min_perimeter\n");
        for r in &self.rows {
            write!(out, "{},{}", r.n, r.total).unwrap();
            for h in 0..=top {
                write!(out, ",{}", r.counts_by_holes.get(&h).copied().unwrap_or(0)).unwrap();
            }
            writeln!(out, ",{},{}", r.f_n, r.min_perimeter).unwrap();
        }
        out
    }
}

#[derive(Debug, Clone)]
struct Tally {
    by_holes: Vec<u64>,
    min_p: u32,
    max_p: u32,
    min_holed_p: u32,
    min_b: u32,
    min_b_count: u64,
    mismatches: u64,
}

impl Tally {
    fn new() -> Self {
        Tally {
            by_holes: Vec::new(),
            min_p: u32::MAX,
            max_p: 0,
            min_holed_p: u32::MAX,
            min_b: u32::MAX,
            min_b_count: 0,
            mismatches: 0,
        }
    }

    fn add(&mut self, a: &Animal<'_>) {
        let h = hole_count_rows(a.rows());
        if h != a.euler_holes() {
            self.mismatches += 1;
        }
        let h = h as usize;
        if self.by_holes.len() <= h {
            self.by_holes.resize(h + 1, 0);
        }
        self.by_holes[h] += 1;
        let p = a.perimeter();
        self.min_p = self.min_p.min(p);
        self.max_p = self.max_p.max(p);
        if h > 0 {
            self.min_holed_p = self.min_holed_p.min(p);
        }
        let b = a.shared_edges();
        match b.cmp(&self.min_b) {
            std::cmp::Ordering::Less => {
                self.min_b = b;
                self.min_b_count = 1;
            }
            std::cmp::Ordering::Equal => self.min_b_count += 1,
            std::cmp::Ordering::Greater => {}
        }
    }

    fn merge(&mut self, o: &Tally) {
        if self.by_holes.len() < o.by_holes.len() {
            self.by_holes.resize(o.by_holes.len(), 0);
        }
        for (s, x) in self.by_holes.iter_mut().zip(&o.by_holes) {
            *s += x;
        }
        self.min_p = self.min_p.min(o.min_p);
        self.max_p = self.max_p.max(o.max_p);
        self.min_holed_p = self.min_holed_p.min(o.min_holed_p);
        match o.min_b.cmp(&self.min_b) {
            std::cmp::Ordering::Less => {
                self.min_b = o.min_b;
                self.min_b_count = o.min_b_count;
            }
            std::cmp::Ordering::Equal => self.min_b_count += o.min_b_count,
            std::cmp::Ordering::Greater => {}
        }
        self.mismatches += o.mismatches;
    }

    fn into_row(self, n: usize) -> CensusRow {
        let counts_by_holes: BTreeMap<u32, u64> = self
            .by_holes
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(h, &c)| (h as u32, c))
            .collect();
        CensusRow {
            n,
            total: self.by_holes.iter().sum(),
            f_n: counts_by_holes.keys().next_back().copied().unwrap_or(0),
            counts_by_holes,
            min_perimeter: self.min_p,
            max_perimeter: self.max_p,
            min_holed_perimeter: (self.min_holed_p != u32::MAX).then_some(self.min_holed_p),
            min_shared_edges: self.min_b,
            min_shared_edges_count: self.min_b_count,
            euler_mismatches: self.mismatches,
        }
    }
}

/// Census of every size `1..=max_n`, walked once on `workers` threads.
/// Hole counts come from the row flood fill; the result does not depend on
/// `workers`.
pub fn census(max_n: usize, workers: usize) -> Result<EnumerationTable, EnumError> {
    census_with_depth(max_n, workers, default_shard_depth(max_n))
}

/// [`census`] with an explicit shard depth.
pub fn census_with_depth(
    max_n: usize,
    workers: usize,
    shard_depth: usize,
) -> Result<EnumerationTable, EnumError> {
    check_size(max_n, ENUMERATION_CAP)?;
    let parts = walk_parallel(
        max_n,
        workers,
        shard_depth,
        || vec![Tally::new(); max_n],
        |t: &mut Vec<Tally>, a: &Animal<'_>| t[a.size() - 1].add(a),
    )?;
    let mut iter = parts.into_iter();
    let mut total = iter.next().expect("prefix tally");
    for part in iter {
        for (s, o) in total.iter_mut().zip(&part) {
            s.merge(o);
        }
    }
    let rows = total
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.into_row(i + 1))
        .collect();
    Ok(EnumerationTable { max_n, rows })
}

/// Least size with a given number of holes, for each `m` in `1..=max_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GTable {
    pub per_m: BTreeMap<u32, usize>,
}

impl GTable {
    pub fn g(&self, m: u32) -> Option<usize> {
        self.per_m.get(&m).copied()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("m,g\n");
        for (m, g) in &self.per_m {
            writeln!(out, "{m},{g}").unwrap();
        }
        out
    }
}

pub fn g_table(max_m: u32, table: &EnumerationTable) -> Result<GTable, EnumError> {
    let mut per_m = BTreeMap::new();
    for m in 1..=max_m {
        let g = table
            .rows
            .iter()
            .find(|r| r.f_n >= m)
            .map(|r| r.n)
            .ok_or(EnumError::InsufficientCensus { m, max_n: table.max_n })?;
        per_m.insert(m, g);
    }
    Ok(GTable { per_m })
}
