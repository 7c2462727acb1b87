//! Least size admitting a polyomino with a given number of holes.
//!
//! Sizes are tried upward from the smallest `n` whose upper bound allows `m`
//! holes. Each size is a depth-first Redelmeier walk to exactly `n` tiles,
//! cutting partial shapes that a completion bound says cannot reach `m`.

use crate::bounds::ub_fixed_point;
use crate::grid::Polyomino;

use super::redelmeier::Walker;
use super::{Animal, EnumError, Step};

/// Largest size the search will try.
pub const SEARCH_CAP: usize = 30;

/// Completion bound applied to partial shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Pruning {
    /// Continue only if `holes + 2*remaining >= m`. A new tile touches the
    /// shape, so it splits an empty component into at most three and raises
    /// the hole count by at most two; no witness is lost.
    #[default]
    Sound,
    /// Continue only if `holes + remaining/2 + 1 >= m`. Much faster but it
    /// can miss every least witness: for five holes it reports 20 tiles.
    Heuristic,
    /// Walk every polyomino.
    None,
}

impl Pruning {
    fn keeps(self, holes: u32, remaining: u32, m: u32) -> bool {
        match self {
            Pruning::Heuristic => holes + remaining / 2 + 1 >= m,
            Pruning::Sound => holes + 2 * remaining >= m,
            Pruning::None => true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub node_budget: u64,
    pub pruning: Pruning,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: 1_000_000_000,
            pruning: Pruning::Sound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub m: u32,
    pub g: usize,
    /// Size the search started from.
    pub start: usize,
    pub witness: Polyomino,
    /// Nodes visited over all sizes tried.
    pub nodes: u64,
}

pub fn search_g(m: u32, options: SearchOptions) -> Result<SearchOutcome, EnumError> {
    if m == 0 {
        return Err(EnumError::Internal("hole target must be at least 1".into()));
    }
    let start = (1..=SEARCH_CAP)
        .find(|&n| ub_fixed_point(n as u64) >= m as u64)
        .ok_or(EnumError::CapExceeded { n: SEARCH_CAP + 1, cap: SEARCH_CAP })?;
    let mut nodes = 0u64;
    for n in start..=SEARCH_CAP {
        let mut found = None;
        let mut over_budget = false;
        Walker::new(n).run(&mut |a: &Animal<'_>| {
            nodes += 1;
            if nodes > options.node_budget {
                over_budget = true;
                return Step::Stop;
            }
            let size = a.size();
            let holes = a.euler_holes();
            if size == n {
                if holes >= m {
                    found = Some(a.to_polyomino());
                    return Step::Stop;
                }
                return Step::Prune;
            }
            if options.pruning.keeps(holes, (n - size) as u32, m) {
                Step::Descend
            } else {
                Step::Prune
            }
        });
        if let Some(witness) = found {
            let holes = witness.metrics().holes;
            if holes != m as u64 {
                return Err(EnumError::Internal(format!(
                    "witness of size {n} has {holes} holes, expected {m}"
                )));
            }
            return Ok(SearchOutcome { m, g: n, start, witness, nodes });
        }
        if over_budget {
            return Err(EnumError::SearchBudgetExceeded { m, budget: options.node_budget, n });
        }
    }
    Err(EnumError::CapExceeded { n: SEARCH_CAP + 1, cap: SEARCH_CAP })
}
