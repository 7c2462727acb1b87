//! Polyominoes with many holes.
//!
//! * [`grid`]: the polyomino value type, hole counting and perimeter metrics.
//! * [`constructions`]: the extremal families `S_k`, `A_k`, `R_k`, `R_{k,l}`
//!   and `R'_n`, each checked against its tile and hole counts.
//! * [`bounds`]: exact perimeter formulas and upper/lower bounds on the
//!   maximum hole count `f(n)`.
//! * [`enumeration`]: exhaustive fixed-polyomino census and the
//!   branch-and-bound search for `g(m)`.
//! * [`verify`]: the checks behind `polyholes verify`.
//! * [`cli`]: the `polyholes` command line.

pub mod grid;
pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod enumeration;
pub mod verify;
