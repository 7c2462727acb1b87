//! Check suites that recompute the main results and report one line per
//! check. Shared by the `verify` command and the acceptance tests.

use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::constructions::{self, ConstructionError, MAX_R_K, MAX_S_K};
use crate::enumeration::{self, EnumError, EnumerationTable, SearchOptions};
use crate::grid::{random_polyomino, Symmetry};

/// Least sizes with `m = 1..=8` holes.
pub const TABLE1: [usize; 8] = [7, 11, 14, 17, 19, 23, 25, 28];

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("{0}")]
    Range(String),
    #[error(transparent)]
    Enumeration(#[from] EnumError),
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {}: {}", self.name, self.detail)
    }
}

pub fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn range(what: &str, lo: u64, hi: u64, v: u64) -> Result<(), VerifyError> {
    if (lo..=hi).contains(&v) {
        Ok(())
    } else {
        Err(VerifyError::Range(format!("{what} must be in {lo}..={hi}, got {v}")))
    }
}

/// A construction that breaks its contract is a failed check, not an error.
fn built<T>(r: Result<T, ConstructionError>) -> Result<Result<T, String>, VerifyError> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(e @ ConstructionError::ContractViolation { .. }) => Ok(Err(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

/// Three checks per `k`: `S_k` and tightness at `n_k`, `A_k` at `n_k - 1`,
/// and the upper bound dropping below `h_k` at `n_k - 2`.
pub fn theorem1(k_max: u32) -> Result<Vec<Check>, VerifyError> {
    range("k-max", 1, MAX_S_K as u64, k_max as u64)?;
    let mut out = Vec::new();
    let mut prev: Option<(u64, u64)> = None;
    for k in 1..=k_max {
        let (n, h) = (bounds::nk(k), bounds::hk(k));
        out.push(match built(constructions::build_s(k))? {
            Ok(s) => {
                let (tiles, holes) = (s.tiles(), s.holes);
                let side = (1u32 << k) + 1;
                let square = s.polyomino.width() == side && s.polyomino.height() == side;
                let recurrence = prev.is_none_or(|(pt, ph)| {
                    tiles == 4 * pt - 4 * ((1 << (k - 1)) + 1) && holes == 4 * ph + 1
                });
                prev = Some((tiles, holes));
                let tight = bounds::ub_from_lb(tiles, holes);
                Check::new(
                    format!("S_{k}"),
                    tiles == n && holes == h && square && recurrence && tight == h as i64,
                    format!("tiles={tiles} holes={holes} side={side} ub_from_lb={tight} expected=({n}, {h})"),
                )
            }
            Err(e) => Check::new(format!("S_{k}"), false, e),
        });
        out.push(match built(constructions::build_a(k))? {
            Ok(a) => Check::new(
                format!("A_{k}"),
                a.tiles() == n - 1 && a.holes == h,
                format!("tiles={} holes={} expected=({}, {h})", a.tiles(), a.holes, n - 1),
            ),
            Err(e) => Check::new(format!("A_{k}"), false, e),
        });
        let below = bounds::ub_from_lb(n - 2, h);
        out.push(Check::new(
            format!("n_{k}-2"),
            below < h as i64,
            format!("ub_from_lb({}, {h}) = {below} < {h}", n - 2),
        ));
    }
    Ok(out)
}

/// The sandwich `n/2 - C1 sqrt(n) <= holes(R'_n)` and
/// `ub_from_lb(n, holes(R'_n)) <= n/2 - C2 sqrt(n)` for each `n` given.
pub fn theorem2(ns: &[u64], c1: f64, c2: f64) -> Result<Vec<Check>, VerifyError> {
    bounds::check_theorem2_constants(c1, c2)?;
    let mut out = Vec::with_capacity(ns.len());
    for &n in ns {
        let check = match bounds::theorem2_check(n, c1, c2) {
            Ok(t) => Check::new(
                format!("n={n}"),
                t.holds,
                format!(
                    "{:.3} <= holes={} and ub={} <= {:.3}",
                    t.lower, t.lb_construction, t.ub, t.upper
                ),
            ),
            Err(BoundsError::Construction(e @ ConstructionError::ContractViolation { .. })) => {
                Check::new(format!("n={n}"), false, e.to_string())
            }
            Err(e) => return Err(e.into()),
        };
        out.push(check);
    }
    Ok(out)
}

/// `m_k = 40k^2 + 20k` for each `k` in range.
pub fn m_k_values(k_lo: u32, k_hi: u32) -> Vec<u64> {
    (k_lo..=k_hi).map(constructions::r_tiles).collect()
}

/// Exact `g(m)` for `m <= m_max` (census where it reaches, sound search
/// beyond), then one-sided checks for the remaining rows of the table.
pub fn table1(
    m_max: u32,
    table: &EnumerationTable,
    search: SearchOptions,
) -> Result<Vec<Check>, VerifyError> {
    range("m-max", 1, TABLE1.len() as u64, m_max as u64)?;
    let mut out = Vec::new();
    for m in 1..=m_max {
        let expected = TABLE1[m as usize - 1];
        let (g, how) = match enumeration::g_table(m, table) {
            Ok(gt) => (gt.g(m).expect("filled"), "census".to_string()),
            Err(EnumError::InsufficientCensus { .. }) => {
                let s = enumeration::search_g(m, search)?;
                (s.g, format!("search, {} nodes", s.nodes))
            }
            Err(e) => return Err(e.into()),
        };
        out.push(Check::new(
            format!("g({m})"),
            g == expected,
            format!("{g} expected {expected} ({how})"),
        ));
    }
    for m in m_max + 1..=TABLE1.len() as u32 {
        let expected = TABLE1[m as usize - 1];
        let lower = (1..)
            .find(|&n| bounds::ub_fixed_point(n) >= m as u64)
            .expect("bound grows") as usize;
        let mut pass = lower <= expected;
        let mut detail = format!("g({m}) >= {lower} by upper bound");
        if m == 5 {
            let a2 = constructions::build_a(2)?;
            pass &= a2.holes == 5 && a2.tiles() as usize == expected;
            detail += &format!(", A_2 witness has {} tiles and {} holes", a2.tiles(), a2.holes);
        }
        out.push(Check::new(format!("g({m}) one-sided"), pass, format!("{detail}; table {expected}")));
    }
    Ok(out)
}

/// Identities on seeded random polyominoes: one line per property.
pub fn identities(samples: usize, seed: u64, max_n: usize) -> Result<Vec<Check>, VerifyError> {
    range("max-n", 1, 10_000, max_n as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut fails = [0usize; 5];
    for _ in 0..samples {
        let n = rng.random_range(1..=max_n);
        let p = random_polyomino(n, rng.random());
        let m = p.metrics();
        let props = [
            4 * m.n == m.p + 2 * m.b,
            m.p == m.p_o + m.p_h,
            m.b + 1 >= m.n,
            m.p_h >= 4 * m.holes,
            Symmetry::ALL
                .iter()
                .all(|&g| p.transform(g).metrics().summary() == m.summary()),
        ];
        for (f, ok) in fails.iter_mut().zip(props) {
            *f += usize::from(!ok);
        }
    }
    let names = ["4n = p + 2b", "p = p_o + p_h", "b >= n - 1", "p_h >= 4 holes", "symmetry invariance"];
    Ok(names
        .iter()
        .zip(fails)
        .map(|(name, f)| Check::new(*name, f == 0, format!("{}/{samples} hold", samples - f)))
        .collect())
}

/// Contracts of `R_k` for `k <= k_max` and of every `R_{k,l}` for
/// `k <= k_ext_max`.
pub fn r_family(k_max: u32, k_ext_max: u32) -> Result<Vec<Check>, VerifyError> {
    range("k-max", 1, MAX_R_K as u64, k_max as u64)?;
    range("k-ext-max", 0, MAX_R_K as u64, k_ext_max as u64)?;
    let mut out = Vec::new();
    for k in 1..=k_max {
        let (t, h) = (40 * (k as u64).pow(2) + 20 * k as u64, 20 * (k as u64).pow(2));
        out.push(match built(constructions::build_r(k))? {
            Ok(r) => Check::new(
                format!("R_{k}"),
                r.tiles() == t && r.holes == h,
                format!("tiles={} holes={} expected=({t}, {h})", r.tiles(), r.holes),
            ),
            Err(e) => Check::new(format!("R_{k}"), false, e),
        });
    }
    for k in 1..=k_ext_max {
        let cap = constructions::r_extension_capacity(k);
        let mut bad = Vec::new();
        let mut prev: Option<crate::grid::Polyomino> = None;
        for l in 0..=cap {
            match built(constructions::build_r_ext(k, l))? {
                Ok(r) => {
                    let h = 20 * (k as u64).pow(2) + l / 2;
                    let nested = prev
                        .as_ref()
                        .is_none_or(|p| p.cells().iter().all(|&c| r.polyomino.contains(c)));
                    if r.holes != h || !nested {
                        bad.push(l);
                    }
                    prev = Some(r.polyomino);
                }
                Err(_) => bad.push(l),
            }
        }
        out.push(Check::new(
            format!("R_{{{k},l}}"),
            bad.is_empty(),
            if bad.is_empty() {
                format!("l = 0..={cap}: holes = 20k^2 + floor(l/2), nested")
            } else {
                format!("failing l: {bad:?}")
            },
        ));
    }
    Ok(out)
}

/// Census facts: least perimeter, strictness for holed shapes, the step
/// lemma, the upper bound and the spanning-tree bound on shared edges.
pub fn perimeter(table: &EnumerationTable, p_min_up_to: usize) -> Vec<Check> {
    let mut out = Vec::new();
    let rows = &table.rows;
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| r.n <= p_min_up_to && r.min_perimeter as u64 != bounds::p_min(r.n as u64))
        .map(|r| r.n)
        .collect();
    out.push(Check::new(
        "min perimeter = p_min",
        bad.is_empty(),
        format!("n <= {}, mismatches {bad:?}", p_min_up_to.min(table.max_n)),
    ));
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| r.min_holed_perimeter.is_some_and(|p| p as u64 <= bounds::p_min(r.n as u64)))
        .map(|r| r.n)
        .collect();
    out.push(Check::new("holed p > p_min", bad.is_empty(), format!("violations at {bad:?}")));
    let bad: Vec<usize> = rows
        .windows(2)
        .filter(|w| !(w[0].f_n..=w[0].f_n + 1).contains(&w[1].f_n))
        .map(|w| w[1].n)
        .collect();
    out.push(Check::new("f(n+1) - f(n) in {0,1}", bad.is_empty(), format!("violations at {bad:?}")));
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| r.f_n as u64 > bounds::ub_fixed_point(r.n as u64))
        .map(|r| r.n)
        .collect();
    out.push(Check::new("f(n) <= ub_fixed_point(n)", bad.is_empty(), format!("violations at {bad:?}")));
    let bad: Vec<usize> = rows
        .iter()
        .filter(|r| r.min_shared_edges as usize != r.n - 1 || r.min_shared_edges_count == 0)
        .map(|r| r.n)
        .collect();
    out.push(Check::new("min b = n - 1", bad.is_empty(), format!("violations at {bad:?}")));
    let mismatches: u64 = rows.iter().map(|r| r.euler_mismatches).sum();
    out.push(Check::new(
        "euler holes = flood-fill holes",
        mismatches == 0,
        format!("{mismatches} mismatches"),
    ));
    out
}

/// `C1 sqrt(40k^2+20k+l) >= 10k + 1` and
/// `20k^2 + floor(l/2) >= (40k^2+20k+l)/2 - C1 sqrt(40k^2+20k+l)` for every
/// admissible `l`.
pub fn inequality_chain(k_max: u32, c1: f64) -> Vec<Check> {
    let (mut first, mut second, mut cases) = (Vec::new(), Vec::new(), 0u64);
    for k in 1..=k_max as u64 {
        for l in 0..=2 * k * (2 * k - 1) {
            let n = 40 * k * k + 20 * k + l;
            let root = c1 * (n as f64).sqrt();
            if root + bounds::REAL_SLACK < (10 * k + 1) as f64 {
                first.push((k, l));
            }
            if ((20 * k * k + l / 2) as f64) + bounds::REAL_SLACK < n as f64 / 2.0 - root {
                second.push((k, l));
            }
            cases += 1;
        }
    }
    let detail = |v: &Vec<(u64, u64)>| {
        format!("{}/{cases} (k, l) pairs hold{}", cases - v.len() as u64, match v.first() {
            Some(x) => format!(", first failure {x:?}"),
            None => String::new(),
        })
    };
    vec![
        Check::new("C1 sqrt(m_k + l) >= 10k + 1", first.is_empty(), detail(&first)),
        Check::new("20k^2 + l/2 >= (m_k + l)/2 - C1 sqrt(m_k + l)", second.is_empty(), detail(&second)),
    ]
}

/// Walker against the naive generator, count and `f` for each size.
pub fn oracle(max_n: usize) -> Result<Vec<Check>, VerifyError> {
    range("max-n", 1, enumeration::NAIVE_CAP as u64, max_n as u64)?;
    let table = enumeration::census(max_n, 1)?;
    let levels = enumeration::naive_levels(max_n);
    let mut out = Vec::new();
    for (row, level) in table.rows.iter().zip(&levels) {
        let naive_f = level
            .iter()
            .map(|cells| {
                crate::grid::Polyomino::from_cells(
                    cells.iter().map(|&(x, y)| crate::grid::Cell::new(x, y)),
                )
                .expect("grown shapes are valid")
                .holes()
                .0 as u32
            })
            .max()
            .unwrap_or(0);
        let naive_total = level.len() as u64;
        out.push(Check::new(
            format!("n={}", row.n),
            row.total == naive_total && row.f_n == naive_f,
            format!("walker ({}, f={}) naive ({naive_total}, f={naive_f})", row.total, row.f_n),
        ));
    }
    Ok(out)
}
