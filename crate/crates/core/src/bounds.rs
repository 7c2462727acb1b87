//! Closed-form perimeter values and bounds on `f(n)`, the largest number of
//! holes an `n`-omino can have.
//!
//! Everything involving `ceil(2 sqrt(x))` is computed with integer square
//! roots: floating point rounds the wrong way near perfect squares.

use thiserror::Error;

use crate::constructions::{self, ConstructionError};

/// Slack used for the real-valued comparisons of the asymptotic sandwich.
pub const REAL_SLACK: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("{0}")]
    Construction(#[from] ConstructionError),
    #[error("closed form disagrees with recomputation: {0}")]
    ConsistencyFailure(String),
    #[error("parameter out of range: {0}")]
    Precondition(String),
}

/// `ceil(2 sqrt(x)) = ceil(sqrt(4x))`.
pub fn ceil_two_sqrt(x: u64) -> u64 {
    let four_x = 4 * x;
    let r = four_x.isqrt();
    if r * r == four_x {
        r
    } else {
        r + 1
    }
}

/// Least perimeter of an `n`-omino, `2 ceil(2 sqrt(n))`.
pub fn p_min(n: u64) -> u64 {
    2 * ceil_two_sqrt(n)
}

/// Least number of shared edges of an `n`-omino: a spanning tree of the
/// dual graph needs `n - 1`.
pub fn b_min(n: u64) -> u64 {
    n.saturating_sub(1)
}

/// `4n - 2 b_min(n) = 2n + 2`.
pub fn p_max_upper(n: u64) -> u64 {
    2 * n + 2
}

/// Upper bound on `f(n)` given any valid lower bound `lb <= f(n)`:
/// `floor(n/2 - ceil(2 sqrt(n + lb))/2 + 1/2)`.
pub fn ub_from_lb(n: u64, lb: u64) -> i64 {
    let numerator = n as i64 - ceil_two_sqrt(n + lb) as i64 + 1;
    numerator.div_euclid(2)
}

/// Largest `h` in `0..=n` with `4h <= 2n + 2 - 2 ceil(2 sqrt(n + h))`.
///
/// The right side never increases with `h`, so the admissible `h` form a
/// prefix of `0..=n` and the maximum is found by bisection. `h = 0` is always
/// admissible because `2 sqrt(n) <= n + 1`.
pub fn ub_fixed_point(n: u64) -> u64 {
    let ok = |h: u64| 4 * h + p_min(n + h) <= 4 * n - 2 * b_min(n);
    let (mut lo, mut hi) = (0, n);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if ok(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    lo
}

/// `n_k = (2^(2k+1) + 3 * 2^(k+1) + 4) / 3`, the tile count of `S_k`.
///
/// # Panics
/// Unless `1 <= k <= 30`.
pub fn nk(k: u32) -> u64 {
    assert!((1..=30).contains(&k), "k out of range: {k}");
    ((1u64 << (2 * k + 1)) + 3 * (1u64 << (k + 1)) + 4) / 3
}

/// `h_k = (4^k - 1) / 3`, the hole count of `S_k`.
///
/// # Panics
/// Unless `1 <= k <= 30`.
pub fn hk(k: u32) -> u64 {
    assert!((1..=30).contains(&k), "k out of range: {k}");
    ((1u64 << (2 * k)) - 1) / 3
}

/// `g(h_k) = n_k - 1`.
pub fn g_of_hk(k: u32) -> u64 {
    nk(k) - 1
}

/// Values of `f` around `n_k`, each re-derived from built shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Theorem1Values {
    pub f_at_nk: u64,
    pub f_at_nk_minus_1: u64,
    pub f_at_nk_minus_2: u64,
}

/// `f(n_k) = h_k`, `f(n_k - 1) = h_k`, `f(n_k - 2) = h_k - 1`.
///
/// The closed forms are confirmed from first principles:
/// * `S_k` has `h_k` holes, and the upper bound fed with that lower bound
///   collapses to `h_k`;
/// * `A_k` has `n_k - 1` tiles and still `h_k` holes, and `f` is monotone;
/// * assuming `f(n_k - 2) = h_k` makes the upper bound at `n_k - 2` drop
///   below `h_k`, and `f` falls by at most one per tile.
pub fn theorem1_values(k: u32) -> Result<Theorem1Values, BoundsError> {
    let fail = |msg: String| Err(BoundsError::ConsistencyFailure(msg));
    let (n, h) = (nk(k), hk(k));

    let s = constructions::build_s(k)?;
    if s.tiles() != n || s.holes != h {
        return fail(format!("S_{k} has {} tiles, {} holes", s.tiles(), s.holes));
    }
    let upper = ub_from_lb(n, s.holes);
    if upper != h as i64 {
        return fail(format!("upper bound at n_{k} is {upper}, not h_{k} = {h}"));
    }
    let f_at_nk = h;

    let a = constructions::build_a(k)?;
    if a.tiles() != n - 1 || a.holes != h {
        return fail(format!("A_{k} has {} tiles, {} holes", a.tiles(), a.holes));
    }
    // h_k <= f(n_k - 1) <= f(n_k) = h_k
    let f_at_nk_minus_1 = a.holes.min(f_at_nk);

    let assumed = ub_from_lb(n - 2, h);
    if assumed >= h as i64 {
        return fail(format!(
            "assuming f(n_{k} - 2) = h_{k} gives upper bound {assumed}, no contradiction"
        ));
    }
    let f_at_nk_minus_2 = f_at_nk_minus_1 - 1;

    Ok(Theorem1Values {
        f_at_nk,
        f_at_nk_minus_1,
        f_at_nk_minus_2,
    })
}

/// An exact value `num / den` with `den > 0`, in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    pub num: i64,
    pub den: i64,
}

impl Rational {
    fn halves(twice: i64) -> Self {
        if twice % 2 == 0 {
            Rational { num: twice / 2, den: 1 }
        } else {
            Rational { num: twice, den: 2 }
        }
    }

    pub fn as_integer(self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }
}

/// `n/2 - sqrt(3n/2 + 1/4) + 1/2 = (n + 1 - sqrt(6n + 1)) / 2`, in floating
/// point.
pub fn exact_formula(n: u64) -> f64 {
    (n as f64 + 1.0 - ((6 * n + 1) as f64).sqrt()) / 2.0
}

/// [`exact_formula`] in exact arithmetic, when `6n + 1` is a perfect square.
pub fn exact_formula_exact(n: u64) -> Option<Rational> {
    let d = 6 * n + 1;
    let r = d.isqrt();
    (r * r == d).then(|| Rational::halves(n as i64 + 1 - r as i64))
}

/// Outcome of the asymptotic sandwich check at one `n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Theorem2Check {
    pub n: u64,
    /// `n/2 - C1 sqrt(n)`.
    pub lower: f64,
    /// `n/2 - C2 sqrt(n)`.
    pub upper: f64,
    /// Holes of `R'_n`.
    pub lb_construction: u64,
    /// `ub_from_lb(n, lb_construction)`.
    pub ub: i64,
    pub holds: bool,
}

/// `C1 > sqrt(5/2)` and `C2 < sqrt(3/2)`, strictly.
pub fn check_theorem2_constants(c1: f64, c2: f64) -> Result<(), BoundsError> {
    if c1.is_nan() || c1 <= 2.5f64.sqrt() {
        return Err(BoundsError::Precondition(format!(
            "C1 must exceed sqrt(5/2), got {c1}"
        )));
    }
    if c2.is_nan() || c2 >= 1.5f64.sqrt() {
        return Err(BoundsError::Precondition(format!(
            "C2 must be below sqrt(3/2), got {c2}"
        )));
    }
    Ok(())
}

/// Checks `n/2 - C1 sqrt(n) <= holes(R'_n)` and
/// `ub_from_lb(n, holes(R'_n)) <= n/2 - C2 sqrt(n)`.
pub fn theorem2_check(n: u64, c1: f64, c2: f64) -> Result<Theorem2Check, BoundsError> {
    check_theorem2_constants(c1, c2)?;
    let r = constructions::build_r_prime(n)?;
    let lb = r.holes;
    let ub = ub_from_lb(n, lb);
    let sqrt_n = (n as f64).sqrt();
    let lower = n as f64 / 2.0 - c1 * sqrt_n;
    let upper = n as f64 / 2.0 - c2 * sqrt_n;
    let holds = lower <= lb as f64 + REAL_SLACK && ub as f64 <= upper + REAL_SLACK;
    Ok(Theorem2Check {
        n,
        lower,
        upper,
        lb_construction: lb,
        ub,
        holds,
    })
}

/// Best lower bound on `f(n)` available from a construction without
/// building anything large: `h_k` at `n_k` and `n_k - 1`, and the hole
/// count formula of `R'_n` in its domain.
pub fn lb_construction(n: u64) -> Option<u64> {
    if let Some(k) = (1..=30).find(|&k| nk(k) == n || nk(k) - 1 == n) {
        return Some(hk(k));
    }
    constructions::r_prime_params(n)
        .ok()
        .map(|(k, l)| constructions::r_holes(k) + l / 2)
}

/// One row of the `bounds` table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsReport {
    pub n: u64,
    pub p_min: u64,
    pub ub_fixed_point: u64,
    pub lb_construction: Option<u64>,
    /// `ub_from_lb` fed with the caller's lower bound, or with
    /// `lb_construction` if none was given.
    pub ub_from_lb: Option<i64>,
    pub exact_formula_value: f64,
}

pub fn bounds_report(n: u64, lb: Option<u64>) -> BoundsReport {
    let lb_construction = lb_construction(n);
    BoundsReport {
        n,
        p_min: p_min(n),
        ub_fixed_point: ub_fixed_point(n),
        lb_construction,
        ub_from_lb: lb.or(lb_construction).map(|lb| ub_from_lb(n, lb)),
        exact_formula_value: exact_formula(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest c with c^2 >= 4x, by counting up.
    fn ceil_two_sqrt_slow(x: u64) -> u64 {
        (0..).find(|c| c * c >= 4 * x).unwrap()
    }

    #[test]
    fn ceil_two_sqrt_matches_counting() {
        for x in 0..5000 {
            assert_eq!(ceil_two_sqrt(x), ceil_two_sqrt_slow(x), "x = {x}");
        }
        // near a large perfect square, where f64 would be fragile
        let s: u64 = 3_037_000_000;
        for x in [s * s / 4 - 1, s * s / 4, s * s / 4 + 1] {
            let c = ceil_two_sqrt(x);
            assert!(c * c >= 4 * x && (c - 1) * (c - 1) < 4 * x);
        }
    }

    #[test]
    fn perimeter_formulas() {
        assert_eq!(p_min(1), 4);
        assert_eq!(p_min(7), 12);
        assert_eq!(p_min(9), 12);
        assert_eq!((b_min(1), p_max_upper(1)), (0, 4));
        assert_eq!((b_min(7), p_max_upper(7)), (6, 16));
        assert_eq!((b_min(100), p_max_upper(100)), (99, 202));
    }

    #[test]
    fn upper_bound_from_lower_bound() {
        assert_eq!(ub_from_lb(8, 1), 1);
        assert_eq!(ub_from_lb(20, 5), 5);
        assert_eq!(ub_from_lb(18, 4), 4);
        // ceil(2 sqrt 1) = 2, so (1 - 2 + 1) / 2 = 0
        assert_eq!(ub_from_lb(1, 0), 0);
    }

    /// The largest admissible h, by scanning down from n.
    fn ub_fixed_point_scan(n: u64) -> u64 {
        (0..=n)
            .rev()
            .find(|&h| 4 * h + 2 * ceil_two_sqrt_slow(n + h) <= 2 * n + 2)
            .unwrap()
    }

    #[test]
    fn fixed_point_bound() {
        assert_eq!(ub_fixed_point(1), 0);
        assert_eq!(ub_fixed_point(8), 1);
        assert_eq!(ub_fixed_point(60), 21);
        for n in 1..600 {
            assert_eq!(ub_fixed_point(n), ub_fixed_point_scan(n), "n = {n}");
        }
    }

    #[test]
    fn nk_hk_values() {
        assert_eq!((nk(1), hk(1)), (8, 1));
        assert_eq!((nk(2), hk(2)), (20, 5));
        assert_eq!((nk(3), hk(3)), (60, 21));
        assert_eq!((nk(4), hk(4)), (204, 85));
        assert_eq!([g_of_hk(1), g_of_hk(2), g_of_hk(3)], [7, 19, 59]);
        for k in 1..30 {
            // both recursions from the rotation construction
            assert_eq!(nk(k + 1), 4 * nk(k) - 4 * ((1 << k) + 1));
            assert_eq!(hk(k + 1), 4 * hk(k) + 1);
        }
    }

    #[test]
    fn theorem1_small() {
        let v = |k| {
            let t = theorem1_values(k).unwrap();
            (t.f_at_nk, t.f_at_nk_minus_1, t.f_at_nk_minus_2)
        };
        assert_eq!(v(1), (1, 1, 0));
        assert_eq!(v(2), (5, 5, 4));
        assert_eq!(v(3), (21, 21, 20));
    }

    #[test]
    fn exact_formula_at_nk() {
        assert_eq!(exact_formula_exact(8).unwrap().as_integer(), Some(1));
        assert_eq!(exact_formula_exact(20).unwrap().as_integer(), Some(5));
        assert_eq!(exact_formula_exact(60).unwrap().as_integer(), Some(21));
        assert!((exact_formula(60) - 21.0).abs() < 1e-12);
        assert_eq!(exact_formula_exact(9), None);
        // 6*4+1 = 25: (4 + 1 - 5) / 2 = 0; 6*12+1 = 73 is not square
        assert_eq!(exact_formula_exact(4), Some(Rational { num: 0, den: 1 }));
        // 6*2+1 = 13 no; 6*14+1 = 85 no; 6*40+1 = 241 no; 6*10+1 = 61 no
        // 6*56+1 = 337 no; 6*28+1 = 169 = 13^2: (29 - 13)/2 = 8
        assert_eq!(exact_formula_exact(28), Some(Rational { num: 8, den: 1 }));
    }

    #[test]
    fn theorem2_precondition() {
        let at = 2.5f64.sqrt();
        assert!(matches!(
            theorem2_check(71400, at, 1.2),
            Err(BoundsError::Precondition(_))
        ));
        assert!(matches!(
            theorem2_check(71400, 1.6, 1.5f64.sqrt()),
            Err(BoundsError::Precondition(_))
        ));
        assert!(check_theorem2_constants(f64::NAN, 1.2).is_err());
        assert!(check_theorem2_constants(1.6, f64::NAN).is_err());
        assert!(matches!(
            theorem2_check(100, 1.6, 1.2),
            Err(BoundsError::Construction(ConstructionError::BelowDomain { .. }))
        ));
    }

    #[test]
    fn lb_construction_lookup() {
        assert_eq!(lb_construction(8), Some(1));
        assert_eq!(lb_construction(19), Some(5));
        assert_eq!(lb_construction(30), None);
        assert_eq!(lb_construction(71403), Some(35281));
    }
}
