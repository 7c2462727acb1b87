//! C interface to `polyholes`.
//!
//! Polyominoes cross the boundary as opaque `PhPolyomino` handles owned by
//! the caller and released with [`ph_polyomino_free`]. Strings returned to
//! the caller are released with [`ph_string_free`]. Every fallible call
//! returns a [`PhStatus`]; on failure [`ph_last_error_message`] describes
//! the most recent error on the calling thread. Panics never cross the
//! boundary: they are reported as `PH_STATUS_PANIC`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use polyholes::bounds;
use polyholes::constructions::{self, ConstructionError};
use polyholes::enumeration::{self, EnumError, Pruning, SearchOptions};
use polyholes::grid::{Cell, GridError, Polyomino};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidInput = 2,
    Parse = 3,
    Domain = 4,
    Contract = 5,
    BudgetExceeded = 6,
    BufferTooSmall = 7,
    Internal = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhFamily {
    S = 0,
    A = 1,
    R = 2,
    RExt = 3,
    RPrime = 4,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhMetrics {
    pub n: u64,
    pub holes: u64,
    pub p: u64,
    pub b: u64,
    pub p_h: u64,
    pub p_o: u64,
    pub width: u32,
    pub height: u32,
}

/// Opaque polyomino handle.
pub struct PhPolyomino {
    inner: Polyomino,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

type Failure = (PhStatus, String);

fn fail(status: PhStatus, msg: impl Into<String>) -> Failure {
    (status, msg.into())
}

fn from_grid(e: GridError) -> Failure {
    fail(PhStatus::InvalidInput, e.to_string())
}

fn from_construction(e: ConstructionError) -> Failure {
    let status = match e {
        ConstructionError::ContractViolation { .. } => PhStatus::Contract,
        ConstructionError::Invalid(_) => PhStatus::Internal,
        _ => PhStatus::Domain,
    };
    fail(status, e.to_string())
}

fn from_enum(e: EnumError) -> Failure {
    let status = match e {
        EnumError::SearchBudgetExceeded { .. } => PhStatus::BudgetExceeded,
        EnumError::ThreadPool(_) | EnumError::Internal(_) => PhStatus::Internal,
        _ => PhStatus::Domain,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning errors and panics into a status and the thread's last
/// error message.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> PhStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PhStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside polyholes");
            PhStatus::Panic
        }
    }
}

fn nonnull<T>(p: *const T, name: &str) -> Result<(), Failure> {
    if p.is_null() {
        Err(fail(PhStatus::NullArgument, format!("{name} is null")))
    } else {
        Ok(())
    }
}

/// # Safety
/// `out` must be valid for writes.
unsafe fn give(out: *mut *mut PhPolyomino, p: Polyomino) {
    *out = Box::into_raw(Box::new(PhPolyomino { inner: p }));
}

/// # Safety
/// `p` must be null or a live handle.
unsafe fn handle<'a>(p: *const PhPolyomino) -> Result<&'a Polyomino, Failure> {
    nonnull(p, "polyomino")?;
    Ok(&(*p).inner)
}

fn give_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    nonnull(out, "out")?;
    let c = CString::new(s).map_err(|e| fail(PhStatus::Internal, e.to_string()))?;
    // SAFETY: checked non-null; the caller promises `out` is writable.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Message for the last failed call on this thread, or null if the last
/// call succeeded. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn ph_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Builds a polyomino from `len` cells given as parallel coordinate arrays.
///
/// # Safety
/// `xs` and `ys` must point to `len` readable values; `out` must be
/// writable.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_from_cells(
    xs: *const i32,
    ys: *const i32,
    len: usize,
    out: *mut *mut PhPolyomino,
) -> PhStatus {
    guard(|| {
        nonnull(out, "out")?;
        if len > 0 {
            nonnull(xs, "xs")?;
            nonnull(ys, "ys")?;
        }
        let cells: Vec<Cell> = if len == 0 {
            Vec::new()
        } else {
            let (xs, ys) = (std::slice::from_raw_parts(xs, len), std::slice::from_raw_parts(ys, len));
            xs.iter().zip(ys).map(|(&x, &y)| Cell::new(x, y)).collect()
        };
        let p = Polyomino::from_cells(cells).map_err(from_grid)?;
        give(out, p);
        Ok(())
    })
}

/// Parses the `polyomino v1` text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_parse(text: *const c_char, out: *mut *mut PhPolyomino) -> PhStatus {
    guard(|| {
        nonnull(text, "text")?;
        nonnull(out, "out")?;
        let s = CStr::from_ptr(text)
            .to_str()
            .map_err(|e| fail(PhStatus::Parse, e.to_string()))?;
        let p = Polyomino::parse(s).map_err(|e| fail(PhStatus::Parse, e.to_string()))?;
        give(out, p);
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `p` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_free(p: *mut PhPolyomino) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Number of tiles, or 0 for a null handle.
///
/// # Safety
/// `p` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_len(p: *const PhPolyomino) -> usize {
    handle(p).map_or(0, Polyomino::len)
}

/// Copies the normalized cells, in canonical order, into `xs`/`ys`.
/// Fails with `PH_STATUS_BUFFER_TOO_SMALL` if `cap` is below the tile
/// count.
///
/// # Safety
/// `p` must be a live handle; `xs` and `ys` must have room for `cap`
/// values.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_cells(
    p: *const PhPolyomino,
    xs: *mut i32,
    ys: *mut i32,
    cap: usize,
) -> PhStatus {
    guard(|| {
        let poly = handle(p)?;
        let n = poly.len();
        if cap < n {
            return Err(fail(PhStatus::BufferTooSmall, format!("need room for {n} cells, got {cap}")));
        }
        nonnull(xs, "xs")?;
        nonnull(ys, "ys")?;
        for (i, c) in poly.cells().iter().enumerate() {
            *xs.add(i) = c.x;
            *ys.add(i) = c.y;
        }
        Ok(())
    })
}

/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_metrics(p: *const PhPolyomino, out: *mut PhMetrics) -> PhStatus {
    guard(|| {
        let poly = handle(p)?;
        nonnull(out, "out")?;
        let m = poly.metrics();
        *out = PhMetrics {
            n: m.n,
            holes: m.holes,
            p: m.p,
            b: m.b,
            p_h: m.p_h,
            p_o: m.p_o,
            width: m.bbox.0,
            height: m.bbox.1,
        };
        Ok(())
    })
}

/// `polyomino v1` text. Free with [`ph_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_serialize(p: *const PhPolyomino, out: *mut *mut c_char) -> PhStatus {
    guard(|| give_string(out, handle(p)?.serialize()))
}

/// ASCII picture, top row first. Free with [`ph_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_ascii(p: *const PhPolyomino, out: *mut *mut c_char) -> PhStatus {
    guard(|| give_string(out, handle(p)?.render_ascii()))
}

/// SVG document. Free with [`ph_string_free`].
///
/// # Safety
/// `p` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_polyomino_svg(p: *const PhPolyomino, out: *mut *mut c_char) -> PhStatus {
    guard(|| give_string(out, handle(p)?.render_svg()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ph_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a family member. `k` is used by S, A, R and R_ext, `l` by R_ext
/// and `n` by R_prime; unused parameters are ignored. The shape is checked
/// against its expected tile and hole counts before it is returned.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_construct(
    family: PhFamily,
    k: u32,
    l: u64,
    n: u64,
    out: *mut *mut PhPolyomino,
) -> PhStatus {
    guard(|| {
        nonnull(out, "out")?;
        let report = match family {
            PhFamily::S => constructions::build_s(k),
            PhFamily::A => constructions::build_a(k),
            PhFamily::R => constructions::build_r(k),
            PhFamily::RExt => constructions::build_r_ext(k, l),
            PhFamily::RPrime => constructions::build_r_prime(n),
        }
        .map_err(from_construction)?;
        give(out, report.polyomino);
        Ok(())
    })
}

/// Least perimeter of an `n`-omino.
#[no_mangle]
pub extern "C" fn ph_p_min(n: u64) -> u64 {
    bounds::p_min(n)
}

/// Largest `h` the perimeter inequality allows as a hole count of an
/// `n`-omino.
#[no_mangle]
pub extern "C" fn ph_ub_fixed_point(n: u64) -> u64 {
    bounds::ub_fixed_point(n)
}

/// Upper bound on the hole count of an `n`-omino given a known lower bound.
#[no_mangle]
pub extern "C" fn ph_ub_from_lb(n: u64, lb: u64) -> i64 {
    bounds::ub_from_lb(n, lb)
}

/// Number of fixed `n`-ominoes, counted on `workers` threads.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_count_fixed(n: u32, workers: u32, out: *mut u64) -> PhStatus {
    guard(|| {
        nonnull(out, "out")?;
        *out = enumeration::count_fixed(n as usize, workers as usize).map_err(from_enum)?;
        Ok(())
    })
}

/// Least size of a polyomino with `m` holes, with a witness. Uses the
/// sound pruning rule; `node_budget` of 0 means the default budget.
///
/// # Safety
/// `out_g` and `out_witness` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ph_search_g(
    m: u32,
    node_budget: u64,
    out_g: *mut u32,
    out_witness: *mut *mut PhPolyomino,
) -> PhStatus {
    guard(|| {
        nonnull(out_g, "out_g")?;
        nonnull(out_witness, "out_witness")?;
        let mut options = SearchOptions {
            pruning: Pruning::Sound,
            ..SearchOptions::default()
        };
        if node_budget > 0 {
            options.node_budget = node_budget;
        }
        let found = enumeration::search_g(m, options).map_err(from_enum)?;
        *out_g = found.g as u32;
        give(out_witness, found.witness);
        Ok(())
    })
}
