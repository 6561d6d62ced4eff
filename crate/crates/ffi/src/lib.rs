//! C ABI for `sympow`.
//!
//! Ideals and Betti tables are passed as opaque handles that must be
//! released with their `_free` function. Every call returns a
//! [`SympowStatus`]; on failure a message is available from
//! [`sympow_last_error`] on the same thread. Strings handed out by the
//! library are released with [`sympow_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use sympow::betti::{
    betti_oracle, complete_degree_cap, default_degree_cap, min_socle_degree, RecursiveBetti,
};
use sympow::splitting::{theorem_split, verify_ek};
use sympow::symbolic::{complete_symbolic_gens, symbolic_power};
use sympow::{BettiTable, Caps, Error, FieldSpec, MonomialIdeal, SimpleGraph};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SympowStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    ParseError = 3,
    CapExceeded = 4,
    ExcludedParameter = 5,
    Mismatch = 6,
    Io = 7,
    Panic = 8,
}

/// A monomial ideal in minimal-generator form.
pub struct SympowIdeal {
    inner: MonomialIdeal,
}

/// A graded Betti table in the quotient convention.
pub struct SympowBettiTable {
    inner: BettiTable,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> SympowStatus {
    match e {
        Error::CapExceeded { .. } => SympowStatus::CapExceeded,
        Error::Parse(_) => SympowStatus::ParseError,
        Error::ExcludedParameter { .. } | Error::ChainBroken { .. } => {
            SympowStatus::ExcludedParameter
        }
        Error::ConventionMismatch { .. }
        | Error::FieldMismatch { .. }
        | Error::ProjectiveDimensionMismatch { .. }
        | Error::FieldDiscrepancy { .. } => SympowStatus::Mismatch,
        Error::Io(_) => SympowStatus::Io,
        _ => SympowStatus::InvalidArgument,
    }
}

/// Run `body`, translating errors and panics into a status.
fn guard<F>(body: F) -> SympowStatus
where
    F: FnOnce() -> Result<(), SympowStatus>,
{
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => SympowStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => {
            set_last_error("internal panic".into());
            SympowStatus::Panic
        }
    }
}

fn check<T>(r: sympow::Result<T>) -> Result<T, SympowStatus> {
    r.map_err(|e| {
        set_last_error(e.to_string());
        status_of(&e)
    })
}

fn null_error(what: &str) -> SympowStatus {
    set_last_error(format!("{what} is NULL"));
    SympowStatus::NullPointer
}

/// # Safety
/// `p` must be NULL or point to a live `T`.
unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, SympowStatus> {
    p.as_ref().ok_or_else(|| null_error(what))
}

/// # Safety
/// `out` must be NULL or valid for writes.
unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), SympowStatus> {
    if out.is_null() {
        return Err(null_error("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn field_of(characteristic: u32) -> Result<FieldSpec, SympowStatus> {
    if characteristic == 0 {
        Ok(FieldSpec::Rationals)
    } else {
        check(FieldSpec::prime(characteristic as u64))
    }
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

fn c_string(text: String) -> *mut c_char {
    CString::new(text).map_or(ptr::null_mut(), CString::into_raw)
}

/// Copy of the last error message on this thread, or NULL if the last call
/// succeeded. Release with [`sympow_string_free`].
#[no_mangle]
pub extern "C" fn sympow_last_error() -> *mut c_char {
    LAST_ERROR.with(|slot| {
        slot.borrow()
            .as_ref()
            .map_or(ptr::null_mut(), |c| c.clone().into_raw())
    })
}

/// Release a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn sympow_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parse a comma-separated list of monomials such as `x1^2*x2, x3` in
/// `ambient` variables.
///
/// # Safety
/// `text` must be NULL or a NUL-terminated string; `out` must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_ideal_parse(
    text: *const c_char,
    ambient: usize,
    out: *mut *mut SympowIdeal,
) -> SympowStatus {
    guard(|| {
        if text.is_null() {
            return Err(null_error("text"));
        }
        let text = CStr::from_ptr(text).to_str().map_err(|_| {
            set_last_error("text is not UTF-8".into());
            SympowStatus::ParseError
        })?;
        let inner = check(MonomialIdeal::parse(text, ambient))?;
        write_out(out, boxed(SympowIdeal { inner }))
    })
}

/// `I(K_m)^(s)`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_ideal_complete_symbolic(
    m: usize,
    s: u32,
    out: *mut *mut SympowIdeal,
) -> SympowStatus {
    guard(|| {
        let inner = check(complete_symbolic_gens(m, s))?;
        write_out(out, boxed(SympowIdeal { inner }))
    })
}

/// `I(G)^(s)` for the graph on `vertex_count` vertices whose edges are the
/// `edge_count` pairs `(edges[2k], edges[2k + 1])`, numbered from 1.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (or be NULL when
/// `edge_count` is 0); `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_ideal_graph_symbolic(
    vertex_count: usize,
    edges: *const u32,
    edge_count: usize,
    s: u32,
    out: *mut *mut SympowIdeal,
) -> SympowStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null_error("edges"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let mut pairs = Vec::with_capacity(edge_count);
        for p in flat.chunks_exact(2) {
            if p[0] == 0 || p[1] == 0 {
                set_last_error("vertices are numbered from 1".into());
                return Err(SympowStatus::InvalidArgument);
            }
            pairs.push((p[0] as usize - 1, p[1] as usize - 1));
        }
        let g = check(SimpleGraph::new(vertex_count, pairs))?;
        let inner = check(symbolic_power(&g, s, &Caps::default()))?;
        write_out(out, boxed(SympowIdeal { inner }))
    })
}

/// Number of minimal generators.
///
/// # Safety
/// `ideal` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_ideal_generator_count(
    ideal: *const SympowIdeal,
    out: *mut usize,
) -> SympowStatus {
    guard(|| {
        let ideal = deref(ideal, "ideal")?;
        write_out(out, ideal.inner.len())
    })
}

/// The generators as text, e.g. `x1^2*x2, x3`. Release with
/// [`sympow_string_free`].
///
/// # Safety
/// `ideal` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_ideal_to_string(
    ideal: *const SympowIdeal,
    out: *mut *mut c_char,
) -> SympowStatus {
    guard(|| {
        let ideal = deref(ideal, "ideal")?;
        write_out(out, c_string(ideal.inner.to_string()))
    })
}

/// Release an ideal. NULL is ignored.
///
/// # Safety
/// `ideal` must be NULL or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sympow_ideal_free(ideal: *mut SympowIdeal) {
    if !ideal.is_null() {
        drop(Box::from_raw(ideal));
    }
}

/// Betti table of `R/I` from the Koszul oracle. `characteristic` 0 selects
/// the rationals; `degree_cap` 0 selects a cap that covers every entry.
///
/// # Safety
/// `ideal` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_oracle(
    ideal: *const SympowIdeal,
    characteristic: u32,
    degree_cap: u32,
    out: *mut *mut SympowBettiTable,
) -> SympowStatus {
    guard(|| {
        let ideal = deref(ideal, "ideal")?;
        let field = field_of(characteristic)?;
        let cap = if degree_cap == 0 {
            default_degree_cap(&ideal.inner)
        } else {
            degree_cap
        };
        let inner = check(betti_oracle(&ideal.inner, field, cap))?;
        write_out(out, boxed(SympowBettiTable { inner }))
    })
}

/// Betti table of `R/I(K_m)^(s)` from the splitting recursion.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_recursive_complete(
    m: usize,
    s: u32,
    characteristic: u32,
    out: *mut *mut SympowBettiTable,
) -> SympowStatus {
    guard(|| {
        let field = field_of(characteristic)?;
        let inner = check(RecursiveBetti::new(field).complete(m, s))?.to_quotient();
        write_out(out, boxed(SympowBettiTable { inner }))
    })
}

/// Betti table of `R/I(K_m)^(s)` from the Koszul oracle with the default
/// cap for complete graphs.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_oracle_complete(
    m: usize,
    s: u32,
    characteristic: u32,
    out: *mut *mut SympowBettiTable,
) -> SympowStatus {
    guard(|| {
        let field = field_of(characteristic)?;
        let ideal = check(complete_symbolic_gens(m, s))?;
        let inner = check(betti_oracle(&ideal, field, complete_degree_cap(m, s)))?;
        write_out(out, boxed(SympowBettiTable { inner }))
    })
}

/// `beta_{i,j}`; zero for absent entries.
///
/// # Safety
/// `table` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_get(
    table: *const SympowBettiTable,
    i: usize,
    j: u32,
    out: *mut u64,
) -> SympowStatus {
    guard(|| {
        let table = deref(table, "table")?;
        write_out(out, table.inner.get(i, j))
    })
}

/// Number of nonzero entries.
///
/// # Safety
/// `table` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_entry_count(
    table: *const SympowBettiTable,
    out: *mut usize,
) -> SympowStatus {
    guard(|| {
        let table = deref(table, "table")?;
        write_out(out, table.inner.len())
    })
}

/// The `index`-th nonzero entry in `(i, j)` order.
///
/// # Safety
/// `table` must be NULL or a live handle; the outputs must be valid for
/// writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_entry(
    table: *const SympowBettiTable,
    index: usize,
    out_i: *mut usize,
    out_j: *mut u32,
    out_beta: *mut u64,
) -> SympowStatus {
    guard(|| {
        let table = deref(table, "table")?;
        let Some((i, j, beta)) = table.inner.entries().nth(index) else {
            set_last_error(format!(
                "entry {index} out of range 0..{}",
                table.inner.len()
            ));
            return Err(SympowStatus::InvalidArgument);
        };
        write_out(out_i, i)?;
        write_out(out_j, j)?;
        write_out(out_beta, beta)
    })
}

/// JSON rendering of the table. Release with [`sympow_string_free`].
///
/// # Safety
/// `table` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_to_json(
    table: *const SympowBettiTable,
    out: *mut *mut c_char,
) -> SympowStatus {
    guard(|| {
        let table = deref(table, "table")?;
        write_out(out, c_string(table.inner.to_json()))
    })
}

/// Release a table. NULL is ignored.
///
/// # Safety
/// `table` must be NULL or a live handle not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sympow_betti_free(table: *mut SympowBettiTable) {
    if !table.is_null() {
        drop(Box::from_raw(table));
    }
}

/// Minimum socle degree of `R/I` from its table, whose last row must be
/// `m - 1`.
///
/// # Safety
/// `table` must be NULL or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_min_socle_degree(
    table: *const SympowBettiTable,
    m: usize,
    out: *mut u32,
) -> SympowStatus {
    guard(|| {
        let table = deref(table, "table")?;
        write_out(out, check(min_socle_degree(&table.inner, m))?)
    })
}

/// Build the splitting of `I_{K_m \ K_r, s}` and check it exhaustively over
/// subsets of at most `subset_cap` elements. `out_valid` receives the
/// verdict.
///
/// # Safety
/// `out_valid` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn sympow_split_verify(
    m: usize,
    s: u32,
    r: usize,
    subset_cap: usize,
    out_valid: *mut bool,
) -> SympowStatus {
    guard(|| {
        let cert = check(theorem_split(m, s, r))?;
        let verdict = check(verify_ek(&cert, subset_cap))?;
        write_out(out_valid, verdict.is_valid())
    })
}
