//! C interface. Every function returns a [`TruncalgStatus`]; on failure the
//! message is kept per thread and read back with [`truncalg_last_error`].
//! Handles are opaque and owned by the caller until passed to their `_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use truncalg::algebra::{close_generators, PrimeField, Subalgebra, TruncPoly};
use truncalg::census::{count_polynomial, full_census, CensusReport, Method};
use truncalg::monoid::{d_invariant, e_invariant, is_partial_monoid, PartialMonoid};
use truncalg::witness::build_witness;
use truncalg::Error;

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncalgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    NotPrime = 3,
    NotClosed = 4,
    Infeasible = 5,
    ClaimViolated = 6,
    BufferTooSmall = 7,
    Overflow = 8,
    Panic = 9,
}

/// `dim m`, `dim m^2` and `dim m/m^2`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TruncalgMDims {
    pub m: usize,
    pub m2: usize,
    pub quotient: usize,
}

/// A subalgebra of `F_p[x]/x^n`.
pub struct TruncalgSubalgebra(Subalgebra);

/// A full census at one `(p, n)`.
pub struct TruncalgCensus(CensusReport);

pub const TRUNCALG_METHOD_ECHELON: u32 = 0;
pub const TRUNCALG_METHOD_SUBSPACE: u32 = 1;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(TruncalgStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::NotPrime(_) | Error::ModulusTooLarge(_) => TruncalgStatus::NotPrime,
            Error::NotUnital | Error::ClosureViolation { .. } | Error::NotPartialMonoid(_) => {
                TruncalgStatus::NotClosed
            }
            Error::Infeasible { .. } => TruncalgStatus::Infeasible,
            Error::ClaimViolated(_) => TruncalgStatus::ClaimViolated,
            _ => TruncalgStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

fn fail(status: TruncalgStatus, msg: impl Into<String>) -> Failure {
    Failure(status, msg.into())
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, records any failure and turns panics into `Panic`.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> TruncalgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(String::new());
            TruncalgStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(msg);
            TruncalgStatus::Panic
        }
    }
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .ok_or_else(|| fail(TruncalgStatus::NullPointer, "null output pointer"))
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Result<&'a [T], Failure> {
    match (p.is_null(), len) {
        (_, 0) => Ok(&[]),
        (true, _) => Err(fail(TruncalgStatus::NullPointer, "null input array")),
        (false, _) => Ok(std::slice::from_raw_parts(p, len)),
    }
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref()
        .ok_or_else(|| fail(TruncalgStatus::NullPointer, "null handle"))
}

/// Copies `src` into a caller buffer, always reporting the needed length.
unsafe fn fill<T: Copy>(
    src: &[T],
    buf: *mut T,
    cap: usize,
    len: *mut usize,
) -> Result<(), Failure> {
    *out(len)? = src.len();
    if src.len() > cap {
        return Err(fail(
            TruncalgStatus::BufferTooSmall,
            format!("need {} entries, buffer holds {cap}", src.len()),
        ));
    }
    if !src.is_empty() {
        if buf.is_null() {
            return Err(fail(TruncalgStatus::NullPointer, "null output buffer"));
        }
        ptr::copy_nonoverlapping(src.as_ptr(), buf, src.len());
    }
    Ok(())
}

fn to_u64(v: u128) -> Result<u64, Failure> {
    u64::try_from(v).map_err(|_| {
        fail(
            TruncalgStatus::Overflow,
            format!("{v} does not fit in 64 bits"),
        )
    })
}

fn c_json(s: serde_json::Result<String>) -> Result<*mut c_char, Failure> {
    let s = s.map_err(|e| fail(TruncalgStatus::Panic, e.to_string()))?;
    Ok(CString::new(s).expect("json has no nul").into_raw())
}

fn polys(
    field: PrimeField,
    n: usize,
    coeffs: &[i64],
    rows: usize,
) -> Result<Vec<TruncPoly>, Failure> {
    if n == 0 {
        return Err(Error::InvalidBound(0).into());
    }
    coeffs
        .chunks(n)
        .take(rows)
        .map(|c| TruncPoly::from_ints(field, n, c).map_err(Failure::from))
        .collect()
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn truncalg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn truncalg_version() -> *const c_char {
    static V: &str = concat!("truncalg ", env!("CARGO_PKG_VERSION"), "\0");
    V.as_ptr().cast()
}

/// Whether `members` (any order) is a partial monoid of `[0, n-1]`.
///
/// # Safety
/// `members` must point to `len` readable values; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_is_partial_monoid(
    n: usize,
    members: *const usize,
    len: usize,
    result: *mut bool,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = is_partial_monoid(n, slice(members, len)?)?;
        Ok(())
    })
}

/// `e(E)` for a partial monoid `E` of `[0, n-1]`.
///
/// # Safety
/// As for [`truncalg_is_partial_monoid`].
#[no_mangle]
pub unsafe extern "C" fn truncalg_e_invariant(
    n: usize,
    members: *const usize,
    len: usize,
    result: *mut usize,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = e_invariant(&PartialMonoid::new(n, slice(members, len)?)?);
        Ok(())
    })
}

/// `d(E)`, the number of minimal generators of `E`.
///
/// # Safety
/// As for [`truncalg_is_partial_monoid`].
#[no_mangle]
pub unsafe extern "C" fn truncalg_d_invariant(
    n: usize,
    members: *const usize,
    len: usize,
    result: *mut usize,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = d_invariant(&PartialMonoid::new(n, slice(members, len)?)?);
        Ok(())
    })
}

/// Coefficients of the codimension-`c` count polynomial at bound `n`,
/// constant term first. `*len` always receives the needed length.
///
/// # Safety
/// `coeffs` must have room for `cap` values; `len` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_count_polynomial(
    n: usize,
    c: usize,
    coeffs: *mut u64,
    cap: usize,
    len: *mut usize,
) -> TruncalgStatus {
    guard(|| fill(count_polynomial(n, c)?.coeffs(), coeffs, cap, len))
}

/// The codimension-`c` count polynomial evaluated at `q`.
///
/// # Safety
/// `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_count_eval(
    n: usize,
    c: usize,
    q: u64,
    result: *mut u64,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = to_u64(count_polynomial(n, c)?.eval(q))?;
        Ok(())
    })
}

/// The span of `rows` vectors given row-major as `rows * n` integers, which
/// must already be a unital subalgebra.
///
/// # Safety
/// `coeffs` must point to `rows * n` values; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_from_span(
    p: u32,
    n: usize,
    coeffs: *const i64,
    rows: usize,
    result: *mut *mut TruncalgSubalgebra,
) -> TruncalgStatus {
    guard(|| {
        let slot = out(result)?;
        let field = PrimeField::new(p)?;
        let total = rows
            .checked_mul(n)
            .ok_or_else(|| fail(TruncalgStatus::Overflow, "rows * n overflows"))?;
        let vs = polys(field, n, slice(coeffs, total)?, rows)?;
        let alg = Subalgebra::from_span(field, n, &vs)?;
        *slot = Box::into_raw(Box::new(TruncalgSubalgebra(alg)));
        Ok(())
    })
}

/// The subalgebra generated by `rows` vectors, laid out as in
/// [`truncalg_subalgebra_from_span`].
///
/// # Safety
/// As for [`truncalg_subalgebra_from_span`].
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_generated(
    p: u32,
    n: usize,
    coeffs: *const i64,
    rows: usize,
    result: *mut *mut TruncalgSubalgebra,
) -> TruncalgStatus {
    guard(|| {
        let slot = out(result)?;
        let field = PrimeField::new(p)?;
        let total = rows
            .checked_mul(n)
            .ok_or_else(|| fail(TruncalgStatus::Overflow, "rows * n overflows"))?;
        let vs = polys(field, n, slice(coeffs, total)?, rows)?;
        *slot = Box::into_raw(Box::new(TruncalgSubalgebra(close_generators(
            field, n, &vs,
        )?)));
        Ok(())
    })
}

/// The non-thin witness at `n = 14` over `F_p`, checked before it is returned.
///
/// # Safety
/// `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_witness(
    p: u32,
    result: *mut *mut TruncalgSubalgebra,
) -> TruncalgStatus {
    guard(|| {
        let slot = out(result)?;
        *slot = Box::into_raw(Box::new(TruncalgSubalgebra(build_witness(
            PrimeField::new(p)?,
        )?)));
        Ok(())
    })
}

/// Vector space dimension.
///
/// # Safety
/// `alg` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_dim(
    alg: *const TruncalgSubalgebra,
    result: *mut usize,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = handle(alg)?.0.dim();
        Ok(())
    })
}

/// The exponent set in increasing order. `*len` always receives its size.
///
/// # Safety
/// `alg` must be a live handle; `members` must have room for `cap` values.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_exponents(
    alg: *const TruncalgSubalgebra,
    members: *mut usize,
    cap: usize,
    len: *mut usize,
) -> TruncalgStatus {
    guard(|| fill(&handle(alg)?.0.exponent_set().elements(), members, cap, len))
}

/// Dimensions of the maximal ideal, its square and their quotient.
///
/// # Safety
/// `alg` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_m_dims(
    alg: *const TruncalgSubalgebra,
    result: *mut TruncalgMDims,
) -> TruncalgStatus {
    guard(|| {
        let d = handle(alg)?.0.m_dims();
        *out(result)? = TruncalgMDims {
            m: d.m,
            m2: d.m2,
            quotient: d.quotient,
        };
        Ok(())
    })
}

/// Whether `dim m/m^2` equals `d` of the exponent set.
///
/// # Safety
/// `alg` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_is_thin(
    alg: *const TruncalgSubalgebra,
    result: *mut bool,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = handle(alg)?.0.is_thin();
        Ok(())
    })
}

/// Number of subalgebras of `F_p[x]/x^(n+1)` projecting onto this one.
///
/// # Safety
/// `alg` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_lift_count(
    alg: *const TruncalgSubalgebra,
    result: *mut u64,
) -> TruncalgStatus {
    guard(|| {
        *out(result)? = to_u64(handle(alg)?.0.lift_count())?;
        Ok(())
    })
}

/// JSON `{p, n, basis}`; release with [`truncalg_string_free`].
///
/// # Safety
/// `alg` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_to_json(
    alg: *const TruncalgSubalgebra,
    result: *mut *mut c_char,
) -> TruncalgStatus {
    guard(|| {
        let slot = out(result)?;
        *slot = c_json(serde_json::to_string(&handle(alg)?.0))?;
        Ok(())
    })
}

/// Releases a subalgebra handle. Null is ignored.
///
/// # Safety
/// `alg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn truncalg_subalgebra_free(alg: *mut TruncalgSubalgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Full census of `F_p[x]/x^n`. `method` is one of the `TRUNCALG_METHOD_*`
/// constants; `force` lifts the feasibility limit.
///
/// # Safety
/// `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_census(
    p: u32,
    n: usize,
    method: u32,
    force: bool,
    result: *mut *mut TruncalgCensus,
) -> TruncalgStatus {
    guard(|| {
        let slot = out(result)?;
        let method = match method {
            TRUNCALG_METHOD_ECHELON => Method::Echelon,
            TRUNCALG_METHOD_SUBSPACE => Method::Subspace,
            m => {
                return Err(fail(
                    TruncalgStatus::InvalidArgument,
                    format!("unknown method {m}"),
                ))
            }
        };
        let rep = full_census(PrimeField::new(p)?, n, method, force)?;
        *slot = Box::into_raw(Box::new(TruncalgCensus(rep)));
        Ok(())
    })
}

/// Total number of subalgebras and how many of them are not thin.
///
/// # Safety
/// `census` must be a live handle; both outputs must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_census_totals(
    census: *const TruncalgCensus,
    total: *mut u64,
    non_thin: *mut u64,
) -> TruncalgStatus {
    guard(|| {
        let rep = &handle(census)?.0;
        *out(total)? = rep.total;
        *out(non_thin)? = rep.non_thin_total();
        Ok(())
    })
}

/// The census report as JSON; release with [`truncalg_string_free`].
///
/// # Safety
/// `census` must be a live handle; `result` must be writable.
#[no_mangle]
pub unsafe extern "C" fn truncalg_census_to_json(
    census: *const TruncalgCensus,
    result: *mut *mut c_char,
) -> TruncalgStatus {
    guard(|| {
        let slot = out(result)?;
        *slot = c_json(serde_json::to_string(&handle(census)?.0))?;
        Ok(())
    })
}

/// Releases a census handle. Null is ignored.
///
/// # Safety
/// `census` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn truncalg_census_free(census: *mut TruncalgCensus) {
    if !census.is_null() {
        drop(Box::from_raw(census));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn truncalg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ffi::CStr;

    fn last_error() -> String {
        unsafe { CStr::from_ptr(truncalg_last_error()) }
            .to_string_lossy()
            .into_owned()
    }

    #[test]
    fn status_and_message() {
        let mut r = false;
        let bad = [0usize, 9];
        let st = unsafe { truncalg_is_partial_monoid(5, bad.as_ptr(), bad.len(), &mut r) };
        assert_eq!(st, TruncalgStatus::InvalidArgument);
        assert!(last_error().contains('9'));
        let st = unsafe { truncalg_is_partial_monoid(5, bad.as_ptr(), 1, &mut r) };
        assert_eq!(st, TruncalgStatus::Ok);
        assert!(r && last_error().is_empty());
    }

    #[test]
    fn null_output() {
        let st = unsafe { truncalg_count_eval(5, 2, 2, ptr::null_mut()) };
        assert_eq!(st, TruncalgStatus::NullPointer);
    }

    #[test]
    fn version_is_terminated() {
        let v = unsafe { CStr::from_ptr(truncalg_version()) };
        assert_eq!(v.to_str().unwrap(), truncalg::VERSION);
    }
}
