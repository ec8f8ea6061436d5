#![allow(clippy::neg_cmp_op_on_partial_ord)]

//! C interface. Every function returns an [`LwStatus`]; results go through
//! out-pointers, which are left untouched on failure. The message for the
//! most recent failure on the calling thread is available from
//! [`lw_last_error_message`].

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use landau_wehrl::entropy::{min_entropy, von_neumann_thermal, wehrl_numeric, wehrl_thermal_paper};
use landau_wehrl::phase_space::{
    husimi_pure, husimi_thermal, make_density, DensityKind, RadialDensity, ThermalParams,
};
use landau_wehrl::quadrature::QuadratureSpec;
use landau_wehrl::statistics::rate_thermal;
use landau_wehrl::Error;

#[repr(i32)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LwStatus {
    Ok = 0,
    NullPointer = 1,
    Domain = 2,
    Numerical = 3,
    Overflow = 4,
    Panic = 5,
}

/// Opaque Husimi density.
pub struct LwDensity {
    inner: RadialDensity,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> LwStatus {
    match e {
        Error::Domain { .. } | Error::ZeroPochhammer { .. } => LwStatus::Domain,
        Error::NumericalFailure { .. } => LwStatus::Numerical,
        Error::Overflow { .. } => LwStatus::Overflow,
    }
}

fn guard<F: FnOnce() -> Result<(), Error>>(f: F) -> LwStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => LwStatus::Ok,
        Ok(Err(e)) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic".into());
            LwStatus::Panic
        }
    }
}

macro_rules! check_null {
    ($($p:expr),+) => {
        if $($p.is_null())||+ {
            set_error("null pointer argument".into());
            return LwStatus::NullPointer;
        }
    };
}

/// Message for the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn lw_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(std::ptr::null(), |c| c.as_ptr()))
}

fn new_density(kind: DensityKind, out: *mut *mut LwDensity) -> LwStatus {
    check_null!(out);
    guard(|| {
        let d = Box::new(LwDensity {
            inner: make_density(kind)?,
        });
        // SAFETY: `out` is non-null and the caller provides a writable slot.
        unsafe { *out = Box::into_raw(d) };
        Ok(())
    })
}

/// Creates the pure-state density `Q_j^{(m)}`; release with [`lw_density_free`].
#[no_mangle]
pub extern "C" fn lw_density_pure(m: u32, j: u32, out: *mut *mut LwDensity) -> LwStatus {
    new_density(DensityKind::Pure { m, j }, out)
}

/// Creates the thermal density `Q_beta^{(m)}`; release with [`lw_density_free`].
#[no_mangle]
pub extern "C" fn lw_density_thermal(m: u32, beta: f64, out: *mut *mut LwDensity) -> LwStatus {
    new_density(DensityKind::Thermal { m, beta }, out)
}

/// # Safety
/// `d` must come from a constructor above and not have been freed. Null is
/// accepted and ignored.
#[no_mangle]
pub unsafe extern "C" fn lw_density_free(d: *mut LwDensity) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lw_density_eval(
    d: *const LwDensity,
    lambda: f64,
    out: *mut f64,
) -> LwStatus {
    check_null!(d, out);
    guard(|| {
        if !(lambda >= 0.0) {
            return Err(Error::Domain {
                func: "lw_density_eval",
                detail: format!("lambda = {lambda} must be >= 0"),
            });
        }
        *out = (*d).inner.eval(lambda);
        Ok(())
    })
}

/// Wehrl entropy of the density by quadrature.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lw_density_wehrl(d: *const LwDensity, out: *mut f64) -> LwStatus {
    check_null!(d, out);
    guard(|| {
        *out = wehrl_numeric(&(*d).inner, &QuadratureSpec::default())?;
        Ok(())
    })
}

/// Number of zeros of the density on `(0, inf)`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn lw_density_zero_count(d: *const LwDensity, out: *mut usize) -> LwStatus {
    check_null!(d, out);
    *out = (*d).inner.zero_set().len();
    LwStatus::Ok
}

/// Copies up to `len` zeros into `buf`.
///
/// # Safety
/// `d` must be a live handle and `buf` valid for `len` writes.
#[no_mangle]
pub unsafe extern "C" fn lw_density_zeros(
    d: *const LwDensity,
    buf: *mut f64,
    len: usize,
) -> LwStatus {
    check_null!(d);
    let zeros = (*d).inner.zero_set();
    let n = zeros.len().min(len);
    if n > 0 {
        check_null!(buf);
        std::ptr::copy_nonoverlapping(zeros.as_ptr(), buf, n);
    }
    LwStatus::Ok
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lw_husimi_pure(m: u32, j: u32, lambda: f64, out: *mut f64) -> LwStatus {
    check_null!(out);
    guard(|| {
        if !(lambda >= 0.0) {
            return Err(Error::Domain {
                func: "lw_husimi_pure",
                detail: format!("lambda = {lambda} must be >= 0"),
            });
        }
        *out = husimi_pure(m, j, lambda);
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lw_husimi_thermal(
    m: u32,
    beta: f64,
    lambda: f64,
    out: *mut f64,
) -> LwStatus {
    check_null!(out);
    guard(|| {
        if !(lambda >= 0.0) {
            return Err(Error::Domain {
                func: "lw_husimi_thermal",
                detail: format!("lambda = {lambda} must be >= 0"),
            });
        }
        *out = husimi_thermal(m, &ThermalParams::new(beta)?, lambda);
        Ok(())
    })
}

/// Closed-form thermal Wehrl entropy `1 - ln(1-e^{-beta}) + m(beta + e^{-beta} - e^{-2beta})`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lw_wehrl_thermal_closed_form(
    m: u32,
    beta: f64,
    out: *mut f64,
) -> LwStatus {
    check_null!(out);
    guard(|| {
        *out = wehrl_thermal_paper(m, &ThermalParams::new(beta)?);
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn lw_von_neumann_thermal(beta: f64, out: *mut f64) -> LwStatus {
    check_null!(out);
    guard(|| {
        *out = von_neumann_thermal(&ThermalParams::new(beta)?);
        Ok(())
    })
}

/// Minimizer of the closed-form thermal entropy over temperature.
///
/// # Safety
/// All out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn lw_min_entropy(
    m: u32,
    tau: *mut f64,
    beta_min: *mut f64,
    s_min: *mut f64,
) -> LwStatus {
    check_null!(tau, beta_min, s_min);
    guard(|| {
        let s = min_entropy(m)?;
        if !s.consistent {
            return Err(Error::NumericalFailure {
                func: "lw_min_entropy",
                index: m as usize,
                detail: "closed-form and Newton roots disagree".into(),
                best_estimate: Some(s.tau),
            });
        }
        *tau = s.tau;
        *beta_min = s.beta_min;
        *s_min = s.s_min;
        Ok(())
    })
}

/// Thermal large-deviation rate function and its maximizer.
///
/// # Safety
/// All out-pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn lw_rate_thermal(
    beta: f64,
    xi: f64,
    u_star: *mut f64,
    value: *mut f64,
) -> LwStatus {
    check_null!(u_star, value);
    guard(|| {
        let r = rate_thermal(&ThermalParams::new(beta)?, xi)?;
        *u_star = r.u_star;
        *value = r.value;
        Ok(())
    })
}
