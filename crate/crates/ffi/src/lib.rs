//! C interface to `fast-core`.
//!
//! Every function returns a [`FastStatus`]; outputs go through pointers.
//! On failure the message is kept per thread and read back with
//! [`fast_last_error_message`]. Scenarios and results are opaque handles
//! released with their `_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::ptr;

use fast_core::config::load_scenario;
use fast_core::fidelity::{eval_fidelity, invert_fidelity, FidelityCurve, ScalingFactor};
use fast_core::harness::{run_fast, Scenario, ScenarioResult, Status};
use fast_core::solver::{solve, SolverConfig};
use fast_core::sysmodel::{SplitLimits, TauConstants};
use fast_core::Error;

/// Return code of every fallible call. Codes 2 to 5 match the CLI exit codes.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastStatus {
    Ok = 0,
    InvalidArgument = 2,
    Infeasible = 3,
    Numeric = 4,
    Io = 5,
    NullPointer = 6,
    Panic = 7,
}

/// Outcome of a scenario run that completed without error.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FastRunStatus {
    Ok = 0,
    FidelityInfeasible = 1,
    LatencyInfeasible = 2,
}

/// `phi(pi) = kappa1 ln(kappa2 / pi + kappa3) + kappa4` on `[pi_min, 1]`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastCurve {
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub kappa4: f64,
    pub pi_min: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastTau {
    pub tau1: f64,
    pub tau2: f64,
    pub tau3: f64,
    pub tau4: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastLimits {
    pub alpha_min: f64,
    pub beta_min: f64,
    pub gamma_min: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastSplit {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastStrategy {
    pub pi: f64,
    pub f_e: f64,
    pub f_d: f64,
    pub power: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FastCost {
    pub t_tot: f64,
    pub e_cmp: f64,
    pub e_com: f64,
    pub e_tot: f64,
    pub data_bits: f64,
    pub fidelity: f64,
}

/// Opaque scenario handle.
pub struct FastScenario(Scenario);

/// Opaque result handle.
pub struct FastResult(ScenarioResult);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

struct Failure(FastStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e.exit_code() {
            2 => FastStatus::InvalidArgument,
            3 => FastStatus::Infeasible,
            5 => FastStatus::Io,
            _ => FastStatus::Numeric,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(FastStatus::NullPointer, format!("{what} is null"))
}

/// Run `f`, record any error or panic, and return its status.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> FastStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => FastStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            FastStatus::Panic
        }
    }
}

unsafe fn read<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(p: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    p.write(value);
    Ok(())
}

fn to_curve(c: &FastCurve) -> Result<FidelityCurve, Failure> {
    Ok(FidelityCurve::new(
        c.kappa1,
        c.kappa2,
        c.kappa3,
        c.kappa4,
        ScalingFactor::new(c.pi_min)?,
    ))
}

fn from_curve(c: &FidelityCurve) -> FastCurve {
    FastCurve {
        kappa1: c.kappa1,
        kappa2: c.kappa2,
        kappa3: c.kappa3,
        kappa4: c.kappa4,
        pi_min: c.pi_min.get(),
    }
}

/// Message of the last failed call on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fast_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_curve_default(out: *mut FastCurve) -> FastStatus {
    guard(|| write(out, from_curve(&FidelityCurve::synthetic_default()), "out"))
}

/// # Safety
/// `curve` must be valid for reads and `out` for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_curve_eval(
    curve: *const FastCurve,
    pi: f64,
    out: *mut f64,
) -> FastStatus {
    guard(|| {
        let c = to_curve(read(curve, "curve")?)?;
        let phi = eval_fidelity(&c, ScalingFactor::new(pi)?)?;
        write(out, phi, "out")
    })
}

/// Smallest scaling factor meeting `phi_min`.
///
/// # Safety
/// `curve` must be valid for reads and `out` for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_curve_invert(
    curve: *const FastCurve,
    phi_min: f64,
    out: *mut f64,
) -> FastStatus {
    guard(|| {
        let c = to_curve(read(curve, "curve")?)?;
        let pi = invert_fidelity(&c, phi_min, c.pi_min)?;
        write(out, pi.get(), "out")
    })
}

/// Energy-optimal time split. `tol <= 0` or `max_iters == 0` selects the
/// defaults. `energy` may be null.
///
/// # Safety
/// `tau` and `limits` must be valid for reads, `out` for writes, and
/// `energy` null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_solve_split(
    tau: *const FastTau,
    limits: *const FastLimits,
    tol: f64,
    max_iters: usize,
    out: *mut FastSplit,
    energy: *mut f64,
) -> FastStatus {
    guard(|| {
        let t = read(tau, "tau")?;
        let m = read(limits, "limits")?;
        let tau = TauConstants {
            tau1: t.tau1,
            tau2: t.tau2,
            tau3: t.tau3,
            tau4: t.tau4,
        };
        tau.validate()?;
        let mins = SplitLimits::new(m.alpha_min, m.beta_min, m.gamma_min);
        let defaults = SolverConfig::default();
        let cfg = SolverConfig {
            tol: if tol > 0.0 { tol } else { defaults.tol },
            max_iters: if max_iters > 0 {
                max_iters
            } else {
                defaults.max_iters
            },
            ..defaults
        };
        cfg.validate()?;
        let r = solve(&tau, &mins, &cfg)?;
        let s = r.split;
        write(
            out,
            FastSplit {
                alpha: s.alpha,
                beta: s.beta,
                gamma: s.gamma,
            },
            "out",
        )?;
        if !energy.is_null() {
            energy.write(r.e_tot);
        }
        Ok(())
    })
}

/// New handle holding the reference scenario. Never null.
#[no_mangle]
pub extern "C" fn fast_scenario_default() -> *mut FastScenario {
    Box::into_raw(Box::new(FastScenario(Scenario::default())))
}

/// Load a scenario file into a new handle.
///
/// # Safety
/// `path` must be a NUL-terminated UTF-8 string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_scenario_from_file(
    path: *const c_char,
    out: *mut *mut FastScenario,
) -> FastStatus {
    guard(|| {
        if path.is_null() {
            return Err(null("path"));
        }
        let path = CStr::from_ptr(path)
            .to_str()
            .map_err(|_| Failure(FastStatus::InvalidArgument, "path is not UTF-8".into()))?;
        let s = load_scenario(Path::new(path))?;
        write(out, Box::into_raw(Box::new(FastScenario(s))), "out")
    })
}

/// # Safety
/// `s` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fast_scenario_free(s: *mut FastScenario) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Apply `f` to a copy and keep it only if the result validates.
unsafe fn apply(s: *mut FastScenario, f: impl FnOnce(&mut Scenario)) -> Result<(), Failure> {
    let handle = s.as_mut().ok_or_else(|| null("scenario"))?;
    let mut next = handle.0.clone();
    f(&mut next);
    next.validate()?;
    handle.0 = next;
    Ok(())
}

unsafe fn update(s: *mut FastScenario, f: impl FnOnce(&mut Scenario)) -> FastStatus {
    guard(|| apply(s, f))
}

/// # Safety
/// `s` must be a live scenario handle.
#[no_mangle]
pub unsafe extern "C" fn fast_scenario_set_distance(
    s: *mut FastScenario,
    meters: f64,
) -> FastStatus {
    update(s, |s| s.link.distance_m = meters)
}

/// # Safety
/// `s` must be a live scenario handle.
#[no_mangle]
pub unsafe extern "C" fn fast_scenario_set_t_max(s: *mut FastScenario, seconds: f64) -> FastStatus {
    update(s, |s| s.constraints.t_max = seconds)
}

/// # Safety
/// `s` must be a live scenario handle.
#[no_mangle]
pub unsafe extern "C" fn fast_scenario_set_phi_min(
    s: *mut FastScenario,
    phi_min: f64,
) -> FastStatus {
    update(s, |s| s.constraints.phi_min = phi_min)
}

/// # Safety
/// `s` must be a live scenario handle and `curve` valid for reads.
#[no_mangle]
pub unsafe extern "C" fn fast_scenario_set_curve(
    s: *mut FastScenario,
    curve: *const FastCurve,
) -> FastStatus {
    guard(|| {
        let c = to_curve(read(curve, "curve")?)?;
        apply(s, |s| s.curve = c)
    })
}

/// Solve the scenario with default solver settings.
///
/// An infeasible scenario is not an error: the call succeeds and the
/// result's run status says which constraint failed.
///
/// # Safety
/// `s` must be a live scenario handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_run(s: *const FastScenario, out: *mut *mut FastResult) -> FastStatus {
    guard(|| {
        let scenario = &read(s, "scenario")?.0;
        scenario.validate()?;
        let r = run_fast(scenario, &SolverConfig::default())?;
        write(out, Box::into_raw(Box::new(FastResult(r))), "out")
    })
}

/// # Safety
/// `r` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn fast_result_free(r: *mut FastResult) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_result_status(
    r: *const FastResult,
    out: *mut FastRunStatus,
) -> FastStatus {
    guard(|| {
        let status = match &read(r, "result")?.0.status {
            Status::Ok | Status::Reference => FastRunStatus::Ok,
            Status::FidelityInfeasible => FastRunStatus::FidelityInfeasible,
            Status::LatencyInfeasible => FastRunStatus::LatencyInfeasible,
            Status::Failed(msg) => return Err(Failure(FastStatus::Numeric, msg.clone())),
        };
        write(out, status, "out")
    })
}

fn missing() -> Failure {
    Failure(FastStatus::Infeasible, "result has no strategy".into())
}

/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_result_strategy(
    r: *const FastResult,
    out: *mut FastStrategy,
) -> FastStatus {
    guard(|| {
        let s = read(r, "result")?.0.strategy.ok_or_else(missing)?;
        write(
            out,
            FastStrategy {
                pi: s.pi.get(),
                f_e: s.f_e,
                f_d: s.f_d,
                power: s.power,
            },
            "out",
        )
    })
}

/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_result_cost(r: *const FastResult, out: *mut FastCost) -> FastStatus {
    guard(|| {
        let res = &read(r, "result")?.0;
        let c = res.cost.ok_or_else(missing)?;
        write(
            out,
            FastCost {
                t_tot: c.t_tot,
                e_cmp: c.e_cmp,
                e_com: c.e_com,
                e_tot: c.e_tot,
                data_bits: c.data_bits,
                fidelity: res.fidelity.unwrap_or(f64::NAN),
            },
            "out",
        )
    })
}

/// # Safety
/// `r` must be a live result handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn fast_result_split(
    r: *const FastResult,
    out: *mut FastSplit,
) -> FastStatus {
    guard(|| {
        let s = read(r, "result")?.0.solve.ok_or_else(missing)?.split;
        write(
            out,
            FastSplit {
                alpha: s.alpha,
                beta: s.beta,
                gamma: s.gamma,
            },
            "out",
        )
    })
}
