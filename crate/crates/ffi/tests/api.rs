use std::ffi::{CStr, CString};
use std::ptr;

use fast_ffi::*;

fn last_error() -> String {
    let p = fast_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn default_curve() -> FastCurve {
    let mut c = FastCurve {
        kappa1: 0.0,
        kappa2: 0.0,
        kappa3: 0.0,
        kappa4: 0.0,
        pi_min: 0.0,
    };
    assert_eq!(unsafe { fast_curve_default(&mut c) }, FastStatus::Ok);
    c
}

#[test]
fn curve_round_trip() {
    let c = default_curve();
    let mut phi = 0.0;
    assert_eq!(
        unsafe { fast_curve_eval(&c, 0.5, &mut phi) },
        FastStatus::Ok
    );
    assert!((phi - (0.9 + 0.05 * 0.5f64.ln())).abs() < 1e-15);
    let mut pi = 0.0;
    assert_eq!(
        unsafe { fast_curve_invert(&c, phi, &mut pi) },
        FastStatus::Ok
    );
    assert!((pi - 0.5).abs() < 1e-12);

    assert_eq!(
        unsafe { fast_curve_invert(&c, 0.95, &mut pi) },
        FastStatus::Infeasible
    );
    assert!(last_error().contains("0.95"));
    assert_eq!(
        unsafe { fast_curve_eval(&c, 0.1, &mut phi) },
        FastStatus::InvalidArgument
    );
}

#[test]
fn null_pointers_are_reported() {
    let mut phi = 0.0;
    assert_eq!(
        unsafe { fast_curve_eval(ptr::null(), 0.5, &mut phi) },
        FastStatus::NullPointer
    );
    assert_eq!(last_error(), "curve is null");
    let c = default_curve();
    assert_eq!(
        unsafe { fast_curve_eval(&c, 0.5, ptr::null_mut()) },
        FastStatus::NullPointer
    );
    assert_eq!(
        unsafe { fast_run(ptr::null(), ptr::null_mut()) },
        FastStatus::NullPointer
    );
    unsafe {
        fast_scenario_free(ptr::null_mut());
        fast_result_free(ptr::null_mut());
    }
}

#[test]
fn solve_split_sums_to_one() {
    let tau = FastTau {
        tau1: 9.0e-5,
        tau2: 1.133,
        tau3: 0.131,
        tau4: 1.125e-2,
    };
    let limits = FastLimits {
        alpha_min: 5.2e-3,
        beta_min: 0.01,
        gamma_min: 2.6e-2,
    };
    let mut split = FastSplit {
        alpha: 0.0,
        beta: 0.0,
        gamma: 0.0,
    };
    let mut energy = 0.0;
    let st = unsafe { fast_solve_split(&tau, &limits, 0.0, 0, &mut split, &mut energy) };
    assert_eq!(st, FastStatus::Ok);
    assert!((split.alpha + split.beta + split.gamma - 1.0).abs() < 1e-12);
    assert!(energy > 0.0);

    let tight = FastLimits {
        alpha_min: 0.5,
        beta_min: 0.4,
        gamma_min: 0.3,
    };
    let st = unsafe { fast_solve_split(&tau, &tight, 0.0, 0, &mut split, ptr::null_mut()) };
    assert_eq!(st, FastStatus::Infeasible);
}

#[test]
fn scenario_lifecycle() {
    unsafe {
        let s = fast_scenario_default();
        let mut r = ptr::null_mut();
        assert_eq!(fast_run(s, &mut r), FastStatus::Ok);
        let mut status = FastRunStatus::LatencyInfeasible;
        assert_eq!(fast_result_status(r, &mut status), FastStatus::Ok);
        assert_eq!(status, FastRunStatus::Ok);
        let mut cost = std::mem::zeroed::<FastCost>();
        assert_eq!(fast_result_cost(r, &mut cost), FastStatus::Ok);
        assert!((cost.t_tot - 8.0).abs() < 1e-6 * 8.0);
        let mut strat = std::mem::zeroed::<FastStrategy>();
        assert_eq!(fast_result_strategy(r, &mut strat), FastStatus::Ok);
        assert_eq!(strat.pi, 0.25);
        let mut split = std::mem::zeroed::<FastSplit>();
        assert_eq!(fast_result_split(r, &mut split), FastStatus::Ok);
        fast_result_free(r);

        // a rejected update leaves the scenario untouched
        assert_eq!(
            fast_scenario_set_distance(s, -1.0),
            FastStatus::InvalidArgument
        );
        assert_eq!(fast_scenario_set_phi_min(s, 0.85), FastStatus::Ok);
        assert_eq!(fast_run(s, &mut r), FastStatus::Ok);
        assert_eq!(fast_result_strategy(r, &mut strat), FastStatus::Ok);
        assert!((strat.pi - (-1.0f64).exp()).abs() < 1e-9);
        fast_result_free(r);

        assert_eq!(fast_scenario_set_phi_min(s, 0.95), FastStatus::Ok);
        assert_eq!(fast_run(s, &mut r), FastStatus::Ok);
        assert_eq!(fast_result_status(r, &mut status), FastStatus::Ok);
        assert_eq!(status, FastRunStatus::FidelityInfeasible);
        assert_eq!(fast_result_cost(r, &mut cost), FastStatus::Infeasible);
        fast_result_free(r);
        fast_scenario_free(s);
    }
}

#[test]
fn scenario_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.toml");
    std::fs::write(&path, "[link]\nd_m = 300.0\n").unwrap();
    let c_path = CString::new(path.to_str().unwrap()).unwrap();
    let mut s = ptr::null_mut();
    unsafe {
        assert_eq!(
            fast_scenario_from_file(c_path.as_ptr(), &mut s),
            FastStatus::Ok
        );
        assert!(!s.is_null());
        fast_scenario_free(s);
        let missing = CString::new("/nonexistent/s.toml").unwrap();
        assert_eq!(
            fast_scenario_from_file(missing.as_ptr(), &mut s),
            FastStatus::Io
        );
    }
}
