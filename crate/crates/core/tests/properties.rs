use fast_core::fidelity::{eval_fidelity, invert_fidelity, FidelityCurve, ScalingFactor};
use fast_core::solver::{candidate_split, g_lambda, solve, SolverConfig};
use fast_core::sysmodel::{
    derive_workload, energy_of_split, evaluate_workload, recover_strategy, split_lower_limits,
    tau_constants, DeviceProfile, LinkProfile, SplitLimits, TauConstants, TimeSplit,
    WorkloadProfile,
};
use proptest::prelude::*;

fn log_uniform(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo.ln()..hi.ln()).prop_map(f64::exp)
}

fn taus() -> impl Strategy<Value = TauConstants> {
    (
        log_uniform(1e-6, 10.0),
        log_uniform(1e-6, 10.0),
        log_uniform(1e-6, 10.0),
        log_uniform(1e-6, 10.0),
    )
        .prop_map(|(tau1, tau2, tau3, tau4)| TauConstants {
            tau1,
            tau2,
            tau3,
            tau4,
        })
}

fn limits() -> impl Strategy<Value = SplitLimits> {
    (0.0..0.3f64, 0.0..0.3f64, 0.0..0.3f64).prop_map(|(a, b, g)| SplitLimits::new(a, b, g))
}

/// Decreasing curves of both branches with fidelity in [0, 1] on [pi_min, 1].
fn curves() -> impl Strategy<Value = FidelityCurve> {
    (
        0.01..0.2f64,
        0.0..2.0f64,
        0.5..0.99f64,
        0.05..0.5f64,
        any::<bool>(),
    )
        .prop_map(|(k1, k3, phi_full, pi_min, positive)| {
            let pi_min = ScalingFactor::new(pi_min).unwrap();
            let (k1, k2, k3) = if positive {
                (-k1, 1.0, k3)
            } else {
                (k1, -1.0, 1.0 / pi_min.get() + k3 + 0.01)
            };
            let k4 = phi_full - k1 * (k2 + k3).ln();
            FidelityCurve::new(k1, k2, k3, k4, pi_min)
        })
        .prop_filter("fidelity below zero at pi_min", |c| {
            eval_fidelity(c, c.pi_min).unwrap() >= 0.0
        })
}

proptest! {
    #[test]
    fn fidelity_is_non_increasing(c in curves(), a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let lo = c.pi_min.get();
        let (p, q) = (lo + (1.0 - lo) * a.min(b), lo + (1.0 - lo) * a.max(b));
        let fp = eval_fidelity(&c, ScalingFactor::new(p).unwrap()).unwrap();
        let fq = eval_fidelity(&c, ScalingFactor::new(q).unwrap()).unwrap();
        prop_assert!(fq >= fp - 1e-12);
    }

    #[test]
    fn inverse_round_trips(c in curves(), u in 0.0..1.0f64) {
        let lo = c.pi_min.get();
        let pi = ScalingFactor::new(lo + (1.0 - lo) * u).unwrap();
        let phi = eval_fidelity(&c, pi).unwrap();
        let back = invert_fidelity(&c, phi, c.pi_min).unwrap();
        let phi_back = eval_fidelity(&c, back).unwrap();
        prop_assert!((phi_back - phi).abs() <= 1e-9, "{phi} -> {back:?} -> {phi_back}");
    }

    #[test]
    fn recovered_strategy_spends_the_split(
        d in 50.0..400.0f64,
        pi in 0.25..1.0f64,
        a in 0.05..1.0f64,
        b in 0.05..1.0f64,
        g in 0.05..1.0f64,
    ) {
        let profile = WorkloadProfile::default();
        let dev = DeviceProfile::default();
        let link = LinkProfile { distance_m: d, ..LinkProfile::default() };
        let t_max = 8.0;
        let pi = ScalingFactor::new(pi).unwrap();
        let w = derive_workload(&profile, pi);
        let s = a + b + g;
        let split = TimeSplit::new(a / s, b / s, g / s);
        let mins = split_lower_limits(&w, &dev, &link, t_max);
        prop_assume!(split.alpha >= mins.alpha_min && split.beta >= mins.beta_min && split.gamma >= mins.gamma_min);

        let strat = recover_strategy(&split, &w, pi, &dev, &link, t_max).unwrap();
        let cost = evaluate_workload(&strat, &w, &dev, &link).unwrap();
        prop_assert!((cost.t_tot - t_max).abs() <= 1e-9 * t_max);
        prop_assert!((cost.t_encode - split.alpha * t_max).abs() <= 1e-9 * t_max);
        prop_assert!((cost.t_com - split.beta * t_max).abs() <= 1e-9 * t_max);

        let tau = tau_constants(&w, &link, &dev, t_max).unwrap();
        let e = energy_of_split(&tau, &split);
        prop_assert!((cost.e_tot - e).abs() <= 1e-9 * e);
    }

    #[test]
    fn energy_is_convex_along_segments(
        tau in taus(),
        x in (0.05..1.0f64, 0.05..1.0f64, 0.05..1.0f64),
        y in (0.05..1.0f64, 0.05..1.0f64, 0.05..1.0f64),
    ) {
        let p = TimeSplit::new(x.0, x.1, x.2);
        let q = TimeSplit::new(y.0, y.1, y.2);
        let mid = TimeSplit::new(0.5 * (x.0 + y.0), 0.5 * (x.1 + y.1), 0.5 * (x.2 + y.2));
        let (ep, eq, em) = (energy_of_split(&tau, &p), energy_of_split(&tau, &q), energy_of_split(&tau, &mid));
        prop_assume!(ep.is_finite() && eq.is_finite());
        prop_assert!(em <= 0.5 * (ep + eq) * (1.0 + 1e-12));
    }

    #[test]
    fn g_increases_in_beta(tau in taus(), lambda in log_uniform(1e-3, 1e3), a in 0.01..5.0f64, b in 0.01..5.0f64) {
        let (lo, hi) = (a.min(b), a.max(b));
        prop_assert!(g_lambda(lo, tau.tau2, tau.tau3, lambda) <= g_lambda(hi, tau.tau2, tau.tau3, lambda));
    }

    #[test]
    fn z_decreases_in_lambda(tau in taus(), mins in limits(), l in log_uniform(1e-4, 1e4), f in 1.001..10.0f64) {
        let cfg = SolverConfig::default();
        let z1 = candidate_split(l, &tau, &mins, &cfg).unwrap().z;
        let z2 = candidate_split(l * f, &tau, &mins, &cfg).unwrap().z;
        prop_assert!(z2 <= z1 * (1.0 + 1e-9));
    }

    #[test]
    fn z_is_continuous_in_lambda(tau in taus(), mins in limits(), l in log_uniform(1e-4, 1e4)) {
        let cfg = SolverConfig { tol: 1e-14, ..SolverConfig::default() };
        let z1 = candidate_split(l, &tau, &mins, &cfg).unwrap().z;
        let z2 = candidate_split(l * (1.0 + 1e-7), &tau, &mins, &cfg).unwrap().z;
        prop_assert!((z1 - z2).abs() <= 1e-5 * z1);
    }

    #[test]
    fn solve_meets_budget_within_iteration_bound(tau in taus(), mins in limits()) {
        let cfg = SolverConfig::default();
        let r = solve(&tau, &mins, &cfg).unwrap();
        prop_assert!(r.outer_iters <= cfg.max_iters);
        prop_assert!((r.split.sum() - 1.0).abs() <= 1e-9);
        for (x, m) in r.split.as_array().iter().zip(mins.as_array()) {
            prop_assert!(*x >= m - 1e-12);
        }
    }
}
