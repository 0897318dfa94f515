//! Hierarchical bisection for the time-split energy problem.
//!
//! Minimize `tau1/a^2 + tau2 b (2^(tau3/b) - 1) + tau4/g^2` subject to
//! `a + b + g = 1` and per-coordinate lower limits. For a fixed multiplier
//! `lambda` on the sum constraint, the stationarity conditions give `a` and
//! `g` in closed form and `b` as the unique zero of an increasing function,
//! each clamped at its lower limit. The clamped sum `z(lambda)` is continuous
//! and non-increasing, so an outer bisection drives it to one.

use std::f64::consts::LN_2;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fidelity::ScalingFactor;
use crate::sysmodel::{energy_of_split, SplitLimits, TauConstants, TimeSplit};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolverConfig {
    /// Bracket-width tolerance for both bisection loops.
    pub tol: f64,
    /// Iteration cap per loop.
    pub max_iters: usize,
    /// Multiplicative step when searching for the initial lambda bracket.
    pub lambda_bracket_growth: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            tol: 1e-9,
            max_iters: 200,
            lambda_bracket_growth: 10.0,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || self.max_iters < 1 || !(self.lambda_bracket_growth > 1.0) {
            return Err(Error::InvalidInput(format!(
                "solver config needs tol > 0, max_iters >= 1, growth > 1: {self:?}"
            )));
        }
        Ok(())
    }

    /// Bracket `[lo, hi]` is converged once its width is within `tol`,
    /// measured relative to the bracket scale when that exceeds one.
    fn converged(&self, lo: f64, hi: f64) -> bool {
        let mid = 0.5 * (lo + hi);
        hi - lo <= self.tol * hi.abs().max(1.0) || mid <= lo || mid >= hi
    }
}

/// `(1 - y) e^y - 1`, accurate for small `y`.
fn comm_slope_core(y: f64) -> f64 {
    if y.abs() < 1e-2 {
        // sum_{n>=2} (1 - n) y^n / n!
        let mut term = y; // y^n / n! at n = 1
        let mut acc = 0.0;
        for n in 2..12 {
            term *= y / n as f64;
            acc += (1.0 - n as f64) * term;
        }
        acc
    } else if y < 1.0 {
        y.exp_m1() - y * y.exp()
    } else {
        // overflows to -inf rather than inf - inf
        (1.0 - y) * y.exp() - 1.0
    }
}

/// Derivative of `tau2 b (2^(tau3/b) - 1)` with respect to `b`.
fn comm_gradient(beta: f64, tau2: f64, tau3: f64) -> f64 {
    tau2 * comm_slope_core(tau3 * LN_2 / beta)
}

/// `(tau2 - tau2 tau3 ln2 / b) 2^(tau3/b) - tau2 + lambda`.
pub fn g_lambda(beta: f64, tau2: f64, tau3: f64, lambda: f64) -> f64 {
    comm_gradient(beta, tau2, tau3) + lambda
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaRoot {
    pub beta: f64,
    pub iters: usize,
}

/// Zero of [`g_lambda`] in `beta` by bisection.
pub fn solve_beta(lambda: f64, tau2: f64, tau3: f64, cfg: &SolverConfig) -> Result<BetaRoot> {
    if !(lambda > 0.0 && lambda.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "lambda must be positive, got {lambda}"
        )));
    }
    if !(tau2 > 0.0 && tau3 > 0.0) {
        return Err(Error::InvalidInput(format!(
            "tau2 and tau3 must be positive, got {tau2}, {tau3}"
        )));
    }
    const MAX_EXPANSION: usize = 1100;
    let g = |b: f64| g_lambda(b, tau2, tau3, lambda);

    let (mut lo, mut hi) = (0.5, 1.0);
    let mut steps = 0;
    if g(hi) <= 0.0 {
        while g(hi) <= 0.0 {
            lo = hi;
            hi *= 2.0;
            steps += 1;
            if steps > MAX_EXPANSION || !hi.is_finite() {
                return Err(Error::BracketFailure { lambda });
            }
        }
    } else {
        while g(lo) >= 0.0 {
            hi = lo;
            lo *= 0.5;
            steps += 1;
            if steps > MAX_EXPANSION || lo == 0.0 {
                return Err(Error::BracketFailure { lambda });
            }
        }
    }

    let mut iters = 0;
    while !cfg.converged(lo, hi) {
        if iters >= cfg.max_iters {
            return Err(Error::IterationCap {
                stage: "beta bisection",
                iters,
            });
        }
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
        iters += 1;
    }
    Ok(BetaRoot {
        beta: 0.5 * (lo + hi),
        iters,
    })
}

/// Which coordinates sit at their lower limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ActiveSet {
    pub alpha: bool,
    pub beta: bool,
    pub gamma: bool,
}

impl ActiveSet {
    pub fn as_array(&self) -> [bool; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Candidate {
    pub split: TimeSplit,
    /// `alpha + beta + gamma`, not yet forced to one.
    pub z: f64,
    pub active: ActiveSet,
    pub inner_iters: usize,
}

/// Clamped stationary point for a fixed multiplier.
pub fn candidate_split(
    lambda: f64,
    tau: &TauConstants,
    mins: &SplitLimits,
    cfg: &SolverConfig,
) -> Result<Candidate> {
    let root = solve_beta(lambda, tau.tau2, tau.tau3, cfg)?;
    let a_free = (2.0 * tau.tau1 / lambda).cbrt();
    let g_free = (2.0 * tau.tau4 / lambda).cbrt();
    let active = ActiveSet {
        alpha: a_free <= mins.alpha_min,
        beta: root.beta <= mins.beta_min,
        gamma: g_free <= mins.gamma_min,
    };
    let split = TimeSplit::new(
        a_free.max(mins.alpha_min),
        root.beta.max(mins.beta_min),
        g_free.max(mins.gamma_min),
    );
    Ok(Candidate {
        z: split.sum(),
        split,
        active,
        inner_iters: root.iters,
    })
}

/// One outer bisection step, recorded for convergence plots.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OuterStep {
    pub iter: usize,
    pub lambda: f64,
    pub z: f64,
    pub energy: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolveReport {
    pub split: TimeSplit,
    pub lambda_star: f64,
    /// Bisection steps on lambda, excluding bracket search.
    pub outer_iters: usize,
    pub bracket_steps: usize,
    pub total_inner_iters: usize,
    pub e_tot: f64,
    pub active_set: ActiveSet,
    pub feasible: bool,
    /// `|z(lambda*) - 1|` before the final projection onto the simplex.
    pub z_residual: f64,
    /// Final lambda bracket width.
    pub bracket_width: f64,
    pub trace: Vec<OuterStep>,
}

fn validate_limits(mins: &SplitLimits) -> Result<()> {
    if mins
        .as_array()
        .iter()
        .any(|m| !(m.is_finite() && *m >= 0.0))
    {
        return Err(Error::InvalidInput(format!(
            "split limits must be non-negative: {mins:?}"
        )));
    }
    if mins.sum() > 1.0 {
        return Err(Error::InfeasibleLatency {
            min_sum: mins.sum(),
        });
    }
    Ok(())
}

/// Multiplier at which every coordinate reaches its limit.
fn saturation_lambda(tau: &TauConstants, mins: &SplitLimits) -> f64 {
    let a = 2.0 * tau.tau1 / mins.alpha_min.powi(3);
    let g = 2.0 * tau.tau4 / mins.gamma_min.powi(3);
    let b = -comm_gradient(mins.beta_min, tau.tau2, tau.tau3);
    a.max(g).max(b)
}

/// Push the residual `1 - z` onto the unclamped coordinates in proportion
/// to their size, so the returned split sums to one.
fn project(split: TimeSplit, active: ActiveSet) -> TimeSplit {
    let mut x = split.as_array();
    let free = active.as_array().map(|a| !a);
    let residual = 1.0 - split.sum();
    let mut mass: f64 = x.iter().zip(free).filter(|(_, f)| *f).map(|(v, _)| v).sum();
    let use_all = mass <= 0.0;
    if use_all {
        mass = x.iter().sum();
    }
    for (v, f) in x.iter_mut().zip(free) {
        if f || use_all {
            *v += residual * *v / mass;
        }
    }
    TimeSplit::new(x[0], x[1], x[2])
}

/// Solve the split problem by outer bisection on the multiplier.
pub fn solve(tau: &TauConstants, mins: &SplitLimits, cfg: &SolverConfig) -> Result<SolveReport> {
    cfg.validate()?;
    tau.validate()?;
    validate_limits(mins)?;

    if mins.sum() >= 1.0 - f64::EPSILON {
        let split = TimeSplit::new(mins.alpha_min, mins.beta_min, mins.gamma_min);
        return Ok(SolveReport {
            split,
            lambda_star: saturation_lambda(tau, mins),
            outer_iters: 0,
            bracket_steps: 0,
            total_inner_iters: 0,
            e_tot: energy_of_split(tau, &split),
            active_set: ActiveSet {
                alpha: true,
                beta: true,
                gamma: true,
            },
            feasible: true,
            z_residual: (split.sum() - 1.0).abs(),
            bracket_width: 0.0,
            trace: Vec::new(),
        });
    }

    let mut inner = 0;
    let mut eval = |lambda: f64| -> Result<Candidate> {
        let c = candidate_split(lambda, tau, mins, cfg)?;
        inner += c.inner_iters;
        Ok(c)
    };

    // bracket so that z(lo) >= 1 >= z(hi)
    let growth = cfg.lambda_bracket_growth;
    let mut bracket_steps = 0;
    let start = eval(1.0)?.z;
    let cap = |steps: usize| Error::IterationCap {
        stage: "lambda bracket",
        iters: steps,
    };
    let (mut lo, mut hi, mut z_lo, mut z_hi) = if start > 1.0 {
        let (mut lo, mut hi, mut z_lo) = (1.0, growth, start);
        let mut z_hi = eval(hi)?.z;
        while z_hi > 1.0 {
            (lo, z_lo) = (hi, z_hi);
            hi *= growth;
            bracket_steps += 1;
            if bracket_steps > cfg.max_iters || !hi.is_finite() {
                return Err(cap(bracket_steps));
            }
            z_hi = eval(hi)?.z;
        }
        (lo, hi, z_lo, z_hi)
    } else if start < 1.0 {
        let (mut lo, mut hi, mut z_hi) = (1.0 / growth, 1.0, start);
        let mut z_lo = eval(lo)?.z;
        while z_lo < 1.0 {
            (hi, z_hi) = (lo, z_lo);
            lo /= growth;
            bracket_steps += 1;
            if bracket_steps > cfg.max_iters || lo == 0.0 {
                return Err(cap(bracket_steps));
            }
            z_lo = eval(lo)?.z;
        }
        (lo, hi, z_lo, z_hi)
    } else {
        (1.0, 1.0, 1.0, 1.0)
    };
    log::debug!("lambda bracket [{lo:.3e}, {hi:.3e}] after {bracket_steps} expansions");

    let mut trace = Vec::new();
    let mut outer = 0;
    while lo < hi && !cfg.converged(lo, hi) {
        if outer >= cfg.max_iters {
            return Err(Error::IterationCap {
                stage: "lambda bisection",
                iters: outer,
            });
        }
        let lambda = 0.5 * (lo + hi);
        let c = eval(lambda)?;
        outer += 1;
        trace.push(OuterStep {
            iter: outer,
            lambda,
            z: c.z,
            energy: energy_of_split(tau, &c.split),
        });
        if c.z < 1.0 {
            (hi, z_hi) = (lambda, c.z);
        } else {
            (lo, z_lo) = (lambda, c.z);
        }
    }

    // z is smooth across the final bracket except at a clamp switch, so a
    // secant step lands on z = 1 far closer than the bracket midpoint.
    let lambda_star = if z_lo > z_hi {
        (lo + (z_lo - 1.0) / (z_lo - z_hi) * (hi - lo)).clamp(lo, hi)
    } else {
        0.5 * (lo + hi)
    };
    let fine = SolverConfig {
        tol: f64::EPSILON,
        max_iters: 4 * f64::MANTISSA_DIGITS as usize,
        ..*cfg
    };
    let c = candidate_split(lambda_star, tau, mins, &fine)?;
    inner += c.inner_iters;
    let split = project(c.split, c.active);
    log::debug!(
        "solved: lambda* = {lambda_star:.6e}, z = {:.15}, outer = {outer}, inner = {inner}",
        c.z
    );
    Ok(SolveReport {
        split,
        lambda_star,
        outer_iters: outer,
        bracket_steps,
        total_inner_iters: inner,
        e_tot: energy_of_split(tau, &split),
        active_set: c.active,
        feasible: true,
        z_residual: (c.z - 1.0).abs(),
        bracket_width: hi - lo,
        trace,
    })
}

/// First-order optimality residuals at a solution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KktCertificate {
    /// `|dE/dx + lambda| / lambda` for unclamped coordinates, zero otherwise.
    pub stationarity: [f64; 3],
    /// Implied inequality multiplier `(dE/dx + lambda) / lambda` for clamped
    /// coordinates, zero otherwise.
    pub dual: [f64; 3],
    pub sum_residual: f64,
}

pub fn kkt_certificate(tau: &TauConstants, report: &SolveReport) -> KktCertificate {
    let TimeSplit { alpha, beta, gamma } = report.split;
    let lambda = report.lambda_star;
    let grads = [
        -2.0 * tau.tau1 / alpha.powi(3),
        comm_gradient(beta, tau.tau2, tau.tau3),
        -2.0 * tau.tau4 / gamma.powi(3),
    ];
    let mut stationarity = [0.0; 3];
    let mut dual = [0.0; 3];
    for (i, clamped) in report.active_set.as_array().into_iter().enumerate() {
        let mu = (grads[i] + lambda) / lambda;
        if clamped {
            dual[i] = mu;
        } else {
            stationarity[i] = mu.abs();
        }
    }
    KktCertificate {
        stationarity,
        dual,
        sum_residual: (report.split.sum() - 1.0).abs(),
    }
}

/// Exhaustive grid search over the feasible simplex. Test oracle only.
///
/// The grid steps by `(1 - sum(mins)) / grid_n` from each lower limit, with
/// `gamma` taking the remainder. Ties keep the first point in row-major
/// `(alpha, beta)` order.
pub fn brute_force_oracle(
    tau: &TauConstants,
    mins: &SplitLimits,
    grid_n: usize,
) -> Result<TimeSplit> {
    if grid_n < 10 {
        return Err(Error::InvalidInput(format!(
            "grid_n must be at least 10, got {grid_n}"
        )));
    }
    validate_limits(mins)?;
    let slack = 1.0 - mins.sum();
    let step = slack / grid_n as f64;

    let best = (0..=grid_n)
        .into_par_iter()
        .filter_map(|i| {
            let alpha = mins.alpha_min + i as f64 * step;
            let mut row_best: Option<(f64, usize, usize)> = None;
            for j in 0..=(grid_n - i) {
                let beta = mins.beta_min + j as f64 * step;
                let gamma = mins.gamma_min + (grid_n - i - j) as f64 * step;
                if alpha <= 0.0 || beta <= 0.0 || gamma <= 0.0 {
                    continue;
                }
                let e = energy_of_split(tau, &TimeSplit::new(alpha, beta, gamma));
                if e.is_nan() {
                    continue;
                }
                if row_best.is_none_or(|(b, _, _)| e < b) {
                    row_best = Some((e, i, j));
                }
            }
            row_best
        })
        .reduce_with(|a, b| {
            if b.0 < a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) {
                b
            } else {
                a
            }
        })
        .ok_or_else(|| Error::Numeric("oracle grid has no interior point".into()))?;

    let (_, i, j) = best;
    Ok(TimeSplit::new(
        mins.alpha_min + i as f64 * step,
        mins.beta_min + j as f64 * step,
        mins.gamma_min + (grid_n - i - j) as f64 * step,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Feasibility {
    Feasible,
    FidelityInfeasible,
    LatencyInfeasible,
}

impl Feasibility {
    pub fn label(self) -> &'static str {
        match self {
            Feasibility::Feasible => "ok",
            Feasibility::FidelityInfeasible => "fidelity_infeasible",
            Feasibility::LatencyInfeasible => "latency_infeasible",
        }
    }
}

/// Pre-check before solving: the fidelity target must be reachable, then the
/// split limits must fit in the budget.
pub fn check_feasible(fidelity: &Result<ScalingFactor>, mins: Option<&SplitLimits>) -> Feasibility {
    match fidelity {
        Err(Error::InfeasibleFidelity { .. }) => Feasibility::FidelityInfeasible,
        Err(_) => Feasibility::FidelityInfeasible,
        Ok(_) => match mins {
            Some(m) if m.sum() > 1.0 => Feasibility::LatencyInfeasible,
            _ => Feasibility::Feasible,
        },
    }
}
