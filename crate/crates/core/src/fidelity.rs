//! Semantic-fidelity curve `phi(pi) = k1 * ln(k2 / pi + k3) + k4`.
//!
//! The curve maps the width scaling factor of a flexible semantic model to
//! the fidelity its sub-model achieves. It is only defined on `[pi_min, 1]`;
//! evaluating outside that window is a range error, never an extrapolation.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack allowed when comparing a scaling factor against window edges.
const WINDOW_SLACK: f64 = 1e-12;

/// Width multiplier of a sub-model, in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct ScalingFactor(f64);

impl ScalingFactor {
    pub const FULL: ScalingFactor = ScalingFactor(1.0);

    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value <= 1.0 {
            Ok(ScalingFactor(value))
        } else {
            Err(Error::InvalidInput(format!(
                "scaling factor must lie in (0, 1], got {value}"
            )))
        }
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for ScalingFactor {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        ScalingFactor::new(v)
    }
}

impl From<ScalingFactor> for f64 {
    fn from(p: ScalingFactor) -> f64 {
        p.0
    }
}

/// Fitted fidelity curve with its validity lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelityCurve {
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub kappa4: f64,
    pub pi_min: ScalingFactor,
}

impl FidelityCurve {
    pub fn new(kappa1: f64, kappa2: f64, kappa3: f64, kappa4: f64, pi_min: ScalingFactor) -> Self {
        FidelityCurve {
            kappa1,
            kappa2,
            kappa3,
            kappa4,
            pi_min,
        }
    }

    /// `phi(pi) = 0.9 + 0.05 ln(pi)` on `[0.25, 1]`, the synthetic default curve.
    pub fn synthetic_default() -> Self {
        FidelityCurve::new(-0.05, 1.0, 0.0, 0.9, ScalingFactor(0.25))
    }

    fn log_argument(&self, pi: f64) -> f64 {
        self.kappa2 / pi + self.kappa3
    }

    pub fn eval(&self, pi: ScalingFactor) -> Result<f64> {
        eval_fidelity(self, pi)
    }
}

/// A measured `(pi, fidelity)` point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FidelitySample {
    pub pi: ScalingFactor,
    pub fidelity: f64,
}

impl FidelitySample {
    pub fn new(pi: f64, fidelity: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&fidelity) {
            return Err(Error::InvalidInput(format!(
                "fidelity must lie in [0, 1], got {fidelity}"
            )));
        }
        Ok(FidelitySample {
            pi: ScalingFactor::new(pi)?,
            fidelity,
        })
    }
}

fn check_window(pi: f64, pi_min: f64) -> Result<()> {
    if pi < pi_min - WINDOW_SLACK || pi > 1.0 + WINDOW_SLACK {
        return Err(Error::Range { pi, pi_min });
    }
    Ok(())
}

/// Evaluate the curve at `pi`, which must lie in `[curve.pi_min, 1]`.
pub fn eval_fidelity(curve: &FidelityCurve, pi: ScalingFactor) -> Result<f64> {
    check_window(pi.get(), curve.pi_min.get())?;
    let arg = curve.log_argument(pi.get());
    if !(arg > 0.0) {
        return Err(Error::Domain(format!(
            "k2/pi + k3 = {arg} at pi = {}",
            pi.get()
        )));
    }
    Ok(curve.kappa1 * arg.ln() + curve.kappa4)
}

/// Smallest scaling factor meeting `phi_min`.
///
/// The closed-form inverse is clamped up to `pi_min` when it falls below the
/// window (the delivered fidelity then exceeds the target). A target above
/// the full model's fidelity is reported as [`Error::InfeasibleFidelity`].
pub fn invert_fidelity(
    curve: &FidelityCurve,
    phi_min: f64,
    pi_min: ScalingFactor,
) -> Result<ScalingFactor> {
    if !(0.0..=1.0).contains(&phi_min) {
        return Err(Error::InvalidInput(format!(
            "phi_min must lie in [0, 1], got {phi_min}"
        )));
    }
    let phi_full = eval_fidelity(curve, ScalingFactor::FULL)?;
    if phi_full < phi_min {
        return Err(Error::InfeasibleFidelity { phi_min, phi_full });
    }
    let floor = curve.pi_min.get().max(pi_min.get());
    let phi_floor = eval_fidelity(curve, ScalingFactor(floor))?;

    if curve.kappa1 == 0.0 {
        // flat curve: every admissible width meets the target
        return Ok(ScalingFactor(floor));
    }
    let denom = ((phi_min - curve.kappa4) / curve.kappa1).exp() - curve.kappa3;
    let pi_star = curve.kappa2 / denom;
    if !(pi_star.is_finite() && pi_star > 0.0) {
        if phi_min <= phi_floor {
            return Ok(ScalingFactor(floor));
        }
        return Err(Error::Numeric(format!(
            "inverse denominator {denom} gives pi* = {pi_star}"
        )));
    }
    if pi_star < floor {
        return Ok(ScalingFactor(floor));
    }
    if pi_star > 1.0 {
        // phi(1) >= phi_min was established above, so this is rounding
        if pi_star <= 1.0 + 1e-9 {
            return Ok(ScalingFactor::FULL);
        }
        return Err(Error::InfeasibleFidelity { phi_min, phi_full });
    }
    Ok(ScalingFactor(pi_star))
}

/// Analytic check of the curve invariants on `[pi_min, 1]`.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct CurveDiagnostics {
    pub log_domain_ok: bool,
    pub monotone_ok: bool,
    pub range_ok: bool,
    pub issues: Vec<String>,
}

impl CurveDiagnostics {
    pub fn is_valid(&self) -> bool {
        self.log_domain_ok && self.monotone_ok && self.range_ok
    }
}

pub fn validate_curve(curve: &FidelityCurve) -> CurveDiagnostics {
    let mut diag = CurveDiagnostics::default();
    let pi_min = curve.pi_min.get();

    // k2/pi + k3 is affine in 1/pi, so positivity on the window reduces to
    // positivity at both ends.
    let arg_full = curve.log_argument(1.0);
    let arg_floor = curve.log_argument(pi_min);
    diag.log_domain_ok = arg_full > 0.0 && arg_floor > 0.0;
    if !diag.log_domain_ok {
        diag.issues.push(format!(
            "log argument not positive: {arg_floor} at pi_min, {arg_full} at pi = 1"
        ));
    }

    diag.monotone_ok = curve.kappa1 * curve.kappa2 <= 0.0;
    if !diag.monotone_ok {
        diag.issues.push(format!(
            "decreasing in pi: k1*k2 = {} > 0",
            curve.kappa1 * curve.kappa2
        ));
    }

    // phi is monotone in pi either way, so the endpoints bound its range.
    if diag.log_domain_ok {
        let lo = curve.kappa1 * arg_floor.ln() + curve.kappa4;
        let hi = curve.kappa1 * arg_full.ln() + curve.kappa4;
        let in_unit = |v: f64| (0.0..=1.0).contains(&v);
        diag.range_ok = in_unit(lo) && in_unit(hi);
        if !diag.range_ok {
            diag.issues.push(format!(
                "fidelity leaves [0, 1]: phi(pi_min) = {lo}, phi(1) = {hi}"
            ));
        }
    }
    diag
}

#[derive(Debug, Clone, Copy)]
pub struct FitOptions {
    /// Largest acceptable residual RMS.
    pub rms_ceiling: f64,
    /// Grid points per branch over the log-offset parameter.
    pub grid_points: usize,
    /// Number of best grid cells refined locally.
    pub polish_starts: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            rms_ceiling: 0.05,
            grid_points: 97,
            polish_starts: 4,
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FitResult {
    pub curve: FidelityCurve,
    pub rms: f64,
}

/// Which branch of the curve family: `k2 = +1` or `k2 = -1` after absorbing
/// `ln|k2|` into `k4`.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Branch {
    Positive,
    Negative,
}

const GRID_SPAN: f64 = 12.0;

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Positive => 1.0,
            Branch::Negative => -1.0,
        }
    }

    /// Map the unconstrained grid coordinate `t` to `k3` so that the log
    /// argument stays positive over the whole window.
    fn offset(self, t: f64, pi_min: f64) -> f64 {
        match self {
            Branch::Positive => -1.0 + t.exp(),
            Branch::Negative => 1.0 / pi_min + t.exp(),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    sse: f64,
    t: f64,
    branch: Branch,
    kappa1: f64,
    kappa4: f64,
}

/// Least-squares `phi ~ k1 * u + k4` with the monotonicity sign constraint
/// `k1 * sign <= 0`.
fn profile(samples: &[FidelitySample], branch: Branch, t: f64, pi_min: f64) -> Option<Candidate> {
    let sign = branch.sign();
    let k3 = branch.offset(t, pi_min);
    let n = samples.len() as f64;
    let mut us = Vec::with_capacity(samples.len());
    for s in samples {
        let arg = sign / s.pi.get() + k3;
        if !(arg > 0.0) {
            return None;
        }
        us.push(arg.ln());
    }
    let u_mean = us.iter().sum::<f64>() / n;
    let phi_mean = samples.iter().map(|s| s.fidelity).sum::<f64>() / n;
    let (mut suu, mut sup) = (0.0, 0.0);
    for (u, s) in us.iter().zip(samples) {
        suu += (u - u_mean) * (u - u_mean);
        sup += (u - u_mean) * (s.fidelity - phi_mean);
    }
    let mut k1 = if suu > 0.0 { sup / suu } else { 0.0 };
    if k1 * sign > 0.0 {
        k1 = 0.0;
    }
    let k4 = phi_mean - k1 * u_mean;
    let sse = us
        .iter()
        .zip(samples)
        .map(|(u, s)| {
            let r = k1 * u + k4 - s.fidelity;
            r * r
        })
        .sum::<f64>();
    sse.is_finite().then_some(Candidate {
        sse,
        t,
        branch,
        kappa1: k1,
        kappa4: k4,
    })
}

fn golden_section(
    samples: &[FidelitySample],
    branch: Branch,
    mut lo: f64,
    mut hi: f64,
    pi_min: f64,
) -> Option<Candidate> {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let f = |t: f64| profile(samples, branch, t, pi_min).map_or(f64::INFINITY, |c| c.sse);
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..200 {
        if hi - lo < 1e-12 {
            break;
        }
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    profile(samples, branch, 0.5 * (lo + hi), pi_min)
}

fn to_curve(c: &Candidate, pi_min: ScalingFactor) -> FidelityCurve {
    FidelityCurve::new(
        c.kappa1,
        c.branch.sign(),
        c.branch.offset(c.t, pi_min.get()),
        c.kappa4,
        pi_min,
    )
}

/// Fit the four curve constants with the default [`FitOptions`].
pub fn fit_curve(samples: &[FidelitySample], pi_min: ScalingFactor) -> Result<FitResult> {
    fit_curve_with(samples, pi_min, &FitOptions::default())
}

/// Nonlinear least squares over the curve family.
///
/// The model is linear in `(k1, k4)` once `(k2, k3)` are fixed, and `|k2|`
/// can be folded into `k4`, so the search runs over the sign of `k2` and a
/// log-offset grid for `k3`, solving `(k1, k4)` in closed form at each point.
/// The best grid cells are then refined by golden-section search.
pub fn fit_curve_with(
    samples: &[FidelitySample],
    pi_min: ScalingFactor,
    opts: &FitOptions,
) -> Result<FitResult> {
    const PARAMS: usize = 4;
    let mut distinct: Vec<f64> = samples.iter().map(|s| s.pi.get()).collect();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();
    if distinct.len() < PARAMS {
        return Err(Error::InsufficientData {
            needed: PARAMS,
            got: distinct.len(),
        });
    }
    if let Some(s) = samples
        .iter()
        .find(|s| s.pi.get() < pi_min.get() - WINDOW_SLACK)
    {
        return Err(Error::Range {
            pi: s.pi.get(),
            pi_min: pi_min.get(),
        });
    }
    if opts.grid_points < 3 {
        return Err(Error::InvalidInput(
            "fit grid needs at least 3 points".into(),
        ));
    }

    let step = 2.0 * GRID_SPAN / (opts.grid_points - 1) as f64;
    let mut grid: Vec<Candidate> = Vec::with_capacity(2 * opts.grid_points);
    for branch in [Branch::Positive, Branch::Negative] {
        for i in 0..opts.grid_points {
            let t = -GRID_SPAN + i as f64 * step;
            if let Some(c) = profile(samples, branch, t, pi_min.get()) {
                grid.push(c);
            }
        }
    }
    grid.sort_by(|a, b| a.sse.total_cmp(&b.sse));

    let mut polished: Vec<Candidate> = grid.iter().take(opts.polish_starts).copied().collect();
    for start in grid.iter().take(opts.polish_starts) {
        if let Some(c) = golden_section(
            samples,
            start.branch,
            start.t - step,
            start.t + step,
            pi_min.get(),
        ) {
            polished.push(c);
        }
    }
    polished.sort_by(|a, b| a.sse.total_cmp(&b.sse));

    let n = samples.len() as f64;
    let mut best_rms = f64::INFINITY;
    for cand in &polished {
        let curve = to_curve(cand, pi_min);
        let rms = (cand.sse / n).sqrt();
        if validate_curve(&curve).is_valid() {
            if rms <= opts.rms_ceiling {
                log::debug!(
                    "fit: branch {:?}, t = {:.6}, rms = {rms:.3e}",
                    cand.branch,
                    cand.t
                );
                return Ok(FitResult { curve, rms });
            }
            best_rms = best_rms.min(rms);
        }
    }
    Err(Error::FitFailure {
        rms: best_rms,
        ceiling: opts.rms_ceiling,
    })
}

/// Read a `pi,fidelity` samples file. The first line is a header.
pub fn read_samples(path: &Path) -> Result<Vec<FidelitySample>> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_samples(&text)
}

pub fn parse_samples(text: &str) -> Result<Vec<FidelitySample>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::Config("samples file is empty".into()))?;
    let cols: Vec<&str> = header.split(',').map(str::trim).collect();
    if cols != ["pi", "fidelity"] {
        return Err(Error::Config(format!(
            "samples header must be `pi,fidelity`, got `{header}`"
        )));
    }
    lines
        .map(|(no, line)| {
            let mut it = line.split(',').map(str::trim);
            let parse = |field: Option<&str>| -> Result<f64> {
                field
                    .and_then(|f| f.parse::<f64>().ok())
                    .ok_or_else(|| Error::Config(format!("line {}: malformed `{line}`", no + 1)))
            };
            let pi = parse(it.next())?;
            let fidelity = parse(it.next())?;
            if it.next().is_some() {
                return Err(Error::Config(format!("line {}: too many fields", no + 1)));
            }
            FidelitySample::new(pi, fidelity)
                .map_err(|e| Error::Config(format!("line {}: {e}", no + 1)))
        })
        .collect()
}

pub fn format_samples(samples: &[FidelitySample]) -> String {
    let mut out = String::from("pi,fidelity\n");
    for s in samples {
        let _ = writeln!(out, "{},{}", s.pi.get(), s.fidelity);
    }
    out
}

/// Serialized form of a fitted curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveDocument {
    pub kappa1: f64,
    pub kappa2: f64,
    pub kappa3: f64,
    pub kappa4: f64,
    pub pi_min: f64,
    pub fit_rms: f64,
}

impl CurveDocument {
    pub fn from_fit(fit: &FitResult) -> Self {
        let c = &fit.curve;
        CurveDocument {
            kappa1: c.kappa1,
            kappa2: c.kappa2,
            kappa3: c.kappa3,
            kappa4: c.kappa4,
            pi_min: c.pi_min.get(),
            fit_rms: fit.rms,
        }
    }

    pub fn curve(&self) -> Result<FidelityCurve> {
        Ok(FidelityCurve::new(
            self.kappa1,
            self.kappa2,
            self.kappa3,
            self.kappa4,
            ScalingFactor::new(self.pi_min)?,
        ))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("curve document is always serializable")
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sf(v: f64) -> ScalingFactor {
        ScalingFactor::new(v).unwrap()
    }

    fn example() -> FidelityCurve {
        FidelityCurve::synthetic_default()
    }

    /// Independent evaluation of the curve formula.
    fn direct(k: [f64; 4], pi: f64) -> f64 {
        k[0] * (k[1] / pi + k[2]).ln() + k[3]
    }

    #[test]
    fn eval_examples() {
        let c = example();
        assert_eq!(eval_fidelity(&c, sf(1.0)).unwrap(), 0.9);
        let at_inv_e = eval_fidelity(&c, sf((-1.0f64).exp())).unwrap();
        assert!((at_inv_e - 0.85).abs() < 1e-12);
        let quarter = eval_fidelity(&c, sf(0.25)).unwrap();
        let oracle = direct([-0.05, 1.0, 0.0, 0.9], 0.25);
        assert!((quarter - oracle).abs() < 1e-15);
        assert!((quarter - 0.8307).abs() < 1e-4);
    }

    #[test]
    fn eval_rejects_outside_window() {
        let c = example();
        assert!(matches!(
            eval_fidelity(&c, sf(0.2)),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn eval_rejects_nonpositive_log_argument() {
        let c = FidelityCurve::new(-0.05, -1.0, 0.5, 0.9, sf(0.25));
        assert!(matches!(eval_fidelity(&c, sf(1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn invert_examples() {
        let c = example();
        let p = invert_fidelity(&c, 0.85, sf(0.25)).unwrap();
        assert!((p.get() - (-1.0f64).exp()).abs() < 1e-12);
        assert!((eval_fidelity(&c, p).unwrap() - 0.85).abs() < 1e-12);

        assert_eq!(invert_fidelity(&c, 0.9, sf(0.25)).unwrap().get(), 1.0);
        assert!(matches!(
            invert_fidelity(&c, 0.95, sf(0.25)),
            Err(Error::InfeasibleFidelity { .. })
        ));
    }

    #[test]
    fn invert_clamps_low_targets() {
        let c = example();
        let p = invert_fidelity(&c, 0.80, sf(0.25)).unwrap();
        assert_eq!(p.get(), 0.25);
        assert!(eval_fidelity(&c, p).unwrap() > 0.80);
    }

    #[test]
    fn invert_negative_branch() {
        // k2 < 0 branch: phi = -0.05 ln(5 - 1/pi) + 1.0, increasing in pi
        let c = FidelityCurve::new(0.05, -1.0, 5.0, 0.9, sf(0.25));
        assert!(validate_curve(&c).is_valid());
        let target = eval_fidelity(&c, sf(0.5)).unwrap();
        let p = invert_fidelity(&c, target, sf(0.25)).unwrap();
        assert!((p.get() - 0.5).abs() < 1e-12);
    }

    #[test]
    fn validate_examples() {
        assert!(validate_curve(&example()).is_valid());

        let rising_wrong = FidelityCurve::new(0.05, 1.0, 0.0, 0.9, sf(0.25));
        let d = validate_curve(&rising_wrong);
        assert!(!d.monotone_ok);
        assert!(d.log_domain_ok);

        let bad_log = FidelityCurve::new(-0.05, -1.0, 0.5, 0.9, sf(0.25));
        let d = validate_curve(&bad_log);
        assert!(!d.log_domain_ok);
        assert!(!d.is_valid());
    }

    #[test]
    fn fit_noiseless_recovers_evaluations() {
        let gen = example();
        let pis = [0.25, 0.4, 0.6, 0.8, 1.0];
        let samples: Vec<_> = pis
            .iter()
            .map(|&p| FidelitySample::new(p, direct([-0.05, 1.0, 0.0, 0.9], p)).unwrap())
            .collect();
        let fit = fit_curve(&samples, sf(0.25)).unwrap();
        assert!(fit.rms < 1e-6);
        for &p in &pis {
            let got = eval_fidelity(&fit.curve, sf(p)).unwrap();
            let want = eval_fidelity(&gen, sf(p)).unwrap();
            assert!((got - want).abs() < 1e-6, "pi {p}: {got} vs {want}");
        }
    }

    #[test]
    fn fit_with_noise() {
        let gen = example();
        let pis = [0.25, 0.4, 0.6, 0.8, 1.0];
        let noise = [1e-3, -1e-3, 1e-3, -1e-3, 1e-3];
        let samples: Vec<_> = pis
            .iter()
            .zip(noise)
            .map(|(&p, n)| FidelitySample::new(p, eval_fidelity(&gen, sf(p)).unwrap() + n).unwrap())
            .collect();
        let fit = fit_curve(&samples, sf(0.25)).unwrap();
        let rms = (pis
            .iter()
            .map(|&p| {
                let d =
                    eval_fidelity(&fit.curve, sf(p)).unwrap() - eval_fidelity(&gen, sf(p)).unwrap();
                d * d
            })
            .sum::<f64>()
            / pis.len() as f64)
            .sqrt();
        assert!(rms < 5e-3, "rms against generator {rms}");
    }

    #[test]
    fn fit_needs_four_distinct_points() {
        let samples: Vec<_> = [0.25, 0.5, 1.0]
            .iter()
            .map(|&p| FidelitySample::new(p, 0.8).unwrap())
            .collect();
        assert!(matches!(
            fit_curve(&samples, sf(0.25)),
            Err(Error::InsufficientData { needed: 4, got: 3 })
        ));
    }

    #[test]
    fn fit_failure_when_ceiling_unreachable() {
        // zig-zag data no monotone curve can follow
        let samples: Vec<_> = [(0.25, 0.9), (0.5, 0.1), (0.75, 0.9), (1.0, 0.1)]
            .iter()
            .map(|&(p, f)| FidelitySample::new(p, f).unwrap())
            .collect();
        let opts = FitOptions {
            rms_ceiling: 0.01,
            ..FitOptions::default()
        };
        assert!(matches!(
            fit_curve_with(&samples, sf(0.25), &opts),
            Err(Error::FitFailure { .. })
        ));
    }

    #[test]
    fn samples_file_parsing() {
        let parsed = parse_samples("pi,fidelity\n0.25,0.83\n1.0,0.9\n").unwrap();
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[1].fidelity, 0.9);
        assert!(parse_samples("0.25,0.83\n").is_err());
        assert!(parse_samples("pi,fidelity\n0.25,x\n").is_err());
        assert!(parse_samples("pi,fidelity\n0.25,1.5\n").is_err());
        let text = format_samples(&parsed);
        assert_eq!(parse_samples(&text).unwrap(), parsed);
    }

    #[test]
    fn curve_document_toml() {
        let doc = CurveDocument {
            kappa1: -0.05,
            kappa2: 1.0,
            kappa3: 0.0,
            kappa4: 0.9,
            pi_min: 0.25,
            fit_rms: 0.0,
        };
        let text = doc.to_toml();
        assert!(text.contains("kappa1") && text.contains("fit_rms"));
        assert_eq!(CurveDocument::from_toml(&text).unwrap(), doc);
    }
}
