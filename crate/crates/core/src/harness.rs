//! End-to-end scenario runs: the width-adaptive method, the fixed-model
//! baselines, parameter sweeps and result export.

use std::fmt;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fidelity::{
    eval_fidelity, invert_fidelity, validate_curve, FidelityCurve, ScalingFactor,
};
use crate::solver::{check_feasible, solve, Feasibility, SolverConfig};
use crate::sysmodel::{
    derive_workload, evaluate_workload, recover_strategy, split_lower_limits, tau_constants,
    CostReport, DeviceProfile, LinkProfile, TimeSplit, TransmissionStrategy, WorkloadProfile,
    WorkloadTriple,
};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constraints {
    /// Latency budget, seconds.
    pub t_max: f64,
    pub phi_min: f64,
    pub pi_min: ScalingFactor,
}

impl Default for Constraints {
    fn default() -> Self {
        Constraints {
            t_max: 8.0,
            phi_min: 0.80,
            pi_min: ScalingFactor::new(0.25).unwrap(),
        }
    }
}

/// Piecewise-linear map from a baseline parameter to measured fidelity.
#[derive(Debug, Clone, PartialEq)]
pub struct FidelityMap {
    points: Vec<(f64, f64)>,
}

impl FidelityMap {
    pub fn new(mut points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidInput(
                "fidelity map needs at least one point".into(),
            ));
        }
        if points
            .iter()
            .any(|&(p, f)| !p.is_finite() || !(0.0..=1.0).contains(&f))
        {
            return Err(Error::InvalidInput(format!(
                "bad fidelity map points {points:?}"
            )));
        }
        points.sort_by(|a, b| a.0.total_cmp(&b.0));
        if points.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput(
                "fidelity map has duplicate parameters".into(),
            ));
        }
        Ok(FidelityMap { points })
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    /// Linear interpolation; `None` outside the covered parameter range.
    pub fn eval(&self, param: f64) -> Option<f64> {
        let first = self.points[0];
        let last = *self.points.last().unwrap();
        if param < first.0 || param > last.0 {
            return None;
        }
        if param == last.0 {
            return Some(last.1);
        }
        let k = self.points.partition_point(|&(p, _)| p <= param);
        let (p0, f0) = self.points[k - 1];
        let (p1, f1) = self.points[k];
        Some(f0 + (param - p0) / (p1 - p0) * (f1 - f0))
    }

    /// Copy with an extra point, unless one already exists at `param`.
    fn with_anchor(&self, param: f64, fidelity: f64) -> FidelityMap {
        let mut points = self.points.clone();
        if !points.iter().any(|&(p, _)| p == param) {
            points.push((param, fidelity.clamp(0.0, 1.0)));
            points.sort_by(|a, b| a.0.total_cmp(&b.0));
        }
        FidelityMap { points }
    }

    /// Largest parameter whose mapped fidelity reaches `target`.
    fn largest_meeting(&self, target: f64) -> Option<f64> {
        let pts = &self.points;
        if pts.len() == 1 {
            return (pts[0].1 >= target).then_some(pts[0].0);
        }
        for w in pts.windows(2).rev() {
            let ((p0, f0), (p1, f1)) = (w[0], w[1]);
            if f1 >= target {
                return Some(p1);
            }
            if f0 >= target {
                // f0 >= target > f1
                return Some(p0 + (target - f0) / (f1 - f0) * (p1 - p0));
            }
        }
        None
    }
}

/// Fixed data volume and fidelity of an external codec, shown for reference.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExternalReference {
    pub data_bits: f64,
    pub fidelity: f64,
}

/// Measured baseline fidelities.
#[derive(Debug, Clone, PartialEq)]
pub struct BaselineMaps {
    pub prune: FidelityMap,
    pub quant: FidelityMap,
    pub jpeg: ExternalReference,
}

impl Default for BaselineMaps {
    fn default() -> Self {
        BaselineMaps {
            prune: FidelityMap::new(vec![(0.1, 0.85), (0.3, 0.80)]).unwrap(),
            quant: FidelityMap::new(vec![(3.0, 0.80), (4.0, 0.85)]).unwrap(),
            jpeg: ExternalReference {
                data_bits: 2.76e6,
                fidelity: 0.73,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub workload: WorkloadProfile,
    pub devices: DeviceProfile,
    pub link: LinkProfile,
    pub constraints: Constraints,
    pub curve: FidelityCurve,
    pub baselines: BaselineMaps,
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario {
            workload: WorkloadProfile::default(),
            devices: DeviceProfile::default(),
            link: LinkProfile::default(),
            constraints: Constraints::default(),
            curve: FidelityCurve::synthetic_default(),
            baselines: BaselineMaps::default(),
        }
    }
}

impl Scenario {
    pub fn validate(&self) -> Result<()> {
        self.workload.validate()?;
        self.devices.validate()?;
        self.link.validate()?;
        let c = &self.constraints;
        if !(c.t_max > 0.0 && c.t_max.is_finite()) {
            return Err(Error::InvalidInput(format!(
                "T_max must be positive, got {}",
                c.t_max
            )));
        }
        if !(0.0..=1.0).contains(&c.phi_min) {
            return Err(Error::InvalidInput(format!(
                "phi_min must lie in [0, 1], got {}",
                c.phi_min
            )));
        }
        let diag = validate_curve(&self.curve);
        if !diag.is_valid() {
            return Err(Error::InvalidInput(format!(
                "fidelity curve invalid: {}",
                diag.issues.join("; ")
            )));
        }
        Ok(())
    }

    /// Mapped fidelity of the lossless end of each baseline is that of the
    /// full model.
    fn full_model_fidelity(&self) -> f64 {
        eval_fidelity(&self.curve, ScalingFactor::FULL).unwrap_or(1.0)
    }

    fn prune_map(&self) -> FidelityMap {
        self.baselines
            .prune
            .with_anchor(0.0, self.full_model_fidelity())
    }

    fn quant_map(&self) -> FidelityMap {
        self.baselines
            .quant
            .with_anchor(8.0, self.full_model_fidelity())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum BaselineSpec {
    /// Uncompressed transmission, no model.
    Raw,
    /// Full model, fraction `rho` of semantic features dropped.
    Prune { rho: f64, fidelity_map: FidelityMap },
    /// Full model, payload quantized to `bits` bits per value.
    Quant { bits: u8, fidelity_map: FidelityMap },
    /// Reference row with fixed volume and fidelity; no energy model.
    External {
        label: String,
        data_bits: f64,
        fidelity: f64,
    },
}

impl BaselineSpec {
    pub fn label(&self) -> String {
        match self {
            BaselineSpec::Raw => "raw".into(),
            BaselineSpec::Prune { rho, .. } => format!("prune(rho={rho:.3})"),
            BaselineSpec::Quant { bits, .. } => format!("quant({bits} bits)"),
            BaselineSpec::External { label, .. } => label.clone(),
        }
    }
}

/// Methods a sweep can run; baselines pick their parameter to match `phi_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Fast,
    Raw,
    Prune,
    Quant,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Method::Fast),
            "raw" => Ok(Method::Raw),
            "prune" => Ok(Method::Prune),
            "quant" => Ok(Method::Quant),
            other => Err(Error::InvalidInput(format!(
                "unknown method `{other}` (expected fast, raw, prune, quant)"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    FidelityInfeasible,
    LatencyInfeasible,
    /// External reference row without an energy model.
    Reference,
    Failed(String),
}

impl Status {
    pub fn label(&self) -> &str {
        match self {
            Status::Ok => "ok",
            Status::FidelityInfeasible => "fidelity_infeasible",
            Status::LatencyInfeasible => "latency_infeasible",
            Status::Reference => "reference",
            Status::Failed(_) => "error",
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self, Status::Ok)
    }
}

impl From<Feasibility> for Status {
    fn from(f: Feasibility) -> Self {
        match f {
            Feasibility::Feasible => Status::Ok,
            Feasibility::FidelityInfeasible => Status::FidelityInfeasible,
            Feasibility::LatencyInfeasible => Status::LatencyInfeasible,
        }
    }
}

/// Solver diagnostics attached to an optimized result.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SolveSummary {
    pub split: TimeSplit,
    pub lambda_star: f64,
    pub outer_iters: usize,
    pub total_inner_iters: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScenarioResult {
    pub method: String,
    pub axis_value: Option<f64>,
    pub pi: Option<f64>,
    /// True when the width was raised to `pi_min` above the fidelity inverse.
    pub pi_clamped: bool,
    pub strategy: Option<TransmissionStrategy>,
    pub cost: Option<CostReport>,
    pub fidelity: Option<f64>,
    pub data_bits: Option<f64>,
    pub compute_cycles: Option<f64>,
    pub solve: Option<SolveSummary>,
    pub status: Status,
}

impl ScenarioResult {
    fn empty(method: String, status: Status) -> Self {
        ScenarioResult {
            method,
            axis_value: None,
            pi: None,
            pi_clamped: false,
            strategy: None,
            cost: None,
            fidelity: None,
            data_bits: None,
            compute_cycles: None,
            solve: None,
            status,
        }
    }

    pub fn e_tot(&self) -> Option<f64> {
        self.cost.map(|c| c.e_tot)
    }
}

/// Solve the split problem for a fixed workload and recover the strategy.
fn optimize_workload(
    s: &Scenario,
    w: &WorkloadTriple,
    pi: ScalingFactor,
    cfg: &SolverConfig,
    mut result: ScenarioResult,
) -> Result<ScenarioResult> {
    let t_max = s.constraints.t_max;
    let mins = split_lower_limits(w, &s.devices, &s.link, t_max);
    result.data_bits = Some(w.data_bits);
    result.compute_cycles = Some(w.compute_cycles());
    let verdict = check_feasible(&Ok(pi), Some(&mins));
    if verdict != Feasibility::Feasible {
        result.status = verdict.into();
        return Ok(result);
    }
    let tau = tau_constants(w, &s.link, &s.devices, t_max)?;
    let report = solve(&tau, &mins, cfg)?;
    let strategy = recover_strategy(&report.split, w, pi, &s.devices, &s.link, t_max)?;
    result.cost = Some(evaluate_workload(&strategy, w, &s.devices, &s.link)?);
    result.strategy = Some(strategy);
    result.solve = Some(SolveSummary {
        split: report.split,
        lambda_star: report.lambda_star,
        outer_iters: report.outer_iters,
        total_inner_iters: report.total_inner_iters,
    });
    result.status = Status::Ok;
    Ok(result)
}

/// Width-adaptive transmission: smallest width meeting `phi_min`, then the
/// energy-optimal frequencies and power for that width.
pub fn run_fast(s: &Scenario, cfg: &SolverConfig) -> Result<ScenarioResult> {
    let c = &s.constraints;
    let pi = match invert_fidelity(&s.curve, c.phi_min, c.pi_min) {
        Ok(pi) => pi,
        Err(e) if e.is_infeasible() => {
            return Ok(ScenarioResult::empty(
                "fast".into(),
                Status::FidelityInfeasible,
            ));
        }
        Err(e) => return Err(e),
    };
    let fidelity = eval_fidelity(&s.curve, pi)?;
    let mut result = ScenarioResult::empty(format!("fast(pi={:.3})", pi.get()), Status::Ok);
    result.pi = Some(pi.get());
    result.pi_clamped =
        fidelity > c.phi_min && pi.get() <= c.pi_min.get().max(s.curve.pi_min.get());
    result.fidelity = Some(fidelity);
    let w = derive_workload(&s.workload, pi);
    optimize_workload(s, &w, pi, cfg, result)
}

pub fn run_baseline(
    s: &Scenario,
    spec: &BaselineSpec,
    cfg: &SolverConfig,
) -> Result<ScenarioResult> {
    let k = s.workload.samples as f64;
    let label = spec.label();
    match spec {
        BaselineSpec::External {
            data_bits,
            fidelity,
            ..
        } => {
            let mut r = ScenarioResult::empty(label, Status::Reference);
            r.data_bits = Some(*data_bits);
            r.fidelity = Some(*fidelity);
            Ok(r)
        }
        BaselineSpec::Raw => {
            // No compute, so energy falls monotonically in the transmit
            // share: the whole budget goes to transmission.
            let w = WorkloadTriple {
                encode_cycles: 0.0,
                decode_cycles: 0.0,
                data_bits: k * s.workload.raw_bits,
            };
            let mut r = ScenarioResult::empty(label, Status::Ok);
            r.data_bits = Some(w.data_bits);
            r.compute_cycles = Some(0.0);
            r.fidelity = Some(1.0);
            let t_max = s.constraints.t_max;
            let split = TimeSplit::new(0.0, 1.0, 0.0);
            match recover_strategy(&split, &w, ScalingFactor::FULL, &s.devices, &s.link, t_max) {
                Ok(strategy) => {
                    r.cost = Some(evaluate_workload(&strategy, &w, &s.devices, &s.link)?);
                    r.strategy = Some(strategy);
                }
                Err(Error::BoundViolation { .. }) => r.status = Status::LatencyInfeasible,
                Err(e) => return Err(e),
            }
            Ok(r)
        }
        BaselineSpec::Prune { rho, fidelity_map } => {
            if !(0.0..1.0).contains(rho) {
                return Err(Error::InvalidInput(format!(
                    "pruning rate must lie in [0, 1), got {rho}"
                )));
            }
            let payload = (1.0 - rho) * k * s.workload.payload_bits;
            full_model_baseline(s, label, fidelity_map.eval(*rho), payload, cfg)
        }
        BaselineSpec::Quant { bits, fidelity_map } => {
            if !(1..=8).contains(bits) {
                return Err(Error::InvalidInput(format!(
                    "quantization bits must be 1..=8, got {bits}"
                )));
            }
            let payload = f64::from(*bits) / 8.0 * k * s.workload.payload_bits;
            full_model_baseline(s, label, fidelity_map.eval(f64::from(*bits)), payload, cfg)
        }
    }
}

fn full_model_baseline(
    s: &Scenario,
    label: String,
    fidelity: Option<f64>,
    data_bits: f64,
    cfg: &SolverConfig,
) -> Result<ScenarioResult> {
    let mut r = ScenarioResult::empty(label, Status::Ok);
    r.pi = Some(1.0);
    r.fidelity = fidelity;
    match fidelity {
        Some(f) if f >= s.constraints.phi_min => {}
        _ => {
            r.status = Status::FidelityInfeasible;
            return Ok(r);
        }
    }
    let full = derive_workload(&s.workload, ScalingFactor::FULL);
    let w = WorkloadTriple { data_bits, ..full };
    optimize_workload(s, &w, ScalingFactor::FULL, cfg, r)
}

/// Cheapest baseline parameter whose mapped fidelity reaches `phi_min`:
/// largest pruning rate, fewest quantization bits.
pub fn matched_baseline(s: &Scenario, method: Method) -> Option<BaselineSpec> {
    let target = s.constraints.phi_min;
    match method {
        Method::Fast => None,
        Method::Raw => Some(BaselineSpec::Raw),
        Method::Prune => {
            let map = s.prune_map();
            let rho = map.largest_meeting(target)?;
            (rho < 1.0).then_some(BaselineSpec::Prune {
                rho,
                fidelity_map: map,
            })
        }
        Method::Quant => {
            let map = s.quant_map();
            let bits = (1..=8u8).find(|&b| map.eval(f64::from(b)).is_some_and(|f| f >= target))?;
            Some(BaselineSpec::Quant {
                bits,
                fidelity_map: map,
            })
        }
    }
}

pub fn run_method(s: &Scenario, method: Method, cfg: &SolverConfig) -> Result<ScenarioResult> {
    match method {
        Method::Fast => run_fast(s, cfg),
        other => match matched_baseline(s, other) {
            Some(spec) => run_baseline(s, &spec, cfg),
            None => {
                let name = match other {
                    Method::Prune => "prune",
                    _ => "quant",
                };
                Ok(ScenarioResult::empty(
                    name.into(),
                    Status::FidelityInfeasible,
                ))
            }
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    /// Transmitter-receiver distance in meters.
    Distance,
    /// Multiplier on both energy coefficients.
    EpsScale,
    /// Latency budget in seconds.
    TMax,
    PhiMin,
}

impl SweepAxis {
    pub fn apply(self, base: &Scenario, value: f64) -> Scenario {
        let mut s = base.clone();
        match self {
            SweepAxis::Distance => s.link.distance_m = value,
            SweepAxis::EpsScale => {
                s.devices.eps_e *= value;
                s.devices.eps_d *= value;
            }
            SweepAxis::TMax => s.constraints.t_max = value,
            SweepAxis::PhiMin => s.constraints.phi_min = value,
        }
        s
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SweepAxis::Distance => "distance",
            SweepAxis::EpsScale => "eps_scale",
            SweepAxis::TMax => "t_max",
            SweepAxis::PhiMin => "phi_min",
        })
    }
}

impl std::str::FromStr for SweepAxis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "distance" => Ok(SweepAxis::Distance),
            "eps_scale" => Ok(SweepAxis::EpsScale),
            "t_max" => Ok(SweepAxis::TMax),
            "phi_min" => Ok(SweepAxis::PhiMin),
            other => Err(Error::InvalidInput(format!(
                "unknown sweep axis `{other}` (expected distance, eps_scale, t_max, phi_min)"
            ))),
        }
    }
}

/// One result per `(value, method)`, ordered by value then method.
///
/// Cells run in parallel; infeasible or failing cells are kept with their
/// status rather than dropped.
pub fn sweep(
    s: &Scenario,
    axis: SweepAxis,
    values: &[f64],
    methods: &[Method],
    cfg: &SolverConfig,
) -> Vec<ScenarioResult> {
    let cells: Vec<(f64, Method)> = values
        .iter()
        .flat_map(|&v| methods.iter().map(move |&m| (v, m)))
        .collect();
    cells
        .par_iter()
        .map(|&(value, method)| {
            let scenario = axis.apply(s, value);
            let mut r = scenario
                .validate()
                .and_then(|_| run_method(&scenario, method, cfg))
                .unwrap_or_else(|e| {
                    log::warn!("{axis}={value} {method:?}: {e}");
                    ScenarioResult::empty(
                        format!("{method:?}").to_lowercase(),
                        Status::Failed(e.to_string()),
                    )
                });
            r.axis_value = Some(value);
            r
        })
        .collect()
}

/// Multi-method comparison: raw and the external codec once, then prune,
/// quant and the adaptive method at each fidelity target.
pub fn compare(s: &Scenario, targets: &[f64], cfg: &SolverConfig) -> Result<Vec<ScenarioResult>> {
    let mut rows = vec![
        run_baseline(s, &BaselineSpec::Raw, cfg)?,
        run_baseline(
            s,
            &BaselineSpec::External {
                label: "jpeg".into(),
                data_bits: s.baselines.jpeg.data_bits,
                fidelity: s.baselines.jpeg.fidelity,
            },
            cfg,
        )?,
    ];
    for &phi_min in targets {
        let scenario = SweepAxis::PhiMin.apply(s, phi_min);
        for method in [Method::Prune, Method::Quant, Method::Fast] {
            let mut r = run_method(&scenario, method, cfg)?;
            r.axis_value = Some(phi_min);
            rows.push(r);
        }
    }
    Ok(rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// Comma-separated with a header row.
    Columnar,
    /// JSON array of row objects.
    Structured,
}

impl std::str::FromStr for ExportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" | "columnar" => Ok(ExportFormat::Columnar),
            "json" | "structured" => Ok(ExportFormat::Structured),
            other => Err(Error::InvalidInput(format!(
                "unknown format `{other}` (expected csv, json)"
            ))),
        }
    }
}

pub const COLUMNS: [&str; 14] = [
    "method",
    "axis_value",
    "pi",
    "f_e_hz",
    "f_d_hz",
    "P_w",
    "T_cmp_s",
    "T_com_s",
    "E_cmp_j",
    "E_com_j",
    "E_tot_j",
    "data_bits",
    "fidelity",
    "status",
];

/// Six significant digits; fixed notation for moderate magnitudes.
pub fn format_sig6(v: f64) -> String {
    if v == 0.0 {
        return "0".into();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let sci = format!("{v:.5e}");
    let exp: i32 = sci
        .split('e')
        .nth(1)
        .and_then(|e| e.parse().ok())
        .unwrap_or(0);
    if (-4..15).contains(&exp) {
        let decimals = (5 - exp).max(0) as usize;
        format!("{v:.decimals$}")
    } else {
        sci
    }
}

fn row_cells(r: &ScenarioResult) -> Vec<(&'static str, Option<f64>)> {
    let s = r.strategy.as_ref();
    let c = r.cost.as_ref();
    vec![
        ("axis_value", r.axis_value),
        ("pi", r.pi),
        ("f_e_hz", s.map(|s| s.f_e)),
        ("f_d_hz", s.map(|s| s.f_d)),
        ("P_w", s.map(|s| s.power)),
        ("T_cmp_s", c.map(|c| c.t_cmp)),
        ("T_com_s", c.map(|c| c.t_com)),
        ("E_cmp_j", c.map(|c| c.e_cmp)),
        ("E_com_j", c.map(|c| c.e_com)),
        ("E_tot_j", c.map(|c| c.e_tot)),
        ("data_bits", r.data_bits),
        ("fidelity", r.fidelity),
    ]
}

fn format_cell(name: &str, v: Option<f64>) -> String {
    match v {
        None => String::new(),
        Some(x) if name == "data_bits" && x.fract() == 0.0 && x.abs() < 1e15 => format!("{x:.0}"),
        Some(x) => format_sig6(x),
    }
}

pub fn to_columnar(table: &[ScenarioResult]) -> String {
    let mut out = COLUMNS.join(",");
    out.push('\n');
    for r in table {
        let mut fields = vec![r.method.replace(',', ";")];
        fields.extend(row_cells(r).into_iter().map(|(n, v)| format_cell(n, v)));
        fields.push(r.status.label().to_string());
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn to_structured(table: &[ScenarioResult]) -> String {
    let rows: Vec<serde_json::Value> = table
        .iter()
        .map(|r| {
            let mut obj = serde_json::Map::new();
            obj.insert("method".into(), r.method.clone().into());
            for (name, v) in row_cells(r) {
                let value = v
                    .and_then(|x| format_cell(name, Some(x)).parse::<f64>().ok())
                    .and_then(serde_json::Number::from_f64)
                    .map_or(serde_json::Value::Null, serde_json::Value::Number);
                obj.insert(name.into(), value);
            }
            obj.insert("status".into(), r.status.label().into());
            if let Status::Failed(msg) = &r.status {
                obj.insert("error".into(), msg.clone().into());
            }
            serde_json::Value::Object(obj)
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&rows).expect("rows are serializable");
    text.push('\n');
    text
}

pub fn render(table: &[ScenarioResult], format: ExportFormat) -> Result<String> {
    if table.is_empty() {
        return Err(Error::InvalidInput(
            "cannot export an empty result table".into(),
        ));
    }
    Ok(match format {
        ExportFormat::Columnar => to_columnar(table),
        ExportFormat::Structured => to_structured(table),
    })
}

pub fn export_results(
    table: &[ScenarioResult],
    destination: &Path,
    format: ExportFormat,
) -> Result<()> {
    let text = render(table, format)?;
    fs::write(destination, text).map_err(|e| Error::io(destination, e))
}
