//! Computation and communication cost models.
//!
//! All quantities are SI: cycles, Hz, W, J, s, bits. The only unit
//! conversion in the crate is the noise density, given in dBm/MHz in
//! scenario files and converted by [`dbm_per_mhz_to_w_per_hz`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fidelity::ScalingFactor;

/// Relative slack when checking recovered values against their maxima.
const BOUND_SLACK: f64 = 1e-9;

pub fn dbm_per_mhz_to_w_per_hz(dbm_per_mhz: f64) -> f64 {
    10f64.powf(dbm_per_mhz / 10.0) * 1e-3 / 1e6
}

pub fn w_per_hz_to_dbm_per_mhz(w_per_hz: f64) -> f64 {
    10.0 * (w_per_hz * 1e6 / 1e-3).log10()
}

fn require_positive(name: &str, v: f64) -> Result<()> {
    if v.is_finite() && v > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!(
            "{name} must be positive, got {v}"
        )))
    }
}

/// Per-sample workload of the full-width model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorkloadProfile {
    /// Encoder cycles per sample.
    pub encode_cycles: f64,
    /// Decoder cycles per sample.
    pub decode_cycles: f64,
    /// Full-width semantic payload, bits per sample.
    pub payload_bits: f64,
    /// Number of samples per task.
    pub samples: u64,
    /// Uncompressed bits per sample.
    pub raw_bits: f64,
}

impl Default for WorkloadProfile {
    fn default() -> Self {
        WorkloadProfile {
            encode_cycles: 0.65e6,
            decode_cycles: 3.25e6,
            payload_bits: 4096.0,
            samples: 512,
            raw_bits: 32.0 * 32.0 * 3.0 * 8.0,
        }
    }
}

impl WorkloadProfile {
    pub fn validate(&self) -> Result<()> {
        require_positive("W_e_cycles", self.encode_cycles)?;
        require_positive("W_d_cycles", self.decode_cycles)?;
        require_positive("S_bits", self.payload_bits)?;
        require_positive("raw_bits", self.raw_bits)?;
        if self.samples == 0 {
            return Err(Error::InvalidInput("K must be at least 1".into()));
        }
        Ok(())
    }
}

/// Total cycles and payload for one task, whatever method produced them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WorkloadTriple {
    pub encode_cycles: f64,
    pub decode_cycles: f64,
    pub data_bits: f64,
}

impl WorkloadTriple {
    pub fn compute_cycles(&self) -> f64 {
        self.encode_cycles + self.decode_cycles
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DeviceProfile {
    /// Source energy coefficient, J per cycle per Hz^2.
    pub eps_e: f64,
    /// Destination energy coefficient.
    pub eps_d: f64,
    pub f_e_max: f64,
    pub f_d_max: f64,
}

impl Default for DeviceProfile {
    fn default() -> Self {
        DeviceProfile {
            eps_e: 1e-26,
            eps_d: 1e-26,
            f_e_max: 2e9,
            f_d_max: 2e9,
        }
    }
}

impl DeviceProfile {
    pub fn validate(&self) -> Result<()> {
        require_positive("eps_e", self.eps_e)?;
        require_positive("eps_d", self.eps_d)?;
        require_positive("f_e_max_hz", self.f_e_max)?;
        require_positive("f_d_max_hz", self.f_d_max)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinkProfile {
    pub bandwidth_hz: f64,
    /// Noise power spectral density, W/Hz.
    pub noise_density: f64,
    /// Channel power gain |h|^2, dimensionless.
    pub channel_gain: f64,
    pub distance_m: f64,
    pub pathloss_exponent: f64,
    pub p_max_w: f64,
}

impl Default for LinkProfile {
    fn default() -> Self {
        LinkProfile {
            bandwidth_hz: 1e6,
            noise_density: dbm_per_mhz_to_w_per_hz(-95.0),
            channel_gain: 1e-3,
            distance_m: 200.0,
            pathloss_exponent: 3.76,
            p_max_w: 0.5,
        }
    }
}

impl LinkProfile {
    pub fn validate(&self) -> Result<()> {
        require_positive("B_hz", self.bandwidth_hz)?;
        require_positive("N0", self.noise_density)?;
        require_positive("h2", self.channel_gain)?;
        require_positive("d_m", self.distance_m)?;
        require_positive("eta", self.pathloss_exponent)?;
        require_positive("P_max_w", self.p_max_w)
    }

    /// Large-scale gain `|h|^2 d^-eta`.
    pub fn path_gain(&self) -> f64 {
        self.channel_gain * self.distance_m.powf(-self.pathloss_exponent)
    }

    /// Receive SNR per watt of transmit power.
    pub fn snr_per_watt(&self) -> f64 {
        self.path_gain() / (self.noise_density * self.bandwidth_hz)
    }

    /// Achievable rate in bits/s at transmit power `p`.
    pub fn rate(&self, p: f64) -> f64 {
        self.bandwidth_hz * (p * self.snr_per_watt()).ln_1p() / std::f64::consts::LN_2
    }

    /// Power needed to sustain `rate` bits/s; inverse of [`LinkProfile::rate`].
    pub fn power_for_rate(&self, rate: f64) -> f64 {
        (rate / self.bandwidth_hz * std::f64::consts::LN_2).exp_m1() / self.snr_per_watt()
    }
}

/// Shannon rate `B log2(1 + |h|^2 d^-eta P / (N0 B))`.
pub fn shannon_rate(link: &LinkProfile, p: f64) -> f64 {
    link.rate(p)
}

/// Scale the full-model workload to width `pi`: cycles by `pi^2`, payload by `pi`.
pub fn derive_workload(profile: &WorkloadProfile, pi: ScalingFactor) -> WorkloadTriple {
    let k = profile.samples as f64;
    let p = pi.get();
    WorkloadTriple {
        encode_cycles: k * p * p * profile.encode_cycles,
        decode_cycles: k * p * p * profile.decode_cycles,
        data_bits: k * p * profile.payload_bits,
    }
}

/// Coefficients of the energy as a function of the time split alone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TauConstants {
    pub tau1: f64,
    pub tau2: f64,
    pub tau3: f64,
    pub tau4: f64,
}

impl TauConstants {
    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("tau1", self.tau1),
            ("tau2", self.tau2),
            ("tau3", self.tau3),
            ("tau4", self.tau4),
        ] {
            require_positive(name, v)?;
        }
        Ok(())
    }
}

pub fn tau_constants(
    w: &WorkloadTriple,
    link: &LinkProfile,
    dev: &DeviceProfile,
    t_max: f64,
) -> Result<TauConstants> {
    require_positive("T_max", t_max)?;
    if !(w.encode_cycles > 0.0 && w.decode_cycles > 0.0) {
        return Err(Error::DegenerateWorkload(format!(
            "encode cycles {} and decode cycles {} must both be positive",
            w.encode_cycles, w.decode_cycles
        )));
    }
    require_positive("data bits", w.data_bits)?;
    let t2 = t_max * t_max;
    Ok(TauConstants {
        tau1: dev.eps_e * w.encode_cycles.powi(3) / t2,
        tau2: link.bandwidth_hz * link.noise_density * t_max / link.path_gain(),
        tau3: w.data_bits / (link.bandwidth_hz * t_max),
        tau4: dev.eps_d * w.decode_cycles.powi(3) / t2,
    })
}

/// Fractions of the latency budget for encoding, transmission and decoding.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeSplit {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

impl TimeSplit {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        TimeSplit { alpha, beta, gamma }
    }

    pub fn sum(&self) -> f64 {
        self.alpha + self.beta + self.gamma
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha, self.beta, self.gamma]
    }
}

/// Lower limits of the split, reached when running at maximum frequency
/// and power.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitLimits {
    pub alpha_min: f64,
    pub beta_min: f64,
    pub gamma_min: f64,
}

impl SplitLimits {
    pub fn new(alpha_min: f64, beta_min: f64, gamma_min: f64) -> Self {
        SplitLimits {
            alpha_min,
            beta_min,
            gamma_min,
        }
    }

    pub fn sum(&self) -> f64 {
        self.alpha_min + self.beta_min + self.gamma_min
    }

    pub fn as_array(&self) -> [f64; 3] {
        [self.alpha_min, self.beta_min, self.gamma_min]
    }
}

pub fn split_lower_limits(
    w: &WorkloadTriple,
    dev: &DeviceProfile,
    link: &LinkProfile,
    t_max: f64,
) -> SplitLimits {
    SplitLimits {
        alpha_min: w.encode_cycles / (dev.f_e_max * t_max),
        beta_min: w.data_bits / (t_max * link.rate(link.p_max_w)),
        gamma_min: w.decode_cycles / (dev.f_d_max * t_max),
    }
}

/// `tau1/a^2 + tau2 b (2^(tau3/b) - 1) + tau4/g^2`. Every split component must be positive.
pub fn energy_of_split(tau: &TauConstants, split: &TimeSplit) -> f64 {
    let TimeSplit { alpha, beta, gamma } = *split;
    let comm = tau.tau2 * beta * (tau.tau3 / beta * std::f64::consts::LN_2).exp_m1();
    tau.tau1 / (alpha * alpha) + comm + tau.tau4 / (gamma * gamma)
}

/// Physical operating point of one transmission.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransmissionStrategy {
    pub pi: ScalingFactor,
    pub f_e: f64,
    pub f_d: f64,
    pub power: f64,
}

fn check_bound(what: &'static str, value: f64, max: f64) -> Result<f64> {
    if value > max * (1.0 + BOUND_SLACK) || !value.is_finite() {
        return Err(Error::BoundViolation { what, value, max });
    }
    Ok(value.min(max))
}

/// Frequencies and power that make each phase take exactly its share of `t_max`.
///
/// A phase with no work gets zero frequency (or power) regardless of its share.
pub fn recover_strategy(
    split: &TimeSplit,
    w: &WorkloadTriple,
    pi: ScalingFactor,
    dev: &DeviceProfile,
    link: &LinkProfile,
    t_max: f64,
) -> Result<TransmissionStrategy> {
    let freq = |cycles: f64, share: f64| {
        if cycles == 0.0 {
            0.0
        } else {
            cycles / (share * t_max)
        }
    };
    let f_e = check_bound("f_e", freq(w.encode_cycles, split.alpha), dev.f_e_max)?;
    let f_d = check_bound("f_d", freq(w.decode_cycles, split.gamma), dev.f_d_max)?;
    let power = if w.data_bits == 0.0 {
        0.0
    } else {
        link.power_for_rate(w.data_bits / (split.beta * t_max))
    };
    let power = check_bound("P", power, link.p_max_w)?;
    Ok(TransmissionStrategy {
        pi,
        f_e,
        f_d,
        power,
    })
}

/// Latency and energy of one task.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CostReport {
    pub t_encode: f64,
    pub t_decode: f64,
    pub t_cmp: f64,
    pub t_com: f64,
    pub t_tot: f64,
    pub e_cmp: f64,
    pub e_com: f64,
    pub e_tot: f64,
    pub data_bits: f64,
    pub compute_cycles: f64,
}

/// Cost of running `w` at the strategy's frequencies and power.
pub fn evaluate_workload(
    s: &TransmissionStrategy,
    w: &WorkloadTriple,
    dev: &DeviceProfile,
    link: &LinkProfile,
) -> Result<CostReport> {
    let phase = |cycles: f64, f: f64, eps: f64, name: &str| -> Result<(f64, f64)> {
        if cycles == 0.0 {
            return Ok((0.0, 0.0));
        }
        if !(f > 0.0) {
            return Err(Error::Numeric(format!(
                "{name} frequency is zero with pending work"
            )));
        }
        Ok((cycles / f, eps * f * f * cycles))
    };
    let (t_encode, e_encode) = phase(w.encode_cycles, s.f_e, dev.eps_e, "encode")?;
    let (t_decode, e_decode) = phase(w.decode_cycles, s.f_d, dev.eps_d, "decode")?;
    let (t_com, e_com) = if w.data_bits == 0.0 {
        (0.0, 0.0)
    } else {
        let r = link.rate(s.power);
        if !(r > 0.0) {
            return Err(Error::Numeric("transmission rate is zero".into()));
        }
        let t = w.data_bits / r;
        (t, s.power * t)
    };
    let t_cmp = t_encode + t_decode;
    let e_cmp = e_encode + e_decode;
    Ok(CostReport {
        t_encode,
        t_decode,
        t_cmp,
        t_com,
        t_tot: t_cmp + t_com,
        e_cmp,
        e_com,
        e_tot: e_cmp + e_com,
        data_bits: w.data_bits,
        compute_cycles: w.compute_cycles(),
    })
}

/// Cost of a width-`pi` sub-model transmission.
pub fn evaluate_strategy(
    s: &TransmissionStrategy,
    profile: &WorkloadProfile,
    dev: &DeviceProfile,
    link: &LinkProfile,
) -> Result<CostReport> {
    evaluate_workload(s, &derive_workload(profile, s.pi), dev, link)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
    }

    fn half() -> ScalingFactor {
        ScalingFactor::new(0.5).unwrap()
    }

    #[test]
    fn noise_conversion() {
        let n0 = dbm_per_mhz_to_w_per_hz(-95.0);
        assert!(rel(n0, 3.162_277_660_168_38e-19) < 1e-12);
        assert!((w_per_hz_to_dbm_per_mhz(n0) + 95.0).abs() < 1e-10);
    }

    #[test]
    fn workload_examples() {
        let p = WorkloadProfile::default();
        let full = derive_workload(&p, ScalingFactor::FULL);
        assert!(rel(full.encode_cycles, 3.328e8) < 1e-12);
        assert!(rel(full.decode_cycles, 1.664e9) < 1e-12);
        assert_eq!(full.data_bits, 2_097_152.0);

        let h = derive_workload(&p, half());
        assert!(rel(h.encode_cycles, 8.32e7) < 1e-12);
        assert!(rel(h.decode_cycles, 4.16e8) < 1e-12);
        assert_eq!(h.data_bits, 1_048_576.0);

        let zero = WorkloadProfile {
            encode_cycles: 0.0,
            decode_cycles: 0.0,
            samples: 1,
            ..p
        };
        let z = derive_workload(&zero, half());
        assert_eq!(
            (z.encode_cycles, z.decode_cycles, z.data_bits),
            (0.0, 0.0, 2048.0)
        );
    }

    #[test]
    fn rate_examples() {
        let link = LinkProfile::default();
        // direct evaluation in SI units
        let n0 = 10f64.powf(-9.5) * 1e-3 / 1e6;
        let snr = 1e-3 * 200f64.powf(-3.76) * 0.1 / (n0 * 1e6);
        let oracle = 1e6 * (1.0 + snr).log2();
        let r = shannon_rate(&link, 0.1);
        assert!(rel(r, oracle) < 1e-12);
        assert!(rel(r, 7.70e5) < 2e-3, "{r}");
        assert_eq!(shannon_rate(&link, 0.0), 0.0);

        let wide = LinkProfile {
            bandwidth_hz: 2e6,
            ..link
        };
        assert!(rel(shannon_rate(&wide, 0.2), 2.0 * r) < 1e-12);
    }

    #[test]
    fn power_for_rate_inverts_rate() {
        let link = LinkProfile::default();
        for p in [1e-6, 0.01, 0.3, 2.0] {
            assert!(rel(link.power_for_rate(link.rate(p)), p) < 1e-10);
        }
    }

    fn half_tau() -> TauConstants {
        let w = derive_workload(&WorkloadProfile::default(), half());
        tau_constants(&w, &LinkProfile::default(), &DeviceProfile::default(), 8.0).unwrap()
    }

    #[test]
    fn tau_examples() {
        let t = half_tau();
        assert!(rel(t.tau1, 9.0e-5) < 1e-2, "{}", t.tau1);
        assert!(rel(t.tau2, 1.13) < 5e-3, "{}", t.tau2);
        assert!(rel(t.tau3, 0.131) < 1e-3, "{}", t.tau3);
        assert!(rel(t.tau4, 1.13e-2) < 5e-3, "{}", t.tau4);

        let w = derive_workload(&WorkloadProfile::default(), half());
        let t2 =
            tau_constants(&w, &LinkProfile::default(), &DeviceProfile::default(), 16.0).unwrap();
        assert!(rel(t2.tau1, t.tau1 / 4.0) < 1e-12);
        assert!(rel(t2.tau2, t.tau2 * 2.0) < 1e-12);
        assert!(rel(t2.tau3, t.tau3 / 2.0) < 1e-12);
        assert!(rel(t2.tau4, t.tau4 / 4.0) < 1e-12);
    }

    #[test]
    fn tau_matches_width_form() {
        let p = WorkloadProfile::default();
        let dev = DeviceProfile::default();
        let link = LinkProfile::default();
        let t_max = 8.0;
        for pi in [0.25, 0.3, 0.5, 0.77, 1.0] {
            let w = derive_workload(&p, ScalingFactor::new(pi).unwrap());
            let t = tau_constants(&w, &link, &dev, t_max).unwrap();
            let k = p.samples as f64;
            let tau1 =
                dev.eps_e * k.powi(3) * p.encode_cycles.powi(3) * pi.powi(6) / (t_max * t_max);
            let tau2 = link.bandwidth_hz * link.noise_density * t_max
                / (link.channel_gain * link.distance_m.powf(-link.pathloss_exponent));
            let tau3 = k * pi * p.payload_bits / (link.bandwidth_hz * t_max);
            let tau4 =
                dev.eps_d * k.powi(3) * p.decode_cycles.powi(3) * pi.powi(6) / (t_max * t_max);
            assert!(rel(t.tau1, tau1) < 1e-12);
            assert!(rel(t.tau2, tau2) < 1e-12);
            assert!(rel(t.tau3, tau3) < 1e-12);
            assert!(rel(t.tau4, tau4) < 1e-12);
        }
    }

    #[test]
    fn tau_rejects_zero_compute() {
        let w = WorkloadTriple {
            encode_cycles: 0.0,
            decode_cycles: 1.0,
            data_bits: 1.0,
        };
        assert!(matches!(
            tau_constants(&w, &LinkProfile::default(), &DeviceProfile::default(), 8.0),
            Err(Error::DegenerateWorkload(_))
        ));
    }

    #[test]
    fn lower_limit_examples() {
        let w = derive_workload(&WorkloadProfile::default(), half());
        let link = LinkProfile {
            p_max_w: 0.2,
            ..LinkProfile::default()
        };
        let lim = split_lower_limits(&w, &DeviceProfile::default(), &link, 8.0);
        assert!(rel(lim.alpha_min, 5.2e-3) < 1e-12);
        assert!(rel(lim.gamma_min, 2.6e-2) < 1e-12);
        let r = shannon_rate(&link, 0.2);
        assert!(rel(lim.beta_min, 1_048_576.0 / (8.0 * r)) < 1e-12);

        let fast_dev = DeviceProfile {
            f_e_max: 1e300,
            ..DeviceProfile::default()
        };
        assert!(split_lower_limits(&w, &fast_dev, &link, 8.0).alpha_min < 1e-280);

        let saturated = WorkloadTriple {
            data_bits: 8.0 * r,
            ..w
        };
        let lim = split_lower_limits(&saturated, &DeviceProfile::default(), &link, 8.0);
        assert!((lim.beta_min - 1.0).abs() < 1e-12);
    }

    #[test]
    fn energy_examples() {
        let t = half_tau();
        let third = 1.0 / 3.0;
        let e = energy_of_split(&t, &TimeSplit::new(third, third, third));
        let oracle = t.tau1 * 9.0 + t.tau2 * third * (2f64.powf(3.0 * t.tau3) - 1.0) + t.tau4 * 9.0;
        assert!(rel(e, oracle) < 1e-12);
        assert!((e - 0.22).abs() < 5e-3, "{e}");

        let no_comm = TauConstants { tau3: 0.0, ..t };
        let e0 = energy_of_split(&no_comm, &TimeSplit::new(0.2, 0.3, 0.5));
        assert!(rel(e0, t.tau1 / 0.04 + t.tau4 / 0.25) < 1e-12);

        let only_first = TauConstants {
            tau2: 0.0,
            tau4: 0.0,
            ..t
        };
        let a = energy_of_split(&only_first, &TimeSplit::new(0.4, 0.3, 0.3));
        let b = energy_of_split(&only_first, &TimeSplit::new(0.2, 0.3, 0.3));
        assert!(rel(b, 4.0 * a) < 1e-12);
    }

    #[test]
    fn recover_at_limits_hits_maxima() {
        let w = derive_workload(&WorkloadProfile::default(), half());
        let dev = DeviceProfile::default();
        let link = LinkProfile::default();
        let lim = split_lower_limits(&w, &dev, &link, 8.0);
        let split = TimeSplit::new(lim.alpha_min, lim.beta_min, lim.gamma_min);
        let s = recover_strategy(&split, &w, half(), &dev, &link, 8.0).unwrap();
        assert!(rel(s.f_e, dev.f_e_max) < 1e-12);
        assert!(rel(s.f_d, dev.f_d_max) < 1e-12);
        assert!(rel(s.power, link.p_max_w) < 1e-9);
    }

    #[test]
    fn recover_rejects_too_short_phase() {
        let w = derive_workload(&WorkloadProfile::default(), half());
        let dev = DeviceProfile::default();
        let lim = split_lower_limits(&w, &dev, &LinkProfile::default(), 8.0);
        let split = TimeSplit::new(lim.alpha_min * 0.5, 0.5, 0.4);
        assert!(matches!(
            recover_strategy(&split, &w, half(), &dev, &LinkProfile::default(), 8.0),
            Err(Error::BoundViolation { what: "f_e", .. })
        ));
    }

    #[test]
    fn recover_then_evaluate_round_trip() {
        let p = WorkloadProfile::default();
        let w = derive_workload(&p, half());
        let dev = DeviceProfile::default();
        let link = LinkProfile::default();
        let split = TimeSplit::new(0.2, 0.5, 0.3);
        let s = recover_strategy(&split, &w, half(), &dev, &link, 8.0).unwrap();
        let c = evaluate_strategy(&s, &p, &dev, &link).unwrap();
        assert!(rel(c.t_encode, 0.2 * 8.0) < 1e-9);
        assert!(rel(c.t_com, 0.5 * 8.0) < 1e-9);
        assert!(rel(c.t_decode, 0.3 * 8.0) < 1e-9);
        assert!(rel(c.t_tot, 8.0) < 1e-9);
        // and the energy agrees with the split form
        let tau = tau_constants(&w, &link, &dev, 8.0).unwrap();
        assert!(rel(c.e_tot, energy_of_split(&tau, &split)) < 1e-9);
    }

    #[test]
    fn evaluate_examples() {
        let p = WorkloadProfile::default();
        let dev = DeviceProfile::default();
        let link = LinkProfile::default();
        let s = TransmissionStrategy {
            pi: half(),
            f_e: 1e9,
            f_d: 1e9,
            power: 0.1,
        };
        let c = evaluate_strategy(&s, &p, &dev, &link).unwrap();
        assert!(rel(c.t_encode, 0.0832) < 1e-12);
        let e_encode = dev.eps_e * 1e18 * 8.32e7;
        assert!(rel(e_encode, 0.832) < 1e-12);
        assert!(rel(c.e_cmp, e_encode + dev.eps_d * 1e18 * 4.16e8) < 1e-12);
        assert_eq!(c.t_tot, c.t_cmp + c.t_com);
        assert_eq!(c.e_tot, c.e_cmp + c.e_com);

        let doubled = TransmissionStrategy {
            f_e: 2e9,
            f_d: 2e9,
            ..s
        };
        let c2 = evaluate_strategy(&doubled, &p, &dev, &link).unwrap();
        assert!(rel(c2.t_cmp, c.t_cmp / 2.0) < 1e-12);
        assert!(rel(c2.e_cmp, c.e_cmp * 4.0) < 1e-12);

        let stalled = TransmissionStrategy { f_e: 0.0, ..s };
        assert!(evaluate_strategy(&stalled, &p, &dev, &link).is_err());
    }

    #[test]
    fn raw_volume() {
        let p = WorkloadProfile::default();
        assert_eq!(p.samples as f64 * p.raw_bits, 12_582_912.0);
    }
}
