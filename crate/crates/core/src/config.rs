//! Scenario files.
//!
//! A scenario is a TOML document with the sections `workload`, `devices`,
//! `link`, `constraints`, `fidelity` and `baselines`. Every key is optional
//! and defaults to the reference setup, so an empty file is a valid scenario.
//!
//! ```toml
//! [workload]
//! W_e_cycles = 0.65e6
//! W_d_cycles = 3.25e6
//! S_bits = 4096
//! K = 512
//! raw_bits = 24576
//!
//! [link]
//! N0_dbm_per_mhz = -95.0
//! d_m = 200.0
//!
//! [fidelity]
//! samples = "samples.csv"   # or kappa1..kappa4
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fidelity::{fit_curve, read_samples, FidelityCurve, ScalingFactor};
use crate::harness::{BaselineMaps, Constraints, ExternalReference, FidelityMap, Scenario};
use crate::sysmodel::{
    dbm_per_mhz_to_w_per_hz, w_per_hz_to_dbm_per_mhz, DeviceProfile, LinkProfile, WorkloadProfile,
};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WorkloadSection {
    #[serde(rename = "W_e_cycles")]
    pub w_e_cycles: f64,
    #[serde(rename = "W_d_cycles")]
    pub w_d_cycles: f64,
    #[serde(rename = "S_bits")]
    pub s_bits: f64,
    #[serde(rename = "K")]
    pub k: u64,
    pub raw_bits: f64,
}

impl Default for WorkloadSection {
    fn default() -> Self {
        let w = WorkloadProfile::default();
        WorkloadSection {
            w_e_cycles: w.encode_cycles,
            w_d_cycles: w.decode_cycles,
            s_bits: w.payload_bits,
            k: w.samples,
            raw_bits: w.raw_bits,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DevicesSection {
    pub eps_e: f64,
    pub eps_d: f64,
    pub f_e_max_hz: f64,
    pub f_d_max_hz: f64,
}

impl Default for DevicesSection {
    fn default() -> Self {
        let d = DeviceProfile::default();
        DevicesSection {
            eps_e: d.eps_e,
            eps_d: d.eps_d,
            f_e_max_hz: d.f_e_max,
            f_d_max_hz: d.f_d_max,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LinkSection {
    #[serde(rename = "B_hz")]
    pub b_hz: f64,
    #[serde(rename = "N0_dbm_per_mhz")]
    pub n0_dbm_per_mhz: f64,
    pub h2: f64,
    pub d_m: f64,
    pub eta: f64,
    #[serde(rename = "P_max_w")]
    pub p_max_w: f64,
}

impl Default for LinkSection {
    fn default() -> Self {
        let l = LinkProfile::default();
        LinkSection {
            b_hz: l.bandwidth_hz,
            n0_dbm_per_mhz: w_per_hz_to_dbm_per_mhz(l.noise_density),
            h2: l.channel_gain,
            d_m: l.distance_m,
            eta: l.pathloss_exponent,
            p_max_w: l.p_max_w,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ConstraintsSection {
    #[serde(rename = "T_max_s")]
    pub t_max_s: f64,
    pub phi_min: f64,
    pub pi_min: f64,
}

impl Default for ConstraintsSection {
    fn default() -> Self {
        ConstraintsSection {
            t_max_s: 8.0,
            phi_min: 0.80,
            pi_min: 0.25,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct FidelitySection {
    pub kappa1: Option<f64>,
    pub kappa2: Option<f64>,
    pub kappa3: Option<f64>,
    pub kappa4: Option<f64>,
    /// `pi,fidelity` samples to fit, relative to the scenario file.
    pub samples: Option<PathBuf>,
}

impl Default for FidelitySection {
    fn default() -> Self {
        let c = FidelityCurve::synthetic_default();
        FidelitySection {
            kappa1: Some(c.kappa1),
            kappa2: Some(c.kappa2),
            kappa3: Some(c.kappa3),
            kappa4: Some(c.kappa4),
            samples: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct BaselinesSection {
    /// `[rho, fidelity]` pairs.
    pub prune: Vec<[f64; 2]>,
    /// `[bits, fidelity]` pairs.
    pub quant: Vec<[f64; 2]>,
    /// `[data_bits, fidelity]` of the external codec reference row.
    pub jpeg: [f64; 2],
}

impl Default for BaselinesSection {
    fn default() -> Self {
        let maps = BaselineMaps::default();
        BaselinesSection {
            prune: maps.prune.points().iter().map(|&(p, f)| [p, f]).collect(),
            quant: maps.quant.points().iter().map(|&(p, f)| [p, f]).collect(),
            jpeg: [maps.jpeg.data_bits, maps.jpeg.fidelity],
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct ScenarioFile {
    pub workload: WorkloadSection,
    pub devices: DevicesSection,
    pub link: LinkSection,
    pub constraints: ConstraintsSection,
    pub fidelity: FidelitySection,
    pub baselines: BaselinesSection,
}

impl ScenarioFile {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("scenario file is always serializable")
    }

    /// Build a validated scenario; relative sample paths resolve against `base_dir`.
    pub fn into_scenario(self, base_dir: &Path) -> Result<Scenario> {
        let cfg_err = |e: Error| Error::Config(e.to_string());
        let w = &self.workload;
        let workload = WorkloadProfile {
            encode_cycles: w.w_e_cycles,
            decode_cycles: w.w_d_cycles,
            payload_bits: w.s_bits,
            samples: w.k,
            raw_bits: w.raw_bits,
        };
        let d = &self.devices;
        let devices = DeviceProfile {
            eps_e: d.eps_e,
            eps_d: d.eps_d,
            f_e_max: d.f_e_max_hz,
            f_d_max: d.f_d_max_hz,
        };
        let l = &self.link;
        let link = LinkProfile {
            bandwidth_hz: l.b_hz,
            noise_density: dbm_per_mhz_to_w_per_hz(l.n0_dbm_per_mhz),
            channel_gain: l.h2,
            distance_m: l.d_m,
            pathloss_exponent: l.eta,
            p_max_w: l.p_max_w,
        };
        let c = &self.constraints;
        let pi_min = ScalingFactor::new(c.pi_min).map_err(cfg_err)?;
        let constraints = Constraints {
            t_max: c.t_max_s,
            phi_min: c.phi_min,
            pi_min,
        };

        let f = &self.fidelity;
        let curve = match (&f.samples, f.kappa1, f.kappa2, f.kappa3, f.kappa4) {
            (Some(path), ..) => {
                let path = if path.is_absolute() {
                    path.clone()
                } else {
                    base_dir.join(path)
                };
                let samples = read_samples(&path)?;
                let fit = fit_curve(&samples, pi_min)?;
                log::info!(
                    "fitted fidelity curve from {} (rms {:.3e})",
                    path.display(),
                    fit.rms
                );
                fit.curve
            }
            (None, Some(k1), Some(k2), Some(k3), Some(k4)) => {
                FidelityCurve::new(k1, k2, k3, k4, pi_min)
            }
            _ => {
                return Err(Error::Config(
                    "fidelity section needs either `samples` or all of kappa1..kappa4".into(),
                ))
            }
        };

        let b = &self.baselines;
        let to_points = |v: &[[f64; 2]]| v.iter().map(|p| (p[0], p[1])).collect::<Vec<_>>();
        let baselines = BaselineMaps {
            prune: FidelityMap::new(to_points(&b.prune)).map_err(cfg_err)?,
            quant: FidelityMap::new(to_points(&b.quant)).map_err(cfg_err)?,
            jpeg: ExternalReference {
                data_bits: b.jpeg[0],
                fidelity: b.jpeg[1],
            },
        };

        let scenario = Scenario {
            workload,
            devices,
            link,
            constraints,
            curve,
            baselines,
        };
        scenario.validate().map_err(cfg_err)?;
        Ok(scenario)
    }
}

pub fn load_scenario(path: &Path) -> Result<Scenario> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    ScenarioFile::from_toml(&text)?.into_scenario(base)
}
