//! Scenario file format: a TOML document with nested sections. Unknown
//! fields are rejected everywhere; every default the loader applies is
//! recorded for the provenance block.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use orbmesh::coverage::{CoverageSpec, GroundSite};
use orbmesh::link::{LinkParams, RateSet};
use orbmesh::matching::{IslAntennaMode, TransceiverBudget};
use orbmesh::orbits::{Constellation, ShellConfig, WalkerGeometry};
use orbmesh::presets;
use orbmesh::routing::{ArrivalProcess, QueueModel, TrafficConfig};
use orbmesh::PhysicalConstants;

/// Experiment catalog; `run` rejects anything else and lists these.
pub const EXPERIMENTS: &[&str] = &[
    "table2-regression",
    "pass-profile",
    "availability",
    "isl-rate-cdf",
    "beam-pattern",
    "reestablishment-sweep",
    "routing-latency",
    "max-load",
    "connectivity-check",
];

/// Experiments whose results depend on a random number stream.
pub const STOCHASTIC_EXPERIMENTS: &[&str] = &["routing-latency"];

#[derive(Debug)]
pub enum CliError {
    /// Bad input: scenario parse/validation problems. Exit code 2.
    Validation(String),
    /// Failure while computing or writing results. Exit code 3.
    Runtime(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "validation error: {m}"),
            CliError::Runtime(m) => write!(f, "runtime error: {m}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub experiment: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// "spherical" (default) or "wgs-equatorial".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constants: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub constellation: Option<ConstellationSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub links: Option<LinksSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub coverage: Option<CoverageSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub antenna: Option<AntennaSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchingSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ground: Option<GroundSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub traffic: Option<TrafficSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sampling: Option<SamplingSection>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub routing: Option<RoutingSection>,
    /// "continuous" or a list of discrete rates in bps.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rates: Option<RatesSpec>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<ConnectivitySection>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum ConstellationSpec {
    Preset(String),
    Custom {
        shells: Vec<ShellSection>,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ShellSection {
    /// "star" or "delta".
    pub geometry: String,
    pub n_planes: usize,
    /// Either `sats_per_plane` or a total `n_sats` divisible by `n_planes`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sats_per_plane: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_sats: Option<usize>,
    pub altitude_km: f64,
    pub inclination_deg: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub phasing: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LinksSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gsl: Option<LinkOverride>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isl: Option<LinkOverride>,
}

/// A link bundle: a named preset plus optional field overrides.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct LinkOverride {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub carrier_ghz: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bandwidth_mhz: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tx_power_w: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noise_temperature_k: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub noise_figure_db: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pointing_loss_db: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct CoverageSection {
    pub min_elevation_deg: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct AntennaSection {
    /// "parabolic", "digital", or "butler".
    pub mode: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements_per_axis: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MatchingSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_t_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_t_list_s: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horizon_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inter_plane_transceivers: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum GroundSpec {
    Preset(String),
    Custom { sites: Vec<SiteSection> },
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SiteSection {
    pub id: String,
    pub lat_deg: f64,
    pub lon_deg: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct TrafficSection {
    pub lambda_pps: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub packet_bytes: Option<f64>,
    /// "poisson" or "deterministic".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub arrivals: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct SamplingSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n_longitudes: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time_step_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub horizon_s: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lat_step_deg: Option<f64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RoutingSection {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_elevation_deg: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sim_horizon_s: Option<f64>,
    /// Queue model inside the latency metric: "constant" (0 s) or "mm1".
    #[serde(skip_serializing_if = "Option::is_none")]
    pub queue: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum RatesSpec {
    Named(String),
    Discrete(Vec<f64>),
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ConnectivitySection {
    /// Smallest usable rate for the continuous-rate connectivity margin.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub floor_mbps: Option<f64>,
}

/// A parsed and validated scenario with every choice resolved, plus the
/// record of the defaults that were applied.
pub struct Resolved {
    pub scenario: Scenario,
    pub experiment: Option<String>,
    pub constants: PhysicalConstants,
    pub constants_name: String,
    pub seed: Option<u64>,
    pub threads: usize,
    pub sha256: String,
    pub defaults: Vec<String>,
}

impl Resolved {
    fn default_logged<T: fmt::Display>(&mut self, field: &str, value: T) -> T {
        self.defaults.push(format!("{field} = {value}"));
        value
    }

    pub fn constellation(&mut self) -> CliResult<Constellation> {
        let shells = match self.scenario.constellation.clone() {
            None => {
                self.defaults.push("constellation = \"kepler\"".into());
                vec![presets::shell_config("kepler").map_err(|e| invalid(e.to_string()))?]
            }
            Some(ConstellationSpec::Preset(name)) => {
                vec![presets::shell_config(&name).map_err(|e| invalid(e.to_string()))?]
            }
            Some(ConstellationSpec::Custom { shells }) => shells
                .iter()
                .enumerate()
                .map(|(i, s)| shell_from_section(i, s))
                .collect::<CliResult<Vec<_>>>()?,
        };
        Constellation::build(shells, self.constants).map_err(|e| invalid(e.to_string()))
    }

    fn link(&mut self, slot: &str) -> CliResult<LinkParams> {
        let over = match (&self.scenario.links, slot) {
            (Some(l), "gsl") => l.gsl.clone(),
            (Some(l), "isl") => l.isl.clone(),
            _ => None,
        };
        let over = over.unwrap_or(LinkOverride {
            preset: None,
            carrier_ghz: None,
            bandwidth_mhz: None,
            tx_power_w: None,
            noise_temperature_k: None,
            noise_figure_db: None,
            pointing_loss_db: None,
        });
        let base_name = match &over.preset {
            Some(p) => p.clone(),
            None => {
                self.defaults.push(format!("links.{slot}.preset = \"{slot}\""));
                slot.to_string()
            }
        };
        let mut p = presets::link_params(&base_name).map_err(|e| invalid(e.to_string()))?;
        if let Some(v) = over.carrier_ghz {
            p.carrier_hz = v * 1e9;
        }
        if let Some(v) = over.bandwidth_mhz {
            p.bandwidth_hz = v * 1e6;
        }
        if let Some(v) = over.tx_power_w {
            p.tx_power_w = v;
        }
        if let Some(v) = over.noise_temperature_k {
            p.noise_temperature_k = v;
        }
        if let Some(v) = over.noise_figure_db {
            p.noise_figure_db = v;
        }
        if let Some(v) = over.pointing_loss_db {
            p.pointing_loss_db = v;
        }
        Ok(p)
    }

    pub fn gsl_params(&mut self) -> CliResult<LinkParams> {
        self.link("gsl")
    }

    pub fn isl_params(&mut self) -> CliResult<LinkParams> {
        self.link("isl")
    }

    pub fn coverage_spec(&mut self) -> CoverageSpec {
        match &self.scenario.coverage {
            Some(c) => CoverageSpec::from_deg(c.min_elevation_deg),
            None => {
                let v = self.default_logged("coverage.min_elevation_deg", 30.0);
                CoverageSpec::from_deg(v)
            }
        }
    }

    pub fn antenna_mode(&mut self) -> CliResult<IslAntennaMode> {
        let section = self.scenario.antenna.clone();
        let Some(a) = section else {
            self.defaults.push("antenna.mode = \"parabolic\"".into());
            return Ok(IslAntennaMode::Parabolic);
        };
        match a.mode.as_str() {
            "parabolic" => Ok(IslAntennaMode::Parabolic),
            "digital" => {
                let k = match a.elements_per_axis {
                    Some(k) => k,
                    None => self.default_logged("antenna.elements_per_axis", 16),
                };
                Ok(IslAntennaMode::Digital { elements_per_axis: k })
            }
            "butler" => {
                let k = match a.elements_per_axis {
                    Some(k) => k,
                    None => self.default_logged("antenna.elements_per_axis", 4),
                };
                Ok(IslAntennaMode::butler(k))
            }
            other => Err(invalid(format!(
                "antenna.mode: unknown mode '{other}' (parabolic | digital | butler)"
            ))),
        }
    }

    pub fn rates(&mut self) -> CliResult<RateSet> {
        match self.scenario.rates.clone() {
            None => {
                self.defaults.push("rates = \"continuous\"".into());
                Ok(RateSet::Continuous)
            }
            Some(RatesSpec::Named(n)) if n == "continuous" => Ok(RateSet::Continuous),
            Some(RatesSpec::Named(n)) => {
                Err(invalid(format!("rates: unknown rate set '{n}' (continuous | list of bps)")))
            }
            Some(RatesSpec::Discrete(list)) => {
                let set = RateSet::Discrete(list);
                set.validate().map_err(|e| invalid(e.to_string()))?;
                Ok(set)
            }
        }
    }

    pub fn ground_sites(&mut self) -> CliResult<Vec<GroundSite>> {
        match self.scenario.ground.clone() {
            None => {
                self.defaults.push("ground = \"ksat23\"".into());
                Ok(presets::ground_segment())
            }
            Some(GroundSpec::Preset(name)) if name == "ksat23" => Ok(presets::ground_segment()),
            Some(GroundSpec::Preset(name)) => {
                Err(invalid(format!("ground: unknown preset '{name}' (known: ksat23)")))
            }
            Some(GroundSpec::Custom { sites }) => {
                if sites.is_empty() {
                    return Err(invalid("ground.sites: must not be empty"));
                }
                let out: Vec<GroundSite> = sites
                    .iter()
                    .map(|s| GroundSite::new(&s.id, s.lat_deg, s.lon_deg))
                    .collect();
                for s in &out {
                    s.validate().map_err(|e| invalid(format!("ground.sites: {e}")))?;
                }
                Ok(out)
            }
        }
    }

    pub fn traffic(&mut self) -> CliResult<TrafficConfig> {
        let t = self.scenario.traffic.clone();
        let (lambda, bytes, arrivals) = match t {
            Some(t) => (t.lambda_pps, t.packet_bytes, t.arrivals),
            None => {
                let l = self.default_logged("traffic.lambda_pps", 100.0);
                (l, None, None)
            }
        };
        if lambda < 0.0 || !lambda.is_finite() {
            return Err(invalid("traffic.lambda_pps: must be finite and >= 0"));
        }
        let bytes = match bytes {
            Some(b) if b > 0.0 => b,
            Some(_) => return Err(invalid("traffic.packet_bytes: must be positive")),
            None => self.default_logged("traffic.packet_bytes", 1500.0),
        };
        let arrivals = match arrivals.as_deref() {
            Some("poisson") => ArrivalProcess::Poisson,
            Some("deterministic") => ArrivalProcess::Deterministic,
            Some(other) => {
                return Err(invalid(format!(
                    "traffic.arrivals: unknown process '{other}' (poisson | deterministic)"
                )))
            }
            None => {
                self.defaults.push("traffic.arrivals = \"poisson\"".into());
                ArrivalProcess::Poisson
            }
        };
        Ok(TrafficConfig {
            lambda_per_site_pps: lambda,
            packet_bits: bytes * 8.0,
            arrivals,
        })
    }

    pub fn routing_min_elevation_rad(&mut self) -> f64 {
        match self.scenario.routing.as_ref().and_then(|r| r.min_elevation_deg) {
            Some(v) => v.to_radians(),
            None => self.default_logged("routing.min_elevation_deg", 10.0f64).to_radians(),
        }
    }

    pub fn sim_horizon_s(&mut self) -> f64 {
        match self.scenario.routing.as_ref().and_then(|r| r.sim_horizon_s) {
            Some(v) => v,
            None => self.default_logged("routing.sim_horizon_s", 5.0),
        }
    }

    pub fn queue_model(&mut self, traffic: &TrafficConfig, n_gs: usize) -> CliResult<QueueModel> {
        match self.scenario.routing.as_ref().and_then(|r| r.queue.clone()).as_deref() {
            Some("mm1") => Ok(QueueModel::Mm1 {
                lambda_per_site_pps: traffic.lambda_per_site_pps,
                n_gs,
            }),
            Some("constant") => Ok(QueueModel::Constant { mean_queue_s: 0.0 }),
            Some(other) => Err(invalid(format!(
                "routing.queue: unknown model '{other}' (constant | mm1)"
            ))),
            None => {
                self.defaults.push("routing.queue = \"constant\" (0 s)".into());
                Ok(QueueModel::Constant { mean_queue_s: 0.0 })
            }
        }
    }

    pub fn transceiver_budget(&mut self) -> TransceiverBudget {
        match self.scenario.matching.as_ref().and_then(|m| m.inter_plane_transceivers) {
            Some(n) => TransceiverBudget { inter_plane: n, ..TransceiverBudget::default() },
            None => {
                self.defaults.push("matching.inter_plane_transceivers = 2".into());
                TransceiverBudget::default()
            }
        }
    }

    pub fn matching_delta_t_s(&mut self, fallback: f64) -> f64 {
        match self.scenario.matching.as_ref().and_then(|m| m.delta_t_s) {
            Some(v) => v,
            None => self.default_logged("matching.delta_t_s", fallback),
        }
    }

    pub fn matching_delta_t_list(&mut self) -> Vec<f64> {
        match self.scenario.matching.as_ref().and_then(|m| m.delta_t_list_s.clone()) {
            Some(v) => v,
            None => {
                self.defaults.push("matching.delta_t_list_s = [0, 2, 10, 30]".into());
                vec![0.0, 2.0, 10.0, 30.0]
            }
        }
    }

    pub fn matching_horizon_s(&mut self, fallback: f64) -> f64 {
        match self.scenario.matching.as_ref().and_then(|m| m.horizon_s) {
            Some(v) => v,
            None => self.default_logged("matching.horizon_s", fallback),
        }
    }

    pub fn matching_step_s(&mut self, fallback: f64) -> f64 {
        match self.scenario.matching.as_ref().and_then(|m| m.step_s) {
            Some(v) => v,
            None => self.default_logged("matching.step_s", fallback),
        }
    }

    pub fn sampling_n_longitudes(&mut self) -> usize {
        match self.scenario.sampling.as_ref().and_then(|s| s.n_longitudes) {
            Some(v) => v,
            None => self.default_logged("sampling.n_longitudes", 100),
        }
    }

    pub fn sampling_time_step_s(&mut self, fallback: f64) -> f64 {
        match self.scenario.sampling.as_ref().and_then(|s| s.time_step_s) {
            Some(v) => v,
            None => self.default_logged("sampling.time_step_s", fallback),
        }
    }

    pub fn sampling_horizon_s(&mut self) -> Option<f64> {
        self.scenario.sampling.as_ref().and_then(|s| s.horizon_s)
    }

    pub fn sampling_lat_step_deg(&mut self) -> f64 {
        match self.scenario.sampling.as_ref().and_then(|s| s.lat_step_deg) {
            Some(v) => v,
            None => self.default_logged("sampling.lat_step_deg", 5.0),
        }
    }

    pub fn connectivity_floor_bps(&mut self) -> f64 {
        match self.scenario.connectivity.as_ref().and_then(|c| c.floor_mbps) {
            Some(v) => v * 1e6,
            None => self.default_logged("connectivity.floor_mbps", 1.0) * 1e6,
        }
    }
}

fn shell_from_section(i: usize, s: &ShellSection) -> CliResult<ShellConfig> {
    let geometry = match s.geometry.as_str() {
        "star" => WalkerGeometry::Star,
        "delta" => WalkerGeometry::Delta,
        other => {
            return Err(invalid(format!(
                "constellation.shells[{i}].geometry: unknown geometry '{other}' (star | delta)"
            )))
        }
    };
    if s.n_planes == 0 {
        return Err(invalid(format!("constellation.shells[{i}].n_planes: must be positive")));
    }
    let sats_per_plane = match (s.sats_per_plane, s.n_sats) {
        (Some(spp), None) => spp,
        (None, Some(n)) => {
            if n % s.n_planes != 0 {
                return Err(invalid(format!(
                    "constellation.shells[{i}].n_sats: {n} is not divisible by n_planes = {}",
                    s.n_planes
                )));
            }
            n / s.n_planes
        }
        (Some(_), Some(_)) => {
            return Err(invalid(format!(
                "constellation.shells[{i}]: give either sats_per_plane or n_sats, not both"
            )))
        }
        (None, None) => {
            return Err(invalid(format!(
                "constellation.shells[{i}]: one of sats_per_plane or n_sats is required"
            )))
        }
    };
    let cfg = ShellConfig {
        geometry,
        n_planes: s.n_planes,
        sats_per_plane,
        altitude_m: s.altitude_km * 1e3,
        inclination_rad: s.inclination_deg.to_radians(),
        inter_plane_phasing: s.phasing.unwrap_or(0.0),
        per_plane_altitude_offset_m: vec![],
    };
    cfg.validate()
        .map_err(|e| invalid(format!("constellation.shells[{i}]: {e}")))?;
    Ok(cfg)
}

/// Loads, parses, and validates a scenario file; CLI flags override the
/// scenario's own `seed` and `constants` fields.
pub fn load_scenario(
    path: &Path,
    seed_flag: Option<u64>,
    constants_flag: Option<&str>,
    threads: usize,
) -> CliResult<Resolved> {
    let raw = std::fs::read(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(raw.clone())
        .map_err(|_| invalid(format!("{} is not valid UTF-8", path.display())))?;
    let scenario: Scenario = toml::from_str(&text).map_err(|e| invalid(e.to_string()))?;

    let mut defaults = Vec::new();
    let constants_name = match constants_flag
        .map(str::to_string)
        .or_else(|| scenario.constants.clone())
    {
        Some(n) => n,
        None => {
            defaults.push("constants = \"spherical\"".into());
            "spherical".to_string()
        }
    };
    let constants = match constants_name.as_str() {
        "spherical" => PhysicalConstants::spherical(),
        "wgs-equatorial" => PhysicalConstants::wgs_equatorial(),
        other => {
            return Err(invalid(format!(
                "constants: unknown set '{other}' (spherical | wgs-equatorial)"
            )))
        }
    };
    if let Some(exp) = &scenario.experiment {
        if !EXPERIMENTS.contains(&exp.as_str()) {
            return Err(invalid(format!(
                "experiment: unknown id '{exp}'; catalog: {}",
                EXPERIMENTS.join(", ")
            )));
        }
    }
    let seed = seed_flag.or(scenario.seed);
    let experiment = scenario.experiment.clone();

    let mut hasher = Sha256::new();
    hasher.update(&raw);
    let sha256 = format!("{:x}", hasher.finalize());

    Ok(Resolved {
        scenario,
        experiment,
        constants,
        constants_name,
        seed,
        threads,
        sha256,
        defaults,
    })
}

/// Extra checks before running (not needed for `validate` alone).
pub fn check_runnable(r: &Resolved) -> CliResult<String> {
    let Some(exp) = r.experiment.clone() else {
        return Err(invalid(format!(
            "experiment: field is required to run; catalog: {}",
            EXPERIMENTS.join(", ")
        )));
    };
    if STOCHASTIC_EXPERIMENTS.contains(&exp.as_str()) && r.seed.is_none() {
        return Err(invalid(format!(
            "seed: required for the stochastic experiment '{exp}'"
        )));
    }
    Ok(exp)
}
