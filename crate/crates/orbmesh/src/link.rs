//! RF link budget: free-space path loss, noise power, antenna gains,
//! SNR and Shannon rate, plus the global ISL connectivity condition.

use serde::{Deserialize, Serialize};

use crate::constants::{PhysicalConstants, BOLTZMANN, T0_K};
use crate::error::{Error, Result};
use crate::orbits::{self, ShellConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum AntennaSpec {
    Parabolic {
        diameter_m: f64,
        efficiency: f64,
    },
    PhasedArray {
        elements_per_axis: usize,
        spacing_wavelengths: f64,
    },
    Butler {
        elements_per_axis: usize,
        spacing_wavelengths: f64,
        fixed_polar_rad: f64,
    },
}

impl AntennaSpec {
    /// Boresight (peak) gain over isotropic at carrier f.
    pub fn peak_gain(&self, constants: &PhysicalConstants, carrier_hz: f64) -> f64 {
        match *self {
            AntennaSpec::Parabolic { diameter_m, efficiency } => {
                parabolic_gain(constants, diameter_m, carrier_hz, efficiency)
            }
            AntennaSpec::PhasedArray { elements_per_axis, .. }
            | AntennaSpec::Butler { elements_per_axis, .. } => {
                (elements_per_axis * elements_per_axis) as f64
            }
        }
    }
}

/// Table-style radio parameters for one link class (GSL or ISL).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkParams {
    pub carrier_hz: f64,
    pub bandwidth_hz: f64,
    pub tx_power_w: f64,
    pub noise_temperature_k: f64,
    pub noise_figure_db: f64,
    pub tx_antenna: AntennaSpec,
    pub rx_antenna: AntennaSpec,
    pub pointing_loss_db: f64,
}

impl LinkParams {
    pub fn noise_power_w(&self) -> f64 {
        noise_power(
            self.bandwidth_hz,
            self.noise_temperature_k,
            self.noise_figure_db,
        )
    }
}

/// Set of allowed rates; `Continuous` means the Shannon rate is used
/// directly.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum RateSet {
    #[default]
    Continuous,
    /// Discrete MCS rates in bps; zero is not an allowed member.
    Discrete(Vec<f64>),
}

impl RateSet {
    pub fn validate(&self) -> Result<()> {
        if let RateSet::Discrete(rates) = self {
            if rates.iter().any(|&r| r <= 0.0) {
                return Err(Error::Config("rate set must contain only positive rates".into()));
            }
        }
        Ok(())
    }

    /// Largest allowed rate not exceeding the Shannon rate; 0.0 marks
    /// "no feasible rate" in discrete mode.
    pub fn select(&self, shannon_bps: f64) -> f64 {
        match self {
            RateSet::Continuous => shannon_bps,
            RateSet::Discrete(rates) => rates
                .iter()
                .copied()
                .filter(|&r| r <= shannon_bps)
                .fold(0.0, f64::max),
        }
    }
}

/// Free-space path loss (4*pi*d*f/c)^2, dimensionless.
pub fn free_space_path_loss(constants: &PhysicalConstants, distance_m: f64, carrier_hz: f64) -> Result<f64> {
    if distance_m <= 0.0 {
        return Err(Error::Domain(format!("distance must be positive, got {distance_m}")));
    }
    if carrier_hz <= 0.0 {
        return Err(Error::Domain(format!("carrier must be positive, got {carrier_hz}")));
    }
    let x = 4.0 * std::f64::consts::PI * distance_m * carrier_hz / constants.c;
    Ok(x * x)
}

/// Receiver noise power k_B * B * (T_N + T_0 * (F - 1)) in watts.
pub fn noise_power(bandwidth_hz: f64, noise_temperature_k: f64, noise_figure_db: f64) -> f64 {
    let f = 10f64.powf(noise_figure_db / 10.0);
    BOLTZMANN * bandwidth_hz * (noise_temperature_k + T0_K * (f - 1.0))
}

/// Aperture gain eta * (pi * D * f / c)^2 of a parabolic dish.
pub fn parabolic_gain(constants: &PhysicalConstants, diameter_m: f64, carrier_hz: f64, efficiency: f64) -> f64 {
    let x = std::f64::consts::PI * diameter_m * carrier_hz / constants.c;
    efficiency * x * x
}

/// SNR with explicit antenna gains. Pointing loss is applied once per
/// antenna end.
pub fn snr(
    constants: &PhysicalConstants,
    params: &LinkParams,
    distance_m: f64,
    gain_tx: f64,
    gain_rx: f64,
) -> Result<f64> {
    let loss = free_space_path_loss(constants, distance_m, params.carrier_hz)?;
    let pointing = 10f64.powf(-2.0 * params.pointing_loss_db / 10.0);
    Ok(params.tx_power_w * gain_tx * gain_rx * pointing / (loss * params.noise_power_w()))
}

/// SNR using each antenna's boresight gain (ideal pointing).
pub fn snr_boresight(constants: &PhysicalConstants, params: &LinkParams, distance_m: f64) -> Result<f64> {
    let g_tx = params.tx_antenna.peak_gain(constants, params.carrier_hz);
    let g_rx = params.rx_antenna.peak_gain(constants, params.carrier_hz);
    snr(constants, params, distance_m, g_tx, g_rx)
}

/// B * log2(1 + snr), quantized to the rate set when one is configured.
pub fn shannon_rate(params: &LinkParams, snr: f64, rates: &RateSet) -> f64 {
    let shannon = params.bandwidth_hz * (1.0 + snr.max(0.0)).log2();
    rates.select(shannon)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConnectivityReport {
    pub connected: bool,
    pub max_distance_m: f64,
    pub shannon_rate_bps: f64,
    pub selected_rate_bps: f64,
    /// dB margin of the SNR at the maximum inter-plane distance over the
    /// SNR needed for the smallest usable rate.
    pub margin_db: f64,
}

/// Evaluates the worst-case inter-plane link of a shell and reports
/// whether some usable rate fits, with the SNR margin in dB.
///
/// In continuous mode `floor_bps` stands in for the smallest rate of the
/// (unspecified) MCS set.
pub fn isl_connectivity_check(
    constants: &PhysicalConstants,
    params: &LinkParams,
    shell: &ShellConfig,
    rates: &RateSet,
    floor_bps: f64,
) -> Result<ConnectivityReport> {
    rates.validate()?;
    let d_max = orbits::max_inter_plane_distance(
        constants,
        shell.sats_per_plane,
        shell.n_planes,
        shell.altitude_m,
    )?;
    let snr = snr_boresight(constants, params, d_max)?;
    let shannon = params.bandwidth_hz * (1.0 + snr).log2();
    let selected = rates.select(shannon);

    let min_rate = match rates {
        RateSet::Continuous => floor_bps,
        RateSet::Discrete(list) => list.iter().copied().fold(f64::INFINITY, f64::min),
    };
    let snr_required = 2f64.powf(min_rate / params.bandwidth_hz) - 1.0;
    let margin_db = 10.0 * (snr / snr_required).log10();

    let connected = match rates {
        RateSet::Continuous => shannon > 0.0 && shannon >= floor_bps,
        RateSet::Discrete(_) => selected > 0.0,
    };
    Ok(ConnectivityReport {
        connected,
        max_distance_m: d_max,
        shannon_rate_bps: shannon,
        selected_rate_bps: selected,
        margin_db,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presets;
    use approx::assert_relative_eq;

    fn c() -> PhysicalConstants {
        PhysicalConstants::spherical()
    }

    fn db(x: f64) -> f64 {
        10.0 * x.log10()
    }

    #[test]
    fn fspl_unit_distance() {
        let consts = c();
        let f = 26e9;
        let d = consts.c / (4.0 * std::f64::consts::PI * f);
        let l = free_space_path_loss(&consts, d, f).unwrap();
        assert_relative_eq!(l, 1.0, max_relative = 1e-12);
    }

    #[test]
    fn fspl_square_law_and_value() {
        let consts = c();
        let l1 = free_space_path_loss(&consts, 500e3, 26e9).unwrap();
        let l2 = free_space_path_loss(&consts, 1000e3, 26e9).unwrap();
        assert_relative_eq!(db(l2) - db(l1), 6.0206, epsilon = 1e-3);
        assert_relative_eq!(db(l2), 180.75, epsilon = 0.05);
        assert!(free_space_path_loss(&consts, 0.0, 26e9).is_err());
    }

    #[test]
    fn fspl_self_identity() {
        let consts = c();
        for (d, f) in [(1.0e3, 2e9), (3.5e6, 26e9)] {
            let l = free_space_path_loss(&consts, d, f).unwrap();
            let x = 4.0 * std::f64::consts::PI * d * f / consts.c;
            assert_relative_eq!(l * consts.c * consts.c / (x * x * consts.c * consts.c), 1.0);
        }
    }

    #[test]
    fn noise_power_matches_table() {
        let gsl = db(noise_power(500e6, 150.0, 1.2));
        assert!((gsl - (-117.77)).abs() < 0.02, "gsl noise {gsl} dBW");
        let isl = db(noise_power(500e6, 290.0, 2.0));
        assert!((isl - (-114.99)).abs() < 0.02, "isl noise {isl} dBW");
    }

    #[test]
    fn noise_power_zero_figure() {
        let p = noise_power(1e6, 200.0, 0.0);
        assert_relative_eq!(p, BOLTZMANN * 1e6 * 200.0, max_relative = 1e-12);
    }

    #[test]
    fn parabolic_gains_match_table() {
        let consts = c();
        let cases = [
            (0.26, 20e9, 32.13),
            (0.33, 20e9, 34.20),
            (0.26, 26e9, 34.41),
        ];
        for (d, f, expect_dbi) in cases {
            let g = db(parabolic_gain(&consts, d, f, 0.55));
            assert!((g - expect_dbi).abs() < 0.05, "D={d} f={f}: {g} dBi");
        }
    }

    #[test]
    fn snr_basic_shape() {
        let consts = c();
        let mut params = presets::link_params("isl").unwrap();
        params.pointing_loss_db = 0.0;
        // unit gains at unit path loss: SNR = P_t / sigma^2
        let f = params.carrier_hz;
        let d_unit = consts.c / (4.0 * std::f64::consts::PI * f);
        let s = snr(&consts, &params, d_unit, 1.0, 1.0).unwrap();
        assert_relative_eq!(s, params.tx_power_w / params.noise_power_w(), max_relative = 1e-12);
        // monotone decreasing in distance
        let mut prev = f64::INFINITY;
        for d in [100e3, 500e3, 1000e3, 3000e3] {
            let s = snr_boresight(&consts, &params, d).unwrap();
            assert!(s < prev);
            prev = s;
        }
    }

    #[test]
    fn snr_positive_at_kepler_max_distance() {
        let consts = c();
        let params = presets::link_params("isl").unwrap();
        let shell = presets::shell_config("kepler").unwrap();
        let d = orbits::max_inter_plane_distance(&consts, shell.sats_per_plane, shell.n_planes, shell.altitude_m)
            .unwrap();
        let s = snr_boresight(&consts, &params, d).unwrap();
        assert!(s.is_finite() && s > 0.0);
    }

    #[test]
    fn shannon_rate_anchor_points() {
        let params = presets::link_params("isl").unwrap();
        let b = params.bandwidth_hz;
        assert_eq!(shannon_rate(&params, 0.0, &RateSet::Continuous), 0.0);
        assert_relative_eq!(shannon_rate(&params, 1.0, &RateSet::Continuous), b, max_relative = 1e-12);
        assert_relative_eq!(shannon_rate(&params, 3.0, &RateSet::Continuous), 2.0 * b, max_relative = 1e-12);
    }

    #[test]
    fn discrete_rates_never_exceed_shannon() {
        let params = presets::link_params("isl").unwrap();
        let set = RateSet::Discrete(vec![1e8, 2.5e8, 5e8, 1e9]);
        for snr in [0.0, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0] {
            let selected = shannon_rate(&params, snr, &set);
            let shannon = params.bandwidth_hz * (1.0f64 + snr).log2();
            assert!(selected <= shannon + 1e-9);
        }
        // below the smallest rate: zero marker
        assert_eq!(shannon_rate(&params, 1e-6, &set), 0.0);
    }

    #[test]
    fn connectivity_continuous_positive_snr() {
        let consts = c();
        let params = presets::link_params("isl").unwrap();
        let shell = presets::shell_config("kepler").unwrap();
        let report =
            isl_connectivity_check(&consts, &params, &shell, &RateSet::Continuous, 1e6).unwrap();
        assert!(report.connected);
        assert!(report.shannon_rate_bps > 1e8);
    }

    #[test]
    fn connectivity_margin_monotone_in_planes() {
        let consts = c();
        let params = presets::link_params("isl").unwrap();
        let mut prev = f64::NEG_INFINITY;
        for p in [4usize, 7, 12, 24, 48] {
            let mut shell = presets::shell_config("kepler").unwrap();
            shell.n_planes = p;
            let report =
                isl_connectivity_check(&consts, &params, &shell, &RateSet::Continuous, 1e6).unwrap();
            assert!(report.margin_db >= prev);
            prev = report.margin_db;
        }
    }

    #[test]
    fn connectivity_margin_linear_in_power() {
        let consts = c();
        let mut params = presets::link_params("isl").unwrap();
        let shell = presets::shell_config("kepler").unwrap();
        let base = isl_connectivity_check(&consts, &params, &shell, &RateSet::Continuous, 1e6)
            .unwrap()
            .margin_db;
        params.tx_power_w *= 10f64.powf(0.6); // +6 dB
        let boosted = isl_connectivity_check(&consts, &params, &shell, &RateSet::Continuous, 1e6)
            .unwrap()
            .margin_db;
        assert_relative_eq!(boosted - base, 6.0, epsilon = 1e-9);
    }

    #[test]
    fn rate_monotone_in_parameters() {
        let consts = c();
        let base = presets::link_params("isl").unwrap();
        let rate_at = |params: &LinkParams, d: f64| {
            let s = snr_boresight(&consts, params, d).unwrap();
            shannon_rate(params, s, &RateSet::Continuous)
        };
        let mut prev = f64::INFINITY;
        for d in [200e3, 800e3, 2000e3, 4000e3] {
            let r = rate_at(&base, d);
            assert!(r <= prev);
            prev = r;
        }
        let mut boosted = base.clone();
        boosted.tx_power_w *= 2.0;
        assert!(rate_at(&boosted, 1000e3) >= rate_at(&base, 1000e3));
        let mut wide = base.clone();
        wide.bandwidth_hz *= 2.0;
        assert!(rate_at(&wide, 1000e3) >= rate_at(&base, 1000e3));
    }
}
