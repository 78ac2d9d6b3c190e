//! Ground-to-satellite visibility geometry: slant range, central angle,
//! coverage area, pass duration, and constellation-level availability
//! statistics.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::link::{self, LinkParams, RateSet};
use crate::orbits::{self, norm, sub, Constellation, SatelliteId, SatelliteState};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroundSite {
    pub latitude_rad: f64,
    pub longitude_rad: f64,
    /// Altitude above sea level; 0 for surface terminals.
    #[serde(default)]
    pub altitude_m: f64,
    pub id: String,
}

impl GroundSite {
    pub fn new(id: impl Into<String>, latitude_deg: f64, longitude_deg: f64) -> Self {
        Self {
            latitude_rad: latitude_deg.to_radians(),
            longitude_rad: longitude_deg.to_radians(),
            altitude_m: 0.0,
            id: id.into(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.latitude_rad.abs() > PI / 2.0 {
            return Err(Error::Config(format!("site {}: |lat| > pi/2", self.id)));
        }
        if !(-PI..PI).contains(&self.longitude_rad) {
            return Err(Error::Config(format!("site {}: lon outside [-pi, pi)", self.id)));
        }
        Ok(())
    }

    /// Earth-fixed position on the sphere of radius R_E + altitude.
    pub fn position_m(&self, constants: &PhysicalConstants) -> [f64; 3] {
        let r = constants.earth_radius_m + self.altitude_m;
        let (slat, clat) = self.latitude_rad.sin_cos();
        let (slon, clon) = self.longitude_rad.sin_cos();
        [r * clat * clon, r * clat * slon, r * slat]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoverageSpec {
    pub min_elevation_rad: f64,
}

impl CoverageSpec {
    pub fn from_deg(min_elevation_deg: f64) -> Self {
        Self {
            min_elevation_rad: min_elevation_deg.to_radians(),
        }
    }
}

impl Default for CoverageSpec {
    // 30 degrees is the typical minimum elevation for LEO service.
    fn default() -> Self {
        Self::from_deg(30.0)
    }
}

fn check_elevation_range(elevation_rad: f64) -> Result<()> {
    if !(0.0..=PI / 2.0).contains(&elevation_rad) {
        return Err(Error::Domain(format!(
            "elevation {elevation_rad} rad outside [0, pi/2]"
        )));
    }
    Ok(())
}

/// Terminal-to-satellite distance at elevation eps for a surface terminal.
pub fn slant_range(constants: &PhysicalConstants, altitude_m: f64, elevation_rad: f64) -> Result<f64> {
    if altitude_m <= 0.0 {
        return Err(Error::Domain(format!("altitude must be positive, got {altitude_m}")));
    }
    check_elevation_range(elevation_rad)?;
    let re = constants.earth_radius_m;
    let s = elevation_rad.sin();
    Ok((re * re * s * s + 2.0 * re * altitude_m + altitude_m * altitude_m).sqrt() - re * s)
}

/// Earth central angle between the terminal and the satellite nadir point.
pub fn central_angle(constants: &PhysicalConstants, altitude_m: f64, elevation_rad: f64) -> Result<f64> {
    let d = slant_range(constants, altitude_m, elevation_rad)?;
    let re = constants.earth_radius_m;
    let arg = ((re + altitude_m).powi(2) + re * re - d * d) / (2.0 * (re * re + altitude_m * re));
    if arg > 1.0 + 1e-12 || arg < -1.0 - 1e-12 {
        return Err(Error::Numeric(format!("central angle cosine {arg} out of range")));
    }
    Ok(arg.clamp(-1.0, 1.0).acos())
}

/// Spherical-cap coverage area 2*pi*R_E^2*(1 - cos(alpha)).
pub fn coverage_area(constants: &PhysicalConstants, altitude_m: f64, min_elevation_rad: f64) -> Result<f64> {
    let alpha = central_angle(constants, altitude_m, min_elevation_rad)?;
    let re = constants.earth_radius_m;
    Ok(2.0 * PI * re * re * (1.0 - alpha.cos()))
}

/// Upper bound on the satellite pass duration, achieved when the site
/// lies exactly under the orbital plane.
pub fn max_pass_duration(constants: &PhysicalConstants, altitude_m: f64, min_elevation_rad: f64) -> Result<f64> {
    let alpha = central_angle(constants, altitude_m, min_elevation_rad)?;
    Ok(orbits::orbital_period(constants, altitude_m)? * alpha / PI)
}

/// Elevation of the satellite above the site's local horizon.
pub fn elevation(constants: &PhysicalConstants, site: &GroundSite, sat: &SatelliteState) -> Result<f64> {
    let site_pos = site.position_m(constants);
    let rel = sub(sat.position_m, site_pos);
    let dist = norm(rel);
    if dist < 1.0 {
        return Err(Error::Domain("satellite coincides with site".into()));
    }
    let r_site = norm(site_pos);
    let sin_e = orbits::dot(rel, site_pos) / (dist * r_site);
    Ok(sin_e.clamp(-1.0, 1.0).asin())
}

/// Closed coverage test: elevation >= eps_min counts as covered.
pub fn in_coverage(
    constants: &PhysicalConstants,
    site: &GroundSite,
    sat: &SatelliteState,
    spec: &CoverageSpec,
) -> Result<bool> {
    Ok(elevation(constants, site, sat)? >= spec.min_elevation_rad)
}

/// Equivalent distance-based coverage test with a boundary tolerance.
pub fn in_coverage_by_distance(
    constants: &PhysicalConstants,
    site: &GroundSite,
    sat: &SatelliteState,
    spec: &CoverageSpec,
    tolerance_m: f64,
) -> Result<bool> {
    let h = sat.radius_m() - constants.earth_radius_m;
    let d_max = slant_range(constants, h, spec.min_elevation_rad)?;
    let d = norm(sub(sat.position_m, site.position_m(constants)));
    Ok(d <= d_max + tolerance_m)
}

#[derive(Debug, Clone, PartialEq)]
pub struct AvailabilityProfile {
    pub latitudes_rad: Vec<f64>,
    /// Fraction of (time, longitude) samples with at least one satellite
    /// in coverage.
    pub availability: Vec<f64>,
    /// Mean count of satellites in coverage.
    pub mean_visible: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AvailabilitySampling {
    pub n_longitudes: usize,
    pub time_step_s: f64,
    /// Defaults to one orbital period of the first shell.
    pub horizon_s: Option<f64>,
}

impl Default for AvailabilitySampling {
    fn default() -> Self {
        Self {
            n_longitudes: 100,
            time_step_s: 10.0,
            horizon_s: None,
        }
    }
}

/// Service availability and mean visible-satellite count per latitude,
/// averaged over longitude and time.
///
/// Uses the central-angle form of the coverage test: a surface site is
/// covered exactly when its angular distance to the sub-satellite point
/// is at most alpha(h, eps_min).
pub fn availability_by_latitude(
    constellation: &Constellation,
    spec: &CoverageSpec,
    latitudes_rad: &[f64],
    sampling: &AvailabilitySampling,
) -> Result<AvailabilityProfile> {
    if latitudes_rad.is_empty() {
        return Err(Error::Config("empty latitude grid".into()));
    }
    if sampling.n_longitudes == 0 || sampling.time_step_s <= 0.0 {
        return Err(Error::Config("invalid availability sampling".into()));
    }
    let constants = *constellation.constants();
    let horizon = match sampling.horizon_s {
        Some(h) => h,
        None => orbits::orbital_period(&constants, constellation.shell(0).altitude_m)?,
    };
    let n_steps = (horizon / sampling.time_step_s).ceil() as usize;
    let n_lat = latitudes_rad.len();
    let n_lon = sampling.n_longitudes;
    let bin_width = 2.0 * PI / n_lon as f64;

    let mut covered = vec![0u64; n_lat];
    let mut visible_sum = vec![0u64; n_lat];
    let mut counts = vec![0u32; n_lat * n_lon];

    for step in 0..n_steps {
        let t = step as f64 * sampling.time_step_s;
        counts.iter_mut().for_each(|c| *c = 0);
        for state in constellation.propagate_all(t) {
            let (sat_lat, sat_lon) = state.subsatellite_point();
            let h = state.radius_m() - constants.earth_radius_m;
            let alpha = central_angle(&constants, h, spec.min_elevation_rad)?;
            let cos_alpha = alpha.cos();
            let (ssin, scos) = sat_lat.sin_cos();
            for (li, &lat) in latitudes_rad.iter().enumerate() {
                let (usin, ucos) = lat.sin_cos();
                let denom = ucos * scos;
                let rhs = cos_alpha - usin * ssin;
                if denom.abs() < 1e-12 {
                    if rhs <= 0.0 {
                        for c in &mut counts[li * n_lon..(li + 1) * n_lon] {
                            *c += 1;
                        }
                    }
                    continue;
                }
                let ratio = rhs / denom;
                if ratio > 1.0 {
                    continue;
                }
                if ratio <= -1.0 {
                    for c in &mut counts[li * n_lon..(li + 1) * n_lon] {
                        *c += 1;
                    }
                    continue;
                }
                // longitudes within +/- delta of the sub-satellite point
                let delta = ratio.acos();
                let center = (sat_lon + PI) / bin_width;
                let lo = (center - delta / bin_width).ceil() as i64;
                let hi = (center + delta / bin_width).floor() as i64;
                for j in lo..=hi {
                    let jw = j.rem_euclid(n_lon as i64) as usize;
                    counts[li * n_lon + jw] += 1;
                }
            }
        }
        for li in 0..n_lat {
            for j in 0..n_lon {
                let c = counts[li * n_lon + j];
                if c > 0 {
                    covered[li] += 1;
                }
                visible_sum[li] += c as u64;
            }
        }
    }

    let total = (n_steps * n_lon) as f64;
    Ok(AvailabilityProfile {
        latitudes_rad: latitudes_rad.to_vec(),
        availability: covered.iter().map(|&c| c as f64 / total).collect(),
        mean_visible: visible_sum.iter().map(|&c| c as f64 / total).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PassSample {
    pub t_s: f64,
    pub elevation_rad: f64,
    pub distance_m: f64,
    pub rate_bps: f64,
}

/// Samples elevation, distance, and GSL rate across the first pass of the
/// given satellite over the site within the horizon. Empty when the
/// satellite never rises above eps_min.
pub fn pass_rate_profile(
    constellation: &Constellation,
    site: &GroundSite,
    sat: SatelliteId,
    params: &LinkParams,
    spec: &CoverageSpec,
    dt_s: f64,
    horizon_s: f64,
) -> Result<Vec<PassSample>> {
    if dt_s <= 0.0 || horizon_s <= 0.0 {
        return Err(Error::Config("pass sampling needs positive dt and horizon".into()));
    }
    let constants = constellation.constants();
    let g_tx = params.tx_antenna.peak_gain(constants, params.carrier_hz);
    let g_rx = params.rx_antenna.peak_gain(constants, params.carrier_hz);
    let mut samples = Vec::new();
    let mut in_pass = false;
    let n = (horizon_s / dt_s).ceil() as usize;
    for step in 0..=n {
        let t = step as f64 * dt_s;
        let state = constellation.propagate(sat, t)?;
        let eps = elevation(constants, site, &state)?;
        if eps >= spec.min_elevation_rad {
            in_pass = true;
            let d = norm(sub(state.position_m, site.position_m(constants)));
            let snr = link::snr(constants, params, d, g_tx, g_rx)?;
            samples.push(PassSample {
                t_s: t,
                elevation_rad: eps,
                distance_m: d,
                rate_bps: link::shannon_rate(params, snr, &RateSet::Continuous),
            });
        } else if in_pass {
            break;
        }
    }
    Ok(samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::{Constellation, ShellConfig, WalkerGeometry};
    use crate::presets;
    use approx::assert_relative_eq;

    fn c() -> PhysicalConstants {
        PhysicalConstants::spherical()
    }

    #[test]
    fn slant_range_zenith_equals_altitude() {
        for h in [400e3, 600e3, 1200e3] {
            let d = slant_range(&c(), h, PI / 2.0).unwrap();
            assert_relative_eq!(d, h, max_relative = 1e-12);
        }
    }

    #[test]
    fn slant_range_at_600km_30deg() {
        let d = slant_range(&c(), 600e3, 30f64.to_radians()).unwrap();
        assert_relative_eq!(d, 1075.1e3, epsilon = 1e3);
    }

    #[test]
    fn slant_range_monotone_in_elevation() {
        let mut prev = f64::INFINITY;
        for deg in [0.0, 10.0, 30.0, 60.0, 90.0] {
            let d = slant_range(&c(), 600e3, (deg as f64).to_radians()).unwrap();
            assert!(d < prev);
            prev = d;
        }
        let h = 600e3;
        assert_relative_eq!(prev, h, max_relative = 1e-12);
        assert!(slant_range(&c(), h, -0.1).is_err());
        assert!(slant_range(&c(), h, 1.6).is_err());
    }

    #[test]
    fn central_angle_zenith_is_zero() {
        let a = central_angle(&c(), 600e3, PI / 2.0).unwrap();
        assert!(a.abs() < 1e-6);
    }

    #[test]
    fn central_angle_triangle_closure() {
        let consts = c();
        let re = consts.earth_radius_m;
        for (h, eps_deg) in [(600e3, 30.0), (1200e3, 10.0), (550e3, 25.0)] {
            let eps = (eps_deg as f64).to_radians();
            let d = slant_range(&consts, h, eps).unwrap();
            // law of cosines: R^2 + d^2 + 2 R d sin(eps) = (R+h)^2
            assert_relative_eq!(
                re * re + d * d + 2.0 * re * d * eps.sin(),
                (re + h) * (re + h),
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn central_angle_matches_geometric_construction() {
        // sweep the ground point away from nadir until the elevation hits
        // the target; the swept angle is the central angle
        let consts = c();
        let h = 600e3;
        let target = 30f64.to_radians();
        let alpha = central_angle(&consts, h, target).unwrap();

        let sat = SatelliteState {
            position_m: [consts.earth_radius_m + h, 0.0, 0.0],
            velocity_mps: [0.0, 0.0, 0.0],
            epoch_s: 0.0,
        };
        let elev_at = |a: f64| {
            let site = GroundSite {
                latitude_rad: 0.0,
                longitude_rad: a,
                altitude_m: 0.0,
                id: "probe".into(),
            };
            elevation(&consts, &site, &sat).unwrap()
        };
        // bisection on the monotone elevation profile
        let (mut lo, mut hi) = (0.0f64, 1.0f64);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if elev_at(mid) > target {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        assert!((alpha - lo).abs() < 1e-6, "alpha {alpha}, swept {lo}");
    }

    #[test]
    fn coverage_area_limits() {
        let consts = c();
        let a = coverage_area(&consts, 600e3, PI / 2.0).unwrap();
        assert!(a.abs() < 1.0);
        // hemispheric limit of the cap formula
        let re = consts.earth_radius_m;
        let full = 2.0 * PI * re * re * (1.0 - PI.cos());
        assert_relative_eq!(full, 4.0 * PI * re * re, max_relative = 1e-12);
        // larger h covers more at fixed eps_min
        let mut prev = 0.0;
        for h in [400e3, 600e3, 1200e3] {
            let a = coverage_area(&consts, h, 30f64.to_radians()).unwrap();
            assert!(a > prev);
            prev = a;
        }
    }

    fn single_sat_polar(h: f64) -> Constellation {
        let shell = ShellConfig {
            geometry: WalkerGeometry::Star,
            n_planes: 1,
            sats_per_plane: 1,
            altitude_m: h,
            inclination_rad: PI / 2.0,
            inter_plane_phasing: 0.0,
            per_plane_altitude_offset_m: vec![],
        };
        Constellation::build(vec![shell], c()).unwrap()
    }

    #[test]
    fn max_pass_duration_matches_simulated_pass() {
        let consts = c();
        let h = 575e3;
        let eps_min = 30f64.to_radians();
        let bound = max_pass_duration(&consts, h, eps_min).unwrap();
        assert!(bound > 60.0 && bound < 1200.0); // minutes range

        // site exactly under the orbital plane, Earth rotation off
        let cons = single_sat_polar(h).with_earth_rotation(false);
        let site = GroundSite::new("under-plane", 45.0, 0.0);
        let spec = CoverageSpec { min_elevation_rad: eps_min };
        let dt = 1.0;
        let samples = pass_rate_profile(
            &cons,
            &site,
            SatelliteId { shell: 0, plane: 0, slot: 0 },
            &presets::link_params("gsl").unwrap(),
            &spec,
            dt,
            orbits::orbital_period(&consts, h).unwrap(),
        )
        .unwrap();
        let simulated = (samples.len() - 1) as f64 * dt;
        assert!(
            (simulated - bound).abs() <= 2.0 * dt,
            "bound {bound}, simulated {simulated}"
        );
        assert!(max_pass_duration(&consts, h, PI / 2.0).unwrap() < 1.0);
    }

    #[test]
    fn misaligned_pass_is_shorter() {
        let consts = c();
        let h = 575e3;
        let eps_min = 30f64.to_radians();
        let cons = single_sat_polar(h).with_earth_rotation(false);
        let spec = CoverageSpec { min_elevation_rad: eps_min };
        let params = presets::link_params("gsl").unwrap();
        let horizon = orbits::orbital_period(&consts, h).unwrap();
        let id = SatelliteId { shell: 0, plane: 0, slot: 0 };
        let aligned =
            pass_rate_profile(&cons, &GroundSite::new("a", 45.0, 0.0), id, &params, &spec, 1.0, horizon)
                .unwrap();
        // shifted off the orbital plane (plane is the x-z plane)
        let misaligned =
            pass_rate_profile(&cons, &GroundSite::new("m", 45.0, 4.0), id, &params, &spec, 1.0, horizon)
                .unwrap();
        assert!(!misaligned.is_empty());
        assert!(misaligned.len() < aligned.len());
    }

    #[test]
    fn elevation_zenith_and_antipode() {
        let consts = c();
        let site = GroundSite::new("s", 10.0, 20.0);
        let dir = site.position_m(&consts);
        let r = orbits::norm(dir);
        let scale = (r + 600e3) / r;
        let zenith_sat = SatelliteState {
            position_m: [dir[0] * scale, dir[1] * scale, dir[2] * scale],
            velocity_mps: [0.0; 3],
            epoch_s: 0.0,
        };
        assert_relative_eq!(
            elevation(&consts, &site, &zenith_sat).unwrap(),
            PI / 2.0,
            epsilon = 1e-9
        );
        let antipode_sat = SatelliteState {
            position_m: [-dir[0] * scale, -dir[1] * scale, -dir[2] * scale],
            velocity_mps: [0.0; 3],
            epoch_s: 0.0,
        };
        assert!(elevation(&consts, &site, &antipode_sat).unwrap() < 0.0);
    }

    #[test]
    fn elevation_consistent_with_slant_range() {
        let consts = c();
        let h = 600e3;
        let site = GroundSite::new("s", 0.0, 0.0);
        // satellite at central angle alpha for a 40 degree elevation
        let eps = 40f64.to_radians();
        let alpha = central_angle(&consts, h, eps).unwrap();
        let r = consts.earth_radius_m + h;
        let sat = SatelliteState {
            position_m: [r * alpha.cos(), r * alpha.sin(), 0.0],
            velocity_mps: [0.0; 3],
            epoch_s: 0.0,
        };
        let measured = elevation(&consts, &site, &sat).unwrap();
        assert_relative_eq!(measured, eps, epsilon = 1e-9);
        let d = orbits::norm(sub(sat.position_m, site.position_m(&consts)));
        assert_relative_eq!(d, slant_range(&consts, h, eps).unwrap(), max_relative = 1e-6);
    }

    #[test]
    fn coverage_boundary_is_closed() {
        let consts = c();
        let h = 600e3;
        let spec = CoverageSpec::from_deg(30.0);
        let alpha = central_angle(&consts, h, spec.min_elevation_rad).unwrap();
        let r = consts.earth_radius_m + h;
        let site = GroundSite::new("s", 0.0, 0.0);
        let boundary_sat = SatelliteState {
            position_m: [r * alpha.cos(), r * alpha.sin(), 0.0],
            velocity_mps: [0.0; 3],
            epoch_s: 0.0,
        };
        assert!(in_coverage(&consts, &site, &boundary_sat, &spec).unwrap());
        let below = SatelliteState {
            position_m: [-r, 0.0, 0.0],
            velocity_mps: [0.0; 3],
            epoch_s: 0.0,
        };
        assert!(!in_coverage(&consts, &site, &below, &spec).unwrap());
    }

    #[test]
    fn availability_rejects_empty_grid() {
        let cons = single_sat_polar(600e3);
        let err = availability_by_latitude(
            &cons,
            &CoverageSpec::default(),
            &[],
            &AvailabilitySampling::default(),
        );
        assert!(err.is_err());
    }

    #[test]
    fn availability_single_satellite_sane() {
        let cons = single_sat_polar(600e3);
        let lats: Vec<f64> = vec![0.0, 45f64.to_radians(), 89f64.to_radians()];
        let sampling = AvailabilitySampling {
            n_longitudes: 36,
            time_step_s: 30.0,
            horizon_s: None,
        };
        let profile =
            availability_by_latitude(&cons, &CoverageSpec::default(), &lats, &sampling).unwrap();
        for (a, m) in profile.availability.iter().zip(&profile.mean_visible) {
            assert!((0.0..=1.0).contains(a));
            assert!(*m >= *a); // count dominates the indicator
        }
    }

    #[test]
    fn pass_profile_symmetric_for_aligned_site() {
        let consts = c();
        let h = 575e3;
        let cons = single_sat_polar(h).with_earth_rotation(false);
        let site = GroundSite::new("under-plane", 60.0, 0.0);
        let params = presets::link_params("gsl").unwrap();
        let spec = CoverageSpec::default();
        let samples = pass_rate_profile(
            &cons,
            &site,
            SatelliteId { shell: 0, plane: 0, slot: 0 },
            &params,
            &spec,
            1.0,
            orbits::orbital_period(&consts, h).unwrap(),
        )
        .unwrap();
        assert!(samples.len() > 10);
        let n = samples.len();
        for i in 0..n / 2 {
            let a = samples[i].rate_bps;
            let b = samples[n - 1 - i].rate_bps;
            assert!((a - b).abs() / a < 0.01, "asymmetry at {i}: {a} vs {b}");
        }
        // rate at the pass edge matches the eps_min slant range
        let d_edge = slant_range(&consts, h, spec.min_elevation_rad).unwrap();
        let g = params.tx_antenna.peak_gain(&consts, params.carrier_hz);
        let g_rx = params.rx_antenna.peak_gain(&consts, params.carrier_hz);
        let snr_edge = link::snr(&consts, &params, d_edge, g, g_rx).unwrap();
        let rate_edge = link::shannon_rate(&params, snr_edge, &RateSet::Continuous);
        let first = samples.first().unwrap().rate_bps;
        // the sampled edge is within one time step of the true edge
        assert!((first - rate_edge).abs() / rate_edge < 0.01);
        // rate peaks mid-pass
        let peak = samples.iter().map(|s| s.rate_bps).fold(0.0, f64::max);
        assert!(samples[n / 2].rate_bps >= 0.999 * peak);
    }

    #[test]
    fn lower_altitude_has_shorter_pass() {
        let consts = c();
        let spec = CoverageSpec::default();
        let params = presets::link_params("gsl").unwrap();
        let mut lens = Vec::new();
        for h in [575e3, 1200e3] {
            let cons = single_sat_polar(h).with_earth_rotation(false);
            let site = GroundSite::new("s", 45.0, 0.0);
            let samples = pass_rate_profile(
                &cons,
                &site,
                SatelliteId { shell: 0, plane: 0, slot: 0 },
                &params,
                &spec,
                1.0,
                orbits::orbital_period(&consts, h).unwrap(),
            )
            .unwrap();
            lens.push(samples.len());
        }
        assert!(lens[0] < lens[1], "kepler {} vs oneweb {}", lens[0], lens[1]);
    }

    #[test]
    fn no_visibility_yields_empty_series() {
        let consts = c();
        // equatorial orbit never visible from the pole at 30 degrees
        let shell = ShellConfig {
            geometry: WalkerGeometry::Delta,
            n_planes: 1,
            sats_per_plane: 1,
            altitude_m: 600e3,
            inclination_rad: 0.05,
            inter_plane_phasing: 0.0,
            per_plane_altitude_offset_m: vec![],
        };
        let cons = Constellation::build(vec![shell], consts).unwrap();
        let site = GroundSite::new("pole", 89.0, 0.0);
        let samples = pass_rate_profile(
            &cons,
            &site,
            SatelliteId { shell: 0, plane: 0, slot: 0 },
            &presets::link_params("gsl").unwrap(),
            &CoverageSpec::default(),
            10.0,
            6000.0,
        )
        .unwrap();
        assert!(samples.is_empty());
    }
}
