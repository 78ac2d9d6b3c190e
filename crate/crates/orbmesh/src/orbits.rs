//! Walker constellation construction and circular-orbit propagation.
//!
//! Satellites move on ideal circular Keplerian orbits; positions are
//! expressed in an Earth-fixed frame by rotating the inertial position by
//! the accumulated Earth rotation. No perturbations are modelled.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WalkerGeometry {
    /// Near-polar planes whose ascending nodes span 180 degrees.
    Star,
    /// Inclined planes whose ascending nodes span 360 degrees.
    Delta,
}

/// One orbital shell's Walker parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShellConfig {
    pub geometry: WalkerGeometry,
    pub n_planes: usize,
    pub sats_per_plane: usize,
    pub altitude_m: f64,
    pub inclination_rad: f64,
    /// Fraction of the in-plane spacing applied as an anomaly offset
    /// between adjacent planes, in [0, 1).
    #[serde(default)]
    pub inter_plane_phasing: f64,
    /// Additive altitude offset per plane (orbital separation).
    /// Empty means all-zero.
    #[serde(default)]
    pub per_plane_altitude_offset_m: Vec<f64>,
}

impl ShellConfig {
    pub fn n_sats(&self) -> usize {
        self.n_planes * self.sats_per_plane
    }

    /// RAAN step between adjacent planes: pi/P for star, 2*pi/P for delta.
    pub fn raan_step(&self) -> f64 {
        match self.geometry {
            WalkerGeometry::Star => PI / self.n_planes as f64,
            WalkerGeometry::Delta => 2.0 * PI / self.n_planes as f64,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_planes == 0 || self.sats_per_plane == 0 {
            return Err(Error::Config("shell must have planes and satellites".into()));
        }
        if self.altitude_m <= 0.0 {
            return Err(Error::Config(format!(
                "altitude must be positive, got {}",
                self.altitude_m
            )));
        }
        if self.inclination_rad <= 0.0 || self.inclination_rad > PI / 2.0 + 0.2 {
            return Err(Error::Config(format!(
                "inclination {} rad outside (0, pi/2 + margin]",
                self.inclination_rad
            )));
        }
        if !(0.0..1.0).contains(&self.inter_plane_phasing) {
            return Err(Error::Config("inter-plane phasing must be in [0, 1)".into()));
        }
        if !self.per_plane_altitude_offset_m.is_empty()
            && self.per_plane_altitude_offset_m.len() != self.n_planes
        {
            return Err(Error::Config(format!(
                "expected {} per-plane altitude offsets, got {}",
                self.n_planes,
                self.per_plane_altitude_offset_m.len()
            )));
        }
        Ok(())
    }

    /// Altitude of a given plane including its orbital-separation offset.
    pub fn plane_altitude_m(&self, plane: usize) -> f64 {
        let offset = self
            .per_plane_altitude_offset_m
            .get(plane)
            .copied()
            .unwrap_or(0.0);
        self.altitude_m + offset
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SatelliteId {
    pub shell: usize,
    pub plane: usize,
    pub slot: usize,
}

/// Position and velocity of one satellite in the Earth-fixed frame.
///
/// The velocity is the orbital velocity expressed along the Earth-fixed
/// axes, so its magnitude is v_o(h) regardless of Earth rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SatelliteState {
    pub position_m: [f64; 3],
    pub velocity_mps: [f64; 3],
    pub epoch_s: f64,
}

impl SatelliteState {
    pub fn radius_m(&self) -> f64 {
        norm(self.position_m)
    }

    /// Geocentric latitude and longitude of the sub-satellite point (rad).
    pub fn subsatellite_point(&self) -> (f64, f64) {
        let [x, y, z] = self.position_m;
        let r = self.radius_m();
        ((z / r).asin(), y.atan2(x))
    }
}

pub fn norm(v: [f64; 3]) -> f64 {
    (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt()
}

pub fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

pub fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Circular orbital velocity sqrt(GM / (R_E + h)) in m/s.
pub fn orbital_velocity(constants: &PhysicalConstants, altitude_m: f64) -> Result<f64> {
    if altitude_m < 0.0 {
        return Err(Error::Domain(format!("negative altitude {altitude_m}")));
    }
    Ok((constants.gm / (constants.earth_radius_m + altitude_m)).sqrt())
}

/// Circular orbital period 2*pi*(R_E+h)/v_o(h) in seconds.
pub fn orbital_period(constants: &PhysicalConstants, altitude_m: f64) -> Result<f64> {
    let r = constants.earth_radius_m + altitude_m;
    Ok(2.0 * PI * r / orbital_velocity(constants, altitude_m)?)
}

/// Altitude at which the ground track repeats after n revolutions in m
/// equinoctial days.
pub fn recursive_altitude(constants: &PhysicalConstants, n: u32, m: u32) -> Result<f64> {
    if n == 0 || m == 0 {
        return Err(Error::Domain("recursive orbit requires n >= 1, m >= 1".into()));
    }
    let t = m as f64 * constants.equinoctial_day_s;
    let num = t * t * constants.gm;
    let den = (2.0 * n as f64 * PI).powi(2);
    Ok((num / den).powf(1.0 / 3.0) - constants.earth_radius_m)
}

/// Chord distance between in-plane neighbours: 2*(R_E+h)*sin(pi/N_op).
pub fn intra_plane_distance(
    constants: &PhysicalConstants,
    sats_per_plane: usize,
    altitude_m: f64,
) -> Result<f64> {
    if sats_per_plane < 2 {
        return Err(Error::Domain("intra-plane distance requires N_op >= 2".into()));
    }
    let r = constants.earth_radius_m + altitude_m;
    Ok(2.0 * r * (PI / sats_per_plane as f64).sin())
}

/// Chord distance between two points on the sphere of radius R_E + h,
/// given polar angles (from the pole) and azimuths.
pub fn spherical_distance(
    constants: &PhysicalConstants,
    polar_u: f64,
    polar_v: f64,
    azimuth_u: f64,
    azimuth_v: f64,
    altitude_m: f64,
) -> f64 {
    let r = constants.earth_radius_m + altitude_m;
    let arg = 1.0
        - polar_u.cos() * polar_v.cos()
        - (azimuth_u - azimuth_v).cos() * polar_u.sin() * polar_v.sin();
    (2.0 * r * r * arg.max(0.0)).sqrt()
}

/// Maximum inter-plane distance for perfectly aligned satellites at the
/// Equator: 2*(R_E+h)*sin(pi/(2P)).
pub fn aligned_inter_plane_distance(
    constants: &PhysicalConstants,
    n_planes: usize,
    altitude_m: f64,
) -> f64 {
    let r = constants.earth_radius_m + altitude_m;
    2.0 * r * (PI / (2.0 * n_planes as f64)).sin()
}

/// Maximum distance to the closest inter-plane neighbour, attained at the
/// Equator with the worst-case in-plane misalignment.
pub fn max_inter_plane_distance(
    constants: &PhysicalConstants,
    sats_per_plane: usize,
    n_planes: usize,
    altitude_m: f64,
) -> Result<f64> {
    if sats_per_plane < 2 {
        return Err(Error::Domain("requires N_op >= 2".into()));
    }
    if n_planes < 2 {
        return Err(Error::Domain("requires P >= 2".into()));
    }
    let r = constants.earth_radius_m + altitude_m;
    // sin(pi/2 + x) = sin(pi/2 - x); the two branches coincide.
    let arg = 2.0 - 2.0 * (PI / n_planes as f64).cos() * (PI / 2.0 + PI / sats_per_plane as f64).sin();
    Ok(r * arg.max(0.0).sqrt())
}

/// An indexed, immutable satellite set built from one or more shells.
#[derive(Debug, Clone)]
pub struct Constellation {
    shells: Vec<ShellConfig>,
    constants: PhysicalConstants,
    earth_rotation: bool,
}

impl Constellation {
    pub fn build(shells: Vec<ShellConfig>, constants: PhysicalConstants) -> Result<Self> {
        if shells.is_empty() {
            return Err(Error::Config("constellation needs at least one shell".into()));
        }
        for s in &shells {
            s.validate()?;
        }
        Ok(Self {
            shells,
            constants,
            earth_rotation: true,
        })
    }

    /// Disable the Earth-rotation term; positions stay in the inertial
    /// frame orientation. Used for orbital-plane-relative analyses.
    pub fn with_earth_rotation(mut self, enabled: bool) -> Self {
        self.earth_rotation = enabled;
        self
    }

    pub fn constants(&self) -> &PhysicalConstants {
        &self.constants
    }

    pub fn shells(&self) -> &[ShellConfig] {
        &self.shells
    }

    pub fn shell(&self, index: usize) -> &ShellConfig {
        &self.shells[index]
    }

    pub fn n_sats(&self) -> usize {
        self.shells.iter().map(|s| s.n_sats()).sum()
    }

    pub fn ids(&self) -> impl Iterator<Item = SatelliteId> + '_ {
        self.shells.iter().enumerate().flat_map(|(si, s)| {
            (0..s.n_planes).flat_map(move |plane| {
                (0..s.sats_per_plane).map(move |slot| SatelliteId {
                    shell: si,
                    plane,
                    slot,
                })
            })
        })
    }

    /// Flat node index, bijective with SatelliteId.
    pub fn flat_index(&self, id: SatelliteId) -> usize {
        let mut base = 0;
        for s in &self.shells[..id.shell] {
            base += s.n_sats();
        }
        base + id.plane * self.shells[id.shell].sats_per_plane + id.slot
    }

    /// RAAN of a plane, in [0, 2*pi).
    pub fn raan(&self, shell: usize, plane: usize) -> f64 {
        let cfg = &self.shells[shell];
        wrap_angle(plane as f64 * cfg.raan_step())
    }

    /// In-plane anomaly of a slot at t = 0, in [0, 2*pi).
    pub fn initial_anomaly(&self, id: SatelliteId) -> f64 {
        let cfg = &self.shells[id.shell];
        let spacing = 2.0 * PI / cfg.sats_per_plane as f64;
        wrap_angle(id.slot as f64 * spacing + cfg.inter_plane_phasing * spacing * id.plane as f64)
    }

    fn check_id(&self, id: SatelliteId) -> Result<&ShellConfig> {
        let cfg = self.shells.get(id.shell).ok_or(Error::UnknownSatellite {
            shell: id.shell,
            plane: id.plane,
            slot: id.slot,
        })?;
        if id.plane >= cfg.n_planes || id.slot >= cfg.sats_per_plane {
            return Err(Error::UnknownSatellite {
                shell: id.shell,
                plane: id.plane,
                slot: id.slot,
            });
        }
        Ok(cfg)
    }

    /// Earth-fixed state of one satellite at time t.
    pub fn propagate(&self, id: SatelliteId, t: f64) -> Result<SatelliteState> {
        let cfg = self.check_id(id)?;
        let h = cfg.plane_altitude_m(id.plane);
        let r = self.constants.earth_radius_m + h;
        let v = orbital_velocity(&self.constants, h)?;
        let period = orbital_period(&self.constants, h)?;
        let anomaly = self.initial_anomaly(id) + 2.0 * PI * t / period;
        let raan = self.raan(id.shell, id.plane);
        let inc = cfg.inclination_rad;

        let (sin_u, cos_u) = anomaly.sin_cos();
        let pos_plane = [r * cos_u, r * sin_u, 0.0];
        let vel_plane = [-v * sin_u, v * cos_u, 0.0];

        let rot = if self.earth_rotation {
            -self.constants.earth_rotation_rate() * t
        } else {
            0.0
        };

        Ok(SatelliteState {
            position_m: rot_z(rot, rot_z(raan, rot_x(inc, pos_plane))),
            velocity_mps: rot_z(rot, rot_z(raan, rot_x(inc, vel_plane))),
            epoch_s: t,
        })
    }

    /// States for every satellite at time t, in flat-index order.
    pub fn propagate_all(&self, t: f64) -> Vec<SatelliteState> {
        self.ids()
            .map(|id| self.propagate(id, t).expect("ids() yields valid ids"))
            .collect()
    }
}

pub fn wrap_angle(a: f64) -> f64 {
    let two_pi = 2.0 * PI;
    let mut x = a % two_pi;
    if x < 0.0 {
        x += two_pi;
    }
    x
}

fn rot_x(angle: f64, p: [f64; 3]) -> [f64; 3] {
    let (s, c) = angle.sin_cos();
    [p[0], p[1] * c - p[2] * s, p[1] * s + p[2] * c]
}

fn rot_z(angle: f64, p: [f64; 3]) -> [f64; 3] {
    let (s, c) = angle.sin_cos();
    [p[0] * c - p[1] * s, p[0] * s + p[1] * c, p[2]]
}
