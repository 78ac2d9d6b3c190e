//! Physical constants used throughout the toolkit.
//!
//! Constants are injectable: the spherical-Earth set is the default for
//! link and coverage geometry, while the WGS-84 equatorial radius is
//! available for reproducing published recursive-orbit altitudes.

use serde::{Deserialize, Serialize};

/// Boltzmann constant (J/K).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// Reference noise temperature for noise-figure conversion (K).
pub const T0_K: f64 = 290.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    /// Gravitational parameter G*M_E (m^3/s^2).
    pub gm: f64,
    /// Earth radius (m).
    pub earth_radius_m: f64,
    /// Equinoctial day (s).
    pub equinoctial_day_s: f64,
    /// Speed of light (m/s).
    pub c: f64,
}

impl PhysicalConstants {
    /// Spherical-Earth model, the default for link and coverage geometry.
    pub fn spherical() -> Self {
        Self {
            gm: 3.986004418e14,
            earth_radius_m: 6_371_000.0,
            equinoctial_day_s: 86_164.0,
            c: 299_792_458.0,
        }
    }

    /// WGS-84 equatorial radius; reproduces the 554 km / 1248 km
    /// recursive-orbit altitudes.
    pub fn wgs_equatorial() -> Self {
        Self {
            earth_radius_m: 6_378_137.0,
            ..Self::spherical()
        }
    }

    /// Earth rotation rate 2*pi/T_E (rad/s).
    pub fn earth_rotation_rate(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.equinoctial_day_s
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::spherical()
    }
}
