//! Named presets: commercial constellation shells, GSL/ISL radio
//! parameter bundles, and a 23-site polar-heavy ground segment.

use crate::constants::PhysicalConstants;
use crate::coverage::GroundSite;
use crate::error::{Error, Result};
use crate::link::{AntennaSpec, LinkParams};
use crate::orbits::{Constellation, ShellConfig, WalkerGeometry};

pub const CONSTELLATION_NAMES: &[&str] = &["kepler", "oneweb", "starlink550"];
pub const LINK_NAMES: &[&str] = &["gsl", "isl"];

/// Shell parameters for a named commercial constellation.
pub fn shell_config(name: &str) -> Result<ShellConfig> {
    let (geometry, n_planes, sats_per_plane, altitude_km, inclination_deg) = match name {
        "kepler" => (WalkerGeometry::Star, 7, 20, 575.0, 98.6),
        "oneweb" => (WalkerGeometry::Star, 18, 36, 1200.0, 86.4),
        "starlink550" => (WalkerGeometry::Delta, 72, 22, 550.0, 53.0),
        other => {
            return Err(Error::Config(format!(
                "unknown constellation preset '{other}' (known: {})",
                CONSTELLATION_NAMES.join(", ")
            )))
        }
    };
    Ok(ShellConfig {
        geometry,
        n_planes,
        sats_per_plane,
        altitude_m: altitude_km * 1e3,
        inclination_rad: (inclination_deg as f64).to_radians(),
        inter_plane_phasing: 0.0,
        per_plane_altitude_offset_m: vec![],
    })
}

pub fn constellation(name: &str, constants: PhysicalConstants) -> Result<Constellation> {
    Constellation::build(vec![shell_config(name)?], constants)
}

/// Radio parameter bundle for "gsl" (satellite to ground) or "isl".
pub fn link_params(name: &str) -> Result<LinkParams> {
    match name {
        "gsl" => Ok(LinkParams {
            carrier_hz: 20e9,
            bandwidth_hz: 500e6,
            tx_power_w: 10.0,
            noise_temperature_k: 150.0,
            noise_figure_db: 1.2,
            tx_antenna: AntennaSpec::Parabolic {
                diameter_m: 0.26,
                efficiency: 0.55,
            },
            rx_antenna: AntennaSpec::Parabolic {
                diameter_m: 0.33,
                efficiency: 0.55,
            },
            pointing_loss_db: 0.3,
        }),
        "isl" => Ok(LinkParams {
            carrier_hz: 26e9,
            bandwidth_hz: 500e6,
            tx_power_w: 10.0,
            noise_temperature_k: 290.0,
            noise_figure_db: 2.0,
            tx_antenna: AntennaSpec::Parabolic {
                diameter_m: 0.26,
                efficiency: 0.55,
            },
            rx_antenna: AntennaSpec::Parabolic {
                diameter_m: 0.26,
                efficiency: 0.55,
            },
            pointing_loss_db: 0.3,
        }),
        other => Err(Error::Config(format!(
            "unknown link preset '{other}' (known: {})",
            LINK_NAMES.join(", ")
        ))),
    }
}

/// 23 ground stations at locations resembling a commercial polar-capable
/// ground segment. Coordinates are approximate and editable via scenario
/// files.
pub fn ground_segment() -> Vec<GroundSite> {
    [
        ("svalbard", 78.23, 15.39),
        ("troll", -72.01, 2.53),
        ("inuvik", 68.36, -133.72),
        ("tromso", 69.65, 18.96),
        ("fairbanks", 64.84, -147.72),
        ("grimstad", 58.34, 8.59),
        ("dublin", 53.35, -6.26),
        ("puertollano", 38.69, -4.11),
        ("athens", 37.98, 23.73),
        ("azores", 37.74, -25.67),
        ("tokyo", 35.68, 139.69),
        ("seoul", 37.57, 126.98),
        ("long-beach", 33.77, -118.19),
        ("dubai", 25.20, 55.27),
        ("hawaii", 19.82, -155.47),
        ("bangalore", 12.97, 77.59),
        ("singapore", 1.35, 103.82),
        ("nairobi", -1.29, 36.82),
        ("mauritius", -20.35, 57.55),
        ("hartebeesthoek", -25.89, 27.69),
        ("santiago", -33.45, -70.67),
        ("awarua", -46.53, 168.38),
        ("punta-arenas", -53.16, -70.91),
    ]
    .iter()
    .map(|&(id, lat, lon)| GroundSite::new(id, lat, lon))
    .collect()
}
