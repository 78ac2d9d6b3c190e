//! Randomized property tests for geometric and radiometric invariants.

use proptest::prelude::*;

use orbmesh::antenna::{array_gain, butler_beams, ArrayGeometry, Direction};
use orbmesh::coverage::{central_angle, slant_range};
use orbmesh::link::{free_space_path_loss, noise_power, shannon_rate, RateSet};
use orbmesh::orbits::{
    orbital_period, orbital_velocity, spherical_distance, wrap_angle, Constellation, ShellConfig,
    WalkerGeometry,
};
use orbmesh::presets;
use orbmesh::PhysicalConstants;

fn consts() -> PhysicalConstants {
    PhysicalConstants::spherical()
}

proptest! {
    /// Free-space loss grows strictly with both distance and frequency.
    #[test]
    fn fspl_monotone(
        d in 1e3..1e8f64,
        f in 1e9..100e9f64,
        scale in 1.01..10.0f64,
    ) {
        let c = consts();
        let base = free_space_path_loss(&c, d, f).unwrap();
        prop_assert!(base > 0.0);
        prop_assert!(free_space_path_loss(&c, d * scale, f).unwrap() > base);
        prop_assert!(free_space_path_loss(&c, d, f * scale).unwrap() > base);
    }

    /// Doubling the distance always costs exactly 4x in linear loss.
    #[test]
    fn fspl_inverse_square(d in 1e3..1e7f64, f in 1e9..60e9f64) {
        let c = consts();
        let l1 = free_space_path_loss(&c, d, f).unwrap();
        let l2 = free_space_path_loss(&c, 2.0 * d, f).unwrap();
        prop_assert!((l2 / l1 - 4.0).abs() < 1e-9);
    }

    /// Thermal noise scales linearly with bandwidth, and a noise figure
    /// can only add noise.
    #[test]
    fn noise_power_scaling(
        bw in 1e6..1e9f64,
        temp in 50.0..1000.0f64,
        nf in 0.0..10.0f64,
    ) {
        let base = noise_power(bw, temp, 0.0);
        prop_assert!((noise_power(2.0 * bw, temp, 0.0) / base - 2.0).abs() < 1e-9);
        prop_assert!(noise_power(bw, temp, nf) >= base * (1.0 - 1e-12));
    }

    /// A discrete modulation ladder never claims more than Shannon allows.
    #[test]
    fn discrete_rate_below_shannon(snr in 1e-3..1e4f64) {
        let params = presets::link_params("isl").unwrap();
        let shannon = shannon_rate(&params, snr, &RateSet::Continuous);
        let tiers = RateSet::Discrete(vec![1e6, 1e7, 1e8, 1e9, 1e10]);
        let picked = shannon_rate(&params, snr, &tiers);
        prop_assert!(picked <= shannon);
    }

    /// Slant range shrinks toward the altitude as elevation rises, and the
    /// coverage half-angle shrinks with it.
    #[test]
    fn geometry_monotone_in_elevation(
        h in 300e3..2000e3f64,
        e1 in 0.0..1.2f64,
        de in 0.01..0.3f64,
    ) {
        let c = consts();
        let low = slant_range(&c, h, e1).unwrap();
        let high = slant_range(&c, h, e1 + de).unwrap();
        prop_assert!(high < low);
        prop_assert!(high >= h * (1.0 - 1e-12));
        let a_low = central_angle(&c, h, e1).unwrap();
        let a_high = central_angle(&c, h, e1 + de).unwrap();
        prop_assert!(a_high < a_low);
        prop_assert!(a_low > 0.0 && a_low < std::f64::consts::FRAC_PI_2);
    }

    /// Chord separation on a shared sphere is symmetric, bounded by the
    /// diameter, and zero for coincident points.
    #[test]
    fn spherical_distance_properties(
        h in 300e3..2000e3f64,
        p1 in 0.01..3.13f64,
        p2 in 0.01..3.13f64,
        a1 in -3.1..3.1f64,
        a2 in -3.1..3.1f64,
    ) {
        let c = consts();
        let r = c.earth_radius_m + h;
        let d12 = spherical_distance(&c, p1, p2, a1, a2, h);
        let d21 = spherical_distance(&c, p2, p1, a2, a1, h);
        prop_assert!((d12 - d21).abs() < 1e-6);
        prop_assert!(d12 >= 0.0);
        prop_assert!(d12 <= 2.0 * r * (1.0 + 1e-12));
        // Cancellation in 1 - cos^2 - sin^2 leaves an error of order
        // r * sqrt(eps), i.e. well under a metre.
        let d_self = spherical_distance(&c, p1, p1, a1, a1, h);
        prop_assert!(d_self.abs() < 1.0);
    }

    /// Circular-orbit kinematics: speed times period is one circumference.
    #[test]
    fn orbit_speed_period_consistent(h in 200e3..5000e3f64) {
        let c = consts();
        let v = orbital_velocity(&c, h).unwrap();
        let t = orbital_period(&c, h).unwrap();
        let circumference = 2.0 * std::f64::consts::PI * (c.earth_radius_m + h);
        prop_assert!((v * t / circumference - 1.0).abs() < 1e-9);
    }

    /// Propagated satellites stay on their shell's sphere at any time.
    #[test]
    fn propagation_preserves_radius(
        t in 0.0..20000.0f64,
        n_planes in 2usize..6,
        sats in 4usize..10,
    ) {
        let c = consts();
        let shell = ShellConfig {
            geometry: WalkerGeometry::Star,
            n_planes,
            sats_per_plane: sats,
            altitude_m: 700e3,
            inclination_rad: 1.4,
            inter_plane_phasing: 0.0,
            per_plane_altitude_offset_m: vec![],
        };
        let con = Constellation::build(vec![shell], c).unwrap();
        let expected = c.earth_radius_m + 700e3;
        for state in con.propagate_all(t) {
            prop_assert!((state.radius_m() / expected - 1.0).abs() < 1e-9);
        }
    }

    /// Angle wrapping lands in [0, 2*pi) and never moves by a fraction of
    /// a turn.
    #[test]
    fn wrap_angle_range(a in -1e3..1e3f64) {
        let w = wrap_angle(a);
        prop_assert!(w >= 0.0);
        prop_assert!(w < 2.0 * std::f64::consts::PI);
        let turns = (a - w) / (2.0 * std::f64::consts::PI);
        prop_assert!((turns - turns.round()).abs() < 1e-6);
    }

    /// Every Butler beam realizes the full array gain at its own steering
    /// direction, and gain never exceeds the element count squared.
    #[test]
    fn butler_beam_peaks(k_pow in 1u32..4, az in -1.2..1.2f64) {
        let c = consts();
        let k = 1usize << k_pow;
        let geom = ArrayGeometry::half_wavelength(k, 26e9, c.c);
        let n = (k * k) as f64;
        let beams = butler_beams(&geom, std::f64::consts::FRAC_PI_2);
        let dir = Direction { azimuth_rad: az, polar_rad: std::f64::consts::FRAC_PI_2 };
        for w in &beams {
            let g = array_gain(w, &geom, &dir).unwrap();
            prop_assert!(g <= n * (1.0 + 1e-9));
        }
    }
}
