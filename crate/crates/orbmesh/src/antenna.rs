//! Planar-array beam models: digital steering vectors, Butler-matrix
//! fixed beams, and gain evaluation toward arbitrary directions.
//!
//! The array is a K x K grid with azimuth-axis elements along the
//! along-track direction and polar-axis elements along the radial
//! direction; the boresight is the pitch axis (the orbit normal).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::orbits::{cross, dot, norm, sub, SatelliteState};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayGeometry {
    /// Elements per axis (K); the combined array has K^2 elements.
    pub elements_per_axis: usize,
    /// Element spacing in meters.
    pub spacing_m: f64,
    /// Carrier wavelength in meters.
    pub wavelength_m: f64,
}

impl ArrayGeometry {
    /// Half-wavelength spaced array for the given carrier.
    pub fn half_wavelength(elements_per_axis: usize, carrier_hz: f64, c: f64) -> Self {
        let wavelength = c / carrier_hz;
        Self {
            elements_per_axis,
            spacing_m: wavelength / 2.0,
            wavelength_m: wavelength,
        }
    }

    pub fn n_elements(&self) -> usize {
        self.elements_per_axis * self.elements_per_axis
    }
}

/// Pointing direction in the antenna's local frame.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Direction {
    pub azimuth_rad: f64,
    pub polar_rad: f64,
}

pub type SteeringVector = Vec<Complex64>;

fn phase_ramp(geom: &ArrayGeometry, trig: f64, prefactor: f64) -> SteeringVector {
    let k = geom.elements_per_axis;
    let step = -2.0 * PI * geom.spacing_m * trig / geom.wavelength_m;
    (0..k)
        .map(|m| Complex64::from_polar(prefactor, step * m as f64))
        .collect()
}

/// Per-axis steering vector for the azimuth angle: element m is
/// exp(-j*2*pi*d_e*m*sin(phi)/lambda).
pub fn steering_azimuth(geom: &ArrayGeometry, azimuth_rad: f64) -> SteeringVector {
    phase_ramp(geom, azimuth_rad.sin(), 1.0)
}

/// Per-axis steering vector for the polar angle, with cos(theta) in place
/// of sin(phi).
pub fn steering_polar(geom: &ArrayGeometry, polar_rad: f64) -> SteeringVector {
    phase_ramp(geom, polar_rad.cos(), 1.0)
}

/// Kronecker product a (x) b.
pub fn kron(a: &[Complex64], b: &[Complex64]) -> SteeringVector {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y);
        }
    }
    out
}

/// Combined (unnormalized) steering vector toward a direction.
pub fn steering_combined(geom: &ArrayGeometry, dir: &Direction) -> SteeringVector {
    kron(
        &steering_polar(geom, dir.polar_rad),
        &steering_azimuth(geom, dir.azimuth_rad),
    )
}

/// Azimuth steering vector of the k-th Butler beam, k in 1..=K.
pub fn butler_azimuth(geom: &ArrayGeometry, beam: usize) -> SteeringVector {
    let k = geom.elements_per_axis;
    let prefactor = 1.0 / (k as f64).sqrt();
    let step = -PI * (2.0 * beam as f64 - 1.0) / k as f64;
    (0..k)
        .map(|m| Complex64::from_polar(prefactor, step * m as f64))
        .collect()
}

/// Polar steering vector of a Butler matrix, fixed to direction theta.
pub fn butler_polar(geom: &ArrayGeometry, fixed_polar_rad: f64) -> SteeringVector {
    let prefactor = 1.0 / (geom.elements_per_axis as f64).sqrt();
    phase_ramp(geom, fixed_polar_rad.cos(), prefactor)
}

/// The K combined unit-norm Butler beams b_k = b_pol (x) b_{k,az}.
pub fn butler_beams(geom: &ArrayGeometry, fixed_polar_rad: f64) -> Vec<SteeringVector> {
    let pol = butler_polar(geom, fixed_polar_rad);
    (1..=geom.elements_per_axis)
        .map(|k| kron(&pol, &butler_azimuth(geom, k)))
        .collect()
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Array gain of a weight vector toward a target direction, with
/// isotropic elements: |a(target)^H w|^2 / (w^H w).
///
/// A matched beam reaches K^2; the gain is invariant under global phase
/// and positive scaling of the weights.
pub fn array_gain(weights: &[Complex64], geom: &ArrayGeometry, target: &Direction) -> Result<f64> {
    if weights.len() != geom.n_elements() {
        return Err(Error::DimensionMismatch {
            expected: geom.n_elements(),
            got: weights.len(),
        });
    }
    let a = steering_combined(geom, target);
    let num = inner(&a, weights).norm_sqr();
    let den = weights.iter().map(|w| w.norm_sqr()).sum::<f64>();
    Ok(num / den)
}

/// Index (1-based) and gain of the Butler beam with the highest gain
/// toward the target; ties break toward the lowest index.
pub fn best_butler_beam(
    geom: &ArrayGeometry,
    fixed_polar_rad: f64,
    target: &Direction,
) -> Result<(usize, f64)> {
    let mut best = (0usize, f64::NEG_INFINITY);
    for (i, beam) in butler_beams(geom, fixed_polar_rad).iter().enumerate() {
        let g = array_gain(beam, geom, target)?;
        if g > best.1 {
            best = (i + 1, g);
        }
    }
    Ok(best)
}

/// Gain of a matched beam computed for `steered` when the link direction
/// has drifted to `actual`. Equals K^2 when the directions coincide.
///
/// Uses the separable structure of the Kronecker product, so it avoids
/// materializing the K^2 vectors.
pub fn repointing_gain(geom: &ArrayGeometry, actual: &Direction, steered: &Direction) -> f64 {
    let k = geom.elements_per_axis;
    let az = inner(
        &steering_azimuth(geom, actual.azimuth_rad),
        &steering_azimuth(geom, steered.azimuth_rad),
    )
    .norm_sqr();
    let pol = inner(
        &steering_polar(geom, actual.polar_rad),
        &steering_polar(geom, steered.polar_rad),
    )
    .norm_sqr();
    az * pol / (k * k) as f64
}

/// Maps an Earth-fixed target position into the satellite's local antenna
/// frame: along-track is the azimuth axis, radial the polar axis, and the
/// pitch axis (orbit normal) the boresight.
pub fn local_direction(state: &SatelliteState, target_m: [f64; 3]) -> Direction {
    let r = norm(state.position_m);
    let e_radial = [
        state.position_m[0] / r,
        state.position_m[1] / r,
        state.position_m[2] / r,
    ];
    let v = norm(state.velocity_mps);
    let e_track = [
        state.velocity_mps[0] / v,
        state.velocity_mps[1] / v,
        state.velocity_mps[2] / v,
    ];
    let _e_pitch = cross(e_radial, e_track);
    let rel = sub(target_m, state.position_m);
    let d = norm(rel);
    let dir = [rel[0] / d, rel[1] / d, rel[2] / d];
    Direction {
        azimuth_rad: dot(dir, e_track).clamp(-1.0, 1.0).asin(),
        polar_rad: dot(dir, e_radial).clamp(-1.0, 1.0).acos(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn geom(k: usize) -> ArrayGeometry {
        ArrayGeometry::half_wavelength(k, 26e9, 299_792_458.0)
    }

    fn broadside() -> Direction {
        Direction {
            azimuth_rad: 0.0,
            polar_rad: PI / 2.0,
        }
    }

    #[test]
    fn steering_azimuth_zero_is_all_ones() {
        let a = steering_azimuth(&geom(4), 0.0);
        for x in &a {
            assert_relative_eq!(x.re, 1.0, epsilon = 1e-12);
            assert!(x.im.abs() < 1e-12);
        }
    }

    #[test]
    fn steering_entries_have_unit_modulus() {
        let g = geom(8);
        for angle in [-1.2, -0.3, 0.0, 0.7, 1.5] {
            for x in steering_azimuth(&g, angle).iter().chain(steering_polar(&g, angle).iter()) {
                assert_relative_eq!(x.norm(), 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn steering_two_element_endfire() {
        let g = geom(2);
        let az = steering_azimuth(&g, PI / 2.0);
        assert_relative_eq!(az[1].re, -1.0, epsilon = 1e-9);
        assert!(az[1].im.abs() < 1e-9);
        let pol = steering_polar(&g, 0.0);
        assert_relative_eq!(pol[1].re, -1.0, epsilon = 1e-9);
    }

    #[test]
    fn steering_polar_broadside_all_ones() {
        let pol = steering_polar(&geom(4), PI / 2.0);
        for x in &pol {
            assert_relative_eq!(x.re, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn butler_axis_vectors_unit_norm() {
        let g = geom(4);
        for k in 1..=4 {
            let b = butler_azimuth(&g, k);
            let n: f64 = b.iter().map(|x| x.norm_sqr()).sum();
            assert_relative_eq!(n, 1.0, epsilon = 1e-12);
        }
        let pol = butler_polar(&g, PI / 2.0);
        let n: f64 = pol.iter().map(|x| x.norm_sqr()).sum();
        assert_relative_eq!(n, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn butler_azimuth_beams_orthogonal() {
        for k in [2usize, 4, 8, 16] {
            let g = geom(k);
            for a in 1..=k {
                for b in (a + 1)..=k {
                    let ip = inner(&butler_azimuth(&g, a), &butler_azimuth(&g, b)).norm();
                    assert!(ip < 1e-10, "K={k}: beams {a},{b} inner product {ip}");
                }
            }
        }
    }

    #[test]
    fn butler_k4_has_four_distinct_lobes() {
        let g = geom(4);
        let beams = butler_beams(&g, PI / 2.0);
        assert_eq!(beams.len(), 4);
        let mut peaks = Vec::new();
        for beam in &beams {
            let mut best = (0.0f64, f64::NEG_INFINITY);
            let mut az = -PI / 2.0;
            while az <= PI / 2.0 {
                let gain = array_gain(beam, &g, &Direction { azimuth_rad: az, polar_rad: PI / 2.0 })
                    .unwrap();
                if gain > best.1 {
                    best = (az, gain);
                }
                az += 0.002;
            }
            peaks.push(best.0);
        }
        // four distinct main-lobe azimuths
        let mut sorted = peaks.clone();
        sorted.sort_by(f64::total_cmp);
        for w in sorted.windows(2) {
            assert!(w[1] - w[0] > 0.1, "lobes too close: {sorted:?}");
        }
    }

    #[test]
    fn matched_beam_reaches_k_squared() {
        for k in [1usize, 4, 8] {
            let g = geom(k);
            let target = Direction { azimuth_rad: 0.35, polar_rad: 1.1 };
            let w: Vec<Complex64> = steering_combined(&g, &target)
                .iter()
                .map(|x| x / k as f64)
                .collect();
            let gain = array_gain(&w, &g, &target).unwrap();
            assert_relative_eq!(gain, (k * k) as f64, max_relative = 1e-9);
        }
    }

    #[test]
    fn single_element_is_isotropic() {
        let g = geom(1);
        let w = vec![Complex64::new(1.0, 0.0)];
        for az in [-1.0, 0.0, 0.8] {
            for pol in [0.3, PI / 2.0, 2.2] {
                let gain = array_gain(&w, &g, &Direction { azimuth_rad: az, polar_rad: pol }).unwrap();
                assert_relative_eq!(gain, 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn gain_invariant_under_global_phase_and_scale() {
        let g = geom(4);
        let w = steering_combined(&g, &Direction { azimuth_rad: 0.2, polar_rad: 1.3 });
        let target = Direction { azimuth_rad: -0.4, polar_rad: 1.0 };
        let base = array_gain(&w, &g, &target).unwrap();
        let rotated: Vec<Complex64> = w
            .iter()
            .map(|x| x * Complex64::from_polar(3.7, 1.234))
            .collect();
        assert_relative_eq!(array_gain(&rotated, &g, &target).unwrap(), base, max_relative = 1e-9);
    }

    fn sphere_average_gain(weights: &[Complex64], g: &ArrayGeometry, samples: usize) -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut acc = 0.0;
        for _ in 0..samples {
            // Uniform sphere sample in the direction cosines (sin az, cos pol)
            // the separable array factor depends on. Under this measure the
            // half-wavelength steering vectors are orthonormal in expectation,
            // so a lossless unit-norm beam must average to exactly 1.
            let s: f64 = rng.gen_range(-1.0..1.0);
            let u: f64 = rng.gen_range(-1.0..1.0);
            let dir = Direction {
                azimuth_rad: s.asin(),
                polar_rad: u.acos(),
            };
            acc += array_gain(weights, g, &dir).unwrap();
        }
        acc / samples as f64
    }

    #[test]
    fn sphere_average_of_matched_beam_is_unity() {
        let g = geom(4);
        let target = broadside();
        let w: Vec<Complex64> = steering_combined(&g, &target)
            .iter()
            .map(|x| x / 4.0)
            .collect();
        let avg = sphere_average_gain(&w, &g, 200_000);
        assert!((avg - 1.0).abs() < 0.05, "sphere average {avg}");
    }

    #[test]
    fn best_beam_peaks_and_dominates() {
        let g = geom(4);
        let theta = PI / 2.0;
        let beams = butler_beams(&g, theta);
        // at each beam's own peak the argmax returns that beam
        for (i, beam) in beams.iter().enumerate() {
            let mut peak = (broadside(), f64::NEG_INFINITY);
            let mut az = -PI / 2.0;
            while az <= PI / 2.0 {
                let d = Direction { azimuth_rad: az, polar_rad: theta };
                let gain = array_gain(beam, &g, &d).unwrap();
                if gain > peak.1 {
                    peak = (d, gain);
                }
                az += 0.002;
            }
            let (k, _) = best_butler_beam(&g, theta, &peak.0).unwrap();
            assert_eq!(k, i + 1);
        }
        // definition check on random targets
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let d = Direction {
                azimuth_rad: rng.gen_range(-1.5..1.5),
                polar_rad: rng.gen_range(0.3..2.8),
            };
            let (k, gain) = best_butler_beam(&g, theta, &d).unwrap();
            for (i, beam) in beams.iter().enumerate() {
                let other = array_gain(beam, &g, &d).unwrap();
                assert!(other <= gain + 1e-12, "beam {} beats chosen {k}", i + 1);
            }
        }
    }

    #[test]
    fn beam_selection_partitions_azimuth_sweep() {
        let g = geom(4);
        let theta = PI / 2.0;
        let step = 0.1f64.to_radians();
        let mut segments = Vec::new();
        let mut az = -PI / 2.0;
        let mut prev_k = 0usize;
        while az <= PI / 2.0 {
            let (k, _) = best_butler_beam(&g, theta, &Direction { azimuth_rad: az, polar_rad: theta })
                .unwrap();
            if k != prev_k {
                segments.push(k);
                prev_k = k;
            }
            az += step;
        }
        // K selection intervals, circular in sin-azimuth: the outermost beams
        // peak near |sin az| = 3/4 and wrap around the +/-90 deg edges, so the
        // first and last runs of the sweep belong to the same beam.
        if segments.len() > 1 && segments.first() == segments.last() {
            segments.pop();
        }
        assert_eq!(segments.len(), 4, "segments: {segments:?}");
        let mut sorted = segments.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 3, 4], "each beam owns one interval");
    }

    #[test]
    fn repointing_gain_bounds() {
        let g = geom(8);
        let d0 = Direction { azimuth_rad: 0.1, polar_rad: 1.4 };
        assert_relative_eq!(repointing_gain(&g, &d0, &d0), 64.0, max_relative = 1e-9);
        for drift in [0.001, 0.01, 0.05, 0.2] {
            let d = Direction {
                azimuth_rad: d0.azimuth_rad + drift,
                polar_rad: d0.polar_rad - drift,
            };
            let gain = repointing_gain(&g, &d, &d0);
            assert!(gain <= 64.0 + 1e-9);
            // agrees with the full array-factor evaluation
            let k = g.elements_per_axis as f64;
            let w: Vec<Complex64> = steering_combined(&g, &d0).iter().map(|x| x / k).collect();
            let full = array_gain(&w, &g, &d).unwrap();
            assert_relative_eq!(gain, full, max_relative = 1e-9);
        }
    }

    #[test]
    fn local_direction_radial_target_is_polar_zero() {
        let state = SatelliteState {
            position_m: [7e6, 0.0, 0.0],
            velocity_mps: [0.0, 7.5e3, 0.0],
            epoch_s: 0.0,
        };
        let d = local_direction(&state, [8e6, 0.0, 0.0]);
        assert_relative_eq!(d.polar_rad, 0.0, epsilon = 1e-9);
        assert_relative_eq!(d.azimuth_rad, 0.0, epsilon = 1e-9);
        // along-track target: azimuth pi/2, polar pi/2
        let d2 = local_direction(&state, [7e6, 1e6, 0.0]);
        assert_relative_eq!(d2.azimuth_rad, PI / 2.0, epsilon = 1e-9);
        assert_relative_eq!(d2.polar_rad, PI / 2.0, epsilon = 1e-9);
    }
}

