//! Experiment catalog: each experiment turns a resolved scenario into
//! plot-ready CSV tables plus a machine-readable summary fragment.

use std::f64::consts::FRAC_PI_2;

use serde_json::{json, Value};

use orbmesh::antenna::{array_gain, butler_beams, ArrayGeometry, Direction};
use orbmesh::coverage::{
    self, AvailabilityProfile, AvailabilitySampling, CoverageSpec, GroundSite,
};
use orbmesh::link::{self, noise_power, parabolic_gain};
use orbmesh::matching::{
    feasible_edges, greedy_match, median, rate_cdf, run_establishment_schedule, CandidatePolicy,
    InterferenceModel, Matching, ScheduleConfig,
};
use orbmesh::orbits::{orbital_period, Constellation, SatelliteId};
use orbmesh::routing::{
    all_pairs_routes, build_routing_graph, max_load_per_gs, simulate_packets, RoutingMetric,
};

use crate::scenario::{CliError, CliResult, Resolved};

pub struct ExperimentOutput {
    /// (file name, file content) pairs; file names follow
    /// `<experiment>.<table>.csv`.
    pub tables: Vec<(String, String)>,
    pub summary: Value,
}

fn runtime(e: impl std::fmt::Display) -> CliError {
    CliError::Runtime(e.to_string())
}

/// Fixed 9 significant digits, the workspace-wide CSV float format.
fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

fn db(x: f64) -> f64 {
    10.0 * x.log10()
}

pub fn run_experiment(r: &mut Resolved, experiment: &str) -> CliResult<ExperimentOutput> {
    match experiment {
        "table2-regression" => table2_regression(r),
        "pass-profile" => pass_profile(r),
        "availability" => availability(r),
        "isl-rate-cdf" => isl_rate_cdf(r),
        "beam-pattern" => beam_pattern(r),
        "reestablishment-sweep" => reestablishment_sweep(r),
        "routing-latency" => routing_latency(r),
        "max-load" => max_load(r),
        "connectivity-check" => connectivity_check(r),
        other => Err(CliError::Validation(format!(
            "experiment: unknown id '{other}'; catalog: {}",
            crate::scenario::EXPERIMENTS.join(", ")
        ))),
    }
}

fn table2_regression(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let c = r.constants;
    let rows = [
        ("gsl_tx_gain_dbi", db(parabolic_gain(&c, 0.26, 20e9, 0.55)), 32.13),
        ("gsl_rx_gain_dbi", db(parabolic_gain(&c, 0.33, 20e9, 0.55)), 34.20),
        ("isl_tx_gain_dbi", db(parabolic_gain(&c, 0.26, 26e9, 0.55)), 34.41),
        ("isl_rx_gain_dbi", db(parabolic_gain(&c, 0.26, 26e9, 0.55)), 34.41),
        ("gsl_noise_power_dbw", db(noise_power(500e6, 150.0, 1.2)), -117.77),
        ("isl_noise_power_dbw", db(noise_power(500e6, 290.0, 2.0)), -114.99),
    ];
    let mut csv = String::from("quantity,value_db,expected_db,within_0_05_db\n");
    let mut all_ok = true;
    for (name, value, expected) in rows {
        let ok = (value - expected).abs() <= 0.05;
        all_ok &= ok;
        csv.push_str(&format!("{name},{},{},{}\n", sig9(value), sig9(expected), ok));
    }
    Ok(ExperimentOutput {
        tables: vec![("table2-regression.values.csv".into(), csv)],
        summary: json!({ "all_within_0_05_db": all_ok }),
    })
}

fn pass_profile(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    // Reference pass: Earth rotation off and the site placed on the ground
    // track, so the pass is symmetric and reaches zenith.
    let con = r.constellation()?.with_earth_rotation(false);
    let params = r.gsl_params()?;
    let spec = r.coverage_spec();
    let dt = r.sampling_time_step_s(1.0);
    let sat = SatelliteId { shell: 0, plane: 0, slot: 0 };
    let period = orbital_period(&con.constants().clone(), con.shell(0).altitude_m)
        .map_err(runtime)?;
    let overhead = con.propagate(sat, period / 4.0).map_err(runtime)?;
    let (lat_rad, lon_rad) = overhead.subsatellite_point();
    let site = GroundSite::new("track", lat_rad.to_degrees(), lon_rad.to_degrees());
    let samples =
        coverage::pass_rate_profile(&con, &site, sat, &params, &spec, dt, period).map_err(runtime)?;

    let mut csv = String::from("t_s,elevation_deg,distance_m,rate_bps\n");
    for s in &samples {
        csv.push_str(&format!(
            "{},{},{},{}\n",
            sig9(s.t_s),
            sig9(s.elevation_rad.to_degrees()),
            sig9(s.distance_m),
            sig9(s.rate_bps)
        ));
    }
    let duration = samples.last().map(|l| l.t_s - samples[0].t_s).unwrap_or(0.0);
    let peak_rate = samples.iter().map(|s| s.rate_bps).fold(0.0f64, f64::max);
    let max_elev = samples.iter().map(|s| s.elevation_rad).fold(0.0f64, f64::max);
    let bound = coverage::max_pass_duration(con.constants(), con.shell(0).altitude_m, spec.min_elevation_rad)
        .map_err(runtime)?;
    Ok(ExperimentOutput {
        tables: vec![("pass-profile.series.csv".into(), csv)],
        summary: json!({
            "n_samples": samples.len(),
            "pass_duration_s": duration,
            "max_pass_duration_bound_s": bound,
            "peak_rate_bps": peak_rate,
            "max_elevation_deg": max_elev.to_degrees(),
        }),
    })
}

/// Splits the latitude grid into contiguous chunks so the sweep can use
/// the thread budget; chunks are merged in grid order, so the result is
/// identical for any thread count.
fn availability_chunked(
    con: &Constellation,
    spec: &CoverageSpec,
    lats: &[f64],
    sampling: &AvailabilitySampling,
    threads: usize,
) -> Result<AvailabilityProfile, orbmesh::Error> {
    let threads = threads.clamp(1, lats.len().max(1));
    if threads == 1 {
        return coverage::availability_by_latitude(con, spec, lats, sampling);
    }
    let chunk = lats.len().div_ceil(threads);
    let parts: Vec<Result<AvailabilityProfile, orbmesh::Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = lats
            .chunks(chunk)
            .map(|part| s.spawn(move || coverage::availability_by_latitude(con, spec, part, sampling)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut profile = AvailabilityProfile {
        latitudes_rad: Vec::new(),
        availability: Vec::new(),
        mean_visible: Vec::new(),
    };
    for part in parts {
        let part = part?;
        profile.latitudes_rad.extend(part.latitudes_rad);
        profile.availability.extend(part.availability);
        profile.mean_visible.extend(part.mean_visible);
    }
    Ok(profile)
}

fn availability(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let con = r.constellation()?;
    let spec = r.coverage_spec();
    let step = r.sampling_lat_step_deg();
    if !(step > 0.0) {
        return Err(CliError::Validation("sampling.lat_step_deg: must be positive".into()));
    }
    let mut lats_deg = Vec::new();
    let mut lat = -85.0f64;
    while lat <= 85.0 + 1e-9 {
        lats_deg.push(lat);
        lat += step;
    }
    let lats: Vec<f64> = lats_deg.iter().map(|d| d.to_radians()).collect();
    let sampling = AvailabilitySampling {
        n_longitudes: r.sampling_n_longitudes(),
        time_step_s: r.sampling_time_step_s(10.0),
        horizon_s: r.sampling_horizon_s(),
    };
    let threads = r.threads;
    let profile = availability_chunked(&con, &spec, &lats, &sampling, threads).map_err(runtime)?;

    let mut csv = String::from("latitude_deg,availability,mean_visible\n");
    for i in 0..lats_deg.len() {
        csv.push_str(&format!(
            "{},{},{}\n",
            sig9(lats_deg[i]),
            sig9(profile.availability[i]),
            sig9(profile.mean_visible[i])
        ));
    }
    let min_avail = profile.availability.iter().copied().fold(f64::INFINITY, f64::min);
    let max_visible = profile.mean_visible.iter().copied().fold(0.0f64, f64::max);
    Ok(ExperimentOutput {
        tables: vec![("availability.profile.csv".into(), csv)],
        summary: json!({
            "n_latitudes": lats_deg.len(),
            "min_availability": min_avail,
            "max_mean_visible": max_visible,
        }),
    })
}

fn isl_rate_cdf(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let con = r.constellation()?;
    let params = r.isl_params()?;
    let mode = r.antenna_mode()?;
    let rates = r.rates()?;
    let period = orbital_period(con.constants(), con.shell(0).altitude_m).map_err(runtime)?;
    let horizon = r.matching_horizon_s(period.round());
    let step = r.matching_step_s(60.0);
    let delta_t = r.matching_delta_t_s(0.0);
    let mut cfg = ScheduleConfig::new(delta_t, horizon, step);
    cfg.budget = r.transceiver_budget();
    let result = run_establishment_schedule(&con, &params, &mode, &rates, &cfg).map_err(runtime)?;
    let cdf = rate_cdf(&result.rate_samples_bps).map_err(runtime)?;
    let med = median(&result.rate_samples_bps).map_err(runtime)?;

    let mut csv = String::from("rate_bps,cdf\n");
    for (rate, p) in &cdf {
        csv.push_str(&format!("{},{}\n", sig9(*rate), sig9(*p)));
    }
    Ok(ExperimentOutput {
        tables: vec![("isl-rate-cdf.cdf.csv".into(), csv)],
        summary: json!({
            "n_samples": result.rate_samples_bps.len(),
            "median_rate_bps": med,
            "mean_rate_bps": result.mean_rate_bps(),
        }),
    })
}

fn beam_pattern(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let params = r.isl_params()?;
    let k = match r.antenna_mode()? {
        orbmesh::matching::IslAntennaMode::Butler { elements_per_axis, .. }
        | orbmesh::matching::IslAntennaMode::Digital { elements_per_axis } => elements_per_axis,
        orbmesh::matching::IslAntennaMode::Parabolic => {
            return Err(CliError::Validation(
                "antenna.mode: beam-pattern needs an array mode (digital | butler)".into(),
            ))
        }
    };
    let geom = ArrayGeometry::half_wavelength(k, params.carrier_hz, r.constants.c);
    let beams = butler_beams(&geom, FRAC_PI_2);

    let mut header = String::from("azimuth_deg");
    for b in 1..=k {
        header.push_str(&format!(",beam_{b}_gain"));
    }
    header.push('\n');
    let mut csv = header;
    let mut peaks = vec![(0usize, f64::NEG_INFINITY, 0.0f64); k];
    let n_steps = 360;
    for i in 0..=n_steps {
        let az_deg = -90.0 + 180.0 * i as f64 / n_steps as f64;
        let dir = Direction { azimuth_rad: az_deg.to_radians(), polar_rad: FRAC_PI_2 };
        csv.push_str(&sig9(az_deg));
        for (b, w) in beams.iter().enumerate() {
            let g = array_gain(w, &geom, &dir).map_err(runtime)?;
            if g > peaks[b].1 {
                peaks[b] = (b + 1, g, az_deg);
            }
            csv.push(',');
            csv.push_str(&sig9(g));
        }
        csv.push('\n');
    }
    let peak_list: Vec<Value> = peaks
        .iter()
        .map(|&(b, g, az)| json!({ "beam": b, "peak_gain": g, "peak_azimuth_deg": az }))
        .collect();
    Ok(ExperimentOutput {
        tables: vec![("beam-pattern.gains.csv".into(), csv)],
        summary: json!({ "elements_per_axis": k, "beams": peak_list }),
    })
}

fn reestablishment_sweep(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let con = r.constellation()?;
    let params = r.isl_params()?;
    let mode = r.antenna_mode()?;
    let rates = r.rates()?;
    let horizon = r.matching_horizon_s(240.0);
    let step = r.matching_step_s(1.0);
    let budget = r.transceiver_budget();
    let delta_ts = r.matching_delta_t_list();

    let mut csv = String::from("delta_t_s,mean_rate_bps\n");
    let mut means = Vec::new();
    for &dt in &delta_ts {
        let mut cfg = ScheduleConfig::new(dt, horizon, step);
        cfg.budget = budget;
        let result = run_establishment_schedule(&con, &params, &mode, &rates, &cfg).map_err(runtime)?;
        let mean = result.mean_rate_bps();
        means.push(json!({ "delta_t_s": dt, "mean_rate_bps": mean }));
        csv.push_str(&format!("{},{}\n", sig9(dt), sig9(mean)));
    }
    Ok(ExperimentOutput {
        tables: vec![("reestablishment-sweep.rates.csv".into(), csv)],
        summary: json!({ "points": means }),
    })
}

struct RoutingSetup {
    graph: orbmesh::routing::RoutingGraph,
    metrics: Vec<(String, RoutingMetric)>,
    traffic: orbmesh::routing::TrafficConfig,
    n_sites: usize,
}

fn routing_setup(r: &mut Resolved) -> CliResult<RoutingSetup> {
    let con = r.constellation()?;
    let sites = r.ground_sites()?;
    let gsl = r.gsl_params()?;
    let isl = r.isl_params()?;
    let mode = r.antenna_mode()?;
    let rates = r.rates()?;
    let min_elev = r.routing_min_elevation_rad();
    let budget = r.transceiver_budget();
    let traffic = r.traffic()?;
    let queue = r.queue_model(&traffic, sites.len())?;
    let snap = feasible_edges(
        &con,
        0.0,
        &isl,
        &mode,
        &rates,
        CandidatePolicy::AdjacentPlanes,
        None,
    )
    .map_err(runtime)?;
    let matching = greedy_match(
        &snap,
        None,
        &Matching::empty(0.0),
        &budget,
        InterferenceModel::Orthogonal,
        None,
    )
    .map_err(runtime)?;
    let graph = build_routing_graph(&con, &sites, &matching, &gsl, &isl, min_elev, &rates, 0.0)
        .map_err(runtime)?;
    let metrics = vec![
        ("hop_count".to_string(), RoutingMetric::HopCount),
        ("path_loss".to_string(), RoutingMetric::PathLoss),
        (
            "latency".to_string(),
            RoutingMetric::Latency { mean_packet_bits: traffic.packet_bits, queue },
        ),
    ];
    Ok(RoutingSetup { graph, metrics, traffic, n_sites: sites.len() })
}

fn routing_latency(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let horizon = r.sim_horizon_s();
    let seed = r
        .seed
        .ok_or_else(|| CliError::Validation("seed: required for routing-latency".into()))?;
    let setup = routing_setup(r)?;
    let scenario_id = &r.sha256[..12];

    let mut csv = String::from(
        "scenario_id,metric,mean_propagation_s,mean_transmission_s,mean_waiting_s,delivered_count\n",
    );
    let mut per_metric = Vec::new();
    for (name, metric) in &setup.metrics {
        let res = simulate_packets(
            &r.constants,
            std::slice::from_ref(&setup.graph),
            horizon,
            &setup.traffic,
            metric,
            horizon,
            seed,
        )
        .map_err(runtime)?;
        csv.push_str(&format!(
            "{scenario_id},{name},{},{},{},{}\n",
            sig9(res.mean_propagation_s),
            sig9(res.mean_transmission_s),
            sig9(res.mean_waiting_s),
            res.delivered
        ));
        per_metric.push(json!({
            "metric": name,
            "generated": res.generated,
            "delivered": res.delivered,
            "undeliverable": res.undeliverable,
            "mean_total_s": res.mean_total_s(),
        }));
    }
    Ok(ExperimentOutput {
        tables: vec![("routing-latency.metrics.csv".into(), csv)],
        summary: json!({
            "lambda_per_site_pps": setup.traffic.lambda_per_site_pps,
            "horizon_s": horizon,
            "per_metric": per_metric,
        }),
    })
}

fn max_load(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let setup = routing_setup(r)?;
    let mut csv = String::from("metric,lambda_star_pps\n");
    let mut per_metric = Vec::new();
    for (name, metric) in &setup.metrics {
        let routes = all_pairs_routes(&setup.graph, metric, &r.constants).map_err(runtime)?;
        let lambda_star =
            max_load_per_gs(&setup.graph, &routes, setup.n_sites, setup.traffic.packet_bits)
                .map_err(runtime)?;
        csv.push_str(&format!("{name},{}\n", sig9(lambda_star)));
        per_metric.push(json!({ "metric": name, "lambda_star_pps": lambda_star }));
    }
    Ok(ExperimentOutput {
        tables: vec![("max-load.lambda-star.csv".into(), csv)],
        summary: json!({
            "packet_bits": setup.traffic.packet_bits,
            "per_metric": per_metric,
        }),
    })
}

fn connectivity_check(r: &mut Resolved) -> CliResult<ExperimentOutput> {
    let con = r.constellation()?;
    let params = r.isl_params()?;
    let rates = r.rates()?;
    let floor = r.connectivity_floor_bps();

    let mut csv = String::from(
        "shell,connected,max_distance_m,shannon_rate_bps,selected_rate_bps,margin_db\n",
    );
    let mut all_connected = true;
    let mut reports = Vec::new();
    for (i, shell) in con.shells().iter().enumerate() {
        let rep = link::isl_connectivity_check(con.constants(), &params, shell, &rates, floor)
            .map_err(runtime)?;
        all_connected &= rep.connected;
        csv.push_str(&format!(
            "{i},{},{},{},{},{}\n",
            rep.connected,
            sig9(rep.max_distance_m),
            sig9(rep.shannon_rate_bps),
            sig9(rep.selected_rate_bps),
            sig9(rep.margin_db)
        ));
        reports.push(json!({
            "shell": i,
            "connected": rep.connected,
            "max_distance_m": rep.max_distance_m,
            "margin_db": rep.margin_db,
        }));
    }
    Ok(ExperimentOutput {
        tables: vec![("connectivity-check.report.csv".into(), csv)],
        summary: json!({ "all_connected": all_connected, "shells": reports }),
    })
}
