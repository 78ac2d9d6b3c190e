//! Inter-plane ISL establishment: feasible-edge enumeration on the
//! multi-partite satellite graph, greedy matching with per-satellite
//! transceiver budgets and per-beam constraints, and periodic link
//! re-establishment with rate sampling.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::antenna::{
    array_gain, best_butler_beam, butler_beams, local_direction, repointing_gain, ArrayGeometry,
    Direction,
};
use crate::constants::PhysicalConstants;
use crate::error::{Error, Result};
use crate::link::{self, LinkParams, RateSet};
use crate::orbits::{dot, norm, sub, Constellation, SatelliteId, SatelliteState};

/// Links must clear the Earth's surface by this margin (atmosphere).
pub const EARTH_OCCLUSION_MARGIN_M: f64 = 80e3;

/// Antenna model used on both ends of an inter-plane ISL.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum IslAntennaMode {
    /// Mechanically steered dish with ideal pointing; gains come from the
    /// link parameter antennas.
    Parabolic,
    /// K x K digital array, re-pointed at each link establishment.
    Digital { elements_per_axis: usize },
    /// K x K array behind a fixed beam-switching network.
    Butler {
        elements_per_axis: usize,
        fixed_polar_rad: f64,
    },
}

impl IslAntennaMode {
    pub fn butler(elements_per_axis: usize) -> Self {
        IslAntennaMode::Butler {
            elements_per_axis,
            fixed_polar_rad: std::f64::consts::FRAC_PI_2,
        }
    }

    fn geometry(&self, params: &LinkParams, constants: &PhysicalConstants) -> Option<ArrayGeometry> {
        match *self {
            IslAntennaMode::Parabolic => None,
            IslAntennaMode::Digital { elements_per_axis }
            | IslAntennaMode::Butler { elements_per_axis, .. } => Some(
                ArrayGeometry::half_wavelength(elements_per_axis, params.carrier_hz, constants.c),
            ),
        }
    }
}

/// Which plane pairs are scanned for candidate inter-plane links.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CandidatePolicy {
    /// Neighbouring planes by RAAN index, with wraparound (covers the seam
    /// of a star constellation).
    AdjacentPlanes,
    AllPlanes,
}

/// Per-satellite transceiver counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransceiverBudget {
    pub intra_plane: usize,
    pub inter_plane: usize,
}

impl Default for TransceiverBudget {
    fn default() -> Self {
        TransceiverBudget { intra_plane: 2, inter_plane: 2 }
    }
}

/// One candidate (or matched) inter-plane link.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IslEdge {
    pub u: SatelliteId,
    pub v: SatelliteId,
    pub distance_m: f64,
    pub rate_bps: f64,
    /// Beam index at each end (1-based) in beam-switched mode.
    pub beam_u: Option<usize>,
    pub beam_v: Option<usize>,
}

impl IslEdge {
    fn pair(&self) -> (SatelliteId, SatelliteId) {
        if self.u <= self.v {
            (self.u, self.v)
        } else {
            (self.v, self.u)
        }
    }
}

/// All feasible inter-plane edges at one instant.
#[derive(Debug, Clone, PartialEq)]
pub struct TopologySnapshot {
    pub time_s: f64,
    pub vertices: Vec<SatelliteId>,
    pub edges: Vec<IslEdge>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchedPair {
    pub edge: IslEdge,
    /// Selection weight (min of the rate now and at the lookahead instant
    /// when lookahead is enabled).
    pub weight_bps: f64,
}

/// One-to-one assignment of inter-plane transceivers into active links.
#[derive(Debug, Clone, PartialEq)]
pub struct Matching {
    pub time_s: f64,
    pub pairs: Vec<MatchedPair>,
}

impl Matching {
    pub fn empty(time_s: f64) -> Self {
        Matching { time_s, pairs: Vec::new() }
    }

    pub fn total_weight_bps(&self) -> f64 {
        self.pairs.iter().map(|p| p.weight_bps).sum()
    }

    pub fn degree(&self, id: SatelliteId) -> usize {
        self.pairs
            .iter()
            .filter(|p| p.edge.u == id || p.edge.v == id)
            .count()
    }

    pub fn contains_pair(&self, a: SatelliteId, b: SatelliteId) -> bool {
        self.pairs
            .iter()
            .any(|p| (p.edge.u == a && p.edge.v == b) || (p.edge.u == b && p.edge.v == a))
    }
}

/// True when the segment between two points passes within `margin_m` of
/// the Earth's surface.
pub fn earth_blocked(
    constants: &PhysicalConstants,
    margin_m: f64,
    p1: [f64; 3],
    p2: [f64; 3],
) -> bool {
    let d = sub(p2, p1);
    let dd = dot(d, d);
    let s = if dd > 0.0 { (-dot(p1, d) / dd).clamp(0.0, 1.0) } else { 0.0 };
    let closest = [p1[0] + s * d[0], p1[1] + s * d[1], p1[2] + s * d[2]];
    norm(closest) < constants.earth_radius_m + margin_m
}

fn plane_pairs(n_planes: usize, policy: CandidatePolicy) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    match policy {
        CandidatePolicy::AdjacentPlanes => {
            for p in 0..n_planes.saturating_sub(1) {
                out.push((p, p + 1));
            }
            if n_planes > 2 {
                out.push((0, n_planes - 1));
            }
        }
        CandidatePolicy::AllPlanes => {
            for p in 0..n_planes {
                for q in p + 1..n_planes {
                    out.push((p, q));
                }
            }
        }
    }
    out
}

/// End-point gains (and beam choices) for a candidate link under the
/// configured antenna mode, with fresh pointing.
fn fresh_gains(
    constants: &PhysicalConstants,
    params: &LinkParams,
    mode: &IslAntennaMode,
    su: &SatelliteState,
    sv: &SatelliteState,
) -> (f64, f64, Option<usize>, Option<usize>) {
    match *mode {
        IslAntennaMode::Parabolic => (
            params.tx_antenna.peak_gain(constants, params.carrier_hz),
            params.rx_antenna.peak_gain(constants, params.carrier_hz),
            None,
            None,
        ),
        IslAntennaMode::Digital { elements_per_axis } => {
            let g = (elements_per_axis * elements_per_axis) as f64;
            (g, g, None, None)
        }
        IslAntennaMode::Butler { elements_per_axis, fixed_polar_rad } => {
            let geom =
                ArrayGeometry::half_wavelength(elements_per_axis, params.carrier_hz, constants.c);
            let du = local_direction(su, sv.position_m);
            let dv = local_direction(sv, su.position_m);
            let (ku, gu) = best_butler_beam(&geom, fixed_polar_rad, &du).expect("valid geometry");
            let (kv, gv) = best_butler_beam(&geom, fixed_polar_rad, &dv).expect("valid geometry");
            (gu, gv, Some(ku), Some(kv))
        }
    }
}

/// Enumerates candidate inter-plane links at time `t`: plane pairs per the
/// candidate policy, Earth-occlusion filtered, with the rate each link
/// would get if (re)established now. Zero-rate edges are dropped.
pub fn feasible_edges(
    constellation: &Constellation,
    t: f64,
    params: &LinkParams,
    mode: &IslAntennaMode,
    rates: &RateSet,
    policy: CandidatePolicy,
    max_range_m: Option<f64>,
) -> Result<TopologySnapshot> {
    rates.validate()?;
    let constants = *constellation.constants();
    let states = constellation.propagate_all(t);
    let mut edges = Vec::new();
    for (shell_idx, shell) in constellation.shells().iter().enumerate() {
        for (p, q) in plane_pairs(shell.n_planes, policy) {
            for slot_u in 0..shell.sats_per_plane {
                let u = SatelliteId { shell: shell_idx, plane: p, slot: slot_u };
                let su = states[constellation.flat_index(u)];
                for slot_v in 0..shell.sats_per_plane {
                    let v = SatelliteId { shell: shell_idx, plane: q, slot: slot_v };
                    let sv = states[constellation.flat_index(v)];
                    let d = norm(sub(sv.position_m, su.position_m));
                    if let Some(max) = max_range_m {
                        if d > max {
                            continue;
                        }
                    }
                    if earth_blocked(&constants, EARTH_OCCLUSION_MARGIN_M, su.position_m, sv.position_m)
                    {
                        continue;
                    }
                    let (gu, gv, bu, bv) = fresh_gains(&constants, params, mode, &su, &sv);
                    let snr = link::snr(&constants, params, d, gu, gv)?;
                    let rate = link::shannon_rate(params, snr, rates);
                    if rate > 0.0 {
                        edges.push(IslEdge {
                            u,
                            v,
                            distance_m: d,
                            rate_bps: rate,
                            beam_u: bu,
                            beam_v: bv,
                        });
                    }
                }
            }
        }
    }
    Ok(TopologySnapshot { time_s: t, vertices: constellation.ids().collect(), edges })
}

/// Interference handling while the matching is being built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum InterferenceModel {
    /// Orthogonal sub-band allocation: matched links do not affect the
    /// weights of the remaining candidates.
    Orthogonal,
    /// Candidates share `sub_bands` frequency slices (assigned by lower
    /// plane index modulo the count); each accepted link degrades the
    /// remaining same-band candidates' weights to their SINR rate.
    Sinr { sub_bands: usize },
}

/// Extra context needed only by the SINR interference model.
pub struct SinrContext<'a> {
    pub constellation: &'a Constellation,
    pub params: &'a LinkParams,
    pub mode: IslAntennaMode,
    pub rates: &'a RateSet,
}

fn sub_band(edge: &IslEdge, sub_bands: usize) -> usize {
    edge.u.plane.min(edge.v.plane) % sub_bands.max(1)
}

/// Gain of a matched transmitter (steered at its partner) toward a victim
/// direction; isotropic sidelobes for the parabolic model.
fn stray_gain(
    constants: &PhysicalConstants,
    params: &LinkParams,
    mode: &IslAntennaMode,
    own: &SatelliteState,
    partner: &SatelliteState,
    victim: &SatelliteState,
    beam: Option<usize>,
) -> f64 {
    let Some(geom) = mode.geometry(params, constants) else {
        return 1.0;
    };
    let toward_victim = local_direction(own, victim.position_m);
    match *mode {
        IslAntennaMode::Digital { .. } => {
            let steered = local_direction(own, partner.position_m);
            repointing_gain(&geom, &toward_victim, &steered)
        }
        IslAntennaMode::Butler { fixed_polar_rad, .. } => {
            let beams = butler_beams(&geom, fixed_polar_rad);
            let k = beam.unwrap_or(1);
            array_gain(&beams[k - 1], &geom, &toward_victim).expect("beam length")
        }
        IslAntennaMode::Parabolic => unreachable!(),
    }
}

/// Aggregate interference power each candidate receives from the already
/// matched links in the same sub-band, and the resulting SINR rate.
fn sinr_weight(
    ctx: &SinrContext<'_>,
    states: &[SatelliteState],
    candidate: &IslEdge,
    matched: &[MatchedPair],
    sub_bands: usize,
) -> f64 {
    let constants = ctx.constellation.constants();
    let band = sub_band(candidate, sub_bands);
    let su = states[ctx.constellation.flat_index(candidate.u)];
    let sv = states[ctx.constellation.flat_index(candidate.v)];
    let (gu, gv, _, _) = fresh_gains(constants, ctx.params, &ctx.mode, &su, &sv);
    let fspl = link::free_space_path_loss(constants, candidate.distance_m, ctx.params.carrier_hz)
        .expect("positive distance");
    let pointing = 10f64.powf(-2.0 * ctx.params.pointing_loss_db / 10.0);
    let signal = ctx.params.tx_power_w * gu * gv * pointing / fspl;
    let noise = ctx.params.noise_power_w();
    let mut interference = 0.0;
    for m in matched.iter().filter(|m| sub_band(&m.edge, sub_bands) == band) {
        // both ends of a matched link transmit; victim receiver is taken at
        // the candidate's u end (symmetric treatment would double-count
        // nothing structural, only refine the estimate)
        for (tx, partner, beam) in [
            (m.edge.u, m.edge.v, m.edge.beam_u),
            (m.edge.v, m.edge.u, m.edge.beam_v),
        ] {
            let st = states[ctx.constellation.flat_index(tx)];
            let sp = states[ctx.constellation.flat_index(partner)];
            if earth_blocked(constants, EARTH_OCCLUSION_MARGIN_M, st.position_m, su.position_m) {
                continue;
            }
            let d = norm(sub(su.position_m, st.position_m));
            if d <= 0.0 {
                continue;
            }
            let g_tx = stray_gain(constants, ctx.params, &ctx.mode, &st, &sp, &su, beam);
            let g_rx = stray_gain(constants, ctx.params, &ctx.mode, &su, &sv, &st, candidate.beam_u);
            let l = link::free_space_path_loss(constants, d, ctx.params.carrier_hz)
                .expect("positive distance");
            interference += ctx.params.tx_power_w * g_tx * g_rx / l;
        }
    }
    let sinr = signal / (noise + interference);
    link::shannon_rate(ctx.params, sinr, ctx.rates)
}

fn edge_order(a: &IslEdge, b: &IslEdge) -> std::cmp::Ordering {
    (a.u, a.v, a.beam_u, a.beam_v).cmp(&(b.u, b.v, b.beam_u, b.beam_v))
}

struct CapacityBook {
    remaining: HashMap<SatelliteId, usize>,
    beams_used: HashSet<(SatelliteId, usize)>,
    budget: usize,
}

impl CapacityBook {
    fn new(budget: usize) -> Self {
        CapacityBook { remaining: HashMap::new(), beams_used: HashSet::new(), budget }
    }

    fn admits(&self, e: &IslEdge) -> bool {
        let free = |id: SatelliteId| *self.remaining.get(&id).unwrap_or(&self.budget) > 0;
        let beam_free = |id: SatelliteId, beam: Option<usize>| {
            beam.map_or(true, |k| !self.beams_used.contains(&(id, k)))
        };
        free(e.u) && free(e.v) && beam_free(e.u, e.beam_u) && beam_free(e.v, e.beam_v)
    }

    fn take(&mut self, e: &IslEdge) {
        for id in [e.u, e.v] {
            let slot = self.remaining.entry(id).or_insert(self.budget);
            *slot -= 1;
        }
        if let Some(k) = e.beam_u {
            self.beams_used.insert((e.u, k));
        }
        if let Some(k) = e.beam_v {
            self.beams_used.insert((e.v, k));
        }
    }
}

/// Greedy maximum-weight matching under per-satellite transceiver budgets.
///
/// Weights are the candidate rates, reduced to the minimum with the rate at
/// the lookahead instant when a lookahead snapshot is given (so selected
/// links survive the whole re-establishment period). Pairs from `initial`
/// that are still feasible are kept (with refreshed pointing and rate) and
/// count against the budget before new links are added. Ties break
/// lexicographically on the endpoint ids, making the result deterministic.
pub fn greedy_match(
    snapshot: &TopologySnapshot,
    lookahead: Option<&TopologySnapshot>,
    initial: &Matching,
    budget: &TransceiverBudget,
    interference: InterferenceModel,
    sinr_ctx: Option<&SinrContext<'_>>,
) -> Result<Matching> {
    if let Some(la) = lookahead {
        if la.vertices != snapshot.vertices {
            return Err(Error::Config(
                "lookahead snapshot has a different vertex set".into(),
            ));
        }
    }
    let la_rate: Option<HashMap<(SatelliteId, SatelliteId), f64>> = lookahead.map(|la| {
        let mut m: HashMap<(SatelliteId, SatelliteId), f64> = HashMap::new();
        for e in &la.edges {
            let slot = m.entry(e.pair()).or_insert(0.0);
            *slot = slot.max(e.rate_bps);
        }
        m
    });
    let weight = |e: &IslEdge| -> f64 {
        match &la_rate {
            None => e.rate_bps,
            Some(m) => m.get(&e.pair()).copied().unwrap_or(0.0).min(e.rate_bps),
        }
    };

    let mut book = CapacityBook::new(budget.inter_plane);
    let mut pairs: Vec<MatchedPair> = Vec::new();

    // keep still-feasible pairs from the previous period
    let mut kept: HashSet<(SatelliteId, SatelliteId)> = HashSet::new();
    for prior in &initial.pairs {
        let key = prior.edge.pair();
        if kept.contains(&key) {
            continue;
        }
        let Some(e) = snapshot
            .edges
            .iter()
            .filter(|e| e.pair() == key)
            .max_by(|a, b| a.rate_bps.partial_cmp(&b.rate_bps).unwrap().then(edge_order(b, a)))
        else {
            continue;
        };
        let w = weight(e);
        if w > 0.0 && book.admits(e) {
            book.take(e);
            kept.insert(key);
            pairs.push(MatchedPair { edge: *e, weight_bps: w });
        }
    }

    let mut candidates: Vec<(f64, IslEdge)> = snapshot
        .edges
        .iter()
        .filter(|e| !kept.contains(&e.pair()))
        .map(|e| (weight(e), *e))
        .filter(|(w, _)| *w > 0.0)
        .collect();
    candidates.sort_by(|(wa, a), (wb, b)| {
        wb.partial_cmp(wa).unwrap().then_with(|| edge_order(a, b))
    });

    match interference {
        InterferenceModel::Orthogonal => {
            // static weights: one descending pass is exactly the greedy loop
            for (w, e) in &candidates {
                if book.admits(e) {
                    book.take(e);
                    pairs.push(MatchedPair { edge: *e, weight_bps: *w });
                }
            }
        }
        InterferenceModel::Sinr { sub_bands } => {
            let ctx = sinr_ctx.ok_or_else(|| {
                Error::Config("SINR interference model needs a SinrContext".into())
            })?;
            let states = ctx.constellation.propagate_all(snapshot.time_s);
            loop {
                let best = candidates
                    .iter()
                    .enumerate()
                    .filter(|(_, (w, e))| *w > 0.0 && book.admits(e))
                    .max_by(|(_, (wa, a)), (_, (wb, b))| {
                        wa.partial_cmp(wb).unwrap().then_with(|| edge_order(b, a))
                    })
                    .map(|(i, _)| i);
                let Some(i) = best else { break };
                let (w, e) = candidates.swap_remove(i);
                book.take(&e);
                pairs.push(MatchedPair { edge: e, weight_bps: w });
                // degrade remaining same-band candidates to their SINR rate
                for (w, c) in candidates.iter_mut() {
                    if sub_band(c, sub_bands) == sub_band(&e, sub_bands) {
                        let base = weight(c);
                        let sinr_rate = sinr_weight(ctx, &states, c, &pairs, sub_bands);
                        *w = base.min(sinr_rate);
                        c.rate_bps = c.rate_bps.min(sinr_rate);
                    }
                }
            }
        }
    }

    pairs.sort_by(|a, b| edge_order(&a.edge, &b.edge));
    Ok(Matching { time_s: snapshot.time_s, pairs })
}

/// Pointing state captured when a link is (re)established.
#[derive(Debug, Clone, Copy)]
struct PairSteer {
    dir_u: Direction,
    dir_v: Direction,
}

/// Schedule parameters for periodic link re-establishment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScheduleConfig {
    /// Re-establishment period; 0 re-matches at every sample (ideal
    /// pointing reference).
    pub delta_t_s: f64,
    pub horizon_s: f64,
    pub sample_step_s: f64,
    pub policy: CandidatePolicy,
    pub budget: TransceiverBudget,
    pub lookahead: bool,
    pub max_range_m: Option<f64>,
}

impl ScheduleConfig {
    pub fn new(delta_t_s: f64, horizon_s: f64, sample_step_s: f64) -> Self {
        ScheduleConfig {
            delta_t_s,
            horizon_s,
            sample_step_s,
            policy: CandidatePolicy::AdjacentPlanes,
            budget: TransceiverBudget::default(),
            lookahead: true,
            max_range_m: None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.delta_t_s < 0.0 || !self.delta_t_s.is_finite() {
            return Err(Error::Domain("delta_t must be >= 0".into()));
        }
        if self.sample_step_s <= 0.0 || self.horizon_s <= 0.0 {
            return Err(Error::Domain("sample step and horizon must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ScheduleResult {
    /// Matching recomputed at each re-establishment instant.
    pub matchings: Vec<Matching>,
    /// One rate sample per active link per sample instant, including decay
    /// between re-establishments from stale pointing and satellite motion.
    pub rate_samples_bps: Vec<f64>,
}

impl ScheduleResult {
    pub fn mean_rate_bps(&self) -> f64 {
        if self.rate_samples_bps.is_empty() {
            return 0.0;
        }
        self.rate_samples_bps.iter().sum::<f64>() / self.rate_samples_bps.len() as f64
    }
}

/// Current rate of an established link given pointing captured at the last
/// re-establishment.
fn stale_rate(
    constants: &PhysicalConstants,
    params: &LinkParams,
    mode: &IslAntennaMode,
    rates: &RateSet,
    su: &SatelliteState,
    sv: &SatelliteState,
    edge: &IslEdge,
    steer: &PairSteer,
) -> Result<f64> {
    let d = norm(sub(sv.position_m, su.position_m));
    let (gu, gv) = match *mode {
        IslAntennaMode::Parabolic => (
            params.tx_antenna.peak_gain(constants, params.carrier_hz),
            params.rx_antenna.peak_gain(constants, params.carrier_hz),
        ),
        IslAntennaMode::Digital { elements_per_axis } => {
            let geom =
                ArrayGeometry::half_wavelength(elements_per_axis, params.carrier_hz, constants.c);
            let du = local_direction(su, sv.position_m);
            let dv = local_direction(sv, su.position_m);
            (
                repointing_gain(&geom, &du, &steer.dir_u),
                repointing_gain(&geom, &dv, &steer.dir_v),
            )
        }
        IslAntennaMode::Butler { elements_per_axis, fixed_polar_rad } => {
            let geom =
                ArrayGeometry::half_wavelength(elements_per_axis, params.carrier_hz, constants.c);
            let beams = butler_beams(&geom, fixed_polar_rad);
            let du = local_direction(su, sv.position_m);
            let dv = local_direction(sv, su.position_m);
            let gu = array_gain(&beams[edge.beam_u.unwrap_or(1) - 1], &geom, &du)?;
            let gv = array_gain(&beams[edge.beam_v.unwrap_or(1) - 1], &geom, &dv)?;
            (gu, gv)
        }
    };
    let snr = link::snr(constants, params, d, gu, gv)?;
    Ok(link::shannon_rate(params, snr, rates))
}

/// Runs the matching every `delta_t` seconds over the horizon, seeding each
/// run with the previous matching, and samples every active link's rate on
/// the sample grid (rates decay between re-establishments as the satellites
/// drift away from the captured pointing).
pub fn run_establishment_schedule(
    constellation: &Constellation,
    params: &LinkParams,
    mode: &IslAntennaMode,
    rates: &RateSet,
    cfg: &ScheduleConfig,
) -> Result<ScheduleResult> {
    cfg.validate()?;
    let constants = *constellation.constants();
    let mut matchings = Vec::new();
    let mut samples = Vec::new();
    let mut current = Matching::empty(0.0);
    let mut steer: Vec<PairSteer> = Vec::new();
    let mut next_establish = 0.0f64;

    let n_steps = (cfg.horizon_s / cfg.sample_step_s).ceil() as usize;
    for step in 0..n_steps {
        let t = step as f64 * cfg.sample_step_s;
        let establish = cfg.delta_t_s == 0.0 || t + 1e-9 >= next_establish;
        if establish {
            let snapshot = feasible_edges(
                constellation,
                t,
                params,
                mode,
                rates,
                cfg.policy,
                cfg.max_range_m,
            )?;
            let lookahead = if cfg.lookahead && cfg.delta_t_s > 0.0 {
                Some(feasible_edges(
                    constellation,
                    t + cfg.delta_t_s,
                    params,
                    mode,
                    rates,
                    cfg.policy,
                    cfg.max_range_m,
                )?)
            } else {
                None
            };
            current = greedy_match(
                &snapshot,
                lookahead.as_ref(),
                &current,
                &cfg.budget,
                InterferenceModel::Orthogonal,
                None,
            )?;
            let states = constellation.propagate_all(t);
            steer = current
                .pairs
                .iter()
                .map(|p| {
                    let su = states[constellation.flat_index(p.edge.u)];
                    let sv = states[constellation.flat_index(p.edge.v)];
                    PairSteer {
                        dir_u: local_direction(&su, sv.position_m),
                        dir_v: local_direction(&sv, su.position_m),
                    }
                })
                .collect();
            matchings.push(current.clone());
            if cfg.delta_t_s > 0.0 {
                while next_establish <= t + 1e-9 {
                    next_establish += cfg.delta_t_s;
                }
            }
        }
        let states = constellation.propagate_all(t);
        for (pair, s) in current.pairs.iter().zip(&steer) {
            let su = states[constellation.flat_index(pair.edge.u)];
            let sv = states[constellation.flat_index(pair.edge.v)];
            samples.push(stale_rate(
                &constants, params, mode, rates, &su, &sv, &pair.edge, s,
            )?);
        }
    }
    Ok(ScheduleResult { matchings, rate_samples_bps: samples })
}

/// Empirical CDF: sorted sample values with cumulative fractions.
pub fn rate_cdf(samples: &[f64]) -> Result<Vec<(f64, f64)>> {
    if samples.is_empty() {
        return Err(Error::Empty("rate_cdf needs at least one sample".into()));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len() as f64;
    Ok(sorted
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, (i + 1) as f64 / n))
        .collect())
}

/// Median of a sample list (average of the middle two for even counts).
pub fn median(samples: &[f64]) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::Empty("median needs at least one sample".into()));
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = sorted.len();
    Ok(if n % 2 == 1 {
        sorted[n / 2]
    } else {
        0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
    })
}
