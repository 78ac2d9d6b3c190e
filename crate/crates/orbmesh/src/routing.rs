//! Ground + space routing: graph construction over GSLs, intra-plane
//! rings, and matched inter-plane ISLs; three routing metrics; shortest
//! paths; closed-form per-ground-station load limits; and a packet-level
//! discrete-event simulation with per-link FIFO queues.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp};
use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::coverage::{elevation, GroundSite};
use crate::error::{Error, Result};
use crate::link::{self, LinkParams, RateSet};
use crate::matching::Matching;
use crate::orbits::{norm, sub, Constellation, SatelliteId};

/// A vertex of the routing graph: ground site (by index) or satellite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Node {
    Site(usize),
    Sat(SatelliteId),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeFamily {
    Gsl,
    IntraPlane,
    InterPlane,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoutingEdge {
    pub a: Node,
    pub b: Node,
    pub distance_m: f64,
    pub rate_bps: f64,
    pub carrier_hz: f64,
    pub family: EdgeFamily,
}

/// Undirected routing graph at one topology snapshot.
#[derive(Debug, Clone)]
pub struct RoutingGraph {
    pub time_s: f64,
    pub n_sites: usize,
    pub edges: Vec<RoutingEdge>,
    /// Sites with no satellite above the horizon.
    pub disconnected_sites: Vec<usize>,
    /// Sites whose GSL fell back below the elevation mask (but above the
    /// horizon).
    pub fallback_sites: Vec<usize>,
    nodes: Vec<Node>,
    adjacency: Vec<Vec<usize>>,
}

impl RoutingGraph {
    /// Assembles a graph from an edge list. `extra_nodes` adds vertices
    /// that may have no edges (so node indexing is stable across
    /// snapshots).
    pub fn from_edges(
        time_s: f64,
        n_sites: usize,
        edges: Vec<RoutingEdge>,
        extra_nodes: Vec<Node>,
    ) -> Self {
        let mut nodes: Vec<Node> = (0..n_sites).map(Node::Site).collect();
        nodes.extend(extra_nodes);
        nodes.extend(edges.iter().flat_map(|e| [e.a, e.b]));
        nodes.sort();
        nodes.dedup();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (i, e) in edges.iter().enumerate() {
            let ia = nodes.binary_search(&e.a).expect("endpoint in node list");
            let ib = nodes.binary_search(&e.b).expect("endpoint in node list");
            adjacency[ia].push(i);
            adjacency[ib].push(i);
        }
        RoutingGraph {
            time_s,
            n_sites,
            edges,
            disconnected_sites: Vec::new(),
            fallback_sites: Vec::new(),
            nodes,
            adjacency,
        }
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn node_index(&self, n: Node) -> Option<usize> {
        self.nodes.binary_search(&n).ok()
    }

    pub fn incident_edges(&self, node_idx: usize) -> &[usize] {
        &self.adjacency[node_idx]
    }

    /// The endpoint of `edge` that is not `node`.
    pub fn other_endpoint(&self, edge_idx: usize, node: Node) -> Node {
        let e = &self.edges[edge_idx];
        if e.a == node {
            e.b
        } else {
            e.a
        }
    }

    pub fn degree_of_site(&self, site: usize) -> usize {
        self.node_index(Node::Site(site))
            .map_or(0, |i| self.adjacency[i].len())
    }
}

/// Builds the three edge families at time `t`: one GSL per site to its
/// closest satellite above the elevation mask (falling back to the closest
/// above the horizon), the fixed intra-plane rings, and the matched
/// inter-plane ISLs. Sites without any visible satellite are reported as
/// disconnected, not fatal.
pub fn build_routing_graph(
    constellation: &Constellation,
    sites: &[GroundSite],
    matching: &Matching,
    gsl_params: &LinkParams,
    isl_params: &LinkParams,
    min_elevation_rad: f64,
    rates: &RateSet,
    t: f64,
) -> Result<RoutingGraph> {
    rates.validate()?;
    let constants = constellation.constants();
    let states = constellation.propagate_all(t);
    let ids: Vec<SatelliteId> = constellation.ids().collect();
    let mut edges = Vec::new();
    let mut disconnected = Vec::new();
    let mut fallback = Vec::new();

    for (si, site) in sites.iter().enumerate() {
        site.validate()?;
        let site_pos = site.position_m(constants);
        let mut best: Option<(f64, usize)> = None; // (distance, sat index) above mask
        let mut horizon_best: Option<(f64, usize)> = None;
        for (k, state) in states.iter().enumerate() {
            let el = elevation(constants, site, state)?;
            if el <= 0.0 {
                continue;
            }
            let d = norm(sub(state.position_m, site_pos));
            if el >= min_elevation_rad && best.map_or(true, |(bd, _)| d < bd) {
                best = Some((d, k));
            }
            if horizon_best.map_or(true, |(bd, _)| d < bd) {
                horizon_best = Some((d, k));
            }
        }
        let chosen = match (best, horizon_best) {
            (Some(b), _) => Some(b),
            (None, Some(h)) => {
                fallback.push(si);
                Some(h)
            }
            (None, None) => {
                disconnected.push(si);
                None
            }
        };
        if let Some((d, k)) = chosen {
            let snr = link::snr_boresight(constants, gsl_params, d)?;
            let rate = link::shannon_rate(gsl_params, snr, rates);
            edges.push(RoutingEdge {
                a: Node::Site(si),
                b: Node::Sat(ids[k]),
                distance_m: d,
                rate_bps: rate,
                carrier_hz: gsl_params.carrier_hz,
                family: EdgeFamily::Gsl,
            });
        }
    }

    for (shell_idx, shell) in constellation.shells().iter().enumerate() {
        for plane in 0..shell.n_planes {
            for slot in 0..shell.sats_per_plane {
                let u = SatelliteId { shell: shell_idx, plane, slot };
                let v = SatelliteId {
                    shell: shell_idx,
                    plane,
                    slot: (slot + 1) % shell.sats_per_plane,
                };
                if u == v {
                    continue; // single-satellite ring has no edges
                }
                if slot == shell.sats_per_plane - 1 && shell.sats_per_plane == 2 {
                    continue; // two-satellite ring collapses to one edge
                }
                let su = states[constellation.flat_index(u)];
                let sv = states[constellation.flat_index(v)];
                let d = norm(sub(sv.position_m, su.position_m));
                let snr = link::snr_boresight(constants, isl_params, d)?;
                let rate = link::shannon_rate(isl_params, snr, rates);
                edges.push(RoutingEdge {
                    a: Node::Sat(u),
                    b: Node::Sat(v),
                    distance_m: d,
                    rate_bps: rate,
                    carrier_hz: isl_params.carrier_hz,
                    family: EdgeFamily::IntraPlane,
                });
            }
        }
    }

    for pair in &matching.pairs {
        edges.push(RoutingEdge {
            a: Node::Sat(pair.edge.u),
            b: Node::Sat(pair.edge.v),
            distance_m: pair.edge.distance_m,
            rate_bps: pair.edge.rate_bps,
            carrier_hz: isl_params.carrier_hz,
            family: EdgeFamily::InterPlane,
        });
    }

    let mut graph = RoutingGraph::from_edges(
        t,
        sites.len(),
        edges,
        ids.into_iter().map(Node::Sat).collect(),
    );
    graph.disconnected_sites = disconnected;
    graph.fallback_sites = fallback;
    Ok(graph)
}

/// Queueing-time estimate used inside the latency metric (no feedback
/// channel: a statistical model, not measured queue state).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum QueueModel {
    Constant { mean_queue_s: f64 },
    /// M/M/1 sojourn estimate 1/(mu - lambda_p) with mu = R/packet_bits and
    /// lambda_p the per-path load 2*lambda/(N_GS - 1).
    Mm1 { lambda_per_site_pps: f64, n_gs: usize },
}

/// Cap on the queue estimate when the M/M/1 model saturates.
pub const QUEUE_ESTIMATE_CAP_S: f64 = 1e6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum RoutingMetric {
    HopCount,
    PathLoss,
    Latency { mean_packet_bits: f64, queue: QueueModel },
}

impl RoutingMetric {
    /// Latency metric with the default 1500-byte mean packet and no queue
    /// estimate.
    pub fn latency_default() -> Self {
        RoutingMetric::Latency {
            mean_packet_bits: 1500.0 * 8.0,
            queue: QueueModel::Constant { mean_queue_s: 0.0 },
        }
    }
}

/// Edge weight under a metric; always positive.
pub fn metric_weight(
    constants: &PhysicalConstants,
    edge: &RoutingEdge,
    metric: &RoutingMetric,
) -> Result<f64> {
    let w = match metric {
        RoutingMetric::HopCount => 1.0,
        // Linear (not dB) loss: summing linear losses keeps the quadratic
        // distance penalty, so the metric favours several short, high-rate
        // hops over one long, low-rate hop. Summed decibels would collapse
        // to a near-hop-count metric and lose exactly that behaviour.
        RoutingMetric::PathLoss => {
            link::free_space_path_loss(constants, edge.distance_m, edge.carrier_hz)?
        }
        RoutingMetric::Latency { mean_packet_bits, queue } => {
            if edge.rate_bps <= 0.0 {
                return Err(Error::Domain("latency weight needs a positive rate".into()));
            }
            let expected_queue = match *queue {
                QueueModel::Constant { mean_queue_s } => mean_queue_s,
                QueueModel::Mm1 { lambda_per_site_pps, n_gs } => {
                    let mu = edge.rate_bps / mean_packet_bits;
                    let lambda_p = path_load(lambda_per_site_pps, n_gs)?;
                    if lambda_p >= mu {
                        QUEUE_ESTIMATE_CAP_S
                    } else {
                        (1.0 / (mu - lambda_p)).min(QUEUE_ESTIMATE_CAP_S)
                    }
                }
            };
            edge.distance_m / constants.c + mean_packet_bits / edge.rate_bps + expected_queue
        }
    };
    Ok(w.max(1e-9))
}

/// A simple path between two ground sites.
#[derive(Debug, Clone, PartialEq)]
pub struct Route {
    pub nodes: Vec<Node>,
    pub edge_indices: Vec<usize>,
    pub total_weight: f64,
}

impl Route {
    pub fn hops(&self) -> usize {
        self.edge_indices.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct Cost(f64);

impl Eq for Cost {}
impl PartialOrd for Cost {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Cost {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.total_cmp(&other.0)
    }
}

/// Single-source Dijkstra; returns per-node distance and the (previous
/// node, edge) pair on the chosen shortest path tree. Deterministic:
/// equal-cost nodes leave the queue in node-index order, so among
/// equal-cost predecessors the lowest index wins. Only strict improvements
/// re-parent a node — relaxing on cost ties can cycle the predecessor
/// pointers when a tiny edge weight is absorbed by float rounding.
fn dijkstra(
    graph: &RoutingGraph,
    metric: &RoutingMetric,
    constants: &PhysicalConstants,
    source: usize,
) -> Result<(Vec<f64>, Vec<Option<(usize, usize)>>)> {
    let n = graph.nodes.len();
    let weights: Vec<f64> = graph
        .edges
        .iter()
        .map(|e| metric_weight(constants, e, metric))
        .collect::<Result<_>>()?;
    let mut dist = vec![f64::INFINITY; n];
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Reverse((Cost(0.0), source)));
    while let Some(Reverse((Cost(d), u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &ei in &graph.adjacency[u] {
            let v_node = graph.other_endpoint(ei, graph.nodes[u]);
            let v = graph.node_index(v_node).expect("endpoint indexed");
            let nd = d + weights[ei];
            if nd < dist[v] {
                dist[v] = nd;
                prev[v] = Some((u, ei));
                heap.push(Reverse((Cost(nd), v)));
            }
        }
    }
    Ok((dist, prev))
}

/// Minimum-weight simple path between two ground sites, or None when they
/// are disconnected. `src == dst` yields the empty route.
pub fn shortest_route(
    graph: &RoutingGraph,
    src_site: usize,
    dst_site: usize,
    metric: &RoutingMetric,
    constants: &PhysicalConstants,
) -> Result<Option<Route>> {
    let src = graph
        .node_index(Node::Site(src_site))
        .ok_or_else(|| Error::Config(format!("unknown site {src_site}")))?;
    let dst = graph
        .node_index(Node::Site(dst_site))
        .ok_or_else(|| Error::Config(format!("unknown site {dst_site}")))?;
    if src == dst {
        return Ok(Some(Route {
            nodes: vec![Node::Site(src_site)],
            edge_indices: vec![],
            total_weight: 0.0,
        }));
    }
    let (dist, prev) = dijkstra(graph, metric, constants, src)?;
    if !dist[dst].is_finite() {
        return Ok(None);
    }
    let mut nodes = vec![graph.nodes[dst]];
    let mut edge_indices = Vec::new();
    let mut cur = dst;
    while cur != src {
        let (p, e) = prev[cur].expect("finite distance implies a predecessor");
        edge_indices.push(e);
        nodes.push(graph.nodes[p]);
        cur = p;
    }
    nodes.reverse();
    edge_indices.reverse();
    Ok(Some(Route { nodes, edge_indices, total_weight: dist[dst] }))
}

/// Next-hop edge toward `dst_site` from every node (by node index), via a
/// single Dijkstra rooted at the destination.
pub fn next_hop_table(
    graph: &RoutingGraph,
    dst_site: usize,
    metric: &RoutingMetric,
    constants: &PhysicalConstants,
) -> Result<Vec<Option<usize>>> {
    let dst = graph
        .node_index(Node::Site(dst_site))
        .ok_or_else(|| Error::Config(format!("unknown site {dst_site}")))?;
    let (_, prev) = dijkstra(graph, metric, constants, dst)?;
    Ok(prev.into_iter().map(|p| p.map(|(_, e)| e)).collect())
}

/// Per-packet latency decomposition on one link.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct LatencyBreakdown {
    pub waiting_s: f64,
    pub transmission_s: f64,
    pub propagation_s: f64,
}

impl LatencyBreakdown {
    pub fn total_s(&self) -> f64 {
        self.waiting_s + self.transmission_s + self.propagation_s
    }
}

pub fn one_hop_latency(
    constants: &PhysicalConstants,
    distance_m: f64,
    rate_bps: f64,
    packet_bits: f64,
    waiting_s: f64,
) -> Result<LatencyBreakdown> {
    if rate_bps <= 0.0 {
        return Err(Error::Domain(format!("rate must be positive, got {rate_bps}")));
    }
    Ok(LatencyBreakdown {
        waiting_s,
        transmission_s: packet_bits / rate_bps,
        propagation_s: distance_m / constants.c,
    })
}

/// Load assigned to each path under uniform any-to-any traffic:
/// 2*lambda/(N_GS - 1).
pub fn path_load(lambda_pps: f64, n_gs: usize) -> Result<f64> {
    if n_gs < 2 {
        return Err(Error::Domain(format!("need at least 2 ground sites, got {n_gs}")));
    }
    Ok(2.0 * lambda_pps / (n_gs - 1) as f64)
}

/// Shortest routes for all ordered pairs of connected ground sites.
pub fn all_pairs_routes(
    graph: &RoutingGraph,
    metric: &RoutingMetric,
    constants: &PhysicalConstants,
) -> Result<Vec<Route>> {
    let mut out = Vec::new();
    for src in 0..graph.n_sites {
        for dst in 0..graph.n_sites {
            if src == dst {
                continue;
            }
            if let Some(r) = shortest_route(graph, src, dst, metric, constants)? {
                out.push(r);
            }
        }
    }
    Ok(out)
}

/// Maximum sustainable per-ground-station packet rate: min over edges of
/// R(u,v) * (N_GS - 1) / (packet_bits * N_p(u,v)), where N_p counts the
/// routes crossing the edge. Expressed in packets/s for `packet_bits`
/// packets; pass `packet_bits = 1.0` for a bits/s budget.
pub fn max_load_per_gs(
    graph: &RoutingGraph,
    routes: &[Route],
    n_gs: usize,
    packet_bits: f64,
) -> Result<f64> {
    if routes.is_empty() {
        return Err(Error::Empty("max_load_per_gs needs at least one route".into()));
    }
    if n_gs < 2 {
        return Err(Error::Domain(format!("need at least 2 ground sites, got {n_gs}")));
    }
    let mut counts = vec![0usize; graph.edges.len()];
    for r in routes {
        for &e in &r.edge_indices {
            counts[e] += 1;
        }
    }
    let mut best = f64::INFINITY;
    for (e, &n_p) in counts.iter().enumerate() {
        if n_p == 0 {
            continue;
        }
        let lambda = graph.edges[e].rate_bps * (n_gs - 1) as f64 / (packet_bits * n_p as f64);
        best = best.min(lambda);
    }
    if !best.is_finite() {
        return Err(Error::Empty("no route crosses any edge".into()));
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArrivalProcess {
    Poisson,
    /// Fixed interarrival 1/lambda; reproducibility aid.
    Deterministic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrafficConfig {
    pub lambda_per_site_pps: f64,
    pub packet_bits: f64,
    pub arrivals: ArrivalProcess,
}

/// One delivered packet's record.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeliveredPacket {
    pub created_s: f64,
    pub breakdown: LatencyBreakdown,
    pub hops: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SimulationResult {
    pub generated: usize,
    pub delivered: usize,
    pub undeliverable: usize,
    pub mean_waiting_s: f64,
    pub mean_transmission_s: f64,
    pub mean_propagation_s: f64,
    pub per_packet: Vec<DeliveredPacket>,
}

impl SimulationResult {
    pub fn mean_total_s(&self) -> f64 {
        self.mean_waiting_s + self.mean_transmission_s + self.mean_propagation_s
    }

    /// Packets still traversing the network when the event queue drained
    /// (always 0: the simulation runs to completion after the generation
    /// horizon).
    pub fn in_flight(&self) -> usize {
        self.generated - self.delivered - self.undeliverable
    }

    /// Mean waiting time of delivered packets bucketed by creation time;
    /// `n_bins` over [0, horizon). Empty buckets yield 0.
    pub fn mean_waiting_by_created_bin(&self, horizon_s: f64, n_bins: usize) -> Vec<f64> {
        let mut sums = vec![0.0; n_bins];
        let mut counts = vec![0usize; n_bins];
        for p in &self.per_packet {
            let bin = ((p.created_s / horizon_s * n_bins as f64) as usize).min(n_bins - 1);
            sums[bin] += p.breakdown.waiting_s;
            counts[bin] += 1;
        }
        sums.iter()
            .zip(&counts)
            .map(|(&s, &c)| if c == 0 { 0.0 } else { s / c as f64 })
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
struct Packet {
    dst_site: usize,
    created_s: f64,
    waiting_s: f64,
    transmission_s: f64,
    propagation_s: f64,
    hops: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum EventKind {
    Generate { site: usize, dst: usize },
    Arrive { packet: usize, node: usize },
}

/// Packet-level discrete-event simulation over a schedule of topology
/// snapshots (`snapshots[i]` valid on [i*interval, (i+1)*interval)).
///
/// Each site generates packets over `[0, horizon)` with uniformly chosen
/// other-site destinations; packets use unipath source routing resolved
/// hop-by-hop against the snapshot current at each forwarding instant
/// (in-flight packets finish their hop, then reroute). One FIFO queue per
/// undirected link (both directions share the transceiver); deterministic
/// for a fixed seed.
pub fn simulate_packets(
    constants: &PhysicalConstants,
    snapshots: &[RoutingGraph],
    snapshot_interval_s: f64,
    traffic: &TrafficConfig,
    metric: &RoutingMetric,
    horizon_s: f64,
    seed: u64,
) -> Result<SimulationResult> {
    if snapshots.is_empty() {
        return Err(Error::Empty("need at least one topology snapshot".into()));
    }
    if horizon_s <= 0.0 || snapshot_interval_s <= 0.0 {
        return Err(Error::Domain("horizon and snapshot interval must be positive".into()));
    }
    if traffic.lambda_per_site_pps < 0.0 || traffic.packet_bits <= 0.0 {
        return Err(Error::Domain("invalid traffic configuration".into()));
    }
    let n_sites = snapshots[0].n_sites;
    if snapshots.iter().any(|s| s.n_sites != n_sites || s.nodes != snapshots[0].nodes) {
        return Err(Error::Config("snapshots must share one vertex set".into()));
    }
    if n_sites < 2 {
        return Err(Error::Domain("need at least 2 ground sites".into()));
    }

    // next-hop tables per (snapshot, destination site)
    let mut tables: Vec<Vec<Vec<Option<usize>>>> = Vec::with_capacity(snapshots.len());
    for g in snapshots {
        let mut per_dst = Vec::with_capacity(n_sites);
        for dst in 0..n_sites {
            per_dst.push(next_hop_table(g, dst, metric, constants)?);
        }
        tables.push(per_dst);
    }

    let mut heap: BinaryHeap<Reverse<(Cost, u64, usize)>> = BinaryHeap::new();
    let mut events: Vec<EventKind> = Vec::new();
    let mut seq: u64 = 0;
    let push = |heap: &mut BinaryHeap<_>, events: &mut Vec<EventKind>, seq: &mut u64, t: f64, k: EventKind| {
        events.push(k);
        heap.push(Reverse((Cost(t), *seq, events.len() - 1)));
        *seq += 1;
    };

    // pre-draw every site's arrival sequence (deterministic site order)
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if traffic.lambda_per_site_pps > 0.0 {
        let exp = Exp::new(traffic.lambda_per_site_pps)
            .map_err(|e| Error::Domain(format!("bad arrival rate: {e}")))?;
        for site in 0..n_sites {
            let mut t = 0.0;
            loop {
                let gap = match traffic.arrivals {
                    ArrivalProcess::Poisson => exp.sample(&mut rng),
                    ArrivalProcess::Deterministic => 1.0 / traffic.lambda_per_site_pps,
                };
                t += gap;
                if t >= horizon_s {
                    break;
                }
                let mut dst = rng.gen_range(0..n_sites - 1);
                if dst >= site {
                    dst += 1;
                }
                push(&mut heap, &mut events, &mut seq, t, EventKind::Generate { site, dst });
            }
        }
    }

    let mut packets: Vec<Packet> = Vec::new();
    let mut busy_until: HashMap<(usize, usize), f64> = HashMap::new();
    let mut result = SimulationResult::default();
    let mut sum = LatencyBreakdown::default();

    while let Some(Reverse((Cost(t), _, ev))) = heap.pop() {
        let snap_idx = ((t / snapshot_interval_s) as usize).min(snapshots.len() - 1);
        let graph = &snapshots[snap_idx];
        let (packet_idx, node) = match events[ev] {
            EventKind::Generate { site, dst } => {
                result.generated += 1;
                packets.push(Packet {
                    dst_site: dst,
                    created_s: t,
                    waiting_s: 0.0,
                    transmission_s: 0.0,
                    propagation_s: 0.0,
                    hops: 0,
                });
                let node = graph.node_index(Node::Site(site)).expect("site node");
                (packets.len() - 1, node)
            }
            EventKind::Arrive { packet, node } => (packet, node),
        };
        let p = packets[packet_idx];
        if graph.nodes[node] == Node::Site(p.dst_site) {
            result.delivered += 1;
            let breakdown = LatencyBreakdown {
                waiting_s: p.waiting_s,
                transmission_s: p.transmission_s,
                propagation_s: p.propagation_s,
            };
            sum.waiting_s += breakdown.waiting_s;
            sum.transmission_s += breakdown.transmission_s;
            sum.propagation_s += breakdown.propagation_s;
            result.per_packet.push(DeliveredPacket {
                created_s: p.created_s,
                breakdown,
                hops: p.hops,
            });
            continue;
        }
        let Some(edge_idx) = tables[snap_idx][p.dst_site][node] else {
            result.undeliverable += 1;
            continue;
        };
        let edge = &graph.edges[edge_idx];
        if edge.rate_bps <= 0.0 {
            result.undeliverable += 1;
            continue;
        }
        let next_node_id = graph.other_endpoint(edge_idx, graph.nodes[node]);
        let next = graph.node_index(next_node_id).expect("endpoint indexed");
        // one transceiver per link: both directions share the edge capacity
        let link = (node.min(next), node.max(next));
        let free_at = busy_until.get(&link).copied().unwrap_or(0.0).max(t);
        let tx = traffic.packet_bits / edge.rate_bps;
        let prop = edge.distance_m / constants.c;
        busy_until.insert(link, free_at + tx);
        let q = &mut packets[packet_idx];
        q.waiting_s += free_at - t;
        q.transmission_s += tx;
        q.propagation_s += prop;
        q.hops += 1;
        push(
            &mut heap,
            &mut events,
            &mut seq,
            free_at + tx + prop,
            EventKind::Arrive { packet: packet_idx, node: next },
        );
    }

    if result.delivered > 0 {
        let n = result.delivered as f64;
        result.mean_waiting_s = sum.waiting_s / n;
        result.mean_transmission_s = sum.transmission_s / n;
        result.mean_propagation_s = sum.propagation_s / n;
    }
    result.per_packet.sort_by(|a, b| a.created_s.total_cmp(&b.created_s));
    Ok(result)
}
