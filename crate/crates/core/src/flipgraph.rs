//! Enumeration of the locally flat-foldable state space and the origami flip
//! graph OFG(C), plus the constructive structure checks from the hypercube
//! and quotient-hypercube descriptions of the square-twist and square-grid
//! flip graphs.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::families::{reference_assignment, GridLayout};
use crate::local::{flip_stays_valid, is_locally_flat_foldable};
use crate::pattern::{CreasePattern, Family, MvAssignment, ShapeTag, VALLEY};

/// Hard bound on direct-scan enumeration.
pub const SCAN_CREASE_BOUND: usize = 24;

/// The origami flip graph: states in canonical (lexicographic) order and, for
/// each state, its flip neighbors labeled by the flipped face. Multi-edges
/// (two faces inducing the same transition) keep one entry per face.
#[derive(Debug, Clone)]
pub struct FlipGraph {
    pub states: Vec<MvAssignment>,
    pub adjacency: Vec<Vec<(usize, usize)>>,
}

impl FlipGraph {
    pub fn state_index(&self, state: &MvAssignment) -> Option<usize> {
        self.states.binary_search(state).ok()
    }

    /// Degree counting one per face label (equals the number of flippable
    /// faces of the state).
    pub fn degree(&self, state: usize) -> usize {
        self.adjacency[state].len()
    }

    /// Neighbors with multi-edges collapsed.
    pub fn distinct_neighbors(&self, state: usize) -> Vec<usize> {
        let mut n: Vec<usize> = self.adjacency[state].iter().map(|&(s, _)| s).collect();
        n.sort_unstable();
        n.dedup();
        n
    }

    pub fn edge_count_distinct(&self) -> usize {
        (0..self.states.len()).map(|s| self.distinct_neighbors(s).len()).sum::<usize>() / 2
    }
}

/// All locally flat-foldable assignments by brute scan over `2^creases`
/// candidates, in canonical order.
pub fn enumerate_states_scan(pattern: &CreasePattern) -> Result<Vec<MvAssignment>> {
    let e = pattern.crease_count();
    if e > SCAN_CREASE_BOUND {
        return Err(Error::StateSpaceOverflow { creases: e, bound: SCAN_CREASE_BOUND });
    }
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << e) {
        let mut a = MvAssignment::all_mountain(e);
        for i in 0..e {
            if mask >> i & 1 == 1 {
                a.set(i, VALLEY);
            }
        }
        if is_locally_flat_foldable(pattern, &a) {
            out.push(a);
        }
    }
    out.sort();
    Ok(out)
}

/// All states reachable from `start` by face flips, in canonical order.
/// Complete exactly when the flip graph is connected.
pub fn enumerate_states_bfs(
    pattern: &CreasePattern,
    start: &MvAssignment,
) -> Result<Vec<MvAssignment>> {
    pattern.assert_covers(start)?;
    if !is_locally_flat_foldable(pattern, start) {
        return Err(Error::NotLocallyFlatFoldable);
    }
    let mut seen: HashSet<MvAssignment> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(start.clone());
    queue.push_back(start.clone());
    while let Some(state) = queue.pop_front() {
        for face in 0..pattern.face_count() {
            if flip_stays_valid(pattern, &state, face) {
                let next = pattern.flip_face(&state, face);
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    let mut out: Vec<MvAssignment> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Default enumeration: BFS from the reference assignment for the families
/// with proven flip-graph connectivity, direct scan otherwise.
pub fn enumerate_states(pattern: &CreasePattern) -> Result<Vec<MvAssignment>> {
    match pattern.family() {
        Family::SquareGrid | Family::SquareTwist | Family::Miura | Family::Triangle => {
            let reference = reference_assignment(pattern)?;
            enumerate_states_bfs(pattern, &reference)
        }
        _ => enumerate_states_scan(pattern),
    }
}

/// Build OFG(C) over the enumerated state set.
pub fn build_flip_graph(pattern: &CreasePattern) -> Result<FlipGraph> {
    build_flip_graph_over(pattern, enumerate_states(pattern)?)
}

pub fn build_flip_graph_over(
    pattern: &CreasePattern,
    states: Vec<MvAssignment>,
) -> Result<FlipGraph> {
    let index: HashMap<&MvAssignment, usize> =
        states.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut adjacency = vec![Vec::new(); states.len()];
    for (i, state) in states.iter().enumerate() {
        for face in 0..pattern.face_count() {
            if pattern.face_creases(face).is_empty() {
                continue;
            }
            if flip_stays_valid(pattern, state, face) {
                let next = pattern.flip_face(state, face);
                let j = *index.get(&next).ok_or(Error::NotLocallyFlatFoldable)?;
                adjacency[i].push((j, face));
            }
        }
    }
    Ok(FlipGraph { states, adjacency })
}

/// Summary invariants computed by breadth-first search over distinct edges.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct GraphInvariants {
    pub states: usize,
    pub components: usize,
    pub connected: bool,
    /// Largest eccentricity within any component.
    pub diameter: usize,
    /// Histogram over per-face-label degree (flippable-face counts).
    pub degree_histogram: Vec<(usize, usize)>,
    pub bipartite: bool,
}

pub fn graph_invariants(graph: &FlipGraph) -> GraphInvariants {
    let n = graph.states.len();
    let mut component = vec![usize::MAX; n];
    let mut components = 0;
    let mut diameter = 0;
    let mut bipartite = true;
    for start in 0..n {
        if component[start] != usize::MAX {
            continue;
        }
        let id = components;
        components += 1;
        let mut color = HashMap::new();
        color.insert(start, 0u8);
        component[start] = id;
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for t in graph.distinct_neighbors(s) {
                if component[t] == usize::MAX {
                    component[t] = id;
                    color.insert(t, 1 - color[&s]);
                    queue.push_back(t);
                } else if color[&t] == color[&s] {
                    bipartite = false;
                }
            }
        }
    }
    for start in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(s) = queue.pop_front() {
            for t in graph.distinct_neighbors(s) {
                if dist[t] == usize::MAX {
                    dist[t] = dist[s] + 1;
                    diameter = diameter.max(dist[t]);
                    queue.push_back(t);
                }
            }
        }
    }
    let mut histogram: std::collections::BTreeMap<usize, usize> = Default::default();
    for s in 0..n {
        *histogram.entry(graph.degree(s)).or_default() += 1;
    }
    GraphInvariants {
        states: n,
        components,
        connected: components <= 1,
        diameter,
        degree_histogram: histogram.into_iter().collect(),
        bipartite,
    }
}

/// The hypercube labeling of a square-twist flip graph: coordinate `i` says
/// which of its two templates the `i`-th non-rectangular face carries, read
/// off as that face's crease values relative to the reference assignment.
#[derive(Debug, Clone)]
pub struct HypercubeWitness {
    /// Face id per hypercube coordinate.
    pub coordinate_faces: Vec<usize>,
    /// Per state, its coordinate vector as a bitmask.
    pub labels: Vec<u64>,
}

/// Verify OFG(square twist) is the `d`-dimensional hypercube with `d` the
/// number of non-rectangular faces, via the explicit template labeling.
/// Reports the first violated edge on failure.
pub fn check_hypercube_isomorphism(
    graph: &FlipGraph,
    pattern: &CreasePattern,
) -> Result<HypercubeWitness> {
    if pattern.family() != Family::SquareTwist {
        return Err(Error::WrongFamily {
            expected: "square_twist",
            got: pattern.family().tag().into(),
        });
    }
    let class = pattern.face_classification()?;
    let wings: Vec<usize> = (0..pattern.face_count())
        .filter(|&f| class.shape[f] == ShapeTag::NonRectangular)
        .collect();
    let d = wings.len();
    if graph.states.len() != 1usize << d {
        return Err(Error::MalformedPattern(format!(
            "expected 2^{d} states, found {}",
            graph.states.len()
        )));
    }
    let reference = reference_assignment(pattern)?;
    let label_of = |state: &MvAssignment| -> Result<u64> {
        let mut label = 0u64;
        for (i, &w) in wings.iter().enumerate() {
            let creases = pattern.face_creases(w);
            let same = creases.iter().all(|&c| state.value(c) == reference.value(c));
            let negated = creases.iter().all(|&c| state.value(c) != reference.value(c));
            if !(same || negated) {
                return Err(Error::MalformedPattern(format!(
                    "face {w} is in neither template in state {state}"
                )));
            }
            if negated {
                label |= 1 << i;
            }
        }
        Ok(label)
    };
    let labels: Vec<u64> =
        graph.states.iter().map(label_of).collect::<Result<Vec<_>>>()?;
    let distinct: HashSet<u64> = labels.iter().copied().collect();
    if distinct.len() != graph.states.len() {
        return Err(Error::MalformedPattern("template labeling is not injective".into()));
    }
    for (i, nbrs) in graph.adjacency.iter().enumerate() {
        let mut seen_coords = HashSet::new();
        for &(j, face) in nbrs {
            let diff = labels[i] ^ labels[j];
            if diff.count_ones() != 1 {
                return Err(Error::MalformedPattern(format!(
                    "edge {} -> {} is not a unit hypercube move",
                    graph.states[i], graph.states[j]
                )));
            }
            let coord = diff.trailing_zeros() as usize;
            if wings[coord] != face {
                return Err(Error::MalformedPattern(format!(
                    "edge flips face {face} but moves coordinate of face {}",
                    wings[coord]
                )));
            }
            seen_coords.insert(coord);
        }
        if seen_coords.len() != d {
            return Err(Error::MalformedPattern(format!(
                "state {} has degree {} in the labeling, expected {d}",
                graph.states[i],
                seen_coords.len()
            )));
        }
    }
    Ok(HypercubeWitness { coordinate_faces: wings, labels })
}

/// Verify OFG(square grid) matches the Cayley graph of F_2^n modulo the
/// all-ones vector: 2^(n-1) states, n-regular per face label, and the
/// face-flip coordinates of each state are defined up to complement.
pub fn check_quotient_hypercube(graph: &FlipGraph, pattern: &CreasePattern) -> Result<()> {
    let layout = GridLayout::from_pattern(pattern)?;
    let n_faces = layout.rows * layout.cols;
    if graph.states.len() != 1usize << (n_faces - 1) {
        return Err(Error::MalformedPattern(format!(
            "expected 2^{} states, found {}",
            n_faces - 1,
            graph.states.len()
        )));
    }
    let reference = reference_assignment(pattern)?;
    // phi(state): which faces must flip to reach it from the reference.
    // Solve by propagation over the face grid: fix face 0, then each crease
    // difference determines the neighbor's indicator.
    let phi = |state: &MvAssignment| -> Result<u64> {
        let mut flip: Vec<Option<bool>> = vec![None; n_faces];
        flip[0] = Some(false);
        let mut queue = VecDeque::from([0usize]);
        while let Some(f) = queue.pop_front() {
            for &(g, crease) in pattern.face_adjacency(f) {
                let differs = state.value(crease) != reference.value(crease);
                let want = flip[f].unwrap() ^ differs;
                match flip[g] {
                    None => {
                        flip[g] = Some(want);
                        queue.push_back(g);
                    }
                    Some(have) if have != want => {
                        return Err(Error::MalformedPattern(format!(
                            "state {state} is not a face-flip image of the reference"
                        )));
                    }
                    _ => {}
                }
            }
        }
        let mut mask = 0u64;
        for (f, v) in flip.iter().enumerate() {
            if v.ok_or_else(|| Error::MalformedPattern("face grid not connected".into()))? {
                mask |= 1 << f;
            }
        }
        // Canonical representative of {mask, complement}.
        let complement = !mask & ((1u64 << n_faces) - 1);
        Ok(mask.min(complement))
    };
    let labels: Vec<u64> =
        graph.states.iter().map(phi).collect::<Result<Vec<_>>>()?;
    let distinct: HashSet<u64> = labels.iter().copied().collect();
    if distinct.len() != graph.states.len() {
        return Err(Error::MalformedPattern("quotient labeling is not injective".into()));
    }
    let full = (1u64 << n_faces) - 1;
    for (i, nbrs) in graph.adjacency.iter().enumerate() {
        if nbrs.len() != n_faces {
            return Err(Error::MalformedPattern(format!(
                "state {} has {} face moves, expected {n_faces}",
                graph.states[i],
                nbrs.len()
            )));
        }
        for &(j, face) in nbrs {
            let diff = labels[i] ^ labels[j];
            let unit = 1u64 << face;
            if diff != unit && diff != full ^ unit {
                return Err(Error::MalformedPattern(format!(
                    "edge {} -> {} does not move by face {face} in the quotient",
                    graph.states[i], graph.states[j]
                )));
            }
        }
    }
    Ok(())
}
