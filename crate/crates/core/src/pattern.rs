//! Crease-pattern data model: vertices, creases, faces, vertex stars, and
//! mountain-valley assignments stored as packed bit vectors.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Absolute tolerance for angle comparisons, in radians.
pub const ANGLE_TOL: f64 = 1e-9;

/// Mountain in the sign convention `sigma(e) = -1`.
pub const MOUNTAIN: i8 = -1;
/// Valley in the sign convention `sigma(e) = +1`.
pub const VALLEY: i8 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    SquareGrid,
    SquareTwist,
    Miura,
    Triangle,
    Kite,
    SingleVertex,
    Custom,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::SquareGrid => "square_grid",
            Family::SquareTwist => "square_twist",
            Family::Miura => "miura",
            Family::Triangle => "triangle",
            Family::Kite => "kite",
            Family::SingleVertex => "single_vertex",
            Family::Custom => "custom",
        }
    }
}

/// Geometric class of a crease, assigned by the generator that emitted it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CreaseClass {
    Horizontal,
    Vertical,
    Zigzag,
    Diagonal,
    Central,
    Pleat,
    ApexSide,
    TailSide,
    Spoke,
    Unclassified,
}

#[derive(Debug, Clone, Copy)]
pub struct Crease {
    pub endpoints: [usize; 2],
    pub class: CreaseClass,
}

/// Exact symbolic angle `pi * num / den + coeff * theta`, used by generators so
/// equality checks do not depend on floating tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactAngle {
    pub pi_num: i32,
    pub pi_den: i32,
    pub theta_coeff: i32,
}

#[derive(Debug, Clone, Copy)]
pub struct SectorAngle {
    pub radians: f64,
    pub exact: Option<ExactAngle>,
}

impl SectorAngle {
    pub fn measured(radians: f64) -> Self {
        SectorAngle { radians, exact: None }
    }

    /// Snap a measured angle onto the family's exact menu when within tolerance.
    pub fn snapped(radians: f64, theta: Option<f64>) -> Self {
        for k in 1..=24i32 {
            let cand = std::f64::consts::PI * k as f64 / 12.0;
            if (radians - cand).abs() <= ANGLE_TOL {
                let g = gcd(k, 12);
                return SectorAngle {
                    radians,
                    exact: Some(ExactAngle { pi_num: k / g, pi_den: 12 / g, theta_coeff: 0 }),
                };
            }
        }
        if let Some(t) = theta {
            let menu = [
                (0, 1, 1),
                (1, 1, -1),
                (1, 2, -1),
                (1, 2, 1),
                (0, 1, 2),
                (1, 1, -2),
            ];
            for (pn, pd, tc) in menu {
                let cand = std::f64::consts::PI * pn as f64 / pd as f64 + tc as f64 * t;
                if (radians - cand).abs() <= ANGLE_TOL {
                    return SectorAngle {
                        radians,
                        exact: Some(ExactAngle { pi_num: pn, pi_den: pd, theta_coeff: tc }),
                    };
                }
            }
        }
        SectorAngle::measured(radians)
    }

    pub fn approx_eq(&self, other: &SectorAngle) -> bool {
        if let (Some(a), Some(b)) = (&self.exact, &other.exact) {
            if a == b {
                return true;
            }
        }
        (self.radians - other.radians).abs() <= ANGLE_TOL
    }

    /// Strictly-less comparison with the shared tolerance.
    pub fn lt_strict(&self, other: &SectorAngle) -> bool {
        self.radians < other.radians - ANGLE_TOL
    }

    pub fn is(&self, radians: f64) -> bool {
        (self.radians - radians).abs() <= ANGLE_TOL
    }
}

fn gcd(a: i32, b: i32) -> i32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Cyclic sequence of creases and sector angles around one interior vertex.
/// `creases[i]` and `creases[i+1]` bound `angles[i]`; order is counterclockwise.
#[derive(Debug, Clone)]
pub struct VertexStar {
    creases: Vec<usize>,
    angles: Vec<SectorAngle>,
}

impl VertexStar {
    pub fn new(creases: Vec<usize>, angles: Vec<SectorAngle>) -> Result<Self> {
        if creases.len() != angles.len() {
            return Err(Error::MalformedPattern(format!(
                "star has {} creases but {} sector angles",
                creases.len(),
                angles.len()
            )));
        }
        if !creases.len().is_multiple_of(2) || creases.is_empty() {
            return Err(Error::OddVertexDegree { vertex: usize::MAX, degree: creases.len() });
        }
        let sum: f64 = angles.iter().map(|a| a.radians).sum();
        if (sum - 2.0 * std::f64::consts::PI).abs() > 1e-7 {
            return Err(Error::MalformedPattern(format!(
                "sector angles sum to {sum} rad, expected 2*pi"
            )));
        }
        if angles.iter().any(|a| a.radians <= ANGLE_TOL) {
            return Err(Error::MalformedPattern("zero-width sector".into()));
        }
        Ok(VertexStar { creases, angles })
    }

    /// Convenience constructor for tests and single-vertex analysis: crease ids
    /// are 0..angles.len() in rotational order.
    pub fn from_angles(angles_rad: &[f64]) -> Result<Self> {
        let creases = (0..angles_rad.len()).collect();
        let angles = angles_rad.iter().map(|&a| SectorAngle::measured(a)).collect();
        VertexStar::new(creases, angles)
    }

    pub fn degree(&self) -> usize {
        self.creases.len()
    }

    pub fn creases(&self) -> &[usize] {
        &self.creases
    }

    pub fn angles(&self) -> &[SectorAngle] {
        &self.angles
    }

    /// Restrict an assignment to this star, in star order.
    pub fn restrict(&self, assignment: &MvAssignment) -> Vec<i8> {
        self.creases.iter().map(|&e| assignment.value(e)).collect()
    }
}

/// Dense mountain-valley assignment over the crease set of one pattern.
/// Bit `i` set means crease `i` is a valley (`+1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MvAssignment {
    words: Vec<u64>,
    len: usize,
}

impl MvAssignment {
    pub fn all_mountain(len: usize) -> Self {
        MvAssignment { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn from_values(values: &[i8]) -> Self {
        let mut a = MvAssignment::all_mountain(values.len());
        for (i, &v) in values.iter().enumerate() {
            if v > 0 {
                a.set(i, VALLEY);
            }
        }
        a
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_valley(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// `-1` mountain, `+1` valley.
    pub fn value(&self, i: usize) -> i8 {
        if self.is_valley(i) { VALLEY } else { MOUNTAIN }
    }

    pub fn set(&mut self, i: usize, value: i8) {
        debug_assert!(i < self.len);
        if value > 0 {
            self.words[i / 64] |= 1 << (i % 64);
        } else {
            self.words[i / 64] &= !(1 << (i % 64));
        }
    }

    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn negated(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.len {
            out.flip(i);
        }
        out
    }

    pub fn count_valleys(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_mountains(&self) -> usize {
        self.len - self.count_valleys()
    }

    /// Sum of sigma values over all creases.
    pub fn signed_sum(&self) -> i64 {
        self.count_valleys() as i64 - self.count_mountains() as i64
    }

    pub fn values(&self) -> Vec<i8> {
        (0..self.len).map(|i| self.value(i)).collect()
    }

    /// Stable key for hashing and canonical ordering.
    pub fn packed_words(&self) -> &[u64] {
        &self.words
    }
}

impl PartialOrd for MvAssignment {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic over crease index 0,1,2,... with mountain before valley.
impl Ord for MvAssignment {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        debug_assert_eq!(self.len, other.len);
        for i in 0..self.len {
            let c = self.is_valley(i).cmp(&other.is_valley(i));
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
        std::cmp::Ordering::Equal
    }
}

impl fmt::Display for MvAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.is_valley(i) { "V" } else { "M" })?;
        }
        Ok(())
    }
}

impl FromStr for MvAssignment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut a = MvAssignment::all_mountain(s.len());
        for (i, ch) in s.chars().enumerate() {
            match ch {
                'M' | 'm' => {}
                'V' | 'v' => a.set(i, VALLEY),
                other => {
                    return Err(Error::MalformedPattern(format!(
                        "unexpected character {other:?} in MV string"
                    )))
                }
            }
        }
        Ok(a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeTag {
    Rectangular,
    NonRectangular,
    Other,
}

/// Proper 2-coloring of the face-adjacency graph plus per-face shape tags.
#[derive(Debug, Clone)]
pub struct FaceClass {
    pub parity: Vec<u8>,
    pub shape: Vec<ShapeTag>,
}

/// Planar straight-line crease pattern with derived incidence structure.
///
/// Immutable after construction; all chain and search code shares it by
/// reference.
#[derive(Debug, Clone)]
pub struct CreasePattern {
    vertices: Vec<[f64; 2]>,
    creases: Vec<Crease>,
    faces: Vec<Vec<usize>>,
    interior: Vec<bool>,
    family: Family,
    theta: Option<f64>,
    stars: Vec<Option<VertexStar>>,
    crease_faces: Vec<[usize; 2]>,
    face_creases: Vec<Vec<usize>>,
    face_adjacency: Vec<Vec<(usize, usize)>>,
}

impl CreasePattern {
    /// Assemble a pattern from explicit face polygons. Creases must each occur
    /// as a side of exactly two faces; face sides that are not creases are
    /// paper boundary.
    pub fn from_faces(
        vertices: Vec<[f64; 2]>,
        creases: Vec<Crease>,
        faces: Vec<Vec<usize>>,
        family: Family,
        theta: Option<f64>,
    ) -> Result<Self> {
        let nv = vertices.len();
        for c in &creases {
            if c.endpoints[0] >= nv || c.endpoints[1] >= nv || c.endpoints[0] == c.endpoints[1] {
                return Err(Error::MalformedPattern("crease endpoint out of range".into()));
            }
        }
        let mut edge_to_crease: HashMap<(usize, usize), usize> = HashMap::new();
        for (i, c) in creases.iter().enumerate() {
            let key = ordered(c.endpoints[0], c.endpoints[1]);
            if edge_to_crease.insert(key, i).is_some() {
                return Err(Error::MalformedPattern(format!("duplicate crease {key:?}")));
            }
        }

        let mut crease_borders: Vec<Vec<usize>> = vec![Vec::new(); creases.len()];
        let mut face_creases: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
        for (fi, cycle) in faces.iter().enumerate() {
            if cycle.len() < 3 {
                return Err(Error::MalformedPattern(format!("face {fi} has fewer than 3 vertices")));
            }
            if signed_area(&vertices, cycle) <= 0.0 {
                return Err(Error::MalformedPattern(format!("face {fi} is not counterclockwise")));
            }
            for k in 0..cycle.len() {
                let a = cycle[k];
                let b = cycle[(k + 1) % cycle.len()];
                if let Some(&ci) = edge_to_crease.get(&ordered(a, b)) {
                    crease_borders[ci].push(fi);
                    face_creases[fi].push(ci);
                }
            }
        }
        let mut crease_faces = Vec::with_capacity(creases.len());
        for (ci, borders) in crease_borders.iter().enumerate() {
            if borders.len() != 2 {
                return Err(Error::MalformedPattern(format!(
                    "crease {ci} borders {} faces, expected 2",
                    borders.len()
                )));
            }
            crease_faces.push([borders[0], borders[1]]);
        }

        // Interior test: face corner angles around the vertex close up to 2*pi.
        let mut corner_sum = vec![0.0f64; nv];
        for cycle in &faces {
            let n = cycle.len();
            for k in 0..n {
                let v = cycle[k];
                let p = cycle[(k + n - 1) % n];
                let q = cycle[(k + 1) % n];
                corner_sum[v] += interior_angle(&vertices, p, v, q);
            }
        }
        let interior: Vec<bool> = corner_sum
            .iter()
            .map(|&s| (s - 2.0 * std::f64::consts::PI).abs() < 1e-6)
            .collect();

        // Stars: incident creases of each interior vertex in ccw order.
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for (ci, c) in creases.iter().enumerate() {
            incident[c.endpoints[0]].push(ci);
            incident[c.endpoints[1]].push(ci);
        }
        let mut stars: Vec<Option<VertexStar>> = Vec::with_capacity(nv);
        for v in 0..nv {
            if !interior[v] {
                stars.push(None);
                continue;
            }
            let mut dirs: Vec<(f64, usize)> = incident[v]
                .iter()
                .map(|&ci| {
                    let c = &creases[ci];
                    let other = if c.endpoints[0] == v { c.endpoints[1] } else { c.endpoints[0] };
                    let dx = vertices[other][0] - vertices[v][0];
                    let dy = vertices[other][1] - vertices[v][1];
                    (dy.atan2(dx), ci)
                })
                .collect();
            if !dirs.len().is_multiple_of(2) || dirs.is_empty() {
                return Err(Error::OddVertexDegree { vertex: v, degree: dirs.len() });
            }
            dirs.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
            let star_creases: Vec<usize> = dirs.iter().map(|&(_, ci)| ci).collect();
            let mut angles = Vec::with_capacity(dirs.len());
            for k in 0..dirs.len() {
                let a0 = dirs[k].0;
                let a1 = dirs[(k + 1) % dirs.len()].0;
                let mut d = a1 - a0;
                if k + 1 == dirs.len() {
                    d += 2.0 * std::f64::consts::PI;
                }
                angles.push(SectorAngle::snapped(d, theta));
            }
            stars.push(Some(VertexStar::new(star_creases, angles).map_err(|e| match e {
                Error::OddVertexDegree { degree, .. } => Error::OddVertexDegree { vertex: v, degree },
                other => other,
            })?));
        }

        let mut face_adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
        for (ci, &[f0, f1]) in crease_faces.iter().enumerate() {
            face_adjacency[f0].push((f1, ci));
            face_adjacency[f1].push((f0, ci));
        }

        Ok(CreasePattern {
            vertices,
            creases,
            faces,
            interior,
            family,
            theta,
            stars,
            crease_faces,
            face_creases,
            face_adjacency,
        })
    }

    /// Assemble from an edge soup: creases plus explicit paper-boundary edges.
    /// Faces are recovered by a planar face walk.
    pub fn from_edges(
        vertices: Vec<[f64; 2]>,
        creases: Vec<Crease>,
        boundary: Vec<[usize; 2]>,
        family: Family,
        theta: Option<f64>,
    ) -> Result<Self> {
        let mut all_edges: Vec<[usize; 2]> = creases.iter().map(|c| c.endpoints).collect();
        all_edges.extend(boundary.iter().copied());
        let faces = walk_faces(&vertices, &all_edges)?;
        CreasePattern::from_faces(vertices, creases, faces, family, theta)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn theta(&self) -> Option<f64> {
        self.theta
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> [f64; 2] {
        self.vertices[i]
    }

    pub fn vertices(&self) -> &[[f64; 2]] {
        &self.vertices
    }

    pub fn crease_count(&self) -> usize {
        self.creases.len()
    }

    pub fn crease(&self, i: usize) -> &Crease {
        &self.creases[i]
    }

    pub fn creases(&self) -> &[Crease] {
        &self.creases
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn face(&self, i: usize) -> &[usize] {
        &self.faces[i]
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn is_interior(&self, v: usize) -> bool {
        self.interior[v]
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.vertices.len()).filter(|&v| self.interior[v])
    }

    pub fn star(&self, v: usize) -> Option<&VertexStar> {
        self.stars[v].as_ref()
    }

    /// The two faces bordering a crease.
    pub fn crease_faces(&self, c: usize) -> [usize; 2] {
        self.crease_faces[c]
    }

    /// Creases bordering a face.
    pub fn face_creases(&self, f: usize) -> &[usize] {
        &self.face_creases[f]
    }

    pub fn face_adjacency(&self, f: usize) -> &[(usize, usize)] {
        &self.face_adjacency[f]
    }

    /// Face sides that are not creases: the paper boundary, for rendering.
    pub fn boundary_segments(&self) -> Vec<[usize; 2]> {
        let crease_set: std::collections::HashSet<(usize, usize)> =
            self.creases.iter().map(|c| ordered(c.endpoints[0], c.endpoints[1])).collect();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for cycle in &self.faces {
            for k in 0..cycle.len() {
                let key = ordered(cycle[k], cycle[(k + 1) % cycle.len()]);
                if !crease_set.contains(&key) && seen.insert(key) {
                    out.push([key.0, key.1]);
                }
            }
        }
        out
    }

    /// New assignment with every crease bordering `face` negated.
    pub fn flip_face(&self, assignment: &MvAssignment, face: usize) -> MvAssignment {
        let mut out = assignment.clone();
        for &c in &self.face_creases[face] {
            out.flip(c);
        }
        out
    }

    /// Breadth-first proper 2-coloring of face adjacency plus shape tags.
    pub fn face_classification(&self) -> Result<FaceClass> {
        let n = self.faces.len();
        let mut parity: Vec<Option<u8>> = vec![None; n];
        for start in 0..n {
            if parity[start].is_some() {
                continue;
            }
            parity[start] = Some(0);
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let p = parity[f].unwrap();
                for &(g, _) in &self.face_adjacency[f] {
                    match parity[g] {
                        None => {
                            parity[g] = Some(1 - p);
                            queue.push_back(g);
                        }
                        Some(q) if q == p => return Err(Error::NotBipartite { face: g }),
                        _ => {}
                    }
                }
            }
        }
        let shape = (0..n).map(|f| self.face_shape(f)).collect();
        Ok(FaceClass { parity: parity.into_iter().map(|p| p.unwrap()).collect(), shape })
    }

    fn face_shape(&self, f: usize) -> ShapeTag {
        let cycle = &self.faces[f];
        let n = cycle.len();
        let mut corners = Vec::new();
        for k in 0..n {
            let ang = interior_angle(
                &self.vertices,
                cycle[(k + n - 1) % n],
                cycle[k],
                cycle[(k + 1) % n],
            );
            if (ang - std::f64::consts::PI).abs() > 1e-6 {
                corners.push(ang);
            }
        }
        if corners.len() != 4 {
            return ShapeTag::Other;
        }
        if corners.iter().all(|a| (a - std::f64::consts::FRAC_PI_2).abs() < 1e-6) {
            ShapeTag::Rectangular
        } else {
            ShapeTag::NonRectangular
        }
    }

    pub fn assert_covers(&self, assignment: &MvAssignment) -> Result<()> {
        if assignment.len() != self.creases.len() {
            return Err(Error::AssignmentLength {
                got: assignment.len(),
                want: self.creases.len(),
            });
        }
        Ok(())
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b { (a, b) } else { (b, a) }
}

fn signed_area(vertices: &[[f64; 2]], cycle: &[usize]) -> f64 {
    let mut s = 0.0;
    for k in 0..cycle.len() {
        let [x0, y0] = vertices[cycle[k]];
        let [x1, y1] = vertices[cycle[(k + 1) % cycle.len()]];
        s += x0 * y1 - x1 * y0;
    }
    s / 2.0
}

/// Interior angle at `v` of the ccw polygon corner `p -> v -> q`, in (0, 2*pi).
fn interior_angle(vertices: &[[f64; 2]], p: usize, v: usize, q: usize) -> f64 {
    let ax = vertices[q][0] - vertices[v][0];
    let ay = vertices[q][1] - vertices[v][1];
    let bx = vertices[p][0] - vertices[v][0];
    let by = vertices[p][1] - vertices[v][1];
    let mut d = by.atan2(bx) - ay.atan2(ax);
    if d <= 0.0 {
        d += 2.0 * std::f64::consts::PI;
    }
    d
}

/// Recover the interior faces of a planar straight-line graph as ccw vertex
/// cycles. The single clockwise outer cycle is discarded.
fn walk_faces(vertices: &[[f64; 2]], edges: &[[usize; 2]]) -> Result<Vec<Vec<usize>>> {
    let nv = vertices.len();
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); nv];
    for &[a, b] in edges {
        nbrs[a].push(b);
        nbrs[b].push(a);
    }
    for v in 0..nv {
        let origin = vertices[v];
        nbrs[v].sort_by(|&a, &b| {
            let ang = |w: usize| {
                (vertices[w][1] - origin[1]).atan2(vertices[w][0] - origin[0])
            };
            ang(a).partial_cmp(&ang(b)).unwrap()
        });
        nbrs[v].dedup();
    }

    let mut used: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut faces = Vec::new();
    let mut outer_seen = false;
    for &[a, b] in edges {
        for (u, v) in [(a, b), (b, a)] {
            if used.contains(&(u, v)) {
                continue;
            }
            let mut cycle = Vec::new();
            let (mut cu, mut cv) = (u, v);
            loop {
                used.insert((cu, cv));
                cycle.push(cu);
                // Next edge clockwise from the reversed direction: predecessor
                // of cu in cv's ccw-sorted neighbor list.
                let list = &nbrs[cv];
                let pos = list
                    .iter()
                    .position(|&w| w == cu)
                    .ok_or_else(|| Error::MalformedPattern("inconsistent adjacency".into()))?;
                let next = list[(pos + list.len() - 1) % list.len()];
                cu = cv;
                cv = next;
                if (cu, cv) == (u, v) {
                    break;
                }
                if cycle.len() > edges.len() * 2 + 2 {
                    return Err(Error::MalformedPattern("face walk did not close".into()));
                }
            }
            if signed_area(vertices, &cycle) > 0.0 {
                faces.push(cycle);
            } else {
                outer_seen = true;
            }
        }
    }
    if !outer_seen {
        return Err(Error::MalformedPattern("no outer boundary cycle found".into()));
    }
    Ok(faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mv_assignment_roundtrip_and_order() {
        let a: MvAssignment = "MVVM".parse().unwrap();
        assert_eq!(a.to_string(), "MVVM");
        assert_eq!(a.value(0), MOUNTAIN);
        assert_eq!(a.value(1), VALLEY);
        assert_eq!(a.signed_sum(), 0);
        let b: MvAssignment = "MVVV".parse().unwrap();
        assert!(a < b);
        let m: MvAssignment = "MMMM".parse().unwrap();
        assert!(m < a);
    }

    #[test]
    fn star_rejects_odd_degree() {
        let third = 2.0 * std::f64::consts::PI / 3.0;
        assert!(VertexStar::from_angles(&[third, third, third]).is_err());
    }

    #[test]
    fn unit_square_from_edges() {
        // A unit square split by one diagonal crease.
        let vertices = vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]];
        let creases = vec![Crease { endpoints: [0, 2], class: CreaseClass::Diagonal }];
        let boundary = vec![[0, 1], [1, 2], [2, 3], [3, 0]];
        let cp =
            CreasePattern::from_edges(vertices, creases, boundary, Family::Custom, None).unwrap();
        assert_eq!(cp.face_count(), 2);
        assert_eq!(cp.crease_faces(0), [0, 1]);
        assert!(cp.interior_vertices().next().is_none());
    }
}
