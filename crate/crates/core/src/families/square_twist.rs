//! Square-twist tessellations. Each unit tile holds a central square of side
//! 1/2 rotated 45 degrees whose corners carry the (45, 90, 135, 90) stars;
//! two axis-aligned pleat creases leave each corner in pinwheel order.
//!
//! Alternating mode mirrors tile chirality checkerboard-fashion on a square
//! lattice, producing trapezoid wing faces. Uniform mode keeps one chirality
//! and shears the lattice (tile (i,j) sits at (j - i*s, i + j*s) with
//! s = sqrt(2)/4), producing parallelogram wings; the paper outline is the
//! staircase union of the tiles.

use std::collections::HashMap;

use crate::error::Result;
use crate::families::TwistMode;
use crate::pattern::{Crease, CreaseClass, CreasePattern, Family};

const S: f64 = std::f64::consts::SQRT_2 / 4.0;
const KEY_SCALE: f64 = (1u64 << 20) as f64;

struct Emitter {
    pool: HashMap<(i64, i64), usize>,
    vertices: Vec<[f64; 2]>,
    creases: Vec<Crease>,
    boundary: Vec<[usize; 2]>,
}

impl Emitter {
    fn new() -> Self {
        Emitter {
            pool: HashMap::new(),
            vertices: Vec::new(),
            creases: Vec::new(),
            boundary: Vec::new(),
        }
    }

    fn vid(&mut self, p: [f64; 2]) -> usize {
        let key = ((p[0] * KEY_SCALE).round() as i64, (p[1] * KEY_SCALE).round() as i64);
        if let Some(&v) = self.pool.get(&key) {
            return v;
        }
        let v = self.vertices.len();
        self.vertices.push(p);
        self.pool.insert(key, v);
        v
    }

    fn crease(&mut self, a: [f64; 2], b: [f64; 2], class: CreaseClass) {
        let va = self.vid(a);
        let vb = self.vid(b);
        self.creases.push(Crease { endpoints: [va, vb], class });
    }

    fn boundary_run(&mut self, mut points: Vec<[f64; 2]>, horizontal: bool) {
        points.sort_by(|a, b| {
            let (ka, kb) = if horizontal { (a[0], b[0]) } else { (a[1], b[1]) };
            ka.partial_cmp(&kb).unwrap()
        });
        points.dedup_by(|a, b| (a[0] - b[0]).abs() < 1e-9 && (a[1] - b[1]).abs() < 1e-9);
        for w in points.windows(2) {
            let va = self.vid(w[0]);
            let vb = self.vid(w[1]);
            self.boundary.push([va, vb]);
        }
    }
}

/// Tile-local crease segments for the counterclockwise pinwheel chirality.
fn tile_segments() -> Vec<([f64; 2], [f64; 2], CreaseClass)> {
    let n = [0.5, 0.5 + S];
    let e = [0.5 + S, 0.5];
    let s = [0.5, 0.5 - S];
    let w = [0.5 - S, 0.5];
    vec![
        (n, e, CreaseClass::Central),
        (e, s, CreaseClass::Central),
        (s, w, CreaseClass::Central),
        (w, n, CreaseClass::Central),
        // Pinwheel pleats: E sends east+south, N north+east, W west+north,
        // S south+west.
        (e, [1.0, 0.5], CreaseClass::Pleat),
        (e, [0.5 + S, 0.0], CreaseClass::Pleat),
        (n, [0.5, 1.0], CreaseClass::Pleat),
        (n, [1.0, 0.5 + S], CreaseClass::Pleat),
        (w, [0.0, 0.5], CreaseClass::Pleat),
        (w, [0.5 - S, 1.0], CreaseClass::Pleat),
        (s, [0.5, 0.0], CreaseClass::Pleat),
        (s, [0.0, 0.5 - S], CreaseClass::Pleat),
    ]
}

pub fn generate(rows: usize, cols: usize, mode: TwistMode) -> Result<CreasePattern> {
    let mut em = Emitter::new();
    let segments = tile_segments();
    for i in 0..rows {
        for j in 0..cols {
            let place: Box<dyn Fn([f64; 2]) -> [f64; 2]> = match mode {
                TwistMode::Alternating => Box::new(move |p: [f64; 2]| {
                    let x = if j % 2 == 1 { 1.0 - p[0] } else { p[0] };
                    let y = if i % 2 == 1 { 1.0 - p[1] } else { p[1] };
                    [j as f64 + x, i as f64 + y]
                }),
                TwistMode::Uniform => Box::new(move |p: [f64; 2]| {
                    [j as f64 - i as f64 * S + p[0], i as f64 + j as f64 * S + p[1]]
                }),
            };
            for (a, b, class) in &segments {
                em.crease(place(*a), place(*b), *class);
            }
            if mode == TwistMode::Uniform {
                uniform_tile_boundary(&mut em, rows, cols, i, j);
            }
        }
    }
    if mode == TwistMode::Alternating {
        alternating_boundary(&mut em, rows, cols);
    }
    let Emitter { vertices, creases, boundary, .. } = em;
    CreasePattern::from_edges(vertices, creases, boundary, Family::SquareTwist, None)
}

/// The alternating tiling fills an axis-aligned rectangle; its outline is the
/// bounding box subdivided at the pleat feet that land on it.
fn alternating_boundary(em: &mut Emitter, rows: usize, cols: usize) {
    let (w, h) = (cols as f64, rows as f64);
    let mut bottom = vec![[0.0, 0.0], [w, 0.0]];
    let mut top = vec![[0.0, h], [w, h]];
    let mut left = vec![[0.0, 0.0], [0.0, h]];
    let mut right = vec![[w, 0.0], [w, h]];
    for p in em.vertices.clone() {
        if p[1].abs() < 1e-9 {
            bottom.push(p);
        }
        if (p[1] - h).abs() < 1e-9 {
            top.push(p);
        }
        if p[0].abs() < 1e-9 {
            left.push(p);
        }
        if (p[0] - w).abs() < 1e-9 {
            right.push(p);
        }
    }
    em.boundary_run(bottom, true);
    em.boundary_run(top, true);
    em.boundary_run(left, false);
    em.boundary_run(right, false);
}

/// Boundary pieces contributed by one tile of the sheared uniform tiling:
/// whole sides on the outline, plus the staircase notches where the shear
/// leaves a neighbor covering only part of a side.
fn uniform_tile_boundary(em: &mut Emitter, rows: usize, cols: usize, i: usize, j: usize) {
    let ox = j as f64 - i as f64 * S;
    let oy = i as f64 + j as f64 * S;
    let side = |em: &mut Emitter, fixed: f64, lo: f64, hi: f64, vertical: bool| {
        let mut pts = Vec::new();
        for p in em.vertices.clone() {
            let (f, t) = if vertical { (p[0], p[1]) } else { (p[1], p[0]) };
            if (f - fixed).abs() < 1e-9 && t > lo - 1e-9 && t < hi + 1e-9 {
                pts.push(p);
            }
        }
        pts.push(if vertical { [fixed, lo] } else { [lo, fixed] });
        pts.push(if vertical { [fixed, hi] } else { [hi, fixed] });
        em.boundary_run(pts, !vertical);
    };
    // East side.
    if j + 1 < cols {
        side(em, ox + 1.0, oy, oy + S, true);
    } else {
        side(em, ox + 1.0, oy, oy + 1.0, true);
    }
    // West side.
    if j > 0 {
        side(em, ox, oy + 1.0 - S, oy + 1.0, true);
    } else {
        side(em, ox, oy, oy + 1.0, true);
    }
    // North side.
    if i + 1 < rows {
        side(em, oy + 1.0, ox + 1.0 - S, ox + 1.0, false);
    } else {
        side(em, oy + 1.0, ox, ox + 1.0, false);
    }
    // South side.
    if i > 0 {
        side(em, oy, ox, ox + S, false);
    } else {
        side(em, oy, ox, ox + 1.0, false);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{parity_components, reference_assignment};
    use crate::local::is_locally_flat_foldable;
    use crate::pattern::ShapeTag;

    fn non_rect_count(p: &CreasePattern) -> usize {
        let class = p.face_classification().unwrap();
        class.shape.iter().filter(|s| **s == ShapeTag::NonRectangular).count()
    }

    #[test]
    fn single_tile_structure() {
        let p = generate(1, 1, TwistMode::Alternating).unwrap();
        assert_eq!(p.face_count(), 9);
        assert_eq!(p.crease_count(), 12);
        assert_eq!(p.interior_vertices().count(), 4);
        for v in p.interior_vertices() {
            let star = p.star(v).unwrap();
            let mut sorted: Vec<f64> =
                star.angles().iter().map(|a| a.radians.to_degrees()).collect();
            sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (got, want) in sorted.iter().zip([45.0, 90.0, 90.0, 135.0]) {
                assert!((got - want).abs() < 1e-6, "star angles {sorted:?}");
            }
        }
        assert_eq!(non_rect_count(&p), 4);
        let a = reference_assignment(&p).unwrap();
        assert!(is_locally_flat_foldable(&p, &a));
        // Four sign-locked wing components of three creases each.
        let comps = parity_components(&p).unwrap();
        assert_eq!(comps.len(), 4);
        assert!(comps.iter().all(|c| c.len() == 3));
    }

    #[test]
    fn alternating_block_merges_wings() {
        let p = generate(1, 2, TwistMode::Alternating).unwrap();
        assert_eq!(p.face_count(), 15);
        assert_eq!(non_rect_count(&p), 7);
        let a = reference_assignment(&p).unwrap();
        assert!(is_locally_flat_foldable(&p, &a));
        let big = generate(2, 2, TwistMode::Alternating).unwrap();
        let a = reference_assignment(&big).unwrap();
        assert!(is_locally_flat_foldable(&big, &a));
    }

    #[test]
    fn uniform_block_has_parallelogram_wings() {
        let p = generate(2, 2, TwistMode::Uniform).unwrap();
        let a = reference_assignment(&p).unwrap();
        assert!(is_locally_flat_foldable(&p, &a));
        // Wing faces between horizontally adjacent twists are parallelograms:
        // look for a non-rectangular quad whose opposite sides are parallel.
        let class = p.face_classification().unwrap();
        let mut found_parallelogram = false;
        for f in 0..p.face_count() {
            if class.shape[f] != ShapeTag::NonRectangular {
                continue;
            }
            let cycle = p.face(f);
            let corners: Vec<[f64; 2]> = {
                let n = cycle.len();
                (0..n)
                    .filter(|&k| {
                        let a = p.vertex(cycle[(k + n - 1) % n]);
                        let b = p.vertex(cycle[k]);
                        let c = p.vertex(cycle[(k + 1) % n]);
                        let u = [b[0] - a[0], b[1] - a[1]];
                        let v = [c[0] - b[0], c[1] - b[1]];
                        (u[0] * v[1] - u[1] * v[0]).abs() > 1e-9
                    })
                    .map(|k| p.vertex(cycle[k]))
                    .collect()
            };
            if corners.len() == 4 {
                let d02 = [
                    corners[1][0] - corners[0][0] + corners[2][0] - corners[3][0],
                    corners[1][1] - corners[0][1] + corners[2][1] - corners[3][1],
                ];
                let opposite = [
                    corners[1][0] - corners[0][0] - (corners[2][0] - corners[3][0]),
                    corners[1][1] - corners[0][1] - (corners[2][1] - corners[3][1]),
                ];
                if opposite[0].abs() < 1e-9 && opposite[1].abs() < 1e-9 && d02 != [0.0, 0.0] {
                    found_parallelogram = true;
                }
            }
        }
        assert!(found_parallelogram, "uniform tiling should contain parallelogram wings");
    }

    #[test]
    fn every_interior_star_is_twist_or_straight() {
        for mode in [TwistMode::Alternating, TwistMode::Uniform] {
            let p = generate(2, 3, mode).unwrap();
            for v in p.interior_vertices() {
                let star = p.star(v).unwrap();
                assert!(star.degree() == 2 || star.degree() == 4);
            }
            let a = reference_assignment(&p).unwrap();
            assert!(is_locally_flat_foldable(&p, &a));
        }
    }
}
