//! The kite tessellation: congruent right kites (two opposite right angles,
//! apex angle theta, tail angle pi - theta) tiled by 180-degree rotation
//! about an edge midpoint, checkerboarded over the lattice spanned by (1, 0)
//! and (0, sin theta). Every interior vertex sees the cyclic star
//! (theta, 90, 180 - theta, 90), so no face is ever flippable while whole
//! sign-locked crease sets can be negated freely.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::families::parity_components;
use crate::pattern::{Crease, CreaseClass, CreasePattern, Family};

const KEY_SCALE: f64 = (1u64 << 20) as f64;

pub fn generate(rows: usize, cols: usize, theta: f64) -> Result<CreasePattern> {
    let c = theta.cos();
    let s0 = theta.sin();
    // Base kite, counterclockwise from the apex; roles per side.
    let v0 = [0.0, 0.0];
    let a2 = [(1.0 + c) / 2.0, -s0 / 2.0];
    let b = [1.0, 0.0];
    let a = [(1.0 + c) / 2.0, s0 / 2.0];
    let base = [v0, a2, b, a];
    // 180-degree rotation about the midpoint of the V0-A edge.
    let m = [(1.0 + c) / 4.0, s0 / 4.0];
    let rot: Vec<[f64; 2]> = base.iter().map(|p| [2.0 * m[0] - p[0], 2.0 * m[1] - p[1]]).collect();

    let mut pool: HashMap<(i64, i64), usize> = HashMap::new();
    let mut vertices: Vec<[f64; 2]> = Vec::new();
    let mut vid = |p: [f64; 2], vertices: &mut Vec<[f64; 2]>| -> usize {
        let key = ((p[0] * KEY_SCALE).round() as i64, (p[1] * KEY_SCALE).round() as i64);
        *pool.entry(key).or_insert_with(|| {
            vertices.push(p);
            vertices.len() - 1
        })
    };

    let mut faces: Vec<Vec<usize>> = Vec::new();
    // Side k joins corner k and k+1: 0 apex, 1 tail, 2 tail, 3 apex.
    let side_roles = [
        CreaseClass::ApexSide,
        CreaseClass::TailSide,
        CreaseClass::TailSide,
        CreaseClass::ApexSide,
    ];
    let mut edge_use: HashMap<(usize, usize), (usize, CreaseClass)> = HashMap::new();
    for q in 0..rows {
        for p in 0..cols {
            let (dx, dy) = (p as f64, q as f64 * s0);
            for quad in [&base[..], &rot[..]] {
                let cycle: Vec<usize> = quad
                    .iter()
                    .map(|pt| vid([pt[0] + dx, pt[1] + dy], &mut vertices))
                    .collect();
                for k in 0..4 {
                    let (u, w) = (cycle[k], cycle[(k + 1) % 4]);
                    let key = if u < w { (u, w) } else { (w, u) };
                    let entry = edge_use.entry(key).or_insert((0, side_roles[k]));
                    entry.0 += 1;
                }
                faces.push(cycle);
            }
        }
    }
    let mut creases: Vec<(usize, usize, CreaseClass)> = edge_use
        .into_iter()
        .filter(|&(_, (count, _))| count == 2)
        .map(|((u, w), (_, class))| (u, w, class))
        .collect();
    // Geometric order: by lower endpoint position, then upper.
    creases.sort_by(|x, y| {
        let key = |&(u, w, _): &(usize, usize, CreaseClass)| {
            let (pu, pw) = (vertices[u], vertices[w]);
            let (lo, hi) = if (pu[0], pu[1]) <= (pw[0], pw[1]) { (pu, pw) } else { (pw, pu) };
            [lo[0], lo[1], hi[0], hi[1]]
        };
        key(x).partial_cmp(&key(y)).unwrap()
    });
    let creases: Vec<Crease> =
        creases.into_iter().map(|(u, w, class)| Crease { endpoints: [u, w], class }).collect();
    CreasePattern::from_faces(vertices, creases, faces, Family::Kite, Some(theta))
}

/// The sign-locked crease sets of a kite pattern: negating any whole set
/// preserves local flat-foldability, and the locally flat-foldable
/// assignments are exactly the 2^K sign choices over the K sets.
pub fn kite_flip_sets(pattern: &CreasePattern) -> Result<Vec<Vec<usize>>> {
    if pattern.family() != Family::Kite {
        return Err(Error::WrongFamily { expected: "kite", got: pattern.family().tag().into() });
    }
    Ok(parity_components(pattern)?
        .into_iter()
        .map(|comp| comp.into_iter().map(|(c, _)| c).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::reference_assignment;
    use crate::local::{is_flippable, is_locally_flat_foldable};
    use crate::pattern::MvAssignment;

    fn theta30() -> f64 {
        30f64.to_radians()
    }

    #[test]
    fn interior_stars() {
        let p = generate(3, 3, theta30()).unwrap();
        assert!(p.interior_vertices().count() > 0);
        for v in p.interior_vertices() {
            let star = p.star(v).unwrap();
            assert_eq!(star.degree(), 4);
            let mut degs: Vec<f64> = star.angles().iter().map(|a| a.radians.to_degrees()).collect();
            degs.sort_by(|a, b| a.partial_cmp(b).unwrap());
            for (got, want) in degs.iter().zip([30.0, 90.0, 90.0, 150.0]) {
                assert!((got - want).abs() < 1e-6, "star {degs:?}");
            }
        }
    }

    #[test]
    fn reference_valid_and_bulk_faces_locked() {
        // Flipping a face with an interior 90-degree corner negates exactly
        // one crease of that vertex's theta pair, so such faces are never
        // flippable. Fringe faces whose crease set is a whole sign-locked
        // component remain flippable on any finite patch.
        let p = generate(2, 3, theta30()).unwrap();
        let a = reference_assignment(&p).unwrap();
        assert!(is_locally_flat_foldable(&p, &a));
        let sets = kite_flip_sets(&p).unwrap();
        let mut bulk = 0;
        for f in 0..p.face_count() {
            if is_flippable(&p, &a, f).unwrap() {
                // Any flippable face must carry a union of whole components.
                let mut creases: Vec<usize> = p.face_creases(f).to_vec();
                creases.sort_unstable();
                let mut covered: Vec<usize> = sets
                    .iter()
                    .filter(|s| s.iter().any(|c| creases.contains(c)))
                    .flatten()
                    .copied()
                    .collect();
                covered.sort_unstable();
                assert_eq!(creases, covered, "face {f} flips a partial component");
            } else {
                bulk += 1;
            }
        }
        assert!(bulk > 0, "expected locked bulk faces");
    }

    #[test]
    fn valid_count_is_two_to_the_k() {
        let p = generate(2, 2, theta30()).unwrap();
        let e = p.crease_count();
        assert!(e <= 16, "test pattern should stay exhaustively scannable, got {e} creases");
        let sets = kite_flip_sets(&p).unwrap();
        let k = sets.len();
        let mut valid = 0usize;
        for mask in 0u64..(1 << e) {
            let mut a = MvAssignment::all_mountain(e);
            for i in 0..e {
                if mask >> i & 1 == 1 {
                    a.set(i, crate::pattern::VALLEY);
                }
            }
            if is_locally_flat_foldable(&p, &a) {
                valid += 1;
            }
        }
        assert_eq!(valid, 1 << k, "expected 2^{k} locally valid assignments");
    }

    #[test]
    fn whole_set_flips_preserve_validity_but_proper_subsets_break_it() {
        let p = generate(2, 2, theta30()).unwrap();
        let reference = reference_assignment(&p).unwrap();
        let sets = kite_flip_sets(&p).unwrap();
        for set in &sets {
            let mut flipped = reference.clone();
            for &c in set {
                flipped.flip(c);
            }
            assert!(is_locally_flat_foldable(&p, &flipped));
        }
        let big = sets.iter().find(|s| s.len() >= 2).expect("expected a multi-crease set");
        let mut partial = reference.clone();
        partial.flip(big[0]);
        assert!(!is_locally_flat_foldable(&p, &partial));
    }
}
