//! Per-vertex validity predicates and the local flat-foldability check.

use crate::error::{Error, Result};
use crate::pattern::{CreasePattern, MvAssignment, VertexStar, ANGLE_TOL};
use crate::vertex;

/// Kawasaki's condition: the alternating sum of sector angles vanishes.
/// Assignment-independent; a star failing this admits no valid assignment.
pub fn kawasaki_holds(star: &VertexStar) -> bool {
    let mut sum = 0.0;
    for (i, a) in star.angles().iter().enumerate() {
        if i % 2 == 0 {
            sum += a.radians;
        } else {
            sum -= a.radians;
        }
    }
    sum.abs() <= ANGLE_TOL
}

/// Maekawa's condition: mountain and valley counts around the vertex differ
/// by exactly two.
pub fn maekawa_holds(star: &VertexStar, assignment: &MvAssignment) -> bool {
    let sum: i64 = star.creases().iter().map(|&e| assignment.value(e) as i64).sum();
    sum.abs() == 2
}

/// Sector indices (0-based) at which the big-little-big condition is violated:
/// the sector is a strict local minimum and its two creases carry equal signs.
pub fn big_little_big_violations(star: &VertexStar, assignment: &MvAssignment) -> Vec<usize> {
    let n = star.degree();
    let angles = star.angles();
    let creases = star.creases();
    let mut out = Vec::new();
    for i in 0..n {
        let prev = &angles[(i + n - 1) % n];
        let next = &angles[(i + 1) % n];
        if angles[i].lt_strict(prev) && angles[i].lt_strict(next) {
            let e0 = creases[i];
            let e1 = creases[(i + 1) % n];
            if assignment.value(e0) == assignment.value(e1) {
                out.push(i);
            }
        }
    }
    out
}

/// True iff every interior vertex star folds flat under the restricted
/// assignment. Boundary vertices impose no constraint.
pub fn is_locally_flat_foldable(pattern: &CreasePattern, assignment: &MvAssignment) -> bool {
    assert_eq!(assignment.len(), pattern.crease_count(), "assignment must cover the crease set");
    pattern.interior_vertices().all(|v| {
        let star = pattern.star(v).expect("interior vertex has a star");
        matches!(vertex::is_valid_vertex(star, assignment), Ok(true))
    })
}

/// Whether flipping `face` keeps the assignment locally flat-foldable.
/// Errors if the input assignment is itself invalid.
pub fn is_flippable(
    pattern: &CreasePattern,
    assignment: &MvAssignment,
    face: usize,
) -> Result<bool> {
    pattern.assert_covers(assignment)?;
    if !is_locally_flat_foldable(pattern, assignment) {
        return Err(Error::NotLocallyFlatFoldable);
    }
    Ok(flip_stays_valid(pattern, assignment, face))
}

/// Flippability check without re-validating the input state; callers on the
/// chain's hot path keep the invariant that `assignment` is already valid.
/// Only the vertices touched by the face's creases are re-checked.
pub fn flip_stays_valid(pattern: &CreasePattern, assignment: &MvAssignment, face: usize) -> bool {
    let flipped = pattern.flip_face(assignment, face);
    let mut touched: Vec<usize> = Vec::with_capacity(8);
    for &c in pattern.face_creases(face) {
        for v in pattern.crease(c).endpoints {
            if pattern.is_interior(v) && !touched.contains(&v) {
                touched.push(v);
            }
        }
    }
    touched.iter().all(|&v| {
        let star = pattern.star(v).expect("interior vertex has a star");
        matches!(vertex::is_valid_vertex(star, &flipped), Ok(true))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pattern::MvAssignment;

    fn deg(star: &[f64]) -> VertexStar {
        let rad: Vec<f64> = star.iter().map(|d| d.to_radians()).collect();
        VertexStar::from_angles(&rad).unwrap()
    }

    #[test]
    fn kawasaki_examples() {
        assert!(kawasaki_holds(&deg(&[90.0, 90.0, 90.0, 90.0])));
        assert!(kawasaki_holds(&deg(&[45.0, 90.0, 135.0, 90.0])));
        assert!(!kawasaki_holds(&deg(&[100.0, 80.0, 100.0, 80.0])));
    }

    #[test]
    fn maekawa_examples() {
        let star = deg(&[90.0, 90.0, 90.0, 90.0]);
        assert!(maekawa_holds(&star, &"MMMV".parse().unwrap()));
        assert!(!maekawa_holds(&star, &"MMVV".parse().unwrap()));
        let star6 = deg(&[60.0; 6]);
        assert!(maekawa_holds(&star6, &"MMMMVV".parse().unwrap()));
    }

    #[test]
    fn big_little_big_examples() {
        let star = deg(&[45.0, 90.0, 135.0, 90.0]);
        // alpha_0 = 45 deg is the strict local minimum between creases 0 and 1.
        let bad: MvAssignment = "MMVV".parse().unwrap();
        assert_eq!(big_little_big_violations(&star, &bad), vec![0]);
        let ok: MvAssignment = "MVVV".parse().unwrap();
        assert!(big_little_big_violations(&star, &ok).is_empty());
        let flat = deg(&[90.0, 90.0, 90.0, 90.0]);
        assert!(big_little_big_violations(&flat, &"MMMM".parse().unwrap()).is_empty());
    }
}
