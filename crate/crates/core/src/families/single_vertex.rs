//! The single-vertex pattern `C_{2n}`: one interior vertex with `2n` equally
//! spaced creases. Crease `k` runs from the center to rim vertex `k`; face `k`
//! is the wedge between creases `k` and `k+1`.

use crate::error::Result;
use crate::pattern::{Crease, CreaseClass, CreasePattern, Family, MvAssignment, VALLEY};

pub fn generate(n: usize) -> Result<CreasePattern> {
    let two_n = 2 * n;
    let mut vertices = vec![[0.0, 0.0]];
    for k in 0..two_n {
        let ang = std::f64::consts::PI * k as f64 / n as f64;
        vertices.push([ang.cos(), ang.sin()]);
    }
    let creases = (0..two_n)
        .map(|k| Crease { endpoints: [0, k + 1], class: CreaseClass::Spoke })
        .collect();
    let faces = (0..two_n)
        .map(|k| vec![0, k + 1, (k + 1) % two_n + 1])
        .collect();
    CreasePattern::from_faces(vertices, creases, faces, Family::SingleVertex, None)
}

/// `n+1` mountains followed by `n-1` valleys; the counts satisfy Maekawa and
/// equal angles make the count condition sufficient.
pub fn reference(pattern: &CreasePattern) -> MvAssignment {
    let two_n = pattern.crease_count();
    let n = two_n / 2;
    let mut a = MvAssignment::all_mountain(two_n);
    for k in n + 1..two_n {
        a.set(k, VALLEY);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::{is_flippable, is_locally_flat_foldable};

    #[test]
    fn c6_structure() {
        let p = generate(3).unwrap();
        assert_eq!(p.crease_count(), 6);
        assert_eq!(p.face_count(), 6);
        assert_eq!(p.interior_vertices().count(), 1);
        let star = p.star(0).unwrap();
        assert_eq!(star.degree(), 6);
        let a = reference(&p);
        assert!(is_locally_flat_foldable(&p, &a));
    }

    #[test]
    fn face_zero_not_flippable_in_two_mountain_state() {
        // Two mountains on creases 0,1 (bounding face 0), valleys elsewhere:
        // flipping face 0 would make every crease a valley.
        let p = generate(3).unwrap();
        let a: MvAssignment = "MMVVVV".parse().unwrap();
        assert!(is_locally_flat_foldable(&p, &a));
        let flipped = p.flip_face(&a, 0);
        assert_eq!(flipped.to_string(), "VVVVVV");
        assert!(!is_flippable(&p, &a, 0).unwrap());
        for f in 1..6 {
            assert!(is_flippable(&p, &a, f).unwrap(), "face {f} should be flippable");
        }
    }
}
