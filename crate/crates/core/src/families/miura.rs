//! The Miura-ori: rows x cols congruent parallelograms. Horizontal creases
//! run along full grid lines; zigzag creases alternate slant row by row so
//! every interior vertex has the cyclic sector sequence
//! (theta, pi-theta, pi-theta, theta).
//!
//! Faces are row-major from the bottom-left. Creases: horizontal first (by
//! line, then column), then zigzag (by column line, then row interval).

use crate::error::{Error, Result};
use crate::pattern::{
    Crease, CreaseClass, CreasePattern, Family, MvAssignment, MOUNTAIN, VALLEY,
};

#[derive(Debug, Clone, Copy)]
pub struct MiuraLayout {
    pub rows: usize,
    pub cols: usize,
}

impl MiuraLayout {
    pub fn from_pattern(pattern: &CreasePattern) -> Result<Self> {
        if pattern.family() != Family::Miura {
            return Err(Error::WrongFamily { expected: "miura", got: pattern.family().tag().into() });
        }
        let rows = pattern.vertices().iter().map(|v| v[1].round() as usize).max().unwrap_or(0);
        if rows == 0 || !pattern.face_count().is_multiple_of(rows) {
            return Err(Error::MalformedPattern("miura face grid does not divide".into()));
        }
        let cols = pattern.face_count() / rows;
        let layout = MiuraLayout { rows, cols };
        if pattern.crease_count() != layout.crease_count() {
            return Err(Error::MalformedPattern("miura crease count mismatch".into()));
        }
        Ok(layout)
    }

    pub fn crease_count(&self) -> usize {
        self.cols * (self.rows - 1) + self.rows * (self.cols - 1)
    }

    pub fn face(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        r * self.cols + c
    }

    pub fn face_coords(&self, face: usize) -> (usize, usize) {
        (face / self.cols, face % self.cols)
    }

    /// Horizontal crease on line `line` (1..rows) under column `c`. It
    /// separates faces (line-1, c) and (line, c).
    pub fn h_crease(&self, line: usize, c: usize) -> usize {
        debug_assert!((1..self.rows).contains(&line) && c < self.cols);
        (line - 1) * self.cols + c
    }

    /// Zigzag crease on column line `j` (1..cols) spanning row interval
    /// `s -> s+1`. It separates faces (s, j-1) and (s, j).
    pub fn z_crease(&self, j: usize, s: usize) -> usize {
        debug_assert!((1..self.cols).contains(&j) && s < self.rows);
        self.cols * (self.rows - 1) + (j - 1) * self.rows + s
    }
}

pub fn generate(rows: usize, cols: usize, theta: f64) -> Result<CreasePattern> {
    let shear = theta.cos() / theta.sin();
    let vid = |j: usize, r: usize| r * (cols + 1) + j;
    let mut vertices = Vec::with_capacity((rows + 1) * (cols + 1));
    for r in 0..=rows {
        let off = if r % 2 == 1 { shear } else { 0.0 };
        for j in 0..=cols {
            vertices.push([j as f64 * (1.0 + shear) + off, r as f64]);
        }
    }
    let mut creases = Vec::new();
    for line in 1..rows {
        for c in 0..cols {
            creases.push(Crease {
                endpoints: [vid(c, line), vid(c + 1, line)],
                class: CreaseClass::Horizontal,
            });
        }
    }
    for j in 1..cols {
        for s in 0..rows {
            creases.push(Crease {
                endpoints: [vid(j, s), vid(j, s + 1)],
                class: CreaseClass::Zigzag,
            });
        }
    }
    let mut faces = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            faces.push(vec![vid(c, r), vid(c + 1, r), vid(c + 1, r + 1), vid(c, r + 1)]);
        }
    }
    CreasePattern::from_faces(vertices, creases, faces, Family::Miura, Some(theta))
}

/// The standard fold: horizontal lines alternate mountain/valley; each zigzag
/// column alternates along its length, which forces the up and down zigzag
/// creases at every vertex to differ and hence Maekawa to hold.
pub fn reference(pattern: &CreasePattern) -> Result<MvAssignment> {
    let layout = MiuraLayout::from_pattern(pattern)?;
    let mut a = MvAssignment::all_mountain(pattern.crease_count());
    for line in 1..layout.rows {
        for c in 0..layout.cols {
            a.set(layout.h_crease(line, c), if line % 2 == 1 { MOUNTAIN } else { VALLEY });
        }
    }
    for j in 1..layout.cols {
        for s in 0..layout.rows {
            a.set(layout.z_crease(j, s), if (j + s) % 2 == 0 { VALLEY } else { MOUNTAIN });
        }
    }
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::local::is_locally_flat_foldable;

    #[test]
    fn four_by_six_counts() {
        let p = generate(4, 6, std::f64::consts::FRAC_PI_3).unwrap();
        assert_eq!(p.face_count(), 24);
        assert_eq!(p.interior_vertices().count(), 15);
        let a = reference(&p).unwrap();
        assert!(is_locally_flat_foldable(&p, &a));
    }

    #[test]
    fn vertex_stars_have_miura_angles() {
        let theta = std::f64::consts::FRAC_PI_3;
        let p = generate(3, 3, theta).unwrap();
        for v in p.interior_vertices() {
            let star = p.star(v).unwrap();
            assert_eq!(star.degree(), 4);
            let mut small = 0;
            for a in star.angles() {
                if a.is(theta) {
                    small += 1;
                } else {
                    assert!(a.is(std::f64::consts::PI - theta));
                }
            }
            assert_eq!(small, 2);
        }
    }

    #[test]
    fn reference_valid_across_sizes() {
        for (rows, cols) in [(1, 2), (2, 2), (2, 3), (3, 3), (4, 6)] {
            let p = generate(rows, cols, std::f64::consts::FRAC_PI_3).unwrap();
            let a = reference(&p).unwrap();
            assert!(is_locally_flat_foldable(&p, &a), "miura {rows}x{cols}");
        }
    }
}
