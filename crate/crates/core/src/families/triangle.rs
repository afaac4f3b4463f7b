//! The triangle lattice `T_{rows,cols}`: a parallelogram of rows x cols unit
//! rhombi, each split into two unit triangles, so interior vertices have six
//! 60-degree sectors.
//!
//! Faces are row-major by rhombus with the lower triangle before the upper.
//! Creases: horizontal (by line, then column), then the 60-degree edges (by
//! column line, then row interval), then the 120-degree diagonals (row-major).

use crate::error::Result;
use crate::pattern::{
    Crease, CreaseClass, CreasePattern, Family, MvAssignment, MOUNTAIN, VALLEY,
};

pub fn generate(rows: usize, cols: usize) -> Result<CreasePattern> {
    let h = 3.0f64.sqrt() / 2.0;
    let vid = |i: usize, j: usize| j * (cols + 1) + i;
    let mut vertices = Vec::with_capacity((rows + 1) * (cols + 1));
    for j in 0..=rows {
        for i in 0..=cols {
            vertices.push([i as f64 + j as f64 / 2.0, j as f64 * h]);
        }
    }
    let mut creases = Vec::new();
    for line in 1..rows {
        for i in 0..cols {
            creases.push(Crease {
                endpoints: [vid(i, line), vid(i + 1, line)],
                class: CreaseClass::Horizontal,
            });
        }
    }
    for i in 1..cols {
        for j in 0..rows {
            creases.push(Crease {
                endpoints: [vid(i, j), vid(i, j + 1)],
                class: CreaseClass::Zigzag,
            });
        }
    }
    for j in 0..rows {
        for i in 0..cols {
            creases.push(Crease {
                endpoints: [vid(i + 1, j), vid(i, j + 1)],
                class: CreaseClass::Diagonal,
            });
        }
    }
    let mut faces = Vec::with_capacity(2 * rows * cols);
    for j in 0..rows {
        for i in 0..cols {
            faces.push(vec![vid(i, j), vid(i + 1, j), vid(i, j + 1)]);
            faces.push(vec![vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)]);
        }
    }
    CreasePattern::from_faces(vertices, creases, faces, Family::Triangle, None)
}

/// Accordion-style reference: horizontal lines alternate, and at every vertex
/// the two diagonal families cancel in the Maekawa sum.
pub fn reference(pattern: &CreasePattern) -> Result<MvAssignment> {
    let mut a = MvAssignment::all_mountain(pattern.crease_count());
    for (idx, crease) in pattern.creases().iter().enumerate() {
        let value = match crease.class {
            CreaseClass::Horizontal => {
                let y = pattern.vertex(crease.endpoints[0])[1];
                let line = (y / (3.0f64.sqrt() / 2.0)).round() as usize;
                if line % 2 == 1 { MOUNTAIN } else { VALLEY }
            }
            CreaseClass::Zigzag => MOUNTAIN,
            _ => VALLEY,
        };
        a.set(idx, value);
    }
    Ok(a)
}
