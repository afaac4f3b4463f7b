//! The square grid `S_{rows,cols}`: rows x cols unit square faces.
//!
//! Faces are row-major from the bottom-left. Creases are the interior grid
//! edges: all horizontal creases first (by line, then column), then vertical
//! creases (by line, then row).

use crate::error::{Error, Result};
use crate::pattern::{Crease, CreaseClass, CreasePattern, Family, MvAssignment, MOUNTAIN, VALLEY};

/// Index arithmetic shared by the chain and global modules.
#[derive(Debug, Clone, Copy)]
pub struct GridLayout {
    pub rows: usize,
    pub cols: usize,
}

impl GridLayout {
    pub fn from_pattern(pattern: &CreasePattern) -> Result<Self> {
        if pattern.family() != Family::SquareGrid {
            return Err(Error::WrongFamily {
                expected: "square_grid",
                got: pattern.family().tag().into(),
            });
        }
        let mut rows = 0usize;
        let mut cols = 0usize;
        for v in pattern.vertices() {
            cols = cols.max(v[0].round() as usize);
            rows = rows.max(v[1].round() as usize);
        }
        let layout = GridLayout { rows, cols };
        if pattern.face_count() != rows * cols
            || pattern.crease_count() != layout.crease_count()
        {
            return Err(Error::MalformedPattern("square grid counts do not match".into()));
        }
        Ok(layout)
    }

    pub fn crease_count(&self) -> usize {
        self.cols * (self.rows - 1) + self.rows * (self.cols - 1)
    }

    /// Face at row `r` (from bottom), column `c`.
    pub fn face(&self, r: usize, c: usize) -> usize {
        debug_assert!(r < self.rows && c < self.cols);
        r * self.cols + c
    }

    pub fn face_coords(&self, face: usize) -> (usize, usize) {
        (face / self.cols, face % self.cols)
    }

    /// Horizontal crease on grid line `line` (1..rows) under column `c`.
    pub fn h_crease(&self, line: usize, c: usize) -> usize {
        debug_assert!((1..self.rows).contains(&line) && c < self.cols);
        (line - 1) * self.cols + c
    }

    /// Vertical crease on grid line `line` (1..cols) beside row `r`.
    pub fn v_crease(&self, line: usize, r: usize) -> usize {
        debug_assert!((1..self.cols).contains(&line) && r < self.rows);
        self.cols * (self.rows - 1) + (line - 1) * self.rows + r
    }
}

pub fn generate(rows: usize, cols: usize) -> Result<CreasePattern> {
    let vid = |x: usize, y: usize| y * (cols + 1) + x;
    let mut vertices = Vec::with_capacity((rows + 1) * (cols + 1));
    for y in 0..=rows {
        for x in 0..=cols {
            vertices.push([x as f64, y as f64]);
        }
    }
    let mut creases = Vec::new();
    for line in 1..rows {
        for x in 0..cols {
            creases.push(Crease {
                endpoints: [vid(x, line), vid(x + 1, line)],
                class: CreaseClass::Horizontal,
            });
        }
    }
    for line in 1..cols {
        for y in 0..rows {
            creases.push(Crease {
                endpoints: [vid(line, y), vid(line, y + 1)],
                class: CreaseClass::Vertical,
            });
        }
    }
    let mut faces = Vec::with_capacity(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            faces.push(vec![vid(c, r), vid(c + 1, r), vid(c + 1, r + 1), vid(c, r + 1)]);
        }
    }
    CreasePattern::from_faces(vertices, creases, faces, Family::SquareGrid, None)
}

/// Horizontal creases mountain; vertical creases alternate mountain/valley by
/// row, giving a 3-1 split at every interior vertex.
pub fn reference(pattern: &CreasePattern) -> Result<MvAssignment> {
    let layout = GridLayout::from_pattern(pattern)?;
    let mut a = MvAssignment::all_mountain(pattern.crease_count());
    for line in 1..layout.cols {
        for r in 0..layout.rows {
            a.set(layout.v_crease(line, r), if r % 2 == 0 { MOUNTAIN } else { VALLEY });
        }
    }
    Ok(a)
}
