//! The bijection between locally flat-foldable Miura assignments and proper
//! 3-colorings of the face grid with one pinned vertex, plus the recoloring
//! chain conjugate to the face-flip chain.
//!
//! The color-difference rule: crossing a horizontal crease upward changes the
//! color by `-sigma(e)` mod 3; crossing a zigzag crease rightward in row
//! interval `s` changes it by `sigma(e)` when `s` is even and `-sigma(e)`
//! when `s` is odd. Cycle sums around an interior vertex vanish mod 3 exactly
//! when the vertex is flat-foldable, which makes the propagation from the
//! pinned face well defined precisely on locally valid assignments.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::families::MiuraLayout;
use crate::pattern::{CreaseClass, CreasePattern, MvAssignment};

/// Proper 3-coloring of the rows x cols grid graph with the pinned vertex
/// (the top-left face) fixed to color 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GridColoring {
    pub rows: usize,
    pub cols: usize,
    /// Row-major colors in {0, 1, 2}; rows count from the bottom.
    pub colors: Vec<u8>,
}

impl GridColoring {
    pub fn at(&self, r: usize, c: usize) -> u8 {
        self.colors[r * self.cols + c]
    }

    /// Pinned vertex: the top-left face of the grid.
    pub fn anchor_index(rows: usize, cols: usize) -> usize {
        (rows - 1) * cols
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let (r, c) = (v / self.cols, v % self.cols);
        let mut out = Vec::with_capacity(4);
        if r + 1 < self.rows {
            out.push((r + 1) * self.cols + c);
        }
        if r > 0 {
            out.push((r - 1) * self.cols + c);
        }
        if c + 1 < self.cols {
            out.push(r * self.cols + c + 1);
        }
        if c > 0 {
            out.push(r * self.cols + c - 1);
        }
        out
    }

    pub fn validate(&self) -> Result<()> {
        if self.colors.len() != self.rows * self.cols {
            return Err(Error::ImproperColoring("wrong number of entries".into()));
        }
        if self.colors.iter().any(|&c| c > 2) {
            return Err(Error::ImproperColoring("color out of range".into()));
        }
        if self.colors[Self::anchor_index(self.rows, self.cols)] != 0 {
            return Err(Error::ImproperColoring("pinned vertex must have color 0".into()));
        }
        for v in 0..self.colors.len() {
            for w in self.neighbors(v) {
                if w > v && self.colors[v] == self.colors[w] {
                    return Err(Error::ImproperColoring(format!(
                        "vertices {v} and {w} share color {}",
                        self.colors[v]
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Signed color step for crossing `crease` from face `from` to face `to`.
fn delta(
    pattern: &CreasePattern,
    layout: &MiuraLayout,
    crease: usize,
    from: usize,
    to: usize,
    assignment: &MvAssignment,
) -> i8 {
    let sigma = assignment.value(crease);
    let (fr, fc) = layout.face_coords(from);
    let (tr, tc) = layout.face_coords(to);
    let raw = match pattern.crease(crease).class {
        CreaseClass::Horizontal => {
            debug_assert_eq!(fc, tc);
            let upward = tr == fr + 1;
            if upward { -sigma } else { sigma }
        }
        CreaseClass::Zigzag => {
            debug_assert_eq!(fr, tr);
            let row_sign = if fr % 2 == 0 { 1 } else { -1 };
            let rightward = tc == fc + 1;
            if rightward { sigma * row_sign } else { -sigma * row_sign }
        }
        other => unreachable!("miura crease with class {other:?}"),
    };
    raw
}

/// Map a locally flat-foldable Miura assignment to its pinned proper
/// 3-coloring. Propagation inconsistency reports local invalidity.
pub fn mv_to_coloring(pattern: &CreasePattern, assignment: &MvAssignment) -> Result<GridColoring> {
    let layout = MiuraLayout::from_pattern(pattern)?;
    pattern.assert_covers(assignment)?;
    let n = pattern.face_count();
    let anchor = GridColoring::anchor_index(layout.rows, layout.cols);
    let mut colors: Vec<Option<u8>> = vec![None; n];
    colors[anchor] = Some(0);
    let mut queue = std::collections::VecDeque::from([anchor]);
    while let Some(f) = queue.pop_front() {
        let cf = colors[f].unwrap() as i8;
        for &(g, crease) in pattern.face_adjacency(f) {
            let want = (cf + delta(pattern, &layout, crease, f, g, assignment)).rem_euclid(3) as u8;
            match colors[g] {
                None => {
                    colors[g] = Some(want);
                    queue.push_back(g);
                }
                Some(have) if have != want => return Err(Error::NotLocallyFlatFoldable),
                _ => {}
            }
        }
    }
    let coloring = GridColoring {
        rows: layout.rows,
        cols: layout.cols,
        colors: colors.into_iter().map(|c| c.unwrap()).collect(),
    };
    debug_assert!(coloring.validate().is_ok());
    Ok(coloring)
}

/// Inverse direction: recover the assignment from a pinned proper coloring.
pub fn coloring_to_mv(pattern: &CreasePattern, coloring: &GridColoring) -> Result<MvAssignment> {
    let layout = MiuraLayout::from_pattern(pattern)?;
    coloring.validate()?;
    if coloring.rows != layout.rows || coloring.cols != layout.cols {
        return Err(Error::ImproperColoring("grid dimensions do not match pattern".into()));
    }
    let mut assignment = MvAssignment::all_mountain(pattern.crease_count());
    for crease in 0..pattern.crease_count() {
        let [f, g] = pattern.crease_faces(crease);
        let diff = (coloring.colors[g] as i8 - coloring.colors[f] as i8).rem_euclid(3);
        let diff = if diff == 2 { -1 } else { diff };
        // delta is sigma times a sign independent of sigma; solve for sigma.
        let mut probe = MvAssignment::all_mountain(pattern.crease_count());
        probe.set(crease, crate::pattern::VALLEY);
        let unit = delta(pattern, &layout, crease, f, g, &probe);
        assignment.set(crease, if unit == diff { 1 } else { -1 });
    }
    Ok(assignment)
}

/// Recoloring-chain update conjugate to one face-flip step: pick a grid
/// vertex uniformly; for an ordinary vertex resample its color uniformly
/// among the proper choices (including the current one); for the pinned
/// vertex apply, with the same laziness, the global color rotation of the
/// other vertices that realizes its recoloring while keeping the pin at 0.
pub fn glauber_step_coloring<R: Rng + ?Sized>(
    coloring: &GridColoring,
    rng: &mut R,
) -> GridColoring {
    let n = coloring.rows * coloring.cols;
    let v = rng.gen_range(0..n);
    let anchor = GridColoring::anchor_index(coloring.rows, coloring.cols);
    let mut out = coloring.clone();
    if v != anchor {
        let mut allowed: Vec<u8> = vec![0, 1, 2];
        for w in coloring.neighbors(v) {
            allowed.retain(|&c| c != coloring.colors[w]);
        }
        let pick = allowed[rng.gen_range(0..allowed.len())];
        out.colors[v] = pick;
    } else {
        // Rotations d of the non-pinned colors that keep properness at the
        // pin: allowed iff no pinned-neighbor lands on color 0.
        let mut moves: Vec<u8> = vec![0];
        for d in [1u8, 2u8] {
            let ok = coloring
                .neighbors(anchor)
                .iter()
                .all(|&w| !(coloring.colors[w] + d).is_multiple_of(3));
            if ok {
                moves.push(d);
            }
        }
        let d = moves[rng.gen_range(0..moves.len())];
        if d != 0 {
            for (i, c) in out.colors.iter_mut().enumerate() {
                if i != anchor {
                    *c = (*c + d) % 3;
                }
            }
        }
    }
    debug_assert!(out.validate().is_ok());
    out
}

/// All pinned proper colorings of the rows x cols grid.
pub fn enumerate_colorings(rows: usize, cols: usize) -> Vec<GridColoring> {
    let n = rows * cols;
    let anchor = GridColoring::anchor_index(rows, cols);
    let mut out = Vec::new();
    let mut colors = vec![0u8; n];
    fn rec(
        v: usize,
        n: usize,
        anchor: usize,
        rows: usize,
        cols: usize,
        colors: &mut Vec<u8>,
        out: &mut Vec<GridColoring>,
    ) {
        if v == n {
            out.push(GridColoring { rows, cols, colors: colors.clone() });
            return;
        }
        let choices: Vec<u8> = if v == anchor { vec![0] } else { vec![0, 1, 2] };
        for c in choices {
            let (r, col) = (v / cols, v % cols);
            let mut ok = true;
            if col > 0 && colors[v - 1] == c {
                ok = false;
            }
            if r > 0 && colors[v - cols] == c {
                ok = false;
            }
            if ok {
                colors[v] = c;
                rec(v + 1, n, anchor, rows, cols, colors, out);
            }
        }
    }
    rec(0, n, anchor, rows, cols, &mut colors, &mut out);
    out
}

/// Exhaustively verify the flip/recolor correspondence on an enumerable
/// Miura instance: flipping face F maps through the bijection to recoloring
/// exactly F's grid vertex (up to the pin-preserving rotation when F is the
/// pinned face), and every available recolor move is realized by a flip.
pub fn flip_recolor_conjugacy_check(pattern: &CreasePattern) -> Result<bool> {
    let layout = MiuraLayout::from_pattern(pattern)?;
    let states = crate::flipgraph::enumerate_states(pattern)?;
    let anchor = GridColoring::anchor_index(layout.rows, layout.cols);
    for state in &states {
        let coloring = mv_to_coloring(pattern, state)?;
        for face in 0..pattern.face_count() {
            let flippable = crate::local::flip_stays_valid(pattern, state, face);
            // Recolor move availability at the corresponding grid vertex.
            let nbr_colors: std::collections::HashSet<u8> =
                coloring.neighbors(face).iter().map(|&w| coloring.colors[w]).collect();
            let movable = nbr_colors.len() == 1;
            if flippable != movable {
                return Err(Error::MalformedPattern(format!(
                    "face {face} flippable={flippable} but recolorable={movable} in {state}"
                )));
            }
            if !flippable {
                continue;
            }
            let image = mv_to_coloring(pattern, &pattern.flip_face(state, face))?;
            if !differs_exactly_at(&coloring, &image, face, anchor) {
                return Err(Error::MalformedPattern(format!(
                    "flip of face {face} in {state} is not a single recolor"
                )));
            }
        }
    }
    Ok(true)
}

/// Whether `image` and `base` differ by a single class-level recolor at
/// vertex `v`. For an ordinary vertex that is a literal one-entry difference.
/// Recoloring the pinned vertex keeps the pin at 0 by rotating every other
/// color, so there the anchored representatives differ by a nonzero rotation
/// of the non-pinned entries.
fn differs_exactly_at(base: &GridColoring, image: &GridColoring, v: usize, anchor: usize) -> bool {
    if v == anchor {
        [1u8, 2].iter().any(|&d| {
            base.colors.iter().enumerate().all(|(i, &c)| {
                if i == anchor {
                    image.colors[i] == c
                } else {
                    image.colors[i] == (c + d) % 3
                }
            })
        })
    } else {
        let diffs: Vec<usize> =
            (0..base.colors.len()).filter(|&i| base.colors[i] != image.colors[i]).collect();
        diffs == [v]
    }
}

/// Exact one-step kernel of the recoloring chain over an enumerated coloring
/// list, as a row-stochastic rational matrix.
pub fn glauber_kernel(colorings: &[GridColoring]) -> Vec<Vec<BigRational>> {
    let n = colorings.len();
    let sites = colorings[0].rows * colorings[0].cols;
    let anchor = GridColoring::anchor_index(colorings[0].rows, colorings[0].cols);
    let index = |c: &GridColoring| colorings.iter().position(|x| x == c).unwrap();
    let mut kernel = vec![vec![BigRational::zero(); n]; n];
    let site_p = BigRational::new(BigInt::one(), BigInt::from(sites));
    for (i, coloring) in colorings.iter().enumerate() {
        for v in 0..sites {
            let mut images: Vec<GridColoring> = Vec::new();
            if v != anchor {
                let mut allowed: Vec<u8> = vec![0, 1, 2];
                for w in coloring.neighbors(v) {
                    allowed.retain(|&c| c != coloring.colors[w]);
                }
                for c in allowed {
                    let mut img = coloring.clone();
                    img.colors[v] = c;
                    images.push(img);
                }
            } else {
                images.push(coloring.clone());
                for d in [1u8, 2u8] {
                    if coloring.neighbors(anchor).iter().all(|&w| (coloring.colors[w] + d) % 3 != 0)
                    {
                        let mut img = coloring.clone();
                        for (k, c) in img.colors.iter_mut().enumerate() {
                            if k != anchor {
                                *c = (*c + d) % 3;
                            }
                        }
                        images.push(img);
                    }
                }
            }
            let choice_p = BigRational::new(BigInt::one(), BigInt::from(images.len()));
            for img in images {
                let j = index(&img);
                kernel[i][j] += &site_p * &choice_p;
            }
        }
    }
    kernel
}
