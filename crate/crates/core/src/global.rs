//! Global flat-foldability for square grids: every face folds onto one unit
//! cell, every crease maps to one of the four cell edges, and an assignment
//! folds globally iff some total layer order satisfies the crease-direction
//! and non-crossing conditions at the cell edges.

use rand::Rng;

use crate::error::{Error, Result};
use crate::families::{generate, GridLayout, PatternSpec};
use crate::flipgraph::enumerate_states;
use crate::local::is_locally_flat_foldable;
use crate::pattern::{CreaseClass, CreasePattern, MvAssignment, MOUNTAIN, VALLEY};

/// Search bound: the layer-order backtracking handles up to this many faces.
pub const GLOBAL_FACE_BOUND: usize = 12;
/// Exhaustive global counting bound.
pub const COUNT_FACE_BOUND: usize = 10;

/// Total order on all faces certifying a flat fold, bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerOrder {
    pub order: Vec<usize>,
}

/// Which edge of the folded unit cell a crease maps to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum CellEdge {
    Left,
    Right,
    Bottom,
    Top,
}

/// Per-face cell placement and per-crease edge images of a square grid.
pub struct FoldImage {
    /// Orientation parity of each face; adjacent faces differ.
    pub parity: Vec<u8>,
    /// Image edge of each crease.
    edges: Vec<CellEdge>,
}

pub fn fold_image(pattern: &CreasePattern) -> Result<FoldImage> {
    let layout = GridLayout::from_pattern(pattern)?;
    let mut parity = vec![0u8; pattern.face_count()];
    for r in 0..layout.rows {
        for c in 0..layout.cols {
            parity[layout.face(r, c)] = ((r + c) % 2) as u8;
        }
    }
    let mut edges = Vec::with_capacity(pattern.crease_count());
    for crease in pattern.creases() {
        let [a, b] = crease.endpoints;
        let (pa, pb) = (pattern.vertex(a), pattern.vertex(b));
        match crease.class {
            CreaseClass::Horizontal => {
                let line = pa[1].round() as usize;
                debug_assert_eq!(pb[1].round() as usize, line);
                edges.push(if line % 2 == 1 { CellEdge::Top } else { CellEdge::Bottom });
            }
            CreaseClass::Vertical => {
                let line = pa[0].round() as usize;
                edges.push(if line % 2 == 1 { CellEdge::Right } else { CellEdge::Left });
            }
            other => {
                return Err(Error::MalformedPattern(format!(
                    "square grid crease with class {other:?}"
                )))
            }
        }
    }
    Ok(FoldImage { parity, edges })
}

struct GlobalSearch<'a> {
    pattern: &'a CreasePattern,
    assignment: &'a MvAssignment,
    image: FoldImage,
    /// Boustrophedon insertion order over faces.
    insertion: Vec<usize>,
}

impl GlobalSearch<'_> {
    /// Check every condition involving `face` against the faces already
    /// placed. `height[f]` is usize::MAX for unplaced faces.
    fn consistent_with(&self, height: &[usize], face: usize) -> bool {
        // Crease-direction consistency: a valley puts the even-parity face
        // below the odd-parity face, matching the single-vertex convention.
        for &(g, crease) in self.pattern.face_adjacency(face) {
            if height[g] == usize::MAX {
                continue;
            }
            let (f0, f1) = (face, g);
            let (even, odd) =
                if self.image.parity[f0] == 0 { (f0, f1) } else { (f1, f0) };
            let valley = self.assignment.value(crease) == VALLEY;
            let ok = if valley {
                height[even] < height[odd]
            } else {
                height[even] > height[odd]
            };
            if !ok {
                return false;
            }
        }
        // Taco-taco per cell edge: complete folds must not interleave.
        let e = self.pattern.crease_count();
        for ci in 0..e {
            let [a, b] = self.crease_faces(ci);
            if height[a] == usize::MAX || height[b] == usize::MAX {
                continue;
            }
            if a != face && b != face {
                continue;
            }
            for cj in 0..e {
                if cj == ci || self.image.edges[cj] != self.image.edges[ci] {
                    continue;
                }
                let [c, d] = self.crease_faces(cj);
                if height[c] == usize::MAX || height[d] == usize::MAX {
                    continue;
                }
                let lo = height[a].min(height[b]);
                let hi = height[a].max(height[b]);
                let c_in = lo < height[c] && height[c] < hi;
                let d_in = lo < height[d] && height[d] < hi;
                if c_in != d_in {
                    return false;
                }
            }
        }
        true
    }

    fn crease_faces(&self, c: usize) -> [usize; 2] {
        self.pattern.crease_faces(c)
    }

    fn search(&self, layers: &mut Vec<usize>, next: usize) -> Option<Vec<usize>> {
        if next == self.insertion.len() {
            return Some(layers.clone());
        }
        let face = self.insertion[next];
        let n = self.pattern.face_count();
        for pos in 0..=layers.len() {
            layers.insert(pos, face);
            let mut height = vec![usize::MAX; n];
            for (h, &f) in layers.iter().enumerate() {
                height[f] = h;
            }
            if self.consistent_with(&height, face) {
                if let Some(found) = self.search(layers, next + 1) {
                    return Some(found);
                }
            }
            layers.remove(pos);
        }
        None
    }

    /// Full re-validation of a witness against every condition.
    fn validate(&self, order: &[usize]) -> bool {
        let n = self.pattern.face_count();
        let mut height = vec![usize::MAX; n];
        for (h, &f) in order.iter().enumerate() {
            height[f] = h;
        }
        (0..n).all(|f| self.consistent_with(&height, f))
    }
}

/// Search for a layer order certifying a global flat fold of a square-grid
/// assignment. Returns a witness or `None`.
pub fn is_globally_flat_foldable(
    pattern: &CreasePattern,
    assignment: &MvAssignment,
) -> Result<Option<LayerOrder>> {
    let layout = GridLayout::from_pattern(pattern)?;
    if pattern.face_count() > GLOBAL_FACE_BOUND {
        return Err(Error::SizeOverLimit {
            faces: pattern.face_count(),
            bound: GLOBAL_FACE_BOUND,
        });
    }
    pattern.assert_covers(assignment)?;
    if !is_locally_flat_foldable(pattern, assignment) {
        return Err(Error::NotLocallyFlatFoldable);
    }
    let image = fold_image(pattern)?;
    let mut insertion = Vec::with_capacity(pattern.face_count());
    for r in 0..layout.rows {
        if r % 2 == 0 {
            for c in 0..layout.cols {
                insertion.push(layout.face(r, c));
            }
        } else {
            for c in (0..layout.cols).rev() {
                insertion.push(layout.face(r, c));
            }
        }
    }
    let search = GlobalSearch { pattern, assignment, image, insertion };
    let mut layers = Vec::new();
    match search.search(&mut layers, 0) {
        Some(order) => {
            assert!(search.validate(&order), "witness failed re-validation");
            Ok(Some(LayerOrder { order }))
        }
        None => Ok(None),
    }
}

/// The locally-but-not-globally flat-foldable assignment on S_{2,5}: the
/// center horizontal crease is the lone mountain on its line, the vertical
/// lines flanking it are valley, and the outer vertical lines carry one
/// mountain and one valley arranged with half-turn symmetry. The
/// transcription is pinned by its two behavioral gates: it passes the local
/// check and admits no layer order. Returns the pattern and the assignment.
pub fn sigma_sp() -> (CreasePattern, MvAssignment) {
    let pattern = generate(PatternSpec::SquareGrid { rows: 2, cols: 5 })
        .expect("S_{2,5} generates");
    let layout = GridLayout { rows: 2, cols: 5 };
    let mut a = MvAssignment::all_mountain(pattern.crease_count());
    for c in 0..5 {
        a.set(layout.h_crease(1, c), if c == 2 { MOUNTAIN } else { VALLEY });
    }
    for r in 0..2 {
        a.set(layout.v_crease(2, r), VALLEY);
        a.set(layout.v_crease(3, r), VALLEY);
    }
    a.set(layout.v_crease(1, 0), MOUNTAIN);
    a.set(layout.v_crease(1, 1), VALLEY);
    a.set(layout.v_crease(4, 0), VALLEY);
    a.set(layout.v_crease(4, 1), MOUNTAIN);
    (pattern, a)
}

/// Axis-aligned rectangle of faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FaceRect {
    pub r0: usize,
    pub c0: usize,
    pub rows: usize,
    pub cols: usize,
}

impl FaceRect {
    pub fn contains(&self, r: usize, c: usize) -> bool {
        r >= self.r0 && r < self.r0 + self.rows && c >= self.c0 && c < self.c0 + self.cols
    }
}

/// The closed neighborhood N(T): one extra row and column on each side of the
/// face rectangle, clipped to the grid.
pub fn neighborhood(layout: GridLayout, t: FaceRect) -> FaceRect {
    let r0 = t.r0.saturating_sub(1);
    let c0 = t.c0.saturating_sub(1);
    let r1 = (t.r0 + t.rows + 1).min(layout.rows);
    let c1 = (t.c0 + t.cols + 1).min(layout.cols);
    FaceRect { r0, c0, rows: r1 - r0, cols: c1 - c0 }
}

/// Crease indices of the host grid lying strictly inside a face rectangle
/// (both bordering faces inside), in the standalone sub-grid's crease order.
pub fn block_creases(layout: GridLayout, rect: FaceRect) -> Vec<usize> {
    let mut out = Vec::new();
    for line in 1..rect.rows {
        for c in 0..rect.cols {
            out.push(layout.h_crease(rect.r0 + line, rect.c0 + c));
        }
    }
    for line in 1..rect.cols {
        for r in 0..rect.rows {
            out.push(layout.v_crease(rect.c0 + line, rect.r0 + r));
        }
    }
    out
}

/// Restrict a host assignment to the standalone sub-grid over `rect`.
pub fn restrict_to_block(
    host: &CreasePattern,
    assignment: &MvAssignment,
    rect: FaceRect,
) -> Result<(CreasePattern, MvAssignment)> {
    let layout = GridLayout::from_pattern(host)?;
    let sub = generate(PatternSpec::SquareGrid { rows: rect.rows, cols: rect.cols })?;
    let mut values = MvAssignment::all_mountain(sub.crease_count());
    for (sub_idx, host_idx) in block_creases(layout, rect).into_iter().enumerate() {
        values.set(sub_idx, assignment.value(host_idx));
    }
    Ok((sub, values))
}

/// Extend a partial assignment: the block pattern `tau` occupies the face
/// rectangle `t`, the host assignment `sigma` is kept outside the closed
/// neighborhood N(t), and the remaining creases are completed by Maekawa
/// propagation with backtracking. All square-grid vertices have equal sector
/// angles, so a vertex is valid exactly when its four creases split 3-1.
pub fn extend_partial(
    host: &CreasePattern,
    sigma: &MvAssignment,
    tau_pattern: &CreasePattern,
    tau: &MvAssignment,
    t: FaceRect,
) -> Result<MvAssignment> {
    let layout = GridLayout::from_pattern(host)?;
    let tau_layout = GridLayout::from_pattern(tau_pattern)?;
    if tau_layout.rows != t.rows || tau_layout.cols != t.cols {
        return Err(Error::InvalidSpec("block rectangle does not match tau's grid".into()));
    }
    if t.r0 + t.rows > layout.rows || t.c0 + t.cols > layout.cols {
        return Err(Error::InvalidSpec("block rectangle does not fit in the host".into()));
    }
    host.assert_covers(sigma)?;
    tau_pattern.assert_covers(tau)?;
    if !is_locally_flat_foldable(host, sigma) || !is_locally_flat_foldable(tau_pattern, tau) {
        return Err(Error::NotLocallyFlatFoldable);
    }

    let n_creases = host.crease_count();
    let mut values: Vec<Option<i8>> = vec![None; n_creases];
    // (a) tau inside T.
    for (sub_idx, host_idx) in block_creases(layout, t).into_iter().enumerate() {
        values[host_idx] = Some(tau.value(sub_idx));
    }
    // (b) sigma outside N(T): creases both of whose faces avoid N(T).
    let nt = neighborhood(layout, t);
    #[allow(clippy::needless_range_loop)]
    for crease in 0..n_creases {
        if values[crease].is_some() {
            continue;
        }
        let inside_nt = host.crease_faces(crease).iter().any(|&f| {
            let (r, c) = layout.face_coords(f);
            nt.contains(r, c)
        });
        if !inside_nt {
            values[crease] = Some(sigma.value(crease));
        }
    }

    let vertices: Vec<&crate::pattern::VertexStar> =
        host.interior_vertices().map(|v| host.star(v).unwrap()).collect();
    match complete(&vertices, values) {
        Some(filled) => {
            let out = MvAssignment::from_values(&filled);
            debug_assert!(is_locally_flat_foldable(host, &out));
            Ok(out)
        }
        None => Err(Error::NoCompletion),
    }
}

/// Depth-first completion with unit propagation over the 3-1 vertex rule.
fn complete(vertices: &[&crate::pattern::VertexStar], mut values: Vec<Option<i8>>) -> Option<Vec<i8>> {
    loop {
        let mut progressed = false;
        for star in vertices {
            let mut sum = 0i64;
            let mut missing = None;
            let mut missing_count = 0;
            for &e in star.creases() {
                match values[e] {
                    Some(v) => sum += v as i64,
                    None => {
                        missing = Some(e);
                        missing_count += 1;
                    }
                }
            }
            match missing_count {
                0 => {
                    if sum.abs() != 2 {
                        return None;
                    }
                }
                1 => {
                    let e = missing.unwrap();
                    let forced = if (sum + 1).abs() == 2 {
                        1
                    } else if (sum - 1).abs() == 2 {
                        -1
                    } else {
                        return None;
                    };
                    values[e] = Some(forced);
                    progressed = true;
                }
                _ => {}
            }
        }
        if !progressed {
            break;
        }
    }
    match values.iter().position(|v| v.is_none()) {
        None => Some(values.iter().map(|v| v.unwrap()).collect()),
        Some(idx) => {
            for guess in [MOUNTAIN, VALLEY] {
                let mut branch = values.clone();
                branch[idx] = Some(guess);
                if let Some(filled) = complete(vertices, branch) {
                    return Some(filled);
                }
            }
            None
        }
    }
}

/// Exhaustive count of globally flat-foldable assignments on S_{rows,cols}.
pub fn count_global(rows: usize, cols: usize) -> Result<u64> {
    if rows * cols > COUNT_FACE_BOUND {
        return Err(Error::SizeOverLimit { faces: rows * cols, bound: COUNT_FACE_BOUND });
    }
    let pattern = generate(PatternSpec::SquareGrid { rows, cols })?;
    let mut count = 0;
    for state in enumerate_states(&pattern)? {
        if is_globally_flat_foldable(&pattern, &state)?.is_some() {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Debug, Clone, serde::Serialize)]
pub struct GlobalProbability {
    pub rows: usize,
    pub cols: usize,
    pub probability: f64,
    /// 95% binomial confidence half-width; zero in enumeration mode.
    pub half_width: f64,
    pub mode: &'static str,
    pub trials: u64,
}

/// Probability that a uniform locally flat-foldable assignment folds
/// globally: exact enumeration when the grid is small enough, otherwise
/// Monte Carlo over exact uniform samples.
pub fn estimate_global_probability<R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    trials: u64,
    rng: &mut R,
) -> Result<GlobalProbability> {
    let faces = rows * cols;
    if faces > GLOBAL_FACE_BOUND {
        return Err(Error::SizeOverLimit { faces, bound: GLOBAL_FACE_BOUND });
    }
    if faces <= COUNT_FACE_BOUND {
        let good = count_global(rows, cols)? as f64;
        let omega = (1u64 << (faces - 1)) as f64;
        return Ok(GlobalProbability {
            rows,
            cols,
            probability: good / omega,
            half_width: 0.0,
            mode: "enumeration",
            trials: 0,
        });
    }
    let pattern = generate(PatternSpec::SquareGrid { rows, cols })?;
    let mut good = 0u64;
    for _ in 0..trials {
        let state = crate::chain::exact_sample_square_grid_on(&pattern, rng)?;
        if is_globally_flat_foldable(&pattern, &state)?.is_some() {
            good += 1;
        }
    }
    let p = good as f64 / trials as f64;
    Ok(GlobalProbability {
        rows,
        cols,
        probability: p,
        half_width: 1.96 * (p * (1.0 - p) / trials as f64).sqrt(),
        mode: "sampling",
        trials,
    })
}

/// Whether the assignment restricted to the top-left 2x5 block of the 3x6
/// tile at tile coordinates `(tile_r, tile_c)` equals sigma_sp.
pub fn contains_sigma_sp(
    host: &CreasePattern,
    assignment: &MvAssignment,
    tile_r: usize,
    tile_c: usize,
) -> Result<bool> {
    let layout = GridLayout::from_pattern(host)?;
    if layout.rows < 3 || layout.cols < 6 {
        return Err(Error::InvalidSpec("host must be at least 3x6".into()));
    }
    let rect = FaceRect { r0: tile_r * 3 + 1, c0: tile_c * 6, rows: 2, cols: 5 };
    if rect.r0 + rect.rows > layout.rows || rect.c0 + rect.cols > layout.cols {
        return Err(Error::InvalidSpec("tile outside the host".into()));
    }
    let (_, sp) = sigma_sp();
    let block = block_creases(layout, rect);
    Ok(block
        .into_iter()
        .enumerate()
        .all(|(sub_idx, host_idx)| assignment.value(host_idx) == sp.value(sub_idx)))
}

/// Tile-event indicators over all disjoint 3x6 tiles of the host.
pub fn sigma_sp_tile_events(
    host: &CreasePattern,
    assignment: &MvAssignment,
) -> Result<Vec<bool>> {
    let layout = GridLayout::from_pattern(host)?;
    let mut out = Vec::new();
    for tile_r in 0..layout.rows / 3 {
        for tile_c in 0..layout.cols / 6 {
            out.push(contains_sigma_sp(host, assignment, tile_r, tile_c)?);
        }
    }
    Ok(out)
}
