//! Generators for the crease-pattern families, each with a known locally
//! flat-foldable reference configuration.
//!
//! Indexing conventions are fixed so traces are reproducible: faces are
//! row-major where a grid structure exists, and creases are listed class by
//! class in geometric order (see each generator's docs).

mod kite;
mod miura;
mod single_vertex;
mod square_grid;
mod square_twist;
mod triangle;

pub use kite::kite_flip_sets;
pub use miura::MiuraLayout;
pub use square_grid::GridLayout;

use crate::error::{Error, Result};
use crate::local::is_locally_flat_foldable;
use crate::pattern::{CreasePattern, Family, MvAssignment, ANGLE_TOL};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistMode {
    Alternating,
    Uniform,
}

/// Family tag plus dimensions for a generated pattern.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PatternSpec {
    /// `rows x cols` square faces.
    SquareGrid { rows: usize, cols: usize },
    /// Grid of square-twist tiles; alternating mirrors tile chirality,
    /// uniform keeps one chirality on a sheared lattice.
    SquareTwist { rows: usize, cols: usize, mode: TwistMode },
    /// `rows x cols` congruent parallelograms with acute angle `theta`.
    Miura { rows: usize, cols: usize, theta: f64 },
    /// Parallelogram of `rows x cols` unit rhombi split into triangles.
    Triangle { rows: usize, cols: usize },
    /// Right-kite tessellation with apex angle `theta`.
    Kite { rows: usize, cols: usize, theta: f64 },
    /// Single interior vertex with `2n` equally spaced creases.
    SingleVertex { n: usize },
}

impl PatternSpec {
    fn validate(&self) -> Result<()> {
        let check_dims = |r: usize, c: usize| {
            if r < 1 || c < 1 {
                Err(Error::InvalidSpec(format!("dimensions must be at least 1, got {r}x{c}")))
            } else {
                Ok(())
            }
        };
        let check_theta = |t: f64| {
            if t > ANGLE_TOL && t < std::f64::consts::FRAC_PI_2 - ANGLE_TOL {
                Ok(())
            } else {
                Err(Error::InvalidSpec(format!(
                    "theta must lie strictly inside (0, pi/2), got {t} rad"
                )))
            }
        };
        match *self {
            PatternSpec::SquareGrid { rows, cols } => check_dims(rows, cols),
            PatternSpec::SquareTwist { rows, cols, .. } => check_dims(rows, cols),
            PatternSpec::Miura { rows, cols, theta } => {
                check_dims(rows, cols)?;
                check_theta(theta)
            }
            PatternSpec::Triangle { rows, cols } => check_dims(rows, cols),
            PatternSpec::Kite { rows, cols, theta } => {
                check_dims(rows, cols)?;
                check_theta(theta)
            }
            PatternSpec::SingleVertex { n } => {
                if n < 1 {
                    Err(Error::InvalidSpec("half-degree n must be at least 1".into()))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// Build the crease pattern described by `spec`.
pub fn generate(spec: PatternSpec) -> Result<CreasePattern> {
    spec.validate()?;
    match spec {
        PatternSpec::SquareGrid { rows, cols } => square_grid::generate(rows, cols),
        PatternSpec::SquareTwist { rows, cols, mode } => square_twist::generate(rows, cols, mode),
        PatternSpec::Miura { rows, cols, theta } => miura::generate(rows, cols, theta),
        PatternSpec::Triangle { rows, cols } => triangle::generate(rows, cols),
        PatternSpec::Kite { rows, cols, theta } => kite::generate(rows, cols, theta),
        PatternSpec::SingleVertex { n } => single_vertex::generate(n),
    }
}

/// A locally flat-foldable assignment for a generated pattern.
pub fn reference_assignment(pattern: &CreasePattern) -> Result<MvAssignment> {
    let assignment = match pattern.family() {
        Family::SquareGrid => square_grid::reference(pattern)?,
        Family::SquareTwist | Family::Kite => parity_reference(pattern)?,
        Family::Miura => miura::reference(pattern)?,
        Family::Triangle => triangle::reference(pattern)?,
        Family::SingleVertex => single_vertex::reference(pattern),
        Family::Custom => {
            return Err(Error::WrongFamily { expected: "generated", got: "custom".into() })
        }
    };
    debug_assert!(is_locally_flat_foldable(pattern, &assignment));
    Ok(assignment)
}

/// Sign-locked crease components for patterns whose per-vertex validity is a
/// conjunction of pair constraints (square twist and kite): each constraint
/// either equates or opposes the two creases bounding a sector.
///
/// Returns components as `(crease, sign)` lists; within a component, fixing
/// one crease forces the rest through the signs, and negating a whole
/// component preserves local validity.
pub(crate) fn parity_components(pattern: &CreasePattern) -> Result<Vec<Vec<(usize, i8)>>> {
    let n = pattern.crease_count();
    // Union-find with parity relative to the root.
    let mut parent: Vec<usize> = (0..n).collect();
    let mut rel: Vec<i8> = vec![1; n];
    fn find(parent: &mut Vec<usize>, rel: &mut Vec<i8>, x: usize) -> (usize, i8) {
        if parent[x] == x {
            return (x, 1);
        }
        let (root, r) = find(parent, rel, parent[x]);
        parent[x] = root;
        rel[x] *= r;
        (root, rel[x])
    }
    let union = |parent: &mut Vec<usize>, rel: &mut Vec<i8>, a: usize, b: usize, sign: i8| -> Result<()> {
        let (ra, sa) = find(parent, rel, a);
        let (rb, sb) = find(parent, rel, b);
        if ra == rb {
            if sa * sb != sign {
                return Err(Error::MalformedPattern(
                    "contradictory sign constraints between creases".into(),
                ));
            }
            return Ok(());
        }
        parent[rb] = ra;
        rel[rb] = sa * sign * sb;
        Ok(())
    };

    for v in pattern.interior_vertices() {
        let star = pattern.star(v).expect("interior vertex has a star");
        let deg = star.degree();
        let creases = star.creases();
        let angles = star.angles();
        if deg == 2 {
            // A straight fold through the vertex: both halves must agree.
            union(&mut parent, &mut rel, creases[0], creases[1], 1)?;
            continue;
        }
        if deg == 4 {
            // Locate the unique strict minimum sector; its pair must differ
            // and the opposite (maximal) pair must agree, which together are
            // exactly Maekawa plus big-little-big for these stars.
            let min_idx = (0..4).find(|&i| {
                angles[i].lt_strict(&angles[(i + 1) % 4]) && angles[i].lt_strict(&angles[(i + 3) % 4])
            });
            if let Some(i) = min_idx {
                let opp = (i + 2) % 4;
                if angles[(i + 1) % 4].approx_eq(&angles[(i + 3) % 4])
                    && angles[(i + 1) % 4].lt_strict(&angles[opp])
                {
                    union(&mut parent, &mut rel, creases[i], creases[(i + 1) % 4], -1)?;
                    union(&mut parent, &mut rel, creases[opp], creases[(opp + 1) % 4], 1)?;
                    continue;
                }
            }
        }
        return Err(Error::WrongFamily {
            expected: "square_twist or kite vertex structure",
            got: pattern.family().tag().into(),
        });
    }

    let mut groups: std::collections::BTreeMap<usize, Vec<(usize, i8)>> = Default::default();
    for c in 0..n {
        let (root, sign) = find(&mut parent, &mut rel, c);
        groups.entry(root).or_default().push((c, sign));
    }
    Ok(groups.into_values().collect())
}

/// Reference assignment for parity-constrained families: the lowest crease of
/// each component is a mountain and the rest follow the sign relations.
fn parity_reference(pattern: &CreasePattern) -> Result<MvAssignment> {
    let mut assignment = MvAssignment::all_mountain(pattern.crease_count());
    for component in parity_components(pattern)? {
        for &(crease, sign) in &component {
            // Representative (sign +1) is mountain: value = -sign.
            assignment.set(crease, -sign);
        }
    }
    Ok(assignment)
}
