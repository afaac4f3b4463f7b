//! Single-vertex flat-foldability: a brute-force layer-ordering oracle,
//! family-specific validity rules, configuration counting, and an exact
//! linear-time sampler for the equal-angle vertex with `2n` creases.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::local::{big_little_big_violations, kawasaki_holds, maekawa_holds};
use crate::pattern::{MvAssignment, VertexStar, ANGLE_TOL, VALLEY};

/// Hard bound on the layer-order search.
pub const ORACLE_DEGREE_BOUND: usize = 12;
/// Hard bound on single-vertex enumeration.
pub const ENUMERATION_HALF_DEGREE_BOUND: usize = 10;

/// Total order on the sectors of a star: `order[h]` is the sector occupying
/// layer height `h`, bottom to top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircularLayerOrder {
    pub order: Vec<usize>,
}

/// Equal-angle star with `two_n` creases, crease ids `0..two_n`.
pub fn equal_angle_star(two_n: usize) -> VertexStar {
    let a = 2.0 * std::f64::consts::PI / two_n as f64;
    VertexStar::from_angles(&vec![a; two_n]).expect("equal-angle star is well formed")
}

struct FoldImage {
    /// Image of crease `i` on the fold line.
    crease_point: Vec<f64>,
    /// Image interval of sector `i` (between creases `i` and `i+1`).
    sector: Vec<(f64, f64)>,
    /// Side of the fold at crease `i`: both incident sectors extend this way.
    side: Vec<i8>,
}

const POINT_TOL: f64 = 1e-9;

fn fold_image(star: &VertexStar) -> FoldImage {
    let n = star.degree();
    let mut crease_point = Vec::with_capacity(n);
    let mut sector = Vec::with_capacity(n);
    let mut side = Vec::with_capacity(n);
    let mut p = 0.0f64;
    for i in 0..n {
        let dir = if i % 2 == 0 { 1.0 } else { -1.0 };
        crease_point.push(p);
        side.push(if i % 2 == 0 { 1 } else { -1 });
        let q = p + dir * star.angles()[i].radians;
        sector.push((p.min(q), p.max(q)));
        p = q;
    }
    FoldImage { crease_point, sector, side }
}

struct OracleState<'a> {
    star: &'a VertexStar,
    values: Vec<i8>,
    image: FoldImage,
}

impl OracleState<'_> {
    /// Check every condition expressible over the currently placed sectors.
    /// `height[s]` is the layer index of sector `s` or usize::MAX if unplaced.
    fn consistent(&self, height: &[usize], placed: usize) -> bool {
        let n = self.star.degree();
        // Crease i sits between sectors i-1 and i; it is checkable once both
        // are placed. Sectors are placed in link order 0..placed.
        let complete = |crease: usize| -> bool {
            if crease == 0 { placed == n } else { crease < placed }
        };
        let sectors_of = |crease: usize| -> (usize, usize) { ((crease + n - 1) % n, crease) };

        // Mountain-valley consistency: a valley puts the even-parity sector
        // below the odd-parity sector; a mountain puts it above.
        for crease in 0..n {
            if !complete(crease) {
                continue;
            }
            let (a, b) = sectors_of(crease);
            let (even, odd) = if a % 2 == 0 { (a, b) } else { (b, a) };
            let valley = self.values[crease] == VALLEY;
            let ok = if valley { height[even] < height[odd] } else { height[even] > height[odd] };
            if !ok {
                return false;
            }
        }

        // Taco-taco: folds at the same image point on the same side must not
        // interleave in the layer order.
        for c1 in 0..n {
            if !complete(c1) {
                continue;
            }
            for c2 in c1 + 1..n {
                if !complete(c2) {
                    continue;
                }
                if self.image.side[c1] != self.image.side[c2] {
                    continue;
                }
                if (self.image.crease_point[c1] - self.image.crease_point[c2]).abs() > POINT_TOL {
                    continue;
                }
                let (a, b) = sectors_of(c1);
                let (c, d) = sectors_of(c2);
                let lo = height[a].min(height[b]);
                let hi = height[a].max(height[b]);
                let c_in = lo < height[c] && height[c] < hi;
                let d_in = lo < height[d] && height[d] < hi;
                if c_in != d_in {
                    return false;
                }
            }
        }

        // Taco-tortilla: a sector strictly covering a fold point must not lie
        // strictly between that fold's two sectors.
        for crease in 0..n {
            if !complete(crease) {
                continue;
            }
            let (a, b) = sectors_of(crease);
            let p = self.image.crease_point[crease];
            let lo = height[a].min(height[b]);
            let hi = height[a].max(height[b]);
            #[allow(clippy::needless_range_loop)]
            for s in 0..placed {
                if s == a || s == b {
                    continue;
                }
                let (slo, shi) = self.image.sector[s];
                if slo + POINT_TOL < p && p < shi - POINT_TOL && lo < height[s] && height[s] < hi {
                    return false;
                }
            }
        }
        true
    }

    fn search(&self, layers: &mut Vec<usize>, next: usize) -> Option<Vec<usize>> {
        let n = self.star.degree();
        if next == n {
            return Some(layers.clone());
        }
        for pos in 0..=layers.len() {
            layers.insert(pos, next);
            let mut height = vec![usize::MAX; n];
            for (h, &s) in layers.iter().enumerate() {
                height[s] = h;
            }
            if self.consistent(&height, next + 1) {
                if let Some(found) = self.search(layers, next + 1) {
                    return Some(found);
                }
            }
            layers.remove(pos);
        }
        None
    }
}

/// Search for a self-intersection-free layer order of the sectors around one
/// vertex under the given assignment. Returns a witness order or `None`.
pub fn single_vertex_layer_oracle(
    star: &VertexStar,
    assignment: &MvAssignment,
) -> Result<Option<CircularLayerOrder>> {
    if star.degree() > ORACLE_DEGREE_BOUND {
        return Err(Error::DegreeOverLimit { degree: star.degree(), bound: ORACLE_DEGREE_BOUND });
    }
    if !kawasaki_holds(star) {
        let sum: f64 = star
            .angles()
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 0 { a.radians } else { -a.radians })
            .sum();
        return Err(Error::KawasakiViolated { sum });
    }
    let state = OracleState { star, values: star.restrict(assignment), image: fold_image(star) };
    let mut layers = Vec::with_capacity(star.degree());
    match state.search(&mut layers, 0) {
        Some(order) => {
            // Re-validate the witness against the full condition set.
            let mut height = vec![usize::MAX; star.degree()];
            for (h, &s) in order.iter().enumerate() {
                height[s] = h;
            }
            debug_assert!(state.consistent(&height, star.degree()));
            Ok(Some(CircularLayerOrder { order }))
        }
        None => Ok(None),
    }
}

/// Shape of a degree-4 star relevant to the family-specific rules.
enum StarShape {
    EqualAngles,
    /// Adjacent pair of acute sectors theta with the complementary pair;
    /// carries the index of the first sector of the theta run.
    Miura(usize),
    /// 45/90/135/90 star in cyclic order.
    SquareTwist,
    General,
}

fn classify_star(star: &VertexStar) -> StarShape {
    let angles = star.angles();
    let n = star.degree();
    if angles.iter().all(|a| a.approx_eq(&angles[0])) {
        return StarShape::EqualAngles;
    }
    if n == 4 {
        let quarter = std::f64::consts::FRAC_PI_2;
        for i in 0..4 {
            let a = &angles[i];
            let b = &angles[(i + 1) % 4];
            let c = &angles[(i + 2) % 4];
            let d = &angles[(i + 3) % 4];
            // theta, pi - theta, pi - theta, theta starting at the second theta:
            // detect the run (d, a) of two equal acute sectors.
            if a.approx_eq(d)
                && b.approx_eq(c)
                && (a.radians + b.radians - std::f64::consts::PI).abs() <= 2.0 * ANGLE_TOL
                && a.radians < quarter - ANGLE_TOL
            {
                return StarShape::Miura((i + 3) % 4);
            }
            if a.is(quarter / 2.0) && b.is(quarter) && c.is(quarter * 1.5) && d.is(quarter) {
                return StarShape::SquareTwist;
            }
        }
    }
    StarShape::General
}

/// Single-vertex flat-foldability of `star` under `assignment`.
///
/// Dispatch: equal-angle stars use the Maekawa count rule, Miura and
/// square-twist stars use closed-form rules derived from Maekawa and
/// big-little-big, and everything else falls back to the layer oracle. The
/// closed forms are validated against the oracle in tests.
pub fn is_valid_vertex(star: &VertexStar, assignment: &MvAssignment) -> Result<bool> {
    if !kawasaki_holds(star) {
        let sum: f64 = star
            .angles()
            .iter()
            .enumerate()
            .map(|(i, a)| if i % 2 == 0 { a.radians } else { -a.radians })
            .sum();
        return Err(Error::KawasakiViolated { sum });
    }
    match classify_star(star) {
        StarShape::EqualAngles => {
            let sum: i64 = star.creases().iter().map(|&e| assignment.value(e) as i64).sum();
            Ok(sum.abs() == 2)
        }
        StarShape::Miura(run_start) => {
            if !maekawa_holds(star, assignment) {
                return Ok(false);
            }
            // The three creases bounding the two-theta run must not all agree.
            let n = star.degree();
            let e0 = star.creases()[run_start];
            let e1 = star.creases()[(run_start + 1) % n];
            let e2 = star.creases()[(run_start + 2) % n];
            let v0 = assignment.value(e0);
            Ok(!(v0 == assignment.value(e1) && v0 == assignment.value(e2)))
        }
        StarShape::SquareTwist => {
            Ok(maekawa_holds(star, assignment)
                && big_little_big_violations(star, assignment).is_empty())
        }
        StarShape::General => single_vertex_layer_oracle(star, assignment).map(|w| w.is_some()),
    }
}

/// Number of locally flat-foldable assignments of the equal-angle vertex with
/// `2n` creases: `C(2n, n+1) + C(2n, n-1)`.
pub fn count_single_vertex_configs(n: usize) -> BigUint {
    assert!(n >= 1);
    binomial(2 * n, n as i64 + 1) + binomial(2 * n, n as i64 - 1)
}

fn binomial(m: usize, k: i64) -> BigUint {
    if k < 0 || k as usize > m {
        return BigUint::zero();
    }
    let k = (k as usize).min(m - k as usize);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= BigUint::from(m - i);
        den *= BigUint::from(i + 1);
    }
    num / den
}

/// Conditional probability that crease `j` (1-based) is a valley given the
/// prefix sum `r` of creases `1..j`, on the equal-angle vertex `C_{2n}`.
pub fn marginal_probability(n: usize, j: usize, r: i64) -> Result<BigRational> {
    assert!((1..=2 * n).contains(&j), "crease index out of range");
    assert!(
        (r.unsigned_abs() as usize) < j && (r - (j as i64 - 1)) % 2 == 0,
        "prefix sum {r} unreachable at position {j}"
    );
    let m = 2 * n - j;
    let num = binomial(m, half(m as i64 - r + 1)) + binomial(m, half(m as i64 - r - 3));
    let den = binomial(m + 1, half(m as i64 - r + 3)) + binomial(m + 1, half(m as i64 - r - 1));
    if den.is_zero() {
        return Err(Error::ImpossiblePrefix { n, j, r });
    }
    Ok(BigRational::new(num.into(), den.into()))
}

/// Floor-free halving for binomial arguments: callers guarantee parity, and
/// odd intermediate values mark impossible counts which map to k = -1.
fn half(x: i64) -> i64 {
    if x % 2 != 0 {
        -1
    } else {
        x / 2
    }
}

/// Binomial coefficient maintained across the sampler's incremental updates.
#[derive(Clone)]
struct SlidingBinomial {
    m: usize,
    k: i64,
    value: BigUint,
}

impl SlidingBinomial {
    fn new(m: usize, k: i64) -> Self {
        SlidingBinomial { m, k, value: binomial(m, k) }
    }

    /// Move from C(m, k) to C(m-1, k-1) when the drawn step raised the prefix
    /// sum, or C(m-1, k) when it lowered it.
    fn step_down(&mut self, raised: bool) {
        debug_assert!(self.m >= 1);
        let m = BigUint::from(self.m);
        if raised {
            if self.k >= 1 && !self.value.is_zero() {
                self.value = &self.value * BigUint::from(self.k as usize) / m;
            } else {
                self.value = BigUint::zero();
            }
            self.k -= 1;
        } else {
            if self.k >= 0 && (self.k as usize) <= self.m && !self.value.is_zero() {
                self.value = &self.value * BigUint::from(self.m - self.k as usize) / m;
            } else {
                self.value = BigUint::zero();
            }
        }
        self.m -= 1;
    }
}

/// Perfect sampler for the uniform distribution on the locally flat-foldable
/// assignments of `C_{2n}`, in O(n) arithmetic operations.
///
/// Each crease is drawn from its exact conditional marginal; a 64-bit uniform
/// word is compared against the rational threshold by cross-multiplication so
/// no floating-point rounding enters the decision.
pub fn exact_sample_single_vertex<R: Rng + ?Sized>(n: usize, rng: &mut R) -> MvAssignment {
    assert!(n >= 1);
    let two_n = 2 * n;
    let mut assignment = MvAssignment::all_mountain(two_n);
    let mut r: i64 = 0;
    let m0 = two_n - 1;
    // Numerator binomials C(m, (m - r + 1)/2) and C(m, (m - r - 3)/2).
    let mut b1 = SlidingBinomial::new(m0, half(m0 as i64 + 1));
    let mut b2 = SlidingBinomial::new(m0, half(m0 as i64 - 3));
    let mut total = count_single_vertex_configs(n);
    let two64 = BigUint::one() << 64;
    for j in 0..two_n {
        let num = &b1.value + &b2.value;
        debug_assert!(num <= total);
        let u = BigUint::from(rng.gen::<u64>());
        let valley = u * &total < &num * &two64;
        if valley {
            assignment.set(j, VALLEY);
            r += 1;
            total = num;
        } else {
            r -= 1;
            total -= num;
        }
        if j + 1 < two_n {
            b1.step_down(valley);
            b2.step_down(valley);
            debug_assert_eq!(b1.m, two_n - j - 2);
            debug_assert_eq!(b1.k, half(b1.m as i64 - r + 1));
        }
    }
    debug_assert_eq!(assignment.signed_sum().abs(), 2);
    assignment
}

/// All locally flat-foldable assignments of `C_{2n}` in lexicographic order
/// (mountain before valley, crease 0 first).
pub fn enumerate_single_vertex_configs(n: usize) -> Result<Vec<MvAssignment>> {
    if n > ENUMERATION_HALF_DEGREE_BOUND {
        return Err(Error::StateSpaceOverflow { creases: 2 * n, bound: 2 * ENUMERATION_HALF_DEGREE_BOUND });
    }
    let two_n = 2 * n;
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << two_n) {
        let valleys = mask.count_ones() as usize;
        // Mountains n+1 (valleys n-1) or mountains n-1 (valleys n+1).
        if valleys == n - 1 || valleys == n + 1 {
            let mut a = MvAssignment::all_mountain(two_n);
            for i in 0..two_n {
                if mask >> i & 1 == 1 {
                    a.set(i, VALLEY);
                }
            }
            out.push(a);
        }
    }
    out.sort();
    Ok(out)
}
