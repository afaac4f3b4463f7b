//! The face-flip Markov chain and its diagnostics: exact transition matrices
//! over enumerated state spaces, total-variation mixing times, spectral gaps,
//! and the exact uniform sampler for square grids.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::families::{reference_assignment, GridLayout};
use crate::flipgraph::{build_flip_graph, graph_invariants, FlipGraph};
use crate::local::flip_stays_valid;
use crate::pattern::{CreasePattern, MvAssignment};

/// State spaces above this size switch diagnostics from exact rationals to
/// doubles.
pub const RATIONAL_MODE_BOUND: usize = 4096;
/// Step cap for the exact mixing-time iteration.
pub const MIXING_STEP_CAP: usize = 100_000;

/// One lazy face-flip step: choose a face uniformly at random; with
/// probability 1/2 do nothing, otherwise flip it if the result stays locally
/// flat-foldable. Callers maintain the invariant that `assignment` is valid.
pub fn face_flip_step<R: Rng + ?Sized>(
    pattern: &CreasePattern,
    assignment: &MvAssignment,
    rng: &mut R,
) -> MvAssignment {
    let mut state = assignment.clone();
    face_flip_step_in_place(pattern, &mut state, rng);
    state
}

/// In-place step; returns the flipped face when a flip was applied.
pub fn face_flip_step_in_place<R: Rng + ?Sized>(
    pattern: &CreasePattern,
    state: &mut MvAssignment,
    rng: &mut R,
) -> Option<usize> {
    let face = rng.gen_range(0..pattern.face_count());
    let act = rng.gen::<bool>();
    if act && flip_stays_valid(pattern, state, face) {
        for &c in pattern.face_creases(face) {
            state.flip(c);
        }
        Some(face)
    } else {
        None
    }
}

#[derive(Debug, Clone)]
pub struct ChainConfig<'a> {
    pub pattern: &'a CreasePattern,
    pub initial: MvAssignment,
    pub steps: u64,
    pub seed: u64,
    /// Stream id for trajectory splitting; trajectories with distinct streams
    /// are independent.
    pub stream: u64,
    /// Record cumulative accepted-flip counts every this many steps.
    pub report_every: Option<u64>,
}

#[derive(Debug, Clone)]
pub struct ChainTrace {
    pub final_state: MvAssignment,
    pub accepted: u64,
    pub per_face_flips: Vec<u64>,
    /// (step, accepted so far) snapshots at the reporting interval.
    pub reports: Vec<(u64, u64)>,
}

/// Run the face-flip chain for the configured step budget. Deterministic for
/// a fixed `(seed, stream)`.
pub fn run_chain(config: &ChainConfig) -> Result<ChainTrace> {
    config.pattern.assert_covers(&config.initial)?;
    if !crate::local::is_locally_flat_foldable(config.pattern, &config.initial) {
        return Err(Error::NotLocallyFlatFoldable);
    }
    let mut rng = crate::rng::stream(config.seed, config.stream);
    let mut state = config.initial.clone();
    let mut per_face_flips = vec![0u64; config.pattern.face_count()];
    let mut accepted = 0u64;
    let mut reports = Vec::new();
    for t in 1..=config.steps {
        if let Some(face) = face_flip_step_in_place(config.pattern, &mut state, &mut rng) {
            per_face_flips[face] += 1;
            accepted += 1;
        }
        if let Some(interval) = config.report_every {
            if interval > 0 && t % interval == 0 {
                reports.push((t, accepted));
            }
        }
    }
    Ok(ChainTrace { final_state: state, accepted, per_face_flips, reports })
}

/// Exactly uniform sample over the locally flat-foldable assignments of a
/// square grid: flip each face of the reference independently with
/// probability 1/2. Face flips commute and states correspond to flip subsets
/// up to complementation, so each state is hit by exactly two subsets.
pub fn exact_sample_square_grid<R: Rng + ?Sized>(
    rows: usize,
    cols: usize,
    rng: &mut R,
) -> Result<MvAssignment> {
    let pattern = crate::families::generate(crate::families::PatternSpec::SquareGrid {
        rows,
        cols,
    })?;
    exact_sample_square_grid_on(&pattern, rng)
}

/// Same sampler against a caller-held square-grid pattern.
pub fn exact_sample_square_grid_on<R: Rng + ?Sized>(
    pattern: &CreasePattern,
    rng: &mut R,
) -> Result<MvAssignment> {
    GridLayout::from_pattern(pattern)?;
    let mut state = reference_assignment(pattern)?;
    for face in 0..pattern.face_count() {
        if rng.gen::<bool>() {
            for &c in pattern.face_creases(face) {
                state.flip(c);
            }
        }
    }
    Ok(state)
}

/// Probability vector over an enumerated state space, exact or floating.
#[derive(Debug, Clone)]
pub enum Distribution {
    Rational(Vec<BigRational>),
    Double(Vec<f64>),
}

impl Distribution {
    pub fn uniform_rational(n: usize) -> Self {
        let p = BigRational::new(BigInt::one(), BigInt::from(n));
        Distribution::Rational(vec![p; n])
    }

    pub fn point_mass(n: usize, at: usize) -> Self {
        let mut v = vec![BigRational::zero(); n];
        v[at] = BigRational::one();
        Distribution::Rational(v)
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        let total: u64 = counts.iter().sum();
        Distribution::Double(counts.iter().map(|&c| c as f64 / total as f64).collect())
    }

    pub fn len(&self) -> usize {
        match self {
            Distribution::Rational(v) => v.len(),
            Distribution::Double(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Validates nonnegativity and unit mass (exactly in rational mode,
    /// within 1e-12 in double mode).
    pub fn validate(&self) -> Result<()> {
        match self {
            Distribution::Rational(v) => {
                if v.iter().any(|p| p.is_negative()) {
                    return Err(Error::MalformedPattern("negative probability".into()));
                }
                let sum: BigRational = v.iter().sum();
                if sum != BigRational::one() {
                    return Err(Error::MalformedPattern("probabilities do not sum to 1".into()));
                }
            }
            Distribution::Double(v) => {
                if v.iter().any(|p| *p < 0.0) {
                    return Err(Error::MalformedPattern("negative probability".into()));
                }
                let sum: f64 = v.iter().sum();
                if (sum - 1.0).abs() > 1e-12 {
                    return Err(Error::MalformedPattern(format!(
                        "probabilities sum to {sum}, expected 1 within 1e-12"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Total-variation distance, `(1/2) * sum |mu - nu|`, as a double.
pub fn tv_distance(mu: &Distribution, nu: &Distribution) -> Result<f64> {
    if mu.len() != nu.len() {
        return Err(Error::MismatchedUniverse);
    }
    Ok(match (mu, nu) {
        (Distribution::Rational(a), Distribution::Rational(b)) => {
            tv_rational(a, b).to_f64().unwrap()
        }
        (a, b) => {
            let fa = to_doubles(a);
            let fb = to_doubles(b);
            fa.iter().zip(&fb).map(|(x, y)| (x - y).abs()).sum::<f64>() / 2.0
        }
    })
}

fn to_doubles(d: &Distribution) -> Vec<f64> {
    match d {
        Distribution::Rational(v) => v.iter().map(|p| p.to_f64().unwrap()).collect(),
        Distribution::Double(v) => v.clone(),
    }
}

pub fn tv_rational(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let two = BigRational::from_integer(2.into());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).sum::<BigRational>() / two
}

/// Exact row-stochastic transition matrix of the face-flip chain over the
/// enumerated state space: each flippable face moves with probability
/// 1/(2*faces); multi-edges count once per face.
pub struct TransitionMatrix {
    pub graph: FlipGraph,
    pub rows: Vec<Vec<BigRational>>,
    /// Face count of the underlying pattern; every transition probability is
    /// an integer multiple of 1/(2*faces).
    pub faces: usize,
}

pub fn transition_matrix(pattern: &CreasePattern) -> Result<TransitionMatrix> {
    let graph = build_flip_graph(pattern)?;
    transition_matrix_over(pattern, graph)
}

pub fn transition_matrix_over(
    pattern: &CreasePattern,
    graph: FlipGraph,
) -> Result<TransitionMatrix> {
    let n = graph.states.len();
    if n > RATIONAL_MODE_BOUND {
        return Err(Error::StateSpaceOverflow { creases: n, bound: RATIONAL_MODE_BOUND });
    }
    let denom = BigInt::from(2 * pattern.face_count());
    let step = BigRational::new(BigInt::one(), denom);
    let mut rows = vec![vec![BigRational::zero(); n]; n];
    for (i, nbrs) in graph.adjacency.iter().enumerate() {
        for &(j, _face) in nbrs {
            rows[i][j] += &step;
        }
        let off: BigRational = rows[i].iter().sum();
        rows[i][i] = BigRational::one() - off;
    }
    Ok(TransitionMatrix { graph, rows, faces: pattern.face_count() })
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// mu -> mu P for a row vector mu.
    pub fn evolve(&self, mu: &[BigRational]) -> Vec<BigRational> {
        let n = self.size();
        let mut out = vec![BigRational::zero(); n];
        for (i, mi) in mu.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            for (j, pij) in self.rows[i].iter().enumerate() {
                if !pij.is_zero() {
                    out[j] += mi * pij;
                }
            }
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (i + 1..n).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn to_doubles(&self) -> Vec<Vec<f64>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|p| p.to_f64().unwrap()).collect())
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct MixingCurve {
    /// Worst-start total-variation distance to uniform after t steps,
    /// beginning at t = 0.
    pub max_tv: Vec<BigRational>,
    pub tmix: usize,
}

/// Exact epsilon-mixing time by matrix powering: the first t at which the
/// worst point-mass start is within `eps` of uniform in total variation.
/// Point masses suffice because the worst measure is a point mass.
///
/// The powering runs over integer numerators with the implicit common
/// denominator `(2 * faces)^t`, so every comparison is exact and no rational
/// normalization happens on the hot path.
pub fn exact_mixing_time(pattern: &CreasePattern, eps: &BigRational) -> Result<MixingCurve> {
    let matrix = transition_matrix(pattern)?;
    exact_mixing_time_of(&matrix, eps)
}

pub fn exact_mixing_time_of(matrix: &TransitionMatrix, eps: &BigRational) -> Result<MixingCurve> {
    let invariants = graph_invariants(&matrix.graph);
    if !invariants.connected {
        return Err(Error::ReducibleChain);
    }
    let n = matrix.size();
    // Integer transition counts: (2 * faces) * P, sparse by row.
    let denom_small: u64 = 2 * matrix.faces as u64;
    let mut q = vec![Vec::new(); n];
    for (i, row) in matrix.rows.iter().enumerate() {
        for (j, p) in row.iter().enumerate() {
            if !p.is_zero() {
                let count = p * BigRational::from_integer(BigInt::from(denom_small));
                debug_assert!(count.is_integer());
                q[i].push((j, u64::try_from(count.to_integer()).expect("small count")));
            }
        }
    }
    // Rows of P^t as integer numerators over denom_small^t.
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|x| {
            let mut v = vec![BigInt::zero(); n];
            v[x] = BigInt::one();
            v
        })
        .collect();
    let mut denom = BigInt::one();
    let big_n = BigInt::from(n);
    let mut max_tv = Vec::new();
    for t in 0..=MIXING_STEP_CAP {
        // Worst-start TV: max_x sum_i |n*num_i - denom| / (2*n*denom).
        let worst_dev = rows
            .iter()
            .map(|row| {
                row.iter().map(|num| (num * &big_n - &denom).magnitude().clone()).sum::<num_bigint::BigUint>()
            })
            .max()
            .unwrap();
        let worst_dev = BigInt::from(worst_dev);
        let two_n_denom = BigInt::from(2) * &big_n * &denom;
        let worst = BigRational::new(worst_dev.clone(), two_n_denom.clone());
        max_tv.push(worst);
        // worst <= eps  <=>  worst_dev * eps.denom <= 2*n*denom * eps.numer.
        if &worst_dev * eps.denom() <= &two_n_denom * eps.numer() {
            return Ok(MixingCurve { max_tv, tmix: t });
        }
        for row in rows.iter_mut() {
            let mut next = vec![BigInt::zero(); n];
            for (i, num) in row.iter().enumerate() {
                if num.is_zero() {
                    continue;
                }
                for &(j, count) in &q[i] {
                    next[j] += num * count;
                }
            }
            *row = next;
        }
        denom *= denom_small;
    }
    Err(Error::MixingCapExceeded(MIXING_STEP_CAP))
}

/// Spectral gap 1 - lambda_2 of the lazy chain, by power iteration on the
/// uniform-deflated transition matrix. The chain must be irreducible; all
/// eigenvalues of the lazy reversible chain are nonnegative, so the deflated
/// dominant eigenvalue is lambda_2.
pub fn spectral_gap(pattern: &CreasePattern) -> Result<f64> {
    let matrix = transition_matrix(pattern)?;
    spectral_gap_of(&matrix)
}

pub fn spectral_gap_of(matrix: &TransitionMatrix) -> Result<f64> {
    let invariants = graph_invariants(&matrix.graph);
    if !invariants.connected {
        return Err(Error::ReducibleChain);
    }
    let p = matrix.to_doubles();
    let n = p.len();
    if n == 1 {
        return Ok(1.0);
    }
    let deflate = |v: &mut [f64]| {
        let mean = v.iter().sum::<f64>() / n as f64;
        for x in v.iter_mut() {
            *x -= mean;
        }
    };
    let mut x: Vec<f64> = (0..n).map(|i| ((i as f64) * 0.7391 + 0.13).sin()).collect();
    deflate(&mut x);
    let norm = |v: &[f64]| v.iter().map(|a| a * a).sum::<f64>().sqrt();
    let nx = norm(&x);
    if nx == 0.0 {
        return Ok(1.0);
    }
    for a in x.iter_mut() {
        *a /= nx;
    }
    let mut lambda = 0.0f64;
    for _ in 0..1_000_000 {
        let mut y = vec![0.0; n];
        for i in 0..n {
            let xi = x[i];
            if xi != 0.0 {
                for j in 0..n {
                    y[j] += xi * p[i][j];
                }
            }
        }
        deflate(&mut y);
        // P is symmetric, so the Rayleigh quotient converges to lambda_2.
        let next = x.iter().zip(&y).map(|(a, b)| a * b).sum::<f64>();
        let ny = norm(&y);
        if ny < 1e-300 {
            return Ok(1.0);
        }
        for (a, b) in x.iter_mut().zip(&y) {
            *a = b / ny;
        }
        if (next - lambda).abs() <= 1e-12 {
            return Ok(1.0 - next);
        }
        lambda = next;
    }
    Ok(1.0 - lambda)
}

/// Documented constant-factor extrapolation: tau(eps) <= ceil(log2(1/eps)) *
/// tau(1/4). This never substitutes for the exact computation on enumerable
/// instances; it exists for reasoning about sizes beyond them.
pub fn tmix_extrapolation_bound(tmix_quarter: usize, eps: f64) -> usize {
    assert!(eps > 0.0 && eps < 1.0);
    (1.0 / eps).log2().ceil() as usize * tmix_quarter
}

/// One row of the mixing scaling report.
#[derive(Debug, Clone, serde::Serialize)]
pub struct MixRow {
    pub size: String,
    pub faces: usize,
    pub omega: usize,
    pub tmix: usize,
    pub gap: f64,
    /// tmix / (faces * ln faces); the trend diagnostic for the n log n bound.
    pub normalized: f64,
    /// "rational" when the exact path was used.
    pub mode: &'static str,
}

pub fn mix_row(pattern: &CreasePattern, label: &str, eps: &BigRational) -> Result<MixRow> {
    let matrix = transition_matrix(pattern)?;
    let curve = exact_mixing_time_of(&matrix, eps)?;
    let gap = spectral_gap_of(&matrix)?;
    let faces = pattern.face_count();
    let nlogn = (faces as f64) * (faces as f64).ln().max(f64::MIN_POSITIVE);
    Ok(MixRow {
        size: label.to_string(),
        faces,
        omega: matrix.size(),
        tmix: curve.tmix,
        gap,
        normalized: if nlogn > 0.0 { curve.tmix as f64 / nlogn } else { f64::NAN },
        mode: "rational",
    })
}

/// Mixing diagnostics for a series of instances, for trend inspection of the
/// `tmix / (n ln n)` column. Overflow or reducibility on any instance
/// propagates.
pub fn mixing_scaling_report(
    instances: &[(&str, &CreasePattern)],
    eps: &BigRational,
) -> Result<Vec<MixRow>> {
    instances.iter().map(|(label, pattern)| mix_row(pattern, label, eps)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, PatternSpec, TwistMode};
    use num_traits::FromPrimitive;

    fn quarter() -> BigRational {
        BigRational::new(1.into(), 4.into())
    }

    #[test]
    fn transition_matrix_s22() {
        let p = generate(PatternSpec::SquareGrid { rows: 2, cols: 2 }).unwrap();
        let m = transition_matrix(&p).unwrap();
        assert_eq!(m.size(), 8);
        let half = BigRational::new(1.into(), 2.into());
        let eighth = BigRational::new(1.into(), 8.into());
        for i in 0..8 {
            assert_eq!(m.rows[i][i], half);
            let row_sum: BigRational = m.rows[i].iter().sum();
            assert_eq!(row_sum, BigRational::one());
            for j in 0..8 {
                if i != j && !m.rows[i][j].is_zero() {
                    assert_eq!(m.rows[i][j], eighth);
                }
            }
        }
        assert!(m.is_symmetric());
        // Uniform is stationary: pi P = pi.
        let pi = vec![eighth.clone(); 8];
        assert_eq!(m.evolve(&pi), pi);
    }

    #[test]
    fn s12_matrix_and_gap() {
        let p = generate(PatternSpec::SquareGrid { rows: 1, cols: 2 }).unwrap();
        let m = transition_matrix(&p).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(m.rows, vec![vec![half.clone(), half.clone()], vec![half.clone(), half]]);
        let gap = spectral_gap_of(&m).unwrap();
        assert!((gap - 1.0).abs() < 1e-9);
        let curve = exact_mixing_time_of(&m, &quarter()).unwrap();
        assert_eq!(curve.tmix, 1);
    }

    #[test]
    fn s22_gap_is_half() {
        let p = generate(PatternSpec::SquareGrid { rows: 2, cols: 2 }).unwrap();
        let gap = spectral_gap(&p).unwrap();
        assert!((gap - 0.5).abs() < 1e-9, "gap {gap}");
    }

    #[test]
    fn mixing_curve_is_monotone() {
        for p in [
            generate(PatternSpec::SquareGrid { rows: 2, cols: 2 }).unwrap(),
            generate(PatternSpec::SingleVertex { n: 2 }).unwrap(),
            generate(PatternSpec::Miura { rows: 2, cols: 2, theta: 1.0 }).unwrap(),
        ] {
            let curve = exact_mixing_time(&p, &quarter()).unwrap();
            for w in curve.max_tv.windows(2) {
                assert!(w[1] <= w[0], "TV increased");
            }
        }
    }

    #[test]
    fn kite_chain_is_reducible() {
        let p = generate(PatternSpec::Kite { rows: 2, cols: 2, theta: 0.5 }).unwrap();
        assert!(matches!(exact_mixing_time(&p, &quarter()), Err(Error::ReducibleChain)));
        assert!(matches!(spectral_gap(&p), Err(Error::ReducibleChain)));
    }

    #[test]
    fn chain_runs_are_deterministic_and_stay_valid() {
        let p = generate(PatternSpec::Triangle { rows: 3, cols: 3 }).unwrap();
        let initial = reference_assignment(&p).unwrap();
        let config = ChainConfig {
            pattern: &p,
            initial: initial.clone(),
            steps: 5000,
            seed: 11,
            stream: 0,
            report_every: Some(1000),
        };
        let a = run_chain(&config).unwrap();
        let b = run_chain(&config).unwrap();
        assert_eq!(a.final_state, b.final_state);
        assert_eq!(a.accepted, b.accepted);
        assert_eq!(a.reports.len(), 5);
        assert!(crate::local::is_locally_flat_foldable(&p, &a.final_state));
        // Zero budget returns the initial state.
        let zero = run_chain(&ChainConfig { steps: 0, ..config }).unwrap();
        assert_eq!(zero.final_state, initial);
    }

    #[test]
    fn kite_step_only_toggles_whole_components() {
        let p = generate(PatternSpec::Kite { rows: 2, cols: 2, theta: 0.5 }).unwrap();
        let initial = reference_assignment(&p).unwrap();
        let sets = crate::families::kite_flip_sets(&p).unwrap();
        let mut rng = crate::rng::seeded(3);
        let mut state = initial.clone();
        for _ in 0..500 {
            state = face_flip_step(&p, &state, &mut rng);
            assert!(crate::local::is_locally_flat_foldable(&p, &state));
        }
        // Every crease difference from the reference covers whole sets.
        for set in &sets {
            let flipped: Vec<bool> =
                set.iter().map(|&c| state.value(c) != initial.value(c)).collect();
            assert!(
                flipped.iter().all(|&f| f == flipped[0]),
                "partial component toggled"
            );
        }
    }

    #[test]
    fn exact_square_grid_sampler_is_uniform_on_s22() {
        // Audit: enumerate all 16 flip subsets and group by outcome.
        let p = generate(PatternSpec::SquareGrid { rows: 2, cols: 2 }).unwrap();
        let reference = reference_assignment(&p).unwrap();
        let mut counts: std::collections::HashMap<MvAssignment, usize> = Default::default();
        for mask in 0u32..16 {
            let mut state = reference.clone();
            for face in 0..4 {
                if mask >> face & 1 == 1 {
                    for &c in p.face_creases(face) {
                        state.flip(c);
                    }
                }
            }
            *counts.entry(state).or_default() += 1;
        }
        assert_eq!(counts.len(), 8);
        assert!(counts.values().all(|&c| c == 2));
        // And the sampler only emits locally flat-foldable states.
        let mut rng = crate::rng::seeded(5);
        for _ in 0..200 {
            let s = exact_sample_square_grid(2, 3, &mut rng).unwrap();
            assert!(crate::local::is_locally_flat_foldable(&p2x3(), &s));
        }
    }

    fn p2x3() -> CreasePattern {
        generate(PatternSpec::SquareGrid { rows: 2, cols: 3 }).unwrap()
    }

    #[test]
    fn spectral_sandwich_holds() {
        // (1/gap - 1) ln(1/(2 eps)) <= tmix(eps) <= (1/gap) ln(1/(eps pi_min)).
        let eps = quarter();
        let epsf = 0.25f64;
        for p in [
            generate(PatternSpec::SquareGrid { rows: 1, cols: 2 }).unwrap(),
            generate(PatternSpec::SquareGrid { rows: 2, cols: 2 }).unwrap(),
            generate(PatternSpec::SingleVertex { n: 2 }).unwrap(),
            generate(PatternSpec::SingleVertex { n: 3 }).unwrap(),
            generate(PatternSpec::SquareTwist {
                rows: 1,
                cols: 1,
                mode: TwistMode::Alternating,
            })
            .unwrap(),
        ] {
            let m = transition_matrix(&p).unwrap();
            let curve = exact_mixing_time_of(&m, &eps).unwrap();
            let gap = spectral_gap_of(&m).unwrap();
            let pi_min = 1.0 / m.size() as f64;
            let lower = (1.0 / gap - 1.0) * (1.0 / (2.0 * epsf)).ln();
            let upper = (1.0 / gap) * (1.0 / (epsf * pi_min)).ln();
            let t = curve.tmix as f64;
            assert!(t >= lower - 1e-9, "lower bound fails: {t} < {lower}");
            assert!(t <= upper + 1e-9, "upper bound fails: {t} > {upper}");
        }
    }

    #[test]
    fn extrapolation_helper() {
        assert_eq!(tmix_extrapolation_bound(7, 0.25), 14);
        assert_eq!(tmix_extrapolation_bound(7, 1.0 / 64.0), 42);
    }

    #[test]
    fn tv_distance_examples() {
        let u8th = Distribution::uniform_rational(8);
        assert_eq!(tv_distance(&u8th, &u8th).unwrap(), 0.0);
        let a = Distribution::point_mass(4, 0);
        let b = Distribution::point_mass(4, 3);
        assert_eq!(tv_distance(&a, &b).unwrap(), 1.0);
        // Uniform on 8 vs uniform on 4 of them.
        let nu = Distribution::Double(vec![0.25, 0.25, 0.25, 0.25, 0.0, 0.0, 0.0, 0.0]);
        let mu = Distribution::Double(vec![0.125; 8]);
        assert_eq!(tv_distance(&mu, &nu).unwrap(), 0.5);
        assert!(tv_distance(&a, &mu).is_err());
        let _ = BigRational::from_f64(0.5);
    }
}
