//! Integration of coherence-vector dynamics.
//!
//! A constant Hamiltonian `H = sum h^m Lambda_m` drives the coherence tensor
//! linearly, `d/dt rho_vec = G rho_vec` with `G = sum h^m (-i ad_{Lambda_m})`,
//! so every constant segment is integrated exactly by `exp(t G)`. Single-term
//! segments use the closed-form Rodrigues expression; everything else falls
//! back to a scaling-and-squaring Taylor series.

use num_complex::Complex;
use num_traits::{Float, One};

use crate::adjoint::{
    bracket_decompose, build_ad, hamiltonian_generator, BracketKind, GeneratorMatrix,
    HamiltonianCoeffs,
};
use crate::coherence::{CoherenceTensor, DensityMatrix};
use crate::error::{invalid, Result};
use crate::linalg::{kron_all, CMat, Entry, Matrix, RMat};
use crate::multi_index::{MultiIndex, MAX_QUBITS};
use crate::pauli::all_pairs;
use crate::scalar::Real;

/// Dense real `4^n x 4^n` propagator acting on coherence tensors.
#[derive(Clone, Debug, PartialEq)]
pub struct PropagatorMatrix<T: Real> {
    n: usize,
    entries: RMat<T>,
}

impl<T: Real> PropagatorMatrix<T> {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            entries: RMat::identity(1 << (2 * n)),
        }
    }

    pub fn from_matrix(n: usize, entries: RMat<T>) -> Result<Self> {
        let d = 1usize << (2 * n);
        if entries.rows() != d || entries.cols() != d {
            return Err(invalid(format!(
                "propagator for {n} qubits must be {d}x{d}, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &RMat<T> {
        &self.entries
    }

    pub fn into_entries(self) -> RMat<T> {
        self.entries
    }

    pub fn apply(&self, t: &CoherenceTensor<T>) -> CoherenceTensor<T> {
        assert_eq!(t.n(), self.n, "propagator and state sizes differ");
        CoherenceTensor::from_raw(self.n, self.entries.mul_vec(t.components()))
    }

    /// `self * rhs`: apply `rhs` first, then `self`.
    pub fn compose(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n);
        Self {
            n: self.n,
            entries: self.entries.matmul(&rhs.entries),
        }
    }

    /// Largest entry of `M^T M - I`.
    pub fn orthogonality_residual(&self) -> T {
        let mtm = self.entries.transpose().matmul(&self.entries);
        mtm.max_abs_diff(&RMat::identity(mtm.rows()))
    }
}

/// `2^((2-n)/2)`: the rotation frequency of every non-affine basis generator
/// on `n` qubits, so that `G^3 = -omega^2 G`.
pub fn rodrigues_frequency<T: Real>(n: usize) -> T {
    T::lit(2.0).powf(T::lit((2.0 - n as f64) / 2.0))
}

/// `exp(t G)` for `G = -i ad_{Lambda_m}` in closed form:
/// `I + sin(wt)/w G + (1 - cos(wt))/w^2 G^2` with `w = 2^((2-n)/2)`.
pub fn rodrigues_exp<T: Real>(m: &MultiIndex, t: T) -> PropagatorMatrix<T> {
    let n = m.len();
    if m.is_affine() {
        log::warn!("rodrigues_exp called with the trivial generator {m}; returning identity");
        return PropagatorMatrix::identity(n);
    }
    let g = build_ad::<T>(m).to_dense();
    let w = rodrigues_frequency::<T>(n);
    let (s, c) = (w * t).sin_cos();
    let g2 = g.matmul(&g);
    let id = RMat::identity(g.rows());
    let entries = &(&id + &g.scaled(s / w)) + &g2.scaled((T::one() - c) / (w * w));
    PropagatorMatrix { n, entries }
}

/// Scaling-and-squaring Taylor exponential of a dense square matrix.
///
/// The matrix is halved until its 1-norm is at most 0.5, the series is summed
/// until a term's 1-norm drops below `Real::series_tol()`, then the result is
/// squared back.
pub fn expm_dense<S: Entry>(a: &Matrix<S>) -> Matrix<S> {
    assert!(a.is_square(), "expm needs a square matrix");
    let half = S::Real::lit(0.5);
    let mut norm = a.one_norm();
    let mut squarings = 0u32;
    while norm > half {
        norm *= half;
        squarings += 1;
    }
    let scale = S::Real::lit(0.5).powi(squarings as i32);
    let scaled = a.scaled(S::from_real(scale));

    let id = Matrix::identity(a.rows());
    let mut sum = id.clone();
    let mut term = id;
    for k in 1..=64 {
        term = term
            .matmul(&scaled)
            .scaled(S::from_real(<S::Real as One>::one() / <S::Real as Real>::from_usize_lossy(k)));
        sum = &sum + &term;
        if term.one_norm() < S::Real::series_tol() {
            break;
        }
    }
    for _ in 0..squarings {
        sum = sum.matmul(&sum);
    }
    sum
}

/// `exp(t G)` by the generic series.
pub fn expm<T: Real>(g: &GeneratorMatrix<T>, t: T) -> PropagatorMatrix<T> {
    let n = g.n();
    if g.is_zero() || t == T::zero() {
        return PropagatorMatrix::identity(n);
    }
    let a = g.to_dense().scaled(t);
    PropagatorMatrix {
        n,
        entries: expm_dense(&a),
    }
}

/// Orbit of pairwise commuting basis generators:
/// `prod_m exp(alpha_m G_m)`, order-independent.
pub fn cartan_exp<T: Real>(alphas: &[(MultiIndex, T)]) -> Result<PropagatorMatrix<T>> {
    let first = alphas
        .first()
        .ok_or_else(|| invalid("cartan_exp needs at least one generator"))?;
    let n = first.0.len();
    for (i, (a, _)) in alphas.iter().enumerate() {
        if a.len() != n {
            return Err(invalid(format!("generator {a} has length {}, expected {n}", a.len())));
        }
        for (b, _) in &alphas[i + 1..] {
            if !bracket_decompose::<T>(a, b, BracketKind::Commutator)?.is_empty() {
                return Err(invalid(format!("generators {a} and {b} do not commute")));
            }
        }
    }
    Ok(alphas
        .iter()
        .fold(PropagatorMatrix::identity(n), |acc, (m, alpha)| {
            rodrigues_exp(m, *alpha).compose(&acc)
        }))
}

/// Weight-1 evolution `exp(t sum_q sum_j h_q^j G_{0..j..0})` as a Kronecker
/// product of per-qubit `1 (+) SO(3)` blocks.
///
/// On `n` qubits the single-slot generator is `2^(-(n-1)/2) G_j` on its
/// factor, so each block is the single-qubit Rodrigues formula for the
/// rescaled coefficient vector.
pub fn local_exp<T: Real>(per_qubit: &[[T; 3]], t: T) -> Result<PropagatorMatrix<T>> {
    let n = per_qubit.len();
    if n == 0 || n > MAX_QUBITS {
        return Err(invalid(format!("local_exp needs 1..={MAX_QUBITS} qubits, got {n}")));
    }
    let pairs = all_pairs::<T>();
    let weight = (T::one() / T::sqrt2()).powi(n as i32 - 1);
    let blocks: Vec<RMat<T>> = per_qubit
        .iter()
        .map(|h| {
            let mut g = RMat::zeros(4, 4);
            for j in 0..3 {
                g = &g + &pairs[j + 1].ad_matrix().scaled(h[j] * weight);
            }
            let len = h.iter().map(|&x| x * x).sum::<T>().sqrt() * weight;
            single_qubit_rodrigues(&g, len, t)
        })
        .collect();
    Ok(PropagatorMatrix {
        n,
        entries: kron_all(&blocks),
    })
}

/// `exp(t g)` for `g = sum_j v_j G_j` with `|v| = len`; `g^3 = -2 len^2 g`.
fn single_qubit_rodrigues<T: Real>(g: &RMat<T>, len: T, t: T) -> RMat<T> {
    let id = RMat::identity(4);
    if len == T::zero() {
        return id;
    }
    let w = T::sqrt2() * len;
    let (s, c) = (w * t).sin_cos();
    &(&id + &g.scaled(s / w)) + &g.matmul(g).scaled((T::one() - c) / (w * w))
}

/// Propagator of a constant Hamiltonian over `dt`; closed form when the
/// Hamiltonian has a single dynamic term.
pub fn segment_propagator<T: Real>(h: &HamiltonianCoeffs<T>, dt: T) -> PropagatorMatrix<T> {
    let dynamic: Vec<_> = h.dynamic_terms().collect();
    match dynamic.as_slice() {
        [] => PropagatorMatrix::identity(h.n()),
        [(m, coeff)] => rodrigues_exp(m, *coeff * dt),
        _ => expm(&hamiltonian_generator(h), dt),
    }
}

/// One constant-Hamiltonian piece of a schedule.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment<T> {
    pub hamiltonian: HamiltonianCoeffs<T>,
    pub duration: T,
}

/// Piecewise-constant driving.
#[derive(Clone, Debug, PartialEq)]
pub struct Schedule<T> {
    n: usize,
    segments: Vec<Segment<T>>,
    sample_step: T,
}

impl<T: Real> Schedule<T> {
    /// `sample_step` defaults to the shortest duration over 64.
    pub fn new(n: usize, segments: Vec<Segment<T>>, sample_step: Option<T>) -> Result<Self> {
        if segments.is_empty() {
            return Err(invalid("schedule has no segments"));
        }
        let mut shortest = T::infinity();
        for (i, s) in segments.iter().enumerate() {
            if s.hamiltonian.n() != n {
                return Err(invalid(format!(
                    "segment {i} acts on {} qubits, schedule has {n}",
                    s.hamiltonian.n()
                )));
            }
            if s.duration <= T::zero() || !s.duration.is_finite() {
                return Err(invalid(format!("segment {i} has non-positive duration {}", s.duration)));
            }
            shortest = shortest.min(s.duration);
        }
        let step = sample_step.unwrap_or(shortest / T::lit(64.0));
        if step.is_nan() || step <= T::zero() || step > shortest * (T::one() + T::lit(1e-12)) {
            return Err(invalid(format!(
                "sample_step {step} must be positive and at most the shortest duration {shortest}"
            )));
        }
        Ok(Self {
            n,
            segments,
            sample_step: step,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn segments(&self) -> &[Segment<T>] {
        &self.segments
    }

    pub fn sample_step(&self) -> T {
        self.sample_step
    }

    pub fn total_duration(&self) -> T {
        self.segments.iter().map(|s| s.duration).sum()
    }

    fn plans(&self) -> Vec<SegmentPlan<T>> {
        let mut start = T::zero();
        self.segments
            .iter()
            .map(|s| {
                let p = SegmentPlan::new(start, s.duration, self.sample_step);
                start += s.duration;
                p
            })
            .collect()
    }

    /// Times at which trajectories are recorded: `0`, then every sample step
    /// inside each segment, with each segment boundary hit exactly.
    pub fn sample_times(&self) -> Vec<T> {
        let mut times = vec![T::zero()];
        for p in self.plans() {
            times.extend(p.times());
        }
        times
    }

    /// Start time of every segment plus the final time.
    pub fn boundaries(&self) -> Vec<T> {
        let mut b = vec![T::zero()];
        let mut t = T::zero();
        for s in &self.segments {
            t += s.duration;
            b.push(t);
        }
        b
    }
}

struct SegmentPlan<T> {
    start: T,
    duration: T,
    step: T,
    full_steps: usize,
    /// Zero when the duration is a whole number of steps.
    remainder: T,
}

impl<T: Real> SegmentPlan<T> {
    fn new(start: T, duration: T, step: T) -> Self {
        let ratio = duration / step;
        let nearest = ratio.round();
        let (full_steps, remainder) = if (ratio - nearest).abs() <= T::lit(1e-9) * nearest.max(T::one()) {
            (nearest.to_usize().unwrap_or(0), T::zero())
        } else {
            let k = ratio.floor();
            (k.to_usize().unwrap_or(0), duration - k * step)
        };
        Self {
            start,
            duration,
            step,
            full_steps,
            remainder,
        }
    }

    fn times(&self) -> Vec<T> {
        let mut t: Vec<T> = (1..=self.full_steps)
            .map(|i| self.start + self.step * T::from_usize_lossy(i))
            .collect();
        if self.remainder > T::zero() {
            t.push(self.start + self.duration);
        } else if let Some(last) = t.last_mut() {
            *last = self.start + self.duration;
        }
        t
    }
}

/// Sampled trajectory of coherence tensors.
#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<T> {
    pub times: Vec<T>,
    pub states: Vec<CoherenceTensor<T>>,
}

impl<T: Real> Trajectory<T> {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    pub fn last(&self) -> Option<&CoherenceTensor<T>> {
        self.states.last()
    }

    /// State recorded closest to time `t`.
    pub fn nearest(&self, t: T) -> Option<(T, &CoherenceTensor<T>)> {
        self.times
            .iter()
            .zip(&self.states)
            .min_by(|a, b| {
                (*a.0 - t)
                    .abs()
                    .partial_cmp(&(*b.0 - t).abs())
                    .expect("finite times")
            })
            .map(|(&time, s)| (time, s))
    }
}

/// Advances `initial` through the schedule, recording at [`Schedule::sample_times`].
pub fn propagate<T: Real>(initial: &CoherenceTensor<T>, s: &Schedule<T>) -> Result<Trajectory<T>> {
    if initial.n() != s.n() {
        return Err(invalid(format!(
            "state has {} qubits, schedule has {}",
            initial.n(),
            s.n()
        )));
    }
    let mut times = vec![T::zero()];
    let mut states = vec![initial.clone()];
    let mut state = initial.clone();
    for (plan, seg) in s.plans().iter().zip(&s.segments) {
        let step = segment_propagator(&seg.hamiltonian, plan.step);
        let plan_times = plan.times();
        let mut next_time = plan_times.into_iter();
        for _ in 0..plan.full_steps {
            state = step.apply(&state);
            times.push(next_time.next().expect("time per step"));
            states.push(state.clone());
        }
        if plan.remainder > T::zero() {
            state = segment_propagator(&seg.hamiltonian, plan.remainder).apply(&state);
            times.push(next_time.next().expect("boundary time"));
            states.push(state.clone());
        }
    }
    Ok(Trajectory { times, states })
}

/// Direct Hilbert-space integration: `rho <- U rho U^H` with
/// `U = exp(-i H dt)`, recorded at the same times as [`propagate`].
pub fn hilbert_oracle<T: Real>(rho0: &DensityMatrix<T>, s: &Schedule<T>) -> Result<Vec<DensityMatrix<T>>> {
    if rho0.n() != s.n() {
        return Err(invalid(format!(
            "density has {} qubits, schedule has {}",
            rho0.n(),
            s.n()
        )));
    }
    let unitary = |h: &CMat<T>, dt: T| expm_dense(&h.scaled(Complex::new(T::zero(), -dt)));
    let conjugate = |u: &CMat<T>, rho: &CMat<T>| u.matmul(rho).matmul(&u.adjoint());

    let n = s.n();
    let mut rho = rho0.entries().clone();
    let mut out = vec![rho0.clone()];
    for (plan, seg) in s.plans().iter().zip(&s.segments) {
        let h = seg.hamiltonian.dense();
        let u = unitary(&h, plan.step);
        for _ in 0..plan.full_steps {
            rho = conjugate(&u, &rho);
            out.push(DensityMatrix::operator(n, rho.clone())?);
        }
        if plan.remainder > T::zero() {
            rho = conjugate(&unitary(&h, plan.remainder), &rho);
            out.push(DensityMatrix::operator(n, rho.clone())?);
        }
    }
    Ok(out)
}
