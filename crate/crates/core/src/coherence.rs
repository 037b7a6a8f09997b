//! Tensor-of-coherences state representation.
//!
//! A density operator on `n` qubits is stored as the real vector of its
//! expectation values `tr(rho Lambda_m)` over all `4^n` product-operator basis
//! elements, indexed by the big-endian linear encoding of [`MultiIndex`].
//! Qubit positions in this module are 1-based.

use num_complex::Complex;
use num_traits::Zero;

use crate::eigen::hermitian_eigenvalues;
use crate::error::{invalid, Error, Result};
use crate::linalg::{kron_all, CMat};
use crate::multi_index::{MultiIndex, MAX_QUBITS};
use crate::pauli::lambda_dense;
use crate::scalar::Real;

/// Eigenvalues below this are reported as a negative partial transpose.
pub const PPT_THRESHOLD: f64 = -1e-9;

/// Dense `Lambda_m` as a `2^n x 2^n` complex matrix.
pub fn basis_element<T: Real>(m: &MultiIndex) -> CMat<T> {
    let factors: Vec<CMat<T>> = m.digits().iter().map(|&d| lambda_dense(d as usize)).collect();
    kron_all(&factors)
}

/// `tr(a * b)` without forming the product.
pub(crate) fn trace_of_product<T: Real>(a: &CMat<T>, b: &CMat<T>) -> Complex<T> {
    let d = a.rows();
    let mut acc = Complex::zero();
    for i in 0..d {
        for k in 0..d {
            acc += a[(i, k)] * b[(k, i)];
        }
    }
    acc
}

/// `(1/sqrt(2))^n`, the affine component of every valid tensor.
pub fn affine_value<T: Real>(n: usize) -> T {
    let half = T::lit(0.5).powi((n / 2) as i32);
    if n.is_multiple_of(2) {
        half
    } else {
        half / T::sqrt2()
    }
}

fn check_qubits(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        return Err(invalid(format!("qubit count {n} outside 1..={MAX_QUBITS}")));
    }
    Ok(())
}

/// Complex Hermitian `2^n x 2^n` matrix: a density operator, or a Hamiltonian
/// when built with [`DensityMatrix::operator`].
#[derive(Clone, Debug)]
pub struct DensityMatrix<T: Real> {
    n: usize,
    entries: CMat<T>,
}

impl<T: Real> DensityMatrix<T> {
    /// Validates shape, Hermiticity, and unit trace.
    pub fn new(n: usize, entries: CMat<T>) -> Result<Self> {
        let op = Self::operator(n, entries)?;
        let tr = op.entries.trace();
        if (tr.re - T::one()).abs() > T::validation_tol() || tr.im.abs() > T::validation_tol() {
            return Err(Error::Validation(format!("density trace is {tr}, expected 1")));
        }
        Ok(op)
    }

    /// Hermitian operator container; the unit-trace requirement is waived.
    pub fn operator(n: usize, entries: CMat<T>) -> Result<Self> {
        check_qubits(n)?;
        let d = 1usize << n;
        if entries.rows() != d || entries.cols() != d {
            return Err(invalid(format!(
                "expected a {d}x{d} matrix for {n} qubits, got {}x{}",
                entries.rows(),
                entries.cols()
            )));
        }
        let res = entries.hermitian_residual();
        if res > T::validation_tol() {
            return Err(Error::Validation(format!(
                "matrix is not Hermitian (residual {res})"
            )));
        }
        Ok(Self { n, entries })
    }

    /// Projector onto a (not necessarily normalized) ket.
    pub fn from_ket(n: usize, ket: &[Complex<T>]) -> Result<Self> {
        let norm2: T = ket.iter().map(|a| a.norm_sqr()).sum();
        if norm2 == T::zero() {
            return Err(invalid("zero ket"));
        }
        let d = ket.len();
        let m = CMat::from_fn(d, d, |r, c| ket[r] * ket[c].conj() / norm2);
        Self::new(n, m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &CMat<T> {
        &self.entries
    }

    pub fn into_entries(self) -> CMat<T> {
        self.entries
    }

    /// Ascending eigenvalues.
    pub fn eigenvalues(&self) -> Result<Vec<T>> {
        hermitian_eigenvalues(&self.entries)
    }

    /// `tr(rho^2)`.
    pub fn purity(&self) -> T {
        trace_of_product(&self.entries, &self.entries).re
    }
}

/// Real vector of the `4^n` coherences `tr(rho Lambda_m)`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceTensor<T> {
    n: usize,
    components: Vec<T>,
}

impl<T: Real> CoherenceTensor<T> {
    /// Validates length and the affine component `(1/sqrt 2)^n`.
    pub fn new(n: usize, components: Vec<T>) -> Result<Self> {
        check_qubits(n)?;
        let len = 1usize << (2 * n);
        if components.len() != len {
            return Err(invalid(format!(
                "expected {len} components for {n} qubits, got {}",
                components.len()
            )));
        }
        let want = affine_value::<T>(n);
        if (components[0] - want).abs() > T::validation_tol() {
            return Err(Error::Validation(format!(
                "affine component is {}, expected {want}",
                components[0]
            )));
        }
        Ok(Self { n, components })
    }

    /// The maximally mixed state: affine component only.
    pub fn maximally_mixed(n: usize) -> Result<Self> {
        check_qubits(n)?;
        let mut c = vec![T::zero(); 1 << (2 * n)];
        c[0] = affine_value(n);
        Self::new(n, c)
    }

    /// Builds from sparse `(index, value)` pairs; the affine term is filled in
    /// when absent.
    pub fn from_terms<'a>(n: usize, terms: impl IntoIterator<Item = (&'a str, T)>) -> Result<Self> {
        check_qubits(n)?;
        let mut c = vec![T::zero(); 1 << (2 * n)];
        c[0] = affine_value(n);
        for (idx, v) in terms {
            let m: MultiIndex = idx.parse()?;
            if m.len() != n {
                return Err(invalid(format!("index {idx} has length {}, expected {n}", m.len())));
            }
            c[m.linear()] = v;
        }
        Self::new(n, c)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[T] {
        &self.components
    }

    pub fn into_components(self) -> Vec<T> {
        self.components
    }

    pub fn get(&self, m: &MultiIndex) -> T {
        self.components[m.linear()]
    }

    /// Nonzero (beyond `tol`) components in linear order.
    pub fn nonzero(&self, tol: T) -> Vec<(MultiIndex, T)> {
        self.components
            .iter()
            .enumerate()
            .filter(|(_, v)| v.abs() > tol)
            .map(|(i, &v)| (MultiIndex::from_linear(i, self.n), v))
            .collect()
    }

    pub(crate) fn from_raw(n: usize, components: Vec<T>) -> Self {
        debug_assert_eq!(components.len(), 1 << (2 * n));
        Self { n, components }
    }
}

/// `components[m] = tr(rho Lambda_m)` for every multi-index.
pub fn from_density<T: Real>(rho: &DensityMatrix<T>) -> Result<CoherenceTensor<T>> {
    let tr = rho.entries.trace();
    if (tr.re - T::one()).abs() > T::validation_tol() {
        return Err(Error::Validation(format!("density trace is {tr}, expected 1")));
    }
    let components = MultiIndex::all(rho.n)
        .map(|m| trace_of_product(&rho.entries, &basis_element::<T>(&m)).re)
        .collect();
    CoherenceTensor::new(rho.n, components)
}

/// `rho = sum_m components[m] Lambda_m`.
pub fn to_density<T: Real>(t: &CoherenceTensor<T>) -> DensityMatrix<T> {
    DensityMatrix {
        n: t.n,
        entries: expand(t.n, &t.components),
    }
}

pub(crate) fn expand<T: Real>(n: usize, components: &[T]) -> CMat<T> {
    let d = 1usize << n;
    let mut rho = CMat::zeros(d, d);
    for (i, &v) in components.iter().enumerate() {
        if v == T::zero() {
            continue;
        }
        let lam = basis_element::<T>(&MultiIndex::from_linear(i, n));
        for r in 0..d {
            for c in 0..d {
                let e = lam[(r, c)];
                if !e.is_zero() {
                    rho[(r, c)] += e * v;
                }
            }
        }
    }
    rho
}

/// Squared Euclidean norm of the tensor, equal to `tr(rho^2)`.
pub fn purity<T: Real>(t: &CoherenceTensor<T>) -> T {
    t.components.iter().map(|&x| x * x).sum()
}

fn check_position(n: usize, q: usize) -> Result<()> {
    if q == 0 || q > n {
        return Err(invalid(format!("qubit position {q} outside 1..={n}")));
    }
    Ok(())
}

/// Traces out the 1-based positions in `traced`.
///
/// Each surviving component is `(sqrt 2)^k` times the input component with a
/// 0 in every traced slot.
pub fn partial_trace<T: Real>(t: &CoherenceTensor<T>, traced: &[usize]) -> Result<CoherenceTensor<T>> {
    let n = t.n;
    let mut drop = vec![false; n];
    for &q in traced {
        check_position(n, q)?;
        drop[q - 1] = true;
    }
    let k = drop.iter().filter(|&&d| d).count();
    if k == 0 {
        return Err(invalid("partial trace needs at least one qubit"));
    }
    if k == n {
        return Err(invalid("cannot trace out every qubit"));
    }
    let kept = n - k;
    let scale = T::sqrt2().powi(k as i32);
    let components = MultiIndex::all(kept)
        .map(|m| {
            let mut digits = m.digits().iter();
            let full = (0..n).fold(0usize, |acc, slot| {
                let d = if drop[slot] { 0 } else { *digits.next().unwrap() };
                (acc << 2) | d as usize
            });
            t.components[full] * scale
        })
        .collect();
    CoherenceTensor::new(kept, components)
}

/// Keeps only the listed 1-based positions, in the given order.
///
/// Equivalent to tracing out the complement and then permuting the remaining
/// slots into the order of `keep`.
pub fn reduced<T: Real>(t: &CoherenceTensor<T>, keep: &[usize]) -> Result<CoherenceTensor<T>> {
    let n = t.n;
    for &q in keep {
        check_position(n, q)?;
    }
    let mut seen = vec![false; n];
    for &q in keep {
        if std::mem::replace(&mut seen[q - 1], true) {
            return Err(invalid(format!("qubit {q} listed twice")));
        }
    }
    if keep.is_empty() {
        return Err(invalid("cannot trace out every qubit"));
    }
    let k = n - keep.len();
    let scale = T::sqrt2().powi(k as i32);
    let components = MultiIndex::all(keep.len())
        .map(|m| {
            let mut full = vec![0u8; n];
            for (&q, &d) in keep.iter().zip(m.digits()) {
                full[q - 1] = d;
            }
            let lin = full.iter().fold(0usize, |acc, &d| (acc << 2) | d as usize);
            t.components[lin] * scale
        })
        .collect();
    CoherenceTensor::new(keep.len(), components)
}

/// Partial transpose on one qubit: negate every component with digit 2 in that slot.
pub fn partial_transpose<T: Real>(t: &CoherenceTensor<T>, qubit: usize) -> Result<CoherenceTensor<T>> {
    partial_transpose_set(t, &[qubit])
}

/// Partial transpose on several qubits at once.
pub fn partial_transpose_set<T: Real>(
    t: &CoherenceTensor<T>,
    qubits: &[usize],
) -> Result<CoherenceTensor<T>> {
    let n = t.n;
    let mut flip = vec![false; n];
    for &q in qubits {
        check_position(n, q)?;
        flip[q - 1] = true;
    }
    let components = t
        .components
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let m = MultiIndex::from_linear(i, n);
            let twos = m
                .digits()
                .iter()
                .zip(&flip)
                .filter(|(&d, &f)| f && d == 2)
                .count();
            if twos % 2 == 1 {
                -v
            } else {
                v
            }
        })
        .collect();
    Ok(CoherenceTensor::from_raw(n, components))
}

/// Tensor of the uncorrelated composite `a (x) b`.
pub fn product<T: Real>(a: &CoherenceTensor<T>, b: &CoherenceTensor<T>) -> Result<CoherenceTensor<T>> {
    let n = a.n + b.n;
    check_qubits(n)?;
    let mut components = Vec::with_capacity(a.components.len() * b.components.len());
    for &x in &a.components {
        components.extend(b.components.iter().map(|&y| x * y));
    }
    CoherenceTensor::new(n, components)
}

/// Ascending eigenvalues of the reconstructed density.
pub fn density_eigenvalues<T: Real>(t: &CoherenceTensor<T>) -> Result<Vec<T>> {
    to_density(t).eigenvalues()
}

/// Ascending eigenvalues of the density partially transposed on `qubits`.
pub fn pt_eigenvalues<T: Real>(t: &CoherenceTensor<T>, qubits: &[usize]) -> Result<Vec<T>> {
    density_eigenvalues(&partial_transpose_set(t, qubits)?)
}

/// Minimum eigenvalue of the density partially transposed on `qubit`.
pub fn ppt_min_eigenvalue<T: Real>(t: &CoherenceTensor<T>, qubit: usize) -> Result<T> {
    Ok(pt_eigenvalues(t, &[qubit])?[0])
}

/// Reading of a partial-transpose minimum eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PptVerdict {
    /// Negative beyond numerical noise: entangled across the cut.
    Npt,
    /// In `[-1e-9, 0)`.
    PptWithinTolerance,
    Ppt,
}

impl PptVerdict {
    pub fn classify<T: Real>(min_eigenvalue: T) -> Self {
        if min_eigenvalue < T::lit(PPT_THRESHOLD) {
            PptVerdict::Npt
        } else if min_eigenvalue < T::zero() {
            PptVerdict::PptWithinTolerance
        } else {
            PptVerdict::Ppt
        }
    }

    pub fn is_npt(self) -> bool {
        self == PptVerdict::Npt
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ket(v: &[(f64, f64)]) -> Vec<Complex<f64>> {
        v.iter().map(|&(r, i)| Complex::new(r, i)).collect()
    }

    #[test]
    fn ground_state_single_qubit() {
        let rho = DensityMatrix::from_ket(1, &ket(&[(1.0, 0.0), (0.0, 0.0)])).unwrap();
        let t = from_density(&rho).unwrap();
        let h = 1.0 / 2f64.sqrt();
        let want = [h, 0.0, 0.0, h];
        for (a, b) in t.components().iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn maximally_mixed_two_qubits() {
        let rho = DensityMatrix::new(2, CMat::<f64>::identity(4).scaled(Complex::new(0.25, 0.0))).unwrap();
        let t = from_density(&rho).unwrap();
        assert!((t.components()[0] - 0.5).abs() < 1e-15);
        assert!(t.components()[1..].iter().all(|x| x.abs() < 1e-15));
        assert!((purity(&t) - 0.25).abs() < 1e-15);
        let back = to_density(&CoherenceTensor::<f64>::maximally_mixed(2).unwrap());
        assert!(back.entries().max_abs_diff(rho.entries()) < 1e-15);
    }

    #[test]
    fn wrong_affine_component_is_rejected() {
        let mut c = vec![0.0; 4];
        c[0] = 0.5;
        assert!(matches!(CoherenceTensor::new(1, c), Err(Error::Validation(_))));
        assert!(CoherenceTensor::<f64>::new(1, vec![0.0; 3]).is_err());
    }

    #[test]
    fn non_hermitian_is_rejected() {
        let mut m = CMat::<f64>::identity(2).scaled(Complex::new(0.5, 0.0));
        m[(0, 1)] = Complex::new(0.1, 0.0);
        assert!(matches!(DensityMatrix::new(1, m), Err(Error::Validation(_))));
    }

    #[test]
    fn partial_transpose_is_an_involution() {
        let t = CoherenceTensor::<f64>::from_terms(2, [("11", 0.5), ("23", 0.5), ("32", 0.5)]).unwrap();
        let once = partial_transpose(&t, 1).unwrap();
        assert_eq!(once.get(&"23".parse().unwrap()), -0.5);
        assert_eq!(once.get(&"32".parse().unwrap()), 0.5);
        assert_eq!(partial_transpose(&once, 1).unwrap(), t);
        assert!(partial_transpose(&t, 3).is_err());
        assert!(partial_transpose(&t, 0).is_err());
    }

    #[test]
    fn tensor_without_y_components_is_transpose_invariant() {
        let t = CoherenceTensor::<f64>::from_terms(2, [("11", 0.1), ("03", -0.2), ("31", 0.05)]).unwrap();
        assert_eq!(partial_transpose(&t, 2).unwrap(), t);
    }

    #[test]
    fn partial_trace_errors() {
        let t = CoherenceTensor::<f64>::maximally_mixed(2).unwrap();
        assert!(partial_trace(&t, &[1, 2]).is_err());
        assert!(partial_trace(&t, &[]).is_err());
        assert!(partial_trace(&t, &[3]).is_err());
    }

    #[test]
    fn maximally_mixed_pt_spectrum() {
        for n in 1..=3 {
            let t = CoherenceTensor::<f64>::maximally_mixed(n).unwrap();
            for q in 1..=n {
                let e = ppt_min_eigenvalue(&t, q).unwrap();
                assert!((e - 1.0 / (1 << n) as f64).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn verdicts() {
        assert_eq!(PptVerdict::classify(-0.5), PptVerdict::Npt);
        assert_eq!(PptVerdict::classify(-1e-12), PptVerdict::PptWithinTolerance);
        assert_eq!(PptVerdict::classify(0.0), PptVerdict::Ppt);
    }
}
