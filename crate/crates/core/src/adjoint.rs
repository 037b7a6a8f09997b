//! Adjoint and antiadjoint superoperators of product-operator basis elements.
//!
//! For `Lambda_m = lambda_{j_1} (x) ... (x) lambda_{j_n}` the commutator with
//! another product element splits into a sum over every placement of an odd
//! number of single-spin commutators (anticommutators in the other slots),
//! weighted by `1/2^(n-1)`; the anticommutator splits the same way over even
//! placements. In the real form used here each commutator slot contributes
//! `G_j = -i ad_{lambda_j}`, which turns the `i^k` of `k` commutator slots into
//! the sign `(-1)^((k-1)/2)` (adjoint) or `(-1)^(k/2)` (antiadjoint).

use std::collections::{BTreeMap, HashMap};

use num_complex::Complex;
use num_traits::{Float, One};

use crate::error::{invalid, Result};
use crate::linalg::{anticommutator, commutator, kron_all, CMat, Entry, Matrix, RMat};
use crate::multi_index::MultiIndex;
use crate::pauli::{all_pairs, structure_constants, AdAadPair};
use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `-i ad_H`, antisymmetric.
    Adjoint,
    /// `aad_H`, symmetric.
    Antiadjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Anticommutator,
}

/// Sparse real `4^n x 4^n` superoperator stored as `(row, col, value)` triples
/// sorted by row then column.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorMatrix<T> {
    n: usize,
    kind: GeneratorKind,
    entries: Vec<(usize, usize, T)>,
}

impl<T: Real> GeneratorMatrix<T> {
    pub fn zero(n: usize, kind: GeneratorKind) -> Self {
        Self {
            n,
            kind,
            entries: Vec::new(),
        }
    }

    fn from_map(n: usize, kind: GeneratorKind, map: HashMap<(usize, usize), T>) -> Self {
        let mut entries: Vec<_> = map
            .into_iter()
            .filter(|(_, v)| *v != T::zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        entries.sort_by_key(|&(r, c, _)| (r, c));
        Self { n, kind, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    /// Side length `4^n`.
    pub fn dim(&self) -> usize {
        1 << (2 * self.n)
    }

    pub fn entries(&self) -> &[(usize, usize, T)] {
        &self.entries
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn to_dense(&self) -> RMat<T> {
        let d = self.dim();
        let mut m = RMat::zeros(d, d);
        for &(r, c, v) in &self.entries {
            m[(r, c)] = v;
        }
        m
    }

    /// Sparse matrix-vector product.
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.dim());
        let mut out = vec![T::zero(); v.len()];
        for &(r, c, x) in &self.entries {
            out[r] += x * v[c];
        }
        out
    }

    pub fn scaled(&self, s: T) -> Self {
        let entries = if s == T::zero() {
            Vec::new()
        } else {
            self.entries.iter().map(|&(r, c, v)| (r, c, v * s)).collect()
        };
        Self {
            n: self.n,
            kind: self.kind,
            entries,
        }
    }

    /// `sum_i coeff_i * g_i` over generators of equal size and kind.
    pub fn linear_combination<'a>(
        n: usize,
        kind: GeneratorKind,
        terms: impl IntoIterator<Item = (T, &'a GeneratorMatrix<T>)>,
    ) -> Self {
        let mut map: HashMap<(usize, usize), T> = HashMap::new();
        for (a, g) in terms {
            assert_eq!(g.n, n, "generator size mismatch");
            assert_eq!(g.kind, kind, "generator kind mismatch");
            for &(r, c, v) in &g.entries {
                *map.entry((r, c)).or_insert_with(T::zero) += a * v;
            }
        }
        Self::from_map(n, kind, map)
    }

    /// Largest `|M + M^T|` entry for adjoint kind, `|M - M^T|` for antiadjoint.
    pub fn symmetry_residual(&self) -> T {
        let d = self.to_dense();
        let t = d.transpose();
        match self.kind {
            GeneratorKind::Adjoint => (&d + &t).max_abs(),
            GeneratorKind::Antiadjoint => (&d - &t).max_abs(),
        }
    }
}

/// Single-spin factor matrices as sparse `(row, col, value)` lists.
struct SparseFactors<T> {
    ad: [Vec<(usize, usize, T)>; 4],
    aad: [Vec<(usize, usize, T)>; 4],
}

impl<T: Real> SparseFactors<T> {
    fn new() -> Self {
        let pairs: [AdAadPair<T>; 4] = all_pairs();
        let sparse = |m: &[[T; 4]; 4]| {
            let mut v = Vec::new();
            for (r, row) in m.iter().enumerate() {
                for (c, &x) in row.iter().enumerate() {
                    if x != T::zero() {
                        v.push((r, c, x));
                    }
                }
            }
            v
        };
        Self {
            ad: [0, 1, 2, 3].map(|j| sparse(&pairs[j].ad)),
            aad: [0, 1, 2, 3].map(|j| sparse(&pairs[j].aad)),
        }
    }
}

/// `(-1)^((k-1)/2)` for odd `k`, `(-1)^(k/2)` for even `k`.
fn placement_sign<T: Real>(k: u32) -> T {
    let half = if k % 2 == 1 { (k - 1) / 2 } else { k / 2 };
    if half % 2 == 0 {
        T::one()
    } else {
        -T::one()
    }
}

fn build_generic<T: Real>(m: &MultiIndex, kind: GeneratorKind) -> GeneratorMatrix<T> {
    let n = m.len();
    let digits = m.digits();
    let factors = SparseFactors::<T>::new();
    let want_odd = kind == GeneratorKind::Adjoint;
    let prefactor = T::one() / T::lit(2.0).powi(n as i32 - 1);

    let mut acc: HashMap<(usize, usize), T> = HashMap::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones();
        if (k % 2 == 1) != want_odd {
            continue;
        }
        // Commutator slots act through G_j, which vanishes for j = 0.
        let dead = (0..n).any(|slot| mask >> (n - 1 - slot) & 1 == 1 && digits[slot] == 0);
        if dead {
            continue;
        }
        let mut term = vec![(0usize, 0usize, prefactor * placement_sign::<T>(k))];
        for (slot, &d) in digits.iter().enumerate() {
            let in_comm = mask >> (n - 1 - slot) & 1 == 1;
            let f = if in_comm {
                &factors.ad[d as usize]
            } else {
                &factors.aad[d as usize]
            };
            let mut next = Vec::with_capacity(term.len() * f.len());
            for &(r, c, v) in &term {
                for &(fr, fc, fv) in f {
                    next.push((r * 4 + fr, c * 4 + fc, v * fv));
                }
            }
            term = next;
        }
        for (r, c, v) in term {
            *acc.entry((r, c)).or_insert_with(T::zero) += v;
        }
    }
    GeneratorMatrix::from_map(n, kind, acc)
}

/// `-i ad_{Lambda_m}` as a real antisymmetric matrix. Zero for `m = 0...0`.
pub fn build_ad<T: Real>(m: &MultiIndex) -> GeneratorMatrix<T> {
    build_generic(m, GeneratorKind::Adjoint)
}

/// `aad_{Lambda_m}` as a real symmetric matrix; `2^(1 - n/2) I` for `m = 0...0`.
pub fn build_aad<T: Real>(m: &MultiIndex) -> GeneratorMatrix<T> {
    build_generic(m, GeneratorKind::Antiadjoint)
}

/// Hamiltonian `H = sum_m h^m Lambda_m` (angular frequency, hbar = 1).
#[derive(Clone, Debug, PartialEq)]
pub struct HamiltonianCoeffs<T> {
    n: usize,
    terms: BTreeMap<MultiIndex, T>,
}

impl<T: Real> HamiltonianCoeffs<T> {
    /// Repeated indexes are summed. Every index must have length `n`.
    pub fn new(n: usize, terms: impl IntoIterator<Item = (MultiIndex, T)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (m, v) in terms {
            if m.len() != n {
                return Err(invalid(format!(
                    "Hamiltonian term {m} has length {}, expected {n}",
                    m.len()
                )));
            }
            *map.entry(m).or_insert_with(T::zero) += v;
        }
        Ok(Self { n, terms: map })
    }

    /// Same as [`new`](Self::new) with digit-string indexes; `n` is taken from
    /// the first term.
    pub fn from_strs<'a>(terms: impl IntoIterator<Item = (&'a str, T)>) -> Result<Self> {
        let parsed = terms
            .into_iter()
            .map(|(s, v)| Ok((s.parse::<MultiIndex>()?, v)))
            .collect::<Result<Vec<_>>>()?;
        let n = parsed
            .first()
            .map(|(m, _)| m.len())
            .ok_or_else(|| invalid("empty Hamiltonian needs an explicit qubit count"))?;
        Self::new(n, parsed)
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, T> {
        &self.terms
    }

    /// Terms that generate dynamics: nonzero coefficient, non-affine index.
    pub fn dynamic_terms(&self) -> impl Iterator<Item = (&MultiIndex, T)> {
        self.terms
            .iter()
            .filter(|(m, v)| !m.is_affine() && **v != T::zero())
            .map(|(m, &v)| (m, v))
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: T, other: &Self, b: T) -> Result<Self> {
        if self.n != other.n {
            return Err(invalid("Hamiltonians act on different qubit counts"));
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, &v)| (m.clone(), a * v))
            .chain(other.terms.iter().map(|(m, &v)| (m.clone(), b * v)));
        Self::new(self.n, terms)
    }

    /// Dense `2^n x 2^n` Hilbert-space matrix.
    pub fn dense(&self) -> CMat<T> {
        let d = 1usize << self.n;
        let mut h = CMat::zeros(d, d);
        for (m, &v) in &self.terms {
            let lam = crate::coherence::basis_element::<T>(m);
            h = &h + &lam.scaled(Complex::new(v, T::zero()));
        }
        h
    }
}

/// `sum_m h^m (-i ad_{Lambda_m})`; the affine term contributes nothing.
pub fn hamiltonian_generator<T: Real>(h: &HamiltonianCoeffs<T>) -> GeneratorMatrix<T> {
    let built: Vec<(T, GeneratorMatrix<T>)> = h
        .dynamic_terms()
        .map(|(m, v)| (v, build_ad::<T>(m)))
        .collect();
    GeneratorMatrix::linear_combination(
        h.n,
        GeneratorKind::Adjoint,
        built.iter().map(|(v, g)| (*v, g)),
    )
}

/// Decomposes `-i[Lambda_a, Lambda_b]` (commutator kind) or
/// `{Lambda_a, Lambda_b}` (anticommutator kind) in the product basis, using
/// only the single-spin structure tensors. Entries come back in linear order.
pub fn bracket_decompose<T: Real>(
    a: &MultiIndex,
    b: &MultiIndex,
    kind: BracketKind,
) -> Result<Vec<(MultiIndex, T)>> {
    if a.len() != b.len() {
        return Err(invalid(format!(
            "bracket operands {a} and {b} have different lengths"
        )));
    }
    let n = a.len();
    let st = structure_constants::<T>();
    let want_odd = kind == BracketKind::Commutator;
    let prefactor = T::one() / T::lit(2.0).powi(n as i32 - 1);

    let mut acc: BTreeMap<usize, T> = BTreeMap::new();
    for mask in 0u32..(1 << n) {
        let k = mask.count_ones();
        if (k % 2 == 1) != want_odd {
            continue;
        }
        let mut term = vec![(0usize, prefactor * placement_sign::<T>(k))];
        for slot in 0..n {
            let (j, l) = (a.digits()[slot] as usize, b.digits()[slot] as usize);
            let tensor = if mask >> (n - 1 - slot) & 1 == 1 {
                &st.f[j][l]
            } else {
                &st.s[j][l]
            };
            let mut next = Vec::new();
            for &(idx, v) in &term {
                for (p, &x) in tensor.iter().enumerate() {
                    if x != T::zero() {
                        next.push((idx * 4 + p, v * x));
                    }
                }
            }
            term = next;
            if term.is_empty() {
                break;
            }
        }
        for (idx, v) in term {
            *acc.entry(idx).or_insert_with(T::zero) += v;
        }
    }
    let scale = acc.values().fold(T::zero(), |m, v| m.max(v.abs()));
    let cutoff = scale * T::epsilon() * T::lit(16.0);
    Ok(acc
        .into_iter()
        .filter(|(_, v)| v.abs() > cutoff)
        .map(|(idx, v)| (MultiIndex::from_linear(idx, n), v))
        .collect())
}

/// Right-hand side of the tensor-bracket expansion for arbitrary square
/// factors: `(1/2^(n-1)) sum (A_1,B_1) (x) ... (x) (A_n,B_n)` where each
/// summand has an odd (commutator kind) or even (anticommutator kind) number
/// of commutator slots and anticommutators elsewhere.
pub fn tensor_bracket<S: Entry>(a: &[Matrix<S>], b: &[Matrix<S>], kind: BracketKind) -> Matrix<S> {
    assert_eq!(a.len(), b.len(), "factor lists differ in length");
    assert!(!a.is_empty(), "need at least one factor");
    let n = a.len();
    let comms: Vec<Matrix<S>> = a.iter().zip(b).map(|(x, y)| commutator(x, y)).collect();
    let antis: Vec<Matrix<S>> = a.iter().zip(b).map(|(x, y)| anticommutator(x, y)).collect();
    let want_odd = kind == BracketKind::Commutator;

    let mut total: Option<Matrix<S>> = None;
    for mask in 0u32..(1 << n) {
        if (mask.count_ones() % 2 == 1) != want_odd {
            continue;
        }
        let factors: Vec<Matrix<S>> = (0..n)
            .map(|slot| {
                if mask >> (n - 1 - slot) & 1 == 1 {
                    comms[slot].clone()
                } else {
                    antis[slot].clone()
                }
            })
            .collect();
        let term = kron_all(&factors);
        total = Some(match total {
            Some(t) => &t + &term,
            None => term,
        });
    }
    let half = S::Real::one() / (S::Real::lit(2.0)).powi(n as i32 - 1);
    total.expect("at least one placement").scaled(S::from_real(half))
}
