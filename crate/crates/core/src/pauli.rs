//! Rescaled Pauli basis, its structure constants, and the single-spin
//! adjoint / antiadjoint 4x4 matrices.
//!
//! Convention: a structure tensor entry `T[j][k][l]` (generator `j` acting on
//! basis element `k`, producing component `l`) lands in the 4x4 matrix of
//! generator `j` at row `l`, column `k`. Matrices therefore act on coherence
//! columns by left multiplication. Every other module inherits this layout.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::linalg::{CMat, RMat};
use crate::scalar::Real;

/// A 2x2 complex matrix; used for the basis elements `lambda_0..lambda_3`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2C<T>(pub [[Complex<T>; 2]; 2]);

impl<T: Real> Mat2C<T> {
    pub fn to_matrix(&self) -> CMat<T> {
        CMat::from_fn(2, 2, |r, c| self.0[r][c])
    }
}

fn check_index(j: usize) -> Result<()> {
    if j > 3 {
        return Err(invalid(format!("basis index {j} out of range 0..=3")));
    }
    Ok(())
}

/// The rescaled Pauli matrix `lambda_j = sigma_j / sqrt(2)` (with `sigma_0 = I`).
pub fn lambda_matrix<T: Real>(j: usize) -> Result<Mat2C<T>> {
    check_index(j)?;
    let h = T::one() / T::sqrt2();
    let z = Complex::zero();
    let re = |x: T| Complex::new(x, T::zero());
    let im = |x: T| Complex::new(T::zero(), x);
    let m = match j {
        0 => [[re(h), z], [z, re(h)]],
        1 => [[z, re(h)], [re(h), z]],
        2 => [[z, im(-h)], [im(h), z]],
        _ => [[re(h), z], [z, re(-h)]],
    };
    Ok(Mat2C(m))
}

/// `lambda_j` as a dense complex matrix. Panics on an out-of-range index.
pub(crate) fn lambda_dense<T: Real>(j: usize) -> CMat<T> {
    lambda_matrix::<T>(j).expect("digit checked by caller").to_matrix()
}

/// Real structure tensors of the rescaled Pauli basis.
///
/// `f[j][k][l]` is the real form of the commutator constants,
/// `[lambda_j, lambda_k] = i * sum_l f[j][k][l] lambda_l`, and `s[j][k][l]`
/// the anticommutator constants, `{lambda_j, lambda_k} = sum_l s[j][k][l] lambda_l`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensors<T> {
    pub f: [[[T; 4]; 4]; 4],
    pub s: [[[T; 4]; 4]; 4],
}

/// Computes `F` and `S` from the cyclic relations of su(2).
pub fn structure_constants<T: Real>() -> StructureTensors<T> {
    let r2 = T::sqrt2();
    let mut f = [[[T::zero(); 4]; 4]; 4];
    let mut s = [[[T::zero(); 4]; 4]; 4];

    // [lambda_j, lambda_k] = i sqrt(2) eps_{jkl} lambda_l
    for (j, k, l) in [(1, 2, 3), (2, 3, 1), (3, 1, 2)] {
        f[j][k][l] = r2;
        f[k][j][l] = -r2;
    }

    s[0][0][0] = r2;
    for j in 1..4 {
        s[j][j][0] = r2;
        s[j][0][j] = r2;
        s[0][j][j] = r2;
    }
    StructureTensors { f, s }
}

/// The pair `(G_j, aad_j)` with `G_j = -i ad_{lambda_j}` (real antisymmetric)
/// and `aad_j` (real symmetric).
#[derive(Clone, Debug, PartialEq)]
pub struct AdAadPair<T> {
    pub ad: [[T; 4]; 4],
    pub aad: [[T; 4]; 4],
}

impl<T: Real> AdAadPair<T> {
    pub fn ad_matrix(&self) -> RMat<T> {
        RMat::from_fn(4, 4, |r, c| self.ad[r][c])
    }

    pub fn aad_matrix(&self) -> RMat<T> {
        RMat::from_fn(4, 4, |r, c| self.aad[r][c])
    }
}

/// Single-spin adjoint and antiadjoint matrices for generator `j`.
pub fn ad_aad<T: Real>(j: usize) -> Result<AdAadPair<T>> {
    check_index(j)?;
    Ok(ad_aad_from(&structure_constants(), j))
}

pub(crate) fn ad_aad_from<T: Real>(st: &StructureTensors<T>, j: usize) -> AdAadPair<T> {
    let mut ad = [[T::zero(); 4]; 4];
    let mut aad = [[T::zero(); 4]; 4];
    for k in 0..4 {
        for l in 0..4 {
            ad[l][k] = st.f[j][k][l];
            aad[l][k] = st.s[j][k][l];
        }
    }
    AdAadPair { ad, aad }
}

/// All four single-spin pairs, indexed by generator.
pub(crate) fn all_pairs<T: Real>() -> [AdAadPair<T>; 4] {
    let st = structure_constants();
    [0, 1, 2, 3].map(|j| ad_aad_from(&st, j))
}

/// `trace(a * b)` for 2x2 complex matrices.
pub fn trace_product<T: Real>(a: &Mat2C<T>, b: &Mat2C<T>) -> Complex<T> {
    let mut acc = Complex::zero();
    for i in 0..2 {
        for k in 0..2 {
            acc += a.0[i][k] * b.0[k][i];
        }
    }
    acc
}
