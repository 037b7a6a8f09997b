//! Eigenvalues of symmetric and Hermitian matrices by cyclic Jacobi rotations.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::linalg::{CMat, RMat};
use crate::scalar::Real;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues of a real symmetric matrix, ascending.
///
/// Sweeps stop once the off-diagonal Frobenius norm falls below
/// `T::jacobi_tol() * max(1, ||A||_F)`.
pub fn symmetric_eigenvalues<T: Real>(a: &RMat<T>) -> Result<Vec<T>> {
    if !a.is_square() {
        return Err(Error::InvalidArgument(format!(
            "eigenvalues need a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let n = a.rows();
    let mut m = a.clone();
    let scale = T::one().max(frobenius(&m));
    let threshold = T::jacobi_tol() * scale;

    let mut sweeps = 0;
    let mut off = m.off_diagonal_norm();
    while off >= threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::Numerical {
                message: format!("Jacobi eigen-solver did not converge on a {n}x{n} matrix"),
                iterations: sweeps,
                off_norm: off.to_f64().unwrap_or(f64::NAN),
            });
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut m, p, q);
            }
        }
        sweeps += 1;
        off = m.off_diagonal_norm();
    }

    let mut eig: Vec<T> = (0..n).map(|i| m[(i, i)]).collect();
    eig.sort_by(|x, y| x.partial_cmp(y).expect("finite eigenvalues"));
    Ok(eig)
}

/// Eigenvalues of a complex Hermitian matrix, ascending.
///
/// Works on the real symmetric embedding `[[A, -B], [B, A]]` of `A + iB`,
/// whose spectrum is the Hermitian spectrum with every value doubled.
pub fn hermitian_eigenvalues<T: Real>(h: &CMat<T>) -> Result<Vec<T>> {
    if !h.is_square() {
        return Err(Error::InvalidArgument(format!(
            "eigenvalues need a square matrix, got {}x{}",
            h.rows(),
            h.cols()
        )));
    }
    let n = h.rows();
    let embed = RMat::from_fn(2 * n, 2 * n, |r, c| {
        let Complex { re, im } = h[(r % n, c % n)];
        match (r < n, c < n) {
            (true, true) | (false, false) => re,
            (true, false) => -im,
            (false, true) => im,
        }
    });
    let doubled = symmetric_eigenvalues(&embed)?;
    Ok(doubled.into_iter().step_by(2).collect())
}

fn frobenius<T: Real>(m: &RMat<T>) -> T {
    m.as_slice().iter().map(|&x| x * x).sum::<T>().sqrt()
}

/// One Jacobi rotation annihilating `m[p][q]`.
fn rotate<T: Real>(m: &mut RMat<T>, p: usize, q: usize) {
    let apq = m[(p, q)];
    if apq == T::zero() {
        return;
    }
    let app = m[(p, p)];
    let aqq = m[(q, q)];
    let two = T::lit(2.0);
    let theta = (aqq - app) / (two * apq);
    let t = theta.signum() / (theta.abs() + (theta * theta + T::one()).sqrt());
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;
    let n = m.rows();
    for k in 0..n {
        let akp = m[(k, p)];
        let akq = m[(k, q)];
        m[(k, p)] = c * akp - s * akq;
        m[(k, q)] = s * akp + c * akq;
    }
    for k in 0..n {
        let apk = m[(p, k)];
        let aqk = m[(q, k)];
        m[(p, k)] = c * apk - s * aqk;
        m[(q, k)] = s * apk + c * aqk;
    }
}
