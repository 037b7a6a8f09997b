//! Dense brute-force references shared by the integration tests. Nothing
//! here goes through the library's sparse builders or its linear algebra.
#![allow(dead_code)]

use cohten::linalg::CMat;
use cohten::{CoherenceTensor, DensityMatrix, MultiIndex};
use num_complex::Complex64 as C;
use rand::Rng;

/// Square complex matrix, row-major.
#[derive(Clone, Debug)]
pub struct Dense {
    pub dim: usize,
    pub a: Vec<C>,
}

impl Dense {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, a: vec![C::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.a[i * dim + i] = C::new(1.0, 0.0);
        }
        m
    }

    pub fn at(&self, r: usize, c: usize) -> C {
        self.a[r * self.dim + c]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let d = self.dim;
        let mut m = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let x = self.a[i * d + k];
                if x == C::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..d {
                    m.a[i * d + j] += x * o.a[k * d + j];
                }
            }
        }
        m
    }

    pub fn add(&self, o: &Self, s: C) -> Self {
        Self { dim: self.dim, a: self.a.iter().zip(&o.a).map(|(x, y)| x + s * y).collect() }
    }

    pub fn kron(&self, o: &Self) -> Self {
        let (p, q) = (self.dim, o.dim);
        let mut m = Self::zeros(p * q);
        for i in 0..p {
            for j in 0..p {
                for k in 0..q {
                    for l in 0..q {
                        m.a[(i * q + k) * p * q + j * q + l] = self.at(i, j) * o.at(k, l);
                    }
                }
            }
        }
        m
    }

    pub fn dagger(&self) -> Self {
        let d = self.dim;
        let mut m = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.a[j * d + i] = self.at(i, j).conj();
            }
        }
        m
    }

    pub fn trace(&self) -> C {
        (0..self.dim).map(|i| self.at(i, i)).sum()
    }

    pub fn max_diff(&self, o: &Self) -> f64 {
        self.a.iter().zip(&o.a).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.a.iter().map(|x| x.norm()).fold(0.0, f64::max)
    }

    pub fn from_lib(m: &CMat<f64>) -> Self {
        let d = m.rows();
        Self { dim: d, a: (0..d * d).map(|i| m[(i / d, i % d)]).collect() }
    }

    pub fn to_lib(&self) -> CMat<f64> {
        CMat::from_fn(self.dim, self.dim, |r, c| self.at(r, c))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self), C::new(-1.0, 0.0))
    }

    pub fn anticommutator(&self, o: &Self) -> Self {
        self.mul(o).add(&o.mul(self), C::new(1.0, 0.0))
    }
}

/// `sigma_j / sqrt 2`.
pub fn lambda(j: u8) -> Dense {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let (o, z) = (C::new(h, 0.0), C::new(0.0, 0.0));
    let a = match j {
        0 => vec![o, z, z, o],
        1 => vec![z, o, o, z],
        2 => vec![z, C::new(0.0, -h), C::new(0.0, h), z],
        3 => vec![o, z, z, -o],
        _ => panic!("digit {j}"),
    };
    Dense { dim: 2, a }
}

pub fn basis(digits: &[u8]) -> Dense {
    digits[1..].iter().fold(lambda(digits[0]), |acc, &d| acc.kron(&lambda(d)))
}

pub fn all_digits(n: usize) -> Vec<Vec<u8>> {
    (0..1usize << (2 * n))
        .map(|lin| (0..n).map(|s| ((lin >> (2 * (n - 1 - s))) & 3) as u8).collect())
        .collect()
}

/// `(l, k)` entry: coefficient of `Lambda_l` in `-i [Lambda_m, Lambda_k]`.
pub fn ad_reference(m: &[u8]) -> Vec<Vec<f64>> {
    bracket_table(m, |a, b| a.commutator(b), C::new(0.0, -1.0))
}

/// `(l, k)` entry: coefficient of `Lambda_l` in `{Lambda_m, Lambda_k}`.
pub fn aad_reference(m: &[u8]) -> Vec<Vec<f64>> {
    bracket_table(m, |a, b| a.anticommutator(b), C::new(1.0, 0.0))
}

fn bracket_table(m: &[u8], op: impl Fn(&Dense, &Dense) -> Dense, factor: C) -> Vec<Vec<f64>> {
    let idx = all_digits(m.len());
    let bm = basis(m);
    let bs: Vec<Dense> = idx.iter().map(|d| basis(d)).collect();
    let d = idx.len();
    let mut out = vec![vec![0.0; d]; d];
    for k in 0..d {
        let br = op(&bm, &bs[k]);
        for l in 0..d {
            let c = bs[l].mul(&br).trace() * factor;
            assert!(c.im.abs() < 1e-12);
            out[l][k] = c.re;
        }
    }
    out
}

/// `c^m = tr(rho Lambda_m)`.
pub fn coherence_reference(rho: &Dense, n: usize) -> Vec<f64> {
    all_digits(n).iter().map(|d| rho.mul(&basis(d)).trace().re).collect()
}

/// `sum_m c^m Lambda_m`.
pub fn density_reference(c: &[f64], n: usize) -> Dense {
    all_digits(n)
        .iter()
        .zip(c)
        .fold(Dense::zeros(1 << n), |acc, (d, &v)| acc.add(&basis(d), C::new(v, 0.0)))
}

fn bit(i: usize, q: usize, n: usize) -> usize {
    (i >> (n - q)) & 1
}

/// Partial trace over the 1-based qubit positions in `traced`.
pub fn partial_trace_reference(rho: &Dense, n: usize, traced: &[usize]) -> Dense {
    let keep: Vec<usize> = (1..=n).filter(|q| !traced.contains(q)).collect();
    let k = keep.len();
    let mut out = Dense::zeros(1 << k);
    let sub = |i: usize| keep.iter().fold(0, |acc, &q| (acc << 1) | bit(i, q, n));
    for i in 0..rho.dim {
        for j in 0..rho.dim {
            if traced.iter().all(|&q| bit(i, q, n) == bit(j, q, n)) {
                out.a[sub(i) * (1 << k) + sub(j)] += rho.at(i, j);
            }
        }
    }
    out
}

/// Transpose on the 1-based qubit positions in `qubits`.
pub fn partial_transpose_reference(rho: &Dense, n: usize, qubits: &[usize]) -> Dense {
    let mut out = Dense::zeros(rho.dim);
    for i in 0..rho.dim {
        for j in 0..rho.dim {
            let (mut ii, mut jj) = (i, j);
            for &q in qubits {
                let mask = 1 << (n - q);
                if (i & mask) != (j & mask) {
                    ii ^= mask;
                    jj ^= mask;
                }
            }
            out.a[ii * rho.dim + jj] = rho.at(i, j);
        }
    }
    out
}

/// Hermitian eigenvalues from nalgebra, ascending.
pub fn eigenvalues_reference(m: &Dense) -> Vec<f64> {
    let d = m.dim;
    let mat = nalgebra::DMatrix::from_fn(d, d, |r, c| m.at(r, c));
    let mut e: Vec<f64> = mat.symmetric_eigenvalues().iter().copied().collect();
    e.sort_by(f64::total_cmp);
    e
}

pub fn random_complex(rng: &mut impl Rng) -> C {
    C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut impl Rng, dim: usize) -> Dense {
    Dense { dim, a: (0..dim * dim).map(|_| random_complex(rng)).collect() }
}

/// `exp(-i t H)` through nalgebra.
pub fn unitary_reference(h: &Dense, t: f64) -> Dense {
    let d = h.dim;
    let m = nalgebra::DMatrix::from_fn(d, d, |r, c| h.at(r, c) * C::new(0.0, -t));
    let u = m.exp();
    Dense { dim: d, a: (0..d * d).map(|i| u[(i / d, i % d)]).collect() }
}

pub fn conjugate(u: &Dense, rho: &Dense) -> Dense {
    u.mul(rho).mul(&u.dagger())
}

/// Random pure or full-rank mixed density.
pub fn random_density(rng: &mut impl Rng, n: usize, pure: bool) -> Dense {
    let d = 1 << n;
    if pure {
        let v: Vec<C> = (0..d).map(|_| random_complex(rng)).collect();
        let norm: f64 = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
        let mut m = Dense::zeros(d);
        for i in 0..d {
            for j in 0..d {
                m.a[i * d + j] = v[i] * v[j].conj() / (norm * norm);
            }
        }
        m
    } else {
        let a = random_matrix(rng, d);
        let p = a.mul(&a.dagger());
        let tr = p.trace().re;
        Dense { dim: d, a: p.a.iter().map(|x| x / tr).collect() }
    }
}

pub fn tensor_of(rho: &Dense, n: usize) -> CoherenceTensor<f64> {
    CoherenceTensor::new(n, coherence_reference(rho, n)).expect("valid tensor")
}

pub fn density_of(rho: &Dense, n: usize) -> DensityMatrix<f64> {
    DensityMatrix::new(n, rho.to_lib()).expect("valid density")
}

pub fn digits(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn mi(s: &str) -> MultiIndex {
    s.parse().unwrap()
}

pub fn max_vec_diff(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}
