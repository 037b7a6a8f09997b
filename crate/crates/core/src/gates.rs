//! Named gates and states.

use crate::adjoint::{hamiltonian_generator, HamiltonianCoeffs};
use crate::coherence::{product, CoherenceTensor};
use crate::error::{invalid, Error, Result};
use crate::linalg::RMat;
use crate::multi_index::{MultiIndex, MAX_QUBITS};
use crate::propagator::{expm, segment_propagator, PropagatorMatrix, Segment};
use crate::scalar::Real;

const R_CNOT_FIXTURE: &str = include_str!("../fixtures/r_cnot.txt");

/// Identifiers accepted by [`named_state`].
pub const STATE_NAMES: [&str; 7] = [
    "comp_00", "comp_01", "comp_10", "comp_11", "bell_ab", "plus", "cubitt_in",
];

/// A Hamiltonian together with the time it has to act for.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedGate<T> {
    pub name: String,
    pub hamiltonian: HamiltonianCoeffs<T>,
    pub duration: T,
}

impl<T: Real> NamedGate<T> {
    pub fn propagator(&self) -> PropagatorMatrix<T> {
        segment_propagator(&self.hamiltonian, self.duration)
    }

    pub fn segment(&self) -> Segment<T> {
        Segment {
            hamiltonian: self.hamiltonian.clone(),
            duration: self.duration,
        }
    }
}

/// C-NOT Hamiltonian `pi/2 (Lambda_0 - Lambda_c - Lambda_t + Lambda_ct)`
/// where `c` carries a 3 in the control slot and `t` a 1 in the target slot.
/// Positions are 1-based.
pub fn cnot_hamiltonian<T: Real>(control: usize, target: usize, n: usize) -> Result<HamiltonianCoeffs<T>> {
    if !(2..=MAX_QUBITS).contains(&n) {
        return Err(invalid(format!("C-NOT needs 2..={MAX_QUBITS} qubits, got {n}")));
    }
    for (role, q) in [("control", control), ("target", target)] {
        if q == 0 || q > n {
            return Err(invalid(format!("{role} position {q} outside 1..={n}")));
        }
    }
    if control == target {
        return Err(invalid(format!("control and target coincide at {control}")));
    }
    let index = |c: u8, t: u8| {
        let mut d = vec![0u8; n];
        d[control - 1] = c;
        d[target - 1] = t;
        MultiIndex::new(d).expect("valid digits")
    };
    let h = T::FRAC_PI_2();
    HamiltonianCoeffs::new(
        n,
        [
            (index(0, 0), h),
            (index(3, 0), -h),
            (index(0, 1), -h),
            (index(3, 1), h),
        ],
    )
}

/// C-NOT gate on `n` qubits; acting time `sqrt(2)^(n-2)`.
pub fn cnot_gate<T: Real>(control: usize, target: usize, n: usize) -> Result<NamedGate<T>> {
    Ok(NamedGate {
        name: format!("cnot_c{control}_t{target}"),
        hamiltonian: cnot_hamiltonian(control, target, n)?,
        duration: T::sqrt2().powi(n as i32 - 2),
    })
}

/// Parses a whitespace-separated square grid of numbers.
pub fn parse_grid<T: Real>(text: &str) -> Result<RMat<T>> {
    let rows: Vec<Vec<f64>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|w| w.parse::<f64>().map_err(|e| Error::Parse(format!("grid entry {w:?}: {e}"))))
                .collect()
        })
        .collect::<Result<_>>()?;
    let n = rows.len();
    if n == 0 || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Parse("grid is not square".into()));
    }
    Ok(RMat::from_fn(n, n, |r, c| T::lit(rows[r][c])))
}

/// One row per line; entries within `1e-9` of an integer are printed as integers.
pub fn format_grid<T: Real>(m: &RMat<T>) -> String {
    let mut out = String::new();
    for r in 0..m.rows() {
        let line: Vec<String> = m
            .row(r)
            .iter()
            .map(|&v| {
                let v = v.to_f64().unwrap_or(f64::NAN);
                let rounded = v.round();
                if (v - rounded).abs() < 1e-9 {
                    format!("{}", rounded as i64)
                } else {
                    format!("{v:.16e}")
                }
            })
            .collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// The stored 16x16 two-qubit C-NOT propagator.
pub fn r_cnot_fixture<T: Real>() -> RMat<T> {
    parse_grid(R_CNOT_FIXTURE).expect("fixture parses")
}

/// Two-qubit C-NOT propagator (control 2, target 1) from the series
/// exponential, checked against the stored fixture.
pub fn r_cnot<T: Real>() -> Result<PropagatorMatrix<T>> {
    let gate = cnot_gate::<T>(2, 1, 2)?;
    let p = expm(&hamiltonian_generator(&gate.hamiltonian), gate.duration);
    let diff = p.entries().max_abs_diff(&r_cnot_fixture());
    if diff > T::validation_tol() {
        return Err(Error::Consistency(format!(
            "computed C-NOT propagator differs from fixture by {diff}"
        )));
    }
    Ok(p)
}

/// Named states: `comp_00..comp_11` and `bell_ab` (2 qubits), `plus` (any
/// `n`, product of single-qubit `(|0> + |1>)/sqrt 2`), `cubitt_in` (3 qubits).
pub fn named_state<T: Real>(name: &str, n: usize) -> Result<CoherenceTensor<T>> {
    let need = |k: usize| {
        if n == k {
            Ok(())
        } else {
            Err(invalid(format!("state {name} has {k} qubits, requested {n}")))
        }
    };
    let half = T::lit(0.5);
    match name {
        "comp_00" | "comp_01" | "comp_10" | "comp_11" => {
            need(2)?;
            let bits = name.as_bytes();
            let s1 = if bits[5] == b'0' { half } else { -half };
            let s2 = if bits[6] == b'0' { half } else { -half };
            // |b> = (Lambda_0 +- Lambda_3)/sqrt 2 per qubit.
            CoherenceTensor::from_terms(2, [("03", s2), ("30", s1), ("33", T::lit(2.0) * s1 * s2)])
        }
        "bell_ab" => {
            need(2)?;
            CoherenceTensor::from_terms(2, [("11", half), ("23", half), ("32", half)])
        }
        "plus" => {
            if n == 0 || n > MAX_QUBITS {
                return Err(invalid(format!("plus needs 1..={MAX_QUBITS} qubits, got {n}")));
            }
            let one = CoherenceTensor::from_terms(1, [("1", T::one() / T::sqrt2())])?;
            let mut acc = one.clone();
            for _ in 1..n {
                acc = product(&acc, &one)?;
            }
            Ok(acc)
        }
        "cubitt_in" => {
            need(3)?;
            let x = cubitt_x::<T>();
            CoherenceTensor::from_terms(
                3,
                [
                    ("003", x),
                    ("110", x),
                    ("113", x),
                    ("220", -x),
                    ("223", -x),
                    ("330", x),
                    ("333", -x),
                ],
            )
        }
        other => Err(invalid(format!(
            "unknown state {other:?}; known: {}",
            STATE_NAMES.join(", ")
        ))),
    }
}

/// `1/(6 sqrt 2)`.
pub fn cubitt_x<T: Real>() -> T {
    T::one() / (T::lit(6.0) * T::sqrt2())
}

/// Expected state after the first gate of the separable-ancilla cascade.
pub fn cubitt_intermediate<T: Real>() -> CoherenceTensor<T> {
    let x = cubitt_x::<T>();
    CoherenceTensor::from_terms(
        3,
        [
            ("033", -x),
            ("111", x),
            ("122", -x),
            ("212", -x),
            ("221", -x),
            ("303", x),
            ("330", x),
        ],
    )
    .expect("valid literal")
}

/// Expected final state of the cascade.
pub fn cubitt_final<T: Real>() -> CoherenceTensor<T> {
    let x = cubitt_x::<T>();
    CoherenceTensor::from_terms(
        3,
        [
            ("030", -x),
            ("101", x),
            ("131", x),
            ("202", -x),
            ("232", -x),
            ("303", x),
            ("333", x),
        ],
    )
    .expect("valid literal")
}

/// The two gates of the cascade: control A on target C, then control C on
/// target B.
pub fn cubitt_gates<T: Real>() -> [NamedGate<T>; 2] {
    [
        cnot_gate(1, 3, 3).expect("valid positions"),
        cnot_gate(3, 2, 3).expect("valid positions"),
    ]
}
