//! Unitary dynamics of multiqubit density operators written in the tensor
//! of coherences `rho = sum_m c^m Lambda_m`, with `Lambda_m` the Kronecker
//! products of rescaled Pauli matrices `lambda_j = sigma_j / sqrt 2`.

pub mod adjoint;
pub mod coherence;
pub mod eigen;
pub mod error;
pub mod gates;
pub mod linalg;
pub mod multi_index;
pub mod pauli;
pub mod propagator;
pub mod scalar;
pub mod scenario;

pub use adjoint::{
    bracket_decompose, build_aad, build_ad, hamiltonian_generator, BracketKind, GeneratorKind,
    GeneratorMatrix, HamiltonianCoeffs,
};
pub use coherence::{
    from_density, partial_trace, partial_transpose, ppt_min_eigenvalue, product, purity, to_density,
    CoherenceTensor, DensityMatrix, PptVerdict,
};
pub use error::{Error, Result};
pub use gates::{cnot_gate, cnot_hamiltonian, named_state, r_cnot, NamedGate};
pub use multi_index::MultiIndex;
pub use propagator::{
    cartan_exp, expm, hilbert_oracle, local_exp, propagate, rodrigues_exp, PropagatorMatrix,
    Schedule, Segment, Trajectory,
};
pub use scalar::Real;

pub type CoherenceTensorF64 = CoherenceTensor<f64>;
pub type CoherenceTensorF32 = CoherenceTensor<f32>;
pub type DensityMatrixF64 = DensityMatrix<f64>;
pub type DensityMatrixF32 = DensityMatrix<f32>;
pub type GeneratorF64 = GeneratorMatrix<f64>;
pub type GeneratorF32 = GeneratorMatrix<f32>;
pub type HamiltonianF64 = HamiltonianCoeffs<f64>;
pub type HamiltonianF32 = HamiltonianCoeffs<f32>;
pub type PropagatorF64 = PropagatorMatrix<f64>;
pub type PropagatorF32 = PropagatorMatrix<f32>;
pub type ScheduleF64 = Schedule<f64>;
pub type TrajectoryF64 = Trajectory<f64>;
