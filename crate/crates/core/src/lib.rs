//! Exact linear algebra over Q, the symplectic Lie algebra sp(2n), its
//! finite-dimensional modules, and tensor modules over the Hamiltonian
//! Lie algebra built from them.
#![no_std]
extern crate alloc;

pub mod error;
pub mod hamiltonian;
pub mod linalg;
pub mod polynomial;
pub mod report;
pub mod reps;
pub mod sampling;
pub mod scalar;
pub mod submodules;
pub mod symplectic;

pub use error::{Error, Result};
pub use hamiltonian::{GradedVector, ModuleParams, ShenLarssonModule};
pub use linalg::{SparseMatrix, Subspace, Vector};
pub use report::CheckReport;
pub use reps::{LinearMap, Representation};
pub use scalar::Scalar;
pub use symplectic::{Generator, SpAlgebra};
