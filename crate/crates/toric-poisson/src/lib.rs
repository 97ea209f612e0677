//! Toric Poisson geometry from Delzant polytopes, in exact arithmetic where it
//! matters and certified floating point where it does not.
//!
//! Starting from a Delzant polytope given by primitive inward facet normals and
//! rational offsets, this crate constructs:
//!
//! - the face lattice and the dual fan, with exact unimodularity diagnostics
//!   for every vertex cone ([`polytope`], [`fan`]);
//! - the holomorphic vertex-chart atlas: for each vertex the relation matrix
//!   `A`, the coefficient matrix `B = 1 + A·Aᵀ`, monomial quotient coordinates
//!   and Laurent transition maps ([`charts`]);
//! - the quadratic Poisson bivector `Π = Σ i B_pq w̄_p w_q ∂w̄_p ∧ ∂w_q` in each
//!   chart, with rank, wedge powers, Hamiltonian fields and Schouten brackets
//!   ([`poisson`]);
//! - momentum data: leafwise momentum maps, the projective-space momentum
//!   components and Fubini–Study-type bivector, modular vector fields, and the
//!   exact solve locating modular zeros at face centroids ([`moment`]);
//! - a seeded, reproducible verification harness that turns the structural
//!   identities into machine-readable pass/fail reports ([`verify`]).
//!
//! The CLI surface (`validate`, `atlas`, `poisson`, `modular`, `verify`) lives
//! in [`cli`] and is exposed by the thin `toric-poisson` binary. Runnable
//! walkthroughs of each capability are under `examples/`.

pub mod builders;
pub mod charts;
pub mod cli;
pub mod config;
pub mod fan;
pub mod lattice;
pub mod moment;
pub mod numeric;
pub mod poisson;
pub mod polytope;
pub mod verify;


pub use config::ToricConfig;
pub use lattice::{IntMatrix, RatVector};

