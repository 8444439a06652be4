//! Certification of the Miyazaki property (fibered, −amphicheiral, with
//! irreducible Alexander polynomial) for atomic knots and iterated satellites
//! of braid-closure patterns, and knot Floer concordance invariants
//! (`V_k`, `ν⁺`, `τ`, `Υ`) of finite model complexes.
//!
//! The data-parallel loops (the family scan, per-prime sieving, Eisenstein
//! probes) run on rayon when the default `parallel` feature is enabled and
//! fall back to plain iterators otherwise; see [`par`].

pub mod braid;
pub mod floer;
pub mod irred;
pub mod laurent;
pub mod par;
pub mod pipeline;
pub mod symmetry;

pub use laurent::{IntPoly, LaurentPoly, NormalForm};
