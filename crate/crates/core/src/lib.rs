//! Additive systems over the integers.
//!
//! The crate models collections of integer sets whose sumsets tile `ℤ` (or an
//! initial interval of `ℕ₀`), together with the dynamical systems attached to
//! so-called canonical collections: level-indexed digit maps whose trajectories
//! compute digit expansions. It also contains an exact-arithmetic Fractran
//! interpreter and the two constructions that embed Collatz iteration and
//! arbitrary Fractran programs into canonical collections.
//!
//! The crate is `no_std` (with `alloc`); all arithmetic is arbitrary precision.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod arith;
pub mod canonical;
pub mod collections;
pub mod fractran;
pub mod reductions;

pub use canonical::{Expansion, Level, LevelSpec, ProbeReport, TrajectoryRecord};
pub use collections::{FiniteCollection, FiniteSet};
pub use fractran::FractranProgram;
