//! Finite-group computations centred on power-commutation laws.
//!
//! The crate represents finite groups by dense Cayley tables and provides:
//!
//! * element arithmetic, subgroup machinery, isomorphism testing and
//!   product constructions ([`group`], [`subgroup`], [`iso`]);
//! * a small identity DSL for group laws such as `[x^2,y^2]=1` ([`law`]);
//! * named constructions (cyclic, dihedral, symmetric, alternating,
//!   quaternion, Heisenberg) and exhaustive enumeration of all groups of a
//!   given small order up to isomorphism ([`catalog`], [`enumerate`]);
//! * executable checks for the structure theorems about groups whose m-th
//!   and n-th powers commute for coprime m, n ([`theorems`]).
//!
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live
//! in the companion `grouplaw-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod arith;
pub mod catalog;
pub mod enumerate;
pub mod error;
pub mod group;
pub mod iso;
pub mod law;
pub mod perm;
pub mod subgroup;
pub mod theorems;

pub use error::GroupError;
pub use group::{Caps, FiniteGroup};
pub use perm::Permutation;
pub use subgroup::SubgroupSet;
