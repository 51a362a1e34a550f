//! Executable point-free topology for commutative algebra.
//!
//! The crate is organized bottom-up:
//!
//! * [`ring`]: exact arithmetic, radical membership, Gröbner bases, Smith normal form.
//! * [`lattice`]: finitely presented distributive lattices, their points and duality.
//! * [`hochster`]: opposite lattices and the point bijection.
//! * [`zariski`]: the Zariski lattice of a ring, supports and functoriality.
//! * [`derived`]: chain complexes over PIDs, Koszul and Čech models, supports of complexes.
//! * [`ttc`]: lattices of supports of tensor-triangulated presentations.
//! * [`scheme`]: glued affine data, the structure sheaf and reconstruction checks.

pub mod derived;
pub mod error;
pub mod hochster;
pub mod lattice;
pub mod ring;
pub mod scheme;
pub mod ttc;
pub mod zariski;

pub use error::{Error, Result};
