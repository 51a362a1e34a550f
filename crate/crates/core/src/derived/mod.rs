//! Chain complexes over computable PIDs and the lattice invariants they carry.
//!
//! Koszul complexes sit in degrees `1 → 0` with `H₀(K(f)) = R/(f)`; all
//! support statements are invariant under suspension, so the choice of
//! origin does not matter.

mod cech;
mod complex;
mod hom;
mod homology;
mod recipe;
mod support;

pub use cech::{
    cech_complex, coprime_base, local_cohomology, stable_koszul, CechHomology, CechModel, Piece,
    MAX_CECH_GENERATORS,
};
pub use complex::{koszul, ChainComplex, ChainMap};
pub use hom::{derived_hom_groups, hom_complex};
pub use homology::{homology, ModulePresentation};
pub use recipe::{verify_recipe, RecipeReport, RecipeStep};
pub use support::{
    cellular_equiv, is_f_invertible, is_i_torsion, loc_invariant, module_is_invertible,
    module_is_power_torsion, supph,
};
