//! Chain complexes over ℚ, dg `As²`-algebras, deformation retracts, and
//! homotopy transfer of the two products to an `As²∞` structure on the
//! retract target, with an exact verifier for the `∞`-relations.
//!
//! Differentials have degree −1 and h has degree +1, so that
//! `id − incl∘proj = d∘h + h∘d` holds without signs.

mod algebra;
mod complex;
mod homotopy;
pub mod json;
mod random;
mod retract;
mod tensor;

pub use algebra::{associativity_witness, blend_is_associative, check_dg_as2, DgAs2Algebra, DgAs2Failure, Product};
pub use complex::{apply_matrix, unit, ChainComplex};
pub use homotopy::{
    flip_one_entry, transfer, transfer_with_sign, verify_infinity_relations, RelationWitness, TransferredStructure,
    TreeSign, Verification, MAX_WEIGHT,
};
pub use random::{random_complex, random_dg_as2};
pub use retract::{build_retract, DeformationRetract};
pub use tensor::{add_scaled, MultiLinear, SparseVec};
