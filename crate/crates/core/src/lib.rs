//! Plat presentations of links and the combinatorics of their branched
//! cyclic coverings.
//!
//! - [`braid`]: braid words and their endpoint permutations.
//! - [`plat`]: plat closures, components, orientations, the four plat
//!   moves and [`plat::specialize`].
//! - [`linking`]: linking matrices, the invariant used to check moves.
//! - [`covering`]: monodromy weights, the classification of cyclic
//!   coverings, Euler characteristics of surface covers, Heegaard genus
//!   values and bridge-number bounds.

pub mod braid;
pub mod covering;
pub mod error;
pub mod linking;
pub mod perm;
pub mod plat;

pub use braid::{
    parse_braid, permutation_of, preserves_parity_classes, BraidLetter, BraidWord, EndpointPermutation, Sign,
};
pub use covering::{BranchData, CoveringClassification, MonodromyAssignment, SurfaceCoveringReport};
pub use error::{Error, ErrorKind, Result};
pub use linking::{linking_matrix, LinkingMatrix};
pub use perm::Permutation;
pub use plat::{
    apply_move, components, default_orientation, exists_orientation_condition2prime, is_condition1, is_condition2,
    is_condition2prime, orient, specialize, ArcDirection, ArcKind, ArcRef, ComponentPartition, MoveKind, MoveRecord,
    OrientedPlat, PlatPresentation, Specialization, StrandDirection,
};
