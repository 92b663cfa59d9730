//! Generators and transforms of degenerate 3-(α,δ)-Sasakian Lie algebras.

mod boothby_wang;
mod deformation;
mod gram_schmidt;
mod heisenberg;
mod isomorphism;
mod random;
mod reconstruct;

pub use boothby_wang::{flat_boothby_wang, FlatHyperkahler};
pub use deformation::{h_deformation, DeformationParams};
pub use gram_schmidt::{quaternionic_gram_schmidt, quaternionic_gram_schmidt_seeded};
pub use heisenberg::{heisenberg, quaternion_units, su2_toy, t3, vertical_phi};
pub use isomorphism::{build_isomorphism, alpha_matching_deformation, IsomorphismResult, ISOMORPHISM_TOLERANCE};
pub use random::{cayley_orthogonal, random_cayley_orthogonal, random_skew};
pub use reconstruct::reconstruct_bracket;
