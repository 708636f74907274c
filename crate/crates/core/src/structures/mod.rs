//! Pre-Lie-Rinehart and Lie-Rinehart algebras presented on a free basis.

mod constructors;
mod fd;
mod lie_rinehart;
mod prelie_rinehart;

pub use constructors::{
    check_derivation, coordinate_algebra, derivation_extension, derivation_prelie, dn, tensor_product_algebra,
    transformation_algebra, transformation_lie_rinehart,
};
pub use fd::{sl2_action, ActionData, FdBracket, LieAlgebraFD, PreLieAlgebraFD};
pub use lie_rinehart::LieRinehart;
pub(crate) use prelie_rinehart::pairs;
pub use prelie_rinehart::{check_homomorphism, PreLieRinehart};
