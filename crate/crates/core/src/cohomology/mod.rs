//! Representations, the pre-Lie and Lie-Rinehart cochain complexes, and their comparison.

mod cochain;
mod complex;
mod field;
mod rep;

pub use cochain::{canonical_tuples, Cochain, ComplexKind};
pub use complex::{
    c1_module, c1_to_map, coboundary, cocycle_check, complex_iso_h, complex_iso_h_inverse, induced_rep_on_c1,
    induced_rep_on_c1_unchecked, lie_coboundary, lie_coboundary_eval, map_to_c1, prelie_coboundary,
    prelie_coboundary_eval, RepRef,
};
pub use field::{
    coboundary_matrix, coboundary_solve_field, cochain_from_vector, cocycle_basis_field, cohomology_dims_field,
    to_vector,
};
pub use rep::{LieRepresentation, Representation};

#[cfg(test)]
mod tests;
