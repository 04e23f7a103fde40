//! The ring of symmetric functions in the Schur basis, its quotient by a
//! rectangle, and the Hopf structure used by the reduction algorithm.

mod schur;
mod tensor;

pub use schur::{antipode, basis_product, hopf_convolution, multiply, project_to_box, SchurElement};
pub use tensor::{
    coproduct, cp_map, expand_formal_tensor, one_tensor, product_of_factors, FormalKey,
    FormalTensor, TensorElement,
};
