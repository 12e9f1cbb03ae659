//! The quantized coordinate algebra `O_q(SL2)` in its PBW basis.

pub mod degree;
pub mod frobenius;
pub mod pbw;
pub mod rewrite;
pub mod tensor;

pub use degree::{deg_of_monomial, deg_of_monomial_by_rewriting, in_d, phi, psi};
pub use frobenius::{
    aq_monomial, b_set, count_d, count_db, d_set, express_in_db, frobenius_generator_image, in_b,
    independence_certificate, is_in_aq, is_in_e, localized_express, verify_db_expression, LocalizedExpression,
    TopCoefficient,
};
pub use pbw::{OqElement, PbwIndex};
pub use rewrite::{normal_form, normal_form_with, Generator, GeneratorWord, Strategy};
pub use tensor::{tensor_independence_certificate, tensor_mul, TensorElement};
