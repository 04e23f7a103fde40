//! Valid tuples, decomposable equations, the reduction algorithm and the
//! minimality checks built on them.

mod forms;
mod minimality;
mod reduce;
mod span;
mod tuple;

pub use forms::{
    allowable_partitions, build_system, decomposable_partitions, decompose, is_allowable, linear_form,
    tensor_of_form, variables, Decomposition, DecomposableSystem, LinearForm, Variable,
};
pub use minimality::{
    check_minimality, check_minimality_for, generators_of_degree, GeneratorVerdict, Guard, MinimalityReport, Verdict,
};
pub use reduce::{canonical_order, closed_form, reduce_tall, Reduction, Step};
pub use span::{blowup_level, blowup_partition, blowup_tuple, restrict_form, tall_in_wide_span, SpanReport, TallCertificate};
pub use tuple::{
    generator_pairs, generator_set, params_from_bigrassmannian, parse_tuple_values, valid_tuples, Bigrassmannian,
    GeneratorParams, ValidTuple,
};
