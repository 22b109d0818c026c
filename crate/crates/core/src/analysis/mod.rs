//! Exact linear algebra over prefix vectors of probabilistic machines, and
//! value-level operations on integers.

mod extension;
mod funop;
pub mod linear;
mod prefix;

pub use extension::{check_cequal_extension, check_extension_with, sign_pattern, ExtensionReport, SignPattern, Violation};
pub use funop::{funop_apply, FunOp};
pub use prefix::{
    affine_decomposition, extend, prefix_vector, recombine, spanning_prefix_set, AffineDecomposition, PrefixVector,
};
