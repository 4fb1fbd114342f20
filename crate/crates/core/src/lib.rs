//! Exact calculator for motivic and categorical zeta-functions of classes in
//! the Lefschetz subring `Z[L]` of the Grothendieck ring of varieties.
//!
//! * [`poly`]: the ring `Z[L]`.
//! * [`series`]: truncated power series over `Z` or `Z[L]`.
//! * [`lambda`]: the geometric and categorical λ-structures, Adams and
//!   exterior operations.
//! * [`transforms`]: `f(t) -> prod f(t^k)`, its Möbius inverse and partition
//!   numbers.
//! * [`zeta`]: the two zeta-functions, the dg measure and identity checks.
//! * [`expr`]: the class-expression language.
//! * [`cli`]: the `zetacalc` command line.

pub mod cli;
pub mod error;
pub mod expr;
pub mod lambda;
pub mod poly;
pub mod series;
pub mod transforms;
pub mod zeta;

pub use error::{Error, Result};
pub use expr::{eval_expr, parse, parse_class, render, ClassExpr, ParseError, Symbol};
pub use lambda::{
    adams, lambda_power, lambda_series, sigma_series, sigma_series_categorical, sym_power,
    LambdaStructure,
};
pub use poly::LefschetzPoly;
pub use series::{Coefficient, IntSeries, PolySeries, TruncatedSeries};
pub use transforms::{exp_transform, mobius_table, mobius_transform, partition_numbers, MobiusTable};
pub use zeta::{
    mu_dg, verify_mult_cat, verify_mult_kap, verify_pn_power, verify_point_partition,
    verify_theorem, verify_theorem_with, zeta_categorical, zeta_motivic, zeta_theorem_rhs, Identity, Mismatch,
    VerificationReport,
};
