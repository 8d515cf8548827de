//! # powerlap
//!
//! Exact Laplacian spectra of power graphs of finite abelian groups.
//!
//! The power graph of a group has the group elements as vertices, with two
//! distinct elements adjacent when one is a power (here, an integer multiple)
//! of the other. For `Z_{p^m}^n` and `Z_2^r x Z_4^s` the Laplacian spectrum has
//! a closed form, and these graphs decompose into joins and unions of complete
//! graphs. This crate computes every spectrum three independent ways and checks
//! that they agree exactly:
//!
//! | Route | Module |
//! |-------|--------|
//! | closed-form polynomial | [`closed_form`] |
//! | join/union calculus on the structural decomposition | [`expr`], [`spectrum`] |
//! | exact characteristic polynomial of the realized Laplacian | [`oracle`] |
//!
//! [`verify`] runs all applicable routes for a group.
//!
//! All arithmetic is exact. Eigenvalues and multiplicities are big integers, so
//! the closed forms evaluate well past any size where a graph could be built.

pub mod arith;
pub mod closed_form;
pub mod dsl;
pub mod error;
pub mod expr;
pub mod group;
pub mod oracle;
pub mod poly;
pub mod power_graph;
pub mod spectrum;
pub mod verify;

pub use dsl::{parse_expr, print_expr};
pub use error::{Error, Result};
pub use expr::GraphExpr;
pub use group::{make_group, parse_descriptor, Family, GroupElement, GroupSpec};
pub use poly::{poly_equal, IntPoly};
pub use power_graph::{build_power_graph, Graph};
pub use spectrum::{spectrum_of_complete, Spectrum};
pub use verify::{verify_group, Caps, VerificationReport, VerifyOptions};
