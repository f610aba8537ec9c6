//! Singular loci of type A Schubert varieties.
//!
//! For a permutation `w`, the crate locates the irreducible components of
//! `Sing(X_w)`, classifies the generic singularity along each one, computes
//! the matching Kazhdan–Lusztig polynomial, and writes down a transversal
//! slice whose equations are checked against rank conditions by exact
//! rational sampling.
//!
//! ```
//! use schubert_core::{enumerate_components, kl_closed_form, ComponentType, Permutation};
//!
//! let w: Permutation = "4231".parse().unwrap();
//! let comps = enumerate_components(&w).unwrap();
//! assert_eq!(comps.len(), 1);
//! assert_eq!(comps[0].v.to_string(), "2143");
//! assert_eq!(comps[0].ctype, ComponentType::T4231);
//! assert_eq!(kl_closed_form(&comps[0]).to_string(), "1 + q");
//! ```

pub mod component;
pub mod error;
pub mod kl;
pub mod perm;
pub mod poly;
pub mod rational;
pub mod report;
pub mod slice;
pub mod smooth;
pub mod sweep;
pub mod tangent;

pub use component::{
    classify_component, enumerate_components, verify_formulas, Component, ComponentType,
};
pub use error::{Error, Result};
pub use kl::{kl_closed_form, kl_recursion, KlPoly, KlTable};
pub use perm::{bruhat_leq, region_d, Permutation, RankTable, Region};
pub use report::{cmd_report, ComponentReport, Report, DEFAULT_SEED, DEFAULT_TRIALS};
pub use slice::{
    build_slice, determinantal_model, embed_point, free_coordinates, in_schubert, sample_cone,
    verify_slice, FlagMatrix, SliceModel, SliceVerdict,
};
pub use smooth::{find_patterns, is_smooth, PatternKind, PatternOccurrence};
pub use sweep::{cmd_verify_all, SweepOptions, SweepReport};
pub use tangent::{
    lower_interval, singular_components_oracle, singular_points, tangent_dimension, TangentReport,
};
