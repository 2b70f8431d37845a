//! Total domination polynomials of finite simple graphs.
//!
//! A vertex set `D` is *total dominating* if every vertex of the graph —
//! including the members of `D` — has a neighbor in `D`. The total
//! domination polynomial collects the counts of such sets by cardinality:
//! `D_t(G, x) = Σ_i d_t(G, i) x^i`.
//!
//! The crate computes these polynomials exactly (by subset enumeration and
//! by closed forms for several graph families), locates their complex
//! roots, and machine-checks a collection of structural theorems about
//! coefficients and root location, both on parametric families and on an
//! exhaustive corpus of small graphs.

pub mod closed;
pub mod graph;
pub mod poly;
pub mod report;
pub mod roots;
pub mod sweep;
pub mod svg;
pub mod tds;
pub mod verify;

pub use graph::{FamilySpec, Graph, GraphError, GraphMetrics};
pub use poly::{Poly, PolyError};
pub use report::{CheckRecord, CheckStatus};
pub use roots::{RootSet, SolverConfig, SolverError};
pub use tds::TdsError;
pub use verify::{GraphRecord, VerificationReport};
