//! The reductivity condition `[h, m] ⊆ m` as polynomial systems over
//! complement charts, with a bounded exact solver.

pub mod intersect;
pub mod quadric;
pub mod reproduce;
pub mod solve;
pub mod system;

pub use intersect::{intersection_suite, summand_intersections, IntersectionRow};
pub use reproduce::{reproduce, reproduce_case, summarize, CaseReport, ReproduceConfig, Status};
pub use solve::{solve, Branch, SolutionSet, SolverConfig};
pub use system::{constraints, verify_pair, Chart, Equation, PairVerdict, PolySystem, Witness};
