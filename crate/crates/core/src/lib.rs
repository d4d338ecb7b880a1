//! Exact computations with finite-dimensional modules over quiver algebras
//! with relations, aimed at periodic relative Gorenstein objects.

pub mod claims;
pub mod class;
pub mod corpus;
pub mod engine;
pub mod homology;
pub mod linalg;
pub mod module;
pub mod quiver;
pub mod report;
pub mod verdict;
