pub mod braid;
pub mod census;
pub mod cusp;
pub mod diagram;
pub mod homology;
pub mod invariants;
pub mod notation;
