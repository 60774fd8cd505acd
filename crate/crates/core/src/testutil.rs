//! Shared fixtures for unit tests.

use crate::ground::{Ground, VertexSet};
use crate::matrix::F2Matrix;
use crate::set_system::SetSystem;

pub fn example_ground() -> Ground {
    Ground::new(["p", "q", "r", "s"]).unwrap()
}

/// Vertices p,q,r,s; edges pq, pr, ps, rs; loops on p and q.
pub fn example_matrix() -> F2Matrix {
    F2Matrix::from_entries(
        &example_ground(),
        &[
            &[1, 1, 1, 1],
            &[1, 1, 0, 0],
            &[1, 0, 0, 1],
            &[1, 0, 1, 0],
        ],
    )
}

/// Builds a set system from subsets written as space-separated labels
/// (the empty string is the empty set).
pub fn ss(ground: &Ground, subsets: &[&str]) -> SetSystem {
    let sets: Vec<VertexSet> = subsets
        .iter()
        .map(|s| VertexSet::from_labels(ground, s.split_whitespace()).unwrap())
        .collect();
    SetSystem::from_subsets(ground, sets.iter()).unwrap()
}
