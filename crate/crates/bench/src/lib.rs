//! Shared fixtures for the solver benchmarks.

use fade_core::prelude::*;

/// Example 1 problem on an `N × M` grid over `[0, 1]`.
pub fn example1(cells: usize, steps: usize) -> (ManufacturedCase, Grid) {
    let case = build_case(Example::Example1, CaseParams::example1()).expect("example 1 builds");
    let grid = Grid::new(cells, steps, 1.0).expect("valid grid");
    (case, grid)
}
