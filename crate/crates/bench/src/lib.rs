//! Fixtures shared by the benchmarks.

use std::collections::BTreeMap;

use tnnflag::oracle::{generic_weights, random_trop_weights, rng};
use tnnflag::{Cell, Permutation, PlueckerVector, Rational, TropPlueckerVector, TropValue};

/// The top cell of `S_n`.
pub fn top_cell(n: usize) -> Cell {
    Cell::new(&Permutation::identity(n), &Permutation::longest(n)).expect("id <= w0")
}

pub fn weights(cell: &Cell, seed: u64) -> BTreeMap<usize, Rational> {
    generic_weights(&cell.weight_ids(), &mut rng(seed))
}

pub fn trop_weights(cell: &Cell, seed: u64) -> BTreeMap<usize, TropValue> {
    random_trop_weights(&cell.weight_ids(), &mut rng(seed))
}

pub fn point(cell: &Cell, seed: u64) -> PlueckerVector {
    cell.phi(&weights(cell, seed)).expect("positive weights")
}

pub fn trop_point(cell: &Cell, seed: u64) -> TropPlueckerVector {
    cell.trop_phi(&trop_weights(cell, seed)).expect("finite weights")
}
