//! The exchange maps Ξ and Ξ*, extremal index chains, `e(S)` and the generating
//! set `S_{v,w}`.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::oracle::flag_matroid_check;
use crate::perms::Permutation;
use crate::plucker::{Cell, Coordinate, Coords};
use crate::subset::Subset;
use crate::wiring::{enumerate_path_collections, PathCollection};

/// Anything that can answer "is `P_S` nonzero (finite)?".
pub trait Support {
    fn n(&self) -> usize;
    fn supports(&self, s: Subset) -> bool;
}

impl<T: Coordinate> Support for Coords<T> {
    fn n(&self) -> usize {
        Coords::n(self)
    }

    fn supports(&self, s: Subset) -> bool {
        self.is_supported(s)
    }
}

impl Support for Cell {
    fn n(&self) -> usize {
        Cell::n(self)
    }

    fn supports(&self, s: Subset) -> bool {
        self.is_supported(s)
    }
}

/// Swaps out the largest element that can be increased, replacing it by the
/// largest element it can be exchanged for.
pub fn xi<P: Support + ?Sized>(p: &P, i: Subset) -> Subset {
    if !p.supports(i) {
        return i;
    }
    let n = p.n();
    for b in i.elems().collect::<Vec<_>>().into_iter().rev() {
        let base = i.without(b);
        if let Some(a) = (b + 1..=n).rev().find(|&j| !i.contains(j) && p.supports(base.with(j))) {
            return base.with(a);
        }
    }
    i
}

/// Dual of [`xi`]: lowers the smallest decreasable element as far as possible.
pub fn xi_star<P: Support + ?Sized>(p: &P, i: Subset) -> Subset {
    if !p.supports(i) {
        return i;
    }
    for b in i.elems() {
        let base = i.without(b);
        if let Some(a) = (1..b).find(|&j| !i.contains(j) && p.supports(base.with(j))) {
            return base.with(a);
        }
    }
    i
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalChain {
    pub k: usize,
    pub chain: Vec<Subset>,
}

impl ExtremalChain {
    pub fn to_json(&self) -> Value {
        json!(self.chain.iter().map(|s| s.to_string()).collect::<Vec<_>>())
    }
}

fn chains_unchecked<P: Support + ?Sized>(p: &P) -> Result<Vec<ExtremalChain>> {
    let n = p.n();
    let mut out = Vec::new();
    for k in 1..n {
        let start = crate::subset::subsets_of_size(n, k)
            .into_iter()
            .find(|&s| p.supports(s))
            .ok_or_else(|| Error::Malformed(format!("no supported index of size {k}")))?;
        let mut chain = vec![start];
        loop {
            let next = xi(p, *chain.last().unwrap());
            if next == *chain.last().unwrap() {
                break;
            }
            chain.push(next);
        }
        out.push(ExtremalChain { k, chain });
    }
    Ok(out)
}

/// The Ξ-orbit of the first supported index of every size `1..n`.
pub fn extremal_indices<T: Coordinate>(p: &Coords<T>) -> Result<Vec<ExtremalChain>> {
    if !flag_matroid_check(&p.support()) {
        return Err(Error::NotFlagMatroid);
    }
    chains_unchecked(p)
}

/// Extremal chains of a cell, read from its path-collection support.
pub fn cell_extremal_indices(cell: &Cell) -> Vec<ExtremalChain> {
    chains_unchecked(cell).expect("cell supports are flag matroids")
}

fn extremal_set(chains: &[ExtremalChain]) -> BTreeSet<Subset> {
    chains.iter().flat_map(|c| c.chain.iter().copied()).collect()
}

/// First Ξ-iterate of `s` that is an extremal index.
pub fn e<P: Support + ?Sized>(p: &P, chains: &[ExtremalChain], s: Subset) -> Result<Subset> {
    if !p.supports(s) {
        return Err(Error::Unsupported(s));
    }
    let ext = extremal_set(chains);
    let mut cur = s;
    loop {
        if ext.contains(&cur) {
            return Ok(cur);
        }
        let next = xi(p, cur);
        if next == cur {
            return Err(Error::Internal(format!("Ξ fixed point {cur:?} is not extremal")));
        }
        cur = next;
    }
}

/// `e(S)` for a vector, computing its chains first.
pub fn e_of<T: Coordinate>(p: &Coords<T>, s: Subset) -> Result<Subset> {
    let chains = extremal_indices(p)?;
    e(p, &chains, s)
}

/// Larger sets first, lexicographic within a size.
pub fn prec_order(mut sets: Vec<Subset>) -> Vec<Subset> {
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    sets
}

/// The unique collection `[|I|]' -> I` for an extremal index.
pub fn extremal_collection(cell: &Cell, i: Subset) -> Result<PathCollection> {
    let mut all = enumerate_path_collections(cell.diagram(), Subset::initial(i.len()), i);
    if all.len() != 1 {
        return Err(Error::NonUniqueCollection {
            sinks: i,
            count: all.len(),
        });
    }
    Ok(all.pop().unwrap())
}

/// Extremal indices of the cell in ≺ order, each with the edges its collection
/// uses for the first time.
pub(crate) fn new_edge_scan(cell: &Cell) -> Result<Vec<(Subset, Vec<usize>)>> {
    let chains = cell_extremal_indices(cell);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for i in prec_order(extremal_set(&chains).into_iter().collect()) {
        let c = extremal_collection(cell, i)?;
        let fresh: Vec<usize> = c.edges().into_iter().filter(|e| seen.insert(*e)).collect();
        out.push((i, fresh));
    }
    Ok(out)
}

/// Gale-minimal indices plus every extremal index whose collection uses an
/// edge not used by an earlier one, in ≺ order.
pub fn s_vw_of(cell: &Cell) -> Result<Vec<Subset>> {
    let minimal: BTreeSet<Subset> = cell_extremal_indices(cell).iter().map(|c| c.chain[0]).collect();
    let scan = new_edge_scan(cell)?;
    let out: Vec<Subset> = scan
        .into_iter()
        .filter(|(i, fresh)| minimal.contains(i) || !fresh.is_empty())
        .map(|(i, _)| i)
        .collect();
    let expected = cell.dimension() + cell.n() - 1;
    if out.len() != expected {
        return Err(Error::Internal(format!(
            "S_vw has {} members, expected {expected}",
            out.len()
        )));
    }
    Ok(out)
}

pub fn s_vw(v: &Permutation, w: &Permutation) -> Result<Vec<Subset>> {
    s_vw_of(&Cell::new(v, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, Rational};
    use crate::plucker::phi;
    use std::collections::BTreeMap;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    fn toy() -> Coords<Rational> {
        let a: BTreeMap<usize, Rational> = [(1, int(2)), (2, int(3)), (4, int(5))].into();
        phi(&p("1324"), &p("4213"), &a).unwrap()
    }

    #[test]
    fn small_cell_xi() {
        let v = toy();
        assert_eq!(xi(&v, set(&[1])), set(&[3]));
        assert_eq!(xi(&v, set(&[1, 3])), set(&[2, 3]));
        assert_eq!(xi(&v, set(&[2, 3])), set(&[2, 3]));
        assert_eq!(xi(&v, set(&[1, 2])), set(&[1, 2]));
        assert_eq!(xi_star(&v, set(&[2, 3])), set(&[1, 3]));
        assert_eq!(xi_star(&v, set(&[1, 3])), set(&[1, 3]));
    }

    #[test]
    fn top_cell_xi_star() {
        let cell = Cell::new(&Permutation::identity(3), &Permutation::longest(3)).unwrap();
        assert_eq!(xi_star(&cell, set(&[3])), set(&[1]));
    }

    #[test]
    fn small_cell_chains() {
        let chains = extremal_indices(&toy()).unwrap();
        let got: Vec<Vec<Subset>> = chains.into_iter().map(|c| c.chain).collect();
        assert_eq!(
            got,
            vec![
                vec![set(&[1]), set(&[3])],
                vec![set(&[1, 3]), set(&[2, 3])],
                vec![set(&[1, 2, 3]), set(&[1, 3, 4]), set(&[2, 3, 4])],
            ]
        );
    }

    #[test]
    fn top_cell_chains_have_block_form() {
        for n in 3..=5 {
            let cell = Cell::new(&Permutation::identity(n), &Permutation::longest(n)).unwrap();
            let ext = extremal_set(&cell_extremal_indices(&cell));
            let mut expected = BTreeSet::new();
            for s in crate::subset::proper_subsets(n) {
                // {1..m} ∪ {k..n} with m < k - 1, or an initial segment.
                let m = (0..=n).take_while(|&m| m == 0 || s.contains(m)).last().unwrap();
                let rest = s.difference(Subset::initial(m));
                let is_block = rest.is_empty() || rest == Subset::interval(rest.min().unwrap(), n);
                if is_block {
                    expected.insert(s);
                }
            }
            assert_eq!(ext, expected, "n = {n}");
            assert_eq!(ext.len(), n * (n - 1) / 2 + n - 1);
        }
    }

    #[test]
    fn e_examples() {
        let cell = Cell::new(&Permutation::identity(5), &Permutation::longest(5)).unwrap();
        let chains = cell_extremal_indices(&cell);
        assert_eq!(e(&cell, &chains, set(&[1, 3, 4])).unwrap(), set(&[1, 4, 5]));
        assert_eq!(e(&cell, &chains, set(&[3, 4, 5])).unwrap(), set(&[3, 4, 5]));
        let v = toy();
        assert_eq!(e_of(&v, set(&[2, 3])).unwrap(), set(&[2, 3]));
        assert!(matches!(e_of(&v, set(&[1, 2])), Err(Error::Unsupported(_))));
    }

    #[test]
    fn s_vw_examples() {
        let got = s_vw(&p("1324"), &p("4213")).unwrap();
        assert_eq!(
            got,
            vec![
                set(&[1, 2, 3]),
                set(&[1, 3, 4]),
                set(&[2, 3, 4]),
                set(&[1, 3]),
                set(&[1]),
                set(&[3])
            ]
        );
        let id = Permutation::identity(4);
        assert_eq!(s_vw(&id, &id).unwrap(), vec![set(&[1, 2, 3]), set(&[1, 2]), set(&[1])]);
        for n in 3..=5 {
            let all = s_vw(&Permutation::identity(n), &Permutation::longest(n)).unwrap();
            assert_eq!(all.len(), n * (n - 1) / 2 + n - 1);
        }
        assert!(s_vw(&p("4213"), &p("1324")).is_err());
    }

    #[test]
    fn prec_is_size_then_lex() {
        let got = prec_order(vec![set(&[3]), set(&[1, 3]), set(&[1]), set(&[2, 3]), set(&[1, 2, 3])]);
        assert_eq!(
            got,
            vec![set(&[1, 2, 3]), set(&[1, 3]), set(&[2, 3]), set(&[1]), set(&[3])]
        );
    }
}
