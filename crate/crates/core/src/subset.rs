//! Index sets `I ⊆ [n]` stored as bitmasks, with bit `i-1` standing for element `i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest ground set a [`Subset`] can hold.
pub const MAX_N: usize = 31;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// Builds a set from 1-indexed elements. Panics on elements outside `1..=MAX_N`.
    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        let mut m = 0u32;
        for e in elems {
            assert!((1..=MAX_N).contains(&e), "element {e} out of range");
            m |= 1 << (e - 1);
        }
        Subset(m)
    }

    /// `[k] = {1, ..., k}`.
    pub fn initial(k: usize) -> Self {
        if k == 0 {
            Subset(0)
        } else {
            Subset(u32::MAX >> (32 - k))
        }
    }

    /// `{lo, ..., hi}`, empty when `lo > hi`.
    pub fn interval(lo: usize, hi: usize) -> Self {
        if lo > hi {
            Subset(0)
        } else {
            Subset(Self::initial(hi).0 & !Self::initial(lo - 1).0)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_N).contains(&e) && self.0 & (1 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        Subset(self.0 | (1 << (e - 1)))
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !(1 << (e - 1)))
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 32 - self.0.leading_zeros() as usize)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Elements in increasing order.
    pub fn elems(self) -> Elems {
        Elems(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elems().collect()
    }

    /// Number of elements of `self` strictly less than `e`.
    pub fn count_below(self, e: usize) -> usize {
        (self.0 & ((1u32 << (e - 1)) - 1)).count_ones() as usize
    }

    /// Number of elements of `self` strictly greater than `e`.
    pub fn count_above(self, e: usize) -> usize {
        if e >= 32 {
            0
        } else {
            (self.0 >> e).count_ones() as usize
        }
    }
}

pub struct Elems(u32);

impl Iterator for Elems {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let t = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(t as usize + 1)
    }
}

/// Lexicographic comparison of the increasing element sequences.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems().cmp(other.elems())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for e in self.elems() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for Subset {
    type Err = Error;

    /// Parses `"1,3,4"`; the empty string is the empty set.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Subset::EMPTY);
        }
        let mut out = Subset::EMPTY;
        for part in s.split(',') {
            let e: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::Malformed(format!("bad index set {s:?}")))?;
            if e == 0 || e > MAX_N || out.contains(e) {
                return Err(Error::Malformed(format!("bad index set {s:?}")));
            }
            out = out.with(e);
        }
        Ok(out)
    }
}

/// Gale order: `i_r <= j_r` for every position `r` of the sorted sequences.
pub fn gale_leq(i: Subset, j: Subset) -> Result<bool> {
    if i.len() != j.len() {
        return Err(Error::SubsetSizeMismatch {
            left: i.len(),
            right: j.len(),
        });
    }
    Ok(i.elems().zip(j.elems()).all(|(a, b)| a <= b))
}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (1..=k).collect();
    loop {
        out.push(Subset::from_elems(idx.iter().copied()));
        let mut r = k;
        while r > 0 && idx[r - 1] == n - k + r {
            r -= 1;
        }
        if r == 0 {
            break;
        }
        idx[r - 1] += 1;
        for t in r..k {
            idx[t] = idx[t - 1] + 1;
        }
    }
    out
}

/// All nonempty proper subsets of `[n]`, grouped by size and lexicographic within a size.
pub fn proper_subsets(n: usize) -> Vec<Subset> {
    (1..n).flat_map(|k| subsets_of_size(n, k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    #[test]
    fn gale_examples() {
        assert!(gale_leq(s(&[1, 2]), s(&[1, 2])).unwrap());
        assert!(gale_leq(s(&[1, 3]), s(&[2, 3])).unwrap());
        assert!(!gale_leq(s(&[1, 4]), s(&[2, 3])).unwrap());
        assert!(gale_leq(s(&[1]), s(&[1, 2])).is_err());
    }

    #[test]
    fn lex_order_and_enumeration() {
        let all = subsets_of_size(4, 2);
        assert_eq!(all.len(), 6);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0], s(&[1, 2]));
        assert_eq!(all[5], s(&[3, 4]));
        assert!(s(&[1, 4]) < s(&[2, 3]));
        assert_eq!(subsets_of_size(3, 0), vec![Subset::EMPTY]);
        assert_eq!(proper_subsets(3).len(), 6);
    }

    #[test]
    fn counts_and_parse() {
        let a = s(&[1, 3, 5]);
        assert_eq!(a.count_below(4), 2);
        assert_eq!(a.count_above(1), 2);
        assert_eq!(a.count_above(5), 0);
        assert_eq!(a.to_string(), "1,3,5");
        assert_eq!("1,3,5".parse::<Subset>().unwrap(), a);
        assert!("1,1".parse::<Subset>().is_err());
        assert!("0".parse::<Subset>().is_err());
        assert_eq!(Subset::interval(2, 4), s(&[2, 3, 4]));
        assert_eq!(a.max(), Some(5));
        assert_eq!(a.min(), Some(1));
    }
}
