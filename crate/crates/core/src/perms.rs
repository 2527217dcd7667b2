//! Permutations in one-line notation, Bruhat order and positive distinguished
//! subexpressions inside the canonical reduced word for `w0`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::subset::{gale_leq, Subset};

/// A permutation of `[n]`, stored as `w(1), ..., w(n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty".into()));
        }
        let mut seen = vec![false; n + 1];
        for &x in &images {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The longest element `n, n-1, ..., 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            images: (1..=n).rev().collect(),
        }
    }

    /// The simple transposition `s_i` of `S_n`.
    pub fn simple(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} outside S_{n}");
        let mut images: Vec<usize> = (1..=n).collect();
        images.swap(i - 1, i);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `w(i)` for 1-indexed `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// `s_i` is a left descent iff `w^{-1}(i) > w^{-1}(i+1)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |x: usize| self.images.iter().position(|&y| y == x).unwrap();
        pos(i) > pos(i + 1)
    }

    /// `s_i · w`: swaps the values `i` and `i + 1`.
    pub fn left_mul_simple(&self, i: usize) -> Self {
        let images = self
            .images
            .iter()
            .map(|&x| {
                if x == i {
                    i + 1
                } else if x == i + 1 {
                    i
                } else {
                    x
                }
            })
            .collect();
        Permutation { images }
    }

    /// `w[k] = {w(1), ..., w(k)}`.
    pub fn prefix_set(&self, k: usize) -> Subset {
        Subset::from_elems(self.images[..k].iter().copied())
    }

    /// Digits for `n <= 9`, comma separated otherwise.
    pub fn to_compact(&self) -> String {
        if self.n() <= 9 {
            self.images.iter().map(|x| x.to_string()).collect()
        } else {
            self.to_string()
        }
    }
}

pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.n() != v.n() {
        return Err(Error::SizeMismatch {
            left: u.n(),
            right: v.n(),
        });
    }
    Ok(Permutation {
        images: v.images.iter().map(|&i| u.apply(i)).collect(),
    })
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts `"4,2,1,3"` or, for `n <= 9`, `"4213"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPermutation(s.to_string());
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|p| p.trim().parse().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::new(images)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Tableau criterion: `v <= w` iff `v[k] <= w[k]` in Gale order for every `k`.
pub fn bruhat_leq(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    for k in 1..v.n() {
        if !gale_leq(v.prefix_set(k), w.prefix_set(k))? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All of `S_n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation { images: cur.clone() });
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// `{u : v <= u <= w}` in lexicographic order.
pub fn bruhat_interval(v: &Permutation, w: &Permutation) -> Result<Vec<Permutation>> {
    if !bruhat_leq(v, w)? {
        return Err(not_leq(v, w));
    }
    let mut out = Vec::new();
    for u in all_permutations(v.n()) {
        if bruhat_leq(v, &u)? && bruhat_leq(&u, w)? {
            out.push(u);
        }
    }
    Ok(out)
}

/// Every pair `v <= w` in `S_n`, ordered by `(v, w)`.
pub fn bruhat_pairs(n: usize) -> Vec<(Permutation, Permutation)> {
    let all = all_permutations(n);
    let mut out = Vec::new();
    for v in &all {
        for w in &all {
            if bruhat_leq(v, w).unwrap() {
                out.push((v.clone(), w.clone()));
            }
        }
    }
    out
}

pub(crate) fn not_leq(v: &Permutation, w: &Permutation) -> Error {
    Error::NotBruhatLeq {
        v: v.to_string(),
        w: w.to_string(),
    }
}

/// A word in the simple transpositions of `S_n`. `runs[p]` is the run index of
/// position `p` inside the canonical `w0` word, when the word is a subword of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Word {
    pub n: usize,
    pub letters: Vec<usize>,
    pub runs: Option<Vec<usize>>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::InvalidWord(format!("letter {bad} outside S_{n}")));
        }
        Ok(Word { n, letters, runs: None })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `s_{i_1} ∘ s_{i_2} ∘ ... ∘ s_{i_k}`.
    pub fn evaluate(&self) -> Permutation {
        let mut u = Permutation::identity(self.n);
        for &i in self.letters.iter().rev() {
            u = u.left_mul_simple(i);
        }
        u
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }
}

/// `(s_1 ... s_{n-1})(s_1 ... s_{n-2}) ... (s_1)`, run `r` holding `1..=n-r`.
pub fn canonical_w0_word(n: usize) -> Word {
    let mut letters = Vec::new();
    let mut runs = Vec::new();
    for r in 1..n {
        for i in 1..=n - r {
            letters.push(i);
            runs.push(r);
        }
    }
    Word {
        n,
        letters,
        runs: Some(runs),
    }
}

/// Selected positions (1-indexed, increasing) of a parent word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subexpression {
    pub parent: Word,
    pub positions: Vec<usize>,
}

impl Subexpression {
    pub fn contains(&self, p: usize) -> bool {
        self.positions.binary_search(&p).is_ok()
    }

    /// The selected letters as a word, carrying the run annotation along.
    pub fn word(&self) -> Word {
        Word {
            n: self.parent.n,
            letters: self.positions.iter().map(|&p| self.parent.letters[p - 1]).collect(),
            runs: self
                .parent
                .runs
                .as_ref()
                .map(|r| self.positions.iter().map(|&p| r[p - 1]).collect()),
        }
    }

    pub fn evaluate(&self) -> Permutation {
        self.word().evaluate()
    }
}

/// The leftmost reduced subexpression for `target`: scan the parent left to right
/// and take a letter whenever it is a left descent of what is still left to build.
pub fn positive_distinguished_subexpression(target: &Permutation, parent: &Word) -> Result<Subexpression> {
    if target.n() != parent.n {
        return Err(Error::SizeMismatch {
            left: target.n(),
            right: parent.n,
        });
    }
    if !parent.is_reduced() {
        return Err(Error::InvalidWord("parent word is not reduced".into()));
    }
    let mut u = target.clone();
    let mut positions = Vec::new();
    for (p, &i) in parent.letters.iter().enumerate() {
        if u.has_left_descent(i) {
            u = u.left_mul_simple(i);
            positions.push(p + 1);
        }
    }
    if !u.is_identity() {
        return Err(not_leq(target, &parent.evaluate()));
    }
    Ok(Subexpression {
        parent: parent.clone(),
        positions,
    })
}
