//! Brute-force verifiers and random generators used by the test suites. None of
//! the checkers here reuse the code paths they are meant to check.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{int, rat, LaurentMonomial, Matrix, Polynomial, Rational, TropValue};
use crate::error::{Error, Result};
use crate::perms::{all_permutations, bruhat_leq, Permutation, Word};
use crate::plucker::{generate_relations, plucker_coordinates, pvar, PlueckerVector, TropPlueckerVector};
use crate::subset::{proper_subsets, subsets_of_size, Subset};
use crate::wiring::CellWord;

pub const SUPPORT_ORACLE_MAX_N: usize = 7;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every reduced word of `w`, found by peeling off left descents.
pub fn reduced_words(w: &Permutation) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 1..w.n() {
        if w.has_left_descent(i) {
            for mut rest in reduced_words(&w.left_mul_simple(i)) {
                rest.insert(0, i);
                out.push(rest);
            }
        }
    }
    out
}

/// Subword criterion: `v <= w` iff a reduced word of `w` contains a reduced
/// word of `v` as a subword.
pub fn bruhat_leq_subword(v: &Permutation, w: &Permutation) -> Result<bool> {
    if v.n() != w.n() {
        return Err(Error::SizeMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    if w.n() > 5 {
        return Err(Error::TooLarge { n: w.n(), max: 5 });
    }
    let lv = v.length();
    for word in reduced_words(w) {
        let k = word.len();
        for mask in 0u32..(1 << k) {
            if mask.count_ones() as usize != lv {
                continue;
            }
            let letters: Vec<usize> = (0..k).filter(|&p| mask & (1 << p) != 0).map(|p| word[p]).collect();
            let sub = Word::new(v.n(), letters).expect("letters come from a valid word");
            if sub.evaluate() == *v {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(m: &Matrix<Rational>) -> Rational {
    let n = m.rows();
    if n == 0 {
        return Rational::one();
    }
    let mut acc = Rational::zero();
    for c in 0..n {
        let x = m.get(0, c);
        if x.is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
        let minor = cofactor_determinant(&m.submatrix(&rows, &cols));
        if c % 2 == 0 {
            acc += x * minor;
        } else {
            acc -= x * minor;
        }
    }
    acc
}

fn cofactor_polynomial(m: &Matrix<Polynomial>) -> Polynomial {
    let n = m.rows();
    if n == 0 {
        return Polynomial::constant(Rational::one());
    }
    let mut acc = Polynomial::zero();
    for c in 0..n {
        let x = m.get(0, c);
        if x.is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&j| j != c).collect();
        let mut term = x * &cofactor_polynomial(&m.submatrix(&rows, &cols));
        if c % 2 == 1 {
            term = &term * &Polynomial::constant(int(-1));
        }
        acc = &acc + &term;
    }
    acc
}

/// The cell matrix with symbolic weights, built factor by factor.
pub fn symbolic_cell_matrix(v: &Permutation, w: &Permutation) -> Result<Matrix<Polynomial>> {
    let cell = CellWord::new(v, w)?;
    let n = cell.n();
    let ident = |r: usize, c: usize| {
        if r == c {
            Polynomial::constant(Rational::one())
        } else {
            Polynomial::zero()
        }
    };
    let mut m = Matrix::from_fn(n, n, ident);
    for (j, &i) in cell.word.letters.iter().enumerate() {
        let mut f = Matrix::from_fn(n, n, ident);
        if cell.swaps[j] {
            f.set(i - 1, i - 1, Polynomial::zero());
            f.set(i, i, Polynomial::zero());
            f.set(i - 1, i, Polynomial::constant(Rational::one()));
            f.set(i, i - 1, Polynomial::constant(int(-1)));
        } else {
            f.set(i - 1, i, Polynomial::var(j + 1));
        }
        m = &m * &f;
    }
    Ok(m)
}

/// Expanded top-justified minors of the symbolic cell matrix, keyed by index.
pub fn symbolic_minors(v: &Permutation, w: &Permutation) -> Result<BTreeMap<Subset, Polynomial>> {
    let m = symbolic_cell_matrix(v, w)?;
    let n = m.rows();
    let mut out = BTreeMap::new();
    for s in proper_subsets(n) {
        let rows: Vec<usize> = (0..s.len()).collect();
        let cols: Vec<usize> = s.elems().map(|c| c - 1).collect();
        out.insert(s, cofactor_polynomial(&m.submatrix(&rows, &cols)));
    }
    Ok(out)
}

/// Tropicalization of the expanded minors, term by term. Every coefficient of a
/// minor must be positive.
pub fn trop_phi_oracle(v: &Permutation, w: &Permutation, x: &BTreeMap<usize, TropValue>) -> Result<TropPlueckerVector> {
    let minors = symbolic_minors(v, w)?;
    let mut p = TropPlueckerVector::empty(v.n());
    for (s, poly) in minors {
        if poly.terms().any(|t| !t.coefficient().is_positive()) {
            return Err(Error::Internal(format!("minor {s:?} has a non-positive term")));
        }
        p.set(s, poly.trop_eval(x)?);
    }
    Ok(p.canonicalize())
}

/// `{ u[k] : v^{-1} <= u <= w^{-1} }` by enumerating `S_n`.
pub fn support_oracle(v: &Permutation, w: &Permutation, k: usize) -> Result<BTreeSet<Subset>> {
    let n = v.n();
    if n > SUPPORT_ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: SUPPORT_ORACLE_MAX_N,
        });
    }
    if !bruhat_leq(v, w)? {
        return Err(crate::perms::not_leq(v, w));
    }
    let (vi, wi) = (v.inverse(), w.inverse());
    let mut out = BTreeSet::new();
    for u in all_permutations(n) {
        if bruhat_leq(&vi, &u)? && bruhat_leq(&u, &wi)? {
            out.insert(u.prefix_set(k));
        }
    }
    Ok(out)
}

fn is_matroid(bases: &[Subset]) -> bool {
    if bases.is_empty() {
        return false;
    }
    let set: HashSet<Subset> = bases.iter().copied().collect();
    let k = bases[0].len();
    if bases.iter().any(|b| b.len() != k) {
        return false;
    }
    for &b1 in bases {
        for &b2 in bases {
            for x in b1.difference(b2).elems() {
                let ok = b2.difference(b1).elems().any(|y| set.contains(&b1.without(x).with(y)));
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// `support[k-1]` lists the bases of size `k`. Checks basis exchange for every
/// constituent and both containment conditions between consecutive sizes.
pub fn flag_matroid_check(support: &[Vec<Subset>]) -> bool {
    if !support.iter().all(|b| is_matroid(b)) {
        return false;
    }
    for pair in support.windows(2) {
        let (small, big) = (&pair[0], &pair[1]);
        if !small.iter().all(|s| big.iter().any(|b| s.is_subset_of(*b))) {
            return false;
        }
        if !big.iter().all(|b| small.iter().any(|s| s.is_subset_of(*b))) {
            return false;
        }
    }
    true
}

/// `p / q` with `p` in `-9..=9` and `q` in `1..=5`.
fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn random_matrix(n: usize, rng: &mut impl Rng) -> Matrix {
    Matrix::from_fn(n, n, |_, _| small_rational(rng))
}

/// Plücker vector of a random invertible rational matrix.
pub fn random_flag(n: usize, seed: u64) -> Result<PlueckerVector> {
    if n > SUPPORT_ORACLE_MAX_N {
        return Err(Error::TooLarge {
            n,
            max: SUPPORT_ORACLE_MAX_N,
        });
    }
    let mut r = rng(seed);
    loop {
        let m = random_matrix(n, &mut r);
        if !cofactor_determinant(&m).is_zero() {
            return Ok(plucker_coordinates(&m));
        }
    }
}

const PRIMES: [i64; 24] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

/// Positive weights with pairwise distinct prime numerators.
pub fn generic_weights(ids: &[usize], rng: &mut impl Rng) -> BTreeMap<usize, Rational> {
    let mut primes = PRIMES.to_vec();
    primes.shuffle(rng);
    ids.iter()
        .zip(primes)
        .map(|(&j, p)| {
            let q = rng.gen_range(1..=7);
            (j, rat(p, if q % p == 0 { 1 } else { q }))
        })
        .collect()
}

/// Finite tropical weights `p / q` with `p` in `-20..=20`, `q` in `1..=4`.
pub fn random_trop_weights(ids: &[usize], rng: &mut impl Rng) -> BTreeMap<usize, TropValue> {
    ids.iter()
        .map(|&j| (j, TropValue::Finite(rat(rng.gen_range(-20..=20), rng.gen_range(1..=4)))))
        .collect()
}

fn random_multiplier(n: usize, rng: &mut impl Rng) -> LaurentMonomial {
    let indices = proper_subsets(n);
    let mut exps = BTreeMap::new();
    for _ in 0..rng.gen_range(0..=2) {
        let s = indices[rng.gen_range(0..indices.len())];
        *exps.entry(pvar(s)).or_insert(0) += 1;
    }
    let c = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
    LaurentMonomial::new(int(c), exps)
}

/// Random elements `Σ q_m · g_m` of the incidence ideal: one to three generators,
/// each times a random monomial in the Plücker variables.
pub fn ideal_element_sample(n: usize, count: usize, seed: u64) -> Result<Vec<Polynomial>> {
    if n > 4 {
        return Err(Error::TooLarge { n, max: 4 });
    }
    let gens: Vec<Polynomial> = generate_relations(n, false).iter().map(|r| r.to_polynomial()).collect();
    let mut r = rng(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut acc = Polynomial::zero();
        if !gens.is_empty() {
            for _ in 0..r.gen_range(1..=3) {
                let g = &gens[r.gen_range(0..gens.len())];
                acc = &acc + &g.scale(&random_multiplier(n, &mut r));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// Assignment of every Plücker variable to its tropical coordinate.
pub fn trop_assignment(p: &TropPlueckerVector) -> BTreeMap<usize, TropValue> {
    proper_subsets(p.n())
        .into_iter()
        .map(|s| (pvar(s), p.get(s).clone()))
        .collect()
}

pub fn classical_assignment(p: &PlueckerVector) -> BTreeMap<usize, Rational> {
    proper_subsets(p.n())
        .into_iter()
        .map(|s| (pvar(s), p.get(s).clone()))
        .collect()
}

/// Random search for a small integer point where some three-term relation has
/// its minimum attained twice, but only among terms of one sign.
pub fn same_sign_tie(n: usize, max_value: i64) -> Option<(usize, TropPlueckerVector)> {
    let rels = generate_relations(n, true);
    let indices = proper_subsets(n);
    let mut r = rng(0xC0FFEE);
    for _ in 0..200 {
        let mut p = TropPlueckerVector::empty(n);
        for &s in &indices {
            p.set(s, TropValue::int(r.gen_range(0..=max_value)));
        }
        for (idx, rel) in rels.iter().enumerate() {
            if crate::plucker::trop_check_relation(rel, &p, false)
                && !crate::plucker::trop_check_relation(rel, &p, true)
            {
                return Some((idx, p));
            }
        }
    }
    None
}

/// Size classes of an index collection, for [`flag_matroid_check`].
pub fn by_size(n: usize, sets: &BTreeSet<Subset>) -> Vec<Vec<Subset>> {
    (1..n)
        .map(|k| subsets_of_size(n, k).into_iter().filter(|s| sets.contains(s)).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::bruhat_pairs;
    use crate::plucker::check_relation;
    use num_bigint::BigInt;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    #[test]
    fn subword_oracle_agrees_on_s3() {
        let all = all_permutations(3);
        for v in &all {
            for w in &all {
                assert_eq!(bruhat_leq(v, w).unwrap(), bruhat_leq_subword(v, w).unwrap(), "{v} {w}");
            }
        }
        assert_eq!(reduced_words(&Permutation::longest(3)).len(), 2);
    }

    #[test]
    fn cofactor_matches_bareiss() {
        let mut r = rng(7);
        for n in 1..=5 {
            for _ in 0..5 {
                let m = random_matrix(n, &mut r);
                assert_eq!(cofactor_determinant(&m), m.determinant());
            }
        }
    }

    #[test]
    fn support_oracle_examples() {
        let (id, w0) = (Permutation::identity(4), Permutation::longest(4));
        for k in 1..4 {
            assert_eq!(support_oracle(&id, &w0, k).unwrap().len(), subsets_of_size(4, k).len());
            let v = p("2413");
            assert_eq!(
                support_oracle(&v, &v, k).unwrap(),
                BTreeSet::from([v.inverse().prefix_set(k)])
            );
        }
        assert_eq!(
            support_oracle(&p("1324"), &p("4213"), 2).unwrap(),
            BTreeSet::from([set(&[1, 3]), set(&[2, 3])])
        );
        let big = Permutation::identity(8);
        assert!(matches!(support_oracle(&big, &big, 1), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn flag_matroid_examples() {
        let counter = vec![
            vec![set(&[1]), set(&[3])],
            vec![set(&[1, 2]), set(&[1, 3]), set(&[2, 3])],
        ];
        assert!(flag_matroid_check(&counter));
        let bad = vec![vec![set(&[1])], vec![set(&[2, 3])]];
        assert!(!flag_matroid_check(&bad));
        let not_matroid = vec![vec![set(&[1]), set(&[2])], vec![set(&[1, 2]), set(&[3, 4])]];
        assert!(!flag_matroid_check(&not_matroid));
        for (v, w) in bruhat_pairs(3) {
            let sets: BTreeSet<Subset> = (1..3).flat_map(|k| support_oracle(&v, &w, k).unwrap()).collect();
            assert!(flag_matroid_check(&by_size(3, &sets)));
        }
    }

    #[test]
    fn random_flags_satisfy_relations() {
        let rels = generate_relations(4, false);
        for seed in 0..5 {
            let f = random_flag(4, seed).unwrap();
            for rel in &rels {
                assert!(check_relation(rel, &f).is_zero());
            }
        }
        let id = plucker_coordinates(&Matrix::identity(3));
        assert_eq!(id.get(set(&[1])), &int(1));
        assert_eq!(id.get(set(&[2])), &int(0));
        assert_eq!(id.get(set(&[1, 2])), &int(1));
    }

    #[test]
    fn symbolic_minors_top_cell_n3() {
        let m = symbolic_minors(&Permutation::identity(3), &Permutation::longest(3)).unwrap();
        let two = &m[&set(&[2])];
        assert_eq!(two, &(&Polynomial::var(1) + &Polynomial::var(3)));
    }

    #[test]
    fn ideal_samples() {
        let sample = ideal_element_sample(3, 10, 1).unwrap();
        assert_eq!(sample.len(), 10);
        let f = random_flag(3, 3).unwrap();
        for g in &sample {
            assert!(g.eval(&classical_assignment(&f)).unwrap().is_zero());
        }
        assert!(ideal_element_sample(5, 1, 0).is_err());
    }

    #[test]
    fn generic_weights_are_distinct() {
        let mut r = rng(3);
        let a = generic_weights(&[1, 2, 4, 5], &mut r);
        let nums: BTreeSet<BigInt> = a.values().map(|q| q.numer().clone()).collect();
        assert_eq!(nums.len(), 4);
        assert!(a.values().all(|q| q.is_positive()));
    }
}
