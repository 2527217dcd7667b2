//! Exact rationals, Laurent monomials over weight variables, determinants and the
//! min-plus semiring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Malformed(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Element of `Q ∪ {∞}`. `Finite < Infinite`, so `min` is the derived ordering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropValue {
    Finite(Rational),
    Infinite,
}

impl TropValue {
    pub fn zero() -> Self {
        TropValue::Finite(Rational::zero())
    }

    pub fn int(n: i64) -> Self {
        TropValue::Finite(int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, TropValue::Finite(_))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropValue::Finite(q) => Some(q),
            TropValue::Infinite => None,
        }
    }

    /// Tropical product, i.e. ordinary sum with `∞` absorbing.
    pub fn tmul(&self, other: &TropValue) -> TropValue {
        match (self, other) {
            (TropValue::Finite(a), TropValue::Finite(b)) => TropValue::Finite(a + b),
            _ => TropValue::Infinite,
        }
    }

    /// Tropical sum.
    pub fn tadd(&self, other: &TropValue) -> TropValue {
        self.clone().min(other.clone())
    }

    /// `self - c` for a finite shift `c`.
    pub fn shift(&self, c: &Rational) -> TropValue {
        match self {
            TropValue::Finite(a) => TropValue::Finite(a - c),
            TropValue::Infinite => TropValue::Infinite,
        }
    }
}

impl fmt::Display for TropValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropValue::Finite(q) => write!(f, "{q}"),
            TropValue::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for TropValue {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "inf" {
            Ok(TropValue::Infinite)
        } else {
            parse_rational(s).map(TropValue::Finite)
        }
    }
}

/// Exponent vector of a Laurent monomial; zero exponents are never stored.
pub type Exponents = BTreeMap<usize, i64>;

fn add_exponents(into: &mut Exponents, from: &Exponents, scale: i64) {
    for (&v, &e) in from {
        let slot = into.entry(v).or_insert(0);
        *slot += scale * e;
        if *slot == 0 {
            into.remove(&v);
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMonomial {
    coefficient: Rational,
    exponents: Exponents,
}

impl LaurentMonomial {
    /// Panics if `coefficient` is zero.
    pub fn new(coefficient: Rational, exponents: Exponents) -> Self {
        assert!(!coefficient.is_zero(), "monomial coefficient must be nonzero");
        let exponents = exponents.into_iter().filter(|&(_, e)| e != 0).collect();
        LaurentMonomial { coefficient, exponents }
    }

    pub fn one() -> Self {
        LaurentMonomial::new(Rational::one(), Exponents::new())
    }

    pub fn var(v: usize) -> Self {
        LaurentMonomial::new(Rational::one(), [(v, 1)].into())
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn exponents(&self) -> &Exponents {
        &self.exponents
    }

    pub fn degree(&self, v: usize) -> i64 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        LaurentMonomial {
            coefficient: self.coefficient.recip(),
            exponents: self.exponents.iter().map(|(&v, &e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Self {
        let coefficient = if k >= 0 {
            num_traits::pow(self.coefficient.clone(), k as usize)
        } else {
            num_traits::pow(self.coefficient.recip(), (-k) as usize)
        };
        let mut exponents = Exponents::new();
        add_exponents(&mut exponents, &self.exponents, k);
        LaurentMonomial { coefficient, exponents }
    }

    /// Replaces variable `v` by the monomial `m`.
    pub fn substitute(&self, v: usize, m: &LaurentMonomial) -> Self {
        let e = self.degree(v);
        if e == 0 {
            return self.clone();
        }
        let mut rest = self.clone();
        rest.exponents.remove(&v);
        &rest * &m.pow(e)
    }
}

impl Mul for &LaurentMonomial {
    type Output = LaurentMonomial;

    fn mul(self, rhs: &LaurentMonomial) -> LaurentMonomial {
        let mut exponents = self.exponents.clone();
        add_exponents(&mut exponents, &rhs.exponents, 1);
        LaurentMonomial {
            coefficient: &self.coefficient * &rhs.coefficient,
            exponents,
        }
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        for (v, e) in &self.exponents {
            if *e == 1 {
                write!(f, "*x{v}")?;
            } else {
                write!(f, "*x{v}^{e}")?;
            }
        }
        Ok(())
    }
}

pub fn eval_monomial(m: &LaurentMonomial, assignment: &BTreeMap<usize, Rational>) -> Result<Rational> {
    let mut acc = m.coefficient.clone();
    for (&v, &e) in &m.exponents {
        let x = assignment.get(&v).ok_or(Error::Unassigned(v))?;
        if e < 0 && x.is_zero() {
            return Err(Error::ZeroToNegativePower(v));
        }
        acc *= if e >= 0 {
            num_traits::pow(x.clone(), e as usize)
        } else {
            num_traits::pow(x.recip(), (-e) as usize)
        };
    }
    Ok(acc)
}

/// Valuation-free tropicalization: `Σ e_j x_j`. The coefficient plays no role.
pub fn trop_eval_monomial(m: &LaurentMonomial, assignment: &BTreeMap<usize, TropValue>) -> Result<TropValue> {
    let mut acc = Rational::zero();
    let mut infinite = false;
    for (&v, &e) in &m.exponents {
        match assignment.get(&v).ok_or(Error::Unassigned(v))? {
            TropValue::Finite(x) => acc += x * int(e),
            TropValue::Infinite if e < 0 => return Err(Error::InfinityToNegativePower(v)),
            TropValue::Infinite => infinite = true,
        }
    }
    Ok(if infinite {
        TropValue::Infinite
    } else {
        TropValue::Finite(acc)
    })
}

/// Laurent polynomial as a map from exponent vectors to nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Exponents, Rational>,
}

impl Polynomial {
    pub fn constant(c: Rational) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(Exponents::new(), c);
        p
    }

    pub fn var(v: usize) -> Self {
        Polynomial::from(LaurentMonomial::var(v))
    }

    pub fn add_term(&mut self, exps: Exponents, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = LaurentMonomial> + '_ {
        self.terms
            .iter()
            .map(|(e, c)| LaurentMonomial::new(c.clone(), e.clone()))
    }

    pub fn scale(&self, m: &LaurentMonomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for t in self.terms() {
            let p = &t * m;
            out.add_term(p.exponents, p.coefficient);
        }
        out
    }

    pub fn eval(&self, assignment: &BTreeMap<usize, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for t in self.terms() {
            acc += eval_monomial(&t, assignment)?;
        }
        Ok(acc)
    }

    /// Min over the tropicalized terms (`∞` for the zero polynomial).
    pub fn trop_eval(&self, assignment: &BTreeMap<usize, TropValue>) -> Result<TropValue> {
        let mut best = TropValue::Infinite;
        for t in self.terms() {
            best = best.min(trop_eval_monomial(&t, assignment)?);
        }
        Ok(best)
    }

    /// Solution test for the tropical hypersurface. The minimum over finite terms
    /// must be attained at least twice; with `positive`, by terms of both signs.
    /// A point where every term is `∞` counts as a solution.
    pub fn trop_solves(&self, assignment: &BTreeMap<usize, TropValue>, positive: bool) -> Result<bool> {
        let mut signed = Vec::with_capacity(self.len());
        for t in self.terms() {
            signed.push((t.coefficient.is_positive(), trop_eval_monomial(&t, assignment)?));
        }
        Ok(min_attained_twice(&signed, positive))
    }
}

/// Shared minimum test over `(is_positive, value)` pairs.
pub fn min_attained_twice(terms: &[(bool, TropValue)], positive: bool) -> bool {
    let Some(min) = terms.iter().map(|(_, v)| v).min() else {
        return true;
    };
    if !min.is_finite() {
        return true;
    }
    let at_min: Vec<bool> = terms.iter().filter(|(_, v)| v == min).map(|(s, _)| *s).collect();
    if at_min.len() < 2 {
        return false;
    }
    !positive || (at_min.iter().any(|&s| s) && at_min.iter().any(|&s| !s))
}

impl From<LaurentMonomial> for Polynomial {
    fn from(m: LaurentMonomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m.exponents, m.coefficient);
        p
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for a in self.terms() {
            for b in rhs.terms() {
                let m = &a * &b;
                out.add_term(m.exponents, m.coefficient);
            }
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Zero for Polynomial {
    fn zero() -> Self {
        Polynomial::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Polynomial {
    fn one() -> Self {
        Polynomial::constant(Rational::one())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms().map(|t| t.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Dense row-major matrix over `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// 0-indexed access.
    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// 0-indexed row and column selections.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c]).clone())
    }
}

impl Matrix<Rational> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |r, c| if r == c { Rational::one() } else { Rational::zero() })
    }

    pub fn ints(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn determinant(&self) -> Rational {
        determinant(self)
    }
}

impl<T> Mul for &Matrix<T>
where
    T: Clone + Zero + Add<Output = T> + Mul<Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for t in 0..self.cols {
                let a = self.get(r, t);
                if !a.is_zero() {
                    acc = acc + a.clone() * rhs.get(t, c).clone();
                }
            }
            acc
        })
    }
}

/// Fraction-free (Bareiss) elimination. The empty matrix has determinant 1.
pub fn determinant(m: &Matrix<Rational>) -> Rational {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    if n == 0 {
        return Rational::one();
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = Rational::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return Rational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
