//! Plücker vectors, the parameterization of a cell, and incidence Plücker relations.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Map, Value};

use crate::algebra::{determinant, int, min_attained_twice, parse_rational, Matrix, Polynomial, Rational, TropValue};
use crate::error::{Error, Result};
use crate::perms::Permutation;
use crate::subset::{proper_subsets, subsets_of_size, Subset};
use crate::wiring::{collection_weight, enumerate_path_collections, CellWord, SignedMonomial, WiringDiagram};

/// Scalars a Plücker vector can carry: rationals (absent = 0) or tropical
/// values (absent = ∞).
pub trait Coordinate: Clone + PartialEq + fmt::Debug + fmt::Display {
    const MODE: &'static str;

    fn absent() -> Self;
    fn is_absent(&self) -> bool;
    /// Removes the projective scalar fixed by `pivot`.
    fn rescale(&self, pivot: &Self) -> Self;
    fn parse(s: &str) -> Result<Self>;
}

impl Coordinate for Rational {
    const MODE: &'static str = "classical";

    fn absent() -> Self {
        Rational::zero()
    }

    fn is_absent(&self) -> bool {
        self.is_zero()
    }

    fn rescale(&self, pivot: &Self) -> Self {
        self / pivot
    }

    fn parse(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

impl Coordinate for TropValue {
    const MODE: &'static str = "tropical";

    fn absent() -> Self {
        TropValue::Infinite
    }

    fn is_absent(&self) -> bool {
        !self.is_finite()
    }

    fn rescale(&self, pivot: &Self) -> Self {
        self.shift(pivot.finite().expect("finite pivot"))
    }

    fn parse(s: &str) -> Result<Self> {
        s.parse()
    }
}

/// Coordinates indexed by the nonempty proper subsets of `[n]`.
#[derive(Clone, PartialEq, Eq)]
pub struct Coords<T> {
    n: usize,
    values: Vec<T>,
}

pub type PlueckerVector = Coords<Rational>;
pub type TropPlueckerVector = Coords<TropValue>;

impl<T: Coordinate> Coords<T> {
    /// Every coordinate absent.
    pub fn empty(n: usize) -> Self {
        assert!((1..=crate::subset::MAX_N).contains(&n) && n <= 20, "n out of range");
        Coords {
            n,
            values: vec![T::absent(); 1 << n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, s: Subset) -> &T {
        &self.values[s.mask() as usize]
    }

    pub fn set(&mut self, s: Subset, v: T) {
        assert!(
            !s.is_empty() && s.len() < self.n,
            "{s:?} is not a proper nonempty subset"
        );
        self.values[s.mask() as usize] = v;
    }

    pub fn is_supported(&self, s: Subset) -> bool {
        !self.get(s).is_absent()
    }

    /// All indices in size-then-lexicographic order.
    pub fn indices(&self) -> Vec<Subset> {
        proper_subsets(self.n)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &T)> + '_ {
        self.indices().into_iter().map(move |s| (s, self.get(s)))
    }

    /// Supported indices of size `k`, lexicographic.
    pub fn support_of_size(&self, k: usize) -> Vec<Subset> {
        subsets_of_size(self.n, k)
            .into_iter()
            .filter(|&s| self.is_supported(s))
            .collect()
    }

    /// Supported indices grouped by size `1..n`.
    pub fn support(&self) -> Vec<Vec<Subset>> {
        (1..self.n).map(|k| self.support_of_size(k)).collect()
    }

    /// Fails when some size has no supported index.
    pub fn check_blocks(&self) -> Result<()> {
        for k in 1..self.n {
            if self.support_of_size(k).is_empty() {
                return Err(Error::Malformed(format!("every coordinate of size {k} is absent")));
            }
        }
        Ok(())
    }

    /// Scales each size block so its lexicographically first supported coordinate
    /// becomes the unit. Blocks without support are left alone.
    pub fn canonicalize(&self) -> Self {
        let mut out = self.clone();
        for k in 1..self.n {
            let block = subsets_of_size(self.n, k);
            if let Some(&pivot) = block.iter().find(|&&s| self.is_supported(s)) {
                let pv = self.get(pivot).clone();
                for s in block {
                    if self.is_supported(s) {
                        out.values[s.mask() as usize] = self.get(s).rescale(&pv);
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let coords: Map<String, Value> = self
            .iter()
            .map(|(s, v)| (s.to_string(), Value::String(v.to_string())))
            .collect();
        json!({ "n": self.n, "mode": T::MODE, "coords": coords })
    }

    /// Reads the `coords` object of a vector document; missing keys are absent.
    fn from_coords_json(n: usize, coords: &Map<String, Value>) -> Result<Self> {
        let mut out = Coords::empty(n);
        for (key, val) in coords {
            let s: Subset = key.parse()?;
            if s.is_empty() || s.len() >= n || s.max().unwrap() > n {
                return Err(Error::Malformed(format!(
                    "index {key:?} is not a proper subset of [{n}]"
                )));
            }
            let text = match val {
                Value::String(t) => t.clone(),
                Value::Number(x) if x.is_i64() => x.to_string(),
                _ => {
                    return Err(Error::Malformed(format!(
                        "coordinate {key:?} must be a string or integer"
                    )))
                }
            };
            out.set(s, T::parse(&text)?);
        }
        Ok(out)
    }
}

impl<T: Coordinate> fmt::Debug for Coords<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.iter().map(|(s, v)| (s, v.to_string())))
            .finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyVector {
    Classical(PlueckerVector),
    Tropical(TropPlueckerVector),
}

/// Parses `{"n": .., "mode": "classical"|"tropical", "coords": {"1,3": "2/1", ..}}`
/// and canonicalizes it. A size block with no supported coordinate is malformed.
pub fn parse_vector(doc: &Value) -> Result<AnyVector> {
    let n = doc
        .get("n")
        .and_then(Value::as_u64)
        .ok_or_else(|| Error::Malformed("missing integer field \"n\"".into()))? as usize;
    if !(2..=20).contains(&n) {
        return Err(Error::Malformed(format!("n = {n} out of range")));
    }
    let mode = doc.get("mode").and_then(Value::as_str).unwrap_or("classical");
    let empty = Map::new();
    let coords = match doc.get("coords") {
        None => &empty,
        Some(Value::Object(m)) => m,
        Some(_) => return Err(Error::Malformed("\"coords\" must be an object".into())),
    };
    match mode {
        "classical" => {
            let p = PlueckerVector::from_coords_json(n, coords)?;
            p.check_blocks()?;
            Ok(AnyVector::Classical(p.canonicalize()))
        }
        "tropical" => {
            let p = TropPlueckerVector::from_coords_json(n, coords)?;
            p.check_blocks()?;
            Ok(AnyVector::Tropical(p.canonicalize()))
        }
        other => Err(Error::Malformed(format!("unknown mode {other:?}"))),
    }
}

pub(crate) fn check_weights<T>(ids: &[usize], a: &BTreeMap<usize, T>) -> Result<()> {
    if a.len() != ids.len() {
        return Err(Error::WeightCount {
            expected: ids.len(),
            got: a.len(),
        });
    }
    for id in ids {
        if !a.contains_key(id) {
            return Err(Error::Unassigned(*id));
        }
    }
    Ok(())
}

fn check_positive(ids: &[usize], a: &BTreeMap<usize, Rational>) -> Result<()> {
    check_weights(ids, a)?;
    for (&j, x) in a {
        if !x.is_positive() {
            return Err(Error::NonPositiveWeight(j));
        }
    }
    Ok(())
}

fn x_factor(n: usize, i: usize, a: Rational) -> Matrix {
    let mut m = Matrix::identity(n);
    m.set(i - 1, i, a);
    m
}

fn s_dot(n: usize, i: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    m.set(i - 1, i - 1, Rational::zero());
    m.set(i, i, Rational::zero());
    m.set(i - 1, i, Rational::one());
    m.set(i, i - 1, int(-1));
    m
}

fn mr_product(cell: &CellWord, a: &BTreeMap<usize, Rational>) -> Matrix {
    let n = cell.n();
    let mut m = Matrix::identity(n);
    for (j, &i) in cell.word.letters.iter().enumerate() {
        let factor = if cell.swaps[j] {
            s_dot(n, i)
        } else {
            x_factor(n, i, a[&(j + 1)].clone())
        };
        m = &m * &factor;
    }
    m
}

/// `M_1 ⋯ M_k` with `M_j = ṡ_{i_j}` on the subexpression for `v` and
/// `M_j = x_{i_j}(a_j)` elsewhere. Weights are keyed by position `j`.
pub fn mr_matrix(v: &Permutation, w: &Permutation, a: &BTreeMap<usize, Rational>) -> Result<Matrix> {
    let cell = CellWord::new(v, w)?;
    check_positive(&cell.weight_ids(), a)?;
    Ok(mr_product(&cell, a))
}

/// Minors of the top `|I|` rows in columns `I`, for every nonempty proper `I`.
pub fn plucker_coordinates(m: &Matrix) -> PlueckerVector {
    let n = m.rows();
    let mut p = PlueckerVector::empty(n);
    for s in proper_subsets(n) {
        let rows: Vec<usize> = (0..s.len()).collect();
        let cols: Vec<usize> = s.elems().map(|c| c - 1).collect();
        p.set(s, determinant(&m.submatrix(&rows, &cols)));
    }
    p
}

pub fn phi(v: &Permutation, w: &Permutation, a: &BTreeMap<usize, Rational>) -> Result<PlueckerVector> {
    Ok(plucker_coordinates(&mr_matrix(v, w, a)?).canonicalize())
}

pub fn trop_phi(v: &Permutation, w: &Permutation, x: &BTreeMap<usize, TropValue>) -> Result<TropPlueckerVector> {
    Cell::new(v, w)?.trop_phi(x)
}

/// A cell `(v, w)` with its graph and, per index, the weights of all path
/// collections from `[|I|]'` to `I`.
#[derive(Clone, Debug)]
pub struct Cell {
    diagram: WiringDiagram,
    collections: Vec<Vec<SignedMonomial>>,
}

impl Cell {
    pub fn new(v: &Permutation, w: &Permutation) -> Result<Self> {
        Ok(Cell::from_diagram(crate::wiring::build_diagram(v, w)?))
    }

    pub fn from_diagram(diagram: WiringDiagram) -> Self {
        let n = diagram.n();
        let mut collections = vec![Vec::new(); 1 << n];
        for s in proper_subsets(n) {
            collections[s.mask() as usize] = enumerate_path_collections(&diagram, Subset::initial(s.len()), s)
                .iter()
                .map(|c| collection_weight(c, &diagram))
                .collect();
        }
        Cell { diagram, collections }
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn v(&self) -> &Permutation {
        self.diagram.v()
    }

    pub fn w(&self) -> &Permutation {
        self.diagram.w()
    }

    pub fn diagram(&self) -> &WiringDiagram {
        &self.diagram
    }

    pub fn weight_ids(&self) -> Vec<usize> {
        self.diagram.weight_ids()
    }

    pub fn dimension(&self) -> usize {
        self.diagram.vertical_edges().len()
    }

    /// Weights of the path collections `[|I|]' -> I`.
    pub fn monomials(&self, s: Subset) -> &[SignedMonomial] {
        &self.collections[s.mask() as usize]
    }

    pub fn is_supported(&self, s: Subset) -> bool {
        !self.monomials(s).is_empty()
    }

    /// Supported indices grouped by size `1..n`.
    pub fn support(&self) -> Vec<Vec<Subset>> {
        (1..self.n())
            .map(|k| {
                subsets_of_size(self.n(), k)
                    .into_iter()
                    .filter(|&s| self.is_supported(s))
                    .collect()
            })
            .collect()
    }

    pub fn mr_matrix(&self, a: &BTreeMap<usize, Rational>) -> Result<Matrix> {
        check_positive(&self.weight_ids(), a)?;
        Ok(mr_product(self.diagram.cell(), a))
    }

    pub fn phi(&self, a: &BTreeMap<usize, Rational>) -> Result<PlueckerVector> {
        Ok(plucker_coordinates(&self.mr_matrix(a)?).canonicalize())
    }

    /// Signed sums of collection weights, without normalization.
    pub fn phi_by_paths(&self, a: &BTreeMap<usize, Rational>) -> Result<PlueckerVector> {
        check_positive(&self.weight_ids(), a)?;
        let mut p = PlueckerVector::empty(self.n());
        for s in proper_subsets(self.n()) {
            let mut acc = Rational::zero();
            for m in self.monomials(s) {
                acc += crate::algebra::eval_monomial(&m.to_laurent(), a)?;
            }
            p.set(s, acc);
        }
        Ok(p)
    }

    /// `min` over collections of the summed edge weights, `∞` without collections.
    pub fn trop_phi(&self, x: &BTreeMap<usize, TropValue>) -> Result<TropPlueckerVector> {
        check_weights(&self.weight_ids(), x)?;
        if let Some((&j, _)) = x.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::InfiniteWeight(j));
        }
        let mut p = TropPlueckerVector::empty(self.n());
        for s in proper_subsets(self.n()) {
            let mut best = TropValue::Infinite;
            for m in self.monomials(s) {
                best = best.min(crate::algebra::trop_eval_monomial(&m.to_laurent(), x)?);
            }
            p.set(s, best);
        }
        Ok(p.canonicalize())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelationTerm {
    pub coefficient: i64,
    pub left: Subset,
    pub right: Subset,
}

/// `Σ_{j ∈ J∖I} sign(j, I, J) P_{I∪j} P_{J∖j}` with like terms combined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceRelation {
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub i: Subset,
    pub j: Subset,
    pub terms: Vec<RelationTerm>,
}

/// `(-1)^{|{k ∈ J : k < j}| + |{i ∈ I : j < i}|}`.
pub fn relation_sign(j: usize, i: Subset, big_j: Subset) -> i64 {
    if (big_j.count_below(j) + i.count_above(j)).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl IncidenceRelation {
    pub fn new(n: usize, i: Subset, j: Subset) -> Self {
        let mut combined: BTreeMap<(Subset, Subset), i64> = BTreeMap::new();
        for x in j.difference(i).elems() {
            let a = i.with(x);
            let b = j.without(x);
            let key = if (a.len(), a) <= (b.len(), b) { (a, b) } else { (b, a) };
            *combined.entry(key).or_insert(0) += relation_sign(x, i, j);
        }
        let terms = combined
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|((left, right), coefficient)| RelationTerm {
                coefficient,
                left,
                right,
            })
            .collect();
        IncidenceRelation {
            n,
            r: i.len() + 1,
            s: j.len() - 1,
            i,
            j,
            terms,
        }
    }

    pub fn is_three_term(&self) -> bool {
        self.terms.len() == 3
    }

    fn key(&self) -> Vec<RelationTerm> {
        let flip = self.terms.first().is_some_and(|t| t.coefficient < 0);
        self.terms
            .iter()
            .map(|t| RelationTerm {
                coefficient: if flip { -t.coefficient } else { t.coefficient },
                ..t.clone()
            })
            .collect()
    }

    /// The relation as a polynomial whose variable `mask(S)` stands for `P_S`.
    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::zero();
        for t in &self.terms {
            let mut e = BTreeMap::new();
            *e.entry(pvar(t.left)).or_insert(0) += 1;
            *e.entry(pvar(t.right)).or_insert(0) += 1;
            p.add_term(e, int(t.coefficient));
        }
        p
    }

    pub fn mentions(&self, s: Subset) -> bool {
        self.terms.iter().any(|t| t.left == s || t.right == s)
    }
}

/// Variable id standing for `P_S` in polynomials and Laurent monomials.
pub fn pvar(s: Subset) -> usize {
    s.mask() as usize
}

pub fn subset_of_pvar(v: usize) -> Subset {
    Subset::from_mask(v as u32)
}

fn fmt_index(s: Subset, n: usize) -> String {
    if n <= 9 {
        s.elems().map(|e| e.to_string()).collect()
    } else {
        format!("{{{s}}}")
    }
}

impl fmt::Display for IncidenceRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, t) in self.terms.iter().enumerate() {
            let c = t.coefficient;
            match (idx, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            write!(f, "P{}P{}", fmt_index(t.left, self.n), fmt_index(t.right, self.n))?;
        }
        Ok(())
    }
}

/// All relations for `1 <= r <= s <= n-1`, in order of `(r, s, I, J)`. Relations
/// that vanish identically and repeats up to sign are dropped.
pub fn generate_relations(n: usize, three_term_only: bool) -> Vec<IncidenceRelation> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for r in 1..n {
        for s in r..n {
            for i in subsets_of_size(n, r - 1) {
                for j in subsets_of_size(n, s + 1) {
                    let rel = IncidenceRelation::new(n, i, j);
                    if rel.terms.is_empty() || (three_term_only && !rel.is_three_term()) {
                        continue;
                    }
                    if seen.insert(rel.key()) {
                        out.push(rel);
                    }
                }
            }
        }
    }
    out
}

pub fn check_relation(rel: &IncidenceRelation, p: &PlueckerVector) -> Rational {
    let mut acc = Rational::zero();
    for t in &rel.terms {
        acc += int(t.coefficient) * p.get(t.left) * p.get(t.right);
    }
    acc
}

pub fn trop_check_relation(rel: &IncidenceRelation, p: &TropPlueckerVector, positive: bool) -> bool {
    let terms: Vec<(bool, TropValue)> = rel
        .terms
        .iter()
        .map(|t| (t.coefficient > 0, p.get(t.left).tmul(p.get(t.right))))
        .collect();
    min_attained_twice(&terms, positive)
}

pub fn relation_to_json(rel: &IncidenceRelation) -> Value {
    let terms: Vec<Value> = rel
        .terms
        .iter()
        .map(|t| json!({ "coefficient": t.coefficient, "left": t.left.to_string(), "right": t.right.to_string() }))
        .collect();
    json!({
        "r": rel.r,
        "s": rel.s,
        "I": rel.i.to_string(),
        "J": rel.j.to_string(),
        "terms": terms,
        "text": rel.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    fn weights(pairs: &[(usize, i64)]) -> BTreeMap<usize, Rational> {
        pairs.iter().map(|&(j, x)| (j, int(x))).collect()
    }

    fn tw(pairs: &[(usize, i64)]) -> BTreeMap<usize, TropValue> {
        pairs.iter().map(|&(j, x)| (j, TropValue::int(x))).collect()
    }

    #[test]
    fn small_cell_matrix_and_coordinates() {
        let a = weights(&[(1, 2), (2, 3), (4, 5)]);
        let m = mr_matrix(&p("1324"), &p("4213"), &a).unwrap();
        assert_eq!(
            m,
            Matrix::ints(&[&[1, 5, 2, 0], &[0, 0, 1, 0], &[0, -1, 0, 3], &[0, 0, 0, 1]])
        );
        let v = phi(&p("1324"), &p("4213"), &a).unwrap();
        let expect = [
            (vec![1], 1),
            (vec![2], 5),
            (vec![3], 2),
            (vec![4], 0),
            (vec![1, 2], 0),
            (vec![1, 3], 1),
            (vec![1, 4], 0),
            (vec![2, 3], 5),
            (vec![2, 4], 0),
            (vec![3, 4], 0),
            (vec![1, 2, 3], 1),
            (vec![1, 2, 4], 0),
            (vec![1, 3, 4], 3),
            (vec![2, 3, 4], 15),
        ];
        for (s, x) in expect {
            assert_eq!(v.get(set(&s)), &int(x), "P{s:?}");
        }
    }

    #[test]
    fn weight_validation() {
        let (v, w) = (p("1324"), p("4213"));
        assert!(matches!(
            mr_matrix(&v, &w, &weights(&[(1, 1), (2, 1)])),
            Err(Error::WeightCount { .. })
        ));
        assert!(matches!(
            mr_matrix(&v, &w, &weights(&[(1, 1), (2, 0), (4, 1)])),
            Err(Error::NonPositiveWeight(2))
        ));
        assert!(matches!(
            mr_matrix(&v, &w, &weights(&[(1, 1), (2, 1), (3, 1)])),
            Err(Error::Unassigned(4))
        ));
        let id = Permutation::identity(3);
        let pv = phi(&id, &id, &BTreeMap::new()).unwrap();
        for s in proper_subsets(3) {
            let want = if s == Subset::initial(s.len()) { 1 } else { 0 };
            assert_eq!(pv.get(s), &int(want));
        }
    }

    #[test]
    fn top_cell_n3() {
        let (id, w0) = (Permutation::identity(3), Permutation::longest(3));
        let v = phi(&id, &w0, &weights(&[(1, 1), (2, 1), (3, 1)])).unwrap();
        assert_eq!(v.get(set(&[2])), &int(2));
        let t = trop_phi(&id, &w0, &tw(&[(1, 4), (2, 1), (3, 2)])).unwrap();
        assert_eq!(t.get(set(&[2])), &TropValue::int(2));
        assert_eq!(t.get(set(&[1, 3])), &TropValue::int(1));
        assert_eq!(t.get(set(&[2, 3])), &TropValue::int(3));
        assert_eq!(t.get(set(&[3])), &TropValue::int(5));
    }

    #[test]
    fn small_cell_tropical_zero_weights() {
        let t = trop_phi(&p("1324"), &p("4213"), &tw(&[(1, 0), (2, 0), (4, 0)])).unwrap();
        let cell = Cell::new(&p("1324"), &p("4213")).unwrap();
        for s in proper_subsets(4) {
            let want = if cell.is_supported(s) {
                TropValue::zero()
            } else {
                TropValue::Infinite
            };
            assert_eq!(t.get(s), &want, "{s:?}");
        }
        let mut bad = tw(&[(1, 0), (2, 0)]);
        assert!(trop_phi(&p("1324"), &p("4213"), &bad).is_err());
        bad.insert(4, TropValue::Infinite);
        assert!(matches!(
            trop_phi(&p("1324"), &p("4213"), &bad),
            Err(Error::InfiniteWeight(4))
        ));
    }

    #[test]
    fn relations_small_n() {
        assert!(generate_relations(2, false).is_empty());
        let rels = generate_relations(3, false);
        assert_eq!(rels.len(), 1);
        assert_eq!(rels[0].to_string(), "P1P23 - P2P13 + P3P12");
        assert_eq!(generate_relations(3, true), rels);
        for rel in generate_relations(4, false) {
            for t in &rel.terms {
                assert!(t.left.len() < 4 && t.right.len() < 4);
            }
        }
    }

    #[test]
    fn relation_values() {
        let rel = &generate_relations(3, false)[0];
        let mut v = PlueckerVector::empty(3);
        for (s, x) in [
            (vec![1], 1),
            (vec![2], 2),
            (vec![3], 1),
            (vec![1, 2], 1),
            (vec![1, 3], 1),
            (vec![2, 3], 1),
        ] {
            v.set(set(&s), int(x));
        }
        assert_eq!(check_relation(rel, &v), int(0));
        v.set(set(&[1, 2]), int(-1));
        assert_ne!(check_relation(rel, &v), int(0));
    }

    #[test]
    fn grassmann_three_term_shape() {
        // P13 P24 = P12 P34 + P14 P23 in Gr(2, 4).
        let rels = generate_relations(4, true);
        let target: Vec<(Subset, Subset)> = vec![
            (set(&[1, 2]), set(&[3, 4])),
            (set(&[1, 3]), set(&[2, 4])),
            (set(&[1, 4]), set(&[2, 3])),
        ];
        let found = rels
            .iter()
            .any(|r| r.r == 2 && r.s == 2 && r.terms.iter().map(|t| (t.left, t.right)).collect::<Vec<_>>() == target);
        assert!(found);
    }

    #[test]
    fn tropical_relation_checks() {
        let rel = &generate_relations(3, false)[0];
        let t = trop_phi(
            &Permutation::identity(3),
            &Permutation::longest(3),
            &tw(&[(1, 4), (2, 1), (3, 2)]),
        )
        .unwrap();
        assert!(trop_check_relation(rel, &t, true));
        let mut shifted = t.clone();
        for s in subsets_of_size(3, 2) {
            shifted.set(s, t.get(s).shift(&int(-7)));
        }
        assert!(trop_check_relation(rel, &shifted, true));
        let mut generic = TropPlueckerVector::empty(3);
        for (s, x) in [
            (vec![1], 0),
            (vec![2], 1),
            (vec![3], 5),
            (vec![1, 2], 0),
            (vec![1, 3], 3),
            (vec![2, 3], 7),
        ] {
            generic.set(set(&s), TropValue::int(x));
        }
        assert!(!trop_check_relation(rel, &generic, false));
    }

    #[test]
    fn canonical_form_and_json() {
        let mut v = PlueckerVector::empty(3);
        v.set(set(&[2]), int(4));
        v.set(set(&[3]), int(6));
        v.set(set(&[1, 2]), rat(1, 2));
        let c = v.canonicalize();
        assert_eq!(c.get(set(&[2])), &int(1));
        assert_eq!(c.get(set(&[3])), &rat(3, 2));
        assert_eq!(c.get(set(&[1, 2])), &int(1));
        let doc = c.to_json();
        assert_eq!(parse_vector(&doc).unwrap(), AnyVector::Classical(c));
        let bad = json!({"n": 3, "coords": {"1": "1"}});
        assert!(parse_vector(&bad).is_err());
        let full = json!({"n": 3, "coords": {"1": "1", "1,2": "1", "1,2,3": "1"}});
        assert!(parse_vector(&full).is_err());
        let trop = json!({"n": 3, "mode": "tropical", "coords": {"2": "5", "3": "7", "1,3": "1"}});
        let AnyVector::Tropical(t) = parse_vector(&trop).unwrap() else {
            panic!()
        };
        assert_eq!(t.get(set(&[2])), &TropValue::zero());
        assert_eq!(t.get(set(&[3])), &TropValue::int(2));
        assert_eq!(t.get(set(&[1])), &TropValue::Infinite);
    }
}
