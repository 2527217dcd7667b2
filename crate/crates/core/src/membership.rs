//! Inverting the parameterization, identifying the cell of a Plücker vector, and
//! deciding membership in the nonnegative flag variety and nonnegative flag Dressian.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::{eval_monomial, int, trop_eval_monomial, LaurentMonomial, Rational, TropValue};
use crate::error::{Error, Result};
use crate::extremal::{cell_extremal_indices, e, extremal_collection, s_vw_of, ExtremalChain};
use crate::oracle::flag_matroid_check;
use crate::perms::{bruhat_leq, Permutation};
use crate::plucker::{
    check_relation, generate_relations, pvar, trop_check_relation, Cell, Coordinate, Coords, IncidenceRelation,
    PlueckerVector, TropPlueckerVector,
};
use crate::subset::{subsets_of_size, Subset};
use crate::wiring::collection_weight;

/// Reads `v^{-1}` off the lexicographically first supported index of each size
/// and `w^{-1}` off the last. `support[k-1]` holds the indices of size `k`.
pub fn identify_cell(support: &[Vec<Subset>]) -> Result<(Permutation, Permutation)> {
    let n = support.len() + 1;
    let pick = |first: bool| -> Result<Permutation> {
        let mut prev = Subset::EMPTY;
        let mut images = Vec::with_capacity(n);
        for (k, block) in support.iter().enumerate() {
            let mut sorted = block.clone();
            sorted.sort();
            let cur = if first { sorted.first() } else { sorted.last() }
                .copied()
                .ok_or_else(|| Error::NoCell(format!("no supported index of size {}", k + 1)))?;
            if cur.len() != k + 1 || !prev.is_subset_of(cur) {
                return Err(Error::NoCell(format!("{prev:?} is not contained in {cur:?}")));
            }
            images.push(cur.difference(prev).min().unwrap());
            prev = cur;
        }
        images.push(Subset::initial(n).difference(prev).min().unwrap());
        Permutation::new(images)
    };
    let v = pick(true)?.inverse();
    let w = pick(false)?.inverse();
    if !bruhat_leq(&v, &w)? {
        return Err(Error::NoCell(format!("{v} is not below {w}")));
    }
    Ok((v, w))
}

/// Each weight of the cell as a Laurent monomial in the Plücker variables
/// `pvar(S)`, solved along `S_{v,w}` in ≺ order.
pub fn psi_monomials(cell: &Cell) -> Result<BTreeMap<usize, LaurentMonomial>> {
    let minimal: BTreeSet<Subset> = cell_extremal_indices(cell).iter().map(|c| c.chain[0]).collect();
    let mut solved: BTreeMap<usize, LaurentMonomial> = BTreeMap::new();
    for i in s_vw_of(cell)? {
        let c = extremal_collection(cell, i)?;
        let m = collection_weight(&c, cell.diagram());
        if m.sign != 1 {
            return Err(Error::Internal(format!("extremal collection {i:?} has negative sign")));
        }
        let fresh: Vec<usize> = m
            .exponents
            .keys()
            .copied()
            .filter(|j| !solved.contains_key(j))
            .collect();
        if minimal.contains(&i) {
            if !m.exponents.is_empty() {
                return Err(Error::Internal(format!("Gale-minimal {i:?} carries weights")));
            }
            continue;
        }
        let [a] = fresh[..] else {
            return Err(Error::Internal(format!("{i:?} introduces {} new weights", fresh.len())));
        };
        if m.exponents[&a] != 1 {
            return Err(Error::Internal(format!("weight a{a} appears squared at {i:?}")));
        }
        let mut expr = LaurentMonomial::var(pvar(i));
        for (&j, &k) in &m.exponents {
            if j != a {
                expr = &expr * &solved[&j].pow(-(k as i64));
            }
        }
        solved.insert(a, expr);
    }
    if solved.len() != cell.dimension() {
        return Err(Error::Internal("not every weight was solved".into()));
    }
    Ok(solved)
}

fn assignment<T: Coordinate>(p: &Coords<T>) -> BTreeMap<usize, T> {
    p.indices().into_iter().map(|s| (pvar(s), p.get(s).clone())).collect()
}

pub fn psi_in(cell: &Cell, p: &PlueckerVector) -> Result<BTreeMap<usize, Rational>> {
    let p = p.canonicalize();
    for s in s_vw_of(cell)? {
        if !p.get(s).is_positive() {
            return Err(Error::NonPositiveCoordinate(s));
        }
    }
    let vals = assignment(&p);
    psi_monomials(cell)?
        .iter()
        .map(|(&j, m)| Ok((j, eval_monomial(m, &vals)?)))
        .collect()
}

pub fn psi(v: &Permutation, w: &Permutation, p: &PlueckerVector) -> Result<BTreeMap<usize, Rational>> {
    psi_in(&Cell::new(v, w)?, p)
}

pub fn trop_psi_in(cell: &Cell, p: &TropPlueckerVector) -> Result<BTreeMap<usize, TropValue>> {
    let p = p.canonicalize();
    for s in s_vw_of(cell)? {
        if !p.get(s).is_finite() {
            return Err(Error::InfiniteCoordinate(s));
        }
    }
    let vals = assignment(&p);
    psi_monomials(cell)?
        .iter()
        .map(|(&j, m)| Ok((j, trop_eval_monomial(m, &vals)?)))
        .collect()
}

pub fn trop_psi(v: &Permutation, w: &Permutation, p: &TropPlueckerVector) -> Result<BTreeMap<usize, TropValue>> {
    trop_psi_in(&Cell::new(v, w)?, p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Member,
    NonMember,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    NegativeCoordinate {
        index: String,
        value: String,
    },
    NotFlagMatroid,
    NoCell {
        reason: String,
    },
    ViolatedRelation {
        relation: String,
        value: String,
    },
    ViolatedTropicalRelation {
        relation: String,
        positive: bool,
    },
    MissingCoordinate {
        index: String,
    },
    CoordinateMismatch {
        index: String,
        expected: String,
        found: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellCertificate<T> {
    pub verdict: Verdict,
    pub cell: Option<(Permutation, Permutation)>,
    pub weights: BTreeMap<usize, T>,
    pub witness: Option<Witness>,
}

impl<T: Coordinate> CellCertificate<T> {
    fn member(v: Permutation, w: Permutation, weights: BTreeMap<usize, T>) -> Self {
        CellCertificate {
            verdict: Verdict::Member,
            cell: Some((v, w)),
            weights,
            witness: None,
        }
    }

    fn reject(witness: Witness) -> Self {
        CellCertificate {
            verdict: Verdict::NonMember,
            cell: None,
            weights: BTreeMap::new(),
            witness: Some(witness),
        }
    }

    pub fn is_member(&self) -> bool {
        self.verdict == Verdict::Member
    }

    pub fn to_json(&self) -> Value {
        let weights: serde_json::Map<String, Value> = self
            .weights
            .iter()
            .map(|(j, x)| (j.to_string(), Value::String(x.to_string())))
            .collect();
        json!({
            "verdict": self.verdict,
            "v": self.cell.as_ref().map(|c| c.0.to_string()),
            "w": self.cell.as_ref().map(|c| c.1.to_string()),
            "weights": weights,
            "witness": self.witness,
        })
    }
}

fn first_negative(p: &PlueckerVector) -> Option<(Subset, Rational)> {
    p.iter().find(|(_, x)| x.is_negative()).map(|(s, x)| (s, x.clone()))
}

fn first_violated(p: &PlueckerVector, rels: &[IncidenceRelation]) -> Option<Witness> {
    rels.iter().find_map(|rel| {
        let val = check_relation(rel, p);
        (!val.is_zero()).then(|| Witness::ViolatedRelation {
            relation: rel.to_string(),
            value: val.to_string(),
        })
    })
}

fn first_trop_violated(p: &TropPlueckerVector, rels: &[IncidenceRelation]) -> Option<Witness> {
    rels.iter().find_map(|rel| {
        (!trop_check_relation(rel, p, true)).then(|| Witness::ViolatedTropicalRelation {
            relation: rel.to_string(),
            positive: trop_check_relation(rel, p, false),
        })
    })
}

fn first_difference<T: Coordinate>(expected: &Coords<T>, found: &Coords<T>) -> Option<Witness> {
    expected
        .iter()
        .find(|(s, x)| found.get(*s) != *x)
        .map(|(s, x)| Witness::CoordinateMismatch {
            index: s.to_string(),
            expected: x.to_string(),
            found: found.get(s).to_string(),
        })
}

/// Shared front half of both decisions: flag matroid support and a cell.
fn locate<T: Coordinate>(p: &Coords<T>) -> std::result::Result<Cell, Witness> {
    let support = p.support();
    if !flag_matroid_check(&support) {
        return Err(Witness::NotFlagMatroid);
    }
    let (v, w) = identify_cell(&support).map_err(|e| Witness::NoCell { reason: e.to_string() })?;
    Cell::new(&v, &w).map_err(|e| Witness::NoCell { reason: e.to_string() })
}

/// Decides whether `p` is the Plücker vector of a totally nonnegative flag.
pub fn decide_tnn(p: &PlueckerVector) -> Result<CellCertificate<Rational>> {
    p.check_blocks()?;
    let p = p.canonicalize();
    if let Some((s, x)) = first_negative(&p) {
        return Ok(CellCertificate::reject(Witness::NegativeCoordinate {
            index: s.to_string(),
            value: x.to_string(),
        }));
    }
    let cell = match locate(&p) {
        Ok(c) => c,
        Err(w) => return Ok(CellCertificate::reject(w)),
    };
    let rebuilt = match psi_in(&cell, &p) {
        Ok(a) if a.values().all(|x| x.is_positive()) => Some((cell.phi(&a)?, a)),
        Ok(_) | Err(Error::NonPositiveCoordinate(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some((q, a)) = &rebuilt {
        if *q == p {
            return Ok(CellCertificate::member(cell.v().clone(), cell.w().clone(), a.clone()));
        }
    }
    let rels = generate_relations(p.n(), false);
    let witness = first_violated(&p, &rels)
        .or_else(|| rebuilt.as_ref().and_then(|(q, _)| first_difference(q, &p)))
        .unwrap_or_else(|| {
            let missing = s_vw_of(&cell)
                .ok()
                .and_then(|s| s.into_iter().find(|&i| !p.is_supported(i)))
                .map_or_else(String::new, |i| i.to_string());
            Witness::MissingCoordinate { index: missing }
        });
    Ok(CellCertificate::reject(witness))
}

/// Decides whether `p` lies in the nonnegative flag Dressian (equivalently the
/// nonnegative tropical flag variety).
pub fn decide_trop(p: &TropPlueckerVector) -> Result<CellCertificate<TropValue>> {
    p.check_blocks()?;
    let p = p.canonicalize();
    let three = generate_relations(p.n(), true);
    if let Some(w) = first_trop_violated(&p, &three) {
        return Ok(CellCertificate::reject(w));
    }
    let cell = match locate(&p) {
        Ok(c) => c,
        Err(w) => return Ok(CellCertificate::reject(w)),
    };
    let rebuilt = match trop_psi_in(&cell, &p) {
        Ok(x) => Some((cell.trop_phi(&x)?, x)),
        Err(Error::InfiniteCoordinate(_)) => None,
        Err(e) => return Err(e),
    };
    if let Some((q, x)) = &rebuilt {
        if *q == p {
            return Ok(CellCertificate::member(cell.v().clone(), cell.w().clone(), x.clone()));
        }
    }
    let rels = generate_relations(p.n(), false);
    let witness = first_trop_violated(&p, &rels)
        .or_else(|| rebuilt.as_ref().and_then(|(q, _)| first_difference(q, &p)))
        .unwrap_or(Witness::MissingCoordinate { index: String::new() });
    Ok(CellCertificate::reject(witness))
}

/// Replays a member certificate: the cell evaluated at its weights must give `p`.
pub fn replay_tnn(cert: &CellCertificate<Rational>, p: &PlueckerVector) -> Result<bool> {
    let Some((v, w)) = &cert.cell else { return Ok(false) };
    Ok(crate::plucker::phi(v, w, &cert.weights)? == p.canonicalize())
}

pub fn replay_trop(cert: &CellCertificate<TropValue>, p: &TropPlueckerVector) -> Result<bool> {
    let Some((v, w)) = &cert.cell else { return Ok(false) };
    Ok(crate::plucker::trop_phi(v, w, &cert.weights)? == p.canonicalize())
}

/// Solving one three-term relation for its unknown, classically or min-plus.
pub trait Propagate: Coordinate {
    /// `lead · X · partner = Σ |c| · l · r` over the remaining terms.
    fn solve(partner: &Self, lead: i64, others: &[(i64, Self, Self)]) -> Self;
}

impl Propagate for Rational {
    fn solve(partner: &Self, lead: i64, others: &[(i64, Self, Self)]) -> Self {
        let mut acc = Rational::zero();
        for (c, l, r) in others {
            acc += int(c.abs()) * l * r;
        }
        acc / (int(lead.abs()) * partner)
    }
}

impl Propagate for TropValue {
    fn solve(partner: &Self, _lead: i64, others: &[(i64, Self, Self)]) -> Self {
        let best = others
            .iter()
            .map(|(_, l, r)| l.tmul(r))
            .min()
            .unwrap_or(TropValue::Infinite);
        best.shift(partner.finite().expect("finite partner"))
    }
}

/// Tries to determine `s` from one relation given the `known` coordinates.
fn solve_with<T: Propagate>(
    rel: &IncidenceRelation,
    s: Subset,
    vals: &Coords<T>,
    known: &BTreeSet<Subset>,
) -> Option<T> {
    let lead = rel.terms.iter().find(|t| t.left == s || t.right == s)?;
    let partner = if lead.left == s { lead.right } else { lead.left };
    if !known.contains(&partner) || vals.get(partner).is_absent() {
        return None;
    }
    let mut others = Vec::new();
    for t in &rel.terms {
        if std::ptr::eq(t, lead) {
            continue;
        }
        if !known.contains(&t.left) || !known.contains(&t.right) {
            return None;
        }
        let (l, r) = (vals.get(t.left), vals.get(t.right));
        if l.is_absent() || r.is_absent() {
            continue;
        }
        if (t.coefficient > 0) == (lead.coefficient > 0) {
            return None;
        }
        others.push((t.coefficient, l.clone(), r.clone()));
    }
    if others.is_empty() {
        return None;
    }
    Some(T::solve(vals.get(partner), lead.coefficient, &others))
}

/// Fills in every supported coordinate of `cell` from the values of `p` at
/// `seeds`, one three-term relation at a time. Unknowns are visited by size
/// (largest first), then by `|e(S) ∖ S|`, then lexicographically.
pub fn propagate_from<T: Propagate>(p: &Coords<T>, cell: &Cell, seeds: &[Subset]) -> Result<Coords<T>> {
    let n = cell.n();
    let chains: Vec<ExtremalChain> = cell_extremal_indices(cell);
    let mut vals = Coords::<T>::empty(n);
    let mut known: BTreeSet<Subset> = BTreeSet::new();
    let mut unknown = Vec::new();
    for k in 1..n {
        for s in subsets_of_size(n, k) {
            if !cell.is_supported(s) {
                known.insert(s);
            } else if seeds.contains(&s) {
                vals.set(s, p.get(s).clone());
                known.insert(s);
            } else {
                unknown.push(s);
            }
        }
    }
    let mut keyed = Vec::with_capacity(unknown.len());
    for s in unknown {
        let t = e(cell, &chains, s)?.difference(s).len();
        keyed.push((std::cmp::Reverse(s.len()), t, s));
    }
    keyed.sort();
    let order: Vec<Subset> = keyed.into_iter().map(|(_, _, s)| s).collect();

    let rels = generate_relations(n, true);
    let mut pending: Vec<Subset> = order;
    while !pending.is_empty() {
        let hit = pending.iter().enumerate().find_map(|(idx, &s)| {
            rels.iter()
                .filter(|r| r.mentions(s))
                .find_map(|r| solve_with(r, s, &vals, &known))
                .map(|x| (idx, s, x))
        });
        let Some((idx, s, x)) = hit else {
            return Err(Error::PropagationStuck(pending[0]));
        };
        vals.set(s, x);
        known.insert(s);
        pending.remove(idx);
    }
    Ok(vals)
}

/// Reconstructs all coordinates from the extremal ones.
pub fn propagate_three_term<T: Propagate>(p: &Coords<T>, v: &Permutation, w: &Permutation) -> Result<Coords<T>> {
    let cell = Cell::new(v, w)?;
    let seeds: Vec<Subset> = cell_extremal_indices(&cell).into_iter().flat_map(|c| c.chain).collect();
    for &s in &seeds {
        if p.get(s).is_absent() {
            return Err(Error::Unsupported(s));
        }
    }
    propagate_from(&p.canonicalize(), &cell, &seeds)
}
