//! The graphs `G_{v,w}` built from the positive distinguished subexpressions, and
//! non-intersecting path collections on them.
//!
//! The graph is stored as a time-ordered network. Strands are numbered `1..=n`
//! from the bottom and the `k = ℓ(w)` letters of the reduced word for `w` are
//! steps `1..=k`. A routing vertex is a pair `(strand, t)` with `0 <= t <= k`.
//! A vertical edge created at step `t` joins `(lower, t-1)` to `(upper, t)`; every
//! strand also continues horizontally from `t-1` to `t`. A negative segment at
//! step `t` multiplies the horizontal move on its strand by `-1`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{int, LaurentMonomial, Matrix, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::perms::{bruhat_leq, canonical_w0_word, not_leq, positive_distinguished_subexpression, Permutation, Word};
use crate::subset::Subset;

/// The reduced word for `w` inside the canonical `w0` word, with the positions
/// used by the subexpression for `v` marked as swaps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellWord {
    pub v: Permutation,
    pub w: Permutation,
    /// Run-annotated subword of the canonical `w0` word evaluating to `w`.
    pub word: Word,
    /// `swaps[j-1]` is true when position `j` belongs to the subexpression for `v`.
    pub swaps: Vec<bool>,
}

impl CellWord {
    pub fn new(v: &Permutation, w: &Permutation) -> Result<Self> {
        if !bruhat_leq(v, w)? {
            return Err(not_leq(v, w));
        }
        let n = w.n();
        let wsub = positive_distinguished_subexpression(w, &canonical_w0_word(n))?;
        let word = wsub.word();
        let vsub = positive_distinguished_subexpression(v, &word)?;
        let mut swaps = vec![false; word.len()];
        for &p in &vsub.positions {
            swaps[p - 1] = true;
        }
        Ok(CellWord {
            v: v.clone(),
            w: w.clone(),
            word,
            swaps,
        })
    }

    pub fn n(&self) -> usize {
        self.w.n()
    }

    /// Positions not used by the subexpression for `v`; these index the weights.
    pub fn weight_ids(&self) -> Vec<usize> {
        (1..=self.word.len()).filter(|&j| !self.swaps[j - 1]).collect()
    }

    pub fn dimension(&self) -> usize {
        self.swaps.iter().filter(|&&s| !s).count()
    }

    pub fn run(&self, j: usize) -> usize {
        self.word.runs.as_ref().expect("run-annotated word")[j - 1]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerticalEdge {
    pub weight_id: usize,
    pub column: usize,
    pub step: usize,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NegativeSegment {
    pub strand: usize,
    pub column: usize,
    pub step: usize,
}

#[derive(Clone, Debug)]
pub struct WiringDiagram {
    cell: CellWord,
    /// `source_label[s-1]` is the primed label starting on strand `s`.
    source_label: Vec<usize>,
    vertical_edges: Vec<VerticalEdge>,
    negative_segments: Vec<NegativeSegment>,
    /// Per step, the vertical edge index or the negative strand.
    step_edge: Vec<Option<usize>>,
    step_negative: Vec<Option<usize>>,
    /// `reach[t][s-1]`: sinks reachable from vertex `(s, t)`.
    reach: Vec<Vec<Subset>>,
}

fn swap_strand(s: usize, i: usize) -> usize {
    if s == i {
        i + 1
    } else if s == i + 1 {
        i
    } else {
        s
    }
}

pub fn build_diagram(v: &Permutation, w: &Permutation) -> Result<WiringDiagram> {
    Ok(WiringDiagram::from_cell(CellWord::new(v, w)?))
}

impl WiringDiagram {
    pub fn from_cell(cell: CellWord) -> Self {
        let n = cell.n();
        let k = cell.word.len();
        let mut source_label: Vec<usize> = (1..=n).collect();
        let mut edges: Vec<VerticalEdge> = Vec::new();
        let mut negs: Vec<NegativeSegment> = Vec::new();
        for j in 1..=k {
            let i = cell.word.letters[j - 1];
            let column = n + 1 - cell.run(j);
            if cell.swaps[j - 1] {
                // Everything to the left of this step trades strands i and i+1.
                source_label.swap(i - 1, i);
                for e in &mut edges {
                    e.lower = swap_strand(e.lower, i);
                    e.upper = swap_strand(e.upper, i);
                }
                for s in &mut negs {
                    s.strand = swap_strand(s.strand, i);
                }
                negs.push(NegativeSegment {
                    strand: i,
                    column,
                    step: j,
                });
            } else {
                edges.push(VerticalEdge {
                    weight_id: j,
                    column,
                    step: j,
                    lower: i,
                    upper: i + 1,
                });
            }
        }
        assert!(edges.iter().all(|e| e.lower < e.upper), "downward vertical edge");

        let mut step_edge = vec![None; k];
        let mut step_negative = vec![None; k];
        for (idx, e) in edges.iter().enumerate() {
            step_edge[e.step - 1] = Some(idx);
        }
        for s in &negs {
            step_negative[s.step - 1] = Some(s.strand);
        }

        let mut reach = vec![vec![Subset::EMPTY; n]; k + 1];
        for s in 1..=n {
            reach[k][s - 1] = Subset::from_elems([s]);
        }
        for t in (1..=k).rev() {
            for s in 1..=n {
                let mut r = reach[t][s - 1];
                if let Some(e) = step_edge[t - 1].map(|x| &edges[x]) {
                    if e.lower == s {
                        r = r.union(reach[t][e.upper - 1]);
                    }
                }
                reach[t - 1][s - 1] = r;
            }
        }

        WiringDiagram {
            cell,
            source_label,
            vertical_edges: edges,
            negative_segments: negs,
            step_edge,
            step_negative,
            reach,
        }
    }

    pub fn n(&self) -> usize {
        self.cell.n()
    }

    pub fn steps(&self) -> usize {
        self.cell.word.len()
    }

    pub fn cell(&self) -> &CellWord {
        &self.cell
    }

    pub fn v(&self) -> &Permutation {
        &self.cell.v
    }

    pub fn w(&self) -> &Permutation {
        &self.cell.w
    }

    pub fn source_labels(&self) -> &[usize] {
        &self.source_label
    }

    pub fn vertical_edges(&self) -> &[VerticalEdge] {
        &self.vertical_edges
    }

    pub fn negative_segments(&self) -> &[NegativeSegment] {
        &self.negative_segments
    }

    pub fn weight_ids(&self) -> Vec<usize> {
        self.vertical_edges.iter().map(|e| e.weight_id).collect()
    }

    /// Strand on which primed label `label` starts.
    pub fn strand_of(&self, label: usize) -> usize {
        self.source_label.iter().position(|&l| l == label).unwrap() + 1
    }

    /// Sinks reachable from the source labelled `label`.
    pub fn reachable_sinks(&self, label: usize) -> Subset {
        self.reach[0][self.strand_of(label) - 1]
    }

    fn edge_at(&self, t: usize) -> Option<&VerticalEdge> {
        self.step_edge[t - 1].map(|i| &self.vertical_edges[i])
    }

    /// All paths from `label` ending in `sinks`.
    pub fn paths_from(&self, label: usize, sinks: Subset) -> Vec<Path> {
        let start = self.strand_of(label);
        let mut out = Vec::new();
        let mut traj = vec![start];
        let mut used = Vec::new();
        self.extend_paths(label, sinks, &mut traj, &mut used, &mut out);
        out
    }

    fn extend_paths(
        &self,
        label: usize,
        sinks: Subset,
        traj: &mut Vec<usize>,
        used: &mut Vec<usize>,
        out: &mut Vec<Path>,
    ) {
        let t = traj.len() - 1;
        let cur = traj[t];
        if self.reach[t][cur - 1].mask() & sinks.mask() == 0 {
            return;
        }
        if t == self.steps() {
            out.push(Path {
                source: label,
                trajectory: traj.clone(),
                edges: used.clone(),
            });
            return;
        }
        traj.push(cur);
        self.extend_paths(label, sinks, traj, used, out);
        traj.pop();
        if let Some(idx) = self.step_edge[t] {
            let e = &self.vertical_edges[idx];
            if e.lower == cur {
                traj.push(e.upper);
                used.push(idx);
                self.extend_paths(label, sinks, traj, used, out);
                used.pop();
                traj.pop();
            }
        }
    }

    /// Path sums from each source label (rows) to each sink (columns), evaluated
    /// at the weights `a`.
    pub fn lgv_matrix(&self, a: &BTreeMap<usize, Rational>) -> Result<Matrix> {
        let rows = self.transfer(
            |e| a.get(&e.weight_id).cloned().ok_or(Error::Unassigned(e.weight_id)),
            int(-1),
        )?;
        Ok(Matrix::from_rows(rows))
    }

    /// Path sums as polynomials in the weight variables.
    pub fn lgv_matrix_symbolic(&self) -> Matrix<Polynomial> {
        let rows = self
            .transfer(|e| Ok(Polynomial::var(e.weight_id)), Polynomial::constant(int(-1)))
            .expect("symbolic weights are always available");
        Matrix::from_rows(rows)
    }

    fn transfer<T>(&self, weight: impl Fn(&VerticalEdge) -> Result<T>, minus_one: T) -> Result<Vec<Vec<T>>>
    where
        T: Clone + Zero + One + std::ops::Mul<Output = T>,
    {
        let n = self.n();
        let mut rows = Vec::with_capacity(n);
        for label in 1..=n {
            let mut cur = vec![T::zero(); n];
            cur[self.strand_of(label) - 1] = T::one();
            for t in 1..=self.steps() {
                if let Some(e) = self.edge_at(t) {
                    let moved = cur[e.lower - 1].clone() * weight(e)?;
                    cur[e.upper - 1] = cur[e.upper - 1].clone() + moved;
                }
                if let Some(s) = self.step_negative[t - 1] {
                    cur[s - 1] = cur[s - 1].clone() * minus_one.clone();
                }
            }
            rows.push(cur);
        }
        Ok(rows)
    }

    /// Machine-readable listing: one `(c, r, a_j)` line per vertical edge, where
    /// `r` is the lower strand, then the negative segments and the source labels.
    pub fn listing(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .vertical_edges
            .iter()
            .map(|e| {
                if e.upper == e.lower + 1 {
                    format!("({}, {}, a{})", e.column, e.lower, e.weight_id)
                } else {
                    format!("({}, {}->{}, a{})", e.column, e.lower, e.upper, e.weight_id)
                }
            })
            .collect();
        for s in &self.negative_segments {
            out.push(format!("(-1, strand {}, column {})", s.strand, s.column));
        }
        let labels: Vec<String> = self.source_label.iter().map(|l| format!("{l}'")).collect();
        out.push(format!("labels {}", labels.join(" ")));
        out
    }
}

/// Text grid: one row per strand, top strand first, one cell per step. `o` marks
/// the tail of a vertical edge, `^` its head, `-` a negative segment.
impl fmt::Display for WiringDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in (1..=self.n()).rev() {
            write!(f, "{:>3}' ", self.source_label[s - 1])?;
            for t in 1..=self.steps() {
                let c = match (self.edge_at(t), self.step_negative[t - 1]) {
                    (Some(e), _) if e.lower == s => 'o',
                    (Some(e), _) if e.upper == s => '^',
                    (_, Some(x)) if x == s => '-',
                    _ => '.',
                };
                write!(f, "{c}")?;
            }
            writeln!(f, " {s}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Path {
    /// Primed source label.
    pub source: usize,
    /// Strand occupied at each time `0..=k`.
    pub trajectory: Vec<usize>,
    /// Indices into the diagram's vertical edges, in order of use.
    pub edges: Vec<usize>,
}

impl Path {
    pub fn sink(&self) -> usize {
        *self.trajectory.last().unwrap()
    }

    pub fn is_diagonal(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn meets(&self, other: &Path) -> bool {
        self.trajectory.iter().zip(&other.trajectory).any(|(a, b)| a == b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathCollection {
    /// Ordered by source label.
    pub paths: Vec<Path>,
    pub sources: Subset,
    pub sinks: Subset,
}

impl PathCollection {
    fn from_paths(mut paths: Vec<Path>) -> Self {
        paths.sort_by_key(|p| p.source);
        let sources = Subset::from_elems(paths.iter().map(|p| p.source));
        let sinks = Subset::from_elems(paths.iter().map(Path::sink));
        PathCollection { paths, sources, sinks }
    }

    pub fn edges(&self) -> Vec<usize> {
        let mut e: Vec<usize> = self.paths.iter().flat_map(|p| p.edges.iter().copied()).collect();
        e.sort_unstable();
        e
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub sign: i8,
    pub exponents: BTreeMap<usize, u32>,
}

impl SignedMonomial {
    pub fn to_laurent(&self) -> LaurentMonomial {
        LaurentMonomial::new(
            int(self.sign as i64),
            self.exponents.iter().map(|(&v, &e)| (v, e as i64)).collect(),
        )
    }
}

/// Every vertex-disjoint collection from `sources` to `sinks`.
pub fn enumerate_path_collections(d: &WiringDiagram, sources: Subset, sinks: Subset) -> Vec<PathCollection> {
    if sources.len() != sinks.len() {
        return Vec::new();
    }
    let labels = sources.to_vec();
    let candidates: Vec<Vec<Path>> = labels.iter().map(|&l| d.paths_from(l, sinks)).collect();
    let mut out = Vec::new();
    let mut chosen: Vec<&Path> = Vec::new();
    backtrack(&candidates, 0, Subset::EMPTY, &mut chosen, &mut out);
    out
}

fn backtrack<'a>(
    candidates: &'a [Vec<Path>],
    idx: usize,
    used_sinks: Subset,
    chosen: &mut Vec<&'a Path>,
    out: &mut Vec<PathCollection>,
) {
    if idx == candidates.len() {
        out.push(PathCollection::from_paths(
            chosen.iter().map(|p| (*p).clone()).collect(),
        ));
        return;
    }
    for p in &candidates[idx] {
        if used_sinks.contains(p.sink()) || chosen.iter().any(|q| q.meets(p)) {
            continue;
        }
        chosen.push(p);
        backtrack(candidates, idx + 1, used_sinks.with(p.sink()), chosen, out);
        chosen.pop();
    }
}

pub fn collection_weight(c: &PathCollection, d: &WiringDiagram) -> SignedMonomial {
    let mut sign = 1i8;
    let mut exponents = BTreeMap::new();
    for p in &c.paths {
        for &e in &p.edges {
            *exponents.entry(d.vertical_edges[e].weight_id).or_insert(0) += 1;
        }
        for s in &d.negative_segments {
            if p.trajectory[s.step - 1] == s.strand && p.trajectory[s.step] == s.strand {
                sign = -sign;
            }
        }
    }
    let sinks: Vec<usize> = c.paths.iter().map(Path::sink).collect();
    for i in 0..sinks.len() {
        for j in i + 1..sinks.len() {
            if sinks[i] > sinks[j] {
                sign = -sign;
            }
        }
    }
    SignedMonomial { sign, exponents }
}

/// Signed sum of collection weights from `[|sinks|]'` to `sinks`.
pub fn collection_polynomial(d: &WiringDiagram, sinks: Subset) -> Polynomial {
    let mut p = Polynomial::zero();
    for c in enumerate_path_collections(d, Subset::initial(sinks.len()), sinks) {
        let m = collection_weight(&c, d).to_laurent();
        p.add_term(m.exponents().clone(), m.coefficient().clone());
    }
    p
}

/// Greedy paths from `sources`, highest strand first, each taking every upward
/// edge whose head is not yet occupied. `occupied[t][s-1]` seeds the occupancy.
fn greedy_paths(d: &WiringDiagram, sources: Subset, occupied: &mut [Vec<bool>]) -> Result<Vec<Path>> {
    let mut order: Vec<usize> = sources.to_vec();
    order.sort_by_key(|&l| std::cmp::Reverse(d.strand_of(l)));
    let mut out = Vec::new();
    for label in order {
        let mut cur = d.strand_of(label);
        if occupied[0][cur - 1] {
            return Err(Error::GreedyStuck(label));
        }
        occupied[0][cur - 1] = true;
        let mut traj = vec![cur];
        let mut edges = Vec::new();
        #[allow(clippy::needless_range_loop)]
        for t in 1..=d.steps() {
            let up = d.step_edge[t - 1].filter(|&i| {
                let e = &d.vertical_edges[i];
                e.lower == cur && !occupied[t][e.upper - 1]
            });
            if let Some(i) = up {
                cur = d.vertical_edges[i].upper;
                edges.push(i);
            } else if occupied[t][cur - 1] {
                return Err(Error::GreedyStuck(label));
            }
            occupied[t][cur - 1] = true;
            traj.push(cur);
        }
        out.push(Path {
            source: label,
            trajectory: traj,
            edges,
        });
    }
    Ok(out)
}

fn empty_occupancy(d: &WiringDiagram) -> Vec<Vec<bool>> {
    vec![vec![false; d.n()]; d.steps() + 1]
}

pub fn left_greedy_collection(d: &WiringDiagram, sources: Subset) -> Result<PathCollection> {
    let mut occ = empty_occupancy(d);
    Ok(PathCollection::from_paths(greedy_paths(d, sources, &mut occ)?))
}

fn diagonal_path(d: &WiringDiagram, label: usize) -> Path {
    Path {
        source: label,
        trajectory: vec![d.strand_of(label); d.steps() + 1],
        edges: Vec::new(),
    }
}

/// For `i = 0..=k`, left greedy paths from the topmost `i` sources of `[k]'` and
/// diagonal paths from the rest. Each result is checked to be the only
/// collection with its sink set.
pub fn graph_extremal_collections(d: &WiringDiagram, k: usize) -> Result<Vec<PathCollection>> {
    let mut by_strand: Vec<usize> = (1..=k).collect();
    by_strand.sort_by_key(|&l| std::cmp::Reverse(d.strand_of(l)));
    let mut out: Vec<PathCollection> = Vec::new();
    for i in 0..=k {
        let mut occ = empty_occupancy(d);
        let mut paths = Vec::new();
        for &l in &by_strand[i..] {
            let p = diagonal_path(d, l);
            for (t, &s) in p.trajectory.iter().enumerate() {
                occ[t][s - 1] = true;
            }
            paths.push(p);
        }
        paths.extend(greedy_paths(
            d,
            Subset::from_elems(by_strand[..i].iter().copied()),
            &mut occ,
        )?);
        let c = PathCollection::from_paths(paths);
        if out.iter().any(|o| o.sinks == c.sinks) {
            continue;
        }
        let all = enumerate_path_collections(d, c.sources, c.sinks);
        if all.len() != 1 || all[0] != c {
            return Err(Error::NonUniqueCollection {
                sinks: c.sinks,
                count: all.len(),
            });
        }
        out.push(c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn set(v: &[usize]) -> Subset {
        Subset::from_elems(v.iter().copied())
    }

    fn toy() -> WiringDiagram {
        build_diagram(&p("1324"), &p("4213")).unwrap()
    }

    #[test]
    fn small_cell_diagram() {
        let d = toy();
        let edges: Vec<(usize, usize, usize, usize)> = d
            .vertical_edges()
            .iter()
            .map(|e| (e.column, e.lower, e.upper, e.weight_id))
            .collect();
        assert_eq!(edges, vec![(4, 1, 3, 1), (4, 2, 4, 2), (2, 1, 2, 4)]);
        assert_eq!(d.negative_segments().len(), 1);
        assert_eq!(d.negative_segments()[0].strand, 2);
        assert_eq!(d.source_labels(), &[1, 3, 2, 4]);
        assert_eq!(d.weight_ids(), vec![1, 2, 4]);
    }

    #[test]
    fn trivial_and_top_diagrams() {
        let d = build_diagram(&p("123"), &p("123")).unwrap();
        assert!(d.vertical_edges().is_empty());
        assert_eq!(d.source_labels(), &[1, 2, 3]);
        let d = build_diagram(&p("123"), &p("321")).unwrap();
        let edges: Vec<(usize, usize, usize)> = d
            .vertical_edges()
            .iter()
            .map(|e| (e.column, e.lower, e.weight_id))
            .collect();
        assert_eq!(edges, vec![(3, 1, 1), (3, 2, 2), (2, 1, 3)]);
        assert!(d.negative_segments().is_empty());
        assert!(build_diagram(&p("321"), &p("123")).is_err());
    }

    #[test]
    fn two_paths_to_sink_two() {
        let d = build_diagram(&p("123"), &p("321")).unwrap();
        let all = enumerate_path_collections(&d, set(&[1]), set(&[2]));
        assert_eq!(all.len(), 2);
        let mut ws: Vec<_> = all.iter().map(|c| collection_weight(c, &d).exponents).collect();
        ws.sort();
        assert_eq!(ws, vec![BTreeMap::from([(1, 1)]), BTreeMap::from([(3, 1)])]);
        let to3 = enumerate_path_collections(&d, set(&[1]), set(&[3]));
        assert_eq!(to3.len(), 1);
        let m = collection_weight(&to3[0], &d);
        assert_eq!(m.sign, 1);
        assert_eq!(m.exponents, BTreeMap::from([(1, 1), (2, 1)]));
        assert!(enumerate_path_collections(&d, set(&[1]), set(&[1]))[0].paths[0].is_diagonal());
        assert!(enumerate_path_collections(&d, set(&[1, 2]), set(&[1])).is_empty());
    }

    #[test]
    fn small_cell_collections() {
        let d = toy();
        let all = enumerate_path_collections(&d, set(&[1, 2, 3]), set(&[2, 3, 4]));
        assert_eq!(all.len(), 1);
        let m = collection_weight(&all[0], &d);
        assert_eq!(m.sign, 1);
        assert_eq!(m.exponents, BTreeMap::from([(2, 1), (4, 1)]));
        let all = enumerate_path_collections(&d, set(&[1, 2, 3]), set(&[1, 3, 4]));
        assert_eq!(all.len(), 1);
        let m = collection_weight(&all[0], &d);
        assert_eq!((m.sign, m.exponents), (1, BTreeMap::from([(2, 1)])));
        let g = left_greedy_collection(&d, set(&[1, 2, 3])).unwrap();
        assert_eq!(g.sinks, set(&[2, 3, 4]));
        let diag = enumerate_path_collections(&d, set(&[1, 2, 3]), set(&[1, 2, 3]));
        assert_eq!(diag.len(), 1);
        assert_eq!(collection_weight(&diag[0], &d).to_laurent(), LaurentMonomial::one());
    }

    #[test]
    fn small_cell_lgv_matrix() {
        let d = toy();
        let a: BTreeMap<usize, Rational> = [(1, int(2)), (2, int(3)), (4, int(5))].into();
        assert_eq!(
            d.lgv_matrix(&a).unwrap(),
            Matrix::ints(&[&[1, 5, 2, 0], &[0, 0, 1, 0], &[0, -1, 0, 3], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn greedy_and_extremal_collections() {
        let d = build_diagram(&Permutation::identity(5), &Permutation::longest(5)).unwrap();
        let g = left_greedy_collection(&d, set(&[3])).unwrap();
        assert_eq!(g.sinks, set(&[5]));
        let sinks: Vec<Subset> = graph_extremal_collections(&d, 3)
            .unwrap()
            .iter()
            .map(|c| c.sinks)
            .collect();
        assert_eq!(
            sinks,
            vec![set(&[1, 2, 3]), set(&[1, 2, 5]), set(&[1, 4, 5]), set(&[3, 4, 5])]
        );
        let full = graph_extremal_collections(&d, 5).unwrap();
        assert_eq!(full.len(), 1);
        assert_eq!(full[0].sinks, Subset::initial(5));

        let id = build_diagram(&Permutation::identity(4), &Permutation::identity(4)).unwrap();
        let g = left_greedy_collection(&id, Subset::initial(4)).unwrap();
        assert!(g.paths.iter().all(Path::is_diagonal));
    }

    #[test]
    fn example_cell_in_s5() {
        // w = s1 s2 s3 s4 s1 s2 s3 s1, v = 14235.
        let v = p("14235");
        let w = Word::new(5, vec![1, 2, 3, 4, 1, 2, 3, 1]).unwrap().evaluate();
        let d = build_diagram(&v, &w).unwrap();
        let sinks: Vec<Subset> = graph_extremal_collections(&d, 3)
            .unwrap()
            .iter()
            .map(|c| c.sinks)
            .collect();
        assert_eq!(
            sinks,
            vec![set(&[1, 3, 4]), set(&[1, 3, 5]), set(&[1, 4, 5]), set(&[2, 4, 5])]
        );
    }

    #[test]
    fn text_dump() {
        let d = toy();
        let grid = d.to_string();
        assert_eq!(grid.lines().count(), 4);
        assert!(grid.contains('-'));
        let lines = d.listing();
        assert_eq!(lines[0], "(4, 1->3, a1)");
        assert_eq!(lines[2], "(2, 1, a4)");
        assert_eq!(lines.last().unwrap(), "labels 1' 3' 2' 4'");
    }
}
