//! The weakly cellular structure of the level-two walled Brauer algebra in
//! its faithful matrix realization: poset labels, cell indices, the C-basis,
//! Gram matrices of cell modules, the Kleshchev classification and the
//! semisimplicity test.

use crate::linalg::{rank_of, solve_in_span, LinComb};
use crate::perm::{coset_reps, Convention, CosetRep, Perm};
use crate::rational::{is_integer, rat, Rat};
use crate::tableau::{dominates, is_kleshchev, standard_tableaux, t_row, Bipartition, StdTab};
use crate::tensor::{Mat, TensorSpace};
use crate::word::{self, Gen, WordElem};
use crate::{Error, Result};
use num::Zero;
use std::fmt;

/// Poset label (f, (row bipartition of r-f, bar bipartition of t-f)).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PosetLabel {
    pub f: usize,
    pub row: Bipartition,
    pub bar: Bipartition,
}

impl fmt::Display for PosetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f={} {} {}", self.f, self.row, self.bar)
    }
}

/// Label order: larger f wins; at equal f both components must dominate.
pub fn label_geq(a: &PosetLabel, b: &PosetLabel) -> bool {
    if a.f != b.f {
        return a.f > b.f;
    }
    dominates(&a.row, &b.row) && dominates(&a.bar, &b.bar)
}

pub fn label_gt(a: &PosetLabel, b: &PosetLabel) -> bool {
    a != b && label_geq(a, b)
}

/// All labels for (r, t), f ascending then component order.
pub fn labels(r: usize, t: usize) -> Vec<PosetLabel> {
    let mut out = Vec::new();
    for f in 0..=r.min(t) {
        for row in Bipartition::all((r - f) as u32) {
            for bar in Bipartition::all((t - f) as u32) {
                out.push(PosetLabel {
                    f,
                    row: row.clone(),
                    bar,
                });
            }
        }
    }
    out
}

/// One side of a cell index: a standard tableau pair, a coset representative
/// and a kappa vector supported on the representative's unbarred indices.
#[derive(Clone, Debug)]
pub struct CellIndex {
    pub tab_row: StdTab,
    pub tab_bar: StdTab,
    pub rep: CosetRep,
    pub kappa: Vec<u32>,
}

/// The index set delta(f, lambda): tableaux pairs, representatives, and all
/// kappa vectors supported on each representative's i-indices.
pub fn delta_set(label: &PosetLabel, r: usize, t: usize) -> Result<Vec<CellIndex>> {
    let reps = coset_reps(r, t, label.f, Convention::Cal)?;
    let tabs_row = standard_tableaux(&label.row);
    let tabs_bar = standard_tableaux(&label.bar);
    let mut out = Vec::new();
    for tr in &tabs_row {
        for tb in &tabs_bar {
            for rep in &reps {
                let support = rep.i_indices.clone();
                for mask in 0..(1u32 << support.len()) {
                    let mut kappa = vec![0u32; r];
                    for (bit, &i) in support.iter().enumerate() {
                        if mask & (1 << bit) != 0 {
                            kappa[i - 1] = 1;
                        }
                    }
                    out.push(CellIndex {
                        tab_row: tr.clone(),
                        tab_bar: tb.clone(),
                        rep: rep.clone(),
                        kappa,
                    });
                }
            }
        }
    }
    Ok(out)
}

/// Sum over all labels of |delta|^2 together with the target 2^{r+t}(r+t)!.
pub fn counting_identity(r: usize, t: usize) -> Result<(usize, usize)> {
    let mut total = 0usize;
    for label in labels(r, t) {
        let d = delta_set(&label, r, t)?.len();
        total += d * d;
    }
    let fact: usize = (1..=r + t).product::<usize>().max(1);
    Ok((total, (1usize << (r + t)) * fact))
}

/// Charges of the two level-two Hecke factors.
pub fn hecke_charges(m: usize, n: usize, p: &Rat, q: &Rat) -> ((Rat, Rat), (Rat, Rat)) {
    let row = (-p.clone(), rat(m as i64) - q.clone());
    let bar = (q.clone(), p.clone() - rat(n as i64));
    (row, bar)
}

fn bar_letters(w: &WordElem) -> WordElem {
    let mut out = WordElem::zero();
    for (wd, c) in w.iter() {
        let mapped: Vec<Gen> =
            wd.0.iter()
                .map(|g| match g {
                    Gen::S(i) => Gen::SBar(*i),
                    Gen::X1 => Gen::XBar1,
                    other => *other,
                })
                .collect();
        out.add_term(crate::word::Word(mapped), c.clone());
    }
    out
}

/// Row stabilizer of the row-canonical tableau: all permutations preserving
/// the row blocks of the concatenated composition.
fn young_subgroup(shape: &Bipartition) -> Vec<Perm> {
    let k = shape.size() as usize;
    let mut block = vec![0usize; k];
    let mut next = 0usize;
    let mut id = 0usize;
    for comp in [&shape.0, &shape.1] {
        for &len in &comp.0 {
            for _ in 0..len {
                block[next] = id;
                next += 1;
            }
            id += 1;
        }
    }
    Perm::all(k)
        .into_iter()
        .filter(|p| (1..=k).all(|i| block[i - 1] == block[p.apply(i) - 1]))
        .collect()
}

/// The cellular element m_st of the level-two Hecke algebra, written in the
/// walled generators: d(s)^{-1} pi_a m_shape d(t) with pi_a built from
/// Y_i = -x_i and the parameter v, mapped to barred letters when `bar`.
pub fn hecke_cell_word(
    shape: &Bipartition,
    s: &StdTab,
    t: &StdTab,
    v: &Rat,
    bar: bool,
) -> Result<WordElem> {
    if !s.is_standard() || !t.is_standard() || s.shape != *shape || t.shape != *shape {
        return Err(Error::InvalidParameter(
            "tableaux must be standard of the given shape".into(),
        ));
    }
    let a = shape.0.size() as usize;
    let mut pi = word::one();
    for i in 1..=a {
        let y = word::x_tower(i).neg();
        pi = word::mul(&pi, &word::add_scalar(&y, &-v.clone()));
    }
    let mut msum = WordElem::zero();
    for w in young_subgroup(shape) {
        let gens: Vec<Gen> = w
            .adjacent_word()
            .into_iter()
            .map(|i| Gen::S(i as u8))
            .collect();
        msum.add_term(crate::word::Word(gens), rat(1));
    }
    let ds: Vec<Gen> = s
        .d_perm()
        .adjacent_word()
        .into_iter()
        .map(|i| Gen::S(i as u8))
        .collect();
    let dt: Vec<Gen> = t
        .d_perm()
        .adjacent_word()
        .into_iter()
        .map(|i| Gen::S(i as u8))
        .collect();
    let ds_inv = crate::word::Word(ds).reversed();
    let out = word::mul(
        &word::mul(&word::mul(&WordElem::basis(ds_inv), &pi), &msum),
        &WordElem::basis(crate::word::Word(dt)),
    );
    Ok(if bar { bar_letters(&out) } else { out })
}

/// The contraction chain e_{r,t} e_{r-1,t-1} ... e_{r-f+1,t-f+1} as a word.
pub fn e_chain_word(r: usize, t: usize, f: usize) -> WordElem {
    let mut acc = word::one();
    for l in 0..f {
        acc = word::mul(&acc, &WordElem::basis(word::e_ij_word(r - l, t - l)));
    }
    acc
}

fn kappa_word(kappa: &[u32]) -> WordElem {
    let mut acc = word::one();
    for (i, &k) in kappa.iter().enumerate() {
        for _ in 0..k {
            acc = word::mul(&acc, &word::x_tower(i + 1));
        }
    }
    acc
}

/// Sizes and parameters of one level-two algebra instance.
#[derive(Clone, Debug)]
pub struct CellCtx {
    pub m: usize,
    pub n: usize,
    pub r: usize,
    pub t: usize,
    pub p: Rat,
    pub q: Rat,
}

impl CellCtx {
    pub fn of(space: &TensorSpace) -> CellCtx {
        CellCtx {
            m: space.m,
            n: space.n,
            r: space.r,
            t: space.t,
            p: space.p.clone(),
            q: space.q.clone(),
        }
    }

    /// The middle part e^f m_st of a C-element (no coset conjugation, no
    /// kappa), for tableau pairs (s_row, s_bar) and (t_row, t_bar).
    pub fn middle_word(
        &self,
        label: &PosetLabel,
        s_tabs: (&StdTab, &StdTab),
        t_tabs: (&StdTab, &StdTab),
    ) -> Result<WordElem> {
        let ((_, v_row), (_, v_bar)) = hecke_charges(self.m, self.n, &self.p, &self.q);
        let row = hecke_cell_word(&label.row, s_tabs.0, t_tabs.0, &v_row, false)?;
        let bar = hecke_cell_word(&label.bar, s_tabs.1, t_tabs.1, &v_bar, true)?;
        Ok(word::mul(
            &word::mul(&e_chain_word(self.r, self.t, label.f), &row),
            &bar,
        ))
    }

    /// The full C-element word: x^{kappa_d} d^{-1} e^f m_st c x^{kappa_c}.
    pub fn cell_element_word(
        &self,
        label: &PosetLabel,
        left: &CellIndex,
        right: &CellIndex,
    ) -> Result<WordElem> {
        let mid = self.middle_word(
            label,
            (&left.tab_row, &left.tab_bar),
            (&right.tab_row, &right.tab_bar),
        )?;
        let d_inv = WordElem::basis(left.rep.word.reversed());
        let c = WordElem::basis(right.rep.word.clone());
        let out = word::mul(&kappa_word(&left.kappa), &d_inv);
        let out = word::mul(&out, &mid);
        let out = word::mul(&out, &c);
        Ok(word::mul(&out, &kappa_word(&right.kappa)))
    }
}

/// One basis element with its realization.
pub struct CellDatum {
    pub label_idx: usize,
    pub left_idx: usize,
    pub right_idx: usize,
    pub word: WordElem,
    pub mat: Mat,
}

/// The realized weakly cellular basis: all C-elements, certified to have the
/// right cardinality and full rank.
pub struct CellularBasis {
    pub labels: Vec<PosetLabel>,
    pub deltas: Vec<Vec<CellIndex>>,
    pub elements: Vec<CellDatum>,
    flats: Vec<LinComb<u64>>,
}

/// Requires the faithful regime: a typical weight and r + t <= min(m, n).
pub fn require_faithful(space: &TensorSpace) -> Result<()> {
    if !crate::gl::typicality(&space.p, &space.q, space.m, space.n) {
        return Err(Error::NonFaithful(format!(
            "weight (p,q)=({},{}) is atypical for gl({}|{})",
            space.p, space.q, space.m, space.n
        )));
    }
    if space.r + space.t > space.m.min(space.n) {
        return Err(Error::NonFaithful(format!(
            "r+t = {} exceeds min(m,n) = {}",
            space.r + space.t,
            space.m.min(space.n)
        )));
    }
    Ok(())
}

pub fn cellular_basis(space: &TensorSpace) -> Result<CellularBasis> {
    require_faithful(space)?;
    let (r, t) = (space.r, space.t);
    // materializing all 2^{r+t}(r+t)! realized elements needs element-count
    // times dimension sparse columns; keep that at desk scale
    let expected = (1usize << (r + t)) * (1..=r + t).product::<usize>().max(1);
    if expected * space.dim() > 1_000_000 {
        return Err(Error::ResourceGuard(format!(
            "cellular family of {expected} operators on a {}-dimensional space",
            space.dim()
        )));
    }
    let labels = labels(r, t);
    let mut deltas = Vec::with_capacity(labels.len());
    for label in &labels {
        deltas.push(delta_set(label, r, t)?);
    }
    let mut elements = Vec::new();
    for (li, label) in labels.iter().enumerate() {
        let d = &deltas[li];
        for (ai, a) in d.iter().enumerate() {
            for (bi, b) in d.iter().enumerate() {
                let wordelem = CellCtx::of(space).cell_element_word(label, a, b)?;
                let mat = space.eval_word_elem(&wordelem)?;
                elements.push(CellDatum {
                    label_idx: li,
                    left_idx: ai,
                    right_idx: bi,
                    word: wordelem,
                    mat,
                });
            }
        }
    }
    if elements.len() != expected {
        return Err(Error::InvalidParameter(format!(
            "cellular family has {} elements, expected {expected}",
            elements.len()
        )));
    }
    let flats: Vec<LinComb<u64>> = elements.iter().map(|e| space.flatten(&e.mat)).collect();
    let rank = rank_of(&flats);
    if rank != expected {
        return Err(Error::InvalidParameter(format!(
            "cellular family rank {rank} < {expected}; not a basis"
        )));
    }
    Ok(CellularBasis {
        labels,
        deltas,
        elements,
        flats,
    })
}

impl CellularBasis {
    pub fn element_position(&self, label_idx: usize, left_idx: usize, right_idx: usize) -> usize {
        self.elements
            .iter()
            .position(|e| {
                e.label_idx == label_idx && e.left_idx == left_idx && e.right_idx == right_idx
            })
            .expect("element present")
    }

    /// Coordinates of a matrix in the full basis (unique by full rank).
    pub fn expand(&self, space: &TensorSpace, m: &Mat) -> Option<Vec<Rat>> {
        solve_in_span(&space.flatten(m), &self.flats)
    }

    /// Index of the distinguished diagonal index of a label: canonical
    /// tableaux, identity representative, zero kappa.
    pub fn distinguished_index(&self, label_idx: usize) -> usize {
        let label = &self.labels[label_idx];
        let tr = t_row(&label.row);
        let tb = t_row(&label.bar);
        self.deltas[label_idx]
            .iter()
            .position(|ci| {
                ci.rep.perm.is_identity()
                    && ci.kappa.iter().all(|&k| k == 0)
                    && ci.tab_row == tr
                    && ci.tab_bar == tb
            })
            .expect("distinguished index present")
    }

    /// Gram matrix of the cell module at a label: the coefficient of the
    /// distinguished diagonal element in C_{s0,a} C_{b,s0}.
    pub fn gram(&self, space: &TensorSpace, label_idx: usize) -> Result<Vec<Vec<Rat>>> {
        let d = &self.deltas[label_idx];
        let s0 = self.distinguished_index(label_idx);
        let diag_pos = self.element_position(label_idx, s0, s0);
        let n = d.len();
        let mut g = vec![vec![Rat::zero(); n]; n];
        #[allow(clippy::needless_range_loop)]
        for a in 0..n {
            let left = &self.elements[self.element_position(label_idx, s0, a)].mat;
            for b in 0..n {
                let right = &self.elements[self.element_position(label_idx, b, s0)].mat;
                let prod = space.mat_mul(left, right);
                let coords = self
                    .expand(space, &prod)
                    .ok_or_else(|| Error::InvalidParameter("expansion failure".into()))?;
                g[a][b] = coords[diag_pos].clone();
            }
        }
        Ok(g)
    }
}

pub fn gram_rank(g: &[Vec<Rat>]) -> usize {
    let rows: Vec<LinComb<usize>> = g
        .iter()
        .map(|row| {
            let mut r = LinComb::zero();
            for (j, v) in row.iter().enumerate() {
                r.add_term(j, v.clone());
            }
            r
        })
        .collect();
    rank_of(&rows)
}

pub fn gram_is_zero(g: &[Vec<Rat>]) -> bool {
    g.iter().all(|row| row.iter().all(|v| v.is_zero()))
}

/// The closed-form semisimplicity criterion: p - q not integral, or
/// p - q <= -m - r, or p - q >= n + t.
pub fn semisimplicity_criterion(m: usize, n: usize, r: usize, t: usize, p: &Rat, q: &Rat) -> bool {
    let d = p.clone() - q.clone();
    if !is_integer(&d) {
        return true;
    }
    d <= rat(-((m + r) as i64)) || d >= rat((n + t) as i64)
}

/// One classification row.
#[derive(Clone, Debug)]
pub struct ClassRow {
    pub label: PosetLabel,
    pub kleshchev: bool,
    pub excluded: bool,
    pub gram_rank: Option<usize>,
    pub gram_size: Option<usize>,
    pub gram_nonzero: Option<bool>,
}

pub struct Classification {
    pub rows: Vec<ClassRow>,
    pub faithful: bool,
}

impl Classification {
    /// Irreducible labels: Kleshchev and not excluded.
    pub fn irreducible_labels(&self) -> Vec<&PosetLabel> {
        self.rows
            .iter()
            .filter(|r| r.kleshchev && !r.excluded)
            .map(|r| &r.label)
            .collect()
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                serde_json::json!({
                    "f": row.label.f,
                    "lambda1": row.label.row.to_string(),
                    "lambda2": row.label.bar.to_string(),
                    "kleshchev": row.kleshchev,
                    "excluded": row.excluded,
                    "gram_rank": row.gram_rank,
                    "gram_size": row.gram_size,
                })
            })
            .collect();
        serde_json::to_string_pretty(&serde_json::json!({
            "faithful": self.faithful,
            "rows": rows,
        }))
        .expect("classification serialization")
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("f\tlambda1\tlambda2\tkleshchev\tgram_rank\tgram_size\n");
        for row in &self.rows {
            let k = if row.excluded {
                "excluded".to_string()
            } else {
                row.kleshchev.to_string()
            };
            let gr = row.gram_rank.map_or("NA".to_string(), |v| v.to_string());
            let gs = row.gram_size.map_or("NA".to_string(), |v| v.to_string());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\n",
                row.label.f, row.label.row, row.label.bar, k, gr, gs
            ));
        }
        out
    }
}

/// Classifies the irreducibles by the Kleshchev rule with the charge pairs
/// (-p, m-q) and (q, p-n), excluding f = r when r = t and both realized
/// parameters omega_0, omega_1 vanish. Gram data is attached whenever the
/// faithful realization exists, and marked unavailable otherwise.
pub fn classify(
    m: usize,
    n: usize,
    r: usize,
    t: usize,
    p: &Rat,
    q: &Rat,
) -> Result<Classification> {
    let ((u1r, u2r), (u1b, u2b)) = hecke_charges(m, n, p, q);
    let omega = crate::tensor::omega_values(m, n, p, q, 1);
    let degenerate = r == t && omega[0].is_zero() && omega[1].is_zero();
    let faithful = crate::gl::typicality(p, q, m, n) && r + t <= m.min(n);
    let basis_data = if faithful {
        let space = TensorSpace::new(m, n, r, t, p.clone(), q.clone())?;
        let basis = cellular_basis(&space)?;
        Some((space, basis))
    } else {
        None
    };
    let mut rows = Vec::new();
    for (li, label) in labels(r, t).into_iter().enumerate() {
        let kleshchev =
            is_kleshchev(&label.row, &u1r, &u2r) && is_kleshchev(&label.bar, &u1b, &u2b);
        let excluded = degenerate && label.f == r;
        let (gram_rank_v, gram_size, gram_nonzero) = match &basis_data {
            None => (None, None, None),
            Some((space, basis)) => {
                let g = basis.gram(space, li)?;
                (Some(gram_rank(&g)), Some(g.len()), Some(!gram_is_zero(&g)))
            }
        };
        rows.push(ClassRow {
            label,
            kleshchev,
            excluded,
            gram_rank: gram_rank_v,
            gram_size,
            gram_nonzero,
        });
    }
    Ok(Classification { rows, faithful })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use crate::tableau::Partition;

    fn bp(a: &[u32], b: &[u32]) -> Bipartition {
        Bipartition(Partition::new(a.to_vec()), Partition::new(b.to_vec()))
    }

    #[test]
    fn counting_identity_small() {
        for (r, t) in [(1usize, 1usize), (1, 2), (2, 1), (2, 2)] {
            let (total, expected) = counting_identity(r, t).unwrap();
            assert_eq!(total, expected, "({r},{t})");
        }
    }

    #[test]
    fn kappa_set_at_f1_r1() {
        let label = PosetLabel {
            f: 1,
            row: bp(&[], &[]),
            bar: bp(&[], &[]),
        };
        let d = delta_set(&label, 1, 1).unwrap();
        assert_eq!(d.len(), 2);
        let mut kappas: Vec<Vec<u32>> = d.iter().map(|c| c.kappa.clone()).collect();
        kappas.sort();
        assert_eq!(kappas, vec![vec![0], vec![1]]);
    }

    #[test]
    fn delta_counts_at_r1_t1() {
        // four f=0 labels with one index each, one f=1 label with two
        let all = labels(1, 1);
        assert_eq!(all.len(), 5);
        let sizes: Vec<usize> = all
            .iter()
            .map(|l| delta_set(l, 1, 1).unwrap().len())
            .collect();
        let mut by_f: Vec<(usize, usize)> = all.iter().map(|l| l.f).zip(sizes).collect();
        by_f.sort();
        assert_eq!(by_f, vec![(0, 1), (0, 1), (0, 1), (0, 1), (1, 2)]);
    }

    #[test]
    fn hecke_word_examples() {
        // shape ((1), -): word is (Y_1 - v) = (-x1 - v)
        let shape = bp(&[1], &[]);
        let tr = t_row(&shape);
        let v = ratio(3, 2);
        let w = hecke_cell_word(&shape, &tr, &tr, &v, false).unwrap();
        let expect = word::add_scalar(&word::x_tower(1).neg(), &-v.clone());
        assert_eq!(w, expect);
        // shape (-, (1)): the word is 1
        let shape = bp(&[], &[1]);
        let tr = t_row(&shape);
        let w = hecke_cell_word(&shape, &tr, &tr, &v, false).unwrap();
        assert!(word::is_one(&w));
    }

    #[test]
    fn hecke_word_rejects_non_standard_tableaux() {
        let shape = bp(&[1, 1], &[]);
        let mut bad = t_row(&shape);
        bad.fill.0 = vec![vec![2], vec![1]];
        assert!(!bad.is_standard());
        assert!(hecke_cell_word(&shape, &bad, &bad, &rat(1), false).is_err());
    }

    #[test]
    fn hecke_word_two_boxes_matches_explicit_product() {
        // shape ((2), -): (Y1 - v)(Y2 - v)(1 + s1), evaluated as operators
        let space = TensorSpace::new(2, 2, 2, 0, rat(1), rat(-5)).unwrap();
        let shape = bp(&[2], &[]);
        let tr = t_row(&shape);
        let v = rat(7);
        let w = hecke_cell_word(&shape, &tr, &tr, &v, false).unwrap();
        let got = space.eval_word_elem(&w).unwrap();
        let y1 = word::x_tower(1).neg();
        let y2 = word::x_tower(2).neg();
        let pi = word::mul(
            &word::add_scalar(&y1, &-v.clone()),
            &word::add_scalar(&y2, &-v.clone()),
        );
        let msum = word::add_scalar(&word::gen_elem(Gen::S(1)), &rat(1));
        let expect = space.eval_word_elem(&word::mul(&pi, &msum)).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn cellular_basis_full_rank_at_1_1() {
        let space = TensorSpace::new(2, 2, 1, 1, rat(1), rat(-5)).unwrap();
        let basis = cellular_basis(&space).unwrap();
        assert_eq!(basis.elements.len(), 8);
    }

    #[test]
    fn non_faithful_regimes_are_refused() {
        // atypical
        let space = TensorSpace::new(2, 2, 1, 1, rat(0), rat(0)).unwrap();
        assert!(matches!(cellular_basis(&space), Err(Error::NonFaithful(_))));
        // r + t too large
        let space = TensorSpace::new(2, 2, 2, 1, rat(1), rat(-7)).unwrap();
        assert!(matches!(cellular_basis(&space), Err(Error::NonFaithful(_))));
    }

    #[test]
    fn gram_top_layer_contains_omega_values() {
        // at f=1, r=t=1 the Gram matrix is [[w0, w1], [w1, w2]]
        let (m, n, p, q) = (3usize, 2usize, rat(2), rat(-4));
        let space = TensorSpace::new(m, n, 1, 1, p.clone(), q.clone()).unwrap();
        let basis = cellular_basis(&space).unwrap();
        let omega = crate::tensor::omega_values(m, n, &p, &q, 2);
        let li = basis.labels.iter().position(|l| l.f == 1).unwrap();
        let g = basis.gram(&space, li).unwrap();
        assert_eq!(g.len(), 2);
        let mut entries: Vec<Rat> = vec![
            g[0][0].clone(),
            g[0][1].clone(),
            g[1][0].clone(),
            g[1][1].clone(),
        ];
        entries.sort();
        let mut expect = vec![
            omega[0].clone(),
            omega[1].clone(),
            omega[1].clone(),
            omega[2].clone(),
        ];
        expect.sort();
        assert_eq!(entries, expect);
        assert_eq!(g[0][1], g[1][0]);
    }

    #[test]
    fn semisimple_criterion_examples() {
        assert!(semisimplicity_criterion(2, 2, 1, 1, &rat(3), &rat(0)));
        assert!(!semisimplicity_criterion(2, 2, 1, 1, &rat(2), &rat(0)));
        assert!(semisimplicity_criterion(2, 2, 1, 1, &ratio(1, 2), &rat(0)));
        assert!(semisimplicity_criterion(2, 2, 1, 1, &rat(0), &rat(3)));
        assert!(!semisimplicity_criterion(2, 2, 1, 1, &rat(0), &rat(2)));
    }

    #[test]
    fn classify_counts_at_1_1() {
        // non-integral p-q: all five labels
        let c = classify(2, 2, 1, 1, &ratio(1, 2), &rat(0)).unwrap();
        assert_eq!(c.irreducible_labels().len(), 5);
        // degenerate point: the f=1 label is excluded, leaving four
        let c = classify(2, 2, 1, 1, &rat(0), &rat(0)).unwrap();
        assert!(!c.faithful);
        assert_eq!(c.irreducible_labels().len(), 4);
        assert!(c.rows.iter().all(|r| r.gram_rank.is_none()));
        // typical separated parameters at (3,2)
        let c = classify(3, 2, 1, 1, &rat(2), &rat(-4)).unwrap();
        assert_eq!(c.irreducible_labels().len(), 5);
        for row in &c.rows {
            assert_eq!(row.gram_nonzero, Some(true));
        }
    }

    #[test]
    fn kleshchev_matches_gram_nonzero_at_boundary() {
        // p - q = 2: the bar-side charge difference is 0, killing one label
        let c = classify(2, 2, 1, 1, &rat(2), &rat(0)).unwrap();
        assert!(c.faithful);
        for row in &c.rows {
            assert_eq!(
                row.kleshchev,
                row.gram_nonzero.unwrap(),
                "label {}",
                row.label
            );
        }
        assert_eq!(c.irreducible_labels().len(), 3);
        // p - q = -2 mirrors on the row side
        let c = classify(2, 2, 1, 1, &rat(0), &rat(2)).unwrap();
        for row in &c.rows {
            assert_eq!(
                row.kleshchev,
                row.gram_nonzero.unwrap(),
                "label {}",
                row.label
            );
        }
        assert_eq!(c.irreducible_labels().len(), 3);
    }

    #[test]
    fn tsv_shape() {
        let c = classify(2, 2, 1, 1, &rat(3), &rat(0)).unwrap();
        let tsv = c.to_tsv();
        assert!(tsv.starts_with("f\tlambda1"));
        assert_eq!(tsv.lines().count(), 6);
    }
}
