//! Formal linear combinations over arbitrary ordered basis keys and exact
//! sparse Gaussian elimination (rank, kernel, solve-in-span).
//!
//! Pivots are chosen deterministically: rows in given order, smallest column
//! index with a nonzero entry. All arithmetic is exact rational.

use crate::rational::Rat;
use num::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Finite formal linear combination of basis keys with nonzero rational
/// coefficients. The empty combination is the zero element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinComb<B: Ord + Clone> {
    terms: BTreeMap<B, Rat>,
}

impl<B: Ord + Clone> Default for LinComb<B> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn term(key: B, coeff: Rat) -> Self {
        let mut c = Self::zero();
        c.add_term(key, coeff);
        c
    }

    pub fn basis(key: B) -> Self {
        Self::term(key, Rat::from_integer(1.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &B) -> Rat {
        self.terms.get(key).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&B, &Rat)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, key: B, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().clone() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, by: &Rat) -> Self {
        if by.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k.clone(), c.clone() * by);
        }
        out
    }

    pub fn map_keys<C: Ord + Clone>(&self, f: impl Fn(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (k, c) in self.iter() {
            out.add_term(f(k), c.clone());
        }
        out
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{k}")?;
        }
        Ok(())
    }
}

/// Sparse row over dense column positions, used internally by elimination.
type Row = BTreeMap<usize, Rat>;

fn row_axpy(target: &mut Row, coeff: &Rat, source: &Row) {
    if coeff.is_zero() {
        return;
    }
    for (j, v) in source {
        let add = v.clone() * coeff;
        match target.entry(*j) {
            std::collections::btree_map::Entry::Vacant(e) => {
                if !add.is_zero() {
                    e.insert(add);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + add;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }
}

/// Row-echelon data: pivot rows normalized to leading coefficient 1 and fully
/// reduced against each other (reduced row echelon form).
struct Echelon {
    /// pivot column -> reduced pivot row
    pivots: BTreeMap<usize, Row>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            pivots: BTreeMap::new(),
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the current pivots; returns the residue, which
    /// has no support on any pivot column.
    fn reduce(&self, mut row: Row) -> Row {
        let hit: Vec<usize> = row
            .keys()
            .copied()
            .filter(|c| self.pivots.contains_key(c))
            .collect();
        for c in hit {
            if let Some(coeff) = row.get(&c).cloned() {
                let neg = -coeff;
                row_axpy(&mut row, &neg, &self.pivots[&c]);
            }
        }
        debug_assert!(row.keys().all(|c| !self.pivots.contains_key(c)));
        row
    }

    /// Inserts a row; returns true if it increased the rank.
    fn insert(&mut self, row: Row) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lead_coeff)) = row.iter().next() else {
            return false;
        };
        let inv = Rat::from_integer(1.into()) / lead_coeff.clone();
        let mut norm: Row = BTreeMap::new();
        for (j, v) in &row {
            norm.insert(*j, v.clone() * &inv);
        }
        // back-substitute into existing pivots so the form stays reduced
        for p in self.pivots.values_mut() {
            if let Some(c) = p.get(&lead).cloned() {
                let c = -c;
                row_axpy(p, &c, &norm);
            }
        }
        self.pivots.insert(lead, norm);
        true
    }
}

/// Sparse matrix whose rows are linear combinations over an ordered column
/// key type. The column index is the sorted union of all row supports.
pub struct SparseMatrix<C: Ord + Clone> {
    rows: Vec<LinComb<C>>,
    cols: Vec<C>,
    index: BTreeMap<C, usize>,
}

impl<C: Ord + Clone> SparseMatrix<C> {
    pub fn new(rows: Vec<LinComb<C>>) -> Self {
        let mut index = BTreeMap::new();
        for row in &rows {
            for k in row.keys() {
                index.entry(k.clone()).or_insert(0usize);
            }
        }
        let cols: Vec<C> = index.keys().cloned().collect();
        for (i, c) in cols.iter().enumerate() {
            *index.get_mut(c).unwrap() = i;
        }
        SparseMatrix { rows, cols, index }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn col_keys(&self) -> &[C] {
        &self.cols
    }

    fn dense_rows(&self) -> Vec<Row> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(k, v)| (self.index[k], v.clone()))
                    .collect::<Row>()
            })
            .collect()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new();
        for row in self.dense_rows() {
            ech.insert(row);
        }
        ech.rank()
    }

    /// Basis of the null space {x : M x = 0}, as coefficient vectors over the
    /// column keys in index order. Empty iff rank = ncols.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let mut ech = Echelon::new();
        for row in self.dense_rows() {
            ech.insert(row);
        }
        let pivot_cols: Vec<usize> = ech.pivots.keys().copied().collect();
        let mut out = Vec::new();
        for free in 0..self.ncols() {
            if ech.pivots.contains_key(&free) {
                continue;
            }
            let mut x = vec![Rat::zero(); self.ncols()];
            x[free] = Rat::from_integer(1.into());
            for &pc in &pivot_cols {
                let prow = &ech.pivots[&pc];
                if let Some(v) = prow.get(&free) {
                    x[pc] = -v.clone();
                }
            }
            out.push(x);
        }
        out
    }
}

/// Rank of a list of linear combinations viewed as matrix rows.
pub fn rank_of<B: Ord + Clone>(rows: &[LinComb<B>]) -> usize {
    SparseMatrix::new(rows.to_vec()).rank()
}

/// Expresses `target` in the span of `basis`, returning one coefficient
/// vector, or `None` when the target lies outside the span. When the basis is
/// linearly independent the coefficients are unique.
pub fn solve_in_span<B: Ord + Clone>(
    target: &LinComb<B>,
    basis: &[LinComb<B>],
) -> Option<Vec<Rat>> {
    if basis.is_empty() {
        return if target.is_zero() {
            Some(Vec::new())
        } else {
            None
        };
    }
    // Rows indexed by basis keys, columns 0..n are basis coefficients and
    // column n is the target; solve by reduced elimination over the columns.
    let mut keys: BTreeMap<B, usize> = BTreeMap::new();
    for b in basis {
        for k in b.keys() {
            keys.entry(k.clone()).or_insert(0);
        }
    }
    for k in target.keys() {
        if !keys.contains_key(k) {
            return None; // a key absent from every basis element
        }
    }
    for (i, k) in keys.iter_mut().enumerate() {
        *k.1 = i;
    }
    let n = basis.len();
    // Augmented system A c = t over unknowns c: one equation per key.
    let mut ech = Echelon::new();
    let mut eqs: Vec<Row> = vec![BTreeMap::new(); keys.len()];
    for (j, b) in basis.iter().enumerate() {
        for (k, v) in b.iter() {
            eqs[keys[k]].insert(j, v.clone());
        }
    }
    for (k, v) in target.iter() {
        eqs[keys[k]].insert(n, v.clone());
    }
    for eq in eqs {
        ech.insert(eq);
    }
    // Inconsistent iff a pivot sits in the target column.
    if ech.pivots.contains_key(&n) {
        return None;
    }
    // Read one solution: free unknowns set to zero, pivots take the target
    // column of their reduced row.
    let mut c = vec![Rat::zero(); n];
    for (&pc, prow) in &ech.pivots {
        if pc < n {
            if let Some(v) = prow.get(&n) {
                c[pc] = v.clone();
            }
        }
    }
    Some(c)
}

/// Re-expands a coefficient vector over a basis; inverse check for
/// `solve_in_span`.
pub fn expand<B: Ord + Clone>(coeffs: &[Rat], basis: &[LinComb<B>]) -> LinComb<B> {
    let mut out = LinComb::zero();
    for (c, b) in coeffs.iter().zip(basis) {
        for (k, v) in b.iter() {
            out.add_term(k.clone(), v.clone() * c);
        }
    }
    out
}

/// Rank of a family of "operators" presented column by column.
///
/// `n_ops` operators act on a common domain; `columns` yields, for each
/// domain basis vector, the list of the operators' images of that vector.
/// The rank is certified incrementally by pruning the space of linear
/// relations, which exits early once it is empty — this avoids materializing
/// the full flattened coordinate matrix.
pub fn operator_rank<B, I>(n_ops: usize, columns: I) -> usize
where
    B: Ord + Clone,
    I: IntoIterator<Item = Vec<LinComb<B>>>,
{
    // relation space basis: vectors over the n_ops coefficients
    let mut rel: Vec<Vec<Rat>> = (0..n_ops)
        .map(|i| {
            let mut v = vec![Rat::zero(); n_ops];
            v[i] = Rat::from_integer(1.into());
            v
        })
        .collect();
    for imgs in columns {
        if rel.is_empty() {
            break;
        }
        debug_assert_eq!(imgs.len(), n_ops);
        // mapped candidates: for each relation r, sum_j r_j * imgs[j]
        let mapped: Vec<LinComb<B>> = rel
            .iter()
            .map(|r| {
                let mut acc = LinComb::zero();
                for (j, c) in r.iter().enumerate() {
                    if !c.is_zero() {
                        acc = acc.add(&imgs[j].scale(c));
                    }
                }
                acc
            })
            .collect();
        let ker = SparseMatrix::new(mapped).kernel_of_rows();
        rel = ker
            .into_iter()
            .map(|combo| {
                let mut v = vec![Rat::zero(); n_ops];
                for (i, c) in combo.iter().enumerate() {
                    if !c.is_zero() {
                        for (vj, rj) in v.iter_mut().zip(rel[i].iter()) {
                            *vj += c.clone() * rj;
                        }
                    }
                }
                v
            })
            .collect();
    }
    n_ops - rel.len()
}

impl<C: Ord + Clone> SparseMatrix<C> {
    /// Basis of left null space {y : y^T M = 0} — linear relations among the
    /// rows. Vectors are over row indices.
    pub fn kernel_of_rows(&self) -> Vec<Vec<Rat>> {
        // transpose and take the ordinary kernel
        let mut cols: Vec<LinComb<usize>> = vec![LinComb::zero(); self.ncols()];
        for (i, row) in self.rows.iter().enumerate() {
            for (k, v) in row.iter() {
                cols[self.index[k]].add_term(i, v.clone());
            }
        }
        let m = SparseMatrix::new(cols);
        // columns of m are row indices that appear; rows with empty support
        // are unconstrained and must be added back as kernel vectors.
        let mut out = Vec::new();
        let present: Vec<usize> = m.col_keys().to_vec();
        for ker in m.kernel() {
            let mut v = vec![Rat::zero(); self.nrows()];
            for (pos, val) in present.iter().zip(ker) {
                v[*pos] = val;
            }
            out.push(v);
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_zero() {
                let mut v = vec![Rat::zero(); self.nrows()];
                v[i] = Rat::from_integer(1.into());
                out.push(v);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};
    use num::Zero;
    use proptest::prelude::*;

    fn lc(pairs: &[(&str, i64)]) -> LinComb<String> {
        let mut c = LinComb::zero();
        for (k, v) in pairs {
            c.add_term(k.to_string(), rat(*v));
        }
        c
    }

    #[test]
    fn zero_matrix_rank_zero() {
        let rows = vec![LinComb::zero(), LinComb::zero(), LinComb::zero()];
        assert_eq!(SparseMatrix::<String>::new(rows).rank(), 0);
    }

    #[test]
    fn identity_rank_four() {
        let rows: Vec<LinComb<usize>> = (0..4).map(LinComb::basis).collect();
        assert_eq!(SparseMatrix::new(rows).rank(), 4);
    }

    #[test]
    fn hand_elimination_rank_two() {
        // rows {a+b, a-b, 2a} over keys {a,b}: by hand, eliminate a from the
        // second and third rows to get {a+b, -2b, -2b}: two pivots.
        let rows = vec![
            lc(&[("a", 1), ("b", 1)]),
            lc(&[("a", 1), ("b", -1)]),
            lc(&[("a", 2)]),
        ];
        assert_eq!(rank_of(&rows), 2);
    }

    #[test]
    fn solve_zero_target() {
        let basis = vec![lc(&[("a", 1)]), lc(&[("b", 1)])];
        assert_eq!(
            solve_in_span(&LinComb::zero(), &basis),
            Some(vec![Rat::zero(), Rat::zero()])
        );
    }

    #[test]
    fn solve_scaled_first_basis_vector() {
        let basis = vec![lc(&[("a", 1), ("b", 2)]), lc(&[("b", 1)])];
        let target = basis[0].scale(&rat(3));
        let sol = solve_in_span(&target, &basis).unwrap();
        assert_eq!(sol, vec![rat(3), rat(0)]);
        assert_eq!(expand(&sol, &basis), target);
    }

    #[test]
    fn solve_detects_missing_key() {
        let basis = vec![lc(&[("a", 1)]), lc(&[("b", 1)])];
        let target = lc(&[("c", 1)]);
        assert_eq!(solve_in_span(&target, &basis), None);
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let rows: Vec<LinComb<usize>> = (0..3).map(LinComb::basis).collect();
        assert!(SparseMatrix::new(rows).kernel().is_empty());
    }

    #[test]
    fn kernel_of_single_row() {
        let m = SparseMatrix::new(vec![lc(&[("a", 1), ("b", 1)])]);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        // proportional to (1, -1)
        let v = &ker[0];
        assert_eq!(v[0].clone() + v[1].clone(), Rat::zero());
        assert!(!v[0].is_zero());
    }

    #[test]
    fn kernel_of_dependent_rows() {
        let m = SparseMatrix::new(vec![lc(&[("a", 1), ("b", 1)]), lc(&[("a", 2), ("b", 2)])]);
        assert_eq!(m.kernel().len(), 1);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn operator_rank_with_duplicate() {
        // three "operators" on a 2-point domain, the third a duplicate
        let cols = vec![
            vec![lc(&[("x", 1)]), lc(&[("y", 2)]), lc(&[("x", 1)])],
            vec![lc(&[("y", 1)]), lc(&[("x", 1)]), lc(&[("y", 1)])],
        ];
        assert_eq!(operator_rank(3, cols), 2);
    }

    #[test]
    fn rank_nullity_200x200_seeded() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let n = 200usize;
        let rows: Vec<LinComb<usize>> = (0..n)
            .map(|_| {
                let mut r = LinComb::zero();
                for _ in 0..6 {
                    let col = rng.gen_range(0..n);
                    let val = rng.gen_range(-4i64..=4);
                    r.add_term(col, rat(val));
                }
                r
            })
            .collect();
        let m = SparseMatrix::new(rows);
        assert_eq!(m.rank() + m.kernel().len(), m.ncols());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn rank_nullity(entries in proptest::collection::vec((0usize..30, 0usize..30, -5i64..=5), 1..120)) {
            let mut rows_map: std::collections::BTreeMap<usize, LinComb<usize>> = Default::default();
            for (i, j, v) in entries {
                rows_map.entry(i).or_default().add_term(j, rat(v));
            }
            let rows: Vec<_> = rows_map.into_values().collect();
            let m = SparseMatrix::new(rows);
            prop_assert_eq!(m.rank() + m.kernel().len(), m.ncols());
            for k in m.kernel() {
                // every kernel vector really annihilates all rows
                for row in &m.rows {
                    let mut acc = Rat::zero();
                    for (key, v) in row.iter() {
                        acc += v.clone() * &k[m.index[key]];
                    }
                    prop_assert!(acc.is_zero());
                }
            }
        }

        #[test]
        fn solve_then_expand_roundtrip(
            b in proptest::collection::vec(proptest::collection::vec((0usize..6, -3i64..=3), 0..5), 1..5),
            coef in proptest::collection::vec((-3i64..=3, 1i64..=3), 1..5),
        ) {
            let basis: Vec<LinComb<usize>> = b.iter().map(|terms| {
                let mut c = LinComb::zero();
                for (k, v) in terms { c.add_term(*k, rat(*v)); }
                c
            }).collect();
            let mut target = LinComb::zero();
            for (c, base) in coef.iter().zip(&basis) {
                target = target.add(&base.scale(&ratio(c.0, c.1)));
            }
            let sol = solve_in_span(&target, &basis).expect("target built from basis");
            prop_assert_eq!(expand(&sol, &basis), target);
        }
    }
}
