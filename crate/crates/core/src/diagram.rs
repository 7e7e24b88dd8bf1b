//! Walled Brauer diagrams and the diagram algebra B_{r,t}(delta).
//!
//! Vertices live on two rows; unbarred positions 1..r sit left of the wall
//! and barred positions 1..t right of it. Vertical edges stay on one side of
//! the wall, horizontal edges cross it. The product stacks the left factor on
//! top of the right one, traces paths, and multiplies by delta per removed
//! circle.

use crate::linalg::LinComb;
use crate::perm::BiPerm;
use crate::rational::{rat_pow, Rat};
use crate::{Error, Result};
use std::fmt;

/// A perfect matching on the 2(r+t) vertices, stored as an involution on
/// vertex indices. Index layout: top row 0..n with unbarred i at i-1 and
/// barred j at r+j-1; bottom row adds n = r+t.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WalledDiagram {
    r: u8,
    t: u8,
    pair: Vec<u16>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Vertex {
    /// (top?, unbarred position 1..r)
    Un(bool, usize),
    /// (top?, barred position 1..t)
    Bar(bool, usize),
}

impl WalledDiagram {
    pub fn r(&self) -> usize {
        self.r as usize
    }

    pub fn t(&self) -> usize {
        self.t as usize
    }

    fn n(&self) -> usize {
        self.r as usize + self.t as usize
    }

    fn vertex_index(&self, v: Vertex) -> usize {
        let n = self.n();
        match v {
            Vertex::Un(top, i) => {
                debug_assert!(i >= 1 && i <= self.r as usize);
                (i - 1) + if top { 0 } else { n }
            }
            Vertex::Bar(top, j) => {
                debug_assert!(j >= 1 && j <= self.t as usize);
                (self.r as usize + j - 1) + if top { 0 } else { n }
            }
        }
    }

    fn index_vertex(&self, idx: usize) -> Vertex {
        let n = self.n();
        let top = idx < n;
        let p = idx % n;
        if p < self.r as usize {
            Vertex::Un(top, p + 1)
        } else {
            Vertex::Bar(top, p - self.r as usize + 1)
        }
    }

    pub fn partner(&self, v: Vertex) -> Vertex {
        self.index_vertex(self.pair[self.vertex_index(v)] as usize)
    }

    /// Builds a diagram from an explicit edge list, checking the wall rules.
    pub fn from_edges(r: usize, t: usize, edges: &[(Vertex, Vertex)]) -> Result<WalledDiagram> {
        let n = r + t;
        if edges.len() != n {
            return Err(Error::InvalidParameter(format!(
                "expected {n} edges for a walled ({r},{t})-diagram, got {}",
                edges.len()
            )));
        }
        let mut d = WalledDiagram {
            r: r as u8,
            t: t as u8,
            pair: vec![u16::MAX; 2 * n],
        };
        for &(a, b) in edges {
            let ia = d.vertex_index(a);
            let ib = d.vertex_index(b);
            if ia == ib || d.pair[ia] != u16::MAX || d.pair[ib] != u16::MAX {
                return Err(Error::InvalidParameter("vertex matched twice".into()));
            }
            let same_row = (ia < n) == (ib < n);
            let bar_a = matches!(a, Vertex::Bar(..));
            let bar_b = matches!(b, Vertex::Bar(..));
            if same_row && bar_a == bar_b {
                return Err(Error::InvalidParameter(
                    "horizontal edge must cross the wall".into(),
                ));
            }
            if !same_row && bar_a != bar_b {
                return Err(Error::InvalidParameter(
                    "vertical edge must not cross the wall".into(),
                ));
            }
            d.pair[ia] = ib as u16;
            d.pair[ib] = ia as u16;
        }
        Ok(d)
    }

    /// The identity diagram: every strand vertical.
    pub fn identity(r: usize, t: usize) -> WalledDiagram {
        let n = r + t;
        let mut pair = vec![0u16; 2 * n];
        for v in 0..n {
            pair[v] = (v + n) as u16;
            pair[v + n] = v as u16;
        }
        WalledDiagram {
            r: r as u8,
            t: t as u8,
            pair,
        }
    }

    /// Crossing of unbarred strands i, i+1.
    pub fn s(r: usize, t: usize, i: usize) -> Result<WalledDiagram> {
        if i < 1 || i + 1 > r {
            return Err(Error::IndexOutOfRange(format!("s_{i} in B_{{{r},{t}}}")));
        }
        let mut d = WalledDiagram::identity(r, t);
        d.swap_columns(i - 1, i);
        Ok(d)
    }

    /// Crossing of barred strands j, j+1.
    pub fn sbar(r: usize, t: usize, j: usize) -> Result<WalledDiagram> {
        if j < 1 || j + 1 > t {
            return Err(Error::IndexOutOfRange(format!("s~_{j} in B_{{{r},{t}}}")));
        }
        let mut d = WalledDiagram::identity(r, t);
        d.swap_columns(r + j - 1, r + j);
        Ok(d)
    }

    fn swap_columns(&mut self, a: usize, b: usize) {
        // reconnect the top vertices a and b to each other's bottom partners
        let n = self.n();
        let pa = self.pair[a];
        let pb = self.pair[b];
        self.pair[a] = pb;
        self.pair[pb as usize] = a as u16;
        self.pair[b] = pa;
        self.pair[pa as usize] = b as u16;
        debug_assert!(pa as usize >= n && pb as usize >= n);
    }

    /// The contraction diagram with horizontal edges [i, j-bar] on both rows
    /// and identity strands elsewhere.
    pub fn e(r: usize, t: usize, i: usize, j: usize) -> Result<WalledDiagram> {
        if i < 1 || i > r || j < 1 || j > t {
            return Err(Error::IndexOutOfRange(format!(
                "e_{{{i},{j}}} in B_{{{r},{t}}}"
            )));
        }
        let mut d = WalledDiagram::identity(r, t);
        let n = r + t;
        let u = i - 1;
        let b = r + j - 1;
        d.pair[u] = b as u16;
        d.pair[b] = u as u16;
        d.pair[u + n] = (b + n) as u16;
        d.pair[b + n] = (u + n) as u16;
        Ok(d)
    }

    /// Diagram of a permutation pair: top k joined to bottom w(k) on each side.
    pub fn perm(r: usize, t: usize, w: &BiPerm) -> WalledDiagram {
        let n = r + t;
        let mut pair = vec![0u16; 2 * n];
        for i in 1..=r {
            let top = i - 1;
            let bot = n + w.un.apply(i) - 1;
            pair[top] = bot as u16;
            pair[bot] = top as u16;
        }
        for j in 1..=t {
            let top = r + j - 1;
            let bot = n + r + w.bar.apply(j) - 1;
            pair[top] = bot as u16;
            pair[bot] = top as u16;
        }
        WalledDiagram {
            r: r as u8,
            t: t as u8,
            pair,
        }
    }

    /// Reflection along the horizontal axis (the anti-involution on basis
    /// diagrams).
    pub fn flip(&self) -> WalledDiagram {
        let n = self.n();
        let m = |v: usize| if v < n { v + n } else { v - n };
        let mut pair = vec![0u16; 2 * n];
        for v in 0..2 * n {
            pair[m(v)] = m(self.pair[v] as usize) as u16;
        }
        WalledDiagram {
            r: self.r,
            t: self.t,
            pair,
        }
    }

    /// The B_{r,t} -> B_{t,r} relabeling that swaps the two sides of the wall.
    pub fn mirror(&self) -> WalledDiagram {
        let n = self.n();
        let r = self.r as usize;
        let t = self.t as usize;
        let m = |v: usize| {
            let top = v < n;
            let p = v % n;
            let q = if p < r { t + p } else { p - r };
            q + if top { 0 } else { n }
        };
        let mut pair = vec![0u16; 2 * n];
        for v in 0..2 * n {
            pair[m(v)] = m(self.pair[v] as usize) as u16;
        }
        WalledDiagram {
            r: self.t,
            t: self.r,
            pair,
        }
    }

    /// Embeds into B_{big_r, big_t}, shifting both unbarred and barred strand
    /// labels up by `shift` and filling all other strands with verticals.
    pub fn embed(&self, big_r: usize, big_t: usize, shift: usize) -> WalledDiagram {
        assert!(self.r as usize + shift <= big_r && self.t as usize + shift <= big_t);
        let mut d = WalledDiagram::identity(big_r, big_t);
        let n = self.n();
        let big_n = big_r + big_t;
        let map = |v: usize| -> usize {
            let top = v < n;
            let p = v % n;
            let q = if p < self.r as usize {
                p + shift
            } else {
                big_r + (p - self.r as usize) + shift
            };
            q + if top { 0 } else { big_n }
        };
        // reset mapped strands, then copy edges
        for v in 0..2 * n {
            let w = self.pair[v] as usize;
            d.pair[map(v)] = map(w) as u16;
        }
        d
    }

    /// Removes the strand pair (unbarred k, barred k), which must form
    /// horizontal [k, k-bar] edges on both rows; returns the (r-1,t-1)-diagram.
    pub fn strip_pair(&self, k: usize) -> Result<WalledDiagram> {
        let r = self.r as usize;
        let t = self.t as usize;
        let top_u = self.vertex_index(Vertex::Un(true, k));
        let top_b = self.vertex_index(Vertex::Bar(true, k));
        let bot_u = self.vertex_index(Vertex::Un(false, k));
        let bot_b = self.vertex_index(Vertex::Bar(false, k));
        if self.pair[top_u] as usize != top_b || self.pair[bot_u] as usize != bot_b {
            return Err(Error::StrippingFailed);
        }
        let n = self.n();
        let small_n = n - 2;
        let keep = |v: usize| v != top_u && v != top_b && v != bot_u && v != bot_b;
        let map = |v: usize| -> usize {
            let top = v < n;
            let p = v % n;
            let q = if p < r {
                if p < k - 1 {
                    p
                } else {
                    p - 1
                }
            } else {
                let j = p - r; // 0-based bar
                (r - 1) + if j < k - 1 { j } else { j - 1 }
            };
            q + if top { 0 } else { small_n }
        };
        let mut pair = vec![0u16; 2 * small_n];
        for v in 0..2 * n {
            if keep(v) {
                pair[map(v)] = map(self.pair[v] as usize) as u16;
            }
        }
        Ok(WalledDiagram {
            r: (r - 1) as u8,
            t: (t - 1) as u8,
            pair,
        })
    }

    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for v in 0..2 * self.n() {
            let w = self.pair[v] as usize;
            if v < w {
                out.push((self.index_vertex(v), self.index_vertex(w)));
            }
        }
        out
    }

    /// Canonical JSON form: sorted edge list of [signed index, row] pairs,
    /// signed positive for unbarred and negative for barred, row 0 = top.
    pub fn to_json(&self) -> serde_json::Value {
        let enc = |v: Vertex| -> (i64, u8) {
            match v {
                Vertex::Un(top, i) => (i as i64, if top { 0 } else { 1 }),
                Vertex::Bar(top, j) => (-(j as i64), if top { 0 } else { 1 }),
            }
        };
        let edges: Vec<serde_json::Value> = self
            .edges()
            .iter()
            .map(|&(a, b)| serde_json::json!([enc(a), enc(b)]))
            .collect();
        serde_json::json!({ "r": self.r, "t": self.t, "edges": edges })
    }
}

impl fmt::Display for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: Vertex| match v {
            Vertex::Un(top, i) => format!("{}{}", i, if top { "T" } else { "B" }),
            Vertex::Bar(top, j) => format!("{}'{}", j, if top { "T" } else { "B" }),
        };
        write!(f, "{{")?;
        for (idx, (a, b)) in self.edges().into_iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}-{}", name(a), name(b))?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for WalledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Stacks d1 over d2, traces the strands through the middle row, and counts
/// the closed circles produced there.
pub fn compose(d1: &WalledDiagram, d2: &WalledDiagram) -> Result<(u32, WalledDiagram)> {
    if d1.r != d2.r || d1.t != d2.t {
        return Err(Error::SizeMismatch(format!(
            "({},{}) vs ({},{})",
            d1.r, d1.t, d2.r, d2.t
        )));
    }
    let n = d1.n();
    let mut pair = vec![u16::MAX; 2 * n];
    let mut mid_seen = vec![false; n];

    // Moves: result-top v exits d1 at top v; result-bottom v exits d2 at
    // bottom v. Middle vertex k carries d1-bottom k and d2-top k.
    enum At {
        Boundary(usize), // result index
        MidFromD1(usize),
        MidFromD2(usize),
    }
    let via_d1_top = |v: usize| -> At {
        let w = d1.pair[v] as usize;
        if w < n {
            At::Boundary(w)
        } else {
            At::MidFromD1(w - n)
        }
    };
    let via_d1_bot = |k: usize| -> At {
        let w = d1.pair[n + k] as usize;
        if w < n {
            At::Boundary(w)
        } else {
            At::MidFromD1(w - n)
        }
    };
    let via_d2_top = |k: usize| -> At {
        let w = d2.pair[k] as usize;
        if w < n {
            At::MidFromD2(w)
        } else {
            At::Boundary(n + (w - n))
        }
    };
    let via_d2_bot = |v: usize| -> At {
        let w = d2.pair[n + v] as usize;
        if w < n {
            At::MidFromD2(w)
        } else {
            At::Boundary(n + (w - n))
        }
    };

    for start in 0..2 * n {
        if pair[start] != u16::MAX {
            continue;
        }
        let mut state = if start < n {
            via_d1_top(start)
        } else {
            via_d2_bot(start - n)
        };
        let end = loop {
            match state {
                At::Boundary(e) => break e,
                At::MidFromD1(k) => {
                    mid_seen[k] = true;
                    state = via_d2_top(k);
                }
                At::MidFromD2(k) => {
                    mid_seen[k] = true;
                    state = via_d1_bot(k);
                }
            }
        };
        pair[start] = end as u16;
        pair[end] = start as u16;
    }

    // circles: components of the untouched middle vertices
    let mut circles = 0u32;
    for k0 in 0..n {
        if mid_seen[k0] {
            continue;
        }
        circles += 1;
        let mut state = At::MidFromD2(k0); // leave k0 through its d1-bottom edge
        loop {
            match state {
                At::Boundary(_) => unreachable!("circle escaped to the boundary"),
                At::MidFromD1(k) => {
                    if mid_seen[k] {
                        break;
                    }
                    mid_seen[k] = true;
                    state = via_d2_top(k);
                }
                At::MidFromD2(k) => {
                    if mid_seen[k] {
                        break;
                    }
                    mid_seen[k] = true;
                    state = via_d1_bot(k);
                }
            }
        }
    }

    Ok((
        circles,
        WalledDiagram {
            r: d1.r,
            t: d1.t,
            pair,
        },
    ))
}

/// All walled (r,t)-diagrams; there are (r+t)! of them.
pub fn enumerate(r: usize, t: usize) -> Result<Vec<WalledDiagram>> {
    if r + t > 7 {
        return Err(Error::ResourceGuard(format!(
            "enumerate({r},{t}) with r+t > 7"
        )));
    }
    let n = r + t;
    // A-side: top unbarred then bottom barred; B-side: bottom unbarred then
    // top barred. Any bijection A -> B is a valid walled diagram.
    let a_side: Vec<usize> = (0..r).chain((0..t).map(|j| 2 * n - t + j)).collect();
    let b_side: Vec<usize> = (n..n + r).chain(r..n).collect();
    let mut out = Vec::new();
    for p in crate::perm::Perm::all(n) {
        let mut pair = vec![0u16; 2 * n];
        for (k, &a) in a_side.iter().enumerate() {
            let b = b_side[p.apply(k + 1) - 1];
            pair[a] = b as u16;
            pair[b] = a as u16;
        }
        out.push(WalledDiagram {
            r: r as u8,
            t: t as u8,
            pair,
        });
    }
    Ok(out)
}

pub type DElem = LinComb<WalledDiagram>;

/// The walled Brauer algebra context: sizes and the circle parameter.
#[derive(Clone, Debug)]
pub struct DiagramAlgebra {
    pub r: usize,
    pub t: usize,
    pub delta: Rat,
}

impl DiagramAlgebra {
    pub fn new(r: usize, t: usize, delta: Rat) -> Self {
        DiagramAlgebra { r, t, delta }
    }

    pub fn one(&self) -> DElem {
        DElem::basis(WalledDiagram::identity(self.r, self.t))
    }

    pub fn elem(&self, d: WalledDiagram) -> DElem {
        debug_assert_eq!((d.r as usize, d.t as usize), (self.r, self.t));
        DElem::basis(d)
    }

    pub fn scalar(&self, c: &Rat) -> DElem {
        DElem::term(WalledDiagram::identity(self.r, self.t), c.clone())
    }

    pub fn gen_s(&self, i: usize) -> Result<DElem> {
        Ok(DElem::basis(WalledDiagram::s(self.r, self.t, i)?))
    }

    pub fn gen_sbar(&self, j: usize) -> Result<DElem> {
        Ok(DElem::basis(WalledDiagram::sbar(self.r, self.t, j)?))
    }

    pub fn gen_e(&self, i: usize, j: usize) -> Result<DElem> {
        Ok(DElem::basis(WalledDiagram::e(self.r, self.t, i, j)?))
    }

    pub fn perm_elem(&self, w: &BiPerm) -> DElem {
        DElem::basis(WalledDiagram::perm(self.r, self.t, w))
    }

    pub fn mul(&self, a: &DElem, b: &DElem) -> DElem {
        let mut out = DElem::zero();
        for (da, ca) in a.iter() {
            for (db, cb) in b.iter() {
                let (circles, d) = compose(da, db).expect("same-size algebra elements");
                out.add_term(d, ca.clone() * cb * rat_pow(&self.delta, circles));
            }
        }
        out
    }

    pub fn mul_all(&self, factors: &[&DElem]) -> DElem {
        let mut acc = self.one();
        for f in factors {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn pow(&self, a: &DElem, k: u32) -> DElem {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    pub fn commutator(&self, a: &DElem, b: &DElem) -> DElem {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// The anti-involution: reflect every diagram, keep coefficients.
    pub fn sigma(&self, a: &DElem) -> DElem {
        a.map_keys(|d| d.flip())
    }

    /// All diagrams of this algebra.
    pub fn basis(&self) -> Result<Vec<WalledDiagram>> {
        enumerate(self.r, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
    use crate::rational::rat;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn alg(r: usize, t: usize) -> DiagramAlgebra {
        DiagramAlgebra::new(r, t, rat(5))
    }

    #[test]
    fn s_squares_to_identity() {
        let a = alg(2, 1);
        let s1 = a.gen_s(1).unwrap();
        assert_eq!(a.mul(&s1, &s1), a.one());
    }

    #[test]
    fn e_squared_is_delta_e() {
        let a = alg(1, 1);
        let e1 = a.gen_e(1, 1).unwrap();
        assert_eq!(a.mul(&e1, &e1), e1.scale(&rat(5)));
    }

    #[test]
    fn e_s_e_contracts() {
        let a = alg(2, 1);
        let e1 = a.gen_e(1, 1).unwrap();
        let s1 = a.gen_s(1).unwrap();
        assert_eq!(a.mul_all(&[&e1, &s1, &e1]), e1);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate(1, 1).unwrap().len(), 2);
        assert_eq!(enumerate(2, 0).unwrap().len(), 2);
        assert_eq!(enumerate(2, 2).unwrap().len(), 24);
        assert!(enumerate(5, 3).is_err());
    }

    #[test]
    fn enumerate_has_no_duplicates() {
        let ds = enumerate(2, 2).unwrap();
        let set: std::collections::BTreeSet<_> = ds.iter().cloned().collect();
        assert_eq!(set.len(), ds.len());
    }

    #[test]
    fn e_ij_equals_conjugation_formula() {
        // e_{i,j} = s̄_{j,1} s_{i,1} e_1 s_{1,i} s̄_{1,j}
        for (r, t) in [(2, 1), (3, 2), (2, 2)] {
            let a = alg(r, t);
            for i in 1..=r {
                for j in 1..=t {
                    let su = |x, y| {
                        a.perm_elem(&BiPerm {
                            un: Perm::cycle(r, x, y).unwrap(),
                            bar: Perm::identity(t),
                        })
                    };
                    let sb = |x, y| {
                        a.perm_elem(&BiPerm {
                            un: Perm::identity(r),
                            bar: Perm::cycle(t, x, y).unwrap(),
                        })
                    };
                    let e1 = a.gen_e(1, 1).unwrap();
                    let prod = a.mul_all(&[&sb(j, 1), &su(i, 1), &e1, &su(1, i), &sb(1, j)]);
                    assert_eq!(
                        prod,
                        a.gen_e(i, j).unwrap(),
                        "e_{{{i},{j}}} in B_{{{r},{t}}}"
                    );
                }
            }
        }
    }

    #[test]
    fn e21_is_s1_e1_s1() {
        let a = alg(2, 1);
        let s1 = a.gen_s(1).unwrap();
        let e1 = a.gen_e(1, 1).unwrap();
        assert_eq!(a.mul_all(&[&s1, &e1, &s1]), a.gen_e(2, 1).unwrap());
    }

    #[test]
    fn perm_diagrams_are_a_homomorphism() {
        let a = alg(3, 2);
        for u in BiPerm::all(3, 2) {
            for v in [
                BiPerm {
                    un: Perm::adjacent(3, 1),
                    bar: Perm::identity(2),
                },
                BiPerm {
                    un: Perm::cycle(3, 1, 3).unwrap(),
                    bar: Perm::adjacent(2, 1),
                },
            ] {
                assert_eq!(
                    a.mul(&a.perm_elem(&u), &a.perm_elem(&v)),
                    a.perm_elem(&u.then(&v))
                );
            }
        }
    }

    #[test]
    fn sigma_fixes_generators_and_reverses_products() {
        let a = alg(2, 2);
        let e1 = a.gen_e(1, 1).unwrap();
        let s1 = a.gen_s(1).unwrap();
        assert_eq!(a.sigma(&e1), e1);
        assert_eq!(a.sigma(&s1), s1);
        // sigma(s1 e1) = e1 s1, built from the reflection itself
        assert_eq!(a.sigma(&a.mul(&s1, &e1)), a.mul(&e1, &s1));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let basis = enumerate(2, 2).unwrap();
        for _ in 0..40 {
            let d1 = basis.choose(&mut rng).unwrap();
            let d2 = basis.choose(&mut rng).unwrap();
            let x = DElem::basis(d1.clone());
            let y = DElem::basis(d2.clone());
            assert_eq!(a.sigma(&a.mul(&x, &y)), a.mul(&a.sigma(&y), &a.sigma(&x)));
            assert_eq!(a.sigma(&a.sigma(&x)), x);
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        for (r, t) in [(1usize, 1usize), (2, 1)] {
            let a = alg(r, t);
            let basis = enumerate(r, t).unwrap();
            for d1 in &basis {
                for d2 in &basis {
                    for d3 in &basis {
                        let x = DElem::basis(d1.clone());
                        let y = DElem::basis(d2.clone());
                        let z = DElem::basis(d3.clone());
                        assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_random_medium() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (r, t) in [(3usize, 2usize), (2, 3), (4, 1)] {
            let a = alg(r, t);
            let basis = enumerate(r, t).unwrap();
            for _ in 0..50 {
                let x = DElem::basis(basis.choose(&mut rng).unwrap().clone());
                let y = DElem::basis(basis.choose(&mut rng).unwrap().clone());
                let z = DElem::basis(basis.choose(&mut rng).unwrap().clone());
                assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
            }
        }
    }

    #[test]
    fn closure_under_products() {
        let basis = enumerate(2, 1).unwrap();
        let set: std::collections::BTreeSet<_> = basis.iter().cloned().collect();
        for d1 in &basis {
            for d2 in &basis {
                let (_, d3) = compose(d1, d2).unwrap();
                assert!(set.contains(&d3));
            }
        }
    }

    #[test]
    fn mirror_is_an_isomorphism_onto_swapped_sides() {
        let a = alg(2, 2);
        let b = alg(2, 2);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let basis = enumerate(2, 2).unwrap();
        for _ in 0..40 {
            let d1 = basis.choose(&mut rng).unwrap();
            let d2 = basis.choose(&mut rng).unwrap();
            let (c, d3) = compose(d1, d2).unwrap();
            let (cm, d3m) = compose(&d1.mirror(), &d2.mirror()).unwrap();
            assert_eq!(c, cm);
            assert_eq!(d3.mirror(), d3m);
            let _ = (&a, &b);
        }
        // generator images: s_i -> s̄_i, e_1 -> e_1, s̄_j -> s_j
        assert_eq!(
            WalledDiagram::s(2, 2, 1).unwrap().mirror(),
            WalledDiagram::sbar(2, 2, 1).unwrap()
        );
        assert_eq!(
            WalledDiagram::e(2, 2, 1, 1).unwrap().mirror(),
            WalledDiagram::e(2, 2, 1, 1).unwrap()
        );
    }

    #[test]
    fn strip_pair_roundtrip() {
        let d = WalledDiagram::e(2, 2, 2, 2).unwrap();
        let stripped = d.strip_pair(2).unwrap();
        assert_eq!(stripped, WalledDiagram::identity(1, 1));
        assert!(WalledDiagram::identity(2, 2).strip_pair(2).is_err());
    }

    #[test]
    fn embed_keeps_products() {
        let a_small = alg(1, 1);
        let a_big = alg(3, 3);
        let e = a_small.gen_e(1, 1).unwrap();
        let prod_small = a_small.mul(&e, &e);
        let lifted: DElem = e.map_keys(|d| d.embed(3, 3, 1));
        let prod_big = a_big.mul(&lifted, &lifted);
        assert_eq!(prod_big, prod_small.map_keys(|d| d.embed(3, 3, 1)));
    }

    #[test]
    fn compose_rejects_size_mismatch() {
        let d1 = WalledDiagram::identity(2, 1);
        let d2 = WalledDiagram::identity(1, 2);
        assert!(compose(&d1, &d2).is_err());
    }

    #[test]
    fn json_shape() {
        let d = WalledDiagram::e(1, 1, 1, 1).unwrap();
        let v = d.to_json();
        assert_eq!(v["r"], 1);
        let edges = v["edges"].as_array().unwrap();
        assert_eq!(edges.len(), 2);
    }
}
