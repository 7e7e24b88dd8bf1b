//! The general linear Lie superalgebra gl(m|n): matrix-unit basis, super
//! bracket, natural and dual module actions, weights, and the Kac module
//! K_{lambda_pq} with an exact normal-ordering action.

use crate::linalg::LinComb;
use crate::rational::{is_integer, rat, Rat};
use crate::{Error, Result};
use num::Zero;
use std::fmt;

/// Matrix unit E_{ij}, indices 1..m+n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct E(pub u8, pub u8);

impl fmt::Display for E {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]", self.0, self.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GlAlgebra {
    pub m: usize,
    pub n: usize,
}

impl GlAlgebra {
    pub fn new(m: usize, n: usize) -> Self {
        GlAlgebra { m, n }
    }

    pub fn dim(&self) -> usize {
        self.m + self.n
    }

    /// Parity of a basis index: even iff i <= m.
    pub fn parity_idx(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.dim());
        u8::from(i > self.m)
    }

    pub fn parity(&self, e: E) -> u8 {
        (self.parity_idx(e.0 as usize) + self.parity_idx(e.1 as usize)) % 2
    }

    fn check(&self, e: E) -> Result<()> {
        let d = self.dim();
        if e.0 < 1 || e.1 < 1 || e.0 as usize > d || e.1 as usize > d {
            return Err(Error::IndexOutOfRange(format!(
                "{e} in gl({}|{})",
                self.m, self.n
            )));
        }
        Ok(())
    }

    /// The super bracket `[E_ij, E_kl] = d_jk E_il - (-1)^{([i]+[j])([k]+[l])} d_li E_kj`.
    pub fn bracket(&self, a: E, b: E) -> Result<LinComb<E>> {
        self.check(a)?;
        self.check(b)?;
        let (i, j) = (a.0, a.1);
        let (k, l) = (b.0, b.1);
        let mut out = LinComb::zero();
        if j == k {
            out.add_term(E(i, l), rat(1));
        }
        if l == i {
            let sign = if self.parity(a) * self.parity(b) == 1 {
                rat(1)
            } else {
                rat(-1)
            };
            out.add_term(E(k, j), sign);
        }
        Ok(out)
    }

    /// Natural action E_ij v_k = d_jk v_i.
    pub fn act_natural(&self, e: E, k: usize) -> Option<usize> {
        (e.1 as usize == k).then_some(e.0 as usize)
    }

    /// Dual action E_ab v̄_i = -(-1)^{[a]([a]+[b])} d_ia v̄_b.
    pub fn act_dual(&self, e: E, i: usize) -> Option<(usize, Rat)> {
        if e.0 as usize != i {
            return None;
        }
        let exp = self.parity_idx(e.0 as usize) * self.parity(e);
        let sign = if exp % 2 == 1 { rat(1) } else { rat(-1) };
        Some((e.1 as usize, sign))
    }
}

/// A weight written in the epsilon coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Weight(pub Vec<Rat>);

impl Weight {
    pub fn size(&self) -> Rat {
        self.0.iter().fold(Rat::zero(), |a, b| a + b)
    }

    /// The rho-shifted coordinates: lambda_i + 1 - i for i <= m and
    /// lambda_i + 2m - i for i > m.
    pub fn rho_shift(&self, m: usize) -> Weight {
        Weight(
            self.0
                .iter()
                .enumerate()
                .map(|(idx, v)| {
                    let i = (idx + 1) as i64;
                    if idx < m {
                        v.clone() + rat(1 - i)
                    } else {
                        v.clone() + rat(2 * m as i64 - i)
                    }
                })
                .collect(),
        )
    }
}

/// The highest weight (p,...,p | -q,...,-q).
pub fn lambda_pq(m: usize, n: usize, p: &Rat, q: &Rat) -> Weight {
    let mut w = vec![p.clone(); m];
    w.resize(m + n, -q.clone());
    Weight(w)
}

/// Typicality of lambda_pq: p - q not an integer, or p - q <= -m, or
/// p - q >= n.
pub fn typicality(p: &Rat, q: &Rat, m: usize, n: usize) -> bool {
    let d = p.clone() - q.clone();
    if !is_integer(&d) {
        return true;
    }
    d <= rat(-(m as i64)) || d >= rat(n as i64)
}

/// The rho-shift criterion: lambda^rho_i + lambda^rho_j != 0 for all
/// i <= m < j. Must agree with `typicality` on lambda_pq.
pub fn typicality_by_rho(p: &Rat, q: &Rat, m: usize, n: usize) -> bool {
    let lam = lambda_pq(m, n, p, q).rho_shift(m);
    for i in 0..m {
        for j in m..m + n {
            if (lam.0[i].clone() + &lam.0[j]).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Basis vector of the Kac module: the 0/1 exponent matrix of the odd
/// lowering operators E_{m+i,j}, flattened as bits (i-1)*m + (j-1) and
/// multiplied in increasing bit order in front of the highest weight vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct KacVec(pub u32);

impl KacVec {
    pub fn highest() -> Self {
        KacVec(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn parity(&self) -> u8 {
        (self.degree() % 2) as u8
    }
}

impl fmt::Display for KacVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b{:b}", self.0)
    }
}

/// The Kac module K_{lambda_pq} with its exact action.
#[derive(Clone, Debug)]
pub struct KacModule {
    pub gl: GlAlgebra,
    pub p: Rat,
    pub q: Rat,
}

impl KacModule {
    pub fn new(m: usize, n: usize, p: Rat, q: Rat) -> Self {
        KacModule {
            gl: GlAlgebra::new(m, n),
            p,
            q,
        }
    }

    pub fn dim(&self) -> usize {
        1usize << (self.gl.m * self.gl.n)
    }

    pub fn basis(&self) -> Vec<KacVec> {
        (0..self.dim() as u32).map(KacVec).collect()
    }

    fn lowering_bit(&self, e: E) -> Option<u32> {
        let (a, b) = (e.0 as usize, e.1 as usize);
        let (m, n) = (self.gl.m, self.gl.n);
        if a > m && a <= m + n && b >= 1 && b <= m {
            Some(((a - m - 1) * m + (b - 1)) as u32)
        } else {
            None
        }
    }

    fn bit_gen(&self, bit: u32) -> E {
        let m = self.gl.m as u32;
        E((self.gl.m as u8) + (bit / m) as u8 + 1, (bit % m) as u8 + 1)
    }

    /// Prepends the odd lowering operator with the given bit to b^sigma:
    /// zero if the factor is already present, otherwise the sign of moving
    /// it past the earlier factors in the canonical order.
    fn prepend(&self, bit: u32, v: KacVec) -> Option<(KacVec, Rat)> {
        let mask = 1u32 << bit;
        if v.0 & mask != 0 {
            return None;
        }
        let before = (v.0 & (mask - 1)).count_ones();
        let sign = if before % 2 == 1 { rat(-1) } else { rat(1) };
        Some((KacVec(v.0 | mask), sign))
    }

    /// Diagonal acts by p or -q, raising and block-off-diagonal units kill
    /// the highest weight vector, odd lowering units prepend a factor.
    fn act_highest(&self, e: E) -> LinComb<KacVec> {
        let (a, b) = (e.0 as usize, e.1 as usize);
        let m = self.gl.m;
        if a == b {
            let c = if a <= m {
                self.p.clone()
            } else {
                -self.q.clone()
            };
            return LinComb::term(KacVec::highest(), c);
        }
        if let Some(bit) = self.lowering_bit(e) {
            let (v, s) = self.prepend(bit, KacVec::highest()).expect("empty word");
            return LinComb::term(v, s);
        }
        LinComb::zero()
    }

    /// The action of E_{ab} on a basis vector by recursive normal ordering:
    /// commute past the leading factor via the bracket and recurse on the
    /// tail.
    pub fn act(&self, e: E, v: KacVec) -> Result<LinComb<KacVec>> {
        self.gl.check(e)?;
        Ok(self.act_inner(e, v))
    }

    fn act_inner(&self, e: E, v: KacVec) -> LinComb<KacVec> {
        if v.0 == 0 {
            return self.act_highest(e);
        }
        let bit = v.0.trailing_zeros();
        let tail = KacVec(v.0 & !(1 << bit));
        let lead = self.bit_gen(bit);
        let mut out = LinComb::zero();
        // [e, lead] acting on the tail replaces the product e*lead
        for (g, c) in self.gl.bracket(e, lead).expect("checked").iter() {
            for (w, d) in self.act_inner(*g, tail).iter() {
                out.add_term(*w, c.clone() * d);
            }
        }
        // (-1)^{[e][lead]} lead * (e . tail); every lead is odd
        let sign = if self.gl.parity(e) == 1 {
            rat(-1)
        } else {
            rat(1)
        };
        let mut second = LinComb::zero();
        for (w, d) in self.act_inner(e, tail).iter() {
            if let Some((w2, s)) = self.prepend(bit, *w) {
                second.add_term(w2, s * d);
            }
        }
        out.add(&second.scale(&sign))
    }

    /// The weight of b^sigma: lambda minus sum of sigma_{ij} (eps_j - eps_{m+i}).
    pub fn weight(&self, v: KacVec) -> Weight {
        let mut w = lambda_pq(self.gl.m, self.gl.n, &self.p, &self.q).0;
        for bit in 0..(self.gl.m * self.gl.n) as u32 {
            if v.0 & (1 << bit) != 0 {
                let i = bit as usize / self.gl.m; // 0-based row of the odd block
                let j = bit as usize % self.gl.m;
                w[j] -= rat(1);
                w[self.gl.m + i] += rat(1);
            }
        }
        Weight(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn bracket_even_case() {
        let gl = GlAlgebra::new(2, 2);
        let b = gl.bracket(E(1, 2), E(2, 1)).unwrap();
        let mut expect = LinComb::basis(E(1, 1));
        expect.add_term(E(2, 2), rat(-1));
        assert_eq!(b, expect);
    }

    #[test]
    fn lowering_operators_supercommute() {
        let gl = GlAlgebra::new(2, 2);
        assert!(gl.bracket(E(3, 1), E(4, 1)).unwrap().is_zero());
    }

    #[test]
    fn odd_anticommutator() {
        let gl = GlAlgebra::new(2, 2);
        let b = gl.bracket(E(1, 3), E(3, 1)).unwrap();
        let mut expect = LinComb::basis(E(1, 1));
        expect.add_term(E(3, 3), rat(1));
        assert_eq!(b, expect);
    }

    #[test]
    fn super_jacobi_random() {
        // [a,[b,c]] = [[a,b],c] + (-1)^{[a][b]} [b,[a,c]]
        for (m, n) in [(2usize, 2usize), (3, 2), (2, 3), (1, 4)] {
            let gl = GlAlgebra::new(m, n);
            let d = gl.dim() as u8;
            let mut units = Vec::new();
            for i in 1..=d {
                for j in 1..=d {
                    units.push(E(i, j));
                }
            }
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
            let br = |x: &LinComb<E>, y: &LinComb<E>| -> LinComb<E> {
                let mut out = LinComb::zero();
                for (a, ca) in x.iter() {
                    for (b, cb) in y.iter() {
                        out = out.add(&gl.bracket(*a, *b).unwrap().scale(&(ca.clone() * cb)));
                    }
                }
                out
            };
            for _ in 0..60 {
                let a = *units.choose(&mut rng).unwrap();
                let b = *units.choose(&mut rng).unwrap();
                let c = *units.choose(&mut rng).unwrap();
                let la = LinComb::basis(a);
                let lb = LinComb::basis(b);
                let lc = LinComb::basis(c);
                let lhs = br(&la, &br(&lb, &lc));
                let sign = if gl.parity(a) * gl.parity(b) == 1 {
                    rat(-1)
                } else {
                    rat(1)
                };
                let rhs = br(&br(&la, &lb), &lc).add(&br(&lb, &br(&la, &lc)).scale(&sign));
                assert_eq!(lhs, rhs, "({m},{n}) [{a},[{b},{c}]]");
            }
        }
    }

    #[test]
    fn natural_and_dual_actions() {
        let gl = GlAlgebra::new(2, 2);
        assert_eq!(gl.act_natural(E(1, 2), 2), Some(1));
        assert_eq!(gl.act_natural(E(1, 2), 3), None);
        // E_11 v̄_1 = -v̄_1
        assert_eq!(gl.act_dual(E(1, 1), 1), Some((1, rat(-1))));
        // E_12 v̄_3 = 0
        assert_eq!(gl.act_dual(E(1, 2), 3), None);
    }

    #[test]
    fn dual_action_is_a_module_action() {
        // E_a (E_b v̄) - (-1)^{[a][b]} E_b (E_a v̄) = [E_a, E_b] v̄
        let gl = GlAlgebra::new(2, 1);
        let d = gl.dim();
        let act = |e: E, v: &LinComb<usize>| -> LinComb<usize> {
            let mut out = LinComb::zero();
            for (k, c) in v.iter() {
                if let Some((j, s)) = gl.act_dual(e, *k) {
                    out.add_term(j, s * c);
                }
            }
            out
        };
        for a1 in 1..=d as u8 {
            for b1 in 1..=d as u8 {
                for a2 in 1..=d as u8 {
                    for b2 in 1..=d as u8 {
                        let x = E(a1, b1);
                        let y = E(a2, b2);
                        for k in 1..=d {
                            let v = LinComb::basis(k);
                            let sign = if gl.parity(x) * gl.parity(y) == 1 {
                                rat(-1)
                            } else {
                                rat(1)
                            };
                            let lhs = act(x, &act(y, &v)).add(&act(y, &act(x, &v)).scale(&-sign));
                            let mut rhs = LinComb::zero();
                            for (g, c) in gl.bracket(x, y).unwrap().iter() {
                                rhs = rhs.add(&act(*g, &v).scale(c));
                            }
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn kac_highest_weight_action() {
        let k = KacModule::new(2, 2, rat(3), rat(-5));
        let v = KacVec::highest();
        assert_eq!(k.act(E(1, 1), v).unwrap(), LinComb::term(v, rat(3)));
        assert_eq!(k.act(E(3, 3), v).unwrap(), LinComb::term(v, rat(5)));
        assert!(k.act(E(1, 2), v).unwrap().is_zero());
        assert!(k.act(E(1, 3), v).unwrap().is_zero());
    }

    #[test]
    fn odd_generator_squares_to_zero() {
        let k = KacModule::new(2, 2, rat(1), rat(0));
        let once = k.act(E(3, 1), KacVec::highest()).unwrap();
        assert_eq!(once.len(), 1);
        let (w, _) = once.iter().next().unwrap();
        assert!(k.act(E(3, 1), *w).unwrap().is_zero());
    }

    #[test]
    fn raising_after_lowering_gives_p_minus_q() {
        let p = ratio(5, 2);
        let q = ratio(-1, 3);
        let k = KacModule::new(2, 2, p.clone(), q.clone());
        let low = k.act(E(3, 1), KacVec::highest()).unwrap();
        let mut out = LinComb::zero();
        for (w, c) in low.iter() {
            out = out.add(&k.act(E(1, 3), *w).unwrap().scale(c));
        }
        assert_eq!(out, LinComb::term(KacVec::highest(), p - q));
    }

    #[test]
    fn kac_action_is_a_representation_at_2_2() {
        let k = KacModule::new(2, 2, ratio(1, 2), rat(-2));
        let gl = k.gl;
        let d = gl.dim() as u8;
        let mut units = Vec::new();
        for i in 1..=d {
            for j in 1..=d {
                units.push(E(i, j));
            }
        }
        let act = |e: E, v: &LinComb<KacVec>| -> LinComb<KacVec> {
            let mut out = LinComb::zero();
            for (w, c) in v.iter() {
                out = out.add(&k.act(e, *w).unwrap().scale(c));
            }
            out
        };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..50 {
            let g = *units.choose(&mut rng).unwrap();
            let h = *units.choose(&mut rng).unwrap();
            for b in k.basis() {
                let v = LinComb::basis(b);
                let sign = if gl.parity(g) * gl.parity(h) == 1 {
                    rat(-1)
                } else {
                    rat(1)
                };
                let lhs = act(g, &act(h, &v)).add(&act(h, &act(g, &v)).scale(&-sign));
                let mut rhs = LinComb::zero();
                for (x, c) in gl.bracket(g, h).unwrap().iter() {
                    rhs = rhs.add(&act(*x, &v).scale(c));
                }
                assert_eq!(lhs, rhs, "g={g} h={h} b={b}");
            }
        }
    }

    #[test]
    fn kac_weight_compatibility_at_2_2() {
        let k = KacModule::new(2, 2, ratio(3, 4), rat(1));
        assert_eq!(k.dim(), 16);
        for b in k.basis() {
            let w = k.weight(b);
            for i in 1..=4u8 {
                let ev = k.act(E(i, i), b).unwrap();
                assert_eq!(
                    ev,
                    LinComb::term(b, w.0[i as usize - 1].clone()),
                    "E_{{{i},{i}}} on {b}"
                );
            }
        }
    }

    #[test]
    fn typicality_examples() {
        assert!(typicality(&rat(1), &rat(-5), 2, 2)); // p-q = 6 >= n
        assert!(!typicality(&rat(0), &rat(0), 2, 2)); // p-q = 0
        assert!(typicality(&ratio(1, 2), &rat(0), 2, 2)); // non-integer
        assert!(typicality(&rat(0), &rat(2), 2, 2)); // p-q = -2 <= -m
        assert!(!typicality(&rat(1), &rat(0), 2, 2)); // p-q = 1 in (-m, n)
    }

    #[test]
    fn typicality_matches_rho_criterion() {
        for m in 1..=3usize {
            for n in 1..=3usize {
                for pn in -8i64..=8 {
                    for den in [1i64, 2, 3] {
                        let p = ratio(pn, den);
                        let q = ratio(-pn + 3, 2);
                        assert_eq!(
                            typicality(&p, &q, m, n),
                            typicality_by_rho(&p, &q, m, n),
                            "p={p} q={q} ({m},{n})"
                        );
                    }
                }
            }
        }
    }
}
