//! Abstract generator words and their formal linear combinations.
//!
//! A `Word` is a sequence of generator symbols; a `WordElem` is a rational
//! combination of words. The anti-involution acts by reversing every word,
//! since each generator symbol is fixed by it.

use crate::linalg::LinComb;
use crate::rational::Rat;
use num::One;
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gen {
    S(u8),
    SBar(u8),
    E1,
    X1,
    XBar1,
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gen::S(i) => write!(f, "s{i}"),
            Gen::SBar(i) => write!(f, "s~{i}"),
            Gen::E1 => write!(f, "e1"),
            Gen::X1 => write!(f, "x1"),
            Gen::XBar1 => write!(f, "x~1"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word(pub Vec<Gen>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    pub fn gen(g: Gen) -> Self {
        Word(vec![g])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ".")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

pub type WordElem = LinComb<Word>;

/// The multiplicative unit.
pub fn one() -> WordElem {
    WordElem::basis(Word::one())
}

pub fn gen_elem(g: Gen) -> WordElem {
    WordElem::basis(Word::gen(g))
}

pub fn scalar(c: Rat) -> WordElem {
    WordElem::term(Word::one(), c)
}

/// Bilinear concatenation product.
pub fn mul(a: &WordElem, b: &WordElem) -> WordElem {
    let mut out = WordElem::zero();
    for (wa, ca) in a.iter() {
        for (wb, cb) in b.iter() {
            out.add_term(wa.concat(wb), ca.clone() * cb);
        }
    }
    out
}

pub fn mul_all(factors: &[WordElem]) -> WordElem {
    let mut acc = one();
    for f in factors {
        acc = mul(&acc, f);
    }
    acc
}

pub fn pow(a: &WordElem, k: u32) -> WordElem {
    let mut acc = one();
    for _ in 0..k {
        acc = mul(&acc, a);
    }
    acc
}

/// Word-level anti-involution: reverse every word.
pub fn reversed(a: &WordElem) -> WordElem {
    let mut out = WordElem::zero();
    for (w, c) in a.iter() {
        out.add_term(w.reversed(), c.clone());
    }
    out
}

/// x_i in terms of x_1 and the s letters: x_{i} = s_{i-1} x_{i-1} s_{i-1} - s_{i-1}.
pub fn x_tower(i: usize) -> WordElem {
    assert!(i >= 1);
    let mut acc = gen_elem(Gen::X1);
    for k in 1..i {
        let s = gen_elem(Gen::S(k as u8));
        acc = mul(&mul(&s, &acc), &s).sub(&s);
    }
    acc
}

/// x̄_j in terms of x̄_1 and the s̄ letters.
pub fn xbar_tower(j: usize) -> WordElem {
    assert!(j >= 1);
    let mut acc = gen_elem(Gen::XBar1);
    for k in 1..j {
        let s = gen_elem(Gen::SBar(k as u8));
        acc = mul(&mul(&s, &acc), &s).sub(&s);
    }
    acc
}

/// e_{i,j} as a generator word via the conjugation formula
/// s̄_{j,1} s_{i,1} e_1 s_{1,i} s̄_{1,j}.
pub fn e_ij_word(i: usize, j: usize) -> Word {
    let mut gens: Vec<Gen> = Vec::new();
    // s̄_{j,1}: inverse cycle letters
    if j > 1 {
        gens.extend((1..j).rev().map(|k| Gen::SBar(k as u8)));
    }
    if i > 1 {
        gens.extend((1..i).rev().map(|k| Gen::S(k as u8)));
    }
    gens.push(Gen::E1);
    if i > 1 {
        gens.extend((1..i).map(|k| Gen::S(k as u8)));
    }
    if j > 1 {
        gens.extend((1..j).map(|k| Gen::SBar(k as u8)));
    }
    Word(gens)
}

/// Scalar helper: (element) + c·1.
pub fn add_scalar(a: &WordElem, c: &Rat) -> WordElem {
    let mut out = a.clone();
    out.add_term(Word::one(), c.clone());
    out
}

/// Convenience: 1·coefficient on the identity word if present.
pub fn one_coeff(a: &WordElem) -> Rat {
    a.coeff(&Word::one())
}

pub fn is_one(a: &WordElem) -> bool {
    a.len() == 1 && a.coeff(&Word::one()).is_one()
}
