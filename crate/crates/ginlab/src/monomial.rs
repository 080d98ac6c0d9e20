//! Monomials and monomial orders.
//!
//! Variables are x_1 > x_2 > … > x_n under every supported order. GrevLex is
//! the revlex order: degrees compare first, ties break at the last nonzero
//! entry of the exponent difference, a negative entry meaning greater. The
//! last variable x_n is the cheapest, so adjoining a variable appends a
//! smallest one.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// A monomial in its ambient ring: exponent vector of length n with the total
/// degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(n: usize) -> Monomial {
        Monomial {
            exps: vec![0; n],
            deg: 0,
        }
    }

    /// The variable x_i, 0-based index.
    pub fn var(n: usize, i: usize) -> Monomial {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, rhs: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        let exps = self
            .exps
            .iter()
            .zip(&rhs.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps,
            deg: self.deg + rhs.deg,
        }
    }

    pub fn divides(&self, rhs: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), rhs.nvars());
        self.deg <= rhs.deg && self.exps.iter().zip(&rhs.exps).all(|(a, b)| a <= b)
    }

    /// rhs / self, requires divisibility.
    pub fn quotient(&self, rhs: &Monomial) -> Monomial {
        debug_assert!(self.divides(rhs));
        let exps = rhs
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Monomial {
            exps,
            deg: rhs.deg - self.deg,
        }
    }

    pub fn lcm(&self, rhs: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&rhs.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, rhs: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&rhs.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn is_coprime(&self, rhs: &Monomial) -> bool {
        self.exps.iter().zip(&rhs.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Largest variable index (1-based) dividing the monomial; 0 for 1.
    pub fn max_index(&self) -> usize {
        self.exps
            .iter()
            .rposition(|&e| e > 0)
            .map(|i| i + 1)
            .unwrap_or(0)
    }

    /// Reinterpret in a ring with `extra` additional (cheapest) variables.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.extend(std::iter::repeat(0).take(extra));
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Apply a variable permutation: position i of the result holds the
    /// exponent of variable perm[i].
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let exps = perm.iter().map(|&j| self.exps[j]).collect();
        Monomial {
            exps,
            deg: self.deg,
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Term orders. `Elim { block }` is an elimination order used internally by
/// `eliminate`: the first `block` variables dominate, with graded revlex
/// inside each block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GrLex,
    GrevLex,
    Elim { block: usize },
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars() != b.nvars() {
            return Err(Error::DimensionMismatch(format!(
                "monomials in {} and {} variables",
                a.nvars(),
                b.nvars()
            )));
        }
        Ok(self.cmp_unchecked(a, b))
    }

    pub fn cmp_unchecked(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => lex_cmp(&a.exps, &b.exps),
            MonomialOrder::GrLex => a
                .deg
                .cmp(&b.deg)
                .then_with(|| lex_cmp(&a.exps, &b.exps)),
            MonomialOrder::GrevLex => grevlex_cmp(&a.exps, &b.exps, a.deg, b.deg),
            MonomialOrder::Elim { block } => {
                let (a1, a2) = a.exps.split_at((*block).min(a.exps.len()));
                let (b1, b2) = b.exps.split_at((*block).min(b.exps.len()));
                let d = |s: &[u32]| s.iter().sum::<u32>();
                grevlex_cmp(a1, b1, d(a1), d(b1))
                    .then_with(|| grevlex_cmp(a2, b2, d(a2), d(b2)))
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => write!(f, "lex"),
            MonomialOrder::GrLex => write!(f, "grlex"),
            MonomialOrder::GrevLex => write!(f, "grevlex"),
            MonomialOrder::Elim { block } => write!(f, "elim({block})"),
        }
    }
}

fn lex_cmp(a: &[u32], b: &[u32]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn grevlex_cmp(a: &[u32], b: &[u32], da: u32, db: u32) -> Ordering {
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (x, y) in a.iter().zip(b).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // Last nonzero entry of a-b negative means a is greater.
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// All monomials of the exact degree `d` in `n` variables, in descending
/// GrevLex order. This fixed enumeration indexes census coefficient tuples.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    let mut exps = vec![0u32; n];
    fill(&mut out, &mut exps, 0, d);
    out.sort_by(|a, b| MonomialOrder::GrevLex.cmp_unchecked(b, a));
    out
}

fn fill(out: &mut Vec<Monomial>, exps: &mut Vec<u32>, i: usize, rem: u32) {
    if i == exps.len() - 1 {
        exps[i] = rem;
        out.push(Monomial::new(exps.clone()));
        exps[i] = 0;
        return;
    }
    for e in (0..=rem).rev() {
        exps[i] = e;
        fill(out, exps, i + 1, rem - e);
        exps[i] = 0;
    }
}

/// dim_k Sym^d(k^n), the number of monomials of degree d in n variables.
pub fn sym_dimension(n: usize, d: u32) -> u64 {
    // binom(d + n - 1, n - 1)
    if n == 0 {
        return if d == 0 { 1 } else { 0 };
    }
    let mut acc: u64 = 1;
    for k in 1..=(n as u64 - 1) {
        acc = acc * (d as u64 + k) / k;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn equal_monomials_compare_equal() {
        let a = m(&[1, 2, 0]);
        for ord in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
            assert_eq!(ord.compare(&a, &a).unwrap(), Ordering::Equal);
        }
    }

    #[test]
    fn variable_convention_x1_greatest() {
        let x1 = Monomial::var(3, 0);
        let x2 = Monomial::var(3, 1);
        for ord in [MonomialOrder::Lex, MonomialOrder::GrLex, MonomialOrder::GrevLex] {
            assert_eq!(ord.compare(&x1, &x2).unwrap(), Ordering::Greater);
        }
    }

    #[test]
    fn grevlex_tie_break() {
        // x_2^2 vs x_1 x_3 over 3 variables: difference (-1, 2, -1), last
        // nonzero entry -1, so x_2^2 is greater.
        let a = m(&[0, 2, 0]);
        let b = m(&[1, 0, 1]);
        assert_eq!(
            MonomialOrder::GrevLex.compare(&a, &b).unwrap(),
            Ordering::Greater
        );
        // GrLex breaks the same tie the other way.
        assert_eq!(
            MonomialOrder::GrLex.compare(&a, &b).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn length_mismatch_is_error() {
        let a = m(&[1, 0]);
        let b = m(&[1, 0, 0]);
        assert!(MonomialOrder::GrevLex.compare(&a, &b).is_err());
    }

    #[test]
    fn elim_order_dominates_block() {
        // With block = 1, any monomial containing x_1 beats any without it.
        let ord = MonomialOrder::Elim { block: 1 };
        let a = m(&[1, 0, 0]);
        let b = m(&[0, 5, 5]);
        assert_eq!(ord.compare(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn degree_two_enumeration() {
        let ms = monomials_of_degree(2, 2);
        assert_eq!(ms.len(), 3);
        assert_eq!(ms[0], m(&[2, 0]));
        assert_eq!(ms[1], m(&[1, 1]));
        assert_eq!(ms[2], m(&[0, 2]));
        assert_eq!(sym_dimension(2, 2), 3);
        assert_eq!(sym_dimension(3, 2), 6);
        assert_eq!(sym_dimension(4, 3), 20);
    }

    #[test]
    fn divisibility_and_quotient() {
        let a = m(&[1, 1, 0]);
        let b = m(&[2, 1, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.quotient(&b), m(&[1, 0, 1]));
        assert_eq!(a.lcm(&b), b);
        assert_eq!(m(&[2, 0, 0]).max_index(), 1);
        assert_eq!(m(&[1, 0, 2]).max_index(), 3);
        assert_eq!(Monomial::one(3).max_index(), 0);
    }
}
