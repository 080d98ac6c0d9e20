//! Sparse exact multivariate polynomials, ambient rings, and linear changes
//! of coordinates.
//!
//! Term lists are kept strictly descending in the ring's order with no zero
//! coefficients; every constructor re-establishes this, so re-sorting happens
//! on order change and never lazily.

use crate::error::{Error, Result};
use crate::field::{Coeff, Field};
use crate::monomial::{Monomial, MonomialOrder};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Ambient polynomial ring context: variable count, coefficient field, and
/// term order. Cheap to copy; polynomials embed it by value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    pub n: usize,
    pub field: Field,
    pub order: MonomialOrder,
}

impl PolyRing {
    pub fn new(n: usize, field: Field, order: MonomialOrder) -> PolyRing {
        PolyRing { n, field, order }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: Vec::new(),
        }
    }

    pub fn constant(&self, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: *self,
            terms: vec![(Monomial::one(self.n), c)],
        }
    }

    pub fn one(&self) -> Polynomial {
        self.constant(self.field.one())
    }

    /// The variable x_{i+1} (0-based index).
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial {
            ring: *self,
            terms: vec![(Monomial::var(self.n, i), self.field.one())],
        }
    }

    pub fn monomial(&self, m: Monomial, c: Coeff) -> Polynomial {
        debug_assert_eq!(m.nvars(), self.n);
        if c.is_zero() {
            return self.zero();
        }
        Polynomial {
            ring: *self,
            terms: vec![(m, c)],
        }
    }

    pub fn from_terms(&self, terms: Vec<(Monomial, Coeff)>) -> Polynomial {
        let mut map: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), self.n);
            let entry = map.entry(m).or_insert_with(|| self.field.zero());
            *entry = entry.add(&c);
        }
        let mut terms: Vec<(Monomial, Coeff)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.order.cmp_unchecked(&b.0, &a.0));
        Polynomial { ring: *self, terms }
    }

    /// Same ring with a different term order.
    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { order, ..*self }
    }

    /// Random homogeneous polynomial of the exact degree `d` (may be zero).
    pub fn random_homogeneous(&self, d: u32, rng: &mut impl Rng, pool: i64) -> Polynomial {
        let terms = crate::monomial::monomials_of_degree(self.n, d)
            .into_iter()
            .map(|m| (m, self.field.random(rng, pool)))
            .collect();
        self.from_terms(terms)
    }
}

/// A tuple 𝐝 = (d_1, …, d_r) of prescribed generator degrees, all ≥ 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DegreeTuple(Vec<u32>);

impl DegreeTuple {
    pub fn new(degrees: Vec<u32>) -> Result<DegreeTuple> {
        if degrees.is_empty() {
            return Err(Error::Domain("degree tuple must be nonempty".into()));
        }
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::Domain("degrees must be positive".into()));
        }
        Ok(DegreeTuple(degrees))
    }

    pub fn degrees(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Sparse polynomial: terms sorted strictly descending in the ring's order,
/// no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: PolyRing,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the ring's order.
    pub fn leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn check_same_ring(&self, rhs: &Polynomial) -> Result<()> {
        if self.ring != rhs.ring {
            return Err(Error::DimensionMismatch(
                "polynomials belong to different rings".into(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &rhs.terms[j];
            match self.ring.order.cmp_unchecked(ma, mb) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca.add(cb);
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Polynomial {
            ring: self.ring,
            terms: out,
        }
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Polynomial) -> Polynomial {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        Polynomial {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    /// self - c · m · g, the division-step primitive.
    pub fn reduce_by(&self, c: &Coeff, m: &Monomial, g: &Polynomial) -> Polynomial {
        let shifted = Polynomial {
            ring: g.ring,
            terms: g
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.mul(c).neg()))
                .collect(),
        };
        self.add(&shifted)
    }

    pub fn mul(&self, rhs: &Polynomial) -> Polynomial {
        debug_assert_eq!(self.ring, rhs.ring);
        let mut map: HashMap<Monomial, Coeff> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let add = ca.mul(cb);
                let entry = map.entry(m).or_insert_with(|| self.ring.field.zero());
                *entry = entry.add(&add);
            }
        }
        let mut terms: Vec<(Monomial, Coeff)> =
            map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| self.ring.order.cmp_unchecked(&b.0, &a.0));
        Polynomial {
            ring: self.ring,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Monic multiple (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, lc)) => {
                if lc.is_one() {
                    self.clone()
                } else {
                    self.scale(&lc.inv().expect("nonzero leading coefficient"))
                }
            }
        }
    }

    /// Move into a ring with the same variables but a different order,
    /// re-sorting the terms.
    pub fn reorder(&self, order: MonomialOrder) -> Polynomial {
        let ring = self.ring.with_order(order);
        ring.from_terms(self.terms.clone())
    }

    /// Reinterpret in a ring with `extra` additional cheapest variables.
    pub fn extend(&self, extra: usize) -> Polynomial {
        let ring = PolyRing {
            n: self.ring.n + extra,
            ..self.ring
        };
        Polynomial {
            ring,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.extend(extra), c.clone()))
                .collect(),
        }
        // Grevlex/lex/grlex comparisons are preserved by appending zero
        // exponents, so the sort invariant still holds.
    }

    /// Apply a variable permutation (see `Monomial::permute`) into `ring`.
    pub fn permute_into(&self, ring: PolyRing, perm: &[usize]) -> Polynomial {
        ring.from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.permute(perm), c.clone()))
                .collect(),
        )
    }

    /// Partial derivative with respect to variable i (0-based).
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exponent(i) > 0)
            .map(|(m, c)| {
                let e = m.exponent(i);
                let mut exps = m.exponents().to_vec();
                exps[i] = e - 1;
                (Monomial::new(exps), c.mul(&self.ring.field.from_i64(e as i64)))
            })
            .collect();
        self.ring.from_terms(terms)
    }

    /// Evaluate at a point (full substitution of field elements).
    pub fn eval(&self, point: &[Coeff]) -> Coeff {
        debug_assert_eq!(point.len(), self.ring.n);
        let mut acc = self.ring.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Substitute each variable by the given polynomial.
    pub fn substitute(&self, images: &[Polynomial], target: &PolyRing) -> Polynomial {
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = match c {
                Coeff::Rat(r) => {
                    use num_traits::Signed;
                    (r.is_negative(), Coeff::Rat(r.abs()))
                }
                fp => (false, fp.clone()),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// An invertible n×n change of coordinates σ ∈ GL_n; the inverse is computed
/// at construction time and verified by multiplication.
#[derive(Debug, Clone)]
pub struct LinearChange {
    n: usize,
    field: Field,
    matrix: Vec<Vec<Coeff>>,
    inverse: Vec<Vec<Coeff>>,
}

impl LinearChange {
    pub fn new(field: Field, matrix: Vec<Vec<Coeff>>) -> Result<LinearChange> {
        let n = matrix.len();
        if matrix.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch("matrix is not square".into()));
        }
        let inverse = crate::linalg::invert(&matrix, field).ok_or(Error::SingularMatrix)?;
        let prod = crate::linalg::mat_mul(&matrix, &inverse, field);
        for (i, row) in prod.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                let ok = if i == j { c.is_one() } else { c.is_zero() };
                if !ok {
                    return Err(Error::Internal("inverse verification failed".into()));
                }
            }
        }
        Ok(LinearChange {
            n,
            field,
            matrix,
            inverse,
        })
    }

    pub fn identity(field: Field, n: usize) -> LinearChange {
        let matrix: Vec<Vec<Coeff>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearChange::new(field, matrix).expect("identity is invertible")
    }

    /// Random dense matrix with entries in [-pool, pool] (uniform over F_p),
    /// resampled until invertible.
    pub fn random(
        field: Field,
        n: usize,
        rng: &mut impl Rng,
        pool: i64,
        retries: usize,
    ) -> Result<LinearChange> {
        for _ in 0..retries {
            let matrix: Vec<Vec<Coeff>> = (0..n)
                .map(|_| (0..n).map(|_| field.random(rng, pool)).collect())
                .collect();
            if let Ok(g) = LinearChange::new(field, matrix) {
                return Ok(g);
            }
        }
        Err(Error::NonGenericField(format!(
            "no invertible {n}x{n} sample over {field} after {retries} tries"
        )))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn inverse(&self) -> LinearChange {
        LinearChange {
            n: self.n,
            field: self.field,
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// σ·f with x_i ↦ Σ_j g_{ij} x_j.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring().n != self.n {
            return Err(Error::DimensionMismatch(format!(
                "change of coordinates on {} variables applied to a polynomial in {}",
                self.n,
                f.ring().n
            )));
        }
        if f.ring().field != self.field {
            return Err(Error::DimensionMismatch(
                "change of coordinates over a different field".into(),
            ));
        }
        let ring = *f.ring();
        let images: Vec<Polynomial> = (0..self.n)
            .map(|i| {
                let terms = (0..self.n)
                    .map(|j| (Monomial::var(self.n, j), self.matrix[i][j].clone()))
                    .collect();
                ring.from_terms(terms)
            })
            .collect();
        Ok(f.substitute(&images, &ring))
    }
}

/// σ·f, see `LinearChange::apply`.
pub fn apply_linear_change(f: &Polynomial, g: &LinearChange) -> Result<Polynomial> {
    g.apply(f)
}

/// The cone map I ↦ I[x]: the same generators reinterpreted in n+1 variables.
/// The adjoined variable is the cheapest under every supported order.
pub fn adjoin_variable(gens: &[Polynomial]) -> Vec<Polynomial> {
    gens.iter().map(|f| f.extend(1)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_ring(n: usize) -> PolyRing {
        PolyRing::new(n, Field::Rationals, MonomialOrder::GrevLex)
    }

    #[test]
    fn add_and_cancel() {
        let r = q_ring(2);
        let f = r.var(0).add(&r.var(1));
        let g = r.var(0).neg();
        assert_eq!(f.add(&g), r.var(1));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn homogeneity() {
        let r = q_ring(2);
        let f = r.var(0).mul(&r.var(0)).add(&r.var(1));
        assert!(!f.is_homogeneous());
        let g = r.var(0).mul(&r.var(1));
        assert!(g.is_homogeneous());
        assert!(r.zero().is_homogeneous());
    }

    #[test]
    fn identity_change_fixes() {
        let r = q_ring(3);
        let f = r.var(0).mul(&r.var(1)).add(&r.var(2).pow(2));
        let id = LinearChange::identity(Field::Rationals, 3);
        assert_eq!(apply_linear_change(&f, &id).unwrap(), f);
    }

    #[test]
    fn swap_change_permutes() {
        // Swap of x_1, x_2 applied to x_1^2 x_2 gives x_2^2 x_1.
        let r = q_ring(2);
        let q = Field::Rationals;
        let swap = LinearChange::new(
            q,
            vec![vec![q.zero(), q.one()], vec![q.one(), q.zero()]],
        )
        .unwrap();
        let f = r.var(0).pow(2).mul(&r.var(1));
        let expect = r.var(1).pow(2).mul(&r.var(0));
        assert_eq!(apply_linear_change(&f, &swap).unwrap(), expect);
    }

    #[test]
    fn shear_over_f5() {
        // Over F_5, [[1,2],[0,1]] sends x_1 + x_2 to x_1 + 3 x_2.
        let f5 = Field::prime(5).unwrap();
        let r = PolyRing::new(2, f5, MonomialOrder::GrevLex);
        let g = LinearChange::new(
            f5,
            vec![
                vec![f5.from_i64(1), f5.from_i64(2)],
                vec![f5.from_i64(0), f5.from_i64(1)],
            ],
        )
        .unwrap();
        let f = r.var(0).add(&r.var(1));
        let got = apply_linear_change(&f, &g).unwrap();
        let expect = r.var(0).add(&r.var(1).scale(&f5.from_i64(3)));
        assert_eq!(got, expect);
    }

    #[test]
    fn singular_matrix_rejected() {
        let q = Field::Rationals;
        let err = LinearChange::new(
            q,
            vec![vec![q.one(), q.one()], vec![q.one(), q.one()]],
        );
        assert!(matches!(err, Err(Error::SingularMatrix)));
    }

    #[test]
    fn adjoin_reinterprets() {
        let r = q_ring(1);
        let f = r.var(0).pow(2);
        let up = adjoin_variable(&[f]);
        assert_eq!(up[0].ring().n, 2);
        assert_eq!(up[0].total_degree(), Some(2));
        assert!(adjoin_variable(&[]).is_empty());
    }

    #[test]
    fn degree_tuple_validation() {
        assert!(DegreeTuple::new(vec![]).is_err());
        assert!(DegreeTuple::new(vec![1, 0]).is_err());
        assert!(DegreeTuple::new(vec![2, 3]).is_ok());
    }

    #[test]
    fn display_round_shape() {
        let r = q_ring(2);
        let f = r
            .var(0)
            .pow(2)
            .sub(&r.var(0).mul(&r.var(1)).scale(&Field::Rationals.from_i64(3)));
        assert_eq!(format!("{f}"), "x1^2 - 3*x1*x2");
    }
}
