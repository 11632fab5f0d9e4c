//! The presentation ring `K[X,U]` with `U = {u_ij : i < j}`, the projection
//! `π: K[X,U] → K[X,Y]`, the DILL monomial order and reduction modulo the
//! relations
//!
//! ```text
//! r(i,j,k,l) = u_ij u_kl - u_ik u_jl + u_il u_jk     (i < j < k < l)
//! s(i,j,k)   = x_i u_jk  - x_j u_ik  + x_k u_ij      (i < j < k)
//! ```
//!
//! These relations form the reduced Gröbner basis of `ker π` under the DILL
//! order; [`buchberger_verify`] checks that claim for a given `n`.

mod buchberger;
mod monomial;
mod order;
mod reduction;
mod relations;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact_poly::{write_terms, ExactRational, XYPolynomial};

pub use buchberger::{buchberger_report, buchberger_verify, BuchbergerReport, PairFailure};
pub use monomial::{UMonomial, UVariable};
pub use order::{
    admissibility_probe, admissibility_probe_seeded, all_monomials, dill_compare, random_monomial,
    DillKey, ProbeReport,
};
pub use reduction::{normal_form, normal_form_with, ReductionStrategy};
pub use relations::{Relation, RelationId, RelationSet};

pub(crate) use monomial::{pair_count, pairs};

/// A sparse polynomial in `K[X,U]`, terms kept in DILL order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPolynomial {
    n: usize,
    terms: BTreeMap<UMonomial, ExactRational>,
}

impl UPolynomial {
    pub fn zero(n: usize) -> Self {
        UPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(UMonomial::one(n))
    }

    pub fn term(c: ExactRational, m: UMonomial) -> Self {
        let mut p = Self::zero(m.n());
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: UMonomial) -> Self {
        Self::term(ExactRational::one(), m)
    }

    pub fn x(n: usize, i: usize) -> Self {
        Self::monomial(UMonomial::x(n, i))
    }

    /// `u_ij` for `i < j`.
    pub fn u(n: usize, i: usize, j: usize) -> Self {
        Self::monomial(UMonomial::u(n, i, j))
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (UMonomial, ExactRational)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            if m.n() != n {
                return Err(Error::DimensionMismatch {
                    left: n,
                    right: m.n(),
                });
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
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

    /// Terms in ascending DILL order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&UMonomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &UMonomial) -> ExactRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub(crate) fn add_term(&mut self, m: UMonomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub(crate) fn pop_last(&mut self) -> Option<(UMonomial, ExactRational)> {
        self.terms.pop_last()
    }

    fn check_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_n(other)?;
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        UPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &UMonomial) -> Self {
        UPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| &acc * self)
    }

    /// The DILL-largest monomial.
    pub fn lead_dill(&self) -> Result<UMonomial> {
        self.terms
            .keys()
            .next_back()
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Result<(&UMonomial, &ExactRational)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    /// `π(x_i) = x_i`, `π(u_jk) = x_j y_k - x_k y_j`.
    pub fn pi(&self) -> XYPolynomial {
        let n = self.n;
        let mut dets: BTreeMap<(usize, usize), Vec<XYPolynomial>> = BTreeMap::new();
        let mut out = XYPolynomial::zero(n);
        for (m, c) in &self.terms {
            let mut x_part = crate::exact_poly::XYMonomial::one(n);
            for (i, e) in m.x_factors() {
                x_part.set_a(i, e);
            }
            let mut image = XYPolynomial::term(c.clone(), x_part);
            for ((i, j), e) in m.u_factors() {
                let powers = dets
                    .entry((i, j))
                    .or_insert_with(|| vec![XYPolynomial::one(n)]);
                while powers.len() <= e as usize {
                    let next = powers.last().unwrap() * &XYPolynomial::determinant(n, i, j);
                    powers.push(next);
                }
                image = &image * &powers[e as usize];
            }
            out = &out + &image;
        }
        out
    }
}

/// `π` of a polynomial in `K[X,U]`.
pub fn pi(p: &UPolynomial) -> XYPolynomial {
    p.pi()
}

/// DILL-largest monomial of `p`.
pub fn lead_dill(p: &UPolynomial) -> Result<UMonomial> {
    p.lead_dill()
}

impl fmt::Debug for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms in descending DILL order.
impl fmt::Display for UPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&UPolynomial> for &UPolynomial {
            type Output = UPolynomial;

            fn $method(self, rhs: &UPolynomial) -> UPolynomial {
                self.$checked(rhs).expect("polynomials over different n")
            }
        }

        impl $trait for UPolynomial {
            type Output = UPolynomial;

            fn $method(self, rhs: UPolynomial) -> UPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &UPolynomial {
    type Output = UPolynomial;

    fn neg(self) -> UPolynomial {
        self.scale(&-ExactRational::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_of_generators() {
        assert_eq!(
            UPolynomial::u(2, 1, 2).pi(),
            XYPolynomial::determinant(2, 1, 2)
        );
        assert_eq!(UPolynomial::x(3, 2).pi(), XYPolynomial::x(3, 2));
        let rels = RelationSet::new(4);
        for rel in rels.iter() {
            assert!(rel.poly.pi().is_zero(), "{}", rel.id);
        }
    }

    #[test]
    fn pi_is_multiplicative_on_squares() {
        let u = UPolynomial::u(3, 1, 3);
        let p = &u + &UPolynomial::x(3, 2);
        assert_eq!(p.pow(2).pi(), p.pi().pow(2));
    }

    #[test]
    fn lead_dill_examples() {
        let x1_plus_u12 = &UPolynomial::x(2, 1) + &UPolynomial::u(2, 1, 2);
        assert_eq!(x1_plus_u12.lead_dill().unwrap(), UMonomial::x(2, 1));
        assert_eq!(UPolynomial::zero(2).lead_dill(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display_descending() {
        let r = RelationSet::new(4);
        let r1234 = r.get(RelationId::R([1, 2, 3, 4])).unwrap();
        assert_eq!(
            r1234.poly.to_string(),
            "-u(1,3)*u(2,4) + u(1,4)*u(2,3) + u(1,2)*u(3,4)"
        );
    }
}
