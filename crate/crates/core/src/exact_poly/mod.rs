//! The ambient ring `K[X,Y] = ℚ[x_1..x_n, y_1..y_n]`.
//!
//! Polynomials are sparse maps from [`XYMonomial`] to exact rationals. The
//! derivation `Δ` acts by `Δ(x_i) = 0`, `Δ(y_i) = x_i`.

mod monomial;
mod substitution;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use monomial::XYMonomial;
pub(crate) use substitution::phi_at;
pub use substitution::{SubstMonomial, SubstitutionResult};

/// Coefficients: arbitrary-precision rationals, always in lowest terms.
pub type ExactRational = BigRational;

pub(crate) fn rat(v: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(v))
}

/// A sparse polynomial in `K[X,Y]` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XYPolynomial {
    n: usize,
    terms: BTreeMap<XYMonomial, ExactRational>,
}

impl XYPolynomial {
    pub fn zero(n: usize) -> Self {
        XYPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ExactRational::one())
    }

    pub fn constant(n: usize, c: ExactRational) -> Self {
        Self::term(c, XYMonomial::one(n))
    }

    pub fn term(c: ExactRational, m: XYMonomial) -> Self {
        let mut p = Self::zero(m.n());
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn monomial(m: XYMonomial) -> Self {
        Self::term(ExactRational::one(), m)
    }

    pub fn x(n: usize, i: usize) -> Self {
        Self::monomial(XYMonomial::x(n, i))
    }

    pub fn y(n: usize, i: usize) -> Self {
        Self::monomial(XYMonomial::y(n, i))
    }

    /// `π(u_ij) = x_i y_j - x_j y_i`.
    pub fn determinant(n: usize, i: usize, j: usize) -> Self {
        &(&Self::x(n, i) * &Self::y(n, j)) - &(&Self::x(n, j) * &Self::y(n, i))
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (XYMonomial, ExactRational)>,
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

    /// Terms in ascending lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XYMonomial, &ExactRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &XYMonomial) -> ExactRational {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub(crate) fn add_term(&mut self, m: XYMonomial, c: ExactRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
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
        XYPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &XYMonomial) -> Self {
        XYPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.n);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn deg_x(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(XYMonomial::deg_x)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn deg_y(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(XYMonomial::deg_y)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn total_degree(&self) -> Result<u32> {
        self.terms
            .keys()
            .map(XYMonomial::total_degree)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// The single bidegree of a bihomogeneous polynomial; `None` for zero or
    /// mixed polynomials.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut keys = self.terms.keys().map(XYMonomial::bidegree);
        let first = keys.next()?;
        keys.all(|b| b == first).then_some(first)
    }

    /// Applies `Δ = Σ x_i ∂/∂y_i`.
    pub fn delta(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            for i in 1..=self.n {
                let b = m.b(i);
                if b == 0 {
                    continue;
                }
                let mut t = m.clone();
                t.set_b(i, b - 1);
                t.set_a(i, m.a(i) + 1);
                out.add_term(t, c * rat(b as i64));
            }
        }
        out
    }

    pub fn is_constant(&self) -> bool {
        self.delta().is_zero()
    }

    /// Splits into components homogeneous in `(deg_X, deg_Y)`.
    pub fn bidegree_split(&self) -> BTreeMap<(u32, u32), XYPolynomial> {
        self.split_by(|m| m.bidegree())
    }

    /// Splits into components homogeneous in `(x_n, y_n)`, keyed by that
    /// total degree.
    pub fn xnyn_split(&self) -> BTreeMap<u32, XYPolynomial> {
        self.var_pair_split(self.n)
    }

    /// Splits by total degree in `(x_m, y_m)`.
    pub(crate) fn var_pair_split(&self, m: usize) -> BTreeMap<u32, XYPolynomial> {
        self.split_by(|mono| mono.a(m) + mono.b(m))
    }

    fn split_by<K: Ord>(&self, key: impl Fn(&XYMonomial) -> K) -> BTreeMap<K, XYPolynomial> {
        let mut out: BTreeMap<K, XYPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(key(m))
                .or_insert_with(|| Self::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        out
    }

    /// The leading monomial under the lex order on `(a_1,b_1,...,a_n,b_n)`.
    pub fn lead_xy(&self) -> Result<XYMonomial> {
        self.terms
            .keys()
            .next_back()
            .cloned()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self) -> Result<(&XYMonomial, &ExactRational)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    /// Exact quotient `f / g`. Fails with [`Error::NotDivisible`] when `g`
    /// does not divide `f`; no remainder is ever produced.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        self.check_n(g)?;
        let (g_lead, g_coeff) = g.leading_term().map_err(|_| Error::DivisionByZero)?;
        let (g_lead, g_coeff) = (g_lead.clone(), g_coeff.clone());
        let mut rest = self.clone();
        let mut quotient = Self::zero(self.n);
        while let Some((lead, coeff)) = rest.terms.iter().next_back() {
            let q_mono = lead.div(&g_lead).ok_or(Error::NotDivisible)?;
            let q_coeff = coeff / &g_coeff;
            for (m, c) in &g.terms {
                rest.add_term(m.mul(&q_mono), -(c * &q_coeff));
            }
            quotient.add_term(q_mono, q_coeff);
        }
        Ok(quotient)
    }

    /// Divides by `x_m^q` by shifting exponents. Every term must contain
    /// `x_m^q`.
    pub(crate) fn div_x_power(&self, m: usize, q: u32) -> Self {
        XYPolynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| {
                    let mut k = k.clone();
                    let a = k.a(m);
                    debug_assert!(a >= q);
                    k.set_a(m, a - q);
                    (k, v.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `x_n ↦ Σ t_i x_i`, `y_n ↦ Σ t_i y_i` (`i < n`) with
    /// symbolic parameters `t_1..t_{n-1}`.
    ///
    /// The result is zero exactly when `φ_α(f) = 0` for every
    /// `α ∈ K^{n-1}`.
    pub fn phi_symbolic(&self) -> Result<SubstitutionResult> {
        if self.n < 2 {
            return Err(Error::InvalidArity {
                required: 2,
                got: self.n,
            });
        }
        Ok(substitution::phi_at(self, self.n))
    }
}

impl XYPolynomial {
    /// `φ_α`: substitutes `x_n ↦ Σ α_i x_i`, `y_n ↦ Σ α_i y_i` for a concrete
    /// `α ∈ K^{n-1}`.
    pub fn phi_alpha(&self, alpha: &[ExactRational]) -> Result<Self> {
        let n = self.n;
        if n < 2 {
            return Err(Error::InvalidArity {
                required: 2,
                got: n,
            });
        }
        if alpha.len() != n - 1 {
            return Err(Error::DimensionMismatch {
                left: n - 1,
                right: alpha.len(),
            });
        }
        let (x_form, y_form) = linear_forms(n, alpha);
        let mut out = Self::zero(n);
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            rest.set_a(n, 0);
            rest.set_b(n, 0);
            let image = &x_form.pow(m.a(n)) * &y_form.pow(m.b(n));
            out = &out + &image.mul_monomial(&rest).scale(c);
        }
        Ok(out)
    }
}

/// `(Σ α_i x_i, Σ α_i y_i)` over `i < n`.
pub(crate) fn linear_forms(n: usize, alpha: &[ExactRational]) -> (XYPolynomial, XYPolynomial) {
    let mut xs = XYPolynomial::zero(n);
    let mut ys = XYPolynomial::zero(n);
    for (i, a) in alpha.iter().enumerate() {
        xs.add_term(XYMonomial::x(n, i + 1), a.clone());
        ys.add_term(XYMonomial::y(n, i + 1), a.clone());
    }
    (xs, ys)
}

impl fmt::Debug for XYPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Terms in descending lex order, e.g. `x(1)*y(2) - x(2)*y(1)`.
impl fmt::Display for XYPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev())
    }
}

pub(crate) fn write_terms<'a, M: fmt::Display + 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a M, &'a ExactRational)>,
) -> fmt::Result {
    let mut first = true;
    for (m, c) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        match (first, neg) {
            (true, true) => f.write_str("-")?,
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
            (true, false) => {}
        }
        first = false;
        let mono = m.to_string();
        if mono == "1" {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&mono)?;
        } else {
            write!(f, "{abs}*{mono}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&XYPolynomial> for &XYPolynomial {
            type Output = XYPolynomial;

            /// Panics when the variable counts differ.
            fn $method(self, rhs: &XYPolynomial) -> XYPolynomial {
                self.$checked(rhs).expect("polynomials over different n")
            }
        }

        impl $trait for XYPolynomial {
            type Output = XYPolynomial;

            fn $method(self, rhs: XYPolynomial) -> XYPolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &XYPolynomial {
    type Output = XYPolynomial;

    fn neg(self) -> XYPolynomial {
        self.scale(&-ExactRational::one())
    }
}
