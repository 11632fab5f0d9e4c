use std::fmt;

use crate::error::{Error, Result};

/// A monomial `x_1^{a_1} y_1^{b_1} ... x_n^{a_n} y_n^{b_n}` of `K[X,Y]`.
///
/// Exponents are stored interleaved as `(a_1, b_1, ..., a_n, b_n)`, so the
/// derived `Ord` is the lexicographic order on that tuple: the larger tuple
/// is the larger monomial. This is the order used to pick leading monomials
/// everywhere in `K[X,Y]`. Note that the DILL order on `K[X,U]` uses the
/// opposite convention for its index tuples, see
/// [`crate::xu_presentation::dill_compare`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct XYMonomial {
    exps: Vec<u32>,
}

impl XYMonomial {
    pub fn one(n: usize) -> Self {
        XYMonomial {
            exps: vec![0; 2 * n],
        }
    }

    /// Builds a monomial from its `x` and `y` exponent lists.
    pub fn new(a: &[u32], b: &[u32]) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::DimensionMismatch {
                left: a.len(),
                right: b.len(),
            });
        }
        let exps = a.iter().zip(b).flat_map(|(&ai, &bi)| [ai, bi]).collect();
        Ok(XYMonomial { exps })
    }

    /// The variable `x_i` (1-based).
    pub fn x(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "x index {i} out of range 1..={n}");
        let mut m = Self::one(n);
        m.exps[2 * (i - 1)] = 1;
        m
    }

    /// The variable `y_i` (1-based).
    pub fn y(n: usize, i: usize) -> Self {
        assert!((1..=n).contains(&i), "y index {i} out of range 1..={n}");
        let mut m = Self::one(n);
        m.exps[2 * (i - 1) + 1] = 1;
        m
    }

    pub fn n(&self) -> usize {
        self.exps.len() / 2
    }

    /// Exponent of `x_i` (1-based).
    pub fn a(&self, i: usize) -> u32 {
        self.exps[2 * (i - 1)]
    }

    /// Exponent of `y_i` (1-based).
    pub fn b(&self, i: usize) -> u32 {
        self.exps[2 * (i - 1) + 1]
    }

    pub fn x_exponents(&self) -> Vec<u32> {
        self.exps.iter().step_by(2).copied().collect()
    }

    pub fn y_exponents(&self) -> Vec<u32> {
        self.exps.iter().skip(1).step_by(2).copied().collect()
    }

    pub(crate) fn set_a(&mut self, i: usize, e: u32) {
        self.exps[2 * (i - 1)] = e;
    }

    pub(crate) fn set_b(&mut self, i: usize, e: u32) {
        self.exps[2 * (i - 1) + 1] = e;
    }

    pub fn deg_x(&self) -> u32 {
        self.exps.iter().step_by(2).sum()
    }

    pub fn deg_y(&self) -> u32 {
        self.exps.iter().skip(1).step_by(2).sum()
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.deg_x(), self.deg_y())
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        XYMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(XYMonomial { exps })
    }

    pub fn pow(&self, e: u32) -> Self {
        XYMonomial {
            exps: self.exps.iter().map(|a| a * e).collect(),
        }
    }
}

impl fmt::Debug for XYMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Formats as a product in the CLI syntax, e.g. `x(1)^2*y(3)`; `1` for the
/// empty product.
impl fmt::Display for XYMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let xs = (1..=self.n()).map(|i| ("x", i, self.a(i)));
        let ys = (1..=self.n()).map(|i| ("y", i, self.b(i)));
        for (name, i, e) in xs.chain(ys).filter(|t| t.2 > 0) {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "{name}({i})")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_on_interleaved_tuple() {
        // x_2 + y_1: (0,1,0,0) > (0,0,1,0)
        assert!(XYMonomial::y(2, 1) > XYMonomial::x(2, 2));
        // x_1 y_2 > x_2 y_1
        let m1 = XYMonomial::x(2, 1).mul(&XYMonomial::y(2, 2));
        let m2 = XYMonomial::x(2, 2).mul(&XYMonomial::y(2, 1));
        assert!(m1 > m2);
    }

    #[test]
    fn degrees_and_division() {
        let m = XYMonomial::new(&[2, 0], &[1, 3]).unwrap();
        assert_eq!(m.bidegree(), (2, 4));
        let d = XYMonomial::new(&[1, 0], &[0, 2]).unwrap();
        assert!(d.divides(&m));
        assert_eq!(
            m.div(&d).unwrap(),
            XYMonomial::new(&[1, 0], &[1, 1]).unwrap()
        );
        assert!(m.div(&XYMonomial::x(2, 2)).is_none());
        assert_eq!(m.to_string(), "x(1)^2*y(1)*y(2)^3");
    }

    #[test]
    fn mismatched_exponent_lists() {
        assert_eq!(
            XYMonomial::new(&[1], &[0, 0]),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
    }
}
