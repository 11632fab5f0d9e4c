use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A generator of `K[X,U]`: either `x_i` or `u_ij` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UVariable {
    X(usize),
    U(usize, usize),
}

impl UVariable {
    /// `u_ij` normalized to `i < j`, together with the sign picked up by the
    /// swap (`u_ji = -u_ij`). `u_ii` is rejected.
    pub fn u(i: usize, j: usize) -> Result<(UVariable, i8)> {
        match i.cmp(&j) {
            Ordering::Less => Ok((UVariable::U(i, j), 1)),
            Ordering::Greater => Ok((UVariable::U(j, i), -1)),
            Ordering::Equal => Err(Error::MalformedGenerator(i)),
        }
    }

    /// `|u_ij| = j - i`; zero for `x` variables.
    pub fn interval_length(&self) -> usize {
        match *self {
            UVariable::X(_) => 0,
            UVariable::U(i, j) => j - i,
        }
    }
}

/// Number of `u` generators for `n` indices.
pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Position of `u_ij` (1-based, `i < j`) in the lexicographic pair order
/// `(1,2), (1,3), ..., (1,n), (2,3), ...`.
pub(crate) fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i < j && j <= n);
    (i - 1) * (2 * n - i) / 2 + (j - i - 1)
}

pub(crate) fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..=n).flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
}

/// A monomial `x_{i_1}..x_{i_c} u_{j_1 k_1}..u_{j_d k_d}` of `K[X,U]`.
///
/// Stored canonically as dense exponent vectors: `x` by index, `u` in the
/// lexicographic pair order. The `Ord` impl is the DILL order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UMonomial {
    n: usize,
    x: Vec<u32>,
    u: Vec<u32>,
}

impl UMonomial {
    pub fn one(n: usize) -> Self {
        UMonomial {
            n,
            x: vec![0; n],
            u: vec![0; pair_count(n)],
        }
    }

    pub fn x(n: usize, i: usize) -> Self {
        let mut m = Self::one(n);
        m.x[i - 1] = 1;
        m
    }

    /// `u_ij` for `i < j`.
    pub fn u(n: usize, i: usize, j: usize) -> Self {
        assert!(1 <= i && i < j && j <= n, "u({i},{j}) invalid for n = {n}");
        let mut m = Self::one(n);
        m.u[pair_index(n, i, j)] = 1;
        m
    }

    pub fn var(n: usize, v: UVariable) -> Self {
        match v {
            UVariable::X(i) => Self::x(n, i),
            UVariable::U(i, j) => Self::u(n, i, j),
        }
    }

    /// Builds a monomial from a list of generators with multiplicity.
    pub fn from_vars(n: usize, vars: &[UVariable]) -> Self {
        vars.iter()
            .fold(Self::one(n), |acc, v| acc.mul(&Self::var(n, *v)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn x_exp(&self, i: usize) -> u32 {
        self.x[i - 1]
    }

    pub fn u_exp(&self, i: usize, j: usize) -> u32 {
        self.u[pair_index(self.n, i, j)]
    }

    /// `x` factors as `(index, multiplicity)`, ascending.
    pub fn x_factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.x
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    /// `u` factors as `((i, j), multiplicity)` in canonical pair order.
    pub fn u_factors(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        pairs(self.n)
            .zip(&self.u)
            .filter(|(_, &e)| e > 0)
            .map(|(p, &e)| (p, e))
    }

    /// Degree in `X` (the `c` of the DILL order).
    pub fn deg_x(&self) -> u32 {
        self.x.iter().sum()
    }

    /// Degree in `U` (the `d` of the DILL order).
    pub fn deg_u(&self) -> u32 {
        self.u.iter().sum()
    }

    /// Total interval length `Σ |u_{j_b k_b}|`.
    pub fn interval_length(&self) -> u64 {
        self.u_factors()
            .map(|((i, j), e)| (j - i) as u64 * e as u64)
            .sum()
    }

    /// Degree of the image in `K[X,Y]`: `x` counts 1, `u` counts 2.
    pub fn weight(&self) -> u32 {
        self.deg_x() + 2 * self.deg_u()
    }

    /// Bidegree of the image in `K[X,Y]`: `x ↦ (1,0)`, `u ↦ (1,1)`.
    pub fn bidegree(&self) -> (u32, u32) {
        let d = self.deg_u();
        (self.deg_x() + d, d)
    }

    pub fn is_one(&self) -> bool {
        self.x.iter().chain(&self.u).all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        UMonomial {
            n: self.n,
            x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
            u: self.u.iter().zip(&other.u).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.x.iter().zip(&other.x).all(|(a, b)| a <= b)
            && self.u.iter().zip(&other.u).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` when not divisible.
    pub fn div(&self, other: &Self) -> Option<Self> {
        let sub = |a: &[u32], b: &[u32]| {
            a.iter()
                .zip(b)
                .map(|(p, q)| p.checked_sub(*q))
                .collect::<Option<Vec<_>>>()
        };
        Some(UMonomial {
            n: self.n,
            x: sub(&self.x, &other.x)?,
            u: sub(&self.u, &other.u)?,
        })
    }

    pub fn lcm(&self, other: &Self) -> Self {
        UMonomial {
            n: self.n,
            x: self
                .x
                .iter()
                .zip(&other.x)
                .map(|(a, b)| *a.max(b))
                .collect(),
            u: self
                .u
                .iter()
                .zip(&other.u)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.x.iter().zip(&other.x).all(|(a, b)| *a == 0 || *b == 0)
            && self.u.iter().zip(&other.u).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub(crate) fn x_vec(&self) -> &[u32] {
        &self.x
    }

    pub(crate) fn from_parts(n: usize, x: Vec<u32>, u: Vec<u32>) -> Self {
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(u.len(), pair_count(n));
        UMonomial { n, x, u }
    }

    /// Multiplicity of each left endpoint `j` among the `u` factors.
    fn left_endpoint_counts(&self) -> Vec<u32> {
        let mut counts = vec![0; self.n];
        for ((i, _), e) in self.u_factors() {
            counts[i - 1] += e;
        }
        counts
    }
}

/// The DILL order, evaluated directly on the exponent vectors.
///
/// Rules (i)-(iii) compare `c`, `d` and the total interval length. Rule (iv)
/// compares the sorted index tuple `ω`, where the tuple with the smaller
/// entry at the first difference is the larger monomial. On sorted tuples
/// of equal length that is the same as: at the first index whose
/// multiplicity differs, the larger multiplicity wins. The `x` block, the
/// left endpoints and the `u` pairs (for right endpoints) are compared in
/// that order. [`super::DillKey`] spells out the tuple and is tested to agree.
impl Ord for UMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.deg_x().cmp(&other.deg_x()))
            .then_with(|| self.deg_u().cmp(&other.deg_u()))
            .then_with(|| self.interval_length().cmp(&other.interval_length()))
            .then_with(|| self.x.cmp(&other.x))
            .then_with(|| {
                self.left_endpoint_counts()
                    .cmp(&other.left_endpoint_counts())
            })
            .then_with(|| self.u.cmp(&other.u))
    }
}

impl PartialOrd for UMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// CLI syntax: `x(1)^2*u(1,3)`, `1` for the empty product.
impl fmt::Display for UMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, e) in self.x_factors() {
            parts.push(if e > 1 {
                format!("x({i})^{e}")
            } else {
                format!("x({i})")
            });
        }
        for ((i, j), e) in self.u_factors() {
            parts.push(if e > 1 {
                format!("u({i},{j})^{e}")
            } else {
                format!("u({i},{j})")
            });
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_indexing_is_lexicographic() {
        for n in 2..7 {
            for (idx, (i, j)) in pairs(n).enumerate() {
                assert_eq!(pair_index(n, i, j), idx);
            }
            assert_eq!(pairs(n).count(), pair_count(n));
        }
    }

    #[test]
    fn u_normalization() {
        assert_eq!(UVariable::u(1, 2).unwrap(), (UVariable::U(1, 2), 1));
        assert_eq!(UVariable::u(2, 1).unwrap(), (UVariable::U(1, 2), -1));
        assert_eq!(UVariable::u(3, 3), Err(Error::MalformedGenerator(3)));
        assert_eq!(UVariable::U(2, 5).interval_length(), 3);
    }

    #[test]
    fn gradings() {
        let m = UMonomial::from_vars(
            4,
            &[UVariable::X(2), UVariable::U(1, 3), UVariable::U(1, 4)],
        );
        assert_eq!(m.deg_x(), 1);
        assert_eq!(m.deg_u(), 2);
        assert_eq!(m.interval_length(), 5);
        assert_eq!(m.weight(), 5);
        assert_eq!(m.bidegree(), (3, 2));
        assert_eq!(m.to_string(), "x(2)*u(1,3)*u(1,4)");
    }
}
