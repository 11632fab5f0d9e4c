//! The vector-space basis of the constants: monomials `x^.. u^..` whose
//! `u` intervals pairwise do not cross and cover no present `x` index.
//!
//! Also provides the map to leading monomials in `K[X,Y]`, its inverse, the
//! graded dimensions obtained by counting, and an independent
//! linear-algebra computation of those same dimensions ([`oracle`]).

mod linalg;
pub mod oracle;

use std::fmt;

use crate::error::{Error, Result};
use crate::exact_poly::XYMonomial;
use crate::xu_presentation::{pair_count, pairs, UMonomial};

pub use oracle::{oracle_kernel, GradedComponent, OracleKernel};

/// Why a monomial is not normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Two `u` factors `(i,k)`, `(j,l)` with `i < j < k < l`.
    Intersecting((usize, usize), (usize, usize)),
    /// `x_j` lies strictly inside the interval of `u_{ik}`.
    Covering(usize, (usize, usize)),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Intersecting((i, k), (j, l)) => {
                write!(f, "u({i},{k}) intersects u({j},{l})")
            }
            Violation::Covering(j, (i, k)) => write!(f, "u({i},{k}) covers x({j})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    pub is_normal: bool,
    pub violation: Option<Violation>,
}

/// Tests whether `v` is a basis monomial, reporting the first violation
/// found (intersections before coverings, scanning pairs in order).
pub fn is_normal(v: &UMonomial) -> NormalityReport {
    let us: Vec<(usize, usize)> = v.u_factors().map(|(p, _)| p).collect();
    for (a, &(i, k)) in us.iter().enumerate() {
        for &(j, l) in &us[a + 1..] {
            if i < j && j < k && k < l {
                return violation(Violation::Intersecting((i, k), (j, l)));
            }
            if j < i && i < l && l < k {
                return violation(Violation::Intersecting((j, l), (i, k)));
            }
        }
    }
    for (xj, _) in v.x_factors() {
        for &(i, k) in &us {
            if i < xj && xj < k {
                return violation(Violation::Covering(xj, (i, k)));
            }
        }
    }
    NormalityReport {
        is_normal: true,
        violation: None,
    }
}

fn violation(v: Violation) -> NormalityReport {
    NormalityReport {
        is_normal: false,
        violation: Some(v),
    }
}

/// All multisets of size `size` over `slots` kinds, as exponent vectors.
fn multisets(slots: usize, size: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            cur[pos] = 0;
            return;
        }
        for e in (0..=left).rev() {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
        cur[pos] = 0;
    }
    if slots == 0 {
        return if size == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(0, size, &mut vec![0; slots], &mut out);
    out
}

/// Normal monomials with `c` `x` factors and `d` `u` factors, DILL
/// descending.
pub fn enumerate_normal_cd(n: usize, c: u32, d: u32) -> Vec<UMonomial> {
    let xs = multisets(n, c);
    let us = multisets(pair_count(n), d);
    let mut out = Vec::new();
    for u in &us {
        for x in &xs {
            let m = UMonomial::from_parts(n, x.clone(), u.clone());
            if is_normal(&m).is_normal {
                out.push(m);
            }
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Normal monomials whose image has total degree `weight` (`x` counts 1,
/// `u` counts 2), DILL descending.
pub fn enumerate_normal(n: usize, weight: u32) -> Vec<UMonomial> {
    let mut out = Vec::new();
    for d in 0..=weight / 2 {
        out.extend(enumerate_normal_cd(n, weight - 2 * d, d));
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Normal monomials of image bidegree `(d1, d2)`.
pub fn enumerate_normal_bidegree(n: usize, d1: u32, d2: u32) -> Vec<UMonomial> {
    if d1 < d2 {
        return Vec::new();
    }
    enumerate_normal_cd(n, d1 - d2, d2)
}

/// Dimension of the `(d1, d2)` component of the constants, by counting
/// normal monomials.
pub fn graded_dimension(n: usize, d1: u32, d2: u32) -> usize {
    enumerate_normal_bidegree(n, d1, d2).len()
}

/// Leading monomial of `π(v)` in the lex order of `K[X,Y]`:
/// `x_{i_1}..x_{i_c} x_{j_1} y_{k_1} .. x_{j_d} y_{k_d}`.
pub fn lead_of(v: &UMonomial) -> XYMonomial {
    let n = v.n();
    let mut a = vec![0u32; n];
    let mut b = vec![0u32; n];
    for (i, e) in v.x_factors() {
        a[i - 1] += e;
    }
    for ((j, k), e) in v.u_factors() {
        a[j - 1] += e;
        b[k - 1] += e;
    }
    XYMonomial::new(&a, &b).expect("equal lengths")
}

/// Recovers the normal monomial with the given leading monomial.
///
/// Repeatedly pairs the smallest `y_k` with the nearest `x_j`, `j < k`.
pub fn reconstruct_from_lead(m: &XYMonomial) -> Result<UMonomial> {
    let n = m.n();
    let mut a = m.x_exponents();
    let mut b = m.y_exponents();
    let mut u = vec![0u32; pair_count(n)];
    let index: Vec<(usize, usize)> = pairs(n).collect();
    while let Some(k) = b.iter().position(|&e| e > 0) {
        let j = (0..k)
            .rev()
            .find(|&j| a[j] > 0)
            .ok_or(Error::NotALeadingMonomial)?;
        a[j] -= 1;
        b[k] -= 1;
        let slot = index
            .iter()
            .position(|&p| p == (j + 1, k + 1))
            .expect("valid pair");
        u[slot] += 1;
    }
    let w = UMonomial::from_parts(n, a, u);
    if !is_normal(&w).is_normal {
        return Err(Error::NotALeadingMonomial);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xu_presentation::UVariable::{U, X};
    use crate::xu_presentation::{RelationSet, UVariable};

    fn m(n: usize, vars: &[UVariable]) -> UMonomial {
        UMonomial::from_vars(n, vars)
    }

    #[test]
    fn normality_examples() {
        assert!(is_normal(&m(4, &[U(1, 2), U(3, 4)])).is_normal);
        assert_eq!(
            is_normal(&m(4, &[U(1, 3), U(2, 4)])).violation,
            Some(Violation::Intersecting((1, 3), (2, 4)))
        );
        assert_eq!(
            is_normal(&m(3, &[X(2), U(1, 3)])).violation,
            Some(Violation::Covering(2, (1, 3)))
        );
        // nesting and shared endpoints are fine
        assert!(is_normal(&m(4, &[U(1, 4), U(2, 3), X(1), X(4)])).is_normal);
        assert!(is_normal(&m(3, &[U(1, 2), U(2, 3)])).is_normal);
    }

    #[test]
    fn normality_matches_relation_leads() {
        for n in 1..=4 {
            let rel = RelationSet::new(n);
            for v in crate::xu_presentation::all_monomials(n, 3) {
                let by_leads = rel.iter().all(|r| !r.lead.divides(&v));
                assert_eq!(is_normal(&v).is_normal, by_leads, "{v}");
            }
        }
    }

    #[test]
    fn enumeration_examples() {
        let two = enumerate_normal(2, 2);
        assert_eq!(
            two,
            vec![
                m(2, &[X(1), X(1)]),
                m(2, &[X(1), X(2)]),
                m(2, &[X(2), X(2)]),
                m(2, &[U(1, 2)]),
            ]
        );
        assert_eq!(enumerate_normal(1, 5), vec![m(1, &[X(1); 5])]);
        assert_eq!(
            enumerate_normal(3, 1),
            vec![m(3, &[X(1)]), m(3, &[X(2)]), m(3, &[X(3)])]
        );
    }

    #[test]
    fn graded_dimension_examples() {
        assert_eq!(graded_dimension(2, 1, 1), 1);
        for n in 1..5 {
            assert_eq!(graded_dimension(n, 0, 1), 0);
        }
        assert_eq!(graded_dimension(1, 6, 0), 1);
    }

    #[test]
    fn lead_examples() {
        assert_eq!(
            lead_of(&m(2, &[U(1, 2)])),
            XYMonomial::new(&[1, 0], &[0, 1]).unwrap()
        );
        assert_eq!(
            lead_of(&m(3, &[X(1), U(2, 3)])),
            XYMonomial::new(&[1, 1, 0], &[0, 0, 1]).unwrap()
        );
        assert_eq!(
            lead_of(&m(3, &[X(3), X(3)])),
            XYMonomial::new(&[0, 0, 2], &[0, 0, 0]).unwrap()
        );
        let v = m(4, &[X(1), U(1, 2), U(3, 4)]);
        assert_eq!(lead_of(&v), v_pi_lead(&v));
    }

    fn v_pi_lead(v: &UMonomial) -> XYMonomial {
        crate::xu_presentation::UPolynomial::monomial(v.clone())
            .pi()
            .lead_xy()
            .unwrap()
    }

    #[test]
    fn reconstruction_examples() {
        assert_eq!(
            reconstruct_from_lead(&XYMonomial::new(&[1, 0], &[0, 1]).unwrap()).unwrap(),
            m(2, &[U(1, 2)])
        );
        let lead = XYMonomial::new(&[1, 1, 0, 0], &[0, 0, 1, 1]).unwrap();
        let w = reconstruct_from_lead(&lead).unwrap();
        assert_eq!(w, m(4, &[U(1, 4), U(2, 3)]));
        assert_eq!(lead_of(&w), lead);
        assert!(is_normal(&w).is_normal);
        assert_eq!(
            reconstruct_from_lead(&XYMonomial::y(1, 1)),
            Err(Error::NotALeadingMonomial)
        );
    }
}
