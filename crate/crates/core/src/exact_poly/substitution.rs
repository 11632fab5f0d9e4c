use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::{rat, ExactRational, XYMonomial, XYPolynomial};

/// A monomial in the `x`/`y` variables times a monomial in the parameters
/// `t_1..t_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubstMonomial {
    pub xy: XYMonomial,
    pub t: Vec<u32>,
}

/// Image of a polynomial under the symbolic substitution
/// `x_n ↦ Σ t_i x_i`, `y_n ↦ Σ t_i y_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubstitutionResult {
    /// Total variable count: the `n` base variable pairs plus `n - 1`
    /// parameters.
    pub m: usize,
    base_n: usize,
    terms: BTreeMap<SubstMonomial, ExactRational>,
}

impl SubstitutionResult {
    fn zero(base_n: usize, params: usize) -> Self {
        SubstitutionResult {
            m: base_n + params,
            base_n,
            terms: BTreeMap::new(),
        }
    }

    /// Embeds `f` with all parameter exponents zero.
    pub fn embed(f: &XYPolynomial, params: usize) -> Self {
        let mut out = Self::zero(f.n(), params);
        for (m, c) in f.terms() {
            out.terms.insert(
                SubstMonomial {
                    xy: m.clone(),
                    t: vec![0; params],
                },
                c.clone(),
            );
        }
        out
    }

    pub fn params(&self) -> usize {
        self.m - self.base_n
    }

    pub fn base_n(&self) -> usize {
        self.base_n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SubstMonomial, &ExactRational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: SubstMonomial, c: ExactRational) {
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

    fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.base_n, self.params());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = SubstMonomial {
                    xy: m1.xy.mul(&m2.xy),
                    t: m1.t.iter().zip(&m2.t).map(|(a, b)| a + b).collect(),
                };
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    /// `Δ` extended to fix every parameter `t_i`.
    pub fn delta(&self) -> Self {
        let mut out = Self::zero(self.base_n, self.params());
        for (m, c) in &self.terms {
            for i in 1..=self.base_n {
                let b = m.xy.b(i);
                if b == 0 {
                    continue;
                }
                let mut xy = m.xy.clone();
                xy.set_b(i, b - 1);
                xy.set_a(i, m.xy.a(i) + 1);
                out.add_term(SubstMonomial { xy, t: m.t.clone() }, c * rat(b as i64));
            }
        }
        out
    }
}

impl SubstitutionResult {
    /// Specializes the parameters `t_i ↦ α_i`.
    pub fn evaluate(&self, alpha: &[ExactRational]) -> XYPolynomial {
        assert_eq!(alpha.len(), self.params(), "one value per parameter");
        let mut out = XYPolynomial::zero(self.base_n);
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (a, &e) in alpha.iter().zip(&m.t) {
                v *= num_traits::pow(a.clone(), e as usize);
            }
            out.add_term(m.xy.clone(), v);
        }
        out
    }
}

/// `Σ_{i<m} t_i v_i` where `v_i` is `x_i` or `y_i`.
fn linear_form(n: usize, m: usize, use_y: bool) -> SubstitutionResult {
    let params = m - 1;
    let mut out = SubstitutionResult::zero(n, params);
    for i in 1..m {
        let xy = if use_y {
            XYMonomial::y(n, i)
        } else {
            XYMonomial::x(n, i)
        };
        let mut t = vec![0; params];
        t[i - 1] = 1;
        out.add_term(SubstMonomial { xy, t }, rat(1));
    }
    out
}

fn powers(base: &SubstitutionResult, max: u32) -> Vec<SubstitutionResult> {
    let mut out = vec![SubstitutionResult::embed(
        &XYPolynomial::one(base.base_n),
        base.params(),
    )];
    for e in 1..=max as usize {
        let next = out[e - 1].mul(base);
        out.push(next);
    }
    out
}

/// Symbolic `φ` acting on variable pair `m` of `f`, with parameters
/// `t_1..t_{m-1}`; variables above `m` are left alone.
pub(crate) fn phi_at(f: &XYPolynomial, m: usize) -> SubstitutionResult {
    let n = f.n();
    let params = m - 1;
    let max_a = f.terms().map(|(k, _)| k.a(m)).max().unwrap_or(0);
    let max_b = f.terms().map(|(k, _)| k.b(m)).max().unwrap_or(0);
    let x_pows = powers(&linear_form(n, m, false), max_a);
    let y_pows = powers(&linear_form(n, m, true), max_b);

    let mut out = SubstitutionResult::zero(n, params);
    for (k, c) in f.terms() {
        let mut rest = k.clone();
        rest.set_a(m, 0);
        rest.set_b(m, 0);
        let image = x_pows[k.a(m) as usize].mul(&y_pows[k.b(m) as usize]);
        for (im, ic) in image.terms() {
            out.add_term(
                SubstMonomial {
                    xy: im.xy.mul(&rest),
                    t: im.t.clone(),
                },
                ic * c,
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixes_lower_variables() {
        let f = XYPolynomial::x(3, 1);
        let r = f.phi_symbolic().unwrap();
        assert_eq!(r, SubstitutionResult::embed(&f, 2));
        assert_eq!(r.m, 5);
    }

    #[test]
    fn last_variable_becomes_linear_form() {
        let r = XYPolynomial::x(3, 3).phi_symbolic().unwrap();
        let terms: Vec<_> = r
            .terms()
            .map(|(m, c)| (m.xy.clone(), m.t.clone(), c.clone()))
            .collect();
        assert_eq!(terms.len(), 2);
        assert!(terms.contains(&(XYMonomial::x(3, 1), vec![1, 0], rat(1))));
        assert!(terms.contains(&(XYMonomial::x(3, 2), vec![0, 1], rat(1))));
    }

    #[test]
    fn determinant_vanishes_for_two_variables() {
        let u = XYPolynomial::determinant(2, 1, 2);
        assert!(u.phi_symbolic().unwrap().is_zero());
        // for n = 3 the image of u_13 is t_2 u_12, nonzero
        assert!(!XYPolynomial::determinant(3, 1, 3)
            .phi_symbolic()
            .unwrap()
            .is_zero());
    }

    #[test]
    fn requires_two_variables() {
        assert!(matches!(
            XYPolynomial::x(1, 1).phi_symbolic(),
            Err(crate::Error::InvalidArity {
                required: 2,
                got: 1
            })
        ));
    }
}
