//! Kernel membership and the constructive decomposition of constants.
//!
//! [`decompose`] rewrites a constant `f ∈ K[X,Y]^Δ` as a polynomial in the
//! generators `x_i`, `u_ij`. It follows the induction on `n` and on the
//! `(x_n, y_n)`-degree:
//!
//! 1. split `f` into `(X,Y)`-bihomogeneous and `(x_n,y_n)`-homogeneous parts;
//! 2. for `n = 1` the constant is a polynomial in `x_1`;
//! 3. divide out the largest power `x_n^q`;
//! 4. if `φ_α(f) = 0` for every `α`, then `n = 2` and `u_12` divides `f`;
//! 5. otherwise decompose the top coefficient `a_p` of `y_n^p` over `n - 1`
//!    variables, replace each `x_{s_1}..x_{s_p} y_n^p` by `Π u_{s_j n}`, and
//!    recurse on the remainder, which is `x_n` times a constant of lower
//!    `(x_n,y_n)`-degree.

use crate::error::{Error, Result};
use crate::exact_poly::{ExactRational, XYPolynomial};
use crate::xu_presentation::{UMonomial, UPolynomial};

/// One branch taken by the decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// One variable pair left; the constant is a polynomial in `x_1`.
    BaseCase,
    /// No `x_m`, `y_m` present; continue with `m - 1` variable pairs.
    RecurseOnN { vars: usize },
    /// Divided by `x_m^power`.
    StripXPower { var: usize, power: u32 },
    /// `φ` vanished identically for `m = 2`; divided by `u_12`.
    DivideU12,
    /// Replaced the `y_m^degree` part by products of `u_{s m}`.
    RewriteUsn { var: usize, degree: u32 },
}

/// A constant written in the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub input: XYPolynomial,
    /// A preimage of `input` under `π`.
    pub result: UPolynomial,
    /// Present when tracing was requested.
    pub trace: Option<Vec<TraceStep>>,
}

/// Rewrites a constant as a polynomial in `x_i`, `u_ij`.
///
/// Fails with [`Error::NotAConstant`] when `Δf ≠ 0`.
pub fn decompose(f: &XYPolynomial) -> Result<Decomposition> {
    Decomposer { trace: None }.run(f)
}

/// Like [`decompose`], recording the branch taken at every step.
pub fn decompose_traced(f: &XYPolynomial) -> Result<Decomposition> {
    Decomposer {
        trace: Some(Vec::new()),
    }
    .run(f)
}

/// Result of [`membership_certificate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub is_constant: bool,
    pub decomposition: Option<Decomposition>,
}

/// `(false, None)` when `Δf ≠ 0`, otherwise `(true, decomposition)`.
///
/// An `Err` here can only come from a failed internal consistency check.
pub fn membership_certificate(f: &XYPolynomial) -> Result<Membership> {
    if !f.is_constant() {
        return Ok(Membership {
            is_constant: false,
            decomposition: None,
        });
    }
    Ok(Membership {
        is_constant: true,
        decomposition: Some(decompose(f)?),
    })
}

/// The witness `w_α = (Σ α_i x_i) y_n - (Σ α_i y_i) x_n`.
pub fn witness(n: usize, alpha: &[ExactRational]) -> Result<XYPolynomial> {
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
    let (xs, ys) = crate::exact_poly::linear_forms(n, alpha);
    Ok(&(&xs * &XYPolynomial::y(n, n)) - &(&ys * &XYPolynomial::x(n, n)))
}

/// Divides `f` by `w_α` when `φ_α(f) = 0`; returns `None` when `φ_α(f) ≠ 0`.
pub fn divide_by_witness(
    f: &XYPolynomial,
    alpha: &[ExactRational],
) -> Result<Option<XYPolynomial>> {
    if !f.phi_alpha(alpha)?.is_zero() {
        return Ok(None);
    }
    let w = witness(f.n(), alpha)?;
    f.divide_exact(&w).map(Some)
}

struct Decomposer {
    trace: Option<Vec<TraceStep>>,
}

fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

impl Decomposer {
    fn note(&mut self, step: TraceStep) {
        if let Some(t) = self.trace.as_mut() {
            t.push(step);
        }
    }

    fn run(mut self, f: &XYPolynomial) -> Result<Decomposition> {
        if !f.is_constant() {
            return Err(Error::NotAConstant);
        }
        let result = self.split_and_solve(f, f.n())?;
        Ok(Decomposition {
            input: f.clone(),
            result,
            trace: self.trace,
        })
    }

    /// Handles every bihomogeneous, `(x_m,y_m)`-homogeneous part of `f`
    /// separately; only variable pairs `1..=m` occur in `f`.
    fn split_and_solve(&mut self, f: &XYPolynomial, m: usize) -> Result<UPolynomial> {
        let mut out = UPolynomial::zero(f.n());
        for part in f.bidegree_split().values() {
            if m == 0 {
                out = &out + &self.homogeneous(part, m)?;
                continue;
            }
            for piece in part.var_pair_split(m).values() {
                out = &out + &self.homogeneous(piece, m)?;
            }
        }
        Ok(out)
    }

    fn homogeneous(&mut self, f: &XYPolynomial, m: usize) -> Result<UPolynomial> {
        let n = f.n();
        if f.is_zero() {
            return Ok(UPolynomial::zero(n));
        }
        if m <= 1 {
            self.note(TraceStep::BaseCase);
            return x_only(f);
        }

        let degree = {
            let (k, _) = f.terms().next().expect("nonzero");
            k.a(m) + k.b(m)
        };
        if degree == 0 {
            self.note(TraceStep::RecurseOnN { vars: m - 1 });
            return self.split_and_solve(f, m - 1);
        }

        let q = f.terms().map(|(k, _)| k.a(m)).min().expect("nonzero");
        if q > 0 {
            self.note(TraceStep::StripXPower { var: m, power: q });
            let rest = self.homogeneous(&f.div_x_power(m, q), m)?;
            return Ok(rest.mul_monomial(&x_power(n, m, q)));
        }
        let p = degree;

        if crate::exact_poly::phi_at(f, m).is_zero() {
            if m != 2 {
                return Err(invariant(format!(
                    "phi vanishes on a nonzero constant with {m} variable pairs"
                )));
            }
            self.note(TraceStep::DivideU12);
            let quotient = f
                .divide_exact(&XYPolynomial::determinant(n, 1, 2))
                .map_err(|_| invariant("u_12 does not divide a constant killed by phi"))?;
            let rest = self.homogeneous(&quotient, m)?;
            return Ok(rest.mul_monomial(&UMonomial::u(n, 1, 2)));
        }

        let (dx, dy) = f.bidegree().expect("bihomogeneous");
        if dx < dy {
            return Err(invariant(format!(
                "bidegree ({dx},{dy}) of a constant with phi != 0 has deg_X < deg_Y"
            )));
        }

        // Coefficient a_p of y_m^p; nonzero because q = 0.
        let mut a_p = XYPolynomial::zero(n);
        for (k, c) in f.terms() {
            if k.a(m) == 0 {
                let mut k = k.clone();
                k.set_b(m, 0);
                a_p.add_term(k, c.clone());
            }
        }
        let a_p_gens = self.split_and_solve(&a_p, m - 1)?;

        let mut lifted = UPolynomial::zero(n);
        for (mono, c) in a_p_gens.terms() {
            lifted.add_term(pull_x_factors(mono, m, p)?, c.clone());
        }
        self.note(TraceStep::RewriteUsn { var: m, degree: p });

        let remainder = f - &lifted.pi();
        if remainder.terms().any(|(k, _)| k.a(m) == 0) {
            return Err(invariant(
                "remainder after the u_{s n} rewrite is not divisible by x_n",
            ));
        }
        if remainder.is_zero() {
            return Ok(lifted);
        }
        let rest = self.homogeneous(&remainder.div_x_power(m, 1), m)?;
        Ok(&lifted + &rest.mul_monomial(&UMonomial::x(n, m)))
    }
}

/// `x_m^q` as a monomial of `K[X,U]`.
fn x_power(n: usize, m: usize, q: u32) -> UMonomial {
    (0..q).fold(UMonomial::one(n), |acc, _| acc.mul(&UMonomial::x(n, m)))
}

/// Replaces the `p` smallest-index `x` factors `x_{s_1}..x_{s_p}` of `mono`
/// by `u_{s_1 m}..u_{s_p m}`.
fn pull_x_factors(mono: &UMonomial, m: usize, p: u32) -> Result<UMonomial> {
    let n = mono.n();
    if mono.deg_x() < p {
        return Err(invariant(format!(
            "generator monomial {mono} has fewer than {p} x factors"
        )));
    }
    let mut out = mono.clone();
    let mut left = p;
    for (s, e) in mono.x_factors() {
        let take = e.min(left);
        for _ in 0..take {
            out = out.div(&UMonomial::x(n, s)).expect("factor present");
            out = out.mul(&UMonomial::u(n, s, m));
        }
        left -= take;
        if left == 0 {
            break;
        }
    }
    Ok(out)
}

/// A constant involving only `x` variables, copied into `K[X,U]`.
fn x_only(f: &XYPolynomial) -> Result<UPolynomial> {
    let n = f.n();
    let mut out = UPolynomial::zero(n);
    for (k, c) in f.terms() {
        if k.deg_y() != 0 {
            return Err(invariant(format!("base case reached with y factor in {k}")));
        }
        let mut mono = UMonomial::one(n);
        for (i, &e) in k.x_exponents().iter().enumerate() {
            for _ in 0..e {
                mono = mono.mul(&UMonomial::x(n, i + 1));
            }
        }
        out.add_term(mono, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_poly::rat;
    use crate::xu_presentation::{normal_form, RelationSet};

    #[test]
    fn one_variable_pair() {
        let f = XYPolynomial::x(1, 1).pow(3);
        let d = decompose(&f).unwrap();
        assert_eq!(d.result, UPolynomial::x(1, 1).pow(3));
    }

    #[test]
    fn determinant_is_u12() {
        let f = XYPolynomial::determinant(2, 1, 2);
        assert_eq!(decompose(&f).unwrap().result, UPolynomial::u(2, 1, 2));
    }

    #[test]
    fn three_variables_round_trip() {
        let n = 3;
        let p = &(&UPolynomial::x(n, 1) * &UPolynomial::u(n, 2, 3))
            + &(&UPolynomial::u(n, 1, 2) * &UPolynomial::u(n, 1, 3));
        let d = decompose(&p.pi()).unwrap();
        assert_eq!(d.result.pi(), p.pi());
        let rel = RelationSet::new(n);
        assert_eq!(
            normal_form(&d.result, &rel).unwrap(),
            normal_form(&p, &rel).unwrap()
        );
    }

    #[test]
    fn rejects_non_constants() {
        assert_eq!(decompose(&XYPolynomial::y(1, 1)), Err(Error::NotAConstant));
    }

    #[test]
    fn membership() {
        let cert = membership_certificate(&XYPolynomial::y(1, 1)).unwrap();
        assert!(!cert.is_constant && cert.decomposition.is_none());

        let cert = membership_certificate(&XYPolynomial::x(3, 3)).unwrap();
        assert!(cert.is_constant);
        assert_eq!(cert.decomposition.unwrap().result, UPolynomial::x(3, 3));

        let sq = XYPolynomial::determinant(2, 1, 2).pow(2);
        let cert = membership_certificate(&sq).unwrap();
        assert_eq!(cert.decomposition.unwrap().result.pi(), sq);
    }

    #[test]
    fn trace_names_branches() {
        let f = &XYPolynomial::determinant(2, 1, 2) * &XYPolynomial::x(2, 2);
        let d = decompose_traced(&f).unwrap();
        let trace = d.trace.unwrap();
        assert_eq!(trace[0], TraceStep::StripXPower { var: 2, power: 1 });
        assert!(trace.contains(&TraceStep::DivideU12));
        assert_eq!(d.result.pi(), f);

        let g = XYPolynomial::determinant(3, 1, 3);
        let trace = decompose_traced(&g).unwrap().trace.unwrap();
        assert!(trace.contains(&TraceStep::RewriteUsn { var: 3, degree: 1 }));
        assert!(decompose(&g).unwrap().trace.is_none());
    }

    #[test]
    fn zero_decomposes_to_zero() {
        assert!(decompose(&XYPolynomial::zero(3)).unwrap().result.is_zero());
    }

    #[test]
    fn witness_divides() {
        let alpha = [rat(1)];
        let w = witness(2, &alpha).unwrap();
        let g = &XYPolynomial::x(2, 1) + &XYPolynomial::y(2, 2);
        let f = &w * &g;
        assert!(f.phi_alpha(&alpha).unwrap().is_zero());
        assert_eq!(divide_by_witness(&f, &alpha).unwrap(), Some(g));
        assert_eq!(
            divide_by_witness(&XYPolynomial::y(2, 2), &alpha).unwrap(),
            None
        );
    }
}
