use super::{Relation, RelationSet, UMonomial, UPolynomial};
use crate::error::{Error, Result};
use crate::exact_poly::ExactRational;

/// Which reducible monomial to rewrite next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// Always rewrite the DILL-largest reducible monomial.
    #[default]
    LargestFirst,
    /// Rewrite the DILL-smallest reducible monomial found by an ascending
    /// scan. Slower; kept to check that the result does not depend on the
    /// strategy.
    FirstFound,
}

/// Normal form of `p` modulo `rel` under the DILL order.
pub fn normal_form(p: &UPolynomial, rel: &RelationSet) -> Result<UPolynomial> {
    normal_form_with(p, rel, ReductionStrategy::LargestFirst)
}

pub fn normal_form_with(
    p: &UPolynomial,
    rel: &RelationSet,
    strategy: ReductionStrategy,
) -> Result<UPolynomial> {
    if p.n() != rel.n() {
        return Err(Error::DimensionMismatch {
            left: p.n(),
            right: rel.n(),
        });
    }
    Ok(match strategy {
        ReductionStrategy::LargestFirst => reduce_largest_first(p, rel),
        ReductionStrategy::FirstFound => reduce_first_found(p, rel),
    })
}

/// Subtracts `c / lc(rel) · (m / lead(rel)) · rel` from `target`, skipping
/// the leading term itself (which cancels `c·m`).
fn apply(target: &mut UPolynomial, m: &UMonomial, c: &ExactRational, rel: &Relation) {
    let cofactor = m.div(&rel.lead).expect("reducer divides monomial");
    let factor = c / &rel.lead_coeff;
    for (t, tc) in rel.poly.terms() {
        if *t == rel.lead {
            continue;
        }
        target.add_term(t.mul(&cofactor), -(&factor * tc));
    }
}

fn reduce_largest_first(p: &UPolynomial, rel: &RelationSet) -> UPolynomial {
    // Rewriting a monomial only produces strictly smaller ones, so once the
    // current maximum is normal it is final.
    let mut work = p.clone();
    let mut out = UPolynomial::zero(p.n());
    while let Some((m, c)) = work.pop_last() {
        match rel.reducer_for(&m) {
            Some(r) => apply(&mut work, &m, &c, r),
            None => out.add_term(m, c),
        }
    }
    out
}

fn reduce_first_found(p: &UPolynomial, rel: &RelationSet) -> UPolynomial {
    let mut work = p.clone();
    loop {
        let hit = work
            .terms()
            .find_map(|(m, c)| rel.reducer_for(m).map(|r| (m.clone(), c.clone(), r)));
        let Some((m, c, r)) = hit else {
            return work;
        };
        work.add_term(m.clone(), -c.clone());
        apply(&mut work, &m, &c, r);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xu_presentation::UVariable::{U, X};

    fn mono(n: usize, vars: &[crate::xu_presentation::UVariable]) -> UPolynomial {
        UPolynomial::monomial(UMonomial::from_vars(n, vars))
    }

    #[test]
    fn rewrites_crossing_pair() {
        let rel = RelationSet::new(4);
        let nf = normal_form(&mono(4, &[U(1, 3), U(2, 4)]), &rel).unwrap();
        assert_eq!(
            nf,
            &mono(4, &[U(1, 2), U(3, 4)]) + &mono(4, &[U(1, 4), U(2, 3)])
        );
    }

    #[test]
    fn rewrites_covered_x() {
        let rel = RelationSet::new(3);
        let nf = normal_form(&mono(3, &[X(2), U(1, 3)]), &rel).unwrap();
        assert_eq!(nf, &mono(3, &[X(1), U(2, 3)]) + &mono(3, &[X(3), U(1, 2)]));
    }

    #[test]
    fn normal_monomial_is_fixed() {
        let rel = RelationSet::new(4);
        let p = mono(4, &[U(1, 2), U(3, 4)]);
        assert_eq!(normal_form(&p, &rel).unwrap(), p);
    }

    #[test]
    fn strategies_agree_on_a_mixed_input() {
        let rel = RelationSet::new(5);
        let p = &(&mono(5, &[X(3), U(1, 4), U(2, 5)]) + &mono(5, &[U(1, 3), U(2, 4), U(3, 5)]))
            - &mono(5, &[X(2), X(4), U(1, 5)]);
        let a = normal_form_with(&p, &rel, ReductionStrategy::LargestFirst).unwrap();
        let b = normal_form_with(&p, &rel, ReductionStrategy::FirstFound).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pi(), p.pi());
    }

    #[test]
    fn mismatched_n() {
        let rel = RelationSet::new(4);
        assert!(normal_form(&UPolynomial::x(3, 1), &rel).is_err());
    }
}
