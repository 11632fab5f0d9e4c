use super::{normal_form, Relation, RelationId, RelationSet, UPolynomial};

/// An S-polynomial whose normal form is not zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairFailure {
    pub left: RelationId,
    pub right: RelationId,
    pub remainder: UPolynomial,
}

/// Detailed outcome of the Gröbner basis check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerReport {
    pub n: usize,
    pub relations: usize,
    pub pairs_total: usize,
    /// Pairs skipped because their leading monomials are coprime.
    pub pairs_coprime: usize,
    /// Pairs whose S-polynomial was reduced.
    pub pairs_reduced: usize,
    /// True when `max_pairs` stopped the check early.
    pub truncated: bool,
    pub failures: Vec<PairFailure>,
    /// Relations containing a monomial divisible by another relation's lead,
    /// as `(relation, other relation whose lead divides)`.
    pub reducedness_violations: Vec<(RelationId, RelationId)>,
}

impl BuchbergerReport {
    pub fn is_groebner(&self) -> bool {
        self.failures.is_empty() && !self.truncated
    }

    pub fn is_reduced(&self) -> bool {
        self.reducedness_violations.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.is_groebner() && self.is_reduced()
    }
}

/// True iff `rel` is a reduced Gröbner basis: all S-polynomials reduce to
/// zero and no monomial of a relation is divisible by another relation's
/// leading monomial.
pub fn buchberger_verify(rel: &RelationSet) -> bool {
    buchberger_report(rel, None).passed()
}

/// Runs the check, optionally stopping after `max_pairs` S-polynomial
/// reductions.
pub fn buchberger_report(rel: &RelationSet, max_pairs: Option<usize>) -> BuchbergerReport {
    let all: Vec<&Relation> = rel.iter().collect();
    let mut report = BuchbergerReport {
        n: rel.n(),
        relations: all.len(),
        pairs_total: all.len() * all.len().saturating_sub(1) / 2,
        pairs_coprime: 0,
        pairs_reduced: 0,
        truncated: false,
        failures: Vec::new(),
        reducedness_violations: reducedness_violations(&all),
    };

    'pairs: for (a, f) in all.iter().enumerate() {
        for g in &all[a + 1..] {
            if f.lead.is_coprime(&g.lead) {
                report.pairs_coprime += 1;
                continue;
            }
            if max_pairs.is_some_and(|cap| report.pairs_reduced >= cap) {
                report.truncated = true;
                break 'pairs;
            }
            report.pairs_reduced += 1;
            let remainder = normal_form(&s_polynomial(f, g), rel).expect("same n");
            if !remainder.is_zero() {
                report.failures.push(PairFailure {
                    left: f.id,
                    right: g.id,
                    remainder,
                });
            }
        }
    }
    report
}

/// `(L / lt(f)) f - (L / lt(g)) g` with `L = lcm(lead f, lead g)`, leading
/// coefficients normalized to one.
fn s_polynomial(f: &Relation, g: &Relation) -> UPolynomial {
    let lcm = f.lead.lcm(&g.lead);
    let cf = lcm.div(&f.lead).unwrap();
    let cg = lcm.div(&g.lead).unwrap();
    let left = f.poly.mul_monomial(&cf).scale(&f.lead_coeff.recip());
    let right = g.poly.mul_monomial(&cg).scale(&g.lead_coeff.recip());
    &left - &right
}

fn reducedness_violations(all: &[&Relation]) -> Vec<(RelationId, RelationId)> {
    let mut out = Vec::new();
    for f in all {
        for g in all {
            if f.id == g.id {
                continue;
            }
            if f.poly.terms().any(|(m, _)| g.lead.divides(m)) {
                out.push((f.id, g.id));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cases_are_reduced_groebner_bases() {
        for n in 1..=4 {
            let report = buchberger_report(&RelationSet::new(n), None);
            assert!(report.passed(), "n = {n}: {report:?}");
        }
    }

    #[test]
    fn dropping_s123_breaks_it() {
        let rel = RelationSet::new(4).without(RelationId::S([1, 2, 3]));
        let report = buchberger_report(&rel, None);
        assert!(report.is_reduced());
        assert!(!report.failures.is_empty());
        assert!(!buchberger_verify(&rel));
    }

    #[test]
    fn cap_marks_truncation() {
        let report = buchberger_report(&RelationSet::new(4), Some(1));
        assert!(report.truncated);
        assert_eq!(report.pairs_reduced, 1);
        assert!(!report.is_groebner());
    }
}
