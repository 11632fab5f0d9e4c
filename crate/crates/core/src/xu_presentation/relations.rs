use std::fmt;

use super::{UMonomial, UPolynomial};
use crate::exact_poly::ExactRational;

/// Which relation: `R([i,j,k,l])` for `r(i,j,k,l)`, `S([i,j,k])` for
/// `s(i,j,k)`. The derived order puts every `S` before every `R`, then
/// sorts by index tuple; reduction picks reducers in this order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationId {
    S([usize; 3]),
    R([usize; 4]),
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationId::S([i, j, k]) => write!(f, "s({i},{j},{k})"),
            RelationId::R([i, j, k, l]) => write!(f, "r({i},{j},{k},{l})"),
        }
    }
}

/// A relation together with its DILL leading term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub id: RelationId,
    pub poly: UPolynomial,
    pub lead: UMonomial,
    pub lead_coeff: ExactRational,
}

impl Relation {
    fn new(id: RelationId, poly: UPolynomial) -> Self {
        let (lead, lead_coeff) = poly
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("relations are nonzero");
        Relation {
            id,
            poly,
            lead,
            lead_coeff,
        }
    }

    /// `r(i,j,k,l) = u_ij u_kl - u_ik u_jl + u_il u_jk`.
    pub fn r(n: usize, i: usize, j: usize, k: usize, l: usize) -> Self {
        let u = |a, b| UPolynomial::u(n, a, b);
        let poly = &(&(&u(i, j) * &u(k, l)) - &(&u(i, k) * &u(j, l))) + &(&u(i, l) * &u(j, k));
        Self::new(RelationId::R([i, j, k, l]), poly)
    }

    /// `s(i,j,k) = x_i u_jk - x_j u_ik + x_k u_ij`.
    pub fn s(n: usize, i: usize, j: usize, k: usize) -> Self {
        let u = |a, b| UPolynomial::u(n, a, b);
        let x = |a| UPolynomial::x(n, a);
        let poly = &(&(&x(i) * &u(j, k)) - &(&x(j) * &u(i, k))) + &(&x(k) * &u(i, j));
        Self::new(RelationId::S([i, j, k]), poly)
    }
}

/// The generating relations of `ker π` for a fixed `n`, possibly with some
/// removed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    n: usize,
    /// `s(i,j,k)` in lexicographic index order.
    pub s: Vec<Relation>,
    /// `r(i,j,k,l)` in lexicographic index order.
    pub r: Vec<Relation>,
}

impl RelationSet {
    /// All `C(n,3)` relations `s` and `C(n,4)` relations `r`.
    pub fn new(n: usize) -> Self {
        let mut s = Vec::new();
        let mut r = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    s.push(Relation::s(n, i, j, k));
                    for l in k + 1..=n {
                        r.push(Relation::r(n, i, j, k, l));
                    }
                }
            }
        }
        r.sort_by_key(|rel| rel.id);
        RelationSet { n, s, r }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `S` relations first, then `R`.
    pub fn iter(&self) -> impl Iterator<Item = &Relation> {
        self.s.iter().chain(&self.r)
    }

    pub fn len(&self) -> usize {
        self.s.len() + self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, id: RelationId) -> Option<&Relation> {
        self.iter().find(|rel| rel.id == id)
    }

    /// A copy with one relation removed.
    pub fn without(&self, id: RelationId) -> Self {
        RelationSet {
            n: self.n,
            s: self.s.iter().filter(|rel| rel.id != id).cloned().collect(),
            r: self.r.iter().filter(|rel| rel.id != id).cloned().collect(),
        }
    }

    /// The first relation (in `S`-then-`R`, index order) whose leading
    /// monomial divides `m`.
    pub fn reducer_for(&self, m: &UMonomial) -> Option<&Relation> {
        self.iter().find(|rel| rel.lead.divides(m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::binomial;

    fn minus_one() -> ExactRational {
        crate::exact_poly::rat(-1)
    }

    #[test]
    fn sizes() {
        for n in 1..=7 {
            let rel = RelationSet::new(n);
            assert_eq!(rel.r.len(), if n >= 4 { binomial(n, 4) } else { 0 });
            assert_eq!(rel.s.len(), if n >= 3 { binomial(n, 3) } else { 0 });
        }
    }

    #[test]
    fn leading_monomials() {
        let rel = RelationSet::new(4);
        let r = rel.get(RelationId::R([1, 2, 3, 4])).unwrap();
        assert_eq!(r.lead, UMonomial::u(4, 1, 3).mul(&UMonomial::u(4, 2, 4)));
        assert_eq!(r.lead_coeff, minus_one());
        let s = rel.get(RelationId::S([1, 2, 3])).unwrap();
        assert_eq!(s.lead, UMonomial::x(4, 2).mul(&UMonomial::u(4, 1, 3)));
        assert_eq!(s.lead_coeff, minus_one());
    }

    #[test]
    fn ordering_of_ids() {
        assert!(RelationId::S([2, 3, 4]) < RelationId::R([1, 2, 3, 4]));
        assert!(RelationId::S([1, 2, 4]) < RelationId::S([1, 3, 4]));
    }
}
