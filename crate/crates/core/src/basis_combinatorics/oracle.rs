//! Kernel of `Δ` on one bidegree, by exact linear algebra.
//!
//! Depends only on [`crate::exact_poly`]; nothing here knows about the
//! generators, the relations or the normal-monomial basis.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg;
use crate::exact_poly::{ExactRational, XYMonomial, XYPolynomial};

/// `Δ` restricted to the monomials of bidegree `(d1, d2)`, with values in
/// bidegree `(d1 + 1, d2 - 1)`.
#[derive(Clone, Debug)]
pub struct GradedComponent {
    pub n: usize,
    pub bidegree: (u32, u32),
    /// Source monomials, lex descending.
    pub domain_basis: Vec<XYMonomial>,
    /// Target monomials, lex descending. Empty when `d2 = 0`.
    pub codomain_basis: Vec<XYMonomial>,
    /// Sparse columns: `columns[j]` lists `(row, entry)` of `Δ(domain_basis[j])`.
    pub columns: Vec<Vec<(usize, ExactRational)>>,
}

/// All monomials of bidegree `(d1, d2)`, lex descending.
pub fn monomials_of_bidegree(n: usize, d1: u32, d2: u32) -> Vec<XYMonomial> {
    let xs = compositions(n, d1);
    let ys = compositions(n, d2);
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for a in &xs {
        for b in &ys {
            out.push(XYMonomial::new(a, b).expect("equal lengths"));
        }
    }
    out.sort_by(|p, q| q.cmp(p));
    out
}

fn compositions(n: usize, total: u32) -> Vec<Vec<u32>> {
    fn rec(pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == cur.len() {
            cur[pos] = left;
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[pos] = e;
            rec(pos + 1, left - e, cur, out);
        }
    }
    if n == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    rec(0, total, &mut vec![0; n], &mut out);
    out
}

impl GradedComponent {
    pub fn build(n: usize, d1: u32, d2: u32) -> Self {
        let domain_basis = monomials_of_bidegree(n, d1, d2);
        let codomain_basis = if d2 == 0 {
            Vec::new()
        } else {
            monomials_of_bidegree(n, d1 + 1, d2 - 1)
        };
        let row_of: HashMap<&XYMonomial, usize> = codomain_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m, i))
            .collect();
        let columns = domain_basis
            .iter()
            .map(|m| {
                let image = XYPolynomial::monomial(m.clone()).delta();
                let mut col: Vec<(usize, ExactRational)> =
                    image.terms().map(|(t, c)| (row_of[t], c.clone())).collect();
                col.sort_by_key(|(r, _)| *r);
                col
            })
            .collect();
        GradedComponent {
            n,
            bidegree: (d1, d2),
            domain_basis,
            codomain_basis,
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.codomain_basis.len()
    }

    pub fn cols(&self) -> usize {
        self.domain_basis.len()
    }

    /// Null space basis. The matrix is split into blocks that share no
    /// rows; each block is eliminated on its own.
    pub fn kernel(&self) -> Vec<XYPolynomial> {
        let blocks = self.blocks();
        let mut out = Vec::new();
        for cols in blocks {
            let mut rows: Vec<usize> = cols
                .iter()
                .flat_map(|&c| self.columns[c].iter().map(|(r, _)| *r))
                .collect();
            rows.sort_unstable();
            rows.dedup();
            let local_row: HashMap<usize, usize> =
                rows.iter().enumerate().map(|(i, &r)| (r, i)).collect();
            let mut dense = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
            for (j, &c) in cols.iter().enumerate() {
                for (r, v) in &self.columns[c] {
                    debug_assert!(v.is_integer());
                    dense[local_row[r]][j] = v.to_integer();
                }
            }
            for vector in linalg::kernel_basis(&dense, cols.len()) {
                let terms = cols
                    .iter()
                    .zip(vector)
                    .map(|(&c, v)| (self.domain_basis[c].clone(), v));
                out.push(XYPolynomial::from_terms(self.n, terms).expect("same n"));
            }
        }
        out
    }

    /// Column sets of the connected components of the row/column incidence
    /// graph, in order of their smallest column.
    fn blocks(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.cols()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut owner: Vec<Option<usize>> = vec![None; self.rows()];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, _) in col {
                match owner[*r] {
                    None => owner[*r] = Some(c),
                    Some(o) => {
                        let (a, b) = (find(&mut parent, o), find(&mut parent, c));
                        if a != b {
                            parent[a.max(b)] = a.min(b);
                        }
                    }
                }
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for c in 0..self.cols() {
            let root = find(&mut parent, c);
            groups.entry(root).or_default().push(c);
        }
        let mut blocks: Vec<Vec<usize>> = groups.into_values().collect();
        blocks.sort_by_key(|b| b[0]);
        blocks
    }
}

/// Dimension and an explicit basis of `ker Δ` on bidegree `(d1, d2)`.
#[derive(Clone, Debug)]
pub struct OracleKernel {
    pub dimension: usize,
    pub basis: Vec<XYPolynomial>,
}

pub fn oracle_kernel(n: usize, d1: u32, d2: u32) -> OracleKernel {
    let basis = GradedComponent::build(n, d1, d2).kernel();
    OracleKernel {
        dimension: basis.len(),
        basis,
    }
}
