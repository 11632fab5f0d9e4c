use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::monomial::{pair_count, UMonomial};
use crate::error::{Error, Result};

/// The comparison key of the DILL order, written out literally:
/// `(c, d, L, ω)` with `ω = (i_1..i_c, j_1..j_d, k_1..k_d)`.
///
/// `ω` lists `x` indices ascending, then the `u` factors sorted by left
/// endpoint with ties broken by right endpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DillKey {
    pub c: u32,
    pub d: u32,
    pub interval_length: u64,
    pub omega: Vec<usize>,
}

impl DillKey {
    pub fn of(v: &UMonomial) -> Self {
        let mut xs = Vec::new();
        for (i, e) in v.x_factors() {
            xs.extend(std::iter::repeat_n(i, e as usize));
        }
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        for ((j, k), e) in v.u_factors() {
            for _ in 0..e {
                lefts.push(j);
                rights.push(k);
            }
        }
        xs.extend(lefts);
        xs.extend(rights);
        DillKey {
            c: v.deg_x(),
            d: v.deg_u(),
            interval_length: v.interval_length(),
            omega: xs,
        }
    }
}

impl Ord for DillKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.c
            .cmp(&other.c)
            .then(self.d.cmp(&other.d))
            .then(self.interval_length.cmp(&other.interval_length))
            // Reversed on purpose: the tuple with the smaller entry at the
            // first difference is the larger monomial. Contrast with the
            // K[X,Y] order on `XYMonomial`, where larger tuples win.
            .then_with(|| other.omega.cmp(&self.omega))
    }
}

impl PartialOrd for DillKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compares two monomials in the DILL order; `Greater` means `v ≻ w`.
pub fn dill_compare(v: &UMonomial, w: &UMonomial) -> Result<Ordering> {
    if v.n() != w.n() {
        return Err(Error::DimensionMismatch {
            left: v.n(),
            right: w.n(),
        });
    }
    Ok(v.cmp(w))
}

/// Outcome of [`admissibility_probe_seeded`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbeReport {
    pub samples: usize,
    /// A triple `(u, v, w)` for which `u ≻ v` but not `uw ≻ vw`, or for
    /// which the two comparison routes disagree.
    pub counterexample: Option<(UMonomial, UMonomial, UMonomial)>,
}

impl ProbeReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Random multiplicativity check of the DILL order with a fixed seed.
pub fn admissibility_probe(n: usize, samples: usize) -> bool {
    admissibility_probe_seeded(n, samples, 0x5eed).passed()
}

pub fn admissibility_probe_seeded(n: usize, samples: usize, seed: u64) -> ProbeReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let u = random_monomial(&mut rng, n, 4);
        let v = random_monomial(&mut rng, n, 4);
        let w = random_monomial(&mut rng, n, 3);
        if !triple_ok(&u, &v, &w) {
            return ProbeReport {
                samples,
                counterexample: Some((u, v, w)),
            };
        }
    }
    ProbeReport {
        samples,
        counterexample: None,
    }
}

/// Checks that the order relation between `u` and `v` survives
/// multiplication by `w` and that the literal key agrees with `Ord`.
pub(crate) fn triple_ok(u: &UMonomial, v: &UMonomial, w: &UMonomial) -> bool {
    let before = u.cmp(v);
    let after = u.mul(w).cmp(&v.mul(w));
    before == after && DillKey::of(u).cmp(&DillKey::of(v)) == before
}

/// A random monomial with total degree at most `max_degree`.
pub fn random_monomial<R: Rng>(rng: &mut R, n: usize, max_degree: u32) -> UMonomial {
    let nx = n;
    let nu = pair_count(n);
    let mut x = vec![0; nx];
    let mut u = vec![0; nu];
    let deg = rng.gen_range(0..=max_degree);
    for _ in 0..deg {
        let slot = rng.gen_range(0..nx + nu);
        if slot < nx {
            x[slot] += 1;
        } else {
            u[slot - nx] += 1;
        }
    }
    UMonomial::from_parts(n, x, u)
}

/// All monomials of total degree (in `X ∪ U`) at most `max_degree`.
pub fn all_monomials(n: usize, max_degree: u32) -> Vec<UMonomial> {
    let vars = n + pair_count(n);
    let mut out = Vec::new();
    let mut exps = vec![0u32; vars];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, n: usize, out: &mut Vec<UMonomial>) {
        if pos == exps.len() {
            out.push(UMonomial::from_parts(
                n,
                exps[..n].to_vec(),
                exps[n..].to_vec(),
            ));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, left - e, exps, n, out);
        }
        exps[pos] = 0;
    }
    rec(0, max_degree, &mut exps, n, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::xu_presentation::UVariable::{U, X};

    fn m(n: usize, vars: &[super::super::UVariable]) -> UMonomial {
        UMonomial::from_vars(n, vars)
    }

    #[test]
    fn longer_interval_wins() {
        let a = m(3, &[X(2), U(1, 3)]);
        let b = m(3, &[X(1), U(2, 3)]);
        assert_eq!(dill_compare(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn reversed_lex_on_omega() {
        let a = m(4, &[U(1, 3), U(2, 4)]);
        let b = m(4, &[U(1, 4), U(2, 3)]);
        assert_eq!(DillKey::of(&a).omega, vec![1, 2, 3, 4]);
        assert_eq!(DillKey::of(&b).omega, vec![1, 2, 4, 3]);
        assert_eq!(dill_compare(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(DillKey::of(&a).cmp(&DillKey::of(&b)), Ordering::Greater);
    }

    #[test]
    fn interval_length_before_lex() {
        let a = m(4, &[U(1, 3), U(2, 4)]);
        let b = m(4, &[U(1, 2), U(3, 4)]);
        assert_eq!(dill_compare(&a, &b).unwrap(), Ordering::Greater);
    }

    #[test]
    fn x_degree_decides_first() {
        let a = UMonomial::x(2, 1);
        let b = UMonomial::u(2, 1, 2);
        assert_eq!(dill_compare(&a, &b).unwrap(), Ordering::Greater);
        // x_1 ≻ x_2: smaller index is larger
        assert_eq!(
            dill_compare(&UMonomial::x(3, 1), &UMonomial::x(3, 2)).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn mismatched_n() {
        assert_eq!(
            dill_compare(&UMonomial::x(2, 1), &UMonomial::x(3, 1)),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn probe_examples() {
        let u = m(3, &[X(2), U(1, 3)]);
        let v = m(3, &[X(1), U(2, 3)]);
        let w = m(3, &[U(1, 2)]);
        assert!(triple_ok(&u, &v, &w));
        assert!(triple_ok(&u, &u, &w));
        assert!(admissibility_probe(4, 2000));
    }

    #[test]
    fn exhaustive_two_variables_degree_four() {
        let all = all_monomials(2, 4);
        for u in &all {
            for v in &all {
                for w in &all {
                    assert!(triple_ok(u, v, w), "{u} {v} {w}");
                }
            }
        }
    }
}
