use proptest::prelude::*;

use weitzenbock::basis_combinatorics::{
    enumerate_normal, graded_dimension, is_normal, lead_of, oracle_kernel, reconstruct_from_lead,
};
use weitzenbock::cli::parser::{parse_xu, parse_xy};
use weitzenbock::constants_kernel::decompose;
use weitzenbock::xu_presentation::{normal_form, normal_form_with, ReductionStrategy, RelationSet};
use weitzenbock::{
    Error, ExactRational, UMonomial, UPolynomial, UVariable, XYMonomial, XYPolynomial,
};

fn rational() -> impl Strategy<Value = ExactRational> {
    (-6i64..=6, 1i64..=3).prop_map(|(p, q)| ExactRational::new(p.into(), q.into()))
}

fn xy_monomial(n: usize, max_exp: u32) -> impl Strategy<Value = XYMonomial> {
    (
        prop::collection::vec(0..=max_exp, n),
        prop::collection::vec(0..=max_exp, n),
    )
        .prop_map(|(a, b)| XYMonomial::new(&a, &b).unwrap())
}

fn xy_poly_n(n: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = XYPolynomial> {
    prop::collection::vec((rational(), xy_monomial(n, max_exp)), 0..=max_terms).prop_map(
        move |ts| XYPolynomial::from_terms(n, ts.into_iter().map(|(c, m)| (m, c))).unwrap(),
    )
}

fn xy_pair() -> impl Strategy<Value = (XYPolynomial, XYPolynomial)> {
    (1usize..=3).prop_flat_map(|n| (xy_poly_n(n, 2, 4), xy_poly_n(n, 2, 4)))
}

fn u_variable(n: usize) -> impl Strategy<Value = UVariable> {
    let x = (1..=n).prop_map(UVariable::X);
    if n < 2 {
        return x.boxed();
    }
    let u = (1..n)
        .prop_flat_map(move |i| (Just(i), i + 1..=n))
        .prop_map(|(i, j)| UVariable::U(i, j));
    prop_oneof![x, u].boxed()
}

fn u_monomial(n: usize, max_factors: usize) -> impl Strategy<Value = UMonomial> {
    prop::collection::vec(u_variable(n), 0..=max_factors)
        .prop_map(move |vs| UMonomial::from_vars(n, &vs))
}

fn u_poly_n(n: usize, max_factors: usize, max_terms: usize) -> impl Strategy<Value = UPolynomial> {
    prop::collection::vec((rational(), u_monomial(n, max_factors)), 0..=max_terms).prop_map(
        move |ts| UPolynomial::from_terms(n, ts.into_iter().map(|(c, m)| (m, c))).unwrap(),
    )
}

fn u_poly() -> impl Strategy<Value = UPolynomial> {
    (1usize..=4).prop_flat_map(|n| u_poly_n(n, 3, 5))
}

fn u_pair() -> impl Strategy<Value = (UPolynomial, UPolynomial)> {
    (1usize..=4).prop_flat_map(|n| (u_poly_n(n, 2, 3), u_poly_n(n, 2, 3)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn delta_is_a_derivation((f, g) in xy_pair()) {
        let lhs = (&f * &g).delta();
        let rhs = &(&f.delta() * &g) + &(&f * &g.delta());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn delta_is_locally_nilpotent(f in (1usize..=3).prop_flat_map(|n| xy_poly_n(n, 3, 4))) {
        let steps = f.deg_y().unwrap_or(0) + 1;
        let mut g = f.clone();
        for _ in 0..steps {
            g = g.delta();
        }
        prop_assert!(g.is_zero());
    }

    #[test]
    fn delta_shifts_bidegree(f in (1usize..=3).prop_flat_map(|n| xy_poly_n(n, 3, 4))) {
        for ((d1, d2), part) in f.bidegree_split() {
            let image = part.delta();
            if let Some(b) = image.bidegree() {
                prop_assert_eq!(b, (d1 + 1, d2 - 1));
            }
        }
    }

    #[test]
    fn substitution_commutes_with_delta(
        (f, alpha) in (2usize..=3).prop_flat_map(|n| {
            (xy_poly_n(n, 2, 4), prop::collection::vec(rational(), n - 1))
        })
    ) {
        let a = f.delta().phi_alpha(&alpha).unwrap();
        let b = f.phi_alpha(&alpha).unwrap().delta();
        prop_assert_eq!(a, b);
        let s = f.phi_symbolic().unwrap();
        prop_assert_eq!(f.delta().phi_symbolic().unwrap(), s.delta());
        prop_assert_eq!(s.evaluate(&alpha), f.phi_alpha(&alpha).unwrap());
    }

    #[test]
    fn exact_division_undoes_multiplication((f, g) in xy_pair()) {
        prop_assume!(!g.is_zero());
        let product = &f * &g;
        prop_assert_eq!(product.divide_exact(&g).unwrap(), f);
    }

    #[test]
    fn lex_lead_is_multiplicative((f, g) in xy_pair()) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let lead = (&f * &g).lead_xy().unwrap();
        prop_assert_eq!(lead, f.lead_xy().unwrap().mul(&g.lead_xy().unwrap()));
    }

    #[test]
    fn pi_is_a_ring_homomorphism((p, q) in u_pair()) {
        prop_assert_eq!((&p * &q).pi(), &p.pi() * &q.pi());
        prop_assert_eq!((&p + &q).pi(), &p.pi() + &q.pi());
    }

    #[test]
    fn pi_lands_in_the_constants(p in u_poly()) {
        prop_assert!(p.pi().delta().is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_confluent(p in u_poly()) {
        let rel = RelationSet::new(p.n());
        let nf = normal_form(&p, &rel).unwrap();
        prop_assert_eq!(normal_form(&nf, &rel).unwrap(), nf.clone());
        let other = normal_form_with(&p, &rel, ReductionStrategy::FirstFound).unwrap();
        prop_assert_eq!(&other, &nf);
        for (m, _) in nf.terms() {
            prop_assert!(is_normal(m).is_normal, "{m}");
        }
        prop_assert_eq!(nf.pi(), p.pi());
        prop_assert_eq!(p.pi().is_zero(), nf.is_zero());
    }

    #[test]
    fn decomposition_is_a_preimage(p in u_poly()) {
        let f = p.pi();
        let d = decompose(&f).unwrap();
        prop_assert_eq!(d.result.pi(), f);
        let rel = RelationSet::new(p.n());
        prop_assert_eq!(
            normal_form(&d.result, &rel).unwrap(),
            normal_form(&p, &rel).unwrap()
        );
    }

    #[test]
    fn xy_format_parse_round_trip(f in (1usize..=4).prop_flat_map(|n| xy_poly_n(n, 3, 5))) {
        prop_assert_eq!(parse_xy(&f.to_string(), f.n()).unwrap(), f);
    }

    #[test]
    fn xu_format_parse_round_trip(p in u_poly()) {
        prop_assert_eq!(parse_xu(&p.to_string(), p.n()).unwrap(), p);
    }

    #[test]
    fn reconstruction_inverts_lead(
        (n, w, pick) in (1usize..=4, 0u32..=6, any::<prop::sample::Index>())
    ) {
        let basis = enumerate_normal(n, w);
        let v = pick.get(&basis);
        let lead = lead_of(v);
        prop_assert_eq!(&reconstruct_from_lead(&lead).unwrap(), v);
        prop_assert_eq!(UPolynomial::monomial(v.clone()).pi().lead_xy().unwrap(), lead);
    }

    #[test]
    fn normal_monomials_span_the_oracle_kernel((n, d1, d2) in (1usize..=3, 0u32..=4, 0u32..=3)) {
        let kernel = oracle_kernel(n, d1, d2);
        prop_assert_eq!(kernel.dimension, graded_dimension(n, d1, d2));
        let rel = RelationSet::new(n);
        for k in &kernel.basis {
            prop_assert!(k.is_constant());
            let nf = normal_form(&decompose(k).unwrap().result, &rel).unwrap();
            prop_assert_eq!(nf.pi(), k.clone());
            for (m, _) in nf.terms() {
                prop_assert_eq!(m.bidegree(), (d1, d2));
                prop_assert!(is_normal(m).is_normal);
            }
        }
    }

    #[test]
    fn decompose_rejects_exactly_the_non_constants(f in (1usize..=3).prop_flat_map(|n| xy_poly_n(n, 2, 4))) {
        match decompose(&f) {
            Ok(d) => {
                prop_assert!(f.is_constant());
                prop_assert_eq!(d.result.pi(), f);
            }
            Err(e) => {
                prop_assert_eq!(e, Error::NotAConstant);
                prop_assert!(!f.delta().is_zero());
            }
        }
    }
}
