use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use m2chow::bundle::{
    mult_pushforward, mult_pushforward_chain, segre_pushforward, srj_table, BundleClasses,
    SegreClass,
};
use m2chow::group::{
    bg_ring, bg_ring_over, bg_vars, bt_pullback, bt_pushforward, rep_euler_class, RepSpec,
    TorusTransfer, BETA1, GAMMA,
};
use m2chow::ideal::{graded_piece, ideal_equal, multiplication_kernel, smith, Ideal, IntMatrix, RingSpec};
use m2chow::ring::{
    chern_series_quotient, expand_elementary, monomials_of_degree, series_product,
    symmetrize_to_elementary, IntPolynomial, SymmetricFamilies, SymmetricFamily, VarSet,
};

fn vars(spec: &[(&str, u32)]) -> Arc<VarSet> {
    VarSet::new(spec.iter().copied()).unwrap()
}

fn p(v: &Arc<VarSet>, s: &str) -> IntPolynomial {
    IntPolynomial::parse(v, s).unwrap()
}

fn from_coeffs(v: &Arc<VarSet>, d: u32, coeffs: &[i64]) -> IntPolynomial {
    let mut out = IntPolynomial::zero(v);
    for (m, c) in monomials_of_degree(&v.weights(), d).into_iter().zip(coeffs) {
        out = &out + &IntPolynomial::monomial(v, m, BigInt::from(*c));
    }
    out
}

/// A homogeneous polynomial of degree `d` with coefficients in `range`.
fn homogeneous(
    v: Arc<VarSet>,
    d: u32,
    range: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = IntPolynomial> {
    let n = monomials_of_degree(&v.weights(), d).len();
    prop::collection::vec(range, n).prop_map(move |c| from_coeffs(&v, d, &c))
}

fn homogeneous_upto(
    v: Arc<VarSet>,
    max: u32,
    range: std::ops::RangeInclusive<i64>,
) -> impl Strategy<Value = IntPolynomial> {
    (0..=max).prop_flat_map(move |d| homogeneous(v.clone(), d, range.clone()))
}

fn open_vars() -> Arc<VarSet> {
    vars(&[("t", 1), ("lambda1", 1), ("lambda2", 2)])
}

fn main_ring() -> RingSpec {
    let v = vars(&[("lambda1", 1), ("lambda2", 2), ("delta1", 1)]);
    RingSpec::new(
        "CH(M2bar)",
        Ideal::parse(
            &v,
            &[
                "24*lambda1^2 - 48*lambda2",
                "20*lambda1*lambda2 - 4*delta1*lambda2",
                "delta1^3 + delta1^2*lambda1",
                "2*delta1^2 + 2*delta1*lambda1",
            ],
        )
        .unwrap(),
    )
}

fn delta1_ring() -> RingSpec {
    let v = vars(&[("lambda1", 1), ("lambda2", 2), ("gamma", 1)]);
    RingSpec::new(
        "CH(Delta1)",
        Ideal::parse(&v, &["2*gamma", "gamma^2 + lambda1*gamma", "24*lambda1^2 - 48*lambda2", "24*lambda1*lambda2"])
            .unwrap(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(
        x in homogeneous_upto(open_vars(), 3, i64::MIN..=i64::MAX),
        y in homogeneous_upto(open_vars(), 3, i64::MIN..=i64::MAX),
        z in homogeneous_upto(open_vars(), 3, -1000..=1000),
    ) {
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x + &y) - &y, x.clone());
        prop_assert_eq!(&x * &IntPolynomial::one(x.vars()), x.clone());
        // Products of 64-bit coefficients are exact.
        let c = x.constant_term() * y.constant_term();
        prop_assert_eq!((&x * &y).constant_term(), c);
    }

    #[test]
    fn substitution_is_a_graded_homomorphism(
        x in homogeneous_upto(open_vars(), 4, -50..=50),
        y in homogeneous_upto(open_vars(), 4, -50..=50),
        a in -5i64..=5, b in -5i64..=5, c in -5i64..=5,
    ) {
        let h = vars(&[("lambda1", 1), ("lambda2", 2)]);
        let images = [
            p(&h, "lambda1").scale(a),
            p(&h, "lambda1").scale(b),
            &p(&h, "lambda1^2").scale(c) + &p(&h, "lambda2"),
        ];
        let phi = |q: &IntPolynomial| q.map_into(&h, &images).unwrap();
        prop_assert_eq!(phi(&(&x * &y)), &phi(&x) * &phi(&y));
        prop_assert_eq!(phi(&(&x + &y)), &phi(&x) + &phi(&y));
        let img = phi(&x);
        prop_assert!(img.is_zero() || img.homogeneous_degree() == x.homogeneous_degree());
        let t = p(&open_vars(), "t");
        let sub = |q: &IntPolynomial| q.substitute(&[("t", &t + &p(&open_vars(), "lambda1").scale(a))]).unwrap();
        prop_assert_eq!(sub(&(&x * &y)), &sub(&x) * &sub(&y));
    }

    #[test]
    fn symmetrize_round_trip(q in homogeneous_upto(vars(&[("e1", 1), ("e2", 2), ("u", 1)]), 5, -30..=30)) {
        let target = q.vars().clone();
        let source = vars(&[("r1", 1), ("r2", 1), ("u", 1)]);
        let fams = SymmetricFamilies::new(vec![SymmetricFamily::new(["r1", "r2"], ["e1", "e2"])]);
        let expanded = expand_elementary(&q, &fams, &source).unwrap();
        let back = symmetrize_to_elementary(&expanded, &fams, &target).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(expand_elementary(&back, &fams, &source).unwrap(), expanded);
    }

    #[test]
    fn series_quotient_multiplies_back(
        n1 in homogeneous(vars(&[("a", 1), ("b", 2)]), 1, -9..=9),
        n2 in homogeneous(vars(&[("a", 1), ("b", 2)]), 2, -9..=9),
        d1 in homogeneous(vars(&[("a", 1), ("b", 2)]), 1, -9..=9),
        d2 in homogeneous(vars(&[("a", 1), ("b", 2)]), 2, -9..=9),
        k in 0usize..=6,
    ) {
        let v = n1.vars().clone();
        let one = IntPolynomial::one(&v);
        let num = [one.clone(), n1, n2];
        let den = [one, d1, d2];
        let q: Vec<IntPolynomial> = (0..=k).map(|i| chern_series_quotient(&num, &den, i).unwrap()).collect();
        let back = series_product(&q, &den, k);
        for (i, got) in back.iter().enumerate() {
            let want = num.get(i).cloned().unwrap_or_else(|| IntPolynomial::zero(&v));
            prop_assert_eq!(got, &want);
        }
    }

    #[test]
    fn normal_form_ignores_generator_order(
        order in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        x in homogeneous_upto(main_ring().vars().clone(), 6, -100..=100),
    ) {
        let r = main_ring();
        let gens = r.relations.generators();
        let shuffled = Ideal::new(r.vars(), order.iter().map(|&i| gens[i].clone()).collect()).unwrap();
        prop_assert_eq!(shuffled.normal_form(&x), r.relations.normal_form(&x));
    }

    #[test]
    fn ideal_equality_invariances(
        order in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
        a in -7i64..=7, b in -7i64..=7,
    ) {
        let r = main_ring();
        let i = &r.relations;
        let gens = i.generators();
        let shuffled = Ideal::new(r.vars(), order.iter().map(|&k| gens[k].clone()).collect()).unwrap();
        // Generators 0 and 3 share degree 2.
        let combo = &gens[0].scale(a) + &gens[3].scale(b);
        let grown = i.with_generators([combo]).unwrap();
        prop_assert!(ideal_equal(i, i));
        prop_assert!(ideal_equal(i, &shuffled) && ideal_equal(&shuffled, i));
        prop_assert!(ideal_equal(i, &grown) && ideal_equal(&grown, i));
        let smaller = Ideal::new(r.vars(), gens[..3].to_vec()).unwrap();
        prop_assert_eq!(ideal_equal(i, &smaller), ideal_equal(&smaller, i));
    }

    #[test]
    fn smith_form_is_certified(
        (rows, cols, entries) in (1usize..=5, 1usize..=5)
            .prop_flat_map(|(r, c)| (Just(r), Just(c), prop::collection::vec(-30i64..=30, r * c)))
    ) {
        let data: Vec<Vec<BigInt>> = entries.chunks(cols).map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let a = IntMatrix::from_rows(data, cols);
        let s = smith(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.u.determinant().abs().is_one());
        prop_assert!(s.v.determinant().abs().is_one());
        prop_assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(cols));
        prop_assert!(s.d.is_diagonal());
        let inv = s.invariants();
        for w in inv.windows(2) {
            prop_assert!(!w[0].is_zero() && (&w[1] % &w[0]).is_zero());
        }
        prop_assert!(inv.iter().all(|x| x.is_positive()));
        prop_assert!(s.rank() <= rows.min(cols));
    }

    #[test]
    fn kernel_lifts_are_killed(a in -3i64..=3, b in -3i64..=3) {
        let r = delta1_ring();
        let v = r.vars().clone();
        let m = &p(&v, "lambda1").scale(a) + &p(&v, "gamma").scale(b);
        prop_assume!(!m.is_zero());
        let k = multiplication_kernel(&r, &m, 5, &[]).unwrap();
        for piece in &k.pieces {
            for g in &piece.generators {
                prop_assert!(r.relations.contains(&(&m * g)), "{} * {} survives", m, g);
            }
        }
    }

    #[test]
    fn oracle_agreement_on_random_classes(x in homogeneous_upto(main_ring().vars().clone(), 6, -50..=50)) {
        let r = main_ring();
        let d = x.homogeneous_degree().unwrap_or(0);
        let piece = graded_piece(&r, d);
        prop_assert_eq!(r.relations.contains(&x), piece.contains(&x).unwrap());
        // Multiples of generators are always members.
        let y = &x * &r.relations.generators()[1];
        let piece = graded_piece(&r, y.homogeneous_degree().unwrap_or(0));
        prop_assert!(r.relations.contains(&y) && piece.contains(&y).unwrap());
    }

    #[test]
    fn basis_change_is_integral(r in 1u32..=6, j in 0u32..=6) {
        prop_assume!(j <= r);
        let v = vars(&[("t", 1), ("c1", 1), ("c2", 2)]);
        let cls = BundleClasses::parse(&v, "c1", "c2").unwrap();
        let t = p(&v, "t");
        let table = srj_table(r, &cls, &t).unwrap();
        let tj = t.pow(j);
        let e = table.express(&tj).unwrap();
        for i in j + 1..=r {
            prop_assert!(e.coefficient(i).is_zero());
        }
        prop_assert_eq!(&e.to_polynomial(&table).unwrap(), &tj);
        let s = table.get(j).unwrap();
        prop_assert_eq!(s.degree_in(0), j);
        prop_assert_eq!(s.coefficient_of_power(0, j), IntPolynomial::one(&v));
    }

    #[test]
    fn multiplication_pushforward_is_symmetric_and_associative(
        a in 1u32..=3, b in 1u32..=3, c in 1u32..=2,
        al in 0u32..=3, be in 0u32..=3, ga in 0u32..=2,
    ) {
        prop_assume!(al <= a && be <= b && ga <= c);
        prop_assert_eq!(mult_pushforward(a, al, b, be).unwrap(), mult_pushforward(b, be, a, al).unwrap());
        let (c1, (k, _)) = mult_pushforward(a, al, b, be).unwrap();
        let (c2, (l, n)) = mult_pushforward(a + b, k, c, ga).unwrap();
        let chained = mult_pushforward_chain(&[(a, al), (b, be), (c, ga)]).unwrap();
        prop_assert_eq!(chained, (c1 * c2, (l, n)));
    }

    #[test]
    fn segre_quadratic_relation(
        a1 in -5i64..=5, a2 in -5i64..=5, b1 in -5i64..=5, b2 in -5i64..=5,
    ) {
        let v = vars(&[("x", 1), ("h", 1)]);
        let h = p(&v, "h");
        let e1 = BundleClasses::new(h.scale(a1), h.pow(2).scale(a2)).unwrap();
        let e2 = BundleClasses::new(h.scale(b1), h.pow(2).scale(b2)).unwrap();
        let x = p(&v, "x");
        let push = |c| segre_pushforward(c, &e1, &e2, &x).unwrap();
        let lhs = &x * &push(SegreClass::X2);
        let rhs = &(&push(SegreClass::X1X2) - &(&e2.c1 * &push(SegreClass::X2)))
            - &(&e2.c2 * &push(SegreClass::One));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn degree_doubling(x in homogeneous_upto(bg_vars(), 6, -20..=20)) {
        let bg = bg_ring();
        let back = bt_pushforward(&bt_pullback(&x).unwrap()).unwrap();
        prop_assert_eq!(back, bg.normal_form(&x.scale(2)));
    }

    #[test]
    fn projection_formula(
        a in homogeneous_upto(bg_vars(), 3, -20..=20),
        b in homogeneous_upto(TorusTransfer::new(&[]).unwrap().torus_vars().clone(), 4, -20..=20),
    ) {
        let bg = bg_ring();
        let lhs = bt_pushforward(&(&bt_pullback(&a).unwrap() * &b)).unwrap();
        prop_assert_eq!(lhs, bg.normal_form(&(&a * &bt_pushforward(&b).unwrap())));
    }

    #[test]
    fn whitney_for_euler_classes(
        n in 0u32..=3, tw in -2i64..=2, w in prop::collection::vec(-3i64..=3, 1..=2),
    ) {
        let v = vars(&[("alpha1", 1), ("alpha2", 2), ("beta1", 1), ("beta2", 2), ("gamma", 1)]);
        let ring = bg_ring_over(&v, BETA1, GAMMA).unwrap();
        let a = RepSpec::sym_power(n, tw);
        let b = RepSpec::doubled(&w);
        let sum = rep_euler_class(&RepSpec::Sum(vec![a.clone(), b.clone()]), &ring).unwrap();
        let prod = &rep_euler_class(&a, &ring).unwrap() * &rep_euler_class(&b, &ring).unwrap();
        prop_assert_eq!(ring.normal_form(&sum), ring.normal_form(&prod));
    }
}
