use cayley::exactnum::{Monomial, Poly, PolyRing, Ring, Q};
use cayley::exterior::{IndexSet, MultiVector};
use cayley::grassmann::{
    cayley_functionals, is_cayley_plane, localized_equations, plucker_of_plane, plucker_relations, transported_functionals,
    Basis, Chart, PluckerPoint,
};
use cayley::liegroups::eigenbasis_change_inverse;
use cayley::octonion::{cross3, random_orthogonal, Octonion};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn q() -> impl Strategy<Value = Q> {
    (-20i64..=20, -20i64..=20, 1i64..=12).prop_map(|(a, b, d)| Q::new(a, b, d))
}

fn small_q() -> impl Strategy<Value = Q> {
    (-3i64..=3, -2i64..=2).prop_map(|(a, b)| Q::gaussian_int(a, b))
}

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(q()).prop_map(Octonion)
}

fn plane() -> impl Strategy<Value = [Octonion; 4]> {
    prop::array::uniform4(prop::array::uniform8(small_q()).prop_map(Octonion))
}

fn four_set() -> impl Strategy<Value = IndexSet> {
    (0usize..70).prop_map(|k| IndexSet::all(4)[k])
}

fn poly() -> impl Strategy<Value = Poly> {
    let term = (q(), prop::collection::vec((0u16..3, 1i32..4), 0..3))
        .prop_map(|(c, m)| Poly::term(Monomial::from_pairs(m), c));
    prop::collection::vec(term, 0..5).prop_map(|ts| ts.iter().fold(Poly::zero(), |acc, t| acc.add_ref(t)))
}

proptest! {
    #[test]
    fn field_axioms(a in q(), b in q(), c in q()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn gaussian_text_roundtrip(a in q()) {
        prop_assert_eq!(a.to_string().parse::<Q>().unwrap(), a);
    }

    #[test]
    fn poly_text_roundtrip(p in poly()) {
        let ring = PolyRing::new(["x", "y", "z"]);
        prop_assert_eq!(ring.parse(&ring.display(&p)).unwrap(), p);
    }

    #[test]
    fn index_set_text_roundtrip(mask in 0u8..=255) {
        let s = IndexSet::from_mask(mask);
        prop_assert_eq!(s.to_string().parse::<IndexSet>().unwrap(), s);
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert_eq!(x.mul(&x.mul(&y)), x.mul(&x).mul(&y));
        prop_assert_eq!(y.mul(&x).mul(&x), y.mul(&x.mul(&x)));
        prop_assert_eq!(x.mul(&y).conj(), y.conj().mul(&x.conj()));
    }

    #[test]
    fn wedge_is_graded_commutative(a in prop::array::uniform8(q()), b in prop::array::uniform8(q())) {
        let one = |c: [Q; 8]| MultiVector::from_terms(1, (0u8..8).map(|k| (IndexSet::singleton(k), c[k as usize].clone())));
        let (u, v) = (one(a), one(b));
        prop_assert_eq!(u.wedge(&v).unwrap(), v.wedge(&u).unwrap().neg());
        prop_assert!(u.wedge(&u).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn relations_vanish_on_planes(v in plane()) {
        if let Ok(p) = plucker_of_plane([&v[0], &v[1], &v[2], &v[3]]) {
            prop_assert!(plucker_relations().iter().all(|r| r.eval(&p).is_zero()));
        }
    }

    #[test]
    fn straightening_recovers_coordinates(v in plane(), base in four_set()) {
        let Ok(p) = plucker_of_plane([&v[0], &v[1], &v[2], &v[3]]) else { return Ok(()) };
        let ch = Chart::get(base);
        let Some(coords) = ch.coordinates(&p) else { return Ok(()) };
        let inv = p.get(base).inv().unwrap();
        for t in IndexSet::all(4) {
            let expected = p.get(t) * &inv;
            prop_assert_eq!(ch.straighten(t).eval(&coords).unwrap(), expected, "q{} on U{}", t, base);
        }
    }

    #[test]
    fn cayley_planes_solve_every_chart(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let o = random_orthogonal(&mut rng, 3);
        let w = cross3(&o[0], &o[1], &o[2]);
        let vs = [&o[0], &o[1], &o[2], &w];
        prop_assert!(is_cayley_plane(vs).unwrap());

        let p = plucker_of_plane(vs).unwrap();
        let ci = eigenbasis_change_inverse();
        let tilde: Vec<Octonion> = vs.iter().map(|x| Octonion(ci.apply(x.coords()).try_into().unwrap())).collect();
        let pt = plucker_of_plane([&tilde[0], &tilde[1], &tilde[2], &tilde[3]]).unwrap();
        for (point, basis) in [(&p, Basis::Standard), (&pt, Basis::Tilde)] {
            for base in IndexSet::all(4) {
                if let Some(coords) = Chart::get(base).coordinates(point) {
                    let sys = localized_equations(base, basis);
                    prop_assert!(sys.eval(&coords).iter().all(Q::is_zero), "{:?} on U{}", basis, base);
                }
            }
        }
    }
}

fn span_rank(fs: &[MultiVector]) -> usize {
    let rows: Vec<Vec<Q>> = fs.iter().map(|f| IndexSet::all(4).into_iter().map(|s| f.coeff(s)).collect()).collect();
    cayley::exactnum::Matrix::from_rows(rows).unwrap().rank()
}

#[test]
fn tilde_functionals_span_the_transported_ones() {
    let tilde = cayley_functionals(Basis::Tilde);
    let transported = transported_functionals();
    let both: Vec<MultiVector> = tilde.iter().cloned().chain(transported.iter().cloned()).collect();
    assert_eq!(span_rank(tilde), 7);
    assert_eq!(span_rank(&transported), 7);
    assert_eq!(span_rank(&both), 7);
}

#[test]
fn coordinate_points_are_on_the_grassmannian() {
    for s in IndexSet::all(4) {
        assert!(PluckerPoint::coordinate(s).on_grassmannian());
    }
}
