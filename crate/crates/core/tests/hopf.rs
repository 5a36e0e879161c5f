use std::collections::BTreeMap;

use proptest::prelude::*;
use qcasimir::cartan::Weight;
use qcasimir::freealg::{weight_of, BorelElem, Side};
use qcasimir::hopf::coproduct;
use qcasimir::qfield::QRat;

type Mono = (Vec<u8>, Weight);

fn side() -> impl Strategy<Value = Side> {
    prop_oneof![Just(Side::Plus), Just(Side::Minus)]
}

fn monomial(side: Side) -> impl Strategy<Value = BorelElem> {
    (prop::collection::vec(1u8..=2, 0..=3), -2i64..=2, -2i64..=2, -2i64..=2, -2i64..=2).prop_map(move |(w, a, b, c, e)| {
        BorelElem::monomial(side, QRat::monomial(c.max(1), e), &w, Weight::new(a, b))
    })
}

fn element(side: Side) -> impl Strategy<Value = BorelElem> {
    prop::collection::vec(monomial(side), 1..3).prop_map(move |ms| ms.iter().fold(BorelElem::zero(side), |acc, m| &acc + m))
}

fn triple_left(x: &BorelElem) -> BTreeMap<(Mono, Mono, Mono), QRat> {
    let mut out: BTreeMap<(Mono, Mono, Mono), QRat> = BTreeMap::new();
    for (c, (lw, lk), (rw, rk)) in coproduct(x).iter() {
        let l = BorelElem::monomial(x.side(), QRat::one(), lw, lk);
        for (c2, (aw, ak), (bw, bk)) in coproduct(&l).iter() {
            *out.entry(((aw.to_vec(), ak), (bw.to_vec(), bk), (rw.to_vec(), rk))).or_default() += &(c * c2);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

fn triple_right(x: &BorelElem) -> BTreeMap<(Mono, Mono, Mono), QRat> {
    let mut out: BTreeMap<(Mono, Mono, Mono), QRat> = BTreeMap::new();
    for (c, (lw, lk), (rw, rk)) in coproduct(x).iter() {
        let r = BorelElem::monomial(x.side(), QRat::one(), rw, rk);
        for (c2, (aw, ak), (bw, bk)) in coproduct(&r).iter() {
            *out.entry(((lw.to_vec(), lk), (aw.to_vec(), ak), (bw.to_vec(), bk))).or_default() += &(c * c2);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn coproduct_is_algebra_map((x, y) in side().prop_flat_map(|s| (element(s), element(s)))) {
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(coproduct(&xy), coproduct(&x).mul(&coproduct(&y)));
    }

    #[test]
    fn coproduct_is_coassociative(x in side().prop_flat_map(element)) {
        prop_assert_eq!(triple_left(&x), triple_right(&x));
    }

    #[test]
    fn coproduct_preserves_total_weight(x in side().prop_flat_map(monomial)) {
        let w = x.iter().next().map(|(w, _, _)| weight_of(x.side(), w)).unwrap();
        for (_, (lw, _), (rw, _)) in coproduct(&x).iter() {
            prop_assert_eq!(weight_of(x.side(), lw) + weight_of(x.side(), rw), w);
        }
    }

    #[test]
    fn omega_involution_and_algebra_map((x, y) in side().prop_flat_map(|s| (element(s), element(s)))) {
        prop_assert_eq!(x.omega().omega(), x.clone());
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(xy.omega(), x.omega().try_mul(&y.omega()).unwrap());
    }

    #[test]
    fn tau_involution_and_anti_map((x, y) in side().prop_flat_map(|s| (element(s), element(s)))) {
        prop_assert_eq!(x.tau().tau(), x.clone());
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(xy.tau(), y.tau().try_mul(&x.tau()).unwrap());
    }
}

#[test]
fn tau_reverses_words() {
    let x = BorelElem::word(Side::Minus, &[2, 1, 2, 1]);
    assert_eq!(x.tau(), BorelElem::word(Side::Minus, &[1, 2, 1, 2]));
    assert_eq!(BorelElem::word(Side::Plus, &[1, 2]).tau(), BorelElem::word(Side::Plus, &[2, 1]));
}

#[test]
fn mixed_sides_do_not_multiply() {
    let e = BorelElem::generator(Side::Plus, 1);
    let f = BorelElem::generator(Side::Minus, 1);
    assert!(e.try_mul(&f).is_err());
}
