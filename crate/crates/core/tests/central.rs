use qcasimir::cartan::{root_lattice_contains, Weight};
use qcasimir::central::{
    central_element, central_element_parallel, compare, matrix_coefficient, pair_contribution, solve_ab, theorem_element,
    theorem_element_with, weight_pairs, CentralElem, CentralTerm,
};
use qcasimir::freealg::{BorelElem, Side};
use qcasimir::pairing::Pairing;
use qcasimir::qfield::QRat;
use qcasimir::rep::{rep16, rep5};

fn q(s: &str) -> QRat {
    s.parse().unwrap()
}

fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

#[test]
fn weight_pairs_produce_the_handwritten_kweights() {
    let pairs = weight_pairs();
    assert_eq!(pairs.len(), 15);
    assert!(pairs.contains(&(w(1, 1), w(-1, -1))));
    assert!(pairs.contains(&(w(1, -1), w(-1, 1))));
    let mut from_pairs: Vec<Weight> = pairs.iter().map(|&(mu, la)| -la - mu).collect();
    let mut from_handwritten = theorem_element().kweights();
    from_pairs.sort();
    from_handwritten.sort();
    assert_eq!(from_pairs, from_handwritten);
}

#[test]
fn matrix_coefficient_examples() {
    let r = rep5();
    let one_f = BorelElem::one(Side::Minus);
    let one_e = BorelElem::one(Side::Plus);
    assert!(matrix_coefficient(&r, w(0, 0), &one_f, &one_e).unwrap().is_one());
    let f1 = BorelElem::generator(Side::Minus, 1);
    let e1 = BorelElem::generator(Side::Plus, 1);
    assert_eq!(matrix_coefficient(&r, w(-1, 1), &f1, &e1).unwrap(), q("q + q^-1"));
    // e2 kills the vector of weight (1,1)
    let e2 = BorelElem::generator(Side::Plus, 2);
    let f2 = BorelElem::generator(Side::Minus, 2);
    assert!(matrix_coefficient(&r, w(1, 1), &f2, &e2).unwrap().is_zero());
}

#[test]
fn central_element_terms() {
    let p = Pairing::new();
    let c = central_element(&p).unwrap();
    let find = |k: Weight, f: &BorelElem| c.terms().iter().find(|t| t.kweight == k && &t.fpart == f).cloned();
    let one_f = BorelElem::one(Side::Minus);
    assert_eq!(find(w(2, 2), &one_f).unwrap().coeff, q("q^6"));
    assert!(find(w(0, 0), &one_f).unwrap().coeff.is_one());
    let f2 = BorelElem::generator(Side::Minus, 2);
    let t = find(w(2, 0), &f2).unwrap();
    assert_eq!(t.epart, BorelElem::generator(Side::Plus, 2));
    assert_eq!(t.coeff, q("(q^2 - q^-2)^2 * q^4"));
    for t in c.terms() {
        assert!(root_lattice_contains(t.kweight));
    }
}

#[test]
fn every_pair_factors_rank_one() {
    let p = Pairing::new();
    let r = rep5();
    for (mu, la) in weight_pairs() {
        let t = pair_contribution(&p, &r, mu, la).unwrap();
        assert_eq!(t.kweight, -la - mu);
        assert_eq!(t.nu().unwrap(), mu - la);
    }
}

#[test]
fn central_element_equals_theorem_element() {
    let p = Pairing::new();
    let c = central_element(&p).unwrap();
    let cmp = compare(&p, &c, &theorem_element()).unwrap();
    assert!(cmp.evaluation_match);
    assert!(cmp.blockwise_match, "{:?}", cmp.blocks);
    assert_eq!(cmp.blocks.len(), 15);
    let r = rep5();
    assert_eq!(r.evaluate(&c), r.evaluate(&theorem_element()));
}

#[test]
fn comparison_detects_a_perturbation() {
    let p = Pairing::new();
    let wrong = theorem_element_with(&q("1 - q^2"), &q("1 + q^2"));
    let cmp = compare(&p, &theorem_element(), &wrong).unwrap();
    assert!(!cmp.evaluation_match);
    assert!(!cmp.blockwise_match);
    let bad: Vec<_> = cmp.blocks.iter().filter(|b| !b.matches).collect();
    assert_eq!(bad.len(), 1);
    assert_eq!((bad[0].kweight, bad[0].nu), (w(0, 0), w(2, 2)));
}

#[test]
fn parallel_assembly_is_deterministic() {
    let serial = central_element(&Pairing::new()).unwrap();
    for _ in 0..3 {
        let shared = Pairing::new();
        assert_eq!(central_element_parallel(&shared).unwrap(), serial);
    }
    let json_a = serde_json::to_string(&serial).unwrap();
    let json_b = serde_json::to_string(&central_element_parallel(&Pairing::new()).unwrap()).unwrap();
    assert_eq!(json_a, json_b);
}

#[test]
fn solve_ab_recovers_coefficients() {
    let (a, b) = solve_ab().unwrap();
    assert_eq!(a, q("1 - q^2"));
    assert_eq!(b, q("1 - q^2"));
}

#[test]
fn zero_coefficients_break_commutation_with_e2() {
    let r = rep16();
    let m = r.evaluate(&theorem_element_with(&QRat::zero(), &QRat::zero()));
    assert!(!m.commutator(&r.e[1]).is_zero());
}

#[test]
fn omega_symmetry_of_the_top_block() {
    // ω maps the f-part of the top block to an e-combination whose
    // coefficients on e2 e1 e2 e1 and e1 e2 e2 e1 agree
    let c = theorem_element();
    let top = c.terms().iter().find(|t| t.nu().unwrap() == w(2, 2)).unwrap();
    let mirrored = top.fpart.omega();
    assert_eq!(mirrored.coeff(&[2, 1, 2, 1], Weight::ZERO), mirrored.coeff(&[1, 2, 2, 1], Weight::ZERO));
}

#[test]
fn json_round_trip() {
    let c = theorem_element();
    let text = serde_json::to_string(&c).unwrap();
    let back: CentralElem = serde_json::from_str(&text).unwrap();
    assert_eq!(back, c);
}

#[test]
fn text_form_lists_terms() {
    let text = theorem_element().to_string();
    assert_eq!(text.lines().count(), 15);
    assert!(text.contains("+ (q^6) k(2,2)"));
}

#[test]
fn canonical_form_is_order_independent() {
    let mut ts: Vec<CentralTerm> = theorem_element().terms().to_vec();
    ts.reverse();
    assert_eq!(CentralElem::from_terms(ts), theorem_element());
}
