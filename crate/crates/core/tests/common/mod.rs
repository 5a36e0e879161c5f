//! Test-only oracles, independent of the library's pairing recursion.
#![allow(dead_code)]

use qcasimir::cartan::{inner, simple_root, Weight, ALPHA1, ALPHA2};
use qcasimir::freealg::{BorelElem, Side};
use qcasimir::pairing::Pairing;
use qcasimir::qfield::QRat;

pub fn q(s: &str) -> QRat {
    s.parse().unwrap()
}

pub fn minus(s: &str) -> BorelElem {
    BorelElem::parse(s, Side::Minus).unwrap()
}

pub fn plus(s: &str) -> BorelElem {
    BorelElem::parse(s, Side::Plus).unwrap()
}

/// Pairing computed with the *other* extension rule, `⟨y y', x⟩ = ⟨y ⊗ y',
/// Δ(x)⟩`, peeling the first `f` letter and expanding `Δ(x)` by hand:
/// `⟨f_j y'', x⟩ = Σ_{p : x_p = j} q^{(α_{x_1} + ... + α_{x_{p-1}}, α_j)}
/// ⟨f_j, e_j⟩ ⟨y'', x without x_p⟩`.
pub fn oracle_pair_words(y: &[u8], x: &[u8]) -> QRat {
    if y.len() != x.len() {
        return QRat::zero();
    }
    if y.is_empty() {
        return QRat::one();
    }
    let j = y[0];
    let base = {
        let d = if j == 1 { 1 } else { 2 };
        let diff = &QRat::q_pow(d) - &QRat::q_pow(-d);
        -(QRat::one() / diff)
    };
    let mut acc = QRat::zero();
    let mut before = Weight::ZERO;
    for p in 0..x.len() {
        if x[p] == j {
            let mut rest = x.to_vec();
            rest.remove(p);
            let sub = oracle_pair_words(&y[1..], &rest);
            if !sub.is_zero() {
                acc += &(&(&sub * &base) * &QRat::q_pow(inner(before, simple_root(j))));
            }
        }
        before = before + simple_root(x[p]);
    }
    acc
}

pub fn oracle_pair(y: &BorelElem, x: &BorelElem) -> QRat {
    let mut acc = QRat::zero();
    for (yw, yk, yc) in y.iter() {
        for (xw, xk, xc) in x.iter() {
            let v = oracle_pair_words(yw, xw);
            acc += &(&(&v * &(yc * xc)) * &QRat::q_pow(-inner(yk, xk)));
        }
    }
    acc
}

/// Number of ways to write `nu` as an unordered sum of positive roots
/// (Kostant partition function), by brute-force enumeration.
pub fn pbw_count(nu: Weight) -> usize {
    let roots = [ALPHA1, ALPHA2, ALPHA1 + ALPHA2, Weight::new(2, 0)];
    fn rec(rest: Weight, roots: &[Weight], from: usize) -> usize {
        if rest == Weight::ZERO {
            return 1;
        }
        let mut n = 0;
        for i in from..roots.len() {
            let r = roots[i];
            let left = rest - r;
            // remainder must stay in the positive cone: left = a α1 + b α2, a, b ≥ 0
            let (a, b) = (left.x1, (left.x1 + left.x2) / 2);
            if a >= 0 && b >= 0 {
                n += rec(left, roots, i);
            }
        }
        n
    }
    rec(nu, &roots, 0)
}

// ---- weight (1,3) and (2,2) duals ----

pub fn dual_of(p: &Pairing, nu: Weight, basis: &[&[u8]], which: usize) -> BorelElem {
    let basis: Vec<Vec<u8>> = basis.iter().map(|w| w.to_vec()).collect();
    p.dual_basis(nu, &basis).unwrap().swap_remove(which)
}

pub fn mul(a: &BorelElem, b: &BorelElem) -> BorelElem {
    a.try_mul(b).unwrap()
}

pub fn f(i: u8) -> BorelElem {
    BorelElem::generator(Side::Minus, i)
}

pub fn e(w: &[u8]) -> BorelElem {
    BorelElem::word(Side::Plus, w)
}

/// (e1 e1 e2)^* at weight (2,0), dual to the full word basis there.
pub fn dual_112(p: &Pairing) -> BorelElem {
    dual_of(p, Weight::new(2, 0), &[&[1, 1, 2], &[1, 2, 1], &[2, 1, 1]], 0)
}

pub fn dual_211(p: &Pairing) -> BorelElem {
    dual_of(p, Weight::new(2, 0), &[&[1, 1, 2], &[1, 2, 1], &[2, 1, 1]], 2)
}

/// (e2 e2 e1)^* at weight (1,3) with respect to {e2^2 e1, e1 e2^2}.
pub fn dual_221(p: &Pairing) -> BorelElem {
    dual_of(p, Weight::new(1, 3), &[&[2, 2, 1], &[1, 2, 2]], 0)
}

/// The four (2,2) dual elements written with the explicit f-word formulas.
pub fn stated_b_star(p: &Pairing) -> Vec<BorelElem> {
    let c = q("(q - q^-1)/(q + q^-1)");
    let f2_d211 = minus("(q^2-q^4)*f2 f1 f2 f1 - f2 f1 f1 f2 + q^2*f1 f2 f2 f1").scale(&c);
    let d211_f2 = minus("(1-q^-2)*f1 f2 f1 f2 + f1 f2 f2 f1 - q^2*f2 f1 f1 f2").scale(&c);
    let f2_d112 = minus("(1-q^-2)*f2 f1 f2 f1 + f1 f2 f2 f1 - q^2*f2 f1 f1 f2").scale(&c);
    let d112_f2 = minus("(q^2-q^4)*f1 f2 f1 f2 - f2 f1 f1 f2 + q^2*f1 f2 f2 f1").scale(&c);
    let d221 = dual_221(p);
    let third = &mul(&d221, &f(1)) - &mul(&f(1), &d221).scale(&q("q^2"));
    vec![
        &f2_d112 - &d112_f2,
        &d112_f2.scale(&q("q^-2")) - &f2_d112.scale(&q("q^2")),
        third.scale(&q("q + q^-1").inv().unwrap()),
        &d211_f2 - &f2_d211,
    ]
}

pub fn b_basis() -> Vec<Vec<u8>> {
    vec![vec![1, 2, 1, 2], vec![2, 1, 1, 2], vec![1, 2, 2, 1], vec![2, 1, 2, 1]]
}
