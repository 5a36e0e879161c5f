//! Coproducts of Borel-half elements.
//!
//! `Δ(e_i) = e_i ⊗ 1 + k_i ⊗ e_i`, `Δ(f_i) = 1 ⊗ f_i + f_i ⊗ k_i^{-1}`,
//! `Δ(k_μ) = k_μ ⊗ k_μ`, extended multiplicatively. Both tensor factors are
//! kept in word-then-k normal form.

use std::collections::BTreeMap;

use crate::cartan::{simple_root, Weight};
use crate::freealg::{mul_monomials, weight_of, BorelElem, BorelTerm, GenWord, Side};
use crate::qfield::QRat;

type Mono = (Vec<u8>, Weight);

/// A borrowed tensor factor: word and k-weight.
pub type MonoRef<'a> = (&'a [u8], Weight);

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorTerm {
    pub coeff: QRat,
    pub left: BorelTerm,
    pub right: BorelTerm,
}

/// Element of `B ⊗ B` for one Borel half `B`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorElem {
    side: Side,
    terms: BTreeMap<(Mono, Mono), QRat>,
}

impl TensorElem {
    pub fn zero(side: Side) -> Self {
        Self {
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: QRat, left: Mono, right: Mono) {
        if coeff.is_zero() {
            return;
        }
        let key = (left, right);
        let sum = match self.terms.get(&key) {
            Some(c) => c + &coeff,
            None => coeff,
        };
        if sum.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, sum);
        }
    }

    /// `(coeff, (left word, left k), (right word, right k))`
    pub fn iter(&self) -> impl Iterator<Item = (&QRat, MonoRef<'_>, MonoRef<'_>)> + '_ {
        self.terms
            .iter()
            .map(|(((lw, lk), (rw, rk)), c)| (c, (lw.as_slice(), *lk), (rw.as_slice(), *rk)))
    }

    pub fn terms(&self) -> Vec<TensorTerm> {
        let bt = |w: &[u8], k| BorelTerm {
            coeff: QRat::one(),
            word: GenWord::new(self.side, w.to_vec()),
            kweight: k,
        };
        self.iter()
            .map(|(c, (lw, lk), (rw, rk))| TensorTerm {
                coeff: c.clone(),
                left: bt(lw, lk),
                right: bt(rw, rk),
            })
            .collect()
    }

    /// Coefficient of `(lw k_lk) ⊗ (rw k_rk)`.
    pub fn coeff(&self, left: (&[u8], Weight), right: (&[u8], Weight)) -> QRat {
        self.terms
            .get(&((left.0.to_vec(), left.1), (right.0.to_vec(), right.1)))
            .cloned()
            .unwrap_or_default()
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.side, rhs.side, "tensor product of different halves");
        let mut out = Self::zero(self.side);
        for (((lw1, lk1), (rw1, rk1)), c1) in &self.terms {
            for (((lw2, lk2), (rw2, rk2)), c2) in &rhs.terms {
                let (e1, lw, lk) = mul_monomials(self.side, (lw1, *lk1), (lw2, *lk2));
                let (e2, rw, rk) = mul_monomials(self.side, (rw1, *rk1), (rw2, *rk2));
                out.add_term(&(c1 * c2) * &QRat::q_pow(e1 + e2), (lw, lk), (rw, rk));
            }
        }
        out
    }

    /// Sub-sum of terms whose left generator word has weight `left_weight`.
    pub fn select_by_weight(&self, left_weight: Weight) -> Self {
        Self {
            side: self.side,
            terms: self
                .terms
                .iter()
                .filter(|(((lw, _), _), _)| weight_of(self.side, lw) == left_weight)
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Raw expansion of `Δ(w k_β)` as `(q-exponent, left, right)` before merging;
/// a word of length `n` yields `2^n` entries.
pub(crate) fn coproduct_monomial(side: Side, word: &[u8], kweight: Weight) -> Vec<(i64, Mono, Mono)> {
    let mut acc: Vec<(i64, Mono, Mono)> = vec![(0, (Vec::new(), Weight::ZERO), (Vec::new(), Weight::ZERO))];
    for &i in word {
        let a = simple_root(i);
        // the two summands of Δ(generator)
        let parts: [(Mono, Mono); 2] = match side {
            Side::Plus => [
                ((vec![i], Weight::ZERO), (Vec::new(), Weight::ZERO)),
                ((Vec::new(), a), (vec![i], Weight::ZERO)),
            ],
            Side::Minus => [
                ((Vec::new(), Weight::ZERO), (vec![i], Weight::ZERO)),
                ((vec![i], Weight::ZERO), (Vec::new(), -a)),
            ],
        };
        let mut next = Vec::with_capacity(acc.len() * 2);
        for (e, (lw, lk), (rw, rk)) in &acc {
            for ((gw, gk), (hw, hk)) in &parts {
                let (e1, nlw, nlk) = mul_monomials(side, (lw, *lk), (gw, *gk));
                let (e2, nrw, nrk) = mul_monomials(side, (rw, *rk), (hw, *hk));
                next.push((e + e1 + e2, (nlw, nlk), (nrw, nrk)));
            }
        }
        acc = next;
    }
    // right-multiply by k_β ⊗ k_β; no reordering needed
    for (_, (_, lk), (_, rk)) in acc.iter_mut() {
        *lk = *lk + kweight;
        *rk = *rk + kweight;
    }
    acc
}

pub fn coproduct(x: &BorelElem) -> TensorElem {
    let side = x.side();
    let mut out = TensorElem::zero(side);
    for (w, k, c) in x.iter() {
        for (e, l, r) in coproduct_monomial(side, w, k) {
            out.add_term(c * &QRat::q_pow(e), l, r);
        }
    }
    out
}
