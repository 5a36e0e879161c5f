//! Lusztig's bilinear pairing on `U_q(b-) × U_q(b+)`.
//!
//! Base cases: `⟨k_α, k_β⟩ = q^{-(α,β)}`, `⟨f_i, e_j⟩ = -δ_ij / (q_i - q_i^{-1})`
//! with `q_1 = q`, `q_2 = q^2`, and `⟨1,1⟩ = 1`; all mixed generator/`k`
//! pairings vanish. The pairing is extended by
//!
//! ```text
//! ⟨y, x x'⟩ = ⟨Δ(y), x' ⊗ x⟩,   ⟨y y', x⟩ = ⟨y ⊗ y', Δ(x)⟩.
//! ```
//!
//! Those two rules give `⟨w k_δ, v k_β⟩ = q^{-(δ,β)} ⟨w, v⟩` for words `w`,
//! `v`, so the recursion only ever runs on pure words. It peels the first
//! letter `e_i` of the plus word with the first rule and keeps the terms of
//! `Δ(y)` whose right factor has weight `-α_i`.

use std::collections::HashMap;
use std::sync::Mutex;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{inner, root_scale, simple_root, Weight};
use crate::error::{Error, Result};
use crate::freealg::{weight_of, words_of_weight, BorelElem, GenWord, Side};
use crate::hopf::coproduct;
use crate::qfield::{q_diff, QMatrix, QRat};

/// `⟨f_i, e_i⟩ = -1 / (q_i - q_i^{-1})`
pub fn generator_pairing(i: u8) -> QRat {
    -&q_diff(root_scale(i)).inv().expect("q_i - q_i^-1 is nonzero")
}

type WordCache = HashMap<(Vec<u8>, Vec<u8>), QRat>;

/// The pairing, with a memo table of word-pair values.
#[derive(Default)]
pub struct Pairing {
    cache: Mutex<WordCache>,
}

impl Pairing {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of memoized word pairs.
    pub fn cache_len(&self) -> usize {
        self.cache.lock().unwrap().len()
    }

    /// `⟨f_{y_1} ⋯ f_{y_n}, e_{x_1} ⋯ e_{x_m}⟩`
    pub fn pair_words(&self, y: &[u8], x: &[u8]) -> QRat {
        if weight_of(Side::Minus, y) != -weight_of(Side::Plus, x) {
            return QRat::zero();
        }
        match x.len() {
            0 => return QRat::one(),
            1 => return generator_pairing(x[0]),
            _ => {}
        }
        let key = (y.to_vec(), x.to_vec());
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let i = x[0];
        let rest = &x[1..];
        let delta = coproduct(&BorelElem::word(Side::Minus, y))
            .select_by_weight(weight_of(Side::Minus, y) + simple_root(i));
        let mut acc = QRat::zero();
        for (c, left, right) in delta.iter() {
            let l = self.pair_monomials(left, (rest, Weight::ZERO));
            if l.is_zero() {
                continue;
            }
            let r = self.pair_monomials(right, (&[i], Weight::ZERO));
            acc += &(&(c * &l) * &r);
        }
        self.cache.lock().unwrap().insert(key, acc.clone());
        acc
    }

    /// `⟨w k_δ, v k_β⟩ = q^{-(δ,β)} ⟨w, v⟩`
    pub fn pair_monomials(&self, (yw, yk): (&[u8], Weight), (xw, xk): (&[u8], Weight)) -> QRat {
        let w = self.pair_words(yw, xw);
        if w.is_zero() {
            return w;
        }
        &w * &QRat::q_pow(-inner(yk, xk))
    }

    /// `⟨y, x⟩` for `y` on the minus side and `x` on the plus side.
    pub fn pair(&self, y: &BorelElem, x: &BorelElem) -> Result<QRat> {
        if y.side() != Side::Minus || x.side() != Side::Plus {
            return Err(Error::MixedSides);
        }
        let mut acc = QRat::zero();
        for (yw, yk, yc) in y.iter() {
            for (xw, xk, xc) in x.iter() {
                let v = self.pair_monomials((yw, yk), (xw, xk));
                if !v.is_zero() {
                    acc += &(&(yc * xc) * &v);
                }
            }
        }
        Ok(acc)
    }

    /// Pairing matrix on all words of weight `nu` (rows: f-words, columns:
    /// e-words, both lexicographic).
    pub fn gram(&self, nu: Weight) -> Result<GramBlock> {
        let words = words_of_weight(nu)?;
        let matrix = QMatrix::from_fn(words.len(), words.len(), |i, j| {
            self.pair_words(&words[i], &words[j])
        });
        Ok(GramBlock {
            nu,
            minus_words: words.iter().map(|w| GenWord::new(Side::Minus, w.clone())).collect(),
            plus_words: words.into_iter().map(|w| GenWord::new(Side::Plus, w)).collect(),
            matrix,
        })
    }

    /// `dim U[nu]` of the Serre quotient, as the rank of the Gram block.
    pub fn weight_dim(&self, nu: Weight) -> Result<usize> {
        Ok(self.gram(nu)?.rank())
    }

    /// Minus-side elements `d_1..d_r` with `⟨d_i, basis_j⟩ = δ_ij`, each a
    /// genuine functional on the weight-`nu` quotient.
    ///
    /// Every free word `w` of weight `nu` is first written modulo the radical
    /// as a combination of `basis`; the dual `d_i` is then solved against the
    /// full word set so that `⟨d_i, w⟩` equals the `i`-th coordinate of `w`.
    pub fn dual_basis(&self, nu: Weight, basis: &[Vec<u8>]) -> Result<Vec<BorelElem>> {
        let block = self.gram(nu)?;
        let words: Vec<&Vec<u8>> = block.plus_words.iter().map(|w| &w.letters).collect();
        let mut cols = Vec::with_capacity(basis.len());
        for b in basis {
            let j = words
                .iter()
                .position(|w| *w == b)
                .ok_or_else(|| Error::WrongWeight { word: b.clone(), nu })?;
            cols.push(j);
        }
        let g = &block.matrix;
        let n = words.len();
        let g_basis = QMatrix::from_fn(n, cols.len(), |i, j| g[(i, cols[j])].clone());
        let r = g.rank();
        if g_basis.rank() != basis.len() || basis.len() != r {
            return Err(Error::DependentBasis(nu));
        }
        // coords[j][w]: coefficient of basis_j in word w modulo the radical
        let coords = g_basis.solve(g).map_err(|_| {
            Error::Verification(format!("Gram block at {nu} is not spanned by the chosen basis"))
        })?;
        // ⟨d_j, w⟩ = coords[j][w]  <=>  G^T d_j = coords[j]^T
        let duals = g.transpose().solve(&coords.transpose()).map_err(|_| {
            Error::Verification(format!("dual system at {nu} is inconsistent"))
        })?;
        Ok((0..basis.len())
            .map(|j| {
                BorelElem::from_words(
                    Side::Minus,
                    (0..n).map(|i| (duals[(i, j)].clone(), words[i].as_slice())),
                )
            })
            .collect())
    }

    /// True iff `x` pairs to zero with every word of the opposite side and
    /// matching weight. `x` must be homogeneous; either side is accepted.
    pub fn in_radical(&self, x: &BorelElem) -> Result<bool> {
        let Some(w) = x.homogeneous_weight()? else {
            return Ok(true);
        };
        let nu = match x.side() {
            Side::Plus => w,
            Side::Minus => -w,
        };
        for word in words_of_weight(nu)? {
            let v = match x.side() {
                Side::Plus => self.pair(&BorelElem::word(Side::Minus, &word), x)?,
                Side::Minus => self.pair(x, &BorelElem::word(Side::Plus, &word))?,
            };
            if !v.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Radical membership for a plus-side element (Serre relations and the
    /// like).
    pub fn radical_check(&self, x: &BorelElem) -> Result<bool> {
        if x.side() != Side::Plus {
            return Err(Error::MixedSides);
        }
        self.in_radical(x)
    }

    /// `a ≡ b` modulo the pairing radical.
    pub fn agree_mod_radical(&self, a: &BorelElem, b: &BorelElem) -> Result<bool> {
        if a.side() != b.side() {
            return Err(Error::MixedSides);
        }
        self.in_radical(&(a - b))
    }

    /// Words of weight `nu` chosen greedily in lexicographic order until they
    /// span the quotient.
    pub fn lex_basis(&self, nu: Weight) -> Result<Vec<Vec<u8>>> {
        let block = self.gram(nu)?;
        let n = block.plus_words.len();
        let mut chosen: Vec<usize> = Vec::new();
        for j in 0..n {
            let mut trial = chosen.clone();
            trial.push(j);
            let sub = QMatrix::from_fn(n, trial.len(), |i, c| block.matrix[(i, trial[c])].clone());
            if sub.rank() == trial.len() {
                chosen = trial;
            }
        }
        Ok(chosen
            .into_iter()
            .map(|j| block.plus_words[j].letters.clone())
            .collect())
    }
}

/// The pairing matrix at one weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GramBlock {
    pub nu: Weight,
    pub minus_words: Vec<GenWord>,
    pub plus_words: Vec<GenWord>,
    pub matrix: QMatrix,
}

impl GramBlock {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }
}

impl Serialize for GramBlock {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let letters = |ws: &[GenWord]| ws.iter().map(|w| w.letters.clone()).collect::<Vec<_>>();
        let mut st = s.serialize_struct("GramBlock", 5)?;
        st.serialize_field("nu", &self.nu)?;
        st.serialize_field("minus_words", &letters(&self.minus_words))?;
        st.serialize_field("plus_words", &letters(&self.plus_words))?;
        st.serialize_field("matrix", &self.matrix.to_rows())?;
        st.serialize_field("rank", &self.rank())?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GramBlock {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            nu: Weight,
            minus_words: Vec<Vec<u8>>,
            plus_words: Vec<Vec<u8>>,
            matrix: Vec<Vec<QRat>>,
        }
        let r = Repr::deserialize(d)?;
        let matrix = QMatrix::from_rows(r.matrix).map_err(serde::de::Error::custom)?;
        if matrix.rows() != r.minus_words.len() || matrix.cols() != r.plus_words.len() {
            return Err(serde::de::Error::custom("matrix shape does not match the word lists"));
        }
        let words = |ws: Vec<Vec<u8>>, side| ws.into_iter().map(|w| GenWord::new(side, w)).collect();
        Ok(Self {
            nu: r.nu,
            minus_words: words(r.minus_words, Side::Minus),
            plus_words: words(r.plus_words, Side::Plus),
            matrix,
        })
    }
}
