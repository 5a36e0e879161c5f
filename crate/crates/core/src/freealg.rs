//! The two Borel halves as free weight-graded algebras.
//!
//! An element is a linear combination of monomials `w k_β`, where `w` is a
//! word in the generators `e_1, e_2` (plus side) or `f_1, f_2` (minus side)
//! and all `k`'s are commuted to the right using
//! `k_μ e_j = q^{(μ,α_j)} e_j k_μ` and `k_μ f_j = q^{-(μ,α_j)} f_j k_μ`.
//! Serre relations are not imposed; they show up as the radical of the
//! pairing.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::cartan::{inner, simple_root, simple_root_coords, Weight};
use crate::error::{Error, Result};
use crate::qfield::{QRat, q_sum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Side::Plus => 'e',
            Side::Minus => 'f',
        }
    }

    fn sign(self) -> i64 {
        match self {
            Side::Plus => 1,
            Side::Minus => -1,
        }
    }
}

/// A word in the generators of one Borel half.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GenWord {
    pub side: Side,
    pub letters: Vec<u8>,
}

impl GenWord {
    pub fn new(side: Side, letters: Vec<u8>) -> Self {
        Self { side, letters }
    }

    pub fn weight(&self) -> Weight {
        weight_of(self.side, &self.letters)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, self.side, &self.letters)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, side: Side, letters: &[u8]) -> fmt::Result {
    for (i, l) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        write!(f, "{}{}", side.letter(), l)?;
    }
    Ok(())
}

/// Sum of simple roots of the letters, negated on the minus side.
pub fn weight_of(side: Side, letters: &[u8]) -> Weight {
    let w = letters
        .iter()
        .fold(Weight::ZERO, |acc, &l| acc + simple_root(l));
    side.sign() * w
}

/// `(w1 k_a)(w2 k_b) = q^e · w1 w2 k_{a+b}`; returns `(e, w1 w2, a + b)`.
pub fn mul_monomials(
    side: Side,
    (w1, a): (&[u8], Weight),
    (w2, b): (&[u8], Weight),
) -> (i64, Vec<u8>, Weight) {
    let e = inner(a, weight_of(side, w2));
    let mut w = Vec::with_capacity(w1.len() + w2.len());
    w.extend_from_slice(w1);
    w.extend_from_slice(w2);
    (e, w, a + b)
}

/// All words of plus-side weight `nu`, in lexicographic order.
pub fn words_of_weight(nu: Weight) -> Result<Vec<Vec<u8>>> {
    let (a, b) = simple_root_coords(nu)
        .filter(|&(a, b)| a >= 0 && b >= 0)
        .ok_or(Error::NotInPositiveCone(nu))?;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity((a + b) as usize);
    fn rec(ones: i64, twos: i64, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if ones == 0 && twos == 0 {
            out.push(cur.clone());
            return;
        }
        if ones > 0 {
            cur.push(1);
            rec(ones - 1, twos, cur, out);
            cur.pop();
        }
        if twos > 0 {
            cur.push(2);
            rec(ones, twos - 1, cur, out);
            cur.pop();
        }
    }
    rec(a, b, &mut cur, &mut out);
    Ok(out)
}

/// One monomial `coeff · word · k_kweight`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BorelTerm {
    pub coeff: QRat,
    pub word: GenWord,
    pub kweight: Weight,
}

type Key = (Vec<u8>, Weight);

/// A linear combination of normal-ordered monomials in one Borel half.
/// Terms are kept sorted by `(word, kweight)` with no zero coefficients, so
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BorelElem {
    side: Side,
    terms: BTreeMap<Key, QRat>,
}

impl BorelElem {
    pub fn zero(side: Side) -> Self {
        Self {
            side,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(side: Side) -> Self {
        Self::word(side, &[])
    }

    pub fn monomial(side: Side, coeff: QRat, letters: &[u8], kweight: Weight) -> Self {
        let mut x = Self::zero(side);
        x.add_term(coeff, letters.to_vec(), kweight);
        x
    }

    pub fn word(side: Side, letters: &[u8]) -> Self {
        Self::monomial(side, QRat::one(), letters, Weight::ZERO)
    }

    pub fn generator(side: Side, i: u8) -> Self {
        Self::word(side, &[i])
    }

    pub fn k(side: Side, w: Weight) -> Self {
        Self::monomial(side, QRat::one(), &[], w)
    }

    /// Linear combination of plain words.
    pub fn from_words<'a>(side: Side, terms: impl IntoIterator<Item = (QRat, &'a [u8])>) -> Self {
        let mut x = Self::zero(side);
        for (c, w) in terms {
            x.add_term(c, w.to_vec(), Weight::ZERO);
        }
        x
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, coeff: QRat, letters: Vec<u8>, kweight: Weight) {
        if coeff.is_zero() {
            return;
        }
        debug_assert!(letters.iter().all(|&l| l == 1 || l == 2));
        let key = (letters, kweight);
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

    /// Terms as `(letters, kweight, coeff)` in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u8], Weight, &QRat)> + '_ {
        self.terms.iter().map(|((w, k), c)| (w.as_slice(), *k, c))
    }

    pub fn terms(&self) -> Vec<BorelTerm> {
        self.iter()
            .map(|(w, k, c)| BorelTerm {
                coeff: c.clone(),
                word: GenWord::new(self.side, w.to_vec()),
                kweight: k,
            })
            .collect()
    }

    /// Coefficient of the monomial `letters · k_kweight`.
    pub fn coeff(&self, letters: &[u8], kweight: Weight) -> QRat {
        self.terms
            .get(&(letters.to_vec(), kweight))
            .cloned()
            .unwrap_or_default()
    }

    /// First (lowest) term's coefficient, used for normalizing.
    pub fn leading_coeff(&self) -> Option<&QRat> {
        self.terms.values().next()
    }

    /// Common weight of all generator words, if there is one. The zero
    /// element is homogeneous of every weight and reports `None`.
    pub fn homogeneous_weight(&self) -> Result<Option<Weight>> {
        let mut ws = self.terms.keys().map(|(w, _)| weight_of(self.side, w));
        let Some(first) = ws.next() else {
            return Ok(None);
        };
        if ws.all(|w| w == first) {
            Ok(Some(first))
        } else {
            Err(Error::NotHomogeneous)
        }
    }

    pub fn scale(&self, c: &QRat) -> Self {
        let mut out = Self::zero(self.side);
        if c.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.terms.insert(k.clone(), v * c);
        }
        out
    }

    /// Product in the Borel half, with `k`'s renormalized to the right.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.side != rhs.side {
            return Err(Error::MixedSides);
        }
        let mut out = Self::zero(self.side);
        for ((w1, a), c1) in &self.terms {
            for ((w2, b), c2) in &rhs.terms {
                let (e, w, k) = mul_monomials(self.side, (w1, *a), (w2, *b));
                out.add_term(&(c1 * c2) * &QRat::q_pow(e), w, k);
            }
        }
        Ok(out)
    }

    /// The automorphism `e_i ↔ f_i`, `k_μ ↦ k_{-μ}`.
    pub fn omega(&self) -> Self {
        let mut out = Self::zero(self.side.flip());
        for ((w, k), c) in &self.terms {
            out.add_term(c.clone(), w.clone(), -*k);
        }
        out
    }

    /// The anti-automorphism fixing `e_i, f_i` with `k_μ ↦ k_{-μ}`.
    pub fn tau(&self) -> Self {
        let mut out = Self::zero(self.side);
        for ((w, k), c) in &self.terms {
            // τ(w k) = k_{-μ} rev(w), then move k_{-μ} back to the right
            let rev: Vec<u8> = w.iter().rev().copied().collect();
            let (e, word, kw) = mul_monomials(self.side, (&[], -*k), (&rev, Weight::ZERO));
            out.add_term(c * &QRat::q_pow(e), word, kw);
        }
        out
    }

    /// Parses the element mini-grammar, e.g.
    /// `(1+q^2)*f1 f2 f1 - f2 f1 f1 - q^2*f1 f1 f2` or `q^6*k(2,2)`.
    ///
    /// Terms are separated by top-level `+`/`-`; each term is an optional
    /// `QRat` coefficient joined by `*` to generator tokens `e1 e2 f1 f2
    /// k(a,b)`. Elements with no `e`/`f` letters land on `default_side`.
    pub fn parse(text: &str, default_side: Side) -> Result<Self> {
        parse_element(text, default_side)
    }
}

impl Add for &BorelElem {
    type Output = BorelElem;

    fn add(self, rhs: &BorelElem) -> BorelElem {
        assert_eq!(self.side, rhs.side, "adding elements of different Borel halves");
        let mut out = self.clone();
        for ((w, k), c) in &rhs.terms {
            out.add_term(c.clone(), w.clone(), *k);
        }
        out
    }
}

impl Sub for &BorelElem {
    type Output = BorelElem;

    fn sub(self, rhs: &BorelElem) -> BorelElem {
        self + &(-rhs)
    }
}

impl Neg for &BorelElem {
    type Output = BorelElem;

    fn neg(self) -> BorelElem {
        self.scale(&QRat::from_int(-1))
    }
}

/// The quadratic and cubic Serre combinations, e-side first:
/// `[e-quadratic, e-cubic, f-quadratic, f-cubic]`.
pub fn serre_elements() -> Vec<BorelElem> {
    let two = q_sum(2);
    let three = &q_sum(2) + &QRat::one();
    let quad = |side| {
        BorelElem::from_words(
            side,
            [
                (QRat::one(), &[2u8, 2, 1][..]),
                (-&two, &[2, 1, 2][..]),
                (QRat::one(), &[1, 2, 2][..]),
            ],
        )
    };
    let cubic = |side| {
        BorelElem::from_words(
            side,
            [
                (QRat::one(), &[1u8, 1, 1, 2][..]),
                (-&three, &[1, 1, 2, 1][..]),
                (three.clone(), &[1, 2, 1, 1][..]),
                (QRat::from_int(-1), &[2, 1, 1, 1][..]),
            ],
        )
    };
    vec![quad(Side::Plus), cubic(Side::Plus), quad(Side::Minus), cubic(Side::Minus)]
}

fn is_negative_display(c: &QRat) -> bool {
    let (n, _) = c.display_parts();
    n.leading_coeff().is_some_and(|l| l < &0.into())
}

fn write_monomial(f: &mut fmt::Formatter<'_>, side: Side, w: &[u8], k: Weight) -> fmt::Result {
    write_word(f, side, w)?;
    if k != Weight::ZERO {
        if !w.is_empty() {
            write!(f, " ")?;
        }
        write!(f, "k({},{})", k.x1, k.x2)?;
    } else if w.is_empty() {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for BorelElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, ((w, k), c)) in self.terms.iter().enumerate() {
            let neg = is_negative_display(c);
            let mag = if neg { -c } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "({mag})*")?;
            }
            write_monomial(f, self.side, w, *k)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BorelElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BorelElem[{self}]")
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: QRat,
    word: Vec<u8>,
    k: Weight,
}

#[derive(Serialize, Deserialize)]
struct ElemJson {
    side: Side,
    terms: Vec<TermJson>,
}

impl Serialize for BorelElem {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ElemJson {
            side: self.side,
            terms: self
                .iter()
                .map(|(w, k, c)| TermJson {
                    coeff: c.clone(),
                    word: w.to_vec(),
                    k,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BorelElem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ElemJson::deserialize(d)?;
        let mut out = BorelElem::zero(j.side);
        for t in j.terms {
            if t.word.iter().any(|&l| l != 1 && l != 2) {
                return Err(serde::de::Error::custom("generator index must be 1 or 2"));
            }
            out.add_term(t.coeff, t.word, t.k);
        }
        Ok(out)
    }
}

// ---- element mini-grammar -------------------------------------------------

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

/// Splits at top-level `+`/`-` that act as binary operators. Returns
/// `(offset, negated, text)` per term.
fn split_terms(text: &str) -> Result<Vec<(usize, bool, &str)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut neg = false;
    let mut prev: Option<u8> = None;
    for (i, &c) in bytes.iter().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(perr(i, "unbalanced ')'"));
                }
            }
            b'+' | b'-' if depth == 0 => {
                let binary = !matches!(prev, None | Some(b'^' | b'*' | b'/' | b'(' | b'+' | b'-'));
                if binary {
                    out.push((start, neg, &text[start..i]));
                    start = i + 1;
                    neg = c == b'-';
                    prev = Some(c);
                    continue;
                } else if prev.is_none() {
                    // leading sign of the first term
                    neg = c == b'-';
                    start = i + 1;
                    prev = Some(c);
                    continue;
                }
            }
            _ => {}
        }
        if !c.is_ascii_whitespace() {
            prev = Some(c);
        }
    }
    if depth != 0 {
        return Err(perr(text.len(), "unbalanced '('"));
    }
    out.push((start, neg, &text[start..]));
    Ok(out)
}

#[derive(Debug)]
enum Token {
    Gen(Side, u8),
    K(Weight),
}

/// Parses a run of generator tokens; `None` if the text is not such a run.
fn parse_gens(text: &str) -> Option<Vec<Token>> {
    let b = text.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    let skip_ws = |i: &mut usize| {
        while *i < b.len() && b[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };
    skip_ws(&mut i);
    while i < b.len() {
        match b[i] {
            c @ (b'e' | b'f') => {
                let side = if c == b'e' { Side::Plus } else { Side::Minus };
                match b.get(i + 1) {
                    Some(b'1') => out.push(Token::Gen(side, 1)),
                    Some(b'2') => out.push(Token::Gen(side, 2)),
                    _ => return None,
                }
                i += 2;
            }
            b'k' => {
                let close = text[i..].find(')')? + i;
                let inner = text.get(i + 1..close)?.trim();
                let inner = inner.strip_prefix('(')?;
                let (a, c) = inner.split_once(',')?;
                let w = Weight::new(a.trim().parse().ok()?, c.trim().parse().ok()?);
                out.push(Token::K(w));
                i = close + 1;
            }
            _ => return None,
        }
        skip_ws(&mut i);
    }
    (!out.is_empty()).then_some(out)
}

fn top_level_stars(text: &str) -> Vec<usize> {
    let mut depth = 0;
    let mut out = Vec::new();
    for (i, c) in text.bytes().enumerate() {
        match c {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'*' if depth == 0 => out.push(i),
            _ => {}
        }
    }
    out
}

fn parse_coeff(text: &str, offset: usize) -> Result<QRat> {
    let t = text.trim();
    if t.is_empty() {
        return Ok(QRat::one());
    }
    t.parse::<QRat>().map_err(|e| match e {
        crate::qfield::QError::Parse { pos, msg } => {
            let lead = text.len() - text.trim_start().len();
            perr(offset + lead + pos, msg)
        }
        other => Error::Field(other),
    })
}

fn parse_element(text: &str, default_side: Side) -> Result<BorelElem> {
    if text.trim().is_empty() {
        return Err(perr(0, "empty element"));
    }
    let mut parsed: Vec<(QRat, Vec<Token>, usize)> = Vec::new();
    for (offset, neg, term) in split_terms(text)? {
        if term.trim().is_empty() {
            return Err(perr(offset, "empty term"));
        }
        let (coeff_text, gens, starred) = match top_level_stars(term).last() {
            Some(&s) => match parse_gens(&term[s + 1..]) {
                Some(g) => (&term[..s], g, true),
                None => (term, Vec::new(), false),
            },
            None => match parse_gens(term) {
                Some(g) => ("", g, false),
                None => (term, Vec::new(), false),
            },
        };
        if starred && coeff_text.trim().is_empty() {
            return Err(perr(offset, "missing coefficient before '*'"));
        }
        let mut c = parse_coeff(coeff_text, offset)?;
        if neg {
            c = -c;
        }
        parsed.push((c, gens, offset));
    }
    let mut side = None;
    for (_, gens, offset) in &parsed {
        for t in gens {
            if let Token::Gen(s, _) = t {
                match side {
                    None => side = Some(*s),
                    Some(prev) if prev != *s => {
                        return Err(perr(*offset, "element mixes e and f generators"))
                    }
                    _ => {}
                }
            }
        }
    }
    let side = side.unwrap_or(default_side);
    let mut out = BorelElem::zero(side);
    for (c, gens, _) in parsed {
        let mut m = BorelElem::monomial(side, c, &[], Weight::ZERO);
        for t in gens {
            let g = match t {
                Token::Gen(_, i) => BorelElem::generator(side, i),
                Token::K(w) => BorelElem::k(side, w),
            };
            m = m.try_mul(&g)?;
        }
        out = &out + &m;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QRat {
        s.parse().unwrap()
    }

    #[test]
    fn weights_of_words() {
        assert_eq!(weight_of(Side::Plus, &[2, 2, 1]), Weight::new(1, 3));
        assert_eq!(weight_of(Side::Plus, &[]), Weight::ZERO);
        assert_eq!(weight_of(Side::Minus, &[1, 2, 1]), Weight::new(-2, 0));
    }

    #[test]
    fn k_commutes_right() {
        let a = BorelElem::monomial(Side::Plus, QRat::one(), &[2], simple_root(2));
        let b = BorelElem::generator(Side::Plus, 1);
        let p = a.try_mul(&b).unwrap();
        assert_eq!(
            p,
            BorelElem::monomial(Side::Plus, QRat::q_pow(-2), &[2, 1], simple_root(2))
        );
    }

    #[test]
    fn identity_and_plain_products() {
        let x = BorelElem::parse("q*e1 e2 - e2 k(1,1)", Side::Plus).unwrap();
        assert_eq!(BorelElem::one(Side::Plus).try_mul(&x).unwrap(), x);
        let e12 = BorelElem::generator(Side::Plus, 1)
            .try_mul(&BorelElem::generator(Side::Plus, 2))
            .unwrap();
        assert_eq!(e12, BorelElem::word(Side::Plus, &[1, 2]));
    }

    #[test]
    fn mixed_sides_rejected() {
        let e = BorelElem::generator(Side::Plus, 1);
        let f = BorelElem::generator(Side::Minus, 1);
        assert_eq!(e.try_mul(&f), Err(Error::MixedSides));
        assert!(BorelElem::parse("e1 f1", Side::Plus).is_err());
    }

    #[test]
    fn tau_and_omega() {
        let x = BorelElem::word(Side::Minus, &[2, 1, 2, 1]);
        assert_eq!(x.tau(), BorelElem::word(Side::Minus, &[1, 2, 1, 2]));
        assert_eq!(
            BorelElem::word(Side::Plus, &[1, 2]).tau(),
            BorelElem::word(Side::Plus, &[2, 1])
        );
        let y = BorelElem::parse("(q+1)*e1 e2 k(1,1) - e2", Side::Plus).unwrap();
        assert_eq!(y.omega().omega(), y);
        assert_eq!(y.omega().side(), Side::Minus);
        assert_eq!(y.tau().tau(), y);
    }

    #[test]
    fn serre_shapes() {
        let s = serre_elements();
        assert_eq!(s[0].coeff(&[2, 2, 1], Weight::ZERO), QRat::one());
        assert_eq!(s[0].coeff(&[2, 1, 2], Weight::ZERO), q("-q^2 - q^-2"));
        assert_eq!(s[0].coeff(&[1, 2, 2], Weight::ZERO), QRat::one());
        assert_eq!(s[0].omega(), s[2]);
        assert_eq!(s[1].omega(), s[3]);
        for x in &s {
            assert!(x.homogeneous_weight().unwrap().is_some());
        }
    }

    #[test]
    fn enumerates_words() {
        assert_eq!(words_of_weight(Weight::new(1, 3)).unwrap(), vec![vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]]);
        assert_eq!(words_of_weight(Weight::new(2, 2)).unwrap().len(), 6);
        assert_eq!(words_of_weight(Weight::ZERO).unwrap(), vec![Vec::<u8>::new()]);
        assert!(words_of_weight(Weight::new(-1, 1)).is_err());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for text in [
            "(1+q^2)*f1 f2 f1 - f2 f1 f1 - q^2*f1 f1 f2",
            "q^6*k(2,2)",
            "-e1 e2 + (q - q^-1)*e2e1",
            "(q^-2-q^2)/(q^2+q^-2)*e2 e2 e1",
            "3",
        ] {
            let x = BorelElem::parse(text, Side::Plus).unwrap();
            let again = BorelElem::parse(&x.to_string(), Side::Plus).unwrap();
            assert_eq!(x, again, "{text} -> {x}");
        }
        let x = BorelElem::parse("(1+q^2)*f1 f2 f1 - f2 f1 f1", Side::Plus).unwrap();
        assert_eq!(x.side(), Side::Minus);
        assert_eq!(x.coeff(&[1, 2, 1], Weight::ZERO), q("1+q^2"));
        assert_eq!(x.coeff(&[2, 1, 1], Weight::ZERO), q("-1"));
    }

    #[test]
    fn parse_errors_have_positions() {
        match BorelElem::parse("e1 + (q+1)*e3", Side::Plus) {
            Err(Error::Parse { pos, .. }) => assert!(pos >= 4, "{pos}"),
            other => panic!("{other:?}"),
        }
        assert!(BorelElem::parse("", Side::Plus).is_err());
        assert!(BorelElem::parse("e1 + ", Side::Plus).is_err());
    }

    #[test]
    fn json_round_trip() {
        let x = BorelElem::parse("(q^2+q^-2)*e2 e2 e1 - e1 k(0,2)", Side::Plus).unwrap();
        let s = serde_json::to_string(&x).unwrap();
        assert!(s.starts_with(r#"{"side":"plus","terms":[{"coeff":"#), "{s}");
        let y: BorelElem = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
