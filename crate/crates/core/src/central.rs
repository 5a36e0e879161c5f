//! The central element assembled from dual bases and the 5-dim module's
//! weight data, and the hand-written element it is compared against.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cartan::{dominance_geq, inner, rho, Weight};
use crate::error::{Error, Result};
use crate::freealg::{words_of_weight, BorelElem, Side};
use crate::pairing::Pairing;
use crate::qfield::{QMatrix, QRat};
use crate::rep::{rep16, rep5, Representation, DIM5_WEIGHTS};

/// Weights of the 5-dim module, each with a one-dimensional weight space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightTable {
    weights: Vec<Weight>,
}

impl WeightTable {
    pub fn dim5() -> Self {
        Self {
            weights: DIM5_WEIGHTS.to_vec(),
        }
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    pub fn index_of(&self, w: Weight) -> Option<usize> {
        self.weights.iter().position(|&x| x == w)
    }
}

/// Ordered pairs `(μ, λ)` of module weights with `μ ≥ λ`, diagonal included.
pub fn weight_pairs() -> Vec<(Weight, Weight)> {
    let t = WeightTable::dim5();
    let mut out = Vec::new();
    for &mu in t.weights() {
        for &la in t.weights() {
            if dominance_geq(mu, la) {
                out.push((mu, la));
            }
        }
    }
    out
}

/// Coefficient of `w_λ` in `v·u·w_λ`.
pub fn matrix_coefficient(rep: &Representation, la: Weight, v: &BorelElem, u: &BorelElem) -> Result<QRat> {
    let i = rep
        .weights
        .iter()
        .position(|&w| w == la)
        .ok_or_else(|| Error::Verification(format!("{la} is not a weight of {}", rep.name.as_str())))?;
    let m = &rep.borel_matrix(v) * &rep.borel_matrix(u);
    Ok(m[(i, i)].clone())
}

/// Plus-side basis used at each weight: the explicit ones at `(2,2)` and
/// `(1,3)`, greedy lexicographic elsewhere.
pub fn basis_for(p: &Pairing, nu: Weight) -> Result<Vec<Vec<u8>>> {
    if nu == Weight::new(2, 2) {
        return Ok(vec![vec![1, 2, 1, 2], vec![2, 1, 1, 2], vec![1, 2, 2, 1], vec![2, 1, 2, 1]]);
    }
    if nu == Weight::new(1, 3) {
        return Ok(vec![vec![2, 2, 1], vec![1, 2, 2]]);
    }
    p.lex_basis(nu)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralTerm {
    pub coeff: QRat,
    pub fpart: BorelElem,
    pub kweight: Weight,
    pub epart: BorelElem,
}

impl CentralTerm {
    pub fn new(coeff: QRat, fpart: BorelElem, kweight: Weight, epart: BorelElem) -> Self {
        Self {
            coeff,
            fpart,
            kweight,
            epart,
        }
    }

    /// Weight of the plus part, zero for pure `k` terms.
    pub fn nu(&self) -> Result<Weight> {
        Ok(self.epart.homogeneous_weight()?.unwrap_or(Weight::ZERO))
    }

    /// Rescales both parts to leading coefficient 1.
    fn normalized(mut self) -> Option<Self> {
        if self.coeff.is_zero() {
            return None;
        }
        for part in [&mut self.fpart, &mut self.epart] {
            let lc = part.leading_coeff()?.clone();
            *part = part.scale(&lc.inv().ok()?);
            self.coeff = &self.coeff * &lc;
        }
        Some(self)
    }
}

/// Sum of `coeff · fpart · k · epart` terms in canonical form: parts
/// normalized, equal `(kweight, fpart, epart)` merged, zeros dropped, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CentralElem {
    terms: Vec<CentralTerm>,
}

impl CentralElem {
    pub fn from_terms(terms: impl IntoIterator<Item = CentralTerm>) -> Self {
        let mut merged: BTreeMap<(Weight, BorelElem, BorelElem), QRat> = BTreeMap::new();
        for t in terms.into_iter().filter_map(CentralTerm::normalized) {
            let slot = merged.entry((t.kweight, t.fpart, t.epart)).or_default();
            *slot += &t.coeff;
        }
        Self {
            terms: merged
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|((k, f, e), c)| CentralTerm::new(c, f, k, e))
                .collect(),
        }
    }

    pub fn terms(&self) -> &[CentralTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn kweights(&self) -> Vec<Weight> {
        self.terms.iter().map(|t| t.kweight).collect()
    }

    /// Terms grouped by `(kweight, ν)`.
    pub fn blocks(&self) -> Result<BTreeMap<(Weight, Weight), Vec<&CentralTerm>>> {
        let mut out: BTreeMap<(Weight, Weight), Vec<&CentralTerm>> = BTreeMap::new();
        for t in &self.terms {
            out.entry((t.kweight, t.nu()?)).or_default().push(t);
        }
        Ok(out)
    }
}

impl fmt::Display for CentralElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            if n > 0 {
                writeln!(f)?;
            }
            write!(f, "+ ({})", t.coeff)?;
            if !is_unit(&t.fpart) {
                write!(f, " * ({})", t.fpart)?;
            }
            write!(f, " k({},{})", t.kweight.x1, t.kweight.x2)?;
            if !is_unit(&t.epart) {
                write!(f, " ({})", t.epart)?;
            }
        }
        Ok(())
    }
}

fn is_unit(x: &BorelElem) -> bool {
    x.len() == 1 && x.coeff(&[], Weight::ZERO).is_one()
}

impl Serialize for CentralElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            terms: &'a [CentralTerm],
        }
        Repr { terms: &self.terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for CentralElem {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            terms: Vec<CentralTerm>,
        }
        Ok(Self::from_terms(Repr::deserialize(d)?.terms))
    }
}

/// Contribution of one weight pair, already factored as a single
/// `fpart · k · epart` term. The double sum over the two dual bases is
/// checked to have rank one before it is collapsed.
pub fn pair_contribution(p: &Pairing, rep: &Representation, mu: Weight, la: Weight) -> Result<CentralTerm> {
    let nu = mu - la;
    let coeff = QRat::q_pow(inner(nu, mu) - inner(rho() + rho(), mu));
    let kweight = -la - mu;
    if nu == Weight::ZERO {
        return Ok(CentralTerm::new(coeff, BorelElem::one(Side::Minus), kweight, BorelElem::one(Side::Plus)));
    }
    let basis = basis_for(p, nu)?;
    let duals = p.dual_basis(nu, &basis)?;
    let us: Vec<BorelElem> = basis.iter().map(|w| BorelElem::word(Side::Plus, w)).collect();
    let (li, mi) = (index_in(rep, la)?, index_in(rep, mu)?);
    let vmats: Vec<QMatrix> = duals.iter().map(|v| rep.borel_matrix(v)).collect();
    let umats: Vec<QMatrix> = us.iter().map(|u| rep.borel_matrix(u)).collect();
    let mut fpart = BorelElem::zero(Side::Minus);
    let mut epart = BorelElem::zero(Side::Plus);
    // Σ_{i,j} f_λ(v^j u^i w_λ) v^i k u^j, which factors because W[μ] is a line
    for (v, um) in duals.iter().zip(&umats) {
        fpart = &fpart + &v.scale(&um[(mi, li)]);
    }
    for (u, vm) in us.iter().zip(&vmats) {
        epart = &epart + &u.scale(&vm[(li, mi)]);
    }
    for vm in &vmats {
        for um in &umats {
            let full = (vm * um)[(li, li)].clone();
            if full != &vm[(li, mi)] * &um[(mi, li)] {
                return Err(Error::Verification(format!("block ({mu},{la}) does not factor")));
            }
        }
    }
    Ok(CentralTerm::new(coeff, fpart, kweight, epart))
}

fn index_in(rep: &Representation, w: Weight) -> Result<usize> {
    rep.weights
        .iter()
        .position(|&x| x == w)
        .ok_or_else(|| Error::Verification(format!("{w} is not a weight of {}", rep.name.as_str())))
}

pub fn central_element(p: &Pairing) -> Result<CentralElem> {
    let rep = rep5();
    let terms = weight_pairs()
        .into_iter()
        .map(|(mu, la)| pair_contribution(p, &rep, mu, la))
        .collect::<Result<Vec<_>>>()?;
    Ok(CentralElem::from_terms(terms))
}

/// Same result as [`central_element`], one thread per weight pair.
pub fn central_element_parallel(p: &Pairing) -> Result<CentralElem> {
    let rep = rep5();
    let pairs = weight_pairs();
    let terms = std::thread::scope(|s| {
        let handles: Vec<_> = pairs
            .iter()
            .map(|&(mu, la)| {
                let rep = &rep;
                s.spawn(move || pair_contribution(p, rep, mu, la))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("assembly thread panicked"))
            .collect::<Result<Vec<_>>>()
    })?;
    Ok(CentralElem::from_terms(terms))
}

fn qr(s: &str) -> QRat {
    s.parse().expect("constant coefficient")
}

fn minus(s: &str) -> BorelElem {
    BorelElem::parse(s, Side::Minus).expect("constant element")
}

fn plus(s: &str) -> BorelElem {
    BorelElem::parse(s, Side::Plus).expect("constant element")
}

pub fn theorem_element() -> CentralElem {
    let ab = qr("1 - q^2");
    theorem_element_with(&ab, &ab)
}

/// The hand-written element with free coefficients `a` on `e2 e1 e2 e1` and
/// `b` on `e1 e2 e2 e1` in the weight-(2,2) block.
pub fn theorem_element_with(a: &QRat, b: &QRat) -> CentralElem {
    let k = Weight::new;
    let one_f = || BorelElem::one(Side::Minus);
    let one_e = || BorelElem::one(Side::Plus);
    let top_e = &plus("(1-q^2)*e1 e2 e1 e2 + (q^4-q^-2)*e2 e1 e1 e2")
        + &(&plus("e2 e1 e2 e1").scale(a) + &plus("e1 e2 e2 e1").scale(b));
    let terms = vec![
        CentralTerm::new(
            qr("q^-2*(q-q^-1)^2"),
            minus("(1-q^2)*f1 f2 f1 f2 + (q^4-q^-2)*f2 f1 f1 f2 + (1-q^2)*f2 f1 f2 f1 + (1-q^2)*f1 f2 f2 f1"),
            k(0, 0),
            top_e,
        ),
        CentralTerm::new(qr("(q-q^-1)^4"), minus("f1 f1"), k(0, 0), plus("e1 e1")),
        CentralTerm::new(
            qr("(q-q^-1)^2"),
            minus("(1+q^2)*f1 f2 f1 - f2 f1 f1 - q^2*f1 f1 f2"),
            k(0, 2),
            plus("(1+q^2)*e1 e2 e1 - e1 e1 e2 - q^2*e2 e1 e1"),
        ),
        CentralTerm::new(
            qr("(q-q^-1)^2*(q+q^-1)"),
            minus("q^2*f1 f2 - f2 f1"),
            k(1, 1),
            plus("q^2*e2 e1 - e1 e2"),
        ),
        CentralTerm::new(qr("(q^2-q^-2)^2*q^4"), minus("f2"), k(2, 0), plus("e2")),
        CentralTerm::new(
            qr("q^-4*(q-q^-1)^2"),
            minus("(1+q^2)*f1 f2 f1 - f1 f1 f2 - q^2*f2 f1 f1"),
            k(0, -2),
            plus("(1+q^2)*e1 e2 e1 - e2 e1 e1 - q^2*e1 e1 e2"),
        ),
        CentralTerm::new(
            qr("q^-4*(q-q^-1)^2*(q+q^-1)"),
            minus("q^2*f2 f1 - f1 f2"),
            k(-1, -1),
            plus("q^2*e1 e2 - e2 e1"),
        ),
        CentralTerm::new(qr("q^-4*(q^2-q^-2)^2"), minus("f2"), k(-2, 0), plus("e2")),
        CentralTerm::new(qr("(q-q^-1)^2*(q+q^-1)"), minus("f1"), k(-1, 1), plus("e1")),
        CentralTerm::new(qr("(q-q^-1)^2*(q+q^-1)"), minus("f1"), k(1, -1), plus("e1")),
        CentralTerm::new(qr("q^6"), one_f(), k(2, 2), one_e()),
        CentralTerm::new(qr("q^-6"), one_f(), k(-2, -2), one_e()),
        CentralTerm::new(qr("q^2"), one_f(), k(2, -2), one_e()),
        CentralTerm::new(qr("q^-2"), one_f(), k(-2, 2), one_e()),
        CentralTerm::new(QRat::one(), one_f(), k(0, 0), one_e()),
    ];
    CentralElem::from_terms(terms)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockComparison {
    pub kweight: Weight,
    pub nu: Weight,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub evaluation_match: bool,
    pub blockwise_match: bool,
    pub blocks: Vec<BlockComparison>,
}

impl Comparison {
    pub fn matches(&self) -> bool {
        self.evaluation_match && self.blockwise_match
    }

    pub fn verdict(&self) -> String {
        if self.matches() {
            "MATCH (16-dim evaluation + blockwise mod-radical)".into()
        } else {
            format!(
                "MISMATCH (16-dim evaluation: {}, blockwise mod-radical: {})",
                if self.evaluation_match { "equal" } else { "different" },
                if self.blockwise_match { "equal" } else { "different" },
            )
        }
    }
}

/// Compares two elements by their 16-dim matrices and, block by block, as
/// bilinear forms: each `(kweight, ν)` block `Σ c · f ⊗ e` is paired against
/// every plus word (first slot) and every minus word (second slot) of weight
/// `ν`, which is zero exactly when the blocks agree modulo the radical.
pub fn compare(p: &Pairing, a: &CentralElem, b: &CentralElem) -> Result<Comparison> {
    let r16 = rep16();
    let evaluation_match = r16.evaluate(a) == r16.evaluate(b);
    let (ba, bb) = (a.blocks()?, b.blocks()?);
    let mut keys: Vec<(Weight, Weight)> = ba.keys().chain(bb.keys()).copied().collect();
    keys.sort();
    keys.dedup();
    let mut blocks = Vec::new();
    for key in keys {
        let mut signed: Vec<(QRat, &CentralTerm)> = Vec::new();
        for t in ba.get(&key).into_iter().flatten() {
            signed.push((t.coeff.clone(), t));
        }
        for t in bb.get(&key).into_iter().flatten() {
            signed.push((-&t.coeff, t));
        }
        let matches = block_form_vanishes(p, key.1, &signed)?;
        blocks.push(BlockComparison {
            kweight: key.0,
            nu: key.1,
            matches,
        });
    }
    let blockwise_match = blocks.iter().all(|b| b.matches);
    Ok(Comparison {
        evaluation_match,
        blockwise_match,
        blocks,
    })
}

fn block_form_vanishes(p: &Pairing, nu: Weight, terms: &[(QRat, &CentralTerm)]) -> Result<bool> {
    let words = words_of_weight(nu)?;
    let xs: Vec<BorelElem> = words.iter().map(|w| BorelElem::word(Side::Plus, w)).collect();
    let ys: Vec<BorelElem> = words.iter().map(|w| BorelElem::word(Side::Minus, w)).collect();
    let n = words.len();
    let mut form = vec![QRat::zero(); n * n];
    for (c, t) in terms {
        let left = xs.iter().map(|x| p.pair(&t.fpart, x)).collect::<Result<Vec<_>>>()?;
        let right = ys.iter().map(|y| p.pair(y, &t.epart)).collect::<Result<Vec<_>>>()?;
        for (s, l) in left.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            let cl = c * l;
            for (u, r) in right.iter().enumerate() {
                if !r.is_zero() {
                    form[s * n + u] += &(&cl * r);
                }
            }
        }
    }
    Ok(form.iter().all(QRat::is_zero))
}

/// Determines the two free coefficients of the weight-(2,2) block from the
/// requirement that the element commute with every generator of the 16-dim
/// module. The element is affine in `(A, B)`, so this is a linear system.
pub fn solve_ab() -> Result<(QRat, QRat)> {
    let r = rep16();
    let zero = QRat::zero();
    let one = QRat::one();
    let base = r.evaluate(&theorem_element_with(&zero, &zero));
    let da = &r.evaluate(&theorem_element_with(&one, &zero)) - &base;
    let db = &r.evaluate(&theorem_element_with(&zero, &one)) - &base;
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (_, g) in r.generator_matrices() {
        let (ca, cb, c0) = (da.commutator(&g), db.commutator(&g), base.commutator(&g));
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                let (x, y, z) = (&ca[(i, j)], &cb[(i, j)], &c0[(i, j)]);
                if x.is_zero() && y.is_zero() && z.is_zero() {
                    continue;
                }
                rows.push(vec![x.clone(), y.clone()]);
                rhs.push(vec![-z]);
            }
        }
    }
    if rows.is_empty() {
        return Err(Error::Verification("commutators impose no condition on A, B".into()));
    }
    let m = QMatrix::from_rows(rows)?;
    if m.rank() < 2 {
        return Err(Error::Verification("A, B are not uniquely determined".into()));
    }
    let sol = m.solve(&QMatrix::from_rows(rhs)?)?;
    Ok((sol[(0, 0)].clone(), sol[(1, 0)].clone()))
}
