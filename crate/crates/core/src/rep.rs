//! Explicit finite-dimensional representations and matrix evaluation.
//!
//! Three modules are available: the 5-dim one, the 16-dim tensor square of
//! the 4-dim one (transcribed), and the 4-dim one itself, recovered from the
//! 16-dim matrices through the coproduct.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::cartan::{inner, root_scale, simple_root, Weight};
use crate::central::CentralElem;
use crate::error::{Error, Result};
use crate::freealg::{serre_elements, BorelElem, Side};
use crate::qfield::{q_diff, QMatrix, QRat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RepName {
    Dim4,
    Dim5,
    Dim16,
}

impl RepName {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "dim4" | "4" => Some(Self::Dim4),
            "dim5" | "5" => Some(Self::Dim5),
            "dim16" | "16" => Some(Self::Dim16),
            _ => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Dim4 => "dim4",
            Self::Dim5 => "dim5",
            Self::Dim16 => "dim16",
        }
    }
}

/// A weight module given by generator matrices. The k-action is diagonal,
/// determined by the weight of each basis vector.
#[derive(Clone, Debug)]
pub struct Representation {
    pub name: RepName,
    pub e: [QMatrix; 2],
    pub f: [QMatrix; 2],
    pub weights: Vec<Weight>,
}

impl Representation {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// `k_μ` acts on a vector of weight `w` by `q^{(w, μ)}`.
    pub fn kmat(&self, mu: Weight) -> QMatrix {
        QMatrix::diag(self.weights.iter().map(|&w| QRat::q_pow(inner(w, mu))).collect())
    }

    pub fn gen(&self, side: Side, i: u8) -> &QMatrix {
        let idx = (i - 1) as usize;
        match side {
            Side::Plus => &self.e[idx],
            Side::Minus => &self.f[idx],
        }
    }

    /// Product of generator matrices, left to right.
    pub fn word_matrix(&self, side: Side, letters: &[u8]) -> QMatrix {
        let mut m = QMatrix::identity(self.dim());
        for &i in letters {
            m = &m * self.gen(side, i);
        }
        m
    }

    pub fn borel_matrix(&self, x: &BorelElem) -> QMatrix {
        let mut acc = QMatrix::zeros(self.dim(), self.dim());
        for (w, k, c) in x.iter() {
            let mut m = self.word_matrix(x.side(), w);
            if k != Weight::ZERO {
                m = &m * &self.kmat(k);
            }
            acc = &acc + &m.scale(c);
        }
        acc
    }

    /// `Σ coeff · fpart · k · epart`
    pub fn evaluate(&self, c: &CentralElem) -> QMatrix {
        let mut acc = QMatrix::zeros(self.dim(), self.dim());
        for t in c.terms() {
            let m = &(&self.borel_matrix(&t.fpart) * &self.kmat(t.kweight)) * &self.borel_matrix(&t.epart);
            acc = &acc + &m.scale(&t.coeff);
        }
        acc
    }

    /// Matrices a central element must commute with.
    pub fn generator_matrices(&self) -> Vec<(String, QMatrix)> {
        let mut out = Vec::new();
        for i in 1..=2u8 {
            out.push((format!("e{i}"), self.e[(i - 1) as usize].clone()));
            out.push((format!("f{i}"), self.f[(i - 1) as usize].clone()));
            out.push((format!("k{i}"), self.kmat(simple_root(i))));
        }
        out
    }

    pub fn centrality_check(&self, m: &QMatrix) -> bool {
        self.generator_matrices().iter().all(|(_, g)| m.commutator(g).is_zero())
    }

    /// Weyl relations, k-conjugation, Serre elements and k-multiplicativity,
    /// each checked as an exact matrix identity.
    pub fn relation_suite(&self) -> Vec<RelationCheck> {
        let mut out = Vec::new();
        let mut push = |name: String, holds: bool| out.push(RelationCheck { name, holds });
        for i in 1..=2u8 {
            let ai = simple_root(i);
            let ki = self.kmat(ai);
            let ki_inv = self.kmat(-ai);
            for j in 1..=2u8 {
                let aj = simple_root(j);
                let comm = self.e[(i - 1) as usize].commutator(&self.f[(j - 1) as usize]);
                let rhs = if i == j {
                    let d = q_diff(root_scale(i)).inv().expect("q_i - q_i^-1 is nonzero");
                    (&ki - &ki_inv).scale(&d)
                } else {
                    QMatrix::zeros(self.dim(), self.dim())
                };
                push(format!("[e{i},f{j}]"), comm == rhs);
                let c = QRat::q_pow(inner(ai, aj));
                let ke = &(&ki * &self.e[(j - 1) as usize]) * &ki_inv;
                push(format!("k{i} e{j} k{i}^-1"), ke == self.e[(j - 1) as usize].scale(&c));
                let kf = &(&ki * &self.f[(j - 1) as usize]) * &ki_inv;
                let c_inv = QRat::q_pow(-inner(ai, aj));
                push(format!("k{i} f{j} k{i}^-1"), kf == self.f[(j - 1) as usize].scale(&c_inv));
            }
        }
        for (n, s) in serre_elements().iter().enumerate() {
            push(format!("serre[{n}]"), self.borel_matrix(s).is_zero());
        }
        let samples = [Weight::new(1, 0), Weight::new(0, 1), Weight::new(2, -1), Weight::new(-1, 3)];
        for a in samples {
            for b in samples {
                if (&self.kmat(a) * &self.kmat(b)) != self.kmat(a + b) {
                    push(format!("k{a} k{b}"), false);
                    return out;
                }
            }
        }
        push("k multiplicative".into(), true);
        out
    }

    pub fn relations_hold(&self) -> bool {
        self.relation_suite().iter().all(|r| r.holds)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub holds: bool,
}

fn unit(n: usize, entries: &[(usize, usize, QRat)]) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    for (i, j, c) in entries {
        m[(i - 1, j - 1)] = c.clone();
    }
    m
}

fn c(s: &str) -> QRat {
    s.parse().expect("constant coefficient")
}

pub const DIM5_WEIGHTS: [Weight; 5] = [
    Weight::new(1, 1),
    Weight::new(1, -1),
    Weight::new(0, 0),
    Weight::new(-1, 1),
    Weight::new(-1, -1),
];

pub fn rep5() -> Representation {
    let one = QRat::one;
    let qq = c("q + q^-1");
    Representation {
        name: RepName::Dim5,
        e: [
            unit(5, &[(2, 3, qq.clone()), (3, 4, one())]),
            unit(5, &[(1, 2, one()), (4, 5, one())]),
        ],
        f: [
            unit(5, &[(3, 2, one()), (4, 3, qq)]),
            unit(5, &[(2, 1, one()), (5, 4, one())]),
        ],
        weights: DIM5_WEIGHTS.to_vec(),
    }
}

pub const DIM16_WEIGHTS: [Weight; 16] = [
    Weight::new(2, 0),
    Weight::new(1, 1),
    Weight::new(1, 1),
    Weight::new(0, 2),
    Weight::new(1, -1),
    Weight::new(1, -1),
    Weight::new(0, 0),
    Weight::new(0, 0),
    Weight::new(0, 0),
    Weight::new(0, 0),
    Weight::new(-1, 1),
    Weight::new(-1, 1),
    Weight::new(0, -2),
    Weight::new(-1, -1),
    Weight::new(-1, -1),
    Weight::new(-2, 0),
];

pub fn rep16() -> Representation {
    let entries = |list: &[(usize, usize, &str)]| -> Vec<(usize, usize, QRat)> {
        list.iter().map(|&(i, j, s)| (i, j, c(s))).collect()
    };
    let e1 = entries(&[
        (1, 2, "1"),
        (3, 4, "1"),
        (6, 7, "1"),
        (10, 12, "1"),
        (5, 9, "-1"),
        (8, 11, "-1"),
        (13, 14, "-1"),
        (15, 16, "-1"),
        (1, 3, "q"),
        (2, 4, "q^-1"),
        (5, 8, "q"),
        (6, 10, "-q"),
        (7, 12, "-q^-1"),
        (9, 11, "q^-1"),
        (13, 15, "-q"),
        (14, 16, "-q^-1"),
    ]);
    let e2 = entries(&[
        (2, 5, "1"),
        (4, 8, "1"),
        (7, 13, "1"),
        (12, 15, "1"),
        (3, 6, "1"),
        (4, 7, "q^2"),
        (8, 13, "q^-2"),
        (11, 14, "1"),
    ]);
    let f1 = entries(&[
        (3, 1, "1"),
        (4, 2, "1"),
        (8, 5, "1"),
        (10, 6, "-1"),
        (12, 7, "-1"),
        (11, 9, "1"),
        (15, 13, "-1"),
        (16, 14, "-1"),
        (2, 1, "q^-1"),
        (4, 3, "q"),
        (7, 6, "q^-1"),
        (12, 10, "q"),
        (9, 5, "-q^-1"),
        (11, 8, "-q"),
        (14, 13, "-q^-1"),
        (16, 15, "-q"),
    ]);
    let f2 = entries(&[
        (6, 3, "1"),
        (7, 4, "1"),
        (13, 8, "1"),
        (14, 11, "1"),
        (5, 2, "1"),
        (8, 4, "q^-2"),
        (13, 7, "q^2"),
        (15, 12, "1"),
    ]);
    Representation {
        name: RepName::Dim16,
        e: [unit(16, &e1), unit(16, &e2)],
        f: [unit(16, &f1), unit(16, &f2)],
        weights: DIM16_WEIGHTS.to_vec(),
    }
}

/// Weights of the 4-dim basis, in the order used for the extracted matrices.
pub const DIM4_WEIGHTS: [Weight; 4] = [Weight::new(1, 0), Weight::new(0, 1), Weight::new(0, -1), Weight::new(-1, 0)];

/// The 4-dim representation together with the identification of the 16
/// basis vectors with pairs `v_a ⊗ v_b` (0-based `a`, `b`).
#[derive(Clone, Debug)]
pub struct Rep4Derivation {
    pub rep: Representation,
    pub index_map: Vec<(usize, usize)>,
    /// How many weight-compatible identifications reproduce the 16-dim
    /// matrices; the extraction is unambiguous when this is 1.
    pub solutions: usize,
}

/// `(a, b)` for the basis vector `v_a ⊗ v_b`.
type Slot = (usize, usize);

/// Recovers the 4-dim matrices from the 16-dim ones by searching over all
/// weight-compatible identifications `index ↔ v_a ⊗ v_b` and keeping those for
/// which `e ⊗ 1 + k ⊗ e`, `1 ⊗ f + f ⊗ k^-1` and `k ⊗ k` reproduce the
/// transcribed matrices exactly.
pub fn derive_rep4() -> Result<Rep4Derivation> {
    let big = rep16();
    let mut groups: BTreeMap<Weight, (Vec<usize>, Vec<Slot>)> = BTreeMap::new();
    for (idx, &w) in big.weights.iter().enumerate() {
        groups.entry(w).or_default().0.push(idx);
    }
    for (a, &wa) in DIM4_WEIGHTS.iter().enumerate() {
        for (b, &wb) in DIM4_WEIGHTS.iter().enumerate() {
            let w = wa + wb;
            groups
                .get_mut(&w)
                .ok_or_else(|| Error::Verification(format!("weight {w} missing in 16-dim module")))?
                .1
                .push((a, b));
        }
    }
    let mut choices: Vec<(Vec<usize>, Vec<Vec<Slot>>)> = Vec::new();
    for (idxs, pairs) in groups.into_values() {
        if idxs.len() != pairs.len() {
            return Err(Error::Verification("weight multiplicities differ".into()));
        }
        choices.push((idxs, permutations(&pairs)));
    }

    let mut found: Option<(Vec<Slot>, [QMatrix; 2], [QMatrix; 2])> = None;
    let mut solutions = 0;
    let mut counters = vec![0usize; choices.len()];
    loop {
        let mut map = vec![(0, 0); 16];
        for (g, (idxs, perms)) in choices.iter().enumerate() {
            for (slot, &idx) in idxs.iter().enumerate() {
                map[idx] = perms[counters[g]][slot];
            }
        }
        if let Some((e, f)) = try_extract(&big, &map) {
            solutions += 1;
            if found.is_none() {
                found = Some((map, e, f));
            }
        }
        // odometer over the per-weight permutations
        let mut g = 0;
        loop {
            if g == counters.len() {
                break;
            }
            counters[g] += 1;
            if counters[g] < choices[g].1.len() {
                break;
            }
            counters[g] = 0;
            g += 1;
        }
        if g == counters.len() {
            break;
        }
    }
    let (index_map, e, f) = found.ok_or_else(|| Error::Verification("no 4-dim extraction reproduces the 16-dim matrices".into()))?;
    let rep = Representation {
        name: RepName::Dim4,
        e,
        f,
        weights: DIM4_WEIGHTS.to_vec(),
    };
    if !rep.relations_hold() {
        return Err(Error::Verification("extracted 4-dim matrices violate a relation".into()));
    }
    Ok(Rep4Derivation { rep, index_map, solutions })
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

fn try_extract(big: &Representation, map: &[(usize, usize)]) -> Option<([QMatrix; 2], [QMatrix; 2])> {
    // position of v_a ⊗ v_b in the Kronecker ordering 4a + b
    let mut perm = [0usize; 16];
    for (idx, &(a, b)) in map.iter().enumerate() {
        perm[4 * a + b] = idx;
    }
    let reorder = |m: &QMatrix| QMatrix::from_fn(16, 16, |r, s| m[(perm[r], perm[s])].clone());
    let small = |mu: Weight| QMatrix::diag(DIM4_WEIGHTS.iter().map(|&w| QRat::q_pow(inner(w, mu))).collect());
    let id = QMatrix::identity(4);
    let mut es = Vec::new();
    let mut fs = Vec::new();
    for i in 0..2 {
        let a = simple_root(i as u8 + 1);
        let (k, k_inv) = (small(a), small(-a));
        let e = reorder(&big.e[i]);
        // second factor fixed at the lowest vector, where the small e vanishes
        let em = QMatrix::from_fn(4, 4, |r, s| e[(4 * r + 3, 4 * s + 3)].clone());
        if &em.kron(&id) + &k.kron(&em) != e {
            return None;
        }
        let f = reorder(&big.f[i]);
        // first factor fixed at the highest vector, where the small f vanishes
        let fm = QMatrix::from_fn(4, 4, |r, s| f[(r, s)].clone());
        if &id.kron(&fm) + &fm.kron(&k_inv) != f {
            return None;
        }
        if k.kron(&k) != reorder(&big.kmat(a)) {
            return None;
        }
        es.push(em);
        fs.push(fm);
    }
    let f1 = fs.pop()?;
    let f0 = fs.pop()?;
    let e1 = es.pop()?;
    let e0 = es.pop()?;
    Some(([e0, e1], [f0, f1]))
}

pub fn representation(name: RepName) -> Result<Representation> {
    Ok(match name {
        RepName::Dim4 => derive_rep4()?.rep,
        RepName::Dim5 => rep5(),
        RepName::Dim16 => rep16(),
    })
}

/// `(q^-5 - q^-3 - q^3 + q^5)` and `(1 + q^-10 + q^-6 + q^6 + q^10)`.
pub fn hamiltonian_constants() -> (QRat, QRat) {
    (
        c("q^-5 - q^-3 - q^3 + q^5"),
        c("1 + q^-10 + q^-6 + q^6 + q^10"),
    )
}

/// `(C - shift·Id) / scale` on the 16-dim module, for a given evaluated `C`.
pub fn normalize(c16: &QMatrix) -> QMatrix {
    let (scale, shift) = hamiltonian_constants();
    let inv = scale.inv().expect("normalization is a nonzero rational function");
    (c16 - &QMatrix::identity(c16.rows()).scale(&shift)).scale(&inv)
}

/// The normalized 16x16 matrix of the hand-written central element.
pub fn hamiltonian() -> QMatrix {
    normalize(&rep16().evaluate(&crate::central::theorem_element()))
}

/// Rejects `q0 ∈ {0, 1, -1}`.
pub fn check_specialization(q0: &BigRational) -> Result<()> {
    if q0.is_zero() || q0.abs().is_one() {
        return Err(Error::Field(crate::qfield::QError::Pole(q0.to_string())));
    }
    Ok(())
}

pub fn specialize(m: &QMatrix, q0: &BigRational) -> Result<Vec<Vec<BigRational>>> {
    check_specialization(q0)?;
    let mut out = Vec::with_capacity(m.rows());
    for r in 0..m.rows() {
        let mut row = Vec::with_capacity(m.cols());
        for s in 0..m.cols() {
            row.push(m[(r, s)].eval(q0)?);
        }
        out.push(row);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignEntry {
    pub entry: [usize; 2],
    pub sign: i8,
    pub q0: String,
}

/// Signs of nonzero off-diagonal entries at each sample point.
pub fn sign_report(m: &QMatrix, samples: &[BigRational]) -> Result<Vec<SignEntry>> {
    let mut out = Vec::new();
    for q0 in samples {
        let vals = specialize(m, q0)?;
        for (r, row) in vals.iter().enumerate() {
            for (s, v) in row.iter().enumerate() {
                if r != s && !v.is_zero() {
                    out.push(SignEntry {
                        entry: [r, s],
                        sign: if v.is_positive() { 1 } else { -1 },
                        q0: q0.to_string(),
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn default_sign_samples() -> Vec<BigRational> {
    [(1, 4), (1, 2), (3, 4)]
        .iter()
        .map(|&(n, d)| BigRational::new(n.into(), d.into()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rep5_k_matrices() {
        let r = rep5();
        let k1 = QMatrix::diag(["1", "q^2", "1", "q^-2", "1"].iter().map(|s| c(s)).collect());
        let k2 = QMatrix::diag(["q^2", "q^-2", "1", "q^2", "q^-2"].iter().map(|s| c(s)).collect());
        assert_eq!(r.kmat(simple_root(1)), k1);
        assert_eq!(r.kmat(simple_root(2)), k2);
        assert!(r.e[1][(0, 1)].is_one());
        assert_eq!(r.f[0][(3, 2)], c("q + q^-1"));
    }

    #[test]
    fn rep16_spot_entries() {
        let r = rep16();
        assert_eq!(r.e[0][(0, 2)], c("q"));
        assert_eq!(r.e[0][(5, 9)], c("-q"));
        let k = r.kmat(Weight::new(3, 5));
        assert_eq!(k[(0, 0)], c("q^6"));
        assert_eq!(k[(1, 1)], c("q^8"));
        assert_eq!(k[(3, 3)], c("q^10"));
    }

    #[test]
    fn relations_on_explicit_modules() {
        for r in [rep5(), rep16()] {
            for check in r.relation_suite() {
                assert!(check.holds, "{:?} {}", r.name, check.name);
            }
        }
    }

    #[test]
    fn rep4_extraction_is_unique() {
        let d = derive_rep4().unwrap();
        assert_eq!(d.solutions, 1);
        let k1 = d.rep.kmat(simple_root(1));
        let expect = QMatrix::diag(["q", "q^-1", "q", "q^-1"].iter().map(|s| c(s)).collect());
        assert_eq!(k1, expect);
        assert_eq!(d.index_map[0], (0, 0));
        assert_eq!(d.index_map[15], (3, 3));
    }

    #[test]
    fn specialization_rejects_degenerate_points() {
        let m = QMatrix::identity(2);
        for (n, d) in [(0, 1), (1, 1), (-1, 1)] {
            assert!(specialize(&m, &BigRational::new(n.into(), d.into())).is_err());
        }
    }
}
