//! Root and weight data for type B2 = C2.
//!
//! Weights live in `Z^2` with the Euclidean inner product; the simple roots
//! are `α1 = (1,-1)` and `α2 = (0,2)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(from = "[i64; 2]", into = "[i64; 2]")]
pub struct Weight {
    pub x1: i64,
    pub x2: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight::new(0, 0);

    pub const fn new(x1: i64, x2: i64) -> Self {
        Self { x1, x2 }
    }
}

impl From<[i64; 2]> for Weight {
    fn from([x1, x2]: [i64; 2]) -> Self {
        Self { x1, x2 }
    }
}

impl From<Weight> for [i64; 2] {
    fn from(w: Weight) -> Self {
        [w.x1, w.x2]
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x1, self.x2)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.x1 + o.x1, self.x2 + o.x2)
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.x1 - o.x1, self.x2 - o.x2)
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.x1, -self.x2)
    }
}

impl Mul<Weight> for i64 {
    type Output = Weight;
    fn mul(self, w: Weight) -> Weight {
        Weight::new(self * w.x1, self * w.x2)
    }
}

pub const ALPHA1: Weight = Weight::new(1, -1);
pub const ALPHA2: Weight = Weight::new(0, 2);

/// Simple root for generator index 1 or 2.
pub fn simple_root(i: u8) -> Weight {
    match i {
        1 => ALPHA1,
        2 => ALPHA2,
        _ => panic!("no simple root with index {i}"),
    }
}

/// `d_i = (α_i, α_i) / 2`, so that `q_i = q^{d_i}` (q_1 = q, q_2 = q^2).
pub fn root_scale(i: u8) -> i64 {
    inner(simple_root(i), simple_root(i)) / 2
}

pub fn inner(a: Weight, b: Weight) -> i64 {
    a.x1 * b.x1 + a.x2 * b.x2
}

/// Coordinates `(a, b)` with `w = a α1 + b α2`, if they are integers.
pub fn simple_root_coords(w: Weight) -> Option<(i64, i64)> {
    let a = w.x1;
    let twice_b = w.x2 + w.x1;
    (twice_b % 2 == 0).then_some((a, twice_b / 2))
}

/// `mu ≥ la` in dominance order: `mu - la` is a nonnegative integer
/// combination of simple roots.
pub fn dominance_geq(mu: Weight, la: Weight) -> bool {
    matches!(simple_root_coords(mu - la), Some((a, b)) if a >= 0 && b >= 0)
}

pub fn positive_roots() -> [Weight; 4] {
    [ALPHA1, ALPHA2, ALPHA1 + ALPHA2, 2 * ALPHA1 + ALPHA2]
}

/// Half the sum of the positive roots, `(2,1)`.
pub fn rho() -> Weight {
    Weight::new(2, 1)
}

/// `{(x1, x2) : x1 + x2 even}`
pub fn root_lattice_contains(w: Weight) -> bool {
    (w.x1 + w.x2).rem_euclid(2) == 0
}
