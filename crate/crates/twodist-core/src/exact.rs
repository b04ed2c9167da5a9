//! Exact arithmetic: rationals, the ring Q[√33], sign determination in
//! Q[√3, √11], and the two point representations used by the graph
//! construction.

use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps values reduced with a positive denominator after
/// every operation, so equality of values is equality of representations.
pub type Rat = BigRational;

/// Rational `n / d`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

fn sign_of(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Element `r + s·√33` of Q[√33]. Squared distances between plane points
/// live here.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Q33 {
    pub r: Rat,
    pub s: Rat,
}

impl Q33 {
    pub fn new(r: Rat, s: Rat) -> Self {
        Q33 { r, s }
    }

    /// Zero iff both coefficients vanish; √33 is irrational.
    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    /// True iff the value equals the integer `n` exactly, i.e. the √33
    /// part is exactly zero and the rational part is `n`.
    pub fn equals_int(&self, n: i64) -> bool {
        self.s.is_zero() && self.r == rat_int(n)
    }
}

impl fmt::Display for Q33 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt(33)", self.r, self.s)
    }
}

/// Element `q0 + q1·√3 + q2·√11 + q3·√33` of Q[√3, √11].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    pub q0: Rat,
    pub q1: Rat,
    pub q2: Rat,
    pub q3: Rat,
}

/// Rational enclosure `[lo, hi]` of √m with `hi - lo = 2^-bits`.
fn sqrt_interval(m: u32, bits: u32) -> (Rat, Rat) {
    let scaled = BigInt::from(m) << (2 * bits);
    let lo = scaled.sqrt();
    let hi = &lo + BigInt::one();
    let den = BigInt::one() << bits;
    (Rat::new(lo, den.clone()), Rat::new(hi, den))
}

impl FieldElem {
    pub fn new(q0: Rat, q1: Rat, q2: Rat, q3: Rat) -> Self {
        FieldElem { q0, q1, q2, q3 }
    }

    pub fn is_zero(&self) -> bool {
        self.q0.is_zero() && self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero()
    }

    /// Exact sign: -1, 0 or +1.
    ///
    /// Evaluates the element with rational interval enclosures of the
    /// radicals at doubling precision until the interval excludes zero.
    /// `{1, √3, √11, √33}` is linearly independent over Q, so a nonzero
    /// coefficient vector has a nonzero value and the loop terminates.
    pub fn sign(&self) -> i8 {
        if self.is_zero() {
            return 0;
        }
        if self.q1.is_zero() && self.q2.is_zero() && self.q3.is_zero() {
            return sign_of(&self.q0);
        }
        let mut bits = 16u32;
        loop {
            let mut lo = self.q0.clone();
            let mut hi = self.q0.clone();
            for (coef, m) in [(&self.q1, 3u32), (&self.q2, 11), (&self.q3, 33)] {
                if coef.is_zero() {
                    continue;
                }
                let (slo, shi) = sqrt_interval(m, bits);
                if coef.is_positive() {
                    lo += coef * &slo;
                    hi += coef * &shi;
                } else {
                    lo += coef * &shi;
                    hi += coef * &slo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }
}

/// Lattice point `[a,b,c,d]` denoting `(a√3/12 + b√11/12, c/12 + d√33/12)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuadCoord {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl QuadCoord {
    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        QuadCoord { a, b, c, d }
    }

    pub fn to_point(self) -> PlanePoint {
        PlanePoint {
            xa: rat(self.a, 12),
            xb: rat(self.b, 12),
            yc: rat(self.c, 12),
            yd: rat(self.d, 12),
        }
    }
}

impl From<[i64; 4]> for QuadCoord {
    fn from(v: [i64; 4]) -> Self {
        QuadCoord::new(v[0], v[1], v[2], v[3])
    }
}

impl fmt::Display for QuadCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{},{}]", self.a, self.b, self.c, self.d)
    }
}

/// Plane point `(xa·√3 + xb·√11, yc + yd·√33)` with rational coefficients.
///
/// This coefficient space is closed under every transform used in the
/// construction, including the rotation whose cosine is 49/50. All four
/// fields are kept canonical, so derived equality, ordering and hashing
/// agree with geometric equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PlanePoint {
    pub xa: Rat,
    pub xb: Rat,
    pub yc: Rat,
    pub yd: Rat,
}

impl From<QuadCoord> for PlanePoint {
    fn from(q: QuadCoord) -> Self {
        q.to_point()
    }
}

impl PlanePoint {
    pub fn new(xa: Rat, xb: Rat, yc: Rat, yd: Rat) -> Self {
        PlanePoint { xa, xb, yc, yd }
    }

    pub fn origin() -> Self {
        PlanePoint::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn is_origin(&self) -> bool {
        self.xa.is_zero() && self.xb.is_zero() && self.yc.is_zero() && self.yd.is_zero()
    }

    /// The lattice form `[a,b,c,d]`, if all coefficients are multiples of
    /// 1/12 and fit in `i64`.
    pub fn as_quad(&self) -> Option<QuadCoord> {
        let twelve = rat_int(12);
        let mut out = [0i64; 4];
        for (i, coef) in [&self.xa, &self.xb, &self.yc, &self.yd].into_iter().enumerate() {
            let scaled = coef * &twelve;
            if !scaled.is_integer() {
                return None;
            }
            out[i] = i64::try_from(scaled.to_integer()).ok()?;
        }
        Some(QuadCoord::new(out[0], out[1], out[2], out[3]))
    }

    /// Squared Euclidean distance, exact in Q[√33].
    ///
    /// With Δx = Δxa·√3 + Δxb·√11 and Δy = Δyc + Δyd·√33:
    /// r = 3Δxa² + 11Δxb² + Δyc² + 33Δyd², s = 2(ΔxaΔxb + ΔycΔyd).
    pub fn sq_distance(&self, other: &PlanePoint) -> Q33 {
        let dxa = &self.xa - &other.xa;
        let dxb = &self.xb - &other.xb;
        let dyc = &self.yc - &other.yc;
        let dyd = &self.yd - &other.yd;
        let r = rat_int(3) * (&dxa * &dxa)
            + rat_int(11) * (&dxb * &dxb)
            + (&dyc * &dyc)
            + rat_int(33) * (&dyd * &dyd);
        let s = rat_int(2) * (&dxa * &dxb + &dyc * &dyd);
        Q33::new(r, s)
    }

    /// The x coordinate as an element of Q[√3, √11].
    pub fn x_elem(&self) -> FieldElem {
        FieldElem::new(Rat::zero(), self.xa.clone(), self.xb.clone(), Rat::zero())
    }

    /// The y coordinate as an element of Q[√3, √11].
    pub fn y_elem(&self) -> FieldElem {
        FieldElem::new(self.yc.clone(), Rat::zero(), Rat::zero(), self.yd.clone())
    }

    /// The cross product `x_p·y_q − x_q·y_p` of two position vectors.
    ///
    /// Expanding with √3·√33 = 3√11 and √11·√33 = 11√3 keeps the result
    /// in the span of {√3, √11}.
    pub fn cross(&self, other: &PlanePoint) -> FieldElem {
        // x·y = (xa·yc + 11·xb·yd)√3 + (3·xa·yd + xb·yc)√11
        let t3 = |p: &PlanePoint, q: &PlanePoint| &p.xa * &q.yc + rat_int(11) * (&p.xb * &q.yd);
        let t11 = |p: &PlanePoint, q: &PlanePoint| rat_int(3) * (&p.xa * &q.yd) + &p.xb * &q.yc;
        FieldElem::new(
            Rat::zero(),
            t3(self, other) - t3(other, self),
            t11(self, other) - t11(other, self),
            Rat::zero(),
        )
    }

    pub(crate) fn sub(&self, other: &PlanePoint) -> PlanePoint {
        PlanePoint {
            xa: &self.xa - &other.xa,
            xb: &self.xb - &other.xb,
            yc: &self.yc - &other.yc,
            yd: &self.yd - &other.yd,
        }
    }

    pub(crate) fn add(&self, other: &PlanePoint) -> PlanePoint {
        PlanePoint {
            xa: &self.xa + &other.xa,
            xb: &self.xb + &other.xb,
            yc: &self.yc + &other.yc,
            yd: &self.yd + &other.yd,
        }
    }

}

impl fmt::Display for PlanePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_quad() {
            Some(q) => write!(f, "{q}"),
            None => write!(f, "({}, {}, {}, {})", self.xa, self.xb, self.yc, self.yd),
        }
    }
}

/// Deduplicate points preserving first occurrence.
pub fn dedup_points(points: Vec<PlanePoint>) -> Vec<PlanePoint> {
    let mut seen = alloc::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}
