//! Degree-one rational maps `z ↦ (a z + b)/(c z + d)` over ℚ(i).

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::CPoly;
use crate::scalar::{Field, GaussRational};
use crate::trig::{ProjPoint, RatFunc};

#[derive(Clone, PartialEq, Eq)]
pub struct Mobius {
    a: GaussRational,
    b: GaussRational,
    c: GaussRational,
    d: GaussRational,
}

impl Mobius {
    pub fn new(
        a: GaussRational,
        b: GaussRational,
        c: GaussRational,
        d: GaussRational,
    ) -> Result<Self> {
        let det = a.clone() * &d - b.clone() * &c;
        if det.is_zero() {
            return Err(Error::internal("degenerate Möbius map (zero determinant)"));
        }
        Ok(Mobius { a, b, c, d })
    }

    pub fn identity() -> Self {
        Mobius::affine(GaussRational::one(), GaussRational::zero()).expect("unit slope")
    }

    /// `z ↦ slope · z + offset`
    pub fn affine(slope: GaussRational, offset: GaussRational) -> Result<Self> {
        Mobius::new(slope, offset, GaussRational::zero(), GaussRational::one())
    }

    /// `z ↦ a + 1/z`
    pub fn shifted_reciprocal(a: GaussRational) -> Self {
        Mobius::new(
            a,
            GaussRational::one(),
            GaussRational::one(),
            GaussRational::zero(),
        )
        .expect("determinant is −1")
    }

    /// Matrix entries `[a, b, c, d]`.
    pub fn entries(&self) -> [&GaussRational; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_affine(&self) -> bool {
        self.c.is_zero()
    }

    /// `self ∘ inner`
    pub fn compose(&self, inner: &Mobius) -> Mobius {
        let m = |x: &GaussRational, y: &GaussRational, u: &GaussRational, v: &GaussRational| {
            x.clone() * u + y.clone() * v
        };
        Mobius {
            a: m(&self.a, &self.b, &inner.a, &inner.c),
            b: m(&self.a, &self.b, &inner.b, &inner.d),
            c: m(&self.c, &self.d, &inner.a, &inner.c),
            d: m(&self.c, &self.d, &inner.b, &inner.d),
        }
    }

    pub fn inverse(&self) -> Mobius {
        Mobius {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    /// Conjugates all four coefficients.
    pub fn conj(&self) -> Mobius {
        Mobius {
            a: self.a.conj(),
            b: self.b.conj(),
            c: self.c.conj(),
            d: self.d.conj(),
        }
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        RatFunc::new(
            CPoly::new(vec![self.b.clone(), self.a.clone()]),
            CPoly::new(vec![self.d.clone(), self.c.clone()]),
        )
        .expect("nonzero denominator")
    }

    /// `self ∘ r`
    pub fn apply(&self, r: &RatFunc) -> RatFunc {
        RatFunc::new(
            &r.num().scale(&self.a) + &r.den().scale(&self.b),
            &r.num().scale(&self.c) + &r.den().scale(&self.d),
        )
        .expect("nondegenerate map keeps the denominator nonzero")
    }

    pub fn eval(&self, p: &ProjPoint) -> ProjPoint {
        let (x, y) = homogeneous(p);
        let num = self.a.clone() * &x + self.b.clone() * &y;
        let den = self.c.clone() * &x + self.d.clone() * &y;
        dehomogenize(num, den)
    }

    /// The map sending `src[j]` to `dst[j]` for three distinct points each.
    pub fn through_points(src: [&ProjPoint; 3], dst: [&ProjPoint; 3]) -> Result<Mobius> {
        let to_standard = |pts: [&ProjPoint; 3]| -> Result<Mobius> {
            // sends p1 ↦ 0, p2 ↦ ∞, p3 ↦ 1
            let [p1, p2, p3] = pts.map(homogeneous);
            let det = |u: &(GaussRational, GaussRational), v: &(GaussRational, GaussRational)| {
                u.0.clone() * &v.1 - u.1.clone() * &v.0
            };
            let k1 = det(&p3, &p2);
            let k2 = det(&p3, &p1);
            Mobius::new(
                k1.clone() * &p1.1,
                -(k1 * &p1.0),
                k2.clone() * &p2.1,
                -(k2 * &p2.0),
            )
        };
        let m1 = to_standard(src)?;
        let m2 = to_standard(dst)?;
        Ok(m2.inverse().compose(&m1))
    }
}

fn homogeneous(p: &ProjPoint) -> (GaussRational, GaussRational) {
    match p {
        ProjPoint::Finite(x) => (x.clone(), GaussRational::one()),
        ProjPoint::Infinity => (GaussRational::one(), GaussRational::zero()),
    }
}

fn dehomogenize(num: GaussRational, den: GaussRational) -> ProjPoint {
    match den.inv() {
        Some(inv) => ProjPoint::Finite(num * inv),
        None => ProjPoint::Infinity,
    }
}

impl fmt::Display for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "z ↦ (({}) z + ({})) / (({}) z + ({}))",
            self.a, self.b, self.c, self.d
        )
    }
}

impl fmt::Debug for Mobius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mobius({self})")
    }
}
