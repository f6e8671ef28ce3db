use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{gcd_uni, CPoly};
use crate::scalar::{Field, GaussRational};

/// A point of the projective line over ℚ(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ProjPoint {
    Finite(GaussRational),
    Infinity,
}

impl ProjPoint {
    pub fn is_infinite(&self) -> bool {
        matches!(self, ProjPoint::Infinity)
    }
}

impl From<GaussRational> for ProjPoint {
    fn from(x: GaussRational) -> Self {
        ProjPoint::Finite(x)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjPoint::Finite(x) => write!(f, "{x}"),
            ProjPoint::Infinity => write!(f, "∞"),
        }
    }
}

/// Reduced rational function `num / den` over ℚ(i) with monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: CPoly,
    den: CPoly,
}

impl RatFunc {
    pub fn new(num: CPoly, den: CPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::constant(GaussRational::zero()));
        }
        let g = gcd_uni(&num, &den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g)?, den.div_exact(&g)?)
        };
        let lc_inv = den.leading_coeff().and_then(Field::inv).expect("nonzero");
        Ok(RatFunc {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        })
    }

    pub fn from_poly(p: CPoly) -> Self {
        RatFunc {
            num: p,
            den: CPoly::one(),
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        RatFunc::from_poly(CPoly::constant(c))
    }

    /// The identity function `z`.
    pub fn identity() -> Self {
        RatFunc::from_poly(CPoly::x())
    }

    pub fn num(&self) -> &CPoly {
        &self.num
    }

    pub fn den(&self) -> &CPoly {
        &self.den
    }

    /// `max(deg num, deg den)`, the number of preimages of a generic point.
    pub fn degree(&self) -> usize {
        self.num.deg().max(self.den.deg())
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    pub fn add(&self, other: &Self) -> Self {
        RatFunc::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
        .expect("nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-GaussRational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatFunc::new(&self.num * &other.num, &self.den * &other.den).expect("nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        RatFunc::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        RatFunc::new(self.num.scale(c), self.den.clone()).expect("nonzero denominator")
    }

    /// `self ∘ inner`: with `self = P/Q` of degree `d` and `inner = N/D`,
    /// `Σ pₖ Nᵏ D^{d−k} / Σ qₖ Nᵏ D^{d−k}`.
    pub fn compose(&self, inner: &RatFunc) -> RatFunc {
        let d = self.degree();
        let (num, den) = homogenize(&self.num, &self.den, d, inner);
        RatFunc::new(num, den)
            .expect("composition with a nonconstant or constant inner map has nonzero denominator")
    }

    /// Value at a projective point, read off exactly from coefficients.
    pub fn eval(&self, at: &ProjPoint) -> ProjPoint {
        match at {
            ProjPoint::Finite(x) => {
                let d = self.den.eval(x);
                if d.is_zero() {
                    ProjPoint::Infinity
                } else {
                    ProjPoint::Finite(self.num.eval(x) * d.inv().expect("nonzero"))
                }
            }
            ProjPoint::Infinity => {
                let (n, d) = (self.num.deg(), self.den.deg());
                if self.num.is_zero() || n < d {
                    ProjPoint::Finite(GaussRational::zero())
                } else if n > d {
                    ProjPoint::Infinity
                } else {
                    let ratio = self.num.coeff(n) * self.den.coeff(d).inv().expect("nonzero");
                    ProjPoint::Finite(ratio)
                }
            }
        }
    }

    /// `conj(R)(1/z)`.
    pub fn conj_reciprocal(&self) -> RatFunc {
        // R(1/z) = z^d N(1/z) / z^d D(1/z) with reversed coefficient lists
        let d = self.degree();
        let rev = |p: &CPoly| {
            let mut c: Vec<_> = p.coeffs().iter().map(GaussRational::conj).collect();
            c.resize(d + 1, GaussRational::zero());
            c.reverse();
            CPoly::new(c)
        };
        RatFunc::new(rev(&self.num), rev(&self.den)).expect("nonzero denominator")
    }
}

/// Numerator and denominator of `(P/Q) ∘ inner` before reduction, with `d ≥ deg P, deg Q`.
pub(crate) fn homogenize(p: &CPoly, q: &CPoly, d: usize, inner: &RatFunc) -> (CPoly, CPoly) {
    let npow = powers(inner.num(), d);
    let dpow = powers(inner.den(), d);
    let combine = |poly: &CPoly| {
        poly.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .fold(CPoly::zero(), |acc, (k, c)| {
                &acc + &(&npow[k] * &dpow[d - k]).scale(c)
            })
    };
    (combine(p), combine(q))
}

pub(crate) fn powers(p: &CPoly, d: usize) -> Vec<CPoly> {
    let mut out = Vec::with_capacity(d + 1);
    out.push(CPoly::one());
    for k in 1..=d {
        out.push(&out[k - 1] * p);
    }
    out
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}
