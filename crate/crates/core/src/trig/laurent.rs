use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::RatFunc;
use crate::poly::CPoly;
use crate::scalar::{Field, GaussRational};

/// Laurent polynomial `Σ_{k=lo}^{hi} c_k z^k` over ℚ(i), trimmed at both ends.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<GaussRational>,
}

impl LaurentPoly {
    pub fn new(lo: i64, mut coeffs: Vec<GaussRational>) -> Self {
        while coeffs.last().is_some_and(Field::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        coeffs.drain(..lead);
        if coeffs.is_empty() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            lo: lo + lead as i64,
            coeffs,
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            lo: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(c: GaussRational) -> Self {
        LaurentPoly::new(0, vec![c])
    }

    /// `c · z^k`
    pub fn monomial(c: GaussRational, k: i64) -> Self {
        LaurentPoly::new(k, vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.lo == 0 && self.coeffs.len() == 1)
    }

    /// Lowest power present (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest power present (0 for the zero polynomial).
    pub fn hi(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.lo + self.coeffs.len() as i64 - 1
        }
    }

    /// Coefficients of `z^lo … z^hi`.
    pub fn coeffs(&self) -> &[GaussRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> GaussRational {
        usize::try_from(k - self.lo)
            .ok()
            .and_then(|i| self.coeffs.get(i).cloned())
            .unwrap_or_else(GaussRational::zero)
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        LaurentPoly::new(self.lo, self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `conj(L)(1/z)`: conjugate every coefficient and reflect the exponents.
    pub fn conj_reciprocal(&self) -> Self {
        LaurentPoly::new(
            -self.hi(),
            self.coeffs.iter().rev().map(GaussRational::conj).collect(),
        )
    }

    /// True for images of real trigonometric polynomials, i.e. `conj(L)(1/z) = L(z)`.
    pub fn is_real_type(&self) -> bool {
        self.conj_reciprocal() == *self
    }

    /// Splits as `num / z^shift` with `num` a polynomial not divisible by `z`
    /// (when `lo < 0`) and `shift ≥ 0`.
    pub fn to_poly_over_monomial(&self) -> (CPoly, u32) {
        if self.is_zero() {
            return (CPoly::zero(), 0);
        }
        let shift = (-self.lo).max(0);
        let mut coeffs = vec![GaussRational::zero(); (self.lo + shift) as usize];
        coeffs.extend(self.coeffs.iter().cloned());
        (CPoly::new(coeffs), shift as u32)
    }

    pub fn to_ratfunc(&self) -> RatFunc {
        let (num, shift) = self.to_poly_over_monomial();
        RatFunc::new(num, CPoly::monomial(GaussRational::one(), shift as usize))
            .expect("monomial denominator is nonzero")
    }

    /// Inverse of [`LaurentPoly::to_ratfunc`] when the reduced denominator is
    /// `c · z^k`.
    pub fn from_ratfunc(r: &RatFunc) -> Option<Self> {
        let den = r.den();
        let k = den.degree()?;
        if den.valuation() != Some(k) {
            return None;
        }
        let inv = den.coeff(k).inv()?;
        Some(LaurentPoly::new(
            -(k as i64),
            r.num().scale(&inv).into_coeffs(),
        ))
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_complex() * z.powi((self.lo + i as i64) as i32))
            .sum()
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.lo.min(rhs.lo);
        let hi = self.hi().max(rhs.hi());
        LaurentPoly::new(
            lo,
            (lo..=hi).map(|k| self.coeff(k) + rhs.coeff(k)).collect(),
        )
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut out = vec![GaussRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b;
            }
        }
        LaurentPoly::new(self.lo + rhs.lo, out)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            lo: self.lo,
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match self.lo + i as i64 {
                0 => format!("({c})"),
                1 => format!("({c})z"),
                k => format!("({c})z^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn g(re: i64, im: i64) -> GaussRational {
        GaussRational::new(int(re), int(im))
    }

    #[test]
    fn trimming_moves_lo() {
        let l = LaurentPoly::new(-2, vec![g(0, 0), g(1, 0), g(0, 0)]);
        assert_eq!((l.lo(), l.hi()), (-1, -1));
        assert!(LaurentPoly::new(3, vec![g(0, 0)]).is_zero());
    }

    #[test]
    fn conj_reciprocal_symmetry() {
        // (1+i) z⁻¹ + 2 + (1−i) z
        let l = LaurentPoly::new(-1, vec![g(1, 1), g(2, 0), g(1, -1)]);
        assert!(l.is_real_type());
        let not = LaurentPoly::new(-1, vec![g(1, 1), g(2, 0), g(1, 1)]);
        assert!(!not.is_real_type());
        assert!(!LaurentPoly::monomial(g(1, 0), 1).is_real_type());
    }

    #[test]
    fn ratfunc_round_trip() {
        let l = LaurentPoly::new(-2, vec![g(1, 0), g(0, 3), g(0, 0), g(-1, 1)]);
        let r = l.to_ratfunc();
        assert_eq!(LaurentPoly::from_ratfunc(&r), Some(l));
        let not_laurent = RatFunc::new(CPoly::one(), CPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(LaurentPoly::from_ratfunc(&not_laurent), None);
    }

    #[test]
    fn products_add_bidegrees() {
        let a = LaurentPoly::new(-1, vec![g(1, 0), g(0, 0), g(1, 0)]);
        let b = LaurentPoly::new(-2, vec![g(0, 1), g(0, 0), g(0, 0), g(0, 0), g(2, 0)]);
        let p = &a * &b;
        assert_eq!((p.lo(), p.hi()), (-3, 3));
    }
}
