//! Real trigonometric polynomials `a₀ + Σ aₖ cos kθ + bₖ sin kθ` with rational
//! coefficients, and their images as Laurent polynomials (`z = e^{iθ}`) and as
//! rational functions of the half-angle tangent.

mod laurent;
mod ratfunc;

pub use laurent::LaurentPoly;
pub(crate) use ratfunc::powers as powers_of;
pub use ratfunc::{ProjPoint, RatFunc};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{CPoly, QPoly};
use crate::scalar::{int, rat, rational_to_f64, GaussRational, Rational};

/// Trigonometric polynomial stored densely: `cos[k]` and `sin[k]` are the
/// coefficients of `cos kθ` and `sin kθ`; `cos[0]` is the constant term and
/// `sin[0]` is always zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TrigPoly {
    cos: Vec<Rational>,
    sin: Vec<Rational>,
}

impl TrigPoly {
    fn from_dense(mut cos: Vec<Rational>, mut sin: Vec<Rational>) -> Self {
        let n = cos.len().max(sin.len()).max(1);
        cos.resize(n, Rational::zero());
        sin.resize(n, Rational::zero());
        sin[0] = Rational::zero();
        while cos.len() > 1
            && cos.last().is_some_and(Zero::is_zero)
            && sin.last().is_some_and(Zero::is_zero)
        {
            cos.pop();
            sin.pop();
        }
        TrigPoly { cos, sin }
    }

    /// Builds `a0 + Σ a cos kθ + b sin kθ` from `(k, a, b)` triples.
    ///
    /// Frequencies must be positive and strictly increasing.
    pub fn new(
        a0: Rational,
        terms: impl IntoIterator<Item = (usize, Rational, Rational)>,
    ) -> Result<Self> {
        let mut cos = vec![a0];
        let mut sin = vec![Rational::zero()];
        for (k, a, b) in terms {
            if k < cos.len() {
                return Err(Error::Parse(format!(
                    "term frequencies must be positive and strictly increasing (got k = {k})"
                )));
            }
            cos.resize(k + 1, Rational::zero());
            sin.resize(k + 1, Rational::zero());
            cos[k] = a;
            sin[k] = b;
        }
        Ok(TrigPoly::from_dense(cos, sin))
    }

    pub fn zero() -> Self {
        TrigPoly::constant(Rational::zero())
    }

    pub fn constant(c: Rational) -> Self {
        TrigPoly {
            cos: vec![c],
            sin: vec![Rational::zero()],
        }
    }

    /// `c · cos kθ`
    pub fn cos_term(k: usize, c: Rational) -> Self {
        let mut cos = vec![Rational::zero(); k + 1];
        cos[k] = c;
        TrigPoly::from_dense(cos, Vec::new())
    }

    /// `c · sin kθ`
    pub fn sin_term(k: usize, c: Rational) -> Self {
        let mut sin = vec![Rational::zero(); k + 1];
        sin[k] = c;
        TrigPoly::from_dense(Vec::new(), sin)
    }

    /// `cos kθ`
    pub fn cos(k: usize) -> Self {
        TrigPoly::cos_term(k, int(1))
    }

    /// `sin kθ`
    pub fn sin(k: usize) -> Self {
        TrigPoly::sin_term(k, int(1))
    }

    pub fn degree(&self) -> usize {
        self.cos.len() - 1
    }

    pub fn is_constant(&self) -> bool {
        self.degree() == 0
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.cos[0].is_zero()
    }

    /// Constant term (the mean over a period).
    pub fn a0(&self) -> &Rational {
        &self.cos[0]
    }

    /// Coefficient of `cos kθ` (`a0` for `k = 0`).
    pub fn cos_coeff(&self, k: usize) -> Rational {
        self.cos.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn sin_coeff(&self, k: usize) -> Rational {
        self.sin.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero `(k, aₖ, bₖ)` terms for `k ≥ 1`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Rational, &Rational)> {
        self.cos
            .iter()
            .zip(&self.sin)
            .enumerate()
            .skip(1)
            .filter(|(_, (a, b))| !a.is_zero() || !b.is_zero())
            .map(|(k, (a, b))| (k, a, b))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TrigPoly::from_dense(
            self.cos.iter().map(|a| a * c).collect(),
            self.sin.iter().map(|b| b * c).collect(),
        )
    }

    pub fn derivative(&self) -> Self {
        // (a cos kθ + b sin kθ)' = k b cos kθ − k a sin kθ
        let cos = (0..self.cos.len())
            .map(|k| &self.sin[k] * int(k as i64))
            .collect();
        let sin = (0..self.cos.len())
            .map(|k| -(&self.cos[k] * int(k as i64)))
            .collect();
        TrigPoly::from_dense(cos, sin)
    }

    /// `θ ↦ ∫₀^θ f(s) ds`, defined only when the mean of `f` vanishes.
    pub fn antiderivative(&self) -> Result<Self> {
        if !self.a0().is_zero() {
            return Err(Error::NotPeriodic);
        }
        let n = self.cos.len();
        let mut cos = vec![Rational::zero(); n];
        let mut sin = vec![Rational::zero(); n];
        for k in 1..n {
            let kk = int(k as i64);
            // ∫₀^θ a cos ks = (a/k) sin kθ ; ∫₀^θ b sin ks = (b/k)(1 − cos kθ)
            sin[k] = &self.cos[k] / &kk;
            cos[k] = -(&self.sin[k] / &kk);
            cos[0] += &self.sin[k] / &kk;
        }
        Ok(TrigPoly::from_dense(cos, sin))
    }

    /// `A ∘ self` for a real polynomial `A`.
    pub fn compose_into(&self, outer: &QPoly) -> Self {
        outer
            .coeffs()
            .iter()
            .rev()
            .fold(TrigPoly::zero(), |acc, c| {
                &(&acc * self) + &TrigPoly::constant(c.clone())
            })
    }

    /// Floating-point evaluation at `theta`.
    pub fn eval(&self, theta: f64) -> f64 {
        let mut sum = rational_to_f64(self.a0());
        for (k, a, b) in self.terms() {
            let (s, c) = (k as f64 * theta).sin_cos();
            sum += rational_to_f64(a) * c + rational_to_f64(b) * s;
        }
        sum
    }

    /// Image under `cos θ ↦ (z + 1/z)/2`, `sin θ ↦ (z − 1/z)/(2i)`.
    ///
    /// `aₖ cos kθ + bₖ sin kθ` maps to `(aₖ − i bₖ)/2 · zᵏ + (aₖ + i bₖ)/2 · z⁻ᵏ`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let n = self.degree();
        let half = rat(1, 2);
        let mut coeffs = vec![GaussRational::real(Rational::zero()); 2 * n + 1];
        coeffs[n] = GaussRational::real(self.a0().clone());
        for k in 1..=n {
            let a = &self.cos[k] * &half;
            let b = &self.sin[k] * &half;
            coeffs[n + k] = GaussRational::new(a.clone(), -b.clone());
            coeffs[n - k] = GaussRational::new(a, b);
        }
        LaurentPoly::new(-(n as i64), coeffs)
    }

    /// Inverse of [`TrigPoly::to_laurent`]; fails unless `l` is conjugate-reciprocal.
    pub fn from_laurent(l: &LaurentPoly) -> Result<Self> {
        if !l.is_real_type() {
            return Err(Error::NotRealType);
        }
        let n = l.hi().max(0) as usize;
        let mut cos = vec![Rational::zero(); n + 1];
        let mut sin = vec![Rational::zero(); n + 1];
        cos[0] = l.coeff(0).re;
        for k in 1..=n {
            let c = l.coeff(k as i64);
            cos[k] = &c.re * int(2);
            sin[k] = -(&c.im * int(2));
        }
        Ok(TrigPoly::from_dense(cos, sin))
    }

    /// Image under the half-angle substitution `x = tan(θ/2)`, i.e.
    /// `cos θ ↦ (1 − x²)/(1 + x²)` and `sin θ ↦ 2x/(1 + x²)`.
    pub fn to_half_angle(&self) -> RatFunc {
        let n = self.degree();
        let one_plus_x2 = QPoly::from_ints(&[1, 0, 1]);
        let cos1 = QPoly::from_ints(&[1, 0, -1]);
        let sin1 = QPoly::from_ints(&[0, 2]);
        // cos kθ = ck / (1+x²)^k, sin kθ = sk / (1+x²)^k
        let mut ck = QPoly::one();
        let mut sk = QPoly::zero();
        let mut num = QPoly::constant(self.a0().clone()) * one_plus_x2.pow(n as u32);
        for k in 1..=n {
            let next_c = &(&ck * &cos1) - &(&sk * &sin1);
            let next_s = &(&sk * &cos1) + &(&ck * &sin1);
            ck = next_c;
            sk = next_s;
            let term = &ck.scale(&self.cos[k]) + &sk.scale(&self.sin[k]);
            num = &num + &(&term * &one_plus_x2.pow((n - k) as u32));
        }
        RatFunc::new(
            CPoly::from_real(&num),
            CPoly::from_real(&one_plus_x2.pow(n as u32)),
        )
        .expect("nonzero denominator")
    }
}

impl<'a> Add<&'a TrigPoly> for &'a TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: &'a TrigPoly) -> TrigPoly {
        let n = self.cos.len().max(rhs.cos.len());
        TrigPoly::from_dense(
            (0..n)
                .map(|k| self.cos_coeff(k) + rhs.cos_coeff(k))
                .collect(),
            (0..n)
                .map(|k| self.sin_coeff(k) + rhs.sin_coeff(k))
                .collect(),
        )
    }
}

impl<'a> Sub<&'a TrigPoly> for &'a TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: &'a TrigPoly) -> TrigPoly {
        self + &(-rhs.clone())
    }
}

/// Product-to-sum: with `cos 0 = 1`, `sin 0 = 0`,
/// `cos j cos k = ½[cos(j−k) + cos(j+k)]`, `sin j sin k = ½[cos(j−k) − cos(j+k)]`,
/// `cos j sin k = ½[sin(j+k) − sin(j−k)]`, `sin j cos k = ½[sin(j+k) + sin(j−k)]`.
impl<'a> Mul<&'a TrigPoly> for &'a TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: &'a TrigPoly) -> TrigPoly {
        let n = self.degree() + rhs.degree() + 1;
        let mut cos = vec![Rational::zero(); n];
        let mut sin = vec![Rational::zero(); n];
        let half = rat(1, 2);
        for j in 0..self.cos.len() {
            let (aj, bj) = (&self.cos[j], &self.sin[j]);
            if aj.is_zero() && bj.is_zero() {
                continue;
            }
            for k in 0..rhs.cos.len() {
                let (ak, bk) = (&rhs.cos[k], &rhs.sin[k]);
                if ak.is_zero() && bk.is_zero() {
                    continue;
                }
                let sum = j + k;
                let diff = j.abs_diff(k);
                // sin(j−k) = sign · sin|j−k|
                let sign = if j >= k { int(1) } else { int(-1) };
                let cc = aj * ak * &half;
                let ss = bj * bk * &half;
                let cs = aj * bk * &half;
                let sc = bj * ak * &half;
                cos[diff] += &cc + &ss;
                cos[sum] += &cc - &ss;
                sin[sum] += &cs + &sc;
                sin[diff] += (&sc - &cs) * &sign;
            }
        }
        TrigPoly::from_dense(cos, sin)
    }
}

impl Add for TrigPoly {
    type Output = TrigPoly;
    fn add(self, rhs: TrigPoly) -> TrigPoly {
        &self + &rhs
    }
}

impl Sub for TrigPoly {
    type Output = TrigPoly;
    fn sub(self, rhs: TrigPoly) -> TrigPoly {
        &self - &rhs
    }
}

impl Mul for TrigPoly {
    type Output = TrigPoly;
    fn mul(self, rhs: TrigPoly) -> TrigPoly {
        &self * &rhs
    }
}

impl Neg for TrigPoly {
    type Output = TrigPoly;
    fn neg(self) -> TrigPoly {
        self.scale(&int(-1))
    }
}

impl fmt::Display for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.a0().is_zero() || self.is_constant() {
            parts.push(self.a0().to_string());
        }
        for (k, a, b) in self.terms() {
            let angle = if k == 1 {
                "θ".to_string()
            } else {
                format!("{k}θ")
            };
            if !a.is_zero() {
                parts.push(format!("{a}·cos {angle}"));
            }
            if !b.is_zero() {
                parts.push(format!("{b}·sin {angle}"));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for TrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TrigPoly({self})")
    }
}
