use std::fmt;

use super::{gcd_uni, CPoly};
use crate::error::{Error, Result};
use crate::scalar::{Field, GaussRational};

/// Polynomial in `w` whose coefficients are polynomials in `z`.
#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<CPoly>,
}

impl BiPoly {
    pub fn new(mut coeffs: Vec<CPoly>) -> Self {
        while coeffs.last().is_some_and(CPoly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::new(vec![CPoly::one()])
    }

    /// Builds from a dense table `table[j][i]` = coefficient of `w^j z^i`.
    pub fn from_table(table: &[&[i64]]) -> Self {
        BiPoly::new(table.iter().map(|row| CPoly::from_ints(row)).collect())
    }

    /// Coefficients in `z`, indexed by the power of `w`.
    pub fn coeffs(&self) -> &[CPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> CPoly {
        self.coeffs.get(j).cloned().unwrap_or_else(CPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn deg_w(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn deg_z(&self) -> usize {
        self.coeffs.iter().map(CPoly::deg).max().unwrap_or(0)
    }

    pub fn leading_coeff_w(&self) -> Option<&CPoly> {
        self.coeffs.last()
    }

    /// Multiplies every coefficient by a polynomial in `z`.
    pub fn mul_z(&self, p: &CPoly) -> Self {
        BiPoly::new(self.coeffs.iter().map(|c| c * p).collect())
    }

    pub fn scale(&self, c: &GaussRational) -> Self {
        BiPoly::new(self.coeffs.iter().map(|p| p.scale(c)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![CPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        BiPoly::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        BiPoly::new((0..n).map(|j| &self.coeff(j) - &other.coeff(j)).collect())
    }

    /// Monic gcd in `z` of all coefficients.
    pub fn content(&self) -> CPoly {
        let mut g = CPoly::zero();
        for c in &self.coeffs {
            g = gcd_uni(&g, c).unwrap_or_else(|_| CPoly::zero());
            if g.is_constant() && !g.is_zero() {
                break;
            }
        }
        g
    }

    /// Divides out the content in `z`.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let content = self.content();
        if content.is_constant() {
            return self.clone();
        }
        BiPoly::new(
            self.coeffs
                .iter()
                .map(|c| {
                    c.div_exact(&content)
                        .expect("content divides every coefficient")
                })
                .collect(),
        )
    }

    /// Primitive in `z`, scaled so the leading `w`-coefficient is monic in `z`.
    pub fn normalized(&self) -> Self {
        let pp = self.primitive_part();
        match pp.leading_coeff_w().and_then(|c| c.leading_coeff()) {
            Some(lc) => pp.scale(&lc.inv().expect("nonzero")),
            None => pp,
        }
    }

    /// Pseudo-remainder with respect to `w`: `lc(divisor)^k · self` reduced
    /// below the `w`-degree of `divisor`.
    pub fn pseudo_rem(&self, divisor: &Self) -> Result<Self> {
        let lc = divisor.leading_coeff_w().ok_or(Error::DivisionByZero)?;
        let d = divisor.deg_w();
        let mut rem = self.clone();
        while !rem.is_zero() && rem.deg_w() >= d {
            let shift = rem.deg_w() - d;
            let top = rem.leading_coeff_w().expect("nonzero").clone();
            let mut next: Vec<CPoly> = rem.coeffs.iter().map(|c| c * lc).collect();
            for (j, c) in divisor.coeffs.iter().enumerate() {
                next[j + shift] = &next[j + shift] - &(&top * c);
            }
            rem = BiPoly::new(next);
        }
        Ok(rem)
    }

    /// True when `self` divides `other` in ℚ(i)(z)[w].
    pub fn divides_in_w(&self, other: &Self) -> bool {
        other.pseudo_rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Specializes `z` to a value, leaving a polynomial in `w`.
    pub fn eval_z(&self, z: &GaussRational) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|c| c.eval(z)).collect())
    }
}

/// Greatest common divisor in ℚ(i)(z)[w] by the primitive remainder sequence
/// over ℚ(i)[z].
///
/// The result is primitive in `z` with a leading `w`-coefficient that is
/// monic as a polynomial in `z`. Coprime inputs give the constant `1`.
pub fn gcd_bi_in_w(p: &BiPoly, q: &BiPoly) -> Result<BiPoly> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (mut a, mut b) = (p.primitive_part(), q.primitive_part());
    if a.deg_w() < b.deg_w() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.deg_w() == 0 {
            return Ok(BiPoly::one());
        }
        let r = a.pseudo_rem(&b)?;
        if r.is_zero() {
            return Ok(b.normalized());
        }
        a = b;
        b = r.primitive_part();
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for c in &self.coeffs {
            list.entry(&format_args!("{c}"));
        }
        list.finish()
    }
}
