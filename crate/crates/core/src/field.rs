//! Generators of the field `ℝ(l, m)` and the composition-condition decision.
//!
//! The pipeline is:
//!
//! 1. map `l`, `m` to conjugate-reciprocal Laurent polynomials `L`, `M`;
//! 2. compute a generator `B` of `ℂ(L, M)` from the `w`-gcd of the numerators
//!    of `L(z) − L(w)` and `M(z) − M(w)` (its monic coefficients lie in the
//!    field and any nonconstant one generates it);
//! 3. look at the values of `B` at `0` and `∞`. If they agree, a Möbius change
//!    of variable turns `B` into a Laurent polynomial, which is then rotated
//!    into a conjugate-reciprocal one and mapped back to a trigonometric
//!    polynomial `w`. If they differ, `B` is a Möbius image of
//!    `tan(nθ/2)`'s Laurent form and no trigonometric-polynomial generator exists;
//! 4. in the first case `l = l̃(w)` and `m = m̃(w)` with real polynomials `l̃`, `m̃`,
//!    recovered by exact linear algebra.

use crate::error::{Error, Result};
use crate::mobius::Mobius;
use crate::poly::{gcd_bi_in_w, nullspace, solve_linear, BiPoly, CPoly, QPoly};
use crate::scalar::{Field, GaussRational};
use crate::trig::{LaurentPoly, ProjPoint, RatFunc, TrigPoly};

/// A Lüroth generator of `ℂ(L, M)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FieldGenerator {
    pub generator: RatFunc,
    pub degree: usize,
}

/// The two shapes a field containing a nonconstant trigonometric polynomial can take.
#[derive(Clone, Debug, PartialEq)]
pub enum Classification {
    /// `μ⁻¹ ∘ B = (1/i)(zⁿ − 1)/(zⁿ + 1)`, the Laurent form of `tan(nθ/2)`.
    TanField { n: usize, mu: Mobius },
    /// `μ⁻¹ ∘ B = W` with `W` a nonconstant conjugate-reciprocal Laurent polynomial.
    LaurentField { w: LaurentPoly, mu: Mobius },
}

/// Outcome of the composition-condition decision.
#[derive(Clone, Debug, PartialEq)]
pub enum CCVerdict {
    /// `l = l_tilde(w)` and `m = m_tilde(w)` exactly.
    Holds {
        w: TrigPoly,
        l_tilde: QPoly,
        m_tilde: QPoly,
    },
    /// `ℝ(l, m) = ℝ(tan(nθ/2))`; not even continuous `w` exists.
    Fails { n: usize },
    /// A coefficient of the Abel equation has nonzero mean.
    NotPeriodic,
}

impl CCVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, CCVerdict::Holds { .. })
    }
}

/// Everything computed on the way to a verdict, for inspection and tests.
#[derive(Clone, Debug)]
pub struct Analysis {
    /// `None` when a constant input short-circuits the field computation.
    pub generator: Option<FieldGenerator>,
    pub classification: Option<Classification>,
    pub verdict: CCVerdict,
}

/// Laurent form of `tan(nθ/2)`: `(1/i)(zⁿ − 1)/(zⁿ + 1)`.
pub fn tan_image(n: usize) -> RatFunc {
    let minus_i = -GaussRational::i();
    let mut num = vec![GaussRational::zero(); n + 1];
    num[0] = -minus_i.clone();
    num[n] = minus_i;
    let mut den = vec![GaussRational::zero(); n + 1];
    den[0] = GaussRational::one();
    den[n] = GaussRational::one();
    RatFunc::new(CPoly::new(num), CPoly::new(den)).expect("nonzero denominator")
}

/// Numerator of `L(z) − L(w)` after clearing `z^s w^s`, as a polynomial in `w`.
fn difference_numerator(l: &LaurentPoly) -> BiPoly {
    let (num, s) = l.to_poly_over_monomial();
    let s = s as usize;
    // z^s w^s (L(z) − L(w)) = w^s num(z) − z^s num(w)
    let z_s = CPoly::monomial(GaussRational::one(), s);
    let len = num.coeffs().len().max(s + 1);
    let coeffs = (0..len)
        .map(|j| {
            let mut c = z_s.scale(&-num.coeff(j));
            if j == s {
                c = &c + &num;
            }
            c
        })
        .collect();
    BiPoly::new(coeffs)
}

/// A generator of `ℂ(L, M)` for Laurent polynomials not both constant.
pub fn common_generator(l: &LaurentPoly, m: &LaurentPoly) -> Result<FieldGenerator> {
    let parts: Vec<&LaurentPoly> = [l, m].into_iter().filter(|p| !p.is_constant()).collect();
    if parts.is_empty() {
        return Err(Error::DegenerateInput);
    }
    let contains_all = |b: &RatFunc| -> Result<bool> {
        for p in &parts {
            if decompose_through(p, b)?.is_none() {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let generator = match interpolated_generator(&parts)? {
        Some(b) if contains_all(&b)? => b,
        _ => {
            let b = gcd_generator(&parts)?;
            if !contains_all(&b)? {
                return Err(Error::internal(format!("inputs do not factor through {b}")));
            }
            b
        }
    };
    let degree = generator.degree();
    Ok(FieldGenerator { generator, degree })
}

/// Generator from the exact `w`-gcd of the difference numerators.
fn gcd_generator(parts: &[&LaurentPoly]) -> Result<RatFunc> {
    let mut d = difference_numerator(parts[0]);
    for p in &parts[1..] {
        d = gcd_bi_in_w(&d, &difference_numerator(p))?;
    }
    let d = d.normalized();
    if d.deg_w() == 0 {
        return Err(Error::internal("w − z does not divide the fibre gcd"));
    }
    let lc = d.leading_coeff_w().expect("nonzero").clone();
    let generator = d
        .coeffs()
        .iter()
        .map(|c| RatFunc::new(c.clone(), lc.clone()).expect("nonzero leading coefficient"))
        .find(|r| !r.is_constant())
        .unwrap_or_else(RatFunc::identity);
    if generator.degree() != d.deg_w() {
        return Err(Error::internal(format!(
            "generator degree {} differs from fibre degree {}",
            generator.degree(),
            d.deg_w()
        )));
    }
    Ok(generator)
}

/// `z0^s w^s (L(z0) − L(w))` as a polynomial in `w`.
fn specialized_difference(l: &LaurentPoly, z0: &GaussRational) -> CPoly {
    let (num, s) = l.to_poly_over_monomial();
    let z_s = z0.pow(s);
    let mut coeffs: Vec<GaussRational> = num.coeffs().iter().map(|c| -(c.clone() * &z_s)).collect();
    if coeffs.len() <= s as usize {
        coeffs.resize(s as usize + 1, GaussRational::zero());
    }
    coeffs[s as usize] = coeffs[s as usize].clone() + &num.eval(z0);
    CPoly::new(coeffs)
}

/// Sample points `1, −1, 2, −2, …`; never `0`, where the numerators degenerate.
fn sample_point(k: usize) -> GaussRational {
    let v = (k / 2 + 1) as i64;
    GaussRational::from_int(if k.is_multiple_of(2) { v } else { -v })
}

/// Same generator as [`gcd_generator`], rebuilt from gcds at sample points.
///
/// The monic `w`-gcd `D̃(z, w)` has coefficients that are Möbius images of
/// `B`, so each has degree `n = deg_w D̃` in `z` and is fixed by its values at
/// `2n + 1` points. Points where the specialized gcd has the wrong degree are
/// finitely many and get outvoted. Returns `None` if the vote or the
/// reconstruction is inconclusive; the caller then falls back to the exact gcd.
fn interpolated_generator(parts: &[&LaurentPoly]) -> Result<Option<RatFunc>> {
    let max_points = 8 * parts.iter().map(|p| p.hi() - p.lo()).max().unwrap_or(0) as usize + 16;
    let mut samples: Vec<(GaussRational, CPoly)> = Vec::new();
    let mut n = 0;
    for k in 0..max_points {
        let z0 = sample_point(k);
        let mut g = specialized_difference(parts[0], &z0);
        for p in &parts[1..] {
            g = crate::poly::gcd_uni(&g, &specialized_difference(p, &z0))?;
        }
        samples.push((z0, g.monic()));
        let mut counts = std::collections::BTreeMap::new();
        for (_, g) in &samples {
            *counts.entry(g.deg()).or_insert(0usize) += 1;
        }
        let (&mode, &hits) = counts.iter().max_by_key(|(_, &c)| c).expect("nonempty");
        if mode > 0 && hits >= 2 * mode + 3 && 2 * hits > samples.len() + 2 {
            n = mode;
            break;
        }
    }
    if n == 0 {
        return Ok(None);
    }
    let good: Vec<&(GaussRational, CPoly)> = samples.iter().filter(|(_, g)| g.deg() == n).collect();
    let Some(j) = (0..n).find(|&j| good.iter().any(|(_, g)| g.coeff(j) != good[0].1.coeff(j)))
    else {
        return Ok(None);
    };
    // p(z_k) − c_k q(z_k) = 0 with deg p, deg q ≤ n
    let matrix: Vec<Vec<GaussRational>> = good
        .iter()
        .map(|(z0, g)| {
            let c = g.coeff(j);
            let pows: Vec<GaussRational> = (0..=n as u32).map(|e| z0.pow(e)).collect();
            pows.iter()
                .cloned()
                .chain(pows.iter().map(|zp| -(zp.clone() * &c)))
                .collect()
        })
        .collect();
    let kernel = nullspace(&matrix, 2 * (n + 1))?;
    if kernel.len() != 1 {
        return Ok(None);
    }
    let v = &kernel[0];
    let q = CPoly::new(v[n + 1..].to_vec());
    if q.is_zero() {
        return Ok(None);
    }
    let b = RatFunc::new(CPoly::new(v[..=n].to_vec()), q)?;
    Ok((b.degree() == n).then_some(b))
}

/// Finds `A` with `A ∘ B = L`, or `None` when `L ∉ ℂ(B)`.
///
/// With `A = P/Q` of degree `d = deg L / deg B` and `L = N_L / z^s`, the
/// coefficients of `P` and `Q` span the kernel of the linear map
/// `(P, Q) ↦ N_L · Q̂ − z^s · P̂`, where `P̂ = Σ pₖ Nᵏ D^{d−k}` for `B = N/D`.
pub fn decompose_through(l: &LaurentPoly, b: &RatFunc) -> Result<Option<RatFunc>> {
    if b.is_constant() {
        return Err(Error::DegenerateInput);
    }
    let target = l.to_ratfunc();
    let (deg_l, deg_b) = (target.degree(), b.degree());
    if deg_l % deg_b != 0 {
        return Ok(None);
    }
    let d = deg_l / deg_b;
    let (ln, s) = l.to_poly_over_monomial();
    let z_s = CPoly::monomial(GaussRational::one(), s as usize);

    let npow = crate::trig::powers_of(b.num(), d);
    let dpow = crate::trig::powers_of(b.den(), d);
    let basis: Vec<CPoly> = (0..=d).map(|k| &npow[k] * &dpow[d - k]).collect();
    // unknowns: p_0..p_d, then q_0..q_d
    let columns: Vec<CPoly> = basis
        .iter()
        .map(|e| -(e * &z_s))
        .chain(basis.iter().map(|e| e * &ln))
        .collect();
    let rows = columns.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    let matrix: Vec<Vec<GaussRational>> = (0..rows)
        .map(|i| columns.iter().map(|c| c.coeff(i)).collect())
        .collect();
    let kernel = nullspace(&matrix, 2 * (d + 1))?;
    let Some(v) = kernel.into_iter().next() else {
        return Ok(None);
    };
    let p = CPoly::new(v[..=d].to_vec());
    let q = CPoly::new(v[d + 1..].to_vec());
    if q.is_zero() {
        return Err(Error::internal("kernel vector with zero denominator"));
    }
    let a = RatFunc::new(p, q)?;
    if a.compose(b) != target {
        return Err(Error::internal("decomposition does not recompose"));
    }
    Ok(Some(a))
}

/// Splits a field generator into the tangent case or the Laurent case.
pub fn classify(gen: &FieldGenerator) -> Result<Classification> {
    let b = &gen.generator;
    if b.is_constant() {
        return Err(Error::DegenerateInput);
    }
    let at_zero = b.eval(&ProjPoint::Finite(GaussRational::zero()));
    let at_inf = b.eval(&ProjPoint::Infinity);
    if at_zero == at_inf {
        laurent_case(b, at_zero)
    } else {
        tan_case(b, gen.degree, at_zero, at_inf)
    }
}

fn laurent_case(b: &RatFunc, a: ProjPoint) -> Result<Classification> {
    let mu = match a {
        ProjPoint::Infinity => Mobius::identity(),
        ProjPoint::Finite(a) => Mobius::shifted_reciprocal(a),
    };
    let w0 = LaurentPoly::from_ratfunc(&mu.inverse().apply(b))
        .ok_or_else(|| Error::internal("μ⁻¹ ∘ B is not a Laurent polynomial"))?;
    let nu = realness_normalization(&w0)?;
    let w1 = apply_affine(&nu, &w0);
    if !w1.is_real_type() {
        return Err(Error::internal(
            "normalized generator is not conjugate-reciprocal",
        ));
    }
    let rho = canonical_scaling(&w1)?;
    let w = apply_affine(&rho, &w1);
    // W = ρ ∘ ν ∘ μ⁻¹ ∘ B, so the reported μ is μ ∘ ν⁻¹ ∘ ρ⁻¹
    let mu = mu.compose(&nu.inverse()).compose(&rho.inverse());
    if mu.inverse().apply(b) != w.to_ratfunc() || w.is_constant() {
        return Err(Error::internal("Laurent classification does not re-verify"));
    }
    Ok(Classification::LaurentField { w, mu })
}

/// Affine `ν` with `ν ∘ W₀` conjugate-reciprocal.
///
/// `W₀* = conj(W₀)(1/z)` generates the same field, so `W₀* = α ∘ W₀` for an
/// affine `α(y) = p y + q` with `|p| = 1` and `p̄ q + q̄ = 0`. Then
/// `ν(y) = s y + t` with `s = c + c̄ p` and `t = s̄ q / 2` satisfies `ν̄ ∘ α = ν`.
fn realness_normalization(w0: &LaurentPoly) -> Result<Mobius> {
    let star = w0.conj_reciprocal();
    let lo = w0.lo().min(star.lo());
    let hi = w0.hi().max(star.hi());
    let (matrix, rhs): (Vec<_>, Vec<_>) = (lo..=hi)
        .map(|k| {
            let unit = if k == 0 {
                GaussRational::one()
            } else {
                GaussRational::zero()
            };
            (vec![w0.coeff(k), unit], star.coeff(k))
        })
        .unzip();
    let sol = solve_linear(&matrix, &rhs)?
        .ok_or_else(|| Error::internal("conjugate-reciprocal transform is not affine in W₀"))?;
    let (p, q) = (sol[0].clone(), sol[1].clone());
    let mut s = GaussRational::one() + &p;
    if s.is_zero() {
        let i = GaussRational::i();
        s = i.clone() + i.conj() * &p;
    }
    let t = s.conj() * &q * GaussRational::real(crate::scalar::rat(1, 2));
    Mobius::affine(s, t)
}

/// Real affine map making the trigonometric form mean-free with leading
/// cosine coefficient 1 (leading sine coefficient 1 if the cosine one vanishes).
fn canonical_scaling(w: &LaurentPoly) -> Result<Mobius> {
    let trig = TrigPoly::from_laurent(w)?;
    let n = trig.degree();
    let lead = if Field::is_zero(&trig.cos_coeff(n)) {
        trig.sin_coeff(n)
    } else {
        trig.cos_coeff(n)
    };
    let inv = lead.recip();
    Mobius::affine(
        GaussRational::real(inv.clone()),
        GaussRational::real(-(trig.a0() * inv)),
    )
}

fn apply_affine(m: &Mobius, w: &LaurentPoly) -> LaurentPoly {
    let [a, b, _, d] = m.entries();
    let inv_d = d.inv().expect("affine map has nonzero d");
    &w.scale(&(a.clone() * &inv_d)) + &LaurentPoly::constant(b.clone() * &inv_d)
}

fn tan_case(
    b: &RatFunc,
    n: usize,
    at_zero: ProjPoint,
    at_inf: ProjPoint,
) -> Result<Classification> {
    let t = tan_image(n);
    let origin = ProjPoint::Finite(GaussRational::zero());
    let sample = ProjPoint::Finite(GaussRational::from_int(2));
    let src = [
        t.eval(&origin),
        t.eval(&ProjPoint::Infinity),
        t.eval(&sample),
    ];
    let dst = [at_zero, at_inf, b.eval(&sample)];
    let mu = Mobius::through_points([&src[0], &src[1], &src[2]], [&dst[0], &dst[1], &dst[2]])?;
    if mu.inverse().apply(b) != t {
        return Err(Error::internal(format!("μ₁⁻¹ ∘ B ≠ tan image for n = {n}")));
    }
    Ok(Classification::TanField { n, mu })
}

/// Decides whether `l = l̃(w)`, `m = m̃(w)` for a trigonometric polynomial `w`
/// and real polynomials `l̃`, `m̃`.
pub fn decide_cc(l: &TrigPoly, m: &TrigPoly) -> Result<CCVerdict> {
    analyze(l, m).map(|a| a.verdict)
}

/// Like [`decide_cc`] but returns the intermediate generator and classification.
pub fn analyze(l: &TrigPoly, m: &TrigPoly) -> Result<Analysis> {
    let constant_only = |verdict| Analysis {
        generator: None,
        classification: None,
        verdict,
    };
    match (l.is_constant(), m.is_constant()) {
        (true, true) => {
            return Ok(constant_only(CCVerdict::Holds {
                w: TrigPoly::cos(1),
                l_tilde: QPoly::constant(l.a0().clone()),
                m_tilde: QPoly::constant(m.a0().clone()),
            }))
        }
        (true, false) => {
            return Ok(constant_only(CCVerdict::Holds {
                w: m.clone(),
                l_tilde: QPoly::constant(l.a0().clone()),
                m_tilde: QPoly::x(),
            }))
        }
        (false, true) => {
            return Ok(constant_only(CCVerdict::Holds {
                w: l.clone(),
                l_tilde: QPoly::x(),
                m_tilde: QPoly::constant(m.a0().clone()),
            }))
        }
        (false, false) => {}
    }

    let (lz, mz) = (l.to_laurent(), m.to_laurent());
    let generator = common_generator(&lz, &mz)?;
    let classification = classify(&generator)?;
    let verdict = match &classification {
        Classification::TanField { n, .. } => CCVerdict::Fails { n: *n },
        Classification::LaurentField { w: big_w, .. } => {
            let w = TrigPoly::from_laurent(big_w)?;
            let l_tilde = outer_polynomial(&lz, big_w, l, &w)?;
            let m_tilde = outer_polynomial(&mz, big_w, m, &w)?;
            CCVerdict::Holds {
                w,
                l_tilde,
                m_tilde,
            }
        }
    };
    Ok(Analysis {
        generator: Some(generator),
        classification: Some(classification),
        verdict,
    })
}

/// Real polynomial `A` with `A ∘ w = f`, checked by exact recomposition.
fn outer_polynomial(
    f_laurent: &LaurentPoly,
    big_w: &LaurentPoly,
    f: &TrigPoly,
    w: &TrigPoly,
) -> Result<QPoly> {
    let a = decompose_through(f_laurent, &big_w.to_ratfunc())?
        .ok_or_else(|| Error::internal("input does not factor through the Laurent generator"))?;
    if !a.is_polynomial() {
        return Err(Error::internal("outer part has a finite pole"));
    }
    let real = a
        .num()
        .scale(&a.den().coeff(0).inv().expect("nonzero"))
        .to_real()
        .ok_or_else(|| Error::internal("outer part has non-real coefficients"))?;
    if w.compose_into(&real) != *f {
        return Err(Error::internal("witness identity fails"));
    }
    Ok(real)
}

/// Decision for the Abel equation `r' = l̂ r³ + m̂ r²`: works on the
/// antiderivatives `l = ∫₀^θ l̂`, `m = ∫₀^θ m̂`.
pub fn decide_cc_abel(l_hat: &TrigPoly, m_hat: &TrigPoly) -> Result<CCVerdict> {
    let (l, m) = match (l_hat.antiderivative(), m_hat.antiderivative()) {
        (Ok(l), Ok(m)) => (l, m),
        (Err(Error::NotPeriodic), _) | (_, Err(Error::NotPeriodic)) => {
            return Ok(CCVerdict::NotPeriodic)
        }
        (Err(e), _) | (_, Err(e)) => return Err(e),
    };
    decide_cc(&l, &m)
}

/// Rejects inputs whose degree exceeds `max`.
pub fn check_degree(f: &TrigPoly, max: usize) -> Result<()> {
    if f.degree() > max {
        return Err(Error::DegreeTooLarge {
            degree: f.degree(),
            max,
        });
    }
    Ok(())
}
