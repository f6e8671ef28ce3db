//! Seeded random instances: composed pairs `(l̃₀ ∘ w₀, m̃₀ ∘ w₀)` for which the
//! composition condition holds by construction, and independent generic pairs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::QPoly;
use crate::scalar::{rat, Rational};
use crate::trig::TrigPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Holds,
    Generic,
}

/// A composed instance together with the parts it was built from.
#[derive(Clone, Debug)]
pub struct ComposedInstance {
    pub w0: TrigPoly,
    pub l_tilde0: QPoly,
    pub m_tilde0: QPoly,
    pub l: TrigPoly,
    pub m: TrigPoly,
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=3))
}

fn nonzero_small_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = small_rational(rng);
        if !num_traits::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// Random trigonometric polynomial of exact degree `deg`.
pub fn random_trig(rng: &mut impl Rng, deg: usize) -> TrigPoly {
    let a0 = small_rational(rng);
    let terms = (1..=deg).map(|k| {
        let (a, b) = if k == deg {
            // keep the top term nonzero
            match rng.gen_range(0..3) {
                0 => (nonzero_small_rational(rng), rat(0, 1)),
                1 => (rat(0, 1), nonzero_small_rational(rng)),
                _ => (nonzero_small_rational(rng), nonzero_small_rational(rng)),
            }
        } else {
            (small_rational(rng), small_rational(rng))
        };
        (k, a, b)
    });
    TrigPoly::new(a0, terms.collect::<Vec<_>>()).expect("increasing frequencies")
}

/// Random real polynomial of exact degree `deg`.
pub fn random_poly(rng: &mut impl Rng, deg: usize) -> QPoly {
    let mut coeffs: Vec<Rational> = (0..deg).map(|_| small_rational(rng)).collect();
    coeffs.push(nonzero_small_rational(rng));
    QPoly::new(coeffs)
}

pub fn composed_instance(
    seed: u64,
    deg_w: usize,
    deg_l: usize,
    deg_m: usize,
) -> Result<ComposedInstance> {
    if deg_w == 0 || deg_l == 0 || deg_m == 0 {
        return Err(Error::Parse("composed instances need degrees ≥ 1".into()));
    }
    let mut rng = rng_from_seed(seed);
    let w0 = random_trig(&mut rng, deg_w);
    let l_tilde0 = random_poly(&mut rng, deg_l);
    let m_tilde0 = random_poly(&mut rng, deg_m);
    let l = w0.compose_into(&l_tilde0);
    let m = w0.compose_into(&m_tilde0);
    Ok(ComposedInstance {
        w0,
        l_tilde0,
        m_tilde0,
        l,
        m,
    })
}

pub fn generic_instance(seed: u64, deg_l: usize, deg_m: usize) -> (TrigPoly, TrigPoly) {
    let mut rng = rng_from_seed(seed);
    let l = random_trig(&mut rng, deg_l);
    let m = random_trig(&mut rng, deg_m);
    (l, m)
}

/// Pair `(l, m)` of the requested kind. `deg_w` is ignored for generic pairs.
pub fn random_instance(
    seed: u64,
    kind: InstanceKind,
    deg_w: usize,
    deg_l: usize,
    deg_m: usize,
) -> Result<(TrigPoly, TrigPoly)> {
    match kind {
        InstanceKind::Holds => composed_instance(seed, deg_w, deg_l, deg_m).map(|c| (c.l, c.m)),
        InstanceKind::Generic => Ok(generic_instance(seed, deg_l, deg_m)),
    }
}
