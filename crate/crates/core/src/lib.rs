//! Exact decision procedure for the composition condition of the Abel
//! equation `dr/dθ = l̂(θ) r³ + m̂(θ) r²` with trigonometric coefficients.
//!
//! Given trigonometric polynomials `l`, `m` (the moments of `l̂`, `m̂`), the
//! crate either finds a trigonometric polynomial `w` and real polynomials
//! `l̃`, `m̃` with `l = l̃ ∘ w`, `m = m̃ ∘ w`, or certifies that the field
//! `ℝ(l, m)` is `ℝ(tan(nθ/2))`, in which case no continuous periodic `w`
//! exists either. All symbolic work is exact over ℚ(i); a fixed-step RK4
//! integrator checks the resulting center property numerically.
//!
//! ```
//! use abel_cc::{decide_cc, CCVerdict, TrigPoly};
//!
//! let verdict = decide_cc(&TrigPoly::cos(1), &TrigPoly::sin(1)).unwrap();
//! assert_eq!(verdict, CCVerdict::Fails { n: 1 });
//! ```
//!
//! The guide in `book/` walks through each stage.

pub mod error;
pub mod field;
pub mod instances;
pub mod json;
pub mod mobius;
pub mod ode;
pub mod poly;
pub mod scalar;
pub mod trig;

pub use error::{Error, Result};
pub use field::{
    analyze, classify, common_generator, decide_cc, decide_cc_abel, decompose_through, tan_image,
    Analysis, CCVerdict, Classification, FieldGenerator,
};
pub use mobius::Mobius;
pub use ode::{integrate_abel, poincare_report, AbelInstance, OdeReport};
pub use poly::{gcd_bi_in_w, gcd_uni, solve_linear, BiPoly, CPoly, QPoly, UniPoly};
pub use scalar::{GaussRational, Rational};
pub use trig::{LaurentPoly, ProjPoint, RatFunc, TrigPoly};

// Every chapter of the guide is compiled and run as a doc-test.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-scalars.md")]
    mod exact_scalars {}
    #[doc = include_str!("../../../book/src/trig-and-laurent.md")]
    mod trig_and_laurent {}
    #[doc = include_str!("../../../book/src/field-generators.md")]
    mod field_generators {}
    #[doc = include_str!("../../../book/src/deciding.md")]
    mod deciding {}
    #[doc = include_str!("../../../book/src/abel-ode.md")]
    mod abel_ode {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
