//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each, and
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use abel_cc::field::{analyze, Classification};
use abel_cc::instances::{
    composed_instance, generic_instance, random_trig, rng_from_seed, small_rational,
};
use abel_cc::ode::{AbelInstance, Integrator, Status};
use abel_cc::poly::{gcd_uni, BiPoly, CPoly, QPoly};
use abel_cc::scalar::{int, GaussRational};
use abel_cc::{
    decide_cc, decide_cc_abel, gcd_bi_in_w, tan_image, CCVerdict, LaurentPoly, TrigPoly,
};
use num_integer::Integer;
use rand::Rng;

/// Exact criteria compare with `==`; these are the only numeric thresholds.
const CENTER_TOLERANCE: f64 = 1e-7;
const CENTER_STEPS: usize = 100_000;
const CENTER_R0S: [f64; 4] = [0.01, -0.01, 0.05, -0.05];
const MIN_HALVING_RATIO: f64 = 12.0;

const ISOMORPHISM_CASES: u64 = 500;
const ROUND_TRIP_CASES: u64 = 200;
const ODE_CASES: usize = 20;
const GCD_CASES: u64 = 100;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------------------------------------------------------------------------
// 1. φ is an exact ring isomorphism onto conjugate-reciprocal Laurent polynomials

fn isomorphism_suite() -> Outcome {
    let mut rng = rng_from_seed(0x150);
    for case in 0..ISOMORPHISM_CASES {
        let deg = rng.gen_range(0..=12);
        let f = random_trig(&mut rng, deg);
        let deg = rng.gen_range(0..=12);
        let g = random_trig(&mut rng, deg);
        let (pf, pg) = (f.to_laurent(), g.to_laurent());
        ensure((&f + &g).to_laurent() == &pf + &pg, || {
            format!("case {case}: φ(f+g) ≠ φ(f)+φ(g)")
        })?;
        ensure((&f * &g).to_laurent() == &pf * &pg, || {
            format!("case {case}: φ(fg) ≠ φ(f)φ(g)")
        })?;
        ensure(pf.is_real_type() && pg.is_real_type(), || {
            format!("case {case}: image not conj-reciprocal")
        })?;
        ensure(TrigPoly::from_laurent(&pf).as_ref() == Ok(&f), || {
            format!("case {case}: φ⁻¹∘φ ≠ id")
        })?;
        if !f.is_constant() {
            let n = f.degree() as i64;
            ensure(pf.lo() == -n && pf.hi() == n, || {
                format!("case {case}: unbalanced bidegree")
            })?;
        }
    }
    Ok(format!("{ISOMORPHISM_CASES} random pairs, degree ≤ 12"))
}

// ---------------------------------------------------------------------------
// 2 & 4. Round-trip completeness and tan-exclusion on composed instances

struct RoundTrip {
    /// `(l, m)` for each instance, kept for the ODE and NotPeriodic criteria.
    instances: Vec<(TrigPoly, TrigPoly)>,
    tan_hits: usize,
}

fn round_trip_instance_degrees(seed: u64) -> (usize, usize, usize) {
    let mut rng = rng_from_seed(seed ^ 0xDE6);
    (
        rng.gen_range(1..=4),
        rng.gen_range(1..=3),
        rng.gen_range(1..=3),
    )
}

fn run_round_trips() -> Result<RoundTrip, String> {
    let mut instances = Vec::new();
    let mut tan_hits = 0;
    for seed in 0..ROUND_TRIP_CASES {
        let (dw, dl, dm) = round_trip_instance_degrees(seed);
        let inst = composed_instance(seed, dw, dl, dm).map_err(|e| e.to_string())?;
        let analysis = analyze(&inst.l, &inst.m).map_err(|e| format!("seed {seed}: {e}"))?;
        if matches!(
            analysis.classification,
            Some(Classification::TanField { .. })
        ) {
            tan_hits += 1;
        }
        let CCVerdict::Holds {
            w,
            l_tilde,
            m_tilde,
        } = &analysis.verdict
        else {
            return Err(format!("seed {seed}: verdict {:?}", analysis.verdict));
        };
        ensure(w.compose_into(l_tilde) == inst.l, || {
            format!("seed {seed}: l̃∘w ≠ l")
        })?;
        ensure(w.compose_into(m_tilde) == inst.m, || {
            format!("seed {seed}: m̃∘w ≠ m")
        })?;
        let g = inst.l.degree().gcd(&inst.m.degree());
        ensure(g % w.degree() == 0, || {
            format!("seed {seed}: deg w = {} does not divide {g}", w.degree())
        })?;
        instances.push((inst.l, inst.m));
    }
    Ok(RoundTrip {
        instances,
        tan_hits,
    })
}

// ---------------------------------------------------------------------------
// 3. Tan-case certification with a hand-factored fibre oracle

/// `P(z, w) = w^s N(z) − z^s N(w)` for `L = N / z^s`: the numerator of `L(z) − L(w)`.
fn fibre_numerator(l: &LaurentPoly) -> BiPoly {
    let (num, s) = l.to_poly_over_monomial();
    let s = s as usize;
    let z_s = CPoly::monomial(GaussRational::from_int(1), s);
    let len = num.coeffs().len().max(s + 1);
    BiPoly::new(
        (0..len)
            .map(|j| {
                let mut c = z_s.scale(&-num.coeff(j));
                if j == s {
                    c = &c + &num;
                }
                c
            })
            .collect(),
    )
}

fn tan_certification() -> Outcome {
    // Hand factorizations (table[j][i] = coefficient of w^j z^i):
    //   cos nθ : z^n w^n (L(z) − L(w)) = ½ (w^n − z^n)(1 − z^n w^n)
    //   sin nθ : z^n w^n (M(z) − M(w)) = (i/2)(w^n − z^n)(1 + z^n w^n)
    // so the common fibre factor is w^n − z^n.
    let half = GaussRational::real(abel_cc::scalar::rat(1, 2));
    let half_i = GaussRational::new(int(0), abel_cc::scalar::rat(1, 2));
    for n in [1usize, 2] {
        let mono = |j: usize, i: usize, c: i64| {
            let mut rows = vec![CPoly::zero(); j + 1];
            rows[j] = CPoly::monomial(GaussRational::from_int(c), i);
            BiPoly::new(rows)
        };
        let w_minus_z = mono(n, 0, 1).sub(&mono(0, n, 1));
        let one_minus = mono(0, 0, 1).sub(&mono(n, n, 1));
        let one_plus = mono(0, 0, 1).sub(&mono(n, n, -1));
        let p_oracle = w_minus_z.mul(&one_minus).scale(&half);
        let q_oracle = w_minus_z.mul(&one_plus).scale(&half_i);

        let (l, m) = (TrigPoly::cos(n), TrigPoly::sin(n));
        let (p, q) = (
            fibre_numerator(&l.to_laurent()),
            fibre_numerator(&m.to_laurent()),
        );
        ensure(p == p_oracle && q == q_oracle, || {
            format!("n = {n}: fibre numerators differ from hand factorization")
        })?;
        let d = gcd_bi_in_w(&p, &q).map_err(|e| e.to_string())?;
        ensure(d == w_minus_z, || {
            format!("n = {n}: fibre gcd {d:?} ≠ w^n − z^n")
        })?;

        let analysis = analyze(&l, &m).map_err(|e| e.to_string())?;
        ensure(analysis.verdict == CCVerdict::Fails { n }, || {
            format!("n = {n}: verdict {:?}", analysis.verdict)
        })?;
        let generator = analysis.generator.ok_or("missing generator")?;
        let Some(Classification::TanField { n: got, mu }) = analysis.classification else {
            return Err(format!("n = {n}: not classified as a tan field"));
        };
        ensure(got == n, || format!("tan index {got} ≠ {n}"))?;
        ensure(
            mu.inverse().apply(&generator.generator) == tan_image(n),
            || format!("n = {n}: μ₁⁻¹ ∘ B ≠ (1/i)(zⁿ − 1)/(zⁿ + 1)"),
        )?;
    }
    Ok(
        "Fails(1) for (cos θ, sin θ), Fails(2) for (cos 2θ, sin 2θ); μ₁ identities re-verified"
            .into(),
    )
}

// ---------------------------------------------------------------------------
// 5. Chebyshev identity

fn known_identity() -> Outcome {
    let verdict = decide_cc(&TrigPoly::cos(1), &TrigPoly::cos(2)).map_err(|e| e.to_string())?;
    let want = CCVerdict::Holds {
        w: TrigPoly::cos(1),
        l_tilde: QPoly::x(),
        m_tilde: QPoly::from_ints(&[-1, 0, 2]),
    };
    ensure(verdict == want, || format!("got {verdict:?}"))?;
    Ok("w = cos θ, l̃ = x, m̃ = 2x² − 1".into())
}

// ---------------------------------------------------------------------------
// 6. Center sufficiency

fn max_abs_coeff(f: &TrigPoly) -> f64 {
    let mut m = abel_cc::scalar::rational_to_f64(f.a0()).abs();
    for (_, a, b) in f.terms() {
        m = m
            .max(abel_cc::scalar::rational_to_f64(a).abs())
            .max(abel_cc::scalar::rational_to_f64(b).abs());
    }
    m
}

/// Instances whose Abel coefficients stay below this bound are used for the ODE check.
const ODE_COEFF_BOUND: f64 = 16.0;

fn center_spot_check(round_trip: &RoundTrip) -> Outcome {
    let integrator = Integrator::with_steps(CENTER_STEPS);
    let chosen: Vec<AbelInstance> = round_trip
        .instances
        .iter()
        .map(|(l, m)| AbelInstance::from_moments(l, m))
        .filter(|inst| {
            max_abs_coeff(&inst.l_hat).max(max_abs_coeff(&inst.m_hat)) <= ODE_COEFF_BOUND
        })
        .take(ODE_CASES)
        .collect();
    ensure(chosen.len() == ODE_CASES, || {
        format!("only {} bounded instances", chosen.len())
    })?;
    let mut worst = 0.0f64;
    let mut converged = 0;
    for (idx, inst) in chosen.iter().enumerate() {
        let report = integrator.report(inst, &CENTER_R0S);
        for s in &report.samples {
            if s.status == Status::Converged {
                converged += 1;
                let d = s
                    .displacement
                    .expect("converged sample has displacement")
                    .abs();
                worst = worst.max(d);
                ensure(d <= CENTER_TOLERANCE, || {
                    format!("instance {idx}, r0 = {}: |Δ| = {d:e}", s.r0)
                })?;
            }
        }
    }

    // step-halving on the Chebyshev-derived instance l̂ = −sin θ, m̂ = −2 sin 2θ
    let inst = AbelInstance::new(
        TrigPoly::sin_term(1, int(-1)),
        TrigPoly::sin_term(2, int(-2)),
    );
    let r0 = HALVING_R0;
    let errors: Vec<f64> = HALVING_STEPS
        .iter()
        .map(|&n| {
            Integrator::with_steps(n)
                .integrate(&inst, r0)
                .map(|r| (r - r0).abs())
                .map_err(|e| e.to_string())
        })
        .collect::<Result<_, _>>()?;
    let ratios: Vec<f64> = errors.windows(2).map(|w| w[0] / w[1]).collect();
    ensure(ratios.iter().all(|&r| r >= MIN_HALVING_RATIO), || {
        format!("step-halving ratios {ratios:?} (errors {errors:?})")
    })?;
    Ok(format!(
        "{ODE_CASES} instances, {converged} converged samples, max |Δ| = {worst:.2e}; halving ratios {}",
        ratios.iter().map(|r| format!("{r:.1}")).collect::<Vec<_>>().join(", ")
    ))
}

const HALVING_R0: f64 = 0.5;
const HALVING_STEPS: [usize; 3] = [40, 80, 160];

// ---------------------------------------------------------------------------
// 7. NotPeriodic gate

fn not_periodic_gate(round_trip: &RoundTrip) -> Outcome {
    let mut rng = rng_from_seed(0x7);
    let mut checked = 0;
    for case in 0..50u64 {
        let deg = rng.gen_range(0..=4);
        let mut l_hat = random_trig(&mut rng, deg);
        if num_traits::Zero::is_zero(l_hat.a0()) {
            l_hat = &l_hat + &TrigPoly::constant(int(1));
        }
        let deg = rng.gen_range(0..=4);
        let m_hat = random_trig(&mut rng, deg);
        let v = decide_cc_abel(&l_hat, &m_hat).map_err(|e| e.to_string())?;
        ensure(v == CCVerdict::NotPeriodic, || {
            format!("case {case}: nonzero-mean l̂ gave {v:?}")
        })?;
        let v = decide_cc_abel(&m_hat, &l_hat).map_err(|e| e.to_string())?;
        ensure(v == CCVerdict::NotPeriodic, || {
            format!("case {case}: nonzero-mean m̂ gave {v:?}")
        })?;
        checked += 2;
    }
    // zero-mean inputs: derivatives of composed instances plus generic pairs
    let generic: Vec<(TrigPoly, TrigPoly)> = (0..20)
        .map(|s| generic_instance(1000 + s, 1 + (s as usize % 3), 2))
        .collect();
    let mut agreed = 0;
    for (l, m) in round_trip.instances.iter().take(40).chain(generic.iter()) {
        let (l_hat, m_hat) = (l.derivative(), m.derivative());
        let l0 = l_hat.antiderivative().map_err(|e| e.to_string())?;
        let m0 = m_hat.antiderivative().map_err(|e| e.to_string())?;
        let via_abel = decide_cc_abel(&l_hat, &m_hat).map_err(|e| e.to_string())?;
        let direct = decide_cc(&l0, &m0).map_err(|e| e.to_string())?;
        ensure(via_abel == direct, || {
            format!("decide_cc_abel {via_abel:?} ≠ decide_cc {direct:?}")
        })?;
        agreed += 1;
    }
    Ok(format!(
        "{checked} nonzero-mean inputs → NotPeriodic; {agreed} zero-mean pairs agree"
    ))
}

// ---------------------------------------------------------------------------
// 8. gcd kernel oracle

fn random_gauss(rng: &mut impl Rng) -> GaussRational {
    GaussRational::new(
        small_rational(rng),
        if rng.gen_bool(0.3) {
            small_rational(rng)
        } else {
            int(0)
        },
    )
}

fn random_bipoly(rng: &mut impl Rng, deg_w: usize, deg_z: usize) -> BiPoly {
    loop {
        let rows = (0..=deg_w)
            .map(|_| CPoly::new((0..=deg_z).map(|_| random_gauss(rng)).collect()))
            .collect();
        let p = BiPoly::new(rows);
        if p.deg_w() == deg_w {
            return p;
        }
    }
}

/// Independent coprimality oracle: specialize `z` to a point where neither
/// leading coefficient vanishes and compare with a univariate gcd.
fn coprime_in_w(a: &BiPoly, b: &BiPoly) -> bool {
    let z0 = GaussRational::new(int(7), int(3));
    let lead_ok = |p: &BiPoly| {
        p.leading_coeff_w()
            .is_some_and(|c| !num_traits::Zero::is_zero(&c.eval(&z0).norm_sqr()))
    };
    if !(lead_ok(a) && lead_ok(b)) {
        return false;
    }
    gcd_uni(&a.eval_z(&z0), &b.eval_z(&z0)).is_ok_and(|g| g.degree() == Some(0))
}

fn gcd_kernel_oracle() -> Outcome {
    let mut rng = rng_from_seed(0x8);
    let mut constructed = 0;
    while constructed < GCD_CASES {
        let dw = rng.gen_range(1..=3);
        let dz = rng.gen_range(0..=3);
        let d = random_bipoly(&mut rng, dw, dz);
        let (aw, az) = (rng.gen_range(1..=6 - dw), rng.gen_range(0..=6 - dz));
        let a = random_bipoly(&mut rng, aw, az);
        let (bw, bz) = (rng.gen_range(0..=6 - dw), rng.gen_range(0..=6 - dz));
        let b = random_bipoly(&mut rng, bw, bz);
        if !coprime_in_w(&a, &b) {
            continue;
        }
        let (p, q) = (d.mul(&a), d.mul(&b));
        let g = gcd_bi_in_w(&p, &q).map_err(|e| e.to_string())?;
        ensure(g.divides_in_w(&p) && g.divides_in_w(&q), || {
            format!("case {constructed}: gcd does not divide inputs")
        })?;
        ensure(g.divides_in_w(&d) && d.divides_in_w(&g), || {
            format!("case {constructed}: gcd ≠ D up to unit")
        })?;
        ensure(g.deg_w() == d.deg_w(), || {
            format!("case {constructed}: w-degree {} ≠ {}", g.deg_w(), d.deg_w())
        })?;
        constructed += 1;
    }
    Ok(format!(
        "{GCD_CASES} constructions D·A, D·B recovered D up to a unit"
    ))
}

// ---------------------------------------------------------------------------

fn report(id: u32, name: &str, outcome: &Outcome, started: Instant) -> bool {
    let secs = started.elapsed().as_secs_f64();
    match outcome {
        Ok(detail) => {
            println!("[PASS] {id}. {name} ({secs:.1}s): {detail}");
            true
        }
        Err(why) => {
            println!("[FAIL] {id}. {name} ({secs:.1}s): {why}");
            false
        }
    }
}

fn main() -> ExitCode {
    let mut ok = true;

    let t = Instant::now();
    ok &= report(1, "isomorphism suite", &isomorphism_suite(), t);

    let t = Instant::now();
    let round_trip = run_round_trips();
    let summary = round_trip
        .as_ref()
        .map(|_| format!("{ROUND_TRIP_CASES} composed instances verified exactly"))
        .map_err(Clone::clone);
    ok &= report(2, "round-trip completeness", &summary, t);

    let t = Instant::now();
    ok &= report(3, "tan-case certification", &tan_certification(), t);

    let t = Instant::now();
    let exclusion = match &round_trip {
        Ok(rt) if rt.tan_hits == 0 => Ok(format!(
            "0 TanField classifications in {} instances",
            rt.instances.len()
        )),
        Ok(rt) => Err(format!("{} TanField classifications", rt.tan_hits)),
        Err(e) => Err(format!("round-trip suite failed: {e}")),
    };
    ok &= report(4, "tan-exclusion consistency", &exclusion, t);

    let t = Instant::now();
    ok &= report(5, "known identity", &known_identity(), t);

    let t = Instant::now();
    let center = match &round_trip {
        Ok(rt) => center_spot_check(rt),
        Err(e) => Err(format!("round-trip suite failed: {e}")),
    };
    ok &= report(6, "center sufficiency spot-check", &center, t);

    let t = Instant::now();
    let gate = match &round_trip {
        Ok(rt) => not_periodic_gate(rt),
        Err(e) => Err(format!("round-trip suite failed: {e}")),
    };
    ok &= report(7, "NotPeriodic gate", &gate, t);

    let t = Instant::now();
    ok &= report(8, "gcd kernel oracle", &gcd_kernel_oracle(), t);

    if ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
