//! JSON wire formats. Exact scalars always travel as strings (`"p/q"`,
//! `"p/q+r/s*i"`); only ODE reports carry floats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::CCVerdict;
use crate::ode::AbelInstance;
use crate::poly::{CPoly, QPoly};
use crate::scalar::{parse_rational, GaussRational};
use crate::trig::{LaurentPoly, RatFunc, TrigPoly};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub k: usize,
    pub a: String,
    pub b: String,
}

/// `{"a0": "p/q", "terms": [{"k": int, "a": "p/q", "b": "p/q"}]}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrigPolyJson {
    pub a0: String,
    #[serde(default)]
    pub terms: Vec<TermJson>,
}

impl From<&TrigPoly> for TrigPolyJson {
    fn from(f: &TrigPoly) -> Self {
        TrigPolyJson {
            a0: f.a0().to_string(),
            terms: f
                .terms()
                .map(|(k, a, b)| TermJson {
                    k,
                    a: a.to_string(),
                    b: b.to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&TrigPolyJson> for TrigPoly {
    type Error = Error;

    fn try_from(j: &TrigPolyJson) -> Result<TrigPoly> {
        let terms = j
            .terms
            .iter()
            .map(|t| Ok((t.k, parse_rational(&t.a)?, parse_rational(&t.b)?)))
            .collect::<Result<Vec<_>>>()?;
        TrigPoly::new(parse_rational(&j.a0)?, terms)
    }
}

/// Input of `decide`: `{"l": TrigPoly, "m": TrigPoly}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairJson {
    pub l: TrigPolyJson,
    pub m: TrigPolyJson,
}

impl PairJson {
    pub fn new(l: &TrigPoly, m: &TrigPoly) -> Self {
        PairJson {
            l: l.into(),
            m: m.into(),
        }
    }

    pub fn parse(&self) -> Result<(TrigPoly, TrigPoly)> {
        Ok(((&self.l).try_into()?, (&self.m).try_into()?))
    }
}

/// Abel coefficients: `{"l_hat": TrigPoly, "m_hat": TrigPoly}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelJson {
    pub l_hat: TrigPolyJson,
    pub m_hat: TrigPolyJson,
}

impl AbelJson {
    pub fn parse(&self) -> Result<AbelInstance> {
        Ok(AbelInstance::new(
            (&self.l_hat).try_into()?,
            (&self.m_hat).try_into()?,
        ))
    }
}

impl From<&AbelInstance> for AbelJson {
    fn from(inst: &AbelInstance) -> Self {
        AbelJson {
            l_hat: (&inst.l_hat).into(),
            m_hat: (&inst.m_hat).into(),
        }
    }
}

/// `{"lo": int, "coeffs": ["p/q+r/s*i", ...]}` for `z^lo … z^hi`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LaurentJson {
    pub lo: i64,
    pub coeffs: Vec<String>,
}

impl From<&LaurentPoly> for LaurentJson {
    fn from(l: &LaurentPoly) -> Self {
        LaurentJson {
            lo: l.lo(),
            coeffs: l.coeffs().iter().map(ToString::to_string).collect(),
        }
    }
}

impl TryFrom<&LaurentJson> for LaurentPoly {
    type Error = Error;

    fn try_from(j: &LaurentJson) -> Result<LaurentPoly> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|c| c.parse::<GaussRational>())
            .collect::<Result<Vec<_>>>()?;
        Ok(LaurentPoly::new(j.lo, coeffs))
    }
}

/// `{"num": [c0, c1, ...], "den": [...]}`, ascending powers.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

fn poly_strings(p: &CPoly) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl From<&RatFunc> for RatFuncJson {
    fn from(r: &RatFunc) -> Self {
        RatFuncJson {
            num: poly_strings(r.num()),
            den: poly_strings(r.den()),
        }
    }
}

/// `{"verdict": "holds"|"fails"|"not_periodic", "w"?, "l_tilde"?, "m_tilde"?, "tan_n"?}`
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub verdict: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub w: Option<TrigPolyJson>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub l_tilde: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m_tilde: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub tan_n: Option<usize>,
}

fn real_poly_strings(p: &QPoly) -> Vec<String> {
    if p.is_zero() {
        return vec!["0".into()];
    }
    p.coeffs().iter().map(ToString::to_string).collect()
}

impl From<&CCVerdict> for VerdictJson {
    fn from(v: &CCVerdict) -> Self {
        let mut out = VerdictJson {
            verdict: String::new(),
            w: None,
            l_tilde: None,
            m_tilde: None,
            tan_n: None,
        };
        match v {
            CCVerdict::Holds {
                w,
                l_tilde,
                m_tilde,
            } => {
                out.verdict = "holds".into();
                out.w = Some(w.into());
                out.l_tilde = Some(real_poly_strings(l_tilde));
                out.m_tilde = Some(real_poly_strings(m_tilde));
            }
            CCVerdict::Fails { n } => {
                out.verdict = "fails".into();
                out.tan_n = Some(*n);
            }
            CCVerdict::NotPeriodic => out.verdict = "not_periodic".into(),
        }
        out
    }
}

impl TryFrom<&VerdictJson> for CCVerdict {
    type Error = Error;

    fn try_from(j: &VerdictJson) -> Result<CCVerdict> {
        let missing =
            |field: &str| Error::Parse(format!("verdict `{}` lacks `{field}`", j.verdict));
        let poly = |c: &Option<Vec<String>>, field: &str| -> Result<QPoly> {
            let c = c.as_ref().ok_or_else(|| missing(field))?;
            Ok(QPoly::new(
                c.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?,
            ))
        };
        match j.verdict.as_str() {
            "holds" => Ok(CCVerdict::Holds {
                w: j.w.as_ref().ok_or_else(|| missing("w"))?.try_into()?,
                l_tilde: poly(&j.l_tilde, "l_tilde")?,
                m_tilde: poly(&j.m_tilde, "m_tilde")?,
            }),
            "fails" => Ok(CCVerdict::Fails {
                n: j.tan_n.ok_or_else(|| missing("tan_n"))?,
            }),
            "not_periodic" => Ok(CCVerdict::NotPeriodic),
            other => Err(Error::Parse(format!("unknown verdict `{other}`"))),
        }
    }
}

pub fn parse_trig(text: &str) -> Result<TrigPoly> {
    let j: TrigPolyJson = from_str(text)?;
    (&j).try_into()
}

pub fn parse_pair(text: &str) -> Result<(TrigPoly, TrigPoly)> {
    from_str::<PairJson>(text)?.parse()
}

pub fn parse_abel(text: &str) -> Result<AbelInstance> {
    from_str::<AbelJson>(text)?.parse()
}

fn from_str<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
