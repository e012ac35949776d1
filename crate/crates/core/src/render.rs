use crate::burnside::{self, Burnside};
use crate::element::{Element, QMonomial};
use crate::grading::Grading;
use crate::hpoint::{HElem, HSym};
use crate::space::{Dialect, Space};
use serde::Serialize;

/// Generator names for a space's dialect.
pub fn euler_names(space: Space) -> (&'static str, &'static str) {
    match space.dialect() {
        Dialect::Omega => ("cw", "cxw"),
        Dialect::Lambda => ("cl", "cxl"),
    }
}

fn push_pow(out: &mut Vec<String>, name: &str, k: i64) {
    if k == 0 {
        return;
    }
    if k == 1 {
        out.push(name.to_string());
    } else {
        out.push(format!("{name}^{k}"));
    }
}

/// "z0^-1 cl cxl m[2]" and friends; empty string for the unit monomial.
pub fn monomial_text(space: Space, m: &QMonomial) -> String {
    let (cw, cxw) = euler_names(space);
    let mut parts = Vec::new();
    push_pow(&mut parts, "z0", m.a);
    push_pow(&mut parts, "z1", m.b);
    push_pow(&mut parts, cw, m.i as i64);
    push_pow(&mut parts, cxw, m.j as i64);
    if let Some(s) = m.m {
        parts.push(format!("m[{s}]"));
    }
    parts.join(" ")
}

enum CoeffText {
    Plus(String),
    Minus(String),
}

fn sym_name(s: &HSym) -> String {
    match s {
        HSym::E(a) => {
            if *a == 1 {
                "e".into()
            } else {
                format!("e^{a}")
            }
        }
        HSym::Xi(b) => {
            if *b == 1 {
                "xi".into()
            } else {
                format!("xi^{b}")
            }
        }
        HSym::EXi(a, b) => format!("{} {}", sym_name(&HSym::E(*a)), sym_name(&HSym::Xi(*b))),
        HSym::NegKappa(m) => {
            if *m == 1 {
                "e^-1 kappa".into()
            } else {
                format!("e^-{m} kappa")
            }
        }
        HSym::TauNeg(n) => format!("tau(iota^-{n})"),
    }
}

fn coeff_text(c: &HElem) -> CoeffText {
    if c.terms.is_empty() {
        let u = c.unit;
        if u == burnside::KAPPA {
            return CoeffText::Plus("kappa".into());
        }
        if u == burnside::KAPPA.neg() {
            return CoeffText::Minus("kappa".into());
        }
        if u == burnside::ONE_MINUS_KAPPA {
            return CoeffText::Plus("(1-kappa)".into());
        }
        if u == burnside::ONE_MINUS_KAPPA.neg() {
            return CoeffText::Minus("(1-kappa)".into());
        }
        if u.b == 0 {
            return if u.a >= 0 {
                CoeffText::Plus(if u.a == 1 { String::new() } else { u.a.to_string() })
            } else {
                CoeffText::Minus(if u.a == -1 {
                    String::new()
                } else {
                    (-u.a).to_string()
                })
            };
        }
        if u.a == 0 {
            return if u.b >= 0 {
                CoeffText::Plus(if u.b == 1 { "g".into() } else { format!("{}g", u.b) })
            } else {
                CoeffText::Minus(if u.b == -1 {
                    "g".into()
                } else {
                    format!("{}g", -u.b)
                })
            };
        }
        return CoeffText::Plus(format!("({u})"));
    }
    if c.unit.is_zero() && c.terms.len() == 1 {
        let (s, &k) = c.terms.iter().next().unwrap();
        let name = sym_name(s);
        return if k >= 0 {
            CoeffText::Plus(if k == 1 { name } else { format!("{k} {name}") })
        } else {
            CoeffText::Minus(if k == -1 { name } else { format!("{} {name}", -k) })
        };
    }
    CoeffText::Plus(format!("({c})"))
}

/// Render a ring element in the normal-form term order.
pub fn element_text(e: &Element) -> String {
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (mono, coeff)) in e.terms.iter().enumerate() {
        let mono_str = monomial_text(e.space, mono);
        let (neg, coeff_str) = match coeff_text(coeff) {
            CoeffText::Plus(s) => (false, s),
            CoeffText::Minus(s) => (true, s),
        };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else if neg {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        match (coeff_str.is_empty(), mono_str.is_empty()) {
            (true, true) => out.push('1'),
            (true, false) => out.push_str(&mono_str),
            (false, true) => out.push_str(&coeff_str),
            (false, false) => {
                out.push_str(&coeff_str);
                out.push(' ');
                out.push_str(&mono_str);
            }
        }
    }
    out
}

#[derive(Debug, Serialize)]
pub struct JsonGrading {
    pub u: i64,
    pub s: i64,
    pub w: i64,
}

impl From<Grading> for JsonGrading {
    fn from(g: Grading) -> Self {
        JsonGrading { u: g.u, s: g.s, w: g.w }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonBurnside {
    pub a: i64,
    pub b: i64,
}

impl From<Burnside> for JsonBurnside {
    fn from(u: Burnside) -> Self {
        JsonBurnside { a: u.a, b: u.b }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonSym {
    /// one of "e", "xi", "e xi", "e^-m kappa", "tau"
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub coeff: i64,
}

#[derive(Debug, Serialize)]
pub struct JsonCoeff {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<JsonBurnside>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub syms: Vec<JsonSym>,
}

impl From<&HElem> for JsonCoeff {
    fn from(c: &HElem) -> Self {
        let unit = (!c.unit.is_zero()).then(|| c.unit.into());
        let syms = c
            .terms
            .iter()
            .map(|(s, &k)| match *s {
                HSym::E(a) => JsonSym { kind: "e", a: Some(a), b: None, n: None, coeff: k },
                HSym::Xi(b) => JsonSym { kind: "xi", a: None, b: Some(b), n: None, coeff: k },
                HSym::EXi(a, b) => JsonSym {
                    kind: "e xi",
                    a: Some(a),
                    b: Some(b),
                    n: None,
                    coeff: k,
                },
                HSym::NegKappa(m) => JsonSym {
                    kind: "e^-m kappa",
                    a: Some(m),
                    b: None,
                    n: None,
                    coeff: k,
                },
                HSym::TauNeg(n) => JsonSym {
                    kind: "tau",
                    a: None,
                    b: None,
                    n: Some(n),
                    coeff: k,
                },
            })
            .collect();
        JsonCoeff { unit, syms }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonMonomial {
    pub a: i64,
    pub b: i64,
    pub i: u32,
    pub j: u32,
    pub m: Option<u32>,
}

impl From<&QMonomial> for JsonMonomial {
    fn from(m: &QMonomial) -> Self {
        JsonMonomial { a: m.a, b: m.b, i: m.i, j: m.j, m: m.m }
    }
}

#[derive(Debug, Serialize)]
pub struct JsonTerm {
    pub coeff: JsonCoeff,
    pub monomial: Option<JsonMonomial>,
}

#[derive(Debug, Serialize)]
pub struct JsonElement {
    pub space: String,
    pub grading: Option<JsonGrading>,
    pub terms: Vec<JsonTerm>,
}

impl JsonElement {
    pub fn from_element(e: &Element) -> JsonElement {
        let grading = e.grading().ok().flatten().map(Into::into);
        JsonElement {
            space: e.space.to_string(),
            grading,
            terms: e
                .terms
                .iter()
                .map(|(m, c)| JsonTerm {
                    coeff: c.into(),
                    monomial: Some(m.into()),
                })
                .collect(),
        }
    }

    pub fn from_point(c: &HElem) -> JsonElement {
        let grading = c.grading().ok().flatten().map(Into::into);
        JsonElement {
            space: "point".to_string(),
            grading,
            terms: if c.is_zero() {
                Vec::new()
            } else {
                vec![JsonTerm { coeff: c.into(), monomial: None }]
            },
        }
    }
}
