use crate::error::{EqqError, Result};
use crate::grading::{self, Grading};
use crate::hpoint::HElem;
use crate::space::Space;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A normal-form monomial z0^a z1^b cw^i cxw^j (m[s]): zeta-exponents may be
/// negative (divided classes), Euler exponents may not, and at most one of
/// a, b is nonzero once reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QMonomial {
    pub a: i64,
    pub b: i64,
    pub i: u32,
    pub j: u32,
    pub m: Option<u32>,
}

impl QMonomial {
    pub const ONE: QMonomial = QMonomial {
        a: 0,
        b: 0,
        i: 0,
        j: 0,
        m: None,
    };

    pub fn m_class(s: u32) -> QMonomial {
        QMonomial {
            a: 0,
            b: 0,
            i: 0,
            j: 0,
            m: Some(s),
        }
    }

    /// The coset index n: the Omega1-coordinate of the grading.
    pub fn coset(&self, space: Space) -> i64 {
        let mut n = -self.a + self.b + self.i as i64 - self.j as i64;
        if let Some(s) = self.m {
            let p = space.quadric_p().expect("m-class monomial on a quadric") as i64;
            n += 2 * s as i64 - p;
        }
        n
    }

    pub fn grading(&self, space: Space) -> Grading {
        let mut g = grading::OMEGA0
            .scale(self.a)
            .add(grading::OMEGA1.scale(self.b))
            .add(grading::OMEGA.scale(self.i as i64))
            .add(grading::CHI_OMEGA.scale(self.j as i64));
        if let Some(s) = self.m {
            let p = space.quadric_p().expect("m-class monomial on a quadric");
            g = g.add(grading::nu(p, s));
        }
        g
    }

    /// Structural sanity: exponent caps respected and divided classes only at
    /// saturation. Cell-position normality is the rewrite engine's job.
    pub fn respects_caps(&self, space: Space) -> bool {
        if self.a != 0 && self.b != 0 {
            return false;
        }
        match space.caps(self.m) {
            Some((icap, jcap)) => {
                let (i, j) = (self.i as i64, self.j as i64);
                i <= icap
                    && j <= jcap
                    && !(i >= icap && j >= jcap)
                    && (self.a >= 0 || i >= icap)
                    && (self.b >= 0 || j >= jcap)
            }
            None => {
                let p = space.quadric_p().expect("uncapped family is pure quadric") as i64;
                self.a >= 0 && self.b >= 0 && (self.i as i64 + self.j as i64) <= p - 1
            }
        }
    }
}

/// Ordering used for rendering and canonical term storage: m-free monomials
/// first, then by m-index; within a family higher Euler powers first, then
/// higher zeta powers.
impl Ord for QMonomial {
    fn cmp(&self, o: &Self) -> Ordering {
        let mkey = |m: Option<u32>| m.map(|s| s as i64).unwrap_or(-1);
        mkey(self.m)
            .cmp(&mkey(o.m))
            .then(o.i.cmp(&self.i))
            .then(o.j.cmp(&self.j))
            .then(o.a.cmp(&self.a))
            .then(o.b.cmp(&self.b))
    }
}

impl PartialOrd for QMonomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// An element of the cohomology ring of `space`: a finite sum of normal-form
/// monomials with point-ring coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Element {
    pub space: Space,
    pub terms: BTreeMap<QMonomial, HElem>,
}

impl Element {
    pub fn zero(space: Space) -> Element {
        Element {
            space,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(space: Space, mono: QMonomial, coeff: HElem) -> Element {
        let mut e = Element::zero(space);
        e.add_term(mono, coeff);
        e
    }

    pub fn one(space: Space) -> Element {
        Element::from_monomial(space, QMonomial::ONE, HElem::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, mono: QMonomial, coeff: HElem) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono).or_insert_with(HElem::zero);
        *entry = entry.add(&coeff);
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn check_same_space(&self, o: &Element, operation: &'static str) -> Result<()> {
        if self.space != o.space {
            return Err(EqqError::SpaceMismatch {
                operation,
                space: format!("{} vs {}", self.space, o.space),
            });
        }
        Ok(())
    }

    pub fn add(&self, o: &Element) -> Result<Element> {
        self.check_same_space(o, "adding elements of different spaces")?;
        let mut out = self.clone();
        for (mono, coeff) in &o.terms {
            out.add_term(*mono, coeff.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Element {
        let mut out = Element::zero(self.space);
        for (mono, coeff) in &self.terms {
            out.add_term(*mono, coeff.neg());
        }
        out
    }

    pub fn sub(&self, o: &Element) -> Result<Element> {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> Element {
        let mut out = Element::zero(self.space);
        for (mono, coeff) in &self.terms {
            out.add_term(*mono, coeff.scale(k));
        }
        out
    }

    pub fn scale_h(&self, h: &HElem) -> Element {
        let mut out = Element::zero(self.space);
        for (mono, coeff) in &self.terms {
            out.add_term(*mono, coeff.mul(h));
        }
        out
    }

    /// The grading if homogeneous (None when zero); error when mixed.
    pub fn grading(&self) -> Result<Option<Grading>> {
        let mut found: Option<Grading> = None;
        for (mono, coeff) in &self.terms {
            let cg = coeff
                .grading()?
                .expect("stored coefficients are nonzero");
            let g = mono.grading(self.space).add(cg);
            match found {
                None => found = Some(g),
                Some(prev) if prev == g => {}
                Some(prev) => {
                    return Err(EqqError::NotHomogeneous(prev.to_string(), g.to_string()))
                }
            }
        }
        Ok(found)
    }

    /// The coset index if all terms agree; error when mixed.
    pub fn coset(&self) -> Result<Option<i64>> {
        let mut found: Option<i64> = None;
        for mono in self.terms.keys() {
            let n = mono.coset(self.space);
            match found {
                None => found = Some(n),
                Some(prev) if prev == n => {}
                Some(prev) => {
                    return Err(EqqError::NotHomogeneous(
                        format!("coset {prev}"),
                        format!("coset {n}"),
                    ))
                }
            }
        }
        Ok(found)
    }
}
