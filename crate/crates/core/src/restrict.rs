use crate::burnside::Burnside;
use crate::element::Element;
use crate::error::{EqqError, Result};
use crate::space::Space;
use std::fmt;

/// Singular cohomology of the underlying smooth quadric of dimension
/// 2(p-1), with the hyperplane class c and the two middle classes m0, m1.
///
/// Canonical form: a polynomial in c of degree < p-1, plus a polynomial
/// times m0 of c-degree < p, plus an integer multiple of bare m1. The
/// defining reductions are
///   c^{p-1} = m0 + m1,
///   c^k m1 = c^k m0          for k >= 1,
///   c^k m0 = 0               for k >= p,
///   m0^2 = m1^2 = c^{p-1} m0 (p odd) or 0 (p even),
///   m0 m1 = 0 (p odd) or c^{p-1} m0 (p even).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoneqQElem {
    pub p: u32,
    /// coefficient of c^k for 0 <= k <= p-2
    pub c_part: Vec<i64>,
    /// coefficient of c^k m0 for 0 <= k <= p-1
    pub m0_part: Vec<i64>,
    /// coefficient of m1
    pub m1: i64,
}

impl NoneqQElem {
    pub fn zero(p: u32) -> NoneqQElem {
        assert!(p >= 1);
        NoneqQElem {
            p,
            c_part: vec![0; (p - 1) as usize],
            m0_part: vec![0; p as usize],
            m1: 0,
        }
    }

    pub fn from_int(p: u32, n: i64) -> NoneqQElem {
        let mut out = Self::zero(p);
        out.add_c_pow(0, n);
        out
    }

    pub fn one(p: u32) -> NoneqQElem {
        Self::from_int(p, 1)
    }

    pub fn c(p: u32) -> NoneqQElem {
        let mut out = Self::zero(p);
        out.add_c_pow(1, 1);
        out
    }

    pub fn m(p: u32, parity: u32) -> NoneqQElem {
        let mut out = Self::zero(p);
        if parity % 2 == 0 {
            out.m0_part[0] = 1;
        } else {
            out.m1 = 1;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.c_part.iter().all(|&x| x == 0)
            && self.m0_part.iter().all(|&x| x == 0)
            && self.m1 == 0
    }

    /// Add coeff * c^k, reducing through c^{p-1} = m0 + m1.
    pub fn add_c_pow(&mut self, k: u32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let p = self.p as usize;
        let k = k as usize;
        if k < p - 1 {
            self.c_part[k] += coeff;
        } else if k == p - 1 {
            self.m0_part[0] += coeff;
            self.m1 += coeff;
        } else {
            // c^k = 2 c^{k-p+1} m0 once k-p+1 >= 1
            self.add_m0_pow((k - (p - 1)) as u32, 2 * coeff);
        }
    }

    /// Add coeff * c^k m0 (zero beyond the top degree).
    pub fn add_m0_pow(&mut self, k: u32, coeff: i64) {
        if (k as usize) < self.p as usize {
            self.m0_part[k as usize] += coeff;
        }
    }

    /// Add coeff * c^k m1.
    pub fn add_m1_pow(&mut self, k: u32, coeff: i64) {
        if k == 0 {
            self.m1 += coeff;
        } else {
            self.add_m0_pow(k, coeff);
        }
    }

    pub fn add(&self, o: &NoneqQElem) -> NoneqQElem {
        assert_eq!(self.p, o.p);
        let mut out = self.clone();
        for (x, y) in out.c_part.iter_mut().zip(&o.c_part) {
            *x += y;
        }
        for (x, y) in out.m0_part.iter_mut().zip(&o.m0_part) {
            *x += y;
        }
        out.m1 += o.m1;
        out
    }

    pub fn neg(&self) -> NoneqQElem {
        self.scale(-1)
    }

    pub fn sub(&self, o: &NoneqQElem) -> NoneqQElem {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> NoneqQElem {
        let mut out = self.clone();
        for x in out.c_part.iter_mut() {
            *x *= k;
        }
        for x in out.m0_part.iter_mut() {
            *x *= k;
        }
        out.m1 *= k;
        out
    }

    pub fn mul(&self, o: &NoneqQElem) -> NoneqQElem {
        assert_eq!(self.p, o.p);
        let p = self.p;
        let podd = p % 2 == 1;
        let mut out = Self::zero(p);
        // c^k * c^l
        for (k, &x) in self.c_part.iter().enumerate() {
            for (l, &y) in o.c_part.iter().enumerate() {
                out.add_c_pow((k + l) as u32, x * y);
            }
        }
        // c^k * c^l m0 both ways
        for (k, &x) in self.c_part.iter().enumerate() {
            for (l, &y) in o.m0_part.iter().enumerate() {
                out.add_m0_pow((k + l) as u32, x * y);
            }
        }
        for (k, &x) in o.c_part.iter().enumerate() {
            for (l, &y) in self.m0_part.iter().enumerate() {
                out.add_m0_pow((k + l) as u32, x * y);
            }
        }
        // c^k * m1 both ways
        for (k, &x) in self.c_part.iter().enumerate() {
            out.add_m1_pow(k as u32, x * o.m1);
        }
        for (k, &x) in o.c_part.iter().enumerate() {
            out.add_m1_pow(k as u32, x * self.m1);
        }
        // middle-class products: only c-degree 0 survives the cap. Squares
        // keep their own parity (visible only at p = 1, where the space is
        // two points and m0, m1 are idempotents).
        if podd {
            out.add_m0_pow(p - 1, self.m0_part[0] * o.m0_part[0]);
            out.add_m1_pow(p - 1, self.m1 * o.m1);
        } else {
            out.add_m0_pow(p - 1, self.m0_part[0] * o.m1 + self.m1 * o.m0_part[0]);
        }
        out
    }

    /// target = k * self for an integer k?
    pub fn integer_multiple_of(target: &NoneqQElem, base: &NoneqQElem) -> Option<i64> {
        assert_eq!(target.p, base.p);
        if base.is_zero() {
            return if target.is_zero() { Some(0) } else { None };
        }
        let pairs: Vec<(i64, i64)> = target
            .c_part
            .iter()
            .zip(&base.c_part)
            .chain(target.m0_part.iter().zip(&base.m0_part))
            .chain(std::iter::once((&target.m1, &base.m1)))
            .map(|(&t, &b)| (t, b))
            .collect();
        let (t0, b0) = pairs.iter().copied().find(|&(_, b)| b != 0)?;
        if t0 % b0 != 0 {
            return None;
        }
        let k = t0 / b0;
        pairs.iter().all(|&(t, b)| t == k * b).then_some(k)
    }
}

fn write_poly_term(
    f: &mut fmt::Formatter<'_>,
    first: &mut bool,
    coeff: i64,
    mono: &str,
) -> fmt::Result {
    if coeff == 0 {
        return Ok(());
    }
    let mag = coeff.abs();
    if *first {
        if coeff < 0 {
            write!(f, "-")?;
        }
        *first = false;
    } else if coeff < 0 {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if mono.is_empty() {
        write!(f, "{mag}")?;
    } else if mag == 1 {
        write!(f, "{mono}")?;
    } else {
        write!(f, "{mag} {mono}")?;
    }
    Ok(())
}

fn c_name(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "c".to_string(),
        _ => format!("c^{k}"),
    }
}

impl fmt::Display for NoneqQElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &x) in self.c_part.iter().enumerate() {
            write_poly_term(f, &mut first, x, &c_name(k))?;
        }
        for (k, &x) in self.m0_part.iter().enumerate() {
            let mono = if k == 0 {
                "m0".to_string()
            } else {
                format!("{} m0", c_name(k))
            };
            write_poly_term(f, &mut first, x, &mono)?;
        }
        write_poly_term(f, &mut first, self.m1, "m1")?;
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Cohomology of the fixed-point set: two components, each a truncated
/// polynomial ring Z[c]/(c^p).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedQElem {
    pub p: u32,
    pub comp0: Vec<i64>,
    pub comp1: Vec<i64>,
}

impl FixedQElem {
    pub fn zero(p: u32) -> FixedQElem {
        FixedQElem {
            p,
            comp0: vec![0; p as usize],
            comp1: vec![0; p as usize],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comp0.iter().all(|&x| x == 0) && self.comp1.iter().all(|&x| x == 0)
    }

    pub fn add_pow(&mut self, comp: usize, k: u32, coeff: i64) {
        if (k as usize) < self.p as usize {
            let target = if comp == 0 {
                &mut self.comp0
            } else {
                &mut self.comp1
            };
            target[k as usize] += coeff;
        }
    }

    pub fn add(&self, o: &FixedQElem) -> FixedQElem {
        assert_eq!(self.p, o.p);
        let mut out = self.clone();
        for (x, y) in out.comp0.iter_mut().zip(&o.comp0) {
            *x += y;
        }
        for (x, y) in out.comp1.iter_mut().zip(&o.comp1) {
            *x += y;
        }
        out
    }

    pub fn scale(&self, k: i64) -> FixedQElem {
        let mut out = self.clone();
        for x in out.comp0.iter_mut() {
            *x *= k;
        }
        for x in out.comp1.iter_mut() {
            *x *= k;
        }
        out
    }

    pub fn mul(&self, o: &FixedQElem) -> FixedQElem {
        assert_eq!(self.p, o.p);
        let mut out = Self::zero(self.p);
        for (k, &x) in self.comp0.iter().enumerate() {
            for (l, &y) in o.comp0.iter().enumerate() {
                out.add_pow(0, (k + l) as u32, x * y);
            }
        }
        for (k, &x) in self.comp1.iter().enumerate() {
            for (l, &y) in o.comp1.iter().enumerate() {
                out.add_pow(1, (k + l) as u32, x * y);
            }
        }
        out
    }

    pub fn integer_multiple_of(target: &FixedQElem, base: &FixedQElem) -> Option<i64> {
        assert_eq!(target.p, base.p);
        if base.is_zero() {
            return if target.is_zero() { Some(0) } else { None };
        }
        let pairs: Vec<(i64, i64)> = target
            .comp0
            .iter()
            .zip(&base.comp0)
            .chain(target.comp1.iter().zip(&base.comp1))
            .map(|(&t, &b)| (t, b))
            .collect();
        let (t0, b0) = pairs.iter().copied().find(|&(_, b)| b != 0)?;
        if t0 % b0 != 0 {
            return None;
        }
        let k = t0 / b0;
        pairs.iter().all(|&(t, b)| t == k * b).then_some(k)
    }
}

impl fmt::Display for FixedQElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |part: &[i64]| {
            let mut s = String::new();
            let mut first = true;
            for (k, &x) in part.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if first {
                    if x < 0 {
                        s.push('-');
                    }
                    first = false;
                } else if x < 0 {
                    s.push_str(" - ");
                } else {
                    s.push_str(" + ");
                }
                let mag = x.abs();
                let mono = c_name(k);
                if mono.is_empty() {
                    s.push_str(&mag.to_string());
                } else if mag == 1 {
                    s.push_str(&mono);
                } else {
                    s.push_str(&format!("{mag} {mono}"));
                }
            }
            if first {
                s.push('0');
            }
            s
        };
        write!(f, "({} | {})", side(&self.comp0), side(&self.comp1))
    }
}

fn require_quadric(space: Space, operation: &'static str) -> Result<u32> {
    space.quadric_p().ok_or_else(|| EqqError::SpaceMismatch {
        operation,
        space: space.to_string(),
    })
}

/// Restriction to the underlying nonequivariant space: zetas go to 1, both
/// Euler classes to c, and m_s to the middle class of its parity.
pub fn rho_quadric(e: &Element) -> Result<NoneqQElem> {
    let p = require_quadric(e.space, "restriction to the underlying space")?;
    let mut out = NoneqQElem::zero(p);
    for (mono, coeff) in &e.terms {
        let scalar = coeff.rho().scalar_sum();
        if scalar == 0 {
            continue;
        }
        let cdeg = mono.i + mono.j;
        match mono.m {
            None => out.add_c_pow(cdeg, scalar),
            Some(s) => {
                let mut term = NoneqQElem::zero(p);
                term.add_c_pow(cdeg, 1);
                out = out.add(&term.mul(&NoneqQElem::m(p, s % 2)).scale(scalar));
            }
        }
    }
    Ok(out)
}

/// Restriction to the fixed-point set. On component 0 the rule is
/// z0 -> 0, z1 -> 1, cw -> c, cxw -> 1, m_s -> c^s; component 1 is the
/// mirror with m_s -> c^{p-s}. Divided classes vanish on the side whose
/// zeta they invert.
pub fn fixed_quadric(e: &Element) -> Result<FixedQElem> {
    let p = require_quadric(e.space, "restriction to the fixed-point set")?;
    let mut out = FixedQElem::zero(p);
    for (mono, coeff) in &e.terms {
        let scalar = coeff.fixed();
        if scalar == 0 {
            continue;
        }
        if mono.a == 0 {
            let k = mono.i + mono.m.unwrap_or(0);
            out.add_pow(0, k, scalar);
        }
        if mono.b == 0 {
            let k = mono.j + mono.m.map_or(0, |s| p - s);
            out.add_pow(1, k, scalar);
        }
    }
    Ok(out)
}

/// Recover the Burnside coefficient of a basis monomial from its two
/// restriction images: the nonequivariant image pins down the ring map of
/// the coefficient, the fixed image pins down its augmentation, and the
/// two solve a + 2b, a.
pub fn solve_burnside_coeff(
    space: Space,
    mono: &crate::element::QMonomial,
    rho_target: &NoneqQElem,
    fixed_target: &FixedQElem,
) -> Result<Burnside> {
    let mut unit = Element::zero(space);
    unit.add_term(*mono, crate::hpoint::HElem::one());
    let rho_base = rho_quadric(&unit)?;
    let fixed_base = fixed_quadric(&unit)?;
    let r = NoneqQElem::integer_multiple_of(rho_target, &rho_base)
        .ok_or(EqqError::InconsistentTargets)?;
    let f = FixedQElem::integer_multiple_of(fixed_target, &fixed_base)
        .ok_or(EqqError::InconsistentTargets)?;
    Burnside::solve(r, f)
}
