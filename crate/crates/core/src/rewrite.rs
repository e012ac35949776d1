use crate::element::{Element, QMonomial};
use crate::error::{EqqError, Result};
use crate::grading::s_index;
use crate::hpoint::HElem;
use crate::space::Space;
use crate::staircase;
use std::collections::VecDeque;

/// A not-necessarily-normal product term mid-rewrite: exponents are
/// unconstrained and several m-factors may be present.
#[derive(Debug, Clone)]
pub struct RawTerm {
    pub coeff: HElem,
    pub a: i64,
    pub b: i64,
    pub i: i64,
    pub j: i64,
    /// m-class indices, kept sorted.
    pub ms: Vec<u32>,
}

impl RawTerm {
    pub fn new(coeff: HElem, a: i64, b: i64, i: i64, j: i64, ms: Vec<u32>) -> RawTerm {
        let mut ms = ms;
        ms.sort_unstable();
        RawTerm { coeff, a, b, i, j, ms }
    }

    fn from_monomial(mono: &QMonomial, coeff: HElem) -> RawTerm {
        RawTerm {
            coeff,
            a: mono.a,
            b: mono.b,
            i: mono.i as i64,
            j: mono.j as i64,
            ms: mono.m.into_iter().collect(),
        }
    }

    fn with(&self, da: i64, db: i64, di: i64, dj: i64, ms: Vec<u32>) -> RawTerm {
        RawTerm::new(
            self.coeff.clone(),
            self.a + da,
            self.b + db,
            self.i + di,
            self.j + dj,
            ms,
        )
    }

    fn describe(&self) -> String {
        format!(
            "z0^{} z1^{} cw^{} cxw^{} m{:?}",
            self.a, self.b, self.i, self.j, self.ms
        )
    }
}

/// Which of the two interchangeable simplification rules to try first, and
/// the worklist discipline. Both orders must produce the same normal form;
/// the confluence suite exercises exactly this.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Strategy {
    pub fifo: bool,
    pub zeta_pair_first: bool,
}

pub const DEFAULT_STRATEGY: Strategy = Strategy {
    fifo: false,
    zeta_pair_first: true,
};

pub const ALT_STRATEGY: Strategy = Strategy {
    fifo: true,
    zeta_pair_first: false,
};

const STEP_BUDGET: u64 = 1_000_000;

enum Step {
    Drop,
    Emit(QMonomial),
    Rewrite(Vec<RawTerm>),
}

/// Reduce a bag of raw terms to the normal form map.
pub fn reduce_raw(space: Space, terms: Vec<RawTerm>, strat: Strategy) -> Result<Element> {
    let mut budget = STEP_BUDGET;
    reduce_raw_budgeted(space, terms, strat, &mut budget)
}

fn reduce_raw_budgeted(
    space: Space,
    terms: Vec<RawTerm>,
    strat: Strategy,
    budget: &mut u64,
) -> Result<Element> {
    let mut out = Element::zero(space);
    let mut work: VecDeque<RawTerm> = terms.into();
    while let Some(term) = if strat.fifo {
        work.pop_front()
    } else {
        work.pop_back()
    } {
        if *budget == 0 {
            return Err(EqqError::InternalNonTerminating(STEP_BUDGET));
        }
        *budget -= 1;
        match step(space, &term, strat, budget)? {
            Step::Drop => {}
            Step::Emit(mono) => out.add_term(mono, term.coeff.clone()),
            Step::Rewrite(new_terms) => work.extend(new_terms),
        }
    }
    Ok(out)
}

fn step(space: Space, t: &RawTerm, strat: Strategy, budget: &mut u64) -> Result<Step> {
    if t.coeff.is_zero() {
        return Ok(Step::Drop);
    }
    if t.ms.len() >= 2 {
        return m_pair(space, t, strat, budget);
    }
    let caps = space.caps(t.ms.first().copied());
    if let Some((icap, jcap)) = caps {
        // c^p cx^q = 0 on a projective space, and the m-family analogue
        if t.i >= icap && t.j >= jcap {
            return Ok(Step::Drop);
        }
    }
    let zeta_pair = t.a >= 1 && t.b >= 1;
    let euler_pair = t.b >= 1 && t.j >= 1;
    if zeta_pair && (strat.zeta_pair_first || !euler_pair) {
        // z0 z1 = xi
        let k = t.a.min(t.b);
        let mut out = t.with(-k, -k, 0, 0, t.ms.clone());
        out.coeff = out.coeff.mul(&HElem::xi_pow(k as u32));
        return Ok(Step::Rewrite(vec![out]));
    }
    if euler_pair {
        // z1 cxw = (1 - kappa) z0 cw + e^2
        let mut lead = t.with(1, -1, 1, -1, t.ms.clone());
        lead.coeff = lead.coeff.mul(&HElem::from_burnside(crate::burnside::ONE_MINUS_KAPPA));
        let mut tail = t.with(0, -1, 0, -1, t.ms.clone());
        tail.coeff = tail.coeff.mul(&HElem::e_pow(2));
        return Ok(Step::Rewrite(vec![lead, tail]));
    }
    if zeta_pair {
        let k = t.a.min(t.b);
        let mut out = t.with(-k, -k, 0, 0, t.ms.clone());
        out.coeff = out.coeff.mul(&HElem::xi_pow(k as u32));
        return Ok(Step::Rewrite(vec![out]));
    }
    // convert a zeta power toxi times the opposite divided class wherever
    // the opposite zeta acts invertibly (saturated Euler exponent or an
    // already-divided monomial)
    if t.b >= 1 && (t.a < 0 || caps.is_some_and(|(icap, _)| t.i >= icap)) {
        let mut out = t.with(-t.b, -t.b, 0, 0, t.ms.clone());
        out.coeff = out.coeff.mul(&HElem::xi_pow(t.b as u32));
        return Ok(Step::Rewrite(vec![out]));
    }
    if t.a >= 1 && (t.b < 0 || caps.is_some_and(|(_, jcap)| t.j >= jcap)) {
        let mut out = t.with(-t.a, -t.a, 0, 0, t.ms.clone());
        out.coeff = out.coeff.mul(&HElem::xi_pow(t.a as u32));
        return Ok(Step::Rewrite(vec![out]));
    }
    // pure quadric monomials of total degree >= p split through the
    // cw^s cxw^{p-1-s} = z0 m_{s+1} + z1 m_s relation
    if t.ms.is_empty() {
        if let Some(p) = space.quadric_p() {
            let p = p as i64;
            if t.i + t.j >= p {
                let sig = (p - 1 - t.j).max(0);
                let (di, dj) = (-sig, -(p - 1 - sig));
                let lead = t.with(1, 0, di, dj, vec![sig as u32 + 1]);
                let tail = t.with(0, 1, di, dj, vec![sig as u32]);
                return Ok(Step::Rewrite(vec![lead, tail]));
            }
        }
    }
    // m-index slide toward the coset's own index
    if let &[s] = t.ms.as_slice() {
        let p = space.quadric_p().expect("m-class on a quadric") as i64;
        let n = -t.a + t.b + t.i - t.j + 2 * s as i64 - p;
        let sn = s_index(p as u32, n);
        if s > sn {
            return slide_down(t, s, p);
        }
        if s < sn {
            return slide_up(t, s, p);
        }
    }
    // pull overflowing Euler exponents back to the cap through
    // z0^2 cw = xi cxw + e^2 z0 and its mirror
    if let Some((icap, jcap)) = caps {
        if t.i > icap {
            return Ok(Step::Rewrite(shift_i_down(t)));
        }
        if t.j > jcap {
            return Ok(Step::Rewrite(shift_j_down(t)));
        }
    }
    terminal(space, t)
}

/// z0^2 cw = xi cxw + e^2 z0, applied to one cw.
fn shift_i_down(t: &RawTerm) -> Vec<RawTerm> {
    let mut lead = t.with(-2, 0, -1, 1, t.ms.clone());
    lead.coeff = lead.coeff.mul(&HElem::xi_pow(1));
    let mut tail = t.with(-1, 0, -1, 0, t.ms.clone());
    tail.coeff = tail.coeff.mul(&HElem::e_pow(2));
    vec![lead, tail]
}

/// z1^2 cxw = xi cw + e^2 z1, applied to one cxw.
fn shift_j_down(t: &RawTerm) -> Vec<RawTerm> {
    let mut lead = t.with(0, -2, 1, -1, t.ms.clone());
    lead.coeff = lead.coeff.mul(&HElem::xi_pow(1));
    let mut tail = t.with(0, -1, 0, -1, t.ms.clone());
    tail.coeff = tail.coeff.mul(&HElem::e_pow(2));
    vec![lead, tail]
}

/// m_s -> m_{s-1} moves for s above the coset index.
fn slide_down(t: &RawTerm, s: u32, p: i64) -> Result<Step> {
    if t.j >= 1 {
        // cxw m_s = cw m_{s-1}
        return Ok(Step::Rewrite(vec![t.with(0, 0, 1, -1, vec![s - 1])]));
    }
    if t.a >= 2 && t.i >= 1 {
        return Ok(Step::Rewrite(shift_i_down(t)));
    }
    if t.a >= 1 {
        // z0 m_s = cw^{s-1} cxw^{p-s} - z1 m_{s-1}
        let lead = t.with(-1, 0, s as i64 - 1, p - s as i64, vec![]);
        let mut tail = t.with(-1, 1, 0, 0, vec![s - 1]);
        tail.coeff = tail.coeff.neg();
        return Ok(Step::Rewrite(vec![lead, tail]));
    }
    Err(EqqError::InternalStuck(t.describe()))
}

/// m_s -> m_{s+1} moves for s below the coset index.
fn slide_up(t: &RawTerm, s: u32, p: i64) -> Result<Step> {
    if t.i >= 1 {
        // cw m_s = cxw m_{s+1}
        return Ok(Step::Rewrite(vec![t.with(0, 0, -1, 1, vec![s + 1])]));
    }
    if t.b >= 2 && t.j >= 1 {
        return Ok(Step::Rewrite(shift_j_down(t)));
    }
    if t.b >= 1 {
        // z1 m_s = cw^s cxw^{p-1-s} - z0 m_{s+1}
        let lead = t.with(0, -1, s as i64, p - 1 - s as i64, vec![]);
        let mut tail = t.with(1, -1, 0, 0, vec![s + 1]);
        tail.coeff = tail.coeff.neg();
        return Ok(Step::Rewrite(vec![lead, tail]));
    }
    Err(EqqError::InternalStuck(t.describe()))
}

/// Walk caps and shifted coset for the family the term lives in.
fn walk_params(space: Space, t: &RawTerm) -> (u32, u32, i64) {
    match t.ms.as_slice() {
        &[s] => {
            let p = space.quadric_p().expect("m-class on a quadric");
            (p - s, s, -t.a + t.b + t.i - t.j)
        }
        &[] => match space {
            Space::Proj { p, q } => (p, q, -t.a + t.b + t.i - t.j),
            _ => {
                let p = space.quadric_p().expect("quadric-like");
                let n = -t.a + t.b + t.i - t.j;
                let sn = s_index(p, n);
                (sn, p - sn, n)
            }
        },
        _ => unreachable!("m-pairs eliminated before the terminal check"),
    }
}

fn terminal(space: Space, t: &RawTerm) -> Result<Step> {
    let (wp, wq, nprime) = walk_params(space, t);
    let tdeg = t.i + t.j;
    let cell = staircase::cell_at(wp, wq, nprime, tdeg)
        .ok_or_else(|| EqqError::InternalStuck(t.describe()))?;
    if (t.i, t.j) == (cell.i, cell.j) {
        if (t.a, t.b) != (cell.a, cell.b) {
            return Err(EqqError::InternalStuck(t.describe()));
        }
        let mono = QMonomial {
            a: t.a,
            b: t.b,
            i: t.i as u32,
            j: t.j as u32,
            m: t.ms.first().copied(),
        };
        debug_assert!(mono.respects_caps(space), "emit {}", t.describe());
        return Ok(Step::Emit(mono));
    }
    if t.i > cell.i && t.a >= 2 {
        return Ok(Step::Rewrite(shift_i_down(t)));
    }
    if t.i < cell.i && t.b >= 2 && t.j >= 1 {
        return Ok(Step::Rewrite(shift_j_down(t)));
    }
    Err(EqqError::InternalStuck(t.describe()))
}

/// Eliminate one m-pair m_x m_y (x <= y) from the term.
///
/// For x + y = p the product is zero. Otherwise the proof of the m-product
/// reduction applies the cw^s cxw^{p-1-s} = z0 m_{s+1} + z1 m_s relation
/// r = |x + y - p| times, leaving a zeta-power times a sum of dressed
/// m_x-terms; the zeta-power is then divided off (division is exact there).
fn m_pair(space: Space, t: &RawTerm, strat: Strategy, budget: &mut u64) -> Result<Step> {
    let x = t.ms[0];
    let y = t.ms[1];
    let rest: Vec<u32> = t.ms[2..].to_vec();
    let p = space.quadric_p().expect("m-classes live on quadrics") as i64;
    let (xi, yi) = (x as i64, y as i64);
    if xi + yi == p {
        return Ok(Step::Drop);
    }
    let mut sum: Vec<RawTerm> = Vec::new();
    let r = (xi + yi - p).abs();
    for k in 0..r {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let (a, b, i, j) = if xi + yi > p {
            (r - 1 - k, k, yi - 1 - k, p - yi + k)
        } else {
            (k, r - 1 - k, yi + k, p - 1 - yi - k)
        };
        sum.push(RawTerm::new(
            HElem::from_int(sign),
            a,
            b,
            i,
            j,
            vec![x],
        ));
    }
    let reduced = reduce_raw_budgeted(space, sum, strat, budget)?;
    let zeta = if xi + yi > p { Zeta::Z0 } else { Zeta::Z1 };
    let mut quotient = reduced;
    for _ in 0..r {
        quotient = divide_once(&quotient, zeta, strat, budget).map_err(|e| match e {
            EqqError::NotDivisible { divisor, power } => {
                EqqError::InternalNonDivisible(format!("{divisor}^{power} in m-pair elimination"))
            }
            other => other,
        })?;
    }
    // multiply the eliminated pair's value back into the remaining factor
    let out = quotient
        .terms
        .iter()
        .map(|(mono, coeff)| {
            let mut ms: Vec<u32> = mono.m.into_iter().chain(rest.iter().copied()).collect();
            ms.sort_unstable();
            RawTerm::new(
                t.coeff.mul(coeff),
                t.a + mono.a,
                t.b + mono.b,
                t.i + mono.i as i64,
                t.j + mono.j as i64,
                ms,
            )
        })
        .collect();
    Ok(Step::Rewrite(out))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Zeta {
    Z0,
    Z1,
}

impl Zeta {
    pub fn name(self) -> &'static str {
        match self {
            Zeta::Z0 => "z0",
            Zeta::Z1 => "z1",
        }
    }
}

fn divide_once(
    e: &Element,
    zeta: Zeta,
    strat: Strategy,
    budget: &mut u64,
) -> Result<Element> {
    let mut raw = Vec::new();
    for (mono, coeff) in &e.terms {
        let caps = e.space.caps(mono.m);
        let term = RawTerm::from_monomial(mono, coeff.clone());
        let divided = match zeta {
            Zeta::Z0 => {
                if term.a >= 1 {
                    Some(term.with(-1, 0, 0, 0, term.ms.clone()))
                } else if let Some(q) = coeff.div_xi() {
                    // z0 = xi / z1
                    let mut t = term.with(0, 1, 0, 0, term.ms.clone());
                    t.coeff = q;
                    Some(t)
                } else if caps.is_some_and(|(icap, _)| term.i >= icap) {
                    Some(term.with(-1, 0, 0, 0, term.ms.clone()))
                } else {
                    None
                }
            }
            Zeta::Z1 => {
                if term.b >= 1 {
                    Some(term.with(0, -1, 0, 0, term.ms.clone()))
                } else if let Some(q) = coeff.div_xi() {
                    let mut t = term.with(1, 0, 0, 0, term.ms.clone());
                    t.coeff = q;
                    Some(t)
                } else if caps.is_some_and(|(_, jcap)| term.j >= jcap) {
                    Some(term.with(0, -1, 0, 0, term.ms.clone()))
                } else {
                    None
                }
            }
        };
        match divided {
            Some(t) => raw.push(t),
            None => {
                return Err(EqqError::NotDivisible {
                    divisor: zeta.name().to_string(),
                    power: 1,
                })
            }
        }
    }
    reduce_raw_budgeted(e.space, raw, strat, budget)
}

/// Divide by zeta^k; errors with NotDivisible when some term resists.
pub fn divide(e: &Element, zeta: Zeta, k: u32) -> Result<Element> {
    divide_with(e, zeta, k, DEFAULT_STRATEGY)
}

pub fn divide_with(e: &Element, zeta: Zeta, k: u32, strat: Strategy) -> Result<Element> {
    let mut budget = STEP_BUDGET;
    let mut cur = reduce_raw_budgeted(
        e.space,
        e.terms
            .iter()
            .map(|(m, c)| RawTerm::from_monomial(m, c.clone()))
            .collect(),
        strat,
        &mut budget,
    )?;
    for step in 0..k {
        cur = divide_once(&cur, zeta, strat, &mut budget).map_err(|err| match err {
            EqqError::NotDivisible { divisor, .. } => EqqError::NotDivisible {
                divisor,
                power: (k - step) as i64,
            },
            other => other,
        })?;
    }
    Ok(cur)
}

/// Re-reduce an element (idempotent on normal forms).
pub fn reduce(e: &Element) -> Result<Element> {
    reduce_with(e, DEFAULT_STRATEGY)
}

pub fn reduce_with(e: &Element, strat: Strategy) -> Result<Element> {
    let raw = e
        .terms
        .iter()
        .map(|(m, c)| RawTerm::from_monomial(m, c.clone()))
        .collect();
    reduce_raw(e.space, raw, strat)
}

pub fn mul(x: &Element, y: &Element) -> Result<Element> {
    mul_with(x, y, DEFAULT_STRATEGY)
}

pub fn mul_with(x: &Element, y: &Element, strat: Strategy) -> Result<Element> {
    x.check_same_space(y, "multiplying elements of different spaces")?;
    let mut raw = Vec::new();
    for (m1, c1) in &x.terms {
        for (m2, c2) in &y.terms {
            let mut ms: Vec<u32> = m1.m.into_iter().chain(m2.m).collect();
            ms.sort_unstable();
            raw.push(RawTerm::new(
                c1.mul(c2),
                m1.a + m2.a,
                m1.b + m2.b,
                m1.i as i64 + m2.i as i64,
                m1.j as i64 + m2.j as i64,
                ms,
            ));
        }
    }
    reduce_raw(x.space, raw, strat)
}

/// Integer power of an element (k >= 0).
pub fn pow(x: &Element, k: u32) -> Result<Element> {
    let mut acc = Element::one(x.space);
    for _ in 0..k {
        acc = mul(&acc, x)?;
    }
    Ok(acc)
}
