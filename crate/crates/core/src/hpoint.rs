use crate::burnside::{self, Burnside};
use crate::error::{EqqError, Result};
use crate::grading::Grading;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Non-unit additive generators of the cohomology of a point.
///
/// Gradings are written u + s*sigma and stored as (u, s) below:
///   E(a)        = e^a            at (0, a), a >= 1, infinite cyclic
///   Xi(b)       = xi^b           at (-2b, 2b), b >= 1, infinite cyclic
///   EXi(a, b)   = e^a xi^b       at (-2b, a + 2b), a, b >= 1, order 2
///   NegKappa(m) = e^-m kappa     at (0, -m), m >= 1, infinite cyclic
///   TauNeg(n)   = tau(iota^-n)   at (n, -n), n >= 2, infinite cyclic for n
///                 even and order 2 for n odd
///
/// The unit grading (0, 0) carries the Burnside ring and is kept separately
/// in `HElem`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum HSym {
    E(u32),
    Xi(u32),
    EXi(u32, u32),
    NegKappa(u32),
    TauNeg(u32),
}

impl HSym {
    pub fn grading(self) -> Grading {
        match self {
            HSym::E(a) => Grading::new(0, a as i64, 0),
            HSym::Xi(b) => Grading::new(-2 * b as i64, 2 * b as i64, 0),
            HSym::EXi(a, b) => Grading::new(-2 * b as i64, a as i64 + 2 * b as i64, 0),
            HSym::NegKappa(m) => Grading::new(0, -(m as i64), 0),
            HSym::TauNeg(n) => Grading::new(n as i64, -(n as i64), 0),
        }
    }

    /// True when the generator has order 2.
    pub fn is_torsion(self) -> bool {
        match self {
            HSym::EXi(..) => true,
            HSym::TauNeg(n) => n % 2 == 1,
            _ => false,
        }
    }

    /// Multiplier picked up under multiplication by g = tau(1): g acts as
    /// tau(rho(-)) on these classes.
    fn g_factor(self) -> i64 {
        match self {
            HSym::E(_) | HSym::EXi(..) | HSym::NegKappa(_) => 0,
            HSym::Xi(_) | HSym::TauNeg(_) => 2,
        }
    }
}

/// An element of the cohomology of a point: a Burnside-ring part in the unit
/// grading plus an integer combination of the `HSym` generators (coefficients
/// of order-2 generators stored reduced to {0, 1}).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct HElem {
    pub unit: Burnside,
    // serialized as a pair list: JSON maps take string keys only
    #[serde(with = "sym_map")]
    pub terms: BTreeMap<HSym, i64>,
}

mod sym_map {
    use super::HSym;
    use serde::{Deserialize, Deserializer, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<HSym, i64>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        ser.collect_seq(map.iter())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        de: D,
    ) -> Result<BTreeMap<HSym, i64>, D::Error> {
        Ok(Vec::<(HSym, i64)>::deserialize(de)?.into_iter().collect())
    }
}

/// The group seen at a single grading of the point ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupAt {
    /// The unit grading: a copy of the Burnside ring.
    BurnsideSlot,
    /// Infinite cyclic on the given generator.
    Z(HSym),
    /// Order two on the given generator.
    Z2(HSym),
    Zero,
}

impl HElem {
    pub fn zero() -> HElem {
        HElem::default()
    }

    pub fn one() -> HElem {
        HElem::from_burnside(burnside::ONE)
    }

    pub fn from_burnside(u: Burnside) -> HElem {
        HElem {
            unit: u,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_int(n: i64) -> HElem {
        HElem::from_burnside(Burnside::from_int(n))
    }

    pub fn sym(s: HSym) -> HElem {
        HElem::sym_scaled(s, 1)
    }

    pub fn sym_scaled(s: HSym, c: i64) -> HElem {
        let mut h = HElem::zero();
        h.add_sym(s, c);
        h
    }

    /// e^a (a = 0 gives the unit).
    pub fn e_pow(a: u32) -> HElem {
        if a == 0 {
            HElem::one()
        } else {
            HElem::sym(HSym::E(a))
        }
    }

    /// xi^b (b = 0 gives the unit).
    pub fn xi_pow(b: u32) -> HElem {
        if b == 0 {
            HElem::one()
        } else {
            HElem::sym(HSym::Xi(b))
        }
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero() && self.terms.is_empty()
    }

    fn add_sym(&mut self, s: HSym, c: i64) {
        let c = if s.is_torsion() { c.rem_euclid(2) } else { c };
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(s).or_insert(0);
        *entry += c;
        if s.is_torsion() {
            *entry = entry.rem_euclid(2);
        }
        if *entry == 0 {
            self.terms.remove(&s);
        }
    }

    pub fn add(&self, o: &HElem) -> HElem {
        let mut out = self.clone();
        out.unit = out.unit.add(o.unit);
        for (&s, &c) in &o.terms {
            out.add_sym(s, c);
        }
        out
    }

    pub fn neg(&self) -> HElem {
        let mut out = HElem::from_burnside(self.unit.neg());
        for (&s, &c) in &self.terms {
            out.add_sym(s, -c);
        }
        out
    }

    pub fn sub(&self, o: &HElem) -> HElem {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> HElem {
        let mut out = HElem::from_burnside(self.unit.scale(k));
        for (&s, &c) in &self.terms {
            out.add_sym(s, k * c);
        }
        out
    }

    pub fn mul(&self, o: &HElem) -> HElem {
        let mut out = HElem::from_burnside(self.unit.mul(o.unit));
        // unit x symbol, both ways: (a + bg) s = (a + b * g_factor(s)) s
        for (&s, &c) in &o.terms {
            let mult = self.unit.a + self.unit.b * s.g_factor();
            out.add_sym(s, mult * c);
        }
        for (&s, &c) in &self.terms {
            let mult = o.unit.a + o.unit.b * s.g_factor();
            out.add_sym(s, mult * c);
        }
        for (&s1, &c1) in &self.terms {
            for (&s2, &c2) in &o.terms {
                let prod = sym_mul(s1, s2);
                out = out.add(&prod.scale(c1 * c2));
            }
        }
        out
    }

    /// Restriction to the nonequivariant point: lands in Z[iota, iota^-1].
    pub fn rho(&self) -> IotaElem {
        let mut out = IotaElem::zero();
        out.add_term(0, self.unit.rho());
        for (&s, &c) in &self.terms {
            match s {
                HSym::Xi(b) => out.add_term(2 * b as i64, c),
                HSym::TauNeg(n) if n % 2 == 0 => out.add_term(-(n as i64), 2 * c),
                _ => {}
            }
        }
        out
    }

    /// Restriction to the fixed point, a single integer per class.
    pub fn fixed(&self) -> i64 {
        let mut out = self.unit.fixed();
        for (&s, &c) in &self.terms {
            match s {
                HSym::E(_) => out += c,
                HSym::NegKappa(_) => out += 2 * c,
                _ => {}
            }
        }
        out
    }

    /// Division by xi, defined exactly on the image of multiplication by xi.
    pub fn div_xi(&self) -> Option<HElem> {
        let mut out = HElem::zero();
        if self.unit.a != 0 {
            return None;
        }
        // g = xi * tau(iota^-2)
        if self.unit.b != 0 {
            out.add_sym(HSym::TauNeg(2), self.unit.b);
        }
        for (&s, &c) in &self.terms {
            match s {
                HSym::Xi(1) => out.unit = out.unit.add(Burnside::from_int(c)),
                HSym::Xi(b) => out.add_sym(HSym::Xi(b - 1), c),
                HSym::EXi(a, 1) => out.add_sym(HSym::E(a), c),
                HSym::EXi(a, b) => out.add_sym(HSym::EXi(a, b - 1), c),
                HSym::TauNeg(n) => out.add_sym(HSym::TauNeg(n + 2), c),
                HSym::E(_) | HSym::NegKappa(_) => return None,
            }
        }
        Some(out)
    }

    /// The grading if homogeneous (None for zero), error when mixed.
    pub fn grading(&self) -> Result<Option<Grading>> {
        let mut found: Option<Grading> = None;
        let mut consider = |g: Grading| -> Result<()> {
            match found {
                None => {
                    found = Some(g);
                    Ok(())
                }
                Some(prev) if prev == g => Ok(()),
                Some(prev) => Err(EqqError::NotHomogeneous(prev.to_string(), g.to_string())),
            }
        };
        if !self.unit.is_zero() {
            consider(crate::grading::ZERO)?;
        }
        for &s in self.terms.keys() {
            consider(s.grading())?;
        }
        Ok(found)
    }
}

/// tau applied to a single power iota^k of the nonequivariant unit sphere
/// class: tau(1) = g, tau(iota^{2m}) = 2 xi^m for m >= 1, tau of positive odd
/// powers and of iota^-1 is 0, and tau(iota^-n) for n >= 2 is the TauNeg
/// generator.
pub fn tau_iota(k: i64) -> HElem {
    if k == 0 {
        HElem::from_burnside(burnside::G)
    } else if k >= 2 && k % 2 == 0 {
        HElem::sym_scaled(HSym::Xi((k / 2) as u32), 2)
    } else if k >= 1 || k == -1 {
        HElem::zero()
    } else {
        HElem::sym(HSym::TauNeg((-k) as u32))
    }
}

/// tau of a full element of Z[iota, iota^-1] (additive).
pub fn tau(x: &IotaElem) -> HElem {
    let mut out = HElem::zero();
    for (&k, &c) in &x.terms {
        out = out.add(&tau_iota(k).scale(c));
    }
    out
}

fn sym_mul(s1: HSym, s2: HSym) -> HElem {
    use HSym::*;
    // tau-classes first: b tau(a) = tau(rho(b) a) settles all of them.
    if let TauNeg(n) = s2 {
        return match s1 {
            E(_) | EXi(..) | NegKappa(_) => HElem::zero(),
            Xi(b) => tau_iota(2 * b as i64 - n as i64),
            // rho(tau(iota^-n)) carries the conjugation sign (-1)^n, so the
            // restricted factor dies unless n is even
            TauNeg(n1) if n % 2 == 1 || n1 % 2 == 1 => HElem::zero(),
            TauNeg(n1) => tau_iota(-(n1 as i64) - n as i64).scale(2),
        };
    }
    if let TauNeg(_) = s1 {
        return sym_mul(s2, s1);
    }
    match (s1, s2) {
        (E(a1), E(a2)) => HElem::sym(E(a1 + a2)),
        (E(a), Xi(b)) | (Xi(b), E(a)) => HElem::sym(EXi(a, b)),
        (E(a1), EXi(a2, b)) | (EXi(a2, b), E(a1)) => HElem::sym(EXi(a1 + a2, b)),
        (E(a), NegKappa(m)) | (NegKappa(m), E(a)) => match a.cmp(&m) {
            std::cmp::Ordering::Less => HElem::sym(NegKappa(m - a)),
            std::cmp::Ordering::Equal => HElem::from_burnside(burnside::KAPPA),
            std::cmp::Ordering::Greater => HElem::sym_scaled(E(a - m), 2),
        },
        (Xi(b1), Xi(b2)) => HElem::sym(Xi(b1 + b2)),
        (Xi(b1), EXi(a, b2)) | (EXi(a, b2), Xi(b1)) => HElem::sym(EXi(a, b1 + b2)),
        // kappa xi = 0, hence kappa (e^a xi^b) = 0 as well
        (Xi(_), NegKappa(_)) | (NegKappa(_), Xi(_)) => HElem::zero(),
        (EXi(a1, b1), EXi(a2, b2)) => HElem::sym(EXi(a1 + a2, b1 + b2)),
        (EXi(..), NegKappa(_)) | (NegKappa(_), EXi(..)) => HElem::zero(),
        (NegKappa(m1), NegKappa(m2)) => HElem::sym_scaled(NegKappa(m1 + m2), 2),
        (TauNeg(_), _) | (_, TauNeg(_)) => unreachable!("handled above"),
    }
}

/// The group at grading u + s*sigma (argument order (u, s)).
pub fn group_at(u: i64, s: i64) -> Result<GroupAt> {
    if u == 0 && s == 0 {
        return Ok(GroupAt::BurnsideSlot);
    }
    if u == 0 {
        return Ok(if s > 0 {
            GroupAt::Z(HSym::E(s as u32))
        } else {
            GroupAt::Z(HSym::NegKappa((-s) as u32))
        });
    }
    if u < 0 {
        if u % 2 != 0 {
            return Ok(GroupAt::Zero);
        }
        let k = (-u / 2) as u32;
        return Ok(match s - 2 * k as i64 {
            0 => GroupAt::Z(HSym::Xi(k)),
            d if d > 0 => GroupAt::Z2(HSym::EXi(d as u32, k)),
            _ => GroupAt::Zero,
        });
    }
    // u > 0
    if s >= 0 {
        return Ok(GroupAt::Zero);
    }
    if u == -s {
        let n = u;
        return Ok(if n == 1 {
            GroupAt::Zero
        } else if n % 2 == 0 {
            GroupAt::Z(HSym::TauNeg(n as u32))
        } else {
            GroupAt::Z2(HSym::TauNeg(n as u32))
        });
    }
    Err(EqqError::OutOfScopeRegion { a: u, b: s })
}

impl fmt::Display for HSym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn pow(f: &mut fmt::Formatter<'_>, name: &str, k: u32) -> fmt::Result {
            if k == 1 {
                write!(f, "{name}")
            } else {
                write!(f, "{name}^{k}")
            }
        }
        match self {
            HSym::E(a) => pow(f, "e", *a),
            HSym::Xi(b) => pow(f, "xi", *b),
            HSym::EXi(a, b) => {
                pow(f, "e", *a)?;
                write!(f, " ")?;
                pow(f, "xi", *b)
            }
            HSym::NegKappa(m) => write!(f, "e^-{m} kappa"),
            HSym::TauNeg(n) => write!(f, "tau(iota^-{n})"),
        }
    }
}

impl fmt::Display for HElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<(bool, String)> = Vec::new(); // (negative, body)
        if !self.unit.is_zero() {
            let u = self.unit;
            // render -k and -kg with the sign outside
            if u.b == 0 {
                parts.push((u.a < 0, u.a.abs().to_string()));
            } else if u.a == 0 {
                let mag = u.b.abs();
                let body = if mag == 1 { "g".into() } else { format!("{mag}g") };
                parts.push((u.b < 0, body));
            } else {
                parts.push((false, u.to_string()));
            }
        }
        for (&s, &c) in &self.terms {
            let (neg, mag) = (c < 0, c.abs());
            let body = if mag == 1 {
                s.to_string()
            } else {
                format!("{mag} {s}")
            };
            parts.push((neg, body));
        }
        for (idx, (neg, body)) in parts.iter().enumerate() {
            if idx == 0 {
                if *neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if *neg { " - " } else { " + " })?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

/// An element of Z[iota, iota^-1], the nonequivariant cohomology of a point
/// in all integer gradings; keyed by the iota-exponent.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IotaElem {
    pub terms: BTreeMap<i64, i64>,
}

impl IotaElem {
    pub fn zero() -> IotaElem {
        IotaElem::default()
    }

    pub fn from_int(c: i64) -> IotaElem {
        let mut x = IotaElem::zero();
        x.add_term(0, c);
        x
    }

    pub fn iota_pow(k: i64) -> IotaElem {
        let mut x = IotaElem::zero();
        x.add_term(k, 1);
        x
    }

    pub fn add_term(&mut self, k: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(k).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &IotaElem) -> IotaElem {
        let mut out = self.clone();
        for (&k, &c) in &o.terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn neg(&self) -> IotaElem {
        let mut out = IotaElem::zero();
        for (&k, &c) in &self.terms {
            out.add_term(k, -c);
        }
        out
    }

    pub fn mul(&self, o: &IotaElem) -> IotaElem {
        let mut out = IotaElem::zero();
        for (&k1, &c1) in &self.terms {
            for (&k2, &c2) in &o.terms {
                out.add_term(k1 + k2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> IotaElem {
        let mut out = IotaElem::zero();
        for (&e, &c) in &self.terms {
            out.add_term(e, c * k);
        }
        out
    }

    /// The coefficient of iota^0 if the element is concentrated there.
    pub fn as_scalar(&self) -> Option<i64> {
        if self.terms.is_empty() {
            Some(0)
        } else if self.terms.len() == 1 {
            self.terms.get(&0).copied()
        } else {
            None
        }
    }

    /// Forget the iota-grading: sum of all coefficients. Used when restriction
    /// targets a plain polynomial ring where iota acts as 1.
    pub fn scalar_sum(&self) -> i64 {
        self.terms.values().sum()
    }
}

impl fmt::Display for IotaElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, &c) in &self.terms {
            let neg = c < 0;
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else {
                if mag != 1 {
                    write!(f, "{mag} ")?;
                }
                if k == 1 {
                    write!(f, "iota")?;
                } else {
                    write!(f, "iota^{k}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{G, KAPPA};

    fn e() -> HElem {
        HElem::sym(HSym::E(1))
    }
    fn xi() -> HElem {
        HElem::sym(HSym::Xi(1))
    }
    fn g() -> HElem {
        HElem::from_burnside(G)
    }
    fn kappa() -> HElem {
        HElem::from_burnside(KAPPA)
    }

    #[test]
    fn unit_action() {
        assert_eq!(g().mul(&e()), HElem::zero());
        assert_eq!(g().mul(&xi()), xi().scale(2));
        assert_eq!(kappa().mul(&xi()), HElem::zero());
        assert_eq!(kappa().mul(&e()), e().scale(2));
        assert_eq!(
            g().mul(&HElem::sym(HSym::TauNeg(2))),
            HElem::sym_scaled(HSym::TauNeg(2), 2)
        );
        assert_eq!(g().mul(&HElem::sym(HSym::NegKappa(3))), HElem::zero());
    }

    #[test]
    fn two_e_xi_is_zero() {
        let exi = e().mul(&xi());
        assert_eq!(exi, HElem::sym(HSym::EXi(1, 1)));
        assert_eq!(exi.scale(2), HElem::zero());
        // and e^a xi^b likewise
        assert_eq!(
            HElem::sym(HSym::EXi(3, 2)).scale(5),
            HElem::sym(HSym::EXi(3, 2))
        );
    }

    #[test]
    fn neg_kappa_products() {
        let ek = |m| HElem::sym(HSym::NegKappa(m));
        // e^m * e^-m kappa = kappa
        assert_eq!(HElem::e_pow(3).mul(&ek(3)), kappa());
        // e^-1 kappa * e^-1 kappa = 2 e^-2 kappa
        assert_eq!(ek(1).mul(&ek(1)), HElem::sym_scaled(HSym::NegKappa(2), 2));
        // g e^-m kappa = 0
        assert_eq!(g().mul(&ek(2)), HElem::zero());
        // e^5 * e^-2 kappa = 2 e^3
        assert_eq!(HElem::e_pow(5).mul(&ek(2)), HElem::sym_scaled(HSym::E(3), 2));
        // xi * e^-m kappa = 0
        assert_eq!(xi().mul(&ek(1)), HElem::zero());
    }

    #[test]
    fn tau_values() {
        assert_eq!(tau_iota(0), g());
        assert_eq!(tau_iota(2), xi().scale(2));
        assert_eq!(tau_iota(4), HElem::sym_scaled(HSym::Xi(2), 2));
        assert_eq!(tau_iota(1), HElem::zero());
        assert_eq!(tau_iota(3), HElem::zero());
        assert_eq!(tau_iota(-1), HElem::zero());
        assert_eq!(tau_iota(-2), HElem::sym(HSym::TauNeg(2)));
        assert_eq!(tau_iota(-3), HElem::sym(HSym::TauNeg(3)));
    }

    #[test]
    fn frobenius_products() {
        // xi^b tau(iota^-n) = tau(iota^{2b-n})
        let t2 = HElem::sym(HSym::TauNeg(2));
        assert_eq!(xi().mul(&t2), g());
        assert_eq!(HElem::xi_pow(2).mul(&t2), xi().scale(2));
        assert_eq!(e().mul(&t2), HElem::zero());
        // tau tau = 2 tau of the product
        let t4 = HElem::sym(HSym::TauNeg(4));
        assert_eq!(t2.mul(&t2), HElem::sym_scaled(HSym::TauNeg(4), 2));
        assert_eq!(t2.mul(&HElem::sym(HSym::TauNeg(3))), HElem::zero()); // 2 * torsion
        assert_eq!(t4.mul(&t2), HElem::sym_scaled(HSym::TauNeg(6), 2));
    }

    #[test]
    fn rho_values() {
        assert_eq!(g().rho(), IotaElem::from_int(2));
        assert_eq!(xi().rho(), IotaElem::iota_pow(2));
        assert_eq!(e().rho(), IotaElem::zero());
        assert_eq!(kappa().rho(), IotaElem::zero());
        assert_eq!(
            HElem::sym(HSym::TauNeg(2)).rho(),
            IotaElem::iota_pow(-2).scale(2)
        );
        assert_eq!(HElem::sym(HSym::TauNeg(3)).rho(), IotaElem::zero());
        assert_eq!(HElem::sym(HSym::NegKappa(1)).rho(), IotaElem::zero());
    }

    #[test]
    fn fixed_values() {
        assert_eq!(g().fixed(), 0);
        assert_eq!(kappa().fixed(), 2);
        assert_eq!(e().fixed(), 1);
        assert_eq!(HElem::e_pow(4).fixed(), 1);
        assert_eq!(HElem::sym(HSym::NegKappa(2)).fixed(), 2);
        assert_eq!(xi().fixed(), 0);
        assert_eq!(HElem::sym(HSym::TauNeg(2)).fixed(), 0);
    }

    #[test]
    fn rho_is_multiplicative_on_samples() {
        let xs = [
            g(),
            kappa(),
            e(),
            xi(),
            HElem::sym(HSym::TauNeg(2)),
            HElem::sym(HSym::TauNeg(4)),
            HElem::sym(HSym::NegKappa(1)),
            HElem::e_pow(2).add(&g()),
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(x.mul(y).rho(), x.rho().mul(&y.rho()), "rho({x} * {y})");
                assert_eq!(x.mul(y).fixed(), x.fixed() * y.fixed(), "fixed({x} * {y})");
            }
        }
    }

    #[test]
    fn div_xi_round_trips() {
        let samples = [
            xi(),
            HElem::xi_pow(3).scale(5),
            HElem::sym(HSym::EXi(2, 1)),
            HElem::sym(HSym::EXi(2, 3)),
            g(),
            HElem::sym(HSym::TauNeg(2)),
            HElem::sym_scaled(HSym::TauNeg(5), 1),
            xi().scale(3).add(&HElem::sym(HSym::EXi(1, 2))),
        ];
        for x in &samples {
            let q = x.div_xi().unwrap_or_else(|| panic!("{x} should divide"));
            assert_eq!(q.mul(&xi()), *x, "xi * ({x} / xi)");
        }
        assert!(HElem::one().div_xi().is_none());
        assert!(e().div_xi().is_none());
        assert!(kappa().div_xi().is_none());
    }

    #[test]
    fn group_at_axes_and_quadrants() {
        use GroupAt::*;
        assert_eq!(group_at(0, 0).unwrap(), BurnsideSlot);
        assert_eq!(group_at(0, 3).unwrap(), Z(HSym::E(3)));
        assert_eq!(group_at(0, -2).unwrap(), Z(HSym::NegKappa(2)));
        assert_eq!(group_at(-2, 2).unwrap(), Z(HSym::Xi(1)));
        assert_eq!(group_at(-4, 7).unwrap(), Z2(HSym::EXi(3, 2)));
        assert_eq!(group_at(-4, 3).unwrap(), Zero);
        assert_eq!(group_at(-3, 5).unwrap(), Zero);
        assert_eq!(group_at(2, -2).unwrap(), Z(HSym::TauNeg(2)));
        assert_eq!(group_at(3, -3).unwrap(), Z2(HSym::TauNeg(3)));
        assert_eq!(group_at(1, -1).unwrap(), Zero);
        assert_eq!(group_at(2, 3).unwrap(), Zero);
        assert!(matches!(
            group_at(3, -5),
            Err(EqqError::OutOfScopeRegion { a: 3, b: -5 })
        ));
    }

    #[test]
    fn display_forms() {
        assert_eq!(e().to_string(), "e");
        assert_eq!(HElem::e_pow(2).to_string(), "e^2");
        assert_eq!(xi().scale(2).to_string(), "2 xi");
        assert_eq!(HElem::sym(HSym::NegKappa(1)).to_string(), "e^-1 kappa");
        assert_eq!(HElem::sym(HSym::TauNeg(3)).to_string(), "tau(iota^-3)");
        assert_eq!(HElem::sym(HSym::EXi(1, 2)).to_string(), "e xi^2");
        assert_eq!(g().to_string(), "g");
        assert_eq!(g().scale(-1).to_string(), "-g");
        assert_eq!(HElem::from_burnside(Burnside::new(3, 12)).to_string(), "3 + 12g");
        assert_eq!(e().neg().to_string(), "-e");
        assert_eq!(HElem::one().sub(&kappa()).to_string(), "-1 + g");
        assert_eq!(xi().add(&HElem::e_pow(2)).to_string(), "e^2 + xi");
    }

    #[test]
    fn grading_of_elements() {
        assert_eq!(e().grading().unwrap(), Some(Grading::new(0, 1, 0)));
        assert_eq!(xi().grading().unwrap(), Some(Grading::new(-2, 2, 0)));
        assert_eq!(HElem::zero().grading().unwrap(), None);
        assert_eq!(
            HElem::one().sub(&kappa()).grading().unwrap(),
            Some(crate::grading::ZERO)
        );
        assert!(e().add(&xi()).grading().is_err());
    }
}
