use crate::basis::m_class;
use crate::burnside;
use crate::element::Element;
use crate::error::{EqqError, Result};
use crate::grading::{self, Grading};
use crate::grassmann;
use crate::hpoint::{self, HElem, HSym, IotaElem};
use crate::restrict::NoneqQElem;
use crate::rewrite::{self, Zeta};
use crate::space::Space;

/// A parsed and evaluated expression. Pending inverse powers of e, z0 and z1
/// are resolved inside each product, so values carry none.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Iota(IotaElem),
    Point(HElem),
    Ring(Element),
    Noneq { space: Space, elem: NoneqQElem },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Name(Name),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Name {
    Z0,
    Z1,
    Euler,     // cw / cl / the dialect Euler class
    EulerConj, // cxw / cxl
    Cg,
    Cxg,
    M,
    E,
    Xi,
    Kappa,
    G,
    Tau,
    Iota,
    CNoneq,
    M0,
    M1,
    Sigma,
    Omega0,
    Omega1,
}

/// Name table scanned by longest match. ASCII names and their unicode
/// aliases are equal citizens; juxtaposed unicode like `ζ₀ĉ` splits into
/// factors exactly like `z0 cw` does.
const NAMES: &[(&str, Name)] = &[
    ("Omega0", Name::Omega0),
    ("Omega1", Name::Omega1),
    ("kappa", Name::Kappa),
    ("sigma", Name::Sigma),
    ("iota", Name::Iota),
    ("tau", Name::Tau),
    ("cxw", Name::EulerConj),
    ("cxl", Name::EulerConj),
    ("cxg", Name::Cxg),
    ("cw", Name::Euler),
    ("cl", Name::Euler),
    ("cg", Name::Cg),
    ("z0", Name::Z0),
    ("z1", Name::Z1),
    ("m0", Name::M0),
    ("m1", Name::M1),
    ("xi", Name::Xi),
    ("O0", Name::Omega0),
    ("O1", Name::Omega1),
    ("m", Name::M),
    ("e", Name::E),
    ("k", Name::Kappa),
    ("g", Name::G),
    ("c", Name::CNoneq),
    ("ζ₀", Name::Z0),
    ("ζ₁", Name::Z1),
    ("ĉ", Name::Euler),
    ("κ", Name::Kappa),
    ("ξ", Name::Xi),
    ("τ", Name::Tau),
    ("ι", Name::Iota),
    ("σ", Name::Sigma),
    ("Ω₀", Name::Omega0),
    ("Ω₁", Name::Omega1),
];

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
    out: Vec<(usize, Tok)>,
}

fn name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '₀' || c == '₁'
}

impl<'a> Lexer<'a> {
    fn run(mut self) -> Result<Vec<(usize, Tok)>> {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
                continue;
            }
            let simple = match c {
                '+' => Some(Tok::Plus),
                '-' => Some(Tok::Minus),
                '*' => Some(Tok::Star),
                '^' => Some(Tok::Caret),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                '[' => Some(Tok::LBracket),
                ']' => Some(Tok::RBracket),
                _ => None,
            };
            if let Some(t) = simple {
                self.out.push((self.pos, t));
                self.pos += c.len_utf8();
                continue;
            }
            if c.is_ascii_digit() {
                self.lex_int()?;
                continue;
            }
            if name_char(c) {
                self.lex_name()?;
                continue;
            }
            return Err(EqqError::Parse {
                position: self.pos,
                message: format!("unexpected character `{c}`"),
            });
        }
        Ok(self.out)
    }

    fn lex_int(&mut self) -> Result<()> {
        let start = self.pos;
        let rest = &self.src[start..];
        let end = rest
            .char_indices()
            .find(|(_, c)| !c.is_ascii_digit())
            .map_or(rest.len(), |(i, _)| i);
        let text = &rest[..end];
        let n: i64 = text.parse().map_err(|_| EqqError::Parse {
            position: start,
            message: format!("integer literal `{text}` does not fit in 64 bits"),
        })?;
        self.out.push((start, Tok::Int(n)));
        self.pos = start + end;
        Ok(())
    }

    fn lex_name(&mut self) -> Result<()> {
        let start = self.pos;
        let rest = &self.src[start..];
        let hit = NAMES
            .iter()
            .filter(|(text, _)| rest.starts_with(text))
            .max_by_key(|(text, _)| text.len());
        match hit {
            Some((text, name)) => {
                // Reject table hits that chop an unknown word, e.g. `ex`
                // matching `e`: a digit may follow (m0 vs m[0] handled by
                // the table), but an unmatched trailing letter may not,
                // except when it starts another table name (`ge`, `ek`).
                let after = &rest[text.len()..];
                let next = after.chars().next();
                if let Some(nc) = next {
                    if name_char(nc)
                        && !nc.is_ascii_digit()
                        && !NAMES.iter().any(|(t, _)| after.starts_with(t))
                    {
                        return Err(self.unknown_name(start));
                    }
                }
                self.out.push((start, Tok::Name(*name)));
                self.pos = start + text.len();
                Ok(())
            }
            None => Err(self.unknown_name(start)),
        }
    }

    fn unknown_name(&self, start: usize) -> EqqError {
        let rest = &self.src[start..];
        let end = rest
            .char_indices()
            .find(|(_, c)| !name_char(*c))
            .map_or(rest.len(), |(i, _)| i);
        EqqError::UnknownGenerator(rest[..end].to_string())
    }
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>> {
    Lexer { src, pos: 0, out: Vec::new() }.run()
}

struct Parser<'a> {
    toks: &'a [(usize, Tok)],
    at: usize,
    end: usize,
    ctx: Option<Space>,
}

/// One factor of a product. Inverse generator powers become pending
/// divisions handled by the enclosing term.
enum Factor {
    Val(Value),
    EInv(u32),
    ZInv(Zeta, u32),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|t| t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.peek();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        if self.peek() == Some(want) {
            self.at += 1;
            Ok(())
        } else {
            Err(EqqError::Parse {
                position: self.pos(),
                message: format!("expected {what}"),
            })
        }
    }

    fn err(&self, message: impl Into<String>) -> EqqError {
        EqqError::Parse { position: self.pos(), message: message.into() }
    }

    fn expr(&mut self) -> Result<Value> {
        let mut negate = false;
        if self.peek() == Some(Tok::Minus) {
            self.at += 1;
            negate = true;
        }
        let mut acc = self.term()?;
        if negate {
            acc = value_neg(acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = value_add(acc, t)?;
                }
                Some(Tok::Minus) => {
                    self.at += 1;
                    let t = self.term()?;
                    acc = value_add(acc, value_neg(t))?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_)) | Some(Tok::Name(_)) | Some(Tok::LParen)
        )
    }

    fn term(&mut self) -> Result<Value> {
        let mut t = Term::new(self.ctx);
        let first = self.factor()?;
        t.push(first)?;
        loop {
            if self.peek() == Some(Tok::Star) {
                self.at += 1;
                if !self.starts_factor() {
                    return Err(self.err("expected a factor after `*`"));
                }
                let f = self.factor()?;
                t.push(f)?;
            } else if self.starts_factor() {
                let f = self.factor()?;
                t.push(f)?;
            } else {
                return t.finish();
            }
        }
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(Tok::Minus) {
            self.at += 1;
            true
        } else {
            false
        };
        match self.bump() {
            Some(Tok::Int(n)) => Ok(if neg { -n } else { n }),
            _ => Err(self.err("expected an integer exponent after `^`")),
        }
    }

    fn factor(&mut self) -> Result<Factor> {
        let base_pos = self.pos();
        let base = self.atom()?;
        if self.peek() != Some(Tok::Caret) {
            return Ok(match base {
                Atom::Val(v) => Factor::Val(v),
                Atom::Gen(name) => Factor::Val(self.generator(name, base_pos)?),
            });
        }
        self.at += 1;
        let k = self.exponent()?;
        match base {
            Atom::Gen(Name::Z0) if k < 0 => Ok(Factor::ZInv(Zeta::Z0, inv_pow(k)?)),
            Atom::Gen(Name::Z1) if k < 0 => Ok(Factor::ZInv(Zeta::Z1, inv_pow(k)?)),
            Atom::Gen(Name::E) if k < 0 => Ok(Factor::EInv(inv_pow(k)?)),
            Atom::Gen(Name::Iota) => Ok(Factor::Val(Value::Iota(IotaElem::iota_pow(k)))),
            Atom::Gen(name) => {
                let v = self.generator(name, base_pos)?;
                Ok(Factor::Val(value_pow(v, self.check_nonneg(k, base_pos)?)?))
            }
            Atom::Val(v) => Ok(Factor::Val(value_pow(v, self.check_nonneg(k, base_pos)?)?)),
        }
    }

    fn check_nonneg(&self, k: i64, position: usize) -> Result<u32> {
        if k < 0 {
            return Err(EqqError::Parse {
                position,
                message: "negative exponents are only defined on z0, z1, e and iota".into(),
            });
        }
        u32::try_from(k).map_err(|_| EqqError::Parse {
            position,
            message: "exponent too large".into(),
        })
    }

    fn atom(&mut self) -> Result<Atom> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(Atom::Val(Value::Int(n))),
            Some(Tok::LParen) => {
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(Atom::Val(v))
            }
            Some(Tok::Name(Name::Tau)) => {
                self.expect(Tok::LParen, "`(` after tau")?;
                let v = self.expr()?;
                self.expect(Tok::RParen, "`)` closing tau(...)")?;
                let arg = match v {
                    Value::Int(n) => IotaElem::from_int(n),
                    Value::Iota(x) => x,
                    _ => return Err(self.err("tau takes an integer combination of iota powers")),
                };
                Ok(Atom::Val(Value::Point(hpoint::tau(&arg))))
            }
            Some(Tok::Name(Name::M)) => {
                self.expect(Tok::LBracket, "`[` after m; the m-classes are written m[s]")?;
                let s = match self.bump() {
                    Some(Tok::Int(n)) => n,
                    _ => return Err(self.err("expected an integer index in m[...]")),
                };
                self.expect(Tok::RBracket, "`]`")?;
                let space = self.ring_space("m[s]")?;
                let s = u32::try_from(s)
                    .map_err(|_| self.err("m-class index must be nonnegative"))?;
                Ok(Atom::Val(Value::Ring(m_class(space, s)?)))
            }
            Some(Tok::Name(n)) => Ok(Atom::Gen(n)),
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn ring_space(&self, gen: &'static str) -> Result<Space> {
        self.ctx.ok_or(EqqError::UnknownGenerator(format!(
            "{gen} needs a space; pass --space"
        )))
    }

    fn generator(&self, name: Name, position: usize) -> Result<Value> {
        let gen_elem = |mono| {
            let space = self.ring_space(match name {
                Name::Z0 => "z0",
                Name::Z1 => "z1",
                _ => "the Euler classes",
            })?;
            let raw = Element::from_monomial(space, mono, HElem::one());
            Ok(Value::Ring(rewrite::reduce(&raw)?))
        };
        use crate::element::QMonomial;
        match name {
            Name::Z0 => gen_elem(QMonomial { a: 1, b: 0, i: 0, j: 0, m: None }),
            Name::Z1 => gen_elem(QMonomial { a: 0, b: 1, i: 0, j: 0, m: None }),
            Name::Euler => gen_elem(QMonomial { a: 0, b: 0, i: 1, j: 0, m: None }),
            Name::EulerConj => gen_elem(QMonomial { a: 0, b: 0, i: 0, j: 1, m: None }),
            Name::Cg | Name::Cxg => {
                let space = self.ring_space(if name == Name::Cg { "cg" } else { "cxg" })?;
                if space != Space::Grass {
                    return Err(EqqError::UnknownGenerator(format!(
                        "{} is the Grassmannian tautological Euler class; space {space} does not carry it",
                        if name == Name::Cg { "cg" } else { "cxg" }
                    )));
                }
                let (taut, conj) = grassmann::tautological_euler(space)?;
                Ok(Value::Ring(if name == Name::Cg { taut } else { conj }))
            }
            Name::E => Ok(Value::Point(HElem::e_pow(1))),
            Name::Xi => Ok(Value::Point(HElem::xi_pow(1))),
            Name::Kappa => Ok(Value::Point(HElem::from_burnside(burnside::KAPPA))),
            Name::G => Ok(Value::Point(HElem::from_burnside(burnside::G))),
            Name::Iota => Ok(Value::Iota(IotaElem::iota_pow(1))),
            Name::CNoneq | Name::M0 | Name::M1 => {
                let space = self.ring_space("the nonequivariant generators")?;
                let p = space.quadric_p().ok_or(EqqError::SpaceMismatch {
                    operation: "the nonequivariant quadric ring",
                    space: space.to_string(),
                })?;
                let elem = match name {
                    Name::CNoneq => NoneqQElem::c(p),
                    Name::M0 => NoneqQElem::m(p, 0),
                    Name::M1 => NoneqQElem::m(p, 1),
                    _ => unreachable!(),
                };
                Ok(Value::Noneq { space, elem })
            }
            Name::Sigma | Name::Omega0 | Name::Omega1 => Err(EqqError::Parse {
                position,
                message: "sigma and Omega name gradings, not ring elements".into(),
            }),
            Name::Tau | Name::M => unreachable!("handled as atoms"),
        }
    }
}

enum Atom {
    Val(Value),
    Gen(Name),
}

fn inv_pow(k: i64) -> Result<u32> {
    u32::try_from(-k).map_err(|_| EqqError::Parse {
        position: 0,
        message: "exponent too large".into(),
    })
}

fn checked_int(n: Option<i64>) -> Result<i64> {
    n.ok_or(EqqError::Parse {
        position: 0,
        message: "integer overflow while evaluating".into(),
    })
}

/// Accumulator for one product. Point-level inverse e powers resolve
/// greedily after every factor; z0/z1 divisions wait for the full product.
struct Term {
    ctx: Option<Space>,
    acc: Value,
    pend_e: u32,
    pend_z0: u32,
    pend_z1: u32,
}

impl Term {
    fn new(ctx: Option<Space>) -> Term {
        Term { ctx, acc: Value::Int(1), pend_e: 0, pend_z0: 0, pend_z1: 0 }
    }

    fn push(&mut self, f: Factor) -> Result<()> {
        match f {
            Factor::EInv(m) => {
                self.pend_e += m;
                self.settle_e()
            }
            Factor::ZInv(Zeta::Z0, m) => {
                self.pend_z0 += m;
                Ok(())
            }
            Factor::ZInv(Zeta::Z1, m) => {
                self.pend_z1 += m;
                Ok(())
            }
            Factor::Val(v) => {
                let left = std::mem::replace(&mut self.acc, Value::Int(0));
                self.acc = value_mul(left, v)?;
                self.settle_e()
            }
        }
    }

    /// Divide as much of the pending e power into the accumulator as its
    /// components allow. What remains may be fed by later factors.
    fn settle_e(&mut self) -> Result<()> {
        if self.pend_e == 0 {
            return Ok(());
        }
        if let Value::Int(n) = self.acc {
            if n == 0 {
                self.pend_e = 0;
                return Ok(());
            }
            self.acc = Value::Point(HElem::from_int(n));
        }
        if let Value::Point(h) = &self.acc {
            let (rest, left) = divide_e(h, self.pend_e);
            self.acc = Value::Point(rest);
            self.pend_e = left;
        }
        Ok(())
    }

    fn finish(mut self) -> Result<Value> {
        self.settle_e()?;
        if self.pend_e > 0 {
            if !matches!(&self.acc, Value::Point(h) if h.is_zero()) {
                return Err(EqqError::NotDivisible {
                    divisor: "e".into(),
                    power: self.pend_e as i64,
                });
            }
            self.pend_e = 0;
        }
        if self.pend_z0 > 0 || self.pend_z1 > 0 {
            let space = self.ctx.ok_or(EqqError::UnknownGenerator(
                "z0 and z1 need a space; pass --space".into(),
            ))?;
            let elem = match std::mem::replace(&mut self.acc, Value::Int(0)) {
                Value::Ring(e) => e,
                Value::Int(n) => Element::one(space).scale(n),
                Value::Point(h) => Element::one(space).scale_h(&h),
                Value::Iota(x) => {
                    if let Some(n) = x.as_scalar() {
                        Element::one(space).scale(n)
                    } else {
                        return Err(EqqError::SpaceMismatch {
                            operation: "dividing an iota expression by zeta classes",
                            space: space.to_string(),
                        });
                    }
                }
                Value::Noneq { space, .. } => {
                    return Err(EqqError::SpaceMismatch {
                        operation: "dividing a nonequivariant expression by zeta classes",
                        space: space.to_string(),
                    })
                }
            };
            let elem = rewrite::divide(&elem, Zeta::Z0, self.pend_z0)?;
            let elem = rewrite::divide(&elem, Zeta::Z1, self.pend_z1)?;
            self.acc = Value::Ring(elem);
        }
        Ok(self.acc)
    }
}

/// Multiply by e^-want as far as the element allows, returning the partial
/// quotient and the unconsumed inverse power. NegKappa and kappa-multiple
/// unit parts absorb arbitrarily many; plain e powers absorb up to their
/// exponent; anything else blocks.
fn divide_e(h: &HElem, want: u32) -> (HElem, u32) {
    if h.is_zero() {
        return (HElem::zero(), 0);
    }
    let mut cap = want;
    if !h.unit.is_zero() && h.unit.as_kappa_multiple().is_none() {
        cap = 0;
    }
    for (sym, _) in &h.terms {
        let c = match sym {
            HSym::E(a) => *a,
            HSym::NegKappa(_) => want,
            _ => 0,
        };
        cap = cap.min(c);
    }
    if cap == 0 {
        return (h.clone(), want);
    }
    let mut out = HElem::zero();
    if let Some(k) = h.unit.as_kappa_multiple() {
        if k != 0 {
            out = out.add(&HElem::sym_scaled(HSym::NegKappa(cap), k));
        }
    }
    for (sym, &c) in &h.terms {
        let div = match sym {
            HSym::E(a) if *a == cap => HElem::from_int(c),
            HSym::E(a) => HElem::sym_scaled(HSym::E(a - cap), c),
            HSym::NegKappa(m) => HElem::sym_scaled(HSym::NegKappa(m + cap), c),
            _ => unreachable!("blocked above"),
        };
        out = out.add(&div);
    }
    (out, want - cap)
}

fn value_neg(v: Value) -> Value {
    match v {
        Value::Int(n) => Value::Int(-n),
        Value::Iota(x) => Value::Iota(x.neg()),
        Value::Point(h) => Value::Point(h.neg()),
        Value::Ring(e) => Value::Ring(e.neg()),
        Value::Noneq { space, elem } => Value::Noneq { space, elem: elem.neg() },
    }
}

fn mix_err(what: &'static str, space: &Space) -> EqqError {
    EqqError::SpaceMismatch { operation: what, space: space.to_string() }
}

fn value_add(x: Value, y: Value) -> Result<Value> {
    use Value::*;
    Ok(match (x, y) {
        (Int(a), Int(b)) => Int(checked_int(a.checked_add(b))?),
        (Int(a), Iota(x)) | (Iota(x), Int(a)) => Iota(x.add(&IotaElem::from_int(a))),
        (Iota(a), Iota(b)) => Iota(a.add(&b)),
        (Int(a), Point(h)) | (Point(h), Int(a)) => Point(h.add(&HElem::from_int(a))),
        (Point(a), Point(b)) => Point(a.add(&b)),
        (Int(n), Ring(e)) | (Ring(e), Int(n)) => {
            let unit = Element::one(e.space).scale(n);
            Ring(e.add(&unit)?)
        }
        (Point(h), Ring(e)) | (Ring(e), Point(h)) => {
            let emb = Element::one(e.space).scale_h(&h);
            Ring(e.add(&emb)?)
        }
        (Ring(a), Ring(b)) => Ring(a.add(&b)?),
        (Int(n), Noneq { space, elem }) | (Noneq { space, elem }, Int(n)) => {
            let p = space.quadric_p().unwrap();
            Noneq { space, elem: elem.add(&NoneqQElem::from_int(p, n)) }
        }
        (Noneq { space, elem: a }, Noneq { space: s2, elem: b }) => {
            if space != s2 {
                return Err(mix_err("adding elements of different spaces", &s2));
            }
            Noneq { space, elem: a.add(&b) }
        }
        (Noneq { space, .. }, _) | (_, Noneq { space, .. }) => {
            return Err(mix_err(
                "mixing nonequivariant and equivariant generators",
                &space,
            ))
        }
        (Iota(_), _) | (_, Iota(_)) => {
            return Err(EqqError::Parse {
                position: 0,
                message: "iota expressions only combine with integers and tau(...)".into(),
            })
        }
    })
}

fn value_mul(x: Value, y: Value) -> Result<Value> {
    use Value::*;
    Ok(match (x, y) {
        (Int(a), Int(b)) => Int(checked_int(a.checked_mul(b))?),
        (Int(a), Iota(x)) | (Iota(x), Int(a)) => Iota(x.scale(a)),
        (Iota(a), Iota(b)) => Iota(a.mul(&b)),
        (Int(a), Point(h)) | (Point(h), Int(a)) => Point(h.scale(a)),
        (Point(a), Point(b)) => Point(a.mul(&b)),
        (Int(n), Ring(e)) | (Ring(e), Int(n)) => Ring(e.scale(n)),
        (Point(h), Ring(e)) | (Ring(e), Point(h)) => Ring(rewrite::reduce(&e.scale_h(&h))?),
        (Ring(a), Ring(b)) => Ring(rewrite::mul(&a, &b)?),
        (Int(n), Noneq { space, elem }) | (Noneq { space, elem }, Int(n)) => {
            Noneq { space, elem: elem.scale(n) }
        }
        (Noneq { space, elem: a }, Noneq { space: s2, elem: b }) => {
            if space != s2 {
                return Err(mix_err("multiplying elements of different spaces", &s2));
            }
            Noneq { space, elem: a.mul(&b) }
        }
        (Noneq { space, .. }, _) | (_, Noneq { space, .. }) => {
            return Err(mix_err(
                "mixing nonequivariant and equivariant generators",
                &space,
            ))
        }
        (Iota(x), Point(h)) | (Point(h), Iota(x)) => match x.as_scalar() {
            Some(n) => Point(h.scale(n)),
            None => {
                return Err(EqqError::Parse {
                    position: 0,
                    message: "iota powers do not multiply point-ring classes".into(),
                })
            }
        },
        (Iota(x), Ring(e)) | (Ring(e), Iota(x)) => match x.as_scalar() {
            Some(n) => Ring(e.scale(n)),
            None => {
                return Err(EqqError::Parse {
                    position: 0,
                    message: "iota powers do not multiply ring classes".into(),
                })
            }
        },
    })
}

fn value_pow(v: Value, k: u32) -> Result<Value> {
    if k == 0 {
        return Ok(Value::Int(1));
    }
    Ok(match v {
        Value::Int(n) => Value::Int(checked_int(n.checked_pow(k))?),
        Value::Iota(x) => {
            let mut out = IotaElem::from_int(1);
            for _ in 0..k {
                out = out.mul(&x);
            }
            Value::Iota(out)
        }
        Value::Point(h) => {
            let mut out = HElem::one();
            for _ in 0..k {
                out = out.mul(&h);
            }
            Value::Point(out)
        }
        Value::Ring(e) => Value::Ring(rewrite::pow(&e, k)?),
        Value::Noneq { space, elem } => {
            let p = space.quadric_p().unwrap();
            let mut out = NoneqQElem::one(p);
            for _ in 0..k {
                out = out.mul(&elem);
            }
            Value::Noneq { space, elem: out }
        }
    })
}

/// Parse and evaluate an element expression. `space` enables the ring and
/// nonequivariant generators; point-ring expressions need none.
pub fn eval(src: &str, space: Option<Space>) -> Result<Value> {
    let toks = lex(src)?;
    let mut p = Parser { toks: &toks, at: 0, end: src.len(), ctx: space };
    if p.toks.is_empty() {
        return Err(EqqError::Parse { position: 0, message: "empty expression".into() });
    }
    let v = p.expr()?;
    if p.at != p.toks.len() {
        return Err(EqqError::Parse {
            position: p.pos(),
            message: "unexpected trailing input".into(),
        });
    }
    Ok(v)
}

/// Parse a grading expression: an integer combination of 1, sigma, Omega0
/// and Omega1, e.g. `8 + 2O1` or `4sigma - 3Omega1`.
pub fn parse_grading(src: &str) -> Result<Grading> {
    let toks = lex(src)?;
    let mut at = 0usize;
    let mut total = grading::ZERO;
    let mut first = true;
    while at < toks.len() {
        let mut sign = 1i64;
        match toks[at].1 {
            Tok::Plus if !first => at += 1,
            Tok::Minus => {
                sign = -1;
                at += 1;
            }
            _ if first => {}
            _ => {
                return Err(EqqError::Parse {
                    position: toks[at].0,
                    message: "expected `+` or `-` between grading terms".into(),
                })
            }
        }
        first = false;
        let mut coeff: Option<i64> = None;
        if let Some((_, Tok::Int(n))) = toks.get(at) {
            coeff = Some(*n);
            at += 1;
            if matches!(toks.get(at), Some((_, Tok::Star))) {
                at += 1;
            }
        }
        let base = match toks.get(at) {
            Some((_, Tok::Name(Name::Sigma))) => {
                at += 1;
                Some(grading::SIGMA)
            }
            Some((_, Tok::Name(Name::Omega0))) => {
                at += 1;
                Some(grading::OMEGA0)
            }
            Some((_, Tok::Name(Name::Omega1))) => {
                at += 1;
                Some(grading::OMEGA1)
            }
            _ => None,
        };
        let term = match (coeff, base) {
            (Some(c), Some(b)) => b.scale(sign * c),
            (Some(c), None) => Grading::new(sign * c, 0, 0),
            (None, Some(b)) => b.scale(sign),
            (None, None) => {
                let position = toks.get(at).map_or(src.len(), |t| t.0);
                return Err(EqqError::Parse {
                    position,
                    message: "expected an integer, sigma, Omega0 or Omega1".into(),
                });
            }
        };
        total = total.add(term);
    }
    if first {
        return Err(EqqError::Parse { position: 0, message: "empty grading".into() });
    }
    Ok(total)
}
