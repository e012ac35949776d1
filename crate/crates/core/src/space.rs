use crate::error::{EqqError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// The supported spaces. The Grassmannian of 2-planes in C^{3|1} is the
/// 6-dimensional antisymmetric quadric wearing lambda/gamma generator names,
/// so it carries `p = 3` and reuses the whole quadric engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Space {
    /// X P^{p|q}: projectivization with p trivial and q sign coordinates.
    Proj { p: u32, q: u32 },
    /// XQ^{2p}: the antisymmetric quadric in X P^{p|p}.
    Quadric { p: u32 },
    /// Gr(2, C^{3|1}).
    Grass,
}

/// Generator-name dialect for rendering and parsing ring elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dialect {
    /// cw, cxw (projective spaces and quadrics)
    Omega,
    /// cl, cxl plus the tautological aliases cg, cxg (the Grassmannian)
    Lambda,
}

impl Space {
    pub fn proj(p: u32, q: u32) -> Result<Space> {
        if p + q == 0 {
            return Err(EqqError::IndexRange {
                what: "projective space size p + q",
                index: 0,
                limit: 1,
            });
        }
        Ok(Space::Proj { p, q })
    }

    pub fn quadric(p: u32) -> Result<Space> {
        if p == 0 {
            return Err(EqqError::IndexRange {
                what: "quadric parameter p",
                index: 0,
                limit: 1,
            });
        }
        Ok(Space::Quadric { p })
    }

    /// The quadric parameter p for spaces that have one.
    pub fn quadric_p(self) -> Option<u32> {
        match self {
            Space::Quadric { p } => Some(p),
            Space::Grass => Some(3),
            Space::Proj { .. } => None,
        }
    }

    pub fn is_quadric_like(self) -> bool {
        self.quadric_p().is_some()
    }

    pub fn dialect(self) -> Dialect {
        match self {
            Space::Grass => Dialect::Lambda,
            _ => Dialect::Omega,
        }
    }

    /// Exponent caps (i_cap, j_cap) for a monomial family: `m` is the index
    /// of the m-class if the monomial carries one. Pure quadric monomials are
    /// uncapped (None).
    pub fn caps(self, m: Option<u32>) -> Option<(i64, i64)> {
        match (self, m) {
            (Space::Proj { p, q }, None) => Some((p as i64, q as i64)),
            (Space::Proj { .. }, Some(_)) => unreachable!("m-classes live on quadrics"),
            (sp, Some(s)) => {
                let p = sp.quadric_p().expect("capped family");
                Some((p as i64 - s as i64, s as i64))
            }
            (_, None) => None,
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Proj { p, q } => write!(f, "proj:{p}|{q}"),
            Space::Quadric { p } => write!(f, "quadric:{p}"),
            Space::Grass => write!(f, "grass:2|3+1"),
        }
    }
}

impl FromStr for Space {
    type Err = EqqError;

    fn from_str(s: &str) -> Result<Space> {
        let bad = |msg: &str| EqqError::Parse {
            position: 0,
            message: format!("bad space descriptor `{s}`: {msg}"),
        };
        if s == "grass" || s == "grass:2|3+1" {
            return Ok(Space::Grass);
        }
        if let Some(rest) = s.strip_prefix("quadric:") {
            let p: u32 = rest
                .parse()
                .map_err(|_| bad("expected quadric:<p> with integer p >= 1"))?;
            return Space::quadric(p);
        }
        if let Some(rest) = s.strip_prefix("proj:") {
            let (ps, qs) = rest
                .split_once('|')
                .ok_or_else(|| bad("expected proj:<p>|<q>"))?;
            let p: u32 = ps.parse().map_err(|_| bad("p must be an integer"))?;
            let q: u32 = qs.parse().map_err(|_| bad("q must be an integer"))?;
            return Space::proj(p, q);
        }
        Err(bad("known forms: proj:<p>|<q>, quadric:<p>, grass:2|3+1"))
    }
}
