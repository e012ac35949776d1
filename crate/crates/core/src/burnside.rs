use crate::error::{EqqError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element a + b*g of the Burnside ring of C2, where 1 is the class of the
/// one-point set and g the class of the free orbit. Multiplication is
/// determined by g^2 = 2g.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Burnside {
    pub a: i64,
    pub b: i64,
}

pub const ONE: Burnside = Burnside { a: 1, b: 0 };
pub const G: Burnside = Burnside { a: 0, b: 1 };
/// kappa = 2 - g; satisfies kappa^2 = 2 kappa and (1 - kappa)^2 = 1.
pub const KAPPA: Burnside = Burnside { a: 2, b: -1 };
/// 1 - kappa = g - 1.
pub const ONE_MINUS_KAPPA: Burnside = Burnside { a: -1, b: 1 };

impl Burnside {
    pub const fn new(a: i64, b: i64) -> Self {
        Burnside { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        Burnside { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn add(self, o: Burnside) -> Burnside {
        Burnside::new(self.a + o.a, self.b + o.b)
    }

    pub fn sub(self, o: Burnside) -> Burnside {
        Burnside::new(self.a - o.a, self.b - o.b)
    }

    pub fn neg(self) -> Burnside {
        Burnside::new(-self.a, -self.b)
    }

    pub fn mul(self, o: Burnside) -> Burnside {
        Burnside::new(
            self.a * o.a,
            self.a * o.b + self.b * o.a + 2 * self.b * o.b,
        )
    }

    pub fn scale(self, k: i64) -> Burnside {
        Burnside::new(self.a * k, self.b * k)
    }

    /// Cardinality of the underlying set: 1 -> 1, g -> 2.
    pub fn rho(self) -> i64 {
        self.a + 2 * self.b
    }

    /// Cardinality of the fixed set: 1 -> 1, g -> 0.
    pub fn fixed(self) -> i64 {
        self.a
    }

    /// Recover a + bg from its underlying-set and fixed-set cardinalities.
    pub fn solve(rank: i64, fixed: i64) -> Result<Burnside> {
        if (rank - fixed) % 2 != 0 {
            return Err(EqqError::Parity { rank, fixed });
        }
        Ok(Burnside::new(fixed, (rank - fixed) / 2))
    }

    /// True if this is an integer multiple of kappa; returns the multiple.
    pub fn as_kappa_multiple(self) -> Option<i64> {
        if self.a == -2 * self.b {
            Some(-self.b)
        } else {
            None
        }
    }
}

impl fmt::Display for Burnside {
    /// "a + bg" with zero parts suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        if self.a != 0 {
            out.push_str(&self.a.to_string());
        }
        if self.b != 0 {
            if !out.is_empty() {
                out.push_str(if self.b < 0 { " - " } else { " + " });
            } else if self.b < 0 {
                out.push('-');
            }
            let mag = self.b.abs();
            if mag != 1 {
                out.push_str(&mag.to_string());
            }
            out.push('g');
        }
        write!(f, "{out}")
    }
}
