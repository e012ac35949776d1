use crate::error::{EqqError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// An element of the grading lattice, written on the canonical basis
/// {1, sigma, Omega1}: `u + s*sigma + w*Omega1`.
///
/// The lattice is presented with four named generators 1, sigma, Omega0,
/// Omega1 subject to Omega0 + Omega1 = 2*sigma - 2, so Omega0 is eliminated
/// as (-2, 2, -1) when an element is built from all four coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Grading {
    pub u: i64,
    pub s: i64,
    pub w: i64,
}

pub const ZERO: Grading = Grading { u: 0, s: 0, w: 0 };
/// sigma
pub const SIGMA: Grading = Grading { u: 0, s: 1, w: 0 };
/// Omega0 = 2*sigma - 2 - Omega1
pub const OMEGA0: Grading = Grading { u: -2, s: 2, w: -1 };
/// Omega1
pub const OMEGA1: Grading = Grading { u: 0, s: 0, w: 1 };
/// omega = 2 + Omega1, the grading of the Euler class cw
pub const OMEGA: Grading = Grading { u: 2, s: 0, w: 1 };
/// chi*omega = 2*sigma + Omega0 = omega's sign twist, the grading of cxw
pub const CHI_OMEGA: Grading = Grading { u: 0, s: 2, w: -1 };
/// |e| = sigma
pub const E_DEG: Grading = SIGMA;
/// |xi| = 2*sigma - 2
pub const XI_DEG: Grading = Grading { u: -2, s: 2, w: 0 };

impl Grading {
    pub const fn new(u: i64, s: i64, w: i64) -> Self {
        Grading { u, s, w }
    }

    /// Build a grading from coordinates on all four named generators
    /// (1, sigma, Omega0, Omega1), eliminating Omega0.
    pub fn make(u: i64, s: i64, o0: i64, o1: i64) -> Self {
        Grading {
            u: u - 2 * o0,
            s: s + 2 * o0,
            w: o1 - o0,
        }
    }

    pub fn add(self, other: Grading) -> Grading {
        Grading {
            u: self.u + other.u,
            s: self.s + other.s,
            w: self.w + other.w,
        }
    }

    pub fn sub(self, other: Grading) -> Grading {
        Grading {
            u: self.u - other.u,
            s: self.s - other.s,
            w: self.w - other.w,
        }
    }

    pub fn scale(self, k: i64) -> Grading {
        Grading {
            u: self.u * k,
            s: self.s * k,
            w: self.w * k,
        }
    }

    pub fn is_zero(self) -> bool {
        self == ZERO
    }

    /// Total rank: 1 and sigma count 1, the Omegas count 0.
    pub fn rank(self) -> i64 {
        self.u + self.s
    }

    /// Dimensions seen by the two fixed components: Omega0 restricts to
    /// (2*sigma - 2, 0) and Omega1 to (0, 2*sigma - 2), and on a fixed
    /// component sigma contributes rank but no dimension shift, so the
    /// component dimensions are (u, u - 2w).
    pub fn fixed_dims(self) -> (i64, i64) {
        (self.u, self.u - 2 * self.w)
    }

    /// The coset decomposition n*Omega1 + (RO(C2) part): returns (n, remainder
    /// as (u, s)).
    pub fn coset(self) -> (i64, (i64, i64)) {
        (self.w, (self.u, self.s))
    }

    /// Inverse of (rank, fixed_dims): used when a grading is reconstructed
    /// from fiber representation data.
    pub fn from_rank_fixed(rank: i64, fixed: (i64, i64)) -> Result<Grading> {
        let (d0, d1) = fixed;
        if (d0 - d1) % 2 != 0 {
            return Err(EqqError::Parity {
                rank,
                fixed: d0 - d1,
            });
        }
        Ok(Grading {
            u: d0,
            s: rank - d0,
            w: (d0 - d1) / 2,
        })
    }
}

/// Grading of the fundamental class m_s on the 2p-dimensional quadric:
/// (2s - p)*Omega1 + 2s + 2(p - s - 1)*sigma.
pub fn nu(p: u32, s: u32) -> Grading {
    let (p, s) = (p as i64, s as i64);
    Grading {
        u: 2 * s,
        s: 2 * (p - s - 1),
        w: 2 * s - p,
    }
}

/// The isotropic index attached to coset n: p if n >= p, 0 if n <= -p,
/// floor((p+n)/2) in between.
pub fn s_index(p: u32, n: i64) -> u32 {
    let pi = p as i64;
    if n >= pi {
        p
    } else if n <= -pi {
        0
    } else {
        ((pi + n).div_euclid(2)) as u32
    }
}

impl fmt::Display for Grading {
    /// "u + s sigma + w Omega1" with zero terms suppressed, rendered with the
    /// unicode names σ and Ω₁.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<(i64, &str)> = Vec::new();
        if self.u != 0 {
            parts.push((self.u, ""));
        }
        if self.s != 0 {
            parts.push((self.s, "σ"));
        }
        if self.w != 0 {
            parts.push((self.w, "Ω₁"));
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (idx, (coeff, name)) in parts.iter().enumerate() {
            let mag = coeff.abs();
            if idx == 0 {
                if *coeff < 0 {
                    out.push('-');
                }
            } else if *coeff < 0 {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if mag != 1 || name.is_empty() {
                out.push_str(&mag.to_string());
            }
            out.push_str(name);
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn make_eliminates_omega0() {
        // Omega0 + Omega1 = 2 sigma - 2
        assert_eq!(Grading::make(0, 0, 1, 1), Grading::new(-2, 2, 0));
        assert_eq!(Grading::make(2, 0, 0, 1), OMEGA);
        // chi omega = 2 + Omega0 = 2 sigma - Omega1
        assert_eq!(Grading::make(2, 0, 1, 0), CHI_OMEGA);
        assert_eq!(Grading::make(0, 2, 0, -1), CHI_OMEGA);
        assert_eq!(Grading::make(0, 0, 1, 0), OMEGA0);
    }

    #[test]
    fn make_is_additive_with_kernel() {
        // make is a homomorphism Z^4 -> Z^3 whose kernel is generated by
        // 2 - 2 sigma + Omega0 + Omega1, i.e. (2, -2, 1, 1).
        assert_eq!(Grading::make(2, -2, 1, 1), ZERO);
        for (a, b) in [(1i64, 2i64), (-3, 5), (0, 7)] {
            let x = Grading::make(a, b, a + 1, b - 2);
            let y = Grading::make(b, a, b, a);
            assert_eq!(
                x.add(y),
                Grading::make(a + b, a + b, a + b + 1, a + b - 2)
            );
        }
    }

    #[test]
    fn rank_and_fixed_dims() {
        assert_eq!(OMEGA.rank(), 2);
        assert_eq!(OMEGA0.rank(), 0);
        assert_eq!(OMEGA1.rank(), 0);
        assert_eq!(SIGMA.rank(), 1);
        assert_eq!(OMEGA0.fixed_dims(), (-2, 0));
        assert_eq!(OMEGA1.fixed_dims(), (0, -2));
        assert_eq!(OMEGA.fixed_dims(), (2, 0));
        assert_eq!(CHI_OMEGA.fixed_dims(), (0, 2));
        // omega + chi omega restricts to a plane on each component
        let sum = OMEGA.add(CHI_OMEGA);
        assert_eq!(sum.fixed_dims(), (2, 2));
    }

    #[test]
    fn nu_values() {
        assert_eq!(nu(4, 2), Grading::new(4, 2, 0)); // 4 + 2 sigma
        assert_eq!(nu(3, 2), Grading::new(4, 0, 1)); // Omega1 + 4
        assert_eq!(nu(3, 0), Grading::new(0, 4, -3)); // -3 Omega1 + 4 sigma
        for p in 1..=6u32 {
            // nu(p, 0) = -p Omega1 + 2(p-1) sigma
            assert_eq!(nu(p, 0), Grading::new(0, 2 * (p as i64 - 1), -(p as i64)));
            for s in 0..=p {
                // two ways: s omega + (p-s) chi omega - 2 sigma
                let via_euler = OMEGA
                    .scale(s as i64)
                    .add(CHI_OMEGA.scale((p - s) as i64))
                    .sub(SIGMA.scale(2));
                assert_eq!(nu(p, s), via_euler);
                assert_eq!(nu(p, s).rank(), 2 * (p as i64) - 2);
                assert_eq!(nu(p, s).fixed_dims(), (2 * s as i64, 2 * (p - s) as i64));
            }
        }
    }

    #[test]
    fn s_index_values() {
        assert_eq!(s_index(3, 2), 2);
        assert_eq!(s_index(4, 0), 2);
        for p in 1..=6u32 {
            assert_eq!(s_index(p, p as i64), p);
            assert_eq!(s_index(p, -(p as i64)), 0);
            assert_eq!(s_index(p, (p as i64) + 3), p);
            assert_eq!(s_index(p, -(p as i64) - 3), 0);
            // nondecreasing in n
            let mut prev = 0;
            for n in -(2 * p as i64)..=(2 * p as i64) {
                let s = s_index(p, n);
                assert!(s >= prev);
                prev = s;
            }
            // s_index(p, 2s - p) = s
            for s in 0..=p {
                assert_eq!(s_index(p, 2 * s as i64 - p as i64), s);
            }
        }
    }

    #[test]
    fn coset_decomposition() {
        assert_eq!(nu(4, 2).coset(), (0, (4, 2)));
        assert_eq!(OMEGA.coset(), (1, (2, 0)));
    }

    #[test]
    fn from_rank_fixed_round_trip() {
        for g in [OMEGA, CHI_OMEGA, nu(5, 2), Grading::new(8, 0, 2)] {
            let back = Grading::from_rank_fixed(g.rank(), g.fixed_dims()).unwrap();
            assert_eq!(back, g);
        }
        assert_eq!(
            Grading::from_rank_fixed(8, (8, 4)).unwrap(),
            Grading::new(8, 0, 2)
        );
        assert!(Grading::from_rank_fixed(2, (1, 0)).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Grading::new(8, 0, 2).to_string(), "8 + 2Ω₁");
        assert_eq!(nu(4, 2).to_string(), "4 + 2σ");
        assert_eq!(nu(3, 2).to_string(), "4 + Ω₁");
        assert_eq!(nu(3, 0).to_string(), "4σ - 3Ω₁");
        assert_eq!(ZERO.to_string(), "0");
        assert_eq!(Grading::new(-2, 2, 0).to_string(), "-2 + 2σ");
    }
}
