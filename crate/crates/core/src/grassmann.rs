use crate::basis;
use crate::burnside::Burnside;
use crate::element::{Element, QMonomial};
use crate::error::{EqqError, Result};
use crate::grading::Grading;
use crate::hpoint::HElem;
use crate::restrict::{self, FixedQElem, NoneqQElem};
use crate::rewrite;
use crate::space::Space;

/// A C2-representation split into trivial and sign-twisted summands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepC2 {
    pub nplus: u32,
    pub nminus: u32,
}

impl RepC2 {
    pub fn new(nplus: u32, nminus: u32) -> RepC2 {
        RepC2 { nplus, nminus }
    }

    pub fn rank(self) -> u32 {
        self.nplus + self.nminus
    }
}

/// Symmetric power of a C2-representation by brute enumeration of basis
/// monomials: a monomial is fixed exactly when its sign-degree is even.
pub fn sym_power(rep: RepC2, k: u32) -> RepC2 {
    let n = rep.rank();
    if n == 0 {
        return RepC2::new(u32::from(k == 0), 0);
    }
    // multisets of size k from n letters, the last `nminus` letters odd
    let mut plus = 0;
    let mut minus = 0;
    let mut stack: Vec<(u32, u32, u32)> = vec![(0, k, 0)]; // (letter, left, sign)
    while let Some((letter, left, sign)) = stack.pop() {
        if left == 0 {
            if sign % 2 == 0 {
                plus += 1;
            } else {
                minus += 1;
            }
            continue;
        }
        if letter == n - 1 {
            let s = if letter >= rep.nplus { left } else { 0 };
            if (sign + s) % 2 == 0 {
                plus += 1;
            } else {
                minus += 1;
            }
            continue;
        }
        for take in 0..=left {
            let s = if letter >= rep.nplus { take } else { 0 };
            stack.push((letter + 1, left - take, sign + s));
        }
    }
    RepC2::new(plus, minus)
}

/// RO(C2)-grading of the cohomology Euler class of Sym^3 of the rank-2
/// tautological bundle: read off the equivariant rank and the two
/// fixed-point dimensions of the representation and lift.
pub fn sym3_grading() -> Result<Grading> {
    // over the rigid fixed component the fiber is trivial; over the split
    // one it is a sum of a trivial and a sign line
    let s_rigid = sym_power(RepC2::new(2, 0), 3);
    let s_split = sym_power(RepC2::new(1, 1), 3);
    debug_assert_eq!((s_rigid.nplus, s_rigid.nminus), (4, 0));
    debug_assert_eq!((s_split.nplus, s_split.nminus), (2, 2));
    let rank = 2 * s_split.rank() as i64;
    let d0 = 2 * s_rigid.nplus as i64;
    let d1 = 2 * s_split.nplus as i64;
    Grading::from_rank_fixed(rank, (d0, d1))
}

/// The tautological rank-2 Euler class on the Grassmannian model is m_2;
/// its Lambda-dialect conjugate reduces to a three-term normal form.
pub fn tautological_euler(space: Space) -> Result<(Element, Element)> {
    let m2 = basis::m_class(space, 2)?;
    let raw = vec![rewrite::RawTerm::new(HElem::one(), 0, 2, 0, 0, vec![0])];
    let conj = rewrite::reduce_raw(space, raw, rewrite::DEFAULT_STRATEGY)?;
    Ok((m2, conj))
}

/// One verified step of the conjugate-Euler-class derivation: both sides
/// are reduced and compared. Returns the common normal form.
pub fn derivation_step(space: Space, lhs: &Element, rhs: &Element, label: &str) -> Result<Element> {
    if lhs.space != space || rhs.space != space {
        return Err(EqqError::SpaceMismatch {
            operation: "derivation step",
            space: space.to_string(),
        });
    }
    let l = rewrite::reduce(lhs)?;
    let r = rewrite::reduce(rhs)?;
    if l != r {
        return Err(EqqError::InternalStuck(format!(
            "derivation step '{label}' does not balance"
        )));
    }
    Ok(l)
}

pub struct LinesComputation {
    pub grading: Grading,
    pub basis_monomial: QMonomial,
    pub rho_target: NoneqQElem,
    pub fixed_target: FixedQElem,
    pub coefficient: Burnside,
    pub result: Element,
    pub trace: Vec<String>,
}

/// The count of lines on a cubic surface, as the equivariant Euler class of
/// Sym^3 of the tautological bundle on the Grassmannian model, evaluated by
/// solving for the Burnside coefficient against both restrictions.
pub fn euler_sym3(space: Space) -> Result<LinesComputation> {
    if space != Space::Grass {
        return Err(EqqError::SpaceMismatch {
            operation: "the lines computation",
            space: space.to_string(),
        });
    }
    let mut trace: Vec<String> = Vec::new();

    // 1. RO(C2) grading from the representation data
    let s_rigid = sym_power(RepC2::new(2, 0), 3);
    let s_split = sym_power(RepC2::new(1, 1), 3);
    let rank = 2 * s_split.rank() as i64;
    let (d0, d1) = (2 * s_rigid.nplus as i64, 2 * s_split.nplus as i64);
    let grading = Grading::from_rank_fixed(rank, (d0, d1))?;
    trace.push(format!(
        "Sym^3 fibers: ({}|{}) over the rigid component, ({}|{}) over the split one; \
         the Euler class sits in degree {} with fixed dimensions ({d0}, {d1})",
        s_rigid.nplus, s_rigid.nminus, s_split.nplus, s_split.nminus, grading
    ));

    // 2. the unique basis monomial in that degree
    let n = grading.coset().0;
    let candidates: Vec<QMonomial> = basis::basis(space, n)
        .into_iter()
        .filter(|m| m.grading(space) == grading)
        .collect();
    if candidates.len() != 1 {
        return Err(EqqError::AmbiguousGrading(candidates.len()));
    }
    let mono = candidates[0];
    trace.push(format!(
        "coset {n} has a unique basis monomial in that degree"
    ));

    // 3. nonequivariant target: e(Sym^3 S*) = 9 c2 (2 c1^2 + c2) with
    // c1 -> c, c2 -> m0 in the quadric model of the Grassmannian
    let p = space.quadric_p().expect("grass is quadric-like");
    let c1 = NoneqQElem::c(p);
    let c2 = NoneqQElem::m(p, 0);
    let rho_target = c2
        .mul(&c1.mul(&c1).scale(2).add(&c2))
        .scale(9);
    trace.push(format!("underlying Euler class reduces to {rho_target}"));

    // 4. fixed-point target: on the moving component the bundle splits off
    // eta^3 + eta^2 sigma + eta + sigma; only eta^3 + eta contributes
    // non-twisted directions, with Euler class (3c)(c)
    let mut fixed_target = FixedQElem::zero(p);
    fixed_target.add_pow(1, 2, 3);
    trace.push(
        "fixed components: the rigid side dies in the truncation; the split side carries \
         eta^3 + eta^2 sigma + eta + sigma, whose untwisted Euler factor is (3c)(c) = 3c^2"
            .to_string(),
    );

    // 5. solve for the Burnside coefficient
    let coefficient = restrict::solve_burnside_coeff(space, &mono, &rho_target, &fixed_target)?;
    trace.push(format!("Burnside coefficient {coefficient}"));

    let mut result = Element::zero(space);
    result.add_term(mono, HElem::from_burnside(coefficient));

    // recompute both restrictions of the final element through the
    // restriction module and insist they reproduce the targets
    if restrict::rho_quadric(&result)? != rho_target {
        return Err(EqqError::InconsistentTargets);
    }
    if restrict::fixed_quadric(&result)? != fixed_target {
        return Err(EqqError::InconsistentTargets);
    }

    Ok(LinesComputation {
        grading,
        basis_monomial: mono,
        rho_target,
        fixed_target,
        coefficient,
        result,
        trace,
    })
}

pub struct LinesReport {
    pub type_i: i64,
    pub type_ii: i64,
    pub type_iii: i64,
    pub type_iv: i64,
}

impl LinesReport {
    /// Types I-III count individual fixed lines; type IV counts free
    /// orbits, two lines each.
    pub fn total(&self) -> i64 {
        self.type_i + self.type_ii + self.type_iii + 2 * self.type_iv
    }

    /// The line configuration as a finite C2-set.
    pub fn c2_set(&self) -> String {
        format!("{}[C2/e] + {}[C2/C2]", self.type_iv, self.fixed())
    }

    pub fn fixed(&self) -> i64 {
        self.type_i + self.type_ii + self.type_iii
    }
}

/// Split the line count by symmetry type from the Burnside-valued Euler
/// number: the augmentation of the fixed part counts invariant lines (all
/// of the second type for this surface), the free part counts conjugate
/// pairs.
pub fn lines_report(coefficient: Burnside) -> LinesReport {
    LinesReport {
        type_i: 0,
        type_ii: coefficient.fixed(),
        type_iii: 0,
        type_iv: coefficient.b,
    }
}
