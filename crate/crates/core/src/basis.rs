use crate::element::{Element, QMonomial};
use crate::error::{EqqError, Result};
use crate::grading::s_index;
use crate::space::Space;
use crate::staircase::{staircase, Cell};

fn cell_monomial(c: &Cell, m: Option<u32>) -> QMonomial {
    QMonomial {
        a: c.a,
        b: c.b,
        i: c.i as u32,
        j: c.j as u32,
        m,
    }
}

/// Free-module basis of the coset-n graded piece. Projective spaces get one
/// staircase of length p+q; quadrics get the pure staircase plus the
/// m_{s_n}-dressed mirror staircase, 2p cells in all.
pub fn basis(space: Space, n: i64) -> Vec<QMonomial> {
    match space {
        Space::Proj { p, q } => staircase(p, q, n)
            .iter()
            .map(|c| cell_monomial(c, None))
            .collect(),
        _ => {
            let p = space.quadric_p().expect("quadric-like");
            let sn = s_index(p, n);
            let mut out: Vec<QMonomial> = staircase(sn, p - sn, n)
                .iter()
                .map(|c| cell_monomial(c, None))
                .collect();
            let shifted = n - (2 * sn as i64 - p as i64);
            out.extend(
                staircase(p - sn, sn, shifted)
                    .iter()
                    .map(|c| cell_monomial(c, Some(sn))),
            );
            out
        }
    }
}

/// Basis of the integer-graded part (coset 0) with the (u, s) lattice point
/// of each cell's grading, for the square-diagram view.
pub fn ro2_basis(space: Space) -> Result<Vec<(QMonomial, (i64, i64))>> {
    if !space.is_quadric_like() {
        return Err(EqqError::SpaceMismatch {
            operation: "the integer-graded lattice diagram",
            space: space.to_string(),
        });
    }
    Ok(basis(space, 0)
        .into_iter()
        .map(|mono| {
            let g = mono.grading(space);
            debug_assert_eq!(g.w, 0);
            (mono, (g.u, g.s))
        })
        .collect())
}

/// The m_s class as an element; s runs from 0 to p.
pub fn m_class(space: Space, s: u32) -> Result<Element> {
    let p = space.quadric_p().ok_or_else(|| EqqError::SpaceMismatch {
        operation: "m-classes",
        space: space.to_string(),
    })?;
    if s > p {
        return Err(EqqError::IndexRange {
            what: "m-class index",
            index: s as i64,
            limit: p as i64,
        });
    }
    // m_s with s far from the coset index is itself non-normal; reduce
    let raw = vec![crate::rewrite::RawTerm::new(
        crate::hpoint::HElem::one(),
        0,
        0,
        0,
        0,
        vec![s],
    )];
    crate::rewrite::reduce_raw(space, raw, crate::rewrite::DEFAULT_STRATEGY)
}

/// Write a normal-form element against the basis of its coset: each normal
/// monomial is a basis cell, so this is an index lookup.
pub fn express_in_basis(e: &Element) -> Result<Vec<(usize, QMonomial, crate::hpoint::HElem)>> {
    let mut out = Vec::new();
    for (mono, coeff) in &e.terms {
        let n = mono.coset(e.space);
        let cells = basis(e.space, n);
        match cells.iter().position(|c| c == mono) {
            Some(idx) => out.push((idx, *mono, coeff.clone())),
            None => {
                return Err(EqqError::InternalStuck(format!(
                    "normal form contains a non-basis monomial in coset {n}"
                )))
            }
        }
    }
    Ok(out)
}
