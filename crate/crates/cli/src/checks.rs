use eqq_core::basis;
use eqq_core::burnside::ONE_MINUS_KAPPA;
use eqq_core::element::{Element, QMonomial};
use eqq_core::error::{EqqError, Result};
use eqq_core::expr::{self, Value};
use eqq_core::grassmann;
use eqq_core::hpoint::{HElem, HSym};
use eqq_core::render;
use eqq_core::restrict;
use eqq_core::rewrite::{self, RawTerm};
use eqq_core::space::Space;

use crate::cache::CacheSession;

/// Run the identity suite for one space. Returns one "ok ..." line per
/// verified identity; a failing identity is an engine defect and comes
/// back as an internal error.
pub fn run(space: Space, session: &mut CacheSession) -> Result<Vec<String>> {
    let mut lines = Vec::new();
    match space {
        Space::Proj { p, q } => proj_suite(space, p, q, session, &mut lines)?,
        _ => quadric_suite(space, session, &mut lines)?,
    }
    Ok(lines)
}

fn raw(space: Space, terms: &[(HElem, i64, i64, i64, i64, &[u32])]) -> Result<Element> {
    let raw = terms
        .iter()
        .map(|(c, a, b, i, j, ms)| RawTerm::new(c.clone(), *a, *b, *i, *j, ms.to_vec()))
        .collect();
    rewrite::reduce_raw(space, raw, rewrite::DEFAULT_STRATEGY)
}

fn check(label: String, lhs: &Element, rhs: &Element, lines: &mut Vec<String>) -> Result<()> {
    if lhs != rhs {
        return Err(EqqError::InternalStuck(format!(
            "identity `{label}` fails: {} != {}",
            render::element_text(lhs),
            render::element_text(rhs)
        )));
    }
    lines.push(format!(
        "ok {label}: {} == {}",
        render::element_text(lhs),
        render::element_text(rhs)
    ));
    Ok(())
}

fn quadric_suite(
    space: Space,
    session: &mut CacheSession,
    lines: &mut Vec<String>,
) -> Result<()> {
    let p = space.quadric_p().expect("quadric-like space");
    let one = HElem::one;

    // c^s cx^(p-1-s) splits as z0 m_(s+1) + z1 m_s
    for s in 0..p {
        let lhs = raw(space, &[(one(), 0, 0, s as i64, (p - 1 - s) as i64, &[])])?;
        let rhs = raw(
            space,
            &[(one(), 1, 0, 0, 0, &[s + 1]), (one(), 0, 1, 0, 0, &[s])],
        )?;
        check(format!("euler split s={s}"), &lhs, &rhs, lines)?;
    }

    // cx m_(s+1) = c m_s
    for s in 0..p {
        let lhs = raw(space, &[(one(), 0, 0, 0, 1, &[s + 1])])?;
        let rhs = raw(space, &[(one(), 0, 0, 1, 0, &[s])])?;
        check(format!("index slide s={s}"), &lhs, &rhs, lines)?;
    }

    // m_s m_(p-s) = 0, multiplied through the persisted tables
    for s in 0..=p {
        let prod = session.cell_mul(space, &QMonomial::m_class(s), &QMonomial::m_class(p - s))?;
        check(
            format!("complementary product s={s}"),
            &prod,
            &Element::zero(space),
            lines,
        )?;
    }

    // the degree-p power identity, walked through both derivation chains
    for s in 0..=p {
        let lhs = raw(space, &[(one(), 0, 0, s as i64, (p - s) as i64, &[])])?;
        let rhs = raw(
            space,
            &[(one(), 1, 0, 1, 0, &[s]), (one(), 0, 1, 0, 1, &[s])],
        )?;
        let mid = if s < p {
            raw(
                space,
                &[(one(), 1, 0, 0, 1, &[s + 1]), (one(), 0, 1, 0, 1, &[s])],
            )?
        } else {
            raw(
                space,
                &[(one(), 1, 0, 1, 0, &[p]), (one(), 0, 1, 1, 0, &[p - 1])],
            )?
        };
        check(format!("top power chain s={s} (slide)"), &lhs, &mid, lines)?;
        check(format!("top power chain s={s} (collect)"), &mid, &rhs, lines)?;
    }

    for n in 0..=(p.min(3) as i64) {
        table_pass(space, n, session, lines)?;
    }

    if space == Space::Grass {
        grass_suite(lines)?;
    }
    Ok(())
}

fn proj_suite(
    space: Space,
    p: u32,
    q: u32,
    session: &mut CacheSession,
    lines: &mut Vec<String>,
) -> Result<()> {
    let one = HElem::one;

    let cap = raw(space, &[(one(), 0, 0, p as i64, q as i64, &[])])?;
    check("cap product".to_string(), &cap, &Element::zero(space), lines)?;
    if q >= 1 {
        let inner = raw(space, &[(one(), 0, 0, p as i64, q as i64 - 1, &[])])?;
        nonzero("inside cap (conjugate side)", &inner, lines)?;
    }
    if p >= 1 {
        let inner = raw(space, &[(one(), 0, 0, p as i64 - 1, q as i64, &[])])?;
        nonzero("inside cap (plain side)", &inner, lines)?;
    }

    let lhs = raw(space, &[(one(), 1, 1, 0, 0, &[])])?;
    let rhs = raw(space, &[(HElem::sym(HSym::Xi(1)), 0, 0, 0, 0, &[])])?;
    check("zeta product".to_string(), &lhs, &rhs, lines)?;

    // every basis cell is its own expansion
    for n in -2..=2i64 {
        for cell in basis::basis(space, n) {
            let e = Element::from_monomial(space, cell, HElem::one());
            let expansion = basis::express_in_basis(&e)?;
            let clean = expansion.len() == 1
                && expansion[0].1 == cell
                && expansion[0].2 == HElem::one();
            if !clean {
                return Err(EqqError::InternalStuck(format!(
                    "basis cell fails to round trip in coset {n}"
                )));
            }
        }
        lines.push(format!("ok basis round trip coset {n}"));
    }

    for n in 0..=2i64 {
        table_pass(space, n, session, lines)?;
    }
    Ok(())
}

/// Every product in the (n, -n) table has the grading of its factors'
/// sum, and on quadric-like spaces restricts multiplicatively.
fn table_pass(
    space: Space,
    n: i64,
    session: &mut CacheSession,
    lines: &mut Vec<String>,
) -> Result<()> {
    let quadric_like = space.quadric_p().is_some();
    let t = session.table(space, n, -n)?;
    let mut count = 0usize;
    for (i, x) in t.cells_left.iter().enumerate() {
        let gx = x.grading(space);
        let xe = Element::from_monomial(space, *x, HElem::one());
        for (j, y) in t.cells_right.iter().enumerate() {
            let mut prod = Element::zero(space);
            for (m, c) in &t.products[i][j] {
                prod.add_term(*m, c.clone());
            }
            if let Some(g) = prod.grading()? {
                if g != gx.add(y.grading(space)) {
                    return Err(EqqError::InternalStuck(format!(
                        "product grading drifts at coset pair ({n}, {}), cell pair ({i}, {j})",
                        -n
                    )));
                }
            }
            if quadric_like {
                let ye = Element::from_monomial(space, *y, HElem::one());
                let restricted = restrict::rho_quadric(&prod)?;
                let expected =
                    restrict::rho_quadric(&xe)?.mul(&restrict::rho_quadric(&ye)?);
                if restricted != expected {
                    return Err(EqqError::InternalStuck(format!(
                        "underlying restriction not multiplicative at coset pair ({n}, {}), cell pair ({i}, {j})",
                        -n
                    )));
                }
            }
            count += 1;
        }
    }
    lines.push(format!(
        "ok cell products coset ({n}, {}): {count} products, gradings add{}",
        -n,
        if quadric_like {
            ", underlying map multiplicative"
        } else {
            ""
        }
    ));
    Ok(())
}

fn nonzero(label: &str, e: &Element, lines: &mut Vec<String>) -> Result<()> {
    if e.is_zero() {
        return Err(EqqError::InternalStuck(format!(
            "`{label}` collapsed to zero"
        )));
    }
    lines.push(format!("ok {label}: {} != 0", render::element_text(e)));
    Ok(())
}

/// The stepwise conjugate-Euler derivation and the named Euler classes.
fn grass_suite(lines: &mut Vec<String>) -> Result<()> {
    let gr = Space::Grass;
    let one_minus_kappa = HElem::from_burnside(ONE_MINUS_KAPPA);
    let xi = HElem::sym(HSym::Xi(1));
    let m = |a, b, i, j, mm| QMonomial { a, b, i, j, m: mm };

    let mut s1 = Element::zero(gr);
    s1.add_term(m(0, 2, 0, 0, Some(0)), HElem::one());
    let mut s2 = Element::zero(gr);
    s2.add_term(m(0, 1, 0, 2, None), HElem::one());
    s2.add_term(m(1, 1, 0, 0, Some(1)), HElem::from_int(-1));
    let mut s3 = Element::zero(gr);
    s3.add_term(m(0, 1, 0, 2, None), HElem::one());
    s3.add_term(m(0, 0, 0, 0, Some(1)), xi.scale(-1));
    let mut s4 = Element::zero(gr);
    s4.add_term(m(1, 0, 1, 1, None), one_minus_kappa.clone());
    s4.add_term(m(0, 0, 0, 1, None), HElem::e_pow(2));
    s4.add_term(m(0, 0, 0, 0, Some(1)), one_minus_kappa.mul(&xi).scale(-1));
    let mut s5 = Element::zero(gr);
    s5.add_term(m(1, 0, 1, 1, None), one_minus_kappa.clone());
    s5.add_term(m(0, 0, 0, 1, None), HElem::e_pow(2));
    s5.add_term(m(1, 0, 1, 1, None), one_minus_kappa.scale(-1));
    s5.add_term(m(2, 0, 0, 0, Some(2)), one_minus_kappa.clone());
    let mut s6 = Element::zero(gr);
    s6.add_term(m(2, 0, 0, 0, Some(2)), one_minus_kappa.clone());
    s6.add_term(m(0, 0, 0, 1, None), HElem::e_pow(2));
    let s7 = match expr::eval("(1-kappa) z0^2 cg + e^2 cxl", Some(gr))? {
        Value::Ring(e) => e,
        _ => {
            return Err(EqqError::InternalStuck(
                "named identity did not evaluate to a ring element".to_string(),
            ))
        }
    };

    let steps = [&s1, &s2, &s3, &s4, &s5, &s6, &s7];
    for (k, pair) in steps.windows(2).enumerate() {
        let label = format!("conjugate euler step {} -> {}", k + 1, k + 2);
        let n = grassmann::derivation_step(gr, pair[0], pair[1], &label)?;
        lines.push(format!("ok {label}: {}", render::element_text(&n)));
    }

    let (cg, cxg) = grassmann::tautological_euler(gr)?;
    check(
        "euler class names".to_string(),
        &cg,
        &basis::m_class(gr, 2)?,
        lines,
    )?;
    let direct = raw(gr, &[(HElem::one(), 0, 2, 0, 0, &[0])])?;
    check("conjugate euler normal form".to_string(), &cxg, &direct, lines)?;
    Ok(())
}
