mod common;

use common::{el, mono, one_term};
use eqq_core::basis;
use eqq_core::burnside::{Burnside, ONE_MINUS_KAPPA};
use eqq_core::element::Element;
use eqq_core::expr::{self, Value};
use eqq_core::grading::Grading;
use eqq_core::grassmann::{self, RepC2};
use eqq_core::hpoint::{HElem, HSym};
use eqq_core::render;
use eqq_core::restrict::{FixedQElem, NoneqQElem};
use eqq_core::rewrite::{self, Zeta};
use eqq_core::space::Space;

const GR: Space = Space::Grass;

fn eval_ring(src: &str) -> Element {
    match expr::eval(src, Some(GR)).unwrap() {
        Value::Ring(r) => r,
        Value::Int(k) => Element::one(GR).scale(k),
        other => panic!("expected a ring element from {src:?}, got {other:?}"),
    }
}

#[test]
fn sym_cube_representation_data() {
    // the cubic-form bundle over both fixed components
    assert_eq!(grassmann::sym_power(RepC2::new(2, 0), 3), RepC2::new(4, 0));
    assert_eq!(grassmann::sym_power(RepC2::new(1, 1), 3), RepC2::new(2, 2));
    // rank 8, fixed dimensions (8, 4), so twice the sign part is 2
    let g = grassmann::sym3_grading().unwrap();
    assert_eq!(g, Grading::new(8, 0, 2));
    assert_eq!(g.rank(), 8);
    assert_eq!(g.fixed_dims(), (8, 4));
}

#[test]
fn tautological_euler_pair() {
    let (cg, cxg) = grassmann::tautological_euler(GR).unwrap();
    assert_eq!(cg, basis::m_class(GR, 2).unwrap());
    assert_eq!(cg, one_term(GR, 0, 0, 0, 0, &[2]));

    // the conjugate class in its normal form
    let expect = el(
        GR,
        &[
            (HElem::from_burnside(ONE_MINUS_KAPPA), 1, 0, 1, 1, &[]),
            (HElem::e_pow(2), 0, 0, 0, 1, &[]),
            (HElem::sym_scaled(HSym::Xi(1), -1), 0, 0, 0, 0, &[1]),
        ],
    );
    assert_eq!(cxg, expect);
    // rank-2 conjugate Euler class: twice the sign degree of the line case
    assert_eq!(cxg.grading().unwrap(), Some(Grading::new(0, 4, -1)));
}

/// The conjugate Euler class worked out one rewrite at a time. Every
/// displayed line must reduce to the same normal form as its successor,
/// and a deliberately wrong line must be rejected.
#[test]
fn conjugate_euler_seven_step_derivation() {
    let one_minus_kappa = HElem::from_burnside(ONE_MINUS_KAPPA);
    let xi = HElem::sym(HSym::Xi(1));

    // z1^2 m0
    let mut s1 = Element::zero(GR);
    s1.add_term(mono(0, 2, 0, 0, Some(0)), HElem::one());

    // z1 (cxl^2 - z0 m1)
    let mut s2 = Element::zero(GR);
    s2.add_term(mono(0, 1, 0, 2, None), HElem::one());
    s2.add_term(mono(1, 1, 0, 0, Some(1)), HElem::from_int(-1));

    // z1 cxl^2 - xi m1
    let mut s3 = Element::zero(GR);
    s3.add_term(mono(0, 1, 0, 2, None), HElem::one());
    s3.add_term(mono(0, 0, 0, 0, Some(1)), xi.scale(-1));

    // (1-kappa) z0 cl cxl + e^2 cxl - (1-kappa) xi m1
    let mut s4 = Element::zero(GR);
    s4.add_term(mono(1, 0, 1, 1, None), one_minus_kappa.clone());
    s4.add_term(mono(0, 0, 0, 1, None), HElem::e_pow(2));
    s4.add_term(mono(0, 0, 0, 0, Some(1)), one_minus_kappa.mul(&xi).scale(-1));

    // (1-kappa) z0 cl cxl + e^2 cxl - (1-kappa) z0 (cl cxl - z0 m2)
    let mut s5 = Element::zero(GR);
    s5.add_term(mono(1, 0, 1, 1, None), one_minus_kappa.clone());
    s5.add_term(mono(0, 0, 0, 1, None), HElem::e_pow(2));
    s5.add_term(mono(1, 0, 1, 1, None), one_minus_kappa.scale(-1));
    s5.add_term(mono(2, 0, 0, 0, Some(2)), one_minus_kappa.clone());

    // (1-kappa) z0^2 m2 + e^2 cxl
    let mut s6 = Element::zero(GR);
    s6.add_term(mono(2, 0, 0, 0, Some(2)), one_minus_kappa.clone());
    s6.add_term(mono(0, 0, 0, 1, None), HElem::e_pow(2));

    // the same line with the Euler classes under their own names
    let s7 = eval_ring("(1-kappa) z0^2 cg + e^2 cxl");

    let steps = [&s1, &s2, &s3, &s4, &s5, &s6, &s7];
    let mut normal: Option<Element> = None;
    for (k, pair) in steps.windows(2).enumerate() {
        let label = format!("step {} -> {}", k + 1, k + 2);
        let n = grassmann::derivation_step(GR, pair[0], pair[1], &label)
            .unwrap_or_else(|e| panic!("{label}: {e}"));
        if let Some(prev) = &normal {
            assert_eq!(&n, prev, "{label} drifted to a different normal form");
        }
        normal = Some(n);
    }

    let normal = normal.unwrap();
    let (_, cxg) = grassmann::tautological_euler(GR).unwrap();
    assert_eq!(normal, cxg);

    // doubling the e^2 term must break the chain
    let mut bad = Element::zero(GR);
    bad.add_term(mono(1, 0, 1, 1, None), one_minus_kappa.clone());
    bad.add_term(mono(0, 0, 0, 1, None), HElem::e_pow(2).scale(2));
    bad.add_term(mono(0, 0, 0, 0, Some(1)), one_minus_kappa.mul(&xi).scale(-1));
    assert!(grassmann::derivation_step(GR, &s3, &bad, "perturbed").is_err());

    // so must dropping the unit-minus-kappa twist from the m2 term
    let mut bad6 = Element::zero(GR);
    bad6.add_term(mono(2, 0, 0, 0, Some(2)), HElem::one());
    bad6.add_term(mono(0, 0, 0, 1, None), HElem::e_pow(2));
    assert!(grassmann::derivation_step(GR, &s5, &bad6, "untwisted").is_err());
}

#[test]
fn conjugate_euler_expression_identity() {
    let lhs = eval_ring("cxg");
    let rhs = eval_ring("(1-kappa) z0^2 cg + e^2 cxl");
    assert_eq!(lhs, rhs);

    // and the normal form round-trips through its own rendering
    let text = render::element_text(&lhs);
    assert_eq!(eval_ring(&text), lhs);
}

#[test]
fn generator_gradings() {
    let cases: &[(Element, Grading)] = &[
        (one_term(GR, 1, 0, 0, 0, &[]), Grading::new(-2, 2, -1)), // z0
        (one_term(GR, 0, 1, 0, 0, &[]), Grading::new(0, 0, 1)),   // z1
        (one_term(GR, 0, 0, 1, 0, &[]), Grading::new(2, 0, 1)),   // cl
        (one_term(GR, 0, 0, 0, 1, &[]), Grading::new(0, 2, -1)),  // cxl
        (one_term(GR, 0, 0, 0, 0, &[0]), Grading::new(0, 4, -3)),
        (one_term(GR, 0, 0, 0, 0, &[1]), Grading::new(2, 2, -1)),
        (one_term(GR, 0, 0, 0, 0, &[2]), Grading::new(4, 0, 1)),
        (one_term(GR, 0, 0, 0, 0, &[3]), Grading::new(6, -2, 3)),
    ];
    for (k, (e, g)) in cases.iter().enumerate() {
        assert_eq!(e.grading().unwrap(), Some(*g), "generator case {k}");
    }

    // the two rank-2 Euler classes: 4 = rank in both, conjugation flips
    // the fixed-dimension split
    let (cg, cxg) = grassmann::tautological_euler(GR).unwrap();
    assert_eq!(cg.grading().unwrap(), Some(Grading::new(4, 0, 1)));
    assert_eq!(cxg.grading().unwrap(), Some(Grading::new(0, 4, -1)));
}

#[test]
fn divisibility_towers() {
    // the zeta_0 tower and the zeta_1 tower, three levels deep, with
    // multiply-back round trips; the last element of each list is the
    // common corner product, which saturates to zero (its underlying
    // class c^3 m_0 already overshoots the top cohomology of the
    // quadric model), so its tower is the zero tower
    let z0_tower = [
        one_term(GR, 0, 0, 0, 0, &[3]),
        one_term(GR, 0, 0, 1, 0, &[2]),
        one_term(GR, 0, 0, 2, 0, &[1]),
        one_term(GR, 0, 0, 3, 0, &[0]),
    ];
    let z1_tower = [
        one_term(GR, 0, 0, 0, 3, &[3]),
        one_term(GR, 0, 0, 0, 2, &[2]),
        one_term(GR, 0, 0, 0, 1, &[1]),
        one_term(GR, 0, 0, 0, 0, &[0]),
    ];
    assert_eq!(z0_tower[3], Element::zero(GR));
    assert_eq!(z1_tower[0], Element::zero(GR));

    for (zeta, tower) in [(Zeta::Z0, &z0_tower), (Zeta::Z1, &z1_tower)] {
        for (t, x) in tower.iter().enumerate() {
            for k in 1..=3u32 {
                let d = rewrite::divide(x, zeta, k)
                    .unwrap_or_else(|e| panic!("{zeta:?}^-{k} of tower element {t}: {e}"));
                assert_eq!(d.is_zero(), x.is_zero(), "division changed vanishing");
                let (a, b) = match zeta {
                    Zeta::Z0 => (k as i64, 0),
                    Zeta::Z1 => (0, k as i64),
                };
                let back = rewrite::mul(&d, &one_term(GR, a, b, 0, 0, &[])).unwrap();
                assert_eq!(back, *x, "{zeta:?}^-{k} round trip, tower element {t}");
            }
        }
    }

    // the towers do not cross: m0 has no zeta_0 root, m3 no zeta_1 root
    assert!(rewrite::divide(&z1_tower[3], Zeta::Z0, 1).is_err());
    assert!(rewrite::divide(&z0_tower[0], Zeta::Z1, 1).is_err());
}

#[test]
fn ring_relations() {
    // z0 z1 = xi
    assert_eq!(
        one_term(GR, 1, 1, 0, 0, &[]),
        el(GR, &[(HElem::sym(HSym::Xi(1)), 0, 0, 0, 0, &[])])
    );

    // z1 cxl = (1-kappa) z0 cl + e^2
    assert_eq!(
        one_term(GR, 0, 1, 0, 1, &[]),
        el(
            GR,
            &[
                (HElem::from_burnside(ONE_MINUS_KAPPA), 1, 0, 1, 0, &[]),
                (HElem::e_pow(2), 0, 0, 0, 0, &[]),
            ]
        )
    );

    // cl^s cxl^(2-s) = z0 m_(s+1) + z1 m_s
    for s in 0..=2u32 {
        assert_eq!(
            one_term(GR, 0, 0, s as i64, 2 - s as i64, &[]),
            el(
                GR,
                &[
                    (HElem::one(), 1, 0, 0, 0, &[s + 1]),
                    (HElem::one(), 0, 1, 0, 0, &[s]),
                ]
            ),
            "split of the degree-two product at s = {s}"
        );
    }

    // cxl m_(s+1) = cl m_s
    for s in 0..=2u32 {
        assert_eq!(
            one_term(GR, 0, 0, 0, 1, &[s + 1]),
            one_term(GR, 0, 0, 1, 0, &[s]),
            "index slide at s = {s}"
        );
    }

    // complementary dressings annihilate
    assert_eq!(el(GR, &[(HElem::one(), 0, 0, 0, 0, &[3, 0])]), Element::zero(GR));
    assert_eq!(el(GR, &[(HElem::one(), 0, 0, 0, 0, &[2, 1])]), Element::zero(GR));
}

#[test]
fn degree_two_basis_table() {
    let cells = basis::basis(GR, 2);
    let expect = vec![
        mono(0, 2, 0, 0, None),
        mono(0, 1, 1, 0, None),
        mono(0, 0, 2, 0, None),
        mono(0, 1, 0, 0, Some(2)),
        mono(0, 0, 1, 0, Some(2)),
        mono(-1, 0, 1, 1, Some(2)),
    ];
    assert_eq!(cells, expect);

    let gradings: Vec<Grading> = cells.iter().map(|c| c.grading(GR)).collect();
    assert_eq!(
        gradings,
        vec![
            Grading::new(0, 0, 2),
            Grading::new(2, 0, 2),
            Grading::new(4, 0, 2),
            Grading::new(4, 0, 2),
            Grading::new(6, 0, 2),
            Grading::new(8, 0, 2),
        ]
    );

    // exactly one cell sits in the cubic-form Euler degree
    let hits: Vec<_> = cells
        .iter()
        .filter(|c| c.grading(GR) == Grading::new(8, 0, 2))
        .collect();
    assert_eq!(hits, vec![&mono(-1, 0, 1, 1, Some(2))]);
}

#[test]
fn lines_computation() {
    let comp = grassmann::euler_sym3(GR).unwrap();

    assert_eq!(comp.grading, Grading::new(8, 0, 2));
    assert_eq!(comp.basis_monomial, mono(-1, 0, 1, 1, Some(2)));

    // underlying count: 27 c^2 m0 in the nonequivariant quadric model
    let c = NoneqQElem::c(3);
    let m0 = NoneqQElem::m(3, 0);
    assert_eq!(comp.rho_target, c.mul(&c).mul(&m0).scale(27));

    // fixed points: nothing over the rigid component, 3c^2 over the split one
    let mut fx = FixedQElem::zero(3);
    fx.add_pow(1, 2, 3);
    assert_eq!(comp.fixed_target, fx);

    assert_eq!(comp.coefficient, Burnside::new(3, 12));
    assert_eq!(comp.coefficient.rho(), 27);
    assert_eq!(comp.coefficient.fixed(), 3);
    assert_eq!(comp.trace.len(), 5);

    let mut expect = Element::zero(GR);
    expect.add_term(
        mono(-1, 0, 1, 1, Some(2)),
        HElem::from_burnside(Burnside::new(3, 12)),
    );
    assert_eq!(comp.result, expect);
    assert_eq!(
        render::element_text(&comp.result),
        "(3 + 12g) z0^-1 cl cxl m[2]"
    );

    let report = grassmann::lines_report(comp.coefficient);
    assert_eq!(
        (report.type_i, report.type_ii, report.type_iii, report.type_iv),
        (0, 3, 0, 12)
    );
    assert_eq!(report.total(), 27);
    assert_eq!(report.fixed(), 3);
    assert_eq!(report.c2_set(), "12[C2/e] + 3[C2/C2]");

    // the computation refuses every other space
    for sp in [Space::quadric(3).unwrap(), Space::proj(2, 2).unwrap()] {
        assert!(grassmann::euler_sym3(sp).is_err());
    }
}
