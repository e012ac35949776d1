#![allow(dead_code)]

use eqq_core::element::{Element, QMonomial};
use eqq_core::hpoint::HElem;
use eqq_core::rewrite::{self, RawTerm, Strategy};
use eqq_core::space::Space;

pub fn q(p: u32) -> Space {
    Space::quadric(p).unwrap()
}

pub fn mono(a: i64, b: i64, i: i64, j: i64, m: Option<u32>) -> QMonomial {
    QMonomial {
        a,
        b,
        i: i.try_into().unwrap(),
        j: j.try_into().unwrap(),
        m,
    }
}

/// Reduce a sum of raw monomial terms (coeff, a, b, i, j, m-indices).
pub fn el(space: Space, terms: &[(HElem, i64, i64, i64, i64, &[u32])]) -> Element {
    let raw: Vec<RawTerm> = terms
        .iter()
        .map(|(c, a, b, i, j, ms)| RawTerm::new(c.clone(), *a, *b, *i, *j, ms.to_vec()))
        .collect();
    rewrite::reduce_raw(space, raw, rewrite::DEFAULT_STRATEGY).unwrap()
}

pub fn el_with(space: Space, terms: &[(HElem, i64, i64, i64, i64, &[u32])], st: Strategy) -> Element {
    let raw: Vec<RawTerm> = terms
        .iter()
        .map(|(c, a, b, i, j, ms)| RawTerm::new(c.clone(), *a, *b, *i, *j, ms.to_vec()))
        .collect();
    rewrite::reduce_raw(space, raw, st).unwrap()
}

/// Single monomial with unit coefficient.
pub fn one_term(space: Space, a: i64, b: i64, i: i64, j: i64, ms: &[u32]) -> Element {
    el(space, &[(HElem::one(), a, b, i, j, ms)])
}
