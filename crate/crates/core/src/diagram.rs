use crate::basis::ro2_basis;
use crate::error::Result;
use crate::hpoint::{self, GroupAt};
use crate::render::monomial_text;
use crate::space::Space;
use std::collections::BTreeMap;
use std::fmt::Write;

fn occupancy(
    space: Space,
    cells: &[(crate::element::QMonomial, (i64, i64))],
) -> BTreeMap<(i64, i64), Vec<String>> {
    let mut at: BTreeMap<(i64, i64), Vec<String>> = BTreeMap::new();
    for (mono, (u, s)) in cells {
        let text = monomial_text(space, mono);
        let text = if text.is_empty() { "1".to_string() } else { text };
        at.entry((*u, *s)).or_default().push(text);
    }
    at
}

/// ASCII view of the integer-graded basis lattice: one mark per (u, s)
/// point, `@` where two cells share a point, with a cell legend below.
pub fn ro2_diagram_ascii(space: Space) -> Result<String> {
    let cells = ro2_basis(space)?;
    let at = occupancy(space, &cells);
    let umax = at.keys().map(|p| p.0).max().unwrap_or(0);
    let smax = at.keys().map(|p| p.1).max().unwrap_or(0);
    let mut out = String::new();
    writeln!(out, "integer-graded basis of {space} (u across, s up)").unwrap();
    let mut s = smax;
    while s >= 0 {
        write!(out, "{s:>3} |").unwrap();
        let mut u = 0;
        while u <= umax {
            let mark = match at.get(&(u, s)).map(Vec::len) {
                None => '.',
                Some(1) => 'o',
                Some(_) => '@',
            };
            write!(out, " {mark}").unwrap();
            u += 2;
        }
        out.push('\n');
        s -= 2;
    }
    write!(out, "    +").unwrap();
    let mut u = 0;
    while u <= umax {
        write!(out, "--").unwrap();
        u += 2;
    }
    out.push('\n');
    write!(out, "     ").unwrap();
    let mut u = 0;
    while u <= umax {
        write!(out, "{:>2}", u).unwrap();
        u += 2;
    }
    out.push('\n');
    for ((u, s), names) in &at {
        writeln!(out, "({u}, {s}): {}", names.join(", ")).unwrap();
    }
    Ok(out)
}

fn svg_open(out: &mut String, x0: i64, y0: i64, w: i64, h: i64) {
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{x0} {y0} {w} {h}\" \
         font-family=\"monospace\" font-size=\"11\">"
    )
    .unwrap();
    writeln!(
        out,
        "<rect x=\"{x0}\" y=\"{y0}\" width=\"{w}\" height=\"{h}\" fill=\"white\"/>"
    )
    .unwrap();
}

/// SVG companion of `ro2_diagram_ascii`: concentric circles mark double
/// occupancy, every cell is labeled with its monomial.
pub fn ro2_diagram_svg(space: Space) -> Result<String> {
    let cells = ro2_basis(space)?;
    let at = occupancy(space, &cells);
    let umax = at.keys().map(|p| p.0).max().unwrap_or(0);
    let smax = at.keys().map(|p| p.1).max().unwrap_or(0);
    let sc = 60i64;
    let px = |u: i64| u * sc / 2 + 40;
    let py = |s: i64| (smax - s) * sc / 2 + 30;
    let mut out = String::new();
    svg_open(&mut out, 0, 0, px(umax) + 120, py(-1).max(py(0) + 40) + 20);
    for g in (0..=umax).step_by(2) {
        writeln!(
            out,
            "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#ddd\"/>",
            px(g),
            py(smax),
            py(0)
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
            px(g),
            py(0) + 18,
            g
        )
        .unwrap();
    }
    for g in (0..=smax).step_by(2) {
        writeln!(
            out,
            "<line x1=\"{1}\" y1=\"{0}\" x2=\"{2}\" y2=\"{0}\" stroke=\"#ddd\"/>",
            py(g),
            px(0),
            px(umax)
        )
        .unwrap();
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>",
            px(0) - 10,
            py(g) + 4,
            g
        )
        .unwrap();
    }
    for ((u, s), names) in &at {
        let (x, y) = (px(*u), py(*s));
        writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"4\" fill=\"black\"/>").unwrap();
        if names.len() > 1 {
            writeln!(
                out,
                "<circle cx=\"{x}\" cy=\"{y}\" r=\"8\" fill=\"none\" stroke=\"black\"/>"
            )
            .unwrap();
        }
        let label = names.join(", ");
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{}</text>",
            x + 10,
            y - 6,
            label.replace('^', "&#94;")
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    Ok(out)
}

const CHART_RANGE: i64 = 8;

fn chart_mark(u: i64, s: i64) -> char {
    match hpoint::group_at(u, s) {
        Ok(GroupAt::BurnsideSlot) => '#',
        Ok(GroupAt::Z(_)) => 'o',
        Ok(GroupAt::Z2(_)) => 'x',
        Ok(GroupAt::Zero) => '.',
        Err(_) => ' ',
    }
}

/// ASCII chart of the point-ring groups over the (u, s) plane:
/// `#` the Burnside slot at the origin, `o` infinite cyclic, `x` order two,
/// `.` zero, blank where the engine does not model the group.
pub fn hpoint_chart_ascii() -> String {
    let mut out = String::new();
    writeln!(
        out,
        "point-ring groups at u + s*sigma (u across, s up; # Burnside ring, o Z, x Z/2)"
    )
    .unwrap();
    for s in (-CHART_RANGE..=CHART_RANGE).rev() {
        write!(out, "{s:>3} |").unwrap();
        for u in -CHART_RANGE..=CHART_RANGE {
            write!(out, " {}", chart_mark(u, s)).unwrap();
        }
        out.push('\n');
    }
    write!(out, "    +").unwrap();
    for _ in -CHART_RANGE..=CHART_RANGE {
        write!(out, "--").unwrap();
    }
    out.push('\n');
    write!(out, "     ").unwrap();
    for u in -CHART_RANGE..=CHART_RANGE {
        if u % 4 == 0 {
            write!(out, "{u:>2}").unwrap();
        } else {
            write!(out, "  ").unwrap();
        }
    }
    out.push('\n');
    writeln!(out, "e at (0,1)   xi at (-2,2)   tau(iota^-2) at (2,-2)   e^-1 kappa at (0,-1)")
        .unwrap();
    out
}

/// SVG companion of `hpoint_chart_ascii`.
pub fn hpoint_chart_svg() -> String {
    let sc = 26i64;
    let off = CHART_RANGE * sc + 40;
    let px = |u: i64| u * sc + off;
    let py = |s: i64| -s * sc + off;
    let side = 2 * off;
    let mut out = String::new();
    svg_open(&mut out, 0, 0, side + 30, side + 30);
    writeln!(
        out,
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"#999\"/>",
        px(-CHART_RANGE),
        py(0),
        px(CHART_RANGE)
    )
    .unwrap();
    writeln!(
        out,
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#999\"/>",
        px(0),
        py(-CHART_RANGE),
        py(CHART_RANGE)
    )
    .unwrap();
    for s in -CHART_RANGE..=CHART_RANGE {
        for u in -CHART_RANGE..=CHART_RANGE {
            let (x, y) = (px(u), py(s));
            match hpoint::group_at(u, s) {
                Ok(GroupAt::BurnsideSlot) => {
                    writeln!(
                        out,
                        "<rect x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"black\"/>",
                        x - 6,
                        y - 6
                    )
                    .unwrap();
                }
                Ok(GroupAt::Z(_)) => {
                    writeln!(out, "<circle cx=\"{x}\" cy=\"{y}\" r=\"5\" fill=\"black\"/>")
                        .unwrap();
                }
                Ok(GroupAt::Z2(_)) => {
                    writeln!(
                        out,
                        "<circle cx=\"{x}\" cy=\"{y}\" r=\"5\" fill=\"none\" stroke=\"black\"/>"
                    )
                    .unwrap();
                }
                Ok(GroupAt::Zero) | Err(_) => {}
            }
        }
    }
    for (u, s, label) in [
        (0i64, 1i64, "e"),
        (-2, 2, "xi"),
        (2, -2, "tau(iota^-2)"),
        (0, -1, "e^-1 kappa"),
    ] {
        writeln!(
            out,
            "<text x=\"{}\" y=\"{}\">{}</text>",
            px(u) + 8,
            py(s) - 6,
            label.replace('^', "&#94;")
        )
        .unwrap();
    }
    writeln!(
        out,
        "<text x=\"{}\" y=\"{}\">u</text><text x=\"{}\" y=\"{}\">s</text>",
        px(CHART_RANGE) + 10,
        py(0) + 4,
        px(0) - 16,
        py(CHART_RANGE) - 8
    )
    .unwrap();
    out.push_str("</svg>\n");
    out
}
