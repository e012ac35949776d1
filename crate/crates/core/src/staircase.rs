/// The per-coset staircase walk that enumerates basis cells.
///
/// For caps (p_cap, q_cap) and coset index n, the walk starts at exponents
/// (i, j) = (0, 0) and takes p_cap + q_cap - 1 steps, incrementing i when
/// allowed and favourable and j otherwise. Each visited position is a basis
/// cell; its zeta-dress is determined by the deficit d = n - i + j:
/// an undressed cell has d = 0, positive d is carried by z1^d (or by the
/// divided class z0^-d once i is at its cap), negative d by z0^-d (or by
/// z1^d once j is at its cap).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cell {
    pub i: i64,
    pub j: i64,
    /// z0-exponent of the dress (negative for divided classes).
    pub a: i64,
    /// z1-exponent of the dress.
    pub b: i64,
}

fn dress(p_cap: u32, q_cap: u32, n: i64, i: i64, j: i64) -> Cell {
    let d = n - i + j;
    let (a, b) = if d == 0 {
        (0, 0)
    } else if d > 0 {
        if i >= p_cap as i64 {
            (-d, 0)
        } else {
            (0, d)
        }
    } else if j >= q_cap as i64 {
        (0, d)
    } else {
        (-d, 0)
    };
    Cell { i, j, a, b }
}

/// All p_cap + q_cap cells of the walk, in degree order t = i + j.
pub fn staircase(p_cap: u32, q_cap: u32, n: i64) -> Vec<Cell> {
    let total = (p_cap + q_cap) as i64;
    let mut out = Vec::with_capacity(total as usize);
    let (mut i, mut j) = (0i64, 0i64);
    for t in 0..total {
        out.push(dress(p_cap, q_cap, n, i, j));
        if t + 1 == total {
            break;
        }
        if step_i(p_cap, q_cap, n, i, j) {
            i += 1;
        } else {
            j += 1;
        }
    }
    out
}

fn step_i(p_cap: u32, q_cap: u32, n: i64, i: i64, j: i64) -> bool {
    if i >= p_cap as i64 {
        false
    } else if j >= q_cap as i64 {
        true
    } else {
        // move toward deficit zero; ties break toward i
        n - i + j >= 0
    }
}

/// The single cell of the walk at total degree t, if 0 <= t < p_cap + q_cap.
pub fn cell_at(p_cap: u32, q_cap: u32, n: i64, t: i64) -> Option<Cell> {
    if t < 0 || t >= (p_cap + q_cap) as i64 {
        return None;
    }
    let (mut i, mut j) = (0i64, 0i64);
    for _ in 0..t {
        if step_i(p_cap, q_cap, n, i, j) {
            i += 1;
        } else {
            j += 1;
        }
    }
    Some(dress(p_cap, q_cap, n, i, j))
}
