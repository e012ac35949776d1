use std::collections::BTreeMap;
use std::env;
use std::fs;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

use eqq_core::basis;
use eqq_core::element::{Element, QMonomial};
use eqq_core::error::Result;
use eqq_core::hpoint::HElem;
use eqq_core::rewrite;
use eqq_core::space::Space;
use serde::{Deserialize, Serialize};

/// Stamp for persisted tables; bump when the rewrite engine or the
/// table layout changes shape.
pub const TABLE_VERSION: &str = concat!("eqq-tables-1/", env!("CARGO_PKG_VERSION"));

/// Products of all basis cells of one coset against all cells of
/// another, with each product stored as its basis expansion.
#[derive(Debug, Serialize, Deserialize)]
pub struct CosetTable {
    pub space: String,
    pub left: i64,
    pub right: i64,
    pub cells_left: Vec<QMonomial>,
    pub cells_right: Vec<QMonomial>,
    /// products[i][j] expands cells_left[i] * cells_right[j]
    pub products: Vec<Vec<Vec<(QMonomial, HElem)>>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct TableCache {
    pub version: String,
    pub tables: BTreeMap<String, CosetTable>,
}

impl TableCache {
    fn empty() -> TableCache {
        TableCache {
            version: TABLE_VERSION.to_string(),
            tables: BTreeMap::new(),
        }
    }
}

fn table_key(space: Space, left: i64, right: i64) -> String {
    format!("{space} {left},{right}")
}

/// $EQQ_CACHE_DIR wins, then $XDG_CACHE_HOME/eqq, then ~/.cache/eqq.
pub fn cache_file() -> Option<PathBuf> {
    if let Ok(dir) = env::var("EQQ_CACHE_DIR") {
        if !dir.is_empty() {
            return Some(PathBuf::from(dir).join("tables.json"));
        }
    }
    if let Ok(x) = env::var("XDG_CACHE_HOME") {
        if !x.is_empty() {
            return Some(PathBuf::from(x).join("eqq").join("tables.json"));
        }
    }
    env::var("HOME")
        .ok()
        .map(|h| PathBuf::from(h).join(".cache").join("eqq").join("tables.json"))
}

/// One command's view of the table store: loads once, computes misses,
/// persists at the end when anything was added.
pub struct CacheSession {
    path: Option<PathBuf>,
    cache: TableCache,
    dirty: bool,
}

impl CacheSession {
    /// Every product is recomputed and nothing is persisted.
    pub fn disabled() -> CacheSession {
        CacheSession {
            path: None,
            cache: TableCache::empty(),
            dirty: false,
        }
    }

    pub fn at_path(path: Option<PathBuf>) -> CacheSession {
        let cache = match &path {
            Some(p) => match fs::read_to_string(p) {
                Ok(text) => match serde_json::from_str::<TableCache>(&text) {
                    Ok(c) => validate(c),
                    Err(_) => {
                        eprintln!("warning: unreadable table cache, recomputing");
                        TableCache::empty()
                    }
                },
                Err(_) => TableCache::empty(),
            },
            None => TableCache::empty(),
        };
        CacheSession {
            path,
            cache,
            dirty: false,
        }
    }

    pub fn open() -> CacheSession {
        CacheSession::at_path(cache_file())
    }

    /// The full product table for a pair of cosets, built on first use.
    pub fn table(&mut self, space: Space, left: i64, right: i64) -> Result<&CosetTable> {
        let key = table_key(space, left, right);
        if !self.cache.tables.contains_key(&key) {
            let t = build_table(space, left, right)?;
            self.cache.tables.insert(key.clone(), t);
            self.dirty = true;
        }
        Ok(self.cache.tables.get(&key).expect("table inserted above"))
    }

    /// Product of two basis cells through the tables; anything that is
    /// not a basis cell falls back to a direct rewrite.
    pub fn cell_mul(&mut self, space: Space, x: &QMonomial, y: &QMonomial) -> Result<Element> {
        let t = self.table(space, x.coset(space), y.coset(space))?;
        let found = t
            .cells_left
            .iter()
            .position(|c| c == x)
            .zip(t.cells_right.iter().position(|c| c == y));
        match found {
            Some((i, j)) => {
                let mut out = Element::zero(space);
                for (m, c) in &t.products[i][j] {
                    out.add_term(*m, c.clone());
                }
                Ok(out)
            }
            None => rewrite::mul(
                &Element::from_monomial(space, *x, HElem::one()),
                &Element::from_monomial(space, *y, HElem::one()),
            ),
        }
    }

    /// Temp-file-then-rename write; failures only warn, never fail the
    /// command that did the computing.
    pub fn persist(&self) {
        if !self.dirty {
            return;
        }
        let Some(path) = &self.path else {
            return;
        };
        if let Some(dir) = path.parent() {
            if let Err(e) = fs::create_dir_all(dir) {
                eprintln!("warning: cannot create cache directory: {e}");
                return;
            }
        }
        let json = match serde_json::to_string(&self.cache) {
            Ok(j) => j,
            Err(e) => {
                eprintln!("warning: cannot serialize table cache: {e}");
                return;
            }
        };
        let tmp = path.with_extension(format!("tmp.{}", std::process::id()));
        if let Err(e) = fs::write(&tmp, json).and_then(|()| fs::rename(&tmp, path)) {
            eprintln!("warning: cannot write table cache: {e}");
            let _ = fs::remove_file(&tmp);
        }
    }
}

fn build_table(space: Space, left: i64, right: i64) -> Result<CosetTable> {
    let cells_left = basis::basis(space, left);
    let cells_right = basis::basis(space, right);
    let mut products = Vec::with_capacity(cells_left.len());
    for x in &cells_left {
        let xe = Element::from_monomial(space, *x, HElem::one());
        let mut row = Vec::with_capacity(cells_right.len());
        for y in &cells_right {
            let ye = Element::from_monomial(space, *y, HElem::one());
            let prod = rewrite::mul(&xe, &ye)?;
            row.push(prod.terms.into_iter().collect());
        }
        products.push(row);
    }
    Ok(CosetTable {
        space: space.to_string(),
        left,
        right,
        cells_left,
        cells_right,
        products,
    })
}

/// Version check plus one recomputed entry chosen pseudo-randomly; any
/// mismatch drops the whole store.
fn validate(c: TableCache) -> TableCache {
    if c.version != TABLE_VERSION {
        return TableCache::empty();
    }
    let sizes: Vec<usize> = c
        .tables
        .values()
        .map(|t| t.cells_left.len() * t.cells_right.len())
        .collect();
    let total: usize = sizes.iter().sum();
    if total == 0 {
        return c;
    }
    let mut pick = (weak_seed() % total as u64) as usize;
    for t in c.tables.values() {
        let n = t.cells_left.len() * t.cells_right.len();
        if pick >= n {
            pick -= n;
            continue;
        }
        let i = pick / t.cells_right.len().max(1);
        let j = pick % t.cells_right.len().max(1);
        if spot_check(t, i, j) {
            return c;
        }
        eprintln!("warning: table cache failed validation, recomputing");
        return TableCache::empty();
    }
    c
}

fn spot_check(t: &CosetTable, i: usize, j: usize) -> bool {
    let Ok(space) = t.space.parse::<Space>() else {
        return false;
    };
    if t.cells_left != basis::basis(space, t.left)
        || t.cells_right != basis::basis(space, t.right)
        || t.products.len() != t.cells_left.len()
        || t.products.iter().any(|row| row.len() != t.cells_right.len())
    {
        return false;
    }
    let x = Element::from_monomial(space, t.cells_left[i], HElem::one());
    let y = Element::from_monomial(space, t.cells_right[j], HElem::one());
    let Ok(prod) = rewrite::mul(&x, &y) else {
        return false;
    };
    let fresh: Vec<(QMonomial, HElem)> = prod.terms.into_iter().collect();
    t.products[i][j] == fresh
}

fn weak_seed() -> u64 {
    let mut s = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_nanos() as u64)
        .unwrap_or(0)
        | 1;
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Space {
        "quadric:3".parse().unwrap()
    }

    #[test]
    fn cell_mul_matches_direct_rewrite() {
        let sp = q3();
        let mut session = CacheSession::disabled();
        for x in basis::basis(sp, 1) {
            for y in basis::basis(sp, -1) {
                let cached = session.cell_mul(sp, &x, &y).unwrap();
                let direct = rewrite::mul(
                    &Element::from_monomial(sp, x, HElem::one()),
                    &Element::from_monomial(sp, y, HElem::one()),
                )
                .unwrap();
                assert_eq!(cached, direct);
            }
        }
    }

    #[test]
    fn persist_and_reload_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tables.json");

        let sp = q3();
        let mut session = CacheSession::at_path(Some(path.clone()));
        session.table(sp, 0, 0).unwrap();
        session.persist();
        assert!(path.exists());

        let mut reloaded = CacheSession::at_path(Some(path.clone()));
        assert!(reloaded.cache.tables.len() == 1);
        // a warm lookup equals a cold computation
        let cells = basis::basis(sp, 0);
        let warm = reloaded.cell_mul(sp, &cells[1], &cells[2]).unwrap();
        let cold = CacheSession::disabled()
            .cell_mul(sp, &cells[1], &cells[2])
            .unwrap();
        assert_eq!(warm, cold);
        // nothing new was computed, so a second persist is a no-op
        assert!(!reloaded.dirty);
    }

    #[test]
    fn version_mismatch_discards_store() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tables.json");

        let sp = q3();
        let mut session = CacheSession::at_path(Some(path.clone()));
        session.table(sp, 0, 0).unwrap();
        session.persist();

        let text = fs::read_to_string(&path).unwrap();
        fs::write(&path, text.replace(TABLE_VERSION, "eqq-tables-0/none")).unwrap();
        let reloaded = CacheSession::at_path(Some(path));
        assert!(reloaded.cache.tables.is_empty());
    }

    #[test]
    fn corrupted_entry_fails_spot_check() {
        let sp = q3();
        let mut t = build_table(sp, 1, 1).unwrap();
        for i in 0..t.cells_left.len() {
            for j in 0..t.cells_right.len() {
                assert!(spot_check(&t, i, j), "honest entry ({i}, {j})");
            }
        }
        // double one coefficient somewhere
        'outer: for row in &mut t.products {
            for entry in row.iter_mut() {
                if let Some((_, c)) = entry.first_mut() {
                    *c = c.scale(2);
                    break 'outer;
                }
            }
        }
        let broken = (0..t.cells_left.len()).any(|i| {
            (0..t.cells_right.len()).any(|j| !spot_check(&t, i, j))
        });
        assert!(broken);
    }
}
