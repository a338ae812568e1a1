//! Named spaces, maps and coefficient groups.
//!
//! Space names:
//!
//! | name | model |
//! |------|-------|
//! | `point` | one vertex |
//! | `S<n>` | `Δⁿ/∂Δⁿ`, so `S0` is two points |
//! | `Delta<n>` | the standard simplex |
//! | `C<p>` | circle subdivided into `p` edges |
//! | `torus` | `S¹ × S¹` |
//! | `klein` | Klein bottle with one vertex |
//! | `RP2` | `M(Z/2, 1)` |
//! | `M<m>` | `M(Z/m, 1)` as a mapping cone |
//! | `S1vS1` | wedge of two circles |
//! | `genus2` | closed orientable surface of genus two |
//! | `B<m>` | bar construction `B(Z/m)` |
//!
//! Group literals are sums of `0`, `Z`, `Z^r` and `Z/m`, for example `Z + Z/3`.

use std::path::Path;

use crate::abgroup::AbGroup;
use crate::error::{Error, Result};
use crate::sset::{
    bar_construction, circle, degree_collapse, genus2, klein_bottle, mapping_cone, moore_space,
    point, product, simplex, sphere, torus, wedge, FinSSet, SMap,
};

pub const SPACE_NAMES: &[&str] = &[
    "point", "S<n>", "Delta<n>", "C<p>", "torus", "klein", "RP2", "M<m>", "S1vS1", "genus2", "B<m>",
];

/// Builds a named space, or reads one from disk when `name` is `@path`.
/// Files carry their own truncation and ignore `truncation`.
pub fn space(name: &str, truncation: usize) -> Result<FinSSet> {
    if let Some(path) = name.strip_prefix('@') {
        return read_space(Path::new(path));
    }
    let numeric = |prefix: &str| -> Option<usize> {
        let rest = name.strip_prefix(prefix)?;
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        rest.parse().ok()
    };
    match name {
        "point" => return Ok(point(truncation)),
        "torus" => return torus(truncation),
        "klein" => return klein_bottle(truncation),
        "RP2" => return moore_space(2, truncation),
        "genus2" => return genus2(truncation),
        "S1vS1" => {
            let s = sphere(1, truncation)?;
            return Ok(wedge(&s, &s)?.sset);
        }
        _ => {}
    }
    if let Some(n) = numeric("Delta") {
        return simplex(n, truncation);
    }
    if let Some(n) = numeric("S") {
        return sphere(n, truncation);
    }
    if let Some(p) = numeric("C") {
        return circle(p, truncation);
    }
    if let Some(m) = numeric("M") {
        return moore_space(m, truncation);
    }
    if let Some(m) = numeric("B") {
        if m == 0 {
            return Err(Error::InvalidModel("B(Z/0) is not finite".into()));
        }
        return Ok(bar_construction(&AbGroup::cyclic(m as u64), truncation)?.sset);
    }
    Err(Error::InvalidModel(format!(
        "unknown space `{name}`; expected one of {} or @file",
        SPACE_NAMES.join(", ")
    )))
}

/// Smallest truncation at which the named model is the intended space rather
/// than a skeleton of it. Files report 0.
pub fn min_truncation(name: &str) -> usize {
    let numeric = |prefix: &str| name.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok());
    match name {
        "point" => 0,
        "S1vS1" => 1,
        "torus" | "klein" | "RP2" | "genus2" => 2,
        _ => {
            if let Some(n) = numeric("S").or_else(|| numeric("Delta")) {
                n
            } else if name.starts_with('C') || name.starts_with('B') {
                1
            } else if name.starts_with('M') {
                2
            } else {
                0
            }
        }
    }
}

pub fn read_space(path: &Path) -> Result<FinSSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidModel(format!("{}: {e}", path.display())))?;
    FinSSet::parse(&text)
}

/// Parses a group literal such as `Z^2 + Z/3 + Z/4`.
pub fn parse_group(src: &str) -> Result<AbGroup> {
    let mut free = 0usize;
    let mut orders = Vec::new();
    let mut offset = 0;
    for term in src.split('+') {
        let column = offset + term.len() - term.trim_start().len() + 1;
        offset += term.len() + 1;
        let t = term.trim();
        let bad = |msg: &str| Error::parse(1, column, format!("{msg} in group term `{t}`"));
        if t == "0" {
            continue;
        }
        if t == "Z" {
            free += 1;
        } else if let Some(r) = t.strip_prefix("Z^") {
            free += r.parse::<usize>().map_err(|_| bad("expected a rank"))?;
        } else if let Some(m) = t.strip_prefix("Z/") {
            let m: u64 = m.parse().map_err(|_| bad("expected a modulus"))?;
            if m == 0 {
                free += 1;
            } else {
                orders.push(m);
            }
        } else {
            return Err(bad("expected 0, Z, Z^r or Z/m"));
        }
    }
    Ok(AbGroup::free(free).direct_sum(&AbGroup::from_cyclic_orders(&orders)))
}

/// A corpus map with a short label.
#[derive(Clone, Debug)]
pub struct NamedMap {
    pub name: String,
    pub map: SMap,
}

/// Maps used for naturality checks: degree collapses, wedge inclusions, the torus
/// projection, the inclusion of the attaching circle into a Moore space, and a
/// constant map.
pub fn maps(truncation: usize) -> Result<Vec<NamedMap>> {
    let named = |name: &str, map: SMap| NamedMap {
        name: name.to_string(),
        map,
    };
    let s1 = sphere(1, truncation)?;
    let w = wedge(&s1, &s1)?;
    let t = product(&s1, &s1)?;
    let cone = mapping_cone(&degree_collapse(3, truncation)?)?;
    let klein = klein_bottle(truncation)?;
    Ok(vec![
        named("C2 -> S1 (degree 2)", degree_collapse(2, truncation)?),
        named("C3 -> S1 (degree 3)", degree_collapse(3, truncation)?),
        named("S1 -> S1vS1 (left)", w.in_left),
        named("S1 -> S1vS1 (right)", w.in_right),
        named("torus -> S1 (projection)", t.projection_left()?),
        named("S1 -> M3 (attaching circle)", cone.from_y),
        named("klein -> S1 (constant)", SMap::constant(&klein, &s1)?),
    ])
}
