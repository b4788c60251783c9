//! Exhaustive generators for small instances.
//!
//! Every stream is duplicate-free and comes out in lexicographic order of
//! its tables (row-major), matrices (row-major) or membership masks. No
//! isomorphism reduction is done.

use crate::actions::{validate_action, PreorderedAction};
use crate::error::{Error, Result};
use crate::monoid::{endomorphism_monoid, FiniteMonoid, MonoidHom, Submonoid};
use crate::pom::{is_left_normal, is_normal, is_right_normal};
use crate::relation::{is_compatible, Preorder};
use crate::schreier::ActionTable;

pub const MONOID_SIZE_GUARD: usize = 4;
pub const PREORDER_SIZE_GUARD: usize = 5;
pub const SUBMONOID_SIZE_GUARD: usize = 6;
pub const ACTION_SIZE_GUARD: usize = 3;
/// Bound on `|N|^|M|` for hom enumeration.
pub const HOM_SEARCH_GUARD: usize = 10_000_000;

fn guard(what: impl Into<String>, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        return Err(Error::SizeGuardExceeded { what: what.into(), bound });
    }
    Ok(())
}

/// All monoid tables on `{0, .., n-1}` with identity 0.
pub fn enumerate_monoids(n: usize) -> Result<Vec<FiniteMonoid>> {
    guard(format!("monoid enumeration at size {n}"), n, MONOID_SIZE_GUARD)?;
    if n == 0 {
        return Ok(Vec::new());
    }
    const FREE: usize = usize::MAX;
    let mut table = vec![FREE; n * n];
    for i in 0..n {
        table[i] = i;
        table[i * n] = i;
    }
    let cells: Vec<usize> = (1..n).flat_map(|i| (1..n).map(move |j| i * n + j)).collect();
    let mut out = Vec::new();
    fill_monoid(n, &mut table, &cells, 0, &mut out);
    Ok(out)
}

fn fill_monoid(n: usize, table: &mut [usize], cells: &[usize], depth: usize, out: &mut Vec<FiniteMonoid>) {
    if depth == cells.len() {
        out.push(FiniteMonoid::from_flat(n, table.to_vec(), 0).expect("backtracking keeps tables associative"));
        return;
    }
    let cell = cells[depth];
    for v in 0..n {
        table[cell] = v;
        if partial_associative(n, table) {
            fill_monoid(n, table, cells, depth + 1, out);
        }
    }
    table[cell] = usize::MAX;
}

fn partial_associative(n: usize, t: &[usize]) -> bool {
    let get = |a: usize, b: usize| t[a * n + b];
    for a in 0..n {
        for b in 0..n {
            let ab = get(a, b);
            if ab == usize::MAX {
                continue;
            }
            for c in 0..n {
                let bc = get(b, c);
                if bc == usize::MAX {
                    continue;
                }
                let (l, r) = (get(ab, c), get(a, bc));
                if l != usize::MAX && r != usize::MAX && l != r {
                    return false;
                }
            }
        }
    }
    true
}

/// All preorders on the carrier compatible with the operation.
pub fn enumerate_compatible_preorders(m: &FiniteMonoid) -> Result<Vec<Preorder>> {
    let n = m.size();
    guard(format!("preorder enumeration on {n} elements"), n, PREORDER_SIZE_GUARD)?;
    let mut out = Vec::new();
    for r in enumerate_preorders(n)? {
        if is_compatible(m, &r)? {
            out.push(r);
        }
    }
    Ok(out)
}

/// All preorders on `n` points, lexicographic on their 0/1 matrices.
pub fn enumerate_preorders(n: usize) -> Result<Vec<Preorder>> {
    guard(format!("preorder enumeration on {n} elements"), n, PREORDER_SIZE_GUARD)?;
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b)
        .collect();
    let k = pairs.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << k) {
        let mut rows: Vec<u64> = (0..n).map(|a| 1u64 << a).collect();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> (k - 1 - i) & 1 == 1 {
                rows[a] |= 1 << b;
            }
        }
        let transitive = (0..n).all(|a| {
            let mut reach = rows[a];
            let mut row = reach;
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                row &= row - 1;
                reach |= rows[b];
            }
            reach == rows[a]
        });
        if transitive {
            out.push(Preorder::from_rows(n, rows)?);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SubmonoidFilter {
    #[default]
    None,
    RightNormal,
    LeftNormal,
    Normal,
}

impl std::str::FromStr for SubmonoidFilter {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "none" => Ok(SubmonoidFilter::None),
            "right_normal" => Ok(SubmonoidFilter::RightNormal),
            "left_normal" => Ok(SubmonoidFilter::LeftNormal),
            "normal" => Ok(SubmonoidFilter::Normal),
            _ => Err(format!("unknown filter `{s}`")),
        }
    }
}

/// Submonoids ordered by their membership mask read as a binary number,
/// element 0 least significant.
pub fn enumerate_submonoids(m: &FiniteMonoid, filter: SubmonoidFilter) -> Result<Vec<Submonoid>> {
    let n = m.size();
    guard(format!("submonoid enumeration on {n} elements"), n, SUBMONOID_SIZE_GUARD)?;
    let e = m.identity();
    let mut out = Vec::new();
    for bits in 0u32..(1 << n) {
        if bits >> e & 1 == 0 {
            continue;
        }
        let mask: Vec<bool> = (0..n).map(|i| bits >> i & 1 == 1).collect();
        let Ok(s) = Submonoid::from_mask(m, mask) else { continue };
        let keep = match filter {
            SubmonoidFilter::None => true,
            SubmonoidFilter::RightNormal => is_right_normal(m, &s),
            SubmonoidFilter::LeftNormal => is_left_normal(m, &s),
            SubmonoidFilter::Normal => is_normal(m, &s),
        };
        if keep {
            out.push(s);
        }
    }
    Ok(out)
}

/// Every hom `x → y` as a plain map, in lexicographic order.
pub fn hom_maps(x: &FiniteMonoid, y: &FiniteMonoid) -> Vec<Vec<usize>> {
    let n = x.size();
    let mut map = vec![usize::MAX; n];
    map[x.identity()] = y.identity();
    let mut out = Vec::new();
    fill_hom(x, y, &mut map, 0, &mut out);
    out
}

fn fill_hom(x: &FiniteMonoid, y: &FiniteMonoid, map: &mut [usize], a: usize, out: &mut Vec<Vec<usize>>) {
    if a == x.size() {
        out.push(map.to_vec());
        return;
    }
    if a == x.identity() {
        if consistent_so_far(x, y, map, a) {
            fill_hom(x, y, map, a + 1, out);
        }
        return;
    }
    for v in y.elements() {
        map[a] = v;
        if consistent_so_far(x, y, map, a) {
            fill_hom(x, y, map, a + 1, out);
        }
    }
    map[a] = usize::MAX;
}

fn consistent_so_far(x: &FiniteMonoid, y: &FiniteMonoid, map: &[usize], a: usize) -> bool {
    let known = |i: usize| map[i] != usize::MAX;
    for i in x.elements() {
        for j in x.elements() {
            let ij = x.op(i, j);
            if !(i == a || j == a || ij == a) || !known(i) || !known(j) {
                continue;
            }
            if known(ij) && map[ij] != y.op(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

pub fn enumerate_homs(m: &FiniteMonoid, n: &FiniteMonoid) -> Result<Vec<MonoidHom>> {
    let space = (n.size() as f64).powi(m.size() as i32);
    if space > HOM_SEARCH_GUARD as f64 {
        return Err(Error::SizeGuardExceeded {
            what: format!("hom search space {}^{}", n.size(), m.size()),
            bound: HOM_SEARCH_GUARD,
        });
    }
    hom_maps(m, n)
        .into_iter()
        .map(|map| MonoidHom::new(m, n, map))
        .collect()
}

/// All preordered actions of `b` on `x` with the given cones.
///
/// Ordered by `φ` (as homs `b → End(x)`, lexicographic), then by fixed-point
/// set. `ξ` is canonical: `u` on fixed points, `e` elsewhere.
pub fn enumerate_actions(x: &FiniteMonoid, b: &FiniteMonoid, px: &Submonoid, pb: &Submonoid) -> Result<Vec<PreorderedAction>> {
    let size = x.size().max(b.size());
    guard(format!("action enumeration with carriers of size {size}"), size, ACTION_SIZE_GUARD)?;
    if !is_right_normal(x, px) || !is_right_normal(b, pb) {
        return Ok(Vec::new());
    }
    let (end, maps) = endomorphism_monoid(x)?;
    let e = x.identity();
    let optional: Vec<(usize, usize)> = x
        .elements()
        .filter(|&u| u != e)
        .flat_map(|u| pb.members().iter().map(move |&v| (u, v)))
        .collect();
    let forced: Vec<(usize, usize)> = pb.members().iter().map(|&v| (e, v)).collect();
    let mut out = Vec::new();
    for h in hom_maps(b, &end) {
        let rows: Vec<Vec<usize>> = h.iter().map(|&f| maps[f].clone()).collect();
        let phi = ActionTable::new(x, b, rows)?;
        for bits in 0u32..(1 << optional.len()) {
            let mut fixed = forced.clone();
            fixed.extend(
                optional
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &p)| p),
            );
            let act = PreorderedAction::from_fixed_points(phi.clone(), px.clone(), pb.clone(), &fixed)?;
            if validate_action(&act).holds() {
                out.push(act);
            }
        }
    }
    Ok(out)
}
