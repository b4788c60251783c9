//! Preorders on `{0, .., n-1}` stored as one `u64` bit-row per element.

use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidHom};

/// Largest carrier a [`Preorder`] can live on.
pub const MAX_PREORDER_SIZE: usize = 64;

/// A reflexive, transitive relation; `le(a, b)` means `a ≤ b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Preorder {
    size: usize,
    rows: Vec<u64>,
}

impl fmt::Debug for Preorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Preorder({}; {:?})", self.size, self.strict_pairs())
    }
}

fn check_size(n: usize) -> Result<()> {
    if n > MAX_PREORDER_SIZE {
        return Err(Error::SizeGuardExceeded {
            what: format!("preorder on {n} elements"),
            bound: MAX_PREORDER_SIZE,
        });
    }
    Ok(())
}

/// Warshall on bit rows.
fn close_rows(rows: &mut [u64]) {
    let n = rows.len();
    for k in 0..n {
        let bit = 1u64 << k;
        let row_k = rows[k];
        for row in rows.iter_mut() {
            if *row & bit != 0 {
                *row |= row_k;
            }
        }
    }
}

impl Preorder {
    /// Reflexive-transitive closure of `edges`.
    pub fn closure_from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        check_size(n)?;
        let mut rows: Vec<u64> = (0..n).map(|a| 1u64 << a).collect();
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, size: n });
                }
            }
            rows[a] |= 1u64 << b;
        }
        close_rows(&mut rows);
        Ok(Preorder { size: n, rows })
    }

    /// Accepts a boolean matrix only if it is already reflexive and
    /// transitive.
    pub fn from_matrix(matrix: &[Vec<bool>]) -> Result<Self> {
        let n = matrix.len();
        check_size(n)?;
        let mut rows = vec![0u64; n];
        for (a, row) in matrix.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch(row.len(), n));
            }
            for (b, &v) in row.iter().enumerate() {
                if v {
                    rows[a] |= 1u64 << b;
                }
            }
        }
        Self::from_rows(n, rows)
    }

    /// Validates bit rows (bit `b` of row `a` set means `a ≤ b`).
    pub fn from_rows(n: usize, rows: Vec<u64>) -> Result<Self> {
        check_size(n)?;
        if rows.len() != n {
            return Err(Error::SizeMismatch(rows.len(), n));
        }
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (a, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                return Err(Error::ElementOutOfRange { element: 63 - row.leading_zeros() as usize, size: n });
            }
            if row & (1u64 << a) == 0 {
                return Err(Error::NotReflexive(a));
            }
        }
        let p = Preorder { size: n, rows };
        for a in 0..n {
            for b in p.successors(a) {
                for c in p.successors(b) {
                    if !p.le(a, c) {
                        return Err(Error::NotTransitive(a, b, c));
                    }
                }
            }
        }
        Ok(p)
    }

    pub fn discrete(n: usize) -> Result<Self> {
        Self::closure_from_edges(n, &[])
    }

    pub fn total(n: usize) -> Result<Self> {
        check_size(n)?;
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        Ok(Preorder { size: n, rows: vec![full; n] })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.rows[a] >> b & 1 == 1
    }

    pub fn row(&self, a: usize) -> u64 {
        self.rows[a]
    }

    pub fn successors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.size).filter(move |&b| self.le(a, b))
    }

    /// All related pairs `(a, b)` with `a != b`, lexicographic.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.size)
            .flat_map(|a| (0..self.size).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.le(a, b))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    pub fn matrix(&self) -> Vec<Vec<bool>> {
        (0..self.size)
            .map(|a| (0..self.size).map(|b| self.le(a, b)).collect())
            .collect()
    }

    pub fn opposite(&self) -> Preorder {
        let mut rows = vec![0u64; self.size];
        for a in 0..self.size {
            for b in self.successors(a) {
                rows[b] |= 1u64 << a;
            }
        }
        Preorder { size: self.size, rows }
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.strict_pairs().iter().all(|&(a, b)| !self.le(b, a))
    }

    /// `None` if `self ⊆ other`, else the least pair in `self` missing from
    /// `other`.
    pub fn containment_witness(&self, other: &Preorder) -> Result<Option<(usize, usize)>> {
        if self.size != other.size {
            return Err(Error::SizeMismatch(self.size, other.size));
        }
        for a in 0..self.size {
            let extra = self.rows[a] & !other.rows[a];
            if extra != 0 {
                return Ok(Some((a, extra.trailing_zeros() as usize)));
            }
        }
        Ok(None)
    }

    pub fn is_contained_in(&self, other: &Preorder) -> Result<bool> {
        Ok(self.containment_witness(other)?.is_none())
    }
}

/// Least `(a, b, c, d)` with `a ≤ b`, `c ≤ d` and `a+c ≰ b+d`.
pub fn compatibility_witness(m: &FiniteMonoid, r: &Preorder) -> Result<Option<(usize, usize, usize, usize)>> {
    if m.size() != r.size() {
        return Err(Error::SizeMismatch(m.size(), r.size()));
    }
    for a in m.elements() {
        for b in r.successors(a) {
            for c in m.elements() {
                for d in r.successors(c) {
                    if !r.le(m.op(a, c), m.op(b, d)) {
                        return Ok(Some((a, b, c, d)));
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn is_compatible(m: &FiniteMonoid, r: &Preorder) -> Result<bool> {
    Ok(compatibility_witness(m, r)?.is_none())
}

/// The translation form of compatibility: `a ≤ b` implies `c+a ≤ c+b` and
/// `a+c ≤ b+c` for every `c`.
pub fn is_translation_invariant(m: &FiniteMonoid, r: &Preorder) -> Result<bool> {
    if m.size() != r.size() {
        return Err(Error::SizeMismatch(m.size(), r.size()));
    }
    Ok(m.elements().all(|a| {
        r.successors(a).all(|b| {
            m.elements()
                .all(|c| r.le(m.op(c, a), m.op(c, b)) && r.le(m.op(a, c), m.op(b, c)))
        })
    }))
}

/// Initial lift of a family of homs out of `x`: `a ≤ a'` iff
/// `f(a) ≤ f(a')` for every `(f, ≤)` in the family.
///
/// Each codomain preorder must be compatible with its monoid; the lift is
/// then compatible with `x`.
pub fn initial_lift(x: &FiniteMonoid, family: &[(MonoidHom, Preorder)]) -> Result<Preorder> {
    let n = x.size();
    check_size(n)?;
    for (f, r) in family {
        if f.dom() != x {
            return Err(Error::TypeMismatch("family member does not start at the lifted monoid".into()));
        }
        if let Some((a, b, c, d)) = compatibility_witness(f.cod(), r)? {
            return Err(Error::Incompatible { a, b, c, d });
        }
    }
    let rows: Vec<u64> = (0..n)
        .map(|a| {
            (0..n)
                .filter(|&b| family.iter().all(|(f, r)| r.le(f.apply(a), f.apply(b))))
                .fold(0u64, |row, b| row | 1u64 << b)
        })
        .collect();
    let lifted = Preorder::from_rows(n, rows).expect("initial lift is a preorder");
    assert!(is_compatible(x, &lifted)?, "initial lift must be compatible");
    Ok(lifted)
}

/// Reflexive-transitive closure of the image of `r` along a surjection
/// `q: B → C` with `|C| = target_size`.
pub fn image_preorder_closure(r: &Preorder, q: &[usize], target_size: usize) -> Result<Preorder> {
    if q.len() != r.size() {
        return Err(Error::SizeMismatch(q.len(), r.size()));
    }
    let mut hit = vec![false; target_size];
    for &c in q {
        if c >= target_size {
            return Err(Error::ElementOutOfRange { element: c, size: target_size });
        }
        hit[c] = true;
    }
    if let Some(c) = hit.iter().position(|h| !h) {
        return Err(Error::NotSurjective(c));
    }
    let edges: Vec<_> = r
        .strict_pairs()
        .into_iter()
        .map(|(a, b)| (q[a], q[b]))
        .collect();
    Preorder::closure_from_edges(target_size, &edges)
}
