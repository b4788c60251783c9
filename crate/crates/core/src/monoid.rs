//! Finite monoids given by Cayley tables, together with submonoids,
//! homomorphisms, congruences and quotients.
//!
//! Elements are dense indices `0..n`. The operation is written additively:
//! `m.op(a, b)` is `a + b`. The identity is an arbitrary index, although
//! every bundled example uses 0.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest carrier accepted by [`endomorphism_monoid`].
pub const END_SIZE_GUARD: usize = 6;

/// A monoid on `{0, .., size-1}` with a distinguished identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteMonoid {
    size: usize,
    identity: usize,
    table: Arc<[usize]>,
}

impl fmt::Debug for FiniteMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteMonoid")
            .field("size", &self.size)
            .field("identity", &self.identity)
            .field("rows", &self.rows())
            .finish()
    }
}

impl FiniteMonoid {
    /// Validates a Cayley table. Checks run in order: shape, range,
    /// identity laws, associativity; the first violation is returned.
    pub fn new(rows: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyCarrier);
        }
        let mut table = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::TableShape { size: n, rows: row.len() });
            }
            table.extend_from_slice(row);
        }
        Self::from_flat(n, table, identity)
    }

    /// Same as [`FiniteMonoid::new`] with a row-major flat table.
    pub fn from_flat(size: usize, table: Vec<usize>, identity: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyCarrier);
        }
        if table.len() != size * size {
            return Err(Error::TableShape { size, rows: table.len() / size.max(1) });
        }
        for i in 0..size {
            for j in 0..size {
                if table[i * size + j] >= size {
                    return Err(Error::OutOfRangeEntry(i, j));
                }
            }
        }
        if identity >= size {
            return Err(Error::IdentityOutOfRange(identity));
        }
        let m = FiniteMonoid { size, identity, table: table.into() };
        for a in 0..size {
            if m.op(identity, a) != a || m.op(a, identity) != a {
                return Err(Error::IdentityLawViolation(a));
            }
        }
        if let Some((a, b, c)) = m.first_associativity_failure() {
            return Err(Error::AssociativityViolation(a, b, c));
        }
        Ok(m)
    }

    fn first_associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.size;
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(a, self.op(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    /// The one-element monoid.
    pub fn trivial() -> Self {
        FiniteMonoid { size: 1, identity: 0, table: vec![0].into() }
    }

    /// Integers mod `n` under addition.
    pub fn cyclic_group(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n * n).map(|k| (k / n + k % n) % n).collect::<Vec<_>>();
        FiniteMonoid { size: n, identity: 0, table: table.into() }
    }

    /// `{0, .., n-1}` under `max`.
    pub fn max_semilattice(n: usize) -> Self {
        assert!(n > 0);
        let table = (0..n * n).map(|k| (k / n).max(k % n)).collect::<Vec<_>>();
        FiniteMonoid { size: n, identity: 0, table: table.into() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    pub fn is_commutative(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// `a + S` as a membership mask.
    pub fn left_coset(&self, a: usize, s: &Submonoid) -> Vec<bool> {
        let mut out = vec![false; self.size];
        for &x in s.members() {
            out[self.op(a, x)] = true;
        }
        out
    }

    /// `S + a` as a membership mask.
    pub fn right_coset(&self, s: &Submonoid, a: usize) -> Vec<bool> {
        let mut out = vec![false; self.size];
        for &x in s.members() {
            out[self.op(x, a)] = true;
        }
        out
    }

    /// Direct product with pair index `x * |other| + b`.
    pub fn product(&self, other: &FiniteMonoid) -> FiniteMonoid {
        let (n, m) = (self.size, other.size);
        let mut table = Vec::with_capacity(n * m * n * m);
        for i in 0..n * m {
            for j in 0..n * m {
                let x = self.op(i / m, j / m);
                let b = other.op(i % m, j % m);
                table.push(x * m + b);
            }
        }
        FiniteMonoid {
            size: n * m,
            identity: self.identity * m + other.identity,
            table: table.into(),
        }
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.size {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { element: a, size: self.size })
        }
    }
}

/// A subset of a monoid containing the identity and closed under the
/// operation. Members are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Submonoid {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl Submonoid {
    /// Checks that `members` contains the identity and is closed.
    pub fn new(m: &FiniteMonoid, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut mask = vec![false; m.size()];
        for a in members {
            m.check_element(a)?;
            mask[a] = true;
        }
        Self::from_mask(m, mask)
    }

    pub fn from_mask(m: &FiniteMonoid, mask: Vec<bool>) -> Result<Self> {
        if mask.len() != m.size() {
            return Err(Error::SizeMismatch(mask.len(), m.size()));
        }
        if !mask[m.identity()] {
            return Err(Error::MissingIdentity);
        }
        let members: Vec<usize> = (0..mask.len()).filter(|&a| mask[a]).collect();
        for &a in &members {
            for &b in &members {
                let c = m.op(a, b);
                if !mask[c] {
                    return Err(Error::NotClosed(a, b, c));
                }
            }
        }
        Ok(Submonoid { members, mask })
    }

    /// The whole carrier.
    pub fn full(m: &FiniteMonoid) -> Self {
        Submonoid { members: m.elements().collect(), mask: vec![true; m.size()] }
    }

    /// `{e}`.
    pub fn trivial(m: &FiniteMonoid) -> Self {
        let mut mask = vec![false; m.size()];
        mask[m.identity()] = true;
        Submonoid { members: vec![m.identity()], mask }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn mask(&self) -> &[bool] {
        &self.mask
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask.get(a).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    /// Position of `a` in the sorted member list.
    pub fn position(&self, a: usize) -> Option<usize> {
        self.members.binary_search(&a).ok()
    }
}

/// Smallest submonoid containing `seed`, computed as a fixpoint of
/// pairwise sums.
pub fn submonoid_closure(m: &FiniteMonoid, seed: &[usize]) -> Result<Submonoid> {
    let mut mask = vec![false; m.size()];
    let mut members = vec![m.identity()];
    mask[m.identity()] = true;
    for &a in seed {
        m.check_element(a)?;
        if !mask[a] {
            mask[a] = true;
            members.push(a);
        }
    }
    let mut changed = true;
    while changed {
        changed = false;
        let snapshot = members.clone();
        for &a in &snapshot {
            for &b in &snapshot {
                let c = m.op(a, b);
                if !mask[c] {
                    mask[c] = true;
                    members.push(c);
                    changed = true;
                }
            }
        }
    }
    Submonoid::from_mask(m, mask)
}

/// A monoid homomorphism, stored as the image of each domain element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidHom {
    dom: FiniteMonoid,
    cod: FiniteMonoid,
    map: Vec<usize>,
}

impl MonoidHom {
    pub fn new(dom: &FiniteMonoid, cod: &FiniteMonoid, map: Vec<usize>) -> Result<Self> {
        if map.len() != dom.size() {
            return Err(Error::MapLength { expected: dom.size(), got: map.len() });
        }
        for &y in &map {
            cod.check_element(y)?;
        }
        if map[dom.identity()] != cod.identity() {
            return Err(Error::IdentityNotPreserved);
        }
        if let Some((a, b)) = first_hom_failure(dom, cod, &map) {
            return Err(Error::NotAHom(a, b));
        }
        Ok(MonoidHom { dom: dom.clone(), cod: cod.clone(), map })
    }

    pub fn identity(m: &FiniteMonoid) -> Self {
        MonoidHom { dom: m.clone(), cod: m.clone(), map: m.elements().collect() }
    }

    /// The hom sending everything to the identity of `cod`.
    pub fn constant(dom: &FiniteMonoid, cod: &FiniteMonoid) -> Self {
        MonoidHom { dom: dom.clone(), cod: cod.clone(), map: vec![cod.identity(); dom.size()] }
    }

    /// `other ∘ self`: apply `self` first.
    pub fn then(&self, other: &MonoidHom) -> Result<MonoidHom> {
        if self.cod != other.dom {
            return Err(Error::TypeMismatch("codomain of the first map is not the domain of the second".into()));
        }
        Ok(MonoidHom {
            dom: self.dom.clone(),
            cod: other.cod.clone(),
            map: self.map.iter().map(|&a| other.map[a]).collect(),
        })
    }

    pub fn dom(&self) -> &FiniteMonoid {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteMonoid {
        &self.cod
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }
}

/// Least pair `(a, b)` with `f(a+b) != f(a)+f(b)`.
pub fn first_hom_failure(dom: &FiniteMonoid, cod: &FiniteMonoid, map: &[usize]) -> Option<(usize, usize)> {
    for a in dom.elements() {
        for b in dom.elements() {
            if map[dom.op(a, b)] != cod.op(map[a], map[b]) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `p⁻¹(e)` as a submonoid of the domain.
pub fn kernel(p: &MonoidHom) -> Submonoid {
    let mask = p.dom().elements().map(|a| p.apply(a) == p.cod().identity()).collect();
    Submonoid::from_mask(p.dom(), mask).expect("kernel of a hom is a submonoid")
}

/// A partition of a monoid's carrier compatible with the operation.
/// Classes are numbered in order of their least element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: usize,
}

impl Congruence {
    /// Validates an arbitrary labelling as a congruence on `m`.
    pub fn new(m: &FiniteMonoid, labels: &[usize]) -> Result<Self> {
        if labels.len() != m.size() {
            return Err(Error::SizeMismatch(labels.len(), m.size()));
        }
        let c = Self::normalize(labels);
        for a in m.elements() {
            for b in m.elements() {
                if a < b && c.class_of[a] == c.class_of[b] {
                    for t in m.elements() {
                        if c.class_of[m.op(t, a)] != c.class_of[m.op(t, b)]
                            || c.class_of[m.op(a, t)] != c.class_of[m.op(b, t)]
                        {
                            return Err(Error::IllFormedCongruence(a, b, t));
                        }
                    }
                }
            }
        }
        Ok(c)
    }

    fn normalize(labels: &[usize]) -> Self {
        let mut renumber = std::collections::HashMap::new();
        let class_of = labels
            .iter()
            .map(|l| {
                let next = renumber.len();
                *renumber.entry(*l).or_insert(next)
            })
            .collect();
        Congruence { class_of, classes: renumber.len() }
    }

    pub fn discrete(m: &FiniteMonoid) -> Self {
        Congruence { class_of: m.elements().collect(), classes: m.size() }
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn num_classes(&self) -> usize {
        self.classes
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// Members of each class, classes in index order.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.classes];
        for (a, &c) in self.class_of.iter().enumerate() {
            out[c].push(a);
        }
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }
}

/// Smallest congruence containing `pairs`.
///
/// Union-find over the carrier, repeatedly closing each generator
/// `a ~ root(a)` under left and right translation until nothing merges.
pub fn congruence_closure(m: &FiniteMonoid, pairs: &[(usize, usize)]) -> Result<Congruence> {
    let mut uf = UnionFind::new(m.size());
    for &(a, b) in pairs {
        m.check_element(a)?;
        m.check_element(b)?;
        uf.union(a, b);
    }
    loop {
        let mut changed = false;
        for a in m.elements() {
            let r = uf.find(a);
            if r == a {
                continue;
            }
            for c in m.elements() {
                changed |= uf.union(m.op(c, a), m.op(c, r));
                changed |= uf.union(m.op(a, c), m.op(r, c));
            }
        }
        if !changed {
            break;
        }
    }
    let roots: Vec<usize> = (0..m.size()).map(|a| uf.find(a)).collect();
    Ok(Congruence::normalize(&roots))
}

/// The quotient monoid on congruence classes and the projection onto it.
pub fn quotient(m: &FiniteMonoid, c: &Congruence) -> Result<(FiniteMonoid, MonoidHom)> {
    let checked = Congruence::new(m, c.labels())?;
    let k = checked.num_classes();
    let reps: Vec<usize> = checked.classes().iter().map(|cls| cls[0]).collect();
    let mut table = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            table.push(checked.class_of(m.op(reps[i], reps[j])));
        }
    }
    let q_monoid = FiniteMonoid::from_flat(k, table, checked.class_of(m.identity()))?;
    let proj = MonoidHom::new(m, &q_monoid, checked.labels().to_vec())?;
    Ok((q_monoid, proj))
}

/// Coequalizer in plain monoids: the quotient of the common codomain by
/// the congruence generated by `{(f(a), g(a))}`.
pub fn coequalizer_mon(f: &MonoidHom, g: &MonoidHom) -> Result<(FiniteMonoid, MonoidHom)> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::TypeMismatch("coequalizer needs a parallel pair".into()));
    }
    let pairs: Vec<_> = f.dom().elements().map(|a| (f.apply(a), g.apply(a))).collect();
    let c = congruence_closure(f.cod(), &pairs)?;
    quotient(f.cod(), &c)
}

/// All monoid endomorphisms of `x` under composition.
///
/// Maps are listed in lexicographic order and element `i` of the returned
/// monoid is `maps[i]`. The product `f + g` is `f ∘ g` (apply `g` first), so
/// that a hom `B → End(X)` is a left action.
pub fn endomorphism_monoid(x: &FiniteMonoid) -> Result<(FiniteMonoid, Vec<Vec<usize>>)> {
    if x.size() > END_SIZE_GUARD {
        return Err(Error::SizeGuardExceeded {
            what: format!("endomorphism monoid of a {}-element monoid", x.size()),
            bound: END_SIZE_GUARD,
        });
    }
    let maps: Vec<Vec<usize>> = crate::enumeration::hom_maps(x, x);
    let index: std::collections::HashMap<&[usize], usize> =
        maps.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let n = maps.len();
    let mut table = Vec::with_capacity(n * n);
    for f in &maps {
        for g in &maps {
            let fg: Vec<usize> = g.iter().map(|&y| f[y]).collect();
            table.push(index[fg.as_slice()]);
        }
    }
    let id: Vec<usize> = x.elements().collect();
    let identity = index[id.as_slice()];
    let end = FiniteMonoid::from_flat(n, table, identity)?;
    Ok((end, maps))
}
