//! Schreier split epimorphisms of monoids and the actions they induce.
//!
//! ```text
//!        k        p
//!   X ──────▶ A ──────▶ B
//!     ◀ - - -   ◀──────
//!        q        s
//! ```
//!
//! Actions compose as `act(b + b', x) = act(b, act(b', x))`, the only
//! convention under which `(x,b)+(x',b') = (x + b·x', b+b')` is associative.
//! Pairs `(x, b)` of a semidirect carrier are encoded as `x * |B| + b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::{coequalizer_mon, FiniteMonoid, MonoidHom};

/// A split epimorphism `p` with section `s` and kernel `k`, optionally
/// carrying a set-map retraction `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitExtension {
    k: MonoidHom,
    p: MonoidHom,
    s: MonoidHom,
    q: Option<Vec<usize>>,
}

impl SplitExtension {
    /// Checks `p ∘ s = 1`, `k` injective and `image(k) = kernel(p)`.
    pub fn new(k: MonoidHom, p: MonoidHom, s: MonoidHom) -> Result<Self> {
        if k.cod() != p.dom() || s.cod() != p.dom() || s.dom() != p.cod() {
            return Err(Error::TypeMismatch("expected k: X → A, p: A → B, s: B → A".into()));
        }
        if let Some(b) = p.cod().elements().find(|&b| p.apply(s.apply(b)) != b) {
            return Err(Error::NotSplit(b));
        }
        let x = k.dom();
        for i in x.elements() {
            for j in i + 1..x.size() {
                if k.apply(i) == k.apply(j) {
                    return Err(Error::KernelNotInjective(i, j));
                }
            }
        }
        let a = p.dom();
        let mut in_image = vec![false; a.size()];
        for i in x.elements() {
            in_image[k.apply(i)] = true;
        }
        if let Some(w) = a.elements().find(|&w| in_image[w] != (p.apply(w) == p.cod().identity())) {
            return Err(Error::KernelMismatch(w));
        }
        Ok(SplitExtension { k, p, s, q: None })
    }

    /// Attaches a retraction without checking it; see [`check_s1_s2`].
    pub fn with_retraction(mut self, q: Vec<usize>) -> Result<Self> {
        if q.len() != self.a().size() {
            return Err(Error::MapLength { expected: self.a().size(), got: q.len() });
        }
        for &x in &q {
            self.x().check_element(x)?;
        }
        self.q = Some(q);
        Ok(self)
    }

    /// Finds the retraction and attaches it.
    pub fn into_schreier(self) -> Result<Self> {
        let q = find_retraction(&self)?;
        Ok(SplitExtension { q: Some(q), ..self })
    }

    pub fn x(&self) -> &FiniteMonoid {
        self.k.dom()
    }

    pub fn a(&self) -> &FiniteMonoid {
        self.p.dom()
    }

    pub fn b(&self) -> &FiniteMonoid {
        self.p.cod()
    }

    pub fn k(&self) -> &MonoidHom {
        &self.k
    }

    pub fn p(&self) -> &MonoidHom {
        &self.p
    }

    pub fn s(&self) -> &MonoidHom {
        &self.s
    }

    pub fn q(&self) -> Option<&[usize]> {
        self.q.as_deref()
    }

    fn q_or_err(&self) -> Result<&[usize]> {
        self.q().ok_or_else(|| Error::InvalidExtension("no retraction attached".into()))
    }
}

/// For each `a`, the unique `x` with `a = k(x) + s(p(a))`.
///
/// Fails on the least `a` with zero or several decompositions.
pub fn find_retraction(ext: &SplitExtension) -> Result<Vec<usize>> {
    let (a_m, x_m) = (ext.a(), ext.x());
    let mut q = Vec::with_capacity(a_m.size());
    for a in a_m.elements() {
        let tail = ext.s.apply(ext.p.apply(a));
        let mut found = x_m.elements().filter(|&x| a_m.op(ext.k.apply(x), tail) == a);
        match (found.next(), found.next()) {
            (Some(x), None) => q.push(x),
            (None, _) => return Err(Error::NotSchreier { witness: a, count: 0 }),
            (Some(_), Some(_)) => {
                let count = 2 + found.count();
                return Err(Error::NotSchreier { witness: a, count });
            }
        }
    }
    Ok(q)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchreierReport {
    /// Least `a` with `k(q(a)) + s(p(a)) != a`.
    pub s1: Option<usize>,
    /// Least `(x, b)` with `q(k(x) + s(b)) != x`.
    pub s2: Option<(usize, usize)>,
}

impl SchreierReport {
    pub fn holds(&self) -> bool {
        self.s1.is_none() && self.s2.is_none()
    }
}

pub fn check_s1_s2(ext: &SplitExtension) -> Result<SchreierReport> {
    let q = ext.q_or_err()?;
    let a_m = ext.a();
    let s1 = a_m
        .elements()
        .find(|&a| a_m.op(ext.k.apply(q[a]), ext.s.apply(ext.p.apply(a))) != a);
    let s2 = ext
        .x()
        .elements()
        .flat_map(|x| ext.b().elements().map(move |b| (x, b)))
        .find(|&(x, b)| q[a_m.op(ext.k.apply(x), ext.s.apply(b))] != x);
    Ok(SchreierReport { s1, s2 })
}

/// Ways a `|B| × |X|` table can fail to be a left action by endomorphisms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionViolation {
    Shape { rows: usize, cols: usize },
    OutOfRange { b: usize, x: usize },
    /// `act(e_B, x) != x`
    IdentityRow { x: usize },
    /// `act(b, e_X) != e_X`
    IdentityNotFixed { b: usize },
    /// `act(b, x + y) != act(b, x) + act(b, y)`
    NotEndomorphism { b: usize, x: usize, y: usize },
    /// `act(b + b', x) != act(b, act(b', x))`
    NotComposition { b: usize, b2: usize, x: usize },
}

impl fmt::Display for ActionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ActionViolation::Shape { rows, cols } => write!(f, "table shape {rows}x{cols} does not match |B|x|X|"),
            ActionViolation::OutOfRange { b, x } => write!(f, "entry ({b}, {x}) is out of range"),
            ActionViolation::IdentityRow { x } => write!(f, "e·{x} != {x}"),
            ActionViolation::IdentityNotFixed { b } => write!(f, "{b}·e != e"),
            ActionViolation::NotEndomorphism { b, x, y } => write!(f, "{b}·({x}+{y}) != {b}·{x} + {b}·{y}"),
            ActionViolation::NotComposition { b, b2, x } => write!(f, "({b}+{b2})·{x} != {b}·({b2}·{x})"),
        }
    }
}

/// First violated action axiom, if any. `rows[b][x]` is `b·x`.
pub fn validate_action_map(x: &FiniteMonoid, b: &FiniteMonoid, rows: &[Vec<usize>]) -> Option<ActionViolation> {
    if rows.len() != b.size() || rows.iter().any(|r| r.len() != x.size()) {
        let cols = rows.iter().map(Vec::len).find(|&l| l != x.size()).unwrap_or(x.size());
        return Some(ActionViolation::Shape { rows: rows.len(), cols });
    }
    for (bi, row) in rows.iter().enumerate() {
        if let Some(xi) = row.iter().position(|&y| y >= x.size()) {
            return Some(ActionViolation::OutOfRange { b: bi, x: xi });
        }
    }
    let act = |bi: usize, xi: usize| rows[bi][xi];
    if let Some(xi) = x.elements().find(|&xi| act(b.identity(), xi) != xi) {
        return Some(ActionViolation::IdentityRow { x: xi });
    }
    if let Some(bi) = b.elements().find(|&bi| act(bi, x.identity()) != x.identity()) {
        return Some(ActionViolation::IdentityNotFixed { b: bi });
    }
    for bi in b.elements() {
        for xi in x.elements() {
            for yi in x.elements() {
                if act(bi, x.op(xi, yi)) != x.op(act(bi, xi), act(bi, yi)) {
                    return Some(ActionViolation::NotEndomorphism { b: bi, x: xi, y: yi });
                }
            }
        }
    }
    for bi in b.elements() {
        for b2 in b.elements() {
            for xi in x.elements() {
                if act(b.op(bi, b2), xi) != act(bi, act(b2, xi)) {
                    return Some(ActionViolation::NotComposition { b: bi, b2, x: xi });
                }
            }
        }
    }
    None
}

/// A validated left action of `B` on `X` by monoid endomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ActionTable {
    x: FiniteMonoid,
    b: FiniteMonoid,
    table: Vec<usize>,
}

impl ActionTable {
    pub fn new(x: &FiniteMonoid, b: &FiniteMonoid, rows: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(v) = validate_action_map(x, b, &rows) {
            return Err(Error::InvalidAction(v.to_string()));
        }
        Ok(ActionTable { x: x.clone(), b: b.clone(), table: rows.concat() })
    }

    /// `b·x = x` for all `b`.
    pub fn trivial(x: &FiniteMonoid, b: &FiniteMonoid) -> Self {
        let table = b.elements().flat_map(|_| x.elements()).collect();
        ActionTable { x: x.clone(), b: b.clone(), table }
    }

    pub fn x(&self) -> &FiniteMonoid {
        &self.x
    }

    pub fn b(&self) -> &FiniteMonoid {
        &self.b
    }

    /// `b·x`
    #[inline]
    pub fn act(&self, b: usize, x: usize) -> usize {
        self.table[b * self.x.size() + x]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.x.size()).map(|r| r.to_vec()).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.b.elements().all(|b| self.x.elements().all(|x| self.act(b, x) == x))
    }
}

/// `b·x = q(s(b) + k(x))`.
pub fn action_from_ext(ext: &SplitExtension) -> Result<ActionTable> {
    let q = ext.q_or_err()?;
    let a_m = ext.a();
    let rows: Vec<Vec<usize>> = ext
        .b()
        .elements()
        .map(|b| {
            ext.x()
                .elements()
                .map(|x| q[a_m.op(ext.s.apply(b), ext.k.apply(x))])
                .collect()
        })
        .collect();
    let table = ActionTable::new(ext.x(), ext.b(), rows)
        .expect("a Schreier split epimorphism induces an action");
    Ok(table)
}

/// Row-major semidirect table for an arbitrary `|B| × |X|` table, without
/// validating anything. Used to probe which tables give monoids.
pub fn semidirect_table(x: &FiniteMonoid, b: &FiniteMonoid, rows: &[Vec<usize>]) -> Vec<usize> {
    let (nx, nb) = (x.size(), b.size());
    let n = nx * nb;
    let mut table = Vec::with_capacity(n * n);
    for i in 0..n {
        let (x1, b1) = (i / nb, i % nb);
        for j in 0..n {
            let (x2, b2) = (j / nb, j % nb);
            table.push(x.op(x1, rows[b1][x2]) * nb + b.op(b1, b2));
        }
    }
    table
}

/// `X ⋊ B` with `(x,b)+(x',b') = (x + b·x', b+b')`, returned as a split
/// extension with `k = x ↦ (x,e)`, `p = (x,b) ↦ b`, `s = b ↦ (e,b)` and the
/// retraction `q = (x,b) ↦ x` attached.
pub fn semidirect(action: &ActionTable) -> SplitExtension {
    let (x, b) = (action.x(), action.b());
    let nb = b.size();
    let rows = action.rows();
    let n = x.size() * nb;
    let a = FiniteMonoid::from_flat(n, semidirect_table(x, b, &rows), x.identity() * nb + b.identity())
        .expect("semidirect product of a valid action is a monoid");
    let k = MonoidHom::new(x, &a, x.elements().map(|xi| xi * nb + b.identity()).collect()).unwrap();
    let p = MonoidHom::new(&a, b, (0..n).map(|i| i % nb).collect()).unwrap();
    let s = MonoidHom::new(b, &a, b.elements().map(|bi| x.identity() * nb + bi).collect()).unwrap();
    let q = (0..n).map(|i| i / nb).collect();
    SplitExtension::new(k, p, s)
        .and_then(|e| e.with_retraction(q))
        .expect("semidirect product is a split extension")
}

/// Pair index in a semidirect carrier.
pub fn pair_index(x: usize, b: usize, b_size: usize) -> usize {
    x * b_size + b
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsequencesReport {
    /// Least `(b, x)` with `k(b·x) + s(b) != s(b) + k(x)`.
    pub c1: Option<(usize, usize)>,
    /// Least `(a1, a2)` with `q(a1+a2) != q(a1) + p(a1)·q(a2)`.
    pub c2: Option<(usize, usize)>,
    /// `α(a) = (q(a), p(a))` into the semidirect product.
    pub alpha: Vec<usize>,
    /// `β(x, b) = k(x) + s(b)`, indexed by pair index.
    pub beta: Vec<usize>,
    pub c3_alpha_hom: bool,
    pub c3_beta_hom: bool,
    pub c3_inverse: bool,
    /// `p` agrees with the coequalizer of `k` and the zero map.
    pub c4: bool,
}

impl ConsequencesReport {
    pub fn holds(&self) -> bool {
        self.c1.is_none()
            && self.c2.is_none()
            && self.c3_alpha_hom
            && self.c3_beta_hom
            && self.c3_inverse
            && self.c4
    }
}

pub fn check_consequences(ext: &SplitExtension) -> Result<ConsequencesReport> {
    let q = ext.q_or_err()?.to_vec();
    let action = action_from_ext(ext)?;
    let (x_m, a_m, b_m) = (ext.x(), ext.a(), ext.b());
    let (k, p, s) = (&ext.k, &ext.p, &ext.s);

    let c1 = b_m
        .elements()
        .flat_map(|b| x_m.elements().map(move |x| (b, x)))
        .find(|&(b, x)| a_m.op(k.apply(action.act(b, x)), s.apply(b)) != a_m.op(s.apply(b), k.apply(x)));
    let c2 = a_m
        .elements()
        .flat_map(|a1| a_m.elements().map(move |a2| (a1, a2)))
        .find(|&(a1, a2)| q[a_m.op(a1, a2)] != x_m.op(q[a1], action.act(p.apply(a1), q[a2])));

    let sd = semidirect(&action);
    let nb = b_m.size();
    let alpha: Vec<usize> = a_m.elements().map(|a| pair_index(q[a], p.apply(a), nb)).collect();
    let beta: Vec<usize> = (0..sd.a().size())
        .map(|i| a_m.op(k.apply(i / nb), s.apply(i % nb)))
        .collect();
    let c3_alpha_hom = MonoidHom::new(a_m, sd.a(), alpha.clone()).is_ok();
    let c3_beta_hom = MonoidHom::new(sd.a(), a_m, beta.clone()).is_ok();
    let c3_inverse = a_m.elements().all(|a| beta[alpha[a]] == a)
        && (0..sd.a().size()).all(|i| alpha[beta[i]] == i);

    let zero = MonoidHom::constant(x_m, a_m);
    let (coker, proj) = coequalizer_mon(k, &zero)?;
    let c4 = cokernel_matches(&coker, &proj, p);

    Ok(ConsequencesReport { c1, c2, alpha, beta, c3_alpha_hom, c3_beta_hom, c3_inverse, c4 })
}

/// Whether `t(proj(a)) = p(a)` defines an isomorphism `coker → B`.
fn cokernel_matches(coker: &FiniteMonoid, proj: &MonoidHom, p: &MonoidHom) -> bool {
    let mut t = vec![usize::MAX; coker.size()];
    for a in p.dom().elements() {
        let c = proj.apply(a);
        if t[c] == usize::MAX {
            t[c] = p.apply(a);
        } else if t[c] != p.apply(a) {
            return false;
        }
    }
    match MonoidHom::new(coker, p.cod(), t) {
        Ok(t) => t.is_injective() && t.is_surjective(),
        Err(_) => false,
    }
}
