//! Coned split extensions and preordered actions, and the two
//! constructions relating them.
//!
//! A preordered action is `(X, B, P_X, P_B, φ, ξ)` where `φ` is a left
//! action of `B` on `X` and `ξ: X × P_B → X`. What matters about `ξ` is its
//! fixed-point set `P_ξ = {(u, v) : ξ(u, v) = u}`, which becomes the positive
//! cone of `X ⋊ B`. Two actions with the same `φ` and `P_ξ` are treated as
//! the same; [`canonicalize_xi`] picks the representative with `ξ = e` off
//! `P_ξ`.

use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidHom, Submonoid};
use crate::pom::{right_normality_witness, NormalityWitness};
use crate::schreier::{action_from_ext, find_retraction, pair_index, semidirect, ActionTable, SplitExtension};

/// A Schreier split extension with right normal cones on all three
/// monoids, such that `k`, `p` and `s` restrict to the cones. The
/// retraction `q` is not required to be monotone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConedSplitExtension {
    ext: SplitExtension,
    px: Submonoid,
    pa: Submonoid,
    pb: Submonoid,
}

fn require_right_normal(which: &str, m: &FiniteMonoid, s: &Submonoid) -> Result<()> {
    match right_normality_witness(m, s) {
        None => Ok(()),
        Some(NormalityWitness { a, element }) => Err(Error::InvalidExtension(format!(
            "{which} is not right normal: {element} is in {a}+{which} but not in {which}+{a}"
        ))),
    }
}

fn require_restriction(name: &str, f: &MonoidHom, from: &Submonoid, into: &Submonoid) -> Result<()> {
    match from.members().iter().find(|&&a| !into.contains(f.apply(a))) {
        None => Ok(()),
        Some(a) => Err(Error::InvalidExtension(format!("{name}({a}) = {} leaves the target cone", f.apply(*a)))),
    }
}

impl ConedSplitExtension {
    /// Finds the retraction if none is attached and checks every invariant.
    pub fn new(ext: SplitExtension, px: Submonoid, pa: Submonoid, pb: Submonoid) -> Result<Self> {
        let ext = match ext.q() {
            Some(q) => {
                let found = find_retraction(&ext)?;
                if found != q {
                    return Err(Error::InvalidExtension("attached retraction is not the Schreier retraction".into()));
                }
                ext
            }
            None => ext.into_schreier()?,
        };
        for (cone, m) in [(&px, ext.x()), (&pa, ext.a()), (&pb, ext.b())] {
            if cone.mask().len() != m.size() {
                return Err(Error::SizeMismatch(cone.mask().len(), m.size()));
            }
            // re-validate against this particular monoid
            Submonoid::from_mask(m, cone.mask().to_vec())?;
        }
        require_right_normal("P_X", ext.x(), &px)?;
        require_right_normal("P_A", ext.a(), &pa)?;
        require_right_normal("P_B", ext.b(), &pb)?;
        require_restriction("k", ext.k(), &px, &pa)?;
        require_restriction("s", ext.s(), &pb, &pa)?;
        require_restriction("p", ext.p(), &pa, &pb)?;
        Ok(ConedSplitExtension { ext, px, pa, pb })
    }

    pub fn ext(&self) -> &SplitExtension {
        &self.ext
    }

    pub fn px(&self) -> &Submonoid {
        &self.px
    }

    pub fn pa(&self) -> &Submonoid {
        &self.pa
    }

    pub fn pb(&self) -> &Submonoid {
        &self.pb
    }

    pub fn q(&self) -> &[usize] {
        self.ext.q().expect("coned extensions carry their retraction")
    }
}

/// `(X, B, P_X, P_B, φ, ξ)`. Construction checks shapes and that both
/// cones are right normal submonoids; the axioms themselves are checked by
/// [`validate_action`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreorderedAction {
    phi: ActionTable,
    px: Submonoid,
    pb: Submonoid,
    /// row `u`, column = position of `v` in `pb.members()`
    xi: Vec<usize>,
}

impl PreorderedAction {
    /// `xi_rows[u][j]` is `ξ(u, v)` for the `j`-th element `v` of `P_B`.
    pub fn new(phi: ActionTable, px: Submonoid, pb: Submonoid, xi_rows: Vec<Vec<usize>>) -> Result<Self> {
        let (x, b) = (phi.x(), phi.b());
        Submonoid::from_mask(x, px.mask().to_vec())?;
        Submonoid::from_mask(b, pb.mask().to_vec())?;
        for (m, cone) in [(x, &px), (b, &pb)] {
            if let Some(NormalityWitness { a, element }) = right_normality_witness(m, cone) {
                return Err(Error::ConeNotRightNormal { a, element });
            }
        }
        if xi_rows.len() != x.size() {
            return Err(Error::SizeMismatch(xi_rows.len(), x.size()));
        }
        for row in &xi_rows {
            if row.len() != pb.len() {
                return Err(Error::SizeMismatch(row.len(), pb.len()));
            }
            for &u in row {
                x.check_element(u)?;
            }
        }
        Ok(PreorderedAction { phi, px, pb, xi: xi_rows.concat() })
    }

    /// The action whose fixed-point set is `fixed` (pairs `(u, v)` with
    /// `v ∈ P_B`), with `ξ = e` elsewhere.
    pub fn from_fixed_points(phi: ActionTable, px: Submonoid, pb: Submonoid, fixed: &[(usize, usize)]) -> Result<Self> {
        let e = phi.x().identity();
        let mut rows = vec![vec![e; pb.len()]; phi.x().size()];
        for &(u, v) in fixed {
            phi.x().check_element(u)?;
            let j = pb.position(v).ok_or_else(|| Error::InvalidAction(format!("{v} is not in P_B")))?;
            rows[u][j] = u;
        }
        Self::new(phi, px, pb, rows)
    }

    /// `ξ(x, b) = x` for `x ∈ P_X`, `b ∈ P_B`, and `e` otherwise.
    pub fn trivial_xi(phi: ActionTable, px: Submonoid, pb: Submonoid) -> Result<Self> {
        let fixed: Vec<_> = px
            .members()
            .iter()
            .flat_map(|&u| pb.members().iter().map(move |&v| (u, v)))
            .collect();
        Self::from_fixed_points(phi, px, pb, &fixed)
    }

    pub fn x(&self) -> &FiniteMonoid {
        self.phi.x()
    }

    pub fn b(&self) -> &FiniteMonoid {
        self.phi.b()
    }

    pub fn phi(&self) -> &ActionTable {
        &self.phi
    }

    pub fn px(&self) -> &Submonoid {
        &self.px
    }

    pub fn pb(&self) -> &Submonoid {
        &self.pb
    }

    /// `ξ(u, v)`; `v` must lie in `P_B`.
    pub fn xi(&self, u: usize, v: usize) -> usize {
        let j = self.pb.position(v).expect("ξ is only defined on X × P_B");
        self.xi[u * self.pb.len() + j]
    }

    pub fn xi_rows(&self) -> Vec<Vec<usize>> {
        self.xi.chunks(self.pb.len()).map(|r| r.to_vec()).collect()
    }

    pub fn is_fixed(&self, u: usize, v: usize) -> bool {
        self.pb.contains(v) && self.xi(u, v) == u
    }
}

/// `P_ξ` as sorted pairs `(u, v)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FixedPointSet {
    pub pairs: Vec<(usize, usize)>,
}

impl FixedPointSet {
    pub fn contains(&self, u: usize, v: usize) -> bool {
        self.pairs.binary_search(&(u, v)).is_ok()
    }

    /// Pair indices `u * |B| + v` in the semidirect carrier.
    pub fn indices(&self, b_size: usize) -> Vec<usize> {
        self.pairs.iter().map(|&(u, v)| pair_index(u, v, b_size)).collect()
    }
}

pub fn fixed_point_set(act: &PreorderedAction) -> FixedPointSet {
    let pairs = act
        .x()
        .elements()
        .flat_map(|u| act.pb.members().iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| act.xi(u, v) == u)
        .collect();
    FixedPointSet { pairs }
}

/// Least failing instance of each axiom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ActionReport {
    /// `v ∈ P_B` with `ξ(e, v) != e`
    pub a1: Option<usize>,
    /// `x ∈ P_X` with `ξ(x, e) != x`
    pub a2: Option<usize>,
    /// `(x, b, x', b')` with both pairs fixed but `(x + b·x', b + b')` not
    pub a3: Option<(usize, usize, usize, usize)>,
    /// `(u, v, x, b)` with `(u, v)` fixed and no `(u', v')` available
    pub a4: Option<(usize, usize, usize, usize)>,
}

impl ActionReport {
    pub fn holds(&self) -> bool {
        self.a1.is_none() && self.a2.is_none() && self.a3.is_none() && self.a4.is_none()
    }

    /// Name and description of the first failing axiom.
    pub fn first_failure(&self) -> Option<String> {
        if let Some(v) = self.a1 {
            return Some(format!("A1 fails at v = {v}"));
        }
        if let Some(x) = self.a2 {
            return Some(format!("A2 fails at x = {x}"));
        }
        if let Some((x, b, x2, b2)) = self.a3 {
            return Some(format!("A3 fails at (x, b) = ({x}, {b}), (x', b') = ({x2}, {b2})"));
        }
        if let Some((u, v, x, b)) = self.a4 {
            return Some(format!("A4 fails at (u, v) = ({u}, {v}), (x, b) = ({x}, {b})"));
        }
        None
    }
}

pub fn validate_action(act: &PreorderedAction) -> ActionReport {
    let (x, b) = (act.x(), act.b());
    let phi = act.phi();
    let pb = act.pb();
    let fixed = fixed_point_set(act).pairs;

    let a1 = pb.members().iter().copied().find(|&v| act.xi(x.identity(), v) != x.identity());
    let a2 = act.px().members().iter().copied().find(|&u| act.xi(u, b.identity()) != u);

    let mut a3 = None;
    'a3: for &(x1, b1) in &fixed {
        for &(x2, b2) in &fixed {
            let u = x.op(x1, phi.act(b1, x2));
            let v = b.op(b1, b2);
            if act.xi(u, v) != u {
                a3 = Some((x1, b1, x2, b2));
                break 'a3;
            }
        }
    }

    let mut a4 = None;
    'a4: for &(u, v) in &fixed {
        for xe in x.elements() {
            for be in b.elements() {
                let lhs = x.op(xe, phi.act(be, u));
                let bv = b.op(be, v);
                let ok = pb.members().iter().any(|&v2| {
                    b.op(v2, be) == bv
                        && x.elements().any(|u2| act.xi(u2, v2) == u2 && x.op(u2, phi.act(v2, xe)) == lhs)
                });
                if !ok {
                    a4 = Some((u, v, xe, be));
                    break 'a4;
                }
            }
        }
    }

    ActionReport { a1, a2, a3, a4 }
}

/// Same `φ` and `P_ξ`, with `ξ(u, v) = e` whenever `ξ(u, v) != u`.
pub fn canonicalize_xi(act: &PreorderedAction) -> PreorderedAction {
    let e = act.x().identity();
    let rows = act
        .x()
        .elements()
        .map(|u| {
            act.pb
                .members()
                .iter()
                .map(|&v| if act.xi(u, v) == u { u } else { e })
                .collect()
        })
        .collect();
    let out = PreorderedAction::new(act.phi.clone(), act.px.clone(), act.pb.clone(), rows)
        .expect("canonical form keeps the shape");
    debug_assert!(validate_action(act).a1.is_some() || fixed_point_set(&out) == fixed_point_set(act));
    out
}

/// The action of a coned extension: `b·x = q(s(b) + k(x))` and
/// `ξ(u, v) = u` iff `k(u) + s(v) ∈ P_A`.
pub fn g_extract(cext: &ConedSplitExtension) -> PreorderedAction {
    let ext = cext.ext();
    let phi = action_from_ext(ext).expect("coned extensions carry their retraction");
    let a = ext.a();
    let fixed: Vec<(usize, usize)> = ext
        .x()
        .elements()
        .flat_map(|u| cext.pb().members().iter().map(move |&v| (u, v)))
        .filter(|&(u, v)| cext.pa().contains(a.op(ext.k().apply(u), ext.s().apply(v))))
        .collect();
    let act = PreorderedAction::from_fixed_points(phi, cext.px().clone(), cext.pb().clone(), &fixed)
        .expect("extracted data has valid shapes");
    let report = validate_action(&act);
    assert!(report.holds(), "extracted action violates an axiom: {:?}", report.first_failure());
    act
}

/// The coned extension `X ⋊ B` with cone `{(x, b) : b ∈ P_B, ξ(x, b) = x}`.
pub fn h_build(act: &PreorderedAction) -> Result<ConedSplitExtension> {
    let report = validate_action(act);
    if let Some(msg) = report.first_failure() {
        return Err(Error::InvalidAction(msg));
    }
    let ext = semidirect(act.phi());
    let nb = act.b().size();
    let pa_members = fixed_point_set(act).indices(nb);
    let pa = Submonoid::new(ext.a(), pa_members).expect("fixed points form a submonoid");
    assert!(right_normality_witness(ext.a(), &pa).is_none(), "fixed points form a right normal submonoid");
    let cext = ConedSplitExtension::new(ext, act.px.clone(), pa, act.pb.clone())
        .expect("the semidirect product with fixed points is a coned extension");
    Ok(cext)
}

/// Outcome of comparing `cext` with `H(G(cext))` through
/// `β(x, b) = k(x) + s(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HgReport {
    /// indexed by pair index of `X ⋊ B`
    pub beta: Vec<usize>,
    pub beta_hom: bool,
    pub beta_bijective: bool,
    pub commutes_k: bool,
    pub commutes_p: bool,
    pub commutes_s: bool,
    /// `β` maps `P_ξ` onto `P_A` exactly
    pub cone_bijection: bool,
}

impl HgReport {
    pub fn holds(&self) -> bool {
        self.beta_hom && self.beta_bijective && self.commutes_k && self.commutes_p && self.commutes_s && self.cone_bijection
    }
}

pub fn roundtrip_hg(cext: &ConedSplitExtension) -> HgReport {
    let rebuilt = h_build(&g_extract(cext)).expect("extracted actions are valid");
    let (ext, sd) = (cext.ext(), rebuilt.ext());
    let nb = ext.b().size();
    let a = ext.a();
    let beta: Vec<usize> = (0..sd.a().size())
        .map(|i| a.op(ext.k().apply(i / nb), ext.s().apply(i % nb)))
        .collect();
    let beta_hom = MonoidHom::new(sd.a(), a, beta.clone()).is_ok();
    let mut hit = vec![false; a.size()];
    for &y in &beta {
        hit[y] = true;
    }
    let beta_bijective = beta.len() == a.size() && hit.iter().all(|&h| h);
    let commutes_k = ext.x().elements().all(|x| beta[sd.k().apply(x)] == ext.k().apply(x));
    let commutes_p = (0..sd.a().size()).all(|i| ext.p().apply(beta[i]) == sd.p().apply(i));
    let commutes_s = ext.b().elements().all(|b| beta[sd.s().apply(b)] == ext.s().apply(b));
    let mut image: Vec<usize> = rebuilt.pa().members().iter().map(|&i| beta[i]).collect();
    image.sort_unstable();
    image.dedup();
    let cone_bijection = image == cext.pa().members() && image.len() == rebuilt.pa().len();
    HgReport { beta, beta_hom, beta_bijective, commutes_k, commutes_p, commutes_s, cone_bijection }
}

/// Outcome of comparing `G(H(act))` with the canonical form of `act`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GhReport {
    pub same_monoids: bool,
    pub same_cones: bool,
    pub same_phi: bool,
    pub same_fixed_points: bool,
    pub same_xi: bool,
}

impl GhReport {
    pub fn holds(&self) -> bool {
        self.same_monoids && self.same_cones && self.same_phi && self.same_fixed_points && self.same_xi
    }
}

pub fn roundtrip_gh(act: &PreorderedAction) -> Result<GhReport> {
    let back = g_extract(&h_build(act)?);
    let canon = canonicalize_xi(act);
    Ok(GhReport {
        same_monoids: back.x() == canon.x() && back.b() == canon.b(),
        same_cones: back.px() == canon.px() && back.pb() == canon.pb(),
        same_phi: back.phi() == canon.phi(),
        same_fixed_points: fixed_point_set(&back) == fixed_point_set(&canon),
        same_xi: back.xi == canon.xi,
    })
}

/// Which part of a morphism of extensions fails, with the least element
/// where it does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtSquare {
    /// `f1 ∘ k = k' ∘ f0`
    Kernel(usize),
    /// `p' ∘ f1 = f2 ∘ p`
    Projection(usize),
    /// `f1 ∘ s = s' ∘ f2`
    Section(usize),
    ConeX(usize),
    ConeA(usize),
    ConeB(usize),
}

fn check_types(f: &MonoidHom, dom: &FiniteMonoid, cod: &FiniteMonoid, name: &str) -> Result<()> {
    if f.dom() != dom || f.cod() != cod {
        return Err(Error::TypeMismatch(format!("{name} does not go between the matching monoids")));
    }
    Ok(())
}

fn cone_failure(f: &MonoidHom, from: &Submonoid, into: &Submonoid) -> Option<usize> {
    from.members().iter().copied().find(|&a| !into.contains(f.apply(a)))
}

/// `Ok(None)` when `(f0, f1, f2)` is a morphism of coned extensions.
/// Compatibility with the retractions is not part of the check.
pub fn check_ext_morphism(
    f0: &MonoidHom,
    f1: &MonoidHom,
    f2: &MonoidHom,
    src: &ConedSplitExtension,
    dst: &ConedSplitExtension,
) -> Result<Option<ExtSquare>> {
    let (e, e2) = (src.ext(), dst.ext());
    check_types(f0, e.x(), e2.x(), "f0")?;
    check_types(f1, e.a(), e2.a(), "f1")?;
    check_types(f2, e.b(), e2.b(), "f2")?;
    if let Some(x) = e.x().elements().find(|&x| f1.apply(e.k().apply(x)) != e2.k().apply(f0.apply(x))) {
        return Ok(Some(ExtSquare::Kernel(x)));
    }
    if let Some(a) = e.a().elements().find(|&a| e2.p().apply(f1.apply(a)) != f2.apply(e.p().apply(a))) {
        return Ok(Some(ExtSquare::Projection(a)));
    }
    if let Some(b) = e.b().elements().find(|&b| f1.apply(e.s().apply(b)) != e2.s().apply(f2.apply(b))) {
        return Ok(Some(ExtSquare::Section(b)));
    }
    if let Some(x) = cone_failure(f0, src.px(), dst.px()) {
        return Ok(Some(ExtSquare::ConeX(x)));
    }
    if let Some(a) = cone_failure(f1, src.pa(), dst.pa()) {
        return Ok(Some(ExtSquare::ConeA(a)));
    }
    if let Some(b) = cone_failure(f2, src.pb(), dst.pb()) {
        return Ok(Some(ExtSquare::ConeB(b)));
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ActionMorphismFailure {
    ConeX(usize),
    ConeB(usize),
    /// `f0(b·x) != f2(b)·f0(x)`
    Equivariance { b: usize, x: usize },
    /// `(u, v)` is fixed but `(f0(u), f2(v))` is not
    FixedPoint { u: usize, v: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMorphismReport {
    pub failure: Option<ActionMorphismFailure>,
    /// The induced map `P_ξ → P_ξ'`, as `((u, v), (f0(u), f2(v)))`.
    pub g: Vec<((usize, usize), (usize, usize))>,
}

impl ActionMorphismReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

pub fn check_action_morphism(
    f0: &MonoidHom,
    f2: &MonoidHom,
    src: &PreorderedAction,
    dst: &PreorderedAction,
) -> Result<ActionMorphismReport> {
    check_types(f0, src.x(), dst.x(), "f0")?;
    check_types(f2, src.b(), dst.b(), "f2")?;
    let fail = |f| Ok(ActionMorphismReport { failure: Some(f), g: Vec::new() });
    if let Some(x) = cone_failure(f0, src.px(), dst.px()) {
        return fail(ActionMorphismFailure::ConeX(x));
    }
    if let Some(b) = cone_failure(f2, src.pb(), dst.pb()) {
        return fail(ActionMorphismFailure::ConeB(b));
    }
    for b in src.b().elements() {
        for x in src.x().elements() {
            if f0.apply(src.phi().act(b, x)) != dst.phi().act(f2.apply(b), f0.apply(x)) {
                return fail(ActionMorphismFailure::Equivariance { b, x });
            }
        }
    }
    let mut g = Vec::new();
    for (u, v) in fixed_point_set(src).pairs {
        let image = (f0.apply(u), f2.apply(v));
        if !dst.is_fixed(image.0, image.1) {
            return fail(ActionMorphismFailure::FixedPoint { u, v });
        }
        g.push(((u, v), image));
    }
    Ok(ActionMorphismReport { failure: None, g })
}
