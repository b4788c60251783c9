//! Preordered monoids and their positive cones.
//!
//! The cone-induced preorder is taken on the right throughout:
//! `a ≤_S b` iff `b ∈ S + a`. The left version `b ∈ a + S` is available
//! separately as [`induced_left`].

use crate::error::{Error, Result};
use crate::monoid::{FiniteMonoid, MonoidHom, Submonoid};
use crate::relation::{compatibility_witness, Preorder};

/// A finite monoid with a compatible preorder. The positive cone
/// `{a : e ≤ a}` is computed once on construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreorderedMonoid {
    monoid: FiniteMonoid,
    order: Preorder,
    cone: Submonoid,
}

impl PreorderedMonoid {
    pub fn new(monoid: FiniteMonoid, order: Preorder) -> Result<Self> {
        if monoid.size() != order.size() {
            return Err(Error::SizeMismatch(monoid.size(), order.size()));
        }
        if let Some((a, b, c, d)) = compatibility_witness(&monoid, &order)? {
            return Err(Error::Incompatible { a, b, c, d });
        }
        let cone = positive_cone_of(&monoid, &order);
        Ok(PreorderedMonoid { monoid, order, cone })
    }

    pub fn monoid(&self) -> &FiniteMonoid {
        &self.monoid
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }

    pub fn cone(&self) -> &Submonoid {
        &self.cone
    }

    pub fn size(&self) -> usize {
        self.monoid.size()
    }
}

fn positive_cone_of(m: &FiniteMonoid, order: &Preorder) -> Submonoid {
    let mask = m.elements().map(|a| order.le(m.identity(), a)).collect();
    Submonoid::from_mask(m, mask).expect("the positive cone of a compatible preorder is a submonoid")
}

/// `{a : e ≤ a}`.
pub fn positive_cone(pm: &PreorderedMonoid) -> Submonoid {
    pm.cone.clone()
}

/// `a ≤ b` iff `b = x + a` for some `x ∈ S`.
pub fn induced_right(m: &FiniteMonoid, s: &Submonoid) -> Preorder {
    let mut rows = vec![0u64; m.size()];
    for a in m.elements() {
        for &x in s.members() {
            rows[a] |= 1u64 << m.op(x, a);
        }
    }
    Preorder::from_rows(m.size(), rows).expect("a submonoid induces a preorder")
}

/// `a ≤' b` iff `b = a + x` for some `x ∈ S`.
pub fn induced_left(m: &FiniteMonoid, s: &Submonoid) -> Preorder {
    let mut rows = vec![0u64; m.size()];
    for a in m.elements() {
        for &x in s.members() {
            rows[a] |= 1u64 << m.op(a, x);
        }
    }
    Preorder::from_rows(m.size(), rows).expect("a submonoid induces a preorder")
}

/// Failure of a normality condition: `element` lies in one coset of `a`
/// but not the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalityWitness {
    pub a: usize,
    pub element: usize,
}

/// Least `a` with `a + S ⊄ S + a`, together with the least offending
/// element of `a + S`.
pub fn right_normality_witness(m: &FiniteMonoid, s: &Submonoid) -> Option<NormalityWitness> {
    coset_inclusion_witness(m, |a| m.left_coset(a, s), |a| m.right_coset(s, a))
}

/// Least `a` with `S + a ⊄ a + S`.
pub fn left_normality_witness(m: &FiniteMonoid, s: &Submonoid) -> Option<NormalityWitness> {
    coset_inclusion_witness(m, |a| m.right_coset(s, a), |a| m.left_coset(a, s))
}

fn coset_inclusion_witness(
    m: &FiniteMonoid,
    inner: impl Fn(usize) -> Vec<bool>,
    outer: impl Fn(usize) -> Vec<bool>,
) -> Option<NormalityWitness> {
    for a in m.elements() {
        let (i, o) = (inner(a), outer(a));
        if let Some(element) = (0..m.size()).find(|&x| i[x] && !o[x]) {
            return Some(NormalityWitness { a, element });
        }
    }
    None
}

pub fn is_right_normal(m: &FiniteMonoid, s: &Submonoid) -> bool {
    right_normality_witness(m, s).is_none()
}

pub fn is_left_normal(m: &FiniteMonoid, s: &Submonoid) -> bool {
    left_normality_witness(m, s).is_none()
}

pub fn is_normal(m: &FiniteMonoid, s: &Submonoid) -> bool {
    is_right_normal(m, s) && is_left_normal(m, s)
}

/// `a ≤_ℒ b` iff `S + a ⊆ S + b`.
pub fn greens_l_preorder(m: &FiniteMonoid, s: &Submonoid) -> Preorder {
    let cosets: Vec<Vec<bool>> = m.elements().map(|a| m.right_coset(s, a)).collect();
    containment_preorder(&cosets)
}

/// `a ≤_ℛ b` iff `a + S ⊆ b + S`.
pub fn greens_r_preorder(m: &FiniteMonoid, s: &Submonoid) -> Preorder {
    let cosets: Vec<Vec<bool>> = m.elements().map(|a| m.left_coset(a, s)).collect();
    containment_preorder(&cosets)
}

fn containment_preorder(sets: &[Vec<bool>]) -> Preorder {
    let n = sets.len();
    let mut rows = vec![0u64; n];
    for a in 0..n {
        for b in 0..n {
            if sets[a].iter().zip(&sets[b]).all(|(&x, &y)| !x || y) {
                rows[a] |= 1u64 << b;
            }
        }
    }
    Preorder::from_rows(n, rows).expect("set containment is a preorder")
}

/// One row of a coset table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetRow {
    pub element: usize,
    /// `a + S`
    pub left: Vec<usize>,
    /// `S + a`
    pub right: Vec<usize>,
}

pub fn coset_table(m: &FiniteMonoid, s: &Submonoid) -> Vec<CosetRow> {
    let members = |mask: Vec<bool>| (0..mask.len()).filter(|&x| mask[x]).collect::<Vec<_>>();
    m.elements()
        .map(|a| CosetRow {
            element: a,
            left: members(m.left_coset(a, s)),
            right: members(m.right_coset(s, a)),
        })
        .collect()
}

pub type PairWitness = (usize, usize);
pub type QuadWitness = (usize, usize, usize, usize);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub compatible: bool,
    pub cone: Vec<usize>,
    pub induced_right: Preorder,
    pub induced_left: Preorder,
    pub in_ordmon_star: bool,
    pub cone_right_normal: bool,
    pub cone_left_normal: bool,
    pub induced_right_compatible: bool,
    pub induced_left_compatible: bool,
    pub commutative: bool,
    pub compatible_witness: Option<QuadWitness>,
    /// A pair with `a ≤ b` but not `a ≤_P b`.
    pub ordmon_star_witness: Option<PairWitness>,
    pub right_normal_witness: Option<NormalityWitness>,
    pub left_normal_witness: Option<NormalityWitness>,
    pub induced_right_witness: Option<QuadWitness>,
    pub induced_left_witness: Option<QuadWitness>,
}

pub fn classify(pm: &PreorderedMonoid) -> ClassificationReport {
    let m = pm.monoid();
    let cone = pm.cone();
    let induced_r = induced_right(m, cone);
    let induced_l = induced_left(m, cone);
    debug_assert!(induced_r.is_contained_in(pm.order()).unwrap());
    let compatible_witness = compatibility_witness(m, pm.order()).unwrap();
    let ordmon_star_witness = pm.order().containment_witness(&induced_r).unwrap();
    let right_normal_witness = right_normality_witness(m, cone);
    let left_normal_witness = left_normality_witness(m, cone);
    let induced_right_witness = compatibility_witness(m, &induced_r).unwrap();
    let induced_left_witness = compatibility_witness(m, &induced_l).unwrap();
    ClassificationReport {
        compatible: compatible_witness.is_none(),
        cone: cone.members().to_vec(),
        in_ordmon_star: ordmon_star_witness.is_none(),
        cone_right_normal: right_normal_witness.is_none(),
        cone_left_normal: left_normal_witness.is_none(),
        induced_right_compatible: induced_right_witness.is_none(),
        induced_left_compatible: induced_left_witness.is_none(),
        commutative: m.is_commutative(),
        induced_right: induced_r,
        induced_left: induced_l,
        compatible_witness,
        ordmon_star_witness,
        right_normal_witness,
        left_normal_witness,
        induced_right_witness,
        induced_left_witness,
    }
}

/// Whether `f` is order-preserving; returns the least failing pair.
pub fn monotonicity_witness(f: &[usize], dom: &Preorder, cod: &Preorder) -> Option<PairWitness> {
    (0..dom.size())
        .flat_map(|a| dom.successors(a).map(move |b| (a, b)))
        .find(|&(a, b)| !cod.le(f[a], f[b]))
}

/// Replaces the order by the cone-induced one. Defined when the cone is
/// right normal; the returned hom is the identity carrier map from the
/// coreflection into `pm`.
pub fn coreflect(pm: &PreorderedMonoid) -> Result<(PreorderedMonoid, MonoidHom)> {
    if let Some(NormalityWitness { a, element }) = right_normality_witness(pm.monoid(), pm.cone()) {
        return Err(Error::ConeNotRightNormal { a, element });
    }
    let order = induced_right(pm.monoid(), pm.cone());
    let core = PreorderedMonoid::new(pm.monoid().clone(), order)
        .expect("a right normal cone induces a compatible preorder");
    debug_assert_eq!(core.cone(), pm.cone());
    Ok((core, MonoidHom::identity(pm.monoid())))
}

/// Result of checking that a monotone hom out of an OrdMon* object factors
/// through the coreflection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorizationReport {
    /// The factor, as a map into the (shared) carrier.
    pub factor: Vec<usize>,
    pub cone_preserved: bool,
    pub factor_monotone: bool,
    pub factor_witness: Option<PairWitness>,
}

impl FactorizationReport {
    pub fn holds(&self) -> bool {
        self.cone_preserved && self.factor_monotone
    }
}

/// Checks the universal property of [`coreflect`] against one candidate
/// `f: src → pm` where `src` is cone-determined. The factor is forced to be
/// `f` itself on carriers; what is verified is that it is monotone for the
/// induced order.
pub fn check_coreflection_universal(
    pm: &PreorderedMonoid,
    src: &PreorderedMonoid,
    f: &MonoidHom,
) -> Result<FactorizationReport> {
    let (core, _) = coreflect(pm)?;
    if f.dom() != src.monoid() || f.cod() != pm.monoid() {
        return Err(Error::TypeMismatch("candidate must go from the source into the coreflected object".into()));
    }
    if let Some((a, b)) = src.order().containment_witness(&induced_right(src.monoid(), src.cone()))? {
        return Err(Error::NotConeDetermined(a, b));
    }
    if let Some((a, b)) = monotonicity_witness(f.map(), src.order(), pm.order()) {
        return Err(Error::NotMonotone(a, b));
    }
    let cone_preserved = src.cone().members().iter().all(|&a| pm.cone().contains(f.apply(a)));
    let factor_witness = monotonicity_witness(f.map(), src.order(), core.order());
    Ok(FactorizationReport {
        factor: f.map().to_vec(),
        cone_preserved,
        factor_monotone: factor_witness.is_none(),
        factor_witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    fn pairs_with_zero(n: usize, extra: &[(usize, usize)]) -> Vec<(usize, usize)> {
        let mut out: Vec<_> = (1..n).map(|x| (0, x)).collect();
        out.extend_from_slice(extra);
        out.sort();
        out
    }

    #[test]
    fn cones() {
        assert_eq!(builtin::ex2_2().cone().members(), &[0, 1, 2, 3, 4]);
        assert_eq!(builtin::ex2_4().cone().members(), &[0, 1]);
        let m = builtin::ex2_2_monoid();
        let d = PreorderedMonoid::new(m.clone(), Preorder::discrete(5).unwrap()).unwrap();
        assert_eq!(positive_cone(&d).members(), &[0]);
    }

    #[test]
    fn induced_examples() {
        let pm = builtin::ex2_2();
        assert_eq!(
            induced_right(pm.monoid(), pm.cone()).strict_pairs(),
            pairs_with_zero(5, &[(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)])
        );
        let pm = builtin::ex2_3();
        assert_eq!(
            induced_right(pm.monoid(), pm.cone()).strict_pairs(),
            pairs_with_zero(5, &[(3, 1), (3, 2), (3, 4), (1, 4), (2, 4)])
        );
        let left = induced_left(pm.monoid(), pm.cone());
        assert_eq!(left.successors(1).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(left.successors(2).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(left.successors(3).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        let trivial = Submonoid::trivial(pm.monoid());
        assert_eq!(induced_right(pm.monoid(), &trivial), Preorder::discrete(5).unwrap());
        assert_eq!(induced_left(pm.monoid(), &trivial), Preorder::discrete(5).unwrap());
    }

    #[test]
    fn normality_examples() {
        let pm = builtin::ex2_2();
        assert!(is_right_normal(pm.monoid(), pm.cone()));
        let pm = builtin::ex2_3();
        assert_eq!(
            right_normality_witness(pm.monoid(), pm.cone()),
            Some(NormalityWitness { a: 1, element: 2 })
        );
        assert!(is_left_normal(pm.monoid(), pm.cone()));
        assert!(is_normal(pm.monoid(), &Submonoid::trivial(pm.monoid())));
    }

    #[test]
    fn greens_preorders_against_containment_scan() {
        let pm = builtin::ex2_2();
        let (m, s) = (pm.monoid(), pm.cone());
        let l = greens_l_preorder(m, s);
        for a in m.elements() {
            for b in m.elements() {
                let sa = m.right_coset(s, a);
                let sb = m.right_coset(s, b);
                let contained = (0..5).all(|x| !sa[x] || sb[x]);
                assert_eq!(l.le(a, b), contained);
            }
        }
        assert_eq!(induced_right(m, s), l.opposite());
        let t = Submonoid::trivial(m);
        assert_eq!(greens_l_preorder(m, &t), Preorder::discrete(5).unwrap());
        let c = builtin::ex_comm3_monoid();
        let full = Submonoid::full(&c);
        assert_eq!(greens_l_preorder(&c, &full), greens_r_preorder(&c, &full));
    }

    #[test]
    fn coset_tables() {
        let pm = builtin::ex2_2();
        let t = coset_table(pm.monoid(), pm.cone());
        assert_eq!(t[1].left, vec![1, 4]);
        assert_eq!(t[1].right, vec![1, 2, 3, 4]);
        assert_eq!(t[0].left, pm.cone().members());
        let pm = builtin::ex2_3();
        let t = coset_table(pm.monoid(), pm.cone());
        assert_eq!((t[2].left.clone(), t[2].right.clone()), (vec![1, 2, 4], vec![2, 4]));
    }

    #[test]
    fn classification_examples() {
        let r = classify(&builtin::ex2_2());
        assert!(r.compatible && !r.in_ordmon_star && r.cone_right_normal);
        assert_eq!(r.ordmon_star_witness, Some((2, 3)));
        assert!(classify(&builtin::ex2_4()).in_ordmon_star);
        let r = classify(&builtin::ex_comm3());
        assert!(!r.in_ordmon_star);
        assert_eq!(r.induced_right.strict_pairs(), vec![(0, 1), (0, 2), (2, 1)]);
        let r = classify(&builtin::ex2_3());
        assert!(!r.cone_right_normal && r.cone_left_normal && !r.induced_right_compatible);
        assert!(r.induced_left_compatible);
    }

    #[test]
    fn coreflection() {
        let (core, arrow) = coreflect(&builtin::ex2_2()).unwrap();
        assert_eq!(core.order().strict_pairs().len(), 4 + 5);
        assert_eq!(arrow.map(), &[0, 1, 2, 3, 4]);
        let ex24 = builtin::ex2_4();
        assert_eq!(coreflect(&ex24).unwrap().0, ex24);
        assert_eq!(
            coreflect(&builtin::ex2_3()).unwrap_err(),
            Error::ConeNotRightNormal { a: 1, element: 2 }
        );
        let twice = coreflect(&core).unwrap().0;
        assert_eq!(twice, core);
    }

    #[test]
    fn universal_property_trivially_holds_for_the_coreflection_itself() {
        let pm = builtin::ex2_2();
        let (core, arrow) = coreflect(&pm).unwrap();
        assert!(check_coreflection_universal(&pm, &core, &arrow).unwrap().holds());
        let t = PreorderedMonoid::new(FiniteMonoid::trivial(), Preorder::discrete(1).unwrap()).unwrap();
        let f = MonoidHom::constant(t.monoid(), pm.monoid());
        assert!(check_coreflection_universal(&pm, &t, &f).unwrap().holds());
    }

    #[test]
    fn universal_property_from_ex2_4_into_ex2_2() {
        let src = builtin::ex2_4();
        let dst = builtin::ex2_2();
        let mut checked = 0;
        for f in crate::enumeration::enumerate_homs(src.monoid(), dst.monoid()).unwrap() {
            if monotonicity_witness(f.map(), src.order(), dst.order()).is_some() {
                continue;
            }
            let rep = check_coreflection_universal(&dst, &src, &f).unwrap();
            assert!(rep.holds(), "{f:?}");
            checked += 1;
        }
        assert!(checked > 0);
    }
}
