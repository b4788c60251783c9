//! Free preordered monoids (as depth-bounded fragments), discrete and
//! total lifts, and coequalizers of preordered monoids.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::monoid::{coequalizer_mon, FiniteMonoid, MonoidHom};
use crate::pom::{monotonicity_witness, PreorderedMonoid};
use crate::relation::{image_preorder_closure, is_compatible, Preorder};

/// Upper bound on the number of words in a [`FreeFragment`].
pub const FRAGMENT_WORD_GUARD: usize = 100_000;

/// A finite preordered set on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreorderedSet {
    order: Preorder,
}

impl PreorderedSet {
    pub fn new(order: Preorder) -> Self {
        PreorderedSet { order }
    }

    pub fn size(&self) -> usize {
        self.order.size()
    }

    pub fn order(&self) -> &Preorder {
        &self.order
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }
}

/// All words of length at most `depth` over a preordered alphabet, ordered
/// by `w ≤ w'` iff they have equal length and are related letter by letter.
///
/// Words are listed by length, then lexicographically; the empty word is
/// index 0.
#[derive(Debug, Clone)]
pub struct FreeFragment {
    base: PreorderedSet,
    depth: usize,
    words: Vec<Word>,
    index: HashMap<Word, usize>,
}

impl FreeFragment {
    pub fn new(base: &PreorderedSet, depth: usize) -> Result<Self> {
        let n = base.size();
        let mut total: usize = 0;
        let mut layer: usize = 1;
        for _ in 0..=depth {
            total = total.saturating_add(layer);
            layer = layer.saturating_mul(n);
        }
        if total > FRAGMENT_WORD_GUARD {
            return Err(Error::SizeGuardExceeded {
                what: format!("free fragment with {total} words"),
                bound: FRAGMENT_WORD_GUARD,
            });
        }
        let mut words = vec![Word::empty()];
        let mut prev = vec![Word::empty()];
        for _ in 0..depth {
            let next: Vec<Word> = prev
                .iter()
                .flat_map(|w| {
                    (0..n).map(move |x| {
                        let mut v = w.0.clone();
                        v.push(x);
                        Word(v)
                    })
                })
                .collect();
            words.extend(next.iter().cloned());
            prev = next;
        }
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        Ok(FreeFragment { base: base.clone(), depth, words, index })
    }

    pub fn base(&self) -> &PreorderedSet {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Index of the one-letter word `[x]`.
    pub fn unit(&self, x: usize) -> Option<usize> {
        self.index_of(&Word(vec![x]))
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        let (u, v) = (&self.words[i], &self.words[j]);
        u.len() == v.len() && u.0.iter().zip(&v.0).all(|(&a, &b)| self.base.order.le(a, b))
    }

    /// Concatenation, if the result still fits in the fragment.
    pub fn concat(&self, i: usize, j: usize) -> Option<usize> {
        let (u, v) = (&self.words[i], &self.words[j]);
        if u.len() + v.len() > self.depth {
            return None;
        }
        let mut w = u.0.clone();
        w.extend_from_slice(&v.0);
        self.index_of(&Word(w))
    }

    /// The word order as a [`Preorder`], when the fragment is small enough.
    pub fn order(&self) -> Result<Preorder> {
        let n = self.len();
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && self.le(i, j))
            .collect();
        Preorder::closure_from_edges(n, &edges)
    }
}

/// `f̄([x₁ … xₙ]) = f(x₁) + … + f(xₙ)` for a monotone `f: X → target`.
pub fn universal_extend(base: &PreorderedSet, target: &PreorderedMonoid, f: &[usize], w: &Word) -> Result<usize> {
    check_monotone_into(base, target, f)?;
    let m = target.monoid();
    w.0.iter().try_fold(m.identity(), |acc, &x| {
        if x >= base.size() {
            return Err(Error::LetterOutOfRange(x));
        }
        Ok(m.op(acc, f[x]))
    })
}

fn check_monotone_into(base: &PreorderedSet, target: &PreorderedMonoid, f: &[usize]) -> Result<()> {
    if f.len() != base.size() {
        return Err(Error::MapLength { expected: base.size(), got: f.len() });
    }
    for &y in f {
        target.monoid().check_element(y)?;
    }
    if let Some((a, b)) = monotonicity_witness(f, base.order(), target.order()) {
        return Err(Error::NotMonotone(a, b));
    }
    Ok(())
}

/// [`universal_extend`] on every word of the fragment, by index.
pub fn extend_on_fragment(frag: &FreeFragment, target: &PreorderedMonoid, f: &[usize]) -> Result<Vec<usize>> {
    frag.words().iter().map(|w| universal_extend(frag.base(), target, f, w)).collect()
}

pub fn lift_discrete(m: &FiniteMonoid) -> PreorderedMonoid {
    let order = Preorder::discrete(m.size()).expect("carrier fits a preorder");
    PreorderedMonoid::new(m.clone(), order).expect("the discrete preorder is compatible")
}

pub fn lift_total(m: &FiniteMonoid) -> PreorderedMonoid {
    let order = Preorder::total(m.size()).expect("carrier fits a preorder");
    PreorderedMonoid::new(m.clone(), order).expect("the total preorder is compatible")
}

/// A monoid hom between preordered monoids that preserves the order.
pub fn check_monotone_hom(f: &MonoidHom, dom: &PreorderedMonoid, cod: &PreorderedMonoid) -> Result<()> {
    if f.dom() != dom.monoid() || f.cod() != cod.monoid() {
        return Err(Error::TypeMismatch("hom does not match the preordered monoids".into()));
    }
    if let Some((a, b)) = monotonicity_witness(f.map(), dom.order(), cod.order()) {
        return Err(Error::NotMonotone(a, b));
    }
    Ok(())
}

/// Coequalizer of monotone `f, g: A → B`: the monoid coequalizer of the
/// underlying homs, ordered by the closure of the image of `B`'s order.
pub fn coequalizer_ordmon(
    dom: &PreorderedMonoid,
    cod: &PreorderedMonoid,
    f: &MonoidHom,
    g: &MonoidHom,
) -> Result<(PreorderedMonoid, MonoidHom)> {
    check_monotone_hom(f, dom, cod)?;
    check_monotone_hom(g, dom, cod)?;
    let (c, q) = coequalizer_mon(f, g)?;
    let order = image_preorder_closure(cod.order(), q.map(), c.size())?;
    assert!(is_compatible(&c, &order)?, "image closure along a monoid quotient is compatible");
    let result = PreorderedMonoid::new(c, order)?;
    debug_assert!(monotonicity_witness(q.map(), cod.order(), result.order()).is_none());
    Ok((result, q))
}
