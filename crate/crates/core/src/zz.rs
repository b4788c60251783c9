//! The split extension `ℤ → ℤ×ℤ ⇄ ℤ` with cones `{0}`, `ℕ×ℕ`, `ℕ`, checked
//! on a finite window with exact integers.
//!
//! ```text
//!   k(x) = (x, -x)   p(a, b) = a + b   s(b) = (0, b)   q(a, b) = a
//! ```
//!
//! The action is trivial and `ξ(u, v) = u` iff `0 ≤ u ≤ v`. The semidirect
//! product side uses `k' = ⟨1, 0⟩`, `p' = π₂`, and cone `P_ξ`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

type Z = BigInt;
type Pair = (Z, Z);

fn k(x: &Z) -> Pair {
    (x.clone(), -x)
}

fn p(a: &Pair) -> Z {
    &a.0 + &a.1
}

fn s(b: &Z) -> Pair {
    (Z::zero(), b.clone())
}

fn q(a: &Pair) -> Z {
    a.0.clone()
}

fn add(a: &Pair, b: &Pair) -> Pair {
    (&a.0 + &b.0, &a.1 + &b.1)
}

fn in_pa(a: &Pair) -> bool {
    !a.0.is_negative() && !a.1.is_negative()
}

fn in_pb(b: &Z) -> bool {
    !b.is_negative()
}

fn in_px(x: &Z) -> bool {
    x.is_zero()
}

/// `b·x`; trivial.
fn act(_b: &Z, x: &Z) -> Z {
    x.clone()
}

/// `ξ` as written in closed form.
pub fn xi(u: &Z, v: &Z) -> Z {
    if !u.is_negative() && u <= v {
        u.clone()
    } else {
        Z::zero()
    }
}

/// `ξ` read off the extension: `u` iff `k(u) + s(v) ∈ ℕ×ℕ`.
pub fn xi_from_extension(u: &Z, v: &Z) -> Z {
    if in_pa(&add(&k(u), &s(v))) {
        u.clone()
    } else {
        Z::zero()
    }
}

/// `(u, v) ∈ P_ξ`.
pub fn in_fixed_points(u: &Z, v: &Z) -> bool {
    in_pb(v) && &xi(u, v) == u
}

/// First failure of each check, as a description; `None` means it held.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ZzReport {
    pub window: i64,
    pub positive_pairs: usize,
    pub negative_pairs: usize,
    pub membership: Option<String>,
    pub xi_agrees_with_g: Option<String>,
    pub homs: Option<String>,
    pub split: Option<String>,
    pub s1: Option<String>,
    pub s2: Option<String>,
    pub a1: Option<String>,
    pub a2: Option<String>,
    pub a3: Option<String>,
    pub a4: Option<String>,
    pub beta: Option<String>,
}

impl ZzReport {
    pub fn failures(&self) -> Vec<(&'static str, &str)> {
        [
            ("membership", &self.membership),
            ("xi_agrees_with_g", &self.xi_agrees_with_g),
            ("homs", &self.homs),
            ("split", &self.split),
            ("s1", &self.s1),
            ("s2", &self.s2),
            ("a1", &self.a1),
            ("a2", &self.a2),
            ("a3", &self.a3),
            ("a4", &self.a4),
            ("beta", &self.beta),
        ]
        .into_iter()
        .filter_map(|(name, f)| f.as_deref().map(|msg| (name, msg)))
        .collect()
    }

    pub fn holds(&self) -> bool {
        self.failures().is_empty()
    }
}

fn first<T>(it: impl IntoIterator<Item = T>, bad: impl Fn(&T) -> Option<String>) -> Option<String> {
    it.into_iter().find_map(|t| bad(&t))
}

pub fn zz_demo(window: u32) -> ZzReport {
    let n = i64::from(window.max(1));
    let sym: Vec<Z> = (-n..=n).map(Z::from).collect();
    let nat: Vec<Z> = (0..=n).map(Z::from).collect();
    let neg: Vec<Z> = (-n..0).map(Z::from).collect();
    let grid = |xs: &[Z], ys: &[Z]| -> Vec<Pair> {
        xs.iter().flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone()))).collect()
    };
    let zero = Z::zero();

    let positive = grid(&nat, &nat);
    let negative = grid(&neg, &nat);
    let membership = first(positive.iter().chain(&negative), |(u, v)| {
        let expected = !u.is_negative() && u <= v;
        (in_fixed_points(u, v) != expected).then(|| format!("(u, v) = ({u}, {v})"))
    });
    let xi_agrees_with_g = first(positive.iter().chain(&negative), |(u, v)| {
        (xi(u, v) != xi_from_extension(u, v)).then(|| format!("(u, v) = ({u}, {v})"))
    });

    let sym2 = grid(&sym, &sym);
    let homs = first(&sym2, |(x, y)| {
        if k(&(x + y)) != add(&k(x), &k(y)) {
            return Some(format!("k at ({x}, {y})"));
        }
        if s(&(x + y)) != add(&s(x), &s(y)) {
            return Some(format!("s at ({x}, {y})"));
        }
        let (a, b) = ((x.clone(), y.clone()), (y.clone(), x.clone()));
        (p(&add(&a, &b)) != p(&a) + p(&b)).then(|| format!("p at ({x}, {y}), ({y}, {x})"))
    });
    let split = first(&sym, |b| {
        if p(&s(b)) != **b {
            return Some(format!("p(s({b})) != {b}"));
        }
        (!p(&k(b)).is_zero()).then(|| format!("p(k({b})) != 0"))
    });
    let s1 = first(&sym2, |a| (add(&k(&q(a)), &s(&p(a))) != **a).then(|| format!("a = ({}, {})", a.0, a.1)));
    let s2 = first(&sym2, |(x, b)| (&q(&add(&k(x), &s(b))) != x).then(|| format!("(x, b) = ({x}, {b})")));

    let a1 = first(&nat, |v| (!xi(&zero, v).is_zero()).then(|| format!("v = {v}")));
    let a2 = first(sym.iter().filter(|x| in_px(x)), |x| (xi(x, &zero) != **x).then(|| format!("x = {x}")));

    let fixed: Vec<Pair> = grid(&sym, &nat).into_iter().filter(|(u, v)| in_fixed_points(u, v)).collect();
    let a3 = first(&fixed, |(x, b)| {
        fixed.iter().find_map(|(x2, b2)| {
            let u = x + act(b, x2);
            let v = b + b2;
            (xi(&u, &v) != u).then(|| format!("({x}, {b}) + ({x2}, {b2})"))
        })
    });
    // witness (u', v') = (u, v): x + b·u = u + v·x and b + v = v + b
    let a4 = first(&fixed, |(u, v)| {
        sym2.iter().find_map(|(x, b)| {
            let ok = in_fixed_points(u, v) && x + act(b, u) == u + act(v, x) && b + v == v + b;
            (!ok).then(|| format!("(u, v) = ({u}, {v}), (x, b) = ({x}, {b})"))
        })
    });

    // β(x, b) = k(x) + s(b) carries P_ξ onto ℕ×ℕ
    let beta = first(&sym2, |(x, b)| {
        let image = add(&k(x), &s(b));
        if in_fixed_points(x, b) != in_pa(&image) {
            return Some(format!("(x, b) = ({x}, {b})"));
        }
        let back = (q(&image), p(&image));
        (back != (x.clone(), b.clone())).then(|| format!("β not invertible at ({x}, {b})"))
    });

    ZzReport {
        window: n,
        positive_pairs: positive.len(),
        negative_pairs: negative.len(),
        membership,
        xi_agrees_with_g,
        homs,
        split,
        s1,
        s2,
        a1,
        a2,
        a3,
        a4,
        beta,
    }
}
