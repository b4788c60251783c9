//! Brute-force oracles checked against the optimized implementations.
//! Frozen counts come from `fixtures/counts.py`.

use pomkit::builtin;
use pomkit::enumeration::{
    enumerate_actions, enumerate_compatible_preorders, enumerate_homs, enumerate_monoids, enumerate_preorders,
    enumerate_submonoids, hom_maps, SubmonoidFilter,
};
use pomkit::monoid::{coequalizer_mon, congruence_closure, kernel, quotient, Congruence};
use pomkit::relation::is_compatible;
use pomkit::schreier::{find_retraction, semidirect};
use pomkit::{FiniteMonoid, MonoidHom, Preorder, Submonoid};

fn small_monoids() -> Vec<FiniteMonoid> {
    (1..=3).flat_map(|n| enumerate_monoids(n).unwrap()).collect()
}

fn all_tables(n: usize) -> Vec<Vec<usize>> {
    let free: Vec<(usize, usize)> = (1..n).flat_map(|i| (1..n).map(move |j| (i, j))).collect();
    let total = n.pow(free.len() as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut t = vec![0; n * n];
        for i in 0..n {
            t[i] = i;
            t[i * n] = i;
        }
        let mut c = code;
        for &(i, j) in free.iter().rev() {
            t[i * n + j] = c % n;
            c /= n;
        }
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| t[t[a * n + b] * n + c] == t[a * n + t[b * n + c]]))
        });
        if assoc {
            out.push(t);
        }
    }
    out
}

fn flat(m: &FiniteMonoid) -> Vec<usize> {
    m.rows().concat()
}

#[test]
fn monoid_enumeration_matches_unpruned_scan() {
    let frozen = [1, 2, 11, 156];
    for n in 1..=4 {
        let got: Vec<Vec<usize>> = enumerate_monoids(n).unwrap().iter().map(flat).collect();
        assert_eq!(got, all_tables(n), "size {n}");
        assert_eq!(got.len(), frozen[n - 1]);
    }
}

fn all_relations_closed(n: usize) -> Vec<Vec<Vec<bool>>> {
    let mut out = Vec::new();
    for bits in 0u32..(1 << (n * n)) {
        let m: Vec<Vec<bool>> = (0..n).map(|a| (0..n).map(|b| bits >> (a * n + b) & 1 == 1).collect()).collect();
        let refl = (0..n).all(|a| m[a][a]);
        let trans = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(m[a][b] && m[b][c]) || m[a][c])));
        if refl && trans {
            out.push(m);
        }
    }
    out.sort();
    out
}

#[test]
fn preorder_enumeration_matches_scan() {
    let frozen = [1, 4, 29, 355];
    for n in 1..=4 {
        let got: Vec<Vec<Vec<bool>>> = enumerate_preorders(n).unwrap().iter().map(|r| r.matrix()).collect();
        assert_eq!(got, all_relations_closed(n));
        assert_eq!(got.len(), frozen[n - 1]);
    }
}

#[test]
fn compatible_preorders_match_definition() {
    let mut total3 = 0;
    for m in small_monoids() {
        let n = m.size();
        let expected: Vec<Vec<Vec<bool>>> = all_relations_closed(n)
            .into_iter()
            .filter(|r| {
                (0..n).all(|a| {
                    (0..n).all(|b| {
                        (0..n).all(|c| (0..n).all(|d| !(r[a][b] && r[c][d]) || r[m.op(a, c)][m.op(b, d)]))
                    })
                })
            })
            .collect();
        let got: Vec<_> = enumerate_compatible_preorders(&m).unwrap().iter().map(|r| r.matrix()).collect();
        assert_eq!(got, expected);
        if n == 3 {
            total3 += got.len();
        }
    }
    assert_eq!(total3, 120);
}

#[test]
fn homs_match_all_maps_scan() {
    let ms = small_monoids();
    for m in &ms {
        for n in &ms {
            let (a, b) = (m.size(), n.size());
            let mut expected = Vec::new();
            for code in 0..b.pow(a as u32) {
                let mut map = vec![0; a];
                let mut c = code;
                for slot in map.iter_mut().rev() {
                    *slot = c % b;
                    c /= b;
                }
                let ok = map[m.identity()] == n.identity()
                    && (0..a).all(|x| (0..a).all(|y| map[m.op(x, y)] == n.op(map[x], map[y])));
                if ok {
                    expected.push(map);
                }
            }
            assert_eq!(hom_maps(m, n), expected);
        }
    }
}

#[test]
fn submonoids_match_subset_scan() {
    let mut ms = small_monoids();
    ms.push(builtin::ex2_2_monoid());
    ms.push(builtin::ex2_3().monoid().clone());
    for m in &ms {
        let n = m.size();
        let expected: Vec<Vec<usize>> = (0u32..1 << n)
            .map(|bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| s.contains(&m.identity()) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&m.op(a, b)))))
            .collect();
        let got: Vec<Vec<usize>> = enumerate_submonoids(m, SubmonoidFilter::None)
            .unwrap()
            .iter()
            .map(|s| s.members().to_vec())
            .collect();
        assert_eq!(got, expected);
        for f in [SubmonoidFilter::RightNormal, SubmonoidFilter::LeftNormal, SubmonoidFilter::Normal] {
            for s in enumerate_submonoids(m, f).unwrap() {
                assert!(got.contains(&s.members().to_vec()));
                assert!(s.contains(m.identity()));
            }
        }
    }
}

/// Every set partition of `{0, .., n-1}` as class labels.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, labels: &mut Vec<usize>, used: usize, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(labels.clone());
            return;
        }
        for l in 0..=used {
            labels.push(l);
            go(i + 1, n, labels, used.max(l + 1), out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), 0, &mut out);
    out
}

fn is_congruence(m: &FiniteMonoid, labels: &[usize]) -> bool {
    let n = m.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            labels[a] != labels[b]
                || (0..n).all(|c| labels[m.op(a, c)] == labels[m.op(b, c)] && labels[m.op(c, a)] == labels[m.op(c, b)])
        })
    })
}

/// The finest congruence containing `pairs`.
fn least_congruence(m: &FiniteMonoid, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let candidates: Vec<Vec<usize>> = partitions(m.size())
        .into_iter()
        .filter(|l| is_congruence(m, l) && pairs.iter().all(|&(a, b)| l[a] == l[b]))
        .collect();
    let finest = candidates
        .iter()
        .find(|l| {
            candidates
                .iter()
                .all(|other| (0..m.size()).all(|a| (0..m.size()).all(|b| l[a] != l[b] || other[a] == other[b])))
        })
        .expect("the congruences containing a set have a least element");
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for a in 0..m.size() {
        match classes.iter_mut().find(|c| finest[c[0]] == finest[a]) {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    classes
}

#[test]
fn congruence_closure_matches_partition_scan() {
    let mut ms = small_monoids();
    ms.push(builtin::ex2_2_monoid());
    ms.push(builtin::ex2_3().monoid().clone());
    ms.push(FiniteMonoid::cyclic_group(4));
    for m in &ms {
        let n = m.size();
        let all_pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for p in &all_pairs {
            let c = congruence_closure(m, &[*p]).unwrap();
            assert_eq!(c.classes(), least_congruence(m, &[*p]), "{m:?} {p:?}");
            let (qm, q) = quotient(m, &c).unwrap();
            assert_eq!(qm.size(), c.num_classes());
            for a in 0..n {
                for b in 0..n {
                    assert_eq!(q.apply(a) == q.apply(b), c.same_class(a, b));
                }
            }
        }
        for (i, p) in all_pairs.iter().enumerate() {
            for r in &all_pairs[i + 1..] {
                let c = congruence_closure(m, &[*p, *r]).unwrap();
                assert_eq!(c.classes(), least_congruence(m, &[*p, *r]));
            }
        }
    }
    // hand-checked on the ex2_2 monoid
    let c = congruence_closure(&builtin::ex2_2_monoid(), &[(2, 3)]).unwrap();
    assert_eq!(c.classes(), vec![vec![0], vec![1], vec![2, 3], vec![4]]);
}

#[test]
fn congruence_labels_agree_with_scan() {
    let m = builtin::ex2_2_monoid();
    for labels in partitions(5) {
        assert_eq!(Congruence::new(&m, &labels).is_ok(), is_congruence(&m, &labels), "{labels:?}");
    }
}

#[test]
fn kernels_are_submonoids() {
    let ms = small_monoids();
    for m in &ms {
        for n in &ms {
            for h in enumerate_homs(m, n).unwrap() {
                let k = kernel(&h);
                assert!(Submonoid::new(m, k.members().iter().copied()).is_ok());
            }
        }
    }
}

#[test]
fn coequalizer_mon_is_couniversal() {
    let ms: Vec<FiniteMonoid> = (1..=3).flat_map(|n| enumerate_monoids(n).unwrap()).collect();
    for a in &ms {
        for b in &ms {
            let homs = enumerate_homs(a, b).unwrap();
            for f in &homs {
                for g in &homs {
                    let (c, q) = coequalizer_mon(f, g).unwrap();
                    assert_eq!(f.then(&q).unwrap(), g.then(&q).unwrap());
                    for n in &ms {
                        for h in enumerate_homs(b, n).unwrap() {
                            if f.then(&h).unwrap() != g.then(&h).unwrap() {
                                continue;
                            }
                            let ts: Vec<MonoidHom> = enumerate_homs(&c, n)
                                .unwrap()
                                .into_iter()
                                .filter(|t| q.then(t).unwrap() == h)
                                .collect();
                            assert_eq!(ts.len(), 1);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn action_counts() {
    let z2 = FiniteMonoid::cyclic_group(2);
    let sl2 = FiniteMonoid::max_semilattice(2);
    let z3 = FiniteMonoid::cyclic_group(3);
    let t = |m: &FiniteMonoid| Submonoid::trivial(m);
    let f = |m: &FiniteMonoid| Submonoid::full(m);
    let count = |x: &FiniteMonoid, b: &FiniteMonoid, px: Submonoid, pb: Submonoid| {
        enumerate_actions(x, b, &px, &pb).unwrap().len()
    };
    assert_eq!(count(&z2, &z2, t(&z2), t(&z2)), 2);
    assert_eq!(count(&z2, &z2, f(&z2), f(&z2)), 1);
    assert_eq!(count(&sl2, &sl2, t(&sl2), f(&sl2)), 5);
    assert_eq!(count(&sl2, &z2, f(&sl2), t(&z2)), 1);
    assert_eq!(count(&z3, &z2, t(&z3), t(&z2)), 4);
}

#[test]
fn retraction_is_unique_among_all_maps() {
    let ms = small_monoids();
    let pairs: Vec<(&FiniteMonoid, &FiniteMonoid)> = ms
        .iter()
        .flat_map(|x| ms.iter().map(move |b| (x, b)))
        .filter(|(x, b)| x.size() * b.size() <= 4)
        .collect();
    for (x, b) in pairs {
        let (end, maps) = pomkit::monoid::endomorphism_monoid(x).unwrap();
        for h in hom_maps(b, &end) {
            let rows: Vec<Vec<usize>> = h.iter().map(|&i| maps[i].clone()).collect();
            let act = pomkit::ActionTable::new(x, b, rows).unwrap();
            let ext = semidirect(&act);
            let (na, nx) = (ext.a().size(), x.size());
            let bare = pomkit::SplitExtension::new(ext.k().clone(), ext.p().clone(), ext.s().clone()).unwrap();
            let q = find_retraction(&bare).unwrap();
            let mut solutions = 0;
            for code in 0..nx.pow(na as u32) {
                let mut cand = vec![0; na];
                let mut c = code;
                for slot in cand.iter_mut().rev() {
                    *slot = c % nx;
                    c /= nx;
                }
                let s1 = (0..na).all(|a| ext.a().op(ext.k().apply(cand[a]), ext.s().apply(ext.p().apply(a))) == a);
                let s2 = x.elements().all(|u| {
                    b.elements().all(|v| cand[ext.a().op(ext.k().apply(u), ext.s().apply(v))] == u)
                });
                if s1 && s2 {
                    solutions += 1;
                    assert_eq!(cand, q);
                }
            }
            assert_eq!(solutions, 1);
        }
    }
}

#[test]
fn preorder_from_matrix_accepts_exactly_closed_relations() {
    let closed = all_relations_closed(3);
    for bits in 0u32..(1 << 9) {
        let m: Vec<Vec<bool>> = (0..3).map(|a| (0..3).map(|b| bits >> (a * 3 + b) & 1 == 1).collect()).collect();
        assert_eq!(Preorder::from_matrix(&m).is_ok(), closed.contains(&m));
    }
}

#[test]
fn registry_orders_are_compatible() {
    for (_, pm) in builtin::registry_poms() {
        assert!(is_compatible(pm.monoid(), pm.order()).unwrap());
    }
}
