//! Acceptance criteria 1 to 10, one PASS/FAIL line each.
//!
//! Run with `cargo test -p pomkit-cli --test acceptance`. Criteria on worked
//! examples drive the `pomkit` binary and read its `--machine` output; the
//! suites call the library and check results against brute-force oracles
//! defined here.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_yaml::Value as Yaml;

use pomkit::actions::{fixed_point_set, h_build, roundtrip_gh, roundtrip_hg};
use pomkit::builtin;
use pomkit::constructions::{coequalizer_ordmon, extend_on_fragment, FreeFragment, PreorderedSet};
use pomkit::enumeration::{
    enumerate_actions, enumerate_compatible_preorders, enumerate_monoids, enumerate_preorders, enumerate_submonoids,
    SubmonoidFilter,
};
use pomkit::pom::{greens_l_preorder, greens_r_preorder, induced_left, induced_right};
use pomkit::schreier::{action_from_ext, semidirect};
use pomkit::{FiniteMonoid, MonoidHom, Preorder, PreorderedMonoid};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn pomkit(args: &[&str]) -> (Yaml, i32, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_pomkit"))
        .arg("--machine")
        .args(args)
        .output()
        .expect("pomkit runs");
    let took = start.elapsed();
    let text = String::from_utf8(out.stdout).expect("utf-8 output");
    let yaml = serde_yaml::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: not YAML ({e}):\n{text}"));
    (yaml, out.status.code().unwrap_or(-1), took)
}

fn at<'a>(v: &'a Yaml, path: &str) -> &'a Yaml {
    path.split('.').fold(v, |v, k| &v[k])
}

fn ints(v: &Yaml) -> Vec<usize> {
    v.as_sequence()
        .unwrap_or_else(|| panic!("expected a list, got {v:?}"))
        .iter()
        .map(|i| i.as_u64().expect("index") as usize)
        .collect()
}

fn edge_set(v: &Yaml) -> BTreeSet<(usize, usize)> {
    v.as_sequence()
        .expect("edge list")
        .iter()
        .map(|e| {
            let p = ints(e);
            (p[0], p[1])
        })
        .collect()
}

fn expect(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn flag(v: &Yaml, path: &str) -> bool {
    at(v, path).as_bool().unwrap_or_else(|| panic!("{path} is not a boolean"))
}

fn with_zero_edges(n: usize, extra: &[(usize, usize)]) -> BTreeSet<(usize, usize)> {
    (1..n).map(|x| (0, x)).chain(extra.iter().copied()).collect()
}

// ---------------------------------------------------------------- 1 to 5

fn criterion_1() -> Outcome {
    let (v, code, took) = pomkit(&["classify", "ex2_2"]);
    expect(code == 0, format!("exit code {code}"))?;
    expect(flag(&v, "compatible"), "compatible is not true")?;
    expect(ints(&v["cone"]) == vec![0, 1, 2, 3, 4], "P is not {0,1,2,3,4}")?;
    let want = with_zero_edges(5, &[(1, 2), (1, 3), (1, 4), (2, 4), (3, 4)]);
    expect(edge_set(&v["induced_right"]) == want, format!("induced ≤_P is {:?}", edge_set(&v["induced_right"])))?;
    expect(!flag(&v, "in_ordmon_star"), "in_ordmon_star is not false")?;
    expect(flag(&v, "cone_right_normal"), "cone_right_normal is not true")?;
    expect(took < Duration::from_secs(1), format!("took {took:?}"))?;
    Ok(format!("runtime {} ms", took.as_millis()))
}

type CosetRow = (usize, Vec<usize>, Vec<usize>);

fn coset_rows(example: &str) -> Result<Vec<CosetRow>, String> {
    let (v, code, _) = pomkit(&["cosets", example]);
    expect(code == 0, format!("{example}: exit code {code}"))?;
    Ok(v["cosets"]
        .as_sequence()
        .expect("coset table")
        .iter()
        .map(|r| (r["a"].as_u64().unwrap() as usize, ints(&r["left"]), ints(&r["right"])))
        .collect())
}

fn table(rows: &[(&[usize], &[usize])]) -> Vec<CosetRow> {
    rows.iter().enumerate().map(|(a, (l, r))| (a, l.to_vec(), r.to_vec())).collect()
}

const A: &[usize] = &[0, 1, 2, 3, 4];

fn criterion_2() -> Outcome {
    let ex2_2 = table(&[(A, A), (&[1, 4], &[1, 2, 3, 4]), (&[2, 4], &[2, 4]), (&[3, 4], &[3, 4]), (&[4], &[4])]);
    let ex2_3 = table(&[
        (A, A),
        (&[1, 2, 4], &[1, 4]),
        (&[1, 2, 4], &[2, 4]),
        (&[1, 2, 3, 4], &[1, 2, 3, 4]),
        (&[4], &[4]),
    ]);
    for (name, want) in [("ex2_2", ex2_2), ("ex2_3", ex2_3)] {
        let got = coset_rows(name)?;
        expect(got == want, format!("{name}: got {got:?}"))?;
    }
    Ok("10 rows match".into())
}

fn criterion_3() -> Outcome {
    let (v, code, _) = pomkit(&["classify", "ex2_3"]);
    expect(code == 0, format!("exit code {code}"))?;
    expect(!flag(&v, "cone_right_normal"), "cone_right_normal is not false")?;
    let a = at(&v, "witnesses.cone_right_normal.a").as_u64().unwrap() as usize;
    let element = at(&v, "witnesses.cone_right_normal.element").as_u64().unwrap() as usize;
    expect(a == 1 || a == 2, format!("witness a = {a}"))?;
    expect(flag(&v, "cone_left_normal"), "cone_left_normal is not true")?;
    expect(!flag(&v, "induced_right_compatible"), "induced_right is compatible")?;
    let lhs = at(&v, "witnesses.induced_right_compatible.lhs").as_u64().unwrap() as usize;
    let rhs = at(&v, "witnesses.induced_right_compatible.rhs").as_u64().unwrap() as usize;
    // a ≤_P b iff b ∈ A+a, read off the coset table
    let rows = coset_rows("ex2_3")?;
    let right = |x: usize| rows[x].2.clone();
    let left = |x: usize| rows[x].1.clone();
    expect(left(a).contains(&element) && !right(a).contains(&element), "normality witness is not a witness")?;
    expect(!right(lhs).contains(&rhs), format!("{rhs} ∈ A+{lhs}, so the compatibility witness is wrong"))?;
    Ok(format!("{element} ∈ {a}+A but {element} ∉ A+{a} = {:?}; {rhs} ∉ A+{lhs}", right(a)))
}

fn criterion_4() -> Outcome {
    let (v, code, _) = pomkit(&["classify", "ex2_4"]);
    expect(code == 0, format!("exit code {code}"))?;
    expect(flag(&v, "in_ordmon_star"), "in_ordmon_star is not true")?;
    let want: BTreeSet<_> = [(0, 1), (2, 4), (3, 4)].into();
    expect(edge_set(&v["induced_right"]) == want, format!("induced ≤_P is {:?}", edge_set(&v["induced_right"])))?;
    Ok("≤ = ≤_P = {0→1, 2→4, 3→4}".into())
}

fn criterion_5() -> Outcome {
    let (v, code, _) = pomkit(&["classify", "ex_comm3"]);
    expect(code == 0, format!("exit code {code}"))?;
    let order = edge_set(&v["order"]);
    let induced = edge_set(&v["induced_right"]);
    expect(induced.is_subset(&order) && induced != order, "≤_P is not strictly inside ≤")?;
    let beyond: Vec<_> = induced.iter().filter(|(a, _)| *a != 0).copied().collect();
    expect(beyond == [(2, 1)], format!("non-zero edges of ≤_P: {beyond:?}"))?;
    let (subs, _, _) = pomkit(&["enumerate", "submonoids", "ex_comm3"]);
    let subs = subs["submonoids"].as_sequence().expect("submonoid list").clone();
    for s in &subs {
        let list: Vec<String> = ints(s).iter().map(|i| i.to_string()).collect();
        let list = list.join(",");
        let (r, _, _) = pomkit(&["induced", "ex_comm3", "--side", "right", "--submonoid", &list]);
        let (l, _, _) = pomkit(&["induced", "ex_comm3", "--side", "left", "--submonoid", &list]);
        expect(edge_set(&r["induced"]) == edge_set(&l["induced"]), format!("S = {{{list}}}: sides differ"))?;
        expect(flag(&r, "compatible") && flag(&l, "compatible"), format!("S = {{{list}}}: not compatible"))?;
    }
    Ok(format!("{} submonoids checked", subs.len()))
}

// ---------------------------------------------------------------- oracles

fn op(m: &FiniteMonoid, a: usize, b: usize) -> usize {
    m.rows()[a][b]
}

/// `a ≤ b` iff `b = x + a` for some `x ∈ s` (or `b = a + x` on the left side).
fn induced_oracle(m: &FiniteMonoid, s: &[usize], right: bool) -> Vec<Vec<bool>> {
    let n = m.size();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| s.iter().any(|&x| b == if right { op(m, x, a) } else { op(m, a, x) }))
                .collect()
        })
        .collect()
}

fn compatible_oracle(m: &FiniteMonoid, le: &[Vec<bool>]) -> bool {
    let n = m.size();
    (0..n).all(|a| {
        (0..n).all(|b| {
            !le[a][b] || (0..n).all(|c| (0..n).all(|d| !le[c][d] || le[op(m, a, c)][op(m, b, d)]))
        })
    })
}

fn right_normal_oracle(m: &FiniteMonoid, s: &[usize]) -> bool {
    (0..m.size()).all(|a| s.iter().all(|&x| s.iter().any(|&y| op(m, a, x) == op(m, y, a))))
}

/// `a ≤_L b` iff `S+a ⊆ S+b`.
fn greens_l_oracle(m: &FiniteMonoid, s: &[usize]) -> Vec<Vec<bool>> {
    let coset = |a: usize| -> BTreeSet<usize> { s.iter().map(|&x| op(m, x, a)).collect() };
    let n = m.size();
    (0..n).map(|a| (0..n).map(|b| coset(a).is_subset(&coset(b))).collect()).collect()
}

fn transpose(r: &[Vec<bool>]) -> Vec<Vec<bool>> {
    (0..r.len()).map(|a| (0..r.len()).map(|b| r[b][a]).collect()).collect()
}

fn cone_of(order: &Preorder) -> Vec<usize> {
    (0..order.size()).filter(|&a| order.le(0, a)).collect()
}

fn is_submonoid_oracle(m: &FiniteMonoid, s: &[usize]) -> bool {
    s.contains(&m.identity()) && s.iter().all(|&a| s.iter().all(|&b| s.contains(&op(m, a, b))))
}

fn small_monoids(max: usize) -> Vec<FiniteMonoid> {
    (1..=max).flat_map(|n| enumerate_monoids(n).unwrap()).collect()
}

fn all_maps(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0..k.pow(n as u32))
        .map(|mut code| {
            (0..n)
                .map(|_| {
                    let d = code % k;
                    code /= k;
                    d
                })
                .collect()
        })
        .collect()
}

fn is_hom_oracle(f: &[usize], dom: &FiniteMonoid, cod: &FiniteMonoid) -> bool {
    f[dom.identity()] == cod.identity()
        && dom.elements().all(|a| dom.elements().all(|b| f[op(dom, a, b)] == op(cod, f[a], f[b])))
}

fn monotone_oracle(f: &[usize], dom: &Preorder, cod: &Preorder) -> bool {
    (0..dom.size()).all(|a| (0..dom.size()).all(|b| !dom.le(a, b) || cod.le(f[a], f[b])))
}

// ---------------------------------------------------------------- 6 and 7

fn criterion_6() -> Outcome {
    let start = Instant::now();
    // every size-4 monoid is included, which contains any fixed sample
    let ms = small_monoids(4);
    let checked: usize = ms
        .par_iter()
        .map(|m| -> Result<usize, String> {
            let mut count = 0;
            for order in enumerate_compatible_preorders(m).map_err(|e| e.to_string())? {
                let p = cone_of(&order);
                let le_p = induced_oracle(m, &p, true);
                let contained = (0..m.size()).all(|a| (0..m.size()).all(|b| !le_p[a][b] || order.le(a, b)));
                expect(contained, format!("≤_P ⊄ ≤ for {:?}, {:?}", m.rows(), order.strict_pairs()))?;
                let lib = PreorderedMonoid::new(m.clone(), order.clone()).unwrap();
                expect(
                    induced_right(m, lib.cone()).matrix() == le_p,
                    format!("library ≤_P disagrees on {:?}", m.rows()),
                )?;
                expect(
                    compatible_oracle(m, &le_p) == right_normal_oracle(m, &p),
                    format!("compatible ⇔ right normal fails for {:?}, P = {p:?}", m.rows()),
                )?;
                count += 1;
            }
            for s in enumerate_submonoids(m, SubmonoidFilter::None).map_err(|e| e.to_string())? {
                let members = s.members();
                let want_r = transpose(&greens_l_oracle(m, members));
                expect(
                    induced_oracle(m, members, true) == want_r && induced_right(m, &s).matrix() == want_r,
                    format!("≤_S ≠ opposite(ℒ) for {:?}, S = {members:?}", m.rows()),
                )?;
                expect(
                    induced_left(m, &s) == greens_r_preorder(m, &s).opposite()
                        && induced_right(m, &s) == greens_l_preorder(m, &s).opposite(),
                    format!("library Green's preorders disagree for {:?}", m.rows()),
                )?;
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    let took = start.elapsed();
    expect(took < Duration::from_secs(300), format!("took {took:?}"))?;
    Ok(format!("{} monoids, {checked} preordered monoids, {:.1} s", ms.len(), took.as_secs_f64()))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let ms = small_monoids(3);
    let pairs: Vec<(&FiniteMonoid, &FiniteMonoid)> = ms.iter().flat_map(|x| ms.iter().map(move |b| (x, b))).collect();
    let checked: usize = pairs
        .par_iter()
        .map(|&(x, b)| -> Result<usize, String> {
            let mut count = 0;
            let err = |e: pomkit::Error| e.to_string();
            for px in enumerate_submonoids(x, SubmonoidFilter::RightNormal).map_err(err)? {
                for pb in enumerate_submonoids(b, SubmonoidFilter::RightNormal).map_err(err)? {
                    for act in enumerate_actions(x, b, &px, &pb).map_err(err)? {
                        let cext = h_build(&act).map_err(|e| format!("H_build failed: {e}"))?;
                        let a = cext.ext().a();
                        let pa: Vec<usize> = fixed_point_set(&act).indices(b.size());
                        expect(cext.pa().members() == pa.as_slice(), "P_A is not P_ξ")?;
                        expect(is_submonoid_oracle(a, &pa), format!("P_ξ = {pa:?} is not a submonoid"))?;
                        expect(right_normal_oracle(a, &pa), format!("P_ξ = {pa:?} is not right normal"))?;
                        let gh = roundtrip_gh(&act).map_err(err)?;
                        expect(gh.holds(), format!("GH round trip: {gh:?}"))?;
                        let hg = roundtrip_hg(&cext);
                        expect(hg.holds(), format!("HG round trip: {hg:?}"))?;
                        let back = action_from_ext(&semidirect(act.phi())).map_err(err)?;
                        expect(&back == act.phi(), "action_from_ext ∘ semidirect is not the identity")?;
                        count += 1;
                    }
                }
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    let took = start.elapsed();
    expect(took < Duration::from_secs(600), format!("took {took:?}"))?;
    Ok(format!("{checked} actions, {:.1} s", took.as_secs_f64()))
}

// ---------------------------------------------------------------- 8

fn criterion_8() -> Outcome {
    let (v, code, _) = pomkit(&["demo", "zz", "--window", "10"]);
    expect(code == 0, format!("exit code {code}, failures {:?}", v["failures"]))?;
    expect(flag(&v, "holds"), "demo does not hold")?;
    expect(v["positive_pairs"].as_u64() == Some(121), "positive pairs ≠ 121")?;
    expect(v["negative_pairs"].as_u64() == Some(110), "negative pairs ≠ 110")?;
    for key in ["membership", "xi_agrees_with_g", "s1", "s2", "a1", "a2", "a3", "a4", "beta"] {
        expect(flag(&v, &format!("checks.{key}")), format!("{key} fails"))?;
    }
    // independent reading of the fixed-point set on the window
    let mut positives = 0;
    for u in -10i64..=10 {
        for w in 0i64..=10 {
            let member = pomkit::zz::in_fixed_points(&u.into(), &w.into());
            expect(member == (0 <= u && u <= w), format!("(u, v) = ({u}, {w})"))?;
            positives += usize::from(u >= 0);
        }
    }
    expect(positives == 121, "window bookkeeping")?;
    Ok("121 positive and 110 negative pairs; S1, S2, A1 to A4 hold".into())
}

// ---------------------------------------------------------------- 9

/// Number of monotone homs `g` on the fragment with `g([x]) = f(x)`,
/// counted by backtracking over words in index order; also returns the
/// last one found.
fn count_extensions(frag: &FreeFragment, target: &PreorderedMonoid, f: &[usize]) -> (usize, Vec<usize>) {
    fn go(
        i: usize,
        g: &mut Vec<usize>,
        frag: &FreeFragment,
        t: &PreorderedMonoid,
        f: &[usize],
        found: &mut (usize, Vec<usize>),
    ) {
        if i == frag.len() {
            found.0 += 1;
            found.1 = g.clone();
            return;
        }
        let w = frag.words()[i].letters().to_vec();
        for val in 0..t.size() {
            let ok_shape = match w.len() {
                0 => val == t.monoid().identity(),
                1 => val == f[w[0]],
                _ => true,
            };
            // every split w = u·v with u, v earlier
            let ok_hom = w.is_empty() || (0..=w.len()).all(|k| {
                let u = frag.index_of(&pomkit::Word(w[..k].to_vec())).unwrap();
                let v = frag.index_of(&pomkit::Word(w[k..].to_vec())).unwrap();
                if u == i || v == i {
                    // ε·w or w·ε: needs g(ε) + val = val
                    let e = if u == i { v } else { u };
                    return op(t.monoid(), g[e], val) == val;
                }
                op(t.monoid(), g[u], g[v]) == val
            });
            let ok_mono = (0..i).all(|j| {
                (!frag.le(j, i) || t.order().le(g[j], val)) && (!frag.le(i, j) || t.order().le(val, g[j]))
            });
            if ok_shape && ok_hom && ok_mono {
                g.push(val);
                go(i + 1, g, frag, t, f, found);
                g.pop();
            }
        }
    }
    let mut found = (0, Vec::new());
    go(0, &mut Vec::new(), frag, target, f, &mut found);
    found
}

fn criterion_9() -> Outcome {
    let targets: Vec<_> = builtin::registry_poms().into_iter().filter(|(_, p)| p.size() <= 5).collect();
    let mut posets = Vec::new();
    for n in 1..=3 {
        posets.extend(enumerate_preorders(n).unwrap().into_iter().filter(|r| r.is_antisymmetric()));
    }
    let mut checked = 0;
    for order in &posets {
        let base = PreorderedSet::new(order.clone());
        for depth in 0..=3 {
            let frag = FreeFragment::new(&base, depth).map_err(|e| e.to_string())?;
            for (name, t) in &targets {
                for f in all_maps(base.size(), t.size()) {
                    if !monotone_oracle(&f, order, t.order()) {
                        continue;
                    }
                    let ext = extend_on_fragment(&frag, t, &f).map_err(|e| format!("{name}: {e}"))?;
                    let (count, unique) = count_extensions(&frag, t, &f);
                    let ctx = || format!("{name}, poset {:?}, depth {depth}, f = {f:?}", order.strict_pairs());
                    expect(count == 1, format!("{} monotone extensions: {}", count, ctx()))?;
                    expect(unique == ext, format!("extension differs from the unique one: {}", ctx()))?;
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{} posets, {checked} (fragment, map) cases", posets.len()))
}

// ---------------------------------------------------------------- 10

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut poms: Vec<PreorderedMonoid> = Vec::new();
    for m in small_monoids(3) {
        for order in enumerate_compatible_preorders(&m).unwrap() {
            poms.push(PreorderedMonoid::new(m.clone(), order).unwrap());
        }
    }
    for (_, pm) in builtin::registry_poms() {
        if pm.size() <= 3 && !poms.contains(&pm) {
            poms.push(pm);
        }
    }
    // monotone homs between every ordered pair, by brute force over all maps
    let homs: Vec<Vec<Vec<Vec<usize>>>> = poms
        .par_iter()
        .map(|d| {
            poms.iter()
                .map(|c| {
                    all_maps(d.size(), c.size())
                        .into_iter()
                        .filter(|f| is_hom_oracle(f, d.monoid(), c.monoid()) && monotone_oracle(f, d.order(), c.order()))
                        .collect()
                })
                .collect()
        })
        .collect();
    let maps: Vec<Vec<Vec<Vec<usize>>>> = (0..=3).map(|n| (0..=3).map(|k| all_maps(n, k)).collect()).collect();
    let idx: Vec<(usize, usize)> = (0..poms.len()).flat_map(|a| (0..poms.len()).map(move |b| (a, b))).collect();
    let checked: usize = idx
        .par_iter()
        .map(|&(ai, bi)| -> Result<usize, String> {
            let (a, b) = (&poms[ai], &poms[bi]);
            let hs = &homs[ai][bi];
            let mut count = 0;
            for (i, f) in hs.iter().enumerate() {
                for g in &hs[i..] {
                    let fh = MonoidHom::new(a.monoid(), b.monoid(), f.clone()).unwrap();
                    let gh = MonoidHom::new(a.monoid(), b.monoid(), g.clone()).unwrap();
                    let (c, q) = coequalizer_ordmon(a, b, &fh, &gh).map_err(|e| e.to_string())?;
                    let q = q.map();
                    let ctx = || format!("A = {:?}, B = {:?}, f = {f:?}, g = {g:?}", a.monoid().rows(), b.monoid().rows());
                    expect(a.monoid().elements().all(|x| q[f[x]] == q[g[x]]), format!("q∘f ≠ q∘g: {}", ctx()))?;
                    expect(compatible_oracle(c.monoid(), &c.order().matrix()), format!("incompatible: {}", ctx()))?;
                    expect(is_hom_oracle(q, b.monoid(), c.monoid()), format!("q is not a hom: {}", ctx()))?;
                    expect(monotone_oracle(q, b.order(), c.order()), format!("q is not monotone: {}", ctx()))?;
                    for (di, d) in poms.iter().enumerate() {
                        let ts = &maps[c.size()][d.size()];
                        for h in &homs[bi][di] {
                            if a.monoid().elements().any(|x| h[f[x]] != h[g[x]]) {
                                continue;
                            }
                            let factors = ts
                                .iter()
                                .filter(|t| {
                                    b.monoid().elements().all(|y| t[q[y]] == h[y])
                                        && is_hom_oracle(t, c.monoid(), d.monoid())
                                        && monotone_oracle(t, c.order(), d.order())
                                })
                                .count();
                            expect(factors == 1, format!("{factors} factorizations of h = {h:?}: {}", ctx()))?;
                        }
                    }
                    count += 1;
                }
            }
            Ok(count)
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .sum();
    Ok(format!(
        "{} preordered monoids, {checked} parallel pairs, {:.1} s",
        poms.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("classify ex2_2", criterion_1),
        ("coset tables", criterion_2),
        ("classify ex2_3", criterion_3),
        ("classify ex2_4", criterion_4),
        ("classify ex_comm3", criterion_5),
        ("cone property suite", criterion_6),
        ("Schreier suite", criterion_7),
        ("demo zz --window 10", criterion_8),
        ("free monoid suite", criterion_9),
        ("coequalizer suite", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(note) => println!("PASS {:>2} {name}: {note}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
