use pomkit::actions::{
    fixed_point_set, g_extract, h_build, roundtrip_gh, roundtrip_hg, validate_action, ConedSplitExtension,
};
use pomkit::builtin::{self, EXAMPLES};
use pomkit::constructions::{check_monotone_hom, coequalizer_ordmon, extend_on_fragment, lift_discrete, FreeFragment};
use pomkit::enumeration::{
    enumerate_actions, enumerate_compatible_preorders, enumerate_homs, enumerate_monoids, enumerate_preorders,
    enumerate_submonoids, SubmonoidFilter,
};
use pomkit::format::{serialize_with_header, BlockData, Cones, Document};
use pomkit::pom::{coreflect as coreflect_pom, induced_left, induced_right, is_left_normal, is_right_normal};
use pomkit::relation::{compatibility_witness, is_compatible};
use pomkit::report::{
    action_report, classify_report, consequences_report, cosets_report, edges, gh_report, hg_report, normality_report,
    schreier_report, subset_value, zz_report, Report, Table, Value,
};
use pomkit::schreier::{action_from_ext, check_consequences, check_s1_s2, SplitExtension};
use pomkit::zz::zz_demo;
use pomkit::{Error, FiniteMonoid, MonoidHom, PreorderedAction, PreorderedMonoid, Submonoid};

use crate::load::{elements, fail, load, monoid_of, pick, pom_of, submonoid, CliError};
use crate::Side;

pub enum Output {
    /// A report and whether every checked property held.
    Report(Report, bool),
    /// Raw text, printed as is.
    Text(String),
}

type Out = Result<Output, CliError>;

fn info(r: Report) -> Out {
    Ok(Output::Report(r, true))
}

fn checked(r: Report, ok: bool) -> Out {
    Ok(Output::Report(r, ok))
}

fn rows(m: &FiniteMonoid) -> Value {
    Value::List(m.rows().into_iter().map(Value::Row).collect())
}

fn row_list(rows: Vec<Vec<usize>>) -> Value {
    Value::List(rows.into_iter().map(Value::Row).collect())
}

fn pairs(ps: &[(usize, usize)]) -> Value {
    Value::List(ps.iter().map(|&(u, v)| Value::Row(vec![u, v])).collect())
}

fn pair(names: [&str; 2], (a, b): (usize, usize)) -> Report {
    Report::new().with(names[0], a).with(names[1], b)
}

fn coned(ext: &SplitExtension, cones: &Cones) -> Result<ConedSplitExtension, Error> {
    ConedSplitExtension::new(ext.clone(), cones.px.clone(), cones.pa.clone(), cones.pb.clone())
}

pub fn validate(file: &str) -> Out {
    let doc = load(file)?;
    let mut table = Vec::new();
    let mut all = true;
    for block in &doc.blocks {
        let problem = match &block.data {
            BlockData::Extension { ext, cones: Some(c), .. } => coned(ext, c).err().map(|e| e.to_string()),
            BlockData::Extension { ext, cones: None, .. } => ext.clone().into_schreier().err().map(|e| e.to_string()),
            BlockData::Action { action, .. } => validate_action(action).first_failure(),
            _ => None,
        };
        all &= problem.is_none();
        table.push(vec![
            Value::from(block.name.as_str()),
            Value::from(block.data.kind()),
            Value::from(problem.is_none()),
            Value::from(problem),
        ]);
    }
    let columns = [("name", "name"), ("kind", "kind"), ("valid", "valid"), ("detail", "detail")]
        .map(|(k, h)| (k.to_owned(), h.to_owned()))
        .to_vec();
    let r = Report::new()
        .with("valid", all)
        .with("blocks", Value::Table(Table { columns, rows: table }));
    checked(r, all)
}

pub fn classify(file: &str, object: Option<&str>) -> Out {
    let doc = load(file)?;
    let pm = pom_of(pick(&doc, object, &["pom"])?);
    info(classify_report(pm.order(), pm.monoid(), &pomkit::pom::classify(pm)))
}

pub fn cone(file: &str, object: Option<&str>) -> Out {
    let doc = load(file)?;
    let pm = pom_of(pick(&doc, object, &["pom"])?);
    let (m, p) = (pm.monoid(), pm.cone());
    info(
        Report::new()
            .with("cone", subset_value(m, p.members().to_vec(), "A"))
            .with("cone_right_normal", is_right_normal(m, p))
            .with("cone_left_normal", is_left_normal(m, p))
            .with("induced_right", edges(&induced_right(m, p)))
            .with("induced_left", edges(&induced_left(m, p))),
    )
}

pub fn cosets(file: &str, object: Option<&str>, list: Option<&str>) -> Out {
    let doc = load(file)?;
    let m = monoid_of(pick(&doc, object, &["pom", "monoid"])?);
    let s = match list {
        Some(l) => submonoid(m, l)?,
        None => Submonoid::full(m),
    };
    info(cosets_report(m, &s))
}

pub fn induced(file: &str, object: Option<&str>, side: Side, list: Option<&str>) -> Out {
    let doc = load(file)?;
    let block = pick(&doc, object, &["pom", "monoid"])?;
    let m = monoid_of(block);
    let pom = match &block.data {
        BlockData::Pom { pom, .. } => Some(pom),
        _ => None,
    };
    let s = match (list, pom) {
        (Some(l), _) => submonoid(m, l)?,
        (None, Some(pm)) => pm.cone().clone(),
        (None, None) => Submonoid::full(m),
    };
    let (name, r) = match side {
        Side::Right => ("right", induced_right(m, &s)),
        Side::Left => ("left", induced_left(m, &s)),
    };
    let witness = compatibility_witness(m, &r)?;
    let mut report = Report::new()
        .with("submonoid", subset_value(m, s.members().to_vec(), "A"))
        .with("side", name)
        .with("induced", edges(&r))
        .with("compatible", witness.is_none())
        .with(
            "witness",
            witness.map(|(a, b, c, d)| {
                Report::new()
                    .with("a", a)
                    .with("b", b)
                    .with("c", c)
                    .with("d", d)
                    .with("lhs", m.op(a, c))
                    .with("rhs", m.op(b, d))
            }),
        );
    if let Some(pm) = pom {
        report.push("contained_in_order", r.is_contained_in(pm.order())?);
    }
    info(report)
}

pub fn normality(file: &str, object: Option<&str>, list: &str) -> Out {
    let doc = load(file)?;
    let m = monoid_of(pick(&doc, object, &["pom", "monoid"])?);
    info(normality_report(m, &submonoid(m, list)?))
}

pub fn coreflect(file: &str, object: Option<&str>) -> Out {
    let doc = load(file)?;
    let pm = pom_of(pick(&doc, object, &["pom"])?);
    match coreflect_pom(pm) {
        Ok((core, hom)) => {
            let dropped: Vec<(usize, usize)> =
                pm.order().strict_pairs().into_iter().filter(|&(a, b)| !core.order().le(a, b)).collect();
            info(
                Report::new()
                    .with("coreflects", true)
                    .with("cone", Value::Set(core.cone().members().to_vec()))
                    .with("order", edges(core.order()))
                    .with("dropped", Value::Edges(dropped))
                    .with("in_ordmon_star", pomkit::pom::classify(&core).in_ordmon_star)
                    .with("counit", Value::Row(hom.map().to_vec())),
            )
        }
        Err(Error::ConeNotRightNormal { a, element }) => checked(
            Report::new()
                .with("coreflects", false)
                .with("cone_right_normal", false)
                .with("witness", pair(["a", "element"], (a, element))),
            false,
        ),
        Err(e) => Err(e.into()),
    }
}

fn word_text(w: &[usize]) -> String {
    let letters: Vec<String> = w.iter().map(|l| l.to_string()).collect();
    format!("[{}]", letters.join(" "))
}

pub fn free(file: &str, object: Option<&str>, depth: usize, target: Option<(&str, &str)>) -> Out {
    let doc = load(file)?;
    let block = pick(&doc, object, &["poset"])?;
    let BlockData::Poset(base) = &block.data else { unreachable!("picked as a poset") };
    let frag = FreeFragment::new(base, depth)?;
    let images = match target {
        None => None,
        Some((t, map)) => {
            let Some(pm) = doc.pom(t) else {
                return fail(format!("no pom named `{t}`"));
            };
            Some(match extend_on_fragment(&frag, pm, &elements(map)?) {
                Ok(v) => v,
                Err(Error::NotMonotone(a, b)) => {
                    let r = Report::new().with("map_monotone", false).with("witness", pair(["a", "b"], (a, b)));
                    return checked(r, false);
                }
                Err(e) => return Err(e.into()),
            })
        }
    };
    let mut columns = vec![("index".to_owned(), "index".to_owned()), ("word".to_owned(), "word".to_owned())];
    if images.is_some() {
        columns.push(("image".into(), "image".into()));
    }
    let table = frag
        .words()
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let mut row = vec![Value::from(i), Value::Text(word_text(w.letters()))];
            if let Some(img) = &images {
                row.push(Value::from(img[i]));
            }
            row
        })
        .collect();
    let units: Vec<usize> = (0..base.size()).filter_map(|x| frag.unit(x)).collect();
    let mut r = Report::new()
        .with("generators", base.size())
        .with("depth", depth)
        .with("word_count", frag.len())
        .with("words", Value::Table(Table { columns, rows: table }))
        .with("units", Value::Row(units))
        .with("order", frag.order().ok().map(|o| edges(&o)));
    if images.is_some() {
        r.push("map_monotone", true);
    }
    info(r)
}

fn hom_block<'a>(doc: &'a Document, name: &str) -> Result<(&'a str, &'a str, &'a MonoidHom), CliError> {
    match doc.get(name).map(|b| &b.data) {
        Some(BlockData::Hom { from, to, hom }) => Ok((from, to, hom)),
        Some(other) => fail(format!("`{name}` is a {}, expected a hom", other.kind())),
        None => fail(format!("no block named `{name}`")),
    }
}

fn pom_or_discrete(doc: &Document, name: &str) -> PreorderedMonoid {
    match doc.pom(name) {
        Some(pm) => pm.clone(),
        None => lift_discrete(doc.monoid(name).expect("hom endpoints resolve")),
    }
}

pub fn coeq(file: &str, f: &str, g: &str) -> Out {
    let doc = load(file)?;
    let (f_from, f_to, fh) = hom_block(&doc, f)?;
    let (g_from, g_to, gh) = hom_block(&doc, g)?;
    if (f_from, f_to) != (g_from, g_to) {
        return fail(format!("`{f}` goes {f_from} -> {f_to} but `{g}` goes {g_from} -> {g_to}"));
    }
    let dom = pom_or_discrete(&doc, f_from);
    let cod = pom_or_discrete(&doc, f_to);
    for (name, h) in [(f, fh), (g, gh)] {
        if let Err(Error::NotMonotone(a, b)) = check_monotone_hom(h, &dom, &cod) {
            let r = Report::new()
                .with("monotone", false)
                .with("hom", name)
                .with("witness", pair(["a", "b"], (a, b)));
            return checked(r, false);
        }
    }
    let (c, q) = coequalizer_ordmon(&dom, &cod, fh, gh)?;
    let equalizes = (0..dom.size()).all(|a| q.apply(fh.apply(a)) == q.apply(gh.apply(a)));
    let compatible = is_compatible(c.monoid(), c.order())?;
    let r = Report::new()
        .with("size", c.size())
        .with("identity", c.monoid().identity())
        .with("table", rows(c.monoid()))
        .with("order", edges(c.order()))
        .with("cone", Value::Set(c.cone().members().to_vec()))
        .with("quotient", Value::Row(q.map().to_vec()))
        .with("equalizes", equalizes)
        .with("compatible", compatible);
    checked(r, equalizes && compatible)
}

struct ExtBlock<'a> {
    name: &'a str,
    ext: &'a SplitExtension,
    cones: Option<&'a Cones>,
    x: &'a str,
    b: &'a str,
}

fn extension_block<'a>(doc: &'a Document, object: Option<&str>) -> Result<ExtBlock<'a>, CliError> {
    let block = pick(doc, object, &["extension"])?;
    match &block.data {
        BlockData::Extension { ext, cones, x, b, .. } => {
            Ok(ExtBlock { name: &block.name, ext, cones: cones.as_ref(), x, b })
        }
        _ => unreachable!("picked as an extension"),
    }
}

pub fn schreier_check(file: &str, object: Option<&str>) -> Out {
    let doc = load(file)?;
    let ExtBlock { ext, cones, .. } = extension_block(&doc, object)?;
    let ext = match ext.clone().into_schreier() {
        Ok(e) => e,
        Err(e) => {
            let r = Report::new().with("schreier", false).with("reason", e.to_string());
            return checked(r, false);
        }
    };
    let s = check_s1_s2(&ext)?;
    let c = check_consequences(&ext)?;
    let mut r = schreier_report(&s, ext.q());
    r.push("action", row_list(action_from_ext(&ext)?.rows()));
    r.push("consequences", consequences_report(&c));
    let mut ok = s.holds() && c.holds();
    if let Some(cones) = cones {
        let problem = coned(&ext, cones).err().map(|e| e.to_string());
        ok &= problem.is_none();
        r.push("cones_valid", problem.is_none());
        r.push("cones_detail", problem);
    }
    checked(r, ok)
}

fn emit(doc: &Document, header: &[&str], target: Option<&str>, r: &mut Report) -> Result<Option<String>, CliError> {
    let text = serialize_with_header(doc, header);
    match target {
        None => Ok(None),
        Some("-") => Ok(Some(text)),
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError(format!("{path}: {e}")))?;
            r.push("written", path);
            Ok(None)
        }
    }
}

fn action_summary(act: &PreorderedAction) -> Report {
    let v = validate_action(act);
    Report::new()
        .with("phi", row_list(act.phi().rows()))
        .with("px", Value::Set(act.px().members().to_vec()))
        .with("pb", Value::Set(act.pb().members().to_vec()))
        .with("xi", row_list(act.xi_rows()))
        .with("fixed_points", pairs(&fixed_point_set(act).pairs))
        .with("axioms", action_report(&v))
}

pub fn schreier_extract(file: &str, object: Option<&str>, target: Option<&str>) -> Out {
    let doc = load(file)?;
    let ExtBlock { name, ext, cones, x: xn, b: bn } = extension_block(&doc, object)?;
    let Some(cones) = cones else {
        return fail(format!("extension `{name}` has no cones"));
    };
    let cext = match coned(ext, cones) {
        Ok(c) => c,
        Err(e) => return checked(Report::new().with("cones_valid", false).with("reason", e.to_string()), false),
    };
    let act = g_extract(&cext);
    let ok = validate_action(&act).holds();
    let mut out = Document::new();
    out.push(xn, BlockData::Monoid(act.x().clone()));
    out.push(bn, BlockData::Monoid(act.b().clone()));
    out.push(
        format!("{name}_action"),
        BlockData::Action { x: xn.to_owned(), b: bn.to_owned(), action: act.clone() },
    );
    let mut r = action_summary(&act);
    let header = format!("preordered action extracted from extension {name}");
    match emit(&out, &[&header], target, &mut r)? {
        Some(text) => Ok(Output::Text(text)),
        None => checked(r, ok),
    }
}

pub fn schreier_build(file: &str, object: Option<&str>, target: Option<&str>) -> Out {
    let doc = load(file)?;
    let block = pick(&doc, object, &["action"])?;
    let BlockData::Action { x: xn, b: bn, action } = &block.data else { unreachable!("picked as an action") };
    let name = &block.name;
    let cext = match h_build(action) {
        Ok(c) => c,
        Err(e) => {
            let r = Report::new().with("built", false).with("reason", e.to_string());
            return checked(r, false);
        }
    };
    let ext = cext.ext();
    let hg = roundtrip_hg(&cext);
    let [an, kn, pn, sn, en] = ["semidirect", "k", "p", "s", "ext"].map(|s| format!("{name}_{s}"));
    let mut out = Document::new();
    out.push(xn, BlockData::Monoid(ext.x().clone()));
    out.push(bn, BlockData::Monoid(ext.b().clone()));
    out.push(&an, BlockData::Monoid(ext.a().clone()));
    out.push(&kn, BlockData::Hom { from: xn.clone(), to: an.clone(), hom: ext.k().clone() });
    out.push(&pn, BlockData::Hom { from: an.clone(), to: bn.clone(), hom: ext.p().clone() });
    out.push(&sn, BlockData::Hom { from: bn.clone(), to: an.clone(), hom: ext.s().clone() });
    out.push(
        &en,
        BlockData::Extension {
            x: xn.clone(),
            a: an.clone(),
            b: bn.clone(),
            k: kn,
            p: pn,
            s: sn,
            ext: ext.clone(),
            cones: Some(Cones { px: cext.px().clone(), pa: cext.pa().clone(), pb: cext.pb().clone() }),
        },
    );
    let mut r = Report::new()
        .with("built", true)
        .with("size", ext.a().size())
        .with("table", rows(ext.a()))
        .with("cone", Value::Set(cext.pa().members().to_vec()))
        .with("retraction", Value::Row(cext.q().to_vec()))
        .with("roundtrip_hg", hg_report(&hg));
    let header = [
        format!("semidirect product {an} of {xn} by {bn} under action {name}"),
        format!("pair (x, b) has index = x·|B| + b, |B| = {}", ext.b().size()),
    ];
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    match emit(&out, &header, target, &mut r)? {
        Some(text) => Ok(Output::Text(text)),
        None => checked(r, hg.holds()),
    }
}

pub fn schreier_roundtrip(file: &str, object: Option<&str>) -> Out {
    let doc = load(file)?;
    let block = pick(&doc, object, &["action", "extension"])?;
    let (start, act, cext) = match &block.data {
        BlockData::Action { action, .. } => match h_build(action) {
            Ok(c) => ("action", action.clone(), c),
            Err(e) => {
                let r = Report::new().with("start", "action").with("holds", false).with("reason", e.to_string());
                return checked(r, false);
            }
        },
        BlockData::Extension { ext, cones, .. } => {
            let Some(cones) = cones else {
                return fail(format!("extension `{}` has no cones", block.name));
            };
            match coned(ext, cones) {
                Ok(c) => ("extension", g_extract(&c), c),
                Err(e) => {
                    let r = Report::new().with("start", "extension").with("holds", false).with("reason", e.to_string());
                    return checked(r, false);
                }
            }
        }
        _ => unreachable!("picked as an action or extension"),
    };
    let gh = roundtrip_gh(&act)?;
    let hg = roundtrip_hg(&cext);
    let ok = gh.holds() && hg.holds();
    let r = Report::new()
        .with("start", start)
        .with("holds", ok)
        .with("roundtrip_gh", gh_report(&gh))
        .with("roundtrip_hg", hg_report(&hg));
    checked(r, ok)
}

pub fn demo_zz(window: u32) -> Output {
    let z = zz_demo(window);
    Output::Report(zz_report(&z), z.holds())
}

fn listing(key: &str, items: Vec<Value>, count_only: bool) -> Out {
    let mut r = Report::new().with("count", items.len());
    if !count_only {
        r.push(key, Value::List(items));
    }
    info(r)
}

pub fn enum_monoids(size: usize, count: bool) -> Out {
    let ms = enumerate_monoids(size)?;
    listing("monoids", ms.iter().map(rows).collect(), count)
}

pub fn enum_preorders(file: Option<&str>, object: Option<&str>, size: Option<usize>, count: bool) -> Out {
    let list = match (file, size) {
        (Some(f), _) => {
            let doc = load(f)?;
            enumerate_compatible_preorders(monoid_of(pick(&doc, object, &["monoid", "pom"])?))?
        }
        (None, Some(n)) => enumerate_preorders(n)?,
        (None, None) => return fail("give FILE or --size"),
    };
    listing("preorders", list.iter().map(edges).collect(), count)
}

pub fn enum_submonoids(file: &str, object: Option<&str>, filter: &str, count: bool) -> Out {
    let filter: SubmonoidFilter = filter.parse().map_err(CliError)?;
    let doc = load(file)?;
    let m = monoid_of(pick(&doc, object, &["monoid", "pom"])?);
    let subs = enumerate_submonoids(m, filter)?;
    listing("submonoids", subs.iter().map(|s| Value::Set(s.members().to_vec())).collect(), count)
}

fn named_monoid<'a>(doc: &'a Document, name: &str) -> Result<&'a FiniteMonoid, CliError> {
    doc.monoid(name).ok_or_else(|| CliError(format!("no monoid or pom named `{name}`")))
}

pub fn enum_homs(file: &str, from: &str, to: &str, count: bool) -> Out {
    let doc = load(file)?;
    let homs = enumerate_homs(named_monoid(&doc, from)?, named_monoid(&doc, to)?)?;
    listing("homs", homs.iter().map(|h| Value::Row(h.map().to_vec())).collect(), count)
}

pub fn enum_actions(file: &str, x: &str, b: &str, px: Option<&str>, pb: Option<&str>, count: bool) -> Out {
    let doc = load(file)?;
    let (xm, bm) = (named_monoid(&doc, x)?, named_monoid(&doc, b)?);
    let cone = |m: &FiniteMonoid, list: Option<&str>| match list {
        Some(l) => submonoid(m, l),
        None => Ok(Submonoid::trivial(m)),
    };
    let acts = enumerate_actions(xm, bm, &cone(xm, px)?, &cone(bm, pb)?)?;
    let items = acts
        .iter()
        .map(|a| {
            Report::new()
                .with("phi", row_list(a.phi().rows()))
                .with("xi", row_list(a.xi_rows()))
                .with("fixed_points", pairs(&fixed_point_set(a).pairs))
                .into()
        })
        .collect();
    listing("actions", items, count)
}

pub fn examples_list() -> Output {
    let rows = EXAMPLES.iter().map(|e| vec![Value::from(e.name), Value::from(e.summary)]).collect();
    let columns = vec![("name".into(), "name".into()), ("summary".into(), "summary".into())];
    Output::Report(Report::new().with("examples", Value::Table(Table { columns, rows })), true)
}

pub fn examples_show(name: &str) -> Out {
    match builtin::source(name) {
        Some(s) => Ok(Output::Text(s.to_owned())),
        None => fail(format!("no bundled example named `{name}`")),
    }
}
