//! The plain-text block format.
//!
//! ```text
//! # comment
//! monoid M
//! size 2
//! identity 0
//! table
//! 0 1
//! 1 0
//! end
//!
//! pom P
//! use M
//! preorder edges      # or: preorder matrix, then n rows of 0/1
//! 0 1
//! end
//!
//! poset X
//! size 2
//! edges
//! 0 1
//! end
//!
//! hom f
//! from M to M
//! map
//! 0 1
//! end
//!
//! extension E
//! x X a A b B
//! k k p p s s
//! cones               # optional
//! px 0
//! pa 0 1
//! pb 0 1
//! end
//!
//! action T
//! x X b B
//! px 0
//! pb 0 1
//! phi                 # |B| rows, row b lists b·x
//! 0 1
//! 0 1
//! xi                  # |X| rows over the elements of pb, ascending
//! 0 0
//! 1 1
//! end
//! ```
//!
//! Homs may name `monoid` or `pom` blocks as their ends; the hom is then
//! between the underlying monoids.

use std::fmt::Write as _;

use crate::actions::PreorderedAction;
use crate::constructions::PreorderedSet;
use crate::error::Error;
use crate::monoid::{FiniteMonoid, MonoidHom, Submonoid};
use crate::pom::PreorderedMonoid;
use crate::relation::Preorder;
use crate::schreier::{ActionTable, SplitExtension};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: syntax error: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: unknown reference `{name}`")]
    UnknownReference { line: usize, name: String },
    #[error("line {line}: block `{block}` is invalid: {source}")]
    Validation { line: usize, block: String, source: Error },
}

impl FormatError {
    pub fn line(&self) -> usize {
        match self {
            FormatError::Syntax { line, .. }
            | FormatError::UnknownReference { line, .. }
            | FormatError::Validation { line, .. } => *line,
        }
    }
}

type Parsed<T> = std::result::Result<T, FormatError>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cones {
    pub px: Submonoid,
    pub pa: Submonoid,
    pub pb: Submonoid,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlockData {
    Monoid(FiniteMonoid),
    Pom {
        monoid: String,
        pom: PreorderedMonoid,
    },
    Poset(PreorderedSet),
    Hom {
        from: String,
        to: String,
        hom: MonoidHom,
    },
    Extension {
        x: String,
        a: String,
        b: String,
        k: String,
        p: String,
        s: String,
        ext: SplitExtension,
        cones: Option<Cones>,
    },
    Action {
        x: String,
        b: String,
        action: PreorderedAction,
    },
}

impl BlockData {
    pub fn kind(&self) -> &'static str {
        match self {
            BlockData::Monoid(_) => "monoid",
            BlockData::Pom { .. } => "pom",
            BlockData::Poset(_) => "poset",
            BlockData::Hom { .. } => "hom",
            BlockData::Extension { .. } => "extension",
            BlockData::Action { .. } => "action",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub data: BlockData,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Document {
    pub blocks: Vec<Block>,
}

impl Document {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// Appends a block. Names must be unique.
    pub fn push(&mut self, name: impl Into<String>, data: BlockData) -> bool {
        let name = name.into();
        if self.get(&name).is_some() {
            return false;
        }
        self.blocks.push(Block { name, data });
        true
    }

    /// The monoid of a `monoid` or `pom` block.
    pub fn monoid(&self, name: &str) -> Option<&FiniteMonoid> {
        match &self.get(name)?.data {
            BlockData::Monoid(m) => Some(m),
            BlockData::Pom { pom, .. } => Some(pom.monoid()),
            _ => None,
        }
    }

    pub fn pom(&self, name: &str) -> Option<&PreorderedMonoid> {
        match &self.get(name)?.data {
            BlockData::Pom { pom, .. } => Some(pom),
            _ => None,
        }
    }

    pub fn poset(&self, name: &str) -> Option<&PreorderedSet> {
        match &self.get(name)?.data {
            BlockData::Poset(p) => Some(p),
            _ => None,
        }
    }

    pub fn hom(&self, name: &str) -> Option<&MonoidHom> {
        match &self.get(name)?.data {
            BlockData::Hom { hom, .. } => Some(hom),
            _ => None,
        }
    }

    pub fn names_of_kind(&self, kind: &str) -> Vec<&str> {
        self.blocks
            .iter()
            .filter(|b| b.data.kind() == kind)
            .map(|b| b.name.as_str())
            .collect()
    }
}

struct Line {
    no: usize,
    toks: Vec<String>,
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

fn number(line: usize, tok: &str) -> Parsed<usize> {
    tok.parse().map_err(|_| syntax(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn numbers(line: &Line, toks: &[String]) -> Parsed<Vec<usize>> {
    toks.iter().map(|t| number(line.no, t)).collect()
}

fn valid_name(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
}

struct Cursor<'a> {
    lines: &'a [Line],
    pos: usize,
    end_line: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self, what: &str) -> Parsed<&'a Line> {
        let line = self
            .lines
            .get(self.pos)
            .ok_or_else(|| syntax(self.end_line, format!("expected {what} before `end`")))?;
        self.pos += 1;
        Ok(line)
    }

    fn peek(&self) -> Option<&'a Line> {
        self.lines.get(self.pos)
    }

    fn done(&self) -> bool {
        self.pos >= self.lines.len()
    }

    /// A line `keyword args...`; returns the arguments.
    fn keyword(&mut self, kw: &str) -> Parsed<(&'a Line, &'a [String])> {
        let line = self.next(&format!("`{kw}`"))?;
        if line.toks[0] != kw {
            return Err(syntax(line.no, format!("expected `{kw}`, found `{}`", line.toks[0])));
        }
        Ok((line, &line.toks[1..]))
    }

    fn rows(&mut self, count: usize, width: usize, what: &str) -> Parsed<Vec<Vec<usize>>> {
        (0..count)
            .map(|_| {
                let line = self.next(what)?;
                if line.toks.len() != width {
                    return Err(syntax(line.no, format!("{what} row needs {width} entries, found {}", line.toks.len())));
                }
                numbers(line, &line.toks)
            })
            .collect()
    }
}

fn one_arg(line: &Line, args: &[String]) -> Parsed<String> {
    match args {
        [a] => Ok(a.clone()),
        _ => Err(syntax(line.no, format!("`{}` takes exactly one argument", line.toks[0]))),
    }
}

/// `kw1 v1 kw2 v2 kw3 v3` on one line.
fn triple(line: &Line, kws: [&str; 3]) -> Parsed<[String; 3]> {
    let t = &line.toks;
    if t.len() != 6 || t[0] != kws[0] || t[2] != kws[1] || t[4] != kws[2] {
        return Err(syntax(line.no, format!("expected `{} _ {} _ {} _`", kws[0], kws[1], kws[2])));
    }
    Ok([t[1].clone(), t[3].clone(), t[5].clone()])
}

pub fn parse(text: &str) -> Parsed<Document> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<String> = content.split_whitespace().map(str::to_owned).collect();
        if !toks.is_empty() {
            lines.push(Line { no: i + 1, toks });
        }
    }

    let mut doc = Document::new();
    let mut i = 0;
    while i < lines.len() {
        let header = &lines[i];
        let [kind, name] = header.toks.as_slice() else {
            return Err(syntax(header.no, "expected a block header `<kind> <name>`"));
        };
        if !["monoid", "pom", "poset", "hom", "extension", "action"].contains(&kind.as_str()) {
            return Err(syntax(header.no, format!("unknown block kind `{kind}`")));
        }
        if !valid_name(name) {
            return Err(syntax(header.no, format!("invalid block name `{name}`")));
        }
        if doc.get(name).is_some() {
            return Err(syntax(header.no, format!("duplicate block name `{name}`")));
        }
        let start = i + 1;
        let mut j = start;
        while j < lines.len() && !(lines[j].toks.len() == 1 && lines[j].toks[0] == "end") {
            j += 1;
        }
        if j == lines.len() {
            return Err(syntax(header.no, format!("block `{name}` has no `end`")));
        }
        let mut cur = Cursor { lines: &lines[start..j], pos: 0, end_line: lines[j].no };
        let data = parse_block(&doc, kind, name, header.no, &mut cur)?;
        if let Some(extra) = cur.peek() {
            return Err(syntax(extra.no, format!("unexpected `{}` in block `{name}`", extra.toks[0])));
        }
        doc.push(name.clone(), data);
        i = j + 1;
    }
    Ok(doc)
}

fn parse_block(doc: &Document, kind: &str, name: &str, header: usize, cur: &mut Cursor) -> Parsed<BlockData> {
    let invalid = |line: usize| move |source: Error| FormatError::Validation { line, block: name.to_owned(), source };
    let monoid_ref = |line: &Line, m: &str| -> Parsed<FiniteMonoid> {
        doc.monoid(m)
            .cloned()
            .ok_or_else(|| FormatError::UnknownReference { line: line.no, name: m.to_owned() })
    };
    let subset = |line: &Line, args: &[String], m: &FiniteMonoid| -> Parsed<Submonoid> {
        Submonoid::new(m, numbers(line, args)?).map_err(invalid(line.no))
    };

    match kind {
        "monoid" => {
            let (l, a) = cur.keyword("size")?;
            let n = number(l.no, &one_arg(l, a)?)?;
            let (l, a) = cur.keyword("identity")?;
            let e = number(l.no, &one_arg(l, a)?)?;
            let (l, a) = cur.keyword("table")?;
            if !a.is_empty() {
                return Err(syntax(l.no, "`table` takes no arguments"));
            }
            let rows = cur.rows(n, n, "table")?;
            FiniteMonoid::new(rows, e).map(BlockData::Monoid).map_err(invalid(header))
        }
        "pom" => {
            let (l, a) = cur.keyword("use")?;
            let mname = one_arg(l, a)?;
            let m = match doc.get(&mname).map(|b| &b.data) {
                Some(BlockData::Monoid(m)) => m.clone(),
                _ => return Err(FormatError::UnknownReference { line: l.no, name: mname }),
            };
            let (l, a) = cur.keyword("preorder")?;
            let order = match one_arg(l, a)?.as_str() {
                "edges" => {
                    let mut edges = Vec::new();
                    while !cur.done() {
                        let e = cur.next("edge")?;
                        let pair = numbers(e, &e.toks)?;
                        let [x, y] = pair[..] else {
                            return Err(syntax(e.no, "an edge is `a b`"));
                        };
                        edges.push((x, y));
                    }
                    Preorder::closure_from_edges(m.size(), &edges).map_err(invalid(l.no))?
                }
                "matrix" => {
                    let rows = cur.rows(m.size(), m.size(), "matrix")?;
                    let mut matrix = Vec::with_capacity(rows.len());
                    for row in rows {
                        if row.iter().any(|&v| v > 1) {
                            return Err(syntax(l.no, "matrix entries must be 0 or 1"));
                        }
                        matrix.push(row.into_iter().map(|v| v == 1).collect());
                    }
                    Preorder::from_matrix(&matrix).map_err(invalid(l.no))?
                }
                other => return Err(syntax(l.no, format!("expected `edges` or `matrix`, found `{other}`"))),
            };
            let pom = PreorderedMonoid::new(m, order).map_err(invalid(header))?;
            Ok(BlockData::Pom { monoid: mname, pom })
        }
        "poset" => {
            let (l, a) = cur.keyword("size")?;
            let n = number(l.no, &one_arg(l, a)?)?;
            let mut edges = Vec::new();
            if !cur.done() {
                let (l, a) = cur.keyword("edges")?;
                if !a.is_empty() {
                    return Err(syntax(l.no, "`edges` takes no arguments"));
                }
                while !cur.done() {
                    let e = cur.next("edge")?;
                    let pair = numbers(e, &e.toks)?;
                    let [x, y] = pair[..] else {
                        return Err(syntax(e.no, "an edge is `a b`"));
                    };
                    edges.push((x, y));
                }
            }
            let order = Preorder::closure_from_edges(n, &edges).map_err(invalid(header))?;
            Ok(BlockData::Poset(PreorderedSet::new(order)))
        }
        "hom" => {
            let l = cur.next("`from _ to _`")?;
            let t = &l.toks;
            if t.len() != 4 || t[0] != "from" || t[2] != "to" {
                return Err(syntax(l.no, "expected `from <name> to <name>`"));
            }
            let (from, to) = (t[1].clone(), t[3].clone());
            let dom = monoid_ref(l, &from)?;
            let cod = monoid_ref(l, &to)?;
            let (l, a) = cur.keyword("map")?;
            if !a.is_empty() {
                return Err(syntax(l.no, "`map` takes no arguments"));
            }
            let map = cur.rows(1, dom.size(), "map")?.remove(0);
            let hom = MonoidHom::new(&dom, &cod, map).map_err(invalid(header))?;
            Ok(BlockData::Hom { from, to, hom })
        }
        "extension" => {
            let l = cur.next("`x _ a _ b _`")?;
            let [x, a, b] = triple(l, ["x", "a", "b"])?;
            for m in [&x, &a, &b] {
                monoid_ref(l, m)?;
            }
            let l = cur.next("`k _ p _ s _`")?;
            let [k, p, s] = triple(l, ["k", "p", "s"])?;
            let hom_ref = |h: &str| {
                doc.hom(h)
                    .cloned()
                    .ok_or_else(|| FormatError::UnknownReference { line: l.no, name: h.to_owned() })
            };
            let (kh, ph, sh) = (hom_ref(&k)?, hom_ref(&p)?, hom_ref(&s)?);
            let (xm, am, bm) = (monoid_ref(l, &x)?, monoid_ref(l, &a)?, monoid_ref(l, &b)?);
            let typed = kh.dom() == &xm && kh.cod() == &am && ph.dom() == &am && ph.cod() == &bm && sh.dom() == &bm && sh.cod() == &am;
            if !typed {
                return Err(invalid(l.no)(Error::TypeMismatch("k, p, s do not match x, a, b".into())));
            }
            let ext = SplitExtension::new(kh, ph, sh).map_err(invalid(header))?;
            let cones = if cur.done() {
                None
            } else {
                let (l, a) = cur.keyword("cones")?;
                if !a.is_empty() {
                    return Err(syntax(l.no, "`cones` takes no arguments"));
                }
                let (l, args) = cur.keyword("px")?;
                let px = subset(l, args, &xm)?;
                let (l, args) = cur.keyword("pa")?;
                let pa = subset(l, args, &am)?;
                let (l, args) = cur.keyword("pb")?;
                let pb = subset(l, args, &bm)?;
                Some(Cones { px, pa, pb })
            };
            Ok(BlockData::Extension { x, a, b, k, p, s, ext, cones })
        }
        "action" => {
            let l = cur.next("`x _ b _`")?;
            let t = &l.toks;
            if t.len() != 4 || t[0] != "x" || t[2] != "b" {
                return Err(syntax(l.no, "expected `x <name> b <name>`"));
            }
            let (x, b) = (t[1].clone(), t[3].clone());
            let (xm, bm) = (monoid_ref(l, &x)?, monoid_ref(l, &b)?);
            let (l, args) = cur.keyword("px")?;
            let px = subset(l, args, &xm)?;
            let (l, args) = cur.keyword("pb")?;
            let pb = subset(l, args, &bm)?;
            let (l, a) = cur.keyword("phi")?;
            if !a.is_empty() {
                return Err(syntax(l.no, "`phi` takes no arguments"));
            }
            let phi_rows = cur.rows(bm.size(), xm.size(), "phi")?;
            let phi = ActionTable::new(&xm, &bm, phi_rows).map_err(invalid(l.no))?;
            let (l, a) = cur.keyword("xi")?;
            if !a.is_empty() {
                return Err(syntax(l.no, "`xi` takes no arguments"));
            }
            let xi_rows = cur.rows(xm.size(), pb.len(), "xi")?;
            let action = PreorderedAction::new(phi, px, pb, xi_rows).map_err(invalid(l.no))?;
            Ok(BlockData::Action { x, b, action })
        }
        _ => unreachable!("kind checked by the caller"),
    }
}

fn row(out: &mut String, items: impl IntoIterator<Item = usize>) {
    let items: Vec<String> = items.into_iter().map(|i| i.to_string()).collect();
    out.push_str(&items.join(" "));
    out.push('\n');
}

fn keyed_row(out: &mut String, key: &str, items: &[usize]) {
    out.push_str(key);
    for i in items {
        write!(out, " {i}").unwrap();
    }
    out.push('\n');
}

/// Text that [`parse`] reads back to an equal document. Preorders are
/// written as their non-reflexive pairs.
pub fn serialize(doc: &Document) -> String {
    serialize_with_header(doc, &[])
}

/// [`serialize`] preceded by `# `-prefixed header lines.
pub fn serialize_with_header(doc: &Document, header: &[&str]) -> String {
    let mut out = String::new();
    for h in header {
        writeln!(out, "# {h}").unwrap();
    }
    for (i, block) in doc.blocks.iter().enumerate() {
        if i > 0 || !header.is_empty() {
            out.push('\n');
        }
        writeln!(out, "{} {}", block.data.kind(), block.name).unwrap();
        match &block.data {
            BlockData::Monoid(m) => {
                writeln!(out, "size {}\nidentity {}\ntable", m.size(), m.identity()).unwrap();
                for r in m.rows() {
                    row(&mut out, r);
                }
            }
            BlockData::Pom { monoid, pom } => {
                writeln!(out, "use {monoid}\npreorder edges").unwrap();
                for (a, b) in pom.order().strict_pairs() {
                    writeln!(out, "{a} {b}").unwrap();
                }
            }
            BlockData::Poset(p) => {
                writeln!(out, "size {}\nedges", p.size()).unwrap();
                for (a, b) in p.order().strict_pairs() {
                    writeln!(out, "{a} {b}").unwrap();
                }
            }
            BlockData::Hom { from, to, hom } => {
                writeln!(out, "from {from} to {to}\nmap").unwrap();
                row(&mut out, hom.map().iter().copied());
            }
            BlockData::Extension { x, a, b, k, p, s, cones, .. } => {
                writeln!(out, "x {x} a {a} b {b}\nk {k} p {p} s {s}").unwrap();
                if let Some(c) = cones {
                    out.push_str("cones\n");
                    keyed_row(&mut out, "px", c.px.members());
                    keyed_row(&mut out, "pa", c.pa.members());
                    keyed_row(&mut out, "pb", c.pb.members());
                }
            }
            BlockData::Action { x, b, action } => {
                writeln!(out, "x {x} b {b}").unwrap();
                keyed_row(&mut out, "px", action.px().members());
                keyed_row(&mut out, "pb", action.pb().members());
                out.push_str("phi\n");
                for r in action.phi().rows() {
                    row(&mut out, r);
                }
                out.push_str("xi\n");
                for r in action.xi_rows() {
                    row(&mut out, r);
                }
            }
        }
        out.push_str("end\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;

    #[test]
    fn empty_file() {
        assert_eq!(parse("").unwrap(), Document::new());
        assert_eq!(parse("# only a comment\n\n").unwrap(), Document::new());
    }

    #[test]
    fn bundled_ex2_2() {
        let doc = parse(builtin::source("ex2_2").unwrap()).unwrap();
        assert_eq!(doc.blocks.len(), 2);
        assert_eq!(doc.blocks[0].data.kind(), "monoid");
        assert_eq!(doc.blocks[1].data.kind(), "pom");
        assert_eq!(doc.monoid("ex2_2_monoid").unwrap().identity(), 0);
    }

    #[test]
    fn unknown_reference() {
        let err = parse("pom p\nuse nowhere\npreorder edges\nend\n").unwrap_err();
        assert_eq!(err, FormatError::UnknownReference { line: 2, name: "nowhere".into() });
    }

    #[test]
    fn syntax_errors_carry_lines() {
        assert_eq!(parse("monoid m\nsize 1\n").unwrap_err().line(), 1);
        assert_eq!(parse("monoid m\nsize x\nend").unwrap_err().line(), 2);
        assert_eq!(parse("\n\nwidget w\nend").unwrap_err().line(), 3);
        let dup = "monoid m\nsize 1\nidentity 0\ntable\n0\nend\nmonoid m\nsize 1\nidentity 0\ntable\n0\nend\n";
        assert_eq!(parse(dup).unwrap_err().line(), 7);
    }

    #[test]
    fn validation_errors() {
        let bad = "monoid m\nsize 3\nidentity 0\ntable\n0 1 2\n1 1 2\n2 1 1\nend\n";
        match parse(bad).unwrap_err() {
            FormatError::Validation { block, source, .. } => {
                assert_eq!(block, "m");
                assert_eq!(source, Error::AssociativityViolation(2, 1, 2));
            }
            e => panic!("{e}"),
        }
        let unclosed = "monoid m\nsize 2\nidentity 0\ntable\n0 1\n1 1\nend\npom p\nuse m\npreorder matrix\n1 1\n0 0\nend\n";
        assert!(matches!(parse(unclosed), Err(FormatError::Validation { .. })));
    }

    #[test]
    fn builtin_round_trip() {
        let doc = builtin::builtin_document();
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    }

    #[test]
    fn extension_and_action_blocks() {
        let text = "\
monoid X
size 2
identity 0
table
0 1
1 0
end
monoid B
size 1
identity 0
table
0
end
monoid A
size 2
identity 0
table
0 1
1 0
end
hom k
from X to A
map
0 1
end
hom p
from A to B
map
0 0
end
hom s
from B to A
map
0
end
extension E
x X a A b B
k k p p s s
cones
px 0
pa 0
pb 0
end
action T
x X b B
px 0
pb 0
phi
0 1
xi
0
1
end
";
        let doc = parse(text).unwrap();
        assert!(matches!(doc.get("E").unwrap().data, BlockData::Extension { cones: Some(_), .. }));
        assert!(matches!(doc.get("T").unwrap().data, BlockData::Action { .. }));
        assert_eq!(parse(&serialize(&doc)).unwrap(), doc);
    }
}
