use std::fmt;
use std::io::Read;
use std::path::Path;

use pomkit::builtin;
use pomkit::format::{parse, Block, BlockData, Document};
use pomkit::{FiniteMonoid, PreorderedMonoid, Submonoid};

/// Anything that ends the run with exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<pomkit::Error> for CliError {
    fn from(e: pomkit::Error) -> Self {
        CliError(e.to_string())
    }
}

pub fn fail<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError(msg.into()))
}

pub fn read_source(file: &str) -> Result<String, CliError> {
    if file == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError(format!("standard input: {e}")))?;
        return Ok(s);
    }
    if Path::new(file).exists() {
        return std::fs::read_to_string(file).map_err(|e| CliError(format!("{file}: {e}")));
    }
    match builtin::source(file) {
        Some(s) => Ok(s.to_owned()),
        None => fail(format!("{file}: no such file or bundled example")),
    }
}

pub fn load(file: &str) -> Result<Document, CliError> {
    parse(&read_source(file)?).map_err(|e| CliError(format!("{file}: {e}")))
}

/// The named block, or the only block of the first kind that has any.
pub fn pick<'a>(doc: &'a Document, name: Option<&str>, kinds: &[&str]) -> Result<&'a Block, CliError> {
    let wanted = kinds.join(" or ");
    if let Some(name) = name {
        let Some(block) = doc.get(name) else {
            return fail(format!("no block named `{name}`"));
        };
        if !kinds.contains(&block.data.kind()) {
            return fail(format!("`{name}` is a {}, expected a {wanted}", block.data.kind()));
        }
        return Ok(block);
    }
    for kind in kinds {
        let names = doc.names_of_kind(kind);
        match names.as_slice() {
            [] => continue,
            [one] => return Ok(doc.get(one).expect("listed")),
            many => return fail(format!("several {kind} blocks ({}); pass --object", many.join(", "))),
        }
    }
    fail(format!("the file has no {wanted} block"))
}

pub fn monoid_of(block: &Block) -> &FiniteMonoid {
    match &block.data {
        BlockData::Monoid(m) => m,
        BlockData::Pom { pom, .. } => pom.monoid(),
        _ => unreachable!("picked as a monoid or pom"),
    }
}

pub fn pom_of(block: &Block) -> &PreorderedMonoid {
    match &block.data {
        BlockData::Pom { pom, .. } => pom,
        _ => unreachable!("picked as a pom"),
    }
}

pub fn elements(list: &str) -> Result<Vec<usize>, CliError> {
    list.trim()
        .trim_start_matches('{')
        .trim_end_matches('}')
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError(format!("`{t}` is not an element index"))))
        .collect()
}

pub fn submonoid(m: &FiniteMonoid, list: &str) -> Result<Submonoid, CliError> {
    Submonoid::new(m, elements(list)?).map_err(|e| CliError(format!("--submonoid {list}: {e}")))
}
