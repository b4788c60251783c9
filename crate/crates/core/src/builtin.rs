//! Bundled example files.

use crate::format::{parse, BlockData, Document};
use crate::monoid::FiniteMonoid;
use crate::pom::PreorderedMonoid;

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
}

pub const EXAMPLES: &[Example] = &[
    Example {
        name: "ex2_2",
        summary: "five-element monoid, cone is everything, order strictly larger than the induced one",
        source: include_str!("../data/ex2_2.pom"),
    },
    Example {
        name: "ex2_3",
        summary: "five-element monoid whose cone is not right normal",
        source: include_str!("../data/ex2_3.pom"),
    },
    Example {
        name: "ex2_4",
        summary: "the monoid of ex2_2 with cone {0, 1}, determined by its cone",
        source: include_str!("../data/ex2_4.pom"),
    },
    Example {
        name: "ex_comm3",
        summary: "three-element commutative monoid with 2 <= 1 only in the induced order",
        source: include_str!("../data/ex_comm3.pom"),
    },
    Example {
        name: "ex4_4",
        summary: "integer split extension with non-trivial xi (run `demo zz`)",
        source: include_str!("../data/ex4_4.pom"),
    },
];

pub fn source(name: &str) -> Option<&'static str> {
    EXAMPLES.iter().find(|e| e.name == name).map(|e| e.source)
}

/// Every bundled file parsed and concatenated in registry order.
pub fn builtin_document() -> Document {
    let mut doc = Document::new();
    for ex in EXAMPLES {
        for block in parse(ex.source).expect("bundled examples parse").blocks {
            assert!(doc.push(block.name, block.data), "bundled block names are unique");
        }
    }
    doc
}

fn bundled_pom(name: &str) -> PreorderedMonoid {
    let doc = parse(source(name).expect("registered")).expect("bundled examples parse");
    match doc.get(name).map(|b| &b.data) {
        Some(BlockData::Pom { pom, .. }) => pom.clone(),
        _ => panic!("bundled file {name} has no pom named {name}"),
    }
}

pub fn ex2_2() -> PreorderedMonoid {
    bundled_pom("ex2_2")
}

pub fn ex2_3() -> PreorderedMonoid {
    bundled_pom("ex2_3")
}

pub fn ex2_4() -> PreorderedMonoid {
    bundled_pom("ex2_4")
}

pub fn ex_comm3() -> PreorderedMonoid {
    bundled_pom("ex_comm3")
}

pub fn ex2_2_monoid() -> FiniteMonoid {
    ex2_2().monoid().clone()
}

pub fn ex_comm3_monoid() -> FiniteMonoid {
    ex_comm3().monoid().clone()
}

/// The preordered monoids of the registry.
pub fn registry_poms() -> Vec<(&'static str, PreorderedMonoid)> {
    vec![("ex2_2", ex2_2()), ("ex2_3", ex2_3()), ("ex2_4", ex2_4()), ("ex_comm3", ex_comm3())]
}
