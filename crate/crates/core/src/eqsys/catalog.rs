//! Named systems: one entry per displayed equation, plus the worked
//! free-product example and the idempotent-existence sentence.

use super::{parse, EqsysError, EquationSystem};

pub struct CatalogEntry {
    pub id: &'static str,
    pub text: &'static str,
    pub description: &'static str,
}

const REG3: &str = "forall a, b exists x, u, v : x in V(a) & u in V(a a) & v in V(b b)";

macro_rules! reg3 {
    ($extra:literal) => {
        concat!("forall a, b exists x, u, v : x in V(a) & u in V(a a) & v in V(b b) & ", $extra)
    };
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        id: "eq1.cr",
        text: "forall a exists x : a = a x a & a x = x a",
        description: "completely regular: an inverse commuting with a",
    },
    CatalogEntry { id: "eq2.reg", text: "forall a exists x : a = a x a", description: "regular semigroups" },
    CatalogEntry { id: "eq3.lg", text: "forall a, b exists x : a = a x b", description: "left groups" },
    CatalogEntry { id: "eq3.rg", text: "forall a, b exists x : a = b x a", description: "right groups" },
    CatalogEntry { id: "eq4.g", text: "forall a, b exists x : a = b x b", description: "groups" },
    CatalogEntry {
        id: "eq5.cr",
        text: "forall a exists x : a = a a x a a",
        description: "completely regular semigroups",
    },
    CatalogEntry {
        id: "eq6.cs",
        text: "forall a, b exists x : a = a b x b a",
        description: "completely simple semigroups",
    },
    CatalogEntry {
        id: "eq7.sg",
        text: "forall a, b exists x, y : a = a x a & a b = b y a",
        description: "semilattices of groups (regularity plus ab = bya)",
    },
    CatalogEntry { id: "eq8.reg3", text: REG3, description: "regularity with inverses of a, a², b²" },
    CatalogEntry {
        id: "eq9.inv",
        text: reg3!("a u a b v b = b v b a u a"),
        description: "inverse semigroups",
    },
    CatalogEntry {
        id: "eq10.ri",
        text: reg3!("a u a b v b a u a = b v b a u a"),
        description: "right inverse semigroups",
    },
    CatalogEntry { id: "eq11.o", text: reg3!("a u a b v b in E"), description: "orthodox semigroups" },
    CatalogEntry {
        id: "eq12.cn",
        text: reg3!("a u a b v b a u a in E"),
        description: "conventional semigroups",
    },
    CatalogEntry { id: "eq13.es", text: reg3!("a u a b v b in G"), description: "idempotent-solid semigroups" },
    CatalogEntry { id: "eq14.monoid", text: "exists x forall a : a x = a & x a = a", description: "monoids" },
    CatalogEntry {
        id: "eq15.B",
        text: "exists x forall a : a = a x a",
        description: "class B: a universal pre-inverse",
    },
    CatalogEntry {
        id: "eq16.V",
        text: "exists x forall a : x in V(a)",
        description: "class V: a universal inverse",
    },
    CatalogEntry {
        id: "eq17.rsub",
        text: "forall a exists x : a = a a x",
        description: "every R-class is a subsemigroup",
    },
    CatalogEntry {
        id: "eq19.regrsub",
        text: "forall a exists x : a = a a x a",
        description: "regular with R-classes subsemigroups",
    },
    CatalogEntry { id: "def2.9.cr", text: "forall a exists x : a = a a x a", description: "right regular" },
    CatalogEntry { id: "def2.9.cl", text: "forall a exists x : a = a x a a", description: "left regular" },
    CatalogEntry {
        id: "prop2.13.ii",
        text: "forall a, b exists x : a = a b x a",
        description: "completely simple, second basis",
    },
    CatalogEntry {
        id: "prop2.13.iii",
        text: "forall a, b exists x : a = a x b a",
        description: "completely simple, third basis",
    },
    CatalogEntry {
        id: "eq22.alt",
        text: "forall a exists x forall b : a x b = a b x",
        description: "three-block alternation",
    },
    CatalogEntry {
        id: "bisimple.rxlb",
        text: "forall a, b exists x, z : a = a z a & a rR x & x rL b",
        description: "regular bisimple semigroups",
    },
    CatalogEntry {
        id: "sec3.2.eps",
        text: "forall a1 exists x1 forall a2 exists x2, x3 : a1 a2 x1 x2 x3 a1 = a1 x2 a1 a2 x3 x1 & a1 x3 a1 = a1 x3 x3 a1",
        description: "worked free-product example",
    },
    CatalogEntry {
        id: "sec3.2.epsc",
        text: "exists xs1, xs2 : xs1 = xs1 & xs1 xs2 = xs2 xs1 & xs2 = xs2 xs2",
        description: "run system extracted from the worked example",
    },
    CatalogEntry { id: "exist.idem", text: "exists x : x = x x", description: "contains an idempotent" },
];

pub fn catalog_ids() -> impl Iterator<Item = &'static str> {
    ENTRIES.iter().map(|e| e.id)
}

pub fn catalog_entry(id: &str) -> Result<&'static CatalogEntry, EqsysError> {
    ENTRIES.iter().find(|e| e.id == id).ok_or_else(|| EqsysError::UnknownId(id.to_owned()))
}

/// The parsed, desugared system for a catalog id.
pub fn catalog(id: &str) -> Result<EquationSystem, EqsysError> {
    let entry = catalog_entry(id)?;
    Ok(parse(entry.text).expect("catalog entries parse"))
}
