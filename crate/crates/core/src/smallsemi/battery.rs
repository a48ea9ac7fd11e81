//! Verification batteries: the evaluator against the structural detectors,
//! swept over whole corpora.

use rayon::prelude::*;
use serde::Serialize;

use super::{CorpusSource, SmallsemiError};
use crate::algebra::{
    a21, adjoin_identity, adjoin_zero, congruences, direct_product, to_sgp, Element, FiniteSemigroup, GreenData,
    Relation, DEFAULT_CONGRUENCE_BOUND,
};
use crate::classes::{classify_with, intersection_of_all_inverses, prop24_profile, ClassReport};
use crate::eqsys::{catalog, parse, satisfies, Binding, EquationSystem, CATALOG};

/// A replayable disagreement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub detail: String,
    /// The semigroup on which the check failed, in `.sgp` form.
    pub sgp: String,
    /// The system that was evaluated, if any.
    pub eqs: Option<String>,
    /// Failing assignment of the outer universal block, if any.
    pub assignment: Option<Vec<Binding>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BatteryReport {
    pub battery: String,
    pub description: String,
    pub max_order: usize,
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

pub struct BatteryInfo {
    pub id: &'static str,
    pub description: &'static str,
}

pub const BATTERIES: &[BatteryInfo] = &[
    BatteryInfo {
        id: "prop2.1",
        description: "regular, left/right group, group, completely regular, completely simple",
    },
    BatteryInfo { id: "eq7.sg", description: "semilattices of groups" },
    BatteryInfo { id: "prop2.2", description: "inverse, right inverse, orthodox, conventional, idempotent-solid" },
    BatteryInfo { id: "eq14", description: "monoids" },
    BatteryInfo { id: "lemma2.3", description: "three formulations of class B agree" },
    BatteryInfo { id: "prop2.4", description: "structure of class B members at every witness" },
    BatteryInfo { id: "remark2.5", description: "A21 has the class B structure but is not in class B" },
    BatteryInfo { id: "prop2.6", description: "universal inverses exist only in rectangular bands" },
    BatteryInfo { id: "prop2.7", description: "a = a a x, a R a², R-classes closed" },
    BatteryInfo { id: "cor2.8", description: "a = a a x a vs regular with closed R-classes" },
    BatteryInfo { id: "thm2.10", description: "right regular = left regular = completely regular" },
    BatteryInfo { id: "cor2.11", description: "regular: closed R-classes, closed L-classes, completely regular agree" },
    BatteryInfo { id: "lemma2.12", description: "inverse: a R a² for all a iff Clifford" },
    BatteryInfo { id: "prop2.13", description: "three bases for completely simple semigroups" },
    BatteryInfo { id: "bisimple", description: "regular bisimple semigroups" },
    BatteryInfo { id: "closure.P", description: "catalog systems are preserved by direct products" },
    BatteryInfo { id: "closure.H", description: "catalog systems are preserved by quotients" },
    BatteryInfo { id: "closure.exist-up", description: "existential systems are preserved by containing semigroups" },
    BatteryInfo {
        id: "green", description: "H = R ∧ L, R∘L = L∘R = D = J, J-universal implies completely regular"
    },
    BatteryInfo { id: "eq22.comm", description: "commutative semigroups satisfy a x b = a b x" },
];

/// Orders of the factors in `closure.P` and of the right factor in
/// `closure.exist-up`.
pub const CLOSURE_FACTOR_ORDER: usize = 3;

/// Extra purely existential systems for `closure.exist-up`.
pub const EXISTENTIAL_PROBES: &[&str] = &[
    "exists x, y : x y = y x",
    "exists x, y : x y = y & y x = x",
    "exists x, y : x y = x & y x = y",
    "exists x, y : x y x = x & y x y = y",
    "exists x : x x x = x",
    "exists x, y : x y = y & y = y y",
];

pub fn battery_ids() -> impl Iterator<Item = &'static str> {
    BATTERIES.iter().map(|b| b.id)
}

/// Runs battery `id` over every iso-mode corpus entry of order `1..=max_order`.
pub fn verify_battery(id: &str, max_order: usize, source: &CorpusSource) -> Result<BatteryReport, SmallsemiError> {
    let info = BATTERIES.iter().find(|b| b.id == id).ok_or_else(|| SmallsemiError::UnknownBattery(id.to_owned()))?;
    let (checked, mismatches) = match id {
        "remark2.5" => (1, remark25()),
        "closure.P" => closure_p(max_order.min(CLOSURE_FACTOR_ORDER), source)?,
        "closure.H" => closure_h(max_order, source)?,
        "closure.exist-up" => closure_exist_up(max_order, source)?,
        _ => {
            let corpus = source.up_to(max_order)?;
            let mismatches: Vec<Mismatch> = corpus
                .par_iter()
                .flat_map_iter(|s| {
                    let green = GreenData::compute(s);
                    let report = classify_with(s, &green);
                    per_semigroup(id, s, &green, &report)
                })
                .collect();
            (corpus.len(), mismatches)
        }
    };
    Ok(BatteryReport {
        battery: id.to_owned(),
        description: info.description.to_owned(),
        max_order,
        checked,
        mismatches,
    })
}

/// Collects the outcome of each check against a single semigroup.
struct Checker<'a> {
    s: &'a FiniteSemigroup,
    out: Vec<Mismatch>,
}

impl Checker<'_> {
    fn sat(&self, id: &str) -> (bool, EquationSystem, Option<Vec<Binding>>) {
        let e = catalog(id).expect("battery ids name catalog entries");
        let v = satisfies(self.s, &e);
        (v.satisfied, e, v.counterexample)
    }

    fn fail(&mut self, detail: String, eqs: Option<&EquationSystem>, assignment: Option<Vec<Binding>>) {
        self.out.push(Mismatch { detail, sgp: to_sgp(self.s), eqs: eqs.map(|e| e.to_string()), assignment });
    }

    /// The catalog system `id` must hold exactly when `expected` does.
    fn agree(&mut self, id: &str, label: &str, expected: bool) {
        let (got, e, ce) = self.sat(id);
        if got != expected {
            self.fail(format!("{id} evaluates to {got}, {label} is {expected}"), Some(&e), ce);
        }
    }

    fn same(&mut self, items: &[(&str, bool)]) {
        if items.iter().any(|&(_, v)| v != items[0].1) {
            let text: Vec<String> = items.iter().map(|(k, v)| format!("{k}={v}")).collect();
            self.fail(format!("expected agreement: {}", text.join(", ")), None, None);
        }
    }
}

fn per_semigroup(id: &str, s: &FiniteSemigroup, green: &GreenData, r: &ClassReport) -> Vec<Mismatch> {
    let mut c = Checker { s, out: Vec::new() };
    match id {
        "prop2.1" => {
            c.agree("eq2.reg", "regular", r.regular);
            c.agree("eq3.lg", "left_group", r.left_group);
            c.agree("eq3.rg", "right_group", r.right_group);
            c.agree("eq4.g", "group", r.group);
            c.agree("eq5.cr", "completely_regular", r.completely_regular);
            c.agree("eq6.cs", "completely_simple", r.completely_simple);
        }
        "eq7.sg" => c.agree("eq7.sg", "clifford", r.clifford),
        "prop2.2" => {
            c.agree("eq9.inv", "inverse", r.inverse);
            c.agree("eq10.ri", "right_inverse", r.right_inverse);
            c.agree("eq11.o", "orthodox", r.orthodox);
            c.agree("eq12.cn", "conventional", r.conventional);
            c.agree("eq13.es", "idempotent_solid", r.idempotent_solid);
        }
        "eq14" => c.agree("eq14.monoid", "monoid", r.monoid),
        "lemma2.3" => {
            c.agree("eq15.B", "class_b", r.class_b);
            c.same(&[("class_b", r.class_b), ("via_r", r.class_b_via_r), ("via_l", r.class_b_via_l)]);
        }
        "prop2.4" => {
            for x in class_b_witnesses(s) {
                let p = prop24_profile(s, x);
                if !p.all_pass() {
                    c.fail(format!("witness x={x} fails the profile: {p:?}"), None, None);
                }
            }
        }
        "prop2.6" => {
            let meet = intersection_of_all_inverses(s);
            if !meet.is_empty() && meet.len() != s.order() {
                c.fail(format!("intersection of inverse sets is {meet:?}"), None, None);
            }
            c.same(&[("intersection=S", meet.len() == s.order()), ("rectangular_band", r.rectangular_band)]);
            c.agree("eq16.V", "class_v", r.class_v);
        }
        "prop2.7" => {
            c.agree("eq17.rsub", "r_square", r.r_square);
            c.same(&[("r_square", r.r_square), ("r_classes_subsemigroups", r.r_classes_subsemigroups)]);
        }
        "cor2.8" => {
            c.agree("eq19.regrsub", "regular and r_classes_subsemigroups", r.regular && r.r_classes_subsemigroups)
        }
        "thm2.10" => {
            c.agree("def2.9.cr", "completely_regular", r.completely_regular);
            c.agree("def2.9.cl", "completely_regular", r.completely_regular);
        }
        "cor2.11" => {
            if r.regular {
                c.same(&[
                    ("r_classes_subsemigroups", r.r_classes_subsemigroups),
                    ("l_classes_subsemigroups", r.l_classes_subsemigroups),
                    ("completely_regular", r.completely_regular),
                ]);
            }
        }
        "lemma2.12" => {
            if r.inverse {
                c.same(&[("r_square", r.r_square), ("clifford", r.clifford)]);
            }
        }
        "prop2.13" => {
            c.agree("eq6.cs", "completely_simple", r.completely_simple);
            c.agree("prop2.13.ii", "completely_simple", r.completely_simple);
            c.agree("prop2.13.iii", "completely_simple", r.completely_simple);
        }
        "bisimple" => c.agree("bisimple.rxlb", "bisimple_regular", r.bisimple_regular),
        "green" => {
            if let Err(v) = green.check_invariants() {
                c.fail(format!("Green invariant violated: {v:?}"), None, None);
            }
            if green.is_universal(Relation::J) && !r.completely_regular {
                c.fail("J-universal but not completely regular".into(), None, None);
            }
        }
        "eq22.comm" => {
            if r.commutative {
                c.agree("eq22.alt", "commutative", true);
            }
        }
        _ => unreachable!("battery ids are checked by the caller"),
    }
    c.out
}

fn remark25() -> Vec<Mismatch> {
    let s = a21();
    let one = s.identity().expect("A21 is a monoid");
    let mut c = Checker { s: &s, out: Vec::new() };
    let p = prop24_profile(&s, one);
    if !p.all_pass() {
        c.fail(format!("profile at the identity: {p:?}"), None, None);
    }
    let report = classify_with(&s, &GreenData::compute(&s));
    if report.class_b {
        c.fail("detector places A21 in class B".into(), None, None);
    }
    let (got, e, _) = c.sat("eq15.B");
    if got {
        c.fail("eq15.B holds in A21".into(), Some(&e), None);
    }
    c.out
}

fn closure_mismatch(s: &FiniteSemigroup, e: &EquationSystem, detail: String) -> Mismatch {
    let v = satisfies(s, e);
    Mismatch { detail, sgp: to_sgp(s), eqs: Some(e.to_string()), assignment: v.counterexample }
}

fn catalog_systems() -> Vec<(String, EquationSystem)> {
    CATALOG.iter().map(|entry| (entry.id.to_owned(), catalog(entry.id).expect("catalog parses"))).collect()
}

/// Satisfaction table `[system][semigroup]`.
fn sat_table(systems: &[(String, EquationSystem)], corpus: &[FiniteSemigroup]) -> Vec<Vec<bool>> {
    systems.par_iter().map(|(_, e)| corpus.iter().map(|s| satisfies(s, e).satisfied).collect()).collect()
}

fn closure_p(factor_order: usize, source: &CorpusSource) -> Result<(usize, Vec<Mismatch>), SmallsemiError> {
    let corpus = source.up_to(factor_order)?;
    let systems = catalog_systems();
    let sat = sat_table(&systems, &corpus);
    // S × T ≅ T × S, so unordered pairs suffice
    let pairs: Vec<(usize, usize)> = (0..corpus.len()).flat_map(|i| (i..corpus.len()).map(move |j| (i, j))).collect();
    let mismatches = pairs
        .par_iter()
        .flat_map_iter(|&(i, j)| {
            let product = direct_product(&corpus[i], &corpus[j]);
            let mut out = Vec::new();
            for (k, (id, e)) in systems.iter().enumerate() {
                if sat[k][i] && sat[k][j] && !satisfies(&product, e).satisfied {
                    let detail =
                        format!("{id} holds in factors {} and {} but not in their product", corpus[i], corpus[j]);
                    out.push(closure_mismatch(&product, e, detail));
                }
            }
            out
        })
        .collect();
    Ok((pairs.len(), mismatches))
}

fn closure_h(max_order: usize, source: &CorpusSource) -> Result<(usize, Vec<Mismatch>), SmallsemiError> {
    let corpus = source.up_to(max_order)?;
    let systems = catalog_systems();
    let quotients: Vec<Vec<FiniteSemigroup>> = corpus
        .par_iter()
        .map(|s| congruences(s, DEFAULT_CONGRUENCE_BOUND).map(|cs| cs.into_iter().map(|(_, q)| q).collect()))
        .collect::<Result<_, _>>()?;
    let sat = sat_table(&systems, &corpus);
    let mismatches = (0..corpus.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut out = Vec::new();
            for (k, (id, e)) in systems.iter().enumerate() {
                if !sat[k][i] {
                    continue;
                }
                for q in &quotients[i] {
                    if !satisfies(q, e).satisfied {
                        let detail = format!("{id} holds in {} but not in its quotient", corpus[i]);
                        out.push(closure_mismatch(q, e, detail));
                    }
                }
            }
            out
        })
        .collect();
    Ok((corpus.len(), mismatches))
}

fn closure_exist_up(max_order: usize, source: &CorpusSource) -> Result<(usize, Vec<Mismatch>), SmallsemiError> {
    let corpus = source.up_to(max_order)?;
    let factors = source.up_to(max_order.min(CLOSURE_FACTOR_ORDER))?;
    let mut systems: Vec<(String, EquationSystem)> =
        catalog_systems().into_iter().filter(|(_, e)| e.is_existential()).collect();
    systems.extend(EXISTENTIAL_PROBES.iter().map(|t| (t.to_string(), parse(t).expect("probes parse"))));
    let mismatches = corpus
        .par_iter()
        .flat_map_iter(|s| {
            let mut out = Vec::new();
            for (id, e) in &systems {
                if !satisfies(s, e).satisfied {
                    continue;
                }
                let mut supers = vec![
                    ("adjoin_identity".to_owned(), adjoin_identity(s)),
                    ("adjoin_zero".to_owned(), adjoin_zero(s)),
                ];
                supers.extend(factors.iter().map(|t| (format!("product with {t}"), direct_product(s, t))));
                for (how, big) in supers {
                    if !satisfies(&big, e).satisfied {
                        out.push(closure_mismatch(&big, e, format!("{id} holds in {s} but not after {how}")));
                    }
                }
            }
            out
        })
        .collect();
    Ok((corpus.len(), mismatches))
}

/// Every witness `x` of class B membership.
pub fn class_b_witnesses(s: &FiniteSemigroup) -> Vec<Element> {
    s.elements().filter(|&x| s.elements().all(|a| s.mul(s.mul(a, x), a) == a)).collect()
}
