//! Acceptance criteria 1 to 9. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use itertools::Itertools;
use semilab::algebra::{a21, chain_semilattice, CanonicalMode, FiniteSemigroup};
use semilab::classes::{classify, prop24_profile};
use semilab::eqsys::{catalog, parse, satisfies, CATALOG};
use semilab::freeprod::{canonical_check, extract_epsilon_c, parse_script};
use semilab::smallsemi::{enumerate_semigroups, verify_battery, CorpusSource};
use semilab::wordeq::{
    counterexample_search, holds_in_all_semigroups, run_all_mechanisms, Evidence, HarnessBudget, TriVerdict,
};

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

// brute force over all n^(n*n) tables with its own associativity test and
// relabelling minimisation, independent of the enumerator
fn oracle_classes(n: usize, mode: CanonicalMode) -> BTreeSet<Vec<usize>> {
    let cells = n * n;
    let mut out = BTreeSet::new();
    for code in 0..n.pow(cells as u32) {
        let mut t = vec![0; cells];
        let mut c = code;
        for cell in t.iter_mut() {
            *cell = c % n;
            c /= n;
        }
        let m = |a: usize, b: usize| t[a * n + b];
        if (0..n).cartesian_product(0..n).cartesian_product(0..n).all(|((a, b), c)| m(m(a, b), c) == m(a, m(b, c))) {
            out.insert(oracle_canonical(n, &t, mode));
        }
    }
    out
}

fn oracle_canonical(n: usize, t: &[usize], mode: CanonicalMode) -> Vec<usize> {
    let mut tables = vec![t.to_vec()];
    if mode == CanonicalMode::Equivalence {
        tables.push((0..n * n).map(|i| t[(i % n) * n + i / n]).collect());
    }
    let mut best: Option<Vec<usize>> = None;
    for table in &tables {
        for p in (0..n).permutations(n) {
            let mut inv = vec![0; n];
            for (i, &pi) in p.iter().enumerate() {
                inv[pi] = i;
            }
            let relabelled: Vec<usize> = (0..n * n).map(|i| p[table[inv[i / n] * n + inv[i % n]]]).collect();
            if best.as_ref().is_none_or(|b| relabelled < *b) {
                best = Some(relabelled);
            }
        }
    }
    best.expect("n >= 1")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    for mode in [CanonicalMode::Isomorphism, CanonicalMode::Equivalence] {
        let corpus = enumerate_semigroups(2, mode).map_err(|e| e.to_string())?;
        let found: BTreeSet<Vec<usize>> = corpus.entries.iter().map(|s| oracle_canonical(2, s.table(), mode)).collect();
        ensure(found.len() == corpus.entries.len(), format!("order 2 {mode:?}: duplicate classes"))?;
        ensure(found == oracle_classes(2, mode), format!("order 2 {mode:?}: differs from brute force"))?;
    }
    let published = [(CanonicalMode::Isomorphism, [1, 5, 24, 188]), (CanonicalMode::Equivalence, [1, 4, 18, 126])];
    for (mode, counts) in published {
        for (i, &want) in counts.iter().enumerate() {
            let got = enumerate_semigroups(i + 1, mode).map_err(|e| e.to_string())?.entries.len();
            ensure(got == want, format!("order {} {mode:?}: {got} != {want}", i + 1))?;
        }
    }
    let core = start.elapsed();
    ensure(core <= Duration::from_secs(300), format!("orders 1-4 took {}", secs(core)))?;
    let start = Instant::now();
    let iso = enumerate_semigroups(5, CanonicalMode::Isomorphism).map_err(|e| e.to_string())?.entries.len();
    let eqv = enumerate_semigroups(5, CanonicalMode::Equivalence).map_err(|e| e.to_string())?.entries.len();
    ensure(iso == 1915 && eqv == 1160, format!("order 5: {iso}/{eqv} != 1915/1160"))?;
    Ok(format!("orders 1-4 match ({}), order 5 stretch 1915/1160 ({})", secs(core), secs(start.elapsed())))
}

const CORE_BATTERIES: [&str; 13] = [
    "prop2.1",
    "eq7.sg",
    "prop2.2",
    "eq14",
    "lemma2.3",
    "prop2.6",
    "prop2.7",
    "cor2.8",
    "thm2.10",
    "cor2.11",
    "lemma2.12",
    "prop2.13",
    "bisimple",
];

fn clean(id: &str, max_order: usize, source: &CorpusSource) -> Result<(usize, Duration), String> {
    let start = Instant::now();
    let r = verify_battery(id, max_order, source).map_err(|e| e.to_string())?;
    ensure(r.checked > 0, format!("{id}: nothing checked"))?;
    if let Some(m) = r.mismatches.first() {
        return Err(format!("{id} at order {max_order}: {} mismatches, first: {}", r.mismatches.len(), m.detail));
    }
    Ok((r.checked, start.elapsed()))
}

fn criterion_2(source: &CorpusSource) -> Check {
    let mut slowest = Duration::ZERO;
    for id in CORE_BATTERIES {
        let (_, t) = clean(id, 4, source)?;
        ensure(t <= Duration::from_secs(600), format!("{id} took {}", secs(t)))?;
        slowest = slowest.max(t);
    }
    for id in CORE_BATTERIES {
        clean(id, 5, source)?;
    }
    Ok(format!("13 batteries clean at order 4 (slowest {}) and order 5 stretch", secs(slowest)))
}

fn criterion_3() -> Check {
    let s = a21();
    let identity = s.identity().ok_or("a21 has no identity")?;
    let p = prop24_profile(&s, identity);
    ensure(p.part_i() && p.part_ii() && p.part_iii(), format!("profile at identity: {p:?}"))?;
    let v = satisfies(&s, &catalog("eq15.B").map_err(|e| e.to_string())?);
    ensure(!v.satisfied, "a21 satisfies eq15.B")?;
    // independent: no x with a x a = a for all a
    ensure(!s.elements().any(|x| s.elements().all(|a| s.mul(s.mul(a, x), a) == a)), "brute force finds a pre-inverse")?;
    clean("remark2.5", 6, &CorpusSource::in_memory())?;
    Ok("a21 passes (i)-(iii) at the identity and fails eq15.B".into())
}

fn criterion_4(source: &CorpusSource) -> Check {
    let mut members = 0;
    let mut pairs = 0;
    for n in 1..=4 {
        let corpus = source.get(n, CanonicalMode::Isomorphism).map_err(|e| e.to_string())?;
        for s in &corpus.entries {
            let witnesses: Vec<usize> =
                s.elements().filter(|&x| s.elements().all(|a| s.mul(s.mul(a, x), a) == a)).collect();
            if witnesses.is_empty() {
                continue;
            }
            members += 1;
            for x in witnesses {
                pairs += 1;
                let p = prop24_profile(s, x);
                ensure(p.all_pass(), format!("x = {x} in\n{s}\n{p:?}"))?;
            }
        }
    }
    clean("prop2.4", 4, source)?;
    Ok(format!("{members} class-B members, {pairs} witnesses, all profiles pass"))
}

fn criterion_5(source: &CorpusSource) -> Check {
    let (p, _) = clean("closure.P", 3, source)?;
    let (h, _) = clean("closure.H", 4, source)?;
    let (up, _) = clean("closure.exist-up", 4, source)?;
    Ok(format!("closure.P {p} pairs, closure.H {h}, closure.exist-up {up}: zero violations"))
}

fn worked_example() -> Result<(FiniteSemigroup, semilab::EquationSystem, semilab::EquationSystem), String> {
    // chain of two under min: s1 = top = 1, s2 = bottom = 0
    let s = chain_semilattice(2).map_err(|e| e.to_string())?;
    let e = catalog("sec3.2.eps").map_err(|e| e.to_string())?;
    let script = parse_script("x1 = s1 A1\nx2 = A2 s1\nx3 = s0\n", &s).map_err(|e| e.to_string())?;
    let rs = canonical_check(&s, &e, &script).map_err(|e| format!("canonical check failed: {e}"))?;
    Ok((s, e, extract_epsilon_c(&rs)))
}

fn criterion_6() -> Check {
    let (_, _, eps) = worked_example()?;
    ensure(eps.is_existential(), "extracted system has a universal")?;
    let got: BTreeSet<BTreeSet<String>> = eps
        .equalities()
        .iter()
        .map(|eq| [eps.word_text(&eq.lhs), eps.word_text(&eq.rhs)].into_iter().collect())
        .collect();
    let pair = |l: &str, r: &str| -> BTreeSet<String> { [l.to_owned(), r.to_owned()].into_iter().collect() };
    let want: BTreeSet<_> = [pair("xs1 xs0", "xs0 xs1"), pair("xs0", "xs0 xs0")].into_iter().collect();
    ensure(got == want, format!("got {got:?}"))?;
    Ok(format!("epsilon_c = {eps}"))
}

fn criterion_7(source: &CorpusSource) -> Check {
    let start = Instant::now();
    let (_, e, eps) = worked_example()?;
    let mut models = 0;
    for n in 1..=4 {
        for s in &source.get(n, CanonicalMode::Isomorphism).map_err(|e| e.to_string())?.entries {
            if satisfies(s, &eps).satisfied {
                models += 1;
                ensure(satisfies(s, &e).satisfied, format!("satisfies epsilon_c but not epsilon:\n{s}"))?;
            }
        }
    }
    let t = start.elapsed();
    ensure(t <= Duration::from_secs(300), format!("took {}", secs(t)))?;
    Ok(format!("{models} models of epsilon_c up to order 4 all satisfy epsilon ({})", secs(t)))
}

fn criterion_8(source: &CorpusSource) -> Check {
    let budget = HarnessBudget::default();
    let verdict = |text: &str| -> Result<TriVerdict, String> {
        holds_in_all_semigroups(&parse(text).map_err(|e| e.to_string())?, budget, source).map_err(|e| e.to_string())
    };
    let v = verdict("forall a exists x: a x = x a")?;
    ensure(
        matches!(&v, TriVerdict::Holds { witness } if witness.replays(&parse("forall a exists x: a x = x a").unwrap())),
        "commuting",
    )?;
    let v = verdict("exists x: x x = x")?;
    ensure(
        matches!(&v, TriVerdict::DoesNotHold { evidence: Evidence::ParikhInfeasible { certificate } } if certificate.verify()),
        "idempotent",
    )?;
    let v = verdict("forall a exists x: a = a x a")?;
    let ok = match &v {
        TriVerdict::DoesNotHold { evidence: Evidence::ParikhInfeasible { certificate } } => certificate.verify(),
        TriVerdict::DoesNotHold { evidence: Evidence::FiniteCounterexample(ce) } => ce.order == 2,
        _ => false,
    };
    ensure(ok, "regularity")?;
    let lg = parse("forall a,b exists x: a = a x b").map_err(|e| e.to_string())?;
    ensure(verdict("forall a,b exists x: a = a x b")?.holds() == Some(false), "left group: verdict")?;
    let ce =
        counterexample_search(&lg, 4, source).map_err(|e| e.to_string())?.ok_or("left group: no counterexample")?;
    ensure(ce.order == 2, format!("left group: counterexample of order {}", ce.order))?;

    let mut decided = 0;
    for entry in CATALOG {
        let e = catalog(entry.id).map_err(|e| e.to_string())?;
        let report = run_all_mechanisms(&e, budget, source).map_err(|e| e.to_string())?;
        ensure(!report.is_contradictory(), format!("{}: contradictory mechanisms", entry.id))?;
        if let Some(c) = &report.parikh {
            ensure(c.verify(), format!("{}: bad certificate", entry.id))?;
        }
        if let Some(w) = &report.witness {
            ensure(w.replays(&e), format!("{}: witness does not replay", entry.id))?;
        }
        decided +=
            usize::from(holds_in_all_semigroups(&e, budget, source).map_err(|e| e.to_string())?.holds().is_some());
    }
    Ok(format!("four determinations exact, {} catalog systems consistent ({decided} decided)", CATALOG.len()))
}

// principal ideals as sorted element lists, computed from the table alone
fn ideal(s: &FiniteSemigroup, a: usize, left: bool, right: bool) -> Vec<usize> {
    let mut set = BTreeSet::from([a]);
    for x in s.elements() {
        if left {
            set.insert(s.mul(x, a));
        }
        if right {
            set.insert(s.mul(a, x));
        }
        if left && right {
            for y in s.elements() {
                set.insert(s.mul(s.mul(x, a), y));
            }
        }
    }
    set.into_iter().collect()
}

fn criterion_9(source: &CorpusSource) -> Check {
    let mut count = 0;
    let mut j_universal = 0;
    for n in 1..=4 {
        for s in &source.get(n, CanonicalMode::Isomorphism).map_err(|e| e.to_string())?.entries {
            count += 1;
            let g = semilab::algebra::green_data(s);
            let r = |a, b| ideal(s, a, false, true) == ideal(s, b, false, true);
            let l = |a, b| ideal(s, a, true, false) == ideal(s, b, true, false);
            let j = |a, b| ideal(s, a, true, true) == ideal(s, b, true, true);
            for (a, b) in s.elements().cartesian_product(s.elements()) {
                let rl = s.elements().any(|c| r(a, c) && l(c, b));
                let lr = s.elements().any(|c| l(a, c) && r(c, b));
                ensure(
                    g.r_related(a, b) == r(a, b) && g.l_related(a, b) == l(a, b),
                    format!("R/L at ({a},{b}) in\n{s}"),
                )?;
                ensure(g.h_related(a, b) == (r(a, b) && l(a, b)), format!("H != R ∧ L at ({a},{b}) in\n{s}"))?;
                ensure(rl == lr && rl == j(a, b), format!("R∘L, L∘R, J disagree at ({a},{b}) in\n{s}"))?;
                ensure(g.d_related(a, b) == rl && g.j_related(a, b) == j(a, b), format!("D/J at ({a},{b}) in\n{s}"))?;
            }
            ensure(g.check_invariants().is_ok(), "library invariant check")?;
            if s.elements().all(|a| j(a, 0)) {
                j_universal += 1;
                let union_of_groups = s.elements().all(|a| {
                    let a2 = s.mul(a, a);
                    r(a, a2) && l(a, a2)
                });
                ensure(
                    union_of_groups && classify(s).completely_regular,
                    format!("J-universal, not completely regular:\n{s}"),
                )?;
            }
        }
    }
    clean("green", 4, source)?;
    Ok(format!("{count} semigroups, {j_universal} J-universal ones completely regular"))
}

fn main() -> ExitCode {
    let source = CorpusSource::in_memory();
    let criteria: Vec<Criterion> = vec![
        ("enumeration counts", Box::new(criterion_1)),
        ("equation batteries", Box::new(|| criterion_2(&source))),
        ("a21 fixture", Box::new(criterion_3)),
        ("class B profiles", Box::new(|| criterion_4(&source))),
        ("closure suites", Box::new(|| criterion_5(&source))),
        ("free-product worked example", Box::new(criterion_6)),
        ("epsilon_c entails epsilon", Box::new(|| criterion_7(&source))),
        ("wordeq determinations", Box::new(|| criterion_8(&source))),
        ("Green invariants", Box::new(|| criterion_9(&source))),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
