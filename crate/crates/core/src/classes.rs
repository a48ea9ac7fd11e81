//! Structural class membership.
//!
//! Every detector here works from the table, idempotents and Green data.
//! None of them calls the equation-system evaluator: the batteries compare
//! the two, so they must stay independent.

use serde::Serialize;

use crate::algebra::{principal_factor, Element, FiniteSemigroup, GreenData, Relation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub regular: bool,
    pub left_group: bool,
    pub right_group: bool,
    pub group: bool,
    pub completely_regular: bool,
    pub completely_simple: bool,
    pub inverse: bool,
    pub right_inverse: bool,
    pub orthodox: bool,
    pub conventional: bool,
    pub idempotent_solid: bool,
    pub clifford: bool,
    pub monoid: bool,
    pub has_zero: bool,
    pub band: bool,
    pub commutative: bool,
    pub rectangular_band: bool,
    /// Some `x` with `a x a = a` for every `a`.
    pub class_b: bool,
    /// Some `x` with `a x ∈ R_a ∩ E` for every `a`.
    pub class_b_via_r: bool,
    /// Some `x` with `x a ∈ L_a ∩ E` for every `a`.
    pub class_b_via_l: bool,
    pub class_v: bool,
    /// `a R a²` for every `a`.
    pub r_square: bool,
    /// `a L a²` for every `a`.
    pub l_square: bool,
    pub r_classes_subsemigroups: bool,
    pub l_classes_subsemigroups: bool,
    pub bisimple_regular: bool,
    pub j_universal: bool,
    pub h_trivial: bool,
    /// The identity `a² = a³`.
    pub square_cube: bool,
    pub idempotents: Vec<Element>,
    pub universal_inverses: Vec<Element>,
}

impl ClassReport {
    /// Names of the class inclusions that fail in this report.
    pub fn entailment_violations(&self) -> Vec<&'static str> {
        let chain: [(&str, bool, bool); 10] = [
            ("group => completely_simple", self.group, self.completely_simple),
            ("completely_simple => completely_regular", self.completely_simple, self.completely_regular),
            ("completely_regular => regular", self.completely_regular, self.regular),
            ("inverse => right_inverse", self.inverse, self.right_inverse),
            ("right_inverse => orthodox", self.right_inverse, self.orthodox),
            ("orthodox => conventional", self.orthodox, self.conventional),
            ("conventional => regular", self.conventional, self.regular),
            ("clifford => inverse", self.clifford, self.inverse),
            ("clifford => completely_regular", self.clifford, self.completely_regular),
            ("class_v => class_b", self.class_v, self.class_b),
        ];
        chain.iter().filter(|(_, p, q)| *p && !*q).map(|(name, _, _)| *name).collect()
    }
}

pub fn classify(s: &FiniteSemigroup) -> ClassReport {
    let green = GreenData::compute(s);
    classify_with(s, &green)
}

pub fn classify_with(s: &FiniteSemigroup, green: &GreenData) -> ClassReport {
    let idempotents = s.idempotents();
    let elems: Vec<Element> = s.elements().collect();
    let all = |p: &dyn Fn(Element) -> bool| elems.iter().all(|&a| p(a));
    let all_idem_pairs =
        |p: &dyn Fn(Element, Element) -> bool| idempotents.iter().all(|&e| idempotents.iter().all(|&f| p(e, f)));

    // a is regular iff its R-class holds an idempotent
    let regular = all(&|a| idempotents.iter().any(|&e| green.r_related(a, e)));
    let left_simple = all(&|a| {
        let mut hit = vec![false; s.order()];
        for x in s.elements() {
            hit[s.mul(x, a)] = true;
        }
        hit.iter().all(|&h| h)
    });
    let right_simple = all(&|a| {
        let mut hit = vec![false; s.order()];
        for x in s.elements() {
            hit[s.mul(a, x)] = true;
        }
        hit.iter().all(|&h| h)
    });
    let identity = s.identity();
    let group = identity.is_some_and(|one| all(&|a| s.elements().any(|b| s.mul(a, b) == one && s.mul(b, a) == one)));
    let completely_regular = all(&|a| green.h_related(a, s.mul(a, a)));
    let j_universal = green.is_universal(Relation::J);
    let commuting_idempotents = all_idem_pairs(&|e, f| s.mul(e, f) == s.mul(f, e));
    let is_idem = |a: Element| s.is_idempotent(a);
    let idempotent_solid = regular && {
        let generated = s.subsemigroup_generated(&idempotents).expect("finite semigroups have idempotents");
        let sub = s.restrict(&generated).expect("generated sets are closed");
        let sub_green = GreenData::compute(&sub);
        sub.elements().all(|a| sub_green.h_related(a, sub.mul(a, a)))
    };
    let central_idempotents = idempotents.iter().all(|&e| all(&|a| s.mul(e, a) == s.mul(a, e)));
    let rectangular_band = all(&|a| is_idem(a) && s.elements().all(|b| s.mul(s.mul(a, b), a) == a));
    let class_b = elems.iter().any(|&x| all(&|a| s.mul(s.mul(a, x), a) == a));
    let class_b_via_r = elems.iter().any(|&x| all(&|a| is_idem(s.mul(a, x)) && green.r_related(s.mul(a, x), a)));
    let class_b_via_l = elems.iter().any(|&x| all(&|a| is_idem(s.mul(x, a)) && green.l_related(s.mul(x, a), a)));
    let universal_inverses = intersection_of_all_inverses(s);
    let closed_classes = |rel: Relation| {
        green
            .classes(rel)
            .iter()
            .all(|class| class.iter().all(|&a| class.iter().all(|&b| class.contains(&s.mul(a, b)))))
    };

    ClassReport {
        regular,
        left_group: regular && left_simple,
        right_group: regular && right_simple,
        group,
        completely_regular,
        completely_simple: j_universal && completely_regular,
        inverse: regular && commuting_idempotents,
        right_inverse: regular && all_idem_pairs(&|e, f| s.mul(s.mul(e, f), e) == s.mul(f, e)),
        orthodox: regular && all_idem_pairs(&|e, f| is_idem(s.mul(e, f))),
        conventional: regular && all_idem_pairs(&|e, f| is_idem(s.mul(s.mul(e, f), e))),
        idempotent_solid,
        clifford: regular && central_idempotents,
        monoid: identity.is_some(),
        has_zero: s.zero().is_some(),
        band: idempotents.len() == s.order(),
        commutative: s.is_commutative(),
        rectangular_band,
        class_b,
        class_b_via_r,
        class_b_via_l,
        class_v: !universal_inverses.is_empty(),
        r_square: all(&|a| green.r_related(a, s.mul(a, a))),
        l_square: all(&|a| green.l_related(a, s.mul(a, a))),
        r_classes_subsemigroups: closed_classes(Relation::R),
        l_classes_subsemigroups: closed_classes(Relation::L),
        bisimple_regular: regular && green.is_universal(Relation::D),
        j_universal,
        h_trivial: green.is_trivial(Relation::H),
        square_cube: all(&|a| {
            let a2 = s.mul(a, a);
            a2 == s.mul(a2, a)
        }),
        idempotents,
        universal_inverses,
    }
}

/// `⋂ₐ V(a)`.
pub fn intersection_of_all_inverses(s: &FiniteSemigroup) -> Vec<Element> {
    s.elements().filter(|&v| s.elements().all(|a| s.mul(s.mul(a, v), a) == a && s.mul(s.mul(v, a), v) == v)).collect()
}

/// The structural consequences of `x` being a universal pre-inverse,
/// evaluated for a given candidate `x`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prop24Profile {
    pub x: Element,
    pub x_idempotent: bool,
    pub square_cube: bool,
    pub generated_by_idempotent_pairs: bool,
    pub h_trivial: bool,
    pub d_equals_j: bool,
    pub j_class_maximum: bool,
    pub principal_factor_in_b: bool,
    pub r_and_l_class_idempotent: bool,
}

impl Prop24Profile {
    pub fn part_i(&self) -> bool {
        self.x_idempotent && self.square_cube && self.generated_by_idempotent_pairs
    }

    pub fn part_ii(&self) -> bool {
        self.h_trivial && self.d_equals_j
    }

    pub fn part_iii(&self) -> bool {
        self.j_class_maximum && self.principal_factor_in_b && self.r_and_l_class_idempotent
    }

    pub fn all_pass(&self) -> bool {
        self.part_i() && self.part_ii() && self.part_iii()
    }
}

pub fn prop24_profile(s: &FiniteSemigroup, x: Element) -> Prop24Profile {
    let green = GreenData::compute(s);
    let idempotents = s.idempotents();
    let mut e_squared = vec![false; s.order()];
    for &e in &idempotents {
        for &f in &idempotents {
            e_squared[s.mul(e, f)] = true;
        }
    }
    let factor = principal_factor(s, x).expect("x is an element");
    let factor_in_b = factor.elements().any(|y| factor.elements().all(|a| factor.mul(factor.mul(a, y), a) == a));
    Prop24Profile {
        x,
        x_idempotent: s.is_idempotent(x),
        square_cube: s.elements().all(|a| {
            let a2 = s.mul(a, a);
            a2 == s.mul(a2, a)
        }),
        generated_by_idempotent_pairs: e_squared.iter().all(|&h| h),
        h_trivial: green.is_trivial(Relation::H),
        d_equals_j: green.class_index(Relation::D) == green.class_index(Relation::J),
        j_class_maximum: s.elements().all(|a| green.j_leq(a, x)),
        principal_factor_in_b: factor_in_b,
        r_and_l_class_idempotent: s
            .elements()
            .filter(|&a| green.r_related(a, x) || green.l_related(a, x))
            .all(|a| s.is_idempotent(a)),
    }
}
