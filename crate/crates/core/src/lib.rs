//! A laboratory for finite semigroups and quantified equation systems.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`] holds Cayley tables, Green's relations, standard
//!   constructions, congruences and canonical forms.
//! * [`eqsys`] parses equation systems (prenex sentences with alternating
//!   `forall`/`exists` blocks over a conjunction of word equalities) and
//!   decides them on finite semigroups.
//! * [`classes`] computes structural class membership, independent of the
//!   evaluator, so the two can be checked against each other.
//! * [`smallsemi`] enumerates all semigroups of small order up to
//!   isomorphism and runs the verification batteries.
//! * [`freeprod`] implements the free product of a finite semigroup with a
//!   free semigroup, canonical parameter evaluation and run extraction.
//! * [`wordeq`] is a bounded harness for deciding whether a system holds in
//!   every semigroup.

pub mod algebra;
pub mod classes;
pub mod eqsys;
pub mod freeprod;
pub mod smallsemi;
pub mod wordeq;

pub use algebra::{AlgebraError, Element, FiniteSemigroup, GreenData};
pub use classes::{classify, ClassReport};
pub use eqsys::{catalog, parse, satisfies, EquationSystem, Verdict};
