//! Built-in instances: the fan spaces of the worked examples and a few
//! finite lattices, each with the verdicts the examples establish.

use crate::bits::Bits;
use crate::dlat::FinDLat;
use crate::error::{Error, Result};
use crate::poset::FinPoset;
use crate::report::Verdict;
use crate::space::SpaceSpec;
use crate::symset::{FanPart, SymSet};

#[derive(Clone, Debug)]
pub enum Subject {
    Space(SpaceSpec),
    Lattice(FinDLat),
}

/// An expected verdict and the statement it comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub check: String,
    pub verdict: Verdict,
    pub anchor: String,
}

#[derive(Clone, Debug)]
pub struct GalleryEntry {
    pub id: String,
    pub description: String,
    pub subject: Subject,
    pub expected: Vec<Expectation>,
    /// Sets tried first when searching for witnesses.
    pub hints: Vec<SymSet>,
}

impl GalleryEntry {
    pub fn space(&self) -> Option<&SpaceSpec> {
        match &self.subject {
            Subject::Space(s) => Some(s),
            Subject::Lattice(_) => None,
        }
    }

    pub fn lattice(&self) -> Option<&FinDLat> {
        match &self.subject {
            Subject::Lattice(l) => Some(l),
            Subject::Space(_) => None,
        }
    }

    pub fn expected(&self, check: &str) -> Option<&Expectation> {
        self.expected.iter().find(|e| e.check == check)
    }
}

fn expect(check: &str, verdict: Verdict, anchor: &str) -> Expectation {
    Expectation {
        check: check.into(),
        verdict,
        anchor: anchor.into(),
    }
}

const AT2: Verdict = Verdict::VerifiedAtBound(2);

pub fn fig1() -> SpaceSpec {
    SpaceSpec::builder()
        .named(&["x_inf", "y"])
        .leq("x_inf", "y")
        .fan("x", "x_inf", &[], &[])
        .build()
        .expect("fig1 is a valid space")
}

pub fn fig2() -> SpaceSpec {
    SpaceSpec::builder()
        .named(&["x_inf", "y_inf"])
        .leq("x_inf", "y_inf")
        .fan("x", "x_inf", &[], &[])
        .fan("y", "y_inf", &[], &[])
        .build()
        .expect("fig2 is a valid space")
}

pub fn fig3() -> SpaceSpec {
    SpaceSpec::builder()
        .named(&["x_inf"])
        .fan("x", "x_inf", &["x_inf"], &[])
        .build()
        .expect("fig3 is a valid space")
}

pub fn fig4() -> SpaceSpec {
    SpaceSpec::builder()
        .named(&["x_inf", "y_inf", "z"])
        .leq("x_inf", "y_inf")
        .leq("z", "y_inf")
        .fan("x", "x_inf", &[], &[])
        .fan("y", "y_inf", &[], &[])
        .build()
        .expect("fig4 is a valid space")
}

/// The order dual of `fig3`: fan members lie below the limit.
pub fn cofinite_n() -> SpaceSpec {
    SpaceSpec::builder()
        .named(&["x_inf"])
        .fan("x", "x_inf", &[], &["x_inf"])
        .build()
        .expect("cofinite_N is a valid space")
}

pub fn antichain3() -> SpaceSpec {
    SpaceSpec::builder()
        .named(&["p", "q", "r"])
        .build()
        .expect("antichain is a valid space")
}

/// The clopen upset `y[*∖0] ∪ {y_inf, z}` of `fig4`.
pub fn fig4_u(space: &SpaceSpec) -> SymSet {
    space
        .set(&["y_inf", "z"], &[("y", FanPart::Cofin(Bits::singleton(0)))])
        .expect("fig4 has y_inf, z and fan y")
}

fn fig1_hints(space: &SpaceSpec) -> Vec<SymSet> {
    let mut hints: Vec<SymSet> = (0..5)
        .map(|n| space.full().minus(&space.set::<&str>(&[], &[("x", FanPart::Fin(Bits::singleton(n)))]).unwrap()))
        .collect();
    hints.push(space.set::<&str>(&[], &[("x", FanPart::FULL)]).unwrap());
    hints
}

fn space_entry(id: &str, description: &str, space: SpaceSpec, expected: Vec<Expectation>) -> GalleryEntry {
    GalleryEntry {
        id: id.into(),
        description: description.into(),
        subject: Subject::Space(space),
        expected,
        hints: Vec::new(),
    }
}

fn lattice_entry(id: &str, description: &str, l: FinDLat, expected: Vec<Expectation>) -> GalleryEntry {
    GalleryEntry {
        id: id.into(),
        description: description.into(),
        subject: Subject::Lattice(l),
        expected,
        hints: Vec::new(),
    }
}

pub fn gallery() -> Vec<GalleryEntry> {
    use Verdict::{False as F, True as T};
    let f1 = fig1();
    let mut e1 = space_entry(
        "fig1",
        "one fan x converging to x_inf, plus an isolated y with x_inf < y",
        f1.clone(),
        vec![
            expect("subfit_L", F, "L(X) is not subfit: y lies outside the closure of min X"),
            expect("subfit_DM", F, "DM(A) is subfit iff A is subfit"),
            expect("subfit_BL", AT2, "BL(X) is subfit: W = X ∖ {x_n} and W = the fan separate"),
            expect("subfit_pH", AT2, "BL A is subfit iff pH A is subfit"),
            expect("wsubfit_L", T, "max X = fan ∪ {y} is dense in X"),
            expect("boolean_BL", T, "BL A is Boolean iff A is ∧-subfit"),
            expect("boolean_I", F, "I A is Boolean iff A is finite and Boolean"),
            expect("subfit_sigma", F, "A^σ is subfit iff A is Boolean"),
        ],
    );
    e1.hints = fig1_hints(&f1);
    let f4 = fig4();
    let mut e4 = space_entry(
        "fig4",
        "fans x → x_inf and y → y_inf, isolated z, with x_inf < y_inf and z < y_inf",
        f4.clone(),
        vec![
            expect("subfit_L", T, "min X is dense: the only non-minimal point y_inf is a limit"),
            expect("regular_L", F, "R(U) = {y_1, y_2, …} is not dense in U = {y_1, y_2, …} ∪ {y_inf, z}"),
            expect("regular_BL", AT2, "R_BL(V) is dense in V for every clopen upset V"),
            expect("A_regular_BL", F, "BL A is not A-regular since A is not regular"),
        ],
    );
    e4.hints = vec![fig4_u(&f4)];
    vec![
        e1,
        space_entry(
            "fig2",
            "fans x → x_inf and y → y_inf with x_inf < y_inf",
            fig2(),
            vec![
                expect("subfit_L", T, "L(X) is subfit but OpUp(X) is not"),
                expect("I_subfit", F, "min ↓y_inf = {x_inf} does not have y_inf in its closure"),
                expect("skula_cross", F, "min X is not dense in the Skula topology"),
                expect("subfit_OpUp", F, "OpUp(X) is not subfit"),
                expect("subfit_sigma", F, "A^σ is subfit iff A is Boolean"),
                expect("proheyting", AT2, "a subfit lattice is proHeyting"),
            ],
        ),
        space_entry(
            "fig3",
            "fan x above its limit x_inf: the finite subsets of ℕ together with ℕ",
            fig3(),
            vec![
                expect("subfit_L", F, "the finite subsets of ℕ with ℕ do not form a subfit lattice"),
                expect("regular_L", F, "not regular since not subfit"),
                expect("A_regular_BL", F, "A-regularity of BL A is regularity of A"),
                expect("boolean_BL", T, "BL A is isomorphic to the powerset of ℕ"),
                expect("boolean_L", F, "x_inf is not maximal"),
                expect("subfit_sigma", F, "A^σ is subfit iff A is Boolean"),
            ],
        ),
        e4,
        space_entry(
            "cofinite_N",
            "fan x below its limit x_inf: ∅ together with the cofinite subsets of ℕ",
            cofinite_n(),
            vec![
                expect("subfit_L", T, "∅ and the cofinite subsets of ℕ form a subfit lattice"),
                expect("subfit_sigma", F, "a subfit non-Boolean A has A^σ not subfit"),
                expect("boolean_L", F, "the lattice is not Boolean"),
            ],
        ),
        space_entry(
            "antichain3",
            "three incomparable isolated points: the powerset of a 3-set",
            antichain3(),
            vec![
                expect("subfit_L", T, "a Boolean lattice is subfit"),
                expect("boolean_I", T, "I A is Boolean iff A is finite and Boolean"),
                expect("subfit_sigma", T, "A^σ is subfit iff A is Boolean"),
                expect("regular_L", T, "a Boolean lattice is regular"),
            ],
        ),
        lattice_entry(
            "chain2",
            "the two-element chain",
            FinDLat::chain(2).expect("chain"),
            vec![
                expect("vsubfit", T, "the two-element chain is Boolean"),
                expect("boolean", T, "the two-element chain is Boolean"),
            ],
        ),
        lattice_entry(
            "chain3",
            "the three-element chain 0 < a < 1",
            FinDLat::chain(3).expect("chain"),
            vec![
                expect("vsubfit", F, "a finite lattice is subfit iff Boolean"),
                expect("wsubfit", F, "a finite lattice is ∧-subfit iff Boolean"),
                expect("regular", F, "regular implies subfit"),
                expect("boolean", F, "a is not complemented"),
                expect("heyting", T, "every finite distributive lattice is Heyting"),
            ],
        ),
        lattice_entry(
            "chain5",
            "the five-element chain",
            FinDLat::chain(5).expect("chain"),
            vec![
                expect("vsubfit", F, "a finite lattice is subfit iff Boolean"),
                expect("proheyting", T, "every Heyting lattice is proHeyting"),
            ],
        ),
        lattice_entry(
            "cube",
            "the Boolean cube 2^3",
            FinDLat::boolean(3).expect("cube"),
            vec![
                expect("vsubfit", T, "Boolean lattices are subfit"),
                expect("wsubfit", T, "Boolean lattices are ∧-subfit"),
                expect("regular", T, "Boolean lattices are regular"),
                expect("boolean", T, "the cube is Boolean"),
            ],
        ),
        lattice_entry(
            "square",
            "the Boolean square 2^2",
            FinDLat::boolean(2).expect("square"),
            vec![expect("boolean", T, "the square is Boolean")],
        ),
        lattice_entry(
            "downsets_v",
            "downsets of the poset p < r, q < r",
            FinDLat::downsets_of(&FinPoset::new(&["p", "q", "r"], &[("p", "r"), ("q", "r")]).expect("poset"))
                .expect("downset lattice"),
            vec![
                expect("vsubfit", F, "a finite lattice is subfit iff Boolean"),
                expect("boolean", F, "its dual has a non-maximal point"),
            ],
        ),
    ]
}

pub fn entry(id: &str) -> Result<GalleryEntry> {
    gallery()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gallery_has_both_kinds() {
        let g = gallery();
        assert!(g.iter().filter(|e| matches!(e.subject, Subject::Space(_))).count() >= 5);
        assert!(g.iter().filter(|e| matches!(e.subject, Subject::Lattice(_))).count() >= 5);
        let mut ids: Vec<_> = g.iter().map(|e| e.id.clone()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), g.len());
    }

    #[test]
    fn every_expectation_is_anchored() {
        for e in gallery() {
            for x in &e.expected {
                assert!(!x.anchor.is_empty(), "{} {}", e.id, x.check);
            }
        }
    }

    #[test]
    fn fig3_expects_boolean_bl() {
        assert_eq!(entry("fig3").unwrap().expected("boolean_BL").unwrap().verdict, Verdict::True);
        assert!(entry("nope").is_err());
    }
}
