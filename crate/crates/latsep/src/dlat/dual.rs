//! Finite Priestley duals: prime filters, the Stone map, and the dual
//! characterizations of the separation axioms on a discrete space.

use crate::bits::Bits;
use crate::error::Result;
use crate::poset::{FinPoset, DOWNSET_BOUND};
use crate::report::{CheckReport, Verdict, Witness};
use crate::space::SpaceSpec;

use super::{set_name, Axiom, FinDLat};

/// The prime filters of a finite lattice ordered by inclusion, with the
/// Stone map `a ↦ { x : a ∈ x }`.
#[derive(Clone, Debug)]
pub struct PrimeSpectrum {
    /// Members of each prime filter, as element sets of the lattice.
    pub filters: Vec<Bits>,
    pub poset: FinPoset,
    /// `stone[a]` is the set of (indices of) prime filters containing `a`.
    pub stone: Vec<Bits>,
}

impl PrimeSpectrum {
    /// `R(U)`: the points `p` with `↓↑p ⊆ U`, the union of all upsets
    /// whose down-closure stays inside `U`.
    pub fn regular_part(&self, u: Bits) -> Bits {
        let p = &self.poset;
        (0..p.len())
            .filter(|&i| p.down_closure(p.up_of(i)).is_subset(u))
            .collect()
    }

    /// The dual of `⟨a,b⟩`: `X ∖ ↓(s(a) ∖ s(b))`.
    pub fn annihilator_upset(&self, a: usize, b: usize) -> Bits {
        let p = &self.poset;
        p.all().minus(p.down_closure(self.stone[a].minus(self.stone[b])))
    }

    /// The dual space as a fan-free symbolic space.
    pub fn to_space(&self) -> Result<SpaceSpec> {
        SpaceSpec::from_poset(&self.poset)
    }
}

impl FinDLat {
    /// Finds prime filters by enumerating filters and testing primality.
    ///
    /// Filters are enumerated as meet-closed upsets when the lattice is
    /// small enough for upset enumeration, and as principal filters
    /// otherwise (every filter of a finite lattice is principal).
    pub fn prime_filters(&self) -> PrimeSpectrum {
        let n = self.len();
        let candidates: Vec<Bits> = match self.poset().dual().enumerate_downsets(DOWNSET_BOUND) {
            Ok(upsets) => upsets,
            Err(_) => (0..n).map(|a| self.poset().up_of(a)).collect(),
        };
        let filters: Vec<Bits> = candidates
            .into_iter()
            .filter(|&f| self.is_prime_filter(f))
            .collect();
        let ids: Vec<String> = filters.iter().map(|&f| set_name(self.ids(), f, "∅")).collect();
        let poset = FinPoset::from_fn(ids, |i, j| filters[i].is_subset(filters[j])).expect("inclusion order");
        let stone = (0..n)
            .map(|a| (0..filters.len()).filter(|&i| filters[i].contains(a)).collect())
            .collect();
        PrimeSpectrum { filters, poset, stone }
    }

    fn is_prime_filter(&self, f: Bits) -> bool {
        if f.is_empty() || f.contains(self.bottom()) || !self.poset().is_upset(f) {
            return false;
        }
        let n = self.len();
        for a in f {
            for b in f {
                if !f.contains(self.meet(a, b)) {
                    return false;
                }
            }
        }
        (0..n).all(|a| (0..n).all(|b| !f.contains(self.join(a, b)) || f.contains(a) || f.contains(b)))
    }

    /// `↓s(a) ⊆ s(b)` on the dual; equivalent to `a ≺ b`.
    pub fn rather_below_dual(&self, spec: &PrimeSpectrum, a: usize, b: usize) -> bool {
        spec.poset.down_closure(spec.stone[a]).is_subset(spec.stone[b])
    }

    /// Checks an axiom through its characterization on the finite dual.
    /// The topology is discrete, so density means equality.
    pub fn dual_axiom_check(&self, axiom: Axiom) -> CheckReport {
        let spec = self.prime_filters();
        let x = spec.poset.all();
        let point = |i: usize| Witness::Point {
            point: spec.poset.id(i).to_string(),
        };
        let (verdict, witness, step, basis) = match axiom {
            Axiom::VSubfit => {
                let bad = x.minus(spec.poset.minimals()).first();
                (bad.is_none(), bad.map(point), "min X = X", "subfit iff min X is dense in X")
            }
            Axiom::WSubfit => {
                let bad = x.minus(spec.poset.maximals()).first();
                (bad.is_none(), bad.map(point), "max X = X", "∧-subfit iff max X is dense in X")
            }
            Axiom::Boolean => {
                let bad = x.minus(spec.poset.maximals()).first();
                (bad.is_none(), bad.map(point), "max X = X", "Boolean iff max X = X")
            }
            Axiom::Regular => {
                let bad = (0..self.len()).find(|&a| spec.regular_part(spec.stone[a]) != spec.stone[a]);
                (
                    bad.is_none(),
                    bad.map(|a| Witness::Element { a: self.id(a).into() }),
                    "R(s(a)) = s(a) for every a",
                    "regular iff R(s(a)) is dense in s(a) for every a",
                )
            }
            Axiom::Heyting => {
                let bad = self
                    .pairs()
                    .find(|&(a, b)| !spec.stone.contains(&spec.annihilator_upset(a, b)));
                (
                    bad.is_none(),
                    bad.map(|(a, b)| Witness::ElementPair {
                        a: self.id(a).into(),
                        b: self.id(b).into(),
                    }),
                    "X ∖ ↓(s(a) ∖ s(b)) is some s(c)",
                    "⟨a,b⟩ is principal iff its dual open upset is clopen",
                )
            }
            Axiom::ProHeyting => {
                let p = &spec.poset;
                let bad = self.pairs().find(|&(a, b)| {
                    let u = spec.annihilator_upset(a, b);
                    x.minus(p.down_closure(x.minus(p.up_closure(u)))) != u
                });
                (
                    bad.is_none(),
                    bad.map(|(a, b)| Witness::ElementPair {
                        a: self.id(a).into(),
                        b: self.id(b).into(),
                    }),
                    "X ∖ ↓(s(a) ∖ s(b)) is a fixpoint of int1 cl2",
                    "normal ideals correspond to DM-upsets",
                )
            }
        };
        let verdict = Verdict::from_bool(verdict);
        let mut r = CheckReport::new(axiom.name(), "L", verdict).step(
            format!("{step} on the {}-point dual", spec.poset.len()),
            verdict,
            basis,
        );
        r.witness = witness;
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_chain_dual_is_two_chain() {
        let l = FinDLat::chain(3).unwrap();
        let s = l.prime_filters();
        assert_eq!(s.poset.ids(), ["{a,1}", "{1}"]);
        assert!(s.poset.leq(1, 0) && !s.poset.leq(0, 1));
        // brute force: filters are nonempty proper meet-closed upsets
        let mut brute = Vec::new();
        for m in 1u64..(1 << l.len()) {
            let f = Bits(m);
            let upset = l.poset().is_upset(f);
            let closed = f.iter().all(|a| f.iter().all(|b| f.contains(l.meet(a, b))));
            let prime = (0..3).all(|a| (0..3).all(|b| !f.contains(l.join(a, b)) || f.contains(a) || f.contains(b)));
            if upset && closed && prime && !f.contains(l.bottom()) {
                brute.push(f);
            }
        }
        brute.sort();
        let mut got = s.filters.clone();
        got.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn boolean_square_dual_is_antichain() {
        let s = FinDLat::boolean(2).unwrap().prime_filters();
        assert_eq!(s.poset.len(), 2);
        assert_eq!(s.poset.minimals(), s.poset.all());
    }

    #[test]
    fn round_trip_through_dual() {
        let two = FinPoset::new(&["p", "q"], &[("p", "q")]).unwrap();
        let l = FinDLat::downsets_of(&two).unwrap();
        let s = l.prime_filters();
        let back = FinDLat::downsets_of(&s.poset.dual()).unwrap();
        assert!(back.is_isomorphic(&l));
        // the Stone map is an order embedding onto the upsets
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(l.leq(a, b), s.stone[a].is_subset(s.stone[b]));
            }
            assert!(s.poset.is_upset(s.stone[a]));
        }
    }

    #[test]
    fn dual_checks_match_definitions_on_small_cases() {
        let c3 = FinDLat::chain(3).unwrap();
        assert_eq!(c3.dual_axiom_check(Axiom::VSubfit).verdict, Verdict::False);
        let b2 = FinDLat::boolean(2).unwrap();
        assert_eq!(b2.dual_axiom_check(Axiom::WSubfit).verdict, Verdict::True);
        for l in [c3, b2, FinDLat::chain(5).unwrap()] {
            for ax in Axiom::ALL {
                assert_eq!(l.dual_axiom_check(ax).verdict, l.check_axiom_def(ax).verdict, "{l} {ax}");
            }
        }
    }
}
