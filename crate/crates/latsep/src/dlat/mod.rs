//! Finite bounded distributive lattices and definition-level checks.

mod completion;
mod dual;
mod enumerate;
mod sublattice;

pub use completion::{Completion, CompletionKind};
pub use dual::PrimeSpectrum;
pub use enumerate::{enumerate_dlats, ENUMERATION_BOUND};
pub use sublattice::{SublatticePair, SublatticeProperty, SublatticeReport};

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, LatticeViolation, Result};
use crate::poset::{CanonicalForm, FinPoset, PosetJson};
use crate::report::{CheckReport, Verdict, Witness};

/// A finite lattice with cached meet and join tables.
///
/// Values built with [`FinDLat::new`] are validated distributive lattices.
/// [`FinDLat::lattice`] skips the distributivity check so that
/// non-distributive lattices such as M3 can be inspected with
/// [`FinDLat::validate`].
#[derive(Clone, Debug)]
pub struct FinDLat {
    poset: FinPoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FinDLat {
    /// Computes meet and join tables; fails if some pair lacks one.
    pub fn lattice(poset: FinPoset) -> Result<FinDLat, LatticeViolation> {
        let n = poset.len();
        if n == 0 {
            return Err(LatticeViolation::Empty);
        }
        let mut meet = vec![0; n * n];
        let mut join = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let ub = poset.up_of(i).inter(poset.up_of(j));
                join[i * n + j] = ub
                    .iter()
                    .find(|&k| ub.is_subset(poset.up_of(k)))
                    .ok_or_else(|| LatticeViolation::NoJoin(poset.id(i).into(), poset.id(j).into()))?;
                let lb = poset.down_of(i).inter(poset.down_of(j));
                meet[i * n + j] = lb
                    .iter()
                    .find(|&k| lb.is_subset(poset.down_of(k)))
                    .ok_or_else(|| LatticeViolation::NoMeet(poset.id(i).into(), poset.id(j).into()))?;
            }
        }
        let bottom = (0..n).fold(0, |acc, i| meet[acc * n + i]);
        let top = (0..n).fold(0, |acc, i| join[acc * n + i]);
        Ok(FinDLat {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// A validated bounded distributive lattice.
    pub fn new(poset: FinPoset) -> Result<FinDLat> {
        let l = FinDLat::lattice(poset)?;
        l.validate()?;
        Ok(l)
    }

    pub fn from_json(json: &PosetJson) -> Result<FinDLat> {
        FinDLat::new(FinPoset::from_json(json)?)
    }

    pub fn to_json(&self) -> PosetJson {
        self.poset.to_json()
    }

    /// Confirms boundedness and distributivity. The first failing triple in
    /// index order is reported.
    pub fn validate(&self) -> Result<(), LatticeViolation> {
        let n = self.len();
        if self.poset.up_of(self.bottom) != self.poset.all() || self.poset.down_of(self.top) != self.poset.all() {
            return Err(LatticeViolation::Empty);
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Err(LatticeViolation::Distributivity(
                            self.id(a).into(),
                            self.id(b).into(),
                            self.id(c).into(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The chain `0 < a < b < .. < 1` with `n` elements.
    pub fn chain(n: usize) -> Result<FinDLat> {
        if n == 0 {
            return Err(LatticeViolation::Empty.into());
        }
        let ids: Vec<String> = (0..n)
            .map(|i| match i {
                0 => "0".to_string(),
                _ if i == n - 1 => "1".to_string(),
                _ => letter(i - 1),
            })
            .collect();
        FinDLat::new(FinPoset::from_fn(ids, |i, j| i <= j)?)
    }

    /// The Boolean lattice `2^n` on atoms `a, b, ..`; elements are named by
    /// their atoms, with `0` and `1` for the bounds.
    pub fn boolean(n: usize) -> Result<FinDLat> {
        if n > 6 {
            return Err(Error::TooLarge {
                what: "Boolean lattice exponent",
                limit: 6,
                got: n,
            });
        }
        let size = 1usize << n;
        let ids: Vec<String> = (0..size)
            .map(|m| match m {
                0 => "0".to_string(),
                _ if m == size - 1 => "1".to_string(),
                _ => Bits(m as u64).iter().map(letter).collect(),
            })
            .collect();
        FinDLat::new(FinPoset::from_fn(ids, |i, j| i & !j == 0)?)
    }

    /// Birkhoff: the lattice of downsets of `p`, ordered by inclusion.
    pub fn downsets_of(p: &FinPoset) -> Result<FinDLat> {
        let family = p.enumerate_downsets(crate::poset::DOWNSET_BOUND)?;
        FinDLat::from_family(&family, |s| set_name(p.ids(), s, "∅"))
    }

    /// The inclusion order on a family of sets, which must form a
    /// distributive lattice.
    pub fn from_family(family: &[Bits], name: impl Fn(Bits) -> String) -> Result<FinDLat> {
        if family.len() > crate::bits::MAX_BITS {
            return Err(Error::TooLarge {
                what: "lattice",
                limit: crate::bits::MAX_BITS,
                got: family.len(),
            });
        }
        let ids = family.iter().map(|&s| name(s)).collect();
        FinDLat::new(FinPoset::from_fn(ids, |i, j| family[i].is_subset(family[j]))?)
    }

    pub fn poset(&self) -> &FinPoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn all(&self) -> Bits {
        self.poset.all()
    }

    pub fn id(&self, i: usize) -> &str {
        self.poset.id(i)
    }

    pub fn ids(&self) -> &[String] {
        self.poset.ids()
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.poset.index_of(id)
    }

    pub fn names(&self, s: Bits) -> Vec<String> {
        self.poset.names(s)
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn join_of(&self, s: Bits) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    pub fn meet_of(&self, s: Bits) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn upper_bounds(&self, s: Bits) -> Bits {
        s.iter().fold(self.all(), |acc, x| acc.inter(self.poset.up_of(x)))
    }

    pub fn lower_bounds(&self, s: Bits) -> Bits {
        s.iter().fold(self.all(), |acc, x| acc.inter(self.poset.down_of(x)))
    }

    pub fn complement(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&c| self.meet(a, c) == self.bottom && self.join(a, c) == self.top)
    }

    /// Elements other than `0` that are not the join of what lies strictly
    /// below them.
    pub fn join_irreducibles(&self) -> Bits {
        (0..self.len())
            .filter(|&j| {
                j != self.bottom && self.join_of(self.poset.down_of(j).minus(Bits::singleton(j))) != j
            })
            .collect()
    }

    /// Isomorphism invariant: the canonical form of the join-irreducible
    /// poset, which determines a finite distributive lattice.
    pub fn canonical_form(&self) -> CanonicalForm {
        self.poset.restrict(self.join_irreducibles()).canonical_form()
    }

    pub fn is_isomorphic(&self, other: &FinDLat) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }

    /// `a ≺ b`: some `c` has `a ∧ c = 0` and `b ∨ c = 1`.
    pub fn rather_below(&self, a: usize, b: usize) -> bool {
        self.rather_below_witness(a, b).is_some()
    }

    pub fn rather_below_witness(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.len()).find(|&c| self.meet(a, c) == self.bottom && self.join(b, c) == self.top)
    }

    pub fn rather_below_by_id(&self, a: &str, b: &str) -> Result<bool> {
        Ok(self.rather_below(self.index_of(a)?, self.index_of(b)?))
    }

    /// `⟨a,b⟩ = { x : a ∧ x ≤ b }`.
    pub fn relative_annihilator(&self, a: usize, b: usize) -> RelativeAnnihilator {
        let members: Bits = (0..self.len()).filter(|&x| self.leq(self.meet(a, x), b)).collect();
        let principal = members.iter().find(|&m| members.is_subset(self.poset.down_of(m)));
        let normal = self.lower_bounds(self.upper_bounds(members)) == members;
        RelativeAnnihilator {
            ideal: IdealOrFilter {
                kind: IdealKind::Ideal,
                members,
            },
            principal,
            normal,
        }
    }

    /// Checks an axiom straight from its definition by exhaustive search.
    pub fn check_axiom_def(&self, axiom: Axiom) -> CheckReport {
        let pair = |a: usize, b: usize| Witness::ElementPair {
            a: self.id(a).into(),
            b: self.id(b).into(),
        };
        let basis = axiom.definition();
        let report = match axiom {
            Axiom::VSubfit => match self.first_unseparated(|a, b, c| {
                self.join(a, c) == self.top && self.join(b, c) != self.top
            }) {
                None => CheckReport::new(axiom.name(), "L", Verdict::True),
                Some((a, b)) => CheckReport::new(axiom.name(), "L", Verdict::False).with_witness(pair(a, b)),
            },
            Axiom::WSubfit => match self.first_unseparated(|a, b, c| {
                self.meet(a, c) != self.bottom && self.meet(b, c) == self.bottom
            }) {
                None => CheckReport::new(axiom.name(), "L", Verdict::True),
                Some((a, b)) => CheckReport::new(axiom.name(), "L", Verdict::False).with_witness(pair(a, b)),
            },
            Axiom::Regular => {
                let n = self.len();
                let rb: Vec<bool> = (0..n * n).map(|i| self.rather_below(i / n, i % n)).collect();
                match self.first_unseparated(|a, b, c| rb[c * n + a] && !self.leq(c, b)) {
                    None => {
                        let mut r = CheckReport::new(axiom.name(), "L", Verdict::True);
                        for c in 0..n {
                            for a in 0..n {
                                if rb[c * n + a] {
                                    r.relation.push([self.id(c).into(), self.id(a).into()]);
                                }
                            }
                        }
                        r
                    }
                    Some((a, b)) => CheckReport::new(axiom.name(), "L", Verdict::False).with_witness(pair(a, b)),
                }
            }
            Axiom::Boolean => match (0..self.len()).find(|&a| self.complement(a).is_none()) {
                None => CheckReport::new(axiom.name(), "L", Verdict::True),
                Some(a) => CheckReport::new(axiom.name(), "L", Verdict::False)
                    .with_witness(Witness::Element { a: self.id(a).into() }),
            },
            Axiom::Heyting | Axiom::ProHeyting => {
                let bad = self.pairs().find(|&(a, b)| {
                    let r = self.relative_annihilator(a, b);
                    match axiom {
                        Axiom::Heyting => r.principal.is_none(),
                        _ => !r.normal,
                    }
                });
                match bad {
                    None => CheckReport::new(axiom.name(), "L", Verdict::True),
                    Some((a, b)) => CheckReport::new(axiom.name(), "L", Verdict::False).with_witness(pair(a, b)),
                }
            }
        };
        let v = report.verdict;
        report.step(format!("{} by exhaustive search over {} elements", axiom.name(), self.len()), v, basis)
    }

    /// First pair `a ≰ b`, in index order, with no `c` satisfying `sep(a, b, c)`.
    fn first_unseparated(&self, sep: impl Fn(usize, usize, usize) -> bool) -> Option<(usize, usize)> {
        let n = self.len();
        self.pairs()
            .filter(|&(a, b)| !self.leq(a, b))
            .find(|&(a, b)| !(0..n).any(|c| sep(a, b, c)))
    }

    fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.len();
        (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
    }
}

impl fmt::Display for FinDLat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.ids().join(", "))
    }
}

fn letter(i: usize) -> String {
    let c = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        c.to_string()
    } else {
        format!("{c}{}", i / 26)
    }
}

/// `{a,b}` style name of a subset, or `empty` for the empty set.
pub(crate) fn set_name(ids: &[String], s: Bits, empty: &str) -> String {
    if s.is_empty() {
        return empty.to_string();
    }
    let parts: Vec<&str> = s.iter().map(|i| ids[i].as_str()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealKind {
    Ideal,
    Filter,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdealOrFilter {
    pub kind: IdealKind,
    pub members: Bits,
}

impl IdealOrFilter {
    /// Ideal: nonempty downset closed under binary joins. Filter dually.
    pub fn is_valid(&self, l: &FinDLat) -> bool {
        let m = self.members;
        if m.is_empty() {
            return false;
        }
        match self.kind {
            IdealKind::Ideal => {
                l.poset().is_downset(m) && m.iter().all(|a| m.iter().all(|b| m.contains(l.join(a, b))))
            }
            IdealKind::Filter => {
                l.poset().is_upset(m) && m.iter().all(|a| m.iter().all(|b| m.contains(l.meet(a, b))))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelativeAnnihilator {
    pub ideal: IdealOrFilter,
    /// The generator `a → b` when the ideal is principal.
    pub principal: Option<usize>,
    /// Whether the ideal equals the lower bounds of its upper bounds.
    pub normal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    VSubfit,
    WSubfit,
    Regular,
    Boolean,
    Heyting,
    ProHeyting,
}

impl Axiom {
    pub const ALL: [Axiom; 6] = [
        Axiom::VSubfit,
        Axiom::WSubfit,
        Axiom::Regular,
        Axiom::Boolean,
        Axiom::Heyting,
        Axiom::ProHeyting,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::VSubfit => "vsubfit",
            Axiom::WSubfit => "wsubfit",
            Axiom::Regular => "regular",
            Axiom::Boolean => "boolean",
            Axiom::Heyting => "heyting",
            Axiom::ProHeyting => "proheyting",
        }
    }

    fn definition(self) -> &'static str {
        match self {
            Axiom::VSubfit => "a ≰ b gives c with a ∨ c = 1 ≠ b ∨ c",
            Axiom::WSubfit => "a ≰ b gives c with a ∧ c ≠ 0 = b ∧ c",
            Axiom::Regular => "a ≰ b gives c ≺ a with c ≰ b, where c ≺ a means some d has c ∧ d = 0 and a ∨ d = 1",
            Axiom::Boolean => "every element has a complement",
            Axiom::Heyting => "every relative annihilator ⟨a,b⟩ is principal",
            Axiom::ProHeyting => "every relative annihilator ⟨a,b⟩ is a normal ideal",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axiom {
    type Err = Error;

    fn from_str(s: &str) -> Result<Axiom> {
        Axiom::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}
