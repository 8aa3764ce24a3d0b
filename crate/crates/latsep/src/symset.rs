//! Symbolic subsets of a fan space.
//!
//! A [`SymSet`] is a set of named points plus, per fan, either a finite set
//! of member indices or a cofinite one. The family is closed under Boolean
//! operations, closure and interior, and order closures.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bits::{Bits, MAX_BITS};
use crate::error::{Error, Result};
use crate::space::{Point, SpaceSpec};

/// The part of a set inside one fan.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FanPart {
    /// Exactly these member indices.
    Fin(Bits),
    /// Every member except these indices.
    Cofin(Bits),
}

impl FanPart {
    pub const EMPTY: FanPart = FanPart::Fin(Bits::EMPTY);
    pub const FULL: FanPart = FanPart::Cofin(Bits::EMPTY);

    pub fn contains(self, index: usize) -> bool {
        match self {
            FanPart::Fin(s) => s.contains(index),
            FanPart::Cofin(e) => !e.contains(index),
        }
    }

    pub fn complement(self) -> FanPart {
        match self {
            FanPart::Fin(s) => FanPart::Cofin(s),
            FanPart::Cofin(e) => FanPart::Fin(e),
        }
    }

    pub fn union(self, o: FanPart) -> FanPart {
        use FanPart::*;
        match (self, o) {
            (Fin(a), Fin(b)) => Fin(a.union(b)),
            (Fin(a), Cofin(e)) | (Cofin(e), Fin(a)) => Cofin(e.minus(a)),
            (Cofin(e), Cofin(f)) => Cofin(e.inter(f)),
        }
    }

    pub fn inter(self, o: FanPart) -> FanPart {
        use FanPart::*;
        match (self, o) {
            (Fin(a), Fin(b)) => Fin(a.inter(b)),
            (Fin(a), Cofin(e)) | (Cofin(e), Fin(a)) => Fin(a.minus(e)),
            (Cofin(e), Cofin(f)) => Cofin(e.union(f)),
        }
    }

    pub fn minus(self, o: FanPart) -> FanPart {
        self.inter(o.complement())
    }

    pub fn is_subset(self, o: FanPart) -> bool {
        use FanPart::*;
        match (self, o) {
            (Fin(a), Fin(b)) => a.is_subset(b),
            (Fin(a), Cofin(e)) => !a.intersects(e),
            (Cofin(_), Fin(_)) => false,
            (Cofin(e), Cofin(f)) => f.is_subset(e),
        }
    }

    pub fn is_empty(self) -> bool {
        self == FanPart::EMPTY
    }

    pub fn is_full(self) -> bool {
        self == FanPart::FULL
    }

    pub fn is_cofinite(self) -> bool {
        matches!(self, FanPart::Cofin(_))
    }

    /// The finite set of indices the part mentions.
    pub fn support(self) -> Bits {
        match self {
            FanPart::Fin(s) | FanPart::Cofin(s) => s,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymSet {
    space: u64,
    universe: Bits,
    named: Bits,
    fans: Vec<FanPart>,
}

impl SymSet {
    pub fn named(&self) -> Bits {
        self.named
    }

    pub fn fan_part(&self, f: usize) -> FanPart {
        self.fans[f]
    }

    pub fn fan_parts(&self) -> &[FanPart] {
        &self.fans
    }

    pub fn space_fingerprint(&self) -> u64 {
        self.space
    }

    pub fn with_named(mut self, named: Bits) -> SymSet {
        debug_assert!(named.is_subset(self.universe));
        self.named = named;
        self
    }

    pub fn with_fan(mut self, f: usize, part: FanPart) -> SymSet {
        self.fans[f] = part;
        self
    }

    pub fn contains(&self, p: Point) -> bool {
        match p {
            Point::Named(i) => self.named.contains(i),
            Point::Member { fan, index } => self.fans[fan].contains(index),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.named.is_empty() && self.fans.iter().all(|p| p.is_empty())
    }

    /// Largest index mentioned by any fan part, plus one.
    pub fn support_span(&self) -> usize {
        self.fans.iter().map(|p| p.support().span()).max().unwrap_or(0)
    }

    pub fn complement(&self) -> SymSet {
        SymSet {
            space: self.space,
            universe: self.universe,
            named: self.universe.minus(self.named),
            fans: self.fans.iter().map(|p| p.complement()).collect(),
        }
    }

    fn zip(&self, o: &SymSet, named: impl Fn(Bits, Bits) -> Bits, part: impl Fn(FanPart, FanPart) -> FanPart) -> Result<SymSet> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(SymSet {
            space: self.space,
            universe: self.universe,
            named: named(self.named, o.named),
            fans: self.fans.iter().zip(&o.fans).map(|(a, b)| part(*a, *b)).collect(),
        })
    }

    pub fn try_union(&self, o: &SymSet) -> Result<SymSet> {
        self.zip(o, Bits::union, FanPart::union)
    }

    pub fn try_inter(&self, o: &SymSet) -> Result<SymSet> {
        self.zip(o, Bits::inter, FanPart::inter)
    }

    pub fn try_minus(&self, o: &SymSet) -> Result<SymSet> {
        self.zip(o, Bits::minus, FanPart::minus)
    }

    pub fn try_is_subset(&self, o: &SymSet) -> Result<bool> {
        if self.space != o.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(self.is_subset(o))
    }

    /// # Panics
    /// If the sets belong to different spaces; see [`SymSet::try_union`].
    pub fn union(&self, o: &SymSet) -> SymSet {
        self.try_union(o).expect("sets from the same space")
    }

    pub fn inter(&self, o: &SymSet) -> SymSet {
        self.try_inter(o).expect("sets from the same space")
    }

    pub fn minus(&self, o: &SymSet) -> SymSet {
        self.try_minus(o).expect("sets from the same space")
    }

    pub fn is_subset(&self, o: &SymSet) -> bool {
        assert_eq!(self.space, o.space, "sets from different spaces");
        self.named.is_subset(o.named) && self.fans.iter().zip(&o.fans).all(|(a, b)| a.is_subset(*b))
    }

    pub fn intersects(&self, o: &SymSet) -> bool {
        !self.inter(o).is_empty()
    }
}

impl fmt::Debug for SymSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SymSet")
            .field("named", &self.named)
            .field("fans", &self.fans)
            .finish()
    }
}

/// Wire form: `{ "named": [..], "fans": { id: {"fin": [..]} | {"cofin": [..]} } }`.
/// Fans left out are empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymSetJson {
    #[serde(default)]
    pub named: Vec<String>,
    #[serde(default)]
    pub fans: BTreeMap<String, FanPartJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FanPartJson {
    Fin(Vec<usize>),
    Cofin(Vec<usize>),
}

impl SpaceSpec {
    pub fn empty(&self) -> SymSet {
        SymSet {
            space: self.fingerprint(),
            universe: self.all_named(),
            named: Bits::EMPTY,
            fans: vec![FanPart::EMPTY; self.n_fans()],
        }
    }

    pub fn full(&self) -> SymSet {
        self.empty().complement()
    }

    pub fn named_only(&self, named: Bits) -> SymSet {
        self.empty().with_named(named)
    }

    /// `{p}`. Members with index beyond the representable range give the
    /// empty set.
    pub fn singleton(&self, p: Point) -> SymSet {
        match p {
            Point::Named(i) => self.named_only(Bits::singleton(i)),
            Point::Member { fan, index } if index < MAX_BITS => {
                self.empty().with_fan(fan, FanPart::Fin(Bits::singleton(index)))
            }
            Point::Member { .. } => self.empty(),
        }
    }

    /// Builds a set from named ids and `(fan id, part)` pairs.
    pub fn set<S: AsRef<str>>(&self, named: &[S], fans: &[(&str, FanPart)]) -> Result<SymSet> {
        let mut s = self.named_only(self.named_set(named)?);
        for (id, part) in fans {
            s = s.with_fan(self.fan_index(id)?, *part);
        }
        Ok(s)
    }

    pub fn set_from_json(&self, json: &SymSetJson) -> Result<SymSet> {
        let mut s = self.named_only(self.named_set(&json.named)?);
        for (id, part) in &json.fans {
            let f = self.fan_index(id)?;
            let idx = match part {
                FanPartJson::Fin(v) | FanPartJson::Cofin(v) => v,
            };
            if let Some(&bad) = idx.iter().find(|&&i| i >= MAX_BITS) {
                return Err(Error::TooLarge {
                    what: "fan index",
                    limit: MAX_BITS - 1,
                    got: bad,
                });
            }
            let bits: Bits = idx.iter().copied().collect();
            s = s.with_fan(
                f,
                match part {
                    FanPartJson::Fin(_) => FanPart::Fin(bits),
                    FanPartJson::Cofin(_) => FanPart::Cofin(bits),
                },
            );
        }
        Ok(s)
    }

    pub fn set_to_json(&self, s: &SymSet) -> SymSetJson {
        let mut fans = BTreeMap::new();
        for (f, part) in s.fans.iter().enumerate() {
            let p = match *part {
                FanPart::Fin(b) if b.is_empty() => continue,
                FanPart::Fin(b) => FanPartJson::Fin(b.iter().collect()),
                FanPart::Cofin(b) => FanPartJson::Cofin(b.iter().collect()),
            };
            fans.insert(self.fan(f).id.clone(), p);
        }
        SymSetJson {
            named: s.named.iter().map(|i| self.named_id(i).to_string()).collect(),
            fans,
        }
    }

    /// Human-readable form: `{y, x_inf, x[*], z[0,2], w[*∖1]}`.
    pub fn show(&self, s: &SymSet) -> String {
        let mut parts: Vec<String> = s.named.iter().map(|i| self.named_id(i).to_string()).collect();
        for (f, part) in s.fans.iter().enumerate() {
            let id = &self.fan(f).id;
            let list = |b: Bits| b.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
            match *part {
                FanPart::Fin(b) if b.is_empty() => {}
                FanPart::Fin(b) => parts.push(format!("{id}[{}]", list(b))),
                FanPart::Cofin(b) if b.is_empty() => parts.push(format!("{id}[*]")),
                FanPart::Cofin(b) => parts.push(format!("{id}[*∖{}]", list(b))),
            }
        }
        if parts.is_empty() {
            "∅".to_string()
        } else {
            format!("{{{}}}", parts.join(", "))
        }
    }

    /// Adds the limit of every fan with a cofinite part.
    pub fn closure(&self, s: &SymSet) -> SymSet {
        let mut named = s.named;
        for (f, part) in s.fans.iter().enumerate() {
            if part.is_cofinite() {
                named.insert(self.fan(f).limit);
            }
        }
        s.clone().with_named(named)
    }

    pub fn interior(&self, s: &SymSet) -> SymSet {
        self.closure(&s.complement()).complement()
    }

    pub fn down_closure(&self, s: &SymSet) -> SymSet {
        let mut seed = s.named;
        for (f, part) in s.fans.iter().enumerate() {
            if !part.is_empty() {
                seed = seed.union(self.fan(f).below);
            }
        }
        let named = self.named_down_closure(seed);
        let mut out = s.clone().with_named(named);
        for f in 0..self.n_fans() {
            if self.fan(f).above.intersects(named) {
                out = out.with_fan(f, FanPart::FULL);
            }
        }
        out
    }

    pub fn up_closure(&self, s: &SymSet) -> SymSet {
        let mut seed = s.named;
        for (f, part) in s.fans.iter().enumerate() {
            if !part.is_empty() {
                seed = seed.union(self.fan(f).above);
            }
        }
        let named = self.named_up_closure(seed);
        let mut out = s.clone().with_named(named);
        for f in 0..self.n_fans() {
            if self.fan(f).below.intersects(named) {
                out = out.with_fan(f, FanPart::FULL);
            }
        }
        out
    }

    /// `↓cl S`
    pub fn cl1(&self, s: &SymSet) -> SymSet {
        self.down_closure(&self.closure(s))
    }

    /// `↑cl S`
    pub fn cl2(&self, s: &SymSet) -> SymSet {
        self.up_closure(&self.closure(s))
    }

    /// `X ∖ ↓(X ∖ int S)`
    pub fn int1(&self, s: &SymSet) -> SymSet {
        self.down_closure(&self.interior(s).complement()).complement()
    }

    /// `X ∖ ↑(X ∖ int S)`
    pub fn int2(&self, s: &SymSet) -> SymSet {
        self.up_closure(&self.interior(s).complement()).complement()
    }

    pub fn is_upset(&self, s: &SymSet) -> bool {
        self.up_closure(s) == *s
    }

    pub fn is_downset(&self, s: &SymSet) -> bool {
        self.down_closure(s) == *s
    }

    pub fn is_closed(&self, s: &SymSet) -> bool {
        self.closure(s) == *s
    }

    pub fn is_open(&self, s: &SymSet) -> bool {
        self.interior(s) == *s
    }

    pub fn is_clopen(&self, s: &SymSet) -> bool {
        self.is_closed(s) && self.is_open(s)
    }

    /// Named points with nothing strictly below, plus the fans whose
    /// members have nothing below.
    pub fn min_set(&self) -> SymSet {
        let above_any = self.fans().iter().fold(Bits::EMPTY, |acc, f| acc.union(f.above));
        let named = (0..self.n_named())
            .filter(|&i| self.named_down(i) == Bits::singleton(i) && !above_any.contains(i))
            .collect();
        let mut s = self.named_only(named);
        for (f, fan) in self.fans().iter().enumerate() {
            if fan.below.is_empty() {
                s = s.with_fan(f, FanPart::FULL);
            }
        }
        s
    }

    pub fn max_set(&self) -> SymSet {
        let below_any = self.fans().iter().fold(Bits::EMPTY, |acc, f| acc.union(f.below));
        let named = (0..self.n_named())
            .filter(|&i| self.named_up(i) == Bits::singleton(i) && !below_any.contains(i))
            .collect();
        let mut s = self.named_only(named);
        for (f, fan) in self.fans().iter().enumerate() {
            if fan.above.is_empty() {
                s = s.with_fan(f, FanPart::FULL);
            }
        }
        s
    }

    /// Whether `inside ⊆ cl(s)`. Requires `s ⊆ inside`.
    pub fn is_dense(&self, s: &SymSet, inside: &SymSet) -> Result<bool> {
        if !s.try_is_subset(inside)? {
            return Err(Error::Precondition(format!(
                "{} is not contained in {}",
                self.show(s),
                self.show(inside)
            )));
        }
        Ok(inside.is_subset(&self.closure(s)))
    }

    /// Some point of `s`, preferring named points, then generic members.
    pub fn some_point(&self, s: &SymSet) -> Option<Point> {
        if let Some(i) = s.named.first() {
            return Some(Point::Named(i));
        }
        s.fans.iter().enumerate().find_map(|(f, part)| match *part {
            FanPart::Fin(b) => b.first().map(|index| Point::Member { fan: f, index }),
            FanPart::Cofin(_) => Some(Point::Member {
                fan: f,
                index: crate::space::GENERIC_INDEX,
            }),
        })
    }
}
