//! Finitely presented Priestley spaces: named points plus fans.
//!
//! A fan is a sequence of isolated points `f[0], f[1], ..` converging to a
//! named limit. Members of a fan are related to named points uniformly: a
//! named `q` lies below every member when `q ∈ below(f)` and above every
//! member when `q ∈ above(f)`. Members are otherwise incomparable.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::bits::{Bits, MAX_BITS};
use crate::error::{Error, OrderViolation, Result, SpaceViolation};
use crate::poset::FinPoset;
use crate::symset::{FanPart, SymSet};

/// Index used for the generic member of a fan. It lies outside every
/// finite support a [`SymSet`] can carry.
pub const GENERIC_INDEX: usize = MAX_BITS;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fan {
    pub id: String,
    pub limit: usize,
    pub below: Bits,
    pub above: Bits,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Named(usize),
    Member { fan: usize, index: usize },
}

/// A point up to permutations of fan indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointClass {
    Named(usize),
    Generic(usize),
}

impl PointClass {
    pub fn representative(self) -> Point {
        match self {
            PointClass::Named(i) => Point::Named(i),
            PointClass::Generic(f) => Point::Member {
                fan: f,
                index: GENERIC_INDEX,
            },
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanJson {
    pub id: String,
    pub limit: String,
    #[serde(default)]
    pub below: Vec<String>,
    #[serde(default)]
    pub above: Vec<String>,
}

/// Wire form of a space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub named: Vec<String>,
    #[serde(default)]
    pub named_leq: Vec<[String; 2]>,
    #[serde(default)]
    pub fans: Vec<FanJson>,
}

#[derive(Clone, Debug)]
pub struct SpaceSpec {
    named: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<Bits>,
    down: Vec<Bits>,
    fans: Vec<Fan>,
    fans_at: Vec<Bits>,
    fingerprint: u64,
}

impl PartialEq for SpaceSpec {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint && self.named == other.named && self.fans == other.fans
    }
}

impl SpaceSpec {
    pub fn builder() -> SpaceBuilder {
        SpaceBuilder::default()
    }

    /// Reads a space, adding reflexive pairs to the named order, then
    /// validates it.
    pub fn from_json(json: &SpaceJson) -> Result<SpaceSpec> {
        let mut json = json.clone();
        for n in &json.named {
            json.named_leq.push([n.clone(), n.clone()]);
        }
        let s = SpaceSpec::from_raw(&json)?;
        s.validate()?;
        Ok(s)
    }

    /// Builds the space exactly as given, without validation or reflexive
    /// closure. Only unknown ids and size limits are reported.
    pub fn from_raw(json: &SpaceJson) -> Result<SpaceSpec> {
        if json.named.len() > MAX_BITS {
            return Err(Error::TooLarge {
                what: "named points",
                limit: MAX_BITS,
                got: json.named.len(),
            });
        }
        if json.fans.len() > MAX_BITS {
            return Err(Error::TooLarge {
                what: "fans",
                limit: MAX_BITS,
                got: json.fans.len(),
            });
        }
        let mut index = HashMap::new();
        for (i, n) in json.named.iter().enumerate() {
            if index.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateId(n.clone()));
            }
        }
        let look = |id: &str| index.get(id).copied().ok_or_else(|| Error::UnknownElement(id.to_string()));
        let k = json.named.len();
        let mut up = vec![Bits::EMPTY; k];
        let mut down = vec![Bits::EMPTY; k];
        for [a, b] in &json.named_leq {
            let (i, j) = (look(a)?, look(b)?);
            up[i].insert(j);
            down[j].insert(i);
        }
        let mut fans = Vec::with_capacity(json.fans.len());
        let mut fans_at = vec![Bits::EMPTY; k];
        for (fi, f) in json.fans.iter().enumerate() {
            if json.fans[..fi].iter().any(|g| g.id == f.id) || index.contains_key(&f.id) {
                return Err(Error::DuplicateId(f.id.clone()));
            }
            let limit = look(&f.limit)?;
            let below = f.below.iter().map(|q| look(q)).collect::<Result<Bits>>()?;
            let above = f.above.iter().map(|q| look(q)).collect::<Result<Bits>>()?;
            fans_at[limit].insert(fi);
            fans.push(Fan {
                id: f.id.clone(),
                limit,
                below,
                above,
            });
        }
        let mut h = DefaultHasher::new();
        json.named.hash(&mut h);
        up.hash(&mut h);
        fans.hash(&mut h);
        Ok(SpaceSpec {
            named: json.named.clone(),
            index,
            up,
            down,
            fans,
            fans_at,
            fingerprint: h.finish(),
        })
    }

    /// A fan-free space carrying the order of `p`.
    pub fn from_poset(p: &FinPoset) -> Result<SpaceSpec> {
        SpaceSpec::from_json(&SpaceJson {
            named: p.ids().to_vec(),
            named_leq: p.to_json().leq,
            fans: Vec::new(),
        })
    }

    pub fn to_json(&self) -> SpaceJson {
        let ids = |s: Bits| s.iter().map(|i| self.named[i].clone()).collect::<Vec<_>>();
        let mut named_leq = Vec::new();
        for i in 0..self.n_named() {
            for j in self.up[i] {
                if i != j {
                    named_leq.push([self.named[i].clone(), self.named[j].clone()]);
                }
            }
        }
        SpaceJson {
            named: self.named.clone(),
            named_leq,
            fans: self
                .fans
                .iter()
                .map(|f| FanJson {
                    id: f.id.clone(),
                    limit: self.named[f.limit].clone(),
                    below: ids(f.below),
                    above: ids(f.above),
                })
                .collect(),
        }
    }

    /// Checks, in order: closedness of the order at fan limits, the partial
    /// order on named points, closure of below/above sets, the absence of
    /// member-to-member relations, and Priestley separation.
    pub fn validate(&self) -> Result<(), SpaceViolation> {
        for f in &self.fans {
            for q in f.below {
                if !self.named_leq(q, f.limit) {
                    return Err(SpaceViolation::Closedness {
                        fan: f.id.clone(),
                        point: self.named[q].clone(),
                        limit: self.named[f.limit].clone(),
                    });
                }
            }
            for q in f.above {
                if !self.named_leq(f.limit, q) {
                    return Err(SpaceViolation::Closedness {
                        fan: f.id.clone(),
                        point: self.named[q].clone(),
                        limit: self.named[f.limit].clone(),
                    });
                }
            }
        }
        self.validate_named_order().map_err(SpaceViolation::Order)?;
        for f in &self.fans {
            for q in f.below {
                if let Some(p) = self.down[q].minus(f.below).first() {
                    return Err(SpaceViolation::BelowNotDownClosed {
                        fan: f.id.clone(),
                        lower: self.named[p].clone(),
                        upper: self.named[q].clone(),
                    });
                }
            }
            for q in f.above {
                if let Some(p) = self.up[q].minus(f.above).first() {
                    return Err(SpaceViolation::AboveNotUpClosed {
                        fan: f.id.clone(),
                        lower: self.named[q].clone(),
                        upper: self.named[p].clone(),
                    });
                }
            }
        }
        for g in &self.fans {
            for f in &self.fans {
                if let Some(q) = g.above.inter(f.below).first() {
                    return Err(SpaceViolation::FanMembersComparable {
                        lower_fan: g.id.clone(),
                        upper_fan: f.id.clone(),
                        point: self.named[q].clone(),
                    });
                }
            }
        }
        for (x, y) in self.representative_pairs() {
            if !self.leq(x, y) && self.separating_upset(x, y).is_none() {
                return Err(SpaceViolation::Separation(self.point_name(x), self.point_name(y)));
            }
        }
        Ok(())
    }

    fn validate_named_order(&self) -> Result<(), OrderViolation> {
        let k = self.n_named();
        for i in 0..k {
            if !self.named_leq(i, i) {
                return Err(OrderViolation::Reflexivity(self.named[i].clone()));
            }
        }
        for i in 0..k {
            for j in (i + 1)..k {
                if self.named_leq(i, j) && self.named_leq(j, i) {
                    return Err(OrderViolation::Antisymmetry(self.named[i].clone(), self.named[j].clone()));
                }
            }
        }
        for i in 0..k {
            for j in self.up[i] {
                if let Some(l) = self.up[j].minus(self.up[i]).first() {
                    return Err(OrderViolation::Transitivity(
                        self.named[i].clone(),
                        self.named[j].clone(),
                        self.named[l].clone(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// Pairs of points covering every pair of point classes, including two
    /// distinct members of the same fan.
    fn representative_pairs(&self) -> Vec<(Point, Point)> {
        let mut pts: Vec<Point> = (0..self.n_named()).map(Point::Named).collect();
        pts.extend((0..self.n_fans()).map(|f| Point::Member { fan: f, index: 0 }));
        let mut out = Vec::new();
        for &x in &pts {
            for &y in &pts {
                if x != y {
                    out.push((x, y));
                }
            }
        }
        for f in 0..self.n_fans() {
            out.push((Point::Member { fan: f, index: 0 }, Point::Member { fan: f, index: 1 }));
        }
        out
    }

    /// A clopen upset containing `x` and not `y`, if one exists.
    ///
    /// Starting from `↑x`, each named limit in the set forces a cofinite
    /// tail of its fans (excluding `y` when possible), and each cofinite
    /// fan forces its limit. Every step is forced, so failure means no
    /// separating clopen upset exists.
    pub fn separating_upset(&self, x: Point, y: Point) -> Option<SymSet> {
        let mut s = self.up_closure(&self.singleton(x));
        loop {
            if s.contains(y) {
                return None;
            }
            let before = s.clone();
            for p in s.named() {
                for f in self.fans_at[p] {
                    if let FanPart::Fin(have) = s.fan_part(f) {
                        let excl = match y {
                            Point::Member { fan, index } if fan == f && index < MAX_BITS => {
                                Bits::singleton(index).minus(have)
                            }
                            _ => Bits::EMPTY,
                        };
                        s = s.with_fan(f, FanPart::Cofin(excl));
                    }
                }
            }
            s = self.closure(&self.up_closure(&s));
            if s == before {
                return (!s.contains(y)).then_some(s);
            }
        }
    }

    pub fn n_named(&self) -> usize {
        self.named.len()
    }

    pub fn n_fans(&self) -> usize {
        self.fans.len()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn named_ids(&self) -> &[String] {
        &self.named
    }

    pub fn named_id(&self, i: usize) -> &str {
        &self.named[i]
    }

    pub fn named_index(&self, id: &str) -> Result<usize> {
        self.index.get(id).copied().ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn named_set<S: AsRef<str>>(&self, ids: &[S]) -> Result<Bits> {
        ids.iter().map(|s| self.named_index(s.as_ref())).collect()
    }

    pub fn fans(&self) -> &[Fan] {
        &self.fans
    }

    pub fn fan(&self, f: usize) -> &Fan {
        &self.fans[f]
    }

    pub fn fan_index(&self, id: &str) -> Result<usize> {
        self.fans
            .iter()
            .position(|f| f.id == id)
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    /// Fans converging to the named point `p`.
    pub fn fans_at(&self, p: usize) -> Bits {
        self.fans_at[p]
    }

    pub fn all_named(&self) -> Bits {
        Bits::full(self.n_named())
    }

    pub fn named_leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn named_up(&self, i: usize) -> Bits {
        self.up[i]
    }

    pub fn named_down(&self, i: usize) -> Bits {
        self.down[i]
    }

    pub fn named_up_closure(&self, s: Bits) -> Bits {
        s.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn named_down_closure(&self, s: Bits) -> Bits {
        s.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    pub fn is_finite(&self) -> bool {
        self.fans.is_empty()
    }

    pub fn leq(&self, x: Point, y: Point) -> bool {
        match (x, y) {
            (Point::Named(i), Point::Named(j)) => self.named_leq(i, j),
            (Point::Named(q), Point::Member { fan, .. }) => self.fans[fan].below.contains(q),
            (Point::Member { fan, .. }, Point::Named(q)) => self.fans[fan].above.contains(q),
            (a, b) => a == b,
        }
    }

    pub fn point_classes(&self) -> Vec<PointClass> {
        (0..self.n_named())
            .map(PointClass::Named)
            .chain((0..self.n_fans()).map(PointClass::Generic))
            .collect()
    }

    pub fn point_name(&self, p: Point) -> String {
        match p {
            Point::Named(i) => self.named[i].clone(),
            Point::Member { fan, index } if index >= MAX_BITS => format!("{}[n]", self.fans[fan].id),
            Point::Member { fan, index } => format!("{}[{index}]", self.fans[fan].id),
        }
    }

    pub fn class_name(&self, c: PointClass) -> String {
        self.point_name(c.representative())
    }

    /// Parses `y`, `x[3]` or `x[n]` (the generic member).
    pub fn parse_point(&self, s: &str) -> Result<Point> {
        if let Some((fan, rest)) = s.split_once('[') {
            let f = self.fan_index(fan)?;
            let idx = rest.strip_suffix(']').ok_or_else(|| Error::UnknownElement(s.into()))?;
            let index = if idx == "n" {
                GENERIC_INDEX
            } else {
                idx.parse().map_err(|_| Error::UnknownElement(s.into()))?
            };
            Ok(Point::Member { fan: f, index })
        } else {
            self.named_index(s).map(Point::Named)
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "named {{{}}}", self.named.join(", "))?;
        for fan in &self.fans {
            write!(f, "; fan {} -> {}", fan.id, self.named[fan.limit])?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SpaceBuilder {
    json: SpaceJson,
}

impl SpaceBuilder {
    pub fn named<S: AsRef<str>>(mut self, ids: &[S]) -> Self {
        self.json.named.extend(ids.iter().map(|s| s.as_ref().to_string()));
        self
    }

    pub fn leq(mut self, a: &str, b: &str) -> Self {
        self.json.named_leq.push([a.into(), b.into()]);
        self
    }

    pub fn fan(mut self, id: &str, limit: &str, below: &[&str], above: &[&str]) -> Self {
        self.json.fans.push(FanJson {
            id: id.into(),
            limit: limit.into(),
            below: below.iter().map(|s| s.to_string()).collect(),
            above: above.iter().map(|s| s.to_string()).collect(),
        });
        self
    }

    pub fn json(&self) -> &SpaceJson {
        &self.json
    }

    pub fn build(self) -> Result<SpaceSpec> {
        SpaceSpec::from_json(&self.json)
    }
}
