//! Finite posets over opaque string ids.
//!
//! Elements get indices in input order and every set-valued result is a
//! [`Bits`] over those indices, so output order is the input order.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bits::{Bits, MAX_BITS};
use crate::error::{Error, OrderViolation, Result};

/// Default cap on the number of elements for [`FinPoset::enumerate_downsets`].
pub const DOWNSET_BOUND: usize = 20;

#[derive(Clone, Debug)]
pub struct FinPoset {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    /// `up[i]` = `{ j : i <= j }`
    up: Vec<Bits>,
    /// `down[i]` = `{ j : j <= i }`
    down: Vec<Bits>,
}

/// Wire form: `{ "elements": [id..], "leq": [[id, id]..] }`.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct PosetJson {
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<[String; 2]>,
}

impl FinPoset {
    /// Builds the relation exactly as given, without closing or checking it.
    /// Call [`FinPoset::validate`] before relying on order laws.
    pub fn from_relation<S: AsRef<str>>(ids: &[S], pairs: &[(S, S)]) -> Result<FinPoset> {
        let mut p = FinPoset::empty(ids.iter().map(|s| s.as_ref().to_string()).collect())?;
        for (a, b) in pairs {
            let i = p.index_of(a.as_ref())?;
            let j = p.index_of(b.as_ref())?;
            p.up[i].insert(j);
            p.down[j].insert(i);
        }
        Ok(p)
    }

    /// Adds reflexive pairs, then validates.
    pub fn new<S: AsRef<str>>(ids: &[S], pairs: &[(S, S)]) -> Result<FinPoset> {
        let mut p = FinPoset::from_relation(ids, pairs)?;
        for i in 0..p.len() {
            p.up[i].insert(i);
            p.down[i].insert(i);
        }
        p.validate()?;
        Ok(p)
    }

    /// Builds a poset from an order predicate on indices. The predicate is
    /// trusted; use for orders that are correct by construction.
    pub fn from_fn(ids: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<FinPoset> {
        let mut p = FinPoset::empty(ids)?;
        let n = p.len();
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    p.up[i].insert(j);
                    p.down[j].insert(i);
                }
            }
        }
        Ok(p)
    }

    pub fn from_json(json: &PosetJson) -> Result<FinPoset> {
        let pairs: Vec<(&str, &str)> =
            json.leq.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let ids: Vec<&str> = json.elements.iter().map(String::as_str).collect();
        FinPoset::new(&ids, &pairs)
    }

    pub fn to_json(&self) -> PosetJson {
        let mut leq = Vec::new();
        for i in 0..self.len() {
            for j in self.up[i] {
                leq.push([self.ids[i].clone(), self.ids[j].clone()]);
            }
        }
        PosetJson {
            elements: self.ids.clone(),
            leq,
        }
    }

    fn empty(ids: Vec<String>) -> Result<FinPoset> {
        if ids.len() > MAX_BITS {
            return Err(Error::TooLarge {
                what: "poset",
                limit: MAX_BITS,
                got: ids.len(),
            });
        }
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::DuplicateId(id.clone()));
            }
        }
        let n = ids.len();
        Ok(FinPoset {
            ids,
            index,
            up: vec![Bits::EMPTY; n],
            down: vec![Bits::EMPTY; n],
        })
    }

    /// Checks reflexivity, antisymmetry and transitivity, in that order,
    /// reporting the first witness in index order.
    pub fn validate(&self) -> Result<(), OrderViolation> {
        let n = self.len();
        for i in 0..n {
            if !self.leq(i, i) {
                return Err(OrderViolation::Reflexivity(self.ids[i].clone()));
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if self.leq(i, j) && self.leq(j, i) {
                    return Err(OrderViolation::Antisymmetry(
                        self.ids[i].clone(),
                        self.ids[j].clone(),
                    ));
                }
            }
        }
        for i in 0..n {
            for j in self.up[i] {
                for k in self.up[j] {
                    if !self.leq(i, k) {
                        return Err(OrderViolation::Transitivity(
                            self.ids[i].clone(),
                            self.ids[j].clone(),
                            self.ids[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn all(&self) -> Bits {
        Bits::full(self.len())
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, i: usize) -> &str {
        &self.ids[i]
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownElement(id.to_string()))
    }

    pub fn set_of<S: AsRef<str>>(&self, ids: &[S]) -> Result<Bits> {
        ids.iter()
            .map(|s| self.index_of(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Bits::from_indices)
    }

    pub fn names(&self, s: Bits) -> Vec<String> {
        s.iter().map(|i| self.ids[i].clone()).collect()
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// `{ j : i <= j }`
    #[inline]
    pub fn up_of(&self, i: usize) -> Bits {
        self.up[i]
    }

    /// `{ j : j <= i }`
    #[inline]
    pub fn down_of(&self, i: usize) -> Bits {
        self.down[i]
    }

    pub fn up_closure(&self, s: Bits) -> Bits {
        s.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.up[i]))
    }

    pub fn down_closure(&self, s: Bits) -> Bits {
        s.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.down[i]))
    }

    pub fn is_upset(&self, s: Bits) -> bool {
        self.up_closure(s) == s
    }

    pub fn is_downset(&self, s: Bits) -> bool {
        self.down_closure(s) == s
    }

    pub fn minimals(&self) -> Bits {
        (0..self.len())
            .filter(|&i| self.down[i] == Bits::singleton(i))
            .collect()
    }

    pub fn maximals(&self) -> Bits {
        (0..self.len())
            .filter(|&i| self.up[i] == Bits::singleton(i))
            .collect()
    }

    /// Minimal elements of the subset `s`.
    pub fn minimals_of(&self, s: Bits) -> Bits {
        s.iter()
            .filter(|&i| self.down[i].inter(s) == Bits::singleton(i))
            .collect()
    }

    pub fn maximals_of(&self, s: Bits) -> Bits {
        s.iter()
            .filter(|&i| self.up[i].inter(s) == Bits::singleton(i))
            .collect()
    }

    /// The order-dual poset on the same ids.
    pub fn dual(&self) -> FinPoset {
        FinPoset {
            ids: self.ids.clone(),
            index: self.index.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// Induced subposet on `s`, ids kept, indices renumbered in order.
    pub fn restrict(&self, s: Bits) -> FinPoset {
        let keep: Vec<usize> = s.iter().collect();
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        FinPoset::from_fn(ids, |a, b| self.leq(keep[a], keep[b])).expect("subposet of a valid poset")
    }

    /// Lists every downset, ordered lexicographically by the increasing
    /// index sequences of their members.
    pub fn enumerate_downsets(&self, bound: usize) -> Result<Vec<Bits>> {
        if self.len() > bound {
            return Err(Error::TooLarge {
                what: "poset for downset enumeration",
                limit: bound,
                got: self.len(),
            });
        }
        let order = self.linear_extension();
        let mut out = Vec::new();
        self.downsets_rec(&order, 0, Bits::EMPTY, &mut out);
        out.sort_by(|a, b| lex_cmp(*a, *b));
        Ok(out)
    }

    fn downsets_rec(&self, order: &[usize], pos: usize, cur: Bits, out: &mut Vec<Bits>) {
        if pos == order.len() {
            out.push(cur);
            return;
        }
        let e = order[pos];
        self.downsets_rec(order, pos + 1, cur, out);
        let strict_below = self.down[e].minus(Bits::singleton(e));
        if strict_below.is_subset(cur) {
            self.downsets_rec(order, pos + 1, cur.with(e), out);
        }
    }

    /// Indices sorted so that every element comes after everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.len()).collect();
        idx.sort_by_key(|&i| (self.down[i].len(), i));
        idx
    }

    /// Canonical labelling form: two posets are isomorphic iff their
    /// canonical forms are equal.
    pub fn canonical_form(&self) -> CanonicalForm {
        canonical_form(self)
    }
}

/// Lexicographic order on the increasing index sequences of two sets.
pub fn lex_cmp(a: Bits, b: Bits) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let diff = a.0 ^ b.0;
    let d = diff.trailing_zeros() as usize;
    let above = |s: Bits| s.0 >> d >> 1 != 0;
    if a.contains(d) {
        // a continues with d, b continues with something larger or ends
        if above(b) {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    } else if above(a) {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub size: usize,
    pub rows: Vec<u64>,
}

fn canonical_form(p: &FinPoset) -> CanonicalForm {
    let n = p.len();
    if n == 0 {
        return CanonicalForm {
            size: 0,
            rows: Vec::new(),
        };
    }
    // Colour refinement on (down-degree, up-degree) and neighbour colours.
    let mut color: Vec<usize> = (0..n)
        .map(|i| p.down[i].len() * (MAX_BITS + 1) + p.up[i].len())
        .collect();
    color = relabel(&color.iter().map(|&c| vec![c]).collect::<Vec<_>>());
    loop {
        let sigs: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut below: Vec<usize> = p.down[i].iter().filter(|&j| j != i).map(|j| color[j]).collect();
                let mut above: Vec<usize> = p.up[i].iter().filter(|&j| j != i).map(|j| color[j]).collect();
                below.sort_unstable();
                above.sort_unstable();
                let mut sig = vec![color[i], below.len()];
                sig.extend(below);
                sig.push(usize::MAX);
                sig.extend(above);
                sig
            })
            .collect();
        let next = relabel(&sigs);
        let classes_before = color.iter().max().copied().unwrap_or(0);
        let classes_after = next.iter().max().copied().unwrap_or(0);
        color = next;
        if classes_after == classes_before {
            break;
        }
    }
    let k = color.iter().max().copied().unwrap_or(0) + 1;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for i in 0..n {
        classes[color[i]].push(i);
    }
    // Within a class, twins (same strict neighbourhood) are interchangeable,
    // so each class is permuted as a multiset of twin-group labels.
    let mut class_labels: Vec<Vec<usize>> = Vec::with_capacity(k);
    let mut class_groups: Vec<Vec<Vec<usize>>> = Vec::with_capacity(k);
    for members in &classes {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for &i in members {
            match groups.iter_mut().find(|g| twins(p, g[0], i)) {
                Some(g) => g.push(i),
                None => groups.push(vec![i]),
            }
        }
        let mut labels = Vec::new();
        for (gi, g) in groups.iter().enumerate() {
            labels.extend(std::iter::repeat_n(gi, g.len()));
        }
        class_labels.push(labels);
        class_groups.push(groups);
    }
    let mut best: Option<Vec<u64>> = None;
    let mut state = class_labels.clone();
    loop {
        let mut perm = Vec::with_capacity(n);
        for (labels, groups) in state.iter().zip(&class_groups) {
            let mut used = vec![0usize; groups.len()];
            for &l in labels {
                perm.push(groups[l][used[l]]);
                used[l] += 1;
            }
        }
        let rows: Vec<u64> = (0..n)
            .map(|a| {
                (0..n).fold(0u64, |acc, b| {
                    if p.leq(perm[a], perm[b]) {
                        acc | 1 << b
                    } else {
                        acc
                    }
                })
            })
            .collect();
        if best.as_ref().is_none_or(|b| rows < *b) {
            best = Some(rows);
        }
        // odometer over classes
        let mut c = 0;
        loop {
            if c == state.len() {
                return CanonicalForm {
                    size: n,
                    rows: best.expect("at least one labelling"),
                };
            }
            if next_permutation(&mut state[c]) {
                break;
            }
            // wrapped around to sorted order; carry
            c += 1;
        }
    }
}

fn twins(p: &FinPoset, a: usize, b: usize) -> bool {
    let mask = Bits::from_indices([a, b]);
    p.up[a].minus(mask) == p.up[b].minus(mask) && p.down[a].minus(mask) == p.down[b].minus(mask)
}

fn relabel(sigs: &[Vec<usize>]) -> Vec<usize> {
    let mut sorted: Vec<&Vec<usize>> = sigs.iter().collect();
    sorted.sort();
    sorted.dedup();
    sigs.iter()
        .map(|s| sorted.binary_search(&s).expect("present"))
        .collect()
}

/// Advances to the next lexicographic permutation; on the last one resets to
/// sorted order and returns `false`.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        v.reverse();
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinPoset {
        let ids: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        FinPoset::from_fn(ids, |a, b| a <= b).unwrap()
    }

    fn antichain(n: usize) -> FinPoset {
        let ids: Vec<String> = (0..n).map(|i| format!("a{i}")).collect();
        FinPoset::from_fn(ids, |a, b| a == b).unwrap()
    }

    fn diamond() -> FinPoset {
        FinPoset::new(
            &["0", "a", "b", "1"],
            &[("0", "a"), ("0", "b"), ("a", "1"), ("b", "1"), ("0", "1")],
        )
        .unwrap()
    }

    #[test]
    fn validate_examples() {
        assert!(FinPoset::new(&["0", "1"], &[("0", "1")]).is_ok());
        let p = FinPoset::from_relation(&["a", "b"], &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(p.validate(), Err(OrderViolation::Antisymmetry("a".into(), "b".into())));
        let p = FinPoset::from_relation(&["a", "b"], &[("b", "b")]).unwrap();
        assert_eq!(p.validate(), Err(OrderViolation::Reflexivity("a".into())));
        let p = FinPoset::from_relation(
            &["a", "b", "c"],
            &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")],
        )
        .unwrap();
        assert_eq!(
            p.validate(),
            Err(OrderViolation::Transitivity("a".into(), "b".into(), "c".into()))
        );
    }

    #[test]
    fn unknown_and_duplicate_ids() {
        assert!(matches!(
            FinPoset::new(&["a"], &[("a", "z")]),
            Err(Error::UnknownElement(z)) if z == "z"
        ));
        assert!(matches!(FinPoset::new(&["a", "a"], &[]), Err(Error::DuplicateId(_))));
        let p = chain(3);
        assert!(p.set_of(&["7"]).is_err());
    }

    #[test]
    fn closures() {
        let p = FinPoset::new(&["0", "a", "1"], &[("0", "a"), ("a", "1"), ("0", "1")]).unwrap();
        let a = p.set_of(&["a"]).unwrap();
        assert_eq!(p.names(p.up_closure(a)), vec!["a", "1"]);
        assert_eq!(p.up_closure(Bits::EMPTY), Bits::EMPTY);
        let d = diamond();
        assert_eq!(d.names(d.down_closure(d.set_of(&["a"]).unwrap())), vec!["0", "a"]);
    }

    #[test]
    fn extremal_points() {
        let c = chain(3);
        assert_eq!(c.names(c.minimals()), vec!["0"]);
        assert_eq!(c.names(c.maximals()), vec!["2"]);
        let a = antichain(4);
        assert_eq!(a.minimals(), a.all());
        assert_eq!(a.maximals(), a.all());
        let d = diamond();
        assert_eq!(d.names(d.minimals()), vec!["0"]);
    }

    #[test]
    fn downsets() {
        let c2 = chain(2);
        let ds = c2.enumerate_downsets(DOWNSET_BOUND).unwrap();
        assert_eq!(ds, vec![Bits::EMPTY, Bits::from_indices([0]), Bits::from_indices([0, 1])]);
        assert_eq!(antichain(3).enumerate_downsets(DOWNSET_BOUND).unwrap().len(), 8);
        assert!(matches!(
            antichain(21).enumerate_downsets(DOWNSET_BOUND),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn three_chain_downsets_match_brute_force() {
        // oracle: every subset, keep the down-closed ones
        let c = chain(3);
        let brute: Vec<Bits> = (0u64..8)
            .map(Bits)
            .filter(|&s| (0..3).all(|i| !s.contains(i) || c.down_of(i).is_subset(s)))
            .collect();
        assert_eq!(brute.len(), 4);
        let mut got = c.enumerate_downsets(DOWNSET_BOUND).unwrap();
        got.sort();
        assert_eq!(got, brute);
    }

    #[test]
    fn lex_order_is_sequence_order() {
        let seq = |s: Bits| s.iter().collect::<Vec<_>>();
        for a in 0u64..32 {
            for b in 0u64..32 {
                assert_eq!(lex_cmp(Bits(a), Bits(b)), seq(Bits(a)).cmp(&seq(Bits(b))));
            }
        }
    }

    #[test]
    fn canonical_form_detects_isomorphism() {
        // same diamond, different labelling
        let d1 = diamond();
        let d2 = FinPoset::new(
            &["x", "t", "b", "y"],
            &[("b", "x"), ("b", "y"), ("x", "t"), ("y", "t"), ("b", "t")],
        )
        .unwrap();
        assert_eq!(d1.canonical_form(), d2.canonical_form());
        assert_ne!(d1.canonical_form(), chain(4).canonical_form());
        let v = FinPoset::new(&["a", "b", "c"], &[("a", "b"), ("a", "c")]).unwrap();
        let lambda = FinPoset::new(&["a", "b", "c"], &[("a", "c"), ("b", "c")]).unwrap();
        assert_ne!(v.canonical_form(), lambda.canonical_form());
        assert_eq!(v.canonical_form(), lambda.dual().dual().dual().canonical_form());
    }
}
