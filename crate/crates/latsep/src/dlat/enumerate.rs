//! Enumeration of finite distributive lattices up to isomorphism.

use std::collections::BTreeMap;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::{CanonicalForm, FinPoset};

use super::FinDLat;

/// Largest `max_size` accepted by [`enumerate_dlats`].
pub const ENUMERATION_BOUND: usize = 10;

/// Every distributive lattice with `2..=max_size` elements, once per
/// isomorphism class, sorted by size and then by canonical form.
///
/// Lattices are downset lattices of posets. Posets are grown by adding a
/// new maximal element on top of a downset; the number of downsets never
/// drops when an element is added, which prunes the search.
pub fn enumerate_dlats(max_size: usize) -> Result<Vec<FinDLat>> {
    if max_size > ENUMERATION_BOUND {
        return Err(Error::TooLarge {
            what: "lattice enumeration size",
            limit: ENUMERATION_BOUND,
            got: max_size,
        });
    }
    let mut found: BTreeMap<(usize, CanonicalForm), FinPoset> = BTreeMap::new();
    let mut level = vec![FinPoset::new::<&str>(&[], &[])?];
    while !level.is_empty() {
        let mut next: BTreeMap<CanonicalForm, FinPoset> = BTreeMap::new();
        for p in &level {
            let k = p.len();
            for below in p.enumerate_downsets(k)? {
                let ids: Vec<String> = (0..=k).map(|i| format!("p{i}")).collect();
                let q = FinPoset::from_fn(ids, |i, j| {
                    if j == k {
                        i == k || below.contains(i)
                    } else {
                        i != k && p.leq(i, j)
                    }
                })?;
                let size = q.enumerate_downsets(k + 1)?.len();
                if size <= max_size {
                    next.entry(q.canonical_form()).or_insert(q);
                }
            }
        }
        for (form, q) in &next {
            let size = q.enumerate_downsets(q.len())?.len();
            found.entry((size, form.clone())).or_insert_with(|| q.clone());
        }
        level = next.into_values().collect();
    }
    found.values().map(FinDLat::downsets_of).collect()
}

/// Bounded sublattices of `l`: sets containing `0` and `1` closed under
/// meet and join.
pub(crate) fn bounded_sublattices(l: &FinDLat) -> Vec<Bits> {
    let bounds = Bits::singleton(l.bottom()).with(l.top());
    let rest: Vec<usize> = l.all().minus(bounds).iter().collect();
    let mut out = Vec::new();
    for m in 0..(1u64 << rest.len()) {
        let s = Bits::from_indices(Bits(m).iter().map(|i| rest[i])).union(bounds);
        let closed = s
            .iter()
            .all(|a| s.iter().all(|b| s.contains(l.meet(a, b)) && s.contains(l.join(a, b))));
        if closed {
            out.push(s);
        }
    }
    out
}
