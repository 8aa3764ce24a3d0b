//! The completions of a finite lattice, built from their lattice-level
//! definitions as families of subsets.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::DOWNSET_BOUND;

use super::{set_name, FinDLat};

/// Admissible-set enumeration is exponential in the lattice size.
const ADMISSIBLE_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CompletionKind {
    /// Normal ideals (Dedekind-MacNeille).
    Dm,
    /// D-ideals (Bruns-Lakser).
    Bl,
    /// All ideals.
    Ideal,
    /// Upsets of the prime filter poset.
    Canonical,
    /// The sublattice of D-ideals generated by relative annihilators.
    Ph,
}

impl CompletionKind {
    pub const ALL: [CompletionKind; 5] = [
        CompletionKind::Dm,
        CompletionKind::Bl,
        CompletionKind::Ideal,
        CompletionKind::Canonical,
        CompletionKind::Ph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CompletionKind::Dm => "dm",
            CompletionKind::Bl => "bl",
            CompletionKind::Ideal => "ideal",
            CompletionKind::Canonical => "canonical",
            CompletionKind::Ph => "ph",
        }
    }
}

impl fmt::Display for CompletionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CompletionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CompletionKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// A completion with the embedding of the original lattice.
#[derive(Clone, Debug)]
pub struct Completion {
    pub kind: CompletionKind,
    pub lattice: FinDLat,
    /// `embedding[a]` is the index of the image of `a`.
    pub embedding: Vec<usize>,
}

impl Completion {
    /// Whether the embedding is an order isomorphism onto the completion.
    pub fn is_identity_up_to_iso(&self, base: &FinDLat) -> bool {
        let n = base.len();
        if self.lattice.len() != n {
            return false;
        }
        let image: Bits = self.embedding.iter().copied().collect();
        image.len() == n
            && (0..n).all(|a| {
                (0..n).all(|b| base.leq(a, b) == self.lattice.leq(self.embedding[a], self.embedding[b]))
            })
            && self.lattice.is_isomorphic(base)
    }
}

impl FinDLat {
    pub fn completion(&self, kind: CompletionKind) -> Result<Completion> {
        let principal: Vec<Bits> = (0..self.len()).map(|a| self.poset().down_of(a)).collect();
        let (family, images) = match kind {
            CompletionKind::Ideal => (self.ideals()?, principal),
            CompletionKind::Dm => {
                let family = self
                    .ideals()?
                    .into_iter()
                    .filter(|&i| self.lower_bounds(self.upper_bounds(i)) == i)
                    .collect();
                (family, principal)
            }
            CompletionKind::Bl => (self.d_ideals()?, principal),
            CompletionKind::Ph => (self.ph_family()?, principal),
            CompletionKind::Canonical => {
                let spec = self.prime_filters();
                let family = spec.poset.dual().enumerate_downsets(DOWNSET_BOUND)?;
                let ids = spec.poset.ids().to_vec();
                let lattice = FinDLat::from_family(&family, |s| set_name(&ids, s, "∅"))?;
                let embedding = spec
                    .stone
                    .iter()
                    .map(|s| family.iter().position(|f| f == s).expect("stone image is an upset"))
                    .collect();
                return Ok(Completion {
                    kind,
                    lattice,
                    embedding,
                });
            }
        };
        let lattice = FinDLat::from_family(&family, |s| set_name(self.ids(), s, "∅"))?;
        let embedding = images
            .iter()
            .map(|s| family.iter().position(|f| f == s))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Precondition(format!("{kind} completion misses a principal ideal")))?;
        Ok(Completion {
            kind,
            lattice,
            embedding,
        })
    }

    /// Nonempty downsets closed under binary joins.
    pub fn ideals(&self) -> Result<Vec<Bits>> {
        Ok(self
            .poset()
            .enumerate_downsets(DOWNSET_BOUND)?
            .into_iter()
            .filter(|&d| {
                !d.is_empty() && d.iter().all(|a| d.iter().all(|b| d.contains(self.join(a, b))))
            })
            .collect())
    }

    /// Subsets whose join distributes over meets with every element,
    /// paired with that join.
    pub fn admissible_sets(&self) -> Result<Vec<(Bits, usize)>> {
        let n = self.len();
        if n > ADMISSIBLE_BOUND {
            return Err(Error::TooLarge {
                what: "lattice for admissible-set enumeration",
                limit: ADMISSIBLE_BOUND,
                got: n,
            });
        }
        let mut out = Vec::new();
        for m in 0..(1u64 << n) {
            let s = Bits(m);
            let j = self.join_of(s);
            let admissible = (0..n).all(|a| {
                let spread = s.iter().fold(self.bottom(), |acc, x| self.join(acc, self.meet(a, x)));
                self.meet(a, j) == spread
            });
            if admissible {
                out.push((s, j));
            }
        }
        Ok(out)
    }

    /// Downsets containing the join of every admissible subset.
    pub fn d_ideals(&self) -> Result<Vec<Bits>> {
        let adm = self.admissible_sets()?;
        Ok(self
            .poset()
            .enumerate_downsets(DOWNSET_BOUND)?
            .into_iter()
            .filter(|&d| adm.iter().all(|&(s, j)| !s.is_subset(d) || d.contains(j)))
            .collect())
    }

    fn ph_family(&self) -> Result<Vec<Bits>> {
        let d_ideals = self.d_ideals()?;
        let d_join = |a: Bits, b: Bits| {
            let u = a.union(b);
            d_ideals
                .iter()
                .filter(|d| u.is_subset(**d))
                .fold(self.all(), |acc, d| acc.inter(*d))
        };
        let mut family: Vec<Bits> = Vec::new();
        for a in 0..self.len() {
            for b in 0..self.len() {
                let r = self.relative_annihilator(a, b).ideal.members;
                if !family.contains(&r) {
                    family.push(r);
                }
            }
        }
        loop {
            let mut added = false;
            let snapshot = family.clone();
            for &x in &snapshot {
                for &y in &snapshot {
                    for z in [x.inter(y), d_join(x, y)] {
                        if !family.contains(&z) {
                            family.push(z);
                            added = true;
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
        family.sort_by(|a, b| crate::poset::lex_cmp(*a, *b));
        Ok(family)
    }
}
