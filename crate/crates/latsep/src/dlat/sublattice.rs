//! Transfer of subfitness and regularity between a lattice and a bounded
//! sublattice.

use serde::Serialize;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::FinPoset;

use super::{enumerate::bounded_sublattices, Axiom, FinDLat};

#[derive(Clone, Debug)]
pub struct SublatticePair {
    ambient: FinDLat,
    sub: Bits,
    lattice: FinDLat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SublatticeProperty {
    VSubfit,
    Regular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SublatticeReport {
    pub property: SublatticeProperty,
    pub join_dense: bool,
    pub meet_dense: bool,
    /// `a ≺_A b` iff `a ≺_B b` for all `a, b` in the sublattice.
    pub rather_below_agrees: bool,
    pub holds_in_sub: bool,
    pub holds_in_ambient: bool,
    /// Hypotheses met for the downward transfer (ambient to sub).
    pub down_applies: bool,
    /// Hypotheses met for the upward transfer (sub to ambient).
    pub up_applies: bool,
    /// `false` means a transfer theorem was contradicted.
    pub consistent: bool,
}

impl SublatticePair {
    pub fn new(ambient: FinDLat, sub: Bits) -> Result<SublatticePair> {
        let l = &ambient;
        if !sub.is_subset(l.all()) || !sub.contains(l.bottom()) || !sub.contains(l.top()) {
            return Err(Error::Precondition("sublattice must contain 0 and 1".into()));
        }
        for a in sub {
            for b in sub {
                if !sub.contains(l.meet(a, b)) || !sub.contains(l.join(a, b)) {
                    return Err(Error::Precondition(format!(
                        "not closed under meet and join at {} and {}",
                        l.id(a),
                        l.id(b)
                    )));
                }
            }
        }
        let keep: Vec<usize> = sub.iter().collect();
        let ids = keep.iter().map(|&i| l.id(i).to_string()).collect();
        let lattice = FinDLat::new(FinPoset::from_fn(ids, |i, j| l.leq(keep[i], keep[j]))?)?;
        Ok(SublatticePair { ambient, sub, lattice })
    }

    /// Every bounded sublattice of `l`.
    pub fn all_of(l: &FinDLat) -> Vec<SublatticePair> {
        bounded_sublattices(l)
            .into_iter()
            .map(|s| SublatticePair::new(l.clone(), s).expect("closed by construction"))
            .collect()
    }

    pub fn ambient(&self) -> &FinDLat {
        &self.ambient
    }

    pub fn sub(&self) -> Bits {
        self.sub
    }

    /// The sublattice as a lattice in its own right.
    pub fn sub_lattice(&self) -> &FinDLat {
        &self.lattice
    }

    /// Every element is the join of the sublattice elements below it.
    pub fn is_join_dense(&self) -> bool {
        let b = &self.ambient;
        (0..b.len()).all(|x| b.join_of(self.sub.inter(b.poset().down_of(x))) == x)
    }

    pub fn is_meet_dense(&self) -> bool {
        let b = &self.ambient;
        (0..b.len()).all(|x| b.meet_of(self.sub.inter(b.poset().up_of(x))) == x)
    }

    pub fn rather_below_agrees(&self) -> bool {
        let keep: Vec<usize> = self.sub.iter().collect();
        (0..keep.len()).all(|i| {
            (0..keep.len()).all(|j| self.lattice.rather_below(i, j) == self.ambient.rather_below(keep[i], keep[j]))
        })
    }

    pub fn experiment(&self, property: SublatticeProperty) -> SublatticeReport {
        let axiom = match property {
            SublatticeProperty::VSubfit => Axiom::VSubfit,
            SublatticeProperty::Regular => Axiom::Regular,
        };
        let join_dense = self.is_join_dense();
        let meet_dense = self.is_meet_dense();
        let agrees = self.rather_below_agrees();
        let holds_in_sub = self.lattice.check_axiom_def(axiom).verdict.holds() == Some(true);
        let holds_in_ambient = self.ambient.check_axiom_def(axiom).verdict.holds() == Some(true);
        let (down_applies, up_applies) = match property {
            SublatticeProperty::VSubfit => (meet_dense, join_dense && meet_dense),
            SublatticeProperty::Regular => (agrees && join_dense, agrees && join_dense && meet_dense),
        };
        let consistent =
            (!down_applies || !holds_in_ambient || holds_in_sub) && (!up_applies || !holds_in_sub || holds_in_ambient);
        SublatticeReport {
            property,
            join_dense,
            meet_dense,
            rather_below_agrees: agrees,
            holds_in_sub,
            holds_in_ambient,
            down_applies,
            up_applies,
            consistent,
        }
    }
}
