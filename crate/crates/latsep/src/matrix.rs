//! The traceability matrix: for every finite distributive lattice up to a
//! size, each row compares a lattice condition, a dual-space condition and
//! a completion condition.
//!
//! Dual-space conditions are evaluated by the symbolic engine on the
//! fan-free dual, so this also cross-checks the two engines.

use serde::Serialize;

use crate::bits::Bits;
use crate::completions::{enumerate_shapes, ShapeBound, ViewKind};
use crate::dlat::{enumerate_dlats, Axiom, CompletionKind, FinDLat};
use crate::error::{Error, Result};
use crate::report::Verdict;
use crate::separations::{regular_part, BooleanTarget, Checker};
use crate::space::SpaceSpec;

pub const MATRIX_BOUND: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Table {
    Subfitness,
    Regularity,
    Booleanness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Row {
    BlSubfit,
    Subfit,
    ISubfit,
    BooleanSubfit,
    BlRegular,
    DmRegular,
    Regular,
    BooleanRegular,
    BlBoolean,
    DmBoolean,
    Boolean,
    IBoolean,
}

impl Row {
    pub const ALL: [Row; 12] = [
        Row::BlSubfit,
        Row::Subfit,
        Row::ISubfit,
        Row::BooleanSubfit,
        Row::BlRegular,
        Row::DmRegular,
        Row::Regular,
        Row::BooleanRegular,
        Row::BlBoolean,
        Row::DmBoolean,
        Row::Boolean,
        Row::IBoolean,
    ];

    pub fn table(self) -> Table {
        use Row::*;
        match self {
            BlSubfit | Subfit | ISubfit | BooleanSubfit => Table::Subfitness,
            BlRegular | DmRegular | Regular | BooleanRegular => Table::Regularity,
            BlBoolean | DmBoolean | Boolean | IBoolean => Table::Booleanness,
        }
    }

    /// Lattice condition, dual-space condition, completion condition.
    pub fn columns(self) -> [&'static str; 3] {
        use Row::*;
        match self {
            BlSubfit => ["BL-subfit (pH A subfit)", "min pX dense in pX", "BL A subfit"],
            Subfit => ["subfit", "min X dense in X", "DM A subfit"],
            ISubfit => ["every ideal is an intersection of maximal ideals", "min X dense in the Skula topology", "I A subfit"],
            BooleanSubfit => ["Boolean", "min X = X", "A^σ subfit"],
            BlRegular => ["BL-regular (pH A regular)", "R_BL(U) dense in U", "BL A regular"],
            DmRegular => ["subfit and BL-regular", "min X dense and R_BL(U) dense in U", "DM A regular"],
            Regular => ["regular", "R(U) dense in U", "BL A is A-regular"],
            BooleanRegular => ["Boolean", "R(U) = U", "I A regular"],
            BlBoolean => ["∧-subfit", "max X dense in X", "BL A Boolean"],
            DmBoolean => ["subfit and ∧-subfit", "min X and max X dense in X", "DM A Boolean"],
            Boolean => ["Boolean", "max X = X", "A^σ Boolean"],
            IBoolean => ["finite and Boolean", "max X = X and X finite", "I A Boolean"],
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Disagreement {
    pub row: Row,
    pub lattice: String,
    pub values: [bool; 3],
}

#[derive(Clone, Debug, Serialize)]
pub struct RowSummary {
    pub row: Row,
    pub table: Table,
    pub columns: [&'static str; 3],
    pub checked: usize,
    /// How many lattices satisfy the row (all three columns agreeing).
    pub holds: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatrixReport {
    pub max_size: usize,
    pub lattices: usize,
    pub rows: Vec<RowSummary>,
    pub disagreements: Vec<Disagreement>,
}

/// Evaluates the three columns of a row on one lattice.
pub fn evaluate_row(l: &FinDLat, row: Row) -> Result<[bool; 3]> {
    let ev = Evaluator::new(l)?;
    ev.row(row)
}

struct Evaluator<'a> {
    l: &'a FinDLat,
    space: SpaceSpec,
}

fn holds(v: Verdict) -> bool {
    v.holds().unwrap_or(false)
}

impl<'a> Evaluator<'a> {
    fn new(l: &'a FinDLat) -> Result<Evaluator<'a>> {
        Ok(Evaluator {
            l,
            space: l.prime_filters().to_space()?,
        })
    }

    fn axiom(&self, l: &FinDLat, ax: Axiom) -> bool {
        holds(l.check_axiom_def(ax).verdict)
    }

    fn of(&self, kind: CompletionKind, ax: Axiom) -> Result<bool> {
        Ok(self.axiom(&self.l.completion(kind)?.lattice, ax))
    }

    fn checker(&self) -> Checker<'_> {
        Checker::new(&self.space, ShapeBound::default())
    }

    fn row(&self, row: Row) -> Result<[bool; 3]> {
        use Axiom::{Boolean as B, Regular as R, VSubfit as V, WSubfit as W};
        use CompletionKind::*;
        let l = self.l;
        let c = self.checker();
        let min_dense = holds(c.subfit_l().verdict);
        let max_dense = holds(c.wsubfit_l().verdict);
        Ok(match row {
            Row::BlSubfit => {
                let ph = l.completion(Ph)?.lattice;
                let dual = SpaceSpec::from_poset(&ph.prime_filters().poset)?;
                let min_dense_ph = holds(Checker::new(&dual, ShapeBound::default()).subfit_l().verdict);
                [self.axiom(&ph, V), min_dense_ph, self.of(Bl, V)?]
            }
            Row::Subfit => [self.axiom(l, V), min_dense, self.of(Dm, V)?],
            Row::ISubfit => [self.ideals_meet_maximal()?, holds(c.skula_cross()?.verdict), self.of(Ideal, V)?],
            Row::BooleanSubfit => [self.axiom(l, B), holds(c.subfit_sigma().verdict), self.of(Canonical, V)?],
            Row::BlRegular => [self.of(Ph, R)?, holds(c.regular(ViewKind::Bl)?.verdict), self.of(Bl, R)?],
            Row::DmRegular => [
                self.axiom(l, V) && self.of(Bl, R)?,
                min_dense && holds(c.regular(ViewKind::Bl)?.verdict),
                self.of(Dm, R)?,
            ],
            Row::Regular => [self.axiom(l, R), holds(c.regular(ViewKind::L)?.verdict), self.bl_a_regular()?],
            Row::BooleanRegular => [self.axiom(l, B), self.regular_part_is_identity()?, self.of(Ideal, R)?],
            Row::BlBoolean => [self.axiom(l, W), max_dense, self.of(Bl, B)?],
            Row::DmBoolean => [self.axiom(l, V) && self.axiom(l, W), min_dense && max_dense, self.of(Dm, B)?],
            Row::Boolean => [self.axiom(l, B), holds(c.boolean(BooleanTarget::L)?.verdict), self.of(Canonical, B)?],
            Row::IBoolean => [
                self.axiom(l, B),
                holds(c.boolean(BooleanTarget::I)?.verdict),
                self.of(Ideal, B)?,
            ],
        })
    }

    /// Every ideal is the intersection of the maximal ideals containing it.
    fn ideals_meet_maximal(&self) -> Result<bool> {
        let all = self.l.all();
        let ideals = self.l.ideals()?;
        let proper: Vec<Bits> = ideals.iter().copied().filter(|&i| i != all).collect();
        let maximal: Vec<Bits> = proper
            .iter()
            .copied()
            .filter(|&m| !proper.iter().any(|&j| j != m && m.is_subset(j)))
            .collect();
        Ok(ideals.iter().all(|&j| {
            let meet = maximal
                .iter()
                .filter(|m| j.is_subset(**m))
                .fold(all, |acc, &m| acc.inter(m));
            meet == j
        }))
    }

    /// `R(U) = U` for every clopen upset.
    fn regular_part_is_identity(&self) -> Result<bool> {
        let sp = &self.space;
        let shapes = enumerate_shapes(sp, ShapeBound::default(), ViewKind::L)?;
        for u in &shapes {
            if regular_part(sp, u)? != *u {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `b ≰ d` in BL A yields `a ∈ A` with `a ◁ b` and `a ≰ d`, where
    /// `a ◁ b` means `a ≺ c ≤ b` for some `c ∈ A`.
    fn bl_a_regular(&self) -> Result<bool> {
        let l = self.l;
        let bl = l.completion(CompletionKind::Bl)?;
        let b = &bl.lattice;
        let e = &bl.embedding;
        let n = l.len();
        let lhd = |a: usize, x: usize| (0..n).any(|c| l.rather_below(a, c) && b.leq(e[c], x));
        Ok((0..b.len()).all(|x| {
            (0..b.len()).all(|d| b.leq(x, d) || (0..n).any(|a| lhd(a, x) && !b.leq(e[a], d)))
        }))
    }
}

/// Runs every row on every distributive lattice with at most `max_size`
/// elements.
pub fn verify_matrix(max_size: usize) -> Result<MatrixReport> {
    if max_size > MATRIX_BOUND {
        return Err(Error::TooLarge {
            what: "matrix lattice size",
            limit: MATRIX_BOUND,
            got: max_size,
        });
    }
    let lattices = enumerate_dlats(max_size)?;
    let mut rows: Vec<RowSummary> = Row::ALL
        .iter()
        .map(|&row| RowSummary {
            row,
            table: row.table(),
            columns: row.columns(),
            checked: 0,
            holds: 0,
        })
        .collect();
    let mut disagreements = Vec::new();
    for l in &lattices {
        let ev = Evaluator::new(l)?;
        for summary in rows.iter_mut() {
            let values = ev.row(summary.row)?;
            summary.checked += 1;
            if values[0] == values[1] && values[1] == values[2] {
                summary.holds += values[0] as usize;
            } else {
                disagreements.push(Disagreement {
                    row: summary.row,
                    lattice: describe(l),
                    values,
                });
            }
        }
    }
    Ok(MatrixReport {
        max_size,
        lattices: lattices.len(),
        rows,
        disagreements,
    })
}

fn describe(l: &FinDLat) -> String {
    let p = l.poset();
    let covers: Vec<String> = (0..l.len())
        .flat_map(|a| (0..l.len()).map(move |b| (a, b)))
        .filter(|&(a, b)| a != b && p.leq(a, b))
        .map(|(a, b)| format!("{}<{}", l.id(a), l.id(b)))
        .collect();
    format!("{} elements: {}", l.len(), covers.join(" "))
}

impl MatrixReport {
    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "# Matrix over {} distributive lattices with at most {} elements\n\n",
            self.lattices, self.max_size
        );
        s.push_str("| table | lattice | dual space | completion | checked | holds |\n|---|---|---|---|---|---|\n");
        for r in &self.rows {
            s.push_str(&format!(
                "| {:?} | {} | {} | {} | {} | {} |\n",
                r.table, r.columns[0], r.columns[1], r.columns[2], r.checked, r.holds
            ));
        }
        s.push_str(&format!("\ndisagreements: {}\n", self.disagreements.len()));
        for d in &self.disagreements {
            s.push_str(&format!("- {:?} on {}: {:?}\n", d.row, d.lattice, d.values));
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_boolean_row() {
        let sq = FinDLat::boolean(2).unwrap();
        assert_eq!(evaluate_row(&sq, Row::Boolean).unwrap(), [true; 3]);
    }

    #[test]
    fn three_chain_meet_subfit_row() {
        let c3 = FinDLat::chain(3).unwrap();
        assert_eq!(evaluate_row(&c3, Row::BlBoolean).unwrap(), [false; 3]);
    }

    #[test]
    fn small_matrix_is_clean() {
        let m = verify_matrix(4).unwrap();
        assert_eq!(m.lattices, 4);
        assert!(m.disagreements.is_empty(), "{:?}", m.disagreements);
        assert!(verify_matrix(9).is_err());
    }
}
