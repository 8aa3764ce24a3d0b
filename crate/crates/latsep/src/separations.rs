//! Separation axioms on fan spaces.
//!
//! Pointwise criteria are exact. Universal statements over lattice
//! elements are checked over the symbolic shapes at a bound; a false
//! verdict always carries a concrete witness, and a positive one is
//! reported as verified at that bound unless the space has no fans, in
//! which case the shapes are every element and the verdict is exact.

use std::fmt;
use std::str::FromStr;

use crate::completions::{bl_pseudocomplement, rel_annihilator_upset, LatticeView, ShapeBound, ViewKind};
use crate::error::{Error, Result};
use crate::report::{CheckReport, PairWitness, Verdict, Witness};
use crate::space::{Point, PointClass, SpaceSpec};
use crate::symset::{FanPart, SymSet};

/// A named separation check on a space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceCheck {
    SubfitL,
    WsubfitL,
    SubfitSigma,
    ISubfit,
    SkulaCross,
    SubfitView(ViewKind),
    RegularL,
    RegularBl,
    ARegularBl,
    Boolean(BooleanTarget),
    ProHeyting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BooleanTarget {
    L,
    Dm,
    Bl,
    I,
    Sigma,
}

impl SpaceCheck {
    pub const ALL: [SpaceCheck; 18] = [
        SpaceCheck::SubfitL,
        SpaceCheck::WsubfitL,
        SpaceCheck::SubfitSigma,
        SpaceCheck::ISubfit,
        SpaceCheck::SkulaCross,
        SpaceCheck::SubfitView(ViewKind::Dm),
        SpaceCheck::SubfitView(ViewKind::Bl),
        SpaceCheck::SubfitView(ViewKind::Ph),
        SpaceCheck::SubfitView(ViewKind::OpUp),
        SpaceCheck::RegularL,
        SpaceCheck::RegularBl,
        SpaceCheck::ARegularBl,
        SpaceCheck::Boolean(BooleanTarget::L),
        SpaceCheck::Boolean(BooleanTarget::Dm),
        SpaceCheck::Boolean(BooleanTarget::Bl),
        SpaceCheck::Boolean(BooleanTarget::I),
        SpaceCheck::Boolean(BooleanTarget::Sigma),
        SpaceCheck::ProHeyting,
    ];

    pub fn name(self) -> String {
        match self {
            SpaceCheck::SubfitL => "subfit_L".into(),
            SpaceCheck::WsubfitL => "wsubfit_L".into(),
            SpaceCheck::SubfitSigma => "subfit_sigma".into(),
            SpaceCheck::ISubfit => "I_subfit".into(),
            SpaceCheck::SkulaCross => "skula_cross".into(),
            SpaceCheck::SubfitView(k) => format!("subfit_{k}"),
            SpaceCheck::RegularL => "regular_L".into(),
            SpaceCheck::RegularBl => "regular_BL".into(),
            SpaceCheck::ARegularBl => "A_regular_BL".into(),
            SpaceCheck::Boolean(t) => format!("boolean_{t}"),
            SpaceCheck::ProHeyting => "proheyting".into(),
        }
    }
}

impl fmt::Display for SpaceCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for SpaceCheck {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpaceCheck::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

impl fmt::Display for BooleanTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BooleanTarget::L => "L",
            BooleanTarget::Dm => "DM",
            BooleanTarget::Bl => "BL",
            BooleanTarget::I => "I",
            BooleanTarget::Sigma => "sigma",
        })
    }
}

/// Runs checks on one space at one shape bound.
///
/// Hint sets are tried before enumerated shapes when searching for
/// witnesses, so reports can follow a known argument.
#[derive(Clone, Debug)]
pub struct Checker<'a> {
    space: &'a SpaceSpec,
    bound: ShapeBound,
    hints: Vec<SymSet>,
}

impl<'a> Checker<'a> {
    pub fn new(space: &'a SpaceSpec, bound: ShapeBound) -> Checker<'a> {
        Checker {
            space,
            bound,
            hints: Vec::new(),
        }
    }

    pub fn with_hints(mut self, hints: Vec<SymSet>) -> Checker<'a> {
        self.hints = hints;
        self
    }

    pub fn space(&self) -> &'a SpaceSpec {
        self.space
    }

    pub fn bound(&self) -> ShapeBound {
        self.bound
    }

    pub fn run(&self, check: SpaceCheck) -> Result<CheckReport> {
        Ok(match check {
            SpaceCheck::SubfitL => self.subfit_l(),
            SpaceCheck::WsubfitL => self.wsubfit_l(),
            SpaceCheck::SubfitSigma => self.subfit_sigma(),
            SpaceCheck::ISubfit => self.i_subfit(),
            SpaceCheck::SkulaCross => self.skula_cross()?,
            SpaceCheck::SubfitView(k) => self.subfit_view(k)?,
            SpaceCheck::RegularL => self.regular(ViewKind::L)?,
            SpaceCheck::RegularBl => self.regular(ViewKind::Bl)?,
            SpaceCheck::ARegularBl => self.a_regular_bl()?,
            SpaceCheck::Boolean(t) => self.boolean(t)?,
            SpaceCheck::ProHeyting => self.proheyting()?,
        })
    }

    /// Positive verdict for a search over shapes.
    fn searched(&self) -> Verdict {
        if self.space.is_finite() {
            Verdict::True
        } else {
            Verdict::VerifiedAtBound(self.bound.k())
        }
    }

    fn point_witness(&self, p: Point) -> Witness {
        Witness::Point {
            point: self.space.point_name(p),
        }
    }

    fn set_json(&self, s: &SymSet) -> crate::symset::SymSetJson {
        self.space.set_to_json(s)
    }

    /// `s` dense in `X`, with the first point outside `cl s` on failure.
    fn density(&self, s: &SymSet) -> (bool, Option<Point>) {
        let x = self.space.full();
        let gap = x.minus(&self.space.closure(s));
        (gap.is_empty(), self.space.some_point(&gap))
    }

    fn density_report(&self, axiom: &str, target: &str, s: &SymSet, what: &str, basis: &str) -> CheckReport {
        let (dense, gap) = self.density(s);
        let mut r = CheckReport::new(axiom, target, Verdict::from_bool(dense)).step(
            format!("{what} = {} is dense in X", self.space.show(s)),
            dense,
            basis,
        );
        if let Some(p) = gap {
            r.witness = Some(self.point_witness(p));
        }
        r
    }

    /// Subfitness of `L(X)`: `min X` is dense in `X`.
    pub fn subfit_l(&self) -> CheckReport {
        self.density_report(
            "subfit",
            "L",
            &self.space.min_set(),
            "min X",
            "L(X) is subfit iff min X is dense in X",
        )
    }

    /// ∧-subfitness of `L(X)`: `max X` is dense in `X`.
    pub fn wsubfit_l(&self) -> CheckReport {
        self.density_report(
            "wsubfit",
            "L",
            &self.space.max_set(),
            "max X",
            "L(X) is ∧-subfit iff max X is dense in X",
        )
    }

    /// Subfitness of `Up(X)`: the order is trivial, i.e. `min X = X`.
    pub fn subfit_sigma(&self) -> CheckReport {
        let min = self.space.min_set();
        let gap = self.space.full().minus(&min);
        let ok = gap.is_empty();
        let mut r = CheckReport::new("subfit", "sigma", Verdict::from_bool(ok)).step(
            format!("min X = {} equals X", self.space.show(&min)),
            ok,
            "Up(X) is subfit iff L(X) is Boolean iff min X = X",
        );
        if let Some(p) = self.space.some_point(&gap) {
            r.witness = Some(self.point_witness(p));
        }
        r
    }

    /// Subfitness of `OpUp(X)`: `x ∈ cl(min ↓x)` for every point class.
    pub fn i_subfit(&self) -> CheckReport {
        let sp = self.space;
        let min = sp.min_set();
        let mut r = CheckReport::new("subfit", "I", Verdict::True);
        for c in sp.point_classes() {
            let p = concrete(c);
            let m = min.inter(&sp.down_closure(&sp.singleton(p)));
            if !sp.closure(&m).contains(p) {
                let name = sp.class_name(c);
                r.verdict = Verdict::False;
                r.witness = Some(Witness::Point { point: name.clone() });
                return r.step(
                    format!("min ↓{name} = {}, whose closure misses {name}", sp.show(&m)),
                    false,
                    "OpUp(X) is subfit iff x ∈ cl(min ↓x) for every x",
                );
            }
        }
        r.step(
            format!("x ∈ cl(min ↓x) for all {} point classes", sp.point_classes().len()),
            true,
            "OpUp(X) is subfit iff x ∈ cl(min ↓x) for every x",
        )
    }

    /// Bounded cross-check: every nonempty `U ∖ V` with `U, V` open upsets
    /// meets `min X`.
    pub fn skula_cross(&self) -> Result<CheckReport> {
        let sp = self.space;
        let min = sp.min_set();
        let opens = LatticeView::new(sp, ViewKind::OpUp).shapes(self.bound)?;
        let basis = "OpUp(X) is subfit iff min X is dense in the Skula topology";
        for u in &opens {
            for v in &opens {
                let d = u.minus(v);
                if !d.is_empty() && !d.intersects(&min) {
                    return Ok(CheckReport::new("skula_density", "I", Verdict::False)
                        .with_witness(Witness::SetPair {
                            u: self.set_json(u),
                            v: self.set_json(v),
                        })
                        .step(format!("U ∖ V = {} misses min X", sp.show(&d)), false, basis));
                }
            }
        }
        let v = self.searched();
        Ok(CheckReport::new("skula_density", "I", v).step(
            format!("min X meets every nonempty U ∖ V over {} open upsets", opens.len()),
            v,
            basis,
        ))
    }

    /// Regularity of `L(X)` (`R(U)` dense in `U`) or of `BL(X)`
    /// (`R_BL(U)` dense in `U`), for every clopen upset `U`.
    pub fn regular(&self, target: ViewKind) -> Result<CheckReport> {
        let sp = self.space;
        let (part, basis): (PartFn, &str) = match target {
            ViewKind::L => (regular_part, "L(X) is regular iff R(U) is dense in U for each clopen upset U"),
            ViewKind::Bl => (
                regular_part_bl,
                "BL(X) is regular iff R_BL(U) is dense in U for each clopen upset U",
            ),
            other => return Err(Error::Precondition(format!("regularity of {other} is not supported"))),
        };
        let view = LatticeView::new(sp, ViewKind::L);
        let mut candidates: Vec<SymSet> = Vec::new();
        for h in &self.hints {
            if view.is_member(h)? {
                candidates.push(h.clone());
            }
        }
        let shapes = view.shapes(self.bound)?;
        let checked = shapes.len();
        candidates.extend(shapes);
        let axiom = "regular";
        for u in &candidates {
            let r = part(sp, u)?;
            if !sp.is_dense(&r, u)? {
                let rname = if target == ViewKind::L { "R" } else { "R_BL" };
                return Ok(CheckReport::new(axiom, target.name(), Verdict::False)
                    .with_witness(Witness::Set { set: self.set_json(u) })
                    .step(
                        format!("{rname}(U) = {} is not dense in U = {}", sp.show(&r), sp.show(u)),
                        false,
                        basis,
                    ));
            }
        }
        let v = self.searched();
        Ok(CheckReport::new(axiom, target.name(), v).step(
            format!("density holds for all {checked} clopen upsets"),
            v,
            basis,
        ))
    }

    /// `BL(X)` is `L(X)`-regular iff `L(X)` is regular, since `L(X)` is
    /// join-dense in `BL(X)`.
    pub fn a_regular_bl(&self) -> Result<CheckReport> {
        let inner = self.regular(ViewKind::L)?;
        let mut r = CheckReport::new("A_regular", "BL", inner.verdict);
        r.witness = inner.witness;
        r.trace = inner.trace;
        let v = r.verdict;
        Ok(r.step(
            "BL(X) is L(X)-regular iff L(X) is regular",
            v,
            "for a join-dense sublattice A of B, B is A-regular iff A is regular",
        ))
    }

    pub fn boolean(&self, target: BooleanTarget) -> Result<CheckReport> {
        let sp = self.space;
        let max = sp.max_set();
        let x = sp.full();
        let tname = target.to_string();
        let r = match target {
            BooleanTarget::L | BooleanTarget::Sigma => {
                let gap = x.minus(&max);
                let ok = gap.is_empty();
                let basis = if target == BooleanTarget::L {
                    "L(X) is Boolean iff max X = X"
                } else {
                    "Up(X) is Boolean iff L(X) is Boolean iff max X = X"
                };
                let mut r = CheckReport::new("boolean", tname, Verdict::from_bool(ok)).step(
                    format!("max X = {} equals X", sp.show(&max)),
                    ok,
                    basis,
                );
                if let Some(p) = sp.some_point(&gap) {
                    r.witness = Some(self.point_witness(p));
                }
                r
            }
            BooleanTarget::I => {
                let gap = x.minus(&max);
                let ok = gap.is_empty() && sp.is_finite();
                let mut r = CheckReport::new("boolean", tname, Verdict::from_bool(ok))
                    .step(format!("max X = {} equals X", sp.show(&max)), gap.is_empty(), "OpUp(X) is Boolean iff max X = X and X is finite")
                    .step(format!("X has {} fans", sp.n_fans()), sp.is_finite(), "OpUp(X) is Boolean iff max X = X and X is finite");
                if let Some(p) = sp.some_point(&gap) {
                    r.witness = Some(self.point_witness(p));
                } else if let Some(f) = sp.fans().first() {
                    r.witness = Some(Witness::Point {
                        point: format!("{}[n]", f.id),
                    });
                }
                r
            }
            BooleanTarget::Bl => {
                let mut r = self.density_report("boolean", "BL", &max, "max X", "BL(X) is Boolean iff max X is dense in X");
                let (ok, note) = self.bl_complements()?;
                r = r.step(note, ok, "cross-check: U ∨ ¬U = X for BL shapes");
                r
            }
            BooleanTarget::Dm => {
                let (min_dense, min_gap) = self.density(&sp.min_set());
                let (max_dense, max_gap) = self.density(&max);
                let ok = min_dense && max_dense;
                let basis = "DM(X) is Boolean iff min X and max X are both dense in X";
                let mut r = CheckReport::new("boolean", tname, Verdict::from_bool(ok))
                    .step(format!("min X = {} is dense", sp.show(&sp.min_set())), min_dense, basis)
                    .step(format!("max X = {} is dense", sp.show(&max)), max_dense, basis);
                if let Some(p) = min_gap.or(max_gap) {
                    r.witness = Some(self.point_witness(p));
                }
                let (found, note) = self.dm_complements()?;
                r.step(note, found, "cross-check: complements among DM shapes")
            }
        };
        Ok(r)
    }

    /// Whether every BL shape joins with its pseudocomplement to `X`.
    fn bl_complements(&self) -> Result<(bool, String)> {
        let sp = self.space;
        let view = LatticeView::new(sp, ViewKind::Bl);
        let shapes = view.shapes(self.bound)?;
        for u in &shapes {
            let nu = bl_pseudocomplement(sp, u)?;
            if view.join(u, &nu) != sp.full() {
                return Ok((false, format!("U ∨ ¬U ≠ X at U = {}", sp.show(u))));
            }
        }
        Ok((true, format!("U ∨ ¬U = X for all {} BL shapes", shapes.len())))
    }

    /// Whether every DM shape has a complement among DM shapes.
    fn dm_complements(&self) -> Result<(bool, String)> {
        let sp = self.space;
        let view = LatticeView::new(sp, ViewKind::Dm);
        let shapes = view.shapes(self.bound)?;
        for u in &shapes {
            let found = shapes
                .iter()
                .any(|w| !u.intersects(w) && view.join(u, w) == sp.full());
            if !found {
                return Ok((false, format!("no complement of {} among DM shapes", sp.show(u))));
            }
        }
        Ok((true, format!("every one of {} DM shapes has a complement", shapes.len())))
    }

    /// Every relative annihilator `X ∖ ↓(a ∖ b)` is a DM-upset.
    pub fn proheyting(&self) -> Result<CheckReport> {
        let sp = self.space;
        let l = LatticeView::new(sp, ViewKind::L).shapes(self.bound)?;
        let dm = LatticeView::new(sp, ViewKind::Dm);
        let basis = "proHeyting iff every relative annihilator is normal, i.e. a DM-upset";
        for a in &l {
            for b in &l {
                let r = rel_annihilator_upset(sp, a, b)?;
                if !dm.is_member(&r)? {
                    return Ok(CheckReport::new("proheyting", "L", Verdict::False)
                        .with_witness(Witness::SetPair {
                            u: self.set_json(a),
                            v: self.set_json(b),
                        })
                        .step(
                            format!("X ∖ ↓(a ∖ b) = {} is not a fixpoint of int1 cl2", sp.show(&r)),
                            false,
                            basis,
                        ));
                }
            }
        }
        let v = self.searched();
        Ok(CheckReport::new("proheyting", "L", v).step(
            format!("all {} annihilators are DM-upsets", l.len() * l.len()),
            v,
            basis,
        ))
    }

    /// Subfitness of a view: every `U ⊄ V` has `W` with `U ∨ W = X ≠ V ∨ W`.
    ///
    /// Witnesses are searched among hints, then shapes at the bound, then
    /// shapes at the doubled bound. Pairs with no witness give a false
    /// verdict only if an exact criterion confirms it (min X dense for DM,
    /// the pointwise criterion for OpUp); otherwise the verdict is unknown.
    pub fn subfit_view(&self, kind: ViewKind) -> Result<CheckReport> {
        let exact = match kind {
            ViewKind::Dm => Some(self.subfit_l()),
            ViewKind::OpUp => Some(self.i_subfit()),
            ViewKind::Bl | ViewKind::Ph => None,
            other => return Err(Error::Precondition(format!("subfitness search for {other} is not supported"))),
        };
        let sp = self.space;
        let x = sp.full();
        let view = LatticeView::new(sp, kind);
        let members = view.shapes(self.bound)?;
        let mut first: Vec<SymSet> = Vec::new();
        for h in &self.hints {
            if view.is_member(h)? && !first.contains(h) {
                first.push(h.clone());
            }
        }
        first.extend(members.iter().filter(|m| !self.hints.contains(m)).cloned());
        let mut escalated: Option<Vec<SymSet>> = None;
        let mut map = Vec::new();
        let mut unseparated: Option<(SymSet, SymSet)> = None;
        let separates = |u: &SymSet, v: &SymSet, w: &SymSet| view.join(u, w) == x && view.join(v, w) != x;
        'pairs: for u in &members {
            for v in &members {
                if u.is_subset(v) {
                    continue;
                }
                if let Some(w) = first.iter().find(|w| separates(u, v, w)) {
                    map.push(self.pair_witness(u, v, w));
                    continue;
                }
                if let Some(big) = self.bound.escalated() {
                    let cands = match &mut escalated {
                        Some(c) => c,
                        None => escalated.insert(view.shapes(big)?),
                    };
                    if let Some(w) = cands.iter().find(|w| separates(u, v, w)) {
                        map.push(self.pair_witness(u, v, w));
                        continue;
                    }
                }
                unseparated = Some((u.clone(), v.clone()));
                break 'pairs;
            }
        }
        let axiom = "subfit";
        let search_note = match &unseparated {
            None => format!("every pair U ⊄ V among {} members has a witness W", members.len()),
            Some((u, v)) => format!(
                "no W separates U = {} from V = {} up to bound {}",
                sp.show(u),
                sp.show(v),
                self.bound.escalated().unwrap_or(self.bound).k()
            ),
        };
        let search_basis = "U ∨ W = 1 ≠ V ∨ W";
        let mut report = match (&unseparated, exact) {
            (None, None) => CheckReport::new(axiom, kind.name(), self.searched()),
            (None, Some(e)) if e.verdict.is_false() => {
                // The exact criterion outranks a bounded search.
                let mut r = CheckReport::new(axiom, kind.name(), Verdict::False);
                r.witness = e.witness;
                r.trace = e.trace;
                r.step("no counterexample pair within the bound", "exact criterion decides", search_basis)
            }
            (None, Some(_)) => CheckReport::new(axiom, kind.name(), self.searched()),
            (Some((u, v)), Some(e)) if e.verdict.is_false() => {
                let mut r = CheckReport::new(axiom, kind.name(), Verdict::False).with_witness(Witness::SetPair {
                    u: self.set_json(u),
                    v: self.set_json(v),
                });
                r.trace = e.trace;
                r
            }
            (Some(_), Some(e)) => {
                let mut r = CheckReport::new(axiom, kind.name(), Verdict::Unknown);
                r.trace = e.trace;
                r
            }
            (Some(_), None) => CheckReport::new(axiom, kind.name(), Verdict::Unknown),
        };
        report.witness_map = map;
        let v = report.verdict;
        let _ = v;
        Ok(report.step(search_note, unseparated.is_none(), search_basis))
    }

    fn pair_witness(&self, u: &SymSet, v: &SymSet, w: &SymSet) -> PairWitness {
        PairWitness {
            u: self.set_json(u),
            v: self.set_json(v),
            w: self.set_json(w),
        }
    }
}

/// A concrete point standing for its class in set computations.
fn concrete(c: PointClass) -> Point {
    match c {
        PointClass::Named(i) => Point::Named(i),
        PointClass::Generic(f) => Point::Member { fan: f, index: 0 },
    }
}

fn require_l(space: &SpaceSpec, s: &SymSet) -> Result<()> {
    if LatticeView::new(space, ViewKind::L).is_member(s)? {
        Ok(())
    } else {
        Err(Error::NotMember {
            kind: "L".into(),
            set: space.show(s),
        })
    }
}

/// `a ≺ b` in `L(X)`: `↓a ⊆ b`.
type PartFn = fn(&SpaceSpec, &SymSet) -> Result<SymSet>;

pub fn rather_below_sym(space: &SpaceSpec, a: &SymSet, b: &SymSet) -> Result<bool> {
    require_l(space, a)?;
    require_l(space, b)?;
    Ok(space.down_closure(a).is_subset(b))
}

/// `U ≺ V` in `BL(X)`: `int ↓cl U ⊆ cl V`.
pub fn rather_below_bl(space: &SpaceSpec, u: &SymSet, v: &SymSet) -> Result<bool> {
    let bl = LatticeView::new(space, ViewKind::Bl);
    for s in [u, v] {
        if !bl.is_member(s)? {
            return Err(Error::NotMember {
                kind: "BL".into(),
                set: space.show(s),
            });
        }
    }
    Ok(space.interior(&space.cl1(u)).is_subset(&space.closure(v)))
}

/// The least clopen upset containing `p` whose cofinite fan parts come from
/// `within`, or `None` if every clopen upset around `p` leaves `within`.
pub fn least_clopen_upset(space: &SpaceSpec, p: Point, within: &SymSet) -> Option<SymSet> {
    let mut s = space.up_closure(&space.singleton(p));
    loop {
        if !s.is_subset(within) {
            return None;
        }
        let before = s.clone();
        for q in s.named() {
            for f in space.fans_at(q) {
                if let FanPart::Fin(_) = s.fan_part(f) {
                    match within.fan_part(f) {
                        part @ FanPart::Cofin(_) => s = s.clone().with_fan(f, s.fan_part(f).union(part)),
                        FanPart::Fin(_) => return None,
                    }
                }
            }
        }
        s = space.closure(&space.up_closure(&s));
        if s == before {
            return Some(s);
        }
    }
}

/// Evaluates a pointwise predicate on named points, on each index in the
/// support of `u` per fan, and on one index outside that support standing
/// for the rest of the fan.
fn pointwise(space: &SpaceSpec, u: &SymSet, keep: impl Fn(Point) -> bool) -> SymSet {
    let mut out = space.empty();
    let named = (0..space.n_named()).filter(|&i| keep(Point::Named(i))).collect();
    out = out.with_named(named);
    for f in 0..space.n_fans() {
        let support = u.fan_part(f).support();
        let generic = (0..crate::bits::MAX_BITS)
            .find(|&i| !support.contains(i))
            .expect("supports leave room for a generic index");
        let hits = support.iter().filter(|&i| keep(Point::Member { fan: f, index: i })).collect();
        let part = if keep(Point::Member { fan: f, index: generic }) {
            FanPart::Cofin(support.minus(hits))
        } else {
            FanPart::Fin(hits)
        };
        out = out.with_fan(f, part);
    }
    out
}

/// `R(U)`: the union of clopen upsets `W` with `↓W ⊆ U`.
pub fn regular_part(space: &SpaceSpec, u: &SymSet) -> Result<SymSet> {
    require_l(space, u)?;
    Ok(pointwise(space, u, |p| {
        least_clopen_upset(space, p, u).is_some_and(|w| space.down_closure(&w).is_subset(u))
    }))
}

/// `R_BL(U)`: the union of clopen upsets `W` with `int ↓W ⊆ U`.
pub fn regular_part_bl(space: &SpaceSpec, u: &SymSet) -> Result<SymSet> {
    require_l(space, u)?;
    Ok(pointwise(space, u, |p| {
        least_clopen_upset(space, p, u).is_some_and(|w| space.interior(&space.down_closure(&w)).is_subset(u))
    }))
}

/// Re-evaluates a false report from its witness alone, returning whether
/// the witness still refutes the axiom. Reports that are not false, or
/// whose axiom has no witness re-check, give `Ok(false)`.
pub fn reconfirm(space: &SpaceSpec, check: SpaceCheck, report: &CheckReport) -> Result<bool> {
    if report.verdict != Verdict::False {
        return Ok(false);
    }
    let Some(w) = &report.witness else {
        return Ok(false);
    };
    let raw_min = |p: Point| raw_extremal(space, p, true);
    let raw_max = |p: Point| raw_extremal(space, p, false);
    let point = |w: &Witness| match w {
        Witness::Point { point } => space.parse_point(point).map(Some),
        _ => Ok(None),
    };
    match check {
        SpaceCheck::SubfitL | SpaceCheck::WsubfitL | SpaceCheck::Boolean(BooleanTarget::Bl) => {
            let Some(p) = point(w)? else { return Ok(false) };
            let minimal = check == SpaceCheck::SubfitL;
            Ok(!in_closure_of(space, p, &|q| raw_extremal(space, q, minimal)))
        }
        SpaceCheck::SubfitSigma => Ok(point(w)?.is_some_and(|p| !raw_min(p))),
        SpaceCheck::Boolean(BooleanTarget::L) | SpaceCheck::Boolean(BooleanTarget::Sigma) => {
            Ok(point(w)?.is_some_and(|p| !raw_max(p)))
        }
        SpaceCheck::Boolean(BooleanTarget::I) => Ok(point(w)?.is_some_and(|p| !raw_max(p)) || !space.is_finite()),
        SpaceCheck::Boolean(BooleanTarget::Dm) => {
            let Some(p) = point(w)? else { return Ok(false) };
            Ok(!in_closure_of(space, p, &raw_min) || !in_closure_of(space, p, &raw_max))
        }
        SpaceCheck::ISubfit | SpaceCheck::SubfitView(_) if matches!(w, Witness::Point { .. }) => {
            let Some(p) = point(w)? else { return Ok(false) };
            let p = match p {
                Point::Member { fan, .. } => Point::Member { fan, index: 0 },
                p => p,
            };
            if check == SpaceCheck::SubfitView(ViewKind::Dm) {
                return Ok(!in_closure_of(space, p, &raw_min));
            }
            let below_min = |q: Point| raw_min(q) && space.leq(q, p);
            Ok(!in_closure_of(space, p, &below_min))
        }
        SpaceCheck::SkulaCross => {
            let Witness::SetPair { u, v } = w else { return Ok(false) };
            let d = space.set_from_json(u)?.minus(&space.set_from_json(v)?);
            Ok(!d.is_empty() && !d.intersects(&space.min_set()))
        }
        SpaceCheck::RegularL | SpaceCheck::RegularBl | SpaceCheck::ARegularBl => {
            let Witness::Set { set } = w else { return Ok(false) };
            let u = space.set_from_json(set)?;
            let r = if check == SpaceCheck::RegularBl {
                regular_part_bl(space, &u)?
            } else {
                regular_part(space, &u)?
            };
            Ok(!space.is_dense(&r, &u)?)
        }
        SpaceCheck::ProHeyting => {
            let Witness::SetPair { u, v } = w else { return Ok(false) };
            let r = rel_annihilator_upset(space, &space.set_from_json(u)?, &space.set_from_json(v)?)?;
            Ok(space.int1(&space.cl2(&r)) != r)
        }
        SpaceCheck::SubfitView(kind) => {
            let Witness::SetPair { u, v } = w else { return Ok(false) };
            let (u, v) = (space.set_from_json(u)?, space.set_from_json(v)?);
            let view = LatticeView::new(space, kind);
            let big = ShapeBound::new(crate::completions::MAX_SHAPE_BOUND)?;
            let x = space.full();
            Ok(!u.is_subset(&v)
                && !view
                    .shapes(big)?
                    .iter()
                    .any(|w| view.join(&u, w) == x && view.join(&v, w) != x))
        }
        SpaceCheck::ISubfit => Ok(false),
    }
}

/// Whether `p` is minimal (or maximal), straight from the order on
/// representative points.
fn raw_extremal(space: &SpaceSpec, p: Point, minimal: bool) -> bool {
    let mut others: Vec<Point> = (0..space.n_named()).map(Point::Named).collect();
    for f in 0..space.n_fans() {
        others.push(Point::Member { fan: f, index: 0 });
        others.push(Point::Member { fan: f, index: 1 });
    }
    others.into_iter().filter(|&q| q != p).all(|q| {
        if minimal {
            !space.leq(q, p)
        } else {
            !space.leq(p, q)
        }
    })
}

/// Whether `p` lies in the closure of `{ q : pred(q) }`: isolated points
/// must satisfy the predicate, a limit must or must have a fan whose
/// generic member does.
fn in_closure_of(space: &SpaceSpec, p: Point, pred: &dyn Fn(Point) -> bool) -> bool {
    if pred(p) {
        return true;
    }
    match p {
        Point::Named(i) => space.fans_at(i).iter().any(|f| pred(Point::Member { fan: f, index: 0 })),
        Point::Member { .. } => false,
    }
}
