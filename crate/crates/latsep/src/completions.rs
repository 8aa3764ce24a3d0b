//! Lattices of symbolic sets over a fan space: clopen upsets and the
//! dual forms of the completions.

use std::fmt;
use std::str::FromStr;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::poset::lex_cmp;
use crate::space::SpaceSpec;
use crate::symset::{FanPart, SymSet};

/// Largest per-fan support bound accepted by [`enumerate_shapes`].
pub const MAX_SHAPE_BOUND: usize = 4;

/// Named subsets are enumerated exhaustively, so the count is capped.
const MAX_NAMED_FOR_SHAPES: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViewKind {
    /// Clopen upsets.
    L,
    /// Fixpoints of `int1 cl2`.
    Dm,
    /// Fixpoints of `int1 cl`.
    Bl,
    /// Open upsets.
    OpUp,
    /// All upsets.
    Up,
    /// Finite BL-joins of sets `X ∖ ↓K` with `K` clopen.
    Ph,
}

impl ViewKind {
    pub const ALL: [ViewKind; 6] = [ViewKind::L, ViewKind::Dm, ViewKind::Bl, ViewKind::OpUp, ViewKind::Up, ViewKind::Ph];

    pub fn name(self) -> &'static str {
        match self {
            ViewKind::L => "L",
            ViewKind::Dm => "DM",
            ViewKind::Bl => "BL",
            ViewKind::OpUp => "OpUp",
            ViewKind::Up => "Up",
            ViewKind::Ph => "pH",
        }
    }
}

impl fmt::Display for ViewKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ViewKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ViewKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Fan supports of enumerated shapes use indices below `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ShapeBound {
    k: usize,
}

impl ShapeBound {
    pub fn new(k: usize) -> Result<ShapeBound> {
        if k == 0 || k > MAX_SHAPE_BOUND {
            return Err(Error::TooLarge {
                what: "shape bound",
                limit: MAX_SHAPE_BOUND,
                got: k,
            });
        }
        Ok(ShapeBound { k })
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// The bound doubled, capped at [`MAX_SHAPE_BOUND`]; `None` if that
    /// does not enlarge it.
    pub fn escalated(self) -> Option<ShapeBound> {
        let k = (self.k * 2).min(MAX_SHAPE_BOUND);
        (k > self.k).then_some(ShapeBound { k })
    }
}

impl Default for ShapeBound {
    fn default() -> Self {
        ShapeBound { k: 2 }
    }
}

/// A lattice of symbolic sets over a space.
#[derive(Clone, Debug)]
pub struct LatticeView<'a> {
    space: &'a SpaceSpec,
    kind: ViewKind,
    bound: ShapeBound,
    /// pH generators `X ∖ ↓K` for clopen `K` at `bound`.
    generators: Vec<SymSet>,
}

impl<'a> LatticeView<'a> {
    pub fn new(space: &'a SpaceSpec, kind: ViewKind) -> LatticeView<'a> {
        LatticeView::with_bound(space, kind, ShapeBound::default())
    }

    /// `bound` limits the generators searched for pH membership.
    pub fn with_bound(space: &'a SpaceSpec, kind: ViewKind, bound: ShapeBound) -> LatticeView<'a> {
        let generators = if kind == ViewKind::Ph {
            ph_generators_at(space, bound)
        } else {
            Vec::new()
        };
        LatticeView {
            space,
            kind,
            bound,
            generators,
        }
    }

    pub fn space(&self) -> &'a SpaceSpec {
        self.space
    }

    pub fn kind(&self) -> ViewKind {
        self.kind
    }

    pub fn bound(&self) -> ShapeBound {
        self.bound
    }

    pub fn top(&self) -> SymSet {
        self.space.full()
    }

    pub fn bottom(&self) -> SymSet {
        self.space.empty()
    }

    pub fn is_member(&self, s: &SymSet) -> Result<bool> {
        if s.space_fingerprint() != self.space.fingerprint() {
            return Err(Error::SpaceMismatch);
        }
        Ok(is_member_kind(self.space, self.kind, s, &self.generators))
    }

    fn require(&self, s: &SymSet) -> Result<()> {
        if self.is_member(s)? {
            Ok(())
        } else {
            Err(Error::NotMember {
                kind: self.kind.to_string(),
                set: self.space.show(s),
            })
        }
    }

    /// The lattice join of two members.
    pub fn join(&self, a: &SymSet, b: &SymSet) -> SymSet {
        let u = a.union(b);
        match self.kind {
            ViewKind::Bl | ViewKind::Ph => self.space.int1(&self.space.closure(&u)),
            ViewKind::Dm => self.space.int1(&self.space.cl2(&u)),
            ViewKind::L | ViewKind::OpUp | ViewKind::Up => u,
        }
    }

    pub fn meet(&self, a: &SymSet, b: &SymSet) -> SymSet {
        a.inter(b)
    }

    /// Join of a list of members; the empty join is `∅`.
    pub fn join_all(&self, sets: &[SymSet]) -> Result<SymSet> {
        let mut acc = self.bottom();
        for s in sets {
            self.require(s)?;
            acc = self.join(&acc, s);
        }
        Ok(acc)
    }

    /// The members of this view among the shapes at `bound`.
    pub fn shapes(&self, bound: ShapeBound) -> Result<Vec<SymSet>> {
        let generators;
        let gens = if self.kind == ViewKind::Ph && bound > self.bound {
            generators = ph_generators_at(self.space, bound);
            &generators
        } else {
            &self.generators
        };
        Ok(all_shapes(self.space, bound)?
            .into_iter()
            .filter(|s| is_member_kind(self.space, self.kind, s, gens))
            .collect())
    }
}

fn is_member_kind(space: &SpaceSpec, kind: ViewKind, s: &SymSet, generators: &[SymSet]) -> bool {
    match kind {
        ViewKind::L => space.is_clopen(s) && space.is_upset(s),
        ViewKind::Dm => space.int1(&space.cl2(s)) == *s,
        ViewKind::Bl => space.int1(&space.closure(s)) == *s,
        ViewKind::OpUp => space.is_open(s) && space.is_upset(s),
        ViewKind::Up => space.is_upset(s),
        ViewKind::Ph => {
            if space.int1(&space.closure(s)) != *s {
                return false;
            }
            // Joins are monotone, so S is a join of generators iff it is
            // the join of all generators below it.
            let below = generators
                .iter()
                .filter(|g| g.is_subset(s))
                .fold(space.empty(), |acc, g| acc.union(g));
            space.int1(&space.closure(&below)) == *s
        }
    }
}

/// `int1 cl (∪ sets)`: the join in BL.
pub fn bl_join(space: &SpaceSpec, sets: &[SymSet]) -> Result<SymSet> {
    LatticeView::new(space, ViewKind::Bl).join_all(sets)
}

/// `int1 cl2 (∪ sets)`: the join in DM.
pub fn dm_join(space: &SpaceSpec, sets: &[SymSet]) -> Result<SymSet> {
    LatticeView::new(space, ViewKind::Dm).join_all(sets)
}

/// `¬U = int1 cl (X ∖ ↓cl U)`, the pseudocomplement in BL.
pub fn bl_pseudocomplement(space: &SpaceSpec, u: &SymSet) -> Result<SymSet> {
    LatticeView::new(space, ViewKind::Bl).require(u)?;
    let star = space.cl1(u).complement();
    Ok(space.int1(&space.closure(&star)))
}

/// `X ∖ ↓(a ∖ b)` for clopen upsets `a`, `b`: the dual of `⟨a,b⟩`.
pub fn rel_annihilator_upset(space: &SpaceSpec, a: &SymSet, b: &SymSet) -> Result<SymSet> {
    let l = LatticeView::new(space, ViewKind::L);
    l.require(a)?;
    l.require(b)?;
    Ok(space.down_closure(&a.minus(b)).complement())
}

/// `X ∖ ↓K` for clopen `K`.
pub fn ph_generator(space: &SpaceSpec, k: &SymSet) -> Result<SymSet> {
    if !space.is_clopen(k) {
        return Err(Error::NotMember {
            kind: "clopen sets".into(),
            set: space.show(k),
        });
    }
    Ok(space.down_closure(k).complement())
}

/// Whether `s` is a finite BL-join of generators `X ∖ ↓K`, searching
/// clopen `K` with supports below `max(bound, support of s)`.
pub fn ph_member_test(space: &SpaceSpec, s: &SymSet, bound: ShapeBound) -> Result<bool> {
    let k = bound.k().max(s.support_span()).min(MAX_SHAPE_BOUND);
    LatticeView::with_bound(space, ViewKind::Ph, ShapeBound::new(k)?).is_member(s)
}

fn ph_generators_at(space: &SpaceSpec, bound: ShapeBound) -> Vec<SymSet> {
    let mut out: Vec<SymSet> = Vec::new();
    for k in all_shapes(space, bound).unwrap_or_default() {
        if space.is_clopen(&k) {
            let g = space.down_closure(&k).complement();
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Every symbolic set whose fan parts are `Fin(s)` or `Cofin(e)` with
/// `s, e ⊆ {0..k-1}`, in a fixed order: named subsets in lexicographic
/// order, then fan parts with the first fan varying slowest.
fn all_shapes(space: &SpaceSpec, bound: ShapeBound) -> Result<Vec<SymSet>> {
    let n = space.n_named();
    if n > MAX_NAMED_FOR_SHAPES {
        return Err(Error::TooLarge {
            what: "named points for shape enumeration",
            limit: MAX_NAMED_FOR_SHAPES,
            got: n,
        });
    }
    let mut named: Vec<Bits> = (0..1u64 << n).map(Bits).collect();
    named.sort_by(|a, b| lex_cmp(*a, *b));
    let mut subs: Vec<Bits> = (0..1u64 << bound.k()).map(Bits).collect();
    subs.sort_by(|a, b| lex_cmp(*a, *b));
    let parts: Vec<FanPart> = subs
        .iter()
        .map(|&s| FanPart::Fin(s))
        .chain(subs.iter().map(|&s| FanPart::Cofin(s)))
        .collect();
    let mut combos: Vec<Vec<FanPart>> = vec![Vec::new()];
    for _ in 0..space.n_fans() {
        combos = combos
            .into_iter()
            .flat_map(|c| {
                parts.iter().map(move |&p| {
                    let mut c = c.clone();
                    c.push(p);
                    c
                })
            })
            .collect();
    }
    let mut out = Vec::with_capacity(named.len() * combos.len());
    for &nm in &named {
        for c in &combos {
            let mut s = space.named_only(nm);
            for (f, &p) in c.iter().enumerate() {
                s = s.with_fan(f, p);
            }
            out.push(s);
        }
    }
    Ok(out)
}

/// All members of `kind` among the shapes at `bound`, each once.
pub fn enumerate_shapes(space: &SpaceSpec, bound: ShapeBound, kind: ViewKind) -> Result<Vec<SymSet>> {
    LatticeView::with_bound(space, kind, bound).shapes(bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig1() -> SpaceSpec {
        SpaceSpec::builder()
            .named(&["x_inf", "y"])
            .leq("x_inf", "y")
            .fan("x", "x_inf", &[], &[])
            .build()
            .unwrap()
    }

    fn fin(i: &[usize]) -> FanPart {
        FanPart::Fin(i.iter().copied().collect())
    }

    #[test]
    fn fig1_memberships() {
        let s = fig1();
        let w = s.set::<&str>(&[], &[("x", FanPart::FULL)]).unwrap();
        assert!(LatticeView::new(&s, ViewKind::Bl).is_member(&w).unwrap());
        assert!(!LatticeView::new(&s, ViewKind::Dm).is_member(&w).unwrap());
        for kind in ViewKind::ALL {
            let v = LatticeView::new(&s, kind);
            assert!(v.is_member(&s.empty()).unwrap() && v.is_member(&s.full()).unwrap(), "{kind}");
        }
    }

    #[test]
    fn fig1_bl_joins() {
        let s = fig1();
        let y = s.set(&["y"], &[]).unwrap();
        let w = s.set::<&str>(&[], &[("x", FanPart::FULL)]).unwrap();
        assert_eq!(bl_join(&s, &[y.clone(), w]).unwrap(), s.full());
        assert_eq!(bl_join(&s, std::slice::from_ref(&y)).unwrap(), y);
        let a = s.set::<&str>(&[], &[("x", fin(&[0]))]).unwrap();
        let b = s.set::<&str>(&[], &[("x", fin(&[1]))]).unwrap();
        assert_eq!(
            bl_join(&s, &[a, b]).unwrap(),
            s.set::<&str>(&[], &[("x", fin(&[0, 1]))]).unwrap()
        );
        let xi = s.set(&["x_inf"], &[]).unwrap();
        assert!(bl_join(&s, &[xi]).is_err());
    }

    #[test]
    fn pseudocomplements() {
        let s = fig1();
        assert_eq!(bl_pseudocomplement(&s, &s.empty()).unwrap(), s.full());
        assert_eq!(bl_pseudocomplement(&s, &s.full()).unwrap(), s.empty());
        let y = s.set(&["y"], &[]).unwrap();
        assert_eq!(
            bl_pseudocomplement(&s, &y).unwrap(),
            s.set::<&str>(&[], &[("x", FanPart::FULL)]).unwrap()
        );
    }

    #[test]
    fn generators() {
        let s = fig1();
        assert_eq!(ph_generator(&s, &s.empty()).unwrap(), s.full());
        let y = s.set(&["y"], &[]).unwrap();
        assert_eq!(
            ph_generator(&s, &y).unwrap(),
            s.set::<&str>(&[], &[("x", FanPart::FULL)]).unwrap()
        );
        let xi = s.set(&["x_inf"], &[]).unwrap();
        assert!(ph_generator(&s, &xi).is_err());
        for u in enumerate_shapes(&s, ShapeBound::default(), ViewKind::L).unwrap() {
            assert!(ph_member_test(&s, &u, ShapeBound::default()).unwrap());
        }
    }

    #[test]
    fn antichain_upsets() {
        let s = SpaceSpec::builder().named(&["a", "b"]).build().unwrap();
        let l = enumerate_shapes(&s, ShapeBound::new(1).unwrap(), ViewKind::L).unwrap();
        assert_eq!(l.len(), 4);
    }

    #[test]
    fn shapes_are_distinct_and_deterministic() {
        let s = fig1();
        let b = ShapeBound::new(2).unwrap();
        let a = enumerate_shapes(&s, b, ViewKind::Up).unwrap();
        assert_eq!(a, enumerate_shapes(&s, b, ViewKind::Up).unwrap());
        for i in 0..a.len() {
            for j in (i + 1)..a.len() {
                assert_ne!(a[i], a[j]);
            }
        }
        let l1 = enumerate_shapes(&s, ShapeBound::new(1).unwrap(), ViewKind::L).unwrap();
        assert!(l1.contains(&s.empty()) && l1.contains(&s.full()));
        assert!(l1.contains(&s.set(&["y"], &[]).unwrap()));
        assert!(ShapeBound::new(5).is_err());
    }

    #[test]
    fn annihilator_bounds() {
        let s = fig1();
        let x = s.full();
        for a in enumerate_shapes(&s, ShapeBound::default(), ViewKind::L).unwrap() {
            assert_eq!(rel_annihilator_upset(&s, &a, &x).unwrap(), x);
            let expect = s.down_closure(&a.complement()).complement();
            assert_eq!(rel_annihilator_upset(&s, &x, &a).unwrap(), expect);
        }
    }
}
