//! Shared helpers: random symbolic sets and a concrete oracle that
//! truncates each fan to its first members plus one tail point.

#![allow(dead_code)]

use latsep::bits::Bits;
use latsep::gallery::{antichain3, cofinite_n, fig1, fig2, fig3, fig4};
use latsep::space::{Point, SpaceSpec};
use latsep::symset::{FanPart, SymSet};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Explicit members kept per fan.
pub const TRUNC: usize = 12;
/// Random supports stay below this index, so members from here to
/// `TRUNC` and the tail behave alike.
pub const SUPPORT: usize = 8;
/// A member index past the truncation, standing for the tail.
const FAR: usize = 40;

pub fn spaces() -> Vec<(&'static str, SpaceSpec)> {
    vec![
        ("fig1", fig1()),
        ("fig2", fig2()),
        ("fig3", fig3()),
        ("fig4", fig4()),
        ("cofinite_N", cofinite_n()),
        ("antichain3", antichain3()),
    ]
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_part(rng: &mut ChaCha8Rng) -> FanPart {
    let s = Bits(rng.random_range(0..1u64 << SUPPORT));
    if rng.random::<bool>() {
        FanPart::Cofin(s)
    } else {
        FanPart::Fin(s)
    }
}

pub fn random_set(space: &SpaceSpec, rng: &mut ChaCha8Rng) -> SymSet {
    let named = Bits(rng.random_range(0..1u64 << space.n_named()));
    let mut s = space.empty().with_named(named);
    for f in 0..space.n_fans() {
        s = s.with_fan(f, random_part(rng));
    }
    s
}

/// A point of the truncated model.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CPoint {
    Named(usize),
    Member(usize, usize),
    Tail(usize),
}

/// A subset of the truncated model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concrete {
    pub named: Vec<bool>,
    pub members: Vec<[bool; TRUNC]>,
    pub tail: Vec<bool>,
}

pub struct Oracle<'a> {
    pub space: &'a SpaceSpec,
}

impl<'a> Oracle<'a> {
    pub fn new(space: &'a SpaceSpec) -> Oracle<'a> {
        Oracle { space }
    }

    pub fn points(&self) -> Vec<CPoint> {
        let mut out: Vec<CPoint> = (0..self.space.n_named()).map(CPoint::Named).collect();
        for f in 0..self.space.n_fans() {
            out.extend((0..TRUNC).map(|i| CPoint::Member(f, i)));
            out.push(CPoint::Tail(f));
        }
        out
    }

    /// Reads a symbolic set by membership queries only.
    pub fn of(&self, s: &SymSet) -> Concrete {
        let sp = self.space;
        Concrete {
            named: (0..sp.n_named()).map(|i| s.contains(Point::Named(i))).collect(),
            members: (0..sp.n_fans())
                .map(|f| std::array::from_fn(|i| s.contains(Point::Member { fan: f, index: i })))
                .collect(),
            tail: (0..sp.n_fans())
                .map(|f| s.contains(Point::Member { fan: f, index: FAR }))
                .collect(),
        }
    }

    pub fn has(&self, c: &Concrete, p: CPoint) -> bool {
        match p {
            CPoint::Named(i) => c.named[i],
            CPoint::Member(f, i) => c.members[f][i],
            CPoint::Tail(f) => c.tail[f],
        }
    }

    fn build(&self, keep: impl Fn(CPoint) -> bool) -> Concrete {
        let sp = self.space;
        Concrete {
            named: (0..sp.n_named()).map(|i| keep(CPoint::Named(i))).collect(),
            members: (0..sp.n_fans())
                .map(|f| std::array::from_fn(|i| keep(CPoint::Member(f, i))))
                .collect(),
            tail: (0..sp.n_fans()).map(|f| keep(CPoint::Tail(f))).collect(),
        }
    }

    /// The order, read off the presentation.
    pub fn leq(&self, a: CPoint, b: CPoint) -> bool {
        let sp = self.space;
        let fan_of = |p: CPoint| match p {
            CPoint::Member(f, _) | CPoint::Tail(f) => Some(f),
            CPoint::Named(_) => None,
        };
        match (a, b) {
            (CPoint::Named(i), CPoint::Named(j)) => sp.named_leq(i, j),
            (CPoint::Named(q), m) => sp.fan(fan_of(m).unwrap()).below.contains(q),
            (m, CPoint::Named(q)) => sp.fan(fan_of(m).unwrap()).above.contains(q),
            (a, b) => a == b,
        }
    }

    pub fn complement(&self, c: &Concrete) -> Concrete {
        self.build(|p| !self.has(c, p))
    }

    /// A limit is in the closure iff some fan converging to it has its tail
    /// in the set; fan members are isolated.
    pub fn closure(&self, c: &Concrete) -> Concrete {
        self.build(|p| {
            self.has(c, p)
                || match p {
                    CPoint::Named(i) => (0..self.space.n_fans()).any(|f| self.space.fan(f).limit == i && c.tail[f]),
                    _ => false,
                }
        })
    }

    pub fn interior(&self, c: &Concrete) -> Concrete {
        self.build(|p| {
            self.has(c, p)
                && match p {
                    CPoint::Named(i) => (0..self.space.n_fans()).all(|f| self.space.fan(f).limit != i || c.tail[f]),
                    _ => true,
                }
        })
    }

    pub fn down(&self, c: &Concrete) -> Concrete {
        let pts = self.points();
        self.build(|p| pts.iter().any(|&s| self.has(c, s) && self.leq(p, s)))
    }

    pub fn up(&self, c: &Concrete) -> Concrete {
        let pts = self.points();
        self.build(|p| pts.iter().any(|&s| self.has(c, s) && self.leq(s, p)))
    }

    pub fn cl1(&self, c: &Concrete) -> Concrete {
        self.down(&self.closure(c))
    }

    /// The largest open upset inside the set.
    pub fn int1(&self, c: &Concrete) -> Concrete {
        self.complement(&self.cl1(&self.complement(c)))
    }
}
