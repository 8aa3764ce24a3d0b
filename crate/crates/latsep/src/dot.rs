//! Graphviz output for spaces and finite lattices.
//!
//! Fans are drawn as a prefix of their members plus a dashed marker for
//! the rest, with a dotted edge to the limit. Only covering relations
//! among drawn points are shown.

use std::fmt::Write;

use crate::dlat::FinDLat;
use crate::space::{Point, SpaceSpec};

pub const DEFAULT_FAN_PREFIX: usize = 4;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Edges `(a, b)` with `a < b` and nothing drawn strictly between.
fn covers<T: Copy + PartialEq>(points: &[T], lt: impl Fn(T, T) -> bool) -> Vec<(T, T)> {
    let mut out = Vec::new();
    for &a in points {
        for &b in points {
            if lt(a, b) && !points.iter().any(|&c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn space_to_dot(space: &SpaceSpec, prefix: usize, label: &str) -> String {
    let mut s = String::from("digraph space {\n  rankdir=BT;\n");
    if !label.is_empty() {
        let _ = writeln!(s, "  label={};", quote(label));
    }
    let mut points: Vec<Point> = (0..space.n_named()).map(Point::Named).collect();
    for i in 0..space.n_named() {
        let _ = writeln!(s, "  {} [shape=circle];", quote(&space.point_name(Point::Named(i))));
    }
    for (f, fan) in space.fans().iter().enumerate() {
        for index in 0..prefix {
            let p = Point::Member { fan: f, index };
            points.push(p);
            let _ = writeln!(s, "  {} [shape=point];", quote(&space.point_name(p)));
        }
        let marker = format!("{}[…]", fan.id);
        let _ = writeln!(s, "  {} [shape=plaintext];", quote(&marker));
        let _ = writeln!(
            s,
            "  {} -> {} [style=dotted, arrowhead=none, label=\"→\"];",
            quote(&marker),
            quote(&space.named_ids()[fan.limit])
        );
    }
    for (a, b) in covers(&points, |a, b| a != b && space.leq(a, b)) {
        let _ = writeln!(s, "  {} -> {};", quote(&space.point_name(a)), quote(&space.point_name(b)));
    }
    s.push_str("}\n");
    s
}

pub fn lattice_to_dot(l: &FinDLat, label: &str) -> String {
    let mut s = String::from("digraph lattice {\n  rankdir=BT;\n");
    if !label.is_empty() {
        let _ = writeln!(s, "  label={};", quote(label));
    }
    let all: Vec<usize> = (0..l.len()).collect();
    for &a in &all {
        let _ = writeln!(s, "  {};", quote(l.id(a)));
    }
    for (a, b) in covers(&all, |a, b| a != b && l.leq(a, b)) {
        let _ = writeln!(s, "  {} -> {};", quote(l.id(a)), quote(l.id(b)));
    }
    s.push_str("}\n");
    s
}
