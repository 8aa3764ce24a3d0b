//! One test per acceptance criterion. Each asserts its runtime budget.

mod common;

use std::time::{Duration, Instant};

use latsep::bits::Bits;
use latsep::completions::{LatticeView, ShapeBound, ViewKind};
use latsep::dlat::{enumerate_dlats, Axiom, CompletionKind, FinDLat, SublatticePair, SublatticeProperty};
use latsep::gallery::{cofinite_n, entry, fig2, fig3, fig4_u, gallery};
use latsep::matrix::verify_matrix;
use latsep::report::{Verdict, Witness};
use latsep::separations::{reconfirm, regular_part, regular_part_bl, BooleanTarget, Checker, SpaceCheck};
use latsep::space::SpaceSpec;
use latsep::symset::{FanPart, SymSet};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestRunner};

use common::{random_set, rng, spaces, Oracle};

type SetOp<'a> = &'a dyn Fn(&SymSet) -> SymSet;

fn within(start: Instant, secs: u64, what: &str) {
    let t = start.elapsed();
    println!("{what}: {:.2}s of {secs}s", t.as_secs_f64());
    assert!(t < Duration::from_secs(secs), "{what} took {t:?}");
}

fn k2() -> ShapeBound {
    ShapeBound::new(2).unwrap()
}

fn point(w: &Option<Witness>) -> String {
    match w {
        Some(Witness::Point { point }) => point.clone(),
        other => panic!("expected a point witness, got {other:?}"),
    }
}

#[test]
fn criterion_1_fig1() {
    let t = Instant::now();
    let e = entry("fig1").unwrap();
    let s = e.space().unwrap();
    let c = Checker::new(s, k2()).with_hints(e.hints.clone());
    let l = c.subfit_l();
    assert_eq!(l.verdict, Verdict::False);
    assert_eq!(point(&l.witness), "y");
    assert!(reconfirm(s, SpaceCheck::SubfitL, &l).unwrap());

    let bl = c.subfit_view(ViewKind::Bl).unwrap();
    assert_eq!(bl.verdict, Verdict::VerifiedAtBound(2));
    let fan = s.set::<&str>(&[], &[("x", FanPart::FULL)]).unwrap();
    let minus = |n: usize| s.full().minus(&s.set::<&str>(&[], &[("x", FanPart::Fin(Bits::singleton(n)))]).unwrap());
    let (mut member_cases, mut y_cases) = (0, 0);
    for p in &bl.witness_map {
        let (u, v, w) = (
            s.set_from_json(&p.u).unwrap(),
            s.set_from_json(&p.v).unwrap(),
            s.set_from_json(&p.w).unwrap(),
        );
        let d = u.minus(&v);
        if d.fan_part(0).is_empty() {
            assert_eq!(w, fan, "y-case {} ⊄ {}", s.show(&u), s.show(&v));
            y_cases += 1;
        } else {
            let n = (0..64).find(|&n| w == minus(n)).expect("W = X ∖ {x_n}");
            assert!(d.fan_part(0).contains(n));
            member_cases += 1;
        }
    }
    assert!(member_cases > 0 && y_cases > 0);
    within(t, 5, "criterion 1");
}

#[test]
fn criterion_2_fig2() {
    let t = Instant::now();
    let s = fig2();
    let c = Checker::new(&s, k2());
    assert_eq!(c.subfit_l().verdict, Verdict::True);
    let i = c.i_subfit();
    assert_eq!(i.verdict, Verdict::False);
    assert_eq!(point(&i.witness), "y_inf");
    assert!(i.trace.iter().any(|t| t.step.starts_with("min ↓y_inf = {x_inf}")));
    let down = s.down_closure(&s.set(&["y_inf"], &[]).unwrap());
    assert_eq!(s.min_set().inter(&down), s.set(&["x_inf"], &[]).unwrap());
    let sk = c.skula_cross().unwrap();
    assert_eq!(sk.verdict, i.verdict);
    assert!(reconfirm(&s, SpaceCheck::SkulaCross, &sk).unwrap());
    assert!(reconfirm(&s, SpaceCheck::ISubfit, &i).unwrap());
    within(t, 5, "criterion 2");
}

#[test]
fn criterion_3_fig3() {
    let t = Instant::now();
    let s = fig3();
    let c = Checker::new(&s, k2());
    assert_eq!(c.subfit_l().verdict, Verdict::False);
    assert_eq!(c.boolean(BooleanTarget::Bl).unwrap().verdict, Verdict::True);
    let l = c.boolean(BooleanTarget::L).unwrap();
    assert_eq!(l.verdict, Verdict::False);
    assert_eq!(point(&l.witness), "x_inf");
    within(t, 5, "criterion 3");
}

#[test]
fn criterion_4_fig4() {
    let t = Instant::now();
    let e = entry("fig4").unwrap();
    let s = e.space().unwrap().clone();
    let u = fig4_u(&s);
    let c = Checker::new(&s, k2()).with_hints(e.hints.clone());
    assert_eq!(c.subfit_l().verdict, Verdict::True);
    let tail = s.set::<&str>(&[], &[("y", FanPart::Cofin(Bits::singleton(0)))]).unwrap();
    assert_eq!(regular_part(&s, &u).unwrap(), tail);
    let r = c.regular(ViewKind::L).unwrap();
    assert_eq!(r.verdict, Verdict::False);
    match &r.witness {
        Some(Witness::Set { set }) => assert_eq!(s.set_from_json(set).unwrap(), u),
        other => panic!("{other:?}"),
    }
    assert!(reconfirm(&s, SpaceCheck::RegularL, &r).unwrap());
    assert_eq!(c.regular(ViewKind::Bl).unwrap().verdict, Verdict::VerifiedAtBound(2));
    assert_eq!(c.a_regular_bl().unwrap().verdict, Verdict::False);
    within(t, 10, "criterion 4");
}

#[test]
fn criterion_5_cofinite() {
    let t = Instant::now();
    let s = cofinite_n();
    let c = Checker::new(&s, k2());
    assert_eq!(c.subfit_l().verdict, Verdict::True);
    let sigma = c.subfit_sigma();
    assert_eq!(sigma.verdict, Verdict::False);
    assert!(s.min_set() != s.full());
    assert!(reconfirm(&s, SpaceCheck::SubfitSigma, &sigma).unwrap());
    within(t, 2, "criterion 5");
}

#[test]
fn criterion_6_finite_oracles() {
    let t = Instant::now();
    let all = enumerate_dlats(8).unwrap();
    assert_eq!(all.len(), 35);
    for l in &all {
        for ax in [Axiom::VSubfit, Axiom::WSubfit, Axiom::Regular, Axiom::Boolean] {
            assert_eq!(l.check_axiom_def(ax).verdict, l.dual_axiom_check(ax).verdict, "{ax} on {l:?}");
        }
        let spec = l.prime_filters();
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(l.rather_below(a, b), l.rather_below_dual(&spec, a, b));
            }
        }
        for kind in [
            CompletionKind::Dm,
            CompletionKind::Bl,
            CompletionKind::Ideal,
            CompletionKind::Canonical,
            CompletionKind::Ph,
        ] {
            assert!(l.completion(kind).unwrap().is_identity_up_to_iso(l), "{kind:?}");
        }
    }
    let mut pairs = 0;
    for l in all.iter().filter(|l| l.len() <= 6) {
        for p in SublatticePair::all_of(l) {
            let r = p.experiment(SublatticeProperty::VSubfit);
            assert!(r.consistent, "{r:?}");
            pairs += 1;
        }
    }
    assert!(pairs > 0);
    within(t, 180, "criterion 6");
}

fn holds(v: Verdict) -> bool {
    v.holds().unwrap_or_else(|| panic!("unknown verdict"))
}

#[test]
fn criterion_7_consistency() {
    let t = Instant::now();
    for e in gallery() {
        let Some(s) = e.space() else { continue };
        let c = Checker::new(s, k2()).with_hints(e.hints.clone());
        let v = |check: SpaceCheck| holds(c.run(check).unwrap().verdict);
        let subfit = v(SpaceCheck::SubfitL);
        let wsubfit = v(SpaceCheck::WsubfitL);
        let regular = v(SpaceCheck::RegularL);
        assert_eq!(subfit, v(SpaceCheck::SubfitView(ViewKind::Dm)), "(i) {}", e.id);
        assert!(!v(SpaceCheck::ISubfit) || subfit, "(ii) {}", e.id);
        assert!(!regular || subfit, "(iii) {}", e.id);
        assert_eq!(v(SpaceCheck::Boolean(BooleanTarget::Bl)), wsubfit, "(iv) {}", e.id);
        assert_eq!(v(SpaceCheck::Boolean(BooleanTarget::Dm)), subfit && wsubfit, "(v) {}", e.id);
        assert!(!regular || v(SpaceCheck::RegularBl), "(vi) {}", e.id);
        for x in &e.expected {
            let got = c.run(x.check.parse().unwrap()).unwrap().verdict;
            assert_eq!(got, x.verdict, "{} {}", e.id, x.check);
        }
    }
    let m = verify_matrix(6).unwrap();
    assert!(m.disagreements.is_empty(), "{:?}", m.disagreements);
    within(t, 120, "criterion 7");
}

#[test]
fn criterion_8_truncation_oracle() {
    let t = Instant::now();
    let mut r = rng(8);
    for (name, s) in spaces() {
        let o = Oracle::new(&s);
        for _ in 0..500 {
            let a = random_set(&s, &mut r);
            let c = o.of(&a);
            let show = s.show(&a);
            assert_eq!(o.of(&s.closure(&a)), o.closure(&c), "cl {show} on {name}");
            assert_eq!(o.of(&s.interior(&a)), o.interior(&c), "int {show} on {name}");
            assert_eq!(o.of(&s.down_closure(&a)), o.down(&c), "↓ {show} on {name}");
            assert_eq!(o.of(&s.up_closure(&a)), o.up(&c), "↑ {show} on {name}");
            assert_eq!(o.of(&s.cl1(&a)), o.cl1(&c), "cl1 {show} on {name}");
            assert_eq!(o.of(&s.int1(&a)), o.int1(&c), "int1 {show} on {name}");
        }
    }
    within(t, 60, "criterion 8");
}

fn sym_set(space: &SpaceSpec, named: u64, parts: &[(bool, u64)]) -> SymSet {
    let mut s = space.empty().with_named(Bits(named & ((1 << space.n_named()) - 1)));
    for (f, &(cofin, bits)) in parts.iter().enumerate().take(space.n_fans()) {
        let b = Bits(bits & 0xff);
        s = s.with_fan(f, if cofin { FanPart::Cofin(b) } else { FanPart::Fin(b) });
    }
    s
}

fn laws(s: &SpaceSpec, a: &SymSet, b: &SymSet) -> Result<(), TestCaseError> {
    let ab = a.union(b);
    let closures: [(&str, SetOp); 5] = [
        ("cl", &|x| s.closure(x)),
        ("↓", &|x| s.down_closure(x)),
        ("↑", &|x| s.up_closure(x)),
        ("cl1", &|x| s.cl1(x)),
        ("cl2", &|x| s.cl2(x)),
    ];
    for (name, f) in closures {
        let fa = f(a);
        prop_assert!(a.is_subset(&fa), "{} extensive", name);
        prop_assert_eq!(f(&fa), fa.clone(), "{} idempotent", name);
        prop_assert!(fa.is_subset(&f(&ab)), "{} monotone", name);
    }
    let interiors: [(&str, SetOp); 3] =
        [("int", &|x| s.interior(x)), ("int1", &|x| s.int1(x)), ("int2", &|x| s.int2(x))];
    for (name, f) in interiors {
        let fa = f(a);
        prop_assert!(fa.is_subset(a), "{} reductive", name);
        prop_assert_eq!(f(&fa), fa.clone(), "{} idempotent", name);
        prop_assert!(fa.is_subset(&f(&ab)), "{} monotone", name);
    }
    // int1 cl is a nucleus on open upsets
    let j = |x: &SymSet| s.int1(&s.closure(x));
    let (u, v) = (s.int1(a), s.int1(b));
    prop_assert!(u.is_subset(&j(&u)));
    prop_assert_eq!(j(&j(&u)), j(&u));
    prop_assert_eq!(j(&u.inter(&v)), j(&u).inter(&j(&v)));
    // fixpoint chain DM ⊆ BL ⊆ OpUp, and L inside DM
    for x in [a, &u, &j(&u), &s.int1(&s.cl2(a))] {
        let m = |k| LatticeView::new(s, k).is_member(x).unwrap();
        prop_assert!(!m(ViewKind::Dm) || m(ViewKind::Bl));
        prop_assert!(!m(ViewKind::Bl) || m(ViewKind::OpUp));
        prop_assert!(!m(ViewKind::L) || m(ViewKind::Dm));
    }
    Ok(())
}

#[test]
#[allow(clippy::needless_range_loop)]
fn criterion_9_properties() {
    let t = Instant::now();
    let spaces = spaces();
    let config = Config {
        cases: 400,
        rng_seed: RngSeed::Fixed(9),
        failure_persistence: None,
        ..Config::default()
    };
    let mut runner = TestRunner::new(config.clone());
    let strategy = (
        0..spaces.len(),
        any::<u64>(),
        any::<u64>(),
        proptest::collection::vec((any::<bool>(), any::<u64>()), 2),
        proptest::collection::vec((any::<bool>(), any::<u64>()), 2),
    );
    runner
        .run(&strategy, |(i, na, nb, pa, pb)| {
            let s = &spaces[i].1;
            laws(s, &sym_set(s, na, &pa), &sym_set(s, nb, &pb))
        })
        .unwrap();

    // R ⊆ R_BL on clopen upsets, with both parts inside U
    let mut runner = TestRunner::new(config);
    let shapes: Vec<(usize, Vec<SymSet>)> = spaces
        .iter()
        .enumerate()
        .map(|(i, (_, s))| (i, LatticeView::new(s, ViewKind::L).shapes(k2()).unwrap()))
        .collect();
    runner
        .run(&(0..shapes.len(), any::<prop::sample::Index>()), |(i, ix)| {
            let s = &spaces[i].1;
            let u = ix.get(&shapes[i].1);
            let r = regular_part(s, u).unwrap();
            let rbl = regular_part_bl(s, u).unwrap();
            prop_assert!(r.is_subset(&rbl) && rbl.is_subset(u));
            Ok(())
        })
        .unwrap();

    // finite side: poset closure laws and lattice dual agreement on random posets
    let mut runner = TestRunner::new(Config {
        cases: 100,
        rng_seed: RngSeed::Fixed(10),
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(1usize..=6, any::<u64>(), any::<u64>()), |(n, rel, sel)| {
            // a random order: i ≤ j for i < j when the bit is set, then closed
            let mut leq = vec![vec![false; n]; n];
            for i in 0..n {
                leq[i][i] = true;
                for j in i + 1..n {
                    leq[i][j] = rel >> (i * n + j) & 1 == 1;
                }
            }
            for k in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        leq[i][j] |= leq[i][k] && leq[k][j];
                    }
                }
            }
            let ids = (0..n).map(|i| format!("p{i}")).collect();
            let p = latsep::poset::FinPoset::from_fn(ids, |i, j| leq[i][j]).unwrap();
            let a = Bits(sel & ((1 << n) - 1));
            let up = p.up_closure(a);
            prop_assert!(a.is_subset(up) && p.up_closure(up) == up);
            let down = p.down_closure(a);
            prop_assert!(a.is_subset(down) && p.down_closure(down) == down);
            let l = FinDLat::downsets_of(&p).unwrap();
            for ax in [Axiom::VSubfit, Axiom::WSubfit, Axiom::Regular, Axiom::Boolean] {
                prop_assert_eq!(l.check_axiom_def(ax).verdict, l.dual_axiom_check(ax).verdict);
            }
            Ok(())
        })
        .unwrap();
    within(t, 60, "criterion 9");
}
