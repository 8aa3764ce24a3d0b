//! Verdicts of the symbolic checkers on the gallery spaces.

mod common;

use latsep::completions::{ShapeBound, ViewKind};
use latsep::gallery::{antichain3, fig1, fig2, fig3, fig4, gallery, Subject};
use latsep::report::Verdict;
use latsep::separations::{reconfirm, regular_part, regular_part_bl, BooleanTarget, Checker, SpaceCheck};
use latsep::space::SpaceSpec;

fn check(s: &SpaceSpec, c: SpaceCheck) -> Verdict {
    Checker::new(s, ShapeBound::default()).run(c).unwrap().verdict
}

fn positive(v: Verdict) -> bool {
    v.holds() == Some(true)
}

#[test]
fn weak_subfitness() {
    assert_eq!(check(&fig1(), SpaceCheck::WsubfitL), Verdict::True);
    assert_eq!(check(&fig3(), SpaceCheck::WsubfitL), Verdict::True);
    assert_eq!(check(&antichain3(), SpaceCheck::WsubfitL), Verdict::True);
}

#[test]
fn ideal_subfitness() {
    assert_eq!(check(&fig2(), SpaceCheck::ISubfit), Verdict::False);
    assert_eq!(check(&antichain3(), SpaceCheck::ISubfit), Verdict::True);
    let s = fig1();
    let exact = check(&s, SpaceCheck::ISubfit);
    let cross = check(&s, SpaceCheck::SkulaCross);
    assert_eq!(positive(exact), positive(cross));
    assert!(positive(check(&antichain3(), SpaceCheck::SkulaCross)));
    assert_eq!(check(&fig2(), SpaceCheck::SkulaCross), Verdict::False);
}

#[test]
fn regularity() {
    assert_eq!(check(&fig3(), SpaceCheck::RegularL), Verdict::False);
    assert_eq!(check(&fig3(), SpaceCheck::ARegularBl), Verdict::False);
    assert!(positive(check(&antichain3(), SpaceCheck::ARegularBl)));
    for (_, s) in common::spaces() {
        assert_eq!(regular_part(&s, &s.full()).unwrap(), s.full());
        assert_eq!(regular_part_bl(&s, &s.full()).unwrap(), s.full());
    }
}

#[test]
fn booleanness() {
    let s = fig3();
    let c = Checker::new(&s, ShapeBound::default());
    assert_eq!(c.boolean(BooleanTarget::L).unwrap().verdict, Verdict::False);
    assert_eq!(c.boolean(BooleanTarget::Bl).unwrap().verdict, Verdict::True);
    assert_eq!(check(&antichain3(), SpaceCheck::Boolean(BooleanTarget::I)), Verdict::True);
    assert_eq!(check(&fig1(), SpaceCheck::Boolean(BooleanTarget::I)), Verdict::False);
}

#[test]
fn proheyting() {
    assert!(positive(check(&antichain3(), SpaceCheck::ProHeyting)));
    assert_eq!(check(&fig2(), SpaceCheck::ProHeyting), Verdict::VerifiedAtBound(2));
}

#[test]
fn subfit_views() {
    let s = fig2();
    let c = Checker::new(&s, ShapeBound::default());
    assert_eq!(c.subfit_view(ViewKind::OpUp).unwrap().verdict, Verdict::False);
    let s = fig1();
    let c = Checker::new(&s, ShapeBound::default());
    assert_eq!(c.subfit_view(ViewKind::Dm).unwrap().verdict, Verdict::False);
}

#[test]
fn sigma_collapse() {
    for s in [fig1(), fig2(), fig3(), fig4()] {
        assert_eq!(check(&s, SpaceCheck::SubfitSigma), Verdict::False);
    }
    assert_eq!(check(&antichain3(), SpaceCheck::SubfitSigma), Verdict::True);
}

#[test]
fn every_false_verdict_is_reconfirmed() {
    for e in gallery() {
        let Subject::Space(s) = &e.subject else { continue };
        let c = Checker::new(s, ShapeBound::default()).with_hints(e.hints.clone());
        for check in SpaceCheck::ALL {
            let r = c.run(check).unwrap();
            assert_ne!(r.verdict, Verdict::Unknown, "{} {}", e.id, check.name());
            if r.verdict.is_false() {
                assert!(r.witness.is_some(), "{} {}", e.id, check.name());
                assert!(reconfirm(s, check, &r).unwrap(), "{} {}", e.id, check.name());
            }
        }
    }
}

#[test]
fn gallery_shape() {
    let g = gallery();
    let spaces = g.iter().filter(|e| matches!(e.subject, Subject::Space(_))).count();
    assert!(spaces >= 5 && g.len() - spaces >= 5);
    for e in &g {
        assert!(e.expected.iter().all(|x| !x.anchor.is_empty()), "{}", e.id);
    }
    let fig3 = g.iter().find(|e| e.id == "fig3").unwrap();
    assert_eq!(fig3.expected("boolean_BL").unwrap().verdict, Verdict::True);
    let cof = g.iter().find(|e| e.id == "cofinite_N").unwrap();
    assert_eq!(cof.expected("subfit_L").unwrap().verdict, Verdict::True);
    assert_eq!(cof.expected("subfit_sigma").unwrap().verdict, Verdict::False);
}
