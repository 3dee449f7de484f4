use tnnflag_core::rational::q;
use tnnflag_core::slgroup::SlModel;
use tnnflag_core::tpcells::report::{Check, SuiteReport, Witness, MAX_WITNESSES};
use tnnflag_core::tpcells::suites::{self, Mutation, SuiteOptions};
use tnnflag_core::tpcells::{family_sample_unchecked, Family};
use tnnflag_core::weyl;
use tnnflag_core::{CartanData, NodeSet, TwistedContext};

fn opts(samples: usize, seed: u64, mutation: Mutation) -> SuiteOptions {
    SuiteOptions { samples, seed, mutation }
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let m = SlModel::new(2);
    let e = weyl::identity(m.group());
    let w0 = weyl::from_word(m.group(), &[0, 1, 0]).unwrap();
    let o = opts(20, 7, Mutation::None);
    let a = suites::chart_containment(&m, Family::Positive, &e, &w0, &o).unwrap();
    let b = suites::chart_containment(&m, Family::Positive, &e, &w0, &o).unwrap();
    let ja = serde_json::to_string(&a).unwrap();
    assert_eq!(ja, serde_json::to_string(&b).unwrap());
    assert!(a.pass, "{}", a.summary());
    assert_eq!(serde_json::from_str::<SuiteReport>(&ja).unwrap(), a);
    // 20 samples × 6 charts
    assert_eq!(a.check("chart").unwrap().checked, 120);
}

#[test]
fn negated_parameters_are_caught_with_witnesses() {
    let m = SlModel::new(2);
    let e = weyl::identity(m.group());
    let w0 = weyl::from_word(m.group(), &[0, 1, 0]).unwrap();
    // chart membership alone does not see the sign of a parameter: random
    // non-positive points lie in every chart, and only the hypersurface
    // a + c = 0 of (e, w_0) leaves some
    let r = suites::chart_containment(&m, Family::Positive, &e, &w0, &opts(20, 7, Mutation::NegateParameter)).unwrap();
    assert!(r.check("chart").unwrap().pass());
    let r = suites::chart_containment(&m, Family::Positive, &e, &w0, &opts(400, 1, Mutation::NegateParameter)).unwrap();
    assert!(!r.pass);
    let (check, w) = r.first_witness().unwrap();
    assert_eq!(check, "chart");
    let p = w.matrix.clone().unwrap();
    assert_eq!(m.richardson_cell(&p).unwrap(), (e.clone(), w0.clone()));
    assert!(r.summary().starts_with("FAIL"));

    let p = family_sample_unchecked(&m, Family::Positive, &e, &w0, &[q(-1, 1), q(2, 1), q(1, 1)]).unwrap();
    let missing: Vec<String> = weyl::interval(&e, &w0).unwrap().iter().filter(|u| !m.chart_membership(u, &p)).map(|u| u.to_string()).collect();
    assert_eq!(missing, ["1", "1.2"]);

    let e = weyl::identity(m.group());
    let r = suites::product_structure(&m, Family::Positive, &e, &weyl::from_word(m.group(), &[0]).unwrap(), &w0, &opts(5, 7, Mutation::NegateParameter)).unwrap();
    assert!(!r.pass);

    let r = suites::identities(&m, &opts(10, 1, Mutation::FlipIota)).unwrap();
    assert!(!r.pass);
    let r = suites::glue(&CartanData::type_a(2), NodeSet::from_indices([1]), 2, &opts(1, 1, Mutation::PerturbGlued)).unwrap();
    assert!(!r.pass);
}

#[test]
fn product_and_closure_suites_pass_on_small_cases() {
    let m = SlModel::new(2);
    let el = |w: &[usize]| weyl::from_word(m.group(), w).unwrap();
    let r = suites::product_structure(&m, Family::Positive, &el(&[]), &el(&[0]), &el(&[0, 1]), &opts(20, 7, Mutation::None)).unwrap();
    assert!(r.pass, "{}", r.summary());
    let j = NodeSet::from_indices([0]);
    let ctx = TwistedContext::new(m.group().clone(), j).unwrap();
    let r = suites::closure_poset(&ctx, &el(&[0]), &el(&[1, 0])).unwrap();
    assert!(r.pass, "{}", r.summary());
    let r = suites::identities(&m, &opts(10, 3, Mutation::None)).unwrap();
    assert!(r.pass, "{}", r.summary());
}

#[test]
fn checks_cap_witnesses() {
    let mut c = Check::new("x");
    for s in 0..10 {
        c.record(s % 2 == 0, || Witness::new(s, "odd"));
    }
    assert_eq!((c.checked, c.failed, c.witnesses.len()), (10, 5, 5));
    let mut d = Check::new("x");
    d.record(false, || Witness::new(0, "again").with_matrix(&SlModel::new(1).gen_x(0, &q(1, 1)).unwrap()));
    c.merge(d);
    assert_eq!((c.checked, c.failed, c.witnesses.len()), (11, 6, MAX_WITNESSES));
}
