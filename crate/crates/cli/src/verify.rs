//! Fixed verification profiles. Each step runs a batch of suite calls (in
//! parallel where independent) and folds them into one suite report.

use std::sync::Arc;
use std::time::Instant;

use anyhow::Result;
use rayon::prelude::*;
use serde_json::json;
use tnnflag_core::orders::TwistedContext;
use tnnflag_core::slgroup::SlModel;
use tnnflag_core::tpcells::report::{merge_checks, SuiteReport};
use tnnflag_core::tpcells::suites::{self, SuiteOptions};
use tnnflag_core::tpcells::Family;
use tnnflag_core::weyl::{self, WeylElement};
use tnnflag_core::{CartanData, NodeSet, WeylGroup};

use crate::args::{Profile, VerifyArgs};
use crate::commands::{mutation, Status};
use crate::report::{RunReport, SuiteTiming};

type Step = Box<dyn Fn() -> Result<SuiteReport>>;

/// Folds a batch of reports of one suite into a single report.
fn fold(suite: &str, subject: String, parts: Vec<SuiteReport>) -> SuiteReport {
    let n = parts.len();
    let checks = merge_checks(parts.into_iter().map(|r| r.checks));
    SuiteReport::new(suite, format!("{subject}: {n} cases"), checks)
}

fn group(c: CartanData) -> Arc<WeylGroup> {
    WeylGroup::new(c).expect("builtin diagrams are valid")
}

fn twisted_pairs(ctx: &TwistedContext, elems: &[WeylElement], max_rank: i64) -> Vec<(WeylElement, WeylElement)> {
    let mut out = Vec::new();
    for v in elems {
        for w in elems {
            let d = ctx.twisted_length(w) - ctx.twisted_length(v);
            if (0..=max_rank).contains(&d) && ctx.twisted_leq(v, w) {
                out.push((v.clone(), w.clone()));
            }
        }
    }
    out
}

fn set_label(c: &CartanData, j: NodeSet) -> String {
    format!("{{{}}}", c.labels_of(j).join(","))
}

fn family_label(c: &CartanData, f: Family) -> String {
    match f {
        Family::Positive => "positive".into(),
        Family::Twisted(j) => format!("J={}", set_label(c, j)),
    }
}

fn closures(name: &'static str, g: Arc<WeylGroup>, js: Vec<NodeSet>, max_len: usize, max_rank: i64) -> Vec<Step> {
    js.into_iter()
        .map(|j| -> Step {
            let g = g.clone();
            Box::new(move || {
                let ctx = TwistedContext::new(g.clone(), j)?;
                let elems = weyl::enumerate_upto(&g, max_len);
                let parts = twisted_pairs(&ctx, &elems, max_rank)
                    .par_iter()
                    .map(|(v, w)| suites::closure_poset(&ctx, v, w))
                    .collect::<tnnflag_core::Result<Vec<_>>>()?;
                Ok(fold("closure", format!("{name} J={}", set_label(g.cartan(), j)), parts))
            })
        })
        .collect()
}

fn qk_closures(name: &'static str, g: Arc<WeylGroup>, max_rank: usize) -> Vec<Step> {
    NodeSet::all_subsets(g.rank())
        .map(|k| -> Step {
            let g = g.clone();
            Box::new(move || {
                let tops = suites::qk_tops(&g, k, max_rank)?;
                let parts = tops
                    .par_iter()
                    .map(|(v, w)| suites::closure_poset_qk(k, v, w))
                    .collect::<tnnflag_core::Result<Vec<_>>>()?;
                Ok(fold("closure-qk", format!("{name} K={}", set_label(g.cartan(), k)), parts))
            })
        })
        .collect()
}

/// Chart containment over every cell of the family, up to `max_rank`.
fn charts(name: &'static str, n: usize, families: Vec<Family>, max_rank: i64, opts: SuiteOptions) -> Vec<Step> {
    families
        .into_iter()
        .map(|f| -> Step {
            Box::new(move || {
                let model = SlModel::new(n);
                let ctx = TwistedContext::new(model.group().clone(), f.cell_j())?;
                let elems = weyl::enumerate_upto(model.group(), usize::MAX);
                let parts = twisted_pairs(&ctx, &elems, max_rank)
                    .par_iter()
                    .map(|(v, w)| suites::chart_containment(&model, f, v, w, &opts))
                    .collect::<tnnflag_core::Result<Vec<_>>>()?;
                Ok(fold("chart", format!("{name} {}", family_label(model.group().cartan(), f)), parts))
            })
        })
        .collect()
}

fn products(name: &'static str, n: usize, families: Vec<Family>, max_rank: i64, opts: SuiteOptions) -> Vec<Step> {
    families
        .into_iter()
        .map(|f| -> Step {
            Box::new(move || {
                let model = SlModel::new(n);
                let ctx = TwistedContext::new(model.group().clone(), f.cell_j())?;
                let elems = weyl::enumerate_upto(model.group(), usize::MAX);
                let mut triples = Vec::new();
                for (v, w) in twisted_pairs(&ctx, &elems, max_rank) {
                    for u in ctx.twisted_interval(&v, &w)? {
                        triples.push((v.clone(), u, w.clone()));
                    }
                }
                let parts = triples
                    .par_iter()
                    .map(|(v, u, w)| suites::product_structure(&model, f, v, u, w, &opts))
                    .collect::<tnnflag_core::Result<Vec<_>>>()?;
                Ok(fold("product", format!("{name} {}", family_label(model.group().cartan(), f)), parts))
            })
        })
        .collect()
}

fn identities(name: &'static str, n: usize, opts: SuiteOptions) -> Step {
    Box::new(move || {
        let mut r = suites::identities(&SlModel::new(n), &opts)?;
        r.subject = format!("{name}: {}", r.subject);
        Ok(r)
    })
}

/// GKL over every length-additive split `w = w1 · (w1⁻¹w)`.
fn gkl(name: &'static str, n: usize, opts: SuiteOptions) -> Step {
    Box::new(move || {
        let model = SlModel::new(n);
        let elems = weyl::enumerate_upto(model.group(), usize::MAX);
        let mut splits = Vec::new();
        for w in &elems {
            for w1 in &elems {
                if w1.length() + w1.inverse().mul(w).length() == w.length() {
                    splits.push((w.clone(), w1.clone()));
                }
            }
        }
        let parts = splits
            .par_iter()
            .map(|(w, w1)| suites::gkl(&model, w, w1, &opts))
            .collect::<tnnflag_core::Result<Vec<_>>>()?;
        Ok(fold("gkl", name.to_string(), parts))
    })
}

fn glue(name: &'static str, c: CartanData, max_rank: usize, opts: SuiteOptions) -> Step {
    Box::new(move || {
        let parts = NodeSet::all_subsets(c.rank())
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&k| suites::glue(&c, k, max_rank, &opts))
            .collect::<tnnflag_core::Result<Vec<_>>>()?;
        Ok(fold("glue", name.to_string(), parts))
    })
}

fn spade(name: &'static str, c: CartanData) -> Step {
    Box::new(move || {
        let parts = NodeSet::all_subsets(c.rank())
            .map(|j| suites::spade(&c, j, 4, 2))
            .collect::<tnnflag_core::Result<Vec<_>>>()?;
        Ok(fold("spade", name.to_string(), parts))
    })
}

fn reductions(name: &'static str, c: CartanData, max_len: usize) -> Step {
    Box::new(move || {
        let mut r = suites::reductions(&group(c.clone()), max_len)?;
        r.subject = format!("{name}: {}", r.subject);
        Ok(r)
    })
}

fn all_families(rank: usize) -> Vec<Family> {
    let mut f = vec![Family::Positive];
    f.extend(NodeSet::all_subsets(rank).map(Family::Twisted));
    f
}

fn steps(profile: Profile, seed: u64, opts: SuiteOptions) -> Vec<Step> {
    let with = |samples| SuiteOptions { samples, seed, ..opts };
    let a2 = CartanData::type_a(2);
    let a3 = CartanData::type_a(3);
    let mut s: Vec<Step> = vec![reductions("A2", a2.clone(), 3)];
    s.extend(closures("A2", group(a2.clone()), NodeSet::all_subsets(2).collect(), 3, 3));
    s.extend(qk_closures("A2", group(a2.clone()), 4));
    s.extend(charts("SL3", 2, all_families(2), i64::MAX, with(20)));
    s.extend(products("SL3", 2, all_families(2), 3, with(10)));
    s.push(identities("SL3", 2, with(100)));
    s.push(gkl("SL3", 2, with(50)));
    s.push(glue("A2", a2.clone(), 4, with(100)));
    s.push(spade("A2", a2));
    if profile == Profile::Full {
        let aff = CartanData::affine_a1();
        let hyp = CartanData::hyperbolic_2_3();
        s.push(reductions("A3", a3.clone(), 6));
        s.push(reductions("affine A1", aff.clone(), 6));
        s.push(reductions("hyperbolic", hyp.clone(), 5));
        s.extend(closures("A3", group(a3.clone()), NodeSet::all_subsets(3).collect(), 6, 4));
        s.extend(qk_closures("A3", group(a3.clone()), 4));
        let aff_js = vec![NodeSet::EMPTY, NodeSet::from_indices([0]), NodeSet::from_indices([1])];
        s.extend(closures("affine A1", group(aff), aff_js, 6, 4));
        s.extend(closures("hyperbolic", group(hyp), vec![NodeSet::EMPTY, NodeSet::from_indices([0])], 4, 3));
        let sl4_families = vec![
            Family::Positive,
            Family::negative(),
            Family::Twisted(NodeSet::from_indices([0])),
            Family::Twisted(NodeSet::from_indices([1])),
            Family::Twisted(NodeSet::full(3)),
        ];
        s.extend(charts("SL4", 3, sl4_families.clone(), 3, with(3)));
        s.extend(products("SL4", 3, sl4_families, 2, with(3)));
        s.push(identities("SL4", 3, with(100)));
        s.push(gkl("SL4", 3, with(5)));
        s.push(glue("A3", a3, 4, with(50)));
    }
    s
}

pub fn run(a: &VerifyArgs) -> Result<Status> {
    let opts = SuiteOptions { samples: 0, seed: a.seed, mutation: mutation(a.mutation) };
    let mut suites = Vec::new();
    let mut times = Vec::new();
    for step in steps(a.profile, a.seed, opts) {
        let start = Instant::now();
        let r = step()?;
        times.push(SuiteTiming { suite: r.suite.clone(), subject: r.subject.clone(), ms: start.elapsed().as_millis() });
        suites.push(r);
    }
    let profile = format!("{:?}", a.profile).to_lowercase();
    let inputs = json!({ "profile": profile, "seed": a.seed, "mutation": opts.mutation });
    let mut report = RunReport::new(&format!("verify {profile}"), inputs, suites);
    if a.out.out.as_deref() != Some(std::path::Path::new("-")) {
        report.print_summary(Some(&times));
    }
    if a.timings {
        report.timing_ms = Some(times);
    }
    report.write(a.out.out.as_deref())?;
    Ok(if report.pass { Status::Pass } else { Status::Fail })
}
