use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use tnnflag_core::orders::TwistedContext;
use tnnflag_core::slgroup::SlModel;
use tnnflag_core::tpcells::suites::{self, SuiteOptions};
use tnnflag_core::tpcells::{family_sample, positivity_test, random_params, rng, CellSpec, Family};
use tnnflag_core::weyl;
use tnnflag_core::NodeSet;

fn orders(c: &mut Criterion) {
    let model = SlModel::new(3);
    let g = model.group().clone();
    let ctx = TwistedContext::new(g.clone(), NodeSet::from_indices([0, 2])).unwrap();
    let all = weyl::enumerate_upto(&g, usize::MAX);
    c.bench_function("twisted_leq A3 all pairs", |b| {
        b.iter(|| all.iter().flat_map(|v| all.iter().map(move |w| (v, w))).filter(|(v, w)| ctx.twisted_leq(v, w)).count())
    });
    let a2 = SlModel::new(2);
    let ctx2 = TwistedContext::new(a2.group().clone(), NodeSet::from_indices([0])).unwrap();
    let (lo, hi) = (ctx2.twisted_minimum().unwrap(), ctx2.twisted_maximum().unwrap());
    c.bench_function("build_jq_poset A2 J={1}", |b| b.iter(|| ctx2.build_jq_poset(black_box(&lo), black_box(&hi)).unwrap()));
}

fn cells(c: &mut Criterion) {
    let model = SlModel::new(3);
    let g = model.group().clone();
    let fam = Family::Twisted(NodeSet::from_indices([1]));
    let ctx = TwistedContext::new(g.clone(), fam.cell_j()).unwrap();
    let (v, w) = (ctx.twisted_minimum().unwrap(), ctx.twisted_maximum().unwrap());
    let d = CellSpec::new(v.clone(), w.clone(), fam).dimension() as usize;
    let params = random_params(&mut rng(1), d);
    c.bench_function("family_sample SL4 top twisted cell", |b| b.iter(|| family_sample(&model, fam, &v, &w, black_box(&params)).unwrap()));
    let p = family_sample(&model, fam, &v, &w, &params).unwrap().point;
    c.bench_function("positivity_test SL4 top twisted cell", |b| b.iter(|| positivity_test(&model, fam, &v, &w, black_box(&p)).unwrap()));

    let sl3 = SlModel::new(2);
    let g3 = sl3.group().clone();
    let (e3, w03) = (weyl::identity(&g3), weyl::longest_parabolic(&g3, g3.nodes()).unwrap());
    let opts = SuiteOptions { samples: 10, ..SuiteOptions::default() };
    c.bench_function("chart suite SL3 (e, w0)", |b| b.iter(|| suites::chart_containment(&sl3, Family::Positive, &e3, &w03, &opts).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = orders, cells
}
criterion_main!(benches);
