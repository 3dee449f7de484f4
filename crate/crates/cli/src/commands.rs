use anyhow::{bail, Context, Result};
use serde_json::{json, Value};
use tnnflag_core::orders::{build_qk_poset, TwistedContext};
use tnnflag_core::slgroup::SlModel;
use tnnflag_core::topo::ball_euler_check;
use tnnflag_core::tpcells::report::{Check, SuiteReport, Witness};
use tnnflag_core::tpcells::suites::{self, Mutation, SuiteOptions};
use tnnflag_core::tpcells::Family;
use tnnflag_core::weyl::{self, WeylElement};
use tnnflag_core::{CartanData, GradedPoset, NodeSet};

use crate::args::*;
use crate::input;
use crate::report::RunReport;

/// What `main` turns into an exit code.
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(pass: bool) -> Self {
        if pass {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

pub fn run(cli: Cli) -> Result<Status> {
    match cli.command {
        Command::Cartan(c) => cartan(c),
        Command::Weyl(c) => weyl_cmd(c),
        Command::Orders(c) => orders(c),
        Command::Topo(c) => topo(c),
        Command::Sl(c) => sl(c),
        Command::Tp(TpCmd::Suite(a)) => tp_suite(&a),
        Command::Verify(a) => crate::verify::run(&a),
    }
}

pub fn mutation(m: MutationArg) -> Mutation {
    match m {
        MutationArg::None => Mutation::None,
        MutationArg::NegateParameter => Mutation::NegateParameter,
        MutationArg::FlipIota => Mutation::FlipIota,
        MutationArg::PerturbGlued => Mutation::PerturbGlued,
    }
}

fn labels(c: &CartanData, set: NodeSet) -> Vec<String> {
    c.labels_of(set)
}

fn finish(report: RunReport, out: &OutArg) -> Result<Status> {
    // keep stdout pure JSON when the report goes there
    if out.out.as_deref() != Some(std::path::Path::new("-")) {
        report.print_summary(None);
    }
    report.write(out.out.as_deref())?;
    Ok(Status::of(report.pass))
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn cartan(cmd: CartanCmd) -> Result<Status> {
    match cmd {
        CartanCmd::Validate { cartan, out } => {
            let c = input::cartan(&cartan.cartan)?;
            let v = c.validate();
            let mut check = Check::new("gcm");
            if v.is_ok() {
                check.record(true, || Witness::new(0, ""));
            }
            for (k, msg) in v.violations.iter().enumerate() {
                check.record(false, || Witness::new(k, msg.clone()));
            }
            let suite = SuiteReport::new("cartan-validate", cartan.cartan.clone(), vec![check]);
            let inputs = json!({ "cartan": c });
            finish(RunReport::new("cartan validate", inputs, vec![suite]), &out)
        }
        CartanCmd::Glue { cartan, k } => {
            let c = input::cartan(&cartan.cartan)?;
            let k = input::node_set(&c, &k)?;
            print_json(&c.glue(k)?)?;
            Ok(Status::Pass)
        }
        CartanCmd::Shriek { cartan } => {
            let c = input::cartan(&cartan.cartan)?;
            print_json(&c.extend_shriek())?;
            Ok(Status::Pass)
        }
    }
}

fn weyl_cmd(cmd: WeylCmd) -> Result<Status> {
    match cmd {
        WeylCmd::Enum { cartan, maxlen, j } => {
            let c = input::cartan(&cartan.cartan)?;
            let g = input::group(&c)?;
            let elems = match j {
                Some(j) => weyl::enumerate_parabolic(&g, input::node_set(&c, &j)?, maxlen),
                None => weyl::enumerate_upto(&g, maxlen),
            };
            for e in &elems {
                println!("{e}");
            }
            eprintln!("{} elements", elems.len());
            Ok(Status::Pass)
        }
        WeylCmd::Leq { cartan, v, w } => {
            let c = input::cartan(&cartan.cartan)?;
            let g = input::group(&c)?;
            let (v, w) = (input::element(&g, &v)?, input::element(&g, &w)?);
            println!("{}", weyl::bruhat_leq(&v, &w)?);
            Ok(Status::Pass)
        }
    }
}

fn twisted(c: &CartanData, j: &str) -> Result<TwistedContext> {
    Ok(TwistedContext::new(input::group(c)?, input::node_set(c, j)?)?)
}

fn orders(cmd: OrdersCmd) -> Result<Status> {
    match cmd {
        OrdersCmd::Tleq { cartan, j, v, w } => {
            let c = input::cartan(&cartan.cartan)?;
            let ctx = twisted(&c, &j)?;
            let (v, w) = (input::element(ctx.group(), &v)?, input::element(ctx.group(), &w)?);
            println!("{}", ctx.twisted_leq(&v, &w));
            Ok(Status::Pass)
        }
        OrdersCmd::Interval { cartan, j, v, w } => {
            let c = input::cartan(&cartan.cartan)?;
            let ctx = twisted(&c, &j)?;
            let (v, w) = (input::element(ctx.group(), &v)?, input::element(ctx.group(), &w)?);
            for x in ctx.twisted_interval(&v, &w)? {
                println!("{x}\t{}", ctx.twisted_length(&x));
            }
            Ok(Status::Pass)
        }
        OrdersCmd::Poset { cartan, j, k, v, w, format } => {
            let c = input::cartan(&cartan.cartan)?;
            let g = input::group(&c)?;
            let (v, w) = (input::element(&g, &v)?, input::element(&g, &w)?);
            let p = match k {
                Some(k) => build_qk_poset(input::node_set(&c, &k)?, &v, &w)?,
                None => twisted(&c, j.as_deref().unwrap_or(""))?.build_jq_poset(&v, &w)?,
            };
            match format {
                PosetFormat::Json => println!("{}", p.export_json()),
                PosetFormat::Dot => print!("{}", p.export_dot()),
            }
            Ok(Status::Pass)
        }
    }
}

fn topo(cmd: TopoCmd) -> Result<Status> {
    let TopoCmd::Check { poset, chain, ball, top_dim, out } = cmd;
    let (p, source) = match (poset, chain) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            (GradedPoset::from_json(&text)?, path.display().to_string())
        }
        (None, Some(n)) => (GradedPoset::chain(n), format!("chain {n}")),
        (None, None) => bail!("give --poset or --chain"),
    };
    p.validate()?;
    let hat = p.with_bottom();
    let mut checks = Vec::new();
    // structural failures (no maximum, …) are check failures, not usage errors
    let mut add = |name: &str, r: tnnflag_core::Result<bool>| {
        let mut c = Check::new(name);
        match r {
            Ok(ok) => c.record(ok, || Witness::new(0, format!("not {name}"))),
            Err(e) => c.record(false, || Witness::new(0, e.to_string())),
        }
        checks.push(c);
    };
    add("graded", hat.is_graded());
    add("thin", hat.is_thin());
    add("eulerian", hat.is_eulerian());
    let top = top_dim.unwrap_or_else(|| p.elements.iter().map(|e| e.rank).max().unwrap_or(0));
    if ball {
        let mut c = Check::new("ball-euler");
        let r = ball_euler_check(&p, top)?;
        c.record(r.pass, || {
            Witness::new(0, format!("cell sum {}, boundary sum {} (ball needs 1, {})", r.cell_sum, r.boundary_sum, r.ball_expected_boundary))
        });
        checks.push(c);
    }
    let suite = SuiteReport::new("topo", source, checks);
    let inputs = json!({ "poset": serde_json::from_str::<Value>(&p.export_json())?, "ball": ball, "top_dim": top });
    finish(RunReport::new("topo check", inputs, vec![suite]), &out)
}

fn sl(cmd: SlCmd) -> Result<Status> {
    match cmd {
        SlCmd::Cell { n, matrix, j } => {
            let m = input::model(n)?;
            let g = input::matrix(&matrix, n)?;
            let (v, w) = match j {
                Some(j) => m.twisted_cell(input::node_set(m.group().cartan(), &j)?, &g)?,
                None => m.richardson_cell(&g)?,
            };
            println!("v = {v}\nw = {w}");
            Ok(Status::Pass)
        }
        SlCmd::Chart { n, u, matrix } => {
            let m = input::model(n)?;
            let g = input::matrix(&matrix, n)?;
            let u = input::element(m.group(), &u)?;
            println!("{}", m.chart_membership(&u, &g));
            Ok(Status::Pass)
        }
    }
}

fn family(m: &SlModel, a: &SuiteArgs) -> Result<Family> {
    let c = m.group().cartan();
    let j = a.j.as_deref().map(|j| input::node_set(c, j)).transpose()?;
    Ok(match (a.family, j) {
        (Some(FamilyArg::Positive), Some(j)) if !j.is_empty() => bail!("--family positive takes no --j"),
        (Some(FamilyArg::Positive), _) | (None, None) => Family::Positive,
        (Some(FamilyArg::Negative), Some(j)) if !j.is_empty() => bail!("--family negative takes no --j"),
        (Some(FamilyArg::Negative), _) => Family::negative(),
        (Some(FamilyArg::Twisted), j) | (None, j) => Family::Twisted(j.unwrap_or(NodeSet::EMPTY)),
    })
}

fn longest(m: &SlModel) -> WeylElement {
    weyl::longest_parabolic(m.group(), m.group().nodes()).expect("finite type")
}

fn family_json(c: &CartanData, f: Family) -> Value {
    match f {
        Family::Positive => json!({ "family": "positive" }),
        Family::Twisted(j) => json!({ "family": "twisted", "j": labels(c, j) }),
    }
}

fn tp_suite(a: &SuiteArgs) -> Result<Status> {
    let opts = SuiteOptions { samples: a.samples, seed: a.seed, mutation: mutation(a.mutation) };
    let mut inputs = json!({
        "which": format!("{:?}", a.which).to_lowercase(),
        "samples": a.samples,
        "seed": a.seed,
        "mutation": opts.mutation,
    });
    let add = |inputs: &mut Value, key: &str, v: Value| {
        inputs[key] = v;
    };
    let report = if a.which == Which::Glue {
        let c = input::cartan(&a.cartan)?;
        let k = input::node_set(&c, a.k.as_deref().unwrap_or(""))?;
        add(&mut inputs, "cartan", json!(c));
        add(&mut inputs, "k", json!(labels(&c, k)));
        add(&mut inputs, "max_rank", json!(a.max_rank));
        suites::glue(&c, k, a.max_rank, &opts)?
    } else {
        let m = input::model(a.n)?;
        let g = m.group().clone();
        let c = g.cartan().clone();
        add(&mut inputs, "n", json!(a.n));
        let v = input::element(&g, &a.v)?;
        let w = match &a.w {
            Some(w) => input::element(&g, w)?,
            None => longest(&m),
        };
        match a.which {
            Which::Identities => suites::identities(&m, &opts)?,
            Which::Chart | Which::Product => {
                let f = family(&m, a)?;
                add(&mut inputs, "family", family_json(&c, f));
                add(&mut inputs, "v", json!(v.to_string()));
                add(&mut inputs, "w", json!(w.to_string()));
                if a.which == Which::Chart {
                    suites::chart_containment(&m, f, &v, &w, &opts)?
                } else {
                    let u = input::element(&g, a.u.as_deref().context("product needs --u")?)?;
                    add(&mut inputs, "u", json!(u.to_string()));
                    suites::product_structure(&m, f, &v, &u, &w, &opts)?
                }
            }
            Which::Closure => match &a.k {
                Some(k) => {
                    let k = input::node_set(&c, k)?;
                    let w = if a.w.is_some() { w } else { w.coset_decompose_right(k).0 };
                    add(&mut inputs, "k", json!(labels(&c, k)));
                    add(&mut inputs, "v", json!(v.to_string()));
                    add(&mut inputs, "w", json!(w.to_string()));
                    suites::closure_poset_qk(k, &v, &w)?
                }
                None => {
                    let j = input::node_set(&c, a.j.as_deref().unwrap_or(""))?;
                    let ctx = TwistedContext::new(g.clone(), j)?;
                    add(&mut inputs, "j", json!(labels(&c, j)));
                    add(&mut inputs, "v", json!(v.to_string()));
                    add(&mut inputs, "w", json!(w.to_string()));
                    suites::closure_poset(&ctx, &v, &w)?
                }
            },
            Which::Gkl => {
                let w1 = input::element(&g, a.w1.as_deref().context("gkl needs --w1")?)?;
                add(&mut inputs, "w", json!(w.to_string()));
                add(&mut inputs, "w1", json!(w1.to_string()));
                suites::gkl(&m, &w, &w1, &opts)?
            }
            Which::Glue => unreachable!("handled above"),
        }
    };
    finish(RunReport::new("tp suite", inputs, vec![report]), &a.out)
}
