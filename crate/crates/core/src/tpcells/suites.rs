//! Verification suites. Each returns a [`SuiteReport`]; samples are drawn
//! sequentially from a seeded stream and processed in parallel, so reports
//! depend only on the inputs and the seed.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::nodes::NodeSet;
use crate::orders::{pair_id, tilde_nu, GluedGroup, SpadeGroup, TwistedContext};
use crate::rational::{RationalMatrix, Q};
use crate::slgroup::SlModel;
use crate::topo::{ball_euler_check, GradedPoset};
use crate::weyl::{self, WeylElement, WeylGroup};

use super::identities::{check_iota, check_xy_identities, gkl_memberships, in_u_minus_positive};
use super::report::{merge_checks, Check, SuiteReport, Witness};
use super::*;

/// Deliberate faults for checking that the suites notice them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    #[default]
    None,
    /// Negate the first parameter of every sample.
    NegateParameter,
    /// Negate the image of `ι`.
    FlipIota,
    /// Change one off-diagonal entry of the glued matrix.
    PerturbGlued,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteOptions {
    pub samples: usize,
    pub seed: u64,
    pub mutation: Mutation,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { samples: 100, seed: 7, mutation: Mutation::None }
    }
}

fn draw(opts: &SuiteOptions, count: usize) -> Vec<Vec<Q>> {
    let mut r = rng(opts.seed);
    (0..opts.samples).map(|_| random_params(&mut r, count)).collect()
}

fn family_label(family: Family) -> String {
    match family {
        Family::Positive => "positive".into(),
        Family::Twisted(j) => format!("J={j:?}"),
    }
}

/// A family point, with the first parameter negated under
/// [`Mutation::NegateParameter`] (the point may then leave the cell).
fn point_for(model: &SlModel, family: Family, v: &WeylElement, w: &WeylElement, params: &[Q], m: Mutation) -> Result<RationalMatrix> {
    if m == Mutation::NegateParameter && !params.is_empty() {
        let mut p = params.to_vec();
        p[0] = -p[0].clone();
        family_sample_unchecked(model, family, v, w, &p)
    } else {
        Ok(family_sample(model, family, v, w, params)?.point)
    }
}

fn cell_check(model: &SlModel, family: Family, sample: usize, p: &RationalMatrix, v: &WeylElement, w: &WeylElement, check: &mut Check) -> Result<bool> {
    let got = family_cell(model, family, p)?;
    let ok = got == (v.clone(), w.clone());
    check.record(ok, || Witness::new(sample, format!("cell ({}, {}) instead of ({v}, {w})", got.0, got.1)).with_matrix(p));
    Ok(ok)
}

fn twisted_context(model: &SlModel, family: Family) -> Result<TwistedContext> {
    TwistedContext::new(model.group().clone(), family.cell_j())
}

/// Every sample of the cell `(v, w)` lies in the chart of every `u` in the
/// (twisted) interval `[v, w]`.
pub fn chart_containment(model: &SlModel, family: Family, v: &WeylElement, w: &WeylElement, opts: &SuiteOptions) -> Result<SuiteReport> {
    let ctx = twisted_context(model, family)?;
    if !ctx.twisted_leq(v, w) {
        return Err(Error::NotComparable(format!("{v} is not below {w}")));
    }
    let charts = ctx.twisted_interval(v, w)?;
    let dim = (ctx.twisted_length(w) - ctx.twisted_length(v)) as usize;
    let params = draw(opts, dim);
    let parts: Vec<Vec<Check>> = params
        .par_iter()
        .enumerate()
        .map(|(s, pr)| -> Result<Vec<Check>> {
            let (mut cell, mut chart) = (Check::new("cell"), Check::new("chart"));
            let p = point_for(model, family, v, w, pr, opts.mutation)?;
            cell_check(model, family, s, &p, v, w, &mut cell)?;
            for u in &charts {
                chart.record(model.chart_membership(u, &p), || Witness::new(s, format!("not in chart u = {u}")).with_matrix(&p));
            }
            Ok(vec![cell, chart])
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport::new("chart", format!("{} ({v}, {w})", family_label(family)), merge_checks(parts)))
}

/// Split–recurse–reassemble through the chart of `u`, plus reassembly of
/// independently sampled factor points.
pub fn product_structure(
    model: &SlModel,
    family: Family,
    v: &WeylElement,
    u: &WeylElement,
    w: &WeylElement,
    opts: &SuiteOptions,
) -> Result<SuiteReport> {
    let ctx = twisted_context(model, family)?;
    if !(ctx.twisted_leq(v, u) && ctx.twisted_leq(u, w)) {
        return Err(Error::NotComparable(format!("need {v} ≤ {u} ≤ {w}")));
    }
    let j = family.cell_j();
    let tl = |x: &WeylElement| ctx.twisted_length(x);
    let (d, d1, d2) = ((tl(w) - tl(v)) as usize, (tl(u) - tl(v)) as usize, (tl(w) - tl(u)) as usize);
    let mut r = rng(opts.seed);
    let params: Vec<(Vec<Q>, Vec<Q>, Vec<Q>)> = (0..opts.samples)
        .map(|_| (random_params(&mut r, d), random_params(&mut r, d1), random_params(&mut r, d2)))
        .collect();
    let names = ["cell", "split", "component-cells", "component-positivity", "round-trip", "reassembly"];
    let parts: Vec<Vec<Check>> = params
        .par_iter()
        .enumerate()
        .map(|(s, (pr, p1, p2))| -> Result<Vec<Check>> {
            let mut c: Vec<Check> = names.iter().map(|n| Check::new(*n)).collect();
            let p = point_for(model, family, v, w, pr, opts.mutation)?;
            if cell_check(model, family, s, &p, v, w, &mut c[0])? {
                match model.jc_chart(u, j, &p) {
                    Err(e) => c[1].record(false, || Witness::new(s, format!("chart {u}: {e}")).with_matrix(&p)),
                    Ok(split) => {
                        c[1].record(true, || unreachable!());
                        let plus_cell = family_cell(model, family, &split.plus)?;
                        let minus_cell = family_cell(model, family, &split.minus)?;
                        let cells_ok = plus_cell == (v.clone(), u.clone()) && minus_cell == (u.clone(), w.clone());
                        c[2].record(cells_ok, || {
                            Witness::new(s, format!("plus in ({}, {}), minus in ({}, {})", plus_cell.0, plus_cell.1, minus_cell.0, minus_cell.1))
                        });
                        if cells_ok {
                            let a = positivity_test(model, family, v, u, &split.plus)?;
                            let b = positivity_test(model, family, u, w, &split.minus)?;
                            c[3].record(a && b, || {
                                Witness::new(s, format!("plus positive: {a}, minus positive: {b}")).with_matrix(&p)
                            });
                        }
                        let back = model.jc_chart_inv(u, j, &split.plus, &split.minus)?;
                        c[4].record(model.same_flag(&back, &p)?, || Witness::new(s, "reassembled flag differs").with_matrix(&back));
                    }
                }
            }
            let qp = family_sample(model, family, v, u, p1)?.point;
            let qm = family_sample(model, family, u, w, p2)?.point;
            let ok = match model.jc_chart_inv(u, j, &qp, &qm) {
                Ok(g) => family_cell(model, family, &g)? == (v.clone(), w.clone()) && positivity_test(model, family, v, w, &g)?,
                Err(_) => false,
            };
            c[5].record(ok, || Witness::new(s, "reassembled factor samples are not positive in (v, w)"));
            Ok(c)
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport::new("product", format!("{} ({v}, {u}, {w})", family_label(family)), merge_checks(parts)))
}

/// Graded, thin and Eulerian after adjoining `0̂`; ball Euler sums; every
/// element other than the top lies below a coatom.
pub fn closure_checks(poset: &GradedPoset, top: &str) -> Result<Vec<Check>> {
    let hat = poset.with_bottom();
    let mut c = vec![Check::new("graded"), Check::new("thin"), Check::new("eulerian"), Check::new("ball-euler"), Check::new("boundary")];
    c[0].record(hat.is_graded()?, || Witness::new(0, format!("{top}: not graded")));
    c[1].record(hat.is_thin()?, || Witness::new(0, format!("{top}: not thin")));
    c[2].record(hat.is_eulerian()?, || Witness::new(0, format!("{top}: not Eulerian")));
    let top_rank = poset.element(top).ok_or(Error::MissingBound("top"))?.rank;
    let euler = ball_euler_check(poset, top_rank)?;
    c[3].record(euler.pass, || {
        Witness::new(0, format!("{top}: cell sum {}, boundary sum {} (want 1, {})", euler.cell_sum, euler.boundary_sum, euler.ball_expected_boundary))
    });
    let covers = poset.true_covers()?;
    let coatoms: Vec<&String> = covers.iter().filter(|(_, b)| b == top).map(|(a, _)| a).collect();
    let mut missing = Vec::new();
    for e in &poset.elements {
        if e.id == top {
            continue;
        }
        let mut below = false;
        for ca in &coatoms {
            if poset.leq(&e.id, ca)? {
                below = true;
                break;
            }
        }
        if !below {
            missing.push(e.id.clone());
        }
    }
    c[4].record(missing.is_empty(), || Witness::new(0, format!("{top}: not below any coatom: {}", missing.join(", "))));
    Ok(c)
}

/// Closure poset of a twisted cell `(v, w)`.
pub fn closure_poset(ctx: &TwistedContext, v: &WeylElement, w: &WeylElement) -> Result<SuiteReport> {
    let p = ctx.build_jq_poset(v, w)?;
    let checks = closure_checks(&p, &pair_id(v, w))?;
    Ok(SuiteReport::new("closure", format!("J={:?} ({v}, {w})", ctx.j()), checks))
}

/// Closure poset of a projected cell `(v, w) ∈ Q_K`.
pub fn closure_poset_qk(k: NodeSet, v: &WeylElement, w: &WeylElement) -> Result<SuiteReport> {
    let p = crate::orders::build_qk_poset(k, v, w)?;
    let checks = closure_checks(&p, &pair_id(v, w))?;
    Ok(SuiteReport::new("closure-qk", format!("K={k:?} ({v}, {w})"), checks))
}

/// The `x/y` reordering identities, the commuting relation, and the basic
/// properties of `ι`.
pub fn identities(model: &SlModel, opts: &SuiteOptions) -> Result<SuiteReport> {
    let params = draw(opts, 3);
    let flipped = opts.mutation == Mutation::FlipIota;
    let parts: Vec<Vec<Check>> = params
        .par_iter()
        .enumerate()
        .map(|(s, pr)| -> Result<Vec<Check>> {
            let mut xy = [Check::new("x-y reorder"), Check::new("x-y reorder (negative)"), Check::new("commuting")];
            check_xy_identities(model, s, &[pr[0].clone(), pr[1].clone(), pr[2].clone()], &mut xy)?;
            let mut io = Check::new("iota");
            check_iota(model, s, &pr[0], &pr[1], flipped, &mut io)?;
            let mut out = xy.to_vec();
            out.push(io);
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport::new("identities", format!("SL({})", model.size()), merge_checks(parts)))
}

/// The four factorization memberships for `h ∈ U^−_{w,>0}`,
/// `b ∈ U^+_{w^{-1},>0}` and the length-additive split `w = w1 · w2`.
pub fn gkl(model: &SlModel, w: &WeylElement, w1: &WeylElement, opts: &SuiteOptions) -> Result<SuiteReport> {
    let len = w.length();
    let mut r = rng(opts.seed);
    let params: Vec<(Vec<Q>, Vec<Q>)> = (0..opts.samples).map(|_| (random_params(&mut r, len), random_params(&mut r, len))).collect();
    let word = w.word().to_vec();
    let parts: Vec<Vec<Check>> = params
        .par_iter()
        .enumerate()
        .map(|(s, (ph, pb))| -> Result<Vec<Check>> {
            let mut c = vec![Check::new("precondition")];
            c.extend((1..=4).map(|k| Check::new(format!("membership {k}"))));
            let mut ph = ph.clone();
            if opts.mutation == Mutation::NegateParameter && !ph.is_empty() {
                ph[0] = -ph[0].clone();
            }
            let h = u_minus_signed(model, &word, &ph)?;
            let b = u_minus(model, &word, pb, Sign::Pos)?.transpose();
            let pre = in_u_minus_positive(model, w, &h)?;
            c[0].record(pre, || Witness::new(s, format!("h ∉ U^-_{{{w},>0}}")).with_matrix(&h));
            match gkl_memberships(model, w, w1, &h, &b) {
                Ok(ms) => {
                    for (k, m) in ms.iter().enumerate() {
                        c[k + 1].record(m.holds(), || Witness::new(s, format!("failing factors: {}", m.failing().join(", "))));
                    }
                }
                Err(e) => {
                    for ck in c.iter_mut().skip(1) {
                        ck.record(false, || Witness::new(s, format!("factorization failed: {e}")));
                    }
                }
            }
            Ok(c)
        })
        .collect::<Result<_>>()?;
    Ok(SuiteReport::new("gkl", format!("SL({}) w = {w}, w1 = {w1}", model.size()), merge_checks(parts)))
}

/// `∏ y_{i_k}(a_k)` with arbitrary signs.
fn u_minus_signed(model: &SlModel, word: &[usize], params: &[Q]) -> Result<RationalMatrix> {
    let mut g = model.identity();
    for (&i, a) in word.iter().zip(params) {
        g = &g * &model.gen_y(i, a)?;
    }
    Ok(g)
}

/// Glued matrix entries recomputed from node tags: nodes in a common copy
/// inherit the original entry, others get 0.
fn expected_glued_entry(cartan: &CartanData, glued: &crate::cartan::Glued, p: usize, q: usize) -> Result<i64> {
    use crate::cartan::NodeCopy;
    let (tp, tq) = (&glued.tags[p], &glued.tags[q]);
    let (i, j) = (cartan.index_of(&tp.base)?, cartan.index_of(&tq.base)?);
    let copies = |c: NodeCopy| match c {
        NodeCopy::Flat => (true, false),
        NodeCopy::Sharp => (false, true),
        NodeCopy::Glued => (true, true),
    };
    let ((pf, ps), (qf, qs)) = (copies(tp.copy), copies(tq.copy));
    Ok(if (pf && qf) || (ps && qs) { cartan.entry(i, j) } else { 0 })
}

/// Changes the first zero off-diagonal entry to −1 (or, if there is none,
/// the first −1 to −2).
pub fn perturb_glued(glued: &mut crate::cartan::Glued) {
    let m = &mut glued.data.matrix;
    let n = m.len();
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).filter(|(p, q)| p != q).collect();
    if let Some(&(p, q)) = cells.iter().find(|&&(p, q)| m[p][q] == 0) {
        m[p][q] = -1;
    } else if let Some(&(p, q)) = cells.first() {
        m[p][q] -= 1;
    }
}

/// The glued matrix against its definition, its GCM axioms, and `ν̃` as an
/// order embedding of every `Q_K` interval of rank `≤ max_rank` into the
/// glued group with its `I♭`-twisted order (rank ↦ twisted length).
pub fn glue(cartan: &CartanData, k: NodeSet, max_rank: usize, opts: &SuiteOptions) -> Result<SuiteReport> {
    let mut glued = cartan.glue(k)?;
    if opts.mutation == Mutation::PerturbGlued {
        perturb_glued(&mut glued);
    }
    let mut c = vec![Check::new("glued-matrix"), Check::new("glued-gcm"), Check::new("nu-order"), Check::new("nu-rank")];
    let m = glued.data.rank();
    for p in 0..m {
        for q in 0..m {
            let want = expected_glued_entry(cartan, &glued, p, q)?;
            let got = glued.data.entry(p, q);
            c[0].record(got == want, || Witness::new(0, format!("entry ({}, {}) = {got}, expected {want}", glued.data.nodes[p], glued.data.nodes[q])));
        }
    }
    let validation = glued.data.validate();
    let gcm_ok = validation.violations.iter().all(|v| v.contains("symmetrizable"));
    c[1].record(gcm_ok, || Witness::new(0, validation.violations.join("; ")));
    let gg = match WeylGroup::new(glued.data.clone()) {
        Ok(group) => GluedGroup { glued, group },
        Err(e) => {
            c[2].record(false, || Witness::new(0, format!("glued group: {e}")));
            return Ok(SuiteReport::new("glue", format!("K={k:?}"), c));
        }
    };
    let group = WeylGroup::new(cartan.clone())?;
    let tctx = gg.flat_context();
    for (v, w) in qk_tops(&group, k, max_rank)? {
        let poset = crate::orders::build_qk_poset(k, &v, &w)?;
        let pairs: Vec<(String, String)> = poset
            .elements
            .iter()
            .map(|e| (e.v.clone().expect("pair"), e.w.clone().expect("pair")))
            .collect();
        let parsed: Vec<(WeylElement, WeylElement)> = pairs
            .iter()
            .map(|(a, b)| Ok((weyl::parse_element(&group, a)?, weyl::parse_element(&group, b)?)))
            .collect::<Result<_>>()?;
        let images: Vec<WeylElement> = parsed.iter().map(|(a, b)| tilde_nu(k, a, b, &gg)).collect::<Result<_>>()?;
        let ids: Vec<String> = parsed.iter().map(|(a, b)| pair_id(a, b)).collect();
        for (x, img) in parsed.iter().zip(&images) {
            let want = x.1.length() as i64 - x.0.length() as i64;
            let got = tctx.twisted_length(img);
            c[3].record(got == want, || Witness::new(0, format!("ν̃{} = {img}: twisted length {got}, rank {want}", pair_id(&x.0, &x.1))));
        }
        for a in 0..parsed.len() {
            for b in 0..parsed.len() {
                let in_q = poset.leq(&ids[a], &ids[b])?;
                let in_w = tctx.twisted_leq(&images[a], &images[b]);
                c[2].record(in_q == in_w, || {
                    Witness::new(0, format!("below ({v}, {w}): {} ⪯ {} is {in_q}, images compare {in_w}", ids[a], ids[b]))
                });
            }
        }
    }
    Ok(SuiteReport::new("glue", format!("K={k:?}"), c))
}

/// Every `(v, w) ∈ Q_K` with `ℓ(w) − ℓ(v) ≤ max_rank` (finite type only).
pub fn qk_tops(group: &Arc<WeylGroup>, k: NodeSet, max_rank: usize) -> Result<Vec<(WeylElement, WeylElement)>> {
    let all = weyl::enumerate_upto(group, usize::MAX);
    let mut out = Vec::new();
    for w in all.iter().filter(|w| w.is_min_right_coset_rep(k)) {
        for v in &all {
            if v.length() <= w.length() && w.length() - v.length() <= max_rank && v.le(w) {
                out.push((v.clone(), w.clone()));
            }
        }
    }
    Ok(out)
}

/// `v^♯ (s_0 x)^♯ = v_J^♭ (^Jv · s_0 · x)^♯` with the right factor a minimal
/// coset representative, for `ℓ(v) ≤ max_v` and `ℓ(x) ≤ max_x`.
pub fn spade(cartan: &CartanData, j: NodeSet, max_v: usize, max_x: usize) -> Result<SuiteReport> {
    let group = WeylGroup::new(cartan.clone())?;
    let sp = SpadeGroup::new(cartan, j)?;
    let mut c = vec![Check::new("identity"), Check::new("minimal")];
    let vs = weyl::enumerate_upto(&group, max_v);
    let xs = weyl::enumerate_upto(&group, max_x);
    for v in &vs {
        for x in &xs {
            let img = sp.map(v, x);
            c[0].record(img.identity_holds, || Witness::new(0, format!("v = {v}, x = {x}: {} ≠ {}·{}", img.image, img.left, img.right)));
            c[1].record(img.right_is_minimal, || Witness::new(0, format!("v = {v}, x = {x}: {} has a flat left descent", img.right)));
        }
    }
    Ok(SuiteReport::new("spade", format!("J={j:?}"), c))
}

/// `^∅≤` is Bruhat order and `^I≤` its reverse, on all pairs up to `max_len`.
pub fn reductions(group: &Arc<WeylGroup>, max_len: usize) -> Result<SuiteReport> {
    let all = weyl::enumerate_upto(group, max_len);
    let empty = TwistedContext::new(group.clone(), NodeSet::EMPTY)?;
    let full = TwistedContext::new(group.clone(), NodeSet::full(group.rank()))?;
    let mut c = vec![Check::new("J=∅ is Bruhat"), Check::new("J=I is reversed Bruhat")];
    for v in &all {
        for w in &all {
            let b = v.le(w);
            c[0].record(empty.twisted_leq(v, w) == b, || Witness::new(0, format!("({v}, {w})")));
            c[1].record(full.twisted_leq(w, v) == b, || Witness::new(0, format!("({w}, {v})")));
        }
    }
    Ok(SuiteReport::new("reductions", format!("{} elements", all.len()), c))
}
