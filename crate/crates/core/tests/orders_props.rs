use std::collections::HashSet;
use std::sync::Arc;

use tnnflag_core::orders::{build_qk_poset, qk_preceq, tilde_nu, GluedGroup};
use tnnflag_core::weyl::{self, WeylElement};
use tnnflag_core::{CartanData, NodeSet, TwistedContext, WeylGroup};

fn setup(n: usize) -> (Arc<WeylGroup>, Vec<WeylElement>) {
    let g = WeylGroup::new(CartanData::type_a(n)).unwrap();
    let all = weyl::enumerate_upto(&g, 100);
    (g, all)
}

/// The defining condition with no length bound on `u ∈ W_J`.
fn twisted_leq_unbounded(j: NodeSet, wj_all: &[WeylElement], v: &WeylElement, w: &WeylElement) -> bool {
    let dv = v.coset_decompose(j);
    let dw = w.coset_decompose(j);
    wj_all.iter().any(|u| {
        u.mul(&dv.right_part).le(&dw.right_part) && dw.left_part.le(&dv.left_part.mul(&u.inverse()))
    })
}

#[test]
fn twisted_order_matches_definition_and_extremes() {
    for n in [2usize, 3] {
        let (g, all) = setup(n);
        for j in NodeSet::all_subsets(n) {
            let ctx = TwistedContext::new(g.clone(), j).unwrap();
            let wj = weyl::enumerate_parabolic(&g, j, 100);
            for v in &all {
                for w in &all {
                    let t = ctx.twisted_leq(v, w);
                    assert_eq!(t, twisted_leq_unbounded(j, &wj, v, w), "n={n} J={j:?} {v} ≤ {w}");
                    if j.is_empty() {
                        assert_eq!(t, v.le(w));
                    }
                    if j == g.nodes() {
                        assert_eq!(t, w.le(v));
                    }
                }
            }
            assert!(all.iter().all(|x| ctx.twisted_leq(&ctx.twisted_minimum().unwrap(), x)));
            assert!(all.iter().all(|x| ctx.twisted_leq(x, &ctx.twisted_maximum().unwrap())));
        }
    }
}

#[test]
fn twisted_order_is_a_graded_partial_order() {
    for n in [2usize, 3] {
        let (g, all) = setup(n);
        for j in NodeSet::all_subsets(n) {
            let ctx = TwistedContext::new(g.clone(), j).unwrap();
            let m = all.len();
            let leq: Vec<Vec<bool>> = (0..m).map(|a| (0..m).map(|b| ctx.twisted_leq(&all[a], &all[b])).collect()).collect();
            for a in 0..m {
                assert!(leq[a][a]);
                for b in 0..m {
                    if a != b && leq[a][b] {
                        assert!(!leq[b][a], "antisymmetry");
                        assert!(ctx.twisted_length(&all[a]) < ctx.twisted_length(&all[b]));
                    }
                    for c in 0..m {
                        assert!(!(leq[a][b] && leq[b][c]) || leq[a][c], "transitivity");
                    }
                }
            }
            // covers raise the twisted length by exactly one
            for a in 0..m {
                for b in 0..m {
                    if a == b || !leq[a][b] {
                        continue;
                    }
                    let cover = !(0..m).any(|c| c != a && c != b && leq[a][c] && leq[c][b]);
                    if cover {
                        assert_eq!(ctx.twisted_length(&all[b]) - ctx.twisted_length(&all[a]), 1, "{} ⋖ {}", all[a], all[b]);
                    }
                }
            }
        }
    }
}

#[test]
fn twisted_intervals_match_filter() {
    let (g, all) = setup(3);
    for j in NodeSet::all_subsets(3) {
        let ctx = TwistedContext::new(g.clone(), j).unwrap();
        for v in all.iter().step_by(3) {
            for w in all.iter().step_by(2) {
                if !ctx.twisted_leq(v, w) {
                    assert!(ctx.twisted_interval(v, w).is_err());
                    continue;
                }
                let got: HashSet<WeylElement> = ctx.twisted_interval(v, w).unwrap().into_iter().collect();
                let want: HashSet<WeylElement> =
                    all.iter().filter(|x| ctx.twisted_leq(v, x) && ctx.twisted_leq(x, w)).cloned().collect();
                assert_eq!(got, want, "J={j:?} [{v}, {w}]");
            }
        }
    }
}

#[test]
fn tilde_nu_is_injective_and_monotone() {
    for n in [2usize, 3] {
        let (g, all) = setup(n);
        let cartan = CartanData::type_a(n);
        for k in NodeSet::all_subsets(n) {
            let glued = GluedGroup::new(&cartan, k).unwrap();
            let flat = glued.flat_context();
            let top = all.iter().filter(|w| w.is_min_right_coset_rep(k)).max_by_key(|w| w.length()).unwrap();
            let e = weyl::identity(&g);
            let q = build_qk_poset(k, &e, top).unwrap();
            let pairs: Vec<(WeylElement, WeylElement)> = q
                .elements
                .iter()
                .map(|p| {
                    let v = weyl::parse_element(&g, p.v.as_deref().unwrap()).unwrap();
                    let w = weyl::parse_element(&g, p.w.as_deref().unwrap()).unwrap();
                    (v, w)
                })
                .collect();
            let wk = weyl::enumerate_parabolic(&g, k, 100);
            let images: Vec<WeylElement> = pairs.iter().map(|(v, w)| tilde_nu(k, v, w, &glued).unwrap()).collect();
            let distinct: HashSet<&WeylElement> = images.iter().collect();
            assert_eq!(distinct.len(), images.len(), "K={k:?}");
            for (a, p) in q.elements.iter().enumerate() {
                let tl = flat.twisted_length(&images[a]);
                assert_eq!(tl, p.rank + flat.twisted_length(&weyl::identity(&glued.group)), "rank for K={k:?}");
                for (b, r) in pairs.iter().enumerate() {
                    if qk_preceq(&wk, (&pairs[a].0, &pairs[a].1), (&r.0, &r.1)) {
                        assert!(flat.twisted_leq(&images[a], &images[b]), "{} ⪯ {}", p.id, q.elements[b].id);
                    }
                }
            }
        }
    }
}
