use proptest::prelude::*;
use tnnflag_core::orders::TwistedContext;
use tnnflag_core::topo::ball_euler_check;
use tnnflag_core::weyl;
use tnnflag_core::{CartanData, GradedPoset, NodeSet, PosetElement, WeylGroup};

/// Random poset: `layers[r]` elements at rank `r`, covers only between
/// consecutive ranks, chosen by `mask`.
fn layered(layers: &[usize], mask: &[bool]) -> GradedPoset {
    let id = |r: usize, i: usize| format!("{r}.{i}");
    let mut elements = Vec::new();
    let mut covers = Vec::new();
    let mut k = 0;
    for (r, &cnt) in layers.iter().enumerate() {
        for i in 0..cnt {
            elements.push(PosetElement::new(id(r, i), r as i64));
            if r + 1 < layers.len() {
                for j in 0..layers[r + 1] {
                    if mask[k % mask.len()] {
                        covers.push((id(r, i), id(r + 1, j)));
                    }
                    k += 1;
                }
            }
        }
    }
    GradedPoset::new(elements, covers)
}

/// Hall: `μ(x, y) = Σ_k (−1)^k · #{chains x = x_0 < … < x_k = y}`.
fn mobius_by_chains(p: &GradedPoset, x: &str, y: &str) -> i64 {
    let ids: Vec<&str> = p.elements.iter().map(|e| e.id.as_str()).collect();
    let lt = |a: &str, b: &str| a != b && p.leq(a, b).unwrap();
    // signed chain counts from x to each element, in rank order
    let mut order: Vec<&PosetElement> = p.elements.iter().collect();
    order.sort_by_key(|e| e.rank);
    let mut signed = std::collections::HashMap::new();
    signed.insert(x, 1i64);
    for e in order {
        let z = e.id.as_str();
        if z == x || !lt(x, z) {
            continue;
        }
        let s: i64 = ids.iter().filter(|&&t| (t == x || lt(x, t)) && lt(t, z)).map(|t| signed.get(t).copied().unwrap_or(0)).sum();
        signed.insert(z, -s);
    }
    signed[y]
}

proptest! {
    #[test]
    fn mobius_matches_chain_counts(layers in prop::collection::vec(1usize..=3, 1..=4), mask in prop::collection::vec(any::<bool>(), 1..=24)) {
        let p = layered(&layers, &mask);
        for a in &p.elements {
            for b in &p.elements {
                if p.leq(&a.id, &b.id).unwrap() {
                    prop_assert_eq!(p.mobius(&a.id, &b.id).unwrap(), mobius_by_chains(&p, &a.id, &b.id));
                } else {
                    prop_assert!(p.mobius(&a.id, &b.id).is_err());
                }
            }
        }
    }

    #[test]
    fn json_and_dot_round_trip(layers in prop::collection::vec(1usize..=3, 1..=4), mask in prop::collection::vec(any::<bool>(), 1..=24)) {
        let p = layered(&layers, &mask);
        let back = GradedPoset::from_json(&p.export_json()).unwrap();
        let mut a = p.elements.clone();
        let mut b = back.elements.clone();
        a.sort_by(|x, y| x.id.cmp(&y.id));
        b.sort_by(|x, y| x.id.cmp(&y.id));
        prop_assert_eq!(a, b);
        let mut ca = p.covers.clone();
        let mut cb = back.covers.clone();
        ca.sort();
        cb.sort();
        prop_assert_eq!(ca, cb);
        prop_assert_eq!(back.export_json(), p.export_json());
        let dot = p.export_dot();
        prop_assert_eq!(dot.matches(" -> ").count(), p.covers.len());
        for e in &p.elements {
            let needle = format!("\"{}\" [label=", e.id);
            prop_assert!(dot.contains(&needle));
        }
    }

    #[test]
    fn true_covers_are_a_transitive_reduction(layers in prop::collection::vec(1usize..=3, 1..=4), mask in prop::collection::vec(any::<bool>(), 1..=24)) {
        let mut p = layered(&layers, &mask);
        // add redundant relations spanning two ranks
        let extra: Vec<(String, String)> = p.covers.iter().flat_map(|(a, b)| {
            p.covers.iter().filter(move |(c, _)| c == b).map(move |(_, d)| (a.clone(), d.clone()))
        }).collect();
        let before: Vec<Vec<bool>> = p.elements.iter().map(|x| p.elements.iter().map(|y| p.leq(&x.id, &y.id).unwrap()).collect()).collect();
        p.covers.extend(extra);
        let reduced = GradedPoset::new(p.elements.clone(), p.true_covers().unwrap());
        let after: Vec<Vec<bool>> = p.elements.iter().map(|x| p.elements.iter().map(|y| reduced.leq(&x.id, &y.id).unwrap()).collect()).collect();
        prop_assert_eq!(before, after);
        for (a, b) in &reduced.covers {
            prop_assert_eq!(p.element(b).unwrap().rank - p.element(a).unwrap().rank, 1);
        }
    }
}

#[test]
fn boolean_lattices_are_eulerian_and_chains_are_not() {
    for atoms in 1..=4 {
        let b = GradedPoset::boolean_lattice(atoms);
        assert!(b.is_graded().unwrap() && b.is_thin().unwrap() && b.is_eulerian().unwrap());
        assert_eq!(b.mobius("{}", &b.elements.last().unwrap().id).unwrap(), if atoms % 2 == 0 { 1 } else { -1 });
    }
    let c = GradedPoset::chain(3);
    assert!(c.is_graded().unwrap());
    assert!(!c.is_thin().unwrap());
    assert!(!c.is_eulerian().unwrap());
    assert!(!ball_euler_check(&c, 3).unwrap().pass);
}

#[test]
fn twisted_closures_in_s3_are_eulerian_balls() {
    let g = WeylGroup::new(CartanData::type_a(2)).unwrap();
    let all = weyl::enumerate_upto(&g, 3);
    for j in NodeSet::all_subsets(2) {
        let ctx = TwistedContext::new(g.clone(), j).unwrap();
        for v in &all {
            for w in &all {
                if !ctx.twisted_lt(v, w) {
                    continue;
                }
                let p = ctx.build_jq_poset(v, w).unwrap();
                let top = ctx.twisted_length(w) - ctx.twisted_length(v);
                let hat = p.with_bottom();
                assert!(hat.is_eulerian().unwrap(), "J={j:?} ({v}, {w})");
                let r = ball_euler_check(&p, top).unwrap();
                assert!(r.pass, "J={j:?} ({v}, {w}): {r:?}");
            }
        }
    }
}
