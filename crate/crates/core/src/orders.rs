//! The `J`-twisted length and Bruhat order, the cell posets `^JQ` and
//! `Q_K`, and the Weyl-level maps into glued diagrams.
//!
//! For `w = w_J · ^Jw` the twisted length is `^Jℓ(w) = ℓ(^Jw) − ℓ(w_J)`, and
//! `v ^J≤ w` iff some `u ∈ W_J` has `w_J ≤ v_J u^{-1}` and `u · ^Jv ≤ ^Jw`.
//!
//! Search bound: `u ∈ W_J` and `^Jv ∈ ^JW` give `ℓ(u · ^Jv) = ℓ(u) + ℓ(^Jv)`,
//! and `u · ^Jv ≤ ^Jw` forces that to be at most `ℓ(^Jw)`; hence only
//! `ℓ(u) ≤ ℓ(^Jw) − ℓ(^Jv)` needs to be tried.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cartan::{CartanData, Glued};
use crate::error::{Error, Result};
use crate::nodes::NodeSet;
use crate::topo::{GradedPoset, PosetElement};
use crate::weyl::{self, WeylElement, WeylGroup};

/// A Weyl group together with the twisting subset `J`, plus memo tables.
pub struct TwistedContext {
    group: Arc<WeylGroup>,
    j: NodeSet,
    parabolic: Mutex<(usize, Vec<WeylElement>)>,
    decomp: Mutex<HashMap<WeylElement, (WeylElement, WeylElement)>>,
    leq: Mutex<HashMap<(WeylElement, WeylElement), bool>>,
}

impl TwistedContext {
    pub fn new(group: Arc<WeylGroup>, j: NodeSet) -> Result<Self> {
        if !j.is_subset(group.nodes()) {
            return Err(Error::NotSubset(format!("{j:?} in rank {}", group.rank())));
        }
        Ok(TwistedContext {
            group,
            j,
            parabolic: Mutex::new((0, vec![])),
            decomp: Mutex::new(HashMap::new()),
            leq: Mutex::new(HashMap::new()),
        })
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn j(&self) -> NodeSet {
        self.j
    }

    /// Elements of `W_J` of length ≤ `max_len`, cached across calls.
    pub fn parabolic_upto(&self, max_len: usize) -> Vec<WeylElement> {
        let mut guard = self.parabolic.lock().expect("poisoned");
        if guard.1.is_empty() || guard.0 < max_len {
            *guard = (max_len, weyl::enumerate_parabolic(&self.group, self.j, max_len));
        }
        guard.1.iter().filter(|u| u.length() <= max_len).cloned().collect()
    }

    /// `(w_J, ^Jw)`.
    pub fn decompose(&self, w: &WeylElement) -> (WeylElement, WeylElement) {
        if let Some(d) = self.decomp.lock().expect("poisoned").get(w) {
            return d.clone();
        }
        let d = w.coset_decompose(self.j);
        let pair = (d.left_part, d.right_part);
        self.decomp.lock().expect("poisoned").insert(w.clone(), pair.clone());
        pair
    }

    pub fn twisted_length(&self, w: &WeylElement) -> i64 {
        let (wj, jw) = self.decompose(w);
        jw.length() as i64 - wj.length() as i64
    }

    pub fn twisted_leq(&self, v: &WeylElement, w: &WeylElement) -> bool {
        let key = (v.clone(), w.clone());
        if let Some(&b) = self.leq.lock().expect("poisoned").get(&key) {
            return b;
        }
        let b = self.twisted_leq_uncached(v, w);
        self.leq.lock().expect("poisoned").insert(key, b);
        b
    }

    fn twisted_leq_uncached(&self, v: &WeylElement, w: &WeylElement) -> bool {
        let (vj, jv) = self.decompose(v);
        let (wj, jw) = self.decompose(w);
        if jv.length() > jw.length() {
            return false;
        }
        let bound = jw.length() - jv.length();
        self.parabolic_upto(bound)
            .iter()
            .any(|u| u.mul(&jv).le(&jw) && wj.le(&vj.mul(&u.inverse())))
    }

    pub fn twisted_lt(&self, v: &WeylElement, w: &WeylElement) -> bool {
        v != w && self.twisted_leq(v, w)
    }

    /// `{x : v ^J≤ x ^J≤ w}`, sorted by `(twisted length, length, word)`.
    ///
    /// Candidates are `a · b` with `b ∈ ^JW`, `b ≤ ^Jw` and `a ∈ W_J` with
    /// `ℓ(a) ≤ ℓ(v_J) + ℓ(^Jw) − ℓ(^Jv)`: from `v ^J≤ x` we get
    /// `ℓ(x_J) ≤ ℓ(v_J) + ℓ(u) ≤ ℓ(v_J) + ℓ(^Jx) − ℓ(^Jv)`, and `x ^J≤ w`
    /// gives `^Jx ≤ ^Jw`.
    pub fn twisted_interval(&self, v: &WeylElement, w: &WeylElement) -> Result<Vec<WeylElement>> {
        if !self.twisted_leq(v, w) {
            return Err(Error::NotComparable(format!("{v} is not J-below {w}")));
        }
        let (vj, jv) = self.decompose(v);
        let (_, jw) = self.decompose(w);
        let bound = vj.length() + jw.length() - jv.length();
        let tops: Vec<WeylElement> = weyl::interval(&weyl::identity(&self.group), &jw)?
            .into_iter()
            .filter(|b| b.is_min_left_coset_rep(self.j))
            .collect();
        let lefts = self.parabolic_upto(bound);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for a in &lefts {
            for b in &tops {
                let x = a.mul(b);
                if seen.insert(x.clone()) && self.twisted_leq(v, &x) && self.twisted_leq(&x, w) {
                    out.push(x);
                }
            }
        }
        out.sort_by(|x, y| self.twisted_length(x).cmp(&self.twisted_length(y)).then_with(|| x.cmp(y)));
        Ok(out)
    }

    /// Minimal element of `W` under `^J≤` in finite type: `w_0(J)`.
    pub fn twisted_minimum(&self) -> Option<WeylElement> {
        weyl::longest_parabolic(&self.group, self.j)
    }

    /// Maximal element in finite type: the longest element of `^JW`.
    pub fn twisted_maximum(&self) -> Option<WeylElement> {
        let w0 = weyl::longest_parabolic(&self.group, self.group.nodes())?;
        Some(self.decompose(&w0).1)
    }

    /// The poset `^JQ` below `(v, w)`: pairs `v ^J≤ v' ^J≤ w' ^J≤ w` with
    /// `(v', w') ⪯ (v'', w'')` iff `v'' ^J≤ v' ^J≤ w' ^J≤ w''`, ranked by
    /// `^Jℓ(w') − ^Jℓ(v')`.
    pub fn build_jq_poset(&self, v: &WeylElement, w: &WeylElement) -> Result<GradedPoset> {
        let xs = self.twisted_interval(v, w)?;
        let n = xs.len();
        let leq: Vec<Vec<bool>> = (0..n)
            .map(|a| (0..n).map(|b| self.twisted_leq(&xs[a], &xs[b])).collect())
            .collect();
        let tl: Vec<i64> = xs.iter().map(|x| self.twisted_length(x)).collect();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| leq[a][b]).collect();
        let below = |p: (usize, usize), q: (usize, usize)| leq[q.0][p.0] && leq[p.1][q.1];
        let elements = pairs
            .iter()
            .map(|&(a, b)| pair_element(&xs[a], &xs[b], tl[b] - tl[a]))
            .collect();
        let covers = reduce(&pairs, below);
        let covers = covers
            .into_iter()
            .map(|(p, q)| (pair_id(&xs[pairs[p].0], &xs[pairs[p].1]), pair_id(&xs[pairs[q].0], &xs[pairs[q].1])))
            .collect();
        Ok(GradedPoset::new(elements, covers))
    }
}

/// `"v|w"` with canonical words.
pub fn pair_id(v: &WeylElement, w: &WeylElement) -> String {
    format!("{v}|{w}")
}

fn pair_element(v: &WeylElement, w: &WeylElement, rank: i64) -> PosetElement {
    PosetElement {
        id: pair_id(v, w),
        rank,
        v: Some(v.to_string()),
        w: Some(w.to_string()),
    }
}

/// Transitive reduction of the strict order `below` on `items`.
fn reduce<T: Copy + Sync>(items: &[T], below: impl Fn(T, T) -> bool + Sync) -> Vec<(usize, usize)> {
    let n = items.len();
    let rel: Vec<Vec<bool>> = (0..n)
        .into_par_iter()
        .map(|a| (0..n).map(|b| a != b && below(items[a], items[b])).collect())
        .collect();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if !rel[a][b] {
                continue;
            }
            if !(0..n).any(|c| rel[a][c] && rel[c][b]) {
                out.push((a, b));
            }
        }
    }
    out
}

/// The poset `Q_K` below `(v, w)`: pairs `(v', w')` with `v' ≤ w'`,
/// `w' ∈ W^K`, ordered by `(v', w') ⪯ (v, w)` iff some `u ∈ W_K` has
/// `v ≤ v'u ≤ w'u ≤ w`. Since `ℓ(w'u) = ℓ(w') + ℓ(u)`, only
/// `ℓ(u) ≤ ℓ(w) − ℓ(w')` is searched.
pub fn build_qk_poset(k: NodeSet, v: &WeylElement, w: &WeylElement) -> Result<GradedPoset> {
    check_qk(k, v, w)?;
    let group = v.group().clone();
    let wk = weyl::enumerate_parabolic(&group, k, w.length());
    let e = weyl::identity(&group);
    let mut pairs = Vec::new();
    for w1 in weyl::interval(&e, w)? {
        if !w1.is_min_right_coset_rep(k) {
            continue;
        }
        for v1 in weyl::interval(&e, &w1)? {
            if qk_preceq(&wk, (&v1, &w1), (v, w)) {
                pairs.push((v1.clone(), w1.clone()));
            }
        }
    }
    let idx: Vec<usize> = (0..pairs.len()).collect();
    let rank = |i: usize| pairs[i].1.length() as i64 - pairs[i].0.length() as i64;
    let below = |a: usize, b: usize| qk_preceq(&wk, (&pairs[a].0, &pairs[a].1), (&pairs[b].0, &pairs[b].1));
    let covers = reduce(&idx, below)
        .into_iter()
        .map(|(a, b)| (pair_id(&pairs[a].0, &pairs[a].1), pair_id(&pairs[b].0, &pairs[b].1)))
        .collect();
    let elements = idx.iter().map(|&i| pair_element(&pairs[i].0, &pairs[i].1, rank(i))).collect();
    Ok(GradedPoset::new(elements, covers))
}

fn check_qk(k: NodeSet, v: &WeylElement, w: &WeylElement) -> Result<()> {
    if !v.le(w) || !w.is_min_right_coset_rep(k) {
        return Err(Error::NotComparable(format!("({v}, {w}) is not in Q_K")));
    }
    Ok(())
}

/// `(v', w') ⪯ (v, w)` in `Q_K`; `wk` must contain `W_K` up to length
/// `ℓ(w) − ℓ(w')`.
pub fn qk_preceq(wk: &[WeylElement], lower: (&WeylElement, &WeylElement), upper: (&WeylElement, &WeylElement)) -> bool {
    let (v1, w1) = lower;
    let (v, w) = upper;
    if w1.length() > w.length() {
        return false;
    }
    let bound = w.length() - w1.length();
    wk.iter()
        .filter(|u| u.length() <= bound)
        .any(|u| {
            let wu = w1.mul(u);
            let vu = v1.mul(u);
            wu.le(w) && v.le(&vu) && vu.le(&wu)
        })
}

/// Which family a cell pair belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "nodes", rename_all = "lowercase")]
pub enum CellKind {
    Twisted(NodeSet),
    Projected(NodeSet),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPair {
    pub v: WeylElement,
    pub w: WeylElement,
    pub kind: CellKind,
}

impl CellPair {
    pub fn twisted(ctx: &TwistedContext, v: WeylElement, w: WeylElement) -> Result<Self> {
        if !ctx.twisted_leq(&v, &w) {
            return Err(Error::NotComparable(format!("{v} is not J-below {w}")));
        }
        Ok(CellPair { v, w, kind: CellKind::Twisted(ctx.j()) })
    }

    pub fn projected(k: NodeSet, v: WeylElement, w: WeylElement) -> Result<Self> {
        check_qk(k, &v, &w)?;
        Ok(CellPair { v, w, kind: CellKind::Projected(k) })
    }
}

/// The glued Weyl group used by [`tilde_nu`].
pub struct GluedGroup {
    pub glued: Glued,
    pub group: Arc<WeylGroup>,
}

impl GluedGroup {
    pub fn new(cartan: &CartanData, k: NodeSet) -> Result<Self> {
        let glued = cartan.glue(k)?;
        let group = WeylGroup::new(glued.data.clone())?;
        Ok(GluedGroup { glued, group })
    }

    pub fn flat(&self, x: &WeylElement) -> WeylElement {
        let word: Vec<usize> = x.word().iter().map(|&i| self.glued.flat_map[i]).collect();
        weyl::from_word(&self.group, &word).expect("glued indices are in range")
    }

    pub fn sharp(&self, x: &WeylElement) -> WeylElement {
        let word: Vec<usize> = x.word().iter().map(|&i| self.glued.sharp_map[i]).collect();
        weyl::from_word(&self.group, &word).expect("glued indices are in range")
    }

    /// Twisting context for `I♭` inside the glued group.
    pub fn flat_context(&self) -> TwistedContext {
        TwistedContext::new(self.group.clone(), self.glued.flat_nodes()).expect("flat nodes are nodes")
    }
}

/// `ν̃(v, w) = v^♭ · (w^{-1})^♯` for `(v, w) ∈ Q_K`.
///
/// This orientation makes `ν̃` order-preserving from `⪯` to the
/// `I♭`-twisted order and sends rank `ℓ(w) − ℓ(v)` to twisted length; the
/// swapped form `w^♭ (v^{-1})^♯` reverses the order already for `K = ∅`.
pub fn tilde_nu(k: NodeSet, v: &WeylElement, w: &WeylElement, glued: &GluedGroup) -> Result<WeylElement> {
    check_qk(k, v, w)?;
    Ok(glued.flat(v).mul(&glued.sharp(&w.inverse())))
}

/// Data for the map `(v, x) ↦ v^♯ (s_0 x)^♯` into the Weyl group of the
/// extended diagram glued along `J`.
pub struct SpadeGroup {
    pub glued: GluedGroup,
    /// Index of the extension node `0` in the extended (unglued) diagram.
    pub zero: usize,
    pub j: NodeSet,
}

#[derive(Clone, Debug)]
pub struct SpadeImage {
    pub image: WeylElement,
    /// `v_J^♭`
    pub left: WeylElement,
    /// `(^Jv · s_0 · x)^♯`
    pub right: WeylElement,
    /// `image = left · right`
    pub identity_holds: bool,
    /// `right` has no left descent among the flat nodes.
    pub right_is_minimal: bool,
}

impl SpadeGroup {
    pub fn new(cartan: &CartanData, j: NodeSet) -> Result<Self> {
        let ext = cartan.extend_shriek();
        let zero = cartan.rank();
        Ok(SpadeGroup { glued: GluedGroup::new(&ext, j)?, zero, j })
    }

    /// Lifts an element of `W(A)` to `W(A^!)` via its canonical word.
    fn lift(&self, x: &WeylElement, prefix_zero: bool) -> Vec<usize> {
        let mut word = Vec::with_capacity(x.length() + 1);
        if prefix_zero {
            word.push(self.zero);
        }
        word.extend_from_slice(x.word());
        word
    }

    fn sharp_word(&self, word: &[usize]) -> WeylElement {
        let w: Vec<usize> = word.iter().map(|&i| self.glued.glued.sharp_map[i]).collect();
        weyl::from_word(&self.glued.group, &w).expect("in range")
    }

    fn flat_word(&self, word: &[usize]) -> WeylElement {
        let w: Vec<usize> = word.iter().map(|&i| self.glued.glued.flat_map[i]).collect();
        weyl::from_word(&self.glued.group, &w).expect("in range")
    }

    pub fn map(&self, v: &WeylElement, x: &WeylElement) -> SpadeImage {
        let image = self.sharp_word(v.word()).mul(&self.sharp_word(&self.lift(x, true)));
        let d = v.coset_decompose(self.j);
        let left = self.flat_word(d.left_part.word());
        let mut inner = d.right_part.word().to_vec();
        inner.extend(self.lift(x, true));
        let right = self.sharp_word(&inner);
        let identity_holds = left.mul(&right) == image;
        let flats = self.glued.glued.flat_nodes();
        let right_is_minimal = right.is_min_left_coset_rep(flats);
        SpadeImage { image, left, right, identity_holds, right_is_minimal }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize, j: &[usize]) -> TwistedContext {
        let g = WeylGroup::new(CartanData::type_a(n)).unwrap();
        TwistedContext::new(g, NodeSet::from_indices(j.iter().copied())).unwrap()
    }

    fn el(c: &TwistedContext, w: &[usize]) -> WeylElement {
        weyl::from_word(c.group(), w).unwrap()
    }

    #[test]
    fn twisted_lengths() {
        let c = ctx(2, &[0]);
        assert_eq!(c.twisted_length(&el(&c, &[0])), -1);
        assert_eq!(c.twisted_length(&el(&c, &[0, 1])), 0);
        let c0 = ctx(2, &[]);
        assert_eq!(c0.twisted_length(&el(&c0, &[0, 1, 0])), 3);
    }

    #[test]
    fn twisted_leq_example() {
        let c = ctx(2, &[0]);
        assert!(c.twisted_leq(&el(&c, &[0]), &el(&c, &[])));
        assert!(!c.twisted_leq(&el(&c, &[]), &el(&c, &[0])));
    }

    #[test]
    fn extreme_elements() {
        let c = ctx(2, &[0]);
        assert_eq!(c.twisted_minimum().unwrap(), el(&c, &[0]));
        assert_eq!(c.twisted_maximum().unwrap(), el(&c, &[1, 0]));
    }

    #[test]
    fn twisted_interval_matches_filter() {
        let c = ctx(2, &[0]);
        let v = el(&c, &[0]);
        let w = el(&c, &[1, 0]);
        let got = c.twisted_interval(&v, &w).unwrap();
        let all = weyl::enumerate_upto(c.group(), 3);
        let want: HashSet<_> = all.into_iter().filter(|x| c.twisted_leq(&v, x) && c.twisted_leq(x, &w)).collect();
        assert_eq!(got.iter().cloned().collect::<HashSet<_>>(), want);
        assert_eq!(c.twisted_interval(&w, &w).unwrap(), vec![w.clone()]);
    }

    #[test]
    fn jq_poset_of_s3_has_19_pairs() {
        let c = ctx(2, &[]);
        let p = c.build_jq_poset(&el(&c, &[]), &el(&c, &[0, 1, 0])).unwrap();
        assert_eq!(p.len(), 19);
        let mut per_rank = [0; 4];
        for e in &p.elements {
            per_rank[e.rank as usize] += 1;
        }
        assert_eq!(per_rank, [6, 8, 4, 1]);
        let hat = p.with_bottom();
        assert!(hat.is_graded().unwrap() && hat.is_thin().unwrap() && hat.is_eulerian().unwrap());
    }

    #[test]
    fn qk_poset_small() {
        let g = WeylGroup::new(CartanData::type_a(2)).unwrap();
        let k = NodeSet::from_indices([1]);
        let e = weyl::identity(&g);
        let w = weyl::from_word(&g, &[1, 0]).unwrap();
        let p = build_qk_poset(k, &e, &w).unwrap();
        let hat = p.with_bottom();
        assert!(hat.is_graded().unwrap() && hat.is_thin().unwrap() && hat.is_eulerian().unwrap());
        assert!(build_qk_poset(k, &e, &weyl::from_word(&g, &[0, 1]).unwrap()).is_err());
    }

    #[test]
    fn tilde_nu_a1() {
        let a1 = CartanData::type_a(1);
        let g = WeylGroup::new(a1.clone()).unwrap();
        let gg = GluedGroup::new(&a1, NodeSet::EMPTY).unwrap();
        let s = weyl::from_word(&g, &[0]).unwrap();
        let img = tilde_nu(NodeSet::EMPTY, &s, &s, &gg).unwrap();
        assert_eq!(img.word(), &[0, 1]);
        let e = weyl::identity(&g);
        assert!(tilde_nu(NodeSet::EMPTY, &e, &e, &gg).unwrap().is_identity());
    }

    #[test]
    fn spade_examples() {
        let a1 = CartanData::type_a(1);
        let g = WeylGroup::new(a1.clone()).unwrap();
        let sp = SpadeGroup::new(&a1, NodeSet::EMPTY).unwrap();
        let e = weyl::identity(&g);
        let img = sp.map(&e, &e);
        assert_eq!(img.image.labels(), vec!["0♯"]);
        let s = weyl::from_word(&g, &[0]).unwrap();
        let img = sp.map(&s, &e);
        assert_eq!(img.image.labels(), vec!["1♯", "0♯"]);
        assert!(img.identity_holds && img.left.is_identity());

        let a2 = CartanData::type_a(2);
        let g2 = WeylGroup::new(a2.clone()).unwrap();
        let sp2 = SpadeGroup::new(&a2, NodeSet::from_indices([0])).unwrap();
        let img = sp2.map(&weyl::from_word(&g2, &[0, 1]).unwrap(), &weyl::identity(&g2));
        assert!(img.identity_holds && img.right_is_minimal);
    }
}
