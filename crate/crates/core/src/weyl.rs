//! Weyl groups of generalized Cartan matrices, realized through their
//! integer action on the root lattice.
//!
//! Convention: `s_i(α_j) = α_j − a_ij α_i`, and column `j` of an action
//! matrix holds the simple-root coordinates of `w(α_j)`. For `A_2` this gives
//! `s_1 = [[-1, 1], [0, 1]]`.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::nodes::NodeSet;

/// Hard cap on the length of a longest element search; beyond this the
/// parabolic subgroup is treated as infinite.
const LONGEST_SEARCH_CAP: usize = 4096;

#[derive(Debug)]
pub struct WeylGroup {
    cartan: CartanData,
}

impl WeylGroup {
    /// Accepts any matrix satisfying the GCM axioms; symmetrizability is not
    /// needed to define the Coxeter group.
    pub fn new(cartan: CartanData) -> Result<Arc<Self>> {
        let v = cartan.validate();
        let fatal: Vec<_> = v
            .violations
            .into_iter()
            .filter(|s| s != "matrix is not symmetrizable")
            .collect();
        if !fatal.is_empty() {
            return Err(Error::InvalidCartan(fatal.join("; ")));
        }
        if cartan.rank() > 64 {
            return Err(Error::InvalidCartan("rank above 64".into()));
        }
        Ok(Arc::new(WeylGroup { cartan }))
    }

    pub fn cartan(&self) -> &CartanData {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }
}

pub fn identity(group: &Arc<WeylGroup>) -> WeylElement {
    let n = group.rank();
    let mut m = vec![0i64; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    WeylElement {
        group: group.clone(),
        action: m.clone(),
        inverse: m,
        word: OnceLock::from(Vec::new()),
    }
}

pub fn simple_reflection(group: &Arc<WeylGroup>, i: usize) -> Result<WeylElement> {
    let n = group.rank();
    if i >= n {
        return Err(Error::NodeOutOfRange { index: i, rank: n });
    }
    Ok(identity(group).mul_simple_right(i))
}

/// Product of the simple reflections in `word`, left to right.
pub fn from_word(group: &Arc<WeylGroup>, word: &[usize]) -> Result<WeylElement> {
    let n = group.rank();
    let mut w = identity(group);
    for &i in word {
        if i >= n {
            return Err(Error::NodeOutOfRange { index: i, rank: n });
        }
        w = w.mul_simple_right(i);
    }
    Ok(w)
}

/// Parses a word of node labels. Accepts `e` (or an empty string) for the
/// identity, labels separated by `.`, `,` or spaces, or — when every label is
/// a single character — the labels run together (`121`).
pub fn parse_word(group: &Arc<WeylGroup>, text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "e" {
        return Ok(Vec::new());
    }
    let cartan = group.cartan();
    let tokens: Vec<&str> = text
        .split(|c: char| c == '.' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect();
    if tokens.len() == 1 && cartan.index_of(tokens[0]).is_err() {
        let chars: Vec<String> = tokens[0].chars().map(String::from).collect();
        if chars.iter().all(|c| cartan.index_of(c).is_ok()) {
            return chars.iter().map(|c| cartan.index_of(c)).collect();
        }
    }
    tokens.iter().map(|t| cartan.index_of(t)).collect()
}

pub fn parse_element(group: &Arc<WeylGroup>, text: &str) -> Result<WeylElement> {
    from_word(group, &parse_word(group, text)?)
}

/// A Weyl group element. Equality and hashing use the action matrix only.
#[derive(Clone)]
pub struct WeylElement {
    group: Arc<WeylGroup>,
    action: Vec<i64>,
    inverse: Vec<i64>,
    word: OnceLock<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.action == other.action
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.action.hash(state);
    }
}

/// Orders by `(length, canonical word)`.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length()
            .cmp(&other.length())
            .then_with(|| self.word().cmp(other.word()))
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "W[{self}]")
    }
}

/// Canonical word with labels joined by `.`; the identity prints as `e`.
impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("e");
        }
        f.write_str(&self.labels().join("."))
    }
}

impl WeylElement {
    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn same_group(&self, other: &WeylElement) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || self.group.cartan == other.group.cartan
    }

    pub fn action(&self) -> &[i64] {
        &self.action
    }

    /// Image of `α_j` in simple-root coordinates.
    pub fn image_of_simple(&self, j: usize) -> Vec<i64> {
        let n = self.rank();
        (0..n).map(|r| self.action[r * n + j]).collect()
    }

    pub fn action_rows(&self) -> Vec<Vec<i64>> {
        self.action.chunks(self.rank()).map(<[i64]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        let n = self.rank();
        (0..n).all(|r| (0..n).all(|c| self.action[r * n + c] == i64::from(r == c)))
    }

    fn column_negative(m: &[i64], n: usize, i: usize) -> bool {
        // a root is either positive or negative, so one nonzero entry decides
        (0..n).map(|r| m[r * n + i]).find(|&x| x != 0).is_some_and(|x| x < 0)
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(α_i) < 0`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        Self::column_negative(&self.action, self.rank(), i)
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `w^{-1}(α_i) < 0`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        Self::column_negative(&self.inverse, self.rank(), i)
    }

    pub fn right_descents(&self) -> NodeSet {
        (0..self.rank()).filter(|&i| self.has_right_descent(i)).collect()
    }

    pub fn left_descents(&self) -> NodeSet {
        (0..self.rank()).filter(|&i| self.has_left_descent(i)).collect()
    }

    /// `w · s_i`: only column `i` of the action changes.
    pub fn mul_simple_right(&self, i: usize) -> WeylElement {
        let n = self.rank();
        let a = &self.group.cartan.matrix;
        let mut action = self.action.clone();
        for r in 0..n {
            let col_i = self.action[r * n + i];
            for j in 0..n {
                action[r * n + j] -= a[i][j] * col_i;
            }
        }
        let inverse = Self::left_reflect(&self.inverse, a, n, i);
        WeylElement { group: self.group.clone(), action, inverse, word: OnceLock::new() }
    }

    /// `s_i · w`.
    pub fn mul_simple_left(&self, i: usize) -> WeylElement {
        let n = self.rank();
        let a = &self.group.cartan.matrix;
        let action = Self::left_reflect(&self.action, a, n, i);
        let mut inverse = self.inverse.clone();
        for r in 0..n {
            let col_i = self.inverse[r * n + i];
            for j in 0..n {
                inverse[r * n + j] -= a[i][j] * col_i;
            }
        }
        WeylElement { group: self.group.clone(), action, inverse, word: OnceLock::new() }
    }

    // s_i M replaces row i by M_i − Σ_k a_ik M_k
    fn left_reflect(m: &[i64], a: &[Vec<i64>], n: usize, i: usize) -> Vec<i64> {
        let mut out = m.to_vec();
        for c in 0..n {
            let mut acc = 0i64;
            for k in 0..n {
                acc += a[i][k] * m[k * n + c];
            }
            out[i * n + c] = m[i * n + c] - acc;
        }
        out
    }

    pub fn inverse(&self) -> WeylElement {
        let word = self.word.get().map(|w| w.iter().rev().copied().collect::<Vec<_>>());
        let mut out = WeylElement {
            group: self.group.clone(),
            action: self.inverse.clone(),
            inverse: self.action.clone(),
            word: OnceLock::new(),
        };
        // the reversed word is reduced but not necessarily canonical
        if word.as_ref().is_some_and(|w| w.len() <= 1) {
            out.word = OnceLock::from(word.unwrap());
        }
        out
    }

    /// Group product. Panics if the elements live in different groups; see
    /// [`WeylElement::try_mul`].
    pub fn mul(&self, other: &WeylElement) -> WeylElement {
        self.try_mul(other).expect("multiplying elements of different Weyl groups")
    }

    pub fn try_mul(&self, other: &WeylElement) -> Result<WeylElement> {
        if !self.same_group(other) {
            return Err(Error::AmbientMismatch);
        }
        let n = self.rank();
        Ok(WeylElement {
            group: self.group.clone(),
            action: matmul(&self.action, &other.action, n),
            inverse: matmul(&other.inverse, &self.inverse, n),
            word: OnceLock::new(),
        })
    }

    pub fn mul_word_right(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(self.clone(), |acc, &i| acc.mul_simple_right(i))
    }

    /// Canonical reduced word: peel the smallest left descent repeatedly.
    pub fn word(&self) -> &[usize] {
        self.word.get_or_init(|| {
            let mut out = Vec::new();
            let mut cur = self.clone();
            cur.word = OnceLock::new();
            loop {
                match (0..cur.rank()).find(|&i| cur.has_left_descent(i)) {
                    Some(i) => {
                        out.push(i);
                        cur = cur.mul_simple_left(i);
                    }
                    None => break,
                }
            }
            out
        })
    }

    pub fn length(&self) -> usize {
        self.word().len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.word().iter().map(|&i| self.group.cartan.nodes[i].clone()).collect()
    }

    /// Set of nodes occurring in any (equivalently every) reduced word.
    pub fn support(&self) -> NodeSet {
        self.word().iter().copied().collect()
    }

    pub fn in_parabolic(&self, j: NodeSet) -> bool {
        self.support().is_subset(j)
    }

    /// Bruhat order via the right-greedy subword test on the canonical word
    /// of `w`. Panics on mismatched groups; see [`bruhat_leq`].
    pub fn le(&self, w: &WeylElement) -> bool {
        bruhat_leq(self, w).expect("comparing elements of different Weyl groups")
    }

    pub fn lt(&self, w: &WeylElement) -> bool {
        self != w && self.le(w)
    }

    /// `(w_J, ^Jw)` with `w = w_J · ^Jw`, `w_J ∈ W_J`, `^Jw ∈ ^JW`.
    pub fn coset_decompose(&self, j: NodeSet) -> CosetDecomposition {
        let mut left = identity(&self.group);
        let mut right = self.clone();
        while let Some(i) = j.iter().find(|&i| i < self.rank() && right.has_left_descent(i)) {
            right = right.mul_simple_left(i);
            left = left.mul_simple_right(i);
        }
        CosetDecomposition { left_part: left, right_part: right }
    }

    /// `(w^J, w_J)` with `w = w^J · w_J`, `w^J ∈ W^J`, `w_J ∈ W_J`.
    pub fn coset_decompose_right(&self, j: NodeSet) -> (WeylElement, WeylElement) {
        let mut left = self.clone();
        let mut right = identity(&self.group);
        while let Some(i) = j.iter().find(|&i| i < self.rank() && left.has_right_descent(i)) {
            left = left.mul_simple_right(i);
            right = right.mul_simple_left(i);
        }
        (left, right)
    }

    /// `w ∈ ^JW`: no left descent in `J`.
    pub fn is_min_left_coset_rep(&self, j: NodeSet) -> bool {
        j.iter().all(|i| i >= self.rank() || !self.has_left_descent(i))
    }

    /// `w ∈ W^J`: no right descent in `J`.
    pub fn is_min_right_coset_rep(&self, j: NodeSet) -> bool {
        j.iter().all(|i| i >= self.rank() || !self.has_right_descent(i))
    }
}

fn matmul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub left_part: WeylElement,
    pub right_part: WeylElement,
}

pub fn bruhat_leq(v: &WeylElement, w: &WeylElement) -> Result<bool> {
    if !v.same_group(w) {
        return Err(Error::AmbientMismatch);
    }
    if v.length() > w.length() {
        return Ok(false);
    }
    let mut u = v.clone();
    for &i in w.word().iter().rev() {
        if u.has_right_descent(i) {
            u = u.mul_simple_right(i);
        }
    }
    Ok(u.is_identity())
}

/// `s_i ∗ w = max{w, s_i w}`.
pub fn demazure_star(i: usize, w: &WeylElement) -> WeylElement {
    if w.has_left_descent(i) {
        w.clone()
    } else {
        w.mul_simple_left(i)
    }
}

/// `s_i ∘_l w = min{w, s_i w}`.
pub fn demazure_circ_left(i: usize, w: &WeylElement) -> WeylElement {
    if w.has_left_descent(i) {
        w.mul_simple_left(i)
    } else {
        w.clone()
    }
}

/// `w ∘_r s_i = min{w, w s_i}`.
pub fn demazure_circ_right(w: &WeylElement, i: usize) -> WeylElement {
    if w.has_right_descent(i) {
        w.mul_simple_right(i)
    } else {
        w.clone()
    }
}

/// `s_{i_1} ∗ (s_{i_2} ∗ (… ∗ (s_{i_k} ∗ w)))`.
pub fn demazure_star_word(word: &[usize], w: &WeylElement) -> WeylElement {
    word.iter().rev().fold(w.clone(), |acc, &i| demazure_star(i, &acc))
}

pub fn demazure_circ_left_word(word: &[usize], w: &WeylElement) -> WeylElement {
    word.iter().rev().fold(w.clone(), |acc, &i| demazure_circ_left(i, &acc))
}

/// `(((w ∘_r s_{i_1}) ∘_r s_{i_2}) … )`.
pub fn demazure_circ_right_word(w: &WeylElement, word: &[usize]) -> WeylElement {
    word.iter().fold(w.clone(), |acc, &i| demazure_circ_right(&acc, i))
}

/// Demazure product of a word, `s_{i_1} ∗ … ∗ s_{i_k}`.
pub fn demazure_product(group: &Arc<WeylGroup>, word: &[usize]) -> WeylElement {
    demazure_star_word(word, &identity(group))
}

/// Elements of `W_J` of length at most `max_len`, sorted by `(length, word)`.
pub fn enumerate_parabolic(group: &Arc<WeylGroup>, j: NodeSet, max_len: usize) -> Vec<WeylElement> {
    let gens: Vec<usize> = j.iter().filter(|&i| i < group.rank()).collect();
    let mut seen: HashSet<WeylElement> = HashSet::new();
    let e = identity(group);
    seen.insert(e.clone());
    let mut out = vec![e.clone()];
    let mut layer = vec![e];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for x in &layer {
            for &i in &gens {
                if x.has_right_descent(i) {
                    continue;
                }
                let y = x.mul_simple_right(i);
                if seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out.sort();
    out
}

pub fn enumerate_upto(group: &Arc<WeylGroup>, max_len: usize) -> Vec<WeylElement> {
    enumerate_parabolic(group, group.nodes(), max_len)
}

/// Longest element of `W_J`, or `None` when `W_J` looks infinite.
pub fn longest_parabolic(group: &Arc<WeylGroup>, j: NodeSet) -> Option<WeylElement> {
    let mut w = identity(group);
    for _ in 0..=LONGEST_SEARCH_CAP {
        match j.iter().find(|&i| i < group.rank() && !w.has_right_descent(i)) {
            Some(i) => w = w.mul_simple_right(i),
            None => return Some(w),
        }
    }
    None
}

/// Bruhat interval `[v, w]`, sorted by `(length, word)`.
pub fn interval(v: &WeylElement, w: &WeylElement) -> Result<Vec<WeylElement>> {
    if !bruhat_leq(v, w)? {
        return Err(Error::NotComparable(format!("{v} is not below {w}")));
    }
    let mut set: HashSet<WeylElement> = HashSet::new();
    set.insert(identity(v.group()));
    for &i in w.word() {
        let extra: Vec<WeylElement> = set.iter().map(|x| x.mul_simple_right(i)).collect();
        set.extend(extra);
    }
    let mut out: Vec<WeylElement> = set.into_iter().filter(|x| x.le(w) && v.le(x)).collect();
    out.sort();
    Ok(out)
}

/// Breadth-first search helper shared by tests: all reduced words of `w`.
pub fn reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut queue = VecDeque::from([(w.clone(), Vec::<usize>::new())]);
    while let Some((x, suffix)) = queue.pop_front() {
        if x.is_identity() {
            out.push(suffix);
            continue;
        }
        for i in x.right_descents().iter() {
            let mut s = suffix.clone();
            s.insert(0, i);
            queue.push_back((x.mul_simple_right(i), s));
        }
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> Arc<WeylGroup> {
        WeylGroup::new(CartanData::type_a(n)).unwrap()
    }

    fn el(g: &Arc<WeylGroup>, w: &[usize]) -> WeylElement {
        from_word(g, w).unwrap()
    }

    #[test]
    fn reflection_convention() {
        let g = a(2);
        let s1 = simple_reflection(&g, 0).unwrap();
        assert_eq!(s1.action_rows(), vec![vec![-1, 1], vec![0, 1]]);
        assert!(s1.mul(&s1).is_identity());
    }

    #[test]
    fn affine_rotation_has_infinite_order() {
        let g = WeylGroup::new(CartanData::affine_a1()).unwrap();
        let r = el(&g, &[0, 1]);
        let mut p = r.clone();
        for k in 1..=10 {
            assert!(!p.is_identity(), "(s1 s2)^{k} = e");
            assert_eq!(p.length(), 2 * k);
            p = p.mul(&r);
        }
    }

    #[test]
    fn canonical_words() {
        let g = a(2);
        assert_eq!(el(&g, &[0, 1, 0]).word(), &[0, 1, 0]);
        assert_eq!(el(&g, &[1, 0, 1]).word(), &[0, 1, 0]);
        assert_eq!(identity(&g).word(), &[] as &[usize]);
        let aff = WeylGroup::new(CartanData::affine_a1()).unwrap();
        assert_eq!(el(&aff, &[0, 1, 0, 1, 0, 1]).length(), 6);
    }

    #[test]
    fn bruhat_small_cases() {
        let g = a(2);
        let s1 = el(&g, &[0]);
        assert!(s1.le(&el(&g, &[1, 0])));
        assert!(!s1.le(&el(&g, &[1])));
    }

    #[test]
    fn coset_examples() {
        let g = a(2);
        let w = el(&g, &[0, 1]);
        let d = w.coset_decompose(NodeSet::from_indices([0]));
        assert_eq!(d.left_part, el(&g, &[0]));
        assert_eq!(d.right_part, el(&g, &[1]));
        let d = w.coset_decompose(NodeSet::EMPTY);
        assert!(d.left_part.is_identity());
        let d = w.coset_decompose(g.nodes());
        assert!(d.right_part.is_identity());
    }

    #[test]
    fn demazure_examples() {
        let g = a(2);
        let s1 = el(&g, &[0]);
        assert_eq!(demazure_star(0, &s1), s1);
        assert!(demazure_circ_left(0, &s1).is_identity());
        assert_eq!(demazure_star(1, &el(&g, &[0, 1])), el(&g, &[1, 0, 1]));
        assert_eq!(demazure_product(&g, &[0, 0, 1, 1]), el(&g, &[0, 1]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_upto(&a(2), 3).len(), 6);
        assert_eq!(enumerate_upto(&a(2), 0).len(), 1);
        let aff = WeylGroup::new(CartanData::affine_a1()).unwrap();
        assert_eq!(enumerate_upto(&aff, 4).len(), 9);
        assert_eq!(enumerate_upto(&a(3), 10).len(), 24);
    }

    #[test]
    fn interval_examples() {
        let g = a(2);
        let e = identity(&g);
        assert_eq!(interval(&e, &el(&g, &[0])).unwrap().len(), 2);
        assert_eq!(interval(&e, &el(&g, &[0, 1, 0])).unwrap().len(), 6);
        let iv = interval(&el(&g, &[0]), &el(&g, &[0, 1])).unwrap();
        assert_eq!(iv, vec![el(&g, &[0]), el(&g, &[0, 1])]);
        assert!(interval(&el(&g, &[1]), &el(&g, &[0])).is_err());
    }

    #[test]
    fn longest_elements() {
        let g = a(3);
        assert_eq!(longest_parabolic(&g, g.nodes()).unwrap().length(), 6);
        assert_eq!(longest_parabolic(&g, NodeSet::from_indices([0, 2])).unwrap().length(), 2);
        let aff = WeylGroup::new(CartanData::affine_a1()).unwrap();
        assert!(longest_parabolic(&aff, aff.nodes()).is_none());
    }

    #[test]
    fn parse_forms() {
        let g = a(3);
        assert_eq!(parse_word(&g, "121").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word(&g, "1.2.1").unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word(&g, "e").unwrap(), Vec::<usize>::new());
        assert!(parse_word(&g, "5").is_err());
        assert_eq!(el(&g, &[1, 0]).to_string(), "2.1");
    }

    #[test]
    fn reduced_words_of_longest_a2() {
        let g = a(2);
        assert_eq!(reduced_words(&el(&g, &[0, 1, 0])), vec![vec![0, 1, 0], vec![1, 0, 1]]);
    }

    #[test]
    fn mismatched_groups() {
        let g = a(2);
        let h = a(2);
        // equal Cartan data counts as the same ambient group
        assert!(bruhat_leq(&identity(&g), &identity(&h)).unwrap());
        let k = WeylGroup::new(CartanData::affine_a1()).unwrap();
        assert!(bruhat_leq(&identity(&g), &identity(&k)).is_err());
    }
}
