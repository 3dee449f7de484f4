//! `SL(n+1)` over `ℚ` as the type `A_n` model: pinned generators, the
//! involution `ι`, Levi block patterns, Bruhat/Birkhoff cell identification
//! by corner ranks, chart membership and the chart factorizations.
//!
//! Node `i` (0-based) of `A_n` acts on coordinates `i, i+1`.

use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::nodes::NodeSet;
use crate::rational::{qi, RationalMatrix, Q};
use crate::weyl::{self, WeylElement, WeylGroup};

/// Type `A_n` matrix model: `(n+1)×(n+1)` matrices and the Weyl group of `A_n`.
#[derive(Clone, Debug)]
pub struct SlModel {
    n: usize,
    group: Arc<WeylGroup>,
}

impl SlModel {
    pub fn new(n: usize) -> Self {
        let group = WeylGroup::new(CartanData::type_a(n)).expect("type A is a GCM");
        SlModel { n, group }
    }

    /// Model for an existing `A_n` group (so that elements can be shared).
    pub fn with_group(group: Arc<WeylGroup>) -> Result<Self> {
        let n = group.rank();
        if group.cartan().matrix != CartanData::type_a(n).matrix {
            return Err(Error::InvalidCartan("matrix model needs type A".into()));
        }
        Ok(SlModel { n, group })
    }

    /// Rank `n` of `A_n`.
    pub fn rank(&self) -> usize {
        self.n
    }

    /// Matrix size `n + 1`.
    pub fn size(&self) -> usize {
        self.n + 1
    }

    pub fn group(&self) -> &Arc<WeylGroup> {
        &self.group
    }

    pub fn identity(&self) -> RationalMatrix {
        RationalMatrix::identity(self.size())
    }

    fn check_node(&self, i: usize) -> Result<()> {
        if i >= self.n {
            return Err(Error::NodeOutOfRange { index: i, rank: self.n });
        }
        Ok(())
    }

    /// `x_i(a) = I + a E_{i,i+1}`.
    pub fn gen_x(&self, i: usize, a: &Q) -> Result<RationalMatrix> {
        self.check_node(i)?;
        let mut m = self.identity();
        m.set(i, i + 1, a.clone());
        Ok(m)
    }

    /// `y_i(a) = I + a E_{i+1,i}`.
    pub fn gen_y(&self, i: usize, a: &Q) -> Result<RationalMatrix> {
        self.check_node(i)?;
        let mut m = self.identity();
        m.set(i + 1, i, a.clone());
        Ok(m)
    }

    /// `α_i^∨(b) = diag(…, b, 1/b, …)` at positions `i, i+1`.
    pub fn gen_torus(&self, i: usize, b: &Q) -> Result<RationalMatrix> {
        self.check_node(i)?;
        if b.is_zero() {
            return Err(Error::NonPositiveParameter);
        }
        let mut m = self.identity();
        m.set(i, i, b.clone());
        m.set(i + 1, i + 1, b.recip());
        Ok(m)
    }

    /// `ṡ_i = x_i(−1) y_i(1) x_i(−1)`, the block `[[0, −1], [1, 0]]`.
    pub fn sdot(&self, i: usize) -> Result<RationalMatrix> {
        self.check_node(i)?;
        let mut m = self.identity();
        m.set(i, i, Q::zero());
        m.set(i + 1, i + 1, Q::zero());
        m.set(i, i + 1, qi(-1));
        m.set(i + 1, i, qi(1));
        Ok(m)
    }

    pub fn sdot_inv(&self, i: usize) -> Result<RationalMatrix> {
        Ok(self.sdot(i)?.transpose())
    }

    /// `ẇ` for a word (should be reduced; the result is then independent of
    /// the reduced word chosen).
    pub fn wdot(&self, word: &[usize]) -> Result<RationalMatrix> {
        let mut m = self.identity();
        for &i in word {
            m = &m * &self.sdot(i)?;
        }
        Ok(m)
    }

    pub fn wdot_of(&self, w: &WeylElement) -> RationalMatrix {
        self.wdot(w.word()).expect("element of A_n")
    }

    /// `ι(ẇ)`: the representative built from `ṡ_i^{-1}`.
    pub fn wdot_neg_of(&self, w: &WeylElement) -> RationalMatrix {
        iota(&self.wdot_of(w))
    }

    /// `ι(g)_{jk} = (−1)^{j−k} g_{jk}`.
    pub fn iota(&self, g: &RationalMatrix) -> RationalMatrix {
        iota(g)
    }

    /// One-line notation: `w(j)` for `j = 0..=n`, where `ẇ e_j = ± e_{w(j)}`.
    pub fn perm_of(&self, w: &WeylElement) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.size()).collect();
        // w = s_{i1} … s_{ik} as functions: apply the rightmost first
        for &i in w.word().iter().rev() {
            for x in p.iter_mut() {
                if *x == i {
                    *x = i + 1;
                } else if *x == i + 1 {
                    *x = i;
                }
            }
        }
        p
    }

    /// Inverse of [`SlModel::perm_of`]; the word is built by sorting.
    pub fn element_of_perm(&self, perm: &[usize]) -> Result<WeylElement> {
        let size = self.size();
        let mut seen = vec![false; size];
        if perm.len() != size || perm.iter().any(|&x| x >= size || std::mem::replace(&mut seen[x], true)) {
            return Err(Error::Parse(format!("{perm:?} is not a permutation of 0..{size}")));
        }
        // w = w' s_i with w(i) > w(i+1); peel right descents
        let mut p = perm.to_vec();
        let mut word = Vec::new();
        while let Some(i) = (0..self.n).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            word.push(i);
        }
        word.reverse();
        weyl::from_word(&self.group, &word)
    }

    /// Southwest corner ranks `r(i, j)` = rank of rows `i..`, columns `..=j`.
    fn southwest_perm(&self, g: &RationalMatrix) -> Vec<usize> {
        let size = self.size();
        let r = |i: usize, j: usize| -> usize {
            let rows: Vec<usize> = (i..size).collect();
            let cols: Vec<usize> = (0..=j).collect();
            g.rank_of(&rows, &cols)
        };
        (0..size)
            .map(|j| {
                // w(j) = max i with r(i, j) − r(i, j−1) = 1
                (0..size)
                    .rev()
                    .find(|&i| r(i, j) - if j == 0 { 0 } else { r(i, j - 1) } == 1)
                    .expect("invertible matrix")
            })
            .collect()
    }

    fn northwest_perm(&self, g: &RationalMatrix) -> Vec<usize> {
        let size = self.size();
        let r = |i: usize, j: usize| -> usize {
            let rows: Vec<usize> = (0..=i).collect();
            let cols: Vec<usize> = (0..=j).collect();
            g.rank_of(&rows, &cols)
        };
        (0..size)
            .map(|j| {
                (0..size)
                    .find(|&i| r(i, j) - if j == 0 { 0 } else { r(i, j - 1) } == 1)
                    .expect("invertible matrix")
            })
            .collect()
    }

    fn check_invertible(&self, g: &RationalMatrix) -> Result<()> {
        if g.n() != self.size() {
            return Err(Error::Dimension { expected: self.size(), got: g.n() });
        }
        if g.rank() < g.n() {
            return Err(Error::Singular);
        }
        Ok(())
    }

    /// `w` with `g ∈ B^+ ẇ B^+`.
    pub fn bruhat_cell(&self, g: &RationalMatrix) -> Result<WeylElement> {
        self.check_invertible(g)?;
        self.element_of_perm(&self.southwest_perm(g))
    }

    /// `v` with `g ∈ B^− v̇ B^+`.
    pub fn birkhoff_cell(&self, g: &RationalMatrix) -> Result<WeylElement> {
        self.check_invertible(g)?;
        self.element_of_perm(&self.northwest_perm(g))
    }

    /// `(v, w)` with `gB^+ ∈ 𝓑̊_{v,w}`.
    pub fn richardson_cell(&self, g: &RationalMatrix) -> Result<(WeylElement, WeylElement)> {
        Ok((self.birkhoff_cell(g)?, self.bruhat_cell(g)?))
    }

    /// `gB^+ ∈ u̇ U^− B^+`: all leading principal minors of `u̇^{-1} g` are
    /// nonzero.
    pub fn chart_membership(&self, u: &WeylElement, g: &RationalMatrix) -> bool {
        let ui = self.wdot_of(&u.inverse());
        // u̇^{-1} and (u^{-1})˙ differ by a torus element, which does not
        // affect which minors vanish
        (&ui * g).leading_minors_nonzero()
    }

    pub fn levi(&self, j: NodeSet) -> Result<LeviContext> {
        LeviContext::new(self.n, j)
    }

    /// `ẇ_0(J)` (the longest element of `W_J`).
    pub fn w0_dot(&self, j: NodeSet) -> RationalMatrix {
        let w0 = weyl::longest_parabolic(&self.group, j).expect("finite type");
        self.wdot_of(&w0)
    }

    /// `(v, w)` with `gB^+ ∈ ^J𝓑̊_{v,w} = ^JB^− v̇ B^+ ∩ ^JB^+ ẇ B^+`,
    /// computed as `w_0(J)·cell(ẇ_0(J)^{-1} g)` since
    /// `^JB^± = ẇ_0(J) B^± ẇ_0(J)^{-1}`.
    pub fn twisted_cell(&self, j: NodeSet, g: &RationalMatrix) -> Result<(WeylElement, WeylElement)> {
        let w0 = weyl::longest_parabolic(&self.group, j).expect("finite type");
        let h = &self.wdot_of(&w0).inverse()? * g;
        let (v, w) = self.richardson_cell(&h)?;
        Ok((w0.mul(&v), w0.mul(&w)))
    }

    /// Same as [`SlModel::twisted_cell`] but through the direct block
    /// patterns: `^JB^+ ẇ B^+` is detected by ranks of the matrix with rows
    /// reversed inside every block.
    pub fn twisted_cell_direct(&self, j: NodeSet, g: &RationalMatrix) -> Result<(WeylElement, WeylElement)> {
        let ctx = self.levi(j)?;
        let size = self.size();
        // P g reverses rows within blocks; P B^+ P = ^JB^+ as patterns
        let perm: Vec<usize> = (0..size).map(|r| ctx.block_reverse(r)).collect();
        let mut h = RationalMatrix::zeros(size);
        for r in 0..size {
            for c in 0..size {
                h.set(r, c, g.get(perm[r], c).clone());
            }
        }
        let pv = self.northwest_perm(&h);
        let pw = self.southwest_perm(&h);
        let fix = |p: Vec<usize>| -> Vec<usize> { p.into_iter().map(|x| perm[x]).collect() };
        Ok((self.element_of_perm(&fix(pv))?, self.element_of_perm(&fix(pw))?))
    }

    /// True iff `g1 B^+ = g2 B^+`.
    pub fn same_flag(&self, g1: &RationalMatrix, g2: &RationalMatrix) -> Result<bool> {
        Ok((&g1.inverse()? * g2).is_upper())
    }

    /// `g B^+` and `g' B^+` have the same image in `G/P_K` (the first
    /// block spans agree for every `K`-block boundary).
    pub fn same_partial_flag(&self, k: NodeSet, g1: &RationalMatrix, g2: &RationalMatrix) -> Result<bool> {
        let ctx = self.levi(k)?;
        let m = &g1.inverse()? * g2;
        Ok(ctx.in_p_plus(&m))
    }

    /// `ṙ^{-1} g ∈ U^− B^+` factored as `n·b`; returns `n` (unit lower).
    pub fn chart_coordinate(&self, r: &WeylElement, g: &RationalMatrix) -> Result<RationalMatrix> {
        let rd = self.wdot_of(r);
        let m = &rd.inverse()? * g;
        let (l, _) = m.lu().map_err(|_| Error::OutsideChart(r.to_string()))?;
        Ok(l)
    }

    /// `^Jσ_r`: for `g ∈ ṙU^−ṙ^{-1}` returns `((h1, h2), (g1, g2))` with
    /// `g = h1 h2 = g1 g2`, `h1, g2 ∈ ^JU^−`, `h2, g1 ∈ ^JU^+`, all factors in
    /// `ṙU^−ṙ^{-1}`.
    pub fn sigma_factor(&self, r: &WeylElement, j: NodeSet, g: &RationalMatrix) -> Result<SigmaFactors> {
        let rd = self.wdot_of(r);
        let rinv = rd.inverse()?;
        let conj = &(&rinv * g) * &rd;
        if !(conj.is_lower() && conj.has_unit_diagonal()) {
            return Err(Error::NotInSubgroup(format!("ṙU^−ṙ^(-1) for r = {r}")));
        }
        let wj = self.w0_dot(j);
        let wji = wj.inverse()?;
        // ^JU^± = ẇ_J U^± ẇ_J^{-1}
        let t = &(&wji * g) * &wj;
        let (l, u) = t.lu().map_err(|e| Error::FactorizationFailed(format!("h-split: {e}")))?;
        let (dl, un) = u.split_diagonal_left().expect("LU of unipotent-conjugate");
        if !dl.is_identity() {
            return Err(Error::FactorizationFailed("non-unipotent LU factor".into()));
        }
        let h1 = &(&wj * &l) * &wji;
        let h2 = &(&wj * &un) * &wji;
        let (uu, ll) = t.ul().map_err(|e| Error::FactorizationFailed(format!("g-split: {e}")))?;
        let (dd, ln) = ll.split_diagonal_left().expect("UL of unipotent-conjugate");
        if !dd.is_identity() {
            return Err(Error::FactorizationFailed("non-unipotent UL factor".into()));
        }
        let g1 = &(&wj * &uu) * &wji;
        let g2 = &(&wj * &ln) * &wji;
        Ok(SigmaFactors { h1, h2, g1, g2 })
    }

    /// `^Jc_r`: splits a chart point `p = g ṙ B^+` into
    /// `(h2 ṙ B^+, g2 ṙ B^+) ∈ ^J𝓑̊_r × ^J𝓑̊^r`.
    pub fn jc_chart(&self, r: &WeylElement, j: NodeSet, p: &RationalMatrix) -> Result<ChartSplit> {
        let rd = self.wdot_of(r);
        let nn = self.chart_coordinate(r, p)?;
        let g = &(&rd * &nn) * &rd.inverse()?;
        let f = self.sigma_factor(r, j, &g)?;
        Ok(ChartSplit {
            plus: &f.h2 * &rd,
            minus: &f.g2 * &rd,
            g,
            factors: f,
        })
    }

    /// Inverse of [`SlModel::jc_chart`]: from representatives of the two
    /// components (any representatives of the flags) rebuilds a
    /// representative of the chart point.
    pub fn jc_chart_inv(
        &self,
        r: &WeylElement,
        j: NodeSet,
        plus: &RationalMatrix,
        minus: &RationalMatrix,
    ) -> Result<RationalMatrix> {
        let rd = self.wdot_of(r);
        let rinv = rd.inverse()?;
        // each component lies in the chart of r; recover the ṙU^−ṙ^{-1} part
        let gp = &(&rd * &self.chart_coordinate(r, plus)?) * &rinv;
        let gm = &(&rd * &self.chart_coordinate(r, minus)?) * &rinv;
        // gp = ^Jσ_{r,+}-type element: keep its ^JU^+ factor h2
        let h2 = self.sigma_factor(r, j, &gp)?.h2;
        let g2 = self.sigma_factor(r, j, &gm)?.g2;
        // g = h1 h2 = g1 g2 ⇒ g1^{-1} h1 = g2 h2^{-1}, with g1^{-1} ∈ ^JU^+,
        // h1 ∈ ^JU^−: a UL split (after twisting by ẇ_J) of m = g2 h2^{-1}
        let wj = self.w0_dot(j);
        let wji = wj.inverse()?;
        let m = &g2 * &h2.inverse()?;
        let t = &(&wji * &m) * &wj;
        let (_, ll) = t.ul().map_err(|e| Error::FactorizationFailed(format!("reassembly: {e}")))?;
        let h1 = &(&wj * &ll) * &wji;
        let g = &h1 * &h2;
        Ok(&g * &rd)
    }
}

/// Output of [`SlModel::sigma_factor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaFactors {
    pub h1: RationalMatrix,
    pub h2: RationalMatrix,
    pub g1: RationalMatrix,
    pub g2: RationalMatrix,
}

/// Output of [`SlModel::jc_chart`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartSplit {
    /// Representative `h2 ṙ` of the component in `^J𝓑̊_r`.
    pub plus: RationalMatrix,
    /// Representative `g2 ṙ` of the component in `^J𝓑̊^r`.
    pub minus: RationalMatrix,
    /// The chart coordinate `g ∈ ṙU^−ṙ^{-1}` with `p = g ṙ B^+`.
    pub g: RationalMatrix,
    pub factors: SigmaFactors,
}

pub fn iota(g: &RationalMatrix) -> RationalMatrix {
    g.map_indexed(|i, j, x| if (i + j) % 2 == 0 { x.clone() } else { -x.clone() })
}

/// Block structure of `L_J ⊂ SL(n+1)`: coordinates `k, k+1` share a block
/// iff node `k ∈ J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviContext {
    n: usize,
    j: NodeSet,
    block: Vec<usize>,
    /// `(start, end)` of every block, end exclusive
    bounds: Vec<(usize, usize)>,
}

impl LeviContext {
    pub fn new(n: usize, j: NodeSet) -> Result<Self> {
        if !j.is_subset(NodeSet::full(n)) {
            return Err(Error::NotSubset(format!("{j:?} in rank {n}")));
        }
        let mut block = vec![0usize; n + 1];
        let mut bounds = vec![];
        let mut start = 0;
        for k in 1..=n {
            block[k] = if j.contains(k - 1) { block[k - 1] } else { block[k - 1] + 1 };
            if block[k] != block[k - 1] {
                bounds.push((start, k));
                start = k;
            }
        }
        bounds.push((start, n + 1));
        Ok(LeviContext { n, j, block, bounds })
    }

    pub fn j(&self) -> NodeSet {
        self.j
    }

    pub fn block_of(&self, r: usize) -> usize {
        self.block[r]
    }

    pub fn blocks(&self) -> &[(usize, usize)] {
        &self.bounds
    }

    /// Reflection of `r` inside its block (the permutation of `w_0(J)`).
    pub fn block_reverse(&self, r: usize) -> usize {
        let (s, e) = self.bounds[self.block[r]];
        s + e - 1 - r
    }

    fn same(&self, a: usize, b: usize) -> bool {
        self.block[a] == self.block[b]
    }

    pub fn in_levi(&self, g: &RationalMatrix) -> bool {
        g.supported_in(|a, b| self.same(a, b))
    }

    pub fn in_p_plus(&self, g: &RationalMatrix) -> bool {
        g.supported_in(|a, b| self.block[a] <= self.block[b])
    }

    pub fn in_p_minus(&self, g: &RationalMatrix) -> bool {
        g.supported_in(|a, b| self.block[a] >= self.block[b])
    }

    fn identity_on_blocks(&self, g: &RationalMatrix) -> bool {
        (0..=self.n).all(|a| (0..=self.n).all(|b| !self.same(a, b) || *g.get(a, b) == qi(i64::from(a == b))))
    }

    /// Unipotent radical `U_{P_J^+}`.
    pub fn in_u_p_plus(&self, g: &RationalMatrix) -> bool {
        self.in_p_plus(g) && self.identity_on_blocks(g)
    }

    pub fn in_u_p_minus(&self, g: &RationalMatrix) -> bool {
        self.in_p_minus(g) && self.identity_on_blocks(g)
    }

    /// `B_J^+ = B^+ ∩ L_J`.
    pub fn in_b_j_plus(&self, g: &RationalMatrix) -> bool {
        self.in_levi(g) && g.is_upper()
    }

    pub fn in_b_j_minus(&self, g: &RationalMatrix) -> bool {
        self.in_levi(g) && g.is_lower()
    }

    /// `^JB^+ = B_J^− ⋉ U_{P_J^+}`: block upper, lower inside blocks.
    pub fn in_jb_plus(&self, g: &RationalMatrix) -> bool {
        g.supported_in(|a, b| self.block[a] < self.block[b] || (self.same(a, b) && a >= b))
    }

    /// `^JB^− = B_J^+ ⋉ U_{P_J^−}`.
    pub fn in_jb_minus(&self, g: &RationalMatrix) -> bool {
        g.supported_in(|a, b| self.block[a] > self.block[b] || (self.same(a, b) && a <= b))
    }

    /// `^JU^+ = U_J^− ⋉ U_{P_J^+}`.
    pub fn in_ju_plus(&self, g: &RationalMatrix) -> bool {
        self.in_jb_plus(g) && g.has_unit_diagonal()
    }

    pub fn in_ju_minus(&self, g: &RationalMatrix) -> bool {
        self.in_jb_minus(g) && g.has_unit_diagonal()
    }

    /// `π_J : P_J^− → L_J`, keeping the diagonal blocks.
    pub fn pi_j(&self, p: &RationalMatrix) -> Result<RationalMatrix> {
        if !self.in_p_minus(p) {
            return Err(Error::NotInSubgroup("P_J^−".into()));
        }
        Ok(p.map_indexed(|a, b, x| if self.same(a, b) { x.clone() } else { Q::zero() }))
    }
}

/// True iff all entries are `≥ 0`.
pub fn entrywise_nonnegative(g: &RationalMatrix) -> bool {
    g.all_nonnegative()
}

/// True iff `g` has a positive diagonal (an element of `T_{>0}` if diagonal).
pub fn positive_diagonal(g: &RationalMatrix) -> bool {
    (0..g.n()).all(|i| g.get(i, i).is_positive())
}

pub fn is_unit(x: &Q) -> bool {
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn sdot_sl2() {
        let m = SlModel::new(1);
        assert_eq!(m.sdot(0).unwrap(), RationalMatrix::from_i64(&[&[0, -1], &[1, 0]]));
        let alt = &(&m.gen_x(0, &qi(-1)).unwrap() * &m.gen_y(0, &qi(1)).unwrap()) * &m.gen_x(0, &qi(-1)).unwrap();
        assert_eq!(alt, m.sdot(0).unwrap());
        assert!(m.gen_x(0, &qi(0)).unwrap().is_identity());
        assert!(m.gen_torus(0, &qi(0)).is_err());
        assert!(m.gen_x(1, &qi(1)).is_err());
    }

    #[test]
    fn braid_relation() {
        let m = SlModel::new(2);
        assert_eq!(m.wdot(&[0, 1, 0]).unwrap(), m.wdot(&[1, 0, 1]).unwrap());
    }

    #[test]
    fn iota_basics() {
        let m = SlModel::new(2);
        let a = q(3, 7);
        assert_eq!(iota(&m.gen_x(0, &a).unwrap()), m.gen_x(0, &-a.clone()).unwrap());
        let t = m.gen_torus(1, &q(2, 5)).unwrap();
        assert_eq!(iota(&t), t);
    }

    #[test]
    fn pi_j_example() {
        let ctx = LeviContext::new(2, NodeSet::from_indices([0])).unwrap();
        let p = RationalMatrix::from_i64(&[&[1, 0, 0], &[2, 1, 0], &[3, 4, 1]]);
        assert_eq!(ctx.pi_j(&p).unwrap(), RationalMatrix::from_i64(&[&[1, 0, 0], &[2, 1, 0], &[0, 0, 1]]));
        let bad = RationalMatrix::from_i64(&[&[1, 0, 5], &[0, 1, 0], &[0, 0, 1]]);
        assert!(ctx.pi_j(&bad).is_err());
    }

    #[test]
    fn cells_of_simple_matrices() {
        let m = SlModel::new(2);
        let e = weyl::identity(m.group());
        assert_eq!(m.richardson_cell(&m.identity()).unwrap(), (e.clone(), e.clone()));
        let s1 = weyl::from_word(m.group(), &[0]).unwrap();
        assert_eq!(m.bruhat_cell(&m.sdot(0).unwrap()).unwrap(), s1);
        let y = m.gen_y(0, &qi(5)).unwrap();
        assert_eq!(m.richardson_cell(&y).unwrap(), (e, s1));
    }

    #[test]
    fn perms_round_trip() {
        let m = SlModel::new(3);
        for w in weyl::enumerate_upto(m.group(), 6) {
            let p = m.perm_of(&w);
            assert_eq!(m.element_of_perm(&p).unwrap(), w);
            assert_eq!(m.bruhat_cell(&m.wdot_of(&w)).unwrap(), w);
            assert_eq!(m.birkhoff_cell(&m.wdot_of(&w)).unwrap(), w);
        }
    }

    #[test]
    fn chart_examples() {
        let m = SlModel::new(1);
        let e = weyl::identity(m.group());
        let s = weyl::from_word(m.group(), &[0]).unwrap();
        assert!(m.chart_membership(&e, &m.identity()));
        assert!(!m.chart_membership(&s, &m.identity()));
        let y = m.gen_y(0, &qi(1)).unwrap();
        assert!(m.chart_membership(&e, &y) && m.chart_membership(&s, &y));
    }

    #[test]
    fn sigma_factor_trivial() {
        let m = SlModel::new(1);
        let s = weyl::from_word(m.group(), &[0]).unwrap();
        let y = m.gen_y(0, &q(2, 3)).unwrap();
        // y_1(a) is not in ṡU^−ṡ^{-1} = U^+
        let err = m.sigma_factor(&s, NodeSet::EMPTY, &y).unwrap_err();
        assert!(matches!(err, Error::NotInSubgroup(_)));
        let e = weyl::identity(m.group());
        let f = m.sigma_factor(&e, NodeSet::EMPTY, &y).unwrap();
        assert_eq!((f.h1, f.h2.is_identity()), (y, true));
    }
}
