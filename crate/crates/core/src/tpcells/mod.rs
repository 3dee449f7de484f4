//! Parametrizations of totally positive (twisted) Richardson cells in the
//! `SL(n+1)` model and a recursive positivity test built on the chart
//! factorizations.
//!
//! Families:
//! * `Positive` — `𝓑_{v,w,>0}`, sampled by Marsh–Rietsch products with
//!   `ṡ_i` at letter positions and `y_i(a)` at free positions;
//! * `Twisted(J)` — `^J𝓑_{v,w,>0}`. `Twisted(∅)` is the negative family
//!   `𝓑_{v,w,<0} = ι(𝓑_{v,w,>0})`.

pub mod identities;
pub mod report;
pub mod suites;

use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nodes::NodeSet;
use crate::orders::TwistedContext;
use crate::rational::{q, RationalMatrix, Q};
use crate::slgroup::SlModel;
use crate::weyl::{self, WeylElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Slot {
    Letter,
    Free,
}

/// The positive subexpression of `v` inside a reduced word of `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveSubexpression {
    pub word: Vec<usize>,
    pub mask: Vec<Slot>,
    pub target: WeylElement,
}

impl PositiveSubexpression {
    pub fn free_count(&self) -> usize {
        self.mask.iter().filter(|&&s| s == Slot::Free).count()
    }
}

/// Right-greedy scan: from the right end, take a letter whenever it
/// shortens the running element `u` (starting at `v`).
pub fn positive_subexpression(word: &[usize], v: &WeylElement) -> Result<PositiveSubexpression> {
    let mut u = v.clone();
    let mut mask = vec![Slot::Free; word.len()];
    for j in (0..word.len()).rev() {
        if u.has_right_descent(word[j]) {
            mask[j] = Slot::Letter;
            u = u.mul_simple_right(word[j]);
        }
    }
    if !u.is_identity() {
        return Err(Error::NotComparable(format!("{v} is not below the given word")));
    }
    Ok(PositiveSubexpression { word: word.to_vec(), mask, target: v.clone() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Pos,
    Neg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", content = "j", rename_all = "lowercase")]
pub enum Family {
    Positive,
    Twisted(NodeSet),
}

impl Family {
    pub fn negative() -> Self {
        Family::Twisted(NodeSet::EMPTY)
    }

    /// Twisting set used for cell indices (`Positive` uses ordinary cells).
    pub fn cell_j(self) -> NodeSet {
        match self {
            Family::Positive => NodeSet::EMPTY,
            Family::Twisted(j) => j,
        }
    }
}

/// A cell `(v, w)` of a family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSpec {
    pub v: WeylElement,
    pub w: WeylElement,
    pub family: Family,
}

impl CellSpec {
    pub fn new(v: WeylElement, w: WeylElement, family: Family) -> Self {
        CellSpec { v, w, family }
    }

    /// `ℓ(w) − ℓ(v)`, or `^Jℓ(w) − ^Jℓ(v)` for twisted cells.
    pub fn dimension(&self) -> i64 {
        match self.family {
            Family::Positive => self.w.length() as i64 - self.v.length() as i64,
            Family::Twisted(j) => {
                let tl = |x: &WeylElement| {
                    let d = x.coset_decompose(j);
                    d.right_part.length() as i64 - d.left_part.length() as i64
                };
                tl(&self.w) - tl(&self.v)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellSample {
    pub spec: CellSpec,
    pub params: Vec<Q>,
    /// Representative `g` of the flag `g B^+`.
    pub point: RationalMatrix,
    pub h1: Option<RationalMatrix>,
    pub h2: Option<RationalMatrix>,
}

/// Product over a positive subexpression: `ṡ^{±1}` at letters, `y(±a)` at
/// free positions.
fn mr_product(model: &SlModel, sub: &PositiveSubexpression, params: &[Q], sign: Sign) -> Result<RationalMatrix> {
    let free = sub.free_count();
    if params.len() != free {
        return Err(Error::ParameterCount { expected: free, got: params.len() });
    }
    let mut g = model.identity();
    let mut k = 0;
    for (pos, &i) in sub.word.iter().enumerate() {
        let f = match (sub.mask[pos], sign) {
            (Slot::Letter, Sign::Pos) => model.sdot(i)?,
            (Slot::Letter, Sign::Neg) => model.sdot_inv(i)?,
            (Slot::Free, s) => {
                let a = &params[k];
                k += 1;
                model.gen_y(i, &if s == Sign::Pos { a.clone() } else { -a.clone() })?
            }
        };
        g = &g * &f;
    }
    Ok(g)
}

fn check_positive(params: &[Q]) -> Result<()> {
    if params.iter().any(|a| !a.is_positive()) {
        return Err(Error::NonPositiveParameter);
    }
    Ok(())
}

/// `G_{v_+, w, >0}` (`Pos`) or `G_{v_+, w, <0}` (`Neg`) applied to `B^+`,
/// over the canonical word of `w` unless `word` is given.
pub fn mr_sample(
    model: &SlModel,
    v: &WeylElement,
    w: &WeylElement,
    word: Option<&[usize]>,
    params: &[Q],
    sign: Sign,
) -> Result<CellSample> {
    check_positive(params)?;
    let sub = positive_subexpression(word.unwrap_or(w.word()), v)?;
    let point = mr_product(model, &sub, params, sign)?;
    let got = model.richardson_cell(&point)?;
    if got != (v.clone(), w.clone()) {
        return Err(Error::WrongCell {
            expected: format!("({v}, {w})"),
            found: format!("({}, {})", got.0, got.1),
        });
    }
    let family = match sign {
        Sign::Pos => Family::Positive,
        Sign::Neg => Family::negative(),
    };
    Ok(CellSample { spec: CellSpec::new(v.clone(), w.clone(), family), params: params.to_vec(), point, h1: None, h2: None })
}

/// `U^−_{w,>0}` (`Pos`) or `U^−_{w,<0}` (`Neg`): `∏ y_{i_k}(±a_k)` over
/// a reduced word of `w`.
pub fn u_minus(model: &SlModel, word: &[usize], params: &[Q], sign: Sign) -> Result<RationalMatrix> {
    if params.len() != word.len() {
        return Err(Error::ParameterCount { expected: word.len(), got: params.len() });
    }
    let mut g = model.identity();
    for (&i, a) in word.iter().zip(params) {
        let a = if sign == Sign::Pos { a.clone() } else { -a.clone() };
        g = &g * &model.gen_y(i, &a)?;
    }
    Ok(g)
}

fn twisted_ctx(model: &SlModel, j: NodeSet) -> Result<TwistedContext> {
    TwistedContext::new(model.group().clone(), j)
}

fn check_twisted_cell(model: &SlModel, j: NodeSet, p: &RationalMatrix, v: &WeylElement, w: &WeylElement) -> Result<()> {
    let got = model.twisted_cell(j, p)?;
    if got != (v.clone(), w.clone()) {
        return Err(Error::WrongCell {
            expected: format!("J-cell ({v}, {w})"),
            found: format!("({}, {})", got.0, got.1),
        });
    }
    Ok(())
}

/// `^JU^−_{v,w,>0} = {h1 · π_J(h2)^{-1} · h2}` with `h1 ∈ U^−_{v,>0}`,
/// `h2 ∈ U^−_{w,<0}`, for `v ∈ W_J`, `w ∈ ^JW`; lands in `^J𝓑̊_{v,w}`.
pub fn j_unipotent_sample(model: &SlModel, j: NodeSet, v: &WeylElement, w: &WeylElement, params: &[Q]) -> Result<CellSample> {
    check_positive(params)?;
    if !v.in_parabolic(j) || !w.is_min_left_coset_rep(j) {
        return Err(Error::NotComparable(format!("need {v} ∈ W_J and {w} ∈ ^JW")));
    }
    let (lv, lw) = (v.length(), w.length());
    if params.len() != lv + lw {
        return Err(Error::ParameterCount { expected: lv + lw, got: params.len() });
    }
    let h1 = u_minus(model, v.word(), &params[..lv], Sign::Pos)?;
    let h2 = u_minus(model, w.word(), &params[lv..], Sign::Neg)?;
    let levi = model.levi(j)?;
    let pi = levi.pi_j(&h2)?;
    let point = &(&h1 * &pi.inverse()?) * &h2;
    check_twisted_cell(model, j, &point, v, w)?;
    Ok(CellSample {
        spec: CellSpec::new(v.clone(), w.clone(), Family::Twisted(j)),
        params: params.to_vec(),
        point,
        h1: Some(h1),
        h2: Some(h2),
    })
}

/// `^JG_{u,w,>0} = {h1 · π_J(h2 · (^Ju)˙^{-1})^{-1} · h2}` with the
/// representative `(^Ju)˙` taken from the negative family (`ṡ_i^{-1}`
/// letters, i.e. `ι` of the usual one) so that `h2 (^Ju)˙^{-1} ∈ U^−`, and
/// `h1 ∈ U^−_{u_J,>0}` and `h2 ∈ G_{^Ju_+, w, <0}`, for `w ∈ ^JW` and
/// `u ^J≤ w`; lands in `^J𝓑̊_{u,w}`.
pub fn jg_sample(model: &SlModel, j: NodeSet, u: &WeylElement, w: &WeylElement, params: &[Q]) -> Result<CellSample> {
    check_positive(params)?;
    if !w.is_min_left_coset_rep(j) {
        return Err(Error::NotComparable(format!("{w} is not in ^JW")));
    }
    let ctx = twisted_ctx(model, j)?;
    if !ctx.twisted_leq(u, w) {
        return Err(Error::NotComparable(format!("{u} is not J-below {w}")));
    }
    let (uj, ju) = ctx.decompose(u);
    let need = uj.length() + w.length() - ju.length();
    if params.len() != need {
        return Err(Error::ParameterCount { expected: need, got: params.len() });
    }
    let lu = uj.length();
    let h1 = u_minus(model, uj.word(), &params[..lu], Sign::Pos)?;
    let sub = positive_subexpression(w.word(), &ju)?;
    let h2 = mr_product(model, &sub, &params[lu..], Sign::Neg)?;
    let levi = model.levi(j)?;
    let arg = &h2 * &model.wdot_neg_of(&ju).inverse()?;
    let pi = levi
        .pi_j(&arg)
        .map_err(|_| Error::NotInSubgroup(format!("P_J^− for h2·(^Ju)˙^(-1) with u = {u}, w = {w}")))?;
    let point = &(&h1 * &pi.inverse()?) * &h2;
    check_twisted_cell(model, j, &point, u, w)?;
    Ok(CellSample {
        spec: CellSpec::new(u.clone(), w.clone(), Family::Twisted(j)),
        params: params.to_vec(),
        point,
        h1: Some(h1),
        h2: Some(h2),
    })
}

/// Random rationals `p/q` with `1 ≤ p, q ≤ 20`.
pub fn random_params(rng: &mut ChaCha8Rng, count: usize) -> Vec<Q> {
    (0..count).map(|_| q(rng.random_range(1..=20), rng.random_range(1..=20))).collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A sample of any family: `Positive` uses [`mr_sample`]; `Twisted(J)`
/// uses `ẇ_0(J) · G_{(w_0(J)v)_+, w_0(J)w, <0}`, which parametrizes
/// `^J𝓑_{v,w,>0}` for every `v ^J≤ w`.
pub fn family_sample(model: &SlModel, family: Family, v: &WeylElement, w: &WeylElement, params: &[Q]) -> Result<CellSample> {
    match family {
        Family::Positive => mr_sample(model, v, w, None, params, Sign::Pos),
        Family::Twisted(j) => {
            check_positive(params)?;
            let w0 = weyl::longest_parabolic(model.group(), j).expect("finite type");
            let (v1, w1) = (w0.mul(v), w0.mul(w));
            let sub = positive_subexpression(w1.word(), &v1)?;
            let point = &model.wdot_of(&w0) * &mr_product(model, &sub, params, Sign::Neg)?;
            check_twisted_cell(model, j, &point, v, w)?;
            Ok(CellSample { spec: CellSpec::new(v.clone(), w.clone(), family), params: params.to_vec(), point, h1: None, h2: None })
        }
    }
}

/// `(L, i, σ, R)` with the family's one-parameter representative
/// `L · y_i(σa) · R` of a rank-one cell.
fn one_parameter_form(
    model: &SlModel,
    family: Family,
    v: &WeylElement,
    w: &WeylElement,
) -> Result<(RationalMatrix, usize, i64, RationalMatrix)> {
    let (lead, v1, w1, sign) = match family {
        Family::Positive => (model.identity(), v.clone(), w.clone(), Sign::Pos),
        Family::Twisted(j) => {
            let w0 = weyl::longest_parabolic(model.group(), j).expect("finite type");
            (model.wdot_of(&w0), w0.mul(v), w0.mul(w), Sign::Neg)
        }
    };
    let sub = positive_subexpression(w1.word(), &v1)?;
    let free = sub.mask.iter().position(|&s| s == Slot::Free).ok_or(Error::ParameterCount { expected: 1, got: 0 })?;
    let letters = |range: std::ops::Range<usize>| -> Result<RationalMatrix> {
        let mut g = model.identity();
        for pos in range {
            let i = sub.word[pos];
            g = &g * &if sign == Sign::Pos { model.sdot(i)? } else { model.sdot_inv(i)? };
        }
        Ok(g)
    };
    let left = &lead * &letters(0..free)?;
    let right = letters(free + 1..sub.word.len())?;
    Ok((left, sub.word[free], if sign == Sign::Pos { 1 } else { -1 }, right))
}

/// For `p` in a rank-one cell, the unique `a ≠ 0` with
/// `L y_i(σa) R B^+ = p B^+`. The conditions are affine in `a`.
pub fn solve_rank_one(model: &SlModel, family: Family, v: &WeylElement, w: &WeylElement, p: &RationalMatrix) -> Result<Q> {
    let (left, i, sigma, right) = one_parameter_form(model, family, v, w)?;
    let rinv = right.inverse()?;
    let m = &left.inverse()? * p;
    // y_i(−σa)·M = M − σa·E_{i+1,i}·M
    let mut em = RationalMatrix::zeros(m.n());
    for c in 0..m.n() {
        em.set(i + 1, c, m.get(i, c).clone());
    }
    let c0 = &rinv * &m;
    let c1 = (&rinv * &em).map_indexed(|_, _, x| if sigma > 0 { -x.clone() } else { x.clone() });
    let n = m.n();
    let mut a: Option<Q> = None;
    for r in 0..n {
        for c in 0..r {
            let (k0, k1) = (c0.get(r, c), c1.get(r, c));
            if k1.is_zero() {
                if !k0.is_zero() {
                    return Err(Error::WrongCell { expected: format!("rank-one form of ({v}, {w})"), found: "no solution".into() });
                }
                continue;
            }
            let cand = -(k0 / k1);
            match &a {
                Some(x) if *x != cand => {
                    return Err(Error::WrongCell { expected: format!("rank-one form of ({v}, {w})"), found: "inconsistent".into() })
                }
                _ => a = Some(cand),
            }
        }
    }
    match a {
        Some(x) if !x.is_zero() => Ok(x),
        _ => Err(Error::WrongCell { expected: format!("rank-one form of ({v}, {w})"), found: "degenerate".into() }),
    }
}

/// Cell indices of `p` for the family.
pub fn family_cell(model: &SlModel, family: Family, p: &RationalMatrix) -> Result<(WeylElement, WeylElement)> {
    model.twisted_cell(family.cell_j(), p)
}

/// How the intermediate element of each split is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitChoice {
    /// First cover of `v` in `(twisted length, length, word)` order.
    First,
    /// Last such cover.
    Last,
    /// An element just below `w` (the plus side gets the large part).
    Top,
}

/// Whether `p ∈ ^J𝓑̊_{v,w}` lies in the positive part: split through a
/// chart `^Jc_u` with `v ^J< u ^J< w` and recurse; rank-one cells are
/// decided by the sign of the solved parameter.
pub fn positivity_test(model: &SlModel, family: Family, v: &WeylElement, w: &WeylElement, p: &RationalMatrix) -> Result<bool> {
    positivity_test_with(model, family, v, w, p, SplitChoice::First)
}

pub fn positivity_test_with(
    model: &SlModel,
    family: Family,
    v: &WeylElement,
    w: &WeylElement,
    p: &RationalMatrix,
    choice: SplitChoice,
) -> Result<bool> {
    let got = family_cell(model, family, p)?;
    if got != (v.clone(), w.clone()) {
        return Err(Error::WrongCell { expected: format!("({v}, {w})"), found: format!("({}, {})", got.0, got.1) });
    }
    let j = family.cell_j();
    let ctx = twisted_ctx(model, j)?;
    recurse(model, &ctx, family, v, w, p, choice)
}

fn recurse(
    model: &SlModel,
    ctx: &TwistedContext,
    family: Family,
    v: &WeylElement,
    w: &WeylElement,
    p: &RationalMatrix,
    choice: SplitChoice,
) -> Result<bool> {
    let d = ctx.twisted_length(w) - ctx.twisted_length(v);
    match d {
        0 => return Ok(true),
        1 => return Ok(solve_rank_one(model, family, v, w, p)?.is_positive()),
        d if d < 0 => return Err(Error::NotComparable(format!("{v} is not J-below {w}"))),
        _ => {}
    }
    let tv = ctx.twisted_length(v);
    let iv = ctx.twisted_interval(v, w)?;
    let target = if choice == SplitChoice::Top { tv + d - 1 } else { tv + 1 };
    let mut mids = iv.iter().filter(|x| ctx.twisted_length(x) == target);
    let u = match choice {
        SplitChoice::Last => mids.last(),
        _ => mids.next(),
    }
    .expect("graded interval")
    .clone();
    let split = match model.jc_chart(&u, ctx.j(), p) {
        Ok(s) => s,
        Err(Error::OutsideChart(_)) | Err(Error::FactorizationFailed(_)) => return Ok(false),
        Err(e) => return Err(e),
    };
    for (pt, a, b) in [(&split.plus, v, &u), (&split.minus, &u, w)] {
        let got = family_cell(model, family, pt)?;
        if got != (a.clone(), b.clone()) {
            return Err(Error::WrongCell {
                expected: format!("chart component in ({a}, {b})"),
                found: format!("({}, {})", got.0, got.1),
            });
        }
    }
    Ok(recurse(model, ctx, family, v, &u, &split.plus, choice)? && recurse(model, ctx, family, &u, w, &split.minus, choice)?)
}

/// Like [`family_sample`] but accepts arbitrary nonzero parameters and
/// skips the cell assertion (for negative controls).
pub fn family_sample_unchecked(model: &SlModel, family: Family, v: &WeylElement, w: &WeylElement, params: &[Q]) -> Result<RationalMatrix> {
    let (lead, v1, w1, sign) = match family {
        Family::Positive => (model.identity(), v.clone(), w.clone(), Sign::Pos),
        Family::Twisted(j) => {
            let w0 = weyl::longest_parabolic(model.group(), j).expect("finite type");
            (model.wdot_of(&w0), w0.mul(v), w0.mul(w), Sign::Neg)
        }
    };
    let sub = positive_subexpression(w1.word(), &v1)?;
    Ok(&lead * &mr_product(model, &sub, params, sign)?)
}
