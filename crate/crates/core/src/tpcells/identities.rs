//! Exact checks of the `x_i`/`y_i` product identities and of the
//! factorizations of `ẇ^{-1}h` and `ẇb` for totally positive `h`, `b`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q, RationalMatrix, Q};
use crate::slgroup::{iota, positive_diagonal, SlModel};
use crate::weyl::{self, WeylElement};

use super::report::{Check, Witness};
use super::{family_cell, positivity_test, Family};

/// `x(a) y(b) = y(b/(ab+1)) α^∨(ab+1) x(a/(ab+1))`, as the triple of
/// arguments on the right.
pub fn xy_swap(a: &Q, b: &Q) -> (Q, Q, Q) {
    let d = a * b + Q::one();
    (b / &d, d.clone(), a / &d)
}

/// Checks, at every node, the two `x·y` reorderings for the triple
/// `(a, b, c)` and the commuting relation `x_i(a) y_j(±b) = y_j(±b) x_i(a)`
/// for `i ≠ j`. One check per identity.
pub fn check_xy_identities(model: &SlModel, sample: usize, abc: &[Q; 3], checks: &mut [Check; 3]) -> Result<()> {
    let [a, b, c] = abc;
    let n = model.rank();
    let one = Q::one();
    for i in 0..n {
        // x(a) y(b+c) = y((b+c)/(a(b+c)+1)) α((a(b+c)+1)) x(a/(a(b+c)+1))
        let bc = b + c;
        let d = a * &bc + &one;
        let lhs = &model.gen_x(i, a)? * &model.gen_y(i, &bc)?;
        let rhs = &(&model.gen_y(i, &(&bc / &d))? * &model.gen_torus(i, &d)?) * &model.gen_x(i, &(a / &d))?;
        checks[0].record(lhs == rhs, || Witness::new(sample, format!("node {i}, (a,b,c) = ({a}, {b}, {c})")).with_matrix(&lhs));

        // x(a/(a(b+c)+1)) y(−c) = y(−c(a(b+c)+1)/(ab+1)) α((ab+1)/(a(b+c)+1)) x(a/(ab+1))
        let e = a * b + &one;
        let lhs = &model.gen_x(i, &(a / &d))? * &model.gen_y(i, &-c.clone())?;
        let rhs = &(&model.gen_y(i, &(-(c * &d) / &e))? * &model.gen_torus(i, &(&e / &d))?) * &model.gen_x(i, &(a / &e))?;
        checks[1].record(lhs == rhs, || Witness::new(sample, format!("node {i}, (a,b,c) = ({a}, {b}, {c})")).with_matrix(&lhs));

        for j in (0..n).filter(|&j| j != i) {
            for s in [b.clone(), -b.clone()] {
                let x = model.gen_x(i, a)?;
                let y = model.gen_y(j, &s)?;
                let ok = &x * &y == &y * &x;
                checks[2].record(ok, || Witness::new(sample, format!("x_{i}({a}) y_{j}({s})")));
            }
        }
    }
    Ok(())
}

/// `ι` as used by the identity suite; `flipped` injects a sign error
/// (negates the image) for mutation testing.
pub fn iota_variant(g: &RationalMatrix, flipped: bool) -> RationalMatrix {
    let x = iota(g);
    if flipped {
        x.map_indexed(|_, _, v| -v.clone())
    } else {
        x
    }
}

/// `ι(x_i(a)) = x_i(−a)`, `ι(y_i(a)) = y_i(−a)`, `ι(ṡ_i) = ṡ_i^{-1}` and
/// multiplicativity on `x_i(a) y_i(b)`.
pub fn check_iota(model: &SlModel, sample: usize, a: &Q, b: &Q, flipped: bool, check: &mut Check) -> Result<()> {
    for i in 0..model.rank() {
        let x = model.gen_x(i, a)?;
        let y = model.gen_y(i, b)?;
        let s = model.sdot(i)?;
        let cases = [
            ("ι(x(a)) = x(−a)", iota_variant(&x, flipped), model.gen_x(i, &-a.clone())?),
            ("ι(y(b)) = y(−b)", iota_variant(&y, flipped), model.gen_y(i, &-b.clone())?),
            ("ι(ṡ) = ṡ^-1", iota_variant(&s, flipped), model.sdot_inv(i)?),
            (
                "ι(x(a)y(b)) = ι(x(a))ι(y(b))",
                iota_variant(&(&x * &y), flipped),
                &iota_variant(&x, flipped) * &iota_variant(&y, flipped),
            ),
        ];
        for (name, got, want) in cases {
            check.record(got == want, || {
                Witness::new(sample, format!("node {i}: {name} with a = {a}, b = {b}")).with_matrix(&got)
            });
        }
    }
    Ok(())
}

/// `g ∈ U^−_{w,>0}`: `g` unit lower, `g B^+ ∈ 𝓑̊_{e,w}`, and positive there.
/// Exact because `U^− → 𝓑` is injective and `U^−_{w,>0}` maps onto
/// `𝓑_{e,w,>0}`.
pub fn in_u_minus_positive(model: &SlModel, w: &WeylElement, g: &RationalMatrix) -> Result<bool> {
    if !(g.is_lower() && g.has_unit_diagonal()) {
        return Ok(false);
    }
    let e = weyl::identity(model.group());
    if model.richardson_cell(g)? != (e.clone(), w.clone()) {
        return Ok(false);
    }
    positivity_test(model, Family::Positive, &e, w, g)
}

/// `g ∈ U^+_{x,>0}` iff `g^T ∈ U^−_{x^{-1},>0}`.
pub fn in_u_plus_positive(model: &SlModel, x: &WeylElement, g: &RationalMatrix) -> Result<bool> {
    in_u_minus_positive(model, &x.inverse(), &g.transpose())
}

/// `g ∈ ẇ^{-1} U^± ẇ`.
fn in_conjugate(model: &SlModel, w: &WeylElement, g: &RationalMatrix, upper: bool) -> Result<bool> {
    let wd = model.wdot_of(w);
    let c = &(&wd * g) * &wd.inverse()?;
    Ok(c.has_unit_diagonal() && if upper { c.is_upper() } else { c.is_lower() })
}

fn unit_lower(g: &RationalMatrix) -> bool {
    g.is_lower() && g.has_unit_diagonal()
}

fn unit_upper(g: &RationalMatrix) -> bool {
    g.is_upper() && g.has_unit_diagonal()
}

/// `M = L · (D N D^{-1}) · D` from `M = L D N`.
fn ldu(m: &RationalMatrix) -> Result<(RationalMatrix, RationalMatrix, RationalMatrix)> {
    let (l, u) = m.lu()?;
    let (d, n) = u.split_diagonal_left().ok_or_else(|| Error::FactorizationFailed("zero pivot".into()))?;
    let up = &(&d * &n) * &d.inverse()?;
    Ok((l, up, d))
}

/// `M = U · L · D` with `U` unit upper, `L` unit lower, `D` diagonal.
fn uld(m: &RationalMatrix) -> Result<(RationalMatrix, RationalMatrix, RationalMatrix)> {
    let (u, l) = m.ul()?;
    let d = l.map_indexed(|i, j, x| if i == j { x.clone() } else { Q::zero() });
    let ln = &l * &d.inverse()?;
    Ok((u, ln, d))
}

/// Outcome of one membership: which factor conditions held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Membership {
    pub factors: Vec<(String, bool)>,
}

impl Membership {
    pub fn holds(&self) -> bool {
        self.factors.iter().all(|(_, ok)| *ok)
    }

    pub fn failing(&self) -> Vec<&str> {
        self.factors.iter().filter(|(_, ok)| !ok).map(|(n, _)| n.as_str()).collect()
    }
}

/// The four factorizations for `h ∈ U^−_{w,>0}`, `b ∈ U^+_{w^{-1},>0}` and
/// `w = w1 w2` length-additive:
///
/// 1. `ẇ^{-1}h ∈ (U^− ∩ ẇ^{-1}U^+ẇ) · U^+_{w^{-1},>0} · T_{>0}`
/// 2. `ẇ1^{-1}h ∈ (U^− ∩ ẇ1^{-1}U^+ẇ1) · U^−_{w2,>0} · U^+_{w1^{-1},>0} · T_{>0}`
/// 3. `ẇ b ∈ (U^+ ∩ ẇU^−ẇ^{-1}) · U^−_{w,>0} · T_{>0}`
/// 4. `ẇ2 b ∈ (U^+ ∩ ẇ2U^−ẇ2^{-1}) · U^+_{w1^{-1},>0} · U^−_{w2,>0} · T_{>0}`
///
/// The Gauss factors are unique and tested directly. Where a Gauss factor
/// must be split further (2 and 4), the split is not along complementary
/// pattern subgroups, so the two-factor condition is tested as membership
/// of an associated flag in a positive Richardson cell.
pub fn gkl_memberships(
    model: &SlModel,
    w: &WeylElement,
    w1: &WeylElement,
    h: &RationalMatrix,
    b: &RationalMatrix,
) -> Result<[Membership; 4]> {
    let w2 = w1.inverse().mul(w);
    if w1.length() + w2.length() != w.length() {
        return Err(Error::NotComparable(format!("{w1} is not a length-additive prefix of {w}")));
    }
    let (wi, w1i) = (w.inverse(), w1.inverse());
    let wd = model.wdot_of(w);
    let w1d = model.wdot_of(w1);
    let w2d = model.wdot_of(&w2);

    // 1
    let m1 = &wd.inverse()? * h;
    let (l, up, d) = ldu(&m1)?;
    let one = Membership {
        factors: vec![
            ("U^- ∩ ẇ^-1 U^+ ẇ".into(), unit_lower(&l) && in_conjugate(model, w, &l, true)?),
            ("U^+_{w^-1,>0}".into(), in_u_plus_positive(model, &wi, &up)?),
            ("T_{>0}".into(), positive_diagonal(&d)),
        ],
    };

    // 2: with L = A·B from the LDU split, B ∈ U^−_{w2,>0} for some
    // A ∈ U^− ∩ ẇ1^{-1}U^+ẇ1 iff L^{-1}ẇ1^{-1}B^+ = B^{-1}ẇ1^{-1}B^+ lies in
    // 𝓑_{w1^{-1}, w^{-1}, <0} (B^{-1} ∈ U^−_{w2^{-1},<0}, and ẇ1^{-1} is the
    // negative-family representative of w1^{-1})
    let m2 = &w1d.inverse()? * h;
    let (l, up, d) = ldu(&m2)?;
    let f2 = &l.inverse()? * &w1d.inverse()?;
    let neg = Family::negative();
    let f2_ok = family_cell(model, neg, &f2)? == (w1i.clone(), wi.clone()) && positivity_test(model, neg, &w1i, &wi, &f2)?;
    let two = Membership {
        factors: vec![
            ("(U^- ∩ ẇ1^-1 U^+ ẇ1)·U^-_{w2,>0}".into(), f2_ok),
            ("U^+_{w1^-1,>0}".into(), in_u_plus_positive(model, &w1i, &up)?),
            ("T_{>0}".into(), positive_diagonal(&d)),
        ],
    };

    // 3
    let m3 = &wd * b;
    let (u, ln, d) = uld(&m3)?;
    let three = Membership {
        factors: vec![
            ("U^+ ∩ ẇ U^- ẇ^-1".into(), unit_upper(&u) && in_conjugate(model, &wi, &u, false)?),
            ("U^-_{w,>0}".into(), in_u_minus_positive(model, w, &ln)?),
            ("T_{>0}".into(), positive_diagonal(&d)),
        ],
    };

    // 4: with U = A·C from the UL split, C ∈ U^+_{w1^{-1},>0} for some
    // A ∈ U^+ ∩ ẇ2U^−ẇ2^{-1} iff U^T ẇ2 B^+ = C^T ẇ2 B^+ lies in
    // 𝓑_{w2, w, >0} (C^T ∈ U^−_{w1,>0})
    let m4 = &w2d * b;
    let (u, ln, d) = uld(&m4)?;
    let f4 = &u.transpose() * &w2d;
    let f4_ok = model.richardson_cell(&f4)? == (w2.clone(), w.clone()) && positivity_test(model, Family::Positive, &w2, w, &f4)?;
    let four = Membership {
        factors: vec![
            ("(U^+ ∩ ẇ2 U^- ẇ2^-1)·U^+_{w1^-1,>0}".into(), f4_ok),
            ("U^-_{w2,>0}".into(), in_u_minus_positive(model, &w2, &ln)?),
            ("T_{>0}".into(), positive_diagonal(&d)),
        ],
    };
    Ok([one, two, three, four])
}

/// Random positive triple with entries `p/q`, `1 ≤ p, q ≤ 20`.
pub fn triple(params: &[Q]) -> [Q; 3] {
    [params[0].clone(), params[1].clone(), params.get(2).cloned().unwrap_or_else(|| q(1, 1))]
}
