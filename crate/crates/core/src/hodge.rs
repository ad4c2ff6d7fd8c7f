//! Genus recursions for the degree 2 and 3 integrals and their generating
//! functions.
//!
//! `L_2(g)` is the λ-integral left after localizing `I_2(g)`; comparing two
//! torus linearizations gives a recursion in `g` seeded by `L_2(0) = 1/2`,
//! and `I_2(g) = -L_2(g)/2`. `L_3(g)` plays the same role in degree 3 with
//! `I_3(g) = (2/9) L_3(g)`; its recursion comes from an auxiliary integral
//! that vanishes for dimension reasons and mixes `L_3`, `L_2` and the simple
//! Hurwitz numbers `P_{3,(3)}`, `P_{3,(t)}`.
//!
//! Generating functions are exponential:
//! `𝓛_2 = Σ L_2(g) x^(2g+1)/(2g+1)!`, `𝓛_3 = Σ L_3(g) x^(2g+2)/(2g+2)!`,
//! `𝓘_d = Σ I_d(g) x^(2g+d-1)/(2g+d-1)!`, `𝓙_d = Σ J_d(g) x^(2g+2d-2)/(2g+2d-2)!`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{binomial_q, pow_int, sign};
use crate::error::{Error, Result};
use crate::series::{cos_scaled, q, sin_scaled, Rational, TruncatedSeries};

/// Simple Hurwitz numbers attached to a table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HurwitzValues {
    /// `P_2(g)` for double covers.
    Degree2 { p2: Vec<Rational> },
    /// `P_{3,(3)}(g)` (one triple point) and `P_{3,(t)}(g)` (simple only).
    Degree3 { full: Vec<Rational>, trans: Vec<Rational> },
}

/// Exact values of one degree's family for genera `0..=gmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeTable {
    degree: u32,
    gmax: usize,
    l: Vec<Rational>,
    hurwitz: HurwitzValues,
    i: Vec<Rational>,
    j: Vec<Rational>,
}

impl HodgeTable {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn gmax(&self) -> usize {
        self.gmax
    }

    /// `L_d(g)` for `g = 0..=gmax`.
    pub fn l(&self) -> &[Rational] {
        &self.l
    }

    pub fn i(&self) -> &[Rational] {
        &self.i
    }

    pub fn j(&self) -> &[Rational] {
        &self.j
    }

    pub fn hurwitz(&self) -> &HurwitzValues {
        &self.hurwitz
    }

    /// `𝓛_d` truncated at `order` (terms beyond `gmax` are missing).
    pub fn l_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_egf(&self.l, self.degree as usize - 1, 2, order)
    }

    pub fn i_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_egf(&self.i, self.degree as usize - 1, 2, order)
    }

    pub fn j_series(&self, order: usize) -> TruncatedSeries {
        TruncatedSeries::from_egf(&self.j, 2 * self.degree as usize - 2, 2, order)
    }
}

/// `P_2(g) = 1/2`: the ψ class comes from `M_{0,2g+2}` through a map of
/// degree 1/2.
pub fn p2_closed(_g: usize) -> Rational {
    q(1, 2)
}

/// `P_{3,(3)}(g) = 3^(2g)`.
pub fn p3_full_closed(g: usize) -> Rational {
    Rational::from_integer(pow_int(3, 2 * g))
}

/// `P_{3,(t)}(g) = (3^(2g+2) - 1) / 2`.
pub fn p3_trans_closed(g: usize) -> Rational {
    Rational::new(pow_int(3, 2 * g + 2) - 1, BigInt::from(2))
}

/// `L_2(0..=gmax)` from the two-linearization recursion
/// `L_2(g) = 1/(2g) Σ_{i<g} (-1)^(g-i+1) C(2g+1, 2i) L_2(i)`.
pub fn l2_values(gmax: usize) -> Vec<Rational> {
    let mut l = Vec::with_capacity(gmax + 1);
    l.push(q(1, 2));
    for g in 1..=gmax {
        let sum = (0..g).fold(Rational::zero(), |acc, i| {
            acc + sign(g - i + 1) * binomial_q(2 * g + 1, 2 * i) * &l[i]
        });
        l.push(sum / Rational::from_integer(BigInt::from(2 * g)));
    }
    l
}

/// Total of the vanishing degree 3 relation at genus `g`:
///
/// `(2/3) Σ_i C(2g+3, 2i+1) (-1)^(g-i+1) P_{3,(3)}(g-i) L_3(i)
///  + Σ_i C(2g+3, 2i) (-1)^(g-i) P_{3,(t)}(g-i) L_2(i)`.
///
/// All slices must reach index `g`.
pub fn degree3_relation(
    g: usize,
    l2: &[Rational],
    l3: &[Rational],
    p_full: &[Rational],
    p_trans: &[Rational],
) -> Rational {
    let mut total = Rational::zero();
    for i in 0..=g {
        total += q(2, 3)
            * binomial_q(2 * g + 3, 2 * i + 1)
            * sign(g - i + 1)
            * &p_full[g - i]
            * &l3[i];
        total += binomial_q(2 * g + 3, 2 * i) * sign(g - i) * &p_trans[g - i] * &l2[i];
    }
    total
}

/// `L_3(0..=gmax)` by solving the degree 3 relation for its `L_3(g)` term,
/// whose coefficient is `-(2/3) C(2g+3, 2) P_{3,(3)}(0)`. `L_3(0)` comes out
/// of the same equation.
pub fn l3_values(
    l2: &[Rational],
    p_full: &[Rational],
    p_trans: &[Rational],
    gmax: usize,
) -> Vec<Rational> {
    let mut l3: Vec<Rational> = Vec::with_capacity(gmax + 1);
    for g in 0..=gmax {
        // the relation with L_3(g) = 0 is exactly the remaining terms
        l3.push(Rational::zero());
        let rest = degree3_relation(g, l2, &l3, p_full, p_trans);
        let lead = q(2, 3) * binomial_q(2 * g + 3, 2) * &p_full[0];
        l3[g] = rest / lead;
    }
    l3
}

/// Degree 2 table: `L_2`, `P_2`, `I_2 = -L_2/2`, `J_2` from `2 𝓘_2^2`.
pub fn l2_table(gmax: usize) -> HodgeTable {
    let l = l2_values(gmax);
    let i: Vec<Rational> = l.iter().map(|v| v * q(-1, 2)).collect();
    let j = j_values(2, &i, gmax);
    HodgeTable {
        degree: 2,
        gmax,
        l,
        hurwitz: HurwitzValues::Degree2 { p2: (0..=gmax).map(p2_closed).collect() },
        i,
        j,
    }
}

/// Degree 3 table: `L_3`, `P_{3,(3)}`, `P_{3,(t)}`, `I_3 = (2/9) L_3`, `J_3`
/// from `3 𝓘_3^2`.
pub fn l3_table(gmax: usize) -> HodgeTable {
    l3_table_from(&l2_values(gmax), gmax)
}

/// As [`l3_table`], reusing already computed `L_2(0..=gmax)`.
pub fn l3_table_from(l2: &[Rational], gmax: usize) -> HodgeTable {
    assert!(l2.len() > gmax, "L_2 values must reach genus {gmax}");
    let full: Vec<Rational> = (0..=gmax).map(p3_full_closed).collect();
    let trans: Vec<Rational> = (0..=gmax).map(p3_trans_closed).collect();
    let l = l3_values(l2, &full, &trans, gmax);
    let i: Vec<Rational> = l.iter().map(|v| v * q(2, 9)).collect();
    let j = j_values(3, &i, gmax);
    HodgeTable { degree: 3, gmax, l, hurwitz: HurwitzValues::Degree3 { full, trans }, i, j }
}

fn j_values(d: u32, i_vals: &[Rational], gmax: usize) -> Vec<Rational> {
    let d_us = d as usize;
    let order = 2 * gmax + 2 * d_us - 2;
    let i = TruncatedSeries::from_egf(i_vals, d_us - 1, 2, order);
    let j = i.mul(&i).expect("same order").scale(&Rational::from_integer(d.into()));
    (0..=gmax)
        .map(|g| j.egf_value(2 * g + 2 * d_us - 2).expect("within order"))
        .collect()
}

fn check_degree(d: u32) -> Result<()> {
    match d {
        2 | 3 => Ok(()),
        _ => Err(Error::UnsupportedDegree(d)),
    }
}

/// Largest genus whose term `x^(2g+offset)` fits within `order`.
fn gmax_for(order: usize, offset: usize) -> Option<usize> {
    order.checked_sub(offset).map(|r| r / 2)
}

/// `tan(x/2)`.
pub fn closed_form_l2(order: usize) -> TruncatedSeries {
    let half = q(1, 2);
    sin_scaled(&half, order).div(&cos_scaled(&half, order)).expect("cos has unit constant term")
}

/// `(9/2) (1 / (1 + 2 cos x) - 1/3)`, which equals
/// `(9/2) (1 / (4 cos^2(x/2) - 1) - 1/3)`.
pub fn closed_form_l3(order: usize) -> TruncatedSeries {
    let one = TruncatedSeries::one(order);
    let den = one.add(&cos_scaled(&Rational::one(), order).scale(&q(2, 1))).expect("same order");
    one.div(&den)
        .expect("constant term 3")
        .sub(&TruncatedSeries::constant(q(1, 3), order))
        .expect("same order")
        .scale(&q(9, 2))
}

/// The conjectured closed form
/// `(-1)^(d-1) (1/d) (2 sin(x/2))^d / (2 sin(dx/2))`, to order `order`.
///
/// Established for `d <= 3`; for larger `d` this is a prediction only.
pub fn conjecture_series(d: u32, order: usize) -> Result<TruncatedSeries> {
    if d == 0 {
        return Err(Error::ZeroDegree);
    }
    // The denominator has valuation 1, so work one order higher.
    let w = order + 1;
    let two = q(2, 1);
    let num = sin_scaled(&q(1, 2), w).scale(&two).pow(d);
    let den = sin_scaled(&q(i64::from(d), 2), w).scale(&two);
    let sign = if d % 2 == 1 { Rational::one() } else { -Rational::one() };
    let prefactor = sign / Rational::from_integer(d.into());
    Ok(num.div(&den)?.scale(&prefactor))
}

/// `𝓘_d` for `d ∈ {2, 3}` built from the recursion tables.
pub fn i_series(d: u32, order: usize) -> Result<TruncatedSeries> {
    check_degree(d)?;
    let offset = d as usize - 1;
    let Some(gmax) = gmax_for(order, offset) else {
        return Ok(TruncatedSeries::zero(order));
    };
    let table = if d == 2 { l2_table(gmax) } else { l3_table(gmax) };
    Ok(table.i_series(order))
}

/// `𝓛_d` for `d ∈ {2, 3}` built from the recursion tables.
pub fn l_series(d: u32, order: usize) -> Result<TruncatedSeries> {
    check_degree(d)?;
    let offset = d as usize - 1;
    let Some(gmax) = gmax_for(order, offset) else {
        return Ok(TruncatedSeries::zero(order));
    };
    let table = if d == 2 { l2_table(gmax) } else { l3_table(gmax) };
    Ok(table.l_series(order))
}

/// `𝓙_d = d 𝓘_d^2` for `d ∈ {2, 3}`.
pub fn j_series(d: u32, order: usize) -> Result<TruncatedSeries> {
    let i = i_series(d, order)?;
    Ok(i.mul(&i)?.scale(&Rational::from_integer(d.into())))
}

/// `J_2(g)` from the binomial sum `(1/2) Σ_i C(2g+2, 2i+1) L_2(i) L_2(g-i)`.
pub fn j2_binomial_sum(g: usize, l2: &[Rational]) -> Rational {
    (0..=g).fold(Rational::zero(), |acc, i| {
        acc + binomial_q(2 * g + 2, 2 * i + 1) * &l2[i] * &l2[g - i]
    }) * q(1, 2)
}

/// Whether the binomial sum for `J_2(g)` agrees with the coefficient of
/// `x^(2g+2)` in `2 𝓘_2^2`.
pub fn j_relation_check(g: usize) -> bool {
    let lhs = j2_binomial_sum(g, &l2_values(g));
    let rhs = j_series(2, 2 * g + 2)
        .and_then(|j| j.egf_value(2 * g + 2))
        .expect("order covers 2g+2");
    lhs == rhs
}

/// `Σ (-1)^g P_{3,(3)}(g) x^(2g+2)/(2g+2)!` from the closed-form counts.
pub fn p3_full_series(order: usize) -> TruncatedSeries {
    let gmax = gmax_for(order, 2).unwrap_or(0);
    let vals: Vec<Rational> = (0..=gmax).map(|g| sign(g) * p3_full_closed(g)).collect();
    TruncatedSeries::from_egf(&vals, 2, 2, order)
}

/// `Σ (-1)^g P_{3,(t)}(g) x^(2g+3)/(2g+3)!` from the closed-form counts.
pub fn p3_trans_series(order: usize) -> TruncatedSeries {
    let gmax = gmax_for(order, 3).unwrap_or(0);
    let vals: Vec<Rational> = (0..=gmax).map(|g| sign(g) * p3_trans_closed(g)).collect();
    TruncatedSeries::from_egf(&vals, 3, 2, order)
}

/// `(1 - cos 3x) / 9`.
pub fn p3_full_trig(order: usize) -> TruncatedSeries {
    TruncatedSeries::one(order)
        .sub(&cos_scaled(&q(3, 1), order))
        .expect("same order")
        .scale(&q(1, 9))
}

/// `(3 sin x - sin 3x) / 6`.
pub fn p3_trans_trig(order: usize) -> TruncatedSeries {
    sin_scaled(&Rational::one(), order)
        .scale(&q(3, 1))
        .sub(&sin_scaled(&q(3, 1), order))
        .expect("same order")
        .scale(&q(1, 6))
}

/// `𝓛_2' sin x - 𝓛_2` for the tabulated `𝓛_2`, order `order - 1`.
pub fn ode_residual_deg2(order: usize) -> TruncatedSeries {
    let gmax = gmax_for(order, 1).unwrap_or(0);
    ode_residual_deg2_from(&l2_table(gmax).l_series(order))
}

/// `f' sin x - f` for an arbitrary candidate `f`; order `N - 1`.
pub fn ode_residual_deg2_from(l2: &TruncatedSeries) -> TruncatedSeries {
    let n = l2.order() - 1;
    let lhs = l2.derive().mul(&sin_scaled(&Rational::one(), n)).expect("same order");
    lhs.sub(&l2.truncate(n)).expect("same order")
}

/// `(2/3) 𝓟_{3,(3)} 𝓛_3' - 𝓟_{3,(t)} 𝓛_2'` for the tabulated series,
/// order `order - 1`.
pub fn ode_residual_deg3(order: usize) -> TruncatedSeries {
    let gmax = gmax_for(order, 1).unwrap_or(0);
    let l2 = l2_values(gmax);
    let l3 = l3_table_from(&l2, gmax);
    ode_residual_deg3_from(
        &TruncatedSeries::from_egf(&l2, 1, 2, order),
        &l3.l_series(order),
        &p3_full_series(order),
        &p3_trans_series(order),
    )
}

/// The degree 3 residual for arbitrary candidate series of a common order
/// `N`; the result has order `N - 1`.
pub fn ode_residual_deg3_from(
    l2: &TruncatedSeries,
    l3: &TruncatedSeries,
    p_full: &TruncatedSeries,
    p_trans: &TruncatedSeries,
) -> TruncatedSeries {
    let n = l3.order() - 1;
    let first = p_full.truncate(n).mul(&l3.derive()).expect("same order").scale(&q(2, 3));
    let second = p_trans.truncate(n).mul(&l2.derive()).expect("same order");
    first.sub(&second).expect("same order")
}
