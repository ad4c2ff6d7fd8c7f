//! Verification suites run by `admcalc verify`.

use admcalc_core::hodge::{
    closed_form_l2, closed_form_l3, conjecture_series, i_series, j_relation_check, j_series,
    l2_table, l3_table, ode_residual_deg2, ode_residual_deg3, p2_closed, p3_full_closed,
    p3_trans_closed,
};
use admcalc_core::hurwitz::{p2, p3_full, p3_trans};
use admcalc_core::localization::Localization;
use admcalc_core::series::q;
use admcalc_core::{Result, TruncatedSeries};
use num_traits::Zero;

/// Enumeration caps for the Hurwitz suite; beyond these the tuple spaces
/// stop being desk-sized.
const HURWITZ_FULL_GMAX: usize = 4;
const HURWITZ_TRANS_GMAX: usize = 5;
const HURWITZ_P2_GMAX: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Rel2,
    Lab,
    Ode2,
    Ode3,
    Conjecture,
    Hurwitz,
    Linearizations,
    Aspinwall,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Rel2,
        Suite::Lab,
        Suite::Ode2,
        Suite::Ode3,
        Suite::Conjecture,
        Suite::Hurwitz,
        Suite::Linearizations,
        Suite::Aspinwall,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Rel2 => "rel2",
            Suite::Lab => "lab",
            Suite::Ode2 => "ode2",
            Suite::Ode3 => "ode3",
            Suite::Conjecture => "conjecture",
            Suite::Hurwitz => "hurwitz",
            Suite::Linearizations => "linearizations",
            Suite::Aspinwall => "aspinwall",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub detail: String,
}

pub fn run_suite(suite: Suite, gmax: usize, order: usize) -> Result<SuiteReport> {
    let (passed, detail) = match suite {
        Suite::Rel2 => rel2(gmax),
        Suite::Lab => lab(gmax),
        Suite::Ode2 => residual(ode_residual_deg2(order.max(2)), "L2' sin x - L2"),
        Suite::Ode3 => residual(ode_residual_deg3(order.max(2)), "(2/3) P33 L3' - P3t L2'"),
        Suite::Conjecture => conjecture(order)?,
        Suite::Hurwitz => hurwitz(gmax)?,
        Suite::Linearizations => linearizations(gmax)?,
        Suite::Aspinwall => aspinwall(gmax)?,
    };
    Ok(SuiteReport { suite, passed, detail })
}

fn first_mismatch(gmax: usize, mut ok: impl FnMut(usize) -> bool) -> Option<usize> {
    (0..=gmax).find(|&g| !ok(g))
}

fn verdict(mismatch: Option<usize>, what: &str, gmax: usize) -> (bool, String) {
    match mismatch {
        None => (true, format!("{what} for g <= {gmax}")),
        Some(g) => (false, format!("{what} fails at g = {g}")),
    }
}

fn rel2(gmax: usize) -> (bool, String) {
    let table = l2_table(gmax);
    let closed = closed_form_l2(2 * gmax + 1);
    let bad = first_mismatch(gmax, |g| closed.egf_value(2 * g + 1).ok().as_ref() == Some(&table.l()[g]));
    verdict(bad, "L2 recursion = (2g+1)! [x^(2g+1)] tan(x/2)", gmax)
}

fn lab(gmax: usize) -> (bool, String) {
    let table = l3_table(gmax);
    let closed = closed_form_l3(2 * gmax + 2);
    let loc = Localization::new(gmax);
    let bad = first_mismatch(gmax, |g| {
        closed.egf_value(2 * g + 2).ok().as_ref() == Some(&table.l()[g])
            && loc.deg3_aux_residual(g).map(|r| r.is_zero()).unwrap_or(false)
    });
    verdict(bad, "L3 recursion = closed form and auxiliary integral vanishes", gmax)
}

fn residual(r: TruncatedSeries, what: &str) -> (bool, String) {
    if r.is_zero() {
        (true, format!("{what} = 0 through x^{}", r.order()))
    } else {
        (false, format!("{what} = {r}"))
    }
}

fn conjecture(order: usize) -> Result<(bool, String)> {
    let n = order.max(2);
    let mut ok = conjecture_series(1, n)? == TruncatedSeries::one(n);
    for d in [2, 3] {
        ok &= conjecture_series(d, n)? == i_series(d, n)?;
    }
    let detail = if ok {
        format!("closed form matches recursion for d = 1, 2, 3 through x^{n}")
    } else {
        format!("closed form and recursion differ below x^{}", n + 1)
    };
    Ok((ok, detail))
}

fn hurwitz(gmax: usize) -> Result<(bool, String)> {
    let full = gmax.min(HURWITZ_FULL_GMAX);
    let trans = gmax.min(HURWITZ_TRANS_GMAX);
    let double = gmax.min(HURWITZ_P2_GMAX);
    let mut ok = true;
    for g in 0..=full {
        ok &= p3_full(g)? == p3_full_closed(g);
    }
    for g in 0..=trans {
        ok &= p3_trans(g)? == p3_trans_closed(g);
    }
    for g in 0..=double {
        ok &= p2(g)? == p2_closed(g);
    }
    let detail = format!(
        "enumeration {} closed forms: P3full g <= {full}, P3trans g <= {trans}, P2 g <= {double}",
        if ok { "matches" } else { "differs from" }
    );
    Ok((ok, detail))
}

fn linearizations(gmax: usize) -> Result<(bool, String)> {
    let loc = Localization::new(gmax);
    let mut bad = None;
    for g in 0..=gmax {
        if loc.deg2_lin_a(g)? != loc.deg2_lin_b(g)? {
            bad = Some(g);
            break;
        }
    }
    Ok(verdict(bad, "I2 under linearization A = linearization B", gmax))
}

fn aspinwall(gmax: usize) -> Result<(bool, String)> {
    let j2 = j_series(2, 2)?;
    let j3 = j_series(3, 4)?;
    if j2.coeff(2)? != &q(1, 8) || j3.coeff(4)? != &q(1, 27) {
        return Ok((false, format!("lowest J coefficients {} and {}", j2.coeff(2)?, j3.coeff(4)?)));
    }
    let loc = Localization::new(gmax);
    let table = l2_table(gmax);
    let mut bad = None;
    for g in 0..=gmax {
        if loc.j2_from_loci(g)? != table.j()[g] || !j_relation_check(g) {
            bad = Some(g);
            break;
        }
    }
    let (ok, rest) = verdict(bad, "J2 loci = binomial sum = 2 I2^2", gmax);
    Ok((ok, format!("[x^2] J2 = 1/8, [x^4] J3 = 1/27; {rest}")))
}
