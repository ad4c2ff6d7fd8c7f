//! Reduced torus-fixed-locus contributions.
//!
//! Each [`FixedLocusTerm`] is a localization contribution after the
//! equivariant classes have been integrated out: a rational coefficient (with
//! the relevant `L` and `P` values substituted) times a power of `ħ`. Summing
//! a family reproduces one side of a localization identity:
//!
//! - `LinA`/`LinB`: `I_2(g)` under two linearizations; the sums agree.
//! - `Aux`: the degree 3 auxiliary integral, whose `ħ^-1` total is zero.
//! - `J`: `J_2(g)` under the valence-one linearization.
//!
//! At genus 0 the "left" and "right" one-sided loci are the same locus and
//! only the right-hand kind is emitted.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::combinatorics::{binomial_q, sign};
use crate::error::{Error, Result};
use crate::hodge::{l2_values, l3_values, p2_closed, p3_full_closed, p3_trans_closed};
use crate::series::{q, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    LinA,
    LinB,
    Aux,
    J,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::LinA => "linA",
            Family::LinB => "linB",
            Family::Aux => "aux",
            Family::J => "J",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linA" | "lina" | "A" => Ok(Family::LinA),
            "linB" | "linb" | "B" => Ok(Family::LinB),
            "aux" => Ok(Family::Aux),
            "J" | "j" => Ok(Family::J),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }
}

/// Locus shapes appearing in the catalogs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocusKind {
    /// `F_{g,·}` with all weights zero at infinity (linearization A).
    LinALeft,
    /// `F_{·,g}`: genus on the infinity side only.
    LinBRight,
    /// `F_{g1,g2}`, both genera positive.
    LinBSplit,
    /// `F_{g,·}` under linearization B.
    LinBLeft,
    /// `F_{g,0}`: triple point, genus `g` over zero.
    AuxFullLeft,
    /// `F_{g1,g2}` with a triple point.
    AuxFullSplit,
    /// `F_{0,g}`: triple point, genus `g` over infinity.
    AuxFullRight,
    /// `F_{g,·,·}`: simple ramification, sheets split 2 + 1.
    AuxSimpleLeft,
    /// `F_{g1,g2,x}`: simple ramification with a degree 2 piece of genus `g2`.
    AuxSimpleSplit,
    /// `F_{0,g,·}`.
    AuxSimpleRight,
    /// Genus `g` over zero only.
    JLeft,
    /// Genera `g1`, `g2` over zero and infinity.
    JSplit,
    /// Genus `g` over infinity only.
    JRight,
}

impl LocusKind {
    pub fn label(self) -> &'static str {
        match self {
            LocusKind::LinALeft => "F_{g,.}^A",
            LocusKind::LinBRight => "F_{.,g}",
            LocusKind::LinBSplit => "F_{g1,g2}",
            LocusKind::LinBLeft => "F_{g,.}^B",
            LocusKind::AuxFullLeft => "F_{g,0}",
            LocusKind::AuxFullSplit => "F_{g1,g2}",
            LocusKind::AuxFullRight => "F_{0,g}",
            LocusKind::AuxSimpleLeft => "F_{g,.,.}",
            LocusKind::AuxSimpleSplit => "F_{g1,g2,x}",
            LocusKind::AuxSimpleRight => "F_{0,g,.}",
            LocusKind::JLeft => "g-left",
            LocusKind::JSplit => "g1g2-split",
            LocusKind::JRight => "g-right",
        }
    }
}

impl fmt::Display for LocusKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// One reduced contribution `coefficient * ħ^hbar_exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocusTerm {
    pub degree: u32,
    pub kind: LocusKind,
    /// `(g1, Some(g2))` for two-sided loci, `(g, None)` for one-sided ones.
    pub genera: (usize, Option<usize>),
    pub coefficient: Rational,
    pub hbar_exponent: i32,
}

impl FixedLocusTerm {
    pub fn genus(&self) -> usize {
        self.genera.0 + self.genera.1.unwrap_or(0)
    }
}

/// The `L` and `P` values the locus formulas consume, for genera up to `gmax`.
#[derive(Debug, Clone)]
pub struct Localization {
    gmax: usize,
    l2: Vec<Rational>,
    l3: Vec<Rational>,
    p2: Vec<Rational>,
    p_full: Vec<Rational>,
    p_trans: Vec<Rational>,
}

impl Localization {
    pub fn new(gmax: usize) -> Self {
        let l2 = l2_values(gmax);
        let p_full: Vec<Rational> = (0..=gmax).map(p3_full_closed).collect();
        let p_trans: Vec<Rational> = (0..=gmax).map(p3_trans_closed).collect();
        let l3 = l3_values(&l2, &p_full, &p_trans, gmax);
        let p2 = (0..=gmax).map(p2_closed).collect();
        Self { gmax, l2, l3, p2, p_full, p_trans }
    }

    pub fn gmax(&self) -> usize {
        self.gmax
    }

    /// Replaces `P_{3,(t)}(g)`, leaving `L_3` as computed. Used to check that
    /// the identities are sensitive to the Hurwitz input.
    pub fn set_p_trans(&mut self, g: usize, value: Rational) {
        self.p_trans[g] = value;
    }

    pub fn set_l2(&mut self, g: usize, value: Rational) {
        self.l2[g] = value;
    }

    fn check_genus(&self, g: usize) -> Result<()> {
        if g > self.gmax {
            return Err(Error::GenusOutOfRange { genus: g, gmax: self.gmax });
        }
        Ok(())
    }

    /// Every contributing locus of `family` at genus `g`.
    pub fn enumerate_loci(&self, degree: u32, g: usize, family: Family) -> Result<Vec<FixedLocusTerm>> {
        if degree != 2 && degree != 3 {
            return Err(Error::UnsupportedDegree(degree));
        }
        self.check_genus(g)?;
        match (degree, family) {
            (_, Family::LinA) => Ok(vec![self.lin_a_term(degree, g)]),
            (2, Family::LinB) => Ok(self.lin_b_terms(g)),
            (3, Family::Aux) => Ok(self.aux_terms(g)),
            (2, Family::J) => Ok(self.j_terms(g)),
            _ => Err(Error::FamilyDegree { family: family.name(), degree }),
        }
    }

    fn lin_a_term(&self, degree: u32, g: usize) -> FixedLocusTerm {
        // ev*(∞) = -ħ; degree 2 leaves -(1/2) L_2(g), degree 3 leaves (2/9) L_3(g)
        let coefficient = if degree == 2 { q(-1, 2) * &self.l2[g] } else { q(2, 9) * &self.l3[g] };
        FixedLocusTerm { degree, kind: LocusKind::LinALeft, genera: (g, None), coefficient, hbar_exponent: 0 }
    }

    fn lin_b_terms(&self, g: usize) -> Vec<FixedLocusTerm> {
        let term = |kind, genera, coefficient| FixedLocusTerm {
            degree: 2,
            kind,
            genera,
            coefficient,
            hbar_exponent: 0,
        };
        let mut out = Vec::with_capacity(g + 1);
        // 2g+1 copies of the genus g space
        out.push(term(
            LocusKind::LinBRight,
            (g, None),
            q(-1, 2) * binomial_q(2 * g + 1, 1) * &self.l2[g],
        ));
        for g2 in 1..g {
            let g1 = g - g2;
            out.push(term(
                LocusKind::LinBSplit,
                (g1, Some(g2)),
                sign(g1 + 1) * binomial_q(2 * g + 1, 2 * g2) * &self.p2[g1] * &self.l2[g2],
            ));
        }
        if g > 0 {
            out.push(term(LocusKind::LinBLeft, (g, None), sign(g + 1) * q(1, 2) * &self.p2[g]));
        }
        out
    }

    fn aux_terms(&self, g: usize) -> Vec<FixedLocusTerm> {
        let term = |kind, genera, coefficient| FixedLocusTerm {
            degree: 3,
            kind,
            genera,
            coefficient,
            hbar_exponent: -1,
        };
        let two_thirds = q(2, 3);
        let mut out = Vec::with_capacity(2 * g + 2);

        // triple point over the main component: gluing factor 3 times (2/9)
        if g > 0 {
            out.push(term(
                LocusKind::AuxFullLeft,
                (g, Some(0)),
                sign(g + 1) * &two_thirds * binomial_q(2 * g + 3, 2 * g + 2) * &self.p_full[g] * &self.l3[0],
            ));
        }
        for g2 in 1..g {
            let g1 = g - g2;
            out.push(term(
                LocusKind::AuxFullSplit,
                (g1, Some(g2)),
                sign(g1 + 1)
                    * &two_thirds
                    * binomial_q(2 * g + 3, 2 * g1 + 2)
                    * &self.p_full[g1]
                    * &self.l3[g2],
            ));
        }
        out.push(term(
            LocusKind::AuxFullRight,
            (0, Some(g)),
            -(&two_thirds * binomial_q(2 * g + 3, 2) * &self.p_full[0] * &self.l3[g]),
        ));

        // simple ramification, sheets split 2 + 1: gluing factor 2 times (1/2)
        if g > 0 {
            out.push(term(LocusKind::AuxSimpleLeft, (g, None), sign(g) * q(1, 2) * &self.p_trans[g]));
        }
        for g2 in 1..g {
            let g1 = g - g2;
            out.push(term(
                LocusKind::AuxSimpleSplit,
                (g1, Some(g2)),
                sign(g1) * binomial_q(2 * g + 3, 2 * g1 + 3) * &self.p_trans[g1] * &self.l2[g2],
            ));
        }
        out.push(term(
            LocusKind::AuxSimpleRight,
            (0, Some(g)),
            binomial_q(2 * g + 3, 3) * &self.p_trans[0] * &self.l2[g],
        ));
        out
    }

    fn j_terms(&self, g: usize) -> Vec<FixedLocusTerm> {
        let term = |kind, genera, coefficient| FixedLocusTerm {
            degree: 2,
            kind,
            genera,
            coefficient,
            hbar_exponent: 0,
        };
        let one_sided = q(1, 4) * binomial_q(2 * g + 2, 1) * &self.l2[g];
        let mut out = Vec::with_capacity(g + 1);
        out.push(term(LocusKind::JRight, (g, None), one_sided.clone()));
        for g1 in 1..g {
            let g2 = g - g1;
            out.push(term(
                LocusKind::JSplit,
                (g1, Some(g2)),
                q(1, 2) * binomial_q(2 * g + 2, 2 * g1 + 1) * &self.l2[g1] * &self.l2[g2],
            ));
        }
        if g > 0 {
            out.push(term(LocusKind::JLeft, (g, None), one_sided));
        }
        out
    }

    fn family_total(&self, degree: u32, g: usize, family: Family) -> Result<Rational> {
        Ok(self
            .enumerate_loci(degree, g, family)?
            .into_iter()
            .fold(Rational::zero(), |acc, t| acc + t.coefficient))
    }

    /// `I_2(g)` under linearization A: `-L_2(g)/2`.
    pub fn deg2_lin_a(&self, g: usize) -> Result<Rational> {
        self.family_total(2, g, Family::LinA)
    }

    /// `I_2(g)` under linearization B, summed over its `g + 1` loci.
    pub fn deg2_lin_b(&self, g: usize) -> Result<Rational> {
        self.family_total(2, g, Family::LinB)
    }

    /// Coefficient of `ħ^-1` in the degree 3 auxiliary integral; zero.
    pub fn deg3_aux_residual(&self, g: usize) -> Result<Rational> {
        self.family_total(3, g, Family::Aux)
    }

    /// `J_2(g)` as the sum of its fixed-locus contributions.
    pub fn j2_from_loci(&self, g: usize) -> Result<Rational> {
        self.family_total(2, g, Family::J)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::closed_form_l2;

    fn coeff_of(terms: &[FixedLocusTerm], kind: LocusKind) -> Rational {
        terms.iter().find(|t| t.kind == kind).unwrap().coefficient.clone()
    }

    #[test]
    fn linearization_examples() {
        let loc = Localization::new(4);
        assert_eq!(loc.deg2_lin_a(0).unwrap(), q(-1, 4));
        assert_eq!(loc.deg2_lin_a(1).unwrap(), q(-1, 8));
        assert_eq!(loc.deg2_lin_a(2).unwrap(), q(-1, 4));
        assert_eq!(loc.deg2_lin_b(0).unwrap(), q(-1, 4));
        assert_eq!(loc.deg2_lin_b(1).unwrap(), q(-1, 8));
        assert_eq!(loc.deg2_lin_b(2).unwrap(), q(-1, 4));
    }

    #[test]
    fn aux_examples() {
        let loc = Localization::new(3);
        for g in 0..=3 {
            assert!(loc.deg3_aux_residual(g).unwrap().is_zero(), "g = {g}");
        }
        let terms = loc.enumerate_loci(3, 0, Family::Aux).unwrap();
        assert_eq!(coeff_of(&terms, LocusKind::AuxFullRight), q(-2, 1));
        assert_eq!(coeff_of(&terms, LocusKind::AuxSimpleRight), q(2, 1));

        let mut bumped = Localization::new(3);
        bumped.set_p_trans(0, q(5, 1));
        assert!(!bumped.deg3_aux_residual(1).unwrap().is_zero());
        assert!(!bumped.deg3_aux_residual(0).unwrap().is_zero());
    }

    #[test]
    fn j_examples() {
        let loc = Localization::new(4);
        assert_eq!(loc.j2_from_loci(0).unwrap(), q(1, 4));
        assert_eq!(loc.j2_from_loci(1).unwrap(), q(1, 2));
        let t = closed_form_l2(6);
        let j = t.mul(&t).unwrap().scale(&q(1, 2));
        assert_eq!(loc.j2_from_loci(2).unwrap(), j.egf_value(6).unwrap());
    }

    #[test]
    fn catalog_sizes() {
        let loc = Localization::new(6);
        for g in 0..=6 {
            assert_eq!(loc.enumerate_loci(2, g, Family::LinA).unwrap().len(), 1);
            assert_eq!(loc.enumerate_loci(3, g, Family::LinA).unwrap().len(), 1);
            assert_eq!(loc.enumerate_loci(2, g, Family::LinB).unwrap().len(), g + 1);
            let aux = loc.enumerate_loci(3, g, Family::Aux).unwrap();
            assert_eq!(aux.len(), 2 * g + 2);
            assert!(aux.iter().all(|t| t.hbar_exponent == -1 && t.genus() == g));
            let j = loc.enumerate_loci(2, g, Family::J).unwrap();
            assert_eq!(j.len(), g + 1);
            let kinds: std::collections::HashSet<_> = j.iter().map(|t| t.kind).collect();
            assert_eq!(kinds.len(), g.min(2) + 1);
        }
    }

    #[test]
    fn signs_pinned_per_kind() {
        let loc = Localization::new(2);
        let b1 = loc.enumerate_loci(2, 1, Family::LinB).unwrap();
        assert_eq!(coeff_of(&b1, LocusKind::LinBRight), q(-3, 8));
        assert_eq!(coeff_of(&b1, LocusKind::LinBLeft), q(1, 4));
        let b2 = loc.enumerate_loci(2, 2, Family::LinB).unwrap();
        assert_eq!(coeff_of(&b2, LocusKind::LinBSplit), q(5, 4));

        let a1 = loc.enumerate_loci(3, 1, Family::Aux).unwrap();
        assert_eq!(coeff_of(&a1, LocusKind::AuxFullLeft), q(30, 1));
        assert_eq!(coeff_of(&a1, LocusKind::AuxFullRight), q(-20, 1));
        assert_eq!(coeff_of(&a1, LocusKind::AuxSimpleLeft), q(-20, 1));
        assert_eq!(coeff_of(&a1, LocusKind::AuxSimpleRight), q(10, 1));
        let a2 = loc.enumerate_loci(3, 2, Family::Aux).unwrap();
        assert_eq!(coeff_of(&a2, LocusKind::AuxFullSplit), q(630, 1));
        assert_eq!(coeff_of(&a2, LocusKind::AuxSimpleSplit), q(-210, 1));

        let j1 = loc.enumerate_loci(2, 1, Family::J).unwrap();
        assert_eq!(coeff_of(&j1, LocusKind::JLeft), q(1, 4));
        assert_eq!(coeff_of(&j1, LocusKind::JRight), q(1, 4));
        let j2 = loc.enumerate_loci(2, 2, Family::J).unwrap();
        assert_eq!(coeff_of(&j2, LocusKind::JSplit), q(5, 8));
    }

    #[test]
    fn bad_requests() {
        let loc = Localization::new(2);
        assert_eq!(
            loc.enumerate_loci(2, 1, Family::Aux),
            Err(Error::FamilyDegree { family: "aux", degree: 2 })
        );
        assert_eq!(
            loc.enumerate_loci(3, 1, Family::J),
            Err(Error::FamilyDegree { family: "J", degree: 3 })
        );
        assert_eq!(loc.enumerate_loci(4, 1, Family::LinA), Err(Error::UnsupportedDegree(4)));
        assert_eq!(loc.deg2_lin_a(3), Err(Error::GenusOutOfRange { genus: 3, gmax: 2 }));
        assert_eq!("bogus".parse::<Family>(), Err(Error::UnknownFamily("bogus".into())));
        assert_eq!("linB".parse::<Family>(), Ok(Family::LinB));
    }

    #[test]
    fn degree_three_linearization_a_is_i3() {
        let loc = Localization::new(3);
        let t = loc.enumerate_loci(3, 1, Family::LinA).unwrap();
        assert_eq!(t[0].coefficient, q(2, 3));
    }
}
