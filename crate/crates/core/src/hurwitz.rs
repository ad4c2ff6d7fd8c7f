//! Hurwitz numbers by direct enumeration of monodromy tuples.
//!
//! A degree `d` cover of the sphere branched over `n` points is encoded by a
//! tuple `(s_1, ..., s_n)` of permutations in `S_d` with `s_1 * ... * s_n = 1`.
//! The cover is connected iff the tuple generates a transitive subgroup.
//! Relabelling sheets acts by simultaneous conjugation, so the weighted count
//! of covers is the number of tuples divided by `d!`.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigInt;
use rayon::prelude::*;

use crate::combinatorics::factorial;
use crate::error::{Error, Result};
use crate::series::Rational;

/// Default cap on the number of enumerated tuples.
pub const DEFAULT_MAX_TUPLES: u128 = 1_000_000_000;

/// A permutation of `{0, .., d-1}`, stored by images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(d: usize) -> Self {
        Self { images: (0..d).collect() }
    }

    /// Zero-based images; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &i in &images {
            if i >= d || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds a permutation of `{1..d}` from disjoint cycles written one-based,
    /// e.g. `&[&[1, 2, 3]]` for the three-cycle `(1 2 3)`.
    pub fn from_cycles(d: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..d).collect();
        let mut used = vec![false; d];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > d || used[a - 1] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cycle:?} in S_{d}")));
                }
                used[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` followed by `other`: `i -> other(self(i))`.
    pub fn then(&self, other: &Self) -> Self {
        Self { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn cycle_type(&self) -> CycleType {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut parts = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, one-based, fixed points omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.images.len();
        let mut seen = vec![false; d];
        let mut wrote = false;
        for start in 0..d {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.images[i];
            }
            write!(f, "({})", cycle.iter().join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// A partition of `d`, parts in weakly decreasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    /// Sorts the parts; rejects empty input and zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.contains(&0) {
            return Err(Error::InvalidCycleType(format!("{parts:?}")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// `(d)`, full ramification.
    pub fn full(d: usize) -> Self {
        Self { parts: vec![d] }
    }

    /// `(2, 1, ..., 1)`, a transposition in `S_d`.
    pub fn transposition(d: usize) -> Self {
        assert!(d >= 2, "no transpositions in S_{d}");
        let mut parts = vec![2];
        parts.resize(d - 1, 1);
        Self { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl FromStr for CycleType {
    type Err = Error;

    /// Comma-separated parts, e.g. `"2,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::InvalidCycleType(format!("`{s}`: {e}")))?;
        Self::new(parts)
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.parts.iter().join(","))
    }
}

/// Degree together with the ramification profile over each branch point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchProfile {
    degree: usize,
    profiles: Vec<CycleType>,
}

impl BranchProfile {
    pub fn new(degree: usize, profiles: Vec<CycleType>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        if let Some(bad) = profiles.iter().find(|t| t.degree() != degree) {
            return Err(Error::InvalidCycleType(format!("{bad} does not partition {degree}")));
        }
        Ok(Self { degree, profiles })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn profiles(&self) -> &[CycleType] {
        &self.profiles
    }
}

/// Every element of `S_d` with cycle type `t`, in lexicographic order of images.
pub fn permutations_with_type(d: usize, t: &CycleType) -> Vec<Permutation> {
    if t.degree() != d {
        return Vec::new();
    }
    (0..d)
        .permutations(d)
        .map(|images| Permutation { images })
        .filter(|p| &p.cycle_type() == t)
        .collect()
}

/// Whether the group generated by `tuple` acts transitively on `{0..d-1}`.
pub fn is_transitive(tuple: &[Permutation], d: usize) -> bool {
    if d <= 1 {
        return true;
    }
    let mut reached = vec![false; d];
    reached[0] = true;
    let mut stack = vec![0];
    let mut count = 1;
    while let Some(i) = stack.pop() {
        for p in tuple {
            let j = p.apply(i);
            if !reached[j] {
                reached[j] = true;
                count += 1;
                stack.push(j);
            }
        }
    }
    count == d
}

/// Weighted number of covers with the given branching, using the default
/// enumeration bound (overridable through `ADMCALC_MAX_TUPLES`).
pub fn hurwitz_count(profile: &BranchProfile, connected: bool) -> Result<Rational> {
    hurwitz_count_bounded(profile, connected, max_tuples_from_env())
}

/// The enumeration bound: `ADMCALC_MAX_TUPLES` when set and parseable,
/// otherwise [`DEFAULT_MAX_TUPLES`].
pub fn max_tuples_from_env() -> u128 {
    std::env::var("ADMCALC_MAX_TUPLES")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_TUPLES)
}

/// Weighted number of covers, refusing enumerations of more than
/// `max_tuples` tuples.
pub fn hurwitz_count_bounded(
    profile: &BranchProfile,
    connected: bool,
    max_tuples: u128,
) -> Result<Rational> {
    let raw = count_tuples(profile, connected, max_tuples)?;
    Ok(Rational::new(BigInt::from(raw), factorial(profile.degree)))
}

/// Number of tuples with identity product (and transitive action when
/// `connected`), before dividing by `d!`.
pub fn count_tuples(profile: &BranchProfile, connected: bool, max_tuples: u128) -> Result<u64> {
    let d = profile.degree;
    let n = profile.profiles.len();
    if n == 0 {
        let ok = !connected || d == 1;
        return Ok(u64::from(ok));
    }
    let classes: Vec<Vec<Permutation>> = profile.profiles[..n - 1]
        .iter()
        .map(|t| permutations_with_type(d, t))
        .collect();
    let required = classes
        .iter()
        .try_fold(1u128, |acc, c| acc.checked_mul(c.len() as u128))
        .unwrap_or(u128::MAX);
    if required > max_tuples {
        return Err(Error::EnumerationBound { required, bound: max_tuples });
    }
    let search = Search { d, classes: &classes, last: &profile.profiles[n - 1], connected };
    if classes.is_empty() {
        return Ok(search.finish(&Permutation::identity(d), &mut Vec::new()));
    }
    // Split the first slot across workers; partial counts are exact integers.
    let total = classes[0]
        .par_iter()
        .map(|first| {
            let mut chosen = vec![first.clone()];
            search.descend(1, first, &mut chosen)
        })
        .sum();
    Ok(total)
}

struct Search<'a> {
    d: usize,
    classes: &'a [Vec<Permutation>],
    last: &'a CycleType,
    connected: bool,
}

impl Search<'_> {
    fn descend(&self, slot: usize, product: &Permutation, chosen: &mut Vec<Permutation>) -> u64 {
        if slot == self.classes.len() {
            return self.finish(product, chosen);
        }
        let mut total = 0;
        for p in &self.classes[slot] {
            let next = product.then(p);
            chosen.push(p.clone());
            total += self.descend(slot + 1, &next, chosen);
            chosen.pop();
        }
        total
    }

    // The final slot is forced to undo the running product.
    fn finish(&self, product: &Permutation, chosen: &mut Vec<Permutation>) -> u64 {
        let closing = product.inverse();
        if &closing.cycle_type() != self.last {
            return 0;
        }
        if self.connected {
            chosen.push(closing);
            let ok = is_transitive(chosen, self.d);
            chosen.pop();
            if !ok {
                return 0;
            }
        }
        1
    }
}

fn p3_profile(full_points: usize, simple_points: usize) -> BranchProfile {
    let mut profiles = vec![CycleType::full(3); full_points];
    profiles.extend(std::iter::repeat_n(CycleType::transposition(3), simple_points));
    BranchProfile { degree: 3, profiles }
}

/// Connected degree 3 covers with one triple point and `2g + 2` simple
/// branch points, by enumeration.
pub fn p3_full(g: usize) -> Result<Rational> {
    hurwitz_count(&p3_profile(1, 2 * g + 2), true)
}

/// Connected degree 3 covers with `2g + 4` simple branch points, by enumeration.
pub fn p3_trans(g: usize) -> Result<Rational> {
    hurwitz_count(&p3_profile(0, 2 * g + 4), true)
}

/// Connected double covers with `2g + 2` branch points, by enumeration.
pub fn p2(g: usize) -> Result<Rational> {
    let profile = BranchProfile { degree: 2, profiles: vec![CycleType::full(2); 2 * g + 2] };
    hurwitz_count(&profile, true)
}
