//! Slope multisets, isocrystal profiles, exterior powers, slope windows, and
//! the slope numbers `m^{ij}`.
//!
//! A crystalline cohomology group in degree `n`, viewed as an isocrystal, is
//! determined up to isogeny by its multiset of Frobenius slopes — rationals
//! in `[0, n]`. The functions here manipulate those multisets exactly:
//! exterior powers (cohomology of abelian varieties), the partition of a
//! degree-`n` multiset into unit windows, and the slope numbers `m^{ij}`
//! that measure how much of each window sits at fractional slope.

use crate::error::{Error, Result};
use num::rational::Ratio;
use num::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exact rational number used throughout the crate.
pub type Rational = Ratio<i64>;

/// Total multiplicity above which exterior powers refuse to run (the result
/// size is a binomial coefficient, so this bound keeps every count within
/// `u64`).
const EXTERIOR_RANK_LIMIT: u64 = 40;

/// A finite multiset of nonnegative rational slopes, kept in canonical form:
/// strictly increasing slopes, each with multiplicity at least 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SlopeMultiset {
    entries: Vec<(Rational, u64)>,
}

impl SlopeMultiset {
    /// Build a multiset from (slope, multiplicity) pairs in any order.
    /// Equal slopes are merged; zero multiplicities and negative slopes are
    /// rejected.
    pub fn from_pairs(pairs: &[(Rational, u64)]) -> Result<SlopeMultiset> {
        let mut sorted: Vec<(Rational, u64)> = Vec::with_capacity(pairs.len());
        for &(s, m) in pairs {
            if m == 0 {
                return Err(Error::InvalidArgument(format!(
                    "slope {s} has multiplicity 0; every entry needs multiplicity >= 1"
                )));
            }
            if s < Rational::zero() {
                return Err(Error::InvalidArgument(format!("negative slope {s}")));
            }
            sorted.push((s, m));
        }
        sorted.sort();
        let mut entries: Vec<(Rational, u64)> = Vec::with_capacity(sorted.len());
        for (s, m) in sorted {
            if let Some(last) = entries.last_mut() {
                if last.0 == s {
                    last.1 += m;
                    continue;
                }
            }
            entries.push((s, m));
        }
        Ok(SlopeMultiset { entries })
    }

    /// Build from `(numerator, denominator, multiplicity)` triples.
    pub fn from_triples(triples: &[(i64, i64, u64)]) -> Result<SlopeMultiset> {
        let mut pairs = Vec::with_capacity(triples.len());
        for &(n, d, m) in triples {
            if d == 0 {
                return Err(Error::InvalidArgument(format!(
                    "slope {n}/0 has a zero denominator"
                )));
            }
            pairs.push((Ratio::new(n, d), m));
        }
        SlopeMultiset::from_pairs(&pairs)
    }

    /// Canonical `(numerator, denominator, multiplicity)` triples, reduced.
    pub fn to_triples(&self) -> Vec<(i64, i64, u64)> {
        self.entries
            .iter()
            .map(|&(s, m)| (*s.numer(), *s.denom(), m))
            .collect()
    }

    /// The canonical entry list: strictly increasing slopes with their
    /// multiplicities.
    pub fn entries(&self) -> &[(Rational, u64)] {
        &self.entries
    }

    /// Total multiplicity.
    pub fn rank(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// Multiplicity of one slope (0 if absent).
    pub fn multiplicity(&self, slope: &Rational) -> u64 {
        self.entries
            .iter()
            .find(|&&(s, _)| s == *slope)
            .map(|&(_, m)| m)
            .unwrap_or(0)
    }

    /// The multiset expanded to a sorted list with one entry per unit of
    /// multiplicity.
    pub fn expand(&self) -> Vec<Rational> {
        let mut out = Vec::with_capacity(self.rank() as usize);
        for &(s, m) in &self.entries {
            for _ in 0..m {
                out.push(s);
            }
        }
        out
    }

    /// Sum of slope * multiplicity over the whole multiset.
    pub fn total(&self) -> Rational {
        self.entries
            .iter()
            .map(|&(s, m)| s * Rational::from_integer(m as i64))
            .sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl fmt::Debug for SlopeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, &(s, m)) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}^{m}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for SlopeMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// The slope data of one cohomology degree: a multiset of slopes confined to
/// `[0, degree]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsocrystalProfile {
    degree: u32,
    slopes: SlopeMultiset,
}

impl IsocrystalProfile {
    pub fn new(degree: u32, slopes: SlopeMultiset) -> Result<IsocrystalProfile> {
        let top = Rational::from_integer(degree as i64);
        for &(s, _) in slopes.entries() {
            if s > top {
                return Err(Error::InvalidArgument(format!(
                    "slope {s} exceeds the cohomological degree {degree}"
                )));
            }
        }
        Ok(IsocrystalProfile { degree, slopes })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn slopes(&self) -> &SlopeMultiset {
        &self.slopes
    }

    pub fn rank(&self) -> u64 {
        self.slopes.rank()
    }
}

/// Multiset of all sums of `n`-element sub-multisets: the slopes of the
/// `n`-th exterior power of an isocrystal with the given slopes. Requires
/// `1 <= n <= rank`.
///
/// Computed by dynamic programming on (number picked, slope sum): each slope
/// block of multiplicity `m` contributes `C(m, take)` ways to pick `take`
/// copies, so no explicit enumeration of combinations is needed.
pub fn exterior_power(ms: &SlopeMultiset, n: u32) -> Result<SlopeMultiset> {
    let rank = ms.rank();
    if n == 0 {
        return Err(Error::InvalidArgument(
            "exterior power requires n >= 1".to_string(),
        ));
    }
    if (n as u64) > rank {
        return Err(Error::InvalidArgument(format!(
            "exterior power degree {n} exceeds the rank {rank}"
        )));
    }
    if rank > EXTERIOR_RANK_LIMIT {
        return Err(Error::Resource(format!(
            "exterior power limited to rank <= {EXTERIOR_RANK_LIMIT}, got {rank}"
        )));
    }
    // state: (picked count) -> (slope sum -> number of ways)
    let mut state: Vec<BTreeMap<Rational, u64>> = vec![BTreeMap::new(); n as usize + 1];
    state[0].insert(Rational::zero(), 1);
    for &(s, m) in ms.entries() {
        // iterate picked counts downward so each block is used once
        for picked in (0..n as usize).rev() {
            let sums: Vec<(Rational, u64)> =
                state[picked].iter().map(|(&k, &v)| (k, v)).collect();
            for (sum, ways) in sums {
                let max_take = m.min(n as u64 - picked as u64);
                let mut choose: u64 = 1; // C(m, take), built incrementally
                for take in 1..=max_take {
                    choose = choose * (m - take + 1) / take;
                    let new_sum = sum + s * Rational::from_integer(take as i64);
                    *state[picked + take as usize].entry(new_sum).or_insert(0) +=
                        ways * choose;
                }
            }
        }
    }
    let pairs: Vec<(Rational, u64)> = state[n as usize]
        .iter()
        .map(|(&sum, &ways)| (sum, ways))
        .collect();
    SlopeMultiset::from_pairs(&pairs)
}

/// The slopes of `profile` lying in the half-open window `[i, i+1)`, shifted
/// down by `i` so the result lives in `[0, 1)`. Valid for `0 <= i <= degree`.
pub fn slope_window(profile: &IsocrystalProfile, i: u32) -> Result<SlopeMultiset> {
    if i > profile.degree() {
        return Err(Error::InvalidArgument(format!(
            "window index {i} exceeds the degree {}",
            profile.degree()
        )));
    }
    let lo = Rational::from_integer(i as i64);
    let hi = lo + Rational::one();
    let pairs: Vec<(Rational, u64)> = profile
        .slopes()
        .entries()
        .iter()
        .filter(|&&(s, _)| s >= lo && s < hi)
        .map(|&(s, m)| (s - lo, m))
        .collect();
    SlopeMultiset::from_pairs(&pairs)
}

/// The slope number `m^{ij}` of a degree-`i+j` profile:
///
/// ```text
/// m^{ij} = sum_{0 <= a < 1} (1 - a) * mult_a(W_i)  +  sum_{0 <= a < 1} a * mult_a(W_{i-1})
/// ```
///
/// where `W_i` is [`slope_window`] at index `i`. In particular `m^{0j}` is
/// the weighted count of slopes of the profile lying in `[0, 1)`, and the
/// `m^{ij}` over `i + j = n` always sum to the rank.
pub fn m_ij(profile: &IsocrystalProfile, i: u32, j: u32) -> Result<Rational> {
    if i + j != profile.degree() {
        return Err(Error::InvalidArgument(format!(
            "m^{{{i},{j}}} needs i + j = {} (the profile degree), got {}",
            profile.degree(),
            i + j
        )));
    }
    let mut total = Rational::zero();
    let window_i = slope_window(profile, i)?;
    for &(a, m) in window_i.entries() {
        total += (Rational::one() - a) * Rational::from_integer(m as i64);
    }
    if i >= 1 {
        let window_prev = slope_window(profile, i - 1)?;
        for &(a, m) in window_prev.entries() {
            total += a * Rational::from_integer(m as i64);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(triples: &[(i64, i64, u64)]) -> SlopeMultiset {
        SlopeMultiset::from_triples(triples).unwrap()
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let a = SlopeMultiset::from_pairs(&[
            (Ratio::new(1, 2), 2),
            (Ratio::new(0, 1), 1),
            (Ratio::new(2, 4), 3),
        ])
        .unwrap();
        assert_eq!(a, ms(&[(0, 1, 1), (1, 2, 5)]));
        assert_eq!(a.rank(), 6);
        assert_eq!(a.multiplicity(&Ratio::new(1, 2)), 5);
        assert_eq!(a.multiplicity(&Ratio::new(1, 3)), 0);
    }

    #[test]
    fn constructor_rejections() {
        assert!(SlopeMultiset::from_pairs(&[(Ratio::new(1, 2), 0)]).is_err());
        assert!(SlopeMultiset::from_pairs(&[(Ratio::new(-1, 2), 1)]).is_err());
        assert!(SlopeMultiset::from_triples(&[(1, 0, 1)]).is_err());
        assert!(IsocrystalProfile::new(1, ms(&[(3, 2, 1)])).is_err());
    }

    #[test]
    fn exterior_power_frozen() {
        let e = exterior_power(&ms(&[(0, 1, 3), (1, 1, 3)]), 2).unwrap();
        assert_eq!(e, ms(&[(0, 1, 3), (1, 1, 9), (2, 1, 3)]));
        let e = exterior_power(&ms(&[(0, 1, 1), (1, 2, 4), (1, 1, 1)]), 2).unwrap();
        assert_eq!(e, ms(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)]));
        let m = ms(&[(1, 3, 3), (2, 3, 3)]);
        assert_eq!(exterior_power(&m, 1).unwrap(), m);
    }

    #[test]
    fn exterior_power_argument_checks() {
        let m = ms(&[(0, 1, 2)]);
        assert!(matches!(
            exterior_power(&m, 0),
            Err(Error::InvalidArgument(_))
        ));
        assert!(matches!(
            exterior_power(&m, 3),
            Err(Error::InvalidArgument(_))
        ));
        let big = ms(&[(0, 1, 41)]);
        assert!(matches!(exterior_power(&big, 2), Err(Error::Resource(_))));
    }

    #[test]
    fn window_frozen_examples() {
        let p = IsocrystalProfile::new(2, ms(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)])).unwrap();
        assert_eq!(slope_window(&p, 0).unwrap(), ms(&[(1, 2, 4)]));
        assert_eq!(slope_window(&p, 1).unwrap(), ms(&[(0, 1, 7), (1, 2, 4)]));
        assert_eq!(slope_window(&p, 2).unwrap().rank(), 0);
        let ss = IsocrystalProfile::new(2, ms(&[(1, 1, 15)])).unwrap();
        assert!(slope_window(&ss, 0).unwrap().is_empty());
        assert!(matches!(
            slope_window(&ss, 3),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn m_ij_frozen_examples() {
        let ss = IsocrystalProfile::new(2, ms(&[(1, 1, 15)])).unwrap();
        assert_eq!(m_ij(&ss, 0, 2).unwrap(), Rational::zero());
        assert_eq!(m_ij(&ss, 1, 1).unwrap(), Rational::from_integer(15));
        assert_eq!(m_ij(&ss, 2, 0).unwrap(), Rational::zero());
        assert!(matches!(m_ij(&ss, 1, 2), Err(Error::InvalidArgument(_))));
        let empty =
            IsocrystalProfile::new(2, SlopeMultiset::from_pairs(&[]).unwrap()).unwrap();
        assert_eq!(m_ij(&empty, 0, 2).unwrap(), Rational::zero());
    }

    #[test]
    fn m_0j_counts_small_slopes() {
        // finite-height K3: slopes {1-1/h (x h), 1 (x 22-2h), 1+1/h (x h)}
        for h in 1i64..=10 {
            let profile = IsocrystalProfile::new(
                2,
                ms(&[
                    (h - 1, h, h as u64),
                    (1, 1, 22 - 2 * h as u64),
                    (h + 1, h, h as u64),
                ]),
            )
            .unwrap();
            assert_eq!(m_ij(&profile, 0, 2).unwrap(), Rational::one());
        }
    }
}
