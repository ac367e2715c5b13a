//! Hodge–Witt numbers and the domino table `T^{ij}`.
//!
//! For a smooth proper variety with torsion-free crystalline cohomology and
//! degenerating Frölicher spectral sequence, the Hodge–Witt numbers
//!
//! ```text
//! hW^{ij} = m^{ij} + T^{ij} - 2*T^{i-1,j+1} + T^{i-2,j+2}
//! ```
//!
//! equal the Hodge numbers `h^{ij}`. The slope numbers `m^{ij}` come from
//! Newton data ([`crate::slopes::m_ij`]), the domino numbers `T^{ij}` are
//! nonnegative integers vanishing for `i >= dim-1` or `j <= 1`, and that
//! triangular structure lets [`solve_t`] recover the whole `T`-table row by
//! row, cross-checking the mandated zeros along the way. Two classical
//! constraints are exposed as checks: the row alternating-sum identity
//! ([`crew_check`]) and the pointwise comparison `hW <= h` ([`ekedahl_check`]).

use crate::error::{Error, Result};
use crate::slopes::{m_ij, IsocrystalProfile, Rational, SlopeMultiset};
use num::rational::Ratio;
use num::{One, Zero};
use std::collections::BTreeMap;

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Hodge numbers `h^{ij}` of a variety of dimension `dim`; positions outside
/// `[0, dim]^2` are implicitly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodgeDiamond {
    dim: u32,
    map: BTreeMap<(u32, u32), u64>,
}

impl HodgeDiamond {
    pub fn new(dim: u32, entries: &[((u32, u32), u64)]) -> Result<HodgeDiamond> {
        let mut map = BTreeMap::new();
        for &((i, j), h) in entries {
            if i > dim || j > dim {
                return Err(Error::InvalidArgument(format!(
                    "Hodge number h^{{{i},{j}}} outside the diamond of dimension {dim}"
                )));
            }
            if h > 0 {
                *map.entry((i, j)).or_insert(0) += h;
            }
        }
        Ok(HodgeDiamond { dim, map })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    /// `h^{ij}`, zero outside the diamond or where unset.
    pub fn get(&self, i: u32, j: u32) -> u64 {
        *self.map.get(&(i, j)).unwrap_or(&0)
    }
}

/// Hodge numbers of a g-dimensional abelian variety:
/// `h^{ij} = C(g,i) * C(g,j)`.
pub fn hodge_numbers_abelian(g: u32) -> HodgeDiamond {
    let mut entries = Vec::new();
    for i in 0..=g {
        for j in 0..=g {
            entries.push(((i, j), binomial(g as u64, i as u64) * binomial(g as u64, j as u64)));
        }
    }
    HodgeDiamond::new(g, &entries).expect("indices are within the diamond by construction")
}

/// The domino numbers `T^{ij}`: nonnegative integers, zero for `i >= dim-1`
/// or `j <= 1` and outside `[0, dim]^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TTable {
    dim: u32,
    map: BTreeMap<(u32, u32), u64>,
}

impl TTable {
    pub fn zeros(dim: u32) -> TTable {
        TTable { dim, map: BTreeMap::new() }
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, i: u32, j: u32) -> u64 {
        *self.map.get(&(i, j)).unwrap_or(&0)
    }

    /// Signed-index accessor: any out-of-range position reads as zero.
    fn get_signed(&self, i: i64, j: i64) -> u64 {
        if i < 0 || j < 0 || i > self.dim as i64 || j > self.dim as i64 {
            0
        } else {
            self.get(i as u32, j as u32)
        }
    }

    fn set(&mut self, i: u32, j: u32, v: u64) {
        if v > 0 {
            self.map.insert((i, j), v);
        }
    }
}

/// Slope numbers `m^{ij}` tabulated from a full profile list (one isocrystal
/// profile per cohomological degree `0..=2*dim`).
#[derive(Clone, Debug)]
pub struct MTable {
    dim: u32,
    map: BTreeMap<(u32, u32), Rational>,
}

impl MTable {
    /// `profiles[n]` must be the degree-`n` profile; the list covers degrees
    /// `0..=2*dim`, so its length must be odd.
    pub fn from_profiles(profiles: &[IsocrystalProfile]) -> Result<MTable> {
        if profiles.is_empty() || profiles.len() % 2 == 0 {
            return Err(Error::InvalidArgument(format!(
                "need profiles for degrees 0..=2*dim (an odd-length list), got {}",
                profiles.len()
            )));
        }
        for (n, p) in profiles.iter().enumerate() {
            if p.degree() != n as u32 {
                return Err(Error::InvalidArgument(format!(
                    "profile at index {n} has degree {}, expected {n}",
                    p.degree()
                )));
            }
        }
        let dim = (profiles.len() as u32 - 1) / 2;
        let mut map = BTreeMap::new();
        for i in 0..=dim {
            for j in 0..=dim {
                let v = m_ij(&profiles[(i + j) as usize], i, j)?;
                if !v.is_zero() {
                    map.insert((i, j), v);
                }
            }
        }
        Ok(MTable { dim, map })
    }

    /// Direct construction from explicit entries (for tabulated data).
    pub fn from_entries(dim: u32, entries: &[((u32, u32), Rational)]) -> Result<MTable> {
        let mut map = BTreeMap::new();
        for &((i, j), v) in entries {
            if i > dim || j > dim {
                return Err(Error::InvalidArgument(format!(
                    "m^{{{i},{j}}} outside [0,{dim}]^2"
                )));
            }
            if v < Rational::zero() {
                return Err(Error::InvalidArgument(format!("m^{{{i},{j}}} = {v} is negative")));
            }
            if !v.is_zero() {
                map.insert((i, j), v);
            }
        }
        Ok(MTable { dim, map })
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, i: u32, j: u32) -> Rational {
        *self.map.get(&(i, j)).unwrap_or(&Rational::zero())
    }
}

/// Hodge–Witt numbers `hW^{ij}` (exact rationals).
#[derive(Clone, Debug)]
pub struct HWTable {
    dim: u32,
    map: BTreeMap<(u32, u32), Rational>,
}

impl HWTable {
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn get(&self, i: u32, j: u32) -> Rational {
        *self.map.get(&(i, j)).unwrap_or(&Rational::zero())
    }
}

/// One Hodge–Witt number: `m^{ij} + T^{ij} - 2 T^{i-1,j+1} + T^{i-2,j+2}`,
/// where `T` reads as zero outside its table.
pub fn hodge_witt_number(m: &MTable, t: &TTable, i: u32, j: u32) -> Rational {
    let ii = i as i64;
    let jj = j as i64;
    m.get(i, j)
        + Rational::from_integer(t.get_signed(ii, jj) as i64)
        - Rational::from_integer(2 * t.get_signed(ii - 1, jj + 1) as i64)
        + Rational::from_integer(t.get_signed(ii - 2, jj + 2) as i64)
}

/// The full Hodge–Witt table over `[0, dim]^2`.
pub fn hodge_witt_numbers(m: &MTable, t: &TTable) -> HWTable {
    let dim = m.dim();
    let mut map = BTreeMap::new();
    for i in 0..=dim {
        for j in 0..=dim {
            let v = hodge_witt_number(m, t, i, j);
            if !v.is_zero() {
                map.insert((i, j), v);
            }
        }
    }
    HWTable { dim, map }
}

/// Row alternating-sum identity: for the fixed row `i`,
/// `sum_j (-1)^j hW^{ij} == sum_j (-1)^j h^{ij}`.
pub fn crew_check(hw: &HWTable, h: &HodgeDiamond, i: u32) -> bool {
    let dim = h.dim().max(hw.dim());
    let mut lhs = Rational::zero();
    let mut rhs = Rational::zero();
    for j in 0..=dim {
        let sign = if j % 2 == 0 { Rational::one() } else { -Rational::one() };
        lhs += sign * hw.get(i, j);
        rhs += sign * Rational::from_integer(h.get(i, j) as i64);
    }
    lhs == rhs
}

/// Pointwise comparison `hW^{ij} <= h^{ij}` over the whole table.
pub fn ekedahl_check(hw: &HWTable, h: &HodgeDiamond) -> bool {
    let dim = h.dim().max(hw.dim());
    for i in 0..=dim {
        for j in 0..=dim {
            if hw.get(i, j) > Rational::from_integer(h.get(i, j) as i64) {
                return false;
            }
        }
    }
    true
}

/// Solve for the domino table `T^{ij}` from a Hodge diamond and the full
/// list of per-degree slope profiles, assuming the Hodge–Witt numbers equal
/// the Hodge numbers (torsion-free crystalline cohomology with degenerating
/// Frölicher spectral sequence).
///
/// Preconditions checked here: `profiles` covers degrees `0..=2*dim` and in
/// every degree the profile rank equals the total Hodge number of that
/// degree. The solved values must be nonnegative integers, zero at every
/// mandated position (`i >= dim-1` or `j <= 1`); any violation is reported
/// as an inconsistency naming the position.
pub fn solve_t(h: &HodgeDiamond, profiles: &[IsocrystalProfile]) -> Result<TTable> {
    let dim = h.dim();
    if profiles.len() != 2 * dim as usize + 1 {
        return Err(Error::Precondition(format!(
            "need {} profiles for degrees 0..={}, got {}",
            2 * dim + 1,
            2 * dim,
            profiles.len()
        )));
    }
    let m = MTable::from_profiles(profiles)?;
    // rank precondition: Hodge numbers on each antidiagonal sum to the rank
    for n in 0..=2 * dim {
        let hodge_total: u64 = (0..=n.min(dim))
            .filter(|&i| n - i <= dim)
            .map(|i| h.get(i, n - i))
            .sum();
        let rank = profiles[n as usize].rank();
        if hodge_total != rank {
            return Err(Error::Precondition(format!(
                "degree {n}: Hodge numbers sum to {hodge_total} but the profile has rank \
                 {rank}"
            )));
        }
    }
    let mut t = TTable::zeros(dim);
    for i in 0..=dim {
        for j in 0..=dim {
            let cand = Rational::from_integer(h.get(i, j) as i64) - m.get(i, j)
                + Rational::from_integer(2 * t.get_signed(i as i64 - 1, j as i64 + 1) as i64)
                - Rational::from_integer(t.get_signed(i as i64 - 2, j as i64 + 2) as i64);
            let mandated_zero = i as i64 >= dim as i64 - 1 || j <= 1;
            if mandated_zero {
                if !cand.is_zero() {
                    return Err(Error::Inconsistency(format!(
                        "T^{{{i},{j}}} must vanish (i >= dim-1 or j <= 1) but solves to \
                         {cand}"
                    )));
                }
            } else {
                if cand < Rational::zero() {
                    return Err(Error::Inconsistency(format!(
                        "T^{{{i},{j}}} solves to the negative value {cand}"
                    )));
                }
                if !cand.is_integer() {
                    return Err(Error::Inconsistency(format!(
                        "T^{{{i},{j}}} solves to the non-integer {cand}"
                    )));
                }
                t.set(i, j, cand.to_integer() as u64);
            }
        }
    }
    Ok(t)
}

/// The surface shortcut for `T^{02}`:
/// `T^{02} = (h^{02} - h^{01}) - (m^{02} - m^{01})`.
/// The result must be a nonnegative integer; anything else reports an
/// inconsistency in the input data.
pub fn crew_surface_t02(
    h01: u64,
    h02: u64,
    m01: Rational,
    m02: Rational,
) -> Result<Rational> {
    let t = Rational::from_integer(h02 as i64) - Rational::from_integer(h01 as i64)
        - (m02 - m01);
    if t < Rational::zero() {
        return Err(Error::Inconsistency(format!(
            "surface T^{{02}} = (h02 - h01) - (m02 - m01) = {t} is negative"
        )));
    }
    if !t.is_integer() {
        return Err(Error::Inconsistency(format!(
            "surface T^{{02}} = {t} is not an integer"
        )));
    }
    Ok(t)
}

/// All admissible symmetric degree-1 slope multisets of an abelian variety
/// of dimension `g`: slopes in `[0,1]`, total multiplicity `2g`, integral
/// breakpoints, and multiplicities symmetric under `s -> 1-s`. Enumerated as
/// convex lattice paths from `(0,0)` to `(2g, g)` with slopes in `[0,1]`,
/// then filtered for symmetry. Deterministically ordered.
pub fn admissible_h1_multisets(g: u32) -> Vec<SlopeMultiset> {
    let width = 2 * g as i64;
    let height = g as i64;
    let mut results: Vec<SlopeMultiset> = Vec::new();
    // segments: (slope, dx) with strictly increasing slopes
    fn rec(
        x: i64,
        y: i64,
        last_slope: Option<Rational>,
        width: i64,
        height: i64,
        segments: &mut Vec<(Rational, u64)>,
        results: &mut Vec<SlopeMultiset>,
    ) {
        if x == width {
            if y == height {
                let ms = SlopeMultiset::from_pairs(segments)
                    .expect("segments have positive multiplicity and nonnegative slopes");
                if is_symmetric(&ms) {
                    results.push(ms);
                }
            }
            return;
        }
        for nx in (x + 1)..=width {
            for ny in y..=height {
                let dx = nx - x;
                let dy = ny - y;
                let slope = Ratio::new(dy, dx);
                if slope > Rational::one() {
                    continue;
                }
                if let Some(prev) = last_slope {
                    if slope <= prev {
                        continue;
                    }
                }
                segments.push((slope, dx as u64));
                rec(nx, ny, Some(slope), width, height, segments, results);
                segments.pop();
            }
        }
    }
    let mut segments = Vec::new();
    rec(0, 0, None, width, height, &mut segments, &mut results);
    results.sort_by_key(|m| m.to_triples());
    results
}

fn is_symmetric(ms: &SlopeMultiset) -> bool {
    ms.entries().iter().all(|&(s, m)| {
        let mirror = Rational::one() - s;
        ms.multiplicity(&mirror) == m
    })
}
