//! Built-in tables and self-check suites.
//!
//! The checks re-derive frozen reference values through the public API and
//! report one named PASS/FAIL line each; a failure is an internal
//! inconsistency, not a usage error. The suites exist so a packaged binary
//! can prove its arithmetic on the machine it runs on.

use crate::classify::{abelian_profiles, classify, EnriquesType, FinitePart, VarietyDescriptor};
use crate::dieudonne::{dmodule_hom, superspecial_h2, DieudonneModuleFp, FiniteField, GroupShape};
use crate::error::{Error, Result};
use crate::hodge_witt::{
    admissible_h1_multisets, crew_check, ekedahl_check, hodge_numbers_abelian,
    hodge_witt_numbers, solve_t, MTable,
};
use crate::polygon::{hodge_newton_polygon, lies_below, polygon_from_slopes, NewtonPolygon};
use crate::raynaud::{
    cokernel_one_minus_f, kernel_one_minus_f, kernel_one_minus_f_zero_probe, DominoPart,
    TruncatedDomino,
};
use crate::slopes::{exterior_power, m_ij, IsocrystalProfile, Rational, SlopeMultiset};
use num::Zero;

/// One row of the abelian-threefold table: isogeny type of H^1, slope
/// number m^{02}, and the solved T^{02}.
#[derive(Clone, Debug)]
pub struct Abelian3Row {
    pub label: &'static str,
    pub h1: SlopeMultiset,
    pub m02: Rational,
    pub t02: u64,
}

/// The five isogeny types of abelian threefolds with their computed
/// invariants, in the canonical order ordinary → supersingular.
pub fn abelian3_table() -> Result<Vec<Abelian3Row>> {
    let h = hodge_numbers_abelian(3);
    let half = Rational::new(1, 2);
    let mut rows = Vec::new();
    for h1 in admissible_h1_multisets(3) {
        let profiles = abelian_profiles(3, &h1)?;
        let m02 = m_ij(&profiles[2], 0, 2)?;
        let t = solve_t(&h, &profiles)?;
        let label = match (h1.multiplicity(&Rational::zero()), h1.multiplicity(&half)) {
            (3, _) => "ordinary",
            (2, _) => "almost ordinary",
            (1, _) => "almost supersingular",
            (0, 6) => "supersingular",
            _ => "1/3-type",
        };
        rows.push(Abelian3Row { label, h1, m02, t02: t.get(0, 2) });
    }
    rows.sort_by_key(|r| {
        (std::cmp::Reverse(r.h1.multiplicity(&Rational::zero())), r.t02)
    });
    Ok(rows)
}

/// Outcome of one named check.
#[derive(Debug)]
pub struct CheckResult {
    pub name: String,
    pub outcome: Result<()>,
}

/// Knobs for the Raynaud suite; the other suites ignore them.
#[derive(Clone, Copy, Debug)]
pub struct CheckOptions {
    /// Base field `(p, m)` the domino matrices are written over.
    pub field: (u64, u32),
    /// Truncation level for the domino computations.
    pub truncation: u64,
}

impl Default for CheckOptions {
    fn default() -> CheckOptions {
        CheckOptions { field: (2, 1), truncation: 5 }
    }
}

/// The individual suite names understood by [`run_checks`], besides "all".
pub fn suite_names() -> &'static [&'static str] {
    &["slopes", "polygon", "hodge-witt", "dieudonne", "raynaud", "classify"]
}

/// Run one named check suite (or "all"); an unknown name is a usage error,
/// a failed check is reported inside the returned list.
pub fn run_checks(suite: &str, opts: &CheckOptions) -> Result<Vec<CheckResult>> {
    match suite {
        "all" => {
            let mut out = Vec::new();
            for name in suite_names() {
                out.extend(run_checks(name, opts)?);
            }
            Ok(out)
        }
        "slopes" => Ok(checks_slopes()),
        "polygon" => Ok(checks_polygon()),
        "hodge-witt" => Ok(checks_hodge_witt()),
        "dieudonne" => Ok(checks_dieudonne()),
        "raynaud" => Ok(checks_raynaud(opts)),
        "classify" => Ok(checks_classify()),
        other => Err(Error::InvalidArgument(format!(
            "unknown check suite \"{other}\"; available: {}, all",
            suite_names().join(", ")
        ))),
    }
}

fn check(out: &mut Vec<CheckResult>, name: &str, f: impl FnOnce() -> Result<()>) {
    out.push(CheckResult { name: name.to_string(), outcome: f() });
}

fn expect(cond: bool, msg: String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(msg))
    }
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn threefold_h1_types() -> Vec<SlopeMultiset> {
    [
        &[(0i64, 1i64, 3u64), (1, 1, 3)][..],
        &[(0, 1, 2), (1, 2, 2), (1, 1, 2)],
        &[(0, 1, 1), (1, 2, 4), (1, 1, 1)],
        &[(1, 3, 3), (2, 3, 3)],
        &[(1, 2, 6)],
    ]
    .iter()
    .map(|t| SlopeMultiset::from_triples(t).expect("valid threefold multiset"))
    .collect()
}

fn checks_slopes() -> Vec<CheckResult> {
    let mut out = Vec::new();
    check(&mut out, "slopes: exterior-power cardinality is C(rank, k)", || {
        let base = SlopeMultiset::from_triples(&[(0, 1, 2), (1, 2, 2), (1, 1, 2)])?;
        for k in 1..=6u32 {
            let ext = exterior_power(&base, k)?;
            expect(
                ext.rank() == binomial(6, k as u64),
                format!("Lambda^{k} has rank {}, expected C(6,{k})", ext.rank()),
            )?;
        }
        Ok(())
    });
    check(&mut out, "slopes: slope numbers partition the rank", || {
        for h1 in threefold_h1_types() {
            let ext = exterior_power(&h1, 2)?;
            let prof = IsocrystalProfile::new(2, ext)?;
            let total: Rational = (0..=2u32)
                .map(|i| m_ij(&prof, i, 2 - i))
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .sum();
            expect(
                total == Rational::from_integer(prof.rank() as i64),
                format!("sum of m_i,2-i = {total} != rank {}", prof.rank()),
            )?;
        }
        Ok(())
    });
    check(&mut out, "slopes: threefold m02 values are 3,3,2,1,0", || {
        let expected = [3i64, 3, 2, 1, 0];
        for (h1, want) in threefold_h1_types().into_iter().zip(expected) {
            let prof = IsocrystalProfile::new(2, exterior_power(&h1, 2)?)?;
            let m02 = m_ij(&prof, 0, 2)?;
            expect(
                m02 == Rational::from_integer(want),
                format!("m02 for {h1} is {m02}, expected {want}"),
            )?;
        }
        Ok(())
    });
    out
}

fn checks_polygon() -> Vec<CheckResult> {
    let mut out = Vec::new();
    check(&mut out, "polygon: frozen tent example", || {
        let np = NewtonPolygon::new(vec![(0, 0), (4, 2), (11, 9), (15, 15)])?;
        let hn = hodge_newton_polygon(&np)?;
        expect(
            hn.vertices() == [(0, 0), (2, 0), (13, 11), (15, 15)],
            format!("tent vertices {:?}", hn.vertices()),
        )
    });
    check(&mut out, "polygon: result lies on or below the input", || {
        for slopes in [
            SlopeMultiset::from_triples(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)])?,
            SlopeMultiset::from_triples(&[(2, 5, 5)])?,
            SlopeMultiset::from_triples(&[(1, 3, 3), (2, 3, 3)])?,
        ] {
            let np = polygon_from_slopes(&slopes)?;
            let hn = hodge_newton_polygon(&np)?;
            expect(
                lies_below(&hn, &np)?,
                format!("Hodge–Newton polygon of {slopes} fails to minorize it"),
            )?;
        }
        Ok(())
    });
    check(&mut out, "polygon: integer-slope polygons are fixed points", || {
        let np = polygon_from_slopes(&SlopeMultiset::from_triples(&[
            (0, 1, 2),
            (1, 1, 3),
            (2, 1, 1),
        ])?)?;
        let hn = hodge_newton_polygon(&np)?;
        expect(
            hn.vertices() == np.vertices(),
            format!("fixed point broke: {:?} vs {:?}", hn.vertices(), np.vertices()),
        )
    });
    out
}

fn checks_hodge_witt() -> Vec<CheckResult> {
    let mut out = Vec::new();
    check(&mut out, "hodge-witt: supersingular threefold T-table", || {
        let h = hodge_numbers_abelian(3);
        let h1 = SlopeMultiset::from_triples(&[(1, 2, 6)])?;
        let t = solve_t(&h, &abelian_profiles(3, &h1)?)?;
        for ((i, j), want) in [((0u32, 2u32), 3u64), ((0, 3), 1), ((1, 2), 1), ((1, 3), 3)] {
            expect(
                t.get(i, j) == want,
                format!("T({i},{j}) = {}, expected {want}", t.get(i, j)),
            )?;
        }
        Ok(())
    });
    check(&mut out, "hodge-witt: ordinary threefold T vanishes", || {
        let h = hodge_numbers_abelian(3);
        let h1 = SlopeMultiset::from_triples(&[(0, 1, 3), (1, 1, 3)])?;
        let t = solve_t(&h, &abelian_profiles(3, &h1)?)?;
        for i in 0..=3u32 {
            for j in 0..=3u32 {
                expect(t.get(i, j) == 0, format!("T({i},{j}) = {} != 0", t.get(i, j)))?;
            }
        }
        Ok(())
    });
    check(&mut out, "hodge-witt: round-trip, Crew rows and Ekedahl bound", || {
        let h = hodge_numbers_abelian(3);
        for h1 in threefold_h1_types() {
            let profiles = abelian_profiles(3, &h1)?;
            let t = solve_t(&h, &profiles)?;
            let m = MTable::from_profiles(&profiles)?;
            let hw = hodge_witt_numbers(&m, &t);
            for i in 0..=3u32 {
                for j in 0..=3u32 {
                    expect(
                        hw.get(i, j) == Rational::from_integer(h.get(i, j) as i64),
                        format!("round-trip failure at ({i},{j}) for {h1}"),
                    )?;
                }
                expect(crew_check(&hw, &h, i), format!("Crew row {i} fails for {h1}"))?;
            }
            expect(ekedahl_check(&hw, &h), format!("Ekedahl bound fails for {h1}"))?;
        }
        Ok(())
    });
    check(&mut out, "hodge-witt: admissible H^1 counts are 2,3,5,8", || {
        for (g, want) in [(1u32, 2usize), (2, 3), (3, 5), (4, 8)] {
            let got = admissible_h1_multisets(g).len();
            expect(got == want, format!("g = {g}: {got} multisets, expected {want}"))?;
        }
        Ok(())
    });
    out
}

fn checks_dieudonne() -> Vec<CheckResult> {
    let mut out = Vec::new();
    check(&mut out, "dieudonne: End of elliptic p-torsion is (Z/p)^2 + k", || {
        for (p, m) in [(2u64, 2u32), (3, 1)] {
            let field = FiniteField::new(p, m)?;
            let e = DieudonneModuleFp::elliptic_p_torsion(&field);
            let shape = dmodule_hom(&e, &e)?;
            expect(
                shape == GroupShape { etale_rank: 2, field_dim: 1 },
                format!("End shape over F_{p}^{m}: {shape:?}"),
            )?;
        }
        Ok(())
    });
    check(&mut out, "dieudonne: etale and multiplicative parts are orthogonal", || {
        let field = FiniteField::new(2, 1)?;
        let z = DieudonneModuleFp::z_mod_p(&field);
        let mu = DieudonneModuleFp::mu_p(&field);
        let a = DieudonneModuleFp::alpha_p(&field);
        expect(dmodule_hom(&z, &mu)? == GroupShape::ZERO, "Hom(Z/p, mu_p) != 0".into())?;
        expect(dmodule_hom(&mu, &z)? == GroupShape::ZERO, "Hom(mu_p, Z/p) != 0".into())?;
        expect(
            dmodule_hom(&a, &a)? == GroupShape { etale_rank: 0, field_dim: 1 },
            "End(alpha_p) != k".into(),
        )?;
        Ok(())
    });
    check(&mut out, "dieudonne: superspecial H^2 closed form", || {
        let expected_etale = [1u64, 6, 15, 28];
        let expected_field = [0u64, 1, 3, 6];
        for p in [2u64, 3] {
            for g in 1u32..=4 {
                let shape = superspecial_h2(g, p)?;
                expect(
                    shape.etale_rank == expected_etale[g as usize - 1]
                        && shape.field_dim == expected_field[g as usize - 1],
                    format!("superspecial H^2 for g={g}, p={p}: {shape:?}"),
                )?;
            }
        }
        Ok(())
    });
    out
}

fn checks_raynaud(opts: &CheckOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let (p, m) = opts.field;
    let level = opts.truncation;
    let max_t = 3u64.min(level.saturating_sub(2));
    check(&mut out, "raynaud: kernel of 1-F on the degree-one part is one line", || {
        let field = FiniteField::new(p, m)?;
        expect(max_t >= 1, format!("truncation level {level} leaves no valid parameter"))?;
        for t in 1..=max_t {
            let dom = TruncatedDomino::new(&field, t, level)?;
            let ker = kernel_one_minus_f(&dom, DominoPart::DegreeOne)?;
            expect(ker == 1, format!("kernel {ker} != 1 at t={t}, level {level}"))?;
        }
        Ok(())
    });
    check(&mut out, "raynaud: cokernel of 1-F on the degree-one part vanishes", || {
        let field = FiniteField::new(p, m)?;
        for t in 1..=max_t.max(1) {
            let dom = TruncatedDomino::new(&field, t, level.max(t + 2))?;
            let coker = cokernel_one_minus_f(&dom, DominoPart::DegreeOne)?;
            expect(coker == 0, format!("cokernel {coker} != 0 at t={t}"))?;
        }
        Ok(())
    });
    check(&mut out, "raynaud: degree-zero part contributes nothing", || {
        let field = FiniteField::new(p, m)?;
        let dom = TruncatedDomino::new(&field, 1.max(max_t), level.max(max_t + 2))?;
        let ker = kernel_one_minus_f(&dom, DominoPart::DegreeZero)?;
        let coker = cokernel_one_minus_f(&dom, DominoPart::DegreeZero)?;
        expect(ker == 0 && coker == 0, format!("degree-zero gave ({ker}, {coker})"))
    });
    check(&mut out, "raynaud: zero-operator probe has no fixed lines", || {
        let field = FiniteField::new(p, m)?;
        let ker = kernel_one_minus_f_zero_probe(&field, 6)?;
        expect(ker == 0, format!("zero probe kernel {ker} != 0"))
    });
    out
}

fn checks_classify() -> Vec<CheckResult> {
    let mut out = Vec::new();
    check(&mut out, "classify: Enriques surfaces across characteristics", || {
        let cases = [
            (3u64, EnriquesType::Classical, vec![]),
            (2, EnriquesType::Classical, vec![1u32]),
            (2, EnriquesType::Singular, vec![]),
            (2, EnriquesType::Supersingular, vec![]),
        ];
        for (p, t, factors) in cases {
            let (shape, _) = classify(&VarietyDescriptor::enriques(p, t))?;
            expect(
                shape.divisible_rank == 0
                    && shape.unipotent_dim == 0
                    && shape.finite_part == FinitePart::Exact { invariant_factors: factors.clone() },
                format!("Enriques p={p} {t:?} gave {shape:?}"),
            )?;
        }
        Ok(())
    });
    check(&mut out, "classify: K3 of every height and Artin invariant", || {
        for h in 1u32..=10 {
            let (shape, _) = classify(&VarietyDescriptor::k3_finite_height(h, 1))?;
            expect(
                shape.divisible_rank == 21 - 2 * h as u64 && shape.unipotent_dim == 0,
                format!("K3 height {h} gave {shape:?}"),
            )?;
        }
        for artin in 1u32..=10 {
            let (shape, _) = classify(&VarietyDescriptor::k3_supersingular(artin))?;
            expect(
                shape.divisible_rank == 0 && shape.unipotent_dim == 1,
                format!("supersingular K3 sigma0={artin} gave {shape:?}"),
            )?;
        }
        Ok(())
    });
    check(&mut out, "classify: abelian threefold table is 0,0,1,2,3", || {
        let rows = abelian3_table()?;
        let expected = [
            ("ordinary", 3i64, 0u64),
            ("almost ordinary", 3, 0),
            ("almost supersingular", 2, 1),
            ("1/3-type", 1, 2),
            ("supersingular", 0, 3),
        ];
        expect(rows.len() == 5, format!("{} rows, expected 5", rows.len()))?;
        for (row, (label, m02, t02)) in rows.iter().zip(expected) {
            expect(
                row.label == label
                    && row.m02 == Rational::from_integer(m02)
                    && row.t02 == t02,
                format!("row {label}: got ({}, {}, {})", row.label, row.m02, row.t02),
            )?;
            let (shape, _) = classify(&VarietyDescriptor::abelian(3, row.h1.clone(), 1))?;
            expect(
                shape.unipotent_dim == t02,
                format!("classify({label}) unipotent {} != {t02}", shape.unipotent_dim),
            )?;
        }
        Ok(())
    });
    check(&mut out, "classify: superspecial dual-route agreement", || {
        for g in 1u32..=3 {
            let (shape, _) = classify(&VarietyDescriptor::superspecial(g, 2))?;
            let want = (g as u64) * (g as u64 - 1) / 2;
            expect(
                shape.divisible_rank == 0 && shape.unipotent_dim == want,
                format!("superspecial g={g} gave {shape:?}, expected unipotent {want}"),
            )?;
        }
        Ok(())
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_with_defaults() {
        let opts = CheckOptions::default();
        let results = run_checks("all", &opts).unwrap();
        assert!(results.len() >= 15);
        for r in &results {
            assert!(r.outcome.is_ok(), "{} failed: {:?}", r.name, r.outcome);
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(matches!(
            run_checks("bogus", &CheckOptions::default()),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn raynaud_suite_respects_overrides() {
        let opts = CheckOptions { field: (3, 1), truncation: 8 };
        let results = run_checks("raynaud", &opts).unwrap();
        assert!(!results.is_empty());
        for r in &results {
            assert!(r.outcome.is_ok(), "{} failed: {:?}", r.name, r.outcome);
        }
    }

    #[test]
    fn abelian3_table_is_canonically_ordered() {
        let rows = abelian3_table().unwrap();
        let labels: Vec<&str> = rows.iter().map(|r| r.label).collect();
        assert_eq!(
            labels,
            [
                "ordinary",
                "almost ordinary",
                "almost supersingular",
                "1/3-type",
                "supersingular"
            ]
        );
        assert_eq!(rows.iter().map(|r| r.t02).collect::<Vec<_>>(), vec![0, 0, 1, 2, 3]);
    }
}
