//! Statement names in the underlying structure theory.
//!
//! Every rule fired by [`crate::classify`] carries the name of the
//! statement that justifies it. The names are fixed strings so reports are
//! stable and machine-comparable; they are collected here rather than
//! inlined at the call sites so a renumbering touches exactly one file.

/// Splitting of the p-divisible part: `Br[p^∞]` has a divisible summand
/// `(Q_p/Z_p)^{r-ρ}` with `r` the slope-1 multiplicity of degree-2
/// cohomology and `ρ` the Picard number.
pub const DIVISIBLE_PART: &str = "Theorem 1.1(1)";

/// The finite part comes from the fixed points of Frobenius on the core of
/// the degree-2 torsion.
pub const FINITE_PART: &str = "Theorem 1.1(2)";

/// The unipotent dimension is `T^{02}` computed from Hodge and Newton data
/// when crystalline cohomology is torsion-free in degrees 2 and 3 and the
/// Frölicher spectral sequence degenerates.
pub const UNIPOTENT_FROM_T02: &str = "Theorem 1.1(3)";

/// The exponent of the unipotent part is not bounded by the structure
/// theory alone.
pub const EXPONENT_REMARK: &str = "Remark 1.1";

/// For ordinary varieties the finite part is the p-primary torsion of a
/// finitely generated module, with no unipotent contribution.
pub const ORDINARY_FINITE: &str = "Theorem 1.2";

/// For surfaces the finite part is dual to the p-primary torsion of the
/// Néron–Severi group.
pub const SURFACE_FINITE: &str = "Theorem 1.3(1)";

/// For surfaces `T^{02} = (h^{02} - h^{01}) - (m^{02} - m^{01})`.
pub const SURFACE_T02: &str = "Theorem 1.3(2)";

/// Enriques surfaces: `r = ρ` and the unipotent part vanishes.
pub const ENRIQUES_PREAMBLE: &str = "Corollary 1.4";

/// Enriques surfaces in characteristic different from 2: trivial group.
pub const ENRIQUES_ODD: &str = "Corollary 1.4(1)";

/// Classical Enriques surfaces in characteristic 2: one copy of Z/2.
pub const ENRIQUES_CLASSICAL: &str = "Corollary 1.4(2)";

/// Non-classical Enriques surfaces in characteristic 2: trivial group.
pub const ENRIQUES_NONCLASSICAL: &str = "Corollary 1.4(3)";

/// Abelian varieties: `T^{02} = h^{02} - m^{02}` and the finite part
/// vanishes.
pub const ABELIAN: &str = "Theorem 1.5";

/// The dlog map in degree 2 is injective under the stated torsion-freeness
/// and degeneration hypotheses.
pub const DLOG_INJECTIVE: &str = "Theorem 1.6";

/// The Hodge–Witt identity `hW^{ij} = m^{ij} + T^{ij} - 2T^{i-1,j+1} +
/// T^{i-2,j+2}`.
pub const HODGE_WITT_IDENTITY: &str = "Eq. (3.5)";

/// Mandated vanishing of `T^{ij}` for `i >= dim - 1` or `j <= 1`.
pub const T_VANISHING: &str = "Remark 3.1";

/// Equality of Hodge–Witt and Hodge numbers under torsion-freeness and
/// degeneration.
pub const HW_EQUALS_H: &str = "Theorem 3.3(1)";

/// Definition of the domino numbers.
pub const DOMINO_NUMBERS: &str = "Definition 3.2";

/// The supersingular K3 example: one domino with `T^{02} = 1` whose
/// `1 - F` kernel is one line.
pub const K3_SUPERSINGULAR_EXAMPLE: &str = "§3.3 Example (2)";

/// Vanishing criterion for the unipotent part of an ordinary variety.
pub const ORDINARY_UNIPOTENT_VANISHES: &str = "Corollary 4.2";

/// Slope criterion: ordinarity forces integral slopes in the relevant
/// degrees.
pub const ORDINARY_SLOPES: &str = "Corollary 4.3";

/// K3 surfaces: divisible rank `b₂ - 2h - ρ` at finite height h, and the
/// supersingular shape.
pub const K3_SHAPE: &str = "Corollary 4.4";

/// Torsion-free degree-3 crystalline cohomology forces a trivial finite
/// part.
pub const TORSION_FREE_H3: &str = "Proposition 4.5";

/// Endomorphisms of the p-torsion of a supersingular elliptic curve.
pub const SUPERSPECIAL_END: &str = "Lemma 4.6";

/// Flat degree-2 cohomology and Brauer group of superspecial abelian
/// varieties.
pub const SUPERSPECIAL: &str = "Proposition 4.7";

/// The tabulated abelian threefold isogeny types.
pub const THREEFOLD_TABLE: &str = "§4.3 table";

/// The unipotent dimensions across the abelian threefold table.
pub const THREEFOLD_COROLLARY: &str = "§4.3 Corollary";

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_nonempty_and_distinct() {
        let all = [
            DIVISIBLE_PART,
            FINITE_PART,
            UNIPOTENT_FROM_T02,
            EXPONENT_REMARK,
            ORDINARY_FINITE,
            SURFACE_FINITE,
            SURFACE_T02,
            ENRIQUES_PREAMBLE,
            ENRIQUES_ODD,
            ENRIQUES_CLASSICAL,
            ENRIQUES_NONCLASSICAL,
            ABELIAN,
            DLOG_INJECTIVE,
            HODGE_WITT_IDENTITY,
            T_VANISHING,
            HW_EQUALS_H,
            DOMINO_NUMBERS,
            K3_SUPERSINGULAR_EXAMPLE,
            ORDINARY_UNIPOTENT_VANISHES,
            ORDINARY_SLOPES,
            K3_SHAPE,
            TORSION_FREE_H3,
            SUPERSPECIAL_END,
            SUPERSPECIAL,
            THREEFOLD_TABLE,
            THREEFOLD_COROLLARY,
        ];
        let set: std::collections::BTreeSet<&str> = all.iter().copied().collect();
        assert_eq!(set.len(), all.len());
        assert!(all.iter().all(|s| !s.is_empty()));
    }
}
