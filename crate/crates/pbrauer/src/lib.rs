//! Exact arithmetic for the p-primary torsion of Brauer groups of smooth
//! proper varieties in characteristic p.
//!
//! The p-primary torsion `Br(X)[p^∞]` of such a variety decomposes as a
//! p-divisible part `(Q_p/Z_p)^{r-ρ}`, a connected unipotent part `U(k)`,
//! and a finite part `J`. This crate computes the three invariants from
//! discrete inputs — Newton polygon slopes of crystalline cohomology, Hodge
//! numbers, Picard numbers, Néron–Severi torsion — without floating point:
//!
//! * [`slopes`] — slope multisets, isocrystal profiles, exterior powers,
//!   slope windows, and the slope numbers `m^{ij}`;
//! * [`polygon`] — Newton polygons with lattice breakpoints and the
//!   Hodge–Newton polygon (the upmost integral minorant);
//! * [`hodge_witt`] — Hodge–Witt numbers, the domino table `T^{ij}` solved
//!   from Hodge and Newton data, and the consistency checks (row alternating
//!   sums, pointwise comparison) they must satisfy;
//! * [`dieudonne`] — explicit finite fields, mod-p Dieudonné modules, a Hom
//!   solver for monomial modules, and the flat cohomology of superspecial
//!   abelian varieties;
//! * [`raynaud`] — coherent-complex descriptions built from dominoes, and
//!   kernels/cokernels of `1 - F` on truncated dominoes;
//! * [`classify`] — descriptor-driven classification producing the shape of
//!   `Br(X)[p^∞]` together with a report of the rules that justify each
//!   field of the answer;
//! * [`catalog`] — the built-in worked examples, re-runnable as named
//!   checks;
//! * [`cli`] — the command-line interface used by the `pbrauer` binary.
//!
//! All rational arithmetic uses exact `i64` ratios; field arithmetic is
//! exact arithmetic in explicit finite fields `F_{p^m}`.

pub mod catalog;
pub mod citations;
pub mod classify;
pub mod cli;
pub mod dieudonne;
mod error;
pub mod fq;
pub mod hodge_witt;
pub mod polygon;
pub mod raynaud;
pub mod slopes;

pub use error::{Error, Result};
pub use slopes::Rational;
