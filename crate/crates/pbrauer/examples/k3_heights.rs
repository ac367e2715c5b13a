//! K3 surfaces: at finite formal-group height h the p-primary Brauer group
//! is (Q_p/Z_p)^(22-2h-ρ); in the supersingular case it degenerates to a
//! single copy of the ground field k.

use pbrauer::classify::{classify, VarietyDescriptor};
use pbrauer::Result;

fn main() -> Result<()> {
    println!("finite height (minimal and maximal Picard number):");
    for h in 1..=10u32 {
        let r = 22 - 2 * h as u64;
        let (lo, _) = classify(&VarietyDescriptor::k3_finite_height(h, 1))?;
        let (hi, _) = classify(&VarietyDescriptor::k3_finite_height(h, r))?;
        println!(
            "  h = {h:>2}: ρ = 1 → {:<18} ρ = {r} → {}",
            lo.display_with_p(None),
            hi.display_with_p(None)
        );
    }
    println!("supersingular (ρ = 22), by Artin invariant:");
    for artin in [1u32, 5, 10] {
        let (shape, _) = classify(&VarietyDescriptor::k3_supersingular(artin))?;
        println!("  σ₀ = {artin:>2} → {}", shape.display_with_p(None));
    }
    Ok(())
}
