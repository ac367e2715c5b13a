//! The five isogeny types of abelian threefolds: slope numbers, the solved
//! T-table entry, and the resulting p-primary Brauer group (with Picard
//! number 1).

use pbrauer::catalog::abelian3_table;
use pbrauer::classify::{classify, VarietyDescriptor};
use pbrauer::Result;

fn main() -> Result<()> {
    println!(
        "{:<24} {:<28} {:>5} {:>5}   Br[p^∞] (ρ = 1)",
        "type", "H^1 slopes", "m02", "T02"
    );
    for row in abelian3_table()? {
        let desc = VarietyDescriptor::abelian(3, row.h1.clone(), 1);
        let (shape, _) = classify(&desc)?;
        println!(
            "{:<24} {:<28} {:>5} {:>5}   {}",
            row.label,
            row.h1.to_string(),
            row.m02.to_string(),
            row.t02,
            shape.display_with_p(None)
        );
    }
    Ok(())
}
