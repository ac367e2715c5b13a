//! Enriques surfaces: the p-primary Brauer group is trivial away from
//! characteristic 2, and in characteristic 2 it is Z/2 exactly for the
//! classical type. Each answer comes with the rules that produced it.

use pbrauer::classify::{classify, EnriquesType, VarietyDescriptor};
use pbrauer::Result;

fn main() -> Result<()> {
    let cases = [
        (3u64, EnriquesType::Classical),
        (2, EnriquesType::Classical),
        (2, EnriquesType::Singular),
        (2, EnriquesType::Supersingular),
    ];
    for (p, t) in cases {
        let desc = VarietyDescriptor::enriques(p, t);
        let (shape, report) = classify(&desc)?;
        println!("p = {p}, {t:?}: Br[p^∞] = {}", shape.display_with_p(Some(p)));
        for rule in &report.rules {
            println!("    [{}] {}", rule.citation, rule.conclusion);
        }
    }
    Ok(())
}
