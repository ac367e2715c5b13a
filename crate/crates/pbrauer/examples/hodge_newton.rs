//! Hodge–Newton polygons: the largest polygon with integral slopes lying on
//! or below a Newton polygon, sharing its endpoints. Its integer-slope
//! multiplicities are the slope numbers m^{ij}.

use pbrauer::polygon::{hodge_newton_polygon, lies_below, polygon_from_slopes};
use pbrauer::slopes::{m_ij, IsocrystalProfile, SlopeMultiset};
use pbrauer::Result;

fn show(name: &str, triples: &[(i64, i64, u64)]) -> Result<()> {
    let slopes = SlopeMultiset::from_triples(triples)?;
    let np = polygon_from_slopes(&slopes)?;
    let hn = hodge_newton_polygon(&np)?;
    println!("{name}: slopes {slopes}");
    println!("  newton:       {:?}", np.vertices());
    println!("  hodge-newton: {:?}", hn.vertices());
    println!("  minorant:     {}", lies_below(&hn, &np)?);
    Ok(())
}

fn main() -> Result<()> {
    // degree-2 cohomology of a supersingular-leaning surface
    show("H^2 example", &[(1, 2, 4), (1, 1, 7), (3, 2, 4)])?;

    // a polygon with no integral interior breakpoints at all
    show("steep single segment", &[(2, 5, 5)])?;

    // integral slopes are fixed points of the construction
    show("ordinary (fixed point)", &[(0, 1, 3), (1, 1, 9), (2, 1, 3)])?;

    // slope numbers of the first example, read off the same profile
    let profile = IsocrystalProfile::new(
        2,
        SlopeMultiset::from_triples(&[(1, 2, 4), (1, 1, 7), (3, 2, 4)])?,
    )?;
    let names = ["m^{02}", "m^{11}", "m^{20}"];
    for i in 0..=2u32 {
        println!("{} = {}", names[i as usize], m_ij(&profile, i, 2 - i)?);
    }
    Ok(())
}
