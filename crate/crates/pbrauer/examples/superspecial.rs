//! Products of supersingular elliptic curves: flat degree-2 cohomology
//! splits as (Z/p)^(g(2g-1)) ⊕ k^(g(g-1)/2), and the Brauer group keeps
//! exactly the connected summand. The étale/connected split is assembled
//! inductively from End D(E[p]) and cross-checked against the closed form.

use pbrauer::dieudonne::{superspecial_brauer, superspecial_h2};
use pbrauer::Result;

fn main() -> Result<()> {
    let p = 3;
    println!("characteristic p = {p}");
    println!("{:>3} {:>28} {:>22}", "g", "H^2_fppf(E^g, mu_p)", "Br(E^g)[p]");
    for g in 1..=5u32 {
        let h2 = superspecial_h2(g, p)?;
        let br = superspecial_brauer(g, p)?;
        println!(
            "{:>3} {:>28} {:>22}",
            g,
            h2.display_with_p(p),
            br.display_with_p(p)
        );
    }
    Ok(())
}
