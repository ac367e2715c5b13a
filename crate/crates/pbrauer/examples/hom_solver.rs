//! Hom groups between the Dieudonné modules of the classical order-p group
//! schemes — Z/p, μ_p, α_p, and the p-torsion of a supersingular elliptic
//! curve — over F_9. Each Hom splits as (Z/p)^r ⊕ k^d; the solver reads the
//! split off the Frobenius/Verschiebung constraint graph.

use pbrauer::dieudonne::{dmodule_hom, DieudonneModuleFp, FiniteField};
use pbrauer::Result;

fn main() -> Result<()> {
    let field = FiniteField::new(3, 2)?;
    let modules = [
        ("Z/p", DieudonneModuleFp::z_mod_p(&field)),
        ("mu_p", DieudonneModuleFp::mu_p(&field)),
        ("alpha_p", DieudonneModuleFp::alpha_p(&field)),
        ("E[p]", DieudonneModuleFp::elliptic_p_torsion(&field)),
    ];
    println!("Hom(row, column) over F_9, p = 3:");
    print!("{:>10}", "");
    for (name, _) in &modules {
        print!("{:>16}", name);
    }
    println!();
    for (src_name, src) in &modules {
        print!("{:>10}", src_name);
        for (_, tgt) in &modules {
            let shape = dmodule_hom(src, tgt)?;
            print!("{:>16}", shape.display_with_p(3));
        }
        println!();
    }

    // additivity over direct sums: End(E[p] ⊕ alpha_p)
    let e = DieudonneModuleFp::elliptic_p_torsion(&field);
    let a = DieudonneModuleFp::alpha_p(&field);
    let sum = e.direct_sum(&a)?;
    let end = dmodule_hom(&sum, &sum)?;
    println!("\nEnd(E[p] ⊕ alpha_p) = {}", end.display_with_p(3));
    Ok(())
}
