//! Dominoes in the de Rham–Witt complex: on the completed degree-one part
//! of a domino, 1 - F has a one-dimensional kernel and no cokernel,
//! independent of the domino parameter t, the truncation level, and the
//! coefficient field. This single line is what feeds k into the Brauer
//! group of a supersingular K3 surface.

use pbrauer::dieudonne::FiniteField;
use pbrauer::raynaud::{
    cokernel_one_minus_f, kernel_one_minus_f, DominoPart, TruncatedDomino,
};
use pbrauer::Result;

fn main() -> Result<()> {
    for (p, m) in [(2u64, 1u32), (3, 2)] {
        let field = FiniteField::new(p, m)?;
        println!("over F_{}^{} (q = {}):", p, m, p.pow(m));
        for t in 1..=4u64 {
            let level = t + 3;
            let dom = TruncatedDomino::new(&field, t, level)?;
            let ker1 = kernel_one_minus_f(&dom, DominoPart::DegreeOne)?;
            let coker1 = cokernel_one_minus_f(&dom, DominoPart::DegreeOne)?;
            let ker0 = kernel_one_minus_f(&dom, DominoPart::DegreeZero)?;
            println!(
                "  t = {t}, level {level}: deg-1 ker(1-F) = {ker1}, coker = {coker1}, \
                 deg-0 ker = {ker0}"
            );
        }
    }
    Ok(())
}
