//! The JSON descriptor interface used by the CLI: parse descriptors from
//! strings, classify them, and show how inconsistent descriptors are
//! rejected with a named constraint.

use pbrauer::classify::{classify, VarietyDescriptor};
use pbrauer::Result;

fn main() -> Result<()> {
    let descriptors = [
        r#"{"kind":"abelian","g":3,"h1_slopes":[[1,3,3],[2,3,3]],"picard_number":1}"#,
        r#"{"kind":"k3","supersingular":{"artin_invariant":3}}"#,
        r#"{"kind":"enriques","p":2,"enriques_type":"classical"}"#,
        r#"{"kind":"superspecial","g":3,"p":2}"#,
        r#"{"kind":"surface","p":3,"b2":10,"h01":1,"h02":1,"picard_number":2,
            "h2_slopes":[[0,1,1],[1,1,8],[2,1,1]],"h1_slopes":[[0,1,1],[1,1,1]],
            "ns_torsion":[1,2],"ordinary":true}"#,
    ];
    for text in descriptors {
        let desc = VarietyDescriptor::from_json_str(text)?;
        let (shape, report) = classify(&desc)?;
        println!("{}", text.split_whitespace().collect::<Vec<_>>().join(" "));
        println!("  Br[p^∞] = {}", shape.display_with_p(desc.p()));
        println!(
            "  rules: {}",
            report
                .rules
                .iter()
                .map(|r| r.citation.as_str())
                .collect::<Vec<_>>()
                .join("; ")
        );
    }

    // a supersingular elliptic curve has slope-1 multiplicity r = 1 in
    // degree 2, so a Picard number of 5 cannot fit inside it
    let bad = r#"{"kind":"abelian","g":1,"h1_slopes":[[1,2,2]],"picard_number":5}"#;
    let desc = VarietyDescriptor::from_json_str(bad)?;
    match classify(&desc) {
        Err(e) => println!("rejected as expected: {e}"),
        Ok(_) => println!("BUG: inconsistent descriptor was accepted"),
    }
    Ok(())
}
