//! The decomposable equations for a tuple, split into tall and wide rows,
//! and the certificate that each tall row lies in the span of the wide ones.

use schubert_min::presentation::{build_system, tall_in_wide_span, TallCertificate, ValidTuple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = ValidTuple::new(6, 3, 2, 2, 1, 2, 2)?;
    let system = build_system(&phi);
    print!("{}", system.render());

    let report = tall_in_wide_span(&phi)?;
    for (nu, cert) in &report.certificates {
        match cert {
            TallCertificate::Combination(w) => {
                let parts: Vec<String> = w.iter().map(|(row, q)| format!("{q}*row{row}")).collect();
                println!("row{nu} = {}", parts.join(" + "));
            }
            TallCertificate::Separating(_) => println!("row{nu} is not in the span"),
        }
    }
    println!("inconsistent: {}", report.holds);
    Ok(())
}
