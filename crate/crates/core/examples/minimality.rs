//! Minimality of the generating set for a family of bigrassmannians.

use num_traits::Zero;
use schubert_min::presentation::{check_minimality, Guard, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for m in 1..=3 {
        let report = check_minimality(2 * m, 2 * m, m + 1, 4 * m, Guard::default())?;
        println!(
            "{}: {} generators, all essential: {}",
            report.bigrassmannian,
            report.generators.len(),
            report.all_essential()
        );
    }

    let report = check_minimality(4, 4, 3, 8, Guard::default())?;
    for g in &report.generators {
        let how = match &g.verdict {
            Verdict::Essential { witness, .. } => {
                format!("essential, witness of length {}", witness.iter().filter(|q| !q.is_zero()).count())
            }
            Verdict::Redundant(c) => format!("redundant via {} products", c.len()),
        };
        println!("  s̄{} in degree {}: {how}", g.generator, g.degree);
    }
    Ok(())
}
