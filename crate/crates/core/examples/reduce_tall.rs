//! The reduction of a tall equation, step by step, compared with its closed
//! form and with a run in random order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use schubert_min::presentation::{closed_form, Reduction, ValidTuple};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let phi = ValidTuple::new(12, 6, 3, 3, 3, 3, 4)?;
    let nu = "[3,3,3,3,1]".parse()?;

    let mut run = Reduction::start(&phi, &nu)?.keep_states(true);
    println!("start: {}", run.state());
    run.run_canonical()?;
    for (k, step) in run.steps().iter().enumerate() {
        println!("step {}: eliminate {} (coefficient {})", k + 1, step.eliminated, step.coefficient);
    }
    let result = run.output()?;
    println!("terminal: {}", run.state());
    println!("result: {result}");
    println!("closed form: {}", closed_form(&phi, run.nu_b()));

    let mut shuffled = Reduction::start(&phi, &nu)?;
    shuffled.run_random(&mut ChaCha8Rng::seed_from_u64(7))?;
    println!("random order agrees: {}", shuffled.output()? == result);
    Ok(())
}
