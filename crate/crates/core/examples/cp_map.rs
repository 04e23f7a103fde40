//! One application of the CP map inside the quotient by a rectangle, and
//! the expansion of the resulting formal tensor.

use schubert_min::partition::{Partition, Rect};
use schubert_min::symfun::{cp_map, expand_formal_tensor};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let rect = Rect::new(6, 6)?;
    let left: Partition = "[3,1]".parse()?;

    let first = cp_map(&left, &[], rect)?;
    println!("CP(s̄{left} ⊗ 1) = {first}");

    let right: Partition = "[1]".parse()?;
    let second = cp_map(&"[2,1]".parse()?, &[right], rect)?;
    println!("CP(s̄[2,1] ⊗ s̄[1]) = {second}");
    println!("expanded: {}", expand_formal_tensor(&second));
    Ok(())
}
