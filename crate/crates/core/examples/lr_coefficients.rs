//! Littlewood-Richardson coefficients by tableau search and by the picture
//! model, plus a full product expansion.

use schubert_min::lr::{lr_coefficient, lr_via_pictures, schur_product_expand};
use schubert_min::partition::Partition;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let lambda: Partition = "[3,2,2,2]".parse()?;
    let mu: Partition = "[4,3,1]".parse()?;
    let nu: Partition = "[5,4,3,2,2,1]".parse()?;

    let c = lr_coefficient(&lambda, &mu, &nu);
    let pictures = lr_via_pictures(&lambda, &mu, &nu)?;
    println!("c^{nu}_({lambda},{mu}) = {c} (pictures: {pictures})");

    let a: Partition = "[2,1]".parse()?;
    println!("s{a} * s{a} = {}", schur_product_expand(&a, &a));
    Ok(())
}
