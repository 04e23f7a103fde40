//! Bruhat order, essential sets, and the search for a permutation whose
//! essential set is a single bigrassmannian.

use schubert_min::bruhat::{bigrassmannian_v, bruhat_leq, essential_set, find_w_for_v, Permutation};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let u: Permutation = "[1,3,2,4]".parse()?;
    let w: Permutation = "[2,4,1,3]".parse()?;
    println!("{u} <= {w}: {}", bruhat_leq(&u, &w)?);

    for w in ["[1,2,3]", "[2,1,3]", "[3,2,1]", "[1,3,2,4]"] {
        let w: Permutation = w.parse()?;
        let e: Vec<String> = essential_set(&w)?.iter().map(|p| p.to_string()).collect();
        println!("E({w}) = {{{}}}", e.join(","));
    }

    let v = bigrassmannian_v(2, 2, 2, 4)?;
    for found in find_w_for_v(&v, 4)? {
        println!("E({}) = {{{v}}}, verified: {}", found.w, found.sets_equal);
    }
    Ok(())
}
