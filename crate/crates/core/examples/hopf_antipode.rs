//! The antipode identity: `sum S(s_lambda) s_mu` over the coproduct of
//! `s_nu` vanishes for every nonempty `nu`.

use schubert_min::partition::partitions_of;
use schubert_min::symfun::{antipode, coproduct, hopf_convolution, SchurElement};

fn main() {
    let nu = "[2,1]".parse().unwrap();
    println!("coproduct of s[2,1]: {}", coproduct(&nu));
    println!("S(s[2,1]) = {}", antipode(&SchurElement::basis(nu)));

    for size in 1..=5 {
        let all_zero = partitions_of(size).iter().all(|p| hopf_convolution(p).is_zero());
        println!("|nu| = {size}: convolution vanishes: {all_zero}");
    }
}
