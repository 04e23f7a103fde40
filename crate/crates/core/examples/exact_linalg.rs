//! Exact rational elimination with checkable certificates.

use schubert_min::linalg::{rational, Rational, RationalMatrix, Solution, SpanMembership};

fn show(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m = RationalMatrix::from_integers(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]], 3)?;
    println!("rank = {}", m.rank());

    let rhs = vec![rational(1), rational(3), rational(0)];
    match m.solve(&rhs)? {
        Solution::Solved(x) => println!("solution {}", show(&x)),
        Solution::Inconsistent(y) => println!("no solution, left certificate {}", show(&y)),
    }

    for v in [vec![1, 3, 4], vec![1, 0, 0]] {
        let v: Vec<_> = v.into_iter().map(rational).collect();
        let verdict = m.in_row_span(&v)?;
        let checked = m.verify_membership(&v, &verdict);
        match verdict {
            SpanMembership::InSpan(c) => println!("in row span with weights {} (checked: {checked})", show(&c)),
            SpanMembership::NotInSpan(y) => println!("outside the row span, kernel vector {} (checked: {checked})", show(&y)),
        }
    }
    Ok(())
}
