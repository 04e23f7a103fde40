//! Direct minimality check: is any generator `s_(i^j, rho)` a combination of
//! the others inside the quotient ring?

use num_traits::Zero;
use rayon::prelude::*;

use super::tuple::{generator_pairs, Bigrassmannian, GeneratorParams};
use crate::error::{Error, Result};
use crate::linalg::{rational_string, Rational, RationalMatrix, SpanMembership};
use crate::partition::{partitions_in_box, partitions_within, Partition, Rect};
use crate::symfun::basis_product;

/// Size limits for the direct check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub max_width: usize,
    pub max_cells: usize,
    pub force: bool,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_width: 8,
            max_cells: 40,
            force: false,
        }
    }
}

impl Guard {
    pub fn forced() -> Self {
        Guard {
            force: true,
            ..Guard::default()
        }
    }

    /// Errors with the measured bound when an instance is over the limit.
    pub fn check(&self, width: usize, cells: usize) -> Result<()> {
        if self.force {
            return Ok(());
        }
        if width > self.max_width {
            return Err(Error::TooLarge {
                measure: "n-r",
                value: width,
                limit: self.max_width,
            });
        }
        if cells > self.max_cells {
            return Err(Error::TooLarge {
                measure: "i*j+a*b",
                value: cells,
                limit: self.max_cells,
            });
        }
        Ok(())
    }
}

/// Verdict for one generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// A functional on the degree component that kills the ideal generated
    /// by the other generators but not this one, indexed by `basis`.
    Essential { basis: Vec<Partition>, witness: Vec<Rational> },
    /// Redundant over the rationals: weights on products `s_(i^j,lambda) s_theta`.
    Redundant(Vec<(Partition, Partition, Rational)>),
}

impl Verdict {
    pub fn is_essential(&self) -> bool {
        matches!(self, Verdict::Essential { .. })
    }
}

#[derive(Debug, Clone)]
pub struct GeneratorVerdict {
    pub rho: Partition,
    pub generator: Partition,
    pub degree: usize,
    pub products: usize,
    pub verdict: Verdict,
}

#[derive(Debug, Clone)]
pub struct MinimalityReport {
    pub bigrassmannian: Bigrassmannian,
    pub params: GeneratorParams,
    pub ambient: Rect,
    /// `i = n - r`: one generator, nothing to compare against.
    pub degenerate: bool,
    pub generators: Vec<GeneratorVerdict>,
}

impl MinimalityReport {
    pub fn all_essential(&self) -> bool {
        self.generators.iter().all(|g| g.verdict.is_essential())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let gens: Vec<_> = self
            .generators
            .iter()
            .map(|g| {
                let mut v = serde_json::json!({
                    "rho": g.rho.to_string(),
                    "generator": g.generator.to_string(),
                    "degree": g.degree,
                    "products": g.products,
                    "essential": g.verdict.is_essential(),
                });
                match &g.verdict {
                    Verdict::Essential { basis, witness } => {
                        v["witness"] = basis
                            .iter()
                            .zip(witness)
                            .filter(|(_, q)| !q.is_zero())
                            .map(|(p, q)| serde_json::json!({"basis": p.to_string(), "value": rational_string(q)}))
                            .collect();
                    }
                    Verdict::Redundant(w) => {
                        v["combination"] = w
                            .iter()
                            .map(|(l, t, q)| {
                                serde_json::json!({"lambda": l.to_string(), "theta": t.to_string(), "coefficient": rational_string(q)})
                            })
                            .collect();
                    }
                }
                v
            })
            .collect();
        serde_json::json!({
            "bigrassmannian": self.bigrassmannian,
            "params": self.params,
            "ambient": self.ambient.to_string(),
            "degenerate": self.degenerate,
            "all_essential": self.all_essential(),
            "generators": gens,
        })
    }
}

/// Checks every generator of `J_v` for the bigrassmannian `(r, s, t, n)`.
pub fn check_minimality(r: usize, s: usize, t: usize, n: usize, guard: Guard) -> Result<MinimalityReport> {
    check_minimality_for(&Bigrassmannian::new(r, s, t, n)?, guard)
}

pub fn check_minimality_for(v: &Bigrassmannian, guard: Guard) -> Result<MinimalityReport> {
    let params = v.params();
    let GeneratorParams { i, j, a, b } = params;
    let ambient = v.ambient();
    guard.check(ambient.cols, i * j + a * b)?;
    let pairs = generator_pairs(v);
    let generators = pairs
        .par_iter()
        .map(|(rho, mu)| check_one(&params, ambient, &pairs, rho, mu))
        .collect::<Result<Vec<_>>>()?;
    Ok(MinimalityReport {
        bigrassmannian: *v,
        params,
        ambient,
        degenerate: i == ambient.cols,
        generators,
    })
}

fn check_one(
    params: &GeneratorParams,
    ambient: Rect,
    pairs: &[(Partition, Partition)],
    rho: &Partition,
    mu: &Partition,
) -> Result<GeneratorVerdict> {
    let degree = params.i * params.j + rho.size();
    let basis = partitions_in_box(ambient, Some(degree));
    let index = |p: &Partition| basis.binary_search(p).expect("products stay in the graded box");
    let to_row = |f: &crate::symfun::SchurElement| {
        let mut row = vec![Rational::zero(); basis.len()];
        for (p, c) in f.terms() {
            row[index(p)] = Rational::from_integer(c.clone());
        }
        row
    };

    let mut labels = Vec::new();
    let mut rows = Vec::new();
    for (lambda, gen) in pairs {
        if lambda == rho || lambda.size() > rho.size() {
            continue;
        }
        for theta in partitions_in_box(ambient, Some(rho.size() - lambda.size())) {
            let product = basis_product(gen, &theta, Some(ambient));
            if product.is_zero() {
                continue;
            }
            rows.push(to_row(&product));
            labels.push((lambda.clone(), theta));
        }
    }
    let mut target = vec![Rational::zero(); basis.len()];
    target[index(mu)] = Rational::from_integer(1.into());

    let matrix = RationalMatrix::new(rows, basis.len())?;
    let membership = matrix.in_row_span(&target)?;
    if !matrix.verify_membership(&target, &membership) {
        return Err(Error::Internal(format!("certificate for {mu} failed re-check")));
    }
    let verdict = match membership {
        SpanMembership::NotInSpan(witness) => Verdict::Essential { basis, witness },
        SpanMembership::InSpan(c) => Verdict::Redundant(
            labels
                .into_iter()
                .zip(c)
                .filter(|(_, q)| !q.is_zero())
                .map(|((l, t), q)| (l, t, q))
                .collect(),
        ),
    };
    Ok(GeneratorVerdict {
        rho: rho.clone(),
        generator: mu.clone(),
        degree,
        products: matrix.nrows(),
        verdict,
    })
}

/// Lower blocks `rho` of a given size: the generators of one degree.
pub fn generators_of_degree(params: &GeneratorParams, size: usize) -> Vec<Partition> {
    partitions_within(params.a, params.b, Some(size))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_case() {
        let report = check_minimality(2, 2, 2, 4, Guard::default()).unwrap();
        assert_eq!(report.generators.len(), 2);
        assert!(report.all_essential());
        // s_[1] alone: nothing below it
        assert_eq!(report.generators[0].products, 0);
        // s_[1,1] against s_[1] s_[1] = s_[2] + s_[1,1]
        assert_eq!(report.generators[1].products, 1);
    }

    #[test]
    fn degenerate_case() {
        let report = check_minimality(2, 3, 2, 4, Guard::default()).unwrap();
        assert!(report.degenerate);
        assert_eq!(report.generators.len(), 1);
        assert!(report.all_essential());
    }

    #[test]
    fn middle_family_member() {
        let report = check_minimality(4, 4, 3, 8, Guard::default()).unwrap();
        assert_eq!(report.generators.len(), 6);
        assert!(report.all_essential());
    }

    #[test]
    fn guard_reports_measure() {
        let err = check_minimality(10, 10, 6, 20, Guard::default()).unwrap_err();
        assert!(matches!(err, Error::TooLarge { measure: "n-r", value: 10, limit: 8 }));
    }

    #[test]
    fn non_generator_is_redundant() {
        // s_[2] s_[1] contains s_[2,1] in the 2x2 box, so s_[2,1] is caught by
        // the span test even though it is not essential for anything here.
        let ambient = Rect { rows: 2, cols: 2 };
        let params = GeneratorParams { i: 1, j: 1, a: 1, b: 1 };
        let pairs = vec![(Partition::empty(), Partition::new(vec![1]).unwrap())];
        let rho = Partition::new(vec![1, 1]).unwrap();
        let mu = Partition::new(vec![2, 1]).unwrap();
        let g = check_one(&params, ambient, &pairs, &rho, &mu).unwrap();
        assert!(!g.verdict.is_essential());
    }
}
