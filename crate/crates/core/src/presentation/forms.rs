use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::tuple::ValidTuple;
use crate::error::{Error, Result};
use crate::linalg::{Rational, RationalMatrix};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_in_box, partitions_within, Partition};
use crate::symfun::{cp_map, expand_formal_tensor, TensorElement};

/// A variable `A_{lambda,theta}`.
pub type Variable = (Partition, Partition);

/// Partitions `nu` with `i^j <= nu <= (n-r)^r` and `|nu| = ij + N`.
pub fn allowable_partitions(phi: &ValidTuple) -> Vec<Partition> {
    let top = phi.top();
    let size = phi.i * phi.j + phi.degree;
    partitions_in_box(phi.ambient(), Some(size))
        .into_iter()
        .filter(|nu| nu.contains(&top))
        .collect()
}

pub fn is_allowable(phi: &ValidTuple, nu: &Partition) -> bool {
    nu.size() == phi.i * phi.j + phi.degree && nu.fits_in(phi.ambient()) && nu.contains(&phi.top())
}

/// A decomposable `nu` cut into the `i^j` block, the right strip `nu_R`
/// and the lower block `nu_B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub nu_b: Partition,
    pub nu_r: Partition,
    pub tall: bool,
}

impl Decomposition {
    /// Reassembles `nu` over a `width^height` top block.
    pub fn recompose(&self, width: usize, height: usize) -> Result<Partition> {
        if self.nu_r.len() > height || self.nu_b.first() > width {
            return Err(Error::Precondition(format!(
                "cannot place nu_R = {} and nu_B = {} around {width}^{height}",
                self.nu_r, self.nu_b
            )));
        }
        let mut parts: Vec<usize> = (0..height).map(|k| width + self.nu_r.part(k)).collect();
        parts.extend_from_slice(self.nu_b.parts());
        Partition::new(parts)
    }
}

/// Splits an allowable `nu`; `Ok(None)` when it is not decomposable.
pub fn decompose(phi: &ValidTuple, nu: &Partition) -> Result<Option<Decomposition>> {
    if !is_allowable(phi, nu) {
        return Err(Error::Precondition(format!("{nu} is not allowable for {phi}")));
    }
    let j = phi.j;
    if nu.part(j) > phi.b || nu.len() > j + phi.a {
        return Ok(None);
    }
    let nu_r = Partition::new((0..j).map(|k| nu.part(k) - phi.i).collect())?;
    let nu_b = Partition::new(nu.parts()[j..].to_vec())?;
    let tall = nu.first() == phi.i;
    Ok(Some(Decomposition { nu_b, nu_r, tall }))
}

/// Decomposable partitions with their decompositions, in canonical order.
pub fn decomposable_partitions(phi: &ValidTuple) -> Vec<(Partition, Decomposition)> {
    allowable_partitions(phi)
        .into_iter()
        .filter_map(|nu| {
            let d = decompose(phi, &nu).expect("allowable by construction")?;
            Some((nu, d))
        })
        .collect()
}

/// All `A_{lambda,theta}` with `lambda <= b^a`, `|lambda| < N`,
/// `theta <= (n-r)^r` and `|theta| = N - |lambda|`, ordered by `lambda`
/// then `theta`.
pub fn variables(phi: &ValidTuple) -> Vec<Variable> {
    let mut out = Vec::new();
    for lambda in partitions_within(phi.a, phi.b, None) {
        if lambda.size() >= phi.degree {
            continue;
        }
        for theta in partitions_in_box(phi.ambient(), Some(phi.degree - lambda.size())) {
            out.push((lambda.clone(), theta));
        }
    }
    out
}

/// The left-hand side of the equation attached to a decomposable `nu`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub tuple: ValidTuple,
    pub label: Partition,
    pub tall: bool,
    pub coeffs: BTreeMap<Variable, BigInt>,
}

impl LinearForm {
    pub fn coeff(&self, lambda: &Partition, theta: &Partition) -> BigInt {
        self.coeffs
            .get(&(lambda.clone(), theta.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Dense coefficient vector over `vars`.
    pub fn to_vector(&self, vars: &[Variable]) -> Vec<Rational> {
        vars.iter()
            .map(|v| Rational::from_integer(self.coeffs.get(v).cloned().unwrap_or_default()))
            .collect()
    }

    /// The image under `A_{lambda,theta} -> s_lambda (x) s_theta`.
    pub fn to_tensor(&self) -> TensorElement {
        let mut out = TensorElement::zero(Some(self.tuple.ambient()));
        for ((l, t), c) in &self.coeffs {
            out.add_term(l.clone(), t.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, ((l, t), c)) in self.coeffs.iter().enumerate() {
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k == 0, neg) {
                (true, false) => {}
                (true, true) => write!(f, "-")?,
                (false, false) => write!(f, " + ")?,
                (false, true) => write!(f, " - ")?,
            }
            if mag != BigInt::from(1) {
                write!(f, "{mag}")?;
            }
            write!(f, "A_{{{l},{t}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.label, self)
    }
}

fn form_from(phi: &ValidTuple, nu: &Partition, tall: bool, vars: &[Variable]) -> LinearForm {
    let mut coeffs = BTreeMap::new();
    for (lambda, theta) in vars {
        let gen = phi.generator(lambda).expect("b <= i");
        let c = lr_coefficient(&gen, theta, nu);
        if c != 0 {
            coeffs.insert((lambda.clone(), theta.clone()), BigInt::from(c));
        }
    }
    LinearForm {
        tuple: *phi,
        label: nu.clone(),
        tall,
        coeffs,
    }
}

/// Coefficient of `A_{lambda,theta}` is `c^nu_{(i^j,lambda),theta}`.
pub fn linear_form(phi: &ValidTuple, nu: &Partition) -> Result<LinearForm> {
    let d = decompose(phi, nu)?
        .ok_or_else(|| Error::Precondition(format!("{nu} is not decomposable for {phi}")))?;
    Ok(form_from(phi, nu, d.tall, &variables(phi)))
}

/// `CP(s_{nu_B} (x) s_{nu_R})`, expanded.
pub fn tensor_of_form(phi: &ValidTuple, nu: &Partition) -> Result<TensorElement> {
    let d = decompose(phi, nu)?
        .ok_or_else(|| Error::Precondition(format!("{nu} is not decomposable for {phi}")))?;
    let right: Vec<Partition> = if d.nu_r.is_empty() { vec![] } else { vec![d.nu_r] };
    let formal = cp_map(&d.nu_b, &right, phi.ambient())?;
    Ok(expand_formal_tensor(&formal))
}

/// The decomposable equations, one row per decomposable `nu`.
#[derive(Debug, Clone)]
pub struct DecomposableSystem {
    pub tuple: ValidTuple,
    pub variables: Vec<Variable>,
    pub rows: Vec<LinearForm>,
}

pub fn build_system(phi: &ValidTuple) -> DecomposableSystem {
    let vars = variables(phi);
    let rows = decomposable_partitions(phi)
        .into_par_iter()
        .map(|(nu, d)| form_from(phi, &nu, d.tall, &vars))
        .collect();
    DecomposableSystem {
        tuple: *phi,
        variables: vars,
        rows,
    }
}

impl DecomposableSystem {
    pub fn tall_rows(&self) -> impl Iterator<Item = &LinearForm> {
        self.rows.iter().filter(|r| r.tall)
    }

    pub fn wide_rows(&self) -> impl Iterator<Item = &LinearForm> {
        self.rows.iter().filter(|r| !r.tall)
    }

    pub fn matrix<'a>(&self, rows: impl Iterator<Item = &'a LinearForm>) -> RationalMatrix {
        let dense = rows.map(|r| r.to_vector(&self.variables)).collect();
        RationalMatrix::new(dense, self.variables.len()).expect("rows share the variable index")
    }

    /// Text listing split into tall and wide equations.
    pub fn render(&self) -> String {
        let mut out = format!(
            "decomposable equations for phi = {}: {} rows, {} variables\n",
            self.tuple,
            self.rows.len(),
            self.variables.len()
        );
        for (title, tall) in [("tall", true), ("wide", false)] {
            out.push_str(&format!("{title} equations:\n"));
            for row in self.rows.iter().filter(|r| r.tall == tall) {
                let rhs = if tall { "chi" } else { "0" };
                out.push_str(&format!("  nu = {}: {} = {rhs}\n", row.label, row));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn phi(v: [usize; 7]) -> ValidTuple {
        ValidTuple::new(v[0], v[1], v[2], v[3], v[4], v[5], v[6]).unwrap()
    }

    #[test]
    fn allowable_small() {
        assert_eq!(allowable_partitions(&phi([4, 2, 1, 1, 1, 1, 1])), vec![p(&[2]), p(&[1, 1])]);
    }

    #[test]
    fn allowable_running_example() {
        let t = phi([12, 6, 3, 3, 3, 3, 4]);
        let all = allowable_partitions(&t);
        assert!(!all.is_empty());
        for nu in &all {
            assert_eq!(nu.size(), 13);
            assert!(nu.contains(&p(&[3, 3, 3])));
            assert!(nu.fits_in(t.ambient()));
        }
        // every allowable partition is decomposable here
        assert_eq!(decomposable_partitions(&t).len(), all.len());
    }

    #[test]
    fn decompositions() {
        let t = phi([12, 6, 3, 3, 3, 3, 4]);
        let d = decompose(&t, &p(&[3, 3, 3, 3, 1])).unwrap().unwrap();
        assert_eq!((d.nu_b, d.nu_r, d.tall), (p(&[3, 1]), p(&[]), true));
        let d = decompose(&t, &p(&[4, 3, 3, 2, 1])).unwrap().unwrap();
        assert_eq!((d.nu_b.clone(), d.nu_r.clone(), d.tall), (p(&[2, 1]), p(&[1]), false));
        assert_eq!(d.recompose(3, 3).unwrap(), p(&[4, 3, 3, 2, 1]));

        let t = phi([12, 6, 2, 2, 2, 2, 4]);
        assert_eq!(decompose(&t, &p(&[2, 2, 1, 1, 1, 1])).unwrap(), None);
        assert!(decompose(&t, &p(&[2, 2])).is_err());
    }

    #[test]
    fn running_example_form() {
        let t = phi([12, 6, 3, 3, 3, 3, 4]);
        let f = linear_form(&t, &p(&[3, 3, 3, 3, 1])).unwrap();
        assert!(f.tall);
        assert_eq!(
            f.to_string(),
            "A_{[],[3,1]} + A_{[1],[3]} + A_{[1],[2,1]} + A_{[2],[2]} + A_{[2],[1,1]} + A_{[1,1],[2]} + A_{[3],[1]} + A_{[2,1],[1]}"
        );
    }

    #[test]
    fn small_forms() {
        let t = phi([4, 2, 1, 1, 1, 1, 1]);
        for nu in [p(&[2]), p(&[1, 1])] {
            let f = linear_form(&t, &nu).unwrap();
            assert_eq!(f.to_string(), "A_{[],[1]}");
        }
        let sys = build_system(&t);
        assert_eq!(sys.rows.len(), 2);
        assert_eq!(sys.variables.len(), 1);
        assert_eq!(sys.tall_rows().count(), 1);
        assert_eq!(sys.wide_rows().count(), 1);
    }

    #[test]
    fn form_requires_decomposable() {
        let t = phi([12, 6, 2, 2, 2, 2, 4]);
        assert!(linear_form(&t, &p(&[2, 2, 1, 1, 1, 1])).is_err());
        assert!(tensor_of_form(&t, &p(&[2, 2, 1, 1, 1, 1])).is_err());
    }

    #[test]
    fn tall_base_case_tensor() {
        let t = phi([4, 2, 1, 1, 1, 1, 1]);
        let tensor = tensor_of_form(&t, &p(&[1, 1])).unwrap();
        assert_eq!(tensor.to_string(), "(1⊗s̄[1])");
        assert_eq!(tensor, linear_form(&t, &p(&[1, 1])).unwrap().to_tensor());
    }

    #[test]
    fn running_example_tensors_match_forms() {
        let t = phi([12, 6, 3, 3, 3, 3, 4]);
        for (nu, _) in decomposable_partitions(&t) {
            let form = linear_form(&t, &nu).unwrap();
            assert_eq!(form.to_tensor(), tensor_of_form(&t, &nu).unwrap(), "nu = {nu}");
        }
    }

    #[test]
    fn render_lists_both_kinds() {
        let text = build_system(&phi([4, 2, 1, 1, 1, 1, 1])).render();
        assert!(text.contains("tall equations:\n  nu = [1,1]: A_{[],[1]} = chi"));
        assert!(text.contains("wide equations:\n  nu = [2]: A_{[],[1]} = 0"));
    }
}
