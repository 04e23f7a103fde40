use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use super::schur::{accumulate, basis_product, multiply, write_coefficient, SchurElement};
use crate::error::{Error, Result};
use crate::lr::lr_coefficient;
use crate::partition::{partitions_of, subpartitions, Partition, Rect};

/// An element of the tensor square, in the basis `s_lambda (x) s_theta`.
///
/// `rect` is `None` for the full ring and `Some` for the quotient by a
/// rectangle, in which case both factors of every term fit it.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElement {
    rect: Option<Rect>,
    coeffs: BTreeMap<(Partition, Partition), BigInt>,
}

impl TensorElement {
    pub fn zero(rect: Option<Rect>) -> Self {
        TensorElement {
            rect,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn rect(&self) -> Option<Rect> {
        self.rect
    }

    pub fn add_term(&mut self, left: Partition, right: Partition, c: BigInt) {
        if let Some(r) = self.rect {
            if !left.fits_in(r) || !right.fits_in(r) {
                return;
            }
        }
        accumulate(&mut self.coeffs, (left, right), c);
    }

    pub fn coeff(&self, left: &Partition, right: &Partition) -> BigInt {
        self.coeffs
            .get(&(left.clone(), right.clone()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.rect);
        for ((l, r), v) in &self.coeffs {
            out.add_term(l.clone(), r.clone(), v * c);
        }
        out
    }

    pub fn add_assign(&mut self, other: &TensorElement) {
        for ((l, r), v) in &other.coeffs {
            self.add_term(l.clone(), r.clone(), v.clone());
        }
    }

    /// Projects both factors onto the rectangle.
    pub fn project(&self, rect: Rect) -> TensorElement {
        let mut out = Self::zero(Some(rect));
        for ((l, r), v) in &self.coeffs {
            out.add_term(l.clone(), r.clone(), v.clone());
        }
        out
    }

    /// Product in the tensor-square ring: `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let rect = self.rect.or(other.rect);
        let mut out = Self::zero(rect);
        for ((a, b), x) in &self.coeffs {
            for ((c, d), y) in &other.coeffs {
                let left = basis_product(a, c, rect);
                let right = basis_product(b, d, rect);
                let xy = x * y;
                for (l, lc) in left.terms() {
                    for (r, rc) in right.terms() {
                        out.add_term(l.clone(), r.clone(), &xy * lc * rc);
                    }
                }
            }
        }
        out
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, p: &Partition, bar: bool) -> fmt::Result {
    if p.is_empty() {
        write!(f, "1")
    } else if bar {
        write!(f, "s̄{p}")
    } else {
        write!(f, "s{p}")
    }
}

fn write_term_coefficient(f: &mut fmt::Formatter<'_>, first: bool, c: &BigInt) -> fmt::Result {
    write_coefficient(f, first, c)?;
    write!(f, "(")
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let bar = self.rect.is_some();
        for (k, ((l, r), c)) in self.coeffs.iter().enumerate() {
            write_term_coefficient(f, k == 0, c)?;
            write_factor(f, l, bar)?;
            write!(f, "⊗")?;
            write_factor(f, r, bar)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A left Schur index paired with an unexpanded product of right factors.
///
/// The right factors form a multiset, stored sorted; the empty multiset is
/// the factor `1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FormalKey {
    pub left: Partition,
    pub right: Vec<Partition>,
}

impl FormalKey {
    pub fn new(left: Partition, right: impl IntoIterator<Item = Partition>) -> Self {
        let mut right: Vec<Partition> = right.into_iter().filter(|p| !p.is_empty()).collect();
        right.sort();
        FormalKey { left, right }
    }

    /// Number of right factors.
    pub fn arity(&self) -> usize {
        self.right.len()
    }

    /// Total degree of left and right factors.
    pub fn degree(&self) -> usize {
        self.left.size() + self.right.iter().map(Partition::size).sum::<usize>()
    }
}

impl fmt::Display for FormalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factor(f, &self.left, true)?;
        write!(f, "⊗")?;
        if self.right.is_empty() {
            return write!(f, "1");
        }
        for p in &self.right {
            write_factor(f, p, true)?;
        }
        Ok(())
    }
}

/// Tensors whose right factors are kept as unexpanded products.
#[derive(Clone, PartialEq, Eq)]
pub struct FormalTensor {
    rect: Rect,
    terms: BTreeMap<FormalKey, BigInt>,
}

impl FormalTensor {
    pub fn zero(rect: Rect) -> Self {
        FormalTensor {
            rect,
            terms: BTreeMap::new(),
        }
    }

    pub fn rect(&self) -> Rect {
        self.rect
    }

    pub fn add_term(&mut self, key: FormalKey, c: BigInt) {
        let fits = key.left.fits_in(self.rect) && key.right.iter().all(|p| p.fits_in(self.rect));
        if fits {
            accumulate(&mut self.terms, key, c);
        }
    }

    pub fn coeff(&self, key: &FormalKey) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormalKey, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FormalTensor, c: &BigInt) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Whether every coefficient of a term with `k` right factors has sign
    /// `(-1)^(k+1)`.
    pub fn has_alternating_signs(&self) -> bool {
        self.terms
            .iter()
            .all(|(k, c)| c.is_positive() == (k.arity() % 2 == 1))
    }
}

impl fmt::Display for FormalTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (key, c)) in self.terms.iter().enumerate() {
            write_term_coefficient(f, k == 0, c)?;
            write!(f, "{key})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FormalTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Pairs `(lambda, mu)` with `c^nu_{lambda,mu} != 0`, with the coefficient.
fn coproduct_terms(nu: &Partition) -> Vec<(Partition, Partition, u64)> {
    let mut out = Vec::new();
    for lambda in subpartitions(nu) {
        for mu in partitions_of(nu.size() - lambda.size()) {
            if !nu.contains(&mu) {
                continue;
            }
            let c = lr_coefficient(&lambda, &mu, nu);
            if c != 0 {
                out.push((lambda.clone(), mu, c));
            }
        }
    }
    out
}

/// `Delta(s_nu) = sum c^nu_{lambda,mu} s_lambda (x) s_mu` in the full ring.
pub fn coproduct(nu: &Partition) -> TensorElement {
    let mut out = TensorElement::zero(None);
    for (l, m, c) in coproduct_terms(nu) {
        out.add_term(l, m, BigInt::from(c));
    }
    out
}

/// The CP map on a formal simple tensor `s_left (x) prod(right)`.
///
/// With no right factors this is the projected coproduct of `s_left` minus
/// `s_left (x) 1`. Otherwise it is the projected coproduct times
/// `1 (x) prod(right)`, each coproduct term `s_rho (x) s_tau` contributing
/// `s_rho (x) prod(right) s_tau`. Terms leaving the rectangle are dropped.
pub fn cp_map(left: &Partition, right: &[Partition], rect: Rect) -> Result<FormalTensor> {
    if !left.fits_in(rect) {
        return Err(Error::Precondition(format!("{left} does not fit {rect}")));
    }
    if let Some(p) = right.iter().find(|p| !p.fits_in(rect)) {
        return Err(Error::Precondition(format!("{p} does not fit {rect}")));
    }
    let base = FormalKey::new(left.clone(), right.iter().cloned());
    let mut out = FormalTensor::zero(rect);
    for (rho, tau, c) in coproduct_terms(left) {
        if base.right.is_empty() && tau.is_empty() {
            continue;
        }
        let factors = base.right.iter().cloned().chain(std::iter::once(tau));
        out.add_term(FormalKey::new(rho, factors), BigInt::from(c));
    }
    Ok(out)
}

/// Product of a multiset of Schur functions in the quotient.
pub fn product_of_factors(factors: &[Partition], rect: Rect) -> SchurElement {
    factors
        .iter()
        .fold(SchurElement::one(), |acc, p| {
            multiply(&acc, &SchurElement::basis(p.clone()), Some(rect))
        })
}

/// Multiplies out every right product inside the quotient and collects terms.
pub fn expand_formal_tensor(t: &FormalTensor) -> TensorElement {
    let rect = t.rect;
    let mut products: HashMap<&[Partition], SchurElement> = HashMap::new();
    let mut out = TensorElement::zero(Some(rect));
    for (key, c) in &t.terms {
        let prod = products
            .entry(key.right.as_slice())
            .or_insert_with(|| product_of_factors(&key.right, rect));
        for (theta, d) in prod.terms() {
            out.add_term(key.left.clone(), theta.clone(), c * d);
        }
    }
    out
}

impl From<&SchurElement> for TensorElement {
    /// `f (x) 1`.
    fn from(f: &SchurElement) -> Self {
        let mut out = TensorElement::zero(None);
        for (p, c) in f.terms() {
            out.add_term(p.clone(), Partition::empty(), c.clone());
        }
        out
    }
}

/// `1 (x) f` in the quotient.
pub fn one_tensor(f: &SchurElement, rect: Rect) -> TensorElement {
    let mut out = TensorElement::zero(Some(rect));
    for (p, c) in f.terms() {
        out.add_term(Partition::empty(), p.clone(), c.clone());
    }
    out
}
