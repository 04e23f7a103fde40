use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::lr::{lr_coefficient, schur_product_expand};
use crate::partition::{partitions_in_box, Partition, Rect};

/// A finite integer combination of Schur functions.
///
/// Used both for the full ring and for its quotient by the ideal of Schur
/// functions whose shape does not fit a fixed rectangle; in the latter case
/// every support partition fits that rectangle.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SchurElement {
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        let mut out = Self::zero();
        out.coeffs.insert(lambda, BigInt::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, BigInt)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (p, c) in terms {
            out.add_term(p, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        accumulate(&mut self.coeffs, lambda, c);
    }

    pub fn coeff(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
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
        if c.is_zero() {
            return Self::zero();
        }
        SchurElement {
            coeffs: self.coeffs.iter().map(|(p, v)| (p.clone(), v * c)).collect(),
        }
    }

    pub fn fits_in(&self, rect: Rect) -> bool {
        self.coeffs.keys().all(|p| p.fits_in(rect))
    }

    /// Applies `s_lambda -> s_lambda'`.
    pub fn omega(&self) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(p, c)| (p.conjugate(), c.clone())))
    }
}

impl AddAssign<&SchurElement> for SchurElement {
    fn add_assign(&mut self, rhs: &SchurElement) {
        for (p, c) in &rhs.coeffs {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl SubAssign<&SchurElement> for SchurElement {
    fn sub_assign(&mut self, rhs: &SchurElement) {
        for (p, c) in &rhs.coeffs {
            self.add_term(p.clone(), -c.clone());
        }
    }
}

impl Add for &SchurElement {
    type Output = SchurElement;
    fn add(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &SchurElement {
    type Output = SchurElement;
    fn sub(self, rhs: &SchurElement) -> SchurElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &SchurElement {
    type Output = SchurElement;
    fn neg(self) -> SchurElement {
        self.scale(&BigInt::from(-1))
    }
}

/// Adds `c` at `key`, removing the entry if it cancels.
pub(crate) fn accumulate<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: BigInt) {
    if c.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

pub(crate) fn write_coefficient(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    c: &BigInt,
) -> fmt::Result {
    match (first, c.is_negative()) {
        (true, false) => {}
        (true, true) => write!(f, "-")?,
        (false, false) => write!(f, " + ")?,
        (false, true) => write!(f, " - ")?,
    }
    let mag = c.abs();
    if !mag.is_one() {
        write!(f, "{mag}")?;
    }
    Ok(())
}

impl fmt::Display for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.coeffs.iter().enumerate() {
            write_coefficient(f, k == 0, c)?;
            if !c.abs().is_one() {
                write!(f, " ")?;
            }
            write!(f, "s{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SchurElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The quotient map onto the rectangle: drops every shape that does not fit.
pub fn project_to_box(f: &SchurElement, rect: Rect) -> SchurElement {
    SchurElement {
        coeffs: f
            .coeffs
            .iter()
            .filter(|(p, _)| p.fits_in(rect))
            .map(|(p, c)| (p.clone(), c.clone()))
            .collect(),
    }
}

type ProductKey = (Partition, Partition, Option<Rect>);

fn product_cache() -> &'static RwLock<HashMap<ProductKey, SchurElement>> {
    static CACHE: OnceLock<RwLock<HashMap<ProductKey, SchurElement>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `s_alpha * s_beta`, truncated to `rect` when given.
pub fn basis_product(alpha: &Partition, beta: &Partition, rect: Option<Rect>) -> SchurElement {
    if alpha.is_empty() || beta.is_empty() {
        let other = if alpha.is_empty() { beta } else { alpha };
        return match rect {
            Some(r) if !other.fits_in(r) => SchurElement::zero(),
            _ => SchurElement::basis(other.clone()),
        };
    }
    let key = if alpha <= beta {
        (alpha.clone(), beta.clone(), rect)
    } else {
        (beta.clone(), alpha.clone(), rect)
    };
    if let Some(hit) = product_cache().read().expect("product cache").get(&key) {
        return hit.clone();
    }
    let out = match rect {
        None => schur_product_expand(alpha, beta),
        Some(r) => {
            let size = alpha.size() + beta.size();
            let mut out = SchurElement::zero();
            for nu in partitions_in_box(r, Some(size)) {
                if !nu.contains(alpha) || !nu.contains(beta) {
                    continue;
                }
                let c = lr_coefficient(alpha, beta, &nu);
                if c != 0 {
                    out.add_term(nu, BigInt::from(c));
                }
            }
            out
        }
    };
    product_cache()
        .write()
        .expect("product cache")
        .insert(key, out.clone());
    out
}

/// Bilinear product. With a rectangle the inputs are expected to fit it and
/// the result is truncated to it.
pub fn multiply(f: &SchurElement, g: &SchurElement, rect: Option<Rect>) -> SchurElement {
    let mut out = SchurElement::zero();
    for (a, ca) in &f.coeffs {
        for (b, cb) in &g.coeffs {
            let prod = basis_product(a, b, rect);
            out += &prod.scale(&(ca * cb));
        }
    }
    out
}

/// `S(s_lambda) = (-1)^{|lambda|} s_lambda'`, extended linearly.
pub fn antipode(f: &SchurElement) -> SchurElement {
    SchurElement::from_terms(f.coeffs.iter().map(|(p, c)| {
        let c = if p.size() % 2 == 1 { -c.clone() } else { c.clone() };
        (p.conjugate(), c)
    }))
}

/// `mult . (S (x) id) . coproduct` applied to `s_nu`.
pub fn hopf_convolution(nu: &Partition) -> SchurElement {
    let delta = super::coproduct(nu);
    let mut out = SchurElement::zero();
    for ((lambda, mu), c) in delta.terms() {
        let left = antipode(&SchurElement::basis(lambda.clone()));
        let prod = multiply(&left, &SchurElement::basis(mu.clone()), None);
        out += &prod.scale(c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn s(parts: &[usize]) -> SchurElement {
        SchurElement::basis(p(parts))
    }

    #[test]
    fn projection_examples() {
        let b = Rect::new(2, 2).unwrap();
        assert!(project_to_box(&s(&[3]), b).is_zero());
        assert_eq!(project_to_box(&s(&[2, 1]), b), s(&[2, 1]));
        let f = &(&s(&[4]) + &s(&[3, 1])) + &s(&[2, 2]);
        assert_eq!(project_to_box(&f, b), s(&[2, 2]));
    }

    #[test]
    fn multiplication_examples() {
        let b = Some(Rect::new(2, 2).unwrap());
        assert_eq!(multiply(&s(&[1]), &s(&[1]), b), &s(&[2]) + &s(&[1, 1]));
        assert_eq!(multiply(&s(&[2]), &s(&[2]), b), s(&[2, 2]));
        let f = &s(&[2, 1]) - &s(&[3]);
        assert_eq!(multiply(&f, &SchurElement::one(), None), f);
    }

    #[test]
    fn antipode_examples() {
        assert_eq!(antipode(&s(&[1])), -&s(&[1]));
        assert_eq!(antipode(&s(&[2, 1])), -&s(&[2, 1]));
        assert_eq!(antipode(&s(&[3, 1])), s(&[2, 1, 1]));
    }

    #[test]
    fn convolution_examples() {
        assert!(hopf_convolution(&p(&[1])).is_zero());
        assert!(hopf_convolution(&p(&[2, 1])).is_zero());
        assert_eq!(hopf_convolution(&Partition::empty()), SchurElement::one());
    }

    #[test]
    fn cancellation_removes_entries() {
        let mut f = s(&[2]);
        f.add_term(p(&[2]), BigInt::from(-1));
        assert!(f.is_zero());
        assert_eq!(f.to_string(), "0");
    }

    #[test]
    fn rendering() {
        let f = SchurElement::from_terms([
            (p(&[1, 1]), BigInt::from(-2)),
            (p(&[2]), BigInt::from(1)),
            (p(&[]), BigInt::from(-1)),
        ]);
        assert_eq!(f.to_string(), "-s[] + s[2] - 2 s[1,1]");
    }
}
