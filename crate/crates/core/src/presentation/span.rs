//! Tall rows against the span of wide rows, and the blow-up/restriction
//! relation between systems for different tuples.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::forms::{build_system, decompose, variables, Decomposition, LinearForm};
use super::tuple::ValidTuple;
use crate::error::{Error, Result};
use crate::linalg::{rational_string, Rational, SpanMembership};
use crate::partition::Partition;

/// Per tall row: either rational weights on the wide rows that reproduce it,
/// or a vector on the variables killing every wide row but not this one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TallCertificate {
    Combination(Vec<(Partition, Rational)>),
    Separating(Vec<Rational>),
}

#[derive(Debug, Clone, Serialize)]
pub struct SpanReport {
    pub tuple: ValidTuple,
    pub tall_rows: usize,
    pub wide_rows: usize,
    pub variables: usize,
    /// Every tall row lies in the span and every certificate re-checked.
    pub holds: bool,
    #[serde(serialize_with = "serialize_certificates")]
    pub certificates: Vec<(Partition, TallCertificate)>,
}

fn serialize_certificates<S: serde::Serializer>(
    certs: &[(Partition, TallCertificate)],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(certs.len()))?;
    for (nu, cert) in certs {
        let value = match cert {
            TallCertificate::Combination(w) => serde_json::json!({
                "nu": nu.to_string(),
                "in_span": true,
                "weights": w.iter()
                    .map(|(row, q)| serde_json::json!({"row": row.to_string(), "coefficient": rational_string(q)}))
                    .collect::<Vec<_>>(),
            }),
            TallCertificate::Separating(y) => serde_json::json!({
                "nu": nu.to_string(),
                "in_span": false,
                "witness": y.iter().map(rational_string).collect::<Vec<_>>(),
            }),
        };
        seq.serialize_element(&value)?;
    }
    seq.end()
}

/// Decides whether every tall row is a rational combination of wide rows.
/// When it is, the decomposable equations with zero wide right sides and a
/// nonzero tall right side have no solution.
pub fn tall_in_wide_span(phi: &ValidTuple) -> Result<SpanReport> {
    let system = build_system(phi);
    let wide: Vec<&LinearForm> = system.wide_rows().collect();
    let tall: Vec<&LinearForm> = system.tall_rows().collect();
    let matrix = system.matrix(wide.iter().copied());
    let targets: Vec<Vec<Rational>> = tall.iter().map(|r| r.to_vector(&system.variables)).collect();
    let verdicts = matrix.in_row_span_many(&targets)?;

    let mut holds = true;
    let mut certificates = Vec::with_capacity(tall.len());
    for ((row, target), verdict) in tall.iter().zip(&targets).zip(verdicts) {
        if !matrix.verify_membership(target, &verdict) {
            return Err(Error::Internal(format!("certificate for {} failed re-check", row.label)));
        }
        let cert = match verdict {
            SpanMembership::InSpan(c) => TallCertificate::Combination(
                wide.iter()
                    .zip(c)
                    .filter(|(_, q)| !q.is_zero())
                    .map(|(w, q)| (w.label.clone(), q))
                    .collect(),
            ),
            SpanMembership::NotInSpan(y) => {
                holds = false;
                TallCertificate::Separating(y)
            }
        };
        certificates.push((row.label.clone(), cert));
    }
    Ok(SpanReport {
        tuple: *phi,
        tall_rows: tall.len(),
        wide_rows: wide.len(),
        variables: system.variables.len(),
        holds,
        certificates,
    })
}

/// `(4^q n, 2^q r, i, 2^q j, a, b, N)`.
pub fn blowup_tuple(phi: &ValidTuple, q: u32) -> ValidTuple {
    let (two, four) = (1usize << q, 1usize << (2 * q));
    ValidTuple::new(
        four * phi.n,
        two * phi.r,
        phi.i,
        two * phi.j,
        phi.a,
        phi.b,
        phi.degree,
    )
    .expect("blow-ups of valid tuples are valid")
}

/// The `q` with `big = blowup_tuple(phi, q)`, if any.
pub fn blowup_level(phi: &ValidTuple, big: &ValidTuple) -> Option<u32> {
    (0..8).find(|&q| {
        let two = 1usize << q;
        two * phi.j <= big.j && &blowup_tuple(phi, q) == big
    })
}

/// The blown-up partition: the same `nu_B` and `nu_R` around `i^{2^q j}`.
pub fn blowup_partition(phi: &ValidTuple, nu: &Partition, q: u32) -> Result<Partition> {
    let d = decompose(phi, nu)?
        .ok_or_else(|| Error::Precondition(format!("{nu} is not decomposable for {phi}")))?;
    let big = blowup_tuple(phi, q);
    d.recompose(big.i, big.j)
}

/// Sets every variable outside `phi`'s own index set to zero in a form
/// built for a blow-up of `phi`, and relabels it by the matching `nu`.
pub fn restrict_form(f: &LinearForm, phi: &ValidTuple) -> Result<LinearForm> {
    let big = f.tuple;
    if blowup_level(phi, &big).is_none() {
        return Err(Error::Precondition(format!("{big} is not a blow-up of {phi}")));
    }
    let Some(Decomposition { nu_b, nu_r, tall }) = decompose(&big, &f.label)? else {
        return Err(Error::Precondition(format!("{} is not decomposable for {big}", f.label)));
    };
    let label = Decomposition { nu_b, nu_r, tall }.recompose(phi.i, phi.j)?;
    let kept: std::collections::BTreeSet<_> = variables(phi).into_iter().collect();
    let coeffs: BTreeMap<_, _> = f
        .coeffs
        .iter()
        .filter(|(v, _)| kept.contains(*v))
        .map(|(v, c)| (v.clone(), c.clone()))
        .collect();
    Ok(LinearForm {
        tuple: *phi,
        label,
        tall,
        coeffs,
    })
}
