//! Reduction of a tall equation's tensor by repeated CP elimination.
//!
//! Starting from `CP(s_{nu_B} (x) 1)`, any term `g * s_lambda (x) prod`
//! with `|lambda| > 0` is eliminated by subtracting `g * CP(s_lambda (x)
//! prod)`, keeping right factors as unexpanded products. When only terms
//! with empty left factor remain, the right products are multiplied out.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;

use super::forms::decompose;
use super::tuple::ValidTuple;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfun::{cp_map, expand_formal_tensor, FormalKey, FormalTensor, SchurElement, TensorElement};

/// One elimination: the term removed and the state it produced.
#[derive(Debug, Clone)]
pub struct Step {
    pub eliminated: FormalKey,
    pub coefficient: BigInt,
    pub after: FormalTensor,
}

/// A run of the reduction on one tall partition.
#[derive(Debug, Clone)]
pub struct Reduction {
    tuple: ValidTuple,
    nu_b: Partition,
    state: FormalTensor,
    steps: Vec<Step>,
    keep_states: bool,
}

/// Canonical choice order: larger left factor first, then the left factor
/// that is lexicographically largest, then the smaller right multiset.
pub fn canonical_order(x: &FormalKey, y: &FormalKey) -> Ordering {
    y.left
        .size()
        .cmp(&x.left.size())
        .then_with(|| x.left.cmp(&y.left))
        .then_with(|| x.right.cmp(&y.right))
}

impl Reduction {
    /// Initializes `xi^(0) = CP(s_{nu_B} (x) 1)` for a tall decomposable `nu`.
    pub fn start(phi: &ValidTuple, nu: &Partition) -> Result<Self> {
        let d = decompose(phi, nu)?
            .ok_or_else(|| Error::Precondition(format!("{nu} is not decomposable for {phi}")))?;
        if !d.tall {
            return Err(Error::Precondition(format!("{nu} is wide, not tall")));
        }
        let state = cp_map(&d.nu_b, &[], phi.ambient())?;
        Ok(Reduction {
            tuple: *phi,
            nu_b: d.nu_b,
            state,
            steps: Vec::new(),
            keep_states: false,
        })
    }

    /// Keep a copy of every intermediate state in [`Reduction::steps`].
    pub fn keep_states(mut self, keep: bool) -> Self {
        self.keep_states = keep;
        self
    }

    pub fn tuple(&self) -> &ValidTuple {
        &self.tuple
    }

    pub fn nu_b(&self) -> &Partition {
        &self.nu_b
    }

    pub fn state(&self) -> &FormalTensor {
        &self.state
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Terms that can still be eliminated, in canonical order.
    pub fn pending(&self) -> Vec<FormalKey> {
        let mut keys: Vec<FormalKey> = self
            .state
            .terms()
            .filter(|(k, _)| !k.left.is_empty())
            .map(|(k, _)| k.clone())
            .collect();
        keys.sort_by(canonical_order);
        keys
    }

    pub fn is_done(&self) -> bool {
        self.state.terms().all(|(k, _)| k.left.is_empty())
    }

    /// Number of eliminable terms per left-factor size, largest size first.
    /// Strictly decreases lexicographically with every step.
    pub fn measure(&self) -> Vec<usize> {
        let top = self.nu_b.size();
        let mut counts = vec![0; top];
        for (k, _) in self.state.terms() {
            let s = k.left.size();
            if s > 0 {
                counts[top - s] += 1;
            }
        }
        counts
    }

    /// Eliminates the given term.
    pub fn step(&mut self, key: &FormalKey) -> Result<()> {
        let gamma = self.state.coeff(key);
        if gamma.is_zero() || key.left.is_empty() {
            return Err(Error::Precondition(format!("{key} is not an eliminable term")));
        }
        let before = self.measure();
        let cp = cp_map(&key.left, &key.right, self.state.rect())?;
        self.state.add_scaled(&cp, &-gamma.clone());
        if !self.state.coeff(key).is_zero() {
            return Err(Error::Internal(format!("{key} survived its own elimination")));
        }
        if self.measure() >= before {
            return Err(Error::Internal(format!("measure did not decrease at {key}")));
        }
        if !self.state.has_alternating_signs() {
            return Err(Error::Internal(format!("sign pattern broken after {key}")));
        }
        let after = if self.keep_states {
            self.state.clone()
        } else {
            FormalTensor::zero(self.state.rect())
        };
        self.steps.push(Step {
            eliminated: key.clone(),
            coefficient: gamma,
            after,
        });
        Ok(())
    }

    /// Runs to completion, letting `choose` pick an index into
    /// [`Reduction::pending`] at every step.
    pub fn run_with(&mut self, mut choose: impl FnMut(&[FormalKey]) -> usize) -> Result<()> {
        loop {
            let pending = self.pending();
            if pending.is_empty() {
                return Ok(());
            }
            let k = choose(&pending);
            let key = pending
                .get(k)
                .ok_or_else(|| Error::Precondition(format!("choice {k} out of range")))?;
            self.step(key)?;
        }
    }

    pub fn run_canonical(&mut self) -> Result<()> {
        self.run_with(|_| 0)
    }

    pub fn run_random<R: Rng>(&mut self, rng: &mut R) -> Result<()> {
        self.run_with(|p| rng.gen_range(0..p.len()))
    }

    /// The terminal state, expanded. Fails if terms are still pending.
    pub fn output(&self) -> Result<TensorElement> {
        if !self.is_done() {
            return Err(Error::Precondition("reduction has not terminated".into()));
        }
        Ok(expand_formal_tensor(&self.state))
    }
}

/// `Reduce_phi(nu)` with the canonical choice rule.
pub fn reduce_tall(phi: &ValidTuple, nu: &Partition) -> Result<TensorElement> {
    let mut run = Reduction::start(phi, nu)?;
    run.run_canonical()?;
    run.output()
}

/// `(-1)^{|nu_B|+1} (1 (x) s_{nu_B'})`.
pub fn closed_form(phi: &ValidTuple, nu_b: &Partition) -> TensorElement {
    let sign = if nu_b.size() % 2 == 1 { BigInt::one() } else { -BigInt::one() };
    let f = SchurElement::basis(nu_b.conjugate()).scale(&sign);
    crate::symfun::one_tensor(&f, phi.ambient())
}
