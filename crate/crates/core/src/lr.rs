//! Littlewood-Richardson coefficients.
//!
//! The production path counts LR tableaux: semistandard fillings of the skew
//! shape `nu/lambda` with content `mu` whose reverse reading word is a
//! lattice word. Counts are memoized in a process-wide, lock-protected cache.
//!
//! [`lr_via_pictures`] is an independent model that counts picture
//! bijections between `nu/lambda` and `mu`. It is a factorial search and is
//! only meant for small instances and cross-checking.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::symfun::SchurElement;

/// A triple `(lambda, mu, nu)` indexing `c^nu_{lambda,mu}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LrKey {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

impl LrKey {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Self {
        LrKey { lambda, mu, nu }
    }

    // lambda and mu are interchangeable
    fn canonical(&self) -> LrKey {
        if self.lambda <= self.mu {
            self.clone()
        } else {
            LrKey::new(self.mu.clone(), self.lambda.clone(), self.nu.clone())
        }
    }

    fn is_trivially_zero(&self) -> bool {
        self.nu.size() != self.lambda.size() + self.mu.size()
            || !self.nu.contains(&self.lambda)
            || !self.nu.contains(&self.mu)
    }
}

/// Largest skew size accepted by [`lr_via_pictures`].
pub const PICTURE_LIMIT: usize = 12;

fn cache() -> &'static RwLock<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<RwLock<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Number of cached coefficients.
pub fn cache_len() -> usize {
    cache().read().map(|c| c.len()).unwrap_or(0)
}

/// `c^nu_{lambda,mu}`.
///
/// Counts are enumerated leaf by leaf, so they fit in `u64` for any run that
/// terminates; downstream arithmetic is done in [`BigInt`].
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let key = LrKey::new(lambda.clone(), mu.clone(), nu.clone());
    lr_coefficient_key(&key)
}

pub fn lr_coefficient_key(key: &LrKey) -> u64 {
    if key.is_trivially_zero() {
        return 0;
    }
    if key.lambda.is_empty() || key.mu.is_empty() {
        return 1;
    }
    let key = key.canonical();
    if let Some(&c) = cache().read().expect("lr cache poisoned").get(&key) {
        return c;
    }
    // Prefer the larger partition as the inner shape: fewer skew cells.
    let (inner, content) = if key.lambda.size() >= key.mu.size() {
        (&key.lambda, &key.mu)
    } else {
        (&key.mu, &key.lambda)
    };
    let c = count_lr_tableaux(inner, content, &key.nu);
    cache().write().expect("lr cache poisoned").insert(key, c);
    c
}

pub fn lr_coefficient_big(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    BigInt::from(lr_coefficient(lambda, mu, nu))
}

struct TableauSearch<'a> {
    inner: &'a Partition,
    outer: &'a Partition,
    content: &'a [usize],
    // cells in reverse reading order: rows top to bottom, right to left
    cells: Vec<(usize, usize)>,
    filling: Vec<Vec<usize>>,
    used: Vec<usize>,
}

impl TableauSearch<'_> {
    fn count(&mut self, k: usize) -> u64 {
        if k == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[k];
        // row weakly increases left to right; we fill right to left
        let upper = if c + 1 < self.outer.part(r) {
            self.filling[r][c + 1]
        } else {
            self.content.len()
        };
        // column strictly increases downward
        let lower = if r > 0 && c >= self.inner.part(r - 1) {
            self.filling[r - 1][c] + 1
        } else {
            1
        };
        let upper = upper.min(r + 1);
        let mut total = 0;
        for v in lower..=upper {
            let idx = v - 1;
            if self.used[idx] >= self.content[idx] {
                continue;
            }
            if idx > 0 && self.used[idx] >= self.used[idx - 1] {
                continue;
            }
            self.used[idx] += 1;
            self.filling[r][c] = v;
            total += self.count(k + 1);
            self.used[idx] -= 1;
        }
        self.filling[r][c] = 0;
        total
    }
}

fn count_lr_tableaux(inner: &Partition, content: &Partition, outer: &Partition) -> u64 {
    let cells: Vec<(usize, usize)> = (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut search = TableauSearch {
        inner,
        outer,
        content: content.parts(),
        cells,
        filling: outer.parts().iter().map(|&p| vec![0; p]).collect(),
        used: vec![0; content.len()],
    };
    search.count(0)
}

/// Position of each cell in the reverse row numbering (rows top to bottom,
/// right to left within a row).
fn reverse_row_cells(outer: &Partition, inner: &Partition) -> Vec<(usize, usize)> {
    (0..outer.len())
        .flat_map(|r| (inner.part(r)..outer.part(r)).rev().map(move |c| (r, c)))
        .collect()
}

fn weakly_northwest(a: (usize, usize), b: (usize, usize)) -> bool {
    a.0 <= b.0 && a.1 <= b.1
}

/// `c^nu_{lambda,mu}` as the number of pictures between `nu/lambda` and `mu`.
///
/// A picture is a bijection such that whenever a box is weakly above and
/// weakly left of another box in either diagram, the corresponding boxes of
/// the other diagram come in order in its reverse row numbering.
pub fn lr_via_pictures(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<u64> {
    let key = LrKey::new(lambda.clone(), mu.clone(), nu.clone());
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return Ok(0);
    }
    let m = mu.size();
    if m > PICTURE_LIMIT {
        return Err(Error::TooLarge {
            measure: "skew size",
            value: m,
            limit: PICTURE_LIMIT,
        });
    }
    let source = reverse_row_cells(&key.nu, &key.lambda);
    let target = reverse_row_cells(&key.mu, &Partition::empty());
    let mut assigned = vec![usize::MAX; source.len()];
    let mut used = vec![false; target.len()];
    Ok(count_pictures(&source, &target, 0, &mut assigned, &mut used))
}

// Assigns source cells in reverse row order. Earlier source cells have
// smaller indices, so only the pair orientations that can fail are checked.
fn count_pictures(
    source: &[(usize, usize)],
    target: &[(usize, usize)],
    k: usize,
    assigned: &mut [usize],
    used: &mut [bool],
) -> u64 {
    if k == source.len() {
        return 1;
    }
    let b = source[k];
    let mut total = 0;
    'candidates: for y in 0..target.len() {
        if used[y] {
            continue;
        }
        for (idx, &fa) in assigned[..k].iter().enumerate() {
            let a = source[idx];
            // source order must be carried to target order
            if weakly_northwest(a, b) && fa > y {
                continue 'candidates;
            }
            if weakly_northwest(b, a) && y > fa {
                continue 'candidates;
            }
            // target order must be carried back: B comes after A in the source
            if weakly_northwest(target[y], target[fa]) {
                continue 'candidates;
            }
        }
        used[y] = true;
        assigned[k] = y;
        total += count_pictures(source, target, k + 1, assigned, used);
        used[y] = false;
        assigned[k] = usize::MAX;
    }
    total
}

/// `s_lambda * s_mu` in the full ring of symmetric functions.
pub fn schur_product_expand(lambda: &Partition, mu: &Partition) -> SchurElement {
    let size = lambda.size() + mu.size();
    let rows = lambda.len() + mu.len();
    let cols = lambda.first() + mu.first();
    let mut out = SchurElement::zero();
    for nu in crate::partition::partitions_within(rows, cols, Some(size)) {
        if !nu.contains(lambda) || !nu.contains(mu) {
            continue;
        }
        let c = lr_coefficient(lambda, mu, &nu);
        if c != 0 {
            out.add_term(nu, BigInt::from(c));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn golden_picture_example() {
        let (l, m, n) = (p(&[3, 2, 2, 2]), p(&[4, 3, 1]), p(&[5, 4, 3, 2, 2, 1]));
        assert_eq!(lr_coefficient(&l, &m, &n), 4);
        assert_eq!(lr_via_pictures(&l, &m, &n).unwrap(), 4);
    }

    #[test]
    fn small_values() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[3, 1])), 1);
        let l = p(&[3, 2]);
        assert_eq!(lr_coefficient(&l, &Partition::empty(), &l), 1);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), 0);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn picture_small_values() {
        assert_eq!(lr_via_pictures(&p(&[1]), &p(&[1]), &p(&[1, 1])).unwrap(), 1);
        assert_eq!(
            lr_via_pictures(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(),
            2
        );
        assert_eq!(lr_via_pictures(&p(&[2]), &p(&[1]), &p(&[1, 1, 1])).unwrap(), 0);
    }

    #[test]
    fn picture_limit_enforced() {
        let big = p(&[7, 6]);
        let r = lr_via_pictures(&Partition::empty(), &big, &big);
        assert!(matches!(r, Err(Error::TooLarge { .. })));
    }

    #[test]
    fn product_expansions() {
        let e = schur_product_expand(&p(&[1]), &p(&[1]));
        assert_eq!(e.to_string(), "s[2] + s[1,1]");
        let e = schur_product_expand(&p(&[2, 1]), &p(&[1]));
        assert_eq!(e.to_string(), "s[3,1] + s[2,2] + s[2,1,1]");
        let e = schur_product_expand(&p(&[2, 1]), &Partition::empty());
        assert_eq!(e.to_string(), "s[2,1]");
    }
}
