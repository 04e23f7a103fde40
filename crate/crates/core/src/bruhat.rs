//! Permutations, Bruhat order, essential sets and the search for `w` with a
//! single prescribed essential element.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest `n` for which the brute-force searches run by default.
pub const DEFAULT_BOUND: usize = 7;

/// A permutation of `1..=n` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &x in &one_line {
            if x == 0 || x > n || seen[x] {
                return Err(Error::Parse {
                    what: "permutation",
                    input: format!("{one_line:?}"),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation(one_line))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn longest(n: usize) -> Self {
        Permutation((1..=n).rev().collect())
    }

    pub fn one_line(&self) -> &[usize] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// `w(k)` for `1 <= k <= n`.
    pub fn at(&self, k: usize) -> usize {
        self.0[k - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (k, &x) in self.0.iter().enumerate() {
            inv[x - 1] = k + 1;
        }
        Permutation(inv)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.0;
        (0..w.len())
            .map(|p| (p + 1..w.len()).filter(|&q| w[p] > w[q]).count())
            .sum()
    }

    /// Positions `k` with `w(k) > w(k+1)`.
    pub fn descents(&self) -> Vec<usize> {
        self.0
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(k, _)| k + 1)
            .collect()
    }

    /// Exactly one descent.
    pub fn is_grassmannian(&self) -> bool {
        self.descents().len() == 1
    }

    pub fn is_bigrassmannian(&self) -> bool {
        self.is_grassmannian() && self.inverse().is_grassmannian()
    }

    /// Swaps the values in positions `p < q` (1-based).
    pub fn transpose_positions(&self, p: usize, q: usize) -> Permutation {
        let mut w = self.0.clone();
        w.swap(p - 1, q - 1);
        Permutation(w)
    }

    /// Every permutation of `1..=n`, in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n);
        let mut used = vec![false; n + 1];
        fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if current.len() == n {
                out.push(Permutation(current.clone()));
                return;
            }
            for x in 1..=n {
                if !used[x] {
                    used[x] = true;
                    current.push(x);
                    rec(n, current, used, out);
                    current.pop();
                    used[x] = false;
                }
            }
        }
        rec(n, &mut current, &mut used, &mut out);
        out
    }

    // rank[p][q] = #{k <= p : w(k) >= q}, for 1 <= p, q <= n
    fn rank_table(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut table = vec![vec![0u8; n + 2]; n + 1];
        for p in 1..=n {
            let v = self.at(p);
            for q in 1..=n {
                table[p][q] = table[p - 1][q] + u8::from(v >= q);
            }
        }
        table
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "permutation",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?;
        if inner.trim().is_empty() {
            return Ok(Permutation(Vec::new()));
        }
        let v = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(v).map_err(|_| err())
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `v_{r,s,t,n}`: `1..t-1, s+1..s+r-t+1, t..s, s+r-t+2..n`.
pub fn bigrassmannian_v(r: usize, s: usize, t: usize, n: usize) -> Result<Permutation> {
    crate::presentation::Bigrassmannian::new(r, s, t, n)?;
    let mut w: Vec<usize> = (1..t).collect();
    w.extend(s + 1..=s + r - t + 1);
    w.extend(t..=s);
    w.extend(s + r - t + 2..=n);
    let v = Permutation::new(w).map_err(|e| Error::Internal(format!("v_({r},{s},{t},{n}): {e}")))?;
    if v.descents() != [r] || v.inverse().descents() != [s] || v.at(t) != s + 1 {
        return Err(Error::Internal(format!("v_({r},{s},{t},{n}) = {v} fails its defining properties")));
    }
    Ok(v)
}

fn check_same_n(u: &Permutation, w: &Permutation) -> Result<()> {
    if u.n() != w.n() {
        return Err(Error::DimensionMismatch {
            expected: w.n(),
            got: u.n(),
        });
    }
    Ok(())
}

/// `u <= w` in Bruhat order, by comparing rank tables.
pub fn bruhat_leq(u: &Permutation, w: &Permutation) -> Result<bool> {
    check_same_n(u, w)?;
    Ok(leq_tables(&u.rank_table(), &w.rank_table()))
}

fn leq_tables(u: &[Vec<u8>], w: &[Vec<u8>]) -> bool {
    u.iter().zip(w).all(|(ur, wr)| ur.iter().zip(wr).all(|(x, y)| x <= y))
}

/// Permutations covering `w`: `w t_{pq}` with length exactly one more.
pub fn covers(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let mut out = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            let (x, y) = (w.at(p), w.at(q));
            if x < y && (p + 1..q).all(|k| w.at(k) < x || w.at(k) > y) {
                out.push(w.transpose_positions(p, q));
            }
        }
    }
    out
}

/// Permutations covered by `w`.
pub fn lower_covers(w: &Permutation) -> Vec<Permutation> {
    let n = w.n();
    let mut out = Vec::new();
    for p in 1..=n {
        for q in p + 1..=n {
            let (x, y) = (w.at(p), w.at(q));
            if x > y && (p + 1..q).all(|k| w.at(k) > x || w.at(k) < y) {
                out.push(w.transpose_positions(p, q));
            }
        }
    }
    out
}

fn check_bound(n: usize, bound: usize) -> Result<()> {
    if n > bound {
        return Err(Error::TooLarge {
            measure: "n",
            value: n,
            limit: bound,
        });
    }
    Ok(())
}

/// `S_n` with rank tables, shared by the searches below.
struct Universe {
    perms: Vec<Permutation>,
    tables: Vec<Vec<Vec<u8>>>,
    lower: Vec<Vec<usize>>,
}

impl Universe {
    fn new(n: usize) -> Self {
        let perms = Permutation::all(n);
        let tables = perms.par_iter().map(Permutation::rank_table).collect();
        let lower = perms
            .par_iter()
            .map(|u| {
                lower_covers(u)
                    .iter()
                    .map(|c| perms.binary_search(c).expect("listed"))
                    .collect()
            })
            .collect();
        Universe { perms, tables, lower }
    }

    fn index(&self, w: &Permutation) -> usize {
        self.perms.binary_search(w).expect("every permutation is listed")
    }

    fn leq(&self, a: usize, b: usize) -> bool {
        leq_tables(&self.tables[a], &self.tables[b])
    }

    /// Minimal elements of `{u : u not <= w}`. That set is closed upwards,
    /// so `u` is minimal exactly when everything it covers lies below `w`.
    fn essential(&self, w: usize) -> Vec<usize> {
        (0..self.perms.len())
            .filter(|&u| !self.leq(u, w) && self.lower[u].iter().all(|&x| self.leq(x, w)))
            .collect()
    }
}

/// `E(w)`: the Bruhat-minimal permutations not below `w`.
pub fn essential_set(w: &Permutation) -> Result<Vec<Permutation>> {
    essential_set_bounded(w, DEFAULT_BOUND)
}

pub fn essential_set_bounded(w: &Permutation, bound: usize) -> Result<Vec<Permutation>> {
    check_bound(w.n(), bound)?;
    let uni = Universe::new(w.n());
    Ok(uni
        .essential(uni.index(w))
        .into_iter()
        .map(|k| uni.perms[k].clone())
        .collect())
}

/// A `w` with `E(w) = {v}`, together with the check that `{u : u not <= w}`
/// and `{u : u >= v}` coincide.
#[derive(Debug, Clone, Serialize)]
pub struct FoundW {
    pub w: Permutation,
    pub complement_size: usize,
    pub sets_equal: bool,
}

/// Every `w` in `S_n` whose essential set is exactly `{v}`.
pub fn find_w_for_v(v: &Permutation, n: usize) -> Result<Vec<FoundW>> {
    find_w_for_v_bounded(v, n, DEFAULT_BOUND)
}

pub fn find_w_for_v_bounded(v: &Permutation, n: usize, bound: usize) -> Result<Vec<FoundW>> {
    check_bound(n, bound)?;
    if v.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: v.n(),
        });
    }
    if !v.is_bigrassmannian() {
        return Err(Error::Precondition(format!("{v} is not bigrassmannian")));
    }
    let uni = Universe::new(n);
    let vi = uni.index(v);
    let found = (0..uni.perms.len())
        .into_par_iter()
        .filter(|&w| !uni.leq(vi, w) && uni.essential(w) == [vi])
        .map(|w| {
            let mut size = 0;
            let mut equal = true;
            for u in 0..uni.perms.len() {
                let not_below = !uni.leq(u, w);
                size += usize::from(not_below);
                equal &= not_below == uni.leq(vi, u);
            }
            FoundW {
                w: uni.perms[w].clone(),
                complement_size: size,
                sets_equal: equal,
            }
        })
        .collect();
    Ok(found)
}
