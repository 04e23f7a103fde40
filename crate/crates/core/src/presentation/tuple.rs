use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::{partitions_within, stack_rectangle, Partition, Rect};

/// The parameter pack `(n, r, i, j, a, b, N)` under which a degree-`N`
/// syzygy among the generators `s_(i^j, lambda)` is posed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ValidTuple {
    pub n: usize,
    pub r: usize,
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
    #[serde(rename = "N")]
    pub degree: usize,
}

impl ValidTuple {
    /// Checks every constraint and reports all violations by name.
    pub fn new(n: usize, r: usize, i: usize, j: usize, a: usize, b: usize, degree: usize) -> Result<Self> {
        let mut violations = Vec::new();
        for (name, v) in [("n", n), ("r", r), ("i", i), ("j", j), ("a", a), ("b", b), ("N", degree)] {
            if v == 0 {
                violations.push(format!("{name} >= 1 ({name} = 0)"));
            }
        }
        if r >= n {
            violations.push(format!("r < n ({r} >= {n})"));
        }
        if a + j > r {
            violations.push(format!("a+j <= r ({} > {r})", a + j));
        }
        if a + i > n.saturating_sub(r) {
            violations.push(format!("a+i <= n-r ({} > {})", a + i, n.saturating_sub(r)));
        }
        if b > i {
            violations.push(format!("b <= i ({b} > {i})"));
        }
        if b > j {
            violations.push(format!("b <= j ({b} > {j})"));
        }
        if degree > a * b {
            violations.push(format!("N <= a*b ({degree} > {})", a * b));
        }
        if violations.is_empty() {
            Ok(ValidTuple { n, r, i, j, a, b, degree })
        } else {
            Err(Error::InvalidTuple(violations))
        }
    }

    /// The rectangle `(n-r)^r` of the quotient ring.
    pub fn ambient(&self) -> Rect {
        Rect { rows: self.r, cols: self.n - self.r }
    }

    /// `i^j`.
    pub fn top(&self) -> Partition {
        Partition::rectangle(self.i, self.j)
    }

    /// Bounds for the lower block: `b^a`.
    pub fn lower_block(&self) -> Rect {
        Rect { rows: self.a, cols: self.b }
    }

    /// Bounds for the right strip: `(n-r-i)^j`.
    pub fn right_strip(&self) -> (usize, usize) {
        (self.j, self.n - self.r - self.i)
    }

    /// `(i^j, lambda)`.
    pub fn generator(&self, lambda: &Partition) -> Result<Partition> {
        stack_rectangle(self.i, self.j, lambda)
    }

    pub fn with_degree(&self, degree: usize) -> Result<Self> {
        Self::new(self.n, self.r, self.i, self.j, self.a, self.b, degree)
    }
}

/// All valid tuples with `n - r <= max_cols`, `r <= max_rows` and
/// `N <= max_degree`, ordered by `(n - r, r, i, j, a, b, N)`.
pub fn valid_tuples(max_cols: usize, max_rows: usize, max_degree: usize) -> Vec<ValidTuple> {
    let mut out = Vec::new();
    for w in 1..=max_cols {
        for r in 1..=max_rows {
            for i in 1..=w {
                for j in 1..=r {
                    for a in 1..=(r - j).min(w - i) {
                        for b in 1..=i.min(j) {
                            for degree in 1..=(a * b).min(max_degree) {
                                out.push(ValidTuple { n: w + r, r, i, j, a, b, degree });
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

impl fmt::Display for ValidTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{},{})",
            self.n, self.r, self.i, self.j, self.a, self.b, self.degree
        )
    }
}

fn parse_list(s: &str, what: &'static str, len: usize) -> Result<Vec<usize>> {
    let err = || Error::Parse { what, input: s.to_string() };
    let inner = s.trim();
    let inner = inner
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(inner);
    let v = inner
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
        .collect::<Result<Vec<_>>>()?;
    if v.len() != len {
        return Err(err());
    }
    Ok(v)
}

/// Parses `n,r,i,j,a,b,N` without validating the constraints.
pub fn parse_tuple_values(s: &str) -> Result<[usize; 7]> {
    let v = parse_list(s, "tuple n,r,i,j,a,b,N", 7)?;
    Ok([v[0], v[1], v[2], v[3], v[4], v[5], v[6]])
}

impl FromStr for ValidTuple {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let [n, r, i, j, a, b, d] = parse_tuple_values(s)?;
        ValidTuple::new(n, r, i, j, a, b, d)
    }
}

/// Indices `(r, s, t, n)` of the bigrassmannian permutation `v_{r,s,t,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Bigrassmannian {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub n: usize,
}

/// `(i, j, a, b)` attached to a bigrassmannian.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GeneratorParams {
    pub i: usize,
    pub j: usize,
    pub a: usize,
    pub b: usize,
}

impl Bigrassmannian {
    /// Requires `1 <= t <= r, s <= n` and `t > r + s - n`.
    pub fn new(r: usize, s: usize, t: usize, n: usize) -> Result<Self> {
        let fail = |why: String| Err(Error::IndexConstraint(why));
        if t == 0 {
            return fail("t >= 1".into());
        }
        if t > r || t > s {
            return fail(format!("t <= r, s (t = {t}, r = {r}, s = {s})"));
        }
        if r > n || s > n {
            return fail(format!("r, s <= n (r = {r}, s = {s}, n = {n})"));
        }
        if t + n <= r + s {
            return fail(format!("t > r + s - n ({t} <= {r} + {s} - {n})"));
        }
        Ok(Bigrassmannian { r, s, t, n })
    }

    pub fn params(&self) -> GeneratorParams {
        let i = self.s - self.t + 1;
        let j = self.r - self.t + 1;
        GeneratorParams {
            i,
            j,
            a: (self.n - self.r - i).min(self.r - j),
            b: i.min(j),
        }
    }

    pub fn ambient(&self) -> Rect {
        Rect { rows: self.r, cols: self.n - self.r }
    }

    /// All bigrassmannian index sets in `S_n`.
    pub fn all(n: usize) -> Vec<Bigrassmannian> {
        let mut out = Vec::new();
        for r in 1..n {
            for s in 1..n {
                for t in 1..=r.min(s) {
                    if let Ok(v) = Bigrassmannian::new(r, s, t, n) {
                        out.push(v);
                    }
                }
            }
        }
        out
    }
}

impl FromStr for Bigrassmannian {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v = parse_list(s, "bigrassmannian r,s,t,n", 4)?;
        Bigrassmannian::new(v[0], v[1], v[2], v[3])
    }
}

impl fmt::Display for Bigrassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v_({},{},{},{})", self.r, self.s, self.t, self.n)
    }
}

pub fn params_from_bigrassmannian(r: usize, s: usize, t: usize, n: usize) -> Result<GeneratorParams> {
    Ok(Bigrassmannian::new(r, s, t, n)?.params())
}

/// The generators `s_mu` with `i^j <= mu <= (i^j, b^a)`, paired with the
/// lower block `lambda` such that `mu = (i^j, lambda)`.
pub fn generator_pairs(v: &Bigrassmannian) -> Vec<(Partition, Partition)> {
    let GeneratorParams { i, j, a, b } = v.params();
    partitions_within(a, b, None)
        .into_iter()
        .map(|lambda| {
            let mu = stack_rectangle(i, j, &lambda).expect("b <= i");
            (lambda, mu)
        })
        .collect()
}

pub fn generator_set(r: usize, s: usize, t: usize, n: usize) -> Result<Vec<Partition>> {
    let v = Bigrassmannian::new(r, s, t, n)?;
    Ok(generator_pairs(&v).into_iter().map(|(_, mu)| mu).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validity() {
        assert!(ValidTuple::new(12, 6, 3, 3, 3, 3, 4).is_ok());
        assert!(ValidTuple::new(4, 2, 1, 1, 1, 1, 1).is_ok());
        match ValidTuple::new(12, 6, 3, 3, 4, 3, 4) {
            Err(Error::InvalidTuple(v)) => {
                assert_eq!(v.len(), 2, "{v:?}");
                assert!(v[0].starts_with("a+j <= r (7 > 6)"));
                assert!(v[1].starts_with("a+i <= n-r"));
            }
            other => panic!("{other:?}"),
        }
        // the n=17, r=9 example breaks a+i <= n-r
        assert!(ValidTuple::new(17, 9, 5, 3, 4, 2, 10).is_err());
    }

    #[test]
    fn enumeration_matches_filter() {
        let mut brute = Vec::new();
        for n in 1..=7 {
            for r in 1..=3 {
                for v in 0..6usize.pow(5) {
                    let d: Vec<usize> = (0..5).map(|k| v / 6usize.pow(k) % 6 + 1).collect();
                    if let Ok(t) = ValidTuple::new(n, r, d[0], d[1], d[2], d[3], d[4]) {
                        if n - r <= 3 && t.degree <= 2 {
                            brute.push(t);
                        }
                    }
                }
            }
        }
        let mut listed = valid_tuples(3, 3, 2);
        let key = |t: &ValidTuple| (t.n, t.r, t.i, t.j, t.a, t.b, t.degree);
        brute.sort_by_key(key);
        listed.sort_by_key(key);
        assert_eq!(brute, listed);
        assert!(!listed.is_empty());
    }

    #[test]
    fn zero_entries_are_named() {
        let Err(Error::InvalidTuple(v)) = ValidTuple::new(4, 2, 1, 1, 0, 1, 1) else {
            panic!()
        };
        assert!(v.iter().any(|s| s.starts_with("a >= 1")));
    }

    #[test]
    fn tuple_parsing() {
        let t: ValidTuple = "12,6,3,3,3,3,4".parse().unwrap();
        assert_eq!(t.to_string(), "(12,6,3,3,3,3,4)");
        assert!("12,6,3".parse::<ValidTuple>().is_err());
        assert!(matches!(
            "12,6,3,3,4,3,4".parse::<ValidTuple>(),
            Err(Error::InvalidTuple(_))
        ));
    }

    #[test]
    fn bigrassmannian_params() {
        for m in 1..=4 {
            let p = params_from_bigrassmannian(2 * m, 2 * m, m + 1, 4 * m).unwrap();
            assert_eq!(p, GeneratorParams { i: m, j: m, a: m, b: m });
        }
        let p = params_from_bigrassmannian(3, 3, 2, 6).unwrap();
        assert_eq!(p, GeneratorParams { i: 2, j: 2, a: 1, b: 2 });
        assert!(params_from_bigrassmannian(2, 2, 1, 3).is_err());
        assert!(params_from_bigrassmannian(2, 2, 3, 4).is_err());
        assert!(params_from_bigrassmannian(2, 2, 0, 4).is_err());
    }

    #[test]
    fn generator_sets() {
        let g = generator_set(2, 2, 2, 4).unwrap();
        let names: Vec<String> = g.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["[1]", "[1,1]"]);
        assert_eq!(generator_set(4, 4, 3, 8).unwrap().len(), 6);
        assert_eq!(generator_set(6, 6, 4, 12).unwrap().len(), 20);
    }

    #[test]
    fn generator_count_is_box_count() {
        for n in 2..=8 {
            for v in Bigrassmannian::all(n) {
                let p = v.params();
                let count = partitions_within(p.a, p.b, None).len();
                assert_eq!(generator_pairs(&v).len(), count);
            }
        }
    }

    #[test]
    fn degenerate_generator_set() {
        // i = n - r forces a = 0
        let v = Bigrassmannian::new(2, 3, 2, 4).unwrap();
        let p = v.params();
        assert_eq!(p.i, 4 - 2);
        assert_eq!(p.a, 0);
        assert_eq!(generator_pairs(&v).len(), 1);
    }
}
