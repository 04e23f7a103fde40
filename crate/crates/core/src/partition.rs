//! Integer partitions and the rectangles they live in.
//!
//! Partitions are stored canonically (weakly decreasing, no zero parts), so
//! two partitions are equal exactly when their part sequences are equal. The
//! total order used everywhere (map keys, enumeration, rendering) is graded
//! by size and then lexicographically descending within a size, so that
//! `[3,1] < [2,2] < [2,1,1]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, trimming trailing zeros.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotWeaklyDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }


    /// The rectangle `width^height`.
    pub fn rectangle(width: usize, height: usize) -> Self {
        if width == 0 {
            return Self::empty();
        }
        Partition(vec![width; height])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row `k` (0-based), reading missing rows as 0.
    pub fn part(&self, k: usize) -> usize {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (0..width)
            .map(|c| self.0.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition(parts)
    }

    /// Whether `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(i, o)| i <= o)
    }

    pub fn fits_in(&self, rect: Rect) -> bool {
        self.len() <= rect.rows && self.first() <= rect.cols
    }

    /// Cells `(row, col)` in English notation, row-major.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "partition",
            input: s.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(err)?
            .trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(err());
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A `rows x cols` rectangle, written `cols^rows` for partitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub rows: usize,
    pub cols: usize,
}

impl Rect {
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::EmptyBox { rows, cols });
        }
        Ok(Rect { rows, cols })
    }

    pub fn as_partition(&self) -> Partition {
        Partition::rectangle(self.cols, self.rows)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// All partitions with at most `rows` rows and parts at most `cols`, of the
/// given size when one is supplied. Graded, then lexicographically
/// descending.
pub fn partitions_in_box(rect: Rect, size: Option<usize>) -> Vec<Partition> {
    partitions_within(rect.rows, rect.cols, size)
}

/// Like [`partitions_in_box`] but allows degenerate (zero-sided) bounds.
pub fn partitions_within(rows: usize, cols: usize, size: Option<usize>) -> Vec<Partition> {
    let sizes: Vec<usize> = match size {
        Some(s) => vec![s],
        None => (0..=rows * cols).collect(),
    };
    let mut out = Vec::new();
    for s in sizes {
        let mut current = Vec::new();
        fill_descending(s, rows, cols, &mut current, &mut out);
    }
    out
}

// Emits partitions of `remaining` in lexicographically descending order.
fn fill_descending(
    remaining: usize,
    rows_left: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    if rows_left == 0 || remaining > rows_left * max_part {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill_descending(remaining - p, rows_left - 1, p, current, out);
        current.pop();
    }
}

/// All partitions of `size`, in the canonical order.
pub fn partitions_of(size: usize) -> Vec<Partition> {
    partitions_within(size, size, Some(size))
}

/// Partitions contained in `outer`, graded then lexicographically
/// descending.
pub fn subpartitions(outer: &Partition) -> Vec<Partition> {
    let mut out = partitions_within(outer.len(), outer.first(), None);
    out.retain(|p| outer.contains(p));
    out
}

/// `(i^j, lambda)`: `j` rows of length `i` followed by the rows of `lambda`.
pub fn stack_rectangle(i: usize, j: usize, lambda: &Partition) -> Result<Partition> {
    if lambda.first() > i {
        return Err(Error::StackTooWide {
            width: i,
            lambda: lambda.to_string(),
        });
    }
    let mut parts = if i == 0 { Vec::new() } else { vec![i; j] };
    parts.extend_from_slice(lambda.parts());
    Ok(Partition(parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
    }

    #[test]
    fn contains_examples() {
        assert!(p(&[3, 1]).contains(&p(&[1, 1])));
        assert!(!p(&[2]).contains(&p(&[1, 1])));
        let l = p(&[4, 2, 2]);
        assert!(l.contains(&l));
    }

    #[test]
    fn box_enumeration() {
        let b11 = Rect::new(1, 1).unwrap();
        assert_eq!(partitions_in_box(b11, None), vec![Partition::empty(), p(&[1])]);
        assert_eq!(partitions_in_box(Rect::new(2, 2).unwrap(), None).len(), 6);
        // direct enumeration: compositions of 4 into at most 3 parts <= 3, kept when sorted
        let mut brute = Vec::new();
        for a in 0..=3 {
            for b in 0..=a {
                for c in 0..=b {
                    if a + b + c == 4 {
                        brute.push(p(&[a, b, c]));
                    }
                }
            }
        }
        brute.sort();
        assert_eq!(partitions_in_box(Rect::new(3, 3).unwrap(), Some(4)), brute);
        assert_eq!(brute, vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]);
    }

    #[test]
    fn stacking() {
        assert_eq!(stack_rectangle(3, 3, &p(&[3, 1])).unwrap(), p(&[3, 3, 3, 3, 1]));
        assert_eq!(stack_rectangle(2, 1, &Partition::empty()).unwrap(), p(&[2]));
        assert!(stack_rectangle(1, 2, &p(&[2])).is_err());
    }

    #[test]
    fn parse_and_render() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" [ 2, 2 ] ".parse::<Partition>().unwrap(), p(&[2, 2]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
        assert!("[1,0]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 3, 1]).to_string(), "[3,3,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
    }

    #[test]
    fn constructor_normalizes_trailing_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), p(&[2, 1]));
        assert!(Partition::new(vec![2, 0, 1]).is_err());
    }

    #[test]
    fn order_is_graded_then_descending() {
        let mut v = vec![p(&[2, 1, 1]), p(&[1]), p(&[2, 2]), Partition::empty(), p(&[3, 1])];
        v.sort();
        assert_eq!(
            v,
            vec![Partition::empty(), p(&[1]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
    }
}
