//! Integer partitions, Young diagrams and rim hooks.
//!
//! Cells are `(row, column)` pairs, 1-indexed, row 1 on top.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts. The empty list is the unique
/// partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::domain(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    /// Builds a partition from a list whose trailing zeros are dropped.
    /// The caller guarantees the list is weakly decreasing.
    pub(crate) fn from_parts_unchecked(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new(), n: 0 }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self::from_parts_unchecked(vec![n])
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_parts_unchecked(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Length of row `i` (1-indexed), zero below the diagram.
    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-indexed), zero right of the diagram.
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        Self::from_parts_unchecked((1..=width).map(|j| self.col_len(j)).collect())
    }

    pub fn contains_cell(&self, (i, j): (usize, usize)) -> bool {
        i >= 1 && j >= 1 && self.row_len(i) >= j
    }

    /// True if the diagram of `other` fits inside this one.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
    }

    /// Hook length at cell `(i, j)`: arm + leg + 1.
    pub fn hook_length(&self, (i, j): (usize, usize)) -> usize {
        debug_assert!(self.contains_cell((i, j)));
        let arm = self.row_len(i) - j;
        let leg = self.col_len(j) - i;
        arm + leg + 1
    }

    /// True if this is `(m - l, 1^l)` for some `l`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    /// All partitions of `n`, in reverse lexicographic order starting at `(n)`.
    pub fn all(n: usize) -> Vec<Partition> {
        fn extend(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::from_parts_unchecked(prefix.clone()));
                return;
            }
            for part in (1..=max.min(rest)).rev() {
                prefix.push(part);
                extend(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        extend(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Parses comma-separated parts, largest first: `"2,2,1"`. The empty string
/// and `"0"` both give the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| tok.trim().parse::<usize>().map_err(|_| Error::domain(format!("bad partition part {tok:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A hook partition `(m - leg, 1^leg)` of `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHook")]
pub struct HookPartition {
    m: usize,
    leg: usize,
}

#[derive(Deserialize)]
struct RawHook {
    m: usize,
    leg: usize,
}

impl TryFrom<RawHook> for HookPartition {
    type Error = Error;

    fn try_from(raw: RawHook) -> Result<Self> {
        HookPartition::new(raw.m, raw.leg)
    }
}

impl HookPartition {
    pub fn new(m: usize, leg: usize) -> Result<Self> {
        if m == 0 || leg >= m {
            return Err(Error::domain(format!("no hook of size {m} with leg {leg}")));
        }
        Ok(HookPartition { m, leg })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn leg(&self) -> usize {
        self.leg
    }

    /// Length of the first row, `m - leg`.
    pub fn arm_row(&self) -> usize {
        self.m - self.leg
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = vec![self.m - self.leg];
        parts.extend(std::iter::repeat_n(1, self.leg));
        Partition::from_parts_unchecked(parts)
    }

    pub fn from_partition(p: &Partition) -> Result<Self> {
        if p.is_empty() || !p.is_hook() {
            return Err(Error::domain(format!("{p} is not a hook partition")));
        }
        Ok(HookPartition { m: p.size(), leg: p.len() - 1 })
    }

    /// All `m` hooks of `m`, by increasing leg.
    pub fn all(m: usize) -> impl Iterator<Item = HookPartition> {
        (0..m).map(move |leg| HookPartition { m, leg })
    }
}

impl fmt::Display for HookPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_partition().fmt(f)
    }
}

/// A connected border strip of a Young diagram with no 2x2 block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimHook {
    pub cells: Vec<(usize, usize)>,
    pub length: usize,
    pub rows_spanned: usize,
    pub cols_spanned: usize,
}

/// One way to strip a rim hook from a partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RimHookRemoval {
    pub rim: RimHook,
    /// `(cols_spanned, 1^{rows_spanned - 1})`.
    pub hook_type: HookPartition,
    pub remainder: Partition,
}

/// Strips the rim hook attached to cell `(i, j)`.
fn remove_rim_at(lambda: &Partition, (i, j): (usize, usize)) -> RimHookRemoval {
    let leg = lambda.col_len(j) - i;
    let arm = lambda.row_len(i) - j;
    let mut cells = Vec::with_capacity(arm + leg + 1);
    let mut parts = lambda.parts().to_vec();
    for r in i..=i + leg {
        // (r, c) is on the rim iff (r + 1, c + 1) is outside the diagram.
        let start = j.max(lambda.row_len(r + 1));
        cells.extend((start..=lambda.row_len(r)).map(|c| (r, c)));
        parts[r - 1] = start - 1;
    }
    let rim = RimHook { length: cells.len(), cells, rows_spanned: leg + 1, cols_spanned: arm + 1 };
    RimHookRemoval {
        hook_type: HookPartition { m: rim.length, leg },
        rim,
        remainder: Partition::from_parts_unchecked(parts),
    }
}

/// Every removable rim hook of length `m`, with its hook type and what is
/// left after removal. Each cell whose hook has length `m` contributes one.
pub fn rim_hooks_of_length(lambda: &Partition, m: usize) -> Vec<RimHookRemoval> {
    if m == 0 {
        return Vec::new();
    }
    lambda.cells().filter(|&cell| lambda.hook_length(cell) == m).map(|cell| remove_rim_at(lambda, cell)).collect()
}

/// Removes rim `m`-hooks until none remain.
pub fn m_core(lambda: &Partition, m: usize) -> Partition {
    assert!(m >= 1, "m_core needs m >= 1");
    let mut current = lambda.clone();
    while let Some(removal) = rim_hooks_of_length(&current, m).into_iter().next() {
        current = removal.remainder;
    }
    current
}

/// The unique `gamma` of size `n` carrying a rim hook of type `beta` whose
/// removal leaves `alpha`, for `m <= n <= 2m - 1` where `m = |beta|`.
pub fn attach_unique_gamma(alpha: &Partition, beta: HookPartition, n: usize) -> Result<Partition> {
    let m = beta.m();
    if n < m || n + 1 > 2 * m {
        return Err(Error::domain(format!("need {m} <= n <= {}, got n = {n}", 2 * m - 1)));
    }
    if alpha.size() + m != n {
        return Err(Error::domain(format!("|alpha| = {} but n - m = {}", alpha.size(), n - m)));
    }
    let leg = beta.leg();
    let width = m - leg;
    let rows = alpha.len();
    let first_row = alpha.row_len(1);

    let gamma = if leg < rows {
        // Hook starts in the first row of alpha's outer rim.
        attach_from_first_row(alpha, width, leg)
    } else if width <= first_row {
        // Mirror image: starts in the first column.
        attach_from_first_row(&alpha.conjugate(), leg + 1, width - 1).conjugate()
    } else {
        // The whole outer rim plus extensions along the first row and column.
        let mut parts = vec![width];
        parts.extend((1..=rows).map(|i| alpha.row_len(i) + 1));
        parts.extend(std::iter::repeat_n(1, leg - rows));
        Partition::from_parts_unchecked(parts)
    };
    debug_assert!(rim_hooks_of_length(&gamma, m).iter().any(|r| r.remainder == *alpha && r.hook_type == beta));
    Ok(gamma)
}

/// Rim hook spanning rows `1..=leg + 1` and `width` columns, ending at the
/// outer rim of `alpha`.
fn attach_from_first_row(alpha: &Partition, width: usize, leg: usize) -> Partition {
    let mut parts = alpha.parts().to_vec();
    parts[0] = width + alpha.row_len(leg + 1);
    for i in 2..=leg + 1 {
        parts[i - 1] = alpha.row_len(i - 1) + 1;
    }
    Partition::from_parts_unchecked(parts)
}
