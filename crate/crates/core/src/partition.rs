//! Integer partitions and their Young diagrams.
//!
//! Boxes are addressed in matrix notation: `(row, column)`, both starting at 1.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abacus::BeadSet;
use crate::{Error, Result};

/// A finite non-increasing sequence of positive integers, largest first.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(try_from = "Vec<usize>", into = "Vec<usize>")
)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Validates `parts` and wraps them. The empty sequence is the empty partition.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if let Some(index) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ZeroComponent { index });
        }
        if let Some(index) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing { index: index + 1 });
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from arbitrary positive parts, sorting them and dropping zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The staircase `(k, k-1, ..., 1)`; these are exactly the 2-cores.
    pub fn staircase(k: usize) -> Self {
        Partition { parts: (1..=k).rev().collect() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of components (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Sum of the components.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Component `row` (1-based), or 0 past the last row.
    pub fn row(&self, row: usize) -> usize {
        row.checked_sub(1).and_then(|i| self.parts.get(i)).copied().unwrap_or(0)
    }

    /// Exchanges rows and columns of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width).map(|c| self.parts.iter().take_while(|&&p| p >= c).count()).collect();
        Partition { parts }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }

    /// Hook length of every box.
    pub fn hook_lengths(&self) -> HookLengthTable {
        let columns = self.conjugate();
        let rows = self
            .parts
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| (len - c - 1) + (columns.parts[c] - r - 1) + 1).collect())
            .collect();
        HookLengthTable { rows }
    }

    /// Hook length of the box `(row, column)`.
    pub fn hook_length(&self, row: usize, column: usize) -> Result<usize> {
        if row == 0 || column == 0 || column > self.row(row) {
            return Err(Error::InvalidCorner { row, column });
        }
        let leg = self.parts[row..].iter().take_while(|&&p| p >= column).count();
        Ok(self.parts[row - 1] - column + leg + 1)
    }

    /// Hook lengths of the first column, top to bottom (strictly decreasing).
    pub fn first_column_hooks(&self) -> Vec<usize> {
        let n = self.parts.len();
        self.parts.iter().enumerate().map(|(i, &p)| p + (n - i - 1)).collect()
    }

    /// Removes the hook with corner `(row, column)`.
    ///
    /// Works on the minimal bead-set: the hook of row `row` with length `h`
    /// moves the bead `x` of that row to the spacer `x - h`.
    pub fn remove_hook(&self, row: usize, column: usize) -> Result<Partition> {
        let h = self.hook_length(row, column)?;
        let beads = self.first_column_hooks();
        let moved = beads[row - 1] - h;
        debug_assert!(!beads.contains(&moved));
        let rest = beads.iter().enumerate().map(|(i, &b)| if i == row - 1 { moved } else { b });
        Ok(BeadSet::new(rest).partition())
    }

    /// True iff no hook has length exactly `t`.
    pub fn is_t_core(&self, t: usize) -> bool {
        !self.hook_lengths().contains(t)
    }

    /// Young-diagram inclusion: every row of `self` is at least the matching row of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(o, s)| s >= o)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> PartitionsOfSize {
        PartitionsOfSize { next: Some(if n == 0 { Vec::new() } else { vec![n] }) }
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
            return f.write_str("∅");
        }
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Iterator returned by [`Partition::all_of_size`].
#[derive(Clone, Debug)]
pub struct PartitionsOfSize {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionsOfSize {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Find the last part larger than 1 and spread everything after it.
        if let Some(i) = current.iter().rposition(|&p| p > 1) {
            let ones = current.len() - i - 1;
            let part = current[i] - 1;
            let mut rest = ones + 1;
            let mut following = current[..i].to_vec();
            following.push(part);
            while rest > 0 {
                let take = rest.min(part);
                following.push(take);
                rest -= take;
            }
            self.next = Some(following);
        }
        Some(Partition { parts: current })
    }
}

/// Hook lengths of a Young diagram, one row per component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HookLengthTable {
    rows: Vec<Vec<usize>>,
}

impl HookLengthTable {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Entry at `(row, column)`, 1-based.
    pub fn get(&self, row: usize, column: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(column.checked_sub(1)?).copied()
    }

    pub fn contains(&self, length: usize) -> bool {
        self.entries().any(|h| h == length)
    }

    pub fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().flatten().copied()
    }

    /// All hook lengths, sorted ascending.
    pub fn sorted(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.entries().collect();
        all.sort_unstable();
        all
    }
}
