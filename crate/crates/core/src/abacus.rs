//! Bead-sets and s-abaci.
//!
//! A bead-set is a finite set of non-negative integers: beads at its members,
//! spacers everywhere else. Laying the integers out `s` per row turns it into
//! an s-abacus; position `(runner i, row j)` carries the value `i + j*s`.
//! Rows count from the bottom, runners from the left, both from 0.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::Partition;
use crate::{Error, Result};

/// Sorted, duplicate-free set of bead positions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(from = "Vec<usize>", into = "Vec<usize>")
)]
pub struct BeadSet {
    beads: Vec<usize>,
}

impl BeadSet {
    pub fn new(beads: impl IntoIterator<Item = usize>) -> Self {
        let mut beads: Vec<usize> = beads.into_iter().collect();
        beads.sort_unstable();
        beads.dedup();
        BeadSet { beads }
    }

    pub fn empty() -> Self {
        BeadSet::default()
    }

    /// The minimal bead-set of `p`: its first-column hook lengths.
    pub fn minimal(p: &Partition) -> Self {
        let mut beads = p.first_column_hooks();
        beads.reverse();
        BeadSet { beads }
    }

    /// Bead positions, ascending.
    pub fn beads(&self) -> &[usize] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.beads.binary_search(&x).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.beads.last().copied()
    }

    /// Number of beads strictly below `x`.
    pub fn beads_below(&self, x: usize) -> usize {
        self.beads.partition_point(|&b| b < x)
    }

    /// Number of spacers strictly below `x`.
    pub fn spacers_below(&self, x: usize) -> usize {
        x - self.beads_below(x)
    }

    /// The partition encoded: each bead contributes the number of spacers to its left.
    pub fn partition(&self) -> Partition {
        let parts = self.beads.iter().enumerate().rev().map(|(i, &b)| b - i).filter(|&part| part > 0).collect();
        Partition::new(parts).expect("spacer counts are non-increasing from the top bead")
    }

    /// Prepends `k` packed beads: `{0..k} ∪ {b + k}`. Encodes the same partition.
    pub fn shift(&self, k: usize) -> BeadSet {
        let beads = (0..k).chain(self.beads.iter().map(|&b| b + k)).collect();
        BeadSet { beads }
    }

    /// True iff 0 is a spacer, i.e. the beads are exactly the first-column hook lengths.
    pub fn is_minimal(&self) -> bool {
        self.beads.first() != Some(&0)
    }

    /// Strips leading packed beads `{0, 1, ..., j}` and shifts the rest down.
    pub fn minimalize(&self) -> BeadSet {
        let packed = self.beads.iter().enumerate().take_while(|&(i, &b)| i == b).count();
        let beads = self.beads[packed..].iter().map(|&b| b - packed).collect();
        BeadSet { beads }
    }

    /// Shifts the minimal form by the least `k` in `0..s` making the bead count a multiple of `s`.
    pub fn normalize(&self, s: usize) -> BeadSet {
        assert!(s >= 1, "normalize needs at least one runner");
        let minimal = self.minimalize();
        let k = (s - minimal.len() % s) % s;
        minimal.shift(k)
    }

    /// Rows `j` with a bead at `runner + j*s`.
    pub fn runner(&self, runner: usize, s: usize) -> BeadSet {
        let beads = self.beads.iter().filter(|&&b| b % s == runner).map(|&b| b / s).collect();
        BeadSet { beads }
    }

    /// The half-integer where beads to the right balance spacers to the left.
    pub fn axis(&self) -> Axis {
        // Crossing an integer position always moves the balance by one, so a
        // scan over half-integers -1/2, 1/2, ... meets exactly one zero.
        let top = self.max().map_or(0, |m| m + 1);
        (0..=top)
            .map(|m| Axis { doubled: 2 * m as i64 - 1 })
            .find(|axis| axis.balances(self))
            .expect("balance reaches zero at or before the last bead")
    }

    /// True iff reflecting across the axis swaps beads and spacers.
    pub fn is_self_conjugate_axis(&self) -> bool {
        let axis = self.axis();
        let mirror = axis.doubled;
        if mirror < 0 {
            return true;
        }
        let mirror = mirror as usize;
        self.max().is_none_or(|m| m <= mirror) && (0..=mirror).all(|x| self.contains(x) != self.contains(mirror - x))
    }

    /// Lays the beads out on `s` runners. `rows` defaults to the fewest rows holding every bead.
    pub fn to_abacus(&self, s: usize, rows: Option<usize>) -> Result<Abacus> {
        if s == 0 {
            return Err(Error::InvalidParameter { name: "s", value: s, expected: "at least 1 runner" });
        }
        let needed = self.max().map_or(1, |m| m / s + 1);
        let rows = rows.unwrap_or(needed);
        if rows == 0 {
            return Err(Error::InvalidParameter { name: "rows", value: 0, expected: "at least 1 row" });
        }
        let capacity = s * rows;
        if let Some(bead) = self.max().filter(|&m| m >= capacity) {
            return Err(Error::BeadOutOfGrid { bead, capacity });
        }
        let mut cells = vec![false; capacity];
        for &b in &self.beads {
            cells[b] = true;
        }
        Ok(Abacus { runners: s, rows, cells })
    }
}

impl From<Vec<usize>> for BeadSet {
    fn from(beads: Vec<usize>) -> Self {
        BeadSet::new(beads)
    }
}

impl From<BeadSet> for Vec<usize> {
    fn from(x: BeadSet) -> Self {
        x.beads
    }
}

impl fmt::Display for BeadSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.beads.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{b}")?;
        }
        f.write_str("}")
    }
}

/// Axis of symmetry of a bead-set, stored doubled so it stays an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Axis {
    doubled: i64,
}

impl Axis {
    pub fn from_doubled(doubled: i64) -> Self {
        Axis { doubled }
    }

    /// Twice the axis value; odd for every axis this crate produces.
    pub fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn value(self) -> f64 {
        self.doubled as f64 / 2.0
    }

    /// Beads strictly right of the axis.
    pub fn beads_right(self, x: &BeadSet) -> usize {
        x.beads().iter().filter(|&&b| 2 * b as i64 > self.doubled).count()
    }

    /// Spacers strictly left of the axis (and at or right of 0).
    pub fn spacers_left(self, x: &BeadSet) -> usize {
        if self.doubled <= 0 {
            return 0;
        }
        // Positions p with 2p < doubled.
        let bound = (self.doubled as usize).div_ceil(2);
        x.spacers_below(bound)
    }

    pub fn balances(self, x: &BeadSet) -> bool {
        self.beads_right(x) == self.spacers_left(x)
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.doubled % 2 == 0 {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// Occupancy grid of an s-abacus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Abacus {
    runners: usize,
    rows: usize,
    /// Indexed by position value `i + j*runners`.
    cells: Vec<bool>,
}

impl Abacus {
    /// Builds a grid from rows listed bottom first.
    pub fn from_rows(runners: usize, rows: &[Vec<bool>]) -> Result<Self> {
        let cells: Vec<bool> = rows.iter().flatten().copied().collect();
        if runners == 0 || rows.is_empty() || rows.iter().any(|r| r.len() != runners) {
            return Err(Error::GridShape { runners, rows: rows.len(), cells: cells.len() });
        }
        Ok(Abacus { runners, rows: rows.len(), cells })
    }

    pub fn runners(&self) -> usize {
        self.runners
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Whether `(runner, row)` holds a bead. Positions off the grid are spacers.
    pub fn is_bead(&self, runner: usize, row: usize) -> bool {
        runner < self.runners && row < self.rows && self.cells[runner + row * self.runners]
    }

    pub fn set(&mut self, runner: usize, row: usize, bead: bool) {
        assert!(runner < self.runners && row < self.rows, "({runner},{row}) is off the grid");
        self.cells[runner + row * self.runners] = bead;
    }

    pub fn bead_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c).count()
    }

    pub fn runner_bead_count(&self, runner: usize) -> usize {
        (0..self.rows).filter(|&j| self.is_bead(runner, j)).count()
    }

    /// Rows as bead flags, bottom row first.
    pub fn grid(&self) -> Vec<Vec<bool>> {
        self.cells.chunks(self.runners).map(|r| r.to_vec()).collect()
    }

    pub fn bead_set(&self) -> BeadSet {
        BeadSet::new(self.cells.iter().enumerate().filter(|(_, &c)| c).map(|(v, _)| v))
    }

    /// One line per row, top row first: `o` for a bead, `.` for a spacer, separated by spaces.
    pub fn render_ascii(&self) -> String {
        let mut out = String::with_capacity(self.rows * self.runners * 2);
        for j in (0..self.rows).rev() {
            for i in 0..self.runners {
                if i > 0 {
                    out.push(' ');
                }
                out.push(if self.is_bead(i, j) { 'o' } else { '.' });
            }
            if j > 0 {
                out.push('\n');
            }
        }
        out
    }
}

impl fmt::Display for Abacus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn x(beads: &[usize]) -> BeadSet {
        BeadSet::new(beads.iter().copied())
    }

    #[test]
    fn minimal_bead_sets() {
        assert_eq!(BeadSet::minimal(&p(&[4, 2, 1, 1])), x(&[1, 2, 4, 7]));
        assert_eq!(BeadSet::minimal(&Partition::empty()), BeadSet::empty());
        assert_eq!(BeadSet::minimal(&p(&[3, 2, 1])), x(&[1, 3, 5]));
        assert!(x(&[1, 2, 4, 7]).is_minimal());
        assert!(!x(&[0, 2]).is_minimal());
    }

    #[test]
    fn partitions_from_beads() {
        assert_eq!(x(&[1, 3, 5]).partition(), p(&[3, 2, 1]));
        assert_eq!(x(&[0, 1, 2]).partition(), Partition::empty());
        assert_eq!(x(&[1, 2, 4, 7]).partition(), p(&[4, 2, 1, 1]));
    }

    #[test]
    fn shifting() {
        let k = x(&[1, 2, 4, 7]);
        assert_eq!(k.shift(1), x(&[0, 2, 3, 5, 8]));
        assert_eq!(k.shift(1).partition(), k.partition());
        assert_eq!(k.shift(0), k);
        assert_eq!(BeadSet::empty().shift(3), x(&[0, 1, 2]));
        assert_eq!(k.shift(5).minimalize(), k);
    }

    #[test]
    fn normalizing() {
        assert_eq!(x(&[1, 2, 4, 7]).normalize(4), x(&[1, 2, 4, 7]));
        let n = x(&[1, 3, 5]).normalize(2);
        assert_eq!(n, x(&[0, 2, 4, 6]));
        assert_eq!(n.partition(), p(&[3, 2, 1]));
        assert_eq!(BeadSet::empty().normalize(5), BeadSet::empty());
        // Non-minimal input is normalized from its minimal form.
        assert_eq!(x(&[0, 1, 2, 4]).normalize(2), x(&[0, 2]));
    }

    #[test]
    fn abacus_layout() {
        let a = x(&[1, 2, 4, 7]).to_abacus(4, None).unwrap();
        assert_eq!((a.rows(), a.runners()), (2, 4));
        let beads: Vec<(usize, usize)> =
            (0..2).flat_map(|j| (0..4).map(move |i| (i, j))).filter(|&(i, j)| a.is_bead(i, j)).collect();
        assert_eq!(beads, vec![(1, 0), (2, 0), (0, 1), (3, 1)]);
        assert_eq!(a.render_ascii(), "o . . o\n. o o .");
        assert_eq!(a.bead_set(), x(&[1, 2, 4, 7]));

        let empty = BeadSet::empty().to_abacus(8, None).unwrap();
        assert_eq!((empty.rows(), empty.runners(), empty.bead_count()), (1, 8, 0));
        assert_eq!(BeadSet::empty().to_abacus(4, None).unwrap().render_ascii(), ". . . .");

        assert_eq!(x(&[1, 2, 4, 8]).to_abacus(4, Some(2)), Err(Error::BeadOutOfGrid { bead: 8, capacity: 8 }));
        assert_eq!(x(&[1]).to_abacus(4, Some(3)).unwrap().rows(), 3);
    }

    #[test]
    fn grid_roundtrip() {
        let a = x(&[1, 2, 4, 7]).to_abacus(4, None).unwrap();
        assert_eq!(Abacus::from_rows(4, &a.grid()).unwrap(), a);
        assert!(Abacus::from_rows(4, &[vec![true, false]]).is_err());
    }

    #[test]
    fn axes() {
        let k = x(&[1, 2, 4, 7]);
        assert_eq!(k.axis(), Axis::from_doubled(7));
        assert!(k.axis().balances(&k));
        assert_eq!(BeadSet::empty().axis(), Axis::from_doubled(-1));
        assert_eq!(alloc::format!("{}", BeadSet::empty().axis()), "-1/2");
        // (3) has bead-set {3}; the balance point is 1/2, not 3/2.
        assert_eq!(x(&[3]).axis(), Axis::from_doubled(1));
    }

    #[test]
    fn self_conjugate_axes() {
        assert!(x(&[1, 2, 4, 7]).is_self_conjugate_axis());
        assert!(BeadSet::empty().is_self_conjugate_axis());
        let b = BeadSet::minimal(&p(&[3, 1]));
        assert_eq!(b, x(&[1, 4]));
        assert!(!b.is_self_conjugate_axis());
        assert!(x(&[1, 2, 4, 7]).shift(3).is_self_conjugate_axis());
    }
}
