//! The explicit abacus of the maximal (s-1,s+1)-core and its symmetries.
//!
//! For `s = 2k > 2` the abacus has `s` runners and `s - 2` rows. Runner `i`
//! and its mirror `s-1-i` are identical: with `m = min(i, s-1-i)` they hold
//! `m` packed beads at the bottom, then alternate spacer/bead until the runner
//! holds `k - 1` beads, then spacers to the top.

use alloc::vec::Vec;

use crate::abacus::{Abacus, BeadSet};
use crate::core_quotient::{s_core, s_quotient, Quotient};
use crate::partition::Partition;
use crate::simul_cores::{kappa, kappa_size, GapSet};
use crate::{Error, Result};

fn half_of_even(s: usize) -> Result<usize> {
    if s <= 2 || !s.is_multiple_of(2) {
        return Err(Error::InvalidParameter { name: "s", value: s, expected: "an even number greater than 2" });
    }
    Ok(s / 2)
}

/// The s-abacus of the maximal (s-1,s+1)-core for even `s > 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaAbacus {
    s: usize,
    abacus: Abacus,
}

impl AlphaAbacus {
    pub fn s(&self) -> usize {
        self.s
    }

    pub fn abacus(&self) -> &Abacus {
        &self.abacus
    }

    pub fn bead_set(&self) -> BeadSet {
        self.abacus.bead_set()
    }

    pub fn partition(&self) -> Partition {
        self.bead_set().partition()
    }
}

/// Builds the abacus runner by runner from its closed form.
pub fn build_alpha(s: usize) -> Result<AlphaAbacus> {
    let k = half_of_even(s)?;
    let rows = s - 2;
    let mut abacus = BeadSet::empty().to_abacus(s, Some(rows))?;
    for i in 0..s {
        let packed = i.min(s - 1 - i);
        for j in 0..packed {
            abacus.set(i, j, true);
        }
        for n in 0..(k - 1 - packed) {
            abacus.set(i, packed + 1 + 2 * n, true);
        }
    }
    Ok(AlphaAbacus { s, abacus })
}

/// Grows the abacus for `s` into the one for `s + 2`.
///
/// A row of beads goes underneath and a row of spacers on top; two new outer
/// runners alternate bead/spacer upward from row 1, with a spacer below and a
/// bead above that run.
pub fn nest(alpha: &AlphaAbacus) -> AlphaAbacus {
    let old = alpha.abacus();
    let (s, rows) = (old.runners(), old.rows());
    let (new_s, new_rows) = (s + 2, rows + 2);
    let mut grown = BeadSet::empty().to_abacus(new_s, Some(new_rows)).expect("an empty bead-set fits any grid");
    for i in 0..s {
        grown.set(i + 1, 0, true);
        for j in 0..rows {
            grown.set(i + 1, j + 1, old.is_bead(i, j));
        }
        grown.set(i + 1, new_rows - 1, false);
    }
    for outer in [0, new_s - 1] {
        grown.set(outer, 0, false);
        for n in 0..rows {
            grown.set(outer, n + 1, n % 2 == 0);
        }
        grown.set(outer, new_rows - 1, true);
    }
    AlphaAbacus { s: new_s, abacus: grown }
}

/// Empty s-core and staircase s-quotient of the maximal (s-1,s+1)-core.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiquoReport {
    pub s: usize,
    pub core: Partition,
    pub quotient: Quotient,
    /// Part `i` and part `s-1-i` both equal the staircase of size `k-1-i`, `0 <= i < k`.
    pub expected: Quotient,
}

impl PiquoReport {
    pub fn core_is_empty(&self) -> bool {
        self.core.is_empty()
    }

    pub fn quotient_matches(&self) -> bool {
        self.quotient == self.expected
    }

    pub fn passed(&self) -> bool {
        self.core_is_empty() && self.quotient_matches()
    }
}

pub fn staircase_quotient(s: usize) -> Result<Quotient> {
    let k = half_of_even(s)?;
    let parts = (0..s).map(|i| Partition::staircase(k - 1 - i.min(s - 1 - i))).collect();
    Quotient::new(s, parts)
}

pub fn verify_piquo(s: usize) -> Result<PiquoReport> {
    let expected = staircase_quotient(s)?;
    let lambda = build_alpha(s)?.partition();
    Ok(PiquoReport { s, core: s_core(&lambda, s), quotient: s_quotient(&lambda, s), expected })
}

/// The abacus is minimal and encodes the maximal (s-1,s+1)-core built from the gap poset.
pub fn verify_alpha_is_kappa(s: usize) -> Result<bool> {
    let alpha = build_alpha(s)?;
    let beads = alpha.bead_set();
    let lambda = beads.partition();
    Ok(beads.is_minimal() && lambda == kappa(s - 1, s + 1)? && lambda.size() == kappa_size(s - 1, s + 1))
}

/// Bead at `(i, j)` iff spacer at `(i, q-1-j)`.
pub fn is_horizontally_antisymmetric(abacus: &Abacus) -> bool {
    let q = abacus.rows();
    (0..abacus.runners()).all(|i| (0..q).all(|j| abacus.is_bead(i, j) != abacus.is_bead(i, q - 1 - j)))
}

/// Bead at `(i, j)` iff bead at `(s-1-i, j)`, on an even number of runners.
///
/// An odd runner count is rejected outright: the middle runner would have
/// to pair with itself.
pub fn is_vertically_symmetric(abacus: &Abacus) -> bool {
    let s = abacus.runners();
    s.is_multiple_of(2)
        && (0..s).all(|i| (0..abacus.rows()).all(|j| abacus.is_bead(i, j) == abacus.is_bead(s - 1 - i, j)))
}

/// Both sides of the characterization of abaci with both symmetries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongsVerdict {
    pub s: usize,
    /// Rows of the examined grid.
    pub q: usize,
    /// Rows actually needed by the normalized bead-set.
    pub height: usize,
    pub core_empty: bool,
    pub parts_self_conjugate: bool,
    pub parts_mirrored: bool,
    pub horizontal: bool,
    pub vertical: bool,
}

impl StrongsVerdict {
    /// `s` and `q` even, empty core, self-conjugate and mirrored quotient.
    pub fn conditions_hold(&self) -> bool {
        self.s.is_multiple_of(2)
            && self.q.is_multiple_of(2)
            && self.core_empty
            && self.parts_self_conjugate
            && self.parts_mirrored
    }

    pub fn symmetries_hold(&self) -> bool {
        self.horizontal && self.vertical
    }

    /// The characterization is about the abacus whose top row holds the largest bead.
    pub fn grid_is_tight(&self) -> bool {
        self.q == self.height
    }

    /// On a tight grid the two sides agree; other grids are outside the statement.
    pub fn biconditional_holds(&self) -> bool {
        !self.grid_is_tight() || self.conditions_hold() == self.symmetries_hold()
    }
}

/// Evaluates both symmetries of the normalized s-abacus of `p` and the three
/// quotient conditions. `rows` defaults to the height of the abacus.
pub fn strongs_characterization(p: &Partition, s: usize, rows: Option<usize>) -> Result<StrongsVerdict> {
    if s < 2 {
        return Err(Error::InvalidParameter { name: "s", value: s, expected: "at least 2" });
    }
    let beads = BeadSet::minimal(p).normalize(s);
    let height = beads.to_abacus(s, None)?.rows();
    let abacus = beads.to_abacus(s, rows)?;
    let quotient = s_quotient(p, s);
    let parts = quotient.parts();
    Ok(StrongsVerdict {
        s,
        q: abacus.rows(),
        height,
        core_empty: s_core(p, s).is_empty(),
        parts_self_conjugate: parts.iter().all(Partition::is_self_conjugate),
        parts_mirrored: (0..s).all(|i| parts[i] == parts[s - 1 - i]),
        horizontal: is_horizontally_antisymmetric(&abacus),
        vertical: is_vertically_symmetric(&abacus),
    })
}

/// Every cell of the abacus satisfies: bead at `(i,j)` iff spacer at
/// `(i, s-3-j)` iff bead at `(s-1-i, j)`.
pub fn verify_triple_symmetry(s: usize) -> Result<bool> {
    let alpha = build_alpha(s)?;
    let a = alpha.abacus();
    let top = s - 3;
    Ok((0..s).all(|i| {
        (0..=top).all(|j| {
            let here = a.is_bead(i, j);
            here == !a.is_bead(i, top - j) && here == a.is_bead(s - 1 - i, j)
        })
    }))
}

/// The `(r+1) x (r-1)` rectangle holding `1..=(r-1)(r+1)`, marking the gaps of `<r, r+2>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RectangleR {
    r: usize,
    /// Row-major from the bottom row, `cells[(b-1)*(r+1) + (a-1)]`.
    cells: Vec<bool>,
}

impl RectangleR {
    pub fn new(r: usize) -> Result<Self> {
        if r < 3 || r.is_multiple_of(2) {
            return Err(Error::InvalidParameter { name: "r", value: r, expected: "an odd number at least 3" });
        }
        let gaps = GapSet::new(r, r + 2)?;
        let cells = (1..=(r - 1) * (r + 1)).map(|v| gaps.contains(v)).collect();
        Ok(RectangleR { r, cells })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn columns(&self) -> usize {
        self.r + 1
    }

    pub fn rows(&self) -> usize {
        self.r - 1
    }

    /// Label of column `a` (1..=r+1) in row `b` (1..=r-1): `(r+1)(b-1) + a`.
    pub fn value(&self, a: usize, b: usize) -> usize {
        (self.r + 1) * (b - 1) + a
    }

    /// Whether the label at `(a, b)` is a gap.
    pub fn is_gap(&self, a: usize, b: usize) -> bool {
        self.cells[self.value(a, b) - 1]
    }
}

/// `(r+1)(b-1)+a` is a gap of `<r, r+2>` iff `(r+1)(r-1-b)+a` is not.
pub fn amlev_check(r: usize) -> Result<bool> {
    let rect = RectangleR::new(r)?;
    Ok((1..=rect.columns()).all(|a| (1..=rect.rows()).all(|b| rect.is_gap(a, b) != rect.is_gap(a, r - b))))
}

/// Outcome of checking an implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Implication {
    /// Premise and conclusion both hold.
    Holds,
    /// The premise fails.
    Vacuous,
    /// Premise holds, conclusion fails.
    Fails,
}

impl Implication {
    pub fn is_true(self) -> bool {
        self != Implication::Fails
    }
}

/// If the s-abacus of `p` has both symmetries then `p` is self-conjugate.
pub fn self_conjugate_corollary_check(p: &Partition, s: usize, rows: Option<usize>) -> Result<Implication> {
    let abacus = BeadSet::minimal(p).normalize(s).to_abacus(s, rows)?;
    if !(is_horizontally_antisymmetric(&abacus) && is_vertically_symmetric(&abacus)) {
        return Ok(Implication::Vacuous);
    }
    Ok(if p.is_self_conjugate() { Implication::Holds } else { Implication::Fails })
}
