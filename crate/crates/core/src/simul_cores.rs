//! Simultaneous (s,t)-cores through the gap poset of the numerical semigroup `<s, t>`.
//!
//! The gaps of `<s, t>` are ordered by `z1` covering `z2` when `z1 - z2` is `s`
//! or `t`. Lower ideals of that poset are exactly the first-column hook sets
//! of the (s,t)-cores; the whole poset gives the maximal core.

use alloc::vec;
use alloc::vec::Vec;

use crate::abacus::BeadSet;
use crate::partition::Partition;
use crate::{Error, Result};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `n choose k` for the small arguments used here.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn check_pair(s: usize, t: usize) -> Result<()> {
    for (name, value) in [("s", s), ("t", t)] {
        if value < 2 {
            return Err(Error::InvalidParameter { name, value, expected: "at least 2" });
        }
    }
    if gcd(s, t) != 1 {
        return Err(Error::NotCoprime { s, t });
    }
    Ok(())
}

/// Positive integers outside `<s, t>`, with the cover relation between them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSet {
    s: usize,
    t: usize,
    gaps: Vec<usize>,
}

impl GapSet {
    pub fn new(s: usize, t: usize) -> Result<Self> {
        check_pair(s, t)?;
        let limit = s * t;
        let mut representable = vec![false; limit + 1];
        for a in (0..=limit).step_by(s) {
            for v in (a..=limit).step_by(t) {
                representable[v] = true;
            }
        }
        let gaps = (1..=limit).filter(|&z| !representable[z]).collect();
        Ok(GapSet { s, t, gaps })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Gaps in increasing order.
    pub fn gaps(&self) -> &[usize] {
        &self.gaps
    }

    pub fn len(&self) -> usize {
        self.gaps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gaps.is_empty()
    }

    pub fn contains(&self, z: usize) -> bool {
        self.gaps.binary_search(&z).is_ok()
    }

    /// The largest gap, `st - s - t`.
    pub fn frobenius(&self) -> Option<usize> {
        self.gaps.last().copied()
    }

    /// Gaps covered by `z`: `z - s` and `z - t` when those are gaps.
    pub fn lower_covers(&self, z: usize) -> impl Iterator<Item = usize> + '_ {
        [self.s, self.t].into_iter().filter_map(move |d| z.checked_sub(d)).filter(|&y| self.contains(y))
    }

    /// Every cover `(z1, z2)` with `z1 - z2` in `{s, t}`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.gaps.iter().flat_map(|&z| self.lower_covers(z).map(move |y| (z, y))).collect()
    }

    /// Streams the lower ideals in lexicographic order of their membership
    /// vectors over the increasing gaps (absent before present).
    pub fn ideals(&self) -> Ideals {
        let below = self
            .gaps
            .iter()
            .map(|&z| self.lower_covers(z).map(|y| self.gaps.binary_search(&y).expect("cover is a gap")).collect())
            .collect();
        Ideals { gaps: self.gaps.clone(), below, current: Some(vec![false; self.gaps.len()]) }
    }

    /// The whole poset as an ideal.
    pub fn full_ideal(&self) -> LowerIdeal {
        LowerIdeal { members: self.gaps.clone() }
    }
}

/// A downward-closed subset of a [`GapSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LowerIdeal {
    members: Vec<usize>,
}

impl LowerIdeal {
    pub fn new(gaps: &GapSet, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        let ideal = LowerIdeal { members };
        ideal.validate(gaps)?;
        Ok(ideal)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    fn validate(&self, gaps: &GapSet) -> Result<()> {
        for &z in &self.members {
            if !gaps.contains(z) {
                return Err(Error::NotAGap { value: z });
            }
            if let Some(missing) = gaps.lower_covers(z).find(|y| self.members.binary_search(y).is_err()) {
                return Err(Error::NotAnIdeal { missing, above: z });
            }
        }
        Ok(())
    }
}

/// Iterator returned by [`GapSet::ideals`].
#[derive(Clone, Debug)]
pub struct Ideals {
    gaps: Vec<usize>,
    below: Vec<Vec<usize>>,
    current: Option<Vec<bool>>,
}

impl Iterator for Ideals {
    type Item = LowerIdeal;

    fn next(&mut self) -> Option<LowerIdeal> {
        let current = self.current.take()?;
        let members = current.iter().zip(&self.gaps).filter(|(&present, _)| present).map(|(_, &z)| z).collect();
        // Successor: switch on the last absent gap whose lower covers are all
        // present, then clear everything after it. Covers always sit earlier
        // in the gap order, so a cleared suffix never breaks closure.
        let successor = (0..current.len()).rev().find(|&i| !current[i] && self.below[i].iter().all(|&j| current[j]));
        self.current = successor.map(|i| {
            let mut next = current;
            next[i] = true;
            next[i + 1..].fill(false);
            next
        });
        Some(LowerIdeal { members })
    }
}

/// Gap set of `<s, t>`.
pub fn gap_set(s: usize, t: usize) -> Result<GapSet> {
    GapSet::new(s, t)
}

/// The (s,t)-core whose first-column hook lengths are the ideal's members.
pub fn ideal_to_core(gaps: &GapSet, ideal: &LowerIdeal) -> Result<Partition> {
    ideal.validate(gaps)?;
    Ok(BeadSet::new(ideal.members.iter().copied()).partition())
}

/// Every simultaneous (s,t)-core, streamed in the order of [`GapSet::ideals`].
pub fn enumerate_cores(s: usize, t: usize) -> Result<Cores> {
    Ok(Cores { ideals: GapSet::new(s, t)?.ideals() })
}

/// Iterator returned by [`enumerate_cores`].
#[derive(Clone, Debug)]
pub struct Cores {
    ideals: Ideals,
}

impl Iterator for Cores {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        self.ideals.next().map(|ideal| BeadSet::new(ideal.members).partition())
    }
}

/// `C(s+t, t) / (s+t)`, the number of simultaneous (s,t)-cores for coprime `s, t`.
pub fn anderson_count(s: usize, t: usize) -> u128 {
    binomial(s + t, t) / (s + t) as u128
}

/// `(s^2 - 1)(t^2 - 1) / 24`, the size of the maximal (s,t)-core.
pub fn kappa_size(s: usize, t: usize) -> usize {
    (s * s - 1) * (t * t - 1) / 24
}

/// The maximal simultaneous (s,t)-core, built from the full gap poset.
pub fn kappa(s: usize, t: usize) -> Result<Partition> {
    let gaps = GapSet::new(s, t)?;
    ideal_to_core(&gaps, &gaps.full_ideal())
}

/// Checks that exactly half of `1..=(s-1)(t-1)` are gaps.
///
/// The gaps are the minimal bead-set of the self-conjugate maximal core, so
/// its axis sits at half the largest gap and splits `0..=st-s-t` into two
/// halves; beads right of the axis match spacers left of it, so the bead
/// count is the size of one half. A direct count is cross-checked.
pub fn half_membership_check(s: usize, t: usize) -> Result<bool> {
    let gaps = GapSet::new(s, t)?;
    let positions = (s - 1) * (t - 1);
    let beads = BeadSet::new(gaps.gaps().iter().copied());
    let axis = beads.axis();
    let right = axis.beads_right(&beads);
    let left_spacers = axis.spacers_left(&beads);
    let left_beads = beads.len() - right;
    // Left of the axis sit (st-s-t+1)/2 positions, and the balance trades the
    // right-hand beads for the left-hand spacers.
    let by_axis = axis.doubled() == (s * t - s - t) as i64
        && right == left_spacers
        && left_beads + left_spacers == positions / 2
        && left_beads + right == positions / 2;
    let by_count = (1..=positions).filter(|&z| gaps.contains(z)).count() == positions / 2;
    Ok(by_axis && by_count)
}

fn check_triple(s: usize) -> Result<usize> {
    if s <= 2 {
        return Err(Error::InvalidParameter { name: "s", value: s, expected: "greater than 2" });
    }
    Ok(s / 2)
}

/// Size of the largest (s-1,s,s+1)-core for even `s = 2k > 2`: `k * C(k+1, 3)`.
pub fn max_triple_core_size(s: usize) -> Result<usize> {
    let k = check_triple(s)?;
    if !s.is_multiple_of(2) {
        return Err(Error::InvalidParameter { name: "s", value: s, expected: "an even number" });
    }
    Ok(k * binomial(k + 1, 3) as usize)
}

/// Size of the largest (s-1,s,s+1)-core for odd `s = 2k + 1 > 2`:
/// `(k+1) * C(k+1, 3) + C(k+2, 3)`.
pub fn max_triple_core_size_odd(s: usize) -> Result<usize> {
    let k = check_triple(s)?;
    if s % 2 != 1 {
        return Err(Error::InvalidParameter { name: "s", value: s, expected: "an odd number" });
    }
    Ok((k + 1) * binomial(k + 1, 3) as usize + binomial(k + 2, 3) as usize)
}
