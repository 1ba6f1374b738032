//! s-cores and s-quotients read off the s-abacus.
//!
//! Everything is computed from the normalized bead-set (bead count a multiple
//! of `s`, least shift). Shifting by a further multiple of `s` leaves both the
//! core and the quotient unchanged, so this choice fixes the quotient labels.

use alloc::vec::Vec;

use crate::abacus::BeadSet;
use crate::partition::Partition;
use crate::{Error, Result};

/// The `s` partitions read off the runners, runner 0 first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(try_from = "RawQuotient"))]
pub struct Quotient {
    s: usize,
    parts: Vec<Partition>,
}

#[cfg(feature = "serde")]
#[derive(serde::Deserialize)]
struct RawQuotient {
    s: usize,
    parts: Vec<Partition>,
}

#[cfg(feature = "serde")]
impl TryFrom<RawQuotient> for Quotient {
    type Error = Error;

    fn try_from(raw: RawQuotient) -> Result<Self> {
        Quotient::new(raw.s, raw.parts)
    }
}

impl Quotient {
    pub fn new(s: usize, parts: Vec<Partition>) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidParameter { name: "s", value: 0, expected: "at least 1" });
        }
        if parts.len() != s {
            return Err(Error::QuotientLength { s, parts: parts.len() });
        }
        Ok(Quotient { s, parts })
    }

    pub fn empty(s: usize) -> Self {
        Quotient { s, parts: (0..s).map(|_| Partition::empty()).collect() }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn parts(&self) -> &[Partition] {
        &self.parts
    }

    /// Sum of the part sizes.
    pub fn total(&self) -> usize {
        self.parts.iter().map(Partition::size).sum()
    }
}

/// A partition split into its s-core and s-quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotientPair {
    pub core: Partition,
    pub quotient: Quotient,
}

impl CoreQuotientPair {
    pub fn of(p: &Partition, s: usize) -> Self {
        CoreQuotientPair { core: s_core(p, s), quotient: s_quotient(p, s) }
    }

    /// `|core| + s * (total quotient size)`.
    pub fn size(&self) -> usize {
        self.core.size() + self.quotient.s() * self.quotient.total()
    }

    pub fn reconstruct(&self) -> Result<Partition> {
        reconstruct(&self.core, &self.quotient)
    }
}

fn check_s(s: usize) {
    assert!(s >= 1, "s must be at least 1");
}

/// Pushes the beads of every runner down as far as they go.
pub fn s_core(p: &Partition, s: usize) -> Partition {
    check_s(s);
    let x = BeadSet::minimal(p).normalize(s);
    let pushed = (0..s).flat_map(|i| {
        let count = x.runner(i, s).len();
        (0..count).map(move |j| i + j * s)
    });
    BeadSet::new(pushed).partition()
}

/// Part `i` is the partition encoded by the rows holding beads on runner `i`.
pub fn s_quotient(p: &Partition, s: usize) -> Quotient {
    check_s(s);
    let x = BeadSet::minimal(p).normalize(s);
    let parts = (0..s).map(|i| x.runner(i, s).partition()).collect();
    Quotient { s, parts }
}

/// The unique partition with the given s-core and s-quotient (`s` is the quotient's length).
///
/// Each runner of the core's normalized abacus gets the bead-set of its
/// quotient part, padded to a common number of extra rows, and the runners
/// are interleaved back into one bead-set.
pub fn reconstruct(core: &Partition, quotient: &Quotient) -> Result<Partition> {
    let s = quotient.s();
    if !core.is_t_core(s) {
        return Err(Error::NotACore { s });
    }
    let base = BeadSet::minimal(core).normalize(s);
    let counts: Vec<usize> = (0..s).map(|i| base.runner(i, s).len()).collect();
    // Adding one bead per runner (a shift by s) changes neither core nor quotient.
    let extra =
        quotient.parts().iter().zip(&counts).map(|(part, &count)| part.len().saturating_sub(count)).max().unwrap_or(0);
    let beads = quotient.parts().iter().zip(&counts).enumerate().flat_map(|(i, (part, &count))| {
        let runner = BeadSet::minimal(part).shift(count + extra - part.len());
        runner.beads().iter().map(move |&j| i + j * s).collect::<Vec<_>>()
    });
    Ok(BeadSet::new(beads).partition())
}

/// `(|core|, total quotient size)`; these satisfy `|p| = core + s * total`.
pub fn size_decomposition(p: &Partition, s: usize) -> (usize, usize) {
    (s_core(p, s).size(), s_quotient(p, s).total())
}

/// Checks that conjugation reverses the quotient and commutes with taking the core.
pub fn conjugate_quotient_check(p: &Partition, s: usize) -> bool {
    let conj = p.conjugate();
    let q = s_quotient(p, s);
    let q_conj = s_quotient(&conj, s);
    let parts_reversed = (0..s).all(|i| q.parts()[i].conjugate() == q_conj.parts()[s - 1 - i]);
    parts_reversed && s_core(&conj, s) == s_core(p, s).conjugate()
}
