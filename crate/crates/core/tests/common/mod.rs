//! Oracles shared by the integration suites. None of them go through bead-sets.

#![allow(dead_code)]

use abacus_core::Partition;
use rand::Rng;

pub fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Hook length straight from the diagram: arm + leg + 1.
pub fn hook_by_diagram(q: &Partition, row: usize, column: usize) -> usize {
    let arm = q.row(row) - column;
    let leg = ((row + 1)..=q.len()).filter(|&i| q.row(i) >= column).count();
    arm + leg + 1
}

/// Removes the rim hook with corner `(row, column)` by sliding the rows below
/// up and to the left.
pub fn remove_rim_hook(q: &Partition, row: usize, column: usize) -> Partition {
    let bottom = (row..=q.len()).take_while(|&i| q.row(i) >= column).last().unwrap();
    let mut parts = q.parts().to_vec();
    for i in row..bottom {
        parts[i - 1] = q.row(i + 1) - 1;
    }
    parts[bottom - 1] = column - 1;
    parts.retain(|&x| x > 0);
    Partition::new(parts).unwrap()
}

/// Every box whose hook has length `t`.
pub fn hooks_of_length(q: &Partition, t: usize) -> Vec<(usize, usize)> {
    (1..=q.len())
        .flat_map(|r| (1..=q.row(r)).map(move |c| (r, c)))
        .filter(|&(r, c)| hook_by_diagram(q, r, c) == t)
        .collect()
}

/// Strips `t`-hooks until none remain, always taking the box chosen by `pick`.
/// Returns the final partition and the number of removals.
pub fn strip_hooks(q: &Partition, t: usize, pick: impl Fn(&[(usize, usize)]) -> usize) -> (Partition, usize) {
    let mut current = q.clone();
    let mut removed = 0;
    loop {
        let hooks = hooks_of_length(&current, t);
        if hooks.is_empty() {
            return (current, removed);
        }
        let (r, c) = hooks[pick(&hooks)];
        current = remove_rim_hook(&current, r, c);
        removed += 1;
    }
}

/// A random partition of size at most `max_size`.
pub fn random_partition(rng: &mut impl Rng, max_size: usize) -> Partition {
    let mut left = rng.random_range(0..=max_size);
    let mut parts = Vec::new();
    while left > 0 {
        let part = rng.random_range(1..=left);
        parts.push(part);
        left -= part;
    }
    Partition::from_unsorted(parts)
}

/// Every partition with size at most `n`.
pub fn partitions_up_to(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(Partition::all_of_size)
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
