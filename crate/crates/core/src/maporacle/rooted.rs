use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{for_each_matching, UnionFind, DEFAULT_BOUND};
use crate::arith::rational::factorial;
use crate::mapseries::MapKey;
use crate::partitions::Partition;
use crate::{Error, Result};

/// Rooted map counts keyed by vertex distribution, face count and edge count.
pub type RootedCounts = BTreeMap<MapKey, u64>;

fn check_bound(n: u32, bound: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidInput("edge count must be positive".into()));
    }
    if n > bound {
        return Err(Error::OutOfRange {
            what: "edge count".into(),
            value: n,
            bound,
        });
    }
    Ok(())
}

fn normalize(labelled: BTreeMap<MapKey, u64>, divisor: u64) -> Result<RootedCounts> {
    labelled
        .into_iter()
        .map(|(key, count)| {
            if count % divisor != 0 {
                return Err(Error::NonIntegralNormalization {
                    key: key.to_string(),
                    count,
                    divisor,
                });
            }
            Ok((key, count / divisor))
        })
        .collect()
}

/// Cycle lengths of a permutation given as an image array.
fn cycle_type(perm: &[usize]) -> Vec<u32> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
            len += 1;
        }
        out.push(len);
    }
    out
}

/// Rooted maps on orientable surfaces with `n` edges, by brute force over
/// `S_{2n}`.
///
/// Edge ends are labelled `0..2n` and the edge involution is fixed to
/// `ε = (0 1)(2 3)…`. A rotation `ν` gives a connected map when `⟨ν, ε⟩` is
/// transitive; vertices are the cycles of `ν` and faces the cycles of `νε`.
/// Relabellings preserving `ε` form a group of order `2^n n!`, and each
/// rooted map accounts for `2n` of its orbits' points per automorphism, so
/// the labelled count is divided by `2^{n-1} (n-1)!`.
pub fn rooted_orientable_counts(n: u32) -> Result<RootedCounts> {
    rooted_orientable_counts_bounded(n, DEFAULT_BOUND)
}

pub fn rooted_orientable_counts_bounded(n: u32, bound: u32) -> Result<RootedCounts> {
    check_bound(n, bound)?;
    let size = 2 * n as usize;
    // shard on the image of label 0
    let shards: Vec<BTreeMap<MapKey, u64>> = (0..size)
        .into_par_iter()
        .map(|first| {
            let mut counts = BTreeMap::new();
            let rest: Vec<usize> = (0..size).filter(|&x| x != first).collect();
            let mut perm = vec![0usize; size];
            perm[0] = first;
            permute(&rest, &mut perm, 1, &mut vec![false; rest.len()], &mut |nu| {
                let mut uf = UnionFind::new(size);
                for x in 0..size {
                    uf.union(x, nu[x]);
                    uf.union(x, x ^ 1);
                }
                if uf.class_sizes().len() != 1 {
                    return;
                }
                let faces: Vec<usize> = (0..size).map(|x| nu[x ^ 1]).collect();
                let j = cycle_type(&faces).len() as u32;
                let key = MapKey::from_partition(&Partition::from_unsorted(cycle_type(nu)), j, n)
                    .expect("permutation census produces valid keys");
                *counts.entry(key).or_insert(0) += 1;
            });
            counts
        })
        .collect();
    let divisor = (1u64 << (n - 1)) * u64::try_from(factorial(u64::from(n - 1))).expect("small factorial");
    normalize(merge(shards), divisor)
}

fn permute(
    items: &[usize],
    perm: &mut Vec<usize>,
    pos: usize,
    used: &mut Vec<bool>,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == perm.len() {
        f(perm);
        return;
    }
    for k in 0..items.len() {
        if !used[k] {
            used[k] = true;
            perm[pos] = items[k];
            permute(items, perm, pos + 1, used, f);
            used[k] = false;
        }
    }
}

fn merge(shards: Vec<BTreeMap<MapKey, u64>>) -> BTreeMap<MapKey, u64> {
    let mut out = BTreeMap::new();
    for shard in shards {
        for (k, v) in shard {
            *out.entry(k).or_insert(0) += v;
        }
    }
    out
}

/// Alternating cycles of two fixed-point-free involutions; returns the
/// number of labels in each cycle.
fn alternating_cycles(first: &[usize], second: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; first.len()];
    let mut out = Vec::new();
    for start in 0..first.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        loop {
            seen[x] = true;
            let y = first[x];
            seen[y] = true;
            len += 2;
            x = second[y];
            if x == start {
                break;
            }
        }
        out.push(len);
    }
    out
}

/// Labelled triples of matchings on `4n` side-end labels, grouped by key.
///
/// Edge `e` owns labels `4e..4e+4`: `4e+s·2+t` is end `t` of side `s`.
/// `same_side` pairs the two ends of a side, `same_end` the two sides at an
/// end; both are fixed. The corner matching ranges over all `(4n-1)!!`
/// matchings. Vertices are the `same_end`/corner alternating cycles (a cycle
/// of `2k` labels is a vertex of valence `k`) and faces the
/// `same_side`/corner cycles.
fn labelled_matching_census(n: u32) -> BTreeMap<MapKey, u64> {
    let size = 4 * n as usize;
    let same_side: Vec<usize> = (0..size).map(|x| x ^ 1).collect();
    let same_end: Vec<usize> = (0..size).map(|x| x ^ 2).collect();
    // shard on the corner partner of label 0
    let shards: Vec<BTreeMap<MapKey, u64>> = (1..size)
        .into_par_iter()
        .map(|partner0| {
            let mut counts = BTreeMap::new();
            let others: Vec<usize> = (1..size).filter(|&x| x != partner0).collect();
            let mut corner = vec![0usize; size];
            corner[0] = partner0;
            corner[partner0] = 0;
            for_each_matching(others.len(), &mut |m| {
                for (a, &b) in m.iter().enumerate() {
                    corner[others[a]] = others[b];
                }
                let mut uf = UnionFind::new(size);
                for x in 0..size {
                    uf.union(x, same_side[x]);
                    uf.union(x, same_end[x]);
                    uf.union(x, corner[x]);
                }
                if uf.class_sizes().len() != 1 {
                    return;
                }
                let valences: Vec<u32> = alternating_cycles(&same_end, &corner)
                    .into_iter()
                    .map(|len| len as u32 / 2)
                    .collect();
                let j = alternating_cycles(&same_side, &corner).len() as u32;
                let key = MapKey::from_partition(&Partition::from_unsorted(valences), j, n)
                    .expect("matching census produces valid keys");
                *counts.entry(key).or_insert(0) += 1;
            });
            counts
        })
        .collect();
    merge(shards)
}

/// The three rooted maps with one edge: a bridge on the sphere, a loop on
/// the sphere and a loop on the projective plane.
fn one_edge_truth() -> RootedCounts {
    [
        (vec![2], 1),
        (vec![0, 1], 1),
        (vec![0, 1], 2),
    ]
    .into_iter()
    .map(|(i, j)| (MapKey::new(i, j, 1).expect("valid key"), 1))
    .collect()
}

/// Labelled-per-rooted ratio implied by the one-edge census.
fn calibrate() -> Result<u64> {
    let labelled = labelled_matching_census(1);
    let truth = one_edge_truth();
    if labelled.keys().ne(truth.keys()) {
        return Err(Error::Calibration(format!(
            "one-edge census has keys {:?}, expected {:?}",
            labelled.keys().collect::<Vec<_>>(),
            truth.keys().collect::<Vec<_>>()
        )));
    }
    let ratios: Vec<u64> = labelled.values().copied().collect();
    if ratios.iter().any(|&r| r != ratios[0]) {
        return Err(Error::Calibration(format!("unequal one-edge ratios {ratios:?}")));
    }
    Ok(ratios[0])
}

/// Rooted maps on all surfaces with `n` edges, by brute force over corner
/// matchings.
///
/// Relabellings preserving both fixed matchings form a group of order
/// `4^n n!` and a rooted map has `4n` root choices, so the labelled count is
/// divided by `4^{n-1}(n-1)!`, scaled by the ratio observed at one edge.
pub fn rooted_locally_orientable_counts(n: u32) -> Result<RootedCounts> {
    rooted_locally_orientable_counts_bounded(n, DEFAULT_BOUND)
}

pub fn rooted_locally_orientable_counts_bounded(n: u32, bound: u32) -> Result<RootedCounts> {
    check_bound(n, bound)?;
    let unit = calibrate()?;
    let divisor = unit
        * (1u64 << (2 * (n - 1)))
        * u64::try_from(factorial(u64::from(n - 1))).expect("small factorial");
    normalize(labelled_matching_census(n), divisor)
}
