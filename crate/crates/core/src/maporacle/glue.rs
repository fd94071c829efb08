use std::collections::BTreeMap;
use std::fmt;

use super::{perfect_matchings, UnionFind};
use crate::partitions::Partition;
use crate::{Error, Result};

/// An identification of the sides of labelled polygons in pairs.
///
/// Sides are numbered globally: polygon `p` owns the consecutive block
/// starting after the sides of polygons `0..p`, beginning at its fixed
/// initial side. A pair is *twisted* when its sides are glued head to head
/// (the word `a … a`) and untwisted for `a … a⁻¹`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingPattern {
    sides: Vec<u32>,
    pairs: Vec<(usize, usize)>,
    twisted: Vec<bool>,
}

/// Topology of a glued surface and its boundary graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedSurface {
    /// Vertex valences of the boundary graph.
    pub valences: Partition,
    pub orientable: bool,
    pub connected: bool,
    /// `V - E + F` with `E` the number of pairs and `F` the number of polygons.
    pub euler_characteristic: i64,
}

impl GluedSurface {
    pub fn vertex_count(&self) -> usize {
        self.valences.len()
    }

    pub fn min_valence_at_least(&self, k: u32) -> bool {
        self.valences.parts().iter().all(|&v| v >= k)
    }
}

impl GluingPattern {
    pub fn new(sides: Vec<u32>, pairs: Vec<(usize, usize)>, twisted: Vec<bool>) -> Result<Self> {
        let total: usize = sides.iter().map(|&n| n as usize).sum();
        if pairs.len() != twisted.len() || 2 * pairs.len() != total {
            return Err(Error::InvalidInput(format!(
                "{} pairs and {} flips do not match {total} sides",
                pairs.len(),
                twisted.len()
            )));
        }
        let mut seen = vec![false; total];
        for &(a, b) in &pairs {
            if a >= total || b >= total || a == b || seen[a] || seen[b] {
                return Err(Error::InvalidInput(format!("pairs {pairs:?} are not a perfect matching")));
            }
            seen[a] = true;
            seen[b] = true;
        }
        Ok(GluingPattern {
            sides,
            pairs,
            twisted,
        })
    }

    pub fn sides(&self) -> &[u32] {
        &self.sides
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn twisted(&self) -> &[bool] {
        &self.twisted
    }

    fn total_sides(&self) -> usize {
        self.sides.iter().map(|&n| n as usize).sum()
    }

    /// Polygon index of each global side, and the corner that ends it.
    fn layout(&self) -> (Vec<usize>, Vec<usize>) {
        let mut polygon = Vec::with_capacity(self.total_sides());
        let mut end = Vec::with_capacity(self.total_sides());
        let mut offset = 0;
        for (p, &n) in self.sides.iter().enumerate() {
            let n = n as usize;
            for k in 0..n {
                polygon.push(p);
                end.push(offset + (k + 1) % n);
            }
            offset += n;
        }
        (polygon, end)
    }

    /// Trace corners into vertices and 2-colour polygon orientations.
    ///
    /// Side `r` runs from corner `r` to the next corner of its polygon.
    pub fn classify(&self) -> GluedSurface {
        let (polygon, end) = self.layout();
        let total = polygon.len();
        let mut corners = UnionFind::new(total);
        for (&(a, b), &tw) in self.pairs.iter().zip(&self.twisted) {
            if tw {
                corners.union(a, b);
                corners.union(end[a], end[b]);
            } else {
                corners.union(a, end[b]);
                corners.union(end[a], b);
            }
        }
        let valences = Partition::from_unsorted(corners.class_sizes());

        let np = self.sides.len();
        let mut adjacency: Vec<Vec<(usize, bool)>> = vec![Vec::new(); np];
        for (&(a, b), &tw) in self.pairs.iter().zip(&self.twisted) {
            adjacency[polygon[a]].push((polygon[b], tw));
            adjacency[polygon[b]].push((polygon[a], tw));
        }
        let mut colour: Vec<Option<bool>> = vec![None; np];
        let mut orientable = true;
        let mut reached = 0;
        if np > 0 {
            colour[0] = Some(false);
            let mut stack = vec![0];
            reached = 1;
            while let Some(p) = stack.pop() {
                let cp = colour[p].expect("coloured before push");
                for &(q, tw) in &adjacency[p] {
                    let want = cp ^ tw;
                    match colour[q] {
                        None => {
                            colour[q] = Some(want);
                            reached += 1;
                            stack.push(q);
                        }
                        Some(c) if c != want => orientable = false,
                        Some(_) => {}
                    }
                }
            }
        }
        let euler_characteristic =
            valences.len() as i64 - self.pairs.len() as i64 + np as i64;
        GluedSurface {
            valences,
            orientable,
            connected: reached == np,
            euler_characteristic,
        }
    }

    /// Pattern word such as `abab⁻¹`, one word per polygon separated by `|`.
    /// Letters follow first appearance; an untwisted pair's second side is
    /// inverted.
    pub fn word(&self) -> String {
        let total = self.total_sides();
        let mut partner = vec![(0usize, false); total];
        for (&(a, b), &tw) in self.pairs.iter().zip(&self.twisted) {
            partner[a] = (b, tw);
            partner[b] = (a, tw);
        }
        let mut letter: Vec<Option<char>> = vec![None; total];
        let mut next = 0u8;
        let mut words = Vec::new();
        let mut offset = 0;
        for &n in &self.sides {
            let mut w = String::new();
            for r in offset..offset + n as usize {
                match letter[r] {
                    Some(c) => {
                        w.push(c);
                        if !partner[r].1 {
                            w.push('⁻');
                            w.push('¹');
                        }
                    }
                    None => {
                        let c = if next < 26 { (b'a' + next) as char } else { '?' };
                        next += 1;
                        letter[r] = Some(c);
                        letter[partner[r].0] = Some(c);
                        w.push(c);
                    }
                }
            }
            words.push(w);
            offset += n as usize;
        }
        words.join(" | ")
    }

    /// Count the orientable double covers among the `2^n` lifts of this
    /// gluing to two copies `P_i^±` of each polygon.
    ///
    /// A lift glues either `e^+ ~ f^+, e^- ~ f^-` or `e^+ ~ f^-, e^- ~ f^+`
    /// for every pair. It counts when it is connected and orientable with
    /// the sheet swap reversing orientation. Returns `(count, vertex counts
    /// of the counted lifts)`.
    pub fn orientable_lifts(&self) -> (usize, Vec<usize>) {
        let total = self.total_sides();
        let np = self.sides.len();
        let mut lifted_sides = self.sides.clone();
        lifted_sides.extend_from_slice(&self.sides);
        let mut count = 0;
        let mut vertex_counts = Vec::new();
        for choice in 0u64..(1u64 << self.pairs.len()) {
            let mut pairs = Vec::with_capacity(2 * self.pairs.len());
            let mut twisted = Vec::with_capacity(2 * self.pairs.len());
            for (k, (&(a, b), &tw)) in self.pairs.iter().zip(&self.twisted).enumerate() {
                let crossed = choice >> k & 1 == 1;
                let (b_plus, b_minus) = if crossed { (b + total, b) } else { (b, b + total) };
                pairs.push((a, b_plus));
                pairs.push((a + total, b_minus));
                twisted.push(tw);
                twisted.push(tw);
            }
            let lift = GluingPattern {
                sides: lifted_sides.clone(),
                pairs,
                twisted,
            };
            let surface = lift.classify();
            if !surface.connected || !surface.orientable {
                continue;
            }
            if !lift.sheet_swap_reverses(np) {
                continue;
            }
            count += 1;
            vertex_counts.push(surface.vertex_count());
        }
        (count, vertex_counts)
    }

    /// In a connected orientable gluing of `2·np` polygons, whether copy `i`
    /// and copy `i + np` carry opposite orientations.
    fn sheet_swap_reverses(&self, np: usize) -> bool {
        let (polygon, _) = self.layout();
        let mut colour: Vec<Option<bool>> = vec![None; 2 * np];
        colour[0] = Some(false);
        let mut changed = true;
        while changed {
            changed = false;
            for (&(a, b), &tw) in self.pairs.iter().zip(&self.twisted) {
                let (p, q) = (polygon[a], polygon[b]);
                match (colour[p], colour[q]) {
                    (Some(c), None) => {
                        colour[q] = Some(c ^ tw);
                        changed = true;
                    }
                    (None, Some(c)) => {
                        colour[p] = Some(c ^ tw);
                        changed = true;
                    }
                    _ => {}
                }
            }
        }
        (0..np).all(|i| colour[i] != colour[i + np])
    }
}

impl fmt::Display for GluingPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word())
    }
}

/// All `(2n-1)!! · 2^n` pairings with flip bits of the given polygons.
pub fn enumerate_patterns(sides: &[u32]) -> Result<Vec<GluingPattern>> {
    let total: u32 = sides.iter().sum();
    if sides.contains(&0) || total % 2 != 0 {
        return Err(Error::InvalidInput(format!(
            "side counts {sides:?} must be positive with an even total"
        )));
    }
    let n = total as usize / 2;
    let mut out = Vec::new();
    for partner in perfect_matchings(total as usize) {
        let pairs: Vec<(usize, usize)> = (0..partner.len())
            .filter(|&a| a < partner[a])
            .map(|a| (a, partner[a]))
            .collect();
        for flips in 0u64..(1u64 << n) {
            out.push(GluingPattern {
                sides: sides.to_vec(),
                pairs: pairs.clone(),
                twisted: (0..n).map(|k| flips >> k & 1 == 1).collect(),
            });
        }
    }
    Ok(out)
}

/// Euler characteristic and orientability of a connected surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurfaceClass {
    pub euler_characteristic: i64,
    pub orientable: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusRow {
    pub all: u64,
    /// Gluings whose boundary graph has every valence at least 3.
    pub valence_at_least_3: u64,
}

/// Connected gluings of fixed polygons grouped by surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueCensus {
    pub sides: Vec<u32>,
    /// Pairings times flip assignments, before any filter.
    pub raw_total: u64,
    pub rows: BTreeMap<SurfaceClass, CensusRow>,
}

impl GlueCensus {
    fn row(&self, euler: i64, orientable: bool) -> CensusRow {
        self.rows
            .get(&SurfaceClass {
                euler_characteristic: euler,
                orientable,
            })
            .copied()
            .unwrap_or_default()
    }

    /// `λ^N_g`: nonorientable, Euler characteristic `1 - g`, valence ≥ 3.
    pub fn lambda_nonorientable(&self, g: u32) -> u64 {
        self.row(1 - i64::from(g), false).valence_at_least_3
    }

    /// Orientable gluings of Euler characteristic `1 - g` with valence ≥ 3,
    /// i.e. `λ^O` of orientable genus `(g+1)/2`; zero for even `g`.
    pub fn lambda_orientable(&self, g: u32) -> u64 {
        self.row(1 - i64::from(g), true).valence_at_least_3
    }

    /// `λ_g`: either orientability, Euler characteristic `1 - g`, valence ≥ 3.
    pub fn lambda(&self, g: u32) -> u64 {
        self.lambda_nonorientable(g) + self.lambda_orientable(g)
    }
}

pub fn glue_census(sides: &[u32]) -> Result<GlueCensus> {
    let patterns = enumerate_patterns(sides)?;
    let mut rows: BTreeMap<SurfaceClass, CensusRow> = BTreeMap::new();
    for p in &patterns {
        let s = p.classify();
        if !s.connected {
            continue;
        }
        let row = rows
            .entry(SurfaceClass {
                euler_characteristic: s.euler_characteristic,
                orientable: s.orientable,
            })
            .or_default();
        row.all += 1;
        if s.min_valence_at_least(3) {
            row.valence_at_least_3 += 1;
        }
    }
    Ok(GlueCensus {
        sides: sides.to_vec(),
        raw_total: patterns.len() as u64,
        rows,
    })
}

/// Ordered tuples of `parts` positive integers summing to `total`.
pub fn compositions(total: u32, parts: u32) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for first in 1..=total.saturating_sub(parts - 1) {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(euler: i64, orientable: bool) -> SurfaceClass {
        SurfaceClass {
            euler_characteristic: euler,
            orientable,
        }
    }

    #[test]
    fn digon() {
        let census = glue_census(&[2]).unwrap();
        assert_eq!(census.raw_total, 2);
        assert_eq!(census.rows[&class(2, true)].all, 1);
        assert_eq!(census.rows[&class(1, false)].all, 1);
        assert_eq!(census.rows.len(), 2);
    }

    #[test]
    fn square_gives_four_klein_bottles() {
        let census = glue_census(&[4]).unwrap();
        assert_eq!(census.raw_total, 12);
        assert_eq!(census.lambda_nonorientable(1), 4);
        assert_eq!(census.lambda_orientable(1), 1);
        let mut words: Vec<String> = enumerate_patterns(&[4])
            .unwrap()
            .into_iter()
            .filter(|p| {
                let s = p.classify();
                !s.orientable && s.euler_characteristic == 0 && s.min_valence_at_least(3)
            })
            .map(|p| p.word())
            .collect();
        words.sort();
        assert_eq!(words, vec!["aabb", "abab⁻¹", "aba⁻¹b", "abba"]);
    }

    #[test]
    fn euler_poincare_constraint() {
        for sides in [vec![4], vec![6], vec![3, 3], vec![1, 3], vec![2, 2, 2]] {
            for p in enumerate_patterns(&sides).unwrap() {
                let s = p.classify();
                if !s.connected {
                    continue;
                }
                assert!(s.vertex_count() >= 1);
                if s.orientable {
                    assert!(s.euler_characteristic <= 2 && s.euler_characteristic % 2 == 0);
                } else {
                    assert!(s.euler_characteristic <= 1);
                }
            }
        }
    }

    #[test]
    fn two_polygon_lifts() {
        let mut checked = 0;
        for sides in [vec![1, 3], vec![2, 2], vec![3, 3]] {
            for p in enumerate_patterns(&sides).unwrap() {
                let s = p.classify();
                if !s.connected || s.orientable {
                    continue;
                }
                let (count, vertices) = p.orientable_lifts();
                assert_eq!(count, 2, "{p}");
                assert!(vertices.iter().all(|&v| v == 2 * s.vertex_count()));
                checked += 1;
            }
        }
        assert!(checked > 0);
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(6, 1), vec![vec![6]]);
        assert!(compositions(1, 2).is_empty());
    }
}
