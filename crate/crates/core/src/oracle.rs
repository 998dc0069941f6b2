//! Brute-force verification engines, independent of the formula route:
//! definitional colon membership, ideal intersection, and multigraded Betti
//! numbers from the reduced GF(2) homology of upper Koszul complexes.
//!
//! GF(2) is enough here: ideals with linear quotients have resolutions that
//! do not depend on the characteristic, so the numbers must match exactly.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::monomial::{MonomialIdeal, SquarefreeMonomial, Var};

/// Default cap on the number of ring variables the Betti oracle will scan.
pub const DEFAULT_BETTI_VAR_CAP: usize = 12;

/// A simplicial complex on at most 32 vertices, faces as bitmasks, sorted.
/// No faces at all is the void complex; `{∅}` is the empty complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplexSmall {
    vertex_count: usize,
    faces: Vec<u32>,
}

impl SimplicialComplexSmall {
    pub fn from_faces(vertex_count: usize, faces: impl IntoIterator<Item = u32>) -> Result<Self> {
        if vertex_count > 32 {
            return Err(Error::TooLarge(format!("{vertex_count} vertices (max 32)")));
        }
        let mut faces: Vec<u32> = faces.into_iter().collect();
        faces.sort_unstable();
        faces.dedup();
        let present: std::collections::HashSet<u32> = faces.iter().copied().collect();
        for &f in &faces {
            if vertex_count < 32 && f >> vertex_count != 0 {
                return Err(Error::Argument(format!("face {f:#b} uses a vertex out of range")));
            }
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if !present.contains(&(f ^ bit)) {
                    return Err(Error::Argument(format!("face {f:#b} has a missing facet")));
                }
            }
        }
        Ok(Self { vertex_count, faces })
    }

    /// All subsets of `k` vertices.
    pub fn simplex(k: usize) -> Self {
        Self {
            vertex_count: k,
            faces: (0..1u32 << k).collect(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Faces of dimension `dim` (cardinality `dim + 1`).
    fn faces_of_dim(&self, dim: isize) -> Vec<u32> {
        self.faces
            .iter()
            .copied()
            .filter(|f| f.count_ones() as isize == dim + 1)
            .collect()
    }
}

/// Rank over GF(2) of a set of bit rows.
fn gf2_rank(rows: Vec<Vec<u64>>) -> usize {
    // basis keyed by the pivot (lowest set bit)
    let mut basis: HashMap<usize, Vec<u64>> = HashMap::new();
    for mut row in rows {
        loop {
            let Some(pivot) = lowest_bit(&row) else { break };
            match basis.get(&pivot) {
                Some(b) => {
                    for (x, y) in row.iter_mut().zip(b) {
                        *x ^= y;
                    }
                }
                None => {
                    basis.insert(pivot, row);
                    break;
                }
            }
        }
    }
    basis.len()
}

fn lowest_bit(row: &[u64]) -> Option<usize> {
    row.iter()
        .enumerate()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Rank of the boundary map from `dim`-faces to `(dim-1)`-faces.
fn boundary_rank(c: &SimplicialComplexSmall, dim: isize) -> usize {
    if dim < 0 {
        return 0;
    }
    let lower = c.faces_of_dim(dim - 1);
    if lower.is_empty() {
        return 0;
    }
    let index: HashMap<u32, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let words = lower.len().div_ceil(64);
    let rows = c
        .faces_of_dim(dim)
        .into_iter()
        .map(|f| {
            let mut row = vec![0u64; words];
            let mut rest = f;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let col = index[&(f ^ bit)];
                row[col / 64] |= 1 << (col % 64);
            }
            row
        })
        .collect();
    gf2_rank(rows)
}

/// `dim H~_dim(c; GF(2))`, with `H~_{-1}({∅}) = 1` and everything zero on
/// the void complex.
pub fn reduced_homology_gf2(c: &SimplicialComplexSmall, dim: isize) -> usize {
    if dim < -1 {
        return 0;
    }
    let chains = c.faces_of_dim(dim).len();
    chains - boundary_rank(c, dim) - boundary_rank(c, dim + 1)
}

/// Faces `W ⊆ supp(a)` such that `a / W` still lies in `I`. Vertex `j` of the
/// complex is the `j`-th variable of `a` (s-variables first, then t).
pub fn upper_koszul_complex(
    ideal: &MonomialIdeal,
    a: &SquarefreeMonomial,
) -> Result<SimplicialComplexSmall> {
    let vars: Vec<Var> = a.vars().collect();
    if vars.len() > 32 {
        return Err(Error::TooLarge(format!("multidegree with {} variables", vars.len())));
    }
    Ok(koszul_on(ideal, &vars, full_mask(vars.len())))
}

fn full_mask(k: usize) -> u32 {
    if k == 32 {
        u32::MAX
    } else {
        (1u32 << k) - 1
    }
}

fn monomial_of(vars: &[Var], mask: u32) -> SquarefreeMonomial {
    SquarefreeMonomial::from_vars(
        vars.iter()
            .enumerate()
            .filter(|(j, _)| mask >> j & 1 == 1)
            .map(|(_, v)| *v),
    )
}

/// Upper Koszul complex of `I` at the sub-multidegree `a_mask` of `vars`,
/// relabelled onto vertices `0..popcount(a_mask)`.
fn koszul_on(ideal: &MonomialIdeal, vars: &[Var], a_mask: u32) -> SimplicialComplexSmall {
    let local: Vec<Var> = vars
        .iter()
        .enumerate()
        .filter(|(j, _)| a_mask >> j & 1 == 1)
        .map(|(_, v)| *v)
        .collect();
    let k = local.len();
    let full = full_mask(k);
    let faces = (0..=full)
        .filter(|&w| ideal.contains(&monomial_of(&local, full & !w)))
        .collect();
    SimplicialComplexSmall {
        vertex_count: k,
        faces,
    }
}

/// Graded Betti numbers `beta_{i,j}` with `i` the homological degree and `j`
/// the total degree.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    /// `beta_i = sum_j beta_{i,j}`, up to the largest nonzero `i`.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// Every nonzero entry sits at `j = d + i`.
    pub fn is_linear(&self, d: usize) -> bool {
        self.entries.keys().all(|&(i, j)| j == d + i)
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, j)| j - i).max()
    }
}

/// `beta_{i,j}(I) = sum_{|a| = j} dim H~_{i-1}(K^a(I))` over all squarefree
/// multidegrees `a` in the support of `I`.
pub fn betti_table_oracle(ideal: &MonomialIdeal, var_cap: usize) -> Result<BettiTable> {
    let vars: Vec<Var> = ideal.support().vars().collect();
    if vars.len() > var_cap.min(30) {
        return Err(Error::TooLarge(format!(
            "{} ring variables exceed the Betti oracle cap of {var_cap}",
            vars.len()
        )));
    }
    let full = full_mask(vars.len());
    let mut per_degree: Vec<((usize, usize), u64)> = (0..=full)
        .into_par_iter()
        .filter(|&a| ideal.contains(&monomial_of(&vars, a)))
        .flat_map_iter(|a| {
            let c = koszul_on(ideal, &vars, a);
            let j = a.count_ones() as usize;
            (0..=j)
                .map(move |i| ((i, j), reduced_homology_gf2(&c, i as isize - 1) as u64))
                .filter(|(_, b)| *b > 0)
                .collect::<Vec<_>>()
        })
        .collect();
    per_degree.sort_unstable();
    let mut table = BettiTable::default();
    for (key, b) in per_degree {
        *table.entries.entry(key).or_insert(0) += b;
    }
    Ok(table)
}

/// Minimal generators of `A ∩ B` from pairwise lcms.
pub fn intersect_ideals(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::from_generators(
        a.gens()
            .iter()
            .flat_map(|u| b.gens().iter().map(move |v| u.lcm(v))),
    )
}

/// Definitional test for `w ∈ (I : m)`: some generator divides `w * m`.
pub fn colon_membership_check(
    ideal: &MonomialIdeal,
    m: &SquarefreeMonomial,
    w: &SquarefreeMonomial,
) -> bool {
    ideal.contains(&w.lcm(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(s: &str) -> SquarefreeMonomial {
        s.parse().unwrap()
    }

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::from_generators(gens.iter().map(|g| mono(g)))
    }

    #[test]
    fn koszul_face_convention() {
        let c = upper_koszul_complex(&ideal(&["t1"]), &mono("t1")).unwrap();
        assert_eq!(c.faces(), [0]);
        assert_eq!(reduced_homology_gf2(&c, -1), 1);

        let c = upper_koszul_complex(&ideal(&["t1*t2"]), &mono("t1*t2")).unwrap();
        assert_eq!(c.faces(), [0]);
        assert_eq!(reduced_homology_gf2(&c, -1), 1);

        let c = upper_koszul_complex(&ideal(&["t1*t2"]), &mono("s1*t2")).unwrap();
        assert!(c.is_void());
        assert!((-1..3).all(|d| reduced_homology_gf2(&c, d) == 0));
    }

    #[test]
    fn homology_examples() {
        let simplex = SimplicialComplexSmall::simplex(3);
        assert!((-1..4).all(|d| reduced_homology_gf2(&simplex, d) == 0));

        let circle = SimplicialComplexSmall::from_faces(3, [0, 1, 2, 4, 3, 5, 6]).unwrap();
        assert_eq!(reduced_homology_gf2(&circle, 1), 1);
        assert_eq!(reduced_homology_gf2(&circle, 0), 0);

        let points = SimplicialComplexSmall::from_faces(2, [0, 1, 2]).unwrap();
        assert_eq!(reduced_homology_gf2(&points, 0), 1);

        // hollow tetrahedron is a 2-sphere
        let sphere = SimplicialComplexSmall::from_faces(4, (0..15u32).collect::<Vec<_>>()).unwrap();
        assert_eq!(reduced_homology_gf2(&sphere, 2), 1);
        assert_eq!(reduced_homology_gf2(&sphere, 1), 0);
    }

    #[test]
    fn complexes_must_be_closed() {
        assert!(SimplicialComplexSmall::from_faces(2, [0, 3]).is_err());
        assert!(SimplicialComplexSmall::from_faces(1, [0, 2]).is_err());
    }

    #[test]
    fn betti_oracle_on_k1() {
        let table = betti_table_oracle(&ideal(&["t1", "s1"]), DEFAULT_BETTI_VAR_CAP).unwrap();
        assert_eq!(table.get(0, 1), 2);
        assert_eq!(table.get(1, 2), 1);
        assert_eq!(table.totals(), [2, 1]);
        assert!(table.is_linear(1));
    }

    #[test]
    fn betti_oracle_on_p2() {
        let table =
            betti_table_oracle(&ideal(&["t1*t2", "s1*t2", "s2*t1"]), DEFAULT_BETTI_VAR_CAP).unwrap();
        assert_eq!(table.totals(), [3, 2]);
        assert!(table.is_linear(2));
        assert_eq!(table.regularity(), Some(2));
    }

    #[test]
    fn betti_oracle_non_linear_ideal() {
        // (x1*x2, x3*x4): Koszul-type resolution with beta_{1,4} = 1
        let table = betti_table_oracle(&ideal(&["t1*t2", "t3*t4"]), 12).unwrap();
        assert_eq!(table.get(0, 2), 2);
        assert_eq!(table.get(1, 4), 1);
        assert!(!table.is_linear(2));
    }

    #[test]
    fn betti_oracle_cap() {
        let big = ideal(&["s1*s2*s3*s4*s5*s6*s7", "t1*t2*t3*t4*t5*t6"]);
        assert!(matches!(betti_table_oracle(&big, 12), Err(Error::TooLarge(_))));
    }

    #[test]
    fn intersection_examples() {
        assert_eq!(
            intersect_ideals(&ideal(&["s1", "t1"]), &ideal(&["t1", "t2"])),
            ideal(&["t1", "s1*t2"])
        );
        let a = ideal(&["t1*t2", "s1*t2", "s2*t1"]);
        assert_eq!(intersect_ideals(&a, &a), a);
        assert_eq!(intersect_ideals(&a, &MonomialIdeal::unit()), a);
    }

    #[test]
    fn membership_examples() {
        let i = ideal(&["t1*t2"]);
        assert!(colon_membership_check(&i, &mono("s1*t2"), &mono("t1")));
        assert!(!colon_membership_check(&i, &mono("s1*t2"), &mono("s2")));
        assert!(colon_membership_check(&i, &mono("t1*t2*s3"), &SquarefreeMonomial::one()));
    }
}
