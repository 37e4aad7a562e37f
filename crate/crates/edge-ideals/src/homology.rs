//! Exact reduced simplicial homology over the rationals or a prime field.
//!
//! The chain complex is the reduced one (the empty face is a cell in
//! dimension -1), so H~_{-1} is nonzero exactly for the complex `{{}}`.
//! Before any matrix work the cell set is shrunk by elementary collapses,
//! which preserve the homotopy type; ranks of the surviving boundary
//! matrices are then computed fraction-free (i128 with a big-integer
//! fallback) for the rationals, or by ordinary elimination mod p.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    QQ,
    GFp(u32),
}

impl std::fmt::Display for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Field::QQ => write!(f, "QQ"),
            Field::GFp(p) => write!(f, "GF({p})"),
        }
    }
}

/// Ranks of reduced homology, indexed from dimension -1 upward:
/// `ranks[d + 1]` is the rank in dimension `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    pub ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn rank(&self, d: i32) -> usize {
        let idx = d + 1;
        if idx < 0 || idx as usize >= self.ranks.len() {
            0
        } else {
            self.ranks[idx as usize]
        }
    }

    /// Largest dimension with nonzero rank, if any.
    pub fn top_nonzero(&self) -> Option<i32> {
        self.ranks
            .iter()
            .enumerate()
            .filter(|(_, &r)| r > 0)
            .map(|(i, _)| i as i32 - 1)
            .next_back()
    }

    pub fn is_trivial(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Reduced homology ranks of a complex over the chosen field.
pub fn reduced_homology_ranks(cx: &SimplicialComplex, field: Field) -> Result<HomologyRanks> {
    if cx.ground() > crate::complex::GROUND_GUARD {
        return Err(Error::Resource {
            what: "ground set size",
            value: cx.ground(),
            limit: crate::complex::GROUND_GUARD,
        });
    }
    Ok(homology_of_faces(&cx.faces(), field))
}

/// Core computation on an explicit face list (must be subset-closed and
/// include the empty face unless void). Void input gives all-zero ranks.
pub fn homology_of_faces(faces: &[u32], field: Field) -> HomologyRanks {
    if faces.is_empty() {
        return HomologyRanks { ranks: vec![0] };
    }
    let max_dim = faces.iter().map(|f| f.count_ones() as i32 - 1).max().unwrap();
    let alive = collapse(faces);

    // group surviving cells by dimension
    let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); (max_dim + 2) as usize];
    for (i, &f) in faces.iter().enumerate() {
        if alive[i] {
            by_dim[f.count_ones() as usize].push(f);
        }
    }
    for cells in &mut by_dim {
        cells.sort_unstable();
    }

    // boundary ranks: rank_d is the rank of the map from popcount d+1 cells
    // to popcount d cells
    let nd = by_dim.len();
    let mut bd_rank = vec![0usize; nd + 1];
    for d in 1..nd {
        if by_dim[d].is_empty() || by_dim[d - 1].is_empty() {
            continue;
        }
        let rows: HashMap<u32, usize> = by_dim[d - 1]
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        let mut mat: Vec<Vec<i64>> = vec![vec![0; by_dim[d].len()]; by_dim[d - 1].len()];
        for (j, &cell) in by_dim[d].iter().enumerate() {
            let mut sign = 1i64;
            let mut rem = cell;
            while rem != 0 {
                let v = rem.trailing_zeros();
                rem &= rem - 1;
                let face = cell & !(1u32 << v);
                if let Some(&i) = rows.get(&face) {
                    mat[i][j] = sign;
                }
                sign = -sign;
            }
        }
        bd_rank[d] = match field {
            Field::QQ => rank_qq(mat),
            Field::GFp(p) => rank_gfp(mat, p as u64),
        };
    }

    let ranks = (0..nd)
        .map(|d| by_dim[d].len() - bd_rank[d] - bd_rank[d + 1])
        .collect();
    HomologyRanks { ranks }
}

/// Elementary collapses: repeatedly delete a free face together with its
/// unique coface. Returns the alive flags aligned with `faces`.
fn collapse(faces: &[u32]) -> Vec<bool> {
    let m = faces.len();
    let index: HashMap<u32, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut alive = vec![true; m];
    let union: u32 = faces.iter().fold(0, |a, &f| a | f);
    let mut cofaces = vec![0u32; m];
    for &f in faces {
        let mut rem = f;
        while rem != 0 {
            let v = rem.trailing_zeros();
            rem &= rem - 1;
            let sub = f & !(1u32 << v);
            if let Some(&i) = index.get(&sub) {
                cofaces[i] += 1;
            }
        }
    }
    let mut queue: std::collections::VecDeque<usize> =
        (0..m).filter(|&i| cofaces[i] == 1).collect();
    while let Some(i) = queue.pop_front() {
        if !alive[i] || cofaces[i] != 1 {
            continue;
        }
        let sigma = faces[i];
        // locate the unique live coface
        let mut tau_idx = None;
        let mut rem = union & !sigma;
        while rem != 0 {
            let v = rem.trailing_zeros();
            rem &= rem - 1;
            if let Some(&j) = index.get(&(sigma | (1u32 << v))) {
                if alive[j] {
                    tau_idx = Some(j);
                    break;
                }
            }
        }
        let j = match tau_idx {
            Some(j) => j,
            None => continue, // stale queue entry
        };
        let tau = faces[j];
        alive[i] = false;
        alive[j] = false;
        // facets of tau (other than sigma) and of sigma lose one coface
        for (cell, skip) in [(tau, Some(sigma)), (sigma, None)] {
            let mut r = cell;
            while r != 0 {
                let v = r.trailing_zeros();
                r &= r - 1;
                let sub = cell & !(1u32 << v);
                if Some(sub) == skip {
                    continue;
                }
                if let Some(&k) = index.get(&sub) {
                    if alive[k] {
                        cofaces[k] -= 1;
                        if cofaces[k] == 1 {
                            queue.push_back(k);
                        }
                    }
                }
            }
        }
    }
    alive
}

/// Rank over the rationals: fraction-free Bareiss elimination in i128,
/// falling back to arbitrary precision if the entries outgrow it.
pub fn rank_qq(mat: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    match rank_bareiss_i128(small) {
        Some(r) => r,
        None => rank_bareiss_bigint(mat),
    }
}

fn rank_bareiss_i128(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    if rows == 0 {
        return Some(0);
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..cols {
        // smallest nonzero pivot in this column keeps entries tame
        let pivot = (r..rows)
            .filter(|&i| a[i][c] != 0)
            .min_by_key(|&i| a[i][c].unsigned_abs());
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t1 = a[r][c].checked_mul(a[i][j])?;
                let t2 = a[i][c].checked_mul(a[r][j])?;
                a[i][j] = t1.checked_sub(t2)? / prev;
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        rank += 1;
        r += 1;
        if r == rows {
            break;
        }
    }
    Some(rank)
}

fn rank_bareiss_bigint(mat: Vec<Vec<i64>>) -> usize {
    let mut a: Vec<Vec<BigInt>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let rows = a.len();
    if rows == 0 {
        return 0;
    }
    let cols = a[0].len();
    let mut rank = 0;
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..cols {
        let pivot = (r..rows)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].abs());
        let Some(p) = pivot else { continue };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let t = &a[r][c] * &a[i][j] - &a[i][c] * &a[r][j];
                a[i][j] = t / &prev;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        rank += 1;
        r += 1;
        if r == rows {
            break;
        }
    }
    rank
}

/// Rank over GF(p) by ordinary Gaussian elimination.
pub fn rank_gfp(mat: Vec<Vec<i64>>, p: u64) -> usize {
    let rows = mat.len();
    if rows == 0 {
        return 0;
    }
    let cols = mat[0].len();
    let md = |x: i64| -> u64 { x.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = mat
        .iter()
        .map(|row| row.iter().map(|&x| md(x)).collect())
        .collect();
    let inv = |x: u64| -> u64 { pow_mod(x, p - 2, p) };
    let mut rank = 0;
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pivot);
        let piv_inv = inv(a[r][c]);
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let factor = a[i][c] * piv_inv % p;
                for j in c..cols {
                    a[i][j] = (a[i][j] + p - factor * a[r][j] % p) % p;
                }
            }
        }
        rank += 1;
        r += 1;
        if r == rows {
            break;
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{independence_complex, SimplicialComplex};
    use crate::graph::Graph;

    fn cx(ground: usize, facets: &[u32]) -> SimplicialComplex {
        SimplicialComplex::from_facets(ground, facets.to_vec()).unwrap()
    }

    #[test]
    fn hollow_triangle_is_a_circle() {
        let d = cx(3, &[0b011, 0b101, 0b110]);
        let h = reduced_homology_ranks(&d, Field::QQ).unwrap();
        assert_eq!(h.rank(1), 1);
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.rank(-1), 0);
    }

    #[test]
    fn full_simplex_is_contractible() {
        let d = cx(4, &[0b1111]);
        let h = reduced_homology_ranks(&d, Field::QQ).unwrap();
        assert!(h.is_trivial());
    }

    #[test]
    fn pentagon_complex_of_c5() {
        let d = independence_complex(&Graph::cycle(5).unwrap());
        let h = reduced_homology_ranks(&d, Field::QQ).unwrap();
        assert_eq!(h.rank(1), 1);
        assert_eq!(h.rank(0), 0);
        assert_eq!(h.top_nonzero(), Some(1));
    }

    #[test]
    fn empty_complex_has_rank_in_dim_minus_one() {
        // {{}}: single empty face
        let d = cx(2, &[0]);
        let h = reduced_homology_ranks(&d, Field::QQ).unwrap();
        assert_eq!(h.rank(-1), 1);
        // two isolated points: reduced H_0 has rank 1
        let two = cx(2, &[0b01, 0b10]);
        let h2 = reduced_homology_ranks(&two, Field::QQ).unwrap();
        assert_eq!(h2.rank(0), 1);
        assert_eq!(h2.rank(-1), 0);
        // void complex: all trivial
        let void = SimplicialComplex::void(3);
        assert!(reduced_homology_ranks(&void, Field::QQ).unwrap().is_trivial());
    }

    #[test]
    fn sphere_boundary_of_tetrahedron() {
        let d = cx(4, &[0b0111, 0b1011, 0b1101, 0b1110]);
        let h = reduced_homology_ranks(&d, Field::QQ).unwrap();
        assert_eq!(h.rank(2), 1);
        assert_eq!(h.rank(1), 0);
    }

    #[test]
    fn octahedron_two_sphere() {
        // independence complex of 3 disjoint edges is an octahedron
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        let d = independence_complex(&g);
        let h = reduced_homology_ranks(&d, Field::QQ).unwrap();
        assert_eq!(h.rank(2), 1);
        assert!(h.rank(0) == 0 && h.rank(1) == 0);
    }

    #[test]
    fn fields_agree_on_small_complexes() {
        for g in crate::graph::enumerate_graphs(5, false).unwrap() {
            let d = independence_complex(&g);
            let q = reduced_homology_ranks(&d, Field::QQ).unwrap();
            let p = reduced_homology_ranks(&d, Field::GFp(32003)).unwrap();
            assert_eq!(q, p, "field mismatch on {}", g.to_graph6());
        }
    }

    #[test]
    fn rank_functions_agree() {
        let m = vec![
            vec![2, 4, 1],
            vec![0, 3, 3],
            vec![2, 7, 4],
        ];
        assert_eq!(rank_qq(m.clone()), 2);
        assert_eq!(rank_gfp(m, 32003), 2);
        assert_eq!(rank_qq(vec![]), 0);
    }
}
