//! Order complexes of rank-selected subposets and their exact reduced
//! homology.
//!
//! The complex of a rank selection `S` has the selected flats as
//! vertices and every chain of the proper part as a face (the empty
//! face included). Faces are ordered by rank, so no orientation signs
//! appear beyond the alternating sum in the boundary, and any rank- and
//! flat-preserving permutation acts by a plain 0/1 permutation matrix
//! on each chain group.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::linalg::SparseIntMatrix;
use crate::matroid::RankSelectedPoset;
use crate::perm::Perm;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopologyError {
    #[error("the permutation does not act as an automorphism of the selected poset")]
    NotAnAutomorphism,
    #[error("trace of the group action on top homology is not an integer: {got}")]
    NonIntegerTrace { got: String },
}

/// Simplicial chain model of the proper part of a rank-selected poset.
#[derive(Debug, Clone)]
pub struct OrderComplex {
    /// Flat indices (into the source lattice) of the vertices, ordered
    /// by (rank, bitset).
    vertex_flats: Vec<usize>,
    /// Position of each lattice flat among the vertices.
    vertex_of_flat: HashMap<usize, usize>,
    /// `faces[d]` lists the dimension-`d` faces, each a strictly
    /// increasing vertex list (rank-increasing by construction).
    faces: Vec<Vec<Vec<usize>>>,
    /// Per dimension, face -> position.
    face_index: Vec<HashMap<Vec<usize>, usize>>,
    /// `|S| - 1`; `-1` when the selection is empty.
    top_dim: isize,
}

/// Reduced Betti numbers, indexed from dimension -1 upward.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiVector {
    betti: Vec<usize>,
}

impl BettiVector {
    /// Reduced Betti number in dimension `i >= -1`.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.betti.get(k).copied())
            .unwrap_or(0)
    }

    pub fn top(&self) -> usize {
        self.betti.last().copied().unwrap_or(0)
    }

    /// Entries from dimension -1 up to the top dimension.
    pub fn as_slice(&self) -> &[usize] {
        &self.betti
    }

    pub fn to_json(&self) -> Value {
        json!({ "from_dimension": -1, "betti": self.betti })
    }
}

impl OrderComplex {
    pub fn build(poset: &RankSelectedPoset<'_>) -> OrderComplex {
        let vertex_flats: Vec<usize> = poset.members().to_vec();
        let vertex_of_flat: HashMap<usize, usize> = vertex_flats
            .iter()
            .enumerate()
            .map(|(v, &f)| (f, v))
            .collect();
        let top = poset.ranks().len();
        let lattice = poset.lattice;
        let mut faces: Vec<Vec<Vec<usize>>> = Vec::new();
        if top > 0 {
            // dimension 0: all vertices
            faces.push((0..vertex_flats.len()).map(|v| vec![v]).collect());
            for d in 1..top {
                let mut level: Vec<Vec<usize>> = Vec::new();
                for face in &faces[d - 1] {
                    let last_flat = vertex_flats[*face.last().expect("nonempty face")];
                    for (v, &f) in vertex_flats.iter().enumerate() {
                        if v > face[face.len() - 1]
                            && lattice.flat(f).rank > lattice.flat(last_flat).rank
                            && lattice.leq(last_flat, f)
                        {
                            let mut ext = face.clone();
                            ext.push(v);
                            level.push(ext);
                        }
                    }
                }
                faces.push(level);
            }
        }
        let face_index = faces
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, f)| (f.clone(), i))
                    .collect()
            })
            .collect();
        OrderComplex {
            vertex_flats,
            vertex_of_flat,
            faces,
            face_index,
            top_dim: top as isize - 1,
        }
    }

    pub fn top_dim(&self) -> isize {
        self.top_dim
    }

    /// Number of faces of dimension `d` (the empty face for `d = -1`).
    pub fn face_count(&self, d: isize) -> usize {
        if d == -1 {
            1
        } else {
            self.faces
                .get(d as usize)
                .map(Vec::len)
                .unwrap_or(0)
        }
    }

    pub fn faces_of_dim(&self, d: usize) -> &[Vec<usize>] {
        &self.faces[d]
    }

    pub fn vertex_flats(&self) -> &[usize] {
        &self.vertex_flats
    }

    /// Boundary map from dimension `d` to dimension `d - 1`; for
    /// `d = 0` this is the augmentation onto the empty face.
    pub fn boundary(&self, d: usize) -> SparseIntMatrix {
        if d == 0 {
            let mut m = SparseIntMatrix::zero(1, self.face_count(0));
            for c in 0..self.face_count(0) {
                m.add(0, c, 1);
            }
            return m;
        }
        let rows = self.face_count(d as isize - 1);
        let cols = self.face_count(d as isize);
        let mut m = SparseIntMatrix::zero(rows, cols);
        for (c, face) in self.faces[d].iter().enumerate() {
            let mut sign = 1i64;
            for omit in 0..face.len() {
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != omit)
                    .map(|(_, &v)| v)
                    .collect();
                let r = self.face_index[d - 1][&sub];
                m.add(r, c, sign);
                sign = -sign;
            }
        }
        m
    }

    /// Exact reduced Betti numbers over the rationals.
    pub fn reduced_betti(&self) -> BettiVector {
        if self.top_dim < 0 {
            return BettiVector { betti: vec![1] };
        }
        let top = self.top_dim as usize;
        let ranks: Vec<usize> = (0..=top).map(|d| self.boundary(d).rank()).collect();
        let mut betti = Vec::with_capacity(top + 2);
        // dimension -1: one empty face minus the augmentation rank
        betti.push(1 - ranks[0].min(1));
        for d in 0..=top {
            let incoming = if d < top { ranks[d + 1] } else { 0 };
            betti.push(self.face_count(d as isize) - ranks[d] - incoming);
        }
        BettiVector { betti }
    }

    /// Count the faces of dimension `d` fixed by a vertex permutation.
    fn fixed_faces(&self, vperm: &[usize], d: isize) -> usize {
        if d == -1 {
            return 1;
        }
        self.faces[d as usize]
            .iter()
            .filter(|face| face.iter().all(|&v| vperm[v] == v))
            .count()
    }

    /// The vertex permutation induced by a ground-set permutation, or
    /// an error when it does not preserve the selected flats.
    pub fn vertex_action(
        &self,
        lattice: &crate::matroid::FlatLattice,
        g: &Perm,
    ) -> Result<Vec<usize>, TopologyError> {
        let mut vperm = vec![0usize; self.vertex_flats.len()];
        for (v, &fi) in self.vertex_flats.iter().enumerate() {
            let flat = lattice.flat(fi);
            let image = g.act_on_set(flat.set);
            let Some(fj) = lattice.index_of(image) else {
                return Err(TopologyError::NotAnAutomorphism);
            };
            if lattice.flat(fj).rank != flat.rank {
                return Err(TopologyError::NotAnAutomorphism);
            }
            let Some(&w) = self.vertex_of_flat.get(&fj) else {
                return Err(TopologyError::NotAnAutomorphism);
            };
            vperm[v] = w;
        }
        Ok(vperm)
    }

    /// Trace of a poset automorphism on the top reduced homology.
    ///
    /// The top homology is the kernel of the top boundary map (there is
    /// no higher chain group). A kernel basis `K` in free-column form is
    /// computed once; solving `K X = P K` for the action matrix `X` then
    /// amounts to reading off the free-column rows. The trace must be an
    /// integer; a non-integer value is reported, never rounded.
    pub fn top_homology_trace(
        &self,
        lattice: &crate::matroid::FlatLattice,
        g: &Perm,
    ) -> Result<BigInt, TopologyError> {
        if self.top_dim < 0 {
            // only the empty face: one-dimensional fixed homology
            return Ok(BigInt::one());
        }
        let vperm = self.vertex_action(lattice, g)?;
        let top = self.top_dim as usize;
        // permutation of top faces induced by the vertex action
        let n_top = self.face_count(self.top_dim);
        let mut face_perm_inv = vec![usize::MAX; n_top];
        for (i, face) in self.faces[top].iter().enumerate() {
            let mut image: Vec<usize> = face.iter().map(|&v| vperm[v]).collect();
            image.sort_unstable();
            let Some(&j) = self.face_index[top].get(&image) else {
                return Err(TopologyError::NotAnAutomorphism);
            };
            face_perm_inv[j] = i;
        }
        let kernel = self.boundary(top).kernel_basis();
        if kernel.dim() == 0 {
            return Ok(BigInt::zero());
        }
        let trace = kernel.permuted_trace(&face_perm_inv);
        if !trace.is_integer() {
            return Err(TopologyError::NonIntegerTrace {
                got: trace.to_string(),
            });
        }
        Ok(trace.to_integer())
    }

    /// Alternating fixed-face count over all dimensions, the empty face
    /// included (a Lefschetz-style invariant used by the tests).
    pub fn lefschetz_fixed_sum(
        &self,
        lattice: &crate::matroid::FlatLattice,
        g: &Perm,
    ) -> Result<BigInt, TopologyError> {
        let vperm = if self.top_dim >= 0 {
            self.vertex_action(lattice, g)?
        } else {
            Vec::new()
        };
        let mut total = -BigInt::one(); // dimension -1
        let mut sign = BigInt::one();
        for d in 0..=self.top_dim {
            total += &sign * BigInt::from(self.fixed_faces(&vperm, d));
            sign = -sign;
        }
        Ok(total)
    }
}

/// Euler-characteristic consistency: the alternating sum of reduced
/// Betti numbers must equal the alternating face-count sum.
pub fn euler_characteristic_checks(complex: &OrderComplex, betti: &BettiVector) -> bool {
    let mut from_faces = BigInt::zero();
    let mut from_betti = BigInt::zero();
    let mut sign = -BigInt::one();
    for d in -1..=complex.top_dim {
        from_faces += &sign * BigInt::from(complex.face_count(d));
        from_betti += &sign * BigInt::from(betti.get(d));
        sign = -sign;
    }
    from_faces == from_betti
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{FlatLattice, Matroid};

    fn boolean_lattice(n: usize) -> FlatLattice {
        FlatLattice::build(&Matroid::boolean(n).unwrap())
    }

    #[test]
    fn antichain_complex() {
        let l = boolean_lattice(3);
        let p = l.rank_selected(&[1]).unwrap();
        let c = OrderComplex::build(&p);
        assert_eq!(c.face_count(0), 3);
        assert_eq!(c.top_dim(), 0);
        let b = c.reduced_betti();
        assert_eq!(b.get(-1), 0);
        assert_eq!(b.get(0), 2); // components minus one
    }

    #[test]
    fn hexagon_circle() {
        let l = boolean_lattice(3);
        let p = l.rank_selected(&[1, 2]).unwrap();
        let c = OrderComplex::build(&p);
        assert_eq!(c.face_count(0), 6);
        assert_eq!(c.face_count(1), 6);
        let b = c.reduced_betti();
        // the number of permutations of [3] with descent set {1,2} is 1
        assert_eq!(b.get(1), 1);
        assert_eq!(b.get(0), 0);
        assert!(euler_characteristic_checks(&c, &b));
    }

    #[test]
    fn empty_selection_has_empty_face_only() {
        let l = boolean_lattice(3);
        let p = l.rank_selected(&[]).unwrap();
        let c = OrderComplex::build(&p);
        assert_eq!(c.top_dim(), -1);
        assert_eq!(c.face_count(-1), 1);
        let b = c.reduced_betti();
        assert_eq!(b.get(-1), 1);
        let g = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        assert_eq!(c.top_homology_trace(&l, &g).unwrap(), BigInt::one());
    }

    #[test]
    fn boundary_squares_to_zero() {
        for (m, ranks) in [
            (Matroid::boolean(4).unwrap(), vec![1, 2, 3]),
            (Matroid::uniform(3, 5).unwrap(), vec![1, 2]),
            (Matroid::complete_graph(4).unwrap(), vec![1, 2]),
        ] {
            let l = FlatLattice::build(&m);
            let p = l.rank_selected(&ranks).unwrap();
            let c = OrderComplex::build(&p);
            for d in 1..=(c.top_dim() as usize) {
                let outer = c.boundary(d);
                let inner = c.boundary(d - 1);
                let mut dense_outer = vec![vec![0i64; outer.cols]; outer.rows];
                for r in 0..outer.rows {
                    for &(cc, ref v) in outer.row(r) {
                        dense_outer[r][cc] = i64::try_from(v.clone()).unwrap();
                    }
                }
                let mut dense_inner = vec![vec![0i64; inner.cols]; inner.rows];
                for r in 0..inner.rows {
                    for &(cc, ref v) in inner.row(r) {
                        dense_inner[r][cc] = i64::try_from(v.clone()).unwrap();
                    }
                }
                for i in 0..inner.rows {
                    for j in 0..outer.cols {
                        let mut s = 0i64;
                        for k in 0..inner.cols {
                            s += dense_inner[i][k] * dense_outer[k][j];
                        }
                        assert_eq!(s, 0, "boundary composition must vanish");
                    }
                }
            }
        }
    }

    #[test]
    fn traces_on_three_points() {
        // alpha/beta inclusion-exclusion oracle on the antichain of
        // rank-1 subsets of [3]: character (2, 0, -1) on the classes
        // (identity, transposition, 3-cycle)
        let l = boolean_lattice(3);
        let p = l.rank_selected(&[1]).unwrap();
        let c = OrderComplex::build(&p);
        let id = Perm::identity(3);
        let swap = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let rot = Perm::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        assert_eq!(c.top_homology_trace(&l, &id).unwrap(), BigInt::from(2));
        assert_eq!(c.top_homology_trace(&l, &swap).unwrap(), BigInt::from(0));
        assert_eq!(c.top_homology_trace(&l, &rot).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn cohen_macaulay_vanishing_below_top() {
        for (m, label) in [
            (Matroid::boolean(4).unwrap(), "B4"),
            (Matroid::uniform(4, 6).unwrap(), "U46"),
            (Matroid::complete_graph(4).unwrap(), "K4"),
        ] {
            let l = FlatLattice::build(&m);
            assert!(l.len() <= 200);
            for s in crate::matroid::stab(1, l.rank() - 1) {
                if s.len() > 4 {
                    continue;
                }
                let p = l.rank_selected(&s).unwrap();
                let b = OrderComplex::build(&p).reduced_betti();
                let top = s.len() as isize - 1;
                for d in -1..top {
                    assert_eq!(b.get(d), 0, "{label} S={s:?} dim {d}");
                }
            }
        }
    }

    #[test]
    fn hopf_trace_identity() {
        // with lower homology vanishing, the alternating fixed-face sum
        // equals (-1)^top times the top trace
        let l = boolean_lattice(4);
        for s in [vec![1], vec![2], vec![1, 3], vec![2, 3]] {
            let p = l.rank_selected(&s).unwrap();
            let c = OrderComplex::build(&p);
            for g in crate::perm::all_permutations(4) {
                let lhs = c.lefschetz_fixed_sum(&l, &g).unwrap();
                let trace = c.top_homology_trace(&l, &g).unwrap();
                let sign = if (s.len() as isize - 1) % 2 == 0 {
                    BigInt::one()
                } else {
                    -BigInt::one()
                };
                assert_eq!(lhs, sign * trace, "S={s:?} g={g}");
            }
        }
    }

    #[test]
    fn non_automorphism_is_rejected() {
        // two parallel edges plus a bridge: flats are {}, {1,2}, {3}, all;
        // swapping edges 2 and 3 sends the flat {3} to the non-flat {2}
        let m = Matroid::graphic(3, &[(1, 2), (1, 2), (2, 3)]).unwrap();
        let l = FlatLattice::build(&m);
        let p = l.rank_selected(&[1]).unwrap();
        let c = OrderComplex::build(&p);
        let g = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        assert_eq!(
            c.top_homology_trace(&l, &g),
            Err(TopologyError::NotAnAutomorphism)
        );
    }
}
