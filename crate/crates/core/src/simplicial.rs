//! Finite abstract simplicial complexes and their reduced homology.

use std::collections::{BTreeSet, HashMap};

use crate::exactla::sparse_rank;
use crate::field::Field;
use crate::graphs::bit_indices;

/// A simplicial complex stored as all of its faces, grouped by size.
/// The empty face is present unless the complex is void.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    by_size: Vec<Vec<Vec<u32>>>,
}

impl SimplicialComplex {
    /// The complex with no faces at all; its reduced homology vanishes.
    pub fn void() -> Self {
        SimplicialComplex { by_size: Vec::new() }
    }

    /// The complex whose only face is the empty one.
    pub fn empty_face() -> Self {
        SimplicialComplex {
            by_size: vec![vec![Vec::new()]],
        }
    }

    /// Downward closure of `facets`. With no facets the result is void.
    pub fn from_facets<I: IntoIterator<Item = Vec<u32>>>(facets: I) -> Self {
        let mut all: BTreeSet<Vec<u32>> = BTreeSet::new();
        for mut f in facets {
            f.sort_unstable();
            f.dedup();
            if all.contains(&f) {
                continue;
            }
            let k = f.len();
            for sub in 0u64..1 << k {
                let face: Vec<u32> = bit_indices(sub).map(|i| f[i]).collect();
                all.insert(face);
            }
        }
        Self::from_sorted_faces(all)
    }

    /// Faces given as vertex masks; the family must be closed under subsets.
    pub fn from_mask_faces<I: IntoIterator<Item = u64>>(faces: I) -> Self {
        let all: BTreeSet<Vec<u32>> = faces
            .into_iter()
            .map(|m| bit_indices(m).map(|i| i as u32).collect())
            .collect();
        let c = Self::from_sorted_faces(all);
        debug_assert!(c.is_closed());
        c
    }

    fn from_sorted_faces(all: BTreeSet<Vec<u32>>) -> Self {
        let mut by_size: Vec<Vec<Vec<u32>>> = Vec::new();
        for f in all {
            if by_size.len() <= f.len() {
                by_size.resize(f.len() + 1, Vec::new());
            }
            by_size[f.len()].push(f);
        }
        SimplicialComplex { by_size }
    }

    pub fn is_void(&self) -> bool {
        self.by_size.is_empty()
    }

    pub fn face_count(&self) -> usize {
        self.by_size.iter().map(Vec::len).sum()
    }

    /// Dimension of the complex, `-1` for `{∅}`; `None` when void.
    pub fn dimension(&self) -> Option<i64> {
        if self.is_void() {
            None
        } else {
            Some(self.by_size.len() as i64 - 2)
        }
    }

    fn is_closed(&self) -> bool {
        let sets: Vec<BTreeSet<&Vec<u32>>> = self.by_size.iter().map(|v| v.iter().collect()).collect();
        for k in 1..self.by_size.len() {
            for f in &self.by_size[k] {
                for skip in 0..k {
                    let mut g = f.clone();
                    g.remove(skip);
                    if !sets[k - 1].contains(&g) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `dim H̃_q` for `q = -1 ..= dim`, entry `q + 1` of the result.
    pub fn reduced_homology<F: Field>(&self) -> Vec<usize> {
        let sizes = self.by_size.len();
        if sizes == 0 {
            return Vec::new();
        }
        // rank of the boundary out of faces with k vertices, k >= 1
        let mut ranks = vec![0usize; sizes + 1];
        #[allow(clippy::needless_range_loop)]
        for k in 1..sizes {
            let index: HashMap<&[u32], usize> = self.by_size[k - 1]
                .iter()
                .enumerate()
                .map(|(i, f)| (f.as_slice(), i))
                .collect();
            let rows: Vec<Vec<(usize, F)>> = self.by_size[k]
                .iter()
                .map(|f| {
                    (0..k)
                        .map(|skip| {
                            let mut g = f.clone();
                            g.remove(skip);
                            let sign = if skip % 2 == 0 { F::one() } else { -F::one() };
                            (index[g.as_slice()], sign)
                        })
                        .collect()
                })
                .collect();
            ranks[k] = sparse_rank(rows);
        }
        (0..sizes)
            .map(|k| self.by_size[k].len() - ranks[k] - ranks[k + 1])
            .collect()
    }

    /// `dim H̃_q`, zero outside the range of the complex.
    pub fn reduced_homology_at<F: Field>(&self, q: i64) -> usize {
        if q < -1 {
            return 0;
        }
        self.reduced_homology::<F>()
            .get((q + 1) as usize)
            .copied()
            .unwrap_or(0)
    }
}
