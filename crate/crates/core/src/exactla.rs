//! Dense exact linear algebra over a field and homology of finite chain
//! complexes of vector spaces.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::Field;

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> ScalarMatrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScalarMatrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<F>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(ScalarMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let conv: Vec<Vec<F>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_rows(&conv)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> F {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Permutes rows and columns: entry (r, c) moves to (row_perm[r], col_perm[c]).
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> Self {
        let mut out = Self::zeros(self.rows, self.cols);
        for (r, &pr) in row_perm.iter().enumerate().take(self.rows) {
            for (c, &pc) in col_perm.iter().enumerate().take(self.cols) {
                out.set(pr, pc, self.get(r, c));
            }
        }
        out
    }

    /// Rank by Gaussian elimination; each row is reduced against the pivots
    /// found so far and its first surviving nonzero entry becomes a pivot.
    pub fn rank(&self) -> usize {
        let mut work = self.data.clone();
        let cols = self.cols;
        // pivot_rows[c] = index (into `work` rows) of the pivot row owning column c
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
        let mut rank = 0;
        for r in 0..self.rows {
            let (done, rest) = work.split_at_mut(r * cols);
            let row = &mut rest[..cols];
            for c in 0..cols {
                if row[c].is_zero() {
                    continue;
                }
                match pivot_of_col[c] {
                    Some(pr) => {
                        // pivot rows are normalized to 1 at their pivot column
                        let factor = row[c];
                        let prow = &done[pr * cols..pr * cols + cols];
                        for k in c..cols {
                            if !prow[k].is_zero() {
                                row[k] -= factor * prow[k];
                            }
                        }
                    }
                    None => {
                        let inv = row[c].inv().expect("nonzero entry");
                        for v in row[c..].iter_mut() {
                            *v *= inv;
                        }
                        pivot_of_col[c] = Some(r);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}

/// `rank` as a free function.
pub fn rank<F: Field>(m: &ScalarMatrix<F>) -> usize {
    m.rank()
}

/// Rank of a sparse matrix given as rows of `(column, value)` pairs.
/// Rows need not be sorted; repeated columns are summed.
pub fn sparse_rank<F: Field>(rows: Vec<Vec<(usize, F)>>) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
    for row in rows {
        let mut row = normalize_sparse(row);
        while let Some(&(c, v)) = row.first() {
            match pivots.get(&c) {
                Some(p) => row = axpy_sparse(&row, -v, p),
                None => {
                    let inv = v.inv().expect("nonzero entry");
                    for e in row.iter_mut() {
                        e.1 *= inv;
                    }
                    pivots.insert(c, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Sorts by column, merges duplicates and drops zeros.
pub fn normalize_sparse<F: Field>(mut row: Vec<(usize, F)>) -> Vec<(usize, F)> {
    row.sort_unstable_by_key(|e| e.0);
    let mut out: Vec<(usize, F)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// `a + s * b` for sorted sparse rows.
pub fn axpy_sparse<F: Field>(a: &[(usize, F)], s: F, b: &[(usize, F)]) -> Vec<(usize, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, s * b[j].1));
            j += 1;
        } else {
            let v = a[i].1 + s * b[j].1;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// A bounded chain complex of finite dimensional vector spaces,
/// `C_m -> ... -> C_1 -> C_0`. `differentials[p - 1]` is the map out of
/// position `p`, stored with `dims[p - 1]` rows and `dims[p]` columns.
#[derive(Clone, Debug)]
pub struct VSChainComplex<F> {
    dims: Vec<usize>,
    differentials: Vec<ScalarMatrix<F>>,
}

impl<F: Field> VSChainComplex<F> {
    pub fn new(dims: Vec<usize>, differentials: Vec<ScalarMatrix<F>>) -> Result<Self> {
        if dims.is_empty() {
            if differentials.is_empty() {
                return Ok(VSChainComplex { dims, differentials });
            }
            return Err(Error::Shape("differentials without spaces".into()));
        }
        if differentials.len() != dims.len() - 1 {
            return Err(Error::Shape(format!(
                "{} spaces need {} differentials, got {}",
                dims.len(),
                dims.len() - 1,
                differentials.len()
            )));
        }
        for (i, d) in differentials.iter().enumerate() {
            let p = i + 1;
            if d.rows() != dims[p - 1] || d.cols() != dims[p] {
                return Err(Error::Shape(format!(
                    "d_{p} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    dims[p - 1],
                    dims[p]
                )));
            }
        }
        for i in 1..differentials.len() {
            // d_i . d_{i+1}
            let comp = differentials[i - 1].mul(&differentials[i])?;
            if !comp.is_zero() {
                return Err(Error::NotAComplex(i));
            }
        }
        Ok(VSChainComplex { dims, differentials })
    }

    /// Complex with zero differentials.
    pub fn zero_differentials(dims: Vec<usize>) -> Self {
        let differentials = (1..dims.len())
            .map(|p| ScalarMatrix::zeros(dims[p - 1], dims[p]))
            .collect();
        VSChainComplex { dims, differentials }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn differential(&self, p: usize) -> Option<&ScalarMatrix<F>> {
        if p == 0 {
            None
        } else {
            self.differentials.get(p - 1)
        }
    }

    /// `dim H_p` for every position.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.differentials.iter().map(|d| d.rank()).collect();
        (0..self.dims.len())
            .map(|p| {
                let out_rank = if p == 0 { 0 } else { ranks[p - 1] };
                let in_rank = ranks.get(p).copied().unwrap_or(0);
                self.dims[p] - out_rank - in_rank
            })
            .collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum()
    }
}

/// Homology dimensions of a complex.
pub fn homology_dims<F: Field>(c: &VSChainComplex<F>) -> Vec<usize> {
    c.homology_dims()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type F = Fp<32003>;
    type F2 = Fp<2>;

    #[test]
    fn rank_examples() {
        assert_eq!(ScalarMatrix::<F>::identity(2).rank(), 2);
        assert_eq!(ScalarMatrix::<F>::zeros(3, 2).rank(), 0);
        let m = ScalarMatrix::<F2>::from_i64_rows(&[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(ScalarMatrix::<F>::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_depends_on_characteristic() {
        // det = 2
        let rows = vec![vec![1, 1], vec![1, -1]];
        assert_eq!(ScalarMatrix::<F>::from_i64_rows(&rows).unwrap().rank(), 2);
        assert_eq!(ScalarMatrix::<F2>::from_i64_rows(&rows).unwrap().rank(), 1);
    }

    #[test]
    fn zero_differentials() {
        let c = VSChainComplex::<F>::zero_differentials(vec![2, 3]);
        assert_eq!(c.homology_dims(), vec![2, 3]);
    }

    #[test]
    fn acyclic_identity() {
        let c = VSChainComplex::<F>::new(vec![1, 1], vec![ScalarMatrix::identity(1)]).unwrap();
        assert_eq!(c.homology_dims(), vec![0, 0]);
    }

    #[test]
    fn hollow_triangle_reduced() {
        // positions 0,1,2 = degrees -1,0,1; edges 01,02,12
        let eps = ScalarMatrix::<F>::from_i64_rows(&[vec![1, 1, 1]]).unwrap();
        let bd = ScalarMatrix::<F>::from_i64_rows(&[
            vec![-1, -1, 0],
            vec![1, 0, -1],
            vec![0, 1, 1],
        ])
        .unwrap();
        assert_eq!(bd.rank(), 2);
        assert_eq!(eps.rank(), 1);
        let c = VSChainComplex::new(vec![1, 3, 3], vec![eps, bd]).unwrap();
        assert_eq!(c.homology_dims(), vec![0, 0, 1]);
    }

    #[test]
    fn rejects_non_complex() {
        let one = ScalarMatrix::<F>::identity(1);
        let err = VSChainComplex::new(vec![1, 1, 1], vec![one.clone(), one]).unwrap_err();
        assert_eq!(err, Error::NotAComplex(1));
    }

    #[test]
    fn rejects_bad_shape() {
        let m = ScalarMatrix::<F>::zeros(2, 2);
        assert!(matches!(
            VSChainComplex::new(vec![1, 2], vec![m]),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let rows = vec![vec![1, 2, 0, 3], vec![2, 4, 0, 6], vec![0, 1, 1, 0]];
        let dense = ScalarMatrix::<Fp<7>>::from_i64_rows(&rows).unwrap();
        let sparse: Vec<Vec<(usize, Fp<7>)>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|e| *e.1 != 0)
                    .map(|(c, &v)| (c, Fp::from_i64(v)))
                    .collect()
            })
            .collect();
        assert_eq!(dense.rank(), 2);
        assert_eq!(sparse_rank(sparse), 2);
        let dup = vec![vec![(0, Fp::<7>::one()), (0, Fp::from_i64(-1))]];
        assert_eq!(sparse_rank(dup), 0);
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..6, 1usize..6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-3i64..4, c), r)
        })
    }

    /// Builds a complex `C_2 -> C_1 -> C_0` with d1 random and d2 spanning
    /// part of ker d1, so that d1 d2 = 0 by construction.
    fn complex_from(rows: &[Vec<i64>]) -> VSChainComplex<F> {
        let d1 = ScalarMatrix::<F>::from_i64_rows(rows).unwrap();
        let n1 = d1.cols();
        // kernel vectors via brute-force column combinations e_i * a - e_j * b
        let mut kernel_cols: Vec<Vec<F>> = Vec::new();
        for i in 0..n1 {
            let col: Vec<F> = (0..d1.rows()).map(|r| d1.get(r, i)).collect();
            if col.iter().all(|v| v.is_zero()) {
                let mut v = vec![F::zero(); n1];
                v[i] = F::one();
                kernel_cols.push(v);
            }
        }
        let d2 = if kernel_cols.is_empty() {
            ScalarMatrix::zeros(n1, 0)
        } else {
            let mut m = ScalarMatrix::zeros(n1, kernel_cols.len());
            for (j, kc) in kernel_cols.iter().enumerate() {
                for (i, &v) in kc.iter().enumerate() {
                    m.set(i, j, v);
                }
            }
            m
        };
        let dims = vec![d1.rows(), n1, d2.cols()];
        VSChainComplex::new(dims, vec![d1, d2]).unwrap()
    }

    proptest! {
        #[test]
        fn rank_equals_transpose_rank(rows in small_matrix()) {
            let m = ScalarMatrix::<F>::from_i64_rows(&rows).unwrap();
            prop_assert_eq!(m.rank(), m.transpose().rank());
            let m2 = ScalarMatrix::<F2>::from_i64_rows(&rows).unwrap();
            prop_assert_eq!(m2.rank(), m2.transpose().rank());
        }

        #[test]
        fn sparse_and_dense_rank_agree(rows in small_matrix()) {
            let m = ScalarMatrix::<F>::from_i64_rows(&rows).unwrap();
            let sparse = rows.iter().map(|r| {
                r.iter().enumerate().map(|(c, &v)| (c, F::from_i64(v))).collect()
            }).collect();
            prop_assert_eq!(m.rank(), sparse_rank(sparse));
        }

        #[test]
        fn euler_characteristic_matches(rows in small_matrix()) {
            let c = complex_from(&rows);
            let h = c.homology_dims();
            let chi: i64 = h.iter().enumerate()
                .map(|(p, &d)| if p % 2 == 0 { d as i64 } else { -(d as i64) })
                .sum();
            prop_assert_eq!(chi, c.euler_characteristic());
        }

        #[test]
        fn homology_invariant_under_basis_permutation(rows in small_matrix(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let c = complex_from(&rows);
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let perms: Vec<Vec<usize>> = c.dims().iter().map(|&d| {
                let mut p: Vec<usize> = (0..d).collect();
                p.shuffle(&mut rng);
                p
            }).collect();
            let diffs = (1..c.dims().len()).map(|p| {
                c.differential(p).unwrap().permuted(&perms[p - 1], &perms[p])
            }).collect();
            let permuted = VSChainComplex::new(c.dims().to_vec(), diffs).unwrap();
            prop_assert_eq!(permuted.homology_dims(), c.homology_dims());
        }
    }
}
