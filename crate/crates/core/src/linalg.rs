//! Dense matrices over a [`FieldSpec`] with exact elimination.
//!
//! Elimination runs on a native backend chosen from the field: `BigRational`
//! with pivots normalized to 1 over `Q`, `u64` residues over `F_p`, and
//! word-packed rows for ranks over `F_2`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::field::gf2::BitMatrix;
use crate::field::{inv_mod, FieldSpec, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// Builds a matrix from rows; every row must have `cols` entries in `field`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::InvalidArgument(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for s in row {
                if s.field() != field {
                    return Err(Error::mismatch(field, s.field()));
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            field,
            rows: n,
            cols,
            data,
        })
    }

    pub(crate) fn from_parts(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        data: Vec<Scalar>,
    ) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "entry from a different field");
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Matrix::from_parts(self.field, self.cols, self.rows, data)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    /// Exact rank.
    pub fn rank(&self) -> usize {
        match self.field.modulus() {
            Some(2) => self.to_bits().rank(),
            Some(p) => {
                let mut rows = self.residue_rows();
                echelon(&ModArith(p as u64), &mut rows, self.cols, false).len()
            }
            None => {
                let mut rows = self.rational_rows();
                echelon(&RatArith, &mut rows, self.cols, false).len()
            }
        }
    }

    /// Rank through the generic residue backend even over `F_2`; used to
    /// cross-check the packed path.
    pub fn rank_unpacked(&self) -> usize {
        match self.field.modulus() {
            Some(p) => {
                let mut rows = self.residue_rows();
                echelon(&ModArith(p as u64), &mut rows, self.cols, false).len()
            }
            None => self.rank(),
        }
    }

    /// Reduced row-echelon form with zero rows removed, plus pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let (rows, pivots) = match self.field.modulus() {
            Some(p) => {
                let mut rows = self.residue_rows();
                let pivots = echelon(&ModArith(p as u64), &mut rows, self.cols, true);
                rows.truncate(pivots.len());
                let rows = rows
                    .into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|v| Scalar::residue(v as u32, p))
                            .collect()
                    })
                    .collect::<Vec<Vec<Scalar>>>();
                (rows, pivots)
            }
            None => {
                let mut rows = self.rational_rows();
                let pivots = echelon(&RatArith, &mut rows, self.cols, true);
                rows.truncate(pivots.len());
                let rows = rows
                    .into_iter()
                    .map(|r| r.into_iter().map(Scalar::from).collect())
                    .collect::<Vec<Vec<Scalar>>>();
                (rows, pivots)
            }
        };
        let n = rows.len();
        let data = rows.into_iter().flatten().collect();
        (Matrix::from_parts(self.field, n, self.cols, data), pivots)
    }

    /// Basis of `{v : M v = 0}`, returned in reduced row-echelon form.
    pub fn right_kernel(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).neg();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        let k = Matrix::from_parts(
            self.field,
            basis.len(),
            self.cols,
            basis.into_iter().flatten().collect(),
        );
        let (k, _) = k.rref();
        (0..k.rows()).map(|i| k.row(i).to_vec()).collect()
    }

    /// Basis of `{v : v M = 0}` in reduced row-echelon form.
    pub fn left_kernel(&self) -> Vec<Vec<Scalar>> {
        self.transpose().right_kernel()
    }

    /// `v M` for a row vector `v`.
    pub fn left_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|c| {
                v.iter().enumerate().fold(self.field.zero(), |acc, (r, x)| {
                    &acc + &(x * self.get(r, c))
                })
            })
            .collect()
    }

    fn to_bits(&self) -> BitMatrix {
        let mut m = BitMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.get(r, c).is_zero() {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    fn residue_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|s| s.as_residue().expect("prime field entry") as u64)
                    .collect()
            })
            .collect()
    }

    fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|s| s.as_rational().expect("rational entry").clone())
                    .collect()
            })
            .collect()
    }
}

trait Arith {
    type E: Clone;
    fn is_zero(&self, a: &Self::E) -> bool;
    fn inv(&self, a: &Self::E) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    /// `a - f * b`
    fn sub_mul(&self, a: &Self::E, f: &Self::E, b: &Self::E) -> Self::E;
}

struct RatArith;

impl Arith for RatArith {
    type E = BigRational;
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub_mul(&self, a: &BigRational, f: &BigRational, b: &BigRational) -> BigRational {
        if b.is_zero() {
            a.clone()
        } else {
            a - f * b
        }
    }
}

struct ModArith(u64);

impl Arith for ModArith {
    type E = u64;
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> u64 {
        inv_mod(*a, self.0)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.0
    }
    fn sub_mul(&self, a: &u64, f: &u64, b: &u64) -> u64 {
        (a + self.0 - f * b % self.0) % self.0
    }
}

/// Gaussian elimination in place. Pivot rows are scaled to a leading 1 and
/// moved to the top; with `reduce` the pivot columns are also cleared above.
/// Returns the pivot columns.
fn echelon<A: Arith>(a: &A, rows: &mut [Vec<A::E>], cols: usize, reduce: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows.len() {
            break;
        }
        let Some(p) = (rank..rows.len()).find(|&r| !a.is_zero(&rows[r][c])) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = a.inv(&rows[rank][c]);
        for x in rows[rank][c..].iter_mut() {
            *x = a.mul(x, &inv);
        }
        let pivot = rows[rank].clone();
        let start = if reduce { 0 } else { rank + 1 };
        for (r, row) in rows.iter_mut().enumerate().skip(start) {
            if r == rank || a.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row[c..].iter_mut().zip(&pivot[c..]) {
                *x = a.sub_mul(x, &f, y);
            }
        }
        pivots.push(c);
        rank += 1;
    }
    pivots
}
