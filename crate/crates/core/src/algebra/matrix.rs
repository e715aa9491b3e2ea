//! Dense matrices over a prime field.

use super::field::{Field, FieldElem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> FieldElem) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j).value();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> FieldElem {
        self.field.elem(self.data[i * self.cols + j] as i64)
    }

    pub fn set(&mut self, i: usize, j: usize, v: FieldElem) {
        self.data[i * self.cols + j] = v.value();
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.data[k * other.cols + j];
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = f.add_raw(*slot, f.mul_raw(a, b));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        out
    }

    /// Rank by Gaussian elimination on rows.
    pub fn rank(&self) -> usize {
        let f = self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                m.swap(p * cols + j, rank * cols + j);
            }
            let inv = f.inv_raw(m[rank * cols + c]);
            for j in 0..cols {
                m[rank * cols + j] = f.mul_raw(m[rank * cols + j], inv);
            }
            for r in 0..rows {
                let factor = m[r * cols + c];
                if r == rank || factor == 0 {
                    continue;
                }
                for j in 0..cols {
                    let sub = f.mul_raw(factor, m[rank * cols + j]);
                    m[r * cols + j] = f.sub_raw(m[r * cols + j], sub);
                }
            }
            rank += 1;
        }
        rank
    }

    /// Rank by the column-reduction algorithm: each column is reduced against
    /// earlier columns with the same lowest nonzero row until its low is new.
    pub fn rank_by_columns(&self) -> usize {
        let f = self.field;
        let mut columns: Vec<Vec<u32>> =
            (0..self.cols).map(|j| (0..self.rows).map(|i| self.data[i * self.cols + j]).collect()).collect();
        let low = |col: &[u32]| col.iter().rposition(|&v| v != 0);
        let mut owner: Vec<Option<usize>> = vec![None; self.rows];
        let mut rank = 0;
        for j in 0..columns.len() {
            while let Some(l) = low(&columns[j]) {
                match owner[l] {
                    Some(k) => {
                        let factor = f.mul_raw(columns[j][l], f.inv_raw(columns[k][l]));
                        let pivot = columns[k].clone();
                        for (x, p) in columns[j].iter_mut().zip(pivot) {
                            *x = f.sub_raw(*x, f.mul_raw(factor, p));
                        }
                    }
                    None => {
                        owner[l] = Some(j);
                        rank += 1;
                        break;
                    }
                }
            }
        }
        rank
    }
}
