//! Dense exact linear algebra over the coefficient field.
//!
//! Everything reduces to Gaussian elimination. Matrices are small at desk
//! scale (ambient strand dimensions stay in the low hundreds), so dense
//! row reduction with first-nonzero pivoting is the whole story.

use crate::field::{Field, Scalar};
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    a: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            a: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut m = Self::zeros(field, r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, v) in row.into_iter().enumerate() {
                m.a[i * c + j] = v;
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.a[i * self.cols + j] = v;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn push_col(&mut self, col: &[Scalar]) {
        assert_eq!(col.len(), self.rows);
        let mut b = Vec::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            b.extend_from_slice(&self.a[i * self.cols..(i + 1) * self.cols]);
            b.push(col[i].clone());
        }
        self.cols += 1;
        self.a = b;
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows);
        let mut out = Mat::zeros(self.field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let w = other.get(k, j);
                    if w.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&v.mul(w));
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let piv = (r..self.rows).find(|&i| !self.get(i, c).is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            if piv != r {
                for j in 0..self.cols {
                    self.a.swap(r * self.cols + j, piv * self.cols + j);
                }
            }
            let inv = self.get(r, c).inv();
            for j in c..self.cols {
                let v = self.get(r, j).mul(&inv);
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.get(i, c).is_zero() {
                    continue;
                }
                let f = self.get(i, c).clone();
                for j in c..self.cols {
                    let v = self.get(i, j).sub(&f.mul(self.get(r, j)));
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    /// A basis of the right kernel, one vector per free column of the rref.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut out = Vec::new();
        let is_pivot: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.get(r, free).neg();
            }
            out.push(v);
        }
        out
    }

    /// Any solution of `self * x = b`, or None when inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = self.clone();
        aug.push_col(b);
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None; // pivot in the rhs column
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(r, self.cols).clone();
        }
        Some(x)
    }
}

/// Incrementally maintained row space in echelon form. Supports rank
/// growth queries, membership, and basis extension, which is how minimal
/// generators and syzygies get selected degree by degree.
pub struct SpanBuilder {
    pub field: Field,
    dim: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: Field, dim: usize) -> Self {
        SpanBuilder {
            field,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot coordinates of the echelon rows, in increasing order.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The echelon basis rows spanning the space.
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Reduce v against the current span; the remainder is zero exactly
    /// when v already lies in it.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for j in p..self.dim {
                w[j] = w[j].sub(&f.mul(&row[j]));
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Insert v; returns true when the rank grew.
    pub fn insert(&mut self, v: &[Scalar]) -> bool {
        let w = self.reduce(v);
        let p = match w.iter().position(|c| !c.is_zero()) {
            Some(p) => p,
            None => return false,
        };
        let inv = w[p].inv();
        let normalized: Vec<Scalar> = w.iter().map(|c| c.mul(&inv)).collect();
        // Keep rows sorted by pivot so reduce stays one pass.
        let at = self
            .pivots
            .iter()
            .position(|&q| q > p)
            .unwrap_or(self.pivots.len());
        self.rows.insert(at, normalized);
        self.pivots.insert(at, p);
        true
    }
}

/// Label of one coordinate of a graded strand: which free summand, and
/// which monomial of the complementary degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisLabel {
    pub part: usize,
    pub monomial: Monomial,
}

/// A strand matrix: the degree-d piece of a graded map, together with the
/// monomial bases indexing its rows and columns.
#[derive(Clone, Debug)]
pub struct StrandMatrix {
    pub mat: Mat,
    pub row_labels: Vec<BasisLabel>,
    pub col_labels: Vec<BasisLabel>,
}

impl StrandMatrix {
    pub fn rank(&self) -> usize {
        self.mat.rank()
    }

    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        self.mat.kernel_basis()
    }

    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        self.mat.solve(b)
    }
}
