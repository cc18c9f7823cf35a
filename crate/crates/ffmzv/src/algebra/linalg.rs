//! Exact linear algebra over an arbitrary field.
//!
//! Elimination is Gauss-Jordan with a Markowitz-style pivot choice: among the
//! candidate entries it takes the one whose row and column are sparsest, and
//! breaks ties by [`Field::size`]. Over function fields this keeps fill-in and
//! coefficient growth down; over finite fields it is just a deterministic
//! pivot order.

use crate::error::{Error, Result};
use std::fmt;

/// Field operations needed by elimination.
///
/// Elements carry their own context (field, curve), so constants are
/// produced from an existing element.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn inv(&self) -> Option<Self>;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    /// Rough cost of computing with this element; smaller is cheaper.
    fn size(&self) -> usize {
        0
    }
}

impl Field for crate::algebra::FieldElem {
    fn zero_like(&self) -> Self {
        Self { field: self.field, value: 0 }
    }
    fn one_like(&self) -> Self {
        Self { field: self.field, value: 1 }
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, o: &Self) -> Self {
        Self { field: self.field, value: self.field.add(self.value, o.value) }
    }
    fn neg(&self) -> Self {
        Self { field: self.field, value: self.field.neg(self.value) }
    }
    fn mul(&self, o: &Self) -> Self {
        Self { field: self.field, value: self.field.mul(self.value, o.value) }
    }
    fn inv(&self) -> Option<Self> {
        (self.value != 0).then(|| Self { field: self.field, value: self.field.inv(self.value) })
    }
}

/// Dense row-major matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<Vec<F>>,
}

impl<F: Field> Matrix<F> {
    /// All-zero matrix; `zero` supplies the field context.
    pub fn zeros(rows: usize, cols: usize, zero: &F) -> Self {
        let z = zero.zero_like();
        Matrix { rows, cols, data: vec![vec![z; cols]; rows] }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: rows.len(), cols, data: rows })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[F] {
        &self.data[r]
    }

    pub fn nonzeros(&self) -> usize {
        self.data.iter().flatten().filter(|e| !e.is_zero()).count()
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok(self.data.iter().map(|row| dot(row, v)).collect())
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        let mut m = self.data.clone();
        eliminate(&mut m, self.cols).len()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.data.clone();
        let mut piv = eliminate(&mut m, self.cols);
        piv.sort_by_key(|&(_, c)| c);
        let mut rows: Vec<Vec<F>> = piv.iter().map(|&(r, _)| m[r].clone()).collect();
        let zero = self.data.first().and_then(|r| r.first()).map(|e| e.zero_like());
        if let Some(z) = zero {
            while rows.len() < self.rows {
                rows.push(vec![z.clone(); self.cols]);
            }
        }
        let cols = piv.iter().map(|&(_, c)| c).collect();
        (Matrix { rows: self.rows, cols: self.cols, data: rows }, cols)
    }

    /// A basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let zero = match self.data.first().and_then(|r| r.first()) {
            Some(z) => z.zero_like(),
            None => return Vec::new(),
        };
        let mut m = self.data.clone();
        let piv = eliminate(&mut m, self.cols);
        kernel_from(&m, &piv, self.cols, &zero)
    }
}

/// Outcome of solving `A x = b`.
#[derive(Clone, Debug, PartialEq)]
pub enum Solution<F> {
    Unique(Vec<F>),
    /// A particular solution plus a basis of the kernel.
    Underdetermined { particular: Vec<F>, kernel: Vec<Vec<F>> },
    Inconsistent,
}

impl<F> Solution<F> {
    pub fn label(&self) -> &'static str {
        match self {
            Solution::Unique(_) => "unique",
            Solution::Underdetermined { .. } => "underdetermined",
            Solution::Inconsistent => "inconsistent",
        }
    }
}

/// Solve `A x = b` exactly.
pub fn linear_solve<F: Field>(a: &Matrix<F>, b: &[F]) -> Result<Solution<F>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch(format!("{} right-hand sides for {} rows", b.len(), a.rows)));
    }
    let zero = match a.data.first().and_then(|r| r.first()).or(b.first()) {
        Some(z) => z.zero_like(),
        None => return Ok(Solution::Unique(Vec::new())),
    };
    let mut m: Vec<Vec<F>> = a
        .data
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let piv = eliminate(&mut m, a.cols);
    let pivot_rows: Vec<bool> = {
        let mut v = vec![false; m.len()];
        for &(r, _) in &piv {
            v[r] = true;
        }
        v
    };
    if m.iter().enumerate().any(|(i, row)| !pivot_rows[i] && !row[a.cols].is_zero()) {
        return Ok(Solution::Inconsistent);
    }
    let mut x = vec![zero.clone(); a.cols];
    for &(r, c) in &piv {
        x[c] = m[r][a.cols].clone();
    }
    if piv.len() == a.cols {
        return Ok(Solution::Unique(x));
    }
    let kernel = kernel_from(&m, &piv, a.cols, &zero);
    Ok(Solution::Underdetermined { particular: x, kernel })
}

fn dot<F: Field>(row: &[F], v: &[F]) -> F {
    let mut acc = row[0].zero_like();
    for (a, b) in row.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            acc = acc.add(&a.mul(b));
        }
    }
    acc
}

fn kernel_from<F: Field>(m: &[Vec<F>], piv: &[(usize, usize)], cols: usize, zero: &F) -> Vec<Vec<F>> {
    let mut is_pivot = vec![false; cols];
    for &(_, c) in piv {
        is_pivot[c] = true;
    }
    let one = zero.one_like();
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![zero.clone(); cols];
            v[f] = one.clone();
            for &(r, c) in piv {
                v[c] = m[r][f].neg();
            }
            v
        })
        .collect()
}

/// Gauss-Jordan elimination on the first `ncols` columns; returns the
/// `(row, column)` pivots. Pivot rows are scaled to have a one in the pivot.
fn eliminate<F: Field>(m: &mut [Vec<F>], ncols: usize) -> Vec<(usize, usize)> {
    let nrows = m.len();
    let mut row_used = vec![false; nrows];
    let mut col_used = vec![false; ncols];
    let mut pivots = Vec::new();
    loop {
        // row and column counts over the active submatrix
        let mut col_nnz = vec![0usize; ncols];
        let mut row_nnz = vec![0usize; nrows];
        for (i, row) in m.iter().enumerate() {
            if row_used[i] {
                continue;
            }
            for c in 0..ncols {
                if !col_used[c] && !row[c].is_zero() {
                    col_nnz[c] += 1;
                    row_nnz[i] += 1;
                }
            }
        }
        let mut best: Option<(usize, usize, (usize, usize))> = None;
        for (i, row) in m.iter().enumerate() {
            if row_used[i] || row_nnz[i] == 0 {
                continue;
            }
            for c in 0..ncols {
                if col_used[c] || row[c].is_zero() {
                    continue;
                }
                let cost = ((row_nnz[i] - 1) * (col_nnz[c] - 1), row[c].size());
                if best.as_ref().is_none_or(|b| cost < b.2) {
                    best = Some((i, c, cost));
                }
            }
        }
        let Some((pr, pc, _)) = best else { break };
        let inv = m[pr][pc].inv().expect("nonzero pivot is invertible");
        for e in m[pr].iter_mut() {
            if !e.is_zero() {
                *e = e.mul(&inv);
            }
        }
        let prow = m[pr].clone();
        let support: Vec<usize> = (0..prow.len()).filter(|&c| !prow[c].is_zero()).collect();
        for (i, row) in m.iter_mut().enumerate() {
            if i == pr || row[pc].is_zero() {
                continue;
            }
            let factor = row[pc].clone();
            for &c in &support {
                let t = factor.mul(&prow[c]);
                row[c] = row[c].sub(&t);
            }
        }
        row_used[pr] = true;
        col_used[pc] = true;
        pivots.push((pr, pc));
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{FieldElem, Fq, Poly, RatFunc};

    fn fe(v: u8) -> FieldElem {
        FieldElem::new(Fq::F3, v)
    }

    fn mat(rows: &[&[u8]]) -> Matrix<FieldElem> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| fe(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn unique_solution_over_f3() {
        let a = mat(&[&[1, 2, 0], &[0, 1, 1], &[2, 0, 1]]);
        let x = vec![fe(2), fe(1), fe(0)];
        let b = a.mul_vec(&x).unwrap();
        assert_eq!(linear_solve(&a, &b).unwrap(), Solution::Unique(x));
        assert_eq!(a.rank(), 3);
    }

    #[test]
    fn underdetermined_kernel_is_annihilated() {
        let a = mat(&[&[1, 1, 1, 0], &[0, 1, 2, 1], &[1, 2, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let b = a.mul_vec(&[fe(1), fe(0), fe(2), fe(1)]).unwrap();
        match linear_solve(&a, &b).unwrap() {
            Solution::Underdetermined { particular, kernel } => {
                assert_eq!(a.mul_vec(&particular).unwrap(), b);
                assert_eq!(kernel.len(), 2);
                for k in &kernel {
                    assert!(a.mul_vec(k).unwrap().iter().all(|e| e.is_zero()));
                }
            }
            other => panic!("expected underdetermined, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_and_dimension_errors() {
        let a = mat(&[&[1, 1], &[2, 2]]);
        assert_eq!(linear_solve(&a, &[fe(1), fe(1)]).unwrap(), Solution::Inconsistent);
        assert!(matches!(linear_solve(&a, &[fe(1)]), Err(Error::DimensionMismatch(_))));
    }

    #[test]
    fn rational_function_system() {
        let f = Fq::F2;
        let x = RatFunc::from_poly(Poly::x(f));
        let one = RatFunc::one(f);
        // [x 1; 1 x] z = [1; 0]  =>  z = (x, 1)/(x^2 + 1)
        let a = Matrix::from_rows(vec![vec![x.clone(), one.clone()], vec![one.clone(), x.clone()]]).unwrap();
        let sol = linear_solve(&a, &[one.clone(), one.zero_like()]).unwrap();
        let d = RatFunc::from_poly(Poly::from_ints(f, &[1, 0, 1]));
        let expect = vec![x.div(&d).unwrap(), one.div(&d).unwrap()];
        assert_eq!(sol, Solution::Unique(expect));
    }

    #[test]
    fn rref_is_reduced() {
        let a = mat(&[&[0, 2, 1], &[1, 1, 1], &[1, 0, 0]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1, 2]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(r.get(i, j).value, (i == j) as u8);
            }
        }
    }
}
