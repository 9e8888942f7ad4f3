//! Left-row and right-column reduced echelon forms.
//!
//! All elimination happens in one left-sided kernel using left elementary row
//! operations only: row swaps, left multiplication of a row by a nonzero
//! scalar, and adding a left multiple of one row to another. Right-column
//! forms are obtained by running the same kernel on the opposite-transpose
//! over `D^op` and transporting the result back.
//!
//! A left row reduced echelon matrix has its nonzero rows first, every
//! nonzero row starts with a 1, the pivot columns strictly increase and every
//! pivot column is zero outside its pivot row. By uniqueness, the form is the
//! canonical representative of the left row space.

use crate::matrix::Matrix;
use crate::ring::DivisionRing;
use crate::{Error, Result, Side};

/// A matrix certified to be in reduced echelon form for its side.
///
/// For [`Side::Left`] `pivots` lists pivot columns; for [`Side::Right`] it
/// lists pivot rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EchelonMatrix<R: DivisionRing> {
    mat: Matrix<R>,
    side: Side,
    pivots: Vec<usize>,
}

impl<R: DivisionRing> std::fmt::Debug for EchelonMatrix<R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Echelon[{}]{:?}", self.side, self.mat)
    }
}

impl<R: DivisionRing> EchelonMatrix<R> {
    /// Certifies an already reduced matrix; fails when `mat` is not in
    /// reduced form for `side`.
    pub fn try_from_matrix(mat: Matrix<R>, side: Side) -> Result<Self> {
        let ok = match side {
            Side::Left => is_left_row_reduced(&mat),
            Side::Right => is_right_column_reduced(&mat),
        };
        if !ok {
            return Err(Error::InvalidTuple(format!("matrix is not {side}-reduced")));
        }
        Ok(reduce(&mat, side))
    }

    pub fn zero(ring: R, rows: usize, cols: usize, side: Side) -> Self {
        EchelonMatrix { mat: Matrix::zeros(ring, rows, cols), side, pivots: Vec::new() }
    }

    pub fn identity(ring: R, n: usize, side: Side) -> Self {
        EchelonMatrix { mat: Matrix::identity(ring, n), side, pivots: (0..n).collect() }
    }

    pub fn mat(&self) -> &Matrix<R> {
        &self.mat
    }

    pub fn into_matrix(self) -> Matrix<R> {
        self.mat
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// `self ≤ other` in the containment order of spans.
    pub fn leq(&self, other: &Self) -> Result<bool> {
        check_pair(self, other)?;
        match self.side {
            Side::Left => lrs_leq(&self.mat, &other.mat),
            Side::Right => rcs_leq(&self.mat, &other.mat),
        }
    }

    /// Pads with zero rows (left) or columns (right); shrinking below the
    /// rank is refused.
    pub fn resize(&self, len: usize) -> Result<Self> {
        let mat = match self.side {
            Side::Left => self.mat.resize_rows(len)?,
            Side::Right => self.mat.resize_cols(len)?,
        };
        Ok(EchelonMatrix { mat, side: self.side, pivots: self.pivots.clone() })
    }

    /// The nonzero rows (left) or columns (right) as a compact matrix.
    pub fn basis(&self) -> Matrix<R> {
        match self.side {
            Side::Left => self.mat.submatrix(0..self.rank(), 0..self.mat.cols()),
            Side::Right => self.mat.submatrix(0..self.mat.rows(), 0..self.rank()),
        }
    }
}

/// The left-only elimination kernel. Nothing here refers to the right side,
/// so instantiating it at `Opposite<R>` never recurses.
mod kernel {
    use super::*;

    /// Reduces `m` in place with left row operations, searching pivots in the
    /// first `pivot_cols` columns only; row operations act on every column.
    pub(super) fn reduce_in_place<R: DivisionRing>(m: &mut Matrix<R>, pivot_cols: usize) -> Vec<usize> {
        let ring = m.ring().clone();
        let (rows, cols) = m.shape();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !ring.is_zero(m.get(i, c))) else {
                continue;
            };
            m.swap_rows(r, p);
            let lead_inv = ring.inv(m.get(r, c)).expect("pivot is nonzero");
            for x in m.row_mut(r) {
                *x = ring.mul(&lead_inv, x);
            }
            let pivot_row = m.row_vec(r);
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if ring.is_zero(&f) {
                    continue;
                }
                let row = m.row_mut(i);
                for j in c..cols {
                    row[j] = ring.sub(&row[j], &ring.mul(&f, &pivot_row[j]));
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub(super) fn lrref<R: DivisionRing>(a: &Matrix<R>) -> EchelonMatrix<R> {
        let mut mat = a.clone();
        let pivots = reduce_in_place(&mut mat, a.cols());
        EchelonMatrix { mat, side: Side::Left, pivots }
    }

    /// Coefficients expressing `v` as a left combination of the rows of the
    /// reduced `r`, or `None` when `v` lies outside the row space.
    pub(super) fn coordinates<R: DivisionRing>(r: &EchelonMatrix<R>, v: &[R::Elem]) -> Option<Vec<R::Elem>> {
        let ring = r.mat.ring();
        let coeffs: Vec<R::Elem> = r.pivots.iter().map(|&c| v[c].clone()).collect();
        for (j, vj) in v.iter().enumerate() {
            let mut acc = ring.zero();
            for (t, x) in coeffs.iter().enumerate() {
                acc = ring.add(&acc, &ring.mul(x, r.mat.get(t, j)));
            }
            if acc != *vj {
                return None;
            }
        }
        Some(coeffs)
    }

    pub(super) fn lrs_leq<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>) -> Result<bool> {
        if a.cols() != b.cols() {
            return Err(Error::ShapeMismatch(format!(
                "row spaces of {} and {} columns",
                a.cols(),
                b.cols()
            )));
        }
        if a.ring() != b.ring() {
            return Err(Error::RingMismatch(
                a.ring().descriptor().to_string(),
                b.ring().descriptor().to_string(),
            ));
        }
        let rb = lrref(b);
        Ok((0..a.rows()).all(|i| coordinates(&rb, a.row(i)).is_some()))
    }

    pub(super) fn solve_left_factor<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
        if !lrs_leq(a, b)? {
            return Err(Error::NotContained);
        }
        let ring = b.ring().clone();
        let (p, n) = b.shape();
        // [B | I_p] reduced on the first n columns gives [R | T] with T·B = R
        let mut aug = Matrix::hstack(ring.clone(), p, &[b, &Matrix::identity(ring.clone(), p)])?;
        let pivots = reduce_in_place(&mut aug, n);
        let reduced = EchelonMatrix {
            mat: aug.submatrix(0..p, 0..n),
            side: Side::Left,
            pivots,
        };
        let transform = aug.submatrix(0..p, n..n + p);
        let mut x = Matrix::zeros(ring, a.rows(), p);
        for i in 0..a.rows() {
            let coeffs = coordinates(&reduced, a.row(i)).ok_or(Error::NotContained)?;
            for (t, c) in coeffs.into_iter().enumerate() {
                x.set(i, t, c);
            }
        }
        x.mul(&transform)
    }

    pub(super) fn join<R: DivisionRing>(r1: &EchelonMatrix<R>, r2: &EchelonMatrix<R>) -> Result<EchelonMatrix<R>> {
        let (rows, cols) = r1.mat.shape();
        let stacked = Matrix::vstack(r1.mat.ring().clone(), cols, &[&r1.mat, &r2.mat])?;
        let out = lrref(&stacked);
        let mat = out.mat.resize_rows(rows)?;
        Ok(EchelonMatrix { mat, side: Side::Left, pivots: out.pivots })
    }

    /// Zassenhaus: reduce `[R1 | R1; R2 | 0]`; rows whose left half vanishes
    /// carry the intersection in their right half.
    pub(super) fn meet<R: DivisionRing>(r1: &EchelonMatrix<R>, r2: &EchelonMatrix<R>) -> Result<EchelonMatrix<R>> {
        let ring = r1.mat.ring().clone();
        let (rows, cols) = r1.mat.shape();
        let top = Matrix::hstack(ring.clone(), rows, &[&r1.mat, &r1.mat])?;
        let zero = Matrix::zeros(ring.clone(), r2.mat.rows(), cols);
        let bottom = Matrix::hstack(ring.clone(), r2.mat.rows(), &[&r2.mat, &zero])?;
        let mut z = Matrix::vstack(ring.clone(), 2 * cols, &[&top, &bottom])?;
        let pivots = reduce_in_place(&mut z, 2 * cols);
        let inter: Vec<usize> = pivots
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c >= cols)
            .map(|(i, _)| i)
            .collect();
        let right = z.select_rows(&inter).submatrix(0..inter.len(), cols..2 * cols);
        let out = lrref(&right.resize_rows(rows.max(inter.len()))?);
        let mat = out.mat.resize_rows(rows)?;
        Ok(EchelonMatrix { mat, side: Side::Left, pivots: out.pivots })
    }

    pub(super) fn inverse<R: DivisionRing>(a: &Matrix<R>) -> Result<Matrix<R>> {
        let n = a.rows();
        if a.cols() != n {
            return Err(Error::ShapeMismatch(format!("inverse of a {}x{} matrix", n, a.cols())));
        }
        let ring = a.ring().clone();
        let mut aug = Matrix::hstack(ring.clone(), n, &[a, &Matrix::identity(ring, n)])?;
        let pivots = reduce_in_place(&mut aug, n);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        Ok(aug.submatrix(0..n, n..2 * n))
    }
}

fn to_right<R: DivisionRing>(e: EchelonMatrix<crate::ring::Opposite<R>>) -> EchelonMatrix<R> {
    EchelonMatrix { mat: Matrix::from_op_transpose(&e.mat), side: Side::Right, pivots: e.pivots }
}

fn to_op_left<R: DivisionRing>(e: &EchelonMatrix<R>) -> EchelonMatrix<crate::ring::Opposite<R>> {
    EchelonMatrix { mat: e.mat.op_transpose(), side: Side::Left, pivots: e.pivots.clone() }
}

fn check_pair<R: DivisionRing>(a: &EchelonMatrix<R>, b: &EchelonMatrix<R>) -> Result<()> {
    if a.side != b.side {
        return Err(Error::SideMismatch);
    }
    if a.mat.shape() != b.mat.shape() {
        return Err(Error::ShapeMismatch(format!(
            "{:?} vs {:?}",
            a.mat.shape(),
            b.mat.shape()
        )));
    }
    if a.mat.ring() != b.mat.ring() {
        return Err(Error::RingMismatch(
            a.mat.ring().descriptor().to_string(),
            b.mat.ring().descriptor().to_string(),
        ));
    }
    Ok(())
}

/// The unique left row reduced echelon matrix with the same left row space.
pub fn lrref<R: DivisionRing>(a: &Matrix<R>) -> EchelonMatrix<R> {
    kernel::lrref(a)
}

/// The unique right column reduced echelon matrix with the same right column
/// space, computed as `op_transpose ∘ lrref ∘ op_transpose`.
pub fn rcref<R: DivisionRing>(a: &Matrix<R>) -> EchelonMatrix<R> {
    to_right(kernel::lrref(&a.op_transpose()))
}

pub fn reduce<R: DivisionRing>(a: &Matrix<R>, side: Side) -> EchelonMatrix<R> {
    match side {
        Side::Left => lrref(a),
        Side::Right => rcref(a),
    }
}

pub fn rank<R: DivisionRing>(a: &Matrix<R>) -> usize {
    lrref(a).rank()
}

/// `LRS(A) ⊆ LRS(B)`.
pub fn lrs_leq<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>) -> Result<bool> {
    kernel::lrs_leq(a, b)
}

/// `RCS(A) ⊆ RCS(B)`.
pub fn rcs_leq<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>) -> Result<bool> {
    kernel::lrs_leq(&a.op_transpose(), &b.op_transpose())
}

pub fn space_leq<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>, side: Side) -> Result<bool> {
    match side {
        Side::Left => lrs_leq(a, b),
        Side::Right => rcs_leq(a, b),
    }
}

/// `C` with `C·B = A`; requires `LRS(A) ⊆ LRS(B)`.
pub fn solve_left_factor<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    kernel::solve_left_factor(a, b)
}

/// `C` with `B·C = A`; requires `RCS(A) ⊆ RCS(B)`.
pub fn solve_right_factor<R: DivisionRing>(a: &Matrix<R>, b: &Matrix<R>) -> Result<Matrix<R>> {
    let c = kernel::solve_left_factor(&a.op_transpose(), &b.op_transpose())?;
    Ok(Matrix::from_op_transpose(&c))
}

/// Echelon form of the sum of the two spans.
pub fn join<R: DivisionRing>(r1: &EchelonMatrix<R>, r2: &EchelonMatrix<R>) -> Result<EchelonMatrix<R>> {
    check_pair(r1, r2)?;
    match r1.side {
        Side::Left => kernel::join(r1, r2),
        Side::Right => Ok(to_right(kernel::join(&to_op_left(r1), &to_op_left(r2))?)),
    }
}

/// Echelon form of the intersection of the two spans.
pub fn meet<R: DivisionRing>(r1: &EchelonMatrix<R>, r2: &EchelonMatrix<R>) -> Result<EchelonMatrix<R>> {
    check_pair(r1, r2)?;
    match r1.side {
        Side::Left => kernel::meet(r1, r2),
        Side::Right => Ok(to_right(kernel::meet(&to_op_left(r1), &to_op_left(r2))?)),
    }
}

pub fn inverse<R: DivisionRing>(a: &Matrix<R>) -> Result<Matrix<R>> {
    kernel::inverse(a)
}

/// Structural check of the left row reduced echelon conditions, independent
/// of the elimination routine.
pub fn is_left_row_reduced<R: DivisionRing>(a: &Matrix<R>) -> bool {
    let ring = a.ring();
    let mut last_pivot: Option<usize> = None;
    let mut seen_zero = false;
    let mut pivots = Vec::new();
    for i in 0..a.rows() {
        let lead = (0..a.cols()).find(|&j| !ring.is_zero(a.get(i, j)));
        match lead {
            None => seen_zero = true,
            Some(c) => {
                if seen_zero || last_pivot.is_some_and(|p| c <= p) || *a.get(i, c) != ring.one() {
                    return false;
                }
                last_pivot = Some(c);
                pivots.push((i, c));
            }
        }
    }
    pivots
        .iter()
        .all(|&(i, c)| (0..a.rows()).all(|r| r == i || ring.is_zero(a.get(r, c))))
}

pub fn is_right_column_reduced<R: DivisionRing>(a: &Matrix<R>) -> bool {
    is_left_row_reduced(&a.op_transpose())
}
