//! Dense exact matrices over a division ring and block shapes.
//!
//! Indices in the Rust API are 0-based. Block shapes are passed to the block
//! accessors explicitly; the same matrix is routinely viewed under several
//! partitions.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Range;
use std::str::FromStr;

use rand::Rng;

use crate::ring::{DivisionRing, Opposite};
use crate::{Error, Result};

#[derive(Clone)]
pub struct Matrix<R: DivisionRing> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: DivisionRing> PartialEq for Matrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && self.rows == other.rows
            && self.cols == other.cols
            && self.entries == other.entries
    }
}

impl<R: DivisionRing> Eq for Matrix<R> {}

impl<R: DivisionRing> Hash for Matrix<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.rows.hash(state);
        self.cols.hash(state);
        self.entries.hash(state);
    }
}

impl<R: DivisionRing> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>{}x{}", self.ring.descriptor(), self.rows, self.cols)?;
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl<R: DivisionRing> Matrix<R> {
    pub fn new(ring: R, rows: usize, cols: usize, entries: Vec<R::Elem>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { ring, rows, cols, entries })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Matrix::new(ring, m, n, rows.into_iter().flatten().collect())
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        Matrix { ring, rows, cols, entries }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        Self::identity_rect(ring, n, n)
    }

    /// `I_{m×n}`: ones on the leading diagonal, zero elsewhere.
    pub fn identity_rect(ring: R, rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(ring, rows, cols);
        for i in 0..rows.min(cols) {
            out.entries[i * cols + i] = out.ring.one();
        }
        out
    }

    /// The standard matrix `E_ij` of size `rows×cols`.
    pub fn standard(ring: R, rows: usize, cols: usize, i: usize, j: usize) -> Result<Self> {
        if i >= rows || j >= cols {
            return Err(Error::IndexOutOfRange(format!(
                "E({i},{j}) in a {rows}x{cols} matrix"
            )));
        }
        let mut out = Self::zeros(ring, rows, cols);
        out.entries[i * cols + j] = out.ring.one();
        Ok(out)
    }

    pub fn random<G: Rng + ?Sized>(ring: R, rows: usize, cols: usize, rng: &mut G) -> Self {
        let entries = (0..rows * cols).map(|_| ring.random_element(rng)).collect();
        Matrix { ring, rows, cols, entries }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R::Elem) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [R::Elem] {
        &mut self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vec(&self, i: usize) -> Vec<R::Elem> {
        self.row(i).to_vec()
    }

    pub fn col_vec(&self, j: usize) -> Vec<R::Elem> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|x| self.ring.is_zero(x))
    }

    pub fn is_row_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|x| self.ring.is_zero(x))
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(
                self.ring.descriptor().to_string(),
                other.ring.descriptor().to_string(),
            ));
        }
        Ok(())
    }

    /// Exact product; entry `(i,j)` is `Σ_k A_ik·B_kj` in that factor order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let ring = &self.ring;
        let mut entries = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = ring.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if ring.is_zero(a) {
                        continue;
                    }
                    acc = ring.add(&acc, &ring.mul(a, other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Matrix::new(ring.clone(), self.rows, other.cols, entries)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&R::Elem, &R::Elem) -> R::Elem) -> Result<Self> {
        self.check_ring(other)?;
        if self.shape() != other.shape() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a, b)).collect();
        Matrix::new(self.ring.clone(), self.rows, self.cols, entries)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.add(a, b))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| self.ring.sub(a, b))
    }

    /// `c·A`, scaling from the left.
    pub fn scale_left(&self, c: &R::Elem) -> Self {
        let entries = self.entries.iter().map(|x| self.ring.mul(c, x)).collect();
        Matrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols, entries }
    }

    pub fn submatrix(&self, rows: Range<usize>, cols: Range<usize>) -> Self {
        assert!(rows.end <= self.rows && cols.end <= self.cols);
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for i in rows.clone() {
            entries.extend_from_slice(&self.row(i)[cols.clone()]);
        }
        Matrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    pub fn select_rows(&self, which: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(which.len() * self.cols);
        for &i in which {
            entries.extend_from_slice(self.row(i));
        }
        Matrix { ring: self.ring.clone(), rows: which.len(), cols: self.cols, entries }
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(ring: R, cols: usize, parts: &[&Self]) -> Result<Self> {
        let mut entries = Vec::new();
        let mut rows = 0;
        for p in parts {
            if p.cols != cols {
                return Err(Error::ShapeMismatch(format!(
                    "vstack of {} columns onto {cols}",
                    p.cols
                )));
            }
            if p.ring != ring {
                return Err(Error::RingMismatch(
                    ring.descriptor().to_string(),
                    p.ring.descriptor().to_string(),
                ));
            }
            rows += p.rows;
            entries.extend_from_slice(&p.entries);
        }
        Matrix::new(ring, rows, cols, entries)
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(ring: R, rows: usize, parts: &[&Self]) -> Result<Self> {
        let mut out = Self::zeros(ring, rows, 0);
        for p in parts {
            if p.rows != rows {
                return Err(Error::ShapeMismatch(format!("hstack of {} rows onto {rows}", p.rows)));
            }
            out.check_ring(p)?;
            let cols = out.cols + p.cols;
            let mut entries = Vec::with_capacity(rows * cols);
            for i in 0..rows {
                entries.extend_from_slice(out.row(i));
                entries.extend_from_slice(p.row(i));
            }
            out = Matrix::new(out.ring.clone(), rows, cols, entries)?;
        }
        Ok(out)
    }

    /// Changes the row count, appending zero rows or dropping trailing rows.
    /// Dropping a nonzero row is refused.
    pub fn resize_rows(&self, rows: usize) -> Result<Self> {
        if rows < self.rows {
            if let Some(i) = (rows..self.rows).find(|&i| !self.is_row_zero(i)) {
                return Err(Error::RankOverflow { rank: i + 1, rows });
            }
            let mut out = self.clone();
            out.entries.truncate(rows * self.cols);
            out.rows = rows;
            return Ok(out);
        }
        let mut out = self.clone();
        out.entries.resize(rows * self.cols, self.ring.zero());
        out.rows = rows;
        Ok(out)
    }

    /// Column counterpart of [`Matrix::resize_rows`].
    pub fn resize_cols(&self, cols: usize) -> Result<Self> {
        let t = self.op_transpose().resize_rows(cols)?;
        Ok(Matrix::from_op_transpose(&t))
    }

    /// `Aᵗ` re-tagged to the opposite ring. This is the anti-isomorphism
    /// `M_{m×n}(D) → M_{n×m}(D^op)` turning right-sided statements into
    /// left-sided ones: `(AB)ᵗ = Bᵗ ∘ Aᵗ` with `∘` the opposite product.
    pub fn op_transpose(&self) -> Matrix<Opposite<R>> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { ring: Opposite(self.ring.clone()), rows: self.cols, cols: self.rows, entries }
    }

    /// Inverse of [`Matrix::op_transpose`].
    pub fn from_op_transpose(m: &Matrix<Opposite<R>>) -> Self {
        let mut entries = Vec::with_capacity(m.entries.len());
        for j in 0..m.cols {
            for i in 0..m.rows {
                entries.push(m.get(i, j).clone());
            }
        }
        Matrix { ring: m.ring.0.clone(), rows: m.cols, cols: m.rows, entries }
    }

    fn check_shape(&self, shape: &BlockShape) -> Result<()> {
        if shape.rows() != self.rows || shape.cols() != self.cols {
            return Err(Error::ShapeMismatch(format!(
                "shape {shape} does not partition a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    /// The `(i, j)` block `A_ij`.
    pub fn block(&self, shape: &BlockShape, i: usize, j: usize) -> Result<Self> {
        self.check_shape(shape)?;
        let (rr, cr) = (shape.row_range(i)?, shape.col_range(j)?);
        Ok(self.submatrix(rr, cr))
    }

    /// The `i`-th block row `Row_i(A)`.
    pub fn block_row(&self, shape: &BlockShape, i: usize) -> Result<Self> {
        self.check_shape(shape)?;
        Ok(self.submatrix(shape.row_range(i)?, 0..self.cols))
    }

    /// The `j`-th block column `Col_j(A)`.
    pub fn block_col(&self, shape: &BlockShape, j: usize) -> Result<Self> {
        self.check_shape(shape)?;
        Ok(self.submatrix(0..self.rows, shape.col_range(j)?))
    }

    /// Full-size matrix with `x` in block `(i, j)` and zero elsewhere.
    pub fn embed_block(x: &Self, shape: &BlockShape, i: usize, j: usize) -> Result<Self> {
        let (rr, cr) = (shape.row_range(i)?, shape.col_range(j)?);
        if x.rows != rr.len() || x.cols != cr.len() {
            return Err(Error::ShapeMismatch(format!(
                "block ({i},{j}) of {shape} is {}x{}, got {}x{}",
                rr.len(),
                cr.len(),
                x.rows,
                x.cols
            )));
        }
        let mut out = Self::zeros(x.ring.clone(), shape.rows(), shape.cols());
        for (a, r) in rr.enumerate() {
            for (b, c) in cr.clone().enumerate() {
                out.set(r, c, x.get(a, b).clone());
            }
        }
        Ok(out)
    }

    /// Embeds a block row (`m_i × n`) at block row `i`.
    pub fn embed_block_row(x: &Self, shape: &BlockShape, i: usize) -> Result<Self> {
        let rr = shape.row_range(i)?;
        if x.rows != rr.len() || x.cols != shape.cols() {
            return Err(Error::ShapeMismatch(format!("block row {i} of {shape}")));
        }
        let mut out = Self::zeros(x.ring.clone(), shape.rows(), shape.cols());
        for (a, r) in rr.enumerate() {
            out.row_mut(r).clone_from_slice(x.row(a));
        }
        Ok(out)
    }

    /// Membership in `T_(M,N)`: every block strictly below the block
    /// diagonal vanishes.
    pub fn nest_member(&self, shape: &BlockShape) -> Result<bool> {
        self.check_shape(shape)?;
        for i in 0..self.rows {
            let bi = shape.row_block_of(i);
            for j in 0..self.cols {
                if bi > shape.col_block_of(j) && !self.ring.is_zero(self.get(i, j)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// A pair of compositions `M = (m_1,…,m_r)`, `N = (n_1,…,n_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockShape {
    row_parts: Vec<usize>,
    col_parts: Vec<usize>,
}

impl BlockShape {
    pub fn new(row_parts: Vec<usize>, col_parts: Vec<usize>) -> Result<Self> {
        if row_parts.is_empty() || col_parts.is_empty() {
            return Err(Error::ShapeMismatch("block shape needs at least one part".into()));
        }
        if row_parts.iter().chain(&col_parts).any(|&p| p == 0) {
            return Err(Error::ShapeMismatch("block parts must be positive".into()));
        }
        Ok(BlockShape { row_parts, col_parts })
    }

    /// `T_M`: the square nest with `N = M`.
    pub fn square(parts: Vec<usize>) -> Result<Self> {
        BlockShape::new(parts.clone(), parts)
    }

    /// A single block: the un-nested ambient `M_{m×n}`.
    pub fn full(rows: usize, cols: usize) -> Result<Self> {
        BlockShape::new(vec![rows], vec![cols])
    }

    pub fn row_parts(&self) -> &[usize] {
        &self.row_parts
    }

    pub fn col_parts(&self) -> &[usize] {
        &self.col_parts
    }

    pub fn row_blocks(&self) -> usize {
        self.row_parts.len()
    }

    pub fn col_blocks(&self) -> usize {
        self.col_parts.len()
    }

    pub fn rows(&self) -> usize {
        self.row_parts.iter().sum()
    }

    pub fn cols(&self) -> usize {
        self.col_parts.iter().sum()
    }

    pub fn is_square(&self) -> bool {
        self.row_parts == self.col_parts
    }

    pub fn row_range(&self, i: usize) -> Result<Range<usize>> {
        part_range(&self.row_parts, i).ok_or_else(|| {
            Error::IndexOutOfRange(format!("block row {i} of {self}"))
        })
    }

    pub fn col_range(&self, j: usize) -> Result<Range<usize>> {
        part_range(&self.col_parts, j).ok_or_else(|| {
            Error::IndexOutOfRange(format!("block column {j} of {self}"))
        })
    }

    pub fn row_block_of(&self, row: usize) -> usize {
        part_of(&self.row_parts, row)
    }

    pub fn col_block_of(&self, col: usize) -> usize {
        part_of(&self.col_parts, col)
    }
}

fn part_range(parts: &[usize], i: usize) -> Option<Range<usize>> {
    let len = *parts.get(i)?;
    let start: usize = parts[..i].iter().sum();
    Some(start..start + len)
}

fn part_of(parts: &[usize], index: usize) -> usize {
    let mut acc = 0;
    for (b, &p) in parts.iter().enumerate() {
        acc += p;
        if index < acc {
            return b;
        }
    }
    panic!("index {index} outside the composition {parts:?}")
}

impl fmt::Display for BlockShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "M=({});N=({})", join(&self.row_parts), join(&self.col_parts))
    }
}

impl FromStr for BlockShape {
    type Err = Error;

    /// Accepts `M=(m1,..);N=(n1,..)` or `MxN` for a single block.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("bad block shape {s:?}"));
        if let Some((m, n)) = s.split_once(['x', 'X']) {
            if !m.contains('=') {
                let m = m.parse().map_err(|_| bad())?;
                let n = n.parse().map_err(|_| bad())?;
                return BlockShape::full(m, n).map_err(|_| bad());
            }
        }
        let (m, n) = s.split_once(';').ok_or_else(bad)?;
        let parts = |t: &str, key: &str| -> Result<Vec<usize>> {
            let inner = t
                .strip_prefix(key)
                .and_then(|t| t.strip_prefix("=("))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(bad)?;
            inner.split(',').map(|p| p.parse().map_err(|_| bad())).collect()
        };
        BlockShape::new(parts(m, "M")?, parts(n, "N")?).map_err(|_| bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Quaternion, Quaternions, Rationals};
    use num_rational::BigRational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn qmat(rows: &[&[i64]]) -> Matrix<Rationals> {
        Matrix::from_rows(Rationals, rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn standard_matrices() {
        assert_eq!(Matrix::standard(Rationals, 2, 2, 0, 1).unwrap(), qmat(&[&[0, 1], &[0, 0]]));
        assert_eq!(Matrix::standard(Rationals, 1, 3, 0, 0).unwrap(), qmat(&[&[1, 0, 0]]));
        assert!(matches!(
            Matrix::standard(Rationals, 2, 2, 2, 0),
            Err(Error::IndexOutOfRange(_))
        ));
    }

    #[test]
    fn products() {
        let e12 = Matrix::standard(Rationals, 2, 2, 0, 1).unwrap();
        let e21 = Matrix::standard(Rationals, 2, 2, 1, 0).unwrap();
        assert_eq!(e12.mul(&e21).unwrap(), Matrix::standard(Rationals, 2, 2, 0, 0).unwrap());

        let i = Matrix::from_rows(Quaternions, vec![vec![Quaternion::i()]]).unwrap();
        let j = Matrix::from_rows(Quaternions, vec![vec![Quaternion::j()]]).unwrap();
        assert_eq!(i.mul(&j).unwrap().get(0, 0), &Quaternion::k());
        assert_eq!(j.mul(&i).unwrap().get(0, 0), &Quaternions.neg(&Quaternion::k()));

        assert!(matches!(e12.mul(&qmat(&[&[1, 2, 3]])), Err(Error::ShapeMismatch(_))));
        let f2 = Matrix::identity(PrimeField::new(2).unwrap(), 2);
        let f3 = Matrix::identity(PrimeField::new(3).unwrap(), 2);
        assert!(matches!(f2.mul(&f3), Err(Error::RingMismatch(..))));
    }

    #[test]
    fn standard_left_multiplication_moves_rows() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..50 {
            let a = Matrix::random(Quaternions, 3, 4, &mut rng);
            for i in 0..3 {
                for j in 0..3 {
                    let e = Matrix::standard(Quaternions, 3, 3, i, j).unwrap();
                    let mut expect = Matrix::zeros(Quaternions, 3, 4);
                    expect.row_mut(i).clone_from_slice(a.row(j));
                    assert_eq!(e.mul(&a).unwrap(), expect);
                }
            }
            for i in 0..4 {
                for j in 0..4 {
                    let e = Matrix::standard(Quaternions, 4, 4, i, j).unwrap();
                    let mut expect = Matrix::zeros(Quaternions, 3, 4);
                    for r in 0..3 {
                        expect.set(r, j, a.get(r, i).clone());
                    }
                    assert_eq!(a.mul(&e).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn quaternion_products_associate() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for _ in 0..50 {
            let a = Matrix::random(Quaternions, 2, 3, &mut rng);
            let b = Matrix::random(Quaternions, 3, 2, &mut rng);
            let c = Matrix::random(Quaternions, 2, 2, &mut rng);
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn op_transpose_is_an_anti_isomorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let i = Matrix::from_rows(Quaternions, vec![vec![Quaternion::i()]]).unwrap();
        let j = Matrix::from_rows(Quaternions, vec![vec![Quaternion::j()]]).unwrap();
        let lhs = i.mul(&j).unwrap().op_transpose();
        assert_eq!(lhs.get(0, 0), &Quaternion::k());
        assert_eq!(lhs, j.op_transpose().mul(&i.op_transpose()).unwrap());
        for _ in 0..50 {
            let a = Matrix::random(Quaternions, 2, 3, &mut rng);
            let b = Matrix::random(Quaternions, 3, 4, &mut rng);
            assert_eq!(
                a.mul(&b).unwrap().op_transpose(),
                b.op_transpose().mul(&a.op_transpose()).unwrap()
            );
            assert_eq!(Matrix::from_op_transpose(&a.op_transpose()), a);
        }
        let a = qmat(&[&[1, 2, 3], &[4, 5, 6]]);
        let t = a.op_transpose();
        assert_eq!(t.shape(), (3, 2));
        assert_eq!(t.get(2, 1), &q(6));
        assert_eq!(t.ring(), &Opposite(Rationals));
    }

    #[test]
    fn blocks() {
        let shape: BlockShape = "M=(1,2);N=(1,2)".parse().unwrap();
        let id = Matrix::identity(Rationals, 3);
        assert_eq!(id.block(&shape, 0, 1).unwrap(), qmat(&[&[0, 0]]));
        assert_eq!(id.block(&shape, 1, 1).unwrap(), Matrix::identity(Rationals, 2));
        assert_eq!(id.block_row(&shape, 1).unwrap(), qmat(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(id.block_col(&shape, 0).unwrap(), qmat(&[&[1], &[0], &[0]]));
        let bad = BlockShape::new(vec![1, 1], vec![1, 2]).unwrap();
        assert!(id.block(&bad, 0, 0).is_err());
        assert!(id.block(&shape, 2, 0).is_err());
    }

    #[test]
    fn embedding() {
        let shape = BlockShape::square(vec![1, 1]).unwrap();
        let x = qmat(&[&[1]]);
        assert_eq!(Matrix::embed_block(&x, &shape, 0, 1).unwrap(), qmat(&[&[0, 1], &[0, 0]]));
        let shape = BlockShape::square(vec![1, 2]).unwrap();
        let z = Matrix::zeros(Rationals, 1, 2);
        assert!(Matrix::embed_block(&z, &shape, 0, 1).unwrap().is_zero());
        assert!(Matrix::embed_block(&z, &shape, 1, 1).is_err());
    }

    #[test]
    fn nest_membership() {
        let shape = BlockShape::square(vec![1, 1]).unwrap();
        assert!(Matrix::identity(Rationals, 2).nest_member(&shape).unwrap());
        assert!(!Matrix::standard(Rationals, 2, 2, 1, 0).unwrap().nest_member(&shape).unwrap());
        let single = BlockShape::full(2, 2).unwrap();
        assert!(qmat(&[&[1, 2], &[3, 4]]).nest_member(&single).unwrap());
        assert!(Matrix::identity(Rationals, 3).nest_member(&shape).is_err());
    }

    #[test]
    fn shape_parsing() {
        let s: BlockShape = "M=(1, 2);N=(3)".parse().unwrap();
        assert_eq!(s.row_parts(), &[1, 2]);
        assert_eq!(s.col_parts(), &[3]);
        assert_eq!(s.to_string(), "M=(1,2);N=(3)");
        assert_eq!("2x3".parse::<BlockShape>().unwrap(), BlockShape::full(2, 3).unwrap());
        assert!("M=(0);N=(1)".parse::<BlockShape>().is_err());
        assert!("M=(1)".parse::<BlockShape>().is_err());
        assert!(BlockShape::new(vec![], vec![1]).is_err());
    }

    #[test]
    fn resizing() {
        let a = qmat(&[&[1, 1], &[0, 0], &[0, 0]]);
        assert_eq!(a.resize_rows(1).unwrap(), qmat(&[&[1, 1]]));
        assert_eq!(a.resize_rows(4).unwrap().rows(), 4);
        assert!(qmat(&[&[1, 0], &[0, 1]]).resize_rows(1).is_err());
        assert_eq!(qmat(&[&[1, 0], &[2, 0]]).resize_cols(1).unwrap(), qmat(&[&[1], &[2]]));
    }
}
