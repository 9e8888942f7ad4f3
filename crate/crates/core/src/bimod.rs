//! Subbimodules of nest modules and products of one-sided ideals of `T_N`.
//!
//! Every subbimodule of `T_(M,N)` is the set of all matrices supported on an
//! up- and right-closed pattern of blocks, described by `i` (the number of
//! nonzero block rows) and `j_1 ≤ … ≤ j_i` (the first nonzero block column
//! of each). Descriptor block indices are 1-based to match that numbering.

use crate::echelon::{self, EchelonMatrix};
use crate::matrix::{BlockShape, Matrix};
use crate::nest::NestTuple;
use crate::ring::DivisionRing;
use crate::submod_full::FullSubmoduleRep;
use crate::{Error, Result, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BimoduleDescriptor {
    shape: BlockShape,
    js: Vec<usize>,
}

impl BimoduleDescriptor {
    pub fn new(shape: BlockShape, js: Vec<usize>) -> Result<Self> {
        let (r, s) = (shape.row_blocks(), shape.col_blocks());
        if js.len() > r.min(s) {
            return Err(Error::InvalidDescriptor(format!("i = {} exceeds min(r, s) = {}", js.len(), r.min(s))));
        }
        for (k, &j) in js.iter().enumerate() {
            if j < k + 1 || j > s {
                return Err(Error::InvalidDescriptor(format!("j_{} = {j} is outside {}..={s}", k + 1, k + 1)));
            }
        }
        if js.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidDescriptor("js must be nondecreasing".into()));
        }
        Ok(BimoduleDescriptor { shape, js })
    }

    pub fn zero(shape: BlockShape) -> Self {
        BimoduleDescriptor { shape, js: Vec::new() }
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn i(&self) -> usize {
        self.js.len()
    }

    pub fn js(&self) -> &[usize] {
        &self.js
    }

    /// Whether block `(k, l)` (1-based) lies in the support.
    pub fn supports(&self, k: usize, l: usize) -> bool {
        k >= 1 && k <= self.i() && l >= self.js[k - 1] && l <= self.shape.col_blocks()
    }

    /// `r_k = Σ_{l ≥ j_k} n_l` for `k = 1..=i`.
    pub fn widths(&self) -> Vec<usize> {
        let parts = self.shape.col_parts();
        self.js.iter().map(|&j| parts[j - 1..].iter().sum()).collect()
    }

    /// All valid descriptors for a shape, in lexicographic order of `js`
    /// after `i`.
    pub fn all(shape: &BlockShape) -> Vec<Self> {
        let (r, s) = (shape.row_blocks(), shape.col_blocks());
        let mut out = Vec::new();
        let mut stack: Vec<Vec<usize>> = vec![Vec::new()];
        while let Some(js) = stack.pop() {
            out.push(BimoduleDescriptor { shape: shape.clone(), js: js.clone() });
            let k = js.len() + 1;
            if k > r.min(s) {
                continue;
            }
            let lo = js.last().copied().unwrap_or(1).max(k);
            for j in (lo..=s).rev() {
                let mut next = js.clone();
                next.push(j);
                stack.push(next);
            }
        }
        out.sort_by(|a, b| (a.i(), &a.js).cmp(&(b.i(), &b.js)));
        out
    }

    /// Membership of `A` in the described subbimodule.
    pub fn contains<R: DivisionRing>(&self, a: &Matrix<R>) -> Result<bool> {
        if !a.nest_member(&self.shape)? {
            return Err(Error::NotInNest);
        }
        for i in 0..a.rows() {
            for j in 0..a.cols() {
                let (k, l) = (self.shape.row_block_of(i) + 1, self.shape.col_block_of(j) + 1);
                if !self.supports(k, l) && !a.ring().is_zero(a.get(i, j)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Descriptor of the smallest subbimodule of `T_(M,N)` containing `gens`.
///
/// A nonzero block `(k', l')` of a generator forces every block `(k, l)`
/// with `k ≤ k'` and `l ≥ l'`, and each forced block fills up completely
/// because the full matrix bimodule is simple.
pub fn bimodule_closure<R: DivisionRing>(gens: &[Matrix<R>], shape: &BlockShape) -> Result<BimoduleDescriptor> {
    let r = shape.row_blocks();
    // lowest[k] = least nonzero block column seen in block rows ≥ k
    let mut lowest: Vec<Option<usize>> = vec![None; r];
    for g in gens {
        if !g.nest_member(shape)? {
            return Err(Error::NotInNest);
        }
        for i in 0..g.rows() {
            for j in 0..g.cols() {
                if !g.ring().is_zero(g.get(i, j)) {
                    let (k, l) = (shape.row_block_of(i), shape.col_block_of(j));
                    lowest[k] = Some(lowest[k].map_or(l, |x| x.min(l)));
                }
            }
        }
    }
    for k in (0..r.saturating_sub(1)).rev() {
        lowest[k] = match (lowest[k], lowest[k + 1]) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
    }
    let js = lowest.iter().map_while(|x| x.map(|l| l + 1)).collect();
    BimoduleDescriptor::new(shape.clone(), js)
}

/// The left tuple `(R_1,…,R_i,0,…,0)`, with `R_k` carrying `I_{r_k}` in its
/// top right corner.
pub fn descriptor_to_tuple<R: DivisionRing>(ring: R, d: &BimoduleDescriptor) -> Result<NestTuple<R>> {
    let n = d.shape.cols();
    let widths = d.widths();
    let reps = (0..d.shape.row_blocks())
        .map(|k| {
            let mut m = Matrix::zeros(ring.clone(), n, n);
            if let Some(&rk) = widths.get(k) {
                for x in 0..rk {
                    m.set(x, n - rk + x, ring.one());
                }
            }
            EchelonMatrix::try_from_matrix(m, Side::Left)
        })
        .collect::<Result<_>>()?;
    NestTuple::new(Side::Left, d.shape.clone(), reps)
}

/// The right tuple of the same subbimodule: `C_l` carries `I_{c_l}` in its
/// top left corner, `c_l` being the height of the support in block column `l`.
pub fn descriptor_to_right_tuple<R: DivisionRing>(ring: R, d: &BimoduleDescriptor) -> Result<NestTuple<R>> {
    let m = d.shape.rows();
    let row_parts = d.shape.row_parts();
    let reps = (1..=d.shape.col_blocks())
        .map(|l| {
            let height: usize = (1..=d.i()).filter(|&k| d.supports(k, l)).map(|k| row_parts[k - 1]).sum();
            let mut c = Matrix::zeros(ring.clone(), m, m);
            for x in 0..height {
                c.set(x, x, ring.one());
            }
            EchelonMatrix::try_from_matrix(c, Side::Right)
        })
        .collect::<Result<_>>()?;
    NestTuple::new(Side::Right, d.shape.clone(), reps)
}

/// A generator with a single 1 in each nonzero block row `k`, placed in the
/// last row of that block row and the first column of block column `j_k`.
pub fn bimodule_principal_generator<R: DivisionRing>(ring: R, d: &BimoduleDescriptor) -> Result<Matrix<R>> {
    let mut a = Matrix::zeros(ring.clone(), d.shape.rows(), d.shape.cols());
    for (k, &j) in d.js.iter().enumerate() {
        let row = d.shape.row_range(k)?.end - 1;
        let col = d.shape.col_range(j - 1)?.start;
        a.set(row, col, ring.one());
    }
    if &bimodule_closure(std::slice::from_ref(&a), &d.shape)? != d {
        unreachable!("one entry per block row recovers the support pattern");
    }
    Ok(a)
}

/// Checks that a nonzero `A ∈ M_{m×n}` generates the whole bimodule: with
/// `a = A[i0][j0] ≠ 0`, every `E_ij` equals `(a⁻¹·I)·E_{i i0}·A·E_{j0 j}`.
pub fn is_simple_bimodule_witness<R: DivisionRing>(a: &Matrix<R>) -> Result<bool> {
    let ring = a.ring().clone();
    let (m, n) = a.shape();
    let (i0, j0) = (0..m)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !ring.is_zero(a.get(i, j)))
        .ok_or(Error::ZeroGenerator)?;
    let scale = Matrix::identity(ring.clone(), m).scale_left(&ring.inv(a.get(i0, j0))?);
    for i in 0..m {
        for j in 0..n {
            let left = scale.mul(&Matrix::standard(ring.clone(), m, m, i, i0)?)?;
            let x = left.mul(a)?.mul(&Matrix::standard(ring.clone(), n, n, j0, j)?)?;
            if x != Matrix::standard(ring.clone(), m, n, i, j)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_square_pair<R: DivisionRing>(t1: &NestTuple<R>, t2: &NestTuple<R>, side: Side) -> Result<()> {
    if t1.side() != side || t2.side() != side {
        return Err(Error::SideMismatch);
    }
    if t1.shape() != t2.shape() {
        return Err(Error::ShapeMismatch(format!("shapes {} and {}", t1.shape(), t2.shape())));
    }
    if !t1.shape().is_square() {
        return Err(Error::ShapeMismatch(format!("nest {} is not square", t1.shape())));
    }
    Ok(())
}

/// `Φ(J1·J2)` for left ideals of `T_N`:
/// `(Φ)_i = ⋁ { (t2)_k : ColBlk_k((t1)_i) ≠ 0 }`.
pub fn left_ideal_product<R: DivisionRing>(t1: &NestTuple<R>, t2: &NestTuple<R>) -> Result<NestTuple<R>> {
    check_square_pair(t1, t2, Side::Left)?;
    let shape = t1.shape();
    let n = shape.cols();
    let ring = t1.reps()[0].mat().ring().clone();
    let reps = t1
        .reps()
        .iter()
        .map(|r1| {
            let mut acc = EchelonMatrix::zero(ring.clone(), n, n, Side::Left);
            for k in 0..shape.col_blocks() {
                if !r1.mat().block_col(shape, k)?.is_zero() {
                    acc = echelon::join(&acc, &t2.reps()[k])?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    NestTuple::from_reps(Side::Left, shape.clone(), reps)
}

/// `Φ(J1·J2)` for right ideals of `T_N`:
/// `(Φ)_j = ⋁ { (t1)_k : RowBlk_k((t2)_j) ≠ 0 }`.
pub fn right_ideal_product<R: DivisionRing>(t1: &NestTuple<R>, t2: &NestTuple<R>) -> Result<NestTuple<R>> {
    check_square_pair(t1, t2, Side::Right)?;
    let shape = t1.shape();
    let m = shape.rows();
    let ring = t1.reps()[0].mat().ring().clone();
    let reps = t2
        .reps()
        .iter()
        .map(|c2| {
            let mut acc = EchelonMatrix::zero(ring.clone(), m, m, Side::Right);
            for k in 0..shape.row_blocks() {
                if !c2.mat().block_row(shape, k)?.is_zero() {
                    acc = echelon::join(&acc, &t1.reps()[k])?;
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    NestTuple::from_reps(Side::Right, shape.clone(), reps)
}

/// The ideal product on either side.
pub fn ideal_product<R: DivisionRing>(t1: &NestTuple<R>, t2: &NestTuple<R>) -> Result<NestTuple<R>> {
    match t1.side() {
        Side::Left => left_ideal_product(t1, t2),
        Side::Right => right_ideal_product(t1, t2),
    }
}

/// The entrywise reading `(t1 ∗ t2)_i = (t1)_i ∗ (t2)_i`, using the product
/// of one-sided ideals of `M_n` in each slot. The result need not be a
/// valid tuple and in general differs from [`ideal_product`].
pub fn componentwise_star<R: DivisionRing>(t1: &NestTuple<R>, t2: &NestTuple<R>) -> Result<NestTuple<R>> {
    check_square_pair(t1, t2, t1.side())?;
    let n = t1.shape().cols();
    let reps = t1
        .reps()
        .iter()
        .zip(t2.reps())
        .map(|(a, b)| {
            let a = FullSubmoduleRep::from_rep(a.clone(), (n, n))?;
            let b = FullSubmoduleRep::from_rep(b.clone(), (n, n))?;
            Ok(a.star(&b)?.rep().clone())
        })
        .collect::<Result<_>>()?;
    NestTuple::from_reps(t1.side(), t1.shape().clone(), reps)
}
