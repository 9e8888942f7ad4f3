//! One-sided submodules of nest modules `T_(M,N)`.
//!
//! A left `T_M`-submodule `J` is stored as `(R_1,…,R_r)` with
//! `Row_i(J) = M_{m_i×n}·R_i`; a right `T_N`-submodule as `(C_1,…,C_s)` with
//! `Col_j(J) = C_j·M_{m×n_j}`. All block indices in this API are 0-based.

use crate::echelon::{self, EchelonMatrix};
use crate::matrix::{BlockShape, Matrix};
use crate::ring::DivisionRing;
use crate::{Error, Result, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NestTuple<R: DivisionRing> {
    side: Side,
    shape: BlockShape,
    reps: Vec<EchelonMatrix<R>>,
}

impl<R: DivisionRing> NestTuple<R> {
    /// Wraps a tuple without checking the chain and vanishing conditions;
    /// see [`NestTuple::validate_tuple`].
    pub fn from_reps(side: Side, shape: BlockShape, reps: Vec<EchelonMatrix<R>>) -> Result<Self> {
        let (len, dim) = tuple_dims(side, &shape);
        if reps.len() != len {
            return Err(Error::InvalidTuple(format!("expected {len} entries, got {}", reps.len())));
        }
        for r in &reps {
            if r.side() != side {
                return Err(Error::SideMismatch);
            }
            if r.mat().shape() != (dim, dim) {
                return Err(Error::InvalidTuple(format!("entries must be {dim}x{dim}")));
            }
        }
        Ok(NestTuple { side, shape, reps })
    }

    /// Like [`NestTuple::from_reps`] but rejects tuples outside `R_N(r)` / `C_M(s)`.
    pub fn new(side: Side, shape: BlockShape, reps: Vec<EchelonMatrix<R>>) -> Result<Self> {
        let t = Self::from_reps(side, shape, reps)?;
        t.require_valid()?;
        Ok(t)
    }

    pub fn zero(ring: R, shape: BlockShape, side: Side) -> Self {
        let (len, dim) = tuple_dims(side, &shape);
        let reps = vec![EchelonMatrix::zero(ring, dim, dim, side); len];
        NestTuple { side, shape, reps }
    }

    /// The tuple of the whole nest module.
    pub fn full(ring: R, shape: BlockShape, side: Side) -> Self {
        let (len, dim) = tuple_dims(side, &shape);
        let reps = (0..len)
            .map(|t| {
                // diagonal projection onto the blocks allowed at position t
                let mut d = Matrix::zeros(ring.clone(), dim, dim);
                for x in 0..dim {
                    let allowed = match side {
                        Side::Left => shape.col_block_of(x) >= t,
                        Side::Right => shape.row_block_of(x) <= t,
                    };
                    if allowed {
                        d.set(x, x, ring.one());
                    }
                }
                echelon::reduce(&d, side)
            })
            .collect();
        NestTuple { side, shape, reps }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn reps(&self) -> &[EchelonMatrix<R>] {
        &self.reps
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.reps.iter().map(EchelonMatrix::rank).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.reps.iter().all(EchelonMatrix::is_zero)
    }

    /// The 1-based index `k` of the theory: largest nonzero index on the
    /// left, smallest on the right, and 0 for the zero tuple.
    pub fn k(&self) -> usize {
        let nz = |r: &EchelonMatrix<R>| !r.is_zero();
        match self.side {
            Side::Left => self.reps.iter().rposition(nz).map_or(0, |i| i + 1),
            Side::Right => self.reps.iter().position(nz).map_or(0, |j| j + 1),
        }
    }

    fn ring(&self) -> R {
        // block shapes have at least one part, so the tuple is never empty
        self.reps[0].mat().ring().clone()
    }

    /// Membership in `R_N(r)` (left) or `C_M(s)` (right).
    pub fn validate_tuple(&self) -> bool {
        let reduced = |r: &EchelonMatrix<R>| match self.side {
            Side::Left => echelon::is_left_row_reduced(r.mat()),
            Side::Right => echelon::is_right_column_reduced(r.mat()),
        };
        if !self.reps.iter().all(reduced) {
            return false;
        }
        let chain = self.reps.windows(2).all(|w| match self.side {
            Side::Left => w[1].leq(&w[0]).unwrap_or(false),
            Side::Right => w[0].leq(&w[1]).unwrap_or(false),
        });
        if !chain {
            return false;
        }
        self.reps.iter().enumerate().all(|(t, r)| {
            let m = r.mat();
            (0..m.rows()).all(|a| {
                (0..m.cols()).all(|b| {
                    let forbidden = match self.side {
                        // ColBlk_j(R_i) = 0 for j < i
                        Side::Left => self.shape.col_block_of(b) < t,
                        // RowBlk_i(C_j) = 0 for i > j
                        Side::Right => self.shape.row_block_of(a) > t,
                    };
                    !forbidden || m.ring().is_zero(m.get(a, b))
                })
            })
        })
    }

    fn require_valid(&self) -> Result<()> {
        if self.validate_tuple() {
            Ok(())
        } else {
            Err(Error::InvalidTuple("tuple violates the chain or vanishing conditions".into()))
        }
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!("shapes {} and {}", self.shape, other.shape)));
        }
        Ok(())
    }

    fn check_member(&self, a: &Matrix<R>) -> Result<()> {
        if !a.nest_member(&self.shape)? {
            return Err(Error::NotInNest);
        }
        Ok(())
    }

    /// `A ∈ J`, tested block row by block row (block column on the right).
    pub fn contains(&self, a: &Matrix<R>) -> Result<bool> {
        self.check_member(a)?;
        for (t, r) in self.reps.iter().enumerate() {
            let ok = match self.side {
                Side::Left => echelon::lrs_leq(&a.block_row(&self.shape, t)?, r.mat())?,
                Side::Right => echelon::rcs_leq(&a.block_col(&self.shape, t)?, r.mat())?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&EchelonMatrix<R>, &EchelonMatrix<R>) -> Result<EchelonMatrix<R>>,
    ) -> Result<Self> {
        self.check_pair(other)?;
        let reps = self.reps.iter().zip(&other.reps).map(|(a, b)| f(a, b)).collect::<Result<_>>()?;
        Ok(NestTuple { side: self.side, shape: self.shape.clone(), reps })
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, echelon::join)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, echelon::meet)
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_pair(other)?;
        for (a, b) in self.reps.iter().zip(&other.reps) {
            if !a.leq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Whether `T_M·A` (left) or `A·T_N` (right) is exactly this submodule.
    pub fn check_generates(&self, a: &Matrix<R>) -> Result<bool> {
        self.check_member(a)?;
        let generated = nest_phi_from_generators(self.ring(), std::slice::from_ref(a), &self.shape, self.side)?;
        Ok(&generated == self)
    }

    fn part(&self, t: usize) -> usize {
        match self.side {
            Side::Left => self.shape.row_parts()[t],
            Side::Right => self.shape.col_parts()[t],
        }
    }

    /// Rank jumps along the chain: `rank(R_i) − rank(R_{i+1})` on the left,
    /// `rank(C_j) − rank(C_{j−1})` on the right.
    fn rank_jumps(&self) -> Vec<usize> {
        let ranks = self.ranks();
        let len = ranks.len();
        (0..len)
            .map(|t| match self.side {
                Side::Left => ranks[t] - ranks.get(t + 1).copied().unwrap_or(0),
                Side::Right => ranks[t] - if t == 0 { 0 } else { ranks[t - 1] },
            })
            .collect()
    }

    pub fn is_principal(&self) -> Result<bool> {
        self.require_valid()?;
        Ok(self.rank_jumps().iter().enumerate().all(|(t, &d)| d <= self.part(t)))
    }

    /// A single generator, built from the far end of the chain inward by
    /// greedily completing each span with rows (columns) of the next entry.
    pub fn principal_generator(&self) -> Result<Matrix<R>> {
        if !self.is_principal()? {
            return Err(Error::NotPrincipal);
        }
        let ring = self.ring();
        let (rows, cols) = (self.shape.rows(), self.shape.cols());
        let mut a = Matrix::zeros(ring.clone(), rows, cols);
        let len = self.reps.len();
        let order: Vec<usize> = match self.side {
            Side::Left => (0..len).rev().collect(),
            Side::Right => (0..len).collect(),
        };
        let mut prev: Option<&EchelonMatrix<R>> = None;
        for t in order {
            let rep = &self.reps[t];
            let picked = complete_basis(prev.map(EchelonMatrix::basis), &rep.basis(), self.side)?;
            match self.side {
                Side::Left => {
                    let start = self.shape.row_range(t)?.start;
                    for (x, row) in picked.iter().enumerate() {
                        for (c, v) in row.iter().enumerate().take(cols) {
                            a.set(start + x, c, v.clone());
                        }
                    }
                }
                Side::Right => {
                    let start = self.shape.col_range(t)?.start;
                    for (x, col) in picked.iter().enumerate() {
                        for (r, v) in col.iter().enumerate().take(rows) {
                            a.set(r, start + x, v.clone());
                        }
                    }
                }
            }
            prev = Some(rep);
        }
        if !self.check_generates(&a)? {
            unreachable!("greedy completion always generates a principal submodule");
        }
        Ok(a)
    }
}

fn tuple_dims(side: Side, shape: &BlockShape) -> (usize, usize) {
    match side {
        Side::Left => (shape.row_blocks(), shape.cols()),
        Side::Right => (shape.col_blocks(), shape.rows()),
    }
}

/// Rows (left) or columns (right) of `target` that extend the span of
/// `base` to the span of `target`, chosen greedily in order.
fn complete_basis<R: DivisionRing>(
    base: Option<Matrix<R>>,
    target: &Matrix<R>,
    side: Side,
) -> Result<Vec<Vec<R::Elem>>> {
    let ring = target.ring().clone();
    let vectors = |m: &Matrix<R>| -> Vec<Vec<R::Elem>> {
        match side {
            Side::Left => (0..m.rows()).map(|i| m.row_vec(i)).collect(),
            Side::Right => (0..m.cols()).map(|j| m.col_vec(j)).collect(),
        }
    };
    let len = match side {
        Side::Left => target.cols(),
        Side::Right => target.rows(),
    };
    let rank = |vs: &[Vec<R::Elem>]| -> Result<usize> {
        let flat: Vec<R::Elem> = match side {
            Side::Left => vs.concat(),
            // right dependence of columns, so lay the vectors out as columns
            Side::Right => (0..len).flat_map(|i| vs.iter().map(move |v| v[i].clone())).collect(),
        };
        let m = match side {
            Side::Left => Matrix::new(ring.clone(), vs.len(), len, flat)?,
            Side::Right => Matrix::new(ring.clone(), len, vs.len(), flat)?,
        };
        Ok(echelon::rank(&m))
    };
    let mut acc = base.as_ref().map(vectors).unwrap_or_default();
    let mut current = rank(&acc)?;
    let mut picked = Vec::new();
    for v in vectors(target) {
        acc.push(v.clone());
        let next = rank(&acc)?;
        if next > current {
            current = next;
            picked.push(v);
        } else {
            acc.pop();
        }
    }
    Ok(picked)
}

/// `Φ` of the submodule generated by `gens`.
pub fn nest_phi_from_generators<R: DivisionRing>(
    ring: R,
    gens: &[Matrix<R>],
    shape: &BlockShape,
    side: Side,
) -> Result<NestTuple<R>> {
    for g in gens {
        if !g.nest_member(shape)? {
            return Err(Error::NotInNest);
        }
    }
    let (len, dim) = tuple_dims(side, shape);
    let mut reps = Vec::with_capacity(len);
    for t in 0..len {
        let rep = match side {
            Side::Left => {
                // Row_t(J) = Σ_{k ≥ t} M_{m_t×m_k}·Row_k(A)
                let mut parts = Vec::new();
                for g in gens {
                    for k in t..len {
                        parts.push(g.block_row(shape, k)?);
                    }
                }
                let refs: Vec<&Matrix<R>> = parts.iter().collect();
                let stacked = Matrix::vstack(ring.clone(), dim, &refs)?;
                echelon::lrref(&stacked).resize(dim)?
            }
            Side::Right => {
                // Col_t(J) = Σ_{l ≤ t} Col_l(A)·M_{n_l×n_t}
                let mut parts = Vec::new();
                for g in gens {
                    for l in 0..=t {
                        parts.push(g.block_col(shape, l)?);
                    }
                }
                let refs: Vec<&Matrix<R>> = parts.iter().collect();
                let stacked = Matrix::hstack(ring.clone(), dim, &refs)?;
                echelon::rcref(&stacked).resize(dim)?
            }
        };
        reps.push(rep);
    }
    Ok(NestTuple { side, shape: shape.clone(), reps })
}

/// Every valid tuple over a finite ring, by filtering all tuples of
/// reduced matrices through [`NestTuple::validate_tuple`].
pub fn enumerate_tuples<R: DivisionRing>(ring: &R, shape: &BlockShape, side: Side) -> Result<Vec<NestTuple<R>>> {
    let (len, dim) = tuple_dims(side, shape);
    let reps = crate::submod_full::enumerate_reps(ring, dim, side)?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; len];
    loop {
        let t = NestTuple { side, shape: shape.clone(), reps: idx.iter().map(|&i| reps[i].clone()).collect() };
        if t.validate_tuple() {
            out.push(t);
        }
        let mut pos = 0;
        loop {
            if pos == len {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < reps.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}
