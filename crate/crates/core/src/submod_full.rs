//! One-sided submodules of the full bimodule `M_{m×n}(D)`.
//!
//! A left submodule `I` is stored as the unique `n×n` left row reduced
//! matrix `R` with `I = M_{m×n}·R`; a right submodule as the unique `m×m`
//! right column reduced `C` with `I = C·M_{m×n}`.

use crate::echelon::{self, EchelonMatrix};
use crate::matrix::Matrix;
use crate::ring::DivisionRing;
use crate::{Error, Result, Side};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FullSubmoduleRep<R: DivisionRing> {
    side: Side,
    ambient: (usize, usize),
    rep: EchelonMatrix<R>,
}

impl<R: DivisionRing> FullSubmoduleRep<R> {
    /// Wraps an echelon matrix; `rep` must be `n×n` left-reduced (left side)
    /// or `m×m` right-reduced (right side).
    pub fn from_rep(rep: EchelonMatrix<R>, ambient: (usize, usize)) -> Result<Self> {
        let side = rep.side();
        let dim = rep_dim(side, ambient);
        if rep.mat().shape() != (dim, dim) {
            return Err(Error::ShapeMismatch(format!(
                "{side} representative for {}x{} must be {dim}x{dim}",
                ambient.0, ambient.1
            )));
        }
        Ok(FullSubmoduleRep { side, ambient, rep })
    }

    pub fn zero(ring: R, ambient: (usize, usize), side: Side) -> Self {
        let d = rep_dim(side, ambient);
        FullSubmoduleRep { side, ambient, rep: EchelonMatrix::zero(ring, d, d, side) }
    }

    pub fn full(ring: R, ambient: (usize, usize), side: Side) -> Self {
        let d = rep_dim(side, ambient);
        FullSubmoduleRep { side, ambient, rep: EchelonMatrix::identity(ring, d, side) }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn ambient(&self) -> (usize, usize) {
        self.ambient
    }

    pub fn rep(&self) -> &EchelonMatrix<R> {
        &self.rep
    }

    pub fn rank(&self) -> usize {
        self.rep.rank()
    }

    fn ring(&self) -> &R {
        self.rep.mat().ring()
    }

    fn check_pair(&self, other: &Self) -> Result<()> {
        if self.side != other.side {
            return Err(Error::SideMismatch);
        }
        if self.ambient != other.ambient {
            return Err(Error::ShapeMismatch(format!(
                "ambients {:?} and {:?}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    fn check_member_shape(&self, a: &Matrix<R>) -> Result<()> {
        if a.shape() != self.ambient {
            return Err(Error::ShapeMismatch(format!(
                "{:?} matrix in a {:?} ambient",
                a.shape(),
                self.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, a: &Matrix<R>) -> Result<bool> {
        self.check_member_shape(a)?;
        echelon::space_leq(a, self.rep.mat(), self.side)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let rep = echelon::join(&self.rep, &other.rep)?;
        Ok(FullSubmoduleRep { rep, ..self.clone() })
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        let rep = echelon::meet(&self.rep, &other.rep)?;
        Ok(FullSubmoduleRep { rep, ..self.clone() })
    }

    pub fn leq(&self, other: &Self) -> Result<bool> {
        self.check_pair(other)?;
        self.rep.leq(&other.rep)
    }

    /// Dimension as a one-sided `D`-vector space: `m·rank` on the left,
    /// `rank·n` on the right.
    pub fn dim(&self) -> usize {
        match self.side {
            Side::Left => self.ambient.0 * self.rank(),
            Side::Right => self.rank() * self.ambient.1,
        }
    }

    /// Principal iff a single `m×n` matrix can carry the whole span.
    pub fn is_principal(&self) -> bool {
        match self.side {
            Side::Left => self.rank() <= self.ambient.0,
            Side::Right => self.rank() <= self.ambient.1,
        }
    }

    /// The representative padded or truncated to `m×n`; it generates the
    /// submodule as `M_m·A` (left) or `A·M_n` (right).
    pub fn principal_generator(&self) -> Result<Matrix<R>> {
        if !self.is_principal() {
            return Err(Error::NotPrincipal);
        }
        match self.side {
            Side::Left => self.rep.mat().resize_rows(self.ambient.0),
            Side::Right => self.rep.mat().resize_cols(self.ambient.1),
        }
    }

    fn check_square(&self) -> Result<usize> {
        let (m, n) = self.ambient;
        if m != n {
            return Err(Error::ShapeMismatch(format!("ambient {m}x{n} is not square")));
        }
        Ok(n)
    }

    /// `φ(I1·I2)` for one-sided ideals of `M_n`.
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check_pair(other)?;
        self.check_square()?;
        let rep = match self.side {
            Side::Left => star_left(self.rep.mat(), other.rep.mat())?,
            Side::Right => {
                // (C1·M_n)(C2·M_n) transposes to (M_n·C2ᵗ)(M_n·C1ᵗ) over D^op
                let a = echelon::lrref(&other.rep.mat().op_transpose());
                let b = echelon::lrref(&self.rep.mat().op_transpose());
                let prod = star_left(a.mat(), b.mat())?;
                echelon::rcref(&Matrix::from_op_transpose(prod.mat()))
            }
        };
        FullSubmoduleRep::from_rep(rep, self.ambient)
    }

    /// Canonicalisation for square ambients: an invertible `P` with
    /// `φ(P⁻¹·I·P) = [[I_r, 0], [0, 0]]`.
    pub fn conjugate_to_canonical(&self) -> Result<(Matrix<R>, Self)> {
        let n = self.check_square()?;
        let r = self.rank();
        let canonical_mat = Matrix::identity_rect(self.ring().clone(), r, n).resize_rows(n)?;
        let (p, canonical) = match self.side {
            Side::Left => (canonical_left_p(&self.rep)?, echelon::lrref(&canonical_mat)),
            Side::Right => {
                // Iᵗ is a left ideal over D^op and (P⁻¹IP)ᵗ = Pᵗ·Iᵗ·(Pᵗ)⁻¹
                let dual = echelon::lrref(&self.rep.mat().op_transpose());
                let p_dual = canonical_left_p(&dual)?;
                (
                    echelon::inverse(&Matrix::from_op_transpose(&p_dual))?,
                    echelon::rcref(&canonical_mat),
                )
            }
        };
        Ok((p, FullSubmoduleRep::from_rep(canonical, self.ambient)?))
    }
}

/// Left ideal product of `M_n·R1` and `M_n·R2`. It is generated by the
/// matrices `R1·E_kl·R2`: a product `X·R1·Y·R2` splits along the entries of
/// `Y`, and each entry's scalar moves to the left of `R1` as a diagonal
/// factor, which stays valid over a noncommutative `D`.
fn star_left<R: DivisionRing>(r1: &Matrix<R>, r2: &Matrix<R>) -> Result<EchelonMatrix<R>> {
    let n = r1.rows();
    let ring = r1.ring().clone();
    let mut gens = Vec::with_capacity(n * n);
    for k in 0..n {
        for l in 0..n {
            let e = Matrix::standard(ring.clone(), n, n, k, l)?;
            gens.push(r1.mul(&e)?.mul(r2)?);
        }
    }
    let refs: Vec<&Matrix<R>> = gens.iter().collect();
    echelon::lrref(&Matrix::vstack(ring, n, &refs)?).resize(n)
}

/// `Q` holds the nonzero rows of `R` followed by the unit vectors of the
/// non-pivot columns. It is invertible with `R = E_r·Q`, so `P = Q⁻¹`
/// satisfies `R·P = E_r`.
fn canonical_left_p<R: DivisionRing>(rep: &EchelonMatrix<R>) -> Result<Matrix<R>> {
    let n = rep.mat().cols();
    let r = rep.rank();
    let ring = rep.mat().ring().clone();
    let mut q = rep.mat().clone();
    let non_pivots = (0..n).filter(|c| !rep.pivots().contains(c));
    for (t, c) in non_pivots.enumerate() {
        for j in 0..n {
            q.set(r + t, j, ring.zero());
        }
        q.set(r + t, c, ring.one());
    }
    echelon::inverse(&q)
}

fn rep_dim(side: Side, (m, n): (usize, usize)) -> usize {
    match side {
        Side::Left => n,
        Side::Right => m,
    }
}

/// `φ` of the submodule generated by `gens`: the rows (left) or columns
/// (right) of all generators, reduced and padded to a square representative.
pub fn phi_from_generators<R: DivisionRing>(
    ring: R,
    gens: &[Matrix<R>],
    ambient: (usize, usize),
    side: Side,
) -> Result<FullSubmoduleRep<R>> {
    let (m, n) = ambient;
    if let Some(g) = gens.iter().find(|g| g.shape() != ambient) {
        return Err(Error::ShapeMismatch(format!(
            "generator {:?} in a {m}x{n} ambient",
            g.shape()
        )));
    }
    let refs: Vec<&Matrix<R>> = gens.iter().collect();
    let rep = match side {
        Side::Left => {
            let stacked = Matrix::vstack(ring, n, &refs)?;
            echelon::lrref(&stacked.resize_rows(stacked.rows().max(n))?).resize(n)?
        }
        Side::Right => {
            let stacked = Matrix::hstack(ring, m, &refs)?;
            echelon::rcref(&stacked.resize_cols(stacked.cols().max(m))?).resize(m)?
        }
    };
    FullSubmoduleRep::from_rep(rep, ambient)
}

/// Every element of `R_n` over a finite ring, by structural filtering of all
/// `n×n` matrices.
pub fn enumerate_reps<R: DivisionRing>(ring: &R, n: usize, side: Side) -> Result<Vec<EchelonMatrix<R>>> {
    let elems = ring.enumerate_elements()?;
    let mut out = Vec::new();
    let total = elems.len().pow((n * n) as u32);
    for code in 0..total {
        let mut c = code;
        let entries: Vec<R::Elem> = (0..n * n)
            .map(|_| {
                let e = elems[c % elems.len()].clone();
                c /= elems.len();
                e
            })
            .collect();
        let mat = Matrix::new(ring.clone(), n, n, entries)?;
        let ok = match side {
            Side::Left => echelon::is_left_row_reduced(&mat),
            Side::Right => echelon::is_right_column_reduced(&mat),
        };
        if ok {
            out.push(EchelonMatrix::try_from_matrix(mat, side)?);
        }
    }
    Ok(out)
}

/// The left identities of `(R_n, ∨, ∗)` found by exhaustive check over a
/// finite ring.
pub fn left_identities<R: DivisionRing>(ring: &R, n: usize) -> Result<Vec<FullSubmoduleRep<R>>> {
    let all: Vec<FullSubmoduleRep<R>> = enumerate_reps(ring, n, Side::Left)?
        .into_iter()
        .map(|r| FullSubmoduleRep::from_rep(r, (n, n)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for e in &all {
        let mut ok = true;
        for r in &all {
            if &e.star(r)? != r {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(e.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{PrimeField, Quaternions, Rationals};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn f2mat(rows: &[&[u64]]) -> Matrix<PrimeField> {
        Matrix::from_rows(f2(), rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn left(rows: &[&[u64]], ambient: (usize, usize)) -> FullSubmoduleRep<PrimeField> {
        FullSubmoduleRep::from_rep(echelon::lrref(&f2mat(rows)), ambient).unwrap()
    }

    /// Elements of `M_{m×n}(GF(2))`, enumerated independently.
    fn all_f2(m: usize, n: usize) -> Vec<Matrix<PrimeField>> {
        (0..1u64 << (m * n))
            .map(|code| {
                let entries = (0..m * n).map(|b| (code >> b) & 1).collect();
                Matrix::new(f2(), m, n, entries).unwrap()
            })
            .collect()
    }

    #[test]
    fn phi_examples() {
        let s = phi_from_generators(f2(), &[f2mat(&[&[1, 1], &[0, 0]])], (2, 2), Side::Left).unwrap();
        assert_eq!(s.rep().mat(), &f2mat(&[&[1, 1], &[0, 0]]));

        let s = phi_from_generators(
            Rationals,
            &[Matrix::identity_rect(Rationals, 3, 2)],
            (3, 2),
            Side::Left,
        )
        .unwrap();
        assert_eq!(s.rep().mat(), &Matrix::identity(Rationals, 2));

        let s = phi_from_generators(f2(), &[], (2, 3), Side::Left).unwrap();
        assert!(s.rep().is_zero());
        assert_eq!(s.rep().mat().shape(), (3, 3));

        assert!(phi_from_generators(f2(), &[f2mat(&[&[1]])], (2, 2), Side::Left).is_err());
    }

    #[test]
    fn containment_examples() {
        let s = left(&[&[1, 1], &[0, 0]], (2, 2));
        assert!(s.contains(&f2mat(&[&[1, 1], &[1, 1]])).unwrap());
        assert!(!s.contains(&f2mat(&[&[1, 0], &[0, 0]])).unwrap());
        assert!(s.contains(&Matrix::zeros(f2(), 2, 2)).unwrap());
        assert!(s.contains(&Matrix::zeros(f2(), 1, 2)).is_err());
    }

    #[test]
    fn sum_and_intersection() {
        let a = left(&[&[1, 0], &[0, 0]], (2, 2));
        let b = left(&[&[0, 1], &[0, 0]], (2, 2));
        assert_eq!(a.sum(&b).unwrap(), FullSubmoduleRep::full(f2(), (2, 2), Side::Left));
        assert_eq!(a.intersect(&a).unwrap(), a);
        assert_eq!(a.intersect(&b).unwrap(), FullSubmoduleRep::zero(f2(), (2, 2), Side::Left));
    }

    #[test]
    fn dimension() {
        let s = FullSubmoduleRep::full(Rationals, (3, 2), Side::Left);
        assert_eq!(s.dim(), 6);
        assert_eq!(FullSubmoduleRep::zero(Rationals, (3, 2), Side::Left).dim(), 0);
        let s = left(&[&[1, 1], &[0, 0]], (2, 2));
        assert_eq!(s.dim(), 2);
        let members = all_f2(2, 2).into_iter().filter(|a| s.contains(a).unwrap()).count();
        assert_eq!(members, 1 << s.dim());
        let r = FullSubmoduleRep::full(Rationals, (3, 2), Side::Right);
        assert_eq!(r.dim(), 6);
    }

    #[test]
    fn principality() {
        let s = left(&[&[1, 1], &[0, 0]], (3, 2));
        assert!(s.is_principal());
        assert_eq!(s.principal_generator().unwrap(), f2mat(&[&[1, 1], &[0, 0], &[0, 0]]));

        let full = FullSubmoduleRep::full(f2(), (1, 2), Side::Left);
        assert!(!full.is_principal());
        assert_eq!(full.principal_generator(), Err(Error::NotPrincipal));
        // no single 1×2 matrix has a 2-dimensional row space
        assert!(all_f2(1, 2).iter().all(|a| echelon::rank(a) < 2));

        let zero = FullSubmoduleRep::zero(f2(), (2, 3), Side::Left);
        assert!(zero.principal_generator().unwrap().is_zero());
    }

    #[test]
    fn principal_generator_generates() {
        // M_m·A recovers the submodule: φ({A}) = rep
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..30 {
            let g = Matrix::random(Quaternions, 2, 3, &mut rng).resize_rows(4).unwrap();
            let s = phi_from_generators(Quaternions, &[g], (4, 3), Side::Left).unwrap();
            let a = s.principal_generator().unwrap();
            assert_eq!(phi_from_generators(Quaternions, &[a], (4, 3), Side::Left).unwrap(), s);
        }
    }

    #[test]
    fn star_examples() {
        let a = left(&[&[1, 0], &[0, 0]], (2, 2));
        let b = left(&[&[0, 1], &[0, 0]], (2, 2));
        assert_eq!(a.star(&b).unwrap(), b);
        let zero = FullSubmoduleRep::zero(f2(), (2, 2), Side::Left);
        let full = FullSubmoduleRep::full(f2(), (2, 2), Side::Left);
        assert_eq!(zero.star(&a).unwrap(), zero);
        assert_eq!(a.star(&zero).unwrap(), zero);
        assert_eq!(full.star(&a).unwrap(), a);
        let rect = FullSubmoduleRep::full(f2(), (2, 3), Side::Left);
        assert!(rect.star(&rect).is_err());
    }

    #[test]
    fn star_matches_brute_force_product() {
        let all = all_f2(2, 2);
        let reps: Vec<_> = enumerate_reps(&f2(), 2, Side::Left)
            .unwrap()
            .into_iter()
            .map(|r| FullSubmoduleRep::from_rep(r, (2, 2)).unwrap())
            .collect();
        assert_eq!(reps.len(), 5);
        for a in &reps {
            for b in &reps {
                let ia: Vec<_> = all.iter().filter(|x| a.contains(x).unwrap()).collect();
                let ib: Vec<_> = all.iter().filter(|x| b.contains(x).unwrap()).collect();
                let products: Vec<_> = ia
                    .iter()
                    .flat_map(|x| ib.iter().map(move |y| x.mul(y).unwrap()))
                    .collect();
                let expected = phi_from_generators(f2(), &products, (2, 2), Side::Left).unwrap();
                assert_eq!(a.star(b).unwrap(), expected);
            }
        }
    }

    #[test]
    fn every_nonzero_rep_is_a_left_identity() {
        let ids = left_identities(&f2(), 2).unwrap();
        assert_eq!(ids.len(), 4);
        assert!(ids.iter().all(|e| e.rank() > 0));
    }

    #[test]
    fn right_side_star_and_principality() {
        let c1 = FullSubmoduleRep::from_rep(echelon::rcref(&f2mat(&[&[1, 0], &[0, 0]])), (2, 2)).unwrap();
        let c2 = FullSubmoduleRep::from_rep(echelon::rcref(&f2mat(&[&[0, 0], &[1, 0]])), (2, 2)).unwrap();
        // (C1·M_2)(C2·M_2) = C1·M_2 when C2 ≠ 0
        assert_eq!(c1.star(&c2).unwrap(), c1);
        let r = phi_from_generators(f2(), &[f2mat(&[&[1, 0, 1], &[0, 0, 0]])], (2, 3), Side::Right).unwrap();
        assert_eq!(r.rep().mat(), &f2mat(&[&[1, 0], &[0, 0]]));
        assert_eq!(r.dim(), 3);
        assert!(r.contains(&f2mat(&[&[1, 1, 0], &[0, 0, 0]])).unwrap());
        assert!(!r.contains(&f2mat(&[&[0, 0, 0], &[1, 0, 0]])).unwrap());
        assert_eq!(r.principal_generator().unwrap(), f2mat(&[&[1, 0, 0], &[0, 0, 0]]));
        let full = FullSubmoduleRep::full(f2(), (2, 1), Side::Right);
        assert!(!full.is_principal());
    }

    #[test]
    fn conjugation_examples() {
        let s = left(&[&[0, 1], &[0, 0]], (2, 2));
        let (p, c) = s.conjugate_to_canonical().unwrap();
        assert_eq!(p, f2mat(&[&[0, 1], &[1, 0]]));
        assert_eq!(c.rep().mat(), &f2mat(&[&[1, 0], &[0, 0]]));
        let full = FullSubmoduleRep::full(f2(), (3, 3), Side::Left);
        let (p, c) = full.conjugate_to_canonical().unwrap();
        assert_eq!(p, Matrix::identity(f2(), 3));
        assert_eq!(c, full);
        let zero = FullSubmoduleRep::zero(f2(), (3, 3), Side::Left);
        let (p, c) = zero.conjugate_to_canonical().unwrap();
        assert_eq!(p, Matrix::identity(f2(), 3));
        assert_eq!(c, zero);
    }

    #[test]
    fn conjugation_over_quaternions_both_sides() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for side in [Side::Left, Side::Right] {
            for _ in 0..15 {
                let g = Matrix::random(Quaternions, 1, 3, &mut rng).resize_rows(3).unwrap();
                let gens = match side {
                    Side::Left => vec![g],
                    Side::Right => {
                        let mut col = Matrix::zeros(Quaternions, 3, 3);
                        for i in 0..3 {
                            col.set(i, 0, g.get(0, i).clone());
                        }
                        vec![col]
                    }
                };
                let s = phi_from_generators(Quaternions, &gens, (3, 3), side).unwrap();
                let (p, c) = s.conjugate_to_canonical().unwrap();
                let p_inv = echelon::inverse(&p).unwrap();
                let conj: Vec<_> = gens
                    .iter()
                    .map(|g| p_inv.mul(g).unwrap().mul(&p).unwrap())
                    .collect();
                assert_eq!(phi_from_generators(Quaternions, &conj, (3, 3), side).unwrap(), c);
                assert_eq!(c.rank(), s.rank());
            }
        }
    }
}
