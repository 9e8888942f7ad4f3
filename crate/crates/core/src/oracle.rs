//! Brute-force ground truth over prime fields.
//!
//! Everything here works on flattened `u64` vectors with its own span
//! bookkeeping and shares no code with the echelon machinery. A module is
//! closed under the standard matrices `E_ij` of the acting algebra together
//! with `GF(p)`-linear combinations, which is closure under the algebra.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;

use crate::bimod::BimoduleDescriptor;
use crate::matrix::{BlockShape, Matrix};
use crate::nest::NestTuple;
use crate::ring::PrimeField;
use crate::submod_full::FullSubmoduleRep;
use crate::{Error, Result, Side};

pub const DEFAULT_BUDGET: u64 = 1 << 16;

/// The element budget, overridable through `NESTLAT_BUDGET`.
pub fn element_budget() -> u64 {
    std::env::var("NESTLAT_BUDGET")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_BUDGET)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosureKind {
    Left,
    Right,
    Bimodule,
}

impl std::str::FromStr for ClosureKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(ClosureKind::Left),
            "right" => Ok(ClosureKind::Right),
            "bimodule" => Ok(ClosureKind::Bimodule),
            other => Err(Error::Parse(format!("unknown closure kind {other:?}"))),
        }
    }
}

impl std::fmt::Display for ClosureKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ClosureKind::Left => "left",
            ClosureKind::Right => "right",
            ClosureKind::Bimodule => "bimodule",
        })
    }
}

impl From<Side> for ClosureKind {
    fn from(side: Side) -> Self {
        match side {
            Side::Left => ClosureKind::Left,
            Side::Right => ClosureKind::Right,
        }
    }
}

/// A reduced `GF(p)` basis of flattened vectors.
#[derive(Debug, Clone)]
struct Span {
    p: u64,
    rows: Vec<(usize, Vec<u64>)>,
}

impl Span {
    fn new(p: u64) -> Self {
        Span { p, rows: Vec::new() }
    }

    fn inv(&self, x: u64) -> u64 {
        let (p, mut base, mut e, mut acc) = (self.p, x % self.p, self.p - 2, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc
    }

    /// `v` minus its projection onto the span.
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        let p = self.p;
        for (piv, row) in &self.rows {
            let c = v[*piv];
            if c != 0 {
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + (p - c) * r) % p;
                }
            }
        }
        v
    }

    /// Adds `v`; returns whether the span grew.
    fn insert(&mut self, v: Vec<u64>) -> bool {
        let p = self.p;
        let mut v = self.reduce(v);
        let Some(piv) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let s = self.inv(v[piv]);
        for x in v.iter_mut() {
            *x = *x * s % p;
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[piv];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(&v) {
                    *x = (*x + (p - c) * y) % p;
                }
            }
        }
        self.rows.push((piv, v));
        self.rows.sort_by_key(|(piv, _)| *piv);
        true
    }

    fn vectors(&self) -> Vec<Vec<u64>> {
        self.rows.iter().map(|(_, v)| v.clone()).collect()
    }

    /// Every element of the span, as sorted base-`p` codes.
    fn element_codes(&self) -> Vec<u64> {
        let len = self.rows.first().map_or(0, |(_, v)| v.len());
        let mut elems = vec![vec![0u64; len]];
        for (_, row) in &self.rows {
            let mut next = Vec::with_capacity(elems.len() * self.p as usize);
            for e in &elems {
                for c in 0..self.p {
                    next.push(e.iter().zip(row).map(|(x, r)| (x + c * r) % self.p).collect());
                }
            }
            elems = next;
        }
        let mut codes: Vec<u64> = elems.iter().map(|e| encode(self.p, e)).collect();
        codes.sort_unstable();
        codes
    }
}

fn encode(p: u64, v: &[u64]) -> u64 {
    v.iter().rev().fold(0, |acc, &x| acc * p + x)
}

fn decode(p: u64, mut code: u64, len: usize) -> Vec<u64> {
    (0..len)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

/// An ambient `T_(M,N)` over `GF(p)` together with the acting algebras.
#[derive(Debug, Clone)]
pub struct OracleSpace {
    p: u64,
    shape: BlockShape,
    kind: ClosureKind,
    left_act: Vec<(usize, usize)>,
    right_act: Vec<(usize, usize)>,
    universe: Vec<u64>,
}

impl OracleSpace {
    pub fn new(field: &PrimeField, shape: &BlockShape, kind: ClosureKind) -> Result<Self> {
        Self::with_budget(field, shape, kind, element_budget())
    }

    pub fn with_budget(field: &PrimeField, shape: &BlockShape, kind: ClosureKind, budget: u64) -> Result<Self> {
        let p = field.characteristic();
        let (m, n) = (shape.rows(), shape.cols());
        let needed = (p as u128).checked_pow((m * n) as u32).unwrap_or(u128::MAX);
        if needed > budget as u128 {
            return Err(Error::BudgetExceeded { needed, budget });
        }
        let len = m * n;
        let allowed: Vec<usize> = (0..len)
            .filter(|&x| shape.row_block_of(x / n) <= shape.col_block_of(x % n))
            .collect();
        let total = p.pow(allowed.len() as u32);
        let universe = (0..total)
            .map(|c| {
                let digits = decode(p, c, allowed.len());
                let mut v = vec![0u64; len];
                for (&pos, d) in allowed.iter().zip(digits) {
                    v[pos] = d;
                }
                encode(p, &v)
            })
            .collect();
        let act = |size: usize, block_of: &dyn Fn(usize) -> usize| -> Vec<(usize, usize)> {
            (0..size)
                .flat_map(|i| (0..size).map(move |j| (i, j)))
                .filter(|&(i, j)| block_of(i) <= block_of(j))
                .collect()
        };
        let left_act = match kind {
            ClosureKind::Left | ClosureKind::Bimodule => act(m, &|i| shape.row_block_of(i)),
            ClosureKind::Right => Vec::new(),
        };
        let right_act = match kind {
            ClosureKind::Right | ClosureKind::Bimodule => act(n, &|j| shape.col_block_of(j)),
            ClosureKind::Left => Vec::new(),
        };
        Ok(OracleSpace { p, shape: shape.clone(), kind, left_act, right_act, universe })
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn field(&self) -> PrimeField {
        PrimeField::new(self.p).expect("characteristic of a prime field")
    }

    fn len(&self) -> usize {
        self.shape.rows() * self.shape.cols()
    }

    /// Every member of `T_(M,N)`, as matrices.
    pub fn universe(&self) -> Vec<Matrix<PrimeField>> {
        self.universe.iter().map(|&c| self.to_matrix(c)).collect()
    }

    pub fn to_matrix(&self, code: u64) -> Matrix<PrimeField> {
        let v = decode(self.p, code, self.len());
        Matrix::new(self.field(), self.shape.rows(), self.shape.cols(), v).expect("flattened shape")
    }

    fn flatten(&self, a: &Matrix<PrimeField>) -> Result<Vec<u64>> {
        if a.shape() != (self.shape.rows(), self.shape.cols()) || a.ring().characteristic() != self.p {
            return Err(Error::ShapeMismatch(format!("{:?} matrix for shape {}", a.shape(), self.shape)));
        }
        Ok(a.entries().to_vec())
    }

    /// `E_ij·v`: row `j` of `v` moved to row `i`.
    fn left_mul(&self, (i, j): (usize, usize), v: &[u64]) -> Vec<u64> {
        let n = self.shape.cols();
        let mut out = vec![0; v.len()];
        out[i * n..(i + 1) * n].copy_from_slice(&v[j * n..(j + 1) * n]);
        out
    }

    /// `v·E_ij`: column `i` of `v` moved to column `j`.
    fn right_mul(&self, (i, j): (usize, usize), v: &[u64]) -> Vec<u64> {
        let n = self.shape.cols();
        let mut out = vec![0; v.len()];
        for r in 0..self.shape.rows() {
            out[r * n + j] = v[r * n + i];
        }
        out
    }

    fn close(&self, mut span: Span) -> ExplicitModule {
        let mut queue = span.vectors();
        while let Some(v) = queue.pop() {
            let images = self
                .left_act
                .iter()
                .map(|&e| self.left_mul(e, &v))
                .chain(self.right_act.iter().map(|&e| self.right_mul(e, &v)));
            for w in images {
                if span.insert(w.clone()) {
                    queue.push(w);
                }
            }
        }
        self.module_from_span(span)
    }

    fn module_from_span(&self, span: Span) -> ExplicitModule {
        let elements = if span.rows.is_empty() { vec![0] } else { span.element_codes() };
        ExplicitModule { p: self.p, len: self.len(), kind: self.kind, shape: self.shape.clone(), basis: span.vectors(), elements }
    }

    /// The least submodule of the declared kind containing `gens`.
    pub fn closure(&self, gens: &[Matrix<PrimeField>]) -> Result<ExplicitModule> {
        let mut span = Span::new(self.p);
        for g in gens {
            let v = self.flatten(g)?;
            if !g.nest_member(&self.shape)? {
                return Err(Error::NotInNest);
            }
            span.insert(v);
        }
        Ok(self.close(span))
    }

    fn extend(&self, module: &ExplicitModule, code: u64) -> ExplicitModule {
        let mut span = Span::new(self.p);
        for b in &module.basis {
            span.insert(b.clone());
        }
        span.insert(decode(self.p, code, self.len()));
        self.close(span)
    }

    /// Every submodule of the declared kind, ordered by size and then by
    /// element codes.
    ///
    /// Breadth-first from `{0}`: each module found is extended by every
    /// outside element and closed again. Every submodule is the top of such
    /// a chain, so the search is exhaustive; modules are memoized on their
    /// element sets.
    pub fn enumerate_submodules(&self) -> Vec<ExplicitModule> {
        let zero = self.close(Span::new(self.p));
        let mut seen: HashSet<Vec<u64>> = HashSet::from([zero.elements.clone()]);
        let mut all = vec![zero.clone()];
        let mut frontier = vec![zero];
        while !frontier.is_empty() {
            let found: Vec<ExplicitModule> = frontier
                .par_iter()
                .flat_map_iter(|s| {
                    let members: HashSet<u64> = s.elements.iter().copied().collect();
                    self.universe
                        .iter()
                        .filter(|c| !members.contains(*c))
                        .map(|&c| self.extend(s, c))
                        .collect::<Vec<_>>()
                })
                .collect();
            let mut next = Vec::new();
            for m in found {
                if seen.insert(m.elements.clone()) {
                    next.push(m);
                }
            }
            next.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by(|a, b| a.order_key().cmp(&b.order_key()));
        all
    }

    /// Whether some single element of `module` generates it.
    pub fn is_principal(&self, module: &ExplicitModule) -> bool {
        module
            .elements
            .par_iter()
            .any(|&c| self.extend(&self.close(Span::new(self.p)), c).elements == module.elements)
    }
}

/// `enumerate_submodules` with the configured budget.
pub fn enumerate_submodules(field: &PrimeField, shape: &BlockShape, kind: ClosureKind) -> Result<Vec<ExplicitModule>> {
    Ok(OracleSpace::new(field, shape, kind)?.enumerate_submodules())
}

/// A submodule held as its full, deduplicated element set.
#[derive(Debug, Clone)]
pub struct ExplicitModule {
    p: u64,
    len: usize,
    kind: ClosureKind,
    shape: BlockShape,
    basis: Vec<Vec<u64>>,
    elements: Vec<u64>,
}

impl PartialEq for ExplicitModule {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.shape == other.shape && self.elements == other.elements
    }
}

impl Eq for ExplicitModule {}

impl ExplicitModule {
    fn order_key(&self) -> (usize, &[u64]) {
        (self.elements.len(), &self.elements)
    }

    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn shape(&self) -> &BlockShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// `GF(p)`-dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn element_codes(&self) -> &[u64] {
        &self.elements
    }

    pub fn elements(&self) -> Vec<Matrix<PrimeField>> {
        let field = PrimeField::new(self.p).expect("prime");
        self.elements
            .iter()
            .map(|&c| {
                Matrix::new(field, self.shape.rows(), self.shape.cols(), decode(self.p, c, self.len))
                    .expect("flattened shape")
            })
            .collect()
    }

    pub fn contains(&self, a: &Matrix<PrimeField>) -> bool {
        a.shape() == (self.shape.rows(), self.shape.cols())
            && self.elements.binary_search(&encode(self.p, a.entries())).is_ok()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        let theirs: HashSet<u64> = other.elements.iter().copied().collect();
        self.elements.iter().all(|c| theirs.contains(c))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.p != other.p || self.shape != other.shape {
            return Err(Error::ShapeMismatch(format!("modules over {} and {}", self.shape, other.shape)));
        }
        Ok(())
    }

    fn span_of(&self, vectors: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut span = Span::new(self.p);
        for v in vectors {
            span.insert(v);
        }
        let elements = if span.rows.is_empty() { vec![0] } else { span.element_codes() };
        ExplicitModule { basis: span.vectors(), elements, ..self.clone() }
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.span_of(self.basis.iter().chain(&other.basis).cloned()))
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let theirs: HashSet<u64> = other.elements.iter().copied().collect();
        let common = self.elements.iter().filter(|c| theirs.contains(c));
        Ok(self.span_of(common.map(|&c| decode(self.p, c, self.len)).collect::<Vec<_>>()))
    }

    /// The additive span of all products `a·b`. Products are bilinear, so the
    /// pairwise products of basis vectors already span it.
    pub fn span_product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let (m, n) = (self.shape.rows(), self.shape.cols());
        if m != n {
            return Err(Error::ShapeMismatch(format!("products need a square ambient, got {m}x{n}")));
        }
        let p = self.p;
        let mut products = Vec::new();
        for a in &self.basis {
            for b in &other.basis {
                let mut c = vec![0u64; n * n];
                for i in 0..n {
                    for k in 0..n {
                        let x = a[i * n + k];
                        if x != 0 {
                            for j in 0..n {
                                c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % p;
                            }
                        }
                    }
                }
                products.push(c);
            }
        }
        Ok(self.span_of(products))
    }
}

/// `span_product` as a free function.
pub fn span_product(j1: &ExplicitModule, j2: &ExplicitModule) -> Result<ExplicitModule> {
    j1.span_product(j2)
}

/// A canonical representation whose lattice is checked against the oracle.
pub trait CanonicalRep: Clone {
    fn member(&self, a: &Matrix<PrimeField>) -> Result<bool>;
    fn join(&self, other: &Self) -> Result<Self>;
    fn meet(&self, other: &Self) -> Result<Self>;
    fn leq(&self, other: &Self) -> Result<bool>;
}

impl CanonicalRep for FullSubmoduleRep<PrimeField> {
    fn member(&self, a: &Matrix<PrimeField>) -> Result<bool> {
        self.contains(a)
    }
    fn join(&self, other: &Self) -> Result<Self> {
        self.sum(other)
    }
    fn meet(&self, other: &Self) -> Result<Self> {
        self.intersect(other)
    }
    fn leq(&self, other: &Self) -> Result<bool> {
        FullSubmoduleRep::leq(self, other)
    }
}

impl CanonicalRep for NestTuple<PrimeField> {
    fn member(&self, a: &Matrix<PrimeField>) -> Result<bool> {
        self.contains(a)
    }
    fn join(&self, other: &Self) -> Result<Self> {
        self.sum(other)
    }
    fn meet(&self, other: &Self) -> Result<Self> {
        self.intersect(other)
    }
    fn leq(&self, other: &Self) -> Result<bool> {
        NestTuple::leq(self, other)
    }
}

impl CanonicalRep for BimoduleDescriptor {
    fn member(&self, a: &Matrix<PrimeField>) -> Result<bool> {
        self.contains(a)
    }
    fn join(&self, other: &Self) -> Result<Self> {
        let len = self.i().max(other.i());
        let js = (0..len)
            .map(|k| match (self.js().get(k), other.js().get(k)) {
                (Some(&a), Some(&b)) => a.min(b),
                (Some(&a), None) | (None, Some(&a)) => a,
                (None, None) => unreachable!(),
            })
            .collect();
        BimoduleDescriptor::new(self.shape().clone(), js)
    }
    fn meet(&self, other: &Self) -> Result<Self> {
        let js = self.js().iter().zip(other.js()).map(|(&a, &b)| a.max(b)).collect();
        BimoduleDescriptor::new(self.shape().clone(), js)
    }
    fn leq(&self, other: &Self) -> Result<bool> {
        Ok(self.i() <= other.i() && self.js().iter().zip(other.js()).all(|(a, b)| a >= b))
    }
}

/// Outcome of [`compare_lattices`]; mismatches are content, not errors.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct LatticeReport {
    pub explicit_count: usize,
    pub canonical_count: usize,
    pub pairs_checked: usize,
    pub mismatches: Vec<String>,
}

impl LatticeReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Matches canonical representatives with oracle modules by membership and
/// checks the bijection, the order and both lattice operations.
pub fn compare_lattices<C: CanonicalRep>(space: &OracleSpace, explicit: &[ExplicitModule], canonical: &[C]) -> LatticeReport {
    let mut report = LatticeReport {
        explicit_count: explicit.len(),
        canonical_count: canonical.len(),
        ..LatticeReport::default()
    };
    let by_elements: HashMap<&[u64], usize> =
        explicit.iter().enumerate().map(|(i, m)| (m.element_codes(), i)).collect();
    let universe: Vec<(u64, Matrix<PrimeField>)> =
        space.universe.iter().map(|&c| (c, space.to_matrix(c))).collect();
    let locate = |c: &C| -> Result<Option<usize>> {
        let mut codes = Vec::new();
        for (code, a) in &universe {
            if c.member(a)? {
                codes.push(*code);
            }
        }
        codes.sort_unstable();
        Ok(by_elements.get(codes.as_slice()).copied())
    };
    let mut image = Vec::with_capacity(canonical.len());
    for (ci, c) in canonical.iter().enumerate() {
        match locate(c) {
            Ok(Some(e)) => image.push(e),
            Ok(None) => {
                report.mismatches.push(format!("canonical #{ci} matches no oracle module"));
                return report;
            }
            Err(err) => {
                report.mismatches.push(format!("canonical #{ci}: {err}"));
                return report;
            }
        }
    }
    let distinct: HashSet<usize> = image.iter().copied().collect();
    if distinct.len() != canonical.len() {
        report.mismatches.push("two canonical representatives describe the same module".into());
    }
    if explicit.len() != canonical.len() {
        report
            .mismatches
            .push(format!("{} oracle modules but {} canonical representatives", explicit.len(), canonical.len()));
    }
    for (a, ca) in canonical.iter().enumerate() {
        for (b, cb) in canonical.iter().enumerate() {
            report.pairs_checked += 1;
            let (ea, eb) = (&explicit[image[a]], &explicit[image[b]]);
            match ca.leq(cb) {
                Ok(leq) if leq == ea.is_subset(eb) => {}
                Ok(_) => report.mismatches.push(format!("order differs on ({a}, {b})")),
                Err(err) => report.mismatches.push(format!("leq ({a}, {b}): {err}")),
            }
            let checks: [(&str, Result<C>, Result<ExplicitModule>); 2] =
                [("sum", ca.join(cb), ea.sum(eb)), ("intersection", ca.meet(cb), ea.intersect(eb))];
            for (name, canon, expl) in checks {
                match (canon, expl) {
                    (Ok(c), Ok(e)) => match locate(&c) {
                        Ok(Some(idx)) if explicit[idx] == e => {}
                        _ => report.mismatches.push(format!("{name} differs on ({a}, {b})")),
                    },
                    (Err(err), _) | (_, Err(err)) => {
                        report.mismatches.push(format!("{name} ({a}, {b}): {err}"))
                    }
                }
            }
        }
    }
    report
}

/// Every element of `R_n` (left) or `C_m` (right) as a submodule rep of the
/// full ambient.
pub fn canonical_full_reps(field: &PrimeField, ambient: (usize, usize), side: Side) -> Result<Vec<FullSubmoduleRep<PrimeField>>> {
    let dim = match side {
        Side::Left => ambient.1,
        Side::Right => ambient.0,
    };
    crate::submod_full::enumerate_reps(field, dim, side)?
        .into_iter()
        .map(|r| FullSubmoduleRep::from_rep(r, ambient))
        .collect()
}

/// Covering pairs `(lower, upper)` of the inclusion order.
pub fn hasse_edges(modules: &[ExplicitModule]) -> Vec<(usize, usize)> {
    let n = modules.len();
    let below: Vec<Vec<bool>> = (0..n)
        .map(|a| (0..n).map(|b| a != b && modules[a].is_subset(&modules[b])).collect())
        .collect();
    let mut edges = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if below[a][b] && !(0..n).any(|c| below[a][c] && below[c][b]) {
                edges.push((a, b));
            }
        }
    }
    edges
}

/// Hasse diagram as a DOT digraph with the given node labels.
pub fn hasse_dot(modules: &[ExplicitModule], labels: &[String]) -> String {
    let mut out = String::from("digraph hasse {\n");
    for (i, l) in labels.iter().enumerate().take(modules.len()) {
        let _ = writeln!(out, "  n{i} [label=\"{l}\"];");
    }
    for (a, b) in hasse_edges(modules) {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    out.push_str("}\n");
    out
}
