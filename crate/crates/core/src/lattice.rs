//! Root lattices: integer matrices with Smith and Hermite forms, root
//! subsystem closure, sublattice indices and connection indices.
//!
//! Lattice computations take place in simple-root coordinates, where every
//! root of a crystallographic system is an integer vector and the root
//! lattice `L(Φ)` is all of `Zⁿ`. Inner products come from the Cartan
//! matrix, which in the simply laced case is the Gram matrix normalized to
//! `(α|α) = 2` whatever scale the coordinates were built at.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rustc_hash::FxHashMap;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, GroupElement};
use crate::hurwitz::ReducedEnumerator;

/// Dense integer matrix, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows; all rows must have length `cols`.
    pub fn from_i64_rows(cols: usize, rows: &[&[i64]]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m[(i, j)] = x.into();
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, got: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let p = &self[(i, k)] * &rhs[(k, j)];
                    out[(i, j)] += p;
                }
            }
        }
        Ok(out)
    }

    /// Fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            if p != k {
                a.swap_rows(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * prev)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += k · row[src]`
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        for j in 0..self.cols {
            let d = k * &self[(src, j)];
            self[(dst, j)] += d;
        }
    }

    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        for i in 0..self.rows {
            let d = k * &self[(i, src)];
            self[(i, dst)] += d;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -&self[(r, j)];
            self[(r, j)] = v;
        }
    }

    /// Smith normal form `U·A·V = D`.
    ///
    /// Pivots on an entry of minimal absolute value in the remaining block,
    /// clears its row and column, and folds in any row whose entries the
    /// pivot does not divide, so the diagonal satisfies `d₁ | d₂ | …`.
    pub fn smith_normal_form(&self) -> SmithForm {
        let (m, n) = (self.rows, self.cols);
        let mut d = self.clone();
        let mut u = Self::identity(m);
        let mut v = Self::identity(n);
        let mut t = 0;
        while t < m.min(n) {
            let Some((pi, pj)) = min_abs_entry(&d, t) else { break };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..m {
                    let q = d[(i, t)].div_floor(&d[(t, t)]);
                    if !q.is_zero() {
                        d.add_row(i, t, &-&q);
                        u.add_row(i, t, &-&q);
                    }
                    dirty |= !d[(i, t)].is_zero();
                }
                for j in t + 1..n {
                    let q = d[(t, j)].div_floor(&d[(t, t)]);
                    if !q.is_zero() {
                        d.add_col(j, t, &-&q);
                        v.add_col(j, t, &-&q);
                    }
                    dirty |= !d[(t, j)].is_zero();
                }
                if !dirty {
                    // the pivot must divide the rest of the block
                    let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
                    match bad {
                        Some(i) => {
                            d.add_row(t, i, &BigInt::one());
                            u.add_row(t, i, &BigInt::one());
                        }
                        None => break,
                    }
                }
                // move a smaller remainder into the pivot position
                if let Some((pi, pj)) = min_abs_in_cross(&d, t) {
                    d.swap_rows(t, pi);
                    u.swap_rows(t, pi);
                    d.swap_cols(t, pj);
                    v.swap_cols(t, pj);
                }
            }
            if d[(t, t)].is_negative() {
                d.negate_row(t);
                u.negate_row(t);
            }
            t += 1;
        }
        let diagonal = (0..m.min(n)).map(|i| d[(i, i)].clone()).collect();
        let snf = SmithForm { diagonal, u, v };
        debug_assert!(snf.check(self), "Smith form identity failed");
        snf
    }

    /// Row-style Hermite normal form: the nonzero rows form an echelon basis
    /// of the row lattice, with positive pivots and entries above each pivot
    /// reduced modulo it. Equal lattices have equal forms.
    pub fn hermite_basis(&self) -> Vec<Vec<BigInt>> {
        let mut a = self.clone();
        let mut r = 0;
        for col in 0..a.cols {
            if r == a.rows {
                break;
            }
            loop {
                let pivot = (r..a.rows)
                    .filter(|&i| !a[(i, col)].is_zero())
                    .min_by(|&x, &y| a[(x, col)].abs().cmp(&a[(y, col)].abs()));
                let Some(p) = pivot else { break };
                a.swap_rows(r, p);
                let mut done = true;
                for i in r + 1..a.rows {
                    let q = a[(i, col)].div_floor(&a[(r, col)]);
                    if !q.is_zero() {
                        a.add_row(i, r, &-q);
                    }
                    done &= a[(i, col)].is_zero();
                }
                if done {
                    break;
                }
            }
            if r < a.rows && !a[(r, col)].is_zero() {
                if a[(r, col)].is_negative() {
                    a.negate_row(r);
                }
                for i in 0..r {
                    let q = a[(i, col)].div_floor(&a[(r, col)]);
                    if !q.is_zero() {
                        a.add_row(i, r, &-q);
                    }
                }
                r += 1;
            }
        }
        (0..r).map(|i| a.row(i).to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        self.hermite_basis().len()
    }
}

fn min_abs_entry(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows {
        for j in t..d.cols {
            if d[(i, j)].is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Smallest nonzero entry in row `t` or column `t` of the remaining block.
fn min_abs_in_cross(d: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let cells = (t..d.rows).map(|i| (i, t)).chain((t + 1..d.cols).map(|j| (t, j)));
    cells.filter(|&c| !d[c].is_zero()).min_by(|&a, &b| d[a].abs().cmp(&d[b].abs()))
}

impl std::ops::Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> =
            (0..self.rows).map(|i| self.row(i).iter().map(ToString::to_string).collect()).collect();
        write!(f, "{rows:?}")
    }
}

/// Result of [`IntegerMatrix::smith_normal_form`].
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Diagonal entries `d₁ | d₂ | …`, nonnegative, zeros last.
    pub diagonal: Vec<BigInt>,
    pub u: IntegerMatrix,
    pub v: IntegerMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Product of the nonzero invariant factors.
    pub fn nonzero_product(&self) -> BigInt {
        self.diagonal.iter().filter(|d| !d.is_zero()).product()
    }

    fn check(&self, a: &IntegerMatrix) -> bool {
        let Ok(ua) = self.u.mul(a) else { return false };
        let Ok(uav) = ua.mul(&self.v) else { return false };
        let diagonal_ok = (0..uav.rows).all(|i| {
            (0..uav.cols).all(|j| if i == j { uav[(i, j)] == self.diagonal[i] } else { uav[(i, j)].is_zero() })
        });
        let unimodular = |m: &IntegerMatrix| m.determinant().is_ok_and(|d| d.abs().is_one());
        let chain = self.diagonal.windows(2).all(|w| w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        diagonal_ok && unimodular(&self.u) && unimodular(&self.v) && chain
    }
}

/// A set of roots closed under the reflections in its members, stored as a
/// bit mask over positive-root ids (closure under negation is implicit).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RootSubsystem {
    mask: u128,
    rank: usize,
}

impl RootSubsystem {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn mask(&self) -> u128 {
        self.mask
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn contains(&self, t: usize) -> bool {
        t < 128 && self.mask >> t & 1 == 1
    }

    /// Number of roots, counting both signs.
    pub fn len(&self) -> usize {
        2 * self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    /// Positive-root ids, i.e. the reflections of the subsystem.
    pub fn positive_roots(&self) -> Vec<usize> {
        (0..128).filter(|&t| self.contains(t)).collect()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.mask & !other.mask == 0
    }

    pub fn is_full(&self, group: &CoxeterGroup) -> bool {
        self.mask.count_ones() as usize == group.num_reflections()
    }
}

impl fmt::Debug for RootSubsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootSubsystem(rank {}, {:?})", self.rank, self.positive_roots())
    }
}

impl Serialize for RootSubsystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            rank: usize,
            positive_roots: Vec<usize>,
        }
        Repr { rank: self.rank, positive_roots: self.positive_roots() }.serialize(s)
    }
}

/// Smallest root subsystem containing the given roots: the orbit of the
/// roots under the reflection subgroup they generate. Accepts root ids of
/// either sign; works for every realization.
pub fn subsystem_closure(group: &CoxeterGroup, roots: &[usize]) -> RootSubsystem {
    let mut mask = 0u128;
    let mut members: Vec<usize> = Vec::new();
    let mut queue: Vec<usize> = Vec::new();
    let add = |t: usize, mask: &mut u128, queue: &mut Vec<usize>| {
        if *mask >> t & 1 == 0 {
            *mask |= 1 << t;
            queue.push(t);
        }
    };
    for &r in roots {
        add(group.positive_root(r), &mut mask, &mut queue);
    }
    while let Some(a) = queue.pop() {
        // new member against everything present, in both roles
        for &b in &members {
            add(group.conjugate_reflection(a, b), &mut mask, &mut queue);
            add(group.conjugate_reflection(b, a), &mut mask, &mut queue);
        }
        members.push(a);
    }
    let rank = group.span_of_roots(members.iter().copied()).dim();
    RootSubsystem { mask, rank }
}

/// Sublattice index, or infinite when the ranks differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl Serialize for LatticeIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            LatticeIndex::Finite(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&n.to_string()),
            },
            LatticeIndex::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl fmt::Display for LatticeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeIndex::Finite(n) => write!(f, "{n}"),
            LatticeIndex::Infinite => f.write_str("infinite"),
        }
    }
}

fn require_crystallographic(group: &CoxeterGroup) -> Result<()> {
    if group.root_system().is_none() || !group.is_crystallographic() {
        return Err(Error::Unsupported("a crystallographic root system with coordinates".into()));
    }
    Ok(())
}

fn require_simply_laced(group: &CoxeterGroup) -> Result<()> {
    require_crystallographic(group)?;
    if !group.is_simply_laced() {
        return Err(Error::Unsupported("a simply laced root system (types A, D, E)".into()));
    }
    Ok(())
}

fn check_roots(group: &CoxeterGroup, roots: &[usize]) -> Result<()> {
    match roots.iter().find(|&&r| r >= group.num_roots()) {
        Some(&r) => Err(Error::OutOfRange { index: r, limit: group.num_roots() }),
        None => Ok(()),
    }
}

/// Rows are the simple-root coordinates of the given roots.
pub fn coordinate_matrix(group: &CoxeterGroup, roots: &[usize]) -> Result<IntegerMatrix> {
    require_crystallographic(group)?;
    check_roots(group, roots)?;
    let rows: Vec<&[i64]> = roots.iter().map(|&r| group.root_coordinates(r)).collect();
    Ok(IntegerMatrix::from_i64_rows(group.rank(), &rows))
}

/// Cartan matrix `2(α_i|α_j)/(α_i|α_i)`; symmetric with diagonal 2 in the
/// simply laced case.
pub fn cartan_matrix(group: &CoxeterGroup) -> Result<IntegerMatrix> {
    require_crystallographic(group)?;
    let c = group.root_system().expect("checked").cartan_like_matrix();
    let mut out = IntegerMatrix::zeros(c.rows(), c.cols());
    for i in 0..c.rows() {
        for j in 0..c.cols() {
            out[(i, j)] = c[(i, j)].to_integer().expect("crystallographic Cartan entries are integers");
        }
    }
    Ok(out)
}

/// Gram matrix `X·C·Xᵀ` of a list of roots, normalized to `(α|α) = 2`.
pub fn gram_matrix(group: &CoxeterGroup, roots: &[usize]) -> Result<IntegerMatrix> {
    require_simply_laced(group)?;
    let x = coordinate_matrix(group, roots)?;
    x.mul(&cartan_matrix(group)?)?.mul(&x.transpose())
}

/// Index of `span_Z(rows)` in its saturation `span_Q(rows) ∩ Zⁿ`.
fn saturation_index(m: &IntegerMatrix) -> (usize, BigInt) {
    let snf = m.smith_normal_form();
    (snf.rank(), snf.nonzero_product())
}

fn stack(a: &IntegerMatrix, b: &IntegerMatrix) -> IntegerMatrix {
    debug_assert_eq!(a.cols, b.cols);
    let mut data = a.data.clone();
    data.extend_from_slice(&b.data);
    IntegerMatrix { rows: a.rows + b.rows, cols: a.cols, data }
}

/// `|L(sup) : L(sub)|` through Smith forms of the coordinate matrices.
///
/// Both lattices have the same saturation when the ranks agree, so the index
/// is the ratio of their indices in it. Roots of `sub` outside the rational
/// span of `sup` are rejected, as are roots inside that span but outside
/// `L(sup)`.
pub fn lattice_index(group: &CoxeterGroup, sub: &[usize], sup: &[usize]) -> Result<LatticeIndex> {
    let xs = coordinate_matrix(group, sub)?;
    let xp = coordinate_matrix(group, sup)?;
    let (rank_p, d_p) = saturation_index(&xp);
    let (rank_both, d_both) = saturation_index(&stack(&xp, &xs));
    if rank_both != rank_p {
        return Err(Error::NotInSpan);
    }
    if d_both != d_p {
        return Err(Error::NotSublattice);
    }
    let (rank_s, d_s) = saturation_index(&xs);
    if rank_s < rank_p {
        return Ok(LatticeIndex::Infinite);
    }
    let (q, r) = d_s.div_rem(&d_p);
    debug_assert!(r.is_zero());
    Ok(LatticeIndex::Finite(q))
}

/// Connection index `i(R) = |L*(R) : L(R)|`.
///
/// The Gram matrix of `R` is `Y·M·Yᵀ` with `M` the Gram matrix of a basis of
/// `L(R)` and `Y` surjective onto `Z^rank`, so its nonzero invariant factors
/// multiply to `det M`.
pub fn connection_index(group: &CoxeterGroup, roots: &[usize]) -> Result<BigInt> {
    let g = gram_matrix(group, roots)?;
    Ok(g.smith_normal_form().nonzero_product())
}

/// [`connection_index`] by the direct route: a Hermite basis of `L(R)` and
/// the determinant of its Gram matrix.
pub fn connection_index_by_basis(group: &CoxeterGroup, roots: &[usize]) -> Result<BigInt> {
    require_simply_laced(group)?;
    let basis = coordinate_matrix(group, roots)?.hermite_basis();
    let b = IntegerMatrix { rows: basis.len(), cols: group.rank(), data: basis.into_iter().flatten().collect() };
    let m = b.mul(&cartan_matrix(group)?)?.mul(&b.transpose())?;
    Ok(m.determinant()?.abs())
}

/// Echelon basis of a lattice with exact membership tests.
struct HermiteLattice {
    basis: Vec<Vec<BigInt>>,
}

impl HermiteLattice {
    fn new(m: &IntegerMatrix) -> Self {
        Self { basis: m.hermite_basis() }
    }

    fn contains(&self, v: &[i64]) -> bool {
        let mut v: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
        for row in &self.basis {
            let p = row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero");
            if v[..p].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[p].div_rem(&row[p]);
            if !r.is_zero() {
                return false;
            }
            for (x, y) in v.iter_mut().zip(row) {
                *x -= &q * y;
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// All roots lying in `L(R)`.
pub fn roots_of_lattice(group: &CoxeterGroup, roots: &[usize]) -> Result<RootSubsystem> {
    require_simply_laced(group)?;
    let lattice = HermiteLattice::new(&coordinate_matrix(group, roots)?);
    let mut mask = 0u128;
    let mut members = Vec::new();
    for t in 0..group.num_reflections() {
        if lattice.contains(group.root_coordinates(t)) {
            mask |= 1 << t;
            members.push(t);
        }
    }
    let rank = group.span_of_roots(members).dim();
    Ok(RootSubsystem { mask, rank })
}

/// Whether `L(R) = L(Φ)`. Only meaningful for simply laced hosts, where it
/// is equivalent to the reflections of `R` generating `W` when `|R|` is the
/// rank.
pub fn generates_full_lattice(group: &CoxeterGroup, roots: &[usize]) -> Result<bool> {
    require_simply_laced(group)?;
    let (rank, d) = saturation_index(&coordinate_matrix(group, roots)?);
    Ok(rank == group.rank() && d.is_one())
}

/// `|det(X·C·Xᵀ)|` for linearly independent roots, by fraction-free
/// elimination in `i128`: the entries are at most 2 in absolute value and
/// every intermediate is a minor, far inside the range for rank ≤ 8.
fn independent_connection_index(group: &CoxeterGroup, cartan: &[Vec<i64>], roots: &[usize]) -> BigInt {
    let k = roots.len();
    let n = group.rank();
    let xs: Vec<&[i64]> = roots.iter().map(|&r| group.root_coordinates(r)).collect();
    let mut a = vec![vec![0i128; k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut s = 0i64;
            for p in 0..n {
                if xs[i][p] == 0 {
                    continue;
                }
                for q in 0..n {
                    s += xs[i][p] * cartan[p][q] * xs[j][q];
                }
            }
            a[i][j] = s as i128;
        }
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for c in 0..k {
        let Some(p) = (c..k).find(|&r| a[r][c] != 0) else { return BigInt::zero() };
        if p != c {
            a.swap(p, c);
            sign = -sign;
        }
        for i in c + 1..k {
            for j in c + 1..k {
                a[i][j] = (a[i][j] * a[c][c] - a[i][c] * a[c][j]) / prev;
            }
            a[i][c] = 0;
        }
        prev = a[c][c];
    }
    BigInt::from((sign * prev).abs())
}

/// Connection indices of the root sets of the first `limit` reduced
/// factorizations of `w` (all of them for `None`), and whether the limit cut
/// the scan short.
///
/// The roots of a reduced factorization are linearly independent, so the
/// index is the Gram determinant of the roots themselves.
pub fn connection_indices_up_to(
    group: &CoxeterGroup,
    w: &GroupElement,
    limit: Option<usize>,
) -> Result<(BTreeSet<BigInt>, bool)> {
    let c = cartan_matrix(group)?;
    require_simply_laced(group)?;
    let cartan: Vec<Vec<i64>> = (0..c.rows())
        .map(|i| c.row(i).iter().map(|x| x.to_i64().expect("small Cartan entries")).collect())
        .collect();
    let mut cache: FxHashMap<u128, BigInt> = FxHashMap::default();
    let mut out = BTreeSet::new();
    let mut seen = 0usize;
    let flow = ReducedEnumerator::new(group).for_each(w, |tuple| {
        if limit.is_some_and(|l| seen == l) {
            return ControlFlow::Break(());
        }
        seen += 1;
        let key = tuple.iter().fold(0u128, |m, &t| m | 1 << t);
        let value = cache.entry(key).or_insert_with(|| independent_connection_index(group, &cartan, tuple));
        out.insert(value.clone());
        ControlFlow::Continue(())
    });
    Ok((out, flow.is_break()))
}

/// Connection indices of the root sets of all reduced factorizations of `w`.
pub fn factorization_connection_indices(group: &CoxeterGroup, w: &GroupElement) -> Result<BTreeSet<BigInt>> {
    Ok(connection_indices_up_to(group, w, None)?.0)
}

/// Whether the connection index of the roots is the same for every reduced
/// factorization of `w`.
pub fn kluitmann_invariant_check(group: &CoxeterGroup, w: &GroupElement) -> Result<bool> {
    Ok(factorization_connection_indices(group, w)?.len() <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CoxeterType;
    use crate::scalar::ExactScalar;

    fn int(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_i64_rows(rows[0].len(), rows)
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| x.into()).collect()
    }

    #[test]
    fn smith_form_small_cases() {
        let snf = int(&[&[1, 1], &[1, -1]]).smith_normal_form();
        assert_eq!(snf.diagonal, big(&[1, 2]));
        let snf = int(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]).smith_normal_form();
        assert_eq!(snf.diagonal, big(&[2, 6, 12]));
        let snf = int(&[&[2, 0], &[0, 3]]).smith_normal_form();
        assert_eq!(snf.diagonal, big(&[1, 6]));
        let snf = int(&[&[0, 0], &[0, 0], &[4, 6]]).smith_normal_form();
        assert_eq!(snf.diagonal, big(&[2, 0]));
        assert_eq!(snf.rank(), 1);
    }

    #[test]
    fn determinant_and_hermite() {
        assert_eq!(int(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]).determinant().unwrap(), 4.into());
        assert_eq!(int(&[&[0, 1], &[1, 0]]).determinant().unwrap(), (-1).into());
        let h = int(&[&[2, 4], &[3, 5], &[1, 1]]).hermite_basis();
        assert_eq!(h, vec![big(&[1, 1]), big(&[0, 2])]);
    }

    fn g(ty: CoxeterType, n: usize) -> CoxeterGroup {
        CoxeterGroup::new(ty, n).unwrap()
    }

    fn find(group: &CoxeterGroup, v: &[i64]) -> usize {
        let v: Vec<ExactScalar> = v.iter().map(|&x| ExactScalar::from_int(x)).collect();
        group.root_system().unwrap().find_root(&v).unwrap()
    }

    #[test]
    fn closure_examples() {
        let a2 = g(CoxeterType::A, 2);
        let c = subsystem_closure(&a2, a2.simple_root_ids());
        assert_eq!((c.len(), c.rank()), (6, 2));
        let b2 = g(CoxeterType::B, 2);
        let e1 = find(&b2, &[1, 0]);
        let e2 = find(&b2, &[0, 1]);
        let c = subsystem_closure(&b2, &[e1, e2]);
        assert_eq!(c.positive_roots(), {
            let mut v = vec![e1, e2];
            v.sort();
            v
        });
        let d4 = g(CoxeterType::D, 4);
        let single = subsystem_closure(&d4, &[d4.negate_root(5)]);
        assert_eq!((single.len(), single.positive_roots()), (2, vec![5]));
        let i5 = g(CoxeterType::I2, 5);
        assert!(subsystem_closure(&i5, &[0, 1]).is_full(&i5));
    }

    #[test]
    fn lattice_index_examples() {
        let b2 = g(CoxeterType::B, 2);
        let (e1, e2) = (find(&b2, &[1, 0]), find(&b2, &[0, 1]));
        let (p, m) = (find(&b2, &[1, 1]), find(&b2, &[1, -1]));
        assert_eq!(lattice_index(&b2, &[m, p], &[e1, e2]).unwrap(), LatticeIndex::Finite(2.into()));
        assert_eq!(lattice_index(&b2, &[e1, e2], &[e1, e2]).unwrap(), LatticeIndex::Finite(1.into()));
        assert_eq!(lattice_index(&b2, &[m], &[e1, e2]).unwrap(), LatticeIndex::Infinite);
        assert_eq!(lattice_index(&b2, &[e1], &[m]), Err(Error::NotInSpan));
        assert_eq!(lattice_index(&b2, &[e1, e2], &[m, p]), Err(Error::NotSublattice));
    }

    #[test]
    fn connection_index_table() {
        for n in 1..=8 {
            let a = g(CoxeterType::A, n);
            assert_eq!(connection_index(&a, a.simple_root_ids()).unwrap(), (n as i64 + 1).into());
        }
        for (ty, n, want) in [(CoxeterType::D, 4, 4), (CoxeterType::D, 7, 4), (CoxeterType::E, 6, 3), (CoxeterType::E, 7, 2), (CoxeterType::E, 8, 1)] {
            let grp = g(ty, n);
            let all: Vec<usize> = (0..grp.num_reflections()).collect();
            assert_eq!(connection_index(&grp, grp.simple_root_ids()).unwrap(), want.into());
            assert_eq!(connection_index(&grp, &all).unwrap(), want.into());
            assert_eq!(connection_index_by_basis(&grp, &all).unwrap(), want.into());
        }
        let b3 = g(CoxeterType::B, 3);
        assert!(connection_index(&b3, b3.simple_root_ids()).is_err());
        assert!(generates_full_lattice(&b3, b3.simple_root_ids()).is_err());
        assert!(generates_full_lattice(&g(CoxeterType::H, 3), &[0, 1, 2]).is_err());
    }

    #[test]
    fn lattice_roots_and_generation() {
        let d4 = g(CoxeterType::D, 4);
        assert!(generates_full_lattice(&d4, d4.simple_root_ids()).unwrap());
        let all: Vec<usize> = (0..d4.num_reflections()).collect();
        assert!(roots_of_lattice(&d4, &all).unwrap().is_full(&d4));
        let r = roots_of_lattice(&d4, &[3]).unwrap();
        assert_eq!(r.positive_roots(), vec![3]);
        // A1⁴ inside D4: index 2 in L(D4)
        let a14 = [find(&d4, &[1, -1, 0, 0]), find(&d4, &[1, 1, 0, 0]), find(&d4, &[0, 0, 1, -1]), find(&d4, &[0, 0, 1, 1])];
        assert!(!generates_full_lattice(&d4, &a14).unwrap());
        assert_eq!(lattice_index(&d4, &a14, &all).unwrap(), LatticeIndex::Finite(2.into()));
        assert_eq!(connection_index(&d4, &a14).unwrap(), 16.into());
        assert_eq!(roots_of_lattice(&d4, &a14).unwrap(), subsystem_closure(&d4, &a14));
    }

    #[test]
    fn determinant_route_agrees_with_smith_route() {
        let d4 = g(CoxeterType::D, 4);
        let c = cartan_matrix(&d4).unwrap();
        let cartan: Vec<Vec<i64>> = (0..4).map(|i| c.row(i).iter().map(|x| x.to_i64().unwrap()).collect()).collect();
        for w in d4.elements().unwrap() {
            let tuple = ReducedEnumerator::new(&d4).first(&w);
            let fast = independent_connection_index(&d4, &cartan, &tuple);
            assert_eq!(fast, connection_index(&d4, &tuple).unwrap());
            assert_eq!(fast, connection_index_by_basis(&d4, &tuple).unwrap());
        }
    }

    #[test]
    fn kluitmann_on_coxeter_element() {
        let a3 = g(CoxeterType::A, 3);
        let c = a3.element_from_word(a3.simple_root_ids()).unwrap();
        assert_eq!(factorization_connection_indices(&a3, &c).unwrap().into_iter().collect::<Vec<_>>(), vec![4.into()]);
        assert!(kluitmann_invariant_check(&a3, &a3.identity()).unwrap());
    }
}
