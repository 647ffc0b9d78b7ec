//! Finite reflection groups acting faithfully on their roots.
//!
//! A group element is stored as the permutation it induces on the roots.
//! Reflections are identified by the index of their positive root, so the
//! reflection set `T` of a group is always `0..num_reflections()`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, ExactMatrix, QSpan};
use crate::rootsys::{build_dihedral, build_root_system, CoxeterType, DihedralElement, DihedralModel, RootSystem};
use crate::scalar::ExactScalar;

/// Largest group the crate will enumerate element by element.
pub const ENUMERATION_BOUND: u128 = 100_000;

/// Group element as the image of every root index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    tag: u32,
    perm: Box<[u16]>,
}

impl GroupElement {
    pub fn image(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement({:?})", self.perm)
    }
}

#[derive(Clone, Debug)]
pub enum Realization {
    Roots(RootSystem),
    Dihedral(DihedralModel),
}

/// A finite Coxeter group together with its reflections, realized on roots.
#[derive(Clone, Debug)]
pub struct CoxeterGroup {
    realization: Realization,
    tag: u32,
    rank: usize,
    n_pos: usize,
    simple: Vec<usize>,
    reflections: Vec<GroupElement>,
    conj: Vec<u8>,
    qcoords: Vec<Vec<i64>>,
    golden: bool,
    qlookup: HashMap<Vec<i64>, usize>,
}

/// Span of roots or of a moved space, with the exact linear algebra of the
/// realization behind it.
#[derive(Clone, Debug)]
pub enum RootSpan {
    Linear { span: QSpan, golden: bool },
    /// Dihedral groups live in a plane: a span is either `0`, the line of a
    /// single root, or everything.
    Planar { line: Option<usize>, full: bool, m: usize },
}

impl RootSpan {
    pub fn dim(&self) -> usize {
        match self {
            RootSpan::Linear { span, golden } => span.dim() / if *golden { 2 } else { 1 },
            RootSpan::Planar { full: true, .. } => 2,
            RootSpan::Planar { line: Some(_), .. } => 1,
            RootSpan::Planar { .. } => 0,
        }
    }
}

fn phi_times(v: &[i64]) -> Vec<i64> {
    // (a + bφ)·φ = b + (a + b)φ
    v.chunks(2).flat_map(|c| [c[1], c[0] + c[1]]).collect()
}

impl CoxeterGroup {
    pub fn new(ty: CoxeterType, rank: usize) -> Result<Self> {
        match ty {
            CoxeterType::I2 => Ok(Self::from_dihedral(build_dihedral(rank)?)),
            _ => Ok(Self::from_root_system(build_root_system(ty, rank)?)),
        }
    }

    pub fn from_root_system(rs: RootSystem) -> Self {
        let n_pos = rs.num_positive();
        let tag = ((rs.coxeter_type() as u32) << 16) | rs.rank() as u32;
        let reflections: Vec<GroupElement> = (0..n_pos)
            .map(|a| GroupElement {
                tag,
                perm: (0..rs.num_roots()).map(|b| rs.reflect_root(a, b) as u16).collect(),
            })
            .collect();
        let golden = !rs.is_crystallographic();
        let qcoords: Vec<Vec<i64>> = (0..rs.num_roots())
            .map(|i| {
                rs.coefficients(i)
                    .iter()
                    .flat_map(|c| {
                        let (a, b) = c.to_golden_integers().expect("root coefficients lie in Z[φ]");
                        if golden {
                            vec![a, b]
                        } else {
                            debug_assert_eq!(b, 0);
                            vec![a]
                        }
                    })
                    .collect()
            })
            .collect();
        let simple = rs.simple_root_ids().to_vec();
        let rank = rs.rank();
        Self::assemble(Realization::Roots(rs), tag, rank, n_pos, simple, reflections, qcoords, golden)
    }

    pub fn from_dihedral(d: DihedralModel) -> Self {
        let m = d.m();
        let tag = ((CoxeterType::I2 as u32) << 16) | m as u32;
        let reflections = (0..m)
            .map(|i| GroupElement { tag, perm: d.root_permutation(DihedralElement::Reflection(i)).into() })
            .collect();
        let simple = d.simple_root_ids().to_vec();
        Self::assemble(Realization::Dihedral(d), tag, 2, m, simple, reflections, Vec::new(), false)
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        realization: Realization,
        tag: u32,
        rank: usize,
        n_pos: usize,
        simple: Vec<usize>,
        reflections: Vec<GroupElement>,
        qcoords: Vec<Vec<i64>>,
        golden: bool,
    ) -> Self {
        assert!(n_pos <= 127, "reflection ids must fit in 7 bits");
        let mut conj = vec![0u8; n_pos * n_pos];
        for a in 0..n_pos {
            for b in 0..n_pos {
                let img = reflections[a].image(b);
                conj[a * n_pos + b] = (if img >= n_pos { img - n_pos } else { img }) as u8;
            }
        }
        let qlookup = qcoords.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        Self { realization, tag, rank, n_pos, simple, reflections, conj, qcoords, golden, qlookup }
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn root_system(&self) -> Option<&RootSystem> {
        match &self.realization {
            Realization::Roots(rs) => Some(rs),
            Realization::Dihedral(_) => None,
        }
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        match &self.realization {
            Realization::Roots(rs) => rs.coxeter_type(),
            Realization::Dihedral(_) => CoxeterType::I2,
        }
    }

    /// Rank, or `m` for `I₂(m)`; the parameter the group was built from.
    pub fn type_parameter(&self) -> usize {
        match &self.realization {
            Realization::Roots(rs) => rs.rank(),
            Realization::Dihedral(d) => d.m(),
        }
    }

    pub fn label(&self) -> String {
        match &self.realization {
            Realization::Roots(rs) => format!("{}{}", rs.coxeter_type(), rs.rank()),
            Realization::Dihedral(d) => format!("I2({})", d.m()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> u128 {
        self.coxeter_type().group_order(self.type_parameter()).expect("valid type")
    }

    pub fn num_roots(&self) -> usize {
        2 * self.n_pos
    }

    pub fn num_reflections(&self) -> usize {
        self.n_pos
    }

    pub fn simple_root_ids(&self) -> &[usize] {
        &self.simple
    }

    pub fn is_simply_laced(&self) -> bool {
        match &self.realization {
            Realization::Roots(rs) => rs.is_simply_laced(),
            Realization::Dihedral(d) => d.m() == 3,
        }
    }

    pub fn is_crystallographic(&self) -> bool {
        match &self.realization {
            Realization::Roots(rs) => rs.is_crystallographic(),
            Realization::Dihedral(d) => matches!(d.m(), 3 | 4 | 6),
        }
    }

    /// Exact coordinates of a root in the simple-root basis: integers for
    /// crystallographic types, `(a, b)` pairs standing for `a + bφ` otherwise.
    /// Empty for the dihedral model.
    pub fn root_coordinates(&self, root: usize) -> &[i64] {
        self.qcoords.get(root).map_or(&[], Vec::as_slice)
    }

    pub fn negate_root(&self, root: usize) -> usize {
        if root < self.n_pos {
            root + self.n_pos
        } else {
            root - self.n_pos
        }
    }

    /// Positive representative of `±root`.
    pub fn positive_root(&self, root: usize) -> usize {
        if root < self.n_pos {
            root
        } else {
            root - self.n_pos
        }
    }

    pub fn simple_reflections(&self) -> Vec<usize> {
        self.simple.clone()
    }

    pub fn reflection(&self, t: usize) -> &GroupElement {
        &self.reflections[t]
    }

    /// Reflection id of `t_a t_b t_a`, the reflection along `t_a(β_b)`.
    pub fn conjugate_reflection(&self, a: usize, b: usize) -> usize {
        self.conj[a * self.n_pos + b] as usize
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement { tag: self.tag, perm: (0..self.num_roots() as u16).collect() }
    }

    fn check(&self, w: &GroupElement) -> Result<()> {
        if w.tag != self.tag || w.perm.len() != self.num_roots() {
            return Err(Error::GroupMismatch);
        }
        Ok(())
    }

    fn check_reflection(&self, t: usize) -> Result<()> {
        if t >= self.n_pos {
            return Err(Error::OutOfRange { index: t, limit: self.n_pos });
        }
        Ok(())
    }

    /// `a·b`, acting on roots by `b` first.
    pub fn compose(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement { tag: self.tag, perm: b.perm.iter().map(|&r| a.perm[r as usize]).collect() }
    }

    pub fn inverse(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    pub(crate) fn inv(&self, a: &GroupElement) -> GroupElement {
        let mut perm = vec![0u16; a.perm.len()];
        for (i, &j) in a.perm.iter().enumerate() {
            perm[j as usize] = i as u16;
        }
        GroupElement { tag: self.tag, perm: perm.into() }
    }

    /// `b·a·b⁻¹`.
    pub fn conjugate(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(&self.mul(b, a), &self.inv(b)))
    }

    /// Left multiplication by the reflection `t`.
    pub(crate) fn reflect_left(&self, t: usize, w: &GroupElement) -> GroupElement {
        self.mul(&self.reflections[t], w)
    }

    /// Product `t₁·t₂⋯t_k` of reflections given by positive-root ids.
    pub fn element_from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut acc = self.identity();
        for &t in word {
            self.check_reflection(t)?;
            acc = self.mul(&acc, &self.reflections[t]);
        }
        Ok(acc)
    }

    /// Images of the simple roots; determines the element.
    pub fn simple_images(&self, w: &GroupElement) -> Vec<usize> {
        self.simple.iter().map(|&s| w.image(s)).collect()
    }

    /// Inverse of [`simple_images`](Self::simple_images).
    pub fn element_from_simple_images(&self, images: &[usize]) -> Result<GroupElement> {
        if images.len() != self.simple.len() {
            return Err(Error::DimensionMismatch { expected: self.simple.len(), got: images.len() });
        }
        if let Some(&bad) = images.iter().find(|&&i| i >= self.num_roots()) {
            return Err(Error::OutOfRange { index: bad, limit: self.num_roots() });
        }
        let w = match &self.realization {
            Realization::Dihedral(d) => d
                .elements()
                .into_iter()
                .map(|x| GroupElement { tag: self.tag, perm: d.root_permutation(x).into() })
                .find(|g| self.simple_images(g) == images),
            Realization::Roots(_) => {
                let dim = self.qcoords[0].len();
                let mut perm = Vec::with_capacity(self.num_roots());
                for r in 0..self.num_roots() {
                    let mut v = vec![0i64; dim];
                    let stride = if self.golden { 2 } else { 1 };
                    for (i, &img) in images.iter().enumerate() {
                        let c = &self.qcoords[r][i * stride..(i + 1) * stride];
                        let target = &self.qcoords[img];
                        if self.golden {
                            // (a + bφ)·target
                            let ct = phi_times(target);
                            for k in 0..dim {
                                v[k] += c[0] * target[k] + c[1] * ct[k];
                            }
                        } else {
                            for k in 0..dim {
                                v[k] += c[0] * target[k];
                            }
                        }
                    }
                    match self.qlookup.get(&v) {
                        Some(&j) => perm.push(j as u16),
                        None => return Err(Error::Parse("simple-root images do not define a group element".into())),
                    }
                }
                let g = GroupElement { tag: self.tag, perm: perm.into() };
                self.preserves_form(&g).then_some(g)
            }
        };
        w.ok_or_else(|| Error::Parse("simple-root images do not define a group element".into()))
    }

    fn preserves_form(&self, w: &GroupElement) -> bool {
        let Realization::Roots(rs) = &self.realization else { return true };
        let mut seen = HashSet::new();
        w.perm.iter().all(|&j| seen.insert(j))
            && self.simple.iter().all(|&i| {
                self.simple.iter().all(|&j| {
                    dot(rs.root(i), rs.root(j)) == dot(rs.root(w.image(i)), rs.root(w.image(j)))
                })
            })
    }

    /// Linear map of `w` on the ambient space, identity on the orthogonal
    /// complement of the root span.
    pub fn matrix_of(&self, w: &GroupElement) -> Result<ExactMatrix> {
        self.check(w)?;
        let Realization::Roots(rs) = &self.realization else {
            return Err(Error::Unsupported("a root system with coordinates (not I2)".into()));
        };
        let simple: Vec<Vec<ExactScalar>> = self.simple.iter().map(|&s| rs.root(s).to_vec()).collect();
        let images: Vec<Vec<ExactScalar>> = self.simple.iter().map(|&s| rs.root(w.image(s)).to_vec()).collect();
        let a = ExactMatrix::from_columns(&simple);
        let b = ExactMatrix::from_columns(&images);
        let at = a.transpose();
        let gram_inv = at.mul(&a)?.inverse().expect("simple roots are independent");
        let proj_coeffs = gram_inv.mul(&at)?;
        let on_span = b.mul(&proj_coeffs)?;
        let projector = a.mul(&proj_coeffs)?;
        let complement = ExactMatrix::identity(rs.ambient_dim()).sub(&projector);
        let mut m = on_span;
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                m[(i, j)] = &m[(i, j)] + &complement[(i, j)];
            }
        }
        Ok(m)
    }

    pub fn determinant(&self, w: &GroupElement) -> Result<ExactScalar> {
        match &self.realization {
            Realization::Roots(_) => self.matrix_of(w)?.determinant(),
            Realization::Dihedral(_) => {
                self.check(w)?;
                // reflections reverse the cyclic order of the roots
                let orientation = (w.image(1) + self.num_roots() - w.image(0)) % self.num_roots();
                Ok(ExactScalar::from_int(if orientation == 1 { 1 } else { -1 }))
            }
        }
    }

    pub(crate) fn empty_span(&self) -> RootSpan {
        match &self.realization {
            Realization::Roots(_) => RootSpan::Linear { span: QSpan::new(self.qcoords[0].len()), golden: self.golden },
            Realization::Dihedral(d) => RootSpan::Planar { line: None, full: false, m: d.m() },
        }
    }

    fn span_insert(&self, span: &mut RootSpan, v: &[i64]) {
        if let RootSpan::Linear { span, golden } = span {
            span.insert(v);
            if *golden {
                span.insert(&phi_times(v));
            }
        }
    }

    /// Adds a root to a span.
    pub(crate) fn span_insert_root(&self, span: &mut RootSpan, root: usize) {
        match span {
            RootSpan::Linear { .. } => {
                let v = self.qcoords[root].clone();
                self.span_insert(span, &v);
            }
            RootSpan::Planar { line, full, .. } => {
                let r = self.positive_root(root);
                match *line {
                    _ if *full => {}
                    None => *line = Some(r),
                    Some(l) if l == r => {}
                    Some(_) => *full = true,
                }
            }
        }
    }

    pub fn span_contains_root(&self, span: &RootSpan, root: usize) -> bool {
        match span {
            RootSpan::Linear { span, .. } => span.contains(&self.qcoords[root]),
            RootSpan::Planar { line, full, .. } => *full || *line == Some(self.positive_root(root)),
        }
    }

    pub fn span_of_roots(&self, roots: impl IntoIterator<Item = usize>) -> RootSpan {
        let mut span = self.empty_span();
        for r in roots {
            self.span_insert_root(&mut span, r);
        }
        span
    }

    /// `Mov(w) = im(w − 1)`, spanned by `w(α) − α` over the simple roots.
    pub fn moved_span(&self, w: &GroupElement) -> RootSpan {
        match &self.realization {
            Realization::Roots(_) => {
                let mut span = self.empty_span();
                for &s in &self.simple {
                    let v: Vec<i64> =
                        self.qcoords[w.image(s)].iter().zip(&self.qcoords[s]).map(|(a, b)| a - b).collect();
                    self.span_insert(&mut span, &v);
                }
                span
            }
            Realization::Dihedral(d) => {
                let m = d.m();
                let (line, full) = if *w == self.identity() {
                    (None, false)
                } else if let Some(t) = self.as_reflection(w) {
                    (Some(t), false)
                } else {
                    (None, true)
                };
                RootSpan::Planar { line, full, m }
            }
        }
    }

    pub fn moved_space_dim(&self, w: &GroupElement) -> usize {
        self.moved_span(w).dim()
    }

    pub fn fixed_space_dim(&self, w: &GroupElement) -> usize {
        self.rank - self.moved_space_dim(w)
    }

    /// `ℓ_T(w) = dim Mov(w)`.
    pub fn reflection_length(&self, w: &GroupElement) -> usize {
        self.moved_space_dim(w)
    }

    /// `u ≤_T v  ⟺  ℓ_T(u) + ℓ_T(u⁻¹v) = ℓ_T(v)`.
    pub fn absolute_leq(&self, u: &GroupElement, v: &GroupElement) -> Result<bool> {
        self.check(u)?;
        self.check(v)?;
        let quotient = self.mul(&self.inv(u), v);
        Ok(self.reflection_length(u) + self.reflection_length(&quotient) == self.reflection_length(v))
    }

    /// Reflections below `w` in absolute order, read off as the roots lying in
    /// `Mov(w)`.
    pub fn reflections_below(&self, w: &GroupElement) -> Vec<usize> {
        let mov = self.moved_span(w);
        (0..self.n_pos).filter(|&t| self.span_contains_root(&mov, t)).collect()
    }

    /// The reflection id of `w`, if `w` is a reflection.
    pub fn as_reflection(&self, w: &GroupElement) -> Option<usize> {
        let t = (0..self.n_pos).find(|&r| w.image(r) == r + self.n_pos)?;
        (self.reflections[t] == *w).then_some(t)
    }

    /// All elements, breadth first from the identity over simple reflections.
    pub fn elements(&self) -> Result<Vec<GroupElement>> {
        let order = self.order();
        if order > ENUMERATION_BOUND {
            return Err(Error::TooLarge { order, bound: ENUMERATION_BOUND });
        }
        let id = self.identity();
        let mut seen: HashSet<GroupElement> = HashSet::with_capacity(order as usize);
        let mut out = vec![id.clone()];
        seen.insert(id);
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for &s in &self.simple {
                let next = self.mul(&w, &self.reflections[s]);
                if seen.insert(next.clone()) {
                    out.push(next);
                }
            }
        }
        debug_assert_eq!(out.len() as u128, order);
        Ok(out)
    }

    /// Product of `k` reflections drawn uniformly from `T`.
    pub fn random_product<R: Rng + ?Sized>(&self, k: usize, rng: &mut R) -> GroupElement {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(&acc, &self.reflections[rng.gen_range(0..self.n_pos)]);
        }
        acc
    }

    /// Breadth-first distances from the identity in the Cayley graph with
    /// respect to all reflections.
    pub fn reflection_distances(&self) -> Result<HashMap<GroupElement, usize>> {
        let order = self.order();
        if order > ENUMERATION_BOUND {
            return Err(Error::TooLarge { order, bound: ENUMERATION_BOUND });
        }
        let mut dist = HashMap::new();
        let mut queue = VecDeque::new();
        dist.insert(self.identity(), 0);
        queue.push_back(self.identity());
        while let Some(w) = queue.pop_front() {
            let d = dist[&w];
            for t in &self.reflections {
                let next = self.mul(&w, t);
                if !dist.contains_key(&next) {
                    dist.insert(next.clone(), d + 1);
                    queue.push_back(next);
                }
            }
        }
        Ok(dist)
    }

    fn signed_model(&self) -> Result<&RootSystem> {
        match &self.realization {
            Realization::Roots(rs) if matches!(rs.coxeter_type(), CoxeterType::B | CoxeterType::D) => Ok(rs),
            _ => Err(Error::Unsupported("a group of type B or D".into())),
        }
    }

    /// Signed permutation of `{±1, …, ±n}` induced on the coordinate vectors.
    pub fn to_signed_permutation(&self, w: &GroupElement) -> Result<SignedPermutation> {
        let rs = self.signed_model()?;
        self.check(w)?;
        let n = rs.rank();
        let unit = |i: usize, j: usize, s: i64| {
            let mut v = vec![ExactScalar::zero(); n];
            v[i] = ExactScalar::one();
            v[j] = ExactScalar::from_int(s);
            v
        };
        let images = (0..n)
            .map(|i| {
                let j = if i == 0 { 1 } else { 0 };
                let a = rs.find_root(&unit(i, j, -1)).expect("e_i - e_j is a root");
                let b = rs.find_root(&unit(i, j, 1)).expect("e_i + e_j is a root");
                let (va, vb) = (rs.root(w.image(a)), rs.root(w.image(b)));
                let k = (0..n).find(|&k| !(&va[k] + &vb[k]).is_zero()).expect("image of e_i");
                let sign = (&va[k] + &vb[k]).signum() as i32;
                sign * (k as i32 + 1)
            })
            .collect();
        Ok(SignedPermutation { images })
    }

    pub fn from_signed_permutation(&self, sp: &SignedPermutation) -> Result<GroupElement> {
        let rs = self.signed_model()?;
        let n = rs.rank();
        if sp.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: sp.len() });
        }
        if rs.coxeter_type() == CoxeterType::D && sp.negative_count() % 2 == 1 {
            return Err(Error::Unsupported("an even number of sign changes in type D".into()));
        }
        let perm = (0..rs.num_roots())
            .map(|r| {
                let v = rs.root(r);
                let mut img = vec![ExactScalar::zero(); n];
                for (i, x) in v.iter().enumerate() {
                    let target = sp.apply(i as i32 + 1);
                    let k = target.unsigned_abs() as usize - 1;
                    img[k] = if target > 0 { x.clone() } else { -x };
                }
                rs.find_root(&img).map(|j| j as u16).ok_or(Error::NotInSpan)
            })
            .collect::<Result<Box<[u16]>>>()?;
        Ok(GroupElement { tag: self.tag, perm })
    }
}

/// Bijection `w` of `{−n,…,−1,1,…,n}` with `w(−i) = −w(i)`, stored in
/// one-line notation as `w(1), …, w(n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(images: Vec<i32>) -> Result<Self> {
        let n = images.len() as i32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x == 0 || x.abs() > n || std::mem::replace(&mut seen[x.unsigned_abs() as usize - 1], true) {
                return Err(Error::Parse(format!("not a signed permutation: {images:?}")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as i32).collect() }
    }

    /// `(i, j)(−i, −j)` for signed letters with `i ≠ ±j`; `(i, −i)` when `j = −i`.
    pub fn transposition(n: usize, i: i32, j: i32) -> Self {
        let mut sp = Self::identity(n);
        let mut set = |x: i32, y: i32| {
            if x > 0 {
                sp.images[x as usize - 1] = y;
            } else {
                sp.images[(-x) as usize - 1] = -y;
            }
        };
        set(i, j);
        set(j, i);
        sp
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    pub fn apply(&self, i: i32) -> i32 {
        let x = self.images[i.unsigned_abs() as usize - 1];
        if i > 0 {
            x
        } else {
            -x
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            let v = i as i32 + 1;
            if x > 0 {
                images[x as usize - 1] = v;
            } else {
                images[(-x) as usize - 1] = -v;
            }
        }
        Self { images }
    }

    pub fn negative_count(&self) -> usize {
        self.images.iter().filter(|&&x| x < 0).count()
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn group(ty: CoxeterType, n: usize) -> CoxeterGroup {
        CoxeterGroup::new(ty, n).unwrap()
    }

    #[test]
    fn words_and_axioms() {
        let g = group(CoxeterType::A, 2);
        assert_eq!(g.element_from_word(&[]).unwrap(), g.identity());
        assert_eq!(g.element_from_word(&[2, 2]).unwrap(), g.identity());
        let c = g.element_from_word(&[0, 1]).unwrap();
        let c3 = g.mul(&g.mul(&c, &c), &c);
        assert_ne!(g.mul(&c, &c), g.identity());
        assert_eq!(c3, g.identity());
        assert_eq!(g.compose(&c, &g.inverse(&c).unwrap()).unwrap(), g.identity());
        // s2 s1 s2 is the reflection along α1 + α2
        let conj = g.conjugate(g.reflection(0), g.reflection(1)).unwrap();
        assert_eq!(g.as_reflection(&conj), Some(2));
        assert!(g.element_from_word(&[3]).is_err());
    }

    #[test]
    fn mixed_groups_rejected() {
        let a = group(CoxeterType::A, 2);
        let b = group(CoxeterType::B, 2);
        assert_eq!(a.compose(&a.identity(), &b.identity()), Err(Error::GroupMismatch));
    }

    #[test]
    fn matrices() {
        let g = group(CoxeterType::A, 2);
        assert_eq!(g.matrix_of(&g.identity()).unwrap(), ExactMatrix::identity(3));
        for t in 0..3 {
            assert_eq!(g.determinant(g.reflection(t)).unwrap(), ExactScalar::from_int(-1));
        }
        let c = g.element_from_word(&[0, 1]).unwrap();
        // rotation by 2π/3 on the plane plus the fixed line (1,1,1): trace 0
        assert_eq!(g.matrix_of(&c).unwrap().trace(), ExactScalar::zero());
        let m = g.matrix_of(&c).unwrap();
        let rs = g.root_system().unwrap();
        for r in 0..6 {
            assert_eq!(m.apply(rs.root(r)).unwrap(), rs.root(c.image(r)));
        }
    }

    #[test]
    fn lengths() {
        let g = group(CoxeterType::A, 3);
        assert_eq!(g.reflection_length(&g.identity()), 0);
        assert_eq!(g.reflection_length(g.reflection(4)), 1);
        assert_eq!(g.reflection_length(&g.element_from_word(&[0, 1, 2]).unwrap()), 3);
        let b4 = group(CoxeterType::B, 4);
        let w = b4.from_signed_permutation(&SignedPermutation::new(vec![-1, -2, -3, -4]).unwrap()).unwrap();
        assert_eq!(b4.moved_space_dim(&w), 4);
        assert_eq!(b4.fixed_space_dim(&w), 0);
        for t in 0..b4.num_reflections() {
            assert!(b4.absolute_leq(b4.reflection(t), &w).unwrap());
        }
    }

    #[test]
    fn dihedral_lengths() {
        let g = group(CoxeterType::I2, 6);
        assert_eq!(g.order(), 12);
        let els = g.elements().unwrap();
        assert_eq!(els.len(), 12);
        for w in &els {
            let expected = if *w == g.identity() {
                0
            } else if g.as_reflection(w).is_some() {
                1
            } else {
                2
            };
            assert_eq!(g.reflection_length(w), expected);
        }
    }

    #[test]
    fn signed_permutations() {
        let b = group(CoxeterType::B, 3);
        let rs = b.root_system().unwrap();
        // (1,-1) is the reflection along e1
        let e1 = rs.find_root(&[ExactScalar::one(), ExactScalar::zero(), ExactScalar::zero()]).unwrap();
        let sp = b.to_signed_permutation(b.reflection(e1)).unwrap();
        assert_eq!(sp, SignedPermutation::transposition(3, 1, -1));
        let d = group(CoxeterType::D, 4);
        let rs = d.root_system().unwrap();
        let v = |x: [i64; 4]| x.iter().map(|&c| ExactScalar::from_int(c)).collect::<Vec<_>>();
        let r = rs.find_root(&v([0, 1, 0, -1])).unwrap();
        assert_eq!(d.to_signed_permutation(d.reflection(r)).unwrap(), SignedPermutation::transposition(4, 2, 4));
        assert!(d.from_signed_permutation(&SignedPermutation::new(vec![-1, 2, 3, 4]).unwrap()).is_err());
        assert!(group(CoxeterType::A, 3).to_signed_permutation(&group(CoxeterType::A, 3).identity()).is_err());
    }

    #[test]
    fn simple_image_round_trip() {
        for (ty, n) in [(CoxeterType::B, 3), (CoxeterType::H, 3), (CoxeterType::I2, 5)] {
            let g = group(ty, n);
            for w in g.elements().unwrap() {
                let imgs = g.simple_images(&w);
                assert_eq!(g.element_from_simple_images(&imgs).unwrap(), w);
            }
        }
    }
}
