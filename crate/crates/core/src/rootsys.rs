//! Finite root systems with exact coordinates, and a coordinate-free model of
//! the dihedral groups `I₂(m)`.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, ExactMatrix};
use crate::scalar::ExactScalar;

/// Cartan-Killing family of an irreducible finite Coxeter group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CoxeterType {
    A,
    B,
    D,
    E,
    F,
    H,
    I2,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::D => "D",
            Self::E => "E",
            Self::F => "F",
            Self::H => "H",
            Self::I2 => "I2",
        };
        f.write_str(s)
    }
}

impl FromStr for CoxeterType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Self::A,
            "B" => Self::B,
            "D" => Self::D,
            "E" => Self::E,
            "F" => Self::F,
            "H" => Self::H,
            "I2" | "I" => Self::I2,
            other => return Err(Error::Parse(format!("unknown Coxeter type {other:?}"))),
        })
    }
}

impl CoxeterType {
    /// Group order from the closed-form formulas. For `I2` the "rank"
    /// argument is the dihedral parameter `m`.
    pub fn group_order(self, rank: usize) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        Some(match (self, rank) {
            (Self::A, n) if n >= 1 => fact(n + 1),
            (Self::B, n) if n >= 2 => (1u128 << n) * fact(n),
            (Self::D, n) if n >= 4 => (1u128 << (n - 1)) * fact(n),
            (Self::E, 6) => 51_840,
            (Self::E, 7) => 2_903_040,
            (Self::E, 8) => 696_729_600,
            (Self::F, 4) => 1152,
            (Self::H, 3) => 120,
            (Self::H, 4) => 14_400,
            (Self::I2, m) if m >= 3 => 2 * m as u128,
            _ => return None,
        })
    }
}

/// A finite root system `Φ` in a Euclidean space with the standard dot product.
///
/// Positive roots occupy indices `0..n_pos`; the negative of positive root
/// `i` sits at `i + n_pos`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: CoxeterType,
    rank: usize,
    ambient_dim: usize,
    roots: Vec<Vec<ExactScalar>>,
    coefficients: Vec<Vec<ExactScalar>>,
    simple: Vec<usize>,
    negation: Vec<usize>,
    squared_lengths: Vec<ExactScalar>,
    crystallographic: bool,
    simply_laced: bool,
    lookup: HashMap<Vec<ExactScalar>, usize>,
}

fn int_vec(v: &[i64]) -> Vec<ExactScalar> {
    v.iter().map(|&x| ExactScalar::from_int(x)).collect()
}

fn unit_diff(dim: usize, i: usize, j: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v[j] += sign;
    v
}

fn e8_simple() -> Vec<Vec<i64>> {
    let mut out = vec![vec![1, -1, -1, -1, -1, -1, -1, 1], vec![2, 2, 0, 0, 0, 0, 0, 0]];
    for i in 0..6 {
        let mut v = vec![0; 8];
        v[i] = -2;
        v[i + 1] = 2;
        out.push(v);
    }
    out
}

fn simple_roots(ty: CoxeterType, rank: usize) -> Result<(usize, Vec<Vec<ExactScalar>>)> {
    let invalid = |reason: &str| Error::InvalidType {
        label: ty.to_string(),
        rank,
        reason: reason.to_string(),
    };
    let g = ExactScalar::golden;
    Ok(match ty {
        CoxeterType::A => {
            if rank < 1 {
                return Err(invalid("A_n needs n >= 1"));
            }
            let dim = rank + 1;
            (dim, (0..rank).map(|i| int_vec(&unit_diff(dim, i, i + 1, -1))).collect())
        }
        CoxeterType::B => {
            if rank < 2 {
                return Err(invalid("B_n needs n >= 2"));
            }
            let mut s: Vec<_> = (0..rank - 1).map(|i| int_vec(&unit_diff(rank, i, i + 1, -1))).collect();
            let mut last = vec![0; rank];
            last[rank - 1] = 1;
            s.push(int_vec(&last));
            (rank, s)
        }
        CoxeterType::D => {
            if rank < 4 {
                return Err(invalid("D_n needs n >= 4"));
            }
            let mut s: Vec<_> = (0..rank - 1).map(|i| int_vec(&unit_diff(rank, i, i + 1, -1))).collect();
            s.push(int_vec(&unit_diff(rank, rank - 2, rank - 1, 1)));
            (rank, s)
        }
        CoxeterType::E => {
            if !(6..=8).contains(&rank) {
                return Err(invalid("E_n needs 6 <= n <= 8"));
            }
            (8, e8_simple().into_iter().take(rank).map(|v| int_vec(&v)).collect())
        }
        CoxeterType::F => {
            if rank != 4 {
                return Err(invalid("F only exists in rank 4"));
            }
            let s = [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]];
            (4, s.iter().map(|v| int_vec(v)).collect())
        }
        CoxeterType::H => match rank {
            3 => (
                3,
                vec![
                    int_vec(&[2, 0, 0]),
                    vec![g(0, -1), g(1, 0), g(1, -1)],
                    int_vec(&[0, -2, 0]),
                ],
            ),
            4 => (
                4,
                vec![
                    int_vec(&[2, 0, 0, 0]),
                    vec![g(0, -1), g(-1, 1), g(0, 0), g(1, 0)],
                    int_vec(&[0, 0, 0, -2]),
                    vec![g(0, 0), g(0, -1), g(-1, 1), g(1, 0)],
                ],
            ),
            _ => return Err(invalid("H only exists in ranks 3 and 4")),
        },
        CoxeterType::I2 => return Err(invalid("use build_dihedral for I2(m)")),
    })
}

/// `v − (2(v|α)/(α|α)) α`.
fn reflect_vec(alpha: &[ExactScalar], alpha_sq: &ExactScalar, v: &[ExactScalar]) -> (ExactScalar, Vec<ExactScalar>) {
    let k = &(&ExactScalar::from_int(2) * &dot(v, alpha)) / alpha_sq;
    let image = v.iter().zip(alpha).map(|(x, a)| x - &(&k * a)).collect();
    (k, image)
}

/// Builds the root system of the given finite type.
pub fn build_root_system(ty: CoxeterType, rank: usize) -> Result<RootSystem> {
    let (ambient_dim, simple_vecs) = simple_roots(ty, rank)?;
    let simple_sq: Vec<ExactScalar> = simple_vecs.iter().map(|a| dot(a, a)).collect();

    // Orbit of the simple roots under the simple reflections, tracking
    // coefficients in the simple-root basis alongside the coordinates.
    let mut seen: HashMap<Vec<ExactScalar>, usize> = HashMap::new();
    let mut vecs: Vec<Vec<ExactScalar>> = Vec::new();
    let mut coeffs: Vec<Vec<ExactScalar>> = Vec::new();
    let mut queue = VecDeque::new();
    for (i, a) in simple_vecs.iter().enumerate() {
        let mut c = vec![ExactScalar::zero(); rank];
        c[i] = ExactScalar::one();
        seen.insert(a.clone(), vecs.len());
        queue.push_back(vecs.len());
        vecs.push(a.clone());
        coeffs.push(c);
    }
    while let Some(idx) = queue.pop_front() {
        for (i, a) in simple_vecs.iter().enumerate() {
            let (k, image) = reflect_vec(a, &simple_sq[i], &vecs[idx]);
            if seen.contains_key(&image) {
                continue;
            }
            let mut c = coeffs[idx].clone();
            c[i] = &c[i] - &k;
            seen.insert(image.clone(), vecs.len());
            queue.push_back(vecs.len());
            vecs.push(image);
            coeffs.push(c);
        }
    }

    let mut positive: Vec<usize> = (0..vecs.len())
        .filter(|&i| coeffs[i].iter().all(|c| c.signum() >= 0))
        .collect();
    let height = |i: usize| coeffs[i].iter().fold(ExactScalar::zero(), |acc, c| acc + c);
    positive.sort_by(|&x, &y| {
        height(x)
            .cmp(&height(y))
            .then_with(|| coeffs[y].cmp(&coeffs[x]))
    });
    let n_pos = positive.len();
    debug_assert_eq!(2 * n_pos, vecs.len());

    let mut roots = Vec::with_capacity(2 * n_pos);
    let mut coefficients = Vec::with_capacity(2 * n_pos);
    for &p in &positive {
        roots.push(vecs[p].clone());
        coefficients.push(coeffs[p].clone());
    }
    for &p in &positive {
        roots.push(vecs[p].iter().map(|x| -x).collect());
        coefficients.push(coeffs[p].iter().map(|x| -x).collect());
    }
    let lookup: HashMap<_, _> = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
    let simple: Vec<usize> = simple_vecs.iter().map(|a| lookup[a]).collect();
    let negation = (0..2 * n_pos).map(|i| if i < n_pos { i + n_pos } else { i - n_pos }).collect();
    let squared_lengths: Vec<ExactScalar> = roots.iter().map(|r| dot(r, r)).collect();
    let crystallographic = (0..rank).all(|i| {
        (0..rank).all(|j| {
            let k = &(&ExactScalar::from_int(2) * &dot(&simple_vecs[i], &simple_vecs[j])) / &simple_sq[j];
            k.is_integer()
        })
    });
    // H3/H4 have a single root length but are not simply laced
    let simply_laced = crystallographic && squared_lengths.iter().all(|l| l == &squared_lengths[0]);

    Ok(RootSystem {
        ty,
        rank,
        ambient_dim,
        roots,
        coefficients,
        simple,
        negation,
        squared_lengths,
        crystallographic,
        simply_laced,
        lookup,
    })
}

impl RootSystem {
    pub fn coxeter_type(&self) -> CoxeterType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn root(&self, id: usize) -> &[ExactScalar] {
        &self.roots[id]
    }

    pub fn roots(&self) -> &[Vec<ExactScalar>] {
        &self.roots
    }

    /// Coefficients of a root in the basis of simple roots.
    pub fn coefficients(&self, id: usize) -> &[ExactScalar] {
        &self.coefficients[id]
    }

    pub fn simple_root_ids(&self) -> &[usize] {
        &self.simple
    }

    pub fn negation(&self, id: usize) -> usize {
        self.negation[id]
    }

    pub fn squared_length(&self, id: usize) -> &ExactScalar {
        &self.squared_lengths[id]
    }

    pub fn is_positive(&self, id: usize) -> bool {
        id < self.num_positive()
    }

    pub fn is_crystallographic(&self) -> bool {
        self.crystallographic
    }

    pub fn is_simply_laced(&self) -> bool {
        self.simply_laced
    }

    pub fn find_root(&self, v: &[ExactScalar]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    /// Reflection of `v` in the hyperplane orthogonal to root `alpha_id`.
    pub fn reflect(&self, alpha_id: usize, v: &[ExactScalar]) -> Result<Vec<ExactScalar>> {
        let alpha = self
            .roots
            .get(alpha_id)
            .ok_or(Error::OutOfRange { index: alpha_id, limit: self.roots.len() })?;
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        Ok(reflect_vec(alpha, &self.squared_lengths[alpha_id], v).1)
    }

    /// Index of `s_α(β)`.
    pub fn reflect_root(&self, alpha_id: usize, beta_id: usize) -> usize {
        let image = reflect_vec(&self.roots[alpha_id], &self.squared_lengths[alpha_id], &self.roots[beta_id]).1;
        self.lookup[&image]
    }

    /// `M[i][j] = ⟨α_j, α_i⟩ = 2(α_j|α_i)/(α_i|α_i)` on the simple system.
    pub fn cartan_like_matrix(&self) -> ExactMatrix {
        let two = ExactScalar::from_int(2);
        let rows = self
            .simple
            .iter()
            .map(|&i| {
                self.simple
                    .iter()
                    .map(|&j| &(&two * &dot(self.root(j), self.root(i))) / self.squared_length(i))
                    .collect()
            })
            .collect();
        ExactMatrix::from_rows(rows)
    }

    /// Gram matrix of the simple roots in the stored coordinates.
    pub fn gram_matrix(&self) -> ExactMatrix {
        let rows = self
            .simple
            .iter()
            .map(|&i| self.simple.iter().map(|&j| dot(self.root(i), self.root(j))).collect())
            .collect();
        ExactMatrix::from_rows(rows)
    }

    /// `2 / (α|α)` for the common root length of a simply laced system; the
    /// factor that rescales stored Gram matrices to the `(α|α) = 2` convention.
    pub fn gram_normalizer(&self) -> Option<ExactScalar> {
        self.simply_laced
            .then(|| &ExactScalar::from_int(2) / &self.squared_lengths[0])
    }

    pub fn dump(&self) -> RootSystemDump {
        RootSystemDump {
            ty: self.ty,
            rank: self.rank,
            ambient_dim: self.ambient_dim,
            roots: self.roots.clone(),
            simple: self.simple.clone(),
        }
    }
}

/// JSON shape of a root system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDump {
    #[serde(rename = "type")]
    pub ty: CoxeterType,
    pub rank: usize,
    pub ambient_dim: usize,
    pub roots: Vec<Vec<ExactScalar>>,
    pub simple: Vec<usize>,
}

/// Element of the dihedral group of order `2m`.
///
/// `Rotation(k)` acts on the `2m` roots (unit vectors at angles `jπ/m`) by
/// `j ↦ j + 2k`; `Reflection(i)` fixes the line orthogonal to root `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DihedralElement {
    Rotation(usize),
    Reflection(usize),
}

/// Coordinate-free model of `I₂(m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DihedralModel {
    m: usize,
}

pub fn build_dihedral(m: usize) -> Result<DihedralModel> {
    if m < 3 {
        return Err(Error::InvalidType {
            label: "I2".into(),
            rank: m,
            reason: "I2(m) needs m >= 3".into(),
        });
    }
    Ok(DihedralModel { m })
}

impl DihedralModel {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    pub fn elements(&self) -> Vec<DihedralElement> {
        (0..self.m)
            .map(DihedralElement::Rotation)
            .chain((0..self.m).map(DihedralElement::Reflection))
            .collect()
    }

    pub fn reflections(&self) -> Vec<DihedralElement> {
        (0..self.m).map(DihedralElement::Reflection).collect()
    }

    pub fn identity(&self) -> DihedralElement {
        DihedralElement::Rotation(0)
    }

    pub fn multiply(&self, x: DihedralElement, y: DihedralElement) -> DihedralElement {
        use DihedralElement::*;
        let m = self.m;
        match (x, y) {
            (Rotation(a), Rotation(b)) => Rotation((a + b) % m),
            (Rotation(a), Reflection(j)) => Reflection((j + a) % m),
            (Reflection(i), Rotation(b)) => Reflection((i + m - b % m) % m),
            (Reflection(i), Reflection(j)) => Rotation((i + m - j) % m),
        }
    }

    pub fn inverse(&self, x: DihedralElement) -> DihedralElement {
        match x {
            DihedralElement::Rotation(a) => DihedralElement::Rotation((self.m - a) % self.m),
            r => r,
        }
    }

    pub fn is_involution(&self, x: DihedralElement) -> bool {
        x != self.identity() && self.multiply(x, x) == self.identity()
    }

    /// Image of each of the `2m` roots; roots `0..m` are positive and
    /// `j + m` is the negative of `j`.
    pub fn root_permutation(&self, x: DihedralElement) -> Vec<u16> {
        let n = 2 * self.m;
        (0..n)
            .map(|j| {
                let img = match x {
                    DihedralElement::Rotation(k) => j + 2 * k,
                    DihedralElement::Reflection(i) => 2 * i + self.m + n - j,
                };
                (img % n) as u16
            })
            .collect()
    }

    /// The simple roots `0` and `m − 1`, at angles `0` and `(m−1)π/m`.
    pub fn simple_root_ids(&self) -> [usize; 2] {
        [0, self.m - 1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let cases = [
            (CoxeterType::A, 2, 6),
            (CoxeterType::A, 5, 30),
            (CoxeterType::B, 3, 18),
            (CoxeterType::D, 4, 24),
            (CoxeterType::D, 6, 60),
            (CoxeterType::E, 6, 72),
            (CoxeterType::E, 7, 126),
            (CoxeterType::E, 8, 240),
            (CoxeterType::F, 4, 48),
            (CoxeterType::H, 3, 30),
            (CoxeterType::H, 4, 120),
        ];
        for (ty, n, count) in cases {
            let rs = build_root_system(ty, n).unwrap();
            assert_eq!(rs.num_roots(), count, "{ty}{n}");
            assert_eq!(rs.simple_root_ids(), (0..n).collect::<Vec<_>>().as_slice());
        }
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(build_root_system(CoxeterType::D, 3).is_err());
        assert!(build_root_system(CoxeterType::E, 9).is_err());
        assert!(build_root_system(CoxeterType::B, 1).is_err());
        assert!(build_root_system(CoxeterType::H, 2).is_err());
        assert!(build_root_system(CoxeterType::I2, 5).is_err());
        assert!(build_dihedral(2).is_err());
    }

    #[test]
    fn a2_reflections() {
        let rs = build_root_system(CoxeterType::A, 2).unwrap();
        let a1 = rs.root(0).to_vec();
        let a2 = rs.root(1).to_vec();
        let neg: Vec<_> = a1.iter().map(|x| -x).collect();
        assert_eq!(rs.reflect(0, &a1).unwrap(), neg);
        let sum: Vec<_> = a1.iter().zip(&a2).map(|(x, y)| x + y).collect();
        assert_eq!(rs.reflect(0, &a2).unwrap(), sum);
        // (1,1,1) is orthogonal to every root of A2
        let v = vec![ExactScalar::one(); 3];
        assert_eq!(rs.reflect(0, &v).unwrap(), v);
        assert!(rs.reflect(0, &a1[..2]).is_err());
    }

    #[test]
    fn cartan_determinants() {
        let det = |ty, n| build_root_system(ty, n).unwrap().cartan_like_matrix().determinant().unwrap();
        assert_eq!(det(CoxeterType::A, 2), ExactScalar::from_int(3));
        assert_eq!(det(CoxeterType::D, 4), ExactScalar::from_int(4));
        assert_eq!(det(CoxeterType::E, 6), ExactScalar::from_int(3));
        let a2 = build_root_system(CoxeterType::A, 2).unwrap().cartan_like_matrix();
        assert_eq!(a2[(0, 1)], ExactScalar::from_int(-1));
    }

    #[test]
    fn flags() {
        let h3 = build_root_system(CoxeterType::H, 3).unwrap();
        assert!(!h3.is_crystallographic());
        assert!(!h3.is_simply_laced());
        let b3 = build_root_system(CoxeterType::B, 3).unwrap();
        assert!(b3.is_crystallographic());
        assert!(!b3.is_simply_laced());
        assert_eq!(build_root_system(CoxeterType::E, 6).unwrap().gram_normalizer(), Some(ExactScalar::from_ratio(1, 4)));
    }

    #[test]
    fn dihedral_model() {
        let d = build_dihedral(4).unwrap();
        assert_eq!(d.order(), 8);
        let half_turn = DihedralElement::Rotation(2);
        assert!(d.is_involution(half_turn));
        assert!(!d.reflections().contains(&half_turn));
        assert_eq!(
            d.multiply(DihedralElement::Reflection(3), DihedralElement::Reflection(1)),
            DihedralElement::Rotation(2)
        );
        for x in d.elements() {
            for y in d.elements() {
                // the permutation action is a homomorphism
                let px = d.root_permutation(x);
                let py = d.root_permutation(y);
                let pxy = d.root_permutation(d.multiply(x, y));
                let composed: Vec<u16> = py.iter().map(|&j| px[j as usize]).collect();
                assert_eq!(composed, pxy);
            }
        }
        let d5 = build_dihedral(5).unwrap();
        assert_eq!(d5.elements().iter().filter(|&&x| d5.is_involution(x)).count(), 5);
    }
}
