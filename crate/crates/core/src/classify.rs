//! Quasi-Coxeter and parabolic quasi-Coxeter elements, parabolic closures,
//! conjugacy classes, and the maximal parabolic subgroups of type `D_n` in
//! the signed-permutation model.
//!
//! Subgroups generated by reflections are always compared through their root
//! subsystems: two reflection subgroups coincide exactly when their closures
//! do, so no element enumeration is needed.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::ops::ControlFlow;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, GroupElement, Realization, SignedPermutation};
use crate::hurwitz::{is_hurwitz_transitive, ReducedEnumerator, Transitivity};
use crate::lattice::{generates_full_lattice, subsystem_closure, RootSubsystem};
use crate::linalg::ExactMatrix;
use crate::par::Execution;
use crate::rootsys::CoxeterType;
use crate::scalar::ExactScalar;

/// Coxeter number `h = |Φ| / n`.
pub fn coxeter_number(group: &CoxeterGroup) -> usize {
    group.num_roots() / group.rank()
}

/// Roots lying in `Mov(w)`: the reflections of the parabolic closure of `w`.
pub fn parabolic_closure(group: &CoxeterGroup, w: &GroupElement) -> RootSubsystem {
    let below = group.reflections_below(w);
    let closure = subsystem_closure(group, &below);
    debug_assert_eq!(closure.positive_roots(), below);
    debug_assert_eq!(closure.rank(), group.reflection_length(w));
    closure
}

/// Subgroup generated by a set of reflections.
#[derive(Clone, Debug, Serialize)]
pub struct ReflectionSubgroup {
    generators: Vec<usize>,
    closure: RootSubsystem,
}

impl ReflectionSubgroup {
    pub fn new(group: &CoxeterGroup, generators: &[usize]) -> Self {
        Self { generators: generators.to_vec(), closure: subsystem_closure(group, generators) }
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn closure(&self) -> &RootSubsystem {
        &self.closure
    }

    pub fn rank(&self) -> usize {
        self.closure.rank()
    }

    pub fn contains_reflection(&self, t: usize) -> bool {
        self.closure.contains(t)
    }

    pub fn is_whole_group(&self, group: &CoxeterGroup) -> bool {
        self.closure.is_full(group)
    }
}

impl PartialEq for ReflectionSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.closure == other.closure
    }
}

/// Parabolic test for a root subsystem: it must contain every root in its
/// own span.
pub fn is_parabolic_subsystem(group: &CoxeterGroup, sub: &RootSubsystem) -> bool {
    let roots = sub.positive_roots();
    let span = group.span_of_roots(roots.iter().copied());
    (0..group.num_reflections()).all(|t| sub.contains(t) || !group.span_contains_root(&span, t))
}

pub fn is_parabolic_subgroup(group: &CoxeterGroup, g: &ReflectionSubgroup) -> bool {
    is_parabolic_subsystem(group, &g.closure)
}

fn generates_group(group: &CoxeterGroup, tuple: &[usize]) -> bool {
    subsystem_closure(group, tuple).is_full(group)
}

/// The separate routes to deciding whether `w` is quasi-Coxeter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiCoxeterPaths {
    /// Full reflection length.
    pub full_length: bool,
    /// The lexicographically first reduced factorization generates `W`.
    pub first: bool,
    /// Some reduced factorization generates `W`.
    pub any: bool,
    /// Every reduced factorization generates `W`.
    pub all: bool,
    /// Roots of the first factorization span the root lattice (simply
    /// laced root systems only).
    pub lattice: Option<bool>,
}

impl QuasiCoxeterPaths {
    /// All routes agree, as they must when every factorization of a
    /// quasi-Coxeter element generates the group.
    pub fn consistent(&self) -> bool {
        self.first == self.any && self.any == self.all && self.lattice.is_none_or(|l| l == self.first)
    }
}

/// Runs every quasi-Coxeter test on `w`, scanning all of `Red_T(w)`.
pub fn quasi_coxeter_paths(group: &CoxeterGroup, w: &GroupElement) -> QuasiCoxeterPaths {
    let full_length = group.reflection_length(w) == group.rank();
    if !full_length {
        return QuasiCoxeterPaths { full_length, first: false, any: false, all: false, lattice: None };
    }
    let mut en = ReducedEnumerator::new(group);
    let first_tuple = en.first(w);
    let first = generates_group(group, &first_tuple);
    let (mut any, mut all) = (false, true);
    let mut memo: HashMap<u128, bool> = HashMap::new();
    let _ = en.for_each::<()>(w, |t| {
        let key = t.iter().fold(0u128, |m, &r| m | 1 << r);
        let g = *memo.entry(key).or_insert_with(|| generates_group(group, t));
        any |= g;
        all &= g;
        ControlFlow::Continue(())
    });
    let lattice = lattice_route(group, &first_tuple);
    QuasiCoxeterPaths { full_length, first, any, all, lattice }
}

fn lattice_route(group: &CoxeterGroup, tuple: &[usize]) -> Option<bool> {
    if group.is_simply_laced() && matches!(group.realization(), Realization::Roots(_)) {
        generates_full_lattice(group, tuple).ok()
    } else {
        None
    }
}

/// Whether some reduced factorization of `w` generates `W`.
///
/// Tries the first factorization and falls back to a scan of all of them.
pub fn is_quasi_coxeter(group: &CoxeterGroup, w: &GroupElement) -> bool {
    if group.reflection_length(w) < group.rank() {
        return false;
    }
    let mut en = ReducedEnumerator::new(group);
    let first = en.first(w);
    if generates_group(group, &first) {
        debug_assert_ne!(lattice_route(group, &first), Some(false));
        return true;
    }
    en.for_each(w, |t| if generates_group(group, t) { ControlFlow::Break(()) } else { ControlFlow::Continue(()) })
        .is_break()
}

/// Whether some reduced factorization of `w` generates a parabolic subgroup.
pub fn is_parabolic_quasi_coxeter(group: &CoxeterGroup, w: &GroupElement) -> bool {
    ReducedEnumerator::new(group)
        .for_each(w, |t| {
            if is_parabolic_subsystem(group, &subsystem_closure(group, t)) {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .is_break()
}

/// For quasi-Coxeter `w`: whether the first `n − 1` entries of every reduced
/// factorization generate a parabolic subgroup.
pub fn corank1_prefix_parabolic_check(group: &CoxeterGroup, w: &GroupElement) -> Result<bool> {
    if !is_quasi_coxeter(group, w) {
        return Err(Error::Unsupported("a quasi-Coxeter element".into()));
    }
    let n = group.rank();
    let mut cache: HashMap<u128, bool> = HashMap::new();
    let flow = ReducedEnumerator::new(group).for_each(w, |t| {
        let key = t[..n - 1].iter().fold(0u128, |m, &r| m | 1 << r);
        let ok = *cache
            .entry(key)
            .or_insert_with(|| is_parabolic_subsystem(group, &subsystem_closure(group, &t[..n - 1])));
        if ok {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(flow.is_continue())
}

/// Coefficients of the cyclotomic polynomial `Φ_d`, constant term first.
fn cyclotomic(d: usize) -> Vec<i64> {
    // x^d − 1 divided by Φ_e for every proper divisor e
    let mut p = vec![0i64; d + 1];
    p[0] = -1;
    p[d] = 1;
    for e in (1..d).filter(|e| d % e == 0) {
        let q = cyclotomic(e);
        // exact division by a monic polynomial
        let mut out = vec![0i64; p.len() - q.len() + 1];
        for k in (0..out.len()).rev() {
            let c = p[k + q.len() - 1];
            out[k] = c;
            for (j, &qj) in q.iter().enumerate() {
                p[k + j] -= c * qj;
            }
        }
        debug_assert!(p.iter().all(|&x| x == 0));
        p = out;
    }
    p
}

/// Coxeter elements in the broad sense: products of some simple system of
/// reflections. These are the elements of full reflection length with an
/// eigenvalue that is a primitive `h`-th root of unity.
pub fn is_coxeter_element(group: &CoxeterGroup, w: &GroupElement) -> bool {
    if group.reflection_length(w) != group.rank() {
        return false;
    }
    match group.realization() {
        Realization::Dihedral(d) => {
            // a rotation by 2πk/m moves root 0 to root 2k
            let k = w.image(0) / 2;
            w.image(0) % 2 == 0 && k.gcd(&d.m()) == 1
        }
        Realization::Roots(_) => {
            let m = group.matrix_of(w).expect("element of this group");
            let coeffs = cyclotomic(coxeter_number(group));
            // Horner evaluation of Φ_h at the matrix
            let n = m.rows();
            let mut acc = ExactMatrix::zeros(n, n);
            for &c in coeffs.iter().rev() {
                acc = acc.mul(&m).expect("square");
                for i in 0..n {
                    acc[(i, i)] = &acc[(i, i)] + &ExactScalar::from_int(c);
                }
            }
            acc.rank() < n
        }
    }
}

/// A conjugacy class with its first element in breadth-first enumeration
/// order as representative.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: GroupElement,
    pub size: usize,
}

/// All conjugacy classes, found by partitioning the enumerated group into
/// orbits under conjugation by the simple reflections.
pub fn conjugacy_classes(group: &CoxeterGroup) -> Result<Vec<ConjugacyClass>> {
    let elements = group.elements()?;
    let mut class_of: HashMap<GroupElement, usize> = HashMap::with_capacity(elements.len());
    let simple: Vec<GroupElement> = group.simple_reflections().iter().map(|&s| group.reflection(s).clone()).collect();
    let mut classes = Vec::new();
    for w in &elements {
        if class_of.contains_key(w) {
            continue;
        }
        let id = classes.len();
        class_of.insert(w.clone(), id);
        let mut queue = VecDeque::from([w.clone()]);
        let mut size = 0;
        while let Some(x) = queue.pop_front() {
            size += 1;
            for s in &simple {
                let y = group.mul(&group.mul(s, &x), s);
                if !class_of.contains_key(&y) {
                    class_of.insert(y.clone(), id);
                    queue.push_back(y);
                }
            }
        }
        classes.push(ConjugacyClass { representative: w.clone(), size });
    }
    Ok(classes)
}

pub fn conjugacy_class_representatives(group: &CoxeterGroup) -> Result<Vec<GroupElement>> {
    Ok(conjugacy_classes(group)?.into_iter().map(|c| c.representative).collect())
}

/// Everything the crate can say about one element.
#[derive(Clone, Debug, Serialize)]
pub struct ClassificationRecord {
    pub group: String,
    /// Lexicographically first reduced factorization; identifies the element.
    pub word: Vec<usize>,
    pub reflection_length: usize,
    pub is_coxeter: bool,
    pub is_quasi_coxeter: bool,
    pub is_parabolic_quasi_coxeter: bool,
    pub parabolic_closure: RootSubsystem,
    pub transitivity: Transitivity,
}

pub fn classify(group: &CoxeterGroup, w: &GroupElement, cap: usize, exec: Execution) -> ClassificationRecord {
    let word = ReducedEnumerator::new(group).first(w);
    let is_quasi_coxeter = is_quasi_coxeter(group, w);
    let record = ClassificationRecord {
        group: group.label(),
        word,
        reflection_length: group.reflection_length(w),
        is_coxeter: is_coxeter_element(group, w),
        is_quasi_coxeter,
        is_parabolic_quasi_coxeter: is_quasi_coxeter || is_parabolic_quasi_coxeter(group, w),
        parabolic_closure: parabolic_closure(group, w),
        transitivity: is_hurwitz_transitive(group, w, cap, exec),
    };
    debug_assert!(!record.is_quasi_coxeter || record.reflection_length == group.rank());
    debug_assert!(!record.is_coxeter || record.is_quasi_coxeter);
    record
}

fn check_type_d(group: &CoxeterGroup) -> Result<usize> {
    match group.root_system() {
        Some(rs) if rs.coxeter_type() == CoxeterType::D => Ok(rs.rank()),
        _ => Err(Error::Unsupported("a group of type D".into())),
    }
}

/// Reflection ids of `s₀ = (1,−2)(−1,2)` and `s_i = (i,i+1)(−i,−i−1)`,
/// `1 ≤ i < n`: the simple system of `D_n` whose branch node is `s₂`.
pub fn dn_simple_reflections(group: &CoxeterGroup) -> Result<Vec<usize>> {
    let n = check_type_d(group)?;
    let mut gens = vec![SignedPermutation::transposition(n, 1, -2)];
    gens.extend((1..n as i32).map(|i| SignedPermutation::transposition(n, i, i + 1)));
    gens.iter()
        .map(|sp| {
            let w = group.from_signed_permutation(sp)?;
            group.as_reflection(&w).ok_or(Error::NotInSpan)
        })
        .collect()
}

/// The set `A_I` with `W_{S∖{s_i}} = stab(A_I)`.
pub fn dn_stabilized_set(n: usize, i: usize) -> Vec<i32> {
    let n = n as i32;
    if i == 1 {
        std::iter::once(-1).chain(2..=n).collect()
    } else {
        (i as i32 + 1..=n).collect()
    }
}

fn normalized(mut set: Vec<i32>) -> Vec<i32> {
    set.sort_unstable();
    set
}

fn image_of_set(w: &SignedPermutation, set: &[i32]) -> Vec<i32> {
    normalized(set.iter().map(|&x| w.apply(x)).collect())
}

fn stabilizes(n: usize, k: i32, l: i32, set: &[i32]) -> bool {
    image_of_set(&SignedPermutation::transposition(n, k, l), set) == set
}

/// A pair of maximal parabolic subgroups `stab(A_I)` and `stab(w(A_J))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DnPair {
    pub i: usize,
    pub j: usize,
    pub a_i: Vec<i32>,
    pub w_a_j: Vec<i32>,
    pub w: SignedPermutation,
    /// A reflection `(k,l)(−k,−l)` in both, if any.
    pub common_reflection: Option<(i32, i32)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DnIntersectionReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub trivial_pairs: usize,
    pub all_nontrivial: bool,
    /// Trivially intersecting pairs, at most [`MAX_WITNESSES`] of them.
    pub witnesses: Vec<DnPair>,
}

pub const MAX_WITNESSES: usize = 32;

/// Every orbit point of `set` under `D_n`, with an element reaching it.
fn set_orbit(n: usize, set: &[i32]) -> BTreeMap<Vec<i32>, SignedPermutation> {
    let mut gens = vec![SignedPermutation::transposition(n, 1, -2)];
    gens.extend((1..n as i32).map(|i| SignedPermutation::transposition(n, i, i + 1)));
    let start = normalized(set.to_vec());
    let mut seen = BTreeMap::from([(start.clone(), SignedPermutation::identity(n))]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let w = seen[&s].clone();
        for g in &gens {
            let t = image_of_set(g, &s);
            if !seen.contains_key(&t) {
                seen.insert(t.clone(), g.compose(&w));
                queue.push_back(t);
            }
        }
    }
    seen
}

/// Checks every pair of maximal parabolic subgroups `W_I` and `wW_Jw⁻¹` of
/// `D_n` for a common reflection. Two parabolic subgroups intersect in a
/// parabolic subgroup, so the intersection is trivial exactly when no
/// reflection stabilizes both sets.
pub fn dn_maximal_parabolic_intersections(n: usize) -> Result<DnIntersectionReport> {
    if n < 4 {
        return Err(Error::InvalidType { label: "D".into(), rank: n, reason: "D_n needs n >= 4".into() });
    }
    let ni = n as i32;
    let reflections: Vec<(i32, i32)> = (1..=ni)
        .flat_map(|k| (k + 1..=ni).flat_map(move |l| [(k, l), (k, -l)]))
        .collect();
    let mut pairs_checked = 0;
    let mut trivial_pairs = 0;
    let mut witnesses = Vec::new();
    for i in 0..n {
        let a_i = dn_stabilized_set(n, i);
        for j in 0..n {
            for (b, w) in set_orbit(n, &dn_stabilized_set(n, j)) {
                // stab(B) = stab(−B); count each subgroup once
                let neg = normalized(b.iter().map(|x| -x).collect());
                if neg > b {
                    continue;
                }
                pairs_checked += 1;
                let common = reflections
                    .iter()
                    .copied()
                    .find(|&(k, l)| stabilizes(n, k, l, &a_i) && stabilizes(n, k, l, &b));
                if common.is_none() {
                    trivial_pairs += 1;
                    if witnesses.len() < MAX_WITNESSES {
                        witnesses.push(DnPair { i, j, a_i: a_i.clone(), w_a_j: b, w, common_reflection: None });
                    }
                }
            }
        }
    }
    Ok(DnIntersectionReport { n, pairs_checked, trivial_pairs, all_nontrivial: trivial_pairs == 0, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(ty: CoxeterType, n: usize) -> CoxeterGroup {
        CoxeterGroup::new(ty, n).unwrap()
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic(30).len(), 9);
    }

    #[test]
    fn closures_of_small_elements() {
        let b4 = g(CoxeterType::B, 4);
        assert!(parabolic_closure(&b4, &b4.identity()).is_empty());
        let t = parabolic_closure(&b4, b4.reflection(5));
        assert_eq!(t.positive_roots(), vec![5]);
        let w = b4.from_signed_permutation(&SignedPermutation::new(vec![-1, -2, -3, -4]).unwrap()).unwrap();
        assert!(parabolic_closure(&b4, &w).is_full(&b4));
    }

    #[test]
    fn b4_negative_control() {
        let b4 = g(CoxeterType::B, 4);
        let w = b4.from_signed_permutation(&SignedPermutation::new(vec![-1, -2, -3, -4]).unwrap()).unwrap();
        assert_eq!(b4.reflection_length(&w), 4);
        assert!(!is_quasi_coxeter(&b4, &w));
        assert!(!is_parabolic_quasi_coxeter(&b4, &w));
        assert!(!is_coxeter_element(&b4, &w));
        let paths = quasi_coxeter_paths(&b4, &w);
        assert!(paths.consistent() && !paths.any);
        // the sign changes generate A1⁴, which is not parabolic
        let sign_changes: Vec<usize> = (1..=4)
            .map(|i| {
                let sp = SignedPermutation::transposition(4, i, -i);
                b4.as_reflection(&b4.from_signed_permutation(&sp).unwrap()).unwrap()
            })
            .collect();
        assert!(!is_parabolic_subgroup(&b4, &ReflectionSubgroup::new(&b4, &sign_changes)));
    }

    #[test]
    fn standard_parabolics_are_parabolic() {
        for (ty, n) in [(CoxeterType::A, 4), (CoxeterType::B, 3), (CoxeterType::H, 3), (CoxeterType::E, 6)] {
            let grp = g(ty, n);
            let s = grp.simple_root_ids().to_vec();
            for k in 0..=n {
                assert!(is_parabolic_subgroup(&grp, &ReflectionSubgroup::new(&grp, &s[..k])), "{ty}{n} prefix {k}");
            }
        }
        let i6 = g(CoxeterType::I2, 6);
        // reflections at angle π/3 generate a proper I2(3), not parabolic
        assert!(!is_parabolic_subgroup(&i6, &ReflectionSubgroup::new(&i6, &[0, 2])));
        assert!(is_parabolic_subgroup(&i6, &ReflectionSubgroup::new(&i6, &[0, 1])));
    }

    #[test]
    fn coxeter_elements_detected() {
        for (ty, n) in [(CoxeterType::A, 3), (CoxeterType::D, 4), (CoxeterType::H, 3), (CoxeterType::F, 4), (CoxeterType::I2, 5)] {
            let grp = g(ty, n);
            let c = grp.element_from_word(grp.simple_root_ids()).unwrap();
            assert!(is_coxeter_element(&grp, &c), "{ty}{n}");
            assert!(is_quasi_coxeter(&grp, &c));
            assert!(quasi_coxeter_paths(&grp, &c).consistent());
        }
        // rotation by 2·2π/6 in I2(6) is not Coxeter
        let i6 = g(CoxeterType::I2, 6);
        let r = i6.element_from_word(&[0, 2]).unwrap();
        assert!(!is_coxeter_element(&i6, &r));
        assert!(!is_quasi_coxeter(&i6, &r));
    }

    #[test]
    fn class_counts() {
        for (ty, n, want) in [(CoxeterType::A, 2, 3), (CoxeterType::B, 2, 5), (CoxeterType::D, 4, 13), (CoxeterType::I2, 5, 4)] {
            let grp = g(ty, n);
            let classes = conjugacy_classes(&grp).unwrap();
            assert_eq!(classes.len(), want, "{ty}{n}");
            assert_eq!(classes.iter().map(|c| c.size as u128).sum::<u128>(), grp.order());
        }
    }

    #[test]
    fn dn_model_matches_the_group() {
        let d4 = g(CoxeterType::D, 4);
        let s = dn_simple_reflections(&d4).unwrap();
        // s2 is the branch node: it fails to commute with every other generator
        for &k in &[0, 1, 3] {
            assert_ne!(d4.conjugate_reflection(s[2], s[k]), s[k]);
        }
        assert_eq!(d4.conjugate_reflection(s[0], s[1]), s[1]);
        let p = ReflectionSubgroup::new(&d4, &[s[0], s[1], s[3]]);
        let conj: Vec<usize> = [s[0], s[1], s[3]].iter().map(|&t| d4.conjugate_reflection(s[2], t)).collect();
        let q = ReflectionSubgroup::new(&d4, &conj);
        assert!(is_parabolic_subgroup(&d4, &p) && is_parabolic_subgroup(&d4, &q));
        assert_eq!(p.closure().mask() & q.closure().mask(), 0);
    }

    #[test]
    fn dn_intersections() {
        let r4 = dn_maximal_parabolic_intersections(4).unwrap();
        assert!(!r4.all_nontrivial);
        assert!(r4.witnesses.iter().any(|p| p.i == 2 && p.j == 2 && p.a_i == vec![3, 4] && p.w_a_j == vec![2, 4]));
        assert!(!dn_maximal_parabolic_intersections(5).unwrap().all_nontrivial);
        assert!(dn_maximal_parabolic_intersections(6).unwrap().all_nontrivial);
        assert!(dn_maximal_parabolic_intersections(3).is_err());
    }
}
