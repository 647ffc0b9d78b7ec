//! Property checks shared by the property tests and the acceptance run.
//! Each returns `Err` with a description of the first counterexample.

#![allow(dead_code)]

use hurwitz_core::hurwitz::{braid_move, conjugate_tuple, hurwitz_orbit, Direction, Factorization, ReducedEnumerator, DEFAULT_CAP};
use hurwitz_core::lattice::{connection_index, lattice_index, roots_of_lattice, subsystem_closure, LatticeIndex};
use hurwitz_core::par::Execution;
use hurwitz_core::{CoxeterGroup, CoxeterType, ExactScalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<(), String>;

pub fn group(ty: CoxeterType, n: usize) -> CoxeterGroup {
    CoxeterGroup::new(ty, n).unwrap()
}

/// Groups small enough for exhaustive BFS oracles.
pub fn oracle_groups() -> Vec<CoxeterGroup> {
    let mut out = vec![group(CoxeterType::A, 3), group(CoxeterType::B, 3), group(CoxeterType::D, 4), group(CoxeterType::H, 3)];
    out.extend((3..=8).map(|m| group(CoxeterType::I2, m)));
    out
}

fn random_tuple(g: &CoxeterGroup, len: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..g.num_reflections())).collect()
}

fn apply(g: &CoxeterGroup, f: &Factorization, moves: &[(usize, Direction)]) -> Factorization {
    moves.iter().fold(f.clone(), |acc, &(i, d)| braid_move(g, &acc, i, d).unwrap())
}

/// `σσ⁻¹ = id`, product invariance, `σ_iσ_{i+1}σ_i = σ_{i+1}σ_iσ_{i+1}` and
/// `σ_iσ_j = σ_jσ_i` for `|i − j| ≥ 2`, on random (not necessarily reduced)
/// tuples.
pub fn braid_identities(g: &CoxeterGroup, trials: usize, seed: u64) -> Check {
    use Direction::{Forward as F, Inverse as I};
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..trials {
        let len = rng.gen_range(2..=5);
        let f = Factorization::new(g, random_tuple(g, len, &mut rng)).unwrap();
        for i in 0..len - 1 {
            for (a, b) in [(F, I), (I, F)] {
                let back = apply(g, &f, &[(i, a), (i, b)]);
                if back != f {
                    return Err(format!("{}: σ_{i} moves {a:?}/{b:?} do not cancel on {:?}", g.label(), f.tuple()));
                }
            }
            let moved = braid_move(g, &f, i, F).unwrap();
            if moved.product() != f.product() || g.element_from_word(moved.tuple()).unwrap() != *f.product() {
                return Err(format!("{}: σ_{i} changes the product of {:?}", g.label(), f.tuple()));
            }
            if i + 2 < len {
                let lhs = apply(g, &f, &[(i, F), (i + 1, F), (i, F)]);
                let rhs = apply(g, &f, &[(i + 1, F), (i, F), (i + 1, F)]);
                if lhs != rhs {
                    return Err(format!("{}: braid relation fails at {i} on {:?}", g.label(), f.tuple()));
                }
            }
            for j in i + 2..len - 1 {
                if apply(g, &f, &[(i, F), (j, F)]) != apply(g, &f, &[(j, F), (i, F)]) {
                    return Err(format!("{}: σ_{i}, σ_{j} do not commute on {:?}", g.label(), f.tuple()));
                }
            }
        }
    }
    Ok(())
}

/// Every orbit member multiplies to the seed's product and is reduced.
pub fn orbit_product_invariance(g: &CoxeterGroup, trials: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut en = ReducedEnumerator::new(g);
    for _ in 0..trials {
        let k = rng.gen_range(1..=g.rank());
        let w = g.random_product(k, &mut rng);
        let f = Factorization::reduced(g, en.first(&w)).unwrap();
        let orbit = hurwitz_orbit(g, &f, DEFAULT_CAP, Execution::Sequential);
        for m in orbit.members() {
            if g.element_from_word(&m).unwrap() != w || m.len() != g.reflection_length(&w) {
                return Err(format!("{}: orbit member {m:?} of {:?} has a different product", g.label(), f.tuple()));
            }
        }
    }
    Ok(())
}

/// Reflection length from the moved space against BFS distance in the
/// Cayley graph on all reflections.
pub fn length_matches_bfs(g: &CoxeterGroup) -> Check {
    let dist = g.reflection_distances().unwrap();
    if dist.len() as u128 != g.order() {
        return Err(format!("{}: BFS reached {} of {} elements", g.label(), dist.len(), g.order()));
    }
    for (w, d) in dist {
        let l = g.reflection_length(&w);
        if l != d {
            return Err(format!("{}: ℓ_T = {l} but BFS distance {d}", g.label()));
        }
    }
    Ok(())
}

/// `det(w) = (−1)^ℓ_T(w)` over the whole group.
pub fn determinant_parity(g: &CoxeterGroup) -> Check {
    for w in g.elements().unwrap() {
        let sign = if g.reflection_length(&w) % 2 == 0 { 1 } else { -1 };
        if g.determinant(&w).unwrap() != ExactScalar::from_int(sign) {
            return Err(format!("{}: determinant is not (−1)^ℓ", g.label()));
        }
    }
    Ok(())
}

/// Absolute order is reflexive, antisymmetric and transitive.
pub fn absolute_order_axioms(g: &CoxeterGroup) -> Check {
    let el = g.elements().unwrap();
    let n = el.len();
    let leq: Vec<Vec<bool>> = el.iter().map(|u| el.iter().map(|v| g.absolute_leq(u, v).unwrap()).collect()).collect();
    for a in 0..n {
        if !leq[a][a] {
            return Err(format!("{}: not reflexive", g.label()));
        }
        for b in 0..n {
            if a != b && leq[a][b] && leq[b][a] {
                return Err(format!("{}: not antisymmetric", g.label()));
            }
            if leq[a][b] && (0..n).any(|c| leq[b][c] && !leq[a][c]) {
                return Err(format!("{}: not transitive", g.label()));
            }
        }
    }
    Ok(())
}

/// Conjugating a reduced factorization by `g` gives a reduced factorization
/// of the conjugate, and orbit sizes are preserved.
pub fn conjugation_equivariance(g: &CoxeterGroup, trials: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut en = ReducedEnumerator::new(g);
    for _ in 0..trials {
        let w = g.random_product(rng.gen_range(1..=g.rank()), &mut rng);
        let x = g.random_product(rng.gen_range(1..=4), &mut rng);
        let f = Factorization::reduced(g, en.first(&w)).unwrap();
        let conj = conjugate_tuple(g, f.tuple(), &x);
        let xw = g.conjugate(&w, &x).unwrap();
        let Ok(cf) = Factorization::reduced(g, conj.clone()) else {
            return Err(format!("{}: conjugate of {:?} is not reduced", g.label(), f.tuple()));
        };
        if *cf.product() != xw {
            return Err(format!("{}: conjugate tuple {conj:?} has the wrong product", g.label()));
        }
        let a = hurwitz_orbit(g, &f, DEFAULT_CAP, Execution::Sequential).len();
        let b = hurwitz_orbit(g, &cf, DEFAULT_CAP, Execution::Sequential).len();
        if a != b {
            return Err(format!("{}: orbit sizes {a} and {b} differ under conjugation", g.label()));
        }
    }
    Ok(())
}

/// Closure identities on subsystems generated by random root subsets of a
/// simply laced group:
/// - the roots of the full root lattice are all roots;
/// - the roots of `L(Φ′)` are exactly `Φ′`;
/// - closing a closure changes nothing;
/// - for full-rank `Φ′`, `[L(Φ) : L(Φ′)]² · i(Φ) = i(Φ′)`.
pub fn closure_identities(g: &CoxeterGroup, trials: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<usize> = (0..g.num_reflections()).collect();
    if !roots_of_lattice(g, &all).unwrap().is_full(g) {
        return Err(format!("{}: roots of the root lattice are not all roots", g.label()));
    }
    let i_full = connection_index(g, g.simple_root_ids()).unwrap();
    for _ in 0..trials {
        let size = rng.gen_range(1..=g.rank() + 1);
        let roots: Vec<usize> = (0..size).map(|_| rng.gen_range(0..g.num_roots())).collect();
        let sub = subsystem_closure(g, &roots);
        let pos = sub.positive_roots();
        if roots_of_lattice(g, &pos).unwrap() != sub {
            return Err(format!("{}: L(Φ′) ∩ Φ ≠ Φ′ for Φ′ generated by {roots:?}", g.label()));
        }
        if subsystem_closure(g, &pos) != sub {
            return Err(format!("{}: closure of {roots:?} is not closed", g.label()));
        }
        if sub.rank() == g.rank() {
            let LatticeIndex::Finite(idx) = lattice_index(g, &pos, &all).unwrap() else {
                return Err(format!("{}: full-rank subsystem has infinite index", g.label()));
            };
            let i_sub = connection_index(g, &pos).unwrap();
            if &idx * &idx * &i_full != i_sub {
                return Err(format!("{}: index {idx}, i(Φ) {i_full}, i(Φ′) {i_sub} for {roots:?}", g.label()));
            }
        }
    }
    Ok(())
}

/// Runs every suite; used by the acceptance run.
pub fn all_properties() -> Vec<(String, Check)> {
    let mut out = Vec::new();
    let small = [
        group(CoxeterType::A, 4),
        group(CoxeterType::B, 4),
        group(CoxeterType::D, 5),
        group(CoxeterType::F, 4),
        group(CoxeterType::H, 4),
        group(CoxeterType::E, 6),
        group(CoxeterType::I2, 7),
    ];
    for g in &small {
        out.push((format!("braid identities {}", g.label()), braid_identities(g, 50, 1)));
        out.push((format!("orbit products {}", g.label()), orbit_product_invariance(g, 10, 2)));
        out.push((format!("conjugation {}", g.label()), conjugation_equivariance(g, 10, 3)));
    }
    for g in oracle_groups() {
        out.push((format!("length vs BFS {}", g.label()), length_matches_bfs(&g)));
        out.push((format!("det parity {}", g.label()), determinant_parity(&g)));
    }
    out.push(("absolute order A3".into(), absolute_order_axioms(&group(CoxeterType::A, 3))));
    out.push(("absolute order I2(6)".into(), absolute_order_axioms(&group(CoxeterType::I2, 6))));
    for (ty, n) in [(CoxeterType::A, 4), (CoxeterType::D, 4), (CoxeterType::D, 5)] {
        let g = group(ty, n);
        out.push((format!("closure identities {}", g.label()), closure_identities(&g, 200, 4)));
    }
    out
}
