//! The Hurwitz action of the braid group on reduced reflection factorizations.
//!
//! Orbit search works on tuples packed into a `u64`: entry `k` of a tuple of
//! length `n` occupies bits `7(n−1−k)..7(n−k)`, so numeric order of keys is
//! lexicographic order of tuples. Reflection ids are below 128 in every
//! supported type (E₈ has 120).

use std::collections::HashMap;
use std::ops::ControlFlow;

use rustc_hash::FxHashSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{CoxeterGroup, GroupElement};
use crate::par::Execution;

/// Default bound on orbit and `Red_T` sizes before a search is abandoned.
pub const DEFAULT_CAP: usize = 10_000_000;

const BITS: u32 = 7;
const MASK: u64 = (1 << BITS) - 1;

pub(crate) fn pack(tuple: &[usize]) -> u64 {
    tuple.iter().fold(0u64, |acc, &t| (acc << BITS) | t as u64)
}

pub(crate) fn unpack(key: u64, len: usize) -> Vec<usize> {
    (0..len).map(|k| ((key >> (BITS * (len - 1 - k) as u32)) & MASK) as usize).collect()
}

#[inline]
fn entry(key: u64, len: usize, k: usize) -> u64 {
    (key >> (BITS * (len - 1 - k) as u32)) & MASK
}

#[inline]
fn set_pair(key: u64, len: usize, i: usize, a: u64, b: u64) -> u64 {
    let shift_a = BITS * (len - 1 - i) as u32;
    let shift_b = shift_a - BITS;
    let cleared = key & !((MASK << shift_a) | (MASK << shift_b));
    cleared | (a << shift_a) | (b << shift_b)
}

/// An ordered tuple of reflections with its product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Factorization {
    tuple: Vec<usize>,
    product: GroupElement,
}

impl Factorization {
    pub fn new(group: &CoxeterGroup, tuple: Vec<usize>) -> Result<Self> {
        let product = group.element_from_word(&tuple)?;
        Ok(Self { tuple, product })
    }

    /// Like [`new`](Self::new) but rejects tuples that are not reduced.
    pub fn reduced(group: &CoxeterGroup, tuple: Vec<usize>) -> Result<Self> {
        let f = Self::new(group, tuple)?;
        let expected = group.reflection_length(&f.product);
        if expected != f.len() {
            return Err(Error::NotReduced { len: f.len(), expected });
        }
        Ok(f)
    }

    pub fn tuple(&self) -> &[usize] {
        &self.tuple
    }

    pub fn product(&self) -> &GroupElement {
        &self.product
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    pub fn is_reduced(&self, group: &CoxeterGroup) -> bool {
        group.reflection_length(&self.product) == self.len()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

fn move_key(group: &CoxeterGroup, key: u64, len: usize, i: usize, dir: Direction) -> u64 {
    let a = entry(key, len, i) as usize;
    let b = entry(key, len, i + 1) as usize;
    let (x, y) = match dir {
        Direction::Forward => (group.conjugate_reflection(a, b), a),
        Direction::Inverse => (b, group.conjugate_reflection(b, a)),
    };
    set_pair(key, len, i, x as u64, y as u64)
}

/// `σ_i` (forward) or `σ_i⁻¹` (inverse) acting on the entries at positions
/// `i` and `i + 1` (zero-based).
///
/// Forward replaces `(t_i, t_{i+1})` by `(t_i t_{i+1} t_i, t_i)`; inverse by
/// `(t_{i+1}, t_{i+1} t_i t_{i+1})`. The product is unchanged.
pub fn braid_move(group: &CoxeterGroup, f: &Factorization, i: usize, dir: Direction) -> Result<Factorization> {
    if f.len() < 2 || i + 1 >= f.len() {
        return Err(Error::OutOfRange { index: i, limit: f.len().saturating_sub(1) });
    }
    let (a, b) = (f.tuple[i], f.tuple[i + 1]);
    let (x, y) = match dir {
        Direction::Forward => (group.conjugate_reflection(a, b), a),
        Direction::Inverse => (b, group.conjugate_reflection(b, a)),
    };
    let mut tuple = f.tuple.clone();
    tuple[i] = x;
    tuple[i + 1] = y;
    Ok(Factorization { tuple, product: f.product.clone() })
}

/// Conjugates every entry of a tuple by `g`: `t ↦ g t g⁻¹`.
pub fn conjugate_tuple(group: &CoxeterGroup, tuple: &[usize], g: &GroupElement) -> Vec<usize> {
    tuple.iter().map(|&t| group.positive_root(g.image(t))).collect()
}

/// Depth-first enumerator of `Red_T(w)`, memoizing for each element `u`
/// reached the reflections `t` with `ℓ_T(t·u) = ℓ_T(u) − 1`.
pub struct ReducedEnumerator<'g> {
    group: &'g CoxeterGroup,
    first_letters: HashMap<GroupElement, Vec<u8>>,
}

impl<'g> ReducedEnumerator<'g> {
    pub fn new(group: &'g CoxeterGroup) -> Self {
        Self { group, first_letters: HashMap::new() }
    }

    fn first_letters(&mut self, u: &GroupElement, len: usize) -> Vec<u8> {
        if let Some(v) = self.first_letters.get(u) {
            return v.clone();
        }
        let g = self.group;
        let letters: Vec<u8> = (0..g.num_reflections())
            .filter(|&t| g.reflection_length(&g.reflect_left(t, u)) + 1 == len)
            .map(|t| t as u8)
            .collect();
        self.first_letters.insert(u.clone(), letters.clone());
        letters
    }

    /// Calls `visit` on every reduced factorization of `w` in lexicographic
    /// order, stopping early on `Break`.
    pub fn for_each<B>(&mut self, w: &GroupElement, mut visit: impl FnMut(&[usize]) -> ControlFlow<B>) -> ControlFlow<B> {
        let len = self.group.reflection_length(w);
        let mut prefix = Vec::with_capacity(len);
        self.walk(w, len, &mut prefix, &mut visit)
    }

    fn walk<B>(
        &mut self,
        u: &GroupElement,
        len: usize,
        prefix: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        if len == 0 {
            return visit(prefix);
        }
        for t in self.first_letters(u, len) {
            let t = t as usize;
            let rest = self.group.reflect_left(t, u);
            prefix.push(t);
            let flow = self.walk(&rest, len - 1, prefix, visit);
            prefix.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// The lexicographically first reduced factorization.
    pub fn first(&mut self, w: &GroupElement) -> Vec<usize> {
        match self.for_each(w, |t| ControlFlow::Break(t.to_vec())) {
            ControlFlow::Break(t) => t,
            ControlFlow::Continue(()) => unreachable!("every element has a reduced factorization"),
        }
    }

    /// Packed keys of `Red_T(w)` in increasing order, or `None` past `cap`.
    pub fn keys(&mut self, w: &GroupElement, cap: usize) -> Option<Vec<u64>> {
        let mut out = Vec::new();
        let flow = self.for_each(w, |t| {
            if out.len() == cap {
                return ControlFlow::Break(());
            }
            out.push(pack(t));
            ControlFlow::Continue(())
        });
        flow.is_continue().then_some(out)
    }
}

/// `Red_T(w)`, sorted lexicographically.
pub fn reduced_factorizations(group: &CoxeterGroup, w: &GroupElement) -> Vec<Factorization> {
    let mut out = Vec::new();
    let _ = ReducedEnumerator::new(group).for_each::<()>(w, |t| {
        out.push(Factorization { tuple: t.to_vec(), product: w.clone() });
        ControlFlow::Continue(())
    });
    out
}

/// Closure of a factorization under all braid moves.
#[derive(Clone, Debug)]
pub struct HurwitzOrbit {
    seed: Factorization,
    members: Vec<u64>,
    index: FxHashSet<u64>,
    exhausted: bool,
    cap: usize,
}

impl HurwitzOrbit {
    pub fn seed(&self) -> &Factorization {
        &self.seed
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// False when the search stopped at the cap before closing up.
    pub fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Members in breadth-first discovery order.
    pub fn members(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let len = self.seed.len();
        self.members.iter().map(move |&k| unpack(k, len))
    }

    pub fn contains(&self, tuple: &[usize]) -> bool {
        tuple.len() == self.seed.len() && self.index.contains(&pack(tuple))
    }
}

struct Bfs {
    members: Vec<u64>,
    index: FxHashSet<u64>,
    exhausted: bool,
}

/// Level-synchronous BFS; the neighbor list of a level is produced in
/// frontier order, so discovery order matches a FIFO queue regardless of
/// the execution mode. `stop` is consulted on each newly found member.
fn orbit_bfs(
    group: &CoxeterGroup,
    seed: u64,
    len: usize,
    cap: usize,
    exec: Execution,
    mut stop: impl FnMut(u64) -> bool,
) -> Bfs {
    let mut index = FxHashSet::default();
    index.insert(seed);
    let mut members = vec![seed];
    if stop(seed) {
        return Bfs { members, index, exhausted: false };
    }
    let mut frontier = vec![seed];
    while !frontier.is_empty() {
        let neighbors = exec.flat_map(&frontier, |&key, out| {
            for i in 0..len.saturating_sub(1) {
                out.push(move_key(group, key, len, i, Direction::Forward));
                out.push(move_key(group, key, len, i, Direction::Inverse));
            }
        });
        let mut next = Vec::new();
        for key in neighbors {
            if !index.insert(key) {
                continue;
            }
            if members.len() == cap {
                index.remove(&key);
                return Bfs { members, index, exhausted: false };
            }
            members.push(key);
            next.push(key);
            if stop(key) {
                return Bfs { members, index, exhausted: false };
            }
        }
        frontier = next;
    }
    Bfs { members, index, exhausted: true }
}

/// Hurwitz orbit of `f`, capped at `cap` members.
pub fn hurwitz_orbit(group: &CoxeterGroup, f: &Factorization, cap: usize, exec: Execution) -> HurwitzOrbit {
    let len = f.len();
    let bfs = orbit_bfs(group, pack(f.tuple()), len, cap, exec, |_| false);
    if cfg!(debug_assertions) {
        for &k in &bfs.members {
            let t = unpack(k, len);
            debug_assert_eq!(
                group.element_from_word(&t).ok().as_ref(),
                Some(f.product()),
                "Hurwitz move changed the product"
            );
        }
    }
    HurwitzOrbit { seed: f.clone(), members: bfs.members, index: bfs.index, exhausted: bfs.exhausted, cap }
}

/// Outcome of comparing one Hurwitz orbit with all of `Red_T(w)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Transitivity {
    /// The orbit of `seed` is all of `Red_T(w)`.
    Transitive { red_count: usize, orbit_size: usize, seed: Vec<usize> },
    /// `outside` is a reduced factorization not in the orbit of `seed`.
    Intransitive { red_count: usize, orbit_size: usize, seed: Vec<usize>, outside: Vec<usize> },
    /// A search exceeded the cap.
    Indeterminate { cap: usize },
}

impl Transitivity {
    pub fn is_transitive(&self) -> Option<bool> {
        match self {
            Self::Transitive { .. } => Some(true),
            Self::Intransitive { .. } => Some(false),
            Self::Indeterminate { .. } => None,
        }
    }
}

/// Decides whether the Hurwitz action on `Red_T(w)` is transitive.
pub fn is_hurwitz_transitive(group: &CoxeterGroup, w: &GroupElement, cap: usize, exec: Execution) -> Transitivity {
    let mut en = ReducedEnumerator::new(group);
    let Some(red) = en.keys(w, cap) else {
        return Transitivity::Indeterminate { cap };
    };
    let len = group.reflection_length(w);
    let seed = red[0];
    let bfs = orbit_bfs(group, seed, len, cap, exec, |_| false);
    if !bfs.exhausted {
        return Transitivity::Indeterminate { cap };
    }
    let seed_t = unpack(seed, len);
    match red.iter().find(|k| !bfs.index.contains(k)) {
        None => {
            debug_assert_eq!(bfs.members.len(), red.len());
            Transitivity::Transitive { red_count: red.len(), orbit_size: bfs.members.len(), seed: seed_t }
        }
        Some(&out) => Transitivity::Intransitive {
            red_count: red.len(),
            orbit_size: bfs.members.len(),
            seed: seed_t,
            outside: unpack(out, len),
        },
    }
}

/// Reflections seen in the last position across the orbit of a factorization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coverage {
    /// Reflections seen in the last slot, sorted.
    pub covered: Vec<usize>,
    /// Reflections below the product in absolute order: every last entry
    /// lies here, so the search stops once all of them are seen.
    pub possible: Vec<usize>,
    pub members_visited: usize,
    /// Orbit closed up without hitting the cap.
    pub exhausted: bool,
}

impl Coverage {
    pub fn is_complete(&self) -> bool {
        self.covered == self.possible
    }

    /// `None` when the cap stopped the search short of full coverage.
    pub fn verdict(&self) -> Option<bool> {
        if self.is_complete() {
            Some(true)
        } else if self.exhausted {
            Some(false)
        } else {
            None
        }
    }
}

/// Reflections occurring in the last position across the orbit of `f`,
/// with early exit once every reflection below the product has appeared.
///
/// Any entry of an orbit member can be carried to the last position inside
/// the orbit: `σ_i` sends `(…, t_i, t_{i+1}, …)` to `(…, t_i t_{i+1} t_i, t_i, …)`,
/// moving `t_i` one step right. So the last-slot set is the set of all
/// entries of all members, and the search records every position.
pub fn last_slot_coverage(group: &CoxeterGroup, f: &Factorization, cap: usize, exec: Execution) -> Coverage {
    let possible = group.reflections_below(f.product());
    let len = f.len();
    if len == 0 {
        return Coverage { covered: Vec::new(), possible, members_visited: 1, exhausted: true };
    }
    let mut seen = vec![false; group.num_reflections()];
    let mut remaining = possible.len();
    let bfs = orbit_bfs(group, pack(f.tuple()), len, cap, exec, |key| {
        for k in 0..len {
            if !std::mem::replace(&mut seen[entry(key, len, k) as usize], true) {
                remaining -= 1;
            }
        }
        remaining == 0
    });
    let covered = (0..seen.len()).filter(|&t| seen[t]).collect();
    Coverage { covered, possible, members_visited: bfs.members.len(), exhausted: bfs.exhausted }
}
