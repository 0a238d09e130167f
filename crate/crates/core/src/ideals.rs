//! Thick tensor-ideals as admissible point sets.
//!
//! A set of spectrum points is admissible when (a) a Zero-slot member pulls
//! in every nonzero slot of its class, and (b) a Prime(p) member pulls in
//! every class that is conjugate-p-subnormal below it. Admissible sets are
//! exactly the specialization-closed (= Thomason) subsets, and classify the
//! thick tensor-ideals; the two characterizations are implemented on
//! separate routes and tested against each other.

use std::collections::{BTreeSet, HashMap};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::spectrum::{GeneratorObject, PrimeSlot, SpecPoint, SpecSpace};

/// Cap on the number of down-sets materialized by the local enumeration;
/// beyond it only the count is returned.
pub const LIST_CAP: usize = 1 << 20;

/// Guardrails on the counting recursion (memo entries) and on the listing
/// walk fallback for oversized components.
const MEMO_CAP: usize = 1 << 21;
const COUNT_LEAF_CAP: u128 = 1 << 24;

/// A validated admissible set: point indices into its space, satisfying the
/// two closure conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleSet {
    members: BTreeSet<usize>,
}

impl AdmissibleSet {
    /// Wrap a point set, checking admissibility.
    pub fn new(space: &SpecSpace, points: &BTreeSet<SpecPoint>) -> Result<AdmissibleSet> {
        if !is_admissible(space, points)? {
            return Err(Error::NotAdmissible);
        }
        let members = points
            .iter()
            .map(|&p| space.point_index(p))
            .collect::<Result<BTreeSet<usize>>>()?;
        Ok(AdmissibleSet { members })
    }

    pub fn members(&self) -> &BTreeSet<usize> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn points(&self, space: &SpecSpace) -> Vec<SpecPoint> {
        self.members.iter().map(|&i| space.points()[i]).collect()
    }

    /// Serialization: sorted point tokens.
    pub fn tokens(&self, space: &SpecSpace) -> Vec<String> {
        self.members.iter().map(|&i| space.point_token(i)).collect()
    }
}

/// Conditions (a) and (b), checked literally.
pub fn is_admissible(space: &SpecSpace, points: &BTreeSet<SpecPoint>) -> Result<bool> {
    let mut indices = BTreeSet::new();
    for &p in points {
        indices.insert(space.point_index(p)?);
    }
    is_admissible_indices(space, &indices)
}

pub fn is_admissible_indices(space: &SpecSpace, members: &BTreeSet<usize>) -> Result<bool> {
    let contains = |p: SpecPoint| -> bool {
        space
            .point_index(p)
            .map(|i| members.contains(&i))
            .unwrap_or(false)
    };
    for &i in members {
        let point = space.points()[i];
        match point.slot {
            PrimeSlot::Zero => {
                for &slot in space.slots() {
                    if slot != PrimeSlot::Zero
                        && !contains(SpecPoint {
                            class: point.class,
                            slot,
                        })
                    {
                        return Ok(false);
                    }
                }
            }
            PrimeSlot::Prime(p) => {
                for k in 0..space.classes().len() {
                    if space.class_conj_p_subnormal(k, point.class, p)?
                        && !contains(SpecPoint {
                            class: k,
                            slot: point.slot,
                        })
                    {
                        return Ok(false);
                    }
                }
            }
            // a generic-prime member pulls in only itself
            PrimeSlot::Generic => {}
        }
    }
    Ok(true)
}

/// The smallest admissible superset: fixpoint of conditions (a) and (b).
pub fn admissible_closure(space: &SpecSpace, seed: &BTreeSet<SpecPoint>) -> Result<AdmissibleSet> {
    let mut members = BTreeSet::new();
    for &p in seed {
        members.insert(space.point_index(p)?);
    }
    loop {
        let mut grew = false;
        for i in members.clone() {
            let point = space.points()[i];
            match point.slot {
                PrimeSlot::Zero => {
                    for &slot in space.slots() {
                        if slot != PrimeSlot::Zero {
                            let j = space.point_index(SpecPoint {
                                class: point.class,
                                slot,
                            })?;
                            grew |= members.insert(j);
                        }
                    }
                }
                PrimeSlot::Prime(p) => {
                    for k in 0..space.classes().len() {
                        if space.class_conj_p_subnormal(k, point.class, p)? {
                            let j = space.point_index(SpecPoint {
                                class: k,
                                slot: point.slot,
                            })?;
                            grew |= members.insert(j);
                        }
                    }
                }
                PrimeSlot::Generic => {}
            }
        }
        if !grew {
            break;
        }
    }
    Ok(AdmissibleSet { members })
}

/// The thick tensor-ideal generated by a family of orbit generators:
/// the admissible closure of the union of their supports.
pub fn support_of_objects(space: &SpecSpace, gens: &[GeneratorObject]) -> Result<AdmissibleSet> {
    let mut seed = BTreeSet::new();
    for &g in gens {
        seed.extend(space.generator_support(g)?);
    }
    admissible_closure(space, &seed)
}

/// Result of the p-local enumeration: the slice points (class-major, Zero
/// before Prime(p)), the number of admissible sets, and — when requested and
/// under the cap — the full list, each set given by indices into `points`,
/// in the canonical DFS enumeration order.
#[derive(Clone, Debug)]
pub struct LocalEnumeration {
    pub points: Vec<SpecPoint>,
    pub count: u128,
    pub count_is_exact: bool,
    pub sets: Option<Vec<BTreeSet<usize>>>,
}

/// The p-local slice poset: points (class-major, Zero before Prime(p)) and
/// its order relation `leq[i][j]` = point i lies in the closure of point j.
fn build_slice(space: &SpecSpace, p: u64) -> Result<(Vec<SpecPoint>, Vec<Vec<bool>>)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let k = space.classes().len();
    let slots = [PrimeSlot::Zero, PrimeSlot::Prime(p)];
    let points: Vec<SpecPoint> = (0..k)
        .flat_map(|class| slots.iter().map(move |&slot| SpecPoint { class, slot }))
        .collect();
    let m = points.len();
    let mut leq = vec![vec![false; m]; m];
    for (i, a) in points.iter().enumerate() {
        for (j, b) in points.iter().enumerate() {
            leq[i][j] = match (a.slot, b.slot) {
                (PrimeSlot::Prime(_), _) => space.class_conj_p_subnormal(a.class, b.class, p)?,
                (PrimeSlot::Zero, PrimeSlot::Zero) => a.class == b.class,
                (PrimeSlot::Zero, _) => false,
                // the slice has no generic slot
                (PrimeSlot::Generic, _) => unreachable!(),
            };
        }
    }
    Ok((points, leq))
}

/// Number of admissible subsets of the p-local slice, without materializing
/// them. The bool reports whether the count is exact (it is, except past the
/// guardrails on pathological inputs).
pub fn count_admissible_local(space: &SpecSpace, p: u64) -> Result<(u128, bool)> {
    let (_, leq) = build_slice(space, p)?;
    Ok(count_slice(&leq))
}

fn count_slice(leq: &[Vec<bool>]) -> (u128, bool) {
    let m = leq.len();
    let component = components(leq);
    let n_components = component.iter().copied().max().map_or(0, |c| c + 1);
    let mut count: u128 = 1;
    let mut count_is_exact = true;
    for c in 0..n_components {
        let ids: Vec<usize> = (0..m).filter(|&i| component[i] == c).collect();
        let (sub_count, exact) = count_downsets(&ids, leq);
        count_is_exact &= exact;
        count = count.saturating_mul(sub_count);
    }
    (count, count_is_exact)
}

/// Enumerate every admissible subset of the p-local slice
/// {Zero, Prime(p)} × Con(G). For p not dividing |G| the slice is a disjoint
/// union of 2-chains and the count is 3^|Con(G)|. Above the listing cap only
/// the count is returned.
pub fn enumerate_admissible_local(space: &SpecSpace, p: u64) -> Result<LocalEnumeration> {
    enumerate_admissible_local_capped(space, p, LIST_CAP)
}

pub fn enumerate_admissible_local_capped(
    space: &SpecSpace,
    p: u64,
    list_cap: usize,
) -> Result<LocalEnumeration> {
    let (points, leq) = build_slice(space, p)?;
    let m = points.len();
    let (count, count_is_exact) = count_slice(&leq);
    let sets = if count_is_exact && count <= list_cap as u128 {
        let all: Vec<usize> = (0..m).collect();
        Some(list_downsets(&all, &leq))
    } else {
        None
    };
    Ok(LocalEnumeration {
        points,
        count,
        count_is_exact,
        sets,
    })
}

/// Connected components of the comparability graph.
fn components(leq: &[Vec<bool>]) -> Vec<usize> {
    let m = leq.len();
    let mut component = vec![usize::MAX; m];
    let mut next = 0;
    for start in 0..m {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = next;
        while let Some(i) = stack.pop() {
            for j in 0..m {
                if component[j] == usize::MAX && (leq[i][j] || leq[j][i]) {
                    component[j] = next;
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    component
}

/// A linear extension (minimal elements first; ties by index).
fn linear_extension(ids: &[usize], leq: &[Vec<bool>]) -> Vec<usize> {
    let mut remaining: Vec<usize> = ids.to_vec();
    let mut out = Vec::with_capacity(ids.len());
    while !remaining.is_empty() {
        let pos = remaining
            .iter()
            .position(|&i| remaining.iter().all(|&j| j == i || !leq[j][i] || leq[i][j]))
            .expect("a finite poset has a minimal element");
        out.push(remaining.remove(pos));
    }
    out
}

/// Visit every down-set of the sub-poset on `ids` exactly once, in the
/// deterministic exclude-first DFS order over a fixed linear extension.
fn walk_downsets(ids: &[usize], leq: &[Vec<bool>], mut on_leaf: impl FnMut(&[usize]) -> bool) {
    let linext = linear_extension(ids, leq);
    // strict predecessors of each point within the component
    let preds: Vec<Vec<usize>> = linext
        .iter()
        .map(|&i| {
            ids.iter()
                .copied()
                .filter(|&j| j != i && leq[j][i])
                .collect()
        })
        .collect();
    let flags_len = ids.iter().copied().max().map_or(0, |m| m + 1);
    let mut flags = vec![false; flags_len];
    let mut chosen: Vec<usize> = Vec::new();
    let mut stop = false;
    walk(
        &linext,
        &preds,
        0,
        &mut chosen,
        &mut flags,
        &mut on_leaf,
        &mut stop,
    );

    #[allow(clippy::too_many_arguments)]
    fn walk(
        linext: &[usize],
        preds: &[Vec<usize>],
        t: usize,
        chosen: &mut Vec<usize>,
        flags: &mut [bool],
        on_leaf: &mut impl FnMut(&[usize]) -> bool,
        stop: &mut bool,
    ) {
        if *stop {
            return;
        }
        if t == linext.len() {
            if !on_leaf(chosen) {
                *stop = true;
            }
            return;
        }
        // exclude-first branching
        walk(linext, preds, t + 1, chosen, flags, on_leaf, stop);
        if *stop {
            return;
        }
        if preds[t].iter().all(|&p| flags[p]) {
            chosen.push(linext[t]);
            flags[linext[t]] = true;
            walk(linext, preds, t + 1, chosen, flags, on_leaf, stop);
            flags[linext[t]] = false;
            chosen.pop();
        }
    }
}

fn count_downsets(ids: &[usize], leq: &[Vec<bool>]) -> (u128, bool) {
    if let Some(count) = count_downsets_masked(ids, leq) {
        return (count, true);
    }
    // oversized component: walk with a leaf cap and report a lower bound
    let mut count: u128 = 0;
    let mut exact = true;
    walk_downsets(ids, leq, |_| {
        count += 1;
        if count > COUNT_LEAF_CAP {
            exact = false;
            return false;
        }
        true
    });
    (count, exact)
}

/// Exact count for a component of at most 64 points: with x minimal,
/// count(P) = count(P − up(x)) + count(P − {x}), memoized on the mask of
/// remaining points.
fn count_downsets_masked(ids: &[usize], leq: &[Vec<bool>]) -> Option<u128> {
    let m = ids.len();
    if m > 64 {
        return None;
    }
    let bit = |i: usize| 1u64 << i;
    let mut up = vec![0u64; m];
    let mut down = vec![0u64; m];
    for i in 0..m {
        for j in 0..m {
            if leq[ids[i]][ids[j]] {
                up[i] |= bit(j);
                down[j] |= bit(i);
            }
        }
    }
    let full: u64 = if m == 64 { !0 } else { bit(m) - 1 };
    let mut memo: HashMap<u64, u128> = HashMap::new();

    fn rec(mask: u64, up: &[u64], down: &[u64], memo: &mut HashMap<u64, u128>) -> Option<u128> {
        if mask == 0 {
            return Some(1);
        }
        if let Some(&v) = memo.get(&mask) {
            return Some(v);
        }
        if memo.len() >= MEMO_CAP {
            return None;
        }
        // least minimal element of the sub-poset
        let x = (0..64)
            .find(|&i| mask & (1 << i) != 0 && down[i] & mask == 1 << i)
            .expect("a nonempty finite poset has a minimal element");
        let excluded = rec(mask & !up[x], up, down, memo)?;
        let included = rec(mask & !(1u64 << x), up, down, memo)?;
        let v = excluded + included;
        memo.insert(mask, v);
        Some(v)
    }

    rec(full, &up, &down, &mut memo)
}

fn list_downsets(ids: &[usize], leq: &[Vec<bool>]) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    walk_downsets(ids, leq, |chosen| {
        out.push(chosen.iter().copied().collect());
        true
    });
    out
}
