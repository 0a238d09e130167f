//! Finite permutation group engine.
//!
//! A [`PermGroup`] stores the complete, sorted element table of a finite
//! group of permutations together with multiplication/inversion tables.
//! Subgroups are plain sorted index sets into that table; every subgroup
//! operation lives on [`PermGroup`] and takes the subgroup by reference, so
//! all values are immutable after construction and freely shareable.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::arith::is_prime;
use crate::descriptor;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Threshold (group order) above which the full multiplication table is not
/// materialized and products fall back to compose-and-search.
const MULT_TABLE_MAX_ORDER: usize = 1024;

/// A finite group presented by permutations on `{0, …, degree-1}`, with its
/// full element table (sorted; the identity is always index 0).
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    name: Option<String>,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    mult: Option<Vec<u32>>,
    inv: Vec<u32>,
    elem_orders: Vec<usize>,
}

/// A subgroup, stored as a sorted set of indices into the parent's element
/// table. All operations live on the parent [`PermGroup`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, element: usize) -> bool {
        self.members.binary_search(&element).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Sorted intersection; the intersection of two subgroups is a subgroup.
    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        Subgroup {
            members: self
                .members
                .iter()
                .copied()
                .filter(|&m| other.contains(m))
                .collect(),
        }
    }

    fn from_sorted(members: Vec<usize>) -> Subgroup {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Subgroup { members }
    }
}

impl PermGroup {
    /// Default cap on the group order accepted by the builders.
    pub const DEFAULT_ORDER_CAP: usize = 2000;

    /// Build a group from a descriptor string (see the descriptor grammar in
    /// the README: `C<n>`, `D<n>` with n the ORDER, `Dih(<n>)`, `Q8`, `S<n>`,
    /// `A<n>`, products with `x`, or `perm:<cycles>[,<cycles>…]`).
    pub fn from_descriptor(descriptor: &str) -> Result<PermGroup> {
        Self::from_descriptor_capped(descriptor, Self::DEFAULT_ORDER_CAP)
    }

    /// Same as [`PermGroup::from_descriptor`] with an explicit order cap.
    pub fn from_descriptor_capped(descriptor: &str, cap: usize) -> Result<PermGroup> {
        let parsed = descriptor::parse(descriptor)?;
        Self::from_generators(parsed.degree, parsed.generators, Some(parsed.name), cap)
    }

    /// Build a group as the closure of explicit permutation generators.
    pub fn from_generators(
        degree: usize,
        generators: Vec<Permutation>,
        name: Option<String>,
        cap: usize,
    ) -> Result<PermGroup> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::Descriptor {
                    descriptor: g.to_string(),
                    reason: format!("generator degree {} != group degree {degree}", g.degree()),
                });
            }
        }
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        set.insert(Permutation::identity(degree));
        let mut frontier: Vec<Permutation> = vec![Permutation::identity(degree)];
        while let Some(x) = frontier.pop() {
            for g in &generators {
                let y = g.compose(&x);
                if !set.contains(&y) {
                    set.insert(y.clone());
                    if set.len() > cap {
                        return Err(Error::CapExceeded {
                            cap,
                            reached: set.len(),
                        });
                    }
                    frontier.push(y);
                }
            }
        }
        Ok(Self::from_element_set(degree, name, generators, set))
    }

    /// Assemble the tables from a complete element set (must already be
    /// closed under composition and inversion).
    fn from_element_set(
        degree: usize,
        name: Option<String>,
        generators: Vec<Permutation>,
        set: BTreeSet<Permutation>,
    ) -> PermGroup {
        let elements: Vec<Permutation> = set.into_iter().collect();
        let n = elements.len();
        let index_of = |p: &Permutation| -> u32 {
            elements.binary_search(p).expect("element table is closed") as u32
        };
        let mult = if n <= MULT_TABLE_MAX_ORDER {
            let mut table = vec![0u32; n * n];
            for (a, pa) in elements.iter().enumerate() {
                for (b, pb) in elements.iter().enumerate() {
                    table[a * n + b] = index_of(&pa.compose(pb));
                }
            }
            Some(table)
        } else {
            None
        };
        let inv: Vec<u32> = elements.iter().map(|p| index_of(&p.inverse())).collect();
        let elem_orders: Vec<usize> = elements.iter().map(Permutation::order).collect();
        PermGroup {
            degree,
            name,
            generators,
            elements,
            mult,
            inv,
            elem_orders,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("G{}", self.order()))
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &Permutation {
        &self.elements[index]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    /// Order of the element at `index`.
    pub fn element_order(&self, index: usize) -> usize {
        self.elem_orders[index]
    }

    /// Index of the product `elements[a] ∘ elements[b]` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.mult {
            Some(table) => table[a * self.order() + b] as usize,
            None => self
                .index_of(&self.elements[a].compose(&self.elements[b]))
                .expect("element table is closed"),
        }
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Index of `g a g^{-1}`.
    pub fn conj(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(g, a), self.inverse_of(g))
    }

    /// Two groups with identical degree and element tables are interchangeable.
    pub fn same_table(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }

    // ------------------------------------------------------------------
    // subgroups
    // ------------------------------------------------------------------

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { members: vec![0] }
    }

    pub fn full_subgroup(&self) -> Subgroup {
        Subgroup {
            members: (0..self.order()).collect(),
        }
    }

    /// Closure of a set of element indices under multiplication.
    pub fn generated_subgroup(&self, seed: &[usize]) -> Subgroup {
        let n = self.order();
        let mut in_set = vec![false; n];
        in_set[0] = true;
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for &g in seed {
                let y = self.mul(g, x);
                if !in_set[y] {
                    in_set[y] = true;
                    frontier.push(y);
                }
            }
        }
        Subgroup {
            members: (0..n).filter(|&i| in_set[i]).collect(),
        }
    }

    /// Check that a member set is a subgroup (contains the identity and is
    /// closed under multiplication; inverses follow in a finite group).
    pub fn is_subgroup(&self, s: &Subgroup) -> bool {
        if !s.contains(0) || s.members.iter().any(|&m| m >= self.order()) {
            return false;
        }
        for &a in &s.members {
            for &b in &s.members {
                if !s.contains(self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    pub fn conjugate_subgroup(&self, s: &Subgroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = s.members.iter().map(|&m| self.conj(m, g)).collect();
        members.sort_unstable();
        Subgroup { members }
    }

    /// Distinct conjugates of `s`, sorted by member set.
    pub fn conjugate_orbit(&self, s: &Subgroup) -> Vec<Subgroup> {
        let mut orbit: BTreeSet<Vec<usize>> = BTreeSet::new();
        for g in 0..self.order() {
            orbit.insert(self.conjugate_subgroup(s, g).members);
        }
        orbit.into_iter().map(Subgroup::from_sorted).collect()
    }

    /// Lexicographically least member set among all conjugates of `s`.
    pub fn canonical_class_representative(&self, s: &Subgroup) -> Subgroup {
        let mut best = s.members.clone();
        for g in 0..self.order() {
            let c = self.conjugate_subgroup(s, g).members;
            if c < best {
                best = c;
            }
        }
        Subgroup::from_sorted(best)
    }

    pub fn normalizer(&self, s: &Subgroup) -> Subgroup {
        let members: Vec<usize> = (0..self.order())
            .filter(|&g| self.conjugate_subgroup(s, g) == *s)
            .collect();
        Subgroup::from_sorted(members)
    }

    /// Is `n` a normal subgroup of `h`? Requires `n ⊆ h`.
    pub fn is_normal_in(&self, n: &Subgroup, h: &Subgroup) -> bool {
        n.is_subset_of(h)
            && h.members
                .iter()
                .all(|&g| self.conjugate_subgroup(n, g) == *n)
    }

    /// Every subgroup, exactly once, ascending by order then member set.
    ///
    /// Layered cyclic-extension: seed with all cyclic subgroups, then join
    /// pairs and close until no new subgroup appears.
    pub fn all_subgroups(&self) -> Vec<Subgroup> {
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        for x in 0..self.order() {
            known.insert(self.generated_subgroup(&[x]).members);
        }
        loop {
            let list: Vec<Vec<usize>> = known.iter().cloned().collect();
            let mut added = false;
            for i in 0..list.len() {
                for j in (i + 1)..list.len() {
                    let a = &list[i];
                    let b = &list[j];
                    if is_subset(a, b) || is_subset(b, a) {
                        continue;
                    }
                    let mut seed = a.clone();
                    seed.extend_from_slice(b);
                    let joined = self.generated_subgroup(&seed).members;
                    if !known.contains(&joined) {
                        known.insert(joined);
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let mut subs: Vec<Subgroup> = known.into_iter().map(Subgroup::from_sorted).collect();
        subs.sort_by(|a, b| (a.order(), &a.members).cmp(&(b.order(), &b.members)));
        subs
    }

    /// Conjugacy classes of subgroups, sorted by (order, representative).
    /// Each representative is the lexicographic minimum of its orbit.
    pub fn subgroup_classes(&self) -> Vec<SubgroupClass> {
        let mut buckets: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for s in self.all_subgroups() {
            let rep = self.canonical_class_representative(&s);
            *buckets.entry(rep.members).or_insert(0) += 1;
        }
        let mut classes: Vec<SubgroupClass> = buckets
            .into_iter()
            .map(|(members, class_size)| SubgroupClass {
                representative: Subgroup::from_sorted(members),
                class_size,
            })
            .collect();
        classes.sort_by(|a, b| {
            (a.order(), &a.representative.members).cmp(&(b.order(), &b.representative.members))
        });
        classes
    }

    /// O^p(H): the smallest normal subgroup of `h` with p-group quotient,
    /// generated by all elements of `h` of order coprime to `p`.
    pub fn o_p_residual(&self, h: &Subgroup, p: u64) -> Result<Subgroup> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let seed: Vec<usize> = h
            .members
            .iter()
            .copied()
            .filter(|&m| !(self.elem_orders[m] as u64).is_multiple_of(p))
            .collect();
        Ok(self.generated_subgroup(&seed))
    }

    /// Is there a tower K = K_0 ⊴ K_1 ⊴ … ⊴ K_t = H with every index p?
    /// Decided by the containment criterion O^p(H) ⊆ K. Requires `k ⊆ h`.
    pub fn is_p_subnormal(&self, k: &Subgroup, h: &Subgroup, p: u64) -> Result<bool> {
        if !k.is_subset_of(h) {
            return Err(Error::NotContained {
                sub: k.order(),
                of: h.order(),
            });
        }
        Ok(self.o_p_residual(h, p)?.is_subset_of(k))
    }

    /// Is some conjugate of `k`'s representative a p-subnormal subgroup of
    /// `h`'s representative?
    pub fn is_conjugate_p_subnormal(
        &self,
        k: &SubgroupClass,
        h: &SubgroupClass,
        p: u64,
    ) -> Result<bool> {
        self.check_class(k)?;
        self.check_class(h)?;
        let residual = self.o_p_residual(&h.representative, p)?;
        if residual.order() > k.order() {
            return Ok(false);
        }
        for conj in self.conjugate_orbit(&k.representative) {
            if conj.is_subset_of(&h.representative) && residual.is_subset_of(&conj) {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn check_class(&self, class: &SubgroupClass) -> Result<()> {
        let rep = &class.representative;
        let ok = rep.members.iter().all(|&m| m < self.order())
            && self.order().is_multiple_of(rep.order())
            && self.is_subgroup(rep);
        if ok {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// The members of `h` as a standalone [`PermGroup`] on the same points.
    pub fn subgroup_group(&self, h: &Subgroup) -> PermGroup {
        let mut gens: Vec<usize> = Vec::new();
        let mut have = self.generated_subgroup(&gens);
        for &m in &h.members {
            if !have.contains(m) {
                gens.push(m);
                have = self.generated_subgroup(&gens);
            }
        }
        debug_assert_eq!(have, *h);
        let set: BTreeSet<Permutation> = h
            .members
            .iter()
            .map(|&m| self.elements[m].clone())
            .collect();
        let generators = gens.iter().map(|&g| self.elements[g].clone()).collect();
        PermGroup::from_element_set(self.degree, None, generators, set)
    }

    /// Display labels for conjugacy classes, deterministic and unique.
    ///
    /// Labels only use order/exponent-level structure: `1`, `C<n>` for cyclic
    /// classes, `V4`, `S3`, `E<n>` for elementary abelian, `Q8`/`D8` for the
    /// nonabelian order-8 types, the group's own name for the full class, and
    /// `U<n>` otherwise; repeated names get `a`, `b`, … suffixes.
    pub fn class_labels(&self, classes: &[SubgroupClass]) -> Vec<String> {
        let base: Vec<String> = classes.iter().map(|c| self.base_label(c)).collect();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for b in &base {
            *counts.entry(b).or_insert(0) += 1;
        }
        let mut seen: BTreeMap<String, usize> = BTreeMap::new();
        base.iter()
            .map(|b| {
                if counts[b.as_str()] == 1 {
                    b.clone()
                } else {
                    let k = seen.entry(b.clone()).or_insert(0);
                    let label = format!("{b}{}", (b'a' + *k as u8) as char);
                    *k += 1;
                    label
                }
            })
            .collect()
    }

    fn base_label(&self, class: &SubgroupClass) -> String {
        let rep = &class.representative;
        let n = rep.order();
        if n == 1 {
            return "1".into();
        }
        if rep.members.iter().any(|&m| self.elem_orders[m] == n) {
            return format!("C{n}");
        }
        if n == 4 {
            return "V4".into();
        }
        if n == self.order() {
            return self.display_name().replace(' ', "");
        }
        if n == 6 {
            return "S3".into();
        }
        let abelian = rep.members.iter().all(|&a| {
            rep.members
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        });
        let exponents: BTreeSet<usize> = rep
            .members
            .iter()
            .filter(|&&m| m != 0)
            .map(|&m| self.elem_orders[m])
            .collect();
        if abelian && exponents.len() == 1 {
            let p = *exponents.iter().next().unwrap();
            if is_prime(p as u64) {
                return format!("E{n}");
            }
        }
        if n == 8 && !abelian {
            let involutions = rep
                .members
                .iter()
                .filter(|&&m| self.elem_orders[m] == 2)
                .count();
            return if involutions == 1 {
                "Q8".into()
            } else {
                "D8".into()
            };
        }
        format!("U{n}")
    }
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|m| b.binary_search(m).is_ok())
}

/// A conjugacy class of subgroups: canonical representative plus orbit size.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubgroupClass {
    representative: Subgroup,
    class_size: usize,
}

impl SubgroupClass {
    pub fn representative(&self) -> &Subgroup {
        &self.representative
    }

    pub fn class_size(&self) -> usize {
        self.class_size
    }

    pub fn order(&self) -> usize {
        self.representative.order()
    }
}

/// A quotient G/N: the quotient group acting faithfully on cosets, the
/// projection on element indices, and the subgroup correspondence.
#[derive(Clone, Debug)]
pub struct QuotientPresentation {
    source: Arc<PermGroup>,
    kernel: Subgroup,
    quotient: Arc<PermGroup>,
    /// source element index → quotient element index
    projection: Vec<usize>,
    /// least source element index in each coset, indexed by coset
    coset_reps: Vec<usize>,
}

impl QuotientPresentation {
    /// Build G/N. Errors if `kernel` is not a normal subgroup of `group`.
    pub fn build(group: &Arc<PermGroup>, kernel: &Subgroup) -> Result<QuotientPresentation> {
        if !group.is_subgroup(kernel) {
            return Err(Error::NotSubgroup);
        }
        if !group.is_normal_in(kernel, &group.full_subgroup()) {
            return Err(Error::NotNormal(kernel.order()));
        }
        let n = group.order();
        let mut elem_to_coset = vec![usize::MAX; n];
        let mut coset_reps: Vec<usize> = Vec::new();
        for e in 0..n {
            if elem_to_coset[e] != usize::MAX {
                continue;
            }
            let c = coset_reps.len();
            coset_reps.push(e);
            for &k in kernel.members() {
                elem_to_coset[group.mul(e, k)] = c;
            }
        }
        let cosets = coset_reps.len();
        let action = |g: usize| -> Permutation {
            Permutation::from_images(
                (0..cosets)
                    .map(|c| elem_to_coset[group.mul(g, coset_reps[c])])
                    .collect(),
            )
            .expect("coset action is a permutation")
        };
        let set: BTreeSet<Permutation> = (0..n).map(action).collect();
        let mut generators: Vec<Permutation> = Vec::new();
        for g in group.generators() {
            let idx = group.index_of(g).expect("generator is in the table");
            let image = action(idx);
            if !image.is_identity() && !generators.contains(&image) {
                generators.push(image);
            }
        }
        let name = format!("{}/N{}", group.display_name(), kernel.order());
        let quotient = Arc::new(PermGroup::from_element_set(
            cosets,
            Some(name),
            generators,
            set,
        ));
        debug_assert_eq!(quotient.order() * kernel.order(), group.order());
        let projection: Vec<usize> = (0..n)
            .map(|g| quotient.index_of(&action(g)).expect("image is in quotient"))
            .collect();
        Ok(QuotientPresentation {
            source: Arc::clone(group),
            kernel: kernel.clone(),
            quotient,
            projection,
            coset_reps,
        })
    }

    pub fn source(&self) -> &Arc<PermGroup> {
        &self.source
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn quotient(&self) -> &Arc<PermGroup> {
        &self.quotient
    }

    pub fn project_element(&self, g: usize) -> usize {
        self.projection[g]
    }

    /// Image subgroup KN/N of any subgroup K of the source.
    pub fn project_subgroup(&self, k: &Subgroup) -> Subgroup {
        let members: BTreeSet<usize> = k.members().iter().map(|&m| self.projection[m]).collect();
        Subgroup::from_sorted(members.into_iter().collect())
    }

    /// Preimage in the source of a subgroup of the quotient; this is the
    /// subgroup-correspondence direction {subgroups of G/N} → {K ⊇ N}.
    pub fn lift_subgroup(&self, s: &Subgroup) -> Subgroup {
        let members: Vec<usize> = (0..self.source.order())
            .filter(|&g| s.contains(self.projection[g]))
            .collect();
        Subgroup::from_sorted(members)
    }

    pub fn coset_representatives(&self) -> &[usize] {
        &self.coset_reps
    }
}
