//! The spectrum of the category of compact derived Mackey functors, as a
//! finite symbolic topological space.
//!
//! Points are pairs (conjugacy class of subgroups, prime slot) where the
//! prime slots give a finite presentation of Spec(Z): the zero ideal, one
//! explicit slot per prime dividing the group order, and a single symbolic
//! slot for all remaining primes (their fibers are topologically identical,
//! since for p not dividing |H| the only p-subnormal subgroup of H is H
//! itself). Specialization is stored as the full transitive relation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use crate::arith::{is_prime, prime_divisors};
use crate::error::{Error, Result};
use crate::group::{PermGroup, QuotientPresentation, Subgroup, SubgroupClass};

/// A point of Spec(Z) in the finite presentation.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PrimeSlot {
    /// The zero ideal (0).
    Zero,
    /// An explicit prime, stored only when it divides the group order
    /// (except in p-local slices, which may carry any prime).
    Prime(u64),
    /// All primes not dividing the group order, as one symbol.
    Generic,
}

impl fmt::Display for PrimeSlot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeSlot::Zero => write!(f, "0"),
            PrimeSlot::Prime(p) => write!(f, "{p}"),
            PrimeSlot::Generic => write!(f, "q*"),
        }
    }
}

/// A spectrum point P(class, slot); `class` indexes the space's class list.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SpecPoint {
    pub class: usize,
    pub slot: PrimeSlot,
}

/// The compact generator associated with the orbit G/H of a subgroup class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GeneratorObject {
    pub class: usize,
}

/// Chromatic height in the equivariant stable homotopy spectrum.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum ChromaticHeight {
    One,
    Infinity,
}

/// Image of a spectrum point under the embedding into the equivariant
/// stable homotopy spectrum: same class, same prime, height ∞ — except
/// rational points, which land at height 1 over the zero ideal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct ChromaticPoint {
    pub class: usize,
    pub prime: PrimeSlot,
    pub height: ChromaticHeight,
}

impl fmt::Display for ChromaticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.height {
            ChromaticHeight::One => write!(f, "(class {}, {}, 1)", self.class, self.prime),
            ChromaticHeight::Infinity => write!(f, "(class {}, {}, inf)", self.class, self.prime),
        }
    }
}

/// The finite symbolic spectrum space of a group: all points
/// (class × slot) plus the full specialization relation.
#[derive(Clone, Debug)]
pub struct SpecSpace {
    group: Arc<PermGroup>,
    classes: Vec<SubgroupClass>,
    labels: Vec<String>,
    slots: Vec<PrimeSlot>,
    points: Vec<SpecPoint>,
    /// in_closure[p][q]: point q lies in the closure of point p.
    in_closure: Vec<Vec<bool>>,
    /// subconj[k][h]: class k is conjugate to a subgroup of class h's rep.
    subconj: Vec<Vec<bool>>,
    /// per explicit prime slot: conjugate-p-subnormality between classes.
    cps: BTreeMap<u64, Vec<Vec<bool>>>,
    /// canonical representative member set → class index.
    class_lookup: BTreeMap<Vec<usize>, usize>,
}

impl SpecSpace {
    /// The full symbolic space: slots are Zero, one per prime dividing |G|,
    /// and Generic.
    pub fn build(group: &Arc<PermGroup>) -> SpecSpace {
        let mut slots = vec![PrimeSlot::Zero];
        slots.extend(
            prime_divisors(group.order() as u64)
                .into_iter()
                .map(PrimeSlot::Prime),
        );
        slots.push(PrimeSlot::Generic);
        Self::build_with_slots(group, slots)
    }

    /// The p-local slice: slots {Zero, Prime(p)}. `p` must be prime but need
    /// not divide the group order (then the prime fiber is discrete).
    pub fn build_local(group: &Arc<PermGroup>, p: u64) -> Result<SpecSpace> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::build_with_slots(
            group,
            vec![PrimeSlot::Zero, PrimeSlot::Prime(p)],
        ))
    }

    fn build_with_slots(group: &Arc<PermGroup>, slots: Vec<PrimeSlot>) -> SpecSpace {
        let classes = group.subgroup_classes();
        let labels = group.class_labels(&classes);
        let k = classes.len();
        let class_lookup: BTreeMap<Vec<usize>, usize> = classes
            .iter()
            .enumerate()
            .map(|(i, c)| (c.representative().members().to_vec(), i))
            .collect();

        let orbits: Vec<Vec<Subgroup>> = classes
            .iter()
            .map(|c| group.conjugate_orbit(c.representative()))
            .collect();

        let mut subconj = vec![vec![false; k]; k];
        for (ki, orbit) in orbits.iter().enumerate() {
            for (hi, h) in classes.iter().enumerate() {
                subconj[ki][hi] = orbit.iter().any(|c| c.is_subset_of(h.representative()));
            }
        }

        let mut cps: BTreeMap<u64, Vec<Vec<bool>>> = BTreeMap::new();
        for slot in &slots {
            if let PrimeSlot::Prime(p) = slot {
                let mut mx = vec![vec![false; k]; k];
                for (hi, h) in classes.iter().enumerate() {
                    let residual = group
                        .o_p_residual(h.representative(), *p)
                        .expect("slot primes are prime");
                    for (ki, orbit) in orbits.iter().enumerate() {
                        mx[ki][hi] = orbit.iter().any(|c| {
                            c.is_subset_of(h.representative()) && residual.is_subset_of(c)
                        });
                    }
                }
                cps.insert(*p, mx);
            }
        }

        let points: Vec<SpecPoint> = (0..k)
            .flat_map(|class| slots.iter().map(move |&slot| SpecPoint { class, slot }))
            .collect();

        let n = points.len();
        let mut in_closure = vec![vec![false; n]; n];
        for (pi, p) in points.iter().enumerate() {
            for (qi, q) in points.iter().enumerate() {
                in_closure[pi][qi] = match q.slot {
                    PrimeSlot::Prime(prime) => {
                        (p.slot == q.slot || p.slot == PrimeSlot::Zero)
                            && cps[&prime][q.class][p.class]
                    }
                    PrimeSlot::Zero => p.slot == PrimeSlot::Zero && p.class == q.class,
                    PrimeSlot::Generic => {
                        (p.slot == PrimeSlot::Generic || p.slot == PrimeSlot::Zero)
                            && p.class == q.class
                    }
                };
            }
        }

        SpecSpace {
            group: Arc::clone(group),
            classes,
            labels,
            slots,
            points,
            in_closure,
            subconj,
            cps,
            class_lookup,
        }
    }

    pub fn group(&self) -> &Arc<PermGroup> {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, class: usize) -> &str {
        &self.labels[class]
    }

    pub fn slots(&self) -> &[PrimeSlot] {
        &self.slots
    }

    pub fn points(&self) -> &[SpecPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Index of a point in this space, or a foreign-point error.
    pub fn point_index(&self, p: SpecPoint) -> Result<usize> {
        let slot_pos = self.slots.iter().position(|&s| s == p.slot);
        match slot_pos {
            Some(sp) if p.class < self.classes.len() => Ok(p.class * self.slots.len() + sp),
            _ => Err(Error::ForeignPoint {
                class: p.class,
                slot: p.slot.to_string(),
            }),
        }
    }

    /// Serialized point identity `P(<class-label>,<slot>)`.
    pub fn point_token(&self, index: usize) -> String {
        let p = self.points[index];
        format!("P({},{})", self.labels[p.class], p.slot)
    }

    /// Class index of an arbitrary subgroup of this space's group.
    pub fn class_of_subgroup(&self, s: &Subgroup) -> Result<usize> {
        let canon = self.group.canonical_class_representative(s);
        self.class_lookup
            .get(canon.members())
            .copied()
            .ok_or(Error::NotSubgroup)
    }

    /// Is class `k` conjugate to a subgroup of class `h`'s representative?
    pub fn class_subconjugate(&self, k: usize, h: usize) -> bool {
        self.subconj[k][h]
    }

    /// Conjugate-p-subnormality between classes, for any prime `p` (falls
    /// back to a direct computation when `p` has no slot in this space).
    pub fn class_conj_p_subnormal(&self, k: usize, h: usize, p: u64) -> Result<bool> {
        if let Some(mx) = self.cps.get(&p) {
            return Ok(mx[k][h]);
        }
        self.group
            .is_conjugate_p_subnormal(&self.classes[k], &self.classes[h], p)
    }

    /// True iff `q` lies in the closure of `{p}`.
    pub fn specializes(&self, q: SpecPoint, p: SpecPoint) -> Result<bool> {
        let qi = self.point_index(q)?;
        let pi = self.point_index(p)?;
        Ok(self.in_closure[pi][qi])
    }

    pub fn specializes_indices(&self, qi: usize, pi: usize) -> bool {
        self.in_closure[pi][qi]
    }

    /// The closure of `{p}` as a sorted list of points.
    pub fn closure(&self, p: SpecPoint) -> Result<Vec<SpecPoint>> {
        let pi = self.point_index(p)?;
        Ok(self
            .closure_indices(pi)
            .into_iter()
            .map(|i| self.points[i])
            .collect())
    }

    pub fn closure_indices(&self, pi: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&qi| self.in_closure[pi][qi])
            .collect()
    }

    /// Thomason test: is `s` a union of point closures? On this noetherian
    /// presentation that is exactly specialization-closedness.
    pub fn is_specialization_closed(&self, s: &BTreeSet<SpecPoint>) -> Result<bool> {
        let mut indices = BTreeSet::new();
        for &p in s {
            indices.insert(self.point_index(p)?);
        }
        Ok(self.is_specialization_closed_indices(&indices))
    }

    pub fn is_specialization_closed_indices(&self, s: &BTreeSet<usize>) -> bool {
        s.iter()
            .all(|&pi| self.closure_indices(pi).iter().all(|qi| s.contains(qi)))
    }

    /// The maximal irreducible closed subsets. These are exactly the
    /// closures of the Zero-slot points, one per conjugacy class.
    pub fn irreducible_components(&self) -> Vec<Vec<SpecPoint>> {
        let closures: Vec<BTreeSet<usize>> = (0..self.points.len())
            .map(|pi| self.closure_indices(pi).into_iter().collect())
            .collect();
        let mut components = Vec::new();
        for (pi, cl) in closures.iter().enumerate() {
            let maximal = closures
                .iter()
                .enumerate()
                .all(|(qi, other)| qi == pi || !cl.is_subset(other) || other == cl);
            let first_with_this_closure = closures[..pi].iter().all(|other| other != cl);
            if maximal && first_with_this_closure {
                components.push(cl.iter().map(|&i| self.points[i]).collect());
            }
        }
        components
    }

    /// The support of the compact generator for G/H: every point whose
    /// class is conjugate to a subgroup of H, at every slot.
    pub fn generator_support(&self, g: GeneratorObject) -> Result<Vec<SpecPoint>> {
        if g.class >= self.classes.len() {
            return Err(Error::GroupMismatch);
        }
        Ok(self
            .points
            .iter()
            .copied()
            .filter(|p| self.subconj[p.class][g.class])
            .collect())
    }

    /// Image of a point under the chromatic embedding.
    pub fn chromatic_image(&self, p: SpecPoint) -> Result<ChromaticPoint> {
        self.point_index(p)?;
        Ok(match p.slot {
            PrimeSlot::Zero => ChromaticPoint {
                class: p.class,
                prime: PrimeSlot::Zero,
                height: ChromaticHeight::One,
            },
            slot => ChromaticPoint {
                class: p.class,
                prime: slot,
                height: ChromaticHeight::Infinity,
            },
        })
    }
}

/// A point map between two spectrum spaces, presented as a family of total
/// single-valued maps: one branch per way of resolving the source space's
/// GenericPrime slot into a slot of the target space. Sources without a
/// GenericPrime slot have exactly one branch, keyed `None`.
#[derive(Clone, Debug)]
pub struct PointFamilyMap {
    branches: Vec<(Option<PrimeSlot>, Vec<usize>)>,
    target_len: usize,
}

impl PointFamilyMap {
    /// The resolutions of the source's GenericPrime slot.
    pub fn branch_slots(&self) -> Vec<Option<PrimeSlot>> {
        self.branches.iter().map(|(s, _)| *s).collect()
    }

    /// The total point map for one branch: source index → target index.
    pub fn branch(&self, slot: Option<PrimeSlot>) -> Option<&[usize]> {
        self.branches
            .iter()
            .find(|(s, _)| *s == slot)
            .map(|(_, m)| m.as_slice())
    }

    /// All target points a source point can map to, across branches.
    pub fn targets(&self, source_index: usize) -> BTreeSet<usize> {
        self.branches.iter().map(|(_, m)| m[source_index]).collect()
    }

    /// The union of the branch images.
    pub fn image(&self) -> BTreeSet<usize> {
        self.branches
            .iter()
            .flat_map(|(_, m)| m.iter().copied())
            .collect()
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }
}

/// A total single-valued point map (used for inflation).
#[derive(Clone, Debug)]
pub struct InflationMap {
    map: Vec<usize>,
}

impl InflationMap {
    pub fn apply(&self, source_index: usize) -> usize {
        self.map[source_index]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.map
    }
}

/// The map on spectra induced by restricting along H ≤ G.
///
/// `space_h` must be built on `h` as a standalone group (same points of the
/// ambient action). Sends P_H(K,𝔭) to P_G(K,𝔭); prime slots translate
/// literally, and the GenericPrime slot of the subgroup space fans out over
/// the explicit primes of G that do not divide |H|, plus G's GenericPrime.
/// The image equals the support of the generator for G/H.
pub fn restriction_map(
    space_g: &SpecSpace,
    space_h: &SpecSpace,
    h: &Subgroup,
) -> Result<PointFamilyMap> {
    let g = space_g.group();
    if !g.is_subgroup(h) {
        return Err(Error::NotSubgroup);
    }
    let expected: Vec<_> = h.members().iter().map(|&m| g.element(m).clone()).collect();
    if space_h.group().degree() != g.degree() || space_h.group().elements() != &expected[..] {
        return Err(Error::SpaceMismatch(
            "subgroup space was not built on the given subgroup".into(),
        ));
    }
    // translate each class of the subgroup space into a class of the ambient space
    let mut class_map = Vec::with_capacity(space_h.classes().len());
    for c in space_h.classes() {
        let members: Vec<usize> = c
            .representative()
            .members()
            .iter()
            .map(|&m| {
                g.index_of(space_h.group().element(m))
                    .expect("subgroup elements lie in the ambient table")
            })
            .collect();
        let sub = g.generated_subgroup(&members);
        debug_assert_eq!(sub.order(), c.order());
        class_map.push(space_g.class_of_subgroup(&sub)?);
    }
    build_family(space_g, space_h, &class_map, h.order() as u64)
}

/// The pair of maps induced by a quotient presentation G → G/N.
///
/// The inflation map is defined on all of `space_g` and sends P_G(K,𝔭) to
/// P_{G/N}(KN/N,𝔭); explicit primes not dividing |G/N| compress into the
/// quotient's GenericPrime slot. The fixed-point map sends P_{G/N}(K/N,𝔭)
/// to P_G(K,𝔭) and fans the quotient's GenericPrime out, so that
/// inflation ∘ fixed-point is the identity on `space_q`.
pub fn quotient_maps(
    space_g: &SpecSpace,
    space_q: &SpecSpace,
    qp: &QuotientPresentation,
) -> Result<(InflationMap, PointFamilyMap)> {
    if !qp.source().same_table(space_g.group()) {
        return Err(Error::SpaceMismatch(
            "quotient presentation source differs from the ambient space's group".into(),
        ));
    }
    if !qp.quotient().same_table(space_q.group()) {
        return Err(Error::SpaceMismatch(
            "quotient presentation quotient differs from the quotient space's group".into(),
        ));
    }

    // inflation: project classes, compress out-of-range primes to Generic
    let mut class_down = Vec::with_capacity(space_g.classes().len());
    for c in space_g.classes() {
        let image = qp.project_subgroup(c.representative());
        class_down.push(space_q.class_of_subgroup(&image)?);
    }
    let mut inflation = Vec::with_capacity(space_g.len());
    for p in space_g.points() {
        let slot = match p.slot {
            PrimeSlot::Zero => PrimeSlot::Zero,
            PrimeSlot::Generic => PrimeSlot::Generic,
            PrimeSlot::Prime(q) => {
                if space_q.slots().contains(&PrimeSlot::Prime(q)) {
                    PrimeSlot::Prime(q)
                } else {
                    PrimeSlot::Generic
                }
            }
        };
        inflation.push(space_q.point_index(SpecPoint {
            class: class_down[p.class],
            slot,
        })?);
    }

    // fixed points: lift classes, fan the generic slot out
    let mut class_up = Vec::with_capacity(space_q.classes().len());
    for c in space_q.classes() {
        let lifted = qp.lift_subgroup(c.representative());
        class_up.push(space_g.class_of_subgroup(&lifted)?);
    }
    let fixed = build_family(space_g, space_q, &class_up, qp.quotient().order() as u64)?;

    Ok((InflationMap { map: inflation }, fixed))
}

/// Shared construction for maps into `space_g` whose source compresses the
/// primes not dividing `source_order` into its GenericPrime slot.
fn build_family(
    space_g: &SpecSpace,
    source: &SpecSpace,
    class_map: &[usize],
    source_order: u64,
) -> Result<PointFamilyMap> {
    let translate_fixed = |slot: PrimeSlot| -> Result<PrimeSlot> {
        match slot {
            PrimeSlot::Zero => Ok(PrimeSlot::Zero),
            PrimeSlot::Prime(p) => {
                if space_g.slots().contains(&PrimeSlot::Prime(p)) {
                    Ok(PrimeSlot::Prime(p))
                } else {
                    Err(Error::SpaceMismatch(format!(
                        "target space has no slot for the prime {p}"
                    )))
                }
            }
            PrimeSlot::Generic => unreachable!("generic handled per branch"),
        }
    };
    let has_generic = source.slots().contains(&PrimeSlot::Generic);
    let resolutions: Vec<Option<PrimeSlot>> = if has_generic {
        let mut r: Vec<Option<PrimeSlot>> = space_g
            .slots()
            .iter()
            .filter_map(|&s| match s {
                PrimeSlot::Prime(q) if !source_order.is_multiple_of(q) => {
                    Some(Some(PrimeSlot::Prime(q)))
                }
                PrimeSlot::Generic => Some(Some(PrimeSlot::Generic)),
                _ => None,
            })
            .collect();
        if r.is_empty() {
            return Err(Error::SpaceMismatch(
                "target space cannot absorb the source's generic slot".into(),
            ));
        }
        r.sort();
        r
    } else {
        vec![None]
    };
    let mut branches = Vec::with_capacity(resolutions.len());
    for resolution in resolutions {
        let mut map = Vec::with_capacity(source.len());
        for p in source.points() {
            let slot = match p.slot {
                PrimeSlot::Generic => resolution.expect("resolution exists for generic sources"),
                other => translate_fixed(other)?,
            };
            map.push(space_g.point_index(SpecPoint {
                class: class_map[p.class],
                slot,
            })?);
        }
        branches.push((resolution, map));
    }
    Ok(PointFamilyMap {
        branches,
        target_len: space_g.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(desc: &str) -> SpecSpace {
        let g = Arc::new(PermGroup::from_descriptor(desc).unwrap());
        SpecSpace::build(&g)
    }

    fn class_by(space: &SpecSpace, pred: impl Fn(&SubgroupClass) -> bool) -> usize {
        space.classes().iter().position(pred).expect("class exists")
    }

    #[test]
    fn trivial_group_is_spec_z() {
        let s = space("C1");
        assert_eq!(s.slots(), &[PrimeSlot::Zero, PrimeSlot::Generic]);
        assert_eq!(s.len(), 2);
        let zero = SpecPoint {
            class: 0,
            slot: PrimeSlot::Zero,
        };
        let gen = SpecPoint {
            class: 0,
            slot: PrimeSlot::Generic,
        };
        assert_eq!(s.closure(zero).unwrap(), vec![zero, gen]);
        assert_eq!(s.closure(gen).unwrap(), vec![gen]);
        assert_eq!(s.irreducible_components().len(), 1);
    }

    #[test]
    fn cp_points_and_specialization() {
        for p in [2u64, 3, 5, 7] {
            let s = space(&format!("C{p}"));
            assert_eq!(s.len(), 2 * 3, "2 classes x 3 slots");
            let below = SpecPoint {
                class: 0,
                slot: PrimeSlot::Prime(p),
            };
            let closed_whole = SpecPoint {
                class: 1,
                slot: PrimeSlot::Prime(p),
            };
            let generic_whole = SpecPoint {
                class: 1,
                slot: PrimeSlot::Zero,
            };
            assert!(s.specializes(below, closed_whole).unwrap());
            assert!(s.specializes(below, generic_whole).unwrap());
            assert_eq!(s.irreducible_components().len(), 2);
        }
    }

    #[test]
    fn d8_closure_sizes_match_figure() {
        let g = Arc::new(PermGroup::from_descriptor("D8").unwrap());
        let full = SpecSpace::build(&g);
        assert_eq!(full.len(), 8 * 3);
        let local = SpecSpace::build_local(&g, 2).unwrap();

        let c4 = class_by(&local, |c| {
            c.order() == 4
                && c.representative()
                    .members()
                    .iter()
                    .any(|&m| g.element_order(m) == 4)
        });
        let zero = |class| SpecPoint {
            class,
            slot: PrimeSlot::Zero,
        };
        let at2 = |class| SpecPoint {
            class,
            slot: PrimeSlot::Prime(2),
        };

        assert_eq!(local.closure(zero(c4)).unwrap().len(), 4);
        // in the full symbolic space the generic companion joins the closure
        assert_eq!(full.closure(zero(c4)).unwrap().len(), 5);

        for v4 in (0..local.classes().len()).filter(|&i| {
            local.classes()[i].order() == 4
                && local.classes()[i]
                    .representative()
                    .members()
                    .iter()
                    .all(|&m| g.element_order(m) <= 2)
        }) {
            assert_eq!(local.closure(zero(v4)).unwrap().len(), 5);
        }
        for c2 in (0..local.classes().len()).filter(|&i| local.classes()[i].order() == 2) {
            assert_eq!(local.closure(at2(c2)).unwrap().len(), 2);
        }
    }

    #[test]
    fn s3_thomason_examples() {
        let s = space("S3");
        let whole = s.classes().len() - 1;
        let at = |class, slot| SpecPoint { class, slot };
        let single2: BTreeSet<SpecPoint> = [at(whole, PrimeSlot::Prime(2))].into_iter().collect();
        assert!(!s.is_specialization_closed(&single2).unwrap());
        let single3: BTreeSet<SpecPoint> = [at(whole, PrimeSlot::Prime(3))].into_iter().collect();
        assert!(s.is_specialization_closed(&single3).unwrap());
        let any_closure: BTreeSet<SpecPoint> = s
            .closure(at(whole, PrimeSlot::Zero))
            .unwrap()
            .into_iter()
            .collect();
        assert!(s.is_specialization_closed(&any_closure).unwrap());
        assert_eq!(s.irreducible_components().len(), 4);
    }

    #[test]
    fn specialization_is_a_partial_order() {
        for desc in ["C1", "C6", "S3", "D8", "A4", "Q8"] {
            let s = space(desc);
            let n = s.len();
            for a in 0..n {
                assert!(s.in_closure[a][a], "{desc}: reflexive");
                for b in 0..n {
                    if a != b && s.in_closure[a][b] {
                        assert!(!s.in_closure[b][a], "{desc}: antisymmetric");
                    }
                    for c in 0..n {
                        if s.in_closure[a][b] && s.in_closure[b][c] {
                            assert!(s.in_closure[a][c], "{desc}: transitive");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn generic_fibers_are_discrete_and_zero_points_rigid() {
        for desc in ["C6", "S3", "D8"] {
            let s = space(desc);
            for ci in 0..s.classes().len() {
                let gp = SpecPoint {
                    class: ci,
                    slot: PrimeSlot::Generic,
                };
                assert_eq!(s.closure(gp).unwrap(), vec![gp], "{desc}: generic discrete");
                for cj in 0..s.classes().len() {
                    if ci != cj {
                        let zi = SpecPoint {
                            class: ci,
                            slot: PrimeSlot::Zero,
                        };
                        let zj = SpecPoint {
                            class: cj,
                            slot: PrimeSlot::Zero,
                        };
                        assert!(!s.specializes(zi, zj).unwrap(), "{desc}: rational rigidity");
                    }
                }
            }
        }
    }

    #[test]
    fn components_are_the_zero_point_closures() {
        for desc in ["C1", "C6", "S3", "D8"] {
            let s = space(desc);
            let components: BTreeSet<Vec<SpecPoint>> =
                s.irreducible_components().into_iter().collect();
            let zero_closures: BTreeSet<Vec<SpecPoint>> = (0..s.classes().len())
                .map(|ci| {
                    s.closure(SpecPoint {
                        class: ci,
                        slot: PrimeSlot::Zero,
                    })
                    .unwrap()
                })
                .collect();
            assert_eq!(components, zero_closures, "{desc}");
        }
    }

    #[test]
    fn zero_closure_dominates_every_slot() {
        for desc in ["C6", "S3", "D8", "A4"] {
            let s = space(desc);
            for ci in 0..s.classes().len() {
                let zero: BTreeSet<SpecPoint> = s
                    .closure(SpecPoint {
                        class: ci,
                        slot: PrimeSlot::Zero,
                    })
                    .unwrap()
                    .into_iter()
                    .collect();
                for &slot in s.slots() {
                    let at_slot: BTreeSet<SpecPoint> = s
                        .closure(SpecPoint { class: ci, slot })
                        .unwrap()
                        .into_iter()
                        .collect();
                    assert!(at_slot.is_subset(&zero), "{desc}");
                }
            }
        }
    }

    #[test]
    fn generator_support_examples() {
        let s = space("C5");
        let trivial_support = s.generator_support(GeneratorObject { class: 0 }).unwrap();
        assert!(trivial_support.iter().all(|p| p.class == 0));
        assert_eq!(trivial_support.len(), s.slots().len());

        let whole = s.classes().len() - 1;
        let unit_support = s
            .generator_support(GeneratorObject { class: whole })
            .unwrap();
        assert_eq!(unit_support.len(), s.len());

        let d8 = space("D8");
        let g = d8.group().clone();
        let c4 = class_by(&d8, |c| {
            c.order() == 4
                && c.representative()
                    .members()
                    .iter()
                    .any(|&m| g.element_order(m) == 4)
        });
        let support = d8.generator_support(GeneratorObject { class: c4 }).unwrap();
        let classes: BTreeSet<usize> = support.iter().map(|p| p.class).collect();
        let orders: Vec<usize> = classes.iter().map(|&c| d8.classes()[c].order()).collect();
        assert_eq!(orders, vec![1, 2, 4], "1, central C2 and C4 lie in C4");
        assert_eq!(support.len(), 3 * d8.slots().len());
    }

    #[test]
    fn chromatic_examples() {
        let s = space("D8");
        let p = SpecPoint {
            class: 3,
            slot: PrimeSlot::Prime(2),
        };
        let c = s.chromatic_image(p).unwrap();
        assert_eq!(c.height, ChromaticHeight::Infinity);
        assert_eq!(c.prime, PrimeSlot::Prime(2));
        let z = SpecPoint {
            class: 3,
            slot: PrimeSlot::Zero,
        };
        let c = s.chromatic_image(z).unwrap();
        assert_eq!(c.height, ChromaticHeight::One);
        assert_eq!(c.prime, PrimeSlot::Zero);

        // injectivity over all points
        let images: BTreeSet<ChromaticPoint> = s
            .points()
            .iter()
            .map(|&p| s.chromatic_image(p).unwrap())
            .collect();
        assert_eq!(images.len(), s.len());
    }

    #[test]
    fn foreign_points_are_rejected() {
        let s = space("C3");
        let bad = SpecPoint {
            class: 9,
            slot: PrimeSlot::Zero,
        };
        assert!(matches!(
            s.specializes(bad, bad),
            Err(Error::ForeignPoint { .. })
        ));
        let wrong_prime = SpecPoint {
            class: 0,
            slot: PrimeSlot::Prime(5),
        };
        assert!(s.closure(wrong_prime).is_err());
    }

    #[test]
    fn restriction_image_is_generator_support() {
        let g = Arc::new(PermGroup::from_descriptor("D8").unwrap());
        let space_g = SpecSpace::build(&g);
        for sub in g.all_subgroups() {
            let h = Arc::new(g.subgroup_group(&sub));
            let space_h = SpecSpace::build(&h);
            let map = restriction_map(&space_g, &space_h, &sub).unwrap();
            let class = space_g.class_of_subgroup(&sub).unwrap();
            let support: BTreeSet<usize> = space_g
                .generator_support(GeneratorObject { class })
                .unwrap()
                .iter()
                .map(|&p| space_g.point_index(p).unwrap())
                .collect();
            assert_eq!(map.image(), support);
        }
    }

    #[test]
    fn restriction_branches_preserve_specialization() {
        let g = Arc::new(PermGroup::from_descriptor("S3").unwrap());
        let space_g = SpecSpace::build(&g);
        let c3 = g
            .all_subgroups()
            .into_iter()
            .find(|s| s.order() == 3)
            .unwrap();
        let h = Arc::new(g.subgroup_group(&c3));
        let space_h = SpecSpace::build(&h);
        let map = restriction_map(&space_g, &space_h, &c3).unwrap();
        for slot in map.branch_slots() {
            let m = map.branch(slot).unwrap();
            for a in 0..space_h.len() {
                for b in 0..space_h.len() {
                    if space_h.in_closure[a][b] {
                        assert!(space_g.in_closure[m[a]][m[b]]);
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_maps_compose_to_identity() {
        let g = Arc::new(PermGroup::from_descriptor("D8").unwrap());
        let space_g = SpecSpace::build(&g);
        let center = g
            .subgroup_classes()
            .iter()
            .find(|c| c.order() == 2 && c.class_size() == 1)
            .unwrap()
            .representative()
            .clone();
        let qp = QuotientPresentation::build(&g, &center).unwrap();
        let space_q = SpecSpace::build(qp.quotient());
        let (inflation, fixed) = quotient_maps(&space_g, &space_q, &qp).unwrap();
        for slot in fixed.branch_slots() {
            let up = fixed.branch(slot).unwrap();
            for (q, &lifted) in up.iter().enumerate() {
                assert_eq!(inflation.apply(lifted), q, "inflation ∘ fixed-point = id");
            }
        }

        // N = 1 gives two identities
        let qp = QuotientPresentation::build(&g, &g.trivial_subgroup()).unwrap();
        let space_q = SpecSpace::build(qp.quotient());
        let (inflation, fixed) = quotient_maps(&space_g, &space_q, &qp).unwrap();
        for p in 0..space_g.len() {
            let target = space_q.points()[inflation.apply(p)];
            let src = space_g.points()[p];
            assert_eq!(target.slot, src.slot);
            assert_eq!(
                space_q.classes()[target.class].order(),
                space_g.classes()[src.class].order()
            );
        }
        assert_eq!(fixed.branch_slots().len(), 1);

        // N = G embeds the trivial-group space onto the whole-class points
        let qp = QuotientPresentation::build(&g, &g.full_subgroup()).unwrap();
        let space_q = SpecSpace::build(qp.quotient());
        let (_, fixed) = quotient_maps(&space_g, &space_q, &qp).unwrap();
        let whole = space_g.classes().len() - 1;
        let expected: BTreeSet<usize> = space_g
            .points()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.class == whole)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(fixed.image(), expected);
    }
}
