//! The prime spectrum of the Burnside ring, modeled as the gluing quotient
//! of the spectrum space.
//!
//! The comparison map ρ identifies P(H,p) and P(K,p) at the same explicit
//! prime exactly when O^p(H) and O^p(K) are conjugate; Zero and GenericPrime
//! points never glue across classes. The quotient carries the quotient
//! topology, which on this finite presentation is again a specialization
//! order; ρ is surjective and closed, hence a quotient map.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::Result;
use crate::spectrum::{PrimeSlot, SpecPoint, SpecSpace};

/// A point of the Burnside spectrum: the set of spectrum points ρ identifies.
/// The canonical member is the least point index (class-major order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BurnsidePoint {
    members: Vec<usize>,
}

impl BurnsidePoint {
    /// Member point indices in the source space, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn canonical_member(&self) -> usize {
        self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// The Burnside spectrum of a group, as the ρ-quotient of its spectrum space.
#[derive(Clone, Debug)]
pub struct BurnsideSpace {
    source: Arc<SpecSpace>,
    points: Vec<BurnsidePoint>,
    /// spectrum point index → burnside point index
    rho: Vec<usize>,
    /// in_closure[b][c]: burnside point c lies in the closure of b.
    in_closure: Vec<Vec<bool>>,
}

/// One violation of the quotient-map characterization; an empty list is the
/// expected outcome, anything else signals an implementation bug.
#[derive(Clone, Debug)]
pub struct QuotientViolation {
    pub p: SpecPoint,
    pub q: SpecPoint,
    pub glued: bool,
    pub closures_intersect: bool,
    pub intersection_criterion: bool,
}

impl BurnsideSpace {
    /// Glue the source space along the O^p criterion and install the
    /// quotient topology.
    pub fn build(source: &Arc<SpecSpace>) -> BurnsideSpace {
        let group = source.group();
        let classes = source.classes();

        // class index -> class index of the canonical O^p residual, per prime
        let mut residual_class: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        for slot in source.slots() {
            if let PrimeSlot::Prime(p) = slot {
                let per_class: Vec<usize> = classes
                    .iter()
                    .map(|c| {
                        let r = group
                            .o_p_residual(c.representative(), *p)
                            .expect("slot primes are prime");
                        source
                            .class_of_subgroup(&r)
                            .expect("residual is a subgroup of the same group")
                    })
                    .collect();
                residual_class.insert(*p, per_class);
            }
        }

        // gluing key: same slot, and at explicit primes conjugate residuals
        let mut buckets: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (pi, point) in source.points().iter().enumerate() {
            let slot_pos = source
                .slots()
                .iter()
                .position(|&s| s == point.slot)
                .expect("point slot is a space slot");
            let key = match point.slot {
                PrimeSlot::Prime(p) => (slot_pos, residual_class[&p][point.class]),
                _ => (slot_pos, point.class),
            };
            buckets.entry(key).or_default().push(pi);
        }
        let mut points: Vec<BurnsidePoint> = buckets
            .into_values()
            .map(|members| BurnsidePoint { members })
            .collect();
        points.sort_by_key(BurnsidePoint::canonical_member);

        let mut rho = vec![0usize; source.len()];
        for (bi, b) in points.iter().enumerate() {
            for &pi in &b.members {
                rho[pi] = bi;
            }
        }

        // quotient topology: transitive closure of the image relation
        let n = points.len();
        let mut in_closure = vec![vec![false; n]; n];
        for pi in 0..source.len() {
            for qi in 0..source.len() {
                if source.specializes_indices(qi, pi) {
                    in_closure[rho[pi]][rho[qi]] = true;
                }
            }
        }
        #[allow(clippy::needless_range_loop)]
        for mid in 0..n {
            for a in 0..n {
                if in_closure[a][mid] {
                    for c in 0..n {
                        if in_closure[mid][c] {
                            in_closure[a][c] = true;
                        }
                    }
                }
            }
        }

        BurnsideSpace {
            source: Arc::clone(source),
            points,
            rho,
            in_closure,
        }
    }

    pub fn source(&self) -> &Arc<SpecSpace> {
        &self.source
    }

    pub fn points(&self) -> &[BurnsidePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The glue class containing a spectrum point.
    pub fn rho(&self, p: SpecPoint) -> Result<&BurnsidePoint> {
        let pi = self.source.point_index(p)?;
        Ok(&self.points[self.rho[pi]])
    }

    pub fn rho_index(&self, point_index: usize) -> usize {
        self.rho[point_index]
    }

    /// ρ-preimage of a Burnside point, as spectrum points.
    pub fn fiber(&self, b: &BurnsidePoint) -> Vec<SpecPoint> {
        b.members
            .iter()
            .map(|&pi| self.source.points()[pi])
            .collect()
    }

    /// Specialization in the quotient topology.
    pub fn specializes_indices(&self, q: usize, p: usize) -> bool {
        self.in_closure[p][q]
    }

    pub fn closure_indices(&self, b: usize) -> Vec<usize> {
        (0..self.points.len())
            .filter(|&c| self.in_closure[b][c])
            .collect()
    }

    /// Serialized identity `rho[<canonical member token>]`.
    pub fn point_token(&self, b: usize) -> String {
        format!(
            "rho[{}]",
            self.source.point_token(self.points[b].canonical_member())
        )
    }

    /// ρ is a closed map on this finite presentation: the image of every
    /// point closure is closed, and closed sets are finite unions of these.
    pub fn rho_is_closed_map(&self) -> bool {
        (0..self.source.len()).all(|pi| {
            let image: BTreeSet<usize> = self
                .source
                .closure_indices(pi)
                .into_iter()
                .map(|qi| self.rho[qi])
                .collect();
            image
                .iter()
                .all(|&b| self.closure_indices(b).iter().all(|c| image.contains(c)))
        })
    }

    /// Check the three-way characterization of the gluing on all pairs of
    /// distinct points: ρ(P)=ρ(Q) ⟺ both have nonzero slot and their
    /// closures intersect ⟺ same prime and some conjugates H', K' of the two
    /// classes have H' ∩ K' p-subnormal in both. Returns all violations.
    pub fn verify_quotient_characterization(&self) -> Vec<QuotientViolation> {
        let mut violations = Vec::new();
        let source = &self.source;
        let n = source.len();
        let closures: Vec<BTreeSet<usize>> = (0..n)
            .map(|pi| source.closure_indices(pi).into_iter().collect())
            .collect();
        for pi in 0..n {
            for qi in (pi + 1)..n {
                let p = source.points()[pi];
                let q = source.points()[qi];
                let glued = self.rho[pi] == self.rho[qi];
                let closures_intersect = p.slot != PrimeSlot::Zero
                    && q.slot != PrimeSlot::Zero
                    && !closures[pi].is_disjoint(&closures[qi]);
                let intersection_criterion = self.intersection_criterion(p, q);
                if glued != closures_intersect || glued != intersection_criterion {
                    violations.push(QuotientViolation {
                        p,
                        q,
                        glued,
                        closures_intersect,
                        intersection_criterion,
                    });
                }
            }
        }
        violations
    }

    /// Same prime slot, and some conjugate pair H', K' of the two class
    /// representatives has H' ∩ K' p-subnormal in both. For the GenericPrime
    /// slot "p-subnormal" degenerates to equality.
    fn intersection_criterion(&self, p: SpecPoint, q: SpecPoint) -> bool {
        if p.slot != q.slot {
            return false;
        }
        let source = &self.source;
        let group = source.group();
        let h = source.classes()[p.class].representative();
        match p.slot {
            PrimeSlot::Zero => false,
            PrimeSlot::Generic => {
                // H' ∩ K' q-subnormal in both for q coprime to |G| forces
                // H' = K'; distinct classes never satisfy it
                p.class == q.class
            }
            PrimeSlot::Prime(prime) => {
                let k_rep = source.classes()[q.class].representative();
                group.conjugate_orbit(k_rep).iter().any(|k| {
                    let meet = h.intersect(k);
                    group
                        .is_p_subnormal(&meet, h, prime)
                        .expect("meet is contained in h")
                        && group
                            .is_p_subnormal(&meet, k, prime)
                            .expect("meet is contained in k")
                })
            }
        }
    }
}
