//! Combinatorial descriptors of representations and of R[G]-triples
//! (P, sigma, Q), with the extension/minimality calculus.
//!
//! A representation sigma of a Levi M is modeled only by its support
//! Delta_P, a total triviality predicate on Delta (which alpha have
//! Z n M'_alpha acting trivially), and flags. The supercuspidal flag
//! refers to the e-minimal core of the descriptor; for an e-minimal
//! descriptor that is sigma itself.

use crate::error::{Error, Result};
use crate::parabolic::ParabolicSet;
use crate::rootsys::RootSystem;

/// The combinatorial shadow of a representation of a Levi.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SigmaDescriptor {
    support: ParabolicSet,
    trivial_on: u64,
    supercuspidal: bool,
    irreducible_admissible: bool,
}

impl SigmaDescriptor {
    /// Builds and validates a descriptor. `trivial_on` is a total
    /// predicate on Delta. Supercuspidal descriptors must satisfy the
    /// orthogonality of their e-minimal core's support and triviality
    /// set; violating data corresponds to no actual representation and
    /// is rejected.
    pub fn new(
        rs: &RootSystem,
        support: ParabolicSet,
        trivial_on: u64,
        supercuspidal: bool,
        irreducible_admissible: bool,
    ) -> Result<SigmaDescriptor> {
        if trivial_on & !rs.full_mask() != 0 {
            return Err(Error::InvalidSigma(
                "trivial_on mentions roots outside Delta".into(),
            ));
        }
        if supercuspidal && !irreducible_admissible {
            return Err(Error::InvalidSigma(
                "supercuspidal implies irreducible admissible".into(),
            ));
        }
        if supercuspidal {
            let core_support = support.members() & !trivial_on;
            if !rs.orthogonal_subsets(core_support, trivial_on) {
                return Err(Error::InvalidSigma(
                    "supercuspidal core violates orthogonality of Delta_P and Delta_sigma"
                        .into(),
                ));
            }
        }
        Ok(SigmaDescriptor {
            support,
            trivial_on,
            supercuspidal,
            irreducible_admissible,
        })
    }

    /// A supercuspidal descriptor of a Levi inside the full group.
    pub fn supercuspidal(
        rs: &RootSystem,
        support_mask: u64,
        trivial_on: u64,
    ) -> Result<SigmaDescriptor> {
        let support = ParabolicSet::in_group(rs, support_mask)?;
        SigmaDescriptor::new(rs, support, trivial_on, true, true)
    }

    pub fn support(&self) -> ParabolicSet {
        self.support
    }

    pub fn trivial_on(&self) -> u64 {
        self.trivial_on
    }

    pub fn is_supercuspidal(&self) -> bool {
        self.supercuspidal
    }

    pub fn is_irreducible_admissible(&self) -> bool {
        self.irreducible_admissible
    }

    /// `Delta_sigma`: the triviality set off the support, within the
    /// descriptor's ambient Levi.
    pub fn delta_sigma(&self) -> u64 {
        self.trivial_on & !self.support.members() & self.support.ambient()
    }

    /// `Delta_{P(sigma)} = Delta_P u Delta_sigma`, tagged with the same
    /// ambient group.
    pub fn p_sigma(&self) -> ParabolicSet {
        ParabolicSet::new(
            (self.support.members() | self.trivial_on) & self.support.ambient(),
            self.support.ambient(),
        )
        .expect("subset of ambient by construction")
    }

    /// The same representation viewed at the level of a larger ambient
    /// Levi (it must extend there: the new ambient must lie inside
    /// P(sigma) computed over all of Delta).
    pub fn widen_ambient(&self, ambient: u64) -> Result<SigmaDescriptor> {
        Ok(SigmaDescriptor {
            support: self.support.widen_ambient(ambient)?,
            ..*self
        })
    }

    /// E-minimalization: strips from the support every root acting
    /// trivially. `P(sigma)` is unchanged; idempotent.
    pub fn minimize(&self) -> (ParabolicSet, SigmaDescriptor) {
        let p_min = ParabolicSet::new(
            self.support.members() & !self.trivial_on,
            self.support.ambient(),
        )
        .expect("subset of the old support");
        let sigma_min = SigmaDescriptor {
            support: p_min,
            ..*self
        };
        (p_min, sigma_min)
    }

    pub fn is_e_minimal(&self) -> bool {
        self.support.members() & self.trivial_on == 0
    }

    /// Lemma-2.2 gate for e-minimal descriptors: `Delta_P` and
    /// `Delta_sigma` must be orthogonal.
    pub fn check_e_minimal_orthogonality(&self, rs: &RootSystem) -> Result<bool> {
        if !self.is_e_minimal() {
            return Err(Error::NotEMinimal);
        }
        Ok(rs.orthogonal_subsets(self.support.members(), self.trivial_on & !self.support.members()))
    }
}

/// An R[G]-triple (P, sigma, Q) with `P c Q c P(sigma)`, all sharing an
/// ambient group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GTriple {
    pub sigma: SigmaDescriptor,
    pub q: ParabolicSet,
}

impl GTriple {
    pub fn new(rs: &RootSystem, sigma: SigmaDescriptor, q: ParabolicSet) -> Result<GTriple> {
        let t = GTriple { sigma, q };
        t.validate(rs)?;
        Ok(t)
    }

    pub fn p(&self) -> ParabolicSet {
        self.sigma.support()
    }

    /// Checks `Delta_P c Delta_Q c Delta_{P(sigma)}` and the shared
    /// ambient; returns `Delta_{P(sigma)}` on success.
    pub fn validate(&self, rs: &RootSystem) -> Result<ParabolicSet> {
        if self.q.ambient() != self.sigma.support().ambient() {
            return Err(Error::MixedAmbient);
        }
        let p_sigma = self.sigma.p_sigma();
        let p = self.sigma.support();
        if let Some(bad) = lowest_bit(p.members() & !self.q.members()) {
            return Err(Error::QOutOfRange {
                root: rs.labels()[bad].clone(),
            });
        }
        if let Some(bad) = lowest_bit(self.q.members() & !p_sigma.members()) {
            return Err(Error::QOutOfRange {
                root: rs.labels()[bad].clone(),
            });
        }
        Ok(p_sigma)
    }

    /// Replaces (P, sigma) by the e-minimal core, keeping Q; the result
    /// is an equivalent triple (same I_G).
    pub fn minimize(&self) -> GTriple {
        let (_, sigma_min) = self.sigma.minimize();
        GTriple {
            sigma: sigma_min,
            q: self.q,
        }
    }
}

fn lowest_bit(mask: u64) -> Option<usize> {
    if mask == 0 {
        None
    } else {
        Some(mask.trailing_zeros() as usize)
    }
}
