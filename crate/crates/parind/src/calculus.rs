//! The theorem engine: constituents, subrepresentation lattices,
//! adjoint-functor images, cuspidality, unramified twists, and the
//! double-coset decomposition report.
//!
//! Every rule here is stated for supercuspidal sigma over a field of
//! characteristic p; triples are e-minimalized internally before a rule
//! is applied, which leaves the answer unchanged (the triple presents
//! the same representation either way).

use crate::error::{Error, Result};
use crate::lattice::{Constituent, SubrepLattice};
use crate::parabolic::ParabolicSet;
use crate::rootsys::{Root, RootSystem};
use crate::triples::{GTriple, SigmaDescriptor};
use crate::weyl::{WeylElt, WeylGroup};

/// Image of a triple under a parabolic adjoint functor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdjointResult {
    pub vanishes: bool,
    /// When non-vanishing, the image triple in the Levi M_1.
    pub result_triple: Option<GTriple>,
}

impl AdjointResult {
    fn zero() -> AdjointResult {
        AdjointResult {
            vanishes: true,
            result_triple: None,
        }
    }

    fn of(t: GTriple) -> AdjointResult {
        AdjointResult {
            vanishes: false,
            result_triple: Some(t),
        }
    }
}

/// Cuspidality classification of a triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Cuspidality {
    pub left_cuspidal: bool,
    pub right_cuspidal: bool,
    pub supercuspidal: bool,
}

/// Irreducibility conditions for unramified twists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistReport {
    /// Roots off Delta_{P_1} orthogonal to Delta_P.
    pub candidate_roots: u64,
    /// The user-declared Delta_nr(sigma) intersected with the candidates.
    pub active_roots: u64,
    /// Declared roots outside the candidate set, reported as ignored.
    pub ignored_roots: u64,
    /// One symbolic inequation per active root.
    pub conditions: Vec<String>,
}

impl TwistReport {
    /// The reducibility locus is the union of the active hypersurfaces;
    /// the twist is irreducible for every unramified character iff there
    /// are none.
    pub fn always_irreducible(&self) -> bool {
        self.active_roots == 0
    }
}

/// One cell of the double-coset filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellReport {
    pub rep: WeylElt,
    pub word: String,
    pub length: usize,
    pub survivor: bool,
    /// Vanishing certificate for non-surviving cells.
    pub witness: Option<Root>,
}

/// The decomposition report of the composite functor on a pair (P, P_1).
#[derive(Debug, Clone)]
pub struct GeometricLemmaReport {
    pub delta_m: u64,
    pub delta_m1: u64,
    /// Cells in filtration order: open cells first, the PP_1 cell last.
    pub cells: Vec<CellReport>,
}

fn require_supercuspidal(sigma: &SigmaDescriptor) -> Result<()> {
    if !sigma.is_supercuspidal() {
        return Err(Error::NotSupercuspidal);
    }
    Ok(())
}

/// The irreducible constituents of the induction of sigma from its
/// support: one triple per Q with `Delta_P c Delta_Q c Delta_{P(sigma)}`,
/// presented e-minimally, in (subset rank, lex) order.
pub fn constituents(rs: &RootSystem, sigma: &SigmaDescriptor) -> Result<Vec<GTriple>> {
    require_supercuspidal(sigma)?;
    let p = sigma.support();
    let (_, sigma_min) = sigma.minimize();
    let mut out = Vec::new();
    for s in crate::lattice::submasks_sorted(sigma.delta_sigma()) {
        let q = ParabolicSet::new(p.members() | s, p.ambient())?;
        out.push(GTriple::new(rs, sigma_min, q)?);
    }
    Ok(out)
}

fn check_m1_triple(
    rs: &RootSystem,
    p1: &ParabolicSet,
    t: &GTriple,
) -> Result<()> {
    if !t.sigma.is_supercuspidal() {
        return Err(Error::InvalidM1Triple(
            "sigma of the M1 triple must be supercuspidal".into(),
        ));
    }
    if t.q.ambient() != p1.members() {
        return Err(Error::InvalidM1Triple(format!(
            "triple ambient {:?} is not the Levi of P1 {:?}",
            rs.mask_labels(t.q.ambient()),
            p1.to_labels(rs)
        )));
    }
    t.validate(rs)
        .map_err(|e| Error::InvalidM1Triple(e.to_string()))?;
    Ok(())
}

/// P(sigma) computed at the level of the full group.
fn p_sigma_in_group(rs: &RootSystem, sigma: &SigmaDescriptor) -> u64 {
    (sigma.support().members() | sigma.trivial_on()) & rs.full_mask()
}

/// The lattice of subrepresentations of the induction from P_1 of the
/// representation presented by `m1_triple` (a triple in the Levi M_1).
pub fn subrep_lattice(
    rs: &RootSystem,
    p1: &ParabolicSet,
    m1_triple: &GTriple,
) -> Result<SubrepLattice> {
    check_m1_triple(rs, p1, m1_triple)?;
    let t = m1_triple.minimize();
    let index_set = p_sigma_in_group(rs, &t.sigma) & !p1.members();
    let sigma_g = t.sigma.widen_ambient(rs.full_mask())?;
    SubrepLattice::build(index_set, |marker| {
        let q = ParabolicSet::in_group(rs, t.q.members() | marker)
            .expect("marker stays inside Delta");
        Constituent {
            triple: GTriple::new(rs, sigma_g, q)
                .expect("Q' lies between P and P(sigma)"),
            marker,
        }
    })
}

/// Irreducibility of the induction: true iff P_1 contains P(sigma).
pub fn is_irreducible_induction(
    rs: &RootSystem,
    p1: &ParabolicSet,
    m1_triple: &GTriple,
) -> Result<bool> {
    check_m1_triple(rs, p1, m1_triple)?;
    let psig = p_sigma_in_group(rs, &m1_triple.sigma);
    Ok(psig & !p1.members() == 0)
}

/// The lattice of the induction from P of the generalized Steinberg
/// module attached to Q inside P; constituents are the St_{Q'} with
/// `Delta_{Q'} n Delta_P = Delta_Q`.
pub fn steinberg_lattice(
    rs: &RootSystem,
    p: &ParabolicSet,
    q: &ParabolicSet,
) -> Result<SubrepLattice> {
    if !p.contains(q) {
        return Err(Error::InvalidNesting(
            "Delta_Q must be contained in Delta_P".into(),
        ));
    }
    let index_set = rs.full_mask() & !p.members();
    // the Steinberg family lives over the trivial character of Z
    let sigma = SigmaDescriptor::supercuspidal(rs, 0, rs.full_mask())?;
    SubrepLattice::build(index_set, |marker| {
        let q_prime = ParabolicSet::in_group(rs, q.members() | marker)
            .expect("marker stays inside Delta");
        Constituent {
            triple: GTriple::new(rs, sigma, q_prime)
                .expect("any Q' is valid for the trivial character"),
            marker,
        }
    })
}

fn adjoint_image(t: &GTriple, p1: &ParabolicSet) -> GTriple {
    let sigma_m1 = t
        .sigma
        .widen_ambient(p1.members())
        .expect("support contained in M1");
    let q_m1 = ParabolicSet::new(t.q.members() & p1.members(), p1.members())
        .expect("intersection lies in M1");
    GTriple {
        sigma: sigma_m1,
        q: q_m1,
    }
}

/// Jacquet functor image: non-zero iff `P_1 > P` and `<P_1, Q> > P(sigma)`,
/// in which case it is the triple (P n M_1, sigma, Q n M_1) in M_1.
pub fn left_adjoint(rs: &RootSystem, p1: &ParabolicSet, t: &GTriple) -> Result<AdjointResult> {
    require_supercuspidal(&t.sigma)?;
    let ambient = t.q.ambient();
    if p1.ambient() != ambient {
        return Err(Error::MixedAmbient);
    }
    t.validate(rs)?;
    let t = t.minimize();
    let psig = t.sigma.p_sigma().members();
    let contains_p = t.p().members() & !p1.members() == 0;
    let generates = psig & !(p1.members() | t.q.members()) == 0;
    if contains_p && generates {
        Ok(AdjointResult::of(adjoint_image(&t, p1)))
    } else {
        Ok(AdjointResult::zero())
    }
}

/// Right adjoint (ordinary part) image: non-zero iff `P_1 > Q`, in which
/// case it is the triple (P n M_1, sigma, Q n M_1) in M_1.
pub fn right_adjoint(rs: &RootSystem, p1: &ParabolicSet, t: &GTriple) -> Result<AdjointResult> {
    require_supercuspidal(&t.sigma)?;
    if p1.ambient() != t.q.ambient() {
        return Err(Error::MixedAmbient);
    }
    t.validate(rs)?;
    let t = t.minimize();
    if t.q.members() & !p1.members() == 0 {
        Ok(AdjointResult::of(adjoint_image(&t, p1)))
    } else {
        Ok(AdjointResult::zero())
    }
}

/// Closed-form cuspidality classification of a triple.
pub fn cuspidality(rs: &RootSystem, t: &GTriple) -> Result<Cuspidality> {
    require_supercuspidal(&t.sigma)?;
    t.validate(rs)?;
    let t = t.minimize();
    let ambient = t.q.ambient();
    let psig_full = t.sigma.p_sigma().members() == ambient;
    let left_cuspidal = t.q.members() == t.p().members() && psig_full;
    let right_cuspidal = t.q.members() == ambient && psig_full;
    Ok(Cuspidality {
        left_cuspidal,
        right_cuspidal,
        supercuspidal: left_cuspidal && right_cuspidal,
    })
}

/// Human label for the distinguished triples: "e(sigma)" for the full
/// extension, "e(sigma)(x)St" for the generalized Steinberg twist.
pub fn triple_label(t: &GTriple) -> Option<&'static str> {
    let t = t.minimize();
    let ambient = t.q.ambient();
    if t.sigma.p_sigma().members() != ambient {
        return None;
    }
    if t.q.members() == ambient {
        Some("e(sigma)")
    } else if t.q.members() == t.p().members() {
        Some("e(sigma)(x)St")
    } else {
        None
    }
}

/// Symbolic irreducibility conditions for unramified twists of the
/// induction presented by an M_1 triple.
pub fn unramified_twist_conditions(
    rs: &RootSystem,
    p1: &ParabolicSet,
    m1_triple: &GTriple,
    declared_nr: u64,
) -> Result<TwistReport> {
    check_m1_triple(rs, p1, m1_triple)?;
    let t = m1_triple.minimize();
    let delta_p = t.p().members();
    let mut candidate_roots = 0u64;
    for i in 0..rs.rank() {
        let bit = 1u64 << i;
        if p1.members() & bit == 0 && rs.orthogonal_subsets(bit, delta_p) {
            candidate_roots |= bit;
        }
    }
    let active_roots = candidate_roots & declared_nr;
    let ignored_roots = declared_nr & !candidate_roots;
    let conditions = (0..rs.rank())
        .filter(|i| active_roots & (1 << i) != 0)
        .map(|i| {
            let l = &rs.labels()[i];
            format!("chi(a_{l}) != chi_{l}(a_{l})")
        })
        .collect();
    Ok(TwistReport {
        candidate_roots,
        active_roots,
        ignored_roots,
        conditions,
    })
}

/// Lists the (P, P_1) double-coset cells in filtration order, marking the
/// identity cell as the sole survivor and certifying each other cell's
/// vanishing with a witness root, re-checked independently.
pub fn geometric_lemma_report(
    group: &WeylGroup,
    delta_m: u64,
    delta_m1: u64,
) -> GeometricLemmaReport {
    let rs = group.root_system();
    let n = rs.num_positive();
    let reps = group.double_coset_reps(delta_m, delta_m1);
    let cells = reps
        .iter()
        .map(|&w| {
            let survivor = w == group.identity();
            let witness = if survivor {
                None
            } else {
                let beta = group.witness_root(delta_m, delta_m1, w);
                // independent re-check: w(beta) must land in -Phi_N
                if let Some(b) = &beta {
                    let idx = rs.root_index(b).expect("witness is a root");
                    let image = group.apply_index(w, idx);
                    assert!(
                        image >= n && !rs.positive_roots()[image - n].supported_on(delta_m),
                        "witness failed re-verification"
                    );
                }
                beta
            };
            CellReport {
                rep: w,
                word: group.word_string(w),
                length: group.length(w),
                survivor,
                witness,
            }
        })
        .collect();
    GeometricLemmaReport {
        delta_m,
        delta_m1,
        cells,
    }
}
