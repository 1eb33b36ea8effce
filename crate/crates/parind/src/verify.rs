//! Exhaustive invariant suites over small root systems, shared by the
//! CLI `verify:all` task and the acceptance tests. Each check runs over
//! every instance in its domain and reports the first counterexample on
//! failure.

use crate::calculus;
use crate::error::Result;
use crate::parabolic::ParabolicSet;
use crate::rootsys::RootSystem;
use crate::triples::{GTriple, SigmaDescriptor};
use crate::weyl::{WeylElt, WeylGroup};

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &'static str, detail: String) -> CheckResult {
        CheckResult {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> CheckResult {
        CheckResult {
            name,
            passed: false,
            detail,
        }
    }
}

/// Every supercuspidal descriptor of the system, including non-e-minimal
/// presentations (support overlapping the triviality set).
fn all_supercuspidal(rs: &RootSystem) -> Vec<SigmaDescriptor> {
    let full = rs.full_mask();
    let mut out = Vec::new();
    for support in 0..=full {
        for trivial_on in 0..=full {
            if let Ok(s) = SigmaDescriptor::supercuspidal(rs, support, trivial_on) {
                out.push(s);
            }
        }
    }
    out
}

/// Every valid G-level triple of the system.
fn all_triples(rs: &RootSystem) -> Vec<GTriple> {
    let full = rs.full_mask();
    let mut out = Vec::new();
    for sigma in all_supercuspidal(rs) {
        for q_mask in 0..=full {
            let q = ParabolicSet::in_group(rs, q_mask).expect("q below full");
            if let Ok(t) = GTriple::new(rs, sigma, q) {
                out.push(t);
            }
        }
    }
    out
}

/// Every admissible (P_1, triple-in-M_1) pair.
fn all_m1_instances(rs: &RootSystem) -> Vec<(ParabolicSet, GTriple)> {
    let full = rs.full_mask();
    let mut out = Vec::new();
    for p1_mask in 0..=full {
        let p1 = ParabolicSet::in_group(rs, p1_mask).expect("p1 below full");
        for support_mask in 0..=p1_mask {
            if support_mask & !p1_mask != 0 {
                continue;
            }
            let Ok(support) = ParabolicSet::new(support_mask, p1_mask) else {
                continue;
            };
            for trivial_on in 0..=full {
                let Ok(sigma) = SigmaDescriptor::new(rs, support, trivial_on, true, true)
                else {
                    continue;
                };
                for q_mask in 0..=p1_mask {
                    if q_mask & !p1_mask != 0 {
                        continue;
                    }
                    let Ok(q) = ParabolicSet::new(q_mask, p1_mask) else {
                        continue;
                    };
                    if let Ok(t) = GTriple::new(rs, sigma, q) {
                        out.push((p1, t));
                    }
                }
            }
        }
    }
    out
}

fn bruhat_matrix(group: &WeylGroup) -> Vec<Vec<bool>> {
    let n = group.order();
    let elems: Vec<WeylElt> = group.all().collect();
    (0..n)
        .map(|i| (0..n).map(|j| group.bruhat_leq(elems[i], elems[j])).collect())
        .collect()
}

pub fn check_bruhat_axioms(group: &WeylGroup) -> CheckResult {
    let name = "bruhat-order-axioms";
    let n = group.order();
    let leq = bruhat_matrix(group);
    let word = |i: usize| group.word_string(WeylElt(i as u32));
    for x in 0..n {
        if !leq[x][x] {
            return CheckResult::fail(name, format!("not reflexive at {}", word(x)));
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x != y && leq[x][y] && leq[y][x] {
                return CheckResult::fail(
                    name,
                    format!("not antisymmetric at {}, {}", word(x), word(y)),
                );
            }
            for z in 0..n {
                if leq[x][y] && leq[y][z] && !leq[x][z] {
                    return CheckResult::fail(
                        name,
                        format!("not transitive at {}, {}, {}", word(x), word(y), word(z)),
                    );
                }
            }
        }
    }
    CheckResult::pass(name, format!("{n} elements"))
}

pub fn check_w0_reversal(group: &WeylGroup) -> CheckResult {
    let name = "bruhat-w0-reversal";
    let w0 = group.longest_element(group.root_system().full_mask());
    let leq = bruhat_matrix(group);
    for x in group.all() {
        for y in group.all() {
            let lhs = leq[x.0 as usize][y.0 as usize];
            let yw0 = group.mul(y, w0);
            let xw0 = group.mul(x, w0);
            let rhs = leq[yw0.0 as usize][xw0.0 as usize];
            if lhs != rhs {
                return CheckResult::fail(
                    name,
                    format!(
                        "fails at {} vs {}",
                        group.word_string(x),
                        group.word_string(y)
                    ),
                );
            }
        }
    }
    CheckResult::pass(name, format!("{} pairs", group.order() * group.order()))
}

pub fn check_coset_count_law(group: &WeylGroup) -> CheckResult {
    let name = "coset-count-law";
    let full = group.root_system().full_mask();
    for mask in 0..=full {
        let reps = group.min_coset_reps(mask);
        let sub = group.parabolic_subgroup(mask);
        if reps.reps.len() * sub.len() != group.order() {
            return CheckResult::fail(name, format!("fails for Delta_Q mask {mask:#b}"));
        }
    }
    CheckResult::pass(name, format!("{} subsets", full + 1))
}

pub fn check_double_coset_partition(group: &WeylGroup) -> CheckResult {
    let name = "double-coset-partition";
    let full = group.root_system().full_mask();
    for i_mask in 0..=full {
        for j_mask in 0..=full {
            let reps = group.double_coset_reps(i_mask, j_mask);
            let mut seen = vec![false; group.order()];
            for &r in &reps {
                for x in group.double_coset(i_mask, j_mask, r) {
                    if seen[x.0 as usize] {
                        return CheckResult::fail(
                            name,
                            format!("overlap at masks {i_mask:#b}/{j_mask:#b}"),
                        );
                    }
                    seen[x.0 as usize] = true;
                }
            }
            if !seen.iter().all(|&b| b) {
                return CheckResult::fail(
                    name,
                    format!("not covering at masks {i_mask:#b}/{j_mask:#b}"),
                );
            }
        }
    }
    CheckResult::pass(name, format!("{} mask pairs", (full + 1) * (full + 1)))
}

/// Every w outside W_M W_{M_1} yields a witness root, and the witness is
/// re-verified against the root action.
pub fn check_lemma55(group: &WeylGroup) -> CheckResult {
    let name = "lemma55-witnesses";
    let rs = group.root_system();
    let full = rs.full_mask();
    let n = rs.num_positive();
    let mut witnesses = 0usize;
    for m_mask in 0..=full {
        for m1_mask in 0..=full {
            let product: std::collections::HashSet<WeylElt> = group
                .parabolic_subgroup(m_mask)
                .iter()
                .flat_map(|&a| {
                    group
                        .parabolic_subgroup(m1_mask)
                        .iter()
                        .map(move |&b| (a, b))
                        .collect::<Vec<_>>()
                })
                .map(|(a, b)| group.mul(a, b))
                .collect();
            for w in group.all() {
                let witness = group.lemma_5_5_witness(m_mask, m1_mask, w);
                if product.contains(&w) {
                    if witness.is_some() {
                        return CheckResult::fail(
                            name,
                            format!(
                                "witness for member {} at masks {m_mask:#b}/{m1_mask:#b}",
                                group.word_string(w)
                            ),
                        );
                    }
                    continue;
                }
                let Some(beta) = witness else {
                    return CheckResult::fail(
                        name,
                        format!(
                            "no witness for {} at masks {m_mask:#b}/{m1_mask:#b}",
                            group.word_string(w)
                        ),
                    );
                };
                // independent re-verification of the defining property
                let idx = rs.root_index(&beta).expect("witness is a root");
                let in_phi_n1 = idx < n && !rs.positive_roots()[idx].supported_on(m1_mask);
                let image = group.apply_index(w, idx);
                let lands_neg_phi_n =
                    image >= n && !rs.positive_roots()[image - n].supported_on(m_mask);
                if !in_phi_n1 || !lands_neg_phi_n {
                    return CheckResult::fail(
                        name,
                        format!(
                            "bad witness {beta} for {} at masks {m_mask:#b}/{m1_mask:#b}",
                            group.word_string(w)
                        ),
                    );
                }
                witnesses += 1;
            }
        }
    }
    CheckResult::pass(
        name,
        format!(
            "checked {} elements x {} (Delta_M, Delta_M1) pairs, {witnesses} witnesses verified",
            group.order(),
            (full + 1) * (full + 1)
        ),
    )
}

pub fn check_constituent_count(rs: &RootSystem) -> CheckResult {
    let name = "constituent-count-law";
    let descriptors = all_supercuspidal(rs);
    for sigma in &descriptors {
        let cons = match calculus::constituents(rs, sigma) {
            Ok(c) => c,
            Err(e) => return CheckResult::fail(name, format!("error: {e}")),
        };
        let expected = 1usize << sigma.delta_sigma().count_ones();
        if cons.len() != expected {
            return CheckResult::fail(
                name,
                format!(
                    "support {:#b} trivial_on {:#b}: {} constituents, expected {expected}",
                    sigma.support().members(),
                    sigma.trivial_on(),
                    cons.len()
                ),
            );
        }
    }
    CheckResult::pass(name, format!("{} descriptors", descriptors.len()))
}

/// Independent oracle: count upward-closed families by filtering every
/// family of subsets of the index set.
fn brute_force_upset_count(index_set: u64) -> usize {
    let mut subsets = Vec::new();
    let mut s = index_set;
    loop {
        subsets.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & index_set;
    }
    let k = subsets.len();
    (0u32..1 << k)
        .filter(|fam| {
            (0..k).all(|i| {
                fam & (1 << i) == 0
                    || subsets
                        .iter()
                        .enumerate()
                        .all(|(j, &t)| t & subsets[i] != subsets[i] || fam & (1 << j) != 0)
            })
        })
        .count()
}

pub fn check_lattice_sizes(rs: &RootSystem) -> CheckResult {
    let name = "lattice-size-oracle";
    let instances = all_m1_instances(rs);
    for (p1, t) in &instances {
        let lat = match calculus::subrep_lattice(rs, p1, t) {
            Ok(l) => l,
            Err(e) => return CheckResult::fail(name, format!("error: {e}")),
        };
        let expected = brute_force_upset_count(lat.index_set);
        if lat.size() != expected {
            return CheckResult::fail(
                name,
                format!(
                    "P1 {:#b}: size {} vs oracle {expected}",
                    p1.members(),
                    lat.size()
                ),
            );
        }
    }
    CheckResult::pass(name, format!("{} instances", instances.len()))
}

pub fn check_irreducibility_criterion(rs: &RootSystem) -> CheckResult {
    let name = "irreducibility-iff-lattice-size-2";
    let instances = all_m1_instances(rs);
    for (p1, t) in &instances {
        let irr = calculus::is_irreducible_induction(rs, p1, t).expect("valid instance");
        let lat = calculus::subrep_lattice(rs, p1, t).expect("valid instance");
        if irr != (lat.size() == 2) {
            return CheckResult::fail(
                name,
                format!("P1 {:#b}: predicate {irr}, lattice size {}", p1.members(), lat.size()),
            );
        }
    }
    CheckResult::pass(name, format!("{} instances", instances.len()))
}

pub fn check_adjoint_identity(rs: &RootSystem) -> CheckResult {
    let name = "adjoint-identity-at-g";
    let g = ParabolicSet::in_group(rs, rs.full_mask()).expect("full mask");
    let triples = all_triples(rs);
    for t in &triples {
        let t_min = t.minimize();
        let left = calculus::left_adjoint(rs, &g, t).expect("valid triple");
        let right = calculus::right_adjoint(rs, &g, t).expect("valid triple");
        if left.vanishes || left.result_triple != Some(t_min) {
            return CheckResult::fail(name, format!("left adjoint at G changes {t:?}"));
        }
        if right.vanishes || right.result_triple != Some(t_min) {
            return CheckResult::fail(name, format!("right adjoint at G changes {t:?}"));
        }
    }
    CheckResult::pass(name, format!("{} triples", triples.len()))
}

/// Transitivity of both adjoints through every intermediate Levi:
/// restricting to P_2 then to P_1 inside M_2 equals restricting to P_1.
pub fn check_jacquet_transitivity(rs: &RootSystem) -> CheckResult {
    let name = "adjoint-transitivity";
    let full = rs.full_mask();
    let triples = all_triples(rs);
    let mut checked = 0usize;
    for t in &triples {
        for p2_mask in 0..=full {
            let p2 = ParabolicSet::in_group(rs, p2_mask).expect("p2 below full");
            for p1_mask in 0..=p2_mask {
                if p1_mask & !p2_mask != 0 {
                    continue;
                }
                let p1 = ParabolicSet::in_group(rs, p1_mask).expect("p1 below full");
                let p1_in_m2 =
                    ParabolicSet::new(p1_mask, p2_mask).expect("p1 inside p2");
                for left in [true, false] {
                    let direct = if left {
                        calculus::left_adjoint(rs, &p1, t)
                    } else {
                        calculus::right_adjoint(rs, &p1, t)
                    }
                    .expect("valid triple");
                    let stage1 = if left {
                        calculus::left_adjoint(rs, &p2, t)
                    } else {
                        calculus::right_adjoint(rs, &p2, t)
                    }
                    .expect("valid triple");
                    let composed = match stage1.result_triple {
                        None => None,
                        Some(mid) => {
                            let step = if left {
                                calculus::left_adjoint(rs, &p1_in_m2, &mid)
                            } else {
                                calculus::right_adjoint(rs, &p1_in_m2, &mid)
                            }
                            .expect("valid intermediate triple");
                            step.result_triple
                        }
                    };
                    if direct.result_triple != composed {
                        return CheckResult::fail(
                            name,
                            format!(
                                "{} adjoint disagrees at P1 {p1_mask:#b}, P2 {p2_mask:#b}, {t:?}",
                                if left { "left" } else { "right" }
                            ),
                        );
                    }
                    checked += 1;
                }
            }
        }
    }
    CheckResult::pass(name, format!("{checked} compositions"))
}

/// The closed-form cuspidality classification must agree with the one
/// derived from the adjoint rules (all proper restrictions vanish).
pub fn check_cuspidality_cross(rs: &RootSystem) -> CheckResult {
    let name = "cuspidality-cross-check";
    let full = rs.full_mask();
    let triples = all_triples(rs);
    for t in &triples {
        let c = calculus::cuspidality(rs, t).expect("valid triple");
        let mut left_derived = true;
        let mut right_derived = true;
        for p1_mask in 0..full {
            let p1 = ParabolicSet::in_group(rs, p1_mask).expect("p1 below full");
            if !calculus::left_adjoint(rs, &p1, t).expect("valid").vanishes {
                left_derived = false;
            }
            if !calculus::right_adjoint(rs, &p1, t).expect("valid").vanishes {
                right_derived = false;
            }
        }
        if c.left_cuspidal != left_derived || c.right_cuspidal != right_derived {
            return CheckResult::fail(
                name,
                format!(
                    "closed form ({}, {}) vs adjoint-derived ({left_derived}, {right_derived}) at {t:?}",
                    c.left_cuspidal, c.right_cuspidal
                ),
            );
        }
    }
    CheckResult::pass(name, format!("{} triples", triples.len()))
}

/// Every rule must give identical output on a triple and its e-minimal
/// presentation.
pub fn check_minimalization_invariance(rs: &RootSystem) -> CheckResult {
    let name = "minimalization-invariance";
    let full = rs.full_mask();
    let triples = all_triples(rs);
    let mut nontrivial = 0usize;
    for t in &triples {
        let t_min = t.minimize();
        if *t != t_min {
            nontrivial += 1;
        }
        for p1_mask in 0..=full {
            let p1 = ParabolicSet::in_group(rs, p1_mask).expect("p1 below full");
            let l = calculus::left_adjoint(rs, &p1, t).expect("valid");
            let l_min = calculus::left_adjoint(rs, &p1, &t_min).expect("valid");
            let r = calculus::right_adjoint(rs, &p1, t).expect("valid");
            let r_min = calculus::right_adjoint(rs, &p1, &t_min).expect("valid");
            if l != l_min || r != r_min {
                return CheckResult::fail(
                    name,
                    format!("adjoint differs after minimalization at P1 {p1_mask:#b}, {t:?}"),
                );
            }
        }
        let c = calculus::cuspidality(rs, t).expect("valid");
        let c_min = calculus::cuspidality(rs, &t_min).expect("valid");
        if c != c_min {
            return CheckResult::fail(name, format!("cuspidality differs at {t:?}"));
        }
    }
    CheckResult::pass(
        name,
        format!("{} triples ({nontrivial} non-minimal)", triples.len()),
    )
}

pub fn check_geometric_lemma(group: &WeylGroup) -> CheckResult {
    let name = "geometric-lemma-cells";
    let full = group.root_system().full_mask();
    for m_mask in 0..=full {
        for m1_mask in 0..=full {
            let report = calculus::geometric_lemma_report(group, m_mask, m1_mask);
            let survivors: Vec<_> = report.cells.iter().filter(|c| c.survivor).collect();
            if survivors.len() != 1 || survivors[0].word != "e" {
                return CheckResult::fail(
                    name,
                    format!("survivor set wrong at masks {m_mask:#b}/{m1_mask:#b}"),
                );
            }
            if report
                .cells
                .iter()
                .any(|c| !c.survivor && c.witness.is_none())
            {
                return CheckResult::fail(
                    name,
                    format!("missing witness at masks {m_mask:#b}/{m1_mask:#b}"),
                );
            }
            if report.cells.last().map(|c| c.survivor) != Some(true) {
                return CheckResult::fail(
                    name,
                    format!("identity cell not last at masks {m_mask:#b}/{m1_mask:#b}"),
                );
            }
        }
    }
    CheckResult::pass(name, format!("{} mask pairs", (full + 1) * (full + 1)))
}

/// The full suite for one system.
pub fn verify_system(rs: &RootSystem, group: &WeylGroup) -> Vec<CheckResult> {
    vec![
        check_bruhat_axioms(group),
        check_w0_reversal(group),
        check_coset_count_law(group),
        check_double_coset_partition(group),
        check_lemma55(group),
        check_geometric_lemma(group),
        check_constituent_count(rs),
        check_lattice_sizes(rs),
        check_irreducibility_criterion(rs),
        check_adjoint_identity(rs),
        check_jacquet_transitivity(rs),
        check_cuspidality_cross(rs),
        check_minimalization_invariance(rs),
    ]
}

/// Convenience wrapper building the group first.
pub fn verify_system_bounded(rs: &RootSystem, group_bound: usize) -> Result<Vec<CheckResult>> {
    let group = WeylGroup::generate_bounded(rs, group_bound)?;
    Ok(verify_system(rs, &group))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, CartanDatum, CartanType};

    #[test]
    fn suite_passes_on_a2() {
        let rs = build_root_system(CartanDatum::of_type(&CartanType::A(2))).unwrap();
        let group = WeylGroup::generate(&rs).unwrap();
        for check in verify_system(&rs, &group) {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn suite_passes_on_a1xa1() {
        let rs = build_root_system(CartanDatum::of_type(&CartanType::parse("A1xA1").unwrap()))
            .unwrap();
        let group = WeylGroup::generate(&rs).unwrap();
        for check in verify_system(&rs, &group) {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
    }

    #[test]
    fn oracle_matches_dedekind_numbers() {
        assert_eq!(brute_force_upset_count(0), 2);
        assert_eq!(brute_force_upset_count(0b1), 3);
        assert_eq!(brute_force_upset_count(0b11), 6);
        assert_eq!(brute_force_upset_count(0b111), 20);
    }
}
