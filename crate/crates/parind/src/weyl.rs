//! The Weyl group engine: element arithmetic, length, Bruhat order,
//! longest elements, coset and double-coset representatives, and the
//! upper-set filtration enumerator.
//!
//! Elements are canonically the permutations they induce on the roots;
//! each element also carries a reduced word as a witness. Equality is
//! equality of permutations, never of words.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rootsys::{Root, RootSystem};

/// Default guard on the group order.
pub const DEFAULT_GROUP_BOUND: usize = 10_000_000;

/// Handle to an element of a generated [`WeylGroup`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt(pub u32);

#[derive(Debug, Clone)]
struct ElemData {
    perm: Vec<u32>,
    word: Vec<u8>,
}

/// A fully enumerated Weyl group attached to a root system.
#[derive(Debug, Clone)]
pub struct WeylGroup {
    rs: RootSystem,
    elems: Vec<ElemData>,
    index: HashMap<Vec<u32>, u32>,
}

/// Minimal coset representatives of `W_Q \ W`.
#[derive(Debug, Clone)]
pub struct CosetRepSet {
    pub delta_q: u64,
    pub reps: Vec<WeylElt>,
}

impl WeylGroup {
    pub fn generate(rs: &RootSystem) -> Result<WeylGroup> {
        WeylGroup::generate_bounded(rs, DEFAULT_GROUP_BOUND)
    }

    /// Breadth-first closure under right multiplication by the simple
    /// reflections. BFS order guarantees the stored word of each element
    /// is reduced and (length, lex)-minimal.
    pub fn generate_bounded(rs: &RootSystem, bound: usize) -> Result<WeylGroup> {
        let nroots = rs.num_roots();
        let identity: Vec<u32> = (0..nroots as u32).collect();
        let mut elems = vec![ElemData {
            perm: identity.clone(),
            word: Vec::new(),
        }];
        let mut index = HashMap::new();
        index.insert(identity, 0u32);

        let mut frontier = 0usize;
        while frontier < elems.len() {
            let upper = elems.len();
            for e in frontier..upper {
                for i in 0..rs.rank() {
                    let table = rs.simple_reflection_table(i);
                    // (w s_i)(r) = w(s_i(r))
                    let perm: Vec<u32> = (0..nroots)
                        .map(|r| elems[e].perm[table[r]])
                        .collect();
                    if !index.contains_key(&perm) {
                        if elems.len() >= bound {
                            return Err(Error::GroupTooLarge { bound });
                        }
                        let mut word = elems[e].word.clone();
                        word.push(i as u8);
                        index.insert(perm.clone(), elems.len() as u32);
                        elems.push(ElemData { perm, word });
                    }
                }
            }
            frontier = upper;
        }

        let group = WeylGroup {
            rs: rs.clone(),
            elems,
            index,
        };
        debug_assert!(group
            .all()
            .all(|w| group.length(w) == group.word(w).len()));
        Ok(group)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> WeylElt {
        WeylElt(0)
    }

    pub fn all(&self) -> impl Iterator<Item = WeylElt> + '_ {
        (0..self.elems.len() as u32).map(WeylElt)
    }

    pub fn word(&self, w: WeylElt) -> &[u8] {
        &self.elems[w.0 as usize].word
    }

    pub fn perm(&self, w: WeylElt) -> &[u32] {
        &self.elems[w.0 as usize].perm
    }

    /// `w` applied to the root with internal index `idx`.
    pub fn apply_index(&self, w: WeylElt, idx: usize) -> usize {
        self.elems[w.0 as usize].perm[idx] as usize
    }

    pub fn apply(&self, w: WeylElt, r: &Root) -> Result<Root> {
        let idx = self.rs.root_index(r)?;
        Ok(self.rs.root(self.apply_index(w, idx)))
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self, w: WeylElt) -> usize {
        let n = self.rs.num_positive();
        (0..n)
            .filter(|&i| self.apply_index(w, i) >= n)
            .count()
    }

    pub fn simple_reflection(&self, i: usize) -> WeylElt {
        let nroots = self.rs.num_roots();
        let table = self.rs.simple_reflection_table(i);
        let perm: Vec<u32> = (0..nroots).map(|r| table[r] as u32).collect();
        WeylElt(self.index[&perm])
    }

    pub fn mul(&self, a: WeylElt, b: WeylElt) -> WeylElt {
        let pa = &self.elems[a.0 as usize].perm;
        let pb = &self.elems[b.0 as usize].perm;
        // (ab)(r) = a(b(r))
        let perm: Vec<u32> = pb.iter().map(|&r| pa[r as usize]).collect();
        WeylElt(self.index[&perm])
    }

    pub fn inverse(&self, w: WeylElt) -> WeylElt {
        let p = &self.elems[w.0 as usize].perm;
        let mut perm = vec![0u32; p.len()];
        for (i, &v) in p.iter().enumerate() {
            perm[v as usize] = i as u32;
        }
        WeylElt(self.index[&perm])
    }

    /// The element with the given reduced (or unreduced) word.
    pub fn from_word(&self, word: &[u8]) -> WeylElt {
        word.iter()
            .fold(self.identity(), |acc, &i| {
                self.mul(acc, self.simple_reflection(i as usize))
            })
    }

    /// Serialized word, e.g. "s1*s2*s1"; the identity is "e".
    pub fn word_string(&self, w: WeylElt) -> String {
        let word = self.word(w);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter()
                .map(|&i| format!("s{}", i + 1))
                .collect::<Vec<_>>()
                .join("*")
        }
    }

    /// Parses "e" or "s1*s2*..." into an element.
    pub fn parse_word(&self, s: &str) -> Result<WeylElt> {
        if s == "e" {
            return Ok(self.identity());
        }
        let mut w = self.identity();
        for part in s.split('*') {
            let idx: usize = part
                .strip_prefix('s')
                .and_then(|p| p.parse().ok())
                .filter(|&i: &usize| i >= 1 && i <= self.rs.rank())
                .ok_or_else(|| Error::InvalidCartan(format!("bad word component '{part}'")))?;
            w = self.mul(w, self.simple_reflection(idx - 1));
        }
        Ok(w)
    }

    /// Elements of the parabolic subgroup W_J.
    pub fn parabolic_subgroup(&self, delta_j: u64) -> Vec<WeylElt> {
        let gens: Vec<WeylElt> = (0..self.rs.rank())
            .filter(|i| delta_j & (1 << i) != 0)
            .map(|i| self.simple_reflection(i))
            .collect();
        let mut seen = vec![false; self.elems.len()];
        seen[0] = true;
        let mut out = vec![self.identity()];
        let mut frontier = vec![self.identity()];
        while let Some(w) = frontier.pop() {
            for &g in &gens {
                let x = self.mul(w, g);
                if !seen[x.0 as usize] {
                    seen[x.0 as usize] = true;
                    out.push(x);
                    frontier.push(x);
                }
            }
        }
        out.sort();
        out
    }

    /// The unique longest element of W_J.
    pub fn longest_element(&self, delta_j: u64) -> WeylElt {
        self.parabolic_subgroup(delta_j)
            .into_iter()
            .max_by_key(|&w| self.length(w))
            .expect("subgroup contains the identity")
    }

    fn left_descent(&self, w: WeylElt) -> Option<usize> {
        // l(s_i w) < l(w)  iff  w^{-1}(a_i) < 0
        let inv = self.inverse(w);
        (0..self.rs.rank()).find(|&i| {
            let idx = self.rs.simple_index(i);
            !self.rs.is_positive_index(self.apply_index(inv, idx))
        })
    }

    /// Bruhat order via the lifting property: if s v < v then
    /// u <= v iff (su < u ? su <= sv : u <= sv).
    pub fn bruhat_leq(&self, u: WeylElt, v: WeylElt) -> bool {
        if u == self.identity() {
            return true;
        }
        if self.length(u) > self.length(v) {
            return false;
        }
        let i = self
            .left_descent(v)
            .expect("non-identity element has a descent");
        let s = self.simple_reflection(i);
        let sv = self.mul(s, v);
        let su = self.mul(s, u);
        if self.length(su) < self.length(u) {
            self.bruhat_leq(su, sv)
        } else {
            self.bruhat_leq(u, sv)
        }
    }

    /// Minimal-length representatives of W_Q \ W: the w with
    /// w^{-1}(a) > 0 for all a in Delta_Q, ordered by (length, lex word).
    pub fn min_coset_reps(&self, delta_q: u64) -> CosetRepSet {
        let mut reps: Vec<WeylElt> = self
            .all()
            .filter(|&w| self.is_min_in_coset(w, delta_q))
            .collect();
        reps.sort_by(|&a, &b| {
            (self.length(a), self.word(a)).cmp(&(self.length(b), self.word(b)))
        });
        CosetRepSet { delta_q, reps }
    }

    /// Membership in ^Q W.
    pub fn is_min_in_coset(&self, w: WeylElt, delta_q: u64) -> bool {
        let inv = self.inverse(w);
        (0..self.rs.rank()).all(|i| {
            delta_q & (1 << i) == 0 || {
                let idx = self.rs.simple_index(i);
                self.rs.is_positive_index(self.apply_index(inv, idx))
            }
        })
    }

    /// Minimal-length representatives of W_I \ W / W_J, in the filtration
    /// order: length-decreasing, so every prefix of the list is a union of
    /// open cells; the identity (the PP_1 cell) comes last.
    pub fn double_coset_reps(&self, delta_i: u64, delta_j: u64) -> Vec<WeylElt> {
        let mut reps: Vec<WeylElt> = self
            .all()
            .filter(|&w| {
                self.is_min_in_coset(w, delta_i)
                    && (0..self.rs.rank()).all(|i| {
                        delta_j & (1 << i) == 0 || {
                            let idx = self.rs.simple_index(i);
                            self.rs.is_positive_index(self.apply_index(w, idx))
                        }
                    })
            })
            .collect();
        reps.sort_by(|&a, &b| {
            (self.length(b), self.word(a)).cmp(&(self.length(a), self.word(b)))
        });
        reps
    }

    /// The double coset W_I w W_J containing w, as a sorted element list.
    pub fn double_coset(&self, delta_i: u64, delta_j: u64, w: WeylElt) -> Vec<WeylElt> {
        let wi = self.parabolic_subgroup(delta_i);
        let wj = self.parabolic_subgroup(delta_j);
        let mut out: Vec<WeylElt> = Vec::new();
        for &a in &wi {
            let aw = self.mul(a, w);
            for &b in &wj {
                out.push(self.mul(aw, b));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Some root in Phi_{N_1} sent into -Phi_N by w, when w lies outside
    /// W_M W_{M_1}; membership is decided by enumerating the product set.
    /// Returns the smallest witness in root order.
    pub fn lemma_5_5_witness(
        &self,
        delta_m: u64,
        delta_m1: u64,
        w: WeylElt,
    ) -> Option<Root> {
        let wm = self.parabolic_subgroup(delta_m);
        let wm1 = self.parabolic_subgroup(delta_m1);
        for &a in &wm {
            for &b in &wm1 {
                if self.mul(a, b) == w {
                    return None;
                }
            }
        }
        self.witness_root(delta_m, delta_m1, w)
    }

    /// Searches Phi_{N_1} for a root sent into -Phi_N; independent of the
    /// membership test above.
    pub fn witness_root(&self, delta_m: u64, delta_m1: u64, w: WeylElt) -> Option<Root> {
        let n = self.rs.num_positive();
        let (_, phi_n1) = self.rs.phi_split(delta_m1);
        for idx in phi_n1 {
            let image = self.apply_index(w, idx);
            if image >= n && !self.rs.positive_roots()[image - n].supported_on(delta_m) {
                return Some(self.rs.positive_roots()[idx].clone());
            }
        }
        None
    }

    /// Enumerates ^Q W in an order where each successive element is
    /// Bruhat-minimal among the remainder, flagging membership in ^{Q_1}W.
    pub fn filtration_cells(
        &self,
        delta_q: u64,
        delta_q1: u64,
    ) -> Result<Vec<(WeylElt, bool)>> {
        if delta_q & !delta_q1 != 0 {
            return Err(Error::InvalidNesting(
                "Delta_Q must be contained in Delta_Q1".into(),
            ));
        }
        let reps = self.min_coset_reps(delta_q);
        Ok(reps
            .reps
            .into_iter()
            .map(|w| (w, self.is_min_in_coset(w, delta_q1)))
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::{build_root_system, CartanDatum, CartanType};

    fn group(t: &str) -> WeylGroup {
        let rs =
            build_root_system(CartanDatum::of_type(&CartanType::parse(t).unwrap())).unwrap();
        WeylGroup::generate(&rs).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(group("A1").order(), 2);
        assert_eq!(group("A2").order(), 6);
        assert_eq!(group("B2").order(), 8);
        assert_eq!(group("G2").order(), 12);
        assert_eq!(group("A3").order(), 24);
        assert_eq!(group("B3").order(), 48);
    }

    #[test]
    fn guard_trips() {
        let rs = build_root_system(CartanDatum::of_type(&CartanType::A(3))).unwrap();
        assert!(matches!(
            WeylGroup::generate_bounded(&rs, 10),
            Err(Error::GroupTooLarge { bound: 10 })
        ));
    }

    #[test]
    fn longest_element_lengths() {
        let w = group("A2");
        assert_eq!(w.length(w.longest_element(w.root_system().full_mask())), 3);
        assert_eq!(w.longest_element(0), w.identity());
        let s1_long = w.longest_element(0b01);
        assert_eq!(s1_long, w.simple_reflection(0));
        assert_eq!(w.length(s1_long), 1);
    }

    #[test]
    fn longest_element_length_is_num_positive() {
        for t in ["A1", "A2", "B2", "G2", "A3", "B3", "C3", "A1xA2"] {
            let w = group(t);
            assert_eq!(
                w.length(w.longest_element(w.root_system().full_mask())),
                w.root_system().num_positive(),
                "type {t}"
            );
        }
    }

    #[test]
    fn bruhat_examples() {
        let w = group("A2");
        let s1 = w.simple_reflection(0);
        let s2 = w.simple_reflection(1);
        let s1s2 = w.mul(s1, s2);
        for x in w.all() {
            assert!(w.bruhat_leq(w.identity(), x));
        }
        assert!(w.bruhat_leq(s1, s1s2));
        assert!(!w.bruhat_leq(s1, s2));
    }

    #[test]
    fn bruhat_subword_oracle() {
        // independent oracle: u <= v iff some reduced word of v has u as a
        // subword; we check against every word of v obtained by BFS words.
        for t in ["A2", "B2", "A1xA1"] {
            let w = group(t);
            for u in w.all() {
                for v in w.all() {
                    assert_eq!(
                        w.bruhat_leq(u, v),
                        subword_leq(&w, u, v),
                        "{t}: {} vs {}",
                        w.word_string(u),
                        w.word_string(v)
                    );
                }
            }
        }
    }

    /// Brute-force subword criterion on the stored reduced word of v.
    fn subword_leq(w: &WeylGroup, u: WeylElt, v: WeylElt) -> bool {
        let word = w.word(v).to_vec();
        let k = word.len();
        (0u32..1 << k).any(|mask| {
            let sub: Vec<u8> = word
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            w.from_word(&sub) == u && sub.len() == w.length(u)
        })
    }

    #[test]
    fn coset_reps_a2() {
        let w = group("A2");
        let reps = w.min_coset_reps(0b01);
        let words: Vec<String> = reps.reps.iter().map(|&x| w.word_string(x)).collect();
        assert_eq!(words, vec!["e", "s2", "s2*s1"]);
        assert_eq!(w.min_coset_reps(0).reps.len(), 6);
        assert_eq!(w.min_coset_reps(0b11).reps.len(), 1);
    }

    #[test]
    fn coset_count_law() {
        for t in ["A2", "B2", "G2", "A3", "B3"] {
            let w = group(t);
            for mask in 0..=w.root_system().full_mask() {
                let reps = w.min_coset_reps(mask);
                let sub = w.parabolic_subgroup(mask);
                assert_eq!(reps.reps.len() * sub.len(), w.order(), "type {t}");
            }
        }
    }

    #[test]
    fn double_coset_examples() {
        let w = group("A2");
        assert_eq!(w.double_coset_reps(w.root_system().full_mask(), 0).len(), 1);
        let reps = w.double_coset_reps(0b01, 0b10);
        let words: Vec<String> = reps.iter().map(|&x| w.word_string(x)).collect();
        assert_eq!(words, vec!["s2*s1", "e"]);
        assert_eq!(w.double_coset_reps(0, 0).len(), 6);
    }

    #[test]
    fn double_cosets_partition() {
        for t in ["A2", "B2", "A3"] {
            let w = group(t);
            let full = w.root_system().full_mask();
            for i_mask in 0..=full {
                for j_mask in 0..=full {
                    let reps = w.double_coset_reps(i_mask, j_mask);
                    let mut seen = vec![false; w.order()];
                    for &r in &reps {
                        for x in w.double_coset(i_mask, j_mask, r) {
                            assert!(!seen[x.0 as usize], "{t}: overlap");
                            seen[x.0 as usize] = true;
                        }
                    }
                    assert!(seen.iter().all(|&b| b), "{t}: not covering");
                }
            }
        }
    }

    #[test]
    fn lemma_5_5_a2_examples() {
        let w = group("A2");
        let s1 = w.simple_reflection(0);
        let s2 = w.simple_reflection(1);
        let beta = w.lemma_5_5_witness(0, 0, s1).unwrap();
        assert_eq!(beta.coords, vec![1, 0]);
        assert!(w.lemma_5_5_witness(0, 0, w.identity()).is_none());
        let beta = w.lemma_5_5_witness(0b01, 0b01, s2).unwrap();
        assert_eq!(beta.coords, vec![0, 1]);
    }

    #[test]
    fn filtration_cells_examples() {
        let w = group("A2");
        let cells = w.filtration_cells(0, 0b01).unwrap();
        assert_eq!(cells.len(), 6);
        assert_eq!(cells.iter().filter(|(_, c)| *c).count(), 3);
        let all_flagged = w.filtration_cells(0b01, 0b01).unwrap();
        assert!(all_flagged.iter().all(|(_, c)| *c));
        let full = w.filtration_cells(0, w.root_system().full_mask()).unwrap();
        assert_eq!(full.iter().filter(|(_, c)| *c).count(), 1);
        assert!(full[0].1); // the identity cell
        assert!(w.filtration_cells(0b10, 0b01).is_err());
    }

    #[test]
    fn filtration_suffixes_are_upper_sets() {
        let w = group("B2");
        let cells = w.filtration_cells(0, 0b01).unwrap();
        // each successive element must be Bruhat-minimal among the rest
        for (k, &(x, _)) in cells.iter().enumerate() {
            for &(y, _) in &cells[k + 1..] {
                assert!(!w.bruhat_leq(y, x) || y == x);
            }
        }
    }

    #[test]
    fn length_subadditive() {
        for t in ["A2", "B2", "G2"] {
            let w = group(t);
            for a in w.all() {
                for b in w.all() {
                    let ab = w.mul(a, b);
                    assert!(w.length(ab) <= w.length(a) + w.length(b));
                    let concat: Vec<u8> =
                        [w.word(a), w.word(b)].concat();
                    let reduced = w.length(ab) == concat.len();
                    assert_eq!(
                        reduced,
                        w.length(ab) == w.length(a) + w.length(b)
                    );
                }
            }
        }
    }

    #[test]
    fn word_roundtrip() {
        let w = group("B2");
        for x in w.all() {
            let s = w.word_string(x);
            assert_eq!(w.parse_word(&s).unwrap(), x);
        }
    }
}
