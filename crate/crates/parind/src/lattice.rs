//! Lattices of upper sets of a Boolean poset P(index_set), realizing
//! subrepresentation lattices. Elements are enumerated through their
//! antichains of minimal subsets.

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::triples::GTriple;

/// Guard on the index-set size (up-set counts grow like Dedekind numbers).
pub const UPSET_GUARD: usize = 20;

/// One irreducible constituent, parametrized by its marker subset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub triple: GTriple,
    /// `Delta_{Q'} n (Delta - Delta_{P_1})`, a subset of the index set.
    pub marker: u64,
}

/// An element of the lattice: an upward-closed family of subsets of the
/// index set, stored as sorted masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperSet {
    pub subsets: Vec<u64>,
}

impl UpperSet {
    pub fn contains(&self, mask: u64) -> bool {
        self.subsets.contains(&mask)
    }
}

/// The lattice of subrepresentations: all upper sets of P(index_set),
/// with the covering relation and the constituent dictionary.
#[derive(Debug, Clone)]
pub struct SubrepLattice {
    /// Subset of Delta indexing the constituents.
    pub index_set: u64,
    /// One constituent per subset of the index set, ordered by
    /// (popcount, value) of the marker.
    pub constituents: Vec<Constituent>,
    /// All upper sets, ordered by (size, lexicographic subset list);
    /// the first element is the bottom (zero), the last is the top.
    pub elements: Vec<UpperSet>,
    /// Covering pairs (lower element index, upper element index).
    pub hasse_edges: Vec<(usize, usize)>,
    /// For each constituent, the index of its principal upper set (the
    /// smallest subrepresentation with that constituent as cosocle).
    pub principal_element: Vec<usize>,
}

impl SubrepLattice {
    /// Builds the lattice from the index set and a constituent builder
    /// invoked once per marker subset.
    pub fn build(
        index_set: u64,
        mut make_constituent: impl FnMut(u64) -> Constituent,
    ) -> Result<SubrepLattice> {
        let n = index_set.count_ones() as usize;
        if n > UPSET_GUARD {
            return Err(Error::UpSetGuard {
                size: n,
                bound: UPSET_GUARD,
            });
        }

        let subsets = submasks_sorted(index_set);
        let constituents: Vec<Constituent> =
            subsets.iter().map(|&s| make_constituent(s)).collect();

        let mut elements: Vec<UpperSet> = enumerate_upper_sets(&subsets)
            .into_iter()
            .map(|subsets| UpperSet { subsets })
            .collect();
        elements.sort_by(|a, b| {
            (a.subsets.len(), &a.subsets).cmp(&(b.subsets.len(), &b.subsets))
        });

        // in a lattice of up-sets, covering pairs differ by one subset
        let mut hasse_edges = Vec::new();
        for (i, lo) in elements.iter().enumerate() {
            for (j, hi) in elements.iter().enumerate() {
                if hi.subsets.len() == lo.subsets.len() + 1
                    && lo.subsets.iter().all(|s| hi.subsets.contains(s))
                {
                    hasse_edges.push((i, j));
                }
            }
        }

        let principal_element = subsets
            .iter()
            .map(|&s| {
                let mut up: Vec<u64> = subsets
                    .iter()
                    .copied()
                    .filter(|&t| t & s == s)
                    .collect();
                up.sort_unstable();
                elements
                    .iter()
                    .position(|e| e.subsets == up)
                    .expect("principal up-set is an element")
            })
            .collect();

        Ok(SubrepLattice {
            index_set,
            constituents,
            elements,
            hasse_edges,
            principal_element,
        })
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Socle: marker = full index set; cosocle: marker = empty set.
    pub fn socle_cosocle(&self) -> (&Constituent, &Constituent) {
        let socle = self
            .constituents
            .iter()
            .find(|c| c.marker == self.index_set)
            .expect("socle present");
        let cosocle = self
            .constituents
            .iter()
            .find(|c| c.marker == 0)
            .expect("cosocle present");
        (socle, cosocle)
    }

    /// Hasse diagram in DOT form, cosocle-side (whole representation) at
    /// the top and the zero subrepresentation at the bottom.
    pub fn to_dot(&self, rs: &RootSystem, title: &str) -> String {
        let (socle, cosocle) = self.socle_cosocle();
        let socle_el = self.principal_element[self
            .constituents
            .iter()
            .position(|c| c.marker == socle.marker)
            .unwrap()];
        let cosocle_el = self.principal_element[self
            .constituents
            .iter()
            .position(|c| c.marker == cosocle.marker)
            .unwrap()];

        let mut out = String::new();
        out.push_str(&format!("digraph \"{title}\" {{\n"));
        out.push_str("  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n");
        for (i, el) in self.elements.iter().enumerate() {
            let label = if el.subsets.is_empty() {
                "0".to_string()
            } else {
                el.subsets
                    .iter()
                    .map(|&m| marker_label(rs, m))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let mut attrs = format!("label=\"{label}\"");
            if i == socle_el {
                attrs.push_str(", style=filled, fillcolor=lightblue, xlabel=\"socle\"");
            }
            if i == cosocle_el {
                attrs.push_str(", style=filled, fillcolor=lightyellow, xlabel=\"cosocle\"");
            }
            out.push_str(&format!("  n{i} [{attrs}];\n"));
        }
        for &(lo, hi) in &self.hasse_edges {
            out.push_str(&format!("  n{hi} -> n{lo};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Label for a marker subset, e.g. "{a1,a2}" or "{}".
pub fn marker_label(rs: &RootSystem, mask: u64) -> String {
    format!("{{{}}}", rs.mask_labels(mask).join(","))
}

/// All submasks of `mask`, sorted by (popcount, value).
pub fn submasks_sorted(mask: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut s = mask;
    loop {
        out.push(s);
        if s == 0 {
            break;
        }
        s = (s - 1) & mask;
    }
    out.sort_by_key(|&s| (s.count_ones(), s));
    out
}

/// Enumerates every upward-closed family over the given subsets by
/// iterating antichains of minimal elements.
fn enumerate_upper_sets(subsets: &[u64]) -> Vec<Vec<u64>> {
    let mut antichains: Vec<Vec<u64>> = Vec::new();
    let mut current: Vec<u64> = Vec::new();
    collect_antichains(subsets, 0, &mut current, &mut antichains);

    antichains
        .into_iter()
        .map(|chain| {
            let mut up: Vec<u64> = subsets
                .iter()
                .copied()
                .filter(|&t| chain.iter().any(|&a| t & a == a))
                .collect();
            up.sort_unstable();
            up
        })
        .collect()
}

fn collect_antichains(
    subsets: &[u64],
    start: usize,
    current: &mut Vec<u64>,
    out: &mut Vec<Vec<u64>>,
) {
    out.push(current.clone());
    for i in start..subsets.len() {
        let cand = subsets[i];
        let comparable = current
            .iter()
            .any(|&a| a & cand == a || a & cand == cand);
        if !comparable {
            current.push(cand);
            collect_antichains(subsets, i + 1, current, out);
            current.pop();
        }
    }
}
