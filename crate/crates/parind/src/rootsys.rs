//! Finite crystallographic root systems built from Cartan data.
//!
//! Roots are integer vectors of coefficients over the simple roots. The
//! system is generated by closing the simple roots under the simple
//! reflections `s_i(r) = r - <r, a_i^v> a_i`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default bound on the total number of roots produced by the closure.
pub const DEFAULT_ROOT_BOUND: usize = 10_000;

/// A named finite type with Bourbaki numbering, or a product of such.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    Product(Vec<CartanType>),
}

impl CartanType {
    /// Parses strings like "A2", "B3", "G2" or products "A1xA1", "A1xA2".
    pub fn parse(s: &str) -> Result<CartanType> {
        let parts: Vec<&str> = s.split(['x', 'X']).collect();
        if parts.len() > 1 {
            let factors = parts
                .iter()
                .map(|p| CartanType::parse(p))
                .collect::<Result<Vec<_>>>()?;
            return Ok(CartanType::Product(factors));
        }
        let s = s.trim();
        let bad = || Error::InvalidCartan(format!("unrecognized type '{s}'"));
        if s.len() < 2 {
            return Err(bad());
        }
        let (letter, num) = s.split_at(1);
        let n: usize = num.parse().map_err(|_| bad())?;
        match (letter, n) {
            ("A" | "a", n) if n >= 1 => Ok(CartanType::A(n)),
            ("B" | "b", n) if n >= 2 => Ok(CartanType::B(n)),
            ("C" | "c", n) if n >= 2 => Ok(CartanType::C(n)),
            ("D" | "d", n) if n >= 3 => Ok(CartanType::D(n)),
            ("E" | "e", n) if (6..=8).contains(&n) => Ok(CartanType::E(n)),
            ("F" | "f", 4) => Ok(CartanType::F4),
            ("G" | "g", 2) => Ok(CartanType::G2),
            _ => Err(bad()),
        }
    }

    /// The Cartan matrix of the type, rows indexed by Bourbaki labels.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        fn chain(n: usize) -> Vec<Vec<i64>> {
            let mut m = vec![vec![0i64; n]; n];
            for i in 0..n {
                m[i][i] = 2;
                if i + 1 < n {
                    m[i][i + 1] = -1;
                    m[i + 1][i] = -1;
                }
            }
            m
        }
        match self {
            CartanType::A(n) => chain(*n),
            CartanType::B(n) => {
                // a_n is the short root: <a_{n-1}, a_n^v> = -2
                let mut m = chain(*n);
                m[n - 2][n - 1] = -2;
                m
            }
            CartanType::C(n) => {
                let mut m = chain(*n);
                m[n - 1][n - 2] = -2;
                m
            }
            CartanType::D(n) => {
                let n = *n;
                let mut m = chain(n - 1);
                for row in m.iter_mut() {
                    row.push(0);
                }
                m.push(vec![0; n]);
                m[n - 1][n - 1] = 2;
                // detach a_{n-1} -- a_{n-2} and attach a_n to a_{n-2}
                m[n - 3][n - 1] = -1;
                m[n - 1][n - 3] = -1;
                m[n - 2][n - 1] = 0;
                m[n - 1][n - 2] = 0;
                m
            }
            CartanType::E(n) => {
                let n = *n;
                let mut m = vec![vec![0i64; n]; n];
                for i in 0..n {
                    m[i][i] = 2;
                }
                // Bourbaki: chain 1-3-4-5-...-n, with 2 attached to 4.
                let mut edge = |i: usize, j: usize| {
                    m[i][j] = -1;
                    m[j][i] = -1;
                };
                edge(0, 2);
                edge(2, 3);
                edge(1, 3);
                for i in 3..n - 1 {
                    edge(i, i + 1);
                }
                m
            }
            CartanType::F4 => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            CartanType::G2 => vec![vec![2, -1], vec![-3, 2]],
            CartanType::Product(factors) => {
                let blocks: Vec<Vec<Vec<i64>>> = factors.iter().map(|f| f.matrix()).collect();
                let rank: usize = blocks.iter().map(|b| b.len()).sum();
                let mut m = vec![vec![0i64; rank]; rank];
                let mut off = 0;
                for b in &blocks {
                    for (i, row) in b.iter().enumerate() {
                        for (j, &v) in row.iter().enumerate() {
                            m[off + i][off + j] = v;
                        }
                    }
                    off += b.len();
                }
                m
            }
        }
    }
}

/// Cartan input: the matrix of pairings `matrix[i][j] = <a_i, a_j^v>`
/// together with labels for the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanDatum {
    pub rank: usize,
    pub matrix: Vec<Vec<i64>>,
    pub labels: Vec<String>,
}

impl CartanDatum {
    pub fn new(matrix: Vec<Vec<i64>>) -> Result<CartanDatum> {
        let rank = matrix.len();
        let labels = (1..=rank).map(|i| format!("a{i}")).collect();
        CartanDatum::with_labels(matrix, labels)
    }

    pub fn with_labels(matrix: Vec<Vec<i64>>, labels: Vec<String>) -> Result<CartanDatum> {
        let rank = matrix.len();
        if rank == 0 {
            return Err(Error::InvalidCartan("rank must be positive".into()));
        }
        if rank > 60 {
            return Err(Error::InvalidCartan(format!("rank {rank} too large")));
        }
        if labels.len() != rank {
            return Err(Error::InvalidCartan(format!(
                "{} labels for rank {rank}",
                labels.len()
            )));
        }
        for (i, row) in matrix.iter().enumerate() {
            if row.len() != rank {
                return Err(Error::InvalidCartan(format!(
                    "row {i} has length {}, expected {rank}",
                    row.len()
                )));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!(
                    "diagonal entry [{i}][{i}] is {}, must be 2",
                    row[i]
                )));
            }
            for j in 0..rank {
                if i != j && row[j] > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "off-diagonal entry [{i}][{j}] is {}, must be <= 0",
                        row[j]
                    )));
                }
                if (matrix[i][j] == 0) != (matrix[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "entries [{i}][{j}] and [{j}][{i}] must vanish together"
                    )));
                }
            }
        }
        Ok(CartanDatum {
            rank,
            matrix,
            labels,
        })
    }

    pub fn of_type(t: &CartanType) -> CartanDatum {
        CartanDatum::new(t.matrix()).expect("named types are valid Cartan matrices")
    }
}

/// A root, stored as its coefficient vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut coords = vec![0; rank];
        coords[i] = 1;
        Root { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }

    /// True when every nonzero coefficient sits inside the subset mask.
    pub fn supported_on(&self, mask: u64) -> bool {
        self.coords
            .iter()
            .enumerate()
            .all(|(i, &c)| c == 0 || mask & (1 << i) != 0)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coords)
    }
}

/// A finite root system with its reflection tables.
///
/// Roots are indexed `0..n` (the positive roots in height-then-lex order)
/// followed by `n..2n` (their negatives, in the same order).
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanDatum,
    positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    simple_reflection_tables: Vec<Vec<usize>>,
}

impl RootSystem {
    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank
    }

    pub fn labels(&self) -> &[String] {
        &self.cartan.labels
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The root with the given internal index.
    pub fn root(&self, idx: usize) -> Root {
        let n = self.positive_roots.len();
        if idx < n {
            self.positive_roots[idx].clone()
        } else {
            self.positive_roots[idx - n].negated()
        }
    }

    pub fn root_index(&self, r: &Root) -> Result<usize> {
        self.index
            .get(&r.coords)
            .copied()
            .ok_or_else(|| Error::UnknownRoot(r.coords.clone()))
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.positive_roots.len()
    }

    /// Index of the negative of the root at `idx`.
    pub fn negate_index(&self, idx: usize) -> usize {
        let n = self.positive_roots.len();
        if idx < n {
            idx + n
        } else {
            idx - n
        }
    }

    /// Index of the i-th simple root.
    pub fn simple_index(&self, i: usize) -> usize {
        self.root_index(&Root::simple(self.rank(), i))
            .expect("simple roots are in the system")
    }

    pub fn simple_reflection_table(&self, i: usize) -> &[usize] {
        &self.simple_reflection_tables[i]
    }

    /// Pairing `<r, a_i^v>`.
    pub fn pairing(&self, r: &Root, i: usize) -> i64 {
        r.coords
            .iter()
            .enumerate()
            .map(|(j, &c)| c * self.cartan.matrix[j][i])
            .sum()
    }

    fn reflect_coords(&self, r: &Root, i: usize) -> Root {
        let k = self.pairing(r, i);
        let mut coords = r.coords.clone();
        coords[i] -= k;
        Root { coords }
    }

    /// Simple reflection `s_i(r)`; `r` must be a root of the system.
    pub fn reflect(&self, i: usize, r: &Root) -> Result<Root> {
        self.root_index(r)?;
        Ok(self.reflect_coords(r, i))
    }

    /// Simple reflection on indices.
    pub fn reflect_index(&self, i: usize, idx: usize) -> usize {
        self.simple_reflection_tables[i][idx]
    }

    /// Positive roots supported on `delta_m` and the complement `Phi_N`,
    /// as index lists into the positive roots.
    pub fn phi_split(&self, delta_m: u64) -> (Vec<usize>, Vec<usize>) {
        let mut phi_m = Vec::new();
        let mut phi_n = Vec::new();
        for (i, r) in self.positive_roots.iter().enumerate() {
            if r.supported_on(delta_m) {
                phi_m.push(i);
            } else {
                phi_n.push(i);
            }
        }
        (phi_m, phi_n)
    }

    /// True iff every Cartan pairing between the two subsets vanishes.
    pub fn orthogonal_subsets(&self, i_mask: u64, j_mask: u64) -> bool {
        for i in 0..self.rank() {
            if i_mask & (1 << i) == 0 {
                continue;
            }
            for j in 0..self.rank() {
                if j_mask & (1 << j) != 0 && self.cartan.matrix[i][j] != 0 {
                    return false;
                }
            }
        }
        true
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.rank()) - 1
    }

    /// Labels of a subset mask, in index order.
    pub fn mask_labels(&self, mask: u64) -> Vec<String> {
        (0..self.rank())
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| self.cartan.labels[i].clone())
            .collect()
    }

    /// Parses a list of simple-root labels into a subset mask.
    pub fn labels_to_mask(&self, labels: &[String]) -> Result<u64> {
        let mut mask = 0u64;
        for l in labels {
            let i = self
                .cartan
                .labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::InvalidCartan(format!("unknown simple root label '{l}'")))?;
            mask |= 1 << i;
        }
        Ok(mask)
    }
}

/// Closes the simple roots under simple reflections.
pub fn build_root_system(datum: CartanDatum) -> Result<RootSystem> {
    build_root_system_bounded(datum, DEFAULT_ROOT_BOUND)
}

pub fn build_root_system_bounded(datum: CartanDatum, bound: usize) -> Result<RootSystem> {
    let rank = datum.rank;
    let mut all: BTreeSet<Root> = (0..rank).map(|i| Root::simple(rank, i)).collect();
    let mut queue: Vec<Root> = all.iter().cloned().collect();

    // temporary system view for pairing computation
    let pairing = |r: &Root, i: usize| -> i64 {
        r.coords
            .iter()
            .enumerate()
            .map(|(j, &c)| c * datum.matrix[j][i])
            .sum()
    };

    while let Some(r) = queue.pop() {
        for i in 0..rank {
            let k = pairing(&r, i);
            let mut coords = r.coords.clone();
            coords[i] -= k;
            let s = Root { coords };
            debug_assert!(
                s.is_positive() || s.negated().is_positive(),
                "reflection produced a mixed-sign vector"
            );
            if s.is_positive() && all.insert(s.clone()) {
                if 2 * all.len() > bound {
                    return Err(Error::NonFiniteType { bound });
                }
                queue.push(s);
            }
        }
    }

    let mut positive_roots: Vec<Root> = all.into_iter().collect();
    positive_roots.sort_by_key(|r| (r.height(), r.coords.clone()));

    let n = positive_roots.len();
    let mut index = HashMap::with_capacity(2 * n);
    for (i, r) in positive_roots.iter().enumerate() {
        index.insert(r.coords.clone(), i);
        index.insert(r.negated().coords, i + n);
    }

    let mut tables = Vec::with_capacity(rank);
    for i in 0..rank {
        let mut table = vec![0usize; 2 * n];
        for idx in 0..2 * n {
            let r = if idx < n {
                positive_roots[idx].clone()
            } else {
                positive_roots[idx - n].negated()
            };
            let k = pairing(&r, i);
            let mut coords = r.coords;
            coords[i] -= k;
            table[idx] = *index
                .get(&coords)
                .ok_or_else(|| Error::InvalidCartan("root set not reflection-closed".into()))?;
        }
        tables.push(table);
    }

    Ok(RootSystem {
        cartan: datum,
        positive_roots,
        index,
        simple_reflection_tables: tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn system(t: &str) -> RootSystem {
        build_root_system(CartanDatum::of_type(&CartanType::parse(t).unwrap())).unwrap()
    }

    #[test]
    fn a2_positive_roots() {
        let rs = system("A2");
        let coords: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coords.clone()).collect();
        assert_eq!(coords, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn a1_rank_one() {
        let rs = system("A1");
        assert_eq!(rs.num_positive(), 1);
    }

    #[test]
    fn g2_has_six_positive_roots() {
        let rs = system("G2");
        assert_eq!(rs.num_positive(), 6);
    }

    #[test]
    fn positive_root_counts_by_type() {
        for (t, n) in [
            ("A3", 6),
            ("B2", 4),
            ("B3", 9),
            ("C3", 9),
            ("D4", 12),
            ("F4", 24),
            ("A1xA1", 2),
            ("A1xA2", 4),
        ] {
            assert_eq!(system(t).num_positive(), n, "type {t}");
        }
    }

    #[test]
    fn reflect_examples() {
        let rs = system("A2");
        let a1 = Root::simple(2, 0);
        let a2 = Root::simple(2, 1);
        // s_2(a1) = a1 + a2
        assert_eq!(rs.reflect(1, &a1).unwrap().coords, vec![1, 1]);
        // s_i(a_i) = -a_i
        assert_eq!(rs.reflect(0, &a1).unwrap(), a1.negated());
        // s_1(a1 + a2) = a2
        let sum = Root { coords: vec![1, 1] };
        assert_eq!(rs.reflect(0, &sum).unwrap(), a2);
    }

    #[test]
    fn reflect_rejects_non_roots() {
        let rs = system("A2");
        let not_root = Root { coords: vec![2, 0] };
        assert!(matches!(
            rs.reflect(0, &not_root),
            Err(Error::UnknownRoot(_))
        ));
    }

    #[test]
    fn reflect_is_involution() {
        for t in ["A2", "B2", "G2", "A3"] {
            let rs = system(t);
            for idx in 0..rs.num_roots() {
                for i in 0..rs.rank() {
                    assert_eq!(rs.reflect_index(i, rs.reflect_index(i, idx)), idx);
                }
            }
        }
    }

    #[test]
    fn orthogonality_examples() {
        let rs = system("A2");
        assert!(!rs.orthogonal_subsets(0b01, 0b10));
        assert!(rs.orthogonal_subsets(0, rs.full_mask()));
        let rs2 = system("A1xA1");
        assert!(rs2.orthogonal_subsets(0b01, 0b10));
    }

    #[test]
    fn phi_split_examples() {
        let rs = system("A2");
        let (m, n) = rs.phi_split(0b01);
        assert_eq!(m, vec![1]); // a1
        assert_eq!(n, vec![0, 2]); // a2, a1+a2
        let (m, n) = rs.phi_split(rs.full_mask());
        assert_eq!(m.len(), 3);
        assert!(n.is_empty());
        let (m, n) = rs.phi_split(0);
        assert!(m.is_empty());
        assert_eq!(n.len(), 3);
    }

    #[test]
    fn phi_split_partitions() {
        for t in ["A2", "B2", "G2", "A3", "B3"] {
            let rs = system(t);
            for mask in 0..=rs.full_mask() {
                let (m, n) = rs.phi_split(mask);
                assert_eq!(m.len() + n.len(), rs.num_positive());
                let overlap: Vec<_> = m.iter().filter(|i| n.contains(i)).collect();
                assert!(overlap.is_empty());
            }
        }
    }

    #[test]
    fn orthogonal_subsets_force_split_support() {
        // rank <= 3: if I and J are orthogonal, every root of Phi_{I u J}
        // is supported entirely on I or entirely on J.
        for t in ["A2", "B2", "G2", "A3", "B3", "C3", "A1xA2"] {
            let rs = system(t);
            let full = rs.full_mask();
            for i_mask in 0..=full {
                for j_mask in 0..=full {
                    if i_mask & j_mask != 0 || !rs.orthogonal_subsets(i_mask, j_mask) {
                        continue;
                    }
                    let (phi_union, _) = rs.phi_split(i_mask | j_mask);
                    for &idx in &phi_union {
                        let r = &rs.positive_roots()[idx];
                        assert!(
                            r.supported_on(i_mask) || r.supported_on(j_mask),
                            "{t}: root {r} straddles orthogonal {i_mask:b}/{j_mask:b}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn non_finite_type_detected() {
        // affine A1 tilde: off-diagonal product 4
        let datum = CartanDatum::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(
            build_root_system_bounded(datum, 100),
            Err(Error::NonFiniteType { .. })
        ));
    }

    #[test]
    fn bad_cartan_rejected() {
        assert!(CartanDatum::new(vec![vec![1]]).is_err());
        assert!(CartanDatum::new(vec![vec![2, 1], vec![1, 2]]).is_err());
        assert!(CartanDatum::new(vec![vec![2, -1], vec![0, 2]]).is_err());
        assert!(CartanDatum::new(vec![]).is_err());
    }
}
