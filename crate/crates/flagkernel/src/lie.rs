//! Root systems of the finite simple Lie types and painted Dynkin diagrams.
//!
//! Simple roots are numbered 1..rank. The node numbering is Bourbaki's:
//! A_n is the path 1-2-...-n; B_n/C_n are the path with the short/long root
//! last; D_n forks at node n-2 into n-1 and n; E_n attaches node 2 to node 4
//! of the path 1-3-4-5-...-n; F_4 is 1-2=3-4 with 3, 4 short. For G_2 node 1
//! is the long root here (the two nodes are swapped relative to Bourbaki's
//! plates, which put the short root first; every height and classification
//! statement in this crate is invariant under that relabeling).
//!
//! The Cartan matrix convention is row-normalized,
//! `a[i][j] = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)`,
//! so the row of a short root carries the -2 or -3 entry. Bit-exact tables
//! produced by [`build_cartan_matrix`]:
//!
//! * A_n: tridiagonal with -1 off the diagonal;
//! * B_n: as A_n but entry (n, n-1) = -2;
//! * C_n: as A_n but entry (n-1, n) = -2 (transpose of B_n);
//! * D_n: -1 exactly on the edges (i, i+1) for i < n-1 and (n-2, n);
//! * E_6/E_7/E_8: -1 exactly on the edges listed above;
//! * F_4: [[2,-1,0,0], [-1,2,-1,0], [0,-2,2,-1], [0,0,-1,2]];
//! * G_2: [[2,-1], [-3,2]].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Simple Lie algebra families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl LieFamily {
    pub fn letter(self) -> char {
        match self {
            LieFamily::A => 'A',
            LieFamily::B => 'B',
            LieFamily::C => 'C',
            LieFamily::D => 'D',
            LieFamily::E => 'E',
            LieFamily::F => 'F',
            LieFamily::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(LieFamily::A),
            'B' => Some(LieFamily::B),
            'C' => Some(LieFamily::C),
            'D' => Some(LieFamily::D),
            'E' => Some(LieFamily::E),
            'F' => Some(LieFamily::F),
            'G' => Some(LieFamily::G),
            _ => None,
        }
    }
}

/// A validated (family, rank) pair.
///
/// Admissible ranks: A >= 1, B >= 2, C >= 3, D >= 4, E in {6,7,8}, F = 4,
/// G = 2. C_2 is not a distinct type; the text encoding `C2:...` is accepted
/// by [`PaintedDiagram::parse`] and remapped onto B_2 with the node swap
/// 1 <-> 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: LieFamily,
    rank: usize,
}

impl LieType {
    pub fn new(family: LieFamily, rank: usize) -> Result<Self> {
        let ok = match family {
            LieFamily::A => rank >= 1,
            LieFamily::B => rank >= 2,
            LieFamily::C => rank >= 3,
            LieFamily::D => rank >= 4,
            LieFamily::E => (6..=8).contains(&rank),
            LieFamily::F => rank == 4,
            LieFamily::G => rank == 2,
        };
        if ok {
            Ok(LieType { family, rank })
        } else {
            Err(Error::invalid(format!(
                "unsupported Lie type {}{rank}",
                family.letter()
            )))
        }
    }

    pub fn family(self) -> LieFamily {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Closed-form number of positive roots of this type.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            LieFamily::A => n * (n + 1) / 2,
            LieFamily::B | LieFamily::C => n * n,
            LieFamily::D => n * (n - 1),
            LieFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            LieFamily::F => 24,
            LieFamily::G => 6,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// Square integer matrix of pairings between simple roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    rank: usize,
    entries: Vec<i64>,
}

impl CartanMatrix {
    /// Validates the generalized-Cartan-matrix shape: diagonal 2,
    /// off-diagonal entries in {0,-1,-2,-3}, and a_ij = 0 iff a_ji = 0.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let rank = rows.len();
        if rank == 0 {
            return Err(Error::invalid("Cartan matrix must be nonempty"));
        }
        if rows.iter().any(|r| r.len() != rank) {
            return Err(Error::invalid("Cartan matrix must be square"));
        }
        let entries: Vec<i64> = rows.into_iter().flatten().collect();
        let m = CartanMatrix { rank, entries };
        for i in 0..rank {
            if m.entry(i, i) != 2 {
                return Err(Error::invalid("Cartan matrix diagonal must be 2"));
            }
            for j in 0..rank {
                if i == j {
                    continue;
                }
                let a = m.entry(i, j);
                if !(-3..=0).contains(&a) {
                    return Err(Error::invalid(format!(
                        "off-diagonal Cartan entry {a} at ({},{}) outside {{0,-1,-2,-3}}",
                        i + 1,
                        j + 1
                    )));
                }
                if (a == 0) != (m.entry(j, i) == 0) {
                    return Err(Error::invalid(format!(
                        "Cartan entries ({},{}) and ({},{}) must vanish together",
                        i + 1,
                        j + 1,
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(m)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry (i, j), zero-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.rank + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Submatrix on the given zero-based index set (order preserved).
    pub fn principal_submatrix(&self, indices: &[usize]) -> Result<CartanMatrix> {
        if indices.is_empty() {
            return Err(Error::invalid("empty index set for submatrix"));
        }
        let rows = indices
            .iter()
            .map(|&i| indices.iter().map(|&j| self.entry(i, j)).collect())
            .collect();
        CartanMatrix::new(rows)
    }
}

/// Builds the standard Cartan matrix of a simple type, with the node
/// numbering and sign convention documented at module level.
pub fn build_cartan_matrix(t: LieType) -> CartanMatrix {
    let n = t.rank();
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize| {
        rows[i - 1][j - 1] = -1;
        rows[j - 1][i - 1] = -1;
    };
    match t.family() {
        LieFamily::A | LieFamily::B | LieFamily::C => {
            for i in 1..n {
                edge(i, i + 1);
            }
            if t.family() == LieFamily::B {
                rows[n - 1][n - 2] = -2;
            }
            if t.family() == LieFamily::C {
                rows[n - 2][n - 1] = -2;
            }
        }
        LieFamily::D => {
            for i in 1..n - 1 {
                edge(i, i + 1);
            }
            edge(n - 2, n);
        }
        LieFamily::E => {
            edge(1, 3);
            edge(3, 4);
            edge(2, 4);
            for i in 4..n {
                edge(i, i + 1);
            }
        }
        LieFamily::F => {
            edge(1, 2);
            edge(2, 3);
            edge(3, 4);
            rows[2][1] = -2;
        }
        LieFamily::G => {
            edge(1, 2);
            rows[1][0] = -3;
        }
    }
    CartanMatrix::new(rows).expect("built-in Cartan tables are valid")
}

/// A positive root written over the simple-root basis, alpha = sum k_i alpha_i.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Height h(alpha) = sum of the simple-root coefficients.
    pub fn height(&self) -> usize {
        self.coeffs.iter().sum::<i64>() as usize
    }

    /// True when some coefficient over the given zero-based node set is positive.
    pub fn supported_on_any(&self, nodes: &BTreeSet<usize>) -> bool {
        nodes.iter().any(|&i| self.coeffs[i] > 0)
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.height(), &self.coeffs).cmp(&(other.height(), &other.coeffs))
    }
}

/// Divergence guard for the closure; the deepest supported root (E_8) has
/// height 29, so any run past 60 means the input was not of finite type.
pub const MAX_ROOT_HEIGHT: usize = 60;

/// Generates all positive roots of a finite-type Cartan matrix by
/// breadth-first root-string closure over the simple roots: alpha + alpha_i
/// is a root iff q = p - <alpha, alpha_i^vee> > 0, where p is the largest
/// integer with alpha - p alpha_i a root and the pairing is
/// `sum_j k_j a[i][j]` in the row-normalized convention.
///
/// The output is duplicate-free and canonically ordered by height, then
/// lexicographically on coefficient vectors.
pub fn generate_positive_roots(cartan: &CartanMatrix) -> Result<Vec<Root>> {
    let n = cartan.rank();
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut level: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        found.insert(v.clone());
        level.push(v);
    }
    let mut height = 1usize;
    while !level.is_empty() {
        if height >= MAX_ROOT_HEIGHT {
            return Err(Error::invalid(format!(
                "root generation exceeded height {MAX_ROOT_HEIGHT}; matrix is not of finite type"
            )));
        }
        let mut next: BTreeSet<Vec<i64>> = BTreeSet::new();
        for alpha in &level {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| alpha[j] * cartan.entry(i, j)).sum();
                // p = depth of the alpha_i-string below alpha
                let mut p = 0i64;
                let mut beta = alpha.clone();
                loop {
                    beta[i] -= 1;
                    if beta[i] < 0 || !found.contains(&beta) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = alpha.clone();
                    up[i] += 1;
                    next.insert(up);
                }
            }
        }
        level = next
            .into_iter()
            .filter(|r| found.insert(r.clone()))
            .collect();
        height += 1;
    }
    let mut roots: Vec<Root> = found.into_iter().map(Root::new).collect();
    roots.sort();
    Ok(roots)
}

/// A simple root system: type, Cartan matrix, and the canonically ordered
/// positive roots. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    lie_type: LieType,
    cartan: CartanMatrix,
    positive_roots: Vec<Root>,
}

impl RootSystem {
    pub fn new(t: LieType) -> Result<Self> {
        let cartan = build_cartan_matrix(t);
        let positive_roots = generate_positive_roots(&cartan)?;
        if positive_roots.len() != t.positive_root_count() {
            return Err(Error::internal(format!(
                "{t}: generated {} positive roots, expected {}",
                positive_roots.len(),
                t.positive_root_count()
            )));
        }
        Ok(RootSystem {
            lie_type: t,
            cartan,
            positive_roots,
        })
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The unique root of maximal height (last in canonical order).
    pub fn highest_root(&self) -> &Root {
        self.positive_roots.last().expect("nonempty root system")
    }
}

/// A painted Dynkin diagram: a root system plus a nonempty set of black
/// nodes (1-based indices). The black positive roots R+ \ R_K+ are those
/// supported on at least one black node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaintedDiagram {
    root_system: RootSystem,
    black_nodes: BTreeSet<usize>,
}

impl PaintedDiagram {
    pub fn new(root_system: RootSystem, black_nodes: impl IntoIterator<Item = usize>) -> Result<Self> {
        let black_nodes: BTreeSet<usize> = black_nodes.into_iter().collect();
        if black_nodes.is_empty() {
            return Err(Error::invalid("painted diagram needs at least one black node"));
        }
        let rank = root_system.rank();
        if let Some(&bad) = black_nodes.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::invalid(format!(
                "black node {bad} outside 1..={rank} for {}",
                root_system.lie_type()
            )));
        }
        Ok(PaintedDiagram {
            root_system,
            black_nodes,
        })
    }

    /// Parses the canonical text encoding `<family><rank>:<black,nodes>`,
    /// e.g. `B3:1` or `G2:1,2`. `C2:...` is accepted as an alias for B_2
    /// with the nodes swapped (1 <-> 2).
    pub fn parse(s: &str) -> Result<Self> {
        let (type_part, nodes_part) = s
            .split_once(':')
            .ok_or_else(|| Error::invalid(format!("missing ':' in diagram encoding `{s}`")))?;
        let mut chars = type_part.chars();
        let family = chars
            .next()
            .and_then(LieFamily::from_letter)
            .ok_or_else(|| Error::invalid(format!("bad family letter in `{s}`")))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::invalid(format!("bad rank in `{s}`")))?;
        let mut nodes = Vec::new();
        for part in nodes_part.split(',') {
            let node: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("bad black node `{part}` in `{s}`")))?;
            nodes.push(node);
        }
        // C2 alias: B2 with the node swap.
        let (family, nodes) = if family == LieFamily::C && rank == 2 {
            (LieFamily::B, nodes.into_iter().map(|i| 3 - i).collect())
        } else {
            (family, nodes)
        };
        let t = LieType::new(family, rank)?;
        PaintedDiagram::new(RootSystem::new(t)?, nodes)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn lie_type(&self) -> LieType {
        self.root_system.lie_type()
    }

    /// Black nodes, 1-based.
    pub fn black_nodes(&self) -> &BTreeSet<usize> {
        &self.black_nodes
    }

    /// The positive roots supported on at least one black node, in the
    /// canonical root order.
    pub fn black_positive_roots(&self) -> Vec<&Root> {
        let zero_based: BTreeSet<usize> = self.black_nodes.iter().map(|&i| i - 1).collect();
        self.root_system
            .positive_roots
            .iter()
            .filter(|r| r.supported_on_any(&zero_based))
            .collect()
    }

    /// Heights of the black positive roots as a sorted multiset.
    pub fn heights_multiset(&self) -> Vec<usize> {
        let mut hs: Vec<usize> = self
            .black_positive_roots()
            .iter()
            .map(|r| r.height())
            .collect();
        hs.sort_unstable();
        hs
    }

    /// Complex dimension of the flag manifold: |R+ \ R_K+|.
    pub fn complex_dimension(&self) -> usize {
        self.black_positive_roots().len()
    }
}

impl fmt::Display for PaintedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nodes: Vec<String> = self.black_nodes.iter().map(|i| i.to_string()).collect();
        write!(f, "{}:{}", self.root_system.lie_type(), nodes.join(","))
    }
}

impl FromStr for PaintedDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PaintedDiagram::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_of(t: LieType) -> Vec<Vec<i64>> {
        RootSystem::new(t)
            .unwrap()
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect()
    }

    #[test]
    fn cartan_tables_match_documented_bytes() {
        let a2 = build_cartan_matrix(LieType::new(LieFamily::A, 2).unwrap());
        assert_eq!(a2.rows(), vec![vec![2, -1], vec![-1, 2]]);
        let g2 = build_cartan_matrix(LieType::new(LieFamily::G, 2).unwrap());
        assert_eq!(g2.rows(), vec![vec![2, -1], vec![-3, 2]]);
        let b3 = build_cartan_matrix(LieType::new(LieFamily::B, 3).unwrap());
        assert_eq!(
            b3.rows(),
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]]
        );
    }

    #[test]
    fn invalid_types_rejected() {
        assert!(LieType::new(LieFamily::B, 1).is_err());
        assert!(LieType::new(LieFamily::C, 2).is_err());
        assert!(LieType::new(LieFamily::D, 3).is_err());
        assert!(LieType::new(LieFamily::E, 5).is_err());
        assert!(LieType::new(LieFamily::F, 3).is_err());
        assert!(LieType::new(LieFamily::G, 3).is_err());
        assert!(LieType::new(LieFamily::A, 0).is_err());
    }

    #[test]
    fn a2_closure_by_hand() {
        assert_eq!(
            roots_of(LieType::new(LieFamily::A, 2).unwrap()),
            vec![vec![1, 0], vec![0, 1], vec![1, 1]]
        );
    }

    #[test]
    fn b2_closure_by_hand() {
        assert_eq!(
            roots_of(LieType::new(LieFamily::B, 2).unwrap()),
            vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
    }

    #[test]
    fn g2_closure_by_hand() {
        // Node 1 is the long root, so the short-root column climbs to 3.
        assert_eq!(
            roots_of(LieType::new(LieFamily::G, 2).unwrap()),
            vec![
                vec![1, 0],
                vec![0, 1],
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn positive_root_counts_match_closed_forms() {
        let cases = [
            (LieFamily::A, 1),
            (LieFamily::A, 8),
            (LieFamily::B, 2),
            (LieFamily::B, 8),
            (LieFamily::C, 3),
            (LieFamily::C, 8),
            (LieFamily::D, 4),
            (LieFamily::D, 8),
            (LieFamily::E, 6),
            (LieFamily::E, 7),
            (LieFamily::E, 8),
            (LieFamily::F, 4),
            (LieFamily::G, 2),
        ];
        for (fam, rank) in cases {
            let t = LieType::new(fam, rank).unwrap();
            let rs = RootSystem::new(t).unwrap();
            assert_eq!(rs.positive_roots().len(), t.positive_root_count(), "{t}");
        }
    }

    #[test]
    fn simple_roots_are_exactly_height_one() {
        for t in [
            LieType::new(LieFamily::A, 3).unwrap(),
            LieType::new(LieFamily::F, 4).unwrap(),
            LieType::new(LieFamily::E, 6).unwrap(),
        ] {
            let rs = RootSystem::new(t).unwrap();
            let h1: Vec<_> = rs
                .positive_roots()
                .iter()
                .filter(|r| r.height() == 1)
                .collect();
            assert_eq!(h1.len(), t.rank());
        }
    }

    #[test]
    fn highest_root_unique_with_known_height() {
        let expect = [
            (LieFamily::A, 5, 5),
            (LieFamily::B, 4, 7),
            (LieFamily::C, 4, 7),
            (LieFamily::D, 5, 7),
            (LieFamily::E, 8, 29),
            (LieFamily::F, 4, 11),
            (LieFamily::G, 2, 5),
        ];
        for (fam, rank, h) in expect {
            let rs = RootSystem::new(LieType::new(fam, rank).unwrap()).unwrap();
            let max_h = rs.highest_root().height();
            assert_eq!(max_h, h, "{fam:?}{rank}");
            let at_max = rs
                .positive_roots()
                .iter()
                .filter(|r| r.height() == max_h)
                .count();
            assert_eq!(at_max, 1);
        }
    }

    #[test]
    fn black_roots_a2_and_a3() {
        let d = PaintedDiagram::parse("A2:1").unwrap();
        let black: Vec<Vec<i64>> = d
            .black_positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(black, vec![vec![1, 0], vec![1, 1]]);

        let d = PaintedDiagram::parse("A3:2").unwrap();
        let black: Vec<Vec<i64>> = d
            .black_positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect();
        assert_eq!(
            black,
            vec![
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![1, 1, 0],
                vec![1, 1, 1]
            ]
        );
    }

    #[test]
    fn all_black_takes_every_root() {
        let d = PaintedDiagram::parse("B2:1,2").unwrap();
        assert_eq!(d.black_positive_roots().len(), 4);
    }

    #[test]
    fn heights_multisets_from_hand_closures() {
        assert_eq!(PaintedDiagram::parse("B2:1").unwrap().heights_multiset(), vec![1, 2, 3]);
        assert_eq!(
            PaintedDiagram::parse("G2:2").unwrap().heights_multiset(),
            vec![1, 2, 3, 4, 5]
        );
        assert_eq!(
            PaintedDiagram::parse("D4:1").unwrap().heights_multiset(),
            vec![1, 2, 3, 3, 4, 5]
        );
        assert_eq!(
            PaintedDiagram::parse("B3:1").unwrap().heights_multiset(),
            vec![1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn complex_dimensions() {
        for n in 1..=6 {
            let d = PaintedDiagram::new(
                RootSystem::new(LieType::new(LieFamily::A, n).unwrap()).unwrap(),
                [1],
            )
            .unwrap();
            assert_eq!(d.complex_dimension(), n);
        }
        assert_eq!(PaintedDiagram::parse("G2:1").unwrap().complex_dimension(), 5);
        assert_eq!(PaintedDiagram::parse("A2:1,2").unwrap().complex_dimension(), 3);
    }

    #[test]
    fn c2_alias_maps_to_b2_with_node_swap() {
        let d = PaintedDiagram::parse("C2:1").unwrap();
        assert_eq!(d.lie_type(), LieType::new(LieFamily::B, 2).unwrap());
        assert_eq!(d.black_nodes().iter().copied().collect::<Vec<_>>(), vec![2]);
        assert_eq!(d.to_string(), "B2:2");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(PaintedDiagram::parse("B3").is_err());
        assert!(PaintedDiagram::parse("H3:1").is_err());
        assert!(PaintedDiagram::parse("B3:0").is_err());
        assert!(PaintedDiagram::parse("B3:4").is_err());
        assert!(PaintedDiagram::parse("B3:").is_err());
        assert!(PaintedDiagram::parse("Bx:1").is_err());
    }

    #[test]
    fn non_finite_matrix_hits_divergence_guard() {
        // Affine A_1^(1): [[2,-2],[-2,2]] generates an infinite string.
        let m = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        let err = generate_positive_roots(&m).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn generation_is_deterministic() {
        let t = LieType::new(LieFamily::E, 6).unwrap();
        let a = roots_of(t);
        let b = roots_of(t);
        assert_eq!(a, b);
    }

    #[test]
    fn white_support_is_the_subdiagram_root_system() {
        // R_K+ (roots supported only on white nodes) must equal the positive
        // roots generated from the white principal submatrix, embedded back.
        for enc in ["A3:2", "B3:1", "D4:2", "F4:1", "G2:1"] {
            let d = PaintedDiagram::parse(enc).unwrap();
            let rank = d.root_system().rank();
            let white: Vec<usize> = (0..rank)
                .filter(|i| !d.black_nodes().contains(&(i + 1)))
                .collect();
            let black_set: std::collections::HashSet<Vec<i64>> = d
                .black_positive_roots()
                .iter()
                .map(|r| r.coeffs().to_vec())
                .collect();
            let white_supported: BTreeSet<Vec<i64>> = d
                .root_system()
                .positive_roots()
                .iter()
                .map(|r| r.coeffs().to_vec())
                .filter(|c| !black_set.contains(c))
                .collect();
            if white.is_empty() {
                assert!(white_supported.is_empty());
                continue;
            }
            let sub = d.root_system().cartan().principal_submatrix(&white).unwrap();
            let sub_roots = generate_positive_roots(&sub).unwrap();
            let embedded: BTreeSet<Vec<i64>> = sub_roots
                .iter()
                .map(|r| {
                    let mut full = vec![0i64; rank];
                    for (pos, &orig) in white.iter().enumerate() {
                        full[orig] = r.coeffs()[pos];
                    }
                    full
                })
                .collect();
            assert_eq!(white_supported, embedded, "{enc}");
        }
    }
}
