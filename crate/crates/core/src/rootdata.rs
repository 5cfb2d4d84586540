//! Irreducible root systems in simple-root coordinates.
//!
//! A root is stored as its integer expansion in the simple roots, so simple
//! root `i` is the `i`-th unit vector and every pairing is exact. Nodes are
//! numbered as in Bourbaki, 0-based:
//!
//! | family | diagram (0-based) | short nodes |
//! |--------|-------------------|-------------|
//! | `A_n`  | `0 - 1 - … - n-1` | none |
//! | `B_n`  | `0 - … - n-2 => n-1` | `n-1` |
//! | `C_n`  | `0 - … - n-2 <= n-1` | `0..n-1` (all but the last) |
//! | `D_n`  | chain `0 - … - n-2`, plus `n-3 - n-1` | none |
//! | `E_n`  | `0 - 2 - 3 - 4 - …`, plus `1 - 3` | none |
//! | `F_4`  | `0 - 1 => 2 - 3` | `2, 3` |
//! | `G_2`  | `0 ≡> 1` | `0` |
//!
//! The Cartan matrix entry `cartan[i][j]` is `⟨α_i, α_j∨⟩ = 2(α_i,α_j)/(α_j,α_j)`.
//! Pairings with arbitrary coroots go through the symmetrized form, which is
//! kept in doubled integer form.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::linalg::IntMatrix;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Cartan type of an irreducible root system, validated against the
/// classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleTypeRank {
    family: Family,
    rank: usize,
}

impl SimpleTypeRank {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let constraint = match family {
            Family::A if rank < 1 => Some("type A needs rank >= 1"),
            Family::B if rank < 2 => Some("type B needs rank >= 2"),
            Family::C if rank < 2 => Some("type C needs rank >= 2"),
            Family::D if rank < 4 => {
                Some("type D needs rank >= 4 (D2 = A1xA1 and D3 = A3 are excluded)")
            }
            Family::E if !(6..=8).contains(&rank) => Some("type E needs rank 6, 7 or 8"),
            Family::F if rank != 4 => Some("type F needs rank 4"),
            Family::G if rank != 2 => Some("type G needs rank 2"),
            _ => None,
        };
        match constraint {
            Some(constraint) => Err(Error::InvalidTypeRank {
                family: family.letter(),
                rank,
                constraint,
            }),
            None => Ok(SimpleTypeRank { family, rank }),
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// `B₂` and `C₂` name the same root system; this maps `B₂` to `C₂`.
    pub fn canonical(self) -> Self {
        match (self.family, self.rank) {
            (Family::B, 2) => SimpleTypeRank {
                family: Family::C,
                rank: 2,
            },
            _ => self,
        }
    }

    pub fn is_isomorphic(self, other: Self) -> bool {
        self.canonical() == other.canonical()
    }

    /// Closed-form count of positive roots.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Dimension of the corresponding simple group: rank plus number of roots.
    pub fn group_dimension(self) -> usize {
        self.rank + 2 * self.positive_root_count()
    }

    /// One representative per isomorphism class, all of rank at most `max_rank`:
    /// `A_n (n≥1)`, `B_n (n≥3)`, `C_n (n≥2)`, `D_n (n≥4)`, `E₆₋₈`, `F₄`, `G₂`.
    pub fn all_up_to(max_rank: usize) -> Vec<SimpleTypeRank> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            let lowest = if family == Family::B { 3 } else { 1 };
            for rank in lowest..=max_rank {
                if let Ok(tr) = SimpleTypeRank::new(family, rank) {
                    out.push(tr);
                }
            }
        }
        out
    }

    /// Squared root lengths per node (shortest = 1) and Dynkin edges.
    fn diagram(self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![1; n], chain(n)),
            Family::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (d, chain(n))
            }
            Family::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (d, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![1; n], edges)
            }
            Family::E => {
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((3..n).map(|i| (i - 1, i)));
                (vec![1; n], edges)
            }
            Family::F => (vec![2, 2, 1, 1], chain(4)),
            Family::G => (vec![1, 3], chain(2)),
        }
    }
}

impl fmt::Display for SimpleTypeRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for SimpleTypeRank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::Validation(format!("unknown Cartan type {s:?}")))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::Validation(format!("missing or malformed rank in {s:?}")))?;
        SimpleTypeRank::new(family, rank)
    }
}

impl Serialize for SimpleTypeRank {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleTypeRank {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Display a multiset of simple types, e.g. `A1xA1`; the empty product is `T`.
pub fn format_type(types: &[SimpleTypeRank]) -> String {
    if types.is_empty() {
        "T".to_string()
    } else {
        types
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join("x")
    }
}

/// A root as integer coefficients on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<i64>);

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    /// Nodes with a nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Root {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    typerank: SimpleTypeRank,
    cartan: IntMatrix,
    /// `2(α_i, α_j)`, integral.
    form: IntMatrix,
    roots: Vec<Root>,
    positive: Vec<Root>,
}

/// Build the root system of `tr` by closing the simple roots under the simple
/// reflections `s_i(β) = β − ⟨β, α_i∨⟩α_i`.
pub fn build_root_system(tr: SimpleTypeRank) -> RootSystem {
    let n = tr.rank();
    let (d, edges) = tr.diagram();
    let mut form = vec![vec![0i64; n]; n];
    for i in 0..n {
        form[i][i] = 2 * d[i];
    }
    for &(a, b) in &edges {
        let v = -d[a].max(d[b]);
        form[a][b] = v;
        form[b][a] = v;
    }
    let cartan: IntMatrix = (0..n)
        .map(|i| (0..n).map(|j| form[i][j] / d[j]).collect())
        .collect();

    let mut seen: BTreeSet<Root> = BTreeSet::new();
    let mut queue: VecDeque<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
    while let Some(beta) = queue.pop_front() {
        if !seen.insert(beta.clone()) {
            continue;
        }
        for i in 0..n {
            let p: i64 = (0..n).map(|j| beta.0[j] * cartan[j][i]).sum();
            if p != 0 {
                let mut next = beta.0.clone();
                next[i] -= p;
                let next = Root(next);
                if !seen.contains(&next) {
                    queue.push_back(next);
                }
            }
        }
    }
    let roots: Vec<Root> = seen.into_iter().collect();
    let mut positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    RootSystem {
        typerank: tr,
        cartan,
        form,
        roots,
        positive,
    }
}

impl RootSystem {
    pub fn typerank(&self) -> SimpleTypeRank {
        self.typerank
    }

    pub fn rank(&self) -> usize {
        self.typerank.rank()
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| Root::simple(self.rank(), i)).collect()
    }

    /// All roots, sorted lexicographically on coordinates.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    /// Positive roots ordered by height, then with `α₁` before `α₂` and so on.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.roots
            .binary_search_by(|r| r.0.as_slice().cmp(coords))
            .is_ok()
    }

    /// Dimension of the simple group: rank plus number of roots.
    pub fn group_dimension(&self) -> usize {
        self.rank() + self.roots.len()
    }

    /// The unique root of maximal height.
    pub fn highest_root(&self) -> &Root {
        self.positive.last().expect("root systems are nonempty")
    }

    /// `2(x, y)` for integer vectors in simple-root coordinates.
    pub fn doubled_form(&self, x: &[i64], y: &[i64]) -> i64 {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| x[i] * self.form[i][j] * y[j]).sum::<i64>())
            .sum()
    }

    /// `⟨x, β∨⟩ = 2(x, β)/(β, β)` for a root `β`.
    pub fn coroot_pairing(&self, x: &[i64], beta: &[i64]) -> i64 {
        let num = 2 * self.doubled_form(x, beta);
        let den = self.doubled_form(beta, beta);
        debug_assert_eq!(num % den, 0, "pairing with a non-root");
        num / den
    }

    /// `⟨x, α_i∨⟩`, read off the Cartan matrix.
    pub fn simple_coroot_pairing(&self, x: &[i64], i: usize) -> i64 {
        (0..self.rank()).map(|j| x[j] * self.cartan[j][i]).sum()
    }

    /// Whether `β` is long (always true for simply-laced types).
    pub fn is_long(&self, beta: &[i64]) -> bool {
        let max = (0..self.rank()).map(|i| self.form[i][i]).max().unwrap_or(0);
        self.doubled_form(beta, beta) == max
    }
}

/// A bond between two nodes; `multiplicity` is `a_ij · a_ji`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bond {
    pub a: usize,
    pub b: usize,
    pub multiplicity: i64,
}

/// The affine Dynkin diagram: simple roots followed by the lowest root `−θ`,
/// which sits at node index `rank`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedDiagram {
    base: RootSystem,
    affine_root: Root,
    nodes: Vec<Root>,
    cartan: IntMatrix,
    edges: Vec<Bond>,
}

pub fn extended_diagram(rs: &RootSystem) -> ExtendedDiagram {
    let affine_root = rs.highest_root().negated();
    let mut nodes = rs.simple_roots();
    nodes.push(affine_root.clone());
    let m = nodes.len();
    let cartan: IntMatrix = (0..m)
        .map(|i| {
            (0..m)
                .map(|j| rs.coroot_pairing(nodes[i].coords(), nodes[j].coords()))
                .collect()
        })
        .collect();
    let mut edges = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let multiplicity = cartan[a][b] * cartan[b][a];
            if multiplicity != 0 {
                edges.push(Bond { a, b, multiplicity });
            }
        }
    }
    ExtendedDiagram {
        base: rs.clone(),
        affine_root,
        nodes,
        cartan,
        edges,
    }
}

impl ExtendedDiagram {
    pub fn base(&self) -> &RootSystem {
        &self.base
    }

    pub fn affine_root(&self) -> &Root {
        &self.affine_root
    }

    pub fn affine_index(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn nodes(&self) -> &[Root] {
        &self.nodes
    }

    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn edges(&self) -> &[Bond] {
        &self.edges
    }

    /// Cartan submatrix on the kept nodes.
    pub fn sub_cartan(&self, keep: &[usize]) -> IntMatrix {
        keep.iter()
            .map(|&i| keep.iter().map(|&j| self.cartan[i][j]).collect())
            .collect()
    }
}

/// A connected component of a finite-type Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct DiagramComponent {
    pub typerank: SimpleTypeRank,
    /// Row indices of the input matrix belonging to this component.
    pub nodes: Vec<usize>,
}

/// Split a Cartan matrix of finite type into connected components and name
/// each. `B₂` is reported as `C₂`. Affine or otherwise non-finite diagrams are
/// rejected.
pub fn classify_cartan(c: &IntMatrix) -> Result<Vec<DiagramComponent>> {
    let n = c.len();
    if c.iter().any(|row| row.len() != n) {
        return Err(Error::Validation("Cartan matrix must be square".into()));
    }
    if (0..n).any(|i| c[i][i] != 2) {
        return Err(Error::Validation("Cartan diagonal must be 2".into()));
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut nodes = vec![];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            nodes.push(i);
            for j in 0..n {
                if !seen[j] && (c[i][j] != 0 || c[j][i] != 0) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        nodes.sort_unstable();
        let typerank = classify_connected(c, &nodes)?;
        out.push(DiagramComponent { typerank, nodes });
    }
    out.sort();
    Ok(out)
}

fn not_finite(why: &str) -> Error {
    Error::Validation(format!("Cartan matrix is not of finite type: {why}"))
}

fn classify_connected(c: &IntMatrix, nodes: &[usize]) -> Result<SimpleTypeRank> {
    let n = nodes.len();
    let mut degree = vec![0usize; n];
    let mut adjacent = vec![Vec::new(); n];
    let mut edge_count = 0;
    let mut multi: Option<(usize, usize, i64)> = None;
    for a in 0..n {
        for b in a + 1..n {
            let (x, y) = (c[nodes[a]][nodes[b]], c[nodes[b]][nodes[a]]);
            if x == 0 && y == 0 {
                continue;
            }
            if x >= 0 || y >= 0 {
                return Err(not_finite("off-diagonal entries must be negative in pairs"));
            }
            let prod = x * y;
            match prod {
                1 => {}
                2 | 3 => {
                    if multi.is_some() {
                        return Err(not_finite("more than one multiple bond"));
                    }
                    multi = Some((a, b, prod));
                }
                _ => return Err(not_finite("bond of multiplicity 4 or more")),
            }
            degree[a] += 1;
            degree[b] += 1;
            adjacent[a].push(b);
            adjacent[b].push(a);
            edge_count += 1;
        }
    }
    if edge_count + 1 != n {
        return Err(not_finite("diagram contains a cycle"));
    }
    let max_degree = degree.iter().copied().max().unwrap_or(0);
    let ok = |family, rank| SimpleTypeRank::new(family, rank);
    if n == 1 {
        return ok(Family::A, 1);
    }
    if let Some((a, b, prod)) = multi {
        if max_degree > 2 {
            return Err(not_finite("branch node in a multiply-laced diagram"));
        }
        if prod == 3 {
            return if n == 2 {
                ok(Family::G, 2)
            } else {
                Err(not_finite("triple bond in rank > 2"))
            };
        }
        if n == 2 {
            return ok(Family::C, 2);
        }
        // the long endpoint carries the -2 in its row
        let long = if c[nodes[a]][nodes[b]] == -2 { a } else { b };
        let short = if long == a { b } else { a };
        if degree[short] == 1 {
            return ok(Family::B, n);
        }
        if degree[long] == 1 {
            return ok(Family::C, n);
        }
        return if n == 4 {
            ok(Family::F, 4)
        } else {
            Err(not_finite("interior double bond outside F4"))
        };
    }
    if max_degree <= 2 {
        return ok(Family::A, n);
    }
    if max_degree > 3 || degree.iter().filter(|&&d| d == 3).count() > 1 {
        return Err(not_finite("too many branches"));
    }
    let center = degree.iter().position(|&d| d == 3).expect("branch node");
    let mut arms: Vec<usize> = adjacent[center]
        .iter()
        .map(|&start| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            loop {
                let next = adjacent[cur].iter().copied().find(|&x| x != prev);
                match next {
                    Some(x) => {
                        prev = cur;
                        cur = x;
                        len += 1;
                    }
                    None => return len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, k] => ok(Family::D, k + 3),
        [1, 2, 2] => ok(Family::E, 6),
        [1, 2, 3] => ok(Family::E, 7),
        [1, 2, 4] => ok(Family::E, 8),
        _ => Err(not_finite("branch arms outside the D/E series")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::cofactor_determinant;

    fn tr(s: &str) -> SimpleTypeRank {
        s.parse().unwrap()
    }

    fn roots_of(s: &str) -> RootSystem {
        build_root_system(tr(s))
    }

    #[test]
    fn rank_constraints() {
        assert!(SimpleTypeRank::new(Family::D, 2).is_err());
        assert!(SimpleTypeRank::new(Family::D, 3).is_err());
        assert!(SimpleTypeRank::new(Family::E, 5).is_err());
        assert!(SimpleTypeRank::new(Family::B, 1).is_err());
        assert!(SimpleTypeRank::new(Family::A, 0).is_err());
        assert!(SimpleTypeRank::new(Family::G, 3).is_err());
        let err = SimpleTypeRank::new(Family::D, 2).unwrap_err().to_string();
        assert!(err.contains("D2 = A1xA1"), "{err}");
        assert_eq!(tr("e8").to_string(), "E8");
        assert!("X3".parse::<SimpleTypeRank>().is_err());
    }

    #[test]
    fn small_root_counts() {
        let a1 = roots_of("A1");
        assert_eq!(a1.roots().len(), 2);
        assert_eq!(a1.positive_roots().len(), 1);
        let b4 = roots_of("B4");
        assert_eq!((b4.roots().len(), b4.positive_roots().len()), (32, 16));
        let g2 = roots_of("G2");
        assert_eq!((g2.roots().len(), g2.positive_roots().len()), (12, 6));
        assert_eq!(roots_of("F4").positive_roots().len(), 24);
    }

    #[test]
    fn rank_two_positive_roots() {
        let a2 = roots_of("A2");
        let want: Vec<Root> = [[1, 0], [0, 1], [1, 1]].iter().map(|v| Root::new(v.to_vec())).collect();
        assert_eq!(a2.positive_roots(), want.as_slice());
        let c2 = roots_of("C2");
        let want: Vec<Root> = [[1, 0], [0, 1], [1, 1], [2, 1]]
            .iter()
            .map(|v| Root::new(v.to_vec()))
            .collect();
        assert_eq!(c2.positive_roots(), want.as_slice());
        // α₁ short, α₂ long
        assert!(!c2.is_long(&[1, 0]));
        assert!(c2.is_long(&[0, 1]));
        assert!(c2.is_long(&[2, 1]));
    }

    #[test]
    fn extended_diagrams() {
        let a1 = extended_diagram(&roots_of("A1"));
        assert_eq!(a1.nodes().len(), 2);
        assert_eq!(a1.affine_root().coords(), &[-1]);

        let c2 = extended_diagram(&roots_of("C2"));
        assert_eq!(c2.affine_root().coords(), &[-2, -1]);
        let mut bonds: Vec<_> = c2.edges().iter().map(|b| (b.a, b.b, b.multiplicity)).collect();
        bonds.sort();
        // chain α₂ = α₁ = α₀, both bonds double
        assert_eq!(bonds, vec![(0, 1, 2), (0, 2, 2)]);

        let g2 = extended_diagram(&roots_of("G2"));
        assert_eq!(g2.affine_root().coords(), &[-3, -2]);
        // affine node hangs off the long simple root α₂ by a single bond
        assert!(g2.edges().contains(&Bond { a: 1, b: 2, multiplicity: 1 }));
    }

    #[test]
    fn highest_root_is_max_height_by_brute_force() {
        for t in SimpleTypeRank::all_up_to(8) {
            let rs = build_root_system(t);
            let best = rs.roots().iter().max_by_key(|r| r.height()).unwrap();
            assert_eq!(rs.highest_root(), best, "{t}");
            let ties = rs.roots().iter().filter(|r| r.height() == best.height()).count();
            assert_eq!(ties, 1, "{t}");
        }
    }

    #[test]
    fn structural_invariants() {
        let mut all = SimpleTypeRank::all_up_to(8);
        all.push(tr("B2"));
        for t in all {
            let rs = build_root_system(t);
            let n = t.rank();
            assert_eq!(rs.positive_roots().len(), t.positive_root_count(), "{t}");
            assert_eq!(rs.roots().len(), 2 * t.positive_root_count(), "{t}");
            for r in rs.roots() {
                assert!(rs.contains(r.negated().coords()), "{t}: negation closure");
                let c = r.coords();
                assert!(c.iter().all(|&x| x >= 0) || c.iter().all(|&x| x <= 0), "{t}: sign");
            }
            let cm = rs.cartan();
            for i in 0..n {
                assert_eq!(cm[i][i], 2);
                for j in 0..n {
                    if i != j {
                        assert!((-3..=0).contains(&cm[i][j]));
                        assert!((0..=3).contains(&(cm[i][j] * cm[j][i])));
                    }
                }
            }
            let ext = extended_diagram(&rs);
            assert_eq!(cofactor_determinant(ext.cartan()), 0, "{t}: affine det");
            assert_eq!(crate::linalg::bareiss_rank(ext.cartan()), n, "{t}: affine rank");
            let theta = rs.highest_root().coords().to_vec();
            let sum: Vec<i64> = ext.affine_root().coords().iter().zip(&theta).map(|(a, b)| a + b).collect();
            assert!(sum.iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn classification_recovers_each_type() {
        let mut all = SimpleTypeRank::all_up_to(8);
        all.push(tr("B2"));
        for t in all {
            let rs = build_root_system(t);
            let comps = classify_cartan(rs.cartan()).unwrap();
            assert_eq!(comps.len(), 1);
            assert_eq!(comps[0].typerank, t.canonical());
        }
    }

    #[test]
    fn classification_rejects_affine() {
        for t in ["A1", "A3", "C3", "D5", "E6", "F4", "G2"] {
            let ext = extended_diagram(&roots_of(t));
            assert!(classify_cartan(ext.cartan()).is_err(), "{t}");
        }
    }

    #[test]
    fn root_display() {
        assert_eq!(Root::new(vec![2, 1]).to_string(), "2a1+a2");
        assert_eq!(Root::new(vec![-1, 0, -1]).to_string(), "-a1-a3");
    }
}
