//! Generalized Cartan matrices and the two diagram constructions used to
//! move between projected and twisted Richardson combinatorics: glueing two
//! copies of a diagram along a subdiagram, and the one-node extension that
//! attaches a new node `0` joined to every old node by a `-2` bond.

use std::collections::VecDeque;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nodes::NodeSet;

/// An index set with a generalized Cartan matrix. Node labels are opaque.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CartanData {
    pub nodes: Vec<String>,
    pub matrix: Vec<Vec<i64>>,
}

/// Outcome of [`CartanData::validate`]. Violations are data, not errors.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Validation {
    pub violations: Vec<String>,
}

impl Validation {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Which copy of the original diagram a glued node comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeCopy {
    Flat,
    Sharp,
    Glued,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NodeTag {
    pub base: String,
    pub copy: NodeCopy,
}

/// Result of [`CartanData::glue`]: the glued matrix plus the two node
/// injections `i ↦ i♭` and `i ↦ i♯` (as indices into the glued node list).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Glued {
    pub data: CartanData,
    pub tags: Vec<NodeTag>,
    pub flat_map: Vec<usize>,
    pub sharp_map: Vec<usize>,
}

impl Glued {
    /// Indices of the flat copy `I♭` (glued nodes included).
    pub fn flat_nodes(&self) -> NodeSet {
        self.flat_map.iter().copied().collect()
    }

    pub fn sharp_nodes(&self) -> NodeSet {
        self.sharp_map.iter().copied().collect()
    }
}

pub const BUILTIN_NAMES: [&str; 6] = ["a1", "a2", "a3", "a4", "affine_a1", "hyperbolic_2_3"];

impl CartanData {
    pub fn new(nodes: Vec<String>, matrix: Vec<Vec<i64>>) -> Self {
        CartanData { nodes, matrix }
    }

    /// Cartan matrix with nodes labelled `"1"..="n"`.
    pub fn from_matrix(matrix: Vec<Vec<i64>>) -> Self {
        let nodes = (1..=matrix.len()).map(|i| i.to_string()).collect();
        CartanData { nodes, matrix }
    }

    /// Finite type `A_n`.
    pub fn type_a(n: usize) -> Self {
        let mut m = vec![vec![0; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        Self::from_matrix(m)
    }

    pub fn affine_a1() -> Self {
        Self::from_matrix(vec![vec![2, -2], vec![-2, 2]])
    }

    /// Rank-2 hyperbolic matrix with `a12·a21 = 6`.
    pub fn hyperbolic_2_3() -> Self {
        Self::from_matrix(vec![vec![2, -2], vec![-3, 2]])
    }

    pub fn builtin(name: &str) -> Option<Self> {
        match name {
            "a1" => Some(Self::type_a(1)),
            "a2" => Some(Self::type_a(2)),
            "a3" => Some(Self::type_a(3)),
            "a4" => Some(Self::type_a(4)),
            "affine_a1" => Some(Self::affine_a1()),
            "hyperbolic_2_3" => Some(Self::hyperbolic_2_3()),
            _ => None,
        }
    }

    pub fn rank(&self) -> usize {
        self.nodes.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.matrix[i][j]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.nodes
            .iter()
            .position(|n| n == label)
            .ok_or_else(|| Error::UnknownNode(label.to_string()))
    }

    pub fn node_set<S: AsRef<str>>(&self, labels: &[S]) -> Result<NodeSet> {
        labels.iter().map(|l| self.index_of(l.as_ref())).collect()
    }

    pub fn labels_of(&self, set: NodeSet) -> Vec<String> {
        set.iter().map(|i| self.nodes[i].clone()).collect()
    }

    pub fn all_nodes(&self) -> NodeSet {
        NodeSet::full(self.rank())
    }

    fn is_square(&self) -> bool {
        self.matrix.len() == self.nodes.len() && self.matrix.iter().all(|r| r.len() == self.nodes.len())
    }

    /// Checks every GCM axiom plus symmetrizability and lists each violation.
    pub fn validate(&self) -> Validation {
        let mut violations = Vec::new();
        if !self.is_square() {
            violations.push(format!(
                "matrix is not square over {} nodes",
                self.nodes.len()
            ));
            return Validation { violations };
        }
        for (i, a) in self.nodes.iter().enumerate() {
            if self.nodes[..i].contains(a) {
                violations.push(format!("duplicate node label {a:?}"));
            }
        }
        let n = self.rank();
        for i in 0..n {
            if self.matrix[i][i] != 2 {
                violations.push(format!(
                    "diagonal entry at ({0},{0}) is {1}, expected 2",
                    self.nodes[i], self.matrix[i][i]
                ));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                if self.matrix[i][j] > 0 {
                    violations.push(format!(
                        "positive off-diagonal entry {} at ({},{})",
                        self.matrix[i][j], self.nodes[i], self.nodes[j]
                    ));
                }
                if i < j && (self.matrix[i][j] == 0) != (self.matrix[j][i] == 0) {
                    violations.push(format!(
                        "zero-symmetry broken at ({},{})",
                        self.nodes[i], self.nodes[j]
                    ));
                }
            }
        }
        if violations.is_empty() && self.symmetrizer().is_none() {
            violations.push("matrix is not symmetrizable".to_string());
        }
        Validation { violations }
    }

    /// A positive diagonal `d` with `d_i a_ij = d_j a_ji`, normalized to 1 at
    /// the first node of every connected component. `None` when the ratios
    /// propagated along edges are inconsistent on some cycle.
    pub fn symmetrizer(&self) -> Option<Vec<BigRational>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rank();
        let mut d: Vec<Option<BigRational>> = vec![None; n];
        for root in 0..n {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some(BigRational::one());
            let mut queue = VecDeque::from([root]);
            while let Some(i) = queue.pop_front() {
                let di = d[i].clone().expect("visited");
                for j in 0..n {
                    if i == j || self.matrix[i][j] == 0 {
                        continue;
                    }
                    if self.matrix[j][i] == 0 {
                        return None;
                    }
                    // d_i a_ij = d_j a_ji
                    let dj = &di * BigRational::new(self.matrix[i][j].into(), self.matrix[j][i].into());
                    match &d[j] {
                        Some(existing) if *existing != dj => return None,
                        Some(_) => {}
                        None => {
                            if !dj.is_positive() {
                                return None;
                            }
                            d[j] = Some(dj);
                            queue.push_back(j);
                        }
                    }
                }
            }
        }
        let d: Vec<BigRational> = d.into_iter().map(|x| x.expect("all visited")).collect();
        if d.iter().any(|x| x.is_zero()) {
            return None;
        }
        Some(d)
    }

    /// Connected components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut comp = vec![root];
            let mut stack = vec![root];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if !seen[j] && (self.matrix[i][j] != 0 || self.matrix[j][i] != 0) {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Adjoins a node `0` with `a_{i0} = a_{0i} = -2` for every old node.
    /// The new node is appended last; its label is `"0"` (primed until fresh).
    pub fn extend_shriek(&self) -> CartanData {
        let mut label = "0".to_string();
        while self.nodes.contains(&label) {
            label.push('\'');
        }
        let n = self.rank();
        let mut matrix: Vec<Vec<i64>> = self
            .matrix
            .iter()
            .map(|row| {
                let mut r = row.clone();
                r.push(-2);
                r
            })
            .collect();
        let mut last = vec![-2; n];
        last.push(2);
        matrix.push(last);
        let mut nodes = self.nodes.clone();
        nodes.push(label);
        CartanData { nodes, matrix }
    }

    /// Glues two copies of the diagram along `k`.
    ///
    /// Node order: the flat copy in original order (glued nodes keep their
    /// plain label), then the sharp copies of the nodes outside `k`.
    pub fn glue(&self, k: NodeSet) -> Result<Glued> {
        let n = self.rank();
        if !k.is_subset(self.all_nodes()) {
            return Err(Error::NotSubset(format!("{k:?} in rank {n}")));
        }
        let mut tags = Vec::with_capacity(2 * n - k.len());
        let mut flat_map = Vec::with_capacity(n);
        let mut sharp_map = vec![usize::MAX; n];
        for i in 0..n {
            flat_map.push(tags.len());
            if k.contains(i) {
                sharp_map[i] = tags.len();
                tags.push(NodeTag { base: self.nodes[i].clone(), copy: NodeCopy::Glued });
            } else {
                tags.push(NodeTag { base: self.nodes[i].clone(), copy: NodeCopy::Flat });
            }
        }
        for i in 0..n {
            if !k.contains(i) {
                sharp_map[i] = tags.len();
                tags.push(NodeTag { base: self.nodes[i].clone(), copy: NodeCopy::Sharp });
            }
        }
        let m = tags.len();
        // (base index, in flat copy, in sharp copy) for every glued node
        let mut origin = vec![(0usize, false, false); m];
        for i in 0..n {
            origin[flat_map[i]] = (i, true, k.contains(i));
            origin[sharp_map[i]] = (i, k.contains(i), true);
        }
        let mut matrix = vec![vec![0i64; m]; m];
        for p in 0..m {
            for q in 0..m {
                let (i, pf, ps) = origin[p];
                let (j, qf, qs) = origin[q];
                let same_copy = (pf && qf) || (ps && qs);
                matrix[p][q] = if same_copy { self.matrix[i][j] } else { 0 };
            }
        }
        let nodes = tags.iter().map(NodeTag::to_string).collect();
        Ok(Glued {
            data: CartanData { nodes, matrix },
            tags,
            flat_map,
            sharp_map,
        })
    }
}

impl fmt::Display for NodeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.copy {
            NodeCopy::Flat => write!(f, "{}♭", self.base),
            NodeCopy::Sharp => write!(f, "{}♯", self.base),
            NodeCopy::Glued => write!(f, "{}", self.base),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn a2_is_valid() {
        assert!(CartanData::type_a(2).validate().is_ok());
    }

    #[test]
    fn broken_zero_symmetry_is_reported() {
        let c = CartanData::from_matrix(vec![vec![2, -1], vec![0, 2]]);
        let v = c.validate();
        assert_eq!(v.violations, vec!["zero-symmetry broken at (1,2)".to_string()]);
    }

    #[test]
    fn affine_a1_is_symmetrizable() {
        let c = CartanData::affine_a1();
        assert!(c.validate().is_ok());
        assert_eq!(c.symmetrizer().unwrap(), vec![q(1, 1), q(1, 1)]);
    }

    #[test]
    fn non_symmetric_rank_two_symmetrizer() {
        // d1 * (-2) = d2 * (-3)
        let d = CartanData::hyperbolic_2_3().symmetrizer().unwrap();
        assert_eq!(d, vec![q(1, 1), q(2, 3)]);
    }

    #[test]
    fn inconsistent_cycle_is_not_symmetrizable() {
        let c = CartanData::from_matrix(vec![
            vec![2, -1, -1],
            vec![-2, 2, -1],
            vec![-1, -1, 2],
        ]);
        assert_eq!(c.validate().violations, vec!["matrix is not symmetrizable".to_string()]);
    }

    #[test]
    fn bad_diagonal_and_sign() {
        let c = CartanData::from_matrix(vec![vec![1, 1], vec![-1, 2]]);
        let v = c.validate();
        assert_eq!(v.violations.len(), 2);
        assert!(v.violations[0].contains("diagonal"));
        assert!(v.violations[1].contains("positive off-diagonal"));
    }

    #[test]
    fn shriek_of_a1_and_a2() {
        let a1 = CartanData::type_a(1).extend_shriek();
        assert_eq!(a1.matrix, vec![vec![2, -2], vec![-2, 2]]);
        assert_eq!(a1.nodes, vec!["1", "0"]);
        let a2 = CartanData::type_a(2).extend_shriek();
        assert_eq!(
            a2.matrix,
            vec![vec![2, -1, -2], vec![-1, 2, -2], vec![-2, -2, 2]]
        );
        assert!(a2.validate().is_ok());
    }

    #[test]
    fn shriek_of_empty_diagram() {
        let empty = CartanData::new(vec![], vec![]);
        assert_eq!(empty.extend_shriek().matrix, vec![vec![2]]);
    }

    #[test]
    fn glue_a2_along_second_node_is_a3() {
        let g = CartanData::type_a(2).glue(NodeSet::from_indices([1])).unwrap();
        assert_eq!(g.data.nodes, vec!["1♭", "2", "1♯"]);
        assert_eq!(
            g.data.matrix,
            vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]
        );
        assert_eq!(g.flat_map, vec![0, 1]);
        assert_eq!(g.sharp_map, vec![2, 1]);
    }

    #[test]
    fn glue_along_everything_and_nothing() {
        let a2 = CartanData::type_a(2);
        let full = a2.glue(a2.all_nodes()).unwrap();
        assert_eq!(full.data.matrix, a2.matrix);
        assert_eq!(full.flat_map, full.sharp_map);
        let none = a2.glue(NodeSet::EMPTY).unwrap();
        assert_eq!(
            none.data.matrix,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, 0, 0],
                vec![0, 0, 2, -1],
                vec![0, 0, -1, 2]
            ]
        );
    }

    #[test]
    fn glue_rejects_foreign_nodes() {
        assert!(CartanData::type_a(2).glue(NodeSet::from_indices([3])).is_err());
    }

    #[test]
    fn json_shape() {
        let c = CartanData::type_a(2);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"nodes":["1","2"],"matrix":[[2,-1],[-1,2]]}"#);
    }
}
