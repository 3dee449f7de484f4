//! Finite ranked posets and the combinatorial side of regular CW
//! complexes: gradedness, thinness, Möbius function, Euler characteristics
//! and a brute-force shelling search for tiny order complexes.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Id used for an adjoined minimum.
pub const BOTTOM_ID: &str = "0^";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetElement {
    pub id: String,
    pub rank: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub v: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<String>,
}

impl PosetElement {
    pub fn new(id: impl Into<String>, rank: i64) -> Self {
        PosetElement { id: id.into(), rank, v: None, w: None }
    }
}

/// A finite poset given by its cover relations and a declared rank.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPoset {
    pub elements: Vec<PosetElement>,
    pub covers: Vec<(String, String)>,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] & (1 << (i % 64)) != 0
    }
    fn or_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= *b;
        }
    }
    fn and_count(&self, other: &Bits) -> usize {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
    fn count(&self) -> usize {
        self.0.iter().map(|a| a.count_ones() as usize).sum()
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &word)| {
            (0..64).filter(move |b| word & (1 << b) != 0).map(move |b| k * 64 + b)
        })
    }
}

/// Closure data of a validated poset. Indices follow `elements`.
struct Closure {
    n: usize,
    rank: Vec<i64>,
    /// `up[x]` = {y : x ≤ y}
    up: Vec<Bits>,
    /// `down[y]` = {x : x ≤ y}
    down: Vec<Bits>,
    /// true covers (transitive reduction), indexed by lower element
    cover_up: Vec<Vec<usize>>,
    /// indices sorted by rank (a linear extension)
    topo: Vec<usize>,
}

impl Closure {
    fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].get(y)
    }
}

impl GradedPoset {
    pub fn new(elements: Vec<PosetElement>, covers: Vec<(String, String)>) -> Self {
        GradedPoset { elements, covers }
    }

    /// A chain `0 < 1 < … < len` with ranks `0..=len`.
    pub fn chain(len: usize) -> Self {
        let elements = (0..=len).map(|i| PosetElement::new(i.to_string(), i as i64)).collect();
        let covers = (0..len).map(|i| (i.to_string(), (i + 1).to_string())).collect();
        GradedPoset { elements, covers }
    }

    /// Subsets of `{0..atoms-1}` under inclusion, ids like `{0,2}`.
    pub fn boolean_lattice(atoms: usize) -> Self {
        let name = |m: u32| {
            let items: Vec<String> = (0..atoms).filter(|i| m & (1 << i) != 0).map(|i| i.to_string()).collect();
            format!("{{{}}}", items.join(","))
        };
        let mut elements = Vec::new();
        let mut covers = Vec::new();
        for m in 0u32..(1 << atoms) {
            elements.push(PosetElement::new(name(m), m.count_ones() as i64));
            for i in 0..atoms {
                if m & (1 << i) == 0 {
                    covers.push((name(m), name(m | (1 << i))));
                }
            }
        }
        GradedPoset { elements, covers }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.id == id)
    }

    pub fn element(&self, id: &str) -> Option<&PosetElement> {
        self.elements.iter().find(|e| e.id == id)
    }

    fn id_map(&self) -> Result<HashMap<&str, usize>> {
        let mut map = HashMap::with_capacity(self.elements.len());
        for (i, e) in self.elements.iter().enumerate() {
            if map.insert(e.id.as_str(), i).is_some() {
                return Err(Error::MalformedPoset(format!("duplicate id {:?}", e.id)));
            }
        }
        Ok(map)
    }

    /// Checks that ids are unique, covers reference known ids and strictly
    /// increase the declared rank (which also rules out cycles).
    pub fn validate(&self) -> Result<()> {
        self.closure().map(|_| ())
    }

    fn closure(&self) -> Result<Closure> {
        let map = self.id_map()?;
        let n = self.elements.len();
        let rank: Vec<i64> = self.elements.iter().map(|e| e.rank).collect();
        let mut given_up: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (lo, hi) in &self.covers {
            let (&a, &b) = match (map.get(lo.as_str()), map.get(hi.as_str())) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(Error::MalformedPoset(format!("cover ({lo}, {hi}) names an unknown id"))),
            };
            if rank[b] <= rank[a] {
                return Err(Error::MalformedPoset(format!(
                    "cover ({lo}, {hi}) does not increase rank ({} -> {})",
                    rank[a], rank[b]
                )));
            }
            given_up[a].push(b);
        }
        let mut topo: Vec<usize> = (0..n).collect();
        topo.sort_by_key(|&i| rank[i]);
        let mut up: Vec<Bits> = (0..n).map(|_| Bits::new(n)).collect();
        for &x in topo.iter().rev() {
            let mut b = Bits::new(n);
            b.set(x);
            for &y in &given_up[x] {
                b.or_assign(&up[y]);
            }
            up[x] = b;
        }
        let mut down: Vec<Bits> = (0..n).map(|_| Bits::new(n)).collect();
        for x in 0..n {
            for y in up[x].iter() {
                down[y].set(x);
            }
        }
        let mut cover_up = vec![Vec::new(); n];
        for x in 0..n {
            for y in up[x].iter() {
                // strictly between x and y: up[x] ∩ down[y] minus the two ends
                if y != x && up[x].and_count(&down[y]) == 2 {
                    cover_up[x].push(y);
                }
            }
        }
        Ok(Closure { n, rank, up, down, cover_up, topo })
    }

    /// `x ≤ y`.
    pub fn leq(&self, x: &str, y: &str) -> Result<bool> {
        let c = self.closure()?;
        let (i, j) = self.pair_indices(x, y)?;
        Ok(c.leq(i, j))
    }

    fn pair_indices(&self, x: &str, y: &str) -> Result<(usize, usize)> {
        let i = self.index_of(x).ok_or_else(|| Error::MalformedPoset(format!("unknown id {x:?}")))?;
        let j = self.index_of(y).ok_or_else(|| Error::MalformedPoset(format!("unknown id {y:?}")))?;
        Ok((i, j))
    }

    /// The transitive reduction of the declared covers, as id pairs.
    pub fn true_covers(&self) -> Result<Vec<(String, String)>> {
        let c = self.closure()?;
        let mut out = Vec::new();
        for x in 0..c.n {
            for &y in &c.cover_up[x] {
                out.push((self.elements[x].id.clone(), self.elements[y].id.clone()));
            }
        }
        Ok(out)
    }

    /// Shortest and longest cover-chain lengths from `x` to every element
    /// above it (`None` where not comparable).
    fn chain_lengths(c: &Closure, x: usize) -> Vec<Option<(usize, usize)>> {
        let mut out: Vec<Option<(usize, usize)>> = vec![None; c.n];
        out[x] = Some((0, 0));
        for &a in &c.topo {
            let Some((lo, hi)) = out[a] else { continue };
            for &b in &c.cover_up[a] {
                out[b] = Some(match out[b] {
                    None => (lo + 1, hi + 1),
                    Some((l, h)) => (l.min(lo + 1), h.max(hi + 1)),
                });
            }
        }
        out
    }

    /// Every closed interval has all maximal chains of equal length.
    pub fn is_graded(&self) -> Result<bool> {
        let c = self.closure()?;
        for x in 0..c.n {
            if Self::chain_lengths(&c, x).iter().flatten().any(|(lo, hi)| lo != hi) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every true cover raises the declared rank by exactly one.
    pub fn ranks_consistent(&self) -> Result<bool> {
        let c = self.closure()?;
        Ok((0..c.n).all(|x| c.cover_up[x].iter().all(|&y| c.rank[y] == c.rank[x] + 1)))
    }

    /// Every interval of length two (longest chain has two steps) has
    /// exactly four elements.
    pub fn is_thin(&self) -> Result<bool> {
        let c = self.closure()?;
        for x in 0..c.n {
            let lens = Self::chain_lengths(&c, x);
            for (y, l) in lens.iter().enumerate() {
                if let Some((_, 2)) = l {
                    if c.up[x].and_count(&c.down[y]) != 4 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `μ(x, z)` for all `z`; zero where `z` is not above `x`.
    fn mobius_row(c: &Closure, x: usize) -> Vec<i64> {
        let mut mu = vec![0i64; c.n];
        let mut order: Vec<usize> = c.up[x].iter().collect();
        order.sort_by_key(|&z| c.rank[z]);
        for &z in &order {
            if z == x {
                mu[z] = 1;
                continue;
            }
            let s: i64 = c.down[z].iter().filter(|&t| t != z && c.leq(x, t)).map(|t| mu[t]).sum();
            mu[z] = -s;
        }
        mu
    }

    pub fn mobius(&self, x: &str, y: &str) -> Result<i64> {
        let c = self.closure()?;
        let (i, j) = self.pair_indices(x, y)?;
        if !c.leq(i, j) {
            return Err(Error::NotComparable(format!("{x} is not below {y}")));
        }
        Ok(Self::mobius_row(&c, i)[j])
    }

    /// Unique minimal and maximal elements, by index.
    fn bounds(c: &Closure) -> Result<(usize, usize)> {
        let mins: Vec<usize> = (0..c.n).filter(|&y| c.down[y].count() == 1).collect();
        let maxs: Vec<usize> = (0..c.n).filter(|&x| c.up[x].count() == 1).collect();
        match (mins.as_slice(), maxs.as_slice()) {
            ([lo], [hi]) => Ok((*lo, *hi)),
            ([_], _) => Err(Error::MissingBound("maximum")),
            _ => Err(Error::MissingBound("minimum")),
        }
    }

    /// `μ(x, y) = (−1)^{rank y − rank x}` on every closed interval.
    pub fn is_eulerian(&self) -> Result<bool> {
        let c = self.closure()?;
        Self::bounds(&c)?;
        for x in 0..c.n {
            let mu = Self::mobius_row(&c, x);
            for y in c.up[x].iter() {
                let d = c.rank[y] - c.rank[x];
                let expect = if d.rem_euclid(2) == 0 { 1 } else { -1 };
                if mu[y] != expect {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Adjoins a new minimum [`BOTTOM_ID`] one rank below the lowest
    /// element (rank −1 for a face poset).
    pub fn with_bottom(&self) -> GradedPoset {
        let min_rank = self.elements.iter().map(|e| e.rank).min().unwrap_or(0);
        let mut out = self.clone();
        let minimal: Vec<String> = self
            .elements
            .iter()
            .filter(|e| !self.covers.iter().any(|(_, hi)| hi == &e.id))
            .map(|e| e.id.clone())
            .collect();
        out.elements.insert(0, PosetElement::new(BOTTOM_ID, min_rank - 1));
        for m in minimal {
            out.covers.push((BOTTOM_ID.to_string(), m));
        }
        out
    }

    /// The sub-poset on ids accepted by `keep`, with covers recomputed.
    pub fn restrict(&self, keep: impl Fn(&PosetElement) -> bool) -> Result<GradedPoset> {
        let c = self.closure()?;
        let kept: Vec<usize> = (0..c.n).filter(|&i| keep(&self.elements[i])).collect();
        let elements = kept.iter().map(|&i| self.elements[i].clone()).collect();
        let mut covers = Vec::new();
        for &x in &kept {
            for &y in &kept {
                if x == y || !c.leq(x, y) {
                    continue;
                }
                let between = kept.iter().any(|&z| z != x && z != y && c.leq(x, z) && c.leq(z, y));
                if !between {
                    covers.push((self.elements[x].id.clone(), self.elements[y].id.clone()));
                }
            }
        }
        Ok(GradedPoset { elements, covers })
    }

    /// Deterministic JSON with elements sorted by `(rank, id)`.
    pub fn export_json(&self) -> String {
        serde_json::to_string_pretty(&self.sorted()).expect("poset serializes")
    }

    pub fn from_json(text: &str) -> Result<GradedPoset> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn export_dot(&self) -> String {
        let p = self.sorted();
        let mut out = String::from("digraph poset {\n  rankdir=BT;\n");
        for e in &p.elements {
            let _ = writeln!(out, "  \"{}\" [label=\"{}\\nrank {}\"];", e.id, e.id, e.rank);
        }
        for (a, b) in &p.covers {
            let _ = writeln!(out, "  \"{a}\" -> \"{b}\";");
        }
        out.push_str("}\n");
        out
    }

    fn sorted(&self) -> GradedPoset {
        let mut p = self.clone();
        p.elements.sort_by(|a, b| (a.rank, &a.id).cmp(&(b.rank, &b.id)));
        let pos: HashMap<&str, usize> = p.elements.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();
        let key = |s: &String| pos.get(s.as_str()).copied().unwrap_or(usize::MAX);
        p.covers.sort_by_key(|(a, b)| (key(a), key(b)));
        p.covers.dedup();
        p
    }
}

/// Alternating cell counts of a face poset viewed as a CW complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub top_dim: i64,
    /// Number of cells per dimension `0..=top_dim`.
    pub cells_per_dim: Vec<usize>,
    pub cell_sum: i64,
    pub boundary_sum: i64,
    pub ball_expected_boundary: i64,
    /// `Σ (−1)^dim = 1` and the boundary sums to `1 + (−1)^{d−1}`.
    pub ball_ok: bool,
    /// `Σ (−1)^dim = 1 + (−1)^d`.
    pub sphere_ok: bool,
    /// Graded and thin after adjoining a minimum.
    pub regular_ok: bool,
    pub pass: bool,
}

fn sign(d: i64) -> i64 {
    if d.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Euler characteristic check of a face poset. Cells are the elements of
/// rank ≥ 0 (an adjoined minimum of rank −1 is ignored); the boundary is
/// every cell except those of dimension `top_dim`.
pub fn ball_euler_check(face_poset: &GradedPoset, top_dim: i64) -> Result<EulerReport> {
    face_poset.validate()?;
    let cells: Vec<&PosetElement> = face_poset.elements.iter().filter(|e| e.rank >= 0).collect();
    let mut per_dim = vec![0usize; (top_dim.max(0) + 1) as usize];
    for e in &cells {
        if e.rank > top_dim {
            return Err(Error::MalformedPoset(format!("cell {} above top dimension {top_dim}", e.id)));
        }
        per_dim[e.rank as usize] += 1;
    }
    let cell_sum: i64 = cells.iter().map(|e| sign(e.rank)).sum();
    let boundary_sum: i64 = cells.iter().filter(|e| e.rank < top_dim).map(|e| sign(e.rank)).sum();
    let ball_expected_boundary = 1 + sign(top_dim - 1);
    let ball_ok = cell_sum == 1 && boundary_sum == ball_expected_boundary;
    let sphere_ok = cell_sum == 1 + sign(top_dim);
    let cells_only = face_poset.restrict(|e| e.rank >= 0)?;
    let hat = cells_only.with_bottom();
    let regular_ok = hat.is_graded()? && hat.is_thin()?;
    Ok(EulerReport {
        top_dim,
        cells_per_dim: per_dim,
        cell_sum,
        boundary_sum,
        ball_expected_boundary,
        ball_ok,
        sphere_ok,
        regular_ok,
        pass: ball_ok && regular_ok,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Shelling {
    /// Facets (maximal chains of the order complex, as id lists) in a
    /// shelling order.
    Found { order: Vec<Vec<String>> },
    None,
    Skipped { facets: usize },
}

pub const DEFAULT_FACET_LIMIT: usize = 8;

/// Searches for a shelling of the order complex of `p` when it has at most
/// `facet_limit` facets.
pub fn brute_shelling(p: &GradedPoset, facet_limit: usize) -> Result<Shelling> {
    let c = p.closure()?;
    // maximal chains: start at minimal elements, follow true covers
    let mut facets: Vec<Vec<usize>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..c.n).filter(|&y| c.down[y].count() == 1).map(|m| vec![m]).collect();
    while let Some(chain) = stack.pop() {
        let last = *chain.last().expect("nonempty");
        if c.cover_up[last].is_empty() {
            facets.push(chain);
            continue;
        }
        for &y in &c.cover_up[last] {
            let mut next = chain.clone();
            next.push(y);
            stack.push(next);
        }
    }
    facets.sort();
    if let (Some(lo), Some(hi)) = (facets.iter().map(Vec::len).min(), facets.iter().map(Vec::len).max()) {
        if lo != hi {
            return Err(Error::NotPure(lo - 1, hi - 1));
        }
    }
    if facets.len() > facet_limit {
        return Ok(Shelling::Skipped { facets: facets.len() });
    }
    let sets: Vec<Bits> = facets
        .iter()
        .map(|f| {
            let mut b = Bits::new(c.n);
            f.iter().for_each(|&i| b.set(i));
            b
        })
        .collect();
    let mut order = Vec::new();
    let mut used = vec![false; sets.len()];
    if sets.is_empty() || shell_search(&sets, &mut order, &mut used) {
        let order = order
            .iter()
            .map(|&k| facets[k].iter().map(|&i| p.elements[i].id.clone()).collect())
            .collect();
        Ok(Shelling::Found { order })
    } else {
        Ok(Shelling::None)
    }
}

/// A new facet `F` may follow the placed ones iff every `G ∩ F` (G placed)
/// lies in some codimension-one face `G' ∩ F`.
fn can_append(sets: &[Bits], placed: &[usize], f: usize) -> bool {
    let dim = sets[f].count();
    let inter: Vec<Bits> = placed
        .iter()
        .map(|&g| {
            let mut b = sets[g].clone();
            for (x, y) in b.0.iter_mut().zip(&sets[f].0) {
                *x &= *y;
            }
            b
        })
        .collect();
    let ridges: Vec<&Bits> = inter.iter().filter(|b| b.count() + 1 == dim).collect();
    inter.iter().all(|b| ridges.iter().any(|r| r.and_count(b) == b.count()))
}

fn shell_search(sets: &[Bits], order: &mut Vec<usize>, used: &mut [bool]) -> bool {
    if order.len() == sets.len() {
        return true;
    }
    for f in 0..sets.len() {
        if used[f] || (!order.is_empty() && !can_append(sets, order, f)) {
            continue;
        }
        used[f] = true;
        order.push(f);
        if shell_search(sets, order, used) {
            return true;
        }
        order.pop();
        used[f] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> GradedPoset {
        GradedPoset::boolean_lattice(2)
    }

    #[test]
    fn chain_is_graded_not_thin() {
        let c = GradedPoset::chain(3);
        assert!(c.is_graded().unwrap());
        assert!(!c.is_thin().unwrap());
        assert!(!c.is_eulerian().unwrap());
    }

    #[test]
    fn boolean_lattices() {
        let b = diamond();
        assert!(b.is_graded().unwrap() && b.is_thin().unwrap());
        assert!(GradedPoset::boolean_lattice(3).is_eulerian().unwrap());
    }

    #[test]
    fn mobius_values() {
        let b = diamond();
        assert_eq!(b.mobius("{}", "{}").unwrap(), 1);
        assert_eq!(b.mobius("{}", "{0}").unwrap(), -1);
        assert_eq!(b.mobius("{}", "{0,1}").unwrap(), 1);
        assert!(b.mobius("{0}", "{1}").is_err());
    }

    #[test]
    fn ungraded_pentagon() {
        let els = ["0", "a", "b", "c", "1"];
        let ranks = [0, 1, 1, 2, 3];
        let elements = els.iter().zip(ranks).map(|(i, r)| PosetElement::new(*i, r)).collect();
        let covers = [("0", "a"), ("a", "1"), ("0", "b"), ("b", "c"), ("c", "1")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let p = GradedPoset::new(elements, covers);
        assert!(!p.is_graded().unwrap());
        assert!(!p.ranks_consistent().unwrap());
    }

    #[test]
    fn malformed_covers() {
        let mut p = GradedPoset::chain(1);
        p.covers.push(("1".into(), "0".into()));
        assert!(p.validate().is_err());
        let mut q = GradedPoset::chain(1);
        q.covers.push(("0".into(), "x".into()));
        assert!(q.validate().is_err());
    }

    #[test]
    fn segment_is_a_ball() {
        let elements = vec![PosetElement::new("a", 0), PosetElement::new("b", 0), PosetElement::new("ab", 1)];
        let covers = vec![("a".into(), "ab".into()), ("b".into(), "ab".into())];
        let r = ball_euler_check(&GradedPoset::new(elements, covers), 1).unwrap();
        assert_eq!((r.cell_sum, r.boundary_sum), (1, 2));
        assert!(r.pass);
    }

    #[test]
    fn square_boundary_is_a_sphere_not_a_ball() {
        let mut elements = Vec::new();
        let mut covers = Vec::new();
        for i in 0..4 {
            elements.push(PosetElement::new(format!("v{i}"), 0));
            elements.push(PosetElement::new(format!("e{i}"), 1));
        }
        for i in 0..4 {
            covers.push((format!("v{i}"), format!("e{i}")));
            covers.push((format!("v{}", (i + 1) % 4), format!("e{i}")));
        }
        let r = ball_euler_check(&GradedPoset::new(elements, covers), 1).unwrap();
        assert_eq!(r.cell_sum, 0);
        assert!(!r.ball_ok && r.sphere_ok && r.regular_ok);
    }

    #[test]
    fn chain_fails_ball_check() {
        assert!(!ball_euler_check(&GradedPoset::chain(3), 3).unwrap().pass);
    }

    #[test]
    fn shelling_cases() {
        let single = GradedPoset::chain(2);
        assert!(matches!(brute_shelling(&single, 8).unwrap(), Shelling::Found { .. }));
        let b3 = GradedPoset::boolean_lattice(3).restrict(|e| e.rank == 1 || e.rank == 2).unwrap();
        // hexagon: six facets
        assert!(matches!(brute_shelling(&b3, 8).unwrap(), Shelling::Found { .. }));
        assert_eq!(brute_shelling(&b3, 5).unwrap(), Shelling::Skipped { facets: 6 });
    }

    #[test]
    fn two_disjoint_edges_are_not_shellable() {
        let elements = ["a", "b", "c", "d"].iter().zip([0, 1, 0, 1]).map(|(i, r)| PosetElement::new(*i, r)).collect();
        let covers = vec![("a".into(), "b".into()), ("c".into(), "d".into())];
        assert_eq!(brute_shelling(&GradedPoset::new(elements, covers), 8).unwrap(), Shelling::None);
    }

    #[test]
    fn non_pure_is_an_error() {
        let elements = ["a", "b", "c"].iter().zip([0, 1, 0]).map(|(i, r)| PosetElement::new(*i, r)).collect();
        let covers = vec![("a".into(), "b".into())];
        assert!(brute_shelling(&GradedPoset::new(elements, covers), 8).is_err());
    }

    #[test]
    fn exports() {
        let c = GradedPoset::chain(1);
        let dot = c.export_dot();
        assert_eq!(dot.matches("->").count(), 1);
        assert_eq!(GradedPoset::default().export_dot(), "digraph poset {\n  rankdir=BT;\n}\n");
        let back = GradedPoset::from_json(&c.export_json()).unwrap();
        assert_eq!(back, c);
    }
}
