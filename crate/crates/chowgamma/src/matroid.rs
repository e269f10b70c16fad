//! Matroids, the lattice of flats, rank-selected subposets, and the
//! no-consecutive-integers subsets used as gamma index windows.
//!
//! A [`Matroid`] is a ground set `[n]` with a rank oracle backed by one
//! of four models: uniform, graphic, explicit bases, or explicit flats.
//! Ground subsets are single-word bitsets (element `i` of `[n]` is bit
//! `i-1`), which keeps closure and containment in the chain-enumeration
//! hot loop cheap; ground sets are capped at 64 elements.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::perm::Perm;

pub type GroundSet = u64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("ground set of size {n} exceeds the 64-element cap")]
    GroundSetTooLarge { n: usize },
    #[error("ground set must be nonempty")]
    EmptyGroundSet,
    #[error("element {element} is a loop (rank of the singleton is 0)")]
    Loop { element: usize },
    #[error("uniform matroid requires r <= n, got r = {r}, n = {n}")]
    UniformRankTooLarge { r: usize, n: usize },
    #[error("graphic matroid edge ({u}, {v}) is not between distinct vertices in range")]
    BadEdge { u: usize, v: usize },
    #[error("bases model requires at least one basis, all of equal size")]
    BadBases,
    #[error("invalid explicit flats: {0}")]
    InvalidFlats(String),
    #[error("rank selection {rank} is outside [1, {max}]")]
    RankSelectionOutOfRange { rank: usize, max: usize },
    #[error("element {element} is outside the ground set [{n}]")]
    ElementOutOfRange { element: usize, n: usize },
}

#[derive(Debug, Clone)]
enum Model {
    Uniform { r: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Bases { bases: Vec<GroundSet> },
    Flats { flats: Vec<(GroundSet, usize)> },
}

/// A loopless matroid on the ground set `[n]`.
#[derive(Debug, Clone)]
pub struct Matroid {
    n: usize,
    rank: usize,
    model: Model,
}

/// Convert a 1-based element list to a bitset.
pub fn set_from_elements(elements: &[usize], n: usize) -> Result<GroundSet, MatroidError> {
    let mut s: GroundSet = 0;
    for &e in elements {
        if e == 0 || e > n {
            return Err(MatroidError::ElementOutOfRange { element: e, n });
        }
        s |= 1 << (e - 1);
    }
    Ok(s)
}

/// The 1-based elements of a bitset.
pub fn elements_of_set(s: GroundSet, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| s >> i & 1 == 1).map(|i| i + 1).collect()
}

pub fn set_to_string(s: GroundSet, n: usize) -> String {
    let els: Vec<String> = elements_of_set(s, n).iter().map(|e| e.to_string()).collect();
    format!("{{{}}}", els.join(","))
}

impl Matroid {
    fn validate(n: usize, rank: usize, model: Model) -> Result<Self, MatroidError> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if n > 64 {
            return Err(MatroidError::GroundSetTooLarge { n });
        }
        let m = Matroid { n, rank, model };
        debug_assert_eq!(m.rank_of(0), 0);
        for e in 0..n {
            if m.rank_of(1 << e) != 1 {
                return Err(MatroidError::Loop { element: e + 1 });
            }
        }
        Ok(m)
    }

    pub fn uniform(r: usize, n: usize) -> Result<Self, MatroidError> {
        if r > n {
            return Err(MatroidError::UniformRankTooLarge { r, n });
        }
        Self::validate(n, r, Model::Uniform { r })
    }

    /// The Boolean matroid `U_{n,n}`.
    pub fn boolean(n: usize) -> Result<Self, MatroidError> {
        Self::uniform(n, n)
    }

    /// Graphic matroid: the ground set is the edge list in input order
    /// (edge `i` of the input is element `i` of `[n]`); vertices are
    /// `1..=vertices`.
    pub fn graphic(vertices: usize, edges: &[(usize, usize)]) -> Result<Self, MatroidError> {
        for &(u, v) in edges {
            if u == 0 || v == 0 || u > vertices || v > vertices || u == v {
                return Err(MatroidError::BadEdge { u, v });
            }
        }
        let model = Model::Graphic {
            vertices,
            edges: edges.to_vec(),
        };
        let n = edges.len();
        let rank = graphic_rank(vertices, edges, if n >= 64 { !0 } else { (1 << n) - 1 });
        Self::validate(n, rank, model)
    }

    /// The complete graph on `m` vertices, edges in lexicographic order.
    pub fn complete_graph(m: usize) -> Result<Self, MatroidError> {
        let mut edges = Vec::new();
        for u in 1..=m {
            for v in (u + 1)..=m {
                edges.push((u, v));
            }
        }
        Self::graphic(m, &edges)
    }

    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Self, MatroidError> {
        if bases.is_empty() {
            return Err(MatroidError::BadBases);
        }
        let size = bases[0].len();
        let mut sets = Vec::with_capacity(bases.len());
        for b in bases {
            if b.len() != size {
                return Err(MatroidError::BadBases);
            }
            sets.push(set_from_elements(b, n)?);
        }
        Self::validate(n, size, Model::Bases { bases: sets })
    }

    /// Explicit flats with ranks. Validation is by spot checks
    /// (unique bottom, top present, meet-closed, rank-monotone, every
    /// element in an atom); full matroid axioms are not verified.
    pub fn from_flats(n: usize, flats: &[(Vec<usize>, usize)]) -> Result<Self, MatroidError> {
        if n == 0 {
            return Err(MatroidError::EmptyGroundSet);
        }
        if n > 64 {
            return Err(MatroidError::GroundSetTooLarge { n });
        }
        let full: GroundSet = if n == 64 { !0 } else { (1 << n) - 1 };
        let mut sets: Vec<(GroundSet, usize)> = Vec::with_capacity(flats.len());
        for (els, rank) in flats {
            sets.push((set_from_elements(els, n)?, *rank));
        }
        sets.sort();
        sets.dedup();
        let bottoms: Vec<_> = sets.iter().filter(|&&(_, r)| r == 0).collect();
        if bottoms.len() != 1 || bottoms[0].0 != 0 {
            return Err(MatroidError::InvalidFlats(
                "expected the empty set as the unique rank-0 flat".into(),
            ));
        }
        if !sets.iter().any(|&(s, _)| s == full) {
            return Err(MatroidError::InvalidFlats("missing the full ground set".into()));
        }
        let lookup: HashMap<GroundSet, usize> = sets.iter().map(|&(s, r)| (s, r)).collect();
        for &(a, ra) in &sets {
            for &(b, rb) in &sets {
                if a < b {
                    if !lookup.contains_key(&(a & b)) {
                        return Err(MatroidError::InvalidFlats(format!(
                            "intersection of {} and {} is not a flat",
                            set_to_string(a, n),
                            set_to_string(b, n)
                        )));
                    }
                    if a & b == a && ra >= rb {
                        return Err(MatroidError::InvalidFlats(
                            "rank is not strictly monotone on containment".into(),
                        ));
                    }
                }
            }
        }
        for e in 0..n {
            if !sets.iter().any(|&(s, r)| r == 1 && s >> e & 1 == 1) {
                return Err(MatroidError::InvalidFlats(format!(
                    "element {} lies in no rank-1 flat",
                    e + 1
                )));
            }
        }
        let rank = lookup[&full];
        Self::validate(n, rank, Model::Flats { flats: sets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn full_set(&self) -> GroundSet {
        if self.n == 64 {
            !0
        } else {
            (1 << self.n) - 1
        }
    }

    /// Rank of an arbitrary subset.
    pub fn rank_of(&self, set: GroundSet) -> usize {
        match &self.model {
            Model::Uniform { r } => (set.count_ones() as usize).min(*r),
            Model::Graphic { vertices, edges } => graphic_rank(*vertices, edges, set),
            Model::Bases { bases } => bases
                .iter()
                .map(|b| (b & set).count_ones() as usize)
                .max()
                .unwrap_or(0),
            Model::Flats { flats } => flats
                .iter()
                .filter(|&&(f, _)| f & set == set)
                .map(|&(_, r)| r)
                .min()
                .expect("full set is always a flat"),
        }
    }

    /// Closure: the set of elements whose addition does not raise rank.
    pub fn closure(&self, set: GroundSet) -> GroundSet {
        if let Model::Flats { flats } = &self.model {
            // minimal flat containing the set
            return flats
                .iter()
                .filter(|&&(f, _)| f & set == set)
                .min_by_key(|&&(f, r)| (r, f))
                .expect("full set is always a flat")
                .0;
        }
        let r = self.rank_of(set);
        let mut out = set;
        for e in 0..self.n {
            if set >> e & 1 == 0 && self.rank_of(set | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    /// For a graphic matroid, the permutation of edges induced by a
    /// vertex permutation; `None` when an image edge is absent or the
    /// matroid is not graphic.
    pub fn edge_perm_from_vertex_perm(&self, vperm: &Perm) -> Option<Perm> {
        let Model::Graphic { vertices, edges } = &self.model else {
            return None;
        };
        if vperm.degree() != *vertices {
            return None;
        }
        let index: HashMap<(usize, usize), usize> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect();
        let mut images = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            let iu = vperm.apply(u - 1) + 1;
            let iv = vperm.apply(v - 1) + 1;
            images.push(*index.get(&(iu.min(iv), iu.max(iv)))?);
        }
        Perm::from_images(images).ok()
    }
}

fn graphic_rank(vertices: usize, edges: &[(usize, usize)], set: GroundSet) -> usize {
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut root = x;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = x;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let mut rank = 0;
    for (i, &(u, v)) in edges.iter().enumerate() {
        if set >> i & 1 == 1 {
            let ru = find(&mut parent, u - 1);
            let rv = find(&mut parent, v - 1);
            if ru != rv {
                parent[ru] = rv;
                rank += 1;
            }
        }
    }
    rank
}

/// A closed set with its rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Flat {
    pub set: GroundSet,
    pub rank: usize,
}

/// The graded lattice of flats, sorted by (rank, bitset); the order
/// relation is bitwise containment. Immutable once built.
#[derive(Debug, Clone)]
pub struct FlatLattice {
    n: usize,
    rank: usize,
    flats: Vec<Flat>,
    index: HashMap<GroundSet, usize>,
    by_rank: Vec<Vec<usize>>,
}

impl FlatLattice {
    /// Enumerate all flats by breadth-first closure of `flat + element`.
    pub fn build(m: &Matroid) -> FlatLattice {
        let n = m.n();
        let bottom = m.closure(0);
        debug_assert_eq!(bottom, 0, "loopless matroids close the empty set to itself");
        let mut by_rank: Vec<Vec<GroundSet>> = vec![vec![bottom]];
        let mut seen: HashMap<GroundSet, usize> = HashMap::new();
        seen.insert(bottom, 0);
        for r in 0..m.rank() {
            let mut next: Vec<GroundSet> = Vec::new();
            for &f in &by_rank[r] {
                for e in 0..n {
                    if f >> e & 1 == 0 {
                        let g = m.closure(f | 1 << e);
                        if !seen.contains_key(&g) {
                            seen.insert(g, r + 1);
                            next.push(g);
                        }
                    }
                }
            }
            next.sort_unstable();
            by_rank.push(next);
        }
        let mut flats = Vec::with_capacity(seen.len());
        for (r, level) in by_rank.iter().enumerate() {
            for &s in level {
                flats.push(Flat { set: s, rank: r });
            }
        }
        let index = flats.iter().enumerate().map(|(i, f)| (f.set, i)).collect();
        let by_rank_idx = by_rank
            .iter()
            .enumerate()
            .map(|(r, level)| {
                level
                    .iter()
                    .map(|s| {
                        flats
                            .iter()
                            .position(|f| f.set == *s && f.rank == r)
                            .expect("flat indexed during construction")
                    })
                    .collect()
            })
            .collect();
        FlatLattice {
            n,
            rank: m.rank(),
            flats,
            index,
            by_rank: by_rank_idx,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank of the matroid (top of the grading).
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, i: usize) -> Flat {
        self.flats[i]
    }

    pub fn index_of(&self, set: GroundSet) -> Option<usize> {
        self.index.get(&set).copied()
    }

    pub fn bottom(&self) -> usize {
        self.by_rank[0][0]
    }

    pub fn top(&self) -> usize {
        self.by_rank[self.rank][0]
    }

    /// Flat indices at a given rank, in bitset order.
    pub fn at_rank(&self, r: usize) -> &[usize] {
        &self.by_rank[r]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        let (a, b) = (self.flats[i].set, self.flats[j].set);
        a & b == a
    }

    /// Meet (intersection); in a lattice of flats this is always a flat.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let s = self.flats[i].set & self.flats[j].set;
        *self
            .index
            .get(&s)
            .expect("intersection of flats is a flat")
    }

    /// Select the flats with rank in `ranks` (a subset of `[r-1]`),
    /// keeping the implicit bottom and top.
    pub fn rank_selected(&self, ranks: &[usize]) -> Result<RankSelectedPoset<'_>, MatroidError> {
        let mut sorted: Vec<usize> = ranks.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &r in &sorted {
            if r == 0 || r >= self.rank {
                return Err(MatroidError::RankSelectionOutOfRange {
                    rank: r,
                    max: self.rank.saturating_sub(1),
                });
            }
        }
        let members = sorted
            .iter()
            .flat_map(|&r| self.by_rank[r].iter().copied())
            .collect();
        Ok(RankSelectedPoset {
            lattice: self,
            ranks: sorted,
            members,
        })
    }
}

/// A rank-selected subposet: the flats with rank in the selected set,
/// together with the implicit bottom and top.
#[derive(Debug, Clone)]
pub struct RankSelectedPoset<'a> {
    pub lattice: &'a FlatLattice,
    ranks: Vec<usize>,
    members: Vec<usize>,
}

impl<'a> RankSelectedPoset<'a> {
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Member flat indices (proper part), ordered by (rank, bitset).
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// All chains through every selected rank, bottom and top excluded.
    /// The empty rank selection yields one empty chain.
    pub fn maximal_chains(&self) -> Vec<Vec<usize>> {
        let mut chains: Vec<Vec<usize>> = vec![vec![]];
        for &r in &self.ranks {
            let mut next = Vec::new();
            for chain in &chains {
                for &f in self.lattice.at_rank(r) {
                    if chain
                        .last()
                        .map_or(true, |&prev| self.lattice.leq(prev, f))
                    {
                        let mut c = chain.clone();
                        c.push(f);
                        next.push(c);
                    }
                }
            }
            chains = next;
        }
        chains
    }
}

/// All subsets of `[a, b]` containing no two consecutive integers,
/// the empty set included, in a deterministic order.
pub fn stab(a: usize, b: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    if a > b {
        return out;
    }
    for x in a..=b {
        let mut with_x: Vec<Vec<usize>> = out
            .iter()
            .filter(|s| s.last().map_or(true, |&last| last + 1 < x))
            .map(|s| {
                let mut t = s.clone();
                t.push(x);
                t
            })
            .collect();
        out.append(&mut with_x);
    }
    out.sort();
    out
}

/// Membership test for `stab(a, b)`.
pub fn in_stab(set: &[usize], a: usize, b: usize) -> bool {
    set.iter().all(|&x| a <= x && x <= b)
        && set.windows(2).all(|w| w[0] + 1 < w[1])
}

/// JSON description of a matroid, matching the on-disk input format.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatroidSpec {
    Uniform { r: usize, n: usize },
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    Bases { n: usize, bases: Vec<Vec<usize>> },
    Flats { n: usize, flats: Vec<FlatSpec> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlatSpec {
    pub set: Vec<usize>,
    pub rank: usize,
}

impl MatroidSpec {
    pub fn build(&self) -> Result<Matroid, MatroidError> {
        match self {
            MatroidSpec::Uniform { r, n } => Matroid::uniform(*r, *n),
            MatroidSpec::Graphic { vertices, edges } => Matroid::graphic(*vertices, edges),
            MatroidSpec::Bases { n, bases } => Matroid::from_bases(*n, bases),
            MatroidSpec::Flats { n, flats } => {
                let pairs: Vec<(Vec<usize>, usize)> =
                    flats.iter().map(|f| (f.set.clone(), f.rank)).collect();
                Matroid::from_flats(*n, &pairs)
            }
        }
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rk{}:{:b}", self.rank, self.set)
    }
}
