//! Simplicial complexes on u32 vertex ids, stored by their facets in a
//! canonical form: each facet sorted ascending, the facet list maximalized
//! (no facet contains another) and sorted lexicographically.
//!
//! Two degenerate complexes are distinguished: the void complex (no faces at
//! all, facet list empty) and the empty complex `{∅}` (single empty facet).

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bounds::binomial;

pub type Vertex = u32;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("face budget exceeded: complex has more than {budget} faces")]
    FaceBudgetExceeded { budget: usize },
    #[error("too many facets for exact inclusion-exclusion: {0} (max 20)")]
    TooManyFacets(usize),
    #[error("operation undefined for the void complex")]
    VoidComplex,
    #[error("{0:?} is not a facet of this complex")]
    NotAFacet(Vec<Vertex>),
    #[error("unknown vertices: {0:?}")]
    UnknownVertices(Vec<Vertex>),
    #[error("invalid complex JSON: {0}")]
    BadJson(String),
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
#[error("collapse step {step} is invalid: {reason}")]
pub struct CollapseReplayError {
    pub step: usize,
    pub reason: String,
}

/// One collapse move: delete every face between `free_face` and `facet`
/// (inclusive). Valid only when `facet` is the unique facet containing
/// `free_face` and the containment is proper.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseStep {
    pub free_face: Vec<Vertex>,
    pub facet: Vec<Vertex>,
}

/// Witness that a facet is a leaf: either it is the only facet, or some
/// other facet (a joint) contains its intersection with every other facet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeafWitness {
    OnlyFacet,
    Joint(Vec<Vertex>),
}

/// Face counts `(f_0, ..., f_dim)`; empty for the void and empty complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    pub counts: Vec<BigUint>,
}

impl FVector {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.counts
                .iter()
                .map(|c| match u64::try_from(c.clone()) {
                    Ok(n) => serde_json::Value::from(n),
                    Err(_) => serde_json::Value::from(c.to_string()),
                })
                .collect(),
        )
    }
}

impl std::fmt::Display for FVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Sorted-slice subset test.
pub fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut i = 0;
    for &x in a {
        while i < b.len() && b[i] < x {
            i += 1;
        }
        if i == b.len() || b[i] != x {
            return false;
        }
        i += 1;
    }
    true
}

/// Sorted-slice intersection.
pub fn intersect(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Sorted-slice union.
pub fn union(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i == a.len() || b[j] < a[i] {
            out.push(b[j]);
            j += 1;
        } else {
            out.push(a[i]);
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// The void complex: no faces at all, not even the empty face.
    pub fn void() -> Self {
        SimplicialComplex {
            vertices: vec![],
            facets: vec![],
        }
    }

    /// The empty complex `{∅}`: the empty face is its only face.
    pub fn empty_complex() -> Self {
        SimplicialComplex {
            vertices: vec![],
            facets: vec![vec![]],
        }
    }

    /// Build from candidate facets: sorts, deduplicates, and drops candidates
    /// contained in others. An empty candidate list yields the void complex;
    /// a lone empty candidate yields `{∅}`.
    pub fn from_facets<I>(input: I) -> Self
    where
        I: IntoIterator<Item = Vec<Vertex>>,
    {
        let mut cleaned: Vec<Vec<Vertex>> = input
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        cleaned.sort();
        cleaned.dedup();
        let facets: Vec<Vec<Vertex>> = cleaned
            .iter()
            .filter(|f| !cleaned.iter().any(|g| g != *f && is_subset(f, g)))
            .cloned()
            .collect();
        let mut vertices: Vec<Vertex> = facets.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        SimplicialComplex { vertices, facets }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: Vec<Vertex>) -> Self {
        Self::from_facets(vec![vertices])
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    pub fn is_single_vertex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].len() == 1
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension: `None` for the void complex, `-1` for `{∅}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    /// Whether the (sorted or unsorted) vertex list is a face.
    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        if self.is_void() {
            return false;
        }
        self.facets.iter().any(|g| is_subset(&f, g))
    }

    /// All faces, including the empty face for non-void complexes, sorted by
    /// (cardinality, lex). Errors when more than `max_faces` faces exist.
    pub fn faces(&self, max_faces: usize) -> Result<Vec<Vec<Vertex>>, SimplicialError> {
        let mut set: BTreeSet<Vec<Vertex>> = BTreeSet::new();
        if self.is_void() {
            return Ok(vec![]);
        }
        set.insert(vec![]);
        for facet in &self.facets {
            let mut stack = vec![(0usize, Vec::new())];
            while let Some((i, cur)) = stack.pop() {
                if i == facet.len() {
                    if set.insert(cur) && set.len() > max_faces {
                        return Err(SimplicialError::FaceBudgetExceeded { budget: max_faces });
                    }
                    continue;
                }
                let mut with = cur.clone();
                with.push(facet[i]);
                stack.push((i + 1, cur));
                stack.push((i + 1, with));
            }
        }
        let mut out: Vec<Vec<Vertex>> = set.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Cheap upper bound on the number of faces (including the empty face).
    pub fn face_count_upper_bound(&self) -> BigUint {
        if self.is_void() {
            return BigUint::zero();
        }
        let mut total = BigUint::one();
        for f in &self.facets {
            total += BigUint::one() << f.len();
        }
        total
    }

    /// Exact number of faces (including the empty face) by inclusion-exclusion
    /// over nonempty facet subsets. Guarded to at most 20 facets.
    pub fn face_count(&self) -> Result<BigUint, SimplicialError> {
        if self.is_void() {
            return Ok(BigUint::zero());
        }
        let m = self.facets.len();
        if m > 20 {
            return Err(SimplicialError::TooManyFacets(m));
        }
        // signed sum of 2^{|intersection|} over nonempty facet subsets
        let mut acc = BigInt::zero();
        let mut stack: Vec<(usize, Vec<Vertex>, i8)> = (0..m)
            .map(|j| (j, self.facets[j].clone(), 1i8))
            .collect();
        while let Some((j, inter, sign)) = stack.pop() {
            let term = BigInt::from(BigUint::one() << inter.len());
            if sign > 0 {
                acc += term;
            } else {
                acc -= term;
            }
            for k in (j + 1)..m {
                // empty intersections still contribute: 2^0 counts the empty
                // face of every branch, so recurse unconditionally
                stack.push((k, intersect(&inter, &self.facets[k]), -sign));
            }
        }
        let (sign, mag) = acc.into_parts();
        assert!(
            sign != num_bigint::Sign::Minus,
            "inclusion-exclusion face count must be nonnegative"
        );
        Ok(mag)
    }

    /// Exact f-vector `(f_0, ..., f_dim)` by inclusion-exclusion over facet
    /// subsets (at most 20 facets). Empty for void and `{∅}`.
    pub fn f_vector(&self) -> Result<FVector, SimplicialError> {
        let d = match self.dim() {
            None => return Ok(FVector { counts: vec![] }),
            Some(-1) => return Ok(FVector { counts: vec![] }),
            Some(d) => d as usize,
        };
        let m = self.facets.len();
        if m > 20 {
            return Err(SimplicialError::TooManyFacets(m));
        }
        let mut acc = vec![BigInt::zero(); d + 1];
        let mut stack: Vec<(usize, Vec<Vertex>, i8)> = (0..m)
            .map(|j| (j, self.facets[j].clone(), 1i8))
            .collect();
        while let Some((j, inter, sign)) = stack.pop() {
            if inter.is_empty() {
                // C(0, t+1) = 0 for all t >= 0 and all deeper intersections
                // are empty too, so the whole branch contributes nothing
                continue;
            }
            for (t, slot) in acc.iter_mut().enumerate() {
                if t + 1 > inter.len() {
                    break;
                }
                let term = BigInt::from(binomial(inter.len() as u64, (t + 1) as u64));
                if sign > 0 {
                    *slot += term;
                } else {
                    *slot -= term;
                }
            }
            for k in (j + 1)..m {
                stack.push((k, intersect(&inter, &self.facets[k]), -sign));
            }
        }
        let counts = acc
            .into_iter()
            .map(|v| {
                let (sign, mag) = v.into_parts();
                assert!(
                    sign != num_bigint::Sign::Minus,
                    "face counts must be nonnegative"
                );
                mag
            })
            .collect();
        Ok(FVector { counts })
    }

    /// Euler characteristic (unreduced): sum of (-1)^t f_t.
    pub fn euler_characteristic(&self) -> Result<BigInt, SimplicialError> {
        let fv = self.f_vector()?;
        let mut chi = BigInt::zero();
        for (t, c) in fv.counts.iter().enumerate() {
            if t % 2 == 0 {
                chi += BigInt::from(c.clone());
            } else {
                chi -= BigInt::from(c.clone());
            }
        }
        Ok(chi)
    }

    /// The subcomplex induced on vertex set `w` (parent vertex ids are kept).
    /// Inducing on the empty set gives `{∅}` for any non-void complex.
    pub fn induced_subcomplex(&self, w: &[Vertex]) -> Result<SimplicialComplex, SimplicialError> {
        let mut wset: Vec<Vertex> = w.to_vec();
        wset.sort_unstable();
        wset.dedup();
        let unknown: Vec<Vertex> = wset
            .iter()
            .copied()
            .filter(|v| self.vertices.binary_search(v).is_err())
            .collect();
        if !unknown.is_empty() {
            return Err(SimplicialError::UnknownVertices(unknown));
        }
        if self.is_void() {
            return Ok(SimplicialComplex::void());
        }
        Ok(SimplicialComplex::from_facets(
            self.facets.iter().map(|f| intersect(f, &wset)),
        ))
    }

    /// 1-skeleton connectivity over the vertices actually present. A single
    /// vertex is connected; `{∅}` counts as (vacuously) connected; the void
    /// complex is an error.
    pub fn is_connected(&self) -> Result<bool, SimplicialError> {
        if self.is_void() {
            return Err(SimplicialError::VoidComplex);
        }
        if self.vertices.is_empty() {
            return Ok(true);
        }
        let index: BTreeMap<Vertex, usize> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for f in &self.facets {
            if let Some((&first, rest)) = f.split_first() {
                let a = find(&mut parent, index[&first]);
                for &v in rest {
                    let b = find(&mut parent, index[&v]);
                    parent[b] = a;
                    let _ = find(&mut parent, b);
                }
            }
        }
        let root = find(&mut parent, 0);
        Ok((0..self.vertices.len()).all(|i| find(&mut parent, i) == root))
    }

    fn facet_position(&self, facet: &[Vertex]) -> Result<usize, SimplicialError> {
        let mut f = facet.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets
            .iter()
            .position(|g| *g == f)
            .ok_or(SimplicialError::NotAFacet(f))
    }

    /// Leaf test for a facet `F`: succeeds with a witness when `F` is the
    /// only facet, or when some other facet `G` contains `F ∩ H` for every
    /// other facet `H`. Returns `None` when `F` is a facet but not a leaf.
    pub fn is_leaf(&self, facet: &[Vertex]) -> Result<Option<LeafWitness>, SimplicialError> {
        let pos = self.facet_position(facet)?;
        if self.facets.len() == 1 {
            return Ok(Some(LeafWitness::OnlyFacet));
        }
        let f = &self.facets[pos];
        let mut shared: Vec<Vertex> = Vec::new();
        for (j, h) in self.facets.iter().enumerate() {
            if j != pos {
                shared = union(&shared, &intersect(f, h));
            }
        }
        for (j, g) in self.facets.iter().enumerate() {
            if j != pos && is_subset(&shared, g) {
                return Ok(Some(LeafWitness::Joint(g.clone())));
            }
        }
        Ok(None)
    }

    /// Leaf test restricted to a sub-list of facet indices.
    fn is_leaf_among(&self, indices: &[usize], pos: usize) -> bool {
        if indices.len() == 1 {
            return true;
        }
        let f = &self.facets[pos];
        let mut shared: Vec<Vertex> = Vec::new();
        for &j in indices {
            if j != pos {
                shared = union(&shared, &intersect(f, &self.facets[j]));
            }
        }
        indices
            .iter()
            .any(|&j| j != pos && is_subset(&shared, &self.facets[j]))
    }

    /// A quasi-forest order `F_1, ..., F_m` (each `F_k` is a leaf of the
    /// complex generated by `F_1, ..., F_k`), or `None` when none exists.
    ///
    /// Strategy: greedily remove the lexicographically least current leaf;
    /// if the greedy pass dead-ends, fall back to an exhaustive memoized
    /// search over facet subsets (exact for up to 24 facets). Deterministic
    /// given the canonical facet order.
    pub fn quasi_forest_order(&self) -> Option<Vec<Vec<Vertex>>> {
        let m = self.facets.len();
        if m == 0 {
            return Some(vec![]);
        }
        if m == 1 {
            return Some(vec![self.facets[0].clone()]);
        }
        // greedy pass
        let mut remaining: Vec<usize> = (0..m).collect();
        let mut removed_rev: Vec<usize> = Vec::new();
        while remaining.len() > 1 {
            let Some(&leaf) = remaining
                .iter()
                .find(|&&i| self.is_leaf_among(&remaining, i))
            else {
                break;
            };
            remaining.retain(|&i| i != leaf);
            removed_rev.push(leaf);
        }
        if remaining.len() == 1 {
            removed_rev.push(remaining[0]);
            return Some(
                removed_rev
                    .into_iter()
                    .rev()
                    .map(|i| self.facets[i].clone())
                    .collect(),
            );
        }
        if m > 24 {
            return None;
        }
        // exhaustive fallback over bitmask states
        let mut dead: BTreeSet<u32> = BTreeSet::new();
        let full: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
        let mut order_rev: Vec<usize> = Vec::new();
        if self.search_order(full, &mut dead, &mut order_rev) {
            return Some(
                order_rev
                    .iter()
                    .rev()
                    .map(|&i| self.facets[i].clone())
                    .collect(),
            );
        }
        None
    }

    fn search_order(&self, mask: u32, dead: &mut BTreeSet<u32>, out: &mut Vec<usize>) -> bool {
        let indices: Vec<usize> = (0..self.facets.len())
            .filter(|&i| mask & (1 << i) != 0)
            .collect();
        if indices.len() == 1 {
            out.push(indices[0]);
            return true;
        }
        if dead.contains(&mask) {
            return false;
        }
        for &i in &indices {
            if self.is_leaf_among(&indices, i) {
                out.push(i);
                if self.search_order(mask & !(1 << i), dead, out) {
                    return true;
                }
                out.pop();
            }
        }
        dead.insert(mask);
        false
    }

    pub fn is_quasi_forest(&self) -> bool {
        self.quasi_forest_order().is_some()
    }

    /// A quasi-tree is a connected quasi-forest.
    pub fn is_quasi_tree(&self) -> bool {
        match self.is_connected() {
            Ok(c) => c && self.is_quasi_forest(),
            Err(_) => false,
        }
    }

    /// A sequence of collapse steps reducing the complex to a single vertex,
    /// or `None` when none is found. Connected quasi-forests always succeed
    /// (constructively, from a quasi-forest order); other complexes get a
    /// bounded backtracking search guarded by the Euler characteristic,
    /// which collapses preserve.
    pub fn collapse_sequence(&self) -> Option<Vec<CollapseStep>> {
        if self.is_void() || self.is_empty_complex() {
            return None;
        }
        if self.is_single_vertex() {
            return Some(vec![]);
        }
        if self.is_connected() == Ok(true) {
            if let Some(order) = self.quasi_forest_order() {
                return Some(self.collapse_from_order(&order));
            }
        }
        // bounded search for small complexes only
        if self.facets.len() > 12 {
            return None;
        }
        match self.euler_characteristic() {
            Ok(chi) if chi == BigInt::one() => {}
            _ => return None,
        }
        let mut budget: u64 = 50_000;
        self.collapse_search(&mut budget)
    }

    /// Constructive collapse along a quasi-forest order of a connected
    /// complex: peel each leaf's private vertices one at a time, then shrink
    /// the last simplex vertex by vertex.
    fn collapse_from_order(&self, order: &[Vec<Vertex>]) -> Vec<CollapseStep> {
        let mut steps = Vec::new();
        for k in (1..order.len()).rev() {
            let f = &order[k];
            let mut shared: Vec<Vertex> = Vec::new();
            for g in &order[..k] {
                shared = union(&shared, &intersect(f, g));
            }
            // private vertices exist because f is a facet, and shared is
            // nonempty because connected complexes have connected prefixes
            let mut current = f.clone();
            for &w in f {
                if shared.binary_search(&w).is_ok() {
                    continue;
                }
                steps.push(CollapseStep {
                    free_face: vec![w],
                    facet: current.clone(),
                });
                current.retain(|&v| v != w);
            }
        }
        let mut current = order[0].clone();
        while current.len() > 1 {
            let v = *current.last().expect("nonempty facet");
            steps.push(CollapseStep {
                free_face: vec![v],
                facet: current.clone(),
            });
            current.pop();
        }
        steps
    }

    fn collapse_search(&self, budget: &mut u64) -> Option<Vec<CollapseStep>> {
        if self.is_single_vertex() {
            return Some(vec![]);
        }
        let faces = self.faces(4096).ok()?;
        for sigma in faces.iter().filter(|s| !s.is_empty()) {
            let containing: Vec<&Vec<Vertex>> = self
                .facets
                .iter()
                .filter(|f| is_subset(sigma, f))
                .collect();
            if containing.len() != 1 || containing[0] == sigma {
                continue;
            }
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let facet = containing[0].clone();
            let next = self.apply_collapse(sigma, &facet);
            if let Some(mut rest) = next.collapse_search(budget) {
                let mut steps = vec![CollapseStep {
                    free_face: sigma.clone(),
                    facet,
                }];
                steps.append(&mut rest);
                return Some(steps);
            }
        }
        None
    }

    /// Remove the face interval `[sigma, facet]`, assuming validity.
    fn apply_collapse(&self, sigma: &[Vertex], facet: &[Vertex]) -> SimplicialComplex {
        let mut next: Vec<Vec<Vertex>> = self
            .facets
            .iter()
            .filter(|f| f.as_slice() != facet)
            .cloned()
            .collect();
        for &v in sigma {
            next.push(facet.iter().copied().filter(|&w| w != v).collect());
        }
        SimplicialComplex::from_facets(next)
    }

    /// Independently verify a collapse certificate, returning the final
    /// complex. Each step must name a nonempty face properly contained in
    /// exactly one facet, which must be the named one.
    pub fn replay_collapse(
        &self,
        steps: &[CollapseStep],
    ) -> Result<SimplicialComplex, CollapseReplayError> {
        let mut current = self.clone();
        for (i, step) in steps.iter().enumerate() {
            let err = |reason: &str| CollapseReplayError {
                step: i,
                reason: reason.to_string(),
            };
            let mut sigma = step.free_face.clone();
            sigma.sort_unstable();
            sigma.dedup();
            let mut facet = step.facet.clone();
            facet.sort_unstable();
            facet.dedup();
            if sigma.is_empty() {
                return Err(err("free face is empty"));
            }
            let containing: Vec<&Vec<Vertex>> = current
                .facets
                .iter()
                .filter(|f| is_subset(&sigma, f))
                .collect();
            if containing.is_empty() {
                return Err(err("free face is not a face of the current complex"));
            }
            if containing.len() > 1 {
                return Err(err("free face lies in more than one facet"));
            }
            if *containing[0] != facet {
                return Err(err("named facet is not the unique containing facet"));
            }
            if facet == sigma {
                return Err(err("free face must be properly contained in the facet"));
            }
            current = current.apply_collapse(&sigma, &facet);
        }
        Ok(current)
    }

    /// The nerve of the facet cover: vertex `i` of the nerve is facet `i`,
    /// and a set of facet indices spans a face exactly when the facets share
    /// a vertex. Homotopy equivalent to the complex (facet intersections are
    /// faces, hence contractible or empty), so reduced homology is preserved.
    pub fn nerve(&self) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void();
        }
        if self.is_empty_complex() {
            return SimplicialComplex::empty_complex();
        }
        let mut candidates: Vec<Vec<Vertex>> = Vec::with_capacity(self.vertices.len());
        for &v in &self.vertices {
            let t: Vec<Vertex> = self
                .facets
                .iter()
                .enumerate()
                .filter(|(_, f)| f.binary_search(&v).is_ok())
                .map(|(i, _)| i as Vertex)
                .collect();
            candidates.push(t);
        }
        SimplicialComplex::from_facets(candidates)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vertices": self.vertices,
            "facets": self.facets,
        })
    }

    /// Parse `{"vertices": [...], "facets": [[...]]}`. Listed vertices that
    /// appear in no facet become isolated points; facet vertices missing from
    /// an explicit vertex list are an error. The `vertices` field may be
    /// omitted.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, SimplicialError> {
        #[derive(Deserialize)]
        struct ComplexJson {
            vertices: Option<Vec<Vertex>>,
            facets: Vec<Vec<Vertex>>,
        }
        let parsed: ComplexJson = serde_json::from_value(value.clone())
            .map_err(|e| SimplicialError::BadJson(e.to_string()))?;
        let mut all = parsed.facets;
        if let Some(vs) = parsed.vertices {
            let listed: BTreeSet<Vertex> = vs.iter().copied().collect();
            let used: BTreeSet<Vertex> = all.iter().flatten().copied().collect();
            let missing: Vec<Vertex> = used.difference(&listed).copied().collect();
            if !missing.is_empty() {
                return Err(SimplicialError::UnknownVertices(missing));
            }
            for v in vs {
                if !used.contains(&v) {
                    all.push(vec![v]);
                }
            }
        }
        Ok(SimplicialComplex::from_facets(all))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec()))
    }

    #[test]
    fn canonicalization_drops_dominated_facets() {
        let c = cx(&[&[2, 1], &[2, 3], &[3]]);
        assert_eq!(c.facets(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(c.vertices(), &[1, 2, 3]);
        assert_eq!(c.dim(), Some(1));
        // duplicates collapse
        let d = cx(&[&[1, 2], &[2, 1]]);
        assert_eq!(d.facets().len(), 1);
    }

    #[test]
    fn void_and_empty_are_distinct() {
        let void = SimplicialComplex::void();
        let empty = SimplicialComplex::empty_complex();
        assert!(void.is_void() && !void.is_empty_complex());
        assert!(empty.is_empty_complex() && !empty.is_void());
        assert_eq!(void.dim(), None);
        assert_eq!(empty.dim(), Some(-1));
        assert_eq!(void.faces(10).unwrap(), Vec::<Vec<Vertex>>::new());
        assert_eq!(empty.faces(10).unwrap(), vec![Vec::<Vertex>::new()]);
        assert!(!void.contains_face(&[]));
        assert!(empty.contains_face(&[]));
        // an empty candidate facet is absorbed by real facets
        let c = cx(&[&[], &[5]]);
        assert_eq!(c.facets(), &[vec![5]]);
    }

    #[test]
    fn face_enumeration_matches_hand_count() {
        let path = cx(&[&[1, 2], &[2, 3]]);
        let faces = path.faces(100).unwrap();
        assert_eq!(
            faces,
            vec![
                vec![],
                vec![1],
                vec![2],
                vec![3],
                vec![1, 2],
                vec![2, 3]
            ]
        );
        assert_eq!(path.face_count().unwrap(), BigUint::from(6u32));
        assert!(matches!(
            path.faces(3),
            Err(SimplicialError::FaceBudgetExceeded { budget: 3 })
        ));
    }

    #[test]
    fn f_vector_by_inclusion_exclusion() {
        let path = cx(&[&[1, 2], &[2, 3]]);
        assert_eq!(
            path.f_vector().unwrap().counts,
            vec![BigUint::from(3u32), BigUint::from(2u32)]
        );
        let hollow = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(
            hollow.f_vector().unwrap().counts,
            vec![BigUint::from(3u32), BigUint::from(3u32)]
        );
        let solid = cx(&[&[1, 2, 3]]);
        assert_eq!(
            solid.f_vector().unwrap().counts,
            vec![
                BigUint::from(3u32),
                BigUint::from(3u32),
                BigUint::from(1u32)
            ]
        );
        assert_eq!(solid.euler_characteristic().unwrap(), BigInt::one());
        assert_eq!(hollow.euler_characteristic().unwrap(), BigInt::zero());
    }

    #[test]
    fn f_vector_agrees_with_enumeration_on_seeded_randoms() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xFACE5);
        for _ in 0..200 {
            let n_facets = rng.random_range(1..=5);
            let facets: Vec<Vec<Vertex>> = (0..n_facets)
                .map(|_| {
                    let size = rng.random_range(1..=5);
                    (0..size).map(|_| rng.random_range(0..8)).collect()
                })
                .collect();
            let c = SimplicialComplex::from_facets(facets);
            let fv = c.f_vector().unwrap();
            let faces = c.faces(100_000).unwrap();
            let dim = c.dim().unwrap();
            let mut counts = vec![0u64; (dim + 1) as usize];
            for f in &faces {
                if !f.is_empty() {
                    counts[f.len() - 1] += 1;
                }
            }
            let expect: Vec<BigUint> = counts.into_iter().map(BigUint::from).collect();
            assert_eq!(fv.counts, expect, "f-vector mismatch on {:?}", c.facets());
            // face_count includes the empty face
            assert_eq!(
                c.face_count().unwrap(),
                BigUint::from(faces.len() as u64)
            );
        }
    }

    #[test]
    fn induced_subcomplex_keeps_parent_ids() {
        let path = cx(&[&[1, 2], &[2, 3]]);
        let sub = path.induced_subcomplex(&[1, 3]).unwrap();
        assert_eq!(sub.facets(), &[vec![1], vec![3]]);
        let sub2 = path.induced_subcomplex(&[]).unwrap();
        assert!(sub2.is_empty_complex());
        let sub3 = path.induced_subcomplex(&[1, 2, 3]).unwrap();
        assert_eq!(sub3, path);
        assert!(matches!(
            path.induced_subcomplex(&[1, 9]),
            Err(SimplicialError::UnknownVertices(v)) if v == vec![9]
        ));
    }

    #[test]
    fn connectivity() {
        assert!(cx(&[&[1, 2], &[2, 3]]).is_connected().unwrap());
        assert!(!cx(&[&[1, 2], &[3, 4]]).is_connected().unwrap());
        assert!(cx(&[&[7]]).is_connected().unwrap());
        assert!(SimplicialComplex::empty_complex().is_connected().unwrap());
        assert_eq!(
            SimplicialComplex::void().is_connected(),
            Err(SimplicialError::VoidComplex)
        );
        // two triangles meeting at one vertex are connected
        assert!(cx(&[&[1, 2, 3], &[3, 4, 5]]).is_connected().unwrap());
    }

    #[test]
    fn leaf_witnesses() {
        let path = cx(&[&[1, 2], &[2, 3]]);
        assert_eq!(
            path.is_leaf(&[1, 2]).unwrap(),
            Some(LeafWitness::Joint(vec![2, 3]))
        );
        let hollow = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        for f in hollow.facets() {
            assert_eq!(hollow.is_leaf(f).unwrap(), None, "cycle has no leaf");
        }
        let lone = cx(&[&[1, 2, 3]]);
        assert_eq!(
            lone.is_leaf(&[1, 2, 3]).unwrap(),
            Some(LeafWitness::OnlyFacet)
        );
        assert!(matches!(
            path.is_leaf(&[1, 3]),
            Err(SimplicialError::NotAFacet(_))
        ));
    }

    #[test]
    fn quasi_forest_orders() {
        let path = cx(&[&[1, 2], &[2, 3], &[3, 4]]);
        let order = path.quasi_forest_order().expect("paths are quasi-trees");
        assert_eq!(order.len(), 3);
        // each prefix has its last facet as a leaf
        for k in 0..order.len() {
            let prefix = SimplicialComplex::from_facets(order[..=k].to_vec());
            assert!(prefix.is_leaf(&order[k]).unwrap().is_some());
        }
        assert!(path.is_quasi_tree());

        let hollow = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(hollow.quasi_forest_order(), None);
        assert!(!hollow.is_quasi_tree());

        // disconnected forest: order exists, but not a quasi-tree
        let forest = cx(&[&[1, 2], &[3, 4]]);
        assert!(forest.is_quasi_forest());
        assert!(!forest.is_quasi_tree());

        // two triangles glued along an edge
        let glued = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        assert!(glued.is_quasi_tree());
    }

    #[test]
    fn collapse_of_simplex_and_path() {
        let solid = cx(&[&[1, 2, 3]]);
        let steps = solid.collapse_sequence().expect("simplices collapse");
        let end = solid.replay_collapse(&steps).unwrap();
        assert!(end.is_single_vertex(), "replay must end at a point");

        let path = cx(&[&[1, 2], &[2, 3], &[3, 4]]);
        let steps = path.collapse_sequence().expect("trees collapse");
        assert!(path.replay_collapse(&steps).unwrap().is_single_vertex());

        let point = cx(&[&[9]]);
        assert_eq!(point.collapse_sequence(), Some(vec![]));
    }

    #[test]
    fn hollow_triangle_does_not_collapse() {
        let hollow = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(
            hollow.collapse_sequence(),
            None,
            "Euler characteristic 0 rules out collapse to a point"
        );
        assert_eq!(SimplicialComplex::void().collapse_sequence(), None);
        assert_eq!(
            SimplicialComplex::empty_complex().collapse_sequence(),
            None
        );
    }

    #[test]
    fn replay_rejects_bogus_certificates() {
        let solid = cx(&[&[1, 2, 3]]);
        // not a face
        let bad = vec![CollapseStep {
            free_face: vec![9],
            facet: vec![1, 2, 3],
        }];
        assert!(solid.replay_collapse(&bad).is_err());
        // face in two facets is not free
        let glued = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let bad = vec![CollapseStep {
            free_face: vec![2, 3],
            facet: vec![1, 2, 3],
        }];
        assert!(glued.replay_collapse(&bad).is_err());
        // sigma == facet is not a proper containment
        let bad = vec![CollapseStep {
            free_face: vec![1, 2, 3],
            facet: vec![1, 2, 3],
        }];
        assert!(solid.replay_collapse(&bad).is_err());
        // wrong named facet
        let bad = vec![CollapseStep {
            free_face: vec![1],
            facet: vec![2, 3],
        }];
        assert!(solid.replay_collapse(&bad).is_err());
    }

    #[test]
    fn nerve_shapes() {
        // path: two facets sharing a vertex -> nerve is an edge
        let path = cx(&[&[1, 2], &[2, 3]]);
        assert_eq!(path.nerve().facets(), &[vec![0, 1]]);
        // hollow triangle: pairwise meets, no triple meet -> nerve is hollow
        let hollow = cx(&[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(
            hollow.nerve().facets(),
            &[vec![0, 1], vec![0, 2], vec![1, 2]]
        );
        // star: all facets meet at the center -> nerve is a simplex
        let star = cx(&[&[0, 1], &[0, 2], &[0, 3]]);
        assert_eq!(star.nerve().facets(), &[vec![0, 1, 2]]);
        // disjoint: nerve disconnected
        let dis = cx(&[&[1, 2], &[3, 4]]);
        assert_eq!(dis.nerve().facets(), &[vec![0], vec![1]]);
    }

    #[test]
    fn json_round_trip() {
        let c = cx(&[&[1, 2], &[2, 3]]);
        let back = SimplicialComplex::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
        // isolated listed vertices become points
        let v = SimplicialComplex::from_json(
            &serde_json::json!({"vertices": [1, 2, 9], "facets": [[1, 2]]}),
        )
        .unwrap();
        assert_eq!(v.facets(), &[vec![1, 2], vec![9]]);
        // facet vertices missing from the list are rejected
        assert!(SimplicialComplex::from_json(
            &serde_json::json!({"vertices": [1], "facets": [[1, 2]]}),
        )
        .is_err());
        assert!(SimplicialComplex::from_json(&serde_json::json!({"facets": "nope"})).is_err());
    }

    #[test]
    fn set_helpers() {
        assert!(is_subset(&[1, 3], &[1, 2, 3]));
        assert!(!is_subset(&[1, 4], &[1, 2, 3]));
        assert!(is_subset(&[], &[1]));
        assert_eq!(intersect(&[1, 2, 4], &[2, 3, 4]), vec![2, 4]);
        assert_eq!(union(&[1, 4], &[2, 4]), vec![1, 2, 4]);
    }
}
