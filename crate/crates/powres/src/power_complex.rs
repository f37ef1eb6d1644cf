//! The support complexes for powers of square-free monomial ideals: the
//! parameter-only complex `L^r_q` on all degree-r lattice points in q
//! coordinates, and its trimmed form `L^r(I)` for a concrete ideal, whose
//! vertices are the minimal generators of `I^r`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::One;

use crate::bounds;
use crate::monomial::{Exp, ExponentPoint, Monomial, MonomialError, MonomialIdeal};
use crate::resolution::{LabeledComplex, ResolutionError};
use crate::simplicial::{SimplicialComplex, SimplicialError, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum PowerComplexError {
    #[error("r must be at least 1")]
    RZero,
    #[error("q must be at least 1")]
    QZero,
    #[error("complex too large: {points} lattice points (limit {max})")]
    TooLarge { points: BigUint, max: u64 },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// All lattice points with nonnegative coordinates summing to `r` in `q`
/// coordinates, in descending lexicographic order (so `(r, 0, ..., 0)` is
/// first). The position in this list is the canonical vertex id.
pub fn enumerate_points(r: u64, q: u64) -> Vec<ExponentPoint> {
    fn go(rest: u64, slots: u64, prefix: &mut Vec<Exp>, out: &mut Vec<ExponentPoint>) {
        if slots == 1 {
            prefix.push(Exp::from(rest));
            out.push(ExponentPoint::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for c in (0..=rest).rev() {
            prefix.push(Exp::from(c));
            go(rest - c, slots - 1, prefix, out);
            prefix.pop();
        }
    }
    if q == 0 {
        return if r == 0 {
            vec![ExponentPoint::new(vec![])]
        } else {
            vec![]
        };
    }
    let mut out = Vec::new();
    go(r, q, &mut Vec::new(), &mut out);
    out
}

/// The complex `L^r_q` on the degree-r lattice points, generated by the
/// first-kind facets `F_i = B ∪ {a : s+1 <= a_i <= r-1}` and second-kind
/// facets `G_i = {(r-1) e_i + e_j : j}`, where `B` is the set of points with
/// all coordinates at most `s = ceil(r/2)`.
#[derive(Debug, Clone)]
pub struct LrqComplex {
    pub r: u64,
    pub q: u64,
    pub s: u64,
    pub points: Vec<ExponentPoint>,
    /// Vertex ids of the base set `B` (all coordinates at most s).
    pub base: Vec<Vertex>,
    /// Vertex ids of each first-kind set `F_i`.
    pub first_kind: Vec<Vec<Vertex>>,
    /// Vertex ids of each second-kind set `G_i`.
    pub second_kind: Vec<Vec<Vertex>>,
    pub complex: SimplicialComplex,
    index: BTreeMap<ExponentPoint, Vertex>,
}

const MAX_POINTS: u64 = 1_000_000;

/// Build `L^r_q`. The facets are always generated from all `F_i` and `G_i`
/// candidates; maximalization reproduces the small-parameter special cases
/// (`<B, G_i>` for r in {2,3}, `<G_1, G_2>` for r = q = 2, the full simplex
/// for r = 1 or q = 1) automatically.
pub fn build_lrq(r: u64, q: u64) -> Result<LrqComplex, PowerComplexError> {
    if r == 0 {
        return Err(PowerComplexError::RZero);
    }
    if q == 0 {
        return Err(PowerComplexError::QZero);
    }
    let count = bounds::n_points(r, q);
    if count > BigUint::from(MAX_POINTS) {
        return Err(PowerComplexError::TooLarge {
            points: count,
            max: MAX_POINTS,
        });
    }
    let points = enumerate_points(r, q);
    let index: BTreeMap<ExponentPoint, Vertex> = points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as Vertex))
        .collect();
    let s = bounds::s_value(r);
    let s_big = Exp::from(s);
    let lo = Exp::from(s + 1);
    let hi = Exp::from(r - 1);
    let base: Vec<Vertex> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| p.coords().iter().all(|c| *c <= s_big))
        .map(|(i, _)| i as Vertex)
        .collect();
    let mut first_kind = Vec::with_capacity(q as usize);
    let mut second_kind = Vec::with_capacity(q as usize);
    for i in 0..q as usize {
        let mut f = base.clone();
        if lo <= hi {
            for (id, p) in points.iter().enumerate() {
                let a = p.coord(i);
                if *a >= lo && *a <= hi {
                    f.push(id as Vertex);
                }
            }
        }
        f.sort_unstable();
        f.dedup();
        first_kind.push(f);
        let mut g: Vec<Vertex> = (0..q as usize)
            .map(|j| {
                let mut c = vec![Exp::from(0u32); q as usize];
                c[i] = Exp::from(r - 1);
                c[j] += Exp::one();
                let point = ExponentPoint::new(c);
                *index.get(&point).expect("second-kind points have degree r")
            })
            .collect();
        g.sort_unstable();
        g.dedup();
        second_kind.push(g);
    }
    let mut candidates: Vec<Vec<Vertex>> = Vec::with_capacity(2 * q as usize);
    candidates.extend(first_kind.iter().cloned());
    candidates.extend(second_kind.iter().cloned());
    let complex = SimplicialComplex::from_facets(candidates);
    Ok(LrqComplex {
        r,
        q,
        s,
        points,
        base,
        first_kind,
        second_kind,
        complex,
        index,
    })
}

impl LrqComplex {
    pub fn vertex_of(&self, point: &ExponentPoint) -> Option<Vertex> {
        self.index.get(point).copied()
    }

    pub fn point_of(&self, v: Vertex) -> &ExponentPoint {
        &self.points[v as usize]
    }

    /// The facet list predicted by the parameter case analysis:
    /// the full simplex for r = 1 or q = 1; `<G_1, G_2>` for r = q = 2;
    /// `<B, G_1, ..., G_q>` for r in {2, 3} otherwise; all `F_i` and `G_i`
    /// for r > 3.
    pub fn facet_case_analysis(&self) -> Vec<Vec<Vertex>> {
        let all: Vec<Vertex> = (0..self.points.len() as Vertex).collect();
        let sets: Vec<Vec<Vertex>> = if self.r == 1 || self.q == 1 {
            vec![all]
        } else if self.r == 2 && self.q == 2 {
            self.second_kind.clone()
        } else if self.r == 2 || self.r == 3 {
            let mut v = vec![self.base.clone()];
            v.extend(self.second_kind.iter().cloned());
            v
        } else {
            let mut v = self.first_kind.clone();
            v.extend(self.second_kind.iter().cloned());
            v
        };
        SimplicialComplex::from_facets(sets).facets().to_vec()
    }

    /// An explicit quasi-forest order on the facets: first-kind facets (or
    /// the base simplex) first, second-kind facets last. Every prefix has
    /// its last facet as a leaf; tests validate this via the leaf predicate.
    pub fn leaf_order(&self) -> Vec<Vec<Vertex>> {
        let mut order: Vec<Vec<Vertex>> = if self.r == 1 || self.q == 1 {
            vec![(0..self.points.len() as Vertex).collect()]
        } else if self.r == 2 && self.q == 2 {
            self.second_kind.clone()
        } else if self.r == 2 || self.r == 3 {
            let mut v = vec![self.base.clone()];
            v.extend(self.second_kind.iter().cloned());
            v
        } else {
            let mut v = self.first_kind.clone();
            v.extend(self.second_kind.iter().cloned());
            v
        };
        for f in &mut order {
            f.sort_unstable();
        }
        order
    }

    /// Label every vertex by its power product in the given ideal (which
    /// must have exactly q generators). Labels may repeat; `L^r(I)` is the
    /// trimmed complex with distinct labels.
    pub fn labeled_by(&self, ideal: &MonomialIdeal) -> Result<LabeledComplex, PowerComplexError> {
        let mut labels = BTreeMap::new();
        for (id, p) in self.points.iter().enumerate() {
            labels.insert(id as Vertex, ideal.power_product(p)?);
        }
        Ok(LabeledComplex::new(
            ideal.vars().clone(),
            self.complex.clone(),
            labels,
        )?)
    }
}

/// How to choose the class representative among eligible points (points in
/// the base set B when the class meets B, otherwise the whole class).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RepresentativePolicy {
    /// Minimize the maximum coordinate, tie-break by earliest position in
    /// the canonical enumeration. Default; reproduces the reference vertex
    /// sets.
    #[default]
    Balanced,
    /// Earliest eligible point in the canonical enumeration.
    First,
    /// Latest eligible point in the canonical enumeration.
    Last,
}

impl RepresentativePolicy {
    pub fn parse(s: &str) -> Option<Self> {
        match s.to_ascii_lowercase().as_str() {
            "balanced" => Some(RepresentativePolicy::Balanced),
            "first" => Some(RepresentativePolicy::First),
            "last" => Some(RepresentativePolicy::Last),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            RepresentativePolicy::Balanced => "balanced",
            RepresentativePolicy::First => "first",
            RepresentativePolicy::Last => "last",
        }
    }
}

/// The partition of the `L^r_q` vertices by equal power products, with a
/// chosen representative per class and the survivors of divisibility
/// trimming. Survivor labels are exactly the minimal generators of `I^r`.
#[derive(Debug, Clone)]
pub struct EquivalenceClasses {
    /// Classes as sorted vertex-id lists, ordered by smallest member.
    pub classes: Vec<Vec<Vertex>>,
    /// Chosen representative of each class (aligned with `classes`).
    pub representatives: Vec<Vertex>,
    /// The common power product of each class (aligned with `classes`).
    pub monomials: Vec<Monomial>,
    /// Representatives whose monomial is not strictly divisible by another
    /// class monomial, sorted ascending.
    pub survivors: Vec<Vertex>,
}

/// Group the degree-r points by their power products in `I`, choose
/// representatives by the policy, and trim representatives whose monomial
/// is divisible by another class monomial. Requires `I` square-free with a
/// minimal generating set.
pub fn equivalence_classes(
    ideal: &MonomialIdeal,
    r: u64,
    policy: RepresentativePolicy,
) -> Result<EquivalenceClasses, PowerComplexError> {
    if r == 0 {
        return Err(PowerComplexError::RZero);
    }
    ideal.require_square_free_minimal()?;
    let q = ideal.n_gens() as u64;
    let count = bounds::n_points(r, q);
    if count > BigUint::from(MAX_POINTS) {
        return Err(PowerComplexError::TooLarge {
            points: count,
            max: MAX_POINTS,
        });
    }
    let points = enumerate_points(r, q);
    let s = Exp::from(bounds::s_value(r));
    let mut groups: BTreeMap<Monomial, Vec<Vertex>> = BTreeMap::new();
    for (id, p) in points.iter().enumerate() {
        groups
            .entry(ideal.power_product(p)?)
            .or_default()
            .push(id as Vertex);
    }
    let mut classes: Vec<(Monomial, Vec<Vertex>)> = groups.into_iter().collect();
    classes.sort_by_key(|(_, members)| members[0]);
    let mut representatives = Vec::with_capacity(classes.len());
    for (_, members) in &classes {
        let in_base: Vec<Vertex> = members
            .iter()
            .copied()
            .filter(|&v| points[v as usize].coords().iter().all(|c| *c <= s))
            .collect();
        let eligible: &[Vertex] = if in_base.is_empty() { members } else { &in_base };
        let rep = match policy {
            RepresentativePolicy::First => eligible[0],
            RepresentativePolicy::Last => *eligible.last().expect("classes are nonempty"),
            RepresentativePolicy::Balanced => eligible
                .iter()
                .copied()
                .min_by_key(|&v| (points[v as usize].max_coord(), v))
                .expect("classes are nonempty"),
        };
        representatives.push(rep);
    }
    let monomials: Vec<Monomial> = classes.iter().map(|(m, _)| m.clone()).collect();
    let mut survivors = Vec::new();
    for (i, rep) in representatives.iter().enumerate() {
        let dominated = monomials
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && other.divides(&monomials[i]).unwrap_or(false));
        if !dominated {
            survivors.push(*rep);
        }
    }
    survivors.sort_unstable();
    Ok(EquivalenceClasses {
        classes: classes.into_iter().map(|(_, members)| members).collect(),
        representatives,
        monomials,
        survivors,
    })
}

/// `L^r(I)`: the subcomplex of `L^r_q` induced on the surviving
/// representatives, labeled by the minimal generators of `I^r`.
#[derive(Debug, Clone)]
pub struct LriComplex {
    pub lrq: LrqComplex,
    pub classes: EquivalenceClasses,
    pub policy: RepresentativePolicy,
    pub complex: SimplicialComplex,
    pub labels: BTreeMap<Vertex, Monomial>,
    pub vars: crate::monomial::VariableSet,
}

impl LriComplex {
    pub fn labeled(&self) -> Result<LabeledComplex, ResolutionError> {
        LabeledComplex::new(self.vars.clone(), self.complex.clone(), self.labels.clone())
    }
}

pub fn build_lri(
    ideal: &MonomialIdeal,
    r: u64,
    policy: RepresentativePolicy,
) -> Result<LriComplex, PowerComplexError> {
    let classes = equivalence_classes(ideal, r, policy)?;
    let lrq = build_lrq(r, ideal.n_gens() as u64)?;
    let complex = lrq.complex.induced_subcomplex(&classes.survivors)?;
    let mut labels = BTreeMap::new();
    for (i, rep) in classes.representatives.iter().enumerate() {
        if classes.survivors.binary_search(rep).is_ok() {
            labels.insert(*rep, classes.monomials[i].clone());
        }
    }
    Ok(LriComplex {
        lrq,
        classes,
        policy,
        complex,
        labels,
        vars: ideal.vars().clone(),
    })
}

/// The minimal generating set of `I^r` (the survivor labels), in canonical
/// vertex order.
pub fn minimal_power_generators(
    ideal: &MonomialIdeal,
    r: u64,
) -> Result<Vec<Monomial>, PowerComplexError> {
    if r == 0 {
        return Err(PowerComplexError::RZero);
    }
    if r == 1 {
        // the ideal need not be square-free here; just minimalize
        return Ok(crate::monomial::minimalize(ideal.gens()));
    }
    let q = ideal.n_gens() as u64;
    let count = bounds::n_points(r, q);
    if count > BigUint::from(MAX_POINTS) {
        return Err(PowerComplexError::TooLarge {
            points: count,
            max: MAX_POINTS,
        });
    }
    let products: Vec<Monomial> = enumerate_points(r, q)
        .iter()
        .map(|p| ideal.power_product(p))
        .collect::<Result<_, _>>()?;
    Ok(crate::monomial::minimalize(&products))
}

/// Certifies that trimming never removes the scaled unit points `r e_i`,
/// and that for q >= 2 each coordinate keeps at least one mixed point
/// `(r-1) e_i + e_j` with `j != i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrredundancyReport {
    pub ok: bool,
    /// Generator indices whose scaled unit point was trimmed (must be empty).
    pub missing_units: Vec<usize>,
    /// Generator indices with no surviving mixed point (must be empty
    /// when q >= 2).
    pub missing_mixed: Vec<usize>,
}

pub fn verify_irredundant_vertices(
    ideal: &MonomialIdeal,
    r: u64,
    policy: RepresentativePolicy,
) -> Result<IrredundancyReport, PowerComplexError> {
    let lri = build_lri(ideal, r, policy)?;
    let q = ideal.n_gens();
    let mut missing_units = Vec::new();
    let mut missing_mixed = Vec::new();
    for i in 0..q {
        let unit = ExponentPoint::scaled_unit(q, i, r);
        let v = lri.lrq.vertex_of(&unit).expect("unit point has degree r");
        if lri.classes.survivors.binary_search(&v).is_err() {
            missing_units.push(i);
        }
        if q >= 2 {
            let mut found = false;
            for j in 0..q {
                if j == i {
                    continue;
                }
                let mut coords = vec![Exp::from(0u32); q];
                coords[i] = Exp::from(r - 1);
                coords[j] += Exp::one();
                let p = ExponentPoint::new(coords);
                let v = lri.lrq.vertex_of(&p).expect("mixed point has degree r");
                if lri.classes.survivors.binary_search(&v).is_ok() {
                    found = true;
                    break;
                }
            }
            if !found {
                missing_mixed.push(i);
            }
        }
    }
    Ok(IrredundancyReport {
        ok: missing_units.is_empty() && missing_mixed.is_empty(),
        missing_units,
        missing_mixed,
    })
}

/// The Taylor complex: the full simplex on the given monomials (one vertex
/// per monomial, in input order). The list may be non-minimal.
pub fn taylor_complex(
    vars: &crate::monomial::VariableSet,
    gens: &[Monomial],
) -> Result<LabeledComplex, PowerComplexError> {
    if gens.is_empty() {
        return Err(PowerComplexError::Monomial(MonomialError::EmptyIdeal));
    }
    let vertices: Vec<Vertex> = (0..gens.len() as Vertex).collect();
    let complex = SimplicialComplex::simplex(vertices);
    let labels: BTreeMap<Vertex, Monomial> = gens
        .iter()
        .enumerate()
        .map(|(i, m)| (i as Vertex, m.clone()))
        .collect();
    Ok(LabeledComplex::new(vars.clone(), complex, labels)?)
}
