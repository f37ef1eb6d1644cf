//! Labeled simplicial complexes and the machinery that turns them into free
//! resolutions: the acyclicity and connectivity support criteria over the
//! lcm lattice, minimality of the supported resolution, homogenization into
//! chain complexes of monomial matrices, minimization by unit cancellation,
//! and multigraded Betti numbers computed from homology strands.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;

use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::homology::{homology_of_faces, homology_via_reductions, HomologyError};
use crate::monomial::{Monomial, MonomialError, MonomialIdeal, VariableSet};
use crate::simplicial::{SimplicialComplex, SimplicialError, Vertex};

#[derive(Debug, thiserror::Error)]
pub enum ResolutionError {
    #[error("vertex {0} has no label")]
    MissingLabel(Vertex),
    #[error("label for vertex {0} is over a different variable count")]
    LabelVars(Vertex),
    #[error("complex is not a quasi-tree, so the connectivity criterion does not apply")]
    NotQuasiTree,
    #[error("a generator equal to 1 admits no multigraded strand decomposition")]
    UnitGenerator,
    #[error("lcm lattice too large: more than {max} elements")]
    LatticeTooLarge { max: usize },
    #[error("multidegree {multidegree} has {divisors} divisor generators (limit {max})")]
    StrandTooWide {
        multidegree: String,
        divisors: usize,
        max: usize,
    },
    #[error("strand at {multidegree} exceeds {max} faces")]
    StrandTooLarge { multidegree: String, max: usize },
    #[error("power enumeration needs {points} lattice points (limit {max})")]
    PowerTooLarge { points: BigUint, max: u64 },
    #[error("boundary maps fail to compose to zero at level {level}, column {col}")]
    ComposeNonzero { level: usize, col: u32 },
    #[error("cancellation produced an entry whose multidegrees do not divide")]
    InconsistentEntry,
    #[error(transparent)]
    Field(#[from] crate::field::FieldError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Simplicial(#[from] SimplicialError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

pub const DEFAULT_MAX_FACES: usize = 1 << 16;
const MAX_LATTICE: usize = 200_000;
const MAX_STRAND_DIVISORS: usize = 24;
const MAX_STRAND_FACES: usize = 1 << 20;

/// A simplicial complex with a monomial label on every vertex. Faces are
/// labeled by the lcm of their vertex labels (the empty face by 1).
#[derive(Debug, Clone)]
pub struct LabeledComplex {
    vars: VariableSet,
    complex: SimplicialComplex,
    labels: BTreeMap<Vertex, Monomial>,
}

impl LabeledComplex {
    pub fn new(
        vars: VariableSet,
        complex: SimplicialComplex,
        labels: BTreeMap<Vertex, Monomial>,
    ) -> Result<Self, ResolutionError> {
        let mut kept = BTreeMap::new();
        for &v in complex.vertices() {
            let m = labels.get(&v).ok_or(ResolutionError::MissingLabel(v))?;
            if m.n_vars() != vars.len() {
                return Err(ResolutionError::LabelVars(v));
            }
            kept.insert(v, m.clone());
        }
        Ok(LabeledComplex {
            vars,
            complex,
            labels: kept,
        })
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, Monomial> {
        &self.labels
    }

    pub fn label(&self, v: Vertex) -> Result<&Monomial, ResolutionError> {
        self.labels.get(&v).ok_or(ResolutionError::MissingLabel(v))
    }

    /// The lcm of the vertex labels of a face; the empty face labels as 1.
    pub fn face_label(&self, face: &[Vertex]) -> Result<Monomial, ResolutionError> {
        let mut acc = Monomial::one(self.vars.len());
        for &v in face {
            acc = acc.lcm(self.label(v)?)?;
        }
        Ok(acc)
    }

    /// Vertices whose label divides `m`, ascending.
    pub fn vertices_dividing(&self, m: &Monomial) -> Result<Vec<Vertex>, ResolutionError> {
        let mut out = Vec::new();
        for (&v, label) in &self.labels {
            if label.divides(m)? {
                out.push(v);
            }
        }
        Ok(out)
    }
}

/// Closure of a monomial list under pairwise lcm (the lcm lattice of a
/// resolution support, without the bottom element 1), sorted.
pub fn lcm_closure(gens: &[Monomial]) -> Result<Vec<Monomial>, ResolutionError> {
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut work: Vec<Monomial> = gens.to_vec();
    while let Some(m) = work.pop() {
        if seen.contains(&m) {
            continue;
        }
        if seen.len() >= MAX_LATTICE {
            return Err(ResolutionError::LatticeTooLarge { max: MAX_LATTICE });
        }
        for g in gens {
            let l = m.lcm(g)?;
            if !seen.contains(&l) {
                work.push(l);
            }
        }
        seen.insert(m);
    }
    Ok(seen.into_iter().collect())
}

/// The lcm lattice of a labeled complex: all lcms of nonempty sets of
/// vertex labels.
pub fn lcm_lattice(labeled: &LabeledComplex) -> Result<Vec<Monomial>, ResolutionError> {
    let labels: Vec<Monomial> = labeled
        .labels
        .values()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if labels.is_empty() {
        return Ok(vec![]);
    }
    lcm_closure(&labels)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SupportCriterion {
    /// Every lower interval of the lcm lattice induces an acyclic
    /// subcomplex over the chosen field.
    AcyclicBelow,
    /// The complex is a quasi-tree and every lower interval induces an
    /// empty or connected subcomplex.
    ConnectedBelow,
}

impl SupportCriterion {
    pub fn label(&self) -> &'static str {
        match self {
            SupportCriterion::AcyclicBelow => "acyclic-below",
            SupportCriterion::ConnectedBelow => "connected-below",
        }
    }
}

#[derive(Debug, Clone)]
pub enum SupportFailure {
    Homology {
        multidegree: Monomial,
        degree: i64,
        rank: u64,
    },
    Disconnected {
        multidegree: Monomial,
    },
}

/// Outcome of a resolution-support check: `ok` means the labeled complex
/// supports a free resolution of the ideal generated by its labels.
#[derive(Debug, Clone)]
pub struct SupportReport {
    pub criterion: SupportCriterion,
    pub field: Option<FieldSpec>,
    pub lattice_size: usize,
    pub failures: Vec<SupportFailure>,
    pub ok: bool,
}

impl SupportReport {
    pub fn describe(&self, vars: &VariableSet) -> String {
        if self.ok {
            return format!(
                "{}: supports a resolution ({} lattice multidegrees checked)",
                self.criterion.label(),
                self.lattice_size
            );
        }
        let first = match &self.failures[0] {
            SupportFailure::Homology {
                multidegree,
                degree,
                rank,
            } => format!(
                "subcomplex below {} has homology rank {} in degree {}",
                multidegree.render(vars),
                rank,
                degree
            ),
            SupportFailure::Disconnected { multidegree } => format!(
                "subcomplex below {} is disconnected",
                multidegree.render(vars)
            ),
        };
        format!(
            "{}: fails at {} of {} multidegrees (first: {})",
            self.criterion.label(),
            self.failures.len(),
            self.lattice_size,
            first
        )
    }
}

/// Homological support criterion: for every multidegree M in the lcm
/// lattice, the subcomplex induced on vertices whose label divides M must
/// have vanishing reduced homology over the field.
pub fn supports_resolution_bps(
    labeled: &LabeledComplex,
    field: FieldSpec,
    max_faces: usize,
) -> Result<SupportReport, ResolutionError> {
    let lattice = lcm_lattice(labeled)?;
    let mut failures = Vec::new();
    // distinct multidegrees often induce the same vertex set, so cache the
    // homology verdict per vertex set
    let mut cache: BTreeMap<Vec<Vertex>, Option<(i64, u64)>> = BTreeMap::new();
    for m in &lattice {
        let verts = labeled.vertices_dividing(m)?;
        let verdict = match cache.get(&verts) {
            Some(v) => *v,
            None => {
                let sub = labeled.complex.induced_subcomplex(&verts)?;
                let profile = homology_via_reductions(&sub, field, max_faces)?;
                let v = profile.first_nonzero();
                cache.insert(verts, v);
                v
            }
        };
        if let Some((degree, rank)) = verdict {
            failures.push(SupportFailure::Homology {
                multidegree: m.clone(),
                degree,
                rank,
            });
        }
    }
    Ok(SupportReport {
        criterion: SupportCriterion::AcyclicBelow,
        field: Some(field),
        lattice_size: lattice.len(),
        ok: failures.is_empty(),
        failures,
    })
}

/// Connectivity support criterion for quasi-trees: for every multidegree M
/// in the lcm lattice, the subcomplex induced on vertices whose label
/// divides M must be empty or connected. Errors when the complex is not a
/// quasi-tree.
pub fn supports_resolution_quasitree(
    labeled: &LabeledComplex,
) -> Result<SupportReport, ResolutionError> {
    if !labeled.complex.is_quasi_tree() {
        return Err(ResolutionError::NotQuasiTree);
    }
    let lattice = lcm_lattice(labeled)?;
    let mut failures = Vec::new();
    let mut cache: BTreeMap<Vec<Vertex>, bool> = BTreeMap::new();
    for m in &lattice {
        let verts = labeled.vertices_dividing(m)?;
        let connected = match cache.get(&verts) {
            Some(v) => *v,
            None => {
                let sub = labeled.complex.induced_subcomplex(&verts)?;
                let v = sub.is_void() || sub.is_connected()?;
                cache.insert(verts, v);
                v
            }
        };
        if !connected {
            failures.push(SupportFailure::Disconnected {
                multidegree: m.clone(),
            });
        }
    }
    Ok(SupportReport {
        criterion: SupportCriterion::ConnectedBelow,
        field: None,
        lattice_size: lattice.len(),
        ok: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityWitness {
    /// The face whose label is already achieved one vertex earlier.
    pub face: Vec<Vertex>,
    /// The vertex whose removal keeps the label unchanged.
    pub dropped: Vertex,
    pub multidegree: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalityReport {
    pub ok: bool,
    pub faces_checked: u64,
    pub witness: Option<MinimalityWitness>,
}

/// Whether the resolution supported on the labeled complex is minimal:
/// every face must have a label strictly larger than each of its one-smaller
/// subfaces. Checks codimension-one pairs via prefix/suffix lcm tables and
/// stops at the first witness.
pub fn is_minimal_support(
    labeled: &LabeledComplex,
    max_faces: usize,
) -> Result<MinimalityReport, ResolutionError> {
    let faces = labeled.complex.faces(max_faces)?;
    let one = Monomial::one(labeled.vars.len());
    let mut checked = 0u64;
    for face in &faces {
        if face.is_empty() {
            continue;
        }
        checked += 1;
        let n = face.len();
        // prefix[i] = lcm of the first i labels, suffix[i] = lcm of labels from i on
        let mut prefix = vec![one.clone(); n + 1];
        for i in 0..n {
            prefix[i + 1] = prefix[i].lcm(labeled.label(face[i])?)?;
        }
        let mut suffix = vec![one.clone(); n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1].lcm(labeled.label(face[i])?)?;
        }
        let full = &prefix[n];
        for k in 0..n {
            let rest = prefix[k].lcm(&suffix[k + 1])?;
            if rest == *full {
                return Ok(MinimalityReport {
                    ok: false,
                    faces_checked: checked,
                    witness: Some(MinimalityWitness {
                        face: face.clone(),
                        dropped: face[k],
                        multidegree: full.clone(),
                    }),
                });
            }
        }
    }
    Ok(MinimalityReport {
        ok: true,
        faces_checked: checked,
        witness: None,
    })
}

/// Independent route to the same answer: homogenize and scan the boundary
/// matrices for an entry with monomial 1 (a unit, which is exactly a
/// non-minimal codimension-one pair).
pub fn is_minimal_support_exhaustive(
    labeled: &LabeledComplex,
    max_faces: usize,
) -> Result<MinimalityReport, ResolutionError> {
    let res = homogenize(labeled, max_faces)?;
    let mut checked = 0u64;
    for t in 0..res.maps.len() {
        for entry in &res.maps[t].entries {
            checked += 1;
            if entry.monomial.is_one() {
                let face = res.basis[t + 1][entry.col as usize].clone();
                let kept = &res.basis[t][entry.row as usize];
                let dropped = *face
                    .iter()
                    .find(|v| !kept.contains(v))
                    .expect("row face is col face minus one vertex");
                return Ok(MinimalityReport {
                    ok: false,
                    faces_checked: checked,
                    witness: Some(MinimalityWitness {
                        face,
                        dropped,
                        multidegree: res.multidegrees[t + 1][entry.col as usize].clone(),
                    }),
                });
            }
        }
    }
    Ok(MinimalityReport {
        ok: true,
        faces_checked: checked,
        witness: None,
    })
}

/// One entry of a monomial matrix: `coeff * monomial` in position
/// `(row, col)`. The monomial is the quotient of the column multidegree by
/// the row multidegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub row: u32,
    pub col: u32,
    pub coeff: i64,
    pub monomial: Monomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferentialMatrix {
    pub rows: usize,
    pub cols: usize,
    /// Sorted by (col, row).
    pub entries: Vec<Entry>,
}

/// The chain complex of free modules obtained from a labeled complex:
/// level t has one basis element per (t-1)-dimensional face (level 0 is the
/// empty face), and `maps[t]` is the boundary map from level t+1 to level t.
#[derive(Debug, Clone)]
pub struct HomogenizedResolution {
    pub vars: VariableSet,
    /// basis[t] = faces of cardinality t, sorted lex; one free module
    /// generator each.
    pub basis: Vec<Vec<Vec<Vertex>>>,
    /// multidegrees[t][k] = label of basis[t][k].
    pub multidegrees: Vec<Vec<Monomial>>,
    /// maps[t]: level t+1 -> level t.
    pub maps: Vec<DifferentialMatrix>,
}

/// Homogenize a labeled complex into monomial boundary matrices. For a face
/// written with vertices in descending order, the j-th vertex removal
/// carries sign (-1)^j; each entry's monomial is the quotient of the face
/// label by the subface label.
pub fn homogenize(
    labeled: &LabeledComplex,
    max_faces: usize,
) -> Result<HomogenizedResolution, ResolutionError> {
    let faces = labeled.complex.faces(max_faces)?;
    let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
    let mut basis: Vec<Vec<Vec<Vertex>>> = vec![Vec::new(); top + 1];
    for f in &faces {
        basis[f.len()].push(f.clone());
    }
    // faces() sorts by (cardinality, lex), so each basis level is lex sorted
    let mut index: Vec<BTreeMap<&[Vertex], u32>> = Vec::with_capacity(top + 1);
    for level in &basis {
        index.push(
            level
                .iter()
                .enumerate()
                .map(|(i, f)| (f.as_slice(), i as u32))
                .collect(),
        );
    }
    let mut multidegrees: Vec<Vec<Monomial>> = Vec::with_capacity(top + 1);
    for level in &basis {
        multidegrees.push(
            level
                .iter()
                .map(|f| labeled.face_label(f))
                .collect::<Result<_, _>>()?,
        );
    }
    let mut maps = Vec::with_capacity(top);
    for t in 0..top {
        let mut entries = Vec::new();
        for (col, face) in basis[t + 1].iter().enumerate() {
            let col_mdeg = &multidegrees[t + 1][col];
            // vertices ascending in `face`; removal order is descending
            for (j, pos) in (0..face.len()).rev().enumerate() {
                let mut sub = face.clone();
                sub.remove(pos);
                let row = index[t][sub.as_slice()];
                let row_mdeg = &multidegrees[t][row as usize];
                let monomial = row_mdeg
                    .quotient_into(col_mdeg)?
                    .ok_or(ResolutionError::InconsistentEntry)?;
                let coeff = if j % 2 == 0 { 1 } else { -1 };
                entries.push(Entry {
                    row,
                    col: col as u32,
                    coeff,
                    monomial,
                });
            }
        }
        entries.sort_by_key(|e| (e.col, e.row));
        maps.push(DifferentialMatrix {
            rows: basis[t].len(),
            cols: basis[t + 1].len(),
            entries,
        });
    }
    Ok(HomogenizedResolution {
        vars: labeled.vars.clone(),
        basis,
        multidegrees,
        maps,
    })
}

impl HomogenizedResolution {
    /// Ranks of the free modules, level 0 first.
    pub fn ranks(&self) -> Vec<usize> {
        self.basis.iter().map(|b| b.len()).collect()
    }

    /// Checks symbolically that consecutive boundary maps compose to zero:
    /// along every two-step path the monomials agree, so the signed
    /// coefficient sums must vanish.
    pub fn verify_compose_zero(&self) -> Result<(), ResolutionError> {
        for t in 1..self.maps.len() {
            let inner = &self.maps[t - 1]; // level t -> t-1
            let outer = &self.maps[t]; // level t+1 -> t
            let mut by_col: BTreeMap<u32, Vec<&Entry>> = BTreeMap::new();
            for e in &outer.entries {
                by_col.entry(e.col).or_default().push(e);
            }
            let mut by_row_of_inner: BTreeMap<u32, Vec<&Entry>> = BTreeMap::new();
            for e in &inner.entries {
                by_row_of_inner.entry(e.col).or_default().push(e);
            }
            for (col, outer_entries) in &by_col {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for oe in outer_entries {
                    if let Some(inner_entries) = by_row_of_inner.get(&oe.row) {
                        for ie in inner_entries {
                            *acc.entry(ie.row).or_insert(0) += ie.coeff * oe.coeff;
                        }
                    }
                }
                if acc.values().any(|c| *c != 0) {
                    return Err(ResolutionError::ComposeNonzero {
                        level: t,
                        col: *col,
                    });
                }
            }
        }
        Ok(())
    }

    /// Text rendering of one boundary map as a bracketed grid, rows labeled
    /// by level-t faces and columns by level-(t+1) faces.
    pub fn render_map(&self, t: usize) -> String {
        let map = &self.maps[t];
        let mut grid = vec![vec![".".to_string(); map.cols]; map.rows];
        for e in &map.entries {
            let m = e.monomial.render(&self.vars);
            grid[e.row as usize][e.col as usize] = match e.coeff {
                1 => m,
                -1 => format!("-{m}"),
                c => format!("{c}*{m}"),
            };
        }
        let widths: Vec<usize> = (0..map.cols)
            .map(|j| grid.iter().map(|r| r[j].len()).max().unwrap_or(1))
            .collect();
        let mut out = String::new();
        for row in &grid {
            out.push('[');
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    out.push_str("  ");
                }
                out.push_str(&format!("{cell:>width$}", width = widths[j]));
            }
            out.push_str("]\n");
        }
        out
    }
}

/// Graded Betti numbers: entry (i, M) is the rank of the degree-M part of
/// the i-th free module in the minimal resolution of the ideal (index 0 is
/// the generators).
#[derive(Debug, Clone, PartialEq)]
pub struct BettiTable {
    pub field: FieldSpec,
    pub vars: VariableSet,
    pub entries: BTreeMap<(u64, Monomial), u64>,
}

impl BettiTable {
    pub fn new(field: FieldSpec, vars: VariableSet) -> Self {
        BettiTable {
            field,
            vars,
            entries: BTreeMap::new(),
        }
    }

    pub fn add(&mut self, i: u64, m: Monomial, count: u64) {
        if count > 0 {
            *self.entries.entry((i, m)).or_insert(0) += count;
        }
    }

    pub fn total(&self, i: u64) -> u64 {
        self.entries
            .iter()
            .filter(|((j, _), _)| *j == i)
            .map(|(_, c)| *c)
            .sum()
    }

    /// Dense totals from index 0 through the projective dimension.
    pub fn totals(&self) -> Vec<u64> {
        match self.projective_dimension() {
            None => vec![],
            Some(pd) => (0..=pd).map(|i| self.total(i)).collect(),
        }
    }

    /// Largest i with a nonzero entry (the projective dimension of the
    /// ideal, one less than that of the quotient).
    pub fn projective_dimension(&self) -> Option<u64> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("field {}\n", self.field));
        match self.projective_dimension() {
            None => out.push_str("zero table\n"),
            Some(pd) => {
                for i in 0..=pd {
                    let mut parts = Vec::new();
                    for ((j, m), c) in &self.entries {
                        if *j == i {
                            let rendered = m.render(&self.vars);
                            if *c == 1 {
                                parts.push(rendered);
                            } else {
                                parts.push(format!("{rendered}^({c})"));
                            }
                        }
                    }
                    out.push_str(&format!(
                        "beta_{i} = {:<4} {}\n",
                        self.total(i),
                        parts.join(", ")
                    ));
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut by_degree: BTreeMap<u64, Vec<serde_json::Value>> = BTreeMap::new();
        for ((i, m), c) in &self.entries {
            by_degree.entry(*i).or_default().push(serde_json::json!({
                "multidegree": m.to_json(&self.vars),
                "rank": c,
            }));
        }
        serde_json::json!({
            "field": self.field.to_string(),
            "totals": self.totals(),
            "projective_dimension": self.projective_dimension(),
            "graded": by_degree
                .into_iter()
                .map(|(i, v)| serde_json::json!({"i": i, "entries": v}))
                .collect::<Vec<_>>(),
        })
    }
}

/// Minimize a homogenized complex by cancelling unit entries (entries whose
/// monomial is 1) until none remain, and tabulate the surviving basis by
/// homological index and multidegree. Level 0 (the empty face) is dropped
/// from the table, so indices follow the ideal convention.
pub fn minimize_resolution(
    res: &HomogenizedResolution,
    field: FieldSpec,
) -> Result<BettiTable, ResolutionError> {
    match field {
        FieldSpec::Rational => minimize_with(&Rationals, res, field, None),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            minimize_with(&f, res, field, None)
        }
    }
}

/// Same cancellation with pivots chosen uniformly at random; the final
/// table does not depend on the order, which tests exercise directly.
pub fn minimize_resolution_seeded(
    res: &HomogenizedResolution,
    field: FieldSpec,
    seed: u64,
) -> Result<BettiTable, ResolutionError> {
    match field {
        FieldSpec::Rational => minimize_with(&Rationals, res, field, Some(seed)),
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            minimize_with(&f, res, field, Some(seed))
        }
    }
}

fn minimize_with<F: Field>(
    f: &F,
    res: &HomogenizedResolution,
    spec: FieldSpec,
    seed: Option<u64>,
) -> Result<BettiTable, ResolutionError> {
    use rand::Rng;
    use rand::SeedableRng;

    let levels = res.basis.len();
    let mut alive: Vec<Vec<bool>> = res.basis.iter().map(|b| vec![true; b.len()]).collect();
    let mut mats: Vec<BTreeMap<(u32, u32), F::Elem>> = Vec::with_capacity(res.maps.len());
    for map in &res.maps {
        let mut m = BTreeMap::new();
        for e in &map.entries {
            let v = f.from_i64(e.coeff);
            if !f.is_zero(&v) {
                m.insert((e.row, e.col), v);
            }
        }
        mats.push(m);
    }
    let mut rng = seed.map(rand_chacha::ChaCha8Rng::seed_from_u64);
    loop {
        // units are entries whose row and column multidegrees coincide
        let mut units: Vec<(usize, u32, u32)> = Vec::new();
        'scan: for (t, mat) in mats.iter().enumerate() {
            for &(r, c) in mat.keys() {
                if res.multidegrees[t][r as usize] == res.multidegrees[t + 1][c as usize] {
                    units.push((t, r, c));
                    if rng.is_none() {
                        break 'scan;
                    }
                }
            }
        }
        if units.is_empty() {
            break;
        }
        let (t, r, c) = match &mut rng {
            None => units[0],
            Some(rng) => units[rng.random_range(0..units.len())],
        };
        let pivot = mats[t][&(r, c)].clone();
        let row_entries: Vec<(u32, F::Elem)> = mats[t]
            .iter()
            .filter(|((rr, cc), _)| *rr == r && *cc != c)
            .map(|((_, cc), v)| (*cc, v.clone()))
            .collect();
        let col_entries: Vec<(u32, F::Elem)> = mats[t]
            .iter()
            .filter(|((rr, cc), _)| *cc == c && *rr != r)
            .map(|((rr, _), v)| (*rr, v.clone()))
            .collect();
        for (r2, cv) in &col_entries {
            for (c2, bv) in &row_entries {
                // the new entry's multidegrees still divide: row r2 divides
                // the pivot multidegree, which divides column c2
                let delta = f.div(&f.mul(cv, bv), &pivot);
                let slot = mats[t].entry((*r2, *c2)).or_insert_with(|| f.zero());
                *slot = f.sub(slot, &delta);
                if f.is_zero(slot) {
                    mats[t].remove(&(*r2, *c2));
                }
            }
        }
        mats[t].retain(|(rr, cc), _| *rr != r && *cc != c);
        if t + 1 < mats.len() {
            mats[t + 1].retain(|(rr, _), _| *rr != c);
        }
        if t >= 1 {
            mats[t - 1].retain(|(_, cc), _| *cc != r);
        }
        alive[t][r as usize] = false;
        alive[t + 1][c as usize] = false;
    }
    let mut table = BettiTable::new(spec, res.vars.clone());
    for t in 1..levels {
        for (k, live) in alive[t].iter().enumerate() {
            if *live {
                table.add((t - 1) as u64, res.multidegrees[t][k].clone(), 1);
            }
        }
    }
    Ok(table)
}

/// Minimal generators of `I^r` for an arbitrary monomial ideal: all
/// products of r generators, minimalized.
fn power_generators(ideal: &MonomialIdeal, r: u64) -> Result<Vec<Monomial>, ResolutionError> {
    if r == 0 {
        return Err(ResolutionError::UnitGenerator);
    }
    let q = ideal.n_gens() as u64;
    let count = crate::bounds::n_points(r, q);
    const MAX_POINTS: u64 = 1_000_000;
    if count > BigUint::from(MAX_POINTS) {
        return Err(ResolutionError::PowerTooLarge {
            points: count,
            max: MAX_POINTS,
        });
    }
    let products: Vec<Monomial> = crate::power_complex::enumerate_points(r, q)
        .iter()
        .map(|p| ideal.power_product(p))
        .collect::<Result<_, _>>()?;
    Ok(crate::monomial::minimalize(&products))
}

/// True multigraded Betti numbers of `I^r` over the field, from homology
/// strands: for each multidegree M in the lcm lattice of the minimal
/// generators, beta_{i,M} is the rank of reduced homology in degree i-1 of
/// the complex of generator subsets that divide M but do not reach lcm M.
pub fn multigraded_betti(
    ideal: &MonomialIdeal,
    r: u64,
    field: FieldSpec,
) -> Result<BettiTable, ResolutionError> {
    let gens = power_generators(ideal, r)?;
    multigraded_betti_of(ideal.vars(), &gens, field)
}

/// Strand computation on an explicit generator list (minimalized first).
pub fn multigraded_betti_of(
    vars: &VariableSet,
    gens: &[Monomial],
    field: FieldSpec,
) -> Result<BettiTable, ResolutionError> {
    let gens = crate::monomial::minimalize(gens);
    if gens.is_empty() {
        return Ok(BettiTable::new(field, vars.clone()));
    }
    if gens.iter().any(|g| g.is_one()) {
        return Err(ResolutionError::UnitGenerator);
    }
    let lattice = lcm_closure(&gens)?;
    let mut table = BettiTable::new(field, vars.clone());
    for m in &lattice {
        let divisors: Vec<&Monomial> = gens
            .iter()
            .filter(|g| g.divides(m).unwrap_or(false))
            .collect();
        if divisors.len() > MAX_STRAND_DIVISORS {
            return Err(ResolutionError::StrandTooWide {
                multidegree: m.render(vars),
                divisors: divisors.len(),
                max: MAX_STRAND_DIVISORS,
            });
        }
        // faces of the strand complex: divisor subsets whose lcm stays
        // strictly below m; once a subset reaches m every superset does too,
        // so that branch is pruned whole
        let mut faces: Vec<Vec<Vertex>> = Vec::new();
        let mut stack: Vec<(usize, Vec<Vertex>, Monomial)> =
            vec![(0, Vec::new(), Monomial::one(vars.len()))];
        while let Some((start, cur, cur_lcm)) = stack.pop() {
            faces.push(cur.clone());
            if faces.len() > MAX_STRAND_FACES {
                return Err(ResolutionError::StrandTooLarge {
                    multidegree: m.render(vars),
                    max: MAX_STRAND_FACES,
                });
            }
            for k in start..divisors.len() {
                let next = cur_lcm.lcm(divisors[k])?;
                if next != *m {
                    let mut withk = cur.clone();
                    withk.push(k as Vertex);
                    stack.push((k + 1, withk, next));
                }
            }
        }
        let profile = homology_of_faces(&faces, field);
        for (degree, rank) in &profile.ranks {
            table.add((degree + 1) as u64, m.clone(), *rank);
        }
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::minimalize;

    fn vars_xyzu() -> VariableSet {
        VariableSet::new(vec!["x", "y", "z", "u"]).unwrap()
    }

    fn mono(vars: &VariableSet, names: &[&str]) -> Monomial {
        Monomial::from_names(vars, names).unwrap()
    }

    fn three_gen_path() -> (VariableSet, LabeledComplex) {
        // labels xy, yz, zu on the path 0-1-2
        let vars = vars_xyzu();
        let complex = SimplicialComplex::from_facets(vec![vec![0, 1], vec![1, 2]]);
        let labels: BTreeMap<Vertex, Monomial> = [
            (0, mono(&vars, &["x", "y"])),
            (1, mono(&vars, &["y", "z"])),
            (2, mono(&vars, &["z", "u"])),
        ]
        .into_iter()
        .collect();
        let labeled = LabeledComplex::new(vars.clone(), complex, labels).unwrap();
        (vars, labeled)
    }

    fn three_gen_ideal() -> MonomialIdeal {
        MonomialIdeal::from_square_free(vars_xyzu(), &[&["x", "y"], &["y", "z"], &["z", "u"]])
            .unwrap()
    }

    fn square_ideal() -> MonomialIdeal {
        let vars = VariableSet::new(vec!["x", "y", "z", "w"]).unwrap();
        MonomialIdeal::from_square_free(
            vars,
            &[&["x", "y"], &["y", "z"], &["z", "w"], &["x", "w"]],
        )
        .unwrap()
    }

    #[test]
    fn labeled_complex_validates_labels() {
        let vars = vars_xyzu();
        let complex = SimplicialComplex::from_facets(vec![vec![0, 1]]);
        let mut labels = BTreeMap::new();
        labels.insert(0, mono(&vars, &["x"]));
        assert!(matches!(
            LabeledComplex::new(vars.clone(), complex.clone(), labels.clone()),
            Err(ResolutionError::MissingLabel(1))
        ));
        labels.insert(1, Monomial::from_u64_exps(&[1, 0]));
        assert!(matches!(
            LabeledComplex::new(vars, complex, labels),
            Err(ResolutionError::LabelVars(1))
        ));
    }

    #[test]
    fn lcm_lattice_of_three_gens() {
        let (vars, labeled) = three_gen_path();
        let lattice = lcm_lattice(&labeled).unwrap();
        let expect: BTreeSet<Monomial> = [
            mono(&vars, &["x", "y"]),
            mono(&vars, &["y", "z"]),
            mono(&vars, &["z", "u"]),
            mono(&vars, &["x", "y", "z"]),
            mono(&vars, &["y", "z", "u"]),
            mono(&vars, &["x", "y", "z", "u"]),
        ]
        .into_iter()
        .collect();
        assert_eq!(lattice.iter().cloned().collect::<BTreeSet<_>>(), expect);
        assert_eq!(lattice.len(), 6);
    }

    #[test]
    fn support_criteria_accept_the_path() {
        let (_, labeled) = three_gen_path();
        let bps = supports_resolution_bps(&labeled, FieldSpec::Rational, 1 << 12).unwrap();
        assert!(bps.ok, "{bps:?}");
        let qt = supports_resolution_quasitree(&labeled).unwrap();
        assert!(qt.ok, "{qt:?}");
        assert_eq!(bps.lattice_size, qt.lattice_size);
    }

    #[test]
    fn support_criteria_agree_on_a_failing_path() {
        // path 0-1-2 labeled x, xyz, y: below xy the induced complex is the
        // two endpoints with no edge
        let vars = vars_xyzu();
        let complex = SimplicialComplex::from_facets(vec![vec![0, 1], vec![1, 2]]);
        let labels: BTreeMap<Vertex, Monomial> = [
            (0, mono(&vars, &["x"])),
            (1, mono(&vars, &["x", "y", "z"])),
            (2, mono(&vars, &["y"])),
        ]
        .into_iter()
        .collect();
        let labeled = LabeledComplex::new(vars.clone(), complex, labels).unwrap();
        let bps = supports_resolution_bps(&labeled, FieldSpec::Rational, 1 << 12).unwrap();
        assert!(!bps.ok);
        let qt = supports_resolution_quasitree(&labeled).unwrap();
        assert!(!qt.ok);
        let bad = mono(&vars, &["x", "y"]);
        assert!(bps.failures.iter().any(|f| matches!(
            f,
            SupportFailure::Homology { multidegree, degree: 0, rank: 1 } if *multidegree == bad
        )));
        assert!(qt.failures.iter().any(|f| matches!(
            f,
            SupportFailure::Disconnected { multidegree } if *multidegree == bad
        )));
    }

    #[test]
    fn quasitree_criterion_requires_a_quasi_tree() {
        let vars = vars_xyzu();
        let complex = SimplicialComplex::from_facets(vec![vec![0], vec![1]]);
        let labels: BTreeMap<Vertex, Monomial> =
            [(0, mono(&vars, &["x"])), (1, mono(&vars, &["y"]))]
                .into_iter()
                .collect();
        let labeled = LabeledComplex::new(vars, complex, labels).unwrap();
        assert!(matches!(
            supports_resolution_quasitree(&labeled),
            Err(ResolutionError::NotQuasiTree)
        ));
        // the homological criterion still applies and rejects it
        let bps = supports_resolution_bps(&labeled, FieldSpec::Rational, 1 << 12).unwrap();
        assert!(!bps.ok);
    }

    #[test]
    fn minimality_routes_agree() {
        let (vars, path) = three_gen_path();
        let direct = is_minimal_support(&path, 1 << 12).unwrap();
        let via_matrices = is_minimal_support_exhaustive(&path, 1 << 12).unwrap();
        assert!(direct.ok);
        assert!(via_matrices.ok);

        // the full simplex on the same three labels is not minimal: dropping
        // the middle generator from the top face keeps the label xyzu
        let ideal = three_gen_ideal();
        let taylor = crate::power_complex::taylor_complex(ideal.vars(), ideal.gens()).unwrap();
        let direct = is_minimal_support(&taylor, 1 << 12).unwrap();
        let via_matrices = is_minimal_support_exhaustive(&taylor, 1 << 12).unwrap();
        assert!(!direct.ok);
        assert!(!via_matrices.ok);
        let w = direct.witness.unwrap();
        assert_eq!(w.multidegree, mono(&vars, &["x", "y", "z", "u"]));
        let w2 = via_matrices.witness.unwrap();
        assert_eq!(w2.multidegree, mono(&vars, &["x", "y", "z", "u"]));
    }

    #[test]
    fn homogenized_path_matches_the_displayed_matrices() {
        let (vars, path) = three_gen_path();
        let res = homogenize(&path, 1 << 12).unwrap();
        assert_eq!(res.ranks(), vec![1, 3, 2]);
        // first map: the generator labels in one row
        let d1: Vec<(u32, u32, i64, String)> = res.maps[0]
            .entries
            .iter()
            .map(|e| (e.row, e.col, e.coeff, e.monomial.render(&vars)))
            .collect();
        assert_eq!(
            d1,
            vec![
                (0, 0, 1, "x*y".into()),
                (0, 1, 1, "y*z".into()),
                (0, 2, 1, "z*u".into()),
            ]
        );
        // second map: [[z, 0], [-x, u], [0, -y]]
        let d2: Vec<(u32, u32, i64, String)> = res.maps[1]
            .entries
            .iter()
            .map(|e| (e.row, e.col, e.coeff, e.monomial.render(&vars)))
            .collect();
        assert_eq!(
            d2,
            vec![
                (0, 0, 1, "z".into()),
                (1, 0, -1, "x".into()),
                (1, 1, 1, "u".into()),
                (2, 1, -1, "y".into()),
            ]
        );
        res.verify_compose_zero().unwrap();
        let rendered = res.render_map(1);
        assert_eq!(rendered.lines().count(), 3);
        assert!(rendered.contains("-x"));
        assert!(rendered.contains("-y"));
    }

    #[test]
    fn homogenized_two_gen_complete_intersection_is_the_koszul_column() {
        let vars = VariableSet::new(vec!["x", "y"]).unwrap();
        let complex = SimplicialComplex::from_facets(vec![vec![0, 1]]);
        let labels: BTreeMap<Vertex, Monomial> =
            [(0, mono(&vars, &["x"])), (1, mono(&vars, &["y"]))]
                .into_iter()
                .collect();
        let labeled = LabeledComplex::new(vars.clone(), complex, labels).unwrap();
        let res = homogenize(&labeled, 1 << 8).unwrap();
        assert_eq!(res.ranks(), vec![1, 2, 1]);
        let d2: Vec<(u32, u32, i64, String)> = res.maps[1]
            .entries
            .iter()
            .map(|e| (e.row, e.col, e.coeff, e.monomial.render(&vars)))
            .collect();
        assert_eq!(d2, vec![(0, 0, 1, "y".into()), (1, 0, -1, "x".into())]);
        res.verify_compose_zero().unwrap();
    }

    #[test]
    fn compose_zero_holds_on_larger_complexes() {
        let ideal = square_ideal();
        let taylor = crate::power_complex::taylor_complex(ideal.vars(), ideal.gens()).unwrap();
        homogenize(&taylor, 1 << 12)
            .unwrap()
            .verify_compose_zero()
            .unwrap();
        let lri = crate::power_complex::build_lri(
            &ideal,
            2,
            crate::power_complex::RepresentativePolicy::Balanced,
        )
        .unwrap();
        homogenize(&lri.labeled().unwrap(), 1 << 12)
            .unwrap()
            .verify_compose_zero()
            .unwrap();
    }

    #[test]
    fn minimize_taylor_of_three_gens() {
        let ideal = three_gen_ideal();
        let taylor = crate::power_complex::taylor_complex(ideal.vars(), ideal.gens()).unwrap();
        let res = homogenize(&taylor, 1 << 8).unwrap();
        let table = minimize_resolution(&res, FieldSpec::Rational).unwrap();
        assert_eq!(table.totals(), vec![3, 2]);
        assert_eq!(table.projective_dimension(), Some(1));
        let vars = vars_xyzu();
        assert_eq!(
            table.entries.get(&(1, mono(&vars, &["x", "y", "z"]))),
            Some(&1)
        );
        assert_eq!(
            table.entries.get(&(1, mono(&vars, &["y", "z", "u"]))),
            Some(&1)
        );
        // the already-minimal path complex gives the same table
        let (_, path) = three_gen_path();
        let res2 = homogenize(&path, 1 << 8).unwrap();
        let table2 = minimize_resolution(&res2, FieldSpec::Rational).unwrap();
        assert_eq!(table, table2);
    }

    #[test]
    fn minimize_is_pivot_order_independent() {
        let ideal = square_ideal();
        let taylor = crate::power_complex::taylor_complex(ideal.vars(), ideal.gens()).unwrap();
        let res = homogenize(&taylor, 1 << 8).unwrap();
        let reference = minimize_resolution(&res, FieldSpec::Rational).unwrap();
        for seed in 0..20u64 {
            let t = minimize_resolution_seeded(&res, FieldSpec::Rational, seed).unwrap();
            assert_eq!(t, reference, "seed {seed}");
        }
        let over_p = minimize_resolution(&res, FieldSpec::prime(32003).unwrap()).unwrap();
        assert_eq!(over_p.entries, reference.entries);
    }

    #[test]
    fn strand_betti_of_small_ideals() {
        let vars = VariableSet::new(vec!["x", "y"]).unwrap();
        let two = MonomialIdeal::from_square_free(vars, &[&["x"], &["y"]]).unwrap();
        let t = multigraded_betti(&two, 1, FieldSpec::Rational).unwrap();
        assert_eq!(t.totals(), vec![2, 1]);

        let three = three_gen_ideal();
        let t = multigraded_betti(&three, 1, FieldSpec::Rational).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
        let vars = vars_xyzu();
        assert_eq!(t.entries.get(&(1, mono(&vars, &["x", "y", "z"]))), Some(&1));
        assert_eq!(t.entries.get(&(1, mono(&vars, &["y", "z", "u"]))), Some(&1));

        let square = square_ideal();
        let t = multigraded_betti(&square, 1, FieldSpec::Rational).unwrap();
        assert_eq!(t.totals(), vec![4, 4, 1]);
    }

    #[test]
    fn strand_betti_matches_minimized_homogenization() {
        let square = square_ideal();
        for r in 1..=2u64 {
            let strands = multigraded_betti(&square, r, FieldSpec::Rational).unwrap();
            let lri = crate::power_complex::build_lri(
                &square,
                r,
                crate::power_complex::RepresentativePolicy::Balanced,
            )
            .unwrap();
            let res = homogenize(&lri.labeled().unwrap(), 1 << 12).unwrap();
            let minimized = minimize_resolution(&res, FieldSpec::Rational).unwrap();
            assert_eq!(strands, minimized, "square ideal power {r}");
        }
    }

    #[test]
    fn strand_beta_zero_counts_minimal_generators() {
        let square = square_ideal();
        for r in 1..=3u64 {
            let t = multigraded_betti(&square, r, FieldSpec::Rational).unwrap();
            let gens = minimalize(
                &crate::power_complex::enumerate_points(r, 4)
                    .iter()
                    .map(|p| square.power_product(p).unwrap())
                    .collect::<Vec<_>>(),
            );
            assert_eq!(t.total(0), gens.len() as u64, "power {r}");
            for g in &gens {
                assert_eq!(t.entries.get(&(0, g.clone())), Some(&1));
            }
        }
    }

    #[test]
    fn unit_generators_are_rejected() {
        let vars = VariableSet::new(vec!["x"]).unwrap();
        let unit = MonomialIdeal::new(vars, vec![Monomial::from_u64_exps(&[0])]).unwrap();
        assert!(matches!(
            multigraded_betti(&unit, 1, FieldSpec::Rational),
            Err(ResolutionError::UnitGenerator)
        ));
    }

    #[test]
    fn betti_table_renders_and_serializes() {
        let three = three_gen_ideal();
        let t = multigraded_betti(&three, 1, FieldSpec::Rational).unwrap();
        let text = t.render();
        assert!(text.contains("beta_0 = 3"));
        assert!(text.contains("beta_1 = 2"));
        let json = t.to_json();
        assert_eq!(json["totals"], serde_json::json!([3, 2]));
        assert_eq!(json["projective_dimension"], serde_json::json!(1));
    }
}
