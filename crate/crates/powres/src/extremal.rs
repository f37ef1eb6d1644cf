//! The extremal square-free ideals: q generators in 2^q - 1 variables, one
//! variable per nonempty subset of {1, ..., q}, with generator i the product
//! of all variables whose subset contains i. Their powers attain the largest
//! Betti numbers among all square-free ideals with q generators, and any
//! such ideal is the image of the extremal one under a variable
//! substitution that preserves generator lcms.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::field::FieldSpec;
use crate::monomial::{
    ExponentPoint, Monomial, MonomialError, MonomialIdeal, VariableSet,
};
use crate::resolution::{multigraded_betti, ResolutionError};

#[derive(Debug, thiserror::Error)]
pub enum ExtremalError {
    #[error("q must be between 1 and 5, got {0}")]
    QOutOfRange(u64),
    #[error("ideal has {ideal} generators but the extremal ideal has {extremal}")]
    GeneratorCountMismatch { ideal: usize, extremal: u64 },
    #[error("maximality verification is guarded to q <= {max}, got q = {q}")]
    QTooLarge { q: usize, max: usize },
    #[error("monomial over {got} variables is not in the extremal ring ({want} variables)")]
    WrongRing { got: usize, want: usize },
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}

/// The extremal ideal for a generator count q: variables indexed by the
/// nonempty subsets of {1, ..., q} ordered by (size, lex), generator i the
/// product of the variables whose subset contains i.
#[derive(Debug, Clone)]
pub struct ExtremalIdeal {
    pub q: u64,
    pub ideal: MonomialIdeal,
    /// subsets[k] is the subset (1-based, ascending) naming variable k.
    pub subsets: Vec<Vec<u64>>,
}

/// Nonempty subsets of {1, ..., q} ordered by (size, lex).
fn subset_order(q: u64) -> Vec<Vec<u64>> {
    let mut subsets: Vec<Vec<u64>> = (1u64..(1 << q))
        .map(|mask| (1..=q).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subsets
}

pub fn build_extremal(q: u64) -> Result<ExtremalIdeal, ExtremalError> {
    if !(1..=5).contains(&q) {
        return Err(ExtremalError::QOutOfRange(q));
    }
    let subsets = subset_order(q);
    let names: Vec<String> = subsets
        .iter()
        .map(|a| {
            let digits: String = a.iter().map(|i| i.to_string()).collect();
            format!("x_{digits}")
        })
        .collect();
    let vars = VariableSet::new(names)?;
    let mut gens = Vec::with_capacity(q as usize);
    for i in 1..=q {
        let exps: Vec<u64> = subsets
            .iter()
            .map(|a| u64::from(a.contains(&i)))
            .collect();
        gens.push(Monomial::from_u64_exps(&exps));
    }
    let ideal = MonomialIdeal::new(vars, gens)?;
    ideal.require_square_free_minimal()?;
    Ok(ExtremalIdeal { q, ideal, subsets })
}

impl ExtremalIdeal {
    pub fn vars(&self) -> &VariableSet {
        self.ideal.vars()
    }

    /// The i-th generator (0-based).
    pub fn generator(&self, i: usize) -> &Monomial {
        &self.ideal.gens()[i]
    }

    /// Whether the power product at `b` divides the power product at `a`.
    /// Equivalent to `b <= a` componentwise, which tests verify against
    /// this direct monomial division.
    pub fn power_divides(
        &self,
        b: &ExponentPoint,
        a: &ExponentPoint,
    ) -> Result<bool, ExtremalError> {
        let mb = self.ideal.power_product(b)?;
        let ma = self.ideal.power_product(a)?;
        Ok(mb.divides(&ma)?)
    }
}

/// The substitution from the extremal ring onto the ring of a concrete
/// square-free ideal: each extremal variable maps to the product of the
/// ideal's variables with exactly that generator support.
#[derive(Debug, Clone)]
pub struct PsiMap {
    pub source_vars: VariableSet,
    pub target_vars: VariableSet,
    /// images[k] = image of source variable k, a (possibly unit) square-free
    /// monomial over the target ring.
    pub images: Vec<Monomial>,
}

/// Build the substitution for an ideal with the same generator count as the
/// extremal ideal. A target variable v with generator support
/// S = {i : v divides generator i} contributes to the image of the source
/// variable named by S; target variables dividing no generator are dropped.
pub fn build_psi(ext: &ExtremalIdeal, ideal: &MonomialIdeal) -> Result<PsiMap, ExtremalError> {
    ideal.require_square_free_minimal()?;
    if ideal.n_gens() as u64 != ext.q {
        return Err(ExtremalError::GeneratorCountMismatch {
            ideal: ideal.n_gens(),
            extremal: ext.q,
        });
    }
    let target = ideal.vars();
    // support[v] = 1-based generator indices whose generator contains v
    let mut by_subset: BTreeMap<Vec<u64>, Vec<usize>> = BTreeMap::new();
    for v in 0..target.len() {
        let mut support = Vec::new();
        for (i, g) in ideal.gens().iter().enumerate() {
            if !g.exp(v).is_zero() {
                support.push(i as u64 + 1);
            }
        }
        if !support.is_empty() {
            by_subset.entry(support).or_default().push(v);
        }
    }
    let mut images = Vec::with_capacity(ext.subsets.len());
    for subset in &ext.subsets {
        let mut exps = vec![0u64; target.len()];
        if let Some(vars) = by_subset.get(subset) {
            for &v in vars {
                exps[v] = 1;
            }
        }
        images.push(Monomial::from_u64_exps(&exps));
    }
    Ok(PsiMap {
        source_vars: ext.vars().clone(),
        target_vars: target.clone(),
        images,
    })
}

impl PsiMap {
    /// Apply the substitution to a monomial over the extremal ring.
    pub fn apply(&self, m: &Monomial) -> Result<Monomial, ExtremalError> {
        if m.n_vars() != self.source_vars.len() {
            return Err(ExtremalError::WrongRing {
                got: m.n_vars(),
                want: self.source_vars.len(),
            });
        }
        let mut out = Monomial::one(self.target_vars.len());
        for (k, image) in self.images.iter().enumerate() {
            let e = m.exp(k);
            if !e.is_zero() {
                out = out.mul(&image.pow(e))?;
            }
        }
        Ok(out)
    }
}

/// Parameter pairs (q, r) for which the complex on the degree-r lattice
/// points, labeled by extremal power products, supports a minimal
/// resolution.
pub fn extremal_minimality_predicate(q: u64, r: u64) -> bool {
    if r == 0 {
        return false;
    }
    match q {
        1 => true,
        2 => r <= 4,
        _ => r <= 2,
    }
}

#[derive(Debug, Clone)]
pub struct MaximalityReport {
    pub ok: bool,
    pub field: FieldSpec,
    pub ideal_totals: Vec<u64>,
    pub extremal_totals: Vec<u64>,
}

pub const MAXIMALITY_MAX_Q: usize = 4;

/// Check that every total Betti number of `I^r` is at most the matching
/// total Betti number of the extremal power for the same generator count.
/// Guarded to small q; pass a larger `max_q` to override.
pub fn verify_extremal_maximality(
    ideal: &MonomialIdeal,
    r: u64,
    field: FieldSpec,
    max_q: usize,
) -> Result<MaximalityReport, ExtremalError> {
    ideal.require_square_free_minimal()?;
    let q = ideal.n_gens();
    if q > max_q {
        return Err(ExtremalError::QTooLarge { q, max: max_q });
    }
    let ext = build_extremal(q as u64)?;
    let ideal_totals = multigraded_betti(ideal, r, field)?.totals();
    let extremal_totals = multigraded_betti(&ext.ideal, r, field)?.totals();
    let ok = ideal_totals.len() <= extremal_totals.len()
        && ideal_totals
            .iter()
            .zip(&extremal_totals)
            .all(|(a, b)| a <= b);
    Ok(MaximalityReport {
        ok,
        field,
        ideal_totals,
        extremal_totals,
    })
}
