//! Closed-form bounds on the Betti numbers of the r-th power of a
//! square-free monomial ideal with q generators, derived from the face
//! counts of the support complex `L^r_q`, plus comparison tables against
//! the Taylor (full simplex) bounds.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::field::FieldSpec;
use crate::monomial::MonomialIdeal;
use crate::power_complex::{self, RepresentativePolicy};
use crate::simplicial::FVector;

#[derive(Debug, thiserror::Error)]
pub enum BoundsError {
    #[error("the closed-form bound requires r >= 2, got r = {0}")]
    RTooSmall(u64),
    #[error("parameters must be positive: r = {r}, q = {q}")]
    NotPositive { r: u64, q: u64 },
    #[error("non-exact division while evaluating f (arithmetic bug): {0}")]
    NonExactDivision(String),
    #[error("bound sanity check failed for r = {r}, q = {q}: f = {f} is not > q")]
    FNotAboveQ { r: u64, q: u64, f: BigUint },
    #[error(transparent)]
    Complex(#[from] power_complex::PowerComplexError),
    #[error(transparent)]
    Monomial(#[from] crate::monomial::MonomialError),
    #[error(transparent)]
    Simplicial(#[from] crate::simplicial::SimplicialError),
    #[error(transparent)]
    Resolution(#[from] crate::resolution::ResolutionError),
}

/// Binomial coefficient C(n, k); zero when k > n.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Binomial coefficient C(n, k) for arbitrary-precision n.
pub fn binomial_big(n: &BigUint, k: u64) -> BigUint {
    if BigUint::from(k) > *n {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - BigUint::from(i)) / BigUint::from(i + 1);
    }
    acc
}

/// Number of degree-r lattice points in q coordinates: C(q + r - 1, r).
pub fn n_points(r: u64, q: u64) -> BigUint {
    binomial(q + r - 1, r)
}

/// `s = ceil(r / 2)`, the coordinate cap defining the base set.
pub fn s_value(r: u64) -> u64 {
    r.div_ceil(2)
}

/// The coefficient of `x^r` in `(1 + x + ... + x^s)^q`, which counts the
/// degree-r points with every coordinate at most `s = ceil(r/2)`.
pub fn coefficient_b(r: u64, q: u64) -> Result<BigUint, BoundsError> {
    if r == 0 || q == 0 {
        return Err(BoundsError::NotPositive { r, q });
    }
    let s = s_value(r) as usize;
    let r = r as usize;
    // dp[d] = coefficient of x^d after multiplying j window factors
    let mut dp = vec![BigUint::zero(); r + 1];
    dp[0] = BigUint::one();
    for _ in 0..q {
        let mut next = vec![BigUint::zero(); r + 1];
        for d in 0..=r {
            if dp[d].is_zero() {
                continue;
            }
            for e in 0..=s.min(r - d) {
                let t = next[d + e].clone() + &dp[d];
                next[d + e] = t;
            }
        }
        dp = next;
    }
    Ok(dp[r].clone())
}

/// The common size `f` of the first-kind facets:
/// `f = (C(q + r - 1, r) - b - q) / q + b`. The division is provably exact;
/// a remainder signals an arithmetic bug and is reported as an error.
pub fn f_value(r: u64, q: u64) -> Result<BigUint, BoundsError> {
    if r == 0 || q == 0 {
        return Err(BoundsError::NotPositive { r, q });
    }
    let n = n_points(r, q);
    let b = coefficient_b(r, q)?;
    let bq = &b + BigUint::from(q);
    if n < bq {
        return Err(BoundsError::NonExactDivision(format!(
            "N = {n} is smaller than b + q = {bq} for r = {r}, q = {q}"
        )));
    }
    let num = &n - &bq;
    let (quot, rem) = num_integer::Integer::div_rem(&num, &BigUint::from(q));
    if !rem.is_zero() {
        return Err(BoundsError::NonExactDivision(format!(
            "(N - b - q) = {num} is not divisible by q = {q} for r = {r}"
        )));
    }
    Ok(quot + b)
}

/// Upper bound on the t-th Betti number of `I^r` (q square-free generators,
/// r >= 2): `q * (C(q-1, t) + C(f, t+1) - C(b, t+1)) + C(b, t+1)`.
/// Equals the number of t-faces of `L^r_q`.
pub fn betti_bound(t: u64, r: u64, q: u64) -> Result<BigUint, BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall(r));
    }
    let b = coefficient_b(r, q)?;
    let f = f_value(r, q)?;
    let cb = BigInt::from(binomial_big(&b, t + 1));
    let cf = BigInt::from(binomial_big(&f, t + 1));
    let cq = BigInt::from(binomial(q - 1, t));
    let total = BigInt::from(q) * (cq + cf - &cb) + cb;
    let (sign, mag) = total.into_parts();
    assert!(
        sign != num_bigint::Sign::Minus,
        "betti bound must be nonnegative (f >= b)"
    );
    Ok(mag)
}

/// Upper bound on the projective dimension of `I^r` for r >= 2:
/// `max(q - 1, f - 1)`, the dimension of `L^r_q`.
pub fn pd_bound(r: u64, q: u64) -> Result<BigUint, BoundsError> {
    if r < 2 {
        return Err(BoundsError::RTooSmall(r));
    }
    let f = f_value(r, q)?;
    let fm1 = if f.is_zero() {
        BigUint::zero()
    } else {
        f - BigUint::one()
    };
    Ok(fm1.max(BigUint::from(q - 1)))
}

/// Whether the regime where `f > q` holds (so the first-kind facets dominate
/// the projective-dimension bound): `(q = 2 and r >= 5) or (q = 3 and
/// r >= 3) or (q >= 4 and r >= 2)`. When the predicate is true the actual
/// inequality `f > q` is verified; a violation is reported as an error.
pub fn check_f_gt_q(r: u64, q: u64) -> Result<bool, BoundsError> {
    if r == 0 || q == 0 {
        return Err(BoundsError::NotPositive { r, q });
    }
    let predicted = (q == 2 && r >= 5) || (q == 3 && r >= 3) || (q >= 4 && r >= 2);
    if predicted {
        let f = f_value(r, q)?;
        if f <= BigUint::from(q) {
            return Err(BoundsError::FNotAboveQ { r, q, f });
        }
    }
    Ok(predicted)
}

/// The f-vector of `L^r(I)`, whose entries bound the Betti numbers of `I^r`.
pub fn lri_face_bound(
    ideal: &MonomialIdeal,
    r: u64,
    policy: RepresentativePolicy,
) -> Result<FVector, BoundsError> {
    let lri = power_complex::build_lri(ideal, r, policy)?;
    Ok(lri.complex.f_vector()?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Markdown,
    Csv,
    Json,
}

impl TableFormat {
    pub fn parse(s: &str) -> Option<TableFormat> {
        match s.to_ascii_lowercase().as_str() {
            "md" | "markdown" => Some(TableFormat::Markdown),
            "csv" => Some(TableFormat::Csv),
            "json" => Some(TableFormat::Json),
            _ => None,
        }
    }
}

/// A rendered-value comparison table: one labelled row per bound, one column
/// per complex or formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonTable {
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
    pub footnotes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub label: String,
    pub values: Vec<BigUint>,
}

impl ComparisonTable {
    pub fn render(&self, format: TableFormat) -> String {
        match format {
            TableFormat::Markdown => self.render_markdown(),
            TableFormat::Csv => self.render_csv(),
            TableFormat::Json => {
                serde_json::to_string_pretty(&self.to_json()).expect("table serializes") + "\n"
            }
        }
    }

    pub fn render_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("### {}\n\n", self.title));
        out.push_str("| bound |");
        for c in &self.columns {
            out.push_str(&format!(" {c} |"));
        }
        out.push('\n');
        out.push_str("| --- |");
        for _ in &self.columns {
            out.push_str(" ---: |");
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&format!("| {} |", row.label));
            for v in &row.values {
                out.push_str(&format!(" {v} |"));
            }
            out.push('\n');
        }
        for note in &self.footnotes {
            out.push_str(&format!("\nnote: {note}\n"));
        }
        out
    }

    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str("bound");
        for c in &self.columns {
            out.push(',');
            out.push_str(c);
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.label);
            for v in &row.values {
                out.push(',');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "title": self.title,
            "columns": self.columns,
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "label": r.label,
                "values": r.values.iter().map(big_to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "footnotes": self.footnotes,
        })
    }
}

fn big_to_json(v: &BigUint) -> serde_json::Value {
    match u64::try_from(v.clone()) {
        Ok(n) => serde_json::Value::from(n),
        Err(_) => serde_json::Value::from(v.to_string()),
    }
}

/// Comparison table for the parameters (r, q) alone: the `L^r_q` face-count
/// bound against the Taylor bound from the full simplex on all
/// `N = C(q + r - 1, r)` degree-r products. For r = 1 the complex is that
/// simplex, so both columns show the simplex binomials (footnoted).
pub fn parameter_table(r: u64, q: u64, t_max: Option<u64>) -> Result<ComparisonTable, BoundsError> {
    if r == 0 || q == 0 {
        return Err(BoundsError::NotPositive { r, q });
    }
    let n = n_points(r, q);
    let t_max = t_max.unwrap_or(2);
    let title = format!("Betti bounds for the r-th power: r = {r}, q = {q}");
    let columns = vec![format!("L^{r}_{q}"), format!("simplex({n})")];
    let mut rows = Vec::new();
    let mut footnotes = Vec::new();
    if r == 1 {
        footnotes.push(
            "r = 1: L^1_q is the full simplex, so both columns show the simplex bound".to_string(),
        );
    }
    for t in 0..=t_max {
        let simplex = binomial_big(&n, t + 1);
        let lrq = if r == 1 {
            simplex.clone()
        } else {
            betti_bound(t, r, q)?
        };
        rows.push(TableRow {
            label: format!("beta_{t} <="),
            values: vec![lrq, simplex],
        });
    }
    let simplex_pd = &n - BigUint::one();
    let lrq_pd = if r == 1 {
        simplex_pd.clone()
    } else {
        pd_bound(r, q)?
    };
    rows.push(TableRow {
        label: "pd <=".to_string(),
        values: vec![lrq_pd, simplex_pd],
    });
    Ok(ComparisonTable {
        title,
        columns,
        rows,
        footnotes,
    })
}

/// Comparison table for a concrete square-free ideal: face counts of
/// `L^r(I)` and the simplex on the minimal generators of `I^r`, next to the
/// parameter-only `L^r_q` and full-simplex bounds. When `betti_field` is
/// given, a final column lists the true Betti numbers of `I^r` over that
/// field.
pub fn ideal_table(
    ideal: &MonomialIdeal,
    r: u64,
    policy: RepresentativePolicy,
    t_max: Option<u64>,
    betti_field: Option<FieldSpec>,
) -> Result<ComparisonTable, BoundsError> {
    let q = ideal.n_gens() as u64;
    if r == 0 || q == 0 {
        return Err(BoundsError::NotPositive { r, q });
    }
    let lri = power_complex::build_lri(ideal, r, policy)?;
    let fv = lri.complex.f_vector()?;
    let g = BigUint::from(lri.classes.survivors.len() as u64);
    let n = n_points(r, q);
    let t_max = t_max.unwrap_or(2);
    let title = format!("Betti bounds for I^{r}, I = ({})", ideal.render_gens());
    let mut columns = vec![
        format!("L^{r}(I)"),
        format!("simplex({g})"),
        format!("L^{r}_{q}"),
        format!("simplex({n})"),
    ];
    let mut footnotes = Vec::new();
    if r == 1 {
        footnotes.push(
            "r = 1: L^1_q is the full simplex, so the formula column shows the simplex bound"
                .to_string(),
        );
    }
    let betti = match betti_field {
        Some(field) => {
            columns.push(format!("beta over {field}"));
            Some(crate::resolution::multigraded_betti(ideal, r, field)?)
        }
        None => None,
    };
    let mut rows = Vec::new();
    for t in 0..=t_max {
        let lri_count = fv
            .counts
            .get(t as usize)
            .cloned()
            .unwrap_or_else(BigUint::zero);
        let simplex_g = binomial_big(&g, t + 1);
        let simplex_n = binomial_big(&n, t + 1);
        let lrq = if r == 1 {
            simplex_n.clone()
        } else {
            betti_bound(t, r, q)?
        };
        let mut values = vec![lri_count, simplex_g, lrq, simplex_n];
        if let Some(table) = &betti {
            values.push(BigUint::from(table.total(t)));
        }
        rows.push(TableRow {
            label: format!("beta_{t} <="),
            values,
        });
    }
    // projective-dimension row: complex dimensions and formula bounds
    let lri_pd = BigUint::from(lri.complex.dim().map(|d| d.max(0)).unwrap_or(0) as u64);
    let g_pd = if g.is_zero() {
        BigUint::zero()
    } else {
        &g - BigUint::one()
    };
    let n_pd = &n - BigUint::one();
    let lrq_pd = if r == 1 {
        n_pd.clone()
    } else {
        pd_bound(r, q)?
    };
    let mut values = vec![lri_pd, g_pd, lrq_pd, n_pd];
    if let Some(table) = &betti {
        values.push(BigUint::from(table.projective_dimension().unwrap_or(0)));
    }
    rows.push(TableRow {
        label: "pd <=".to_string(),
        values,
    });
    Ok(ComparisonTable {
        title,
        columns,
        rows,
        footnotes,
    })
}
