//! Coefficient fields for exact rank computations: the rationals
//! (characteristic 0) and prime fields GF(p), plus a sparse fraction-free
//! Gaussian elimination used by all homology ranks.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic must be 0 or a prime, got {0}")]
    NotPrime(u64),
    #[error("prime too large for exact modular arithmetic (max 2^31 - 1): {0}")]
    PrimeTooLarge(u64),
    #[error("cannot parse field spec `{0}`; use 0, rational, or a prime such as 2")]
    Unparseable(String),
}

/// Which coefficient field to compute ranks over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "p", rename_all = "snake_case")]
pub enum FieldSpec {
    /// Characteristic zero: exact rational arithmetic.
    Rational,
    /// GF(p) for a prime p < 2^31.
    Prime(u64),
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Rational
    }
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= (1 << 31) {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }

    /// Parse `0`, `rational`, `q`, or a prime number.
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "0" | "q" | "rational" | "char0" => Ok(FieldSpec::Rational),
            _ => {
                let p: u64 = t
                    .strip_prefix("gf(")
                    .and_then(|r| r.strip_suffix(')'))
                    .unwrap_or(&t)
                    .parse()
                    .map_err(|_| FieldError::Unparseable(s.to_string()))?;
                FieldSpec::prime(p)
            }
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Exact field arithmetic, generic over the element representation.
pub trait Field {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let bi = self.inv(b).expect("division by zero");
        self.mul(a, &bi)
    }
}

/// The field of rationals with arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a.clone()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
}

/// GF(p) with elements stored as reduced u64 residues (p < 2^31, so products
/// fit in u64 via u128 intermediates).
#[derive(Debug, Clone, Copy)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, FieldError> {
        match FieldSpec::prime(p)? {
            FieldSpec::Prime(p) => Ok(PrimeField { p }),
            FieldSpec::Rational => unreachable!(),
        }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1u64;
        base %= self.p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = ((acc as u128 * base as u128) % self.p as u128) as u64;
            }
            base = ((base as u128 * base as u128) % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.p as u128) as u64
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            // Fermat: a^(p-2) mod p
            Some(self.pow(*a, self.p - 2))
        }
    }
}

/// A sparse column: sorted map from row index to a nonzero coefficient.
pub type SparseCol<E> = BTreeMap<u32, E>;

/// Exact rank of a sparse matrix given by columns, via Gaussian elimination
/// with persistent reduced pivot columns. Deterministic: pivots are chosen
/// as the smallest row index of the reduced column.
pub fn sparse_rank<F: Field>(field: &F, columns: &[SparseCol<F::Elem>]) -> usize {
    // pivot row -> fully reduced column whose leading (smallest) row is that row
    let mut pivots: BTreeMap<u32, SparseCol<F::Elem>> = BTreeMap::new();
    for col in columns {
        let mut work: SparseCol<F::Elem> = col
            .iter()
            .filter(|(_, v)| !field.is_zero(v))
            .map(|(r, v)| (*r, v.clone()))
            .collect();
        loop {
            let Some((&lead, _)) = work.iter().next() else {
                break; // reduced to zero
            };
            let Some(pivot_col) = pivots.get(&lead) else {
                // new pivot: normalize so the leading coefficient is 1
                let lead_val = work.get(&lead).cloned().expect("leading entry present");
                let inv = field.inv(&lead_val).expect("leading entry nonzero");
                let normalized: SparseCol<F::Elem> = work
                    .iter()
                    .map(|(r, v)| (*r, field.mul(v, &inv)))
                    .collect();
                pivots.insert(lead, normalized);
                break;
            };
            // eliminate the leading entry using the pivot column
            let factor = work.get(&lead).cloned().expect("leading entry present");
            for (r, pv) in pivot_col {
                let delta = field.mul(&factor, pv);
                match work.remove(r) {
                    Some(old) => {
                        let next = field.sub(&old, &delta);
                        if !field.is_zero(&next) {
                            work.insert(*r, next);
                        }
                    }
                    None => {
                        let next = field.neg(&delta);
                        if !field.is_zero(&next) {
                            work.insert(*r, next);
                        }
                    }
                }
            }
            debug_assert!(!work.contains_key(&lead), "leading entry must cancel");
        }
    }
    pivots.len()
}

/// Rank dispatch over a runtime field spec.
pub fn rank_over(spec: FieldSpec, columns_i64: &[Vec<(u32, i64)>]) -> usize {
    match spec {
        FieldSpec::Rational => {
            let f = Rationals;
            let cols: Vec<SparseCol<BigRational>> = columns_i64
                .iter()
                .map(|c| c.iter().map(|(r, v)| (*r, f.from_i64(*v))).collect())
                .collect();
            sparse_rank(&f, &cols)
        }
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p).expect("validated spec");
            let cols: Vec<SparseCol<u64>> = columns_i64
                .iter()
                .map(|c| c.iter().map(|(r, v)| (*r, f.from_i64(*v))).collect())
                .collect();
            sparse_rank(&f, &cols)
        }
    }
}
