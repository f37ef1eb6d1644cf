//! Monomials with arbitrary-precision exponents, monomial ideals, and
//! exponent points (lattice points recording which power of each generator
//! a product takes).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Serialize};

/// Exponents are arbitrary-precision naturals so that high powers of
/// generators never overflow.
pub type Exp = BigUint;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum MonomialError {
    #[error("variable names must be unique: `{0}` repeats")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable sets do not match ({0} vs {1} variables)")]
    VariableSetMismatch(usize, usize),
    #[error("exponent point has {0} coordinates but the ideal has {1} generators")]
    PointLengthMismatch(usize, usize),
    #[error("ideal is not square-free: generator `{0}` has an exponent > 1")]
    NotSquareFree(String),
    #[error("generating set is not minimal: `{0}` divides `{1}`")]
    NotMinimal(String, String),
    #[error("ideal has no generators")]
    EmptyIdeal,
    #[error("invalid ideal JSON: {0}")]
    BadJson(String),
}

/// An ordered set of variable names fixing the polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VariableSet {
    names: Vec<String>,
}

impl VariableSet {
    pub fn new<S: Into<String>>(names: Vec<S>) -> Result<Self, MonomialError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::BTreeSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(MonomialError::DuplicateVariable(n.clone()));
            }
        }
        Ok(VariableSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

/// A monomial as a dense exponent vector over a fixed variable order.
///
/// Ordering is lexicographic in the fixed variable order (derived from the
/// exponent vector), which gives a deterministic total order on monomials of
/// the same ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<Exp>,
}

impl Monomial {
    /// The unit monomial 1 in `n` variables.
    pub fn one(n: usize) -> Self {
        Monomial {
            exps: vec![Exp::zero(); n],
        }
    }

    pub fn from_exps(exps: Vec<Exp>) -> Self {
        Monomial { exps }
    }

    pub fn from_u64_exps(exps: &[u64]) -> Self {
        Monomial {
            exps: exps.iter().map(|&e| Exp::from(e)).collect(),
        }
    }

    /// Square-free monomial that is the product of the named variables.
    pub fn from_names(vars: &VariableSet, names: &[&str]) -> Result<Self, MonomialError> {
        let mut exps = vec![Exp::zero(); vars.len()];
        for name in names {
            let i = vars
                .index_of(name)
                .ok_or_else(|| MonomialError::UnknownVariable(name.to_string()))?;
            exps[i] += 1u32;
        }
        Ok(Monomial { exps })
    }

    pub fn n_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, i: usize) -> &Exp {
        &self.exps[i]
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn degree(&self) -> Exp {
        let mut d = Exp::zero();
        for e in &self.exps {
            d += e;
        }
        d
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|e| *e <= Exp::one())
    }

    fn check_same_ring(&self, other: &Monomial) -> Result<(), MonomialError> {
        if self.n_vars() != other.n_vars() {
            return Err(MonomialError::VariableSetMismatch(
                self.n_vars(),
                other.n_vars(),
            ));
        }
        Ok(())
    }

    /// Least common multiple: componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_same_ring(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| if a >= b { a.clone() } else { b.clone() })
            .collect();
        Ok(Monomial { exps })
    }

    /// Whether `self` divides `other` (componentwise `<=`).
    pub fn divides(&self, other: &Monomial) -> Result<bool, MonomialError> {
        self.check_same_ring(other)?;
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// Whether `self` divides `other` and the two differ.
    pub fn strictly_divides(&self, other: &Monomial) -> Result<bool, MonomialError> {
        Ok(self.divides(other)? && self != other)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, MonomialError> {
        self.check_same_ring(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Monomial { exps })
    }

    pub fn pow(&self, e: &Exp) -> Monomial {
        let exps = self.exps.iter().map(|a| a * e).collect();
        Monomial { exps }
    }

    /// `other / self` when `self` divides `other`, else `None`.
    pub fn quotient_into(&self, other: &Monomial) -> Result<Option<Monomial>, MonomialError> {
        if !self.divides(other)? {
            return Ok(None);
        }
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| b - a)
            .collect();
        Ok(Some(Monomial { exps }))
    }

    /// Render against variable names, e.g. `x*y^2`; the unit renders as `1`.
    pub fn render(&self, vars: &VariableSet) -> String {
        assert_eq!(vars.len(), self.n_vars(), "variable set length mismatch");
        let mut parts = Vec::new();
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if e.is_one() {
                parts.push(vars.name(i).to_string());
            } else {
                parts.push(format!("{}^{}", vars.name(i), e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// JSON object form `{"x": 2, "y": 1}`; exponents that fit in u64 are
    /// numbers, larger ones decimal strings.
    pub fn to_json(&self, vars: &VariableSet) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (i, e) in self.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let v = match u64::try_from(e.clone()) {
                Ok(n) => serde_json::Value::from(n),
                Err(_) => serde_json::Value::from(e.to_string()),
            };
            map.insert(vars.name(i).to_string(), v);
        }
        serde_json::Value::Object(map)
    }
}

/// Remove duplicate generators (keeping the earliest occurrence) and any
/// generator strictly divisible by another; input order is preserved.
pub fn minimalize(gens: &[Monomial]) -> Vec<Monomial> {
    let mut keep = Vec::new();
    'outer: for (i, g) in gens.iter().enumerate() {
        for (j, h) in gens.iter().enumerate() {
            if i == j {
                continue;
            }
            // drop strict multiples of anything, and later copies of equals
            let divides = h.divides(g).unwrap_or(false);
            if divides && (h != g || j < i) {
                continue 'outer;
            }
        }
        keep.push(g.clone());
    }
    keep
}

/// A monomial ideal given by explicit generators in a named ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    vars: VariableSet,
    gens: Vec<Monomial>,
    minimal: bool,
}

impl MonomialIdeal {
    pub fn new(vars: VariableSet, gens: Vec<Monomial>) -> Result<Self, MonomialError> {
        if gens.is_empty() {
            return Err(MonomialError::EmptyIdeal);
        }
        for g in &gens {
            if g.n_vars() != vars.len() {
                return Err(MonomialError::VariableSetMismatch(g.n_vars(), vars.len()));
            }
        }
        let minimal = minimalize(&gens) == gens;
        Ok(MonomialIdeal {
            vars,
            gens,
            minimal,
        })
    }

    /// Convenience constructor from square-free generator name lists.
    pub fn from_square_free(
        vars: VariableSet,
        gens: &[&[&str]],
    ) -> Result<Self, MonomialError> {
        let monos = gens
            .iter()
            .map(|names| Monomial::from_names(&vars, names))
            .collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::new(vars, monos)
    }

    pub fn vars(&self) -> &VariableSet {
        &self.vars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn n_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_minimal(&self) -> bool {
        self.minimal
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(|g| g.is_square_free())
    }

    /// The same ideal with its generating set minimalized.
    pub fn minimalized(&self) -> MonomialIdeal {
        let gens = minimalize(&self.gens);
        MonomialIdeal::new(self.vars.clone(), gens).expect("minimalized set is nonempty")
    }

    /// Check the preconditions shared by the power-complex constructions.
    pub fn require_square_free_minimal(&self) -> Result<(), MonomialError> {
        for g in &self.gens {
            if !g.is_square_free() {
                return Err(MonomialError::NotSquareFree(g.render(&self.vars)));
            }
        }
        if !self.minimal {
            // find a witness pair for the error message
            for (i, g) in self.gens.iter().enumerate() {
                for (j, h) in self.gens.iter().enumerate() {
                    if i != j && h.divides(g).unwrap_or(false) && (h != g || j < i) {
                        return Err(MonomialError::NotMinimal(
                            h.render(&self.vars),
                            g.render(&self.vars),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// The product `m_1^{a_1} * ... * m_q^{a_q}` for an exponent point `a`.
    pub fn power_product(&self, a: &ExponentPoint) -> Result<Monomial, MonomialError> {
        if a.len() != self.gens.len() {
            return Err(MonomialError::PointLengthMismatch(a.len(), self.gens.len()));
        }
        let mut acc = Monomial::one(self.vars.len());
        for (m, e) in self.gens.iter().zip(a.coords()) {
            if e.is_zero() {
                continue;
            }
            acc = acc.mul(&m.pow(e))?;
        }
        Ok(acc)
    }

    /// Parse the ideal JSON schema:
    /// `{"vars": ["x","y"], "generators": [["x","y"], ...]}` with square-free
    /// name lists, or `{"generators": [{"x":2,"y":1}, ...]}` with exponent
    /// maps. When `vars` is absent, names are collected from the generators
    /// and sorted lexicographically.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, MonomialError> {
        #[derive(Deserialize)]
        struct IdealJson {
            vars: Option<Vec<String>>,
            generators: Vec<GenJson>,
        }
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum GenJson {
            Names(Vec<String>),
            Exps(BTreeMap<String, u64>),
        }

        let parsed: IdealJson = serde_json::from_value(value.clone())
            .map_err(|e| MonomialError::BadJson(e.to_string()))?;
        let vars = match parsed.vars {
            Some(names) => VariableSet::new(names)?,
            None => {
                let mut names = std::collections::BTreeSet::new();
                for g in &parsed.generators {
                    match g {
                        GenJson::Names(list) => names.extend(list.iter().cloned()),
                        GenJson::Exps(map) => names.extend(map.keys().cloned()),
                    }
                }
                VariableSet::new(names.into_iter().collect::<Vec<_>>())?
            }
        };
        let mut gens = Vec::new();
        for g in &parsed.generators {
            match g {
                GenJson::Names(list) => {
                    let refs: Vec<&str> = list.iter().map(|s| s.as_str()).collect();
                    gens.push(Monomial::from_names(&vars, &refs)?);
                }
                GenJson::Exps(map) => {
                    let mut exps = vec![Exp::zero(); vars.len()];
                    for (name, e) in map {
                        let i = vars
                            .index_of(name)
                            .ok_or_else(|| MonomialError::UnknownVariable(name.clone()))?;
                        exps[i] = Exp::from(*e);
                    }
                    gens.push(Monomial::from_exps(exps));
                }
            }
        }
        MonomialIdeal::new(vars, gens)
    }

    pub fn from_json_str(s: &str) -> Result<Self, MonomialError> {
        let value: serde_json::Value =
            serde_json::from_str(s).map_err(|e| MonomialError::BadJson(e.to_string()))?;
        Self::from_json(&value)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": self.vars.names(),
            "generators": self.gens.iter().map(|g| g.to_json(&self.vars)).collect::<Vec<_>>(),
        })
    }

    pub fn render_gens(&self) -> String {
        self.gens
            .iter()
            .map(|g| g.render(&self.vars))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// A lattice point recording which power of each ideal generator a product
/// takes. Coordinates are arbitrary-precision; ordering is lexicographic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentPoint {
    coords: Vec<Exp>,
}

impl ExponentPoint {
    pub fn new(coords: Vec<Exp>) -> Self {
        ExponentPoint { coords }
    }

    pub fn from_u64s(coords: &[u64]) -> Self {
        ExponentPoint {
            coords: coords.iter().map(|&c| Exp::from(c)).collect(),
        }
    }

    /// `c * e_i` in `q` coordinates.
    pub fn scaled_unit(q: usize, i: usize, c: u64) -> Self {
        let mut coords = vec![Exp::zero(); q];
        coords[i] = Exp::from(c);
        ExponentPoint { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Exp] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Exp {
        &self.coords[i]
    }

    pub fn total(&self) -> Exp {
        let mut t = Exp::zero();
        for c in &self.coords {
            t += c;
        }
        t
    }

    pub fn max_coord(&self) -> Exp {
        self.coords.iter().max().cloned().unwrap_or_else(Exp::zero)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords
                .iter()
                .map(|c| match u64::try_from(c.clone()) {
                    Ok(n) => serde_json::Value::from(n),
                    Err(_) => serde_json::Value::from(c.to_string()),
                })
                .collect(),
        )
    }
}

impl fmt::Display for ExponentPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<'de> Deserialize<'de> for ExponentPoint {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        let raw: Vec<serde_json::Value> = Vec::deserialize(deserializer)?;
        let mut coords = Vec::with_capacity(raw.len());
        for v in raw {
            match v {
                serde_json::Value::Number(n) => {
                    let u = n
                        .as_u64()
                        .ok_or_else(|| D::Error::custom("coordinates must be naturals"))?;
                    coords.push(Exp::from(u));
                }
                serde_json::Value::String(s) => {
                    let u: Exp = s
                        .parse()
                        .map_err(|_| D::Error::custom("bad coordinate string"))?;
                    coords.push(u);
                }
                _ => return Err(D::Error::custom("coordinates must be numbers or strings")),
            }
        }
        Ok(ExponentPoint { coords })
    }
}

impl Serialize for ExponentPoint {
    fn serialize<S>(&self, serializer: S) -> Result<S::Ok, S::Error>
    where
        S: serde::Serializer,
    {
        self.to_json().serialize(serializer)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> VariableSet {
        VariableSet::new(names.to_vec()).unwrap()
    }

    fn mono(vs: &VariableSet, names: &[&str]) -> Monomial {
        Monomial::from_names(vs, names).unwrap()
    }

    #[test]
    fn lcm_is_componentwise_max() {
        let vs = vars(&["x", "y", "z"]);
        let xy = mono(&vs, &["x", "y"]);
        let yz = mono(&vs, &["y", "z"]);
        let xyz = xy.lcm(&yz).unwrap();
        assert_eq!(xyz, mono(&vs, &["x", "y", "z"]), "lcm(xy, yz) must be xyz");
        // lcm is idempotent and commutative
        assert_eq!(xy.lcm(&xy).unwrap(), xy);
        assert_eq!(xy.lcm(&yz).unwrap(), yz.lcm(&xy).unwrap());
    }

    #[test]
    fn lcm_rejects_ring_mismatch() {
        let a = Monomial::from_u64_exps(&[1, 0]);
        let b = Monomial::from_u64_exps(&[1, 0, 0]);
        assert_eq!(
            a.lcm(&b).unwrap_err(),
            MonomialError::VariableSetMismatch(2, 3)
        );
        assert!(a.divides(&b).is_err());
    }

    #[test]
    fn divisibility_is_componentwise() {
        let vs = vars(&["x", "y"]);
        let x = mono(&vs, &["x"]);
        let xy = mono(&vs, &["x", "y"]);
        let x2 = Monomial::from_u64_exps(&[2, 0]);
        assert!(x.divides(&xy).unwrap());
        assert!(x.divides(&x2).unwrap());
        assert!(!xy.divides(&x).unwrap());
        assert!(!x2.divides(&xy).unwrap());
        assert!(x.strictly_divides(&x2).unwrap());
        assert!(!x.strictly_divides(&x).unwrap());
    }

    #[test]
    fn quotient_matches_divisibility() {
        let xy2 = Monomial::from_u64_exps(&[1, 2]);
        let y = Monomial::from_u64_exps(&[0, 1]);
        let q = y.quotient_into(&xy2).unwrap().unwrap();
        assert_eq!(q, Monomial::from_u64_exps(&[1, 1]));
        assert_eq!(xy2.quotient_into(&y).unwrap(), None);
    }

    #[test]
    fn minimalize_drops_multiples_and_duplicates() {
        let vs = vars(&["x", "y", "z"]);
        let xy = mono(&vs, &["x", "y"]);
        let xyz = mono(&vs, &["x", "y", "z"]);
        let yz = mono(&vs, &["y", "z"]);
        let out = minimalize(&[xy.clone(), xyz, yz.clone()]);
        assert_eq!(out, vec![xy.clone(), yz.clone()], "xyz is a multiple of xy");
        // duplicates keep the earliest copy only
        let out = minimalize(&[yz.clone(), xy.clone(), yz.clone()]);
        assert_eq!(out, vec![yz, xy], "second copy of yz must be dropped");
    }

    #[test]
    fn minimalize_preserves_order() {
        let a = Monomial::from_u64_exps(&[3, 0]);
        let b = Monomial::from_u64_exps(&[0, 2]);
        let c = Monomial::from_u64_exps(&[1, 1]);
        let out = minimalize(&[a.clone(), b.clone(), c.clone()]);
        assert_eq!(out, vec![a, b, c]);
    }

    #[test]
    fn power_product_multiplies_generator_powers() {
        // I = (xy, yz, zu); a = (1,1,0) gives xy * yz = x y^2 z
        let vs = vars(&["x", "y", "z", "u"]);
        let ideal = MonomialIdeal::from_square_free(
            vs.clone(),
            &[&["x", "y"], &["y", "z"], &["z", "u"]],
        )
        .unwrap();
        let a = ExponentPoint::from_u64s(&[1, 1, 0]);
        let p = ideal.power_product(&a).unwrap();
        assert_eq!(p, Monomial::from_u64_exps(&[1, 2, 1, 0]));
        assert_eq!(p.render(&vs), "x*y^2*z");
        // empty power is the unit
        let one = ideal
            .power_product(&ExponentPoint::from_u64s(&[0, 0, 0]))
            .unwrap();
        assert!(one.is_one());
        // wrong arity errors
        assert!(ideal
            .power_product(&ExponentPoint::from_u64s(&[1, 1]))
            .is_err());
    }

    #[test]
    fn square_ideal_power_two_has_nine_minimal_generators() {
        // I = (xy, yz, zw, xw): the 10 degree-2 products collapse to 9
        // minimal generators because xy*zw = yz*xw.
        let vs = vars(&["x", "y", "z", "w"]);
        let ideal = MonomialIdeal::from_square_free(
            vs,
            &[&["x", "y"], &["y", "z"], &["z", "w"], &["x", "w"]],
        )
        .unwrap();
        let pts = crate::power_complex::enumerate_points(2, 4);
        assert_eq!(pts.len(), 10);
        let products: Vec<Monomial> = pts
            .iter()
            .map(|a| ideal.power_product(a).unwrap())
            .collect();
        let minimal = minimalize(&products);
        assert_eq!(minimal.len(), 9, "I^2 has 9 minimal generators");
    }

    #[test]
    fn ideal_json_round_trip_square_free_form() {
        let ideal = MonomialIdeal::from_json_str(
            r#"{"vars":["x","y","z","w"],"generators":[["x","y"],["y","z"],["z","w"],["x","w"]]}"#,
        )
        .unwrap();
        assert_eq!(ideal.n_gens(), 4);
        assert!(ideal.is_square_free());
        assert!(ideal.is_minimal());
        let back = MonomialIdeal::from_json(&ideal.to_json()).unwrap();
        assert_eq!(back, ideal);
    }

    #[test]
    fn ideal_json_exponent_form_and_default_vars() {
        let ideal =
            MonomialIdeal::from_json_str(r#"{"generators":[{"y":1,"x":2},{"z":3}]}"#).unwrap();
        // vars absent: names sorted lexicographically
        assert_eq!(ideal.vars().names(), &["x", "y", "z"]);
        assert_eq!(ideal.gens()[0], Monomial::from_u64_exps(&[2, 1, 0]));
        assert_eq!(ideal.gens()[1], Monomial::from_u64_exps(&[0, 0, 3]));
        assert!(!ideal.is_square_free());
    }

    #[test]
    fn ideal_json_rejects_garbage() {
        assert!(MonomialIdeal::from_json_str(r#"{"generators":[]}"#).is_err());
        assert!(MonomialIdeal::from_json_str(r#"{"generators":[["x"]],"vars":["x","x"]}"#).is_err());
        assert!(MonomialIdeal::from_json_str(r#"{"vars":["x"],"generators":[["y"]]}"#).is_err());
        assert!(MonomialIdeal::from_json_str("[1,2]").is_err());
    }

    #[test]
    fn square_free_minimal_precondition() {
        let vs = vars(&["x", "y"]);
        let ok = MonomialIdeal::from_square_free(vs.clone(), &[&["x"], &["y"]]).unwrap();
        assert!(ok.require_square_free_minimal().is_ok());
        let not_min =
            MonomialIdeal::new(vs.clone(), vec![mono(&vs, &["x"]), mono(&vs, &["x", "y"])])
                .unwrap();
        assert!(matches!(
            not_min.require_square_free_minimal(),
            Err(MonomialError::NotMinimal(..))
        ));
        let not_sf = MonomialIdeal::new(vs, vec![Monomial::from_u64_exps(&[2, 0])]).unwrap();
        assert!(matches!(
            not_sf.require_square_free_minimal(),
            Err(MonomialError::NotSquareFree(..))
        ));
    }

    #[test]
    fn monomial_order_is_lex_in_variable_order() {
        let a = Monomial::from_u64_exps(&[2, 0, 1]);
        let b = Monomial::from_u64_exps(&[1, 5, 5]);
        assert!(a > b, "first coordinate dominates");
        let c = Monomial::from_u64_exps(&[2, 1, 0]);
        assert!(c > a, "ties broken by later coordinates");
    }

    #[test]
    fn point_display_and_order() {
        let p = ExponentPoint::from_u64s(&[3, 0, 1]);
        assert_eq!(p.to_string(), "(3,0,1)");
        assert_eq!(p.total(), Exp::from(4u32));
        assert_eq!(p.max_coord(), Exp::from(3u32));
        let q = ExponentPoint::from_u64s(&[2, 9, 9]);
        assert!(p > q, "lexicographic comparison");
    }

    #[test]
    fn extremal_style_power_product() {
        // E_2 = (x1*x12, x2*x12): epsilon^(1,1) = x1*x2*x12^2
        let vs = vars(&["x_1", "x_2", "x_12"]);
        let e1 = mono(&vs, &["x_1", "x_12"]);
        let e2 = mono(&vs, &["x_2", "x_12"]);
        let ideal = MonomialIdeal::new(vs, vec![e1, e2]).unwrap();
        let p = ideal
            .power_product(&ExponentPoint::from_u64s(&[1, 1]))
            .unwrap();
        assert_eq!(p, Monomial::from_u64_exps(&[1, 1, 2]));
    }
}
