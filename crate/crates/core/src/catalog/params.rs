//! Structural parameters and per-identity parameter schemas.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::binomial::VecIndex;
use crate::enumeration::{compositions, vec_range};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ParamValue {
    Int(i64),
    Vec(VecIndex),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Vec(v) => write!(f, "{v}"),
        }
    }
}

impl From<i64> for ParamValue {
    fn from(v: i64) -> Self {
        ParamValue::Int(v)
    }
}

impl From<VecIndex> for ParamValue {
    fn from(v: VecIndex) -> Self {
        ParamValue::Vec(v)
    }
}

/// A binding of structural parameters, kept in schema order once validated.
///
/// Ordering compares values in schema order, which is the order grid cells
/// are reported in.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct StructuralParams(Vec<(String, ParamValue)>);

impl StructuralParams {
    pub fn new() -> Self {
        StructuralParams::default()
    }

    pub fn with(mut self, name: &str, value: impl Into<ParamValue>) -> Self {
        self.set(name, value);
        self
    }

    pub fn set(&mut self, name: &str, value: impl Into<ParamValue>) {
        let value = value.into();
        match self.0.iter_mut().find(|(n, _)| n == name) {
            Some(slot) => slot.1 = value,
            None => self.0.push((name.to_string(), value)),
        }
    }

    pub fn get(&self, name: &str) -> Option<&ParamValue> {
        self.0.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn entries(&self) -> &[(String, ParamValue)] {
        &self.0
    }

    /// Integer parameter; panics if absent, so only call after validation.
    pub fn int(&self, name: &str) -> i64 {
        match self.get(name) {
            Some(ParamValue::Int(v)) => *v,
            other => panic!("parameter {name} is not a validated integer: {other:?}"),
        }
    }

    /// Vector parameter; panics if absent, so only call after validation.
    pub fn vec(&self, name: &str) -> &VecIndex {
        match self.get(name) {
            Some(ParamValue::Vec(v)) => v,
            other => panic!("parameter {name} is not a validated vector: {other:?}"),
        }
    }
}

impl fmt::Display for StructuralParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (n, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{n}={v}")?;
        }
        Ok(())
    }
}

impl Serialize for StructuralParams {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParamKind {
    /// Integer with an inclusive lower bound.
    Int { min: i64 },
    /// Vector with nonnegative components and at least one component.
    Vector,
}

/// How the default grid enumerates a parameter; may refer to parameters
/// declared earlier in the schema.
#[derive(Clone, Copy, Debug)]
pub enum DefaultValues {
    Range(i64, i64),
    /// `0..=p` for an earlier integer parameter `p`.
    UpTo(&'static str),
    /// `lo..=hi` plus `|v|` for an earlier vector parameter `v`.
    RangeAndNorm(i64, i64, &'static str),
    /// All vectors of dimension `dims.0..=dims.1` with `|v| ≤ max_norm`.
    Vectors { dims: (usize, usize), max_norm: i64 },
    /// `vec_range` of an earlier vector parameter.
    VecUpTo(&'static str),
    /// Compositions of `|v|` into `parts.0..=parts.1` parts.
    CompositionsOfNorm { of: &'static str, parts: (usize, usize) },
}

#[derive(Clone, Copy, Debug)]
pub struct ParamDecl {
    pub name: &'static str,
    pub kind: ParamKind,
    pub default: DefaultValues,
    /// Whether `--max-n` caps the default range.
    pub sized: bool,
}

impl ParamDecl {
    pub const fn int(name: &'static str, min: i64, default: DefaultValues, sized: bool) -> Self {
        ParamDecl { name, kind: ParamKind::Int { min }, default, sized }
    }

    pub const fn vector(name: &'static str, default: DefaultValues, sized: bool) -> Self {
        ParamDecl { name, kind: ParamKind::Vector, default, sized }
    }

    /// Checks a single value against this declaration's own bounds.
    pub fn check(&self, value: &ParamValue) -> std::result::Result<(), String> {
        match (self.kind, value) {
            (ParamKind::Int { min }, ParamValue::Int(v)) => {
                if *v < min {
                    return Err(format!("{}={v} is below the minimum {min}", self.name));
                }
                Ok(())
            }
            (ParamKind::Vector, ParamValue::Vec(v)) => {
                if v.dim() == 0 {
                    return Err(format!("{} must have at least one component", self.name));
                }
                if !v.is_nonnegative() {
                    return Err(format!("{}={v} has a negative component", self.name));
                }
                Ok(())
            }
            (ParamKind::Int { .. }, ParamValue::Vec(v)) => Err(format!("{}={v} must be an integer", self.name)),
            (ParamKind::Vector, ParamValue::Int(v)) => Err(format!("{}={v} must be a vector", self.name)),
        }
    }

    pub fn summary(&self) -> String {
        match self.kind {
            ParamKind::Int { min: i64::MIN } => format!("{}∈ℤ", self.name),
            ParamKind::Int { min } => format!("{}>={min}", self.name),
            ParamKind::Vector => format!("{}∈ℕ^m", self.name),
        }
    }

    fn defaults(&self, partial: &StructuralParams, max_n: Option<i64>) -> Vec<ParamValue> {
        let cap = |hi: i64| match (self.sized, max_n) {
            (true, Some(m)) => hi.min(m),
            _ => hi,
        };
        match self.default {
            DefaultValues::Range(lo, hi) => (lo..=cap(hi)).map(ParamValue::Int).collect(),
            DefaultValues::UpTo(p) => (0..=partial.int(p)).map(ParamValue::Int).collect(),
            DefaultValues::RangeAndNorm(lo, hi, v) => {
                let mut vals: Vec<i64> = (lo..=hi).collect();
                vals.push(partial.vec(v).norm());
                vals.sort_unstable();
                vals.dedup();
                vals.into_iter().map(ParamValue::Int).collect()
            }
            DefaultValues::Vectors { dims, max_norm } => {
                let max_norm = cap(max_norm);
                let mut out = Vec::new();
                for m in dims.0..=dims.1 {
                    let bound = VecIndex::new(vec![max_norm.max(0); m]);
                    out.extend(
                        vec_range(&bound)
                            .expect("nonnegative bound")
                            .filter(|v| v.norm() <= max_norm)
                            .map(ParamValue::Vec),
                    );
                }
                out
            }
            DefaultValues::VecUpTo(v) => vec_range(partial.vec(v)).expect("validated").map(ParamValue::Vec).collect(),
            DefaultValues::CompositionsOfNorm { of, parts } => {
                let norm = partial.vec(of).norm();
                (parts.0..=parts.1)
                    .flat_map(|s| compositions(norm, s).expect("nonnegative"))
                    .map(|c| ParamValue::Vec(VecIndex::new(c)))
                    .collect()
            }
        }
    }
}

/// User-supplied candidate values per parameter name.
pub type Bindings = BTreeMap<String, Vec<ParamValue>>;

/// Expands a schema into grid cells: bound parameters use the supplied values,
/// the rest their defaults. Values are checked against each declaration;
/// cross-parameter constraints are left to the caller.
pub fn expand_grid(
    identity: &str,
    schema: &[ParamDecl],
    bindings: &Bindings,
    max_n: Option<i64>,
) -> Result<Vec<StructuralParams>> {
    for name in bindings.keys() {
        if !schema.iter().any(|d| d.name == name) {
            return Err(Error::Schema {
                identity: identity.to_string(),
                reason: format!("unknown parameter `{name}`"),
            });
        }
    }
    let mut cells = vec![StructuralParams::new()];
    for decl in schema {
        let mut next = Vec::new();
        for cell in &cells {
            let values = match bindings.get(decl.name) {
                Some(vals) => vals.clone(),
                None => decl.defaults(cell, max_n),
            };
            for v in values {
                decl.check(&v).map_err(|reason| Error::Schema { identity: identity.to_string(), reason })?;
                next.push(cell.clone().with(decl.name, v));
            }
        }
        cells = next;
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SCHEMA: &[ParamDecl] = &[
        ParamDecl::int("n", 0, DefaultValues::Range(0, 3), true),
        ParamDecl::int("r", 0, DefaultValues::UpTo("n"), false),
    ];

    #[test]
    fn display_and_order() {
        let a = StructuralParams::new().with("n", 2).with("nvec", VecIndex::from([1, 0]));
        assert_eq!(a.to_string(), "n=2,nvec=(1,0)");
        let b = StructuralParams::new().with("n", 10);
        let c = StructuralParams::new().with("n", 9);
        assert!(c < b);
    }

    #[test]
    fn dependent_defaults() {
        let cells = expand_grid("t", SCHEMA, &Bindings::new(), None).unwrap();
        assert_eq!(cells.len(), 1 + 2 + 3 + 4);
        let capped = expand_grid("t", SCHEMA, &Bindings::new(), Some(1)).unwrap();
        assert_eq!(capped.len(), 3);
    }

    #[test]
    fn bindings_override_and_check() {
        let mut b = Bindings::new();
        b.insert("n".into(), vec![ParamValue::Int(5)]);
        let cells = expand_grid("t", SCHEMA, &b, None).unwrap();
        assert_eq!(cells.len(), 6);
        b.insert("n".into(), vec![ParamValue::Int(-1)]);
        assert!(expand_grid("t", SCHEMA, &b, None).is_err());
        let mut unknown = Bindings::new();
        unknown.insert("zz".into(), vec![ParamValue::Int(1)]);
        assert!(expand_grid("t", SCHEMA, &unknown, None).is_err());
    }

    #[test]
    fn vector_defaults() {
        let decl = ParamDecl::vector("nvec", DefaultValues::Vectors { dims: (1, 2), max_norm: 2 }, true);
        let vals = decl.defaults(&StructuralParams::new(), None);
        // m=1: 3 vectors; m=2: 6 vectors with |v| ≤ 2
        assert_eq!(vals.len(), 9);
        assert!(decl.check(&ParamValue::Vec(VecIndex::from([1, -1]))).is_err());
        assert!(decl.check(&ParamValue::Int(1)).is_err());
    }
}
