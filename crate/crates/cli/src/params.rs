//! `--param` grammar: `n=0..4`, `s=3`, `nvec=(2,1)`, `nvec=(1,0),(2,1)`,
//! `x=1/2`.

use std::collections::BTreeMap;

use idforge_core::binomial::VecIndex;
use idforge_core::catalog::ParamValue;
use idforge_core::Rational;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Ints(Vec<i64>),
    Vecs(Vec<VecIndex>),
    /// A non-integer rational; only meaningful as a variable assignment.
    Rational(Rational),
}

pub type ParsedParams = BTreeMap<String, Value>;

fn parse_vectors(raw: &str) -> Result<Vec<VecIndex>, String> {
    let mut out = Vec::new();
    let mut rest = raw.trim();
    while !rest.is_empty() {
        let close = rest.find(')').ok_or_else(|| format!("unclosed vector in `{raw}`"))?;
        out.push(rest[..=close].parse::<VecIndex>().map_err(|e| e.to_string())?);
        rest = rest[close + 1..].trim_start();
        if let Some(r) = rest.strip_prefix(',') {
            rest = r.trim_start();
            if rest.is_empty() {
                return Err(format!("trailing comma in `{raw}`"));
            }
        } else if !rest.is_empty() {
            return Err(format!("expected `,` between vectors in `{raw}`"));
        }
    }
    Ok(out)
}

fn parse_value(raw: &str) -> Result<Value, String> {
    let raw = raw.trim();
    if raw.starts_with('(') {
        return parse_vectors(raw).map(Value::Vecs);
    }
    if let Some((a, b)) = raw.split_once("..") {
        let lo: i64 = a.trim().parse().map_err(|_| format!("malformed range `{raw}`"))?;
        let hi: i64 = b.trim().parse().map_err(|_| format!("malformed range `{raw}`"))?;
        if lo > hi {
            return Err(format!("empty range `{raw}`"));
        }
        return Ok(Value::Ints((lo..=hi).collect()));
    }
    if let Ok(v) = raw.parse::<i64>() {
        return Ok(Value::Ints(vec![v]));
    }
    raw.parse::<Rational>().map(Value::Rational).map_err(|_| format!("malformed value `{raw}`"))
}

/// Parses repeated `name=value` tokens; repeating a name extends its list.
pub fn parse_params(tokens: &[String]) -> Result<ParsedParams, String> {
    let mut out = ParsedParams::new();
    for tok in tokens {
        let (name, raw) = tok.split_once('=').ok_or_else(|| format!("expected name=value, got `{tok}`"))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("bad parameter name in `{tok}`"));
        }
        let value = parse_value(raw).map_err(|e| format!("{e} (in `{tok}`)"))?;
        match (out.get_mut(name), value) {
            (None, v) => {
                out.insert(name.to_string(), v);
            }
            (Some(Value::Ints(a)), Value::Ints(b)) => a.extend(b),
            (Some(Value::Vecs(a)), Value::Vecs(b)) => a.extend(b),
            _ => return Err(format!("conflicting values for `{name}` (in `{tok}`)")),
        }
    }
    Ok(out)
}

impl Value {
    /// Structural values; rationals are not structural.
    pub fn structural(&self) -> Option<Vec<ParamValue>> {
        match self {
            Value::Ints(v) => Some(v.iter().copied().map(ParamValue::Int).collect()),
            Value::Vecs(v) => Some(v.iter().cloned().map(ParamValue::Vec).collect()),
            Value::Rational(_) => None,
        }
    }

    /// A single rational, for variable assignments.
    pub fn rational(&self) -> Option<Rational> {
        match self {
            Value::Ints(v) if v.len() == 1 => Some(Rational::from(v[0])),
            Value::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one(tok: &str) -> Result<Value, String> {
        parse_params(&[tok.to_string()]).map(|m| m.into_values().next().unwrap())
    }

    #[test]
    fn grammar() {
        assert_eq!(one("n=0..2").unwrap(), Value::Ints(vec![0, 1, 2]));
        assert_eq!(one("s=3").unwrap(), Value::Ints(vec![3]));
        assert_eq!(one("nvec=(2,1)").unwrap(), Value::Vecs(vec![[2, 1].into()]));
        assert_eq!(one("nvec=(1,0), (3)").unwrap(), Value::Vecs(vec![[1, 0].into(), [3].into()]));
        assert_eq!(one("x=1/2").unwrap(), Value::Rational("1/2".parse().unwrap()));
        assert_eq!(one("x=-4").unwrap().rational().unwrap(), Rational::from(-4));
    }

    #[test]
    fn malformed() {
        for bad in ["n", "n=1..", "n=3..1", "nvec=(1,2", "nvec=(1)(2)", "x=1/0", "x=abc", "=3", "n=(1),"] {
            assert!(one(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn repetition_extends() {
        let m = parse_params(&["n=1".into(), "n=3..4".into()]).unwrap();
        assert_eq!(m["n"], Value::Ints(vec![1, 3, 4]));
        assert!(parse_params(&["n=1".into(), "n=(1)".into()]).is_err());
    }
}
