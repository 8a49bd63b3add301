use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::expr::GraphExpr;

/// Named sweep parameters as raw strings.
///
/// Integer values are a single number, an inclusive range `a..b`, or a comma
/// list of either (`1..3,7`). Graph values are expressions separated by `|`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Params(BTreeMap<String, String>);

impl Params {
    pub fn new() -> Self {
        Self::default()
    }

    /// Parses `name=value` assignments.
    pub fn from_assignments<I, S>(items: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut out = Self::new();
        for item in items {
            let item = item.as_ref();
            let (name, value) = item.split_once('=').ok_or_else(|| Error::Param {
                name: item.to_string(),
                reason: "expected name=value".into(),
            })?;
            out.set(name.trim(), value.trim());
        }
        Ok(out)
    }

    pub fn set(&mut self, name: &str, value: &str) -> &mut Self {
        self.0.insert(name.to_string(), value.to_string());
        self
    }

    pub fn with(mut self, name: &str, value: &str) -> Self {
        self.set(name, value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.0.get(name).map(String::as_str)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.0.keys().map(String::as_str)
    }
}

/// Parameter values with the theorem's defaults filled in.
pub(crate) struct Resolved<'a> {
    given: &'a Params,
    defaults: &'static [(&'static str, &'static str)],
}

impl<'a> Resolved<'a> {
    pub(crate) fn new(given: &'a Params, defaults: &'static [(&'static str, &'static str)]) -> Result<Self> {
        if let Some(bad) = given.names().find(|n| !defaults.iter().any(|(d, _)| d == n)) {
            let known: Vec<&str> = defaults.iter().map(|(d, _)| *d).collect();
            return Err(Error::Param {
                name: bad.to_string(),
                reason: format!("not accepted here (known: {})", known.join(", ")),
            });
        }
        Ok(Self { given, defaults })
    }

    fn raw(&self, name: &str) -> &str {
        self.given.get(name).unwrap_or_else(|| {
            self.defaults
                .iter()
                .find(|(d, _)| *d == name)
                .map(|(_, v)| *v)
                .expect("parameter declared by its theorem")
        })
    }

    pub(crate) fn ints(&self, name: &str) -> Result<Vec<usize>> {
        parse_int_list(name, self.raw(name))
    }

    pub(crate) fn int(&self, name: &str) -> Result<usize> {
        match self.ints(name)?.as_slice() {
            [v] => Ok(*v),
            _ => Err(Error::Param {
                name: name.to_string(),
                reason: "expected a single integer".into(),
            }),
        }
    }

    pub(crate) fn graphs(&self, name: &str) -> Result<Vec<GraphExpr>> {
        let raw = self.raw(name);
        if raw.trim().is_empty() {
            return Ok(Vec::new());
        }
        raw.split('|').map(GraphExpr::parse).collect()
    }
}

/// Parses `1..3,7` into `[1, 2, 3, 7]`; an empty string gives an empty list.
pub fn parse_int_list(name: &str, raw: &str) -> Result<Vec<usize>> {
    let bad = |reason: String| Error::Param {
        name: name.to_string(),
        reason,
    };
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad(format!("`{}` is not a non-negative integer", s.trim())));
    let mut out = Vec::new();
    for part in raw.split(',').filter(|p| !p.trim().is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let (lo, hi) = (num(lo)?, num(hi.trim_start_matches('='))?);
                if lo > hi {
                    return Err(bad(format!("empty range {lo}..{hi}")));
                }
                out.extend(lo..=hi);
            }
            None => out.push(num(part)?),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn int_lists() {
        assert_eq!(parse_int_list("x", "1..3,7").unwrap(), vec![1, 2, 3, 7]);
        assert_eq!(parse_int_list("x", "4").unwrap(), vec![4]);
        assert_eq!(parse_int_list("x", "2..=4").unwrap(), vec![2, 3, 4]);
        assert!(parse_int_list("x", "").unwrap().is_empty());
        assert!(parse_int_list("x", "5..2").is_err());
        assert!(parse_int_list("x", "a").is_err());
    }

    #[test]
    fn resolution() {
        const DEFAULTS: &[(&str, &str)] = &[("n", "1..3"), ("host", "C6|P7")];
        let given = Params::from_assignments(["n=5"]).unwrap();
        let r = Resolved::new(&given, DEFAULTS).unwrap();
        assert_eq!(r.int("n").unwrap(), 5);
        assert_eq!(r.graphs("host").unwrap().len(), 2);
        let unknown = Params::new().with("q", "1");
        assert!(Resolved::new(&unknown, DEFAULTS).is_err());
        assert!(Params::from_assignments(["oops"]).is_err());
    }
}
