use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// An ordered list of variable names. Shared by reference-counting; two
/// rings are interchangeable when their name lists agree.
///
/// User-facing rings may not use the reserved names: `t` (internal
/// saturation variable) and `y1`, `y2`, … (internal image variables).
/// Internal constructions extend rings with exactly those names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn is_reserved(s: &str) -> bool {
    s == "t" || (s.len() > 1 && s.starts_with('y') && s[1..].chars().all(|c| c.is_ascii_digit()))
}

impl Ring {
    /// A user ring. Rejects duplicate names, malformed identifiers, and the
    /// reserved names `t` / `y<digits>`.
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Ring>> {
        if names.is_empty() {
            return Err(Error::InvalidInput("a ring needs at least one variable".into()));
        }
        let mut vars = Vec::with_capacity(names.len());
        for n in names {
            let n = n.as_ref();
            if !is_identifier(n) {
                return Err(Error::InvalidInput(format!("invalid variable name `{n}`")));
            }
            if is_reserved(n) {
                return Err(Error::InvalidInput(format!(
                    "variable name `{n}` is reserved for internal use"
                )));
            }
            if vars.iter().any(|v| v == n) {
                return Err(Error::InvalidInput(format!("duplicate variable name `{n}`")));
            }
            vars.push(n.to_string());
        }
        Ok(Arc::new(Ring { vars }))
    }

    /// Internal constructor that also admits the reserved names. Used when
    /// adjoining saturation/image variables; never exposed to parsed input.
    pub(crate) fn internal<S: AsRef<str>>(names: &[S]) -> Arc<Ring> {
        Arc::new(Ring { vars: names.iter().map(|s| s.as_ref().to_string()).collect() })
    }

    /// This ring's variables followed by `extra` (reserved names allowed).
    pub(crate) fn extended(&self, extra: &[&str]) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().map(|s| s.to_string()));
        Arc::new(Ring { vars })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, index: usize) -> &str {
        &self.vars[index]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[{}]", self.vars.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_plain_names() {
        let r = Ring::new(&["x1", "x2", "x3"]).unwrap();
        assert_eq!(r.nvars(), 3);
        assert_eq!(r.var_index("x2"), Some(1));
        assert_eq!(r.var_name(2), "x3");
    }

    #[test]
    fn rejects_reserved_and_bad_names() {
        assert!(Ring::new(&["t"]).is_err());
        assert!(Ring::new(&["y1"]).is_err());
        assert!(Ring::new(&["y12"]).is_err());
        assert!(Ring::new(&["x", "x"]).is_err());
        assert!(Ring::new(&["1x"]).is_err());
        assert!(Ring::new(&[] as &[&str]).is_err());
        // `y` alone and `yank` are fine; only y<digits> is reserved
        assert!(Ring::new(&["y", "yank"]).is_ok());
    }

    #[test]
    fn internal_allows_reserved() {
        let r = Ring::new(&["x1"]).unwrap();
        let e = r.extended(&["t"]);
        assert_eq!(e.nvars(), 2);
        assert_eq!(e.var_name(1), "t");
    }
}
