//! Flat `key=value` reports, one entry per line.

use std::fmt;

use crate::error::{Error, Result};

/// Ordered list of `key=value` entries. Keys are unique.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FlatMap(Vec<(String, String)>);

impl FlatMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends an entry. Panics on a malformed key or value, or a repeated key.
    pub fn insert(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        let key = key.into();
        let value = value.to_string();
        assert!(
            !key.is_empty() && !key.contains(['=', '\n', '#']) && key.trim() == key,
            "bad report key {key:?}"
        );
        assert!(!value.contains('\n'), "report values are single-line");
        assert!(self.get(&key).is_none(), "duplicate report key {key:?}");
        self.0.push((key, value));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn entries(&self) -> &[(String, String)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for FlatMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in &self.0 {
            writeln!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

/// Reads the output of [`FlatMap`]'s `Display`. Blank lines and `#` comments
/// are skipped.
pub fn parse_flat_map(text: &str) -> Result<FlatMap> {
    let mut map = FlatMap::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |message: &str| Error::Parse { line: k + 1, message: message.into() };
        let (key, value) = line.split_once('=').ok_or_else(|| bad("expected key=value"))?;
        if key.is_empty() || key.trim() != key {
            return Err(bad("empty or padded key"));
        }
        if map.get(key).is_some() {
            return Err(bad("duplicate key"));
        }
        map.0.push((key.to_string(), value.to_string()));
    }
    Ok(map)
}

/// `yes` or `no`.
pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
