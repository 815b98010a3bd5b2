//! Text format.
//!
//! ```text
//! # comment
//! n 4
//! default 0
//! 1 2 2
//! 1 3 2
//! 2 3 1.5
//! ```
//!
//! Indices are 1-based. Values are integers, decimals or `p/q` fractions and
//! are converted exactly. Graph files use the same header and list edges as
//! `i j` lines; every listed pair gets 1 and every other pair 0.

use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Graph, SymmetricMatrix, Value};
use crate::error::{Error, Result};

/// Parses an exact value: `-12`, `3.25`, `.5`, `7/3`.
pub fn parse_value(s: &str) -> Option<Value> {
    if let Some((p, q)) = s.split_once('/') {
        let p = parse_integer(p)?;
        let q = parse_integer(q)?;
        if q.is_zero() {
            return None;
        }
        return Some(Value::new(p, q));
    }
    let (neg, body) = match s.as_bytes().first()? {
        b'-' => (true, &s[1..]),
        b'+' => (false, &s[1..]),
        _ => (false, s),
    };
    let (whole, frac) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().chain(frac.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer = BigInt::from_str(&digits).ok()?;
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    let v = Value::new(numer, denom);
    Some(if neg { -v } else { v })
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('+').unwrap_or(s);
    let body = digits.strip_prefix('-').unwrap_or(digits);
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::from_str(digits).ok()
}

/// Formats a value so that [`parse_value`] reads it back exactly: integers
/// and terminating decimals as decimals, everything else as `p/q`.
pub fn format_value(v: &Value) -> String {
    if v.is_integer() {
        return v.numer().to_string();
    }
    let mut d = v.denom().clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let (mut twos, mut fives) = (0usize, 0usize);
    while d.is_even() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", v.numer(), v.denom());
    }
    let places = twos.max(fives);
    let scaled = (v * Value::from_integer(num_traits::pow(BigInt::from(10), places))).to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let digits = format!("{:0>width$}", scaled.abs().to_string(), width = places + 1);
    let (whole, frac) = digits.split_at(digits.len() - places);
    format!("{sign}{whole}.{frac}")
}

struct Header {
    n: usize,
    default: Option<Value>,
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(k, raw)| {
        let line = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = line.split_whitespace().collect();
        (!fields.is_empty()).then_some((k + 1, fields))
    })
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_index(line: usize, field: &str, n: usize) -> Result<usize> {
    let idx: usize = field.parse().map_err(|_| parse_err(line, format!("bad index {field:?}")))?;
    if idx == 0 || idx > n {
        return Err(Error::IndexOutOfRange { line, index: idx, n });
    }
    Ok(idx - 1)
}

fn parse_header<'a>(lines: &mut impl Iterator<Item = (usize, Vec<&'a str>)>) -> Result<Header> {
    let (line, fields) = lines.next().ok_or_else(|| parse_err(0, "empty input, expected \"n <N>\""))?;
    match fields.as_slice() {
        ["n", count] => {
            let n: usize = count.parse().map_err(|_| parse_err(line, format!("bad size {count:?}")))?;
            if n == 0 {
                return Err(parse_err(line, "size must be positive"));
            }
            Ok(Header { n, default: None })
        }
        _ => Err(parse_err(line, "expected header \"n <N>\"")),
    }
}

/// Reads a matrix in the text format described in the module docs.
pub fn parse_matrix(text: &str) -> Result<SymmetricMatrix> {
    let mut lines = content_lines(text);
    let mut header = parse_header(&mut lines)?;
    let n = header.n;
    let mut entries = Vec::new();
    let mut seen = std::collections::HashMap::new();
    for (line, fields) in lines {
        match fields.as_slice() {
            ["default", v] => {
                if header.default.is_some() {
                    return Err(parse_err(line, "default given twice"));
                }
                header.default =
                    Some(parse_value(v).ok_or_else(|| parse_err(line, format!("non-numeric value {v:?}")))?);
            }
            [i, j, v] => {
                let i = parse_index(line, i, n)?;
                let j = parse_index(line, j, n)?;
                if i == j {
                    return Err(Error::DiagonalEntry { line, index: i + 1 });
                }
                let v = parse_value(v).ok_or_else(|| parse_err(line, format!("non-numeric value {v:?}")))?;
                let key = (i.min(j), i.max(j));
                if let Some(old) = seen.insert(key, v.clone()) {
                    if old != v {
                        return Err(Error::ConflictingEntry { i: key.0 + 1, j: key.1 + 1 });
                    }
                }
                entries.push((i, j, v));
            }
            _ => return Err(parse_err(line, "expected \"<i> <j> <value>\" or \"default <value>\"")),
        }
    }
    SymmetricMatrix::from_entries(n, header.default, entries)
}

/// Reads a graph: header `n <N>` followed by `i j` edge lines.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let header = parse_header(&mut lines)?;
    let n = header.n;
    let mut edges = Vec::new();
    for (line, fields) in lines {
        match fields.as_slice() {
            [i, j] => {
                let i = parse_index(line, i, n)?;
                let j = parse_index(line, j, n)?;
                if i == j {
                    return Err(Error::DiagonalEntry { line, index: i + 1 });
                }
                edges.push((i, j));
            }
            _ => return Err(parse_err(line, "expected \"<i> <j>\"")),
        }
    }
    Ok(Graph::from_edges(n, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::int;
    use proptest::prelude::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse_value("0.1").unwrap(), Value::new(1.into(), 10.into()));
        assert_eq!(parse_value("-2.50").unwrap(), Value::new((-5).into(), 2.into()));
        assert_eq!(parse_value(".5").unwrap(), Value::new(1.into(), 2.into()));
        assert_eq!(parse_value("7/3").unwrap(), Value::new(7.into(), 3.into()));
        for bad in ["", "-", ".", "1e3", "abc", "1/0", "1.2.3", "--1"] {
            assert!(parse_value(bad).is_none(), "{bad:?}");
        }
    }

    #[test]
    fn value_formatting() {
        assert_eq!(format_value(&int(-3)), "-3");
        assert_eq!(format_value(&parse_value("-0.05").unwrap()), "-0.05");
        assert_eq!(format_value(&parse_value("12.125").unwrap()), "12.125");
        assert_eq!(format_value(&parse_value("1/3").unwrap()), "1/3");
    }

    #[test]
    fn dense_listing_with_zero() {
        let text = "n 4\n1 2 2\n1 3 2\n1 4 0\n2 3 1\n2 4 1\n3 4 1\n";
        let a = parse_matrix(text).unwrap();
        assert_eq!(a, fixtures::unique_simplicial_4());
        assert_eq!(a.get(0, 3), &int(0));
    }

    #[test]
    fn sparse_listing_with_default() {
        let text = "# weight 2 and 1 pairs only\nn 5\ndefault 0\n1 2 2\n1 3 2\n3 5 2\n4 5 2\n1 4 1\n2 4 1\n2 3 1\n3 4 1\n2 5 1\n";
        assert_eq!(parse_matrix(text).unwrap(), fixtures::no_simplicial_5());
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_matrix("n 3\ndefault 0\n1 1 3\n"), Err(Error::DiagonalEntry { .. })));
        assert!(matches!(parse_matrix("size 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("n 3\ndefault 0\n1 2 x\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("n 3\ndefault 0\n1 4 1\n"), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(parse_matrix("n 3\ndefault 0\n1 2 1\n2 1 2\n"), Err(Error::ConflictingEntry { .. })));
        assert!(matches!(parse_matrix("n 3\n1 2 1\n"), Err(Error::MissingEntry { .. })));
        // a repeated pair with the same value is fine
        assert!(parse_matrix("n 2\n1 2 1\n2 1 1\n").is_ok());
    }

    #[test]
    fn graph_files() {
        let g = parse_graph("n 4\n1 2\n2 3\n3 4 # path\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(2, 3));
        assert!(parse_graph("n 4\n1 2 1\n").is_err());
    }

    fn small_matrix() -> impl Strategy<Value = SymmetricMatrix> {
        (1usize..7).prop_flat_map(|n| {
            prop::collection::vec((-50i64..50, 1i64..9), n * (n - 1) / 2).prop_map(move |vals| {
                let mut it = vals.into_iter();
                SymmetricMatrix::from_fn(n, |_, _| {
                    let (p, q) = it.next().unwrap();
                    Value::new(p.into(), q.into())
                })
                .unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(a in small_matrix()) {
            let text = a.to_text();
            let b = parse_matrix(&text).unwrap();
            prop_assert_eq!(&a, &b);
            prop_assert_eq!(b.to_text(), text);
        }
    }
}
