//! Plain-text code files.
//!
//! ```text
//! # optional comments
//! field: p=2 s=2 modulus=1,1,1
//! 1 0 2 3
//! 0 1 3 2
//! ```
//!
//! The header names the field; `modulus` lists the ascending coefficients of
//! the defining polynomial and defaults to the standard choice. Each further
//! non-empty line is a generator row of element indices in `[0, q)`.

use std::fmt::Write;
use std::sync::Arc;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::FiniteField;
use crate::matrix::Matrix;

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, msg: msg.into() }
}

fn parse_header(line: usize, text: &str) -> Result<FiniteField> {
    let rest = text.strip_prefix("field:").ok_or_else(|| syntax(line, "expected a `field: p=<p> s=<s>` header"))?;
    let (mut p, mut s, mut modulus) = (None, None, None);
    for token in rest.split_whitespace() {
        let (key, value) =
            token.split_once('=').ok_or_else(|| syntax(line, format!("expected key=value, got `{token}`")))?;
        let number = |v: &str| v.parse::<u32>().map_err(|_| syntax(line, format!("bad number `{v}`")));
        match key {
            "p" => p = Some(number(value)?),
            "s" => s = Some(number(value)?),
            "modulus" => modulus = Some(value.split(',').map(number).collect::<Result<Vec<u32>>>()?),
            _ => return Err(syntax(line, format!("unknown header key `{key}`"))),
        }
    }
    let p = p.ok_or_else(|| syntax(line, "missing p"))?;
    let s = s.ok_or_else(|| syntax(line, "missing s"))?;
    FiniteField::new(p, s, modulus.as_deref())
}

/// Parses a code file; syntax errors carry 1-based line numbers.
pub fn parse_code_file(text: &str) -> Result<LinearCode> {
    let mut field: Option<Arc<FiniteField>> = None;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let Some(f) = &field else {
            field = Some(Arc::new(parse_header(line, content)?));
            continue;
        };
        let row = content
            .split_whitespace()
            .map(|t| {
                let v: u32 = t.parse().map_err(|_| syntax(line, format!("bad entry `{t}`")))?;
                if v >= f.q() {
                    return Err(syntax(line, format!("entry {v} is not below q = {}", f.q())));
                }
                Ok(v)
            })
            .collect::<Result<Vec<u32>>>()?;
        if let Some(first) = rows.first() {
            if first.len() != row.len() {
                return Err(syntax(line, format!("row has {} entries, expected {}", row.len(), first.len())));
            }
        }
        rows.push(row);
    }
    let field = field.ok_or_else(|| syntax(1, "missing field header"))?;
    if rows.is_empty() {
        return Err(syntax(text.lines().count().max(1), "no generator rows"));
    }
    LinearCode::new(Matrix::from_rows(field, &rows)?)
}

/// Renders `code` in the format read by [`parse_code_file`].
pub fn write_code_file(code: &LinearCode) -> String {
    let f = code.field();
    let mut out = format!("field: p={} s={}", f.p(), f.s());
    if f.s() > 1 {
        let coeffs: Vec<String> = f.modulus().iter().map(u32::to_string).collect();
        write!(out, " modulus={}", coeffs.join(",")).expect("writing to a String");
    }
    out.push('\n');
    for row in code.generator().to_rows() {
        let cells: Vec<String> = row.iter().map(u32::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples::relative_duality_pairs;
    use crate::test_support::*;
    use proptest::prelude::*;

    #[test]
    fn identity_rows() {
        let c = parse_code_file("field: p=2 s=1\n1 0 0\n0 1 0\n0 0 1\n").unwrap();
        assert_eq!((c.n(), c.k()), (3, 3));
    }

    #[test]
    fn example_pair_file() {
        let text = "# C1\nfield: p=2 s=1\n\
            0 1 0 1 0 0 1 0 0 0\n\
            1 1 1 1 1 1 1 0 1 0\n\
            0 0 0 0 0 0 1 1 0 1   # third row\n\
            1 0 0 1 0 0 0 0 0 0\n\n\
            0 0 1 1 0 1 0 0 0 0\n";
        let c = parse_code_file(text).unwrap();
        assert_eq!((c.n(), c.k(), c.field().q()), (10, 5, 2));
        assert_eq!(c.generator(), relative_duality_pairs()[0].0.generator());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_code_file("field: p=4 s=1\n1 0\n"), Err(Error::NonPrime(4)));
        assert_eq!(parse_code_file("field: p=2 s=1\n1 0\n1 0\n"), Err(Error::RankDeficient { rank: 1, rows: 2 }));
        assert!(matches!(parse_code_file("1 0\n"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(parse_code_file("field: p=2 s=1\n1 0\n0 2\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse_code_file("field: p=2 s=1\n1 0\n0 1 1\n"), Err(Error::Syntax { line: 3, .. })));
        assert!(matches!(parse_code_file("# c\nfield: p=2\n1\n"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(parse_code_file("field: p=2 s=1\n"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_code_file("field: p=2 s=1 colour=red\n1\n"), Err(Error::Syntax { line: 1, .. })));
        assert_eq!(parse_code_file("field: p=2 s=2 modulus=1,0,1\n1 1\n"), Err(Error::ReducibleModulus(2)));
    }

    #[test]
    fn extension_field_with_modulus() {
        let c = parse_code_file("field: p=3 s=2 modulus=2,2,1\n1 0 8 5\n0 1 4 7\n").unwrap();
        assert_eq!(c.field().q(), 9);
        assert_eq!(c.field().modulus(), &[2, 2, 1]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip(seed in any::<u64>()) {
            let mut rng = seeded(seed);
            let c = random_code(&mut rng, 10, 5);
            let back = parse_code_file(&write_code_file(&c)).unwrap();
            prop_assert_eq!(back.generator(), c.generator());
        }
    }
}
