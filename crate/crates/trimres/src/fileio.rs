//! The ideal file format and small text renderers.
//!
//! An ideal file is a `char <p>` header (0 selects the rationals) followed
//! by one generator per line in the polynomial syntax; `#` starts a
//! comment. Every verb that emits an ideal writes this format and every
//! verb that consumes one accepts it.

use crate::error::{Error, Result};
use crate::field::{is_prime, Field};
use crate::ideal::Ideal;
use crate::poly::{parse_poly, HomogPoly};

pub fn field_from_char(ch: u64) -> Result<Field> {
    if ch == 0 {
        return Ok(Field::Rationals);
    }
    if !is_prime(ch) {
        return Err(Error::Invalid(format!(
            "characteristic {} is not prime",
            ch
        )));
    }
    Ok(Field::Fp(ch))
}

pub fn render_ideal(ideal: &Ideal) -> String {
    let mut out = format!("char {}\n", ideal.field.characteristic());
    for g in &ideal.generators {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_ideal(text: &str) -> Result<Ideal> {
    let mut field: Option<Field> = None;
    let mut gens: Vec<HomogPoly> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if field.is_none() {
            let rest = line.strip_prefix("char").ok_or_else(|| {
                Error::Parse(format!(
                    "line {}: expected `char <p>` header, found `{}`",
                    lineno + 1,
                    line
                ))
            })?;
            let ch: u64 = rest.trim().parse().map_err(|_| {
                Error::Parse(format!("line {}: bad characteristic `{}`", lineno + 1, rest))
            })?;
            field = Some(field_from_char(ch)?);
            continue;
        }
        let f = field.unwrap();
        gens.push(parse_poly(f, line)?);
    }
    let field = field.ok_or_else(|| Error::Parse("missing `char <p>` header".into()))?;
    if gens.is_empty() {
        return Err(Error::Parse("ideal file has no generators".into()));
    }
    Ok(Ideal::new(field, gens))
}

pub fn read_ideal_file(path: &std::path::Path) -> Result<Ideal> {
    let text = std::fs::read_to_string(path)?;
    parse_ideal(&text)
}

pub fn write_ideal_file(path: &std::path::Path, ideal: &Ideal) -> Result<()> {
    std::fs::write(path, render_ideal(ideal))?;
    Ok(())
}

/// Plain text grid for a polynomial matrix, columns padded.
pub fn render_matrix(entries: &[Vec<HomogPoly>]) -> String {
    if entries.is_empty() {
        return "(empty)\n".into();
    }
    let cells: Vec<Vec<String>> = entries
        .iter()
        .map(|row| row.iter().map(|e| e.to_string()).collect())
        .collect();
    let cols = cells[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(1))
        .collect();
    let mut out = String::new();
    for row in &cells {
        out.push('[');
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                out.push_str("  ");
            }
            out.push_str(&format!("{:>w$}", cell, w = widths[j]));
        }
        out.push_str("]\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_file_roundtrip() {
        let f = Field::Fp(32003);
        let ideal = Ideal::new(
            f,
            vec![
                parse_poly(f, "x^2*y - 3*z^3").unwrap(),
                parse_poly(f, "y^4").unwrap(),
            ],
        );
        let text = render_ideal(&ideal);
        let back = parse_ideal(&text).unwrap();
        assert_eq!(back.field, f);
        assert_eq!(back.generators, ideal.generators);
    }

    #[test]
    fn parse_rejects_bad_headers() {
        assert!(parse_ideal("x + y\n").is_err());
        assert!(parse_ideal("char 32001\nx\n").is_err());
        assert!(parse_ideal("char 32003\n").is_err());
    }

    #[test]
    fn comments_and_blanks_are_skipped() {
        let text = "# a comment\nchar 101\n\nx^2 # inline\n";
        let ideal = parse_ideal(text).unwrap();
        assert_eq!(ideal.field, Field::Fp(101));
        assert_eq!(ideal.generators.len(), 1);
    }

    #[test]
    fn rationals_header() {
        let ideal = parse_ideal("char 0\nx - y\n").unwrap();
        assert_eq!(ideal.field, Field::Rationals);
    }
}
