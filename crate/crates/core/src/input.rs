//! Text input for vertex lists.
//!
//! Accepts twelve integers separated by any mix of whitespace, commas,
//! parentheses and square brackets, so both `0 0 0 1 0 0 ...` and
//! `(0,0,0),(1,0,0),...` parse. `#` starts a comment running to end of line.

use crate::error::{Error, Result};
use crate::geometry::Tetrahedron;
use crate::intlin::IntVec3;

fn is_separator(c: char) -> bool {
    c.is_whitespace() || matches!(c, ',' | '(' | ')' | '[' | ']' | ';')
}

fn parse_integers(text: &str) -> Result<Vec<i64>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        for tok in line.split(is_separator).filter(|t| !t.is_empty()) {
            let v = tok
                .parse::<i64>()
                .map_err(|_| Error::Parse(format!("expected an integer, found {tok:?}")))?;
            out.push(v);
        }
    }
    Ok(out)
}

/// Exactly four vertices as twelve integers.
pub fn parse_vertices(text: &str) -> Result<[IntVec3; 4]> {
    let nums = parse_integers(text)?;
    if nums.len() != 12 {
        return Err(Error::Parse(format!("expected 12 integers (4 vertices), found {}", nums.len())));
    }
    Ok(std::array::from_fn(|i| IntVec3::new(nums[3 * i], nums[3 * i + 1], nums[3 * i + 2])))
}

/// Vertex file: one vertex (three integers) per non-blank line.
pub fn parse_vertex_file(text: &str) -> Result<[IntVec3; 4]> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let nums = parse_integers(line)?;
        match nums.len() {
            0 => {}
            3 => rows.push(IntVec3::new(nums[0], nums[1], nums[2])),
            n => {
                return Err(Error::Parse(format!("line {}: expected 3 integers, found {n}", lineno + 1)));
            }
        }
    }
    <[IntVec3; 4]>::try_from(rows)
        .map_err(|rows| Error::Parse(format!("expected 4 vertex lines, found {}", rows.len())))
}

/// Parses and validates a nondegenerate tetrahedron.
pub fn parse_tetrahedron(text: &str) -> Result<Tetrahedron> {
    Tetrahedron::new(parse_vertices(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn plain_and_tuple_syntax() {
        let a = parse_vertices("0 0 0 1 0 0 0 1 0 1 1 5").unwrap();
        let b = parse_vertices("(0,0,0),(1,0,0),(0,1,0),(1,1,5)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a[3], IntVec3::new(1, 1, 5));
        let c = parse_vertices("[[0, 0, 0], [1, 0, 0], [0, 1, 0], [1, 1, 5]]").unwrap();
        assert_eq!(a, c);
        assert_eq!(parse_vertices("-1 -2 -3 4 5 6 7 8 9 1 1 1").unwrap()[0], IntVec3::new(-1, -2, -3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_vertices("0 0 0"), Err(Error::Parse(_))));
        assert!(matches!(parse_vertices("0 0 0 1 0 0 0 1 0 1 1 x"), Err(Error::Parse(_))));
        assert!(matches!(parse_vertices("0 0 0 1 0 0 0 1 0 1 1 5 6"), Err(Error::Parse(_))));
        assert!(matches!(parse_vertices("99999999999999999999 0 0 1 0 0 0 1 0 1 1 5"), Err(Error::Parse(_))));
        assert!(matches!(parse_vertices(""), Err(Error::Parse(_))));
    }

    #[test]
    fn vertex_file_format() {
        let text = "# T(1,1,5)\n0 0 0\n1 0 0\n\n0 1 0\n1 1 5  # apex\n";
        assert_eq!(parse_vertex_file(text).unwrap(), parse_vertices("0 0 0 1 0 0 0 1 0 1 1 5").unwrap());
        assert!(parse_vertex_file("0 0 0\n1 0 0\n0 1 0\n").is_err());
        assert!(parse_vertex_file("0 0 0 1\n1 0 0\n0 1 0\n1 1 1\n").is_err());
    }

    #[test]
    fn degenerate_rejected() {
        assert_eq!(parse_tetrahedron("0 0 0 1 0 0 2 0 0 0 0 1"), Err(Error::Degenerate));
    }

    proptest! {
        #[test]
        fn never_panics(s in "\\PC*") {
            let _ = parse_vertices(&s);
            let _ = parse_vertex_file(&s);
        }

        #[test]
        fn formatted_vertices_parse_back(vs in prop::array::uniform12(any::<i64>())) {
            let text = vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
            let parsed = parse_vertices(&text).unwrap();
            let flat: Vec<i64> = parsed.iter().flat_map(|p| p.to_array()).collect();
            prop_assert_eq!(flat, vs.to_vec());
        }
    }
}
