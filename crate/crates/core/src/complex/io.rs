//! The `.cplx` text format.
//!
//! ```text
//! # comment
//! vertices 4
//! facet 1 2
//! facet 2 3
//! ```
//!
//! Tokens are whitespace separated and `#` starts a comment anywhere on a line.
//! The writer emits facets in lexicographic order so output is byte-stable.

use std::fmt::Write as _;
use std::path::Path;

use super::SimplicialComplex;
use crate::error::{Error, Result};
use crate::VertexSet;

pub fn parse_cplx(text: &str) -> Result<SimplicialComplex> {
    let mut m: Option<usize> = None;
    let mut facets: Vec<(usize, VertexSet)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = content.split_whitespace();
        let Some(keyword) = tokens.next() else { continue };
        let err = |message: String| Error::Parse { line, message };
        match keyword {
            "vertices" => {
                if m.is_some() {
                    return Err(err("duplicate `vertices` line".into()));
                }
                let n = tokens
                    .next()
                    .ok_or_else(|| err("`vertices` needs a count".into()))?
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad vertex count: {e}")))?;
                if tokens.next().is_some() {
                    return Err(err("trailing tokens after vertex count".into()));
                }
                m = Some(n);
            }
            "facet" => {
                let Some(n) = m else {
                    return Err(err("`facet` before `vertices`".into()));
                };
                let mut set = VertexSet::EMPTY;
                let mut count = 0;
                for tok in tokens {
                    let v = tok
                        .parse::<usize>()
                        .map_err(|e| err(format!("bad vertex label `{tok}`: {e}")))?;
                    if v == 0 || v > n {
                        return Err(err(format!("vertex {v} outside 1..={n}")));
                    }
                    if set.contains(v) {
                        return Err(err(format!("vertex {v} repeated in facet")));
                    }
                    set = set.with(v);
                    count += 1;
                }
                if count == 0 {
                    return Err(err("empty facet".into()));
                }
                facets.push((line, set));
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }
    let m = m.ok_or(Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `vertices` line".into(),
    })?;
    let last_line = facets.last().map_or(1, |(l, _)| *l);
    SimplicialComplex::new(m, facets.into_iter().map(|(_, f)| f)).map_err(|e| match e {
        Error::TooManyVertices(_) => Error::Parse {
            line: 1,
            message: e.to_string(),
        },
        other => Error::Parse {
            line: last_line,
            message: other.to_string(),
        },
    })
}

pub fn to_cplx(k: &SimplicialComplex) -> String {
    let mut out = String::new();
    writeln!(out, "vertices {}", k.m()).unwrap();
    for f in k.facets() {
        out.push_str("facet");
        for v in f.iter() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn read_cplx(path: impl AsRef<Path>) -> std::io::Result<Result<SimplicialComplex>> {
    let text = std::fs::read_to_string(path)?;
    Ok(parse_cplx(&text))
}

pub fn write_cplx(path: impl AsRef<Path>, k: &SimplicialComplex) -> std::io::Result<()> {
    std::fs::write(path, to_cplx(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{p28_8, polygon};

    #[test]
    fn writes_sorted_facets() {
        let text = to_cplx(&polygon(4).unwrap());
        assert_eq!(text, "vertices 4\nfacet 1 2\nfacet 1 4\nfacet 2 3\nfacet 3 4\n");
    }

    #[test]
    fn parses_comments_and_whitespace() {
        let text = "# quad\n  vertices   4 # four\n\nfacet 1 2\nfacet\t2 3\nfacet 3 4 \nfacet 4 1\n";
        assert_eq!(parse_cplx(text).unwrap(), polygon(4).unwrap());
    }

    #[test]
    fn round_trip_p28() {
        let k = p28_8();
        assert_eq!(parse_cplx(&to_cplx(&k)).unwrap(), k);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_cplx("vertices 3\nfacet 1 2\nfacet 1 x\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e:?}");
        let e = parse_cplx("facet 1 2\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, .. }));
        let e = parse_cplx("vertices 2\nfacet 1 3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_cplx("# nothing\n").unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_cplx("vertices 3\nfacet 1 2\n").unwrap_err();
        assert!(e.to_string().contains("vertex 3 lies in no facet"), "{e}");
    }
}
