//! The `.cplx` facet-list format: one facet per line as whitespace-separated
//! vertex tokens, `#` starts a comment.

use std::cmp::Ordering;
use std::collections::HashMap;

use super::{Face, SimplicialComplex};
use crate::error::ParseError;

/// Numeric labels compare as numbers and sort before non-numeric ones.
pub fn label_cmp(a: &str, b: &str) -> Ordering {
    match (a.parse::<u64>(), b.parse::<u64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y).then_with(|| a.cmp(b)),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

impl SimplicialComplex {
    /// Reads a facet list. Vertex ids follow first appearance.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut ids: HashMap<&str, u32> = HashMap::new();
        let mut labels = Vec::new();
        let mut facets = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let mut facet = Vec::new();
            for token in body.split_whitespace() {
                let id = *ids.entry(token).or_insert_with(|| {
                    labels.push(token.to_string());
                    labels.len() as u32 - 1
                });
                if facet.contains(&id) {
                    return Err(ParseError::DuplicateVertex {
                        line: lineno + 1,
                        token: token.to_string(),
                    });
                }
                facet.push(id);
            }
            if !facet.is_empty() {
                facets.push(Face::new(facet));
            }
        }
        if facets.is_empty() {
            return Err(ParseError::Empty);
        }
        Ok(Self::from_generators(labels, facets))
    }

    /// Facets in natural label order, one per line.
    pub fn to_cplx_string(&self) -> String {
        let mut out = String::new();
        for f in self.label_facets() {
            out.push_str(&f.join(" "));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comments_and_blank_lines() {
        let c = SimplicialComplex::parse("# header\n\n1 2 3 # trailing\n  \n2 3 4\n").unwrap();
        assert_eq!(c.facets().len(), 2);
        assert_eq!(c.labels(), &["1", "2", "3", "4"]);
    }

    #[test]
    fn ids_follow_first_appearance() {
        let c = SimplicialComplex::parse("b a\nc a").unwrap();
        assert_eq!(c.labels(), &["b", "a", "c"]);
    }

    #[test]
    fn parse_errors() {
        assert_eq!(SimplicialComplex::parse("# nothing\n").unwrap_err(), ParseError::Empty);
        assert_eq!(
            SimplicialComplex::parse("1 2\n3 4 3").unwrap_err(),
            ParseError::DuplicateVertex {
                line: 2,
                token: "3".into()
            }
        );
    }

    #[test]
    fn writer_sorts_naturally() {
        let c = SimplicialComplex::parse("10 2 1\n2 9 10").unwrap();
        assert_eq!(c.to_cplx_string(), "1 2 10\n2 9 10\n");
        let again = SimplicialComplex::parse(&c.to_cplx_string()).unwrap();
        assert!(again.same_faces_as(&c));
    }
}
