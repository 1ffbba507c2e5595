//! Stellar subdivisions with a replayable history, and the comparison of
//! `h' - h` before and after.
//!
//! A subdivided complex is written as a `.cplx` file whose leading comment
//! lines `# stellar <labels>` list the subdivided faces in order.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::analysis::bruteforce_hprime;
use crate::classify::LinkTable;
use crate::complex::{Face, SimplicialComplex};
use crate::error::Result;
use crate::linalg::FieldSpec;

const HISTORY_TAG: &str = "stellar";

/// The subdivided faces recorded in a `.cplx` text, oldest first.
pub fn history(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .filter_map(|l| l.trim_start().strip_prefix('#'))
        .filter_map(|c| {
            let mut tokens = c.split_whitespace();
            (tokens.next() == Some(HISTORY_TAG)).then(|| tokens.map(str::to_string).collect())
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    pub face: Vec<String>,
    pub new_vertex: String,
    /// The link of the subdivided face was CM over the given field.
    pub link_cm: bool,
}

pub fn subdivide(k: &SimplicialComplex, face: &Face, spec: FieldSpec) -> Result<Subdivision> {
    let complex = k.stellar_subdivision(face)?;
    let link_cm = LinkTable::new(&k.link(face)?, spec).link_is_cm(&Face::empty());
    let new_vertex = complex.label(k.n() as u32).to_string();
    Ok(Subdivision {
        complex,
        face: k.face_labels(face),
        new_vertex,
        link_cm,
    })
}

/// `.cplx` text of a subdivision, carrying the earlier history forward.
pub fn to_cplx_with_history(earlier: &[Vec<String>], sub: &Subdivision) -> String {
    let mut out = String::new();
    for f in earlier.iter().chain(std::iter::once(&sub.face)) {
        out.push_str(&format!("# {HISTORY_TAG} {}\n", f.join(" ")));
    }
    out.push_str(&sub.complex.to_cplx_string());
    out
}

/// Faces of positive dimension whose link is CM over `spec`.
pub fn admissible_faces(k: &SimplicialComplex, spec: FieldSpec) -> Vec<Face> {
    let table = LinkTable::new(k, spec);
    k.faces()
        .filter(|f| f.len() >= 2 && table.link_is_cm(f))
        .cloned()
        .collect()
}

/// Applies `steps` stellar subdivisions at random admissible faces.
pub fn random_admissible_subdivisions<R: Rng + ?Sized>(
    k: &SimplicialComplex,
    spec: FieldSpec,
    steps: usize,
    rng: &mut R,
) -> Result<(SimplicialComplex, Vec<Vec<String>>)> {
    let mut cur = k.clone();
    let mut faces = Vec::new();
    for _ in 0..steps {
        let candidates = admissible_faces(&cur, spec);
        let Some(f) = candidates.choose(rng) else {
            break;
        };
        let sub = subdivide(&cur, f, spec)?;
        faces.push(sub.face);
        cur = sub.complex;
    }
    Ok((cur, faces))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlStatus {
    /// Every step was at a face with CM link and the differences agree.
    Pass,
    /// Every step was at a face with CM link but the differences disagree.
    Fail,
    /// The invariance is not guaranteed; differences are reported only.
    NotGuaranteed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PlComparison {
    pub status: PlStatus,
    /// `h'_i - h_i` for the first complex.
    pub difference_a: Vec<i64>,
    pub difference_b: Vec<i64>,
    /// Steps replayed from the second file's history.
    pub steps: Vec<Vec<String>>,
    pub notes: Vec<String>,
}

/// `h'_i - h_i` with a brute-force `h'`.
pub fn hprime_minus_h(k: &SimplicialComplex, spec: FieldSpec, seed: u64, trials: usize) -> Result<Vec<i64>> {
    let hp = bruteforce_hprime(k, spec, seed, trials)?;
    Ok(hp
        .values
        .iter()
        .zip(k.h_vector().as_slice())
        .map(|(&a, &b)| a as i64 - b)
        .collect())
}

/// Compares `h' - h` of `a` and `b`. The equality is asserted only when
/// replaying the new history entries of `b` on `a` reproduces `b` and every
/// replayed face had a CM link at the time.
pub fn verify_pl(
    a: &SimplicialComplex,
    a_text: &str,
    b: &SimplicialComplex,
    b_text: &str,
    spec: FieldSpec,
    seed: u64,
    trials: usize,
) -> Result<PlComparison> {
    let ha = history(a_text);
    let hb = history(b_text);
    let mut notes = Vec::new();
    let steps: Vec<Vec<String>> = if hb.starts_with(&ha) {
        hb[ha.len()..].to_vec()
    } else {
        notes.push("history of the second complex does not extend that of the first".into());
        Vec::new()
    };
    let mut guaranteed = notes.is_empty();
    let mut cur = a.clone();
    for step in &steps {
        let face = match cur.face_from_labels(step) {
            Ok(f) => f,
            Err(e) => {
                notes.push(format!("cannot replay step {}: {e}", step.join(" ")));
                guaranteed = false;
                break;
            }
        };
        let sub = subdivide(&cur, &face, spec)?;
        if !sub.link_cm {
            notes.push(format!("link of {} is not CM over {spec}", step.join(" ")));
            guaranteed = false;
        }
        cur = sub.complex;
    }
    if guaranteed && !cur.same_faces_as(b) {
        notes.push("replayed history does not reproduce the second complex".into());
        guaranteed = false;
    }
    let difference_a = hprime_minus_h(a, spec, seed, trials)?;
    let difference_b = hprime_minus_h(b, spec, seed, trials)?;
    let status = match (guaranteed, difference_a == difference_b) {
        (false, _) => PlStatus::NotGuaranteed,
        (true, true) => PlStatus::Pass,
        (true, false) => PlStatus::Fail,
    };
    Ok(PlComparison {
        status,
        difference_a,
        difference_b,
        steps,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data;

    #[test]
    fn history_round_trip() {
        let k = data::load("bd-tetra").unwrap();
        let f = k.face_from_labels(&["1", "2"]).unwrap();
        let sub = subdivide(&k, &f, FieldSpec::default()).unwrap();
        assert!(sub.link_cm);
        let text = to_cplx_with_history(&[], &sub);
        assert_eq!(history(&text), vec![vec!["1".to_string(), "2".to_string()]]);
        let back = SimplicialComplex::parse(&text).unwrap();
        assert!(back.same_faces_as(&sub.complex));
        let cmp = verify_pl(&k, "", &back, &text, FieldSpec::default(), 0, 1).unwrap();
        assert_eq!(cmp.status, PlStatus::Pass);
        assert_eq!(cmp.difference_a, vec![0; 4]);
    }

    #[test]
    fn non_cm_link_is_not_guaranteed() {
        let text = "1 2 3 4\n1 2 5 6\n";
        let k = SimplicialComplex::parse(text).unwrap();
        let e = k.face_from_labels(&["1", "2"]).unwrap();
        let sub = subdivide(&k, &e, FieldSpec::default()).unwrap();
        assert!(!sub.link_cm);
        assert!(!admissible_faces(&k, FieldSpec::default()).contains(&e));
        let out = to_cplx_with_history(&history(text), &sub);
        let cmp = verify_pl(&k, text, &sub.complex, &out, FieldSpec::default(), 0, 1).unwrap();
        assert_eq!(cmp.status, PlStatus::NotGuaranteed);
    }

    #[test]
    fn unrelated_complexes_are_not_guaranteed() {
        let a = data::load("bd-tetra").unwrap();
        let b = data::load("octahedron").unwrap();
        let cmp = verify_pl(&a, "", &b, "", FieldSpec::default(), 0, 1).unwrap();
        assert_eq!(cmp.status, PlStatus::NotGuaranteed);
    }
}
