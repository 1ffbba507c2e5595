//! Where a complex sits among CM, Buchsbaum, homology manifolds, spaces and
//! pseudomanifolds with isolated singularities, over a chosen field.
//!
//! Every predicate is decided from the reduced Betti numbers of all face
//! links: `lk F` is CM iff for every face `G ⊇ F`, `β̃_i(lk G) = 0` whenever
//! `i < dim(lk F) - |G - F|`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex};
use crate::homology::{reduced_betti, BettiTable, SingularCohomology};
use crate::linalg::{Field, FieldSpec};

/// Reduced Betti numbers of the link of every face, the empty face included.
#[derive(Clone, Debug)]
pub struct LinkTable {
    pub field: FieldSpec,
    faces: Vec<Face>,
    betti: Vec<BettiTable>,
    index: HashMap<Face, usize>,
    /// `d` of each link, i.e. the largest `|G - F|` over faces `G ⊇ F`.
    link_d: Vec<usize>,
    pure_link: Vec<bool>,
}

impl LinkTable {
    pub fn new(k: &SimplicialComplex, spec: FieldSpec) -> Self {
        crate::with_field!(spec, f => Self::build(&f, k))
    }

    fn build<F: Field>(field: &F, k: &SimplicialComplex) -> Self {
        let faces: Vec<Face> = k.faces().cloned().collect();
        let betti = faces
            .iter()
            .map(|g| reduced_betti(field, &k.link(g).expect("face of k")))
            .collect();
        let index = faces.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        let link_d = faces
            .iter()
            .map(|g| k.facets_containing(g).map(|h| h.len() - g.len()).max().unwrap_or(0))
            .collect::<Vec<_>>();
        let pure_link = faces
            .iter()
            .zip(&link_d)
            .map(|(g, &ld)| k.facets_containing(g).all(|h| h.len() - g.len() == ld))
            .collect();
        LinkTable {
            field: field.spec(),
            faces,
            betti,
            index,
            link_d,
            pure_link,
        }
    }

    pub fn betti(&self, f: &Face) -> Option<&BettiTable> {
        self.index.get(f).map(|&i| &self.betti[i])
    }

    fn pos(&self, f: &Face) -> usize {
        *self.index.get(f).expect("face of the complex")
    }

    fn above<'a>(&'a self, f: &'a Face) -> impl Iterator<Item = (&'a Face, &'a BettiTable)> + 'a {
        self.faces
            .iter()
            .zip(&self.betti)
            .filter(move |(g, _)| f.is_subset_of(g))
    }

    /// `lk F` is CM.
    pub fn link_is_cm(&self, f: &Face) -> bool {
        let top = self.link_d[self.pos(f)] as isize;
        self.above(f).all(|(g, b)| {
            let bound = top - (g.len() - f.len()) as isize - 1;
            (-1..bound).all(|i| b.get(i) == 0)
        })
    }

    /// `lk F` is a homology sphere.
    pub fn link_is_sphere(&self, f: &Face) -> bool {
        let top = self.link_d[self.pos(f)] as isize;
        self.link_is_cm(f)
            && self.above(f).all(|(g, b)| b.get(top - (g.len() - f.len()) as isize - 1) == 1)
    }

    pub fn link_is_pure(&self, f: &Face) -> bool {
        self.pure_link[self.pos(f)]
    }

    /// `lk F` is Buchsbaum: pure with CM vertex links.
    pub fn link_is_buchsbaum(&self, f: &Face, k: &SimplicialComplex) -> bool {
        self.link_is_pure(f) && self.link_vertices(f, k).all(|g| self.link_is_cm(&g))
    }

    /// `lk F` is a homology manifold: pure with homology-sphere vertex links.
    pub fn link_is_homology_manifold(&self, f: &Face, k: &SimplicialComplex) -> bool {
        self.link_is_pure(f) && self.link_vertices(f, k).all(|g| self.link_is_sphere(&g))
    }

    /// Faces `F ∪ {v}` for the vertices `v` of `lk F`.
    fn link_vertices<'a>(&'a self, f: &'a Face, k: &'a SimplicialComplex) -> impl Iterator<Item = Face> + 'a {
        k.vertices()
            .filter(move |&v| !f.contains(v))
            .map(move |v| f.with(v))
            .filter(move |g| self.index.contains_key(g))
    }

    /// Largest `j` with `β̃_i(lk F) = 0` for all `i < j - |F| - 1` and all
    /// faces with `|F| <= j`, which is when the `(j-1)`-skeleton is CM.
    pub fn skeleton_depth(&self, d: usize) -> usize {
        (0..=d)
            .rev()
            .find(|&j| {
                self.faces.iter().zip(&self.betti).all(|(f, b)| {
                    f.len() > j || (-1..j as isize - f.len() as isize - 1).all(|i| b.get(i) == 0)
                })
            })
            .unwrap_or(0)
    }
}

pub fn is_pure(k: &SimplicialComplex) -> bool {
    k.is_pure()
}

/// Pure, and every codimension-one face lies in exactly two facets.
pub fn is_pseudomanifold(k: &SimplicialComplex) -> bool {
    if k.is_void() || !k.is_pure() || k.d() == 0 {
        return false;
    }
    k.faces_of_size(k.d() - 1)
        .iter()
        .all(|r| k.facets_containing(r).count() == 2)
}

/// A pseudomanifold whose faces of codimension at least two have connected
/// links.
pub fn is_normal_pseudomanifold(k: &SimplicialComplex) -> bool {
    if !is_pseudomanifold(k) {
        return false;
    }
    let d = k.d();
    k.faces()
        .filter(|f| f.len() + 2 <= d)
        .all(|f| reduced_betti_connected(&k.link(f).expect("face")))
}

fn reduced_betti_connected(k: &SimplicialComplex) -> bool {
    reduced_betti(&crate::linalg::PrimeField::new(2).expect("2 is prime"), k).get(0) == 0
}

pub fn is_cm(k: &SimplicialComplex, spec: FieldSpec) -> bool {
    !k.is_void() && LinkTable::new(k, spec).link_is_cm(&Face::empty())
}

pub fn is_homology_sphere(k: &SimplicialComplex, spec: FieldSpec) -> bool {
    !k.is_void() && LinkTable::new(k, spec).link_is_sphere(&Face::empty())
}

pub fn is_buchsbaum(k: &SimplicialComplex, spec: FieldSpec) -> bool {
    Classification::new(k, spec).buchsbaum
}

pub fn is_homology_manifold(k: &SimplicialComplex, spec: FieldSpec) -> bool {
    Classification::new(k, spec).homology_manifold
}

pub fn has_isolated_singularities(k: &SimplicialComplex, spec: FieldSpec) -> bool {
    Classification::new(k, spec).isolated_singularities
}

pub fn is_pseudomanifold_with_isolated_singularities(k: &SimplicialComplex, spec: FieldSpec) -> bool {
    Classification::new(k, spec).pseudomanifold_isolated
}

/// Largest `j` such that the `(j-1)`-skeleton is CM, from the definition.
pub fn depth(k: &SimplicialComplex, spec: FieldSpec) -> usize {
    if k.is_void() {
        return 0;
    }
    (0..=k.d())
        .rev()
        .find(|&j| is_cm(&k.skeleton(j), spec))
        .unwrap_or(0)
}

/// Depth of a space with isolated singularities from `β̃(Δ)` and the vertex
/// links: the largest `j <= d` with `β̃_i(Δ) = 0` for `i < j-1` and
/// `β̃_i(lk v) = 0` for `i < j-2`.
pub fn depth_from_homology(d: usize, betti: &BettiTable, link_betti: &[BettiTable]) -> usize {
    (0..=d)
        .rev()
        .find(|&j| {
            let j = j as isize;
            (-1..j - 1).all(|i| betti.get(i) == 0)
                && link_betti.iter().all(|b| (-1..j - 2).all(|i| b.get(i) == 0))
        })
        .unwrap_or(0)
}

/// Per-vertex link flags and the global hierarchy flags, without the
/// homologically isolated test.
#[derive(Clone, Debug)]
struct Classification {
    pure: bool,
    buchsbaum: bool,
    homology_manifold: bool,
    isolated_singularities: bool,
    pseudomanifold_isolated: bool,
    link_cm: Vec<bool>,
    link_sphere: Vec<bool>,
    table: LinkTable,
}

impl Classification {
    fn new(k: &SimplicialComplex, spec: FieldSpec) -> Self {
        let table = LinkTable::new(k, spec);
        let pure = !k.is_void() && k.is_pure();
        let link_cm: Vec<bool> = k.vertices().map(|v| table.link_is_cm(&Face::vertex(v))).collect();
        let link_sphere: Vec<bool> = k
            .vertices()
            .map(|v| table.link_is_sphere(&Face::vertex(v)))
            .collect();
        let buchsbaum_links = k
            .vertices()
            .all(|v| table.link_is_buchsbaum(&Face::vertex(v), k));
        let manifold_links = k
            .vertices()
            .all(|v| table.link_is_homology_manifold(&Face::vertex(v), k));
        Classification {
            pure,
            buchsbaum: pure && link_cm.iter().all(|&b| b),
            homology_manifold: pure && link_sphere.iter().all(|&b| b),
            isolated_singularities: pure && buchsbaum_links,
            pseudomanifold_isolated: pure && manifold_links,
            link_cm,
            link_sphere,
            table,
        }
    }
}

/// The full classification of one complex over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SingularityReport {
    pub field: FieldSpec,
    pub pure: bool,
    pub pseudomanifold: bool,
    pub normal: bool,
    pub cm: bool,
    pub homology_sphere: bool,
    pub homology_manifold: bool,
    pub buchsbaum: bool,
    pub isolated_singularities: bool,
    pub pseudomanifold_isolated: bool,
    /// Only decided for spaces with isolated singularities.
    pub homologically_isolated: Option<bool>,
    /// Vertices whose link is not CM.
    pub singular_vertices: Vec<u32>,
    /// Vertices whose link is not a homology sphere.
    pub pseudomanifold_singular_vertices: Vec<u32>,
    pub depth: usize,
    /// Depth from the Betti numbers of `Δ` and its vertex links; agrees with
    /// `depth` for spaces with isolated singularities.
    pub depth_homological: usize,
    /// Why stronger classes were ruled out early.
    pub notes: Vec<String>,
}

pub fn classify(k: &SimplicialComplex, spec: FieldSpec) -> SingularityReport {
    let c = Classification::new(k, spec);
    let empty = Face::empty();
    let mut notes = Vec::new();
    if !c.pure {
        notes.push("not pure: Buchsbaum and stronger classes do not apply".to_string());
    }
    let cm = !k.is_void() && c.table.link_is_cm(&empty);
    let homology_sphere = !k.is_void() && c.table.link_is_sphere(&empty);
    let homologically_isolated = if c.isolated_singularities {
        Some(crate::with_field!(spec, f => {
            let sc = SingularCohomology::new(&f, k);
            (0..k.d() as isize - 1).all(|i| sc.images_independent(i))
        }))
    } else {
        None
    };
    let singular_vertices = k.vertices().filter(|&v| !c.link_cm[v as usize]).collect();
    let pseudomanifold_singular_vertices = k.vertices().filter(|&v| !c.link_sphere[v as usize]).collect();
    let betti = c.table.betti(&empty).cloned().unwrap_or(BettiTable {
        field: spec,
        values: Vec::new(),
    });
    let link_betti: Vec<BettiTable> = k
        .vertices()
        .map(|v| c.table.betti(&Face::vertex(v)).expect("vertex").clone())
        .collect();
    SingularityReport {
        field: spec,
        pure: c.pure,
        pseudomanifold: is_pseudomanifold(k),
        normal: is_normal_pseudomanifold(k),
        cm,
        homology_sphere,
        homology_manifold: c.homology_manifold,
        buchsbaum: c.buchsbaum,
        isolated_singularities: c.isolated_singularities,
        pseudomanifold_isolated: c.pseudomanifold_isolated,
        homologically_isolated,
        singular_vertices,
        pseudomanifold_singular_vertices,
        depth: if k.is_void() { 0 } else { c.table.skeleton_depth(k.d()) },
        depth_homological: depth_from_homology(k.d(), &betti, &link_betti),
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse(text).unwrap()
    }

    const RP2: &str = "1 2 3\n1 3 4\n1 4 5\n1 5 6\n1 6 2\n2 3 5\n3 4 6\n4 5 2\n5 6 3\n6 2 4";

    #[test]
    fn sphere_is_everything() {
        let s = SimplicialComplex::simplex_boundary(4);
        let r = classify(&s, FieldSpec::Prime(2));
        assert!(r.cm && r.homology_sphere && r.homology_manifold && r.buchsbaum);
        assert!(r.pseudomanifold && r.normal && r.isolated_singularities);
        assert_eq!(r.homologically_isolated, Some(true));
        assert!(r.singular_vertices.is_empty());
        assert_eq!(r.depth, 3);
    }

    #[test]
    fn projective_plane_depends_on_field() {
        let p = k(RP2);
        assert!(is_cm(&p, FieldSpec::Rationals));
        assert!(!is_cm(&p, FieldSpec::Prime(2)));
        assert!(is_homology_manifold(&p, FieldSpec::Prime(2)));
        assert!(!is_homology_sphere(&p, FieldSpec::Prime(2)));
    }

    #[test]
    fn disconnected_complexes() {
        let c = k("1 2 3\n4 5 6");
        assert!(!is_cm(&c, FieldSpec::Rationals));
        assert!(is_buchsbaum(&c, FieldSpec::Rationals));
        assert_eq!(depth(&c, FieldSpec::Rationals), 1);
        assert_eq!(classify(&c, FieldSpec::Rationals).depth, 1);
    }

    #[test]
    fn pinched_torus_is_not_normal() {
        let c = k("1 2 4\n2 4 5\n2 3 5\n3 5 6\n1 3 6\n1 4 6\na 1 2\na 2 3\na 1 3\na 4 5\na 5 6\na 4 6");
        let r = classify(&c, FieldSpec::Rationals);
        assert!(r.pseudomanifold);
        assert!(!r.normal);
        assert!(r.pseudomanifold_isolated);
        assert_eq!(r.singular_vertices, vec![c.vertex_id("a").unwrap()]);
    }

    #[test]
    fn non_pure_is_total() {
        let c = k("1 2 3\n3 4");
        let r = classify(&c, FieldSpec::Rationals);
        assert!(!r.pure && !r.buchsbaum && !r.isolated_singularities);
        assert_eq!(r.homologically_isolated, None);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn skeleton_depth_matches_definition() {
        for text in [RP2, "1 2 3\n4 5 6", "1 2 3\n1 4 5", "1 2 3\n3 4"] {
            let c = k(text);
            for spec in [FieldSpec::Rationals, FieldSpec::Prime(2)] {
                assert_eq!(classify(&c, spec).depth, depth(&c, spec), "{text}");
            }
        }
    }
}
