//! Immutable finite simplicial complexes.
//!
//! Vertices are dense ids `0..n` with a token label each. Faces are stored
//! per size in lexicographic order, and that order is the basis order used by
//! every cochain and boundary matrix downstream.

mod face;
mod io;
mod vectors;

use std::collections::{HashMap, HashSet};

pub use face::Face;
pub use io::label_cmp;
pub use vectors::{h_vector, FVector, GVector, HVector};

use crate::error::ComplexError;

#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Face>,
    /// `faces[s]` holds the faces with `s` vertices; `faces[0] == [∅]` unless void.
    faces: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.facets == other.facets
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// Downward closure of `facets` over the given vertex labels. Labels not
    /// used by any face are dropped and the remaining ids are compacted.
    pub fn from_facets(labels: Vec<String>, facets: Vec<Vec<u32>>) -> Result<Self, ComplexError> {
        let n = labels.len() as u32;
        let mut gens = Vec::with_capacity(facets.len());
        for f in facets {
            if let Some(&bad) = f.iter().find(|&&v| v >= n) {
                return Err(ComplexError::VertexOutOfRange(bad));
            }
            gens.push(Face::new(f));
        }
        Ok(Self::from_generators(labels, gens))
    }

    /// Labels `"1".."n"` for ids `0..n`.
    pub fn with_numeric_labels(n: usize, facets: Vec<Vec<u32>>) -> Result<Self, ComplexError> {
        Self::from_facets((1..=n).map(|i| i.to_string()).collect(), facets)
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        Self::from_generators(Vec::new(), vec![Face::empty()])
    }

    /// The complex with no faces at all.
    pub fn void() -> Self {
        SimplicialComplex {
            labels: Vec::new(),
            facets: Vec::new(),
            faces: Vec::new(),
            index: Vec::new(),
        }
    }

    /// The full simplex on `k` vertices labelled `1..=k`.
    pub fn simplex(k: usize) -> Self {
        Self::with_numeric_labels(k, vec![(0..k as u32).collect()]).expect("ids in range")
    }

    /// Boundary of the simplex on `k` vertices.
    pub fn simplex_boundary(k: usize) -> Self {
        let all = Face::new((0..k as u32).collect());
        let facets = all.boundary().map(|(f, _)| f.vertices().to_vec()).collect();
        Self::with_numeric_labels(k, facets).expect("ids in range")
    }

    pub(crate) fn from_generators(labels: Vec<String>, generators: Vec<Face>) -> Self {
        if generators.is_empty() {
            return Self::void();
        }
        let top = generators.iter().map(Face::len).max().unwrap_or(0);
        let mut by_size: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
        for g in &generators {
            if by_size[g.len()].contains(g) {
                continue;
            }
            for s in g.subsets() {
                by_size[s.len()].insert(s);
            }
        }

        // drop unused labels
        let mut used = vec![false; labels.len()];
        for f in by_size.get(1).into_iter().flatten() {
            used[f.vertices()[0] as usize] = true;
        }
        let (labels, by_size) = if used.iter().all(|&u| u) {
            (labels, by_size)
        } else {
            let mut map = vec![None; labels.len()];
            let mut kept = Vec::new();
            for (v, label) in labels.into_iter().enumerate() {
                if used[v] {
                    map[v] = Some(kept.len() as u32);
                    kept.push(label);
                }
            }
            let remapped = by_size
                .into_iter()
                .map(|set| set.iter().map(|f| f.remap(&map)).collect())
                .collect();
            (kept, remapped)
        };

        let faces: Vec<Vec<Face>> = by_size
            .into_iter()
            .map(|set| {
                let mut v: Vec<Face> = set.into_iter().collect();
                v.sort();
                v
            })
            .collect();
        let index: Vec<HashMap<Face, usize>> = faces
            .iter()
            .map(|fs| fs.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect())
            .collect();

        let mut covered: Vec<HashSet<&Face>> = vec![HashSet::new(); faces.len()];
        for s in 1..faces.len() {
            for f in &faces[s] {
                for (b, _) in f.boundary() {
                    let b = &faces[s - 1][index[s - 1][&b]];
                    covered[s - 1].insert(b);
                }
            }
        }
        let covered = &covered;
        let facets = faces
            .iter()
            .enumerate()
            .flat_map(|(s, fs)| fs.iter().filter(move |f| !covered[s].contains(f)))
            .cloned()
            .collect();
        let mut facets: Vec<Face> = facets;
        facets.sort();

        SimplicialComplex {
            labels,
            facets,
            faces,
            index,
        }
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.labels.len()
    }

    /// `dim + 1`, the size of the largest face.
    pub fn d(&self) -> usize {
        self.faces.len().saturating_sub(1)
    }

    pub fn dim(&self) -> isize {
        self.d() as isize - 1
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: u32) -> &str {
        &self.labels[v as usize]
    }

    pub fn vertex_id(&self, label: &str) -> Option<u32> {
        self.labels.iter().position(|l| l == label).map(|i| i as u32)
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        0..self.n() as u32
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    /// Faces with exactly `size` vertices, in canonical order.
    pub fn faces_of_size(&self, size: usize) -> &[Face] {
        self.faces.get(size).map_or(&[], |v| v.as_slice())
    }

    /// Faces of dimension `i` (`i = -1` gives the empty face).
    pub fn faces_of_dim(&self, i: isize) -> &[Face] {
        usize::try_from(i + 1).map_or(&[], |s| self.faces_of_size(s))
    }

    pub fn faces(&self) -> impl Iterator<Item = &Face> {
        self.faces.iter().flatten()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    pub fn contains(&self, f: &Face) -> bool {
        self.face_index(f).is_some()
    }

    /// Position of `f` in the canonical order of its size class.
    pub fn face_index(&self, f: &Face) -> Option<usize> {
        self.index.get(f.len()).and_then(|m| m.get(f).copied())
    }

    pub fn face_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Face, ComplexError> {
        let ids = labels
            .iter()
            .map(|l| {
                self.vertex_id(l.as_ref())
                    .ok_or_else(|| ComplexError::UnknownVertex(l.as_ref().to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Face::new(ids))
    }

    pub fn face_labels(&self, f: &Face) -> Vec<String> {
        f.vertices().iter().map(|&v| self.label(v).to_string()).collect()
    }

    /// `{a b c}` using vertex labels.
    pub fn display_face(&self, f: &Face) -> String {
        format!("{{{}}}", self.face_labels(f).join(" "))
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.faces.iter().map(|v| v.len() as u64).collect())
    }

    pub fn h_vector(&self) -> HVector {
        if self.is_void() {
            return HVector(Vec::new());
        }
        h_vector(&self.f_vector(), self.d()).expect("f-vector length is d+1")
    }

    pub fn is_pure(&self) -> bool {
        let d = self.d();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// `sum_i (-1)^i f_i` over `i = -1..d-1`.
    pub fn reduced_euler_char(&self) -> i64 {
        self.faces
            .iter()
            .enumerate()
            .map(|(s, fs)| {
                let sign = if s % 2 == 1 { 1 } else { -1 };
                sign * fs.len() as i64
            })
            .sum()
    }

    /// Facets containing `f`.
    pub fn facets_containing<'a>(&'a self, f: &'a Face) -> impl Iterator<Item = &'a Face> + 'a {
        self.facets.iter().filter(move |g| f.is_subset_of(g))
    }

    /// `{G : G ∩ F = ∅, G ∪ F ∈ K}` on the vertices it uses.
    pub fn link(&self, f: &Face) -> Result<Self, ComplexError> {
        if !self.contains(f) {
            return Err(ComplexError::NotAFace(self.display_face(f)));
        }
        let gens = self.facets_containing(f).map(|g| g.minus(f)).collect();
        Ok(Self::from_generators(self.labels.clone(), gens))
    }

    pub fn vertex_link(&self, v: u32) -> Result<Self, ComplexError> {
        self.check_vertex(v)?;
        self.link(&Face::vertex(v))
    }

    /// All faces not containing `v`.
    pub fn costar(&self, v: u32) -> Result<Self, ComplexError> {
        self.check_vertex(v)?;
        let gens = self
            .facets
            .iter()
            .map(|g| if g.contains(v) { g.without(v) } else { g.clone() })
            .collect();
        Ok(Self::from_generators(self.labels.clone(), gens))
    }

    /// Faces with at most `j` vertices, i.e. the `(j-1)`-skeleton.
    pub fn skeleton(&self, j: usize) -> Self {
        if self.is_void() {
            return Self::void();
        }
        let gens = self
            .facets
            .iter()
            .filter(|f| f.len() < j)
            .cloned()
            .chain(self.faces_of_size(j).iter().cloned())
            .collect();
        Self::from_generators(self.labels.clone(), gens)
    }

    /// Faces all of whose vertices lie in `w`.
    pub fn induced_subcomplex(&self, w: &[u32]) -> Self {
        let keep = Face::new(w.to_vec());
        let gens = self
            .facets
            .iter()
            .map(|f| Face::new(f.vertices().iter().copied().filter(|&v| keep.contains(v)).collect()))
            .collect();
        Self::from_generators(self.labels.clone(), gens)
    }

    /// Removes every face containing `f` and cones the boundary of `f` joined
    /// with its link from a new vertex. The new vertex gets the next free id
    /// and the first unused label of the form `rho<k>`.
    pub fn stellar_subdivision(&self, f: &Face) -> Result<Self, ComplexError> {
        if !self.contains(f) {
            return Err(ComplexError::NotAFace(self.display_face(f)));
        }
        if f.len() < 2 {
            return Err(ComplexError::SubdivideVertex(self.display_face(f)));
        }
        let rho = self.n() as u32;
        let mut labels = self.labels.clone();
        let k = (1..)
            .find(|k| !labels.iter().any(|l| *l == format!("rho{k}")))
            .expect("unbounded search");
        labels.push(format!("rho{k}"));

        let mut gens = Vec::new();
        for g in &self.facets {
            if !f.is_subset_of(g) {
                gens.push(g.clone());
                continue;
            }
            // g = F ∪ L with L in lk F; maximal faces of ∂F * L, coned from rho
            let rest = g.minus(f);
            for &u in f.vertices() {
                gens.push(rest.union(&f.without(u)).with(rho));
            }
        }
        Ok(Self::from_generators(labels, gens))
    }

    /// Checks `i h_i + (d-i+1) h_{i-1} = sum_v h_{i-1}(lk v)` for `1 <= i <= d`.
    pub fn short_h_identity_check(&self) -> Result<Vec<bool>, ComplexError> {
        if !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let d = self.d() as isize;
        let h = self.h_vector();
        let link_h: Vec<HVector> = self
            .vertices()
            .map(|v| self.vertex_link(v).expect("vertex").h_vector())
            .collect();
        Ok((1..=d)
            .map(|i| {
                let lhs = i as i64 * h.get(i) + (d - i + 1) as i64 * h.get(i - 1);
                let rhs: i64 = link_h.iter().map(|lh| lh.get(i - 1)).sum();
                lhs == rhs
            })
            .collect())
    }

    /// Facets as label lists, vertices and facets in natural label order.
    pub fn label_facets(&self) -> Vec<Vec<String>> {
        let mut out: Vec<Vec<String>> = self
            .facets
            .iter()
            .map(|f| {
                let mut ls = self.face_labels(f);
                ls.sort_by(|a, b| label_cmp(a, b));
                ls
            })
            .collect();
        out.sort_by(|a, b| {
            a.iter()
                .zip(b)
                .map(|(x, y)| label_cmp(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(a.len().cmp(&b.len()))
        });
        out
    }

    /// Equality up to relabelling ids, comparing facets by label.
    pub fn same_faces_as(&self, other: &Self) -> bool {
        self.label_facets() == other.label_facets()
    }

    fn check_vertex(&self, v: u32) -> Result<(), ComplexError> {
        if (v as usize) < self.n() {
            Ok(())
        } else {
            Err(ComplexError::VertexOutOfRange(v))
        }
    }
}
