//! Reduced simplicial (co)homology over a field, the relative groups
//! `H^i(K, cost v)`, the maps they induce into `H^i(K)`, and the
//! kernel/cokernel dimensions of weighted sums of those maps.
//!
//! Cochains use the canonical face order of the complex and the coboundary
//! `(δc)(F) = sum_k (-1)^k c(F minus its k-th vertex)`. Degree `-1` carries the
//! augmentation, so `H^0` of the absolute complex is reduced cohomology.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::classify;
use crate::complex::{Face, SimplicialComplex};
use crate::error::PreconditionError;
use crate::linalg::{
    image_basis, kernel_basis, rank, ColumnCoordinates, EchelonBasis, Field, FieldSpec,
    LinearForm, Matrix,
};

/// `β̃_{-1}, ..., β̃_{d-1}` over one field.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: FieldSpec,
    /// Entry `k` is `β̃_{k-1}`.
    pub values: Vec<usize>,
}

impl BettiTable {
    /// `β̃_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.values.get(k).copied())
            .unwrap_or(0)
    }

    /// Alternating sum, which must equal the reduced Euler characteristic.
    pub fn euler_char(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(k, &b)| if k % 2 == 1 { b as i64 } else { -(b as i64) })
            .sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.values.iter().all(|&b| b == 0)
    }
}

fn signed<F: Field>(field: &F, positive: bool) -> F::Elem {
    if positive {
        field.one()
    } else {
        field.neg(&field.one())
    }
}

/// Matrix of `δ: C^{lower} -> C^{upper}` for faces one size apart. Faces of
/// `lower` missing from `lower_index` are treated as zero cochains.
fn coboundary<F: Field>(
    field: &F,
    upper: &[Face],
    lower_len: usize,
    lower_index: &HashMap<Face, usize>,
) -> Matrix<F::Elem> {
    let mut m = Matrix::zeros(field, upper.len(), lower_len);
    for (r, g) in upper.iter().enumerate() {
        for (b, positive) in g.boundary() {
            if let Some(&c) = lower_index.get(&b) {
                m[(r, c)] = signed(field, positive);
            }
        }
    }
    m
}

fn index_of(faces: &[Face]) -> HashMap<Face, usize> {
    faces.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect()
}

/// Boundary map `∂: C_{size} -> C_{size-1}` (rows are the smaller faces).
pub fn boundary_matrix<F: Field>(field: &F, k: &SimplicialComplex, size: usize) -> Matrix<F::Elem> {
    assert!(size >= 1);
    let lower = k.faces_of_size(size - 1);
    coboundary(field, k.faces_of_size(size), lower.len(), &index_of(lower)).transpose()
}

pub fn reduced_betti<F: Field>(field: &F, k: &SimplicialComplex) -> BettiTable {
    if k.is_void() {
        return BettiTable {
            field: field.spec(),
            values: Vec::new(),
        };
    }
    let d = k.d();
    // ranks[s] = rank of the boundary out of faces of size s
    let mut ranks = vec![0usize; d + 2];
    for s in 1..=d {
        ranks[s] = rank(field, &boundary_matrix(field, k, s));
    }
    let values = (0..=d)
        .map(|s| k.faces_of_size(s).len() - ranks[s] - ranks[s + 1])
        .collect();
    BettiTable {
        field: field.spec(),
        values,
    }
}

/// Convenience wrapper selecting the field at runtime.
pub fn reduced_betti_over(k: &SimplicialComplex, spec: FieldSpec) -> BettiTable {
    crate::with_field!(spec, f => reduced_betti(&f, k))
}

/// A basis of one cohomology group: cocycle representatives plus what is
/// needed to write any cocycle in that basis.
#[derive(Clone, Debug)]
pub struct CohomologyBasis<F: Field> {
    pub degree: isize,
    /// The cochain basis, i.e. the faces of dimension `degree` in play.
    pub faces: Vec<Face>,
    /// Columns are cocycles, independent modulo coboundaries.
    pub representatives: Matrix<F::Elem>,
    coords: ColumnCoordinates<F>,
}

impl<F: Field> CohomologyBasis<F> {
    fn build(field: &F, degree: isize, prev: &[Face], cur: &[Face], next: &[Face]) -> Self {
        let cur_index = index_of(cur);
        let delta_prev = coboundary(field, cur, prev.len(), &index_of(prev));
        let delta_cur = coboundary(field, next, cur.len(), &cur_index);
        let cocycles = kernel_basis(field, &delta_cur);
        let boundaries = image_basis(field, &delta_prev);

        let mut span = EchelonBasis::new(field, cur.len());
        for b in boundaries.columns() {
            span.insert(b);
        }
        let reps: Vec<_> = cocycles
            .columns()
            .into_iter()
            .filter(|z| span.insert(z.clone()))
            .collect();
        let representatives = Matrix::from_columns(cur.len(), &reps);
        let coords = ColumnCoordinates::new(field, &representatives.hstack(&boundaries));
        CohomologyBasis {
            degree,
            faces: cur.to_vec(),
            representatives,
            coords,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.cols()
    }

    /// Class of a cocycle in the representative basis; `None` if `c` is not a
    /// cocycle of this complex.
    pub fn coordinates(&self, c: &[F::Elem]) -> Option<Vec<F::Elem>> {
        let mut x = self.coords.coordinates(c)?;
        x.truncate(self.dim());
        Some(x)
    }
}

fn faces_of_dim_vec(k: &SimplicialComplex, i: isize) -> Vec<Face> {
    k.faces_of_dim(i).to_vec()
}

/// `H^i_∅(K) = H̃^i(K)`.
pub fn absolute_cohomology_basis<F: Field>(field: &F, k: &SimplicialComplex, i: isize) -> CohomologyBasis<F> {
    CohomologyBasis::build(
        field,
        i,
        &faces_of_dim_vec(k, i - 1),
        &faces_of_dim_vec(k, i),
        &faces_of_dim_vec(k, i + 1),
    )
}

/// `H^i_{v}(K) = H^i(K, cost v)`, cochains supported on faces containing `v`.
pub fn relative_cohomology_basis<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    v: u32,
    i: isize,
) -> CohomologyBasis<F> {
    let star = |j: isize| -> Vec<Face> {
        k.faces_of_dim(j).iter().filter(|f| f.contains(v)).cloned().collect()
    };
    CohomologyBasis::build(field, i, &star(i - 1), &star(i), &star(i + 1))
}

/// Matrix of `inc*: H^i_{v}(K) -> H^i_∅(K)` in the two bases.
pub fn inc_star<F: Field>(
    field: &F,
    k: &SimplicialComplex,
    relative: &CohomologyBasis<F>,
    absolute: &CohomologyBasis<F>,
) -> Matrix<F::Elem> {
    let width = absolute.faces.len();
    let cols: Vec<Vec<F::Elem>> = relative
        .representatives
        .columns()
        .into_iter()
        .map(|c| {
            let mut full = vec![field.zero(); width];
            for (face, x) in relative.faces.iter().zip(c) {
                let j = k.face_index(face).expect("face of the complex");
                full[j] = x;
            }
            absolute
                .coordinates(&full)
                .expect("relative cocycles are absolute cocycles")
        })
        .collect();
    Matrix::from_columns(absolute.dim(), &cols)
}

/// 𝒦 and 𝒞 in one degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KcEntry {
    pub degree: isize,
    pub kernel: usize,
    pub cokernel: usize,
    pub domain_dim: usize,
    pub target_dim: usize,
    /// The per-vertex images are independent subspaces in this degree.
    pub homologically_isolated: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KernelCokernelTable {
    /// Degrees `-1..=d-1`.
    pub entries: Vec<KcEntry>,
    pub fully_supported: bool,
}

impl KernelCokernelTable {
    pub fn entry(&self, i: isize) -> Option<&KcEntry> {
        self.entries.iter().find(|e| e.degree == i)
    }

    /// `𝒦_i`, zero outside the table.
    pub fn kernel(&self, i: isize) -> usize {
        self.entry(i).map_or(0, |e| e.kernel)
    }

    pub fn cokernel(&self, i: isize) -> usize {
        self.entry(i).map_or(0, |e| e.cokernel)
    }
}

/// Inclusion data of one degree: the absolute group and, per vertex, the
/// relative group with its `inc*` matrix.
#[derive(Clone, Debug)]
pub struct DegreeData<F: Field> {
    pub degree: isize,
    pub absolute_dim: usize,
    pub relative_dims: Vec<usize>,
    pub inc: Vec<Matrix<F::Elem>>,
}

/// Everything needed for `f^{i,θ}` in every degree, computed once per complex.
#[derive(Clone, Debug)]
pub struct SingularCohomology<F: Field> {
    field: F,
    n: usize,
    degrees: Vec<DegreeData<F>>,
}

impl<F: Field> SingularCohomology<F> {
    pub fn new(field: &F, k: &SimplicialComplex) -> Self {
        let d = k.d() as isize;
        let degrees = (-1..d)
            .map(|i| {
                let absolute = absolute_cohomology_basis(field, k, i);
                let mut relative_dims = Vec::with_capacity(k.n());
                let mut inc = Vec::with_capacity(k.n());
                for v in k.vertices() {
                    let rel = relative_cohomology_basis(field, k, v, i);
                    relative_dims.push(rel.dim());
                    inc.push(inc_star(field, k, &rel, &absolute));
                }
                DegreeData {
                    degree: i,
                    absolute_dim: absolute.dim(),
                    relative_dims,
                    inc,
                }
            })
            .collect();
        SingularCohomology {
            field: field.clone(),
            n: k.n(),
            degrees,
        }
    }

    pub fn degree(&self, i: isize) -> Option<&DegreeData<F>> {
        self.degrees.iter().find(|g| g.degree == i)
    }

    pub fn degrees(&self) -> &[DegreeData<F>] {
        &self.degrees
    }

    /// `f^{i,θ} = sum_v a_v inc*_v` on `⊕_v H^i_{v}`.
    pub fn f_map(&self, theta: &LinearForm<F::Elem>, i: isize) -> Matrix<F::Elem> {
        assert_eq!(theta.len(), self.n, "one coefficient per vertex");
        let f = &self.field;
        let Some(g) = self.degree(i) else {
            return Matrix::zeros(f, 0, 0);
        };
        let mut m = Matrix::zeros(f, g.absolute_dim, 0);
        for (a, block) in theta.coefficients().iter().zip(&g.inc) {
            m = m.hstack(&block.scale(f, a));
        }
        m
    }

    /// Whether `dim sum_v im inc*_v = sum_v dim im inc*_v` in degree `i`.
    pub fn images_independent(&self, i: isize) -> bool {
        let f = &self.field;
        let Some(g) = self.degree(i) else {
            return true;
        };
        let separate: usize = g.inc.iter().map(|m| rank(f, m)).sum();
        let mut joint = Matrix::zeros(f, g.absolute_dim, 0);
        for m in &g.inc {
            joint = joint.hstack(m);
        }
        rank(f, &joint) == separate
    }

    pub fn kc_dims(&self, theta: &LinearForm<F::Elem>) -> KernelCokernelTable {
        let entries = self
            .degrees
            .iter()
            .map(|g| {
                let m = self.f_map(theta, g.degree);
                let r = rank(&self.field, &m);
                let domain_dim: usize = g.relative_dims.iter().sum();
                KcEntry {
                    degree: g.degree,
                    kernel: domain_dim - r,
                    cokernel: g.absolute_dim - r,
                    domain_dim,
                    target_dim: g.absolute_dim,
                    homologically_isolated: self.images_independent(g.degree),
                }
            })
            .collect();
        KernelCokernelTable {
            entries,
            fully_supported: theta.is_fully_supported(&self.field),
        }
    }

    /// `dim ⋂_k ker f^{i,θ_k}` inside `⊕_v H^i_{v}`.
    pub fn kernel_intersection_dim(&self, thetas: &[LinearForm<F::Elem>], i: isize) -> usize {
        let Some(g) = self.degree(i) else {
            return 0;
        };
        let domain: usize = g.relative_dims.iter().sum();
        let f = &self.field;
        let mut stacked = Matrix::zeros(f, 0, domain);
        for t in thetas {
            stacked = stacked.vstack(&self.f_map(t, i));
        }
        domain - rank(f, &stacked)
    }
}

/// Per-degree test of linear independence of the `inc*` images for
/// `0 <= i <= d-2`. Only meaningful for spaces with isolated singularities.
pub fn is_homologically_isolated(
    k: &SimplicialComplex,
    spec: FieldSpec,
) -> Result<Vec<bool>, PreconditionError> {
    if !classify::has_isolated_singularities(k, spec) {
        return Err(PreconditionError::new(
            "complex is not a space with isolated singularities",
        ));
    }
    Ok(crate::with_field!(spec, f => {
        let sc = SingularCohomology::new(&f, k);
        (0..k.d() as isize - 1).map(|i| sc.images_independent(i)).collect()
    }))
}

/// Homology of `|K|` minus the given vertices. When no two removed vertices
/// span an edge the induced subcomplex on the rest is a deformation retract;
/// otherwise the barycentric subdivision with those vertices deleted is used.
pub fn punctured_complex(k: &SimplicialComplex, removed: &[u32]) -> SimplicialComplex {
    let sigma = Face::new(removed.to_vec());
    let independent = k.faces_of_size(2).iter().all(|e| !e.is_subset_of(&sigma));
    if independent {
        let rest: Vec<u32> = k.vertices().filter(|v| !sigma.contains(*v)).collect();
        return k.induced_subcomplex(&rest);
    }
    barycentric_subdivision_without(k, &sigma)
}

pub fn punctured_betti<F: Field>(field: &F, k: &SimplicialComplex, removed: &[u32]) -> BettiTable {
    reduced_betti(field, &punctured_complex(k, removed))
}

/// Order complex of the nonempty faces of `k`, minus the barycenters of the
/// vertices in `removed`.
fn barycentric_subdivision_without(k: &SimplicialComplex, removed: &Face) -> SimplicialComplex {
    let nonempty: Vec<&Face> = k.faces().filter(|f| !f.is_empty()).collect();
    let id: HashMap<&Face, u32> = nonempty.iter().enumerate().map(|(i, f)| (*f, i as u32)).collect();
    let labels = nonempty.iter().map(|f| k.display_face(f)).collect();
    let skip = |f: &Face| f.len() == 1 && removed.contains(f.vertices()[0]);

    let mut gens = Vec::new();
    for facet in k.facets() {
        // each ordering of the facet's vertices is one maximal flag
        let mut order: Vec<u32> = facet.vertices().to_vec();
        permutations(&mut order, 0, &mut |perm| {
            let mut chain = Vec::with_capacity(perm.len());
            for j in 1..=perm.len() {
                let f = Face::new(perm[..j].to_vec());
                if !skip(&f) {
                    chain.push(id[&f]);
                }
            }
            gens.push(Face::new(chain));
        });
    }
    SimplicialComplex::from_generators(labels, gens)
}

fn permutations(v: &mut Vec<u32>, start: usize, visit: &mut impl FnMut(&[u32])) {
    if start == v.len() {
        visit(v);
        return;
    }
    for i in start..v.len() {
        v.swap(start, i);
        permutations(v, start + 1, visit);
        v.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{PrimeField, Rationals};

    fn k(text: &str) -> SimplicialComplex {
        SimplicialComplex::parse(text).unwrap()
    }

    #[test]
    fn boundary_rank_of_sphere_over_f2() {
        let f2 = PrimeField::new(2).unwrap();
        let s = SimplicialComplex::simplex_boundary(4);
        let m = boundary_matrix(&f2, &s, 3);
        assert_eq!((m.rows(), m.cols()), (6, 4));
        assert_eq!(rank(&f2, &m), 3);
        assert_eq!(reduced_betti(&f2, &s).values, vec![0, 0, 0, 1]);
    }

    #[test]
    fn two_hollow_triangles() {
        let c = k("1 2\n2 3\n1 3\n4 5\n5 6\n4 6");
        let b = reduced_betti(&Rationals, &c);
        assert_eq!(b.values, vec![0, 1, 2]);
        assert_eq!(b.euler_char(), c.reduced_euler_char());
    }

    #[test]
    fn empty_and_void_homology() {
        assert_eq!(reduced_betti(&Rationals, &SimplicialComplex::empty()).values, vec![1]);
        assert!(reduced_betti(&Rationals, &SimplicialComplex::void()).values.is_empty());
    }

    #[test]
    fn relative_group_matches_link() {
        let s = SimplicialComplex::simplex_boundary(4);
        for v in s.vertices() {
            let rel = relative_cohomology_basis(&Rationals, &s, v, 2);
            assert_eq!(rel.dim(), 1);
            assert_eq!(relative_cohomology_basis(&Rationals, &s, v, 1).dim(), 0);
        }
    }

    #[test]
    fn isolated_vertex_has_relative_h0() {
        let c = k("1 2\n3");
        let rel = relative_cohomology_basis(&Rationals, &c, 2, 0);
        assert_eq!(rel.dim(), 1);
        assert_eq!(absolute_cohomology_basis(&Rationals, &c, 0).dim(), 1);
    }

    #[test]
    fn coordinates_reject_non_cocycles() {
        let s = SimplicialComplex::simplex_boundary(4);
        let h1 = absolute_cohomology_basis(&Rationals, &s, 1);
        assert_eq!(h1.dim(), 0);
        let mut c = vec![Rationals.from_i64(0); 6];
        c[0] = Rationals.one();
        assert!(h1.coordinates(&c).is_none());
    }

    #[test]
    fn punctured_models_agree_on_independent_sets() {
        let s = SimplicialComplex::simplex_boundary(4);
        let a = reduced_betti(&Rationals, &punctured_complex(&s, &[0]));
        let b = reduced_betti(&Rationals, &barycentric_subdivision_without(&s, &Face::vertex(0)));
        assert_eq!(a.values[..3], b.values[..3]);
        assert!(a.is_acyclic());
        // two adjacent removed vertices: sphere minus two points is a circle
        let c = reduced_betti(&Rationals, &punctured_complex(&s, &[0, 1]));
        assert_eq!(c.get(1), 1);
        assert_eq!(c.get(0), 0);
    }
}
