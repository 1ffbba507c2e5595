use serde::{Deserialize, Serialize};

/// A face as a strictly increasing list of vertex ids. The empty face is
/// allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<u32>);

impl Face {
    /// Sorts and dedups the given ids.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Face(vertices)
    }

    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: u32) -> Self {
        Face(vec![v])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    pub fn is_disjoint(&self, other: &Face) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Face::new(v)
    }

    pub fn with(&self, v: u32) -> Face {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut w = self.0.clone();
                w.insert(pos, v);
                Face(w)
            }
        }
    }

    pub fn without(&self, v: u32) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    pub fn minus(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|&w| !other.contains(w)).collect())
    }

    /// Codimension-one faces paired with the sign `(-1)^k` of deleting the
    /// k-th vertex (`true` for +1).
    pub fn boundary(&self) -> impl Iterator<Item = (Face, bool)> + '_ {
        (0..self.0.len()).map(move |k| {
            let mut w = self.0.clone();
            w.remove(k);
            (Face(w), k % 2 == 0)
        })
    }

    /// All 2^k subsets.
    pub fn subsets(&self) -> Vec<Face> {
        let k = self.0.len();
        assert!(k < 32, "face too large to enumerate subsets");
        (0u32..(1 << k))
            .map(|mask| {
                Face(
                    (0..k)
                        .filter(|i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }

    pub(crate) fn remap(&self, map: &[Option<u32>]) -> Face {
        Face::new(
            self.0
                .iter()
                .map(|&v| map[v as usize].expect("vertex kept by remap"))
                .collect(),
        )
    }
}

impl From<Vec<u32>> for Face {
    fn from(v: Vec<u32>) -> Self {
        Face::new(v)
    }
}

impl<const N: usize> From<[u32; N]> for Face {
    fn from(v: [u32; N]) -> Self {
        Face::new(v.to_vec())
    }
}
