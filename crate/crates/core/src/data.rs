//! Bundled complexes: the three 8-vertex pseudomanifold triangulations, their
//! simple 3-trees, and small controls.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct Dataset {
    pub name: &'static str,
    pub description: &'static str,
    pub text: &'static str,
}

impl Dataset {
    pub fn load(&self) -> SimplicialComplex {
        SimplicialComplex::parse(self.text).expect("bundled data parses")
    }
}

const DATASETS: &[Dataset] = &[
    Dataset {
        name: "n1",
        description: "closed 3-pseudomanifold on 8 vertices with eight torus links",
        text: include_str!("../data/n1.cplx"),
    },
    Dataset {
        name: "n3",
        description: "3-pseudomanifold with four projective-plane links and one torus link",
        text: include_str!("../data/n3.cplx"),
    },
    Dataset {
        name: "n4",
        description: "3-pseudomanifold with a single torus link",
        text: include_str!("../data/n4.cplx"),
    },
    Dataset {
        name: "n1-tree",
        description: "simple 3-tree shared by the three 8-vertex triangulations (as listed for n1)",
        text: include_str!("../data/n1-tree.cplx"),
    },
    Dataset {
        name: "n3-tree",
        description: "simple 3-tree shared by the three 8-vertex triangulations (as listed for n3)",
        text: include_str!("../data/n3-tree.cplx"),
    },
    Dataset {
        name: "n4-tree",
        description: "simple 3-tree shared by the three 8-vertex triangulations (as listed for n4)",
        text: include_str!("../data/n4-tree.cplx"),
    },
    Dataset {
        name: "bd-tetra",
        description: "boundary of the 3-simplex",
        text: include_str!("../data/bd-tetra.cplx"),
    },
    Dataset {
        name: "bd-4simplex",
        description: "boundary of the 4-simplex",
        text: include_str!("../data/bd-4simplex.cplx"),
    },
    Dataset {
        name: "simplex3",
        description: "solid 3-simplex",
        text: include_str!("../data/simplex3.cplx"),
    },
    Dataset {
        name: "octahedron",
        description: "boundary of the octahedron",
        text: include_str!("../data/octahedron.cplx"),
    },
    Dataset {
        name: "rp2-6",
        description: "6-vertex real projective plane",
        text: include_str!("../data/rp2-6.cplx"),
    },
    Dataset {
        name: "torus7",
        description: "7-vertex torus",
        text: include_str!("../data/torus7.cplx"),
    },
    Dataset {
        name: "pinched-torus",
        description: "2-sphere with two points identified",
        text: include_str!("../data/pinched-torus.cplx"),
    },
    Dataset {
        name: "two-triangles",
        description: "two disjoint hollow triangles",
        text: include_str!("../data/two-triangles.cplx"),
    },
    Dataset {
        name: "two-spheres",
        description: "two disjoint tetrahedron boundaries",
        text: include_str!("../data/two-spheres.cplx"),
    },
    Dataset {
        name: "wedge",
        description: "two triangles sharing a vertex",
        text: include_str!("../data/wedge.cplx"),
    },
    Dataset {
        name: "broken",
        description: "tetrahedron boundary with an extra triangle on one edge",
        text: include_str!("../data/broken.cplx"),
    },
    Dataset {
        name: "necklace",
        description: "two octahedra glued along a pair of antipodal vertices",
        text: include_str!("../data/necklace.cplx"),
    },
    Dataset {
        name: "cone-hexagon",
        description: "cone over a hexagon",
        text: include_str!("../data/cone-hexagon.cplx"),
    },
];

pub fn list() -> &'static [Dataset] {
    DATASETS
}

pub fn get(name: &str) -> Option<&'static Dataset> {
    DATASETS.iter().find(|d| d.name == name)
}

pub fn load(name: &str) -> Result<SimplicialComplex> {
    get(name)
        .map(Dataset::load)
        .ok_or_else(|| Error::Data(format!("unknown bundled complex `{name}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_dataset_parses() {
        assert!(list().len() >= 10);
        for d in list() {
            let k = d.load();
            assert!(!k.facets().is_empty(), "{}", d.name);
        }
    }

    #[test]
    fn facet_counts() {
        assert_eq!(load("n1").unwrap().facets().len(), 28);
        assert_eq!(load("n3").unwrap().facets().len(), 23);
        assert_eq!(load("n4").unwrap().facets().len(), 21);
        assert_eq!(get("n1").unwrap().text.lines().next(), Some("1 2 4 8"));
        assert!(load("missing").is_err());
    }
}
