//! Face lattice, normal cones and the smoothness (Delzant) test.

use std::collections::BTreeSet;

use super::int::{det, rank};
use super::{sub, LatticePoint, Polytope};
use crate::error::{Error, Result};

/// A nonempty face of a full-dimensional polytope, identified by the facets
/// that are tight on it. The polytope itself is the face with no tight facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face {
    /// Indices into [`Polytope::facets`], increasing.
    pub tight_facets: Vec<usize>,
    /// Indices into [`Polytope::vertices`], increasing.
    pub vertices: Vec<usize>,
    pub dim: usize,
}

impl Face {
    /// A weight in the relative interior of the face's normal cone: the sum of
    /// the tight facet normals (zero for the polytope itself).
    pub fn weight(&self, p: &Polytope) -> Vec<i64> {
        let mut w = vec![0i64; p.dim()];
        for &f in &self.tight_facets {
            for (wi, ni) in w.iter_mut().zip(&p.facets()[f].normal) {
                *wi += ni;
            }
        }
        w
    }

    /// Normal-cone generators (the tight facet normals).
    pub fn normal_cone<'a>(&self, p: &'a Polytope) -> Vec<&'a [i64]> {
        self.tight_facets
            .iter()
            .map(|&f| p.facets()[f].normal.as_slice())
            .collect()
    }

    pub fn vertex_points<'a>(&self, p: &'a Polytope) -> Vec<&'a LatticePoint> {
        self.vertices.iter().map(|&v| &p.vertices()[v]).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceKind {
    /// Normal cone inside the first orthant: the torus orbit lies in the affine chart.
    Affine,
    /// Some normal-cone generator has a negative coordinate.
    Infinity,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceClassification {
    pub affine: Vec<Face>,
    pub infinity: Vec<Face>,
}

impl Polytope {
    fn require_full_dim(&self, what: &str) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::Degenerate(format!(
                "{what} requires a full-dimensional polytope"
            )))
        }
    }

    /// All nonempty faces including the polytope itself, ordered
    /// lexicographically by their tight-facet index sets.
    pub fn faces(&self) -> Result<Vec<Face>> {
        self.require_full_dim("face enumeration")?;
        let facet_sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|h| {
                (0..self.vertices.len())
                    .filter(|&v| h.value(&self.vertices[v]) == h.offset as i128)
                    .collect()
            })
            .collect();

        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut queue: Vec<BTreeSet<usize>> = facet_sets.clone();
        while let Some(face) = queue.pop() {
            if !seen.insert(face.iter().copied().collect()) {
                continue;
            }
            for fs in &facet_sets {
                let meet: BTreeSet<usize> = face.intersection(fs).copied().collect();
                if !meet.is_empty() && meet.len() < face.len() {
                    queue.push(meet);
                }
            }
        }
        seen.insert((0..self.vertices.len()).collect());

        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vs| {
                let tight_facets: Vec<usize> = facet_sets
                    .iter()
                    .enumerate()
                    .filter(|(_, fs)| vs.iter().all(|v| fs.contains(v)))
                    .map(|(i, _)| i)
                    .collect();
                let diffs: Vec<Vec<i64>> = vs
                    .iter()
                    .skip(1)
                    .map(|&v| sub(&self.vertices[v], &self.vertices[vs[0]]))
                    .collect();
                Face {
                    tight_facets,
                    dim: rank(&diffs),
                    vertices: vs,
                }
            })
            .collect();
        faces.sort_by(|a, b| a.tight_facets.cmp(&b.tight_facets));
        Ok(faces)
    }

    pub fn face_kind(&self, face: &Face) -> FaceKind {
        if face
            .normal_cone(self)
            .iter()
            .any(|n| n.iter().any(|&x| x < 0))
        {
            FaceKind::Infinity
        } else {
            FaceKind::Affine
        }
    }

    /// Splits the faces into those meeting the affine chart and those at infinity.
    pub fn classify_faces_at_infinity(&self) -> Result<FaceClassification> {
        self.require_full_dim("face classification")?;
        if !self.contains_origin() {
            return Err(Error::Hypothesis(
                "polytope does not contain the origin".into(),
            ));
        }
        let (mut affine, mut infinity) = (Vec::new(), Vec::new());
        for f in self.faces()? {
            match self.face_kind(&f) {
                FaceKind::Affine => affine.push(f),
                FaceKind::Infinity => infinity.push(f),
            }
        }
        Ok(FaceClassification { affine, infinity })
    }

    /// First vertex (scaled coordinates) at which the tight facet normals fail
    /// to form a basis of `Zⁿ`, or `None` when the polytope is smooth.
    pub fn smoothness_witness(&self) -> Result<Option<LatticePoint>> {
        self.require_full_dim("smoothness")?;
        for v in &self.vertices {
            let normals: Vec<Vec<i128>> = self
                .facets
                .iter()
                .filter(|h| h.value(v) == h.offset as i128)
                .map(|h| h.normal.iter().map(|&x| x as i128).collect())
                .collect();
            if normals.len() != self.dim || det(&normals).abs() != 1 {
                return Ok(Some(v.clone()));
            }
        }
        Ok(None)
    }

    /// Delzant test: at every vertex exactly `n` facets meet and their primitive
    /// normals have determinant ±1.
    pub fn is_smooth(&self) -> Result<bool> {
        Ok(self.smoothness_witness()?.is_none())
    }
}
