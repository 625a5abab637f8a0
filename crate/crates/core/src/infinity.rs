//! Facial-system sweeps deciding "no common zeros at infinity" and "no common
//! zeros anywhere" on the toric variety of a polytope.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::groebner::has_common_zero_torus;
use crate::linalg::rat;
use crate::poly::{common_dim, SparsePolynomial};
use crate::polytope::{Face, FaceKind, Polytope};

/// Outcome of a sweep. On failure both witness fields are set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfinityVerdict {
    pub ok: bool,
    pub witness_face: Option<Face>,
    pub witness_system: Option<Vec<SparsePolynomial>>,
}

impl InfinityVerdict {
    fn pass() -> Self {
        InfinityVerdict {
            ok: true,
            witness_face: None,
            witness_system: None,
        }
    }
}

fn check_supports(fs: &[SparsePolynomial], ps: &[&Polytope]) -> Result<()> {
    for (j, (f, p)) in fs.iter().zip(ps).enumerate() {
        if !f.support_in(p)? {
            return Err(Error::Hypothesis(format!(
                "support of generator {} is not contained in its polytope",
                j + 1
            )));
        }
    }
    Ok(())
}

fn require_full_dim(p: &Polytope) -> Result<()> {
    if p.is_full_dimensional() {
        Ok(())
    } else {
        Err(Error::Degenerate(
            "the polytope is not full-dimensional".into(),
        ))
    }
}

/// Sweeps `faces` of `sum`, restricting `F_j` to the face of `ps[j]` with the
/// same weight. Every face is evaluated; the first failure in face order wins.
fn sweep(
    exec: Execution,
    fs: &[SparsePolynomial],
    ps: &[&Polytope],
    sum: &Polytope,
    faces: Vec<Face>,
) -> Result<InfinityVerdict> {
    let results = exec.map(&faces, |face| -> Result<Option<Vec<SparsePolynomial>>> {
        let w = face.weight(sum);
        let system = fs
            .iter()
            .zip(ps)
            .map(|(f, p)| f.restrict_to_face(p, &w))
            .collect::<Result<Vec<_>>>()?;
        Ok(has_common_zero_torus(&system)?.then_some(system))
    });
    for (face, r) in faces.into_iter().zip(results) {
        if let Some(system) = r? {
            return Ok(InfinityVerdict {
                ok: false,
                witness_face: Some(face),
                witness_system: Some(system),
            });
        }
    }
    Ok(InfinityVerdict::pass())
}

pub fn no_zeros_at_infinity(fs: &[SparsePolynomial], p: &Polytope) -> Result<InfinityVerdict> {
    no_zeros_at_infinity_with(Execution::default(), fs, p)
}

/// Whether no facial system on a face at infinity of `p` has a torus zero.
pub fn no_zeros_at_infinity_with(
    exec: Execution,
    fs: &[SparsePolynomial],
    p: &Polytope,
) -> Result<InfinityVerdict> {
    common_dim(fs)?;
    if !p.contains_origin() {
        return Err(Error::Hypothesis(
            "the polytope does not contain the origin".into(),
        ));
    }
    check_supports(fs, &vec![p; fs.len()])?;
    require_full_dim(p)?;
    let faces: Vec<Face> = p
        .faces()?
        .into_iter()
        .filter(|f| p.face_kind(f) == FaceKind::Infinity)
        .collect();
    sweep(exec, fs, &vec![p; fs.len()], p, faces)
}

pub fn no_zeros_anywhere(fs: &[SparsePolynomial], p: &Polytope) -> Result<InfinityVerdict> {
    no_zeros_anywhere_with(Execution::default(), fs, p)
}

/// Whether no facial system on any face of `p` (including `p`) has a torus zero.
pub fn no_zeros_anywhere_with(
    exec: Execution,
    fs: &[SparsePolynomial],
    p: &Polytope,
) -> Result<InfinityVerdict> {
    common_dim(fs)?;
    check_supports(fs, &vec![p; fs.len()])?;
    require_full_dim(p)?;
    sweep(exec, fs, &vec![p; fs.len()], p, p.faces()?)
}

/// Sweep over all faces of `P_1 + ⋯ + P_m`, with each `F_j` restricted to the
/// face of its own `P_j`. Returns the sum polytope alongside the verdict; the
/// witness face refers to it.
pub fn no_zeros_anywhere_multi(
    exec: Execution,
    fs: &[SparsePolynomial],
    ps: &[Polytope],
) -> Result<(Polytope, InfinityVerdict)> {
    let dim = common_dim(fs)?;
    if fs.len() != ps.len() {
        return Err(Error::Contract(format!(
            "{} generators but {} polytopes",
            fs.len(),
            ps.len()
        )));
    }
    let refs: Vec<&Polytope> = ps.iter().collect();
    check_supports(fs, &refs)?;
    let mut sum = Polytope::origin(dim)?;
    for p in ps {
        sum = sum.minkowski_sum_with(exec, p)?;
    }
    require_full_dim(&sum)?;
    let faces = sum.faces()?;
    let verdict = sweep(exec, fs, &refs, &sum, faces)?;
    Ok((sum, verdict))
}

/// `m` polynomials supported on every lattice point of `p`, with nonzero
/// integer coefficients in `[-10, 10]` drawn from a seeded ChaCha8 stream.
pub fn genericity_probe(p: &Polytope, m: usize, seed: u64) -> Result<Vec<SparsePolynomial>> {
    require_full_dim(p)?;
    let points = p.lattice_points();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..m)
        .map(|_| {
            SparsePolynomial::from_terms(
                p.dim(),
                points.iter().map(|e| {
                    let c: i64 = rng.random_range(1..=10);
                    (e.clone(), rat(if rng.random_bool(0.5) { -c } else { c }))
                }),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::LatticePoint;

    fn poly(dim: usize, terms: &[(i64, &[i64])]) -> SparsePolynomial {
        SparsePolynomial::from_int_terms(dim, terms).unwrap()
    }

    fn coords() -> Vec<SparsePolynomial> {
        vec![SparsePolynomial::var(2, 0), SparsePolynomial::var(2, 1)]
    }

    fn witness_vertices(p: &Polytope, v: &InfinityVerdict) -> Vec<LatticePoint> {
        v.witness_face
            .as_ref()
            .unwrap()
            .vertex_points(p)
            .into_iter()
            .cloned()
            .collect()
    }

    #[test]
    fn coordinates_on_simplex() {
        let s = Polytope::simplex(2).unwrap();
        assert!(no_zeros_at_infinity(&coords(), &s).unwrap().ok);
        let v = no_zeros_anywhere(&coords(), &s).unwrap();
        assert!(!v.ok);
        assert_eq!(witness_vertices(&s, &v), vec![vec![0, 0]]);
        assert_eq!(
            v.witness_system.unwrap(),
            vec![SparsePolynomial::zero(2); 2]
        );
    }

    #[test]
    fn curve_on_square() {
        let fs = [
            poly(2, &[(1, &[1, 1]), (-1, &[0, 0])]),
            poly(2, &[(1, &[1, 0]), (-1, &[0, 1])]),
        ];
        let sq = Polytope::cube(2).unwrap();
        assert!(no_zeros_at_infinity(&fs, &sq).unwrap().ok);
        // The curve meets the torus at (±1, ±1).
        let v = no_zeros_anywhere(&fs, &sq).unwrap();
        assert!(!v.ok);
        assert!(v.witness_face.unwrap().tight_facets.is_empty());
    }

    #[test]
    fn line_meets_infinity() {
        let s = Polytope::simplex(2).unwrap();
        let v = no_zeros_at_infinity(&[poly(2, &[(1, &[1, 0]), (-1, &[0, 0])])], &s).unwrap();
        assert!(!v.ok);
        // z1 = 1 passes through the point at infinity of the z2-axis.
        assert_eq!(witness_vertices(&s, &v), vec![vec![0, 1]]);
        assert_eq!(v.witness_system.unwrap(), vec![SparsePolynomial::zero(2)]);
    }

    #[test]
    fn anywhere_examples() {
        let s = Polytope::simplex(2).unwrap();
        let mut fs = coords();
        fs.push(poly(2, &[(1, &[0, 0]), (-1, &[1, 0]), (-1, &[0, 1])]));
        assert!(no_zeros_anywhere(&fs, &s).unwrap().ok);
        // A constant is a section vanishing on every orbit away from the origin.
        let v = no_zeros_anywhere(&[SparsePolynomial::one(2)], &s).unwrap();
        assert!(!v.ok);
        assert_eq!(v.witness_system.unwrap(), vec![SparsePolynomial::zero(2)]);
        let unit = [
            SparsePolynomial::one(2),
            SparsePolynomial::var(2, 0),
            SparsePolynomial::var(2, 1),
        ];
        assert!(no_zeros_anywhere(&unit, &s).unwrap().ok);
    }

    #[test]
    fn hypothesis_errors() {
        let shifted = Polytope::hull(&[vec![1, 1], vec![2, 1], vec![1, 2]]).unwrap();
        let f = [poly(2, &[(1, &[1, 1])])];
        assert!(matches!(
            no_zeros_at_infinity(&f, &shifted),
            Err(Error::Hypothesis(_))
        ));
        assert!(no_zeros_anywhere(&f, &shifted).is_ok());
        let s = Polytope::simplex(2).unwrap();
        let big = [poly(2, &[(1, &[2, 0])])];
        assert!(matches!(
            no_zeros_at_infinity(&big, &s),
            Err(Error::Hypothesis(_))
        ));
        assert!(matches!(
            no_zeros_anywhere(&big, &s),
            Err(Error::Hypothesis(_))
        ));
    }

    #[test]
    fn multi_matches_single_when_equal() {
        let s = Polytope::simplex(2).unwrap();
        let mut fs = coords();
        fs.push(poly(2, &[(1, &[0, 0]), (-1, &[1, 0]), (-1, &[0, 1])]));
        let (sum, v) =
            no_zeros_anywhere_multi(Execution::Sequential, &fs, &vec![s.clone(); 3]).unwrap();
        assert_eq!(sum, s.dilate(3).unwrap());
        assert!(v.ok);
        let (_, v) =
            no_zeros_anywhere_multi(Execution::Sequential, &coords(), &vec![s; 2]).unwrap();
        assert!(!v.ok);
    }

    #[test]
    fn probes() {
        let s = Polytope::simplex(2).unwrap();
        assert!(genericity_probe(&s, 0, 1).unwrap().is_empty());
        let a = genericity_probe(&s, 3, 42).unwrap();
        assert_eq!(a, genericity_probe(&s, 3, 42).unwrap());
        assert!(a.iter().all(|f| f.support() == s.lattice_points()));
        assert!(no_zeros_anywhere(&a, &s).unwrap().ok);
        let two = genericity_probe(&s, 2, 7).unwrap();
        assert!(no_zeros_at_infinity(&two, &s).unwrap().ok);
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let s = Polytope::simplex(2).unwrap().dilate(2).unwrap();
        for seed in 0..4 {
            let fs = genericity_probe(&s, 2, seed).unwrap();
            assert_eq!(
                no_zeros_anywhere_with(Execution::Sequential, &fs, &s).unwrap(),
                no_zeros_anywhere_with(Execution::Parallel, &fs, &s).unwrap()
            );
        }
    }
}
