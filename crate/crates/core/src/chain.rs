//! Relative simplicial cochains over 𝔽_p.
//!
//! Cochains in degree `j` are indexed by the relative faces of dimension `j`,
//! starting at `j = -1` (the empty face). The coboundary of the dual of `F`
//! is `Σ ±G` over relative faces `G = F ∪ {v}`, with sign `(-1)^k` where `k`
//! is the position of `v` in `G`.

use crate::face::Face;
use crate::linalg::{Matrix, PrimeField};
use crate::simplicial::RelativePair;

/// Reduced cohomology dimensions, index 0 holding degree −1.
#[derive(Clone, Debug, Default, PartialEq, Eq, serde::Serialize)]
pub struct CohomologyDims {
    dims: Vec<usize>,
}

impl CohomologyDims {
    pub fn from_dims(dims: Vec<usize>) -> Self {
        let mut c = CohomologyDims { dims };
        c.trim();
        c
    }

    fn trim(&mut self) {
        while self.dims.last() == Some(&0) {
            self.dims.pop();
        }
    }

    pub fn get(&self, j: i32) -> usize {
        if j < -1 {
            return 0;
        }
        self.dims.get((j + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Degrees `j` with nonzero cohomology paired with the dimension.
    pub fn nonzero(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &h)| h > 0)
            .map(|(k, &h)| (k as i32 - 1, h))
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.nonzero()
            .map(|(j, h)| {
                if j.rem_euclid(2) == 0 {
                    h as i64
                } else {
                    -(h as i64)
                }
            })
            .sum()
    }
}

/// The relative cochain complex of a pair with its coboundary matrices.
#[derive(Clone, Debug)]
pub struct CochainComplex {
    field: PrimeField,
    /// `bases[k]` holds the relative faces of size `k`, sorted.
    bases: Vec<Vec<Face>>,
    /// `coboundaries[k]` maps size-`k` cochains to size-`k+1` cochains.
    coboundaries: Vec<Matrix>,
}

impl CochainComplex {
    pub fn new(pair: &RelativePair, field: PrimeField) -> Self {
        let mut bases: Vec<Vec<Face>> = Vec::new();
        for f in pair.relative_faces() {
            let k = f.len();
            if bases.len() <= k {
                bases.resize(k + 1, Vec::new());
            }
            bases[k].push(f);
        }
        let coboundaries = (0..bases.len())
            .map(|k| coboundary(&bases[k], bases.get(k + 1).map_or(&[][..], |b| b), field))
            .collect();
        CochainComplex {
            field,
            bases,
            coboundaries,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    /// Relative faces of dimension `j`.
    pub fn basis(&self, j: i32) -> &[Face] {
        if j < -1 {
            return &[];
        }
        self.bases.get((j + 1) as usize).map_or(&[], |b| b)
    }

    /// Matrix of `δ^j : C^j → C^{j+1}`, rows indexed by `basis(j + 1)`.
    pub fn coboundary(&self, j: i32) -> Matrix {
        if j < -1 {
            return Matrix::zeros(self.basis(j + 1).len(), 0);
        }
        match self.coboundaries.get((j + 1) as usize) {
            Some(m) => m.clone(),
            None => Matrix::zeros(0, 0),
        }
    }

    fn rank(&self, j: i32) -> usize {
        if j < -1 {
            return 0;
        }
        self.coboundaries
            .get((j + 1) as usize)
            .map_or(0, |m| m.rank(self.field))
    }

    pub fn cohomology_dims(&self) -> CohomologyDims {
        let ranks: Vec<usize> = (0..self.bases.len())
            .map(|k| self.rank(k as i32 - 1))
            .collect();
        let dims = (0..self.bases.len())
            .map(|k| {
                let below = if k == 0 { 0 } else { ranks[k - 1] };
                self.bases[k].len() - ranks[k] - below
            })
            .collect();
        CohomologyDims::from_dims(dims)
    }

    /// `Σ (-1)^j c_j` over cochain dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.bases
            .iter()
            .enumerate()
            .map(|(k, b)| {
                if k % 2 == 1 {
                    b.len() as i64
                } else {
                    -(b.len() as i64)
                }
            })
            .sum()
    }

    /// True when every composite `δ^{j+1} δ^j` vanishes.
    pub fn squares_to_zero(&self) -> bool {
        self.coboundaries
            .windows(2)
            .all(|w| w[1].cols() == 0 || w[0].rows() == 0 || w[1].mul(&w[0], self.field).is_zero())
    }

    /// Deterministic basis of `H^j`, see [`CohomologyBasis`].
    pub fn cohomology_basis(&self, j: i32) -> CohomologyBasis {
        let field = self.field;
        let c = self.basis(j).len();
        let incoming = self.coboundary(j - 1);
        let mut boundaries: Vec<Vec<u32>> = Vec::new();
        let mut span = Matrix::zeros(0, c);
        if c > 0 && incoming.cols() > 0 {
            for col in 0..incoming.cols() {
                let v: Vec<u32> = (0..c).map(|r| incoming.get(r, col)).collect();
                if extends_rank(&span, &v, field) {
                    span = push_row(&span, &v);
                    boundaries.push(v);
                }
            }
        }
        let cocycles = if c == 0 {
            Vec::new()
        } else {
            let out = self.coboundary(j);
            if out.rows() == 0 {
                (0..c)
                    .map(|i| {
                        let mut e = vec![0; c];
                        e[i] = 1;
                        e
                    })
                    .collect()
            } else {
                out.kernel(field)
            }
        };
        let mut representatives = Vec::new();
        for z in cocycles {
            if extends_rank(&span, &z, field) {
                span = push_row(&span, &z);
                representatives.push(z);
            }
        }
        CohomologyBasis {
            j,
            faces: self.basis(j).to_vec(),
            boundaries,
            representatives,
            field,
        }
    }
}

fn coboundary(lower: &[Face], upper: &[Face], field: PrimeField) -> Matrix {
    let mut m = Matrix::zeros(upper.len(), lower.len());
    for (r, g) in upper.iter().enumerate() {
        for (pos, v) in g.vertices().enumerate() {
            if let Ok(c) = lower.binary_search(&g.without(v)) {
                let sign = if pos % 2 == 0 { 1 } else { field.neg(1) };
                m.set(r, c, sign);
            }
        }
    }
    m
}

fn push_row(m: &Matrix, v: &[u32]) -> Matrix {
    let mut rows: Vec<Vec<u32>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    rows.push(v.to_vec());
    Matrix::from_rows(rows, v.len())
}

fn extends_rank(m: &Matrix, v: &[u32], field: PrimeField) -> bool {
    push_row(m, v).rank(field) > m.rows()
}

/// `H^j` presented as `Z^j = B^j ⊕ span(representatives)`.
///
/// `B^j` is spanned by the independent columns of `δ^{j-1}` taken in order;
/// representatives extend it with kernel vectors of `δ^j` in the order
/// produced by row reduction.
#[derive(Clone, Debug)]
pub struct CohomologyBasis {
    pub j: i32,
    pub faces: Vec<Face>,
    pub boundaries: Vec<Vec<u32>>,
    pub representatives: Vec<Vec<u32>>,
    field: PrimeField,
}

impl CohomologyBasis {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of a cocycle's class; `None` if `z` is not a cocycle.
    pub fn coordinates(&self, z: &[u32]) -> Option<Vec<u32>> {
        let c = self.faces.len();
        assert_eq!(z.len(), c);
        if c == 0 {
            return Some(Vec::new());
        }
        let cols: Vec<&Vec<u32>> = self
            .boundaries
            .iter()
            .chain(&self.representatives)
            .collect();
        let mut m = Matrix::zeros(c, cols.len());
        for (k, v) in cols.iter().enumerate() {
            for r in 0..c {
                m.set(r, k, v[r]);
            }
        }
        let x = m.solve(z, self.field)?;
        Some(x[self.boundaries.len()..].to_vec())
    }
}

/// Reduced relative cohomology dimensions of `pair` over `field`.
pub fn relative_cohomology_dims(pair: &RelativePair, field: PrimeField) -> CohomologyDims {
    if pair.is_trivial() {
        return CohomologyDims::default();
    }
    CochainComplex::new(pair, field).cohomology_dims()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    fn boundary_of_simplex(n: usize) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, Face::full(n).subsets().filter(|s| s.len() == n - 1))
            .unwrap()
    }

    #[test]
    fn spheres() {
        for n in 1..=5 {
            let sphere = boundary_of_simplex(n);
            let h = relative_cohomology_dims(&RelativePair::absolute(sphere), f2());
            let expected: Vec<(i32, usize)> = vec![(n as i32 - 2, 1)];
            assert_eq!(h.nonzero().collect::<Vec<_>>(), expected, "n = {n}");
        }
    }

    #[test]
    fn void_and_empty_face() {
        let void = SimplicialComplex::void(3);
        let e = SimplicialComplex::empty_face(3);
        assert!(relative_cohomology_dims(&RelativePair::absolute(void.clone()), f2()).is_zero());
        let h = relative_cohomology_dims(&RelativePair::absolute(e.clone()), f2());
        assert_eq!(h.get(-1), 1);
        let rel = RelativePair::new(e, void).unwrap();
        assert_eq!(relative_cohomology_dims(&rel, f2()).get(-1), 1);
    }

    #[test]
    fn simplices_are_acyclic() {
        let s = SimplicialComplex::simplex(4, Face::from_vertices([0, 2, 3]));
        assert!(relative_cohomology_dims(&RelativePair::absolute(s), f2()).is_zero());
    }

    #[test]
    fn relative_pair_of_disk_and_boundary() {
        // (Δ^2, ∂Δ^2) has H^2 = 𝔽
        let disk = SimplicialComplex::simplex(3, Face::full(3));
        let pair = RelativePair::new(disk, boundary_of_simplex(3)).unwrap();
        let h = relative_cohomology_dims(&pair, f2());
        assert_eq!(h.nonzero().collect::<Vec<_>>(), vec![(2, 1)]);
    }

    #[test]
    fn projective_plane_depends_on_characteristic() {
        // six-vertex triangulation of RP^2
        let facets = [
            [0, 1, 2],
            [0, 2, 3],
            [0, 3, 4],
            [0, 4, 5],
            [0, 5, 1],
            [1, 2, 4],
            [2, 3, 5],
            [3, 4, 1],
            [4, 5, 2],
            [5, 1, 3],
        ];
        let rp2 = SimplicialComplex::from_facets(6, facets.iter().map(|f| Face::from_vertices(*f)))
            .unwrap();
        let pair = RelativePair::absolute(rp2);
        let h2 = relative_cohomology_dims(&pair, f2());
        let h3 = relative_cohomology_dims(&pair, PrimeField::new(3).unwrap());
        assert_eq!(h2.nonzero().collect::<Vec<_>>(), vec![(1, 1), (2, 1)]);
        assert!(h3.is_zero());
    }

    #[test]
    fn euler_characteristics_agree() {
        let p = SimplicialComplex::from_facets(
            5,
            [[0, 2], [2, 4], [4, 1], [1, 3], [3, 0]].map(Face::from_vertices),
        )
        .unwrap();
        let cc = CochainComplex::new(&RelativePair::absolute(p), f2());
        assert!(cc.squares_to_zero());
        assert_eq!(
            cc.euler_characteristic(),
            cc.cohomology_dims().euler_characteristic()
        );
        assert_eq!(
            cc.cohomology_dims().nonzero().collect::<Vec<_>>(),
            vec![(1, 1)]
        );
    }

    #[test]
    fn basis_coordinates() {
        let two_points =
            SimplicialComplex::from_facets(2, [Face::singleton(0), Face::singleton(1)]).unwrap();
        let cc = CochainComplex::new(&RelativePair::absolute(two_points), f2());
        let b = cc.cohomology_basis(0);
        assert_eq!(b.dim(), 1);
        // indicator of one point is a cocycle representing the generator
        assert_eq!(b.coordinates(&[1, 0]).unwrap(), vec![1]);
        // the constant function is a coboundary
        assert_eq!(b.coordinates(&[1, 1]).unwrap(), vec![0]);
    }
}
