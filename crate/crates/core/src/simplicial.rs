//! Simplicial complexes on `[n]` and relative pairs.
//!
//! A complex stores its full face list. The void complex (no faces) and the
//! complex `{∅}` are different values: only the latter has a face of
//! dimension −1.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};
use crate::ring::{MonomialIdeal, RingContext};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    /// Sorted by `Face`'s order, closed under subsets.
    faces: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex with no faces at all.
    pub fn void(n: usize) -> Self {
        SimplicialComplex { n, faces: vec![] }
    }

    /// The complex `{∅}`.
    pub fn empty_face(n: usize) -> Self {
        SimplicialComplex {
            n,
            faces: vec![Face::EMPTY],
        }
    }

    /// The full simplex on the vertex set `vertices`.
    pub fn simplex(n: usize, vertices: Face) -> Self {
        let mut faces: Vec<Face> = vertices.subsets().collect();
        faces.sort();
        SimplicialComplex { n, faces }
    }

    /// Downward closure of the given facets.
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = Face>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVariables {
                max: MAX_VERTICES,
                got: n,
            });
        }
        let ground = Face::full(n);
        let mut set = BTreeSet::new();
        for f in facets {
            if !f.is_subset_of(ground) {
                let vertex = f.difference(ground).vertices().next().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if set.contains(&f) {
                continue;
            }
            set.extend(f.subsets());
        }
        Ok(SimplicialComplex {
            n,
            faces: set.into_iter().collect(),
        })
    }

    /// Caller guarantees the list is closed under subsets; it is sorted here.
    pub(crate) fn from_closed_faces(n: usize, mut faces: Vec<Face>) -> Self {
        faces.sort_unstable();
        debug_assert!(faces.windows(2).all(|w| w[0] != w[1]));
        SimplicialComplex { n, faces }
    }

    /// Stanley–Reisner complex: faces are the supports containing no generator support.
    pub fn from_squarefree_ideal(ideal: &MonomialIdeal) -> Result<Self> {
        if !ideal.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        let n = ideal.nvars();
        let nonfaces: Vec<Face> = ideal.gens().iter().map(|g| g.support()).collect();
        Ok(Self::avoiding(n, Face::full(n), &nonfaces))
    }

    /// All subsets of `ground` containing none of `obstructions`.
    pub(crate) fn avoiding(n: usize, ground: Face, obstructions: &[Face]) -> Self {
        let faces = ground
            .subsets()
            .filter(|s| !obstructions.iter().any(|o| o.is_subset_of(*s)))
            .collect();
        Self::from_closed_faces(n, faces)
    }

    /// Squarefree ideal generated by the minimal non-faces.
    pub fn stanley_reisner_ideal(&self, ring: Arc<RingContext>) -> Result<MonomialIdeal> {
        if ring.n() != self.n {
            return Err(Error::GroundMismatch(ring.n(), self.n));
        }
        let mut nonfaces = Vec::new();
        for s in Face::full(self.n).subsets() {
            if self.contains(s) {
                continue;
            }
            // minimal non-face: every codimension-one subset is a face
            if s.vertices().all(|v| self.contains(s.without(v))) {
                nonfaces.push(s);
            }
        }
        Ok(MonomialIdeal::squarefree(ring, nonfaces))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// True for `{∅}`.
    pub fn is_empty_face(&self) -> bool {
        self.faces == [Face::EMPTY]
    }

    pub fn contains(&self, f: Face) -> bool {
        self.faces.binary_search(&f).is_ok()
    }

    /// `None` for the void complex.
    pub fn dim(&self) -> Option<i32> {
        self.faces.last().map(|f| f.dim())
    }

    pub fn vertices(&self) -> Face {
        self.faces
            .iter()
            .filter(|f| f.len() == 1)
            .fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn facets(&self) -> Vec<Face> {
        let ground = Face::full(self.n);
        self.faces
            .iter()
            .copied()
            .filter(|f| {
                ground
                    .difference(*f)
                    .vertices()
                    .all(|v| !self.contains(f.with(v)))
            })
            .collect()
    }

    /// Number of faces of each dimension, starting at dimension −1.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for face in &self.faces {
            let k = face.len();
            if f.len() <= k {
                f.resize(k + 1, 0);
            }
            f[k] += 1;
        }
        f
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.n == other.n && self.faces.iter().all(|f| other.contains(*f))
    }

    /// `link_Δ F = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, f: Face) -> Result<Self> {
        if !self.contains(f) {
            return Err(Error::FaceNotInComplex(f.to_string()));
        }
        Ok(self.link_or_void(f))
    }

    /// Like [`link`](Self::link) but returns the void complex when `f ∉ Δ`.
    pub fn link_or_void(&self, f: Face) -> Self {
        let faces = self
            .faces
            .iter()
            .filter(|g| f.is_subset_of(**g))
            .map(|g| g.difference(f))
            .collect();
        Self::from_closed_faces(self.n, faces)
    }

    /// `star_Δ F = {τ ∪ σ : τ ⊆ F, σ ∈ link_Δ F}`.
    pub fn star(&self, f: Face) -> Result<Self> {
        if !self.contains(f) {
            return Err(Error::FaceNotInComplex(f.to_string()));
        }
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|g| self.contains(g.union(f)))
            .collect();
        Ok(Self::from_closed_faces(self.n, faces))
    }

    /// Induced subcomplex on the vertex set `w`.
    pub fn restrict(&self, w: Face) -> Self {
        let faces = self
            .faces
            .iter()
            .copied()
            .filter(|g| g.is_subset_of(w))
            .collect();
        Self::from_closed_faces(self.n, faces)
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// Pure, and facets satisfy basis exchange.
    pub fn is_matroid(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let facets = self.facets();
        let is_facet = |f: Face| facets.binary_search(&f).is_ok();
        for &a in &facets {
            for &b in &facets {
                if a == b {
                    continue;
                }
                for u in a.difference(b).vertices() {
                    let base = a.without(u);
                    if !b.difference(a).vertices().any(|v| is_facet(base.with(v))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `F ∪ {v} ∈ Δ` for every face `F`.
    pub fn is_cone_with_apex(&self, v: usize) -> bool {
        self.faces.iter().all(|f| self.contains(f.with(v)))
    }

    pub fn facet_string(&self) -> String {
        if self.is_void() {
            return "VOID".to_string();
        }
        if self.is_empty_face() {
            return "{∅}".to_string();
        }
        self.facets()
            .iter()
            .map(Face::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "complex on {}: {}", self.n, self.facet_string())
    }
}

/// A pair `(Δ, Γ)` with `Γ ⊆ Δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativePair {
    big: SimplicialComplex,
    small: SimplicialComplex,
}

impl RelativePair {
    pub fn new(big: SimplicialComplex, small: SimplicialComplex) -> Result<Self> {
        if big.n != small.n {
            return Err(Error::GroundMismatch(big.n, small.n));
        }
        if !small.is_subcomplex_of(&big) {
            return Err(Error::NotSubcomplex);
        }
        Ok(RelativePair { big, small })
    }

    /// `(Δ, void)`: absolute reduced (co)homology.
    pub fn absolute(big: SimplicialComplex) -> Self {
        let small = SimplicialComplex::void(big.n);
        RelativePair { big, small }
    }

    pub(crate) fn new_unchecked(big: SimplicialComplex, small: SimplicialComplex) -> Self {
        debug_assert!(small.is_subcomplex_of(&big));
        RelativePair { big, small }
    }

    pub fn big(&self) -> &SimplicialComplex {
        &self.big
    }

    pub fn small(&self) -> &SimplicialComplex {
        &self.small
    }

    /// Faces of `Δ` not in `Γ`, in `Face` order.
    pub fn relative_faces(&self) -> Vec<Face> {
        self.big
            .faces
            .iter()
            .copied()
            .filter(|f| !self.small.contains(*f))
            .collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.big.faces.len() == self.small.faces.len()
    }

    /// Largest dimension of a relative face; `None` when there is none.
    pub fn dim(&self) -> Option<i32> {
        self.big
            .faces
            .iter()
            .rev()
            .find(|f| !self.small.contains(**f))
            .map(|f| f.dim())
    }

    pub fn link(&self, f: Face) -> RelativePair {
        RelativePair {
            big: self.big.link_or_void(f),
            small: self.small.link_or_void(f),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;

    pub(crate) fn pentagon() -> SimplicialComplex {
        // Stanley–Reisner complex of the 5-cycle edge ideal: non-edges of C5
        SimplicialComplex::from_facets(
            5,
            [[0, 2], [2, 4], [4, 1], [1, 3], [3, 0]].map(Face::from_vertices),
        )
        .unwrap()
    }

    #[test]
    fn void_and_empty_face_differ() {
        let v = SimplicialComplex::void(3);
        let e = SimplicialComplex::empty_face(3);
        assert_ne!(v, e);
        assert_eq!(v.dim(), None);
        assert_eq!(e.dim(), Some(-1));
        assert_eq!(e.facets(), vec![Face::EMPTY]);
        assert!(v.facets().is_empty());
    }

    #[test]
    fn stanley_reisner_of_cycle_ideal() {
        let r = RingContext::standard(5).unwrap();
        let i = MonomialIdeal::squarefree(
            r.clone(),
            (0..5).map(|k| Face::from_vertices([k, (k + 1) % 5])),
        );
        let delta = SimplicialComplex::from_squarefree_ideal(&i).unwrap();
        // oracle: subsets containing no edge of C5, maximal ones
        let edges: Vec<Face> = (0..5)
            .map(|k| Face::from_vertices([k, (k + 1) % 5]))
            .collect();
        let indep: Vec<Face> = Face::full(5)
            .subsets()
            .filter(|s| edges.iter().all(|e| !e.is_subset_of(*s)))
            .collect();
        let mut maximal: Vec<Face> = indep
            .iter()
            .copied()
            .filter(|s| !indep.iter().any(|t| t != s && s.is_subset_of(*t)))
            .collect();
        maximal.sort();
        assert_eq!(delta.facets(), maximal);
        assert_eq!(delta, pentagon());
        assert_eq!(delta.stanley_reisner_ideal(r).unwrap(), i);
    }

    #[test]
    fn stanley_reisner_extremes() {
        let r = RingContext::standard(3).unwrap();
        let e = SimplicialComplex::empty_face(3);
        assert_eq!(
            e.stanley_reisner_ideal(r.clone()).unwrap(),
            MonomialIdeal::maximal(r.clone())
        );
        let full = SimplicialComplex::simplex(3, Face::full(3));
        assert!(full.stanley_reisner_ideal(r.clone()).unwrap().is_zero());
        let sq = MonomialIdeal::minimize(r, [crate::ring::Monomial::new(vec![2, 0, 0])]).unwrap();
        assert_eq!(
            SimplicialComplex::from_squarefree_ideal(&sq),
            Err(Error::NotSquarefree)
        );
    }

    #[test]
    fn links_stars_restrictions() {
        let p = pentagon();
        let lk = p.link(Face::singleton(0)).unwrap();
        assert_eq!(lk.facets(), vec![Face::singleton(2), Face::singleton(3)]);
        assert_eq!(p.link(Face::EMPTY).unwrap(), p);
        assert!(p.link(Face::from_vertices([0, 1])).is_err());
        let st = p.star(Face::singleton(0)).unwrap();
        assert_eq!(
            st.facets(),
            vec![Face::from_vertices([0, 2]), Face::from_vertices([0, 3])]
        );
        assert!(st.is_cone_with_apex(0));
        // four consecutive cycle vertices 1,3,5,2 of the pentagon: a path
        let path = p.restrict(Face::from_vertices([0, 2, 4, 1]));
        assert_eq!(path.facets().len(), 3);
        assert!(!path.is_pure() || path.facets().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn purity_and_matroids() {
        let u24 =
            SimplicialComplex::from_facets(4, Face::full(4).subsets().filter(|s| s.len() == 2))
                .unwrap();
        assert!(u24.is_matroid());
        assert!(!pentagon().is_matroid());
        assert!(SimplicialComplex::simplex(3, Face::full(3)).is_matroid());
        let mixed =
            SimplicialComplex::from_facets(3, [Face::from_vertices([0, 1]), Face::singleton(2)])
                .unwrap();
        assert!(!mixed.is_pure());
        assert!(SimplicialComplex::empty_face(2).is_pure());
        assert!(SimplicialComplex::simplex(3, Face::full(3)).is_pure());
    }

    #[test]
    fn cones() {
        let two_points =
            SimplicialComplex::from_facets(2, [Face::singleton(0), Face::singleton(1)]).unwrap();
        assert!(!two_points.is_cone_with_apex(0));
        assert!(!two_points.is_cone_with_apex(1));
        assert!(!SimplicialComplex::empty_face(2).is_cone_with_apex(0));
        assert!(SimplicialComplex::void(2).is_cone_with_apex(0));
    }

    #[test]
    fn pair_requires_subcomplex() {
        let p = pentagon();
        let e = SimplicialComplex::empty_face(5);
        assert!(RelativePair::new(p.clone(), e.clone()).is_ok());
        assert_eq!(RelativePair::new(e, p).unwrap_err(), Error::NotSubcomplex);
    }
}
