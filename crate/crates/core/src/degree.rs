//! Degree complexes `Δ_a(I)` and the finite box of relevant multidegrees.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chain::relative_cohomology_dims;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::PrimeField;
use crate::ring::{Monomial, MonomialIdeal};
use crate::simplicial::{RelativePair, SimplicialComplex};

/// An integer vector `a ∈ ℤⁿ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multidegree(Vec<i32>);

impl Multidegree {
    pub fn new(a: Vec<i32>) -> Self {
        Multidegree(a)
    }

    pub fn zero(n: usize) -> Self {
        Multidegree(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    /// `G_a = {i : a_i < 0}`.
    pub fn neg_support(&self) -> Face {
        Face::from_vertices(
            self.0
                .iter()
                .enumerate()
                .filter(|(_, &v)| v < 0)
                .map(|(i, _)| i),
        )
    }

    /// `a⁺`: negative entries replaced by zero.
    pub fn positive_part(&self) -> Multidegree {
        Multidegree(self.0.iter().map(|&v| v.max(0)).collect())
    }

    /// The monomial `x^{a⁺}`.
    pub fn positive_monomial(&self) -> Monomial {
        Monomial::new(self.0.iter().map(|&v| v.max(0) as u32).collect())
    }

    pub fn add(&self, b: &Multidegree) -> Multidegree {
        assert_eq!(self.len(), b.len());
        Multidegree(self.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&v| v >= 0)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::DegreeLength {
                expected: n,
                got: self.len(),
            });
        }
        Ok(())
    }
}

impl From<Vec<i32>> for Multidegree {
    fn from(v: Vec<i32>) -> Self {
        Multidegree(v)
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Multidegree {
    type Err = std::num::ParseIntError;

    /// Parses `-1,0,2` (surrounding parentheses optional).
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        s.split(',')
            .map(|p| p.trim().parse::<i32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(Multidegree)
    }
}

/// Masks `{i ∉ G_a : b_i > a_i}`, one per generator, minimal under inclusion.
fn obstructions(ideal: &MonomialIdeal, a: &[i32], ground: Face) -> Vec<Face> {
    let mut masks: Vec<Face> = ideal
        .gens()
        .iter()
        .map(|g| {
            Face::from_vertices(
                ground
                    .vertices()
                    .filter(|&i| i64::from(g.exps()[i]) > i64::from(a[i])),
            )
        })
        .collect();
    masks.sort_unstable();
    masks.dedup();
    let mut minimal: Vec<Face> = Vec::with_capacity(masks.len());
    for m in masks {
        if !minimal.iter().any(|k| k.is_subset_of(m)) {
            minimal.push(m);
        }
    }
    minimal
}

pub(crate) fn degree_complex_unchecked(
    ideal: &MonomialIdeal,
    a: &Multidegree,
) -> SimplicialComplex {
    let n = ideal.nvars();
    let ground = Face::full(n).difference(a.neg_support());
    let obs = obstructions(ideal, a.as_slice(), ground);
    if obs.first() == Some(&Face::EMPTY) {
        return SimplicialComplex::void(n);
    }
    SimplicialComplex::avoiding(n, ground, &obs)
}

/// `Δ_a(I)`: faces `F` disjoint from `G_a` such that every minimal generator
/// `x^b` has some `i ∉ F ∪ G_a` with `b_i > a_i`.
pub fn degree_complex(ideal: &MonomialIdeal, a: &Multidegree) -> Result<SimplicialComplex> {
    a.check_len(ideal.nvars())?;
    Ok(degree_complex_unchecked(ideal, a))
}

/// The pair `(Δ_a(J), Δ_a(I))` for `J ⊆ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePair {
    pub a: Multidegree,
    pub g_set: Face,
    pub pair: RelativePair,
}

impl DegreePair {
    pub fn big(&self) -> &SimplicialComplex {
        self.pair.big()
    }

    pub fn small(&self) -> &SimplicialComplex {
        self.pair.small()
    }
}

pub(crate) fn degree_pair_unchecked(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    a: &Multidegree,
) -> Result<DegreePair> {
    let big = degree_complex_unchecked(j, a);
    let small = degree_complex_unchecked(i, a);
    if !small.is_subcomplex_of(&big) {
        return Err(Error::invariant(
            "pair-subcomplex",
            format!("Δ_a(I) ⊄ Δ_a(J) at a = {a}"),
        ));
    }
    Ok(DegreePair {
        g_set: a.neg_support(),
        a: a.clone(),
        pair: RelativePair::new_unchecked(big, small),
    })
}

/// Builds `(Δ_a(J), Δ_a(I))`; requires `J ⊆ I`.
pub fn relative_degree_pair(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    a: &Multidegree,
) -> Result<DegreePair> {
    a.check_len(i.nvars())?;
    if !i.contains_ideal(j)? {
        return Err(Error::NotContained);
    }
    degree_pair_unchecked(j, i, a)
}

/// Compares `Δ_a(I)` with `link_{Δ_{a⁺}(I)} G_a`.
pub fn link_reduction_check(ideal: &MonomialIdeal, a: &Multidegree) -> Result<bool> {
    let lhs = degree_complex(ideal, a)?;
    let rhs = degree_complex_unchecked(ideal, &a.positive_part()).link_or_void(a.neg_support());
    Ok(lhs == rhs)
}

/// Candidate multidegrees: coordinate `i` ranges over `-1, 0, …, max(ρ_i, 1) - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationBox {
    rho: Vec<u32>,
}

impl EnumerationBox {
    /// `ρ_i` is the largest exponent of `x_i` over `G(I) ∪ G(J)`.
    pub fn new(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<Self> {
        if i.nvars() != j.nvars() {
            return Err(Error::MixedRings {
                left: i.nvars(),
                right: j.nvars(),
            });
        }
        let rho = i
            .max_exponents()
            .into_iter()
            .zip(j.max_exponents())
            .map(|(x, y)| x.max(y))
            .collect();
        Ok(EnumerationBox { rho })
    }

    pub fn rho(&self) -> &[u32] {
        &self.rho
    }

    pub fn n(&self) -> usize {
        self.rho.len()
    }

    /// Largest coordinate value inside the box.
    pub fn top(&self, i: usize) -> i32 {
        self.rho[i].max(1) as i32 - 1
    }

    pub fn len(&self) -> usize {
        self.rho.iter().map(|&r| r.max(1) as usize + 1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: &Multidegree) -> bool {
        a.len() == self.n()
            && a.as_slice()
                .iter()
                .enumerate()
                .all(|(i, &v)| v >= -1 && v <= self.top(i))
    }

    /// The `k`-th box element in lexicographic order.
    pub fn nth(&self, mut k: usize) -> Multidegree {
        let mut a = vec![0; self.n()];
        for i in (0..self.n()).rev() {
            let radix = self.rho[i].max(1) as usize + 1;
            a[i] = (k % radix) as i32 - 1;
            k /= radix;
        }
        Multidegree(a)
    }

    /// All box elements in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = Multidegree> + '_ {
        let n = self.n();
        let mut cur: Option<Vec<i32>> = Some(vec![-1; n]);
        std::iter::from_fn(move || {
            let out = cur.clone()?;
            let mut next = out.clone();
            let mut k = n;
            loop {
                if k == 0 {
                    cur = None;
                    break;
                }
                k -= 1;
                if next[k] < self.top(k) {
                    next[k] += 1;
                    for v in &mut next[k + 1..] {
                        *v = -1;
                    }
                    cur = Some(next);
                    break;
                }
            }
            Some(Multidegree(out))
        })
    }

    /// Where `a` reduces to: `None` when some `i ∉ G_a` has `a_i ≥ ρ_i`
    /// (cone vanishing), otherwise `a` with negative entries set to −1.
    pub fn reduce(&self, a: &Multidegree) -> Option<Multidegree> {
        if a.as_slice()
            .iter()
            .zip(&self.rho)
            .any(|(&v, &r)| v >= 0 && v as i64 >= r as i64)
        {
            return None;
        }
        Some(Multidegree(
            a.as_slice().iter().map(|&v| v.max(-1)).collect(),
        ))
    }

    /// Checks the reduction certificate for an arbitrary `a` against the box.
    ///
    /// Either both complexes are cones with a common apex and all relative
    /// cohomology vanishes, or the pair coincides with that of the reduced
    /// box element.
    pub fn certify(
        &self,
        j: &MonomialIdeal,
        i: &MonomialIdeal,
        a: &Multidegree,
        field: PrimeField,
    ) -> Result<()> {
        a.check_len(self.n())?;
        let pair = degree_pair_unchecked(j, i, a)?;
        match self.reduce(a) {
            None => {
                let apex = (0..self.n())
                    .find(|&k| a.as_slice()[k] >= 0 && a.as_slice()[k] as i64 >= self.rho[k] as i64)
                    .expect("reduce found an apex");
                if !pair.big().is_cone_with_apex(apex) || !pair.small().is_cone_with_apex(apex) {
                    return Err(Error::invariant(
                        "box-cone",
                        format!("pair at {a} is not a cone with apex x{}", apex + 1),
                    ));
                }
                if !relative_cohomology_dims(&pair.pair, field).is_zero() {
                    return Err(Error::invariant(
                        "box-cone",
                        format!("cone pair at {a} has nonzero cohomology"),
                    ));
                }
            }
            Some(b) => {
                let reduced = degree_pair_unchecked(j, i, &b)?;
                if reduced.pair != pair.pair {
                    return Err(Error::invariant(
                        "box-negative",
                        format!("pair at {a} differs from the pair at {b}"),
                    ));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingContext;
    use std::sync::Arc;

    fn cycle(n: usize) -> (Arc<RingContext>, MonomialIdeal) {
        let r = RingContext::standard(n).unwrap();
        let i = MonomialIdeal::squarefree(
            r.clone(),
            (0..n).map(|k| Face::from_vertices([k, (k + 1) % n])),
        );
        (r, i)
    }

    /// Definition-level oracle.
    fn brute_degree_complex(ideal: &MonomialIdeal, a: &[i32]) -> Vec<Face> {
        let n = ideal.nvars();
        let g = Face::from_vertices((0..n).filter(|&i| a[i] < 0));
        let mut faces: Vec<Face> = Face::full(n)
            .subsets()
            .filter(|f| f.is_disjoint(g))
            .filter(|f| {
                ideal.gens().iter().all(|b| {
                    (0..n).any(|i| !f.contains(i) && !g.contains(i) && b.exps()[i] as i32 > a[i])
                })
            })
            .collect();
        faces.sort();
        faces
    }

    #[test]
    fn squarefree_at_zero_is_stanley_reisner() {
        let (_, i) = cycle(5);
        let d = degree_complex(&i, &Multidegree::zero(5)).unwrap();
        assert_eq!(d, SimplicialComplex::from_squarefree_ideal(&i).unwrap());
    }

    #[test]
    fn member_degree_gives_void() {
        let (_, i) = cycle(5);
        let d = degree_complex(&i, &Multidegree::new(vec![1, 1, 0, 0, 0])).unwrap();
        assert!(d.is_void());
        let e = degree_complex(&i, &Multidegree::new(vec![-1, -1, -1, -1, 0])).unwrap();
        assert!(e.is_void());
    }

    #[test]
    fn empty_face_only() {
        // I = (x1), a = (0): ∅ qualifies via i = 1 but {1} does not
        let r = RingContext::standard(1).unwrap();
        let i = MonomialIdeal::prime(r, Face::singleton(0));
        let d = degree_complex(&i, &Multidegree::new(vec![0])).unwrap();
        assert!(d.is_empty_face());
    }

    #[test]
    fn square_of_cycle_at_all_ones() {
        // x1⋯x5 = (x1x2)(x3x4)·x5 lies in I², so the complex is void
        let (_, i) = cycle(5);
        let i2 = i.power(2).unwrap();
        let a = Multidegree::new(vec![1; 5]);
        assert!(i2.contains(&a.positive_monomial()));
        assert!(degree_complex(&i2, &a).unwrap().is_void());
    }

    #[test]
    fn matches_definition_on_cycle_powers() {
        let (_, i) = cycle(5);
        let i2 = i.power(2).unwrap();
        let bx = EnumerationBox::new(&i2, &i2).unwrap();
        for a in bx.iter() {
            let d = degree_complex(&i2, &a).unwrap();
            assert_eq!(
                d.faces(),
                &brute_degree_complex(&i2, a.as_slice())[..],
                "{a}"
            );
        }
    }

    #[test]
    fn link_reduction() {
        let (_, i) = cycle(5);
        assert!(link_reduction_check(&i, &Multidegree::new(vec![-1, 0, 0, 0, 0])).unwrap());
        assert!(link_reduction_check(&i, &Multidegree::new(vec![2, 0, 1, 0, 0])).unwrap());
    }

    #[test]
    fn pair_requires_containment() {
        let (r, i) = cycle(5);
        let i2 = i.power(2).unwrap();
        let a = Multidegree::zero(5);
        assert_eq!(
            relative_degree_pair(&i, &i2, &a).unwrap_err(),
            Error::NotContained
        );
        let same = relative_degree_pair(&i, &i, &a).unwrap();
        assert!(same.pair.is_trivial());
        let bad = Multidegree::zero(4);
        assert!(matches!(
            relative_degree_pair(&i2, &i, &bad),
            Err(Error::DegreeLength { .. })
        ));
        drop(r);
    }

    #[test]
    fn box_shapes() {
        let r = RingContext::standard(2).unwrap();
        let x1x2 = MonomialIdeal::squarefree(r, [Face::full(2)]);
        let bx = EnumerationBox::new(&x1x2, &x1x2).unwrap();
        let all: Vec<Vec<i32>> = bx.iter().map(|a| a.as_slice().to_vec()).collect();
        assert_eq!(
            all,
            vec![vec![-1, -1], vec![-1, 0], vec![0, -1], vec![0, 0]]
        );
        let (_, i) = cycle(5);
        let i2 = i.power(2).unwrap();
        let bx = EnumerationBox::new(&i2, &i).unwrap();
        assert_eq!(bx.rho(), &[2; 5]);
        assert_eq!(bx.len(), 243);
        assert_eq!(bx.iter().count(), 243);
        assert!(bx.iter().enumerate().all(|(k, a)| bx.nth(k) == a));
        assert!(bx.iter().all(|a| bx.contains(&a)));
    }

    #[test]
    fn outside_box_certificates() {
        let (_, i) = cycle(5);
        let i2 = i.power(2).unwrap();
        let bx = EnumerationBox::new(&i, &i2).unwrap();
        let f = PrimeField::default();
        for a in [
            vec![2, 0, 0, 0, 0],
            vec![5, 1, -1, 0, 3],
            vec![-4, 1, 0, -2, 1],
            vec![-1, -1, -1, -1, -9],
        ] {
            bx.certify(&i2, &i, &Multidegree::new(a), f).unwrap();
        }
    }

    #[test]
    fn multidegree_parsing() {
        let a: Multidegree = "-1,0, 2".parse().unwrap();
        assert_eq!(a.as_slice(), &[-1, 0, 2]);
        assert_eq!(a.to_string(), "(-1,0,2)");
        assert_eq!(a.neg_support(), Face::singleton(0));
        assert!("1,x".parse::<Multidegree>().is_err());
    }
}
