//! Multigraded local cohomology of `I/J` through relative degree complexes.
//!
//! `H^i_m(I/J)_a ≅ H̃^{i-|G_a|-1}(Δ_a(J), Δ_a(I))`, and the piece vanishes
//! when `G_a` is not a face of `Δ(√J)`. Global invariants (depth, CM, gCM)
//! are decided over the [`EnumerationBox`].

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{relative_cohomology_dims, CochainComplex, CohomologyDims};
use crate::degree::{
    degree_complex_unchecked, degree_pair_unchecked, DegreePair, EnumerationBox, Multidegree,
};
use crate::error::{Error, Result};
use crate::face::Face;
use crate::linalg::{Matrix, PrimeField};
use crate::ring::MonomialIdeal;
use crate::simplicial::RelativePair;

/// A validated quotient `I/J` with `J ⊆ I`.
#[derive(Clone, Debug)]
pub struct IdealQuotient {
    j: MonomialIdeal,
    i: MonomialIdeal,
    bx: EnumerationBox,
    j_supports: Vec<Face>,
}

/// One nonzero entry of a profile table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ProfileEntry {
    pub i: i32,
    pub a: Multidegree,
    pub h: usize,
}

#[derive(Clone, Copy, Debug)]
pub struct ProfileOptions {
    /// Run the link-based criterion and require agreement with the direct scan.
    pub reisner_crosscheck: bool,
    /// Check the cone certificate just past the top of the box in every direction.
    pub certify_frontier: bool,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            reisner_crosscheck: true,
            certify_frontier: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyProfile {
    pub characteristic: u32,
    pub dim: i32,
    pub depth: i32,
    #[serde(rename = "is_CM")]
    pub is_cm: bool,
    #[serde(rename = "is_gCM")]
    pub is_gcm: bool,
    pub rigidity_witness: Option<Multidegree>,
    /// `I = J`; depth and CM are then conventions.
    pub zero_module: bool,
    pub box_size: usize,
    /// Sorted by `(i, a)`.
    pub table: Vec<ProfileEntry>,
    /// Box degrees where a nonzero piece has a relative pair of too large a dimension.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub relevance_violations: Vec<Multidegree>,
}

impl CohomologyProfile {
    pub fn piece(&self, i: i32, a: &Multidegree) -> usize {
        self.table
            .iter()
            .find(|e| e.i == i && &e.a == a)
            .map_or(0, |e| e.h)
    }
}

/// The three local cohomology tables entering the long exact sequence at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesTerms {
    pub quotient: CohomologyDims,
    pub s_mod_j: CohomologyDims,
    pub s_mod_i: CohomologyDims,
}

impl SesTerms {
    /// `Σ_j (-1)^j [h^j(I/J) - h^j(S/J) + h^j(S/I)]`, indexed in complex degree.
    pub fn alternating_sum(&self) -> i64 {
        self.quotient.euler_characteristic() - self.s_mod_j.euler_characteristic()
            + self.s_mod_i.euler_characteristic()
    }
}

/// `·x^b : H^i_m(I/J)_a → H^i_m(I/J)_{a+b}` in face-cochain and cohomology bases.
#[derive(Clone, Debug, Serialize)]
pub struct MultiplicationMap {
    pub source: Multidegree,
    pub target: Multidegree,
    pub i: i32,
    pub source_faces: Vec<Face>,
    pub target_faces: Vec<Face>,
    /// Rows indexed by `target_faces`, columns by `source_faces`.
    #[serde(serialize_with = "matrix_rows")]
    pub cochain: Matrix,
    /// Rows indexed by the target cohomology basis, columns by the source one.
    #[serde(serialize_with = "matrix_rows")]
    pub cohomology: Matrix,
}

fn matrix_rows<S: serde::Serializer>(m: &Matrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.to_rows().serialize(s)
}

struct DegreeEval {
    a: Multidegree,
    g_len: i32,
    dims: CohomologyDims,
    pair_dim: Option<i32>,
    reisner_ok: bool,
}

impl IdealQuotient {
    pub fn new(j: MonomialIdeal, i: MonomialIdeal) -> Result<Self> {
        if !i.contains_ideal(&j)? {
            return Err(Error::NotContained);
        }
        let bx = EnumerationBox::new(&i, &j)?;
        let j_supports = j.gens().iter().map(|g| g.support()).collect();
        Ok(IdealQuotient {
            j,
            i,
            bx,
            j_supports,
        })
    }

    pub fn numerator(&self) -> &MonomialIdeal {
        &self.i
    }

    pub fn denominator(&self) -> &MonomialIdeal {
        &self.j
    }

    pub fn nvars(&self) -> usize {
        self.i.nvars()
    }

    pub fn enumeration_box(&self) -> &EnumerationBox {
        &self.bx
    }

    pub fn is_zero(&self) -> bool {
        self.i == self.j
    }

    fn check_degree(&self, a: &Multidegree) -> Result<()> {
        if a.len() != self.nvars() {
            return Err(Error::DegreeLength {
                expected: self.nvars(),
                got: a.len(),
            });
        }
        Ok(())
    }

    /// `G_a ∉ Δ(√J)`: some generator of `J` is supported inside `G_a`.
    pub fn vanishes_at(&self, a: &Multidegree) -> bool {
        let g = a.neg_support();
        self.j_supports.iter().any(|s| s.is_subset_of(g))
    }

    pub fn degree_pair(&self, a: &Multidegree) -> Result<DegreePair> {
        self.check_degree(a)?;
        degree_pair_unchecked(&self.j, &self.i, a)
    }

    /// All pieces at degree `a`, indexed by the complex degree `i - |G_a| - 1`.
    pub fn pieces_at(&self, a: &Multidegree, field: PrimeField) -> Result<CohomologyDims> {
        self.check_degree(a)?;
        if self.is_zero() || self.vanishes_at(a) {
            return Ok(CohomologyDims::default());
        }
        let dp = degree_pair_unchecked(&self.j, &self.i, a)?;
        Ok(relative_cohomology_dims(&dp.pair, field))
    }

    /// `dim H^i_m(I/J)_a`.
    pub fn lc_piece(&self, i: i32, a: &Multidegree, field: PrimeField) -> Result<usize> {
        let shift = a.neg_support().len() as i32 + 1;
        Ok(self.pieces_at(a, field)?.get(i - shift))
    }

    /// Krull dimension: max of `dim S/√(J : x^g)` over generators `x^g` of `I` outside `J`.
    pub fn dim(&self) -> i32 {
        self.i
            .gens()
            .iter()
            .filter(|g| !self.j.contains(g))
            .map(|g| {
                self.j
                    .colon_monomial(g)
                    .expect("same ring")
                    .radical()
                    .dim_quotient()
            })
            .max()
            .unwrap_or(-1)
    }

    /// Local cohomology of `S/J`, `S/I` and `I/J` at `a`.
    pub fn ses_terms(&self, a: &Multidegree, field: PrimeField) -> Result<SesTerms> {
        self.check_degree(a)?;
        let big = degree_complex_unchecked(&self.j, a);
        let small = degree_complex_unchecked(&self.i, a);
        let s_mod_j = relative_cohomology_dims(&RelativePair::absolute(big), field);
        let s_mod_i = relative_cohomology_dims(&RelativePair::absolute(small), field);
        Ok(SesTerms {
            quotient: self.pieces_at(a, field)?,
            s_mod_j,
            s_mod_i,
        })
    }

    /// Euler-characteristic shadow of `0 → I/J → S/J → S/I → 0` at `a`.
    pub fn ses_consistency(&self, a: &Multidegree, field: PrimeField) -> Result<bool> {
        Ok(self.ses_terms(a, field)?.alternating_sum() == 0)
    }

    fn evaluate(
        &self,
        a: Multidegree,
        field: PrimeField,
        d: i32,
        opts: ProfileOptions,
    ) -> Result<DegreeEval> {
        let g_len = a.neg_support().len() as i32;
        if opts.certify_frontier {
            for k in 0..self.nvars() {
                let v = a.as_slice()[k];
                if v >= 0 && v == self.bx.top(k) {
                    let mut past = a.as_slice().to_vec();
                    past[k] += 1;
                    self.bx
                        .certify(&self.j, &self.i, &Multidegree::new(past), field)?;
                }
            }
        }
        if self.vanishes_at(&a) {
            return Ok(DegreeEval {
                a,
                g_len,
                dims: CohomologyDims::default(),
                pair_dim: None,
                reisner_ok: true,
            });
        }
        let dp = degree_pair_unchecked(&self.j, &self.i, &a)?;
        if dp.pair.is_trivial() {
            return Ok(DegreeEval {
                a,
                g_len,
                dims: CohomologyDims::default(),
                pair_dim: None,
                reisner_ok: true,
            });
        }
        let dims = relative_cohomology_dims(&dp.pair, field);
        let mut reisner_ok = true;
        if opts.reisner_crosscheck {
            let budget = d - g_len;
            for &f in dp.big().faces() {
                let fl = f.len() as i32;
                if fl >= budget {
                    break;
                }
                let link = if f.is_empty() {
                    dp.pair.clone()
                } else {
                    dp.pair.link(f)
                };
                if link.is_trivial() {
                    continue;
                }
                let h = if f.is_empty() {
                    dims.clone()
                } else {
                    relative_cohomology_dims(&link, field)
                };
                if h.nonzero().any(|(j, _)| j < budget - fl - 1) {
                    reisner_ok = false;
                    break;
                }
            }
        }
        Ok(DegreeEval {
            a,
            g_len,
            pair_dim: dp.pair.dim(),
            dims,
            reisner_ok,
        })
    }

    /// Full scan of the box.
    pub fn profile(&self, field: PrimeField, opts: ProfileOptions) -> Result<CohomologyProfile> {
        let d = self.dim();
        if self.is_zero() {
            return Ok(CohomologyProfile {
                characteristic: field.characteristic(),
                dim: -1,
                depth: -1,
                is_cm: true,
                is_gcm: true,
                rigidity_witness: None,
                zero_module: true,
                box_size: self.bx.len(),
                table: vec![],
                relevance_violations: vec![],
            });
        }
        let evals: Vec<DegreeEval> = (0..self.bx.len())
            .into_par_iter()
            .map(|k| self.evaluate(self.bx.nth(k), field, d, opts))
            .collect::<Result<_>>()?;

        let mut table = Vec::new();
        let mut relevance_violations = Vec::new();
        let mut reisner_cm = true;
        let mut is_gcm = true;
        let mut rigidity_witness = None;
        for ev in evals {
            reisner_cm &= ev.reisner_ok;
            if ev.dims.is_zero() {
                continue;
            }
            if ev.pair_dim.is_some_and(|pd| pd > d - ev.g_len - 1) {
                relevance_violations.push(ev.a.clone());
            }
            if rigidity_witness.is_none() && ev.g_len == 0 && ev.dims.get(0) > 0 {
                rigidity_witness = Some(ev.a.clone());
            }
            for (j, h) in ev.dims.nonzero() {
                let i = j + ev.g_len + 1;
                if i < d && ev.g_len > 0 {
                    is_gcm = false;
                }
                table.push(ProfileEntry {
                    i,
                    a: ev.a.clone(),
                    h,
                });
            }
        }
        table.sort();
        let depth = table.iter().map(|e| e.i).min().ok_or_else(|| {
            Error::invariant(
                "nonvanishing",
                "nonzero module with no local cohomology in the box",
            )
        })?;
        let top = table.iter().map(|e| e.i).max().unwrap_or(-1);
        if top != d {
            return Err(Error::invariant(
                "top-degree",
                format!("top nonzero local cohomology in degree {top} but dim = {d}"),
            ));
        }
        let is_cm = depth == d;
        if opts.reisner_crosscheck && reisner_cm != is_cm {
            return Err(Error::invariant(
                "relative-reisner",
                format!("direct scan says CM = {is_cm}, link criterion says {reisner_cm}"),
            ));
        }
        if rigidity_witness.is_some() && depth > 1 {
            return Err(Error::invariant(
                "rigidity",
                format!("H̃⁰ witness present but depth = {depth}"),
            ));
        }
        if is_cm && !is_gcm {
            return Err(Error::invariant(
                "cm-implies-gcm",
                "CM module reported not gCM",
            ));
        }
        Ok(CohomologyProfile {
            characteristic: field.characteristic(),
            dim: d,
            depth,
            is_cm,
            is_gcm,
            rigidity_witness,
            zero_module: false,
            box_size: self.bx.len(),
            table,
            relevance_violations,
        })
    }

    /// Profile of a nonzero quotient with all cross-checks enabled.
    pub fn depth_and_cm(&self, field: PrimeField) -> Result<CohomologyProfile> {
        if self.is_zero() {
            return Err(Error::ZeroQuotient);
        }
        self.profile(field, ProfileOptions::default())
    }

    /// First box degree with `G_a = ∅` and `H̃⁰(Δ_a(J), Δ_a(I)) ≠ 0`.
    pub fn rigidity_scan(&self, field: PrimeField) -> Result<Option<Multidegree>> {
        if self.is_zero() {
            return Err(Error::ZeroQuotient);
        }
        let found = (0..self.bx.len())
            .into_par_iter()
            .map(|k| self.bx.nth(k))
            .filter(|a| a.is_nonnegative())
            .map(|a| Ok((self.pieces_at(&a, field)?.get(0) > 0).then_some(a)))
            .collect::<Result<Vec<_>>>()?;
        Ok(found.into_iter().flatten().next())
    }

    /// No nonzero piece below `dim` at any box degree with `G_a ≠ ∅`.
    pub fn gcm_check(&self, field: PrimeField) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroQuotient);
        }
        let d = self.dim();
        let bad = (0..self.bx.len())
            .into_par_iter()
            .map(|k| self.bx.nth(k))
            .filter(|a| !a.is_nonnegative())
            .map(|a| {
                let shift = a.neg_support().len() as i32 + 1;
                Ok(self
                    .pieces_at(&a, field)?
                    .nonzero()
                    .any(|(j, _)| j + shift < d))
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(!bad.into_iter().any(|b| b))
    }

    /// The map on `H^i_m` induced by `Δ_{a+b}(K) ⊆ Δ_a(K)`.
    pub fn multiplication_map(
        &self,
        i: i32,
        a: &Multidegree,
        b: &Multidegree,
        field: PrimeField,
    ) -> Result<MultiplicationMap> {
        self.check_degree(a)?;
        self.check_degree(b)?;
        if !b.is_nonnegative() {
            return Err(Error::NegativeShift);
        }
        let target = a.add(b);
        let (gs, gt) = (a.neg_support(), target.neg_support());
        if gs != gt {
            return Err(Error::NegativeSupportChanged {
                from: gs.to_string(),
                to: gt.to_string(),
            });
        }
        let j = i - gs.len() as i32 - 1;
        let src = CochainComplex::new(&self.degree_pair(a)?.pair, field);
        let dst = CochainComplex::new(&self.degree_pair(&target)?.pair, field);
        let source_faces = src.basis(j).to_vec();
        let target_faces = dst.basis(j).to_vec();
        let mut cochain = Matrix::zeros(target_faces.len(), source_faces.len());
        for (c, f) in source_faces.iter().enumerate() {
            if let Ok(r) = target_faces.binary_search(f) {
                cochain.set(r, c, 1);
            }
        }
        let sb = src.cohomology_basis(j);
        let tb = dst.cohomology_basis(j);
        let mut cohomology = Matrix::zeros(tb.dim(), sb.dim());
        for (c, rep) in sb.representatives.iter().enumerate() {
            let image = cochain.mul_vec(rep, field);
            let coords = tb.coordinates(&image).ok_or_else(|| {
                Error::invariant(
                    "chain-map",
                    format!("restriction of a cocycle at {a} is not a cocycle"),
                )
            })?;
            for (r, v) in coords.into_iter().enumerate() {
                cohomology.set(r, c, v);
            }
        }
        Ok(MultiplicationMap {
            source: a.clone(),
            target,
            i,
            source_faces,
            target_faces,
            cochain,
            cohomology,
        })
    }
}

pub fn lc_piece(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    deg: i32,
    a: &Multidegree,
    field: PrimeField,
) -> Result<usize> {
    IdealQuotient::new(j.clone(), i.clone())?.lc_piece(deg, a, field)
}

pub fn dim_quotient_pair(j: &MonomialIdeal, i: &MonomialIdeal) -> Result<i32> {
    Ok(IdealQuotient::new(j.clone(), i.clone())?.dim())
}

pub fn depth_and_cm(
    j: &MonomialIdeal,
    i: &MonomialIdeal,
    field: PrimeField,
) -> Result<CohomologyProfile> {
    IdealQuotient::new(j.clone(), i.clone())?.depth_and_cm(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Monomial, RingContext};
    use std::sync::Arc;

    fn f2() -> PrimeField {
        PrimeField::default()
    }

    fn ring(n: usize) -> Arc<RingContext> {
        RingContext::standard(n).unwrap()
    }

    #[test]
    fn top_cohomology_of_the_ring() {
        let r = ring(3);
        let q = IdealQuotient::new(MonomialIdeal::zero(r.clone()), MonomialIdeal::unit(r)).unwrap();
        let a = Multidegree::new(vec![-1; 3]);
        assert_eq!(q.lc_piece(3, &a, f2()).unwrap(), 1);
        assert_eq!(q.dim(), 3);
        let p = q.depth_and_cm(f2()).unwrap();
        assert_eq!((p.depth, p.is_cm), (3, true));
        assert_eq!(p.table.len(), 1);
    }

    #[test]
    fn equal_ideals() {
        let r = ring(2);
        let i = MonomialIdeal::squarefree(r, [Face::full(2)]);
        let q = IdealQuotient::new(i.clone(), i).unwrap();
        assert_eq!(q.dim(), -1);
        assert_eq!(q.depth_and_cm(f2()).unwrap_err(), Error::ZeroQuotient);
        let p = q.profile(f2(), ProfileOptions::default()).unwrap();
        assert!(p.zero_module && p.is_cm && p.depth == -1);
        for a in q.enumeration_box().iter() {
            assert!(q.pieces_at(&a, f2()).unwrap().is_zero());
        }
    }

    #[test]
    fn vanishing_clause_uses_denominator_radical() {
        // J = 0, I = (x1), a = -1: Δ_a(J) = {∅}, Δ_a(I) void, so H^1 ≠ 0 even
        // though G_a = {1} is not a face of Δ(√I)
        let r = ring(1);
        let i = MonomialIdeal::prime(r.clone(), Face::singleton(0));
        let q = IdealQuotient::new(MonomialIdeal::zero(r), i).unwrap();
        let a = Multidegree::new(vec![-1]);
        assert!(!q.vanishes_at(&a));
        assert_eq!(q.lc_piece(1, &a, f2()).unwrap(), 1);
    }

    #[test]
    fn not_contained() {
        let r = ring(2);
        let x1 = MonomialIdeal::prime(r.clone(), Face::singleton(0));
        let x2 = MonomialIdeal::prime(r, Face::singleton(1));
        assert_eq!(IdealQuotient::new(x1, x2).unwrap_err(), Error::NotContained);
    }

    #[test]
    fn multiplication_identity_and_shift_errors() {
        let r = ring(2);
        let j = MonomialIdeal::minimize(r.clone(), [Monomial::new(vec![2, 2])]).unwrap();
        let i = MonomialIdeal::minimize(r, [Monomial::new(vec![1, 0])]).unwrap();
        let q = IdealQuotient::new(j, i).unwrap();
        let a = Multidegree::new(vec![1, -1]);
        let zero = Multidegree::zero(2);
        let m = q.multiplication_map(2, &a, &zero, f2()).unwrap();
        assert_eq!(m.cohomology, Matrix::identity(m.cohomology.rows()));
        let bad = Multidegree::new(vec![0, 1]);
        assert!(matches!(
            q.multiplication_map(2, &a, &bad, f2()),
            Err(Error::NegativeSupportChanged { .. })
        ));
        let neg = Multidegree::new(vec![-1, 0]);
        assert_eq!(
            q.multiplication_map(2, &a, &neg, f2()).unwrap_err(),
            Error::NegativeShift
        );
    }
}
