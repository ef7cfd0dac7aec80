//! Monomials and monomial ideals in `k[x_1, …, x_n]`.
//!
//! Ideals always hold their minimal generating set. The zero ideal has no
//! generators and the unit ideal is generated by the monomial `1`.

use std::cmp::Reverse;
use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// Variable names of a polynomial ring.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
}

impl RingContext {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::EmptyRing);
        }
        if names.len() > MAX_VERTICES {
            return Err(Error::TooManyVariables {
                max: MAX_VERTICES,
                got: names.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &names {
            if !seen.insert(name.as_str()) {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(RingContext { names }))
    }

    /// `k[x1, …, xn]`.
    pub fn standard(n: usize) -> Result<Arc<Self>> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|s| s == name)
    }
}

/// An exponent vector `x^a` with `a ∈ ℕⁿ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(transparent)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn variable(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// The squarefree monomial `x_F`.
    pub fn from_face(n: usize, face: Face) -> Self {
        let mut exps = vec![0; n];
        for v in face.vertices() {
            exps[v] = 1;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> Face {
        Face::from_vertices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.min(b))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn checked_pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(k).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// `self / gcd(self, m)`, the generator of `(self) : m`.
    pub fn colon(&self, m: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&m.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub fn display<'a>(&'a self, ring: &'a RingContext) -> impl fmt::Display + 'a {
        MonomialDisplay { mono: self, ring }
    }
}

struct MonomialDisplay<'a> {
    mono: &'a Monomial,
    ring: &'a RingContext,
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mono.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.mono.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&self.ring.names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Divisibility test with a support prefilter.
#[derive(Clone)]
struct Keyed {
    support: u64,
    mono: Monomial,
}

fn minimal_set(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| Reverse(&a.exps).cmp(&Reverse(&b.exps)))
    });
    cands.dedup();
    let mut kept: Vec<Keyed> = Vec::with_capacity(cands.len());
    for m in cands {
        let support = m.support().bits();
        let redundant = kept
            .iter()
            .any(|k| k.support & !support == 0 && k.mono.divides(&m));
        if !redundant {
            kept.push(Keyed { support, mono: m });
        }
    }
    kept.into_iter().map(|k| k.mono).collect()
}

/// A monomial ideal given by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<RingContext>,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, discarding redundant generators.
    pub fn minimize(
        ring: Arc<RingContext>,
        gens: impl IntoIterator<Item = Monomial>,
    ) -> Result<Self> {
        let n = ring.n();
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.nvars() != n) {
            return Err(Error::MixedRings {
                left: n,
                right: bad.nvars(),
            });
        }
        Ok(MonomialIdeal {
            ring,
            gens: minimal_set(gens),
        })
    }

    pub fn zero(ring: Arc<RingContext>) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn unit(ring: Arc<RingContext>) -> Self {
        let n = ring.n();
        MonomialIdeal {
            ring,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The monomial prime `(x_i | i ∈ vars)`.
    pub fn prime(ring: Arc<RingContext>, vars: Face) -> Self {
        let n = ring.n();
        let gens = vars.vertices().map(|i| Monomial::variable(n, i)).collect();
        MonomialIdeal {
            ring,
            gens: minimal_set(gens),
        }
    }

    /// The maximal homogeneous ideal `m = (x_1, …, x_n)`.
    pub fn maximal(ring: Arc<RingContext>) -> Self {
        let n = ring.n();
        Self::prime(ring, Face::full(n))
    }

    /// The squarefree ideal generated by `x_F` for the given faces.
    pub fn squarefree(ring: Arc<RingContext>, faces: impl IntoIterator<Item = Face>) -> Self {
        let n = ring.n();
        let gens = faces
            .into_iter()
            .map(|f| Monomial::from_face(n, f))
            .collect();
        MonomialIdeal {
            ring,
            gens: minimal_set(gens),
        }
    }

    pub fn ring(&self) -> &Arc<RingContext> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.n()
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    fn same_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::MixedRings {
                left: self.nvars(),
                right: other.nvars(),
            })
        }
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.nvars() == self.nvars() {
            Ok(())
        } else {
            Err(Error::MixedRings {
                left: self.nvars(),
                right: m.nvars(),
            })
        }
    }

    fn rebuild(&self, gens: Vec<Monomial>) -> MonomialIdeal {
        MonomialIdeal {
            ring: self.ring.clone(),
            gens: minimal_set(gens),
        }
    }

    /// Ideal membership: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.contains(g)))
    }

    /// Membership of `m` in the localization `I·S_{x_F}`, i.e. after inverting
    /// the variables in `inverted`.
    pub fn contains_localized(&self, m: &Monomial, inverted: Face) -> bool {
        self.gens.iter().any(|g| {
            g.exps
                .iter()
                .zip(&m.exps)
                .enumerate()
                .all(|(i, (&b, &a))| inverted.contains(i) || b <= a)
        })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        Ok(self.rebuild(self.gens.iter().chain(&other.gens).cloned().collect()))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.checked_mul(h)?);
            }
        }
        Ok(self.rebuild(gens))
    }

    pub fn power(&self, t: u32) -> Result<MonomialIdeal> {
        if t == 0 {
            return Err(Error::NonPositivePower(t));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(self.rebuild(gens))
    }

    /// `I : m`.
    pub fn colon_monomial(&self, m: &Monomial) -> Result<MonomialIdeal> {
        self.check_monomial(m)?;
        Ok(self.rebuild(self.gens.iter().map(|g| g.colon(m)).collect()))
    }

    /// `I : J = ⋂_{h ∈ G(J)} (I : h)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.same_ring(other)?;
        let mut hs = other.gens.iter();
        let first = hs.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(first)?;
        for h in hs {
            acc = acc.intersect(&self.colon_monomial(h)?)?;
        }
        Ok(acc)
    }

    pub fn radical(&self) -> MonomialIdeal {
        let n = self.nvars();
        self.rebuild(
            self.gens
                .iter()
                .map(|g| Monomial::from_face(n, g.support()))
                .collect(),
        )
    }

    /// Supports of the generators of `√I`, the hyperedges whose minimal
    /// transversals are the minimal primes.
    fn radical_supports(&self) -> Vec<Face> {
        self.radical().gens.iter().map(Monomial::support).collect()
    }

    /// Minimal primes of `I`, each given by its set of variables.
    ///
    /// The zero ideal has the single minimal prime `(0)`, returned as `∅`.
    pub fn minimal_primes(&self) -> Result<Vec<Face>> {
        if self.is_unit() {
            return Err(Error::UnitIdeal);
        }
        let edges = self.radical_supports();
        let mut found = Vec::new();
        transversals(&edges, Face::EMPTY, &mut found);
        found.sort();
        found.dedup();
        let minimal: Vec<Face> = found
            .iter()
            .copied()
            .filter(|&p| !found.iter().any(|&q| q != p && q.is_subset_of(p)))
            .collect();
        Ok(minimal)
    }

    /// Krull dimension of `S/I`; `-1` for the unit ideal.
    pub fn dim_quotient(&self) -> i32 {
        if self.is_unit() {
            return -1;
        }
        let edges = self.radical_supports();
        let mut best = self.nvars();
        min_transversal(&edges, Face::EMPTY, &mut best);
        (self.nvars() - best) as i32
    }

    /// Componentwise maximum exponent over the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut rho = vec![0; self.nvars()];
        for g in &self.gens {
            for (r, &e) in rho.iter_mut().zip(&g.exps) {
                *r = (*r).max(e);
            }
        }
        rho
    }

    pub fn display(&self) -> impl fmt::Display + '_ {
        IdealDisplay(self)
    }
}

struct IdealDisplay<'a>(&'a MonomialIdeal);

impl fmt::Display for IdealDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.0.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display(&self.0.ring))?;
        }
        f.write_str(")")
    }
}

fn first_uncovered(edges: &[Face], chosen: Face) -> Option<Face> {
    edges
        .iter()
        .copied()
        .filter(|e| e.is_disjoint(chosen))
        .min_by_key(|e| e.len())
}

fn transversals(edges: &[Face], chosen: Face, out: &mut Vec<Face>) {
    if out.iter().any(|t| t.is_subset_of(chosen)) {
        return;
    }
    match first_uncovered(edges, chosen) {
        None => out.push(chosen),
        Some(e) => {
            for v in e.vertices() {
                transversals(edges, chosen.with(v), out);
            }
        }
    }
}

fn min_transversal(edges: &[Face], chosen: Face, best: &mut usize) {
    if chosen.len() >= *best {
        return;
    }
    match first_uncovered(edges, chosen) {
        None => *best = chosen.len(),
        Some(e) => {
            if chosen.len() + 1 >= *best {
                return;
            }
            for v in e.vertices() {
                min_transversal(edges, chosen.with(v), best);
            }
        }
    }
}
