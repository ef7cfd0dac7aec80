//! Symbolic powers of squarefree ideals, symbolic quotients `I^(t)/I^(t+1)`
//! and the symbolic-ordinary discrepancy modules `I^(t)/I^t` of edge ideals.

use std::sync::Arc;

use log::warn;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::{Graph, OddCycleCensus};
use crate::linalg::PrimeField;
use crate::local::{IdealQuotient, ProfileOptions};
use crate::ring::{Monomial, MonomialIdeal, RingContext};
use crate::simplicial::SimplicialComplex;

/// Generator count above which symbolic-power intersections log a warning.
pub const DEFAULT_GENERATOR_CAP: usize = 50_000;

/// `I(G) = (x_i x_j | ij ∈ E(G))` in `x1..xn`.
pub fn edge_ideal(g: &Graph) -> Result<MonomialIdeal> {
    let ring = RingContext::standard(g.n())?;
    Ok(edge_ideal_in(g, ring))
}

pub(crate) fn edge_ideal_in(g: &Graph, ring: Arc<RingContext>) -> MonomialIdeal {
    if g.edge_count() == 0 {
        warn!("graph has no edges; its edge ideal is zero");
    }
    MonomialIdeal::squarefree(
        ring,
        g.edges()
            .into_iter()
            .map(|(u, v)| Face::from_vertices([u, v])),
    )
}

/// `I^(t) = ⋂ P^t` over the minimal primes `P` of a squarefree `I`.
pub fn symbolic_power(ideal: &MonomialIdeal, t: u32) -> Result<MonomialIdeal> {
    symbolic_power_capped(ideal, t, DEFAULT_GENERATOR_CAP)
}

pub fn symbolic_power_capped(ideal: &MonomialIdeal, t: u32, cap: usize) -> Result<MonomialIdeal> {
    if t == 0 {
        return Err(Error::NonPositivePower(t));
    }
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() || ideal.is_zero() {
        return Ok(ideal.clone());
    }
    let ring = ideal.ring().clone();
    let mut acc: Option<MonomialIdeal> = None;
    for p in ideal.minimal_primes()? {
        let pt = MonomialIdeal::prime(ring.clone(), p).power(t)?;
        let next = match acc {
            None => pt,
            Some(a) => a.intersect(&pt)?,
        };
        if next.gens().len() > cap {
            warn!(
                "symbolic power t = {t}: intermediate intersection has {} generators (cap {cap})",
                next.gens().len()
            );
        }
        acc = Some(next);
    }
    Ok(acc.expect("a non-unit ideal has a minimal prime"))
}

/// Every nonempty face has a matroid link.
pub fn locally_matroidal(delta: &SimplicialComplex) -> bool {
    delta
        .faces()
        .iter()
        .filter(|f| !f.is_empty())
        .all(|&f| delta.link_or_void(f).is_matroid())
}

/// `I^{t+1} : I = I^t` for `1 ≤ t ≤ T`.
pub fn ratliff_check(ideal: &MonomialIdeal, t_max: u32) -> Result<bool> {
    if ideal.is_zero() {
        return Ok(true);
    }
    let mut pow = ideal.clone();
    for _ in 1..=t_max {
        let next = pow.product(ideal)?;
        if next.colon(ideal)? != pow {
            return Ok(false);
        }
        pow = next;
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicQuotientEntry {
    pub t: u32,
    pub dim: i32,
    pub depth: i32,
    #[serde(rename = "is_CM")]
    pub is_cm: bool,
    #[serde(rename = "is_gCM")]
    pub is_gcm: bool,
    pub rigidity_witness: Option<crate::degree::Multidegree>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicQuotientReport {
    pub characteristic: u32,
    pub is_matroid: bool,
    pub is_pure: bool,
    pub locally_matroidal: bool,
    /// `dim S/I_Δ`.
    pub dim_ring: i32,
    pub entries: Vec<SymbolicQuotientEntry>,
}

/// CM verdicts for `I^(t)/I^(t+1)` with `I = I_Δ`, checking along the way
/// that `I^(t+1) : I^(t) = I`, that the quotient has dimension `dim S/I`,
/// and that the matroid property matches CM-ness for `t ≥ 2`.
pub fn symbolic_quotient_report(
    delta: &SimplicialComplex,
    ts: &[u32],
    field: PrimeField,
    opts: ProfileOptions,
) -> Result<SymbolicQuotientReport> {
    let ring = RingContext::standard(delta.n())?;
    let ideal = delta.stanley_reisner_ideal(ring)?;
    if ideal.is_zero() {
        return Err(Error::Hypothesis(
            "the Stanley–Reisner ideal is zero".into(),
        ));
    }
    let dim_ring = ideal.dim_quotient();
    let is_matroid = delta.is_matroid();
    let mut entries = Vec::new();
    for &t in ts {
        let num = symbolic_power(&ideal, t)?;
        let den = symbolic_power(&ideal, t + 1)?;
        if den.colon(&num)? != ideal {
            return Err(Error::invariant(
                "colon-symbolic",
                format!("I^(t+1) : I^(t) ≠ I at t = {t}"),
            ));
        }
        let q = IdealQuotient::new(den, num)?;
        let p = q.profile(field, opts)?;
        if p.dim != dim_ring {
            return Err(Error::invariant(
                "symbolic-quotient-dim",
                format!(
                    "dim I^(t)/I^(t+1) = {} but dim S/I = {dim_ring} at t = {t}",
                    p.dim
                ),
            ));
        }
        entries.push(SymbolicQuotientEntry {
            t,
            dim: p.dim,
            depth: p.depth,
            is_cm: p.is_cm,
            is_gcm: p.is_gcm,
            rigidity_witness: p.rigidity_witness,
        });
    }
    let high: Vec<bool> = entries
        .iter()
        .filter(|e| e.t >= 2)
        .map(|e| e.is_cm)
        .collect();
    if !high.is_empty() {
        let all = high.iter().all(|&b| b);
        let any = high.iter().any(|&b| b);
        if all != is_matroid || any != is_matroid {
            return Err(Error::invariant(
                "matroid-cm",
                format!("matroid = {is_matroid}, CM for all t ≥ 2 = {all}, for some = {any}"),
            ));
        }
    }
    if is_matroid && entries.iter().any(|e| !e.is_cm) {
        return Err(Error::invariant(
            "matroid-cm",
            "matroid complex with a non-CM symbolic quotient",
        ));
    }
    Ok(SymbolicQuotientReport {
        characteristic: field.characteristic(),
        is_matroid,
        is_pure: delta.is_pure(),
        locally_matroidal: locally_matroidal(delta),
        dim_ring,
        entries,
    })
}

/// Ordinary and symbolic powers `I^t`, `I^(t)` for `t = 1..=t_max`.
#[derive(Clone, Debug)]
pub struct PowerTable {
    pub ideal: MonomialIdeal,
    pub ordinary: Vec<MonomialIdeal>,
    pub symbolic: Vec<MonomialIdeal>,
}

impl PowerTable {
    pub fn new(ideal: &MonomialIdeal, t_max: u32, cap: usize) -> Result<Self> {
        let mut ordinary = Vec::new();
        let mut acc = ideal.clone();
        for t in 1..=t_max {
            if t > 1 {
                acc = acc.product(ideal)?;
            }
            ordinary.push(acc.clone());
        }
        let symbolic = (1..=t_max)
            .into_par_iter()
            .map(|t| symbolic_power_capped(ideal, t, cap))
            .collect::<Result<Vec<_>>>()?;
        for (t, (o, s)) in ordinary.iter().zip(&symbolic).enumerate() {
            if !s.contains_ideal(o)? {
                return Err(Error::invariant(
                    "power-containment",
                    format!("I^t ⊄ I^(t) at t = {}", t + 1),
                ));
            }
        }
        Ok(PowerTable {
            ideal: ideal.clone(),
            ordinary,
            symbolic,
        })
    }

    pub fn t_max(&self) -> u32 {
        self.ordinary.len() as u32
    }

    /// `I^(t)/I^t`.
    pub fn discrepancy(&self, t: u32) -> Result<IdealQuotient> {
        let k = (t - 1) as usize;
        IdealQuotient::new(self.ordinary[k].clone(), self.symbolic[k].clone())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DiscrepancyOptions {
    pub t_max: u32,
    pub field: PrimeField,
    /// Also decide CM-ness of each nonzero discrepancy module (full box scan).
    pub with_cm: bool,
    pub profile: ProfileOptions,
    pub generator_cap: usize,
}

impl Default for DiscrepancyOptions {
    fn default() -> Self {
        DiscrepancyOptions {
            t_max: 5,
            field: PrimeField::default(),
            with_cm: false,
            profile: ProfileOptions::default(),
            generator_cap: DEFAULT_GENERATOR_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscrepancyReport {
    pub n: usize,
    /// 1-based edges.
    pub edges: Vec<(usize, usize)>,
    pub t_max: u32,
    /// `dim I^(t)/I^t` for `t = 1..=t_max`, −1 for the zero module.
    pub dims: Vec<i32>,
    pub nonzero: Vec<bool>,
    /// CM flag per `t`; the zero module counts as CM.
    #[serde(rename = "is_CM", skip_serializing_if = "Option::is_none")]
    pub is_cm: Option<Vec<bool>>,
    /// Smallest `t` from which the computed dims are constant, verified up to `t_max`.
    pub observed_stabilization: u32,
    pub c: usize,
    pub is_bipartite: bool,
    pub is_unicyclic: bool,
    pub is_perfect: bool,
    /// `N[C] = [n]` for every induced odd cycle; absent for bipartite graphs.
    pub cm_edge_condition: Option<bool>,
    pub ratliff: bool,
}

fn connected(g: &Graph) -> Result<()> {
    if !g.is_connected() {
        return Err(Error::Hypothesis("graph is not connected".into()));
    }
    Ok(())
}

fn observed_stabilization(dims: &[i32]) -> u32 {
    let last = *dims.last().expect("t_max ≥ 1");
    let mut t0 = dims.len();
    while t0 > 1 && dims[t0 - 2] == last {
        t0 -= 1;
    }
    t0 as u32
}

/// Dimensions, flags and (optionally) CM-ness of `I^(t)/I^t` for `t ≤ T_max`.
pub fn discrepancy_report(g: &Graph, opts: DiscrepancyOptions) -> Result<DiscrepancyReport> {
    connected(g)?;
    if opts.t_max < 1 {
        return Err(Error::Hypothesis("T_max must be at least 1".into()));
    }
    let census = g.odd_cycle_census()?;
    let ideal = edge_ideal(g)?;
    let powers = PowerTable::new(&ideal, opts.t_max, opts.generator_cap)?;
    let quotients: Vec<IdealQuotient> = (1..=opts.t_max)
        .map(|t| powers.discrepancy(t))
        .collect::<Result<_>>()?;
    let dims: Vec<i32> = quotients.iter().map(IdealQuotient::dim).collect();
    let nonzero: Vec<bool> = quotients.iter().map(|q| !q.is_zero()).collect();
    for (k, (&d, &nz)) in dims.iter().zip(&nonzero).enumerate() {
        if (d == -1) == nz {
            return Err(Error::invariant(
                "zero-module-dim",
                format!("t = {}: dim {d} but nonzero = {nz}", k + 1),
            ));
        }
    }
    if let Some(k) = dims.windows(2).position(|w| w[0] > w[1]) {
        return Err(Error::invariant(
            "dim-monotone",
            format!(
                "dim drops from {} at t = {} to {}",
                dims[k],
                k + 1,
                dims[k + 1]
            ),
        ));
    }
    if census.is_bipartite && nonzero.iter().any(|&b| b) {
        return Err(Error::invariant(
            "bipartite-powers",
            "bipartite graph with I^(t) ≠ I^t",
        ));
    }
    let is_cm = if opts.with_cm {
        let flags = quotients
            .iter()
            .map(|q| Ok(q.profile(opts.field, opts.profile)?.is_cm))
            .collect::<Result<Vec<bool>>>()?;
        cor_cm_shadow(&dims, &nonzero, &flags)?;
        Some(flags)
    } else {
        None
    };
    let ratliff = ratliff_check(&ideal, opts.t_max.min(3))?;
    if !ratliff {
        return Err(Error::invariant(
            "ratliff",
            "edge ideal fails I^(t+1) : I = I^t",
        ));
    }
    Ok(DiscrepancyReport {
        n: g.n(),
        edges: g.edges().into_iter().map(|(u, v)| (u + 1, v + 1)).collect(),
        t_max: opts.t_max,
        observed_stabilization: observed_stabilization(&dims),
        dims,
        nonzero,
        is_cm,
        c: census.c,
        is_bipartite: census.is_bipartite,
        is_unicyclic: census.is_unicyclic,
        is_perfect: census.is_perfect,
        cm_edge_condition: (!census.is_bipartite).then(|| condition_four(g, &census)),
        ratliff,
    })
}

/// A nonzero CM discrepancy at `t` forces every earlier one to be zero or of the same dimension.
fn cor_cm_shadow(dims: &[i32], nonzero: &[bool], cm: &[bool]) -> Result<()> {
    for t in 0..dims.len() {
        if !(nonzero[t] && cm[t]) {
            continue;
        }
        for s in 0..t {
            if nonzero[s] && dims[s] != dims[t] {
                return Err(Error::invariant(
                    "cm-earlier-dims",
                    format!(
                        "CM at t = {} with dim {} but dim {} at t = {}",
                        t + 1,
                        dims[t],
                        dims[s],
                        s + 1
                    ),
                ));
            }
        }
    }
    Ok(())
}

fn condition_four(g: &Graph, census: &OddCycleCensus) -> bool {
    census
        .induced_odd_cycles
        .iter()
        .all(|c| g.closed_neighborhood(Face::from_vertices(c.iter().copied())) == g.vertices())
}

/// `α(G[V ∖ N[C]])` for the odd cycle `C` of a unicyclic graph.
pub fn unicyclic_stable_dim(g: &Graph) -> Result<i32> {
    if !g.is_unicyclic() {
        return Err(Error::Hypothesis("graph is not unicyclic".into()));
    }
    let cycles = g.induced_cycles();
    let cycle = cycles
        .iter()
        .find(|c| c.len() % 2 == 1)
        .ok_or_else(|| Error::Hypothesis("the cycle of the graph is even".into()))?;
    let nc = g.closed_neighborhood(Face::from_vertices(cycle.iter().copied()));
    let (rest, _) = g.remove(nc);
    Ok(rest.independence_number() as i32)
}

/// For a perfect graph, `dim I^(t)/I^t = dim I^(2)/I^2` for `2 ≤ t ≤ T_max`.
pub fn perfect_stable_check(g: &Graph, t_max: u32) -> Result<bool> {
    if !g.is_perfect() {
        return Err(Error::Hypothesis("graph is not perfect".into()));
    }
    if t_max < 2 {
        return Ok(true);
    }
    let ideal = edge_ideal(g)?;
    let powers = PowerTable::new(&ideal, t_max, DEFAULT_GENERATOR_CAP)?;
    let dims: Vec<i32> = (2..=t_max)
        .map(|t| Ok(powers.discrepancy(t)?.dim()))
        .collect::<Result<_>>()?;
    Ok(dims.iter().all(|&d| d == dims[0]))
}

/// Condition `N[C] = [n]` for every induced odd cycle `C`.
pub fn cm_edge_criterion(g: &Graph) -> Result<bool> {
    let census = g.odd_cycle_census()?;
    if census.is_bipartite {
        return Err(Error::Hypothesis("graph is bipartite".into()));
    }
    Ok(condition_four(g, &census))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CmEdgeReport {
    pub criterion: bool,
    pub dims: Vec<i32>,
    #[serde(rename = "is_CM")]
    pub is_cm: Vec<bool>,
    /// Every computed module is zero or 0-dimensional.
    pub zero_or_dim_zero: bool,
    /// Every computed module is CM.
    pub all_cm: bool,
    /// `max(observed t(G), c(G)) + 3`, with the observed index in place of `t(G)`.
    pub t0: u32,
    /// Whether `t_max ≥ t0`, so that "CM at some `t ≥ t0`" was tested.
    pub t0_reached: bool,
    pub cm_at_some_t_from_t0: Option<bool>,
    /// All verdicts on the computed range agree.
    pub equivalent_on_range: bool,
}

/// Verdicts for the four CM-edge conditions on `t ≤ T_max`.
pub fn cm_edge_report(
    g: &Graph,
    t_max: u32,
    field: PrimeField,
    profile: ProfileOptions,
) -> Result<CmEdgeReport> {
    let criterion = cm_edge_criterion(g)?;
    let rep = discrepancy_report(
        g,
        DiscrepancyOptions {
            t_max,
            field,
            with_cm: true,
            profile,
            generator_cap: DEFAULT_GENERATOR_CAP,
        },
    )?;
    let is_cm = rep.is_cm.clone().expect("requested CM flags");
    let zero_or_dim_zero = rep.dims.iter().all(|&d| d <= 0);
    let all_cm = is_cm.iter().all(|&b| b);
    let t0 = rep.observed_stabilization.max(rep.c as u32) + 3;
    let t0_reached = t_max >= t0;
    let cm_at_some_t_from_t0 = t0_reached.then(|| is_cm[(t0 - 1) as usize..].iter().any(|&b| b));
    let mut equivalent_on_range = criterion == zero_or_dim_zero && criterion == all_cm;
    if let Some(b) = cm_at_some_t_from_t0 {
        equivalent_on_range &= b == criterion;
    }
    if criterion && !(zero_or_dim_zero && all_cm) {
        return Err(Error::invariant(
            "cm-edge",
            format!(
                "N[C] = [n] for all odd cycles but dims {:?}, CM {:?}",
                rep.dims, is_cm
            ),
        ));
    }
    Ok(CmEdgeReport {
        criterion,
        dims: rep.dims,
        is_cm,
        zero_or_dim_zero,
        all_cm,
        t0,
        t0_reached,
        cm_at_some_t_from_t0,
        equivalent_on_range,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonRadicalCase {
    /// `NC`, `NCy` or `NCyz`.
    pub lemma: &'static str,
    /// Cycle in order, 1-based, starting `c1, c2`.
    pub cycle: Vec<usize>,
    pub y: Option<usize>,
    pub z: Option<usize>,
    pub witness_is_symbolic: bool,
    pub witness_not_ordinary: bool,
    pub radical_matches: bool,
}

impl ColonRadicalCase {
    pub fn holds(&self) -> bool {
        self.witness_is_symbolic && self.witness_not_ordinary && self.radical_matches
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColonRadicalReport {
    /// `2t' + 1` is the length of a shortest induced odd cycle.
    pub t_prime: u32,
    pub s: u32,
    pub cases: Vec<ColonRadicalCase>,
}

impl ColonRadicalReport {
    pub fn all_hold(&self) -> bool {
        self.cases.iter().all(ColonRadicalCase::holds)
    }
}

/// Checks the radical-of-colon identities at power `t' + s` for every
/// shortest induced odd cycle `C`, every orientation of `C`, and every
/// admissible `y ∈ N(c1) ∖ C`, `z ∈ N(y) ∖ N[C]`.
pub fn colon_radical_identities(g: &Graph, s: u32) -> Result<ColonRadicalReport> {
    if s < 1 {
        return Err(Error::Hypothesis("s must be at least 1".into()));
    }
    let odd = g.induced_odd_cycles();
    let shortest = odd
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Hypothesis("graph has no odd cycle".into()))?;
    let t_prime = ((shortest - 1) / 2) as u32;
    let n = g.n();
    let ring = RingContext::standard(n)?;
    let ideal = edge_ideal_in(g, ring.clone());
    let t = t_prime + s;
    let ordinary = ideal.power(t)?;
    let symbolic = symbolic_power(&ideal, t)?;
    let var_ideal = |f: Face| MonomialIdeal::prime(ring.clone(), f);

    let mut cases = Vec::new();
    for cycle in odd.iter().filter(|c| c.len() == shortest) {
        let cf = Face::from_vertices(cycle.iter().copied());
        let nc = g.closed_neighborhood(cf);
        let base = ideal.sum(&var_ideal(nc))?;
        let k = cycle.len();
        for start in 0..k {
            for dir in [1, k - 1] {
                let order: Vec<usize> = (0..k).map(|j| cycle[(start + j * dir) % k]).collect();
                let (c1, c2) = (order[0], order[1]);
                let x_c = Monomial::from_face(n, cf);
                let mut check = |lemma: &'static str,
                                 witness: Monomial,
                                 expected: &MonomialIdeal,
                                 y: Option<usize>,
                                 z: Option<usize>|
                 -> Result<()> {
                    let rad = ordinary.colon_monomial(&witness)?.radical();
                    cases.push(ColonRadicalCase {
                        lemma,
                        cycle: order.iter().map(|v| v + 1).collect(),
                        y: y.map(|v| v + 1),
                        z: z.map(|v| v + 1),
                        witness_is_symbolic: symbolic.contains(&witness),
                        witness_not_ordinary: !ordinary.contains(&witness),
                        radical_matches: &rad == expected,
                    });
                    Ok(())
                };
                let edge12 = Monomial::from_face(n, Face::from_vertices([c1, c2]));
                let w = x_c.checked_mul(&edge12.checked_pow(s - 1)?)?;
                check("NC", w, &base, None, None)?;
                if s < 2 {
                    continue;
                }
                for y in g.neighbors(c1).difference(cf).vertices() {
                    let ny = g.neighbors(y);
                    let expected_y = base.sum(&var_ideal(ny))?;
                    let x1y = Monomial::from_face(n, Face::from_vertices([c1, y]));
                    let w = x_c
                        .checked_mul(&edge12.checked_pow(s - 2)?)?
                        .checked_mul(&x1y)?;
                    check("NCy", w, &expected_y, Some(y), None)?;
                    if s < 3 {
                        continue;
                    }
                    for z in ny.difference(nc).vertices() {
                        let nyz = g.open_neighborhood(Face::from_vertices([y, z]));
                        let expected_z = base.sum(&var_ideal(nyz))?;
                        let yz = Monomial::from_face(n, Face::from_vertices([y, z]));
                        let w = x_c
                            .checked_mul(&edge12.checked_pow(s - 3)?)?
                            .checked_mul(&x1y)?
                            .checked_mul(&yz)?;
                        check("NCyz", w, &expected_z, Some(y), Some(z))?;
                    }
                }
            }
        }
    }
    Ok(ColonRadicalReport { t_prime, s, cases })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GcmDiscrepancyReport {
    pub t: u32,
    pub dim: i32,
    /// `dim ≥ 2`, where the localization criterion applies.
    pub applicable: bool,
    /// `Q_t(G - N[F])` is CM for every nonempty independent `F`.
    pub localized_cm: Option<bool>,
    /// Independent sets whose deleted-neighbourhood discrepancy is not CM (1-based).
    pub failing_sets: Vec<Vec<usize>>,
    /// Independent sets with `dim Q_t(G - N[F]) + |F| < dim Q_t(G)` (1-based).
    pub deficient_sets: Vec<Vec<usize>>,
    /// Localized CM together with equidimensionality.
    pub equidimensional_cm: Option<bool>,
    /// Direct box scan of `Q_t(G)`.
    #[serde(rename = "is_gCM")]
    pub is_gcm: bool,
    /// `localized_cm == is_gCM`.
    pub agree: Option<bool>,
}

fn discrepancy_quotient(g: &Graph, t: u32) -> Result<IdealQuotient> {
    let ideal = edge_ideal(g)?;
    IdealQuotient::new(ideal.power(t)?, symbolic_power(&ideal, t)?)
}

/// Generalized CM test for `Q_t(G) = I^(t)/I^t` through the graphs `G - N[F]`.
///
/// CM of every `Q_t(G - N[F])` alone does not force gCM: a component of lower
/// dimension leaves infinitely many nonzero pieces below the top index. The
/// equidimensional form is asserted against the direct scan.
pub fn gcm_discrepancy_check(
    g: &Graph,
    t: u32,
    field: PrimeField,
    profile: ProfileOptions,
) -> Result<GcmDiscrepancyReport> {
    if t < 1 {
        return Err(Error::NonPositivePower(t));
    }
    let q = discrepancy_quotient(g, t)?;
    let dim = q.dim();
    let is_gcm = if q.is_zero() {
        true
    } else {
        q.gcm_check(field)?
    };
    let mut report = GcmDiscrepancyReport {
        t,
        dim,
        applicable: dim >= 2,
        localized_cm: None,
        failing_sets: vec![],
        deficient_sets: vec![],
        equidimensional_cm: None,
        is_gcm,
        agree: None,
    };
    if dim < 2 {
        return Ok(report);
    }
    for f in g.independent_sets().into_iter().filter(|f| !f.is_empty()) {
        let (rest, _) = g.remove(g.closed_neighborhood(f));
        if rest.edge_count() == 0 {
            continue;
        }
        let rq = discrepancy_quotient(&rest, t)?;
        if rq.is_zero() {
            continue;
        }
        let rp = rq.profile(field, profile)?;
        if !rp.is_cm {
            report.failing_sets.push(f.to_one_based());
        }
        if rp.dim + (f.len() as i32) < dim {
            report.deficient_sets.push(f.to_one_based());
        }
    }
    let localized_cm = report.failing_sets.is_empty();
    let equidimensional_cm = localized_cm && report.deficient_sets.is_empty();
    if equidimensional_cm != is_gcm {
        return Err(Error::invariant(
            "gcm-localization",
            format!("t = {t}: equidimensional localized CM = {equidimensional_cm}, direct scan = {is_gcm}"),
        ));
    }
    report.localized_cm = Some(localized_cm);
    report.equidimensional_cm = Some(equidimensional_cm);
    report.agree = Some(localized_cm == is_gcm);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityProbe {
    pub dims: Vec<i32>,
    pub observed_stabilization: u32,
    pub c: usize,
    /// Observed index exceeds `c(G) + 1` within the computed range.
    pub candidate_counterexample: bool,
}

/// Compares the observed stabilization index with `c(G) + 1`; asserts nothing.
pub fn stability_probe(g: &Graph, t_max: u32) -> Result<StabilityProbe> {
    let rep = discrepancy_report(
        g,
        DiscrepancyOptions {
            t_max,
            ..DiscrepancyOptions::default()
        },
    )?;
    Ok(StabilityProbe {
        candidate_counterexample: rep.observed_stabilization as usize > rep.c + 1,
        dims: rep.dims,
        observed_stabilization: rep.observed_stabilization,
        c: rep.c,
    })
}
