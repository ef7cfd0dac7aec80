#![allow(dead_code)]

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reltak::{Face, Graph, Monomial, MonomialIdeal, RingContext, SimplicialComplex};

pub const SEED: u64 = 0x5eed_2024;

pub fn rng(stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(SEED);
    r.set_stream(stream);
    r
}

pub fn ring(n: usize) -> Arc<RingContext> {
    RingContext::standard(n).unwrap()
}

pub fn face(vs: &[usize]) -> Face {
    Face::from_vertices(vs.iter().map(|v| v - 1))
}

/// Complex from 1-based facets.
pub fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, facets.iter().map(|f| face(f))).unwrap()
}

pub fn uniform(n: usize, r: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(n, Face::full(n).subsets().filter(|f| f.len() == r)).unwrap()
}

/// Bases of the cycle matroid of a graph on `v` vertices; ground set = edges.
pub fn graphic(v: usize, edges: &[(usize, usize)]) -> SimplicialComplex {
    let m = edges.len();
    let forest = |s: Face| {
        let mut parent: Vec<usize> = (0..v).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        s.vertices().all(|e| {
            let (a, b) = (find(&mut parent, edges[e].0), find(&mut parent, edges[e].1));
            parent[a] = b;
            a != b
        })
    };
    let rank = Face::full(m)
        .subsets()
        .filter(|&s| forest(s))
        .map(|s| s.len())
        .max()
        .unwrap();
    SimplicialComplex::from_facets(
        m,
        Face::full(m)
            .subsets()
            .filter(|&s| s.len() == rank && forest(s)),
    )
    .unwrap()
}

/// Partition matroid picking one element from each block.
pub fn partition(blocks: &[&[usize]]) -> SimplicialComplex {
    let n = blocks.iter().map(|b| b.len()).sum();
    let mut facets = vec![Face::EMPTY];
    for b in blocks {
        facets = facets
            .iter()
            .flat_map(|f| b.iter().map(move |&v| f.with(v - 1)))
            .collect();
    }
    SimplicialComplex::from_facets(n, facets).unwrap()
}

/// Complexes used for the symbolic-quotient checks: matroids of each kind and non-matroids.
pub fn main_suite() -> Vec<(&'static str, SimplicialComplex)> {
    vec![
        ("U(2,4)", uniform(4, 2)),
        ("U(2,5)", uniform(5, 2)),
        ("U(3,5)", uniform(5, 3)),
        (
            "graphic K4",
            graphic(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]),
        ),
        (
            "graphic C4 with chord",
            graphic(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        ),
        ("partition 2+2+2", partition(&[&[1, 2], &[3, 4], &[5, 6]])),
        ("partition 3+2", partition(&[&[1, 2, 3], &[4, 5]])),
        (
            "pentagon",
            complex(5, &[&[1, 3], &[1, 4], &[2, 4], &[2, 5], &[3, 5]]),
        ),
        ("path", complex(4, &[&[1, 2], &[2, 3], &[3, 4]])),
        ("bowtie", complex(5, &[&[1, 2, 3], &[3, 4, 5]])),
        ("two edges", complex(4, &[&[1, 2], &[3, 4]])),
        ("triangle and point", complex(4, &[&[1, 2, 3], &[4]])),
        (
            "hexagon",
            complex(6, &[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[5, 6], &[1, 6]]),
        ),
        ("two triangles", complex(6, &[&[1, 2, 3], &[4, 5, 6]])),
    ]
}

/// 1-based edges.
pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().map(|&(u, v)| (u - 1, v - 1))).unwrap()
}

pub fn triangle_pendant_path() -> Graph {
    graph(5, &[(1, 2), (1, 3), (2, 3), (1, 4), (4, 5)])
}

/// Pentagon `w1..w5` with a triangle `w1 x1 x2` and pendants `x3, x4` on `x2`.
pub fn two_values_graph() -> Graph {
    graph(
        9,
        &[
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 1),
            (1, 6),
            (1, 7),
            (6, 7),
            (7, 8),
            (7, 9),
        ],
    )
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

pub fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
    loop {
        let m = Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect());
        if !m.is_one() {
            return m;
        }
    }
}

pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, gens: usize, max_exp: u32) -> MonomialIdeal {
    let r = ring(n);
    MonomialIdeal::minimize(
        r,
        (0..gens)
            .map(|_| random_monomial(rng, n, max_exp))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

pub fn random_squarefree(rng: &mut ChaCha8Rng, n: usize, gens: usize) -> MonomialIdeal {
    random_ideal(rng, n, gens, 1)
}

pub fn random_complex(rng: &mut ChaCha8Rng, n: usize, facets: usize) -> SimplicialComplex {
    let fs: Vec<Face> = (0..facets)
        .map(|_| Face::from_vertices((0..n).filter(|_| rng.gen_bool(0.5))))
        .collect();
    SimplicialComplex::from_facets(n, fs).unwrap()
}

/// `Γ ⊆ Δ` with `Γ` generated by a random selection of faces of `Δ`.
pub fn random_complex_pair(
    rng: &mut ChaCha8Rng,
    n: usize,
) -> (SimplicialComplex, SimplicialComplex) {
    let delta = random_complex(rng, n, 3);
    let mut faces: Vec<Face> = delta.faces().to_vec();
    faces.shuffle(rng);
    let keep = rng.gen_range(0..=faces.len());
    let gamma = SimplicialComplex::from_facets(n, faces.into_iter().take(keep)).unwrap();
    (delta, gamma)
}

/// Every monomial in `n` variables of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                let used: u32 = e.iter().sum();
                (0..=d - used).map(move |k| {
                    let mut e = e.clone();
                    e.push(k);
                    e
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Divisibility by any listed generator, without going through the ideal type.
pub fn divisible_by_any(m: &Monomial, gens: &[Monomial]) -> bool {
    gens.iter()
        .any(|g| g.exps().iter().zip(m.exps()).all(|(a, b)| a <= b))
}
