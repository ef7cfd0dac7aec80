use std::fs;
use std::io::Write;
use std::path::Path;

use log::warn;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use reltak::{
    cm_edge_report, colon_radical_identities, degree_complex, discrepancy_report, edge_ideal,
    gcm_discrepancy_check, link_reduction_check, perfect_stable_check, relative_cohomology_dims,
    stability_probe, symbolic::symbolic_power_capped, symbolic_quotient_report,
    unicyclic_stable_dim, CohomologyDims, DiscrepancyOptions, Graph, IdealQuotient, Monomial,
    MonomialIdeal, Multidegree, RelativePair, RingContext, SimplicialComplex,
};

use crate::args::{Command, LcArgs, QuotientArgs};
use crate::config::{Fault, RunConfig};
use crate::parse::{parse_graph, parse_ideal, parse_input, Input};
use crate::table::{columns, fields, list, yes_no};
use crate::CliError;

struct Output {
    result: Value,
    table: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    command: &'a str,
    characteristic: u32,
    result: &'a Value,
}

/// Runs one subcommand and writes its report.
pub fn run(config: &RunConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let output = match config.parallel {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(|| dispatch(config))?,
        None => dispatch(config)?,
    };
    if config.json {
        let env = Envelope {
            command: command_name(&config.command),
            characteristic: config.field.characteristic(),
            result: &output.result,
        };
        serde_json::to_writer_pretty(&mut *out, &env).map_err(std::io::Error::from)?;
        writeln!(out)?;
    } else {
        out.write_all(output.table.as_bytes())?;
    }
    Ok(())
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Homology { .. } => "homology",
        Command::DegreeComplex { .. } => "degree-complex",
        Command::Lc(_) => "lc",
        Command::CmCheck(_) => "cm-check",
        Command::Symbolic { .. } => "symbolic",
        Command::Discrepancy { .. } => "discrepancy",
        Command::CmEdge { .. } => "cm-edge",
        Command::Matroid { .. } => "matroid",
        Command::Fuzz { .. } => "fuzz",
    }
}

fn dispatch(config: &RunConfig) -> Result<Output, CliError> {
    match &config.command {
        Command::Homology { input } => homology(config, input),
        Command::DegreeComplex { ideal, multidegree } => degree_complex_cmd(ideal, multidegree),
        Command::Lc(args) => lc(config, args),
        Command::CmCheck(args) => cm_check(config, args),
        Command::Symbolic { input } => symbolic(config, input),
        Command::Discrepancy { graph, with_cm } => discrepancy(config, graph, *with_cm),
        Command::CmEdge { graph, colon, gcm } => cm_edge(config, graph, *colon, *gcm),
        Command::Matroid { input, cm } => matroid(config, input, *cm),
        Command::Fuzz { cases } => fuzz(config, *cases),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|source| {
            CliError::Io {
                path: "<stdin>".into(),
                source,
            }
        })?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load(path: &Path) -> Result<Input, CliError> {
    let text = read(path)?;
    let (input, warnings) = parse_input(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    for w in warnings {
        warn!("{}: {w}", path.display());
    }
    Ok(input)
}

fn load_ideal(path: &Path) -> Result<MonomialIdeal, CliError> {
    let text = read(path)?;
    let (ideal, warnings) = parse_ideal(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    for w in warnings {
        warn!("{}: {w}", path.display());
    }
    Ok(ideal)
}

fn load_graph(path: &Path) -> Result<Graph, CliError> {
    let text = read(path)?;
    parse_graph(&text).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    match load(path)? {
        Input::Complex(c) => Ok(c),
        other => Err(CliError::Usage(format!(
            "{}: expected a complex, found a {}",
            path.display(),
            other.kind()
        ))),
    }
}

fn multidegree(s: &str) -> Result<Multidegree, CliError> {
    s.parse().map_err(|_| {
        CliError::Usage(format!(
            "bad multidegree `{s}`; expected comma-separated integers"
        ))
    })
}

fn facets_json(c: &SimplicialComplex) -> Value {
    json!(c
        .facets()
        .iter()
        .map(|f| f.to_one_based())
        .collect::<Vec<_>>())
}

/// Nonzero entries as `{degree, dim}`.
fn dims_json(d: &CohomologyDims) -> Value {
    json!(d
        .nonzero()
        .map(|(j, h)| json!({"degree": j, "dim": h}))
        .collect::<Vec<_>>())
}

fn dims_text(d: &CohomologyDims) -> String {
    if d.is_zero() {
        return "0".into();
    }
    d.nonzero()
        .map(|(j, h)| format!("H~^{j} = {h}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn homology(config: &RunConfig, path: &Path) -> Result<Output, CliError> {
    let pair = match load(path)? {
        Input::Complex(c) => RelativePair::absolute(c),
        Input::Pair(p) => p,
        other => {
            return Err(CliError::Usage(format!(
                "expected a complex or a pair, found a {}",
                other.kind()
            )))
        }
    };
    let dims = relative_cohomology_dims(&pair, config.field);
    let relative = !pair.small().is_void();
    let result = json!({
        "n": pair.big().n(),
        "facets": facets_json(pair.big()),
        "small_facets": if relative { facets_json(pair.small()) } else { Value::Null },
        "f_vector": pair.big().f_vector(),
        "cohomology": dims_json(&dims),
        "euler_characteristic": dims.euler_characteristic(),
    });
    let mut rows = vec![
        ("complex", pair.big().facet_string()),
        ("f-vector", list(&pair.big().f_vector())),
    ];
    if relative {
        rows.push(("subcomplex", pair.small().facet_string()));
    }
    rows.push(("reduced cohomology", dims_text(&dims)));
    rows.push((
        "euler characteristic",
        dims.euler_characteristic().to_string(),
    ));
    Ok(Output {
        result,
        table: fields(&rows),
    })
}

fn degree_complex_cmd(path: &Path, a: &str) -> Result<Output, CliError> {
    let ideal = load_ideal(path)?;
    let a = multidegree(a)?;
    let dc = degree_complex(&ideal, &a)?;
    let kind = if dc.is_void() {
        "void"
    } else if dc.is_empty_face() {
        "empty_face"
    } else {
        "complex"
    };
    let result = json!({
        "ideal": ideal.display().to_string(),
        "a": a,
        "negative_support": a.neg_support().to_one_based(),
        "kind": kind,
        "facets": facets_json(&dc),
        "display": dc.facet_string(),
    });
    let table = fields(&[
        ("ideal", ideal.display().to_string()),
        ("a", a.to_string()),
        ("G_a", format!("{:?}", a.neg_support().to_one_based())),
        ("degree complex", dc.facet_string()),
    ]);
    Ok(Output { result, table })
}

/// `(J, I)` from `--J/--I` or from a complex (`S/I_Δ`) or pair (`I_Γ/I_Δ`).
fn quotient(args: &QuotientArgs) -> Result<IdealQuotient, CliError> {
    let (j, i) = match (&args.denominator, &args.numerator, &args.complex) {
        (Some(j), Some(i), None) => (load_ideal(j)?, load_ideal(i)?),
        (None, None, Some(c)) => match load(c)? {
            Input::Complex(delta) => {
                let ring = RingContext::standard(delta.n())?;
                (
                    delta.stanley_reisner_ideal(ring.clone())?,
                    MonomialIdeal::unit(ring),
                )
            }
            Input::Pair(p) => {
                let ring = RingContext::standard(p.big().n())?;
                (
                    p.big().stanley_reisner_ideal(ring.clone())?,
                    p.small().stanley_reisner_ideal(ring)?,
                )
            }
            other => {
                return Err(CliError::Usage(format!(
                    "expected a complex or a pair, found a {}",
                    other.kind()
                )))
            }
        },
        _ => {
            return Err(CliError::Usage(
                "give either --J and --I, or --complex".into(),
            ))
        }
    };
    Ok(IdealQuotient::new(j, i)?)
}

/// Euler shadow of `0 → I/J → S/J → S/I → 0` over the box.
fn ses_check(config: &RunConfig, q: &IdealQuotient) -> Result<usize, CliError> {
    let mut checked = 0;
    for a in q.enumeration_box().iter() {
        let terms = q.ses_terms(&a, config.field)?;
        let mut sum = terms.alternating_sum();
        if config.fault == Some(Fault::Ses) {
            sum += 1;
        }
        if sum != 0 {
            return Err(reltak::Error::Invariant {
                check: "ses",
                detail: format!("alternating sum {sum} at {a}"),
            }
            .into());
        }
        checked += 1;
    }
    Ok(checked)
}

fn lc(config: &RunConfig, args: &LcArgs) -> Result<Output, CliError> {
    let q = quotient(&args.quotient)?;
    let header = vec![
        ("J", q.denominator().display().to_string()),
        ("I", q.numerator().display().to_string()),
    ];
    if let Some(piece) = &args.piece {
        let i: i32 = piece[0]
            .parse()
            .map_err(|_| CliError::Usage(format!("bad cohomological index `{}`", piece[0])))?;
        let a = multidegree(&piece[1])?;
        let h = q.lc_piece(i, &a, config.field)?;
        let mut result = json!({
            "i": i,
            "a": a,
            "h": h,
            "vanishes_by_support": q.vanishes_at(&a),
        });
        let mut rows = header;
        rows.push(("piece", format!("H^{i}_m(I/J)_{a} = {h}")));
        if let Some(b) = &args.multiply {
            let b = multidegree(b)?;
            let m = q.multiplication_map(i, &a, &b, config.field)?;
            rows.push((
                "multiplication",
                format!("x^{b}: rank {}", m.cohomology.rank(config.field)),
            ));
            result["multiplication"] = serde_json::to_value(&m).map_err(std::io::Error::from)?;
        }
        return Ok(Output {
            result,
            table: fields(&rows),
        });
    }
    if !args.profile {
        return Err(CliError::Usage("lc needs --piece I A or --profile".into()));
    }
    let p = q.profile(config.field, config.profile)?;
    let ses = ses_check(config, &q)?;
    let mut result = serde_json::to_value(&p).map_err(std::io::Error::from)?;
    result["ses_checked"] = json!(ses);
    let mut rows = header;
    rows.extend(summary_rows(&p));
    let mut table = fields(&rows);
    table.push('\n');
    table.push_str(&columns(
        &["i", "a", "h"],
        &p.table
            .iter()
            .map(|e| vec![e.i.to_string(), e.a.to_string(), e.h.to_string()])
            .collect::<Vec<_>>(),
    ));
    Ok(Output { result, table })
}

fn summary_rows(p: &reltak::CohomologyProfile) -> Vec<(&'static str, String)> {
    let mut rows = vec![
        ("dim", p.dim.to_string()),
        ("depth", p.depth.to_string()),
        ("Cohen-Macaulay", yes_no(p.is_cm)),
        ("generalized CM", yes_no(p.is_gcm)),
    ];
    if p.zero_module {
        rows.push((
            "zero module",
            "yes (conventions: dim = depth = -1, CM)".into(),
        ));
    }
    if let Some(w) = &p.rigidity_witness {
        rows.push(("rigidity witness", w.to_string()));
    }
    rows.push(("box size", p.box_size.to_string()));
    rows
}

fn cm_check(config: &RunConfig, args: &QuotientArgs) -> Result<Output, CliError> {
    let q = quotient(args)?;
    let p = q.profile(config.field, config.profile)?;
    let result = json!({
        "J": q.denominator().display().to_string(),
        "I": q.numerator().display().to_string(),
        "dim": p.dim,
        "depth": p.depth,
        "is_CM": p.is_cm,
        "is_gCM": p.is_gcm,
        "zero_module": p.zero_module,
        "rigidity_witness": p.rigidity_witness,
    });
    Ok(Output {
        result,
        table: fields(&summary_rows(&p)),
    })
}

fn power_rows(config: &RunConfig, ideal: &MonomialIdeal) -> Result<Output, CliError> {
    if !ideal.is_squarefree() {
        return Err(reltak::Error::NotSquarefree.into());
    }
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for t in 1..=config.max_t {
        let sym = symbolic_power_capped(ideal, t, config.gen_cap)?;
        let ord = ideal.power(t)?;
        let q = IdealQuotient::new(ord.clone(), sym.clone())?;
        entries.push(json!({
            "t": t,
            "symbolic_generators": sym.gens().len(),
            "ordinary_generators": ord.gens().len(),
            "equal": sym == ord,
            "discrepancy_dim": q.dim(),
        }));
        rows.push(vec![
            t.to_string(),
            sym.gens().len().to_string(),
            ord.gens().len().to_string(),
            yes_no(sym == ord),
            q.dim().to_string(),
        ]);
    }
    Ok(Output {
        result: json!({ "ideal": ideal.display().to_string(), "powers": entries }),
        table: format!(
            "ideal  {}\n\n{}",
            ideal.display(),
            columns(
                &["t", "gens I^(t)", "gens I^t", "equal", "dim I^(t)/I^t"],
                &rows
            )
        ),
    })
}

fn quotient_table(rep: &reltak::symbolic::SymbolicQuotientReport) -> String {
    let head = fields(&[
        ("matroid", yes_no(rep.is_matroid)),
        ("pure", yes_no(rep.is_pure)),
        ("locally matroidal", yes_no(rep.locally_matroidal)),
        ("dim S/I", rep.dim_ring.to_string()),
    ]);
    let rows: Vec<Vec<String>> = rep
        .entries
        .iter()
        .map(|e| {
            vec![
                e.t.to_string(),
                e.dim.to_string(),
                e.depth.to_string(),
                yes_no(e.is_cm),
                yes_no(e.is_gcm),
                e.rigidity_witness
                    .as_ref()
                    .map_or("-".into(), ToString::to_string),
            ]
        })
        .collect();
    format!(
        "{head}\n{}",
        columns(&["t", "dim", "depth", "CM", "gCM", "witness"], &rows)
    )
}

fn symbolic(config: &RunConfig, path: &Path) -> Result<Output, CliError> {
    match load(path)? {
        Input::Ideal(i) => power_rows(config, &i),
        Input::Graph(g) => power_rows(config, &edge_ideal(&g)?),
        Input::Complex(delta) => {
            let ts: Vec<u32> = (1..=config.max_t).collect();
            let rep = symbolic_quotient_report(&delta, &ts, config.field, config.profile)?;
            Ok(Output {
                table: quotient_table(&rep),
                result: serde_json::to_value(&rep).map_err(std::io::Error::from)?,
            })
        }
        Input::Pair(_) => Err(CliError::Usage(
            "symbolic expects an ideal, a graph or a single complex".into(),
        )),
    }
}

fn census_json(g: &Graph) -> Result<Value, CliError> {
    let c = g.odd_cycle_census()?;
    Ok(json!({
        "induced_odd_cycles": c.induced_odd_cycles.iter().map(|cyc| cyc.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "c": c.c,
        "is_bipartite": c.is_bipartite,
        "is_perfect": c.is_perfect,
        "is_unicyclic": c.is_unicyclic,
    }))
}

fn discrepancy(config: &RunConfig, path: &Path, with_cm: bool) -> Result<Output, CliError> {
    let g = load_graph(path)?;
    let opts = DiscrepancyOptions {
        t_max: config.max_t,
        field: config.field,
        with_cm,
        profile: config.profile,
        generator_cap: config.gen_cap,
    };
    let rep = discrepancy_report(&g, opts)?;
    let mut result = serde_json::to_value(&rep).map_err(std::io::Error::from)?;
    let mut extra = Vec::new();
    if rep.is_unicyclic && !rep.is_bipartite {
        let formula = unicyclic_stable_dim(&g)?;
        result["unicyclic_stable_dim"] = json!(formula);
        extra.push(("unicyclic closed form", formula.to_string()));
    }
    if rep.is_perfect && !rep.is_bipartite && config.max_t >= 2 {
        let ok = perfect_stable_check(&g, config.max_t)?;
        result["perfect_stable"] = json!(ok);
        extra.push(("perfect: dims constant from t = 2", yes_no(ok)));
    }
    let probe = stability_probe(&g, config.max_t)?;
    result["stability_candidate"] = json!(probe.candidate_counterexample);
    let rows: Vec<Vec<String>> = rep
        .dims
        .iter()
        .enumerate()
        .map(|(k, d)| {
            let mut r = vec![(k + 1).to_string(), d.to_string()];
            if let Some(cm) = &rep.is_cm {
                r.push(yes_no(cm[k]));
            }
            r
        })
        .collect();
    let header: &[&str] = if rep.is_cm.is_some() {
        &["t", "dim", "CM"]
    } else {
        &["t", "dim"]
    };
    let mut head = vec![
        ("graph", format!("{g:?}")),
        ("c(G)", rep.c.to_string()),
        ("bipartite", yes_no(rep.is_bipartite)),
        (
            "observed stabilization",
            format!(
                "t = {} (verified up to {})",
                rep.observed_stabilization, config.max_t
            ),
        ),
    ];
    head.extend(extra);
    Ok(Output {
        result,
        table: format!("{}\n{}", fields(&head), columns(header, &rows)),
    })
}

fn cm_edge(
    config: &RunConfig,
    path: &Path,
    colon: Option<u32>,
    gcm: Option<u32>,
) -> Result<Output, CliError> {
    let g = load_graph(path)?;
    let rep = cm_edge_report(&g, config.max_t, config.field, config.profile)?;
    let mut result = serde_json::to_value(&rep).map_err(std::io::Error::from)?;
    result["census"] = census_json(&g)?;
    let mut rows = vec![
        ("graph", format!("{g:?}")),
        ("N[C] = [n] for all odd cycles", yes_no(rep.criterion)),
        ("dims", list(&rep.dims)),
        (
            "CM",
            list(&rep.is_cm.iter().map(|&b| yes_no(b)).collect::<Vec<_>>()),
        ),
        ("agree on t ≤ max-t", yes_no(rep.equivalent_on_range)),
    ];
    if !rep.t0_reached {
        rows.push((
            "threshold t0",
            format!("{} (beyond max-t, not checked)", rep.t0),
        ));
    }
    if let Some(s) = colon {
        let c = colon_radical_identities(&g, s)?;
        rows.push((
            "colon-radical identities",
            format!(
                "{} of {} hold",
                c.cases.iter().filter(|k| k.holds()).count(),
                c.cases.len()
            ),
        ));
        if !c.all_hold() {
            return Err(reltak::Error::Invariant {
                check: "colon-radical",
                detail: format!(
                    "{} case(s) fail at s = {s}",
                    c.cases.iter().filter(|k| !k.holds()).count()
                ),
            }
            .into());
        }
        result["colon_radical"] = serde_json::to_value(&c).map_err(std::io::Error::from)?;
    }
    if let Some(t) = gcm {
        let r = gcm_discrepancy_check(&g, t, config.field, config.profile)?;
        rows.push(("generalized CM", format!("{} at t = {t}", yes_no(r.is_gcm))));
        result["gcm"] = serde_json::to_value(&r).map_err(std::io::Error::from)?;
    }
    Ok(Output {
        result,
        table: fields(&rows),
    })
}

fn matroid(config: &RunConfig, path: &Path, cm: bool) -> Result<Output, CliError> {
    let delta = load_complex(path)?;
    let mut result = json!({
        "facets": facets_json(&delta),
        "is_matroid": delta.is_matroid(),
        "is_pure": delta.is_pure(),
        "locally_matroidal": reltak::locally_matroidal(&delta),
    });
    let mut table = fields(&[
        ("complex", delta.facet_string()),
        ("matroid", yes_no(delta.is_matroid())),
        ("pure", yes_no(delta.is_pure())),
    ]);
    if cm {
        let ts: Vec<u32> = (1..=config.max_t).collect();
        let rep = symbolic_quotient_report(&delta, &ts, config.field, config.profile)?;
        table = format!(
            "complex  {}\n{}",
            delta.facet_string(),
            quotient_table(&rep)
        );
        result["symbolic_quotients"] = serde_json::to_value(&rep).map_err(std::io::Error::from)?;
    }
    Ok(Output { result, table })
}

fn fuzz(config: &RunConfig, cases: usize) -> Result<Output, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let (mut degrees, mut links) = (0usize, 0usize);
    for _ in 0..cases {
        let n = rng.gen_range(2..=4);
        let ring = RingContext::standard(n)?;
        let ideal = |rng: &mut ChaCha8Rng| -> Result<MonomialIdeal, CliError> {
            let k = rng.gen_range(1..=3);
            let gens: Vec<Monomial> = (0..k)
                .map(|_| Monomial::new((0..n).map(|_| rng.gen_range(0..=2)).collect()))
                .collect();
            Ok(MonomialIdeal::minimize(ring.clone(), gens)?)
        };
        let i = ideal(&mut rng)?;
        let k = ideal(&mut rng)?;
        let j = i.intersect(&k)?;
        if i.is_unit() || j == i {
            continue;
        }
        let q = IdealQuotient::new(j.clone(), i.clone())?;
        degrees += ses_check(config, &q)?;
        let a = Multidegree::new((0..n).map(|_| rng.gen_range(-3..=4)).collect());
        q.enumeration_box().certify(&j, &i, &a, config.field)?;
        if !link_reduction_check(&i, &a)? {
            return Err(reltak::Error::Invariant {
                check: "link-reduction",
                detail: format!("{} at {a}", i.display()),
            }
            .into());
        }
        links += 1;
    }
    let result = json!({ "seed": config.seed, "cases": cases, "ses_degrees": degrees, "link_checks": links });
    Ok(Output {
        table: fields(&[
            ("seed", config.seed.to_string()),
            ("exact-sequence degrees", degrees.to_string()),
            ("link and box checks", links.to_string()),
        ]),
        result,
    })
}
