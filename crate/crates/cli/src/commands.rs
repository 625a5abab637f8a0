use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{anyhow, Result};

use nsatz_core::bounds::{describe_face, Escalation};
use nsatz_core::infinity::{no_zeros_anywhere_with, no_zeros_at_infinity_with};
use nsatz_core::io::{CertificateJson, PlanJson, PolytopeJson, VerdictJson};
use nsatz_core::{
    classical_reference, execute_plan, genericity_probe, has_common_zero_affine,
    has_common_zero_torus, ideal_member, newton_polytope, plan_briancon_skoda, plan_custom,
    plan_macaulay, plan_noether, plan_tuitman, radical_member, verify_certificate, Execution,
    InfinityVerdict, LatticePoint, PlanOptions, PlanOutcome, Polytope, SparsePolynomial,
    TheoremPlan, TheoremTag,
};

use crate::system::{ensure, load_certificate, load_polytope, write_json, System};

pub const OK: u8 = 0;
pub const HYPOTHESIS: u8 = 2;
pub const NEGATIVE: u8 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CheckMode {
    Infinity,
    Anywhere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OracleQuery {
    Member,
    Radical,
    Torus,
    Affine,
}

fn verdict_code(ok: bool) -> u8 {
    if ok {
        OK
    } else {
        NEGATIVE
    }
}

fn show_polytope(p: &Polytope) -> String {
    if p.is_empty() {
        return "empty".into();
    }
    let vs: Vec<String> = p.vertices().iter().map(|v| p.format_vertex(v)).collect();
    vs.join(" ")
}

fn with_points(sys: &System, origin: bool, coords: bool) -> Result<Polytope> {
    let n = sys.dim();
    let mut pts: Vec<LatticePoint> = sys.generators.iter().flat_map(|f| f.support()).collect();
    if origin {
        pts.push(vec![0; n]);
    }
    if coords {
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            pts.push(e);
        }
    }
    ensure(!pts.is_empty(), "all generators are zero")?;
    Ok(Polytope::hull_in(n, &pts)?)
}

/// The named polytope, or the single polytope in the file, or `fallback`.
fn pick_polytope(
    sys: &System,
    name: Option<&str>,
    fallback: impl FnOnce() -> Result<Polytope>,
) -> Result<(Polytope, String)> {
    match name {
        Some(n) => Ok((sys.named_polytope(n)?.clone(), n.to_string())),
        None if sys.polytopes.len() == 1 => {
            let (n, p) = sys.polytopes.iter().next().expect("one entry");
            Ok((p.clone(), n.clone()))
        }
        None => Ok((fallback()?, "default".into())),
    }
}

fn print_verdict(sys: &System, p: &Polytope, v: &InfinityVerdict) {
    if v.ok {
        println!("verdict        ok");
        return;
    }
    println!("verdict        not ok");
    let face = v
        .witness_face
        .as_ref()
        .expect("failing verdicts carry a face");
    let vs: Vec<String> = face
        .vertex_points(p)
        .iter()
        .map(|x| p.format_vertex(x))
        .collect();
    println!("witness face   dim {} vertices {}", face.dim, vs.join(" "));
    let system: Vec<String> = v
        .witness_system
        .iter()
        .flatten()
        .map(|f| sys.show(f))
        .collect();
    println!("facial system  [{}]", system.join(", "));
}

pub fn check(
    sys: &System,
    mode: CheckMode,
    polytope: Option<&str>,
    exec: Execution,
    out: Option<&Path>,
) -> Result<u8> {
    let (p, label) = pick_polytope(sys, polytope, || Ok(newton_polytope(&sys.generators)?))?;
    let label = if label == "default" {
        "Newton polytope".to_string()
    } else {
        label
    };
    println!("polytope       {label}: {}", show_polytope(&p));
    let verdict = match mode {
        CheckMode::Anywhere => no_zeros_anywhere_with(exec, &sys.generators, &p)?,
        CheckMode::Infinity => no_zeros_at_infinity_with(exec, &sys.generators, &p)?,
    };
    println!(
        "check          {}",
        match mode {
            CheckMode::Anywhere => "no common zeros anywhere",
            CheckMode::Infinity => "no common zeros at infinity",
        }
    );
    print_verdict(sys, &p, &verdict);
    if let Some(path) = out {
        write_json(path, &VerdictJson::new(&verdict, &p))?;
    }
    Ok(verdict_code(verdict.ok))
}

pub struct SolveArgs<'a> {
    pub theorem: TheoremTag,
    pub polytope: Option<&'a str>,
    pub e_override: Option<i64>,
    pub cmax: Option<i64>,
    pub assert_integral_closure: bool,
    pub power: u32,
    pub out: Option<&'a Path>,
    pub plan_out: Option<&'a Path>,
}

fn print_plan(plan: &TheoremPlan) {
    println!("theorem        {}", plan.theorem);
    if !plan.hypotheses.is_empty() {
        println!("hypotheses");
        let width = plan
            .hypotheses
            .iter()
            .map(|h| h.name.len())
            .max()
            .unwrap_or(0);
        for h in &plan.hypotheses {
            match &h.witness {
                Some(w) => println!("  {:width$}  {:12}  {w}", h.name, h.status.as_str()),
                None => println!("  {:width$}  {}", h.name, h.status.as_str()),
            }
        }
    }
    println!("e              {}", plan.e);
    println!("power          {}", plan.power);
}

fn tuitman_polytopes(sys: &System) -> Result<Vec<Polytope>> {
    match &sys.generator_polytopes {
        Some(names) => names
            .iter()
            .map(|n| Ok(sys.named_polytope(n)?.clone()))
            .collect(),
        None => sys
            .generators
            .iter()
            .map(|f| Ok(newton_polytope(std::slice::from_ref(f))?))
            .collect(),
    }
}

pub fn solve(sys: &System, args: &SolveArgs, exec: Execution) -> Result<u8> {
    let start = Instant::now();
    let opts = PlanOptions {
        e_override: args.e_override,
        c_max: args.cmax,
        exec,
    };
    let fs = &sys.generators;
    let phi = &sys.target;
    let (plan, label) = match args.theorem {
        TheoremTag::Macaulay => (
            plan_macaulay(fs, phi, &opts)?,
            "Newton polytope".to_string(),
        ),
        TheoremTag::Noether => {
            let (p, label) = pick_polytope(sys, args.polytope, || with_points(sys, true, true))?;
            (plan_noether(fs, phi, &p, &opts)?, label)
        }
        TheoremTag::BrianconSkoda => {
            let (p, label) = pick_polytope(sys, args.polytope, || with_points(sys, true, false))?;
            (
                plan_briancon_skoda(fs, phi, &p, args.assert_integral_closure, &opts)?,
                label,
            )
        }
        TheoremTag::Tuitman => {
            let pjs = tuitman_polytopes(sys)?;
            let (p, label) = match args.polytope {
                Some(name) => (sys.named_polytope(name)?.clone(), name.to_string()),
                None => {
                    let mut sum = Polytope::origin(sys.dim())?;
                    for q in &pjs {
                        sum = sum.minkowski_sum_with(exec, q)?;
                    }
                    (sum, "sum of generator polytopes".to_string())
                }
            };
            (plan_tuitman(fs, &pjs, &p, phi, &opts)?, label)
        }
        TheoremTag::Custom => {
            let (p, label) = pick_polytope(sys, args.polytope, || with_points(sys, true, false))?;
            (plan_custom(fs, phi, &p, args.power, &opts)?, label)
        }
    };
    print_plan(&plan);
    println!("polytope       {label}: {}", show_polytope(&plan.polytope));
    let mut plan_json = PlanJson::from(&plan);
    if !plan.passed() {
        println!("result         hypotheses not satisfied; no bound licensed");
        if let Some(path) = args.plan_out {
            write_json(path, &plan_json)?;
        }
        return Ok(HYPOTHESIS);
    }

    if let Some(Escalation { c_start, c_max }) = plan.escalation {
        println!("escalation     c = {c_start}..={c_max}");
    }
    let PlanOutcome {
        certificate: found,
        shape,
        c,
    } = execute_plan(exec, &plan, fs, phi)?;
    if let Some(c) = c {
        println!("c              {c}");
    }
    if let (Some(esc), Some(c)) = (plan_json.escalation.as_mut(), c) {
        esc.c = Some(c);
    }
    println!("matrix         {} x {}", shape.rows, shape.cols);
    if let Some(path) = args.plan_out {
        write_json(path, &plan_json)?;
    }
    let code = match found {
        Some(cert) => {
            println!("bound          {}", show_polytope(&cert.bound));
            verify_certificate(&cert, fs, phi).map_err(|f| {
                anyhow!("internal error: solver produced an invalid certificate: {f}")
            })?;
            println!("certificate    found and verified");
            for (j, g) in cert.cofactors.iter().enumerate() {
                println!("  G_{} = {}", j + 1, sys.show(g));
            }
            if let Some(path) = args.out {
                write_json(path, &CertificateJson::from(&cert))?;
                println!("written        {}", path.display());
            }
            OK
        }
        None => {
            match c.or(plan.escalation.map(|e| e.c_max)) {
                Some(cm) if plan.escalation.is_some() => {
                    println!("certificate    not found at any c up to {cm}")
                }
                _ => println!("certificate    not found at this bound"),
            }
            NEGATIVE
        }
    };
    println!(
        "time           {:.3} ms",
        start.elapsed().as_secs_f64() * 1e3
    );
    Ok(code)
}

pub fn verify(sys: &System, cert_path: &Path) -> Result<u8> {
    let cert = load_certificate(cert_path)?;
    match verify_certificate(&cert, &sys.generators, &sys.target) {
        Ok(()) => {
            println!(
                "certificate verified: theorem {}, power {}",
                cert.theorem, cert.power
            );
            Ok(OK)
        }
        Err(reason) => {
            println!("verification failed: {reason}");
            Ok(NEGATIVE)
        }
    }
}

fn ratio(a: usize, b: usize) -> String {
    if b == 0 {
        "n/a".into()
    } else {
        format!("{a}/{b} = {:.4}", a as f64 / b as f64)
    }
}

pub fn compare(sys: &System) -> Result<u8> {
    let n = sys.dim();
    let m = sys.generators.len();
    let d = sys
        .generators
        .iter()
        .filter_map(SparsePolynomial::total_degree)
        .max()
        .unwrap_or(0);
    ensure(d > 0, "the generators must have positive degree")?;
    let deg_phi = sys.target.total_degree().unwrap_or(0);
    let reference = classical_reference(d as u64, n as u64, m as u64, deg_phi as u64)?;
    let np = newton_polytope(&sys.generators)?;
    let dense = Polytope::simplex(n)?.dilate(d)?;
    let support = sys.target.support();
    let scaled = |p: &Polytope| -> Result<Option<(i64, Polytope)>> {
        match p.min_integer_dilation(&support)? {
            Some(e) => {
                let c = (n as i64 + 1).max(e);
                Ok(Some((e, p.dilate(c)?)))
            }
            None => Ok(None),
        }
    };
    println!("variables n             {n}");
    println!("generators m            {m}");
    println!("dense degree d          {d}");
    println!("target degree           {deg_phi}");
    println!("classical references");
    println!("  Macaulay degree       {}", reference.macaulay_degree);
    println!("  Kollar power factor   {}", reference.kollar_power);
    println!("  Kollar degree         {}", reference.kollar_degree);
    match reference.sombra_factor {
        Some(s) => println!(
            "  Sombra factor         {s} (replaces {})",
            reference.kollar_power
        ),
        None => println!("  Sombra factor         n/a"),
    }
    println!("  Noether degree        {}", reference.noether_degree);
    println!("  Briancon-Skoda power  {}", reference.briancon_skoda_power);
    println!("Newton polytope         {}", show_polytope(&np));
    let sparse = scaled(&np)?;
    let dense_bound = scaled(&dense)?;
    match &sparse {
        Some((e, b)) => println!(
            "sparse bound            max(n+1,{e})*NP: {} lattice points",
            b.lattice_points().len()
        ),
        None => println!("sparse bound            n/a (target outside every dilation of NP)"),
    }
    match &dense_bound {
        Some((e, b)) => println!(
            "dense bound             max(n+1,{e})*{d}*simplex: {} lattice points",
            b.lattice_points().len()
        ),
        None => println!("dense bound             n/a"),
    }
    if let (Some((_, s)), Some((_, b))) = (&sparse, &dense_bound) {
        println!(
            "monomial ratio          {}",
            ratio(s.lattice_points().len(), b.lattice_points().len())
        );
    }
    Ok(OK)
}

pub fn oracle(sys: &System, query: OracleQuery) -> Result<u8> {
    let fs = &sys.generators;
    let (label, answer) = match query {
        OracleQuery::Member => ("target in ideal", ideal_member(&sys.target, fs)?),
        OracleQuery::Radical => ("target in radical", radical_member(&sys.target, fs)?),
        OracleQuery::Torus => ("common zero in the torus", has_common_zero_torus(fs)?),
        OracleQuery::Affine => ("common affine zero", has_common_zero_affine(fs)?),
    };
    println!("{label}: {answer}");
    Ok(verdict_code(answer))
}

#[derive(Debug, clap::Subcommand)]
pub enum PolytopeOp {
    /// Convex hull of the listed points.
    Hull {
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Minkowski sum A + B.
    Sum {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Erosion P ⊖ Q.
    Diff {
        p: PathBuf,
        q: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether Q is a Minkowski summand of P.
    Summand { q: PathBuf, p: PathBuf },
    /// Delzant smoothness test.
    Smooth { p: PathBuf },
    /// Lattice points in lexicographic order.
    Points { p: PathBuf },
}

fn describe(p: &Polytope) {
    println!("vertices       {}", show_polytope(p));
    if let Some(k) = p.affine_dim() {
        println!("dimension      {k}");
    }
    for h in p.facets() {
        let normal: Vec<String> = h.normal.iter().map(i64::to_string).collect();
        println!(
            "facet          <({}), x> >= {}",
            normal.join(","),
            show_offset(h.offset, p.denominator())
        );
    }
}

fn show_offset(offset: i64, denom: i64) -> String {
    nsatz_core::linalg::format_rational(&nsatz_core::linalg::ratio(offset, denom))
}

fn emit(p: &Polytope, out: Option<&Path>) -> Result<()> {
    describe(p);
    if let Some(path) = out {
        write_json(path, &PolytopeJson::from(p))?;
    }
    Ok(())
}

pub fn polytope(op: &PolytopeOp) -> Result<u8> {
    match op {
        PolytopeOp::Hull { input, out } => {
            emit(&load_polytope(input)?, out.as_deref())?;
            Ok(OK)
        }
        PolytopeOp::Sum { a, b, out } => {
            emit(
                &load_polytope(a)?.minkowski_sum(&load_polytope(b)?)?,
                out.as_deref(),
            )?;
            Ok(OK)
        }
        PolytopeOp::Diff { p, q, out } => {
            match load_polytope(p)?.minkowski_diff(&load_polytope(q)?)? {
                Some(d) => {
                    emit(&d, out.as_deref())?;
                    Ok(OK)
                }
                None => {
                    println!("erosion is empty");
                    Ok(NEGATIVE)
                }
            }
        }
        PolytopeOp::Summand { q, p } => {
            let yes = load_polytope(q)?.is_summand_of(&load_polytope(p)?)?;
            println!("summand: {yes}");
            Ok(verdict_code(yes))
        }
        PolytopeOp::Smooth { p } => {
            let p = load_polytope(p)?;
            match p.smoothness_witness()? {
                None => {
                    println!("smooth: true");
                    Ok(OK)
                }
                Some(v) => {
                    println!("smooth: false (vertex {})", p.format_vertex(&v));
                    Ok(NEGATIVE)
                }
            }
        }
        PolytopeOp::Points { p } => {
            let p = load_polytope(p)?;
            let pts = p.lattice_points();
            for x in &pts {
                println!("{}", nsatz_core::polytope::format_point(x));
            }
            println!("count: {}", pts.len());
            Ok(OK)
        }
    }
}

pub fn probe(
    polytope: &Path,
    count: usize,
    seed: u64,
    exec: Execution,
    out: Option<&Path>,
) -> Result<u8> {
    let p = load_polytope(polytope)?;
    let fs = genericity_probe(&p, count, seed)?;
    let n = p.dim();
    let names: Vec<String> = (1..=n).map(|i| format!("z{i}")).collect();
    for (j, f) in fs.iter().enumerate() {
        println!("F_{} = {}", j + 1, f.display_with(&names));
    }
    let code = if fs.is_empty() {
        OK
    } else {
        let v = no_zeros_anywhere_with(exec, &fs, &p)?;
        println!("no common zeros anywhere: {}", v.ok);
        if !v.ok {
            println!("witness        {}", describe_face(&p, &v));
        }
        verdict_code(v.ok)
    };
    if let Some(path) = out {
        let file = serde_json::json!({
            "variables": names,
            "generators": fs.iter().map(nsatz_core::io::PolynomialJson::from).collect::<Vec<_>>(),
            "target": nsatz_core::io::PolynomialJson::from(&SparsePolynomial::one(n)),
            "polytopes": { "P": PolytopeJson::from(&p) },
        });
        write_json(path, &file)?;
    }
    Ok(code)
}
