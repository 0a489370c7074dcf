//! `cylfusion`: command-line access to the cylfusion-core computations.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad input.

use std::collections::BTreeMap;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::json;

use cylfusion_core::bethe::{idempotent_defect, solve_seeded, verify_bethe, verlinde_deviation, DEFAULT_SEED};
use cylfusion_core::cylfunc::{cyl_function, CylFunction};
use cylfusion_core::fusion::{frobenius, positivity_scan, FrobeniusCheck, FusionRoute, FusionTable};
use cylfusion_core::qboson::{verify_relations, Suite};
use cylfusion_core::symfunc::{
    charge_kostka, kostka_matrices, lusztig_kostka, skew_poly, to_basis, StripKind, SymPoly, TargetBasis,
};
use cylfusion_core::vertex::{partition_function, ybe_check, Boundary, Model, YbeKind};
use cylfusion_core::{Alcove, CylShape, Error, LaurentPoly, Partition};

#[derive(Parser)]
#[command(name = "cylfusion", version, about = "Deformed sl(n) Verlinde algebra, cylindric Hall-Littlewood functions and q-boson checks")]
struct Cli {
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "CYLFUSION_THREADS")]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    M,
    S,
    #[value(name = "P")]
    P,
}

impl Basis {
    fn target(self) -> Option<TargetBasis> {
        match self {
            Basis::M => None,
            Basis::S => Some(TargetBasis::S),
            Basis::P => Some(TargetBasis::P),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::S => "s",
            Basis::P => "P",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MacBasis {
    M,
    S,
}

#[derive(Clone, Copy, ValueEnum)]
enum HlKind {
    #[value(name = "P")]
    P,
    #[value(name = "Q")]
    Q,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum KfMethod {
    Triangular,
    Charge,
    Lusztig,
    All,
}

#[derive(Clone, Copy, ValueEnum, PartialEq)]
enum VerifySuite {
    Knuth,
    Commute,
    Tq,
    Ybe,
    Frobenius,
    Routes,
    All,
}

#[derive(Subcommand)]
enum Cmd {
    /// Fusion coefficients N_{mu nu}^lambda(t) for one pair of alcove labels.
    Fusion {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition)]
        nu: Partition,
        #[arg(long, default_value = "both", value_parser = parse_route)]
        route: FusionRoute,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cylindric Hall-Littlewood function P_{lambda/d/mu}.
    Cylhl {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value = "m")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "P")]
        kind: HlKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Cylindric Macdonald function P'_{lambda/d/mu} (at most n-1 variables).
    Cylmac {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        d: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value = "m")]
        basis: MacBasis,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Ordinary skew Hall-Littlewood function P_{lambda/mu} or Q_{lambda/mu}.
    Skew {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        vars: usize,
        #[arg(long, value_enum, default_value = "m")]
        basis: Basis,
        #[arg(long, value_enum, default_value = "P")]
        kind: HlKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Kostka-Foulkes polynomial K_{lambda mu}(t).
    KostkaFoulkes {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "all")]
        method: KfMethod,
    },
    /// Lattice partition function of the L or L' vertex model.
    Vertex {
        #[arg(long, value_parser = parse_model)]
        model: Model,
        /// `periodic` or `open:left,right`.
        #[arg(long, value_parser = parse_boundary)]
        boundary: Boundary,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        rows: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Numerical Bethe roots at z = 1 with the spectral and Verlinde checks.
    Bethe {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0.25)]
        t: f64,
        /// Imaginary part of t.
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        t_im: f64,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run an identity suite.
    Verify {
        #[arg(long, value_enum)]
        suite: VerifySuite,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Sign scan of the cylindric Kostka-Foulkes matrix elements.
    Positivity {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Largest |nu| scanned.
        #[arg(long)]
        bound: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_partition(s: &str) -> std::result::Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_route(s: &str) -> std::result::Result<FusionRoute, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_model(s: &str) -> std::result::Result<Model, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_boundary(s: &str) -> std::result::Result<Boundary, String> {
    if s == "periodic" {
        return Ok(Boundary::Periodic);
    }
    let rest = s.strip_prefix("open:").ok_or_else(|| format!("expected `periodic` or `open:left,right`, got `{}`", s))?;
    let (l, r) = rest.split_once(',').ok_or_else(|| format!("expected `open:left,right`, got `{}`", s))?;
    let num = |x: &str| x.trim().parse::<usize>().map_err(|e| format!("bad boundary value `{}`: {}", x, e));
    Ok(Boundary::Open { left: num(l)?, right: num(r)? })
}

fn in_alcove(a: &Alcove, label: &Partition, flag: &str) -> Result<()> {
    a.check(label).with_context(|| format!("--{} {}", flag, label))
}

fn expansion_lines(f: &SymPoly, basis: Basis) -> BTreeMap<Partition, LaurentPoly> {
    match basis.target() {
        None => f.terms().map(|(l, c)| (l.clone(), c.clone())).collect(),
        Some(b) => to_basis(b, f),
    }
}

fn print_expansion(title: &str, basis: &str, terms: &BTreeMap<Partition, LaurentPoly>, format: Format) {
    match format {
        Format::Text => {
            for (l, c) in terms.iter().rev() {
                println!("{}_{}  {}", basis, l, c);
            }
        }
        Format::Json => {
            let rows: Vec<_> = terms.iter().rev().map(|(l, c)| json!({ "lambda": l.to_string(), "coeff": c.to_string() })).collect();
            println!("{}", json!({ "function": title, "basis": basis, "terms": rows }));
        }
        Format::Latex => {
            println!("\\begin{{tabular}}{{|c|c|}}\n\\hline\n$\\lambda$ & ${}_\\lambda$ \\\\\n\\hline", basis);
            for (l, c) in terms.iter().rev() {
                println!("${}$ & ${}$ \\\\", l, c.to_latex());
            }
            println!("\\hline\n\\end{{tabular}}");
        }
    }
}

fn hl_kind(kind: HlKind) -> StripKind {
    match kind {
        HlKind::P => StripKind::Psi,
        HlKind::Q => StripKind::Phi,
    }
}

fn run_fusion(n: usize, k: usize, mu: &Partition, nu: &Partition, route: FusionRoute, format: Format) -> Result<bool> {
    let a = Alcove::new(n, k)?;
    in_alcove(&a, mu, "mu")?;
    in_alcove(&a, nu, "nu")?;
    let table = FusionTable::for_pairs(n, k, &[(mu.clone(), nu.clone())], route)?;
    match format {
        Format::Text => print!("{}", table.to_text()),
        Format::Json => println!("{}", serde_json::to_string_pretty(&table.to_json())?),
        Format::Latex => print!("{}", table.to_latex()),
    }
    Ok(true)
}

fn run_kostka(lambda: &Partition, mu: &Partition, method: KfMethod) -> Result<bool> {
    if lambda.size() != mu.size() {
        bail!(Error::Invalid(format!("--lambda {} and --mu {} have different sizes", lambda, mu)));
    }
    let size = lambda.size();
    let mut results = Vec::new();
    if matches!(method, KfMethod::Triangular | KfMethod::All) {
        results.push(("triangular", kostka_matrices(size, size).kt_entry(lambda, mu)));
    }
    if matches!(method, KfMethod::Charge | KfMethod::All) {
        results.push(("charge", charge_kostka(lambda, mu)));
    }
    if matches!(method, KfMethod::Lusztig | KfMethod::All) {
        results.push(("lusztig", lusztig_kostka(lambda, mu, lambda.len().max(mu.len()))));
    }
    for (name, v) in &results {
        println!("method={}  K={}", name, v);
    }
    Ok(results.windows(2).all(|w| w[0].1 == w[1].1))
}

#[allow(clippy::too_many_arguments)]
fn run_vertex(
    model: Model,
    boundary: Boundary,
    n: usize,
    k: usize,
    rows: usize,
    lambda: &Partition,
    mu: &Partition,
    d: Option<usize>,
    format: Format,
) -> Result<bool> {
    let z = partition_function(model, boundary, lambda, mu, n, k, rows)?;
    let windings: Vec<usize> = match d {
        Some(d) => vec![d],
        None => z.windings(),
    };
    let mut out = Vec::new();
    for w in windings {
        for (alpha, c) in z.component(w) {
            out.push((w, alpha, c));
        }
    }
    match format {
        Format::Json => {
            let rows: Vec<_> = out
                .iter()
                .map(|(w, alpha, c)| json!({ "d": w, "alpha": alpha, "Z": c.to_string() }))
                .collect();
            println!("{}", json!({ "n": n, "k": k, "lambda": lambda.to_string(), "mu": mu.to_string(), "terms": rows }));
        }
        _ => {
            for (w, alpha, c) in &out {
                let a: Vec<String> = alpha.iter().map(|x| x.to_string()).collect();
                println!("d={}  alpha={}  Z={}", w, a.join(","), c);
            }
        }
    }
    Ok(true)
}

fn run_bethe(n: usize, k: usize, t0: Complex64, seed: u64, format: Format) -> Result<bool> {
    let set = solve_seeded(n, k, t0, seed)?;
    let report = verify_bethe(&set)?;
    let table = FusionTable::build(n, k, FusionRoute::Matrix)?;
    let deviation = verlinde_deviation(&set, &table);
    let ok = report.passed() && deviation < 1e-6;
    match format {
        Format::Json => {
            let mut v = set.to_json();
            v["report"] = serde_json::to_value(&report)?;
            v["verlinde_deviation"] = json!(deviation);
            println!("{}", serde_json::to_string_pretty(&v)?);
        }
        _ => {
            println!("n={} k={} t={} seed={} solutions={}", n, k, t0, set.seed, set.solutions.len());
            for s in &set.solutions {
                let roots: Vec<String> = s.roots.iter().map(|y| format!("{:.12}", y)).collect();
                println!("roots=[{}]  residual={:.2e}", roots.join(", "), s.max_residual());
            }
            println!("gram_offdiag={:.2e}  verlinde_deviation={:.2e}", report.gram_offdiag, deviation);
            for f in report.failures() {
                println!("FAIL {}", f);
            }
            println!("{}", if ok { "PASS" } else { "FAIL" });
        }
    }
    Ok(ok)
}

fn run_verify(suite: VerifySuite, n: usize, k: usize) -> Result<bool> {
    let mut ok = true;
    let want = |s: VerifySuite| suite == s || suite == VerifySuite::All;
    let relation = |s: Suite| {
        let r = verify_relations(s, n, k);
        println!("{}", r);
        r.passed()
    };
    if want(VerifySuite::Knuth) {
        ok &= relation(Suite::Knuth);
    }
    if want(VerifySuite::Commute) {
        ok &= relation(Suite::Commute);
    }
    if want(VerifySuite::Tq) {
        ok &= relation(Suite::Tq);
    }
    if want(VerifySuite::Routes) {
        ok &= relation(Suite::PieriVsWords);
        match FusionTable::build(n, k, FusionRoute::Both) {
            Ok(t) => println!("fusion routes n={} k={}: pass ({} entries)", n, k, t.entries.len()),
            Err(Error::RouteMismatch(w)) => {
                println!("fusion routes n={} k={}: FAIL\n  {}", n, k, w);
                ok = false;
            }
            Err(e) => return Err(e.into()),
        }
    }
    if want(VerifySuite::Ybe) {
        for kind in [YbeKind::RL, YbeKind::RpLp, YbeKind::RppLLp] {
            for total in 0..=3 {
                let r = ybe_check(kind, total);
                println!("{}", r);
                ok &= r.passed();
            }
        }
    }
    if want(VerifySuite::Frobenius) {
        let table = FusionTable::build(n, k, FusionRoute::Matrix)?;
        for check in [FrobeniusCheck::Assoc, FrobeniusCheck::Eta, FrobeniusCheck::Symmetries, FrobeniusCheck::Coproduct] {
            let r = frobenius(check, &table)?;
            println!("{}", r);
            ok &= r.passed();
        }
        if n >= 3 {
            let t0 = Complex64::new(0.25, 0.0);
            let set = solve_seeded(n, k, t0, DEFAULT_SEED)?;
            let defect = idempotent_defect(&set, &table);
            let pass = defect < 1e-8;
            println!("Idempotents n={} k={}: {} (defect {:.2e})", n, k, if pass { "pass" } else { "FAIL" }, defect);
            ok &= pass;
        }
    }
    Ok(ok)
}

fn run_positivity(n: usize, k: usize, bound: Option<usize>, format: Format) -> Result<bool> {
    let rep = positivity_scan(n, k, bound)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rep)?),
        _ => {
            for e in rep.entries.iter().filter(|e| !e.nonnegative) {
                println!("negative lambda={}  mu={}  nu={}  d={}  {}", e.lambda, e.mu, e.nu, e.d, e.value);
            }
            println!("n={} k={} checked={} negative={}", n, k, rep.checked, rep.negative);
        }
    }
    Ok(rep.passed())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Fusion { n, k, mu, nu, route, format } => run_fusion(n, k, &mu, &nu, route, format),
        Cmd::Cylhl { n, k, lambda, d, mu, vars, basis, kind, format } => {
            let shape = CylShape::new(n, k, lambda, d, mu)?;
            let which = match kind {
                HlKind::P => CylFunction::PHl,
                HlKind::Q => CylFunction::QHl,
            };
            let f = cyl_function(which, &shape, vars);
            print_expansion("cylindric Hall-Littlewood", basis.name(), &expansion_lines(&f, basis), format);
            Ok(true)
        }
        Cmd::Cylmac { n, k, lambda, d, mu, vars, basis, format } => {
            if vars + 1 > n {
                bail!(Error::Invalid(format!("--vars {} exceeds n-1 = {}", vars, n - 1)));
            }
            let shape = CylShape::new(n, k, lambda, d, mu)?;
            let f = cyl_function(CylFunction::PPrimeMac, &shape, vars);
            let basis = match basis {
                MacBasis::M => Basis::M,
                MacBasis::S => Basis::S,
            };
            print_expansion("cylindric Macdonald", basis.name(), &expansion_lines(&f, basis), format);
            Ok(true)
        }
        Cmd::Skew { lambda, mu, vars, basis, kind, format } => {
            if !lambda.contains(&mu) {
                bail!(Error::Invalid(format!("--mu {} is not contained in --lambda {}", mu, lambda)));
            }
            let f = skew_poly(hl_kind(kind), &lambda, &mu, vars);
            print_expansion("skew Hall-Littlewood", basis.name(), &expansion_lines(&f, basis), format);
            Ok(true)
        }
        Cmd::KostkaFoulkes { lambda, mu, method } => run_kostka(&lambda, &mu, method),
        Cmd::Vertex { model, boundary, n, k, rows, lambda, mu, d, format } => {
            run_vertex(model, boundary, n, k, rows, &lambda, &mu, d, format)
        }
        Cmd::Bethe { n, k, t, t_im, seed, format } => run_bethe(n, k, Complex64::new(t, t_im), seed, format),
        Cmd::Verify { suite, n, k } => run_verify(suite, n, k),
        Cmd::Positivity { n, k, bound, format } => run_positivity(n, k, bound, format),
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_) | Error::InvalidPartition(_) | Error::OutOfAlcove { .. } | Error::LevelMismatch(_) | Error::Invalid(_)) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {}", e);
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(exit_code_for(&e))
        }
    }
}
