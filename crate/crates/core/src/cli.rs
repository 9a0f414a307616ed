//! Command-line front end. `run` returns the process exit code: 0 on
//! success, 2 on usage errors, 3 when the computation rejects its input.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::classify4::{classify, ClassificationReport};
use crate::critical::{
    circuit, circuit_in_reduced_gb, circuit_indispensable, classify_critical_case,
};
use crate::edgeideal::{edge_ideal, parse_graph, verify_unique_generation};
use crate::error::{Error, Result};
use crate::exponents::{parse_binomial_in, parse_ideal_file, Binomial, VarNames};
use crate::fibergraph::{
    fiber_graph, grading_of, indispensable_binomial, indispensable_monomial,
    minimal_generating_set, uniqueness,
};
use crate::grobner::{curve_ideal, graver_basis, membership, BinomialIdeal};
use crate::intlat::finest_grading;
use crate::semigroup::{check_generators, fiber};

#[derive(Parser, Debug)]
#[command(
    name = "toric",
    version,
    about = "Minimal systems of binomial generators of toric ideals"
)]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimal system S ∪ I ∪ R and uniqueness of a curve in 4-space.
    Classify { a: Vec<u64> },
    /// Minimal generating set with its Betti degrees.
    Mingens { a: Vec<u64> },
    /// Critical exponents, critical binomials and the case of C_A.
    Critical { a: Vec<u64> },
    /// Circuits and their indispensability.
    Circuits { a: Vec<u64> },
    /// Graver basis.
    Graver { a: Vec<u64> },
    /// Monomials of one degree and the components of its fiber graph.
    Fiber {
        a: Vec<u64>,
        #[arg(long)]
        degree: u64,
    },
    /// Indispensable binomials and monomials among the minimal generators.
    Indisp { a: Vec<u64> },
    /// Finest grading of an ideal file.
    Grading {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Ideal membership of a binomial.
    Membership {
        a: Vec<u64>,
        #[arg(long)]
        ideal: Option<PathBuf>,
        #[arg(long)]
        binomial: String,
    },
    /// Binomial edge ideal of a graph file.
    EdgeIdeal {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Classify random quadruples, one JSON line each.
    Sweep {
        #[arg(long, default_value_t = 2)]
        min: u64,
        #[arg(long, default_value_t = 60)]
        max: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Compute(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e)
    }
}

type Out<'a> = &'a mut dyn Write;

pub fn run<I, T>(args: I, out: Out<'_>, err: Out<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Compute(e)) => {
            let _ = writeln!(err, "error: {e}");
            3
        }
    }
}

fn io(e: std::io::Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn gens(a: &[u64]) -> std::result::Result<&[u64], Failure> {
    if a.is_empty() {
        return Err(Failure::Usage("missing generators".into()));
    }
    check_generators(a)?;
    Ok(a)
}

fn put(out: Out<'_>, v: &Value) -> std::result::Result<(), Failure> {
    writeln!(out, "{v}").map_err(io)
}

fn names(f: &[Binomial], n: usize) -> Vec<String> {
    let v = VarNames::plain(n);
    f.iter().map(|b| v.binomial(b)).collect()
}

fn tuple<T: std::fmt::Display>(xs: &[T]) -> String {
    let s: Vec<String> = xs.iter().map(T::to_string).collect();
    format!("({})", s.join(", "))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn dispatch(cli: &Cli, out: Out<'_>) -> std::result::Result<(), Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Classify { a } => {
            let r = classify(gens(a)?)?;
            if json {
                writeln!(out, "{}", r.to_json()).map_err(io)
            } else {
                print_report(&r, out)
            }
        }
        Command::Mingens { a } => {
            let a = gens(a)?;
            let t = minimal_generating_set(&curve_ideal(a)?)?;
            let g = t.generators();
            if json {
                let betti: Vec<Value> = t
                    .betti_degrees()
                    .iter()
                    .map(|(d, k)| json!([d[0], k]))
                    .collect();
                put(
                    out,
                    &json!({"A": a, "mu": t.mu(), "generators": names(&g, a.len()), "betti": betti}),
                )
            } else {
                writeln!(out, "mu = {}", t.mu()).map_err(io)?;
                for f in names(&g, a.len()) {
                    writeln!(out, "  {f}").map_err(io)?;
                }
                Ok(())
            }
        }
        Command::Critical { a } => {
            let a = gens(a)?;
            let n = a.len();
            let set = crate::critical::CriticalSet::new(a)?;
            let case = if n == 4 {
                Some(classify_critical_case(a)?)
            } else {
                None
            };
            if json {
                let per: Vec<Vec<String>> = (0..n).map(|i| names(set.of(i), n)).collect();
                let mut v = json!({"A": a, "c": set.c(), "critical": per});
                if let Some(k) = &case {
                    v["case"] = json!(k.label);
                    v["S"] = json!(names(&k.s, n));
                    v["mu_CA"] = json!(k.mu_ca);
                }
                put(out, &v)
            } else {
                writeln!(out, "c = {}", tuple(set.c())).map_err(io)?;
                for i in 0..n {
                    writeln!(out, "x{}: {}", i + 1, names(set.of(i), n).join(", ")).map_err(io)?;
                }
                if let Some(k) = case {
                    writeln!(out, "case {}, mu(C_A) = {}", k.label, k.mu_ca).map_err(io)?;
                    for f in names(&k.s, n) {
                        writeln!(out, "  {f}").map_err(io)?;
                    }
                }
                Ok(())
            }
        }
        Command::Circuits { a } => {
            let a = gens(a)?;
            let n = a.len();
            let mut rows = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    let f = circuit(a, i, j)?;
                    rows.push((
                        VarNames::plain(n).binomial(&f),
                        circuit_indispensable(a, i, j)?,
                        circuit_in_reduced_gb(a, i, j)?,
                    ));
                }
            }
            if json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(f, ind, gb)| json!({"circuit": f, "indispensable": ind, "in_reduced_gb": gb}))
                    .collect();
                put(out, &json!(v))
            } else {
                for (f, ind, gb) in rows {
                    writeln!(
                        out,
                        "{f}  indispensable: {}  in reduced GB: {}",
                        yes(ind),
                        yes(gb)
                    )
                    .map_err(io)?;
                }
                Ok(())
            }
        }
        Command::Graver { a } => {
            let a = gens(a)?;
            let g = names(&graver_basis(a)?, a.len());
            if json {
                put(out, &json!(g))
            } else {
                writeln!(out, "{} elements", g.len()).map_err(io)?;
                for f in g {
                    writeln!(out, "  {f}").map_err(io)?;
                }
                Ok(())
            }
        }
        Command::Fiber { a, degree } => {
            let a = gens(a)?;
            let v = VarNames::plain(a.len());
            let ms: Vec<String> = fiber(a, *degree).iter().map(|u| v.monomial(u)).collect();
            let graph = fiber_graph(&curve_ideal(a)?, &[*degree as i64])?;
            let comps: Vec<Vec<String>> = graph
                .component_monomials()
                .iter()
                .map(|c| c.iter().map(|u| v.monomial(u)).collect())
                .collect();
            if json {
                put(
                    out,
                    &json!({"degree": degree, "monomials": ms, "components": comps}),
                )
            } else {
                for m in &ms {
                    writeln!(out, "{m}").map_err(io)?;
                }
                writeln!(out, "components: {graph}").map_err(io)
            }
        }
        Command::Indisp { a } => {
            let a = gens(a)?;
            let n = a.len();
            let ia = curve_ideal(a)?;
            let mut rows = Vec::new();
            for f in minimal_generating_set(&ia)?.generators() {
                let b = indispensable_binomial(&ia, &f)?;
                let m: Vec<bool> = [f.lhs(), f.rhs()]
                    .iter()
                    .map(|u| indispensable_monomial(&ia, u))
                    .collect::<Result<_>>()?;
                rows.push((VarNames::plain(n).binomial(&f), b, m));
            }
            let unique = uniqueness(&ia)?;
            if json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(f, b, m)| json!({"binomial": f, "indispensable": b, "monomials": m}))
                    .collect();
                put(out, &json!({"generators": v, "unique": unique}))
            } else {
                for (f, b, m) in rows {
                    writeln!(
                        out,
                        "{f}  binomial: {b}  monomials: {}, {}",
                        yes(m[0]),
                        yes(m[1])
                    )
                    .map_err(io)?;
                }
                writeln!(out, "unique minimal system: {unique}").map_err(io)
            }
        }
        Command::Grading { ideal } => {
            let file = parse_ideal_file(&read(ideal)?)?;
            let g = finest_grading(&file.generators, file.vars.n)?;
            let m = g.matrix();
            if json {
                put(
                    out,
                    &json!({"d": g.d(), "A": m, "positive": g.is_positive()}),
                )
            } else {
                writeln!(out, "d = {}", g.d()).map_err(io)?;
                for row in m {
                    writeln!(out, "{}", tuple(row)).map_err(io)?;
                }
                writeln!(out, "positive: {}", yes(g.is_positive())).map_err(io)
            }
        }
        Command::Membership { a, ideal, binomial } => {
            let (j, vars) = match (ideal, a.is_empty()) {
                (Some(path), true) => {
                    let file = parse_ideal_file(&read(path)?)?;
                    let j = BinomialIdeal::new(file.vars.n, file.generators)?;
                    grading_of(&j)?;
                    (j, file.vars)
                }
                (None, false) => {
                    let a = gens(a)?;
                    (curve_ideal(a)?, VarNames::plain(a.len()))
                }
                _ => return Err(Failure::Usage("give either generators or --ideal".into())),
            };
            let f = parse_binomial_in(binomial, &vars)?;
            let yes_no = membership(&j, &f)?;
            if json {
                put(
                    out,
                    &json!({"binomial": vars.binomial(&f), "member": yes_no}),
                )
            } else {
                writeln!(out, "{}", yes(yes_no)).map_err(io)
            }
        }
        Command::EdgeIdeal { graph } => {
            let g = parse_graph(&read(graph)?)?;
            let j = edge_ideal(&g)?;
            let v = VarNames::lawrence(g.n());
            let gens: Vec<String> = j.generators().iter().map(|f| v.binomial(f)).collect();
            let unique = verify_unique_generation(&g)?;
            if json {
                put(out, &json!({"generators": gens, "unique": unique}))
            } else {
                for f in gens {
                    writeln!(out, "{f}").map_err(io)?;
                }
                writeln!(out, "unique minimal system: {}", yes(unique)).map_err(io)
            }
        }
        Command::Sweep {
            min,
            max,
            count,
            seed,
            out: path,
        } => {
            if *min == 0 || min > max || (min == max && *min != 1) {
                return Err(Failure::Usage(
                    "need 0 < min < max (or min = max = 1)".into(),
                ));
            }
            let inputs = sample(*min, *max, *count, *seed);
            let reports: Vec<ClassificationReport> = inputs
                .par_iter()
                .map(|a| classify(a))
                .collect::<Result<_>>()?;
            let mut text = String::new();
            for r in &reports {
                text.push_str(&r.to_json());
                text.push('\n');
            }
            match path {
                Some(p) => {
                    fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))
                }
                None => write!(out, "{text}").map_err(io),
            }
        }
    }
}

/// Uniform quadruples in `[min, max]` from ChaCha8 seeded with `seed`,
/// rejecting those with gcd different from one.
pub fn sample(min: u64, max: u64, count: usize, seed: u64) -> Vec<Vec<u64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    if min == 0 || min > max || (min == max && min != 1) {
        return out;
    }
    while out.len() < count {
        let a: Vec<u64> = (0..4).map(|_| rng.gen_range(min..=max)).collect();
        if check_generators(&a).is_ok() {
            out.push(a);
        }
    }
    out
}

fn print_report(r: &ClassificationReport, out: Out<'_>) -> std::result::Result<(), Failure> {
    let mut w = |s: String| writeln!(out, "{s}").map_err(io);
    w(format!("A = {}", tuple(&r.a)))?;
    w(format!("c = {}", tuple(&r.c)))?;
    w(format!(
        "case {}, permutation {}",
        r.case,
        tuple(&r.permutation)
    ))?;
    for (name, set) in [("S", &r.s), ("I", &r.i), ("R", &r.r)] {
        w(format!("{name}:"))?;
        for f in names(set, 4) {
            w(format!("  {f}"))?;
        }
    }
    w(format!("mu(I_A) = {}, mu(C_A) = {}", r.mu_ia, r.mu_ca))?;
    w(format!(
        "unique: {} (critical part unique: {}, fiber graphs: {})",
        yes(r.unique),
        yes(r.critical_unique),
        yes(r.exact_unique)
    ))?;
    w(format!(
        "Gorenstein: {}, complete intersection: {}",
        yes(r.gorenstein),
        yes(r.complete_intersection)
    ))
}
