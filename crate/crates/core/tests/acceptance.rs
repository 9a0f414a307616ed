//! Acceptance suite: one line per criterion, exit status 1 if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use toric_core::classify4::classify;
use toric_core::critical::{
    circuit, circuit_in_reduced_gb, circuit_indispensable, critical_ideal, critical_unique,
    indispensable_critical, CaseLabel, CriticalSet,
};
use toric_core::edgeideal::{connected_graphs, verify_unique_generation};
use toric_core::exponents::{canonical_set, parse_binomial, Binomial, TermOrder};
use toric_core::fibergraph::{
    fiber_graph, fiber_graph_with, minimal_generating_set, unique_minimal_system, EdgeRule,
};
use toric_core::grobner::{buchberger, curve_ideal, graver_basis, saturate_all, BinomialIdeal};
use toric_core::intlat::finest_grading;
use toric_core::semigroup::{fiber, NumericalSemigroup};

type Check = Result<String, String>;

fn b(s: &str, n: usize) -> Binomial {
    parse_binomial(s, n).unwrap()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn first_example() -> Check {
    let a = [6, 8, 17, 19];
    let set = CriticalSet::new(&a).unwrap();
    ensure!(set.c() == [4, 3, 2, 2], "c = {:?}", set.c());
    ensure!(
        indispensable_critical(&a, &b("x1^4 - x2^3", 4)).unwrap(),
        "x1^4 - x2^3 not indispensable"
    );
    let f = b("x4^2 - x1*x2^4", 4);
    ensure!(set.is_critical_for(&f, 3), "x4^2 - x1*x2^4 not critical");
    ensure!(
        !indispensable_critical(&a, &f).unwrap(),
        "x4^2 - x1*x2^4 indispensable"
    );
    let r = classify(&a).unwrap();
    ensure!(r.case == CaseLabel::FourB, "case {}", r.case);
    ensure!(
        r.r.iter()
            .any(|g| g.same_up_to_sign(&b("x1^2*x2^3 - x3*x4", 4))),
        "R = {:?}",
        r.r
    );
    ensure!(!r.unique, "unique");
    Ok(format!("case {}, mu = {}", r.case, r.mu_ia))
}

fn second_example() -> Check {
    let a = [25, 30, 57, 76];
    let set = CriticalSet::new(&a).unwrap();
    let want = canonical_set([b("x1^6 - x2^5", 4), b("x3^4 - x4^3", 4)]);
    ensure!(set.all() == want, "criticals {:?}", set.all());
    let r = classify(&a).unwrap();
    ensure!(r.case == CaseLabel::TwoC, "case {}", r.case);
    ensure!(r.mu_ia == 8, "mu = {}", r.mu_ia);
    ensure!(
        r.r.iter()
            .any(|g| g.same_up_to_sign(&b("x1^3*x2^7 - x3*x4^3", 4))),
        "R = {:?}",
        r.r
    );
    ensure!(!r.unique, "unique");
    Ok(format!("case {}, mu = {}", r.case, r.mu_ia))
}

fn family() -> Check {
    let mut worst = Duration::ZERO;
    for k in 1..=5u64 {
        let t = Instant::now();
        let a = [4, 6, 2 * k + 1, 2 * k + 3];
        let ca = critical_ideal(&a).unwrap();
        let f = b(&format!("x4^2 - x1^{k}*x2"), 4);
        let g = b("x4^2 - x1*x3^2", 4);
        ensure!(
            ca.contains(&f).unwrap() && ca.contains(&g).unwrap(),
            "{a:?}: criticals missing"
        );
        ensure!(!critical_unique(&a).unwrap(), "{a:?}: C_A unique");
        ensure!(!classify(&a).unwrap().unique, "{a:?}: unique");
        worst = worst.max(t.elapsed());
        ensure!(
            t.elapsed() < Duration::from_secs(1),
            "{a:?} took {:?}",
            t.elapsed()
        );
    }
    Ok(format!("slowest instance {:.3} s", worst.as_secs_f64()))
}

fn symmetric_six() -> Check {
    let a = [15, 16, 81, 82, 83, 84];
    ensure!(
        NumericalSemigroup::new(&a).unwrap().is_symmetric(),
        "not symmetric"
    );
    ensure!(gap_scan(&a).1, "gap scan disagrees");
    let fib = fiber(&a, 165);
    let want = [
        ev(&[11, 0, 0, 0, 0, 0]),
        ev(&[0, 0, 1, 0, 0, 1]),
        ev(&[0, 0, 0, 1, 1, 0]),
    ];
    ensure!(want.iter().all(|m| fib.contains(m)), "fiber(165) = {fib:?}");
    ensure!(
        want.iter()
            .enumerate()
            .all(|(i, u)| want[i + 1..].iter().all(|v| u.is_coprime(v))),
        "not coprime"
    );
    ensure!(
        !unique_minimal_system(&curve_ideal(&a).unwrap()).unwrap(),
        "unique"
    );
    Ok(format!("|fiber(165)| = {}", fib.len()))
}

fn demo_ideal() -> Check {
    let j = BinomialIdeal::new(
        4,
        vec![b("x1 - x2", 4), b("x3 - x4", 4), b("x2^2 - x2*x4", 4)],
    )
    .unwrap();
    let sat = saturate_all(&j).unwrap();
    let want = [b("x1 - x4", 4), b("x2 - x4", 4), b("x3 - x4", 4)];
    let order = TermOrder::grevlex(4);
    let ours = buchberger(sat.generators(), &order).unwrap();
    let theirs = buchberger(&want, &order).unwrap();
    ensure!(
        ours.elements() == theirs.elements(),
        "saturation {:?}",
        ours.elements()
    );
    let g = finest_grading(j.generators(), 4).unwrap();
    let row = &g.matrix()[0];
    ensure!(
        g.d() == 1 && (row == &[1, 1, 1, 1] || row == &[-1, -1, -1, -1]),
        "grading {:?}",
        g.matrix()
    );
    let g1 = fiber_graph(&j, &[1]).unwrap();
    ensure!(
        g1.component_count() == 4 && g1.components().iter().all(|c| c.len() == 1),
        "G_1 = {g1}"
    );
    Ok(format!("G_1 = {g1}"))
}

fn edge_ideals() -> Check {
    let graphs: Vec<_> = (2..=5).flat_map(connected_graphs).collect();
    ensure!(graphs.len() == 30, "{} classes", graphs.len());
    for g in &graphs {
        ensure!(verify_unique_generation(g).unwrap(), "fails on\n{g}");
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn sweep() -> Vec<Vec<u64>> {
    quadruples(150, 2, 60, 2024)
}

fn differential() -> Check {
    let mut uniques = 0;
    for a in sweep() {
        let r = classify(&a).unwrap();
        let exact = unique_minimal_system(&curve_ideal(&a).unwrap()).unwrap();
        let paper = r.critical_unique && r.r.is_empty();
        ensure!(
            paper == exact,
            "{a:?}: critical/R gives {paper}, fiber graphs give {exact}"
        );
        uniques += usize::from(exact);
    }
    Ok(format!("150 quadruples, {uniques} unique"))
}

fn critical_bound() -> Check {
    let mut most = 0;
    for a in sweep() {
        let r = classify(&a).unwrap();
        ensure!(r.mu_ca <= 4, "{a:?}: mu(C_A) = {}", r.mu_ca);
        most = most.max(r.mu_ca);
    }
    Ok(format!("max mu(C_A) = {most}"))
}

fn circuits() -> Check {
    let mut count = 0;
    for a in quadruples(60, 2, 60, 77) {
        let c = CriticalSet::new(&a).unwrap().c().to_vec();
        for i in 0..4 {
            for j in i + 1..4 {
                let ind = circuit_indispensable(&a, i, j).unwrap();
                ensure!(
                    ind == circuit_in_reduced_gb(&a, i, j).unwrap(),
                    "{a:?} ({i},{j})"
                );
                if ind {
                    let f = circuit(&a, i, j).unwrap();
                    ensure!(
                        f.lhs()[i] == c[i] && f.rhs()[j] == c[j],
                        "{a:?}: exponents of {f:?}"
                    );
                    count += 1;
                }
            }
        }
    }
    Ok(format!("60 quadruples, {count} indispensable circuits"))
}

fn gorenstein() -> Check {
    let a = [5, 6, 7, 8];
    ensure!(gap_scan(&a).1, "(5,6,7,8) not symmetric by gap scan");
    let r = classify(&a).unwrap();
    ensure!(
        r.gorenstein && r.mu_ia == 5 && r.unique,
        "(5,6,7,8): {}",
        r.to_json()
    );
    let mut pool = sweep();
    for a1 in 3..=12u64 {
        for a2 in a1 + 1..=14 {
            for a3 in a2 + 1..=16 {
                for a4 in a3 + 1..=18 {
                    pool.push(vec![a1, a2, a3, a4]);
                }
            }
        }
    }
    let mut seen = 0;
    for a in pool {
        if toric_core::semigroup::check_generators(&a).is_err() || !gap_scan(&a).1 {
            continue;
        }
        let r = classify(&a).unwrap();
        if r.mu_ia != 3 {
            seen += 1;
            ensure!(r.unique, "{a:?}: symmetric, mu = {}, not unique", r.mu_ia);
        }
    }
    ensure!(seen > 0, "no symmetric instances swept");
    Ok(format!("{seen} symmetric non-CI instances"))
}

fn oracle_equivalence() -> Check {
    for a in quadruples(20, 2, 30, 11) {
        let mut ours: Vec<Vec<i64>> = graver_basis(&a)
            .unwrap()
            .iter()
            .map(normalized_difference)
            .collect();
        ours.sort();
        ensure!(ours == graver_completion(&a), "{a:?}: Graver bases differ");
        let mu = minimal_generating_set(&curve_ideal(&a).unwrap())
            .unwrap()
            .mu();
        ensure!(
            mu == nakayama_mu(&a),
            "{a:?}: mu {mu} vs {}",
            nakayama_mu(&a)
        );
    }
    Ok("20 instances".into())
}

fn edge_rule() -> Check {
    let mut family: Vec<Vec<u64>> = vec![
        vec![6, 8, 17, 19],
        vec![25, 30, 57, 76],
        vec![15, 16, 81, 82, 83, 84],
    ];
    family.extend((1..=5u64).map(|k| vec![4, 6, 2 * k + 1, 2 * k + 3]));
    let mut checked = 0;
    for a in family {
        let ia = curve_ideal(&a).unwrap();
        let top = minimal_generating_set(&ia)
            .unwrap()
            .betti_degrees()
            .iter()
            .map(|(d, _)| d[0])
            .max()
            .unwrap();
        for d in 1..=top {
            let size = fiber(&a, d as u64).len();
            if !(2..=12).contains(&size) {
                continue;
            }
            let one = fiber_graph(&ia, &[d]).unwrap();
            let all = fiber_graph_with(&ia, &[d], EdgeRule::AllDivisors).unwrap();
            ensure!(one == all, "{a:?} degree {d}");
            checked += 1;
        }
    }
    let j = BinomialIdeal::new(
        4,
        vec![b("x1 - x2", 4), b("x3 - x4", 4), b("x2^2 - x2*x4", 4)],
    )
    .unwrap();
    for d in 1..=3 {
        let one = fiber_graph(&j, &[d]).unwrap();
        ensure!(
            one == fiber_graph_with(&j, &[d], EdgeRule::AllDivisors).unwrap(),
            "J degree {d}"
        );
        checked += 1;
    }
    Ok(format!("{checked} fibers"))
}

type Criterion = (&'static str, u64, fn() -> Check);

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("A=(6,8,17,19) example", 1, first_example),
        ("A=(25,30,57,76) example", 5, second_example),
        ("A=(4,6,2a+1,2a+3), a=1..5", 5, family),
        ("A=(15,16,81,82,83,84)", 5, symmetric_six),
        ("J=<x-y, z-t, y^2-yt>", 1, demo_ideal),
        (
            "edge ideals, connected graphs on <=5 vertices",
            30,
            edge_ideals,
        ),
        ("uniqueness differential", 600, differential),
        ("mu(C_A) <= 4", 600, critical_bound),
        ("circuit differential", 600, circuits),
        ("symmetric quadruples", 600, gorenstein),
        ("Graver and mu oracles", 600, oracle_equivalence),
        ("edge rule soundness", 600, edge_rule),
    ];
    let mut failed = 0;
    for (k, (name, limit, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        let verdict = match result {
            Ok(note) if secs <= *limit as f64 => format!("PASS  {note}"),
            Ok(_) => format!("FAIL  over the {limit} s limit"),
            Err(e) => format!("FAIL  {e}"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {:>2} [{secs:>7.3} s / {limit} s] {name}: {verdict}",
            k + 1
        );
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
