//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; the process exits non-zero if any fail.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use pushgame::{
    apply_push_vector, class_key, class_report, complete_plus, compute_invariant,
    count_solutions_brute, moves_bound, partition_all_labelings, planar_moves_bound,
    probe_colorability, probe_colorability_decomposed, propagate_coloring, rank_mod_prime,
    shared_vertex_chain, simplex_strip, solve_linear, solve_region_paths, triangular_board,
    verify_coloring, Certificate, Error, Labeling, Verdict,
};

use common::{full_suite, hypothesis_suite, pow, random_labeling, random_push, rng};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn big(x: u64) -> BigUint {
    BigUint::from(x)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let g = triangular_board(4).unwrap();
    ensure!(
        (g.vertex_count(), g.region_count()) == (10, 9),
        "unexpected board shape"
    );
    let mut rng = rng(1);
    let l1 = random_labeling(&mut rng, 2, 10);
    let x = random_push(&mut rng, 2, 9);
    let l2 = apply_push_vector(&l1, &g, &x).unwrap();
    let set = solve_linear(&g, &l1, &l2).unwrap();
    ensure!(set.feasible, "constructed pair reported infeasible");
    ensure!(
        set.solution_count == big(2),
        "solve_linear count {}",
        set.solution_count
    );
    let brute = count_solutions_brute(&g, &l1, &l2).unwrap();
    ensure!(brute == 2, "brute-force count {brute}");
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    Ok(format!(
        "solution_count = 2 (linear and 512-vector brute force), {elapsed:.2?}"
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0u64;
    for length in [2, 3] {
        let g = simplex_strip(2, length).unwrap();
        let c = propagate_coloring(&g).unwrap();
        let v = g.vertex_count();
        for m in [2u64, 3] {
            let partition = partition_all_labelings(&g, m).unwrap();
            let total = pow(m, v);
            let keys: Vec<Vec<u8>> = (0..total)
                .map(|code| {
                    let l = Labeling::from_code(m, v, code).unwrap();
                    class_key(&g, &c, &l).unwrap()
                })
                .collect();
            for a in 0..total as usize {
                for b in 0..total as usize {
                    let same_orbit = partition.class_of[a] == partition.class_of[b];
                    let same_key = keys[a] == keys[b];
                    ensure!(
                        same_orbit == same_key,
                        "strip 2 {length}, m = {m}: codes {a}, {b} orbit {same_orbit} key {same_key}"
                    );
                    pairs += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    Ok(format!("{pairs} ordered pairs agree, {elapsed:.2?}"))
}

fn criterion_3() -> Outcome {
    let suite = hypothesis_suite();
    let mut rng = rng(3);
    use rand::Rng;
    for trial in 0..1000 {
        let (name, g) = &suite[rng.gen_range(0..suite.len())];
        let m = rng.gen_range(2..=9u64);
        let c = propagate_coloring(g).unwrap();
        let l = random_labeling(&mut rng, m, g.vertex_count());
        let x = random_push(&mut rng, m, g.region_count());
        let before = compute_invariant(g, &c, &l).unwrap();
        let after = compute_invariant(g, &c, &apply_push_vector(&l, g, &x).unwrap()).unwrap();
        ensure!(
            before == after,
            "trial {trial} on {name}, m = {m}: {before} became {after}"
        );
    }
    Ok("1000 random triples, invariant unchanged".into())
}

fn criterion_4() -> Outcome {
    let mut rng = rng(4);
    let mut checked = 0;
    for (name, g) in hypothesis_suite() {
        let (n, v, r) = (g.dim(), g.vertex_count(), g.region_count());
        for m in 2..=6u64 {
            if (m as u128).pow(v as u32) > 1 << 16 {
                continue;
            }
            let p = partition_all_labelings(&g, m).unwrap();
            let sizes = &p.report.class_partition_sizes;
            ensure!(
                sizes.len() as u64 == pow(m, n),
                "{name}, m = {m}: {} classes, expected {}",
                sizes.len(),
                pow(m, n)
            );
            ensure!(
                sizes.iter().all(|&s| s == pow(m, v - n)),
                "{name}, m = {m}: class sizes {sizes:?}"
            );
            let expected = pow(m, r + n - v);
            for _ in 0..4 {
                let l1 = random_labeling(&mut rng, m, v);
                let l2 = apply_push_vector(&l1, &g, &random_push(&mut rng, m, r)).unwrap();
                let set = solve_linear(&g, &l1, &l2).unwrap();
                ensure!(
                    set.solution_count == big(expected),
                    "{name}, m = {m}: {} solutions, expected {expected}",
                    set.solution_count
                );
                if (m as u128).pow(r as u32) <= 1 << 20 {
                    let brute = count_solutions_brute(&g, &l1, &l2).unwrap();
                    ensure!(brute == expected, "{name}, m = {m}: brute force {brute}");
                }
            }
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} (graph, m) instances match m^n, m^(v-n), m^(r-v+n)"
    ))
}

fn criterion_5() -> Outcome {
    let suite = hypothesis_suite();
    let mut rng = rng(5);
    use rand::Rng;
    let mut feasible = 0;
    for trial in 0..500 {
        let (name, g) = &suite[rng.gen_range(0..suite.len())];
        let m = rng.gen_range(2..=8u64);
        let c = propagate_coloring(g).unwrap();
        let l1 = random_labeling(&mut rng, m, g.vertex_count());
        let l2 = if rng.gen_bool(0.5) {
            apply_push_vector(&l1, g, &random_push(&mut rng, m, g.region_count())).unwrap()
        } else {
            random_labeling(&mut rng, m, g.vertex_count())
        };
        let linear = solve_linear(g, &l1, &l2).unwrap();
        let paths = match solve_region_paths(g, &c, &l1, &l2) {
            Ok(p) => p,
            Err(e @ Error::InternalCheckFailed(_)) => {
                return Err(format!("trial {trial} on {name}: tripwire {e}"))
            }
            Err(e) => return Err(format!("trial {trial} on {name}: {e}")),
        };
        ensure!(
            paths.is_some() == linear.feasible,
            "trial {trial} on {name}, m = {m}: paths {} linear {}",
            paths.is_some(),
            linear.feasible
        );
        if let Some(seq) = paths {
            ensure!(
                seq.apply(&l1, g).unwrap() == l2,
                "trial {trial} on {name}: sequence misses target"
            );
            feasible += 1;
        }
    }
    Ok(format!(
        "500 instances agree ({feasible} feasible), no tripwire"
    ))
}

fn criterion_6() -> Outcome {
    let mut failures = Vec::new();
    for (name, g) in hypothesis_suite() {
        let (n, v) = (g.dim(), g.vertex_count());
        for p in [2u64, 3, 5] {
            let image = big(p).pow(rank_mod_prime(&g, p) as u32);
            let expected = big(p).pow((v - n) as u32);
            let measured = class_report(&g, p).unwrap().measured_orbit_size;
            ensure!(
                image == expected && measured == expected,
                "{name}, m = {p}: image {image}, orbit {measured}, expected {expected}"
            );
        }
    }
    for n in 1..=3 {
        let g = complete_plus(n).unwrap();
        let classes = class_report(&g, 2).unwrap().measured_class_count;
        let limit = big(2).pow((n - 1) as u32);
        if classes > limit {
            let oracle = partition_all_labelings(&g, 2).unwrap().class_count();
            failures.push(format!(
                "kplus {n}, m = 2: {classes} classes > {limit} (oracle partition: {oracle})"
            ));
        }
    }
    if failures.is_empty() {
        Ok("rank law holds for m in {2,3,5}; complete_plus within m^(n-1)".into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_7() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for (name, g) in full_suite() {
        if !g.is_region_connected() {
            continue;
        }
        let colorable = propagate_coloring(&g).is_ok();
        for m in [2u64, 3] {
            match probe_colorability(&g, m) {
                Ok(verdict) => {
                    let says = verdict.verdict == Verdict::Colorable;
                    ensure!(
                        says == colorable,
                        "{name}, m = {m}: verdict {} but propagation {colorable}",
                        verdict.verdict
                    );
                }
                Err(e) => {
                    let oracle = partition_all_labelings(&g, m).map(|p| p.class_count());
                    failures.push(format!(
                        "{name}, m = {m}: {} ({e}; oracle classes {oracle:?}, propagation colorable {colorable})",
                        e.name()
                    ))
                }
            }
            checked += 1;
        }
    }
    let k4 = complete_plus(2).unwrap();
    let verdict = probe_colorability(&k4, 2).map_err(|e| format!("K4: {e}"))?;
    ensure!(
        verdict.verdict == Verdict::NotColorable,
        "K4 verdict {}",
        verdict.verdict
    );
    let conflict = verdict
        .certificate
        .conflict()
        .ok_or("K4 certificate is not a conflict")?;
    ensure!(conflict.verify(&k4), "K4 conflict does not replay");
    if failures.is_empty() {
        Ok(format!(
            "{checked} (graph, m) probes agree; K4 conflict replays"
        ))
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_8() -> Outcome {
    let a = moves_bound(9, 2, 2).unwrap();
    let b = planar_moves_bound(10).unwrap();
    ensure!(a == big(129), "moves_bound(9,2,2) = {a}");
    ensure!(b == big(8193), "planar_moves_bound(10) = {b}");
    Ok("moves_bound(9,2,2) = 129, planar_moves_bound(10) = 8193".into())
}

fn criterion_9() -> Outcome {
    let g = shared_vertex_chain(3).unwrap();
    let verdict = probe_colorability_decomposed(&g, 2).map_err(|e| e.to_string())?;
    ensure!(
        verdict.components.len() == 3,
        "{} components",
        verdict.components.len()
    );
    ensure!(
        verdict.verdict == Verdict::Colorable,
        "verdict {}",
        verdict.verdict
    );
    let Certificate::Coloring(c) = &verdict.certificate else {
        return Err("no stitched coloring".into());
    };
    ensure!(
        verify_coloring(&g, c).unwrap(),
        "stitched coloring is improper"
    );
    let cyclic = common::graph(2, 6, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 0]]);
    let refusal = probe_colorability_decomposed(&cyclic, 2);
    ensure!(
        matches!(refusal, Err(Error::CyclicAssociation)),
        "cyclic chain gave {refusal:?}"
    );
    Ok("chain of 3 stitched and verified; cyclic chain refused".into())
}

fn main() {
    let criteria: [(u32, fn() -> Outcome); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (id, run) in criteria {
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("criterion {id} [PRIMARY] PASS: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {id} [PRIMARY] FAIL: {detail}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 9 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
