//! Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
//! criterion fails. Run with `cargo test --test acceptance`.

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_traits::One;

use fractal_mis::decimation::{self, closed, mask_table, BoundaryMask, Decimator, RecurrenceSet};
use fractal_mis::graph::{self, edge_count, vertex_count, DegreeMultiset, Family};
use fractal_mis::oracle::{covers_all_edges, RestrictedQuery};
use fractal_mis::{ExactCount, Oracle, Score};
use fractal_mis_cli::verify::verify_suite_with;
use fractal_mis_cli::Caps;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn pow3(e: u32) -> BigUint {
    BigUint::from(3u32).pow(e)
}

fn pow2(e: u32) -> BigUint {
    BigUint::from(2u32).pow(e)
}

fn size(s: &Score) -> BigUint {
    s.as_size().and_then(|v| v.to_biguint()).expect("feasible class")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn oracle() -> Oracle {
    Oracle::with_cap(vertex_count(4).try_into().unwrap())
}

fn web_alpha() -> Verdict {
    let start = Instant::now();
    let tables = Decimator::default().psw_class_tables(64).map_err(|e| e.to_string())?;
    for t in &tables {
        let n = t.generation;
        ensure(*t.alpha() == pow3(n - 1), || format!("n = {n}: alpha {}", t.alpha()))?;
        // The triangle has no non-hub vertex, so the no-hub class starts at n = 2.
        if n >= 2 {
            ensure(t.alpha0 == pow3(n - 1), || format!("n = {n}: alpha0 {}", t.alpha0))?;
        } else {
            ensure(t.alpha0 == BigUint::ZERO && t.alpha1 == BigUint::one(), || "n = 1 classes".into())?;
        }
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("alpha_n = 3^(n-1) for n = 1..64, attained by alpha0 from n = 2".into())
}

fn gasket_alpha() -> Verdict {
    let start = Instant::now();
    let tables = Decimator::default().gasket_class_tables(64).map_err(|e| e.to_string())?;
    for t in tables.iter().skip(1) {
        let n = t.generation;
        let want = (pow3(n - 1) + 3u32) / 2u32;
        ensure(size(&t.alpha[3]) == want, || format!("n = {n}: alpha3 {}", t.alpha[3]))?;
        ensure(size(&t.independence_number()) == want, || format!("n = {n}: alpha"))?;
    }
    within(start.elapsed(), Duration::from_secs(1))?;
    Ok("alpha3 = (3^(n-1) + 3)/2 for n = 2..64".into())
}

fn class_values() -> Verdict {
    let d = Decimator::default();
    let web = d.psw_class_tables(64).map_err(|e| e.to_string())?;
    for t in web.iter().skip(1) {
        let n = t.generation;
        let want = pow3(n - 1) - pow2(n - 1) + 1u32;
        ensure(t.alpha1 == want, || format!("web n = {n}: alpha1 {}", t.alpha1))?;
    }
    let gasket = d.gasket_class_tables(64).map_err(|e| e.to_string())?;
    for t in gasket.iter().skip(1) {
        let n = t.generation;
        let lo = (pow3(n - 1) - 1u32) / 2u32;
        let hi = (pow3(n - 1) + 1u32) / 2u32;
        let got = [size(&t.alpha[0]), size(&t.alpha[1]), size(&t.alpha[2])];
        ensure(got == [lo, hi.clone(), hi], || format!("gasket n = {n}: {got:?}"))?;
    }
    Ok("web alpha1 and gasket alpha0..alpha2 match for n = 2..64".into())
}

fn oracle_equivalence() -> Verdict {
    let start = Instant::now();
    let o = oracle();
    let mut graphs = 0;
    for family in Family::ALL {
        for n in 1..=4 {
            let g = graph::build(family, n).map_err(|e| e.to_string())?;
            let table = mask_table(family, n).map_err(|e| e.to_string())?;
            let alpha = o.alpha(&g).map_err(|e| e.to_string())?;
            ensure(alpha == size(&table.alpha()), || format!("{family} n = {n}: alpha {alpha}"))?;
            let classes = table.class_values();
            for (k, want) in classes.iter().enumerate() {
                let mut best = Score::Infeasible;
                for mask in BoundaryMask::all().filter(|m| m.class() == k) {
                    let q = RestrictedQuery::boundary_pattern(g.boundary(), mask.bits());
                    best = best.max(o.restricted_alpha(&g, &q).map_err(|e| e.to_string())?);
                }
                ensure(&best == want, || format!("{family} n = {n} class {k}: oracle {best}, DP {want}"))?;
            }
            let count = ExactCount::from(o.count_maximum_independent_sets(&g).map_err(|e| e.to_string())?);
            let dp = table.mis_count().map_err(|e| e.to_string())?;
            ensure(count == dp, || format!("{family} n = {n}: count oracle {count}, DP {dp}"))?;
            graphs += 1;
        }
    }
    within(start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{graphs} graphs: alpha, per-class alphas and counts equal"))
}

fn web_uniqueness() -> Verdict {
    let o = oracle();
    for n in 2..=4 {
        let g = graph::build_psw(n).map_err(|e| e.to_string())?;
        let all = o.enumerate_maximum_independent_sets(&g, 2).map_err(|e| e.to_string())?;
        let witness = decimation::psw_mis_witness(n).map_err(|e| e.to_string())?;
        ensure(all.count == Some(BigUint::one()), || format!("n = {n}: count {:?}", all.count))?;
        ensure(all.enumeration == Some(vec![witness]), || format!("n = {n}: unique set differs from witness"))?;
    }
    Ok("G_2, G_3, G_4 each have exactly one MIS, equal to the witness".into())
}

fn gasket_counts() -> Verdict {
    let start = Instant::now();
    let pairs = Decimator::default().gasket_count_pairs(40).map_err(|e| e.to_string())?;
    let o = oracle();
    for (n, want) in [(2u32, 1u64), (3, 2), (4, 16)] {
        let x = &pairs[n as usize - 2].x;
        ensure(*x == ExactCount::from(want), || format!("x_{n} = {x}"))?;
        let g = graph::build_gasket(n).map_err(|e| e.to_string())?;
        let e = o.enumerate_maximum_independent_sets(&g, 1000).map_err(|e| e.to_string())?;
        let listed = e.enumeration.map(|s| s.len()).unwrap_or(0);
        ensure(!e.truncated && listed as u64 == want, || format!("n = {n}: oracle lists {listed}"))?;
    }
    for p in &pairs {
        let n = p.generation;
        let exponent = (pow3(n - 2) - 1u32) / 2u32;
        ensure(p.x.pow2_exponent() == Some(&exponent), || format!("x_{n} = {} is not 2^{exponent}", p.x))?;
    }
    let last = pairs.last().unwrap();
    ensure(last.generation == 40 && last.x.pow2_exponent() == Some(&((pow3(38) - 1u32) / 2u32)), || "x_40".into())?;
    within(start.elapsed(), Duration::from_secs(5))?;
    Ok("x_2, x_3, x_4 = 1, 2, 16 by enumeration; x_n = 2^((3^(n-2)-1)/2) for n = 2..40".into())
}

fn recurrence_cross_check() -> Verdict {
    let d = Decimator::default();
    d.psw_class_tables(64).map_err(|e| e.to_string())?;
    d.gasket_class_tables(64).map_err(|e| e.to_string())?;
    d.gasket_count_pairs(64).map_err(|e| e.to_string())?;
    let mutations = RecurrenceSet::published().single_constant_mutations();
    for (label, mutated) in &mutations {
        let report = verify_suite_with(3, &Decimator::new(mutated.clone()), &Caps::default()).map_err(|e| e.to_string())?;
        ensure(!report.passed, || format!("mutation not detected: {label}"))?;
        ensure(report.failures().all(|c| c.name.contains("transcribed")), || {
            format!("mutation {label} tripped a check unrelated to the transcribed recurrences")
        })?;
    }
    Ok(format!(
        "transcribed and generic agree for n <= 64; all {} single-constant mutations caught at max_n = 3",
        mutations.len()
    ))
}

fn structure() -> Verdict {
    let mut slowest = Duration::ZERO;
    for family in Family::ALL {
        for n in 1..=12 {
            let start = Instant::now();
            let g = graph::build(family, n).map_err(|e| e.to_string())?;
            let took = start.elapsed();
            if n == 12 {
                within(took, Duration::from_secs(2)).map_err(|e| format!("{family} n = 12 {e}"))?;
                slowest = slowest.max(took);
            }
            ensure(BigUint::from(g.num_vertices()) == vertex_count(n), || format!("{family} n = {n}: vertices"))?;
            ensure(BigUint::from(g.edges().len()) == edge_count(n), || format!("{family} n = {n}: edges"))?;
            ensure(g.degree_multiset() == DegreeMultiset::expected(family, n), || format!("{family} n = {n}: degrees"))?;
        }
    }
    Ok(format!("N, E and degree multisets hold for n <= 12; slowest n = 12 build {slowest:?}"))
}

fn vertex_cover() -> Verdict {
    let o = oracle();
    for family in Family::ALL {
        for n in 1..=4 {
            let g = graph::build(family, n).map_err(|e| e.to_string())?;
            let c = o.min_vertex_cover(&g).map_err(|e| e.to_string())?;
            let alpha = decimation::alpha(family, n).map_err(|e| e.to_string())?;
            ensure(c.size.clone() + &alpha == vertex_count(n), || format!("{family} n = {n}: cover {}", c.size))?;
            ensure(covers_all_edges(&g, &c.witness).unwrap_or(false), || format!("{family} n = {n}: uncovered edge"))?;
        }
        for n in 2..=64 {
            let size = match family {
                Family::ScaleFreeWeb => closed::psw_vertex_cover(n),
                Family::SierpinskiGasket => closed::gasket_vertex_cover(n),
            }
            .map_err(|e| e.to_string())?;
            let alpha = decimation::alpha(family, n).map_err(|e| e.to_string())?;
            ensure(size.clone() + alpha == vertex_count(n), || format!("{family} n = {n}: closed cover {size}"))?;
        }
    }
    Ok("oracle covers are N - alpha for n <= 4; closed-form sizes match for n <= 64".into())
}

fn class_properties() -> Verdict {
    let d = Decimator::default();
    for t in d.psw_class_tables(64).map_err(|e| e.to_string())?.iter().skip(1) {
        ensure(t.alpha1 < t.alpha0, || format!("web n = {}: alpha1 >= alpha0", t.generation))?;
    }
    for t in d.gasket_class_tables(64).map_err(|e| e.to_string())?.iter().skip(1) {
        let a = &t.alpha;
        ensure(a[0].offset(1) == a[1] && a[1] == a[2] && a[2].offset(1) == a[3], || {
            format!("gasket n = {}: chain broken", t.generation)
        })?;
    }
    Ok("web alpha1 < alpha0 and gasket alpha0 + 1 = alpha1 = alpha2 = alpha3 - 1 for n = 2..64".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("web independence number", web_alpha),
        ("gasket independence number", gasket_alpha),
        ("class value formulas", class_values),
        ("oracle equivalence n <= 4", oracle_equivalence),
        ("web MIS uniqueness", web_uniqueness),
        ("gasket MIS counts", gasket_counts),
        ("recurrence cross-check and mutations", recurrence_cross_check),
        ("structural invariants n <= 12", structure),
        ("vertex cover complement", vertex_cover),
        ("class ordering and chain", class_properties),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let verdict = check();
        let ms = start.elapsed().as_millis();
        match verdict {
            Ok(detail) => println!("PASS {:>2} {name} ({ms} ms): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({ms} ms): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
