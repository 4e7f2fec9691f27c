use std::process::Command as Process;

use fractal_mis_cli::report::ResultReport;
use fractal_mis_cli::{parse_args, run, Output};

fn report(argv: &[&str]) -> ResultReport {
    let cmd = parse_args(argv.iter().copied()).unwrap();
    match run(&cmd).unwrap().output {
        Output::Report(r) => r,
        other => panic!("expected a result report, got {other:?}"),
    }
}

fn binary(argv: &[&str]) -> std::process::Output {
    Process::new(env!("CARGO_BIN_EXE_fractal-mis")).args(argv).output().unwrap()
}

#[test]
fn web_alpha_closed_form() {
    let r = report(&["alpha", "--family", "psw", "--n", "6", "--method", "closed"]);
    assert_eq!(r.alpha, "243");
    assert_eq!(r.num_vertices, "366");
    assert_eq!(r.num_edges, "729");
}

#[test]
fn gasket_count_by_oracle() {
    let r = report(&["count", "--family", "gasket", "--n", "4", "--method", "oracle"]);
    let c = r.count.unwrap();
    assert_eq!(c.decimal.as_deref(), Some("16"));
    assert_eq!(c.pow2_exponent.as_deref(), Some("4"));
}

#[test]
fn web_cover_is_the_older_vertices() {
    let r = report(&["cover", "--family", "psw", "--n", "3"]);
    let cover = r.cover.unwrap();
    assert_eq!(cover.size, "6");
    // ids 0..6 are exactly the vertices born at generations 1 and 2
    assert_eq!(cover.witness.unwrap(), (0..6).collect::<Vec<u32>>());
}

#[test]
fn methods_agree_where_they_overlap() {
    for family in ["psw", "gasket"] {
        for n in ["2", "3", "4"] {
            let alphas: Vec<String> = ["dp", "closed", "oracle"]
                .iter()
                .map(|m| report(&["alpha", "--family", family, "--n", n, "--method", m, "--classes"]))
                .map(|r| format!("{} {:?}", r.alpha, r.classes))
                .collect();
            assert!(alphas.windows(2).all(|w| w[0] == w[1]), "{family} n={n}: {alphas:?}");
            let counts: Vec<_> = ["dp", "closed", "oracle"]
                .iter()
                .map(|m| report(&["count", "--family", family, "--n", n, "--method", m]).count)
                .collect();
            assert!(counts.windows(2).all(|w| w[0] == w[1]), "{family} n={n}: {counts:?}");
        }
    }
}

#[test]
fn witnesses_are_maximum() {
    for method in ["dp", "oracle"] {
        let r = report(&["witness", "--family", "gasket", "--n", "3", "--method", method]);
        assert_eq!(r.witness.unwrap().len().to_string(), r.alpha);
    }
}

#[test]
fn enumeration_is_truncated_at_the_limit() {
    let r = report(&["enumerate", "--family", "gasket", "--n", "4", "--limit", "3"]);
    let e = r.enumeration.unwrap();
    assert_eq!(e.sets.len(), 3);
    assert!(e.truncated);
    assert!(e.sets.windows(2).all(|w| w[0] < w[1]));
    let all = report(&["enumerate", "--family", "gasket", "--n", "4", "--limit", "16"]);
    assert!(!all.enumeration.unwrap().truncated);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let argv = ["cover", "--family", "gasket", "--n", "5"];
    let mut a = report(&argv);
    let mut b = report(&argv);
    a.elapsed_ms = 0;
    b.elapsed_ms = 0;
    assert_eq!(a.to_json(), b.to_json());
    let back: ResultReport = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(back, a);
}

#[test]
fn huge_counts_are_reported_by_exponent() {
    let r = report(&["count", "--family", "gasket", "--n", "40"]);
    let c = r.count.unwrap();
    assert_eq!(c.decimal, None);
    let e: num_bigint::BigUint = c.pow2_exponent.unwrap().parse().unwrap();
    assert_eq!(e, (num_bigint::BigUint::from(3u32).pow(38) - 1u32) / 2u32);
}

#[test]
fn exit_codes() {
    let ok = binary(&["alpha", "--family", "psw", "--n", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"alpha\": \"81\""));

    let usage = binary(&["alpha", "--n", "5"]);
    assert_eq!(usage.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&usage.stderr).contains("--family"));

    let cap = binary(&["count", "--family", "psw", "--n", "5", "--method", "oracle"]);
    assert_eq!(cap.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&cap.stderr).contains("oracle cap"));

    let closed = binary(&["witness", "--family", "gasket", "--n", "3", "--method", "closed"]);
    assert_eq!(closed.status.code(), Some(2));

    let generation = binary(&["generate", "--family", "psw", "--n", "17"]);
    assert_eq!(generation.status.code(), Some(2));

    let verify = binary(&["verify", "--max-n", "2"]);
    assert_eq!(verify.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&verify.stdout).contains("gasket count n=2 equals 1"));
}

#[test]
fn raised_oracle_cap_is_honoured() {
    let r = report(&["alpha", "--family", "psw", "--n", "5", "--method", "oracle", "--cap-vertices", "123"]);
    assert_eq!(r.alpha, "81");
}

#[test]
fn generate_writes_requested_format() {
    let dir = tempfile::tempdir().unwrap();
    for (format, marker) in [("edges", "# family=gasket n=3"), ("dot", "graph gasket_3 {"), ("json", "\"family\":\"gasket\"")] {
        let path = dir.path().join(format!("s3.{format}"));
        let out = binary(&["generate", "--family", "gasket", "--n", "3", "--format", format, "--out", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with(marker) || text.contains(marker), "{format}: {text}");
    }
    let doc = fractal_mis::graph::EdgeListDocument::parse(
        &String::from_utf8(binary(&["generate", "--family", "psw", "--n", "4"]).stdout).unwrap(),
    )
    .unwrap();
    assert_eq!(doc.num_vertices, 42);
    assert_eq!(doc.edges.len(), 81);
}

#[test]
fn unwritable_output_is_an_io_failure() {
    let out = binary(&["alpha", "--family", "psw", "--n", "2", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn bench_reports_timings_within_caps() {
    let cmd = parse_args(["bench", "--family", "psw", "--n", "3"]).unwrap();
    let Output::Bench(b) = run(&cmd).unwrap().output else { panic!() };
    assert!(b.generation_us.is_some() && b.oracle_us.is_some());
    assert_eq!(b.alpha, "9");
    let cmd = parse_args(["bench", "--family", "psw", "--n", "30"]).unwrap();
    let Output::Bench(b) = run(&cmd).unwrap().output else { panic!() };
    assert!(b.generation_us.is_none() && b.oracle_us.is_none());
}
