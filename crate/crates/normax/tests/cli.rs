//! End-to-end tests of the `normax` binary: output shapes, determinism,
//! CSV re-emission, and exit codes.

use std::process::{Command, Output};

fn normax(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn constants_reproduces_published_row_at_five_decimals() {
    let out = normax(&["constants", "--n", "1e5", "--digits", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n,exact,betafinal,barbeta,hallstar,barbetastar,betastar"
    );
    assert_eq!(
        lines.next().unwrap(),
        "100000,4.26489,4.26488,4.26430,4.27575,4.27535,4.28019"
    );
}

#[test]
fn constants_rejects_out_of_domain_method() {
    let out = normax(&["constants", "--n", "2", "--methods", "hallstar"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("hallstar") && err.contains("n = 2"), "{err}");
}

#[test]
fn constants_accepts_caret_sizes() {
    let out = normax(&[
        "constants",
        "--n",
        "10^100",
        "--methods",
        "exact",
        "--digits",
        "5",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1e100,21.27345"));
}

#[test]
fn distance_row_matches_published_value() {
    let out = normax(&[
        "distance", "--n", "10", "--pairs", "exact:af", "--digits", "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("method,aux,n,sup,argmax,scaled\n"));
    assert!(text.contains("exact,af,10,0.01826,"), "{text}");
    assert!(
        text.trim_end().ends_with("0.04204") || text.contains(",0.0420"),
        "{text}"
    );
}

#[test]
fn distance_accepts_method_aux_cross_product() {
    let text = stdout(&normax(&[
        "distance",
        "--n",
        "10",
        "--methods",
        "exact,hallstar",
        "--aux",
        "af,ah",
        "--digits",
        "5",
    ]));
    assert_eq!(text.lines().count(), 5); // header + 2×2 combinations
    assert!(text.contains("exact,ah,10,"));
    let conflict = normax(&[
        "distance",
        "--n",
        "10",
        "--pairs",
        "exact:af",
        "--methods",
        "exact",
    ]);
    assert_eq!(conflict.status.code(), Some(2));
}

#[test]
fn tables_have_the_standard_shapes() {
    let t1 = stdout(&normax(&["table", "--which", "1"]));
    assert_eq!(t1.lines().count(), 3);
    assert!(t1.starts_with("constant,16,30,50,100,10000,1000000,1e10,1e20,1e100\n"));

    let t2 = stdout(&normax(&["table", "--which", "2"]));
    assert_eq!(t2.lines().count(), 6);
    assert!(t2.contains("exact,af,0.0420,0.1049,"));

    let t3 = stdout(&normax(&["table", "--which", "3"]));
    assert_eq!(t3.lines().count(), 7);
    assert!(t3.contains("exact,1.28155,2.32635,4.26489,6.36134,11.46402,16.39728"));

    let bad = normax(&["table", "--which", "4"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_exit_zero() {
    for suite in ["proof-constants", "dife", "rates", "prop4", "prop5"] {
        let out = normax(&["verify", "--suite", suite]);
        assert_eq!(out.status.code(), Some(0), "suite {suite}");
        let text = stdout(&out);
        assert!(text.starts_with("name,argument,lhs,rhs,margin,pass\n"));
        for line in text.lines().skip(1) {
            assert!(line.ends_with(",true"), "suite {suite}: {line}");
        }
    }
    let bad = normax(&["verify", "--suite", "nonsense"]);
    assert_eq!(bad.status.code(), Some(2));
    // sizes below n0 violate the certificate's precondition
    let below = normax(&["verify", "--suite", "theorem1", "--n0", "16", "--n", "10"]);
    assert_eq!(below.status.code(), Some(2));
}

#[test]
fn simulate_is_deterministic_for_a_seed() {
    let args = [
        "simulate", "--n", "10", "--reps", "20000", "--seed", "7", "--jobs", "3",
    ];
    let a = stdout(&normax(&args));
    let b = stdout(&normax(&args));
    assert_eq!(a, b);
    assert!(a.starts_with("n,method,aux,reps,seed,ks_distance,sample_mean,sample_sd\n"));
    // a different seed changes the report
    let c = stdout(&normax(&[
        "simulate", "--n", "10", "--reps", "20000", "--seed", "8",
    ]));
    assert_ne!(a, c);
}

#[test]
fn emitted_csv_reemits_byte_identically() {
    // parse every numeric field and reformat at the same precision
    for (args, decimals) in [
        (vec!["table", "--which", "3"], Some(5usize)),
        (
            vec!["distance", "--n", "10,1e3", "--pairs", "exact:af"],
            None,
        ),
        (vec!["calibrate", "--m", "40"], None),
    ] {
        let text = stdout(&normax(&args));
        for line in text.lines().skip(1) {
            for field in line.split(',') {
                if let Ok(v) = field.parse::<f64>() {
                    let re = match decimals {
                        Some(d) => format!("{v:.d$}"),
                        None => format!("{v}"),
                    };
                    if field.parse::<i64>().is_err() && field != "1e5" {
                        assert_eq!(re, field, "args {args:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn out_flag_writes_the_same_bytes() {
    let dir = std::env::temp_dir().join("normax_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t3.csv");
    let on_stdout = stdout(&normax(&["table", "--which", "3"]));
    let out = normax(&["table", "--which", "3", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let from_file = std::fs::read_to_string(&path).unwrap();
    assert_eq!(on_stdout, from_file);
    std::fs::remove_file(&path).ok();
}

#[test]
fn delimiter_flag_switches_separator() {
    let text = stdout(&normax(&["table", "--which", "1", "--delimiter", ";"]));
    assert!(text.starts_with("constant;16;30;"));
    let bad = normax(&["table", "--which", "1", "--delimiter", ";;"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn density_emits_one_column_per_pair() {
    let text = stdout(&normax(&[
        "density",
        "--n",
        "100",
        "--pairs",
        "exact:af,hallstar:ah",
        "--grid",
        "-2:8:0.5",
    ]));
    assert!(text.starts_with("x,gumbel,exact:af,hallstar:ah\n"));
    assert_eq!(text.lines().count(), 22); // header + 21 grid points
    let bad = normax(&["density", "--grid", "oops"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn calibrate_summary_row_is_last() {
    let text = stdout(&normax(&["calibrate", "--m", "20"]));
    assert!(text.starts_with("k,p_k\n"));
    let last = text.lines().last().unwrap();
    assert!(last.starts_with("p_hat,"), "{last}");
    assert_eq!(text.lines().count(), 13); // header + k=10..20 + summary
}

#[test]
fn usage_and_unknown_commands() {
    let none = normax(&[]);
    assert_eq!(none.status.code(), Some(2));
    let help = normax(&["help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("USAGE"));
    let unknown = normax(&["frobnicate"]);
    assert_eq!(unknown.status.code(), Some(2));
    let badflag = normax(&["constants", "--wat", "1"]);
    assert_eq!(badflag.status.code(), Some(2));
}

#[test]
fn simulate_dump_writes_sorted_full_precision_samples() {
    let dir = std::env::temp_dir().join("normax_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dump.txt");
    let out = normax(&[
        "simulate",
        "--n",
        "10",
        "--reps",
        "1000",
        "--seed",
        "3",
        "--dump",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let values: Vec<f64> = text.lines().map(|l| l.parse().unwrap()).collect();
    assert_eq!(values.len(), 1000);
    for w in values.windows(2) {
        assert!(w[0] <= w[1]);
    }
    // full precision: shortest round-trip strings
    for (line, v) in text.lines().zip(&values) {
        assert_eq!(format!("{v}"), line);
    }
    std::fs::remove_file(&path).ok();
}
