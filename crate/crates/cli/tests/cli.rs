//! End-to-end checks of the command-line surface: the full experiment
//! matrix is expressible through flags alone, and the binary behaves on
//! real files.

use antmap::config::{Cli, Command, RunConfig};
use antmap_core::metrics::MetricKind;
use clap::Parser;
use std::fs;
use std::path::PathBuf;
use std::process::Command as Process;

fn parse_run(args: &[&str]) -> RunConfig {
    let mut argv = vec!["antmap", "run"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("flags must parse");
    match cli.command {
        Command::Run(run) => run.into_config().expect("config must build"),
        other => panic!("expected run, got {other:?}"),
    }
}

#[test]
fn full_experiment_matrix_is_flag_expressible() {
    // Baseline on the synthetic cross plus every published variation:
    // stacking allowed, two evaporation rates, two sensitivities, the
    // homogeneous control, four scanned habitats, and the mid-run swap.
    let baseline = parse_run(&["--habitat", "cross.pgm", "--iters", "1000", "--seed", "1"]);
    assert_eq!(baseline.params.eta, 0.07);
    assert_eq!(baseline.params.kappa, 0.015);
    assert_eq!(baseline.params.beta, 3.5);
    assert_eq!(baseline.params.delta, 0.2);
    assert_eq!(baseline.params.gain, 1.5);
    assert_eq!(baseline.params.density, 0.3);
    assert!(baseline.params.exclusion);

    let stacking = parse_run(&["--habitat", "cross.pgm", "--allow-stacking"]);
    assert!(!stacking.params.exclusion);

    let slow_decay = parse_run(&["--habitat", "cross.pgm", "--kappa", "0.011"]);
    assert_eq!(slow_decay.params.kappa, 0.011);

    let fast_decay = parse_run(&["--habitat", "cross.pgm", "--kappa", "0.019"]);
    assert_eq!(fast_decay.params.kappa, 0.019);

    let sharp = parse_run(&["--habitat", "cross.pgm", "--beta", "4.5"]);
    assert_eq!(sharp.params.beta, 4.5);

    let diffuse = parse_run(&["--habitat", "cross.pgm", "--beta", "2.5"]);
    assert_eq!(diffuse.params.beta, 2.5);

    let control = parse_run(&["--habitat", "flat.pgm", "--allow-stacking"]);
    assert_eq!(control.habitat_path, PathBuf::from("flat.pgm"));
    assert!(!control.params.exclusion);

    for scanned in ["einstein.pgm", "map.pgm", "marble.pgm", "road.pgm"] {
        let cfg = parse_run(&["--habitat", scanned]);
        assert_eq!(cfg.habitat_path, PathBuf::from(scanned));
        assert_eq!(cfg.params, baseline.params);
    }

    let swap = parse_run(&[
        "--habitat", "einstein.pgm", "--iters", "1000", "--swap", "100:map.pgm",
    ]);
    assert_eq!(swap.swap, Some((100, PathBuf::from("map.pgm"))));
    assert_eq!(swap.iterations, 1000);
}

#[test]
fn metric_selector_round_trips_through_flags() {
    assert_eq!(parse_run(&["--habitat", "x.pgm"]).params.metric, MetricKind::Statistical);
    assert_eq!(
        parse_run(&["--habitat", "x.pgm", "--metric", "ulam"]).params.metric,
        MetricKind::Ulam
    );
}

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_antmap"))
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("antmap-cli-{tag}-{}", std::process::id()));
    if dir.exists() {
        fs::remove_dir_all(&dir).unwrap();
    }
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn metrics_subcommand_prints_the_worked_example() {
    let out = bin()
        .args(["metrics"])
        .args("10 30 70 20 50 80 40 60 100 10 30 70 20 50 80 40 60 15".split(' '))
        .output()
        .unwrap();
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("delta1=1 delta2=7"));
    assert!(stdout.contains("tau_u=0.75 tau_r=-0.75 tau=0.75"));
}

#[test]
fn gen_writes_a_parseable_habitat() {
    let dir = temp_dir("gen");
    let path = dir.join("cross.pgm");
    let out = bin()
        .args(["gen", "cross", "--width", "50", "--height", "40", "--thickness", "6"])
        .arg("--out")
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let habitat = antmap_core::Habitat::from_pgm(&fs::read(&path).unwrap()).unwrap();
    assert_eq!((habitat.width(), habitat.height()), (50, 40));
    let fg = habitat.image().pixels().iter().filter(|&&p| p == 0).count();
    assert_eq!(fg, 6 * 50 + 6 * 40 - 6 * 6);
}

#[test]
fn zero_iteration_run_writes_header_only_report() {
    let dir = temp_dir("zero");
    let habitat = dir.join("flat.pgm");
    assert!(bin()
        .args(["gen", "flat", "--width", "10", "--height", "10"])
        .arg("--out")
        .arg(&habitat)
        .status()
        .unwrap()
        .success());
    let out_dir = dir.join("run");
    let out = bin()
        .args(["run", "--iters", "0"])
        .arg("--habitat")
        .arg(&habitat)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(
        fs::read_to_string(out_dir.join("report.csv")).unwrap(),
        "step,total_pheromone,gini,max_sigma\n"
    );
    assert!(out_dir.join("config.txt").exists());
    assert!(fs::read_dir(&out_dir).unwrap().count() == 2, "no snapshots expected");
}

#[test]
fn missing_habitat_file_fails_with_its_path() {
    let out = bin()
        .args(["run", "--habitat", "no-such-habitat.pgm"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("no-such-habitat.pgm"), "stderr was: {stderr}");
}

#[test]
fn config_echo_reproduces_the_run_settings() {
    let dir = temp_dir("echo");
    let habitat = dir.join("flat.pgm");
    assert!(bin()
        .args(["gen", "flat", "--width", "12", "--height", "12"])
        .arg("--out")
        .arg(&habitat)
        .status()
        .unwrap()
        .success());
    let out_dir = dir.join("run");
    let status = bin()
        .args(["run", "--iters", "3", "--seed", "5", "--beta", "2.5", "--metric", "ulam"])
        .arg("--habitat")
        .arg(&habitat)
        .arg("--out")
        .arg(&out_dir)
        .status()
        .unwrap();
    assert!(status.success());
    let echoed = RunConfig::from_kv(&fs::read_to_string(out_dir.join("config.txt")).unwrap())
        .expect("config echo must parse");
    assert_eq!(echoed.params.beta, 2.5);
    assert_eq!(echoed.params.metric, MetricKind::Ulam);
    assert_eq!(echoed.params.seed, 5);
    assert_eq!(echoed.iterations, 3);
    assert_eq!(echoed.habitat_path, habitat);
}
