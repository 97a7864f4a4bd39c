use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use tempfile::TempDir;

const BIN: &str = env!("CARGO_BIN_EXE_copdesign");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn bundled_config() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("configs/fedorov_linear.json")
}

const PRODUCT: &str =
    r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"product"},"estimate_alpha":false}"#;
const ROUNDED_XI: &str = r#"{"points":[0,0.38,0.76,1],"weights":[0.16,0.28,0.23,0.33]}"#;

fn field(text: &str, key: &str) -> f64 {
    let line = text
        .lines()
        .find(|l| l.starts_with(key))
        .unwrap_or_else(|| panic!("no {key} in {text}"));
    line[key.len()..].trim().trim_end_matches('%').parse().unwrap()
}

#[test]
fn bundled_config_optimizes_and_certifies() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("xi.json");
    let o = run(&["optimize", "--config", s(&bundled_config()), "--out", s(&out)]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("certified"));
    let d: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(d["points"].as_array().unwrap().len(), 4);
    assert_eq!(d["metadata"]["certified"], true);
}

#[test]
fn invalid_inputs_exit_1() {
    let dir = TempDir::new().unwrap();
    let clayton = write(
        &dir,
        "c.json",
        r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"clayton","tau":-0.1}}"#,
    );
    let small_grid = write(
        &dir,
        "g.json",
        r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"product"},"estimate_alpha":false,"optimizer":{"grid_size":2}}"#,
    );
    let bad_version = write(
        &dir,
        "v.json",
        r#"{"schema_version":9,"problem":"continuous-linear","copula":{"family":"product"}}"#,
    );
    let out = dir.path().join("o.json");
    for cfg in [&clayton, &small_grid, &bad_version] {
        let o = run(&["optimize", "--config", s(cfg), "--out", s(&out)]);
        assert_eq!(code(&o), 1, "{}", cfg.display());
    }

    let config = write(&dir, "p.json", PRODUCT);
    let short = write(
        &dir,
        "w.json",
        r#"{"points":[0,0.38,0.76,1],"weights":[0.16,0.28,0.23,0.23]}"#,
    );
    let outside = write(&dir, "x.json", r#"{"points":[0,0.5,2],"weights":[0.3,0.3,0.4]}"#);
    for design in [&short, &outside] {
        let o = run(&["check", "--design", s(design), "--config", s(&config)]);
        assert_eq!(code(&o), 1, "{}", design.display());
    }
    assert_eq!(
        code(&run(&[
            "check",
            "--design",
            "/nonexistent.json",
            "--config",
            s(&config)
        ])),
        1
    );
    assert_eq!(code(&run(&["optimize"])), 1);
}

#[test]
fn check_exit_codes() {
    let dir = TempDir::new().unwrap();
    let config = write(&dir, "p.json", PRODUCT);
    let opt = dir.path().join("opt.json");
    assert_eq!(code(&run(&["optimize", "--config", s(&config), "--out", s(&opt)])), 0);

    let o = run(&["check", "--design", s(&opt), "--config", s(&config)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max sensitivity 6.00"), "{}", stdout(&o));

    // Two-decimal rounding of the weights pushes the peak to about 6.19.
    let rounded = write(&dir, "r.json", ROUNDED_XI);
    let o = run(&["check", "--design", s(&rounded), "--config", s(&config)]);
    assert_eq!(code(&o), 4);
    let o = run(&[
        "check",
        "--design",
        s(&rounded),
        "--config",
        s(&config),
        "--tol",
        "0.05",
    ]);
    assert_eq!(code(&o), 0);

    // The independence design ignores the dependence parameter's information.
    let fgm = write(
        &dir,
        "f.json",
        r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"fgm","tau":0.15}}"#,
    );
    assert_eq!(code(&run(&["check", "--design", s(&rounded), "--config", s(&fgm)])), 4);
}

#[test]
fn singular_design_exits_2() {
    let dir = TempDir::new().unwrap();
    let config = write(
        &dir,
        "b.json",
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"frank","tau":0.76}}"#,
    );
    let one = write(&dir, "one.json", r#"{"points":[5],"weights":[1]}"#);
    assert_eq!(code(&run(&["check", "--design", s(&one), "--config", s(&config)])), 2);
    let good = write(&dir, "g.json", r#"{"points":[0,2.8,6.79],"weights":[0.42,0.36,0.22]}"#);
    assert_eq!(
        code(&run(&["efficiency", s(&good), s(&one), "--config", s(&config)])),
        2
    );
}

#[test]
fn efficiency_values() {
    let dir = TempDir::new().unwrap();
    let config = write(
        &dir,
        "b.json",
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"frank","tau":0.76}}"#,
    );
    let published = write(
        &dir,
        "pub.json",
        r#"{"points":[0,2.8,6.79],"weights":[0.42,0.36,0.22]}"#,
    );
    let o = run(&["efficiency", s(&published), s(&published), "--config", s(&config)]);
    assert_eq!(code(&o), 0);
    assert_eq!(field(&stdout(&o), "efficiency"), 1.0);

    let opt = dir.path().join("opt.json");
    assert_eq!(code(&run(&["optimize", "--config", s(&config), "--out", s(&opt)])), 0);
    let o = run(&["efficiency", s(&published), s(&opt), "--config", s(&config)]);
    assert_eq!(code(&o), 0);
    let loss = field(&stdout(&o), "loss");
    assert!((loss - 2.89).abs() < 0.5, "loss {loss}");
}

#[test]
fn tau_conversions() {
    let o = run(&["tau", "clayton", "--alpha", "6"]);
    assert_eq!(code(&o), 0);
    assert!((field(&stdout(&o), "tau") - 0.75).abs() < 1e-6);

    let o = run(&["tau", "gumbel", "--tau", "0.816"]);
    assert_eq!(code(&o), 0);
    assert!((field(&stdout(&o), "alpha") - 1.0 / 0.184).abs() < 1e-5);

    let o = run(&["tau", "frank", "--alpha", "-3"]);
    assert_eq!(code(&o), 0);
    assert!(field(&stdout(&o), "tau") < 0.0);

    assert_eq!(code(&run(&["tau", "fgm", "--tau", "0.5"])), 1);
    assert_eq!(code(&run(&["tau", "clayton", "--tau", "-0.2"])), 1);
    assert_eq!(code(&run(&["tau", "nosuch", "--tau", "0.2"])), 1);
}

#[test]
fn optimize_then_check_round_trip() {
    let dir = TempDir::new().unwrap();
    let config = write(
        &dir,
        "c.json",
        r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"clayton","alpha":2.0},"optimizer":{"grid_size":501}}"#,
    );
    let design = dir.path().join("d.json");
    let trace = dir.path().join("t.csv");
    let profile = dir.path().join("p.csv");
    let o = run(&[
        "optimize",
        "--config",
        s(&config),
        "--out",
        s(&design),
        "--trace",
        s(&trace),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = run(&[
        "check",
        "--design",
        s(&design),
        "--config",
        s(&config),
        "--profile",
        s(&profile),
    ]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let rows = fs::read_to_string(&profile).unwrap();
    assert!(rows.starts_with("x,sensitivity\n"));
    assert!(rows.lines().count() > 2001);
    assert!(fs::read_to_string(&trace).unwrap().lines().count() > 1);

    let sp = dir.path().join("sp.csv");
    let o = run(&[
        "sensitivity-profile",
        "--design",
        s(&design),
        "--config",
        s(&config),
        "--out",
        s(&sp),
        "--grid",
        "101",
    ]);
    assert_eq!(code(&o), 0);
    assert!(fs::read_to_string(&sp).unwrap().lines().count() > 101);
}

#[test]
fn outputs_are_deterministic() {
    let dir = TempDir::new().unwrap();
    let config = write(
        &dir,
        "b.json",
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"gumbel","tau":0.5}}"#,
    );
    let mut files = Vec::new();
    for i in 0..2 {
        let d = dir.path().join(format!("d{i}.json"));
        let t = dir.path().join(format!("t{i}.csv"));
        assert_eq!(
            code(&run(&[
                "optimize",
                "--config",
                s(&config),
                "--out",
                s(&d),
                "--trace",
                s(&t)
            ])),
            0
        );
        files.push((fs::read(&d).unwrap(), fs::read(&t).unwrap()));
    }
    assert_eq!(files[0], files[1]);

    let a = dir.path().join("ra");
    let b = dir.path().join("rb");
    for d in [&a, &b] {
        fs::create_dir(d).unwrap();
        assert_eq!(code(&run(&["repro", "table3", "--out", s(d)])), 0);
    }
    let name = "table3_comparison.csv";
    assert_eq!(fs::read(a.join(name)).unwrap(), fs::read(b.join(name)).unwrap());
}

#[test]
fn config_defaults_and_validation() {
    use copula_design::optimizer::OptimizerConfig;
    use copula_design_cli::config::{ProblemConfig, DEFAULT_QUAD_GRADING, DEFAULT_QUAD_ORDER};

    let cfg = ProblemConfig::from_json(
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"gumbel","tau":0.816}}"#,
    )
    .unwrap();
    assert_eq!(cfg.estimate_alpha, None);
    let r = cfg.resolve().unwrap();
    assert_eq!(r.optimizer, OptimizerConfig::default());
    assert_eq!(r.problem.n_params(), 5);
    assert_eq!(r.quadrature.order(), DEFAULT_QUAD_ORDER);
    assert_eq!(r.quadrature.grading(), DEFAULT_QUAD_GRADING);
    assert!((cfg.copula_spec().unwrap().alpha().unwrap() - 1.0 / 0.184).abs() < 1e-9);

    let linear = ProblemConfig::from_json(PRODUCT).unwrap().resolve().unwrap();
    assert_eq!(linear.problem.n_params(), 6);

    for bad in [
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"frank","tau":0.5,"alpha":3}}"#,
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"frank"}}"#,
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"product","alpha":1}}"#,
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"frank","tau":0.5},"typo":1}"#,
        r#"{"schema_version":1,"problem":"binary-logistic","copula":{"family":"frank","tau":0.5},"trend1":[0,1]}"#,
        r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"product"},"quadrature":{"order":1}}"#,
        r#"{"schema_version":1,"problem":"continuous-linear","copula":{"family":"product"},"design_space":[1,0]}"#,
    ] {
        let err = ProblemConfig::from_json(bad).and_then(|c| c.resolve());
        assert!(err.is_err(), "accepted {bad}");
    }
}

#[test]
fn csv_numbers_round_trip() {
    use copula_design_cli::output::{csv_string, num};
    for x in [0.0, 1.0 / 3.0, -2.5e-300, 6.000000000000001, f64::MAX] {
        assert_eq!(num(x).parse::<f64>().unwrap().to_bits(), x.to_bits());
    }
    let text = csv_string(&["a", "b"], &[vec!["1".into(), "x,y".into()]]);
    assert_eq!(text, "a,b\n1,\"x,y\"\n");
}
