use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bnq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bnq")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn orbit_csv_rows() {
    for (w, rows) in [("0001", 16), ("000001", 64), ("0000", 1), ("01000", 40)] {
        let o = bnq(&["orbit", "--weight", w]);
        assert_eq!(code(&o), 0);
        let text = stdout(&o);
        assert!(text.starts_with("label,x1,"));
        assert_eq!(text.lines().count(), rows + 1, "{w}");
        assert!(text.lines().skip(1).all(|l| l.starts_with(&format!("{w},"))));
    }
}

#[test]
fn orbit_json_and_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("o.json");
    let o = bnq(&["orbit", "--weight", "1,0,0,0,0", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["size"], 10);
    assert_eq!(v["points"].as_array().unwrap().len(), 10);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["orbit", "--weight", "01x"][..],
        &["orbit", "--weight", "0001", "--format", "svg"],
        &["solids", "--rank", "3"],
        &["patch", "--rank", "5", "--frame", "tbasis"],
        &["patch", "--rank", "4", "--shift", "1,2"],
        &["patch", "--rank", "4", "--window", "square"],
        &["icosa-patch", "--rank", "5"],
    ] {
        let o = bnq(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn budget_exit_three() {
    let o = bnq(&["patch", "--rank", "6", "--radius", "30", "--budget", "1e5"]);
    assert_eq!(code(&o), 3);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("budget") && err.contains("bound"), "{err}");
}

fn off_vertices(path: &Path) -> usize {
    let text = fs::read_to_string(path).unwrap();
    text.lines().nth(1).unwrap().split(' ').next().unwrap().parse().unwrap()
}

#[test]
fn solids_files() {
    let dir = tempfile::tempdir().unwrap();
    for (rank, files) in [
        (4, vec![("rhombic_dodecahedron", 14)]),
        (5, vec![("rhombic_icosahedron", 22), ("pentagonal_antiprism", 10)]),
        (6, vec![("rhombic_triacontahedron", 32), ("dodecahedral_star", 32)]),
    ] {
        let out = dir.path().join(format!("b{rank}"));
        let o = bnq(&["solids", "--rank", &rank.to_string(), "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
        let report: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(out.join("solids.json")).unwrap()).unwrap();
        for (name, v) in files {
            assert_eq!(off_vertices(&out.join(format!("{name}.off"))), v, "{name}");
            let entry = report["solids"]
                .as_array()
                .unwrap()
                .iter()
                .find(|s| s["name"] == name)
                .unwrap();
            assert_eq!(entry["vertex_count"], v);
        }
    }
}

#[test]
fn patch_outputs_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a"), dir.path().join("b"));
    for out in [&a, &b] {
        let o = bnq(&["patch", "--rank", "4", "--radius", "5", "--out", out.to_str().unwrap()]);
        assert_eq!(code(&o), 0);
    }
    for name in ["patch.csv", "patch.json", "patch.svg"] {
        assert_eq!(fs::read(a.join(name)).unwrap(), fs::read(b.join(name)).unwrap(), "{name}");
    }
    let meta: serde_json::Value = serde_json::from_str(&fs::read_to_string(a.join("patch.json")).unwrap()).unwrap();
    let classes = meta["tile_census"]["classes"].as_object().unwrap();
    assert_eq!(classes.keys().collect::<Vec<_>>(), vec!["rhombus_45", "square"]);
    assert_eq!(meta["window"]["mode"], "disc");
}

#[test]
fn decagonal_metadata_lists_ten_directions() {
    let o = bnq(&["patch", "--rank", "5", "--radius", "5", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let meta: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(meta["edge_directions_deg"].as_array().unwrap().len(), 10);
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    fs::write(
        &cfg,
        "command = \"patch\"\nrank = 4\nradius = 3.0\nshift = \"zero\"\nformat = \"csv\"\n",
    )
    .unwrap();
    let from_file = bnq(&["--config", cfg.to_str().unwrap()]);
    assert_eq!(code(&from_file), 0);
    let flags = bnq(&["patch", "--rank", "4", "--radius", "3", "--shift", "zero"]);
    assert_eq!(from_file.stdout, flags.stdout);

    let overridden = bnq(&["--config", cfg.to_str().unwrap(), "--radius", "4"]);
    assert!(stdout(&overridden).lines().count() > stdout(&from_file).lines().count());

    let svg = bnq(&["--config", cfg.to_str().unwrap(), "--format", "svg"]);
    assert!(stdout(&svg).contains("<svg"));

    fs::write(&cfg, "command = \"patch\"\nrnak = 4\n").unwrap();
    assert_eq!(code(&bnq(&["--config", cfg.to_str().unwrap()])), 2);
}

#[test]
fn icosa_patch_files() {
    let dir = tempfile::tempdir().unwrap();
    let o = bnq(&["icosa-patch", "--radius", "2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let meta: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("patch.json")).unwrap()).unwrap();
    assert_eq!(meta["frame"], "h3");
    assert_eq!(off_vertices(&dir.path().join("patch.off")), meta["points"].as_u64().unwrap() as usize);
    assert_eq!(code(&bnq(&["icosa-patch", "--radius", "2", "--format", "svg"])), 2);
}

#[test]
fn check_reports_named_results() {
    let o = bnq(&["check"]);
    assert_eq!(code(&o), 0);
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["passed"], true);
    let names: Vec<&str> = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    for rel in ["R1^2", "R2^2", "R3^2", "(R1R3)^2", "(R1R2)^3", "(R2R3)^5"] {
        assert!(names.contains(&format!("h3_relation_{rel}").as_str()));
    }
    let norm = report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == "norm_dodecahedron_I_rounded")
        .unwrap();
    assert!(norm["delta"].as_f64().unwrap() < 5e-3);
}
