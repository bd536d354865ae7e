//! End-to-end checks of the binary: exit codes, run-directory layout, file
//! diagnostics, and report reproducibility.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use borsuk_lab::report::RunReport;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_borsuk-lab"))
}

fn run_in(dir: &Path, args: &[&str]) -> Output {
    bin()
        .args(args)
        .arg("--out")
        .arg(dir)
        .output()
        .expect("binary runs")
}

fn tmpdir(tag: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!(
        "borsuk-lab-test-{tag}-{}",
        std::process::id()
    ));
    let _ = fs::remove_dir_all(&d);
    fs::create_dir_all(&d).unwrap();
    d
}

fn only_run_dir(root: &Path) -> PathBuf {
    let mut entries: Vec<PathBuf> = fs::read_dir(root)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    assert_eq!(entries.len(), 1, "expected exactly one run dir in {root:?}");
    entries.pop().unwrap()
}

fn report_of(dir: &Path) -> RunReport {
    let text = fs::read_to_string(dir.join("report.json")).unwrap();
    serde_json::from_str(&text).expect("report parses back")
}

#[test]
fn gen_c1_writes_self_contained_run() {
    let out = tmpdir("gen-c1");
    let res = run_in(&out, &["gen", "c1", "--n", "8", "--format", "json"]);
    assert!(res.status.success());
    let dir = only_run_dir(&out);
    let report = report_of(&dir);
    assert_eq!(report.command, "gen c1");
    assert_eq!(report.results["points"], 35);
    assert_eq!(report.results["dim"], 64);
    let pts = fs::read_to_string(dir.join("c1-8.pts")).unwrap();
    assert!(pts.starts_with("# c1-8\npoints v1 35 64"));
}

#[test]
fn solve_borsuk_pipeline_via_files() {
    let out = tmpdir("solve-borsuk");
    assert!(run_in(&out, &["gen", "pentagon-cycle"]).status.success());
    let gen_dir = only_run_dir(&out);
    let pts = gen_dir.join("pentagon-cycle.pts");
    let out2 = tmpdir("solve-borsuk-2");
    let res = run_in(
        &out2,
        &[
            "solve",
            "borsuk",
            "--input",
            pts.to_str().unwrap(),
            "--format",
            "json",
        ],
    );
    assert!(res.status.success());
    let dir = only_run_dir(&out2);
    let report = report_of(&dir);
    assert_eq!(report.results["value"], 3);
    assert_eq!(report.optimal, Some(true));
    // the input travels with the run
    assert!(dir.join("inputs/pentagon-cycle.pts").exists());
}

#[test]
fn node_limit_exit_code_is_2() {
    let out = tmpdir("limit");
    // a graph file for the Petersen graph
    let gpath = out.join("petersen.graph");
    fs::write(
        &gpath,
        borsuk_lab::io::write_graph(&borsuk_lab::Graph::petersen()),
    )
    .unwrap();
    let res = run_in(
        &out.join("runs"),
        &[
            "solve",
            "alpha",
            "--input",
            gpath.to_str().unwrap(),
            "--node-limit",
            "1",
        ],
    );
    assert_eq!(res.status.code(), Some(2));
}

#[test]
fn malformed_input_exits_1_with_line_diagnostic() {
    let out = tmpdir("badfile");
    let bad = out.join("bad.pts");
    fs::write(&bad, "points v1 2 2\n0 0\n1 one\n").unwrap();
    let res = run_in(
        &out.join("runs"),
        &["geom", "diameter", "--input", bad.to_str().unwrap()],
    );
    assert_eq!(res.status.code(), Some(1));
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains(":3"), "diagnostic must name line 3: {err}");
}

#[test]
fn unknown_flag_exits_1() {
    let res = bin().args(["gen", "c1", "--bogus"]).output().unwrap();
    assert_eq!(res.status.code(), Some(1));
}

#[test]
fn identical_seed_reproduces_identical_payload() {
    let out1 = tmpdir("repro-1");
    let out2 = tmpdir("repro-2");
    for out in [&out1, &out2] {
        let res = run_in(out, &["cocycle", "dckw", "--m", "4", "--seed", "99"]);
        assert!(res.status.success());
    }
    let a = report_of(&only_run_dir(&out1));
    let b = report_of(&only_run_dir(&out2));
    assert_eq!(a.stable_view(), b.stable_view());
    // a different seed gives a different matrix artifact with high
    // probability; check the reports differ to guard against a frozen rng
    let out3 = tmpdir("repro-3");
    let res = run_in(&out3, &["cocycle", "dckw", "--m", "4", "--seed", "100"]);
    assert!(res.status.success());
    let c = report_of(&only_run_dir(&out3));
    assert_ne!(
        fs::read_to_string(only_run_dir(&out1).join("matrix.pm")).unwrap(),
        fs::read_to_string(only_run_dir(&out3).join("matrix.pm")).unwrap()
    );
    let _ = c;
}

#[test]
fn verify_suite_passes_and_reports() {
    let out = tmpdir("verify");
    let res = run_in(
        &out,
        &[
            "verify",
            "coboundary",
            "--trials",
            "50",
            "--format",
            "json",
        ],
    );
    assert!(res.status.success());
    let report = report_of(&only_run_dir(&out));
    assert_eq!(report.results["suites"][0]["passed"], true);
}

#[test]
fn family_commands_round_trip_through_files() {
    let out = tmpdir("family");
    // generate the 2-subsets of [4] with element sum 5
    let res = run_in(
        &out,
        &[
            "family",
            "sum-restricted",
            "--n",
            "4",
            "--size",
            "2",
            "--sum",
            "5",
        ],
    );
    assert!(res.status.success());
    let fam = only_run_dir(&out).join("family.fam");
    assert_eq!(
        fs::read_to_string(&fam).unwrap(),
        "family v1 4 2\n1 4\n2 3\n"
    );
    let out2 = tmpdir("family-2");
    let res = run_in(
        &out2,
        &[
            "family",
            "pair-count",
            "--f",
            fam.to_str().unwrap(),
            "--inter-size",
            "0",
            "--sum-target",
            "0",
            "--format",
            "json",
        ],
    );
    assert!(res.status.success());
    let report = report_of(&only_run_dir(&out2));
    assert_eq!(report.results["pairs"], 2);
}

#[test]
fn env_var_output_root_is_used() {
    let out = tmpdir("envroot");
    let res = bin()
        .args(["gen", "square"])
        .env("BORSUK_LAB_OUT", &out)
        .output()
        .unwrap();
    assert!(res.status.success());
    assert!(only_run_dir(&out).join("square.pts").exists());
}

#[test]
fn ngon_five_is_rejected_with_pointer_to_spatial_preset() {
    let out = tmpdir("ngon5");
    let res = run_in(&out, &["gen", "ngon", "--sides", "5"]);
    assert_eq!(res.status.code(), Some(1));
    let err = String::from_utf8_lossy(&res.stderr);
    assert!(err.contains("pentagon-cycle"), "stderr: {err}");
}
