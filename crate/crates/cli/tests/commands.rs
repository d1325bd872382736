use std::path::PathBuf;
use std::process::Command as Process;

use recoll_cli::{run, Command, Format, Instance, Options, Report};

fn catalog(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../catalog").join(name)
}

fn report(command: Command, file: &str, opts: &Options) -> Report {
    let inst = Instance::from_path(&catalog(file), None).unwrap();
    run(command, &inst, opts).unwrap()
}

fn bin() -> Process {
    Process::new(env!("CARGO_BIN_EXE_recoll"))
}

#[test]
fn recollement_verify_on_auslander_a2() {
    let r = report(Command::RecollementVerify, "a2.alg", &Options::default());
    assert!(r.pass, "{}", r.render_text());
    let t = r.get_table("adjunction q -| q_rho").unwrap();
    let left = t.column("dim Hom(Lx, y)").unwrap();
    assert_eq!(left, t.column("dim Hom(x, Ry)").unwrap());
    assert_eq!(r.get_check("simple count").unwrap().detail, "3 = 1 + 2");
}

#[test]
fn recollement_verify_on_dual_numbers() {
    let r = report(Command::RecollementVerify, "dual_numbers.alg", &Options::default());
    assert!(r.pass);
    assert_eq!(r.get_check("simple count").unwrap().detail, "2 = 1 + 1");
}

#[test]
fn recollement_of_a_vertex_idempotent() {
    let field = report(Command::RecollementVerify, "field.alg", &Options::default());
    assert!(field.pass);
    // Γ = Λ when no subcategory is given, e from vertex names
    let text = "field rationals\nquiver\n  vertices 1 2\n  arrow a 1 2\ntask\n  idempotent 2\n";
    let inst = Instance::parse("a2-vertex", text, None).unwrap();
    let r = run(Command::RecollementVerify, &inst, &Options::default()).unwrap();
    assert!(r.pass, "{}", r.render_text());
    assert_eq!(r.get_check("simple count").unwrap().detail, "2 = 1 + 1");
    let opts = Options { idempotent: Some(vec!["1".into()]), ..Options::default() };
    assert!(run(Command::RecollementVerify, &inst, &opts).unwrap().pass);
}

#[test]
fn ar_duality_table_n2() {
    let r = report(Command::ArDualityTable, "a3_rad2.alg", &Options { n: Some(2), ..Options::default() });
    assert!(r.pass);
    let t = r.get_table("duality n = 2").unwrap();
    assert_eq!(t.rows.len(), 16);
    for row in &t.rows {
        assert!(row[2] == row[3] && row[3] == row[4]);
    }
    let s1s3 = t.rows.iter().find(|row| row[0] == "S1" && row[1] == "S3").unwrap();
    assert_eq!(&s1s3[2..5], ["1", "1", "1"]);
}

#[test]
fn ab_compare_witnesses() {
    let r = report(Command::AbCompare, "dual_numbers.alg", &Options::default());
    assert!(r.pass);
    let modules = r.get_table("comparison").unwrap().column("module").unwrap().len();
    assert_eq!(modules, 5);
    assert_eq!(r.get_table("witnesses").unwrap().rows.len(), 4 * modules);
}

#[test]
fn nct_check_fails_for_the_regular_module() {
    let inst = Instance::from_path(&catalog("a3_rad2.alg"), None).unwrap();
    assert!(run(Command::NctCheck, &inst, &Options::default()).unwrap().pass);
    let text = std::fs::read_to_string(catalog("a3_rad2.alg")).unwrap().replace("subcategory P1 P2 S3 S1", "subcategory P1 P2 P3");
    let inst = Instance::parse("a3-regular", &text, None).unwrap();
    let r = run(Command::NctCheck, &inst, &Options::default()).unwrap();
    assert!(!r.pass);
    assert!(r.get_table("violations").unwrap().column("module").unwrap().contains(&"S1"));
}

#[test]
fn missing_parameters() {
    let inst = Instance::from_path(&catalog("field.alg"), None).unwrap();
    assert!(run(Command::NctCheck, &inst, &Options::default()).is_err());
    assert!(run(Command::AbCompare, &inst, &Options::default()).is_err());
    assert!("frobnicate".parse::<Command>().is_err());
    assert_eq!("nct-check".parse::<Command>().unwrap(), Command::NctCheck);
}

#[test]
fn renderings_agree() {
    for cmd in Command::ALL {
        let inst = Instance::from_path(&catalog("a3_rad2.alg"), None).unwrap();
        let r = run(cmd, &inst, &Options::default()).unwrap();
        let json: serde_json::Value = serde_json::from_str(&r.render(Format::Structured)).unwrap();
        assert_eq!(json["pass"], r.pass);
        let text = r.render(Format::Text);
        assert!(text.contains(if r.pass { "result: PASS" } else { "result: FAIL" }));
        for t in &r.tables {
            assert!(text.contains(&t.title));
            for row in &t.rows {
                for cell in row {
                    assert!(text.contains(cell.as_str()));
                }
            }
        }
        assert_eq!(json["tables"].as_array().unwrap().len(), r.tables.len());
    }
}

#[test]
fn structured_output_is_deterministic() {
    let run_once = || {
        let out = bin().args(["defect", catalog("a3_rad2.alg").to_str().unwrap(), "--format", "structured"]).output().unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run_once(), run_once());
}

#[test]
fn exit_codes() {
    let ok = bin().args(["nct-check", catalog("a3_rad2.alg").to_str().unwrap()]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = dir.join("regular.alg");
    let text = std::fs::read_to_string(catalog("a3_rad2.alg")).unwrap().replace("subcategory P1 P2 S3 S1", "subcategory P1 P2 P3");
    std::fs::write(&bad, text).unwrap();
    let fail = bin().args(["nct-check", bad.to_str().unwrap()]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let broken = dir.join("broken.alg");
    std::fs::write(&broken, "field gf 4\nquiver\n  vertices 1\n").unwrap();
    let err = bin().args(["algebra-check", broken.to_str().unwrap()]).output().unwrap();
    assert_eq!(err.status.code(), Some(2));
    let unknown = bin().args(["frobnicate", catalog("a2.alg").to_str().unwrap()]).output().unwrap();
    assert!(!unknown.status.success());
}

#[test]
fn out_flag_writes_the_report() {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("a2-duality.json");
    let st = bin()
        .args(["ar-duality-table", catalog("a2.alg").to_str().unwrap(), "--format", "structured", "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert!(st.success());
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(json["command"], "ar-duality-table");
    assert_eq!(json["pass"], true);
}

#[test]
fn field_flag_changes_the_field() {
    let out = bin().args(["algebra-check", catalog("a3_rad2.alg").to_str().unwrap(), "--field", "gf 7"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("Prime(7)"));
}
