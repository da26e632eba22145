use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn nsg(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nsg")).current_dir(dir).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("nsg-cli-{name}-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

#[test]
fn generated_surface_reports_sharp_bound() {
    let d = scratch("bounds");
    assert!(nsg(&d, &["generate", "fixture", "haken-sum"]).status.success());
    let o = nsg(&d, &["surface", "haken-sum.tri", "--coords", "haken-sum.s2.nsc", "--report", "bounds"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("genus: 3"));
    assert!(text.contains("quads: 2"));
    assert!(text.contains("closed-orientable: 2g <= 3q (6 vs 6) sharp"));
}

#[test]
fn sum_syntax() {
    let d = scratch("sum");
    nsg(&d, &["generate", "fixture", "haken-sum"]);
    let o = nsg(&d, &["sum", "haken-sum.tri", "2*haken-sum.s1.nsc", "+", "1*haken-sum.s2.nsc"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("genus 5") && text.contains("quads 4 triangles 48"), "{text}");
    let joined = nsg(&d, &["sum", "haken-sum.tri", "2*haken-sum.s1.nsc+haken-sum.s2.nsc"]);
    assert_eq!(stdout(&joined), text);
}

#[test]
fn generate_fxi_writes_files() {
    let d = scratch("fxi");
    let o = nsg(&d, &["generate", "fxi", "2"]);
    assert!(o.status.success());
    let tri = std::fs::read_to_string(d.join("fxi-2.tri")).unwrap();
    assert!(tri.starts_with("tri 16\n"));
    let manifest: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("fxi-2.manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest["manifest"]["tetrahedra"], 16);
    assert_eq!(manifest["frame"]["complexity"], 10);
    let h = nsg(&d, &["homology", "fxi-2.tri"]);
    assert!(stdout(&h).contains("b1: 4"));
}

#[test]
fn exit_codes() {
    let d = scratch("codes");
    std::fs::write(d.join("garbage.tri"), "tri 2\n0: 1(012) nonsense\n").unwrap();
    let o = nsg(&d, &["validate", "garbage.tri"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert_eq!(nsg(&d, &["frobnicate"]).status.code(), Some(2));
    assert_eq!(nsg(&d, &["validate", "missing.tri"]).status.code(), Some(2));
    nsg(&d, &["generate", "fxi", "1"]);
    // vistas need a combinatorial manifold
    let o = nsg(&d, &["vista", "fxi-1.tri", "--coords", "fxi-1.splitting.nsc"]);
    assert_eq!(o.status.code(), Some(3));
    std::fs::write(d.join("bad.nsc"), "surface std 6\n0: 1 0 0 0 ; 0 0 0\n1: 0 0 0 0 ; 0 0 0\n2: 0 0 0 0 ; 0 0 0\n3: 0 0 0 0 ; 0 0 0\n4: 0 0 0 0 ; 0 0 0\n5: 0 0 0 0 ; 0 0 0\n").unwrap();
    assert_eq!(nsg(&d, &["surface", "fxi-1.tri", "--coords", "bad.nsc"]).status.code(), Some(3));
}

#[test]
fn vista_on_gale() {
    let d = scratch("vista");
    nsg(&d, &["generate", "gale", "8"]);
    let o = nsg(&d, &["vista", "gale-8.tri", "--coords", "gale-8.gale.nsc", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["vistas"].as_array().unwrap().len(), 8);
    assert_eq!(v["theorem_ok"], true);
    assert!(v["vistas"][0]["lemma_ok"].as_bool().unwrap());
    assert_eq!(v["near_realisation_delta"], 4);
}

#[test]
fn enumerate_index_and_stability() {
    let d = scratch("enum");
    nsg(&d, &["generate", "fixture", "s3-genus3"]);
    let a = nsg(&d, &["enumerate", "s3-genus3.tri", "--dir", "out", "--json"]);
    let b = nsg(&d, &["enumerate", "s3-genus3.tri", "--json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let index: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(d.join("out/index.json")).unwrap()).unwrap();
    let count = index["count"].as_u64().unwrap() as usize;
    assert!(count > 0);
    assert!(d.join(format!("out/surface-{}.nsc", count - 1)).exists());
    // every written file is accepted back
    let o = nsg(&d, &["surface", "s3-genus3.tri", "--coords", "out/surface-0.nsc"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn round_trip_of_written_triangulation() {
    let d = scratch("roundtrip");
    nsg(&d, &["generate", "bg", "3"]);
    let o = nsg(&d, &["validate", "bg-3.tri", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["closed"], true);
    assert_eq!(v["vertex_count"], 3);
}

#[test]
fn verify_paper_single_criterion() {
    let d = scratch("verify");
    let o = nsg(&d, &["verify-paper", "--only", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(" 1 PASS"));
    assert_eq!(nsg(&d, &["verify-paper", "--only", "15"]).status.code(), Some(2));
}
