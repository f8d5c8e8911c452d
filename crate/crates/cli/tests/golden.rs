use std::path::PathBuf;
use std::process::Command;

use dissect_cli::Report;

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn dissect(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_dissect")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn fixture(name: &str) -> String {
    fixtures().join(format!("{name}.json")).display().to_string()
}

#[test]
fn describe_matches_golden_output() {
    let mut seen = 0;
    for entry in std::fs::read_dir(fixtures()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().is_none_or(|e| e != "json") {
            continue;
        }
        let name = path.file_stem().unwrap().to_str().unwrap();
        let golden = std::fs::read_to_string(fixtures().join("golden").join(format!("{name}.json"))).unwrap();
        let (code, out) = dissect(&["describe", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(code, 0, "{name}");
        assert_eq!(out, golden, "{name}");
        seen += 1;
    }
    assert!(seen >= 10);
}

/// The numbers each fixture is documented to produce.
#[test]
fn documented_numbers() {
    let cases: &[(&str, &[i64], i64, &[i64])] = &[
        ("torus-ex", &[4, -1, 1], 6, &[3, 9, 6]),
        ("sphere-2circles", &[1, -2, 1], 4, &[2, 4, 4]),
        ("sphere-3circles", &[4, -3, 1], 8, &[6, 12, 8]),
        ("projective-3planes", &[1, -3], 4, &[3, 6, 4]),
        ("axes", &[1, -2, 1], 4, &[1, 4, 4]),
        ("circle-1", &[0, 1], 1, &[1, 1]),
        ("circle-2", &[-1, 1], 2, &[2, 2]),
        ("circle-5", &[-4, 1], 5, &[5, 5]),
        ("abstract-torus", &[4, -1, 1], 6, &[3, 9, 6]),
    ];
    for (name, poly, chambers, f) in cases {
        let (_, out) = dissect(&["describe", &fixture(name), "--format", "json"]);
        let r = Report::from_json(&out).unwrap();
        assert_eq!(r.char_poly.unwrap(), poly.iter().map(|&x| x.into()).collect::<Vec<_>>(), "{name}");
        assert_eq!(r.chambers.unwrap(), (*chambers).into(), "{name}");
        assert_eq!(r.f_vector.unwrap(), f.iter().map(|&x| x.into()).collect::<Vec<_>>(), "{name}");
    }
}

#[test]
fn plain_text_answers() {
    assert_eq!(dissect(&["chambers", &fixture("torus-ex")]), (0, "6\n".into()));
    assert_eq!(dissect(&["faces", &fixture("sphere-2circles")]), (0, "2 4 4\n".into()));
    assert_eq!(dissect(&["charpoly", &fixture("torus-ex")]), (0, "t^2 - t + 4\n".into()));
    assert_eq!(dissect(&["fiber", &fixture("torus-ex"), "--chain", "X,t0"]), (0, "X,t0: 6\n".into()));
    assert_eq!(dissect(&["closedform", "--family", "projective", "--n", "3", "--dim", "2"]).1.lines().last(), Some("3 6 4"));
}
