mod common;

use std::fs;

use common::{dir, input_files, path, updating, CASES};
use subclone_cli::run;

fn check_file(name: &str, contents: &str) {
    let file = dir().join(name);
    if updating() {
        fs::create_dir_all(file.parent().unwrap()).unwrap();
        fs::write(&file, contents).unwrap();
        return;
    }
    let on_disk = fs::read_to_string(&file).unwrap_or_else(|e| panic!("{}: {e}", file.display()));
    assert!(on_disk == contents, "{} differs from the generated contents", file.display());
}

fn cli(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args.iter().copied(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn input_fixtures_match_writers() {
    for (name, contents) in input_files() {
        check_file(name, &contents);
    }
}

#[test]
fn classification_reports_match_golden() {
    if updating() {
        input_fixtures_match_writers();
    }
    for case in CASES {
        let (theta, rho) = (path(case.theta), path(case.rho));
        let mut args = vec!["subclone", "classify", "--theta", &theta, "--rho", &rho, "--json"];
        if let Some(kind) = case.kind {
            args.extend(["--kind", kind]);
        }
        let (code, json, err) = cli(&args);
        assert_eq!(code, case.exit, "{}: exit {code}, stderr {err}", case.report);
        check_file(&format!("reports/{}.json", case.report), &json);

        args.retain(|a| *a != "--json");
        let (code, text, _) = cli(&args);
        assert_eq!(code, case.exit);
        assert_eq!(text.lines().next(), Some(case.headline), "{}", case.report);
    }
}
