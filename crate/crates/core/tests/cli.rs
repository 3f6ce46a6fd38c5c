use gallai_ramsey::bounds::BoundReport;
use gallai_ramsey::coloring::{read_coloring, CertificateDocument};
use gallai_ramsey::cli::run;
use gallai_ramsey::euclid::read_points;

fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("gallai").chain(args.iter().copied()), &mut input, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn construct_pipes_into_verify() {
    let (_, block, _) = call(&["construct", "--kind", "block", "--t", "2", "--r", "2"], "");
    assert_eq!(call(&["verify", "--rainbow", "2,2", "--mono", "2,2"], &block), (0, "none\n".into(), String::new()));
    let (_, random, _) = call(&["construct", "--kind", "random", "--n1", "7", "--n2", "37", "--r", "1", "--seed", "5"], "");
    let (code, out, _) = call(&["verify", "--rainbow", "2,2", "--mono", "2,2"], &random);
    assert_eq!((code, out.as_str()), (0, "mono rows=1,2 cols=1,2\n"));
}

#[test]
fn json_outputs_round_trip() {
    let (_, random, _) = call(&["construct", "--kind", "random", "--n1", "4", "--n2", "4", "--r", "4", "--seed", "3"], "");
    let (code, json, _) = call(&["verify", "--rainbow", "2,2", "--mono", "2,2", "--format", "json"], &random);
    assert_eq!(code, 0);
    let doc = CertificateDocument::from_json(&json).unwrap();
    assert_eq!(doc.source_hash, read_coloring(&random).unwrap().source_hash());

    let (code, json, _) = call(&["bounds", "main-n", "--s", "2", "--t", "2", "--r", "1", "--format", "json"], "");
    assert_eq!(code, 0);
    let report = BoundReport::from_json(&json).unwrap();
    assert_eq!(report.to_text(), "n=768");
}

#[test]
fn randomized_construct_is_reproducible() {
    let args = ["construct", "--kind", "random", "--n1", "5", "--n2", "6", "--r", "3", "--seed", "99"];
    assert_eq!(call(&args, ""), call(&args, ""));
}

#[test]
fn search_and_zarankiewicz() {
    let (code, out, _) = call(&["search", "min-n2", "--n1", "1", "--r", "3", "--rainbow", "1,3", "--mono", "1,3", "--n2-max", "12"], "");
    assert_eq!((code, out.as_str()), (0, "n2=5\n"));
    let (code, out, _) = call(&["zarankiewicz", "--m", "4", "--n", "4", "--s", "2", "--t", "2"], "");
    assert_eq!((code, out.as_str()), (0, "exact=9 bound=10 strict=true\n"));
}

#[test]
fn embed_and_translation() {
    let (code, out, _) = call(&["embed", "--a", "1", "--b", "1"], "1 2 2\n1 2\n");
    assert_eq!(code, 0);
    let (config, colors) = read_points(&out, true).unwrap();
    assert_eq!((config.len(), colors.unwrap()), (2, vec![1, 2]));
    let (code, out, _) = call(&["check-translation", "--rainbow", "2,2", "--mono", "2,2"], "2 2 4\n1 2\n3 4\n");
    assert_eq!(code, 0);
    assert!(out.starts_with("branch=rainbow\n"));
    let (code, out, _) = call(&["check-translation", "--rainbow", "2,2", "--mono", "2,2", "--tol", "1e-6"], "2 2 2\n1 1\n2 2\n");
    assert_eq!((code, out.as_str()), (0, "branch=none\n"));
}

#[test]
fn sat_export_and_decode() {
    let (code, cnf, _) = call(&["export-sat", "--n1", "1", "--n2", "2", "--r", "2", "--rainbow", "1,2", "--mono", "1,2"], "");
    assert_eq!(code, 0);
    assert!(cnf.lines().any(|l| l.starts_with("p cnf ")));
    let (code, out, _) = call(&["decode-sat", "--n1", "1", "--n2", "2", "--r", "2"], "s SATISFIABLE\nv 1 -2 -3 4 0\n");
    assert_eq!((code, out.as_str()), (0, "1 2 2\n1 2\n"));
}

#[test]
fn errors_map_to_exit_codes() {
    assert_eq!(call(&["verify", "--rainbow", "2,2", "--mono", "2,2"], "1 1 1\n3\n").0, 2);
    assert_eq!(call(&["verify", "--rainbow", "x", "--mono", "2,2"], "1 1 1\n1\n").0, 2);
    assert_eq!(call(&["bounds", "nope"], "").0, 2);
    assert_eq!(call(&["bounds", "k2t", "--t", "2"], "").0, 2);
    let (code, _, err) = call(&["zarankiewicz", "--m", "5", "--n", "5", "--s", "2", "--t", "2", "--budget", "2"], "");
    assert_eq!(code, 1);
    assert!(err.contains("budget"));
}
