use serde_json::Value;
use sigcrit::cli::run;
use sigcrit::constructions::{gallery, GalleryId};
use sigcrit::sgraph::parse_sg;

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn sigcrit(args: &[&str]) -> Run {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("sigcrit").chain(args.iter().copied()), &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn schema(name: &str) -> jsonschema::JSONSchema {
    let path = format!("{}/schemas/{name}.schema.json", env!("CARGO_MANIFEST_DIR"));
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::compile(&raw).unwrap()
}

fn json_checked(name: &str, args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let r = sigcrit(&full);
    let v: Value = serde_json::from_str(&r.out).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", r.out));
    assert!(schema(name).is_valid(&v), "{args:?} does not match {name}: {v}");
    (r.code, v)
}

fn temp_file(name: &str, body: &str) -> String {
    let path = std::env::temp_dir().join(format!("sigcrit-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, body).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn spec_examples() {
    let r = sigcrit(&["critical", "what"]);
    assert_eq!(r.code, 0);
    assert!(r.out.starts_with("critical\n"));
    let r = sigcrit(&["hom", "gamma"]);
    assert_eq!(r.code, 1);
    assert!(r.out.contains("exhaustive search"));
    let r = sigcrit(&["girth", "c-4"]);
    assert_eq!((r.code, r.out.as_str()), (0, "g00=2 g01=inf g10=4 g11=inf\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(sigcrit(&["frobnicate"]).code, 2);
    assert_eq!(sigcrit(&[]).code, 2);
    assert_eq!(sigcrit(&["--help"]).code, 0);
    assert_eq!(sigcrit(&["--version"]).code, 0);
    assert_eq!(sigcrit(&["critical", "/no/such/file"]).code, 2);
    assert_eq!(sigcrit(&["critical", "c+4"]).code, 1);
    assert_eq!(sigcrit(&["sp-hom", "dualpath"]).code, 1);
    assert_eq!(sigcrit(&["sp-hom", "c-6"]).code, 0);
    assert_eq!(sigcrit(&["color4", "what"]).code, 0);
    assert_eq!(sigcrit(&["construct", "cminus:5"]).code, 2);
    assert_eq!(sigcrit(&["census", "--n", "9"]).code, 2);
    // truncated searches never report success
    let r = sigcrit(&["hom", "gamma", "--target", "c-6", "--budget", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.err.contains("budget"));
    let bad = temp_file("bad.sg", "3 2\n0 1 +\n0 1 -\n");
    assert_eq!(sigcrit(&["girth", &bad]).code, 2);
}

#[test]
fn json_outputs_match_schemas() {
    assert_eq!(json_checked("hom", &["hom", "what"]).0, 1);
    let (code, v) = json_checked("hom", &["hom", "c+4"]);
    assert_eq!((code, v["verdict"].as_str()), (0, Some("mapped")));
    assert_eq!(json_checked("hom", &["hom", "c-4", "--target", "c-6"]).0, 1);
    assert_eq!(json_checked("hom", &["sp-hom", "dualpath"]).1["witness"]["path"][1], serde_json::json!([1, 2]));
    assert_eq!(json_checked("hom", &["hom", "theta1"]).0, 0);
    let (code, v) = json_checked("critical", &["critical", "what"]);
    assert_eq!((code, v["potential"].as_i64()), (0, Some(1)));
    json_checked("critical", &["critical", "c+4"]);
    json_checked("critical", &["critical", "theta2"]);
    json_checked("critical", &["critical", "dualpath"]);
    let (_, v) = json_checked("girth", &["girth", "gamma"]);
    assert_eq!(v["g01"], "inf");
    let (_, v) = json_checked("graph", &["construct", "build:13"]);
    assert_eq!((v["vertices"].as_u64(), v["edges"].as_u64()), (Some(13), Some(18)));
    assert_eq!(json_checked("graph", &["construct", "tilde", "c+4"]).1["format"], "sgm");
    json_checked("graph", &["construct", "tl:2", "what"]);
    json_checked("graph", &["construct", "splice", "what", "1", "what", "1"]);
    json_checked("graph", &["construct", "hajos", "gamma", "0", "2", "what", "1", "4"]);
    json_checked("coloring", &["color4", "gamma"]);
    json_checked("coloring", &["x2k", "--k", "2", "what"]);
    let (_, v) = json_checked("mad", &["mad", "what"]);
    assert_eq!(v["mad"], "18/7");
    let (code, _) = json_checked("switch-iso", &["switch-iso", "what", "gamma"]);
    assert_eq!(code, 1);
    let (code, v) = json_checked("switch-iso", &["switch-iso", "c-4", "c-4"]);
    assert_eq!((code, v["bijection"].as_array().map(Vec::len)), (0, Some(4)));
    let (code, v) = json_checked("census", &["census", "--n", "7"]);
    assert_eq!(code, 0);
    assert_eq!(v["exceptions"][0]["is_w_hat"], true);
}

#[test]
fn constructions_compose_through_files() {
    let r = sigcrit(&["construct", "tilde", "c+4"]);
    let doubled = temp_file("c4.sgm", &r.out);
    let t2 = sigcrit(&["construct", "tl:2", &doubled]);
    assert_eq!(t2.code, 0);
    let t2 = temp_file("t2.sg", &t2.out);
    assert_eq!(sigcrit(&["hom", &t2]).code, 0);
    let hajos = sigcrit(&["construct", "hajos", "gamma", "0", "2", "gamma", "0", "2"]);
    let file = temp_file("hajos.sg", &hajos.out);
    assert_eq!(sigcrit(&["critical", &file]).code, 0);
    assert_eq!(parse_sg(&hajos.out).unwrap().edge_count(), 14);
    let census_out = temp_file("census.json", "");
    assert_eq!(sigcrit(&["census", "--n", "6", "--out", &census_out, "--jobs", "2"]).code, 0);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&census_out).unwrap()).unwrap();
    assert!(schema("census").is_valid(&report));
    assert_eq!(report["critical_found"].as_array().unwrap().len(), 1);
}

#[test]
fn gallery_text_round_trips() {
    let ids = GalleryId::FIXED
        .into_iter()
        .chain([GalleryId::CMinus(8), GalleryId::CPlus(6), GalleryId::G2k1(3), GalleryId::GPrime2k1(3)]);
    for id in ids {
        let r = sigcrit(&["construct", &id.to_string()]);
        assert_eq!(r.code, 0, "{id}");
        let g = parse_sg(&r.out).unwrap();
        assert_eq!(g, gallery(id).unwrap());
        assert_eq!(g.to_sg(), r.out, "{id}");
    }
}
