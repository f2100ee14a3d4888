use std::fs;

use srgdb::cli::{run, EXIT_DATA, EXIT_IO, EXIT_NONEXISTENT, EXIT_OK, EXIT_UNKNOWN, EXIT_USAGE};
use srgdb::graph::{encode_graph6, is_strongly_regular, parse_edge_list};
use srgdb::{Graph, SrgParams};

fn srg(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("srg").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write_graph6(dir: &tempfile::TempDir, name: &str, g: &Graph) -> String {
    let path = dir.path().join(name);
    fs::write(&path, encode_graph6(g)).unwrap();
    path.to_str().unwrap().to_owned()
}

/// Kneser graph on the 2-subsets of a 5-set.
fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    Graph::from_fn(10, |i, j| {
        let ((a, b), (c, d)) = (pairs[i], pairs[j]);
        a != c && a != d && b != c && b != d
    })
}

#[test]
fn verify_petersen_and_path() {
    let dir = tempfile::tempdir().unwrap();
    let pet = write_graph6(&dir, "petersen.g6", &petersen());
    assert_eq!(srg(&["verify", "--in", &pet]), (EXIT_OK, "SRG(10,3,0,1)\n".into(), String::new()));

    let path = write_graph6(&dir, "p4.g6", &Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap());
    let (code, out, _) = srg(&["verify", "--in", &path]);
    assert_eq!((code, out.as_str()), (EXIT_NONEXISTENT, "not strongly regular\n"));
}

#[test]
fn verify_reports_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.g6");
    fs::write(&bad, "\x01\x02 not graph6").unwrap();
    assert_eq!(srg(&["verify", "--in", bad.to_str().unwrap()]).0, EXIT_DATA);

    let missing = dir.path().join("missing.g6");
    assert_eq!(srg(&["verify", "--in", missing.to_str().unwrap()]).0, EXIT_IO);
}

#[test]
fn build_edges_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.txt");
    let (code, stdout, stderr) = srg(&["build", "16", "6", "2", "--format", "edges", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{stderr}");
    assert!(stdout.is_empty());
    assert!(stderr.ends_with(": Graph on 16 vertices\n"), "{stderr}");
    let g = parse_edge_list(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(is_strongly_regular(&g), Some(SrgParams { n: 16, k: 6, lambda: 2, mu: 2 }));
}

#[test]
fn build_json_carries_provenance() {
    let (code, out, _) = srg(&["build", "10", "3", "0", "1", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["edges"].as_array().unwrap().len(), 15);
    assert!(doc["provenance"].as_str().unwrap().ends_with("Graph on 10 vertices"));
}

#[test]
fn build_exit_codes() {
    assert_eq!(srg(&["build", "57", "14", "1"]).0, EXIT_NONEXISTENT);
    assert_eq!(srg(&["build", "3250", "57", "0", "1"]).0, EXIT_UNKNOWN);
    assert_eq!(srg(&["build", "3", "1", "0"]).0, EXIT_USAGE);
    assert_eq!(srg(&["frobnicate"]).0, EXIT_USAGE);
}

#[test]
fn scan_is_deterministic_and_summarised() {
    let (c1, a, err) = srg(&["scan", "--max-n", "120"]);
    let (c2, b, _) = srg(&["scan", "--max-n", "120"]);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(a, b);

    let mut counts = [0usize; 3];
    let mut reader = csv::Reader::from_reader(a.as_bytes());
    for rec in reader.records() {
        let rec = rec.unwrap();
        let slot = ["exists", "nonexistent", "unknown"].iter().position(|s| *s == &rec[4]).unwrap();
        counts[slot] += 1;
    }
    let total: usize = counts.iter().sum();
    let want = format!(
        "exists: {}, nonexistent: {}, unknown: {}, total: {total}\n",
        counts[0], counts[1], counts[2]
    );
    assert_eq!(err, want);
    assert_eq!(srg(&["scan", "--max-n", "5000"]).0, EXIT_USAGE);
}

#[test]
fn list_names_every_entry() {
    let (code, out, _) = srg(&["list"]);
    assert_eq!(code, EXIT_OK);
    let ids: Vec<&str> = out.lines().map(|l| l.split('\t').next().unwrap()).collect();
    for id in ["paley", "as-dual", "rshcd", "two-weight", "complement"] {
        assert!(ids.contains(&id), "{id} missing from {ids:?}");
    }
}

#[test]
fn empty_data_dir_still_works() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    assert_eq!(srg(&["--data-dir", d, "exists", "64", "18", "2", "6"]).1, "True\n");
}
