use std::path::PathBuf;

use hopfbrace::actions::verify_matched_pair;
use hopfbrace::brace::verify_hopf_brace;
use hopfbrace::hopf::verify_hopf;
use hopfbrace::io::{self, Loaded};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

#[test]
fn shipped_presentations_load_verify_and_render_identically() {
    for name in ["c6.json", "s3.json", "h4.json", "c3_c6.json", "c3_c6_brace.json", "h4_c4_brace_f5.json"] {
        let path = data(name);
        let text = std::fs::read_to_string(&path).unwrap();
        let obj = io::load(&path).unwrap();
        assert_eq!(io::to_string(&obj), text, "{name}");
        let passed = match &obj {
            Loaded::Hopf(h) => verify_hopf(h).all_passed(),
            Loaded::Brace(b) => verify_hopf_brace(b).all_passed(),
            Loaded::MatchedPair(mp) => verify_matched_pair(mp).all_passed(),
            other => panic!("unexpected {} in {name}", other.kind()),
        };
        assert!(passed, "{name}");
    }
}
