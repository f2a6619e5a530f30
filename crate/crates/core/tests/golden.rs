use segal_core::doublecat::build_w;
use segal_core::io::{double_to_string, parse_document, Document, Mode};

const W2: &str = include_str!("golden/w2.json");

/// Set `SEGAL_BLESS=1` to rewrite the golden file.
#[test]
fn w2_serialization_matches_golden_file() {
    let (w, a) = build_w(2);
    let text = double_to_string(&w, Some(&a));
    if std::env::var_os("SEGAL_BLESS").is_some() {
        std::fs::write(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden/w2.json"), &text).unwrap();
        return;
    }
    assert_eq!(text, W2);
}

#[test]
fn golden_file_parses_back_to_w2() {
    let (w, a) = build_w(2);
    let Document::Double(d, b) = parse_document(W2, None, Mode::Strict, None).unwrap().document else {
        panic!("not a double category")
    };
    assert_eq!(d, w);
    assert_eq!(b, Some(a));
}
