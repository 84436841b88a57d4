#![no_main]

use libfuzzer_sys::fuzz_target;
use threeterm_cli::doc::{parse_config, FieldMatrix};
use threeterm_cli::render::render;
use threeterm_cli::report::Report;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(doc) = parse_config(text) else { return };
    if let Ok(cfg) = doc.to_concyclic() {
        let report = Report::build(doc.kind(), &cfg, 1e-10);
        let _ = report.to_table();
        let _ = render(&cfg);
    }
    if let Ok(m) = doc.to_matrix() {
        match m {
            FieldMatrix::Real(m) => {
                let _ = m.minors().tuple().relative_residual();
            }
            FieldMatrix::Complex(m) => {
                let _ = m.minors().tuple().relative_residual();
            }
        }
        let again =
            parse_config(&m.to_document().to_json().to_string()).expect("emitted matrix parses");
        assert!(again.to_matrix().is_ok());
    }
});
