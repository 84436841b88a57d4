#![no_main]

use libfuzzer_sys::fuzz_target;
use threeterm::relations::cross_ratio_points;
use threeterm_cli::doc::parse_points;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((points, _)) = parse_points(text) {
        let _ = cross_ratio_points(&points);
    }
});
