#![no_main]

use libfuzzer_sys::fuzz_target;
use threeterm::grassmann::reconstruct;
use threeterm::relations::rescaling_solve;
use threeterm::PluckerVector;
use threeterm_cli::doc::{parse_six_tuple, FieldTuple};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(t) = parse_six_tuple(text) else { return };
    match t {
        FieldTuple::Real(t) => {
            let _ = reconstruct(&PluckerVector(t), 1e-10);
            let _ = rescaling_solve(&t, &t, 1e-10);
        }
        FieldTuple::Complex(t) => {
            let _ = reconstruct(&PluckerVector(t), 1e-10);
            let _ = rescaling_solve(&t, &t, 1e-10);
        }
    }
});
