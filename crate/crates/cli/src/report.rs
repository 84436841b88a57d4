//! Machine-readable and tabular output of the `measure` command.

use std::fmt::Write;

use serde::{Deserialize, Serialize};
use threeterm::{ConcyclicConfig, SixTuple, PAIRS};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Families<T> {
    pub d: T,
    pub t: T,
    pub lambda: T,
    pub p: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Identities<T> {
    pub chord_bitangent: T,
    pub bitangent_lambda: T,
    pub chord_plucker: T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pass {
    pub relations: Families<bool>,
    pub identities: Identities<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub source: String,
    pub tolerance: f64,
    pub alpha: [f64; 4],
    pub radii: [f64; 4],
    /// Entries in the order 12, 13, 14, 23, 24, 34.
    pub measurements: Families<[f64; 6]>,
    /// `|a12·a34 + a14·a23 − a13·a24|` over the largest monomial.
    pub residuals: Families<f64>,
    /// Largest entrywise relative deviation of each rescaling identity.
    pub identities: Identities<f64>,
    pub pass: Pass,
    pub all_pass: bool,
}

impl Report {
    pub fn build(source: &str, cfg: &ConcyclicConfig, tol: f64) -> Self {
        let table = cfg.measure_all();
        let [rd, rt, rl, rp] = table.relative_residuals();
        let dev = table.identity_deviations(cfg);
        let ok = |x: f64| x <= tol;
        let pass = Pass {
            relations: Families {
                d: ok(rd),
                t: ok(rt),
                lambda: ok(rl),
                p: ok(rp),
            },
            identities: Identities {
                chord_bitangent: ok(dev.chord_bitangent),
                bitangent_lambda: ok(dev.bitangent_lambda),
                chord_plucker: ok(dev.chord_plucker),
            },
        };
        let all_pass = [
            rd,
            rt,
            rl,
            rp,
            dev.chord_bitangent,
            dev.bitangent_lambda,
            dev.chord_plucker,
        ]
        .into_iter()
        .all(ok);
        Self {
            source: source.to_string(),
            tolerance: tol,
            alpha: cfg.alpha(),
            radii: cfg.radii(),
            measurements: Families {
                d: table.d.to_array(),
                t: table.t.to_array(),
                lambda: table.lambda.to_array(),
                p: table.p.to_array(),
            },
            residuals: Families {
                d: rd,
                t: rt,
                lambda: rl,
                p: rp,
            },
            identities: Identities {
                chord_bitangent: dev.chord_bitangent,
                bitangent_lambda: dev.bitangent_lambda,
                chord_plucker: dev.chord_plucker,
            },
            pass,
            all_pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let m = &self.measurements;
        let verdict = |b: bool| if b { "ok" } else { "FAIL" };
        writeln!(
            s,
            "source: {}   tolerance: {:e}",
            self.source, self.tolerance
        )
        .unwrap();
        writeln!(
            s,
            "{:<5} {:>20} {:>20} {:>20} {:>20}",
            "pair", "d (chord)", "t (bitangent)", "lambda", "P (minor)"
        )
        .unwrap();
        for (k, (i, j)) in PAIRS.iter().enumerate() {
            writeln!(
                s,
                "{:<5} {:>20.15} {:>20.15} {:>20.15} {:>20.15}",
                format!("{i}{j}"),
                m.d[k],
                m.t[k],
                m.lambda[k],
                m.p[k]
            )
            .unwrap();
        }
        writeln!(s).unwrap();
        writeln!(s, "3-term relation residuals (relative)").unwrap();
        let r = &self.residuals;
        let p = &self.pass.relations;
        for (name, v, ok) in [
            ("d", r.d, p.d),
            ("t", r.t, p.t),
            ("lambda", r.lambda, p.lambda),
            ("P", r.p, p.p),
        ] {
            writeln!(s, "  {name:<30} {v:>12.3e}  {}", verdict(ok)).unwrap();
        }
        writeln!(s, "rescaling identities (max relative deviation)").unwrap();
        let id = &self.identities;
        let ip = &self.pass.identities;
        for (name, v, ok) in [
            (
                "t = sqrt(1-ri)sqrt(1-rj) d",
                id.chord_bitangent,
                ip.chord_bitangent,
            ),
            (
                "t = lambda sqrt(2ri)sqrt(2rj)",
                id.bitangent_lambda,
                ip.bitangent_lambda,
            ),
            ("d = 2P", id.chord_plucker, ip.chord_plucker),
        ] {
            writeln!(s, "  {name:<30} {v:>12.3e}  {}", verdict(ok)).unwrap();
        }
        writeln!(
            s,
            "overall: {}",
            if self.all_pass { "PASS" } else { "FAIL" }
        )
        .unwrap();
        s
    }
}

/// Table of `q_i·q_j` against `c_ij = b_ij / a_ij`.
pub fn tuple_rows<S: threeterm::Scalar>(
    products: &SixTuple<S>,
    ratios: &SixTuple<S>,
) -> Vec<(String, S, S, f64)> {
    PAIRS
        .iter()
        .zip(products.to_array().into_iter().zip(ratios.to_array()))
        .map(|(&(i, j), (p, c))| (format!("{i}{j}"), p, c, (p - c).modulus() / c.modulus()))
        .collect()
}
