//! Helpers shared by the integration tests. The brute-force routines here
//! use only the raw operation tables so they can serve as oracles.

#![allow(dead_code)]

use std::path::PathBuf;

use nearalg::andre::MultiNearRing;
use nearalg::MModule;

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture(spec: &str) -> String {
    fixtures_dir().join(spec).to_str().expect("utf-8 path").to_string()
}

/// Subgroup spanned by `gens`, by breadth-first search on sums with the
/// generators and their negatives.
pub fn span(v: &MModule, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; v.order()];
    seen[v.zero()] = true;
    let mut stack = vec![v.zero()];
    while let Some(x) = stack.pop() {
        for &g in gens {
            for y in [v.add(x, g), v.sub(x, g)] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen
}

pub fn orbit(v: &MModule, xs: &[usize]) -> Vec<usize> {
    let mut out: Vec<usize> = xs
        .iter()
        .flat_map(|&x| (0..v.monoid().order()).map(move |a| v.act(a, x)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn members(mask: &[bool]) -> Vec<usize> {
    (0..mask.len()).filter(|&i| mask[i]).collect()
}

/// Brute-force Andre test: tries every subset `Q` of the module.
pub fn brute_force_andre(v: &MModule, r: &MultiNearRing) -> bool {
    let n = v.order();
    assert!(n <= 12, "powerset search is for tiny modules");
    let m = v.monoid().order();
    let distributive = |x: usize| {
        r.designated().iter().any(|nr| {
            (0..m).all(|a| (0..m).all(|b| v.act(nr.add(a, b), x) == v.add(v.act(a, x), v.act(b, x))))
        })
    };
    let cyclic: Vec<Vec<bool>> = (0..n).map(|x| span(v, &orbit(v, &[x]))).collect();
    (0u32..1 << n).any(|mask| {
        let q: Vec<bool> = (0..n).map(|x| (mask >> x) & 1 == 1).collect();
        if (0..n).any(|x| q[x] && x != v.zero() && !distributive(x)) {
            return false;
        }
        (0..n).all(|x| {
            let meet: Vec<usize> = members(&cyclic[x]).into_iter().filter(|&y| q[y]).collect();
            span(v, &orbit(v, &meet))[x]
        })
    })
}

/// Runs the CLI in-process and parses its JSON report.
pub fn cli(args: &[&str]) -> (i32, serde_json::Value) {
    let mut argv = vec!["nearalg"];
    argv.extend_from_slice(args);
    let out = nearalg::cli::run(argv);
    let json = serde_json::from_str(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.code, json)
}
