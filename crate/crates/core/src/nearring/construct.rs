use std::sync::Arc;

use super::{classify, NearRing, NearRingError};
use crate::group::FiniteAbelianGroup;
use crate::monoid::FiniteMonoid;
use crate::ElementIndex;

/// Largest carrier `|A|^|A|` accepted by [`fun_nearring`] by default.
pub const DEFAULT_FUN_BOUND: usize = 256;

/// First pair `(a, c)` with `(ac)^n != a^n c^n`.
fn power_law_witness(r: &NearRing, n: u32) -> Option<(ElementIndex, ElementIndex)> {
    let k = r.order();
    (0..k)
        .flat_map(|a| (0..k).map(move |c| (a, c)))
        .find(|&(a, c)| r.pow(r.mul(a, c), n) != r.mul(r.pow(a, n), r.pow(c, n)))
}

/// The carrier `R×R` with componentwise addition and
/// `(a,b)#(c,d) = (ac, bc + a^n d)`. Pairs are numbered `a·|R| + b`.
///
/// The multiplication tables are built unconditionally and run through full
/// monoid and near-ring validation. The outcome is then compared with a scan
/// of `(ac)^n = a^n c^n`; disagreement is reported as a theorem violation.
pub fn hash_construction(r: &NearRing, n: u32) -> Result<NearRing, NearRingError> {
    if !classify(r).is_ring {
        return Err(NearRingError::NotARing);
    }
    let k = r.order();
    let size = k * k;
    let pair = |a: usize, b: usize| a * k + b;
    let mut mul_rows = vec![vec![0; size]; size];
    let mut add = Vec::with_capacity(size * size);
    for x in 0..size {
        let (a, b) = (x / k, x % k);
        let an = r.pow(a, n);
        for y in 0..size {
            let (c, d) = (y / k, y % k);
            mul_rows[x][y] = pair(r.mul(a, c), r.add(r.mul(b, c), r.mul(an, d)));
            add.push(pair(r.add(a, c), r.add(b, d)));
        }
    }
    let labels = (0..size)
        .map(|x| {
            format!(
                "({},{})",
                r.monoid().label(x / k),
                r.monoid().label(x % k)
            )
        })
        .collect();
    let built = FiniteMonoid::validate(size, labels, mul_rows)
        .map_err(NearRingError::NotMonoid)
        .and_then(|m| {
            let group = FiniteAbelianGroup::trusted(size, add, pair(r.zero(), r.zero()));
            NearRing::from_group(Arc::new(m), group)
        });
    match (built, power_law_witness(r, n)) {
        (Ok(nr), None) => Ok(nr),
        (Err(_), Some((a, c))) => Err(NearRingError::PowerLawFails(a, c)),
        (Ok(_), Some((a, c))) => Err(NearRingError::TheoremViolation(format!(
            "near-ring built although (ac)^{n} != a^{n}c^{n} at a={a}, c={c}"
        ))),
        (Err(e), None) => Err(NearRingError::TheoremViolation(format!(
            "power law holds for n={n} but construction failed: {e}"
        ))),
    }
}

/// All maps `A → A` with pointwise addition and `f·g = g∘f`.
///
/// A function is numbered by its values read as base-`|A|` digits with
/// `f(0)` most significant.
pub fn fun_nearring(a: &FiniteAbelianGroup, bound: usize) -> Result<NearRing, NearRingError> {
    let k = a.order();
    let size = u32::try_from(k)
        .ok()
        .and_then(|e| k.checked_pow(e))
        .filter(|&s| s <= bound)
        .ok_or(NearRingError::BoundExceeded {
            size: k.saturating_pow(k.min(64) as u32),
            bound,
        })?;
    let decode = |mut f: usize| {
        let mut vals = vec![0; k];
        for slot in vals.iter_mut().rev() {
            *slot = f % k;
            f /= k;
        }
        vals
    };
    let encode = |vals: &[usize]| vals.iter().fold(0, |acc, &v| acc * k + v);
    let funcs: Vec<Vec<usize>> = (0..size).map(decode).collect();
    let mut mul_rows = vec![vec![0; size]; size];
    let mut add = Vec::with_capacity(size * size);
    let mut scratch = vec![0; k];
    for (f, fv) in funcs.iter().enumerate() {
        for (g, gv) in funcs.iter().enumerate() {
            for x in 0..k {
                scratch[x] = gv[fv[x]];
            }
            mul_rows[f][g] = encode(&scratch);
            for x in 0..k {
                scratch[x] = a.add(fv[x], gv[x]);
            }
            add.push(encode(&scratch));
        }
    }
    let labels = funcs
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let monoid = FiniteMonoid::validate(size, labels, mul_rows).map_err(NearRingError::NotMonoid)?;
    let group = FiniteAbelianGroup::trusted(size, add, encode(&vec![a.zero(); k]));
    NearRing::from_group(Arc::new(monoid), group)
}

/// Replaces the addition of `nr` by `a ⊕ b = φ⁻¹(φ(a) + φ(b))` for a
/// multiplicative automorphism `φ`.
pub fn transport_addition(nr: &NearRing, phi: &[ElementIndex]) -> Result<NearRing, NearRingError> {
    let n = nr.order();
    if phi.len() != n {
        return Err(NearRingError::NotPermutation);
    }
    let mut inv = vec![usize::MAX; n];
    for (x, &y) in phi.iter().enumerate() {
        if y >= n || inv[y] != usize::MAX {
            return Err(NearRingError::NotPermutation);
        }
        inv[y] = x;
    }
    // A multiplicative bijection fixes 1 automatically.
    for a in 0..n {
        for b in 0..n {
            if phi[nr.mul(a, b)] != nr.mul(phi[a], phi[b]) {
                return Err(NearRingError::NotMultiplicativeAutomorphism(a, b));
            }
        }
    }
    let mut add = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(inv[nr.add(phi[a], phi[b])]);
        }
    }
    let group = FiniteAbelianGroup::from_flat(n, add).map_err(NearRingError::NotAbelianGroup)?;
    NearRing::from_group(Arc::clone(nr.monoid()), group)
}
