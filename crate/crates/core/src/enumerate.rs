//! Search for every abelian-group addition that turns a fixed finite monoid
//! into a near-ring.
//!
//! The search fills a symmetric partial addition table cell by cell. Each
//! assignment `x⊕y = z` is propagated eagerly: the images `(ax)⊕(ay) = az`
//! under every left multiplication, and the associativity consequences that
//! are already determined. Rows are kept injective. Completed tables are
//! re-validated from scratch before they are reported.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::group::FiniteAbelianGroup;
use crate::monoid::FiniteMonoid;
use crate::nearring::NearRing;
use crate::ElementIndex;

/// Largest monoid accepted by [`enumerate_nearrings`].
pub const DEFAULT_ENUMERATION_BOUND: usize = 12;
/// Largest monoid accepted by [`oracle_enumerate_nearrings`].
pub const ORACLE_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("monoid of order {size} exceeds bound {bound}")]
    BoundExceeded { size: usize, bound: usize },
}

#[derive(Debug, Clone)]
pub struct EnumerationTask {
    pub monoid: Arc<FiniteMonoid>,
    pub max_results: Option<usize>,
    pub dedup_by_automorphism: bool,
}

impl EnumerationTask {
    pub fn new(monoid: Arc<FiniteMonoid>) -> Self {
        EnumerationTask {
            monoid,
            max_results: None,
            dedup_by_automorphism: false,
        }
    }
}

/// Additions grouped under the monoid's automorphism group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    /// Index of the lexicographically least member.
    pub representative: usize,
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct EnumerationResult {
    pub monoid: Arc<FiniteMonoid>,
    /// Flattened addition tables (`add[a*n + b]`), lexicographically sorted.
    pub additions: Vec<Vec<ElementIndex>>,
    /// `false` when `max_results` cut the search short.
    pub complete: bool,
    pub orbits: Option<Vec<Orbit>>,
}

impl EnumerationResult {
    pub fn truncated(&self) -> bool {
        !self.complete
    }

    /// The additions as certified near-rings.
    pub fn nearrings(&self) -> Vec<NearRing> {
        self.additions
            .iter()
            .map(|t| {
                let g = FiniteAbelianGroup::from_flat(self.monoid.order(), t.clone())
                    .expect("emitted tables are groups");
                NearRing::from_group(Arc::clone(&self.monoid), g).expect("emitted tables are near-rings")
            })
            .collect()
    }
}

const UNSET: usize = usize::MAX;

#[derive(Clone)]
struct Partial<'m> {
    m: &'m FiniteMonoid,
    n: usize,
    cells: Vec<ElementIndex>,
    /// Bit `z` of `used[x]` is set when `z` already occurs in row `x`.
    used: Vec<u64>,
}

impl<'m> Partial<'m> {
    fn new(m: &'m FiniteMonoid) -> Self {
        let n = m.order();
        Partial {
            m,
            n,
            cells: vec![UNSET; n * n],
            used: vec![0; n],
        }
    }

    #[inline]
    fn get(&self, x: usize, y: usize) -> ElementIndex {
        self.cells[x * self.n + y]
    }

    fn set_one(&mut self, x: usize, y: usize, z: usize, queue: &mut Vec<(usize, usize, usize)>) -> bool {
        let cur = self.get(x, y);
        if cur != UNSET {
            return cur == z;
        }
        if self.used[x] >> z & 1 == 1 {
            return false;
        }
        self.cells[x * self.n + y] = z;
        self.used[x] |= 1 << z;
        queue.push((x, y, z));
        true
    }

    /// Records `x⊕y = y⊕x = z` and everything it forces. Returns `false` on
    /// contradiction.
    fn assign(&mut self, x: usize, y: usize, z: usize) -> bool {
        let mut queue = Vec::new();
        if !self.set_one(x, y, z, &mut queue) || !self.set_one(y, x, z, &mut queue) {
            return false;
        }
        while let Some((x, y, z)) = queue.pop() {
            let mut forced = Vec::new();
            for a in 0..self.n {
                forced.push((self.m.mul(a, x), self.m.mul(a, y), self.m.mul(a, z)));
            }
            for w in 0..self.n {
                // (x⊕y)⊕w = x⊕(y⊕w)
                let yw = self.get(y, w);
                if yw != UNSET {
                    let s = self.get(x, yw);
                    if s != UNSET {
                        forced.push((z, w, s));
                    }
                }
                let zw = self.get(z, w);
                if zw != UNSET && yw != UNSET {
                    forced.push((x, yw, zw));
                }
            }
            for (p, q, s) in forced {
                if !self.set_one(p, q, s, &mut queue) || !self.set_one(q, p, s, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn first_unset(&self) -> Option<(usize, usize)> {
        self.cells
            .iter()
            .position(|&c| c == UNSET)
            .map(|i| (i / self.n, i % self.n))
    }
}

/// Depth-first search below `state`; pushes completed valid tables in
/// lexicographic order and stops after `limit` of them.
fn search(state: Partial<'_>, monoid: &Arc<FiniteMonoid>, limit: usize, out: &mut Vec<Vec<ElementIndex>>) {
    if out.len() >= limit {
        return;
    }
    let Some((x, y)) = state.first_unset() else {
        if certify(monoid, &state.cells) {
            out.push(state.cells);
        }
        return;
    };
    for z in 0..state.n {
        if state.used[x] >> z & 1 == 1 || state.used[y] >> z & 1 == 1 {
            continue;
        }
        let mut next = state.clone();
        if next.assign(x, y, z) {
            search(next, monoid, limit, out);
            if out.len() >= limit {
                return;
            }
        }
    }
}

fn certify(monoid: &Arc<FiniteMonoid>, table: &[ElementIndex]) -> bool {
    FiniteAbelianGroup::from_flat(monoid.order(), table.to_vec())
        .ok()
        .and_then(|g| NearRing::from_group(Arc::clone(monoid), g).ok())
        .is_some()
}

/// Elements fixed by every left multiplication; only these can be the
/// additive zero of a near-ring on the monoid.
pub fn zero_candidates(m: &FiniteMonoid) -> Vec<ElementIndex> {
    (0..m.order())
        .filter(|&e| (0..m.order()).all(|a| m.mul(a, e) == e))
        .collect()
}

pub fn enumerate_nearrings(task: &EnumerationTask) -> Result<EnumerationResult, EnumerationError> {
    let m = &task.monoid;
    let n = m.order();
    if n > DEFAULT_ENUMERATION_BOUND {
        return Err(EnumerationError::BoundExceeded {
            size: n,
            bound: DEFAULT_ENUMERATION_BOUND,
        });
    }
    // One more than requested, to tell a full result from a cut one.
    let limit = task.max_results.map_or(usize::MAX, |k| k.saturating_add(1));
    let mut additions: Vec<Vec<ElementIndex>> = zero_candidates(m)
        .into_par_iter()
        .map(|e| {
            let mut root = Partial::new(m);
            let mut out = Vec::new();
            if (0..n).all(|x| root.assign(e, x, x)) {
                search(root, m, limit, &mut out);
            }
            out
        })
        .flatten()
        .collect();
    additions.sort();
    let complete = task.max_results.map_or(true, |k| additions.len() <= k);
    if let Some(k) = task.max_results {
        additions.truncate(k);
    }
    let mut result = EnumerationResult {
        monoid: Arc::clone(m),
        additions,
        complete,
        orbits: None,
    };
    if task.dedup_by_automorphism {
        result = dedup_by_automorphism(result);
    }
    Ok(result)
}

/// Independent oracle: every commutative Latin square on the carrier, built
/// row by row from permutations, filtered by full near-ring validation.
pub fn oracle_enumerate_nearrings(m: &Arc<FiniteMonoid>) -> Result<EnumerationResult, EnumerationError> {
    let n = m.order();
    if n > ORACLE_BOUND {
        return Err(EnumerationError::BoundExceeded {
            size: n,
            bound: ORACLE_BOUND,
        });
    }
    let perms = permutations(n);
    let mut rows: Vec<&[ElementIndex]> = Vec::with_capacity(n);
    let mut additions = Vec::new();
    fill_rows(n, &perms, &mut rows, &mut |rows| {
        let table: Vec<ElementIndex> = rows.iter().flat_map(|r| r.iter().copied()).collect();
        if certify(m, &table) {
            additions.push(table);
        }
    });
    additions.sort();
    Ok(EnumerationResult {
        monoid: Arc::clone(m),
        additions,
        complete: true,
        orbits: None,
    })
}

fn fill_rows<'p>(
    n: usize,
    perms: &'p [Vec<ElementIndex>],
    rows: &mut Vec<&'p [ElementIndex]>,
    emit: &mut dyn FnMut(&[&[ElementIndex]]),
) {
    let i = rows.len();
    if i == n {
        emit(rows);
        return;
    }
    for p in perms {
        // Symmetry fixes the first i entries; columns must stay injective.
        let symmetric = (0..i).all(|j| p[j] == rows[j][i]);
        let latin = (i..n).all(|j| rows.iter().all(|r| r[j] != p[j]));
        if symmetric && latin {
            rows.push(p);
            fill_rows(n, perms, rows, emit);
            rows.pop();
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<ElementIndex>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    go(n, &mut cur, &mut used, &mut out);
    out
}

/// All automorphisms of `m`, as permutations sorted lexicographically.
pub fn monoid_automorphisms(m: &FiniteMonoid) -> Vec<Vec<ElementIndex>> {
    let n = m.order();
    let mut out = Vec::new();
    let mut phi = vec![UNSET; n];
    let mut taken = vec![false; n];
    fn consistent(m: &FiniteMonoid, phi: &[usize], k: usize) -> bool {
        // Check every product whose factors and result are already mapped.
        (0..=k).all(|a| {
            (0..=k).all(|b| {
                if a != k && b != k {
                    return true;
                }
                let ab = m.mul(a, b);
                phi[ab] == UNSET || phi[ab] == m.mul(phi[a], phi[b])
            })
        }) && (0..k).all(|a| {
            (0..k).all(|b| {
                let ab = m.mul(a, b);
                ab != k || phi[k] == m.mul(phi[a], phi[b])
            })
        })
    }
    fn go(m: &FiniteMonoid, k: usize, phi: &mut Vec<usize>, taken: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let n = m.order();
        if k == n {
            if (0..n).all(|a| (0..n).all(|b| phi[m.mul(a, b)] == m.mul(phi[a], phi[b]))) {
                out.push(phi.clone());
            }
            return;
        }
        for t in 0..n {
            if taken[t] || (k == m.one()) != (t == m.one()) {
                continue;
            }
            phi[k] = t;
            taken[t] = true;
            if consistent(m, phi, k) {
                go(m, k + 1, phi, taken, out);
            }
            taken[t] = false;
            phi[k] = UNSET;
        }
    }
    go(m, 0, &mut phi, &mut taken, &mut out);
    out
}

/// `a ⊕' b = φ⁻¹(φ(a) ⊕ φ(b))`.
pub fn transport_table(table: &[ElementIndex], phi: &[ElementIndex]) -> Vec<ElementIndex> {
    let n = phi.len();
    let mut inv = vec![0; n];
    for (x, &y) in phi.iter().enumerate() {
        inv[y] = x;
    }
    let mut out = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            out.push(inv[table[phi[a] * n + phi[b]]]);
        }
    }
    out
}

/// Groups the additions into orbits under the monoid's automorphisms. Orbits
/// are listed by representative.
pub fn dedup_by_automorphism(mut result: EnumerationResult) -> EnumerationResult {
    let autos = monoid_automorphisms(&result.monoid);
    let position: BTreeMap<&[ElementIndex], usize> = result
        .additions
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut orbit_of = vec![usize::MAX; result.additions.len()];
    let mut orbits: Vec<Orbit> = Vec::new();
    for i in 0..result.additions.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        let mut members = Vec::new();
        for phi in &autos {
            let image = transport_table(&result.additions[i], phi);
            if let Some(&j) = position.get(image.as_slice()) {
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        // Additions are sorted, so the least index is the least table.
        orbits.push(Orbit {
            representative: members[0],
            members,
        });
    }
    result.orbits = Some(orbits);
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::nearring::{classify, dickson_fixture};

    fn run(m: FiniteMonoid) -> EnumerationResult {
        enumerate_nearrings(&EnumerationTask::new(Arc::new(m))).unwrap()
    }

    #[test]
    fn small_fields_have_one_addition() {
        assert_eq!(run(fixtures::zn_monoid(2)).additions.len(), 1);
        let r = run(fixtures::zn_monoid(3));
        assert_eq!(r.additions, vec![fixtures::cyclic_group(3).table().to_vec()]);
        assert!(r.complete);
    }

    #[test]
    fn agrees_with_oracle_on_small_monoids() {
        for (name, m) in fixtures::small_monoids() {
            let m = Arc::new(m);
            let fast = enumerate_nearrings(&EnumerationTask::new(Arc::clone(&m))).unwrap();
            let slow = oracle_enumerate_nearrings(&m).unwrap();
            assert_eq!(fast.additions, slow.additions, "{name}");
        }
    }

    #[test]
    fn dickson_monoid_additions_are_nearfields() {
        let d = dickson_fixture();
        let r = enumerate_nearrings(&EnumerationTask {
            monoid: Arc::clone(d.monoid()),
            max_results: None,
            dedup_by_automorphism: true,
        })
        .unwrap();
        assert!(r.additions.contains(&d.additive().table().to_vec()));
        for nr in r.nearrings() {
            assert!(classify(&nr).is_nearfield);
            assert!((0..9).all(|a| a == nr.zero() || nr.additive().element_order(a) == 3));
        }
        // Every addition is a transport of the Dickson one.
        let orbits = r.orbits.unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].members.len(), r.additions.len());
    }

    #[test]
    fn truncation_is_a_prefix() {
        let m = Arc::new(dickson_fixture().monoid().as_ref().clone());
        let full = enumerate_nearrings(&EnumerationTask::new(Arc::clone(&m))).unwrap();
        let cut = enumerate_nearrings(&EnumerationTask {
            monoid: m,
            max_results: Some(1),
            dedup_by_automorphism: false,
        })
        .unwrap();
        assert_eq!(cut.additions[..], full.additions[..1]);
        assert_eq!(cut.complete, full.additions.len() <= 1);
    }

    #[test]
    fn z9_automorphisms() {
        let m = fixtures::zn_monoid(9);
        let autos = monoid_automorphisms(&m);
        assert!(autos.contains(&fixtures::z9_phi()));
        let r = enumerate_nearrings(&EnumerationTask {
            monoid: Arc::new(m),
            max_results: None,
            dedup_by_automorphism: true,
        })
        .unwrap();
        let plus = fixtures::cyclic_group(9).table().to_vec();
        let twisted = fixtures::z9_twisted_ring().additive().table().to_vec();
        let i = r.additions.iter().position(|t| *t == plus).unwrap();
        let j = r.additions.iter().position(|t| *t == twisted).unwrap();
        let orbits = r.orbits.unwrap();
        let same = orbits.iter().any(|o| o.members.contains(&i) && o.members.contains(&j));
        assert!(same);
    }

    #[test]
    fn bounds() {
        let big = Arc::new(fixtures::zn_monoid(13));
        assert!(enumerate_nearrings(&EnumerationTask::new(big)).is_err());
        assert!(oracle_enumerate_nearrings(&Arc::new(fixtures::zn_monoid(6))).is_err());
        assert_eq!(
            oracle_enumerate_nearrings(&Arc::new(fixtures::zn_monoid(1)))
                .unwrap()
                .additions
                .len(),
            1
        );
    }
}
