//! Small named structures used by tests, examples and the verification
//! suites. Every constructor runs the full validators.

use std::sync::Arc;

use crate::andre::MultiNearRing;
use crate::group::FiniteAbelianGroup;
use crate::module::{product, MModule};
use crate::monoid::FiniteMonoid;
use crate::nearring::{dickson_fixture, transport_addition, NearRing};
use crate::ElementIndex;

/// ℤ/n under addition.
pub fn cyclic_group(n: usize) -> FiniteAbelianGroup {
    FiniteAbelianGroup::new(
        (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect(),
    )
    .expect("cyclic group")
}

/// ℤ/n₁ × … × ℤ/nₖ in mixed radix, leftmost factor most significant.
pub fn product_group(orders: &[usize]) -> FiniteAbelianGroup {
    let size: usize = orders.iter().product();
    let decode = |mut x: usize| {
        let mut c = vec![0; orders.len()];
        for (i, &n) in orders.iter().enumerate().rev() {
            c[i] = x % n;
            x /= n;
        }
        c
    };
    let rows = (0..size)
        .map(|x| {
            let cx = decode(x);
            (0..size)
                .map(|y| {
                    let cy = decode(y);
                    orders
                        .iter()
                        .enumerate()
                        .fold(0, |acc, (i, &n)| acc * n + (cx[i] + cy[i]) % n)
                })
                .collect()
        })
        .collect();
    FiniteAbelianGroup::new(rows).expect("product of cyclic groups")
}

/// ℤ/n under multiplication.
pub fn zn_monoid(n: usize) -> FiniteMonoid {
    FiniteMonoid::new(
        (0..n)
            .map(|a| (0..n).map(|b| (a * b) % n).collect())
            .collect(),
    )
    .expect("multiplicative monoid of Z/n")
}

/// The ring ℤ/n.
pub fn zn_ring(n: usize) -> NearRing {
    NearRing::from_group(Arc::new(zn_monoid(n)), cyclic_group(n)).expect("Z/n is a ring")
}

/// The cyclic group of order `n` viewed as a monoid (no zero for `n > 1`).
pub fn cyclic_monoid(n: usize) -> FiniteMonoid {
    FiniteMonoid::new(cyclic_group(n).rows()).expect("groups are monoids")
}

/// The Klein four-group as a monoid: bitwise xor on `0..4`.
pub fn klein_monoid() -> FiniteMonoid {
    FiniteMonoid::new((0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect())
        .expect("Klein four-group")
}

/// `{0, 1}` with `max` as multiplication: identity 0, absorbing element 1.
pub fn semilattice_monoid() -> FiniteMonoid {
    FiniteMonoid::new(vec![vec![0, 1], vec![1, 1]]).expect("max-semilattice")
}

/// GF(2) × GF(2) under componentwise multiplication, pairs numbered `2a + b`.
pub fn boolean_square_monoid() -> FiniteMonoid {
    FiniteMonoid::new((0..4).map(|a| (0..4).map(|b| a & b).collect()).collect())
        .expect("componentwise product of two copies of M2")
}

/// The quaternion group with an adjoined absorbing zero. Index 0 is the
/// zero; `±1, ±i, ±j, ±k` follow as `1 + 2u + s` with `u` the unit
/// position in `1, i, j, k` and `s = 1` for the negative sign.
pub fn q8_zero_monoid() -> FiniteMonoid {
    // Products of the basis units as (sign flip, unit).
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let split = |x: usize| ((x - 1) % 2, (x - 1) / 2);
    let rows = (0..9)
        .map(|a| {
            (0..9)
                .map(|b| {
                    if a == 0 || b == 0 {
                        return 0;
                    }
                    let ((sa, ua), (sb, ub)) = (split(a), split(b));
                    let (flip, u) = UNIT[ua][ub];
                    1 + 2 * u + (sa + sb + flip) % 2
                })
                .collect()
        })
        .collect();
    let labels = ["0", "1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    FiniteMonoid::validate(9, labels, rows).expect("quaternion group with zero")
}

/// Every curated monoid of order at most four, with a short name.
pub fn small_monoids() -> Vec<(&'static str, FiniteMonoid)> {
    vec![
        ("M1", zn_monoid(1)),
        ("M2", zn_monoid(2)),
        ("M3", zn_monoid(3)),
        ("M4", zn_monoid(4)),
        ("C2", cyclic_monoid(2)),
        ("C3", cyclic_monoid(3)),
        ("C4", cyclic_monoid(4)),
        ("K4", klein_monoid()),
        ("S2", semilattice_monoid()),
        ("B2", boolean_square_monoid()),
    ]
}

/// ℤ/4 over the multiplicative monoid of GF(2): 0 kills, 1 fixes.
pub fn z4_over_m2() -> MModule {
    scalar_zero_one(cyclic_group(4))
}

/// The Klein four-group over the multiplicative monoid of GF(2).
pub fn klein_over_m2() -> MModule {
    scalar_zero_one(product_group(&[2, 2]))
}

fn scalar_zero_one(group: FiniteAbelianGroup) -> MModule {
    let n = group.order();
    let zero = group.zero();
    MModule::validate(
        Arc::new(zn_monoid(2)),
        group,
        vec![vec![zero; n], (0..n).collect()],
    )
    .expect("0 acts as zero, 1 as identity")
}

/// GF(p)^k over the multiplicative monoid of GF(p), coordinates in mixed
/// radix with the first coordinate most significant.
pub fn gf_power_module(p: usize, k: u32) -> MModule {
    let line = zn_ring(p).as_module();
    let factors = vec![line.clone(); k as usize];
    product(line.monoid(), &factors)
        .expect("same monoid")
        .module
}

/// The multiplicative automorphism of ℤ/9 exchanging 3 and 6 and fixing
/// every other residue.
pub fn z9_phi() -> Vec<ElementIndex> {
    let mut phi: Vec<ElementIndex> = (0..9).collect();
    phi.swap(3, 6);
    phi
}

/// ℤ/9 with the addition transported along [`z9_phi`].
pub fn z9_twisted_ring() -> NearRing {
    transport_addition(&zn_ring(9), &z9_phi()).expect("phi is a multiplicative automorphism")
}

/// The multiplicative monoid of ℤ/9 with the additions `+` and `+_φ`.
pub fn z9_multinearring() -> MultiNearRing {
    MultiNearRing::new(
        Arc::clone(zn_ring(9).monoid()),
        vec![zn_ring(9), z9_twisted_ring()],
    )
    .expect("distinct additions on one monoid")
}

/// `(ℤ/9, +) × (ℤ/9, +_φ)` with componentwise multiplication; `(m, n)` has
/// index `9m + n`.
pub fn z9_product_module() -> MModule {
    let a = zn_ring(9).as_module();
    let b = z9_twisted_ring().as_module();
    product(a.monoid(), &[a.clone(), b]).expect("same monoid").module
}

/// The Dickson near-field as a module over its own monoid.
pub fn dickson_module() -> MModule {
    dickson_fixture().as_module()
}

/// Two copies of the Dickson near-field, 81 elements.
pub fn dickson_square() -> MModule {
    let j = dickson_module();
    product(j.monoid(), &[j.clone(), j.clone()])
        .expect("same monoid")
        .module
}

/// Every near-ring addition on the Dickson monoid, together with the
/// product `N₁ × N₂` of the Dickson near-field and a transport of it along
/// the first monoid automorphism that changes the addition. `(x, y)` has
/// index `9x + y`.
pub fn dickson_mixed_pair() -> (MultiNearRing, MModule) {
    let d = dickson_fixture();
    let other = crate::enumerate::monoid_automorphisms(d.monoid())
        .into_iter()
        .map(|phi| transport_addition(&d, &phi).expect("automorphism"))
        .find(|t| t.additive().table() != d.additive().table())
        .expect("the Dickson monoid carries a second near-field addition");
    let a = d.as_module();
    let b = other.as_module();
    let module = product(a.monoid(), &[a.clone(), b]).expect("same monoid").module;
    let all = crate::enumerate::enumerate_nearrings(&crate::enumerate::EnumerationTask::new(
        Arc::clone(d.monoid()),
    ))
    .expect("nine elements is within the enumeration bound");
    let r = MultiNearRing::new(Arc::clone(d.monoid()), all.nearrings()).expect("distinct additions");
    (r, module)
}

/// Upper-triangular 2×2 matrices over GF(2). The matrix
/// `[[a, b], [0, c]]` has index `4a + 2b + c`.
pub fn upper_triangular_z2() -> NearRing {
    let split = |i: usize| (i >> 2 & 1, i >> 1 & 1, i & 1);
    let join = |a: usize, b: usize, c: usize| (a % 2) << 2 | (b % 2) << 1 | (c % 2);
    let mul = (0..8)
        .map(|x| {
            let (a, b, c) = split(x);
            (0..8)
                .map(|y| {
                    let (d, e, f) = split(y);
                    join(a * d, a * e + b * f, c * f)
                })
                .collect()
        })
        .collect();
    let monoid = FiniteMonoid::new(mul).expect("matrix multiplication");
    NearRing::from_group(Arc::new(monoid), product_group(&[2, 2, 2])).expect("matrix ring")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        // (1,1) + (1,2) = (0,3) in Z/2 x Z/4.
        assert_eq!(product_group(&[2, 4]).add(5, 6), 3);
        for (_, m) in small_monoids() {
            assert!(m.order() <= 4);
        }
        let v = z9_product_module();
        assert_eq!(v.order(), 81);
        MModule::validate(
            Arc::clone(v.monoid()),
            FiniteAbelianGroup::new(v.group().rows()).unwrap(),
            v.act_rows(),
        )
        .unwrap();
        assert_eq!(upper_triangular_z2().one(), 5);
        assert_eq!(dickson_square().order(), 81);
    }

    #[test]
    fn quaternions_with_zero() {
        let q = q8_zero_monoid();
        assert_eq!(q.one(), 1);
        assert_eq!(q.zero(), Some(0));
        assert_eq!(q.minus_one(), Some(2));
        // i·j = k, j·i = -k, i² = -1.
        assert_eq!((q.mul(3, 5), q.mul(5, 3), q.mul(3, 3)), (7, 8, 2));
        assert!(crate::monoid::check_scalar_group(&q).is_scalar_group);
    }
}
