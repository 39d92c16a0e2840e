//! Which small monoids are scalar groups: an absorbing zero, a unique
//! `-1` solving `η² = 1`, and every non-zero element invertible.
//!
//! Run with `cargo run --example scalar_groups`.

use nearalg::fixtures;
use nearalg::monoid::check_scalar_group;
use nearalg::FiniteMonoid;

fn main() {
    let mut monoids: Vec<(String, FiniteMonoid)> = fixtures::small_monoids()
        .into_iter()
        .map(|(n, m)| (n.to_string(), m))
        .collect();
    monoids.push(("Z/9".into(), fixtures::zn_monoid(9)));
    monoids.push(("Q8 with zero".into(), fixtures::q8_zero_monoid()));
    monoids.push(("Dickson".into(), (**nearalg::nearring::dickson_fixture().monoid()).clone()));

    println!("{:<14} {:>5}  {:<6} {:<6} {:<20} verdict", "monoid", "order", "zero", "-1", "eta^2=1");
    for (name, m) in &monoids {
        let r = check_scalar_group(m);
        let show = |e: Option<usize>| e.map_or("-".to_string(), |e| m.label(e).to_string());
        let eta: Vec<&str> = r.eta_solutions.iter().map(|&e| m.label(e)).collect();
        let verdict = match &r.failure_witness {
            None => "scalar group".to_string(),
            Some(f) => match f.element() {
                Some(e) => format!("{} [{}]", f.tag(), m.label(e)),
                None => f.tag().to_string(),
            },
        };
        println!(
            "{name:<14} {:>5}  {:<6} {:<6} {:<20} {verdict}",
            m.order(),
            show(r.zero),
            show(r.minus_one),
            eta.join(",")
        );
    }
}
