use std::sync::Arc;

use super::{MModule, ModuleError, ModuleMorphism};
use crate::group::FiniteAbelianGroup;
use crate::monoid::FiniteMonoid;
use crate::ElementIndex;

/// A finite product with its factors. Elements are numbered in mixed radix,
/// leftmost factor most significant.
#[derive(Debug, Clone)]
pub struct Product {
    pub module: MModule,
    pub factors: Vec<MModule>,
}

impl Product {
    pub fn encode(&self, coords: &[ElementIndex]) -> ElementIndex {
        encode(&self.factors, coords)
    }

    pub fn decode(&self, x: ElementIndex) -> Vec<ElementIndex> {
        decode(&self.factors, x)
    }

    pub fn projection(&self, i: usize) -> ModuleMorphism {
        let map = (0..self.module.order()).map(|x| self.decode(x)[i]).collect();
        ModuleMorphism::new(self.module.clone(), self.factors[i].clone(), map)
            .expect("projections are morphisms")
    }

    pub fn injection(&self, i: usize) -> ModuleMorphism {
        let mut coords: Vec<ElementIndex> = self.factors.iter().map(MModule::zero).collect();
        let map = (0..self.factors[i].order())
            .map(|x| {
                coords[i] = x;
                self.encode(&coords)
            })
            .collect();
        ModuleMorphism::new(self.factors[i].clone(), self.module.clone(), map)
            .expect("injections are morphisms")
    }
}

fn encode(factors: &[MModule], coords: &[ElementIndex]) -> ElementIndex {
    factors
        .iter()
        .zip(coords)
        .fold(0, |acc, (f, &c)| acc * f.order() + c)
}

fn decode(factors: &[MModule], mut x: ElementIndex) -> Vec<ElementIndex> {
    let mut coords = vec![0; factors.len()];
    for (i, f) in factors.iter().enumerate().rev() {
        coords[i] = x % f.order();
        x /= f.order();
    }
    coords
}

/// Componentwise product of modules over `monoid`; the empty product is the
/// one-element module.
pub fn product(monoid: &Arc<FiniteMonoid>, factors: &[MModule]) -> Result<Product, ModuleError> {
    if factors.iter().any(|f| !monoid.same_table(f.monoid())) {
        return Err(ModuleError::MixedMonoids);
    }
    let n: usize = factors.iter().map(MModule::order).product();
    let coords: Vec<Vec<ElementIndex>> = (0..n).map(|x| decode(factors, x)).collect();
    let weights: Vec<usize> = (0..factors.len())
        .map(|i| factors[i + 1..].iter().map(MModule::order).product())
        .collect();
    let mut add = Vec::with_capacity(n * n);
    for cx in &coords {
        for cy in &coords {
            add.push(
                factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.add(cx[i], cy[i]) * weights[i])
                    .sum(),
            );
        }
    }
    let mut act = Vec::with_capacity(monoid.order() * n);
    for a in 0..monoid.order() {
        for cx in &coords {
            act.push(
                factors
                    .iter()
                    .enumerate()
                    .map(|(i, f)| f.act(a, cx[i]) * weights[i])
                    .sum(),
            );
        }
    }
    let zero: Vec<_> = factors.iter().map(MModule::zero).collect();
    let group = FiniteAbelianGroup::trusted(n, add, encode(factors, &zero));
    Ok(Product {
        module: MModule::from_parts(Arc::clone(monoid), group, act),
        factors: factors.to_vec(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn empty_product_is_a_point() {
        let m3 = Arc::new(fixtures::zn_monoid(3));
        let p = product(&m3, &[]).unwrap();
        assert_eq!(p.module.order(), 1);
        assert_eq!(p.module, MModule::trivial(m3));
    }

    #[test]
    fn product_tables_are_valid() {
        let z4 = fixtures::z4_over_m2();
        let p = product(z4.monoid(), &[z4.clone(), fixtures::gf_power_module(2, 1)]).unwrap();
        let rebuilt = MModule::validate(
            Arc::clone(z4.monoid()),
            FiniteAbelianGroup::new(p.module.group().rows()).unwrap(),
            p.module.act_rows(),
        )
        .unwrap();
        assert_eq!(rebuilt, p.module);
        assert_eq!(p.decode(5), vec![2, 1]);
        assert_eq!(p.encode(&[3, 0]), 6);
        for i in 0..2 {
            let composite = p.injection(i).then(&p.projection(i)).unwrap();
            assert_eq!(composite, ModuleMorphism::identity(&p.factors[i]));
        }
    }

    #[test]
    fn mixed_monoids() {
        let a = fixtures::gf_power_module(3, 1);
        let b = fixtures::gf_power_module(2, 1);
        assert!(matches!(
            product(a.monoid(), &[a.clone(), b]),
            Err(ModuleError::MixedMonoids)
        ));
    }
}
