use super::{quotient, MModule, ModuleError, Quotient, Submodule};
use crate::subset::ElementSubset;
use crate::ElementIndex;

/// An additive, equivariant map between modules over the same monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMorphism {
    dom: MModule,
    cod: MModule,
    map: Vec<ElementIndex>,
}

impl ModuleMorphism {
    /// Certifies `map` (indexed by elements of `dom`) as a morphism.
    pub fn new(dom: MModule, cod: MModule, map: Vec<ElementIndex>) -> Result<Self, ModuleError> {
        if !dom.same_monoid(&cod) {
            return Err(ModuleError::MixedMonoids);
        }
        if map.len() != dom.order() {
            return Err(ModuleError::BadShape(format!(
                "map has {} entries, domain has {}",
                map.len(),
                dom.order()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= cod.order()) {
            return Err(ModuleError::BadShape(format!(
                "image {bad} outside codomain of order {}",
                cod.order()
            )));
        }
        for u in 0..dom.order() {
            for v in 0..dom.order() {
                if map[dom.add(u, v)] != cod.add(map[u], map[v]) {
                    return Err(ModuleError::NotAdditive(u, v));
                }
            }
        }
        for a in 0..dom.monoid().order() {
            for v in 0..dom.order() {
                if map[dom.act(a, v)] != cod.act(a, map[v]) {
                    return Err(ModuleError::NotEquivariant(a, v));
                }
            }
        }
        Ok(ModuleMorphism { dom, cod, map })
    }

    pub fn identity(v: &MModule) -> Self {
        ModuleMorphism {
            dom: v.clone(),
            cod: v.clone(),
            map: (0..v.order()).collect(),
        }
    }

    pub fn zero(dom: &MModule, cod: &MModule) -> Result<Self, ModuleError> {
        ModuleMorphism::new(dom.clone(), cod.clone(), vec![cod.zero(); dom.order()])
    }

    pub fn dom(&self) -> &MModule {
        &self.dom
    }

    pub fn cod(&self) -> &MModule {
        &self.cod
    }

    pub fn map(&self) -> &[ElementIndex] {
        &self.map
    }

    pub fn apply(&self, v: ElementIndex) -> ElementIndex {
        self.map[v]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &ModuleMorphism) -> Result<ModuleMorphism, ModuleError> {
        if self.cod != next.dom {
            return Err(ModuleError::BadShape("composable morphisms required".into()));
        }
        Ok(ModuleMorphism {
            dom: self.dom.clone(),
            cod: next.cod.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }

    pub fn kernel(&self) -> Submodule {
        let zero = self.cod.zero();
        Submodule::from_closed(ElementSubset::from_elements(
            self.dom.order(),
            (0..self.dom.order()).filter(|&v| self.map[v] == zero),
        ))
    }

    pub fn image(&self) -> Submodule {
        Submodule::from_closed(ElementSubset::from_elements(
            self.cod.order(),
            self.map.iter().copied(),
        ))
    }
}

/// Kernel, image and cokernel of a morphism.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub kernel: Submodule,
    pub image: Submodule,
    pub cokernel: Quotient,
}

/// Computes kernel, image and cokernel `cod/image`, certifying both
/// submodules and the counting identity `|dom| = |kernel|·|image|`.
pub fn factorize(f: &ModuleMorphism) -> Result<Factorization, ModuleError> {
    let kernel = Submodule::new(f.dom(), f.kernel().carrier().clone())?;
    let image = Submodule::new(f.cod(), f.image().carrier().clone())?;
    assert_eq!(
        f.dom().order(),
        kernel.len() * image.len(),
        "first isomorphism theorem count"
    );
    let cokernel = quotient(f.cod(), &image)?;
    Ok(Factorization {
        kernel,
        image,
        cokernel,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::module::product;

    #[test]
    fn translation_is_not_additive() {
        let v = fixtures::z4_over_m2();
        let map = (0..4).map(|x| (x + 1) % 4).collect();
        assert_eq!(
            ModuleMorphism::new(v.clone(), v, map),
            Err(ModuleError::NotAdditive(0, 0))
        );
    }

    #[test]
    fn equivariance_depends_on_the_action() {
        // Z/3 over M3 twice: as the ring Z/3, and with every scalar acting as
        // the identity. Doubling is an endomorphism of the first but does not
        // intertwine the two actions.
        let twisted = fixtures::zn_ring(3).as_module();
        let plain = MModule::trivial_action(
            std::sync::Arc::clone(twisted.monoid()),
            fixtures::cyclic_group(3),
        );
        let doubling = vec![0, 2, 1];
        assert!(ModuleMorphism::new(twisted.clone(), twisted.clone(), doubling.clone()).is_ok());
        assert_eq!(
            ModuleMorphism::new(twisted, plain, doubling),
            Err(ModuleError::NotEquivariant(0, 1))
        );
    }

    #[test]
    fn factorizations() {
        let v = fixtures::gf_power_module(3, 2);
        let id = ModuleMorphism::identity(&v);
        let f = factorize(&id).unwrap();
        assert_eq!(f.kernel.len(), 1);
        assert_eq!(f.image.len(), 9);
        assert_eq!(f.cokernel.module.order(), 1);

        let line = fixtures::gf_power_module(3, 1);
        let zero = ModuleMorphism::zero(&v, &line).unwrap();
        let f = factorize(&zero).unwrap();
        assert_eq!(f.kernel.len(), 9);
        assert_eq!(f.cokernel.module.order(), 3);

        let p = product(v.monoid(), &[line.clone(), line.clone()]).unwrap();
        assert_eq!(p.module, v);
        let first = p.projection(0);
        let f = factorize(&first).unwrap();
        // Kernel of the first projection is the second axis {(0,y)}.
        assert_eq!(f.kernel.carrier().to_vec(), vec![0, 1, 2]);
        assert_eq!(f.image.len(), 3);
        assert_eq!(f.cokernel.module.order(), 1);
    }

    #[test]
    fn mixed_monoids_rejected() {
        let a = fixtures::gf_power_module(3, 1);
        let b = fixtures::gf_power_module(2, 1);
        assert_eq!(
            ModuleMorphism::new(a, b, vec![0, 0, 0]),
            Err(ModuleError::MixedMonoids)
        );
    }
}
