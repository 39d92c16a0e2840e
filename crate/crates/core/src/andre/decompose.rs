use std::collections::VecDeque;

use super::{check_qk3, max_qk1_set, quasi_kernel, AndreError, MultiNearRing};
use crate::module::MModule;
use crate::subset::ElementSubset;
use crate::ElementIndex;

/// One induction step: `v = v' + v''` where `v'' = q₂ + β'·r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailStep {
    pub target: ElementIndex,
    pub q1: ElementIndex,
    pub q2: ElementIndex,
    /// `(α, β)` on which the additions of `q1` and `q2` differ.
    pub alpha: ElementIndex,
    pub beta: ElementIndex,
    /// Coefficient of `q2` in the rewritten combination.
    pub coefficient: ElementIndex,
    pub r: ElementIndex,
    pub beta_prime: ElementIndex,
    pub v_prime: ElementIndex,
    pub v_double_prime: ElementIndex,
}

/// A presentation of `target` as a sum of quasi-kernel elements lying in the
/// submodule generated by `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub target: ElementIndex,
    pub parts: Vec<ElementIndex>,
    /// Least number of quasi-kernel elements summing to `target`.
    pub m_v: usize,
    pub trail: Vec<TrailStep>,
}

impl DecompositionCertificate {
    /// Re-checks sum, membership and `m_v` without consulting the trail.
    pub fn validate(&self, v: &MModule) -> Result<(), String> {
        let qv = quasi_kernel(v).qv;
        let c = v.cyclic_submodule(self.target);
        let sum = v.group().sum(self.parts.iter().copied());
        if sum != self.target {
            return Err(format!("parts sum to {sum}, not {}", self.target));
        }
        if let Some(&p) = self.parts.iter().find(|&&p| !qv.contains(p) || !c.contains(p)) {
            return Err(format!("part {p} outside the quasi-kernel of the cyclic submodule"));
        }
        let (lengths, _) = presentation_lengths(v, &qv);
        if lengths[self.target] != Some(self.m_v) {
            return Err(format!(
                "m_v = {} but breadth-first search gives {:?}",
                self.m_v, lengths[self.target]
            ));
        }
        Ok(())
    }
}

/// Breadth-first layering of the Cayley graph of `V` with generators
/// `Q ∖ {0}`, taken in ascending order. Returns the least number of
/// generators summing to each element and the discovering edge.
#[allow(clippy::type_complexity)]
pub fn presentation_lengths(
    v: &MModule,
    q: &ElementSubset,
) -> (Vec<Option<usize>>, Vec<Option<(ElementIndex, ElementIndex)>>) {
    let n = v.order();
    let gens: Vec<ElementIndex> = q.iter().filter(|&x| x != v.zero()).collect();
    let mut dist = vec![None; n];
    let mut pred = vec![None; n];
    dist[v.zero()] = Some(0);
    let mut queue = VecDeque::from([v.zero()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[x].expect("queued elements are reached");
        for &g in &gens {
            let y = v.add(x, g);
            if dist[y].is_none() {
                dist[y] = Some(d + 1);
                pred[y] = Some((x, g));
                queue.push_back(y);
            }
        }
    }
    (dist, pred)
}

/// Decomposes elements of one module after checking the hypotheses once.
pub struct Decomposer<'a> {
    v: &'a MModule,
    r: &'a MultiNearRing,
    qv: ElementSubset,
    witness: Vec<Option<usize>>,
    lengths: Vec<Option<usize>>,
    pred: Vec<Option<(ElementIndex, ElementIndex)>>,
}

impl<'a> Decomposer<'a> {
    /// Checks the hypotheses: the quasi-kernel satisfies QK1 against `r`,
    /// is closed under the action, generates `V`, and satisfies QK3.
    pub fn new(v: &'a MModule, r: &'a MultiNearRing) -> Result<Self, AndreError> {
        let qv = quasi_kernel(v).qv;
        let qk1 = max_qk1_set(v, r)?;
        if let Some(q) = qv.iter().find(|&q| !qk1.qstar.contains(q)) {
            return Err(AndreError::HypothesisFailed(format!(
                "quasi-kernel element {q} fails QK1"
            )));
        }
        if v.orbit(&qv) != qv {
            return Err(AndreError::HypothesisFailed(
                "quasi-kernel is not closed under the action".into(),
            ));
        }
        if v.group_closure(&qv).len() != v.order() {
            return Err(AndreError::HypothesisFailed(
                "quasi-kernel does not generate".into(),
            ));
        }
        if let Some(w) = check_qk3(v, &qv).witness {
            return Err(AndreError::HypothesisFailed(format!(
                "QK3 fails at v={}, q={}, alpha={}, r={}",
                w.v, w.q, w.alpha, w.r
            )));
        }
        let (lengths, pred) = presentation_lengths(v, &qv);
        Ok(Decomposer {
            v,
            r,
            qv,
            witness: qk1.witness,
            lengths,
            pred,
        })
    }

    /// The quasi-kernel `Q(V)`.
    pub fn quasi_kernel(&self) -> &ElementSubset {
        &self.qv
    }

    pub fn decompose(&self, x: ElementIndex) -> Result<DecompositionCertificate, AndreError> {
        if x >= self.v.order() {
            return Err(AndreError::ElementOutOfRange(x));
        }
        let mut trail = Vec::new();
        let parts = self.split(x, &mut trail)?;
        let cert = DecompositionCertificate {
            target: x,
            parts,
            m_v: self.lengths[x].ok_or(AndreError::NoPresentation(x))?,
            trail,
        };
        cert.validate(self.v).map_err(AndreError::TheoremViolation)?;
        Ok(cert)
    }

    fn presentation(&self, mut x: ElementIndex) -> Vec<ElementIndex> {
        let mut out = Vec::new();
        while let Some((prev, g)) = self.pred[x] {
            out.push(g);
            x = prev;
        }
        out.sort_unstable();
        out
    }

    fn split(&self, x: ElementIndex, trail: &mut Vec<TrailStep>) -> Result<Vec<ElementIndex>, AndreError> {
        let v = self.v;
        let n = self.lengths[x].ok_or(AndreError::NoPresentation(x))?;
        let pres = self.presentation(x);
        if n <= 1 {
            return Ok(pres);
        }
        let nr = |q: ElementIndex| {
            let i = self.witness[q].expect("non-zero quasi-kernel elements have a QK1 witness");
            &self.r.designated()[i]
        };
        let (q1, q2) = (pres[0], pres[1]);
        let (n1, n2) = (nr(q1), nr(q2));
        let m = v.monoid().order();
        let (alpha, beta) = (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .find(|&(a, b)| n1.add(a, b) != n2.add(a, b))
            .ok_or_else(|| {
                AndreError::TheoremViolation(format!(
                    "{q1} and {q2} share an addition in a minimal presentation of {x}"
                ))
            })?;
        let s1 = n1.add(alpha, beta);
        let coeff: Vec<ElementIndex> = pres[1..]
            .iter()
            .map(|&q| {
                let ni = nr(q);
                ni.sub(ni.add(alpha, beta), s1)
            })
            .collect();
        let lhs = v.sub(v.add(v.act(alpha, x), v.act(beta, x)), v.act(s1, x));
        let rhs = v.group().sum(pres[1..].iter().zip(&coeff).map(|(&q, &c)| v.act(c, q)));
        if lhs != rhs {
            return Err(AndreError::TheoremViolation(format!(
                "rewrite identity fails for {x} at ({alpha}, {beta})"
            )));
        }
        let r = v
            .group()
            .sum(pres[2..].iter().zip(&coeff[1..]).map(|(&q, &c)| v.act(c, q)));
        let c = v.cyclic_submodule(x);
        let beta_prime = (0..m)
            .find(|&b| c.contains(v.add(q2, v.act(b, r))))
            .ok_or_else(|| AndreError::HypothesisFailed(format!("QK3 fails at v={x}, q={q2}, r={r}")))?;
        let v2 = v.add(q2, v.act(beta_prime, r));
        let v1 = v.sub(x, v2);
        for y in [v1, v2] {
            if self.lengths[y].map_or(true, |k| k >= n) {
                return Err(AndreError::TheoremViolation(format!(
                    "induction does not shorten {x}: part {y} has length {:?}",
                    self.lengths[y]
                )));
            }
        }
        trail.push(TrailStep {
            target: x,
            q1,
            q2,
            alpha,
            beta,
            coefficient: coeff[0],
            r,
            beta_prime,
            v_prime: v1,
            v_double_prime: v2,
        });
        let mut parts = self.split(v1, trail)?;
        parts.extend(self.split(v2, trail)?);
        Ok(parts)
    }
}

/// Writes `x` as a sum of quasi-kernel elements from the submodule it
/// generates, following the strong induction on `m_x`. See
/// [`Decomposer::new`] for the hypotheses checked first.
pub fn decompose_quasikernel(
    v: &MModule,
    r: &MultiNearRing,
    x: ElementIndex,
) -> Result<DecompositionCertificate, AndreError> {
    if x >= v.order() {
        return Err(AndreError::ElementOutOfRange(x));
    }
    Decomposer::new(v, r)?.decompose(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn short_presentations_need_no_trail() {
        let g = fixtures::gf_power_module(3, 2);
        let r = MultiNearRing::single(fixtures::zn_ring(3));
        for x in 0..9 {
            let cert = decompose_quasikernel(&g, &r, x).unwrap();
            assert!(cert.trail.is_empty());
            assert_eq!(cert.m_v, usize::from(x != 0));
            assert_eq!(cert.parts, if x == 0 { vec![] } else { vec![x] });
        }
    }

    #[test]
    fn z9_product_needs_two_generators_but_fails_qk3() {
        let v = fixtures::z9_product_module();
        let r = fixtures::z9_multinearring();
        let (lengths, _) = presentation_lengths(&v, &quasi_kernel(&v).qv);
        assert_eq!(lengths[10], Some(2));
        assert!(matches!(
            decompose_quasikernel(&v, &r, 10),
            Err(AndreError::HypothesisFailed(_))
        ));
    }

    #[test]
    fn mixed_dickson_pair_splits_in_one_step() {
        let (r, v) = fixtures::dickson_mixed_pair();
        let cert = decompose_quasikernel(&v, &r, 10).unwrap();
        assert_eq!(cert.m_v, 2);
        assert_eq!(cert.parts.len(), 2);
        assert_eq!(v.group().sum(cert.parts.iter().copied()), 10);
        assert_eq!(cert.trail.len(), 1);
        assert!(cert.validate(&v).is_ok());
    }

    #[test]
    fn tampered_certificates_fail() {
        let (r, v) = fixtures::dickson_mixed_pair();
        let mut cert = decompose_quasikernel(&v, &r, 10).unwrap();
        cert.m_v = 1;
        assert!(cert.validate(&v).is_err());
        cert.m_v = 2;
        cert.parts.push(1);
        assert!(cert.validate(&v).is_err());
    }

    #[test]
    fn hypotheses_are_checked() {
        let v = fixtures::z4_over_m2();
        let r = MultiNearRing::single(fixtures::zn_ring(2));
        assert!(matches!(
            decompose_quasikernel(&v, &r, 1),
            Err(AndreError::HypothesisFailed(_))
        ));
        assert!(matches!(
            decompose_quasikernel(&v, &r, 7),
            Err(AndreError::ElementOutOfRange(7))
        ));
    }
}
