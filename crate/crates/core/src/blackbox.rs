//! A deterministic black box with planted errors, and random instances for
//! experiments.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::decode::{cheb_probe_plan, power_probe_plan};
use crate::error::{invalid, Result};
use crate::scalar::{Felt, PrimeField};
use crate::sparse::{Basis, SparsePoly};

/// Evaluates a hidden polynomial, except at planned points where it returns
/// a fixed wrong value. Errors are keyed by the point, so a repeated probe
/// returns the same (wrong) answer.
#[derive(Clone, Debug)]
pub struct OracleBox {
    hidden: SparsePoly,
    error_plan: BTreeMap<Felt, Felt>,
    probe_log: Vec<Felt>,
}

impl OracleBox {
    /// Fails if a planned value equals the true evaluation or a planned
    /// point is a pole.
    pub fn new(hidden: SparsePoly, error_plan: BTreeMap<Felt, Felt>) -> Result<Self> {
        for (&x, &v) in &error_plan {
            if hidden.eval(x)? == v {
                return Err(invalid(format!("planned value {v} at {x} equals the true evaluation")));
            }
        }
        Ok(OracleBox { hidden, error_plan, probe_log: Vec::new() })
    }

    pub fn probe(&mut self, point: Felt) -> Result<Felt> {
        let v = match self.error_plan.get(&point) {
            Some(&v) => v,
            None => self.hidden.eval(point)?,
        };
        self.probe_log.push(point);
        Ok(v)
    }

    pub fn hidden(&self) -> &SparsePoly {
        &self.hidden
    }

    pub fn error_plan(&self) -> &BTreeMap<Felt, Felt> {
        &self.error_plan
    }

    /// Every probed point, in probe order (repeats included).
    pub fn probe_log(&self) -> &[Felt] {
        &self.probe_log
    }
}

/// A generated (or loaded) experiment: field, bounds, the hidden polynomial
/// and its error plan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub field: PrimeField,
    pub basis: Basis,
    pub b: usize,
    pub d: u64,
    pub e: usize,
    pub seed: u64,
    pub hidden: SparsePoly,
    pub errors: BTreeMap<Felt, Felt>,
    /// Recorded `(point, value)` pairs to check candidates against instead
    /// of the decoder's probe set. Points need not be distinct.
    pub transcript: Option<Vec<(Felt, Felt)>>,
}

impl Instance {
    pub fn oracle(&self) -> Result<OracleBox> {
        OracleBox::new(self.hidden.clone(), self.errors.clone())
    }
}

/// Parameters for [`make_instance`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InstanceConfig {
    pub p: u64,
    pub basis: Basis,
    pub b: usize,
    pub d: u64,
    pub e: usize,
    /// Number of terms of the hidden polynomial; `None` means `b`.
    pub t: Option<usize>,
}

/// Draws a hidden polynomial with exactly `t` terms (distinct uniform
/// degrees, uniform nonzero coefficients) and plants exactly `e` errors at
/// uniformly chosen points among those the standard decoder will probe.
/// Each wrong value is the true value plus a uniform nonzero offset.
pub fn make_instance(cfg: &InstanceConfig, seed: u64) -> Result<(Instance, OracleBox)> {
    let field = PrimeField::new(cfg.p)?;
    if cfg.b == 0 || cfg.d == 0 {
        return Err(invalid("B and D must be positive"));
    }
    let t = cfg.t.unwrap_or(cfg.b);
    if t > cfg.b {
        return Err(invalid(format!("t = {t} exceeds the sparsity bound B = {}", cfg.b)));
    }
    let plan = match cfg.basis {
        Basis::Power => power_probe_plan(field, cfg.b, cfg.d, cfg.e, seed)?,
        Basis::Chebyshev1 => cheb_probe_plan(field, cfg.b, cfg.d, cfg.e, seed)?,
    };

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = field.modulus();
    let (lo, width) = match cfg.basis {
        Basis::Power => (-(cfg.d as i64), 2 * cfg.d + 1),
        Basis::Chebyshev1 => (0, cfg.d + 1),
    };
    if (t as u64) > width {
        return Err(invalid(format!("cannot place {t} distinct degrees in a range of {width}")));
    }
    let degrees = sample(&mut rng, width as usize, t);
    let hidden =
        SparsePoly::new(field, cfg.basis, degrees.iter().map(|k| (lo + k as i64, field.elem(rng.gen_range(1..p)))))?;

    let points = plan.points();
    if cfg.e > points.len() {
        return Err(invalid("more errors than probe points"));
    }
    let mut errors = BTreeMap::new();
    for k in sample(&mut rng, points.len(), cfg.e) {
        let x = points[k];
        let offset = field.elem(rng.gen_range(1..p));
        errors.insert(x, hidden.eval(x)? + offset);
    }

    let inst =
        Instance { field, basis: cfg.basis, b: cfg.b, d: cfg.d, e: cfg.e, seed, hidden, errors, transcript: None };
    let oracle = inst.oracle()?;
    Ok((inst, oracle))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probe_examples() {
        let f = PrimeField::new(101).unwrap();
        let h = SparsePoly::from_ints(f, Basis::Power, &[(2, 3)]).unwrap();
        let mut clean = OracleBox::new(h.clone(), BTreeMap::new()).unwrap();
        assert_eq!(clean.probe(f.elem(4)).unwrap().residue(), 48);

        let mut bad = OracleBox::new(h.clone(), BTreeMap::from([(f.elem(4), f.elem(7))])).unwrap();
        assert_eq!(bad.probe(f.elem(4)).unwrap().residue(), 7);
        assert_eq!(bad.probe(f.elem(4)).unwrap().residue(), 7);
        assert_eq!(bad.probe_log(), &[f.elem(4), f.elem(4)]);

        let mut zero = OracleBox::new(SparsePoly::zero(f, Basis::Power), BTreeMap::new()).unwrap();
        assert!(zero.probe(f.elem(33)).unwrap().is_zero());

        assert!(OracleBox::new(h, BTreeMap::from([(f.elem(4), f.elem(48))])).is_err());
    }

    #[test]
    fn instances_are_reproducible_and_planted() {
        let cfg = InstanceConfig { p: 10007, basis: Basis::Power, b: 2, d: 50, e: 2, t: None };
        let (a, oracle) = make_instance(&cfg, 7).unwrap();
        let (b, _) = make_instance(&cfg, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.hidden.sparsity(), 2);
        assert!(a.hidden.max_abs_degree() <= 50);
        let plan = power_probe_plan(a.field, 2, 50, 2, 7).unwrap();
        let wrong =
            plan.points().iter().filter(|&&x| oracle.clone().probe(x).unwrap() != a.hidden.eval(x).unwrap()).count();
        assert_eq!(wrong, 2);

        let cfg = InstanceConfig { p: 101, basis: Basis::Power, b: 1, d: 10, e: 0, t: None };
        let (c, _) = make_instance(&cfg, 3).unwrap();
        assert_eq!(c.hidden.sparsity(), 1);
        assert!(c.errors.is_empty());
    }

    #[test]
    fn chebyshev_instances_need_large_order() {
        let cfg = InstanceConfig { p: 101, basis: Basis::Chebyshev1, b: 1, d: 100, e: 0, t: None };
        assert!(matches!(make_instance(&cfg, 1), Err(crate::Error::SelectionExhausted(_))));
        let cfg = InstanceConfig { p: 10007, basis: Basis::Chebyshev1, b: 3, d: 40, e: 3, t: Some(2) };
        let (inst, _) = make_instance(&cfg, 1).unwrap();
        assert_eq!(inst.hidden.sparsity(), 2);
        assert_eq!(inst.errors.len(), 3);
    }
}
