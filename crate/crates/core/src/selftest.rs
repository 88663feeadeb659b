//! Built-in acceptance run behind `spinterp selftest`.
//!
//! Decodes a grid of random instances in both bases, checks probe counts,
//! recovery and list-size bounds, and cross-checks the symbolic determinant
//! and bivariate solver code against cofactor expansion and exhaustive
//! search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::blackbox::{make_instance, InstanceConfig};
use crate::decode::{
    cheb_list_bound, cheb_one_error_bound, cheb_probe_count, decode_e, one_error_bound, power_list_bound,
    power_probe_count, power_probe_plan, two_error_bound, verify_candidate, BlockKind, DecodeResult, EvalBlock,
};
use crate::fixtures::non_unique_example;
use crate::generator::{det_bivariate, fold_det_sym, hankel_det_sym, pham_system_sym};
use crate::pham::solve_pham;
use crate::poly::BiPoly;
use crate::scalar::{distinct_roots, Felt, PointLayout, PrimeField};
use crate::sparse::Basis;

/// Outcome of one numbered check.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Parameters of the decoding grid.
#[derive(Clone, Copy, Debug)]
pub struct GridConfig {
    pub p: u64,
    pub power_d: u64,
    pub cheb_d: u64,
    pub max_b: usize,
    pub max_e: usize,
    pub seeds: u64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig { p: 10007, power_d: 50, cheb_d: 40, max_b: 4, max_e: 5, seeds: 20 }
    }
}

struct GridStats {
    recovered: usize,
    total: usize,
    problems: Vec<String>,
    results: Vec<(usize, usize, Basis, DecodeResult)>,
    middle_trials: usize,
    middle_misses: usize,
}

fn run_grid(cfg: &GridConfig, basis: Basis) -> GridStats {
    let d = if basis == Basis::Power { cfg.power_d } else { cfg.cheb_d };
    let mut st = GridStats {
        recovered: 0,
        total: 0,
        problems: Vec::new(),
        results: Vec::new(),
        middle_trials: 0,
        middle_misses: 0,
    };
    for b in 1..=cfg.max_b {
        for e in 0..=cfg.max_e {
            for s in 0..cfg.seeds {
                st.total += 1;
                let seed = 1_000_000 * b as u64 + 1000 * e as u64 + s;
                let icfg = InstanceConfig { p: cfg.p, basis, b, d, e, t: None };
                let run = make_instance(&icfg, seed).and_then(|(inst, mut oracle)| {
                    let res = decode_e(&mut oracle, basis, b, d, e, inst.field, seed)?;
                    Ok((inst, oracle, res))
                });
                let (inst, oracle, res) = match run {
                    Ok(x) => x,
                    Err(err) => {
                        st.problems.push(format!("{basis:?} B={b} E={e} seed={seed}: {err}"));
                        continue;
                    }
                };
                let n = match basis {
                    Basis::Power => power_probe_count(b, e),
                    Basis::Chebyshev1 => cheb_probe_count(b, e),
                };
                if res.probes_used != n || oracle.probe_log().len() != n {
                    st.problems
                        .push(format!("{basis:?} B={b} E={e} seed={seed}: {} probes, expected {n}", res.probes_used));
                }
                if res.candidates.iter().any(|c| c.poly == inst.hidden) {
                    st.recovered += 1;
                } else {
                    st.problems.push(format!("{basis:?} B={b} E={e} seed={seed}: hidden polynomial missing"));
                }
                if basis == Basis::Power {
                    let plan = power_probe_plan(inst.field, b, d, e, seed).expect("plan built before");
                    for (&w, &len) in plan.bases.iter().zip(&plan.lengths) {
                        if len < 3 * b {
                            continue;
                        }
                        let pts: Vec<Felt> = (1..=3 * b).map(|i| PointLayout::Powers.point(w, i)).collect();
                        let vals: Vec<Felt> =
                            pts.iter().map(|x| *inst.errors.get(x).unwrap_or(&inst.hidden.eval(*x).unwrap())).collect();
                        let wrong: Vec<usize> =
                            (0..3 * b).filter(|&k| inst.errors.contains_key(&pts[k])).map(|k| k + 1).collect();
                        if let [l] = wrong[..] {
                            if l > b && l <= 2 * b {
                                st.middle_trials += 1;
                                let delta = hankel_det_sym(&vals, (l - b) as i64, l as i64, b).expect("valid window");
                                let truth = inst.hidden.eval(pts[l - 1]).unwrap();
                                if !distinct_roots(&delta).map(|r| r.contains(&truth)).unwrap_or(false) {
                                    st.middle_misses += 1;
                                }
                            }
                        }
                    }
                }
                st.results.push((b, e, basis, res));
            }
        }
    }
    st
}

fn grid_check(id: u8, name: &'static str, st: &GridStats) -> Check {
    let mut detail = format!("{}/{} recovered", st.recovered, st.total);
    if let Some(p) = st.problems.first() {
        detail.push_str(&format!("; {} problems, first: {p}", st.problems.len()));
    }
    Check { id, name, passed: st.problems.is_empty() && st.recovered == st.total, detail }
}

fn list_check(grids: &[&GridStats]) -> Check {
    let mut violations = 0;
    let mut runs = 0;
    for st in grids {
        for (b, e, basis, res) in &st.results {
            runs += 1;
            for blk in &res.blocks {
                let bound = match blk.kind {
                    BlockKind::Prony => 1,
                    BlockKind::PowerOneError => one_error_bound(*b),
                    BlockKind::PowerTwoErrors => two_error_bound(*b),
                    BlockKind::ChebOneError => cheb_one_error_bound(*b),
                };
                violations += usize::from(blk.list_size > bound);
            }
            let total = match basis {
                Basis::Power => power_list_bound(*b, *e),
                Basis::Chebyshev1 => cheb_list_bound(*b, *e),
            };
            violations += usize::from(res.candidates.len() > total);
        }
    }
    Check {
        id: 3,
        name: "list-size bounds",
        passed: violations == 0,
        detail: format!("{runs} runs, {violations} violations"),
    }
}

/// Determinant of a matrix of bivariate polynomials by cofactor expansion.
fn cofactor_det(m: &[Vec<BiPoly>]) -> BiPoly {
    if m.len() == 1 {
        return m[0][0].clone();
    }
    let mut acc = BiPoly::zero(m[0][0].field());
    for j in 0..m.len() {
        let minor: Vec<Vec<BiPoly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, e)| e.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn var(f: PrimeField, i: u32, j: u32) -> BiPoly {
    BiPoly::from_terms(f, [((i, j), f.one())])
}

fn cst(c: Felt) -> BiPoly {
    BiPoly::from_terms(c.field(), [((0, 0), c)])
}

fn univariate_eq(p: &crate::poly::UniPoly, q: &BiPoly) -> bool {
    let lifted = BiPoly::from_terms(p.field(), p.coeffs().iter().enumerate().map(|(i, &c)| ((i as u32, 0), c)));
    &lifted == q
}

fn structure_check(rng: &mut ChaCha8Rng) -> Check {
    let f = PrimeField::new(10007).unwrap();
    let mut bad = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=6usize);
        let k = if n > 1 { rng.gen_range(1..n) } else { 1 };
        let c: Vec<Vec<Felt>> = (0..n).map(|_| (0..n).map(|_| f.elem(rng.gen_range(0..10007))).collect()).collect();
        let pick = |i: usize, j: usize, x1: Felt, x2: Felt| {
            if i == j {
                x1
            } else if j == i + k {
                x2
            } else {
                c[i][j]
            }
        };
        let got = det_bivariate(f, n, |x1, x2| (0..n).map(|i| (0..n).map(|j| pick(i, j, x1, x2)).collect()).collect())
            .unwrap();
        let sym: Vec<Vec<BiPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            var(f, 1, 0)
                        } else if j == i + k {
                            var(f, 0, 1)
                        } else {
                            cst(c[i][j])
                        }
                    })
                    .collect()
            })
            .collect();
        let mut rest = got.clone();
        rest.add_term(n as u32, 0, -f.one());
        if got != cofactor_det(&sym)
            || !got.coeff(n as u32, 0).is_one()
            || rest.total_degree().is_some_and(|d| d >= n as u32)
        {
            bad += 1;
        }
    }
    Check {
        id: 4,
        name: "diagonal-dominant determinant structure",
        passed: bad == 0,
        detail: format!("200 matrices, {bad} failures"),
    }
}

fn solver_check(rng: &mut ChaCha8Rng) -> Check {
    let mut bad = 0;
    for p in [11u64, 101] {
        let f = PrimeField::new(p).unwrap();
        for t in 0..100 {
            let b = 1 + t % 3;
            let evals: Vec<Felt> = (0..4 * b).map(|_| f.elem(rng.gen_range(0..p))).collect();
            let (d1, d2) =
                pham_system_sym(&evals, rng.gen_range(b + 1..=2 * b), rng.gen_range(2 * b + 1..=3 * b), b).unwrap();
            let brute: Vec<(Felt, Felt)> = f
                .elements()
                .flat_map(|x| f.elements().map(move |y| (x, y)))
                .filter(|&(x, y)| d1.eval(x, y).is_zero() && d2.eval(x, y).is_zero())
                .collect();
            match solve_pham(&d1, &d2, b) {
                Ok(s) if s == brute && s.len() <= (b + 1) * (b + 1) => {}
                _ => bad += 1,
            }
        }
    }
    Check {
        id: 5,
        name: "bivariate solver vs exhaustive search",
        passed: bad == 0,
        detail: format!("200 systems, {bad} failures"),
    }
}

fn fold_symbolic(odd: &[Felt], r: i64, sym: i64, b: usize) -> BiPoly {
    let f = odd[0].field();
    let a = |n: i64| if n.abs() == sym { var(f, 1, 0) } else { cst(odd[(n.unsigned_abs() as usize - 1) / 2]) };
    let m: Vec<Vec<BiPoly>> =
        (0..=b as i64).map(|i| (0..=b as i64).map(|j| &a(r + 2 * (i + j)) + &a(r + 2 * (i - j))).collect()).collect();
    cofactor_det(&m)
}

fn fold_check(rng: &mut ChaCha8Rng) -> Check {
    let f = PrimeField::new(10007).unwrap();
    let mut bad = 0;
    for t in 0..100 {
        let b = 1 + t % 4;
        let odd: Vec<Felt> = (0..3 * b).map(|_| f.elem(rng.gen_range(0..10007))).collect();
        let r = 2 * rng.gen_range(0..b) as i64 + 1;
        for sym in [r, r + 2 * b as i64] {
            let got = fold_det_sym(&odd, r, sym, b).unwrap();
            if got.degree() != Some(b + 1) || !univariate_eq(&got, &fold_symbolic(&odd, r, sym, b)) {
                bad += 1;
            }
        }
    }
    Check {
        id: 6,
        name: "fold determinant degree",
        passed: bad == 0,
        detail: format!("200 determinants, {bad} failures"),
    }
}

fn middle_check(st: &GridStats) -> Check {
    let f = PrimeField::new(101).unwrap();
    let pinned = hankel_det_sym(&[f.elem(12), f.zero(), f.elem(91)], 1, 2, 1)
        .ok()
        .and_then(|d| distinct_roots(&d).ok())
        .is_some_and(|r| r == vec![f.elem(48), f.elem(53)]);
    Check {
        id: 7,
        name: "single-error value among determinant roots",
        passed: pinned && st.middle_misses == 0 && st.middle_trials > 0,
        detail: format!(
            "{} middle-error windows, {} misses, pinned case {}",
            st.middle_trials,
            st.middle_misses,
            if pinned { "ok" } else { "wrong" }
        ),
    }
}

fn non_unique_check() -> Check {
    let ex = non_unique_example();
    let entries = ex.points.iter().zip(&ex.values).enumerate().map(|(k, (&x, &v))| (k + 1, x, v)).collect();
    let blocks = [EvalBlock { base: ex.omega, layout: PointLayout::ChebyshevOdd, entries }];
    let (m1, m2) = (verify_candidate(&ex.f1, &blocks), verify_candidate(&ex.f2, &blocks));
    Check {
        id: 8,
        name: "two valid interpolants for one sequence",
        passed: m1.len() == ex.e && m2.len() == ex.e,
        detail: format!("f1 mismatches {m1:?}, f2 mismatches {m2:?}"),
    }
}

fn det_check(rng: &mut ChaCha8Rng) -> Check {
    let f = PrimeField::new(10007).unwrap();
    let mut bad = 0;
    for t in 0..100 {
        let b = 1 + t % 4;
        let ev: Vec<Felt> = (0..4 * b).map(|_| f.elem(rng.gen_range(0..10007))).collect();
        let l = rng.gen_range(b + 1..=2 * b);
        let h: Vec<Vec<BiPoly>> = (0..=b)
            .map(|i| {
                (0..=b).map(|j| if l - b + i + j == l { var(f, 1, 0) } else { cst(ev[l - b + i + j - 1]) }).collect()
            })
            .collect();
        bad +=
            usize::from(!univariate_eq(&hankel_det_sym(&ev, (l - b) as i64, l as i64, b).unwrap(), &cofactor_det(&h)));

        let r = 2 * rng.gen_range(0..b) as i64 + 1;
        bad += usize::from(!univariate_eq(
            &fold_det_sym(&ev[..3 * b], r, r, b).unwrap(),
            &fold_symbolic(&ev[..3 * b], r, r, b),
        ));

        let (l1, l2) = (rng.gen_range(b + 1..=2 * b), rng.gen_range(2 * b + 1..=3 * b));
        let sym = |r: usize| -> Vec<Vec<BiPoly>> {
            (0..=b)
                .map(|i| {
                    (0..=b)
                        .map(|j| match r + i + j {
                            k if k == l1 => var(f, 1, 0),
                            k if k == l2 => var(f, 0, 1),
                            k => cst(ev[k - 1]),
                        })
                        .collect()
                })
                .collect()
        };
        let (d1, d2) = pham_system_sym(&ev, l1, l2, b).unwrap();
        bad += usize::from(d1 != cofactor_det(&sym(l1 - b)) || d2 != cofactor_det(&sym(l2 - b)));
    }
    Check {
        id: 9,
        name: "evaluation-interpolation vs cofactor determinants",
        passed: bad == 0,
        detail: format!("300 determinants, {bad} mismatches"),
    }
}

/// Runs all nine checks.
pub fn run(cfg: &GridConfig) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let power = run_grid(cfg, Basis::Power);
    let cheb = run_grid(cfg, Basis::Chebyshev1);
    vec![
        grid_check(1, "power-basis E-error round trip", &power),
        grid_check(2, "Chebyshev E-error round trip", &cheb),
        list_check(&[&power, &cheb]),
        structure_check(&mut rng),
        solver_check(&mut rng),
        fold_check(&mut rng),
        middle_check(&power),
        non_unique_check(),
        det_check(&mut rng),
    ]
}
