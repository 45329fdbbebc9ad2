//! Slopes, stability of interval modules, and total stability.
//!
//! A central charge is encoded by a weight `w` and a strictly positive `r`;
//! the slope of a dimension vector `d` is `(w . d) / (r . d)`. All
//! comparisons are exact.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{TypeAQuiver, VertexSet};
use crate::rational::Rational;
use crate::rep::{all_indecomposables, indecomposable_subreps, HeadClosure, IntervalModule};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CentralCharge {
    w: Vec<Rational>,
    r: Vec<Rational>,
}

impl CentralCharge {
    pub fn new(w: Vec<Rational>, r: Vec<Rational>) -> Result<Self> {
        if w.len() != r.len() {
            return Err(Error::LengthMismatch { expected: r.len(), found: w.len() });
        }
        check_positive(&r)?;
        Ok(CentralCharge { w, r })
    }

    pub fn n(&self) -> usize {
        self.r.len()
    }

    pub fn w(&self) -> &[Rational] {
        &self.w
    }

    pub fn r(&self) -> &[Rational] {
        &self.r
    }

    pub fn into_parts(self) -> (Vec<Rational>, Vec<Rational>) {
        (self.w, self.r)
    }

    /// `w . d` for a 0/1 (or any nonnegative) dimension vector.
    pub fn w_of(&self, d: &[u32]) -> Rational {
        weighted(&self.w, d)
    }

    pub fn r_of(&self, d: &[u32]) -> Rational {
        weighted(&self.r, d)
    }

    pub fn slope(&self, d: &[u32]) -> Result<Rational> {
        if d.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), found: d.len() });
        }
        if d.iter().all(|&x| x == 0) {
            return Err(Error::ZeroDimension);
        }
        Ok(self.w_of(d) / self.r_of(d))
    }

    /// Slope of the indecomposable supported on `s`.
    pub fn slope_of_set(&self, s: &VertexSet) -> Rational {
        let w: Rational = s.vertices().iter().map(|&z| &self.w[z - 1]).sum();
        let r: Rational = s.vertices().iter().map(|&z| &self.r[z - 1]).sum();
        w / r
    }

    pub(crate) fn check_len(&self, q: &TypeAQuiver) -> Result<()> {
        if self.n() != q.n() {
            return Err(Error::LengthMismatch { expected: q.n(), found: self.n() });
        }
        Ok(())
    }
}

/// The charge `(-w, r)`.
///
/// Vector-space duality sends representations of `Q` to representations of
/// the opposite quiver, exchanging subobjects and quotients while preserving
/// slopes. Since `mu(W) < mu(V)` iff `mu(V) < mu(V/W)`, stability of `V`
/// under `(w, r)` matches stability of its dual under `(-w, r)`, not under
/// the same charge.
pub fn dual_charge(z: &CentralCharge) -> CentralCharge {
    CentralCharge { w: z.w.iter().map(|x| -x).collect(), r: z.r.clone() }
}

pub(crate) fn check_positive(r: &[Rational]) -> Result<()> {
    match r.iter().position(|x| !x.is_positive()) {
        Some(index) => Err(Error::NonPositiveR { index: index + 1 }),
        None => Ok(()),
    }
}

fn weighted(v: &[Rational], d: &[u32]) -> Rational {
    v.iter()
        .zip(d)
        .filter(|(_, &k)| k != 0)
        .map(|(x, &k)| if k == 1 { x.clone() } else { x * &Rational::from(i64::from(k)) })
        .sum()
}

/// `(w . d) / (r . d)`.
pub fn slope(z: &CentralCharge, d: &[u32]) -> Result<Rational> {
    z.slope(d)
}

/// King's weight `theta = r(V) w - w(V) r`, which vanishes on `dim V`.
pub fn theta_weight(z: &CentralCharge, v: &IntervalModule) -> Vec<Rational> {
    let d = v.dimension_vector();
    let rv = z.r_of(&d);
    let wv = z.w_of(&d);
    z.w.iter().zip(&z.r).map(|(wi, ri)| &rv * wi - &wv * ri).collect()
}

/// Which subrepresentations [`is_stable`] tests against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum StabilityMode {
    /// Every head-closed support; bounded by the enumeration guard.
    AllSubreps,
    /// Indecomposable subrepresentations only.
    IndecomposableSubreps,
}

// Sum of `v` over the vertices lo+i with bit i of `mask` set.
fn mask_sum(v: &[Rational], lo: usize, mask: u32) -> Rational {
    let mut acc = Rational::zero();
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        acc += &v[lo - 1 + i];
        bits &= bits - 1;
    }
    acc
}

// mu(W) < mu(V) without division: r is positive.
fn strictly_below(w_sub: &Rational, r_sub: &Rational, w_v: &Rational, r_v: &Rational) -> bool {
    w_sub * r_v < w_v * r_sub
}

/// `true` when every proper nonzero subrepresentation of `v` in the chosen
/// class has strictly smaller slope than `v`.
pub fn is_stable(z: &CentralCharge, q: &TypeAQuiver, v: &IntervalModule, mode: StabilityMode) -> Result<bool> {
    Ok(destabilizing_subrep(z, q, v, mode)?.is_none())
}

/// First proper nonzero subrepresentation (as a support) whose slope is not
/// strictly below that of `v`.
pub fn destabilizing_subrep(
    z: &CentralCharge,
    q: &TypeAQuiver,
    v: &IntervalModule,
    mode: StabilityMode,
) -> Result<Option<VertexSet>> {
    z.check_len(q)?;
    let d = v.dimension_vector();
    let (w_v, r_v) = (z.w_of(&d), z.r_of(&d));
    match mode {
        StabilityMode::AllSubreps => {
            let closure = HeadClosure::new(q, v)?;
            let full = closure.full();
            for mask in closure.closed_masks().filter(|&m| m != 0 && m != full) {
                let w_sub = mask_sum(&z.w, v.lo(), mask);
                let r_sub = mask_sum(&z.r, v.lo(), mask);
                if !strictly_below(&w_sub, &r_sub, &w_v, &r_v) {
                    let support = (0..closure.len).filter(|i| mask >> i & 1 == 1).map(|i| v.lo() + i).collect();
                    return Ok(Some(VertexSet::new(support)));
                }
            }
            Ok(None)
        }
        StabilityMode::IndecomposableSubreps => {
            for sub in indecomposable_subreps(q, v).into_iter().filter(|s| s != v) {
                let ds = sub.dimension_vector();
                if !strictly_below(&z.w_of(&ds), &z.r_of(&ds), &w_v, &r_v) {
                    return Ok(Some(sub.support()));
                }
            }
            Ok(None)
        }
    }
}

/// King stability: `theta(V) = 0` and `theta(W) < 0` for every proper
/// nonzero subrepresentation `W`.
pub fn is_theta_stable(theta: &[Rational], q: &TypeAQuiver, v: &IntervalModule) -> Result<bool> {
    if theta.len() != q.n() {
        return Err(Error::LengthMismatch { expected: q.n(), found: theta.len() });
    }
    let closure = HeadClosure::new(q, v)?;
    let full = closure.full();
    if !mask_sum(theta, v.lo(), full).is_zero() {
        return Ok(false);
    }
    Ok(closure.closed_masks().filter(|&m| m != 0 && m != full).all(|m| mask_sum(theta, v.lo(), m).is_negative()))
}

/// Which chain of level sets an inequality comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum LevelFamily {
    X,
    Y,
}

/// One strict inequality `mu([lhs]) > mu([rhs])` between level sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inequality {
    pub family: LevelFamily,
    /// Index `k` of the pair `(X_k, X_{k+1})` or `(Y_k, Y_{k+1})`.
    pub level: usize,
    pub lhs: VertexSet,
    pub rhs: VertexSet,
}

impl Inequality {
    pub fn holds(&self, z: &CentralCharge) -> bool {
        z.slope_of_set(&self.lhs) > z.slope_of_set(&self.rhs)
    }
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mu[{}] > mu[{}]", self.lhs, self.rhs)
    }
}

/// The `n - 1` inequalities characterizing total stability, X-part first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InequalitySystem {
    pub n: usize,
    pub records: Vec<Inequality>,
}

impl InequalitySystem {
    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// 1-based indices of every record that fails under `z`.
    pub fn violated(&self, z: &CentralCharge) -> Vec<usize> {
        self.records.iter().enumerate().filter(|(_, rec)| !rec.holds(z)).map(|(i, _)| i + 1).collect()
    }
}

pub fn total_stability_inequalities(q: &TypeAQuiver) -> InequalitySystem {
    let levels = q.level_sets();
    let x = levels.x_levels.windows(2).enumerate().map(|(k, pair)| Inequality {
        family: LevelFamily::X,
        level: k,
        lhs: pair[0].clone(),
        rhs: pair[1].clone(),
    });
    // mu(Y_k) < mu(Y_{k+1}), restated with the larger side first
    let y = levels.y_levels.windows(2).enumerate().map(|(k, pair)| Inequality {
        family: LevelFamily::Y,
        level: k,
        lhs: pair[1].clone(),
        rhs: pair[0].clone(),
    });
    InequalitySystem { n: q.n(), records: x.chain(y).collect() }
}

/// Outcome of the inequality test; on failure carries the first violated
/// record in system order (1-based index).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    TotallyStable,
    Violated { index: usize, inequality: Inequality },
}

impl Verdict {
    pub fn is_totally_stable(&self) -> bool {
        matches!(self, Verdict::TotallyStable)
    }
}

/// Decides total stability from the `n - 1` level-set inequalities.
pub fn is_totally_stable_fast(q: &TypeAQuiver, z: &CentralCharge) -> Result<Verdict> {
    z.check_len(q)?;
    let system = total_stability_inequalities(q);
    Ok(system
        .records
        .into_iter()
        .enumerate()
        .find(|(_, rec)| !rec.holds(z))
        .map_or(Verdict::TotallyStable, |(i, inequality)| Verdict::Violated { index: i + 1, inequality }))
}

/// An indecomposable together with a subrepresentation that destabilizes it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub module: IntervalModule,
    pub subrep: VertexSet,
}

/// Brute force: the first indecomposable (in enumeration order) that is not
/// stable, with the offending subrepresentation.
pub fn oracle_counterexample(q: &TypeAQuiver, z: &CentralCharge) -> Result<Option<Counterexample>> {
    z.check_len(q)?;
    for v in all_indecomposables(q) {
        if let Some(subrep) = destabilizing_subrep(z, q, &v, StabilityMode::AllSubreps)? {
            return Ok(Some(Counterexample { module: v, subrep }));
        }
    }
    Ok(None)
}

/// Decides total stability by testing every indecomposable against every
/// one of its subrepresentations.
pub fn is_totally_stable_oracle(q: &TypeAQuiver, z: &CentralCharge) -> Result<bool> {
    Ok(oracle_counterexample(q, z)?.is_none())
}

/// Slopes strictly decrease along the X-chain and strictly increase along
/// the Y-chain.
///
/// The X-chain members are nested subrepresentations and the Y-chain members
/// successive quotients of `[1..n]`, so every totally stable charge passes.
/// The converse fails: on `RR` with `w = (1, 1, -1)`, `r = (1, 1, 1)` both
/// chains hold while `mu([1]) = mu([2])`.
pub fn check_chains(q: &TypeAQuiver, z: &CentralCharge) -> Result<bool> {
    z.check_len(q)?;
    let levels = q.level_sets();
    let monotone = |chain: &[VertexSet], want: Ordering| {
        let slopes: Vec<Rational> = chain.iter().map(|s| z.slope_of_set(s)).collect();
        slopes.windows(2).all(|p| p[0].cmp(&p[1]) == want)
    };
    Ok(monotone(&levels.x_chains, Ordering::Greater) && monotone(&levels.y_chains, Ordering::Less))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::dot;
    use crate::rep::interval_module;

    fn q(word: &str) -> TypeAQuiver {
        word.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    fn charge(w: &[i64], r: &[i64]) -> CentralCharge {
        CentralCharge::new(ints(w), ints(r)).unwrap()
    }

    #[test]
    fn slope_examples() {
        assert_eq!(charge(&[1, 2], &[1, 1]).slope(&[1, 1]).unwrap(), Rational::new(3, 2));
        assert_eq!(charge(&[5, 7], &[2, 3]).slope(&[0, 1]).unwrap(), Rational::new(7, 3));
        let z = charge(&[3, 1, 4], &[3, 1, 4]);
        for d in [[1, 0, 0], [0, 1, 1], [1, 1, 1], [2, 0, 5]] {
            assert_eq!(z.slope(&d).unwrap(), Rational::one());
        }
        assert_eq!(z.slope(&[0, 0, 0]).unwrap_err(), Error::ZeroDimension);
        assert!(z.slope(&[1, 0]).is_err());
    }

    #[test]
    fn charge_validation() {
        assert_eq!(CentralCharge::new(ints(&[1, 2]), ints(&[1, 0])).unwrap_err(), Error::NonPositiveR { index: 2 });
        assert!(CentralCharge::new(ints(&[1, 2]), ints(&[-1, 1])).is_err());
        assert!(CentralCharge::new(ints(&[1]), ints(&[1, 1])).is_err());
    }

    #[test]
    fn theta_examples() {
        let two = q("R");
        let v = interval_module(&two, 1, 2).unwrap();
        let theta = theta_weight(&charge(&[1, 0], &[1, 1]), &v);
        assert_eq!(theta, ints(&[1, -1]));
        assert!(dot(&theta, &ints(&[1, 1])).is_zero());

        let z = charge(&[2, 3], &[2, 3]);
        assert!(theta_weight(&z, &v).iter().all(Rational::is_zero));

        let three = q("RR");
        let v = interval_module(&three, 2, 2).unwrap();
        assert_eq!(theta_weight(&charge(&[3, 1, 2], &[1, 1, 1]), &v), ints(&[2, 0, 1]));
    }

    #[test]
    fn stability_examples() {
        let rr = q("RR");
        let v = interval_module(&rr, 1, 2).unwrap();
        for mode in [StabilityMode::AllSubreps, StabilityMode::IndecomposableSubreps] {
            assert!(!is_stable(&charge(&[0, 1, 0], &[1, 1, 1]), &rr, &v, mode).unwrap());
            assert!(is_stable(&charge(&[1, 0, 0], &[1, 1, 1]), &rr, &v, mode).unwrap());
            let simple = interval_module(&rr, 2, 2).unwrap();
            assert!(is_stable(&charge(&[0, 0, 0], &[1, 1, 1]), &rr, &simple, mode).unwrap());
        }
        let got = destabilizing_subrep(&charge(&[0, 1, 0], &[1, 1, 1]), &rr, &v, StabilityMode::AllSubreps).unwrap();
        assert_eq!(got.unwrap().to_string(), "{2}");
    }

    #[test]
    fn theta_stability_examples() {
        let rr = q("RR");
        let v = interval_module(&rr, 1, 2).unwrap();
        let zero = ints(&[0, 0, 0]);
        assert!(!is_theta_stable(&zero, &rr, &v).unwrap());
        assert!(is_theta_stable(&zero, &rr, &interval_module(&rr, 3, 3).unwrap()).unwrap());
        let theta = theta_weight(&charge(&[1, 0, 0], &[1, 1, 1]), &v);
        assert_eq!(theta, ints(&[1, -1, -1]));
        assert!(is_theta_stable(&theta, &rr, &v).unwrap());
        // theta(V) != 0
        assert!(!is_theta_stable(&ints(&[1, 0, 0]), &rr, &v).unwrap());
    }

    #[test]
    fn duality_negates_weight() {
        let right = q("R");
        let left = right.opposite();
        let z = charge(&[1, 0], &[1, 1]);
        assert!(is_totally_stable_oracle(&right, &z).unwrap());
        // same charge on the opposite quiver: [1] is now a subobject of slope 1 > 1/2
        assert!(!is_totally_stable_oracle(&left, &z).unwrap());
        assert!(!is_totally_stable_fast(&left, &z).unwrap().is_totally_stable());
        let dual = dual_charge(&z);
        assert_eq!(dual.w(), &ints(&[-1, 0])[..]);
        assert!(is_totally_stable_oracle(&left, &dual).unwrap());
        assert!(is_totally_stable_fast(&left, &dual).unwrap().is_totally_stable());
    }

    #[test]
    fn inequality_examples() {
        let lines = |word: &str| {
            total_stability_inequalities(&q(word)).records.iter().map(ToString::to_string).collect::<Vec<_>>()
        };
        assert_eq!(
            lines("RRLRRLR"),
            [
                "mu[{1}] > mu[{2}]",
                "mu[{2}] > mu[{3,4}]",
                "mu[{3,4}] > mu[{5}]",
                "mu[{5}] > mu[{6,7}]",
                "mu[{6,7}] > mu[{8}]",
                "mu[{4,5,6}] > mu[{1,2,3}]",
                "mu[{7,8}] > mu[{4,5,6}]",
            ]
        );
        assert!(lines("").is_empty());
        assert_eq!(lines("RR"), ["mu[{1}] > mu[{2}]", "mu[{2}] > mu[{3}]"]);
    }

    #[test]
    fn fast_and_oracle_examples() {
        let a1 = q("");
        let z = charge(&[5], &[3]);
        assert!(is_totally_stable_fast(&a1, &z).unwrap().is_totally_stable());
        assert!(is_totally_stable_oracle(&a1, &z).unwrap());
        assert!(check_chains(&a1, &z).unwrap());

        let rr = q("RR");
        let good = charge(&[2, 1, 0], &[1, 1, 1]);
        assert_eq!(is_totally_stable_fast(&rr, &good).unwrap(), Verdict::TotallyStable);
        assert!(is_totally_stable_oracle(&rr, &good).unwrap());
        assert!(check_chains(&rr, &good).unwrap());

        let bad = charge(&[0, 1, 2], &[1, 1, 1]);
        match is_totally_stable_fast(&rr, &bad).unwrap() {
            Verdict::Violated { index, inequality } => {
                assert_eq!(index, 1);
                assert_eq!(inequality.to_string(), "mu[{1}] > mu[{2}]");
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(!is_totally_stable_oracle(&rr, &bad).unwrap());

        let flat = charge(&[0, 0, 0], &[1, 1, 1]);
        assert!(!is_totally_stable_oracle(&rr, &flat).unwrap());
        assert!(!is_totally_stable_fast(&rr, &flat).unwrap().is_totally_stable());

        assert!(is_totally_stable_fast(&rr, &charge(&[1], &[1])).is_err());
    }
}
