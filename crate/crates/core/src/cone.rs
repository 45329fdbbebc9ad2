//! The total-stability cone at a fixed `r`.
//!
//! With `r` fixed, each inequality `mu([L]) > mu([R])` becomes a linear form
//! in `w`:
//!
//! ```text
//!     f(w) = (1_L / r(L) - 1_R / r(R)) . w  > 0
//! ```
//!
//! The `n - 1` forms have rank `n - 1` and common kernel `span{r}`, so
//! `w |-> (r . w, f_1(w), ..., f_{n-1}(w))` is a linear isomorphism carrying
//! the fiber onto `R x R_{>0}^{n-1}`. Interior points and minimality
//! witnesses are obtained by inverting that map exactly.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::rref;
use crate::quiver::TypeAQuiver;
use crate::rational::{dot, Rational};
use crate::stability::{check_positive, total_stability_inequalities, InequalitySystem};

/// The inequality system as exact linear forms in `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LinearFormSystem {
    pub r: Vec<Rational>,
    pub forms: Vec<Vec<Rational>>,
    pub system: InequalitySystem,
}

impl LinearFormSystem {
    pub fn n(&self) -> usize {
        self.r.len()
    }

    /// Value of form `k` (1-based) at `w`.
    pub fn evaluate(&self, k: usize, w: &[Rational]) -> Rational {
        dot(&self.forms[k - 1], w)
    }

    pub fn evaluate_all(&self, w: &[Rational]) -> Vec<Rational> {
        self.forms.iter().map(|f| dot(f, w)).collect()
    }

    /// Coordinates `(r . w, f_1(w), ..., f_{n-1}(w))`.
    pub fn chart(&self, w: &[Rational]) -> (Rational, Vec<Rational>) {
        (dot(&self.r, w), self.evaluate_all(w))
    }

    /// The unique `w` with `r . w = height` and `f_k(w) = values[k-1]`.
    pub fn chart_inverse(&self, height: &Rational, values: &[Rational]) -> Result<Vec<Rational>> {
        if values.len() != self.forms.len() {
            return Err(Error::LengthMismatch { expected: self.forms.len(), found: values.len() });
        }
        let n = self.n();
        let rows: Vec<Vec<Rational>> = self
            .forms
            .iter()
            .zip(values)
            .chain(std::iter::once((&self.r, height)))
            .map(|(row, rhs)| row.iter().chain(std::iter::once(rhs)).cloned().collect())
            .collect();
        let reduced = rref(&rows, n + 1);
        // a pivot in every coefficient column, none in the right-hand side
        if reduced.pivots != (0..n).collect::<Vec<_>>() {
            return Err(Error::Invariant(format!(
                "chart system is singular or inconsistent (pivots {:?}, n = {n})",
                reduced.pivots
            )));
        }
        Ok(reduced.rows.into_iter().map(|row| row[n].clone()).collect())
    }
}

pub fn inequality_matrix(q: &TypeAQuiver, r: &[Rational]) -> Result<LinearFormSystem> {
    if r.len() != q.n() {
        return Err(Error::LengthMismatch { expected: q.n(), found: r.len() });
    }
    check_positive(r)?;
    let system = total_stability_inequalities(q);
    let mass = |s: &crate::quiver::VertexSet| -> Rational { s.vertices().iter().map(|&z| &r[z - 1]).sum() };
    let forms = system
        .records
        .iter()
        .map(|rec| {
            let (lhs_mass, rhs_mass) = (mass(&rec.lhs).recip(), mass(&rec.rhs).recip());
            (1..=q.n())
                .map(|z| {
                    let mut c = Rational::zero();
                    if rec.lhs.contains(z) {
                        c += &lhs_mass;
                    }
                    if rec.rhs.contains(z) {
                        c = c - &rhs_mass;
                    }
                    c
                })
                .collect()
        })
        .collect();
    Ok(LinearFormSystem { r: r.to_vec(), forms, system })
}

/// A weight `w` making `(w, r)` totally stable: every form equals 1 and
/// `r . w = 0`.
pub fn construct_total(q: &TypeAQuiver, r: &[Rational]) -> Result<Vec<Rational>> {
    let forms = inequality_matrix(q, r)?;
    let ones = vec![Rational::one(); forms.forms.len()];
    forms.chart_inverse(&Rational::zero(), &ones)
}

/// A weight violating inequality `k` (1-based) and satisfying all others:
/// form `k` equals -1, the rest equal 1, and `r . w = 0`.
pub fn minimality_witness(q: &TypeAQuiver, r: &[Rational], k: usize) -> Result<Vec<Rational>> {
    let forms = inequality_matrix(q, r)?;
    let count = forms.forms.len();
    if k == 0 || k > count {
        return Err(Error::RecordIndex { k, count });
    }
    let mut values = vec![Rational::one(); count];
    values[k - 1] = -Rational::one();
    forms.chart_inverse(&Rational::zero(), &values)
}

/// Rank and kernel of the form matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    pub rank: usize,
    pub kernel_basis: Vec<Vec<Rational>>,
    /// Rank is `n - 1` and the kernel is exactly the line through `r`.
    pub is_chart: bool,
}

pub fn lineality_check(q: &TypeAQuiver, r: &[Rational]) -> Result<FiberReport> {
    let forms = inequality_matrix(q, r)?;
    let reduced = rref(&forms.forms, q.n());
    let rank = reduced.rank();
    let kernel_basis = reduced.kernel_basis();
    let is_chart = rank + 1 == q.n() && kernel_basis.len() == 1 && is_parallel(&kernel_basis[0], r);
    Ok(FiberReport { rank, kernel_basis, is_chart })
}

/// `a` is a nonzero multiple of `b`.
pub fn is_parallel(a: &[Rational], b: &[Rational]) -> bool {
    let Some(i) = b.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let scale = &a[i] / &b[i];
    !scale.is_zero() && a.iter().zip(b).all(|(x, y)| *x == &scale * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stability::{is_totally_stable_fast, is_totally_stable_oracle, CentralCharge};

    fn q(word: &str) -> TypeAQuiver {
        word.parse().unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from(x)).collect()
    }

    #[test]
    fn forms_rr() {
        let f = inequality_matrix(&q("RR"), &ints(&[1, 1, 1])).unwrap();
        assert_eq!(f.forms, vec![ints(&[1, -1, 0]), ints(&[0, 1, -1])]);
    }

    #[test]
    fn forms_rl() {
        let f = inequality_matrix(&q("RL"), &ints(&[1, 1, 1])).unwrap();
        let half = Rational::new(1, 2);
        assert_eq!(f.forms[0], vec![Rational::one(), -&half, -&half]);
        assert_eq!(f.forms[1], vec![-&half, -&half, Rational::one()]);
    }

    #[test]
    fn forms_vanish_at_r() {
        let r = vec![Rational::new(3, 2), Rational::from(2), Rational::new(1, 7), Rational::from(5)];
        for word in ["RRR", "RLR", "LLR", "LRL"] {
            let f = inequality_matrix(&q(word), &r).unwrap();
            assert!(f.evaluate_all(&r).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn rejects_bad_r() {
        assert_eq!(inequality_matrix(&q("R"), &ints(&[1, 0])).unwrap_err(), Error::NonPositiveR { index: 2 });
        assert!(inequality_matrix(&q("R"), &ints(&[1])).is_err());
    }

    #[test]
    fn construct_examples() {
        assert_eq!(construct_total(&q(""), &ints(&[7])).unwrap(), ints(&[0]));
        assert_eq!(construct_total(&q("RR"), &ints(&[1, 1, 1])).unwrap(), ints(&[1, 0, -1]));

        let ex = q("RRLRRLR");
        let r = ints(&[1; 8]);
        let w = construct_total(&ex, &r).unwrap();
        let z = CentralCharge::new(w, r).unwrap();
        assert!(is_totally_stable_fast(&ex, &z).unwrap().is_totally_stable());
        assert!(is_totally_stable_oracle(&ex, &z).unwrap());
    }

    #[test]
    fn witness_examples() {
        let rr = q("RR");
        let r = ints(&[1, 1, 1]);
        let w1 = minimality_witness(&rr, &r, 1).unwrap();
        let f = inequality_matrix(&rr, &r).unwrap();
        assert_eq!(f.evaluate_all(&w1), ints(&[-1, 1]));
        assert_eq!(w1, vec![Rational::new(-1, 3), Rational::new(2, 3), Rational::new(-1, 3)]);
        let w2 = minimality_witness(&rr, &r, 2).unwrap();
        assert_eq!(f.evaluate_all(&w2), ints(&[1, -1]));

        assert!(minimality_witness(&rr, &r, 0).is_err());
        assert_eq!(minimality_witness(&rr, &r, 3).unwrap_err(), Error::RecordIndex { k: 3, count: 2 });
        assert!(minimality_witness(&q(""), &ints(&[1]), 1).is_err());

        let ex = q("RRLRRLR");
        let r = ints(&[1; 8]);
        let system = total_stability_inequalities(&ex);
        for k in 1..=7 {
            let w = minimality_witness(&ex, &r, k).unwrap();
            let z = CentralCharge::new(w, r.clone()).unwrap();
            assert_eq!(system.violated(&z), vec![k]);
        }
    }

    #[test]
    fn lineality_examples() {
        let report = lineality_check(&q(""), &ints(&[4])).unwrap();
        assert_eq!((report.rank, report.is_chart), (0, true));
        assert_eq!(report.kernel_basis, vec![ints(&[1])]);

        let report = lineality_check(&q("RR"), &ints(&[1, 1, 1])).unwrap();
        assert_eq!(report.rank, 2);
        assert_eq!(report.kernel_basis, vec![ints(&[1, 1, 1])]);
        assert!(report.is_chart);

        let r = ints(&[2, 9, 1, 4, 4, 7, 3, 5]);
        let report = lineality_check(&q("RRLRRLR"), &r).unwrap();
        assert_eq!(report.rank, 7);
        assert!(is_parallel(&report.kernel_basis[0], &r));
    }

    #[test]
    fn chart_roundtrip() {
        let ex = q("RLLRL");
        let r = vec![
            Rational::new(1, 2),
            Rational::from(3),
            Rational::new(5, 4),
            Rational::from(1),
            Rational::from(2),
            Rational::new(7, 3),
        ];
        let f = inequality_matrix(&ex, &r).unwrap();
        let w = ints(&[4, -2, 0, 9, 1, -5]);
        let (h, values) = f.chart(&w);
        assert_eq!(f.chart_inverse(&h, &values).unwrap(), w);
    }
}
