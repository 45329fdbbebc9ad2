//! Interval modules and their subrepresentations.
//!
//! Every indecomposable representation of a type A quiver is thin: it is one
//! dimensional on an interval `[lo..hi]` of vertices and zero elsewhere, with
//! identity maps along the arrows inside the interval. A subrepresentation
//! of such a module is therefore determined by its support, and a support is
//! admissible exactly when it is closed under following arrows forward
//! (head-closed) inside the interval.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver::{Arrow, TypeAQuiver, VertexSet};

/// Longest interval for which [`subrepresentations`] enumerates all `2^k`
/// candidate supports.
pub const MAX_ENUMERATION_LEN: usize = 24;

/// The indecomposable `[lo..hi]` of a quiver with `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntervalModule {
    lo: usize,
    hi: usize,
    n: usize,
}

impl IntervalModule {
    pub fn new(q: &TypeAQuiver, lo: usize, hi: usize) -> Result<Self> {
        let n = q.n();
        if lo == 0 || lo > hi || hi > n {
            return Err(Error::VertexOutOfRange { lo, hi, n });
        }
        Ok(IntervalModule { lo, hi, n })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Length of the ambient quiver.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of vertices in the support; never zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_simple(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, z: usize) -> bool {
        self.lo <= z && z <= self.hi
    }

    pub fn support(&self) -> VertexSet {
        VertexSet::range(self.lo, self.hi)
    }

    pub fn dimension_vector(&self) -> Vec<u32> {
        (1..=self.n).map(|z| u32::from(self.contains(z))).collect()
    }
}

impl fmt::Display for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}..{}]", self.lo, self.hi)
    }
}

/// Shorthand for [`IntervalModule::new`].
pub fn interval_module(q: &TypeAQuiver, lo: usize, hi: usize) -> Result<IntervalModule> {
    IntervalModule::new(q, lo, hi)
}

/// All `n(n+1)/2` indecomposables, ordered by `lo` then `hi`.
pub fn all_indecomposables(q: &TypeAQuiver) -> Vec<IntervalModule> {
    let n = q.n();
    (1..=n).flat_map(|lo| (lo..=n).map(move |hi| IntervalModule { lo, hi, n })).collect()
}

/// A subrepresentation of an interval module, identified by its support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubrepSet {
    pub support: VertexSet,
    /// Maximal runs of consecutive vertices in `support`; the indecomposable
    /// summands of the subrepresentation.
    pub runs: Vec<IntervalModule>,
}

/// Bit masks describing head-closure inside one interval. Bit `i` stands for
/// vertex `lo + i`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct HeadClosure {
    pub(crate) len: usize,
    // bit i set: arrow lo+i -> lo+i+1
    right: u32,
    // bit i set: arrow lo+i+1 -> lo+i
    left: u32,
}

impl HeadClosure {
    pub(crate) fn new(q: &TypeAQuiver, v: &IntervalModule) -> Result<Self> {
        let len = v.len();
        if len > MAX_ENUMERATION_LEN {
            return Err(Error::EnumerationBound { len, bound: MAX_ENUMERATION_LEN });
        }
        let (mut right, mut left) = (0u32, 0u32);
        for i in 0..len - 1 {
            match q.arrow(v.lo + i) {
                Arrow::Right => right |= 1 << i,
                Arrow::Left => left |= 1 << i,
            }
        }
        Ok(HeadClosure { len, right, left })
    }

    pub(crate) fn full(&self) -> u32 {
        ((1u64 << self.len) - 1) as u32
    }

    pub(crate) fn is_closed(&self, mask: u32) -> bool {
        let forced_right = (mask & self.right) << 1;
        let forced_left = (mask >> 1) & self.left;
        (forced_right | forced_left) & !mask == 0
    }

    /// Head-closed masks in increasing numeric order.
    pub(crate) fn closed_masks(self) -> impl Iterator<Item = u32> {
        (0..=self.full()).filter(move |&m| self.is_closed(m))
    }
}

fn mask_to_subrep(v: &IntervalModule, mask: u32) -> SubrepSet {
    let mut support = Vec::new();
    let mut runs = Vec::new();
    let mut run_start: Option<usize> = None;
    for i in 0..=v.len() {
        let inside = i < v.len() && mask >> i & 1 == 1;
        let z = v.lo + i;
        match (inside, run_start) {
            (true, None) => run_start = Some(z),
            (false, Some(start)) => {
                runs.push(IntervalModule { lo: start, hi: z - 1, n: v.n });
                run_start = None;
            }
            _ => {}
        }
        if inside {
            support.push(z);
        }
    }
    SubrepSet { support: VertexSet::new(support), runs }
}

/// Every subrepresentation of `v`, from the zero subrepresentation to `v`
/// itself.
///
/// Supports are listed by increasing bit mask, bit `i` standing for vertex
/// `lo + i`. Intervals longer than [`MAX_ENUMERATION_LEN`] are rejected.
pub fn subrepresentations(q: &TypeAQuiver, v: &IntervalModule) -> Result<Vec<SubrepSet>> {
    let closure = HeadClosure::new(q, v)?;
    Ok(closure.closed_masks().map(|m| mask_to_subrep(v, m)).collect())
}

/// Indecomposable subrepresentations of `v`, including `v` itself.
///
/// `[a..b]` qualifies when nothing inside `v` points out of it: the arrow
/// below `a` (if inside `v`) points into `a`, and the arrow above `b` points
/// into `b`. Ordered as the single-run members of [`subrepresentations`].
pub fn indecomposable_subreps(q: &TypeAQuiver, v: &IntervalModule) -> Vec<IntervalModule> {
    let starts: Vec<usize> = (v.lo..=v.hi).filter(|&a| a == v.lo || q.arrow(a - 1) == Arrow::Right).collect();
    let mut out = Vec::new();
    for b in (v.lo..=v.hi).filter(|&b| b == v.hi || q.arrow(b) == Arrow::Left) {
        for &a in starts.iter().rev().filter(|&&a| a <= b) {
            out.push(IntervalModule { lo: a, hi: b, n: v.n });
        }
    }
    out
}

/// The indecomposables whose support contains the last vertex `n`.
pub fn supports_containing_n(q: &TypeAQuiver) -> Vec<IntervalModule> {
    let n = q.n();
    (1..=n).map(|lo| IntervalModule { lo, hi: n, n }).collect()
}
