//! Switch between rayon-backed and plain sequential evaluation.
//!
//! With the `parallel` feature disabled every mode runs sequentially, so the
//! rest of the crate can ask for [`Execution::Parallel`] unconditionally.
//! All reductions used through this module are order independent.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    pub fn map_range<R, F>(self, range: Range<usize>, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(f).collect();
        }
        range.map(f).collect()
    }

    /// Minimum of `f(i)` over `range` under `better`, ignoring `None`s.
    /// `better` must be a strict total order for the result to be
    /// independent of evaluation order.
    pub fn min_range<R, F, B>(self, range: Range<usize>, f: F, better: B) -> Option<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
        B: Fn(&R, &R) -> bool + Sync + Send,
    {
        let pick = |a: Option<R>, b: Option<R>| match (a, b) {
            (Some(a), Some(b)) => Some(if better(&b, &a) { b } else { a }),
            (a, None) => a,
            (None, b) => b,
        };
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return range.into_par_iter().map(&f).reduce(|| None, pick);
        }
        range.map(f).fold(None, pick)
    }

    pub fn join<A, B, RA, RB>(self, a: A, b: B) -> (RA, RB)
    where
        A: FnOnce() -> RA + Send,
        B: FnOnce() -> RB + Send,
        RA: Send,
        RB: Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            return rayon::join(a, b);
        }
        (a(), b())
    }
}
