//! Execution strategy for the data-parallel loops (subset enumeration,
//! sign-vector feasibility, Möbius rows, corpus sweeps).
//!
//! With the `parallel` feature (on by default) [`Exec::Parallel`] runs on
//! the rayon global pool. Without it, `Parallel` silently degrades to the
//! sequential path so callers never need their own `cfg`s. Both paths
//! return results in input order, so output is identical either way.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

impl Exec {
    /// Whether this build can actually run [`Exec::Parallel`] in parallel.
    pub const fn parallel_available() -> bool {
        cfg!(feature = "parallel")
    }

    /// Order-preserving map over a slice.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
            _ => items.iter().map(f).collect(),
        }
    }

    /// Order-preserving map over `0..n`.
    pub fn map_range<R, F>(self, n: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..n).into_par_iter().map(f).collect()
            }
            _ => (0..n).map(f).collect(),
        }
    }
}
