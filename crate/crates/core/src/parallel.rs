//! Execution policy for data-parallel loops.
//!
//! With the `parallel` feature (default) `Exec::Parallel` runs on the rayon
//! pool; without it every policy runs sequentially.

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Maps `f` over `items`, preserving order.
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

    /// Maps `f` over `0..n` and folds the results with `reduce`, starting
    /// every chunk from `init()`.
    pub fn map_reduce<R, F, I, G>(self, n: usize, init: I, f: F, reduce: G) -> R
    where
        R: Send,
        I: Fn() -> R + Sync + Send,
        F: Fn(&mut R, usize) + Sync + Send,
        G: Fn(R, R) -> R + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                (0..n)
                    .into_par_iter()
                    .fold(&init, |mut acc, i| {
                        f(&mut acc, i);
                        acc
                    })
                    .reduce(&init, &reduce)
            }
            _ => {
                let _ = &reduce;
                let mut acc = init();
                for i in 0..n {
                    f(&mut acc, i);
                }
                acc
            }
        }
    }
}
