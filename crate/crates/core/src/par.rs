//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) [`Execution::Parallel`] runs on the
//! rayon global pool; without it both variants run sequentially. Results are
//! always returned in input order, so output never depends on scheduling.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Below this many items the parallel path is not worth the fork/join.
pub(crate) const MIN_PARALLEL_BATCH: usize = 64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
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
        if self.is_parallel() && items.len() >= MIN_PARALLEL_BATCH {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Like `map`, but for closures producing several outputs each; the
    /// concatenation preserves input order.
    pub fn flat_map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T, &mut Vec<R>) + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() && items.len() >= MIN_PARALLEL_BATCH {
            let chunks: Vec<Vec<R>> = items
                .par_chunks(MIN_PARALLEL_BATCH)
                .map(|chunk| {
                    let mut out = Vec::new();
                    for x in chunk {
                        f(x, &mut out);
                    }
                    out
                })
                .collect();
            return chunks.into_iter().flatten().collect();
        }
        let mut out = Vec::new();
        for x in items {
            f(x, &mut out);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let xs: Vec<u32> = (0..1000).collect();
        let seq = Execution::Sequential.flat_map(&xs, |&x, out| out.extend([x, x * 2]));
        let par = Execution::Parallel.flat_map(&xs, |&x, out| out.extend([x, x * 2]));
        assert_eq!(seq, par);
        assert_eq!(Execution::Parallel.map(&xs, |x| x + 1), Execution::Sequential.map(&xs, |x| x + 1));
    }
}
