//! Sequential/parallel execution switch for the data-parallel loops
//! (candidate enumeration, census-wide checks).
//!
//! With the `parallel` feature disabled, [`Execution::Parallel`] silently runs
//! sequentially; results are identical either way because every caller sorts
//! or preserves input order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }

    /// Maps `f` over `items`, preserving order.
    pub fn map<T, R, F>(self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }

    /// Maps `f` over `0..len` and keeps the `Some` results, in index order.
    pub fn filter_map_range<R, F>(self, len: usize, f: F) -> Vec<R>
    where
        R: Send,
        F: Fn(usize) -> Option<R> + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self.is_parallel() {
            use rayon::prelude::*;
            return (0..len).into_par_iter().filter_map(f).collect();
        }
        (0..len).filter_map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_strategies_agree() {
        let items: Vec<u64> = (0..1000).collect();
        let a = Execution::Sequential.map(&items, |x| x * x);
        let b = Execution::Parallel.map(&items, |x| x * x);
        assert_eq!(a, b);
        let c = Execution::Parallel.filter_map_range(100, |i| (i % 7 == 0).then_some(i));
        let d = Execution::Sequential.filter_map_range(100, |i| (i % 7 == 0).then_some(i));
        assert_eq!(c, d);
    }
}
