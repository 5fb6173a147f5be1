//! Data-parallel inner loops with a sequential fallback. The `parallel`
//! feature enables the rayon path; without it the `Rayon` strategy
//! degrades to the sequential implementation. Benchmarks select the
//! strategy explicitly so both paths stay comparable.

/// Execution strategy for the data-parallel kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    /// Work-stealing via rayon when the `parallel` feature is enabled;
    /// otherwise identical to `Sequential`.
    #[default]
    Rayon,
}

/// Maps `map` over `items` and folds the results with `reduce`, either
/// sequentially or via rayon's work-stealing reduce.
pub fn map_reduce<T, R, M, Z, F>(par: Parallelism, items: &[T], map: M, zero: Z, reduce: F) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    Z: Fn() -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par == Parallelism::Rayon {
        use rayon::prelude::*;
        return items.par_iter().map(&map).reduce(&zero, &reduce);
    }
    let _ = par;
    items.iter().map(&map).fold(zero(), &reduce)
}

/// Maps `map` over `items`, preserving order.
pub fn map_collect<T, R, M>(par: Parallelism, items: &[T], map: M) -> Vec<R>
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if par == Parallelism::Rayon {
        use rayon::prelude::*;
        return items.par_iter().map(&map).collect();
    }
    let _ = par;
    items.iter().map(&map).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let items: Vec<u64> = (1..=100).collect();
        let seq = map_reduce(Parallelism::Sequential, &items, |&x| x * x, || 0, |a, b| a + b);
        let par = map_reduce(Parallelism::Rayon, &items, |&x| x * x, || 0, |a, b| a + b);
        assert_eq!(seq, par);
        assert_eq!(seq, 338350);
        assert_eq!(
            map_collect(Parallelism::Rayon, &items, |&x| x + 1),
            (2..=101).collect::<Vec<u64>>()
        );
    }
}
