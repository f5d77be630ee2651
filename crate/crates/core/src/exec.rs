//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (on by default) the batch evaluations fan out
//! over rayon's global pool. Without it, or with [`Execution::Sequential`],
//! everything runs on the calling thread. Results are identical either way:
//! every helper here preserves input order.

/// How batch evaluations are scheduled.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Falls back to sequential when built without the `parallel` feature.
    #[default]
    Parallel,
}

impl Execution {
    /// True when this strategy will actually use worker threads.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Execution::Parallel
    }
}

pub(crate) fn map<T, R, F>(exec: Execution, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

pub(crate) fn count<T, F>(exec: Execution, items: &[T], pred: F) -> usize
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().filter(|x| pred(x)).count();
    }
    let _ = exec;
    items.iter().filter(|x| pred(x)).count()
}

/// Index of the first item (in input order) satisfying `pred`.
pub(crate) fn position_first<T, F>(exec: Execution, items: &[T], pred: F) -> Option<usize>
where
    T: Sync,
    F: Fn(&T) -> bool + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().position_first(pred);
    }
    let _ = exec;
    items.iter().position(pred)
}

/// Runs `f` over `0..n` and returns the first `Some` by index.
pub(crate) fn find_map_first<R, F>(exec: Execution, n: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().find_map_first(f);
    }
    let _ = exec;
    (0..n).find_map(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strategies_agree() {
        let xs: Vec<u32> = (0..1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert_eq!(map(exec, &xs, |x| x * 2)[999], 1998);
            assert_eq!(count(exec, &xs, |x| x % 3 == 0), 334);
            assert_eq!(position_first(exec, &xs, |&x| x > 500 && x % 7 == 0), Some(504));
            assert_eq!(find_map_first(exec, 100, |i| (i > 40).then_some(i)), Some(41));
        }
    }
}
