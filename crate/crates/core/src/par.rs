//! Execution policy for the data-parallel sweeps.
//!
//! With the `parallel` feature the [`Exec::Parallel`] policy maps work items
//! on the rayon pool; without it every policy runs sequentially. Results are
//! always returned in input order, so output never depends on scheduling.

/// How a sweep distributes its independent work items.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// Maps `f` over `items`, preserving order.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            Exec::Parallel => par_map(items, f),
        }
    }

    /// Maps `f` over `items` and concatenates the per-item vectors in order.
    pub fn flat_map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> Vec<U> + Sync + Send,
    {
        self.map(items, f).into_iter().flatten().collect()
    }

    /// True when this policy actually runs on more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

#[cfg(feature = "parallel")]
fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    items.iter().map(f).collect()
}

/// Runs `op` on a pool of `jobs` worker threads.
///
/// `None` uses the global pool. Without the `parallel` feature the job count
/// is ignored.
#[cfg(feature = "parallel")]
pub fn with_jobs<R, OP>(jobs: Option<usize>, op: OP) -> R
where
    R: Send,
    OP: FnOnce() -> R + Send,
{
    match jobs {
        None => op(),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        },
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<R, OP>(_jobs: Option<usize>, op: OP) -> R
where
    R: Send,
    OP: FnOnce() -> R + Send,
{
    op()
}
