//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature, [`ExecMode::Parallel`] runs on a rayon pool
//! capped at the requested thread count. Without it every mode runs
//! sequentially. Results always come back in index order.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecMode {
    Sequential,
    /// Up to `threads` workers; `0` means one per logical processor.
    Parallel { threads: usize },
    #[default]
    Auto,
}

/// Environment variable capping run-level parallelism.
pub const THREADS_ENV: &str = "DACOPT_THREADS";

impl ExecMode {
    /// `Parallel` capped by `DACOPT_THREADS` when set, else all processors.
    pub fn from_env() -> Self {
        match std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok()) {
            Some(1) => ExecMode::Sequential,
            Some(n) => ExecMode::Parallel { threads: n },
            None => ExecMode::Parallel { threads: 0 },
        }
    }

    fn resolve(self) -> Self {
        match self {
            ExecMode::Auto => Self::from_env(),
            other => other,
        }
    }
}

/// `(0..n).map(f)` evaluated under `mode`, preserving order.
pub fn map_indexed<T, F>(n: usize, mode: ExecMode, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match mode.resolve() {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel { threads } => {
            use rayon::prelude::*;
            let run = || (0..n).into_par_iter().map(&f).collect();
            if threads == 0 {
                run()
            } else {
                match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
                    Ok(pool) => pool.install(run),
                    Err(_) => (0..n).map(&f).collect(),
                }
            }
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Whether this build can actually run in parallel.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let seq = map_indexed(1000, ExecMode::Sequential, |i| i * i);
        let par = map_indexed(1000, ExecMode::Parallel { threads: 4 }, |i| i * i);
        assert_eq!(seq, par);
        assert_eq!(seq[31], 961);
    }
}
