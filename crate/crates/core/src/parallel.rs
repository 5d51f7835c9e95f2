//! Worker pool sizing. `HERMHULL_THREADS` caps the number of rayon workers
//! used by enumerations and sweeps; otherwise rayon's global pool is used.

use std::sync::OnceLock;

use rayon::ThreadPool;

pub const THREADS_ENV: &str = "HERMHULL_THREADS";

fn pool() -> Option<&'static ThreadPool> {
    static POOL: OnceLock<Option<ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let n: usize = std::env::var(THREADS_ENV).ok()?.trim().parse().ok()?;
        rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build().ok()
    })
    .as_ref()
}

/// Runs `op` inside the capped pool when one is configured.
pub fn install<R: Send>(op: impl FnOnce() -> R + Send) -> R {
    match pool() {
        Some(p) => p.install(op),
        None => op(),
    }
}
