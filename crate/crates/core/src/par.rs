//! Instance-level data parallelism.
//!
//! With the `parallel` feature, [`ExecMode::Parallel`] fans out over rayon's
//! pool; without it every mode runs sequentially. Results always come back
//! in input order.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExecMode {
    Sequential,
    #[default]
    Parallel,
}

pub fn map<T, R, F>(mode: ExecMode, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match mode {
        #[cfg(feature = "parallel")]
        ExecMode::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// True when [`ExecMode::Parallel`] actually runs on a thread pool.
pub fn parallel_available() -> bool {
    cfg!(feature = "parallel")
}
