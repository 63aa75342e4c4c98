//! Scriptable surface over the analysis library: survey and census tables,
//! single-graph reports, the built-in theorem checklist, and the evidence
//! scanners. Everything here is deterministic for fixed flags; worker counts
//! change speed, never bytes.

pub mod analyze;
pub mod render;
pub mod survey;
pub mod verify;

/// Runs `f` on a rayon pool with the requested number of workers, or on the
/// global pool when unspecified.
pub fn with_jobs<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match jobs {
        None => f(),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("worker pool")
            .install(f),
    }
}
