//! IO, reports, and batch verification for the multigraded algebra engine.
//!
//! The core crate carries the algebra; this one carries everything that
//! touches the outside world: JSON input schemas, deterministic run
//! reports, the subcommand implementations, and the full verification
//! suite behind `csgin verify-all`.

pub mod exec;
pub mod input;
pub mod report;
pub mod verify;

/// Worker count for batch verification: `CSGIN_THREADS` when set, the
/// available parallelism otherwise.
pub fn thread_count() -> usize {
    if let Ok(v) = std::env::var("CSGIN_THREADS") {
        if let Ok(n) = v.trim().parse::<usize>() {
            return n.max(1);
        }
    }
    std::thread::available_parallelism().map_or(1, |n| n.get())
}
