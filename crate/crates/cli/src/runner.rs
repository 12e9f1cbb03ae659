//! Parallel check execution with per-check random streams.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::report::{CheckResult, Status};

/// Environment variable capping the number of worker threads.
pub const THREADS_VAR: &str = "SKEIN_VERIFY_THREADS";

#[derive(Debug)]
pub enum Failure {
    /// The property was evaluated and does not hold.
    Fail(String),
    /// The check could not be evaluated.
    Error(String),
}

impl From<skein_core::Error> for Failure {
    fn from(e: skein_core::Error) -> Self {
        Failure::Error(e.to_string())
    }
}

pub type Outcome = Result<String, Failure>;

pub fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure::Fail(msg()))
    }
}

type Body = Box<dyn Fn(&mut ChaCha8Rng) -> Outcome + Send + Sync>;

pub struct Check {
    pub id: String,
    body: Body,
}

impl Check {
    pub fn new(id: impl Into<String>, body: impl Fn(&mut ChaCha8Rng) -> Outcome + Send + Sync + 'static) -> Self {
        Check {
            id: id.into(),
            body: Box::new(body),
        }
    }
}

/// 64-bit FNV-1a. Kept local so stream selection never depends on a std hasher.
fn fnv1a(s: &str) -> u64 {
    s.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0000_0100_0000_01b3))
}

/// ChaCha8 seeded with `seed`, on the stream selected by the FNV-1a hash of `id`.
pub fn check_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(fnv1a(id));
    rng
}

fn thread_cap() -> usize {
    std::env::var(THREADS_VAR)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0)
}

fn run_one(seed: u64, check: &Check) -> CheckResult {
    let start = Instant::now();
    let mut rng = check_rng(seed, &check.id);
    let outcome = catch_unwind(AssertUnwindSafe(|| (check.body)(&mut rng)));
    let (status, detail) = match outcome {
        Ok(Ok(detail)) => (Status::Pass, detail),
        Ok(Err(Failure::Fail(detail))) => (Status::Fail, detail),
        Ok(Err(Failure::Error(detail))) => (Status::Error, detail),
        Err(payload) => {
            let msg = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            (Status::Error, format!("panicked: {msg}"))
        }
    };
    CheckResult {
        id: check.id.clone(),
        status,
        detail,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// Run every check, in parallel when more than one thread is allowed.
pub fn run_checks(seed: u64, checks: &[Check]) -> Vec<CheckResult> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(thread_cap()).build();
    match pool {
        Ok(pool) => pool.install(|| checks.par_iter().map(|c| run_one(seed, c)).collect()),
        Err(_) => checks.iter().map(|c| run_one(seed, c)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_differ_by_id() {
        let a: u64 = check_rng(1, "x").random();
        let b: u64 = check_rng(1, "y").random();
        let c: u64 = check_rng(1, "x").random();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a(""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv1a("a"), 0xaf63_dc4c_8601_ec8c);
    }

    #[test]
    fn panics_become_errors() {
        let checks = vec![
            Check::new("ok", |_| Ok("fine".into())),
            Check::new("boom", |_| panic!("kaput")),
            Check::new("no", |_| Err(Failure::Fail("nope".into()))),
        ];
        let out = run_checks(0, &checks);
        assert_eq!(out[0].status, Status::Pass);
        assert_eq!(out[1].status, Status::Error);
        assert!(out[1].detail.contains("kaput"));
        assert_eq!(out[2].status, Status::Fail);
    }
}
