#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::Serialize;

use super::RngStream;

/// How the per-stream work is scheduled. Results do not depend on it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Execution {
    Sequential,
    /// Streams run on the rayon pool; without the `parallel` feature this
    /// behaves like [`Execution::Sequential`].
    #[default]
    Parallel,
}

pub const DEFAULT_STREAMS: usize = 8;

/// Seed, stream partition and scheduling of a Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct McConfig {
    pub seed: u64,
    pub streams: usize,
    pub execution: Execution,
}

impl McConfig {
    pub fn new(seed: u64) -> Self {
        Self { seed, streams: DEFAULT_STREAMS, execution: Execution::default() }
    }

    pub fn with_streams(mut self, streams: usize) -> Self {
        self.streams = streams.max(1);
        self
    }

    pub fn with_execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }
}

/// Sample counts per stream: `total / streams` each, the first
/// `total % streams` streams take one more.
pub fn stream_counts(total: u64, streams: usize) -> Vec<u64> {
    let s = streams.max(1) as u64;
    (0..s).map(|i| total / s + u64::from(i < total % s)).collect()
}

/// Run `work(rng, count)` once per stream and return the results in stream order.
pub fn run_streams<T, F>(total: u64, config: &McConfig, work: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut RngStream, u64) -> T + Sync + Send,
{
    let counts = stream_counts(total, config.streams);
    let job = |(id, &count): (usize, &u64)| work(&mut RngStream::new(config.seed, id as u64), count);
    match config.execution {
        #[cfg(feature = "parallel")]
        Execution::Parallel => counts.par_iter().enumerate().map(job).collect(),
        _ => counts.iter().enumerate().map(job).collect(),
    }
}

/// Running mean and sum of squared deviations.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Moments {
    pub count: u64,
    pub mean: f64,
    pub m2: f64,
}

impl Moments {
    pub fn push(&mut self, x: f64) {
        self.count += 1;
        let delta = x - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (x - self.mean);
    }

    pub fn merge(&mut self, other: &Moments) {
        if other.count == 0 {
            return;
        }
        let n = self.count + other.count;
        let delta = other.mean - self.mean;
        self.mean += delta * other.count as f64 / n as f64;
        self.m2 += other.m2 + delta * delta * (self.count as f64) * (other.count as f64) / n as f64;
        self.count = n;
    }

    pub fn variance(&self) -> f64 {
        if self.count < 2 {
            0.0
        } else {
            self.m2 / (self.count - 1) as f64
        }
    }

    pub fn std_error(&self) -> f64 {
        if self.count == 0 {
            0.0
        } else {
            (self.variance() / self.count as f64).sqrt()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn counts_partition_the_total() {
        assert_eq!(stream_counts(10, 3), vec![4, 3, 3]);
        assert_eq!(stream_counts(2, 4), vec![1, 1, 0, 0]);
        assert_eq!(stream_counts(7, 0), vec![7]);
        assert_eq!(stream_counts(1_000_003, 8).iter().sum::<u64>(), 1_000_003);
    }

    #[test]
    fn execution_modes_agree_bitwise() {
        let work = |rng: &mut RngStream, count: u64| {
            let mut m = Moments::default();
            for _ in 0..count {
                m.push(rng.random::<f64>());
            }
            m
        };
        let seq = run_streams(100_001, &McConfig::new(3).with_execution(Execution::Sequential), work);
        let par = run_streams(100_001, &McConfig::new(3).with_execution(Execution::Parallel), work);
        assert_eq!(seq, par);
    }

    #[test]
    fn merged_moments_match_a_single_pass() {
        let xs: Vec<f64> = (0..1000).map(|i| ((i * 37) % 101) as f64 / 7.0).collect();
        let mut whole = Moments::default();
        xs.iter().for_each(|&x| whole.push(x));
        let mut merged = Moments::default();
        for chunk in xs.chunks(123) {
            let mut part = Moments::default();
            chunk.iter().for_each(|&x| part.push(x));
            merged.merge(&part);
        }
        assert_eq!(merged.count, whole.count);
        assert!((merged.mean - whole.mean).abs() < 1e-12);
        assert!((merged.variance() - whole.variance()).abs() < 1e-10);
    }
}
