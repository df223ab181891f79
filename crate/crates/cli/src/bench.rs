//! Classical-vs-sampled timing harness.
//!
//! Each (task, size) pair is timed for every method over the same number of
//! runs, with the methods interleaved inside each run. Speedups are computed
//! from medians.

use std::fmt;
use std::hint::black_box;
use std::io::Write;
use std::time::Instant;

use cdsreg_core::{
    build_cds, period_cds, period_classical, sampling_stats, shortest_cover_cds,
    shortest_cover_classical,
};
use serde::Serialize;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Task {
    Period,
    Cover,
}

impl Task {
    pub fn name(self) -> &'static str {
        match self {
            Task::Period => "period",
            Task::Cover => "cover",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Classical,
    /// Sampling construction included in the timed region.
    Cds,
    /// Sampling built beforehand, outside the timed region.
    CdsPretimed,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Classical => "classical",
            Method::Cds => "cds",
            Method::CdsPretimed => "cds-pretimed",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub runs: usize,
    pub tasks: Vec<Task>,
    pub pretimed: bool,
}

impl BenchConfig {
    fn methods(&self) -> Vec<Method> {
        let mut m = vec![Method::Classical, Method::Cds];
        if self.pretimed {
            m.push(Method::CdsPretimed);
        }
        m
    }

    /// Method compared against the classical one in the speedup figures.
    pub fn speedup_method(&self) -> Method {
        if self.pretimed {
            Method::CdsPretimed
        } else {
            Method::Cds
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchEntry {
    /// `<task>/<method>`, e.g. `period/cds`.
    pub name: String,
    pub size: usize,
    pub mean_ns: u64,
    pub median_ns: u64,
    pub stddev_ns: u64,
}

impl BenchEntry {
    pub fn task(&self) -> &str {
        self.name.split_once('/').map_or("", |(t, _)| t)
    }

    pub fn method(&self) -> &str {
        self.name.split_once('/').map_or("", |(_, m)| m)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Speedup {
    pub task: Task,
    pub size: usize,
    pub percent: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SamplingEntry {
    pub size: usize,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub input: String,
    pub sizes: Vec<usize>,
    pub runs: usize,
    pub entries: Vec<BenchEntry>,
    pub speedups: Vec<Speedup>,
    pub sampling: Vec<SamplingEntry>,
}

impl BenchReport {
    pub fn entry(&self, task: Task, method: Method, size: usize) -> Option<&BenchEntry> {
        self.entries
            .iter()
            .find(|e| e.size == size && e.task() == task.name() && e.method() == method.name())
    }

    pub fn speedup(&self, task: Task, size: usize) -> Option<f64> {
        self.speedups
            .iter()
            .find(|s| s.task == task && s.size == size)
            .map(|s| s.percent)
    }

    pub fn write_json<W: Write>(&self, w: W) -> Result<(), CliError> {
        serde_json::to_writer_pretty(w, self)?;
        Ok(())
    }

    /// Columns: `task,size,method,mean_ns,median_ns,stddev_ns`.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), CliError> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record([
            "task",
            "size",
            "method",
            "mean_ns",
            "median_ns",
            "stddev_ns",
        ])?;
        for e in &self.entries {
            out.write_record([
                e.task().to_string(),
                e.size.to_string(),
                e.method().to_string(),
                e.mean_ns.to_string(),
                e.median_ns.to_string(),
                e.stddev_ns.to_string(),
            ])?;
        }
        out.flush().map_err(|source| CliError::Io {
            path: "<csv>".into(),
            source,
        })?;
        Ok(())
    }

    pub fn write_summary<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "input: {}  runs: {}", self.input, self.runs)?;
        writeln!(
            w,
            "{:<7} {:>10} {:>16} {:>14} {:>14} {:>9}",
            "task", "size", "method", "median_ns", "mean_ns", "speedup"
        )?;
        for e in &self.entries {
            let speedup = if e.method() == Method::Classical.name() {
                String::new()
            } else {
                let classical = self.entries.iter().find(|c| {
                    c.size == e.size && c.task() == e.task() && c.method() == "classical"
                });
                classical
                    .map(|c| format!("{:.2}%", speedup_percent(c.median_ns, e.median_ns)))
                    .unwrap_or_default()
            };
            writeln!(
                w,
                "{:<7} {:>10} {:>16} {:>14} {:>14} {:>9}",
                e.task(),
                e.size,
                e.method(),
                e.median_ns,
                e.mean_ns,
                speedup
            )?;
        }
        for s in &self.sampling {
            writeln!(
                w,
                "sampling {:>10}: {:.2}% entries/text ({:.2}% at 4 bytes/entry)",
                s.size,
                100.0 * s.ratio,
                400.0 * s.ratio
            )?;
        }
        Ok(())
    }
}

/// `100 * (classical - cds) / classical`.
pub fn speedup_percent(classical_ns: u64, cds_ns: u64) -> f64 {
    if classical_ns == 0 {
        return 0.0;
    }
    100.0 * (classical_ns as f64 - cds_ns as f64) / classical_ns as f64
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingStats {
    pub mean_ns: u64,
    pub median_ns: u64,
    pub stddev_ns: u64,
}

/// Mean, median and sample standard deviation (0 for a single sample).
pub fn timing_stats(samples: &[u64]) -> TimingStats {
    assert!(!samples.is_empty());
    let n = samples.len();
    let mut sorted = samples.to_vec();
    sorted.sort_unstable();
    let median = if n % 2 == 1 {
        sorted[n / 2]
    } else {
        (sorted[n / 2 - 1] + sorted[n / 2]) / 2
    };
    let mean = samples.iter().map(|&s| s as f64).sum::<f64>() / n as f64;
    let var = if n > 1 {
        samples
            .iter()
            .map(|&s| (s as f64 - mean).powi(2))
            .sum::<f64>()
            / (n - 1) as f64
    } else {
        0.0
    };
    TimingStats {
        mean_ns: mean.round() as u64,
        median_ns: median,
        stddev_ns: var.sqrt().round() as u64,
    }
}

fn run_once(
    task: Task,
    method: Method,
    x: &[u8],
    view: &cdsreg_core::CdsView,
) -> Result<usize, CliError> {
    let r = match (task, method) {
        (Task::Period, Method::Classical) => period_classical(x)?,
        (Task::Period, Method::Cds) => period_cds(&build_cds(x)?, x)?,
        (Task::Period, Method::CdsPretimed) => period_cds(view, x)?,
        (Task::Cover, Method::Classical) => shortest_cover_classical(x)?,
        (Task::Cover, Method::Cds) => shortest_cover_cds(&build_cds(x)?, x)?,
        (Task::Cover, Method::CdsPretimed) => shortest_cover_cds(view, x)?,
    };
    Ok(r)
}

/// Times every configured task and method on prefixes of `text`.
pub fn run_bench(text: &[u8], input: &str, config: &BenchConfig) -> Result<BenchReport, CliError> {
    if config.runs == 0 {
        return Err(CliError::Usage("runs must be at least 1".into()));
    }
    if config.sizes.is_empty() {
        return Err(CliError::Usage("no sizes requested".into()));
    }
    for &size in &config.sizes {
        if size == 0 {
            return Err(CliError::Usage("sizes must be at least 1".into()));
        }
        if size > text.len() {
            return Err(CliError::Usage(format!(
                "requested size {size} exceeds input length {}",
                text.len()
            )));
        }
    }
    let methods = config.methods();
    let mut entries = Vec::new();
    let mut speedups = Vec::new();
    let mut sampling = Vec::new();

    for &size in &config.sizes {
        let x = &text[..size];
        let view = build_cds(x)?;
        sampling.push(SamplingEntry {
            size,
            ratio: sampling_stats(&view).ratio(),
        });
        for &task in &config.tasks {
            // warm-up, doubling as a cross-check between methods
            let expected = run_once(task, Method::Classical, x, &view)?;
            for &method in &methods[1..] {
                let got = run_once(task, method, x, &view)?;
                if got != expected {
                    return Err(CliError::Mismatch(format!(
                        "{task} at size {size}: classical {expected}, {} {got}",
                        method.name()
                    )));
                }
            }
            let mut samples = vec![Vec::with_capacity(config.runs); methods.len()];
            for _ in 0..config.runs {
                for (slot, &method) in samples.iter_mut().zip(&methods) {
                    let start = Instant::now();
                    let r = run_once(task, method, black_box(x), &view)?;
                    let elapsed = start.elapsed().as_nanos() as u64;
                    black_box(r);
                    slot.push(elapsed);
                }
            }
            let mut medians = Vec::new();
            for (method, s) in methods.iter().zip(&samples) {
                let st = timing_stats(s);
                medians.push((*method, st.median_ns));
                entries.push(BenchEntry {
                    name: format!("{}/{}", task.name(), method.name()),
                    size,
                    mean_ns: st.mean_ns,
                    median_ns: st.median_ns,
                    stddev_ns: st.stddev_ns,
                });
            }
            let median_of = |m: Method| medians.iter().find(|(k, _)| *k == m).map(|(_, t)| *t);
            let classical = median_of(Method::Classical).unwrap_or(0);
            let cds = median_of(config.speedup_method()).unwrap_or(0);
            speedups.push(Speedup {
                task,
                size,
                percent: speedup_percent(classical, cds),
            });
        }
    }

    Ok(BenchReport {
        input: input.to_string(),
        sizes: config.sizes.clone(),
        runs: config.runs,
        entries,
        speedups,
        sampling,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stats() {
        let s = timing_stats(&[3, 1, 2]);
        assert_eq!((s.mean_ns, s.median_ns, s.stddev_ns), (2, 2, 1));
        let s = timing_stats(&[10]);
        assert_eq!((s.mean_ns, s.median_ns, s.stddev_ns), (10, 10, 0));
        assert_eq!(timing_stats(&[1, 2, 3, 10]).median_ns, 2);
    }

    #[test]
    fn speedup_formula() {
        assert_eq!(speedup_percent(100, 60), 40.0);
        assert_eq!(speedup_percent(100, 150), -50.0);
        assert_eq!(speedup_percent(0, 5), 0.0);
    }

    #[test]
    fn report_arity() {
        let text = cdsreg_core::gen_text(&cdsreg_core::GenSpec::new(26, 5000, 3)).unwrap();
        let cfg = BenchConfig {
            sizes: vec![1000, 5000],
            runs: 3,
            tasks: vec![Task::Period, Task::Cover],
            pretimed: false,
        };
        let r = run_bench(&text, "gen", &cfg).unwrap();
        assert_eq!(r.entries.len(), 8);
        assert_eq!(r.speedups.len(), 4);
        assert_eq!(r.sampling.len(), 2);
        for s in &r.speedups {
            let c = r.entry(s.task, Method::Classical, s.size).unwrap();
            let d = r.entry(s.task, Method::Cds, s.size).unwrap();
            assert!((speedup_percent(c.median_ns, d.median_ns) - s.percent).abs() < 0.01);
        }

        let cfg = BenchConfig {
            pretimed: true,
            ..cfg
        };
        let r = run_bench(&text, "gen", &cfg).unwrap();
        assert_eq!(r.entries.len(), 12);
        assert!(r.entry(Task::Cover, Method::CdsPretimed, 5000).is_some());
    }

    #[test]
    fn oversize_request_names_size() {
        let cfg = BenchConfig {
            sizes: vec![10, 500],
            runs: 1,
            tasks: vec![Task::Period],
            pretimed: false,
        };
        let err = run_bench(b"abaababaaba", "x", &cfg).unwrap_err();
        assert!(err.to_string().contains("500"));
    }
}
