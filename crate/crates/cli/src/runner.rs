//! Worker pool with an ordered sink: tasks run in parallel, rows reach the
//! writer strictly in task order, so output is independent of thread count.

use std::collections::BTreeMap;
use std::io::Write;
use std::sync::mpsc;

use crate::error::CliError;
use crate::rows::Row;
use crate::sink::Sink;
use crate::tasks::Task;

/// Environment variable holding the default worker count.
pub const THREADS_ENV: &str = "LOGLAMBERT_THREADS";

/// Flag, then config file, then [`THREADS_ENV`], then the machine's
/// parallelism.
pub fn resolve_threads(explicit: Option<usize>) -> Result<usize, CliError> {
    if let Some(n) = explicit {
        return if n == 0 { Err(CliError::usage("threads must be positive")) } else { Ok(n) };
    }
    if let Ok(text) = std::env::var(THREADS_ENV) {
        return match text.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(CliError::usage(format!("{THREADS_ENV} must be a positive integer, got {text:?}"))),
        };
    }
    Ok(std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1))
}

/// Runs every task and streams rows to `sink` in task order. Returns
/// whether every row passed.
pub fn run_tasks<W: Write>(tasks: &[Task], threads: usize, timing: bool, sink: &mut Sink<W>) -> Result<bool, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| CliError::usage(format!("cannot start {threads} workers: {e}")))?;
    let (tx, rx) = mpsc::channel::<(usize, Vec<Row>)>();
    let mut all_pass = true;
    let mut written: Result<(), CliError> = Ok(());
    pool.in_place_scope(|scope| {
        for (index, task) in tasks.iter().enumerate() {
            let tx = tx.clone();
            scope.spawn(move |_| {
                // the receiver outlives the scope
                let _ = tx.send((index, task.run(timing)));
            });
        }
        drop(tx);
        let mut pending: BTreeMap<usize, Vec<Row>> = BTreeMap::new();
        let mut next = 0;
        for (index, rows) in rx.iter() {
            pending.insert(index, rows);
            while let Some(rows) = pending.remove(&next) {
                for row in &rows {
                    all_pass &= row.pass;
                    if written.is_ok() {
                        written = sink.write(row);
                    }
                }
                next += 1;
            }
        }
    });
    written.map(|_| all_pass)
}
