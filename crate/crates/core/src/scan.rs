//! The graph6 stream scanner: decodes records, runs the predicate
//! battery in a worker pool, and emits JSON-lines reports in input order
//! regardless of worker scheduling.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::filter::Expr;
use crate::report::{analyze_record, ScanReport};

#[derive(Debug, Clone, Default)]
pub struct ScanOptions {
    pub filter: Option<Expr>,
    /// Worker count; 0 means available parallelism.
    pub jobs: usize,
    /// Report a nonzero outcome when malformed records were seen.
    pub strict: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScanOutcome {
    pub records: usize,
    pub emitted: usize,
    pub malformed: usize,
}

enum RecordResult {
    Report(Box<ScanReport>),
    Malformed(String),
}

fn process(index: usize, line: &str) -> RecordResult {
    match analyze_record(index, line) {
        Ok(report) => RecordResult::Report(Box::new(report)),
        Err(e) => RecordResult::Malformed(format!("record {index}: {e}")),
    }
}

/// Scans graph6 records from `input`, one per line, writing one JSON
/// object per matching record to `out` and diagnostics to `diag`.
/// Output order equals input order for every worker count.
pub fn scan_stream<R: BufRead + Send, W: Write, D: Write>(
    input: R,
    out: &mut W,
    diag: &mut D,
    opts: &ScanOptions,
) -> std::io::Result<ScanOutcome> {
    let jobs = if opts.jobs == 0 {
        std::thread::available_parallelism().map_or(1, |p| p.get())
    } else {
        opts.jobs
    };
    let mut outcome = ScanOutcome::default();

    let emit = |result: RecordResult,
                    out: &mut W,
                    diag: &mut D,
                    outcome: &mut ScanOutcome|
     -> std::io::Result<()> {
        match result {
            RecordResult::Report(report) => {
                if opts.filter.as_ref().is_none_or(|f| f.matches(&report)) {
                    serde_json::to_writer(&mut *out, &*report)?;
                    out.write_all(b"\n")?;
                    outcome.emitted += 1;
                }
            }
            RecordResult::Malformed(msg) => {
                writeln!(diag, "{msg}")?;
                outcome.malformed += 1;
            }
        }
        Ok(())
    };

    let lines = input.lines().filter(|l| match l {
        Ok(s) => !s.trim().is_empty(),
        Err(_) => true,
    });

    if jobs <= 1 {
        for (index, line) in lines.enumerate() {
            let line = line?;
            outcome.records += 1;
            emit(process(index, &line), out, diag, &mut outcome)?;
        }
        return Ok(outcome);
    }

    let (work_tx, work_rx) = crossbeam_channel::bounded::<(usize, String)>(jobs * 4);
    let (done_tx, done_rx) = crossbeam_channel::bounded::<(usize, RecordResult)>(jobs * 4);

    std::thread::scope(|scope| -> std::io::Result<ScanOutcome> {
        for _ in 0..jobs {
            let work_rx = work_rx.clone();
            let done_tx = done_tx.clone();
            scope.spawn(move || {
                for (index, line) in work_rx.iter() {
                    if done_tx.send((index, process(index, &line))).is_err() {
                        break;
                    }
                }
            });
        }
        drop(work_rx);
        drop(done_tx);

        let mut io_error: Option<std::io::Error> = None;
        let feeder = scope.spawn(move || {
            let mut count = 0usize;
            for (index, line) in lines.enumerate() {
                match line {
                    Ok(line) => {
                        count += 1;
                        if work_tx.send((index, line)).is_err() {
                            break;
                        }
                    }
                    Err(e) => {
                        drop(work_tx);
                        return (count, Some(e));
                    }
                }
            }
            (count, None)
        });

        // reorder buffer: emit strictly by index
        let mut next = 0usize;
        let mut pending: BTreeMap<usize, RecordResult> = BTreeMap::new();
        while let Ok((index, result)) = done_rx.recv() {
            pending.insert(index, result);
            while let Some(result) = pending.remove(&next) {
                if let Err(e) = emit(result, out, diag, &mut outcome) {
                    io_error = Some(e);
                    break;
                }
                next += 1;
            }
            if io_error.is_some() {
                break;
            }
        }
        // closing the sink unblocks any worker stuck on a full channel
        drop(done_rx);
        let (records, read_error) = feeder.join().expect("feeder thread panicked");
        outcome.records = records;
        if let Some(e) = io_error {
            return Err(e);
        }
        if let Some(e) = read_error {
            return Err(e);
        }
        Ok(outcome)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::*;
    use crate::filter::parse;
    use crate::graph6::encode;

    fn stream_of(graphs: &[crate::graph::Graph]) -> String {
        graphs
            .iter()
            .map(|g| encode(g).unwrap() + "\n")
            .collect::<String>()
    }

    #[test]
    fn candidate_filter_flags_only_w23() {
        let input = stream_of(&[
            build_cycle(6).unwrap(),
            build_complete_bipartite(3, 3).unwrap(),
            build_w_graph(&WGraphSpec { m: 2, ell: 3 }).unwrap(),
        ]);
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let opts = ScanOptions {
            filter: Some(parse("candidate").unwrap()),
            jobs: 1,
            strict: false,
        };
        let outcome = scan_stream(input.as_bytes(), &mut out, &mut diag, &opts).unwrap();
        assert_eq!(outcome.records, 3);
        assert_eq!(outcome.emitted, 1);
        let report: ScanReport = serde_json::from_slice(&out[..out.len() - 1]).unwrap();
        assert_eq!(report.record_index, 2);
        assert_eq!(report.order, 18);
    }

    #[test]
    fn empty_stream_is_fine() {
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let outcome =
            scan_stream("".as_bytes(), &mut out, &mut diag, &ScanOptions::default()).unwrap();
        assert_eq!(outcome, ScanOutcome::default());
        assert!(out.is_empty());
    }

    #[test]
    fn malformed_records_are_skipped_with_diagnostics() {
        let input = format!(
            "{}\n???not graph6???\n{}\n",
            encode(&build_cycle(4).unwrap()).unwrap(),
            encode(&build_cycle(6).unwrap()).unwrap()
        );
        let mut out = Vec::new();
        let mut diag = Vec::new();
        let outcome = scan_stream(
            input.as_bytes(),
            &mut out,
            &mut diag,
            &ScanOptions::default(),
        )
        .unwrap();
        assert_eq!(outcome.records, 3);
        assert_eq!(outcome.malformed, 1);
        assert_eq!(outcome.emitted, 2);
        assert!(String::from_utf8(diag).unwrap().contains("record 1"));
    }

    #[test]
    fn parallel_output_matches_serial() {
        let graphs: Vec<_> = (3..40).map(|n| build_cycle(n).unwrap()).collect();
        let input = stream_of(&graphs);
        let mut serial = Vec::new();
        let mut parallel = Vec::new();
        let mut diag = Vec::new();
        scan_stream(
            input.as_bytes(),
            &mut serial,
            &mut diag,
            &ScanOptions {
                jobs: 1,
                ..Default::default()
            },
        )
        .unwrap();
        scan_stream(
            input.as_bytes(),
            &mut parallel,
            &mut diag,
            &ScanOptions {
                jobs: 8,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(serial, parallel);
    }
}
