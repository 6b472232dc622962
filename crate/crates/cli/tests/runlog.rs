use std::sync::Arc;
use std::thread;

use erq_cli::{LogEntry, RunLog};
use erq_core::harness::{image_size, SetSpec};
use erq_core::parse_with;
use erq_core::probe::ProbeReport;

fn record(k: usize) -> LogEntry {
    let f = parse_with("x*y+x", &["x", "y"]).unwrap();
    let sets: Vec<SetSpec> = serde_json::from_str(&format!(
        r#"[{{"ap":{{"start":"1","step":"1","count":{k}}}}},{{"gp":{{"start":"3","ratio":"2","count":3}}}}]"#
    ))
    .unwrap();
    let mut r = image_size(&f, &sets).unwrap();
    r.seed = Some(k as u64);
    LogEntry::Experiment(r)
}

#[test]
fn hundred_entries_read_back_identically() {
    let dir = tempfile::tempdir().unwrap();
    let log = RunLog::new(dir.path().join("log.jsonl"));
    let entries: Vec<LogEntry> = (1..=100)
        .map(|k| if k % 4 == 0 { LogEntry::Probe(ProbeReport::new("p").param("k", k)) } else { record(k) })
        .collect();
    for e in &entries {
        log.append(e).unwrap();
    }
    let before = std::fs::read(log.path()).unwrap();
    let pos = log.append(&record(3)).unwrap();
    let after = std::fs::read(log.path()).unwrap();
    assert_eq!(pos, before.len() as u64);
    assert_eq!(&after[..before.len()], &before[..]);
    assert_eq!(after[before.len()..].iter().filter(|&&b| b == b'\n').count(), 1);
    let back = log.read_all().unwrap();
    assert_eq!(&back[..100], &entries[..]);
}

#[test]
fn concurrent_appends_keep_lines_whole() {
    let dir = tempfile::tempdir().unwrap();
    let log = Arc::new(RunLog::new(dir.path().join("log.jsonl")));
    let handles: Vec<_> = (0..8)
        .map(|t| {
            let log = Arc::clone(&log);
            thread::spawn(move || {
                for i in 0..25 {
                    log.append(&record(1 + (t * 25 + i) % 9)).unwrap();
                }
            })
        })
        .collect();
    for h in handles {
        h.join().unwrap();
    }
    assert_eq!(log.read_all().unwrap().len(), 200);
}
