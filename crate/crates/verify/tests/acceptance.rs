use std::process::ExitCode;
use std::time::Instant;

use fivepoint_verify::{run, CRITERIA, DEFAULT_SEED};

fn main() -> ExitCode {
    let filter: Option<u8> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for criterion in (1..=CRITERIA).filter(|c| filter.is_none_or(|f| f == *c)) {
        let start = Instant::now();
        let report = run(criterion, DEFAULT_SEED).expect("criterion exists");
        println!("{report} [{:.1?}]", start.elapsed());
        failed += usize::from(!report.passed);
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} acceptance criterion(s) failed");
        ExitCode::FAILURE
    }
}
