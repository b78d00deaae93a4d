//! Run every theorem suite on small carriers, then once with an injected fault.

use gts_lab::lab::{run_suite, SuiteConfig, SUITES};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cfg = SuiteConfig { max_size: 3, ..SuiteConfig::default() };
    for (id, what) in SUITES {
        let r = run_suite(id, &cfg)?;
        println!("{id:<10} {:>6} instances  {}  {what}", r.instances, if r.passed() { "pass" } else { "FAIL" });
    }
    let faulty = run_suite("prop-1.8", &SuiteConfig { inject_fault: true, ..cfg })?;
    if let Some(c) = faulty.counterexamples.first() {
        println!("\ninjected fault caught at {}: {}", c.key, c.detail);
        if let Some(doc) = &c.document {
            println!("{doc}");
        }
    }
    Ok(())
}
