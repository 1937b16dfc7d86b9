//! Runs every identity check over a range of dimensions.
//!
//!     cargo run --release --example verify_suite -- 2 32

use qudit_swap::verify::verify_all;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let d_min = args.next().map_or(Ok(2), |s| s.parse())?;
    let d_max = args.next().map_or(Ok(16), |s| s.parse())?;

    let reports = verify_all(d_min, d_max)?;
    let mut worst: Vec<(String, f64)> = Vec::new();
    for r in &reports {
        match worst.iter_mut().find(|(name, _)| *name == r.identity) {
            Some((_, dev)) => *dev = dev.max(r.max_dev),
            None => worst.push((r.identity.clone(), r.max_dev)),
        }
    }
    for (name, dev) in worst {
        println!("{name:<20} worst deviation {dev:.3e}");
    }
    let failed = reports.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed", reports.len());
    Ok(())
}
