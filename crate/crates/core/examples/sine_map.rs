//! The chaotic weight-factor schedule used by the enhanced optimizer.
//!
//! `cargo run --example sine_map -- 0.3 0.7 20`

use fdo_eld::chaos::{SineMap, DEFAULT_M, DEFAULT_W0};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: f64 = args.next().map_or(Ok(DEFAULT_M), |a| a.parse())?;
    let w0: f64 = args.next().map_or(Ok(DEFAULT_W0), |a| a.parse())?;
    let steps: usize = args.next().map_or(Ok(20), |a| a.parse())?;

    let map = SineMap::new(m, w0).ok_or("m must lie in (0, 4)")?;
    println!("m = {m}, w0 = {w0}, ceiling m/4 = {}", map.ceiling());
    for (epoch, ws) in map.take(steps).enumerate() {
        println!("{epoch:>4} {ws:.12}");
    }
    Ok(())
}
