//! One bound, computed with and without orbit reduction.
//!
//!     cargo run --release --example lower_bound -- 8 5

use netbounds::counting::{lower_bound_with, orbits, BoundOptions};

fn main() -> netbounds::Result<()> {
    let mut args = std::env::args()
        .skip(1)
        .filter_map(|s| s.parse::<usize>().ok());
    let d = args.next().unwrap_or(8);
    let k = args.next().unwrap_or(5);

    let fast = lower_bound_with(d, k, &BoundOptions::default())?;
    let naive = lower_bound_with(
        d,
        k,
        &BoundOptions {
            orbit_reduction: false,
            ..BoundOptions::default()
        },
    )?;
    println!(
        "d={d} k={k}: bound {} (Σ V = {} over {} nets)",
        fast.bound, fast.sum_v, fast.diagram_count
    );
    println!(
        "  {} shift orbits, {:.2?}; every net, {:.2?}",
        orbits(d)?.len(),
        fast.elapsed,
        naive.elapsed
    );
    assert_eq!(fast.sum_v, naive.sum_v);

    let mirrored = 2 * d - 3 - k;
    if mirrored != k && mirrored >= 1 {
        println!(
            "  k={mirrored}: {}",
            lower_bound_with(d, mirrored, &BoundOptions::default())?.bound
        );
    }
    Ok(())
}
