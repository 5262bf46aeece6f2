//! Recompute the bound table for `4 <= d <= DMAX` (default 10) and print it
//! as a k × d grid.
//!
//!     cargo run --release --example reproduce_table -- 14

use netbounds::{lower_bounds, BoundOptions};

fn main() -> netbounds::Result<()> {
    let dmax: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(10);
    let mut rows = vec![Vec::new(); dmax - 2];
    for d in 4..=dmax {
        let ks: Vec<usize> = (1..=d - 2).collect();
        let reports = lower_bounds(d, &ks, &BoundOptions::default())?;
        eprintln!("d={d}: {:.2?}", reports[0].elapsed);
        for r in reports {
            rows[r.k - 1].push((d, r.bound));
        }
    }
    print!("{:>4}", "k\\d");
    for d in 4..=dmax {
        print!("{d:>8}");
    }
    println!();
    for (i, row) in rows.iter().enumerate() {
        print!("{:>4}", i + 1);
        for d in 4..=dmax {
            match row.iter().find(|(e, _)| *e == d) {
                Some((_, b)) => print!("{b:>8}"),
                None => print!("{:>8}", ""),
            }
        }
        println!();
    }
    Ok(())
}
