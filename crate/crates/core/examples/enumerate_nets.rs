//! List every net of a degree with its tableau, shift period and
//! neighbor-free count.
//!
//!     cargo run --example enumerate_nets -- 4

use netbounds::closedforms::neighbor_free_count;
use netbounds::diagram::enumerate_diagrams;

fn main() -> netbounds::Result<()> {
    let d: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(4);
    let nets = enumerate_diagrams(d)?;
    println!(
        "{} nets of degree {d} (u_{d} = {})",
        nets.len(),
        netbounds::catalan_u(d)?
    );
    for g in &nets {
        let t = g.to_tableau();
        let pairs: Vec<String> = g.pairs().iter().map(|(a, b)| format!("{a}-{b}")).collect();
        println!(
            "{g:<14} {:<20} rows {:?} / {:?}  period {}  neighbor-free {}",
            pairs.join(","),
            t.first_row,
            t.second_row,
            g.shift_period(),
            neighbor_free_count(g)
        );
    }
    Ok(())
}
