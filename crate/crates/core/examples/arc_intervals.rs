//! Arc tableaux and the integer intervals they force on the argument
//! increment, including the degenerate both-exit case.

use netbounds::arc::{ArcTableau, Parity};
use netbounds::bounds::{interval_degenerate, interval_nondegenerate, Orientation};

fn main() -> netbounds::Result<()> {
    let arcs = [
        (
            "8 vertices, chords 1-2 3-8 4-5 6-7",
            ArcTableau::from_internal_chords(8, &[(1, 2), (3, 8), (4, 5), (6, 7)])?,
        ),
        (
            "single exiting vertex",
            ArcTableau::from_internal_chords(1, &[])?,
        ),
        (
            "two vertices joined",
            ArcTableau::from_internal_chords(2, &[(1, 2)])?,
        ),
        (
            "3 vertices, 2-3 joined",
            ArcTableau::from_internal_chords(3, &[(2, 3)])?,
        ),
    ];
    for (name, t) in &arcs {
        println!("{name}");
        println!(
            "  second row {:?}  n={} E={} O={} m={}  segments {:?}",
            t.second_row, t.n, t.even, t.odd, t.exiting, t.segments
        );
        for orient in [Orientation::Preserving, Orientation::Reversing] {
            println!("  {orient:?}: {}", interval_nondegenerate(t, orient)?);
        }
    }

    println!("double vertex with both chords leaving the arc:");
    let double_only = ArcTableau::from_internal_chords(2, &[])?;
    let with_neighbors = ArcTableau::from_internal_chords(4, &[])?;
    println!(
        "  alone, even parity: {}",
        interval_degenerate(&double_only, Parity::Even, Orientation::Preserving)?
    );
    println!(
        "  between two exits, odd parity: {}",
        interval_degenerate(&with_neighbors, Parity::Odd, Orientation::Preserving)?
    );
    Ok(())
}
