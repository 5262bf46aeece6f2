//! Follow the moving critical point around the circle for one net, printing
//! every crossing and the resulting (𝓛, 𝒰) grid with its extrema.
//!
//!     cargo run --example trace_trajectory -- "(())()" 1

use netbounds::conventions::Conventions;
use netbounds::counting::{extrema, v_of_grid};
use netbounds::trajectory::{initial_state, trace_grid, BoundsGrid, EventKind, Vertex};
use netbounds::ChordDiagram;

fn main() -> netbounds::Result<()> {
    let mut args = std::env::args().skip(1);
    let g: ChordDiagram = args.next().as_deref().unwrap_or("(())()").parse()?;
    let k: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);

    let mut state = initial_state(&g, k)?;
    println!("net {g}, k={k}, c={}", state.winding());
    println!("first revolution:");
    loop {
        let event = state.advance();
        let what = match event.kind {
            EventKind::FixedDegree2 => {
                format!("passes F{} (its partner)", event.vertex.unwrap_or(0))
            }
            EventKind::FixedDegree6 => {
                format!("passes F{}, chords reconnect", event.vertex.unwrap_or(0))
            }
            EventKind::CrossR => "crosses r, orientation flips".to_string(),
            EventKind::CrossS => "crosses s".to_string(),
        };
        let partner = match state.partner_of(Vertex::Moving) {
            Vertex::Fixed(j) => format!("F{j}"),
            Vertex::Moving => unreachable!(),
        };
        println!("  M {what:<32} M joined to {partner}");
        if event.kind == EventKind::CrossS {
            break;
        }
    }
    println!(
        "net after one revolution {} = shift of {g}",
        state.diagram()
    );

    let (grid, _) = trace_grid(&g, k, &Conventions::default())?;
    for i in 0..grid.len() {
        println!("{:>4} {:?}", BoundsGrid::label(i), grid.pair(i));
    }
    for e in extrema(&grid) {
        println!(
            "{:?} at {} level {}",
            e.kind,
            BoundsGrid::label(e.index),
            e.level
        );
    }
    println!("V = {}", v_of_grid(&grid)?);
    Ok(())
}
