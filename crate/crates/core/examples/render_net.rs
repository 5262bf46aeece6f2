//! Write an SVG picture of a net, with `r`, `s` and the arc `(r, s)` drawn
//! when `k` is given.
//!
//!     cargo run --example render_net -- "(())()" net.svg 2

use netbounds::render::render_svg;
use netbounds::ChordDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let g: ChordDiagram = args.next().as_deref().unwrap_or("(())()").parse()?;
    let out = args.next().unwrap_or_else(|| "net.svg".to_string());
    let k = args.next().map(|s| s.parse()).transpose()?;
    std::fs::write(&out, render_svg(&g, k)?)?;
    println!("wrote {out}");
    Ok(())
}
