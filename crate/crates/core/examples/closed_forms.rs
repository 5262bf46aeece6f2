//! The k=1 and k=2 bounds from their closed forms, next to the enumerations
//! that back them.

use netbounds::closedforms::{
    k1_bound, neighbor_free_total, nk, nk_closed_form, nk_enumerated, script_n, script_n_enumerated,
};

fn main() -> netbounds::Result<()> {
    println!(
        "{:>3} {:>8} {:>10} {:>6} {:>6}",
        "d", "k=1", "Σ nf/2d-2", "k=2", "enum"
    );
    for d in 4..=10 {
        println!(
            "{d:>3} {:>8} {:>10} {:>6} {:>6}",
            k1_bound(d)?,
            neighbor_free_total(d)? / (2 * d as u64 - 2),
            script_n(d)?,
            script_n_enumerated(d)?
        );
    }
    println!("N_j for d=12:");
    for j in 2..=10 {
        let closed = nk_closed_form(12, j)?.map_or("-".to_string(), |v| v.to_string());
        println!(
            "  N_{j:<2} = {:>5}  formula {closed:>5}  enumeration {:>5}",
            nk(12, j)?,
            nk_enumerated(12, j)?
        );
    }
    Ok(())
}
