//! Writes an optimized automaton in the HOA fragment and reads it back.

use omega_dontcare::fixtures;
use omega_dontcare::io::{export_hoa, import_hoa};
use omega_dontcare::priority::optimize_priorities;

fn main() -> omega_dontcare::Result<()> {
    let opt = optimize_priorities(&fixtures::four_priority_dpa(), Some(&fixtures::eventually_a()))?;
    let text = export_hoa(&opt);
    print!("{text}");
    let back = import_hoa(&text)?;
    println!("round trip exact: {}", back == opt);

    let h3 = fixtures::learning_h3();
    let back = import_hoa(&export_hoa(&h3))?;
    println!("weak automaton round trip exact: {}", back == h3);

    let alternating = "HOA: v1\nStates: 1\nStart: 0&0\nAP: 0\nAcceptance: 0 t\n--BODY--\nState: 0\n--END--\n";
    match import_hoa(alternating) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
