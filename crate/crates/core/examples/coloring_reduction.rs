//! Turns graph colouring into D-minimization of a parity automaton and
//! reads a colouring back from a smaller automaton.

use omega_dontcare::fixtures;
use omega_dontcare::hardness::{build_colored_dpa, build_reduction, chromatic_number_bruteforce, extract_coloring};
use omega_dontcare::io::print_graph;
use omega_dontcare::langops::{d_equivalent, has_trivial_rc};

fn main() -> omega_dontcare::Result<()> {
    let g = fixtures::star_graph();
    print!("{}", print_graph(&g));
    let (ag, dg) = build_reduction(&g)?;
    println!("A_G: {} states over {} letters; D_G: {} states", ag.size(), ag.alphabet().len(), dg.size());
    println!("D_G has trivial right-congruence: {}", has_trivial_rc(&dg)?);

    let Some((chi, col)) = chromatic_number_bruteforce(&g, g.vertex_count())? else {
        unreachable!("|V| colours always suffice");
    };
    println!("chromatic number {chi}: {col}");
    let small = build_colored_dpa(&g, &col)?;
    println!(
        "A_col: {} states, D-equivalent to A_G: {}",
        small.size(),
        d_equivalent(&ag, &small, Some(&dg))?.is_none()
    );
    if let Some(back) = extract_coloring(&small, &g)? {
        for v in 0..g.vertex_count() {
            println!("{}={}", g.vertex(v), back.color(v));
        }
    }
    Ok(())
}
