//! The D-congruence classes of an automaton's states, with the words that
//! separate them, and the quotient transition system.

use omega_dontcare::fixtures;
use omega_dontcare::langops::{congruence_quotient, d_congruence, has_trivial_rc};

fn main() -> omega_dontcare::Result<()> {
    let a = fixtures::dba_a();
    let sigma = a.alphabet().clone();
    for (label, d) in [("∅", None), ("Σ*bω", Some(fixtures::dontcare_suffix_b(&sigma)))] {
        if let Some(d) = &d {
            println!("trivial right-congruence of {label}: {}", has_trivial_rc(d)?);
        }
        let part = d_congruence(&a, d.as_ref())?;
        println!("D = {label}: {} classes", part.class_count());
        for q in a.ts().states() {
            println!("  {} in class {}", a.ts().name(q), part.class_of(q));
        }
        for (&(c1, c2), w) in part.witnesses() {
            println!("  classes {c1} and {c2} separated by {}", w.render(&sigma));
        }
        let (quotient, h) = congruence_quotient(&a, d.as_ref())?;
        println!("  quotient has {} states, h = {:?}", quotient.size(), h.as_slice());
    }

    // the redundant six-state version of the learning target collapses
    let split = fixtures::learning_h3_split();
    let (q, _) = congruence_quotient(&split, Some(&fixtures::learning_dontcare()))?;
    println!("split H3: {} -> {} states, isomorphic to H3: {}", split.size(), q.size(), q.is_isomorphic(fixtures::learning_h3().ts()));
    Ok(())
}
