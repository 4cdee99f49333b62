//! Minimization on the D-congruence quotient, and the DBAs that show the
//! D-minimal automaton need not be unique once its language lacks an
//! informative right-congruence.

use omega_dontcare::fixtures;
use omega_dontcare::hardness::enumerate_dbas;
use omega_dontcare::langops::{d_equivalent, has_trivial_rc};
use omega_dontcare::priority::minimize_to_irc;
use omega_dontcare::{AcceptanceKind, OmegaAutomaton, TransitionSystem};

fn main() -> omega_dontcare::Result<()> {
    let a = fixtures::dba_a();
    let d = fixtures::dontcare_suffix_b(a.alphabet());

    for kind in [AcceptanceKind::Buchi, AcceptanceKind::CoBuchi, AcceptanceKind::Parity] {
        match minimize_to_irc(&a, None, kind)? {
            Some(m) => println!("{kind:?} on the plain quotient: {} states", m.size()),
            None => println!("{kind:?} on the plain quotient: not in class"),
        }
    }
    match minimize_to_irc(&a, Some(&d), AcceptanceKind::Buchi)? {
        Some(m) => println!("Büchi modulo Σ*bω: {} states", m.size()),
        None => println!("Büchi modulo Σ*bω: not in class"),
    }

    let mut failed = None;
    let smaller: Vec<OmegaAutomaton> = enumerate_dbas(2, a.alphabet(), |c| match d_equivalent(c, &a, Some(&d)) {
        Ok(sep) => sep.is_none(),
        Err(e) => {
            failed.get_or_insert(e);
            false
        }
    })?
    .collect();
    if let Some(e) = failed {
        return Err(e);
    }
    let mut graphs: Vec<&TransitionSystem> = Vec::new();
    for c in &smaller {
        if !graphs.iter().any(|g| g.is_isomorphic(c.ts())) {
            graphs.push(c.ts());
        }
    }
    println!(
        "{} two-state DBAs agree with A outside Σ*bω, on {} different transition graphs",
        smaller.len(),
        graphs.len()
    );
    for (name, b) in [("B", fixtures::dba_b()), ("C", fixtures::dba_c()), ("D", fixtures::dba_d())] {
        println!(
            "{name}: D-equivalent to A {}, trivial right-congruence {}",
            d_equivalent(&b, &a, Some(&d))?.is_none(),
            has_trivial_rc(&b)?
        );
    }
    Ok(())
}
