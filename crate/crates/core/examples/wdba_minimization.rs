//! Minimizes a weak Büchi automaton modulo don't-cares and checks that
//! splitting states does not change the result.

use omega_dontcare::fixtures;
use omega_dontcare::langops::d_equivalent;
use omega_dontcare::priority::minimize_wdba;
use omega_dontcare::random::split_state;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> omega_dontcare::Result<()> {
    let u = fixtures::learning_target();
    let d = fixtures::learning_dontcare();
    let exact = minimize_wdba(&u, None)?;
    let loose = minimize_wdba(&u, Some(&d))?;
    println!("target: {} states", u.size());
    println!("minimal: {} states, minimal modulo Σ*bω: {} states", exact.size(), loose.size());
    println!("isomorphic to the learned H3: {}", loose.ts().is_isomorphic(fixtures::learning_h3().ts()));

    let mut rng = StdRng::seed_from_u64(1);
    let mut bloated = loose.clone();
    for _ in 0..4 {
        bloated = split_state(&mut rng, &bloated).unwrap_or(bloated);
    }
    let again = minimize_wdba(&bloated, Some(&d))?;
    println!("bloated to {} states, minimized back to {}", bloated.size(), again.size());
    assert!(d_equivalent(&again, &u, Some(&d))?.is_none());
    Ok(())
}
