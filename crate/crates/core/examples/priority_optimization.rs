//! Renumbers the priorities of a four-priority DPA so that it agrees with
//! the original on every word outside `Σ*aω`, using as few priorities as
//! possible.

use omega_dontcare::fixtures;
use omega_dontcare::io::print_native;
use omega_dontcare::langops::d_equivalent;
use omega_dontcare::priority::{brute_force_consistent_parity, optimize_priorities, ExplicitFamilies};
use omega_dontcare::Homomorphism;

fn main() -> omega_dontcare::Result<()> {
    let a = fixtures::four_priority_dpa();
    let d = fixtures::eventually_a();
    let opt = optimize_priorities(&a, Some(&d))?;
    println!("priorities: {} -> {}", a.distinct_priorities(), opt.distinct_priorities());
    for q in a.ts().states() {
        println!("  {}: {} -> {}", a.ts().name(q), a.priorities()[q], opt.priorities()[q]);
    }
    assert!(d_equivalent(&a, &opt, Some(&d))?.is_none());

    // without don't-cares nothing can be saved
    let plain = optimize_priorities(&a, None)?;
    println!("without don't-cares: {} priorities", plain.distinct_priorities());

    // exhaustive search over all maps agrees that two priorities are too few
    let families = ExplicitFamilies::enumerate(&a, Some(&d), a.ts(), &Homomorphism::identity(a.ts()))?;
    for k in 1..=3 {
        let found = brute_force_consistent_parity(&families, k)?;
        println!("brute force with {k} priorities: {found:?}");
    }
    print!("{}", print_native(&opt));
    Ok(())
}
