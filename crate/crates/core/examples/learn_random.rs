//! Learns random weak languages modulo each don't-care shape and compares
//! the result with the D-congruence of the target.

use omega_dontcare::langops::{congruence_quotient, d_equivalent};
use omega_dontcare::learner::{learn, LearnerOptions, SimulatedTeacher};
use omega_dontcare::random::{random_wdba, DontCareShape};
use omega_dontcare::Alphabet;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn main() -> omega_dontcare::Result<()> {
    let sigma = Alphabet::from_chars("abc")?;
    let mut rng = StdRng::seed_from_u64(2024);
    for i in 0..12 {
        let shape = DontCareShape::ALL[i % 3];
        let target = random_wdba(&mut rng, 6, &sigma);
        let d = shape.build(&sigma);
        let mut teacher = SimulatedTeacher::new(target.clone(), d.clone())?;
        let run = learn(&mut teacher, &sigma, LearnerOptions::default())?;
        let (index, _) = congruence_quotient(&target, d.as_ref())?;
        let stats = teacher.stats();
        println!(
            "{shape:?}: target {} states, learned {} (index {}), {} rounds, {} membership / {} equivalence queries, correct {}",
            target.size(),
            run.hypothesis().size(),
            index.size(),
            run.rounds.len(),
            stats.member,
            stats.equiv,
            d_equivalent(&target, run.hypothesis(), d.as_ref())?.is_none()
        );
    }
    Ok(())
}
