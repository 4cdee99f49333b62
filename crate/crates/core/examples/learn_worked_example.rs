//! Reproduces the worked learning example: target `abω + baω + (ab)ω`,
//! don't-cares `Σ*bω`, counterexamples `aω` then `(ab)ω`.

use omega_dontcare::fixtures;
use omega_dontcare::learner::{learn, LearnerOptions, ScriptedTeacher, SimulatedTeacher};
use omega_dontcare::UpWord;

fn main() -> omega_dontcare::Result<()> {
    let ab = fixtures::ab();
    let inner = SimulatedTeacher::new(fixtures::learning_target(), Some(fixtures::learning_dontcare()))?;
    let forced = [
        UpWord::periodic(&ab.parse_word("a")?)?,
        UpWord::periodic(&ab.parse_word("ab")?)?,
    ];
    let mut teacher = ScriptedTeacher::new(inner, forced);
    let run = learn(&mut teacher, &ab, LearnerOptions::default())?;
    print!("{}", run.trace(&ab));
    let h = run.hypothesis();
    let acc: Vec<&str> = h.accepting().unwrap().iter().map(|q| h.ts().name(q)).collect();
    println!("final: {} states, accepting {{{}}}", h.size(), acc.join(", "));
    let stats = teacher.inner().stats();
    println!("queries: {} membership, {} equivalence", stats.member, stats.equiv);
    Ok(())
}
