//! The files under `data/` are checked against the in-code fixtures and the
//! library's own output.

use std::fs;
use std::path::PathBuf;

use omega_dontcare::fixtures as f;
use omega_dontcare::hardness::{build_colored_dpa, build_reduction, Coloring};
use omega_dontcare::io::{parse_graph, parse_native, parse_native_with, print_graph, print_native, NativeOptions};
use omega_dontcare::learner::{learn, LearnerOptions, ScriptedTeacher, SimulatedTeacher};
use omega_dontcare::{OmegaAutomaton, UpWord};

fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name);
    fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn check(name: &str, expected: &OmegaAutomaton) {
    let text = data(name);
    let parsed = parse_native(&text).unwrap();
    assert_eq!(&parsed, expected, "{name} differs from its fixture");
    assert_eq!(print_native(&parsed), text, "{name} is not in printed form");
}

#[test]
fn automata_match_fixtures() {
    check("four_priority.aut", &f::four_priority_dpa());
    check("eventually_a.aut", &f::eventually_a());
    check("dba_a.aut", &f::dba_a());
    check("dba_b.aut", &f::dba_b());
    check("dba_c.aut", &f::dba_c());
    check("dba_d.aut", &f::dba_d());
    check("eventually_b_abc.aut", &f::dontcare_suffix_b(&f::abc()));
    check("learning_target.aut", &f::learning_target());
    check("learning_dontcare.aut", &f::learning_dontcare());
    check("learning_h2.aut", &f::learning_h2());
    check("learning_h3.aut", &f::learning_h3());
}

#[test]
fn partial_dpa_needs_repair() {
    let text = data("four_priority_partial.aut");
    assert!(parse_native(&text).is_err());
    let repaired = parse_native_with(
        &text,
        NativeOptions {
            complete_with_selfloop: true,
        },
    )
    .unwrap();
    assert_eq!(repaired, f::four_priority_dpa());
}

#[test]
fn reduction_files() {
    let g = parse_graph(&data("star.graph")).unwrap();
    assert_eq!(g, f::star_graph());
    assert_eq!(print_graph(&g), data("star.graph"));
    let (a, d) = build_reduction(&g).unwrap();
    check("star_A.aut", &a);
    check("star_D.aut", &d);
    let col = build_colored_dpa(&g, &Coloring::new(vec![1, 2, 2]).unwrap()).unwrap();
    check("star_col.aut", &col);
}

#[test]
fn learning_trace_and_tables() {
    let ab = f::ab();
    let forced = [
        UpWord::periodic(&[0]).unwrap(),
        UpWord::periodic(&[0, 1]).unwrap(),
    ];
    let inner = SimulatedTeacher::new(f::learning_target(), Some(f::learning_dontcare())).unwrap();
    let mut teacher = ScriptedTeacher::new(inner, forced);
    let run = learn(&mut teacher, &ab, LearnerOptions::default()).unwrap();
    assert_eq!(run.trace(&ab), data("learning_trace.txt"));
    for (i, round) in run.rounds.iter().skip(1).enumerate() {
        assert_eq!(round.table, data(&format!("learning_table{}.txt", i + 1)), "table {}", i + 1);
    }
    assert_eq!(run.rounds.len(), 4);
}
