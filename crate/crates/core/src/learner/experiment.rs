use crate::alphabet::{Letter, Word};
use crate::error::{Error, Result};
use crate::word::UpWord;

use super::mark::Conflict;
use super::teacher::{Answer, Teacher};

fn concat(parts: &[&[Letter]]) -> Word {
    parts.concat()
}

fn power(w: &[Letter], k: usize) -> Word {
    w.repeat(k)
}

fn in_u(teacher: &mut dyn Teacher, u: &[Letter], v: &[Letter]) -> Result<bool> {
    match teacher.member(u, v)? {
        Answer::Yes => Ok(true),
        Answer::No => Ok(false),
        Answer::DontCare => Err(Error::TeacherInconsistency(format!(
            "membership query ({u:?}, {v:?}) answered don't-care, but its suffix is a table column"
        ))),
    }
}

/// Searches the candidates `x^k z yω`, `y^k w xω` and the four
/// `(z'w')^i`-shaped words for `k = 1, 2, …` and returns the first word whose
/// suffixes separate a new state. Gives up with a teacher-inconsistency
/// error once `k` exceeds `cap`.
pub fn distinguishing_experiment(teacher: &mut dyn Teacher, c: &Conflict, cap: usize) -> Result<UpWord> {
    let (s, t, x, y, z, w) = (&c.s, &c.t, &c.x, &c.y, &c.z, &c.w);
    for k in 1..=cap {
        let z1 = concat(&[&power(x, k), z]);
        let w1 = concat(&[&power(y, k), w]);
        if in_u(teacher, &concat(&[s, &z1]), y)? {
            return UpWord::new(&z1, y);
        }
        if !in_u(teacher, &concat(&[t, &w1]), x)? {
            return UpWord::new(&w1, x);
        }
        let zw = concat(&[&z1, &w1]);
        let wz = concat(&[&w1, &z1]);
        for i in 1..=k {
            let zw_i = power(&zw, i);
            let wz_i = power(&wz, i);
            if !in_u(teacher, &concat(&[s, &zw_i]), x)? {
                return UpWord::new(&zw_i, x);
            }
            let v = concat(&[&wz_i, &w1]);
            if !in_u(teacher, &concat(&[t, &v]), x)? {
                return UpWord::new(&v, x);
            }
            let v = concat(&[&zw_i, &z1]);
            if in_u(teacher, &concat(&[s, &v]), y)? {
                return UpWord::new(&v, y);
            }
            if in_u(teacher, &concat(&[t, &wz_i]), y)? {
                return UpWord::new(&wz_i, y);
            }
        }
    }
    Err(Error::TeacherInconsistency(format!(
        "no distinguishing experiment found for k up to {cap}; the answers are not those of a weak language"
    )))
}
