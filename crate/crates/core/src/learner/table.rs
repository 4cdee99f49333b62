use std::collections::HashMap;

use crate::alphabet::{shortlex_cmp, Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::ts::{State, TransitionSystem};
use crate::word::UpWord;

use super::teacher::{Answer, Teacher};

/// Observation table: prefix-closed access words `S`, suffix-closed
/// experiments `E` (all outside the don't-care set) and the yes/no entries
/// for every row in `S ∪ SΣ`.
#[derive(Debug, Clone)]
pub struct ObservationTable {
    alphabet: Alphabet,
    /// Kept in shortlex order.
    access: Vec<Word>,
    /// Kept in insertion order.
    experiments: Vec<UpWord>,
    rows: HashMap<Word, Vec<bool>>,
}

impl ObservationTable {
    /// The table with `S = {ε}` and `E = ∅`.
    pub fn new(alphabet: Alphabet) -> Self {
        let mut t = ObservationTable {
            alphabet,
            access: vec![Vec::new()],
            experiments: Vec::new(),
            rows: HashMap::new(),
        };
        for w in t.all_row_words() {
            t.rows.insert(w, Vec::new());
        }
        t
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn access_words(&self) -> &[Word] {
        &self.access
    }

    pub fn experiments(&self) -> &[UpWord] {
        &self.experiments
    }

    /// The entry for row `u` (which must be in `S ∪ SΣ`) and column `col`.
    pub fn entry(&self, u: &[Letter], col: usize) -> Option<bool> {
        self.rows.get(u).and_then(|r| r.get(col).copied())
    }

    pub fn row(&self, u: &[Letter]) -> Option<&[bool]> {
        self.rows.get(u).map(|r| r.as_slice())
    }

    /// Rows of `SΣ ∖ S`, in shortlex order.
    pub fn extension_words(&self) -> Vec<Word> {
        let mut ext: Vec<Word> = self
            .access
            .iter()
            .flat_map(|s| {
                self.alphabet.letters().map(move |a| {
                    let mut w = s.clone();
                    w.push(a);
                    w
                })
            })
            .filter(|w| !self.is_access(w))
            .collect();
        ext.sort_by(|a, b| shortlex_cmp(a, b));
        ext.dedup();
        ext
    }

    fn all_row_words(&self) -> Vec<Word> {
        let mut v = self.access.clone();
        v.extend(self.extension_words());
        v
    }

    pub fn is_access(&self, w: &[Letter]) -> bool {
        self.access
            .binary_search_by(|s| shortlex_cmp(s, w))
            .is_ok()
    }

    fn access_index(&self, w: &[Letter]) -> Option<usize> {
        self.access.binary_search_by(|s| shortlex_cmp(s, w)).ok()
    }

    /// The index of the access word whose row equals `row`.
    fn matching_access(&self, row: &[bool]) -> Option<usize> {
        self.access.iter().position(|s| self.rows[s] == row)
    }

    /// Asks the teacher for every missing entry.
    fn fill(&mut self, teacher: &mut dyn Teacher) -> Result<()> {
        for u in self.all_row_words() {
            let row = self.rows.entry(u.clone()).or_default();
            while row.len() < self.experiments.len() {
                let e = &self.experiments[row.len()];
                let mut spoke = u.clone();
                spoke.extend_from_slice(e.spoke());
                let value = match teacher.member(&spoke, e.cycle())? {
                    Answer::Yes => true,
                    Answer::No => false,
                    Answer::DontCare => {
                        return Err(Error::Internal(format!(
                            "membership of {} answered don't-care although its suffix is a table column",
                            UpWord::new(&spoke, e.cycle())?.render(&self.alphabet)
                        )))
                    }
                };
                row.push(value);
            }
        }
        Ok(())
    }

    /// Whether every `SΣ` row equals some `S` row.
    pub fn is_closed(&self) -> bool {
        self.unmatched_extension().is_none()
    }

    fn unmatched_extension(&self) -> Option<Word> {
        self.extension_words()
            .into_iter()
            .find(|w| self.matching_access(&self.rows[w]).is_none())
    }

    /// Moves the shortlex-least unmatched `SΣ` row into `S` until the table
    /// is closed.
    pub fn close(&mut self, teacher: &mut dyn Teacher) -> Result<()> {
        self.fill(teacher)?;
        while let Some(w) = self.unmatched_extension() {
            let pos = self.access.partition_point(|s| shortlex_cmp(s, &w).is_lt());
            self.access.insert(pos, w);
            self.fill(teacher)?;
        }
        Ok(())
    }

    /// Adds `w` and all its suffixes that are not yet columns. New columns
    /// are appended in the order of [`UpWord`]'s `Ord`.
    pub fn add_experiment(&mut self, w: &UpWord, teacher: &mut dyn Teacher) -> Result<usize> {
        let mut new: Vec<UpWord> = w
            .suffixes()
            .into_iter()
            .filter(|s| !self.experiments.contains(s))
            .collect();
        new.sort();
        let added = new.len();
        self.experiments.extend(new);
        self.fill(teacher)?;
        Ok(added)
    }

    /// The transition system `T_{S,f}`: states are the access words in
    /// shortlex order, named by the words themselves.
    pub fn transition_system(&self) -> Result<TransitionSystem> {
        let mut delta = Vec::with_capacity(self.access.len());
        for s in &self.access {
            let mut succ = Vec::with_capacity(self.alphabet.len());
            for a in self.alphabet.letters() {
                let mut w = s.clone();
                w.push(a);
                let target = match self.access_index(&w) {
                    Some(i) => i,
                    None => self.matching_access(&self.rows[&w]).ok_or_else(|| {
                        Error::Precondition(format!(
                            "table is not closed: row {} matches no access word",
                            self.alphabet.format_word(&w)
                        ))
                    })?,
                };
                succ.push(target as State);
            }
            delta.push(succ);
        }
        let names = self.access.iter().map(|s| self.alphabet.format_word(s)).collect();
        TransitionSystem::new(self.alphabet.clone(), names, 0, delta)
    }

    /// Text rendering: a header with the columns, the `S` rows, a rule, then
    /// the `SΣ ∖ S` rows, with entries `1`/`0`.
    pub fn render(&self) -> String {
        let headers: Vec<String> = self.experiments.iter().map(|e| e.render(&self.alphabet)).collect();
        let labels: Vec<String> = self
            .all_row_words()
            .iter()
            .map(|w| self.alphabet.format_word(w))
            .collect();
        let label_width = labels.iter().map(|l| l.chars().count()).max().unwrap_or(1);
        let widths: Vec<usize> = headers.iter().map(|h| h.chars().count().max(1)).collect();
        let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.chars().count())));
        let line = |label: &str, cells: Vec<String>| {
            let mut out = pad(label, label_width);
            for (c, w) in cells.iter().zip(&widths) {
                out.push_str(" | ");
                out.push_str(&pad(c, *w));
            }
            out.trim_end().to_string()
        };
        let mut out = Vec::new();
        out.push(line("", headers.clone()));
        let rule_len = label_width + widths.iter().map(|w| w + 3).sum::<usize>();
        out.push("-".repeat(rule_len));
        let row_line = |w: &Word| {
            let cells = self.rows[w].iter().map(|&b| if b { "1" } else { "0" }.to_string()).collect();
            line(&self.alphabet.format_word(w), cells)
        };
        for s in &self.access {
            out.push(row_line(s));
        }
        out.push("-".repeat(rule_len));
        for w in self.extension_words() {
            out.push(row_line(&w));
        }
        out.join("\n") + "\n"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::learner::SimulatedTeacher;

    fn teacher() -> SimulatedTeacher {
        SimulatedTeacher::new(fixtures::learning_target(), Some(fixtures::learning_dontcare())).unwrap()
    }

    fn up(spoke: &str, cycle: &str) -> UpWord {
        let ab = fixtures::ab();
        UpWord::new(&ab.parse_word(spoke).unwrap(), &ab.parse_word(cycle).unwrap()).unwrap()
    }

    #[test]
    fn initial_table_is_closed() {
        let mut t = teacher();
        let mut table = ObservationTable::new(fixtures::ab());
        table.close(&mut t).unwrap();
        assert_eq!(table.access_words().len(), 1);
        assert_eq!(table.transition_system().unwrap().size(), 1);
    }

    #[test]
    fn first_learning_table() {
        let mut t = teacher();
        let mut table = ObservationTable::new(fixtures::ab());
        table.add_experiment(&up("", "a"), &mut t).unwrap();
        table.close(&mut t).unwrap();
        let ab = fixtures::ab();
        assert_eq!(table.access_words(), &[vec![], ab.parse_word("b").unwrap()]);
        let ts = table.transition_system().unwrap();
        assert!(ts.is_isomorphic(&fixtures::learning_h1()));
        let before = table.render();
        table.close(&mut t).unwrap();
        assert_eq!(before, table.render());
    }

    #[test]
    fn suffix_columns_in_order() {
        let mut t = teacher();
        let mut table = ObservationTable::new(fixtures::ab());
        table.add_experiment(&up("", "a"), &mut t).unwrap();
        assert_eq!(table.add_experiment(&up("ab", "a"), &mut t).unwrap(), 2);
        assert_eq!(table.add_experiment(&up("ab", "a"), &mut t).unwrap(), 0);
        table.add_experiment(&up("", "ab"), &mut t).unwrap();
        let cols: Vec<String> = table.experiments().iter().map(|e| e.render(&fixtures::ab())).collect();
        assert_eq!(cols, ["aω", "baω", "abaω", "(ab)ω", "(ba)ω"]);
    }
}
