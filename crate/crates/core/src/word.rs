use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::stateset::StateSet;
use crate::ts::{State, TransitionSystem};

/// An ultimately periodic ω-word `spoke · cycleω` in canonical form.
///
/// Canonical form: the cycle is primitive and the spoke does not end with the
/// last letter of the cycle. Two canonical words are equal iff they denote
/// the same ω-word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UpWord {
    spoke: Word,
    cycle: Word,
}

impl UpWord {
    /// Canonical form of `spoke · cycleω`.
    pub fn new(spoke: &[Letter], cycle: &[Letter]) -> Result<Self> {
        if cycle.is_empty() {
            return Err(Error::InvalidArgument("cycle of an ultimately periodic word must be non-empty".into()));
        }
        let mut spoke = spoke.to_vec();
        let mut cycle = primitive_root(cycle).to_vec();
        while let (Some(&s), Some(&c)) = (spoke.last(), cycle.last()) {
            if s != c {
                break;
            }
            spoke.pop();
            cycle.rotate_right(1);
        }
        Ok(UpWord { spoke, cycle })
    }

    /// The purely periodic word `cycleω`.
    pub fn periodic(cycle: &[Letter]) -> Result<Self> {
        Self::new(&[], cycle)
    }

    pub fn spoke(&self) -> &[Letter] {
        &self.spoke
    }

    pub fn cycle(&self) -> &[Letter] {
        &self.cycle
    }

    pub fn is_periodic(&self) -> bool {
        self.spoke.is_empty()
    }

    /// `prefix · self`, canonicalized.
    pub fn prepend(&self, prefix: &[Letter]) -> UpWord {
        let mut spoke = prefix.to_vec();
        spoke.extend_from_slice(&self.spoke);
        UpWord::new(&spoke, &self.cycle).expect("non-empty cycle")
    }

    /// The word with its first letter removed.
    pub fn tail(&self) -> UpWord {
        if self.spoke.is_empty() {
            let mut cycle = self.cycle.clone();
            cycle.rotate_left(1);
            UpWord { spoke: Vec::new(), cycle }
        } else {
            UpWord::new(&self.spoke[1..], &self.cycle).expect("non-empty cycle")
        }
    }

    /// All suffixes of the word (including itself), in the order produced by
    /// repeatedly taking the tail.
    pub fn suffixes(&self) -> Vec<UpWord> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        let mut cur = self.clone();
        while seen.insert(cur.clone()) {
            out.push(cur.clone());
            cur = cur.tail();
        }
        out
    }

    /// The first `len` letters of the ω-word.
    pub fn unfold(&self, len: usize) -> Word {
        self.spoke
            .iter()
            .chain(self.cycle.iter().cycle())
            .take(len)
            .copied()
            .collect()
    }

    pub fn letter_at(&self, i: usize) -> Letter {
        if i < self.spoke.len() {
            self.spoke[i]
        } else {
            self.cycle[(i - self.spoke.len()) % self.cycle.len()]
        }
    }

    pub fn len(&self) -> usize {
        self.spoke.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Human-readable form such as `abaω` or `(ab)ω`.
    pub fn render(&self, alphabet: &Alphabet) -> String {
        let spoke = alphabet.join_word(&self.spoke);
        let cycle = alphabet.join_word(&self.cycle);
        let sep = if spoke.is_empty() || alphabet.is_single_char() { "" } else { "," };
        if self.cycle.len() == 1 {
            format!("{spoke}{sep}{cycle}ω")
        } else {
            format!("{spoke}{sep}({cycle})ω")
        }
    }
}

impl Ord for UpWord {
    /// Shortlex on `(|spoke|+|cycle|, spoke, cycle)`.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.spoke.len().cmp(&other.spoke.len()))
            .then_with(|| self.spoke.cmp(&other.spoke))
            .then_with(|| self.cycle.cmp(&other.cycle))
    }
}

impl PartialOrd for UpWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shortest word `r` with `word = r^k`.
pub fn primitive_root(word: &[Letter]) -> &[Letter] {
    let n = word.len();
    for d in 1..n {
        if n % d == 0 && (d..n).all(|i| word[i] == word[i - d]) {
            return &word[..d];
        }
    }
    word
}

/// The set of states visited infinitely often by the run of `w` from `from`.
pub fn inf_set(ts: &TransitionSystem, w: &UpWord, from: State) -> StateSet {
    let mut q = ts.run_unchecked(from, w.spoke());
    // states at cycle boundaries until one repeats
    let mut boundary_seen = vec![false; ts.size()];
    while !boundary_seen[q] {
        boundary_seen[q] = true;
        q = ts.run_unchecked(q, w.cycle());
    }
    let start = q;
    let mut inf = StateSet::empty(ts.size());
    loop {
        for &a in w.cycle() {
            q = ts.succ(q, a);
            inf.insert(q);
        }
        if q == start {
            break;
        }
    }
    inf
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab() -> Alphabet {
        Alphabet::from_chars("ab").unwrap()
    }

    fn up(spoke: &str, cycle: &str) -> UpWord {
        let sigma = Alphabet::from_chars("abxy").unwrap();
        UpWord::new(&sigma.parse_word(spoke).unwrap(), &sigma.parse_word(cycle).unwrap()).unwrap()
    }

    fn raw(spoke: &str, cycle: &str) -> (Word, Word) {
        let sigma = Alphabet::from_chars("abxy").unwrap();
        (sigma.parse_word(spoke).unwrap(), sigma.parse_word(cycle).unwrap())
    }

    #[test]
    fn normalization_examples() {
        let (s, c) = raw("", "ab");
        assert_eq!(up("", "abab"), UpWord { spoke: s, cycle: c });
        let (s, c) = raw("a", "b");
        assert_eq!(up("ab", "b"), UpWord { spoke: s.clone(), cycle: c.clone() });
        assert_eq!(up("ab", "b").unfold(8), UpWord { spoke: s, cycle: c }.unfold(8));
        let (s, c) = raw("x", "y");
        assert_eq!(up("x", "y"), UpWord { spoke: s, cycle: c });
        assert!(UpWord::new(&[0], &[]).is_err());
        // rolling rotates the cycle
        let (s, c) = raw("", "ba");
        assert_eq!(up("b", "ab"), UpWord { spoke: s, cycle: c });
    }

    #[test]
    fn tails() {
        assert_eq!(up("ab", "a").tail(), up("b", "a"));
        assert_eq!(up("", "ab").tail(), up("", "ba"));
        let closure = up("ab", "a").suffixes();
        assert_eq!(closure, vec![up("ab", "a"), up("b", "a"), up("", "a")]);
    }

    #[test]
    fn ordering_is_shortlex() {
        let mut v = vec![up("ab", "a"), up("", "ba"), up("b", "a"), up("", "ab"), up("", "a")];
        v.sort();
        assert_eq!(v, vec![up("", "a"), up("", "ab"), up("", "ba"), up("b", "a"), up("ab", "a")]);
    }

    #[test]
    fn inf_set_on_small_system() {
        // 0 -a-> 1, 1 -a-> 1, * -b-> 0
        let ts = TransitionSystem::new(ab(), vec!["0".into(), "1".into()], 0, vec![vec![1, 0], vec![1, 0]])
            .unwrap();
        let w = UpWord::new(&[1], &[0]).unwrap();
        assert_eq!(inf_set(&ts, &w, 0), StateSet::from_states(2, [1]));
        let w = UpWord::periodic(&[0, 1]).unwrap();
        assert_eq!(inf_set(&ts, &w, 0), StateSet::from_states(2, [0, 1]));
    }
}
