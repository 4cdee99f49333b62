//! Text formats: the native automaton format, a HOA fragment, word literals
//! and graphs.

mod graph;
mod hoa;
mod literal;
mod native;

pub use graph::{parse_graph, print_graph};
pub use hoa::{export_hoa, import_hoa};
pub use literal::{format_upword, parse_upword, split_upword_list};
pub use native::{parse_native, parse_native_with, print_native, NativeOptions};

use crate::automaton::OmegaAutomaton;
use crate::error::Result;

/// Parses either format, choosing HOA when the text starts with `HOA:`.
pub fn parse_automaton(text: &str, options: NativeOptions) -> Result<OmegaAutomaton> {
    if text.trim_start().starts_with("HOA:") {
        import_hoa(text)
    } else {
        parse_native_with(text, options)
    }
}
