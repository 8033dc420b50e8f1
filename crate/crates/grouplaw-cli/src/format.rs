//! Plain-text Cayley table files.
//!
//! Layout: an optional `# name: <string>` comment line, then a line with
//! the order n, then n lines of n whitespace-separated entries in [0, n).
//! The writer always emits identity-0 normalized tables (the library
//! relabels on load anyway).

use grouplaw_core::{FiniteGroup, GroupError};

/// Parses the file format; validation (and identity relabeling) happens in
/// [`FiniteGroup::from_cayley_table_named`].
pub fn parse_cayley(text: &str) -> Result<FiniteGroup, GroupError> {
    let mut name: Option<String> = None;
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let mut first = lines.next().ok_or(GroupError::MalformedTable)?;
    if let Some(comment) = first.strip_prefix('#') {
        if let Some(n) = comment.trim().strip_prefix("name:") {
            name = Some(n.trim().to_string());
        }
        first = lines.next().ok_or(GroupError::MalformedTable)?;
    }
    let n: usize = first
        .parse()
        .map_err(|_| GroupError::MalformedTable)?;
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    for _ in 0..n {
        let line = lines.next().ok_or(GroupError::MalformedTable)?;
        let row: Vec<usize> = line
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| GroupError::MalformedTable)?;
        rows.push(row);
    }
    if lines.next().is_some() {
        return Err(GroupError::MalformedTable);
    }
    FiniteGroup::from_cayley_table_named(&rows, name.as_deref())
}

/// Renders a group in the file format; `parse_cayley` round-trips it.
pub fn render_cayley(g: &FiniteGroup) -> String {
    let mut out = String::new();
    if !g.name().is_empty() {
        out.push_str(&format!("# name: {}\n", g.name()));
    }
    out.push_str(&format!("{}\n", g.order()));
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
