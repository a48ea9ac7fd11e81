//! The `.sgp` text format.
//!
//! Lines starting with `#` are comments. The first data line is the order
//! `n`; each of the next `n` data lines holds row `i` of the table as `n`
//! whitespace-separated indices.

use super::{check_associativity, AlgebraError, FiniteSemigroup};

pub fn parse_sgp(text: &str) -> Result<FiniteSemigroup, AlgebraError> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));
    let (line_no, first) = data.next().ok_or(AlgebraError::Format { line: 1, message: "missing order line".into() })?;
    let order: usize = first
        .parse()
        .map_err(|_| AlgebraError::Format { line: line_no, message: format!("expected an order, found `{first}`") })?;
    if order == 0 {
        return Err(AlgebraError::Format { line: line_no, message: "order must be positive".into() });
    }
    let mut rows = Vec::with_capacity(order);
    let mut last_line = line_no;
    for _ in 0..order {
        let (line_no, line) = data.next().ok_or(AlgebraError::Format {
            line: last_line + 1,
            message: format!("expected {order} table rows, found {}", rows.len()),
        })?;
        last_line = line_no;
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| AlgebraError::Format { line: line_no, message: format!("`{tok}` is not an index") })
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != order {
            return Err(AlgebraError::Format {
                line: line_no,
                message: format!("expected {order} entries, found {}", row.len()),
            });
        }
        if let Some(&bad) = row.iter().find(|&&v| v >= order) {
            return Err(AlgebraError::Format { line: line_no, message: format!("entry {bad} is outside 0..{order}") });
        }
        rows.push(row);
    }
    if let Some((line_no, _)) = data.next() {
        return Err(AlgebraError::Format { line: line_no, message: "unexpected data after the table".into() });
    }
    check_associativity(&rows)
}

/// Renders the table; the name, when present, becomes a leading comment.
pub fn to_sgp(s: &FiniteSemigroup) -> String {
    let mut out = String::new();
    if let Some(name) = s.name() {
        out.push_str("# ");
        out.push_str(name);
        out.push('\n');
    }
    out.push_str(&s.order().to_string());
    out.push('\n');
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
