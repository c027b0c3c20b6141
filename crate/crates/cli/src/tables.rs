//! Plain-text renderings of the reference tables.

use num_integer::Integer;
use scaled_arndt::{
    arndt_compositions, forward, residue_system, sequence_range, Composition, Method,
    ScaledConstraint,
};

use crate::TableKind;

/// Constraints of the sequence table, in display order.
pub(crate) const SEQUENCE_ROWS: [(u64, u64); 7] =
    [(2, 3), (3, 2), (2, 5), (4, 3), (5, 2), (3, 5), (5, 3)];

pub(crate) fn render(which: TableKind) -> String {
    match which {
        TableKind::Residues => residues(),
        TableKind::Sequences => sequences(),
        TableKind::Bijection6 => bijection6(),
    }
}

#[derive(Clone, Copy)]
enum Align {
    Left,
    Right,
}

/// Pads every column to its widest cell. The first column is a label column
/// followed by ` | `; `rule_after` inserts a dashed line after that row.
fn grid(rows: &[Vec<String>], align: Align, rule_after: Option<usize>) -> String {
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(|cell| cell.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    let lines: Vec<String> = rows
        .iter()
        .map(|row| {
            let mut line = String::new();
            for (c, cell) in row.iter().enumerate() {
                let pad = widths[c] - cell.chars().count();
                match c {
                    0 => {}
                    1 => line.push_str(" | "),
                    _ => line.push_str("  "),
                }
                match (c, align) {
                    (0, _) | (_, Align::Left) => {
                        line.push_str(cell);
                        line.extend(std::iter::repeat_n(' ', pad));
                    }
                    (_, Align::Right) => {
                        line.extend(std::iter::repeat_n(' ', pad));
                        line.push_str(cell);
                    }
                }
            }
            line.trim_end().to_string()
        })
        .collect();
    let rule_width = lines.iter().map(|l| l.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for (i, line) in lines.iter().enumerate() {
        out.push_str(line);
        out.push('\n');
        if rule_after == Some(i) {
            out.push_str(&"-".repeat(rule_width));
            out.push('\n');
        }
    }
    out
}

fn residues() -> String {
    let mut rows = vec![std::iter::once("s\\t".to_string())
        .chain((1..=5).map(|t| t.to_string()))
        .collect::<Vec<_>>()];
    for s in 1..=5u64 {
        let mut row = vec![s.to_string()];
        for t in 1..=5u64 {
            if s.gcd(&t) != 1 {
                row.push("-".into());
                continue;
            }
            let rs = residue_system(&ScaledConstraint::scaled(s, t).unwrap()).unwrap();
            let list: Vec<String> = rs.residues().iter().map(u64::to_string).collect();
            row.push(format!("{} ({})", list.join(","), rs.modulus()));
        }
        rows.push(row);
    }
    grid(&rows, Align::Left, Some(0))
}

fn sequences() -> String {
    let mut rows = vec![std::iter::once("n".to_string())
        .chain((1..=10).map(|n| n.to_string()))
        .collect::<Vec<_>>()];
    for (s, t) in SEQUENCE_ROWS {
        let cons = ScaledConstraint::scaled(s, t).unwrap();
        let values = sequence_range(&cons, 1, 10, Method::Recurrence).unwrap();
        rows.push(
            std::iter::once(format!("a_{{{s},{t}}}(n)"))
                .chain(values.iter().map(|v| v.to_string()))
                .collect(),
        );
    }
    grid(&rows, Align::Right, Some(0))
}

/// Parts with runs of three or more ones written as `1^j`.
fn shorthand(c: &Composition) -> String {
    let mut items = Vec::new();
    let parts = c.parts();
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&p| p == 1).count();
        if run >= 3 {
            items.push(format!("1^{run}"));
            i += run;
        } else {
            items.push(parts[i].to_string());
            i += 1;
        }
    }
    format!("({})", items.join(","))
}

fn bijection6() -> String {
    let cons = ScaledConstraint::scaled(2, 3).unwrap();
    let rs = residue_system(&cons).unwrap();
    let residues: Vec<String> = rs.residues().iter().map(u64::to_string).collect();
    // largest first part first
    let mut domain: Vec<Composition> = arndt_compositions(6, &cons).collect();
    domain.reverse();

    let mut top = vec!["A_{2,3}(6)".to_string()];
    let mut bottom = vec![format!("C_{{{}({})}}(6)", residues.join(","), rs.modulus())];
    for c in &domain {
        top.push(shorthand(c));
        bottom.push(shorthand(&forward(c, &cons).unwrap()));
    }
    grid(&[top, bottom], Align::Left, Some(0))
}
