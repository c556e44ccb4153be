//! ASCII pictures of fillings, partitions, arc diagrams and sequences.

use std::fmt::Write;

use crate::envelope::ObjectEnvelope;
use crate::filling::TriangularFilling;
use crate::partition::{linear_arcs, ArcDiagram, Flavor, SetPartition};
use crate::seq::IntSequence;
use crate::Result;

/// Row `i` of the staircase as `i` characters, `#` for a 1 and `.` for a 0.
pub fn render_filling(f: &TriangularFilling) -> String {
    let mut out = String::new();
    for row in 1..=f.order() {
        for col in 1..=row {
            out.push(if f.contains(row, col) { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

fn render_arc_list(d: &ArcDiagram) -> String {
    if d.arcs().is_empty() {
        return "arcs: (none)\n".to_string();
    }
    let list: Vec<String> = d.arcs().iter().map(|a| format!("({},{})", a.left, a.right)).collect();
    format!("arcs: {}\n", list.join(" "))
}

/// Block list, then the linear arc diagram.
pub fn render_partition(p: &SetPartition) -> String {
    let mut out = String::new();
    let blocks: Vec<String> = p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
        .collect();
    writeln!(out, "{}", blocks.join(" | ")).unwrap();
    out.push_str(&render_arc_list(&linear_arcs(p)));
    out
}

/// Points on a line with one row per arc, drawn as `+---+` (or `@` for a
/// loop), followed by the arc list.
pub fn render_arcs(d: &ArcDiagram) -> String {
    let n = d.n();
    let width = if n == 0 { 0 } else { 2 * n - 1 };
    let mut out = String::new();
    for a in d.arcs() {
        let mut line = vec![' '; width];
        let (l, r) = (2 * (a.left - 1), 2 * (a.right - 1));
        if a.is_loop() {
            line[l] = '@';
        } else {
            line[l] = '+';
            line[r] = '+';
            for c in &mut line[l + 1..r] {
                *c = '-';
            }
        }
        writeln!(out, "{}", line.iter().collect::<String>().trim_end()).unwrap();
    }
    let points: Vec<String> = (1..=n).map(|i| (i % 10).to_string()).collect();
    writeln!(out, "{}", points.join(" ")).unwrap();
    if d.flavor() == Flavor::Enhanced {
        out.push_str("enhanced ");
    }
    out.push_str(&render_arc_list(d));
    out
}

pub fn render_sequence(s: &IntSequence) -> String {
    format!("{s}\n")
}

pub fn render(env: &ObjectEnvelope) -> Result<String> {
    Ok(match env {
        ObjectEnvelope::Sequence { .. } => render_sequence(&env.to_sequence()?.1),
        ObjectEnvelope::Partition { .. } => render_partition(&env.to_partition()?),
        ObjectEnvelope::Arcs { .. } => render_arcs(&env.to_arcs()?),
        ObjectEnvelope::Filling { .. } => render_filling(&env.to_filling()?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enhanced_arcs;

    #[test]
    fn staircase() {
        let f = TriangularFilling::new(6, [(1, 1), (2, 2), (4, 2), (4, 4), (5, 4), (6, 3)]).unwrap();
        assert_eq!(render_filling(&f), "#\n.#\n...\n.#.#\n...#.\n..#...\n");
        assert_eq!(render_filling(&TriangularFilling::empty(0)), "");
    }

    #[test]
    fn partitions() {
        let p = SetPartition::new(2, vec![vec![1], vec![2]]).unwrap();
        assert_eq!(render_partition(&p), "1 | 2\narcs: (none)\n");
        let p = SetPartition::new(4, vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert_eq!(render_partition(&p), "1,3 | 2,4\narcs: (1,3) (2,4)\n");
    }

    #[test]
    fn arc_pictures() {
        let p = SetPartition::new(3, vec![vec![1, 3], vec![2]]).unwrap();
        assert_eq!(
            render_arcs(&enhanced_arcs(&p)),
            "+---+\n  @\n1 2 3\nenhanced arcs: (1,3) (2,2)\n"
        );
        let empty = SetPartition::new(0, vec![]).unwrap();
        assert_eq!(render_arcs(&linear_arcs(&empty)), "\narcs: (none)\n");
    }
}
