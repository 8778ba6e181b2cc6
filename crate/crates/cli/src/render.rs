//! ASCII rendering of frieze data in the staggered Coxeter layout: row `i`
//! sits at vertical offset `i`, column `m` at horizontal offset `2m + i`.

/// Lays out `(i, m, text)` entries on the staggered grid and pads cells to
/// a common width per horizontal slot.
pub fn staggered(entries: &[(usize, i64, String)], m_lo: i64) -> String {
    if entries.is_empty() {
        return String::new();
    }
    let max_i = entries.iter().map(|e| e.0).max().unwrap();
    let width = entries.iter().map(|e| e.2.len()).max().unwrap() + 2;
    let min_slot = entries
        .iter()
        .map(|&(i, m, _)| 2 * (m - m_lo) + i as i64)
        .min()
        .unwrap();
    let max_slot = entries
        .iter()
        .map(|&(i, m, _)| 2 * (m - m_lo) + i as i64)
        .max()
        .unwrap();
    let slots = (max_slot - min_slot + 1) as usize;
    let mut grid = vec![vec![" ".repeat(width); slots]; max_i];
    for (i, m, text) in entries {
        let slot = (2 * (m - m_lo) + *i as i64 - min_slot) as usize;
        let pad = width - text.len();
        let left = pad / 2;
        grid[i - 1][slot] = format!(
            "{}{}{}",
            " ".repeat(left),
            text,
            " ".repeat(pad - left)
        );
    }
    let mut out = String::new();
    for row in grid {
        let line: String = row.concat();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}
