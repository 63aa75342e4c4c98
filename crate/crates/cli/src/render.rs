//! Plain-text table rendering: aligned human tables and tab-separated rows.

#[derive(Clone, Copy)]
pub enum Align {
    Left,
    Right,
}

/// Aligned table with two spaces between columns and no trailing spaces.
pub fn table(headers: &[&str], aligns: &[Align], rows: &[Vec<String>]) -> String {
    let cols = headers.len();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut emit = |cells: Vec<&str>| {
        let mut line = String::new();
        for i in 0..cols {
            let pad = widths[i] - cells[i].chars().count();
            if !line.is_empty() {
                line.push_str("  ");
            }
            match aligns[i] {
                Align::Right => {
                    line.extend(std::iter::repeat_n(' ', pad));
                    line.push_str(cells[i]);
                }
                Align::Left => {
                    line.push_str(cells[i]);
                    if i + 1 < cols {
                        line.extend(std::iter::repeat_n(' ', pad));
                    }
                }
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    };
    emit(headers.to_vec());
    for row in rows {
        emit(row.iter().map(String::as_str).collect());
    }
    out
}

pub fn tsv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = headers.join("\t");
    out.push('\n');
    for row in rows {
        out.push_str(&row.join("\t"));
        out.push('\n');
    }
    out
}

/// Truth marks in human tables.
pub fn bool_mark(b: bool) -> &'static str {
    if b {
        "\u{22a4}"
    } else {
        "\u{22a5}"
    }
}

pub fn bool_tsv(b: bool) -> &'static str {
    if b {
        "1"
    } else {
        "0"
    }
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
