use domino_core::{DominoTableau, Square};

/// A tableau drawn as text, one line per row of its diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedTableau {
    pub lines: Vec<String>,
}

impl RenderedTableau {
    /// Lines joined with `\n`, each terminated.
    pub fn to_text(&self) -> String {
        self.lines.iter().map(|l| format!("{l}\n")).collect()
    }
}

/// Draws `t` row by row. Core cells show `0` and both cells of a domino
/// show its label; tokens are right-aligned to a common width and separated
/// by one space.
pub fn render_ascii(t: &DominoTableau) -> RenderedTableau {
    let shape = t.shape();
    let cell = |row: usize, col: u32| -> u32 {
        let s = Square::new(row as i32, col as i32);
        t.label_of(s).unwrap_or(0)
    };
    let width = t.max_label().unwrap_or(0).to_string().len();
    let lines = shape
        .rows()
        .iter()
        .enumerate()
        .map(|(i, &len)| {
            (1..=len)
                .map(|col| format!("{:>width$}", cell(i + 1, col)))
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect();
    RenderedTableau { lines }
}
