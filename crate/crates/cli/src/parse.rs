//! Matrix input parsing: row text ("2 1; -1 2", commas allowed) or the
//! structured form {"matrix": [[2,1],[-1,2]]}.

use exelk::IntegerMatrix;

pub fn parse_matrix(text: &str) -> Result<IntegerMatrix, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty input".into());
    }
    if trimmed.starts_with('{') {
        return parse_structured(trimmed);
    }
    parse_row_text(trimmed)
}

fn parse_row_text(text: &str) -> Result<IntegerMatrix, String> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for (i, row_text) in text.split(';').enumerate() {
        let mut row = Vec::new();
        for token in row_text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let v: i64 = token
                .parse()
                .map_err(|_| format!("non-integer entry {:?} in row {}", token, i + 1))?;
            row.push(v);
        }
        if row.is_empty() {
            return Err(format!("empty row {}", i + 1));
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(format!("ragged row {}", i + 1));
            }
        }
        rows.push(row);
    }
    if rows.len() != rows[0].len() {
        return Err(format!(
            "matrix must be square, got {}x{}",
            rows.len(),
            rows[0].len()
        ));
    }
    IntegerMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

fn parse_structured(text: &str) -> Result<IntegerMatrix, String> {
    #[derive(serde::Deserialize)]
    struct Structured {
        matrix: Vec<Vec<i64>>,
    }
    let s: Structured =
        serde_json::from_str(text).map_err(|e| format!("bad structured input: {e}"))?;
    if s.matrix.is_empty() {
        return Err("empty input".into());
    }
    let width = s.matrix[0].len();
    for (i, row) in s.matrix.iter().enumerate() {
        if row.len() != width {
            return Err(format!("ragged row {}", i + 1));
        }
    }
    if s.matrix.len() != width {
        return Err(format!(
            "matrix must be square, got {}x{}",
            s.matrix.len(),
            width
        ));
    }
    IntegerMatrix::from_rows(&s.matrix).map_err(|e| e.to_string())
}
