use std::io::Write;

use leafwave::format::number;
use leafwave::tables::Cell;
use serde_json::{json, Value};

use crate::args::Format;
use crate::CliError;

/// Command output before it is formatted.
pub enum Output {
    /// A single number, printed bare in CSV mode.
    Value {
        name: String,
        value: f64,
    },
    Sheet {
        header: Vec<String>,
        rows: Vec<Vec<Cell>>,
    },
    /// Preformatted text and its JSON form.
    Report {
        text: String,
        json: Value,
    },
}

impl Output {
    pub fn sheet<S: Into<String>>(header: impl IntoIterator<Item = S>, rows: Vec<Vec<Cell>>) -> Output {
        Output::Sheet { header: header.into_iter().map(Into::into).collect(), rows }
    }
}

fn json_cell(cell: &Cell, precision: usize) -> Value {
    match cell {
        // Round through the printed form so JSON and CSV carry the same digits.
        Cell::Num(v) => {
            number(*v, precision).parse::<f64>().ok().filter(|v| v.is_finite()).map_or(Value::Null, Value::from)
        }
        Cell::Text(s) => Value::from(s.as_str()),
        Cell::Empty => Value::Null,
    }
}

pub fn render(out: &Output, format: Format, precision: usize) -> Result<Vec<u8>, CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    let mut buf = Vec::new();
    match (out, format) {
        (Output::Value { value, .. }, Format::Csv) => writeln!(buf, "{}", number(*value, precision)).map_err(io)?,
        (Output::Value { name, value }, Format::Json) => {
            let v = json!({ name.as_str(): json_cell(&Cell::Num(*value), precision) });
            writeln!(buf, "{v}").map_err(io)?;
        }
        (Output::Sheet { header, rows }, Format::Csv) => {
            let mut w = csv::Writer::from_writer(&mut buf);
            w.write_record(header).map_err(|e| CliError::Io(e.to_string()))?;
            for row in rows {
                w.write_record(row.iter().map(|c| c.render(precision))).map_err(|e| CliError::Io(e.to_string()))?;
            }
            w.flush().map_err(io)?;
        }
        (Output::Sheet { header, rows }, Format::Json) => {
            let rows: Vec<Value> =
                rows.iter().map(|r| Value::Array(r.iter().map(|c| json_cell(c, precision)).collect())).collect();
            writeln!(buf, "{}", json!({ "columns": header, "rows": rows })).map_err(io)?;
        }
        (Output::Report { text, .. }, Format::Csv) => buf.extend_from_slice(text.as_bytes()),
        (Output::Report { json, .. }, Format::Json) => writeln!(buf, "{json}").map_err(io)?,
    }
    Ok(buf)
}
