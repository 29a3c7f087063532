//! Tabular output in CSV, JSON or aligned text.

use std::io::Write;

use serde_json::{Map, Number, Value};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Csv,
    Json,
    Pretty,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    /// Fixed-point number with the given decimals.
    Fixed(f64, usize),
    /// Scientific notation with the given significant decimals.
    Sci(f64, usize),
    Int(i64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Fixed(v, d) => format!("{v:.d$}"),
            Cell::Sci(v, d) => format!("{v:.d$e}"),
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> Value {
        let number = |v: f64| Number::from_f64(v).map_or(Value::Null, Value::Number);
        match self {
            Cell::Fixed(v, _) | Cell::Sci(v, _) => number(*v),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }

    fn right_aligned(&self) -> bool {
        !matches!(self, Cell::Text(_))
    }
}

/// Named columns and their rows.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: Vec<&'static str>) -> Self {
        Self { headers, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write<W: Write>(&self, format: OutputFormat, out: W) -> Result<(), CliError> {
        match format {
            OutputFormat::Csv => self.write_csv(out),
            OutputFormat::Json => self.write_json(out),
            OutputFormat::Pretty => self.write_pretty(out),
        }
    }

    fn write_csv<W: Write>(&self, out: W) -> Result<(), CliError> {
        let mut writer = csv::Writer::from_writer(out);
        writer.write_record(&self.headers)?;
        for row in &self.rows {
            writer.write_record(row.iter().map(Cell::render))?;
        }
        writer.flush()?;
        Ok(())
    }

    fn write_json<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        let records: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let object: Map<String, Value> = self
                    .headers
                    .iter()
                    .zip(row)
                    .map(|(h, c)| (h.to_string(), c.json()))
                    .collect();
                Value::Object(object)
            })
            .collect();
        serde_json::to_writer_pretty(&mut out, &records)?;
        writeln!(out)?;
        Ok(())
    }

    fn write_pretty<W: Write>(&self, mut out: W) -> Result<(), CliError> {
        let rendered: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(Cell::render).collect()).collect();
        let widths: Vec<usize> = self
            .headers
            .iter()
            .enumerate()
            .map(|(i, h)| {
                rendered
                    .iter()
                    .map(|r| r[i].chars().count())
                    .chain(std::iter::once(h.chars().count()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let header: Vec<String> = self
            .headers
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(i, (h, w))| {
                let right = self.rows.first().is_none_or(|r| r[i].right_aligned());
                if right { format!("{h:>w$}") } else { format!("{h:<w$}") }
            })
            .collect();
        writeln!(out, "{}", header.join("  ").trim_end())?;
        for (cells, text) in self.rows.iter().zip(&rendered) {
            let line: Vec<String> = cells
                .iter()
                .zip(text)
                .zip(&widths)
                .map(|((c, t), w)| if c.right_aligned() { format!("{t:>w$}") } else { format!("{t:<w$}") })
                .collect();
            writeln!(out, "{}", line.join("  ").trim_end())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(vec!["delta", "energy", "flag"]);
        t.push(vec![Cell::Fixed(0.001, 3), Cell::Fixed(-0.4990007, 6), Cell::Text("bound".into())]);
        t.push(vec![Cell::Fixed(0.025, 3), Cell::Fixed(0.000253, 6), Cell::Text("positive".into())]);
        t
    }

    fn render(t: &Table, f: OutputFormat) -> String {
        let mut buf = Vec::new();
        t.write(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn csv_layout() {
        assert_eq!(
            render(&sample(), OutputFormat::Csv),
            "delta,energy,flag\n0.001,-0.499001,bound\n0.025,0.000253,positive\n"
        );
    }

    #[test]
    fn json_keeps_numbers_and_column_order() {
        let v: Value = serde_json::from_str(&render(&sample(), OutputFormat::Json)).unwrap();
        let first = v[0].as_object().unwrap();
        assert_eq!(first.keys().collect::<Vec<_>>(), ["delta", "energy", "flag"]);
        assert!(first["energy"].is_f64());
        assert_eq!(first["flag"], "bound");
    }

    #[test]
    fn pretty_aligns_columns() {
        let text = render(&sample(), OutputFormat::Pretty);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 3);
        let col = lines[0].find("energy").unwrap() + "energy".len();
        assert_eq!(&lines[1][col - 9..col], "-0.499001");
    }
}
