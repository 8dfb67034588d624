use std::fmt::Display;

use clap::ValueEnum;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `key: value`, blocks indented below their key.
    Plain,
    /// `key=value`, block lines as `key.1=...`, `key.2=...`.
    Structured,
}

enum Entry {
    Line(String),
    Block(Vec<String>),
}

/// Ordered key/value output of one command.
#[derive(Default)]
pub struct Report {
    entries: Vec<(String, Entry)>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn line(&mut self, key: impl Into<String>, value: impl Display) -> &mut Self {
        self.entries.push((key.into(), Entry::Line(value.to_string())));
        self
    }

    pub fn block<I, S>(&mut self, key: impl Into<String>, lines: I) -> &mut Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.entries.push((key.into(), Entry::Block(lines.into_iter().map(Into::into).collect())));
        self
    }

    pub fn extend(&mut self, other: Report) -> &mut Self {
        self.entries.extend(other.entries);
        self
    }

    /// Multi-line text split into a block.
    pub fn text(&mut self, key: impl Into<String>, text: &str) -> &mut Self {
        self.block(key, text.lines().map(str::to_string).collect::<Vec<_>>())
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        for (key, entry) in &self.entries {
            match (format, entry) {
                (Format::Plain, Entry::Line(v)) => out.push_str(&format!("{key}: {v}\n")),
                (Format::Plain, Entry::Block(lines)) => {
                    out.push_str(&format!("{key}:\n"));
                    for l in lines {
                        out.push_str(&format!("    {l}\n"));
                    }
                }
                (Format::Structured, Entry::Line(v)) => out.push_str(&format!("{key}={v}\n")),
                (Format::Structured, Entry::Block(lines)) => {
                    out.push_str(&format!("{key}.count={}\n", lines.len()));
                    for (i, l) in lines.iter().enumerate() {
                        out.push_str(&format!("{key}.{}={l}\n", i + 1));
                    }
                }
            }
        }
        out
    }
}

/// Comma-separated list, `-` when empty.
pub fn list<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    let joined: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    if joined.is_empty() {
        "-".to_string()
    } else {
        joined.join(", ")
    }
}

pub fn optional<T: Display>(value: Option<T>) -> String {
    value.map_or_else(|| "none".to_string(), |v| v.to_string())
}
