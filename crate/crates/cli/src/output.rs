//! Writing JSON documents and CSV tables to stdout or a file.

use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

pub enum Document {
    Json(String),
    Csv(Vec<u8>),
}

impl Document {
    pub fn json<T: Serialize>(value: &T) -> io::Result<Self> {
        serde_json::to_string_pretty(value)
            .map(Self::Json)
            .map_err(io::Error::other)
    }

    /// Header row taken from the field names of the record type.
    pub fn csv<T: Serialize>(rows: &[T]) -> io::Result<Self> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in rows {
            w.serialize(row).map_err(io::Error::other)?;
        }
        w.into_inner()
            .map(Self::Csv)
            .map_err(|e| io::Error::other(e.to_string()))
    }

    fn write_to(&self, mut out: impl Write) -> io::Result<()> {
        match self {
            Self::Json(text) => writeln!(out, "{text}")?,
            Self::Csv(bytes) => out.write_all(bytes)?,
        }
        out.flush()
    }

    pub fn emit(&self, path: Option<&Path>) -> io::Result<()> {
        match path {
            Some(p) => self.write_to(io::BufWriter::new(File::create(p)?)),
            None => self.write_to(io::stdout().lock()),
        }
    }
}
