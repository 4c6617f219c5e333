//! OEIS b-files: one `index value` pair per line, `#` comments and blank
//! lines ignored.

use std::fs;
use std::path::Path;

use circlepath::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    /// `(index, value)` in file order; values kept as decimal text
    pub entries: Vec<(i64, String)>,
}

impl BFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut entries: Vec<(i64, String)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let fields: Vec<&str> = content.split_whitespace().collect();
            let [index, value] = fields[..] else {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected `index value`, got {content:?}"),
                });
            };
            let index: i64 = index.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad index {index:?}"),
            })?;
            let digits = value.strip_prefix('-').unwrap_or(value);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::Parse {
                    line,
                    msg: format!("bad value {value:?}"),
                });
            }
            if let Some(&(prev, _)) = entries.last() {
                if index <= prev {
                    return Err(Error::Parse {
                        line,
                        msg: format!("index {index} does not increase (previous {prev})"),
                    });
                }
            }
            entries.push((index, normalize(value)));
        }
        Ok(Self { entries })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, index: i64) -> Option<&str> {
        self.entries
            .binary_search_by_key(&index, |e| e.0)
            .ok()
            .map(|i| self.entries[i].1.as_str())
    }
}

fn normalize(value: &str) -> String {
    let (sign, digits) = match value.strip_prefix('-') {
        Some(d) => ("-", d),
        None => ("", value),
    };
    let digits = digits.trim_start_matches('0');
    if digits.is_empty() {
        "0".into()
    } else {
        format!("{sign}{digits}")
    }
}
