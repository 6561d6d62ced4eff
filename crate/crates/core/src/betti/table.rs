use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::field::FieldSpec;
use crate::error::{Error, Result};

/// Which module a Betti table describes.
///
/// In the `Ideal` convention row 0 counts the minimal generators of `I`. In
/// the `Quotient` convention the table describes `R/I`: entry `(0, 0)` is 1
/// and entry `(i, j)` for `i >= 1` equals the ideal entry `(i - 1, j)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    Ideal,
    Quotient,
}

impl Convention {
    pub fn name(&self) -> &'static str {
        match self {
            Convention::Ideal => "ideal",
            Convention::Quotient => "quotient",
        }
    }
}

impl std::str::FromStr for Convention {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ideal" => Ok(Convention::Ideal),
            "quotient" => Ok(Convention::Quotient),
            other => Err(Error::Parse(format!("unknown convention `{other}`"))),
        }
    }
}

/// Graded Betti numbers `beta_{i,j}`. Only nonzero entries are stored.
///
/// Equality compares the convention and the entries; the ambient ring size
/// and the field tag are metadata.
#[derive(Clone, Debug)]
pub struct BettiTable {
    convention: Convention,
    ambient: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, u32), u64>,
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.convention == other.convention && self.entries == other.entries
    }
}

impl Eq for BettiTable {}

impl BettiTable {
    pub fn new(convention: Convention, ambient: usize, field: FieldSpec) -> Self {
        BettiTable {
            convention,
            ambient,
            field,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries<I>(
        convention: Convention,
        ambient: usize,
        field: FieldSpec,
        entries: I,
    ) -> Self
    where
        I: IntoIterator<Item = ((usize, u32), u64)>,
    {
        let mut t = BettiTable::new(convention, ambient, field);
        for ((i, j), b) in entries {
            t.add(i, j, b);
        }
        t
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn with_field(mut self, field: FieldSpec) -> Self {
        self.field = field;
        self
    }

    pub fn with_ambient(mut self, ambient: usize) -> Self {
        self.ambient = ambient;
        self
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: u32, beta: u64) {
        if beta > 0 {
            *self.entries.entry((i, j)).or_insert(0) += beta;
        }
    }

    /// Overwrite one entry; zero removes it.
    pub fn set(&mut self, i: usize, j: u32, beta: u64) {
        if beta == 0 {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), beta);
        }
    }

    /// Nonzero entries in ascending `(i, j)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn last_row(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    pub fn require(&self, convention: Convention) -> Result<()> {
        if self.convention != convention {
            return Err(Error::ConventionMismatch {
                expected: convention.name(),
                found: self.convention.name(),
            });
        }
        Ok(())
    }

    /// Convert between conventions; assumes the ideal is proper.
    pub fn to_convention(&self, target: Convention) -> BettiTable {
        match (self.convention, target) {
            (a, b) if a == b => self.clone(),
            (Convention::Ideal, Convention::Quotient) => {
                let mut t = BettiTable::new(Convention::Quotient, self.ambient, self.field);
                t.add(0, 0, 1);
                for (i, j, b) in self.entries() {
                    t.add(i + 1, j, b);
                }
                t
            }
            _ => {
                let mut t = BettiTable::new(Convention::Ideal, self.ambient, self.field);
                for (i, j, b) in self.entries() {
                    if i >= 1 {
                        t.add(i - 1, j, b);
                    }
                }
                t
            }
        }
    }

    pub fn to_quotient(&self) -> BettiTable {
        self.to_convention(Convention::Quotient)
    }

    pub fn to_ideal(&self) -> BettiTable {
        self.to_convention(Convention::Ideal)
    }

    /// Move every entry `(i, j)` to `(i + di, j + dj)`.
    pub fn shifted(&self, di: usize, dj: u32) -> BettiTable {
        let mut t = BettiTable::new(self.convention, self.ambient, self.field);
        for (i, j, b) in self.entries() {
            t.add(i + di, j + dj, b);
        }
        t
    }

    /// The table of `x_l * I` given the table of `I`: internal degrees go
    /// up by one (in the quotient convention the `(0, 0)` entry stays).
    pub fn times_variable(&self) -> BettiTable {
        match self.convention {
            Convention::Ideal => self.shifted(0, 1),
            Convention::Quotient => {
                let mut t = BettiTable::new(self.convention, self.ambient, self.field);
                for (i, j, b) in self.entries() {
                    if i == 0 {
                        t.add(i, j, b);
                    } else {
                        t.add(i, j + 1, b);
                    }
                }
                t
            }
        }
    }

    /// Entrywise sum `self + k * other`.
    pub fn add_scaled(&mut self, other: &BettiTable, k: u64) {
        for (i, j, b) in other.entries() {
            self.add(i, j, k * b);
        }
    }

    /// `sum_i (-1)^i beta_{i,j}` for each degree `j` up to `max_degree`.
    pub fn alternating_numerator(&self, max_degree: u32) -> Vec<i128> {
        let mut out = vec![0i128; max_degree as usize + 1];
        for (i, j, b) in self.entries() {
            if j <= max_degree {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out[j as usize] += sign * b as i128;
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableJson::from(self)).expect("table serializes")
    }

    pub fn from_json(text: &str) -> Result<BettiTable> {
        let dto: TableJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let field: FieldSpec = dto.field.parse()?;
        Ok(BettiTable::from_entries(
            dto.convention,
            dto.ambient,
            field,
            dto.entries.into_iter().map(|e| ((e.i, e.j), e.beta)),
        ))
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("i,j,beta\n");
        for (i, j, b) in self.entries() {
            let _ = writeln!(out, "{i},{j},{b}");
        }
        out
    }

    /// Macaulay-style triangle: column `i`, row `j - i`.
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "convention: {} ({}), field {}",
            self.convention.name(),
            match self.convention {
                Convention::Ideal => "row 0 = minimal generators of I",
                Convention::Quotient => "resolution of R/I",
            },
            self.field
        );
        let Some(last) = self.last_row() else {
            out.push_str("(zero table)\n");
            return out;
        };
        let rows: Vec<u32> = self
            .entries
            .keys()
            .map(|&(i, j)| j.saturating_sub(i as u32))
            .collect();
        let (lo, hi) = (*rows.iter().min().unwrap(), *rows.iter().max().unwrap());
        let cell = |v: u64| {
            if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            }
        };
        let width = self
            .entries
            .values()
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(last.to_string().len())
            .max(
                (0..=last)
                    .map(|i| self.column_total(i).to_string().len())
                    .max()
                    .unwrap_or(1),
            );
        let label = |s: String| format!("{s:>7}");
        out.push_str(&label(String::new()));
        for i in 0..=last {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        out.push_str(&label("total:".into()));
        for i in 0..=last {
            let _ = write!(out, " {:>width$}", self.column_total(i));
        }
        out.push('\n');
        for row in lo..=hi {
            out.push_str(&label(format!("{row}:")));
            for i in 0..=last {
                let _ = write!(out, " {:>width$}", cell(self.get(i, row + i as u32)));
            }
            out.push('\n');
        }
        out
    }

    fn column_total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ii, _), _)| ii == i)
            .map(|(_, &b)| b)
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    i: usize,
    j: u32,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
struct TableJson {
    convention: Convention,
    ambient: usize,
    field: String,
    entries: Vec<EntryJson>,
}

impl From<&BettiTable> for TableJson {
    fn from(t: &BettiTable) -> Self {
        TableJson {
            convention: t.convention,
            ambient: t.ambient,
            field: t.field.to_string(),
            entries: t
                .entries()
                .map(|(i, j, beta)| EntryJson { i, j, beta })
                .collect(),
        }
    }
}
