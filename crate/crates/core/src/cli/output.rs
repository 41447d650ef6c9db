//! Machine-readable records for `levels`.
//!
//! CSV columns, in order: `n, l, j2, jz2, m, term, e0_hartree,
//! shift_coeff_num, shift_coeff_den, delta_e_hartree`. Half-integers are
//! doubled; columns not used by the chosen mode are empty.

use std::io::{self, Write};

use serde::{Deserialize, Serialize};

use crate::spectrum::{orbital_letter, EnergyLevel, LevelState};

pub const CSV_COLUMNS: [&str; 10] =
    ["n", "l", "j2", "jz2", "m", "term", "e0_hartree", "shift_coeff_num", "shift_coeff_den", "delta_e_hartree"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub n: u32,
    pub l: u32,
    pub j2: Option<i32>,
    pub jz2: Option<i32>,
    pub m: Option<i32>,
    pub term: String,
    pub e0_hartree: f64,
    pub shift_coeff_num: i64,
    pub shift_coeff_den: i64,
    pub delta_e_hartree: f64,
}

impl From<&EnergyLevel> for OutputRecord {
    fn from(level: &EnergyLevel) -> Self {
        let (n, l) = (level.state.n(), level.state.l());
        let (j2, jz2, m) = match level.state {
            LevelState::Uncoupled(s) => (None, None, Some(s.m)),
            LevelState::Coupled(s) => (Some(s.j.twice()), Some(s.j_z.twice()), None),
        };
        let term = match level.term {
            Some(t) => t.to_string(),
            None => format!("{n}{}", orbital_letter(l).map_or('?', |c| c.to_ascii_lowercase())),
        };
        OutputRecord {
            n,
            l,
            j2,
            jz2,
            m,
            term,
            e0_hartree: level.e0,
            shift_coeff_num: *level.delta_e_per_theta.numer(),
            shift_coeff_den: *level.delta_e_per_theta.denom(),
            delta_e_hartree: level.delta_e,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

pub fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(&mut *out);
            w.write_record(CSV_COLUMNS)?;
            for r in records {
                w.serialize(r)?;
            }
            w.flush()
        }
        Format::Table => write_table(out, records),
    }
}

fn opt(v: Option<i32>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

fn write_table(out: &mut dyn Write, records: &[OutputRecord]) -> io::Result<()> {
    writeln!(
        out,
        "{:>3} {:>3} {:>4} {:>4} {:>4}  {:<12} {:>22} {:>12} {:>18}",
        "n", "l", "2j", "2jz", "m", "term", "e0 (hartree)", "dE/theta_z", "dE (hartree)"
    )?;
    for r in records {
        let coeff = if r.shift_coeff_den == 1 {
            r.shift_coeff_num.to_string()
        } else {
            format!("{}/{}", r.shift_coeff_num, r.shift_coeff_den)
        };
        writeln!(
            out,
            "{:>3} {:>3} {:>4} {:>4} {:>4}  {:<12} {:>22} {:>12} {:>18.10e}",
            r.n,
            r.l,
            opt(r.j2),
            opt(r.jz2),
            opt(r.m),
            r.term,
            r.e0_hartree,
            coeff,
            r.delta_e_hartree
        )?;
    }
    Ok(())
}

pub fn parse_json(text: &str) -> serde_json::Result<Vec<OutputRecord>> {
    serde_json::from_str(text)
}

pub fn parse_csv(text: &str) -> csv::Result<Vec<OutputRecord>> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().collect()
}
