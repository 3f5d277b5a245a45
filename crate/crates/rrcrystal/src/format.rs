//! Text renderings (CSV, JSON, Markdown) of matrices, tables and series.
//!
//! Elements are written with their ASCII names (`phi`, `r1`, `+21`, `-10`).
//! CSV uses LF line endings and no quoting; no name contains a comma.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rrcrystal_core::sumside::ColoredPart;
use rrcrystal_core::{AffineType, CrystalElement, DifferenceMatrix};
use serde::{Deserialize, Serialize};

use crate::check::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Md,
}

#[derive(Debug, thiserror::Error)]
pub enum ParseError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown affine type `{0}`")]
    Type(String),
    #[error(transparent)]
    Core(#[from] rrcrystal_core::Error),
    #[error("malformed table: {0}")]
    Shape(String),
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    #[serde(rename = "type")]
    affine_type: String,
    order: Vec<String>,
    entries: Vec<Vec<i32>>,
}

fn md_row<I: IntoIterator<Item = String>>(out: &mut String, cells: I) {
    out.push('|');
    for c in cells {
        let _ = write!(out, " {c} |");
    }
    out.push('\n');
}

fn md_rule(out: &mut String, n: usize) {
    md_row(out, std::iter::repeat_n("---".to_string(), n));
}

fn json(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serialises");
    s.push('\n');
    s
}

pub fn matrix(m: &DifferenceMatrix, format: Format) -> String {
    let names: Vec<String> = m.order().iter().map(|b| b.to_string()).collect();
    let mut out = String::new();
    match format {
        Format::Csv => {
            let _ = writeln!(out, ",{}", names.join(","));
            for (name, row) in names.iter().zip(m.rows()) {
                out.push_str(name);
                for v in row {
                    let _ = write!(out, ",{v}");
                }
                out.push('\n');
            }
        }
        Format::Json => {
            out = json(&MatrixJson {
                affine_type: m.affine_type().tag().to_string(),
                order: names,
                entries: m.rows().map(|r| r.to_vec()).collect(),
            })
        }
        Format::Md => {
            md_row(
                &mut out,
                std::iter::once(String::new()).chain(names.iter().cloned()),
            );
            md_rule(&mut out, names.len() + 1);
            for (name, row) in names.iter().zip(m.rows()) {
                md_row(
                    &mut out,
                    std::iter::once(name.clone()).chain(row.iter().map(|v| v.to_string())),
                );
            }
        }
    }
    out
}

pub fn parse_matrix_json(text: &str) -> Result<DifferenceMatrix, ParseError> {
    let raw: MatrixJson = serde_json::from_str(text)?;
    let t = AffineType::from_tag(&raw.affine_type)
        .ok_or_else(|| ParseError::Type(raw.affine_type.clone()))?;
    let order = raw
        .order
        .iter()
        .map(|n| n.parse::<CrystalElement>())
        .collect::<Result<Vec<_>, _>>()?;
    if raw.entries.iter().any(|r| r.len() != order.len()) {
        return Err(ParseError::Shape("ragged matrix rows".into()));
    }
    let entries = raw.entries.into_iter().flatten().collect();
    Ok(DifferenceMatrix::from_parts(t, order, entries)?)
}

/// Parses the CSV layout written by [`matrix`].
pub fn parse_matrix_csv(t: AffineType, text: &str) -> Result<DifferenceMatrix, ParseError> {
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| ParseError::Shape("empty input".into()))?;
    let order = header
        .split(',')
        .skip(1)
        .map(str::parse::<CrystalElement>)
        .collect::<Result<Vec<_>, _>>()?;
    let mut entries = Vec::with_capacity(order.len() * order.len());
    for (k, line) in lines.enumerate() {
        let mut cells = line.split(',');
        let name = cells.next().unwrap_or_default();
        if order.get(k).map(|b| b.to_string()).as_deref() != Some(name) {
            return Err(ParseError::Shape(format!("row {k} is labelled `{name}`")));
        }
        for c in cells {
            entries.push(
                c.trim()
                    .parse::<i32>()
                    .map_err(|e| ParseError::Shape(format!("row {k}: {e}")))?,
            );
        }
    }
    Ok(DifferenceMatrix::from_parts(t, order, entries)?)
}

fn names(bs: &[CrystalElement]) -> Vec<String> {
    bs.iter().map(|b| b.to_string()).collect()
}

#[derive(Serialize)]
struct CongruenceJson<'a> {
    #[serde(rename = "type")]
    affine_type: &'a str,
    modulus: u32,
    rows: BTreeMap<u32, Vec<String>>,
}

pub fn congruence_table(
    t: AffineType,
    modulus: u32,
    table: &BTreeMap<u32, Vec<CrystalElement>>,
    format: Format,
) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            for (r, bs) in table {
                let _ = writeln!(out, "{r},{}", names(bs).join(" "));
            }
        }
        Format::Json => {
            out = json(&CongruenceJson {
                affine_type: t.tag(),
                modulus,
                rows: table.iter().map(|(r, bs)| (*r, names(bs))).collect(),
            })
        }
        Format::Md => {
            md_row(&mut out, ["residue".to_string(), "colors".to_string()]);
            md_rule(&mut out, 2);
            for (r, bs) in table {
                md_row(
                    &mut out,
                    [format!("{r} mod {modulus}"), names(bs).join(", ")],
                );
            }
        }
    }
    out
}

#[derive(Serialize)]
struct PartJson {
    value: u32,
    color: String,
}

pub fn colored_parts(parts: &[ColoredPart], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            for p in parts {
                let _ = writeln!(out, "{},{}", p.value, p.color);
            }
        }
        Format::Json => {
            let v: Vec<_> = parts
                .iter()
                .map(|p| PartJson {
                    value: p.value,
                    color: p.color.to_string(),
                })
                .collect();
            out = json(&v);
        }
        Format::Md => {
            md_row(&mut out, ["value".to_string(), "color".to_string()]);
            md_rule(&mut out, 2);
            for p in parts {
                md_row(&mut out, [p.value.to_string(), p.color.to_string()]);
            }
        }
    }
    out
}

/// One column of coefficients, indexed by degree.
pub fn series<T: ToString + Serialize>(coeffs: &[T], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            for (k, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{k},{}", c.to_string());
            }
        }
        Format::Json => out = json(&coeffs),
        Format::Md => {
            md_row(&mut out, ["degree".to_string(), "coefficient".to_string()]);
            md_rule(&mut out, 2);
            for (k, c) in coeffs.iter().enumerate() {
                md_row(&mut out, [k.to_string(), c.to_string()]);
            }
        }
    }
    out
}

/// Several named series sharing the degree axis.
pub fn series_table(columns: &[(&str, &[i128])], format: Format) -> String {
    let len = columns.iter().map(|(_, c)| c.len()).min().unwrap_or(0);
    let mut out = String::new();
    match format {
        Format::Csv => {
            let head: Vec<&str> = columns.iter().map(|(n, _)| *n).collect();
            let _ = writeln!(out, "degree,{}", head.join(","));
            for k in 0..len {
                out.push_str(&k.to_string());
                for (_, c) in columns {
                    let _ = write!(out, ",{}", c[k]);
                }
                out.push('\n');
            }
        }
        Format::Json => {
            let map: BTreeMap<&str, &[i128]> =
                columns.iter().map(|(n, c)| (*n, &c[..len])).collect();
            out = json(&map);
        }
        Format::Md => {
            md_row(
                &mut out,
                std::iter::once("degree".to_string())
                    .chain(columns.iter().map(|(n, _)| n.to_string())),
            );
            md_rule(&mut out, columns.len() + 1);
            for k in 0..len {
                md_row(
                    &mut out,
                    std::iter::once(k.to_string())
                        .chain(columns.iter().map(|(_, c)| c[k].to_string())),
                );
            }
        }
    }
    out
}

pub fn check_report(r: &CheckReport, format: Format) -> String {
    let mut out = String::new();
    let reference = |p: usize| {
        r.reference
            .as_ref()
            .map(|v| v[p].to_string())
            .unwrap_or_default()
    };
    match format {
        Format::Csv => {
            out.push_str("p,c,d,reference\n");
            for p in 0..=r.p_max {
                let _ = writeln!(out, "{p},{},{},{}", r.c[p], r.d[p], reference(p));
            }
        }
        Format::Json => out = json(r),
        Format::Md => {
            md_row(&mut out, ["p", "c", "d", "reference"].map(String::from));
            md_rule(&mut out, 4);
            for p in 0..=r.p_max {
                md_row(
                    &mut out,
                    [
                        p.to_string(),
                        r.c[p].to_string(),
                        r.d[p].to_string(),
                        reference(p),
                    ],
                );
            }
        }
    }
    out
}
