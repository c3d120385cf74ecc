//! Invariant rows and their CSV / Markdown renderings.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use liebound::catalogue::{Catalogue, Family, GroupSpec};
use liebound::flagcalc;
use liebound::zimmerbounds;

use crate::CliError;

/// One line of the invariant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub group: String,
    pub v: i64,
    pub v_cpt: Option<i64>,
    pub n: Option<i64>,
    pub r: i64,
    pub r0: i64,
    pub s_lower: i64,
    /// `column=source` pairs separated by `;`.
    pub provenance: String,
}

pub const HEADER: [&str; 8] = ["group", "v", "v_cpt", "n", "r", "r0", "s_lower", "provenance"];

impl TableRow {
    pub fn compute(cat: &Catalogue, spec: &GroupSpec) -> Result<Self, CliError> {
        let d = cat.describe(spec)?;
        let source = |present: bool| if present { "catalogue" } else { "absent" };
        let provenance = format!(
            "v=computed;v_cpt={};n={};r=computed;r0=computed;s_lower=computed",
            source(d.v_cpt.is_some()),
            source(d.n_g.is_some()),
        );
        Ok(TableRow {
            group: spec.to_string(),
            v: flagcalc::v_of_group(&d),
            v_cpt: d.v_cpt.as_ref().map(|t| t.value),
            n: d.n_g.as_ref().map(|t| t.value),
            r: flagcalc::r_of_group(&d),
            r0: flagcalc::r0_of_group(&d),
            s_lower: zimmerbounds::s_lower_value(cat, &d)?,
            provenance,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Md,
}

pub fn render(rows: &[TableRow], format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::WriterBuilder::new()
                .has_headers(false)
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            w.write_record(HEADER)?;
            for row in rows {
                w.serialize(row)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("CSV output is UTF-8"))
        }
        Format::Md => {
            let mut out = format!("| {} |\n|{}\n", HEADER.join(" | "), "---|".repeat(HEADER.len()));
            let opt = |x: Option<i64>| x.map_or(String::new(), |v| v.to_string());
            for r in rows {
                writeln!(
                    out,
                    "| {} | {} | {} | {} | {} | {} | {} | {} |",
                    r.group,
                    r.v,
                    opt(r.v_cpt),
                    opt(r.n),
                    r.r,
                    r.r0,
                    r.s_lower,
                    r.provenance
                )
                .unwrap();
            }
            Ok(out)
        }
    }
}

/// Reads rows back from CSV produced by [`render`].
pub fn parse_csv(text: &str) -> Result<Vec<TableRow>, CliError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    r.deserialize().map(|row| row.map_err(CliError::from)).collect()
}

/// Inclusive parameter range written `a..b` or `a`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |s: &str| s.trim().parse::<i64>().map_err(|_| format!("invalid range `{text}`"));
    let (lo, hi) = match text.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let x = parse(text)?;
            (x, x)
        }
    };
    if lo > hi || lo < 1 {
        return Err(format!("invalid range `{text}`: need 1 <= start <= end"));
    }
    Ok(lo..=hi)
}

/// Resolves a family name as typed on the command line.
pub fn parse_family(text: &str) -> Result<Family, String> {
    let norm: String = text.chars().filter(|c| *c != '_' && *c != ' ').collect::<String>().to_ascii_lowercase();
    let family = match norm.as_str() {
        "slc" => Family::SlC,
        "spc" => Family::SpC,
        "soc" => Family::SoC,
        "slh" => Family::SlH,
        "so+" | "soplus" => Family::SoPlus,
        "su" => Family::Su,
        "sp" | "sppq" => Family::SpPq,
        "so*" | "sostar" => Family::SoStar,
        "slr" => Family::SlR,
        other => Family::from_key(&other.to_ascii_uppercase()).ok_or_else(|| format!("unknown family `{text}`"))?,
    };
    Ok(family)
}

/// Families shown when no `--family` filter is given.
fn default_families(cat: &Catalogue) -> Vec<Family> {
    cat.families().filter(|f| f.in_table() || *f == Family::Eii).collect()
}

fn accepted(cat: &Catalogue, spec: &GroupSpec) -> Result<bool, CliError> {
    if spec.family().in_table() {
        Ok(cat.in_table(spec)?)
    } else {
        Ok(true)
    }
}

/// Specs selected by the filters, in family order then by parameters. With
/// no ranges each family contributes its first valid parameter.
pub fn select(
    cat: &Catalogue,
    families: &[Family],
    n: Option<RangeInclusive<i64>>,
    m: Option<RangeInclusive<i64>>,
) -> Result<Vec<GroupSpec>, CliError> {
    let mut chosen: Vec<Family> = if families.is_empty() { default_families(cat) } else { families.to_vec() };
    chosen.sort_by_key(|f| Family::ALL.iter().position(|g| g == f));
    chosen.dedup();
    let explicit = n.is_some() || m.is_some();
    let n_range = n.clone().or_else(|| m.clone()).unwrap_or(1..=24);
    let m_range = m.or(n).unwrap_or(1..=24);
    let mut out = Vec::new();
    for family in chosen {
        let candidates: Vec<Vec<i64>> = match family.arity() {
            0 => vec![vec![]],
            1 => n_range.clone().map(|x| vec![x]).collect(),
            _ => m_range
                .clone()
                .flat_map(|a| n_range.clone().map(move |b| vec![a, b]))
                .collect(),
        };
        let mut rows = Vec::new();
        for p in candidates {
            let Ok(spec) = GroupSpec::new(family, p) else { continue };
            if cat.record(family).is_ok() && accepted(cat, &spec)? {
                rows.push(spec);
                if !explicit {
                    break;
                }
            }
        }
        rows.sort_by(|a, b| a.params().cmp(b.params()));
        out.extend(rows);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Ok(4..=8));
        assert_eq!(parse_range("4..=8"), Ok(4..=8));
        assert_eq!(parse_range("7"), Ok(7..=7));
        assert!(parse_range("8..4").is_err());
        assert!(parse_range("0..4").is_err());
        assert!(parse_range("a..4").is_err());
    }

    #[test]
    fn family_aliases() {
        assert_eq!(parse_family("SO*"), Ok(Family::SoStar));
        assert_eq!(parse_family("sostar"), Ok(Family::SoStar));
        assert_eq!(parse_family("SO+"), Ok(Family::SoPlus));
        assert_eq!(parse_family("Sp"), Ok(Family::SpPq));
        assert_eq!(parse_family("Sp_C"), Ok(Family::SpC));
        assert_eq!(parse_family("eii"), Ok(Family::Eii));
        assert_eq!(parse_family("e7"), Ok(Family::E7));
        assert!(parse_family("SO(3)").is_err());
    }
}
