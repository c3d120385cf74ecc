//! Loading and validating catalogue files.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use super::expr::{Expr, ExprError};
use super::spec::Family;
use super::CatalogueError;
use crate::rootkit::RootType;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRecord {
    family: String,
    params: Vec<String>,
    param_constraints: String,
    #[serde(default)]
    table_range: Option<String>,
    restricted: Vec<RawRestricted>,
    #[serde(default, rename = "eps_G")]
    eps_g: Option<String>,
    #[serde(default, rename = "n_G")]
    n_g: Option<Vec<RawPiece>>,
    #[serde(default)]
    v_cpt: Option<Vec<RawPiece>>,
    provenance: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRestricted {
    #[serde(default)]
    when: Option<String>,
    #[serde(rename = "type")]
    root_type: String,
    rank: String,
    mult: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPiece {
    #[serde(default)]
    when: Option<String>,
    value: String,
}

/// One branch of a piecewise definition.
#[derive(Debug, Clone)]
pub struct Piece<T> {
    pub when: Option<Expr>,
    pub value: T,
}

#[derive(Debug, Clone)]
pub struct RestrictedPiece {
    pub root_type: RootType,
    pub rank: Expr,
    /// Multiplicity expression per length class, keyed by class name.
    pub mult: BTreeMap<String, Expr>,
}

/// A validated catalogue entry for one family.
#[derive(Debug, Clone)]
pub struct FamilyRecord {
    pub family: Family,
    pub line: usize,
    pub params: Vec<String>,
    pub param_constraints: Expr,
    pub table_range: Option<Expr>,
    pub restricted: Vec<Piece<RestrictedPiece>>,
    pub eps_g: Option<Expr>,
    pub n_g: Option<Vec<Piece<Expr>>>,
    pub v_cpt: Option<Vec<Piece<Expr>>>,
    pub provenance: BTreeMap<String, String>,
}

pub(super) fn parse_text(text: &str) -> Result<BTreeMap<Family, FamilyRecord>, CatalogueError> {
    let mut out = BTreeMap::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let de = &mut serde_json::Deserializer::from_str(trimmed);
        let raw: RawRecord = serde_path_to_error::deserialize(de).map_err(|e| CatalogueError::Schema {
            line,
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
        let record = validate(raw, line)?;
        if out.contains_key(&record.family) {
            return Err(CatalogueError::DuplicateFamily { line, key: record.family.key().to_string() });
        }
        out.insert(record.family, record);
    }
    if out.is_empty() {
        return Err(CatalogueError::NoRecords);
    }
    Ok(out)
}

pub(super) fn read_file(path: &Path) -> Result<String, CatalogueError> {
    std::fs::read_to_string(path).map_err(|source| CatalogueError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn validate(raw: RawRecord, line: usize) -> Result<FamilyRecord, CatalogueError> {
    let family = Family::from_key(&raw.family)
        .ok_or_else(|| CatalogueError::UnknownFamily { line, key: raw.family.clone() })?;
    let expected: Vec<&str> = match family.arity() {
        0 => vec![],
        1 => vec!["n"],
        _ => vec!["m", "n"],
    };
    if raw.params != expected {
        return Err(CatalogueError::Schema {
            line,
            path: "params".into(),
            message: format!("family {} expects parameters {:?}", family.key(), expected),
        });
    }
    let expr = |field: &str, src: &str| -> Result<Expr, CatalogueError> {
        let e = Expr::parse(src).map_err(|source| CatalogueError::BadExpr {
            line,
            field: field.to_string(),
            source,
        })?;
        if let Some(v) = e.variables().into_iter().find(|v| !expected.iter().any(|p| p.starts_with(*v))) {
            return Err(CatalogueError::BadExpr {
                line,
                field: field.to_string(),
                source: ExprError::Unbound(v),
            });
        }
        Ok(e)
    };
    let pieces = |field: &str, raw: Option<Vec<RawPiece>>| -> Result<Option<Vec<Piece<Expr>>>, CatalogueError> {
        raw.map(|ps| {
            ps.into_iter()
                .enumerate()
                .map(|(i, p)| {
                    Ok(Piece {
                        when: p.when.as_deref().map(|w| expr(&format!("{field}[{i}].when"), w)).transpose()?,
                        value: expr(&format!("{field}[{i}].value"), &p.value)?,
                    })
                })
                .collect()
        })
        .transpose()
    };

    if raw.restricted.is_empty() {
        return Err(CatalogueError::Schema {
            line,
            path: "restricted".into(),
            message: "at least one restricted-root piece is required".into(),
        });
    }
    let mut restricted = Vec::new();
    for (i, piece) in raw.restricted.into_iter().enumerate() {
        let field = format!("restricted[{i}]");
        let root_type: RootType = piece.root_type.parse().map_err(|_| CatalogueError::Schema {
            line,
            path: format!("{field}.type"),
            message: format!("unknown root system type `{}`", piece.root_type),
        })?;
        let classes: Vec<&str> = root_type.length_classes().iter().map(|(c, _)| *c).collect();
        for class in &classes {
            if !piece.mult.contains_key(*class) {
                return Err(CatalogueError::MissingClass { line, class: class.to_string() });
            }
        }
        if let Some(extra) = piece.mult.keys().find(|k| !classes.contains(&k.as_str())) {
            return Err(CatalogueError::UnknownClass { line, class: extra.clone() });
        }
        let mut mult = BTreeMap::new();
        for (class, src) in &piece.mult {
            mult.insert(class.clone(), expr(&format!("{field}.mult.{class}"), src)?);
        }
        restricted.push(Piece {
            when: piece.when.as_deref().map(|w| expr(&format!("{field}.when"), w)).transpose()?,
            value: RestrictedPiece {
                root_type,
                rank: expr(&format!("{field}.rank"), &piece.rank)?,
                mult,
            },
        });
    }

    Ok(FamilyRecord {
        family,
        line,
        params: raw.params,
        param_constraints: expr("param_constraints", &raw.param_constraints)?,
        table_range: raw.table_range.as_deref().map(|t| expr("table_range", t)).transpose()?,
        restricted,
        eps_g: raw.eps_g.as_deref().map(|e| expr("eps_G", e)).transpose()?,
        n_g: pieces("n_G", raw.n_g)?,
        v_cpt: pieces("v_cpt", raw.v_cpt)?,
        provenance: raw.provenance,
    })
}
