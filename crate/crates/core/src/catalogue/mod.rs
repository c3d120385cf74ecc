//! Catalogue of the group families: restricted root data, multiplicities and
//! tabulated invariants, loaded from a line-oriented JSON file.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::path::Path;
use std::sync::{Mutex, OnceLock};

use thiserror::Error;

use crate::rootkit::{build_root_system, dynkin, RootError, RootSystem, RootType, SimpleSet};

pub mod expr;
pub mod spec;
mod store;

pub use expr::{Bindings, Expr, ExprError};
pub use spec::{parse_group_spec, Family, GroupSpec, SpecError};
pub use store::{FamilyRecord, Piece, RestrictedPiece};

const BUNDLED: &str = include_str!("../../data/default.jsonl");

#[derive(Debug, Error)]
pub enum CatalogueError {
    #[error("cannot read catalogue {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: schema error at `{path}`: {message}")]
    Schema { line: usize, path: String, message: String },
    #[error("line {line}: unknown family key `{key}`")]
    UnknownFamily { line: usize, key: String },
    #[error("line {line}: family `{key}` appears twice")]
    DuplicateFamily { line: usize, key: String },
    #[error("line {line}: missing class `{class}` in mult")]
    MissingClass { line: usize, class: String },
    #[error("line {line}: class `{class}` does not belong to this root type")]
    UnknownClass { line: usize, class: String },
    #[error("line {line}: bad expression in `{field}`: {source}")]
    BadExpr {
        line: usize,
        field: String,
        #[source]
        source: ExprError,
    },
    #[error("catalogue contains no records")]
    NoRecords,
    #[error("family {0} is not in the catalogue")]
    NotCatalogued(Family),
    #[error("{spec} is outside the catalogue's validity range for its family")]
    OutsideValidity { spec: String },
    #[error("{spec}: the catalogue has no `{field}` value")]
    NoValue { spec: String, field: &'static str },
    #[error("{spec}: evaluating `{field}` failed: {source}")]
    Eval {
        spec: String,
        field: String,
        #[source]
        source: ExprError,
    },
    #[error("{spec}: {source}")]
    Root {
        spec: String,
        #[source]
        source: RootError,
    },
    #[error("no catalogued algebra has restricted signature {0}")]
    Unidentified(Signature),
    #[error("signature {signature} is ambiguous: {candidates}")]
    Ambiguous { signature: Signature, candidates: String },
}

/// Which tabulated column to read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Invariant {
    NG,
    VCpt,
}

impl Invariant {
    fn field(self) -> &'static str {
        match self {
            Invariant::NG => "n_G",
            Invariant::VCpt => "v_cpt",
        }
    }
}

/// A stored value with its provenance note.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tabulated {
    pub value: i64,
    pub provenance: String,
}

/// Restricted root type with multiplicities listed from the longest roots down.
///
/// Types are normalised so that `B2` reads as `C2` and `D3` as `A3`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub root_type: RootType,
    pub rank: usize,
    pub mults: Vec<i64>,
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.mults.iter().map(i64::to_string).collect();
        write!(f, "{}{}[{}]", self.root_type, self.rank, m.join(","))
    }
}

fn normalise(t: RootType, rank: usize) -> RootType {
    match (t, rank) {
        (RootType::B, 2) => RootType::C,
        (RootType::D, 3) => RootType::A,
        _ => t,
    }
}

/// Everything the computations need to know about one group.
#[derive(Debug, Clone)]
pub struct GroupDescriptor {
    pub spec: GroupSpec,
    pub restricted_type: RootType,
    pub rank: usize,
    /// Multiplicity per length-class name.
    pub mult: BTreeMap<String, i64>,
    pub eps_g: Option<i64>,
    pub n_g: Option<Tabulated>,
    pub v_cpt: Option<Tabulated>,
    pub in_table: bool,
    pub mult_provenance: String,
    rs: RootSystem,
    root_mult: Vec<i64>,
}

impl GroupDescriptor {
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// `dim g_β` for the root with index `i` in [`RootSystem::roots`].
    pub fn mult_of_root(&self, i: usize) -> i64 {
        self.root_mult[i]
    }

    pub fn root_mults(&self) -> &[i64] {
        &self.root_mult
    }

    pub fn is_complex(&self) -> bool {
        self.spec.family().is_complex()
    }

    /// Signature of the sub-root-system spanned by a connected set of simple roots.
    pub fn signature_of(&self, set: SimpleSet) -> Signature {
        let rs = &self.rs;
        let mut by_len: BTreeMap<std::cmp::Reverse<i64>, i64> = BTreeMap::new();
        let mut nonreduced = false;
        for (i, r) in rs.positive_roots().iter().enumerate() {
            if !r.support().is_subset(set) {
                continue;
            }
            let len = rs.norm2(&r.coords);
            let m = self.root_mult[i];
            let prev = by_len.insert(std::cmp::Reverse(len), m);
            debug_assert!(prev.is_none_or(|p| p == m), "multiplicity not constant on a length class");
            let double: Vec<i64> = r.coords.iter().map(|x| 2 * x).collect();
            nonreduced |= rs.contains(&double);
        }
        let (t, rank) = if nonreduced {
            (RootType::BC, set.len())
        } else {
            dynkin::connected_type(rs, set)
        };
        Signature {
            root_type: t,
            rank,
            mults: by_len.into_values().collect(),
        }
    }

    pub fn signature(&self) -> Signature {
        self.signature_of(SimpleSet::full(self.rank))
    }
}

/// An immutable, validated catalogue.
#[derive(Debug)]
pub struct Catalogue {
    records: BTreeMap<Family, FamilyRecord>,
    identify_cache: Mutex<HashMap<Signature, Vec<GroupSpec>>>,
}

impl Catalogue {
    pub fn from_text(text: &str) -> Result<Self, CatalogueError> {
        Ok(Catalogue {
            records: store::parse_text(text)?,
            identify_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn load(path: &Path) -> Result<Self, CatalogueError> {
        Self::from_text(&store::read_file(path)?)
    }

    /// The catalogue shipped with the crate.
    pub fn bundled() -> &'static Catalogue {
        static CELL: OnceLock<Catalogue> = OnceLock::new();
        CELL.get_or_init(|| Catalogue::from_text(BUNDLED).expect("bundled catalogue is valid"))
    }

    pub fn bundled_text() -> &'static str {
        BUNDLED
    }

    pub fn families(&self) -> impl Iterator<Item = Family> + '_ {
        self.records.keys().copied()
    }

    pub fn record(&self, family: Family) -> Result<&FamilyRecord, CatalogueError> {
        self.records.get(&family).ok_or(CatalogueError::NotCatalogued(family))
    }

    fn eval_bool(&self, spec: &GroupSpec, field: &str, e: &Expr) -> Result<bool, CatalogueError> {
        e.eval_bool(Bindings::from_params(spec.params()))
            .map_err(|source| CatalogueError::Eval { spec: spec.to_string(), field: field.into(), source })
    }

    fn eval_int(&self, spec: &GroupSpec, field: &str, e: &Expr) -> Result<i64, CatalogueError> {
        e.eval_int(Bindings::from_params(spec.params()))
            .map_err(|source| CatalogueError::Eval { spec: spec.to_string(), field: field.into(), source })
    }

    fn checked_record(&self, spec: &GroupSpec) -> Result<&FamilyRecord, CatalogueError> {
        let rec = self.record(spec.family())?;
        if !self.eval_bool(spec, "param_constraints", &rec.param_constraints)? {
            return Err(CatalogueError::OutsideValidity { spec: spec.to_string() });
        }
        Ok(rec)
    }

    fn first_piece<'a, T>(
        &self,
        spec: &GroupSpec,
        field: &'static str,
        pieces: &'a [Piece<T>],
    ) -> Result<&'a T, CatalogueError> {
        for p in pieces {
            match &p.when {
                Some(w) if !self.eval_bool(spec, field, w)? => continue,
                _ => return Ok(&p.value),
            }
        }
        Err(CatalogueError::NoValue { spec: spec.to_string(), field })
    }

    /// Whether `spec` lies in the parameter range covered by the table rows.
    pub fn in_table(&self, spec: &GroupSpec) -> Result<bool, CatalogueError> {
        let rec = self.checked_record(spec)?;
        match &rec.table_range {
            Some(t) => self.eval_bool(spec, "table_range", t),
            None => Ok(false),
        }
    }

    /// Evaluates a stored closed form for `n(G)` or `v(G_cpt)`.
    pub fn tabulated_invariant(&self, spec: &GroupSpec, which: Invariant) -> Result<Tabulated, CatalogueError> {
        let rec = self.checked_record(spec)?;
        let field = which.field();
        let pieces = match which {
            Invariant::NG => &rec.n_g,
            Invariant::VCpt => &rec.v_cpt,
        };
        let pieces = pieces
            .as_ref()
            .ok_or(CatalogueError::NoValue { spec: spec.to_string(), field })?;
        let e = self.first_piece(spec, field, pieces)?;
        Ok(Tabulated {
            value: self.eval_int(spec, field, e)?,
            provenance: rec.provenance.get(field).cloned().unwrap_or_else(|| "catalogue".into()),
        })
    }

    /// Restricted type, rank and class multiplicities, without building roots.
    fn restricted_data(
        &self,
        spec: &GroupSpec,
    ) -> Result<(RootType, usize, BTreeMap<String, i64>), CatalogueError> {
        let rec = self.checked_record(spec)?;
        let piece = self.first_piece(spec, "restricted", &rec.restricted)?;
        let rank = self.eval_int(spec, "restricted.rank", &piece.rank)?;
        let mut mult = BTreeMap::new();
        for (class, e) in &piece.mult {
            mult.insert(class.clone(), self.eval_int(spec, &format!("mult.{class}"), e)?);
        }
        let rank = usize::try_from(rank).map_err(|_| CatalogueError::OutsideValidity { spec: spec.to_string() })?;
        Ok((piece.root_type, rank, mult))
    }

    /// Builds the full descriptor, including the restricted root system.
    pub fn describe(&self, spec: &GroupSpec) -> Result<GroupDescriptor, CatalogueError> {
        let rec = self.checked_record(spec)?;
        let (t, rank, mult) = self.restricted_data(spec)?;
        let rs = build_root_system(t, rank)
            .map_err(|source| CatalogueError::Root { spec: spec.to_string(), source })?;
        let by_len: HashMap<i64, i64> = t
            .length_classes()
            .iter()
            .map(|(name, len)| (*len, mult[*name]))
            .collect();
        let root_mult = rs.roots().iter().map(|r| by_len[&rs.norm2(&r.coords)]).collect();
        let optional = |which| match self.tabulated_invariant(spec, which) {
            Ok(v) => Ok(Some(v)),
            Err(CatalogueError::NoValue { .. }) => Ok(None),
            Err(e) => Err(e),
        };
        Ok(GroupDescriptor {
            spec: spec.clone(),
            restricted_type: t,
            rank,
            eps_g: rec.eps_g.as_ref().map(|e| self.eval_int(spec, "eps_G", e)).transpose()?,
            n_g: optional(Invariant::NG)?,
            v_cpt: optional(Invariant::VCpt)?,
            in_table: self.in_table(spec)?,
            mult_provenance: rec.provenance.get("mult").cloned().unwrap_or_default(),
            mult,
            rs,
            root_mult,
        })
    }

    /// Signature of a catalogued group, read off its record.
    pub fn signature(&self, spec: &GroupSpec) -> Result<Signature, CatalogueError> {
        let (t, rank, mult) = self.restricted_data(spec)?;
        Ok(Signature {
            root_type: normalise(t, rank),
            rank,
            mults: t.length_classes().iter().map(|(c, _)| mult[*c]).collect(),
        })
    }

    /// All catalogued groups whose restricted data matches `sig`.
    pub fn identify(&self, sig: &Signature) -> Vec<GroupSpec> {
        if let Some(hit) = self.identify_cache.lock().unwrap().get(sig) {
            return hit.clone();
        }
        let r = sig.rank as i64;
        let max_mult = sig.mults.iter().copied().max().unwrap_or(0);
        let mut found = Vec::new();
        let mut consider = |family: Family, params: Vec<i64>| {
            if let Ok(spec) = GroupSpec::new(family, params) {
                if self.signature(&spec).is_ok_and(|s| &s == sig) {
                    found.push(spec);
                }
            }
        };
        for family in self.families() {
            match family.arity() {
                0 => consider(family, vec![]),
                1 => (1..=2 * r + 3).for_each(|n| consider(family, vec![n])),
                _ => {
                    for n in 1..=2 * r + 3 {
                        for m in n..=n + max_mult + 1 {
                            consider(family, vec![m, n]);
                        }
                    }
                }
            }
        }
        self.identify_cache.lock().unwrap().insert(sig.clone(), found.clone());
        found
    }

    /// The tabulated `n` of the algebra with signature `sig`; several matches
    /// are accepted only when they agree.
    pub fn n_of_signature(&self, sig: &Signature) -> Result<(i64, Vec<GroupSpec>), CatalogueError> {
        let matches = self.identify(sig);
        let mut values = Vec::new();
        for spec in &matches {
            if let Ok(t) = self.tabulated_invariant(spec, Invariant::NG) {
                values.push(t.value);
            }
        }
        match values.first() {
            None => Err(CatalogueError::Unidentified(sig.clone())),
            Some(&v) if values.iter().all(|&x| x == v) => Ok((v, matches)),
            Some(_) => Err(CatalogueError::Ambiguous {
                signature: sig.clone(),
                candidates: matches.iter().map(GroupSpec::to_string).collect::<Vec<_>>().join(", "),
            }),
        }
    }
}

/// Loads a catalogue file.
pub fn load_catalogue(path: &Path) -> Result<Catalogue, CatalogueError> {
    Catalogue::load(path)
}

/// Describes `spec` using the bundled catalogue.
pub fn describe(spec: &GroupSpec) -> Result<GroupDescriptor, CatalogueError> {
    Catalogue::bundled().describe(spec)
}

/// Reads `n(G)` or `v(G_cpt)` from the bundled catalogue.
pub fn tabulated_invariant(spec: &GroupSpec, which: Invariant) -> Result<i64, CatalogueError> {
    Catalogue::bundled().tabulated_invariant(spec, which).map(|t| t.value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> GroupSpec {
        parse_group_spec(s).unwrap()
    }

    #[test]
    fn bundled_has_every_family() {
        let cat = Catalogue::bundled();
        assert_eq!(cat.families().count(), Family::ALL.len());
        assert_eq!(cat.families().filter(|f| f.in_table()).count(), 14);
    }

    #[test]
    fn describe_examples() {
        let d = describe(&spec("SU(4,2)")).unwrap();
        assert_eq!((d.restricted_type, d.rank), (RootType::BC, 2));
        assert_eq!(d.mult["e_i+-e_j"], 2);
        assert_eq!(d.mult["e_i"], 4);
        assert_eq!(d.mult["2e_i"], 1);
        let d = describe(&spec("Sp(3,3)")).unwrap();
        assert_eq!((d.restricted_type, d.rank), (RootType::C, 3));
        assert_eq!(d.mult["e_i+-e_j"], 4);
        assert_eq!(d.mult["2e_i"], 3);
        let d = describe(&spec("SL(4,C)")).unwrap();
        assert_eq!((d.restricted_type, d.rank), (RootType::A, 3));
        assert!(d.root_mults().iter().all(|&m| m == 2));
        let d = describe(&spec("EII")).unwrap();
        assert_eq!(d.n_g, None);
        assert_eq!(d.mult_provenance, "Helgason, Differential Geometry, Lie Groups, and Symmetric Spaces, p. 534");
    }

    #[test]
    fn tabulated_examples() {
        assert_eq!(tabulated_invariant(&spec("SU(2,2)"), Invariant::NG).unwrap(), 6);
        assert_eq!(tabulated_invariant(&spec("SL(4,C)"), Invariant::VCpt).unwrap(), 5);
        assert_eq!(tabulated_invariant(&spec("SO*(8)"), Invariant::NG).unwrap(), 8);
        assert!(matches!(
            tabulated_invariant(&spec("EII"), Invariant::NG),
            Err(CatalogueError::NoValue { .. })
        ));
    }

    #[test]
    fn record_and_root_signatures_agree() {
        let cat = Catalogue::bundled();
        for text in [
            "SL(5,C)", "Sp(4,C)", "Sp(8,C)", "SO(9,C)", "SO(10,C)", "SL(4,H)", "SL(3,R)", "SO+(7,3)", "SO+(4,2)",
            "SO+(5,5)", "SU(4,2)", "SU(3,3)", "SU(2,2)", "Sp(3,2)", "Sp(2,2)", "SO*(8)", "SO*(10)", "SO*(12)", "E6",
            "E7", "E8", "F4", "G2", "EII",
        ] {
            let s = spec(text);
            let d = cat.describe(&s).unwrap();
            assert_eq!(d.signature(), cat.signature(&s).unwrap(), "{text}");
        }
    }

    #[test]
    fn identification_finds_coincidences_with_equal_n() {
        let cat = Catalogue::bundled();
        let sig = cat.signature(&spec("SU(2,2)")).unwrap();
        let (n, matches) = cat.n_of_signature(&sig).unwrap();
        assert_eq!(n, 6);
        assert!(matches.contains(&spec("SO+(4,2)")));
        let sig = cat.signature(&spec("SO*(8)")).unwrap();
        let (n, matches) = cat.n_of_signature(&sig).unwrap();
        assert_eq!(n, 8);
        assert!(matches.contains(&spec("SO+(6,2)")));
        let unknown = Signature { root_type: RootType::G2, rank: 2, mults: vec![1, 1] };
        assert!(matches!(cat.n_of_signature(&unknown), Err(CatalogueError::Unidentified(_))));
    }

    #[test]
    fn loader_rejects_bad_input() {
        assert!(matches!(Catalogue::from_text(""), Err(CatalogueError::NoRecords)));
        assert!(matches!(Catalogue::from_text("# only comments\n\n"), Err(CatalogueError::NoRecords)));
        let missing = r#"{"family":"SU","params":["m","n"],"param_constraints":"m >= n","restricted":[{"type":"C","rank":"n","mult":{"e_i+-e_j":"2"}}],"provenance":{}}"#;
        let err = Catalogue::from_text(missing).unwrap_err();
        assert_eq!(err.to_string(), "line 1: missing class `2e_i` in mult");
        let unknown = r#"{"family":"Spin","params":["n"],"param_constraints":"n >= 2","restricted":[],"provenance":{}}"#;
        assert!(matches!(Catalogue::from_text(unknown), Err(CatalogueError::UnknownFamily { .. })));
        let fractional = r#"{"family":"SL_C","params":["n"],"param_constraints":"n >= 2.5","restricted":[{"type":"A","rank":"n - 1","mult":{"e_i-e_j":"2"}}],"provenance":{}}"#;
        assert!(matches!(Catalogue::from_text(fractional), Err(CatalogueError::BadExpr { .. })));
        let no_field = r#"{"family":"SL_C","params":["n"],"restricted":[{"type":"A","rank":"n - 1","mult":{"e_i-e_j":"2"}}],"provenance":{}}"#;
        let err = Catalogue::from_text(no_field).unwrap_err();
        assert!(err.to_string().contains("param_constraints"), "{err}");
        let nested = r#"{"family":"SL_C","params":["n"],"param_constraints":"n >= 2","restricted":[{"type":"A","rank":3,"mult":{"e_i-e_j":"2"}}],"provenance":{}}"#;
        let err = Catalogue::from_text(nested).unwrap_err();
        assert!(err.to_string().contains("restricted[0].rank"), "{err}");
    }
}
