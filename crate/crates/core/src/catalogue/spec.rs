//! Group-spec strings such as `SU(4,2)`, `SO*(12)` or `Sp(6,C)`.
//!
//! ```text
//! spec   := name [ "(" arg { "," arg } ")" ]
//! name   := "SL" | "Sp" | "SO" | "SO+" | "SO*" | "SU" | "E6" | "E7" | "E8" | "F4" | "G2" | "EII"
//! arg    := integer | "C" | "H" | "R"
//! ```
//!
//! Matching is case-insensitive and whitespace between tokens is ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// The group families known to the catalogue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SlC,
    SpC,
    SoC,
    SlH,
    SoPlus,
    Su,
    SpPq,
    SoStar,
    E6,
    E7,
    E8,
    F4,
    G2,
    Eii,
    /// `SL(n,R)`; not a table row, but needed to name split subalgebras.
    SlR,
}

impl Family {
    /// Table order, followed by the auxiliary families.
    pub const ALL: [Family; 15] = [
        Family::SlC,
        Family::SpC,
        Family::SoC,
        Family::SlH,
        Family::SoPlus,
        Family::Su,
        Family::SpPq,
        Family::SoStar,
        Family::E6,
        Family::E7,
        Family::E8,
        Family::F4,
        Family::G2,
        Family::Eii,
        Family::SlR,
    ];

    /// Key used in catalogue files.
    pub fn key(self) -> &'static str {
        match self {
            Family::SlC => "SL_C",
            Family::SpC => "Sp_C",
            Family::SoC => "SO_C",
            Family::SlH => "SL_H",
            Family::SoPlus => "SOplus",
            Family::Su => "SU",
            Family::SpPq => "Sp_pq",
            Family::SoStar => "SOstar",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
            Family::F4 => "F4",
            Family::G2 => "G2",
            Family::Eii => "EII",
            Family::SlR => "SL_R",
        }
    }

    pub fn from_key(key: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.key() == key)
    }

    pub fn arity(self) -> usize {
        match self {
            Family::SoPlus | Family::Su | Family::SpPq => 2,
            Family::E6 | Family::E7 | Family::E8 | Family::F4 | Family::G2 | Family::Eii => 0,
            _ => 1,
        }
    }

    pub fn is_complex(self) -> bool {
        matches!(
            self,
            Family::SlC | Family::SpC | Family::SoC | Family::E6 | Family::E7 | Family::E8 | Family::F4 | Family::G2
        )
    }

    /// Whether the family is one of the table rows (as opposed to `SL(n,R)`).
    pub fn in_table(self) -> bool {
        self != Family::SlR
    }

    /// Family validity, returned as an explanation when violated.
    pub fn check_params(self, params: &[i64]) -> Result<(), String> {
        let ok = match (self, params) {
            (Family::SlC | Family::SlH | Family::SlR, [n]) => *n >= 2,
            (Family::SpC, [n]) => *n >= 2,
            (Family::SoC, [n]) => *n >= 7,
            (Family::SoStar, [n]) => *n >= 4,
            (Family::SoPlus, [m, n]) => (*m > *n && *n >= 2) || (*m == *n && *n >= 4),
            (Family::Su | Family::SpPq, [m, n]) => *m >= *n && *n >= 2,
            (_, []) => self.arity() == 0,
            _ => false,
        };
        if ok {
            return Ok(());
        }
        Err(match self {
            Family::SlC => "SL(n,C) requires n >= 2",
            Family::SlH => "SL(n,H) requires n >= 2",
            Family::SlR => "SL(n,R) requires n >= 2",
            Family::SpC => "Sp(2n,C) requires n >= 2",
            Family::SoC => "SO(n,C) requires n >= 7",
            Family::SoStar => "SO*(2n) requires n >= 4",
            Family::SoPlus => "SO+(m,n) requires m > n >= 2 or m = n >= 4",
            Family::Su => "SU(m,n) requires m >= n >= 2",
            Family::SpPq => "Sp(m,n) requires m >= n >= 2",
            _ => "exceptional groups take no parameters",
        }
        .to_string())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.key())
    }
}

/// A validated group together with its family parameters.
///
/// `Sp(2n,C)` and `SO*(2n)` store the half-argument `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    family: Family,
    params: Vec<i64>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("syntax error at byte {offset}: expected one of {}", expected.join(", "))]
    Syntax { offset: usize, expected: Vec<String> },
    #[error("unknown group family `{0}`")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {found}")]
    Arity { family: String, expected: usize, found: usize },
    #[error("{0}")]
    OutOfRange(String),
}

impl GroupSpec {
    pub fn new(family: Family, params: Vec<i64>) -> Result<Self, SpecError> {
        if params.len() != family.arity() {
            return Err(SpecError::Arity {
                family: family.key().to_string(),
                expected: family.arity(),
                found: params.len(),
            });
        }
        family.check_params(&params).map_err(SpecError::OutOfRange)?;
        Ok(GroupSpec { family, params })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[i64] {
        &self.params
    }

    pub fn parse(text: &str) -> Result<Self, SpecError> {
        parse_group_spec(text)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = &self.params;
        match self.family {
            Family::SlC => write!(f, "SL({},C)", p[0]),
            Family::SpC => write!(f, "Sp({},C)", 2 * p[0]),
            Family::SoC => write!(f, "SO({},C)", p[0]),
            Family::SlH => write!(f, "SL({},H)", p[0]),
            Family::SlR => write!(f, "SL({},R)", p[0]),
            Family::SoPlus => write!(f, "SO+({},{})", p[0], p[1]),
            Family::Su => write!(f, "SU({},{})", p[0], p[1]),
            Family::SpPq => write!(f, "Sp({},{})", p[0], p[1]),
            Family::SoStar => write!(f, "SO*({})", 2 * p[0]),
            Family::E6 => f.write_str("E6"),
            Family::E7 => f.write_str("E7"),
            Family::E8 => f.write_str("E8"),
            Family::F4 => f.write_str("F4"),
            Family::G2 => f.write_str("G2"),
            Family::Eii => f.write_str("EII"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_group_spec(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Arg {
    Int(i64),
    Field(char),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn syntax(&self, expected: &[&str]) -> SpecError {
        SpecError::Syntax {
            offset: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, c: char, expected: &[&str]) -> Result<(), SpecError> {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.syntax(expected))
        }
    }

    /// Family name: letters and digits, plus an optional `+` or `*` marker.
    fn name(&mut self) -> Result<String, SpecError> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.syntax(&["family name"]));
        }
        let mut name = rest[..len].to_string();
        self.pos += len;
        if let Some(marker @ ('+' | '*')) = self.peek() {
            name.push(marker);
            self.pos += 1;
        }
        Ok(name)
    }

    fn arg(&mut self) -> Result<Arg, SpecError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let len = rest
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(rest.len());
        let word = &rest[..len];
        if word.is_empty() {
            return Err(self.syntax(&["integer", "C", "H", "R"]));
        }
        if word.bytes().all(|b| b.is_ascii_digit()) {
            self.pos += len;
            return word.parse().map(Arg::Int).map_err(|_| {
                SpecError::OutOfRange(format!("parameter `{word}` is too large"))
            });
        }
        match word.to_ascii_uppercase().as_str() {
            f @ ("C" | "H" | "R") => {
                self.pos += len;
                Ok(Arg::Field(f.chars().next().unwrap()))
            }
            _ => Err(self.syntax(&["integer", "C", "H", "R"])),
        }
    }
}

/// Parses a group spec, validating arity and parameter ranges.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec, SpecError> {
    let mut lx = Lexer { src: text, pos: 0 };
    let raw_name = lx.name()?;
    let name = raw_name.to_ascii_uppercase();
    let mut args = Vec::new();
    if lx.peek() == Some('(') {
        lx.pos += 1;
        args.push(lx.arg()?);
        while lx.peek() == Some(',') {
            lx.pos += 1;
            args.push(lx.arg()?);
        }
        lx.expect(')', &["`,`", "`)`"])?;
    }
    if lx.peek().is_some() {
        return Err(lx.syntax(&["`(`", "end of input"]));
    }

    let unknown = || SpecError::UnknownFamily(raw_name.clone());
    let ints = |args: &[Arg]| -> Option<Vec<i64>> {
        args.iter()
            .map(|a| match a {
                Arg::Int(v) => Some(*v),
                Arg::Field(_) => None,
            })
            .collect()
    };
    let arity = |family: &str, expected: usize, found: usize| SpecError::Arity {
        family: family.to_string(),
        expected,
        found,
    };

    let (family, params) = match name.as_str() {
        "E6" | "E7" | "E8" | "F4" | "G2" | "EII" => {
            let family = Family::from_key(&name).ok_or_else(unknown)?;
            if !args.is_empty() {
                return Err(arity(&name, 0, args.len()));
            }
            (family, vec![])
        }
        "SL" | "SP" | "SO" => {
            // Either `X(n,F)` for a field, or `Sp(m,n)` for the quaternionic unitary group.
            match args.as_slice() {
                [Arg::Int(k), Arg::Field(field)] => {
                    let k = *k;
                    match (name.as_str(), field) {
                        ("SL", 'C') => (Family::SlC, vec![k]),
                        ("SL", 'H') => (Family::SlH, vec![k]),
                        ("SL", 'R') => (Family::SlR, vec![k]),
                        ("SO", 'C') => (Family::SoC, vec![k]),
                        ("SP", 'C') => {
                            if k % 2 != 0 {
                                return Err(SpecError::OutOfRange(
                                    "Sp(2n,C) requires even argument".into(),
                                ));
                            }
                            (Family::SpC, vec![k / 2])
                        }
                        _ => return Err(unknown()),
                    }
                }
                [Arg::Int(m), Arg::Int(n)] if name == "SP" => (Family::SpPq, vec![*m, *n]),
                _ if name == "SP" && ints(&args).is_some() => {
                    return Err(arity("Sp(m,n)", 2, args.len()))
                }
                _ => return Err(arity(&format!("{name}(n,F)"), 2, args.len())),
            }
        }
        "SO+" | "SU" => {
            let family = if name == "SU" { Family::Su } else { Family::SoPlus };
            let p = ints(&args).ok_or_else(|| lx_syntax_at_field(text))?;
            if p.len() != 2 {
                return Err(arity(&name, 2, p.len()));
            }
            (family, p)
        }
        "SO*" => {
            let p = ints(&args).ok_or_else(|| lx_syntax_at_field(text))?;
            if p.len() != 1 {
                return Err(arity("SO*", 1, p.len()));
            }
            if p[0] % 2 != 0 {
                return Err(SpecError::OutOfRange("SO*(2n) requires even argument".into()));
            }
            (Family::SoStar, vec![p[0] / 2])
        }
        _ => return Err(unknown()),
    };
    GroupSpec::new(family, params)
}

fn lx_syntax_at_field(text: &str) -> SpecError {
    let offset = text
        .char_indices()
        .skip_while(|(_, c)| *c != '(')
        .find(|(_, c)| c.is_ascii_alphabetic())
        .map_or(0, |(i, _)| i);
    SpecError::Syntax { offset, expected: vec!["integer".into()] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_canonical_forms() {
        let s = parse_group_spec("SU(4,2)").unwrap();
        assert_eq!(s.family(), Family::Su);
        assert_eq!(s.params(), &[4, 2]);
        let s = parse_group_spec("sl(5, h)").unwrap();
        assert_eq!(s.family(), Family::SlH);
        assert_eq!(s.params(), &[5]);
        assert_eq!(parse_group_spec("Sp(6,C)").unwrap().params(), &[3]);
        assert_eq!(parse_group_spec("SO*(12)").unwrap().params(), &[6]);
        assert_eq!(parse_group_spec(" so + ( 7 , 3 ) ").unwrap().to_string(), "SO+(7,3)");
    }

    #[test]
    fn round_trip() {
        for text in [
            "SL(4,C)", "Sp(6,C)", "SO(7,C)", "SL(5,H)", "SL(4,R)", "SO+(7,3)", "SO+(4,4)", "SU(4,2)",
            "Sp(3,2)", "SO*(12)", "E6", "E7", "E8", "F4", "G2", "EII",
        ] {
            assert_eq!(parse_group_spec(text).unwrap().to_string(), text);
        }
    }

    #[test]
    fn error_kinds() {
        assert_eq!(
            parse_group_spec("SO*(13)"),
            Err(SpecError::OutOfRange("SO*(2n) requires even argument".into()))
        );
        assert!(matches!(parse_group_spec("SU(2,3)"), Err(SpecError::OutOfRange(_))));
        assert!(matches!(parse_group_spec("SU(4)"), Err(SpecError::Arity { .. })));
        assert!(matches!(parse_group_spec("E6(3)"), Err(SpecError::Arity { .. })));
        assert!(matches!(parse_group_spec("Spin(7)"), Err(SpecError::UnknownFamily(_))));
        assert!(matches!(parse_group_spec("SU(4,"), Err(SpecError::Syntax { offset: 5, .. })));
        assert!(matches!(parse_group_spec("SU(4,2"), Err(SpecError::Syntax { .. })));
        assert!(matches!(parse_group_spec("(4,2)"), Err(SpecError::Syntax { offset: 0, .. })));
        assert!(matches!(parse_group_spec("SO(6,C)"), Err(SpecError::OutOfRange(_))));
        assert!(matches!(parse_group_spec("Sp(5,C)"), Err(SpecError::OutOfRange(_))));
        assert!(matches!(parse_group_spec("SU(4,2) x"), Err(SpecError::Syntax { .. })));
    }
}
