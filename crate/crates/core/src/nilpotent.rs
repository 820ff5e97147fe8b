//! Classical Jordan types, their reductive centralizers, and the orbit table
//! format for exceptional groups.
//!
//! A nilpotent `x` in `gl_n`, `sp_n` or `so_n` is determined up to conjugacy
//! by its Jordan partition. Writing the partition as `[s_1^r_1, ..., s_k^r_k]`,
//! the multiplicity space of the size-`s_i` blocks is an `r_i`-dimensional
//! space on which the reductive centralizer acts by its natural
//! representation. For `Sp` and `SO` that space inherits a form, symmetric
//! or alternating according to the parity of `s_i`.

use std::fmt;
use std::str::FromStr;

use crate::embeddings::{ClauseTag, EmbeddingStep};
use crate::rootsystem::{GroupType, Letter, SimpleType};
use crate::{Error, Result};

/// Which classical Lie algebra a nilpotent element lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum JordanKind {
    GL,
    Sp,
    SO,
}

impl FromStr for JordanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<JordanKind> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(JordanKind::GL),
            "SP" => Ok(JordanKind::Sp),
            "SO" => Ok(JordanKind::SO),
            _ => Err(Error::InvalidJordanType(format!("unknown kind `{s}`"))),
        }
    }
}

impl fmt::Display for JordanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JordanKind::GL => "GL",
            JordanKind::Sp => "Sp",
            JordanKind::SO => "SO",
        })
    }
}

/// Jordan block sizes with multiplicities, sizes strictly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JordanType {
    pub kind: JordanKind,
    pub parts: Vec<(usize, usize)>,
}

impl JordanType {
    /// Groups a partition (any order) into `(size, multiplicity)` pairs.
    pub fn from_partition(kind: JordanKind, partition: &[usize]) -> Result<JordanType> {
        if partition.contains(&0) {
            return Err(Error::InvalidJordanType("block sizes must be positive".into()));
        }
        let mut sizes = partition.to_vec();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let mut parts: Vec<(usize, usize)> = Vec::new();
        for s in sizes {
            match parts.last_mut() {
                Some((t, r)) if *t == s => *r += 1,
                _ => parts.push((s, 1)),
            }
        }
        Ok(JordanType { kind, parts })
    }

    /// Block sizes listed with repetition, largest first.
    pub fn partition(&self) -> Vec<usize> {
        self.parts.iter().flat_map(|&(s, r)| std::iter::repeat_n(s, r)).collect()
    }

    /// Size of the matrices.
    pub fn n(&self) -> usize {
        self.parts.iter().map(|(s, r)| s * r).sum()
    }

    fn well_formed(&self) -> bool {
        self.parts.iter().all(|&(s, r)| s > 0 && r > 0)
            && self.parts.windows(2).all(|p| p[0].0 > p[1].0)
    }

    fn parity_ok(&self) -> bool {
        self.parts.iter().all(|&(s, r)| match self.kind {
            JordanKind::GL => true,
            JordanKind::Sp => s % 2 == 0 || r % 2 == 0,
            JordanKind::SO => s % 2 == 1 || r % 2 == 0,
        })
    }

    fn require_valid(&self) -> Result<()> {
        if self.well_formed() && self.parity_ok() && (self.kind != JordanKind::Sp || self.n() % 2 == 0) {
            Ok(())
        } else {
            Err(Error::InvalidJordanType(self.to_string()))
        }
    }
}

impl fmt::Display for JordanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .parts
            .iter()
            .map(|&(s, r)| if r == 1 { s.to_string() } else { format!("{s}^{r}") })
            .collect();
        write!(f, "{} [{}]", self.kind, parts.join(","))
    }
}

/// True iff `jt` is the Jordan type of some nilpotent in the `n x n`
/// algebra of its kind: in `sp` odd blocks come in pairs, in `so` even
/// blocks come in pairs.
pub fn validate_jordan(jt: &JordanType, n: usize) -> bool {
    jt.n() == n && jt.require_valid().is_ok()
}

/// All valid Jordan types of the given kind and size, partitions in
/// reverse lexicographic order.
pub fn valid_jordan_types(kind: JordanKind, n: usize) -> Vec<JordanType> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for s in (1..=rest.min(max)).rev() {
            cur.push(s);
            go(rest - s, s, cur, out);
            cur.pop();
        }
    }
    let mut partitions = Vec::new();
    go(n, n, &mut Vec::new(), &mut partitions);
    partitions
        .into_iter()
        .map(|p| JordanType::from_partition(kind, &p).expect("positive parts"))
        .filter(|jt| validate_jordan(jt, n))
        .collect()
}

/// One factor `GL_r`, `Sp_r` or `SO_r` of the reductive centralizer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CentralizerFactor {
    pub kind: JordanKind,
    /// Dimension of the multiplicity space.
    pub r: usize,
}

impl CentralizerFactor {
    pub fn dimension(&self) -> usize {
        let r = self.r;
        match self.kind {
            JordanKind::GL => r * r,
            JordanKind::Sp => r * (r + 1) / 2,
            JordanKind::SO => r * (r - 1) / 2,
        }
    }

    /// Root-system type; `SO_1` is trivial and `SO_2` a rank-one torus.
    pub fn group_type(&self) -> GroupType {
        let st = |letter, rank| SimpleType::new(letter, rank).expect("valid classical rank");
        let r = self.r;
        let factors = match self.kind {
            JordanKind::GL if r == 1 => vec![st(Letter::T, 1)],
            JordanKind::GL => vec![st(Letter::A, r - 1), st(Letter::T, 1)],
            JordanKind::Sp => vec![st(Letter::C, r / 2)],
            JordanKind::SO if r == 1 => vec![],
            JordanKind::SO if r == 2 => vec![st(Letter::T, 1)],
            JordanKind::SO if r % 2 == 1 => vec![st(Letter::B, r / 2)],
            JordanKind::SO => vec![st(Letter::D, r / 2)],
        };
        GroupType::new(factors)
    }
}

impl fmt::Display for CentralizerFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind, self.r)
    }
}

/// The factors of `(G^x_red)°` in block-size order.
pub fn centralizer_factors(jt: &JordanType) -> Result<Vec<CentralizerFactor>> {
    jt.require_valid()?;
    Ok(jt
        .parts
        .iter()
        .map(|&(s, r)| {
            let kind = match jt.kind {
                JordanKind::GL => JordanKind::GL,
                // The form on the multiplicity space is symmetric iff the
                // ambient form and the form on one block string agree in type.
                JordanKind::Sp if s % 2 == 1 => JordanKind::Sp,
                JordanKind::Sp => JordanKind::SO,
                JordanKind::SO if s % 2 == 1 => JordanKind::SO,
                JordanKind::SO => JordanKind::Sp,
            };
            CentralizerFactor { kind, r }
        })
        .collect())
}

/// Root-system type of the reductive centralizer, one group per block size.
pub fn reductive_centralizer(jt: &JordanType) -> Result<GroupType> {
    let mut out = GroupType::trivial();
    for f in centralizer_factors(jt)? {
        out = out.product(&f.group_type());
    }
    Ok(out)
}

/// Dimension of the reductive centralizer.
pub fn reductive_dimension(jt: &JordanType) -> Result<usize> {
    Ok(centralizer_factors(jt)?.iter().map(CentralizerFactor::dimension).sum())
}

/// Dimension of the centralizer of `x` in its classical Lie algebra.
///
/// With `p*` the dual partition, the `gl` centralizer has dimension
/// `sum (p*_i)^2`; in `sp` and `so` one adds, respectively subtracts, the
/// number of odd parts and halves.
pub fn centralizer_dimension(jt: &JordanType) -> Result<usize> {
    jt.require_valid()?;
    let partition = jt.partition();
    let largest = partition.first().copied().unwrap_or(0);
    let gl: usize = (1..=largest)
        .map(|i| partition.iter().filter(|&&s| s >= i).count().pow(2))
        .sum();
    let odd = partition.iter().filter(|&&s| s % 2 == 1).count();
    Ok(match jt.kind {
        JordanKind::GL => gl,
        JordanKind::Sp => (gl + odd) / 2,
        JordanKind::SO => (gl - odd) / 2,
    })
}

/// Dimension of the unipotent radical of the centralizer.
pub fn unipotent_dimension(jt: &JordanType) -> Result<usize> {
    Ok(centralizer_dimension(jt)? - reductive_dimension(jt)?)
}

/// Chain of embedding steps, or the marker for a torus centralizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Chain {
    Torus,
    Steps { start: GroupType, steps: Vec<EmbeddingStep> },
}

impl Chain {
    /// Last group of the chain; the start when there are no steps.
    pub fn end(&self) -> Option<&GroupType> {
        match self {
            Chain::Torus => None,
            Chain::Steps { start, steps } => Some(steps.last().map_or(start, |s| &s.amb)),
        }
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chain::Torus => f.write_str("TORUS"),
            Chain::Steps { start, steps } => {
                write!(f, "{start}")?;
                for s in steps {
                    write!(f, "{}{}", s.arrow(), s.amb)?;
                }
                Ok(())
            }
        }
    }
}

/// One row of an orbit table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitRecord {
    pub ambient: GroupType,
    pub label: String,
    pub centralizer: GroupType,
    pub chain: Chain,
    /// 1-based line number in the source text.
    pub line: usize,
}

/// The five shipped tables, as `(file name, contents)`.
pub const SHIPPED_TABLES: [(&str, &str); 5] = [
    ("e8.tbl", include_str!("../../../data/e8.tbl")),
    ("e7.tbl", include_str!("../../../data/e7.tbl")),
    ("e6.tbl", include_str!("../../../data/e6.tbl")),
    ("f4.tbl", include_str!("../../../data/f4.tbl")),
    ("g2.tbl", include_str!("../../../data/g2.tbl")),
];

/// Parses every shipped table.
pub fn shipped_records() -> Vec<OrbitRecord> {
    SHIPPED_TABLES
        .iter()
        .flat_map(|(_, text)| parse_orbit_tables(text).expect("shipped tables parse"))
        .collect()
}

struct Cursor<'a> {
    line: usize,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.text[..at].chars().count() + 1,
            message: message.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn group_type(&mut self) -> Result<GroupType> {
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '.' || c == '~'))
            .unwrap_or(self.rest().len());
        let word = &self.rest()[..len];
        if word.is_empty() || word == "1" {
            return self.err(start, "expected a type such as A1.B6");
        }
        match word.parse() {
            Ok(t) => {
                self.pos += len;
                Ok(t)
            }
            Err(_) => self.err(start, format!("bad type `{word}`")),
        }
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let len = self.rest().find(|c: char| !c.is_ascii_digit()).unwrap_or(self.rest().len());
        if len == 0 {
            return self.err(start, "expected an integer");
        }
        self.pos += len;
        self.text[start..self.pos].parse().or_else(|_| self.err(start, "integer too large"))
    }

    fn chain(&mut self) -> Result<Chain> {
        if self.rest() == "TORUS" {
            self.pos = self.text.len();
            return Ok(Chain::Torus);
        }
        let start = self.group_type()?;
        let mut steps = Vec::new();
        let mut sub = start.clone();
        while !self.rest().is_empty() {
            if !self.eat(" -[") {
                return self.err(self.pos, "expected ` -[`");
            }
            let tag_at = self.pos;
            let len = self.rest().find([',', ']']).unwrap_or(self.rest().len());
            let word = &self.rest()[..len];
            let tag: ClauseTag = match word.parse() {
                Ok(t) if t != ClauseTag::Torus => t,
                _ => return self.err(tag_at, format!("unknown clause `{word}`")),
            };
            self.pos += len;
            let p_gt = if self.eat(",") {
                if !self.eat("p>") {
                    return self.err(self.pos, "expected `p>`");
                }
                Some(self.uint()?)
            } else {
                None
            };
            if !self.eat("]-> ") {
                return self.err(self.pos, "expected `]-> `");
            }
            let amb = self.group_type()?;
            let mut step = EmbeddingStep::new(sub, tag, amb.clone());
            if let Some(n) = p_gt {
                step = step.with_p_gt(n);
            }
            steps.push(step);
            sub = amb;
        }
        Ok(Chain::Steps { start, steps })
    }
}

/// Parses a single chain such as `A2 -[diag]-> A2.A2 -[levi]-> E6`, or `TORUS`.
pub fn parse_chain(text: &str) -> Result<Chain> {
    let mut cur = Cursor { line: 1, text, pos: 0 };
    cur.chain()
}

impl FromStr for Chain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Chain> {
        parse_chain(s)
    }
}

/// Parses table text. Lines are LF-terminated; blank lines and `#` comments
/// are skipped, and a comment `# ambient: X` sets the ambient group for the
/// rows that follow. A row is `label TAB centralizer TAB chain`.
pub fn parse_orbit_tables(text: &str) -> Result<Vec<OrbitRecord>> {
    let mut out = Vec::new();
    let mut ambient: Option<GroupType> = None;
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Ok(out);
    }
    for (i, raw) in body.split('\n').enumerate() {
        let mut cur = Cursor {
            line: i + 1,
            text: raw,
            pos: 0,
        };
        if let Some(at) = raw.find('\r') {
            return cur.err(at, "carriage return; lines must end in LF only");
        }
        if raw.ends_with([' ', '\t']) {
            return cur.err(raw.trim_end().len(), "trailing whitespace");
        }
        if raw.is_empty() {
            continue;
        }
        if raw.starts_with("# ambient: ") {
            cur.pos = "# ambient: ".len();
            let t = cur.group_type()?;
            if cur.pos != raw.len() {
                return cur.err(cur.pos, "unexpected text after ambient type");
            }
            ambient = Some(t);
            continue;
        }
        if raw.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = raw.split('\t').collect();
        if fields.len() != 3 {
            return cur.err(0, format!("expected 3 tab-separated fields, found {}", fields.len()));
        }
        let Some(amb) = ambient.clone() else {
            return cur.err(0, "row before any `# ambient:` line");
        };
        let label = fields[0];
        if label.is_empty() || label.contains(' ') {
            return cur.err(0, "labels are nonempty and contain no spaces");
        }
        cur.pos = label.len() + 1;
        let centralizer = cur.group_type()?;
        if !cur.eat("\t") {
            return cur.err(cur.pos, "expected a tab after the centralizer type");
        }
        let chain = cur.chain()?;
        out.push(OrbitRecord {
            ambient: amb,
            label: label.to_string(),
            centralizer,
            chain,
            line: i + 1,
        });
    }
    Ok(out)
}

/// Writes records back in table format. Comments are not preserved; an
/// ambient line is emitted whenever the ambient group changes.
pub fn serialize_orbit_tables(records: &[OrbitRecord]) -> String {
    let mut out = String::new();
    let mut ambient: Option<&GroupType> = None;
    for r in records {
        if ambient != Some(&r.ambient) {
            out.push_str(&format!("# ambient: {}\n", r.ambient));
            ambient = Some(&r.ambient);
        }
        out.push_str(&format!("{}\t{}\t{}\n", r.label, r.centralizer, r.chain));
    }
    out
}
