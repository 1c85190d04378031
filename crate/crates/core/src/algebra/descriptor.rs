use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which Euclidean Jordan algebra an [`Element`](super::Element) lives in.
///
/// Text form (used by the CLI and the JSON schema):
/// `rn:<n>` | `sym:<n>` | `spin:<n>` | `sum(<d>,<d>,...)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AlgebraDescriptor {
    /// `ℝⁿ` with the componentwise product.
    Componentwise(usize),
    /// Real symmetric `n×n` matrices with `x∘y = (xy + yx)/2`.
    RealSymmetric(usize),
    /// The spin factor `ℝ ⊕ ℝⁿ⁻¹` (dimension `n`, rank 2).
    SpinFactor(usize),
    DirectSum(Vec<AlgebraDescriptor>),
}

/// A simple (non-sum) summand together with its coordinate offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block<'a> {
    pub kind: &'a AlgebraDescriptor,
    pub offset: usize,
    pub dim: usize,
}

impl AlgebraDescriptor {
    pub fn dim(&self) -> usize {
        match self {
            Self::Componentwise(n) | Self::SpinFactor(n) => *n,
            Self::RealSymmetric(n) => n * (n + 1) / 2,
            Self::DirectSum(parts) => parts.iter().map(Self::dim).sum(),
        }
    }

    pub fn rank(&self) -> usize {
        match self {
            Self::Componentwise(n) | Self::RealSymmetric(n) => *n,
            Self::SpinFactor(_) => 2,
            Self::DirectSum(parts) => parts.iter().map(Self::rank).sum(),
        }
    }

    /// Checks the structural invariants (sizes, summand count).
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Parse { position: 0, message: msg });
        match self {
            Self::Componentwise(0) | Self::RealSymmetric(0) => bad(format!("{self}: size must be ≥ 1")),
            Self::SpinFactor(n) if *n < 2 => bad(format!("{self}: spin factor needs n ≥ 2")),
            Self::DirectSum(parts) if parts.len() < 2 => bad("a direct sum needs at least two summands".into()),
            Self::DirectSum(parts) => parts.iter().try_for_each(Self::validate),
            _ => Ok(()),
        }
    }

    /// Flattens nested direct sums into the list of simple summands.
    pub fn blocks(&self) -> Vec<Block<'_>> {
        let mut out = Vec::new();
        self.collect_blocks(0, &mut out);
        out
    }

    fn collect_blocks<'a>(&'a self, offset: usize, out: &mut Vec<Block<'a>>) -> usize {
        match self {
            Self::DirectSum(parts) => {
                let mut off = offset;
                for p in parts {
                    off = p.collect_blocks(off, out);
                }
                off
            }
            simple => {
                let dim = simple.dim();
                out.push(Block { kind: simple, offset, dim });
                offset + dim
            }
        }
    }
}

impl fmt::Display for AlgebraDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Componentwise(n) => write!(f, "rn:{n}"),
            Self::RealSymmetric(n) => write!(f, "sym:{n}"),
            Self::SpinFactor(n) => write!(f, "spin:{n}"),
            Self::DirectSum(parts) => {
                f.write_str("sum(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for AlgebraDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_descriptor(s)
    }
}

/// Parses the descriptor grammar. Whitespace is not allowed.
pub fn parse_descriptor(s: &str) -> Result<AlgebraDescriptor> {
    let mut p = Parser { src: s.as_bytes(), pos: 0 };
    let d = p.descriptor()?;
    if p.pos != s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(d)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> Error {
        Error::Parse { position: self.pos, message: message.to_string() }
    }

    fn eat(&mut self, token: &str) -> bool {
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a size"));
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| Error::Parse { position: start, message: "size out of range".into() })
    }

    fn descriptor(&mut self) -> Result<AlgebraDescriptor> {
        let start = self.pos;
        let at = |e: Error| match e {
            Error::Parse { message, .. } => Error::Parse { position: start, message },
            other => other,
        };
        if self.eat("sum(") {
            let mut parts = vec![self.descriptor()?];
            while self.eat(",") {
                parts.push(self.descriptor()?);
            }
            if !self.eat(")") {
                return Err(self.error("expected ',' or ')'"));
            }
            let d = AlgebraDescriptor::DirectSum(parts);
            d.validate().map_err(at)?;
            return Ok(d);
        }
        let ctor: fn(usize) -> AlgebraDescriptor = if self.eat("rn:") {
            AlgebraDescriptor::Componentwise
        } else if self.eat("sym:") {
            AlgebraDescriptor::RealSymmetric
        } else if self.eat("spin:") {
            AlgebraDescriptor::SpinFactor
        } else {
            return Err(self.error("expected 'rn:', 'sym:', 'spin:' or 'sum('"));
        };
        let d = ctor(self.number()?);
        d.validate().map_err(at)?;
        Ok(d)
    }
}
