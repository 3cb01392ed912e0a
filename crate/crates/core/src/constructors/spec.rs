//! Spec literals: `w:1rr-3ss-3sr`, `g:q=2`, `p:c=1;s=1,1,2` and a few named graphs.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{
    base_graph, complete, complete_bipartite, cube, cycle, disjoint_wheels, grotzsch_class, nonplanar_counterexample,
    octahedron, octahedron_minus, plane_multiwheel, projective_multiwheel, unclosed_sequence, wheel, Built,
    ConstructError, MultiwheelSpec, ProjectiveSpec, SectionType,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("spec {input:?}, byte {pos}: {msg}")]
pub struct SpecError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilySpec {
    Plane(MultiwheelSpec),
    Grotzsch(u32),
    Projective(ProjectiveSpec),
    Base,
    Octahedron,
    OctahedronMinus,
    Cube,
    Complete(usize),
    Cycle(usize),
    /// Wheel with this many rim vertices.
    Wheel(usize),
    CompleteBipartite(usize, usize),
    Nonplanar,
    Unclosed(Vec<u32>),
    Disjoint(Vec<u32>),
}

fn join(xs: &[u32]) -> String {
    xs.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Plane(s) => write!(f, "{s}"),
            FamilySpec::Grotzsch(q) => write!(f, "g:q={q}"),
            FamilySpec::Projective(s) => write!(f, "{s}"),
            FamilySpec::Base => f.write_str("base"),
            FamilySpec::Octahedron => f.write_str("O"),
            FamilySpec::OctahedronMinus => f.write_str("O-"),
            FamilySpec::Cube => f.write_str("cube"),
            FamilySpec::Complete(n) => write!(f, "K{n}"),
            FamilySpec::Cycle(n) => write!(f, "C{n}"),
            FamilySpec::Wheel(n) => write!(f, "W{n}"),
            FamilySpec::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            FamilySpec::Nonplanar => f.write_str("nonplanar"),
            FamilySpec::Unclosed(o) => write!(f, "unclosed:{}", join(o)),
            FamilySpec::Disjoint(o) => write!(f, "disjoint:{}", join(o)),
        }
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Built, ConstructError> {
        Ok(match self {
            FamilySpec::Plane(s) => plane_multiwheel(s)?,
            FamilySpec::Grotzsch(q) => {
                let g = grotzsch_class(*q)?;
                Built { embedding: Some(g.embedding), ..Built::plain(g.graph) }
            }
            FamilySpec::Projective(s) => projective_multiwheel(s)?,
            FamilySpec::Base => base_graph().built,
            FamilySpec::Octahedron => Built::plain(octahedron()),
            FamilySpec::OctahedronMinus => Built::plain(octahedron_minus()),
            FamilySpec::Cube => Built::plain(cube()),
            FamilySpec::Complete(n) => Built::plain(complete(*n)),
            FamilySpec::Cycle(n) => Built::plain(cycle(*n)?),
            FamilySpec::Wheel(n) => Built::plain(wheel(*n)?),
            FamilySpec::CompleteBipartite(a, b) => Built::plain(complete_bipartite(*a, *b)),
            FamilySpec::Nonplanar => nonplanar_counterexample(),
            FamilySpec::Unclosed(o) => unclosed_sequence(o)?,
            FamilySpec::Disjoint(o) => disjoint_wheels(o)?,
        })
    }
}

impl FromStr for FamilySpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_spec(s)
    }
}

struct Cursor<'a> {
    input: &'a str,
    pos: usize,
}

impl Cursor<'_> {
    fn err(&self, pos: usize, msg: impl Into<String>) -> SpecError {
        SpecError { input: self.input.to_string(), pos, msg: msg.into() }
    }

    fn rest(&self) -> &str {
        &self.input[self.pos..]
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.rest().starts_with(lit) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<(), SpecError> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(self.pos, format!("expected {lit:?}")))
        }
    }

    fn number(&mut self) -> Result<u32, SpecError> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err(self.pos, "expected a number"));
        }
        let start = self.pos;
        self.pos += digits;
        self.input[start..self.pos].parse().map_err(|_| self.err(start, "number too large"))
    }

    fn list(&mut self) -> Result<Vec<u32>, SpecError> {
        let mut out = vec![self.number()?];
        while self.eat(",") {
            out.push(self.number()?);
        }
        Ok(out)
    }

    fn end(&self) -> Result<(), SpecError> {
        if self.rest().is_empty() {
            Ok(())
        } else {
            Err(self.err(self.pos, "unexpected trailing input"))
        }
    }
}

/// Parses a spec literal. Errors point at the offending byte.
pub fn parse_spec(s: &str) -> Result<FamilySpec, SpecError> {
    let mut c = Cursor { input: s, pos: 0 };
    let invalid = |c: &Cursor<'_>, e: ConstructError| {
        let msg = match e {
            ConstructError::InvalidSpec(m) => m,
            other => other.to_string(),
        };
        c.err(0, msg)
    };
    let spec = if c.eat("w:") {
        let mut sections = Vec::new();
        loop {
            let q = c.number()?;
            let at = c.pos;
            let t = match c.rest().get(..2).map(SectionType::from_str) {
                Some(Ok(t)) => {
                    c.pos += 2;
                    t
                }
                _ if c.rest().is_empty() || c.rest().starts_with('-') => SectionType::Rr,
                _ => return Err(c.err(at, "expected section type rr, ss, sr or rs")),
            };
            sections.push((q, t));
            if !c.eat("-") {
                break;
            }
        }
        c.end()?;
        FamilySpec::Plane(MultiwheelSpec::new(sections).map_err(|e| invalid(&c, e))?)
    } else if c.eat("g:") {
        c.expect("q=")?;
        let at = c.pos;
        let q = c.number()?;
        c.end()?;
        if q == 0 {
            return Err(c.err(at, "q must be positive"));
        }
        FamilySpec::Grotzsch(q)
    } else if c.eat("p:") {
        c.expect("c=")?;
        let central = c.number()?;
        c.expect(";")?;
        c.expect("s=")?;
        let sats = c.list()?;
        c.end()?;
        FamilySpec::Projective(ProjectiveSpec::new(central, sats).map_err(|e| invalid(&c, e))?)
    } else if c.eat("unclosed:") {
        let o = c.list()?;
        c.end()?;
        FamilySpec::Unclosed(o)
    } else if c.eat("disjoint:") {
        let o = c.list()?;
        c.end()?;
        FamilySpec::Disjoint(o)
    } else {
        let named = match s {
            "base" => Some(FamilySpec::Base),
            "O" => Some(FamilySpec::Octahedron),
            "O-" => Some(FamilySpec::OctahedronMinus),
            "cube" => Some(FamilySpec::Cube),
            "nonplanar" => Some(FamilySpec::Nonplanar),
            _ => None,
        };
        if let Some(n) = named {
            return Ok(n);
        }
        let spec = if c.eat("K") {
            let a = c.number()? as usize;
            if c.eat(",") {
                FamilySpec::CompleteBipartite(a, c.number()? as usize)
            } else {
                FamilySpec::Complete(a)
            }
        } else if c.eat("C") {
            FamilySpec::Cycle(c.number()? as usize)
        } else if c.eat("W") {
            FamilySpec::Wheel(c.number()? as usize)
        } else {
            return Err(c.err(0, "unknown spec; expected w:, g:, p:, unclosed:, disjoint: or a named graph"));
        };
        c.end()?;
        match &spec {
            FamilySpec::Cycle(n) | FamilySpec::Wheel(n) if *n < 3 => return Err(c.err(1, "needs at least 3")),
            _ => {}
        }
        spec
    };
    if let FamilySpec::Unclosed(o) | FamilySpec::Disjoint(o) = &spec {
        if o.contains(&0) {
            return Err(c.err(0, "wheel orders must be positive"));
        }
    }
    Ok(spec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in [
            "w:1rr-3ss-3sr",
            "g:q=2",
            "p:c=1;s=1,1,2",
            "base",
            "O",
            "O-",
            "K4",
            "K3,3",
            "C5",
            "W5",
            "cube",
            "nonplanar",
            "unclosed:1,2,1",
            "disjoint:1,1",
        ] {
            assert_eq!(parse_spec(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_spec("w:1-1-1").unwrap().to_string(), "w:1rr-1rr-1rr");
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_spec("w:1rr-1xx-1rr").unwrap_err();
        assert_eq!(e.pos, 7);
        let e = parse_spec("w:1rr-1rr").unwrap_err();
        assert!(e.msg.contains("odd"), "{e}");
        assert_eq!(parse_spec("p:c=1;s=1,1").unwrap_err().pos, 0);
        assert_eq!(parse_spec("g:q=2x").unwrap_err().pos, 5);
        assert_eq!(parse_spec("g:q=0").unwrap_err().pos, 4);
        assert!(parse_spec("").is_err());
        assert!(parse_spec("C2").is_err());
    }
}
