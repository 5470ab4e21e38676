//! Support library for the `lynsa` binary: input generators, array
//! serialization, and the run/check/bench machinery.

pub mod gen;
pub mod io;
pub mod report;

use lynsa::LyndonVariant;

/// CLI-level algorithm selection: the four in-induction strategies plus
/// the two-pass baseline that derives the Lyndon array from the inverse
/// suffix array via a next-smaller-value scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    La(LyndonVariant),
    NsvIsa,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::La(v) => v.as_str(),
            Variant::NsvIsa => "nsv-isa",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "nsv-isa" {
            return Ok(Variant::NsvIsa);
        }
        s.parse::<LyndonVariant>()
            .map(Variant::La)
            .map_err(|_| format!("unknown variant `{s}` (naive|nextprev|singleaux|inplace|nsv-isa)"))
    }
}

impl std::fmt::Display for Variant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}
