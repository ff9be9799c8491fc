use std::fmt;
use std::str::FromStr;

/// Deliberate defects injected into the verification pipeline, used to make
/// sure the checks can fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fault {
    /// `t(f'_a) = f_a` instead of `d_a f_a`.
    DropTMultiplier,
    /// `rho = 0` for `A2`.
    ZeroRhoOnA2,
}

impl Fault {
    pub const ALL: [Fault; 2] = [Fault::DropTMultiplier, Fault::ZeroRhoOnA2];

    pub fn as_str(self) -> &'static str {
        match self {
            Fault::DropTMultiplier => "drop-t-multiplier",
            Fault::ZeroRhoOnA2 => "zero-rho-a2",
        }
    }
}

impl fmt::Display for Fault {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Fault {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Fault::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown fault {s:?}"))
    }
}
