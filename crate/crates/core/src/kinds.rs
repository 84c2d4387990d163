use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

/// The eight minimum-cardinality parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    GammaPlus,
    GammaMinus,
    GammaS,
    GammaTwin,
    GammaSo,
    GammaOs,
    GammaOso,
    GammaIso,
}

/// Set predicates that can be checked directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SetKind {
    OutDominating,
    InDominating,
    UnderlyingDominating,
    TwinDominating,
    Sds,
    Sods,
    Osds,
    Osods,
    Isods,
}

impl ParamKind {
    pub const ALL: [ParamKind; 8] = [
        ParamKind::GammaPlus,
        ParamKind::GammaMinus,
        ParamKind::GammaS,
        ParamKind::GammaTwin,
        ParamKind::GammaSo,
        ParamKind::GammaOs,
        ParamKind::GammaOso,
        ParamKind::GammaIso,
    ];

    /// The four secure digraph parameters.
    pub const SECURE: [ParamKind; 4] = [
        ParamKind::GammaSo,
        ParamKind::GammaOs,
        ParamKind::GammaOso,
        ParamKind::GammaIso,
    ];

    /// Stable key used in JSON and TSV output.
    pub fn name(self) -> &'static str {
        match self {
            ParamKind::GammaPlus => "gamma_plus",
            ParamKind::GammaMinus => "gamma_minus",
            ParamKind::GammaS => "gamma_s",
            ParamKind::GammaTwin => "gamma_twin",
            ParamKind::GammaSo => "gamma_so",
            ParamKind::GammaOs => "gamma_os",
            ParamKind::GammaOso => "gamma_oso",
            ParamKind::GammaIso => "gamma_iso",
        }
    }

    /// The set predicate whose minimum this parameter is.
    pub fn set_kind(self) -> SetKind {
        match self {
            ParamKind::GammaPlus => SetKind::OutDominating,
            ParamKind::GammaMinus => SetKind::InDominating,
            ParamKind::GammaS => SetKind::Sds,
            ParamKind::GammaTwin => SetKind::TwinDominating,
            ParamKind::GammaSo => SetKind::Sods,
            ParamKind::GammaOs => SetKind::Osds,
            ParamKind::GammaOso => SetKind::Osods,
            ParamKind::GammaIso => SetKind::Isods,
        }
    }

    pub fn is_secure(self) -> bool {
        self.set_kind().is_secure()
    }
}

impl SetKind {
    pub const ALL: [SetKind; 9] = [
        SetKind::OutDominating,
        SetKind::InDominating,
        SetKind::UnderlyingDominating,
        SetKind::TwinDominating,
        SetKind::Sds,
        SetKind::Sods,
        SetKind::Osds,
        SetKind::Osods,
        SetKind::Isods,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SetKind::OutDominating => "out-dominating",
            SetKind::InDominating => "in-dominating",
            SetKind::UnderlyingDominating => "dominating",
            SetKind::TwinDominating => "twin-dominating",
            SetKind::Sds => "sds",
            SetKind::Sods => "sods",
            SetKind::Osds => "osds",
            SetKind::Osods => "osods",
            SetKind::Isods => "isods",
        }
    }

    /// Kinds that carry a defense requirement.
    pub fn is_secure(self) -> bool {
        matches!(
            self,
            SetKind::Sds | SetKind::Sods | SetKind::Osds | SetKind::Osods | SetKind::Isods
        )
    }

    /// The domination condition every swap (and the set itself) must satisfy.
    pub fn base(self) -> SetKind {
        match self {
            SetKind::Sds | SetKind::Osds => SetKind::UnderlyingDominating,
            SetKind::Sods | SetKind::Osods | SetKind::Isods => SetKind::OutDominating,
            k => k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownKind(pub String);

impl fmt::Display for UnknownKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown kind '{}'", self.0)
    }
}

impl std::error::Error for UnknownKind {}

impl FromStr for ParamKind {
    type Err = UnknownKind;

    /// Accepts the stable name or a short alias: `+`, `plus`, `-`, `minus`,
    /// `s`, `*`, `twin`, `so`, `os`, `oso`, `iso`, optionally prefixed with
    /// `gamma` / `gamma_`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        let key = lower
            .strip_prefix("gamma_")
            .or_else(|| lower.strip_prefix("gamma"))
            .unwrap_or(&lower);
        Ok(match key {
            "+" | "plus" => ParamKind::GammaPlus,
            "-" | "minus" => ParamKind::GammaMinus,
            "s" => ParamKind::GammaS,
            "*" | "twin" | "star" => ParamKind::GammaTwin,
            "so" => ParamKind::GammaSo,
            "os" => ParamKind::GammaOs,
            "oso" => ParamKind::GammaOso,
            "iso" => ParamKind::GammaIso,
            _ => return Err(UnknownKind(s.to_string())),
        })
    }
}

impl FromStr for SetKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase().replace('_', "-");
        Ok(match lower.as_str() {
            "out-dominating" | "outdom" => SetKind::OutDominating,
            "in-dominating" | "indom" => SetKind::InDominating,
            "dominating" | "underlying-dominating" => SetKind::UnderlyingDominating,
            "twin-dominating" | "twin" => SetKind::TwinDominating,
            "sds" => SetKind::Sds,
            "sods" => SetKind::Sods,
            "osds" => SetKind::Osds,
            "osods" => SetKind::Osods,
            "isods" => SetKind::Isods,
            _ => return Err(UnknownKind(s.to_string())),
        })
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for SetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for ParamKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl Serialize for SetKind {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for k in ParamKind::ALL {
            assert_eq!(k.name().parse::<ParamKind>(), Ok(k));
        }
        for k in SetKind::ALL {
            assert_eq!(k.name().parse::<SetKind>(), Ok(k));
        }
    }

    #[test]
    fn aliases() {
        assert_eq!("gamma+".parse(), Ok(ParamKind::GammaPlus));
        assert_eq!("oso".parse(), Ok(ParamKind::GammaOso));
        assert_eq!("gamma*".parse(), Ok(ParamKind::GammaTwin));
        assert!("osos".parse::<ParamKind>().is_err());
    }
}
