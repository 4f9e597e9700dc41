use std::fmt;

use super::partition::Partition;
use super::perm::{Perm, PermSubgroup};
use super::{Result, SymError};

/// Full symmetric group on the given 1-based points.
pub fn symmetric_on(d: usize, points: &[usize]) -> Result<PermSubgroup> {
    let mut gens = Vec::new();
    for w in points.windows(2) {
        gens.push(Perm::from_cycles(d, &[&[w[0], w[1]]])?);
    }
    PermSubgroup::from_generators(d, gens)
}

/// Alternating group on the given 1-based points, generated by 3-cycles.
pub fn alternating_on(d: usize, points: &[usize]) -> Result<PermSubgroup> {
    let mut gens = Vec::new();
    for k in 2..points.len() {
        gens.push(Perm::from_cycles(d, &[&[points[0], points[1], points[k]]])?);
    }
    PermSubgroup::from_generators(d, gens)
}

fn product(d: usize, parts: &[PermSubgroup]) -> Result<PermSubgroup> {
    let gens = parts.iter().flat_map(|h| h.generators().iter().cloned()).collect();
    PermSubgroup::from_generators(d, gens)
}

fn range(a: usize, b: usize) -> Vec<usize> {
    (a..=b).collect()
}

/// Stabilizer of the point 1.
pub fn point_stabilizer(d: usize) -> Result<PermSubgroup> {
    symmetric_on(d, &range(2, d))
}

pub fn alternating(d: usize) -> Result<PermSubgroup> {
    alternating_on(d, &range(1, d))
}

/// S_{λ1} × S_{λ2} × … on consecutive blocks.
pub fn young_subgroup(shape: &Partition) -> Result<PermSubgroup> {
    let d = shape.d() as usize;
    let mut start = 1;
    let mut blocks = Vec::new();
    for &r in shape.parts() {
        blocks.push(symmetric_on(d, &range(start, start + r as usize - 1))?);
        start += r as usize;
    }
    product(d, &blocks)
}

pub fn dihedral_quartic() -> PermSubgroup {
    PermSubgroup::parse(4, &["(1 2)", "(1 3 2 4)"]).expect("valid generators")
}

/// Affine group of F_5 acting on 5 points.
pub fn cayley_quintic() -> PermSubgroup {
    PermSubgroup::parse(5, &["(1 2 3 4 5)", "(1 2 4 3)"]).expect("valid generators")
}

/// PGL_2(F_5) acting on the six points of the projective line over F_5,
/// with 0..4 labelled 1..5 and infinity labelled 6.
pub fn exotic_sextic() -> PermSubgroup {
    PermSubgroup::parse(6, &["(1 2 3 4 5)", "(2 3 5 4)", "(1 6)(2 5)"]).expect("valid generators")
}

/// Two Klein four-groups in S_6 meeting every class equally.
pub fn gassmann_pair() -> (PermSubgroup, PermSubgroup) {
    (
        PermSubgroup::parse(6, &["(1 2)(3 4)", "(1 3)(2 4)"]).expect("valid generators"),
        PermSubgroup::parse(6, &["(1 2)(3 4)", "(1 2)(5 6)"]).expect("valid generators"),
    )
}

/// Named subgroups used by the resolvent machinery.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CatalogTag {
    PointStabilizer,
    Alternating,
    AlternatingPointStabilizer,
    PairSum,
    PairStabilizer,
    AlternatingPairStabilizer,
    PairTimesAlternating,
    PairTimesTriple,
    QuarticDihedral,
    CayleySextic,
    ExoticSextic,
}

impl CatalogTag {
    pub const ALL: [CatalogTag; 11] = [
        CatalogTag::PointStabilizer,
        CatalogTag::Alternating,
        CatalogTag::AlternatingPointStabilizer,
        CatalogTag::PairSum,
        CatalogTag::PairStabilizer,
        CatalogTag::AlternatingPairStabilizer,
        CatalogTag::PairTimesAlternating,
        CatalogTag::PairTimesTriple,
        CatalogTag::QuarticDihedral,
        CatalogTag::CayleySextic,
        CatalogTag::ExoticSextic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CatalogTag::PointStabilizer => "point-stabilizer",
            CatalogTag::Alternating => "alternating",
            CatalogTag::AlternatingPointStabilizer => "alternating-point-stabilizer",
            CatalogTag::PairSum => "pair-sum",
            CatalogTag::PairStabilizer => "pair-stabilizer",
            CatalogTag::AlternatingPairStabilizer => "alternating-pair-stabilizer",
            CatalogTag::PairTimesAlternating => "pair-times-alternating",
            CatalogTag::PairTimesTriple => "pair-times-triple",
            CatalogTag::QuarticDihedral => "quartic-dihedral",
            CatalogTag::CayleySextic => "cayley-sextic",
            CatalogTag::ExoticSextic => "exotic-sextic",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase();
        let alias = match key.as_str() {
            "sd-1" | "s_{d-1}" => "point-stabilizer",
            "ad" | "a_d" => "alternating",
            "ad-1" | "a_{d-1}" => "alternating-point-stabilizer",
            "s2xsd-2" | "s_2xs_{d-2}" => "pair-sum",
            "sd-2" | "s_{d-2}" => "pair-stabilizer",
            "ad-2" | "a_{d-2}" => "alternating-pair-stabilizer",
            "s2xad-2" | "s_2xa_{d-2}" => "pair-times-alternating",
            "s2xsd-3" | "s_2xs_{d-3}" => "pair-times-triple",
            "d4" => "quartic-dihedral",
            "agl1" | "agl1(f5)" => "cayley-sextic",
            "s5'" | "s5prime" => "exotic-sextic",
            other => other,
        };
        CatalogTag::ALL
            .iter()
            .copied()
            .find(|t| t.name() == alias)
            .ok_or_else(|| SymError::UnknownSubgroup(s.to_string()))
    }

    /// The degree this tag is tied to, if any.
    pub fn fixed_degree(self) -> Option<usize> {
        match self {
            CatalogTag::QuarticDihedral => Some(4),
            CatalogTag::CayleySextic => Some(5),
            CatalogTag::ExoticSextic => Some(6),
            _ => None,
        }
    }

    pub fn subgroup(self, d: usize) -> Result<PermSubgroup> {
        if let Some(fd) = self.fixed_degree() {
            if fd != d {
                return Err(SymError::DegreeOutOfRange(d as u32));
            }
        }
        let min = match self {
            CatalogTag::PointStabilizer | CatalogTag::Alternating => 2,
            CatalogTag::AlternatingPointStabilizer => 3,
            CatalogTag::PairSum | CatalogTag::PairStabilizer => 4,
            CatalogTag::AlternatingPairStabilizer | CatalogTag::PairTimesAlternating => 4,
            CatalogTag::PairTimesTriple => 5,
            _ => 0,
        };
        if d < min {
            return Err(SymError::DegreeOutOfRange(d as u32));
        }
        match self {
            CatalogTag::PointStabilizer => point_stabilizer(d),
            CatalogTag::Alternating => alternating(d),
            CatalogTag::AlternatingPointStabilizer => alternating_on(d, &range(2, d)),
            CatalogTag::PairSum => {
                product(d, &[symmetric_on(d, &[1, 2])?, symmetric_on(d, &range(3, d))?])
            }
            CatalogTag::PairStabilizer => symmetric_on(d, &range(3, d)),
            CatalogTag::AlternatingPairStabilizer => alternating_on(d, &range(3, d)),
            CatalogTag::PairTimesAlternating => {
                product(d, &[symmetric_on(d, &[1, 2])?, alternating_on(d, &range(3, d))?])
            }
            CatalogTag::PairTimesTriple => {
                product(d, &[symmetric_on(d, &[1, 2])?, symmetric_on(d, &range(4, d))?])
            }
            CatalogTag::QuarticDihedral => Ok(dihedral_quartic()),
            CatalogTag::CayleySextic => Ok(cayley_quintic()),
            CatalogTag::ExoticSextic => Ok(exotic_sextic()),
        }
    }
}

impl fmt::Display for CatalogTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subgroup given either by catalog name or by explicit generators.
#[derive(Clone, Debug)]
pub enum SubgroupSpec {
    Tag(CatalogTag),
    Generators(Vec<String>),
}

impl SubgroupSpec {
    /// Catalog names, or a `;`-separated list of generators in cycle notation.
    pub fn parse(s: &str) -> Result<Self> {
        if s.contains('(') {
            Ok(SubgroupSpec::Generators(s.split(';').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect()))
        } else {
            Ok(SubgroupSpec::Tag(CatalogTag::parse(s)?))
        }
    }

    pub fn build(&self, d: usize) -> Result<PermSubgroup> {
        match self {
            SubgroupSpec::Tag(t) => t.subgroup(d),
            SubgroupSpec::Generators(g) => {
                let refs: Vec<&str> = g.iter().map(String::as_str).collect();
                PermSubgroup::parse(d, &refs)
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            SubgroupSpec::Tag(t) => t.name().to_string(),
            SubgroupSpec::Generators(g) => g.join(";"),
        }
    }
}
