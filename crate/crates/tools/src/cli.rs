//! Command-line surface: arguments, flag validation and exit codes.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use ehrhart_core::lattice::DEFAULT_BUDGET;
use ehrhart_core::{EhrhartKind, Error as CoreError, FacetSet, HalfSpaceSpec, Region};

use crate::format::{ParseError, ParseErrorKind};

/// Process exit statuses. Each failure class has its own code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    Ok = 0,
    Io = 1,
    Usage = 2,
    Parse = 3,
    Validation = 4,
    Formula = 5,
    Budget = 6,
}

impl Exit {
    pub fn code(self) -> u8 {
        self as u8
    }

    pub fn of_core(e: &CoreError) -> Exit {
        use CoreError::*;
        match e {
            BudgetExceeded { .. } => Exit::Budget,
            NonSimple { .. } | Unbounded { .. } | Empty | NotFullDimensional { .. } | Redundant { .. }
            | NotDelzant { .. } | InvalidSpec(_) => Exit::Validation,
            IndexOutOfRange { .. } | OutOfRange { .. } | UnknownFace(_) => Exit::Usage,
            _ => Exit::Formula,
        }
    }

    pub fn of_parse(e: &ParseError) -> Exit {
        match &e.kind {
            ParseErrorKind::Invalid(inner) => Exit::of_core(inner),
            _ => Exit::Parse,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Interpolate brute-force counts.
    #[default]
    Brute,
    /// Apply the operator formula to the volume polynomial.
    Operator,
}

/// `full`, `interior`, `boundary` or `face:I` with 1-based facet indices,
/// e.g. `face:1,3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RegionArg {
    Full,
    Interior,
    Boundary,
    Face(Vec<usize>),
}

impl FromStr for RegionArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(RegionArg::Full),
            "interior" => Ok(RegionArg::Interior),
            "boundary" => Ok(RegionArg::Boundary),
            _ => {
                let list = s
                    .strip_prefix("face:")
                    .ok_or_else(|| format!("expected full, interior, boundary or face:I, got `{s}`"))?;
                let idx = list
                    .split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad facet index `{t}`")))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(RegionArg::Face(idx))
            }
        }
    }
}

impl fmt::Display for RegionArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegionArg::Full => write!(f, "full"),
            RegionArg::Interior => write!(f, "interior"),
            RegionArg::Boundary => write!(f, "boundary"),
            RegionArg::Face(idx) => {
                let parts: Vec<String> = idx.iter().map(usize::to_string).collect();
                write!(f, "face:{}", parts.join(","))
            }
        }
    }
}

impl RegionArg {
    /// Checks 1-based indices against the facet count and converts.
    pub fn facet_set(idx: &[usize], num_facets: usize) -> Result<FacetSet, String> {
        if idx.is_empty() {
            return Err("face: needs at least one facet index".into());
        }
        let mut set = FacetSet::empty();
        for &i in idx {
            if i == 0 || i > num_facets {
                return Err(format!("facet index {i} out of range 1..={num_facets}"));
            }
            if set.contains(i - 1) {
                return Err(format!("facet index {i} repeated"));
            }
            set.insert(i - 1);
        }
        Ok(set)
    }

    pub fn region(&self, num_facets: usize) -> Result<Region, String> {
        Ok(match self {
            RegionArg::Full => Region::Full,
            RegionArg::Interior => Region::Interior,
            RegionArg::Boundary => Region::Boundary,
            RegionArg::Face(idx) => Region::Face(Self::facet_set(idx, num_facets)?),
        })
    }

    pub fn kind(&self, num_facets: usize) -> Result<EhrhartKind, String> {
        Ok(match self.region(num_facets)? {
            Region::Full => EhrhartKind::Full,
            Region::Interior => EhrhartKind::Interior,
            Region::Boundary => EhrhartKind::Boundary,
            Region::Face(set) => EhrhartKind::Face(set),
        })
    }
}

#[derive(Debug, Parser)]
#[command(name = "ehrhart", version, about = "Lattice points, volume polynomials and boundary Hilbert polynomials of Delzant polytopes")]
pub struct Cli {
    /// Largest bounding box (in lattice points) a brute-force count may scan.
    #[arg(long, global = true, env = "EHRHART_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Divide non-primitive facet normals by their gcd instead of rejecting them.
    #[arg(long, global = true)]
    pub normalize: bool,

    /// Worker threads for brute-force counting (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..=1024))]
    pub threads: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check the Delzant condition at every vertex.
    Validate { file: PathBuf },
    /// List the face lattice.
    Faces { file: PathBuf },
    /// Print the volume and boundary volume polynomials in the offsets.
    VolumePoly { file: PathBuf },
    /// Count lattice points of a dilate by brute force.
    Count {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(long, default_value = "full")]
        region: RegionArg,
    },
    /// Ehrhart polynomial of a region.
    Ehrhart {
        file: PathBuf,
        #[arg(long, default_value = "full")]
        kind: RegionArg,
        #[arg(long, value_enum, default_value_t = Method::Brute)]
        method: Method,
    },
    /// Lattice point count of k times the polytope from the Todd operator.
    Khovanskii {
        file: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Boundary lattice point count of k times the polytope from the A-hat operator.
    BoundaryFormula {
        file: PathBuf,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
    },
    /// Boundary Hilbert polynomial by three independent routes.
    HilbertCy { file: PathBuf },
    /// Hilbert report plus every invariant check on one polytope.
    CrossCheck {
        file: PathBuf,
        /// Seed for the chamber samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

impl Command {
    pub fn file(&self) -> &PathBuf {
        match self {
            Command::Validate { file }
            | Command::Faces { file }
            | Command::VolumePoly { file }
            | Command::Count { file, .. }
            | Command::Ehrhart { file, .. }
            | Command::Khovanskii { file, .. }
            | Command::BoundaryFormula { file, .. }
            | Command::HilbertCy { file }
            | Command::CrossCheck { file, .. } => file,
        }
    }

    /// Flag checks that need the parsed polytope but no computation.
    pub fn check_flags(&self, spec: &HalfSpaceSpec) -> Result<(), String> {
        let d = spec.num_facets();
        match self {
            Command::Count { region, .. } => region.region(d).map(drop),
            Command::Ehrhart { kind, method, .. } => {
                kind.kind(d)?;
                if *method == Method::Operator && !matches!(kind, RegionArg::Full | RegionArg::Boundary) {
                    return Err(format!("--method operator supports --kind full or boundary, not {kind}"));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn region_syntax() {
        assert_eq!("face:1,3".parse::<RegionArg>().unwrap(), RegionArg::Face(vec![1, 3]));
        assert_eq!("boundary".parse::<RegionArg>().unwrap(), RegionArg::Boundary);
        assert!("edge".parse::<RegionArg>().is_err());
        assert!("face:1,x".parse::<RegionArg>().is_err());
        let set = RegionArg::facet_set(&[1, 3], 3).unwrap();
        assert_eq!(set.to_vec(), vec![0, 2]);
        assert!(RegionArg::facet_set(&[4], 3).is_err());
        assert!(RegionArg::facet_set(&[2, 2], 3).is_err());
        assert_eq!(RegionArg::Face(vec![1, 2]).to_string(), "face:1,2");
    }

    #[test]
    fn exit_codes_are_distinct() {
        let all = [Exit::Ok, Exit::Io, Exit::Usage, Exit::Parse, Exit::Validation, Exit::Formula, Exit::Budget];
        let mut codes: Vec<u8> = all.iter().map(|e| e.code()).collect();
        codes.dedup();
        assert_eq!(codes.len(), all.len());
    }

    #[test]
    fn clap_definition() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
