//! Group enumeration and the check suites.
//!
//! Every check is an exact equality or an integer count. Checks are grouped
//! into twelve criteria; the command line suites are unions of criteria.

pub mod char_table;
pub mod character;
pub mod closure;
pub mod cyclotomic;
mod criteria;
pub mod normalizer;
pub mod report;

pub use closure::{closure_enumerate, closure_labeled, ClosureError, GroupClosure};
pub use criteria::{commutator_convention_probe, ConventionProbe};
pub use cyclotomic::CyclotomicValue;
pub use normalizer::{pi_of, Normalizer, RootIndex};
pub use report::{CheckResult, Status, VerificationReport};

use crate::generators::{CommutatorConvention, GenError, GeneratorBundle, SylowResult};
use crate::gf5::Gf5Matrix;
use character::ConjugacyClass;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;
use std::time::Instant;

/// Cap used when enumerating the torus normalizer.
pub const N_CAP: usize = 5000;

/// The bundle plus lazily computed groups shared between criteria.
pub struct Context {
    pub bundle: GeneratorBundle,
    /// Check the hexagon relations at every line, not only the base line.
    pub all_lines: bool,
    normalizer: OnceLock<Result<Normalizer, String>>,
    sylow: OnceLock<Result<SylowResult, String>>,
    classes: OnceLock<Result<Vec<ConjugacyClass>, String>>,
    torus: OnceLock<Result<Vec<Gf5Matrix>, String>>,
    convention: OnceLock<ConventionProbe>,
}

impl Context {
    pub fn new() -> Result<Context, GenError> {
        Ok(Context::from_bundle(GeneratorBundle::build()?))
    }

    pub fn from_bundle(bundle: GeneratorBundle) -> Context {
        Context {
            bundle,
            all_lines: false,
            normalizer: OnceLock::new(),
            sylow: OnceLock::new(),
            classes: OnceLock::new(),
            torus: OnceLock::new(),
            convention: OnceLock::new(),
        }
    }

    pub fn with_all_lines(mut self, all: bool) -> Context {
        self.all_lines = all;
        self
    }

    pub fn normalizer(&self) -> Result<&Normalizer, String> {
        self.normalizer
            .get_or_init(|| Normalizer::enumerate(&self.bundle, N_CAP).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn sylow(&self) -> Result<&SylowResult, String> {
        self.sylow.get_or_init(|| self.bundle.sylow5().map_err(|e| e.to_string())).as_ref().map_err(Clone::clone)
    }

    /// Conjugacy classes of the torus normalizer with character values.
    pub fn classes(&self) -> Result<&[ConjugacyClass], String> {
        self.classes
            .get_or_init(|| {
                let n = self.normalizer()?;
                let gens: Vec<&Gf5Matrix> = n.gens.iter().collect();
                character::classes(&n.group, &gens).map_err(|e| e.to_string())
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// The line torus of the base line: the closure of `t_1..t_6`.
    pub fn torus(&self) -> Result<&[Gf5Matrix], String> {
        self.torus
            .get_or_init(|| {
                let hex = self.bundle.hex(&crate::apartment::base_line());
                let ts: Vec<Gf5Matrix> = (1..=6).map(|i| hex.torus(i)).collect();
                let refs: Vec<&Gf5Matrix> = ts.iter().collect();
                let g = closure_enumerate(&refs, 64).map_err(|e| e.to_string())?;
                Ok(g.elements().collect())
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// The commutator convention frozen by the probe.
    pub fn convention_probe(&self) -> &ConventionProbe {
        self.convention.get_or_init(|| commutator_convention_probe(&self.bundle))
    }

    pub fn convention(&self) -> CommutatorConvention {
        self.convention_probe().frozen.unwrap_or(CommutatorConvention::InverseFirst)
    }
}

/// The twelve acceptance criteria.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Criterion {
    Base,
    Nilpotency,
    Calibration,
    Hexagon,
    Quartet,
    Star,
    Torus,
    Normalizer,
    Form,
    Subspaces,
    Decomposition,
    Character,
}

impl Criterion {
    pub const ALL: [Criterion; 12] = [
        Criterion::Base,
        Criterion::Nilpotency,
        Criterion::Calibration,
        Criterion::Hexagon,
        Criterion::Quartet,
        Criterion::Star,
        Criterion::Torus,
        Criterion::Normalizer,
        Criterion::Form,
        Criterion::Subspaces,
        Criterion::Decomposition,
        Criterion::Character,
    ];

    /// 1-based number.
    pub fn number(self) -> usize {
        Criterion::ALL.iter().position(|&c| c == self).expect("listed") + 1
    }

    /// Prefix of every check name in this criterion.
    pub fn name(self) -> &'static str {
        match self {
            Criterion::Base => "base",
            Criterion::Nilpotency => "nilpotency",
            Criterion::Calibration => "calibration",
            Criterion::Hexagon => "hexagon",
            Criterion::Quartet => "quartet",
            Criterion::Star => "star",
            Criterion::Torus => "torus",
            Criterion::Normalizer => "normalizer",
            Criterion::Form => "form",
            Criterion::Subspaces => "subspaces",
            Criterion::Decomposition => "decomposition",
            Criterion::Character => "character",
        }
    }

    pub fn run(self, ctx: &Context) -> Vec<CheckResult> {
        match self {
            Criterion::Base => criteria::base(ctx),
            Criterion::Nilpotency => criteria::nilpotency(ctx),
            Criterion::Calibration => criteria::calibration(ctx),
            Criterion::Hexagon => criteria::hexagon(ctx),
            Criterion::Quartet => criteria::quartet(ctx),
            Criterion::Star => criteria::star(ctx),
            Criterion::Torus => criteria::torus(ctx),
            Criterion::Normalizer => criteria::normalizer(ctx),
            Criterion::Form => criteria::form(ctx),
            Criterion::Subspaces => criteria::subspaces(ctx),
            Criterion::Decomposition => criteria::decomposition(ctx),
            Criterion::Character => criteria::character(ctx),
        }
    }

    /// Runs the criterion as a report named after it.
    pub fn report(self, ctx: &Context) -> VerificationReport {
        let t0 = Instant::now();
        let checks = self.run(ctx);
        VerificationReport::new(self.name(), checks, t0.elapsed().as_millis() as u64)
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:2} {}", self.number(), self.name())
    }
}

/// Command line suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Relations,
    Torus,
    Weyl,
    Form,
    Subspaces,
    Character,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["all", "relations", "torus", "weyl", "form", "subspaces", "character"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Relations => "relations",
            Suite::Torus => "torus",
            Suite::Weyl => "weyl",
            Suite::Form => "form",
            Suite::Subspaces => "subspaces",
            Suite::Character => "character",
        }
    }

    pub fn criteria(self) -> Vec<Criterion> {
        use Criterion::*;
        match self {
            Suite::All => Criterion::ALL.to_vec(),
            Suite::Relations => vec![Base, Nilpotency, Calibration, Hexagon, Quartet, Star],
            Suite::Torus => vec![Torus],
            Suite::Weyl => vec![Normalizer],
            Suite::Form => vec![Form],
            Suite::Subspaces => vec![Subspaces, Decomposition],
            Suite::Character => vec![Character],
        }
    }

    pub fn run(self, ctx: &Context) -> VerificationReport {
        let t0 = Instant::now();
        let checks = self.criteria().into_iter().flat_map(|c| c.run(ctx)).collect();
        VerificationReport::new(self.name(), checks, t0.elapsed().as_millis() as u64)
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Suite, String> {
        use Suite::*;
        [All, Relations, Torus, Weyl, Form, Subspaces, Character]
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'; expected one of {}", Suite::NAMES.join(", ")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
