//! Scenario files: TOML with a fixed schema. Unknown keys are rejected.
//!
//! ```toml
//! n_max = 6
//! seed = 42
//!
//! [field]
//! kind = "rational"          # or "prime", with modulus = p
//!
//! [algebra]
//! kind = "polynomial"        # field | polynomial | free | structure_constants | lie | enveloping
//! variables = 2
//!
//! [[elements]]
//! terms = [["(1,0)", 1, 1]]  # (basis name, numerator, denominator)
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;

use crate::algebra::{AlgebraElement, BaseAlgebra, BasisIndex, LieAlgebra, StructureConstants};
use crate::banded::Fault;
use crate::error::Error;
use crate::scalar::{Field, Scalar};

/// Default seed for randomized commands.
pub const DEFAULT_SEED: u64 = 42;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub n_max: usize,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default)]
    pub field: FieldSection,
    pub algebra: AlgebraSection,
    #[serde(default)]
    pub elements: Vec<ElementSection>,
    #[serde(default)]
    pub growth: GrowthSection,
    #[serde(default)]
    pub verify: VerifySection,
    #[serde(default)]
    pub oracle: OracleSection,
    #[serde(default)]
    pub pipeline: PipelineSection,
}

fn default_seed() -> u64 {
    DEFAULT_SEED
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FieldKind {
    #[default]
    Rational,
    Prime,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSection {
    #[serde(default)]
    pub kind: FieldKind,
    pub modulus: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKindName {
    Field,
    Polynomial,
    Free,
    StructureConstants,
    Lie,
    Enveloping,
}

/// `(i, j, k, numerator, denominator)`.
pub type ConstantEntry = (usize, usize, usize, i64, i64);

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSection {
    pub kind: AlgebraKindName,
    /// `polynomial`: number of commuting variables.
    pub variables: Option<usize>,
    /// `free`: number of generators.
    pub generators: Option<usize>,
    /// `structure_constants`, `lie`, `enveloping`: dimension.
    pub dim: Option<usize>,
    /// `structure_constants`: coefficient of `e_k` in `e_i e_j`.
    #[serde(default)]
    pub table: Vec<ConstantEntry>,
    /// `structure_constants`: the unit as `(slot, numerator, denominator)`.
    pub unit: Option<Vec<(usize, i64, i64)>>,
    /// `structure_constants`: adjoin a unit in a new last slot.
    #[serde(default)]
    pub adjoin_unit: bool,
    /// `lie`, `enveloping`: `sl2` or `abelian`.
    pub preset: Option<String>,
    /// `lie`, `enveloping`: coefficient of `x_k` in `[x_i, x_j]`. The entry
    /// for `[x_j, x_i]` is filled in by antisymmetry unless that pair is also
    /// listed.
    #[serde(default)]
    pub brackets: Vec<ConstantEntry>,
    /// `lie`, `enveloping`: generators from smallest to largest in PBW order.
    pub order: Option<Vec<usize>>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementSection {
    pub terms: Vec<(String, i64, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GrowthKindName {
    Assoc,
    Lie,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthSection {
    pub kind: Option<GrowthKindName>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TestHook {
    DropCorrection,
}

impl From<TestHook> for Fault {
    fn from(h: TestHook) -> Fault {
        match h {
            TestHook::DropCorrection => Fault::DropCorrection,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VerifySection {
    #[serde(default = "default_verify_trials")]
    pub trials: usize,
    pub test_hook: Option<TestHook>,
}

fn default_verify_trials() -> usize {
    200
}

impl Default for VerifySection {
    fn default() -> Self {
        VerifySection {
            trials: default_verify_trials(),
            test_hook: None,
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleSection {
    #[serde(default = "default_window")]
    pub window: usize,
    /// Truncation size of the inputs; defaults to twice the window.
    pub input: Option<usize>,
    #[serde(default = "default_oracle_trials")]
    pub trials: usize,
    #[serde(default = "default_max_offset")]
    pub max_offset: i64,
    #[serde(default = "default_cell_range")]
    pub cell_range: usize,
    pub test_hook: Option<TestHook>,
}

fn default_window() -> usize {
    8
}

fn default_oracle_trials() -> usize {
    500
}

fn default_max_offset() -> i64 {
    3
}

fn default_cell_range() -> usize {
    4
}

impl Default for OracleSection {
    fn default() -> Self {
        OracleSection {
            window: default_window(),
            input: None,
            trials: default_oracle_trials(),
            max_offset: default_max_offset(),
            cell_range: default_cell_range(),
            test_hook: None,
        }
    }
}

impl OracleSection {
    pub fn input(&self) -> usize {
        self.input.unwrap_or(2 * self.window)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PipelineSection {
    #[serde(default = "default_matrix_n_max")]
    pub matrix_n_max: usize,
    #[serde(default = "default_verify_trials")]
    pub trials: usize,
}

fn default_matrix_n_max() -> usize {
    4
}

impl Default for PipelineSection {
    fn default() -> Self {
        PipelineSection {
            matrix_n_max: default_matrix_n_max(),
            trials: default_verify_trials(),
        }
    }
}

/// Why a scenario could not be built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigError {
    /// Syntax, schema or value error in the file.
    Invalid(String),
    /// The data parsed but describes an invalid algebra.
    Algebra(Error),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Invalid(m) => write!(f, "{m}"),
            ConfigError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ConfigError {}

fn invalid(msg: impl Into<String>) -> ConfigError {
    ConfigError::Invalid(msg.into())
}

/// Parses a scenario file.
pub fn parse(text: &str) -> Result<Config, ConfigError> {
    let cfg: Config =
        toml::from_str(text).map_err(|e| invalid(e.to_string().trim_end().to_string()))?;
    if cfg.n_max < 1 {
        return Err(invalid("n_max: must be at least 1"));
    }
    Ok(cfg)
}

/// The configured algebra: associative, or a Lie algebra given by constants.
#[derive(Clone, Debug)]
pub enum Scenario {
    Associative(BaseAlgebra),
    Lie(LieAlgebra),
}

impl Config {
    pub fn field(&self) -> Result<Field, ConfigError> {
        match (self.field.kind, self.field.modulus) {
            (FieldKind::Rational, None) => Ok(Field::Rational),
            (FieldKind::Rational, Some(_)) => {
                Err(invalid("field.modulus: only allowed with kind = \"prime\""))
            }
            (FieldKind::Prime, None) => {
                Err(invalid("field.modulus: required for kind = \"prime\""))
            }
            (FieldKind::Prime, Some(p)) => {
                Field::prime(p).map_err(|e| invalid(format!("field.modulus: {e}")))
            }
        }
    }

    /// Builds the configured algebra. Lie data is validated (alternating,
    /// Jacobi) here.
    pub fn scenario(&self) -> Result<Scenario, ConfigError> {
        let f = self.field()?;
        let a = &self.algebra;
        let kind = a.kind;
        let allowed: &[&str] = match kind {
            AlgebraKindName::Field => &[],
            AlgebraKindName::Polynomial => &["variables"],
            AlgebraKindName::Free => &["generators"],
            AlgebraKindName::StructureConstants => &["dim", "table", "unit", "adjoin_unit"],
            AlgebraKindName::Lie | AlgebraKindName::Enveloping => {
                &["dim", "preset", "brackets", "order"]
            }
        };
        let present = [
            ("variables", a.variables.is_some()),
            ("generators", a.generators.is_some()),
            ("dim", a.dim.is_some()),
            ("table", !a.table.is_empty()),
            ("unit", a.unit.is_some()),
            ("adjoin_unit", a.adjoin_unit),
            ("preset", a.preset.is_some()),
            ("brackets", !a.brackets.is_empty()),
            ("order", a.order.is_some()),
        ];
        if let Some((key, _)) = present.iter().find(|(k, p)| *p && !allowed.contains(k)) {
            return Err(invalid(format!(
                "algebra.{key}: not used by kind = \"{}\"",
                kind_name(kind)
            )));
        }
        Ok(match kind {
            AlgebraKindName::Field => Scenario::Associative(BaseAlgebra::ground_field(f)),
            AlgebraKindName::Polynomial => {
                let v = a.variables.ok_or_else(|| {
                    invalid("algebra.variables: required for kind = \"polynomial\"")
                })?;
                Scenario::Associative(BaseAlgebra::polynomial(f, v))
            }
            AlgebraKindName::Free => {
                let g = a
                    .generators
                    .ok_or_else(|| invalid("algebra.generators: required for kind = \"free\""))?;
                Scenario::Associative(BaseAlgebra::free_associative(f, g))
            }
            AlgebraKindName::StructureConstants => Scenario::Associative(
                BaseAlgebra::structure_constants(self.structure_constants(f)?),
            ),
            AlgebraKindName::Lie => Scenario::Lie(self.lie_algebra(f)?),
            AlgebraKindName::Enveloping => {
                Scenario::Associative(BaseAlgebra::enveloping(self.lie_algebra(f)?))
            }
        })
    }

    fn structure_constants(&self, f: Field) -> Result<StructureConstants, ConfigError> {
        let a = &self.algebra;
        let d = a
            .dim
            .ok_or_else(|| invalid("algebra.dim: required for kind = \"structure_constants\""))?;
        let mut table = vec![f.zero(); d * d * d];
        let mut seen = BTreeSet::new();
        for &(i, j, k, num, den) in &a.table {
            if i >= d || j >= d || k >= d {
                return Err(invalid(format!(
                    "algebra.table: entry ({i}, {j}, {k}) out of range for dim = {d}"
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(invalid(format!(
                    "algebra.table: entry ({i}, {j}, {k}) listed twice"
                )));
            }
            table[(i * d + j) * d + k] = coefficient(f, num, den, "algebra.table")?;
        }
        let unit = match &a.unit {
            None => None,
            Some(entries) => {
                let mut u = vec![f.zero(); d];
                for &(s, num, den) in entries {
                    if s >= d {
                        return Err(invalid(format!(
                            "algebra.unit: slot {s} out of range for dim = {d}"
                        )));
                    }
                    u[s] = coefficient(f, num, den, "algebra.unit")?;
                }
                Some(u)
            }
        };
        let sc = StructureConstants::new(f, d, table, unit).map_err(ConfigError::Algebra)?;
        Ok(if a.adjoin_unit { sc.adjoin_unit() } else { sc })
    }

    fn lie_algebra(&self, f: Field) -> Result<LieAlgebra, ConfigError> {
        let a = &self.algebra;
        let (dim, constants) = match a.preset.as_deref() {
            Some(p) => {
                if !a.brackets.is_empty() {
                    return Err(invalid(
                        "algebra.brackets: not allowed together with algebra.preset",
                    ));
                }
                let lie = match p {
                    "sl2" => {
                        if a.dim.is_some_and(|d| d != 3) {
                            return Err(invalid("algebra.dim: sl2 has dimension 3"));
                        }
                        LieAlgebra::sl2(f)
                    }
                    "abelian" => {
                        let d = a.dim.ok_or_else(|| {
                            invalid("algebra.dim: required for preset = \"abelian\"")
                        })?;
                        LieAlgebra::abelian(f, d)
                    }
                    other => {
                        return Err(invalid(format!(
                            "algebra.preset: unknown preset \"{other}\" (sl2, abelian)"
                        )))
                    }
                };
                let d = lie.dim();
                let c = (0..d * d * d)
                    .map(|t| lie.constant(t / (d * d), (t / d) % d, t % d).clone())
                    .collect();
                (d, c)
            }
            None => {
                let d = a.dim.ok_or_else(|| {
                    invalid("algebra.dim: required unless algebra.preset is given")
                })?;
                (d, bracket_table(f, d, &a.brackets)?)
            }
        };
        LieAlgebra::new(f, dim, constants, a.order.clone()).map_err(ConfigError::Algebra)
    }

    /// The configured elements `a_1, .., a_m`, in the configured algebra.
    pub fn elements(&self, scenario: &Scenario) -> Result<Vec<AlgebraElement>, ConfigError> {
        let f = self.field()?;
        let mut out = Vec::with_capacity(self.elements.len());
        for (n, e) in self.elements.iter().enumerate() {
            let at = format!("elements[{n}]");
            let mut x = AlgebraElement::zero();
            for (name, num, den) in &e.terms {
                let c = coefficient(f, *num, *den, &at)?;
                let b = basis_by_name(scenario, name).map_err(|m| invalid(format!("{at}: {m}")))?;
                x.add_scaled(&c, &b);
            }
            out.push(x);
        }
        Ok(out)
    }
}

fn kind_name(k: AlgebraKindName) -> &'static str {
    match k {
        AlgebraKindName::Field => "field",
        AlgebraKindName::Polynomial => "polynomial",
        AlgebraKindName::Free => "free",
        AlgebraKindName::StructureConstants => "structure_constants",
        AlgebraKindName::Lie => "lie",
        AlgebraKindName::Enveloping => "enveloping",
    }
}

fn coefficient(f: Field, num: i64, den: i64, at: &str) -> Result<Scalar, ConfigError> {
    f.from_ratio(num, den)
        .map_err(|e| invalid(format!("{at}: {e}")))
}

fn bracket_table(
    f: Field,
    d: usize,
    entries: &[ConstantEntry],
) -> Result<Vec<Scalar>, ConfigError> {
    let mut listed: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
    for &(i, j, k, num, den) in entries {
        if i >= d || j >= d || k >= d {
            return Err(invalid(format!(
                "algebra.brackets: entry ({i}, {j}, {k}) out of range for dim = {d}"
            )));
        }
        let c = coefficient(f, num, den, "algebra.brackets")?;
        if listed.insert((i, j, k), c).is_some() {
            return Err(invalid(format!(
                "algebra.brackets: entry ({i}, {j}, {k}) listed twice"
            )));
        }
    }
    let pairs: BTreeSet<(usize, usize)> = listed.keys().map(|&(i, j, _)| (i, j)).collect();
    let mut table = vec![f.zero(); d * d * d];
    for (&(i, j, k), c) in &listed {
        table[(i * d + j) * d + k] = c.clone();
        if !pairs.contains(&(j, i)) {
            table[(j * d + i) * d + k] = -c;
        }
    }
    Ok(table)
}

/// Looks up a basis element by name.
///
/// Names by kind: `1` wherever there is a unit; `(2,0,1)` for polynomial
/// exponent vectors; `x0*x1*x0` for free words and for products of Lie
/// generators in an enveloping algebra (straightened to PBW form); `e3` for
/// structure-constant slots; `x2` for Lie algebra generators.
pub fn basis_by_name(scenario: &Scenario, name: &str) -> Result<AlgebraElement, String> {
    let name = name.trim();
    let base = match scenario {
        Scenario::Lie(lie) => {
            let g = generator(name)
                .ok_or_else(|| format!("\"{name}\" is not a generator name like x0"))?;
            if g >= lie.dim() {
                return Err(format!(
                    "generator {name} out of range for dim = {}",
                    lie.dim()
                ));
            }
            return Ok(AlgebraElement::monomial(
                BasisIndex::Slot(g),
                lie.field().one(),
            ));
        }
        Scenario::Associative(base) => base,
    };
    if name == "1" {
        return base.one().map_err(|e| e.to_string());
    }
    let idx = match base.kind() {
        crate::algebra::AlgebraKind::Polynomial { .. } => {
            let inner = name
                .strip_prefix('(')
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| format!("\"{name}\" is not an exponent vector like (1,0)"))?;
            let exps = inner
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|_| format!("\"{name}\" is not an exponent vector like (1,0)"))?;
            BasisIndex::Exponents(exps)
        }
        crate::algebra::AlgebraKind::FreeAssociative { .. } => BasisIndex::Word(word(name)?),
        crate::algebra::AlgebraKind::StructureConstants(_) => {
            let s = name
                .strip_prefix('e')
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| format!("\"{name}\" is not a slot name like e0"))?;
            BasisIndex::Slot(s)
        }
        crate::algebra::AlgebraKind::Enveloping(lie) => {
            let w: Vec<usize> = word(name)?.into_iter().map(|g| g as usize).collect();
            return lie.straighten(&w).map_err(|e| e.to_string());
        }
        crate::algebra::AlgebraKind::MatrixExtension(_) => {
            return Err(format!("no basis names for {base}"))
        }
    };
    base.basis_element(idx).map_err(|e| e.to_string())
}

fn generator(name: &str) -> Option<usize> {
    name.strip_prefix('x').and_then(|s| s.parse().ok())
}

fn word(name: &str) -> Result<Vec<u32>, String> {
    name.split('*')
        .map(|t| {
            generator(t.trim())
                .map(|g| g as u32)
                .ok_or_else(|| format!("\"{name}\" is not a word like x0*x1"))
        })
        .collect()
}
