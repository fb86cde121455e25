//! Experiment configuration: JSON schema, parsing with JSON-pointer diagnostics, static validation.
//!
//! A config names rings, primes and tensor products, then lists experiments
//! that refer to them by name:
//!
//! ```json
//! {
//!   "rings": { "R": "A1" },
//!   "primes": { "P": { "ring": "R", "face_normals": [0] } },
//!   "experiments": [ { "kind": "min_slope", "target": "P", "r_max": 3 } ]
//! }
//! ```
//!
//! Parsing happens in two passes. The text is first read into a
//! [`serde_json::Value`] (syntax errors), then each section is deserialized
//! separately so every error can be reported at an exact location.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use symlab::{catalog, Cone, Error as CoreError, Face, Limits, PolyMonomialIdeal};

/// Default degree window when neither the experiment nor the limits give one.
pub const DEFAULT_MAX_DEGREE: i64 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ConfigErrorKind {
    SyntaxError,
    UnknownReference,
    InvalidParameter,
}

impl fmt::Display for ConfigErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConfigErrorKind::SyntaxError => "syntax error",
            ConfigErrorKind::UnknownReference => "unknown reference",
            ConfigErrorKind::InvalidParameter => "invalid parameter",
        })
    }
}

/// A configuration diagnostic located by a JSON pointer (RFC 6901).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at {}: {message}", if pointer.is_empty() { "/" } else { pointer.as_str() })]
pub struct ConfigError {
    pub kind: ConfigErrorKind,
    pub pointer: String,
    pub message: String,
}

impl ConfigError {
    fn new(kind: ConfigErrorKind, pointer: impl Into<String>, message: impl Into<String>) -> Self {
        ConfigError { kind, pointer: pointer.into(), message: message.into() }
    }

    fn invalid(pointer: impl Into<String>, message: impl fmt::Display) -> Self {
        Self::new(ConfigErrorKind::InvalidParameter, pointer, message.to_string())
    }

    fn unknown(pointer: impl Into<String>, message: impl fmt::Display) -> Self {
        Self::new(ConfigErrorKind::UnknownReference, pointer, message.to_string())
    }
}

fn escape(token: &str) -> String {
    token.replace('~', "~0").replace('/', "~1")
}

fn child(pointer: &str, token: impl fmt::Display) -> String {
    format!("{pointer}/{}", escape(&token.to_string()))
}

/// A ring: either a catalog name or an inline cone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RingDecl {
    Catalog(String),
    Cone(InlineCone),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InlineCone {
    pub rays: Vec<Vec<i64>>,
    /// Inward facet normals; computed from the rays when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normals: Option<Vec<Vec<i64>>>,
}

/// A named prime or squarefree ideal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum PrimeDecl {
    /// The face prime of the face cut out by the listed facet normals (canonical order).
    Face { ring: String, face_normals: Vec<usize> },
    /// A squarefree monomial ideal in the text grammar, e.g. `"x1*x2 + x2*x3"`.
    Ideal {
        ideal: String,
        #[serde(skip_serializing_if = "Option::is_none")]
        vars: Option<usize>,
    },
    /// The prime generated by the listed variables (1-based) of `k[x1..x_vars]`.
    Variables { variables: Vec<usize>, vars: usize },
    /// A sum prime: one face prime per factor of a declared tensor product.
    Sum { tensor: String, components: Vec<String> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct FaceFields {
    ring: String,
    face_normals: Vec<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealFields {
    ideal: String,
    #[serde(default)]
    vars: Option<usize>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VariablesFields {
    variables: Vec<usize>,
    vars: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SumFields {
    tensor: String,
    components: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ExperimentKind {
    /// `Q^(N)` against its multinomial expansion for `N = 1..=N_max`.
    /// Either `target` (a sum prime) or `ideals` (two squarefree ideals) is given.
    VerifyExpansion {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        ideals: Option<Vec<String>>,
        #[serde(rename = "N_max")]
        n_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i64>,
    },
    HhScan {
        target: String,
        #[serde(rename = "E")]
        e: u32,
        r_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i64>,
    },
    UstpScan {
        target: String,
        #[serde(rename = "D")]
        d: u32,
        r_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i64>,
    },
    AltBound {
        target: String,
        #[serde(rename = "D")]
        d: u32,
        r_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i64>,
    },
    ElsScan {
        target: String,
        r_max: u32,
    },
    MinSlope {
        target: String,
        r_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i64>,
    },
    LemmaEquiv {
        target: String,
        #[serde(rename = "E")]
        e: u32,
        #[serde(rename = "N_max")]
        n_max: u32,
        r_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        degree: Option<i64>,
    },
    /// `hh_scan` with `E` = big height over a seeded squarefree corpus.
    CorpusHh {
        num_vars: usize,
        count: usize,
        r_max: u32,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        seed: Option<u64>,
    },
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::VerifyExpansion { .. } => "verify_expansion",
            ExperimentKind::HhScan { .. } => "hh_scan",
            ExperimentKind::UstpScan { .. } => "ustp_scan",
            ExperimentKind::AltBound { .. } => "alt_bound",
            ExperimentKind::ElsScan { .. } => "els_scan",
            ExperimentKind::MinSlope { .. } => "min_slope",
            ExperimentKind::LemmaEquiv { .. } => "lemma_equiv",
            ExperimentKind::CorpusHh { .. } => "corpus_hh",
        }
    }

    /// The per-experiment degree window, if the experiment has one.
    pub fn degree(&self) -> Option<i64> {
        match self {
            ExperimentKind::VerifyExpansion { degree, .. }
            | ExperimentKind::HhScan { degree, .. }
            | ExperimentKind::UstpScan { degree, .. }
            | ExperimentKind::AltBound { degree, .. }
            | ExperimentKind::MinSlope { degree, .. }
            | ExperimentKind::LemmaEquiv { degree, .. } => *degree,
            ExperimentKind::ElsScan { .. } | ExperimentKind::CorpusHh { .. } => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentSpec {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(flatten)]
    pub kind: ExperimentKind,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitsDecl {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub multiset_cap: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub jobs: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_cap: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor_dim_cap: Option<usize>,
}

impl LimitsDecl {
    fn is_empty(&self) -> bool {
        *self == LimitsDecl::default()
    }

    /// Core limits with unset fields at their defaults.
    pub fn core(&self) -> Limits {
        let d = Limits::default();
        Limits {
            dim_cap: self.dim_cap.unwrap_or(d.dim_cap),
            tensor_dim_cap: self.tensor_dim_cap.unwrap_or(d.tensor_dim_cap),
            point_cap: self.point_cap.unwrap_or(d.point_cap),
            multiset_cap: self.multiset_cap.unwrap_or(d.multiset_cap),
        }
    }

    pub fn max_degree(&self) -> i64 {
        self.max_degree.unwrap_or(DEFAULT_MAX_DEGREE)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ExperimentConfig {
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub rings: BTreeMap<String, RingDecl>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub primes: BTreeMap<String, PrimeDecl>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tensors: BTreeMap<String, Vec<String>>,
    pub experiments: Vec<ExperimentSpec>,
    #[serde(skip_serializing_if = "LimitsDecl::is_empty")]
    pub limits: LimitsDecl,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ExperimentConfig {
    /// Pretty JSON that [`parse_config`] reads back to an equal config.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    /// Identifier for experiment `index`: its `id`, or `e<index>`.
    pub fn experiment_id(&self, index: usize) -> String {
        self.experiments[index].id.clone().unwrap_or_else(|| format!("e{index}"))
    }

    pub fn max_degree_for(&self, kind: &ExperimentKind) -> i64 {
        kind.degree().unwrap_or_else(|| self.limits.max_degree())
    }
}

fn pointer_of(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out = child(&out, index),
            Segment::Map { key } => out = child(&out, key),
            Segment::Enum { .. } | Segment::Unknown => {}
        }
    }
    out
}

fn section<T: DeserializeOwned>(value: &Value, pointer: &str) -> Result<T, ConfigError> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let at = format!("{pointer}{}", pointer_of(e.path()));
        ConfigError::invalid(at, e.into_inner())
    })
}

fn object<'a>(value: &'a Value, pointer: &str) -> Result<&'a Map<String, Value>, ConfigError> {
    value
        .as_object()
        .ok_or_else(|| ConfigError::invalid(pointer, "expected a JSON object"))
}

fn prime_decl(value: &Value, pointer: &str) -> Result<PrimeDecl, ConfigError> {
    let map = object(value, pointer)?;
    if map.contains_key("face_normals") {
        let f: FaceFields = section(value, pointer)?;
        Ok(PrimeDecl::Face { ring: f.ring, face_normals: f.face_normals })
    } else if map.contains_key("ideal") {
        let f: IdealFields = section(value, pointer)?;
        Ok(PrimeDecl::Ideal { ideal: f.ideal, vars: f.vars })
    } else if map.contains_key("variables") {
        let f: VariablesFields = section(value, pointer)?;
        Ok(PrimeDecl::Variables { variables: f.variables, vars: f.vars })
    } else if map.contains_key("components") {
        let f: SumFields = section(value, pointer)?;
        Ok(PrimeDecl::Sum { tensor: f.tensor, components: f.components })
    } else {
        Err(ConfigError::invalid(
            pointer,
            "a prime needs one of `face_normals`, `ideal`, `variables` or `components`",
        ))
    }
}

fn experiment(value: &Value, pointer: &str) -> Result<ExperimentSpec, ConfigError> {
    let map = object(value, pointer)?;
    let mut rest = map.clone();
    let id = match rest.remove("id") {
        None => None,
        Some(Value::String(s)) => Some(s),
        Some(_) => return Err(ConfigError::invalid(child(pointer, "id"), "expected a string")),
    };
    match map.get("kind") {
        None => return Err(ConfigError::invalid(pointer, "missing field `kind`")),
        Some(Value::String(_)) => {}
        Some(_) => return Err(ConfigError::invalid(child(pointer, "kind"), "expected a string")),
    }
    // Internally tagged enums lose the field path, so name the offending key from the message.
    let kind: ExperimentKind = serde_json::from_value(Value::Object(rest)).map_err(|e| {
        let msg = e.to_string();
        let field = msg
            .split('`')
            .nth(1)
            .filter(|f| map.contains_key(*f) && !msg.starts_with("unknown variant"));
        let at = match (field, msg.starts_with("unknown variant")) {
            (_, true) => child(pointer, "kind"),
            (Some(f), false) => child(pointer, f),
            (None, false) => pointer.to_string(),
        };
        ConfigError::invalid(at, msg)
    })?;
    Ok(ExperimentSpec { id, kind })
}

/// Parses and validates a configuration document.
pub fn parse_config(text: &str) -> Result<ExperimentConfig, ConfigError> {
    let root: Value = serde_json::from_str(text).map_err(|e| {
        ConfigError::new(
            ConfigErrorKind::SyntaxError,
            "",
            format!("{e}"),
        )
    })?;
    let top = object(&root, "")?;
    let mut config = ExperimentConfig::default();
    for (key, value) in top {
        let at = child("", key);
        match key.as_str() {
            "rings" => {
                for (name, v) in object(value, &at)? {
                    let decl: RingDecl = section(v, &child(&at, name))?;
                    config.rings.insert(name.clone(), decl);
                }
            }
            "primes" => {
                for (name, v) in object(value, &at)? {
                    config.primes.insert(name.clone(), prime_decl(v, &child(&at, name))?);
                }
            }
            "tensors" => config.tensors = section(value, &at)?,
            "experiments" => {
                let list = value
                    .as_array()
                    .ok_or_else(|| ConfigError::invalid(&at, "expected a JSON array"))?;
                for (i, v) in list.iter().enumerate() {
                    config.experiments.push(experiment(v, &child(&at, i))?);
                }
            }
            "limits" => config.limits = section(value, &at)?,
            "seed" => config.seed = section(value, &at)?,
            other => {
                return Err(ConfigError::invalid(
                    at,
                    format!(
                        "unknown field `{other}`, expected one of `rings`, `primes`, `tensors`, `experiments`, `limits`, `seed`"
                    ),
                ))
            }
        }
    }
    validate(&config)?;
    Ok(config)
}

/// Builds the cone of a declared ring.
pub fn build_cone(decl: &RingDecl, dim_cap: usize) -> Result<Cone, CoreError> {
    let cone = match decl {
        RingDecl::Catalog(name) => catalog::cone(name)?,
        RingDecl::Cone(InlineCone { rays, normals: None }) => Cone::from_rays(rays.clone(), dim_cap)?,
        RingDecl::Cone(InlineCone { rays, normals: Some(n) }) => Cone::new(rays.clone(), n.clone())?,
    };
    if cone.dim() > dim_cap {
        return Err(CoreError::DimensionCapExceeded { dim: cone.dim(), cap: dim_cap });
    }
    Ok(cone)
}

/// Parses a squarefree, nonzero, proper ideal declaration.
pub fn build_ideal(decl: &PrimeDecl) -> Option<Result<PolyMonomialIdeal, String>> {
    let ideal = match decl {
        PrimeDecl::Ideal { ideal, vars } => PolyMonomialIdeal::parse(ideal, *vars).map_err(|e| e.to_string()),
        PrimeDecl::Variables { variables, vars } => {
            if let Some(&bad) = variables.iter().find(|&&v| v == 0 || v > *vars) {
                return Some(Err(format!("variable {bad} outside 1..={vars}")));
            }
            symlab::VariablePrime::new(variables.iter().map(|v| v - 1).collect())
                .map(|p| p.ideal(*vars))
                .map_err(|e| e.to_string())
        }
        PrimeDecl::Face { .. } | PrimeDecl::Sum { .. } => return None,
    };
    Some(ideal.and_then(|i| {
        if i.is_zero() || i.is_unit() {
            Err("ideal must be nonzero and proper".to_string())
        } else if !i.is_squarefree() {
            Err("ideal must be squarefree".to_string())
        } else {
            Ok(i)
        }
    }))
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum PrimeClass {
    Face,
    Sum,
    Squarefree,
}

fn validate(config: &ExperimentConfig) -> Result<(), ConfigError> {
    let limits = config.limits.core();
    if let Some(j) = config.limits.jobs {
        if j == 0 {
            return Err(ConfigError::invalid("/limits/jobs", "jobs must be at least 1"));
        }
    }
    if config.limits.max_degree.is_some_and(|d| d < 0) {
        return Err(ConfigError::invalid("/limits/max_degree", "max_degree must be nonnegative"));
    }
    let mut cones = BTreeMap::new();
    for (name, decl) in &config.rings {
        let at = child("/rings", name);
        match build_cone(decl, limits.dim_cap) {
            Ok(c) => {
                cones.insert(name.as_str(), c);
            }
            Err(e @ CoreError::UnknownCatalog(_)) => return Err(ConfigError::unknown(at, e)),
            Err(e) => return Err(ConfigError::invalid(at, e)),
        }
    }
    for (name, factors) in &config.tensors {
        let at = child("/tensors", name);
        if factors.len() < 2 {
            return Err(ConfigError::invalid(at, "a tensor product needs at least two factors"));
        }
        let mut total = 0;
        for (i, f) in factors.iter().enumerate() {
            let cone = cones
                .get(f.as_str())
                .ok_or_else(|| ConfigError::unknown(child(&at, i), format!("no ring named `{f}`")))?;
            total += cone.dim();
        }
        if total > limits.tensor_dim_cap {
            return Err(ConfigError::invalid(
                at,
                CoreError::DimensionCapExceeded { dim: total, cap: limits.tensor_dim_cap },
            ));
        }
    }
    let mut classes = BTreeMap::new();
    // Sum primes refer to face primes, so classify those first.
    for (name, decl) in &config.primes {
        let at = child("/primes", name);
        let class = match decl {
            PrimeDecl::Face { ring, face_normals } => {
                let cone = cones
                    .get(ring.as_str())
                    .ok_or_else(|| ConfigError::unknown(child(&at, "ring"), format!("no ring named `{ring}`")))?;
                if face_normals.is_empty() {
                    return Err(ConfigError::invalid(
                        child(&at, "face_normals"),
                        "the whole cone gives the unit ideal; list at least one facet normal",
                    ));
                }
                Face::from_normals(cone, face_normals)
                    .map_err(|e| ConfigError::invalid(child(&at, "face_normals"), e))?;
                PrimeClass::Face
            }
            PrimeDecl::Sum { .. } => PrimeClass::Sum,
            other => {
                build_ideal(other)
                    .expect("ideal declaration")
                    .map_err(|e| ConfigError::invalid(at, e))?;
                PrimeClass::Squarefree
            }
        };
        classes.insert(name.as_str(), class);
    }
    for (name, decl) in &config.primes {
        let PrimeDecl::Sum { tensor, components } = decl else { continue };
        let at = child("/primes", name);
        let factors = config
            .tensors
            .get(tensor)
            .ok_or_else(|| ConfigError::unknown(child(&at, "tensor"), format!("no tensor named `{tensor}`")))?;
        if components.len() != factors.len() {
            return Err(ConfigError::invalid(
                child(&at, "components"),
                format!("expected {} components, one per factor, got {}", factors.len(), components.len()),
            ));
        }
        for (i, (c, factor)) in components.iter().zip(factors).enumerate() {
            let cat = child(&child(&at, "components"), i);
            match config.primes.get(c) {
                None => return Err(ConfigError::unknown(cat, format!("no prime named `{c}`"))),
                Some(PrimeDecl::Face { ring, .. }) if ring == factor => {}
                Some(PrimeDecl::Face { ring, .. }) => {
                    return Err(ConfigError::invalid(
                        cat,
                        format!("`{c}` lives on ring `{ring}`, but factor {i} is `{factor}`"),
                    ))
                }
                Some(_) => return Err(ConfigError::invalid(cat, format!("`{c}` is not a face prime"))),
            }
        }
    }

    let target = |at: &str, name: &str, allowed: &[PrimeClass], what: &str| -> Result<(), ConfigError> {
        let class = classes
            .get(name)
            .ok_or_else(|| ConfigError::unknown(at, format!("no prime named `{name}`")))?;
        if !allowed.contains(class) {
            return Err(ConfigError::invalid(at, format!("`{name}` is not {what}")));
        }
        Ok(())
    };
    let positive = |at: String, v: u32, what: &str| -> Result<(), ConfigError> {
        if v == 0 {
            return Err(ConfigError::invalid(at, format!("{what} must be at least 1")));
        }
        Ok(())
    };
    const ANY: &[PrimeClass] = &[PrimeClass::Face, PrimeClass::Sum, PrimeClass::Squarefree];
    for (i, spec) in config.experiments.iter().enumerate() {
        let at = child("/experiments", i);
        let f = |k: &str| child(&at, k);
        if let Some(d) = spec.kind.degree() {
            if d < 0 {
                return Err(ConfigError::invalid(f("degree"), "degree must be nonnegative"));
            }
        }
        match &spec.kind {
            ExperimentKind::VerifyExpansion { target: t, ideals, n_max, .. } => {
                positive(f("N_max"), *n_max, "N_max")?;
                match (t, ideals) {
                    (Some(t), None) => target(&f("target"), t, &[PrimeClass::Sum], "a sum prime")?,
                    (None, Some(pair)) => {
                        if pair.len() != 2 {
                            return Err(ConfigError::invalid(f("ideals"), "expected exactly two ideals"));
                        }
                        for (k, name) in pair.iter().enumerate() {
                            target(&child(&f("ideals"), k), name, &[PrimeClass::Squarefree], "a squarefree ideal")?;
                        }
                    }
                    _ => {
                        return Err(ConfigError::invalid(
                            at,
                            "verify_expansion needs exactly one of `target` and `ideals`",
                        ))
                    }
                }
            }
            ExperimentKind::HhScan { target: t, e, r_max, .. } => {
                target(&f("target"), t, ANY, "a prime")?;
                positive(f("E"), *e, "E")?;
                positive(f("r_max"), *r_max, "r_max")?;
            }
            ExperimentKind::UstpScan { target: t, d, r_max, .. } => {
                target(&f("target"), t, ANY, "a prime")?;
                positive(f("D"), *d, "D")?;
                positive(f("r_max"), *r_max, "r_max")?;
            }
            ExperimentKind::AltBound { target: t, d, r_max, .. } => {
                target(&f("target"), t, &[PrimeClass::Sum], "a sum prime")?;
                positive(f("D"), *d, "D")?;
                positive(f("r_max"), *r_max, "r_max")?;
            }
            ExperimentKind::ElsScan { target: t, r_max } => {
                target(&f("target"), t, &[PrimeClass::Squarefree], "a squarefree ideal")?;
                positive(f("r_max"), *r_max, "r_max")?;
            }
            ExperimentKind::MinSlope { target: t, r_max, .. } => {
                target(&f("target"), t, ANY, "a prime")?;
                if *r_max < 2 {
                    return Err(ConfigError::invalid(f("r_max"), "r_max must be at least 2"));
                }
            }
            ExperimentKind::LemmaEquiv { target: t, e, r_max, .. } => {
                target(&f("target"), t, ANY, "a prime")?;
                positive(f("E"), *e, "E")?;
                positive(f("r_max"), *r_max, "r_max")?;
            }
            ExperimentKind::CorpusHh { num_vars, count, r_max, .. } => {
                if !(1..=6).contains(num_vars) {
                    return Err(ConfigError::invalid(f("num_vars"), "num_vars must be in 1..=6"));
                }
                if *count == 0 {
                    return Err(ConfigError::invalid(f("count"), "count must be at least 1"));
                }
                positive(f("r_max"), *r_max, "r_max")?;
            }
        }
    }
    Ok(())
}
